//! Tolerance registry for FLOAT-mode comparisons.
//!
//! Every floating comparison in the library goes through one of these
//! knobs; none uses raw equality. Defaults can be overridden per call or
//! via environment variables `MINSURF_TOL_<NAME>` (ROOT, RES, PER, MATCH,
//! CLUSTER, QUAD).

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance for accepting an isolated root (|p(r)| residual).
    pub eps_root: f64,
    /// Residual bound: |p(r)| <= eps_res * ||p|| for reported FLOAT roots.
    pub eps_res: f64,
    /// Real-period acceptance: |Re period| <= eps_per * scale.
    pub eps_per: f64,
    /// Point identification (is this preimage a puncture?).
    pub eps_match: f64,
    /// Multiplicity clustering radius for FLOAT root finding. An m-fold
    /// root of a perturbed polynomial splits by O(eps^(1/m)), so this is
    /// deliberately much looser than eps_root.
    pub eps_cluster: f64,
    /// Per-segment line-integral tolerance.
    pub eps_quad: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eps_root: 1e-10,
            eps_res: 1e-8,
            eps_per: 1e-9,
            eps_match: 1e-8,
            eps_cluster: 1e-5,
            eps_quad: 1e-9,
        }
    }
}

impl Tolerances {
    /// Defaults merged with any `MINSURF_TOL_*` environment overrides.
    pub fn from_env() -> Self {
        let mut t = Tolerances::default();
        let read = |name: &str| -> Option<f64> {
            std::env::var(name).ok().and_then(|v| v.parse().ok())
        };
        if let Some(v) = read("MINSURF_TOL_ROOT") {
            t.eps_root = v;
        }
        if let Some(v) = read("MINSURF_TOL_RES") {
            t.eps_res = v;
        }
        if let Some(v) = read("MINSURF_TOL_PER") {
            t.eps_per = v;
        }
        if let Some(v) = read("MINSURF_TOL_MATCH") {
            t.eps_match = v;
        }
        if let Some(v) = read("MINSURF_TOL_CLUSTER") {
            t.eps_cluster = v;
        }
        if let Some(v) = read("MINSURF_TOL_QUAD") {
            t.eps_quad = v;
        }
        t
    }

    /// Apply a `KEY=value` override (CLI `--tol`). Keys: root, res, per,
    /// match, cluster, quad.
    pub fn set(&mut self, key: &str, value: f64) -> bool {
        match key {
            "root" => self.eps_root = value,
            "res" => self.eps_res = value,
            "per" => self.eps_per = value,
            "match" => self.eps_match = value,
            "cluster" => self.eps_cluster = value,
            "quad" => self.eps_quad = value,
            _ => return false,
        }
        true
    }
}
