//! Numerical realization: integrate the Weierstrass forms into
//! immersed meshes, evaluate the Gauss curvature field, compute total
//! curvature by two-chart quadrature, and export OBJ/PLY artifacts.

use num_complex::Complex;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::algebra::divisor::SpherePoint;
use crate::algebra::poly::Polynomial;
use crate::parallel::par_map;
use crate::periods::period_condition;
use crate::quad::{polar_area_integral, segment_integral};
use crate::tol::Tolerances;
use crate::weierstrass::{metric_factor_direct, WData, WData3};
use crate::error::{Error, Result};

type C64 = Complex<f64>;

/// Relative puncture exclusion radius for grids and integration paths.
const EXCLUSION: f64 = 1e-2;

// ---------------------------------------------------------------------
// Mesh
// ---------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct MeshVertex {
    /// source parameter
    pub z: C64,
    /// position in ℝⁿ
    pub x: Vec<f64>,
    /// conformal metric factor λ² = ½Σ|fᵢ|²
    pub lambda2: f64,
    /// Gauss curvature
    pub k: f64,
}

#[derive(Clone, Debug)]
pub struct Mesh {
    pub ambient_dim: usize,
    pub vertices: Vec<MeshVertex>,
    /// triangles, counterclockwise in the parameter annulus
    pub faces: Vec<[usize; 3]>,
}

impl Mesh {
    pub fn empty(ambient_dim: usize) -> Mesh {
        Mesh { ambient_dim, vertices: vec![], faces: vec![] }
    }
}

/// Log-polar annular grid specification. Unset bounds are derived from
/// the puncture geometry: the annulus sits strictly inside the nearest
/// off-center puncture and around any puncture at the center.
#[derive(Clone, Debug)]
pub struct GridSpec {
    pub radial: usize,
    pub angular: usize,
    pub center: Option<C64>,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { radial: 32, angular: 32, center: None, r_min: None, r_max: None }
    }
}

fn finite_punctures(d: &WData) -> Vec<C64> {
    d.domain()
        .punctures()
        .iter()
        .filter_map(|p| match p {
            SpherePoint::Finite(z) => Some(z.to_c64()),
            SpherePoint::Infinity => None,
        })
        .collect()
}

fn annulus_bounds(d: &WData, spec: &GridSpec) -> (C64, f64, f64) {
    let punctures = finite_punctures(d);
    let center = spec.center.unwrap_or_else(|| {
        if punctures.is_empty() {
            C64::new(0.0, 0.0)
        } else {
            punctures.iter().sum::<C64>() / punctures.len() as f64
        }
    });
    let nearest = punctures
        .iter()
        .map(|p| (p - center).norm())
        .filter(|&r| r > EXCLUSION)
        .fold(f64::INFINITY, f64::min);
    let r_max = spec.r_max.unwrap_or(if nearest.is_finite() { 0.85 * nearest } else { 2.0 });
    let r_min = spec.r_min.unwrap_or(r_max / 16.0);
    (center, r_min, r_max)
}

fn dist_point_segment(p: C64, a: C64, b: C64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + d * t)).norm()
}

fn check_segment_clear(punctures: &[C64], a: C64, b: C64) -> Result<()> {
    for p in punctures {
        if dist_point_segment(*p, a, b) < EXCLUSION / 2.0 {
            return Err(Error::PathThroughPole(format!("{}", p)));
        }
    }
    Ok(())
}

/// First grid vertex of the annulus that `immerse` would build: a safe
/// default integration base point.
pub fn default_base_point(d: &WData, spec: &GridSpec) -> C64 {
    let (center, r_min, _) = annulus_bounds(d, spec);
    center + C64::new(r_min, 0.0)
}

/// Re ∫_{z₀}^{z₁} (φ₁,…,φₙ) along the straight segment, adaptive
/// complex quadrature per coordinate.
pub fn abel_jacobi(d: &WData, z0: C64, z1: C64, tol: &Tolerances) -> Result<Vec<f64>> {
    check_segment_clear(&finite_punctures(d), z0, z1)?;
    let forms = d.forms();
    let mut out = vec![];
    for f in &forms {
        let coeff = f.coeff.clone();
        let v = segment_integral(&|z| coeff.eval_c64(z), z0, z1, tol.eps_quad)?;
        out.push(v.re);
    }
    Ok(out)
}

/// Integrate x(z) = Re ∫_{z₀}^z φ over a log-polar annular grid with
/// x(z₀) = 0. If the period condition fails, the annulus is left cut
/// along its angular seam (a radial slit makes it simply connected);
/// a puncture strictly inside the annulus band is then an error
/// because no single slit can untangle the cycle around it.
pub fn immerse(d: &WData, z0: C64, spec: &GridSpec, tol: &Tolerances) -> Result<Mesh> {
    if spec.radial < 2 || spec.angular < 3 {
        return Err(Error::InvalidParameter("grid must be at least 2x3".into()));
    }
    let punctures = finite_punctures(d);
    let (center, r_min, r_max) = annulus_bounds(d, spec);
    if !(r_min > 0.0 && r_max > r_min) {
        return Err(Error::InvalidParameter("annulus bounds must satisfy 0 < r_min < r_max".into()));
    }
    let single_valued = period_condition(d, tol)?.pass;
    if !single_valued {
        for p in &punctures {
            let r = (p - center).norm();
            if r > r_min + EXCLUSION && r < r_max - EXCLUSION {
                return Err(Error::Multivalued(format!("{}", p)));
            }
        }
    }

    // vertex parameters: radial index major, angular minor
    let (nr, na) = (spec.radial, spec.angular);
    let ratio = r_max / r_min;
    let mut zs = Vec::with_capacity(nr * na);
    for i in 0..nr {
        let r = r_min * ratio.powf(i as f64 / (nr - 1) as f64);
        for j in 0..na {
            let th = 2.0 * std::f64::consts::PI * j as f64 / na as f64;
            zs.push(center + C64::from_polar(r, th));
        }
    }
    for z in &zs {
        for p in &punctures {
            if (z - p).norm() < EXCLUSION {
                return Err(Error::PathThroughPole(format!("{}", p)));
            }
        }
    }

    let forms = d.forms();
    let dim = forms.len();
    let coeffs: Vec<_> = forms.iter().map(|f| f.coeff.clone()).collect();
    let integrate = |a: C64, b: C64| -> Result<Vec<C64>> {
        check_segment_clear(&punctures, a, b)?;
        coeffs
            .iter()
            .map(|c| segment_integral(&|z| c.eval_c64(z), a, b, tol.eps_quad))
            .collect()
    };

    // complex potentials along a spanning tree: around ring 0, then up
    // each radial column (columns evaluate concurrently, deterministic
    // assembly order afterwards)
    let mut pot: Vec<Vec<C64>> = vec![vec![C64::new(0.0, 0.0); dim]; nr * na];
    for j in 1..na {
        let inc = integrate(zs[j - 1], zs[j])?;
        for c in 0..dim {
            pot[j][c] = pot[j - 1][c] + inc[c];
        }
    }
    let columns: Vec<Result<Vec<Vec<C64>>>> = par_map(na, |j| {
        let mut incs = vec![];
        for i in 1..nr {
            incs.push(integrate(zs[(i - 1) * na + j], zs[i * na + j])?);
        }
        Ok(incs)
    });
    for (j, col) in columns.into_iter().enumerate() {
        let col = col?;
        for (i, inc) in col.into_iter().enumerate() {
            for c in 0..dim {
                pot[(i + 1) * na + j][c] = pot[i * na + j][c] + inc[c];
            }
        }
    }
    // anchor: x(z₀) = 0
    let base_inc = integrate(zs[0], z0)?;

    let scalars: Vec<(f64, f64)> = par_map(nr * na, |v| {
        let z = zs[v];
        let l2 = metric_factor_direct(d, z).unwrap_or(f64::NAN);
        let k = curvature_from_coeffs(&coeffs, z).unwrap_or(f64::NAN);
        (l2, k)
    });

    let vertices: Vec<MeshVertex> = (0..nr * na)
        .map(|v| MeshVertex {
            z: zs[v],
            x: (0..dim).map(|c| (pot[v][c] - base_inc[c]).re).collect(),
            lambda2: scalars[v].0,
            k: scalars[v].1,
        })
        .collect();

    let mut faces = vec![];
    let wrap = if single_valued { na } else { na - 1 };
    for i in 0..nr - 1 {
        for j in 0..wrap {
            let j1 = (j + 1) % na;
            let a = i * na + j;
            let b = i * na + j1;
            let c = (i + 1) * na + j;
            let e = (i + 1) * na + j1;
            faces.push([a, b, e]);
            faces.push([a, e, c]);
        }
    }
    Ok(Mesh { ambient_dim: dim, vertices, faces })
}

// ---------------------------------------------------------------------
// Curvature
// ---------------------------------------------------------------------

fn curvature_from_coeffs(coeffs: &[crate::algebra::ratfunc::RationalFunction], z: C64) -> Option<f64> {
    let vals: Vec<C64> = coeffs.iter().map(|c| c.eval_c64(z)).collect();
    let ders: Vec<C64> = coeffs.iter().map(|c| c.derivative().eval_c64(z)).collect();
    if vals.iter().chain(&ders).any(|v| !v.is_finite()) {
        return None;
    }
    let norm2: f64 = vals.iter().map(|v| v.norm_sqr()).sum();
    if norm2 == 0.0 {
        return None;
    }
    let mut wedge = 0.0;
    for i in 0..vals.len() {
        for j in (i + 1)..vals.len() {
            wedge += (vals[i] * ders[j] - vals[j] * ders[i]).norm_sqr();
        }
    }
    Some(-wedge / (norm2 * norm2 * norm2))
}

/// Gauss curvature at the given parameter points, from the coordinate
/// functions: K = −|φ∧φ′|²/|φ|⁶. For data in ℝ³ this agrees with the
/// closed form −4|g′|²/(|h|²(1+|g|²)⁴); the normalization is pinned to
/// that closed form (the |φ|-expression with leading coefficient 4
/// describes the same metric scaled by 2).
pub fn curvature_field(d: &WData, points: &[C64]) -> Result<Vec<f64>> {
    let coeffs: Vec<_> = d.forms().iter().map(|f| f.coeff.clone()).collect();
    points
        .iter()
        .map(|&z| {
            curvature_from_coeffs(&coeffs, z)
                .ok_or_else(|| Error::EndPoint(format!("{}", z)))
        })
        .collect()
}

/// Closed-form ℝ³ curvature −4|g′|²/(|h|²(1+|g|²)⁴).
pub fn curvature_r3_closed(d3: &WData3, z: C64) -> Option<f64> {
    let h = d3.h_form.coeff.eval_c64(z);
    let g = d3.g.eval_c64(z);
    let gp = d3.g.derivative().eval_c64(z);
    if !h.is_finite() || !g.is_finite() || !gp.is_finite() || h.norm_sqr() == 0.0 {
        return None;
    }
    let denom = h.norm_sqr() * (1.0 + g.norm_sqr()).powi(4);
    Some(-4.0 * gp.norm_sqr() / denom)
}

// ---------------------------------------------------------------------
// Total curvature
// ---------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct QuadratureResult {
    pub value: f64,
    /// difference between the fine and coarse adaptive passes
    pub est_error: f64,
    /// integrand evaluations of the fine pass
    pub evaluations: usize,
}

/// Spherical area density of g at z: (2|g′|/(1+|g|²))², written with
/// numerator/denominator polynomials so poles of g are smooth points:
/// 4|n′d−nd′|²/(|n|²+|d|²)².
fn spherical_density(num: &Polynomial, den: &Polynomial) -> impl Fn(C64) -> f64 {
    let w = &(&num.derivative() * den) - &(num * &den.derivative());
    let (n, d, w) = (num.to_float(), den.to_float(), w.to_float());
    move |z: C64| {
        let nv = n.eval_c64(z).norm_sqr();
        let dv = d.eval_c64(z).norm_sqr();
        let wv = w.eval_c64(z).norm_sqr();
        let s = nv + dv;
        4.0 * wv / (s * s)
    }
}

/// Total curvature τ = −∫(2|g′|/(1+|g|²))² du dv over P¹, integrated in
/// two polar charts (|z| ≤ 1 and ζ = 1/z); converges to −4π·deg g.
pub fn total_curvature(d: &WData, tol: &Tolerances) -> Result<QuadratureResult> {
    let d3 = match d {
        WData::R3(d3) => d3,
        _ => {
            return Err(Error::InvalidParameter(
                "total curvature quadrature is defined for data in R3".into(),
            ))
        }
    };
    if d.is_flat() {
        return Ok(QuadratureResult { value: 0.0, est_error: 0.0, evaluations: 0 });
    }
    let num = d3.g.num().clone();
    let den = d3.g.den().clone();
    let deg = num.deg_or_zero().max(den.deg_or_zero());
    let dens0 = spherical_density(&num, &den);
    let dens1 = spherical_density(&num.reverse_to_degree(deg), &den.reverse_to_degree(deg));

    let run = |eps: f64| -> Result<(f64, usize)> {
        let count = AtomicUsize::new(0);
        let f0 = |r: f64, th: f64| {
            count.fetch_add(1, Ordering::Relaxed);
            dens0(C64::from_polar(r, th))
        };
        let i0 = polar_area_integral(&f0, 0.0, 1.0, eps)?;
        let f1 = |r: f64, th: f64| {
            count.fetch_add(1, Ordering::Relaxed);
            dens1(C64::from_polar(r, th))
        };
        let i1 = polar_area_integral(&f1, 0.0, 1.0, eps)?;
        Ok((-(i0 + i1), count.into_inner()))
    };
    let (coarse, _) = run(tol.eps_quad.sqrt().max(1e-5))?;
    let (fine, evaluations) = run(tol.eps_quad.max(1e-10) * 10.0)?;
    let _ = deg;
    Ok(QuadratureResult { value: fine, est_error: (fine - coarse).abs(), evaluations })
}

// ---------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Ply,
}

impl std::str::FromStr for MeshFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<MeshFormat> {
        match s.to_ascii_lowercase().as_str() {
            "obj" => Ok(MeshFormat::Obj),
            "ply" => Ok(MeshFormat::Ply),
            other => Err(Error::InvalidParameter(format!("unsupported mesh format {}", other))),
        }
    }
}

fn fnum(x: f64) -> String {
    // fixed formatting keeps exports byte-stable across runs
    if x.is_finite() {
        format!("{:.9}", x)
    } else {
        "0.000000000".into()
    }
}

fn coord(v: &MeshVertex, i: usize) -> f64 {
    v.x.get(i).copied().unwrap_or(0.0)
}

/// OBJ (positions, first three coordinates) or ASCII PLY with K, λ²,
/// and any fourth coordinate as per-vertex properties. Byte-stable for
/// identical inputs.
pub fn export_mesh(m: &Mesh, fmt: MeshFormat) -> Vec<u8> {
    let mut out = String::new();
    match fmt {
        MeshFormat::Obj => {
            for v in &m.vertices {
                out.push_str(&format!(
                    "v {} {} {}\n",
                    fnum(coord(v, 0)),
                    fnum(coord(v, 1)),
                    fnum(coord(v, 2))
                ));
            }
            for f in &m.faces {
                out.push_str(&format!("f {} {} {}\n", f[0] + 1, f[1] + 1, f[2] + 1));
            }
        }
        MeshFormat::Ply => {
            let extra = m.ambient_dim > 3;
            out.push_str("ply\nformat ascii 1.0\n");
            out.push_str(&format!("element vertex {}\n", m.vertices.len()));
            out.push_str("property double x\nproperty double y\nproperty double z\n");
            if extra {
                out.push_str("property double x4\n");
            }
            out.push_str("property double k\nproperty double lambda2\n");
            out.push_str(&format!("element face {}\n", m.faces.len()));
            out.push_str("property list uchar int vertex_indices\nend_header\n");
            for v in &m.vertices {
                out.push_str(&fnum(coord(v, 0)));
                out.push(' ');
                out.push_str(&fnum(coord(v, 1)));
                out.push(' ');
                out.push_str(&fnum(coord(v, 2)));
                if extra {
                    out.push(' ');
                    out.push_str(&fnum(coord(v, 3)));
                }
                out.push(' ');
                out.push_str(&fnum(v.k));
                out.push(' ');
                out.push_str(&fnum(v.lambda2));
                out.push('\n');
            }
            for f in &m.faces {
                out.push_str(&format!("3 {} {} {}\n", f[0], f[1], f[2]));
            }
        }
    }
    out.into_bytes()
}

/// Sidecar with all coordinates and per-vertex scalars:
/// {"coords":[…],"K":[…],"lambda2":[…]}.
pub fn sidecar_json(m: &Mesh) -> String {
    let coords: Vec<String> = m
        .vertices
        .iter()
        .map(|v| {
            let cs: Vec<String> = v.x.iter().map(|&c| fnum(c)).collect();
            format!("[{}]", cs.join(","))
        })
        .collect();
    let ks: Vec<String> = m.vertices.iter().map(|v| fnum(v.k)).collect();
    let l2: Vec<String> = m.vertices.iter().map(|v| fnum(v.lambda2)).collect();
    format!(
        "{{\"coords\":[{}],\"K\":[{}],\"lambda2\":[{}]}}",
        coords.join(","),
        ks.join(","),
        l2.join(",")
    )
}

/// Parse vertex positions back out of an ASCII PLY export.
pub fn parse_ply_positions(bytes: &[u8]) -> Result<Vec<Vec<f64>>> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| Error::Malformed("ply is not utf-8".into()))?;
    let mut lines = text.lines();
    let mut nvert = 0usize;
    let mut ncoord = 0usize;
    let mut in_vertex = false;
    for line in lines.by_ref() {
        if let Some(rest) = line.strip_prefix("element vertex ") {
            nvert = rest
                .trim()
                .parse()
                .map_err(|_| Error::Malformed("bad vertex count".into()))?;
            in_vertex = true;
        } else if line.starts_with("element ") {
            in_vertex = false;
        } else if in_vertex && line.starts_with("property ") {
            ncoord += 1;
        } else if line == "end_header" {
            break;
        }
    }
    let mut out = vec![];
    for _ in 0..nvert {
        let line = lines.next().ok_or_else(|| Error::Malformed("truncated ply".into()))?;
        let vals: Vec<f64> = line
            .split_whitespace()
            .take(ncoord.min(3))
            .map(|t| t.parse().map_err(|_| Error::Malformed("bad float".into())))
            .collect::<Result<_>>()?;
        out.push(vals);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Polynomial;
    use crate::algebra::ratfunc::{MeromorphicForm, RationalFunction};
    use crate::weierstrass::{associate_rotation, form_from_polys, PuncturedSphere};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn catenoid() -> WData3 {
        WData3 {
            domain: PuncturedSphere::new(
                vec![SpherePoint::from_int(0), SpherePoint::infinity()],
                0,
            )
            .unwrap(),
            h_form: form_from_polys(Polynomial::one(), Polynomial::from_i64(&[0, 0, 1])).unwrap(),
            g: RationalFunction::var(),
        }
    }

    fn enneper() -> WData3 {
        WData3 {
            domain: PuncturedSphere::new(vec![SpherePoint::infinity()], 0).unwrap(),
            h_form: MeromorphicForm::dz(),
            g: RationalFunction::var(),
        }
    }

    fn jorge_meeks3() -> WData3 {
        // h = (z³−1)⁻² dz, g = z²
        WData3 {
            domain: PuncturedSphere::new(
                vec![
                    SpherePoint::from_int(1),
                    SpherePoint::Finite(crate::algebra::scalar::ComplexScalar::from_c64(C64::new(
                        -0.5,
                        3f64.sqrt() / 2.0,
                    ))),
                    SpherePoint::Finite(crate::algebra::scalar::ComplexScalar::from_c64(C64::new(
                        -0.5,
                        -(3f64.sqrt()) / 2.0,
                    ))),
                ],
                0,
            )
            .unwrap(),
            h_form: form_from_polys(
                Polynomial::one(),
                &Polynomial::from_i64(&[-1, 0, 0, 1]) * &Polynomial::from_i64(&[-1, 0, 0, 1]),
            )
            .unwrap(),
            g: RationalFunction::new(Polynomial::from_i64(&[0, 0, 1]), Polynomial::one()).unwrap(),
        }
    }

    #[test]
    fn enneper_coordinate_value() {
        // x¹(1) = Re[½(z − z³/3)] at z=1 → 1/3
        let x = abel_jacobi(
            &WData::R3(enneper()),
            C64::new(0.0, 0.0),
            C64::new(1.0, 0.0),
            &tol(),
        )
        .unwrap();
        assert!((x[0] - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn catenoid_third_coordinate_is_log_radius() {
        let x = abel_jacobi(
            &WData::R3(catenoid()),
            C64::new(1.0, 0.0),
            C64::new(2.0, 0.0),
            &tol(),
        )
        .unwrap();
        assert!((x[2] - 2f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn base_point_maps_to_origin() {
        let x = abel_jacobi(
            &WData::R3(enneper()),
            C64::new(0.5, 0.5),
            C64::new(0.5, 0.5),
            &tol(),
        )
        .unwrap();
        assert!(x.iter().all(|&c| c.abs() < 1e-12));
    }

    #[test]
    fn path_independence_two_routes() {
        let d = WData::R3(catenoid());
        let a = C64::new(1.0, 0.0);
        let b = C64::new(2.0, 0.0);
        let via = C64::new(1.5, 0.8);
        let direct = abel_jacobi(&d, a, b, &tol()).unwrap();
        let leg1 = abel_jacobi(&d, a, via, &tol()).unwrap();
        let leg2 = abel_jacobi(&d, via, b, &tol()).unwrap();
        for c in 0..3 {
            assert!((direct[c] - (leg1[c] + leg2[c])).abs() < 1e-8);
        }
    }

    #[test]
    fn catenoid_mesh_counts_and_anchoring() {
        let spec = GridSpec::default();
        let m = immerse(&WData::R3(catenoid()), C64::new(1.0, 0.0), &spec, &tol()).unwrap();
        assert_eq!(m.vertices.len(), 1024);
        // periods pass → angular wrap closes the annulus
        assert_eq!(m.faces.len(), 2 * 31 * 32);
        // x³(z) = log|z| with x(1) = 0
        for v in &m.vertices {
            assert!((v.x[2] - v.z.norm().ln()).abs() < 1e-7);
            assert!(v.k <= 1e-12);
            assert!(v.lambda2 > 0.0);
        }
    }

    #[test]
    fn rotated_catenoid_gets_slit_mesh() {
        // θ = π/2 breaks the period condition; the puncture at 0 sits in
        // the annulus hole so a seam slit suffices
        let rot = WData::R3(associate_rotation(&catenoid(), std::f64::consts::PI / 2.0));
        let m = immerse(&rot, C64::new(1.0, 0.0), &GridSpec::default(), &tol()).unwrap();
        assert_eq!(m.vertices.len(), 1024);
        assert_eq!(m.faces.len(), 2 * 31 * 31);
    }

    #[test]
    fn multivalued_when_puncture_inside_band() {
        // Jorge–Meeks punctures on |z| = 1 with failing periods: a band
        // straddling them cannot be slit by the seam alone
        let d = WData::R3(jorge_meeks3());
        let rot = match &d {
            WData::R3(d3) => WData::R3(associate_rotation(d3, std::f64::consts::PI / 2.0)),
            _ => unreachable!(),
        };
        let spec = GridSpec { r_min: Some(0.5), r_max: Some(2.0), ..GridSpec::default() };
        match immerse(&rot, C64::new(0.4, 0.0), &spec, &tol()) {
            Err(Error::Multivalued(_)) => {}
            other => panic!("expected multivalued error, got {:?}", other.map(|m| m.faces.len())),
        }
    }

    #[test]
    fn curvature_oracles() {
        let ks = curvature_field(&WData::R3(enneper()), &[C64::new(0.0, 0.0)]).unwrap();
        assert!((ks[0] + 4.0).abs() < 1e-12);
        let ks = curvature_field(&WData::R3(catenoid()), &[C64::new(1.0, 0.0)]).unwrap();
        assert!((ks[0] + 0.25).abs() < 1e-12);
    }

    #[test]
    fn general_formula_matches_r3_closed_form() {
        for d3 in [catenoid(), enneper(), jorge_meeks3()] {
            let d = WData::R3(d3.clone());
            for z in [C64::new(0.7, 0.3), C64::new(-1.2, 0.4), C64::new(0.2, -0.6)] {
                let general = curvature_field(&d, &[z]).unwrap()[0];
                let closed = curvature_r3_closed(&d3, z).unwrap();
                assert!(
                    (general - closed).abs() <= 1e-9 * closed.abs().max(1.0),
                    "general {} vs closed {}",
                    general,
                    closed
                );
            }
        }
    }

    #[test]
    fn flat_data_has_zero_curvature() {
        let flat = WData3 {
            domain: PuncturedSphere::new(vec![SpherePoint::infinity()], 0).unwrap(),
            h_form: MeromorphicForm::dz(),
            g: RationalFunction::from_poly(Polynomial::from_i64(&[2])),
        };
        let ks = curvature_field(&WData::R3(flat), &[C64::new(0.3, 0.1)]).unwrap();
        assert_eq!(ks[0], 0.0);
    }

    #[test]
    fn curvature_matches_log_metric_laplacian() {
        // K = −(Δ log λ)/λ² with λ = |h|(1+|g|²), central differences
        let d3 = catenoid();
        let lam = |z: C64| -> f64 {
            let h = d3.h_form.coeff.eval_c64(z).norm();
            let g2 = d3.g.eval_c64(z).norm_sqr();
            h * (1.0 + g2)
        };
        let z = C64::new(1.3, 0.2);
        let h = 1e-3;
        let ll = |z: C64| lam(z).ln();
        let lap = (ll(z + C64::new(h, 0.0)) + ll(z - C64::new(h, 0.0))
            + ll(z + C64::new(0.0, h))
            + ll(z - C64::new(0.0, h))
            - 4.0 * ll(z))
            / (h * h);
        let k_fd = -lap / (lam(z) * lam(z));
        let k = curvature_field(&WData::R3(d3.clone()), &[z]).unwrap()[0];
        assert!((k - k_fd).abs() <= 1e-4 * k.abs());
    }

    #[test]
    fn isothermal_identities_on_samples() {
        // x_u = Re φ, x_v = −Im φ: equal norms, orthogonal (Σφ² = 0)
        let coeffs: Vec<_> = WData::R3(enneper())
            .forms()
            .iter()
            .map(|f| f.coeff.clone())
            .collect();
        for z in [C64::new(0.4, 0.3), C64::new(-0.9, 1.1)] {
            let vals: Vec<C64> = coeffs.iter().map(|c| c.eval_c64(z)).collect();
            let xu: Vec<f64> = vals.iter().map(|v| v.re).collect();
            let xv: Vec<f64> = vals.iter().map(|v| -v.im).collect();
            let uu: f64 = xu.iter().map(|a| a * a).sum();
            let vv: f64 = xv.iter().map(|a| a * a).sum();
            let uv: f64 = xu.iter().zip(&xv).map(|(a, b)| a * b).sum();
            assert!((uu - vv).abs() < 1e-6 * uu.max(1.0));
            assert!(uv.abs() < 1e-6 * uu.max(1.0));
        }
    }

    #[test]
    fn total_curvature_values() {
        let four_pi = 4.0 * std::f64::consts::PI;
        let r = total_curvature(&WData::R3(catenoid()), &tol()).unwrap();
        assert!((r.value + four_pi).abs() < 0.01 * four_pi, "catenoid {}", r.value);
        let r = total_curvature(&WData::R3(enneper()), &tol()).unwrap();
        assert!((r.value + four_pi).abs() < 0.01 * four_pi, "enneper {}", r.value);
        let r = total_curvature(&WData::R3(jorge_meeks3()), &tol()).unwrap();
        assert!((r.value + 2.0 * four_pi).abs() < 0.01 * 2.0 * four_pi, "jm {}", r.value);
        assert!(r.est_error < 0.01 * four_pi);
    }

    #[test]
    fn export_obj_counts_and_stability() {
        let m = immerse(
            &WData::R3(catenoid()),
            C64::new(1.0, 0.0),
            &GridSpec::default(),
            &tol(),
        )
        .unwrap();
        let a = export_mesh(&m, MeshFormat::Obj);
        let b = export_mesh(&m, MeshFormat::Obj);
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 1024);
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), m.faces.len());

        let empty = export_mesh(&Mesh::empty(3), MeshFormat::Obj);
        assert!(empty.is_empty());
    }

    #[test]
    fn ply_round_trip() {
        let m = immerse(
            &WData::R3(catenoid()),
            C64::new(1.0, 0.0),
            &GridSpec { radial: 4, angular: 6, ..GridSpec::default() },
            &tol(),
        )
        .unwrap();
        let bytes = export_mesh(&m, MeshFormat::Ply);
        let pos = parse_ply_positions(&bytes).unwrap();
        assert_eq!(pos.len(), m.vertices.len());
        for (p, v) in pos.iter().zip(&m.vertices) {
            for c in 0..3 {
                assert!((p[c] - v.x[c]).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn sidecar_schema() {
        let m = immerse(
            &WData::R3(catenoid()),
            C64::new(1.0, 0.0),
            &GridSpec { radial: 2, angular: 3, ..GridSpec::default() },
            &tol(),
        )
        .unwrap();
        let j = sidecar_json(&m);
        let parsed: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(parsed["coords"].as_array().unwrap().len(), 6);
        assert_eq!(parsed["K"].as_array().unwrap().len(), 6);
        assert_eq!(parsed["lambda2"].as_array().unwrap().len(), 6);
    }
}
