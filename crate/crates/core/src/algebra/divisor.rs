//! Points of P¹ and divisors (finitely supported ℤ-valued maps).
//!
//! ∞ is a first-class point; everything chart-sensitive (orders of
//! forms, branch orders) transports through ζ = 1/z elsewhere and lands
//! here as a plain entry. Divisor entries are kept sorted by a
//! deterministic key so reports are byte-stable.

use super::scalar::{C64, ComplexScalar};
use std::fmt;

#[derive(Clone, Debug)]
pub enum SpherePoint {
    Finite(ComplexScalar),
    Infinity,
}

impl SpherePoint {
    pub fn finite(z: ComplexScalar) -> Self {
        SpherePoint::Finite(z)
    }
    pub fn from_int(n: i64) -> Self {
        SpherePoint::Finite(ComplexScalar::from_int(n))
    }
    pub fn infinity() -> Self {
        SpherePoint::Infinity
    }
    pub fn is_infinity(&self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }
    pub fn as_finite(&self) -> Option<&ComplexScalar> {
        match self {
            SpherePoint::Finite(z) => Some(z),
            SpherePoint::Infinity => None,
        }
    }
    pub fn is_exact(&self) -> bool {
        match self {
            SpherePoint::Finite(z) => z.is_exact(),
            SpherePoint::Infinity => true,
        }
    }
    pub fn to_c64(&self) -> Option<C64> {
        self.as_finite().map(|z| z.to_c64())
    }

    /// Identification: exact points compare exactly when both are exact
    /// over a unifiable field; any float operand compares within `eps`
    /// (chordal-like: ∞ matches only ∞).
    pub fn matches(&self, other: &SpherePoint, eps: f64) -> bool {
        match (self, other) {
            (SpherePoint::Infinity, SpherePoint::Infinity) => true,
            (SpherePoint::Finite(a), SpherePoint::Finite(b)) => a.approx_eq(b, eps),
            _ => false,
        }
    }

    /// Deterministic ordering key: ∞ last, then lexicographic (re, im).
    fn sort_key(&self) -> (u8, f64, f64) {
        match self {
            SpherePoint::Finite(z) => {
                let c = z.to_c64();
                (0, c.re, c.im)
            }
            SpherePoint::Infinity => (1, 0.0, 0.0),
        }
    }

    pub fn cmp_key(&self, other: &SpherePoint) -> std::cmp::Ordering {
        let (ta, ra, ia) = self.sort_key();
        let (tb, rb, ib) = other.sort_key();
        ta.cmp(&tb)
            .then(ra.total_cmp(&rb))
            .then(ia.total_cmp(&ib))
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Finite(z) => write!(f, "{}", z),
            SpherePoint::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Divisor {
    entries: Vec<(SpherePoint, i64)>,
}

impl Divisor {
    pub fn new() -> Self {
        Divisor { entries: vec![] }
    }

    /// Merge radius for support points; exact points merge exactly.
    pub const MERGE_EPS: f64 = 1e-9;

    pub fn add(&mut self, p: SpherePoint, mult: i64) {
        if mult == 0 {
            return;
        }
        if let Some(e) = self
            .entries
            .iter_mut()
            .find(|(q, _)| q.matches(&p, Self::MERGE_EPS))
        {
            e.1 += mult;
        } else {
            self.entries.push((p, mult));
        }
        self.entries.retain(|(_, m)| *m != 0);
        self.entries.sort_by(|a, b| a.0.cmp_key(&b.0));
    }

    pub fn entries(&self) -> &[(SpherePoint, i64)] {
        &self.entries
    }
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Σ multiplicities.
    pub fn total(&self) -> i64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity_at(&self, p: &SpherePoint, eps: f64) -> i64 {
        self.entries
            .iter()
            .find(|(q, _)| q.matches(p, eps))
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    pub fn plus(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, m) in &other.entries {
            out.add(p.clone(), *m);
        }
        out
    }

    /// Entries with positive multiplicity (zeros part).
    pub fn zeros(&self) -> Divisor {
        Divisor {
            entries: self
                .entries
                .iter()
                .filter(|(_, m)| *m > 0)
                .cloned()
                .collect(),
        }
    }
    /// Entries with negative multiplicity (poles part), multiplicities
    /// reported positive.
    pub fn poles(&self) -> Divisor {
        Divisor {
            entries: self
                .entries
                .iter()
                .filter(|(_, m)| *m < 0)
                .map(|(p, m)| (p.clone(), -m))
                .collect(),
        }
    }

    /// Keep entries whose point avoids every element of `excluded`.
    pub fn restrict_away_from(&self, excluded: &[SpherePoint], eps: f64) -> Divisor {
        Divisor {
            entries: self
                .entries
                .iter()
                .filter(|(p, _)| !excluded.iter().any(|q| q.matches(p, eps)))
                .cloned()
                .collect(),
        }
    }

    /// Keep entries at points of `included`.
    pub fn restrict_to(&self, included: &[SpherePoint], eps: f64) -> Divisor {
        Divisor {
            entries: self
                .entries
                .iter()
                .filter(|(p, _)| included.iter().any(|q| q.matches(p, eps)))
                .cloned()
                .collect(),
        }
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(p, m)| format!("{}:{:+}", p, m))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_and_total() {
        let mut d = Divisor::new();
        d.add(SpherePoint::from_int(1), 2);
        d.add(SpherePoint::infinity(), -3);
        d.add(SpherePoint::from_int(1), 1);
        assert_eq!(d.len(), 2);
        assert_eq!(d.total(), 0);
        assert_eq!(d.multiplicity_at(&SpherePoint::from_int(1), 1e-9), 3);
    }

    #[test]
    fn cancellation_removes_entry() {
        let mut d = Divisor::new();
        d.add(SpherePoint::from_int(5), 2);
        d.add(SpherePoint::from_int(5), -2);
        assert!(d.is_empty());
    }

    #[test]
    fn exact_points_do_not_merge_spuriously() {
        // Two distinct exact points closer than the merge radius stay apart.
        let mut d = Divisor::new();
        d.add(
            SpherePoint::Finite(ComplexScalar::from_frac(1, 1_000_000_000_000)),
            1,
        );
        d.add(SpherePoint::Finite(ComplexScalar::zero()), 1);
        assert_eq!(d.len(), 2);
    }
}
