//! Mechanical verification of the ramification and unicity estimates.
//!
//! Every estimate is recorded as an `Inequality` (lhs ≤ rhs) with an
//! applicability flag, a pass verdict and an equality (sharpness) flag.
//! Raw forms — bounds written with the branching total n_g = 2(d+G−1)
//! and the end count k — apply to every basic domain; the R-based
//! rewrites require the hyperbolicity denominator to be nonnegative,
//! and a `non_hyperbolic` note is raised otherwise (k = 1 data).

use crate::algebra::divisor::SpherePoint;
use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::{MeromorphicForm, RationalFunction};
use crate::algebra::roots::poly_roots;
use crate::algebra::scalar::{rat_i64, Rat};
use crate::error::{Error, Result};
use crate::gauss::{gauss_profile, preimages, GaussProfile};
use crate::periods::{classify, Classification, SurfaceClass};
use crate::tol::Tolerances;
use crate::weierstrass::{PuncturedSphere, WData, WData3, WData4, WDataN};

// ---------------------------------------------------------------------
// Extended ratio R
// ---------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub enum RValue {
    Finite(Rat),
    Infinite,
    NonHyperbolic,
}

impl std::fmt::Display for RValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RValue::Finite(r) => write!(f, "{}", r),
            RValue::Infinite => write!(f, "inf"),
            RValue::NonHyperbolic => write!(f, "non-hyperbolic"),
        }
    }
}

/// R = d / denom with denom = G−1+k/2 (ℝ³ form) or 2G−2+k (ℝ⁴/ℝⁿ).
#[derive(Clone, Debug)]
pub struct RatioR {
    pub d: i64,
    pub denom: Rat,
}

impl RatioR {
    pub fn r3(d: usize, genus: i64, k: usize) -> RatioR {
        let denom = rat_i64(genus - 1) + Rat::new((k as i64).into(), 2.into());
        RatioR { d: d as i64, denom }
    }
    pub fn r4(d: usize, genus: i64, k: usize) -> RatioR {
        RatioR { d: d as i64, denom: rat_i64(2 * genus - 2 + k as i64) }
    }
    pub fn value(&self) -> RValue {
        use std::cmp::Ordering::*;
        match self.denom.cmp(&rat_i64(0)) {
            Greater => RValue::Finite(rat_i64(self.d) / self.denom.clone()),
            Equal => RValue::Infinite,
            Less => RValue::NonHyperbolic,
        }
    }
    pub fn non_hyperbolic(&self) -> bool {
        self.denom < rat_i64(0)
    }
    /// c/R read as c·denom/d, the quantity entering every R-based bound
    /// (0 when R = ∞); None when non-hyperbolic.
    pub fn reciprocal_times(&self, c: i64) -> Option<Rat> {
        if self.non_hyperbolic() {
            None
        } else {
            Some(rat_i64(c) * self.denom.clone() / rat_i64(self.d))
        }
    }
}

// ---------------------------------------------------------------------
// Inequality records
// ---------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundForm {
    Raw,
    RBased,
}

#[derive(Clone, Debug)]
pub struct Inequality {
    pub name: String,
    pub lhs: Rat,
    pub rhs: Option<Rat>, // None = +∞ bound (vacuous)
    pub form: BoundForm,
    pub applicable: bool,
    /// lhs ≤ rhs when equality allowed, lhs < rhs otherwise
    pub strict: bool,
    pub pass: bool,
    pub equality: bool,
    pub note: Option<String>,
}

impl Inequality {
    pub(crate) fn le(name: &str, lhs: Rat, rhs: Rat, form: BoundForm) -> Inequality {
        let pass = lhs <= rhs;
        let equality = lhs == rhs;
        Inequality {
            name: name.into(),
            lhs,
            rhs: Some(rhs),
            form,
            applicable: true,
            strict: false,
            pass,
            equality,
            note: None,
        }
    }
    fn lt(name: &str, lhs: Rat, rhs: Rat, form: BoundForm) -> Inequality {
        let pass = lhs < rhs;
        let equality = lhs == rhs;
        Inequality {
            name: name.into(),
            lhs,
            rhs: Some(rhs),
            form,
            applicable: true,
            strict: true,
            pass,
            equality,
            note: None,
        }
    }
    pub(crate) fn inapplicable(name: &str, lhs: Rat, form: BoundForm, note: &str) -> Inequality {
        Inequality {
            name: name.into(),
            lhs,
            rhs: None,
            form,
            applicable: false,
            strict: false,
            pass: true,
            equality: false,
            note: Some(note.into()),
        }
    }
    fn with_note(mut self, note: &str) -> Inequality {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Default)]
pub struct TheoremReport {
    pub inequalities: Vec<Inequality>,
    pub non_hyperbolic: bool,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.inequalities.iter().all(|i| !i.applicable || i.pass)
    }
    pub fn get(&self, name: &str) -> Option<&Inequality> {
        self.inequalities.iter().find(|i| i.name == name)
    }
}

// ---------------------------------------------------------------------
// ℝ³ suite
// ---------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct R3Verification {
    pub profile: GaussProfile,
    pub classification: Classification,
    pub ratio: RatioR,
    pub report: TheoremReport,
}

/// Exceptional-value and totally-ramified-value estimates for ℝ³ data:
/// raw forms D_g ≤ (n_g+k−l)/d and ν_g ≤ (n_g+k)/d, the R-based
/// rewrites 2+2/R−l/d and 2+2/R when the domain is hyperbolic, the
/// total bound D_g ≤ ν_g ≤ 4 (strict upper part for single-valued
/// immersions), and D_g ≤ 2 for algebraic genus-0 data.
pub fn verify_r3(d3: &WData3, tol: &Tolerances) -> Result<R3Verification> {
    d3.domain.require_genus_zero()?;
    let profile = gauss_profile(&d3.g, &d3.domain, tol)?;
    let classification = classify(&WData::R3(d3.clone()), tol)?;
    let genus = d3.domain.genus();
    let k = d3.domain.k() as i64;
    let d = profile.degree as i64;
    let n_g = rat_i64(2 * (d + genus - 1));
    let l = rat_i64(profile.l as i64);
    let d_g = rat_i64(profile.d_g as i64);
    let nu_g = profile.nu_g.clone();
    let ratio = RatioR::r3(profile.degree, genus, d3.domain.k());

    let mut ineqs = vec![];
    ineqs.push(Inequality::le(
        "exceptional_raw",
        d_g.clone(),
        (n_g.clone() + rat_i64(k) - l.clone()) / rat_i64(d),
        BoundForm::Raw,
    ));
    ineqs.push(Inequality::le(
        "trvn_raw",
        nu_g.clone(),
        (n_g.clone() + rat_i64(k)) / rat_i64(d),
        BoundForm::Raw,
    ));
    match ratio.reciprocal_times(2) {
        Some(two_over_r) => {
            ineqs.push(Inequality::le(
                "exceptional_r",
                d_g.clone(),
                rat_i64(2) + two_over_r.clone() - l.clone() / rat_i64(d),
                BoundForm::RBased,
            ));
            ineqs.push(Inequality::le(
                "trvn_r",
                nu_g.clone(),
                rat_i64(2) + two_over_r,
                BoundForm::RBased,
            ));
        }
        None => {
            ineqs.push(Inequality::inapplicable(
                "exceptional_r",
                d_g.clone(),
                BoundForm::RBased,
                "non-hyperbolic domain: R-form inapplicable, raw form governs",
            ));
            ineqs.push(Inequality::inapplicable(
                "trvn_r",
                nu_g.clone(),
                BoundForm::RBased,
                "non-hyperbolic domain: R-form inapplicable, raw form governs",
            ));
        }
    }
    ineqs.push(Inequality::le(
        "exceptional_le_trvn",
        d_g.clone(),
        nu_g.clone(),
        BoundForm::Raw,
    ));
    let algebraic = classification.class == SurfaceClass::Algebraic;
    ineqs.push(if algebraic {
        Inequality::lt("trvn_le_4", nu_g.clone(), rat_i64(4), BoundForm::Raw)
            .with_note("strict: the data is a single-valued immersion")
    } else {
        Inequality::le("trvn_le_4", nu_g.clone(), rat_i64(4), BoundForm::Raw)
    });
    if algebraic && genus == 0 {
        ineqs.push(Inequality::le(
            "exceptional_le_2_algebraic",
            d_g,
            rat_i64(2),
            BoundForm::Raw,
        ));
    }
    let report = TheoremReport { inequalities: ineqs, non_hyperbolic: ratio.non_hyperbolic() };
    Ok(R3Verification { profile, classification, ratio, report })
}

// ---------------------------------------------------------------------
// ℝ⁴ suite
// ---------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum R4Case {
    /// both Gauss maps nonconstant
    BothNonconstant,
    /// exactly one nonconstant (index stored)
    OneConstant(usize),
}

#[derive(Clone, Debug)]
pub struct R4Verification {
    pub profiles: [Option<GaussProfile>; 2],
    pub ratios: [Option<RatioR>; 2],
    pub case: R4Case,
    pub report: TheoremReport,
}

/// ℝ⁴ estimates: reciprocal bound 1 ≤ R₁+R₂ ≤ 1/(ν₁−2) + 1/(ν₂−2) in
/// the two-map case, ν ≤ 2+1/R in the one-map case, and the raw bound
/// ν_{gᵢ} ≤ (2(dᵢ+G−1)+k)/dᵢ per nonconstant map.
pub fn verify_r4(d4: &WData4, tol: &Tolerances) -> Result<R4Verification> {
    d4.domain.require_genus_zero()?;
    let genus = d4.domain.genus();
    let k = d4.domain.k();
    let maps = [&d4.g1, &d4.g2];
    let mut profiles: [Option<GaussProfile>; 2] = [None, None];
    let mut ratios: [Option<RatioR>; 2] = [None, None];
    for i in 0..2 {
        if !maps[i].is_constant() {
            let p = gauss_profile(maps[i], &d4.domain, tol)?;
            ratios[i] = Some(RatioR::r4(p.degree, genus, k));
            profiles[i] = Some(p);
        }
    }
    let case = match (&profiles[0], &profiles[1]) {
        (Some(_), Some(_)) => R4Case::BothNonconstant,
        (Some(_), None) => R4Case::OneConstant(0),
        (None, Some(_)) => R4Case::OneConstant(1),
        (None, None) => return Err(Error::Flat),
    };

    let mut ineqs = vec![];
    let non_hyperbolic;
    // raw per-map bound
    for i in 0..2 {
        if let Some(p) = &profiles[i] {
            let d = p.degree as i64;
            ineqs.push(Inequality::le(
                &format!("trvn_raw_g{}", i + 1),
                p.nu_g.clone(),
                rat_i64(2 * (d + genus - 1) + k as i64) / rat_i64(d),
                BoundForm::Raw,
            ));
        }
    }
    match case {
        R4Case::BothNonconstant => {
            let (p1, p2) = (profiles[0].as_ref().unwrap(), profiles[1].as_ref().unwrap());
            let (r1, r2) = (ratios[0].as_ref().unwrap(), ratios[1].as_ref().unwrap());
            non_hyperbolic = r1.non_hyperbolic();
            match (r1.value(), r2.value()) {
                (RValue::Finite(v1), RValue::Finite(v2)) => {
                    let rsum = v1 + v2;
                    ineqs.push(Inequality::le(
                        "ratio_sum_ge_1",
                        rat_i64(1),
                        rsum.clone(),
                        BoundForm::RBased,
                    ));
                    let two = rat_i64(2);
                    if p1.nu_g > two && p2.nu_g > two {
                        let recip = rat_i64(1) / (p1.nu_g.clone() - two.clone())
                            + rat_i64(1) / (p2.nu_g.clone() - two);
                        ineqs.push(Inequality::le(
                            "ratio_sum_le_reciprocal",
                            rsum,
                            recip,
                            BoundForm::RBased,
                        ));
                    } else {
                        ineqs.push(Inequality::inapplicable(
                            "ratio_sum_le_reciprocal",
                            rsum,
                            BoundForm::RBased,
                            "some nu_g <= 2: reciprocal bound vacuous",
                        ));
                    }
                }
                _ => {
                    ineqs.push(Inequality::inapplicable(
                        "ratio_sum_ge_1",
                        rat_i64(1),
                        BoundForm::RBased,
                        "R undefined (non-hyperbolic or parabolic domain)",
                    ));
                }
            }
        }
        R4Case::OneConstant(i) => {
            let p = profiles[i].as_ref().unwrap();
            let r = ratios[i].as_ref().unwrap();
            non_hyperbolic = r.non_hyperbolic();
            match r.reciprocal_times(1) {
                Some(one_over_r) => ineqs.push(Inequality::le(
                    &format!("trvn_r_g{}", i + 1),
                    p.nu_g.clone(),
                    rat_i64(2) + one_over_r,
                    BoundForm::RBased,
                )),
                None => ineqs.push(Inequality::inapplicable(
                    &format!("trvn_r_g{}", i + 1),
                    p.nu_g.clone(),
                    BoundForm::RBased,
                    "non-hyperbolic domain: R-form inapplicable",
                )),
            }
        }
    }
    let report = TheoremReport { inequalities: ineqs, non_hyperbolic };
    Ok(R4Verification { profiles, ratios, case, report })
}

// ---------------------------------------------------------------------
// Shared values / unicity
// ---------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnicityKind {
    /// q ≤ 4 + 2/R with R = d/(G−1+k/2)
    R3,
    /// p ≤ 4 + 1/R₁ with R₁ = d/(2G−2+k)
    R4,
}

#[derive(Clone, Debug)]
pub struct UnicityReport {
    /// values c with gA⁻¹(c) ∩ M = gB⁻¹(c) ∩ M as sets
    pub values: Vec<SpherePoint>,
    pub q: usize,
    pub degree_warning: Option<String>,
    pub report: TheoremReport,
}

/// Count the values the two maps share with identical fibers over M.
///
/// Candidate exhaustiveness: if the common fiber over c is nonempty it
/// contains some z₀ ∈ M with gA(z₀) = gB(z₀) — a finite zero of
/// gA − gB, the point ∞ (checked separately), or a common pole (the
/// value ∞, always tried); if it is empty, every preimage is a
/// puncture, so c is a puncture image under both maps.
pub fn shared_values(
    ga: &RationalFunction,
    gb: &RationalFunction,
    domain: &PuncturedSphere,
    kind: UnicityKind,
    tol: &Tolerances,
) -> Result<UnicityReport> {
    domain.require_genus_zero()?;
    if ga == gb {
        return Err(Error::IdenticalMaps);
    }
    if ga.is_constant() || gb.is_constant() {
        return Err(Error::Flat);
    }
    let mut candidates: Vec<SpherePoint> = vec![];
    let push = |v: SpherePoint, c: &mut Vec<SpherePoint>| {
        if !c.iter().any(|w| w.matches(&v, tol.eps_match)) {
            c.push(v);
        }
    };
    let diff = ga - gb;
    if !diff.num().is_constant() {
        for (z, _) in poly_roots(diff.num(), tol)? {
            push(ga.eval(&SpherePoint::Finite(z)), &mut candidates);
        }
    }
    let inf = SpherePoint::Infinity;
    if ga.eval(&inf).matches(&gb.eval(&inf), tol.eps_match) {
        push(ga.eval(&inf), &mut candidates);
    }
    push(SpherePoint::Infinity, &mut candidates);
    for p in domain.punctures() {
        push(ga.eval(p), &mut candidates);
        push(gb.eval(p), &mut candidates);
    }
    candidates.sort_by(|a, b| a.cmp_key(b));

    let fiber = |g: &RationalFunction, c: &SpherePoint| -> Result<Vec<SpherePoint>> {
        Ok(preimages(g, c, tol)?
            .into_iter()
            .map(|(z, _)| z)
            .filter(|z| domain.contains(z, tol.eps_match))
            .collect())
    };
    let mut values = vec![];
    for c in candidates {
        let fa = fiber(ga, &c)?;
        let fb = fiber(gb, &c)?;
        let equal_sets = fa.len() == fb.len()
            && fa
                .iter()
                .all(|z| fb.iter().any(|w| w.matches(z, tol.eps_match)));
        if equal_sets {
            values.push(c);
        }
    }
    let q = values.len();

    let da = ga.degree_as_map();
    let db = gb.degree_as_map();
    let d = da.max(db);
    let degree_warning = (da != db).then(|| {
        format!(
            "maps have different degrees {} and {}; bound evaluated with d = {}",
            da, db, d
        )
    });
    let genus = domain.genus();
    let k = domain.k();
    let n_g = rat_i64(2 * (d as i64 + genus - 1));
    let raw = (rat_i64(2 * d as i64) + n_g + rat_i64(k as i64)) / rat_i64(d as i64);
    let mut ineqs = vec![Inequality::le(
        "shared_values_raw",
        rat_i64(q as i64),
        raw,
        BoundForm::Raw,
    )];
    let (ratio, c) = match kind {
        UnicityKind::R3 => (RatioR::r3(d, genus, k), 2),
        UnicityKind::R4 => (RatioR::r4(d, genus, k), 1),
    };
    match ratio.reciprocal_times(c) {
        Some(c_over_r) => ineqs.push(Inequality::le(
            "shared_values_r",
            rat_i64(q as i64),
            rat_i64(4) + c_over_r,
            BoundForm::RBased,
        )),
        None => ineqs.push(Inequality::inapplicable(
            "shared_values_r",
            rat_i64(q as i64),
            BoundForm::RBased,
            "non-hyperbolic domain: R-form inapplicable",
        )),
    }
    let report = TheoremReport { inequalities: ineqs, non_hyperbolic: ratio.non_hyperbolic() };
    Ok(UnicityReport { values, q, degree_warning, report })
}

// ---------------------------------------------------------------------
// Covering pullback
// ---------------------------------------------------------------------

/// Pull the data back through the unbranched covering z ↦ z^m of
/// M (needs {0, ∞} ⊆ punctures): g̃ = g(z^m),
/// h̃dz = m·z^(m−1)·h(z^m)dz, punctures = full preimage. Leaves R, D_g
/// and ν_g unchanged.
pub fn pullback_covering(d: &WData, m: u32, tol: &Tolerances) -> Result<WData> {
    if m == 0 {
        return Err(Error::InvalidParameter("covering exponent must be positive".into()));
    }
    if m == 1 {
        return Ok(d.clone());
    }
    let domain = d.domain();
    domain.require_genus_zero()?;
    for p in [SpherePoint::from_int(0), SpherePoint::Infinity] {
        if domain.contains(&p, tol.eps_match) {
            return Err(Error::BranchedCovering(format!("{}", p)));
        }
    }
    // preimage punctures: m-th roots of each finite puncture (0 ↦ 0), ∞ ↦ ∞
    let mut punctures = vec![];
    for p in domain.punctures() {
        match p {
            SpherePoint::Infinity => punctures.push(SpherePoint::Infinity),
            SpherePoint::Finite(v) if v.is_zero() => punctures.push(p.clone()),
            SpherePoint::Finite(v) => {
                let mut coeffs = vec![-v];
                coeffs.resize(m as usize, crate::algebra::scalar::ComplexScalar::zero());
                coeffs.push(crate::algebra::scalar::ComplexScalar::one());
                for (r, _) in poly_roots(&Polynomial::new(coeffs), tol)? {
                    punctures.push(SpherePoint::Finite(r));
                }
            }
        }
    }
    let new_domain = PuncturedSphere::new(punctures, domain.genus())?;
    let zm = Polynomial::monomial(crate::algebra::scalar::ComplexScalar::one(), m as usize);
    let jacobian = RationalFunction::from_poly(Polynomial::monomial(
        crate::algebra::scalar::ComplexScalar::from_int(m as i64),
        m as usize - 1,
    ));
    let pull_form = |w: &MeromorphicForm| -> MeromorphicForm {
        MeromorphicForm::new(&w.coeff.compose_poly(&zm) * &jacobian)
    };
    Ok(match d {
        WData::R3(d3) => WData::R3(WData3 {
            domain: new_domain,
            h_form: pull_form(&d3.h_form),
            g: d3.g.compose_poly(&zm),
        }),
        WData::R4(d4) => WData::R4(WData4 {
            domain: new_domain,
            h_form: pull_form(&d4.h_form),
            g1: d4.g1.compose_poly(&zm),
            g2: d4.g2.compose_poly(&zm),
        }),
        WData::RN(dn) => WData::RN(WDataN {
            domain: new_domain,
            phis: dn.phis.iter().map(pull_form).collect(),
        }),
    })
}
