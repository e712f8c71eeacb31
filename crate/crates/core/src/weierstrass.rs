//! Weierstrass data on punctured spheres and the structural checks of
//! the Enneper–Weierstrass representation: form construction, the
//! quadric identity Σfᵢ² = 0, regularity, metric factor and end orders.
//!
//! All definitions live on the basic domain M = M̄∖{p₁,…,p_k} with
//! M̄ = P¹; behavior at punctures is reported separately (ends).

use crate::algebra::divisor::{Divisor, SpherePoint};
use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::{MeromorphicForm, RationalFunction};
use crate::algebra::scalar::ComplexScalar;
use crate::error::{Error, Result};
use crate::tol::Tolerances;

// ---------------------------------------------------------------------
// Domain
// ---------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct PuncturedSphere {
    punctures: Vec<SpherePoint>,
    genus: i64,
}

impl PuncturedSphere {
    pub fn new(punctures: Vec<SpherePoint>, genus: i64) -> Result<Self> {
        for i in 0..punctures.len() {
            for j in (i + 1)..punctures.len() {
                if punctures[i].matches(&punctures[j], Divisor::MERGE_EPS) {
                    return Err(Error::InvalidParameter(format!(
                        "punctures must be distinct: {} repeats",
                        punctures[i]
                    )));
                }
            }
        }
        Ok(PuncturedSphere { punctures, genus })
    }

    pub fn sphere() -> Self {
        PuncturedSphere { punctures: vec![], genus: 0 }
    }

    pub fn punctures(&self) -> &[SpherePoint] {
        &self.punctures
    }
    pub fn k(&self) -> usize {
        self.punctures.len()
    }
    pub fn genus(&self) -> i64 {
        self.genus
    }
    pub fn require_genus_zero(&self) -> Result<()> {
        if self.genus != 0 {
            Err(Error::UnsupportedGenus(self.genus))
        } else {
            Ok(())
        }
    }
    /// Is `p` a point of M (i.e. not a puncture)?
    pub fn contains(&self, p: &SpherePoint, eps: f64) -> bool {
        !self.punctures.iter().any(|q| q.matches(p, eps))
    }
}

// ---------------------------------------------------------------------
// Data variants
// ---------------------------------------------------------------------

/// ℝ³ data (hdz, g).
#[derive(Clone, Debug)]
pub struct WData3 {
    pub domain: PuncturedSphere,
    pub h_form: MeromorphicForm,
    pub g: RationalFunction,
}

/// ℝ⁴ data (hdz, g₁, g₂).
#[derive(Clone, Debug)]
pub struct WData4 {
    pub domain: PuncturedSphere,
    pub h_form: MeromorphicForm,
    pub g1: RationalFunction,
    pub g2: RationalFunction,
}

/// ℝⁿ data (φ₁,…,φₙ), n ≥ 3, with Σfᵢ² = 0.
#[derive(Clone, Debug)]
pub struct WDataN {
    pub domain: PuncturedSphere,
    pub phis: Vec<MeromorphicForm>,
}

#[derive(Clone, Debug)]
pub enum WData {
    R3(WData3),
    R4(WData4),
    RN(WDataN),
}

impl WData {
    pub fn domain(&self) -> &PuncturedSphere {
        match self {
            WData::R3(d) => &d.domain,
            WData::R4(d) => &d.domain,
            WData::RN(d) => &d.domain,
        }
    }
    pub fn forms(&self) -> Vec<MeromorphicForm> {
        match self {
            WData::R3(d) => forms_from_data3(d).to_vec(),
            WData::R4(d) => forms_from_data4(d).to_vec(),
            WData::RN(d) => d.phis.clone(),
        }
    }
    pub fn ambient_dim(&self) -> usize {
        match self {
            WData::R3(_) => 3,
            WData::R4(_) => 4,
            WData::RN(d) => d.phis.len(),
        }
    }
    pub fn is_flat(&self) -> bool {
        match self {
            WData::R3(d) => d.g.is_constant(),
            WData::R4(d) => d.g1.is_constant() && d.g2.is_constant(),
            WData::RN(d) => {
                // Constant Gauss map ⇔ all form ratios constant.
                let base = d.phis.iter().find(|f| !f.is_zero());
                match base {
                    None => true,
                    Some(b) => d
                        .phis
                        .iter()
                        .filter(|f| !f.is_zero())
                        .all(|f| (&f.coeff / &b.coeff).is_constant()),
                }
            }
        }
    }
    pub fn to_float(&self) -> WData {
        let conv_f = |f: &RationalFunction| f.to_float();
        let conv_w = |w: &MeromorphicForm| MeromorphicForm::new(w.coeff.to_float());
        match self {
            WData::R3(d) => WData::R3(WData3 {
                domain: d.domain.clone(),
                h_form: conv_w(&d.h_form),
                g: conv_f(&d.g),
            }),
            WData::R4(d) => WData::R4(WData4 {
                domain: d.domain.clone(),
                h_form: conv_w(&d.h_form),
                g1: conv_f(&d.g1),
                g2: conv_f(&d.g2),
            }),
            WData::RN(d) => WData::RN(WDataN {
                domain: d.domain.clone(),
                phis: d.phis.iter().map(conv_w).collect(),
            }),
        }
    }
}

// ---------------------------------------------------------------------
// Form construction / recovery
// ---------------------------------------------------------------------

/// φ₁ = ½(1−g²)hdz, φ₂ = (i/2)(1+g²)hdz, φ₃ = g·hdz.
pub fn forms_from_data3(d: &WData3) -> [MeromorphicForm; 3] {
    let g2 = &d.g * &d.g;
    let one = RationalFunction::one();
    let half = RationalFunction::constant(ComplexScalar::from_frac(1, 2));
    let half_i = RationalFunction::constant(
        &ComplexScalar::i() * &ComplexScalar::from_frac(1, 2),
    );
    let f1 = &half * &(&one - &g2);
    let f2 = &half_i * &(&one + &g2);
    [
        d.h_form.scale_fn(&f1),
        d.h_form.scale_fn(&f2),
        d.h_form.scale_fn(&d.g),
    ]
}

/// φ₁ = ½(1+g₁g₂)hdz, φ₂ = (i/2)(1−g₁g₂)hdz, φ₃ = ½(g₁−g₂)hdz,
/// φ₄ = −(i/2)(g₁+g₂)hdz.
pub fn forms_from_data4(d: &WData4) -> [MeromorphicForm; 4] {
    let gg = &d.g1 * &d.g2;
    let one = RationalFunction::one();
    let half = RationalFunction::constant(ComplexScalar::from_frac(1, 2));
    let half_i = RationalFunction::constant(
        &ComplexScalar::i() * &ComplexScalar::from_frac(1, 2),
    );
    let f1 = &half * &(&one + &gg);
    let f2 = &half_i * &(&one - &gg);
    let f3 = &half * &(&d.g1 - &d.g2);
    let f4 = &(-&half_i) * &(&d.g1 + &d.g2);
    [
        d.h_form.scale_fn(&f1),
        d.h_form.scale_fn(&f2),
        d.h_form.scale_fn(&f3),
        d.h_form.scale_fn(&f4),
    ]
}

/// Inverse of `forms_from_data3`: hdz = φ₁ − iφ₂, g = φ₃/(φ₁ − iφ₂).
pub fn recover_data3(phis: &[MeromorphicForm; 3], domain: PuncturedSphere) -> Result<WData3> {
    let i = RationalFunction::constant(ComplexScalar::i());
    let h = &phis[0].coeff - &(&i * &phis[1].coeff);
    if h.is_zero() {
        return Err(Error::Malformed("phi1 - i*phi2 vanishes identically".into()));
    }
    let g = &phis[2].coeff / &h;
    Ok(WData3 { domain, h_form: MeromorphicForm::new(h), g })
}

/// g₁ = (φ₃+iφ₄)/(φ₁−iφ₂), g₂ = (−φ₃+iφ₄)/(φ₁−iφ₂), hdz = φ₁−iφ₂.
pub fn recover_data4(phis: &[MeromorphicForm; 4], domain: PuncturedSphere) -> Result<WData4> {
    let i = RationalFunction::constant(ComplexScalar::i());
    let h = &phis[0].coeff - &(&i * &phis[1].coeff);
    if h.is_zero() {
        return Err(Error::Malformed("phi1 - i*phi2 vanishes identically".into()));
    }
    let ip4 = &i * &phis[3].coeff;
    let g1 = &(&phis[2].coeff + &ip4) / &h;
    let g2 = &(&(-&phis[2].coeff) + &ip4) / &h;
    Ok(WData4 { domain, h_form: MeromorphicForm::new(h), g1, g2 })
}

/// Σ fᵢ² as a rational function (must be ≡ 0 for isothermal data).
pub fn quadric_residual(phis: &[MeromorphicForm]) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for f in phis {
        acc = &acc + &(&f.coeff * &f.coeff);
    }
    acc
}

// ---------------------------------------------------------------------
// Regularity
// ---------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct RegularityViolation {
    pub point: SpherePoint,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct RegularityReport {
    pub pass: bool,
    pub violations: Vec<RegularityViolation>,
}

/// ℝ³ regularity over M: hdz is holomorphic on M, its zeros in M sit
/// exactly at the poles of g with ord₀(hdz) = 2·ord_pole(g), and g has
/// no other poles in M.
pub fn regularity_check3(d: &WData3, tol: &Tolerances) -> Result<RegularityReport> {
    d.domain.require_genus_zero()?;
    let mut violations = vec![];
    let hdiv = d.h_form.divisor(tol)?;
    let gdiv = if d.g.is_constant() {
        Divisor::new()
    } else {
        d.g.divisor(tol)?
    };
    let mut points: Vec<SpherePoint> = vec![];
    let push = |p: &SpherePoint, points: &mut Vec<SpherePoint>| {
        if !points.iter().any(|q| q.matches(p, tol.eps_match)) {
            points.push(p.clone());
        }
    };
    for (p, _) in hdiv.entries() {
        push(p, &mut points);
    }
    for (p, _) in gdiv.entries() {
        push(p, &mut points);
    }
    for p in points {
        if !d.domain.contains(&p, tol.eps_match) {
            continue; // behavior at ends is EndReport business
        }
        let h_ord = hdiv.multiplicity_at(&p, tol.eps_match);
        let g_ord = gdiv.multiplicity_at(&p, tol.eps_match);
        if h_ord < 0 {
            violations.push(RegularityViolation {
                point: p,
                detail: format!("hdz has a pole of order {} inside M", -h_ord),
            });
            continue;
        }
        let g_pole = (-g_ord).max(0);
        if h_ord != 2 * g_pole {
            violations.push(RegularityViolation {
                point: p,
                detail: format!(
                    "ord(hdz) = {} but 2*ord_pole(g) = {}",
                    h_ord,
                    2 * g_pole
                ),
            });
        }
    }
    Ok(RegularityReport { pass: violations.is_empty(), violations })
}

/// ℝ⁴ regularity over M: zeros of hdz match poles of g₁, g₂ with
/// ord₀(hdz) = ord_pole(g₁) + ord_pole(g₂) (positive finite metric).
pub fn regularity_check4(d: &WData4, tol: &Tolerances) -> Result<RegularityReport> {
    d.domain.require_genus_zero()?;
    let mut violations = vec![];
    let hdiv = d.h_form.divisor(tol)?;
    let g1div = if d.g1.is_constant() { Divisor::new() } else { d.g1.divisor(tol)? };
    let g2div = if d.g2.is_constant() { Divisor::new() } else { d.g2.divisor(tol)? };
    let mut points: Vec<SpherePoint> = vec![];
    for div in [&hdiv, &g1div, &g2div] {
        for (p, _) in div.entries() {
            if !points.iter().any(|q| q.matches(p, tol.eps_match)) {
                points.push(p.clone());
            }
        }
    }
    for p in points {
        if !d.domain.contains(&p, tol.eps_match) {
            continue;
        }
        let h_ord = hdiv.multiplicity_at(&p, tol.eps_match);
        if h_ord < 0 {
            violations.push(RegularityViolation {
                point: p,
                detail: format!("hdz has a pole of order {} inside M", -h_ord),
            });
            continue;
        }
        let p1 = (-g1div.multiplicity_at(&p, tol.eps_match)).max(0);
        let p2 = (-g2div.multiplicity_at(&p, tol.eps_match)).max(0);
        if h_ord != p1 + p2 {
            violations.push(RegularityViolation {
                point: p,
                detail: format!(
                    "ord(hdz) = {} but ord_pole(g1)+ord_pole(g2) = {}",
                    h_ord,
                    p1 + p2
                ),
            });
        }
    }
    Ok(RegularityReport { pass: violations.is_empty(), violations })
}

/// ℝⁿ regularity over M: every φᵢ holomorphic in M and no common zero
/// of all fᵢ in M (positive metric).
pub fn regularity_check_n(d: &WDataN, tol: &Tolerances) -> Result<RegularityReport> {
    d.domain.require_genus_zero()?;
    let mut violations = vec![];
    let mut zero_divs: Vec<Divisor> = vec![];
    for f in &d.phis {
        if f.is_zero() {
            continue;
        }
        let div = f.divisor(tol)?;
        for (p, m) in div.entries() {
            if *m < 0 && d.domain.contains(p, tol.eps_match) {
                violations.push(RegularityViolation {
                    point: p.clone(),
                    detail: format!("a form has a pole of order {} inside M", -m),
                });
            }
        }
        zero_divs.push(div);
    }
    // Common zeros: a point where every nonzero form vanishes.
    if let Some(first) = zero_divs.first() {
        for (p, m) in first.entries() {
            if *m <= 0 || !d.domain.contains(p, tol.eps_match) {
                continue;
            }
            if zero_divs
                .iter()
                .all(|div| div.multiplicity_at(p, tol.eps_match) > 0)
            {
                violations.push(RegularityViolation {
                    point: p.clone(),
                    detail: "all forms vanish (metric degenerates)".into(),
                });
            }
        }
    }
    Ok(RegularityReport { pass: violations.is_empty(), violations })
}

pub fn regularity_check(d: &WData, tol: &Tolerances) -> Result<RegularityReport> {
    match d {
        WData::R3(d3) => regularity_check3(d3, tol),
        WData::R4(d4) => regularity_check4(d4, tol),
        WData::RN(dn) => regularity_check_n(dn, tol),
    }
}

// ---------------------------------------------------------------------
// Metric factor and ends
// ---------------------------------------------------------------------

/// λ²(z) = ½ Σ|fᵢ(z)|² evaluated through the reduced rational forms
/// (so regular cancellations are taken exactly). Finite z only; the
/// value is chart-dependent.
pub fn metric_factor(d: &WData, z: &SpherePoint) -> Result<f64> {
    let zf = match z {
        SpherePoint::Finite(v) => v.to_c64(),
        SpherePoint::Infinity => {
            return Err(Error::InvalidParameter(
                "metric factor at infinity is chart-dependent; evaluate in the zeta chart".into(),
            ))
        }
    };
    if !d.domain().contains(z, Divisor::MERGE_EPS) {
        return Err(Error::EndPoint(format!("{}", z)));
    }
    let mut acc = 0.0;
    for f in d.forms() {
        acc += f.coeff.eval_c64(zf).norm_sqr();
    }
    Ok(0.5 * acc)
}

/// Direct textbook formulas for ℝ³/ℝ⁴ (cross-checked against
/// `metric_factor` in tests): |h|²(1+|g|²)²/4 and
/// ¼|h|²(1+|g₁|²)(1+|g₂|²).
pub fn metric_factor_direct(d: &WData, z: num_complex::Complex<f64>) -> Option<f64> {
    match d {
        WData::R3(d3) => {
            let h = d3.h_form.coeff.eval_c64(z).norm();
            let g = d3.g.eval_c64(z).norm_sqr();
            Some((h * (1.0 + g) / 2.0).powi(2))
        }
        WData::R4(d4) => {
            let h = d4.h_form.coeff.eval_c64(z).norm_sqr();
            let g1 = d4.g1.eval_c64(z).norm_sqr();
            let g2 = d4.g2.eval_c64(z).norm_sqr();
            Some(0.25 * h * (1.0 + g1) * (1.0 + g2))
        }
        WData::RN(_) => None,
    }
}

#[derive(Clone, Debug)]
pub struct EndReport {
    /// (puncture, μ_j = max pole order of the φᵢ there).
    pub ends: Vec<(SpherePoint, i64)>,
    pub complete: bool,
    pub algebraic_ends: bool,
}

pub fn end_orders(d: &WData) -> Result<EndReport> {
    d.domain().require_genus_zero()?;
    let forms = d.forms();
    let mut ends = vec![];
    for p in d.domain().punctures() {
        let mu = forms
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| -f.ord_at(p))
            .max()
            .unwrap_or(0)
            .max(0);
        ends.push((p.clone(), mu));
    }
    let complete = ends.iter().all(|(_, mu)| *mu >= 1);
    let algebraic_ends = ends.iter().all(|(_, mu)| *mu >= 2);
    Ok(EndReport { ends, complete, algebraic_ends })
}

/// Associate-family rotation: multiply hdz by e^{iθ} (FLOAT unless θ is
/// a multiple of π/2, where the rotation stays exact).
pub fn associate_rotation(d: &WData3, theta: f64) -> WData3 {
    let quarter = theta / (std::f64::consts::PI / 2.0);
    let c = if (quarter - quarter.round()).abs() < 1e-15 {
        let k = quarter.round() as i64;
        let i = ComplexScalar::i();
        let mut acc = ComplexScalar::one();
        for _ in 0..k.rem_euclid(4) {
            acc = &acc * &i;
        }
        acc
    } else {
        ComplexScalar::from_c64(num_complex::Complex::from_polar(1.0, theta))
    };
    WData3 {
        domain: d.domain.clone(),
        h_form: d.h_form.scale_fn(&RationalFunction::constant(c)),
        g: d.g.clone(),
    }
}

// ---------------------------------------------------------------------
// Catalog-style constructors used across tests
// ---------------------------------------------------------------------

/// hdz with rational coefficient num/den on the given domain.
pub fn form_from_polys(num: Polynomial, den: Polynomial) -> Result<MeromorphicForm> {
    Ok(MeromorphicForm::new(RationalFunction::new(num, den)?))
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn catenoid_phi3() {
        // φ₃ = g·hdz = z⁻¹dz
        let phis = forms_from_data3(&catenoid());
        assert_eq!(phis[2].coeff.ord_at(&SpherePoint::from_int(0)), -1);
        let inv = RationalFunction::new(Polynomial::one(), Polynomial::var()).unwrap();
        assert_eq!(phis[2].coeff, inv);
    }

    #[test]
    fn enneper_phi1() {
        // φ₁ = ½(1−z²)dz
        let phis = forms_from_data3(&enneper());
        let expect = RationalFunction::from_poly(Polynomial::new(vec![
            ComplexScalar::from_frac(1, 2),
            ComplexScalar::zero(),
            ComplexScalar::from_frac(-1, 2),
        ]));
        assert_eq!(phis[0].coeff, expect);
    }

    #[test]
    fn quadric_identity_r3_r4() {
        let phis = forms_from_data3(&catenoid());
        assert!(quadric_residual(&phis).is_zero());

        // Kawakami (z⁻³dz, z, c) with c = 2+i
        let d4 = WData4 {
            domain: PuncturedSphere::new(
                vec![SpherePoint::from_int(0), SpherePoint::infinity()],
                0,
            )
            .unwrap(),
            h_form: form_from_polys(Polynomial::one(), Polynomial::from_i64(&[0, 0, 0, 1]))
                .unwrap(),
            g1: RationalFunction::var(),
            g2: RationalFunction::constant(ComplexScalar::from_gauss_i64(2, 1)),
        };
        let phis = forms_from_data4(&d4);
        assert!(quadric_residual(&phis).is_zero());
    }

    #[test]
    fn recovery_roundtrip_r3() {
        let d = catenoid();
        let phis = forms_from_data3(&d);
        let rec = recover_data3(&phis, d.domain.clone()).unwrap();
        assert_eq!(rec.g, d.g);
        assert_eq!(rec.h_form.coeff, d.h_form.coeff);
    }

    #[test]
    fn recovery_roundtrip_r4() {
        let d4 = WData4 {
            domain: PuncturedSphere::new(
                vec![SpherePoint::from_int(0), SpherePoint::infinity()],
                0,
            )
            .unwrap(),
            h_form: form_from_polys(Polynomial::one(), Polynomial::from_i64(&[0, 0, 0, 1]))
                .unwrap(),
            g1: RationalFunction::var(),
            g2: RationalFunction::constant(ComplexScalar::from_int(3)),
        };
        let phis = forms_from_data4(&d4);
        let rec = recover_data4(&phis, d4.domain.clone()).unwrap();
        assert_eq!(rec.g1, d4.g1);
        assert_eq!(rec.g2, d4.g2);
    }

    #[test]
    fn kawakami_phi3() {
        // (z⁻³dz, z, c): φ₃ = ½(z−c)z⁻³dz
        let c = ComplexScalar::from_int(5);
        let d4 = WData4 {
            domain: PuncturedSphere::new(
                vec![SpherePoint::from_int(0), SpherePoint::infinity()],
                0,
            )
            .unwrap(),
            h_form: form_from_polys(Polynomial::one(), Polynomial::from_i64(&[0, 0, 0, 1]))
                .unwrap(),
            g1: RationalFunction::var(),
            g2: RationalFunction::constant(c),
        };
        let phis = forms_from_data4(&d4);
        let expect = RationalFunction::new(
            Polynomial::new(vec![ComplexScalar::from_frac(-5, 2), ComplexScalar::from_frac(1, 2)]),
            Polynomial::from_i64(&[0, 0, 0, 1]),
        )
        .unwrap();
        assert_eq!(phis[2].coeff, expect);
    }

    #[test]
    fn regularity_pass_and_fail() {
        assert!(regularity_check3(&catenoid(), &tol()).unwrap().pass);
        assert!(regularity_check3(&enneper(), &tol()).unwrap().pass);

        // (dz, 1/(z−1)) on ℂ∖{0}: pole of g at 1 ∈ M, hdz has no zero → fail
        let bad = WData3 {
            domain: PuncturedSphere::new(
                vec![SpherePoint::from_int(0), SpherePoint::infinity()],
                0,
            )
            .unwrap(),
            h_form: MeromorphicForm::dz(),
            g: RationalFunction::new(Polynomial::one(), Polynomial::from_i64(&[-1, 1])).unwrap(),
        };
        let rep = regularity_check3(&bad, &tol()).unwrap();
        assert!(!rep.pass);
        assert!(rep.violations.iter().any(|v| v
            .point
            .matches(&SpherePoint::from_int(1), 1e-9)));
    }

    #[test]
    fn jorge_meeks_regularity() {
        // pole of g=z² at ∞ ∈ M order 2, zero of hdz at ∞ order 4
        let den = &Polynomial::from_i64(&[-1, 0, 0, 1]) * &Polynomial::from_i64(&[-1, 0, 0, 1]);
        let omega = ComplexScalar::from_c64(num_complex::Complex::from_polar(
            1.0,
            2.0 * std::f64::consts::PI / 3.0,
        ));
        let d = WData3 {
            domain: PuncturedSphere::new(
                vec![
                    SpherePoint::from_int(1),
                    SpherePoint::Finite(omega.clone()),
                    SpherePoint::Finite(&omega * &omega),
                ],
                0,
            )
            .unwrap(),
            h_form: form_from_polys(Polynomial::one(), den).unwrap(),
            g: RationalFunction::from_poly(Polynomial::from_i64(&[0, 0, 1])),
        };
        assert!(regularity_check3(&d, &tol()).unwrap().pass);
    }

    #[test]
    fn metric_values() {
        // catenoid at 1: λ² = (1·(1+1)/2)² = 1; Enneper at 0: 1/4
        let lam = metric_factor(&WData::R3(catenoid()), &SpherePoint::from_int(1)).unwrap();
        assert!((lam - 1.0).abs() < 1e-12);
        let lam = metric_factor(&WData::R3(enneper()), &SpherePoint::from_int(0)).unwrap();
        assert!((lam - 0.25).abs() < 1e-12);
        // agreement between Eq-(2)-style and direct formulas off the axis
        let z = num_complex::Complex::new(0.3, 0.7);
        let d = WData::R3(catenoid());
        let a = metric_factor(&d, &SpherePoint::Finite(ComplexScalar::from_c64(z))).unwrap();
        let b = metric_factor_direct(&d, z).unwrap();
        assert!((a - b).abs() <= 1e-10 * b.abs());
    }

    #[test]
    fn metric_at_puncture_is_end_error() {
        let err = metric_factor(&WData::R3(catenoid()), &SpherePoint::from_int(0));
        assert!(matches!(err, Err(Error::EndPoint(_))));
    }

    #[test]
    fn end_orders_catalog() {
        // catenoid: μ = 2 at both punctures
        let rep = end_orders(&WData::R3(catenoid())).unwrap();
        assert!(rep.ends.iter().all(|(_, mu)| *mu == 2));
        assert!(rep.complete && rep.algebraic_ends);

        // Enneper: μ = 4 at ∞
        let rep = end_orders(&WData::R3(enneper())).unwrap();
        assert_eq!(rep.ends.len(), 1);
        assert_eq!(rep.ends[0].1, 4);

        // Voss k=4: μ = 1 at each puncture → complete, non-algebraic ends
        let den = Polynomial::from_roots(&[
            ComplexScalar::from_int(1),
            ComplexScalar::from_int(2),
            ComplexScalar::from_int(3),
        ]);
        let voss = WData3 {
            domain: PuncturedSphere::new(
                vec![
                    SpherePoint::from_int(1),
                    SpherePoint::from_int(2),
                    SpherePoint::from_int(3),
                    SpherePoint::infinity(),
                ],
                0,
            )
            .unwrap(),
            h_form: form_from_polys(Polynomial::one(), den).unwrap(),
            g: RationalFunction::var(),
        };
        let rep = end_orders(&WData::R3(voss)).unwrap();
        assert!(rep.ends.iter().all(|(_, mu)| *mu == 1));
        assert!(rep.complete && !rep.algebraic_ends);
    }

    #[test]
    fn genus_guard() {
        let mut d = catenoid();
        d.domain = PuncturedSphere::new(d.domain.punctures().to_vec(), 1).unwrap();
        assert!(matches!(
            regularity_check3(&d, &tol()),
            Err(Error::UnsupportedGenus(1))
        ));
    }
}
