//! Residues and the period condition.
//!
//! The period of φ around a small loop about a puncture p is
//! 2πi·res_p(φ); the real-period condition Re∮φᵢ = 0 is therefore
//! equivalent to Im res_p(φᵢ) = 0 — an exact test for exact data.
//!
//! EXACT residues: Taylor-shift the reduced coefficient to the point,
//! strip the leading powers, and read the relevant coefficient off a
//! truncated power-series inversion of the denominator unit. FLOAT
//! residues: adaptive circle quadrature at a radius clear of all other
//! poles.

use crate::algebra::divisor::SpherePoint;
use crate::algebra::poly::Polynomial;
use crate::algebra::ratfunc::{MeromorphicForm, RationalFunction};
use crate::algebra::roots::poly_roots;
use crate::algebra::scalar::{C64, ComplexScalar};
use crate::error::{Error, Result};
use crate::quad::circle_integral;
use crate::tol::Tolerances;
use crate::weierstrass::{end_orders, EndReport, WData};

// ---------------------------------------------------------------------
// Residues
// ---------------------------------------------------------------------

/// Truncated inverse of a power series with unit constant term:
/// d·q ≡ 1 mod t^(k+1).
fn series_inverse(d: &[ComplexScalar], k: usize) -> Result<Vec<ComplexScalar>> {
    let d0 = d.first().cloned().unwrap_or_else(ComplexScalar::zero);
    let d0_inv = d0
        .inv()
        .ok_or_else(|| Error::Malformed("series inversion needs a unit".into()))?;
    let mut q = vec![ComplexScalar::zero(); k + 1];
    q[0] = d0_inv.clone();
    for n in 1..=k {
        let mut acc = ComplexScalar::zero();
        for j in 1..=n {
            let dj = d.get(j).cloned().unwrap_or_else(ComplexScalar::zero);
            acc = &acc + &(&dj * &q[n - j]);
        }
        q[n] = &(-&acc) * &d0_inv;
    }
    Ok(q)
}

/// Residue at t = 0 of the rational coefficient c(t)dt, exactly.
fn residue_at_zero(c: &RationalFunction) -> Result<ComplexScalar> {
    if c.is_zero() {
        return Ok(ComplexScalar::zero());
    }
    let zero = ComplexScalar::zero();
    let b = c.num().order_at(&zero);
    let a = c.den().order_at(&zero);
    if (a as i64) - (b as i64) < 1 {
        return Ok(ComplexScalar::zero()); // no pole ⇒ no residue
    }
    let k = a - b - 1; // want [t^k] of N₁/D₁
    let n1: Vec<ComplexScalar> = c.num().coeffs()[b..].to_vec();
    let d1: Vec<ComplexScalar> = c.den().coeffs()[a..].to_vec();
    let inv = series_inverse(&d1, k)?;
    let mut acc = ComplexScalar::zero();
    for j in 0..=k {
        let nj = n1.get(j).cloned().unwrap_or_else(ComplexScalar::zero);
        acc = &acc + &(&nj * &inv[k - j]);
    }
    Ok(acc)
}

/// res_p(ω) for a meromorphic form ω on P¹; exact whenever the data and
/// the point are exact, circle quadrature otherwise.
pub fn residue(form: &MeromorphicForm, p: &SpherePoint, tol: &Tolerances) -> Result<ComplexScalar> {
    if form.is_zero() {
        return Ok(ComplexScalar::zero());
    }
    match p {
        SpherePoint::Infinity => {
            // transport to the ζ = 1/z chart and take the residue at 0
            residue_at_zero(&form.infinity_chart_coeff())
        }
        SpherePoint::Finite(z) => {
            if form.is_exact() && z.is_exact() {
                let num = form.coeff.num().taylor_shift(z);
                let den = form.coeff.den().taylor_shift(z);
                residue_at_zero(&RationalFunction::new(num, den)?)
            } else {
                float_residue(form, z.to_c64(), tol)
            }
        }
    }
}

fn float_residue(form: &MeromorphicForm, z: C64, tol: &Tolerances) -> Result<ComplexScalar> {
    // keep the contour clear of every other pole
    let mut radius: f64 = 0.5;
    if !form.coeff.den().is_constant() {
        for (r, _) in poly_roots(form.coeff.den(), tol)? {
            let d = (r.to_c64() - z).norm();
            if d > tol.eps_cluster {
                radius = radius.min(0.5 * d);
            }
        }
    }
    let c = form.coeff.clone();
    let val = circle_integral(&|w| c.eval_c64(w), z, radius, tol.eps_quad)?;
    Ok(ComplexScalar::from_c64(val / C64::new(0.0, 2.0 * std::f64::consts::PI)))
}

/// Residue-theorem check: Σ residues over all poles (finite and ∞)
/// vanishes. Returns the sum for the caller to compare.
pub fn residue_sum(form: &MeromorphicForm, tol: &Tolerances) -> Result<ComplexScalar> {
    let mut acc = ComplexScalar::zero();
    let div = form.divisor(tol)?;
    for (p, m) in div.entries() {
        if *m < 0 {
            acc = &acc + &residue(form, p, tol)?;
        }
    }
    Ok(acc)
}

// ---------------------------------------------------------------------
// Period condition
// ---------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct PeriodReport {
    /// residues[j][i] = res at puncture j of form i.
    pub residues: Vec<(SpherePoint, Vec<ComplexScalar>)>,
    /// (puncture index, form index) pairs with Im res ≠ 0.
    pub failures: Vec<(usize, usize)>,
    pub pass: bool,
}

/// Re∮_{γ_j} φᵢ = 0 for every puncture loop γ_j and every coordinate
/// form. Genus-0 loops are all generated by puncture loops, so this is
/// the full period condition.
pub fn period_condition(d: &WData, tol: &Tolerances) -> Result<PeriodReport> {
    d.domain().require_genus_zero()?;
    let forms = d.forms();
    let mut residues = vec![];
    let mut failures = vec![];
    for (j, p) in d.domain().punctures().iter().enumerate() {
        let mut row = vec![];
        for (i, f) in forms.iter().enumerate() {
            let r = residue(f, p, tol)?;
            let imag_zero = if r.is_exact() {
                r.is_real()
            } else {
                r.to_c64().im.abs() <= tol.eps_per
            };
            if !imag_zero {
                failures.push((j, i));
            }
            row.push(r);
        }
        residues.push((p.clone(), row));
    }
    let pass = failures.is_empty();
    Ok(PeriodReport { residues, failures, pass })
}

// ---------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceClass {
    /// Constant Gauss map.
    Flat,
    /// Some end order μ_j = 0: the metric does not blow up there.
    NotComplete,
    /// Complete, periods pass: a single-valued minimal immersion.
    Algebraic,
    /// Complete with finite total curvature but a real period obstructs
    /// single-valuedness.
    PseudoAlgebraic,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub class: SurfaceClass,
    pub ends: EndReport,
    pub periods: Option<PeriodReport>,
}

pub fn classify(d: &WData, tol: &Tolerances) -> Result<Classification> {
    d.domain().require_genus_zero()?;
    let ends = end_orders(d)?;
    if d.is_flat() {
        return Ok(Classification { class: SurfaceClass::Flat, ends, periods: None });
    }
    if !ends.complete {
        return Ok(Classification { class: SurfaceClass::NotComplete, ends, periods: None });
    }
    let periods = period_condition(d, tol)?;
    let class = if periods.pass {
        SurfaceClass::Algebraic
    } else {
        SurfaceClass::PseudoAlgebraic
    };
    Ok(Classification { class, ends, periods: Some(periods) })
}

/// Convenience: dz/q(z) style forms used repeatedly in tests.
pub fn form_over(den: Polynomial) -> Result<MeromorphicForm> {
    Ok(MeromorphicForm::new(RationalFunction::new(Polynomial::one(), den)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weierstrass::{associate_rotation, PuncturedSphere, WData3};

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
            h_form: form_over(Polynomial::from_i64(&[0, 0, 1])).unwrap(),
            g: RationalFunction::var(),
        }
    }

    fn voss(k: usize) -> WData3 {
        let pts: Vec<ComplexScalar> = (1..k as i64).map(ComplexScalar::from_int).collect();
        let mut punctures: Vec<SpherePoint> =
            pts.iter().cloned().map(SpherePoint::Finite).collect();
        punctures.push(SpherePoint::infinity());
        WData3 {
            domain: PuncturedSphere::new(punctures, 0).unwrap(),
            h_form: MeromorphicForm::new(
                RationalFunction::new(Polynomial::one(), Polynomial::from_roots(&pts)).unwrap(),
            ),
            g: RationalFunction::var(),
        }
    }

    #[test]
    fn simple_pole_residue_exact() {
        // res₀ dz/z = 1
        let f = form_over(Polynomial::var()).unwrap();
        let r = residue(&f, &SpherePoint::from_int(0), &tol()).unwrap();
        assert!(r.exact_eq(&ComplexScalar::one()));
    }

    #[test]
    fn higher_order_pole_residue_exact() {
        // (z+2)/z² = 1/z + 2/z² → residue 1; ½(1−z²)/z² → residue 0
        let f = MeromorphicForm::new(
            RationalFunction::new(Polynomial::from_i64(&[2, 1]), Polynomial::from_i64(&[0, 0, 1]))
                .unwrap(),
        );
        let r = residue(&f, &SpherePoint::from_int(0), &tol()).unwrap();
        assert!(r.exact_eq(&ComplexScalar::one()));

        let phi1 = forms3(&catenoid())[0].clone();
        let r = residue(&phi1, &SpherePoint::from_int(0), &tol()).unwrap();
        assert!(r.is_zero());
    }

    fn forms3(d: &WData3) -> Vec<MeromorphicForm> {
        crate::weierstrass::forms_from_data3(d).to_vec()
    }

    #[test]
    fn residue_at_infinity() {
        // dz/z has res_∞ = −1 (residue theorem with res₀ = 1)
        let f = form_over(Polynomial::var()).unwrap();
        let r = residue(&f, &SpherePoint::infinity(), &tol()).unwrap();
        assert!(r.exact_eq(&ComplexScalar::from_int(-1)));
    }

    #[test]
    fn residue_theorem_sums_to_zero() {
        // Jorge–Meeks φ₂ = (i/2)(1+z⁴)/(z³−1)² dz: Σ res = 0 exactly
        let den = &Polynomial::from_i64(&[-1, 0, 0, 1]) * &Polynomial::from_i64(&[-1, 0, 0, 1]);
        let jm = WData3 {
            domain: PuncturedSphere::sphere(),
            h_form: MeromorphicForm::new(
                RationalFunction::new(Polynomial::one(), den).unwrap(),
            ),
            g: RationalFunction::from_poly(Polynomial::from_i64(&[0, 0, 1])),
        };
        for f in forms3(&jm) {
            let s = residue_sum(&f, &tol()).unwrap();
            // two of the three pole locations come from the numeric
            // root finder, so the sum is only numerically zero
            assert!(s.to_c64().norm() < 1e-8, "nonzero residue sum {}", s);
        }
    }

    #[test]
    fn float_residue_matches_exact() {
        // 1/(z(z−1)) at 0: exact −1; float path agrees
        let den = &Polynomial::var() * &Polynomial::from_i64(&[-1, 1]);
        let f = form_over(den.clone()).unwrap();
        let exact = residue(&f, &SpherePoint::from_int(0), &tol()).unwrap();
        assert!(exact.exact_eq(&ComplexScalar::from_int(-1)));

        let ff = MeromorphicForm::new(
            RationalFunction::new(Polynomial::one(), den.to_float()).unwrap(),
        );
        let approx = residue(&ff, &SpherePoint::Finite(ComplexScalar::from_f64(0.0, 0.0)), &tol())
            .unwrap();
        assert!((approx.to_c64() - C64::new(-1.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn catenoid_periods_pass_conjugate_fails() {
        // catenoid: res₀ φ₃ = 1 real → pass; θ = π/2 rotation: res = i → fail
        let rep = period_condition(&WData::R3(catenoid()), &tol()).unwrap();
        assert!(rep.pass);
        assert!(rep.residues[0].1[2].exact_eq(&ComplexScalar::one()));

        let rot = associate_rotation(&catenoid(), std::f64::consts::PI / 2.0);
        let rep = period_condition(&WData::R3(rot), &tol()).unwrap();
        assert!(!rep.pass);
    }

    #[test]
    fn voss_period_failure_via_phi2() {
        // k = 3: res_{z=1} φ₂ = −i
        let rep = period_condition(&WData::R3(voss(3)), &tol()).unwrap();
        assert!(!rep.pass);
        let r = &rep.residues[0].1[1];
        assert!(r.exact_eq(&(-&ComplexScalar::i())));
        // and the classification is pseudo-algebraic
        let c = classify(&WData::R3(voss(3)), &tol()).unwrap();
        assert_eq!(c.class, SurfaceClass::PseudoAlgebraic);
    }

    #[test]
    fn classification_catalog() {
        let c = classify(&WData::R3(catenoid()), &tol()).unwrap();
        assert_eq!(c.class, SurfaceClass::Algebraic);

        // Enneper: k = 1, no residues to obstruct
        let enneper = WData3 {
            domain: PuncturedSphere::new(vec![SpherePoint::infinity()], 0).unwrap(),
            h_form: MeromorphicForm::dz(),
            g: RationalFunction::var(),
        };
        let c = classify(&WData::R3(enneper), &tol()).unwrap();
        assert_eq!(c.class, SurfaceClass::Algebraic);

        // flat: constant Gauss map
        let flat = WData3 {
            domain: PuncturedSphere::new(vec![SpherePoint::infinity()], 0).unwrap(),
            h_form: MeromorphicForm::dz(),
            g: RationalFunction::constant(ComplexScalar::from_int(2)),
        };
        let c = classify(&WData::R3(flat), &tol()).unwrap();
        assert_eq!(c.class, SurfaceClass::Flat);

        // not complete: puncture where every form is finite and nonzero
        let nc = WData3 {
            domain: PuncturedSphere::new(
                vec![SpherePoint::from_int(5), SpherePoint::infinity()],
                0,
            )
            .unwrap(),
            h_form: MeromorphicForm::dz(),
            g: RationalFunction::var(),
        };
        let c = classify(&WData::R3(nc), &tol()).unwrap();
        assert_eq!(c.class, SurfaceClass::NotComplete);
    }

    #[test]
    fn voss_k4_complete_nonalgebraic_ends() {
        let c = classify(&WData::R3(voss(4)), &tol()).unwrap();
        assert_eq!(c.class, SurfaceClass::PseudoAlgebraic);
        assert!(c.ends.complete && !c.ends.algebraic_ends);
    }
}
