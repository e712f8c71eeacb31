//! Rational functions on P¹ and meromorphic 1-forms coeff·dz.
//!
//! EXACT rational functions are kept reduced (gcd of num and den is 1)
//! with monic denominator, so zero/pole orders read straight off the
//! factors. FLOAT rational functions are normalized but not reduced;
//! all multiplicity logic for them goes through root clustering.
//!
//! Behavior at ∞ always goes through the chart ζ = 1/z; for forms,
//! dz = −ζ⁻²dζ.

use super::divisor::{Divisor, SpherePoint};
use super::poly::Polynomial;
use super::roots::poly_roots;
use super::scalar::{C64, ComplexScalar};
use crate::error::{Error, Result};
use crate::tol::Tolerances;

#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut f = RationalFunction { num, den };
        f.normalize()?;
        Ok(f)
    }

    fn normalize(&mut self) -> Result<()> {
        if self.num.is_zero() {
            self.den = Polynomial::one();
            return Ok(());
        }
        if self.num.is_exact() && self.den.is_exact() {
            let g = self.num.gcd(&self.den)?;
            if g.degree().unwrap_or(0) > 0 {
                self.num = self.num.divrem(&g)?.0;
                self.den = self.den.divrem(&g)?.0;
            }
            let lead_inv = self.den.leading().unwrap().inv().unwrap();
            self.num = self.num.scale(&lead_inv);
            self.den = self.den.scale(&lead_inv);
        } else {
            let lead_inv = ComplexScalar::from_c64(self.den.leading().unwrap().to_c64().inv());
            self.num = self.num.scale(&lead_inv);
            self.den = self.den.scale(&lead_inv);
        }
        Ok(())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }
    pub fn constant(c: ComplexScalar) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }
    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }
    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
    /// z
    pub fn var() -> Self {
        Self::from_poly(Polynomial::var())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }
    pub fn den(&self) -> &Polynomial {
        &self.den
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }
    pub fn is_exact(&self) -> bool {
        self.num.is_exact() && self.den.is_exact()
    }
    pub fn to_float(&self) -> RationalFunction {
        RationalFunction { num: self.num.to_float(), den: self.den.to_float() }
    }

    /// Degree as a map P¹ → P¹.
    pub fn degree_as_map(&self) -> usize {
        self.num.deg_or_zero().max(self.den.deg_or_zero())
    }

    pub fn eval(&self, p: &SpherePoint) -> SpherePoint {
        match p {
            SpherePoint::Finite(z) => {
                let d = self.den.eval(z);
                if d.is_zero() {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::Finite(&self.num.eval(z) / &d)
                }
            }
            SpherePoint::Infinity => {
                let dn = self.num.degree();
                let dd = self.den.degree();
                match (dn, dd) {
                    (None, _) => SpherePoint::Finite(ComplexScalar::zero()),
                    (Some(a), Some(b)) if a > b => SpherePoint::Infinity,
                    (Some(a), Some(b)) if a < b => {
                        SpherePoint::Finite(ComplexScalar::zero())
                    }
                    _ => SpherePoint::Finite(
                        &self.num.leading().unwrap().clone()
                            / self.den.leading().unwrap(),
                    ),
                }
            }
        }
    }

    pub fn eval_c64(&self, z: C64) -> C64 {
        self.num.eval_c64(z) / self.den.eval_c64(z)
    }

    pub fn derivative(&self) -> RationalFunction {
        // (n/d)' = (n'd − nd')/d²
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    /// self ∘ p for a polynomial argument (z ↦ p(z)).
    pub fn compose_poly(&self, p: &Polynomial) -> RationalFunction {
        RationalFunction::new(self.num.compose(p), self.den.compose(p))
            .expect("composition keeps den nonzero")
    }

    /// (a·f+b)/(c·f+d) for T = [[a,b],[c,d]], det ≠ 0.
    pub fn moebius_postcompose(&self, t: &[[ComplexScalar; 2]; 2]) -> Result<RationalFunction> {
        let det = &(&t[0][0] * &t[1][1]) - &(&t[0][1] * &t[1][0]);
        if det.is_zero() {
            return Err(Error::DegenerateMoebius);
        }
        let num = &self.num.scale(&t[0][0]) + &self.den.scale(&t[0][1]);
        let den = &self.num.scale(&t[1][0]) + &self.den.scale(&t[1][1]);
        RationalFunction::new(num, den)
    }

    /// Zero (+) / pole (−) order at a point; exact for exact data.
    pub fn ord_at(&self, p: &SpherePoint) -> i64 {
        if self.is_zero() {
            return i64::MAX;
        }
        match p {
            SpherePoint::Finite(z) => {
                self.num.order_at(z) as i64 - self.den.order_at(z) as i64
            }
            SpherePoint::Infinity => {
                self.den.deg_or_zero() as i64 - self.num.deg_or_zero() as i64
            }
        }
    }

    /// f(1/ζ) as a rational function of ζ.
    pub fn infinity_chart(&self) -> RationalFunction {
        let dn = self.num.deg_or_zero();
        let dd = self.den.deg_or_zero();
        let d = dn.max(dd);
        let rn = self.num.reverse_to_degree(d);
        let rd = self.den.reverse_to_degree(d);
        RationalFunction::new(rn, rd).expect("chart transport keeps den nonzero")
    }

    /// Divisor of zeros (+) and poles (−) over all of P¹; Σ = 0.
    pub fn divisor(&self, tol: &Tolerances) -> Result<Divisor> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut d = Divisor::new();
        if !self.num.is_constant() {
            for (r, m) in poly_roots(&self.num, tol)? {
                d.add(SpherePoint::Finite(r), m as i64);
            }
        }
        if !self.den.is_constant() {
            for (r, m) in poly_roots(&self.den, tol)? {
                d.add(SpherePoint::Finite(r), -(m as i64));
            }
        }
        d.add(SpherePoint::Infinity, self.ord_at(&SpherePoint::Infinity));
        Ok(d)
    }

    pub fn inv(&self) -> Result<RationalFunction> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> RationalFunction {
        let mut out = RationalFunction::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl std::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}
impl std::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}
impl std::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}
impl std::ops::Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
            .expect("division by zero rational function")
    }
}
impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

// ---------------------------------------------------------------------
// Meromorphic 1-forms
// ---------------------------------------------------------------------

/// The form coeff·dz in the standard chart.
#[derive(Clone, Debug, PartialEq)]
pub struct MeromorphicForm {
    pub coeff: RationalFunction,
}

impl MeromorphicForm {
    pub fn new(coeff: RationalFunction) -> Self {
        MeromorphicForm { coeff }
    }
    pub fn dz() -> Self {
        MeromorphicForm::new(RationalFunction::one())
    }
    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
    pub fn is_exact(&self) -> bool {
        self.coeff.is_exact()
    }
    pub fn scale_fn(&self, f: &RationalFunction) -> MeromorphicForm {
        MeromorphicForm::new(&self.coeff * f)
    }

    /// Coefficient in the ζ = 1/z chart: ω = c(z)dz = −c(1/ζ)ζ⁻² dζ.
    pub fn infinity_chart_coeff(&self) -> RationalFunction {
        let c = self.coeff.infinity_chart();
        let zeta2 = RationalFunction::from_poly(Polynomial::monomial(
            ComplexScalar::from_int(-1),
            2,
        ));
        &c / &zeta2
    }

    /// Order at a point: chart-corrected at ∞ (ord_∞(c) − 2).
    pub fn ord_at(&self, p: &SpherePoint) -> i64 {
        match p {
            SpherePoint::Finite(_) => self.coeff.ord_at(p),
            SpherePoint::Infinity => self.coeff.ord_at(p) - 2,
        }
    }

    /// Divisor over P¹; Σ = −2 (canonical degree at genus 0).
    pub fn divisor(&self, tol: &Tolerances) -> Result<Divisor> {
        let mut d = self.coeff.divisor(tol)?;
        d.add(SpherePoint::Infinity, -2);
        Ok(d)
    }
}
