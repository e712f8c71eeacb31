//! Univariate polynomials over `ComplexScalar`.
//!
//! Coefficients are stored ascending; trailing zeros are stripped, so
//! `degree() = len−1` and the leading coefficient of a nonzero
//! polynomial is nonzero. Division/gcd/square-free decomposition are
//! EXACT-mode only: multiplicity decisions from floating data are
//! ill-posed and routed through root clustering instead.

use super::scalar::{C64, ComplexScalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<ComplexScalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<ComplexScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }
    pub fn one() -> Self {
        Polynomial::constant(ComplexScalar::one())
    }
    pub fn constant(c: ComplexScalar) -> Self {
        Polynomial::new(vec![c])
    }
    /// c·z^k
    pub fn monomial(c: ComplexScalar, k: usize) -> Self {
        let mut v = vec![ComplexScalar::zero(); k];
        v.push(c);
        Polynomial::new(v)
    }
    /// z
    pub fn var() -> Self {
        Polynomial::monomial(ComplexScalar::one(), 1)
    }
    /// Π (z − rᵢ)
    pub fn from_roots(roots: &[ComplexScalar]) -> Self {
        let mut p = Polynomial::one();
        for r in roots {
            p = &p * &Polynomial::new(vec![-r, ComplexScalar::one()]);
        }
        p
    }
    /// Convenience: integer coefficients ascending.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| ComplexScalar::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[ComplexScalar] {
        &self.coeffs
    }
    pub fn coeff(&self, k: usize) -> ComplexScalar {
        self.coeffs.get(k).cloned().unwrap_or_else(ComplexScalar::zero)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }
    pub fn leading(&self) -> Option<&ComplexScalar> {
        self.coeffs.last()
    }
    pub fn is_exact(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_exact())
    }
    pub fn to_float(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c.to_float()).collect())
    }

    pub fn eval(&self, z: &ComplexScalar) -> ComplexScalar {
        let mut acc = ComplexScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }
    pub fn eval_c64(&self, z: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_c64();
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| &ComplexScalar::from_int(k as i64) * c)
                .collect(),
        )
    }

    pub fn scale(&self, c: &ComplexScalar) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Monic normalization (divide by the leading coefficient).
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// self(q(z)) by Horner over polynomials.
    pub fn compose(&self, q: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// self(z + p): Taylor shift, the k-th coefficient of the result is
    /// the k-th Taylor coefficient of self at p.
    pub fn taylor_shift(&self, p: &ComplexScalar) -> Polynomial {
        self.compose(&Polynomial::new(vec![p.clone(), ComplexScalar::one()]))
    }

    /// Coefficients reversed against an explicit degree bound `d` ≥
    /// deg(self): returns z^d · self(1/z) as a polynomial, the ζ-chart
    /// image used for behavior at ∞.
    pub fn reverse_to_degree(&self, d: usize) -> Polynomial {
        let mut v = vec![ComplexScalar::zero(); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[d - k] = c.clone();
        }
        Polynomial::new(v)
    }

    /// Multiplicity of `p` as a root, by exact Taylor shift. EXACT input
    /// required for a trustworthy answer; float zeros are compared
    /// bitwise (used only for structurally-zero coefficients).
    pub fn order_at(&self, p: &ComplexScalar) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let shifted = self.taylor_shift(p);
        shifted
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(shifted.coeffs.len())
    }

    /// Largest coefficient magnitude (float scale of the polynomial).
    pub fn sup_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    /// Exact Euclidean division; requires exact coefficients.
    pub fn divrem(&self, den: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !(self.is_exact() && den.is_exact()) {
            return Err(Error::InexactInput("polynomial division".into()));
        }
        let dd = den.degree().unwrap();
        let lead_inv = den.leading().unwrap().inv().expect("nonzero leading");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![ComplexScalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = &rem[rem.len() - 1] * &lead_inv;
            for (j, dc) in den.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[k + j] = &rem[k + j] - &t;
            }
            // The leading entry cancels exactly; pop it.
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                if rem.len() <= dd {
                    break;
                }
                rem.pop();
            }
            quo[k] = q;
        }
        Ok((Polynomial::new(quo), Polynomial::new(rem)))
    }

    /// Monic gcd by the Euclidean algorithm (EXACT only).
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(Polynomial::zero())
        } else {
            Ok(a.monic())
        }
    }

    /// Yun's square-free decomposition: self = lead · Π fᵢ^i with the fᵢ
    /// monic, square-free and pairwise coprime. Returns (fᵢ, i) for the
    /// nonconstant factors.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Polynomial, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_exact() {
            return Err(Error::InexactInput("square-free decomposition".into()));
        }
        let f = self.monic();
        if f.is_constant() {
            return Ok(vec![]);
        }
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.divrem(&a0)?.0;
        let mut c = df.divrem(&a0)?.0;
        let mut d = &c - &b.derivative();
        let mut out = vec![];
        let mut i = 1usize;
        while !b.is_constant() {
            let a = b.gcd(&d)?;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a)?.0;
            c = d.divrem(&a)?.0;
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}
impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}
impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![ComplexScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                out[i + j] = &out[i + j] + &t;
            }
        }
        Polynomial::new(out)
    }
}
impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({})z^{}", c, k))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
