//! Complex scalars in two modes.
//!
//! EXACT: elements of ℚ(i)(√m) stored as a + b·√m with a, b Gaussian
//! rationals and m a squarefree integer ≥ 2 (m = 0 means no extension).
//! This is a field: arithmetic is closed and bit-exact. √m is the
//! positive real root, so conjugation acts componentwise.
//!
//! FLOAT: `Complex<f64>`. Mixed-mode arithmetic promotes to FLOAT, as
//! does combining two different extensions (ℚ(i)(√2, √3) is out of
//! scope); exactness-requiring callers check `is_exact` first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Rat = BigRational;
pub type C64 = num_complex::Complex<f64>;

pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Denormal-range fallback: divide leading digits.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Parse "p/q" or an integer literal into a rational.
pub fn rat_parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Rat::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(p))
    }
}

// ---------------------------------------------------------------------
// Gaussian rationals ℚ(i)
// ---------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }
    pub fn zero() -> Self {
        GaussRat::new(Rat::zero(), Rat::zero())
    }
    pub fn one() -> Self {
        GaussRat::new(Rat::one(), Rat::zero())
    }
    pub fn i() -> Self {
        GaussRat::new(Rat::zero(), Rat::one())
    }
    pub fn from_rat(r: Rat) -> Self {
        GaussRat::new(r, Rat::zero())
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }
    /// |z|² as a rational.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
    pub fn add(&self, o: &Self) -> Self {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
    pub fn sub(&self, o: &Self) -> Self {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
    pub fn neg(&self) -> Self {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
    pub fn mul(&self, o: &Self) -> Self {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    pub fn scale(&self, r: &Rat) -> Self {
        GaussRat::new(&self.re * r, &self.im * r)
    }
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat::new(&self.re / &n, -(&self.im / &n)))
    }
    pub fn to_c64(&self) -> C64 {
        C64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }

    /// Square root inside ℚ(i) when it exists: s with s² = self.
    pub fn sqrt_in_field(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        if self.im.is_zero() {
            let r = &self.re;
            if r.is_positive() {
                return rat_sqrt(r).map(GaussRat::from_rat);
            }
            // sqrt of a negative rational is i*sqrt(|r|)
            return rat_sqrt(&-r.clone()).map(|s| GaussRat::new(Rat::zero(), s));
        }
        // (x+iy)^2 = re + i*im: need norm a perfect square N², then
        // x² = (re+N)/2, y = im/(2x).
        let n = rat_sqrt(&self.norm_sqr())?;
        let two = rat_i64(2);
        let x2 = (&self.re + &n) / &two;
        let x = rat_sqrt(&x2)?;
        if x.is_zero() {
            return None;
        }
        let y = &self.im / &(&two * &x);
        Some(GaussRat::new(x, y))
    }
}

/// Rational square root when it exists exactly.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt_exact(r.numer())?;
    let d = int_sqrt_exact(r.denom())?;
    Some(Rat::new(n, d))
}

fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

/// Factor |n| = s²·m with m squarefree; returns (s, m) with m ≥ 1.
/// Gives up (None) when a cofactor > 10^12 remains unfactored.
fn squarefree_decompose(n: &BigInt) -> Option<(BigInt, BigInt)> {
    let mut n = n.abs();
    if n.is_zero() {
        return Some((BigInt::zero(), BigInt::one()));
    }
    let mut s = BigInt::one();
    let mut m = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &p * &p <= n && p <= limit {
        let mut e = 0u32;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            for _ in 0..(e / 2) {
                s *= &p;
            }
            if e % 2 == 1 {
                m *= &p;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        // Remaining cofactor is prime (if below the trial bound squared)
        // or a perfect square we can still catch.
        if let Some(r) = int_sqrt_exact(&n) {
            s *= r;
        } else if n <= BigInt::from(1_000_000_000_000u64) {
            m *= &n;
        } else {
            return None;
        }
    }
    Some((s, m))
}

// ---------------------------------------------------------------------
// ℚ(i)(√m)
// ---------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactComplex {
    pub a: GaussRat,
    pub b: GaussRat,
    /// Squarefree integer ≥ 2, or 0 when b = 0 (no extension in play).
    pub m: u64,
}

impl ExactComplex {
    pub fn new(a: GaussRat, b: GaussRat, m: u64) -> Self {
        let mut v = ExactComplex { a, b, m };
        v.canonicalize();
        v
    }
    fn canonicalize(&mut self) {
        if self.b.is_zero() || self.m == 0 {
            self.b = GaussRat::zero();
            self.m = 0;
        } else if self.m == 1 {
            self.a = self.a.add(&self.b);
            self.b = GaussRat::zero();
            self.m = 0;
        }
    }
    pub fn from_gauss(a: GaussRat) -> Self {
        ExactComplex { a, b: GaussRat::zero(), m: 0 }
    }
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    /// Real iff both Gaussian parts are real (√m is real positive).
    pub fn is_real(&self) -> bool {
        self.a.is_real() && self.b.is_real()
    }
    pub fn conj(&self) -> Self {
        ExactComplex { a: self.a.conj(), b: self.b.conj(), m: self.m }
    }
    pub fn to_c64(&self) -> C64 {
        if self.m == 0 {
            self.a.to_c64()
        } else {
            self.a.to_c64() + self.b.to_c64() * (self.m as f64).sqrt()
        }
    }

    fn unify(&self, o: &Self) -> Option<u64> {
        match (self.m, o.m) {
            (0, m) | (m, 0) => Some(m),
            (m1, m2) if m1 == m2 => Some(m1),
            _ => None,
        }
    }
    pub fn add(&self, o: &Self) -> Option<Self> {
        let m = self.unify(o)?;
        Some(ExactComplex::new(self.a.add(&o.a), self.b.add(&o.b), m))
    }
    pub fn neg(&self) -> Self {
        ExactComplex { a: self.a.neg(), b: self.b.neg(), m: self.m }
    }
    pub fn mul(&self, o: &Self) -> Option<Self> {
        let m = self.unify(o)?;
        let mrat = GaussRat::from_rat(rat_i64(m as i64));
        let a = self.a.mul(&o.a).add(&self.b.mul(&o.b).mul(&mrat));
        let b = self.a.mul(&o.b).add(&self.b.mul(&o.a));
        Some(ExactComplex::new(a, b, m))
    }
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.m == 0 {
            return Some(ExactComplex::from_gauss(self.a.inv()?));
        }
        // 1/(a+b√m) = (a−b√m)/(a²−b²m); the denominator is nonzero
        // because √m ∉ ℚ(i) for squarefree m ≥ 2.
        let mrat = GaussRat::from_rat(rat_i64(self.m as i64));
        let den = self.a.mul(&self.a).sub(&self.b.mul(&self.b).mul(&mrat));
        let d = den.inv()?;
        Some(ExactComplex::new(self.a.mul(&d), self.b.mul(&d).neg(), self.m))
    }

    /// Exact square root in ℚ(i) or ℚ(i)(√m) for a Gaussian-rational
    /// input (b = 0). Returns None when no representation exists.
    pub fn sqrt_exact(&self) -> Option<ExactComplex> {
        if !self.b.is_zero() {
            return None;
        }
        if let Some(s) = self.a.sqrt_in_field() {
            return Some(ExactComplex::from_gauss(s));
        }
        if self.a.is_real() {
            // r = sign · (p/q): √r = (√(pq)/q)·(1 or i) = (s/q)√m (·i)
            let r = &self.a.re;
            let pq = r.numer() * r.denom();
            let (s, m) = squarefree_decompose(&pq)?;
            let m_u = m.to_u64()?;
            let coef = Rat::new(s, r.denom().clone());
            let b = if r.is_negative() {
                GaussRat::new(Rat::zero(), coef)
            } else {
                GaussRat::new(coef, Rat::zero())
            };
            return Some(ExactComplex::new(GaussRat::zero(), b, m_u));
        }
        None
    }
}

// ---------------------------------------------------------------------
// ComplexScalar
// ---------------------------------------------------------------------

#[derive(Clone, Debug)]
pub enum ComplexScalar {
    Exact(ExactComplex),
    Float(C64),
}

use ComplexScalar::{Exact, Float};

impl ComplexScalar {
    pub fn zero() -> Self {
        Exact(ExactComplex::from_gauss(GaussRat::zero()))
    }
    pub fn one() -> Self {
        Exact(ExactComplex::from_gauss(GaussRat::one()))
    }
    pub fn i() -> Self {
        Exact(ExactComplex::from_gauss(GaussRat::i()))
    }
    pub fn from_int(n: i64) -> Self {
        Exact(ExactComplex::from_gauss(GaussRat::from_rat(rat_i64(n))))
    }
    pub fn from_frac(p: i64, q: i64) -> Self {
        Exact(ExactComplex::from_gauss(GaussRat::from_rat(rat_frac(p, q))))
    }
    pub fn from_rat(r: Rat) -> Self {
        Exact(ExactComplex::from_gauss(GaussRat::from_rat(r)))
    }
    pub fn from_gauss(re: Rat, im: Rat) -> Self {
        Exact(ExactComplex::from_gauss(GaussRat::new(re, im)))
    }
    pub fn from_gauss_i64(re: i64, im: i64) -> Self {
        Self::from_gauss(rat_i64(re), rat_i64(im))
    }
    pub fn from_f64(re: f64, im: f64) -> Self {
        Float(C64::new(re, im))
    }
    pub fn from_c64(z: C64) -> Self {
        Float(z)
    }
    /// b·√m with b Gaussian rational, m squarefree ≥ 2.
    pub fn from_sqrt_part(b: GaussRat, m: u64) -> Self {
        Exact(ExactComplex::new(GaussRat::zero(), b, m))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Exact(_))
    }
    pub fn is_zero(&self) -> bool {
        match self {
            Exact(e) => e.is_zero(),
            Float(z) => z.re == 0.0 && z.im == 0.0,
        }
    }
    pub fn is_real(&self) -> bool {
        match self {
            Exact(e) => e.is_real(),
            Float(z) => z.im == 0.0,
        }
    }
    pub fn to_c64(&self) -> C64 {
        match self {
            Exact(e) => e.to_c64(),
            Float(z) => *z,
        }
    }
    pub fn to_float(&self) -> Self {
        Float(self.to_c64())
    }
    pub fn conj(&self) -> Self {
        match self {
            Exact(e) => Exact(e.conj()),
            Float(z) => Float(z.conj()),
        }
    }
    pub fn abs(&self) -> f64 {
        self.to_c64().norm()
    }

    /// Exact equality for exact operands (same or unifiable extension);
    /// otherwise tolerance comparison with `eps`.
    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        if let (Exact(a), Exact(b)) = (self, other) {
            if a.unify(b).is_some() {
                return a == b;
            }
        }
        (self.to_c64() - other.to_c64()).norm() <= eps
    }

    /// Strict exact equality; false whenever either side is FLOAT.
    pub fn exact_eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Exact(a), Exact(b)) => a.unify(b).is_some() && a == b,
            _ => false,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            Exact(e) => e.inv().map(Exact),
            Float(z) => {
                if z.re == 0.0 && z.im == 0.0 {
                    None
                } else {
                    Some(Float(z.inv()))
                }
            }
        }
    }

    /// Exact square root when representable, else principal float root.
    pub fn sqrt(&self) -> Self {
        match self {
            Exact(e) => match e.sqrt_exact() {
                Some(s) => Exact(s),
                None => Float(e.to_c64().sqrt()),
            },
            Float(z) => Float(z.sqrt()),
        }
    }

    /// Exact Gaussian-rational view when the value lies in ℚ(i).
    pub fn as_gauss(&self) -> Option<&GaussRat> {
        match self {
            Exact(e) if e.m == 0 => Some(&e.a),
            _ => None,
        }
    }
    pub fn as_exact(&self) -> Option<&ExactComplex> {
        match self {
            Exact(e) => Some(e),
            _ => None,
        }
    }
    /// Exact rational view when the value lies in ℚ.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.as_gauss().filter(|g| g.is_real()).map(|g| &g.re)
    }

    fn binop(
        &self,
        other: &Self,
        exact: impl Fn(&ExactComplex, &ExactComplex) -> Option<ExactComplex>,
        float: impl Fn(C64, C64) -> C64,
    ) -> Self {
        if let (Exact(a), Exact(b)) = (self, other) {
            if let Some(v) = exact(a, b) {
                return Exact(v);
            }
        }
        Float(float(self.to_c64(), other.to_c64()))
    }
}

impl PartialEq for ComplexScalar {
    /// Equality is exact-vs-exact only; any FLOAT operand compares by
    /// bit-identical f64 parts (used for trailing-zero stripping, never
    /// for geometric decisions).
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Exact(a), Exact(b)) => a.unify(b).is_some() && a == b,
            _ => {
                let (x, y) = (self.to_c64(), other.to_c64());
                x.re == y.re && x.im == y.im
            }
        }
    }
}

impl Add for &ComplexScalar {
    type Output = ComplexScalar;
    fn add(self, rhs: &ComplexScalar) -> ComplexScalar {
        self.binop(rhs, |a, b| a.add(b), |a, b| a + b)
    }
}
impl Sub for &ComplexScalar {
    type Output = ComplexScalar;
    fn sub(self, rhs: &ComplexScalar) -> ComplexScalar {
        self.binop(rhs, |a, b| a.add(&b.neg()), |a, b| a - b)
    }
}
impl Mul for &ComplexScalar {
    type Output = ComplexScalar;
    fn mul(self, rhs: &ComplexScalar) -> ComplexScalar {
        self.binop(rhs, |a, b| a.mul(b), |a, b| a * b)
    }
}
impl Div for &ComplexScalar {
    type Output = ComplexScalar;
    fn div(self, rhs: &ComplexScalar) -> ComplexScalar {
        self.binop(
            rhs,
            |a, b| b.inv().and_then(|bi| a.mul(&bi)),
            |a, b| a / b,
        )
    }
}
impl Neg for &ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        match self {
            Exact(e) => Exact(e.neg()),
            Float(z) => Float(-z),
        }
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact(e) => {
                if e.m == 0 {
                    write!(f, "{}+{}i", e.a.re, e.a.im)
                } else {
                    write!(
                        f,
                        "{}+{}i+({}+{}i)sqrt({})",
                        e.a.re, e.a.im, e.b.re, e.b.im, e.m
                    )
                }
            }
            Float(z) => write!(f, "{:e}+{:e}i", z.re, z.im),
        }
    }
}
