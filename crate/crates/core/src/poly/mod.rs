//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.

mod rational;
mod sturm;

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use rational::RationalPoly;
pub use sturm::{gcd, SturmReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible: {0}")]
    NotDivisible(NotDivisible),
    #[error("coefficient of x^{index} is negative")]
    NegativeCoefficient { index: usize },
    #[error("invalid polynomial JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotDivisible {
    /// The division over the rationals leaves a nonzero remainder.
    Remainder,
    /// The rational quotient exists but has a non-integer coefficient.
    NonIntegerQuotient,
}

impl fmt::Display for NotDivisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotDivisible::Remainder => f.write_str("nonzero remainder"),
            NotDivisible::NonIntegerQuotient => {
                f.write_str("quotient has non-integer coefficients")
            }
        }
    }
}

/// `coeffs[k]` is the coefficient of `x^k`; the last entry is nonzero, and
/// the zero polynomial has no entries.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

/// Below this many terms in the shorter factor, schoolbook multiplication
/// beats packing into a single integer.
const KRONECKER_THRESHOLD: usize = 24;

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(a + b x)^n`.
    pub fn binomial_power(a: i64, b: i64, n: u32) -> Self {
        Self::from_i64s(&[a, b]).pow(n)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// `x · p`.
    pub fn shift_mul_x(&self) -> Self {
        self.shift(1)
    }

    /// `x^k · p`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Sum of coefficients, i.e. the value at 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        integer_content(&self.coeffs)
    }

    /// `p / content(p)`, with the sign of the leading coefficient kept.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Returns `q` with `self = divisor · q` when such a `q` exists in
    /// `Z[x]`.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        let d_deg = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let fail = || {
            let (_, r) = RationalPoly::from(self).div_rem(&RationalPoly::from(divisor));
            let reason = if r.is_zero() {
                NotDivisible::NonIntegerQuotient
            } else {
                NotDivisible::Remainder
            };
            Err(PolyError::NotDivisible(reason))
        };
        let n = self.coeffs.len() - 1;
        if n < d_deg {
            return fail();
        }
        let lead = &divisor.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d_deg + 1];
        for k in (d_deg..=n).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (q, r) = rem[k].div_rem(lead);
            if !r.is_zero() {
                return fail();
            }
            let shift = k - d_deg;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[shift + i] -= &q * d;
                }
            }
            quot[shift] = q;
        }
        if rem[..d_deg].iter().any(|c| !c.is_zero()) {
            return fail();
        }
        Ok(Poly::from_coeffs(quot))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.exact_div(self).is_ok()
    }

    /// Decimal-string coefficient array, e.g. `["1","3","1"]`.
    pub fn to_json(&self) -> String {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        serde_json::to_string(&strings).expect("string array serializes")
    }

    /// Accepts an array of decimal strings or JSON integers.
    pub fn from_json(text: &str) -> Result<Poly, PolyError> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| PolyError::Json(e.to_string()))?;
        let items = value
            .as_array()
            .ok_or_else(|| PolyError::Json("expected an array".into()))?;
        let coeffs = items
            .iter()
            .map(|item| {
                let text = match item {
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                    other => return Err(PolyError::Json(format!("not an integer: {other}"))),
                };
                text.trim()
                    .parse::<BigInt>()
                    .map_err(|_| PolyError::Json(format!("not an integer: {text:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Checks `b_i^2 >= b_{i-1} b_{i+1}` for every interior index.
    pub fn is_log_concave(&self) -> Result<bool, PolyError> {
        self.require_nonnegative()?;
        Ok(self
            .coeffs
            .windows(3)
            .all(|w| &w[1] * &w[1] >= &w[0] * &w[2]))
    }

    /// Checks that the coefficient sequence rises weakly to a peak and then
    /// falls weakly.
    pub fn is_unimodal(&self) -> Result<bool, PolyError> {
        self.require_nonnegative()?;
        let c = &self.coeffs;
        let mut i = 1;
        while i < c.len() && c[i - 1] <= c[i] {
            i += 1;
        }
        while i < c.len() && c[i - 1] >= c[i] {
            i += 1;
        }
        Ok(i >= c.len())
    }

    fn require_nonnegative(&self) -> Result<(), PolyError> {
        match self.coeffs.iter().position(Signed::is_negative) {
            Some(index) => Err(PolyError::NegativeCoefficient { index }),
            None => Ok(()),
        }
    }
}

/// Gcd of a coefficient list, starting from the smallest entry so the
/// running value shrinks early.
pub(crate) fn integer_content(coeffs: &[BigInt]) -> BigInt {
    let Some(start) = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .min_by_key(|c| c.bits())
    else {
        return BigInt::zero();
    };
    let mut g = start.abs();
    for c in coeffs {
        if g.is_one() {
            break;
        }
        if c.is_zero() {
            continue;
        }
        let r = c.mod_floor(&g);
        g = g.gcd(&r);
    }
    g
}

fn mul_schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Product of two polynomials with nonnegative coefficients through a
/// single big-integer multiplication (Kronecker substitution). Each
/// coefficient gets a slot of whole 32-bit digits wide enough that no
/// product coefficient overflows into its neighbour.
fn mul_kronecker(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let max_bits = |v: &[BigUint]| v.iter().map(|c| c.bits()).max().unwrap_or(0);
    let terms = a.len().min(b.len()) as u64;
    let slot_bits = max_bits(a) + max_bits(b) + (64 - terms.leading_zeros() as u64) + 1;
    let slot = slot_bits.div_ceil(32) as usize;
    let pack = |v: &[BigUint]| {
        let mut digits = vec![0u32; v.len() * slot];
        for (i, c) in v.iter().enumerate() {
            for (j, d) in c.iter_u32_digits().enumerate() {
                digits[i * slot + j] = d;
            }
        }
        BigUint::new(digits)
    };
    let product = pack(a) * pack(b);
    let digits = product.to_u32_digits();
    let n = a.len() + b.len() - 1;
    (0..n)
        .map(|i| {
            let lo = (i * slot).min(digits.len());
            let hi = ((i + 1) * slot).min(digits.len());
            BigUint::new(digits[lo..hi].to_vec())
        })
        .collect()
}

/// Splits into nonnegative parts `p = plus - minus`.
fn split_signs(v: &[BigInt]) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut plus = Vec::with_capacity(v.len());
    let mut minus = Vec::with_capacity(v.len());
    for c in v {
        match c.sign() {
            Sign::Minus => {
                plus.push(BigUint::zero());
                minus.push(c.magnitude().clone());
            }
            _ => {
                plus.push(c.magnitude().clone());
                minus.push(BigUint::zero());
            }
        }
    }
    (plus, minus)
}

fn mul_coeffs(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < KRONECKER_THRESHOLD {
        return mul_schoolbook(a, b);
    }
    let (ap, am) = split_signs(a);
    let (bp, bm) = split_signs(b);
    let nonzero = |v: &[BigUint]| v.iter().any(|c| !c.is_zero());
    let n = a.len() + b.len() - 1;
    let mut out = vec![BigInt::zero(); n];
    let mut accumulate = |x: &[BigUint], y: &[BigUint], sign: Sign| {
        if nonzero(x) && nonzero(y) {
            for (o, c) in out.iter_mut().zip(mul_kronecker(x, y)) {
                *o += BigInt::from_biguint(sign, c);
            }
        }
    };
    accumulate(&ap, &bp, Sign::Plus);
    accumulate(&am, &bm, Sign::Plus);
    accumulate(&ap, &bm, Sign::Minus);
    accumulate(&am, &bp, Sign::Minus);
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::from_coeffs(mul_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |a, b| &a + &b)
    }
}

impl Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |a, b| &a * &b)
    }
}

impl<'a> Product<&'a Poly> for Poly {
    fn product<I: Iterator<Item = &'a Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |a, b| &a * b)
    }
}

/// Renders `c0 + c1*x + c2*x^2 + ...`, omitting zero terms.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*x")?,
                _ => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
