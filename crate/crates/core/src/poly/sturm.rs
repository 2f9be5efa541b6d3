//! Real-rootedness through Sturm sequences.
//!
//! Everything stays in `Z[x]`: remainders are pseudo-remainders reduced to
//! their primitive parts, with the sign fixed up so that each chain element
//! is a positive multiple of the classical Sturm remainder.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use super::{integer_content, Poly, PolyError};

/// Outcome of a Sturm-sequence root count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmReport {
    pub degree: usize,
    /// Degree of `p / gcd(p, p')`.
    pub squarefree_degree: usize,
    /// Sign variations of the chain at `-inf`.
    pub variations_neg_inf: usize,
    /// Sign variations of the chain at `+inf`.
    pub variations_pos_inf: usize,
    pub chain_length: usize,
}

impl SturmReport {
    pub fn distinct_real_roots(&self) -> usize {
        self.variations_neg_inf - self.variations_pos_inf
    }

    /// All roots are real iff every distinct root is real.
    pub fn is_real_rooted(&self) -> bool {
        self.distinct_real_roots() == self.squarefree_degree
    }
}

/// Pseudo-remainder of `a` by `b`, scaled to a positive multiple of the
/// Euclidean remainder over `Q`.
fn signed_pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = 0u32;
    while r.len() > db && !r.is_empty() {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        for c in r[..top].iter_mut() {
            if !c.is_zero() {
                *c *= lb;
            }
        }
        for (i, bc) in b[..db].iter().enumerate() {
            if !bc.is_zero() {
                r[shift + i] -= &lr * bc;
            }
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        steps += 1;
    }
    if lb.is_negative() && steps % 2 == 1 {
        for c in r.iter_mut() {
            *c = -&*c;
        }
    }
    r
}

fn primitive_positive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let c = integer_content(&v);
    if c > BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &c;
        }
    }
    v
}

/// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = match a.coeffs.len().cmp(&b.coeffs.len()) {
        Ordering::Less => (b.coeffs.clone(), a.coeffs.clone()),
        _ => (a.coeffs.clone(), b.coeffs.clone()),
    };
    if a.is_empty() {
        return Poly::zero();
    }
    a = primitive_positive(a);
    b = primitive_positive(b);
    while !b.is_empty() {
        let r = signed_pseudo_remainder(&a, &b);
        a = b;
        b = primitive_positive(r);
    }
    let g = Poly::from_coeffs(a);
    if g.leading().is_some_and(Signed::is_negative) {
        -g
    } else {
        g
    }
}

impl Poly {
    /// `p / gcd(p, p')`, made primitive with a positive leading
    /// coefficient. Constants map to `1`.
    pub fn square_free_part(&self) -> Result<Poly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let p = self.primitive_part();
        let p = if p.leading().is_some_and(Signed::is_negative) {
            -p
        } else {
            p
        };
        if p.degree() == Some(0) {
            return Ok(Poly::one());
        }
        let g = gcd(&p, &p.derivative());
        Ok(p.exact_div(&g).expect("gcd divides its argument"))
    }

    /// Sturm chain of the square-free part, each entry primitive.
    pub fn sturm_chain(&self) -> Result<Vec<Poly>, PolyError> {
        let s = self.square_free_part()?;
        let mut chain = vec![s.coeffs.clone()];
        let d = primitive_positive(s.derivative().coeffs);
        if !d.is_empty() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = signed_pseudo_remainder(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            let next: Vec<BigInt> = primitive_positive(r).into_iter().map(|c| -c).collect();
            chain.push(next);
        }
        Ok(chain.into_iter().map(Poly::from_coeffs).collect())
    }

    /// Counts distinct real roots by sign variations of the Sturm chain at
    /// `-inf` and `+inf`.
    pub fn sturm_report(&self) -> Result<SturmReport, PolyError> {
        let degree = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        let chain = self.sturm_chain()?;
        let sign_at = |p: &Poly, neg: bool| {
            let lc = p.leading().expect("chain entries are nonzero").sign();
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if neg && odd {
                -lc
            } else {
                lc
            }
        };
        let variations = |neg: bool| {
            let signs: Vec<Sign> = chain.iter().map(|p| sign_at(p, neg)).collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        Ok(SturmReport {
            degree,
            squarefree_degree: chain[0].degree().unwrap_or(0),
            variations_neg_inf: variations(true),
            variations_pos_inf: variations(false),
            chain_length: chain.len(),
        })
    }

    /// True iff every complex root is real. Errors on the zero polynomial.
    pub fn is_real_rooted(&self) -> Result<bool, PolyError> {
        Ok(self.sturm_report()?.is_real_rooted())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn small_verdicts() {
        assert_eq!(p(&[1, 3, 1]).is_real_rooted(), Ok(true));
        assert_eq!(p(&[1, 1, 1]).is_real_rooted(), Ok(false));
        assert_eq!(p(&[1, 8, 20, 16, 1]).is_real_rooted(), Ok(true));
        assert_eq!(p(&[1, 2, 1]).is_real_rooted(), Ok(true));
        assert_eq!(p(&[7]).is_real_rooted(), Ok(true));
        assert_eq!(
            Poly::zero().is_real_rooted(),
            Err(PolyError::ZeroPolynomial)
        );
        // x^3 - x has roots -1, 0, 1
        assert_eq!(p(&[0, -1, 0, 1]).is_real_rooted(), Ok(true));
        // (x^2+1)(x-1)
        assert_eq!(p(&[-1, 1, -1, 1]).is_real_rooted(), Ok(false));
    }

    #[test]
    fn repeated_roots_are_not_false_negatives() {
        let base = &p(&[1, 1]) * &p(&[2, 1]);
        let q = &base.pow(4) * &p(&[1, 3, 1]).pow(3);
        assert_eq!(q.square_free_part().unwrap(), &base * &p(&[1, 3, 1]));
        let r = q.sturm_report().unwrap();
        assert_eq!(r.squarefree_degree, 4);
        assert_eq!(r.distinct_real_roots(), 4);
        assert!(r.is_real_rooted());
        let bad = &q * &p(&[1, 0, 1]).pow(2);
        assert_eq!(bad.sturm_report().unwrap().distinct_real_roots(), 4);
        assert_eq!(bad.is_real_rooted(), Ok(false));
    }

    #[test]
    fn negative_leading_coefficient() {
        // -(x-1)(x-2)(x-3)
        let q = -&(&(&p(&[-1, 1]) * &p(&[-2, 1])) * &p(&[-3, 1]));
        let r = q.sturm_report().unwrap();
        assert_eq!(r.distinct_real_roots(), 3);
        assert!(r.is_real_rooted());
    }

    #[test]
    fn gcd_examples() {
        let a = &p(&[1, 1]) * &p(&[3, 1]);
        let b = &p(&[1, 1]) * &p(&[5, 2]);
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(gcd(&a.scale(&BigInt::from(-6)), &b), p(&[1, 1]));
        assert_eq!(gcd(&p(&[1, 0, 1]), &p(&[0, 1])), p(&[1]));
        assert_eq!(gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
        assert_eq!(gcd(&Poly::zero(), &p(&[-2, -4])), p(&[1, 2]));
    }
}
