use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::Poly;

/// Polynomial over the rationals. Only used where a division has to be
/// carried out over `Q` rather than `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Euclidean division over `Q`.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &RationalPoly) -> (RationalPoly, RationalPoly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = &divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (RationalPoly::from_coeffs(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k - d + i] -= &q * c;
            }
            quot[k - d] = q;
        }
        rem.truncate(d);
        (
            RationalPoly::from_coeffs(quot),
            RationalPoly::from_coeffs(rem),
        )
    }

    /// The same polynomial in `Z[x]`, if every coefficient is an integer.
    pub fn to_integer_poly(&self) -> Option<Poly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<BigInt>>>()
            .map(Poly::from_coeffs)
    }
}

impl From<&Poly> for RationalPoly {
    fn from(p: &Poly) -> Self {
        Self {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}
