//! Integer polynomials and cyclotomic polynomials.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest order accepted by [`cyclotomic_poly`].
pub const CYCLOTOMIC_MAX_ORDER: usize = 4096;

/// Dense integer polynomial, coefficients in ascending degree. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += BigInt::one();
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// Long division by a monic divisor; stays in the integers.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (IntPolynomial::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[top]);
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[top - dd + i] -= &c * d;
            }
            quot[top - dd] = c;
        }
        rem.truncate(dd);
        (IntPolynomial::new(quot), IntPolynomial::new(rem))
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Coefficients as `i64` when every one of them fits.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (deg, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{deg}")?,
                (_, false) => write!(f, "{mag}x^{deg}")?,
            }
        }
        Ok(())
    }
}

struct CacheEntry {
    poly: Arc<IntPolynomial>,
    small: Option<Arc<[i64]>>,
}

fn cache() -> &'static RwLock<HashMap<usize, CacheEntry>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, CacheEntry>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached_entry(n: usize) -> Result<(Arc<IntPolynomial>, Option<Arc<[i64]>>)> {
    if n == 0 || n > CYCLOTOMIC_MAX_ORDER {
        return Err(Error::CyclotomicOrder {
            n,
            max: CYCLOTOMIC_MAX_ORDER,
        });
    }
    if let Some(e) = cache().read().unwrap().get(&n) {
        return Ok((e.poly.clone(), e.small.clone()));
    }
    // x^n - 1 = prod_{d | n} Phi_d(x); divide out every proper divisor.
    let mut poly = IntPolynomial::x_pow_minus_one(n);
    for d in (1..n).filter(|d| n % d == 0) {
        let (phi_d, _) = cached_entry(d)?;
        let (q, r) = poly.div_rem_monic(&phi_d);
        debug_assert!(r.is_zero(), "Phi_{d} does not divide x^{n} - 1");
        poly = q;
    }
    let poly = Arc::new(poly);
    let small: Option<Arc<[i64]>> = poly.to_i64().map(Into::into);
    // Entries are deterministic, so a concurrent writer inserting the same n is harmless.
    cache().write().unwrap().insert(
        n,
        CacheEntry {
            poly: poly.clone(),
            small: small.clone(),
        },
    );
    Ok((poly, small))
}

/// The `n`-th cyclotomic polynomial, memoized.
pub fn cyclotomic_poly(n: usize) -> Result<Arc<IntPolynomial>> {
    cached_entry(n).map(|(p, _)| p)
}

/// Coefficients of `Phi_n` as machine integers, if they all fit.
pub(crate) fn cyclotomic_small(n: usize) -> Result<Option<Arc<[i64]>>> {
    cached_entry(n).map(|(_, s)| s)
}

pub fn euler_totient(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(*cyclotomic_poly(1).unwrap(), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(2).unwrap(), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(*cyclotomic_poly(4).unwrap(), IntPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(*cyclotomic_poly(6).unwrap(), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(6).unwrap().to_string(), "x^2 - x + 1");
        assert_eq!(
            *cyclotomic_poly(12).unwrap(),
            IntPolynomial::from_i64(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn first_coefficient_beyond_one_appears_at_105() {
        let phi = cyclotomic_poly(105).unwrap();
        assert_eq!(phi.max_abs_coeff(), BigInt::from(2));
        assert_eq!(phi.coeffs()[7], BigInt::from(-2));
        for n in 1..105 {
            assert!(cyclotomic_poly(n).unwrap().max_abs_coeff() <= BigInt::one(), "n={n}");
        }
    }

    #[test]
    fn degrees_are_totients() {
        for n in 1..=300 {
            let phi = cyclotomic_poly(n).unwrap();
            assert!(phi.is_monic());
            assert_eq!(phi.degree(), Some(euler_totient(n)), "n={n}");
        }
    }

    #[test]
    fn divisor_product_is_x_pow_minus_one() {
        for n in 1..=256 {
            let prod = (1..=n)
                .filter(|d| n % d == 0)
                .fold(IntPolynomial::one(), |acc, d| acc.mul(&cyclotomic_poly(d).unwrap()));
            assert_eq!(prod, IntPolynomial::x_pow_minus_one(n), "n={n}");
        }
    }

    #[test]
    fn order_bounds() {
        assert!(matches!(cyclotomic_poly(0), Err(Error::CyclotomicOrder { .. })));
        assert!(cyclotomic_poly(CYCLOTOMIC_MAX_ORDER + 1).is_err());
    }

    #[test]
    fn division_remainder() {
        // (x^3 + 2x + 5) = (x^2 + 1)(x) + (x + 5)
        let (q, r) = IntPolynomial::from_i64(&[5, 2, 0, 1])
            .div_rem_monic(&IntPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(q, IntPolynomial::from_i64(&[0, 1]));
        assert_eq!(r, IntPolynomial::from_i64(&[5, 1]));
    }
}
