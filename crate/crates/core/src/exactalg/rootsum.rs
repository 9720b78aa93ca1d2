//! Formal integer combinations of `D`-th roots of unity.

use num_bigint::BigInt;
use num_complex::Complex64;

use super::cyclotomic::{cyclotomic_poly, cyclotomic_small};
use crate::error::{Error, Result};
use crate::seqcore::roots_table;

/// `sum_e counts[e] * zeta_D^e`.
///
/// Equality (`==`) is formal: two sums are equal when their multiplicities
/// agree. Use [`RootSum::is_zero`] or [`RootSum::value_eq`] to compare the
/// complex numbers they denote.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSum {
    order: usize,
    counts: Vec<i64>,
}

impl RootSum {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "root order must be positive");
        RootSum {
            order,
            counts: vec![0; order],
        }
    }

    pub fn from_counts(order: usize, counts: Vec<i64>) -> Result<Self> {
        if order == 0 || counts.len() != order {
            return Err(Error::InvalidArgument(format!(
                "expected {order} multiplicities, got {}",
                counts.len()
            )));
        }
        Ok(RootSum { order, counts })
    }

    /// One term per exponent; exponents are reduced modulo `order`.
    pub fn from_exponents(order: usize, exps: impl IntoIterator<Item = i64>) -> Self {
        let mut s = RootSum::zero(order);
        for e in exps {
            s.add_term(e, 1);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    /// Adds `mult * zeta_D^exp`.
    pub fn add_term(&mut self, exp: i64, mult: i64) {
        let e = exp.rem_euclid(self.order as i64) as usize;
        self.counts[e] += mult;
    }

    /// Number of unit terms when all multiplicities are nonnegative.
    pub fn term_count(&self) -> i64 {
        self.counts.iter().sum()
    }

    fn same_order(&self, other: &RootSum) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &RootSum) -> Result<RootSum> {
        self.same_order(other)?;
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect();
        Ok(RootSum {
            order: self.order,
            counts,
        })
    }

    pub fn checked_sub(&self, other: &RootSum) -> Result<RootSum> {
        self.same_order(other)?;
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a - b).collect();
        Ok(RootSum {
            order: self.order,
            counts,
        })
    }

    /// Product of two sums over the same root order (cyclic convolution of exponents).
    pub fn checked_mul(&self, other: &RootSum) -> Result<RootSum> {
        self.same_order(other)?;
        let d = self.order;
        let mut counts = vec![0i64; d];
        for (i, &a) in self.counts.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in other.counts.iter().enumerate().filter(|(_, &b)| b != 0) {
                counts[(i + j) % d] += a * b;
            }
        }
        Ok(RootSum { order: d, counts })
    }

    /// Multiplies by `zeta_D^exp`.
    pub fn rotate(&self, exp: i64) -> RootSum {
        let d = self.order;
        let shift = exp.rem_euclid(d as i64) as usize;
        let mut counts = vec![0i64; d];
        for (e, &c) in self.counts.iter().enumerate() {
            counts[(e + shift) % d] = c;
        }
        RootSum { order: d, counts }
    }

    pub fn conj(&self) -> RootSum {
        let d = self.order;
        let mut counts = vec![0i64; d];
        for (e, &c) in self.counts.iter().enumerate() {
            counts[(d - e) % d] = c;
        }
        RootSum { order: d, counts }
    }

    /// Rewrites a sum over `zeta_D` as one over `zeta_{factor*D}`, using
    /// `zeta_D = zeta_{factor*D}^factor`.
    pub fn lift(&self, factor: usize) -> RootSum {
        assert!(factor >= 1, "lift factor must be positive");
        let mut counts = vec![0i64; self.order * factor];
        for (e, &c) in self.counts.iter().enumerate() {
            counts[e * factor] = c;
        }
        RootSum {
            order: self.order * factor,
            counts,
        }
    }

    pub fn eval(&self) -> Complex64 {
        self.eval_with(&roots_table(self.order))
    }

    /// Evaluates with a precomputed `zeta_D^e` table.
    pub fn eval_with(&self, table: &[Complex64]) -> Complex64 {
        debug_assert_eq!(table.len(), self.order);
        self.counts
            .iter()
            .zip(table)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, z)| z * c as f64)
            .sum()
    }

    /// Exact test for `sum = 0` in the complex numbers.
    pub fn is_zero(&self) -> bool {
        rootsum_is_zero(self)
    }

    /// Whether both sums denote the same complex number.
    pub fn value_eq(&self, other: &RootSum) -> Result<bool> {
        Ok(self == other || self.checked_sub(other)?.is_zero())
    }
}

/// Decides `sum_e counts[e] * zeta_D^e == 0` by reducing the exponent
/// polynomial modulo `Phi_D` and testing the remainder.
///
/// Machine arithmetic is used while it cannot overflow; any overflow restarts
/// the reduction with arbitrary-precision integers.
///
/// # Panics
///
/// If the root order exceeds [`CYCLOTOMIC_MAX_ORDER`](super::CYCLOTOMIC_MAX_ORDER).
pub fn rootsum_is_zero(s: &RootSum) -> bool {
    if s.counts.iter().all(|&c| c == 0) {
        return true;
    }
    let small = cyclotomic_small(s.order).expect("root order within cyclotomic range");
    if let Some(phi) = small {
        if let Some(verdict) = reduce_small(&s.counts, &phi) {
            return verdict;
        }
    }
    reduce_big(s)
}

fn reduce_small(counts: &[i64], phi: &[i64]) -> Option<bool> {
    let deg = phi.len() - 1;
    let mut buf: Vec<i128> = counts.iter().map(|&c| c as i128).collect();
    for top in (deg..buf.len()).rev() {
        let c = std::mem::take(&mut buf[top]);
        if c == 0 {
            continue;
        }
        for (i, &p) in phi[..deg].iter().enumerate() {
            if p != 0 {
                let slot = &mut buf[top - deg + i];
                *slot = slot.checked_sub(c.checked_mul(p as i128)?)?;
            }
        }
    }
    Some(buf[..deg.min(buf.len())].iter().all(|&c| c == 0))
}

fn reduce_big(s: &RootSum) -> bool {
    use super::cyclotomic::IntPolynomial;
    let phi = cyclotomic_poly(s.order).expect("root order within cyclotomic range");
    let poly = IntPolynomial::new(s.counts.iter().map(|&c| BigInt::from(c)).collect());
    poly.div_rem_monic(&phi).1.is_zero()
}

/// `sum_{j=a}^{b-1} zeta_D^{k*j}` as a formal sum.
pub fn geometric_root_sum(k: i64, order: usize, a: i64, b: i64) -> Result<RootSum> {
    if order == 0 {
        return Err(Error::InvalidArgument("root order must be positive".into()));
    }
    if a >= b {
        return Err(Error::InvalidArgument(format!("empty range [{a}, {b})")));
    }
    let d = order as i128;
    let mut s = RootSum::zero(order);
    for j in a..b {
        let e = (k as i128 * j as i128).rem_euclid(d) as usize;
        s.counts[e] += 1;
    }
    Ok(s)
}
