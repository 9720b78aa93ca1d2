//! Per-shift checks of perfectness and the acyclic bounds for LM sequences.
//!
//! Shifts split by whether `L | k`. For `k = qL` the acyclic sum collapses to
//! a single geometric sum of `zeta_M^q`; otherwise (`k = qL + k1`) it is a sum
//! of two products of geometric sums, one over the first `k2 = L - k1`
//! positions of each block and one over the rest.

use rayon::prelude::*;
use serde::Serialize;

use super::report::{CheckReport, Violation};
use crate::correlation::{acyclic_term_sum, cyclic_term_sum};
use crate::error::{Error, Result};
use crate::exactalg::{csc_bound, delta, geometric_root_sum, RootSum};
use crate::seqcore::{lm_sequence, roots_table, PhaseSeq, SeqParams};
use crate::tolerance::BOUND_SLACK;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShiftDecomposition {
    /// `k = qL`, `N - k = rL`, `q + r = M`.
    Multiple { k: usize, q: usize, r: usize },
    /// `k = qL + k1`, `N - k = rL + k2`, `k1 + k2 = L`, `q + r = M - 1`.
    Nonmultiple {
        k: usize,
        q: usize,
        r: usize,
        k1: usize,
        k2: usize,
    },
}

impl ShiftDecomposition {
    pub fn k(&self) -> usize {
        match *self {
            ShiftDecomposition::Multiple { k, .. } | ShiftDecomposition::Nonmultiple { k, .. } => k,
        }
    }

    pub fn is_multiple(&self) -> bool {
        matches!(self, ShiftDecomposition::Multiple { .. })
    }

    /// `q + 1`; only meaningful for the nonmultiple case.
    pub fn qt(&self) -> Option<usize> {
        match *self {
            ShiftDecomposition::Nonmultiple { q, .. } => Some(q + 1),
            ShiftDecomposition::Multiple { .. } => None,
        }
    }
}

pub fn decompose_shift(k: i64, params: &SeqParams) -> Result<ShiftDecomposition> {
    let (l, n) = (params.l(), params.n());
    if k < 1 || k as u64 >= n as u64 {
        return Err(Error::OutOfRange { k, max: n - 1 });
    }
    let k = k as usize;
    let (q, k1) = (k / l, k % l);
    let (r, k2) = ((n - k) / l, (n - k) % l);
    Ok(if k1 == 0 {
        ShiftDecomposition::Multiple { k, q, r }
    } else {
        ShiftDecomposition::Nonmultiple { k, q, r, k1, k2 }
    })
}

/// `sum_{j=a}^{b-1} zeta_M^{c*j}` written over `zeta_{2M}`; empty ranges give zero.
fn half_order_sum(c: i64, m: usize, a: usize, b: usize) -> RootSum {
    if a >= b {
        return RootSum::zero(2 * m);
    }
    geometric_root_sum(c, m, a as i64, b as i64)
        .expect("nonempty range")
        .lift(2)
}

fn prop41_shift(seq: &PhaseSeq, params: &SeqParams, k: usize, table: &[num_complex::Complex64]) -> Vec<Violation> {
    let (l, m, n, a) = (params.l() as i64, params.m(), params.n(), params.a() as i128);
    let mut out = Vec::new();
    let (q, r) = match decompose_shift(k as i64, params) {
        Ok(ShiftDecomposition::Multiple { q, r, .. }) => (q, r),
        other => {
            out.push(Violation::at(k, format!("expected a multiple of L, got {other:?}")));
            return out;
        }
    };
    if !cyclic_term_sum(seq, k).is_zero() {
        out.push(Violation::at(k, "gamma_k is not zero"));
    }
    let alpha = acyclic_term_sum(seq, k);
    // alpha_k = zeta_{2M}^{c1} * sum_{j < rL} zeta_M^{q j}, c1 = L q^2 + A q
    let c1 = (l as i128 * (q * q) as i128 + a * q as i128).rem_euclid(2 * m as i128) as i64;
    let collapsed = half_order_sum(q as i64, m, 0, r * l as usize).rotate(c1);
    if collapsed != alpha {
        out.push(Violation::at(k, "alpha_k differs from its single geometric-sum form"));
    }
    let mag = alpha.eval_with(table).norm();
    let csc = csc_bound(k as i64, n).expect("0 < k < N").exact;
    if mag > csc + BOUND_SLACK {
        out.push(Violation::at(k, format!("|alpha_k| = {mag} > csc(pi k/N) = {csc}")));
    }
    let half_root = (n as f64 / 2.0).sqrt();
    if mag > half_root + BOUND_SLACK {
        out.push(Violation::at(k, format!("|alpha_k| = {mag} > sqrt(N/2) = {half_root}")));
    }
    out
}

/// Shifts `k = qL`: exact `gamma_k = 0`, `|alpha_k| <= csc(pi k/N)` and
/// `|alpha_k| <= sqrt(N/2)`, plus the exact collapse of `alpha_k` to one
/// geometric sum.
pub fn check_prop41(params: &SeqParams) -> CheckReport {
    let seq = lm_sequence(params);
    let table = roots_table(seq.modulus());
    let (l, n) = (params.l(), params.n());
    let shifts: Vec<usize> = (l..n).step_by(l).collect();
    let violations = shifts
        .par_iter()
        .flat_map_iter(|&k| prop41_shift(&seq, params, k, &table))
        .collect();
    CheckReport {
        check: "prop41",
        cases: shifts.len(),
        violations,
    }
}

/// Outcome of [`check_prop42`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Prop42Report {
    pub report: CheckReport,
    /// Shifts where `|alpha_k|` equals the two-product magnitude sum.
    pub tight_shifts: Vec<usize>,
    /// Shifts where `|alpha_k|` is strictly below it.
    pub strict_shifts: Vec<usize>,
}

impl Prop42Report {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

struct Prop42Shift {
    violations: Vec<Violation>,
    tight: bool,
}

fn prop42_shift(seq: &PhaseSeq, params: &SeqParams, k: usize, table: &[num_complex::Complex64]) -> Prop42Shift {
    let (l, m, n) = (params.l(), params.m(), params.n());
    let a = params.a() as i128;
    let mut out = Vec::new();
    let (q, r, k1, k2) = match decompose_shift(k as i64, params) {
        Ok(ShiftDecomposition::Nonmultiple { q, r, k1, k2, .. }) => (q, r, k1, k2),
        other => {
            out.push(Violation::at(k, format!("expected a nonmultiple of L, got {other:?}")));
            return Prop42Shift {
                violations: out,
                tight: false,
            };
        }
    };
    let qt = q + 1;
    if !cyclic_term_sum(seq, k).is_zero() {
        out.push(Violation::at(k, "gamma_k is not zero"));
    }
    let alpha = acyclic_term_sum(seq, k);
    let mag = alpha.eval_with(table).norm();

    // alpha_k = zeta^{c2} S_i(r+1) S_j(q; 0..k2) + zeta^{c3} S_i(r) S_j(q~; k2..L)
    let d = 2 * m as i128;
    let (qi, qti, k1i, k2i, li) = (q as i128, qt as i128, k1 as i128, k2 as i128, l as i128);
    let c2 = (2 * qi * k1i + li * qi * qi + a * qi).rem_euclid(d) as i64;
    let c3 = (-2 * qti * k2i + li * qti * qti + a * qti).rem_euclid(d) as i64;
    let outer_long = half_order_sum(k as i64, m, 0, r + 1);
    let outer_short = half_order_sum(k as i64, m, 0, r);
    let inner_head = half_order_sum(q as i64, m, 0, k2);
    let inner_tail = half_order_sum(qt as i64, m, k2, l);
    let first = outer_long.checked_mul(&inner_head).unwrap().rotate(c2);
    let second = outer_short.checked_mul(&inner_tail).unwrap().rotate(c3);
    let recombined = first.checked_add(&second).unwrap();
    if !recombined.value_eq(&alpha).unwrap() {
        out.push(Violation::at(k, "alpha_k differs from its two-product form"));
    }

    let norm = |s: &RootSum| s.eval_with(table).norm();
    let product_bound = norm(&outer_long) * norm(&inner_head) + norm(&outer_short) * norm(&inner_tail);
    let tol = BOUND_SLACK * n as f64;
    if mag > product_bound + tol {
        out.push(Violation::at(k, format!("|alpha_k| = {mag} exceeds two-product sum {product_bound}")));
    }
    let tight = (product_bound - mag).abs() <= tol;

    if l == m {
        if q == 0 {
            if mag > k as f64 + BOUND_SLACK {
                out.push(Violation::at(k, format!("|alpha_k| = {mag} > k")));
            }
        } else if q == m - 1 {
            if mag > (n - k) as f64 + BOUND_SLACK {
                out.push(Violation::at(k, format!("|alpha_k| = {mag} > N - k")));
            }
        } else {
            let kp = k1.min(k2);
            if delta(k as u64, m as u64) as usize != kp || delta(k as u64, l as u64) as usize != kp {
                out.push(Violation::at(k, "delta(k, M) != min(k1, k2)"));
            }
            for (name, s) in [("head", &inner_head), ("tail", &inner_tail)] {
                if norm(s) > kp as f64 + BOUND_SLACK {
                    out.push(Violation::at(k, format!("inner {name} sum {} > min(k1, k2) = {kp}", norm(s))));
                }
            }
            let csc = csc_bound(k as i64, m).expect("k is not a multiple of M");
            for s in [&outer_long, &outer_short] {
                if norm(s) > csc.exact + BOUND_SLACK || csc.exact > csc.coarse + BOUND_SLACK {
                    out.push(Violation::at(k, format!("outer sum {} breaks csc bound {:?}", norm(s), csc)));
                }
            }
        }
        if mag > m as f64 + BOUND_SLACK {
            out.push(Violation::at(k, format!("|alpha_k| = {mag} > M = {m}")));
        }
    }
    Prop42Shift {
        violations: out,
        tight,
    }
}

/// Shifts `L ∤ k`: exact `gamma_k = 0`, the exact two-product form of
/// `alpha_k`, `|alpha_k|` against the two-product magnitude sum, and for
/// `L = M` the bound `|alpha_k| <= M` through the same case split as its proof.
pub fn check_prop42(params: &SeqParams) -> Result<Prop42Report> {
    let (l, n) = (params.l(), params.n());
    if l < 2 {
        return Err(Error::InvalidArgument(
            "L = 1 has no shifts that are nonmultiples of L".into(),
        ));
    }
    let seq = lm_sequence(params);
    let table = roots_table(seq.modulus());
    let shifts: Vec<usize> = (1..n).filter(|k| k % l != 0).collect();
    let results: Vec<Prop42Shift> = shifts
        .par_iter()
        .map(|&k| prop42_shift(&seq, params, k, &table))
        .collect();
    let mut report = Prop42Report {
        report: CheckReport {
            check: "prop42",
            cases: shifts.len(),
            violations: Vec::new(),
        },
        tight_shifts: Vec::new(),
        strict_shifts: Vec::new(),
    };
    for (&k, res) in shifts.iter().zip(results) {
        report.report.violations.extend(res.violations);
        if res.tight {
            report.tight_shifts.push(k);
        } else {
            report.strict_shifts.push(k);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::acyclic_autocorr;
    use crate::seqcore::validate_params;

    #[test]
    fn decomposition_examples() {
        let p = validate_params(2, 4, 0).unwrap();
        assert_eq!(
            decompose_shift(4, &p).unwrap(),
            ShiftDecomposition::Multiple { k: 4, q: 2, r: 2 }
        );
        let d = decompose_shift(3, &p).unwrap();
        assert_eq!(
            d,
            ShiftDecomposition::Nonmultiple {
                k: 3,
                q: 1,
                r: 2,
                k1: 1,
                k2: 1
            }
        );
        assert_eq!(d.qt(), Some(2));
        assert!(matches!(decompose_shift(0, &p), Err(Error::OutOfRange { .. })));
        assert!(matches!(decompose_shift(8, &p), Err(Error::OutOfRange { .. })));
        assert!(matches!(decompose_shift(-3, &p), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn decomposition_round_trips() {
        for (l, m) in [(1, 5), (2, 6), (3, 9), (4, 8), (5, 5)] {
            let p = validate_params(l, m, (l * m) % 2).unwrap();
            let (l, m, n) = (p.l(), p.m(), p.n());
            for k in 1..n {
                match decompose_shift(k as i64, &p).unwrap() {
                    ShiftDecomposition::Multiple { q, r, .. } => {
                        assert_eq!((q * l, r * l, q + r), (k, n - k, m));
                        assert!((1..m).contains(&q));
                    }
                    ShiftDecomposition::Nonmultiple { q, r, k1, k2, .. } => {
                        assert_eq!((q * l + k1, r * l + k2, k1 + k2, q + r), (k, n - k, l, m - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn prop41_examples() {
        for (l, m, a) in [(1, 4, 0), (2, 4, 0), (2, 2, 2)] {
            let rep = check_prop41(&validate_params(l, m, a).unwrap());
            assert!(rep.passed(), "{rep:?}");
        }
        // k=2 of lm(2,4,0): |alpha_2| <= csc(pi/4)
        let seq = lm_sequence(&validate_params(2, 4, 0).unwrap());
        let a2 = acyclic_autocorr(&seq).values()[2].norm();
        assert!(a2 <= 2f64.sqrt() + 1e-9);
        let seq = lm_sequence(&validate_params(2, 2, 2).unwrap());
        assert!(acyclic_autocorr(&seq).values()[2].norm() < 1e-12);
    }

    #[test]
    fn prop42_examples() {
        let rep = check_prop42(&validate_params(2, 2, 2).unwrap()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.report.cases, 2);
        let rep = check_prop42(&validate_params(3, 3, 3).unwrap()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.report.cases, 6);
        let rep = check_prop42(&validate_params(2, 4, 0).unwrap()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.report.cases, 4);
        assert_eq!(rep.tight_shifts.len() + rep.strict_shifts.len(), 4);
        assert!(check_prop42(&validate_params(1, 4, 0).unwrap()).is_err());
    }
}
