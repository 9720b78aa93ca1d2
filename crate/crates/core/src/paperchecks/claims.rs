//! Closed forms of the phase difference `p(j+k) - p(j)` inside one block,
//! checked over the integers with no modular reduction.
//!
//! With `j = iL + t` and `k = qL + k1`:
//! - `k1 = 0`: `2qj + Lq^2 + Aq`
//! - `t < k2`: `2ik1 + 2qj + 2qk1 + Lq^2 + Aq`
//! - `t >= k2`: `-2ik2 + 2q~j - 2q~k2 + Lq~^2 + Aq~` with `q~ = q + 1`

use super::report::{CheckReport, Violation};
use crate::error::{Error, Result};
use crate::seqcore::{phase_polynomial, SeqParams};

fn check_range(
    params: &SeqParams,
    k: usize,
    name: &'static str,
    offsets: std::ops::Range<usize>,
    expected: impl Fn(i128, i128) -> i128,
) -> CheckReport {
    let (l, m) = (params.l(), params.m());
    let mut report = CheckReport {
        check: name,
        cases: 0,
        violations: Vec::new(),
    };
    for i in 0..m {
        for j in offsets.clone().map(|t| i * l + t) {
            report.cases += 1;
            let lhs = phase_polynomial(j + k, params) - phase_polynomial(j, params);
            let rhs = expected(i as i128, j as i128);
            if lhs != rhs {
                report.violations.push(Violation::at(
                    k,
                    format!("i={i}, j={j}: p(j+k)-p(j) = {lhs}, closed form gives {rhs}"),
                ));
            }
        }
    }
    report
}

fn check_nonmultiple(params: &SeqParams, q: i64, k1: i64) -> Result<(usize, usize, usize)> {
    let (l, n) = (params.l() as i64, params.n() as i64);
    if q < 0 || k1 < 1 || k1 > l - 1 {
        return Err(Error::InvalidArgument(format!(
            "need q >= 0 and 1 <= k1 <= L-1 (L={l}), got q={q}, k1={k1}"
        )));
    }
    let k = q * l + k1;
    if k > n - 1 {
        return Err(Error::OutOfRange { k, max: (n - 1) as usize });
    }
    Ok((k as usize, k1 as usize, (l - k1) as usize))
}

/// Shift `k = qL` over every block `i` and offset.
pub fn verify_claim1(params: &SeqParams, q: i64) -> Result<CheckReport> {
    let (l, m) = (params.l(), params.m() as i64);
    if !(1..m).contains(&q) {
        return Err(Error::OutOfRange {
            k: q,
            max: (m - 1) as usize,
        });
    }
    let (li, a, qi) = (l as i128, params.a() as i128, q as i128);
    Ok(check_range(params, q as usize * l, "claim1", 0..l, |_, j| {
        2 * qi * j + li * qi * qi + a * qi
    }))
}

/// Shift `k = qL + k1`, offsets `t` in `[0, k2)`.
pub fn verify_claim2(params: &SeqParams, q: i64, k1: i64) -> Result<CheckReport> {
    let (k, k1, k2) = check_nonmultiple(params, q, k1)?;
    let (li, a, qi, k1i) = (params.l() as i128, params.a() as i128, q as i128, k1 as i128);
    Ok(check_range(params, k, "claim2", 0..k2, |i, j| {
        2 * i * k1i + 2 * qi * j + 2 * qi * k1i + li * qi * qi + a * qi
    }))
}

/// Shift `k = qL + k1`, offsets `t` in `[k2, L)`.
pub fn verify_claim3(params: &SeqParams, q: i64, k1: i64) -> Result<CheckReport> {
    let (k, _, k2) = check_nonmultiple(params, q, k1)?;
    let l = params.l();
    let (li, a, qt, k2i) = (l as i128, params.a() as i128, q as i128 + 1, k2 as i128);
    Ok(check_range(params, k, "claim3", k2..l, |i, j| {
        -2 * i * k2i + 2 * qt * j - 2 * qt * k2i + li * qt * qt + a * qt
    }))
}

/// All three closed forms over every admissible `(q, k1)`.
pub fn verify_all_claims(params: &SeqParams) -> CheckReport {
    let (l, m) = (params.l() as i64, params.m() as i64);
    let mut total = CheckReport {
        check: "claims",
        cases: 0,
        violations: Vec::new(),
    };
    for q in 1..m {
        total.absorb(verify_claim1(params, q).expect("q in range"));
    }
    for q in 0..m {
        for k1 in 1..l {
            total.absorb(verify_claim2(params, q, k1).expect("q, k1 in range"));
            total.absorb(verify_claim3(params, q, k1).expect("q, k1 in range"));
        }
    }
    total
}
