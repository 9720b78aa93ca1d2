//! Acyclic and cyclic autocorrelations.
//!
//! For a sequence with exponents `e_j` over `zeta_D`, each term
//! `conj(x_j) * x_{j+k}` is `zeta_D^{e_{j+k} - e_j}`, so every correlation is a
//! [`RootSum`] and can be tested for zero exactly. The float paths evaluate
//! the same terms through a root table; the `_fast` paths go through an FFT.

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::exactalg::RootSum;
use crate::seqcore::{roots_table, PhaseSeq};
use crate::tolerance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CorrKind {
    Cyclic,
    Acyclic,
}

/// Autocorrelation per shift `k` in `[0, N)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrProfile {
    kind: CorrKind,
    values: Vec<Complex64>,
    exact: Option<Vec<RootSum>>,
}

impl CorrProfile {
    pub fn kind(&self) -> CorrKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn exact(&self) -> Option<&[RootSum]> {
        self.exact.as_deref()
    }

    pub fn value(&self, k: usize) -> Option<Complex64> {
        self.values.get(k).copied()
    }

    /// `|values[k]|` for every shift.
    pub fn magnitudes(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm()).collect()
    }
}

/// `sum_{j < N-k} zeta_D^{e_{j+k} - e_j}` as a formal sum.
pub fn acyclic_term_sum(seq: &PhaseSeq, k: usize) -> RootSum {
    let (d, e) = (seq.modulus(), seq.exps());
    let mut counts = vec![0i64; d];
    for j in 0..e.len().saturating_sub(k) {
        counts[(e[j + k] + d - e[j]) % d] += 1;
    }
    RootSum::from_counts(d, counts).expect("counts sized to the root order")
}

/// `sum_{j < N} zeta_D^{e_{(j+k) mod N} - e_j}` as a formal sum.
pub fn cyclic_term_sum(seq: &PhaseSeq, k: usize) -> RootSum {
    let (d, e) = (seq.modulus(), seq.exps());
    let n = e.len();
    let mut counts = vec![0i64; d];
    for j in 0..n {
        counts[(e[(j + k) % n] + d - e[j]) % d] += 1;
    }
    RootSum::from_counts(d, counts).expect("counts sized to the root order")
}

fn exact_profile(seq: &PhaseSeq, kind: CorrKind) -> CorrProfile {
    let table = roots_table(seq.modulus());
    let exact: Vec<RootSum> = (0..seq.len())
        .into_par_iter()
        .map(|k| match kind {
            CorrKind::Acyclic => acyclic_term_sum(seq, k),
            CorrKind::Cyclic => cyclic_term_sum(seq, k),
        })
        .collect();
    let values = exact.iter().map(|s| s.eval_with(&table)).collect();
    CorrProfile {
        kind,
        values,
        exact: Some(exact),
    }
}

fn float_profile(seq: &PhaseSeq, kind: CorrKind) -> CorrProfile {
    let (d, e) = (seq.modulus(), seq.exps());
    let n = e.len();
    let table = roots_table(d);
    let values = (0..n)
        .into_par_iter()
        .map(|k| {
            let terms = match kind {
                CorrKind::Acyclic => n - k,
                CorrKind::Cyclic => n,
            };
            (0..terms)
                .map(|j| table[(e[(j + k) % n] + d - e[j]) % d])
                .sum::<Complex64>()
        })
        .collect();
    CorrProfile {
        kind,
        values,
        exact: None,
    }
}

/// Acyclic autocorrelations `alpha_k`, with exact root sums.
pub fn acyclic_autocorr(seq: &PhaseSeq) -> CorrProfile {
    exact_profile(seq, CorrKind::Acyclic)
}

/// Cyclic autocorrelations `gamma_k`, with exact root sums.
pub fn cyclic_autocorr(seq: &PhaseSeq) -> CorrProfile {
    exact_profile(seq, CorrKind::Cyclic)
}

/// Direct float summation of `alpha_k`; no exact sums are kept, so memory
/// stays `O(N)` for any root order.
pub fn acyclic_autocorr_values(seq: &PhaseSeq) -> CorrProfile {
    float_profile(seq, CorrKind::Acyclic)
}

pub fn cyclic_autocorr_values(seq: &PhaseSeq) -> CorrProfile {
    float_profile(seq, CorrKind::Cyclic)
}

/// Lengths rustfft handles with mixed-radix kernels.
fn transform_friendly(mut n: usize) -> bool {
    for p in [2, 3, 5, 7] {
        while n > 1 && n % p == 0 {
            n /= p;
        }
    }
    n == 1
}

/// Correlation of `x` with itself over a cyclic buffer of length `len >= N`:
/// inverse transform of the squared-modulus spectrum.
fn spectral_autocorr(x: &[Complex64], len: usize) -> Vec<Complex64> {
    let mut planner = FftPlanner::<f64>::new();
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    buf[..x.len()].copy_from_slice(x);
    planner.plan_fft_forward(len).process(&mut buf);
    for v in buf.iter_mut() {
        *v = Complex64::new(v.norm_sqr(), 0.0);
    }
    planner.plan_fft_inverse(len).process(&mut buf);
    let scale = 1.0 / len as f64;
    buf.iter_mut().for_each(|v| *v *= scale);
    buf
}

fn padded_acyclic(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    let len = (2 * n).next_power_of_two().max(1);
    let mut r = spectral_autocorr(x, len);
    r.truncate(n);
    r
}

/// `O(N log N)` acyclic autocorrelation through a zero-padded transform.
pub fn acyclic_autocorr_fast(seq: &PhaseSeq) -> CorrProfile {
    CorrProfile {
        kind: CorrKind::Acyclic,
        values: padded_acyclic(&seq.as_complex()),
        exact: None,
    }
}

/// `O(N log N)` cyclic autocorrelation.
///
/// Lengths that are 7-smooth use a length-`N` transform directly. Other
/// lengths take the padded acyclic route and fold it with
/// `gamma_k = alpha_k + conj(alpha_{N-k})`.
pub fn cyclic_autocorr_fast(seq: &PhaseSeq) -> CorrProfile {
    let x = seq.as_complex();
    let n = x.len();
    let values = if n == 0 {
        Vec::new()
    } else if transform_friendly(n) {
        spectral_autocorr(&x, n)
    } else {
        let alpha = padded_acyclic(&x);
        (0..n)
            .map(|k| {
                if k == 0 {
                    alpha[0]
                } else {
                    alpha[k] + alpha[n - k].conj()
                }
            })
            .collect()
    };
    CorrProfile {
        kind: CorrKind::Cyclic,
        values,
        exact: None,
    }
}

/// Outcome of [`check_alpha_gamma_relation`].
#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    pub shifts_checked: usize,
    /// Shifts where `gamma_k` is exactly zero.
    pub zero_gamma_shifts: Vec<usize>,
    /// Largest `|gamma_k - alpha_k - conj(alpha_{N-k})|` seen in floats.
    pub max_float_residual: f64,
    /// Largest `||alpha_k| - |alpha_{N-k}||` over the zero-`gamma` shifts.
    pub max_magnitude_gap: f64,
}

/// Checks `gamma_k = alpha_k + conj(alpha_{N-k})` for `k` in `[1, N)`, exactly
/// and in floats, and `|alpha_k| = |alpha_{N-k}|` wherever `gamma_k = 0`.
pub fn check_alpha_gamma_relation(seq: &PhaseSeq) -> Result<RelationReport> {
    let alpha = acyclic_autocorr(seq);
    let gamma = cyclic_autocorr(seq);
    relation_from_profiles(&alpha, &gamma)
}

pub(crate) fn relation_from_profiles(alpha: &CorrProfile, gamma: &CorrProfile) -> Result<RelationReport> {
    let n = alpha.len();
    let tol = tolerance::FLOAT_PER_TERM * n as f64;
    let (ax, gx) = match (alpha.exact(), gamma.exact()) {
        (Some(a), Some(g)) => (a, g),
        _ => {
            return Err(Error::InvalidArgument(
                "relation check needs exact profiles".into(),
            ))
        }
    };
    let mut report = RelationReport {
        shifts_checked: 0,
        zero_gamma_shifts: Vec::new(),
        max_float_residual: 0.0,
        max_magnitude_gap: 0.0,
    };
    for k in 1..n {
        let rhs = ax[k].checked_add(&ax[n - k].conj())?;
        let violation = |gamma: String, rhs: String| Error::IdentityViolated { k, gamma, rhs };
        if !gx[k].value_eq(&rhs)? {
            return Err(violation(format!("{:?}", gx[k].counts()), format!("{:?}", rhs.counts())));
        }
        let rhs_f = alpha.values[k] + alpha.values[n - k].conj();
        let residual = (gamma.values[k] - rhs_f).norm();
        report.max_float_residual = report.max_float_residual.max(residual);
        if residual > tol {
            return Err(violation(gamma.values[k].to_string(), rhs_f.to_string()));
        }
        if gx[k].is_zero() {
            let gap = (alpha.values[k].norm() - alpha.values[n - k].norm()).abs();
            report.max_magnitude_gap = report.max_magnitude_gap.max(gap);
            if gap > tol {
                return Err(violation(
                    "0".into(),
                    format!("|alpha_k|={} vs |alpha_(N-k)|={}", alpha.values[k].norm(), alpha.values[n - k].norm()),
                ));
            }
            report.zero_gamma_shifts.push(k);
        }
        report.shifts_checked += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::{chu_sequence, lm_sequence, validate_params};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_close(got: &[Complex64], want: &[Complex64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (k, (g, w)) in got.iter().zip(want).enumerate() {
            assert!((g - w).norm() <= tol, "k={k}: {g} vs {w}");
        }
    }

    #[test]
    fn frank4_profiles() {
        let seq = PhaseSeq::new(4, vec![0, 0, 0, 2]).unwrap();
        let a = acyclic_autocorr(&seq);
        assert_eq!(a.kind(), CorrKind::Acyclic);
        assert_close(a.values(), &[c(4., 0.), c(1., 0.), c(0., 0.), c(-1., 0.)], 1e-12);
        let g = cyclic_autocorr(&seq);
        assert_close(g.values(), &[c(4., 0.), c(0., 0.), c(0., 0.), c(0., 0.)], 1e-12);
        assert!(g.exact().unwrap()[1..].iter().all(RootSum::is_zero));
        assert_close(cyclic_autocorr_fast(&seq).values(), g.values(), 1e-9);
    }

    #[test]
    fn chu2_and_chu3() {
        let seq = PhaseSeq::new(4, vec![0, 1]).unwrap();
        assert_close(acyclic_autocorr(&seq).values(), &[c(2., 0.), c(0., 1.)], 1e-12);
        let seq = PhaseSeq::new(6, vec![0, 2, 0]).unwrap();
        let g = cyclic_autocorr(&seq);
        assert_close(g.values(), &[c(3., 0.), c(0., 0.), c(0., 0.)], 1e-12);
    }

    #[test]
    fn constant_sequence() {
        let seq = PhaseSeq::new(1, vec![0; 4]).unwrap();
        let g = cyclic_autocorr_fast(&seq);
        assert_close(g.values(), &[c(4., 0.); 4], 1e-9);
        let a = acyclic_autocorr(&seq);
        assert_close(a.values(), &[c(4., 0.), c(3., 0.), c(2., 0.), c(1., 0.)], 1e-12);
    }

    #[test]
    fn float_and_exact_paths_agree() {
        for seq in [
            chu_sequence(37).unwrap(),
            lm_sequence(&validate_params(3, 9, 5).unwrap()),
            PhaseSeq::new(7, vec![3, 1, 4, 1, 5, 2, 6, 5, 3]).unwrap(),
        ] {
            let n = seq.len() as f64;
            assert_close(acyclic_autocorr_values(&seq).values(), acyclic_autocorr(&seq).values(), 1e-10 * n);
            assert_close(cyclic_autocorr_values(&seq).values(), cyclic_autocorr(&seq).values(), 1e-10 * n);
            assert_close(acyclic_autocorr_fast(&seq).values(), acyclic_autocorr(&seq).values(), 1e-9 * n);
        }
    }

    #[test]
    fn fast_path_both_branches() {
        // 16 is 7-smooth, 22 and 11*13 are not
        for m in [4, 16, 22, 143] {
            let seq = chu_sequence(m).unwrap();
            let naive = cyclic_autocorr(&seq);
            assert_close(cyclic_autocorr_fast(&seq).values(), naive.values(), 1e-9 * m as f64);
        }
        assert!(transform_friendly(4 * 9 * 25 * 49));
        assert!(!transform_friendly(22));
    }

    #[test]
    fn relation_holds_on_examples() {
        let seq = PhaseSeq::new(4, vec![0, 0, 0, 2]).unwrap();
        let r = check_alpha_gamma_relation(&seq).unwrap();
        assert_eq!(r.shifts_checked, 3);
        assert_eq!(r.zero_gamma_shifts, vec![1, 2, 3]);
        let seq = PhaseSeq::new(4, vec![0, 1]).unwrap();
        assert_eq!(check_alpha_gamma_relation(&seq).unwrap().zero_gamma_shifts, vec![1]);
        // non-perfect sequences still satisfy the identity
        let seq = PhaseSeq::new(5, vec![0, 0, 1, 3, 3, 2]).unwrap();
        let r = check_alpha_gamma_relation(&seq).unwrap();
        assert_eq!(r.shifts_checked, 5);
    }

    #[test]
    fn relation_catches_corrupted_profile() {
        let seq = PhaseSeq::new(4, vec![0, 0, 0, 2]).unwrap();
        let alpha = acyclic_autocorr(&seq);
        let mut gamma = cyclic_autocorr(&seq);
        let mut bad = gamma.exact.as_ref().unwrap()[2].clone();
        bad.add_term(0, 1);
        gamma.exact.as_mut().unwrap()[2] = bad;
        assert!(matches!(
            relation_from_profiles(&alpha, &gamma),
            Err(Error::IdentityViolated { k: 2, .. })
        ));
    }
}
