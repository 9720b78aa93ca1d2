use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::correlation::{cyclic_autocorr_values, cyclic_term_sum};
use crate::exactalg::CYCLOTOMIC_MAX_ORDER;
use crate::seqcore::{roots_table, PhaseSeq};
use crate::tolerance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMethod {
    /// Every `gamma_k` reduced modulo the cyclotomic polynomial.
    ExactCyclotomic,
    /// `|gamma_k| <= 1e-8 * N` in floats.
    FloatThreshold,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PerfectnessFailure {
    pub k: usize,
    pub magnitude: f64,
}

/// Record of a perfectness check over all nontrivial shifts.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerfectnessCertificate {
    pub length: usize,
    pub modulus: usize,
    pub verified_shifts: usize,
    pub method: VerifyMethod,
    /// Shifts with `gamma_k != 0`, ascending.
    pub failures: Vec<PerfectnessFailure>,
}

impl PerfectnessCertificate {
    pub fn is_perfect(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failing_shifts(&self) -> Vec<usize> {
        self.failures.iter().map(|f| f.k).collect()
    }
}

/// Checks `gamma_k = 0` for every `k` in `[1, N)`.
///
/// Exact verification needs `Phi_D` for the sequence's root order `D`; when
/// `D` exceeds [`CYCLOTOMIC_MAX_ORDER`] the float threshold is used instead and
/// the certificate records that method.
pub fn verify_perfect(seq: &PhaseSeq, method: VerifyMethod) -> PerfectnessCertificate {
    let n = seq.len();
    let method = if seq.modulus() > CYCLOTOMIC_MAX_ORDER {
        VerifyMethod::FloatThreshold
    } else {
        method
    };
    let failures = match method {
        VerifyMethod::ExactCyclotomic => {
            let table = roots_table(seq.modulus());
            (1..n)
                .into_par_iter()
                .filter_map(|k| {
                    let gamma = cyclic_term_sum(seq, k);
                    (!gamma.is_zero()).then(|| PerfectnessFailure {
                        k,
                        magnitude: gamma.eval_with(&table).norm(),
                    })
                })
                .collect()
        }
        VerifyMethod::FloatThreshold => {
            let tol = tolerance::PERFECT_PER_TERM * n as f64;
            let gamma = cyclic_autocorr_values(seq);
            gamma.values()[1.min(n)..]
                .iter()
                .enumerate()
                .filter(|(_, v)| v.norm() > tol)
                .map(|(i, v)| PerfectnessFailure {
                    k: i + 1,
                    magnitude: v.norm(),
                })
                .collect()
        }
    };
    PerfectnessCertificate {
        length: n,
        modulus: seq.modulus(),
        verified_shifts: n.saturating_sub(1),
        method,
        failures,
    }
}
