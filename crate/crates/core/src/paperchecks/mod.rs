//! Executable checks of the LM construction's properties.
//!
//! Perfectness certificates, the per-shift acyclic bounds, the exact closed
//! forms of phase differences, and the sidelobe metrics.

mod claims;
mod metrics;
mod perfect;
mod props;
mod report;

pub use claims::{verify_all_claims, verify_claim1, verify_claim2, verify_claim3};
pub use metrics::{energy, merit_factor, psl, BoundKind, BoundOutcome, MetricsReport};
pub use perfect::{verify_perfect, PerfectnessCertificate, PerfectnessFailure, VerifyMethod};
pub use props::{check_prop41, check_prop42, decompose_shift, Prop42Report, ShiftDecomposition};
pub use report::{CheckReport, Violation};

use crate::correlation::{
    acyclic_autocorr, acyclic_autocorr_fast, acyclic_autocorr_values, cyclic_autocorr,
    cyclic_autocorr_fast, cyclic_autocorr_values, CorrProfile,
};
use crate::error::{Error, Result};
use crate::exactalg::csc_bound;
use crate::seqcore::{PhaseSeq, SeqParams};
use crate::tolerance::{BARKER_SLACK, BOUND_SLACK};

/// How [`analyze`] computes its profiles.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Keep exact root sums and certify perfectness with cyclotomic reduction.
    pub exact: bool,
    /// Use the transform paths for the float profiles.
    pub fast: bool,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub acyclic: CorrProfile,
    pub cyclic: CorrProfile,
    pub certificate: PerfectnessCertificate,
    pub metrics: MetricsReport,
}

/// Profiles, perfectness and metrics for one sequence. With `params`, the
/// bounds that apply to LM sequences are evaluated per shift.
pub fn analyze(seq: &PhaseSeq, params: Option<&SeqParams>, opts: AnalyzeOptions) -> Result<Analysis> {
    let n = seq.len();
    if n < 2 {
        return Err(Error::TooShort { n });
    }
    if let Some(p) = params {
        if p.n() != n {
            return Err(Error::InvalidArgument(format!(
                "parameters {p} describe length {}, sequence has {n}",
                p.n()
            )));
        }
    }
    let (acyclic, cyclic) = match (opts.exact, opts.fast) {
        (true, _) => (acyclic_autocorr(seq), cyclic_autocorr(seq)),
        (false, true) => (acyclic_autocorr_fast(seq), cyclic_autocorr_fast(seq)),
        (false, false) => (acyclic_autocorr_values(seq), cyclic_autocorr_values(seq)),
    };
    let method = if opts.exact {
        VerifyMethod::ExactCyclotomic
    } else {
        VerifyMethod::FloatThreshold
    };
    let certificate = verify_perfect(seq, method);

    let psl_value = psl(&acyclic)?;
    let energy_value = energy(&acyclic)?;
    let merit = match merit_factor(&acyclic) {
        Ok(f) => f,
        Err(Error::ZeroEnergy) => f64::INFINITY,
        Err(e) => return Err(e),
    };

    let failing = certificate.failing_shifts();
    let mut bound_results = Vec::new();
    for (k, v) in acyclic.values().iter().enumerate().skip(1) {
        let magnitude = v.norm();
        let mut push = |kind, bound: f64| {
            bound_results.push(BoundOutcome {
                k,
                kind,
                magnitude,
                bound,
                holds: magnitude <= bound + BOUND_SLACK,
            })
        };
        if failing.binary_search(&k).is_err() {
            push(BoundKind::Overlap, k.min(n - k) as f64);
        }
        if let Some(p) = params {
            if k % p.l() == 0 {
                push(BoundKind::Cosecant, csc_bound(k as i64, n)?.exact);
                push(BoundKind::HalfRootN, (n as f64 / 2.0).sqrt());
            }
            if p.l() == p.m() {
                push(BoundKind::RootN, p.m() as f64);
            }
        }
    }

    let metrics = MetricsReport {
        n,
        psl: psl_value,
        energy: energy_value,
        merit_factor: merit,
        is_generalized_barker: psl_value <= 1.0 + BARKER_SLACK,
        perfect: certificate.is_perfect(),
        perfect_exact: certificate.method == VerifyMethod::ExactCyclotomic && certificate.is_perfect(),
        bound_results,
    };
    Ok(Analysis {
        acyclic,
        cyclic,
        certificate,
        metrics,
    })
}
