//! Sidelobe metrics of an acyclic profile.

use serde::Serialize;

use crate::correlation::{CorrKind, CorrProfile};
use crate::error::{Error, Result};

fn sidelobes(profile: &CorrProfile) -> Result<impl Iterator<Item = f64> + '_> {
    if profile.kind() != CorrKind::Acyclic {
        return Err(Error::WrongProfileKind {
            expected: "acyclic",
        });
    }
    if profile.len() < 2 {
        return Err(Error::TooShort { n: profile.len() });
    }
    Ok(profile.values()[1..].iter().map(|v| v.norm()))
}

/// Peak sidelobe level: `max_{1 <= k < N} |alpha_k|`.
pub fn psl(profile: &CorrProfile) -> Result<f64> {
    Ok(sidelobes(profile)?.fold(0.0, f64::max))
}

/// `sum_{1 <= k < N} |alpha_k|^2`.
pub fn energy(profile: &CorrProfile) -> Result<f64> {
    Ok(sidelobes(profile)?.map(|m| m * m).sum())
}

/// `N^2 / (2 * energy)`.
pub fn merit_factor(profile: &CorrProfile) -> Result<f64> {
    let e = energy(profile)?;
    if e == 0.0 {
        return Err(Error::ZeroEnergy);
    }
    let n = profile.len() as f64;
    Ok(n * n / (2.0 * e))
}

/// Which inequality a [`BoundOutcome`] refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `|alpha_k| <= min(k, N-k)`, valid whenever `gamma_k = 0`.
    Overlap,
    /// `|alpha_k| <= csc(pi*k/N)` for `L | k`.
    Cosecant,
    /// `|alpha_k| <= sqrt(N/2)` for `L | k`.
    HalfRootN,
    /// `|alpha_k| <= M = sqrt(N)` when `L = M`.
    RootN,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundOutcome {
    pub k: usize,
    pub kind: BoundKind,
    pub magnitude: f64,
    pub bound: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricsReport {
    pub n: usize,
    pub psl: f64,
    pub energy: f64,
    /// `+inf` when every nontrivial `alpha_k` vanishes.
    pub merit_factor: f64,
    pub is_generalized_barker: bool,
    pub perfect: bool,
    pub perfect_exact: bool,
    pub bound_results: Vec<BoundOutcome>,
}

impl MetricsReport {
    pub fn bounds_hold(&self) -> bool {
        self.bound_results.iter().all(|b| b.holds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::{acyclic_autocorr, cyclic_autocorr};
    use crate::seqcore::PhaseSeq;

    #[test]
    fn frank4_metrics() {
        let a = acyclic_autocorr(&PhaseSeq::new(4, vec![0, 0, 0, 2]).unwrap());
        assert!((psl(&a).unwrap() - 1.0).abs() < 1e-12);
        assert!((energy(&a).unwrap() - 2.0).abs() < 1e-12);
        assert!((merit_factor(&a).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn chu2_metrics() {
        let a = acyclic_autocorr(&PhaseSeq::new(4, vec![0, 1]).unwrap());
        assert!((psl(&a).unwrap() - 1.0).abs() < 1e-12);
        assert!((energy(&a).unwrap() - 1.0).abs() < 1e-12);
        assert!((merit_factor(&a).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn all_ones_metrics() {
        let a = acyclic_autocorr(&PhaseSeq::new(1, vec![0; 3]).unwrap());
        assert!((psl(&a).unwrap() - 2.0).abs() < 1e-12);
        assert!((energy(&a).unwrap() - 5.0).abs() < 1e-12);
        assert!((merit_factor(&a).unwrap() - 0.9).abs() < 1e-12);
    }

    #[test]
    fn errors() {
        let seq = PhaseSeq::new(4, vec![0, 1]).unwrap();
        assert!(matches!(psl(&cyclic_autocorr(&seq)), Err(Error::WrongProfileKind { .. })));
        let one = acyclic_autocorr(&PhaseSeq::new(4, vec![3]).unwrap());
        assert!(matches!(psl(&one), Err(Error::TooShort { n: 1 })));
        assert!(matches!(merit_factor(&one), Err(Error::TooShort { .. })));
    }
}
