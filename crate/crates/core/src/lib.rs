//! Perfect polyphase LM sequences.
//!
//! The LM family is parameterized by `L | M` and an offset `A` of the same
//! parity as `L*M`; it contains the Frank, Chu and Milewski sequences. This
//! crate builds the sequences, proves perfectness of concrete instances with
//! exact cyclotomic arithmetic, and measures acyclic sidelobes (PSL, energy,
//! merit factor) against the known bounds.
//!
//! ```
//! use polyseq::{lm_sequence, validate_params, verify_perfect, VerifyMethod};
//!
//! let params = validate_params(2, 4, 0).unwrap();
//! let seq = lm_sequence(&params);
//! assert_eq!(seq.exps(), &[0, 0, 2, 4, 0, 4, 2, 0]);
//! let cert = verify_perfect(&seq, VerifyMethod::ExactCyclotomic);
//! assert!(cert.is_perfect());
//! ```

pub mod correlation;
pub mod error;
pub mod exactalg;
pub mod harness;
pub mod paperchecks;
pub mod seqcore;

pub use correlation::{
    acyclic_autocorr, acyclic_autocorr_fast, acyclic_autocorr_values, check_alpha_gamma_relation,
    cyclic_autocorr, cyclic_autocorr_fast, cyclic_autocorr_values, CorrKind, CorrProfile,
};
pub use error::{Error, Result};
pub use exactalg::{cyclotomic_poly, geometric_root_sum, rootsum_is_zero, IntPolynomial, RootSum};
pub use paperchecks::{
    check_prop41, check_prop42, decompose_shift, energy, merit_factor, psl, verify_claim1,
    verify_claim2, verify_claim3, verify_perfect, MetricsReport, PerfectnessCertificate,
    VerifyMethod,
};
pub use seqcore::{
    chu_sequence, frank_sequence, lm_sequence, milewski_sequence, special_case_params,
    validate_params, Limits, PhaseSeq, SeqParams, SpecialCase,
};

/// Numeric tolerances shared by the checkers.
pub mod tolerance {
    /// Additive slack on top of an exact bound evaluated in floats.
    pub const BOUND_SLACK: f64 = 1e-9;
    /// Float agreement per unit term; multiply by `N`.
    pub const FLOAT_PER_TERM: f64 = 1e-10;
    /// Fast-vs-naive agreement per unit term; multiply by `N`.
    pub const FAST_PER_TERM: f64 = 1e-9;
    /// `|gamma_k|` threshold per unit term for float perfectness; multiply by `N`.
    pub const PERFECT_PER_TERM: f64 = 1e-8;
    /// PSL at or below `1 + BARKER_SLACK` counts as generalized Barker.
    pub const BARKER_SLACK: f64 = 1e-12;
}
