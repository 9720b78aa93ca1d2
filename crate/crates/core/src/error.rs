use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-positive parameters: need L >= 1 and M >= 2, got L={l}, M={m}")]
    NonPositive { l: i64, m: i64 },

    #[error("L={l} does not divide M={m}")]
    Divisibility { l: i64, m: i64 },

    #[error("parity mismatch: A={a} must have the same parity as L*M={n}")]
    Parity { a: i64, n: i64 },

    #[error("sequence length {n} exceeds the configured maximum {max}")]
    TooLong { n: u128, max: usize },

    #[error("exponent {exp} at index {index} is not a reduced residue modulo {modulus}")]
    InvalidResidue {
        index: usize,
        exp: usize,
        modulus: usize,
    },

    #[error("root orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("cyclotomic order {n} outside [1, {max}]")]
    CyclotomicOrder { n: usize, max: usize },

    #[error("k={k} is a multiple of D={d}; cosecant has a pole there")]
    MultipleOfD { k: i64, d: usize },

    #[error("shift {k} outside [1, {max}]")]
    OutOfRange { k: i64, max: usize },

    #[error("sequence of length {n} has no nontrivial shifts")]
    TooShort { n: usize },

    #[error("all nontrivial autocorrelations vanish; merit factor is infinite")]
    ZeroEnergy,

    #[error("expected an {expected} profile")]
    WrongProfileKind { expected: &'static str },

    #[error("gamma_k = alpha_k + conj(alpha_(N-k)) violated at k={k}: gamma={gamma}, rhs={rhs}")]
    IdentityViolated { k: usize, gamma: String, rhs: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("nothing to export")]
    EmptyRecords,

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("write failed: {0}")]
    Write(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } | Error::Write(_) | Error::Csv(_) | Error::Json(_) => 3,
            Error::IdentityViolated { .. } => 1,
            _ => 2,
        }
    }
}
