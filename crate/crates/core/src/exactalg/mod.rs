//! Exact arithmetic on sums of roots of unity.
//!
//! A [`RootSum`] over `zeta_D` is zero exactly when its exponent polynomial is
//! divisible by the cyclotomic polynomial `Phi_D`, the minimal polynomial of
//! `zeta_D`. The cosecant helpers bound partial geometric sums of roots of
//! unity.

mod bounds;
mod cyclotomic;
mod rootsum;

pub use bounds::{abs_one_minus_exp, csc_bound, delta, CscBound};
pub use cyclotomic::{cyclotomic_poly, euler_totient, IntPolynomial, CYCLOTOMIC_MAX_ORDER};
pub use rootsum::{geometric_root_sum, rootsum_is_zero, RootSum};
