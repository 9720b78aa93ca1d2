use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Distance from `k` to the nearest multiple of `d`.
pub fn delta(k: u64, d: u64) -> u64 {
    assert!(d >= 1, "modulus must be positive");
    let r = k % d;
    r.min(d - r)
}

/// Bounds on `|csc(pi*k/D)|`, the cap on any partial sum of powers of `zeta_D^k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CscBound {
    /// `csc(pi * delta(k, D) / D)`, equal to `|csc(pi*k/D)|`.
    pub exact: f64,
    /// `D / (2 * delta(k, D))`.
    pub coarse: f64,
}

pub fn csc_bound(k: i64, d: usize) -> Result<CscBound> {
    if d == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let r = k.rem_euclid(d as i64) as u64;
    if r == 0 {
        return Err(Error::MultipleOfD { k, d });
    }
    let kp = delta(r, d as u64) as f64;
    let d = d as f64;
    Ok(CscBound {
        exact: 1.0 / (PI * kp / d).sin(),
        coarse: d / (2.0 * kp),
    })
}

/// `|1 - e^{ix}| = 2|sin(x/2)|`.
pub fn abs_one_minus_exp(x: f64) -> f64 {
    2.0 * (x / 2.0).sin().abs()
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;

    #[test]
    fn delta_examples() {
        assert_eq!(delta(19, 12), 5);
        assert_eq!(delta(29, 12), 5);
        assert_eq!(delta(12, 12), 0);
        assert_eq!(delta(7, 14), 7);
        assert_eq!(delta(0, 5), 0);
    }

    #[test]
    fn csc_examples() {
        let b = csc_bound(1, 4).unwrap();
        assert!((b.exact - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(b.coarse, 2.0);
        let b = csc_bound(2, 4).unwrap();
        assert!((b.exact - 1.0).abs() < 1e-12);
        assert_eq!(b.coarse, 1.0);
        assert_eq!(csc_bound(19, 12).unwrap(), csc_bound(5, 12).unwrap());
        assert_eq!(csc_bound(-5, 12).unwrap(), csc_bound(5, 12).unwrap());
        assert!(matches!(csc_bound(24, 12), Err(Error::MultipleOfD { .. })));
        // raw cosecant agrees in magnitude
        let raw = 1.0 / (PI * 19.0 / 12.0).sin();
        assert!((raw.abs() - csc_bound(19, 12).unwrap().exact).abs() < 1e-12);
    }

    #[test]
    fn one_minus_exp() {
        assert!((abs_one_minus_exp(PI) - 2.0).abs() < 1e-12);
        assert_eq!(abs_one_minus_exp(0.0), 0.0);
        assert!((abs_one_minus_exp(PI / 2.0) - 2f64.sqrt()).abs() < 1e-12);
        for i in -50..50 {
            let x = i as f64 * 0.37;
            let direct = (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, x)).norm();
            assert!((direct - abs_one_minus_exp(x)).abs() < 1e-12);
        }
    }
}
