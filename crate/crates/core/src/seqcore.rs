//! Parameters, index decomposition and constructors for LM sequences.
//!
//! An LM sequence is fixed by positive integers `L | M` (with `M >= 2`) and an
//! integer `A` of the same parity as `L*M`. Writing `j = s*L + t` with
//! `0 <= t < L`, entry `j` is `zeta_{2M}^{p(j)}` where
//! `p(j) = 2*s*t + L*s^2 + A*s`. Sequences are held as exponents modulo the
//! root order, so every construction comparison is an exact integer check.
//!
//! The Frank, Chu and Milewski constructors below use their classical closed
//! forms and do not go through [`lm_sequence`].

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on sequence length.
pub const DEFAULT_MAX_LEN: usize = 1 << 20;

/// Environment variable that overrides [`DEFAULT_MAX_LEN`] in [`Limits::from_env`].
pub const MAX_LEN_ENV: &str = "POLYSEQ_MAX_N";

/// Validated `(L, M, A)` triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeqParams {
    l: usize,
    m: usize,
    a: i64,
}

impl SeqParams {
    /// Block length `L`.
    pub fn l(&self) -> usize {
        self.l
    }

    /// Block count `M`.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    /// Sequence length `N = L*M`.
    pub fn n(&self) -> usize {
        self.l * self.m
    }

    /// Phase modulus `D = 2*M`.
    pub fn modulus(&self) -> usize {
        2 * self.m
    }
}

impl std::fmt::Display for SeqParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(L={}, M={}, A={})", self.l, self.m, self.a)
    }
}

/// The two preset choices of `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpecialCase {
    /// `A = M` for even `M`, `A = L` for odd `M`. With `L = M` this is Frank.
    I,
    /// `A = 0` for even `M`, `A = L` for odd `M`. Covers Chu and Milewski.
    II,
}

impl SpecialCase {
    pub fn offset(self, l: i64, m: i64) -> i64 {
        match (self, m % 2 == 0) {
            (SpecialCase::I, true) => m,
            (SpecialCase::II, true) => 0,
            (_, false) => l,
        }
    }
}

/// `j = s*L + t` with `0 <= t < L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexSplit {
    pub j: usize,
    pub s: usize,
    pub t: usize,
}

/// Length cap applied by every constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_len: DEFAULT_MAX_LEN,
        }
    }
}

impl Limits {
    pub fn new(max_len: usize) -> Self {
        Limits { max_len }
    }

    /// Reads `POLYSEQ_MAX_N`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_LEN_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .map(Limits::new)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("{MAX_LEN_ENV}={raw:?} is not a positive integer"))
                }),
            Err(_) => Ok(Limits::default()),
        }
    }

    fn check_len(&self, n: u128) -> Result<usize> {
        if n > self.max_len as u128 {
            return Err(Error::TooLong {
                n,
                max: self.max_len,
            });
        }
        Ok(n as usize)
    }

    pub fn validate(&self, l: i64, m: i64, a: i64) -> Result<SeqParams> {
        if l < 1 || m < 2 {
            return Err(Error::NonPositive { l, m });
        }
        if m % l != 0 {
            return Err(Error::Divisibility { l, m });
        }
        let n = (l as i128) * (m as i128);
        if (n - a as i128).rem_euclid(2) != 0 {
            return Err(Error::Parity { a, n: n as i64 });
        }
        self.check_len(n as u128)?;
        Ok(SeqParams {
            l: l as usize,
            m: m as usize,
            a,
        })
    }

    pub fn special_case(&self, kind: SpecialCase, l: i64, m: i64) -> Result<SeqParams> {
        self.validate(l, m, kind.offset(l, m))
    }

    /// Classical Frank sequence of length `M^2` over `D = M`:
    /// entry `s*M + t` is `zeta_M^{s*t}`.
    pub fn frank(&self, m: usize) -> Result<PhaseSeq> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("Frank order must be >= 2, got {m}")));
        }
        let n = self.check_len((m as u128) * (m as u128))?;
        let exps = (0..n).map(|j| ((j / m) * (j % m)) % m).collect();
        Ok(PhaseSeq { modulus: m, exps })
    }

    /// Classical Chu sequence of length `M` over `D = 2M`: `zeta_{2M}^{j^2}` for
    /// even `M`, `zeta_{2M}^{j^2 + j}` for odd `M`.
    pub fn chu(&self, m: usize) -> Result<PhaseSeq> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("Chu length must be >= 2, got {m}")));
        }
        let n = self.check_len(m as u128)?;
        let d = 2 * n as u128;
        let odd = (m % 2) as u128;
        let exps = (0..n as u128)
            .map(|j| ((j * j + odd * j) % d) as usize)
            .collect();
        Ok(PhaseSeq {
            modulus: 2 * n,
            exps,
        })
    }

    /// Milewski sequence of length `G^(2H+1)`, returned over `D = 2*G^(H+1)`.
    ///
    /// Entry `s*G^H + t` is `zeta_M^{s*t + (G^H/2)*s^2}` for even `G` and
    /// `zeta_M^{s*t + G^H*(s^2+s)/2}` for odd `G`, with `M = G^(H+1)`.
    pub fn milewski(&self, g: usize, h: u32) -> Result<PhaseSeq> {
        if g < 2 || h < 1 {
            return Err(Error::InvalidArgument(format!(
                "Milewski needs G >= 2 and H >= 1, got G={g}, H={h}"
            )));
        }
        let too_long = || Error::TooLong {
            n: u128::MAX,
            max: self.max_len,
        };
        let n = (g as u128).checked_pow(2 * h + 1).ok_or_else(too_long)?;
        let n = self.check_len(n)?;
        let block = g.pow(h);
        let m = block * g;
        let exps = (0..n)
            .map(|j| {
                let (s, t) = ((j / block) as u128, (j % block) as u128);
                let block = block as u128;
                let e = if g % 2 == 0 {
                    s * t + (block / 2) * s * s
                } else {
                    s * t + block * ((s * s + s) / 2)
                };
                2 * (e % m as u128) as usize
            })
            .collect();
        Ok(PhaseSeq {
            modulus: 2 * m,
            exps,
        })
    }
}

/// Validates `(L, M, A)` against the default length cap.
pub fn validate_params(l: i64, m: i64, a: i64) -> Result<SeqParams> {
    Limits::default().validate(l, m, a)
}

pub fn special_case_params(kind: SpecialCase, l: i64, m: i64) -> Result<SeqParams> {
    Limits::default().special_case(kind, l, m)
}

pub fn split_index(j: usize, l: usize) -> IndexSplit {
    assert!(l >= 1, "block length must be positive");
    IndexSplit {
        j,
        s: j / l,
        t: j % l,
    }
}

/// `p(j) = 2*s*t + L*s^2 + A*s` as an unreduced integer.
pub fn phase_polynomial(j: usize, params: &SeqParams) -> i128 {
    let IndexSplit { s, t, .. } = split_index(j, params.l);
    let (s, t) = (s as i128, t as i128);
    2 * s * t + params.l as i128 * s * s + params.a as i128 * s
}

/// `p(j)` reduced into `[0, 2M)`.
pub fn phase_exponent(j: usize, params: &SeqParams) -> usize {
    phase_polynomial(j, params).rem_euclid(params.modulus() as i128) as usize
}

pub fn lm_sequence(params: &SeqParams) -> PhaseSeq {
    PhaseSeq {
        modulus: params.modulus(),
        exps: (0..params.n()).map(|j| phase_exponent(j, params)).collect(),
    }
}

pub fn frank_sequence(m: usize) -> Result<PhaseSeq> {
    Limits::default().frank(m)
}

pub fn chu_sequence(m: usize) -> Result<PhaseSeq> {
    Limits::default().chu(m)
}

pub fn milewski_sequence(g: usize, h: u32) -> Result<PhaseSeq> {
    Limits::default().milewski(g, h)
}

/// A polyphase sequence stored as exponents of `zeta_D`, each in `[0, D)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhaseSeq {
    modulus: usize,
    exps: Vec<usize>,
}

impl PhaseSeq {
    /// Checks that every exponent is already reduced modulo `modulus`.
    pub fn new(modulus: usize, exps: Vec<usize>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("root order must be positive".into()));
        }
        if let Some((index, &exp)) = exps.iter().enumerate().find(|(_, &e)| e >= modulus) {
            return Err(Error::InvalidResidue {
                index,
                exp,
                modulus,
            });
        }
        Ok(PhaseSeq { modulus, exps })
    }

    /// Reduces arbitrary integer exponents into `[0, modulus)`.
    pub fn from_exponents(modulus: usize, exps: impl IntoIterator<Item = i64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("root order must be positive".into()));
        }
        let exps = exps
            .into_iter()
            .map(|e| e.rem_euclid(modulus as i64) as usize)
            .collect();
        Ok(PhaseSeq { modulus, exps })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn exps(&self) -> &[usize] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    /// Same sequence over `zeta_{factor*D}`: every exponent is multiplied by `factor`.
    pub fn lift(&self, factor: usize) -> PhaseSeq {
        assert!(factor >= 1, "lift factor must be positive");
        PhaseSeq {
            modulus: self.modulus * factor,
            exps: self.exps.iter().map(|e| e * factor).collect(),
        }
    }

    /// `(conj(x_{N-1}), ..., conj(x_0))`.
    pub fn reversed_conjugate(&self) -> PhaseSeq {
        PhaseSeq {
            modulus: self.modulus,
            exps: self
                .exps
                .iter()
                .rev()
                .map(|&e| (self.modulus - e) % self.modulus)
                .collect(),
        }
    }

    pub fn as_complex(&self) -> Vec<Complex64> {
        let table = roots_table(self.modulus);
        self.exps.iter().map(|&e| table[e]).collect()
    }
}

/// `zeta_D^e` for `e` in `[0, D)`.
pub(crate) fn roots_table(d: usize) -> Vec<Complex64> {
    (0..d)
        .map(|e| Complex64::from_polar(1.0, 2.0 * PI * e as f64 / d as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        let p = validate_params(2, 4, 0).unwrap();
        assert_eq!((p.n(), p.modulus()), (8, 8));
        assert!(matches!(validate_params(2, 3, 0), Err(Error::Divisibility { .. })));
        assert!(matches!(validate_params(2, 3, 1), Err(Error::Divisibility { .. })));
        assert!(matches!(validate_params(1, 3, 0), Err(Error::Parity { .. })));
        assert!(matches!(validate_params(0, 4, 0), Err(Error::NonPositive { .. })));
        assert!(matches!(validate_params(1, 1, 1), Err(Error::NonPositive { .. })));
        assert!(matches!(validate_params(-2, 4, 0), Err(Error::NonPositive { .. })));
        // any integer of the right parity, including negative ones
        assert!(validate_params(3, 9, -7).is_ok());
    }

    #[test]
    fn length_cap() {
        let lim = Limits::new(64);
        assert!(lim.validate(8, 8, 0).is_ok());
        assert!(matches!(lim.validate(3, 27, 1), Err(Error::TooLong { n: 81, .. })));
        assert!(matches!(lim.frank(9), Err(Error::TooLong { .. })));
        assert!(matches!(lim.milewski(2, 3), Err(Error::TooLong { .. })));
        assert!(matches!(
            Limits::default().milewski(1000, 20),
            Err(Error::TooLong { .. })
        ));
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_index(7, 3), IndexSplit { j: 7, s: 2, t: 1 });
        assert_eq!(split_index(0, 5), IndexSplit { j: 0, s: 0, t: 0 });
        let (a, b) = (split_index(11, 2), split_index(3, 2));
        assert_eq!((a.s, a.t), (5, 1));
        assert_eq!((b.s, b.t), (1, 1));
        assert_eq!(a.s, b.s + 4);
    }

    #[test]
    fn phase_examples() {
        let p = validate_params(2, 2, 2).unwrap();
        assert_eq!(phase_polynomial(3, &p), 6);
        assert_eq!(phase_exponent(3, &p), 2);
        assert_eq!(phase_exponent(0, &p), 0);
        let p = validate_params(2, 4, 0).unwrap();
        assert_eq!(phase_polynomial(5, &p), 12);
        assert_eq!(phase_exponent(5, &p), 4);
        // negative A reduces to a nonnegative representative
        let p = validate_params(1, 3, -5).unwrap();
        assert_eq!(phase_polynomial(1, &p), -4);
        assert_eq!(phase_exponent(1, &p), 2);
    }

    #[test]
    fn lm_examples() {
        let seq = lm_sequence(&validate_params(2, 4, 0).unwrap());
        assert_eq!(seq.modulus(), 8);
        assert_eq!(seq.exps(), &[0, 0, 2, 4, 0, 4, 2, 0]);
        let seq = lm_sequence(&validate_params(2, 2, 2).unwrap());
        assert_eq!((seq.modulus(), seq.exps()), (4, &[0, 0, 0, 2][..]));
        let seq = lm_sequence(&validate_params(1, 3, 1).unwrap());
        assert_eq!((seq.modulus(), seq.exps()), (6, &[0, 2, 0][..]));
    }

    #[test]
    fn special_cases() {
        assert_eq!(special_case_params(SpecialCase::I, 2, 2).unwrap().a(), 2);
        assert_eq!(special_case_params(SpecialCase::II, 2, 4).unwrap().a(), 0);
        assert_eq!(special_case_params(SpecialCase::II, 1, 3).unwrap().a(), 1);
        assert_eq!(special_case_params(SpecialCase::I, 3, 9).unwrap().a(), 3);
        assert!(special_case_params(SpecialCase::I, 2, 3).is_err());
    }

    #[test]
    fn classical_examples() {
        let f = frank_sequence(2).unwrap();
        assert_eq!((f.modulus(), f.exps()), (2, &[0, 0, 0, 1][..]));
        assert_eq!(f.lift(2).exps(), &[0, 0, 0, 2]);
        let f = frank_sequence(3).unwrap();
        assert_eq!(f.exps(), &[0, 0, 0, 0, 1, 2, 0, 2, 1]);

        assert_eq!(chu_sequence(4).unwrap().exps(), &[0, 1, 4, 1]);
        assert_eq!(chu_sequence(3).unwrap().exps(), &[0, 2, 0]);
        let c = chu_sequence(2).unwrap();
        assert_eq!((c.modulus(), c.exps()), (4, &[0, 1][..]));

        let m = milewski_sequence(2, 1).unwrap();
        assert_eq!((m.modulus(), m.exps()), (8, &[0, 0, 2, 4, 0, 4, 2, 0][..]));
        let m = milewski_sequence(3, 1).unwrap();
        assert_eq!((m.len(), m.modulus()), (27, 18));

        assert!(frank_sequence(1).is_err());
        assert!(chu_sequence(0).is_err());
        assert!(milewski_sequence(2, 0).is_err());
    }

    #[test]
    fn complex_form() {
        let close = |a: Complex64, b: Complex64| (a - b).norm() < 1e-12;
        let v = PhaseSeq::new(4, vec![0, 0, 0, 2]).unwrap().as_complex();
        let want = [1.0, 1.0, 1.0, -1.0].map(|re| Complex64::new(re, 0.0));
        assert!(v.iter().zip(want).all(|(&a, b)| close(a, b)));
        let v = PhaseSeq::new(4, vec![0, 1]).unwrap().as_complex();
        assert!(close(v[1], Complex64::i()));
        let v = PhaseSeq::new(6, vec![0, 2, 0]).unwrap().as_complex();
        assert!(close(v[1], Complex64::from_polar(1.0, 2.0 * PI / 3.0)));
    }

    #[test]
    fn residues_are_checked() {
        assert!(matches!(
            PhaseSeq::new(4, vec![0, 4]),
            Err(Error::InvalidResidue { index: 1, .. })
        ));
        let s = PhaseSeq::from_exponents(4, [-1, 5, 8]).unwrap();
        assert_eq!(s.exps(), &[3, 1, 0]);
        assert_eq!(s.reversed_conjugate().exps(), &[0, 3, 1]);
    }
}
