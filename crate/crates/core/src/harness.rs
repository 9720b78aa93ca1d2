//! Parameter sweeps, asymptotic ratio tables and record export.

use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize};

use crate::correlation::{acyclic_autocorr_fast, acyclic_autocorr_values};
use crate::error::{Error, Result};
use crate::paperchecks::{
    check_prop41, check_prop42, energy, merit_factor, psl, verify_all_claims, verify_perfect,
    CheckReport, VerifyMethod,
};
use crate::seqcore::{lm_sequence, Limits, PhaseSeq, SeqParams, SpecialCase};

/// `1/pi`: limiting PSL/sqrt(N) of Frank sequences and energy/N^(3/2) of Chu sequences.
pub const INV_PI: f64 = std::f64::consts::FRAC_1_PI;
/// `2/pi^2`: limiting energy/N^(3/2) of Frank sequences.
pub const TWO_OVER_PI_SQ: f64 = 2.0 * INV_PI * INV_PI;

/// Largest length certified exactly in sweeps; longer ones use the float threshold.
pub const DEFAULT_EXACT_CAP: usize = 512;

/// Significant digits kept for floats in exported records.
pub const EXPORT_DIGITS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Frank,
    Chu,
    Milewski,
    Lm,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Family::Frank => "frank",
            Family::Chu => "chu",
            Family::Milewski => "milewski",
            Family::Lm => "lm",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "frank" => Ok(Family::Frank),
            "chu" => Ok(Family::Chu),
            "milewski" => Ok(Family::Milewski),
            "lm" => Ok(Family::Lm),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

/// One sequence to construct and measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Instance {
    /// Frank sequence of length `m^2`.
    Frank { m: usize },
    /// Chu sequence of length `m`.
    Chu { m: usize },
    /// Milewski sequence of length `g^(2h+1)`.
    Milewski { g: usize, h: u32 },
    Lm { l: i64, m: i64, a: i64 },
}

impl Instance {
    pub fn family(&self) -> Family {
        match self {
            Instance::Frank { .. } => Family::Frank,
            Instance::Chu { .. } => Family::Chu,
            Instance::Milewski { .. } => Family::Milewski,
            Instance::Lm { .. } => Family::Lm,
        }
    }

    /// The LM parameters this instance corresponds to. Frank and Chu use
    /// special cases (i) and (ii) with `L = M` and `L = 1`; Milewski uses
    /// special case (ii) with `L = G^H`.
    pub fn params(&self, limits: &Limits) -> Result<SeqParams> {
        let as_i64 = |x: usize| i64::try_from(x).map_err(|_| Error::InvalidArgument(format!("{x} too large")));
        match *self {
            Instance::Frank { m } => {
                let m = as_i64(m)?;
                limits.special_case(SpecialCase::I, m, m)
            }
            Instance::Chu { m } => limits.special_case(SpecialCase::II, 1, as_i64(m)?),
            Instance::Milewski { g, h } => {
                let too_long = || Error::TooLong {
                    n: u128::MAX,
                    max: limits.max_len,
                };
                let l = (g as i64).checked_pow(h).ok_or_else(too_long)?;
                let m = l.checked_mul(g as i64).ok_or_else(too_long)?;
                limits.special_case(SpecialCase::II, l, m)
            }
            Instance::Lm { l, m, a } => limits.validate(l, m, a),
        }
    }

    /// Builds the sequence; Frank, Chu and Milewski use their classical constructors.
    pub fn build(&self, limits: &Limits) -> Result<PhaseSeq> {
        match *self {
            Instance::Frank { m } => limits.frank(m),
            Instance::Chu { m } => limits.chu(m),
            Instance::Milewski { g, h } => limits.milewski(g, h),
            Instance::Lm { .. } => Ok(lm_sequence(&self.params(limits)?)),
        }
    }

    /// Parses a comma-separated size list for `family`.
    ///
    /// Frank and Chu take orders `M` (`2,3,8` or ranges `2..16`, inclusive).
    /// Milewski takes `G:H` pairs, LM takes `L:M:A` triples.
    pub fn parse_list(family: Family, list: &str) -> Result<Vec<Instance>> {
        let bad = |item: &str| Error::InvalidArgument(format!("cannot parse size {item:?} for {family}"));
        let mut out = Vec::new();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match family {
                Family::Frank | Family::Chu => {
                    let (lo, hi) = match item.split_once("..") {
                        Some((lo, hi)) => (lo.parse::<usize>(), hi.trim_start_matches('=').parse::<usize>()),
                        None => (item.parse(), item.parse()),
                    };
                    let (lo, hi) = (lo.map_err(|_| bad(item))?, hi.map_err(|_| bad(item))?);
                    out.extend((lo..=hi).map(|m| match family {
                        Family::Frank => Instance::Frank { m },
                        _ => Instance::Chu { m },
                    }));
                }
                Family::Milewski => {
                    let (g, h) = item.split_once(':').ok_or_else(|| bad(item))?;
                    out.push(Instance::Milewski {
                        g: g.parse().map_err(|_| bad(item))?,
                        h: h.parse().map_err(|_| bad(item))?,
                    });
                }
                Family::Lm => {
                    let parts: Vec<i64> = item
                        .split(':')
                        .map(|p| p.parse().map_err(|_| bad(item)))
                        .collect::<Result<_>>()?;
                    let [l, m, a] = parts[..] else { return Err(bad(item)) };
                    out.push(Instance::Lm { l, m, a });
                }
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidArgument(format!("empty size list for {family}")));
        }
        Ok(out)
    }
}

/// What to run in a [`sweep`].
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub instances: Vec<Instance>,
    pub limits: Limits,
    /// Lengths up to this are certified with exact cyclotomic reduction.
    pub exact_cap: usize,
    /// Compute acyclic profiles through the transform path.
    pub fast: bool,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl SweepSpec {
    pub fn new(instances: Vec<Instance>) -> Self {
        SweepSpec {
            instances,
            limits: Limits::default(),
            exact_cap: DEFAULT_EXACT_CAP,
            fast: false,
            workers: None,
        }
    }
}

fn nan_if_null<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
}

/// One measured instance. Float fields are `NaN` when `error` is nonempty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub family: Family,
    #[serde(rename = "L")]
    pub l: i64,
    #[serde(rename = "M")]
    pub m: i64,
    #[serde(rename = "A")]
    pub a: i64,
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(deserialize_with = "nan_if_null")]
    pub psl: f64,
    #[serde(rename = "psl_over_sqrtN", deserialize_with = "nan_if_null")]
    pub psl_over_sqrt_n: f64,
    #[serde(deserialize_with = "nan_if_null")]
    pub energy: f64,
    #[serde(rename = "energy_over_N32", deserialize_with = "nan_if_null")]
    pub energy_over_n32: f64,
    #[serde(deserialize_with = "nan_if_null")]
    pub merit_factor: f64,
    pub perfect: bool,
    #[serde(deserialize_with = "nan_if_null")]
    pub elapsed_ms: f64,
    pub error: String,
}

/// Column order of exported records.
pub const RECORD_COLUMNS: [&str; 13] = [
    "family",
    "L",
    "M",
    "A",
    "N",
    "psl",
    "psl_over_sqrtN",
    "energy",
    "energy_over_N32",
    "merit_factor",
    "perfect",
    "elapsed_ms",
    "error",
];

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}

impl SweepRecord {
    /// Whether the ratio columns match the raw columns within `tol` relative.
    pub fn ratios_consistent(&self, tol: f64) -> bool {
        if !self.error.is_empty() {
            return true;
        }
        let n = self.n as f64;
        rel_close(self.psl_over_sqrt_n, self.psl / n.sqrt(), tol)
            && rel_close(self.energy_over_n32, self.energy / n.powf(1.5), tol)
            && rel_close(self.merit_factor, n * n / (2.0 * self.energy), tol)
    }

    fn sort_key(&self) -> (Family, u64, i64, i64, i64) {
        (self.family, self.n, self.l, self.m, self.a)
    }

    fn rounded(&self) -> SweepRecord {
        SweepRecord {
            psl: round_sig(self.psl),
            psl_over_sqrt_n: round_sig(self.psl_over_sqrt_n),
            energy: round_sig(self.energy),
            energy_over_n32: round_sig(self.energy_over_n32),
            merit_factor: round_sig(self.merit_factor),
            elapsed_ms: round_sig(self.elapsed_ms),
            ..self.clone()
        }
    }
}

/// Rounds to [`EXPORT_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", EXPORT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

fn measure(inst: &Instance, spec: &SweepSpec) -> SweepRecord {
    let start = Instant::now();
    let family = inst.family();
    let mut rec = SweepRecord {
        family,
        l: 0,
        m: 0,
        a: 0,
        n: 0,
        psl: f64::NAN,
        psl_over_sqrt_n: f64::NAN,
        energy: f64::NAN,
        energy_over_n32: f64::NAN,
        merit_factor: f64::NAN,
        perfect: false,
        elapsed_ms: 0.0,
        error: String::new(),
    };
    let outcome = (|| -> Result<()> {
        let params = inst.params(&spec.limits)?;
        rec.l = params.l() as i64;
        rec.m = params.m() as i64;
        rec.a = params.a();
        let seq = inst.build(&spec.limits)?;
        let n = seq.len();
        rec.n = n as u64;
        let profile = if spec.fast {
            acyclic_autocorr_fast(&seq)
        } else {
            acyclic_autocorr_values(&seq)
        };
        rec.psl = psl(&profile)?;
        rec.energy = energy(&profile)?;
        rec.merit_factor = merit_factor(&profile).or_else(|e| match e {
            Error::ZeroEnergy => Ok(f64::INFINITY),
            e => Err(e),
        })?;
        let nf = n as f64;
        rec.psl_over_sqrt_n = rec.psl / nf.sqrt();
        rec.energy_over_n32 = rec.energy / nf.powf(1.5);
        let method = if n <= spec.exact_cap {
            VerifyMethod::ExactCyclotomic
        } else {
            VerifyMethod::FloatThreshold
        };
        rec.perfect = verify_perfect(&seq, method).is_perfect();
        Ok(())
    })();
    if let Err(e) = outcome {
        rec.error = e.to_string();
    }
    rec.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    rec
}

/// Measures every instance; records are ordered by `(family, N)` regardless
/// of worker count. Per-instance failures land in the record's `error` field.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<SweepRecord>> {
    let run = || -> Vec<SweepRecord> { spec.instances.par_iter().map(|i| measure(i, spec)).collect() };
    let mut records = match spec.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?
            .install(run),
        None => run(),
    };
    records.sort_by_key(SweepRecord::sort_key);
    Ok(records)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Csv,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

/// Writes records with floats rounded to [`EXPORT_DIGITS`] significant digits.
pub fn write_records<W: Write>(records: &[SweepRecord], format: ExportFormat, out: W) -> Result<()> {
    if records.is_empty() {
        return Err(Error::EmptyRecords);
    }
    let rounded: Vec<SweepRecord> = records.iter().map(SweepRecord::rounded).collect();
    match format {
        ExportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &rounded {
                w.serialize(r)?;
            }
            w.flush().map_err(csv::Error::from)?;
        }
        ExportFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, &rounded)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn export(records: &[SweepRecord], format: ExportFormat, path: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(Error::EmptyRecords);
    }
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    let mut buf = BufWriter::new(file);
    write_records(records, format, &mut buf)?;
    buf.flush().map_err(io_err)
}

pub fn read_records<R: Read>(format: ExportFormat, input: R) -> Result<Vec<SweepRecord>> {
    match format {
        ExportFormat::Csv => csv::Reader::from_reader(input)
            .deserialize()
            .collect::<std::result::Result<_, _>>()
            .map_err(Error::from),
        ExportFormat::Json => Ok(serde_json::from_reader(input)?),
    }
}

pub fn import(format: ExportFormat, path: &Path) -> Result<Vec<SweepRecord>> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_records(format, std::io::BufReader::new(file))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticRow {
    pub n: usize,
    pub psl_over_sqrt_n: f64,
    pub energy_over_n32: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticTable {
    pub family: Family,
    /// Limiting PSL/sqrt(N), where a closed form is known.
    pub reference_psl: Option<f64>,
    /// Limiting energy/N^(3/2).
    pub reference_energy: f64,
    pub rows: Vec<AsymptoticRow>,
}

/// PSL/sqrt(N) and energy/N^(3/2) for Frank or Chu sequences of the given
/// lengths. Frank lengths must be perfect squares.
pub fn asymptotic_table(family: Family, sizes: &[usize]) -> Result<AsymptoticTable> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("sizes must be strictly ascending".into()));
    }
    let (reference_psl, reference_energy) = match family {
        Family::Frank => (Some(INV_PI), TWO_OVER_PI_SQ),
        Family::Chu => (None, INV_PI),
        other => {
            return Err(Error::InvalidArgument(format!(
                "asymptotic table covers frank and chu, not {other}"
            )))
        }
    };
    let limits = Limits::default();
    let rows = sizes
        .iter()
        .map(|&n| {
            let seq = match family {
                Family::Frank => {
                    let m = (n as f64).sqrt().round() as usize;
                    if m * m != n {
                        return Err(Error::InvalidArgument(format!("Frank length {n} is not a square")));
                    }
                    limits.frank(m)?
                }
                _ => limits.chu(n)?,
            };
            let profile = acyclic_autocorr_values(&seq);
            let nf = n as f64;
            Ok(AsymptoticRow {
                n,
                psl_over_sqrt_n: psl(&profile)? / nf.sqrt(),
                energy_over_n32: energy(&profile)? / nf.powf(1.5),
            })
        })
        .collect::<Result<_>>()?;
    Ok(AsymptoticTable {
        family,
        reference_psl,
        reference_energy,
        rows,
    })
}

/// Values of `A` exercised for `(L, M)` by [`verify_grid`]: both presets and
/// their `+-2` neighbours, deduplicated and sorted.
pub fn grid_offsets(l: i64, m: i64) -> Vec<i64> {
    let mut out: Vec<i64> = [SpecialCase::I, SpecialCase::II]
        .iter()
        .flat_map(|c| {
            let a = c.offset(l, m);
            [a - 2, a, a + 2]
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Every `(L, M, A)` with `L | M`, `2 <= M <= max_m`, `A` from [`grid_offsets`].
pub fn parameter_grid(max_m: i64, limits: &Limits) -> Result<Vec<SeqParams>> {
    let mut out = Vec::new();
    for m in 2..=max_m {
        for l in (1..=m).filter(|l| m % l == 0) {
            for a in grid_offsets(l, m) {
                out.push(limits.validate(l, m, a)?);
            }
        }
    }
    Ok(out)
}

/// Which batches [`verify_grid`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridChecks {
    pub perfect: bool,
    pub props: bool,
    pub claims: bool,
}

impl Default for GridChecks {
    fn default() -> Self {
        GridChecks {
            perfect: true,
            props: true,
            claims: true,
        }
    }
}

/// Runs the selected checks across [`parameter_grid`]; one aggregated report
/// per check kind.
pub fn verify_grid(max_m: i64, checks: GridChecks, limits: &Limits) -> Result<Vec<CheckReport>> {
    let grid = parameter_grid(max_m, limits)?;
    let mut reports = Vec::new();
    if checks.perfect {
        let mut rep = CheckReport {
            check: "perfect",
            cases: 0,
            violations: Vec::new(),
        };
        for p in &grid {
            let cert = verify_perfect(&lm_sequence(p), VerifyMethod::ExactCyclotomic);
            rep.cases += 1;
            for f in cert.failures {
                rep.violations.push(crate::paperchecks::Violation::at(f.k, format!("{p}: gamma_k != 0")));
            }
        }
        reports.push(rep);
    }
    if checks.props {
        let mut p41 = CheckReport {
            check: "prop41",
            cases: 0,
            violations: Vec::new(),
        };
        let mut p42 = CheckReport {
            check: "prop42",
            cases: 0,
            violations: Vec::new(),
        };
        for p in &grid {
            p41.absorb(tagged(p, check_prop41(p)));
            if p.l() >= 2 {
                p42.absorb(tagged(p, check_prop42(p)?.report));
            }
        }
        reports.push(p41);
        reports.push(p42);
    }
    if checks.claims {
        let mut rep = CheckReport {
            check: "claims",
            cases: 0,
            violations: Vec::new(),
        };
        for p in &grid {
            rep.absorb(tagged(p, verify_all_claims(p)));
        }
        reports.push(rep);
    }
    Ok(reports)
}

fn tagged(p: &SeqParams, mut rep: CheckReport) -> CheckReport {
    for v in &mut rep.violations {
        v.detail = format!("{p}: {}", v.detail);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_lists() {
        assert_eq!(
            Instance::parse_list(Family::Frank, "2,3..4").unwrap(),
            vec![Instance::Frank { m: 2 }, Instance::Frank { m: 3 }, Instance::Frank { m: 4 }]
        );
        assert_eq!(Instance::parse_list(Family::Chu, "2..=16").unwrap().len(), 15);
        assert_eq!(
            Instance::parse_list(Family::Milewski, "2:1, 3:1").unwrap(),
            vec![Instance::Milewski { g: 2, h: 1 }, Instance::Milewski { g: 3, h: 1 }]
        );
        assert_eq!(
            Instance::parse_list(Family::Lm, "2:4:0,3:9:-1").unwrap()[1],
            Instance::Lm { l: 3, m: 9, a: -1 }
        );
        assert!(Instance::parse_list(Family::Lm, "2:4").is_err());
        assert!(Instance::parse_list(Family::Chu, "x").is_err());
        assert!(Instance::parse_list(Family::Chu, "").is_err());
        assert_eq!("Milewski".parse::<Family>().unwrap(), Family::Milewski);
        assert!("golay".parse::<Family>().is_err());
    }

    #[test]
    fn sweep_examples() {
        let recs = sweep(&SweepSpec::new(Instance::parse_list(Family::Frank, "4,2,3").unwrap())).unwrap();
        assert_eq!(recs.iter().map(|r| r.n).collect::<Vec<_>>(), vec![4, 9, 16]);
        assert!(recs.iter().all(|r| r.perfect && r.error.is_empty()));
        assert!(recs.iter().all(|r| r.ratios_consistent(1e-12)));
        assert_eq!((recs[0].l, recs[0].m, recs[0].a), (2, 2, 2));

        let recs = sweep(&SweepSpec::new(Instance::parse_list(Family::Chu, "2..16").unwrap())).unwrap();
        assert_eq!(recs.len(), 15);
        assert!(recs.iter().all(|r| r.psl_over_sqrt_n.is_finite() && r.perfect));

        let recs = sweep(&SweepSpec::new(Instance::parse_list(Family::Milewski, "3:1,2:1").unwrap())).unwrap();
        assert_eq!(recs.iter().map(|r| r.n).collect::<Vec<_>>(), vec![8, 27]);
        assert!(recs.iter().all(|r| r.perfect));
    }

    #[test]
    fn sweep_records_errors_in_rows() {
        let spec = SweepSpec::new(vec![Instance::Lm { l: 2, m: 3, a: 0 }, Instance::Lm { l: 2, m: 4, a: 0 }]);
        let recs = sweep(&spec).unwrap();
        assert_eq!(recs.len(), 2);
        let bad = recs.iter().find(|r| !r.error.is_empty()).unwrap();
        assert!(bad.error.contains("does not divide"));
        assert!(!bad.perfect && bad.psl.is_nan());
        assert!(recs.iter().any(|r| r.error.is_empty() && r.perfect && r.n == 8));
    }

    #[test]
    fn rounding() {
        assert_eq!(round_sig(std::f64::consts::PI), 3.14159265359);
        assert_eq!(round_sig(0.0), 0.0);
        assert!(round_sig(f64::NAN).is_nan());
        let x = 123456.789012345678;
        assert!(((round_sig(x) - x) / x).abs() <= 5e-12);
    }

    #[test]
    fn export_rejects_empty() {
        let mut buf = Vec::new();
        assert!(matches!(write_records(&[], ExportFormat::Csv, &mut buf), Err(Error::EmptyRecords)));
    }

    #[test]
    fn offsets_grid() {
        assert_eq!(grid_offsets(2, 4), vec![-2, 0, 2, 4, 6]);
        assert_eq!(grid_offsets(3, 9), vec![1, 3, 5]);
        let grid = parameter_grid(4, &Limits::default()).unwrap();
        // M=2: L in {1,2}; M=3: L in {1,3}; M=4: L in {1,2,4}
        assert!(grid.iter().all(|p| p.m() % p.l() == 0));
        assert_eq!(grid.iter().filter(|p| p.m() == 3).count(), 6);
    }

    #[test]
    fn asymptotic_table_shape() {
        let t = asymptotic_table(Family::Frank, &[16, 64]).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.reference_psl, Some(INV_PI));
        assert!(asymptotic_table(Family::Frank, &[15]).is_err());
        assert!(asymptotic_table(Family::Chu, &[64, 16]).is_err());
        assert!(asymptotic_table(Family::Lm, &[16]).is_err());
        assert!((TWO_OVER_PI_SQ - 0.20264236728467555).abs() < 1e-15);
    }
}
