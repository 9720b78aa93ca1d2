use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use polyseq::harness::{
    asymptotic_table, export, sweep, verify_grid, write_records, ExportFormat, Family, GridChecks,
    Instance, SweepSpec, DEFAULT_EXACT_CAP,
};
use polyseq::paperchecks::{analyze, AnalyzeOptions};
use polyseq::{Error, Limits, PhaseSeq, SeqParams};

#[derive(Parser)]
#[command(name = "polyseq", version, about = "Perfect polyphase LM sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exponent sequence of one instance.
    Gen {
        #[command(flatten)]
        select: Select,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Autocorrelations, PSL, energy, merit factor and perfectness of one instance.
    Analyze {
        #[command(flatten)]
        select: Select,
        /// Exact root sums and cyclotomic perfectness certificate.
        #[arg(long)]
        exact: bool,
        /// Transform-based float profiles.
        #[arg(long)]
        fast: bool,
    },
    /// Batch perfectness, bound and closed-form checks over the (L, M, A) grid.
    Verify {
        #[arg(long = "max-M", default_value_t = 16)]
        max_m: i64,
        #[arg(long)]
        claims: bool,
        #[arg(long)]
        props: bool,
    },
    /// Measure a family over a list of sizes.
    Sweep {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Orders (`2,3,8`, `2..16`), `G:H` pairs for milewski, `L:M:A` for lm.
        #[arg(long)]
        sizes: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: usize,
        #[arg(long)]
        fast: bool,
        /// Exit with status 1 if any instance is not perfect.
        #[arg(long)]
        verify: bool,
    },
    /// PSL/sqrt(N) and energy/N^(3/2) at powers of two up to max-N.
    Asymptotics {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long = "max-N", default_value_t = 4096)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl From<Format> for ExportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ExportFormat::Json,
            Format::Csv => ExportFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Frank,
    Chu,
    Milewski,
    Lm,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Frank => Family::Frank,
            FamilyArg::Chu => Family::Chu,
            FamilyArg::Milewski => Family::Milewski,
            FamilyArg::Lm => Family::Lm,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Special {
    Frank,
    Chu,
    Milewski,
}

#[derive(Args)]
struct Select {
    #[arg(long = "L")]
    l: Option<i64>,
    #[arg(long = "M")]
    m: Option<i64>,
    #[arg(long = "A", allow_hyphen_values = true)]
    a: Option<i64>,
    /// Classical construction; frank and chu take --M, milewski takes --G and --H.
    #[arg(long, value_enum, conflicts_with_all = ["l", "a"])]
    special: Option<Special>,
    #[arg(long = "G")]
    g: Option<usize>,
    #[arg(long = "H")]
    h: Option<u32>,
}

impl Select {
    fn instance(&self) -> Result<Instance, Error> {
        let missing = |what: &str| Error::InvalidArgument(format!("missing --{what}"));
        let order = |m: Option<i64>| -> Result<usize, Error> {
            let m = m.ok_or_else(|| missing("M"))?;
            usize::try_from(m).map_err(|_| Error::InvalidArgument(format!("--M must be positive, got {m}")))
        };
        Ok(match self.special {
            Some(Special::Frank) => Instance::Frank { m: order(self.m)? },
            Some(Special::Chu) => Instance::Chu { m: order(self.m)? },
            Some(Special::Milewski) => Instance::Milewski {
                g: self.g.ok_or_else(|| missing("G"))?,
                h: self.h.ok_or_else(|| missing("H"))?,
            },
            None => Instance::Lm {
                l: self.l.ok_or_else(|| missing("L"))?,
                m: self.m.ok_or_else(|| missing("M"))?,
                a: self.a.ok_or_else(|| missing("A"))?,
            },
        })
    }

    fn resolve(&self, limits: &Limits) -> Result<(SeqParams, PhaseSeq), Error> {
        let inst = self.instance()?;
        Ok((inst.params(limits)?, inst.build(limits)?))
    }
}

fn print_json(value: &serde_json::Value) -> Result<(), Error> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let limits = Limits::from_env()?;
    match cli.command {
        Command::Gen { select, format } => {
            let (p, seq) = select.resolve(&limits)?;
            match format {
                Format::Json => print_json(&json!({
                    "L": p.l(), "M": p.m(), "A": p.a(), "N": seq.len(), "D": seq.modulus(),
                    "exponents": seq.exps(),
                }))?,
                Format::Csv => {
                    let exps: Vec<String> = seq.exps().iter().map(ToString::to_string).collect();
                    let mut w = csv::Writer::from_writer(io::stdout().lock());
                    w.write_record(["L", "M", "A", "N", "D", "exponents"])?;
                    w.write_record([
                        p.l().to_string(),
                        p.m().to_string(),
                        p.a().to_string(),
                        seq.len().to_string(),
                        seq.modulus().to_string(),
                        exps.join(" "),
                    ])?;
                    w.flush()?;
                }
            }
        }
        Command::Analyze { select, exact, fast } => {
            let (p, seq) = select.resolve(&limits)?;
            let a = analyze(&seq, Some(&p), AnalyzeOptions { exact, fast })?;
            let parts = |v: &[num_complex::Complex64]| -> serde_json::Value {
                v.iter().map(|c| json!([c.re, c.im])).collect()
            };
            print_json(&json!({
                "params": { "L": p.l(), "M": p.m(), "A": p.a(), "N": seq.len(), "D": seq.modulus() },
                "acyclic": parts(a.acyclic.values()),
                "cyclic": parts(a.cyclic.values()),
                "metrics": a.metrics,
                "certificate": a.certificate,
            }))?;
        }
        Command::Verify { max_m, claims, props } => {
            let checks = if claims || props {
                GridChecks {
                    perfect: true,
                    props,
                    claims,
                }
            } else {
                GridChecks::default()
            };
            let reports = verify_grid(max_m, checks, &limits)?;
            let mut ok = true;
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                println!("{status} {:<8} cases={} violations={}", r.check, r.cases, r.violations.len());
                for v in r.violations.iter().take(20) {
                    println!("    k={:?} {}", v.k, v.detail);
                }
                ok &= r.passed();
            }
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Sweep {
            family,
            sizes,
            out,
            format,
            workers,
            exact_cap,
            fast,
            verify,
        } => {
            let mut spec = SweepSpec::new(Instance::parse_list(family.into(), &sizes)?);
            spec.limits = limits;
            spec.workers = workers;
            spec.exact_cap = exact_cap;
            spec.fast = fast;
            let records = sweep(&spec)?;
            match out {
                Some(path) => export(&records, format.into(), &path)?,
                None => write_records(&records, format.into(), io::stdout().lock())?,
            }
            if verify && records.iter().any(|r| !r.perfect) {
                eprintln!("sweep: some instances are not perfect");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Asymptotics { family, max_n } => {
            let family: Family = family.into();
            let sizes: Vec<usize> = match family {
                Family::Frank => (1..).map(|i| 1usize << (2 * i)).take_while(|&n| n <= max_n).collect(),
                _ => (1..).map(|i| 1usize << i).take_while(|&n| n <= max_n).collect(),
            };
            let table = asymptotic_table(family, &sizes)?;
            match table.reference_psl {
                Some(c) => println!("# reference psl/sqrtN = {c:.5}, energy/N^1.5 = {:.5}", table.reference_energy),
                None => println!("# reference energy/N^1.5 = {:.5}", table.reference_energy),
            }
            println!("N,psl_over_sqrtN,energy_over_N32");
            for r in &table.rows {
                println!("{},{:.12},{:.12}", r.n, r.psl_over_sqrt_n, r.energy_over_n32);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("polyseq: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
