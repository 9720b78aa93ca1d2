//! Sweep several families and export the records as CSV and JSON.

use polyseq::harness::{export, import, sweep, ExportFormat, Family, Instance, SweepSpec};

fn main() -> polyseq::Result<()> {
    let mut instances = Instance::parse_list(Family::Frank, "2..6")?;
    instances.extend(Instance::parse_list(Family::Chu, "16,64,256")?);
    instances.extend(Instance::parse_list(Family::Milewski, "2:1,2:2")?);
    instances.extend(Instance::parse_list(Family::Lm, "2:4:0,3:9:1")?);
    let records = sweep(&SweepSpec::new(instances))?;

    for r in &records {
        println!(
            "{:<9} N={:<5} PSL/sqrtN={:.4} E/N^1.5={:.4} F={:.3} perfect={}",
            r.family, r.n, r.psl_over_sqrt_n, r.energy_over_n32, r.merit_factor, r.perfect
        );
    }

    let dir = std::env::temp_dir();
    for (format, name) in [(ExportFormat::Csv, "polyseq_sweep.csv"), (ExportFormat::Json, "polyseq_sweep.json")] {
        let path = dir.join(name);
        export(&records, format, &path)?;
        println!("wrote {} ({} records read back)", path.display(), import(format, &path)?.len());
    }
    Ok(())
}
