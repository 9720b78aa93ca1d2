//! Frank and Chu sidelobe ratios approaching their limits.

use polyseq::harness::{asymptotic_table, Family};

fn main() -> polyseq::Result<()> {
    let frank = asymptotic_table(Family::Frank, &[64, 256, 1024, 4096])?;
    let chu = asymptotic_table(Family::Chu, &[64, 256, 1024, 4096])?;

    println!("Frank, limits PSL/sqrtN -> {:.5}, E/N^1.5 -> {:.5}", frank.reference_psl.unwrap(), frank.reference_energy);
    for r in &frank.rows {
        println!("  N={:<5} {:.5} {:.5}", r.n, r.psl_over_sqrt_n, r.energy_over_n32);
    }
    println!("Chu, limit E/N^1.5 -> {:.5}", chu.reference_energy);
    for r in &chu.rows {
        println!("  N={:<5} {:.5} {:.5}", r.n, r.psl_over_sqrt_n, r.energy_over_n32);
    }
    Ok(())
}
