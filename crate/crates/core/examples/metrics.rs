//! Acyclic autocorrelation, PSL, energy and merit factor for one sequence.

use polyseq::paperchecks::{analyze, AnalyzeOptions};
use polyseq::{check_alpha_gamma_relation, frank_sequence, special_case_params, SpecialCase};

fn main() -> polyseq::Result<()> {
    let m = 8;
    let params = special_case_params(SpecialCase::I, m, m)?;
    let seq = frank_sequence(m as usize)?.lift(2);
    let analysis = analyze(&seq, Some(&params), AnalyzeOptions { exact: false, fast: true })?;
    let metrics = &analysis.metrics;

    println!("Frank {m}^2 (N = {})", metrics.n);
    println!("  PSL          {:.6}  (bound M = {m})", metrics.psl);
    println!("  energy       {:.6}", metrics.energy);
    println!("  merit factor {:.6}", metrics.merit_factor);
    println!("  perfect      {}", metrics.perfect);
    println!("  bounds hold  {} over {} checks", metrics.bounds_hold(), metrics.bound_results.len());

    let rel = check_alpha_gamma_relation(&seq)?;
    println!(
        "  gamma_k = alpha_k + conj(alpha_(N-k)) exact on {} shifts, float residual {:.1e}",
        rel.shifts_checked, rel.max_float_residual
    );
    Ok(())
}
