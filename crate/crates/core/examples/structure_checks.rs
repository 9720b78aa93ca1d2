//! Shift decompositions, per-shift bounds and closed-form identities.

use polyseq::paperchecks::verify_all_claims;
use polyseq::{check_prop41, check_prop42, decompose_shift, validate_params};

fn main() -> polyseq::Result<()> {
    let p = validate_params(4, 8, 2)?;
    for k in [4, 6, 13] {
        println!("{p} k={k}: {:?}", decompose_shift(k, &p)?);
    }

    let r41 = check_prop41(&p);
    println!("shifts with L | k: {} cases, passed = {}", r41.cases, r41.passed());

    let r42 = check_prop42(&p)?;
    println!(
        "other shifts: {} cases, passed = {}, tight at {:?}",
        r42.report.cases,
        r42.passed(),
        r42.tight_shifts
    );

    let claims = verify_all_claims(&p);
    println!("phase identities: {} cases, passed = {}", claims.cases, claims.passed());
    Ok(())
}
