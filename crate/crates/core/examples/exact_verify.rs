//! Certify perfectness with exact cyclotomic arithmetic.

use polyseq::exactalg::cyclotomic_poly;
use polyseq::{lm_sequence, validate_params, verify_perfect, PhaseSeq, VerifyMethod};

fn main() -> polyseq::Result<()> {
    for n in [8, 12, 105] {
        println!("Phi_{n} = {}", cyclotomic_poly(n)?);
    }

    for (l, m, a) in [(2, 4, 0), (3, 9, 1), (6, 12, -2)] {
        let p = validate_params(l, m, a)?;
        let cert = verify_perfect(&lm_sequence(&p), VerifyMethod::ExactCyclotomic);
        println!(
            "{p}: {} shifts checked by {:?}, perfect = {}",
            cert.verified_shifts,
            cert.method,
            cert.is_perfect()
        );
    }

    let ones = PhaseSeq::new(2, vec![0; 4])?;
    let cert = verify_perfect(&ones, VerifyMethod::ExactCyclotomic);
    println!("all-ones fails at shifts {:?}", cert.failing_shifts());
    Ok(())
}
