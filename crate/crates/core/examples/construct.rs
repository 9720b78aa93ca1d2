//! Build LM sequences and the classical families they contain.

use polyseq::{
    chu_sequence, frank_sequence, lm_sequence, milewski_sequence, special_case_params,
    validate_params, SpecialCase,
};

fn main() -> polyseq::Result<()> {
    let p = validate_params(2, 4, 0)?;
    println!("LM {p}: {:?} over zeta_{}", lm_sequence(&p).exps(), p.modulus());

    let frank = frank_sequence(3)?;
    let lm = lm_sequence(&special_case_params(SpecialCase::I, 3, 3)?);
    println!("Frank(3):     {:?} over zeta_{}", frank.exps(), frank.modulus());
    println!("  as LM (i):  {:?} over zeta_{}", lm.exps(), lm.modulus());
    assert_eq!(frank.lift(2), lm);

    let chu = chu_sequence(5)?;
    println!("Chu(5):       {:?} over zeta_{}", chu.exps(), chu.modulus());
    assert_eq!(chu, lm_sequence(&special_case_params(SpecialCase::II, 1, 5)?));

    let mil = milewski_sequence(2, 1)?;
    println!("Milewski(2,1): {:?} over zeta_{}", mil.exps(), mil.modulus());

    match validate_params(3, 4, 0) {
        Err(e) => println!("rejected: {e}"),
        Ok(p) => unreachable!("{p} accepted"),
    }
    Ok(())
}
