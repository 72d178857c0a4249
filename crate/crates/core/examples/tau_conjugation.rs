//! Conjugating by a framing generator, realised as a chain of RL-moves.

use framed_braids::closure::{closure_signature, signatures_match};
use framed_braids::moves::tau_conjugation_as_rl_sequence;
use framed_braids::{dsl, FramedBraid, Result};

fn main() -> Result<()> {
    let a = FramedBraid::normalize(&dsl::parse("s1 s2^-1 s1 t3", 3)?);
    let base = closure_signature(&a)?;
    for exp in [1, -1] {
        println!("t1^{} · a · t1^{}:", -exp, exp);
        for link in tau_conjugation_as_rl_sequence(&a, 1, exp)? {
            let kept = signatures_match(&base, &closure_signature(&link.element)?);
            println!(
                "  {:<8} {:<56} signature kept: {kept}",
                link.step.name(),
                link.element.to_string()
            );
        }
    }
    Ok(())
}
