//! RL-moves preserve the framed closure, plain L-moves shift a framing by one.

use framed_braids::closure::{closure_signature, signatures_match};
use framed_braids::moves::{apply_l_move, apply_rl_move, rl_move_word, InsertSide};
use framed_braids::{dsl, FramedBraid, MoveDescriptor, MoveKind, Result};

fn main() -> Result<()> {
    let a = FramedBraid::normalize(&dsl::parse("t2 s1 s2^-1 s1", 3)?);
    let base = closure_signature(&a)?;
    println!(
        "a = {a}, closure framings {:?}",
        base.components
            .iter()
            .map(|c| c.framing)
            .collect::<Vec<_>>()
    );

    for kind in [MoveKind::RlOver, MoveKind::RlUnder] {
        for side in [InsertSide::After, InsertSide::Before] {
            let d = MoveDescriptor::l_family(kind, 2, 2, -1).with_side(side);
            let w = rl_move_word(&a.spell(), &d)?;
            let b = apply_rl_move(&a, &d)?;
            println!(
                "{kind:?} {side:?}: {}  preserved: {}  retracts: {}",
                w.word(),
                signatures_match(&base, &closure_signature(&b)?),
                FramedBraid::normalize(&w.retract()?).framed_equal(&a)?
            );
        }
    }

    let d = MoveDescriptor::l_family(MoveKind::LOver, 2, 2, 1);
    let plain = FramedBraid::normalize(&apply_l_move(&a.spell(), &d)?);
    let moved = closure_signature(&plain)?;
    println!(
        "plain L-move: preserved {}, framings now {:?}",
        signatures_match(&base, &moved),
        moved
            .components
            .iter()
            .map(|c| c.framing)
            .collect::<Vec<_>>()
    );
    Ok(())
}
