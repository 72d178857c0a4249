//! Components, framings and linking numbers of closed framed braids.

use framed_braids::{
    closure_signature, closure_signature_with, dsl, knot_framing, FramedBraid, FramingConvention,
    Result,
};

fn main() -> Result<()> {
    let knot = FramedBraid::normalize(&dsl::parse("t1^-1 s1^-3", 2)?);
    let sig = closure_signature(&knot)?;
    println!(
        "{knot}: {} component, framing {}",
        sig.component_count, sig.components[0].framing
    );
    println!("knot_framing = {}", knot_framing(&knot)?);
    let int = closure_signature_with(&knot, FramingConvention::Integer)?;
    println!("integer convention framing = {}", int.components[0].framing);

    let hopf = FramedBraid::normalize(&dsl::parse("t1 s1^2 s2", 3)?);
    let sig = closure_signature(&hopf)?;
    for c in &sig.components {
        println!("strands {:?} framing {}", c.strands, c.framing);
    }
    println!("linking matrix {:?}", sig.linking);
    Ok(())
}
