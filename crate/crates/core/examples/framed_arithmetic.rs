//! Products, inverses and normal forms in the framed braid group `RB_n`.

use framed_braids::{dsl, FramedBraid, Result};

fn main() -> Result<()> {
    let a = FramedBraid::normalize(&dsl::parse("s1 t1 s2^-1", 3)?);
    let b = FramedBraid::normalize(&dsl::parse("t3^2 s1", 3)?);
    println!("a = {a}\nb = {b}");

    let ab = a.multiply(&b)?;
    println!(
        "ab = {ab}  (semidirect formula agrees: {})",
        ab.framed_equal(&a.multiply_semidirect(&b)?)?
    );
    println!(
        "a a^-1 is identity: {}",
        a.multiply(&a.inverse())?.is_identity()
    );

    let nf = ab.normal_form();
    println!(
        "framing {:?}, braid part {}",
        nf.lambda,
        nf.garside.to_word()
    );

    // twists slide through crossings onto the permuted strand
    let lhs = FramedBraid::normalize(&dsl::parse("s1 t1", 2)?);
    let rhs = FramedBraid::normalize(&dsl::parse("t2 s1", 2)?);
    println!("s1 t1 == t2 s1: {}", lhs.framed_equal(&rhs)?);
    Ok(())
}
