//! Garside normal forms and the word problem in `B_n`.

use framed_braids::garside::{are_equal, half_twist, to_normal_form};
use framed_braids::{dsl, Result};

fn main() -> Result<()> {
    let a = dsl::parse("s1 s2 s1 s3^-1 s2", 4)?;
    let nf = to_normal_form(&a)?;
    println!(
        "{a}  ->  Δ^{} · {} factors  =  {}",
        nf.inf,
        nf.factors.len(),
        nf.to_word()
    );

    let b = dsl::parse("s2 s1 s2 s3^-1 s2", 4)?;
    println!("{a} == {b}: {}", are_equal(&a, &b)?);

    let d = half_twist(4);
    let dd = d.concat(&d)?;
    let central = dd.concat(&a)?;
    println!("Δ² is central: {}", are_equal(&central, &a.concat(&dd)?)?);
    println!(
        "s1 s2 == s2 s1: {}",
        are_equal(&dsl::parse("s1 s2", 3)?, &dsl::parse("s2 s1", 3)?)?
    );
    Ok(())
}
