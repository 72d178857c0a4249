//! Plat closures, Hilden double cosets and stabilisation.

use framed_braids::hilden::GeneratorDictionary;
use framed_braids::plat::{
    double_coset_move, plat_signature, plat_signatures_match, plat_stabilize, plat_trivializes,
};
use framed_braids::{dsl, FramedBraid, Result};

fn main() -> Result<()> {
    let b = FramedBraid::normalize(&dsl::parse("t2 s2 s3^-1 s2 s1^2", 4)?);
    let sig = plat_signature(&b)?;
    println!(
        "{b}: {} components, |lk| {:?}",
        sig.component_count, sig.abs_linking
    );

    let d = GeneratorDictionary::builtin(2);
    let h1 = d.get("theta_1").unwrap().multiply(d.get("s_1").unwrap())?;
    let h2 = d
        .get("omega_2")
        .unwrap()
        .multiply(&d.get("p_1").unwrap().inverse())?;
    let moved = double_coset_move(&b, &h1, &h2)?;
    println!(
        "h1 b h2 = {moved}, same plat: {}",
        plat_signatures_match(&sig, &plat_signature(&moved)?)
    );

    let s = plat_stabilize(&b, 1)?;
    println!(
        "stabilised = {s}, same plat: {}",
        plat_signatures_match(&sig, &plat_signature(&s)?)
    );

    for name in ["p_1", "s_1", "theta_2", "omega_1", "g_2"] {
        println!(
            "{name} plat-trivial: {}",
            plat_trivializes(d.get(name).unwrap())?
        );
    }
    println!(
        "s2 plat-trivial: {}",
        plat_trivializes(&FramedBraid::normalize(&dsl::parse("s2", 4)?))?
    );
    Ok(())
}
