//! Deterministic randomized checking of every move, with a negative control.

use framed_braids::fuzz::{fuzz, parse_move_mix, FuzzConfig};
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let move_mix = parse_move_mix("rl,int-rl,rm,conj,tau-conj,double-coset,plat-stab")?;
    let config = FuzzConfig {
        seed: 7,
        trials: 2000,
        move_mix,
        ..FuzzConfig::default()
    };
    let report = fuzz(&config)?;
    println!("{} passes, {} failures", report.passes, report.failures);
    for (kind, counts) in &report.by_move {
        println!("  {kind:<14} {counts:?}");
    }

    let control = FuzzConfig {
        move_mix: parse_move_mix("neg-l,neg-m")?,
        trials: 500,
        ..config
    };
    let report = fuzz(&control)?;
    println!(
        "negative control drift histogram {:?}",
        report.framing_drift
    );
    Ok(())
}
