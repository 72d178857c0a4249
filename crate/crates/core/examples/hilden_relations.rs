//! Checking the Hilden and framed Hilden relations, and catching a bad generator.

use framed_braids::hilden::{verify_relation_suite, GeneratorDictionary, Suite};
use framed_braids::Result;

fn main() -> Result<()> {
    for n in 2..=4 {
        let d = GeneratorDictionary::builtin(n);
        for suite in [Suite::Hilden, Suite::FramedHilden, Suite::PureFramed] {
            let reports = verify_relation_suite(&d, suite);
            let holds = reports.iter().filter(|r| r.holds).count();
            let skipped = reports.iter().filter(|r| r.skipped).count();
            println!(
                "n={n} {suite:?}: {holds} hold, {skipped} skipped, {} total",
                reports.len()
            );
        }
    }

    let mut d = GeneratorDictionary::builtin(3);
    d.load("# theta without its twist\ntheta_1 = s1")?;
    for r in verify_relation_suite(&d, Suite::FramedHilden)
        .iter()
        .filter(|r| !r.holds)
    {
        println!("fails: {}", r.relation_id);
    }
    Ok(())
}
