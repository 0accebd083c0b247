//! Runs every identity check over a small corpus of directive words.
//!
//! cargo run --release --example verify_lemmas

use epifactor::corpus::{corpus, CorpusParams};
use epifactor::verify::{verify_corpus, Property, VerifyConfig};

fn main() -> epifactor::Result<()> {
    let specs = corpus(CorpusParams::new(2, 3, 2))?;
    let report = verify_corpus(&specs, &Property::ALL, &VerifyConfig::default());
    for p in &report.properties {
        let verdict = if p.passed() { "PASS" } else { "FAIL" };
        println!(
            "{verdict}  {:<20} {:>7} checks",
            p.property.name(),
            p.checks
        );
        for f in p.failures.iter().take(3) {
            println!("      {f}");
        }
    }
    println!("{} specs, all passed: {}", report.specs, report.passed());
    Ok(())
}
