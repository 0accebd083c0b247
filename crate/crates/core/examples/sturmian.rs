//! Binary directive words: h-words against standard words s_p, c-factors as reversed powers.
//!
//! cargo run --example sturmian -- "a b^2 | a^2 b"

use epifactor::closed_form::{sturmian_c_check, table_for_runs};
use epifactor::episturmian::{sturmian_standard_word, DirectiveSpec};

fn main() -> epifactor::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "| a b^2".into());
    let spec: DirectiveSpec = text.parse()?;
    for p in -1..=5 {
        println!("s_{p:<2} {}", sturmian_standard_word(&spec, p)?);
    }
    let table = table_for_runs(&spec, 14)?;
    let report = sturmian_c_check(&table, 8)?;
    for c in &report.checks {
        println!(
            "{:<5} {}: {}",
            if c.passed() { "ok" } else { "FAIL" },
            c.label,
            c.actual
        );
    }
    Ok(())
}
