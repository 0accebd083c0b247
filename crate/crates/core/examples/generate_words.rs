//! Prefixes of a few standard episturmian words and their palindromic prefixes.
//!
//! cargo run --example generate_words

use epifactor::episturmian::{palindromic_prefix, standard_prefix, DirectiveSpec};

fn main() -> epifactor::Result<()> {
    for text in ["| a b", "| a b c", "a^2 b | a b", "c | a^2 b"] {
        let spec: DirectiveSpec = text.parse()?;
        println!("{spec}");
        println!("  prefix  {}", standard_prefix(&spec, 40)?);
        for n in 1..=5 {
            println!("  u_{n}     {}", palindromic_prefix(&spec, n)?);
        }
    }
    Ok(())
}
