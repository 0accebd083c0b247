//! z- and c-factorizations of an arbitrary word with both engines.
//!
//! cargo run --example factorize_word -- abaababaabaab

use epifactor::factorizer::{factorize, Engine, Scheme};
use epifactor::Word;

fn main() -> epifactor::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "abracadabra".into());
    let w = Word::parse(&text)?;
    for scheme in [Scheme::Z, Scheme::C] {
        let naive = factorize(&w, scheme, Engine::Naive)?;
        let fast = factorize(&w, scheme, Engine::Lpf)?;
        assert_eq!(naive, fast);
        println!(
            "{scheme}: {}  ({} factors, {} complete)",
            fast.to_text(),
            fast.len(),
            fast.complete_count()
        );
    }
    Ok(())
}
