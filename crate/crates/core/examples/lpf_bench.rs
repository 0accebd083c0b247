//! Times the suffix-array LPF engine on long Fibonacci and random prefixes.
//!
//! cargo run --release --example lpf_bench -- 1000000

use std::time::Instant;

use epifactor::episturmian::{standard_prefix, DirectiveSpec};
use epifactor::factorizer::{factorize_via_lpf, Scheme};
use epifactor::verify::random_word;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> epifactor::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1_000_000);
    let fib: DirectiveSpec = "| a b".parse()?;
    let inputs = [
        ("fibonacci", standard_prefix(&fib, n)?),
        (
            "random-2",
            random_word(&mut ChaCha8Rng::seed_from_u64(1), 2, n),
        ),
    ];
    for (name, w) in &inputs {
        for scheme in [Scheme::Z, Scheme::C] {
            let start = Instant::now();
            let f = factorize_via_lpf(w, scheme)?;
            println!(
                "{name:<10} {scheme} n={n} factors={:<8} {:.3}s",
                f.len(),
                start.elapsed().as_secs_f64()
            );
        }
    }
    Ok(())
}
