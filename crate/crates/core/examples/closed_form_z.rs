//! z-factors from the directive word alone, compared with a direct factorization.
//!
//! cargo run --example closed_form_z -- "a^2 b | a b c"

use epifactor::closed_form::{table_for_runs, z_factorization};
use epifactor::episturmian::DirectiveSpec;
use epifactor::factorizer::z_factorize;

fn main() -> epifactor::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "| a b c".into());
    let spec: DirectiveSpec = text.parse()?;
    let runs = 8;
    let table = table_for_runs(&spec, runs)?;
    let prefix = table.u(spec.g(runs).unwrap())?;
    let oracle = z_factorize(prefix)?;
    let k = oracle.complete_count().min(runs - 1);
    let closed = z_factorization(&table, k)?;
    for (i, (c, o)) in closed.factors.iter().zip(&oracle.factors).enumerate() {
        let mark = if c == o { "=" } else { "!=" };
        println!("z_{:<2} {c} {mark} {o}", i + 1);
    }
    Ok(())
}
