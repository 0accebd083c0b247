//! The transient c-factors, the indices i, j, k0, m, and the steady state after them.
//!
//! cargo run --example c_transient -- "a^3 | b c a"

use epifactor::closed_form::{c_factorization, table_for_runs, z_factor_k, z_from_c};
use epifactor::episturmian::DirectiveSpec;

fn main() -> epifactor::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "a^2 b | a b".into());
    let spec: DirectiveSpec = text.parse()?;
    let table = table_for_runs(&spec, 12)?;
    let (c, t) = c_factorization(&table, 10)?;
    println!(
        "{spec}: i = {}, j = {}, k0 = {}, m = {}",
        t.i, t.j, t.k0, t.m
    );
    for (k, f) in c.factors.iter().enumerate() {
        let phase = if k < t.j { "transient" } else { "steady" };
        println!("c_{:<2} {phase:<9} {f}", k + 1);
    }
    for k in t.onset..t.onset + 3 {
        println!(
            "z_{k} = {} = {}",
            z_factor_k(&table, k)?,
            z_from_c(&table, &t, k)?
        );
    }
    Ok(())
}
