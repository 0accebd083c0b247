//! Property suites over directive-word corpora.
//!
//! Each [`Property`] is checked per spec and tallied; a failure records the spec,
//! the index involved and the expected/actual words. Nothing here panics on a
//! violated identity, so a whole corpus can be swept and reported at once.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closed_form::{
    c_factor_k, c_transient, sturmian_c_check, table_for_runs, z_factor_k, z_from_c,
};
use crate::episturmian::{standard_prefix, DirectiveSpec, Horizon, MorphismTable};
use crate::error::Result;
use crate::factorizer::{
    c_factorize, complexity_profile, factorize_via_lpf, factorize_with_lpf, lpf,
    reversal_closed_profile, right_special_profile, z_factorize, Factorization, Scheme,
};
use crate::word::{
    concat, is_factor, is_palindrome, is_prefix, is_primitive, is_suffix, power, to_text, Letter,
    Word,
};

/// A named family of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum Property {
    /// `u_{n+1} = h_{n-1} u_n = h_{n-1}⋯h_0 = rev(h_0)⋯rev(h_{n-1})`.
    #[value(alias = "eq1")]
    ProductFormula,
    /// `h_{n-1}` from `u_n` and the previous occurrence `P(n)`.
    #[value(alias = "Pn")]
    PreviousOccurrence,
    /// `h_n = h_{n-1}` iff `x_{n+1} = x_n`; otherwise `u_n` is a proper prefix of `h_n`.
    #[value(alias = "hxPJ")]
    HGrowth,
    /// Prefix/suffix structure of `u_n` around `h_{n-1}` and `v_{n-1}`.
    #[value(alias = "hu")]
    BorderStructure,
    /// `u_{g(m+1)}` as powers of `h_{g(m)-1}` across runs.
    #[value(alias = "deltaY")]
    RunPowers,
    /// `h_n` and its reversal are primitive.
    Primitivity,
    /// Reversal-closed factor sets with at most one right-special factor per length, on a
    /// finite window.
    EpisturmianWindow,
    /// Complexity slope equals (letters in the tail) − 1 past the prefix runs.
    ComplexitySlope,
    /// Closed-form z-factors against the z-oracle.
    ZClosedForm,
    /// Closed-form c-factors (transient and steady state) against the c-oracle.
    CClosedForm,
    /// `z_k = y_{k-1}^{-1} c_{k+k0-1-m} y_k` from the onset on.
    ZFromC,
    /// `h_{g(p)-1} = s_{p-1}` and the standard-word c-factors, binary specs only.
    Sturmian,
    /// c-factor count at most twice the complete z-factor count.
    FactorCounts,
    /// Naive and suffix-array engines agree.
    EngineAgreement,
}

impl Property {
    pub const ALL: [Property; 14] = [
        Property::ProductFormula,
        Property::PreviousOccurrence,
        Property::HGrowth,
        Property::BorderStructure,
        Property::RunPowers,
        Property::Primitivity,
        Property::EpisturmianWindow,
        Property::ComplexitySlope,
        Property::ZClosedForm,
        Property::CClosedForm,
        Property::ZFromC,
        Property::Sturmian,
        Property::FactorCounts,
        Property::EngineAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::ProductFormula => "product-formula",
            Property::PreviousOccurrence => "previous-occurrence",
            Property::HGrowth => "h-growth",
            Property::BorderStructure => "border-structure",
            Property::RunPowers => "run-powers",
            Property::Primitivity => "primitivity",
            Property::EpisturmianWindow => "episturmian-window",
            Property::ComplexitySlope => "complexity-slope",
            Property::ZClosedForm => "z-closed-form",
            Property::CClosedForm => "c-closed-form",
            Property::ZFromC => "z-from-c",
            Property::Sturmian => "sturmian",
            Property::FactorCounts => "factor-counts",
            Property::EngineAgreement => "engine-agreement",
        }
    }

    fn uses_lemma_table(self) -> bool {
        matches!(
            self,
            Property::ProductFormula
                | Property::PreviousOccurrence
                | Property::HGrowth
                | Property::BorderStructure
                | Property::RunPowers
                | Property::Primitivity
        )
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bounds used by the suites.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Table horizon for the `u_n`/`h_n` identities.
    pub lemma_horizon: Horizon,
    /// z-factors compared and run horizon of the oracle prefix, binary alphabets.
    pub binary_oracle: (usize, usize),
    /// Same for larger alphabets.
    pub wide_oracle: (usize, usize),
    /// Starting prefix length for the finite-window checks; see [`stable_window`].
    pub window_len: usize,
    /// Factor lengths each finite-window check must cover.
    pub window_min_lengths: usize,
    /// Number of z-indices checked from the onset of the z/c relation.
    pub z_from_c_span: usize,
    /// Largest `p` for the standard-word checks.
    pub sturmian_p_max: usize,
    /// Prefix lengths for the factor-count monitor.
    pub count_lengths: Vec<usize>,
    /// Random words per spec-independent engine check.
    pub random_words: usize,
    pub random_max_len: usize,
    pub seed: u64,
    /// Keep the label of every passing check, not just the failures.
    pub record_passes: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            lemma_horizon: Horizon::new(31, 1 << 20),
            binary_oracle: (8, 10),
            wide_oracle: (6, 8),
            window_len: 1024,
            window_min_lengths: 64,
            z_from_c_span: 8,
            sturmian_p_max: 10,
            count_lengths: vec![100, 1000, 10_000],
            random_words: 100,
            random_max_len: 500,
            seed: 7,
            record_passes: false,
        }
    }
}

impl VerifyConfig {
    /// `(z-factors compared, run horizon)` for an alphabet size.
    pub fn oracle_bounds(&self, alphabet: usize) -> (usize, usize) {
        if alphabet == 2 {
            self.binary_oracle
        } else {
            self.wide_oracle
        }
    }
}

/// A violated check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub spec: String,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: expected '{}', got '{}'",
            self.spec, self.check, self.expected, self.actual
        )
    }
}

/// Tally for one property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub checks: u64,
    pub failures: Vec<Failure>,
    /// `(spec, check)` labels of passing checks, when requested.
    pub passes: Vec<(String, String)>,
    /// `(spec, reason)` for evaluations cut short by the table horizon. These are neither
    /// passes nor failures.
    pub skipped: Vec<(String, String)>,
}

impl PropertyReport {
    pub fn new(property: Property) -> Self {
        PropertyReport {
            property,
            checks: 0,
            failures: Vec::new(),
            passes: Vec::new(),
            skipped: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: PropertyReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.passes.extend(other.passes);
        self.skipped.extend(other.skipped);
    }
}

/// Check recorder bound to one spec.
struct Recorder<'a> {
    spec: &'a str,
    record_passes: bool,
    report: PropertyReport,
}

impl<'a> Recorder<'a> {
    fn new(spec: &'a str, property: Property, record_passes: bool) -> Self {
        Recorder {
            spec,
            record_passes,
            report: PropertyReport::new(property),
        }
    }

    fn check(&mut self, ok: bool, check: impl FnOnce() -> String) {
        self.report.checks += 1;
        if !ok {
            self.fail(check(), "true", "false");
        } else if self.record_passes {
            self.pass(check());
        }
    }

    fn eq(&mut self, check: impl FnOnce() -> String, expected: &[Letter], actual: &[Letter]) {
        self.report.checks += 1;
        if expected != actual {
            self.fail(check(), &abbreviate(expected), &abbreviate(actual));
        } else if self.record_passes {
            self.pass(check());
        }
    }

    /// A check whose expected/actual values are not words.
    fn outcome(
        &mut self,
        ok: bool,
        check: impl FnOnce() -> String,
        expected: impl FnOnce() -> String,
        actual: impl FnOnce() -> String,
    ) {
        self.report.checks += 1;
        if !ok {
            self.fail(check(), &expected(), &actual());
        } else if self.record_passes {
            self.pass(check());
        }
    }

    fn pass(&mut self, check: String) {
        self.report.passes.push((self.spec.to_string(), check));
    }

    fn fail(&mut self, check: String, expected: &str, actual: &str) {
        self.report.failures.push(Failure {
            spec: self.spec.to_string(),
            check,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn error(&mut self, check: &str, err: crate::error::Error) {
        self.report.checks += 1;
        self.fail(check.to_string(), "no error", &err.to_string());
    }

    fn finish(self) -> PropertyReport {
        self.report
    }
}

fn abbreviate(w: &[Letter]) -> String {
    if w.len() <= 80 {
        to_text(w)
    } else {
        format!("{}…({} letters)", to_text(&w[..80]), w.len())
    }
}

/// Whether `v` is a suffix of `a·b`.
fn is_suffix_of_concat(v: &[Letter], a: &[Letter], b: &[Letter]) -> bool {
    match v.len().checked_sub(b.len()) {
        None => is_suffix(v, b),
        Some(head) => is_suffix(&v[head..], b) && is_suffix(&v[..head], a),
    }
}

/// Whether `v` is a suffix of `w^e`.
fn is_suffix_of_power(v: &[Letter], w: &[Letter], e: usize) -> bool {
    if w.is_empty() {
        return v.is_empty();
    }
    v.len() <= w.len() * e && v.rchunks(w.len()).all(|c| is_suffix(c, w))
}

/// Whether `target` is the concatenation of `parts`.
fn is_concatenation<'a>(target: &[Letter], parts: impl IntoIterator<Item = &'a [Letter]>) -> bool {
    let mut rest = target;
    for p in parts {
        match rest.strip_prefix(p) {
            Some(r) => rest = r,
            None => return false,
        }
    }
    rest.is_empty()
}

/// A table together with the reversals of its `h_n`, shared by the table properties.
pub struct LemmaTable {
    table: MorphismTable,
    h_rev: Vec<Word>,
}

impl LemmaTable {
    pub fn new(table: MorphismTable) -> Self {
        let h_rev = (0..table.max_h_index().map_or(0, |n| n + 1))
            .map(|n| table.h_rev(n).expect("in range"))
            .collect();
        LemmaTable { table, h_rev }
    }

    pub fn table(&self) -> &MorphismTable {
        &self.table
    }
}

/// Identities between `u_n`, `h_n`, `x_n` and the run structure, on a prebuilt table.
pub fn check_table(lemma: &LemmaTable, property: Property, record_passes: bool) -> PropertyReport {
    let table = &lemma.table;
    let label = table.spec().to_string();
    let mut rec = Recorder::new(&label, property, record_passes);
    let n_u = table.max_index();
    let Some(n_h) = table.max_h_index() else {
        return rec.finish();
    };
    let h: Vec<&[Letter]> = (0..=n_h)
        .map(|n| table.h(n).expect("in range").as_slice())
        .collect();
    let hr = &lemma.h_rev;
    let u = |n: usize| table.u(n).expect("in range");
    let x = |n: usize| table.x(n).expect("in range");

    match property {
        Property::ProductFormula => {
            for n in 1..n_u.min(n_h + 1) {
                let next = u(n + 1);
                rec.check(is_concatenation(next, [h[n - 1], u(n)]), || {
                    format!("u_{} = h_{} u_{n}", n + 1, n - 1)
                });
                rec.check(is_concatenation(next, (0..n).rev().map(|i| h[i])), || {
                    format!("u_{} = h_{}⋯h_0", n + 1, n - 1)
                });
                rec.check(
                    is_concatenation(next, (0..n).map(|i| hr[i].as_slice())),
                    || format!("u_{} = rev(h_0)⋯rev(h_{})", n + 1, n - 1),
                );
                rec.check(is_palindrome(next), || format!("u_{} palindrome", n + 1));
            }
        }
        Property::PreviousOccurrence => {
            for n in 1..=n_u.min(n_h + 1) {
                match table.previous_occurrence(n).expect("in range") {
                    None => {
                        let mut ux = u(n).to_vec();
                        ux.push(x(n));
                        rec.eq(|| format!("h_{} = u_{n} x_{n}", n - 1), &ux, h[n - 1]);
                    }
                    Some(p) => {
                        rec.check(is_concatenation(u(n), [h[n - 1], u(p)]), || {
                            format!("h_{} u_{p} = u_{n}", n - 1)
                        });
                        rec.check(
                            is_concatenation(h[n - 1], (p - 1..n - 1).rev().map(|i| h[i])),
                            || format!("h_{} = h_{}⋯h_{}", n - 1, n - 2, p - 1),
                        );
                    }
                }
            }
        }
        Property::HGrowth => {
            for n in 1..=n_h.min(n_u) {
                let same_letter = x(n + 1) == x(n);
                rec.check((h[n] == h[n - 1]) == same_letter, || {
                    format!("h_{n} = h_{} iff x_{} = x_{n}", n - 1, n + 1)
                });
                if !same_letter {
                    rec.check(h[n].len() > u(n).len() && is_prefix(u(n), h[n]), || {
                        format!("u_{n} proper prefix of h_{n}")
                    });
                }
            }
        }
        Property::BorderStructure => {
            for n in 2..=n_u.min(n_h + 1) {
                if table.previous_occurrence(n).expect("in range").is_none() {
                    continue;
                }
                let (un, hn, hrn) = (u(n), h[n - 1], hr[n - 1].as_slice());
                rec.check(is_prefix(hn, un), || format!("h_{} prefix of u_{n}", n - 1));
                rec.check(is_suffix(hrn, un), || {
                    format!("rev(h_{}) suffix of u_{n}", n - 1)
                });
                // v_{n-1} = u_n with rev(h_{n-1}) removed from the end.
                let Some(v) = is_suffix(hrn, un).then(|| &un[..un.len() - hrn.len()]) else {
                    continue;
                };
                rec.check(is_palindrome(v), || format!("v_{} palindrome", n - 1));
                rec.check(is_prefix(v, u(n - 1)) && is_suffix(v, u(n - 1)), || {
                    format!("v_{} prefix and suffix of u_{}", n - 1, n - 1)
                });
                rec.check(is_suffix_of_concat(un, u(n - 1), hrn), || {
                    format!("u_{n} suffix of u_{} rev(h_{})", n - 1, n - 1)
                });
                if x(n) != x(n - 1) {
                    rec.check(is_suffix_of_power(un, hrn, 2), || {
                        format!("u_{n} suffix of rev(h_{})^2", n - 1)
                    });
                    if n < n_u {
                        rec.check(is_suffix_of_power(u(n + 1), hrn, 3), || {
                            format!("u_{} suffix of rev(h_{})^3", n + 1, n - 1)
                        });
                    }
                }
            }
        }
        Property::RunPowers => {
            let mut m = 1;
            while let (Some(a), Some(b)) = (table.g(m), table.g(m + 1)) {
                if b > n_u || a - 1 > n_h {
                    break;
                }
                let d = table.run(m).expect("in range").exponent;
                let (big, hh, hhr) = (u(b), h[a - 1], hr[a - 1].as_slice());
                rec.check(
                    is_concatenation(big, std::iter::repeat_n(hh, d).chain([u(a)])),
                    || format!("u_{b} = h_{}^{d} u_{a}", a - 1),
                );
                rec.check(
                    is_concatenation(
                        big,
                        std::iter::once(u(a)).chain(std::iter::repeat_n(hhr, d)),
                    ),
                    || format!("u_{b} = u_{a} rev(h_{})^{d}", a - 1),
                );
                let blocks: Vec<(usize, usize)> = (1..=m)
                    .map(|t| {
                        (
                            table.g(t).expect("in range") - 1,
                            table.run(t).expect("in range").exponent,
                        )
                    })
                    .collect();
                rec.check(
                    is_concatenation(
                        big,
                        blocks
                            .iter()
                            .rev()
                            .flat_map(|&(i, e)| std::iter::repeat_n(h[i], e)),
                    ),
                    || format!("u_{b} as product of h-powers over runs 1..{m}"),
                );
                rec.check(
                    is_concatenation(
                        big,
                        blocks
                            .iter()
                            .flat_map(|&(i, e)| std::iter::repeat_n(hr[i].as_slice(), e)),
                    ),
                    || format!("u_{b} as product of reversed h-powers over runs 1..{m}"),
                );
                if m >= 2 {
                    rec.check(hh.len() > u(a - 1).len() && is_prefix(u(a - 1), hh), || {
                        format!("u_{} proper prefix of h_{}", a - 1, a - 1)
                    });
                }
                rec.check(is_suffix_of_power(u(a), hhr, 2), || {
                    format!("u_{a} suffix of rev(h_{})^2", a - 1)
                });
                rec.check(is_suffix_of_power(big, hhr, d + 2), || {
                    format!("u_{b} suffix of rev(h_{})^{}", a - 1, d + 2)
                });
                m += 1;
            }
        }
        Property::Primitivity => {
            for n in 0..=n_h {
                rec.check(is_primitive(h[n]).unwrap_or(false), || {
                    format!("h_{n} primitive")
                });
                rec.check(is_primitive(&hr[n]).unwrap_or(false), || {
                    format!("rev(h_{n}) primitive")
                });
            }
        }
        other => panic!("{other} is not a table property"),
    }
    rec.finish()
}

/// Runs one property on one spec.
pub fn check_spec(
    spec: &DirectiveSpec,
    property: Property,
    config: &VerifyConfig,
) -> PropertyReport {
    if property.uses_lemma_table() {
        let table = MorphismTable::with_horizon(spec, config.lemma_horizon);
        return check_table(&LemmaTable::new(table), property, config.record_passes);
    }
    let label = spec.to_string();
    let mut rec = Recorder::new(&label, property, config.record_passes);
    match check_spec_inner(spec, property, config, &mut rec) {
        Ok(()) => {}
        Err(e @ crate::error::Error::BeyondHorizon { .. }) => {
            rec.report.skipped.push((label.clone(), e.to_string()));
        }
        Err(e) => rec.error("evaluation", e),
    }
    rec.finish()
}

fn check_spec_inner(
    spec: &DirectiveSpec,
    property: Property,
    config: &VerifyConfig,
    rec: &mut Recorder<'_>,
) -> Result<()> {
    spec.require_infinite()?;
    let (z_count, runs) = config.oracle_bounds(spec.alphabet_size());
    match property {
        Property::ZClosedForm => {
            let table = table_for_runs(spec, runs)?;
            let prefix = table.u(spec.g(runs).expect("infinite"))?;
            let oracle = z_factorize(prefix)?;
            rec.check(oracle.complete_count() >= z_count, || {
                format!("oracle prefix holds {z_count} complete z-factors")
            });
            let mut parsed = Vec::new();
            for k in 1..=z_count {
                let z = z_factor_k(&table, k)?;
                if let Some(o) = oracle
                    .factors
                    .get(k - 1)
                    .filter(|_| k <= oracle.complete_count())
                {
                    rec.eq(|| format!("z_{k}"), o, &z);
                }
                if k >= 2 {
                    // z_1⋯z_{k-1} = u_{g(k-1)} y_{k-1}
                    let mut expect = table.u(spec.g(k - 1).expect("infinite"))?.to_vec();
                    expect.push(spec.run(k - 1).expect("infinite").letter);
                    rec.eq(
                        || format!("z_1⋯z_{} = u_g({}) y_{}", k - 1, k - 1, k - 1),
                        &expect,
                        &parsed,
                    );
                    let within = table.u(spec.g(k).expect("infinite"))?;
                    rec.check(!is_factor(&z, within), || {
                        format!("z_{k} is not a factor of u_g({k})")
                    });
                }
                parsed.extend_from_slice(&z);
            }
        }
        Property::CClosedForm => {
            // Long prefixes can delay the steady state past the default horizon; extend it so
            // that at least one steady-state factor is compared.
            let t = c_transient(&table_for_runs(spec, transient_runs(spec))?)?;
            let runs = runs.max(t.i + 3);
            let table = table_for_runs(spec, runs)?;
            let prefix = table.u(spec.g(runs).expect("infinite"))?;
            let oracle = c_factorize(prefix)?;
            rec.check(t.j - t.i == t.k0 - t.m, || "j - i = k0 - m".into());
            // Before c_j: u_{g(i)} parsed, then the last fresh letter.
            let early = concat(t.initial_factors[..t.j - 2].iter().map(|w| w.as_slice()));
            rec.eq(
                || format!("c_1⋯c_{} = u_g({})", t.j - 2, t.i),
                table.u(spec.g(t.i).expect("infinite"))?,
                &early,
            );
            rec.eq(
                || format!("c_{} = y_{}", t.j - 1, t.i),
                &[spec.run(t.i).expect("infinite").letter],
                &t.initial_factors[t.j - 2],
            );
            let trusted = oracle.trusted();
            rec.check(trusted.len() > t.j, || {
                "oracle reaches the steady state".into()
            });
            let mut parsed = Vec::new();
            for (idx, o) in trusted.iter().enumerate() {
                let k = idx + 1;
                let c = if k <= t.j {
                    t.initial_factors[k - 1].clone()
                } else {
                    c_factor_k(&table, &t, k)?
                };
                rec.eq(|| format!("c_{k}"), o, &c);
                parsed.extend_from_slice(&c);
                if k >= t.j {
                    let r = k - t.j + t.i + 1;
                    if let Some(gr) = spec.g(r).filter(|&g| g <= table.max_index()) {
                        rec.eq(|| format!("c_1⋯c_{k} = u_g({r})"), table.u(gr)?, &parsed);
                    }
                }
            }
            // (H_n)^{d_n} y_{n+1} is not a factor of u_{g(n+1)} past the transient.
            for n in t.i + 1..runs {
                let g = spec.g(n).expect("infinite");
                let d = spec.run(n).expect("infinite").exponent;
                let mut w = power(&table.h_rev(g - 1)?, d).into_letters();
                w.push(spec.run(n + 1).expect("infinite").letter);
                let within = table.u(spec.g(n + 1).expect("infinite"))?;
                rec.check(!is_factor(&w, within), || {
                    format!(
                        "rev(h_{})^{d} y_{} is not a factor of u_g({})",
                        g - 1,
                        n + 1,
                        n + 1
                    )
                });
            }
        }
        Property::ZFromC => {
            let onset = c_transient(&table_for_runs(spec, transient_runs(spec))?)?.onset;
            let last = onset + config.z_from_c_span;
            let table = table_for_runs(spec, last + 1)?;
            let t = c_transient(&table)?;
            for k in t.onset..=last {
                let direct = z_factor_k(&table, k)?;
                match z_from_c(&table, &t, k) {
                    Ok(via_c) => rec.eq(
                        || format!("z_{k} from c_{}", k + t.k0 - 1 - t.m),
                        &direct,
                        &via_c,
                    ),
                    Err(e) => rec.error(&format!("z_{k} from c"), e),
                }
            }
        }
        Property::Sturmian => {
            if spec.alphabet_size() != 2 {
                return Ok(());
            }
            let table = table_for_runs(spec, config.sturmian_p_max + 2)?;
            let report = sturmian_c_check(&table, config.sturmian_p_max)?;
            for c in &report.checks {
                rec.eq(|| c.label.clone(), &c.expected, &c.actual);
            }
        }
        Property::FactorCounts => {
            for &len in &config.count_lengths {
                let w = standard_prefix(spec, len)?;
                let lpf = lpf(&w);
                let z = factorize_with_lpf(&w, &lpf, Scheme::Z).complete_count();
                let c = factorize_with_lpf(&w, &lpf, Scheme::C).complete_count();
                rec.outcome(
                    c <= 2 * z,
                    || format!("prefix of length {len}: c-count ≤ 2 z-count"),
                    || format!("≤ {}", 2 * z),
                    || c.to_string(),
                );
            }
        }
        Property::EngineAgreement => {
            let table = table_for_runs(spec, runs)?;
            let prefix = table.u(spec.g(runs).expect("infinite"))?;
            compare_engines(prefix, rec, &label_for(prefix));
        }
        Property::EpisturmianWindow => {
            let win = stable_window(spec, config.window_len, config.window_min_lengths)?;
            rec.outcome(
                win.max_len >= config.window_min_lengths,
                || format!("stable window on a prefix of length {}", win.word.len()),
                || format!("≥ {} lengths", config.window_min_lengths),
                || win.max_len.to_string(),
            );
            // Right-special factors of length l are read off the factors of length l + 1.
            let max = win.max_len.saturating_sub(1);
            let closed = reversal_closed_profile(&win.word, max);
            let special = right_special_profile(&win.word);
            for l in 1..=max {
                rec.check(closed[l], || {
                    format!("factors of length {l} closed under reversal")
                });
                rec.check(special[l] <= 1, || {
                    format!(
                        "at most one right-special factor of length {l} (found {})",
                        special[l]
                    )
                });
            }
        }
        Property::ComplexitySlope => {
            let tail_letters = spec.tail_letters().len();
            let start = palindromic_prefix_len(spec, spec.prefix_len())? + 1;
            let win = stable_window(spec, config.window_len, start + config.window_min_lengths)?;
            rec.outcome(
                win.max_len >= start + config.window_min_lengths,
                || format!("stable window on a prefix of length {}", win.word.len()),
                || format!("≥ {} lengths", start + config.window_min_lengths),
                || win.max_len.to_string(),
            );
            for l in start..win.max_len {
                let slope = win.profile[l + 1] as i64 - win.profile[l] as i64;
                rec.outcome(
                    slope == tail_letters as i64 - 1,
                    || format!("p({}) - p({l})", l + 1),
                    || (tail_letters - 1).to_string(),
                    || slope.to_string(),
                );
            }
        }
        _ => unreachable!("table properties are handled by check_table"),
    }
    Ok(())
}

/// Longest confirmation prefix [`stable_window`] will build.
pub const MAX_WINDOW_PREFIX: usize = 1 << 21;

/// Ratio between the confirmation prefix and the window.
pub const WINDOW_CONFIRMATION: usize = 16;

/// A prefix of a standard word and the factor lengths it shows in full.
pub struct StableWindow {
    pub word: Word,
    /// Complexity profile of `word`.
    pub profile: Vec<usize>,
    /// Every length `l ≤ max_len` has the same number of factors in `word` as in the
    /// prefix [`WINDOW_CONFIRMATION`] times longer, and `max_len ≤ |word| / 4`.
    pub max_len: usize,
}

/// Doubles the prefix, starting from `min_len`, until `want` lengths are stable or the
/// confirmation prefix would exceed [`MAX_WINDOW_PREFIX`].
///
/// A finite prefix may not contain every factor of a given length yet; lengths whose
/// factor count still grows on the longer confirmation prefix are left out. Counts only
/// grow with the prefix, so agreement at both ends covers every prefix in between.
pub fn stable_window(spec: &DirectiveSpec, min_len: usize, want: usize) -> Result<StableWindow> {
    let mut len = min_len.max(8);
    loop {
        let long = standard_prefix(spec, WINDOW_CONFIRMATION * len)?;
        let word = Word::from(&long[..len]);
        let profile = complexity_profile(&word);
        let confirmed = complexity_profile(&long);
        let agree = (1..=len / 4)
            .take_while(|&l| profile[l] == confirmed[l])
            .count();
        if agree >= want || 2 * WINDOW_CONFIRMATION * len > MAX_WINDOW_PREFIX {
            return Ok(StableWindow {
                word,
                profile,
                max_len: agree,
            });
        }
        len *= 2;
    }
}

/// Runs enough to contain the point where every letter has been read.
fn transient_runs(spec: &DirectiveSpec) -> usize {
    spec.prefix_runs().len() + spec.tail_runs().len() + 1
}

fn palindromic_prefix_len(spec: &DirectiveSpec, n: usize) -> Result<usize> {
    if n == 0 {
        return Ok(0);
    }
    Ok(crate::episturmian::palindromic_prefix(spec, n)?.len())
}

fn label_for(w: &[Letter]) -> String {
    format!("prefix of length {}", w.len())
}

/// Records whether both engines give identical factorizations of `w`, both schemes.
fn compare_engines(w: &[Letter], rec: &mut Recorder<'_>, what: &str) {
    for scheme in [Scheme::Z, Scheme::C] {
        let naive = match scheme {
            Scheme::Z => z_factorize(w),
            Scheme::C => c_factorize(w),
        };
        let fast = factorize_via_lpf(w, scheme);
        let same = matches!((&naive, &fast), (Ok(a), Ok(b)) if a == b);
        rec.outcome(
            same,
            || format!("{scheme} engines on {what}"),
            || describe(naive),
            || describe(fast),
        );
    }
}

fn describe(f: Result<Factorization>) -> String {
    match f {
        Ok(f) => format!("{f:?}"),
        Err(e) => e.to_string(),
    }
}

/// Engine agreement on seeded random words over 2 and 3 letters.
pub fn check_random_engines(count: usize, max_len: usize, seed: u64) -> PropertyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rec = Recorder::new("random words", Property::EngineAgreement, false);
    for i in 0..count {
        let k = rng.gen_range(2..=3);
        let len = rng.gen_range(1..=max_len.max(1));
        let w = random_word(&mut rng, k, len);
        compare_engines(
            &w,
            &mut rec,
            &format!("random word #{i} ({})", abbreviate(&w)),
        );
    }
    rec.finish()
}

/// A uniformly random word of length `len` over the first `k` letters.
pub fn random_word(rng: &mut impl Rng, k: usize, len: usize) -> Word {
    (0..len)
        .map(|_| Letter::new(rng.gen_range(0..k)).expect("small alphabet"))
        .collect()
}

/// Results for a set of properties over a corpus, in property order.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub specs: usize,
    pub properties: Vec<PropertyReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyReport::passed)
    }
}

/// Sweeps `properties` over `specs`. Table-based properties share one table per spec.
pub fn verify_corpus(
    specs: &[DirectiveSpec],
    properties: &[Property],
    config: &VerifyConfig,
) -> VerifyReport {
    let mut reports: Vec<PropertyReport> =
        properties.iter().map(|&p| PropertyReport::new(p)).collect();
    for spec in specs {
        let needs_table = properties.iter().any(|p| p.uses_lemma_table());
        let table = needs_table
            .then(|| LemmaTable::new(MorphismTable::with_horizon(spec, config.lemma_horizon)));
        for (slot, &p) in reports.iter_mut().zip(properties) {
            let r = match (&table, p.uses_lemma_table()) {
                (Some(t), true) => check_table(t, p, config.record_passes),
                _ => check_spec(spec, p, config),
            };
            slot.absorb(r);
        }
    }
    if config.random_words > 0 {
        if let Some(slot) = reports
            .iter_mut()
            .find(|r| r.property == Property::EngineAgreement)
        {
            slot.absorb(check_random_engines(
                config.random_words,
                config.random_max_len,
                config.seed,
            ));
        }
    }
    VerifyReport {
        specs: specs.len(),
        properties: reports,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> DirectiveSpec {
        s.parse().unwrap()
    }

    fn small() -> VerifyConfig {
        VerifyConfig {
            lemma_horizon: Horizon::new(20, 1 << 14),
            window_len: 256,
            count_lengths: vec![100, 500],
            random_words: 20,
            random_max_len: 60,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn every_property_holds_on_small_specs() {
        let specs = [
            "|a b",
            "a^2 b | a b",
            "|a b c",
            "a^3 c^2 | b c a",
            "b^2 a^3 | b a",
        ]
        .map(spec);
        let report = verify_corpus(&specs, &Property::ALL, &small());
        for p in &report.properties {
            assert!(
                p.passed(),
                "{}: {:?}",
                p.property,
                &p.failures[..p.failures.len().min(3)]
            );
            assert!(p.checks > 0, "{} ran no checks", p.property);
        }
    }

    #[test]
    fn word_helpers() {
        let w = Word::parse("abaaba").unwrap();
        let p = |t: &str| Word::parse(t).unwrap();
        assert!(is_suffix_of_power(&p("baab"), &p("aab"), 2));
        assert!(!is_suffix_of_power(&p("aabaab"), &p("aab"), 1));
        assert!(!is_suffix_of_power(&p("bbab"), &p("aab"), 2));
        assert!(is_suffix_of_concat(&p("aaba"), &p("aa"), &p("ba")));
        assert!(is_suffix_of_concat(&p("a"), &p("bb"), &p("ba")));
        assert!(!is_suffix_of_concat(&p("baba"), &p("aa"), &p("ba")));
        assert!(is_concatenation(&w, [&w[..3], &w[3..]]));
        assert!(!is_concatenation(&w, [&w[..3]]));
        assert!(!is_concatenation(&w, [&w[1..4], &w[3..]]));
    }

    #[test]
    fn failures_name_the_check() {
        let mut rec = Recorder::new("| a b", Property::ZClosedForm, false);
        rec.eq(
            || "z_4".into(),
            &Word::parse("bab").unwrap(),
            &Word::parse("baa").unwrap(),
        );
        let r = rec.finish();
        assert_eq!(r.failures.len(), 1);
        assert_eq!(
            r.failures[0].to_string(),
            "[| a b] z_4: expected 'bab', got 'baa'"
        );
    }
}
