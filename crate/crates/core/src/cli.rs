//! The `epifactor` command line.
//!
//! Exit codes: 0 on success, 1 on usage or validation errors, 2 when a closed form and
//! an oracle disagree. JSON goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::closed_form::{c_factorization_json, table_for_runs, z_factorization_json};
use crate::corpus::{corpus, CorpusParams};
use crate::episturmian::{standard_prefix, DirectiveSpec};
use crate::error::{Error, Result};
use crate::factorizer::{factorize, Engine, Factorization, FactorizationJson, Scheme};
use crate::verify::{random_word, verify_corpus, Property, VerifyConfig, VerifyReport};
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Longest prefix searched when a directive word is factorized by an oracle.
const MAX_ORACLE_PREFIX: usize = 1 << 22;

#[derive(Parser, Debug)]
#[command(
    name = "epifactor",
    version,
    about = "Factorizations of standard episturmian words"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a prefix of the standard episturmian word of a directive.
    Generate(GenerateArgs),
    /// Factorize a directive word's standard word or a literal word.
    Factorize(FactorizeArgs),
    /// Run the property suites over a corpus of directives.
    Verify(VerifyArgs),
    /// Time an engine on a long input.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Z,
    C,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Scheme {
        match s {
            SchemeArg::Z => Scheme::Z,
            SchemeArg::C => Scheme::C,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Naive,
    Lpf,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Naive => Engine::Naive,
            EngineArg::Lpf => Engine::Lpf,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    /// Brute-force factorization of a long enough prefix.
    Oracle,
    /// Factors computed from the directive word.
    Closed,
    /// Both, with a match verdict.
    Both,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// Directive word, e.g. "a^2 b | a b".
    #[arg(short = 'd', long = "directive")]
    pub directive: String,
    /// Prefix length.
    #[arg(short = 'n', long)]
    pub length: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["directive", "literal"])))]
pub struct FactorizeArgs {
    #[arg(short = 'd', long = "directive")]
    pub directive: Option<String>,
    /// A literal word over a..z.
    #[arg(long)]
    pub literal: Option<String>,
    #[arg(long, value_enum, default_value_t = SchemeArg::Z)]
    pub scheme: SchemeArg,
    /// Number of factors; required for directives.
    #[arg(short = 'k', long)]
    pub count: Option<usize>,
    #[arg(long, value_enum, default_value_t = Source::Oracle)]
    pub source: Source,
    #[arg(long, value_enum, default_value_t = EngineArg::Lpf)]
    pub engine: EngineArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Alphabet size of the corpus; both 2 and 3 when omitted.
    #[arg(long)]
    pub alphabet: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub max_runs: usize,
    #[arg(long, default_value_t = 3)]
    pub max_exp: usize,
    /// Check these directives instead of a corpus.
    #[arg(long = "spec")]
    pub specs: Vec<String>,
    /// Restrict to these properties (repeatable); all when omitted.
    #[arg(long = "lemma", value_enum)]
    pub properties: Vec<Property>,
    /// Seed for the random-word engine check.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Failures listed per property.
    #[arg(long, default_value_t = 10)]
    pub max_failures: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = EngineArg::Lpf)]
    pub engine: EngineArg,
    /// Directive word; the Fibonacci directive when neither this nor a random word is asked for.
    #[arg(short = 'd', long = "directive", conflicts_with = "literal_random")]
    pub directive: Option<String>,
    /// Factorize a uniformly random word instead.
    #[arg(long)]
    pub literal_random: bool,
    /// Alphabet size of the random word.
    #[arg(long, default_value_t = 2)]
    pub alphabet: usize,
    #[arg(short = 'n', long)]
    pub length: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = SchemeArg::Z)]
    pub scheme: SchemeArg,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::TheoremViolation(_) => EXIT_MISMATCH,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Generate(a) => generate(a, out),
        Command::Factorize(a) => factorize_cmd(a, out),
        Command::Verify(a) => verify_cmd(a, out),
        Command::Bench(a) => bench(a, out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("cannot write output: {e}"))
}

fn parse_spec(text: &str) -> Result<DirectiveSpec> {
    let spec: DirectiveSpec = text.parse()?;
    spec.require_infinite()?;
    Ok(spec)
}

fn positive(what: &str, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: format!("{what} must be positive"),
            index: n,
        });
    }
    Ok(n)
}

fn generate(a: GenerateArgs, out: &mut dyn Write) -> Result<i32> {
    let spec = parse_spec(&a.directive)?;
    let w = standard_prefix(&spec, positive("length", a.length)?)?;
    match a.format {
        Format::Text => writeln!(out, "{w}"),
        Format::Json => writeln!(
            out,
            "{}",
            json!({"directive": spec.to_string(), "length": w.len(), "word": w.to_string()})
        ),
    }
    .map_err(io)?;
    Ok(EXIT_OK)
}

/// The first `count` factors of the standard word, from factorizing growing prefixes.
pub fn oracle_factors(
    spec: &DirectiveSpec,
    scheme: Scheme,
    engine: Engine,
    count: usize,
) -> Result<Factorization> {
    let mut len = 64;
    loop {
        let w = standard_prefix(spec, len)?;
        let f = factorize(&w, scheme, engine)?;
        let trusted = match scheme {
            Scheme::Z => f.complete_count(),
            Scheme::C => f.trusted().len(),
        };
        if trusted >= count {
            return Ok(Factorization {
                scheme,
                factors: f.factors[..count].to_vec(),
                last_complete: true,
                cut_by_input_end: false,
            });
        }
        if len >= MAX_ORACLE_PREFIX {
            return Err(Error::OutOfRange {
                what: format!(
                    "{count} {scheme}-factors need a prefix longer than {MAX_ORACLE_PREFIX}"
                ),
                index: count,
            });
        }
        len *= 2;
    }
}

/// Closed-form factors with the serialized form.
pub fn closed_factors(
    spec: &DirectiveSpec,
    scheme: Scheme,
    count: usize,
) -> Result<FactorizationJson> {
    // Factor k never needs more than k + (number of runs before the steady state) runs.
    let runs = count + spec.prefix_runs().len() + spec.tail_runs().len() + 2;
    let table = table_for_runs(spec, runs)?;
    match scheme {
        Scheme::Z => z_factorization_json(&table, count),
        Scheme::C => c_factorization_json(&table, count),
    }
}

/// 1-based index of the first factor where two lists differ, if any.
pub fn first_divergence(a: &[Word], b: &[Word]) -> Option<usize> {
    let common = a.iter().zip(b).position(|(x, y)| x != y);
    match common {
        Some(i) => Some(i + 1),
        None if a.len() != b.len() => Some(a.len().min(b.len()) + 1),
        None => None,
    }
}

fn factorize_cmd(a: FactorizeArgs, out: &mut dyn Write) -> Result<i32> {
    let scheme = Scheme::from(a.scheme);
    let engine = Engine::from(a.engine);
    if let Some(text) = &a.literal {
        if a.source != Source::Oracle {
            return Err(Error::Parse("closed forms need a directive (-d)".into()));
        }
        let w = Word::parse(text)?;
        let mut f = factorize(&w, scheme, engine)?;
        if let Some(k) = a.count {
            f.factors.truncate(positive("count", k)?);
        }
        emit(out, a.format, &f.to_json()).map_err(io)?;
        return Ok(EXIT_OK);
    }

    let spec = parse_spec(a.directive.as_deref().expect("clap enforces an input"))?;
    let count = positive(
        "count",
        a.count
            .ok_or_else(|| Error::Parse("-k/--count is required with a directive".into()))?,
    )?;
    match a.source {
        Source::Oracle => {
            let mut json = oracle_factors(&spec, scheme, engine, count)?.to_json();
            json.source = Some("oracle".into());
            emit(out, a.format, &json).map_err(io)?;
            Ok(EXIT_OK)
        }
        Source::Closed => {
            emit(out, a.format, &closed_factors(&spec, scheme, count)?).map_err(io)?;
            Ok(EXIT_OK)
        }
        Source::Both => {
            let closed = closed_factors(&spec, scheme, count)?;
            let mut oracle = oracle_factors(&spec, scheme, engine, count)?.to_json();
            oracle.source = Some("oracle".into());
            let closed_words = closed.clone().into_factorization()?.factors;
            let oracle_words = oracle.clone().into_factorization()?.factors;
            let diverge = first_divergence(&oracle_words, &closed_words);
            match a.format {
                Format::Text => {
                    writeln!(out, "oracle: {}", oracle.factors.join("|")).map_err(io)?;
                    writeln!(out, "closed: {}", closed.factors.join("|")).map_err(io)?;
                    match diverge {
                        None => writeln!(out, "MATCH"),
                        Some(k) => writeln!(out, "MISMATCH at factor {k}"),
                    }
                    .map_err(io)?;
                }
                Format::Json => {
                    let v = json!({
                        "directive": spec.to_string(),
                        "oracle": oracle,
                        "closed": closed,
                        "match": diverge.is_none(),
                        "first_divergence": diverge,
                    });
                    writeln!(out, "{v}").map_err(io)?;
                }
            }
            Ok(if diverge.is_none() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, json: &FactorizationJson) -> std::io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{}", json.factors.join("|")),
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(json).expect("factorizations serialize")
        ),
    }
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let mut specs = Vec::new();
    if a.specs.is_empty() {
        let alphabets = match a.alphabet {
            Some(k) => vec![k],
            None => vec![2, 3],
        };
        for k in alphabets {
            if k < 2 {
                return Err(Error::AlphabetTooSmall(k));
            }
            specs.extend(corpus(CorpusParams::new(
                k,
                a.max_runs,
                positive("max-exp", a.max_exp)?,
            ))?);
        }
    } else {
        for s in &a.specs {
            specs.push(parse_spec(s)?);
        }
    }
    specs.sort_by_cached_key(|s| s.to_string());
    let properties = if a.properties.is_empty() {
        Property::ALL.to_vec()
    } else {
        a.properties.clone()
    };
    let config = VerifyConfig {
        seed: a.seed,
        record_passes: !a.specs.is_empty() && !a.properties.is_empty(),
        // Random words only accompany corpus sweeps.
        random_words: if a.specs.is_empty() {
            VerifyConfig::default().random_words
        } else {
            0
        },
        ..VerifyConfig::default()
    };
    let report = verify_corpus(&specs, &properties, &config);
    match a.format {
        Format::Text => write_report_text(out, &report, a.max_failures),
        Format::Json => write_report_json(out, &report, a.max_failures),
    }
    .map_err(io)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn write_report_text(
    out: &mut dyn Write,
    r: &VerifyReport,
    max_failures: usize,
) -> std::io::Result<()> {
    for p in &r.properties {
        for (spec, check) in &p.passes {
            writeln!(out, "pass  [{spec}] {check}")?;
        }
        let verdict = if p.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{verdict}  {:<20} {} checks, {} failures over {} specs",
            p.property.name(),
            p.checks,
            p.failures.len(),
            r.specs
        )?;
        if !p.skipped.is_empty() {
            writeln!(
                out,
                "      {} specs cut short by the table horizon",
                p.skipped.len()
            )?;
            for (spec, why) in p.skipped.iter().take(max_failures) {
                writeln!(out, "      skipped [{spec}]: {why}")?;
            }
        }
        for f in p.failures.iter().take(max_failures) {
            writeln!(out, "      {f}")?;
        }
    }
    let failed = r.properties.iter().filter(|p| !p.passed()).count();
    if failed == 0 {
        writeln!(out, "all {} properties passed", r.properties.len())
    } else {
        writeln!(out, "{failed} of {} properties failed", r.properties.len())
    }
}

fn write_report_json(
    out: &mut dyn Write,
    r: &VerifyReport,
    max_failures: usize,
) -> std::io::Result<()> {
    let properties: Vec<_> = r
        .properties
        .iter()
        .map(|p| {
            json!({
                "property": p.property.name(),
                "passed": p.passed(),
                "checks": p.checks,
                "failure_count": p.failures.len(),
                "skipped": p.skipped.len(),
                "failures": p.failures.iter().take(max_failures).map(|f| json!({
                    "spec": f.spec,
                    "check": f.check,
                    "expected": f.expected,
                    "actual": f.actual,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let v = json!({"specs": r.specs, "passed": r.passed(), "properties": properties});
    writeln!(out, "{v}")
}

fn bench(a: BenchArgs, out: &mut dyn Write) -> Result<i32> {
    let len = positive("length", a.length)?;
    let (w, input) = if a.literal_random {
        if !(2..=crate::word::MAX_ALPHABET).contains(&a.alphabet) {
            return Err(Error::AlphabetTooSmall(a.alphabet));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        (
            random_word(&mut rng, a.alphabet, len),
            json!({"kind": "random", "alphabet": a.alphabet, "seed": a.seed}),
        )
    } else {
        let spec = parse_spec(a.directive.as_deref().unwrap_or("| a b"))?;
        (
            standard_prefix(&spec, len)?,
            json!({"kind": "directive", "directive": spec.to_string()}),
        )
    };
    let scheme = Scheme::from(a.scheme);
    let start = Instant::now();
    let f = factorize(&w, scheme, Engine::from(a.engine))?;
    let seconds = start.elapsed().as_secs_f64();
    let v = json!({
        "engine": match a.engine { EngineArg::Naive => "naive", EngineArg::Lpf => "lpf" },
        "scheme": scheme,
        "input": input,
        "length": w.len(),
        "factors": f.len(),
        "complete_factors": f.complete_count(),
        "seconds": seconds,
    });
    writeln!(out, "{v}").map_err(io)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("epifactor").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn generate_examples() {
        assert_eq!(
            call(&["generate", "-d", "|a b", "-n", "13"]).1,
            "abaababaabaab\n"
        );
        assert_eq!(
            call(&["generate", "-d", "|a b c", "-n", "7"]).1,
            "abacaba\n"
        );
        let (code, _, err) = call(&["generate", "-d", "|a a", "-n", "3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("tail run 1/2"), "{err}");
    }

    #[test]
    fn factorize_examples() {
        let (code, out, _) = call(&[
            "factorize",
            "-d",
            "|a b",
            "--scheme",
            "z",
            "-k",
            "5",
            "--source",
            "both",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("oracle: a|b|aa|bab|aabaa\n"), "{out}");
        assert!(out.ends_with("MATCH\n"));
        assert_eq!(
            call(&["factorize", "--literal", "aaaa", "--scheme", "c"]).1,
            "a|aaa\n"
        );
        let (code, _, err) = call(&["factorize", "--literal", "", "--scheme", "c"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("empty"), "{err}");
    }

    #[test]
    fn divergence_index() {
        let w = |s: &str| Word::parse(s).unwrap();
        assert_eq!(first_divergence(&[w("a"), w("b")], &[w("a"), w("b")]), None);
        assert_eq!(
            first_divergence(&[w("a"), w("b")], &[w("a"), w("c")]),
            Some(2)
        );
        assert_eq!(first_divergence(&[w("a")], &[w("a"), w("c")]), Some(2));
    }
}
