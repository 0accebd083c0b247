//! Closed-form z- and c-factors of standard episturmian words.
//!
//! Write the directive word as runs `y_1^{d_1} y_2^{d_2} ⋯` with `y_m ≠ y_{m+1}` and
//! let `H_m = reversal(h_{g(m)-1})`. Then
//!
//! * `z_1 = x_1` and `z_k = y_{k-1}^{-1} H_{k-1}^{d_{k-1}} y_k` for `k ≥ 2`;
//! * the c-factors start with a short transient and settle into `c_k = H_{k-j+i}^{d_{k-j+i}}`,
//!   where `i` is the first run by which every letter has appeared and `j` is the
//!   index of the factor right after the last fresh letter.
//!
//! Every `y^{-1}` strip checks that the word really starts with `y`; a failure is
//! reported as [`Error::TheoremViolation`].

use crate::episturmian::{sturmian_standard_word, DirectiveSpec, Horizon, MorphismTable};
use crate::error::{Error, Result};
use crate::factorizer::{Factorization, FactorizationJson, Scheme};
use crate::word::{power, reversal, Letter, Word};

/// Builds a table that covers the first `runs` runs, i.e. up to `u_{g(runs+1)}`.
pub fn table_for_runs(spec: &DirectiveSpec, runs: usize) -> Result<MorphismTable> {
    spec.require_infinite()?;
    let top = spec.g(runs + 1).expect("infinite directive");
    Ok(MorphismTable::with_horizon(
        spec,
        Horizon {
            max_index: top + 1,
            ..Horizon::default()
        },
    ))
}

fn run_letter(table: &MorphismTable, m: usize) -> Letter {
    table.run(m).expect("infinite directive").letter
}

/// `H_m^{d_m}` where `H_m = reversal(h_{g(m)-1})`.
fn block(table: &MorphismTable, m: usize) -> Result<Word> {
    let run = table.run(m).expect("infinite directive");
    let g = table.g(m).expect("infinite directive");
    Ok(power(&table.h_rev(g - 1)?, run.exponent))
}

/// `w` without its first letter, which must be `y`.
fn strip_letter(y: Letter, w: &[Letter], context: impl FnOnce() -> String) -> Result<Word> {
    match w.split_first() {
        Some((&first, rest)) if first == y => Ok(Word::from(rest)),
        _ => Err(Error::TheoremViolation(format!(
            "{}: '{}' does not start with '{y}'",
            context(),
            crate::word::to_text(w)
        ))),
    }
}

/// The `k`-th z-factor, 1-based.
pub fn z_factor_k(table: &MorphismTable, k: usize) -> Result<Word> {
    table.spec().require_infinite()?;
    match k {
        0 => Err(Error::OutOfRange {
            what: "z-factors are indexed from 1".into(),
            index: 0,
        }),
        1 => Ok(Word::letter(table.x(1)?)),
        _ => {
            let prev = run_letter(table, k - 1);
            let mut z = strip_letter(prev, &block(table, k - 1)?, || {
                format!("z_{k} of '{}'", table.spec())
            })?
            .into_letters();
            z.push(run_letter(table, k));
            Ok(Word::from_letters(z))
        }
    }
}

/// The first `count` z-factors.
pub fn z_factorization(table: &MorphismTable, count: usize) -> Result<Factorization> {
    let factors = (1..=count)
        .map(|k| z_factor_k(table, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(Factorization {
        scheme: Scheme::Z,
        factors,
        last_complete: true,
        cut_by_input_end: false,
    })
}

/// The initial c-factors and the indices that govern the steady state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CTransient {
    /// `c_1, …, c_j`.
    pub initial_factors: Vec<Word>,
    /// First run index by which every alphabet letter has appeared.
    pub i: usize,
    /// Index of the factor following the last fresh letter.
    pub j: usize,
    /// Alphabet size.
    pub k0: usize,
    /// 1 if `d_1 = 1`, else 0.
    pub m: usize,
    /// First z-index from which `z_k = y_{k-1}^{-1} c_{k+k0-1-m} y_k` holds.
    pub onset: usize,
}

/// Simulates the transient c-factors up to and including `c_j`.
///
/// After `c_1 = y_1` and `c_2` (`y_2` if `d_1 = 1`, else `y_1^{d_1-1}`), the parsed
/// prefix is always `u_{g(n)}·α` with `α` empty or `y_n`, and the next factor is
///
/// * `y_n` when `α` is empty and `y_n` is fresh;
/// * `H_n^{d_n}` when `α` is empty and `y_n` has been seen;
/// * `y_n^{-1} H_n^{d_n}` when `α = y_n`.
pub fn c_transient(table: &MorphismTable) -> Result<CTransient> {
    let spec = table.spec();
    spec.require_infinite()?;
    let k0 = spec.alphabet_size();
    let first = table.run(1).expect("infinite directive");
    let mut seen = vec![false; k0];
    seen[first.letter.index()] = true;

    let mut factors = vec![Word::letter(first.letter)];
    // The parsed prefix is u_{g(n)}, followed by y_n when `pending`.
    let mut n = 2;
    let mut pending = false;
    let mut i = None;
    let mut j = None;

    if first.exponent == 1 {
        let y2 = run_letter(table, 2);
        factors.push(Word::letter(y2));
        pending = true;
        if first_sighting(&mut seen, y2) && seen.iter().all(|&s| s) {
            i = Some(2);
            j = Some(factors.len() + 1);
        }
    } else {
        factors.push(power(&[first.letter], first.exponent - 1));
    }

    while j.is_none_or(|j| factors.len() < j) {
        let y = run_letter(table, n);
        if pending {
            let next = strip_letter(y, &block(table, n)?, || {
                format!("c_{} of '{spec}'", factors.len() + 1)
            })?;
            factors.push(next);
            pending = false;
            n += 1;
        } else if !seen[y.index()] {
            factors.push(Word::letter(y));
            pending = true;
            if first_sighting(&mut seen, y) && seen.iter().all(|&s| s) {
                i = Some(n);
                j = Some(factors.len() + 1);
            }
        } else {
            factors.push(block(table, n)?);
            n += 1;
        }
    }

    let (i, j) = (i.expect("all letters seen"), j.expect("all letters seen"));
    let m = usize::from(first.exponent == 1);
    if j - i != k0 - m {
        return Err(Error::TheoremViolation(format!(
            "'{spec}': j - i = {} but expected {}",
            j - i,
            k0 - m
        )));
    }
    Ok(CTransient {
        initial_factors: factors,
        i,
        j,
        k0,
        m,
        onset: i + 2,
    })
}

fn first_sighting(seen: &mut [bool], y: Letter) -> bool {
    !std::mem::replace(&mut seen[y.index()], true)
}

/// The `k`-th c-factor for `k ≥ j`.
pub fn c_factor_k(table: &MorphismTable, transient: &CTransient, k: usize) -> Result<Word> {
    let j = transient.j;
    if k < j {
        return Err(Error::OutOfRange {
            what: format!("c-factors before j = {j} belong to the transient"),
            index: k,
        });
    }
    if k == j {
        return Ok(transient.initial_factors[j - 1].clone());
    }
    block(table, k - j + transient.i)
}

/// The first `count` c-factors together with the transient data.
pub fn c_factorization(table: &MorphismTable, count: usize) -> Result<(Factorization, CTransient)> {
    let transient = c_transient(table)?;
    let factors = (1..=count)
        .map(|k| {
            if k <= transient.j {
                Ok(transient.initial_factors[k - 1].clone())
            } else {
                c_factor_k(table, &transient, k)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((
        Factorization {
            scheme: Scheme::C,
            factors,
            last_complete: true,
            cut_by_input_end: false,
        },
        transient,
    ))
}

/// Closed-form c-factorization in serialized form, with the transient indices.
pub fn c_factorization_json(table: &MorphismTable, count: usize) -> Result<FactorizationJson> {
    let (f, t) = c_factorization(table, count)?;
    let mut json = f.to_json();
    json.source = Some("closed_form".into());
    json.transient = Some(t.initial_factors.iter().map(|w| w.to_string()).collect());
    json.i = Some(t.i);
    json.j = Some(t.j);
    json.k0 = Some(t.k0);
    json.m = Some(t.m);
    json.onset = Some(t.onset);
    Ok(json)
}

/// Closed-form z-factorization in serialized form.
pub fn z_factorization_json(table: &MorphismTable, count: usize) -> Result<FactorizationJson> {
    let mut json = z_factorization(table, count)?.to_json();
    json.source = Some("closed_form".into());
    Ok(json)
}

/// `z_k` read off the c-sequence: `y_{k-1}^{-1} c_{k+k0-1-m} y_k`.
pub fn z_from_c(table: &MorphismTable, transient: &CTransient, k: usize) -> Result<Word> {
    if k < transient.onset {
        return Err(Error::OutOfRange {
            what: format!("z from c holds from k = {} on", transient.onset),
            index: k,
        });
    }
    let c = c_factor_k(table, transient, k + transient.k0 - 1 - transient.m)?;
    let mut z = strip_letter(run_letter(table, k - 1), &c, || {
        format!("z_{k} from c of '{}'", table.spec())
    })?
    .into_letters();
    z.push(run_letter(table, k));
    Ok(Word::from_letters(z))
}

/// One comparison made by [`sturmian_c_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmianCheck {
    pub label: String,
    pub expected: Word,
    pub actual: Word,
}

impl SturmianCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SturmianReport {
    pub checks: Vec<SturmianCheck>,
}

impl SturmianReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(SturmianCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SturmianCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// For a binary directive word: `h_{g(p)-1} = s_{p-1}` for `1 ≤ p ≤ p_max`, and the
/// steady-state c-factors equal `reversal(s_{k+m-3})^{d_{k+m-2}}` while `k+m-2 ≤ p_max`.
pub fn sturmian_c_check(table: &MorphismTable, p_max: usize) -> Result<SturmianReport> {
    let spec = table.spec();
    if spec.alphabet_size() != 2 {
        return Err(Error::NotBinary(spec.alphabet_size()));
    }
    let mut report = SturmianReport::default();
    for p in 1..=p_max {
        let g = spec.g(p).expect("infinite directive");
        report.checks.push(SturmianCheck {
            label: format!("h_{} = s_{}", g - 1, p as i64 - 1),
            expected: sturmian_standard_word(spec, p as i64 - 1)?,
            actual: table.h(g - 1)?.clone(),
        });
    }
    let transient = c_transient(table)?;
    let m = transient.m;
    let mut k = transient.j + 1;
    while k + m - 2 <= p_max {
        let d = table.run(k + m - 2).expect("infinite directive").exponent;
        let s = sturmian_standard_word(spec, (k + m) as i64 - 3)?;
        report.checks.push(SturmianCheck {
            label: format!("c_{k} = rev(s_{})^{d}", k + m - 3),
            expected: power(&reversal(&s), d),
            actual: c_factor_k(table, &transient, k)?,
        });
        k += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(s: &str, runs: usize) -> MorphismTable {
        table_for_runs(&s.parse().unwrap(), runs).unwrap()
    }

    fn texts(f: &[Word]) -> Vec<String> {
        f.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn z_factor_examples() {
        let fib = table("|a b", 8);
        assert_eq!(z_factor_k(&fib, 1).unwrap().to_string(), "a");
        assert_eq!(z_factor_k(&fib, 4).unwrap().to_string(), "bab");
        assert_eq!(
            z_factor_k(&table("|a b c", 6), 3).unwrap().to_string(),
            "ac"
        );
        assert!(z_factor_k(&fib, 0).is_err());
    }

    #[test]
    fn z_factorization_examples() {
        let f = z_factorization(&table("|a b", 8), 5).unwrap();
        assert_eq!(texts(&f.factors), ["a", "b", "aa", "bab", "aabaa"]);
        let f = z_factorization(&table("|a b c", 8), 4).unwrap();
        assert_eq!(texts(&f.factors), ["a", "b", "ac", "abaa"]);
        let f = z_factorization(&table("a^2 | b a", 4), 1).unwrap();
        assert_eq!(texts(&f.factors), ["a"]);
    }

    #[test]
    fn transient_examples() {
        let t = c_transient(&table("|a b", 8)).unwrap();
        assert_eq!(texts(&t.initial_factors), ["a", "b", "a"]);
        assert_eq!((t.i, t.j, t.k0, t.m), (2, 3, 2, 1));
        assert_eq!(t.onset, 4);

        let t = c_transient(&table("a^2 b | a b", 8)).unwrap();
        assert_eq!(texts(&t.initial_factors[..2]), ["a", "a"]);
        assert_eq!(t.j - t.i, 2);
        assert_eq!(t.m, 0);

        let t = c_transient(&table("|a b c", 8)).unwrap();
        assert_eq!(t.j - t.i, 2);
    }

    #[test]
    fn c_factor_examples() {
        let fib = table("|a b", 8);
        let t = c_transient(&fib).unwrap();
        assert_eq!(c_factor_k(&fib, &t, 4).unwrap().to_string(), "aba");
        assert_eq!(c_factor_k(&fib, &t, 5).unwrap().to_string(), "baaba");
        assert_eq!(c_factor_k(&fib, &t, 3).unwrap().to_string(), "a");
        assert!(c_factor_k(&fib, &t, 2).is_err());
    }

    #[test]
    fn z_from_c_examples() {
        let fib = table("|a b", 10);
        let t = c_transient(&fib).unwrap();
        assert_eq!(z_from_c(&fib, &t, 4).unwrap().to_string(), "bab");
        assert_eq!(z_from_c(&fib, &t, 5).unwrap().to_string(), "aabaa");
        assert!(matches!(
            z_from_c(&fib, &t, 3),
            Err(Error::OutOfRange { index: 3, .. })
        ));
        let tri = table("|a b c", 14);
        let t = c_transient(&tri).unwrap();
        for k in t.onset..t.onset + 8 {
            assert_eq!(z_from_c(&tri, &t, k).unwrap(), z_factor_k(&tri, k).unwrap());
        }
    }

    #[test]
    fn sturmian_examples() {
        let r = sturmian_c_check(&table("|a b", 12), 3).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.checks[0].actual.to_string(), "a");
        assert_eq!(r.checks[2].actual.to_string(), "aba");
        let r = sturmian_c_check(&table("a^2 | b a", 12), 2).unwrap();
        assert_eq!(r.checks[1].actual.to_string(), "aab");
        assert!(r.all_passed());
        assert_eq!(
            sturmian_c_check(&table("|a b c", 4), 2),
            Err(Error::NotBinary(3))
        );
    }

    #[test]
    fn finite_specs_are_rejected() {
        let t = MorphismTable::new(&"a^2 b".parse().unwrap());
        assert_eq!(z_factor_k(&t, 1), Err(Error::FiniteDirective));
        assert_eq!(c_transient(&t), Err(Error::FiniteDirective));
    }
}
