//! Enumerated directive-word corpora.

use crate::episturmian::{DirectiveSpec, Run};
use crate::error::Result;
use crate::word::Letter;

/// Every directive word over `alphabet` letters with at most `max_runs` prefix runs of
/// exponent at most `max_exp`, followed by a cyclic rotation of `a b c …` as tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusParams {
    pub alphabet: usize,
    pub max_runs: usize,
    pub max_exp: usize,
}

impl CorpusParams {
    pub fn new(alphabet: usize, max_runs: usize, max_exp: usize) -> Self {
        CorpusParams {
            alphabet,
            max_runs,
            max_exp,
        }
    }
}

/// The specs described by `params`, sorted by their text form.
pub fn corpus(params: CorpusParams) -> Result<Vec<DirectiveSpec>> {
    let k = params.alphabet;
    let letters: Vec<Letter> = (0..k).map(Letter::new).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for shift in 0..k {
        let tail: Vec<Run> = (0..k)
            .map(|i| Run::new(letters[(i + shift) % k], 1))
            .collect();
        for runs in 0..=params.max_runs {
            let mut prefixes = Vec::new();
            letter_sequences(
                &letters,
                runs,
                tail[0].letter,
                &mut Vec::new(),
                &mut prefixes,
            );
            for seq in prefixes {
                for exps in exponent_vectors(runs, params.max_exp) {
                    let prefix = seq
                        .iter()
                        .zip(&exps)
                        .map(|(&l, &e)| Run::new(l, e))
                        .collect();
                    out.push(DirectiveSpec::new(prefix, tail.clone(), Some(k))?);
                }
            }
        }
    }
    out.sort_by_cached_key(|s| s.to_string());
    Ok(out)
}

/// The union of the binary and ternary corpora with `max_runs` runs of exponent ≤ `max_exp`.
pub fn default_corpus(max_runs: usize, max_exp: usize) -> Result<Vec<DirectiveSpec>> {
    let mut all = corpus(CorpusParams::new(2, max_runs, max_exp))?;
    all.extend(corpus(CorpusParams::new(3, max_runs, max_exp))?);
    Ok(all)
}

/// Letter sequences of length `len`, adjacent letters distinct, last letter ≠ `before_tail`.
fn letter_sequences(
    letters: &[Letter],
    len: usize,
    before_tail: Letter,
    current: &mut Vec<Letter>,
    out: &mut Vec<Vec<Letter>>,
) {
    if current.len() == len {
        if current.last() != Some(&before_tail) {
            out.push(current.clone());
        }
        return;
    }
    for &l in letters {
        if current.last() != Some(&l) {
            current.push(l);
            letter_sequences(letters, len, before_tail, current, out);
            current.pop();
        }
    }
}

fn exponent_vectors(len: usize, max_exp: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..=max_exp).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}
