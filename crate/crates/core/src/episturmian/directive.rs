//! Run-length encoded directive words with an eventually periodic tail.
//!
//! Text grammar:
//!
//! ```text
//! spec    := runlist [ "|" runlist ]
//! runlist := run { ("," | space) run }
//! run     := letter [ "^" integer ]
//! ```
//!
//! The part after `|` repeats forever, so `"a^2 b | a b"` is `aab(ab)(ab)…`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{Letter, Word, MAX_ALPHABET};

/// A maximal block `letter^exponent` of the directive word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Run {
    pub letter: Letter,
    pub exponent: usize,
}

impl Run {
    pub fn new(letter: Letter, exponent: usize) -> Self {
        Run { letter, exponent }
    }
}

/// A directive word `y_1^{d_1} y_2^{d_2} ⋯` given as finite prefix runs followed by
/// tail runs repeated forever.
///
/// Construction validates that adjacent runs (including the prefix/tail junction and
/// the wrap-around inside the tail) use distinct letters, that exponents are positive
/// and that every letter of the alphabet occurs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectiveSpec {
    prefix: Vec<Run>,
    tail: Vec<Run>,
    alphabet: usize,
}

impl DirectiveSpec {
    /// Builds a spec; the alphabet size defaults to one past the largest letter used.
    pub fn new(prefix: Vec<Run>, tail: Vec<Run>, alphabet: Option<usize>) -> Result<Self> {
        let all: Vec<Run> = prefix.iter().chain(tail.iter()).copied().collect();
        if all.is_empty() {
            return Err(Error::Parse("no runs".into()));
        }
        for (i, r) in all.iter().enumerate() {
            if r.exponent == 0 {
                return Err(Error::ZeroExponent { run: i + 1 });
            }
        }
        for (i, pair) in prefix.windows(2).enumerate() {
            if pair[0].letter == pair[1].letter {
                return Err(Error::AdjacentRuns {
                    letter: pair[0].letter.to_char(),
                    junction: format!("prefix run {}/{}", i + 1, i + 2),
                });
            }
        }
        if let (Some(last), Some(first)) = (prefix.last(), tail.first()) {
            if last.letter == first.letter {
                return Err(Error::AdjacentRuns {
                    letter: last.letter.to_char(),
                    junction: "prefix/tail".into(),
                });
            }
        }
        for (i, pair) in tail.windows(2).enumerate() {
            if pair[0].letter == pair[1].letter {
                return Err(Error::AdjacentRuns {
                    letter: pair[0].letter.to_char(),
                    junction: format!("tail run {}/{}", i + 1, i + 2),
                });
            }
        }
        if let (Some(first), Some(last)) = (tail.first(), tail.last()) {
            if tail.len() == 1 {
                return Err(Error::SingleLetterTail(first.letter.to_char()));
            }
            if first.letter == last.letter {
                return Err(Error::AdjacentRuns {
                    letter: first.letter.to_char(),
                    junction: "tail wrap-around".into(),
                });
            }
        }

        let used = all.iter().map(|r| r.letter.index()).max().unwrap_or(0) + 1;
        let alphabet = alphabet.unwrap_or(used);
        if alphabet > MAX_ALPHABET {
            return Err(Error::OutOfRange {
                what: format!("alphabet size must not exceed {MAX_ALPHABET}"),
                index: alphabet,
            });
        }
        if alphabet < 2 {
            return Err(Error::AlphabetTooSmall(alphabet));
        }
        if let Some(r) = all.iter().find(|r| r.letter.index() >= alphabet) {
            return Err(Error::LetterOutsideAlphabet {
                letter: r.letter.to_char(),
                alphabet,
            });
        }
        for a in 0..alphabet {
            if !all.iter().any(|r| r.letter.index() == a) {
                return Err(Error::MissingLetter(Letter::new(a)?.to_char()));
            }
        }
        Ok(DirectiveSpec {
            prefix,
            tail,
            alphabet,
        })
    }

    /// Parses the text grammar, optionally against a declared alphabet size.
    pub fn parse_with_alphabet(text: &str, alphabet: Option<usize>) -> Result<Self> {
        let (head, tail) = match text.split_once('|') {
            Some((h, t)) => {
                if t.contains('|') {
                    return Err(Error::Parse("more than one '|'".into()));
                }
                (h, Some(t))
            }
            None => (text, None),
        };
        let prefix = parse_runs(head)?;
        let tail = match tail {
            Some(t) => {
                let runs = parse_runs(t)?;
                if runs.is_empty() {
                    return Err(Error::Parse("empty tail after '|'".into()));
                }
                runs
            }
            None => Vec::new(),
        };
        DirectiveSpec::new(prefix, tail, alphabet)
    }

    pub fn prefix_runs(&self) -> &[Run] {
        &self.prefix
    }

    pub fn tail_runs(&self) -> &[Run] {
        &self.tail
    }

    /// Alphabet size `k_0`; every letter occurs in the directive word.
    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn is_infinite(&self) -> bool {
        !self.tail.is_empty()
    }

    /// Rejects specs that do not describe an aperiodic infinite word.
    pub fn require_infinite(&self) -> Result<()> {
        if self.is_infinite() {
            Ok(())
        } else {
            Err(Error::FiniteDirective)
        }
    }

    /// Letters occurring infinitely often in the directive word.
    pub fn tail_letters(&self) -> Vec<Letter> {
        let mut l: Vec<Letter> = self.tail.iter().map(|r| r.letter).collect();
        l.sort_unstable();
        l.dedup();
        l
    }

    /// Sum of the prefix exponents.
    pub fn prefix_len(&self) -> usize {
        self.prefix.iter().map(|r| r.exponent).sum()
    }

    /// The `m`-th run `(y_m, d_m)`, 1-based; `None` past the end of a finite spec.
    pub fn run(&self, m: usize) -> Option<Run> {
        if m == 0 {
            return None;
        }
        let m = m - 1;
        if m < self.prefix.len() {
            Some(self.prefix[m])
        } else if self.tail.is_empty() {
            None
        } else {
            Some(self.tail[(m - self.prefix.len()) % self.tail.len()])
        }
    }

    /// All runs in order, cycling the tail.
    pub fn runs(&self) -> impl Iterator<Item = Run> + '_ {
        let cycled = self
            .tail
            .iter()
            .copied()
            .cycle()
            .take(if self.tail.is_empty() { 0 } else { usize::MAX });
        self.prefix.iter().copied().chain(cycled)
    }

    /// Letters `x_1 x_2 ⋯` of the directive word.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.runs()
            .flat_map(|r| std::iter::repeat_n(r.letter, r.exponent))
    }

    /// `x_n`, 1-based.
    pub fn x(&self, n: usize) -> Option<Letter> {
        if n == 0 {
            return None;
        }
        self.letters().nth(n - 1)
    }

    /// `x_1 ⋯ x_n`.
    pub fn expand(&self, n: usize) -> Result<Word> {
        let w: Word = self.letters().take(n).collect();
        if w.len() < n {
            return Err(Error::OutOfRange {
                what: format!("directive '{self}' has only {} letters", w.len()),
                index: n,
            });
        }
        Ok(w)
    }

    /// Position where the `m`-th run starts: `d_1 + ⋯ + d_{m-1} + 1`.
    pub fn g(&self, m: usize) -> Option<usize> {
        if m == 0 {
            return None;
        }
        let mut pos = 1;
        for k in 1..m {
            pos += self.run(k)?.exponent;
        }
        Some(pos)
    }

    /// Largest `i < n` with `x_i = x_n`.
    pub fn previous_occurrence(&self, n: usize) -> Option<usize> {
        if n == 0 {
            return None;
        }
        let xs: Vec<Letter> = self.letters().take(n).collect();
        if xs.len() < n {
            return None;
        }
        let target = xs[n - 1];
        xs[..n - 1]
            .iter()
            .rposition(|&l| l == target)
            .map(|i| i + 1)
    }

    /// Index of the run containing position `n` of the directive word.
    pub fn run_index_of(&self, n: usize) -> Option<usize> {
        if n == 0 {
            return None;
        }
        let mut end = 0;
        for (m, r) in self.runs().enumerate() {
            end += r.exponent;
            if n <= end {
                return Some(m + 1);
            }
        }
        None
    }
}

impl fmt::Display for DirectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |runs: &[Run]| -> String {
            runs.iter()
                .map(|r| {
                    if r.exponent == 1 {
                        r.letter.to_string()
                    } else {
                        format!("{}^{}", r.letter, r.exponent)
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let head = show(&self.prefix);
        if self.tail.is_empty() {
            write!(f, "{head}")
        } else if head.is_empty() {
            write!(f, "| {}", show(&self.tail))
        } else {
            write!(f, "{head} | {}", show(&self.tail))
        }
    }
}

impl fmt::Debug for DirectiveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirectiveSpec({self})")
    }
}

impl FromStr for DirectiveSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DirectiveSpec::parse_with_alphabet(s, None)
    }
}

fn parse_runs(text: &str) -> Result<Vec<Run>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(parse_run)
        .collect()
}

fn parse_run(tok: &str) -> Result<Run> {
    let (letter, exponent) = match tok.split_once('^') {
        Some((l, e)) => {
            let e: usize = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in run '{tok}'")))?;
            (l, e)
        }
        None => (tok, 1),
    };
    let mut chars = letter.chars();
    let c = match (chars.next(), chars.next()) {
        (Some(c), None) => c,
        _ => return Err(Error::Parse(format!("run '{tok}' must be a single letter"))),
    };
    Ok(Run::new(Letter::from_char(c)?, exponent))
}
