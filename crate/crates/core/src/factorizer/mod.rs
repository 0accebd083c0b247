//! Ziv-Lempel (z) and Crochemore (c) factorizations of finite words.
//!
//! With history `h` already parsed and remainder `r`:
//!
//! * the z-factor is the shortest prefix `p` of `r` occurring exactly once in `h·p`;
//! * the c-factor is the longest prefix `p` of `r` occurring in `h·p` at a position
//!   before `|h|`, or a single fresh letter when there is none.
//!
//! Earlier occurrences may overlap the factor itself in both schemes. Two engines are
//! provided: [`Engine::Naive`] follows these definitions by filtering candidate start
//! positions, [`Engine::Lpf`] reads factor lengths off a longest-previous-factor array.

mod lpf;
mod profile;

pub use lpf::{lcp_array, longest_previous_match, lpf, lpf_naive, suffix_array, LpfArray};
pub use profile::{
    complexity_naive, complexity_profile, reversal_closed_naive, reversal_closed_profile,
    right_special_count_naive, right_special_profile,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{concat, to_text, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Z,
    C,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Z => "z",
            Scheme::C => "c",
        })
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "z" | "Z" => Ok(Scheme::Z),
            "c" | "C" => Ok(Scheme::C),
            other => Err(Error::Parse(format!("unknown scheme '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Naive,
    Lpf,
}

/// An ordered factor list.
///
/// `last_complete` is false when the input ended before the last z-factor could
/// be closed off. `cut_by_input_end` is set whenever the last factor touches the end of
/// the input in a way that could change in a longer text.
#[derive(Clone, PartialEq, Eq)]
pub struct Factorization {
    pub scheme: Scheme,
    pub factors: Vec<Word>,
    pub last_complete: bool,
    pub cut_by_input_end: bool,
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn input_length(&self) -> usize {
        self.factors.iter().map(|f| f.len()).sum()
    }

    pub fn concatenation(&self) -> Word {
        concat(self.factors.iter().map(|f| f.as_slice()))
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.len()).collect()
    }

    /// Factors that satisfy their scheme's condition in every extension of the input.
    pub fn trusted(&self) -> &[Word] {
        if self.cut_by_input_end {
            &self.factors[..self.factors.len() - 1]
        } else {
            &self.factors
        }
    }

    /// Number of factors meeting their defining condition inside the input.
    pub fn complete_count(&self) -> usize {
        if self.last_complete {
            self.factors.len()
        } else {
            self.factors.len() - 1
        }
    }

    pub fn to_json(&self) -> FactorizationJson {
        FactorizationJson {
            scheme: self.scheme,
            input_length: self.input_length(),
            factors: self.factors.iter().map(|f| f.to_string()).collect(),
            last_complete: self.last_complete,
            cut_by_input_end: self.cut_by_input_end,
            source: None,
            transient: None,
            i: None,
            j: None,
            k0: None,
            m: None,
            onset: None,
        }
    }

    /// Factors joined by `|`.
    pub fn to_text(&self) -> String {
        self.factors
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.scheme, self.to_text())?;
        if !self.last_complete {
            write!(f, "[incomplete]")?;
        }
        if self.cut_by_input_end {
            write!(f, "[cut]")?;
        }
        Ok(())
    }
}

/// Serialized form of a factorization. The optional fields are only filled in for
/// closed-form results.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationJson {
    pub scheme: Scheme,
    pub input_length: usize,
    pub factors: Vec<String>,
    pub last_complete: bool,
    pub cut_by_input_end: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transient: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k0: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub onset: Option<usize>,
}

impl FactorizationJson {
    pub fn into_factorization(self) -> Result<Factorization> {
        Ok(Factorization {
            scheme: self.scheme,
            factors: self
                .factors
                .iter()
                .map(|f| Word::parse(f))
                .collect::<Result<_>>()?,
            last_complete: self.last_complete,
            cut_by_input_end: self.cut_by_input_end,
        })
    }
}

/// Greedy scan shared by the naive engine: from `q`, keep the start positions `j < q`
/// that still match `w[q..q+len]` while `len` grows.
///
/// Returns the match length reached and whether candidates survived to the end of `w`.
fn extend_previous_occurrences(w: &[Letter], q: usize, stop_when_unique: bool) -> (usize, bool) {
    let mut candidates: Vec<usize> = (0..q).collect();
    let mut len = 0;
    while q + len < w.len() {
        let c = w[q + len];
        candidates.retain(|&j| w[j + len] == c);
        if candidates.is_empty() {
            // `len + 1` letters occur once; `len` letters occurred before.
            return (if stop_when_unique { len + 1 } else { len }, false);
        }
        len += 1;
    }
    (len, true)
}

/// Crochemore factorization by the naive engine.
pub fn c_factorize(w: &[Letter]) -> Result<Factorization> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut factors = Vec::new();
    let mut cut = false;
    let mut q = 0;
    while q < w.len() {
        let (len, reached_end) = extend_previous_occurrences(w, q, false);
        let len = if len == 0 { 1 } else { len };
        cut = reached_end && q + len == w.len();
        factors.push(Word::from(&w[q..q + len]));
        q += len;
    }
    Ok(Factorization {
        scheme: Scheme::C,
        factors,
        last_complete: true,
        cut_by_input_end: cut,
    })
}

/// Ziv-Lempel factorization by the naive engine.
pub fn z_factorize(w: &[Letter]) -> Result<Factorization> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut factors = Vec::new();
    let mut complete = true;
    let mut q = 0;
    while q < w.len() {
        let (len, reached_end) = extend_previous_occurrences(w, q, true);
        complete = !reached_end;
        factors.push(Word::from(&w[q..q + len]));
        q += len;
    }
    Ok(Factorization {
        scheme: Scheme::Z,
        factors,
        last_complete: complete,
        cut_by_input_end: !complete,
    })
}

/// Either factorization, with factor lengths taken from the suffix-array LPF array.
pub fn factorize_via_lpf(w: &[Letter], scheme: Scheme) -> Result<Factorization> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    let lpf = lpf(w);
    Ok(factorize_with_lpf(w, &lpf, scheme))
}

/// Factorization from a precomputed LPF array of `w`.
pub fn factorize_with_lpf(w: &[Letter], lpf: &[usize], scheme: Scheme) -> Factorization {
    let n = w.len();
    let mut factors = Vec::new();
    let mut last_complete = true;
    let mut cut = false;
    let mut q = 0;
    while q < n {
        let l = lpf[q];
        let len = match scheme {
            Scheme::C => l.max(1),
            Scheme::Z => (l + 1).min(n - q),
        };
        match scheme {
            Scheme::C => cut = l > 0 && q + l == n,
            Scheme::Z => {
                last_complete = l < n - q;
                cut = !last_complete;
            }
        }
        factors.push(Word::from(&w[q..q + len]));
        q += len;
    }
    Factorization {
        scheme,
        factors,
        last_complete,
        cut_by_input_end: cut,
    }
}

/// Dispatch on engine and scheme.
pub fn factorize(w: &[Letter], scheme: Scheme, engine: Engine) -> Result<Factorization> {
    match (engine, scheme) {
        (Engine::Naive, Scheme::Z) => z_factorize(w),
        (Engine::Naive, Scheme::C) => c_factorize(w),
        (Engine::Lpf, s) => factorize_via_lpf(w, s),
    }
}

/// `(complete z-factors, c-factors)` of `w`.
pub fn factor_counts(w: &[Letter]) -> Result<(usize, usize)> {
    let lpf = match w.is_empty() {
        true => return Err(Error::EmptyInput),
        false => lpf(w),
    };
    let z = factorize_with_lpf(w, &lpf, Scheme::Z);
    let c = factorize_with_lpf(w, &lpf, Scheme::C);
    Ok((z.complete_count(), c.complete_count()))
}

/// Text form of a list of factors, joined by `|`.
pub fn join_factors(factors: &[Word]) -> String {
    factors
        .iter()
        .map(|f| to_text(f))
        .collect::<Vec<_>>()
        .join("|")
}
