//! Letters, words and the elementary combinatorics on finite words.
//!
//! Letters are dense indices into a small alphabet and print as `'a'..'z'`.
//! Every operation takes borrowed letter slices and returns fresh values, so a
//! [`Word`] is never mutated after construction.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported alphabet, one letter per ASCII lowercase character.
pub const MAX_ALPHABET: usize = 26;

/// A symbol of the alphabet, stored as its index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Letter(u8);

impl Letter {
    pub fn new(index: usize) -> Result<Self> {
        if index < MAX_ALPHABET {
            Ok(Letter(index as u8))
        } else {
            Err(Error::OutOfRange {
                what: format!("letter index must be below {MAX_ALPHABET}"),
                index,
            })
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        if c.is_ascii_lowercase() {
            Ok(Letter(c as u8 - b'a'))
        } else {
            Err(Error::InvalidLetter(c))
        }
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn to_char(self) -> char {
        (b'a' + self.0) as char
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite, possibly empty, sequence of letters.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses the text form, one character per letter.
    pub fn parse(text: &str) -> Result<Self> {
        text.chars().map(Letter::from_char).collect()
    }

    /// Parses the text form and checks every letter against a declared alphabet size.
    pub fn parse_in(text: &str, alphabet: usize) -> Result<Self> {
        let w = Word::parse(text)?;
        if let Some(&l) = w.iter().find(|l| l.index() >= alphabet) {
            return Err(Error::LetterOutsideAlphabet {
                letter: l.to_char(),
                alphabet,
            });
        }
        Ok(w)
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Word(s.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_text(&self.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", to_text(&self.0))
    }
}

/// Text form of a letter slice.
pub fn to_text(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_char()).collect()
}

/// Concatenation of the given pieces.
pub fn concat<'a, I>(parts: I) -> Word
where
    I: IntoIterator<Item = &'a [Letter]>,
{
    let mut out = Vec::new();
    for p in parts {
        out.extend_from_slice(p);
    }
    Word(out)
}

/// `w` repeated `e` times.
pub fn power(w: &[Letter], e: usize) -> Word {
    Word(w.repeat(e))
}

pub fn reversal(w: &[Letter]) -> Word {
    w.iter().rev().copied().collect()
}

pub fn is_palindrome(w: &[Letter]) -> bool {
    w.iter()
        .zip(w.iter().rev())
        .take(w.len() / 2)
        .all(|(a, b)| a == b)
}

/// Border array: `fail[i]` is the length of the longest proper border of `w[..=i]`.
pub fn failure_function(w: &[Letter]) -> Vec<usize> {
    let mut fail = vec![0usize; w.len()];
    let mut k = 0;
    for i in 1..w.len() {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Length of the longest palindromic suffix of `w`.
///
/// A suffix of `w` is a palindrome exactly when it is also a prefix of the
/// reversal of `w`, so the answer is the final state of a KMP scan of `w`
/// against the pattern `reversal(w)`.
pub fn longest_palindromic_suffix(w: &[Letter]) -> usize {
    if w.is_empty() {
        return 0;
    }
    let pattern = reversal(w);
    let fail = failure_function(&pattern);
    let mut k = 0;
    for (i, &c) in w.iter().enumerate() {
        // A full match can only happen at the last letter.
        if k == pattern.len() {
            k = fail[k - 1];
        }
        while k > 0 && c != pattern[k] {
            k = fail[k - 1];
        }
        if c == pattern[k] {
            k += 1;
        }
        debug_assert!(k <= i + 1);
    }
    k
}

/// The shortest palindrome having `w` as a prefix.
pub fn palindromic_closure(w: &[Letter]) -> Word {
    let keep = w.len() - longest_palindromic_suffix(w);
    let mut out = Vec::with_capacity(w.len() + keep);
    out.extend_from_slice(w);
    out.extend(w[..keep].iter().rev());
    Word(out)
}

/// Number of (possibly overlapping) occurrences of `p` in `t`.
pub fn count_occurrences(p: &[Letter], t: &[Letter]) -> Result<usize> {
    if p.is_empty() {
        return Err(Error::EmptyPattern);
    }
    Ok(occurrences(p, t).len())
}

/// Start positions of every occurrence of a nonempty `p` in `t`, increasing.
pub fn occurrences(p: &[Letter], t: &[Letter]) -> Vec<usize> {
    let mut found = Vec::new();
    if p.is_empty() || p.len() > t.len() {
        return found;
    }
    let fail = failure_function(p);
    let mut k = 0;
    for (i, &c) in t.iter().enumerate() {
        while k > 0 && c != p[k] {
            k = fail[k - 1];
        }
        if c == p[k] {
            k += 1;
        }
        if k == p.len() {
            found.push(i + 1 - k);
            k = fail[k - 1];
        }
    }
    found
}

pub fn is_prefix(v: &[Letter], w: &[Letter]) -> bool {
    w.starts_with(v)
}

pub fn is_suffix(v: &[Letter], w: &[Letter]) -> bool {
    w.ends_with(v)
}

pub fn is_factor(v: &[Letter], w: &[Letter]) -> bool {
    v.is_empty() || !occurrences(v, w).is_empty()
}

/// The word `u` with `w = v·u`.
pub fn strip_prefix(v: &[Letter], w: &[Letter]) -> Result<Word> {
    w.strip_prefix(v)
        .map(Word::from)
        .ok_or_else(|| Error::NotAnAffix {
            kind: "prefix",
            affix: to_text(v),
            word: to_text(w),
        })
}

/// The word `u` with `w = u·v`.
pub fn strip_suffix(v: &[Letter], w: &[Letter]) -> Result<Word> {
    w.strip_suffix(v)
        .map(Word::from)
        .ok_or_else(|| Error::NotAnAffix {
            kind: "suffix",
            affix: to_text(v),
            word: to_text(w),
        })
}

/// Smallest period of a nonempty word.
pub fn smallest_period(w: &[Letter]) -> usize {
    match w.len() {
        0 => 0,
        n => n - failure_function(w)[n - 1],
    }
}

/// Whether `w` is not a proper power of a shorter word.
pub fn is_primitive(w: &[Letter]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    // w is a proper power iff it has period n/q for some prime q dividing n.
    let n = w.len();
    let mut rest = n;
    let mut q = 2;
    while q * q <= rest {
        if rest.is_multiple_of(q) {
            if has_period(w, n / q) {
                return Ok(false);
            }
            while rest.is_multiple_of(q) {
                rest /= q;
            }
        }
        q += 1;
    }
    Ok(rest == 1 || !has_period(w, n / rest))
}

fn has_period(w: &[Letter], p: usize) -> bool {
    w[p..] == w[..w.len() - p]
}

pub fn are_conjugate(u: &[Letter], v: &[Letter]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    if u.is_empty() {
        return true;
    }
    let uu = [u, u].concat();
    is_factor(v, &uu)
}

/// The set of distinct letters occurring in `w`.
pub fn alphabet_of(w: &[Letter]) -> Vec<Letter> {
    let mut seen: Vec<Letter> = w.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen
}

/// Distinct factors of length `n`.
pub fn factor_set(w: &[Letter], n: usize) -> HashSet<&[Letter]> {
    if n > w.len() {
        return HashSet::new();
    }
    w.windows(n.max(1))
        .map(|f| &f[..n])
        .chain(std::iter::once(&w[..n]))
        .collect()
}

/// Number of distinct factors of length `n`.
pub fn factor_complexity(w: &[Letter], n: usize) -> Result<usize> {
    if n > w.len() {
        return Err(Error::FactorLengthTooLarge { n, len: w.len() });
    }
    Ok(factor_set(w, n).len())
}

/// Factors of length `n` having at least two distinct right extensions in `w`.
pub fn right_special_factors(w: &[Letter], n: usize) -> Vec<&[Letter]> {
    if n >= w.len() {
        return Vec::new();
    }
    let mut ext: HashMap<&[Letter], HashSet<Letter>> = HashMap::new();
    for f in w.windows(n + 1) {
        ext.entry(&f[..n]).or_default().insert(f[n]);
    }
    let mut out: Vec<&[Letter]> = ext
        .into_iter()
        .filter(|(_, e)| e.len() >= 2)
        .map(|(f, _)| f)
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    /// Brute force: smallest palindrome among candidates `w·t` with `|t| <= |w|`.
    fn closure_oracle(x: &[Letter]) -> Word {
        for extra in 0..=x.len() {
            let cand: Word = x
                .iter()
                .copied()
                .chain(x[..extra].iter().rev().copied())
                .collect();
            if is_palindrome(&cand) {
                return cand;
            }
        }
        unreachable!("w·reversal(w) is always a palindrome")
    }

    fn all_words(k: usize, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for v in &layer {
                for c in 0..k {
                    let mut l = v.clone().into_letters();
                    l.push(Letter::new(c).unwrap());
                    next.push(Word::from_letters(l));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn text_form() {
        assert_eq!(w("abc").to_string(), "abc");
        assert!(Word::parse("aB").is_err());
        assert!(Word::parse_in("abc", 2).is_err());
        assert_eq!(Word::parse("").unwrap().len(), 0);
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(reversal(&w("")), w(""));
        assert_eq!(reversal(&w("abaab")), w("baaba"));
        assert_eq!(reversal(&w("aba")), w("aba"));
    }

    #[test]
    fn palindrome_examples() {
        assert!(is_palindrome(&w("")));
        assert!(is_palindrome(&w("abaaba")));
        assert_eq!(reversal(&w("abaaba")), w("abaaba"));
        assert!(!is_palindrome(&w("ab")));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(palindromic_closure(&w("")), w(""));
        assert_eq!(closure_oracle(&w("ab")), w("aba"));
        assert_eq!(palindromic_closure(&w("ab")), w("aba"));
        assert_eq!(closure_oracle(&w("abaa")), w("abaaba"));
        assert_eq!(palindromic_closure(&w("abaa")), w("abaaba"));
    }

    #[test]
    fn closure_matches_exhaustive_search() {
        for x in all_words(2, 14) {
            let c = palindromic_closure(&x);
            assert_eq!(c, closure_oracle(&x), "closure of {x}");
            assert!(c.len() <= 2 * x.len());
            assert_eq!(palindromic_closure(&c), c);
        }
        for x in all_words(3, 8) {
            assert_eq!(
                palindromic_closure(&x),
                closure_oracle(&x),
                "closure of {x}"
            );
        }
    }

    #[test]
    fn occurrence_examples() {
        assert_eq!(count_occurrences(&w("aa"), &w("aaa")), Ok(2));
        assert_eq!(count_occurrences(&w("ba"), &w("abaab")), Ok(1));
        assert_eq!(count_occurrences(&w("bab"), &w("abaabab")), Ok(1));
        assert_eq!(
            count_occurrences(&w(""), &w("ab")),
            Err(Error::EmptyPattern)
        );
    }

    #[test]
    fn affix_examples() {
        assert!(is_prefix(&w("ab"), &w("abaab")));
        assert!(is_suffix(&w("aba"), &w("abaaba")));
        assert!(is_factor(&w(""), &w("x")));
        assert!(is_prefix(&w(""), &w("")));
        assert!(!is_factor(&w("bb"), &w("abaab")));
    }

    #[test]
    fn strip_examples() {
        assert_eq!(strip_prefix(&w("a"), &w("abaab")), Ok(w("baab")));
        assert_eq!(strip_suffix(&w("ba"), &w("abaaba")), Ok(w("abaa")));
        assert!(matches!(
            strip_suffix(&w("ab"), &w("abaaba")),
            Err(Error::NotAnAffix { kind: "suffix", .. })
        ));
        assert!(strip_prefix(&w("b"), &w("abaab")).is_err());
        assert_eq!(strip_suffix(&w("aba"), &w("abaaba")), Ok(w("aba")));
    }

    #[test]
    fn primitivity_examples() {
        assert_eq!(is_primitive(&w("a")), Ok(true));
        assert_eq!(is_primitive(&w("abab")), Ok(false));
        assert_eq!(is_primitive(&w("abaab")), Ok(true));
        assert_eq!(is_primitive(&w("")), Err(Error::EmptyInput));
    }

    #[test]
    fn primitivity_matches_divisor_check() {
        for x in all_words(2, 12).into_iter().filter(|x| !x.is_empty()) {
            let n = x.len();
            let power = (1..n)
                .filter(|d| n % d == 0)
                .any(|d| power(&x[..d], n / d) == x);
            assert_eq!(is_primitive(&x).unwrap(), !power, "{x}");
            let p = smallest_period(&x);
            assert_eq!(!power, p == n || n % p != 0, "{x}");
        }
    }

    #[test]
    fn conjugacy_examples() {
        assert!(are_conjugate(&w("ab"), &w("ba")));
        assert!(are_conjugate(&w("ab"), &w("ab")));
        assert!(are_conjugate(&w("aab"), &w("aba")));
        assert!(!are_conjugate(&w("aab"), &w("abb")));
        assert!(!are_conjugate(&w("a"), &w("aa")));
    }

    #[test]
    fn conjugacy_is_an_equivalence() {
        let rotations = |x: &Word| -> Vec<Word> {
            (0..x.len().max(1))
                .map(|i| concat([&x[i.min(x.len())..], &x[..i.min(x.len())]]))
                .collect()
        };
        for n in 0..=6 {
            let words: Vec<Word> = all_words(2, n)
                .into_iter()
                .filter(|x| x.len() == n)
                .collect();
            for u in &words {
                assert!(are_conjugate(u, u));
                let rots = rotations(u);
                for v in &words {
                    let c = are_conjugate(u, v);
                    assert_eq!(c, are_conjugate(v, u));
                    assert_eq!(c, rots.contains(v), "{u} ~ {v}");
                }
            }
            // Transitivity follows from agreement with the rotation classes, but check it anyway.
            for u in &words {
                for v in words.iter().filter(|v| are_conjugate(u, v)) {
                    for t in words.iter().filter(|t| are_conjugate(v, t)) {
                        assert!(are_conjugate(u, t));
                    }
                }
            }
        }
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(factor_complexity(&w("abaab"), 0), Ok(1));
        assert_eq!(factor_complexity(&w(""), 0), Ok(1));
        assert_eq!(factor_complexity(&w("abaaba"), 1), Ok(2));
        // abaa, baab, aaba, abab, baba, ... enumerated by hand from the 10 windows.
        let fib13 = w("abaababaabaab");
        let brute: std::collections::BTreeSet<String> = (0..=fib13.len() - 4)
            .map(|i| to_text(&fib13[i..i + 4]))
            .collect();
        assert_eq!(brute.len(), 5);
        assert_eq!(factor_complexity(&fib13, 4), Ok(5));
        assert!(factor_complexity(&w("ab"), 3).is_err());
    }

    #[test]
    fn right_special_examples() {
        let fib13 = w("abaababaabaab");
        assert_eq!(right_special_factors(&fib13, 1), vec![&w("a")[..]]);
        assert_eq!(right_special_factors(&fib13, 2), vec![&w("ba")[..]]);
        assert!(right_special_factors(&w("aaaa"), 2).is_empty());
    }

    #[test]
    fn smallest_period_examples() {
        assert_eq!(smallest_period(&w("abaab")), 3);
        assert_eq!(smallest_period(&w("aaaa")), 1);
        assert_eq!(smallest_period(&w("ab")), 2);
    }
}
