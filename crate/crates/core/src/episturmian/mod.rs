//! Standard episturmian words built from their directive words.
//!
//! A directive word `x_1 x_2 ⋯` yields palindromic prefixes `u_1 = ε`,
//! `u_{n+1} = (u_n x_n)^{(+)}`, and the words `h_n = μ_n(x_{n+1})` with
//! `μ_n = ψ_{x_1} ∘ ⋯ ∘ ψ_{x_n}`. [`MorphismTable`] caches both families;
//! the free functions here compute single values directly from the definitions.

mod directive;
mod table;

pub use directive::{DirectiveSpec, Run};
pub use table::{Horizon, MorphismTable};

use crate::error::{Error, Result};
use crate::word::{palindromic_closure, power, Letter, Word};

/// `ψ_a`: fixes `a` and maps every other letter `x` to `a x`.
pub fn psi(a: Letter, w: &[Letter]) -> Word {
    let mut out = Vec::with_capacity(2 * w.len());
    for &x in w {
        if x != a {
            out.push(a);
        }
        out.push(x);
    }
    Word::from_letters(out)
}

/// `μ_n(w)`, composing `ψ_{x_n}` first and `ψ_{x_1}` last.
pub fn mu(spec: &DirectiveSpec, n: usize, w: &[Letter]) -> Result<Word> {
    let xs = spec.expand(n)?;
    Ok(xs.iter().rev().fold(Word::from(w), |acc, &x| psi(x, &acc)))
}

/// `h_n = μ_n(x_{n+1})` by direct composition.
pub fn h(spec: &DirectiveSpec, n: usize) -> Result<Word> {
    let next = spec.x(n + 1).ok_or_else(|| Error::OutOfRange {
        what: format!("directive '{spec}' has no letter x_{}", n + 1),
        index: n + 1,
    })?;
    mu(spec, n, &[next])
}

/// `u_n` by iterated palindromic closure.
pub fn palindromic_prefix(spec: &DirectiveSpec, n: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "palindromic prefixes are indexed from 1".into(),
            index: 0,
        });
    }
    let xs = spec.expand(n - 1)?;
    let mut u = Word::empty();
    for &x in xs.iter() {
        let mut ux = u.into_letters();
        ux.push(x);
        u = palindromic_closure(&ux);
    }
    Ok(u)
}

/// The length-`len` prefix of the standard episturmian word directed by `spec`.
pub fn standard_prefix(spec: &DirectiveSpec, len: usize) -> Result<Word> {
    spec.require_infinite()?;
    let mut u = Word::empty();
    let mut letters = spec.letters();
    while u.len() < len {
        let x = letters.next().expect("infinite directive");
        let mut ux = u.into_letters();
        ux.push(x);
        u = palindromic_closure(&ux);
    }
    let mut l = u.into_letters();
    l.truncate(len);
    Ok(Word::from_letters(l))
}

/// Standard word `s_p` of a binary directive word, for `p >= -1`.
///
/// `s_{-1}` is the letter that does not start the directive word, `s_0 = y_1`, and
/// `s_p = s_{p-1}^{d_p} s_{p-2}`, with `d_p` the `p`-th run exponent.
pub fn sturmian_standard_word(spec: &DirectiveSpec, p: i64) -> Result<Word> {
    if spec.alphabet_size() != 2 {
        return Err(Error::NotBinary(spec.alphabet_size()));
    }
    if p < -1 {
        return Err(Error::OutOfRange {
            what: "standard words are indexed from -1".into(),
            index: 0,
        });
    }
    let first = spec.run(1).expect("nonempty directive").letter;
    let second = Letter::new(1 - first.index())?;
    let mut older = Word::letter(second);
    let mut newer = Word::letter(first);
    if p == -1 {
        return Ok(older);
    }
    for q in 1..=p as usize {
        let d = spec
            .run(q)
            .ok_or_else(|| Error::OutOfRange {
                what: format!("directive '{spec}' has no run {q}"),
                index: q,
            })?
            .exponent;
        let mut next = power(&newer, d).into_letters();
        next.extend_from_slice(&older);
        older = std::mem::replace(&mut newer, Word::from_letters(next));
    }
    Ok(newer)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn spec(s: &str) -> DirectiveSpec {
        s.parse().unwrap()
    }

    fn l(c: char) -> Letter {
        Letter::from_char(c).unwrap()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(l('a'), &w("a")), w("a"));
        assert_eq!(psi(l('a'), &w("b")), w("ab"));
        assert_eq!(psi(l('a'), &w("bab")), w("abaab"));
        assert_eq!(psi(l('a'), &w("")), w(""));
    }

    #[test]
    fn mu_examples() {
        let fib = spec("|a b");
        assert_eq!(mu(&fib, 0, &w("ab")).unwrap(), w("ab"));
        assert_eq!(mu(&fib, 2, &w("a")).unwrap(), w("aba"));
        assert_eq!(mu(&fib, 3, &w("b")).unwrap(), w("abaab"));
    }

    #[test]
    fn h_examples() {
        let fib = spec("|a b");
        assert_eq!(h(&fib, 0).unwrap(), w("a"));
        assert_eq!(h(&fib, 3).unwrap(), w("abaab"));
        assert_eq!(h(&spec("|a b c"), 2).unwrap(), w("abac"));
        assert!(h(&spec("a b"), 2).is_err());
    }

    #[test]
    fn palindromic_prefix_examples() {
        let fib = spec("|a b");
        assert_eq!(palindromic_prefix(&fib, 1).unwrap(), w(""));
        assert_eq!(palindromic_prefix(&spec("|a b c"), 1).unwrap(), w(""));
        assert_eq!(palindromic_prefix(&fib, 3).unwrap(), w("aba"));
        assert_eq!(palindromic_prefix(&fib, 5).unwrap(), w("abaababaaba"));
    }

    #[test]
    fn standard_prefix_examples() {
        let fib = spec("|a b");
        assert_eq!(standard_prefix(&fib, 0).unwrap(), w(""));
        assert_eq!(standard_prefix(&fib, 13).unwrap(), w("abaababaabaab"));
        assert_eq!(standard_prefix(&spec("|a b c"), 7).unwrap(), w("abacaba"));
        assert_eq!(
            standard_prefix(&spec("a b"), 2),
            Err(Error::FiniteDirective)
        );
    }

    #[test]
    fn standard_word_examples() {
        let fib = spec("|a b");
        assert_eq!(sturmian_standard_word(&fib, -1).unwrap(), w("b"));
        assert_eq!(sturmian_standard_word(&fib, 0).unwrap(), w("a"));
        assert_eq!(sturmian_standard_word(&fib, 2).unwrap(), w("aba"));
        assert_eq!(
            sturmian_standard_word(&spec("a^2 | b a"), 1).unwrap(),
            w("aab")
        );
        assert_eq!(sturmian_standard_word(&spec("|b a"), 1).unwrap(), w("ba"));
        assert_eq!(
            sturmian_standard_word(&spec("|a b c"), 1),
            Err(Error::NotBinary(3))
        );
    }

    #[test]
    fn table_agrees_with_direct_definitions() {
        for s in ["|a b", "a^2 b | a b", "|a b c", "a^3 c^2 | b a c"] {
            let sp = spec(s);
            let t = MorphismTable::with_horizon(&sp, Horizon::new(12, 1 << 16));
            for n in 1..=t.max_index() {
                assert_eq!(
                    t.u(n).unwrap(),
                    &palindromic_prefix(&sp, n).unwrap()[..],
                    "{s} u_{n}"
                );
            }
            for n in 0..=t.max_h_index().unwrap() {
                assert_eq!(t.h(n).unwrap(), &h(&sp, n).unwrap(), "{s} h_{n}");
                assert_eq!(t.x(n + 1).unwrap(), sp.x(n + 1).unwrap());
                assert_eq!(
                    t.previous_occurrence(n + 1).unwrap(),
                    sp.previous_occurrence(n + 1)
                );
            }
        }
    }
}
