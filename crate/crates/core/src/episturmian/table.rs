use crate::error::{Error, Result};
use crate::word::{reversal, strip_suffix, Letter, Word};

use super::directive::{DirectiveSpec, Run};

/// Limits for how far a [`MorphismTable`] is materialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Horizon {
    /// Largest index `n` for which `u_n` is stored.
    pub max_index: usize,
    /// Largest admissible `|u_n|`.
    pub max_len: usize,
}

impl Default for Horizon {
    fn default() -> Self {
        Horizon {
            max_index: 64,
            max_len: 1 << 24,
        }
    }
}

impl Horizon {
    pub fn new(max_index: usize, max_len: usize) -> Self {
        Horizon { max_index, max_len }
    }
}

/// Palindromic prefixes `u_n`, the words `h_n` and the index functions of a directive
/// word, materialized up to a [`Horizon`].
///
/// The two families come from independent routes: `u_{n+1}` is the palindromic
/// closure of `u_n x_n`, while `h_n = μ_n(x_{n+1})` is obtained by composing the
/// morphisms `ψ_{x_1} ⋯ ψ_{x_n}` on single letters. The table is built once and is
/// read-only afterwards, so it can be shared across threads freely.
#[derive(Clone, Debug)]
pub struct MorphismTable {
    spec: DirectiveSpec,
    xs: Vec<Letter>,
    prev: Vec<Option<usize>>,
    // u_N; every u_n is a prefix of it.
    longest: Word,
    u_len: Vec<usize>,
    h: Vec<Word>,
}

impl MorphismTable {
    pub fn new(spec: &DirectiveSpec) -> Self {
        Self::with_horizon(spec, Horizon::default())
    }

    pub fn with_horizon(spec: &DirectiveSpec, horizon: Horizon) -> Self {
        let mut xs: Vec<Letter> = Vec::new();
        let mut letters = spec.letters();
        let mut u = Word::empty();
        let mut u_len = vec![0usize];

        // u_n for n = 1..=N, where N respects both horizon bounds. The closure of u_n x is
        // u_n x u_n for a fresh x, and u_n u_p^{-1} u_n when x was last read at step p.
        let mut last_read: Vec<Option<usize>> = vec![None; spec.alphabet_size()];
        while u_len.len() < horizon.max_index.max(1) {
            let Some(x) = letters.next() else { break };
            let n = u_len.len();
            let previous = last_read[x.index()];
            let keep = previous.map_or(0, |p| u_len[p - 1]);
            let next_len = 2 * u.len() + usize::from(previous.is_none()) - keep;
            if next_len > horizon.max_len {
                break;
            }
            let mut next = Vec::with_capacity(next_len);
            next.extend_from_slice(&u);
            if previous.is_none() {
                next.push(x);
            }
            next.extend_from_slice(&u[keep..]);
            last_read[x.index()] = Some(n);
            xs.push(x);
            u_len.push(next.len());
            u = Word::from_letters(next);
        }
        // x_N is needed for h_{N-1}.
        let n_max = u_len.len();
        if xs.len() < n_max {
            if let Some(x) = letters.next() {
                xs.push(x);
            }
        }

        let k = spec.alphabet_size();
        let mut images: Vec<Vec<Letter>> = (0..k)
            .map(|a| vec![Letter::new(a).expect("alphabet within bounds")])
            .collect();
        let mut h = Vec::with_capacity(n_max);
        for n in 0..n_max {
            // images hold μ_n(a) for every letter a.
            match xs.get(n) {
                Some(&next) => h.push(Word::from_letters(images[next.index()].clone())),
                None => break,
            }
            if n + 1 == n_max {
                break;
            }
            let xn = xs[n].index();
            let head = images[xn].clone();
            for (a, img) in images.iter_mut().enumerate() {
                if a != xn {
                    let mut grown = Vec::with_capacity(head.len() + img.len());
                    grown.extend_from_slice(&head);
                    grown.extend_from_slice(img);
                    *img = grown;
                }
            }
        }

        let mut last_seen = vec![None; k];
        let prev = xs
            .iter()
            .enumerate()
            .map(|(i, x)| last_seen[x.index()].replace(i + 1))
            .collect();

        MorphismTable {
            spec: spec.clone(),
            xs,
            prev,
            longest: u,
            u_len,
            h,
        }
    }

    pub fn spec(&self) -> &DirectiveSpec {
        &self.spec
    }

    /// Largest `n` with `u_n` stored.
    pub fn max_index(&self) -> usize {
        self.u_len.len()
    }

    /// Largest `n` with `h_n` stored.
    pub fn max_h_index(&self) -> Option<usize> {
        self.h.len().checked_sub(1)
    }

    /// `u_n`, 1-based; `u_1` is empty.
    pub fn u(&self, n: usize) -> Result<&[Letter]> {
        if n == 0 || n > self.u_len.len() {
            return Err(self.out_of_range("u", n));
        }
        Ok(&self.longest[..self.u_len[n - 1]])
    }

    pub fn u_len(&self, n: usize) -> Result<usize> {
        self.u(n).map(<[Letter]>::len)
    }

    /// `h_n = μ_n(x_{n+1})`, 0-based.
    pub fn h(&self, n: usize) -> Result<&Word> {
        self.h.get(n).ok_or_else(|| self.out_of_range("h", n))
    }

    /// Reversal of `h_n`.
    pub fn h_rev(&self, n: usize) -> Result<Word> {
        self.h(n).map(|h| reversal(h))
    }

    /// `x_n`, 1-based.
    pub fn x(&self, n: usize) -> Result<Letter> {
        n.checked_sub(1)
            .and_then(|i| self.xs.get(i).copied())
            .ok_or_else(|| self.out_of_range("x", n))
    }

    /// `P(n)`: the last position before `n` carrying the letter `x_n`.
    pub fn previous_occurrence(&self, n: usize) -> Result<Option<usize>> {
        n.checked_sub(1)
            .and_then(|i| self.prev.get(i).copied())
            .ok_or_else(|| self.out_of_range("P", n))
    }

    /// `v_{n-1}`: `u_n` with the suffix `reversal(h_{n-1})` removed. Defined only when
    /// `x_n` occurred before position `n`.
    pub fn v(&self, n: usize) -> Result<Word> {
        if self.previous_occurrence(n)?.is_none() {
            return Err(Error::FreshLetter(n));
        }
        let hr = self.h_rev(n - 1)?;
        strip_suffix(&hr, self.u(n)?)
    }

    pub fn g(&self, m: usize) -> Option<usize> {
        self.spec.g(m)
    }

    pub fn run(&self, m: usize) -> Option<Run> {
        self.spec.run(m)
    }

    /// The longest stored palindromic prefix.
    pub fn longest_prefix(&self) -> &[Letter] {
        &self.longest
    }

    /// Largest `m` such that `u_{g(m)}` is stored.
    pub fn max_run(&self) -> usize {
        let mut m = 0;
        while self.g(m + 1).is_some_and(|g| g <= self.max_index()) {
            m += 1;
        }
        m
    }

    fn out_of_range(&self, what: &str, index: usize) -> Error {
        Error::BeyondHorizon {
            what: what.to_string(),
            index,
            spec: self.spec.to_string(),
            max_index: self.max_index(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(s: &str) -> MorphismTable {
        MorphismTable::with_horizon(&s.parse().unwrap(), Horizon::new(20, 1 << 16))
    }

    #[test]
    fn fibonacci_entries() {
        let t = table("|a b");
        assert_eq!(t.u(1).unwrap(), &[][..]);
        assert_eq!(Word::from(t.u(3).unwrap()).to_string(), "aba");
        assert_eq!(Word::from(t.u(5).unwrap()).to_string(), "abaababaaba");
        assert_eq!(t.h(0).unwrap().to_string(), "a");
        assert_eq!(t.h(3).unwrap().to_string(), "abaab");
        assert_eq!(t.previous_occurrence(3).unwrap(), Some(1));
        assert_eq!(t.previous_occurrence(2).unwrap(), None);
    }

    #[test]
    fn v_examples() {
        let t = table("|a b");
        assert_eq!(t.v(3).unwrap().to_string(), "");
        assert_eq!(t.v(4).unwrap().to_string(), "a");
        assert_eq!(t.v(2), Err(Error::FreshLetter(2)));
    }

    #[test]
    fn horizon_is_respected() {
        let t = MorphismTable::with_horizon(&"|a b".parse().unwrap(), Horizon::new(64, 100));
        assert!(t.u_len(t.max_index()).unwrap() <= 100);
        assert!(t.u(t.max_index() + 1).is_err());
        assert_eq!(t.max_h_index(), Some(t.max_index() - 1));
        let t = MorphismTable::with_horizon(&"|a b".parse().unwrap(), Horizon::new(6, 1 << 20));
        assert_eq!(t.max_index(), 6);
    }

    #[test]
    fn finite_directive_stops_at_its_end() {
        let t = table("a^2 b");
        assert_eq!(t.max_index(), 4);
        assert_eq!(Word::from(t.u(4).unwrap()).to_string(), "aabaa");
        assert_eq!(t.max_h_index(), Some(2));
    }
}
