//! Factor statistics for every length at once, read off the suffix and LCP arrays.

use std::collections::HashSet;

use crate::word::{alphabet_of, factor_set, reversal, right_special_factors, Letter, MAX_ALPHABET};

use super::lpf::{lcp_array, suffix_array};

/// `p[l]` = number of distinct factors of length `l`, for `0 ≤ l ≤ |w|`.
pub fn complexity_profile(w: &[Letter]) -> Vec<usize> {
    let n = w.len();
    let sa = suffix_array(w);
    let lcp = lcp_array(w, &sa);
    // Suffix at rank r contributes the new factors of lengths lcp[r]+1 ..= n - sa[r].
    let mut diff = vec![0i64; n + 2];
    for (r, &s) in sa.iter().enumerate() {
        diff[lcp[r] as usize + 1] += 1;
        diff[n - s as usize + 1] -= 1;
    }
    let mut out = Vec::with_capacity(n + 1);
    out.push(1);
    let mut acc = 0i64;
    for d in &diff[1..=n] {
        acc += d;
        out.push(acc as usize);
    }
    out
}

/// `r[l]` = number of right-special factors of length `l`, for `0 ≤ l < |w|`.
pub fn right_special_profile(w: &[Letter]) -> Vec<usize> {
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    let sa = suffix_array(w);
    let lcp = lcp_array(w, &sa);
    // Ranks r - 1, r branch after exactly lcp[r] letters; the pair is a real branch
    // unless the suffix at r - 1 ends there.
    let mut branches: Vec<Vec<usize>> = vec![Vec::new(); n];
    for r in 1..n {
        let l = lcp[r] as usize;
        if n - (sa[r - 1] as usize) > l {
            branches[l].push(r);
        }
    }
    let rmq = SparseMin::new(&lcp);
    branches
        .iter()
        .enumerate()
        .map(|(l, rs)| {
            if rs.is_empty() {
                return 0;
            }
            // Consecutive branch ranks lie in the same length-l class iff every lcp between
            // them is at least l.
            1 + rs
                .windows(2)
                .filter(|p| rmq.min(p[0] + 1, p[1]) < l as u32)
                .count()
        })
        .collect()
}

/// Whether the factors of each length up to `max_len` are closed under reversal.
///
/// Entry `l` is `true` iff every length-`l` factor of `w` has its reversal among the factors.
pub fn reversal_closed_profile(w: &[Letter], max_len: usize) -> Vec<bool> {
    let max_len = max_len.min(w.len());
    let used = alphabet_of(w);
    let Some(sep) = (0..MAX_ALPHABET)
        .filter_map(|i| Letter::new(i).ok())
        .find(|l| !used.contains(l))
    else {
        return (0..=max_len)
            .map(|l| {
                let f = factor_set(w, l);
                f.iter().all(|x| f.contains(&reversal(x)[..]))
            })
            .collect();
    };
    // F(rev w) = rev F(w) has the same size as F(w), so closure holds iff the union
    // of both sets is no larger. In w·sep·rev(w) the factors through sep number exactly l.
    let mut joined = w.to_vec();
    joined.push(sep);
    joined.extend(w.iter().rev());
    let own = complexity_profile(w);
    let both = complexity_profile(&joined);
    (0..=max_len).map(|l| both[l] - l == own[l]).collect()
}

/// Hash-based reference for [`right_special_profile`] at one length.
pub fn right_special_count_naive(w: &[Letter], l: usize) -> usize {
    right_special_factors(w, l).len()
}

/// Hash-based reference for [`complexity_profile`] at one length.
pub fn complexity_naive(w: &[Letter], l: usize) -> usize {
    factor_set(w, l).len()
}

/// Hash-based reference for [`reversal_closed_profile`] at one length.
pub fn reversal_closed_naive(w: &[Letter], l: usize) -> bool {
    let f: HashSet<&[Letter]> = factor_set(w, l);
    f.iter().all(|x| f.contains(&reversal(x)[..]))
}

struct SparseMin {
    levels: Vec<Vec<u32>>,
}

impl SparseMin {
    fn new(v: &[u32]) -> Self {
        let mut levels = vec![v.to_vec()];
        let mut span = 1;
        while 2 * span <= v.len() {
            let prev = levels.last().expect("non-empty");
            let next = (0..=v.len() - 2 * span)
                .map(|i| prev[i].min(prev[i + span]))
                .collect();
            levels.push(next);
            span *= 2;
        }
        SparseMin { levels }
    }

    /// Minimum over the inclusive range `lo..=hi`.
    fn min(&self, lo: usize, hi: usize) -> u32 {
        let k = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        self.levels[k][lo].min(self.levels[k][hi + 1 - (1 << k)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn all_words(k: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..k).map(move |i| {
                        let mut v = w.clone().into_letters();
                        v.push(Letter::new(i).unwrap());
                        Word::from_letters(v)
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn profiles_match_hashing_on_short_words() {
        for (k, max) in [(2, 10), (3, 6)] {
            for len in 1..=max {
                for w in all_words(k, len) {
                    let p = complexity_profile(&w);
                    let rs = right_special_profile(&w);
                    let rc = reversal_closed_profile(&w, len);
                    for l in 0..=len {
                        assert_eq!(p[l], complexity_naive(&w, l), "{w} p({l})");
                        assert_eq!(rc[l], reversal_closed_naive(&w, l), "{w} closed({l})");
                    }
                    for (l, &count) in rs.iter().enumerate() {
                        assert_eq!(count, right_special_count_naive(&w, l), "{w} rs({l})");
                    }
                }
            }
        }
    }

    #[test]
    fn fibonacci_prefix() {
        let w = Word::parse("abaababaabaab").unwrap();
        let p = complexity_profile(&w);
        assert_eq!(&p[..6], &[1, 2, 3, 4, 5, 6]);
        assert_eq!(right_special_profile(&w)[3], 1);
    }
}
