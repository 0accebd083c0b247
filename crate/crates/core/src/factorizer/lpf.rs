//! Longest-previous-factor arrays.
//!
//! The fast path builds a suffix array by prefix doubling, derives the LCP array
//! with Kasai's algorithm, and then computes LPF in one stack pass over the suffix
//! array (Crochemore–Ilie). A quadratic scan is kept as the reference.

use std::ops::Deref;

use crate::word::Letter;

/// `lpf[q]` is the length of the longest factor starting at `q` that also starts at
/// some position `< q`; the earlier occurrence may overlap position `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpfArray(Vec<usize>);

impl LpfArray {
    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for LpfArray {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Suffix array of `w`: starting positions of its suffixes in lexicographic order.
pub fn suffix_array(w: &[Letter]) -> Vec<u32> {
    let n = w.len();
    assert!(
        n < u32::MAX as usize,
        "word too long for 32-bit suffix array"
    );
    if n == 0 {
        return Vec::new();
    }
    let mut rank: Vec<u32> = w.iter().map(|l| l.index() as u32).collect();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut tmp = vec![0u32; n];
    let mut buckets = vec![0usize; n.max(crate::word::MAX_ALPHABET) + 1];

    counting_sort(&mut sa, &rank, &mut tmp, &mut buckets);
    let mut classes = rerank(&sa, &mut rank, &mut tmp, |a, b, r| r[a] == r[b]);

    let mut k = 1usize;
    while classes < n {
        // Order by second key: suffixes with no second half come first.
        let mut p = 0;
        for i in (n - k.min(n))..n {
            tmp[p] = i as u32;
            p += 1;
        }
        for &s in sa.iter() {
            if s as usize >= k {
                tmp[p] = s - k as u32;
                p += 1;
            }
        }
        std::mem::swap(&mut sa, &mut tmp);
        counting_sort(&mut sa, &rank, &mut tmp, &mut buckets[..classes.max(1) + 1]);
        classes = rerank(&sa, &mut rank, &mut tmp, |a, b, r| {
            let second = |i: usize| if i + k < n { r[i + k] as i64 } else { -1 };
            r[a] == r[b] && second(a) == second(b)
        });
        k *= 2;
    }
    sa
}

/// Stable counting sort of `sa` by `key`, in place.
fn counting_sort(sa: &mut [u32], key: &[u32], tmp: &mut [u32], buckets: &mut [usize]) {
    buckets.iter_mut().for_each(|b| *b = 0);
    for &s in sa.iter() {
        buckets[key[s as usize] as usize + 1] += 1;
    }
    for i in 1..buckets.len() {
        buckets[i] += buckets[i - 1];
    }
    for &s in sa.iter() {
        let b = &mut buckets[key[s as usize] as usize];
        tmp[*b] = s;
        *b += 1;
    }
    sa.copy_from_slice(&tmp[..sa.len()]);
}

/// Assigns dense class numbers along `sa`; returns the number of classes.
fn rerank<F>(sa: &[u32], rank: &mut [u32], tmp: &mut [u32], same: F) -> usize
where
    F: Fn(usize, usize, &[u32]) -> bool,
{
    let mut class = 0u32;
    tmp[sa[0] as usize] = 0;
    for pair in sa.windows(2) {
        let (a, b) = (pair[0] as usize, pair[1] as usize);
        if !same(a, b, rank) {
            class += 1;
        }
        tmp[b] = class;
    }
    rank.copy_from_slice(&tmp[..rank.len()]);
    class as usize + 1
}

/// `lcp[r]` = longest common prefix of the suffixes at ranks `r - 1` and `r`; `lcp[0] = 0`.
pub fn lcp_array(w: &[Letter], sa: &[u32]) -> Vec<u32> {
    let n = w.len();
    let mut inv = vec![0u32; n];
    for (r, &s) in sa.iter().enumerate() {
        inv[s as usize] = r as u32;
    }
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = inv[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && w[i + h] == w[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// LPF array through the suffix array.
pub fn lpf(w: &[Letter]) -> LpfArray {
    let n = w.len();
    if n == 0 {
        return LpfArray(Vec::new());
    }
    let sa = suffix_array(w);
    let mut lcp = lcp_array(w, &sa);
    // Sentinel rank n: position -1, lcp 0, pops everything.
    lcp.push(0);
    let mut out = vec![0usize; n];
    let mut stack: Vec<usize> = Vec::with_capacity(64);
    stack.push(0);
    for i in 1..=n {
        let pos_i = if i < n { sa[i] as i64 } else { -1 };
        while let Some(&top) = stack.last() {
            let pos_top = sa[top] as i64;
            if pos_i < pos_top {
                out[pos_top as usize] = lcp[top].max(lcp[i]) as usize;
                lcp[i] = lcp[top].min(lcp[i]);
            } else if lcp[i] <= lcp[top] {
                out[pos_top as usize] = lcp[top] as usize;
            } else {
                break;
            }
            stack.pop();
        }
        if i < n {
            stack.push(i);
        }
    }
    LpfArray(out)
}

/// Quadratic reference: for every `q`, the best match against every `j < q`.
pub fn lpf_naive(w: &[Letter]) -> LpfArray {
    LpfArray((0..w.len()).map(|q| longest_previous_match(w, q)).collect())
}

/// Length of the longest common prefix of `w[q..]` and some `w[j..]` with `j < q`.
pub fn longest_previous_match(w: &[Letter], q: usize) -> usize {
    let tail = &w[q..];
    (0..q)
        .map(|j| w[j..].iter().zip(tail).take_while(|(a, b)| a == b).count())
        .max()
        .unwrap_or(0)
}
