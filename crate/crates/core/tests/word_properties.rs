use epifactor::word::{
    are_conjugate, count_occurrences, is_palindrome, is_prefix, is_primitive, palindromic_closure,
    power, reversal, smallest_period, Letter, Word,
};
use proptest::prelude::*;

fn word(alphabet: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..alphabet, 0..=max_len)
        .prop_map(|v| v.into_iter().map(|i| Letter::new(i).unwrap()).collect())
}

fn scan_count(p: &[Letter], t: &[Letter]) -> usize {
    (0..=t.len().saturating_sub(p.len()))
        .filter(|&i| t.len() >= p.len() && t[i..i + p.len()] == *p)
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn occurrence_count_matches_scan(p in word(2, 4), t in word(2, 40)) {
        prop_assume!(!p.is_empty());
        prop_assert_eq!(count_occurrences(&p, &t).unwrap(), scan_count(&p, &t));
    }

    #[test]
    fn closure_is_the_shortest_palindromic_extension(w in word(3, 30)) {
        let c = palindromic_closure(&w);
        prop_assert!(is_palindrome(&c));
        prop_assert!(is_prefix(&w, &c));
        prop_assert!(c.len() <= 2 * w.len());
        // Every palindrome w·s has |s| ≥ |w| − (longest palindromic suffix of w).
        for cut in 0..w.len() {
            let mut shorter = w.to_vec();
            shorter.extend(reversal(&w[..cut]).iter());
            if shorter.len() < c.len() {
                prop_assert!(!is_palindrome(&shorter));
            }
        }
        prop_assert_eq!(palindromic_closure(&c), c);
    }

    #[test]
    fn powers_are_not_primitive(w in word(2, 8), e in 2usize..5) {
        prop_assume!(!w.is_empty());
        prop_assert!(!is_primitive(&power(&w, e)).unwrap());
    }

    #[test]
    fn primitivity_agrees_with_smallest_period(w in word(2, 60)) {
        prop_assume!(!w.is_empty());
        let p = smallest_period(&w);
        prop_assert_eq!(is_primitive(&w).unwrap(), p == w.len() || w.len() % p != 0);
    }

    #[test]
    fn rotations_are_conjugate(w in word(3, 20), shift in 0usize..20) {
        let s = if w.is_empty() { 0 } else { shift % w.len() };
        let rotated: Word = w[s..].iter().chain(&w[..s]).copied().collect();
        prop_assert!(are_conjugate(&w, &rotated));
        prop_assert!(are_conjugate(&rotated, &w));
    }

    #[test]
    fn text_form_round_trips(w in word(26, 30)) {
        prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    }
}
