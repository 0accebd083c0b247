use epifactor::closed_form::{c_factorization, c_transient, table_for_runs, z_factorization};
use epifactor::corpus::{corpus, CorpusParams};
use epifactor::episturmian::{
    h, palindromic_prefix, standard_prefix, DirectiveSpec, Horizon, MorphismTable, Run,
};
use epifactor::factorizer::{c_factorize, z_factorize};
use epifactor::verify::{verify_corpus, Property, VerifyConfig};
use epifactor::word::{is_prefix, Letter};
use proptest::prelude::*;

/// Random valid directives: up to 5 prefix runs, a tail that is a rotation of the
/// alphabet with exponents up to 2.
fn directive() -> impl Strategy<Value = DirectiveSpec> {
    (
        2usize..=4,
        0usize..4,
        prop::collection::vec((0usize..4, 1usize..=3), 0..=5),
    )
        .prop_flat_map(|(k, shift, raw)| {
            (Just((k, shift, raw)), prop::collection::vec(1usize..=2, k))
        })
        .prop_filter_map(
            "adjacent runs must differ",
            |((k, shift, raw), tail_exps)| {
                let letter = |i: usize| Letter::new(i % k).unwrap();
                let tail: Vec<Run> = (0..k)
                    .map(|i| Run::new(letter(i + shift), tail_exps[i]))
                    .collect();
                let mut prefix: Vec<Run> = Vec::new();
                for (l, e) in raw {
                    let l = letter(l);
                    if prefix.last().map(|r| r.letter) != Some(l) {
                        prefix.push(Run::new(l, e));
                    }
                }
                DirectiveSpec::new(prefix, tail, Some(k)).ok()
            },
        )
}

fn quick() -> VerifyConfig {
    VerifyConfig {
        lemma_horizon: Horizon::new(20, 1 << 15),
        window_len: 512,
        count_lengths: vec![100, 1000],
        random_words: 0,
        ..VerifyConfig::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn table_matches_direct_definitions(spec in directive()) {
        let table = MorphismTable::with_horizon(&spec, Horizon::new(10, 1 << 14));
        for n in 1..=table.max_index() {
            prop_assert_eq!(table.u(n).unwrap(), &palindromic_prefix(&spec, n).unwrap()[..]);
        }
        for n in 0..=table.max_h_index().unwrap().min(7) {
            prop_assert_eq!(table.h(n).unwrap(), &h(&spec, n).unwrap());
        }
    }

    #[test]
    fn closed_forms_match_oracles(spec in directive()) {
        let runs = 7;
        // The transient may run past the oracle prefix.
        let extra = spec.prefix_runs().len() + spec.tail_runs().len();
        let table = table_for_runs(&spec, runs + extra).unwrap();
        let prefix = table.u(spec.g(runs).unwrap()).unwrap();
        let oracle = z_factorize(prefix).unwrap();
        let k = oracle.complete_count().min(5);
        let closed = z_factorization(&table, k).unwrap();
        prop_assert_eq!(&closed.factors[..], &oracle.factors[..k]);

        let oracle = c_factorize(prefix).unwrap();
        let trusted = oracle.trusted();
        let (closed, t) = c_factorization(&table, trusted.len()).unwrap();
        prop_assert_eq!(&closed.factors[..], trusted);
        prop_assert_eq!(t.j - t.i, t.k0 - t.m);
    }

    #[test]
    fn palindromic_prefixes_are_prefixes_of_the_word(spec in directive()) {
        let w = standard_prefix(&spec, 2000).unwrap();
        for n in 1..=8 {
            let u = palindromic_prefix(&spec, n).unwrap();
            if u.len() <= w.len() {
                prop_assert!(is_prefix(&u, &w));
            }
        }
    }

    #[test]
    fn every_property_holds(spec in directive()) {
        let report = verify_corpus(std::slice::from_ref(&spec), &Property::ALL, &quick());
        for p in &report.properties {
            prop_assert!(p.passed(), "{}: {}", p.property, p.failures[0]);
        }
    }
}

#[test]
fn small_corpus_passes_every_property() {
    let mut specs = corpus(CorpusParams::new(2, 2, 2)).unwrap();
    specs.extend(corpus(CorpusParams::new(3, 1, 2)).unwrap());
    let report = verify_corpus(&specs, &Property::ALL, &quick());
    for p in &report.properties {
        assert!(p.passed(), "{}: {:?}", p.property, p.failures.first());
        assert!(p.checks > 0);
    }
}

#[test]
fn transient_indices_for_known_words() {
    let cases = [
        ("| a b", 2, 3, 1),
        ("| a b c", 3, 5, 1),
        ("a^2 b | a b", 2, 4, 0),
        ("a^3 | b c a", 3, 6, 0),
    ];
    for (text, i, j, m) in cases {
        let spec: DirectiveSpec = text.parse().unwrap();
        let t = c_transient(&table_for_runs(&spec, 8).unwrap()).unwrap();
        assert_eq!((t.i, t.j, t.m), (i, j, m), "{text}");
    }
}
