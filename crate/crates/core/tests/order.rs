use homorder::algebra::{directed_cycle, k1, path, sum, transitive_tournament};
use homorder::enumerate::Oracle;
use homorder::hom::is_isomorphic;
use homorder::order::{
    antichain_from_duality, cutpoint_certificates, d_star, is_maximal_antichain_bounded, is_small_bounded,
    split_antichain, Antichain, Placement, Rejection, SmallnessVerdict, SplitOptions, SplitVerdict,
    WitnessSource,
};
use homorder::{Config, Signature};

fn digraphs() -> Oracle {
    Oracle::new(Signature::digraph(), Config::default())
}

fn opts() -> SplitOptions {
    SplitOptions {
        witness_bound: 5,
        verify_bound: 4,
    }
}

#[test]
fn path_and_tournament_split_in_both_orders() {
    let oracle = digraphs();
    let a = Antichain::new(vec![path(3), transitive_tournament(3)]).unwrap();
    for order in [a.clone(), a.reversed()] {
        let r = split_antichain(&oracle, &order, opts()).unwrap();
        assert_eq!(r.upper(), vec![&path(3)]);
        assert_eq!(r.lower(), vec![&transitive_tournament(3)]);
        assert_eq!(r.verdict, SplitVerdict::Splitting);
        for (e, p) in r.elements.iter().zip(&r.placements) {
            match p {
                Placement::Upper(w) => {
                    assert_eq!(w.structure, path(4));
                    assert!(matches!(w.source, WitnessSource::TreeSum { .. }));
                    assert!(w.embedding.is_homomorphism(e, &w.structure));
                }
                Placement::Lower(r) => assert_eq!(r.tag(), "duality-forced"),
            }
        }
    }
}

#[test]
fn witness_bound_four_finds_a_catalog_witness() {
    let oracle = digraphs();
    let a = Antichain::new(vec![path(3), transitive_tournament(3)]).unwrap();
    let r = split_antichain(&oracle, &a, SplitOptions::default()).unwrap();
    match &r.placements[0] {
        Placement::Upper(w) => assert_eq!(w.source, WitnessSource::Catalog),
        other => panic!("{other:?}"),
    }
    assert_eq!(r.verdict, SplitVerdict::Splitting);
}

#[test]
fn two_path_is_a_bottom_exception() {
    let oracle = digraphs();
    let r = split_antichain(&oracle, &Antichain::new(vec![path(2)]).unwrap(), opts()).unwrap();
    assert_eq!(r.upper(), vec![&path(2)]);
    assert_eq!(r.verdict, SplitVerdict::BottomException);
    assert!(matches!(r.smallness[0].1, SmallnessVerdict::SmallUpToBound { .. }));
}

#[test]
fn search_exhaustion_names_its_bound() {
    let oracle = digraphs();
    let r = split_antichain(&oracle, &Antichain::new(vec![transitive_tournament(3), path(3)]).unwrap(), opts())
        .unwrap();
    assert!(matches!(r.placements[0], Placement::Lower(Rejection::DualityForced { .. })));
    assert_eq!(Rejection::SearchExhausted { bound: 3 }.tag(), "search-exhausted(3)");
}

#[test]
fn smallness_examples() {
    let oracle = digraphs();
    assert_eq!(is_small_bounded(&oracle, &path(1), 4).unwrap(), SmallnessVerdict::Small);
    match is_small_bounded(&oracle, &path(2), 4).unwrap() {
        SmallnessVerdict::SmallUpToBound { y, bound } => {
            assert_eq!(y, path(1));
            assert_eq!(bound, 4);
        }
        other => panic!("{other:?}"),
    }
    assert!(is_small_bounded(&oracle, &directed_cycle(3), 4).unwrap().is_not_small());
}

#[test]
fn d_star_components() {
    let d = d_star(&Signature::digraph(), &Config::default()).unwrap();
    assert_eq!(d.components, vec![k1(&Signature::digraph()), path(1)]);
    assert!(is_isomorphic(&d.core, &path(1)));
    let d = d_star(&Signature::new(vec![2, 2]).unwrap(), &Config::default()).unwrap();
    assert_eq!(d.components.len(), 7);
    for (i, a) in d.components.iter().enumerate() {
        assert!(homorder::model::is_tree(a));
        for b in &d.components[i + 1..] {
            assert!(!is_isomorphic(a, b));
        }
    }
}

#[test]
fn dualities_give_maximal_antichains() {
    let oracle = digraphs();
    for k in 1..=3 {
        let a = antichain_from_duality(&oracle, &[path(k)], &[transitive_tournament(k)], 4).unwrap();
        assert!(is_maximal_antichain_bounded(&oracle, &a, 4).unwrap().passed(), "k = {k}");
    }
}

#[test]
fn cutpoints_of_short_paths() {
    let oracle = digraphs();
    let r = cutpoint_certificates(&oracle, &path(2), 4).unwrap();
    assert!(is_isomorphic(&r.below, &path(1)) && is_isomorphic(&r.above, &path(2)));
    assert!(r.passed());
    let r = cutpoint_certificates(&oracle, &path(3), 4).unwrap();
    let expected = sum(&path(3), &transitive_tournament(3)).unwrap();
    assert!(is_isomorphic(&r.above, &expected));
    assert!(r.passed());
}
