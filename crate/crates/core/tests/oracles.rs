mod common;

use memload::depmetrics::simulate_store;
use memload::treemetrics::{coordination_adjusted_numbers, NumberingScheme};
use memload::{
    grouped_stack_oracle_depths, load_profile, load_profile_oracle, parse_ptb_corpus, stack_oracle_depths,
    word_depths, ConstituencyTree, DependencySentence, MetricConfig,
};

use common::*;

fn yngve(adjust: bool) -> MetricConfig {
    MetricConfig::words(NumberingScheme::Yngve).with_coordination_adjust(adjust)
}

fn sampson(adjust: bool) -> MetricConfig {
    MetricConfig::words(NumberingScheme::Sampson).with_coordination_adjust(adjust)
}

#[test]
fn load_profile_matches_store_for_every_small_sentence() {
    let mut checked = 0;
    for n in 1..=6 {
        for s in all_dep_sentences(n) {
            assert_eq!(load_profile(&s), load_profile_oracle(&s), "heads {:?}", s.heads());
            checked += 1;
        }
    }
    // sum over n of n * (n-1)^(n-1) + ... ; recount independently
    let expected: usize = (1..=6usize).map(|n| n * (n - 1).pow(n as u32 - 1)).sum();
    assert_eq!(checked, expected);
}

#[test]
fn load_profile_matches_store_on_random_sentences() {
    let mut rng = rng(7);
    for _ in 0..1000 {
        let n = rand::Rng::gen_range(&mut rng, 1..=40);
        let s = random_dep(&mut rng, n);
        assert_eq!(load_profile(&s), load_profile_oracle(&s), "heads {:?}", s.heads());
    }
}

#[test]
fn store_contents_of_worked_example() {
    let s = DependencySentence::from_heads([
        ("sono", 2),
        ("shounen-wa", 5),
        ("chiisai", 4),
        ("ningyou-wo", 5),
        ("motteiru", 0),
    ])
    .unwrap();
    let (profile, snaps) = simulate_store(&s);
    assert_eq!(profile.values(), [1, 1, 2, 2, 0]);
    let names = |step: usize| {
        snaps[step]
            .iter()
            .map(|&i| s.units()[i - 1].surface.as_str())
            .collect::<Vec<_>>()
    };
    assert_eq!(names(0), ["sono"]);
    assert_eq!(names(1), ["shounen-wa"]);
    assert_eq!(names(2), ["shounen-wa", "chiisai"]);
    assert_eq!(names(3), ["shounen-wa", "ningyou-wo"]);
    assert!(names(4).is_empty());
}

#[test]
fn word_depths_match_pushdown_automata_on_random_trees() {
    let mut rng = rng(11);
    for _ in 0..1000 {
        let t = random_tree(&mut rng, 8, 5);
        assert_eq!(word_depths(&t, &yngve(false)), stack_oracle_depths(&t), "{t}");
        assert_eq!(word_depths(&t, &sampson(false)), grouped_stack_oracle_depths(&t), "{t}");
    }
}

#[test]
fn coordination_numbers_match_grouped_automaton() {
    let mut rng = rng(13);
    let mut coordinated = 0;
    for _ in 0..1000 {
        let t = random_tree(&mut rng, 8, 5);
        if t.to_string().contains("(CC") {
            coordinated += 1;
        }
        assert_eq!(word_depths(&t, &yngve(true)).values(), coordination_stack_oracle(&t), "{t}");
        // grouping never changes whether anything is pending
        assert_eq!(word_depths(&t, &sampson(true)), grouped_stack_oracle_depths(&t), "{t}");
    }
    assert!(coordinated > 100);
}

#[test]
fn coordination_examples_via_automaton() {
    // flat NP coordination under a unary root, one word per child
    let t = parse_ptb_corpus("(X (NP (NP a) (, ,) (NP b) (CC and) (NP c)))").unwrap().remove(0);
    assert_eq!(coordination_stack_oracle(&t), [2, 2, 1, 1, 0]);
    assert_eq!(coordination_adjusted_numbers(&["NP", ",", "NP", "CC", "NP"], NumberingScheme::Yngve), [2, 2, 1, 1, 0]);

    let t = parse_ptb_corpus("(X (NP (NP a) (CC and) (NP b)))").unwrap().remove(0);
    assert_eq!(grouped_stack_oracle_depths(&t).values(), [1, 1, 0]);
    assert_eq!(coordination_adjusted_numbers(&["NP", "CC", "NP"], NumberingScheme::Sampson), [1, 1, 0]);
}

#[test]
fn figure_tree_against_oracles() {
    let t = parse_ptb_corpus("(S (NP (DT The) (N boy)) (VP (V has) (NP (DT a) (J small) (N doll))))")
        .unwrap()
        .remove(0);
    assert_eq!(stack_oracle_depths(&t).values(), [2, 1, 1, 2, 1, 0]);
    assert_eq!(grouped_stack_oracle_depths(&t).values(), [2, 1, 1, 1, 1, 0]);
    assert_eq!(coordination_stack_oracle(&t), [2, 1, 1, 2, 1, 0]);
}

#[test]
fn single_leaf_tree() {
    let t = ConstituencyTree::leaf("w");
    assert_eq!(stack_oracle_depths(&t).values(), [0]);
    assert_eq!(word_depths(&t, &yngve(true)).values(), [0]);
}
