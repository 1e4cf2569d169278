use std::collections::{BTreeMap, BTreeSet};

use efl_core::forest::{
    canonicalize, enumerate_plane_forests, forest_weight, supporting_forest, total_plane_weight,
};
use efl_core::grammar::GrammarRules;
use efl_core::ibtree::{apply_labeling, sum_weights};
use efl_core::perm::{enumerate, Family};
use efl_core::verify::{reports_to_json, run_all, run_check, CheckReport, Status};
use efl_core::{
    eulerian_via_grammar, Budgets, CheckId, IncTree, LabelScheme, Monomial, PlaneFamily,
    PlaneForest, RationalPoly, VarId, WeightRuleSet,
};

fn ab() -> Monomial {
    Monomial::from_pairs(&[(VarId::A, 1), (VarId::B, 1)])
}

fn trees(n: usize) -> impl Iterator<Item = IncTree> {
    enumerate(n, Family::All).map(|p| IncTree::from_perm(&p).unwrap())
}

#[test]
fn grammar_iterates_are_divisible_by_ab() {
    let g = GrammarRules::alpha_beta_eulerian();
    let mut p = RationalPoly::monomial(ab());
    for _ in 0..=10 {
        assert!(p.divide_exact_by_monomial(&ab()).is_ok());
        p = g.formal_derivative(&p);
    }
}

#[test]
fn orbit_sums_factor_through_plane_forests() {
    for n in 2..=7 {
        let mut orbits: BTreeMap<String, (PlaneForest, RationalPoly)> = BTreeMap::new();
        for t in trees(n) {
            let plane = canonicalize(&supporting_forest(&t).unwrap());
            let w = apply_labeling(&t, LabelScheme::AbAlphaBeta).weight();
            let entry = orbits
                .entry(plane.to_string())
                .or_insert_with(|| (plane, RationalPoly::zero()));
            entry.1 += &w;
        }
        for (key, (plane, sum)) in orbits {
            let expected = &RationalPoly::monomial(ab())
                * &forest_weight(&plane, WeightRuleSet::AlphaBeta).unwrap();
            assert_eq!(sum, expected, "n={n} orbit {key}");
        }
    }
}

#[test]
fn plane_forest_count_matches_canonical_forms() {
    for n in 0..=7 {
        let generated = enumerate_plane_forests(n, PlaneFamily::All);
        let distinct: BTreeSet<String> = generated.iter().map(ToString::to_string).collect();
        assert_eq!(distinct.len(), generated.len(), "duplicates at n={n}");
        let from_trees: BTreeSet<String> = trees(n + 1)
            .map(|t| {
                let f = if n == 0 {
                    PlaneForest::default()
                } else {
                    canonicalize(&supporting_forest(&t).unwrap()).shifted(-1)
                };
                f.to_string()
            })
            .collect();
        assert_eq!(distinct, from_trees, "n={n}");
    }
}

#[test]
fn ab_alpha_is_the_alpha_equals_beta_specialization() {
    for n in 1..=7 {
        let full = sum_weights(n, LabelScheme::AbAlphaBeta).unwrap();
        let alpha = sum_weights(n, LabelScheme::AbAlpha).unwrap();
        assert_eq!(
            alpha,
            full.substitute_pairs(&[(VarId::Beta, RationalPoly::var(VarId::Alpha))])
        );
    }
}

#[test]
fn thm_c_weights_give_the_alpha_specialization() {
    for n in 0..=7 {
        let a = eulerian_via_grammar(n)
            .unwrap()
            .substitute_pairs(&[(VarId::Beta, RationalPoly::var(VarId::Alpha))]);
        assert_eq!(
            total_plane_weight(n, WeightRuleSet::Alpha).unwrap(),
            a,
            "n={n}"
        );
    }
}

#[test]
fn passing_reports_have_equal_sides() {
    for r in run_all(3, &Budgets::default()) {
        assert_eq!(r.status, Status::Pass, "{} n={}", r.id, r.n);
        assert_eq!(r.lhs, r.rhs);
        assert!(r.witness.is_none());
    }
}

#[test]
fn failing_report_serializes_witness() {
    let mut r = run_check(CheckId::Grammar, 1, &Budgets::default()).unwrap();
    r.lhs = "x*beta".parse().unwrap();
    let witness = r.lhs.first_difference(&r.rhs);
    let failing = CheckReport {
        status: Status::Fail,
        witness,
        ..r
    };
    assert_eq!(
        reports_to_json(&[failing], false),
        r#"[{"id":"T11_grammar","n":1,"status":"fail","witness":"y*alpha"}]"#
    );
}
