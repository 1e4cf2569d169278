use efl_core::forest::supporting_forest;
use efl_core::grammar::GrammarRules;
use efl_core::ibtree::{label_counts, tree_stats};
use efl_core::poly::rational;
use efl_core::{
    gamma_expand, GammaExpansion, IncTree, Label, LabelScheme, Monomial, Perm, RationalPoly, VarId,
};
use proptest::prelude::*;

fn monomial(max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::array::uniform8(0..=max_exp).prop_map(Monomial::new)
}

fn poly() -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec((monomial(2), -6i64..=6, 1i64..=4), 0..5).prop_map(|terms| {
        RationalPoly::from_terms(terms.into_iter().map(|(m, n, d)| (m, rational(n, d))))
    })
}

fn var() -> impl Strategy<Value = VarId> {
    prop::sample::select(VarId::ALL.to_vec())
}

fn perm(max_n: usize) -> impl Strategy<Value = Perm> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Perm::new(w).unwrap())
}

/// A symmetric polynomial built directly from random γ-blocks.
fn gamma_blocks() -> impl Strategy<Value = GammaExpansion> {
    let rest = prop::array::uniform8(0u32..=2).prop_map(|mut e| {
        e[VarId::X.index()] = 0;
        e[VarId::Y.index()] = 0;
        Monomial::new(e)
    });
    prop::collection::vec((rest, 0u32..=6, prop::collection::vec(-5i64..=5, 4)), 0..4).prop_map(
        |blocks| {
            let mut g = GammaExpansion::default();
            let mut seen = std::collections::BTreeSet::new();
            for (rest, d, gammas) in blocks {
                if !seen.insert(rest) {
                    continue;
                }
                for (j, c) in gammas.into_iter().take(d as usize / 2 + 1).enumerate() {
                    g.accumulate(rest, d, j as u32, rational(c, 1));
                }
            }
            g
        },
    )
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &RationalPoly::one(), p.clone());
    }

    #[test]
    fn leibniz_rule(p in poly(), q in poly(), v in var()) {
        let lhs = (&p * &q).partial_derivative(v);
        let rhs = &(&p.partial_derivative(v) * &q) + &(&p * &q.partial_derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn grammar_derivative_is_a_derivation(p in poly(), q in poly()) {
        let g = GrammarRules::alpha_beta_eulerian();
        prop_assert_eq!(
            g.formal_derivative(&(&p * &q)),
            &(&g.formal_derivative(&p) * &q) + &(&p * &g.formal_derivative(&q))
        );
        prop_assert_eq!(
            g.formal_derivative(&(&p + &q)),
            &g.formal_derivative(&p) + &g.formal_derivative(&q)
        );
    }

    #[test]
    fn divide_round_trip(p in poly(), m in monomial(3)) {
        let product = &p * &RationalPoly::monomial(m);
        prop_assert_eq!(product.divide_exact_by_monomial(&m).unwrap(), p);
    }

    #[test]
    fn text_and_json_round_trip(p in poly()) {
        prop_assert_eq!(p.to_string().parse::<RationalPoly>().unwrap(), p.clone());
        prop_assert_eq!(RationalPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn gamma_reconstruction(g in gamma_blocks()) {
        let p = g.reconstruct();
        let expanded = gamma_expand(&p).unwrap();
        prop_assert_eq!(expanded.reconstruct(), p);
        prop_assert_eq!(expanded.to_leading_poly(), g.to_leading_poly());
    }

    #[test]
    fn tree_round_trip(p in perm(10)) {
        let t = IncTree::from_perm(&p).unwrap();
        prop_assert_eq!(t.to_perm().unwrap(), p);
        prop_assert_eq!(t.to_string().parse::<IncTree>().unwrap(), t);
    }

    #[test]
    fn statistic_transport(p in perm(10)) {
        let s = p.statistics();
        let t = tree_stats(&IncTree::from_perm(&p).unwrap());
        prop_assert_eq!(t.xleaf, s.asc);
        prop_assert_eq!(t.yleaf, s.des);
        prop_assert_eq!(t.n_alpha, s.lrmin - 1);
        prop_assert_eq!(t.n_beta, s.rlmin - 1);
        prop_assert_eq!(t.peaks, s.peaks);
    }

    #[test]
    fn permutation_statistic_sums(p in perm(12)) {
        let s = p.statistics();
        prop_assert_eq!(s.asc + s.des, s.n - 1);
        prop_assert_eq!(s.exc + s.drop + s.fix, s.n);
        let c = p.to_cycles();
        prop_assert_eq!(c.cycle_count(), s.rlmin);
        prop_assert_eq!(c.to_function().statistics().cyc, s.rlmin);
    }

    #[test]
    fn axyz_contract(p in perm(10)) {
        let pi = p.to_cycles().to_function().statistics();
        let t = IncTree::from_perm(&p).unwrap();
        let c = label_counts(&t, LabelScheme::Axyz);
        prop_assert_eq!(c.count(Label::X) as usize, pi.exc);
        prop_assert_eq!(c.count(Label::Y) as usize, pi.drop);
        prop_assert_eq!(c.count(Label::Z) as usize, pi.fix);
        prop_assert_eq!(c.count(Label::A), 1);
        prop_assert_eq!(tree_stats(&t).n_beta + 1, pi.cyc);
    }

    #[test]
    fn support_forest_partitions(p in perm(10)) {
        prop_assume!(p.len() >= 2);
        let t = IncTree::from_perm(&p).unwrap();
        let f = supporting_forest(&t).unwrap();
        let mut labels: Vec<u32> = f.label_sets().concat();
        labels.sort();
        prop_assert_eq!(labels, (2..=p.len() as u32).collect::<Vec<_>>());
        let mut shifted: Vec<u32> = f.shifted(-1).label_sets().concat();
        shifted.sort();
        prop_assert_eq!(shifted, (1..p.len() as u32).collect::<Vec<_>>());
    }

    #[test]
    fn reversal_symmetry(n in 0usize..=12) {
        let a = efl_core::eulerian_via_grammar(n).unwrap();
        prop_assert_eq!(a.swap_vars(VarId::X, VarId::Y).swap_vars(VarId::Alpha, VarId::Beta), a.clone());
        for (m, _) in a.terms() {
            prop_assert_eq!(m.exponent(VarId::X) + m.exponent(VarId::Y), n as u32);
        }
    }
}
