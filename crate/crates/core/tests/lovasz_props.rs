mod common;

use common::*;
use proptest::prelude::*;
use submodular::lovasz::{
    conjugate, descending_order, greedy_base, lovasz_extension, lovasz_with_order, support_p,
    truncated_greedy, Support,
};
use submodular::setfn::{Explicit, FnOracle, Family, BaseFamily, random_submodular};
use submodular::zoo::{CutFunction, Digraph};
use submodular::{SetFunction, Subset};

fn weights(p: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-5.0..5.0f64, p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn positive_homogeneity(seed in 0u64..1000, w in weights(6), lambda in 0.0..10.0f64) {
        let f = instance(seed, 6);
        let scaled: Vec<f64> = w.iter().map(|x| lambda * x).collect();
        let lhs = lovasz_extension(&f, &scaled);
        let rhs = lambda * lovasz_extension(&f, &w);
        prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()));
    }

    #[test]
    fn constant_shift(seed in 0u64..1000, w in weights(6), alpha in -5.0..5.0f64) {
        let f = instance(seed, 6);
        let shifted: Vec<f64> = w.iter().map(|x| x + alpha).collect();
        let lhs = lovasz_extension(&f, &shifted);
        let rhs = lovasz_extension(&f, &w) + alpha * f.eval(Subset::full(6));
        prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()));
    }

    #[test]
    fn ties_can_be_broken_any_way(seed in 0u64..1000, levels in prop::collection::vec(0usize..3, 6)) {
        let f = instance(seed, 6);
        let w: Vec<f64> = levels.iter().map(|&l| l as f64 - 1.0).collect();
        let reference = lovasz_extension(&f, &w);
        // reverse the index order inside each tie block
        let mut order = descending_order(&w);
        order.sort_by(|&a, &b| w[b].total_cmp(&w[a]).then(b.cmp(&a)));
        let other = lovasz_with_order(&f, &w, &order);
        prop_assert!((reference - other).abs() <= 1e-12 * (1.0 + reference.abs()));
    }

    #[test]
    fn matches_level_set_integral(seed in 0u64..1000, w in weights(7)) {
        let f = instance(seed, 7);
        let t = table(&f);
        let direct = lovasz_extension(&f, &w);
        let integral = lovasz_by_integral(&t, &w);
        prop_assert!((direct - integral).abs() <= 1e-9 * (1.0 + direct.abs()));
    }

    #[test]
    fn greedy_base_is_a_tight_base(seed in 0u64..1000, p in 2usize..=10, wseed in 0u64..1000) {
        let f = instance(seed, p);
        let w = random_vec(&mut rng(wseed), p, -3.0, 3.0);
        let s = greedy_base(&f, &w);
        let t = table(&f);
        prop_assert!(brute_in_b(&t, &s, 1e-9));
        let value: f64 = s.iter().zip(&w).map(|(a, b)| a * b).sum();
        prop_assert!((value - lovasz_extension(&f, &w)).abs() <= 1e-9 * (1.0 + value.abs()));
    }

    #[test]
    fn symmetric_cut_extension_is_even(wseed in 0u64..1000) {
        let mut r = rng(wseed);
        let g = random_digraph(&mut r, 6);
        let sym = CutFunction::new(Digraph::undirected(6, g.arcs()).unwrap());
        let w = random_vec(&mut r, 6, -4.0, 4.0);
        let neg: Vec<f64> = w.iter().map(|x| -x).collect();
        let (a, b) = (lovasz_extension(&sym, &w), lovasz_extension(&sym, &neg));
        prop_assert!((a - b).abs() <= 1e-10 * (1.0 + a.abs()));
    }

    #[test]
    fn conjugate_by_cube_enumeration(seed in 0u64..1000, sseed in 0u64..1000) {
        let f = instance(seed, 6);
        let s = random_vec(&mut rng(sseed), 6, -2.0, 2.0);
        let (value, arg) = conjugate(&f, &s).unwrap();
        let mut best = f64::NEG_INFINITY;
        for m in 0..64u64 {
            let w = Subset(m).indicator(6);
            let v: f64 = w.iter().zip(&s).map(|(a, b)| a * b).sum::<f64>() - lovasz_extension(&f, &w);
            best = best.max(v);
        }
        prop_assert!((value - best).abs() <= 1e-9);
        prop_assert!((arg.sum(&s) - f.eval(arg) - value).abs() <= 1e-12);
    }

    #[test]
    fn support_of_p(seed in 0u64..1000, w in prop::collection::vec(0.0..3.0f64, 5)) {
        let f = instance(seed, 5);
        let t = table(&f);
        prop_assert_eq!(support_p(&f, &w), Support::Finite(lovasz_extension(&f, &w)));
        let mut neg = w.clone();
        neg[2] = -0.1;
        prop_assert_eq!(support_p(&f, &neg), Support::PlusInfinity);
        let s = greedy_base(&f, &w);
        prop_assert!(brute_in_p(&t, &s, 1e-9));
    }

    #[test]
    fn truncated_greedy_stays_in_positive_polyhedron(seed in 0u64..1000, w in weights(6)) {
        let cover = random_submodular(seed, 6, Family::plain(BaseFamily::Cover)).unwrap();
        let s = truncated_greedy(&cover, &w);
        prop_assert!(s.iter().all(|&v| v >= 0.0));
        prop_assert!(brute_in_p(&table(&cover), &s, 1e-9));
        let value: f64 = s.iter().zip(&w).map(|(a, b)| a * b).sum();
        let positive: Vec<f64> = w.iter().map(|x| x.max(0.0)).collect();
        prop_assert!((value - lovasz_extension(&cover, &positive)).abs() <= 1e-9);
    }
}

#[test]
fn extension_agrees_on_indicators() {
    for seed in 0..30 {
        let p = 8 + (seed as usize % 5);
        let f = instance(seed, p);
        for a in Subset::full(p).subsets() {
            assert_eq!(lovasz_extension(&f, &a.indicator(p)), f.eval(a));
        }
    }
}

#[test]
fn pair_identity_and_convexity() {
    for seed in 0..20 {
        let f = instance(seed, 6);
        for a in Subset::full(6).subsets() {
            for b in Subset::full(6).subsets() {
                let w: Vec<f64> = (0..6)
                    .map(|k| (a.contains(k) as u8 + b.contains(k) as u8) as f64)
                    .collect();
                let lhs = lovasz_extension(&f, &w);
                assert_eq!(lhs, f.eval(a.union(b)) + f.eval(a.intersection(b)));
                assert!(lhs <= f.eval(a) + f.eval(b) + 1e-9);
            }
        }
    }
}

#[test]
fn non_submodular_function_breaks_convexity() {
    let sq = FnOracle::new(3, |a: Subset| (a.len() * a.len()) as f64).unwrap();
    let mut violated = false;
    for a in Subset::full(3).subsets() {
        for b in Subset::full(3).subsets() {
            let w: Vec<f64> = (0..3)
                .map(|k| (a.contains(k) as u8 + b.contains(k) as u8) as f64)
                .collect();
            if lovasz_extension(&sq, &w) > sq.eval(a) + sq.eval(b) + 1e-12 {
                violated = true;
            }
        }
    }
    assert!(violated);
}

#[test]
fn minimum_over_the_cube_is_the_minimum_of_f() {
    for seed in 0..20 {
        let f = shifted_instance(seed, 7);
        let t = table(&f);
        let cube = (0..128u64)
            .map(|m| lovasz_extension(&f, &Subset(m).indicator(7)))
            .fold(f64::INFINITY, f64::min);
        assert_eq!(cube, brute_min(&t, 0.0).0);
        let e = Explicit::new(t).unwrap();
        assert_eq!(e.ground_size(), 7);
    }
}
