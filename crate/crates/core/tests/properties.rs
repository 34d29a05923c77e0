use proptest::prelude::*;
use superbbw::bbw::{
    bbw_verdict, chamber, check_consistency, even_reflection_step, is_typical, odd_adjacency_step,
    Chamber, Characteristic, EvenStep, OddStep,
};
use superbbw::eulerchar::{check_odd_invariance, chi_character};
use superbbw::gl21::{classify, Gl21System};
use superbbw::superroots::{dot_action, walk_to_standard};
use superbbw::{LaurentPoly, Perm, SuperRootData, Superdim, Weight};

fn poly(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, nvars), -4i64..=4), 0..5).prop_map(
        move |terms| {
            terms
                .into_iter()
                .fold(LaurentPoly::zero(nvars), |acc, (e, c)| {
                    &acc + &LaurentPoly::monomial(Weight::from_ints(&e), c)
                })
        },
    )
}

fn system(m: usize, n: usize) -> impl Strategy<Value = SuperRootData> {
    let dim = Superdim::new(m, n).unwrap();
    let all = Perm::all(m + n);
    (0..all.len()).prop_map(move |i| SuperRootData::new(dim, all[i].clone()).unwrap())
}

fn weight(len: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-5i64..=5, len).prop_map(|c| Weight::from_ints(&c))
}

fn characteristic() -> impl Strategy<Value = Characteristic> {
    prop::sample::select(vec![0u64, 2, 3, 5]).prop_map(|p| Characteristic::new(p).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms(f in poly(3), g in poly(3), h in poly(3)) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn exact_division_round_trips(f in poly(2), g in poly(2)) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn odd_reflect_moves_rho_by_the_root(s in system(2, 2)) {
        for position in s.odd_simple_positions() {
            let t = s.odd_reflect(position).unwrap();
            let alpha = s.simple_root(position).unwrap().to_weight(4);
            prop_assert_eq!(t.rho(), &(s.rho() + &alpha));
            prop_assert_eq!(t.even_positive_set(), s.even_positive_set());
            prop_assert_eq!(&t.odd_reflect(position).unwrap(), &s);
        }
    }

    #[test]
    fn walks_end_standard(s in system(2, 2)) {
        let walk = walk_to_standard(&s).unwrap();
        prop_assert!(walk.end.is_standard());
        prop_assert_eq!(walk.delta_rho, walk.end.rho() - s.rho());
    }

    #[test]
    fn dot_action_is_a_group_action(s in system(2, 2), lam in weight(4)) {
        for u in s.weyl_group() {
            for v in s.weyl_group() {
                let left = dot_action(&u.compose(&v), &lam, &s).unwrap();
                let right = dot_action(&u, &dot_action(&v, &lam, &s).unwrap(), &s).unwrap();
                prop_assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn chi_is_invariant_across_odd_reflections(s in system(2, 2), lam in weight(4)) {
        for position in s.odd_simple_positions() {
            prop_assert!(check_odd_invariance(&lam, &s, position).unwrap());
        }
    }

    #[test]
    fn chi_is_alternating_under_dot_action(s in system(2, 1), lam in weight(3)) {
        let base = chi_character(&lam, &s).unwrap().poly;
        for u in s.weyl_group() {
            let moved = chi_character(&dot_action(&u, &lam, &s).unwrap(), &s).unwrap().poly;
            let expect = if u.sign() < 0 { -&base } else { base.clone() };
            prop_assert_eq!(moved, expect);
        }
    }

    #[test]
    fn odd_steps_preserve_typicality(s in system(2, 2), lam in weight(4), p in characteristic()) {
        prop_assume!(is_typical(&lam, &s, p).unwrap());
        for position in s.odd_simple_positions() {
            if let OddStep::Transported { lambda, system, .. } = odd_adjacency_step(&lam, 0, position, &s, p).unwrap() {
                prop_assert!(is_typical(&lambda, &system, p).unwrap());
                prop_assert_eq!(chamber(&lambda, &system, p).unwrap(), chamber(&lam, &s, p).unwrap());
            }
        }
    }

    #[test]
    fn generic_verdicts_agree(s in system(2, 2), lam in weight(4), p in characteristic()) {
        check_consistency(&lam, 0, &s, p).unwrap();
    }

    #[test]
    fn degree_shifts_raise_the_degree_by_one(s in system(3, 1), lam in weight(4)) {
        let p = Characteristic::ZERO;
        let before = bbw_verdict(&lam, 0, &s, p).unwrap();
        for position in s.even_simple_positions() {
            if let EvenStep::DegreeShift { target, .. } = even_reflection_step(&lam, 0, position, &s, p).unwrap() {
                let after = bbw_verdict(&target, 0, &s, p).unwrap();
                if let (Some(a), Some(b)) = (after.degree, before.degree) {
                    prop_assert_eq!(a, b + 1);
                }
            }
        }
    }

    #[test]
    fn interior_weights_are_never_all_vanish(s in system(2, 1), lam in weight(3), p in characteristic()) {
        if chamber(&lam, &s, p).unwrap() == Chamber::InteriorC {
            let v = bbw_verdict(&lam, 0, &s, p).unwrap();
            prop_assert_ne!(v.degree.unwrap_or(0), 1);
        }
    }

    #[test]
    fn gl21_answers_are_characteristic_free_off_the_family(lam in weight(3), p in characteristic()) {
        for system in Gl21System::ALL {
            let here = classify(&lam, 0, system, p).unwrap();
            let zero = classify(&lam, 0, system, Characteristic::ZERO).unwrap();
            if here.regime != 0 || system == Gl21System::W132 {
                prop_assert_eq!(here.summary(), zero.summary());
            }
        }
    }
}
