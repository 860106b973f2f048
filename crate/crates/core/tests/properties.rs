use std::collections::{HashSet, VecDeque};

use hyperdual::dualics::{
    bruteforce_minimal_normal, operation_kernel, OperationKind, OperationSpec,
};
use hyperdual::fp::Letter;
use hyperdual::{
    covers, describe, marked_iso, parse_word, todd_coxeter, OrientedHypermap, PermGroup,
    Permutation, Presentation, Word,
};
use proptest::prelude::*;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

fn perms(max_degree: usize, count: usize) -> impl Strategy<Value = Vec<Permutation>> {
    (1..=max_degree).prop_flat_map(move |n| prop::collection::vec(perm(n), count))
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..2usize, any::<bool>()), 0..max_len).prop_map(|letters| {
        Word::new(
            letters
                .into_iter()
                .map(|(generator, inverse)| Letter { generator, inverse }),
        )
    })
}

/// All elements of `⟨gens⟩` by breadth-first closure.
fn closure(gens: &[Permutation]) -> HashSet<Permutation> {
    let identity = Permutation::identity(gens[0].degree());
    let mut seen = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let next = &g * s;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

fn names() -> Vec<String> {
    vec!["x".into(), "y".into()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn compose_is_associative(ps in perms(9, 3)) {
        let (a, b, c) = (&ps[0], &ps[1], &ps[2]);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert!((a * &a.inverse()).is_identity());
        prop_assert_eq!(a.compose(b).unwrap().image(1), b.image(a.image(1)));
    }

    #[test]
    fn cycle_notation_round_trips(p in (1..12usize).prop_flat_map(perm)) {
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, p.degree()).unwrap(), p.clone());
        prop_assert!(p.pow(p.order() as i64).is_identity());
        prop_assert_eq!(p.pow(-1), p.inverse());
    }

    #[test]
    fn order_matches_closure(gens in perms(6, 2)) {
        let g = PermGroup::new(gens.clone()).unwrap();
        let elements = closure(&gens);
        prop_assert_eq!(g.order(), elements.len() as u128);
        prop_assert_eq!(g.orbit_sizes().iter().map(|&s| s as u128).product::<u128>(), g.order());
        for s in g.strong_generators() {
            prop_assert!(elements.contains(s));
        }
    }

    #[test]
    fn membership_matches_closure(gens in perms(6, 2), probe in perm(6)) {
        let degree = gens[0].degree();
        let g = PermGroup::new(gens.clone()).unwrap();
        let elements = closure(&gens);
        let probe = Permutation::from_images(
            &probe.images().into_iter().filter(|&i| i <= degree).collect::<Vec<_>>(),
        ).unwrap();
        prop_assert_eq!(g.contains(&probe).unwrap(), elements.contains(&probe));
    }

    #[test]
    fn words_in_generators_are_members(gens in perms(8, 2), w in word(30)) {
        let g = PermGroup::new(gens.clone()).unwrap();
        prop_assert!(g.contains(&w.evaluate(&gens)).unwrap());
    }

    #[test]
    fn normal_closure_is_normal(gens in perms(7, 2), w in word(6)) {
        let g = PermGroup::new(gens.clone()).unwrap();
        let seed = w.evaluate(&gens);
        let n = g.normal_closure(std::slice::from_ref(&seed)).unwrap();
        prop_assert!(n.contains(&seed).unwrap());
        prop_assert!(n.is_subgroup_of(&g));
        prop_assert!(n.is_normal_in(&g));
        for s in n.generators() {
            for t in &gens {
                prop_assert!(n.contains(&s.conjugate_by(t)).unwrap());
            }
        }
        prop_assert_eq!(g.order() % n.order(), 0);
    }

    #[test]
    fn coset_action_is_a_homomorphism(gens in perms(6, 2), w in word(5), a in word(8), b in word(8)) {
        let g = PermGroup::new(gens.clone()).unwrap();
        let h = PermGroup::new(vec![w.evaluate(&gens)]).unwrap();
        let space = g.cosets(&h).unwrap();
        prop_assert_eq!(space.index() as u128, g.order() / h.order());
        let (ea, eb) = (a.evaluate(&gens), b.evaluate(&gens));
        prop_assert_eq!(space.act(&(&ea * &eb)), &space.act(&ea) * &space.act(&eb));
        for s in h.generators() {
            prop_assert_eq!(space.act(s).image(1), 1);
        }
    }

    #[test]
    fn pointwise_stabilizer_matches_closure(gens in perms(6, 2), k in 1..3usize) {
        let degree = gens[0].degree();
        let points: Vec<usize> = (1..=k.min(degree)).collect();
        let g = PermGroup::new(gens.clone()).unwrap();
        let stab = g.pointwise_stabilizer(&points).unwrap();
        let fixing = closure(&gens).into_iter().filter(|p| points.iter().all(|&q| p.image(q) == q)).count();
        prop_assert_eq!(stab.order(), fixing as u128);
    }

    #[test]
    fn abelian_invariants_divide(lengths in prop::collection::vec(1..7usize, 1..4)) {
        let degree: usize = lengths.iter().sum();
        let mut start = 1;
        let gens: Vec<Permutation> = lengths.iter().map(|&l| {
            let c = Permutation::from_cycles(&[(start..start + l).collect()], degree).unwrap();
            start += l;
            c
        }).collect();
        let d = describe(&PermGroup::new(gens).unwrap()).unwrap();
        prop_assert!(d.is_abelian);
        prop_assert_eq!(d.abelian_invariants.iter().product::<u64>() as u128, d.order);
        for w in d.abelian_invariants.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        prop_assert!(d.abelian_invariants.iter().all(|&i| i > 1));
        prop_assert_eq!(d.exponent, d.abelian_invariants.last().copied().unwrap_or(1));
        prop_assert_eq!(d.is_cyclic, d.abelian_invariants.len() <= 1);
    }

    #[test]
    fn words_reduce_and_round_trip(a in word(20), b in word(20), gens in perms(6, 2)) {
        prop_assert!(a.concat(&a.inverse()).is_empty());
        let shown = a.to_string_with(&names());
        if !a.is_empty() {
            prop_assert_eq!(parse_word(&shown, &names()).unwrap(), a.clone());
        }
        prop_assert_eq!(a.substitute(&[Word::generator(0), Word::generator(1)]), a.clone());
        prop_assert_eq!(a.concat(&b).evaluate(&gens), &a.evaluate(&gens) * &b.evaluate(&gens));
    }

    #[test]
    fn abelian_presentations_enumerate(p in 1..9i64, q in 1..9i64) {
        let x = Word::generator(0);
        let y = Word::generator(1);
        let commutator = x.concat(&y).concat(&x.inverse()).concat(&y.inverse());
        let pres = Presentation::new(names(), vec![x.pow(p), y.pow(q), commutator]).unwrap();
        prop_assert_eq!(todd_coxeter(&pres, &[], 10_000).unwrap().index as i64, p * q);
        prop_assert_eq!(todd_coxeter(&pres, std::slice::from_ref(&x), 10_000).unwrap().index as i64, q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_invariants(ps in perms(6, 2)) {
        let h = OrientedHypermap::from_marks(ps[0].clone(), ps[1].clone()).unwrap();
        prop_assert!(h.euler_characteristic().is_ok());
        prop_assert!(covers(&h, &OrientedHypermap::one_dart()).unwrap());
        prop_assert!(marked_iso(&h, &h).unwrap());
        for kind in OperationKind::NAMED {
            let op = kind.spec().unwrap();
            prop_assert!(op.is_involutory());
            let r = operation_kernel(&h, &op).unwrap();
            prop_assert_eq!(r.index * r.coindex, h.order());
            prop_assert!(r.kernel.is_normal_in(h.group()));
            // the answer does not depend on the faithful action chosen
            let regular = operation_kernel(&h.regular_form().unwrap(), &op).unwrap();
            prop_assert_eq!(regular.index, r.index);
            if h.order() <= 24 {
                prop_assert_eq!(bruteforce_minimal_normal(&h, &op).unwrap(), r.index);
            }
        }
    }

    #[test]
    fn custom_assignment_kernels(ps in perms(5, 2), u in word(4), v in word(4)) {
        let h = OrientedHypermap::from_marks(ps[0].clone(), ps[1].clone()).unwrap();
        let op = OperationSpec::custom(u, v);
        match operation_kernel(&h, &op) {
            Ok(r) => {
                prop_assert_eq!(r.index * r.coindex, h.order());
                prop_assert!(r.kernel.is_normal_in(h.group()));
            }
            Err(e) => prop_assert_eq!(e, hyperdual::Error::ImagesDoNotGenerate),
        }
    }
}
