use proptest::prelude::*;

use perfcode::group::p_part;
use perfcode::perfect::{basic_criterion, check_witness, is_perfect_code, DecisionPath};
use perfcode::{Group, GroupSpec, Permutation};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// A group on at most 5 points (order at most 120) and a subgroup of it.
fn group_and_subgroup() -> impl Strategy<Value = (Group, Group)> {
    (2usize..=5)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(perm(n), 1..=3),
                prop::collection::vec(0usize..1000, 0..=2),
                Just(n),
            )
        })
        .prop_map(|(gens, picks, n)| {
            let g = Group::closure(n, &gens).unwrap();
            let seed: Vec<Permutation> = picks
                .iter()
                .map(|&i| g.elements()[i % g.order()].clone())
                .collect();
            let h = g.generated_subgroup(&seed).unwrap();
            (g, h)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn permutation_laws(a in perm(6), b in perm(6), c in perm(6)) {
        let id = Permutation::identity(6);
        prop_assert_eq!(&(&(&a * &b) * &c), &(&a * &(&b * &c)));
        prop_assert_eq!(&(&a * &a.inverse()), &id);
        prop_assert_eq!(&(&id * &a), &a);
        prop_assert_eq!(a.pow(a.order()), id);
    }

    #[test]
    fn cycle_notation_round_trip(a in perm(7)) {
        prop_assert_eq!(Permutation::parse(&a.to_string(), 7).unwrap(), a);
    }

    #[test]
    fn explicit_spec_round_trip(a in perm(5), b in perm(5)) {
        let spec = GroupSpec::Explicit { degree: 5, generators: vec![a, b] };
        prop_assert_eq!(spec.to_string().parse::<GroupSpec>().unwrap(), spec);
    }

    #[test]
    fn group_axioms((g, _) in group_and_subgroup()) {
        prop_assert!(g.contains(&g.identity()));
        prop_assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        prop_assert!(g.generators().iter().all(|x| g.contains(x)));
        for x in g.elements().iter().step_by(7) {
            prop_assert!(g.contains(&x.inverse()));
            for y in g.elements().iter().step_by(5) {
                prop_assert!(g.contains(&(x * y)));
            }
        }
    }

    #[test]
    fn cosets_partition((g, h) in group_and_subgroup()) {
        prop_assert!(h.is_subgroup_of(&g));
        prop_assert_eq!(g.order() % h.order(), 0);
        let cosets = g.left_cosets(&h);
        prop_assert_eq!(cosets.len(), g.index(&h));
        let mut all: Vec<Permutation> = cosets.iter().flatten().cloned().collect();
        prop_assert!(cosets.iter().all(|c| c.len() == h.order()));
        all.sort();
        all.dedup();
        prop_assert_eq!(all.as_slice(), g.elements());
    }

    #[test]
    fn normalizer_contains_subgroup((g, h) in group_and_subgroup()) {
        let n = g.normalizer(&h);
        prop_assert!(h.is_subgroup_of(&n));
        prop_assert!(h.is_normal_in(&n));
        prop_assert!(n.is_subgroup_of(&g));
    }

    #[test]
    fn sylow_subgroups_are_conjugate((g, h) in group_and_subgroup()) {
        for p in [2u64, 3, 5] {
            let s = g.sylow(p).unwrap();
            prop_assert_eq!(s.order() as u64, p_part(g.order() as u64, p));
            let t = g.sylow_containing(p, &h.sylow(p).unwrap()).unwrap();
            prop_assert!(g.find_conjugator(&s, &t).is_some());
        }
    }

    #[test]
    fn report_invariants((g, h) in group_and_subgroup()) {
        let basic = basic_criterion(&g, &h);
        let fast = is_perfect_code(&g, &h);
        prop_assert_eq!(basic.is_perfect_code, fast.is_perfect_code);
        for r in [&basic, &fast] {
            prop_assert_eq!(r.witness.is_none(), r.is_perfect_code);
            if let Some(x) = &r.witness {
                prop_assert!(check_witness(&g, &h, x).holds());
            }
        }
        if fast.path == DecisionPath::NgqReduction {
            let t: Vec<usize> = fast.reduction_trace.iter().map(|&(_, k)| k).collect();
            prop_assert_eq!(h.order() % t[0], 0);
            prop_assert_eq!(t[1] % t[2], 0);
            prop_assert_eq!(t[2] % t[0], 0);
        } else {
            prop_assert!(h.order() % 2 == 1 || g.index(&h) % 2 == 1);
        }
    }
}
