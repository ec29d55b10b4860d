use fubi::classes::{build_partition, ClassPartition};
use fubi::graphs::{passes_ff, ForestFilter};
use fubi::indicator::{expand, read_aif, Aif};
use fubi::sieve::{apc_violation, leq, ApcMode};
use fubi::signature::{default_commutative, DualSignature};
use fubi::symmetry::{act, group_elements, induced_class_permutation, InducedAction};
use proptest::prelude::*;

const CASES: [(usize, usize); 7] = [(2, 0), (2, 1), (3, 0), (3, 1), (4, 0), (4, 1), (4, 2)];

fn setup(case: usize) -> (ClassPartition, InducedAction) {
    let (n, m) = CASES[case];
    let sig = DualSignature::canonical(n, m).unwrap();
    let part = build_partition(&sig, default_commutative(n, m));
    let action = InducedAction::new(&part).unwrap();
    (part, action)
}

fn pattern(len: usize, raw: u64) -> Aif {
    Aif::new(raw & ((1u64 << len) - 1), len)
}

proptest! {
    #[test]
    fn canonical_form_is_orbit_invariant(case in 0..CASES.len(), raw in any::<u64>(), pick in any::<usize>()) {
        let (part, action) = setup(case);
        let a = pattern(part.len(), raw);
        let c = action.canonicalize(&a);
        prop_assert!(c <= a);
        prop_assert!(action.is_canonical(&c));
        prop_assert!(action.orbit(&a).contains(&c));
        if !action.perms.is_empty() {
            let p = &action.perms[pick % action.perms.len()];
            prop_assert_eq!(action.canonicalize(&act(p, &a)), c);
        }
    }

    #[test]
    fn expand_round_trips(case in 0..CASES.len(), raw in any::<u64>()) {
        let (part, _) = setup(case);
        let a = pattern(part.len(), raw);
        let t = expand(&a, &part).unwrap();
        prop_assert!(t.has_forced_pattern());
        prop_assert_eq!(read_aif(&t, &part).unwrap(), a);
        for class in &part.classes {
            let v = t.at(class[0]);
            prop_assert!(class.iter().all(|&x| t.at(x) == v));
        }
    }

    #[test]
    fn relabeling_matches_class_action(case in 0..CASES.len(), raw in any::<u64>(), pick in any::<usize>()) {
        let (part, _) = setup(case);
        let gs = group_elements(&part.signature);
        let g = &gs[pick % gs.len()];
        let p = induced_class_permutation(g, &part).unwrap();
        let a = pattern(part.len(), raw);
        let moved = expand(&a, &part).unwrap().relabel(&g.perm);
        prop_assert_eq!(moved, expand(&act(&p, &a), &part).unwrap());
    }

    #[test]
    fn forest_stage_is_invariant(case in 0..CASES.len(), raw in any::<u64>()) {
        let (part, action) = setup(case);
        let a = pattern(part.len(), raw);
        let filter = ForestFilter::new(&part, true);
        let mut ds = filter.scratch();
        let here = filter.check(&a, &mut ds);
        prop_assert_eq!(here, passes_ff(&expand(&a, &part).unwrap()));
        for p in &action.perms {
            prop_assert_eq!(filter.check(&act(p, &a), &mut ds), here);
        }
    }

    #[test]
    fn leq_is_antisymmetric(case in 0..CASES.len(), raw in any::<u64>()) {
        let (part, _) = setup(case);
        let t = expand(&pattern(part.len(), raw), &part).unwrap();
        for i in 1..t.dim() {
            for j in 1..t.dim() {
                if i != j {
                    prop_assert!(!(leq(&t, i, j) && leq(&t, j, i)));
                }
            }
        }
    }

    #[test]
    fn apc_is_invariant(case in 0..CASES.len(), raw in any::<u64>()) {
        let (part, action) = setup(case);
        let a = pattern(part.len(), raw);
        for mode in [ApcMode::Cancel, ApcMode::Plain] {
            let here = apc_violation(&expand(&a, &part).unwrap(), &part, mode).is_some();
            for p in &action.perms {
                let there = apc_violation(&expand(&act(p, &a), &part).unwrap(), &part, mode).is_some();
                prop_assert_eq!(there, here);
            }
        }
    }
}
