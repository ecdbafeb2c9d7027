mod common;

use std::collections::{BTreeSet, HashMap, HashSet};

use combinatoria::arith::factorial;
use combinatoria::caput::{derangements, enumerate_caput, CaputSpec, Head, HeadMode};
use combinatoria::genealogy::{coordinates, discerptiones_two, personae_count};
use combinatoria::partitions::{self, class_order, partitions_into};
use combinatoria::problems::{self, canonical_rotation, vicinity_classes};
use combinatoria::{compose, count_caput, count_partitions, cycle_types_of, two_part_count, CycleType, Permutation};
use common::{all_perms, conjugate, sn};
use num_bigint::BigUint;
use proptest::prelude::*;

#[test]
fn group_laws_on_s4() {
    let g = sn(4);
    let e = Permutation::identity(4).unwrap();
    for p in &g {
        assert_eq!(&compose(&e, p).unwrap(), p);
        assert_eq!(&compose(p, &e).unwrap(), p);
        assert_eq!(compose(p, &p.inverse()).unwrap(), e);
        assert_eq!(compose(&p.inverse(), p).unwrap(), e);
        for q in &g {
            let pq = compose(p, q).unwrap();
            for r in &g {
                assert_eq!(compose(&pq, r).unwrap(), compose(p, &compose(q, r).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn inverses_in_s5_and_s6() {
    for p in sn(5) {
        assert!(compose(&p, &p.inverse()).unwrap().is_identity());
        let t = p.cycle_type();
        if t.count(2) == 1 && t.count(1) == 3 {
            assert_eq!(p.inverse(), p, "transposition {p}");
        }
        if t.count(5) == 1 {
            assert!(p.fixed_points().is_empty());
        }
    }
    let e6 = Permutation::identity(6).unwrap();
    assert_eq!(e6.inverse(), e6);
}

#[test]
fn cycle_weight_is_degree() {
    for n in 1..=7 {
        for p in sn(n) {
            let t = p.cycle_type();
            let w: usize = t.alpha().iter().enumerate().map(|(i, a)| (i + 1) * a).sum();
            assert_eq!(w, n);
        }
    }
}

#[test]
fn cycles_round_trip_and_fixed_points_in_s6() {
    for p in sn(6) {
        let cycles = p.cycles();
        let covered: BTreeSet<usize> = cycles.iter().flat_map(|c| c.points().iter().copied()).collect();
        assert_eq!(covered.len(), 6);
        assert_eq!(Permutation::from_cycles(6, &cycles).unwrap(), p);
        assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
        assert_eq!(p.fixed_points().len(), p.cycle_type().count(1));
        assert!(cycles
            .windows(2)
            .all(|w| (w[0].len(), w[0].points()[0]) < (w[1].len(), w[1].points()[0])));
        for c in &cycles {
            assert_eq!(c.points()[0], *c.points().iter().min().unwrap());
        }
    }
}

#[test]
fn conjugation_preserves_cycle_type() {
    let g = sn(5);
    for p in g.iter().step_by(7) {
        for h in &g {
            assert_eq!(conjugate(h, p).cycle_type(), p.cycle_type());
        }
    }
}

#[test]
fn class_equation_through_degree_12() {
    for n in 1..=12 {
        let sum: BigUint = cycle_types_of(n).unwrap().iter().map(|t| class_order(t).order).sum();
        assert_eq!(sum, factorial(n), "n = {n}");
        assert_eq!(BigUint::from(cycle_types_of(n).unwrap().len()), count_partitions(n));
    }
}

#[test]
fn class_orders_match_enumeration() {
    for n in 1..=7 {
        let mut tally: HashMap<CycleType, u64> = HashMap::new();
        for p in sn(n) {
            *tally.entry(p.cycle_type()).or_default() += 1;
        }
        let types = cycle_types_of(n).unwrap();
        assert_eq!(types.len(), tally.len());
        for t in types {
            assert_eq!(class_order(&t).order, BigUint::from(tally[&t]), "{t}");
        }
    }
}

#[test]
fn class_order_of_the_worked_shape() {
    let brute = sn(6)
        .iter()
        .filter(|p| p.cycle_type().count(1) == 3 && p.cycle_type().count(3) == 1)
        .count();
    assert_eq!(brute, 40);
}

#[test]
fn partition_count_matches_listing() {
    for n in 0..=40 {
        let listed = partitions::partitions(n).count();
        assert_eq!(count_partitions(n), BigUint::from(listed), "n = {n}");
    }
    assert!(count_partitions(10) < count_partitions(20));
    assert!(count_partitions(20) < count_partitions(100));
}

#[test]
fn partitions_are_reverse_lex_and_valid() {
    for n in 0..=25 {
        let list: Vec<_> = partitions::partitions(n).collect();
        assert!(list.windows(2).all(|w| w[0].parts() > w[1].parts()));
        for p in &list {
            assert_eq!(p.total(), n);
            assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }
}

#[test]
fn two_part_count_matches_listing() {
    for n in 2..=60usize {
        let filtered = partitions::partitions(n).filter(|p| p.len() == 2).count() as u64;
        assert_eq!(two_part_count(n as u64), filtered, "n = {n}");
        assert_eq!(partitions_into(n, 2).count() as u64, filtered);
    }
    for n in 2..=200u64 {
        assert_eq!(discerptiones_two(n), two_part_count(n));
    }
}

#[test]
fn exact_part_streams_match_filter() {
    for n in 0..=18 {
        for k in 0..=n + 1 {
            let want: Vec<_> = partitions::partitions(n).filter(|p| p.len() == k).collect();
            let got: Vec<_> = partitions_into(n, k).collect();
            assert_eq!(got, want, "n={n} k={k}");
        }
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u32 << n).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
}

#[test]
fn loose_exact_bridge() {
    for n in 1..=8 {
        for k in 0..=n {
            let loose = count_caput(&CaputSpec::fixing(n, 1..=k, HeadMode::Loose).unwrap());
            let free = n - k;
            let bridge: BigUint = (0..=free)
                .map(|j| combinatoria::arith::binomial(free, j) * derangements(free - j))
                .sum();
            assert_eq!(loose, bridge, "n={n} k={k}");
        }
    }
    // the six fixed-a arrangements: one fixing everything, three fixing two, two fixing only a
    let spec = CaputSpec::fixing(4, [1], HeadMode::Loose).unwrap();
    let mut by_fixed = [0; 5];
    for p in enumerate_caput(&spec).unwrap() {
        by_fixed[p.fixed_points().len()] += 1;
    }
    assert_eq!(by_fixed, [0, 2, 3, 0, 1]);
}

#[test]
fn setwise_contains_loose() {
    for n in 1..=6 {
        for head in subsets(n) {
            let loose = CaputSpec::fixing(n, head.iter().copied(), HeadMode::Loose).unwrap();
            let set = CaputSpec::fixing(n, head.iter().copied(), HeadMode::Setwise).unwrap();
            for p in enumerate_caput(&loose).unwrap() {
                assert!(set.admits(&p));
            }
            let (l, s) = (count_caput(&loose), count_caput(&set));
            assert!(s >= l);
            assert_eq!(s == l, head.len() <= 1);
        }
    }
}

#[test]
fn caput_enumeration_matches_filter() {
    for n in 1..=6 {
        let all = sn(n);
        for head in subsets(n) {
            for mode in HeadMode::ALL {
                let spec = CaputSpec::fixing(n, head.iter().copied(), mode).unwrap();
                let listed: Vec<Permutation> = enumerate_caput(&spec).unwrap().collect();
                assert!(listed.windows(2).all(|w| w[0].one_line() < w[1].one_line()));
                let mut want: Vec<Permutation> = all.iter().filter(|p| spec.admits(p)).cloned().collect();
                want.sort_by_key(|p| p.one_line());
                assert_eq!(listed, want, "{spec}");
                assert_eq!(count_caput(&spec), BigUint::from(want.len()), "{spec}");
            }
        }
    }
}

#[test]
fn monadic_head_is_vicinity() {
    for n in 1..=10 {
        let monadic = count_caput(&CaputSpec::fixing(n, [1], HeadMode::Loose).unwrap());
        assert_eq!(monadic, problems::vicinity_variations(n).unwrap());
        for k in 0..=n {
            assert_eq!(
                problems::problem7_product(n, k).unwrap(),
                count_caput(&CaputSpec::fixing(n, 1..=k, HeadMode::Loose).unwrap())
            );
        }
    }
    assert_eq!(problems::problem7_product(6, 2).unwrap(), BigUint::from(24u32));
}

#[test]
fn vicinity_triangle() {
    for n in 1..=8 {
        let classes: HashSet<Vec<usize>> = all_perms(n)
            .into_iter()
            .map(|v| {
                (0..n)
                    .map(|r| v[r..].iter().chain(&v[..r]).copied().collect::<Vec<_>>())
                    .min()
                    .unwrap()
            })
            .collect();
        let mut alpha = vec![0; n];
        alpha[n - 1] = 1;
        let brute = BigUint::from(classes.len());
        assert_eq!(problems::vicinity_variations(n).unwrap(), brute);
        assert_eq!(class_order(&CycleType::new(n, &alpha).unwrap()).order, brute);
        assert_eq!(BigUint::from(vicinity_classes(n).unwrap().count()), brute);
    }
}

#[test]
fn vicinity_representatives_cover_every_arrangement_once() {
    for n in 1..=6 {
        let reps: HashSet<Permutation> = vicinity_classes(n).unwrap().collect();
        for r in &reps {
            assert_eq!(r.apply(1), 1);
            assert_eq!(&canonical_rotation(r), r);
        }
        for p in sn(n) {
            assert!(reps.contains(&canonical_rotation(&p)));
        }
    }
}

#[test]
fn complexions_match_subsets() {
    for n in 0..=12 {
        let mut by_size = vec![0u64; n + 2];
        for m in 0..1u32 << n {
            by_size[m.count_ones() as usize] += 1;
        }
        for (k, &c) in by_size.iter().enumerate() {
            assert_eq!(problems::complexions(n, k), BigUint::from(c));
        }
    }
    for n in 1..=20 {
        let sum: BigUint = (1..=n).map(|k| problems::complexions(n, k)).sum();
        assert_eq!(problems::complexiones_simpliciter(n, false), sum);
        assert_eq!(sum, (BigUint::from(1u32) << n) - 1u32);
    }
}

#[test]
fn genealogy_counts() {
    for n in 0..=15 {
        let list = coordinates(n).unwrap();
        assert_eq!(BigUint::from(list.len()), personae_count(n));
        let set: HashSet<_> = list.iter().copied().collect();
        assert_eq!(set.len(), list.len());
        for c in &list {
            if c.antecedens != c.sequens {
                assert_ne!(c.swapped(), *c);
            }
        }
    }
}

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

// head with arbitrary distinct contents
fn head_spec(max: usize) -> impl Strategy<Value = CaputSpec> {
    (1..=max)
        .prop_flat_map(|n| {
            (
                Just(n),
                Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
                Just((1..=n).collect::<Vec<_>>()).prop_shuffle(),
                0..=n,
                prop_oneof![Just(HeadMode::Loose), Just(HeadMode::Exact), Just(HeadMode::Setwise)],
            )
        })
        .prop_map(|(n, pos, occ, k, mode)| {
            let head = Head::new(n, pos.into_iter().zip(occ).take(k)).unwrap();
            CaputSpec::new(head, mode).unwrap()
        })
}

proptest! {
    #[test]
    fn textual_forms_round_trip(p in permutation(14)) {
        prop_assert_eq!(p.to_one_line_string().parse::<Permutation>().unwrap(), p.clone());
        prop_assert_eq!(Permutation::parse(&p.to_string(), Some(p.degree())).unwrap(), p);
    }

    #[test]
    fn inverse_undoes(p in permutation(20)) {
        prop_assert!(compose(&p, &p.inverse()).unwrap().is_identity());
        prop_assert!(compose(&p.inverse(), &p).unwrap().is_identity());
        prop_assert_eq!(p.inverse().cycle_type(), p.cycle_type());
    }

    #[test]
    fn any_head_count_matches_filter(spec in head_spec(6)) {
        let brute = sn(spec.degree()).iter().filter(|p| spec.admits(p)).count();
        prop_assert_eq!(count_caput(&spec), BigUint::from(brute));
        prop_assert_eq!(enumerate_caput(&spec).unwrap().count(), brute);
    }

    #[test]
    fn derangement_recurrence_agrees(m in 0usize..80) {
        prop_assert_eq!(derangements(m), combinatoria::caput::derangements_inclusion_exclusion(m));
    }
}
