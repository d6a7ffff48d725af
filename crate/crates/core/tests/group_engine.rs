use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use gassmann_core::catalog::builtin_group;
use gassmann_core::group::{DEFAULT_ELEMENT_CAP, DEFAULT_SUBGROUP_CAP};
use gassmann_core::{generate_elements, parse_cycle_notation, ElemId, GSet, PermGroup, Permutation};
use proptest::prelude::*;

fn catalog(name: &str) -> gassmann_core::catalog::BuiltinGroup {
    builtin_group(name, DEFAULT_ELEMENT_CAP).unwrap()
}

/// Pointwise composition on raw image arrays: `(p ∘ q)(x) = p(q(x))`.
fn compose_raw(p: &[u32], q: &[u32]) -> Vec<u32> {
    q.iter().map(|&x| p[x as usize]).collect()
}

/// Every subgroup of a group given by its element list, found by closing
/// `H ∪ {g}` from the trivial group upward using raw composition only.
fn subgroup_oracle(elements: &[Vec<u32>]) -> BTreeSet<BTreeSet<Vec<u32>>> {
    let identity: Vec<u32> = (0..elements[0].len() as u32).collect();
    let close = |seed: &BTreeSet<Vec<u32>>| {
        let mut set = seed.clone();
        set.insert(identity.clone());
        loop {
            let snapshot: Vec<Vec<u32>> = set.iter().cloned().collect();
            let before = set.len();
            for a in &snapshot {
                for b in &snapshot {
                    set.insert(compose_raw(a, b));
                }
            }
            if set.len() == before {
                return set;
            }
        }
    };
    let trivial = close(&BTreeSet::new());
    let mut found = BTreeSet::from([trivial.clone()]);
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for g in elements {
            if h.contains(g) {
                continue;
            }
            let mut seed = h.clone();
            seed.insert(g.clone());
            let joined = close(&seed);
            if found.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    found
}

#[test]
fn s4_has_thirty_subgroups() {
    let g = catalog("sym:4").group;
    let ours = g.subgroups_dividing(24, DEFAULT_SUBGROUP_CAP).unwrap();
    let raw: Vec<Vec<u32>> = g.elements().iter().map(|p| p.images().to_vec()).collect();
    let oracle = subgroup_oracle(&raw);
    assert_eq!(oracle.len(), 30);
    let ours_sets: BTreeSet<BTreeSet<Vec<u32>>> = ours
        .iter()
        .map(|h| h.members().iter().map(|&x| g.element(x).images().to_vec()).collect())
        .collect();
    assert_eq!(ours.len(), 30);
    assert_eq!(ours_sets, oracle);
}

#[test]
fn subgroup_counts_by_order_match_the_oracle() {
    for name in ["dihedral:6", "alt:4", "frobenius20"] {
        let g = catalog(name).group;
        let raw: Vec<Vec<u32>> = g.elements().iter().map(|p| p.images().to_vec()).collect();
        let oracle = subgroup_oracle(&raw);
        for m in (1..=g.order()).filter(|m| g.order().is_multiple_of(*m)) {
            let ours = g.subgroups_of_order(m, DEFAULT_SUBGROUP_CAP).unwrap();
            let expected = oracle.iter().filter(|h| h.len() == m).count();
            assert_eq!(ours.len(), expected, "{name}, order {m}");
        }
    }
}

#[test]
fn fano_order_24_subgroups_are_point_and_line_stabilizers() {
    let g = catalog("gl3_2");
    let subs = g.group.subgroups_of_order(24, DEFAULT_SUBGROUP_CAP).unwrap();
    assert_eq!(subs.len(), 14);
    let labels = g.group.subgroup_conjugacy_labels(&subs);
    let classes: BTreeSet<usize> = labels.iter().copied().collect();
    assert_eq!(classes.len(), 2);
    for c in &classes {
        assert_eq!(labels.iter().filter(|l| *l == c).count(), 7);
    }
    let natural = g.natural_action();
    let points: BTreeSet<_> = (0..7).map(|x| natural.point_stabilizer(x)).collect();
    // lines of the Fano plane: {a, b, a xor b} on 3-bit labels
    let mut lines = BTreeSet::new();
    for a in 1..8u32 {
        for b in (a + 1)..8 {
            let mut line = vec![a - 1, b - 1, (a ^ b) - 1];
            line.sort_unstable();
            lines.insert(line);
        }
    }
    assert_eq!(lines.len(), 7);
    let line_stabs: BTreeSet<_> = lines.iter().map(|l| natural.set_stabilizer(l)).collect();
    let all: BTreeSet<_> = subs.into_iter().collect();
    let union: BTreeSet<_> = points.union(&line_stabs).cloned().collect();
    assert_eq!(all, union);
    assert!(points.is_disjoint(&line_stabs));
}

#[test]
fn class_data_of_gl3_2_and_psl2_11() {
    for (name, ell, size) in [("gl3_2", 7u32, 24usize), ("psl2_11", 11, 60)] {
        let g = catalog(name);
        let classes: Vec<_> = g
            .group
            .conjugacy_classes()
            .iter()
            .filter(|c| c.element_order == ell)
            .collect();
        assert_eq!(classes.len(), 2, "{name}");
        assert!(classes.iter().all(|c| c.size() == size));
        for (_, h) in &g.subgroups {
            let omega = GSet::coset_action(&g.group, h).unwrap();
            if omega.degree() != ell as usize {
                continue;
            }
            for c in &classes {
                for &m in &c.members {
                    assert!(omega.image(m).is_cycle());
                    assert_eq!(omega.image(m).cycle_type().parts(), &[ell]);
                }
            }
        }
    }
}

#[test]
fn class_sizes_partition_and_divide() {
    for name in ["sym:5", "alt:5", "dihedral:8", "gl3_2", "psl2_11", "frobenius20"] {
        let g = catalog(name).group;
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), g.order());
        assert!(sizes.iter().all(|s| g.order().is_multiple_of(*s)));
        for c in g.conjugacy_classes() {
            assert_eq!(c.members[0], c.rep_id);
            for &m in &c.members {
                assert_eq!(g.element_order(m), c.element_order);
                for gen in g.generators() {
                    let t = g.element_id(gen).unwrap();
                    assert!(c.members.binary_search(&g.conj(m, t)).is_ok());
                }
            }
        }
    }
}

#[test]
fn coset_actions_are_transitive_with_the_right_stabilizer() {
    for name in ["sym:4", "dihedral:6", "gl3_2", "psl2_11"] {
        let g = catalog(name);
        for (_, h) in &g.subgroups {
            let omega = GSet::coset_action(&g.group, h).unwrap();
            assert_eq!(omega.degree(), g.group.order() / h.order());
            assert!(omega.is_transitive());
            assert_eq!(&omega.point_stabilizer(0), h);
            for a in 0..g.group.order() as ElemId {
                for b in [0, 1, (g.group.order() / 2) as ElemId] {
                    let ab = g.group.mul(a, b);
                    for x in 0..omega.degree() as u32 {
                        assert_eq!(omega.act(ab, x), omega.act(a, omega.act(b, x)));
                    }
                }
            }
        }
    }
}

#[test]
fn conjugacy_witnesses_map_subgroups_exactly() {
    let g = catalog("sym:5").group;
    let subs = g.subgroups_of_order(4, DEFAULT_SUBGROUP_CAP).unwrap();
    for a in &subs {
        for b in &subs {
            if let Some(w) = g.are_conjugate_subgroups(a, b).unwrap() {
                assert_eq!(&g.conjugate_subgroup(a, w), b);
            } else {
                assert!((0..120).all(|x| &g.conjugate_subgroup(a, x) != b));
            }
        }
    }
}

#[test]
fn generator_order_does_not_change_the_element_list() {
    let gens = catalog("psl2_11").group.generators().to_vec();
    let reversed: Vec<Permutation> = gens.iter().rev().cloned().collect();
    let a = generate_elements(&gens, DEFAULT_ELEMENT_CAP).unwrap();
    let b = generate_elements(&reversed, DEFAULT_ELEMENT_CAP).unwrap();
    assert_eq!(a.elements(), b.elements());
    assert!(a.elements().windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn normal_closures_are_normal_and_minimal() {
    let g = catalog("sym:4").group;
    let x = parse_cycle_notation("(1 2)(3 4)", 4).unwrap();
    let n = g.normal_closure(std::slice::from_ref(&x)).unwrap();
    assert_eq!(n.order(), 4);
    assert!(g.is_normal(&n));
    let abelian = catalog("cyclic:6").group;
    let r = abelian.elements()[3].clone();
    assert_eq!(
        abelian.normal_closure(std::slice::from_ref(&r)).unwrap(),
        abelian.subgroup_generated_by(&[r]).unwrap()
    );
}

fn s5() -> Arc<PermGroup> {
    static GROUP: OnceLock<Arc<PermGroup>> = OnceLock::new();
    Arc::clone(GROUP.get_or_init(|| catalog("sym:5").group))
}

fn fano_lines() -> &'static GSet {
    static LINES: OnceLock<GSet> = OnceLock::new();
    LINES.get_or_init(|| {
        let g = catalog("gl3_2");
        GSet::coset_action(&g.group, g.subgroup("line_stab").unwrap()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn group_axioms(a in 0u32..120, b in 0u32..120, c in 0u32..120) {
        let g = s5();
        let (pa, pb, pc) = (g.element(a), g.element(b), g.element(c));
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.element(g.mul(a, b)), &pa.compose(pb).unwrap());
        prop_assert_eq!(g.mul(a, g.inv(a)), g.identity_id());
        prop_assert_eq!(g.mul(g.identity_id(), c), c);
        prop_assert_eq!(pc.conjugate_by(pa).unwrap().cycle_type(), pc.cycle_type());
    }

    #[test]
    fn characters_are_class_functions(x in 0u32..168, t in 0u32..168) {
        let lines = fano_lines();
        let y = lines.group().conj(x, t);
        prop_assert_eq!(lines.fixed_count(x), lines.fixed_count(y));
        prop_assert_eq!(lines.image(x).cycle_type(), lines.image(y).cycle_type());
    }
}
