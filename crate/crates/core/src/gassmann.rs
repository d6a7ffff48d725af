//! Permutation characters, Gassmann triples, and the cycle-type criteria
//! that force a Gassmann triple to be trivial.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{ElemId, GSet, PermGroup, Subgroup};
use crate::perm::{CycleType, Permutation};
use crate::util::{gcd, is_prime};

/// Fixed-point counts of a G-set, one value per conjugacy class of the
/// acting group (in the group's class order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermCharacter {
    pub class_reps: Vec<Permutation>,
    pub values: Vec<usize>,
}

pub fn perm_character(omega: &GSet) -> Result<PermCharacter> {
    let group = omega.group();
    let mut values = Vec::with_capacity(group.conjugacy_classes().len());
    for class in group.conjugacy_classes() {
        let value = omega.fixed_count(class.rep_id);
        if class.members.iter().any(|&m| omega.fixed_count(m) != value) {
            return Err(Error::Inconsistent("fixed-point count is not a class function".into()));
        }
        values.push(value);
    }
    Ok(PermCharacter {
        class_reps: group
            .conjugacy_classes()
            .iter()
            .map(|c| c.representative.clone())
            .collect(),
        values,
    })
}

/// `|H ∩ C|` for each conjugacy class `C` of `g`.
pub fn class_intersection_profile(g: &PermGroup, h: &Subgroup) -> Result<Vec<usize>> {
    g.check_subgroup(h)?;
    Ok(g.class_intersection_profile(h))
}

pub fn is_gassmann_equivalent(a: &GSet, b: &GSet) -> Result<bool> {
    if !a.same_group(b) {
        return Err(Error::DifferentGroups);
    }
    Ok(perm_character(a)? == perm_character(b)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GassmannReport {
    /// The subgroups meet every conjugacy class equally often.
    pub gassmann: bool,
    /// The subgroups are conjugate.
    pub trivial: bool,
    /// Some `g` with `g⁻¹ H₁ g = H₂`.
    pub conjugating_witness: Option<Permutation>,
    pub intersection_profiles: [Vec<usize>; 2],
}

/// Decides whether `(G; H₁, H₂)` is a Gassmann triple and whether it is
/// trivial, checking that the intersection profiles, the coset-action
/// characters and the per-element fixed counts all agree.
pub fn is_gassmann_triple(g: &Arc<PermGroup>, h1: &Subgroup, h2: &Subgroup) -> Result<GassmannReport> {
    let p1 = class_intersection_profile(g, h1)?;
    let p2 = class_intersection_profile(g, h2)?;
    let by_profile = p1 == p2;
    let o1 = GSet::coset_action(g, h1)?;
    let o2 = GSet::coset_action(g, h2)?;
    let by_character = perm_character(&o1)? == perm_character(&o2)?;
    let by_elements =
        o1.degree() == o2.degree() && (0..g.order() as ElemId).all(|x| o1.fixed_count(x) == o2.fixed_count(x));
    if by_profile != by_character || by_character != by_elements {
        return Err(Error::Inconsistent(format!(
            "profiles {by_profile}, characters {by_character}, fixed counts {by_elements}"
        )));
    }
    let witness = if h1.order() == h2.order() {
        g.are_conjugate_subgroups(h1, h2)?
    } else {
        None
    };
    Ok(GassmannReport {
        gassmann: by_profile,
        trivial: witness.is_some(),
        conjugating_witness: witness.map(|w| g.element(w).clone()),
        intersection_profiles: [p1, p2],
    })
}

/// A nontrivial Gassmann triple, one per unordered pair of subgroup
/// conjugacy classes.
#[derive(Clone, Debug)]
pub struct NontrivialTriple {
    /// Canonical least member of each conjugacy class.
    pub h1: Subgroup,
    pub h2: Subgroup,
    pub class_sizes: (usize, usize),
    pub report: GassmannReport,
}

/// All nontrivial Gassmann triples `(G; H₁, H₂)` with `[G : Hᵢ] = index`,
/// listed once per unordered pair of conjugacy classes of subgroups.
pub fn enumerate_gassmann_triples(g: &Arc<PermGroup>, index: usize, cap: usize) -> Result<Vec<NontrivialTriple>> {
    let order = g.order();
    if index == 0 || !order.is_multiple_of(index) {
        return Err(Error::NotADivisor { m: index, order });
    }
    let subgroups = g.subgroups_of_order(order / index, cap)?;
    let labels = g.subgroup_conjugacy_labels(&subgroups);
    // class label -> (representative position, class size)
    let mut classes: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (i, &l) in labels.iter().enumerate() {
        classes.entry(l).or_insert((i, 0)).1 += 1;
    }
    let mut by_profile: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
    for &(rep, size) in classes.values() {
        by_profile
            .entry(g.class_intersection_profile(&subgroups[rep]))
            .or_default()
            .push((rep, size));
    }
    let mut out = Vec::new();
    for reps in by_profile.values() {
        for (i, &(a, size_a)) in reps.iter().enumerate() {
            for &(b, size_b) in &reps[i + 1..] {
                let report = is_gassmann_triple(g, &subgroups[a], &subgroups[b])?;
                if !report.gassmann || report.trivial {
                    return Err(Error::Inconsistent("profile bucket produced a trivial pair".into()));
                }
                out.push(NontrivialTriple {
                    h1: subgroups[a].clone(),
                    h2: subgroups[b].clone(),
                    class_sizes: (size_a, size_b),
                    report,
                });
            }
        }
    }
    out.sort_by(|x, y| (&x.h1, &x.h2).cmp(&(&y.h1, &y.h2)));
    Ok(out)
}

/// True when every subgroup almost conjugate to `h` is conjugate to it,
/// i.e. the transitive G-set `G/H` is Gassmann solitary.
pub fn is_solitary_bruteforce(g: &Arc<PermGroup>, h: &Subgroup, cap: usize) -> Result<bool> {
    g.check_subgroup(h)?;
    let profile = g.class_intersection_profile(h);
    let candidates: Vec<Subgroup> = g
        .subgroups_of_order(h.order(), cap)?
        .into_iter()
        .filter(|s| g.class_intersection_profile(s) == profile)
        .collect();
    let labels = g.subgroup_conjugacy_labels(&candidates);
    let own = candidates
        .iter()
        .position(|s| s == h)
        .ok_or_else(|| Error::Inconsistent("subgroup missing from its own order class".into()))?;
    let reference = perm_character(&GSet::coset_action(g, h)?)?;
    let mut checked = vec![false; candidates.len()];
    for (i, s) in candidates.iter().enumerate() {
        if checked[labels[i]] {
            continue;
        }
        checked[labels[i]] = true;
        if perm_character(&GSet::coset_action(g, s)?)? != reference {
            return Err(Error::Inconsistent("equal profiles but different characters".into()));
        }
    }
    Ok(labels.iter().all(|&l| l == labels[own]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Condition {
    /// Type `(1, 2, …, 2)`: a point involution.
    I,
    /// A part `ℓ > 1` coprime to the degree and to every other part.
    II,
    /// A prime part `ℓ` dividing no other part and not excluded.
    III,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionWitness {
    pub condition: Condition,
    pub element: Permutation,
    pub cycle_type: CycleType,
    pub ell: Option<u32>,
}

/// Every condition the cycle type satisfies on a G-set of degree `n`, with
/// the designated part for (ii) and (iii), in order (i), (ii) by `ℓ`,
/// (iii) by `ℓ`.
pub fn satisfied_conditions(ct: &CycleType, n: usize) -> Vec<(Condition, Option<u32>)> {
    let parts = ct.parts();
    let mut out = Vec::new();
    if ct.count(1) == 1 && parts.iter().all(|&p| p <= 2) {
        out.push((Condition::I, None));
    }
    let mut distinct: Vec<u32> = parts.iter().copied().filter(|&p| p > 1).collect();
    distinct.dedup();
    for &ell in &distinct {
        // A repeated part is among the "other" parts and shares a factor.
        if ct.count(ell) > 1 || parts.len() == 1 {
            continue;
        }
        let others_coprime = parts.iter().all(|&a| a == ell || gcd(ell as u64, a as u64) == 1);
        if others_coprime && gcd(ell as u64, n as u64) == 1 {
            out.push((Condition::II, Some(ell)));
        }
    }
    for &ell in &distinct {
        if !is_prime(ell as u64) || ct.count(ell) > 1 {
            continue;
        }
        let divides_other = parts.iter().any(|&a| a != ell && a % ell == 0);
        if !divides_other && excluded_prime(ell as u64).ok().flatten().is_none() {
            out.push((Condition::III, Some(ell)));
        }
    }
    out
}

/// Scans the action for an element whose cycle type meets one of the three
/// conditions. Conditions are tried in order (i), (ii), (iii); within a
/// condition, elements are scanned in canonical order.
pub fn theorem1_criterion(omega: &GSet) -> Result<Option<CriterionWitness>> {
    if !omega.is_transitive() {
        return Err(Error::Intransitive);
    }
    let n = omega.degree();
    let group = omega.group();
    let hits: Vec<Vec<(Condition, Option<u32>)>> = (0..group.order() as ElemId)
        .map(|e| satisfied_conditions(&omega.image(e).cycle_type(), n))
        .collect();
    for condition in [Condition::I, Condition::II, Condition::III] {
        for (e, conds) in hits.iter().enumerate() {
            let Some(&(c, ell)) = conds.iter().find(|(c, _)| *c == condition) else {
                continue;
            };
            let image = omega.image(e as ElemId);
            if let Some(ell) = ell {
                check_power_reduction(image, ell)?;
            }
            return Ok(Some(CriterionWitness {
                condition: c,
                element: group.element(e as ElemId).clone(),
                cycle_type: image.cycle_type(),
                ell,
            }));
        }
    }
    Ok(None)
}

/// The power of `p` by the lcm of the parts other than `ell` must be a
/// single `ell`-cycle.
fn check_power_reduction(p: &Permutation, ell: u32) -> Result<()> {
    let others = CycleType::new(
        p.cycle_type()
            .parts()
            .iter()
            .copied()
            .filter(|&a| a != ell)
            .chain(core::iter::once(1))
            .collect(),
    )
    .expect("nonempty");
    let reduced = p.pow(others.lcm() as i64);
    let ct = reduced.cycle_type();
    if !(reduced.is_cycle() && ct.parts().last() == Some(&ell)) {
        return Err(Error::Inconsistent(format!("power reduction of {p} gave type {ct}")));
    }
    Ok(())
}

/// Why a prime is excluded from condition (iii).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exclusion {
    Eleven,
    /// `ℓ = (q^k − 1)/(q − 1)` with `q` a prime power and `k ≥ 3`.
    ProjectiveCount {
        q: u64,
        k: u32,
    },
}

/// `Some` when `ell` is 11 or `(q^k − 1)/(q − 1)` for a prime power `q` and
/// `k ≥ 3`; the witness uses the least such `q`.
pub fn excluded_prime(ell: u64) -> Result<Option<Exclusion>> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if ell == 11 {
        return Ok(Some(Exclusion::Eleven));
    }
    let mut q = 2u64;
    while 1 + q + q * q <= ell {
        if is_prime_power(q) {
            let mut value = 1 + q + q * q;
            let mut k = 3;
            while value < ell {
                value = value * q + 1;
                k += 1;
            }
            if value == ell {
                return Ok(Some(Exclusion::ProjectiveCount { q, k }));
            }
        }
        q += 1;
    }
    Ok(None)
}

fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).expect("n >= 2");
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// An involution with exactly one fixed point.
pub fn is_point_involution(p: &Permutation) -> bool {
    let ct = p.cycle_type();
    ct.count(1) == 1 && ct.count(2) > 0 && ct.parts().iter().all(|&a| a <= 2)
}

/// Whether two point involutions fix the same point, decided only from the
/// parity of `|Fix(στ)|` (odd exactly when they share it).
pub fn share_fixed_point_by_parity(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    if !is_point_involution(sigma) || !is_point_involution(tau) {
        return Err(Error::Precondition(
            "both permutations must be point involutions".into(),
        ));
    }
    Ok(sigma.compose(tau)?.fixed_point_count() % 2 == 1)
}

/// The `G`-equivariant bijection `Ω → Ω′` induced by point involutions:
/// `x` goes to the unique point of `Ω′` fixed by a point involution fixing
/// `x`.
///
/// Point involutions are taken from the conjugates of the first element
/// acting as one. The map is checked to be independent of that choice, to
/// be a bijection, and to commute with every generator.
pub fn equivariant_bijection_via_involutions(omega: &GSet, other: &GSet) -> Result<Vec<u32>> {
    if !omega.same_group(other) {
        return Err(Error::DifferentGroups);
    }
    if !omega.is_transitive() {
        return Err(Error::Intransitive);
    }
    if !is_gassmann_equivalent(omega, other)? {
        return Err(Error::NotGassmannEquivalent);
    }
    let group = omega.group();
    let sigma = (0..group.order() as ElemId)
        .find(|&e| is_point_involution(omega.image(e)))
        .ok_or(Error::NoPointInvolution)?;
    let mut conjugates: Vec<ElemId> = (0..group.order() as ElemId).map(|g| group.conj(sigma, g)).collect();
    conjugates.sort_unstable();
    conjugates.dedup();

    let n = omega.degree();
    let mut map = vec![u32::MAX; n];
    for x in 0..n as u32 {
        let fixing: Vec<ElemId> = conjugates.iter().copied().filter(|&c| omega.act(c, x) == x).collect();
        let &chosen = fixing
            .first()
            .ok_or_else(|| Error::Inconsistent(format!("no conjugate fixes point {x}")))?;
        let fixed = other.image(chosen).fixed_points();
        if fixed.len() != 1 {
            return Err(Error::Inconsistent("involution is not a point involution on Ω′".into()));
        }
        for &tau in &fixing[1..] {
            let product = group.mul(chosen, tau);
            let odd_here = omega.fixed_count(product) % 2 == 1;
            let odd_there = other.fixed_count(product) % 2 == 1;
            if !odd_here || !odd_there || other.image(tau).fixed_points() != fixed {
                return Err(Error::Inconsistent(format!("choice of involution at {x} matters")));
            }
        }
        map[x as usize] = fixed[0];
    }
    let mut hit = vec![false; other.degree()];
    for &y in &map {
        if core::mem::replace(&mut hit[y as usize], true) {
            return Err(Error::Inconsistent("point map is not injective".into()));
        }
    }
    if other.degree() != n {
        return Err(Error::Inconsistent("point map is not surjective".into()));
    }
    for gen in group.generators() {
        let t = group.element_id(gen)?;
        for x in 0..n as u32 {
            if map[omega.act(t, x) as usize] != other.act(t, map[x as usize]) {
                return Err(Error::Inconsistent("point map is not equivariant".into()));
            }
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_group;
    use crate::group::{generate_elements, DEFAULT_ELEMENT_CAP, DEFAULT_SUBGROUP_CAP};
    use crate::perm::parse_cycle_notation;
    use alloc::string::ToString;

    fn catalog(name: &str) -> crate::catalog::BuiltinGroup {
        builtin_group(name, DEFAULT_ELEMENT_CAP).unwrap()
    }

    fn perms(n: usize, texts: &[&str]) -> Vec<Permutation> {
        texts.iter().map(|t| parse_cycle_notation(t, n).unwrap()).collect()
    }

    #[test]
    fn character_of_s3() {
        let s3 = catalog("sym:3");
        let chi = perm_character(&s3.natural_action()).unwrap();
        assert_eq!(chi.values, vec![3, 1, 0]);
        let regular = GSet::coset_action(&s3.group, &s3.group.trivial_subgroup()).unwrap();
        assert_eq!(perm_character(&regular).unwrap().values, vec![6, 0, 0]);
        assert!(!is_gassmann_equivalent(&s3.natural_action(), &regular).unwrap());
        assert!(is_gassmann_equivalent(&regular, &regular).unwrap());
    }

    #[test]
    fn different_groups_are_rejected() {
        let a = catalog("sym:3").natural_action();
        let b = catalog("cyclic:3").natural_action();
        assert_eq!(is_gassmann_equivalent(&a, &b), Err(Error::DifferentGroups));
    }

    #[test]
    fn profile_examples() {
        let s3 = catalog("sym:3");
        let h = s3.group.subgroup_generated_by(&perms(3, &["(1 2)"])).unwrap();
        assert_eq!(class_intersection_profile(&s3.group, &h).unwrap(), vec![1, 1, 0]);
        let sizes: Vec<usize> = s3.group.conjugacy_classes().iter().map(|c| c.size()).collect();
        assert_eq!(class_intersection_profile(&s3.group, &s3.group.whole()).unwrap(), sizes);
    }

    #[test]
    fn fano_triple() {
        let g = catalog("gl3_2");
        let (p, l) = (g.subgroup("point_stab").unwrap(), g.subgroup("line_stab").unwrap());
        let r = is_gassmann_triple(&g.group, p, l).unwrap();
        assert!(r.gassmann && !r.trivial);
        assert_eq!(r.intersection_profiles[0], r.intersection_profiles[1]);
        let points = GSet::coset_action(&g.group, p).unwrap();
        let lines = GSet::coset_action(&g.group, l).unwrap();
        assert_eq!(perm_character(&points).unwrap(), perm_character(&lines).unwrap());
    }

    #[test]
    fn conjugate_pair_is_trivial() {
        let g = catalog("sym:4");
        let h = g.subgroup("point_stab").unwrap();
        let x = g
            .group
            .element_id(&parse_cycle_notation("(1 2 3 4)", 4).unwrap())
            .unwrap();
        let hc = g.group.conjugate_subgroup(h, x);
        let r = is_gassmann_triple(&g.group, h, &hc).unwrap();
        assert!(r.gassmann && r.trivial);
        let w = g.group.element_id(r.conjugating_witness.as_ref().unwrap()).unwrap();
        assert_eq!(g.group.conjugate_subgroup(h, w), hc);
    }

    #[test]
    fn solitary_examples() {
        let g = catalog("gl3_2");
        assert!(!is_solitary_bruteforce(&g.group, g.subgroup("point_stab").unwrap(), DEFAULT_SUBGROUP_CAP).unwrap());
        let s3 = catalog("sym:3");
        let h = s3.group.subgroup_generated_by(&perms(3, &["(1 2)"])).unwrap();
        assert!(is_solitary_bruteforce(&s3.group, &h, DEFAULT_SUBGROUP_CAP).unwrap());
        let f20 = catalog("frobenius20");
        let c4 = f20.subgroup("point_stab").unwrap();
        assert_eq!(c4.order(), 4);
        assert!(is_solitary_bruteforce(&f20.group, c4, DEFAULT_SUBGROUP_CAP).unwrap());
    }

    #[test]
    fn criterion_examples() {
        let d5 = catalog("dihedral:5").natural_action();
        let w = theorem1_criterion(&d5).unwrap().unwrap();
        assert_eq!(w.condition, Condition::I);
        assert_eq!(w.cycle_type.parts(), &[1, 2, 2]);

        let s5 = catalog("sym:5").natural_action();
        let w = theorem1_criterion(&s5).unwrap().unwrap();
        assert_eq!(w.condition, Condition::I);
        assert_eq!(w.element.to_string(), "(2 3)(4 5)");
        let transposition = CycleType::new(vec![1, 1, 1, 2]).unwrap();
        let conds = satisfied_conditions(&transposition, 5);
        assert!(conds.contains(&(Condition::III, Some(2))));
        assert!(conds.contains(&(Condition::II, Some(2))));

        assert_eq!(theorem1_criterion(&catalog("gl3_2").natural_action()).unwrap(), None);
        let intransitive = GSet::natural(Arc::new(generate_elements(&perms(4, &["(1 2)"]), 10).unwrap()));
        assert_eq!(theorem1_criterion(&intransitive), Err(Error::Intransitive));
    }

    #[test]
    fn condition_details() {
        let ct = |v: &[u32]| CycleType::new(v.to_vec()).unwrap();
        // full cycle: (ii) cannot hold, (iii) holds for non-excluded primes
        assert_eq!(satisfied_conditions(&ct(&[5]), 5), vec![(Condition::III, Some(5))]);
        assert!(satisfied_conditions(&ct(&[7]), 7).is_empty());
        assert!(satisfied_conditions(&ct(&[11]), 11).is_empty());
        // (ii) with a composite part
        assert_eq!(satisfied_conditions(&ct(&[1, 4]), 5), vec![(Condition::II, Some(4))]);
        // repeated parts never qualify
        assert!(satisfied_conditions(&ct(&[1, 3, 3]), 7).is_empty());
        assert!(satisfied_conditions(&ct(&[1, 2, 4]), 7).is_empty());
        assert!(satisfied_conditions(&ct(&[1, 1, 1, 2, 2]), 7).is_empty());
    }

    #[test]
    fn excluded_prime_examples() {
        assert_eq!(excluded_prime(5).unwrap(), None);
        assert_eq!(excluded_prime(11).unwrap(), Some(Exclusion::Eleven));
        assert_eq!(
            excluded_prime(7).unwrap(),
            Some(Exclusion::ProjectiveCount { q: 2, k: 3 })
        );
        assert_eq!(
            excluded_prime(13).unwrap(),
            Some(Exclusion::ProjectiveCount { q: 3, k: 3 })
        );
        assert_eq!(
            excluded_prime(31).unwrap(),
            Some(Exclusion::ProjectiveCount { q: 2, k: 5 })
        );
        assert_eq!(excluded_prime(21), Err(Error::NotPrime(21)));
    }

    #[test]
    fn bijection_examples() {
        let d5 = catalog("dihedral:5");
        let natural = d5.natural_action();
        let f = equivariant_bijection_via_involutions(&natural, &natural).unwrap();
        for g in 0..d5.group.order() as ElemId {
            for x in 0..5 {
                assert_eq!(f[natural.act(g, x) as usize], natural.act(g, f[x as usize]));
            }
        }

        let h1 = d5.subgroup("point_stab").unwrap().clone();
        let r = d5
            .group
            .element_id(&parse_cycle_notation("(1 2 3 4 5)", 5).unwrap())
            .unwrap();
        let h2 = d5.group.conjugate_subgroup(&h1, r);
        assert_ne!(h1, h2);
        let o1 = GSet::coset_action(&d5.group, &h1).unwrap();
        let o2 = GSet::coset_action(&d5.group, &h2).unwrap();
        let f = equivariant_bijection_via_involutions(&o1, &o2).unwrap();
        // H1 is the stabilizer of point 0 of o1, so it equals the stabilizer
        // of f(0) in o2, which is a H2 a⁻¹ for the coset a H2 = f(0).
        let stab = o2.point_stabilizer(f[0]);
        assert_eq!(stab, h1);
        let a = (0..10).find(|&a| o2.act(a, 0) == f[0]).unwrap();
        assert_eq!(d5.group.conjugate_subgroup(&h1, a), h2);

        let c3 = catalog("cyclic:3");
        let regular = GSet::coset_action(&c3.group, &c3.group.trivial_subgroup()).unwrap();
        assert_eq!(
            equivariant_bijection_via_involutions(&regular, &regular),
            Err(Error::NoPointInvolution)
        );
        let s3 = catalog("sym:3");
        let reg = GSet::coset_action(&s3.group, &s3.group.trivial_subgroup()).unwrap();
        assert_eq!(
            equivariant_bijection_via_involutions(&s3.natural_action(), &reg),
            Err(Error::NotGassmannEquivalent)
        );
    }
}
