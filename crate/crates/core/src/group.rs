//! Finite permutation groups stored as fully enumerated element lists.
//!
//! Elements are kept in canonical (lexicographic image) order and addressed
//! by their index in that order. The identity is always index 0.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, PermError, Result};
use crate::perm::Permutation;
use crate::util::BitSet;

/// Default limit on the number of enumerated elements.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;
/// Default limit on the number of intermediate subgroups in lattice searches.
pub const DEFAULT_SUBGROUP_CAP: usize = 200_000;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 1500;

/// Element index within a [`PermGroup`].
pub type ElemId = u32;

pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    inverses: Vec<ElemId>,
    orders: Vec<u32>,
    table: Option<Vec<ElemId>>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

impl core::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// A conjugacy class, addressed by element ids of the parent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub rep_id: ElemId,
    pub members: Vec<ElemId>,
    pub element_order: u32,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Breadth-first closure of `generators` under composition.
///
/// Fails with [`Error::CapExceeded`] once more than `cap` elements have been
/// produced.
pub fn generate_elements(generators: &[Permutation], cap: usize) -> Result<PermGroup> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let degree = first.degree();
    for g in generators {
        if g.degree() != degree {
            return Err(PermError::DegreeMismatch {
                left: degree,
                right: g.degree(),
            }
            .into());
        }
    }
    let identity = Permutation::identity(degree);
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose_unchecked(&x);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded {
                        partial: seen.len(),
                        cap,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(PermGroup::from_sorted(
        degree,
        generators.to_vec(),
        seen.into_iter().collect(),
    ))
}

impl PermGroup {
    /// Builds the group from an already closed, sorted element list.
    pub(crate) fn from_sorted(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> PermGroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements[0].is_identity());
        let n = elements.len();
        let mut group = PermGroup {
            degree,
            generators,
            elements,
            inverses: Vec::new(),
            orders: Vec::new(),
            table: None,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        group.inverses = (0..n)
            .map(|i| {
                group
                    .lookup(&group.elements[i].inverse())
                    .expect("closed under inverse")
            })
            .collect();
        group.orders = group.elements.iter().map(|e| e.order() as u32).collect();
        if n <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(n * n);
            for a in &group.elements {
                for b in &group.elements {
                    table.push(group.lookup(&a.compose_unchecked(b)).expect("closed"));
                }
            }
            group.table = Some(table);
        }
        let (classes, class_of) = group.compute_classes();
        group.classes = classes;
        group.class_of = class_of;
        group
    }

    /// Subgroup of `self` as a group in its own right.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> PermGroup {
        let gens = h.generators.iter().map(|&g| self.element(g).clone()).collect();
        let elems = h.members.iter().map(|&g| self.element(g).clone()).collect();
        PermGroup::from_sorted(self.degree, gens, elems)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    #[inline]
    pub fn element(&self, id: ElemId) -> &Permutation {
        &self.elements[id as usize]
    }

    pub fn identity_id(&self) -> ElemId {
        0
    }

    /// Index of `p` in the canonical element list.
    pub fn lookup(&self, p: &Permutation) -> Option<ElemId> {
        if p.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(p).ok().map(|i| i as ElemId)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.lookup(p).is_some()
    }

    pub fn element_id(&self, p: &Permutation) -> Result<ElemId> {
        self.lookup(p).ok_or_else(|| Error::NotAnElement(format!("{p}")))
    }

    /// Id of `a ∘ b`.
    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self
                .lookup(&self.element(a).compose_unchecked(self.element(b)))
                .expect("group is closed"),
        }
    }

    #[inline]
    pub fn inv(&self, a: ElemId) -> ElemId {
        self.inverses[a as usize]
    }

    /// Id of `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: ElemId, g: ElemId) -> ElemId {
        self.mul(self.inv(g), self.mul(x, g))
    }

    pub fn element_order(&self, a: ElemId) -> u32 {
        self.orders[a as usize]
    }

    fn generator_ids(&self) -> Vec<ElemId> {
        self.generators
            .iter()
            .map(|g| self.lookup(g).expect("generators are elements"))
            .collect()
    }

    fn compute_classes(&self) -> (Vec<ConjugacyClass>, Vec<u32>) {
        let n = self.order();
        let gens = self.generator_ids();
        let mut assigned = vec![u32::MAX; n];
        let mut raw: Vec<Vec<ElemId>> = Vec::new();
        for start in 0..n {
            if assigned[start] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            let mut members = vec![start as ElemId];
            assigned[start] = id;
            let mut pos = 0;
            while pos < members.len() {
                let x = members[pos];
                for &g in &gens {
                    let y = self.conj(x, g);
                    if assigned[y as usize] == u32::MAX {
                        assigned[y as usize] = id;
                        members.push(y);
                    }
                }
                pos += 1;
            }
            members.sort_unstable();
            raw.push(members);
        }
        let mut classes: Vec<ConjugacyClass> = raw
            .into_iter()
            .map(|members| {
                let rep_id = members[0];
                ConjugacyClass {
                    representative: self.element(rep_id).clone(),
                    rep_id,
                    element_order: self.element_order(rep_id),
                    members,
                }
            })
            .collect();
        classes.sort_by(|a, b| {
            (a.element_order, a.size(), &a.representative).cmp(&(b.element_order, b.size(), &b.representative))
        });
        let mut class_of = vec![0u32; n];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m as usize] = ci as u32;
            }
        }
        (classes, class_of)
    }

    /// Conjugacy classes sorted by (element order, size, representative).
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    /// Position of the class of `a` in [`Self::conjugacy_classes`].
    pub fn class_of(&self, a: ElemId) -> usize {
        self.class_of[a as usize] as usize
    }

    /// Closure of `gens` as a set of ids; `None` once it outgrows `limit`.
    fn close(&self, gens: &[ElemId], limit: usize) -> Option<Vec<ElemId>> {
        let n = self.order();
        let mut seen = BitSet::new(n);
        seen.insert(0);
        let mut members = vec![0 as ElemId];
        let mut pos = 0;
        while pos < members.len() {
            let x = members[pos];
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y as usize) {
                    members.push(y);
                    if members.len() > limit {
                        return None;
                    }
                }
            }
            pos += 1;
        }
        members.sort_unstable();
        Some(members)
    }

    /// `⟨h, g⟩` by Dimino's coset extension; `None` once it outgrows `limit`.
    fn join(&self, h: &Subgroup, g: ElemId, limit: usize) -> Option<Subgroup> {
        if h.bits.contains(g as usize) {
            return Some(h.clone());
        }
        let mut gens = h.generators.clone();
        gens.push(g);
        let mut bits = h.bits.clone();
        let mut members = h.members.clone();
        let mut reps = vec![0 as ElemId, g];
        for &x in &h.members {
            let y = self.mul(x, g);
            bits.insert(y as usize);
            members.push(y);
        }
        if members.len() > limit {
            return None;
        }
        let mut pos = 0;
        while pos < reps.len() {
            let r = reps[pos];
            for &s in &gens {
                let e = self.mul(r, s);
                if !bits.contains(e as usize) {
                    reps.push(e);
                    for &x in &h.members {
                        let y = self.mul(x, e);
                        bits.insert(y as usize);
                        members.push(y);
                    }
                    if members.len() > limit {
                        return None;
                    }
                }
            }
            pos += 1;
        }
        members.sort_unstable();
        Some(Subgroup {
            members,
            bits,
            generators: gens,
            parent_order: h.parent_order,
        })
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_parts(self.order(), vec![0], Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        let members: Vec<ElemId> = (0..self.order() as ElemId).collect();
        Subgroup::from_parts(self.order(), members, self.generator_ids())
    }

    /// The subgroup generated by the given elements of `self`.
    pub fn subgroup_generated_by(&self, gens: &[Permutation]) -> Result<Subgroup> {
        let ids = gens.iter().map(|g| self.element_id(g)).collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup_generated_by_ids(&ids))
    }

    pub fn subgroup_generated_by_ids(&self, ids: &[ElemId]) -> Subgroup {
        let members = self.close(ids, usize::MAX).expect("no limit");
        Subgroup::from_parts(self.order(), members, ids.to_vec())
    }

    /// Validates that `ids` is a subgroup and wraps it.
    pub fn subgroup_from_ids(&self, ids: &[ElemId]) -> Result<Subgroup> {
        let mut members = ids.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) || members.iter().any(|&m| m as usize >= self.order()) {
            return Err(Error::NotASubgroup);
        }
        let bits = BitSet::from_indices(self.order(), &members);
        for &a in &members {
            for &b in &members {
                if !bits.contains(self.mul(a, b) as usize) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(Subgroup::from_parts(self.order(), members.clone(), members))
    }

    /// Cyclic subgroups, deduplicated and sorted.
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: BTreeMap<BitSet, Subgroup> = BTreeMap::new();
        for x in 0..self.order() as ElemId {
            let c = self.subgroup_generated_by_ids(&[x]);
            seen.entry(c.bits.clone()).or_insert(c);
        }
        let mut out: Vec<Subgroup> = seen.into_values().collect();
        out.sort();
        out
    }

    /// Every subgroup of order `m`, canonically sorted.
    ///
    /// Starts from the cyclic subgroups and repeatedly joins with cyclic
    /// subgroups of prime-power order, discarding anything whose order does
    /// not divide `m`. Every subgroup of order `m` is generated by its
    /// prime-power elements, and every partial join lies inside it, so the
    /// search is exhaustive.
    pub fn subgroups_of_order(&self, m: usize, cap: usize) -> Result<Vec<Subgroup>> {
        Ok(self
            .subgroups_dividing(m, cap)?
            .into_iter()
            .filter(|s| s.order() == m)
            .collect())
    }

    /// Every subgroup whose order divides `m`, canonically sorted.
    pub fn subgroups_dividing(&self, m: usize, cap: usize) -> Result<Vec<Subgroup>> {
        let order = self.order();
        if m == 0 || !order.is_multiple_of(m) {
            return Err(Error::NotADivisor { m, order });
        }
        let cyclic: Vec<Subgroup> = self
            .cyclic_subgroups()
            .into_iter()
            .filter(|c| m.is_multiple_of(c.order()))
            .collect();
        let joiners: Vec<ElemId> = cyclic
            .iter()
            .filter(|c| is_prime_power(c.order()))
            .map(|c| c.generators[0])
            .collect();
        let mut found: BTreeMap<BitSet, Subgroup> = BTreeMap::new();
        let mut queue: VecDeque<BitSet> = VecDeque::new();
        let trivial = self.trivial_subgroup();
        queue.push_back(trivial.bits.clone());
        found.insert(trivial.bits.clone(), trivial);
        for c in cyclic {
            if !found.contains_key(&c.bits) {
                queue.push_back(c.bits.clone());
                found.insert(c.bits.clone(), c);
            }
        }
        while let Some(key) = queue.pop_front() {
            let current = found[&key].clone();
            for &g in &joiners {
                if current.bits.contains(g as usize) {
                    continue;
                }
                let Some(joined) = self.join(&current, g, m) else {
                    continue;
                };
                if !m.is_multiple_of(joined.order()) || found.contains_key(&joined.bits) {
                    continue;
                }
                if found.len() >= cap {
                    return Err(Error::CapExceeded {
                        partial: found.len(),
                        cap,
                    });
                }
                queue.push_back(joined.bits.clone());
                found.insert(joined.bits.clone(), joined);
            }
        }
        let mut out: Vec<Subgroup> = found.into_values().collect();
        out.sort();
        Ok(out)
    }

    /// `g⁻¹ H g`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: ElemId) -> Subgroup {
        let mut members: Vec<ElemId> = h.members.iter().map(|&x| self.conj(x, g)).collect();
        members.sort_unstable();
        let generators = h.generators.iter().map(|&x| self.conj(x, g)).collect();
        Subgroup::from_parts(self.order(), members, generators)
    }

    /// Searches all of `G` for `g` with `g⁻¹ H₁ g = H₂`; returns the first
    /// such `g` in canonical order.
    pub fn are_conjugate_subgroups(&self, h1: &Subgroup, h2: &Subgroup) -> Result<Option<ElemId>> {
        if h1.order() != h2.order() {
            return Err(Error::OrderMismatch(h1.order(), h2.order()));
        }
        self.check_subgroup(h1)?;
        self.check_subgroup(h2)?;
        'outer: for g in 0..self.order() as ElemId {
            for &x in &h1.members {
                if !h2.bits.contains(self.conj(x, g) as usize) {
                    continue 'outer;
                }
            }
            return Ok(Some(g));
        }
        Ok(None)
    }

    /// Partitions `subgroups` into conjugacy classes; returns, per input, the
    /// index of its class. Classes are numbered in order of first appearance.
    pub fn subgroup_conjugacy_labels(&self, subgroups: &[Subgroup]) -> Vec<usize> {
        let index: BTreeMap<&BitSet, usize> = subgroups.iter().enumerate().map(|(i, s)| (&s.bits, i)).collect();
        let gens = self.generator_ids();
        let mut label = vec![usize::MAX; subgroups.len()];
        let mut next = 0;
        for i in 0..subgroups.len() {
            if label[i] != usize::MAX {
                continue;
            }
            label[i] = next;
            let mut orbit = vec![subgroups[i].clone()];
            let mut seen: BTreeSet<BitSet> = BTreeSet::new();
            seen.insert(subgroups[i].bits.clone());
            let mut pos = 0;
            while pos < orbit.len() {
                for &g in &gens {
                    let c = self.conjugate_subgroup(&orbit[pos], g);
                    if seen.insert(c.bits.clone()) {
                        if let Some(&j) = index.get(&c.bits) {
                            label[j] = next;
                        }
                        orbit.push(c);
                    }
                }
                pos += 1;
            }
            next += 1;
        }
        label
    }

    /// All conjugates of `h`, sorted.
    pub fn conjugates_of(&self, h: &Subgroup) -> Vec<Subgroup> {
        let gens = self.generator_ids();
        let mut seen: BTreeSet<BitSet> = BTreeSet::new();
        seen.insert(h.bits.clone());
        let mut orbit = vec![h.clone()];
        let mut pos = 0;
        while pos < orbit.len() {
            for &g in &gens {
                let c = self.conjugate_subgroup(&orbit[pos], g);
                if seen.insert(c.bits.clone()) {
                    orbit.push(c);
                }
            }
            pos += 1;
        }
        orbit.sort();
        orbit
    }

    /// Smallest normal subgroup containing `s`.
    pub fn normal_closure(&self, s: &[Permutation]) -> Result<Subgroup> {
        let ids = s.iter().map(|g| self.element_id(g)).collect::<Result<Vec<_>>>()?;
        Ok(self.normal_closure_ids(&ids))
    }

    pub fn normal_closure_ids(&self, ids: &[ElemId]) -> Subgroup {
        let gens = self.generator_ids();
        let mut current = self.trivial_subgroup();
        for &x in ids {
            current = self.join(&current, x, usize::MAX).expect("no limit");
        }
        loop {
            let mut grown = false;
            let snapshot = current.generators.clone();
            for &n in &snapshot {
                for &g in &gens {
                    let c = self.conj(n, g);
                    if !current.bits.contains(c as usize) {
                        current = self.join(&current, c, usize::MAX).expect("no limit");
                        grown = true;
                    }
                }
            }
            if !grown {
                return current;
            }
        }
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let gens = self.generator_ids();
        h.generators
            .iter()
            .all(|&x| gens.iter().all(|&g| h.bits.contains(self.conj(x, g) as usize)))
    }

    /// Checks that `h` was built for a group of this order and is closed.
    pub fn check_subgroup(&self, h: &Subgroup) -> Result<()> {
        if h.parent_order != self.order() || !self.order().is_multiple_of(h.order()) {
            return Err(Error::NotASubgroup);
        }
        Ok(())
    }

    /// Number of elements of `h` in each conjugacy class of `self`.
    pub fn class_intersection_profile(&self, h: &Subgroup) -> Vec<usize> {
        let mut profile = vec![0usize; self.classes.len()];
        for &x in &h.members {
            profile[self.class_of(x)] += 1;
        }
        profile
    }
}

fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n && !n.is_multiple_of(p) {
        p += 1;
    }
    if !n.is_multiple_of(p) {
        return true;
    }
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// A subgroup of a [`PermGroup`], as a sorted list of element ids.
///
/// Ordering and equality compare the member lists, which matches comparing
/// the canonically sorted element lists.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<ElemId>,
    bits: BitSet,
    generators: Vec<ElemId>,
    parent_order: usize,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}
impl Eq for Subgroup {}
impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

impl Subgroup {
    fn from_parts(parent_order: usize, members: Vec<ElemId>, generators: Vec<ElemId>) -> Self {
        let bits = BitSet::from_indices(parent_order, &members);
        Subgroup {
            members,
            bits,
            generators,
            parent_order,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn generators(&self) -> &[ElemId] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, id: ElemId) -> bool {
        self.bits.contains(id as usize)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

/// A group acting on `0..degree`, stored as one image permutation per
/// group element (indexed by element id).
#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<PermGroup>,
    images: Vec<Permutation>,
}

impl GSet {
    /// The defining action of a permutation group on its points.
    pub fn natural(group: Arc<PermGroup>) -> GSet {
        let images = group.elements().to_vec();
        GSet { group, images }
    }

    /// The action `g · xH = (gx)H` on the left cosets of `h`.
    ///
    /// Cosets are numbered by their least element in canonical order, so
    /// point 0 is `H` itself.
    pub fn coset_action(group: &Arc<PermGroup>, h: &Subgroup) -> Result<GSet> {
        group.check_subgroup(h)?;
        let n = group.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps: Vec<ElemId> = Vec::new();
        for x in 0..n as ElemId {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &y in h.members() {
                coset_of[group.mul(x, y) as usize] = id;
            }
        }
        let images = (0..n as ElemId)
            .map(|g| {
                let imgs = reps.iter().map(|&r| coset_of[group.mul(g, r) as usize]).collect();
                Permutation::from_images_unchecked(imgs)
            })
            .collect();
        Ok(GSet {
            group: Arc::clone(group),
            images,
        })
    }

    /// Builds a G-set from images of the group generators, extending to all
    /// elements through the homomorphism property.
    pub fn from_generator_images(group: Arc<PermGroup>, gen_images: &[Permutation]) -> Result<GSet> {
        if gen_images.len() != group.generators().len() || gen_images.is_empty() {
            return Err(Error::Precondition("one image per generator required".into()));
        }
        let degree = gen_images[0].degree();
        if gen_images.iter().any(|p| p.degree() != degree) {
            return Err(Error::Precondition("generator images differ in degree".into()));
        }
        let gens: Vec<ElemId> = group.generator_ids();
        let n = group.order();
        let mut images: Vec<Option<Permutation>> = vec![None; n];
        images[0] = Some(Permutation::identity(degree));
        let mut queue = VecDeque::from([0 as ElemId]);
        while let Some(x) = queue.pop_front() {
            let img_x = images[x as usize].clone().expect("visited");
            for (k, &g) in gens.iter().enumerate() {
                let y = group.mul(g, x);
                let img_y = gen_images[k].compose_unchecked(&img_x);
                match &images[y as usize] {
                    None => {
                        images[y as usize] = Some(img_y);
                        queue.push_back(y);
                    }
                    Some(existing) if *existing != img_y => {
                        return Err(Error::Precondition("generator images do not define an action".into()));
                    }
                    Some(_) => {}
                }
            }
        }
        let images = images.into_iter().map(|p| p.expect("connected")).collect();
        Ok(GSet { group, images })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.images[0].degree()
    }

    /// The permutation by which element `g` acts.
    #[inline]
    pub fn image(&self, g: ElemId) -> &Permutation {
        &self.images[g as usize]
    }

    #[inline]
    pub fn act(&self, g: ElemId, point: u32) -> u32 {
        self.images[g as usize].apply(point)
    }

    pub fn fixed_count(&self, g: ElemId) -> usize {
        self.images[g as usize].fixed_point_count()
    }

    /// Orbits of the acting group, sorted by least point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let gens: Vec<&Permutation> = self
            .group
            .generators()
            .iter()
            .map(|g| self.image(self.group.lookup(g).expect("generator")))
            .collect();
        orbits_of(self.degree(), &gens)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Stabilizer of `point` as a subgroup of the acting group.
    pub fn point_stabilizer(&self, point: u32) -> Subgroup {
        let ids: Vec<ElemId> = (0..self.group.order() as ElemId)
            .filter(|&g| self.act(g, point) == point)
            .collect();
        Subgroup::from_parts(self.group.order(), ids.clone(), ids)
    }

    /// Setwise stabilizer of `set`.
    pub fn set_stabilizer(&self, set: &[u32]) -> Subgroup {
        let mut mask = vec![false; self.degree()];
        for &x in set {
            mask[x as usize] = true;
        }
        let ids: Vec<ElemId> = (0..self.group.order() as ElemId)
            .filter(|&g| set.iter().all(|&x| mask[self.act(g, x) as usize]))
            .collect();
        Subgroup::from_parts(self.group.order(), ids.clone(), ids)
    }

    /// The permutation group induced on the points (the faithful quotient).
    pub fn image_group(&self) -> PermGroup {
        let gens: Vec<Permutation> = self
            .group
            .generators()
            .iter()
            .map(|g| self.image(self.group.lookup(g).expect("generator")).clone())
            .collect();
        let mut elems: Vec<Permutation> = self.images.clone();
        elems.sort();
        elems.dedup();
        PermGroup::from_sorted(self.degree(), gens, elems)
    }

    /// True when both G-sets are for the same group object or equal groups.
    pub fn same_group(&self, other: &GSet) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || self.group.elements() == other.group.elements()
    }
}

/// Orbits of the group generated by `gens` on `0..degree`, sorted by least
/// point, each sorted ascending.
pub fn orbits_of(degree: usize, gens: &[&Permutation]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start as u32];
        let mut pos = 0;
        while pos < orbit.len() {
            let x = orbit[pos];
            for g in gens {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                }
            }
            pos += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}
