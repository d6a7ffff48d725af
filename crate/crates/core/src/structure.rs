//! Orbits, blocks and the cycle-based constructions used to prove that a
//! G-set is Gassmann solitary.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{generate_elements, orbits_of, ElemId, GSet, PermGroup, Subgroup};
use crate::perm::Permutation;
use crate::util::is_prime;

const INNER_CAP: usize = 1_000_000;

/// A partition of the points into equal-size blocks, each sorted, ordered by
/// least point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub blocks: Vec<Vec<u32>>,
    pub block_size: usize,
}

impl BlockSystem {
    pub fn is_trivial(&self) -> bool {
        self.block_size == 1 || self.blocks.len() == 1
    }

    pub fn block_of(&self, point: u32) -> &[u32] {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&point).is_ok())
            .expect("blocks partition the points")
    }
}

fn generator_images(omega: &GSet) -> Vec<Permutation> {
    let g = omega.group();
    g.generators()
        .iter()
        .map(|x| omega.image(g.lookup(x).expect("generator")).clone())
        .collect()
}

pub fn orbits(omega: &GSet) -> Vec<Vec<u32>> {
    omega.orbits()
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.0[root as usize] != root {
            root = self.0[root as usize];
        }
        let mut x = x;
        while self.0[x as usize] != root {
            let next = self.0[x as usize];
            self.0[x as usize] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi as usize] = lo;
        true
    }
}

/// Finest invariant partition in which all of `set` share a cell; cells are
/// ordered by least point.
fn finest_partition(degree: usize, gens: &[Permutation], set: &[u32]) -> Vec<Vec<u32>> {
    let mut uf = UnionFind::new(degree);
    let mut pending: Vec<(u32, u32)> = set.windows(2).map(|w| (w[0], w[1])).collect();
    for &(a, b) in &pending {
        uf.union(a, b);
    }
    while let Some((x, y)) = pending.pop() {
        for g in gens {
            let (gx, gy) = (g.apply(x), g.apply(y));
            if uf.union(gx, gy) {
                pending.push((gx, gy));
            }
        }
    }
    let mut cells: Vec<Vec<u32>> = vec![Vec::new(); degree];
    for x in 0..degree as u32 {
        let r = uf.find(x);
        cells[r as usize].push(x);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

/// The least block system in which points 0 and `x` share a block.
pub fn minimal_block_system(omega: &GSet, x: u32) -> Result<BlockSystem> {
    if !omega.is_transitive() {
        return Err(Error::Intransitive);
    }
    let cells = finest_partition(omega.degree(), &generator_images(omega), &[0, x]);
    let block_size = cells[0].len();
    debug_assert!(cells.iter().all(|c| c.len() == block_size));
    Ok(BlockSystem {
        blocks: cells,
        block_size,
    })
}

/// `None` when primitive; otherwise a nontrivial block system of least block
/// size (ties broken by the smallest partner point of 0).
pub fn is_primitive(omega: &GSet) -> Result<Option<BlockSystem>> {
    if !omega.is_transitive() {
        return Err(Error::Intransitive);
    }
    let mut best: Option<BlockSystem> = None;
    for x in 1..omega.degree() as u32 {
        let sys = minimal_block_system(omega, x)?;
        if sys.is_trivial() {
            continue;
        }
        if best.as_ref().is_none_or(|b| sys.block_size < b.block_size) {
            best = Some(sys);
        }
    }
    Ok(best)
}

/// All block systems, including both trivial ones, by increasing block size.
pub fn block_systems(omega: &GSet) -> Result<Vec<BlockSystem>> {
    if !omega.is_transitive() {
        return Err(Error::Intransitive);
    }
    let n = omega.degree();
    let gens = generator_images(omega);
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<u32>> = vec![vec![0]];
    while let Some(set) = frontier.pop() {
        let cells = finest_partition(n, &gens, &set);
        let block = cells[0].clone();
        if !seen.insert(block.clone()) {
            continue;
        }
        for x in 0..n as u32 {
            if block.binary_search(&x).is_err() {
                let mut bigger = block.clone();
                bigger.push(x);
                bigger.sort_unstable();
                frontier.push(bigger);
            }
        }
        out.push(BlockSystem {
            block_size: block.len(),
            blocks: cells,
        });
    }
    out.sort_by(|a, b| a.block_size.cmp(&b.block_size).then_with(|| a.blocks.cmp(&b.blocks)));
    Ok(out)
}

fn check_cycles(cycles: &[Permutation]) -> Result<usize> {
    let degree = cycles.first().map(|c| c.degree()).ok_or(Error::NoGenerators)?;
    for c in cycles {
        if c.degree() != degree {
            return Err(Error::Precondition("cycles differ in degree".into()));
        }
        if !c.is_cycle() {
            return Err(Error::NotACycle(c.to_string()));
        }
    }
    Ok(degree)
}

/// An element `g` of `⟨cycles⟩` with `Fix(g) = Fix(⟨cycles⟩)`.
///
/// Built orbit by orbit: the cycles supported in each nontrivial orbit
/// generate a transitive group there, which contains an element without
/// fixed points in that orbit. The detector is the product of these.
pub fn fixed_point_detector(cycles: &[Permutation]) -> Result<Permutation> {
    let degree = check_cycles(cycles)?;
    let refs: Vec<&Permutation> = cycles.iter().collect();
    let mut detector = Permutation::identity(degree);
    for orbit in orbits_of(degree, &refs) {
        if orbit.len() == 1 {
            continue;
        }
        let local: Vec<Permutation> = cycles
            .iter()
            .filter(|c| orbit.binary_search(&c.support()[0]).is_ok())
            .cloned()
            .collect();
        let g = find_derangement_on(&local, &orbit)?;
        detector = detector.compose_unchecked(&g);
    }
    Ok(detector)
}

/// Breadth-first walk through `⟨gens⟩` until an element moving every point
/// of `orbit` turns up.
fn find_derangement_on(gens: &[Permutation], orbit: &[u32]) -> Result<Permutation> {
    let degree = gens[0].degree();
    let identity = Permutation::identity(degree);
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = alloc::collections::VecDeque::from([identity.clone()]);
    seen.insert(identity);
    while let Some(x) = queue.pop_front() {
        if orbit.iter().all(|&p| x.apply(p) != p) {
            return Ok(x);
        }
        if seen.len() > INNER_CAP {
            break;
        }
        for g in gens {
            let y = g.compose_unchecked(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Err(Error::Inconsistent("no element moves every point of the orbit".into()))
}

/// Points fixed by every permutation in `perms`.
pub fn common_fixed_points(degree: usize, perms: &[Permutation]) -> Vec<u32> {
    (0..degree as u32)
        .filter(|&x| perms.iter().all(|p| p.apply(x) == x))
        .collect()
}

/// `|Fix(⟨cycles⟩)|`, checked against the minimum fixed-point count over
/// every element of the group.
pub fn min_fixed_points(cycles: &[Permutation]) -> Result<usize> {
    let degree = check_cycles(cycles)?;
    let common = common_fixed_points(degree, cycles).len();
    let group = generate_elements(cycles, INNER_CAP)?;
    let min = group
        .elements()
        .iter()
        .map(|e| e.fixed_point_count())
        .min()
        .expect("nonempty");
    if min != common {
        return Err(Error::Inconsistent(format!(
            "group fixes {common} points but some element fixes only {min}"
        )));
    }
    Ok(common)
}

/// A set of conjugates of the cycle `sigma` whose only common fixed point
/// is `x`, for a primitive action.
///
/// For each other fixed point `y` of `sigma`, scans the group in canonical
/// order for `g` with `g·y` moved by `sigma` and `g·x` fixed by it; then
/// `g⁻¹ sigma g` fixes `x` and moves `y`.
pub fn rudio_fixing_set(omega: &GSet, sigma: ElemId, x: u32) -> Result<Vec<ElemId>> {
    if is_primitive(omega)?.is_some() {
        return Err(Error::Imprimitive);
    }
    let s = omega.image(sigma);
    if !s.is_cycle() {
        return Err(Error::NotACycle(s.to_string()));
    }
    let n = omega.degree();
    let support = s.support();
    if support.len() >= n {
        return Err(Error::CycleLengthOutOfRange {
            len: support.len(),
            degree: n,
        });
    }
    if s.apply(x) != x {
        return Err(Error::PointNotFixed(x));
    }
    let in_support = |p: u32| support.binary_search(&p).is_ok();
    let group = omega.group();
    let mut set = vec![sigma];
    for y in s.fixed_points() {
        if y == x {
            continue;
        }
        let g = (0..group.order() as ElemId)
            .find(|&g| in_support(omega.act(g, y)) && !in_support(omega.act(g, x)))
            .ok_or_else(|| Error::Inconsistent(format!("no element separates {x} and {y}")))?;
        let conj = group.conj(sigma, g);
        if !set.contains(&conj) {
            set.push(conj);
        }
    }
    let images: Vec<Permutation> = set.iter().map(|&e| omega.image(e).clone()).collect();
    if common_fixed_points(n, &images) != [x] {
        return Err(Error::Inconsistent("Rudio set does not pin the point".into()));
    }
    Ok(set)
}

/// Transitive with the stabilizer of point 0 transitive on the rest.
pub fn is_two_transitive(omega: &GSet) -> Result<bool> {
    if !omega.is_transitive() {
        return Err(Error::Intransitive);
    }
    let n = omega.degree();
    if n <= 2 {
        return Ok(true);
    }
    let stab = omega.point_stabilizer(0);
    let mut reached = vec![false; n];
    for &g in stab.members() {
        reached[omega.act(g, 1) as usize] = true;
    }
    Ok(reached[1..].iter().all(|&r| r))
}

/// For a transitive action of prime degree `ℓ`: the normal subgroup of order
/// `ℓ` of the induced group, if there is one.
pub fn is_affine_type(omega: &GSet) -> Result<Option<Vec<Permutation>>> {
    let ell = omega.degree();
    if !is_prime(ell as u64) {
        return Err(Error::NotPrimeDegree(ell));
    }
    if !omega.is_transitive() {
        return Err(Error::Intransitive);
    }
    let image = omega.image_group();
    // ℓ divides the order and ℓ² does not, so the Sylow ℓ-subgroups are
    // cyclic of order ℓ and normal exactly when unique.
    let t = (0..image.order() as ElemId)
        .find(|&e| image.element_order(e) as usize == ell)
        .expect("transitive of prime degree has an ℓ-element");
    let translations = image.subgroup_generated_by_ids(&[t]);
    if !image.is_normal(&translations) {
        return Ok(None);
    }
    Ok(Some(
        translations
            .members()
            .iter()
            .map(|&e| image.element(e).clone())
            .collect(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureBranch {
    TGreaterThanEll,
    TwoTransitive,
    Affine,
}

impl ClosureBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            ClosureBranch::TGreaterThanEll => "t_greater_than_ell",
            ClosureBranch::TwoTransitive => "two_transitive",
            ClosureBranch::Affine => "affine",
        }
    }
}

/// Structure of the normal closure `N` of all `ℓ`-cycles.
///
/// All subgroups refer to `image`, the group induced on the points.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub ell: u32,
    pub image: Arc<PermGroup>,
    pub normal_closure: Subgroup,
    pub orbits: Vec<Vec<u32>>,
    pub t: usize,
    pub factors: Vec<Subgroup>,
    pub branch: ClosureBranch,
}

pub fn ell_cycle_closure_report(omega: &GSet, ell: u32) -> Result<ClosureReport> {
    let image = Arc::new(omega.image_group());
    let is_ell_cycle = |p: &Permutation| p.is_cycle() && p.support().len() == ell as usize;
    let ell_cycles: Vec<ElemId> = (0..image.order() as ElemId)
        .filter(|&e| is_ell_cycle(image.element(e)))
        .collect();
    if ell_cycles.is_empty() {
        return Err(Error::NoEllCycle(ell));
    }
    let normal = image.normal_closure_ids(&ell_cycles);
    let gens: Vec<&Permutation> = normal.generators().iter().map(|&e| image.element(e)).collect();
    let orbits: Vec<Vec<u32>> = orbits_of(image.degree(), &gens)
        .into_iter()
        .filter(|o| o.len() > 1)
        .collect();
    let t = orbits[0].len();
    if orbits.iter().any(|o| o.len() != t) {
        return Err(Error::UnequalOrbits);
    }
    let factors: Vec<Subgroup> = orbits
        .iter()
        .map(|orbit| {
            let local: Vec<ElemId> = ell_cycles
                .iter()
                .copied()
                .filter(|&c| orbit.binary_search(&image.element(c).support()[0]).is_ok())
                .collect();
            image.subgroup_generated_by_ids(&local)
        })
        .collect();
    check_direct_product(&image, &normal, &orbits, &factors)?;

    let branch = if t > ell as usize {
        ClosureBranch::TGreaterThanEll
    } else {
        let local = restrict_to(&image, &factors[0], &orbits[0])?;
        let on_orbit = GSet::natural(Arc::new(local));
        if is_two_transitive(&on_orbit)? {
            ClosureBranch::TwoTransitive
        } else if is_prime(ell as u64) && is_affine_type(&on_orbit)?.is_some() {
            ClosureBranch::Affine
        } else {
            return Err(Error::Precondition(format!(
                "orbit of size {t} is neither 2-transitive nor affine"
            )));
        }
    };
    Ok(ClosureReport {
        ell,
        image,
        normal_closure: normal,
        orbits,
        t,
        factors,
        branch,
    })
}

/// Factors commute elementwise, each is exactly the part of `N` supported
/// on its orbit, and together they generate `N`.
fn check_direct_product(g: &PermGroup, normal: &Subgroup, orbits: &[Vec<u32>], factors: &[Subgroup]) -> Result<()> {
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i + 1..] {
            for &x in a.members() {
                for &y in b.members() {
                    if g.mul(x, y) != g.mul(y, x) {
                        return Err(Error::Inconsistent("factors do not commute".into()));
                    }
                }
            }
        }
    }
    for (orbit, factor) in orbits.iter().zip(factors) {
        let supported: Vec<ElemId> = normal
            .members()
            .iter()
            .copied()
            .filter(|&e| g.element(e).support().iter().all(|p| orbit.binary_search(p).is_ok()))
            .collect();
        if supported != factor.members() {
            return Err(Error::Inconsistent("factor differs from the orbit part of N".into()));
        }
    }
    let all_gens: Vec<ElemId> = factors.iter().flat_map(|f| f.generators().iter().copied()).collect();
    if &g.subgroup_generated_by_ids(&all_gens) != normal {
        return Err(Error::Inconsistent("factors do not generate N".into()));
    }
    Ok(())
}

/// The group induced by `h` on an invariant `orbit`, relabelled to
/// `0..orbit.len()`.
fn restrict_to(g: &PermGroup, h: &Subgroup, orbit: &[u32]) -> Result<PermGroup> {
    let relabel = |p: &Permutation| -> Permutation {
        let imgs = orbit
            .iter()
            .map(|&x| orbit.binary_search(&p.apply(x)).expect("invariant orbit") as u32)
            .collect();
        Permutation::from_images_unchecked(imgs)
    };
    let gens: Vec<Permutation> = h.generators().iter().map(|&e| relabel(g.element(e))).collect();
    generate_elements(&gens, INNER_CAP)
}

fn check_block(omega: &GSet, block: &[u32]) -> Result<()> {
    if block.is_empty() {
        return Err(Error::Precondition("empty block".into()));
    }
    for gen in generator_images(omega) {
        let moved = block
            .iter()
            .filter(|&&x| block.binary_search(&gen.apply(x)).is_ok())
            .count();
        if moved != 0 && moved != block.len() {
            return Err(Error::Precondition("set is not a block".into()));
        }
    }
    Ok(())
}

fn conjugate_image(g: &Permutation, s: &Permutation) -> Permutation {
    g.compose_unchecked(s).compose_unchecked(&g.inverse())
}

/// Decides `g ∈ G_{B}` for `B = Fix(S)` from fixed-point counts alone: the
/// group `⟨S ∪ gSg⁻¹⟩` has `|B|` fixed points when `g` stabilizes `B` and
/// none otherwise. The answer is cross-checked against `g·B = B`.
pub fn block_stabilizer_membership(omega: &GSet, s: &[ElemId], g: ElemId) -> Result<bool> {
    let cycles: Vec<Permutation> = s.iter().map(|&e| omega.image(e).clone()).collect();
    check_cycles(&cycles)?;
    let block = common_fixed_points(omega.degree(), &cycles);
    check_block(omega, &block)?;
    let gi = omega.image(g);
    let mut gens = cycles.clone();
    gens.extend(cycles.iter().map(|c| conjugate_image(gi, c)));
    let min = min_fixed_points(&gens)?;
    let by_count = if min == block.len() {
        true
    } else if min == 0 {
        false
    } else {
        return Err(Error::Inconsistent(format!(
            "{min} common fixed points, expected 0 or {}",
            block.len()
        )));
    };
    let direct = block.iter().all(|&x| block.binary_search(&gi.apply(x)).is_ok());
    if direct != by_count {
        return Err(Error::Inconsistent(
            "fixed-count test disagrees with setwise check".into(),
        ));
    }
    Ok(by_count)
}

/// The images of a block under the group, sorted by least point.
pub fn block_orbit(omega: &GSet, block: &[u32]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();
    for g in 0..omega.group().order() as ElemId {
        let mut img: Vec<u32> = block.iter().map(|&x| omega.act(g, x)).collect();
        img.sort_unstable();
        if !out.contains(&img) {
            out.push(img);
        }
    }
    out.sort();
    out
}

/// Cycles of the action (as group elements) whose support lies in `block`.
pub fn cycles_inside(omega: &GSet, block: &[u32]) -> Vec<ElemId> {
    (0..omega.group().order() as ElemId)
        .filter(|&e| {
            let p = omega.image(e);
            p.is_cycle() && p.support().iter().all(|x| block.binary_search(x).is_ok())
        })
        .collect()
}

/// Character-level recognition of a cycle inside `B = Fix(S)`: `tau`
/// commutes with every element of `S` and `⟨tau, S⟩` fixes fewer than `|B|`
/// points.
pub fn cycle_in_block_by_counts(omega: &GSet, s: &[ElemId], tau: ElemId) -> Result<bool> {
    let cycles: Vec<Permutation> = s.iter().map(|&e| omega.image(e).clone()).collect();
    check_cycles(&cycles)?;
    let t = omega.image(tau);
    if !t.is_cycle() {
        return Err(Error::NotACycle(t.to_string()));
    }
    let block_len = common_fixed_points(omega.degree(), &cycles).len();
    let commutes = cycles.iter().all(|c| c.compose_unchecked(t) == t.compose_unchecked(c));
    if !commutes {
        return Ok(false);
    }
    let mut gens = cycles;
    gens.push(t.clone());
    Ok(min_fixed_points(&gens)? < block_len)
}

/// The group `K` generated by `g t g⁻¹` for `g ∉ G_{B}` and `t` a cycle
/// inside `B`, as permutations of the points.
///
/// Requires the cycles inside `B` to act transitively on `B`; checks that
/// `K` is transitive on every other block of the system.
pub fn block_kernel(omega: &GSet, block: &[u32]) -> Result<PermGroup> {
    check_block(omega, block)?;
    let n = omega.degree();
    let inside: Vec<Permutation> = cycles_inside(omega, block)
        .iter()
        .map(|&e| omega.image(e).clone())
        .collect();
    let inside_refs: Vec<&Permutation> = inside.iter().collect();
    if block.len() > 1 && !orbits_of(n, &inside_refs).iter().any(|o| o.as_slice() == block) {
        return Err(Error::Precondition(
            "cycles inside the block are not transitive on it".into(),
        ));
    }
    let mut gens: Vec<Permutation> = Vec::new();
    for g in 0..omega.group().order() as ElemId {
        let gi = omega.image(g);
        let moves_block = block.iter().any(|&x| block.binary_search(&gi.apply(x)).is_err());
        if !moves_block {
            continue;
        }
        for t in &inside {
            let c = conjugate_image(gi, t);
            if !gens.contains(&c) {
                gens.push(c);
            }
        }
    }
    if gens.is_empty() {
        gens.push(Permutation::identity(n));
    }
    let k = generate_elements(&gens, INNER_CAP)?;
    let refs: Vec<&Permutation> = k.generators().iter().collect();
    let k_orbits = orbits_of(n, &refs);
    for other in block_orbit(omega, block) {
        if other.as_slice() != block && !k_orbits.contains(&other) {
            return Err(Error::Precondition("K is not transitive on another block".into()));
        }
    }
    Ok(k)
}

/// `|Fix(h, B)|` recovered from the permutation character:
/// `Σ_{k ∈ K} χ(hk) / |K| − (f − 1)` with `f` the number of blocks fixed by
/// `h`. Errors if the division is inexact or the result disagrees with the
/// direct count.
pub fn restricted_block_character(omega: &GSet, block: &[u32], k: &PermGroup, h: ElemId) -> Result<usize> {
    let hi = omega.image(h);
    if block.iter().any(|&x| block.binary_search(&hi.apply(x)).is_err()) {
        return Err(Error::Precondition("h does not stabilize the block".into()));
    }
    let total: usize = k
        .elements()
        .iter()
        .map(|kk| hi.compose_unchecked(kk).fixed_point_count())
        .sum();
    if !total.is_multiple_of(k.order()) {
        return Err(Error::Inconsistent(format!(
            "character sum {total} not divisible by |K| = {}",
            k.order()
        )));
    }
    let fixed_blocks = block_orbit(omega, block)
        .iter()
        .filter(|b| b.iter().all(|&x| b.binary_search(&hi.apply(x)).is_ok()))
        .count();
    let value = (total / k.order()) as i64 - (fixed_blocks as i64 - 1);
    let direct = block.iter().filter(|&&x| hi.apply(x) == x).count();
    if value != direct as i64 {
        return Err(Error::Inconsistent(format!(
            "formula gives {value}, direct count {direct}"
        )));
    }
    Ok(direct)
}
