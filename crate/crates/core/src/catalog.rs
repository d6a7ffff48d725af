//! Named groups with standard generators.
//!
//! The `gl3_2` and `psl2_11` generators were derived from matrices by
//! `tools/derive_catalog.py`; the unit tests below recompute them from the
//! matrices.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{generate_elements, GSet, PermGroup, Subgroup};
use crate::perm::{parse_cycle_notation, Permutation};

/// Fano plane: points are the nonzero vectors of F₂³ read as 3-bit integers.
const GL3_2_GENERATORS: [&str; 2] = ["(2 3)(6 7)", "(1 2 4 3 6 7 5)"];
const GL3_2_POINT_STAB: [&str; 2] = ["(4 6)(5 7)", "(2 4 3 5)(6 7)"];
/// Stabilizer of the line {1, 2, 3}.
const GL3_2_LINE_STAB: [&str; 2] = ["(2 3)(6 7)", "(1 2)(4 5 7 6)"];

/// Projective line over F₁₁: `x ↦ x + 1` and `x ↦ -1/x`, point 12 is ∞.
const PSL2_11_GENERATORS: [&str; 2] = ["(1 2 3 4 5 6 7 8 9 10 11)", "(1 12)(2 11)(3 6)(4 8)(5 9)(7 10)"];
const PSL2_11_A5_1: [&str; 2] = ["(3 4 10 11 7)(5 12 9 6 8)", "(1 3)(2 6)(4 8)(5 12)(7 9)(10 11)"];
const PSL2_11_A5_2: [&str; 2] = ["(3 4 10 11 7)(5 12 9 6 8)", "(1 3)(2 12)(4 7)(5 9)(6 10)(8 11)"];

pub const CATALOG_NAMES: [&str; 7] = [
    "sym:<n>",
    "alt:<n>",
    "cyclic:<n>",
    "dihedral:<n>",
    "frobenius20",
    "gl3_2",
    "psl2_11",
];

/// A catalog group together with its named subgroups.
#[derive(Clone, Debug)]
pub struct BuiltinGroup {
    pub name: String,
    pub group: Arc<PermGroup>,
    pub subgroups: Vec<(String, Subgroup)>,
}

impl BuiltinGroup {
    pub fn subgroup(&self, name: &str) -> Result<&Subgroup> {
        self.subgroups
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| Error::UnknownSubgroup {
                name: name.to_string(),
                available: self
                    .subgroups
                    .iter()
                    .map(|(n, _)| n.as_str())
                    .collect::<Vec<_>>()
                    .join(", "),
            })
    }

    pub fn natural_action(&self) -> GSet {
        GSet::natural(Arc::clone(&self.group))
    }
}

fn parse_all(texts: &[&str], degree: usize) -> Vec<Permutation> {
    texts
        .iter()
        .map(|t| parse_cycle_notation(t, degree).expect("catalog strings are valid"))
        .collect()
}

fn cycle(n: usize, points: impl Iterator<Item = usize>) -> Permutation {
    let pts: Vec<u32> = points.map(|p| p as u32).collect();
    Permutation::from_cycles(n, &[&pts]).expect("valid cycle")
}

fn named_generators(name: &str, kind: &str, n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(unknown(name));
    }
    let full = || cycle(n, 0..n);
    let gens = match kind {
        "sym" if n <= 2 => [full()].into(),
        "sym" => [cycle(n, 0..2), full()].into(),
        "alt" if n <= 2 => [Permutation::identity(n)].into(),
        "alt" if n == 3 => [cycle(3, 0..3)].into(),
        "alt" if n % 2 == 1 => [cycle(n, 0..3), full()].into(),
        "alt" => [cycle(n, 0..3), cycle(n, 1..n)].into(),
        "cyclic" => [full()].into(),
        "dihedral" if n >= 3 => {
            let mut reflection: Vec<u32> = (0..n as u32).collect();
            for (i, r) in reflection.iter_mut().enumerate() {
                *r = ((n - i) % n) as u32;
            }
            [full(), Permutation::from_images(reflection)?].into()
        }
        _ => return Err(unknown(name)),
    };
    Ok(gens)
}

fn unknown(name: &str) -> Error {
    Error::UnknownGroup {
        name: name.to_string(),
        catalog: CATALOG_NAMES.join(", "),
    }
}

/// Looks up a catalog group by name, e.g. `"sym:4"` or `"gl3_2"`.
///
/// Every entry exposes `point_stab` (the stabilizer of point 1); `gl3_2`
/// adds `line_stab` and `psl2_11` adds `a5_1`, `a5_2`.
pub fn builtin_group(name: &str, cap: usize) -> Result<BuiltinGroup> {
    let (group, extra): (PermGroup, Vec<(&str, Vec<Permutation>)>) = match name {
        "frobenius20" => (
            generate_elements(&parse_all(&["(1 2 3 4 5)", "(2 3 5 4)"], 5), cap)?,
            Vec::new(),
        ),
        "gl3_2" => (
            generate_elements(&parse_all(&GL3_2_GENERATORS, 7), cap)?,
            [
                ("point_stab", parse_all(&GL3_2_POINT_STAB, 7)),
                ("line_stab", parse_all(&GL3_2_LINE_STAB, 7)),
            ]
            .into(),
        ),
        "psl2_11" => (
            generate_elements(&parse_all(&PSL2_11_GENERATORS, 12), cap)?,
            [
                ("a5_1", parse_all(&PSL2_11_A5_1, 12)),
                ("a5_2", parse_all(&PSL2_11_A5_2, 12)),
            ]
            .into(),
        ),
        _ => {
            let (kind, n) = name.split_once(':').ok_or_else(|| unknown(name))?;
            let n: usize = n.parse().map_err(|_| unknown(name))?;
            (generate_elements(&named_generators(name, kind, n)?, cap)?, Vec::new())
        }
    };
    let group = Arc::new(group);
    let mut subgroups = Vec::new();
    let natural = GSet::natural(Arc::clone(&group));
    subgroups.push(("point_stab".to_string(), natural.point_stabilizer(0)));
    for (sub_name, gens) in extra {
        let sub = group.subgroup_generated_by(&gens)?;
        if let Some(slot) = subgroups.iter_mut().find(|(n, _)| n == sub_name) {
            slot.1 = sub;
        } else {
            subgroups.push((sub_name.to_string(), sub));
        }
    }
    Ok(BuiltinGroup {
        name: name.to_string(),
        group,
        subgroups,
    })
}
