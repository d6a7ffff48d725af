//! Loading groups, subgroups and polynomials from catalog names, strings
//! and files.
//!
//! A group file has a `degree <n>` line followed by one generator per line
//! in cycle notation; `#` starts a comment.

use std::path::Path;
use std::sync::Arc;

use gassmann_core::arith::IntPolynomial;
use gassmann_core::catalog::{builtin_group, BuiltinGroup};
use gassmann_core::group::DEFAULT_ELEMENT_CAP;
use gassmann_core::{generate_elements, parse_cycle_notation, GSet, Permutation, Subgroup};

use crate::CliError;

pub struct Caps {
    pub elements: usize,
    pub subgroups: usize,
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

/// Degree and generators from group-file text.
pub fn parse_group_file(text: &str) -> Result<(usize, Vec<Permutation>), CliError> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| CliError::Input("group file is empty".into()))?;
    let degree = header
        .strip_prefix("degree")
        .and_then(|d| d.trim().parse::<usize>().ok())
        .filter(|&d| d > 0)
        .ok_or_else(|| CliError::Input(format!("expected `degree <n>`, found `{header}`")))?;
    let generators = lines
        .map(|l| parse_cycle_notation(l, degree).map_err(|e| CliError::Input(format!("generator `{l}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if generators.is_empty() {
        return Err(CliError::Input("group file lists no generators".into()));
    }
    Ok((degree, generators))
}

/// A catalog group, or a group file (which gets only `point_stab`).
pub fn load_group(spec: &str, caps: &Caps) -> Result<BuiltinGroup, CliError> {
    if Path::new(spec).is_file() {
        let (_, generators) = parse_group_file(&read_file(spec)?)?;
        let group = Arc::new(generate_elements(&generators, caps.elements)?);
        let point_stab = GSet::natural(Arc::clone(&group)).point_stabilizer(0);
        return Ok(BuiltinGroup {
            name: spec.to_string(),
            group,
            subgroups: vec![("point_stab".to_string(), point_stab)],
        });
    }
    Ok(builtin_group(spec, caps.elements)?)
}

/// A named subgroup of `group`, or the subgroup generated by a file.
pub fn load_subgroup(group: &BuiltinGroup, spec: &str) -> Result<Subgroup, CliError> {
    if Path::new(spec).is_file() {
        let (degree, generators) = parse_group_file(&read_file(spec)?)?;
        if degree != group.group.degree() {
            return Err(CliError::Input(format!(
                "subgroup file has degree {degree}, group has degree {}",
                group.group.degree()
            )));
        }
        return Ok(group.group.subgroup_generated_by(&generators)?);
    }
    Ok(group.subgroup(spec)?.clone())
}

/// The coset action on `h1`, or the natural action.
pub fn load_action(group: &BuiltinGroup, h1: Option<&str>) -> Result<GSet, CliError> {
    match h1 {
        None => Ok(group.natural_action()),
        Some(spec) => Ok(GSet::coset_action(&group.group, &load_subgroup(group, spec)?)?),
    }
}

pub fn load_poly(spec: &str) -> Result<IntPolynomial, CliError> {
    let text = match spec.strip_prefix('@') {
        Some(path) => read_file(path)?,
        None => spec.to_string(),
    };
    Ok(IntPolynomial::parse(text.trim())?)
}

pub fn caps(cap: Option<usize>) -> Caps {
    match cap {
        Some(c) => Caps {
            elements: c,
            subgroups: c,
        },
        None => Caps {
            elements: DEFAULT_ELEMENT_CAP,
            subgroups: gassmann_core::group::DEFAULT_SUBGROUP_CAP,
        },
    }
}
