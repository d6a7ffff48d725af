//! Permutations of `{0, .., n-1}` and their cycle structure.
//!
//! Points are 0-based everywhere inside the library. The cycle-notation
//! parser and the `Display` impl are the only places that speak the 1-based
//! convention used in text.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::PermError;
use crate::util::lcm;

/// A bijection of `{0, .., n-1}` stored as its image array.
///
/// The derived `Ord` is lexicographic on the image array, which is the
/// canonical order used for sorting elements and picking representatives.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        if images.is_empty() {
            return Err(PermError::EmptyDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(PermError::NotBijection);
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::EmptyDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &x in cycle.iter() {
                if x as usize >= degree {
                    return Err(PermError::PointOutOfRange {
                        point: x as usize + 1,
                        degree,
                    });
                }
                if used[x as usize] {
                    return Err(PermError::RepeatedPoint { point: x as usize + 1 });
                }
                used[x as usize] = true;
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// The product `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self` composed with itself `exponent` times; negative exponents use
    /// the inverse.
    pub fn pow(&self, exponent: i64) -> Permutation {
        // Walk each cycle once instead of repeated composition.
        let n = self.degree();
        let mut images = vec![0u32; n];
        let mut visited = vec![false; n];
        let mut cycle = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            cycle.clear();
            let mut x = start as u32;
            while !visited[x as usize] {
                visited[x as usize] = true;
                cycle.push(x);
                x = self.images[x as usize];
            }
            let len = cycle.len() as i64;
            let shift = exponent.rem_euclid(len) as usize;
            for (i, &x) in cycle.iter().enumerate() {
                images[x as usize] = cycle[(i + shift) % cycle.len()];
            }
        }
        Permutation { images }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation, PermError> {
        g.inverse().compose(&self.compose(g)?)
    }

    /// Nontrivial cycles, each starting at its least point, sorted by least
    /// point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if visited[start] || self.images[start] as usize == start {
                visited[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start as u32;
            while !visited[x as usize] {
                visited[x as usize] = true;
                cycle.push(x);
                x = self.images[x as usize];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut len = 0u32;
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            parts.push(len);
        }
        parts.sort_unstable();
        CycleType { parts }
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        (0..self.degree() as u32)
            .filter(|&x| self.images[x as usize] == x)
            .collect()
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &x)| i as u32 == x).count()
    }

    /// Moved points, ascending.
    pub fn support(&self) -> Vec<u32> {
        (0..self.degree() as u32)
            .filter(|&x| self.images[x as usize] != x)
            .collect()
    }

    /// True when the permutation has exactly one cycle of length at least 2.
    pub fn is_cycle(&self) -> bool {
        self.cycles().len() == 1
    }

    /// Least `m ≥ 1` with `self^m = id`.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .parts()
            .iter()
            .fold(1u64, |acc, &p| lcm(acc, p as u64))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle notation, 1-based, fixed points omitted, `()` for the
    /// identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Parses 1-based disjoint-cycle notation such as `"(1 2 3)(4 5)"`.
///
/// Points may be separated by whitespace or commas. `"()"` and the empty
/// string give the identity.
pub fn parse_cycle_notation(text: &str, degree: usize) -> Result<Permutation, PermError> {
    if degree == 0 {
        return Err(PermError::EmptyDegree);
    }
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut current: Option<Vec<u32>> = None;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b'(' => {
                if current.is_some() {
                    return Err(parse_err("(", "nested parenthesis"));
                }
                current = Some(Vec::new());
                i += 1;
            }
            b')' => {
                let cycle = current
                    .take()
                    .ok_or_else(|| parse_err(")", "unmatched closing parenthesis"))?;
                for (k, &x) in cycle.iter().enumerate() {
                    images[x as usize] = cycle[(k + 1) % cycle.len()];
                }
                i += 1;
            }
            b',' => {
                if current.is_none() {
                    return Err(parse_err(",", "separator outside a cycle"));
                }
                i += 1;
            }
            c if c.is_ascii_whitespace() => i += 1,
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let token = &text[start..i];
                let cycle = current
                    .as_mut()
                    .ok_or_else(|| parse_err(token, "point outside a cycle"))?;
                let point: usize = token
                    .parse()
                    .map_err(|_| parse_err(token, "point does not fit a machine integer"))?;
                if point == 0 || point > degree {
                    return Err(PermError::PointOutOfRange { point, degree });
                }
                if used[point - 1] {
                    return Err(PermError::RepeatedPoint { point });
                }
                used[point - 1] = true;
                cycle.push((point - 1) as u32);
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(parse_err(&ch.to_string(), "unexpected character"));
            }
        }
    }
    if current.is_some() {
        return Err(parse_err("(", "unclosed parenthesis"));
    }
    Ok(Permutation { images })
}

fn parse_err(token: &str, reason: &str) -> PermError {
    PermError::Parse {
        token: String::from(token),
        reason: String::from(reason),
    }
}

/// Multiset of cycle lengths, nondecreasing, fixed points counted as 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    parts: Vec<u32>,
}

impl CycleType {
    /// Sorts the given parts. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return None;
        }
        parts.sort_unstable();
        Some(CycleType { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn count(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    pub fn lcm(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| lcm(acc, p as u64))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}
