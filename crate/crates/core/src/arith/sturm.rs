//! Real-root counting by Sturm sequences over the integers.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Numbers of real and complex places `(r₁, r₂)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    pub real_places: usize,
    pub complex_places: usize,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.real_places, self.complex_places)
    }
}

fn trim(a: &mut Vec<BigInt>) {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
}

/// Divides out the positive content, keeping signs.
fn primitive_part(mut a: Vec<BigInt>) -> Vec<BigInt> {
    let content = a.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in a.iter_mut() {
            *c /= &content;
        }
    }
    a
}

/// A polynomial with the sign of the Euclidean remainder `a mod b`, scaled
/// by a positive rational and reduced to its primitive part.
fn signed_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lead = b.last().expect("nonzero divisor");
    let db = b.len() - 1;
    let mut r: Vec<BigInt> = a.to_vec();
    let mut steps = 0u32;
    while r.len() > db && !r.is_empty() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lead;
        }
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &lr * y;
        }
        trim(&mut r);
        steps += 1;
    }
    // r = lead^steps · (a mod b); undo the sign of lead^steps
    if lead.is_negative() && steps % 2 == 1 {
        for c in r.iter_mut() {
            *c = -core::mem::take(c);
        }
    }
    primitive_part(r)
}

fn sign_changes(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::NoSign;
    let mut changes = 0;
    for s in signs.filter(|&s| s != Sign::NoSign) {
        if last != Sign::NoSign && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Counts real roots with Sturm's theorem and returns `(r₁, r₂)`.
///
/// Fails with [`Error::NotSquarefree`] when `f` has a repeated complex root,
/// which shows up as a nonconstant last term of the Sturm sequence.
pub fn sturm_signature(f: &IntPolynomial) -> Result<Signature> {
    let n = f.degree();
    let mut seq: Vec<Vec<BigInt>> = Vec::new();
    seq.push(primitive_part(f.coefficients().to_vec()));
    let derivative = primitive_part(f.derivative().coefficients().to_vec());
    if !derivative.is_empty() {
        seq.push(derivative);
    }
    while seq.len() >= 2 {
        let k = seq.len();
        let r = signed_remainder(&seq[k - 2], &seq[k - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    if seq.last().expect("nonempty").len() > 1 {
        return Err(Error::NotSquarefree);
    }
    let at_plus = sign_changes(seq.iter().map(|p| p.last().expect("nonzero").sign()));
    let at_minus = sign_changes(seq.iter().map(|p| {
        let s = p.last().expect("nonzero").sign();
        if (p.len() - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    let real = at_minus - at_plus;
    Ok(Signature {
        real_places: real,
        complex_places: (n - real) / 2,
    })
}
