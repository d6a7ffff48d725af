//! Prime decomposition types of number fields given by monic integer
//! polynomials, read off from factorization modulo primes.
//!
//! A prime is treated as ramified when the polynomial is not squarefree
//! modulo it. This catches every ramified prime and also the primes that
//! divide the index of the equation order, which are then skipped on both
//! sides of any comparison.

mod fp;
mod sturm;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{ElemId, GSet};
use crate::perm::CycleType;
use crate::util::{is_prime, primes_below};

pub use sturm::{sturm_signature, Signature};

use fp::Fp;

/// Residue degrees `(f₁, …, f_r)` of the primes above `p`, nondecreasing.
/// At an unramified prime this is the cycle type of Frobenius.
pub type DecompositionType = CycleType;

/// Polynomial with integer coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

const MAX_PARSED_DEGREE: usize = 10_000;

impl IntPolynomial {
    /// Fails on the zero polynomial; trailing zero coefficients are dropped.
    pub fn new(mut coefficients: Vec<BigInt>) -> Result<Self> {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            return Err(Error::PolyParse {
                token: "0".into(),
                reason: "the zero polynomial has no degree".into(),
            });
        }
        Ok(IntPolynomial { coefficients })
    }

    pub fn from_i64(coefficients: &[i64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Parses `"x^7 - 7*x + 3"` style input (the `*` is optional) or a
    /// bracketed coefficient list with the constant term first, such as
    /// `"[3, -7, 0, 0, 0, 0, 0, 1]"`.
    pub fn parse(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(inner) = compact.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| parse_error(&compact, "unclosed bracket"))?;
            let coefficients = inner.split(',').map(parse_integer).collect::<Result<Vec<_>>>()?;
            return Self::new(coefficients);
        }
        Parser {
            text: compact.as_bytes(),
            pos: 0,
        }
        .polynomial()
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn leading_coefficient(&self) -> &BigInt {
        self.coefficients.last().expect("nonzero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_one()
    }

    pub fn derivative(&self) -> IntPolynomial {
        let coefficients: Vec<BigInt> = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::new(coefficients).unwrap_or_else(|_| IntPolynomial {
            coefficients: vec![BigInt::zero()],
        })
    }

    /// Value at an integer point.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    fn reduce(&self, p: u64) -> Vec<u64> {
        let modulus = BigInt::from(p);
        let mut out: Vec<u64> = self
            .coefficients
            .iter()
            .map(|c| c.mod_floor(&modulus).to_u64().expect("residue fits"))
            .collect();
        fp::trim(&mut out);
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                _ if !unit => write!(f, "{magnitude}*")?,
                _ => {}
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

fn parse_error(token: &str, reason: &str) -> Error {
    Error::PolyParse {
        token: token.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_integer(token: &str) -> Result<BigInt> {
    BigInt::parse_bytes(token.as_bytes(), 10).ok_or_else(|| {
        let reason = if token.contains(['.', '/', 'e', 'E']) {
            "coefficients must be integers"
        } else {
            "expected an integer"
        };
        parse_error(token, reason)
    })
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn unexpected(&self) -> Error {
        let rest = core::str::from_utf8(&self.text[self.pos..]).unwrap_or("");
        let token: String = rest.chars().take(1).collect();
        let reason = match token.chars().next() {
            None => "unexpected end of input",
            Some('.' | '/') => "coefficients and exponents must be integers",
            Some(c) if c.is_alphabetic() => "only the variable x is allowed",
            Some(_) => "unexpected character",
        };
        parse_error(if token.is_empty() { "<end>" } else { &token }, reason)
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| core::str::from_utf8(&self.text[start..self.pos]).expect("ascii"))
    }

    fn polynomial(mut self) -> Result<IntPolynomial> {
        let mut terms: BTreeMap<usize, BigInt> = BTreeMap::new();
        let mut first = true;
        while self.pos < self.text.len() || first {
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.unexpected()),
            };
            first = false;
            let (coefficient, exponent) = self.term()?;
            let entry = terms.entry(exponent).or_insert_with(BigInt::zero);
            if negative {
                *entry -= coefficient;
            } else {
                *entry += coefficient;
            }
        }
        let degree = terms.keys().next_back().copied().unwrap_or(0);
        let mut coefficients = vec![BigInt::zero(); degree + 1];
        for (k, c) in terms {
            coefficients[k] = c;
        }
        IntPolynomial::new(coefficients)
    }

    fn term(&mut self) -> Result<(BigInt, usize)> {
        let coefficient = match self.digits() {
            Some(d) => Some(parse_integer(d)?),
            None => None,
        };
        if coefficient.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
            if self.peek() != Some(b'x') {
                return Err(self.unexpected());
            }
        }
        if self.peek() != Some(b'x') {
            return match coefficient {
                Some(c)
                    if !self
                        .peek()
                        .is_some_and(|c| c.is_ascii_alphabetic() || c == b'.' || c == b'/') =>
                {
                    Ok((c, 0))
                }
                _ => Err(self.unexpected()),
            };
        }
        self.pos += 1;
        let mut exponent = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let Some(d) = self.digits() else {
                return Err(self.unexpected());
            };
            exponent = d
                .parse::<usize>()
                .ok()
                .filter(|&e| e <= MAX_PARSED_DEGREE)
                .ok_or_else(|| parse_error(d, "exponent too large"))?;
        }
        if self.peek().is_some_and(|c| !matches!(c, b'+' | b'-')) {
            return Err(self.unexpected());
        }
        Ok((coefficient.unwrap_or_else(BigInt::one), exponent))
    }
}

/// Splitting behaviour of a prime in the field defined by a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// The polynomial is not squarefree modulo the prime.
    Ramified,
    Unramified(DecompositionType),
}

impl Decomposition {
    pub fn residue_degrees(&self) -> Option<&DecompositionType> {
        match self {
            Decomposition::Ramified => None,
            Decomposition::Unramified(t) => Some(t),
        }
    }

    pub fn is_inert(&self) -> bool {
        self.residue_degrees().is_some_and(|t| t.parts().len() == 1)
    }
}

fn check_field_input(f: &IntPolynomial) -> Result<()> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.degree() == 0 {
        return Err(Error::Precondition("the polynomial must have positive degree".into()));
    }
    Ok(())
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > u32::MAX as u64 {
        return Err(Error::PrimeTooLarge(p));
    }
    Ok(())
}

fn decompose_unchecked(f: &IntPolynomial, p: u64) -> Decomposition {
    let field = Fp::new(p);
    let reduced = f.reduce(p);
    let common = field.gcd(&reduced, &field.derivative(&reduced));
    if common.len() > 1 {
        return Decomposition::Ramified;
    }
    let degrees = field.factor_degrees(&reduced);
    Decomposition::Unramified(CycleType::new(degrees).expect("positive degree"))
}

/// Residue degrees of `p` in the field defined by the monic `f`, from
/// distinct-degree factorization of `f mod p`.
pub fn decomposition_type(f: &IntPolynomial, p: u64) -> Result<Decomposition> {
    check_field_input(f)?;
    check_prime(p)?;
    Ok(decompose_unchecked(f, p))
}

fn unramified_sweep(f: &IntPolynomial, bound: u64) -> Result<Vec<(u64, Decomposition)>> {
    check_field_input(f)?;
    if bound > u32::MAX as u64 {
        return Err(Error::PrimeTooLarge(bound));
    }
    Ok(primes_below(bound)
        .into_iter()
        .map(|p| (p, decompose_unchecked(f, p)))
        .collect())
}

/// Primes below `bound` modulo which `f` is not squarefree.
pub fn ramified_primes(f: &IntPolynomial, bound: u64) -> Result<Vec<u64>> {
    Ok(unramified_sweep(f, bound)?
        .into_iter()
        .filter(|(_, d)| *d == Decomposition::Ramified)
        .map(|(p, _)| p)
        .collect())
}

/// Inert and unramified prime counts below a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InertDensity {
    pub inert: u64,
    pub unramified: u64,
}

impl InertDensity {
    /// The exact share of inert primes, in lowest terms.
    pub fn fraction(&self) -> Option<Ratio<u64>> {
        (self.unramified > 0).then(|| Ratio::new(self.inert, self.unramified))
    }

    pub fn approx(&self) -> f64 {
        if self.unramified == 0 {
            0.0
        } else {
            self.inert as f64 / self.unramified as f64
        }
    }

    /// `|inert/unramified − target| ≤ tolerance`, decided exactly.
    pub fn within(&self, target: Ratio<u64>, tolerance: Ratio<u64>) -> bool {
        self.fraction().is_some_and(|x| within(x, target, tolerance))
    }
}

fn within(x: Ratio<u64>, target: Ratio<u64>, tolerance: Ratio<u64>) -> bool {
    let diff = if x > target { x - target } else { target - x };
    diff <= tolerance
}

/// Share of unramified primes below `bound` that are inert.
pub fn inert_density(f: &IntPolynomial, bound: u64) -> Result<InertDensity> {
    if bound < 100 {
        return Err(Error::Precondition("the bound must be at least 100".into()));
    }
    let sweep = unramified_sweep(f, bound)?;
    let unramified = sweep.iter().filter(|(_, d)| *d != Decomposition::Ramified).count() as u64;
    let inert = sweep.iter().filter(|(_, d)| d.is_inert()).count() as u64;
    Ok(InertDensity { inert, unramified })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub prime: u64,
    pub first: DecompositionType,
    pub second: DecompositionType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionComparison {
    pub agree: bool,
    pub first_disagreement: Option<Disagreement>,
    /// Primes ramified for at least one of the polynomials.
    pub skipped_ramified: Vec<u64>,
    pub compared: usize,
}

/// Compares decomposition types at every prime below `bound` that is
/// unramified for both polynomials.
pub fn compare_decompositions(f1: &IntPolynomial, f2: &IntPolynomial, bound: u64) -> Result<DecompositionComparison> {
    if f1.degree() != f2.degree() {
        return Err(Error::DegreeMismatch(f1.degree(), f2.degree()));
    }
    let a = unramified_sweep(f1, bound)?;
    let b = unramified_sweep(f2, bound)?;
    let mut report = DecompositionComparison {
        agree: true,
        first_disagreement: None,
        skipped_ramified: Vec::new(),
        compared: 0,
    };
    for ((p, da), (_, db)) in a.into_iter().zip(b) {
        match (da, db) {
            (Decomposition::Unramified(x), Decomposition::Unramified(y)) => {
                report.compared += 1;
                if x != y && report.agree {
                    report.agree = false;
                    report.first_disagreement = Some(Disagreement {
                        prime: p,
                        first: x,
                        second: y,
                    });
                }
            }
            _ => report.skipped_ramified.push(p),
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebotarevRow {
    pub cycle_type: DecompositionType,
    /// Unramified primes with this decomposition type.
    pub observed: u64,
    /// Elements of the group with this cycle type.
    pub elements: u64,
    /// `observed / unramified` is within the tolerance of `elements / |G|`.
    pub within_tolerance: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebotarevReport {
    pub group_order: u64,
    pub unramified: u64,
    /// All cycle types occurring in the action or among the primes, sorted.
    pub rows: Vec<ChebotarevRow>,
    /// Observed types that no group element realizes.
    pub unexplained: Vec<DecompositionType>,
    pub tolerance: Ratio<u64>,
    pub consistent: bool,
}

/// Checks observed decomposition types against the cycle types of the
/// asserted Galois action `omega`: every observed type must occur, and each
/// observed share must be within `tolerance` of the share of group elements
/// with that cycle type.
pub fn chebotarev_consistency(
    omega: &GSet,
    f: &IntPolynomial,
    bound: u64,
    tolerance: Ratio<u64>,
) -> Result<ChebotarevReport> {
    if omega.degree() != f.degree() {
        return Err(Error::DegreeMismatch(omega.degree(), f.degree()));
    }
    let group_order = omega.group().order() as u64;
    let mut counts: BTreeMap<CycleType, (u64, u64)> = BTreeMap::new();
    for e in 0..group_order as ElemId {
        counts.entry(omega.image(e).cycle_type()).or_default().1 += 1;
    }
    let mut unramified = 0;
    for (_, d) in unramified_sweep(f, bound)? {
        if let Decomposition::Unramified(t) = d {
            unramified += 1;
            counts.entry(t).or_default().0 += 1;
        }
    }
    if unramified == 0 {
        return Err(Error::Precondition("no unramified primes below the bound".into()));
    }
    let rows: Vec<ChebotarevRow> = counts
        .into_iter()
        .map(|(cycle_type, (observed, elements))| ChebotarevRow {
            within_tolerance: within(
                Ratio::new(observed, unramified),
                Ratio::new(elements, group_order),
                tolerance,
            ),
            cycle_type,
            observed,
            elements,
        })
        .collect();
    let unexplained: Vec<CycleType> = rows
        .iter()
        .filter(|r| r.elements == 0)
        .map(|r| r.cycle_type.clone())
        .collect();
    let consistent = unexplained.is_empty() && rows.iter().all(|r| r.within_tolerance);
    Ok(ChebotarevReport {
        group_order,
        unramified,
        rows,
        unexplained,
        tolerance,
        consistent,
    })
}

/// Polynomials defining two pairs of arithmetically equivalent fields, of
/// degrees 7 and 11.
pub const SEPTIC_PAIR: [&str; 2] = ["x^7 - 7*x + 3", "x^7 + 14*x^4 - 42*x^2 - 21*x + 9"];
pub const UNDECIC_PAIR: [&str; 2] = [
    "x^11 - 2*x^10 + 3*x^9 + 2*x^8 - 5*x^7 + 16*x^6 - 10*x^5 + 10*x^4 + 2*x^3 - 3*x^2 + 4*x - 1",
    "x^11 - 2*x^10 + x^9 - 5*x^8 + 13*x^7 - 9*x^6 + x^5 - 8*x^4 + 9*x^3 - 3*x^2 - 2*x + 1",
];

/// Renders a fraction as `num/den`.
pub fn format_ratio(r: &Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> IntPolynomial {
        IntPolynomial::parse(s).unwrap()
    }

    fn ty(parts: &[u32]) -> Decomposition {
        Decomposition::Unramified(CycleType::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn parse_and_display() {
        let f = poly("x^7-7*x+3");
        assert_eq!(f, IntPolynomial::from_i64(&[3, -7, 0, 0, 0, 0, 0, 1]).unwrap());
        assert_eq!(f.to_string(), "x^7 - 7*x + 3");
        assert_eq!(poly(" - x^2 + 2 x + x - 1").to_string(), "-x^2 + 3*x - 1");
        assert_eq!(poly("[3, -7, 0, 0, 0, 0, 0, 1]"), f);
        assert_eq!(poly("5"), IntPolynomial::from_i64(&[5]).unwrap());
        for s in SEPTIC_PAIR.iter().chain(&UNDECIC_PAIR) {
            assert_eq!(poly(&poly(s).to_string()), poly(s));
        }
    }

    #[test]
    fn parse_rejects_bad_input() {
        for bad in [
            "x^2 + 1.5",
            "x^2 + y",
            "x^2.5",
            "1/2*x",
            "x^",
            "",
            "x^2 +",
            "x x",
            "2*",
            "x^2 - x^2",
            "[1, 2",
        ] {
            assert!(
                matches!(IntPolynomial::parse(bad), Err(Error::PolyParse { .. })),
                "{bad:?} parsed"
            );
        }
        match IntPolynomial::parse("x^2 + y") {
            Err(Error::PolyParse { token, reason }) => {
                assert_eq!(token, "y");
                assert!(reason.contains("variable"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(decomposition_type(&poly("x^7-7*x+3"), 2).unwrap(), ty(&[7]));
        assert_eq!(decomposition_type(&poly("x^2+1"), 5).unwrap(), ty(&[1, 1]));
        assert_eq!(decomposition_type(&poly("x^2+1"), 3).unwrap(), ty(&[2]));
        assert_eq!(decomposition_type(&poly("x^2+1"), 2).unwrap(), Decomposition::Ramified);
        assert_eq!(decomposition_type(&poly("x^2+1"), 4), Err(Error::NotPrime(4)));
        assert_eq!(decomposition_type(&poly("2*x^2+1"), 5), Err(Error::NotMonic));
        // x^4 - 1 = (x-1)(x+1)(x^2+1) mod 7
        assert_eq!(decomposition_type(&poly("x^4-1"), 7).unwrap(), ty(&[1, 1, 2]));
    }

    #[test]
    fn ramified_examples() {
        assert_eq!(ramified_primes(&poly("x^2+1"), 100).unwrap(), vec![2]);
        assert_eq!(ramified_primes(&poly("x^2-2"), 100).unwrap(), vec![2]);
    }

    #[test]
    fn signature_examples() {
        let sig = |s| sturm_signature(&poly(s)).unwrap();
        assert_eq!(
            sig("x^2+1"),
            Signature {
                real_places: 0,
                complex_places: 1
            }
        );
        assert_eq!(
            sig("x^2-2"),
            Signature {
                real_places: 2,
                complex_places: 0
            }
        );
        assert_eq!(
            sig("x^7-7*x+3"),
            Signature {
                real_places: 3,
                complex_places: 2
            }
        );
        assert_eq!(
            sig("x^3-x"),
            Signature {
                real_places: 3,
                complex_places: 0
            }
        );
        assert_eq!(
            sig("-x^3+x"),
            Signature {
                real_places: 3,
                complex_places: 0
            }
        );
        assert_eq!(sig("x^5+x+1").real_places + 2 * sig("x^5+x+1").complex_places, 5);
        assert_eq!(sturm_signature(&poly("x^2-2*x+1")), Err(Error::NotSquarefree));
        assert_eq!(sturm_signature(&poly("x^3+2*x^2+x")), Err(Error::NotSquarefree));
    }

    #[test]
    fn comparison_examples() {
        let f = poly("x^2+1");
        assert!(compare_decompositions(&f, &f, 1000).unwrap().agree);
        let r = compare_decompositions(&f, &poly("x^2-2"), 100).unwrap();
        assert!(!r.agree);
        let d = r.first_disagreement.unwrap();
        assert_eq!(d.prime, 5);
        assert_eq!(Decomposition::Unramified(d.first), ty(&[1, 1]));
        assert_eq!(Decomposition::Unramified(d.second), ty(&[2]));
        assert_eq!(r.skipped_ramified, vec![2]);
        assert_eq!(
            compare_decompositions(&f, &poly("x^3+1"), 100),
            Err(Error::DegreeMismatch(2, 3))
        );
    }

    #[test]
    fn density_of_gaussian_field() {
        let d = inert_density(&poly("x^2+1"), 100_000).unwrap();
        assert!(d.within(Ratio::new(1, 2), Ratio::new(1, 50)));
        // inert exactly when p = 3 mod 4
        let expected = primes_below(100_000).iter().filter(|&&p| p % 4 == 3).count() as u64;
        assert_eq!(d.inert, expected);
        assert!(inert_density(&poly("x^2+1"), 50).is_err());
    }
}
