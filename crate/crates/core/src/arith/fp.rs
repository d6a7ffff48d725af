//! Dense polynomials over a prime field `F_p` with `p < 2³²`, stored
//! constant term first with no trailing zeros (the zero polynomial is empty).

use alloc::vec;
use alloc::vec::Vec;

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Degree, with the zero polynomial reported as `None`.
pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    p: u64,
}

impl Fp {
    pub(crate) fn new(p: u64) -> Self {
        debug_assert!(p >= 2 && p <= u32::MAX as u64);
        Fp { p }
    }

    fn mul_scalar(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub(crate) fn inv(&self, a: u64) -> u64 {
        let (mut base, mut e, mut acc) = (a % self.p, self.p - 2, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_scalar(acc, base);
            }
            base = self.mul_scalar(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn sub(&self, a: &[u64], b: &[u64]) -> Poly {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            *o = (x + self.p - y) % self.p;
        }
        trim(&mut out);
        out
    }

    pub(crate) fn mul(&self, a: &[u64], b: &[u64]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(&mut out);
        out
    }

    /// Quotient and remainder of `a` by a nonzero `m`.
    pub(crate) fn div_rem(&self, a: &[u64], m: &[u64]) -> (Poly, Poly) {
        let dm = degree(m).expect("division by the zero polynomial");
        let lead_inv = self.inv(m[dm]);
        let mut r: Poly = a.to_vec();
        trim(&mut r);
        let mut q = vec![0; r.len().saturating_sub(dm)];
        while let Some(dr) = degree(&r) {
            if dr < dm {
                break;
            }
            let c = self.mul_scalar(r[dr], lead_inv);
            let shift = dr - dm;
            q[shift] = c;
            for (j, &y) in m.iter().enumerate() {
                r[shift + j] = (r[shift + j] + self.p - self.mul_scalar(c, y)) % self.p;
            }
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    pub(crate) fn rem(&self, a: &[u64], m: &[u64]) -> Poly {
        self.div_rem(a, m).1
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub(crate) fn gcd(&self, a: &[u64], b: &[u64]) -> Poly {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        if let Some(&lead) = a.last() {
            let li = self.inv(lead);
            for c in a.iter_mut() {
                *c = self.mul_scalar(*c, li);
            }
        }
        a
    }

    pub(crate) fn derivative(&self, a: &[u64]) -> Poly {
        let mut out: Poly = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul_scalar(i as u64 % self.p, c))
            .collect();
        trim(&mut out);
        out
    }

    /// `a^e mod m` by repeated squaring.
    pub(crate) fn pow_mod(&self, a: &[u64], mut e: u64, m: &[u64]) -> Poly {
        let mut base = self.rem(a, m);
        let mut acc = self.rem(&[1], m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), m);
            }
            e >>= 1;
            if e > 0 {
                base = self.rem(&self.mul(&base, &base), m);
            }
        }
        acc
    }

    /// Degrees of the irreducible factors of a monic squarefree `f`, in
    /// nondecreasing order, by distinct-degree factorization.
    pub(crate) fn factor_degrees(&self, f: &[u64]) -> Vec<u32> {
        let x: Poly = vec![0, 1];
        let mut g: Poly = f.to_vec();
        let mut h = self.rem(&x, &g);
        let mut out = Vec::new();
        let mut d = 1;
        while degree(&g).is_some_and(|n| n >= 2 * d) {
            // h = x^(p^d) mod g
            h = self.pow_mod(&h, self.p, &g);
            let common = self.gcd(&g, &self.sub(&h, &x));
            let k = degree(&common).unwrap_or(0);
            if k > 0 {
                out.extend(core::iter::repeat_n(d as u32, k / d));
                g = self.div_rem(&g, &common).0;
                h = self.rem(&h, &g);
            }
            d += 1;
        }
        if let Some(n) = degree(&g) {
            if n > 0 {
                out.push(n as u32);
            }
        }
        out.sort_unstable();
        out
    }
}
