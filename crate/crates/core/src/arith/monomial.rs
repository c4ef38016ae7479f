use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Hard cap on the number of variables in any polynomial ring, including
/// auxiliary variables introduced for elimination and radical membership.
pub const MAX_VARS: usize = 8;

/// Exponent vector. Unused trailing slots are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS] };

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m
    }

    pub fn var_pow(i: usize, e: u16) -> Self {
        let mut m = Monomial::ONE;
        m.exps[i] = e;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Degree restricted to the variables `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, e) in out.exps.iter_mut().zip(other.exps.iter()) {
            *o = o.checked_add(*e).expect("exponent overflow");
        }
        out
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = *self;
        for (o, e) in out.exps.iter_mut().zip(other.exps.iter()) {
            *o = o.checked_add(*e).ok_or_else(|| Error::budget("exponent_overflow", "monomial exponent overflow"))?;
        }
        Ok(out)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = *other;
        for (o, e) in out.exps.iter_mut().zip(self.exps.iter()) {
            *o -= *e;
        }
        out
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, e) in out.exps.iter_mut().zip(other.exps.iter()) {
            *o = (*o).max(*e);
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this monomial is a pure power `x_i^e` with `e > 0`, returns `i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Drops variable `i`, shifting later variables down.
    pub fn remove_var(&self, i: usize) -> Monomial {
        let mut out = Monomial::ONE;
        let mut k = 0;
        for (j, &e) in self.exps.iter().enumerate() {
            if j != i {
                out.exps[k] = e;
                k += 1;
            }
        }
        out
    }

    /// Inserts a fresh variable at position `i` with exponent `e`.
    pub fn insert_var(&self, i: usize, e: u16) -> Monomial {
        assert!(self.exps[MAX_VARS - 1] == 0, "no room for an extra variable");
        let mut out = Monomial::ONE;
        out.exps[..i].copy_from_slice(&self.exps[..i]);
        out.exps[i] = e;
        out.exps[i + 1..].copy_from_slice(&self.exps[i..MAX_VARS - 1]);
        out
    }

    /// All monomials of total degree `d` in `n` variables, in ascending
    /// lexicographic order of exponent vectors read from the last variable.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = [0u16; MAX_VARS];
        fn rec(n: usize, i: usize, left: u32, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
            if i + 1 == n {
                cur[i] = left as u16;
                out.push(Monomial { exps: *cur });
                cur[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(n, i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial::ONE);
            }
            return out;
        }
        rec(n, 0, d, &mut cur, &mut out);
        out
    }
}

/// Graded reverse lexicographic comparison on the first `n` variables.
#[inline]
pub fn cmp_degrevlex(a: &Monomial, b: &Monomial, range: std::ops::Range<usize>) -> Ordering {
    let da = a.partial_degree(range.clone());
    let db = b.partial_degree(range.clone());
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in range.rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable is larger
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}
