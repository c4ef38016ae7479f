use std::cmp::Ordering;
use std::sync::Arc;

use super::field::{PrimeField, Scalar};
use super::monomial::{cmp_degrevlex, Monomial, MAX_VARS};
use crate::error::{Error, Result};

/// Monomial order on a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum OrderSpec {
    #[default]
    DegRevLex,
    /// Elimination order for the first `k` variables: degrevlex on the
    /// first block, ties broken by degrevlex on the rest.
    Elimination(usize),
}

impl OrderSpec {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        match *self {
            OrderSpec::DegRevLex => cmp_degrevlex(a, b, 0..nvars),
            OrderSpec::Elimination(k) => cmp_degrevlex(a, b, 0..k).then_with(|| cmp_degrevlex(a, b, k..nvars)),
        }
    }
}

/// A polynomial ring `F_p[vars]` together with its monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    vars: Arc<[String]>,
    order: OrderSpec,
}

/// Polynomial with terms sorted strictly descending in the ring's order and
/// no zero coefficients. Only meaningful together with its [`PolyRing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Scalar {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| *c).unwrap_or(0)
    }

    /// Total degree if every term has the same degree; `None` for zero or
    /// inhomogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Builds a polynomial from terms already sorted and nonzero.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, Scalar)>) -> Self {
        Poly { terms }
    }
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>, order: OrderSpec) -> Result<Self> {
        if vars.len() > MAX_VARS {
            return Err(Error::input("too_many_variables", format!("at most {MAX_VARS} variables are supported")));
        }
        for (i, v) in vars.iter().enumerate() {
            let valid = !v.is_empty()
                && v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::input("bad_variable", format!("invalid variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::input("bad_variable", format!("duplicate variable {v:?}")));
            }
        }
        if let OrderSpec::Elimination(k) = order {
            if k > vars.len() {
                return Err(Error::input("bad_order", "elimination block larger than variable list"));
            }
        }
        Ok(PolyRing { field, vars: vars.into(), order })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> OrderSpec {
        self.order
    }

    pub fn with_order(&self, order: OrderSpec) -> PolyRing {
        PolyRing { field: self.field, vars: self.vars.clone(), order }
    }

    /// The ring with one extra variable `name` inserted at position `at`.
    pub fn with_extra_var(&self, at: usize, name: &str, order: OrderSpec) -> Result<PolyRing> {
        let mut vars: Vec<String> = self.vars.to_vec();
        vars.insert(at, name.to_string());
        PolyRing::new(self.field, vars, order)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, self.vars.len())
    }

    pub fn constant(&self, c: Scalar) -> Poly {
        self.monomial(Monomial::ONE, c)
    }

    pub fn one(&self) -> Poly {
        self.constant(1)
    }

    pub fn var(&self, i: usize) -> Poly {
        assert!(i < self.nvars());
        self.monomial(Monomial::var(i), 1)
    }

    pub fn monomial(&self, m: Monomial, c: Scalar) -> Poly {
        let c = c % self.field.characteristic();
        if c == 0 {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Canonicalizes an arbitrary list of terms.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, Scalar)>) -> Poly {
        let p = self.field.characteristic();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % p;
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Poly { terms: out }
    }

    /// Re-sorts a polynomial that was built for a ring with the same
    /// variables but a different order.
    pub fn adopt(&self, p: &Poly) -> Poly {
        let mut terms = p.terms.clone();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        Poly { terms }
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.add_scaled(a, b, 1, &Monomial::ONE)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.add_scaled(a, b, self.field.neg(1), &Monomial::ONE)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        self.scale(a, self.field.neg(1))
    }

    pub fn scale(&self, a: &Poly, c: Scalar) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|(m, x)| (*m, self.field.mul(*x, c))).collect() }
    }

    /// `a + c * m * b`, merging in one pass.
    pub fn add_scaled(&self, a: &Poly, b: &Poly, c: Scalar, m: &Monomial) -> Poly {
        if c == 0 || b.is_zero() {
            return a.clone();
        }
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut i = 0;
        let mut bi = b.terms.iter().map(|(bm, bc)| (bm.mul(m), f.mul(*bc, c))).peekable();
        while i < a.terms.len() || bi.peek().is_some() {
            match (a.terms.get(i), bi.peek()) {
                (Some(at), Some(bt)) => match self.cmp(&at.0, &bt.0) {
                    Ordering::Greater => {
                        out.push(*at);
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(*bt);
                        bi.next();
                    }
                    Ordering::Equal => {
                        let s = f.add(at.1, bt.1);
                        if s != 0 {
                            out.push((at.0, s));
                        }
                        i += 1;
                        bi.next();
                    }
                },
                (Some(at), None) => {
                    out.push(*at);
                    i += 1;
                }
                (None, Some(bt)) => {
                    out.push(*bt);
                    bi.next();
                }
                (None, None) => unreachable!(),
            }
        }
        Poly { terms: out }
    }

    pub fn mul_term(&self, a: &Poly, m: &Monomial, c: Scalar) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        // multiplication by a monomial preserves the order of terms
        Poly { terms: a.terms.iter().map(|(am, ac)| (am.mul(m), self.field.mul(*ac, c))).collect() }
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc = Poly::zero();
        for (m, c) in &small.terms {
            acc = self.add_scaled(&acc, large, *c, m);
        }
        acc
    }

    pub fn pow(&self, a: &Poly, e: u32) -> Poly {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self, a: &Poly) -> Poly {
        match a.leading() {
            Some((_, c)) if *c != 1 => self.scale(a, self.field.inv(*c)),
            _ => a.clone(),
        }
    }

    /// Substitutes variable `i` by zero.
    pub fn set_var_zero(&self, a: &Poly, i: usize) -> Poly {
        Poly { terms: a.terms.iter().filter(|(m, _)| m.exp(i) == 0).copied().collect() }
    }

    /// Keeps only the terms of total degree `d`.
    pub fn homogeneous_part(&self, a: &Poly, d: u32) -> Poly {
        Poly { terms: a.terms.iter().filter(|(m, _)| m.degree() == d).copied().collect() }
    }

    /// Evaluates at a point of `F_p^n`.
    pub fn eval(&self, a: &Poly, point: &[Scalar]) -> Scalar {
        let f = &self.field;
        a.terms.iter().fold(0, |acc, (m, c)| {
            let v = (0..self.nvars()).fold(*c, |v, i| f.mul(v, f.pow(point[i], m.exp(i) as u64)));
            f.add(acc, v)
        })
    }
}
