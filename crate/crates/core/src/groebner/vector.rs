use std::cmp::Ordering;

use crate::arith::{Monomial, Poly, PolyRing, Scalar};

/// One term `c * m * e_comp` of a free-module element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub comp: u32,
    pub mono: Monomial,
    pub coeff: Scalar,
}

/// Element of a free module `P^r`, terms sorted strictly descending in the
/// position-over-term order (lower component index is larger).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<Term>,
}

#[inline]
pub fn cmp_pot(ring: &PolyRing, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| ring.cmp(a.1, b.1))
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Single-component vector `p * e_comp`.
    pub fn from_poly(p: &Poly, comp: u32) -> Self {
        Vector { terms: p.terms().iter().map(|(m, c)| Term { comp, mono: *m, coeff: *c }).collect() }
    }

    /// Builds `sum_i polys[i] * e_{offset + i}`; polys must belong to `ring`.
    pub fn from_polys(polys: &[Poly], offset: u32) -> Self {
        // components are visited in ascending order, which is descending POT
        let mut terms = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            terms.extend(p.terms().iter().map(|(m, c)| Term { comp: offset + i as u32, mono: *m, coeff: *c }));
        }
        Vector { terms }
    }

    /// Splits into per-component polynomials for components `0..rank`.
    pub fn to_polys(&self, rank: usize) -> Vec<Poly> {
        let mut out: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            out[t.comp as usize].push((t.mono, t.coeff));
        }
        out.into_iter().map(Poly::from_sorted_unchecked).collect()
    }

    pub fn component(&self, comp: u32) -> Poly {
        Poly::from_sorted_unchecked(self.terms.iter().filter(|t| t.comp == comp).map(|t| (t.mono, t.coeff)).collect())
    }

    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        Vector { terms }
    }

    pub(crate) fn pop_leading(&mut self) {
        self.terms.remove(0);
    }

    pub fn from_terms(ring: &PolyRing, mut terms: Vec<Term>) -> Self {
        let f = ring.field();
        terms.sort_by(|a, b| cmp_pot(ring, (b.comp, &b.mono), (a.comp, &a.mono)));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.comp == t.comp && l.mono == t.mono => l.coeff = f.add(l.coeff, t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        Vector { terms: out }
    }

    /// Keeps components in `range`, renumbered to start at zero.
    pub fn restrict(&self, range: std::ops::Range<u32>) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| range.contains(&t.comp))
                .map(|t| Term { comp: t.comp - range.start, ..*t })
                .collect(),
        }
    }

    /// Shifts every component index by `offset`.
    pub fn shifted(&self, offset: u32) -> Vector {
        Vector { terms: self.terms.iter().map(|t| Term { comp: t.comp + offset, ..*t }).collect() }
    }

    /// Concatenation of two vectors whose components are disjoint and all of
    /// `self`'s components are smaller than `other`'s.
    pub fn concat(&self, other: &Vector) -> Vector {
        debug_assert!(match (self.terms.last(), other.terms.first()) {
            (Some(a), Some(b)) => a.comp < b.comp,
            _ => true,
        });
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Vector { terms }
    }

    /// Homogeneous degree given generator degrees, or `None` if the terms
    /// disagree. Zero vectors return `None`.
    pub fn homogeneous_degree(&self, shifts: &[i32]) -> Option<i32> {
        let deg = |t: &Term| t.mono.degree() as i32 + shifts[t.comp as usize];
        let d = deg(self.terms.first()?);
        self.terms.iter().all(|t| deg(t) == d).then_some(d)
    }

    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }
}

/// Arithmetic on vectors relative to a fixed ring.
#[derive(Clone, Copy)]
pub struct VecOps<'a> {
    pub ring: &'a PolyRing,
}

impl<'a> VecOps<'a> {
    pub fn new(ring: &'a PolyRing) -> Self {
        VecOps { ring }
    }

    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        cmp_pot(self.ring, (a.comp, &a.mono), (b.comp, &b.mono))
    }

    /// `a + c * m * b`
    pub fn add_scaled(&self, a: &Vector, b: &Vector, c: Scalar, m: &Monomial) -> Vector {
        if c == 0 || b.is_zero() {
            return a.clone();
        }
        let f = self.ring.field();
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < a.terms.len() && j < b.terms.len() {
            let at = a.terms[i];
            let bt = b.terms[j];
            let bm = bt.mono.mul(m);
            match cmp_pot(self.ring, (at.comp, &at.mono), (bt.comp, &bm)) {
                Ordering::Greater => {
                    out.push(at);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { comp: bt.comp, mono: bm, coeff: f.mul(bt.coeff, c) });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(at.coeff, f.mul(bt.coeff, c));
                    if s != 0 {
                        out.push(Term { coeff: s, ..at });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        for bt in &b.terms[j..] {
            out.push(Term { comp: bt.comp, mono: bt.mono.mul(m), coeff: f.mul(bt.coeff, c) });
        }
        Vector { terms: out }
    }

    pub fn add(&self, a: &Vector, b: &Vector) -> Vector {
        self.add_scaled(a, b, 1, &Monomial::ONE)
    }

    pub fn sub(&self, a: &Vector, b: &Vector) -> Vector {
        self.add_scaled(a, b, self.ring.field().neg(1), &Monomial::ONE)
    }

    pub fn scale(&self, a: &Vector, c: Scalar) -> Vector {
        if c == 0 {
            return Vector::zero();
        }
        let f = self.ring.field();
        Vector { terms: a.terms.iter().map(|t| Term { coeff: f.mul(t.coeff, c), ..*t }).collect() }
    }

    pub fn mul_term(&self, a: &Vector, m: &Monomial, c: Scalar) -> Vector {
        if c == 0 {
            return Vector::zero();
        }
        let f = self.ring.field();
        Vector {
            terms: a
                .terms
                .iter()
                .map(|t| Term { comp: t.comp, mono: t.mono.mul(m), coeff: f.mul(t.coeff, c) })
                .collect(),
        }
    }

    pub fn mul_poly(&self, a: &Vector, p: &Poly) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = self.add_scaled(&acc, a, *c, m);
        }
        acc
    }

    pub fn monic(&self, a: &Vector) -> Vector {
        match a.leading() {
            Some(t) if t.coeff != 1 => self.scale(a, self.ring.field().inv(t.coeff)),
            _ => a.clone(),
        }
    }

    /// `sum_i coeffs[i] * vecs[i]`
    pub fn combine(&self, coeffs: &[Poly], vecs: &[Vector]) -> Vector {
        let mut acc = Vector::zero();
        for (p, v) in coeffs.iter().zip(vecs) {
            for (m, c) in p.terms() {
                acc = self.add_scaled(&acc, v, *c, m);
            }
        }
        acc
    }

    /// Re-sorts a vector built under a different ring order.
    pub fn adopt(&self, v: &Vector) -> Vector {
        Vector::from_terms(self.ring, v.terms.clone())
    }
}
