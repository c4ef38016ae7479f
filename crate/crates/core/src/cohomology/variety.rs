use std::collections::HashMap;

use super::ext::ExtKModule;
use crate::arith::{poly_parse, poly_print, EchelonSpan, Matrix, Monomial, Poly, PolyRing};
use crate::error::{Error, Result};
use crate::groebner::{
    ideal_basis_any, ideal_dimension, ideal_ops, radical_contains, radical_membership, GbBudget, IdealOp,
};

/// Homogeneous ideal of `H = k[chi_1..chi_c]`, standing for its zero set
/// up to radical.
#[derive(Clone, Debug)]
pub struct VarietyIdeal {
    ring: PolyRing,
    gens: Vec<Poly>,
    /// The annihilator was the unit ideal: `E` vanished on the window.
    unit: bool,
}

impl PartialEq for VarietyIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && self.unit == other.unit && self.ring.vars() == other.ring.vars()
    }
}

impl VarietyIdeal {
    pub fn new(ring: &PolyRing, gens: Vec<Poly>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if !g.is_zero() && !g.is_homogeneous() {
                return Err(Error::input("inhomogeneous_element", format!("generator {} is not homogeneous", i + 1)));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(VarietyIdeal { ring: ring.clone(), gens, unit: false })
    }

    /// Parses comma-separated generators, e.g. `"chi1, chi2^2"`.
    pub fn parse(ring: &PolyRing, text: &str) -> Result<Self> {
        let gens = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| poly_parse(s, ring))
            .collect::<Result<Vec<_>>>()?;
        VarietyIdeal::new(ring, gens)
    }

    /// The zero ideal: all of `k̃^c`.
    pub fn full(ring: &PolyRing) -> Self {
        VarietyIdeal { ring: ring.clone(), gens: Vec::new(), unit: false }
    }

    /// `(chi_1, ..., chi_c)`: the point `{0}`.
    pub fn trivial(ring: &PolyRing) -> Self {
        let gens = (0..ring.nvars()).map(|j| ring.var(j)).collect();
        VarietyIdeal { ring: ring.clone(), gens, unit: false }
    }

    /// Annihilator of the zero module, recorded as the trivial variety with
    /// the unit flag set.
    pub fn unit(ring: &PolyRing) -> Self {
        VarietyIdeal { unit: true, ..VarietyIdeal::trivial(ring) }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn gens_text(&self) -> Vec<String> {
        if self.gens.is_empty() {
            return vec!["0".to_string()];
        }
        self.gens.iter().map(|g| poly_print(g, &self.ring)).collect()
    }

    pub fn describe(&self) -> String {
        format!("({})", self.gens_text().join(", "))
    }

    /// Reduced Gröbner basis generators; a canonical form of the ideal.
    pub fn reduced(&self, budget: GbBudget) -> Result<VarietyIdeal> {
        let gb = ideal_basis_any(&self.ring, &self.gens, budget)?;
        Ok(VarietyIdeal { ring: self.ring.clone(), gens: crate::groebner::basis_polys(&gb), unit: self.unit })
    }

    /// Krull dimension of `H/a`, i.e. the dimension of the affine cone.
    pub fn dimension(&self, budget: GbBudget) -> Result<usize> {
        let d = ideal_dimension(&self.ring, &self.gens, budget)?;
        Ok(d.max(0) as usize)
    }

    fn check_same(&self, other: &VarietyIdeal) -> Result<()> {
        if self.ring.vars() != other.ring.vars() {
            return Err(Error::input("codimension_mismatch", "varieties live in different spaces"));
        }
        Ok(())
    }

    /// `V(self) ⊇ V(other)`, i.e. `√self ⊆ √other`.
    pub fn contains(&self, other: &VarietyIdeal, budget: GbBudget) -> Result<bool> {
        self.check_same(other)?;
        radical_contains(&self.ring, &other.gens, &self.gens, budget)
    }

    pub fn equal(&self, other: &VarietyIdeal, budget: GbBudget) -> Result<bool> {
        Ok(self.contains(other, budget)? && other.contains(self, budget)?)
    }

    /// `V(a) ∩ V(b) = V(a + b)`.
    pub fn intersect(&self, other: &VarietyIdeal, budget: GbBudget) -> Result<VarietyIdeal> {
        self.check_same(other)?;
        let gens = ideal_ops(&self.ring, &self.gens, &other.gens, IdealOp::Sum, budget)?;
        VarietyIdeal::new(&self.ring, gens)
    }

    /// `V(a) ∪ V(b) = V(a b)`.
    pub fn union(&self, other: &VarietyIdeal, budget: GbBudget) -> Result<VarietyIdeal> {
        self.check_same(other)?;
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(VarietyIdeal::full(&self.ring));
        }
        let gens = ideal_ops(&self.ring, &self.gens, &other.gens, IdealOp::Product, budget)?;
        VarietyIdeal::new(&self.ring, gens)
    }

    /// `V(a) = {0}`: every `chi_j` lies in `√a`.
    pub fn is_trivial(&self, budget: GbBudget) -> Result<bool> {
        for j in 0..self.ring.nvars() {
            if !radical_membership(&self.ring, &self.ring.var(j), &self.gens, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Monomials of degree `d` in `n` variables, ascending in degrevlex.
fn monomials(ring: &PolyRing, d: u32) -> Vec<Monomial> {
    let mut ms = Monomial::all_of_degree(ring.nvars(), d);
    ms.sort_by(|a, b| ring.cmp(a, b));
    ms
}

/// Candidate annihilator `a_N` of `E` from operator degrees `1..=max_degree`:
/// the homogeneous `h` of degree `2d` whose action `E^i → E^{i+2d}` vanishes
/// for every `0 ≤ i ≤ N - 2d`.
pub fn annihilator_window(e: &ExtKModule, h: &PolyRing, max_degree: usize) -> Result<VarietyIdeal> {
    let n = e.top();
    if max_degree > n / 2 {
        return Err(Error::input(
            "degree_cap",
            format!("operator degree {max_degree} exceeds the window bound {}", n / 2),
        ));
    }
    if e.is_zero() {
        return Ok(VarietyIdeal::unit(h));
    }
    let f = &e.field;
    // composite[(m, i)]: action of chi^m on E^i, factors applied by
    // ascending variable index
    let mut composite: HashMap<(Monomial, usize), Matrix> = HashMap::new();
    for i in 0..=n {
        composite.insert((Monomial::ONE, i), Matrix::identity(e.dims[i]));
    }
    let mut gens: Vec<Poly> = Vec::new();
    for d in 1..=max_degree as u32 {
        let ms = monomials(h, d);
        for m in &ms {
            let j = (0..h.nvars()).rev().find(|&j| m.exp(j) > 0).unwrap();
            let lower = Monomial::var(j).quotient_of(m);
            for i in 0..=n - 2 * d as usize {
                let inner = &composite[&(lower, i)];
                let outer = &e.actions[j][i + 2 * (d as usize - 1)];
                composite.insert((*m, i), outer.mul(inner, f));
            }
        }
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for i in 0..=n - 2 * d as usize {
            let (r, c) = (e.dims[i + 2 * d as usize], e.dims[i]);
            for a in 0..r {
                for b in 0..c {
                    rows.push(ms.iter().map(|m| composite[&(*m, i)][(a, b)]).collect());
                }
            }
        }
        let sys = if rows.is_empty() { Matrix::zeros(0, ms.len()) } else { Matrix::from_rows(rows) };
        // keep only elements outside the ideal of lower-degree generators
        let index: HashMap<Monomial, usize> = ms.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let coords = |p: &Poly| {
            let mut v = vec![0; ms.len()];
            for (m, c) in p.terms() {
                v[index[m]] = *c;
            }
            v
        };
        let mut span = EchelonSpan::new(ms.len());
        for g in &gens {
            let e = g.homogeneous_degree().unwrap();
            for m in monomials(h, d - e) {
                span.insert(&coords(&h.mul_term(g, &m, 1)), f);
            }
        }
        for v in sys.nullspace(f) {
            if span.insert(&v, f) {
                let terms = ms.iter().zip(&v).filter(|(_, c)| **c != 0).map(|(m, c)| (*m, *c)).collect();
                gens.push(h.monic(&h.from_terms(terms)));
            }
        }
    }
    VarietyIdeal::new(h, gens)
}
