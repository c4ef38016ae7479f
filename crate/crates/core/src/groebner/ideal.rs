//! Ideal-level operations: membership, dimension, radical membership and
//! the sum, product and intersection of ideals.

use super::buchberger::{basis_polys, groebner_basis_raw, GbBudget, GroebnerBasis};
use super::vector::Vector;
use crate::arith::{Monomial, OrderSpec, Poly, PolyRing};
use crate::error::Result;

fn as_vectors(gens: &[Poly]) -> Vec<Vector> {
    gens.iter().map(|p| Vector::from_poly(p, 0)).collect()
}

/// Gröbner basis of an ideal that need not be homogeneous.
pub fn ideal_basis_any(ring: &PolyRing, gens: &[Poly], budget: GbBudget) -> Result<GroebnerBasis> {
    groebner_basis_raw(ring, 1, &as_vectors(gens), budget, false)
}

pub fn ideal_contains(gb: &GroebnerBasis, g: &Poly) -> bool {
    gb.contains(&Vector::from_poly(g, 0))
}

/// Krull dimension of `ring / (gens)`: the largest set of variables no
/// leading monomial of the basis is supported on. The unit ideal has
/// dimension -1.
pub fn ideal_dimension(ring: &PolyRing, gens: &[Poly], budget: GbBudget) -> Result<i32> {
    let gb = ideal_basis_any(ring, gens, budget)?;
    Ok(dimension_from_basis(ring.nvars(), &gb))
}

pub fn dimension_from_basis(nvars: usize, gb: &GroebnerBasis) -> i32 {
    let lms: Vec<Monomial> = gb.leading_terms().map(|(_, m)| m).collect();
    if lms.iter().any(|m| m.is_one()) {
        return -1;
    }
    let mut best = 0;
    for mask in 0u32..(1 << nvars) {
        let size = mask.count_ones() as i32;
        if size <= best {
            continue;
        }
        // independent: no leading monomial uses only variables in the set
        let independent = lms.iter().all(|m| (0..nvars).any(|i| m.exp(i) > 0 && mask & (1 << i) == 0));
        if independent {
            best = size;
        }
    }
    best
}

/// Decides `g ∈ √(gens)` with the Rabinowitsch trick: `1 ∈ (gens, 1 - T g)`
/// in the ring with one extra variable `T`.
pub fn radical_membership(ring: &PolyRing, g: &Poly, gens: &[Poly], budget: GbBudget) -> Result<bool> {
    if g.is_zero() {
        return Ok(true);
    }
    let n = ring.nvars();
    let ext = ring.with_extra_var(n, "rabinowitsch_t", OrderSpec::DegRevLex)?;
    let lift = |p: &Poly| ext.adopt(p);
    let mut ext_gens: Vec<Poly> = gens.iter().map(lift).collect();
    let tg = ext.mul_term(&lift(g), &Monomial::var(n), 1);
    ext_gens.push(ext.sub(&ext.one(), &tg));
    let gb = ideal_basis_any(&ext, &ext_gens, budget)?;
    Ok(gb.is_whole_module())
}

/// `√b ⊆ √a` as sets, i.e. every generator of `b` lies in `√a`.
pub fn radical_contains(ring: &PolyRing, a: &[Poly], b: &[Poly], budget: GbBudget) -> Result<bool> {
    for g in b {
        if !radical_membership(ring, g, a, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
}

/// Sum (concatenation), product (pairwise products) or intersection (by
/// eliminating `t` from `t a + (1 - t) b`) of two ideals.
pub fn ideal_ops(ring: &PolyRing, a: &[Poly], b: &[Poly], op: IdealOp, budget: GbBudget) -> Result<Vec<Poly>> {
    let nonzero = |v: &[Poly]| v.iter().filter(|p| !p.is_zero()).cloned().collect::<Vec<_>>();
    let (a, b) = (nonzero(a), nonzero(b));
    match op {
        IdealOp::Sum => Ok(a.into_iter().chain(b).collect()),
        IdealOp::Product => {
            let mut out = Vec::with_capacity(a.len() * b.len());
            for x in &a {
                for y in &b {
                    out.push(ring.mul(x, y));
                }
            }
            Ok(out)
        }
        IdealOp::Intersection => {
            if a.is_empty() || b.is_empty() {
                return Ok(Vec::new());
            }
            let ext = ring.with_extra_var(0, "elim_t", OrderSpec::Elimination(1))?;
            let lift = |p: &Poly| ext.from_terms(p.terms().iter().map(|(m, c)| (m.insert_var(0, 0), *c)).collect());
            let t = ext.var(0);
            let one_minus_t = ext.sub(&ext.one(), &t);
            let mut gens: Vec<Poly> = a.iter().map(|p| ext.mul(&t, &lift(p))).collect();
            gens.extend(b.iter().map(|p| ext.mul(&one_minus_t, &lift(p))));
            let gb = ideal_basis_any(&ext, &gens, budget)?;
            Ok(basis_polys(&gb)
                .into_iter()
                .filter(|p| p.terms().iter().all(|(m, _)| m.exp(0) == 0))
                .map(|p| ring.from_terms(p.terms().iter().map(|(m, c)| (m.remove_var(0), *c)).collect()))
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{poly_parse, PrimeField};

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(PrimeField::new(101).unwrap(), vars.iter().map(|s| s.to_string()).collect(), OrderSpec::DegRevLex)
            .unwrap()
    }

    fn ps(r: &PolyRing, s: &[&str]) -> Vec<Poly> {
        s.iter().map(|t| poly_parse(t, r).unwrap()).collect()
    }

    #[test]
    fn dimensions() {
        let b = GbBudget::default();
        let r = ring(&["x", "y"]);
        assert_eq!(ideal_dimension(&r, &ps(&r, &["x^2", "y^2"]), b).unwrap(), 0);
        let h = ring(&["chi1", "chi2"]);
        assert_eq!(ideal_dimension(&h, &ps(&h, &["chi2"]), b).unwrap(), 1);
        let r3 = ring(&["x", "y", "z"]);
        assert_eq!(ideal_dimension(&r3, &[], b).unwrap(), 3);
        assert_eq!(ideal_dimension(&r3, &ps(&r3, &["1"]), b).unwrap(), -1);
    }

    #[test]
    fn radical_membership_examples() {
        let b = GbBudget::default();
        let r = ring(&["x", "y"]);
        assert!(radical_membership(&r, &ps(&r, &["x"])[0], &ps(&r, &["x^2"]), b).unwrap());
        assert!(!radical_membership(&r, &ps(&r, &["y"])[0], &ps(&r, &["x^2"]), b).unwrap());
        let h = ring(&["chi1", "chi2"]);
        assert!(radical_membership(&h, &ps(&h, &["chi1 + chi2"])[0], &ps(&h, &["chi1^2", "chi2^2"]), b).unwrap());
    }

    #[test]
    fn ideal_operations() {
        let b = GbBudget::default();
        let h = ring(&["chi1", "chi2"]);
        let a = ps(&h, &["chi1"]);
        let c = ps(&h, &["chi2"]);
        assert_eq!(ideal_ops(&h, &a, &c, IdealOp::Sum, b).unwrap(), ps(&h, &["chi1", "chi2"]));
        assert_eq!(ideal_ops(&h, &a, &c, IdealOp::Product, b).unwrap(), ps(&h, &["chi1*chi2"]));
        let i = ideal_ops(&h, &a, &c, IdealOp::Intersection, b).unwrap();
        // both containments by membership
        let gi = ideal_basis_any(&h, &i, b).unwrap();
        assert!(ideal_contains(&gi, &ps(&h, &["chi1*chi2"])[0]));
        for g in &i {
            assert!(ideal_contains(&ideal_basis_any(&h, &a, b).unwrap(), g));
            assert!(ideal_contains(&ideal_basis_any(&h, &c, b).unwrap(), g));
        }
    }
}
