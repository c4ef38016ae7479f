//! Degree-wise linear algebra on graded free `Q`-modules.

use std::collections::HashMap;

use super::ring::RingSpec;
use crate::arith::EchelonSpan;
use crate::arith::{Monomial, Scalar};
use crate::groebner::{Term, VecOps, Vector};

/// Basis of the degree-`t` part of `⊕ Q(-shift_i)`: pairs of a component
/// and a standard monomial of degree `t - shift_i`.
pub struct DegreePiece {
    pub degree: i32,
    pub basis: Vec<(u32, Monomial)>,
    index: HashMap<(u32, Monomial), usize>,
}

impl DegreePiece {
    pub fn new(ring: &RingSpec, shifts: &[i32], t: i32) -> Self {
        let mut basis = Vec::new();
        for (i, &s) in shifts.iter().enumerate() {
            for m in ring.standard_monomials((t - s) as i64).iter() {
                basis.push((i as u32, *m));
            }
        }
        let index = basis.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        DegreePiece { degree: t, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a normal-form vector homogeneous of this degree.
    pub fn coords(&self, v: &Vector) -> Vec<Scalar> {
        let mut out = vec![0; self.basis.len()];
        for t in v.terms() {
            let k = self.index[&(t.comp, t.mono)];
            out[k] = t.coeff;
        }
        out
    }

    pub fn vector(&self, ring: &RingSpec, c: &[Scalar]) -> Vector {
        let terms = c
            .iter()
            .zip(&self.basis)
            .filter(|(x, _)| **x != 0)
            .map(|(x, (comp, mono))| Term { comp: *comp, mono: *mono, coeff: *x })
            .collect();
        Vector::from_terms(ring.ambient(), terms)
    }
}

/// Indices of a minimal generating subset of the submodule generated by
/// `gens`, which must be nonzero, homogeneous and in normal form. Generators
/// are visited by ascending degree, ties in input order; a generator is kept
/// iff it is not in the span of everything generated in lower degrees plus
/// the generators already kept.
pub fn minimal_subset(ring: &RingSpec, shifts: &[i32], gens: &[Vector]) -> Vec<usize> {
    let f = ring.field();
    let ops = VecOps::new(ring.ambient());
    let degs: Vec<i32> = gens.iter().map(|g| g.homogeneous_degree(shifts).expect("homogeneous generator")).collect();
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&i| (degs[i], i));
    let mut kept = Vec::new();
    let Some(&first) = order.first() else {
        return kept;
    };
    let (lo, hi) = (degs[first], degs[*order.last().unwrap()]);
    // basis of the generated submodule in the previous degree
    let mut prev: Vec<Vector> = Vec::new();
    let mut pos = 0;
    for t in lo..=hi {
        let piece = DegreePiece::new(ring, shifts, t);
        let mut span = EchelonSpan::new(piece.dim());
        let mut cur: Vec<Vector> = Vec::new();
        for b in &prev {
            for v in 0..ring.nvars() {
                let w = ring.nf_vector(&ops.mul_term(b, &Monomial::var(v), 1));
                if w.is_zero() {
                    continue;
                }
                if span.insert(&piece.coords(&w), f) {
                    cur.push(w);
                }
            }
        }
        while pos < order.len() && degs[order[pos]] == t {
            let i = order[pos];
            if span.insert(&piece.coords(&gens[i]), f) {
                kept.push(i);
                cur.push(gens[i].clone());
            }
            pos += 1;
        }
        prev = cur;
    }
    kept.sort_unstable();
    kept
}

/// Basis of the kernel, degree by degree, of the map `⊕ Q(-shifts)` →
/// target sending `e_j` to `cols[j]`, over the degrees `lo..=hi`. Only valid
/// as a full kernel computation when `Q` is artinian and the window covers
/// every degree in which the source is nonzero.
pub fn kernel_by_degree(
    ring: &RingSpec,
    shifts: &[i32],
    target_shifts: &[i32],
    cols: &[Vector],
    lo: i32,
    hi: i32,
) -> Vec<Vector> {
    let f = ring.field();
    let ops = VecOps::new(ring.ambient());
    let mut out = Vec::new();
    for t in lo..=hi {
        let src = DegreePiece::new(ring, shifts, t);
        if src.dim() == 0 {
            continue;
        }
        let dst = DegreePiece::new(ring, target_shifts, t);
        let mut m = crate::arith::Matrix::zeros(dst.dim(), src.dim());
        for (k, (comp, mono)) in src.basis.iter().enumerate() {
            let img = ring.nf_vector(&ops.mul_term(&cols[*comp as usize], mono, 1));
            for term in img.terms() {
                let r = dst.index[&(term.comp, term.mono)];
                m[(r, k)] = term.coeff;
            }
        }
        for v in m.nullspace(f) {
            out.push(src.vector(ring, &v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly_parse;

    #[test]
    fn minimal_subset_drops_multiples() {
        let r = RingSpec::parse(101, &["x", "y"], &["x^2", "y^2"]).unwrap();
        let a = r.ambient();
        let p = |s: &str| Vector::from_poly(&poly_parse(s, a).unwrap(), 0);
        let gens = vec![p("x*y"), p("x"), p("y"), p("x + y")];
        assert_eq!(minimal_subset(&r, &[0], &gens), vec![1, 2]);
    }

    #[test]
    fn kernel_of_x_on_dual_numbers() {
        let r = RingSpec::parse(101, &["x"], &["x^2"]).unwrap();
        let x = Vector::from_poly(&r.ambient().var(0), 0);
        let k = kernel_by_degree(&r, &[1], &[0], &[x], 1, 2);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].homogeneous_degree(&[1]), Some(2));
    }
}
