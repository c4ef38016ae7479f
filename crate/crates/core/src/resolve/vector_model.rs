use std::collections::{BTreeSet, HashMap, HashSet};

use super::graded::DegreePiece;
use super::presentation::ModulePresentation;
use super::ring::RingSpec;
use crate::arith::{EchelonSpan, Matrix, Monomial, Scalar};
use crate::error::{Error, Result};
use crate::groebner::buchberger::groebner_basis_raw;
use crate::groebner::{leading_monomials_by_comp, VecOps, Vector};

/// A finite-length module written out as a graded vector space with one
/// nilpotent matrix per ring variable.
#[derive(Clone, Debug)]
pub struct VectorModel {
    /// `(generator index, standard monomial)`, ascending by degree.
    pub basis: Vec<(u32, Monomial)>,
    pub degrees: Vec<i32>,
    /// `actions[v]` is multiplication by the `v`-th variable.
    pub actions: Vec<Matrix>,
}

impl VectorModel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Index ranges of the homogeneous components, by ascending degree.
    pub fn blocks(&self) -> Vec<(i32, std::ops::Range<usize>)> {
        let mut out: Vec<(i32, std::ops::Range<usize>)> = Vec::new();
        for (k, &d) in self.degrees.iter().enumerate() {
            match out.last_mut() {
                Some((dd, r)) if *dd == d => r.end = k + 1,
                _ => out.push((d, k..k + 1)),
            }
        }
        out
    }

    /// `dim_k M_d` for each degree present.
    pub fn hilbert_function(&self) -> Vec<(i32, usize)> {
        self.blocks().into_iter().map(|(d, r)| (d, r.len())).collect()
    }

    fn apply_monomial(&self, ring: &RingSpec, m: &Monomial, v: &[Scalar]) -> Vec<Scalar> {
        let f = ring.field();
        let mut w = v.to_vec();
        for (var, a) in self.actions.iter().enumerate() {
            for _ in 0..m.exp(var) {
                w = a.mul_vec(&w, f);
            }
        }
        w
    }

    /// Minimal presentation of the submodule spanned by `vectors`, which
    /// must be homogeneous and span a subspace closed under the actions.
    pub fn submodule_presentation(
        &self,
        ring: &std::sync::Arc<RingSpec>,
        vectors: &[Vec<Scalar>],
    ) -> Result<ModulePresentation> {
        let f = ring.field();
        let dim = self.dim();
        let degree_of = |v: &[Scalar]| -> Result<i32> {
            let ds: BTreeSet<i32> = v.iter().zip(&self.degrees).filter(|(x, _)| **x != 0).map(|(_, d)| *d).collect();
            match ds.len() {
                0 => Err(Error::internal("zero_vector", "zero vector in a submodule basis")),
                1 => Ok(*ds.first().unwrap()),
                _ => Err(Error::internal("inhomogeneous_vector", "submodule basis vector is not homogeneous")),
            }
        };
        let mut by_degree: Vec<(i32, Vec<Scalar>)> = Vec::new();
        for v in vectors {
            by_degree.push((degree_of(v)?, v.clone()));
        }
        by_degree.sort_by_key(|(d, _)| *d);
        let Some(&(lo, _)) = by_degree.first() else {
            return Ok(ModulePresentation::free(ring, Vec::new()));
        };
        let hi = by_degree.last().unwrap().0;

        // minimal generators: complements of (m W)_t in W_t
        let mut gens: Vec<(i32, Vec<Scalar>)> = Vec::new();
        let mut prev: Vec<&Vec<Scalar>> = Vec::new();
        for t in lo..=hi {
            let mut span = EchelonSpan::new(dim);
            for w in &prev {
                for a in &self.actions {
                    span.insert(&a.mul_vec(w, f), f);
                }
            }
            let cur: Vec<&Vec<Scalar>> = by_degree.iter().filter(|(d, _)| *d == t).map(|(_, v)| v).collect();
            for w in &cur {
                if span.insert(w, f) {
                    gens.push((t, (*w).clone()));
                }
            }
            prev = cur;
        }
        let gen_degs: Vec<i32> = gens.iter().map(|(d, _)| *d).collect();

        // relations: kernel of the free cover, generated in degrees ≤ hi + 1
        let ops = VecOps::new(ring.ambient());
        let mut relations: Vec<Vector> = Vec::new();
        let mut prev_kernel: Vec<Vector> = Vec::new();
        for t in lo..=hi + 1 {
            let piece = DegreePiece::new(ring, &gen_degs, t);
            if piece.dim() == 0 {
                prev_kernel.clear();
                continue;
            }
            let mut img = Matrix::zeros(dim, piece.dim());
            for (k, (i, mono)) in piece.basis.iter().enumerate() {
                let w = self.apply_monomial(ring, mono, &gens[*i as usize].1);
                for (r, x) in w.into_iter().enumerate() {
                    img[(r, k)] = x;
                }
            }
            let kernel = img.nullspace(f);
            let mut span = EchelonSpan::new(piece.dim());
            for b in &prev_kernel {
                for v in 0..ring.nvars() {
                    let w = ring.nf_vector(&ops.mul_term(b, &Monomial::var(v), 1));
                    if !w.is_zero() {
                        span.insert(&piece.coords(&w), f);
                    }
                }
            }
            let mut cur = Vec::new();
            for z in &kernel {
                let zv = piece.vector(ring, z);
                if span.insert(z, f) {
                    relations.push(zv.clone());
                }
                cur.push(zv);
            }
            prev_kernel = cur;
        }
        ModulePresentation::new(ring, gen_degs, relations)
    }

    /// Minimal presentation of the whole module.
    pub fn presentation(&self, ring: &std::sync::Arc<RingSpec>) -> Result<ModulePresentation> {
        let basis: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|k| {
                let mut e = vec![0; self.dim()];
                e[k] = 1;
                e
            })
            .collect();
        self.submodule_presentation(ring, &basis)
    }
}

/// Expands a finite-length module into a [`VectorModel`].
pub fn vector_model(m: &ModulePresentation) -> Result<VectorModel> {
    let ring = m.ring();
    let a = ring.ambient();
    let rank = m.num_gens();
    let mut gens = m.relations().columns.clone();
    for h in ring.ci_basis_polys() {
        for i in 0..rank as u32 {
            gens.push(Vector::from_poly(&h, i));
        }
    }
    let gb = groebner_basis_raw(a, rank, &gens, ring.budget(), false)?;
    let lms = leading_monomials_by_comp(&gb);
    let empty = Vec::new();
    let mut basis: Vec<(u32, Monomial)> = Vec::new();
    for c in 0..rank as u32 {
        let l = lms.get(&c).unwrap_or(&empty);
        if l.iter().any(|m| m.is_one()) {
            continue;
        }
        for v in 0..ring.nvars() {
            if !l.iter().any(|m| m.pure_power_var() == Some(v)) {
                return Err(Error::input(
                    "infinite_length",
                    format!("module has infinite length: {} acts freely on generator {}", a.vars()[v], c + 1),
                ));
            }
        }
        let standard = |m: &Monomial| !l.iter().any(|lm| lm.divides(m));
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut frontier = vec![Monomial::ONE];
        while let Some(m) = frontier.pop() {
            if !standard(&m) || !seen.insert(m) {
                continue;
            }
            for v in 0..ring.nvars() {
                frontier.push(m.mul(&Monomial::var(v)));
            }
        }
        basis.extend(seen.into_iter().map(|m| (c, m)));
    }
    let gdeg = m.gen_degrees();
    let deg = |b: &(u32, Monomial)| gdeg[b.0 as usize] + b.1.degree() as i32;
    basis.sort_by(|x, y| deg(x).cmp(&deg(y)).then(x.0.cmp(&y.0)).then(a.cmp(&y.1, &x.1)));
    let index: HashMap<(u32, Monomial), usize> = basis.iter().enumerate().map(|(k, b)| (*b, k)).collect();
    let n = basis.len();
    let mut actions = Vec::with_capacity(ring.nvars());
    for v in 0..ring.nvars() {
        let mut mat = Matrix::zeros(n, n);
        for (k, (c, mono)) in basis.iter().enumerate() {
            let w = gb.reduce(&Vector::from_poly(&a.monomial(mono.mul(&Monomial::var(v)), 1), *c));
            for t in w.terms() {
                mat[(index[&(t.comp, t.mono)], k)] = t.coeff;
            }
        }
        actions.push(mat);
    }
    let degrees = basis.iter().map(deg).collect();
    Ok(VectorModel { basis, degrees, actions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolve::{present_module, resolve_min};

    #[test]
    fn corpus_models() {
        let r = RingSpec::parse(101, &["x", "y"], &["x^2", "y^2"]).unwrap();
        let f = r.field();
        let k = vector_model(&ModulePresentation::residue_field(&r)).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.actions.iter().all(|m| m.is_zero()));

        let m1 = vector_model(&present_module("gens: [0]\nrelations: [[x]]", &r).unwrap()).unwrap();
        assert_eq!(m1.dim(), 2);
        assert!(m1.actions[0].is_zero());
        assert_eq!(m1.actions[1].rank(f), 1);

        let q = vector_model(&ModulePresentation::free(&r, vec![0])).unwrap();
        assert_eq!(q.dim(), 4);
        assert_eq!(q.actions[0].mul(&q.actions[1], f), q.actions[1].mul(&q.actions[0], f));
        assert!(q.actions[0].mul(&q.actions[0], f).is_zero());
    }

    #[test]
    fn infinite_length_detected() {
        let r = RingSpec::parse(101, &["x", "y"], &["x^2"]).unwrap();
        let e = vector_model(&ModulePresentation::free(&r, vec![0])).unwrap_err();
        assert_eq!(e.reason, "infinite_length");
        assert!(vector_model(&ModulePresentation::residue_field(&r)).is_ok());
    }

    #[test]
    fn presentation_from_model_is_minimal() {
        let r = RingSpec::parse(101, &["x", "y"], &["x^2", "y^2"]).unwrap();
        let m = present_module("gens: [0, 1]\nrelations: [[x, y, 0], [0, 1, y]]", &r).unwrap();
        let vm = vector_model(&m).unwrap();
        let p = vm.presentation(&r).unwrap();
        assert!(!p.relations().has_unit_entry());
        assert_eq!(vector_model(&p).unwrap().hilbert_function(), vm.hilbert_function());
        assert_eq!(resolve_min(&p, 3).unwrap().betti(), resolve_min(&m, 3).unwrap().betti());
    }
}
