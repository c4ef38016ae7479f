use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::arith::{poly_parse, poly_print, Monomial, OrderSpec, Poly, PolyRing, PrimeField};
use crate::error::{Error, Result};
use crate::groebner::{basis_polys, dimension_from_basis, groebner_basis, GbBudget, GroebnerBasis, Vector};

/// On-disk ring description: `{ "p": 101, "vars": ["x","y"], "ci": ["x^2","y^2"] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingFile {
    pub p: u64,
    pub vars: Vec<String>,
    pub ci: Vec<String>,
}

/// A graded complete intersection `Q = P / (f_1, ..., f_c)` over `F_p`.
#[derive(Debug)]
pub struct RingSpec {
    ambient: PolyRing,
    ci: Vec<Poly>,
    ci_basis: GroebnerBasis,
    budget: GbBudget,
    cohomology_ring: PolyRing,
    standard_cache: Mutex<HashMap<u32, Arc<Vec<Monomial>>>>,
}

pub type Ring = Arc<RingSpec>;

impl RingSpec {
    /// Validates the regular-sequence certificate `dim P/(f) = n - c`.
    pub fn new(ambient: PolyRing, ci: Vec<Poly>, budget: GbBudget) -> Result<Ring> {
        if ambient.order() != OrderSpec::DegRevLex {
            return Err(Error::input("bad_order", "the ambient ring must use degrevlex"));
        }
        let n = ambient.nvars();
        if ci.len() > n {
            return Err(Error::input(
                "not_complete_intersection",
                format!("{} relations in {n} variables cannot form a regular sequence", ci.len()),
            ));
        }
        for (j, f) in ci.iter().enumerate() {
            match f.homogeneous_degree() {
                Some(d) if d >= 2 => {}
                Some(_) => {
                    return Err(Error::input(
                        "relation_degree",
                        format!("relation {} must have degree at least 2", j + 1),
                    ))
                }
                None => {
                    return Err(Error::input(
                        "inhomogeneous_relation",
                        format!("relation {} is zero or not homogeneous", j + 1),
                    ))
                }
            }
        }
        let gens: Vec<Vector> = ci.iter().map(|f| Vector::from_poly(f, 0)).collect();
        let ci_basis = groebner_basis(&ambient, &[0], &gens, budget, true)?;
        let dim = dimension_from_basis(n, &ci_basis);
        if dim != (n - ci.len()) as i32 {
            return Err(Error::input(
                "not_complete_intersection",
                format!("relations are not a regular sequence: dim P/(f) = {dim}, expected {}", n - ci.len()),
            ));
        }
        let chi: Vec<String> = (1..=ci.len()).map(|j| format!("chi{j}")).collect();
        let cohomology_ring = PolyRing::new(*ambient.field(), chi, OrderSpec::DegRevLex)?;
        Ok(Arc::new(RingSpec {
            ambient,
            ci,
            ci_basis,
            budget,
            cohomology_ring,
            standard_cache: Mutex::new(HashMap::new()),
        }))
    }

    pub fn from_file(file: &RingFile, budget: GbBudget) -> Result<Ring> {
        let field = PrimeField::new(file.p)?;
        let ambient = PolyRing::new(field, file.vars.clone(), OrderSpec::DegRevLex)?;
        let ci = file.ci.iter().map(|s| poly_parse(s, &ambient)).collect::<Result<Vec<_>>>()?;
        RingSpec::new(ambient, ci, budget)
    }

    pub fn from_json(text: &str, budget: GbBudget) -> Result<Ring> {
        let file: RingFile = serde_json::from_str(text)
            .map_err(|e| Error::input("ring_file", format!("cannot parse ring file: {e}")))?;
        RingSpec::from_file(&file, budget)
    }

    pub fn to_file(&self) -> RingFile {
        RingFile {
            p: self.ambient.field().characteristic() as u64,
            vars: self.ambient.vars().to_vec(),
            ci: self.ci.iter().map(|f| poly_print(f, &self.ambient)).collect(),
        }
    }

    /// Ring from variable names and relation strings; for tests and demos.
    pub fn parse(p: u64, vars: &[&str], ci: &[&str]) -> Result<Ring> {
        RingSpec::from_file(
            &RingFile {
                p,
                vars: vars.iter().map(|s| s.to_string()).collect(),
                ci: ci.iter().map(|s| s.to_string()).collect(),
            },
            GbBudget::default(),
        )
    }

    pub fn ambient(&self) -> &PolyRing {
        &self.ambient
    }

    pub fn field(&self) -> &PrimeField {
        self.ambient.field()
    }

    pub fn ci(&self) -> &[Poly] {
        &self.ci
    }

    /// Reduced Gröbner basis of `(f)` with cofactors in terms of `f`.
    pub fn ci_basis(&self) -> &GroebnerBasis {
        &self.ci_basis
    }

    pub fn ci_basis_polys(&self) -> Vec<Poly> {
        basis_polys(&self.ci_basis)
    }

    pub fn budget(&self) -> GbBudget {
        self.budget
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    /// Codimension `c`.
    pub fn codim(&self) -> usize {
        self.ci.len()
    }

    /// Krull dimension `n - c` of `Q`.
    pub fn dim(&self) -> usize {
        self.nvars() - self.codim()
    }

    pub fn is_artinian(&self) -> bool {
        self.dim() == 0
    }

    pub fn ci_degrees(&self) -> Vec<u32> {
        self.ci.iter().map(|f| f.homogeneous_degree().unwrap()).collect()
    }

    /// `H = F_p[chi1, ..., chic]`.
    pub fn cohomology_ring(&self) -> &PolyRing {
        &self.cohomology_ring
    }

    /// Normal form modulo `(f)`.
    pub fn nf(&self, p: &Poly) -> Poly {
        if p.is_zero() {
            return Poly::zero();
        }
        self.ci_basis.reduce(&Vector::from_poly(p, 0)).component(0)
    }

    /// Componentwise normal form of a free-module element.
    pub fn nf_vector(&self, v: &Vector) -> Vector {
        let Some(top) = v.max_comp() else {
            return Vector::zero();
        };
        let polys: Vec<Poly> = v.to_polys(top as usize + 1).iter().map(|p| self.nf(p)).collect();
        Vector::from_polys(&polys, 0)
    }

    pub fn is_zero_in_quotient(&self, p: &Poly) -> bool {
        self.nf(p).is_zero()
    }

    /// Writes `p ∈ (f)` as `sum_j t_j f_j`; `None` if `p ∉ (f)`.
    pub fn ci_cofactors(&self, p: &Poly) -> Option<Vec<Poly>> {
        let (rem, mults) = self.ci_basis.normal_form(&Vector::from_poly(p, 0));
        if !rem.is_zero() {
            return None;
        }
        let cofs = self.ci_basis.cofactors().expect("tracked at construction");
        let c = self.ci.len();
        let mut t = vec![Poly::zero(); c];
        for (mult, cof) in mults.iter().zip(cofs) {
            if mult.is_zero() {
                continue;
            }
            for (j, part) in cof.to_polys(c).iter().enumerate() {
                t[j] = self.ambient.add(&t[j], &self.ambient.mul(mult, part));
            }
        }
        Some(t)
    }

    /// Standard monomials of degree `d`: a basis of `Q_d`.
    pub fn standard_monomials(&self, d: i64) -> Arc<Vec<Monomial>> {
        if d < 0 {
            return Arc::new(Vec::new());
        }
        let d = d as u32;
        let mut cache = self.standard_cache.lock().unwrap();
        if let Some(v) = cache.get(&d) {
            return v.clone();
        }
        let lms: Vec<Monomial> = self.ci_basis.leading_terms().map(|(_, m)| m).collect();
        let mut all = Monomial::all_of_degree(self.nvars(), d);
        all.retain(|m| !lms.iter().any(|l| l.divides(m)));
        // descending in the ring order
        all.sort_by(|a, b| self.ambient.cmp(b, a));
        let v = Arc::new(all);
        cache.insert(d, v.clone());
        v
    }

    /// Largest degree with `Q_d ≠ 0`, for artinian rings.
    pub fn socle_degree(&self) -> Option<u32> {
        if !self.is_artinian() {
            return None;
        }
        let top: u32 = self.ci_degrees().iter().map(|d| d - 1).sum();
        Some(top)
    }

    pub fn describe(&self) -> String {
        format!(
            "F_{}[{}]/({})",
            self.field().characteristic(),
            self.ambient.vars().join(","),
            self.ci.iter().map(|f| poly_print(f, &self.ambient)).collect::<Vec<_>>().join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_corpus_rings() {
        let r1 = RingSpec::parse(101, &["x", "y"], &["x^2", "y^2"]).unwrap();
        assert_eq!((r1.codim(), r1.dim()), (2, 0));
        let r4 = RingSpec::parse(101, &["x", "y"], &["x^2"]).unwrap();
        assert_eq!((r4.codim(), r4.dim()), (1, 1));
        assert_eq!(r1.socle_degree(), Some(2));
        assert_eq!(r1.standard_monomials(1).len(), 2);
        assert_eq!(r1.standard_monomials(2).len(), 1);
        assert_eq!(r1.standard_monomials(3).len(), 0);
        assert_eq!(r4.standard_monomials(5).len(), 2);
    }

    #[test]
    fn rejects_non_regular_sequences() {
        let e = RingSpec::parse(101, &["x", "y"], &["x^2", "x*y"]).unwrap_err();
        assert_eq!(e.reason, "not_complete_intersection");
        let e = RingSpec::parse(101, &["x", "y"], &["x"]).unwrap_err();
        assert_eq!(e.reason, "relation_degree");
        let e = RingSpec::parse(101, &["x", "y"], &["x^2 + y"]).unwrap_err();
        assert_eq!(e.reason, "inhomogeneous_relation");
        assert!(RingSpec::parse(100, &["x"], &["x^2"]).is_err());
    }

    #[test]
    fn cofactors_against_non_monomial_sequence() {
        let r = RingSpec::parse(101, &["x", "y"], &["x^2 - y^2", "x*y"]).unwrap();
        let a = r.ambient();
        let f = r.ci();
        let p = a.add(&a.mul(&poly_parse("x + 3*y", a).unwrap(), &f[0]), &a.mul(&poly_parse("y", a).unwrap(), &f[1]));
        let t = r.ci_cofactors(&p).unwrap();
        let back = a.add(&a.mul(&t[0], &f[0]), &a.mul(&t[1], &f[1]));
        assert_eq!(back, p);
        assert!(r.ci_cofactors(&poly_parse("x", a).unwrap()).is_none());
    }

    #[test]
    fn json_round_trip() {
        let r = RingSpec::from_json(r#"{ "p": 101, "vars": ["x","y"], "ci": ["x^2","y^2"] }"#, GbBudget::default())
            .unwrap();
        let back = RingSpec::from_file(&r.to_file(), GbBudget::default()).unwrap();
        assert_eq!(back.to_file(), r.to_file());
    }
}
