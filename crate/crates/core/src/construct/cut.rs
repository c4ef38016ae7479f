use crate::arith::Poly;
use crate::cohomology::{lift_and_operators, support_variety, VarietyConfig, VarietyIdeal};
use crate::error::{Error, Result};
use crate::groebner::buchberger::groebner_basis_raw;
use crate::groebner::{VecOps, Vector};
use crate::resolve::{resolve_min, syzygy_module, GradedMatrix, ModulePresentation, Resolution};

/// `φ_M(h) ∈ Ext^n(M, M)` represented by a chain-map component
/// `T: F_n → F_0` on the minimal resolution of `M`.
#[derive(Clone, Debug)]
pub struct ExtElement {
    pub resolution: Resolution,
    /// Cohomological degree `n = 2 deg h`.
    pub degree: usize,
    /// Internal degree `w`: `T` maps `F_n(-w)` homogeneously to `F_0`.
    pub internal_degree: i32,
    pub t: GradedMatrix,
}

impl ExtElement {
    /// The module the element acts on, in the presentation that was resolved.
    pub fn module(&self) -> &ModulePresentation {
        self.resolution.module()
    }

    /// `z ∘ d_{n+1} = 0` for `z = π ∘ T`: the columns of `T d_{n+1}` lie in
    /// the image of `d_1`.
    pub fn cocycle_holds(&self) -> Result<bool> {
        let res = &self.resolution;
        let ring = res.ring();
        if res.len() < self.degree + 1 {
            return Err(Error::input("resolution_too_short", "cocycle check needs step n + 1"));
        }
        let td = self.t.compose(ring, res.d(self.degree + 1));
        if td.is_zero() {
            return Ok(true);
        }
        let b0 = res.degrees(0).len();
        let mut gens = res.d(1).columns.clone();
        for h in ring.ci_basis_polys() {
            for k in 0..b0 as u32 {
                gens.push(Vector::from_poly(&h, k));
            }
        }
        let gb = groebner_basis_raw(ring.ambient(), b0, &gens, ring.budget(), false)?;
        Ok(td.columns.iter().all(|c| gb.contains(c)))
    }
}

/// Composite of operators along the exponent pattern of `m`, factors in
/// ascending variable index with `t^{(0)}` outermost.
fn operator_composite(res: &Resolution, pattern: &[usize]) -> GradedMatrix {
    let ring = res.ring();
    let mut acc: Option<GradedMatrix> = None;
    for (k, &j) in pattern.iter().enumerate() {
        let t = res.operator(2 * k, j).expect("operators attached");
        acc = Some(match acc {
            None => t.clone(),
            Some(a) => a.compose(ring, t),
        });
    }
    acc.unwrap()
}

/// `φ_M(h)` for homogeneous `h ∈ H` of positive degree, using a resolution
/// with operators to at least `2 deg h + 1` steps.
pub fn phi(res: &Resolution, h: &Poly) -> Result<ExtElement> {
    let ring = res.ring();
    let hr = ring.cohomology_ring();
    let Some(d) = h.homogeneous_degree() else {
        return Err(Error::input("inhomogeneous_element", "cohomology element must be homogeneous and nonzero"));
    };
    if d == 0 {
        return Err(Error::input("constant_element", "cohomology element must have positive degree"));
    }
    let n = 2 * d as usize;
    if res.operators().is_none() || res.len() < n + 1 {
        return Err(Error::input(
            "resolution_too_short",
            format!("φ of a degree {n} element needs {} resolution steps with operators", n + 1),
        ));
    }
    let ci_degs = ring.ci_degrees();
    let weight =
        |m: &crate::arith::Monomial| -> i32 { (0..hr.nvars()).map(|j| m.exp(j) as i32 * ci_degs[j] as i32).sum() };
    let w = weight(&h.terms()[0].0);
    if h.terms().iter().any(|(m, _)| weight(m) != w) {
        return Err(Error::input(
            "weighted_inhomogeneous",
            "cohomology element mixes operators of different internal degrees",
        ));
    }
    let ops = VecOps::new(ring.ambient());
    let src: Vec<i32> = res.degrees(n).iter().map(|s| s - w).collect();
    let mut cols = vec![Vector::zero(); src.len()];
    for (m, c) in h.terms() {
        let pattern: Vec<usize> = (0..hr.nvars()).flat_map(|j| std::iter::repeat_n(j, m.exp(j) as usize)).collect();
        let comp = operator_composite(res, &pattern);
        for (acc, col) in cols.iter_mut().zip(&comp.columns) {
            *acc = ops.add(acc, &ops.scale(col, *c));
        }
    }
    let cols = cols.iter().map(|v| ring.nf_vector(v)).collect();
    Ok(ExtElement {
        resolution: res.clone(),
        degree: n,
        internal_degree: w,
        t: GradedMatrix::new(res.degrees(0).to_vec(), src, cols),
    })
}

/// Resolves `M` far enough for `φ(h)` and returns the element.
pub fn phi_of(m: &ModulePresentation, h: &Poly) -> Result<ExtElement> {
    let d = h
        .homogeneous_degree()
        .ok_or_else(|| Error::input("inhomogeneous_element", "cohomology element must be homogeneous and nonzero"))?;
    if d == 0 {
        return Err(Error::input("constant_element", "cohomology element must have positive degree"));
    }
    let res = lift_and_operators(&resolve_min(m, 2 * d as usize + 1)?)?;
    phi(&res, h)
}

/// `K_θ = coker [[d_n, 0], [-T, d_1]]` from `F_n ⊕ F_1` to `F_{n-1} ⊕ F_0`,
/// minimalized.
pub fn pushout_cut(theta: &ExtElement) -> Result<ModulePresentation> {
    let res = &theta.resolution;
    let ring = res.ring();
    let n = theta.degree;
    let w = theta.internal_degree;
    if theta.t.rows() != res.degrees(0).len() || theta.t.cols() != res.degrees(n).len() {
        return Err(Error::input("degree_mismatch", "cocycle does not match the resolution"));
    }
    let ops = VecOps::new(ring.ambient());
    let top = res.degrees(n - 1).len() as u32;
    let gens: Vec<i32> = res.degrees(n - 1).iter().map(|d| d - w).chain(res.degrees(0).iter().copied()).collect();
    let mut cols = Vec::new();
    for (k, dn) in res.d(n).columns.iter().enumerate() {
        let neg_t = ops.scale(&theta.t.columns[k], ring.field().neg(1));
        cols.push(dn.concat(&neg_t.shifted(top)));
    }
    for d1 in &res.d(1).columns {
        cols.push(d1.shifted(top));
    }
    let k = ModulePresentation::new(ring, gens, cols).map_err(|e| {
        if e.reason == "inhomogeneous_column" {
            Error::input("degree_mismatch", e.message)
        } else {
            e
        }
    })?;
    Ok(k.minimalize())
}

/// `K_{φ(h)}` for `M`.
pub fn cut(m: &ModulePresentation, h: &Poly) -> Result<ModulePresentation> {
    pushout_cut(&phi_of(m, h)?)
}

/// Output of [`realize`]: the module and, when verified, its variety.
#[derive(Clone, Debug)]
pub struct Realization {
    pub module: ModulePresentation,
    /// `Ω^{dim A}(k)` and each successive cut.
    pub stages: Vec<ModulePresentation>,
    pub variety: Option<VarietyIdeal>,
}

/// Starts from `Ω^{dim A}(k)` and cuts by each `η_i` in turn. With
/// `verify`, checks that the support variety equals `V(η_1..η_t)`.
pub fn realize(ring: &crate::resolve::Ring, etas: &[Poly], verify: Option<&VarietyConfig>) -> Result<Realization> {
    let k = ModulePresentation::residue_field(ring);
    let mut m = syzygy_module(&k, ring.dim())?.minimalize();
    let mut stages = vec![m.clone()];
    for eta in etas {
        m = cut(&m, eta)?;
        stages.push(m.clone());
    }
    let variety = match verify {
        None => None,
        Some(cfg) => {
            let budget = ring.budget();
            let target = VarietyIdeal::new(ring.cohomology_ring(), etas.to_vec())?;
            let got = support_variety(&m, cfg)?.ideal;
            if !got.equal(&target, budget)? {
                return Err(Error::verification(
                    "realize_mismatch",
                    format!("realized variety {} differs from {}", got.describe(), target.describe()),
                ));
            }
            Some(got)
        }
    };
    Ok(Realization { module: m, stages, variety })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly_parse;
    use crate::resolve::{present_module, RingSpec};

    #[test]
    fn phi_examples() {
        let r2 = RingSpec::parse(101, &["x"], &["x^2"]).unwrap();
        let k = ModulePresentation::residue_field(&r2);
        let h = poly_parse("chi1", r2.cohomology_ring()).unwrap();
        let th = phi_of(&k, &h).unwrap();
        assert_eq!(th.degree, 2);
        assert_eq!(th.t.entry(0, 0), r2.ambient().one());
        assert!(th.cocycle_holds().unwrap());

        let r1 = RingSpec::parse(101, &["x", "y"], &["x^2", "y^2"]).unwrap();
        let m1 = present_module("gens: [0]\nrelations: [[x]]", &r1).unwrap();
        let th = phi_of(&m1, &poly_parse("chi2", r1.cohomology_ring()).unwrap()).unwrap();
        assert!(th.t.is_zero());
        assert!(th.cocycle_holds().unwrap());
        let e = phi_of(&m1, &poly_parse("0*chi1", r1.cohomology_ring()).unwrap()).unwrap_err();
        assert_eq!(e.reason, "inhomogeneous_element");
        let e = phi_of(&m1, &poly_parse("3", r1.cohomology_ring()).unwrap()).unwrap_err();
        assert_eq!(e.reason, "constant_element");
    }

    #[test]
    fn cut_examples() {
        let r2 = RingSpec::parse(101, &["x"], &["x^2"]).unwrap();
        let k = ModulePresentation::residue_field(&r2);
        let kk = cut(&k, &poly_parse("chi1", r2.cohomology_ring()).unwrap()).unwrap();
        assert!(kk.is_free());
        assert_eq!(kk.num_gens(), 1);

        // a zero cocycle splits: K = M ⊕ Ω^{n-1} M
        let r1 = RingSpec::parse(101, &["x", "y"], &["x^2", "y^2"]).unwrap();
        let m1 = present_module("gens: [0]\nrelations: [[x]]", &r1).unwrap();
        let kk = cut(&m1, &poly_parse("chi2", r1.cohomology_ring()).unwrap()).unwrap();
        let expect = m1.direct_sum(&syzygy_module(&m1, 1).unwrap().shifted(-2));
        assert_eq!(resolve_min(&kk, 4).unwrap().betti(), resolve_min(&expect, 4).unwrap().betti());
        assert_eq!(kk.gen_degrees().len(), 2);
    }
}
