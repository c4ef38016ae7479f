use super::graded::{kernel_by_degree, minimal_subset};
use super::presentation::{GradedMatrix, ModulePresentation};
use super::ring::{Ring, RingSpec};
use crate::error::{Error, Result};
use crate::groebner::{syzygies, Vector};

/// Minimal graded free resolution `F_N → … → F_1 → F_0 → M`, optionally
/// carrying the Eisenbud operators of its lift to `P`.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Ring,
    module: ModulePresentation,
    /// `differentials[i]` is `d_{i+1}: F_{i+1} → F_i`.
    differentials: Vec<GradedMatrix>,
    pub(crate) operators: Option<Operators>,
}

/// Eisenbud operators of a resolution: `lifted[i][j]` is `t̃_j^{(i)}` over
/// `P` with `d̃_{i+1} d̃_{i+2} = sum_j f_j t̃_j^{(i)}`, and `reduced[i][j]` is
/// its image `t_j^{(i)}: F_{i+2} → F_i` over `Q`.
#[derive(Clone, Debug)]
pub struct Operators {
    pub lifted: Vec<Vec<GradedMatrix>>,
    pub reduced: Vec<Vec<GradedMatrix>>,
}

impl Resolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The minimal presentation that was resolved.
    pub fn module(&self) -> &ModulePresentation {
        &self.module
    }

    /// Number of computed steps `N`.
    pub fn len(&self) -> usize {
        self.differentials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.differentials.is_empty()
    }

    /// `d_i` for `1 ≤ i ≤ N`.
    pub fn d(&self, i: usize) -> &GradedMatrix {
        &self.differentials[i - 1]
    }

    pub fn differentials(&self) -> &[GradedMatrix] {
        &self.differentials
    }

    /// Generator degrees of `F_i` for `0 ≤ i ≤ N`.
    pub fn degrees(&self, i: usize) -> &[i32] {
        if i == 0 {
            &self.module.relations().target
        } else {
            &self.differentials[i - 1].source
        }
    }

    pub fn betti(&self) -> Vec<usize> {
        (0..=self.len()).map(|i| self.degrees(i).len()).collect()
    }

    /// The lift `d̃_i` of `d_i` to `P`: entries are stored in normal form,
    /// so the lift is the same matrix read over `P`.
    pub fn lifted_d(&self, i: usize) -> &GradedMatrix {
        self.d(i)
    }

    /// `t_j^{(i)}` over `Q`, if operators have been attached.
    pub fn operator(&self, i: usize, j: usize) -> Option<&GradedMatrix> {
        self.operators.as_ref()?.reduced.get(i)?.get(j)
    }

    /// `t̃_j^{(i)}` over `P`, if operators have been attached.
    pub fn lifted_operator(&self, i: usize, j: usize) -> Option<&GradedMatrix> {
        self.operators.as_ref()?.lifted.get(i)?.get(j)
    }

    pub fn operators(&self) -> Option<&Operators> {
        self.operators.as_ref()
    }

    pub(crate) fn with_operators(mut self, ops: Operators) -> Resolution {
        self.operators = Some(ops);
        self
    }

    /// The resolution truncated to its first `n` steps.
    pub fn truncated(&self, n: usize) -> Resolution {
        let n = n.min(self.len());
        Resolution {
            ring: self.ring.clone(),
            module: self.module.clone(),
            differentials: self.differentials[..n].to_vec(),
            operators: self.operators.as_ref().map(|ops| {
                let k = n.saturating_sub(1).min(ops.reduced.len());
                Operators { lifted: ops.lifted[..k].to_vec(), reduced: ops.reduced[..k].to_vec() }
            }),
        }
    }
}

/// Generators of `ker(d)` for `d: ⊕ Q(-source) → ⊕ Q(-target)`, minimal.
fn minimal_kernel(ring: &RingSpec, d: &GradedMatrix) -> Result<(Vec<i32>, Vec<Vector>)> {
    if d.cols() == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let shifts = &d.source;
    let gens: Vec<Vector> = if let Some(top) = ring.socle_degree() {
        let lo = *shifts.iter().min().unwrap();
        let hi = *shifts.iter().max().unwrap() + top as i32;
        kernel_by_degree(ring, shifts, &d.target, &d.columns, lo, hi)
    } else {
        syzygies(ring.ambient(), d.rows(), &d.columns, Some(&ring.ci_basis_polys()), ring.budget())?
            .into_iter()
            .map(|s| ring.nf_vector(&s))
            .filter(|s| !s.is_zero())
            .collect()
    };
    let keep = minimal_subset(ring, shifts, &gens);
    let cols: Vec<Vector> = keep.iter().map(|&k| gens[k].clone()).collect();
    let degs = cols.iter().map(|c| c.homogeneous_degree(shifts).expect("homogeneous syzygy")).collect();
    Ok((degs, cols))
}

/// Minimal graded free resolution of `M` to homological degree `steps`.
pub fn resolve_min(m: &ModulePresentation, steps: usize) -> Result<Resolution> {
    if steps == 0 {
        return Err(Error::input("steps", "a resolution needs at least one step"));
    }
    let ring = m.ring().clone();
    let module = m.minimalize();
    let mut differentials = vec![module.relations().clone()];
    while differentials.len() < steps {
        let d = differentials.last().unwrap();
        let (degs, cols) = minimal_kernel(&ring, d)?;
        differentials.push(GradedMatrix::new(d.source.clone(), degs, cols));
    }
    Ok(Resolution { ring, module, differentials, operators: None })
}

/// `Ω^n(M)`, presented by the columns of `d_n` modulo the columns of
/// `d_{n+1}`. For `n = 0` this is `M` itself.
pub fn syzygy_module(m: &ModulePresentation, n: usize) -> Result<ModulePresentation> {
    if n == 0 {
        return Ok(m.clone());
    }
    let res = resolve_min(m, n + 1)?;
    Ok(ModulePresentation::from_matrix(m.ring(), res.d(n + 1).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolve::present_module;

    fn ring(vars: &[&str], ci: &[&str]) -> Ring {
        RingSpec::parse(101, vars, ci).unwrap()
    }

    fn check_complex(res: &Resolution) {
        for i in 1..res.len() {
            assert!(res.d(i).compose(res.ring(), res.d(i + 1)).is_zero(), "d{i} d{} != 0", i + 1);
        }
        for d in res.differentials() {
            assert!(!d.has_unit_entry());
        }
    }

    #[test]
    fn residue_field_over_dual_numbers() {
        let r = ring(&["x"], &["x^2"]);
        let k = present_module("gens: [0]\nrelations: [[x]]", &r).unwrap();
        let res = resolve_min(&k, 5).unwrap();
        assert_eq!(res.betti(), vec![1; 6]);
        for d in res.differentials() {
            assert_eq!(d.entry(0, 0), r.ambient().var(0));
        }
        check_complex(&res);
    }

    #[test]
    fn residue_field_over_r1() {
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        let res = resolve_min(&ModulePresentation::residue_field(&r), 4).unwrap();
        assert_eq!(res.betti(), vec![1, 2, 3, 4, 5]);
        check_complex(&res);
    }

    #[test]
    fn free_module_resolves_itself() {
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        let res = resolve_min(&ModulePresentation::free(&r, vec![0]), 3).unwrap();
        assert_eq!(res.betti(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn non_artinian_ring_uses_groebner_syzygies() {
        let r = ring(&["x", "y"], &["x^2"]);
        let res = resolve_min(&ModulePresentation::residue_field(&r), 5).unwrap();
        // k over k[x,y]/(x^2): Poincaré series (1+t)/(1-t)
        assert_eq!(res.betti(), vec![1, 2, 2, 2, 2, 2]);
        check_complex(&res);
    }

    #[test]
    fn syzygy_modules() {
        let r = ring(&["x"], &["x^2"]);
        let k = ModulePresentation::residue_field(&r);
        assert_eq!(syzygy_module(&k, 0).unwrap(), k);
        let om = syzygy_module(&k, 1).unwrap();
        assert_eq!(om.gen_degrees(), &[1]);
        assert_eq!(om.relations().cols(), 1);
        assert_eq!(om.relations().entry(0, 0), r.ambient().var(0));

        let r1 = ring(&["x", "y"], &["x^2", "y^2"]);
        let m1 = present_module("gens: [0]\nrelations: [[x]]", &r1).unwrap();
        let om = syzygy_module(&m1, 1).unwrap();
        assert_eq!(om.gen_degrees(), &[1]);
        assert_eq!(om.relations().cols(), 1);
        assert_eq!(om.relations().entry(0, 0), r1.ambient().var(0));
    }

    #[test]
    fn tail_of_betti_sequence() {
        let r = ring(&["x", "y"], &["x^2", "y^2"]);
        let k = ModulePresentation::residue_field(&r);
        let full = resolve_min(&k, 5).unwrap().betti();
        let om2 = syzygy_module(&k, 2).unwrap();
        assert_eq!(resolve_min(&om2, 3).unwrap().betti(), full[2..].to_vec());
    }
}
