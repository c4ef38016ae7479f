use crate::arith::{Matrix, PrimeField};
use crate::error::{Error, Result};
use crate::resolve::Resolution;

/// `E(M, k) = Ext_Q(M, k)` truncated at `E^N`, with the degree-2 actions of
/// the operators `chi_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtKModule {
    pub field: PrimeField,
    /// `dims[i] = dim E^i = b_i`.
    pub dims: Vec<usize>,
    /// `actions[j][i]: E^i → E^{i+2}`.
    pub actions: Vec<Vec<Matrix>>,
}

impl ExtKModule {
    /// Top computed index `N`.
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn codim(&self) -> usize {
        self.actions.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Components `E^0..E^n`.
    pub fn truncated(&self, n: usize) -> ExtKModule {
        let n = n.min(self.top());
        ExtKModule {
            field: self.field,
            dims: self.dims[..=n].to_vec(),
            actions: self.actions.iter().map(|a| a[..n.saturating_sub(1).min(a.len())].to_vec()).collect(),
        }
    }

    /// `chi_j chi_k = chi_k chi_j` on every composable window.
    pub fn actions_commute(&self) -> bool {
        let f = &self.field;
        let n = self.top();
        for j in 0..self.codim() {
            for k in j + 1..self.codim() {
                for i in 0..n.saturating_sub(3) {
                    let a = self.actions[k][i + 2].mul(&self.actions[j][i], f);
                    let b = self.actions[j][i + 2].mul(&self.actions[k][i], f);
                    if a != b {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Builds `E(M, k)`: the action of `chi_j` on `E^i` is the transpose of the
/// constant part of `t_j^{(i)}`.
pub fn ext_k_module(res: &Resolution) -> Result<ExtKModule> {
    let ops =
        res.operators().ok_or_else(|| Error::input("missing_operators", "resolution has no operators attached"))?;
    let ring = res.ring();
    let dims = res.betti();
    let mut actions = vec![Vec::with_capacity(ops.reduced.len()); ring.codim()];
    for (i, tj) in ops.reduced.iter().enumerate() {
        for (j, t) in tj.iter().enumerate() {
            let mut m = Matrix::zeros(dims[i + 2], dims[i]);
            for (s, col) in t.columns.iter().enumerate() {
                for term in col.terms() {
                    if term.mono.is_one() {
                        m[(s, term.comp as usize)] = term.coeff;
                    }
                }
            }
            actions[j].push(m);
        }
    }
    Ok(ExtKModule { field: *ring.field(), dims, actions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::lift_and_operators;
    use crate::resolve::{present_module, resolve_min, ModulePresentation, RingSpec};

    #[test]
    fn corpus_ext_modules() {
        let r2 = RingSpec::parse(101, &["x"], &["x^2"]).unwrap();
        let e = ext_k_module(
            &lift_and_operators(&resolve_min(&ModulePresentation::residue_field(&r2), 6).unwrap()).unwrap(),
        )
        .unwrap();
        assert_eq!(e.dims, vec![1; 7]);
        assert!(e.actions[0].iter().all(|m| *m == Matrix::identity(1)));

        let r1 = RingSpec::parse(101, &["x", "y"], &["x^2", "y^2"]).unwrap();
        let m1 = present_module("gens: [0]\nrelations: [[x]]", &r1).unwrap();
        let e = ext_k_module(&lift_and_operators(&resolve_min(&m1, 6).unwrap()).unwrap()).unwrap();
        assert!(e.actions[0].iter().all(|m| *m == Matrix::identity(1)));
        assert!(e.actions[1].iter().all(|m| m.is_zero()));

        let k = ModulePresentation::residue_field(&r1);
        let e = ext_k_module(&lift_and_operators(&resolve_min(&k, 8).unwrap()).unwrap()).unwrap();
        assert!(e.actions_commute());
        let free = ModulePresentation::free(&r1, vec![0]);
        let e = ext_k_module(&lift_and_operators(&resolve_min(&free, 4).unwrap()).unwrap()).unwrap();
        assert_eq!(e.dims, vec![1, 0, 0, 0, 0]);
        assert!(e.actions.iter().flatten().all(|m| m.is_zero()));
    }
}
