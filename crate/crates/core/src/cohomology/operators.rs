use crate::error::{Error, Result};
use crate::groebner::{VecOps, Vector};
use crate::resolve::{GradedMatrix, Operators, Resolution};

/// Lifts the resolution to `P` and writes `d̃_{i+1} d̃_{i+2}` as
/// `sum_j f_j t̃_j^{(i)}` for every `0 ≤ i ≤ N - 2`.
pub fn lift_and_operators(res: &Resolution) -> Result<Resolution> {
    if res.len() < 2 {
        return Err(Error::input("resolution_too_short", "operators need at least two steps"));
    }
    let ring = res.ring();
    let c = ring.codim();
    let ci_degs = ring.ci_degrees();
    let mut lifted = Vec::with_capacity(res.len() - 1);
    let mut reduced = Vec::with_capacity(res.len() - 1);
    for i in 0..res.len() - 1 {
        let sq = res.lifted_d(i + 1).compose_ambient(ring, res.lifted_d(i + 2));
        let rows = sq.rows();
        let mut cols_by_j: Vec<Vec<Vector>> = vec![Vec::with_capacity(sq.cols()); c];
        for (s, col) in sq.columns.iter().enumerate() {
            let mut entries: Vec<Vec<crate::arith::Poly>> = vec![Vec::with_capacity(rows); c];
            for (r, p) in col.to_polys(rows).iter().enumerate() {
                let t = ring.ci_cofactors(p).ok_or_else(|| {
                    Error::internal(
                        "broken_resolution",
                        format!("entry ({}, {}) of d{} d{} is not in (f)", r + 1, s + 1, i + 1, i + 2),
                    )
                })?;
                for (j, tj) in t.into_iter().enumerate() {
                    entries[j].push(tj);
                }
            }
            for j in 0..c {
                cols_by_j[j].push(Vector::from_polys(&entries[j], 0));
            }
        }
        let tgt = res.degrees(i).to_vec();
        let src: Vec<i32> = res.degrees(i + 2).to_vec();
        let mut lj = Vec::with_capacity(c);
        let mut rj = Vec::with_capacity(c);
        for (j, cols) in cols_by_j.into_iter().enumerate() {
            // t_j lowers internal degree by deg f_j
            let shifted: Vec<i32> = src.iter().map(|d| d - ci_degs[j] as i32).collect();
            let m = GradedMatrix::new(tgt.clone(), shifted, cols);
            let red = GradedMatrix::new(
                m.target.clone(),
                m.source.clone(),
                m.columns.iter().map(|v| ring.nf_vector(v)).collect(),
            );
            lj.push(m);
            rj.push(red);
        }
        lifted.push(lj);
        reduced.push(rj);
    }
    Ok(res.clone().with_operators(Operators { lifted, reduced }))
}

/// Checks `d̃_{i+1} d̃_{i+2} = sum_j f_j t̃_j^{(i)}` exactly over `P`.
pub fn operator_identity_holds(res: &Resolution) -> bool {
    let Some(ops) = res.operators() else {
        return false;
    };
    let ring = res.ring();
    let vo = VecOps::new(ring.ambient());
    ops.lifted.iter().enumerate().all(|(i, tj)| {
        let sq = res.lifted_d(i + 1).compose_ambient(ring, res.lifted_d(i + 2));
        sq.columns.iter().enumerate().all(|(s, col)| {
            let mut acc = Vector::zero();
            for (j, t) in tj.iter().enumerate() {
                acc = vo.add(&acc, &vo.mul_poly(&t.columns[s], &ring.ci()[j]));
            }
            acc == *col
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolve::{present_module, resolve_min, ModulePresentation, RingSpec};

    #[test]
    fn dual_numbers_have_unit_operator() {
        let r = RingSpec::parse(101, &["x"], &["x^2"]).unwrap();
        let res = lift_and_operators(&resolve_min(&ModulePresentation::residue_field(&r), 6).unwrap()).unwrap();
        assert!(operator_identity_holds(&res));
        for i in 0..5 {
            assert_eq!(res.operator(i, 0).unwrap().entry(0, 0), r.ambient().one());
        }
    }

    #[test]
    fn m1_operators() {
        let r = RingSpec::parse(101, &["x", "y"], &["x^2", "y^2"]).unwrap();
        let m1 = present_module("gens: [0]\nrelations: [[x]]", &r).unwrap();
        let res = lift_and_operators(&resolve_min(&m1, 6).unwrap()).unwrap();
        assert!(operator_identity_holds(&res));
        for i in 0..5 {
            assert_eq!(res.operator(i, 0).unwrap().entry(0, 0), r.ambient().one());
            assert!(res.operator(i, 1).unwrap().is_zero());
        }
    }

    #[test]
    fn free_module_has_empty_operators() {
        let r = RingSpec::parse(101, &["x", "y"], &["x^2", "y^2"]).unwrap();
        let res = lift_and_operators(&resolve_min(&ModulePresentation::free(&r, vec![0]), 4).unwrap()).unwrap();
        assert!(res.operators().unwrap().reduced.iter().flatten().all(|t| t.is_zero()));
        assert!(lift_and_operators(&resolve_min(&ModulePresentation::free(&r, vec![0]), 1).unwrap()).is_err());
    }
}
