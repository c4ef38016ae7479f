use super::presentation::ModulePresentation;
use super::resolution::resolve_min;
use crate::error::Result;
use crate::groebner::buchberger::groebner_basis_raw;
use crate::groebner::{syzygies, Vector};

/// Maximal Cohen–Macaulay test: `Ext^i_Q(M, Q) = 0` for `1 ≤ i ≤ dim Q`,
/// checked as exactness of the dualized resolution.
pub fn is_mcm(m: &ModulePresentation) -> Result<bool> {
    let ring = m.ring();
    let dim = ring.dim();
    if dim == 0 {
        return Ok(true);
    }
    let res = resolve_min(m, dim + 1)?;
    let fs = ring.ci_basis_polys();
    for i in 1..=dim {
        let bi = res.degrees(i).len();
        if bi == 0 {
            continue;
        }
        let next = res.d(i + 1).transpose();
        let kernel: Vec<Vector> = if next.cols() == 0 || next.rows() == 0 {
            (0..bi as u32).map(|k| Vector::from_poly(&ring.ambient().one(), k)).collect()
        } else {
            // columns of d_{i+1}^T are indexed by F_i
            syzygies(ring.ambient(), next.rows(), &next.columns, Some(&fs), ring.budget())?
        };
        let prev = res.d(i).transpose();
        let mut image = prev.columns.clone();
        for h in &fs {
            for k in 0..bi as u32 {
                image.push(Vector::from_poly(h, k));
            }
        }
        let gb = groebner_basis_raw(ring.ambient(), bi, &image, ring.budget(), false)?;
        if kernel.iter().any(|z| !gb.contains(z)) {
            return Ok(false);
        }
    }
    Ok(true)
}
