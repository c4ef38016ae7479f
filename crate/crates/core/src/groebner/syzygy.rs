use super::buchberger::{groebner_basis_raw, GbBudget, GroebnerBasis};
use super::vector::{VecOps, Vector};
use crate::arith::{Poly, PolyRing};
use crate::error::{Error, Result};

/// Generators of the syzygy module of `gens ⊂ P^rank`.
///
/// Each generator `g_i` is augmented to `(g_i, e_i)` in `P^rank ⊕ P^m`; a
/// Gröbner basis of the augmented module in position-over-term order (the
/// original components dominate) contains a Gröbner basis of the syzygies as
/// the elements vanishing on the first `rank` components.
///
/// With `quotient = Some(gb_f)` the computation happens over `Q = P/(f)`:
/// the relations `h e_k` for `h` in the basis of `(f)` are adjoined on both
/// sides, and the returned syzygies are reduced modulo `(f)` with pure
/// `(f)`-multiples dropped.
pub fn syzygies(
    ring: &PolyRing,
    rank: usize,
    gens: &[Vector],
    quotient: Option<&[Poly]>,
    budget: GbBudget,
) -> Result<Vec<Vector>> {
    let m = gens.len();
    if let Some(bad) = gens.iter().position(|g| g.max_comp().is_some_and(|c| c as usize >= rank)) {
        return Err(Error::input(
            "component_out_of_range",
            format!("generator {bad} does not live in a rank {rank} module"),
        ));
    }
    let r = rank as u32;
    let mut aug: Vec<Vector> =
        gens.iter().enumerate().map(|(i, g)| g.concat(&Vector::from_poly(&ring.one(), r + i as u32))).collect();
    if let Some(fs) = quotient {
        for h in fs {
            for k in 0..r {
                aug.push(Vector::from_poly(h, k));
            }
            for i in 0..m as u32 {
                aug.push(Vector::from_poly(h, r + i));
            }
        }
    }
    let gb = groebner_basis_raw(ring, rank + m, &aug, budget, false)?;
    let gbf = match quotient {
        Some(fs) => Some(groebner_basis_raw(
            ring,
            1,
            &fs.iter().map(|h| Vector::from_poly(h, 0)).collect::<Vec<_>>(),
            budget,
            false,
        )?),
        None => None,
    };
    let mut out = Vec::new();
    for g in gb.elements() {
        if g.leading().unwrap().comp < r {
            continue;
        }
        let mut s = g.restrict(r..r + m as u32);
        if let Some(gbf) = &gbf {
            s = reduce_componentwise(ring, &s, m, gbf);
            if s.is_zero() {
                continue;
            }
        }
        out.push(s);
    }
    Ok(out)
}

/// Reduces every component of `v` modulo an ideal basis.
pub fn reduce_componentwise(ring: &PolyRing, v: &Vector, rank: usize, gbf: &GroebnerBasis) -> Vector {
    let polys: Vec<Poly> = v.to_polys(rank).iter().map(|p| gbf.reduce(&Vector::from_poly(p, 0)).component(0)).collect();
    VecOps::new(ring).adopt(&Vector::from_polys(&polys, 0))
}

/// Checks `sum_i s_i * gens_i == 0` in `P^rank`, or in `Q^rank` when a basis
/// of `(f)` is given.
pub fn is_syzygy(ring: &PolyRing, s: &Vector, gens: &[Vector], quotient: Option<&GroebnerBasis>) -> bool {
    let ops = VecOps::new(ring);
    let coeffs = s.to_polys(gens.len());
    let v = ops.combine(&coeffs, gens);
    match quotient {
        None => v.is_zero(),
        Some(gbf) => {
            // reduce each component modulo (f)
            let rank = v.max_comp().map_or(0, |c| c as usize + 1);
            v.to_polys(rank).iter().all(|p| gbf.reduce(&Vector::from_poly(p, 0)).is_zero())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{poly_parse, OrderSpec, PrimeField};
    use crate::groebner::buchberger::ideal_groebner_basis;

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(PrimeField::new(101).unwrap(), vars.iter().map(|s| s.to_string()).collect(), OrderSpec::DegRevLex)
            .unwrap()
    }

    fn p(r: &PolyRing, s: &str) -> Poly {
        poly_parse(s, r).unwrap()
    }

    #[test]
    fn koszul_relation() {
        let r = ring(&["x", "y"]);
        let gens = vec![Vector::from_poly(&p(&r, "x"), 0), Vector::from_poly(&p(&r, "y"), 0)];
        let syz = syzygies(&r, 1, &gens, None, GbBudget::default()).unwrap();
        assert_eq!(syz.len(), 1);
        let ops = VecOps::new(&r);
        let expected = Vector::from_polys(&[p(&r, "y"), p(&r, "-x")], 0);
        let s = &syz[0];
        // up to a scalar
        let c = r.field().div(expected.leading().unwrap().coeff, s.leading().unwrap().coeff);
        assert_eq!(ops.scale(s, c), expected);
    }

    #[test]
    fn syzygy_over_dual_numbers() {
        let r = ring(&["x"]);
        let f = vec![p(&r, "x^2")];
        let gens = vec![Vector::from_poly(&p(&r, "x"), 0)];
        let syz = syzygies(&r, 1, &gens, Some(&f), GbBudget::default()).unwrap();
        assert_eq!(syz, vec![Vector::from_poly(&p(&r, "x"), 0)]);
        let gbf = ideal_groebner_basis(&r, &f, GbBudget::default()).unwrap();
        assert!(is_syzygy(&r, &syz[0], &gens, Some(&gbf)));
    }

    #[test]
    fn unit_generator_has_only_quotient_syzygies() {
        let r = ring(&["x", "y"]);
        let f = vec![p(&r, "x^2"), p(&r, "y^2")];
        let gens = vec![Vector::from_poly(&r.one(), 0)];
        let syz = syzygies(&r, 1, &gens, Some(&f), GbBudget::default()).unwrap();
        assert!(syz.is_empty());
        let syz = syzygies(&r, 1, &gens, None, GbBudget::default()).unwrap();
        assert!(syz.is_empty());
    }
}
