use std::collections::{BTreeMap, HashMap};

use super::vector::{Term, VecOps, Vector};
use crate::arith::{Monomial, Poly, PolyRing};
use crate::error::{Error, Result};

/// Resource limits for Gröbner computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbBudget {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: usize,
    /// Maximum total degree of an S-pair lcm.
    pub max_degree: u32,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget { max_pairs: 50_000, max_degree: 40 }
    }
}

/// Reduced Gröbner basis of a submodule of `P^rank` in position-over-term
/// order. Elements are monic and sorted ascending by leading term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: PolyRing,
    rank: usize,
    elements: Vec<Vector>,
    /// `cofactors[i]` expresses `elements[i]` in the input generators:
    /// component `k` of the cofactor vector multiplies input `k`.
    cofactors: Option<Vec<Vector>>,
    num_inputs: usize,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn cofactors(&self) -> Option<&[Vector]> {
        self.cofactors.as_deref()
    }

    pub fn num_inputs(&self) -> usize {
        self.num_inputs
    }

    /// True iff the submodule is the whole free module (in particular, for
    /// an ideal: iff it contains 1).
    pub fn is_whole_module(&self) -> bool {
        (0..self.rank as u32)
            .all(|c| self.elements.iter().any(|g| g.leading().is_some_and(|t| t.comp == c && t.mono.is_one())))
    }

    pub fn leading_terms(&self) -> impl Iterator<Item = (u32, Monomial)> + '_ {
        self.elements.iter().map(|g| {
            let t = g.leading().expect("basis elements are nonzero");
            (t.comp, t.mono)
        })
    }

    /// Division with remainder. Reducers are tried in descending order of
    /// leading term; returns the remainder and one multiplier per element.
    pub fn normal_form(&self, v: &Vector) -> (Vector, Vec<Poly>) {
        let ops = VecOps::new(&self.ring);
        let order: Vec<usize> = (0..self.elements.len()).rev().collect();
        let mut mults: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); self.elements.len()];
        let rem = reduce(&ops, v, &self.elements, &order, true, |i, m, c| {
            mults[i].push((m, c));
        });
        let cof = mults.into_iter().map(|t| self.ring.from_terms(t)).collect();
        (rem, cof)
    }

    /// Remainder only.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let ops = VecOps::new(&self.ring);
        let order: Vec<usize> = (0..self.elements.len()).rev().collect();
        reduce(&ops, v, &self.elements, &order, true, |_, _, _| {})
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Checks the Buchberger criterion directly: every S-vector of two basis
    /// elements with equal leading component reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let ops = VecOps::new(&self.ring);
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                if let Some(s) = s_vector(&ops, &self.elements[i], &self.elements[j]) {
                    if !self.reduce(&s).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// S-vector of two monic elements, if their leading components agree.
fn s_vector(ops: &VecOps, a: &Vector, b: &Vector) -> Option<Vector> {
    let (la, lb) = (a.leading()?, b.leading()?);
    if la.comp != lb.comp {
        return None;
    }
    let l = la.mono.lcm(&lb.mono);
    let fa = la.mono.quotient_of(&l);
    let fb = lb.mono.quotient_of(&l);
    let f = ops.ring.field();
    let ca = f.inv(la.coeff);
    let cb = f.neg(f.inv(lb.coeff));
    let s = ops.mul_term(a, &fa, ca);
    Some(ops.add_scaled(&s, b, cb, &fb))
}

/// Full reduction of `v` by `basis`. `record(i, m, c)` is called for every
/// step `v -= c * m * basis[i]`.
fn reduce(
    ops: &VecOps,
    v: &Vector,
    basis: &[Vector],
    try_order: &[usize],
    full: bool,
    mut record: impl FnMut(usize, Monomial, u32),
) -> Vector {
    let f = ops.ring.field();
    let mut by_comp: HashMap<u32, Vec<usize>> = HashMap::new();
    for &i in try_order {
        if let Some(t) = basis[i].leading() {
            by_comp.entry(t.comp).or_default().push(i);
        }
    }
    let mut cur = v.clone();
    let mut done: Vec<Term> = Vec::new();
    while let Some(&lt) = cur.leading() {
        let reducer = by_comp
            .get(&lt.comp)
            .and_then(|cands| cands.iter().copied().find(|&i| basis[i].leading().unwrap().mono.divides(&lt.mono)));
        match reducer {
            Some(i) => {
                let g = basis[i].leading().unwrap();
                let m = g.mono.quotient_of(&lt.mono);
                let c = f.div(lt.coeff, g.coeff);
                record(i, m, c);
                cur = ops.add_scaled(&cur, &basis[i], f.neg(c), &m);
            }
            None => {
                if !full {
                    break;
                }
                done.push(lt);
                cur.pop_leading();
            }
        }
    }
    if !full {
        return cur;
    }
    Vector::from_sorted(done)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    comp: u32,
    lcm: Monomial,
}

struct Engine<'a> {
    ops: VecOps<'a>,
    rank: usize,
    budget: GbBudget,
    basis: Vec<Vector>,
    cofs: Option<Vec<Vector>>,
    pairs: Vec<Pair>,
    reductions: usize,
}

impl<'a> Engine<'a> {
    fn lt(&self, i: usize) -> Term {
        *self.basis[i].leading().unwrap()
    }

    /// Gebauer–Möller update after appending basis element `h`.
    fn update(&mut self, h: usize) {
        let lh = self.lt(h);
        let ideal_case = self.rank == 1;
        let mut cands: Vec<Pair> = (0..h)
            .filter(|&i| self.lt(i).comp == lh.comp)
            .map(|i| Pair { i, j: h, comp: lh.comp, lcm: self.lt(i).mono.lcm(&lh.mono) })
            .collect();
        let coprime = |p: &Pair, eng: &Engine| ideal_case && eng.lt(p.i).mono.is_coprime(&lh.mono);

        // chain criterion among new pairs
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = cands.pop() {
            let dominated = cands.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime(&p, self) || !dominated {
                kept.push(p);
            }
        }
        let new_pairs: Vec<Pair> = kept.into_iter().filter(|p| !coprime(p, self)).collect();

        // old pairs made redundant by h
        let lts: Vec<Term> = (0..=h).map(|i| self.lt(i)).collect();
        self.pairs.retain(|p| {
            if p.comp != lh.comp || !lh.mono.divides(&p.lcm) {
                return true;
            }
            let lih = lts[p.i].mono.lcm(&lh.mono);
            let ljh = lts[p.j].mono.lcm(&lh.mono);
            lih == p.lcm || ljh == p.lcm
        });
        // among new pairs with equal lcm keep one
        let mut seen: Vec<Monomial> = Vec::new();
        for p in new_pairs {
            if !seen.contains(&p.lcm) {
                seen.push(p.lcm);
                self.pairs.push(p);
            }
        }
    }

    fn insert(&mut self, v: Vector, cof: Option<Vector>) {
        let c = v.leading().unwrap().coeff;
        let inv = self.ops.ring.field().inv(c);
        self.basis.push(self.ops.scale(&v, inv));
        if let Some(cofs) = self.cofs.as_mut() {
            cofs.push(self.ops.scale(&cof.unwrap(), inv));
        }
        self.update(self.basis.len() - 1);
    }

    /// Top-reduces `v` (with cofactor) by the current basis.
    fn reduce_tracked(&self, v: Vector, cof: Option<Vector>) -> (Vector, Option<Vector>) {
        let order: Vec<usize> = (0..self.basis.len()).collect();
        let mut steps: Vec<(usize, Monomial, u32)> = Vec::new();
        let track = cof.is_some();
        let r = reduce(&self.ops, &v, &self.basis, &order, false, |i, m, c| {
            if track {
                steps.push((i, m, c));
            }
        });
        let cof = cof.map(|mut cv| {
            let f = self.ops.ring.field();
            let cofs = self.cofs.as_ref().unwrap();
            for (i, m, c) in steps {
                cv = self.ops.add_scaled(&cv, &cofs[i], f.neg(c), &m);
            }
            cv
        });
        (r, cof)
    }

    fn select_pair(&mut self) -> Pair {
        // normal strategy: smallest lcm, ties by component then indices
        let ring = self.ops.ring;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                ring.cmp(&pa.lcm, &pb.lcm).then(pa.comp.cmp(&pb.comp)).then((pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .unwrap();
        self.pairs.swap_remove(best)
    }

    fn run(&mut self) -> Result<()> {
        while !self.pairs.is_empty() {
            let pair = self.select_pair();
            if pair.lcm.degree() > self.budget.max_degree {
                return Err(Error::budget(
                    "degree_budget",
                    format!(
                        "S-pair of degree {} exceeds the degree budget {}",
                        pair.lcm.degree(),
                        self.budget.max_degree
                    ),
                ));
            }
            self.reductions += 1;
            if self.reductions > self.budget.max_pairs {
                return Err(Error::budget(
                    "pair_budget",
                    format!("more than {} S-pairs reduced", self.budget.max_pairs),
                ));
            }
            let (a, b) = (&self.basis[pair.i], &self.basis[pair.j]);
            let s = s_vector(&self.ops, a, b).unwrap();
            let scof = self.cofs.as_ref().map(|cofs| {
                let la = a.leading().unwrap().mono;
                let lb = b.leading().unwrap().mono;
                let t = self.ops.mul_term(&cofs[pair.i], &la.quotient_of(&pair.lcm), 1);
                self.ops.add_scaled(&t, &cofs[pair.j], self.ops.ring.field().neg(1), &lb.quotient_of(&pair.lcm))
            });
            let (h, hcof) = self.reduce_tracked(s, scof);
            if !h.is_zero() {
                self.insert(h, hcof);
            }
        }
        Ok(())
    }

    /// Drops redundant elements, tail-reduces, sorts ascending.
    fn finish(mut self) -> (Vec<Vector>, Option<Vec<Vector>>) {
        let n = self.basis.len();
        let mut keep = vec![true; n];
        for i in 0..n {
            let li = self.lt(i);
            for j in 0..n {
                if i == j || !keep[j] {
                    continue;
                }
                let lj = self.lt(j);
                if lj.comp == li.comp && lj.mono.divides(&li.mono) && (lj.mono != li.mono || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let idx: Vec<usize> = (0..n).filter(|&i| keep[i]).collect();
        let minimal: Vec<Vector> = idx.iter().map(|&i| self.basis[i].clone()).collect();
        let mut cofs = self.cofs.take().map(|c| idx.iter().map(|&i| c[i].clone()).collect::<Vec<_>>());
        let orig_cofs = cofs.clone();
        let f = self.ops.ring.field();
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let g = &minimal[k];
            let head = Vector::from_terms(self.ops.ring, vec![g.terms()[0]]);
            let tail = Vector::from_terms(self.ops.ring, g.terms()[1..].to_vec());
            let others: Vec<usize> = (0..minimal.len()).filter(|&j| j != k).collect();
            let mut steps = Vec::new();
            let tail_nf = reduce(&self.ops, &tail, &minimal, &others, true, |i, m, c| steps.push((i, m, c)));
            reduced.push(self.ops.add(&head, &tail_nf));
            if let (Some(cofs), Some(orig)) = (cofs.as_mut(), orig_cofs.as_ref()) {
                // tail reduction used the unreduced elements
                let mut cv = orig[k].clone();
                for (i, m, c) in steps {
                    cv = self.ops.add_scaled(&cv, &orig[i], f.neg(c), &m);
                }
                cofs[k] = cv;
            }
        }
        let mut order: Vec<usize> = (0..reduced.len()).collect();
        let ring = self.ops.ring;
        order.sort_by(|&a, &b| {
            let (ta, tb) = (reduced[a].leading().unwrap(), reduced[b].leading().unwrap());
            super::vector::cmp_pot(ring, (ta.comp, &ta.mono), (tb.comp, &tb.mono))
        });
        let elements = order.iter().map(|&i| reduced[i].clone()).collect();
        let cofs = cofs.map(|c| order.iter().map(|&i| c[i].clone()).collect());
        (elements, cofs)
    }
}

/// Computes a reduced Gröbner basis of the submodule of `P^rank` generated
/// by `gens`, without homogeneity checks. Cofactors are tracked on request.
pub(crate) fn groebner_basis_raw(
    ring: &PolyRing,
    rank: usize,
    gens: &[Vector],
    budget: GbBudget,
    track_cofactors: bool,
) -> Result<GroebnerBasis> {
    let ops = VecOps::new(ring);
    let mut eng = Engine {
        ops,
        rank,
        budget,
        basis: Vec::new(),
        cofs: track_cofactors.then(Vec::new),
        pairs: Vec::new(),
        reductions: 0,
    };
    // feed generators in ascending order of leading term
    let mut order: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_zero()).collect();
    order.sort_by(|&a, &b| {
        let (ta, tb) = (gens[a].leading().unwrap(), gens[b].leading().unwrap());
        super::vector::cmp_pot(ring, (ta.comp, &ta.mono), (tb.comp, &tb.mono)).then(a.cmp(&b))
    });
    for i in order {
        let cof = track_cofactors
            .then(|| Vector::from_terms(ring, vec![Term { comp: i as u32, mono: Monomial::ONE, coeff: 1 }]));
        let (h, hcof) = eng.reduce_tracked(gens[i].clone(), cof);
        if !h.is_zero() {
            eng.insert(h, hcof);
        }
        eng.run()?;
    }
    eng.run()?;
    let (elements, cofactors) = eng.finish();
    Ok(GroebnerBasis { ring: ring.clone(), rank, elements, cofactors, num_inputs: gens.len() })
}

/// Gröbner basis of a homogeneous submodule of a graded free module with
/// generator degrees `shifts`.
pub fn groebner_basis(
    ring: &PolyRing,
    shifts: &[i32],
    gens: &[Vector],
    budget: GbBudget,
    track_cofactors: bool,
) -> Result<GroebnerBasis> {
    for (i, g) in gens.iter().enumerate() {
        if let Some(c) = g.max_comp() {
            if c as usize >= shifts.len() {
                return Err(Error::input(
                    "component_out_of_range",
                    format!("generator {i} uses component {c} of a rank {} module", shifts.len()),
                ));
            }
        }
        if !g.is_zero() && g.homogeneous_degree(shifts).is_none() {
            return Err(Error::input("inhomogeneous_generator", format!("generator {i} is not homogeneous")));
        }
    }
    groebner_basis_raw(ring, shifts.len(), gens, budget, track_cofactors)
}

/// Gröbner basis of a homogeneous ideal.
pub fn ideal_groebner_basis(ring: &PolyRing, gens: &[Poly], budget: GbBudget) -> Result<GroebnerBasis> {
    let vs: Vec<Vector> = gens.iter().map(|p| Vector::from_poly(p, 0)).collect();
    groebner_basis(ring, &[0], &vs, budget, false)
}

/// Polynomials of an ideal basis (rank one).
pub fn basis_polys(gb: &GroebnerBasis) -> Vec<Poly> {
    gb.elements().iter().map(|v| v.component(0)).collect()
}

/// Leading monomials grouped by component.
pub fn leading_monomials_by_comp(gb: &GroebnerBasis) -> BTreeMap<u32, Vec<Monomial>> {
    let mut out: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    for (c, m) in gb.leading_terms() {
        out.entry(c).or_default().push(m);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{poly_parse, OrderSpec, PrimeField};

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(PrimeField::new(101).unwrap(), vars.iter().map(|s| s.to_string()).collect(), OrderSpec::DegRevLex)
            .unwrap()
    }

    fn polys(r: &PolyRing, s: &[&str]) -> Vec<Poly> {
        s.iter().map(|t| poly_parse(t, r).unwrap()).collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(&["x", "y"]);
        let gb = ideal_groebner_basis(&r, &polys(&r, &["x^2", "y^2"]), GbBudget::default()).unwrap();
        let mut got = basis_polys(&gb);
        got.sort_by_key(|p| format!("{p:?}"));
        let mut want = polys(&r, &["x^2", "y^2"]);
        want.sort_by_key(|p| format!("{p:?}"));
        assert_eq!(got, want);
    }

    #[test]
    fn small_nontrivial_basis() {
        let r = ring(&["x", "y"]);
        let gb = ideal_groebner_basis(&r, &polys(&r, &["x^2 - y^2", "x*y"]), GbBudget::default()).unwrap();
        assert_eq!(basis_polys(&gb), polys(&r, &["x*y", "x^2 - y^2", "y^3"]));
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn empty_input_gives_zero_ideal() {
        let r = ring(&["x", "y"]);
        let gb = ideal_groebner_basis(&r, &[], GbBudget::default()).unwrap();
        assert!(gb.is_empty());
        let gb = ideal_groebner_basis(&r, &[Poly::zero()], GbBudget::default()).unwrap();
        assert!(gb.is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"]);
        let one = |s: &str| Vector::from_poly(&poly_parse(s, &r).unwrap(), 0);
        let gb = ideal_groebner_basis(&r, &polys(&r, &["x^2"]), GbBudget::default()).unwrap();
        let (rem, cof) = gb.normal_form(&one("x^3"));
        assert!(rem.is_zero());
        assert_eq!(cof, polys(&r, &["x"]));

        let gb = ideal_groebner_basis(&r, &polys(&r, &["x^2", "y^2"]), GbBudget::default()).unwrap();
        let (rem, cof) = gb.normal_form(&one("x + y"));
        assert_eq!(rem, one("x + y"));
        assert!(cof.iter().all(|c| c.is_zero()));

        let (rem, cof) = gb.normal_form(&one("x^2*y^2"));
        assert!(rem.is_zero());
        // the reducer with the larger leading term (x^2) is preferred
        let x2 = basis_polys(&gb).iter().position(|p| *p == poly_parse("x^2", &r).unwrap()).unwrap();
        assert_eq!(cof[x2], poly_parse("y^2", &r).unwrap());
        assert!(cof[1 - x2].is_zero());
    }

    #[test]
    fn rejects_inhomogeneous_generator() {
        let r = ring(&["x", "y"]);
        let e = ideal_groebner_basis(&r, &polys(&r, &["x^2", "x + y^2"]), GbBudget::default()).unwrap_err();
        assert_eq!(e.reason, "inhomogeneous_generator");
        assert!(e.message.contains('1'));
    }

    #[test]
    fn degree_budget_is_reported() {
        let r = ring(&["x", "y", "z"]);
        let tight = GbBudget { max_pairs: 50_000, max_degree: 3 };
        let e = ideal_groebner_basis(&r, &polys(&r, &["x^2 - y*z", "y^2 - x*z", "z^2*x - y^3"]), tight);
        assert!(matches!(e, Err(ref err) if err.kind == crate::ErrorKind::Budget));
    }

    #[test]
    fn cofactors_reproduce_elements() {
        let r = ring(&["x", "y", "z"]);
        let gens: Vec<Vector> =
            polys(&r, &["x^2 - y*z", "y^2 - x*z", "x*y - z^2"]).iter().map(|p| Vector::from_poly(p, 0)).collect();
        let gb = groebner_basis(&r, &[0], &gens, GbBudget::default(), true).unwrap();
        let ops = VecOps::new(&r);
        for (g, c) in gb.elements().iter().zip(gb.cofactors().unwrap()) {
            let coeffs = c.to_polys(gens.len());
            assert_eq!(&ops.combine(&coeffs, &gens), g);
        }
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn module_basis_over_two_components() {
        let r = ring(&["x", "y"]);
        let v = |a: &str, b: &str| Vector::from_polys(&polys(&r, &[a, b]), 0);
        let gens = vec![v("x", "y"), v("y", "x"), v("x^2", "0")];
        let gb = groebner_basis(&r, &[0, 0], &gens, GbBudget::default(), true).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        let ops = VecOps::new(&r);
        for (g, c) in gb.elements().iter().zip(gb.cofactors().unwrap()) {
            assert_eq!(&ops.combine(&c.to_polys(gens.len()), &gens), g);
        }
        for g in &gens {
            assert!(gb.contains(g));
        }
    }
}
