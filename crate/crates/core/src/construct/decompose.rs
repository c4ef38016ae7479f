use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::univariate::{ext_gcd, irreducible_factors, minimal_polynomial, UniPoly};
use crate::arith::{EchelonSpan, Matrix, PrimeField, Scalar};
use crate::error::Result;
use crate::resolve::{vector_model, ModulePresentation, VectorModel};

/// Idempotent search settings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecomposeConfig {
    pub seed: u64,
    /// Random endomorphisms tried per summand before giving up on splitting.
    pub attempts: usize,
}

impl Default for DecomposeConfig {
    fn default() -> Self {
        DecomposeConfig { seed: 0xC15, attempts: 64 }
    }
}

/// A summand with its embedding into the original vector model.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: ModulePresentation,
    /// Basis of the summand in the coordinates of the input's vector model.
    pub basis: Vec<Vec<Scalar>>,
    /// The endomorphism algebra was certified local (so the summand is
    /// indecomposable).
    pub certified: bool,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub model: VectorModel,
    pub summands: Vec<Summand>,
}

impl Decomposition {
    /// Every summand was proven indecomposable.
    pub fn certified(&self) -> bool {
        self.summands.iter().all(|s| s.certified)
    }
}

/// A graded vector space with nilpotent actions, given in coordinates.
struct Piece {
    /// Columns: basis vectors in the coordinates of the input model.
    basis: Vec<Vec<Scalar>>,
    degrees: Vec<i32>,
    actions: Vec<Matrix>,
}

impl Piece {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis of the degree-0 endomorphisms: block-diagonal matrices
    /// commuting with every action.
    fn endomorphisms(&self, f: &PrimeField) -> Vec<Matrix> {
        let n = self.dim();
        // unknowns: entries (r, c) with equal degrees
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .filter(|&(r, c)| self.degrees[r] == self.degrees[c])
            .collect();
        let mut rows = Vec::new();
        for a in &self.actions {
            // (X A - A X)[i][k] = sum_l X[i][l] A[l][k] - A[i][l] X[l][k]
            for i in 0..n {
                for k in 0..n {
                    let mut row = vec![0; slots.len()];
                    for (s, &(r, c)) in slots.iter().enumerate() {
                        let mut v = 0;
                        if r == i {
                            v = f.add(v, a[(c, k)]);
                        }
                        if c == k {
                            v = f.sub(v, a[(i, r)]);
                        }
                        row[s] = v;
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
        let sys = if rows.is_empty() { Matrix::zeros(0, slots.len()) } else { Matrix::from_rows(rows) };
        sys.nullspace(f)
            .into_iter()
            .map(|v| {
                let mut m = Matrix::zeros(n, n);
                for (s, &(r, c)) in slots.iter().enumerate() {
                    m[(r, c)] = v[s];
                }
                m
            })
            .collect()
    }

    /// The sub-piece spanned by the column space of a degree-0 idempotent.
    fn image(&self, e: &Matrix, f: &PrimeField) -> Piece {
        let n = self.dim();
        // per degree block, pick independent columns of e
        let mut local: Vec<Vec<Scalar>> = Vec::new();
        let mut degs = Vec::new();
        let mut span = EchelonSpan::new(n);
        for c in 0..n {
            let col = e.column(c);
            if col.iter().any(|&x| x != 0) && span.insert(&col, f) {
                local.push(col);
                degs.push(self.degrees[c]);
            }
        }
        let basis: Vec<Vec<Scalar>> = local
            .iter()
            .map(|v| {
                let mut out = vec![0; self.basis.first().map_or(0, |b| b.len())];
                for (k, &x) in v.iter().enumerate() {
                    if x != 0 {
                        for (o, &b) in out.iter_mut().zip(&self.basis[k]) {
                            *o = f.add(*o, f.mul(x, b));
                        }
                    }
                }
                out
            })
            .collect();
        // restricted actions: solve  A * local_j = sum_i c_ij local_i
        let emb = Matrix::from_columns(&local, n);
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let img = a.mul(&emb, f);
                restrict(&emb, &img, f)
            })
            .collect();
        Piece { basis, degrees: degs, actions }
    }

    /// Local endomorphism algebra: every basis element is a scalar plus a
    /// nilpotent, and those nilpotent parts span a nilpotent ideal.
    fn certify_local(&self, end: &[Matrix], f: &PrimeField) -> bool {
        let n = self.dim();
        let mut nil = Vec::new();
        for b in end {
            let mp = minimal_polynomial(b, f);
            // mp must be (x - λ)^e
            let lambda = if mp.degree() <= 0 {
                0
            } else {
                let c = mp.0[mp.0.len() - 2];
                let e = f.from_u64(mp.degree() as u64);
                if e == 0 {
                    return false;
                }
                f.div(f.neg(c), e)
            };
            let shifted = b.sub(&Matrix::identity(n).scale(lambda, f), f);
            let mut pw = Matrix::identity(n);
            for _ in 0..n {
                pw = pw.mul(&shifted, f);
            }
            if !pw.is_zero() {
                return false;
            }
            nil.push(shifted);
        }
        // the algebra generated by the nilpotent parts must be nilpotent
        let flat = |m: &Matrix| m.entries().to_vec();
        let mut power = nil.clone();
        for _ in 0..=n {
            let mut span = EchelonSpan::new(n * n);
            let mut next = Vec::new();
            for a in &power {
                for b in &nil {
                    let p = a.mul(b, f);
                    if span.insert(&flat(&p), f) {
                        next.push(p);
                    }
                }
            }
            if next.is_empty() {
                return true;
            }
            power = next;
        }
        false
    }
}

/// Coordinates `C` with `emb * C = img`, for `emb` of full column rank.
fn restrict(emb: &Matrix, img: &Matrix, f: &PrimeField) -> Matrix {
    let k = emb.cols();
    let mut aug = Matrix::zeros(emb.rows(), k + img.cols());
    for r in 0..emb.rows() {
        for c in 0..k {
            aug[(r, c)] = emb[(r, c)];
        }
        for c in 0..img.cols() {
            aug[(r, k + c)] = img[(r, c)];
        }
    }
    let pivots = aug.rref(f);
    debug_assert!(pivots.iter().all(|&p| p < k), "image leaves the subspace");
    let mut out = Matrix::zeros(k, img.cols());
    for (row, &p) in pivots.iter().enumerate() {
        for c in 0..img.cols() {
            out[(p, c)] = aug[(row, k + c)];
        }
    }
    out
}

/// Bezout projector onto the generalized eigenspace of the first factor.
fn idempotent(a: &Matrix, mp: &UniPoly, factors: &[UniPoly], f: &PrimeField) -> Matrix {
    let q = &factors[0];
    let mut u = UniPoly::one();
    let mut rest = mp.clone();
    while rest.rem(q, f).is_zero() {
        rest = rest.divrem(q, f).0;
        u = u.mul(q, f);
    }
    // s u + t rest = 1; t(a) rest(a) is 1 on ker u(a), 0 on ker rest(a)
    let (_, _, t) = ext_gcd(&u, &rest, f);
    t.mul(&rest, f).rem(mp, f).eval_matrix(a, f)
}

fn split(piece: Piece, f: &PrimeField, cfg: &DecomposeConfig, rng: &mut ChaCha8Rng, out: &mut Vec<(Piece, bool)>) {
    let end = piece.endomorphisms(f);
    if end.len() <= 1 {
        out.push((piece, true));
        return;
    }
    let ch = f.characteristic() as u64;
    for _ in 0..cfg.attempts {
        let mut a = Matrix::zeros(piece.dim(), piece.dim());
        for b in &end {
            let c = rng.gen_range(0..ch) as Scalar;
            a.add_scaled_in_place(b, c, f);
        }
        let mp = minimal_polynomial(&a, f);
        let factors = irreducible_factors(&mp, f, rng);
        if factors.len() < 2 {
            continue;
        }
        let e = idempotent(&a, &mp, &factors, f);
        let one_minus = Matrix::identity(piece.dim()).sub(&e, f);
        let first = piece.image(&e, f);
        let second = piece.image(&one_minus, f);
        split(first, f, cfg, rng, out);
        split(second, f, cfg, rng, out);
        return;
    }
    let certified = piece.certify_local(&end, f);
    out.push((piece, certified));
}

/// Splits a finite-length module into indecomposable summands via
/// idempotents of its degree-0 endomorphism algebra.
pub fn decompose(m: &ModulePresentation, cfg: &DecomposeConfig) -> Result<Decomposition> {
    let ring = m.ring();
    let f = *ring.field();
    let model = vector_model(m)?;
    let n = model.dim();
    let piece = Piece {
        basis: (0..n)
            .map(|k| {
                let mut e = vec![0; n];
                e[k] = 1;
                e
            })
            .collect(),
        degrees: model.degrees.clone(),
        actions: model.actions.clone(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pieces = Vec::new();
    if n > 0 {
        split(piece, &f, cfg, &mut rng, &mut pieces);
    }
    let mut summands = Vec::with_capacity(pieces.len());
    for (p, certified) in pieces {
        let module = model.submodule_presentation(ring, &p.basis)?;
        summands.push(Summand { module, basis: p.basis, certified });
    }
    Ok(Decomposition { model, summands })
}
