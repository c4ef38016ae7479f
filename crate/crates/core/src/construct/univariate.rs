//! Dense univariate polynomials over `F_p` and their factorization, as
//! needed for minimal polynomials of endomorphisms.

use rand::Rng;

use crate::arith::{Matrix, PrimeField, Scalar};

/// Coefficients from the constant term up, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(pub Vec<Scalar>);

impl UniPoly {
    pub fn new(mut c: Vec<Scalar>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        UniPoly(c)
    }

    pub fn one() -> Self {
        UniPoly(vec![1])
    }

    pub fn x() -> Self {
        UniPoly(vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports -1.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    fn lead(&self) -> Scalar {
        *self.0.last().unwrap()
    }

    pub fn monic(&self, f: &PrimeField) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = f.inv(self.lead());
        UniPoly(self.0.iter().map(|&c| f.mul(c, inv)).collect())
    }

    pub fn add(&self, o: &Self, f: &PrimeField) -> Self {
        let n = self.0.len().max(o.0.len());
        let g = |v: &Vec<Scalar>, i: usize| v.get(i).copied().unwrap_or(0);
        UniPoly::new((0..n).map(|i| f.add(g(&self.0, i), g(&o.0, i))).collect())
    }

    pub fn sub(&self, o: &Self, f: &PrimeField) -> Self {
        let n = self.0.len().max(o.0.len());
        let g = |v: &Vec<Scalar>, i: usize| v.get(i).copied().unwrap_or(0);
        UniPoly::new((0..n).map(|i| f.sub(g(&self.0, i), g(&o.0, i))).collect())
    }

    pub fn mul(&self, o: &Self, f: &PrimeField) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniPoly(Vec::new());
        }
        let mut out = vec![0; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        UniPoly::new(out)
    }

    pub fn divrem(&self, d: &Self, f: &PrimeField) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dl = d.0.len();
        if r.len() < dl {
            return (UniPoly(Vec::new()), self.clone());
        }
        let inv = f.inv(d.lead());
        let mut q = vec![0; r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dl - 1], inv);
            q[k] = c;
            if c != 0 {
                for (i, &b) in d.0.iter().enumerate() {
                    r[k + i] = f.sub(r[k + i], f.mul(c, b));
                }
            }
        }
        r.truncate(dl - 1);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn rem(&self, d: &Self, f: &PrimeField) -> Self {
        self.divrem(d, f).1
    }

    pub fn derivative(&self, f: &PrimeField) -> Self {
        UniPoly::new(self.0.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, f.from_u64(i as u64))).collect())
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Self, f: &PrimeField) -> Self {
        let mut base = self.rem(m, f);
        let mut acc = UniPoly::one().rem(m, f);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f).rem(m, f);
            }
            base = base.mul(&base, f).rem(m, f);
            e >>= 1;
        }
        acc
    }

    /// Evaluates at a square matrix.
    pub fn eval_matrix(&self, a: &Matrix, f: &PrimeField) -> Matrix {
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for &c in self.0.iter().rev() {
            acc = acc.mul(a, f);
            for i in 0..n {
                acc[(i, i)] = f.add(acc[(i, i)], c);
            }
        }
        acc
    }
}

pub fn gcd(a: &UniPoly, b: &UniPoly, f: &PrimeField) -> UniPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.rem(&b, f);
        a = b;
        b = r;
    }
    a.monic(f)
}

/// `(g, s, t)` with `s a + t b = g = gcd(a, b)` monic.
pub fn ext_gcd(a: &UniPoly, b: &UniPoly, f: &PrimeField) -> (UniPoly, UniPoly, UniPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (UniPoly::one(), UniPoly(Vec::new()));
    let (mut t0, mut t1) = (UniPoly(Vec::new()), UniPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1, f);
        let s = s0.sub(&q.mul(&s1, f), f);
        let t = t0.sub(&q.mul(&t1, f), f);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let inv = f.inv(r0.lead());
    let sc = |p: &UniPoly| UniPoly::new(p.0.iter().map(|&c| f.mul(c, inv)).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

/// Product of the distinct monic irreducible factors.
pub fn radical(p: &UniPoly, f: &PrimeField) -> UniPoly {
    let p = p.monic(f);
    if p.degree() <= 0 {
        return UniPoly::one();
    }
    let d = p.derivative(f);
    if d.is_zero() {
        // p(x) = q(x^p) = q(x)^p over F_p
        let ch = f.characteristic() as usize;
        let q = UniPoly::new(p.0.iter().step_by(ch).copied().collect());
        return radical(&q, f);
    }
    let g = gcd(&p, &d, f);
    let c = p.divrem(&g, f).0.monic(f);
    let rg = radical(&g, f);
    let common = gcd(&c, &rg, f);
    c.mul(&rg, f).divrem(&common, f).0.monic(f)
}

/// Distinct-degree factorization of a squarefree monic polynomial:
/// `(product of all irreducible factors of degree i, i)`.
pub fn distinct_degree(p: &UniPoly, f: &PrimeField) -> Vec<(UniPoly, usize)> {
    let ch = f.characteristic() as u64;
    let mut out = Vec::new();
    let mut s = p.monic(f);
    let mut h = UniPoly::x().rem(&s, f);
    let mut i = 1;
    while s.degree() >= 2 * i as isize {
        h = h.powmod(ch, &s, f);
        let g = gcd(&s, &h.sub(&UniPoly::x(), f), f);
        if g.degree() > 0 {
            out.push((g.clone(), i));
            s = s.divrem(&g, f).0.monic(f);
            h = h.rem(&s, f);
        }
        i += 1;
    }
    if s.degree() > 0 {
        let d = s.degree() as usize;
        out.push((s, d));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of
/// degree `i`; the field must have odd characteristic.
pub fn equal_degree(p: &UniPoly, i: usize, f: &PrimeField, rng: &mut impl Rng) -> Vec<UniPoly> {
    let n = p.degree() as usize;
    if n == i {
        return vec![p.monic(f)];
    }
    let ch = f.characteristic() as u64;
    loop {
        let a = UniPoly::new((0..n).map(|_| rng.gen_range(0..ch) as Scalar).collect());
        if a.degree() <= 0 {
            continue;
        }
        // a^((p^i - 1)/2) = (a^(1 + p + ... + p^(i-1)))^((p-1)/2)
        let mut norm = UniPoly::one();
        let mut frob = a.rem(p, f);
        for _ in 0..i {
            norm = norm.mul(&frob, f).rem(p, f);
            frob = frob.powmod(ch, p, f);
        }
        let b = norm.powmod((ch - 1) / 2, p, f).sub(&UniPoly::one(), f);
        let g = gcd(p, &b, f);
        if g.degree() > 0 && g.degree() < p.degree() {
            let h = p.divrem(&g, f).0.monic(f);
            let mut out = equal_degree(&g, i, f, rng);
            out.extend(equal_degree(&h, i, f, rng));
            return out;
        }
    }
}

/// Distinct monic irreducible factors, sorted by degree then coefficients.
pub fn irreducible_factors(p: &UniPoly, f: &PrimeField, rng: &mut impl Rng) -> Vec<UniPoly> {
    let mut out = Vec::new();
    for (g, i) in distinct_degree(&radical(p, f), f) {
        out.extend(equal_degree(&g, i, f, rng));
    }
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Minimal polynomial of a square matrix, by the first linear dependency
/// among its powers.
pub fn minimal_polynomial(a: &Matrix, f: &PrimeField) -> UniPoly {
    let n = a.rows();
    let mut powers: Vec<Vec<Scalar>> = Vec::new();
    let mut cur = Matrix::identity(n);
    loop {
        powers.push(cur.entries().to_vec());
        let m = Matrix::from_columns(&powers, n * n);
        let ns = m.nullspace(f);
        if let Some(v) = ns.first() {
            return UniPoly::new(v.clone()).monic(f);
        }
        cur = cur.mul(a, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fld() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn product(fs: &[UniPoly], f: &PrimeField) -> UniPoly {
        fs.iter().fold(UniPoly::one(), |acc, p| acc.mul(p, f))
    }

    #[test]
    fn factors_small_examples() {
        let f = fld();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // (x - 1)^2 (x + 2)(x^2 + 2), x^2 + 2 irreducible mod 101
        let p = product(
            &[
                UniPoly::new(vec![f.neg(1), 1]),
                UniPoly::new(vec![f.neg(1), 1]),
                UniPoly::new(vec![2, 1]),
                UniPoly::new(vec![2, 0, 1]),
            ],
            &f,
        );
        let fs = irreducible_factors(&p, &f, &mut rng);
        assert_eq!(fs.len(), 3);
        assert_eq!(product(&fs, &f), radical(&p, &f));
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let f = fld();
        let a = Matrix::from_rows(vec![vec![1, 0], vec![0, 0]]);
        assert_eq!(minimal_polynomial(&a, &f), UniPoly::new(vec![0, f.neg(1), 1]));
        let n = Matrix::from_rows(vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(minimal_polynomial(&n, &f), UniPoly::new(vec![0, 0, 1]));
    }

    proptest! {
        #[test]
        fn factors_multiply_to_radical(roots in proptest::collection::vec(0u32..101, 1..6), seed in 0u64..1000) {
            let f = fld();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = product(&roots.iter().map(|&r| UniPoly::new(vec![f.neg(r), 1])).collect::<Vec<_>>(), &f);
            let fs = irreducible_factors(&p, &f, &mut rng);
            let mut distinct = roots.clone();
            distinct.sort();
            distinct.dedup();
            prop_assert_eq!(fs.len(), distinct.len());
            prop_assert_eq!(product(&fs, &f), radical(&p, &f));
            for g in &fs {
                prop_assert!(p.rem(g, &f).is_zero());
            }
        }

        #[test]
        fn minimal_polynomial_annihilates(entries in proptest::collection::vec(0u32..101, 9)) {
            let f = fld();
            let a = Matrix::from_rows(entries.chunks(3).map(|r| r.to_vec()).collect());
            let mp = minimal_polynomial(&a, &f);
            prop_assert!(mp.eval_matrix(&a, &f).is_zero());
            prop_assert!(mp.degree() <= 3);
        }
    }
}
