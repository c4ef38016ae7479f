use crate::error::{Error, Result};

/// Residue class modulo the field characteristic, always kept in `0..p`.
pub type Scalar = u32;

/// The prime field `F_p` for an odd prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub const DEFAULT_PRIME: u32 = 101;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::input("bad_prime", format!("{p} is not an odd prime below 2^31")));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Reduces a signed integer into `0..p`.
    pub fn from_i64(&self, v: i64) -> Scalar {
        v.rem_euclid(self.p as i64) as Scalar
    }

    pub fn from_u64(&self, v: u64) -> Scalar {
        (v % self.p as u64) as Scalar
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn to_signed(&self, a: Scalar) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as Scalar
        } else {
            s as Scalar
        }
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as Scalar
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 * b as u64) % self.p as u64) as Scalar
    }

    pub fn pow(&self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero, which is always a caller bug.
    pub fn inv(&self, a: Scalar) -> Scalar {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on i64
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        self.from_i64(s0)
    }

    pub fn div(&self, a: Scalar, b: Scalar) -> Scalar {
        self.mul(a, self.inv(b))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
