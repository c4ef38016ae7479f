//! Text form of polynomials.
//!
//! ```text
//! poly := term (('+'|'-') term)*
//! term := coeff? ('*'? var ('^' int)?)*
//! ```

use std::fmt::Write;

use super::field::Scalar;
use super::monomial::Monomial;
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> Error {
        Error::input("syntax_error", format!("{msg} at position {}", self.pos))
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<u64>().map_err(|_| Error::input("syntax_error", format!("integer too large at position {start}")))
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {}
            _ => return None,
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        Some(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn poly_parse(text: &str, ring: &PolyRing) -> Result<Poly> {
    let field = ring.field();
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
    let mut sign_negative = false;
    match lx.peek() {
        Some(b'-') => {
            sign_negative = true;
            lx.pos += 1;
        }
        Some(b'+') => lx.pos += 1,
        None => return Err(lx.error("empty polynomial")),
        _ => {}
    }
    loop {
        // one term
        let mut coeff: Scalar = 1;
        let mut mono = Monomial::ONE;
        let mut seen_any = false;
        if let Some(c) = lx.peek() {
            if c.is_ascii_digit() {
                coeff = field.from_u64(lx.integer()?);
                seen_any = true;
            }
        }
        loop {
            let save = lx.pos;
            let had_star = if lx.peek() == Some(b'*') {
                lx.pos += 1;
                true
            } else {
                false
            };
            if had_star && lx.peek().is_some_and(|c| c.is_ascii_digit()) {
                // allow `2*3*x`
                coeff = field.mul(coeff, field.from_u64(lx.integer()?));
                seen_any = true;
                continue;
            }
            let Some(name) = lx.ident() else {
                if had_star {
                    return Err(lx.error("expected variable after '*'"));
                }
                lx.pos = save;
                break;
            };
            let Some(idx) = ring.var_index(name) else {
                return Err(Error::input(
                    "unknown_variable",
                    format!("unknown variable {name:?} at position {}", lx.pos - name.len()),
                ));
            };
            let mut e: u64 = 1;
            if lx.peek() == Some(b'^') {
                lx.pos += 1;
                e = lx.integer()?;
            }
            if e > u16::MAX as u64 {
                return Err(lx.error("exponent too large"));
            }
            mono = mono.checked_mul(&Monomial::var_pow(idx, e as u16)).map_err(|_| lx.error("exponent too large"))?;
            seen_any = true;
        }
        if !seen_any {
            return Err(lx.error("expected term"));
        }
        if sign_negative {
            coeff = field.neg(coeff);
        }
        terms.push((mono, coeff));
        match lx.peek() {
            None => break,
            Some(b'+') => {
                sign_negative = false;
                lx.pos += 1;
            }
            Some(b'-') => {
                sign_negative = true;
                lx.pos += 1;
            }
            Some(_) => return Err(lx.error("unexpected character")),
        }
    }
    Ok(ring.from_terms(terms))
}

fn write_monomial(out: &mut String, m: &Monomial, ring: &PolyRing) {
    let mut first = true;
    for (i, name) in ring.vars().iter().enumerate() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

/// Canonical text form; coefficients use the symmetric representative.
pub fn poly_print(p: &Poly, ring: &PolyRing) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let field = ring.field();
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let s = field.to_signed(*c);
        let mag = s.unsigned_abs();
        if k == 0 {
            if s < 0 {
                out.push('-');
            }
        } else if s < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if m.is_one() {
            let _ = write!(out, "{mag}");
        } else {
            if mag != 1 {
                let _ = write!(out, "{mag}*");
            }
            write_monomial(&mut out, m, ring);
        }
    }
    out
}
