//! Canonical ASCII text for coefficients and a small parser that reads it back.
//!
//! Grammar accepted by [`parse_param`]:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' digits)?
//! atom  := digits | 'i' | 'a0' | 'b0' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::gauss::GaussRat;
use super::param::ParamScalar;
use super::poly::BiPoly;
use crate::error::{EngineError, Result};

fn monomial_text(i: u32, j: u32) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("a0".to_string()),
        _ => parts.push(format!("a0^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("b0".to_string()),
        _ => parts.push(format!("b0^{j}")),
    }
    parts.join("*")
}

fn term_text(i: u32, j: u32, c: &GaussRat) -> String {
    if i == 0 && j == 0 {
        return c.to_string();
    }
    let m = monomial_text(i, j);
    if c.is_one() {
        m
    } else if (-c).is_one() {
        format!("-{m}")
    } else {
        format!("{c}*{m}")
    }
}

/// Terms printed from the highest power of `a0` down.
pub fn format_bipoly(p: &BiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, ((i, j), c)) in p.terms().iter().rev().enumerate() {
        let t = term_text(*i, *j, c);
        if k == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

pub fn format_param(x: &ParamScalar) -> String {
    if x.is_polynomial() {
        format_bipoly(x.numerator())
    } else {
        format!(
            "({}) / ({})",
            format_bipoly(x.numerator()),
            format_bipoly(x.denominator())
        )
    }
}

/// Coefficient times a power of π, e.g. `(P) / (Q) * pi^2`.
pub fn format_with_pi(x: &ParamScalar, pi_power: u32) -> String {
    if x.is_zero() || pi_power == 0 {
        return format_param(x);
    }
    let pi = if pi_power == 1 {
        "pi".to_string()
    } else {
        format!("pi^{pi_power}")
    };
    if x.is_one() {
        return pi;
    }
    let body = format_param(x);
    if x.is_polynomial() && x.numerator().terms().len() > 1 {
        format!("({body}) * {pi}")
    } else {
        format!("{body} * {pi}")
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: impl Into<String>) -> EngineError {
        EngineError::Parse {
            input: self.src.to_string(),
            reason: format!("{} at byte {}", reason.into(), self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn expr(&mut self) -> Result<ParamScalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ParamScalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<ParamScalar> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<ParamScalar> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e: u32 = self
                .digits()
                .ok_or_else(|| self.err("expected exponent"))?
                .parse()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ParamScalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(ParamScalar::i())
            }
            Some(b'a') | Some(b'b') => {
                let which = self.bytes[self.pos];
                if self.bytes.get(self.pos + 1) != Some(&b'0') {
                    return Err(self.err("expected a0 or b0"));
                }
                self.pos += 2;
                Ok(if which == b'a' {
                    ParamScalar::a0()
                } else {
                    ParamScalar::b0()
                })
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let n: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                Ok(ParamScalar::from_bigint(n))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub fn parse_param(s: &str) -> Result<ParamScalar> {
    let mut p = Parser {
        src: s,
        bytes: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_simple_forms() {
        let a = ParamScalar::a0();
        let b = ParamScalar::b0();
        let x = &(&a.pow(2) - &(&ParamScalar::from_int(3) * &b)) / &(&a * &b);
        assert_eq!(x.to_text(), "(a0^2 - 3*b0) / (a0*b0)");
        assert_eq!(ParamScalar::from_frac(-1, 2).to_text(), "-1/2");
        let y = &ParamScalar::i() * &(&a - &b);
        assert_eq!(y.to_text(), "i*a0 - i*b0");
        assert_eq!(format_with_pi(&ParamScalar::from_int(32), 2), "32 * pi^2");
    }

    #[test]
    fn parses_back() {
        for s in [
            "(a0^2 - 3*b0) / (a0*b0)",
            "-1/2",
            "i*a0 - i*b0",
            "(1/2-3*i)*a0^3*b0 + 7",
            "-i",
        ] {
            let x = parse_param(s).unwrap();
            assert_eq!(parse_param(&x.to_text()).unwrap(), x, "{s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_param("a1").is_err());
        assert!(parse_param("(a0").is_err());
        assert!(parse_param("a0 b0").is_err());
        assert!(matches!(parse_param("1/(a0-a0)"), Err(EngineError::DegenerateScalar)));
    }
}
