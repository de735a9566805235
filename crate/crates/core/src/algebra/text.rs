//! Text syntax: polynomials as explicit monomial sums such as
//! `3*a^2*s - 1/2*a + 4`, rational functions as `(num)/(den)`.
//!
//! The parser accepts general expressions with `+ - * / ^` and parentheses,
//! so it also reads the printed forms back.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use super::poly::Poly;
use super::ratexpr::RatExpr;
use super::rational::{parse_rational, Rational};
use super::var::Var;
use super::AlgebraError;

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exps, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mono: Vec<String> = exps
                .iter()
                .rev()
                .map(|(v, e)| {
                    if *e == 1 {
                        v.name().to_string()
                    } else {
                        alloc::format!("{}^{}", v.name(), e)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den().is_one() {
            return write!(f, "{}", self.num());
        }
        let wrap_num = self.num().terms().len() > 1;
        let wrap_den = self.den().terms().len() > 1 || !self.den().is_const();
        match (wrap_num, wrap_den) {
            (true, true) => write!(f, "({})/({})", self.num(), self.den()),
            (true, false) => write!(f, "({})/{}", self.num(), self.den()),
            (false, true) => write!(f, "{}/({})", self.num(), self.den()),
            (false, false) => write!(f, "{}/{}", self.num(), self.den()),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<Poly, AlgebraError> {
    let e = parse_ratexpr(text)?;
    if !e.is_poly() {
        return Err(AlgebraError::Parse(alloc::format!("not a polynomial: {text}")));
    }
    Ok(e.num().clone())
}

pub fn parse_ratexpr(text: &str) -> Result<RatExpr, AlgebraError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, src: text };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error());
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>, AlgebraError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Num(parse_rational(&digits)?));
        } else if ch.is_alphabetic() || ch == '∞' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '∞' || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else if ch == '−' {
            out.push(Tok::Op('-'));
            i += 1;
        } else {
            return Err(AlgebraError::Parse(alloc::format!("unexpected '{ch}' in {text}")));
        }
    }
    Ok(out)
}

struct Parser<'s> {
    tokens: Vec<Tok>,
    pos: usize,
    src: &'s str,
}

impl Parser<'_> {
    fn error(&self) -> AlgebraError {
        AlgebraError::Parse(alloc::format!("cannot parse '{}' at token {}", self.src, self.pos))
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<RatExpr, AlgebraError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatExpr, AlgebraError> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' { &acc * &rhs } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatExpr, AlgebraError> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatExpr, AlgebraError> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let negative = if self.peek_op() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = match self.tokens.get(self.pos) {
                Some(Tok::Num(n)) if n.is_integer() && !n.is_negative() => {
                    let e: u32 = n.to_integer().try_into().map_err(|_| self.error())?;
                    e
                }
                _ => return Err(self.error()),
            };
            self.pos += 1;
            let p = base.pow(e);
            return if negative { p.recip() } else { Ok(p) };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatExpr, AlgebraError> {
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RatExpr::constant(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let v: Var = name.parse()?;
                Ok(RatExpr::var(v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.error());
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.error()),
        }
    }
}

/// Zero-aware helper used when printing coefficient lists.
pub fn format_coeffs(coeffs: &[RatExpr]) -> Vec<String> {
    coeffs
        .iter()
        .map(|c| if c.is_zero() { "0".to_string() } else { c.to_string() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn display_monomial_sums() {
        let p = parse_poly("3*a^2*s - 1/2*a + 4").unwrap();
        assert_eq!(p.to_string(), "3*s*a^2 - 1/2*a + 4");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(parse_poly("-s").unwrap().to_string(), "-s");
    }

    #[test]
    fn round_trip_rational_function() {
        let e = parse_ratexpr("a^3*(2-a)/(2*a-1)").unwrap();
        let back = parse_ratexpr(&e.to_string()).unwrap();
        assert_eq!(e, back);
    }

    #[test]
    fn unicode_names_and_minus() {
        let e = parse_ratexpr("λ*(λ−1)*μ").unwrap();
        let f = parse_ratexpr("lambda^2*mu - lambda*mu").unwrap();
        assert_eq!(e, f);
        assert_eq!(parse_ratexpr("−27/5").unwrap().as_const(), Some(rat(-27, 5)));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratexpr("a +").is_err());
        assert!(parse_ratexpr("q").is_err());
        assert!(parse_ratexpr("1/(a-a)").is_err());
        assert!(parse_poly("1/a").is_err());
    }
}
