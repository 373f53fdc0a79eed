//! Reader for the polynomial text grammar:
//!
//! ```text
//! poly    := ['-'] term { ('+'|'-') term } ;
//! term    := coeff [ '*' factors ] | factors ;
//! factors := varpow { '*' varpow } ;
//! varpow  := ident [ '^' nat ] ;
//! coeff   := nat [ '/' nat ] ;
//! ```

use num_bigint::BigInt;

use super::{Monomial, Polynomial, VarSet};
use crate::arith::RingSpec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Nat(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Nat(chars[start..i].iter().collect())));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => return Err(syntax(start, format!("unexpected character `{other}`"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    varset: &'a VarSet,
    ring: RingSpec,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn nat(&mut self) -> Result<String> {
        let at = self.offset();
        match self.next() {
            Some(Tok::Nat(n)) => Ok(n),
            _ => Err(syntax(at, "expected a natural number")),
        }
    }

    fn varpow(&mut self, exps: &mut [u32]) -> Result<()> {
        let at = self.offset();
        let name = match self.next() {
            Some(Tok::Ident(name)) => name,
            _ => return Err(syntax(at, "expected a variable")),
        };
        let idx = self.varset.index_of(&name).ok_or(Error::UnknownVariable(name))?;
        let mut e: u32 = 1;
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            let at = self.offset();
            e = self.nat()?.parse().map_err(|_| syntax(at, "exponent out of range"))?;
        }
        exps[idx] = exps[idx].checked_add(e).ok_or(Error::ExponentOverflow)?;
        Ok(())
    }

    fn factors(&mut self, exps: &mut [u32]) -> Result<()> {
        self.varpow(exps)?;
        while self.peek() == Some(&Tok::Star) {
            self.next();
            self.varpow(exps)?;
        }
        Ok(())
    }

    fn term(&mut self, negate: bool, out: &mut Polynomial) -> Result<()> {
        let mut exps = vec![0u32; self.varset.len()];
        let coeff = match self.peek() {
            Some(Tok::Nat(_)) => {
                let at = self.offset();
                let num: BigInt = self.nat()?.parse().unwrap();
                let den: BigInt = if self.peek() == Some(&Tok::Slash) {
                    self.next();
                    self.nat()?.parse().unwrap()
                } else {
                    BigInt::from(1)
                };
                let c = self.ring.from_ratio(&num, &den).map_err(|e| syntax(at, e.to_string()))?;
                if self.peek() == Some(&Tok::Star) {
                    self.next();
                    self.factors(&mut exps)?;
                }
                c
            }
            Some(Tok::Ident(_)) => {
                self.factors(&mut exps)?;
                self.ring.one()
            }
            _ => return Err(syntax(self.offset(), "expected a term")),
        };
        let coeff = if negate { -&coeff } else { coeff };
        out.add_term(Monomial::from_exponents(exps), &coeff);
        Ok(())
    }
}

/// Parses `text` into a polynomial over `varset` with coefficients in `ring`.
pub fn parse_poly(text: &str, varset: &VarSet, ring: RingSpec) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut parser = Parser { toks, pos: 0, end: text.chars().count(), varset, ring };
    let mut out = Polynomial::zero(varset, ring);
    let mut negate = false;
    if parser.peek() == Some(&Tok::Minus) {
        parser.next();
        negate = true;
    }
    parser.term(negate, &mut out)?;
    loop {
        match parser.peek() {
            None => break,
            Some(Tok::Plus) => negate = false,
            Some(Tok::Minus) => negate = true,
            Some(_) => return Err(syntax(parser.offset(), "expected `+` or `-`")),
        }
        parser.next();
        parser.term(negate, &mut out)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn reads_terms() {
        let v = vs(&["X1", "X2"]);
        let q = RingSpec::Rationals;
        let p = parse_poly("X1^2 - 2*X1*X2", &v, q).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coefficient(&Monomial::from_exponents(vec![2, 0])), Some(&q.one()));
        assert_eq!(p.coefficient(&Monomial::from_exponents(vec![1, 1])), Some(&q.from_i64(-2)));
        assert!(parse_poly("0", &v, q).unwrap().is_zero());
        let y = vs(&["Y"]);
        let p = parse_poly("1/2*Y + Y", &y, q).unwrap();
        assert_eq!(p.coefficient(&Monomial::from_exponents(vec![1])), Some(&q.parse_coefficient("3/2").unwrap()));
        // repeated variables multiply
        let p = parse_poly("X1*X1^2", &v, q).unwrap();
        assert_eq!(p.to_string(), "X1^3");
    }

    #[test]
    fn errors() {
        let v = vs(&["X"]);
        let q = RingSpec::Rationals;
        assert_eq!(parse_poly("Y", &v, q), Err(Error::UnknownVariable("Y".into())));
        assert!(matches!(parse_poly("X +", &v, q), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_poly("X X", &v, q), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(parse_poly("(X)", &v, q), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_poly("", &v, q), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("X^", &v, q), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("1/0", &v, q), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("1/2*X", &v, RingSpec::Integers), Err(Error::Syntax { .. })));
    }
}
