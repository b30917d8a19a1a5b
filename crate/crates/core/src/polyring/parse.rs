//! Polynomial text grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Division is only allowed by a nonzero constant, so `3/4*X0` is the
//! rational coefficient 3/4. Whitespace is insignificant.

use num_bigint::BigInt;

use super::{PolyError, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|x| x.1).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|x| x.1).collect())));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(PolyError::Parse { pos, msg: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    ring: &'a Ring,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let pos = self.pos();
                self.at += 1;
                let d = self.unary()?;
                if !d.is_constant() {
                    return Err(PolyError::Parse { pos, msg: "division by a non-constant".into() });
                }
                let c = d.terms().next().map(|(_, c)| c.clone());
                match c {
                    None => {
                        return Err(PolyError::NotRepresentable {
                            value: "division by zero".into(),
                            p: self.ring.field().characteristic(),
                        })
                    }
                    Some(c) => acc = acc.scale(&c.inv()),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.eat('^') {
            let pos = self.pos();
            match self.toks.get(self.at).map(|t| t.1.clone()) {
                Some(Tok::Int(n)) => {
                    self.at += 1;
                    let e: u32 = n
                        .try_into()
                        .ok()
                        .filter(|&e: &u32| e <= u16::MAX as u32)
                        .ok_or(PolyError::Parse { pos, msg: "exponent too large".into() })?;
                    Ok(base.pow(e))
                }
                _ => Err(PolyError::Parse { pos, msg: "expected a nonnegative integer exponent".into() }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        let pos = self.pos();
        match self.toks.get(self.at).map(|t| t.1.clone()) {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                let i = self
                    .ring
                    .var_names()
                    .iter()
                    .position(|v| *v == name)
                    .ok_or(PolyError::UnknownVariable { name, pos })?;
                Ok(self.ring.var(i))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(PolyError::Parse { pos: self.pos(), msg: "expected ')'".into() });
                }
                Ok(e)
            }
            Some(Tok::Op(c)) => Err(PolyError::Parse { pos, msg: format!("unexpected '{c}'") }),
            None => Err(PolyError::Parse { pos, msg: "unexpected end of input".into() }),
        }
    }
}

pub(crate) fn parse(text: &str, ring: &Ring) -> Result<Polynomial, PolyError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, ring, end: text.len() };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        return Err(PolyError::Parse { pos: p.pos(), msg: "trailing input".into() });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, Monomial, MonomialOrder};

    #[test]
    fn single_monomial() {
        let r = Ring::projective(2, Field::Rational);
        let f = r.parse("X0*X1*X2").unwrap();
        assert_eq!(f.num_terms(), 1);
        let (m, c) = f.terms().next().unwrap();
        assert_eq!(m.exponents(), &[1, 1, 1]);
        assert!(c.is_one());
    }

    #[test]
    fn expands_products() {
        let r = Ring::projective(2, Field::Rational);
        let f = r.parse("X0*(X0^3+X1^3+X2^3)").unwrap();
        assert_eq!(f, r.parse("X0^4 + X0*X1^3 + X0*X2^3").unwrap());
    }

    #[test]
    fn simis_sextic_expansion() {
        let r = Ring::new(["X", "Y", "Z"], Field::Rational);
        let f = r.parse("4*(X^2+Y^2+X*Z)^3-27*(X^2+Y^2)^2*Z^2").unwrap();
        assert!(f.is_homogeneous());
        assert_eq!(f.degree(), Some(6));
        let (m, c) = f.leading_term(&MonomialOrder::lex(3)).unwrap();
        assert_eq!(m, &Monomial::from_exponents(&[6, 0, 0]));
        assert_eq!(c, &Field::Rational.from_i64(4));
    }

    #[test]
    fn errors_carry_positions() {
        let r = Ring::projective(2, Field::Rational);
        assert!(matches!(r.parse("X0 + Y"), Err(PolyError::UnknownVariable { pos: 5, .. })));
        assert!(matches!(r.parse("X0 + * X1"), Err(PolyError::Parse { pos: 5, .. })));
        assert!(matches!(r.parse("(X0 + X1"), Err(PolyError::Parse { pos: 8, .. })));
        assert!(matches!(r.parse("X0 / X1"), Err(PolyError::Parse { pos: 3, .. })));
        assert!(matches!(r.parse("X0 $ X1"), Err(PolyError::Parse { pos: 3, .. })));
    }

    #[test]
    fn rational_literals() {
        let r = Ring::projective(1, Field::Rational);
        let f = r.parse("3/4*X0 - X1/2").unwrap();
        assert_eq!(f.to_string(), "3/4*X0 - 1/2*X1");
        let p7 = Ring::projective(1, Field::prime(7).unwrap());
        assert!(matches!(p7.parse("X0/14"), Err(PolyError::NotRepresentable { .. })));
    }
}
