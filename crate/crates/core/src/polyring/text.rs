//! Text form of polynomials: a small parser and a deterministic printer.
//!
//! The grammar covers what ring presentations and fixture files need:
//! integer coefficients, `+`, `-`, `*`, `^` powers, and parentheses.
//! There is no implicit multiplication. A variable may carry a
//! superscript written `Z1^(2)`; the parenthesized form binds only when
//! it immediately follows a bare identifier, so `Z1^(2)` is a variable
//! name while `Z1^2` is a square and `(Z1)^(2)` is a syntax error.

use std::fmt::Write as _;

use num::{BigInt, BigRational, One, Signed};

use super::{Monomial, MonomialOrder, Polynomial, RingRc};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let value = digits
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer literal {digits}")))?;
                tokens.push(Token::Int(value));
            }
            c if c.is_ascii_alphabetic() => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' || d == '\'' {
                        ident.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(ident));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    ring: &'a RingRc,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek2(&self) -> Option<&Token> {
        self.tokens.get(self.pos + 1)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<()> {
        match self.next() {
            Some(t) if t == token => Ok(()),
            other => Err(Error::Parse(format!("expected {what}, found {other:?}"))),
        }
    }

    fn parse_expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.parse_term()?;
                    acc = &acc + &t;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.parse_term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        // Leading signs bind to the whole term.
        let mut negate = false;
        while matches!(self.peek(), Some(Token::Minus) | Some(Token::Plus)) {
            if let Some(Token::Minus) = self.peek() {
                negate = !negate;
            }
            self.pos += 1;
        }
        let mut acc = self.parse_factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.pos += 1;
            let f = self.parse_factor()?;
            acc = &acc * &f;
        }
        Ok(if negate { -&acc } else { acc })
    }

    fn parse_factor(&mut self) -> Result<Polynomial> {
        let mut base = self.parse_atom()?;
        while matches!(self.peek(), Some(Token::Caret)) {
            self.pos += 1;
            match self.next() {
                Some(Token::Int(e)) => {
                    let exp: u32 = e
                        .try_into()
                        .map_err(|_| Error::Parse("exponent out of range".into()))?;
                    base = base.pow(exp);
                }
                other => {
                    return Err(Error::Parse(format!(
                        "expected integer exponent after ^, found {other:?}"
                    )));
                }
            }
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Polynomial> {
        match self.next() {
            Some(Token::Int(n)) => Ok(Polynomial::constant(
                self.ring,
                BigRational::from_integer(n),
            )),
            Some(Token::Ident(name)) => {
                // A parenthesized integer right after an identifier is a
                // superscript and belongs to the variable name.
                let full_name = if matches!(self.peek(), Some(Token::Caret))
                    && matches!(self.peek2(), Some(Token::LParen))
                {
                    self.pos += 2;
                    let sup = match self.next() {
                        Some(Token::Int(s)) => {
                            let s: u32 = s.try_into().map_err(|_| {
                                Error::Parse("superscript out of range".into())
                            })?;
                            s
                        }
                        other => {
                            return Err(Error::Parse(format!(
                                "expected integer superscript, found {other:?}"
                            )));
                        }
                    };
                    self.expect(Token::RParen, "closing parenthesis of superscript")?;
                    format!("{name}^({sup})")
                } else {
                    name
                };
                match self.ring.var_index(&full_name) {
                    Some(i) => Ok(Polynomial::variable(self.ring, i)),
                    None => Err(Error::Parse(format!("unknown variable `{full_name}`"))),
                }
            }
            Some(Token::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(Token::RParen, "closing parenthesis")?;
                Ok(inner)
            }
            other => Err(Error::Parse(format!(
                "expected a number, variable, or parenthesized expression, found {other:?}"
            ))),
        }
    }
}

/// Parses `input` as a polynomial in `ring`.
pub fn parse_polynomial(ring: &RingRc, input: &str) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial text".into()));
    }
    let mut parser = Parser {
        ring,
        tokens,
        pos: 0,
    };
    let poly = parser.parse_expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            parser.tokens[parser.pos]
        )));
    }
    Ok(poly)
}

/// Renders a monomial as `Z0*Z1^2`-style text; the empty product is `1`.
pub fn monomial_text(ring: &RingRc, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.var(i).to_string()),
            e => parts.push(format!("{}^{}", ring.var(i), e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn coeff_text(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Renders a polynomial with terms sorted descending under `order`.
pub fn format_polynomial(p: &Polynomial, order: MonomialOrder) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|(m, _), (n, _)| order.cmp(n, m));
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        let abs = if negative { -(*c).clone() } else { (*c).clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mono = monomial_text(p.ring(), m);
        if mono == "1" {
            let _ = write!(out, "{}", coeff_text(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{}*{}", coeff_text(&abs), mono);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Ring, VarName};

    fn ring() -> RingRc {
        Ring::new(vec![
            VarName::plain("x"),
            VarName::plain("y"),
            VarName::superscripted("Z1", 1),
            VarName::superscripted("Z1", 2),
        ])
        .unwrap()
    }

    #[test]
    fn parses_basic_arithmetic() {
        let r = ring();
        let p = parse_polynomial(&r, "x^2 - 2*x*y + y^2").unwrap();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        assert_eq!(p, (&x - &y).pow(2));
    }

    #[test]
    fn superscripts_are_names_not_powers() {
        let r = ring();
        let p = parse_polynomial(&r, "Z1^(1)*Z1^(2)").unwrap();
        assert_eq!(p.num_terms(), 1);
        let (m, _) = p.terms().next().unwrap();
        assert_eq!(m.exponents(), &[0, 0, 1, 1]);

        // A plain caret is a power of the superscripted variable.
        let sq = parse_polynomial(&r, "Z1^(2)^2").unwrap();
        let (m, _) = sq.terms().next().unwrap();
        assert_eq!(m.exponents(), &[0, 0, 0, 2]);
    }

    #[test]
    fn parenthesized_base_rejects_superscript() {
        let r = ring();
        assert!(parse_polynomial(&r, "(x)^(2)").is_err());
        assert!(parse_polynomial(&r, "(x)^2").is_ok());
    }

    #[test]
    fn rejects_unknown_and_malformed() {
        let r = ring();
        assert!(parse_polynomial(&r, "q + 1").is_err());
        assert!(parse_polynomial(&r, "x + ").is_err());
        assert!(parse_polynomial(&r, "2x").is_err()); // no implicit multiplication
        assert!(parse_polynomial(&r, "x^y").is_err());
        assert!(parse_polynomial(&r, "").is_err());
        assert!(parse_polynomial(&r, "x ) y").is_err());
        assert!(parse_polynomial(&r, "Z1^(3)").is_err()); // not a ring variable
    }

    #[test]
    fn unary_minus_and_sums() {
        let r = ring();
        let p = parse_polynomial(&r, "-x + -y").unwrap();
        let q = parse_polynomial(&r, "-(x + y)").unwrap();
        assert_eq!(p, q);
        let z = parse_polynomial(&r, "x - x").unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn round_trips_through_text() {
        let r = ring();
        for src in [
            "x^2 - 2*x*y + y^2",
            "Z1^(1)*Z1^(2) - 3*x",
            "-x^3 + x - 7",
            "x*y*Z1^(1)^2",
        ] {
            let p = parse_polynomial(&r, src).unwrap();
            let text = format_polynomial(&p, MonomialOrder::DegRevLex);
            let q = parse_polynomial(&r, &text).unwrap();
            assert_eq!(p, q, "round trip failed for {src}: rendered {text}");
        }
    }

    #[test]
    fn formatting_is_deterministic_and_signed() {
        let r = ring();
        let p = parse_polynomial(&r, "y - x").unwrap();
        // Under degrevlex with x first, x > y, so the x term leads.
        assert_eq!(format_polynomial(&p, MonomialOrder::DegRevLex), "-x + y");
        let z = Polynomial::zero(&r);
        assert_eq!(format_polynomial(&z, MonomialOrder::DegRevLex), "0");
    }
}
