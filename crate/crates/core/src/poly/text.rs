//! Canonical text form of [`HomoPoly3`]: terms in descending graded-lex
//! order, e.g. `a^3 - a^2*b - a*b^2 - a*c^2 + b^3`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{HomoPoly3, Monomial3, Scalar, Var};
use crate::{Error, Result};

/// Writes `c·m` as a signed term. `first` controls whether a positive sign
/// is printed as ` + `.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &Scalar,
    body: &dyn fmt::Display,
    is_unit_monomial: bool,
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let abs = c.abs();
    if is_unit_monomial {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{abs}*{body}")
    }
}

impl fmt::Display for HomoPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            write_term(f, c, m, *m == Monomial3::ONE, i == 0)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            ' ' | '\t' => {}
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            'a' => out.push(Token::Var(Var::A)),
            'b' => out.push(Token::Var(Var::B)),
            'c' => out.push(Token::Var(Var::C)),
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Token::Num(digits.parse().expect("ascii digits")));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.next() {
            Some(Token::Num(n)) => n
                .try_into()
                .map_err(|_| Error::Parse("exponent out of range".into())),
            _ => Err(Error::Parse("expected exponent after `^`".into())),
        }
    }

    fn factor(&mut self, coef: &mut Scalar, mono: &mut Monomial3) -> Result<()> {
        match self.next() {
            Some(Token::Num(n)) => {
                let mut value = Scalar::from_integer(n);
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Num(d)) if !d.is_zero() => {
                            value /= Scalar::from_integer(d);
                        }
                        _ => return Err(Error::Parse("expected non-zero denominator".into())),
                    }
                }
                *coef *= value;
            }
            Some(Token::Var(v)) => {
                let e = if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    self.exponent()?
                } else {
                    1
                };
                mono.exps[v.index()] += e;
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial3, Scalar)> {
        let mut coef = Scalar::one();
        let mut mono = Monomial3::ONE;
        self.factor(&mut coef, &mut mono)?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            self.factor(&mut coef, &mut mono)?;
        }
        Ok((mono, coef))
    }

    fn poly(&mut self) -> Result<Vec<(Monomial3, Scalar)>> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                -Scalar::one()
            }
            Some(Token::Plus) => {
                self.pos += 1;
                Scalar::one()
            }
            _ => Scalar::one(),
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, c * &sign));
            match self.next() {
                None => break,
                Some(Token::Plus) => sign = Scalar::one(),
                Some(Token::Minus) => sign = -Scalar::one(),
                Some(t) => return Err(Error::Parse(format!("unexpected token {t:?}"))),
            }
        }
        Ok(terms)
    }
}

impl FromStr for HomoPoly3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        if tokens.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut parser = Parser { tokens, pos: 0 };
        let terms = parser.poly()?;
        HomoPoly3::from_terms(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_f13() {
        let f = HomoPoly3::from_int_terms(&[
            (1, [3, 0, 0]),
            (-1, [2, 1, 0]),
            (-1, [1, 2, 0]),
            (1, [0, 3, 0]),
            (-1, [1, 0, 2]),
        ])
        .unwrap();
        // grlex with a > b > c puts a*c^2 ahead of b^3
        assert_eq!(f.to_string(), "a^3 - a^2*b - a*b^2 - a*c^2 + b^3");
    }

    #[test]
    fn parse_accepts_loose_forms() {
        let f: HomoPoly3 = "  -a*a + b^2 -  a * c ".parse().unwrap();
        assert_eq!(f.to_string(), "-a^2 - a*c + b^2");
        let g: HomoPoly3 = "3/2*a^2 + 2*a*b*1/2".parse().unwrap();
        assert_eq!(g.to_string(), "3/2*a^2 + a*b");
        let one: HomoPoly3 = "1".parse().unwrap();
        assert_eq!(one, HomoPoly3::one());
        assert_eq!("0".parse::<HomoPoly3>().unwrap(), HomoPoly3::zero(0));
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<HomoPoly3>().is_err());
        assert!("a + x".parse::<HomoPoly3>().is_err());
        assert!("a +".parse::<HomoPoly3>().is_err());
        assert!("a^".parse::<HomoPoly3>().is_err());
        assert!("a/0".parse::<HomoPoly3>().is_err());
        assert_eq!("a + b^2".parse::<HomoPoly3>(), Err(Error::NotHomogeneous));
    }
}
