//! Parser for PBW expressions such as `e1*e2 - 2*E3 + 1`.
//!
//! Grammar:
//!
//! ```text
//! expr   := ["+" | "-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := integer | "e" index | "E" index | "(" expr ")"
//! ```
//!
//! `e<i>` is the simple generator `i` and `E<j>` the root vector `j`, both 1-based.

use num_bigint::BigInt;

use super::{ChevalleyBasis, PbwElement};
use crate::error::{Error, Result};

struct Parser<'a> {
    cb: &'a ChevalleyBasis,
    src: Vec<char>,
    pos: usize,
}

fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.src[start..self.pos].iter().collect())
    }

    fn index(&mut self, what: char) -> Result<usize> {
        let Some(ds) = self.digits() else {
            return err(format!("expected an index after '{what}' at position {}", self.pos));
        };
        match ds.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => err(format!("indices are 1-based, got {what}{ds}")),
        }
    }

    fn expr(&mut self) -> Result<PbwElement> {
        let mut sign = BigInt::from(1);
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                sign = BigInt::from(-1);
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?.scale(&sign);
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PbwElement> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = self.cb.multiply(&acc, &rhs)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<PbwElement> {
        match self.peek() {
            Some('e') => {
                self.pos += 1;
                let i = self.index('e')?;
                self.cb.generator(i).map_err(|e| Error::Parse(e.to_string()))
            }
            Some('E') => {
                self.pos += 1;
                let j = self.index('E')?;
                self.cb.root_vector(j).map_err(|e| Error::Parse(e.to_string()))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return err(format!("expected ')' at position {}", self.pos));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let ds = self.digits().expect("at least one digit");
                let n: BigInt = ds.parse().expect("digits");
                Ok(self.cb.one().scale(&n))
            }
            Some(c) => err(format!("unexpected '{c}' at position {}", self.pos)),
            None => err("unexpected end of expression"),
        }
    }
}

/// Parses and evaluates an expression in the PBW basis of `cb`.
pub fn parse_expr(cb: &ChevalleyBasis, s: &str) -> Result<PbwElement> {
    let mut p = Parser { cb, src: s.chars().collect(), pos: 0 };
    if p.peek().is_none() {
        return err("empty expression");
    }
    let v = p.expr()?;
    if let Some(c) = p.peek() {
        return err(format!("unexpected '{c}' at position {}", p.pos));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::build_root_datum;
    use crate::uea::build_chevalley;

    #[test]
    fn a2_expressions() {
        let cb = build_chevalley(&build_root_datum("A2".parse().unwrap()));
        let lhs = parse_expr(&cb, "e2*e1").unwrap();
        let rhs = parse_expr(&cb, "e1*e2 - E3").unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "-E3 + E1*E2");
        assert_eq!(parse_expr(&cb, "2*(e1 + e2) - 2*e2").unwrap(), parse_expr(&cb, "e1 + e1").unwrap());
        assert_eq!(parse_expr(&cb, "3").unwrap().to_string(), "3");
    }

    #[test]
    fn errors() {
        let cb = build_chevalley(&build_root_datum("A2".parse().unwrap()));
        for bad in ["", "e0", "e3", "E4", "e1 +", "x", "(e1", "e1 e2", "E"] {
            assert!(matches!(parse_expr(&cb, bad), Err(Error::Parse(_))), "{bad}");
        }
    }
}
