//! Recursive-descent parser for coefficient expressions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' exponent)?
//! exponent := '-'? integer | '(' '-'? integer ')'
//! atom  := integer | 'z' | variable | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("division by zero at position {pos}")]
    DivisionByZero { pos: usize },
    #[error("symbol `{sym}` at position {pos} is not available in field {field}")]
    WrongField { sym: String, pos: usize, field: String },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: &'a FieldSpec,
}

pub fn parse_scalar(text: &str, field: &FieldSpec) -> Result<Scalar, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, field };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                acc = acc.checked_div(&d).ok_or(ParseError::DivisionByZero { pos: at })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ParseError> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Scalar, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err("expected integer exponent"));
        }
        if paren && !self.eat(b')') {
            return Err(self.err("expected `)`"));
        }
        let e: i64 = digits.parse().map_err(|_| ParseError::Syntax { pos: at, msg: "exponent too large".into() })?;
        base.pow(if neg { -e } else { e }).ok_or(ParseError::DivisionByZero { pos: at })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Scalar, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(Scalar::from_bigint(d.parse::<BigInt>().unwrap()))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                let wrong = || ParseError::WrongField { sym: name.clone(), pos: start, field: self.field.to_string() };
                if name == "z" {
                    return self.field.root_order().map(Scalar::zeta).ok_or_else(wrong);
                }
                if self.field.variable() == Some(name.as_str()) {
                    return Ok(Scalar::variable());
                }
                Err(wrong())
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn literal_fraction() {
        assert_eq!(parse_scalar("1/2", &q()).unwrap(), Scalar::from_ratio(1, 2));
    }

    #[test]
    fn z_squared_in_q_zeta4() {
        assert_eq!(parse_scalar("z^2", &FieldSpec::Cyclotomic(4)).unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn inverse_of_q_minus_q_inverse() {
        let f = FieldSpec::functions(FieldSpec::Rationals, "q");
        let v = parse_scalar("1/(q - 1/q)", &f).unwrap();
        let w = parse_scalar("(q - q^-1)^-1", &f).unwrap();
        assert_eq!(v, w);
        assert_eq!(v.to_canonical_string("q"), "(q)/(-1 + q^2)");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_scalar("1/0", &q()), Err(ParseError::DivisionByZero { pos: 1 })));
        assert!(matches!(parse_scalar("z", &q()), Err(ParseError::WrongField { .. })));
        assert!(matches!(parse_scalar("q", &FieldSpec::Cyclotomic(3)), Err(ParseError::WrongField { .. })));
        assert!(matches!(parse_scalar("1 +", &q()), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_scalar("(1", &q()), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_scalar("2 3", &q()), Err(ParseError::Syntax { pos: 2, .. })));
    }

    #[test]
    fn printing_round_trips() {
        let f = FieldSpec::Cyclotomic(5);
        for s in ["2 - z + 1/2*z^3", "-z", "-1/3", "z^2 - z^3"] {
            let v = parse_scalar(s, &f).unwrap();
            assert_eq!(v.to_canonical_string("q"), s);
        }
        let g = FieldSpec::functions(FieldSpec::Cyclotomic(3), "t");
        let v = parse_scalar("(z*t + 1)/(t^2 - z)", &g).unwrap();
        let s = v.to_canonical_string("t");
        assert_eq!(parse_scalar(&s, &g).unwrap(), v);
    }
}
