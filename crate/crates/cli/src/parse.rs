//! Expression parser for algebra elements and cochains.
//!
//! Algebra grammar (products are noncommutative, order preserving):
//!
//! ```text
//!   expr    := ['-'] term (('+' | '-') term)*
//!   term    := factor ('*' factor)*
//!   factor  := NUMBER ['/' NUMBER] | GEN ['^' NUMBER] | '(' expr ')'
//!   GEN     := 'x' | 'y' | 'z'
//! ```
//!
//! Cochain grammar:
//!
//! ```text
//!   cochain := ['-'] cterm (('+' | '-') cterm)*
//!   cterm   := LABEL '#' '(' expr ')'
//!   LABEL   := '1' | 't' | 'u' | 'v' | 't^u' | 't^v' | 'u^v' | 't^u^v'
//! ```
//!
//! Errors carry the byte offset of the offending token. Both printers in
//! the core crate emit this grammar back, and parse-print round trips are
//! tested against random elements.

use downup_core::scalar::parse_bigint as parse_digits;
use downup_core::{AlgebraElement, Cochain, FieldSpec, Gen, WedgeMonomial};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { offset, message: message.into() })
}

struct Cursor<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    field: FieldSpec,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, field: FieldSpec) -> Self {
        Cursor { text, bytes: text.as_bytes(), pos: 0, field }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<(usize, &'a str), ParseError> {
        let start = self.pos;
        while self.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if self.pos == start {
            if self.peek() == Some(b'-') {
                return err(self.pos, "negative exponent rejected");
            }
            return err(self.pos, "expected a number");
        }
        Ok((start, &self.text[start..self.pos]))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let (off, digits) = self.number()?;
        digits
            .parse::<u32>()
            .ok()
            .filter(|e| *e <= 1_000_000)
            .ok_or(ParseError { offset: off, message: "exponent out of range".into() })
    }

    // expr := ['-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<AlgebraElement, ParseError> {
        self.skip_ws();
        let mut acc;
        if self.eat(b'-') {
            acc = self.term()?.neg();
        } else {
            self.eat(b'+');
            acc = self.term()?;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<AlgebraElement, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<AlgebraElement, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return err(self.pos, "expected `)`");
                }
                Ok(inner)
            }
            Some(b'x') | Some(b'y') | Some(b'z') => {
                let g = match self.bump().unwrap() {
                    b'x' => Gen::X,
                    b'y' => Gen::Y,
                    _ => Gen::Z,
                };
                let exp = if self.eat(b'^') { self.exponent()? } else { 1 };
                let base = AlgebraElement::generator(g, self.field);
                let mut acc = AlgebraElement::one(self.field);
                for _ in 0..exp {
                    acc = acc.mul(&base);
                }
                Ok(acc)
            }
            Some(b) if b.is_ascii_digit() => {
                let (off, digits) = self.number()?;
                let numer = parse_digits(digits)
                    .ok_or(ParseError { offset: off, message: "bad number".into() })?;
                let denom = if self.eat(b'/') {
                    let (doff, d) = self.number()?;
                    parse_digits(d).ok_or(ParseError { offset: doff, message: "bad number".into() })?
                } else {
                    1.into()
                };
                let c = self
                    .field
                    .ratio(numer, denom)
                    .map_err(|e| ParseError { offset: off, message: e.to_string() })?;
                Ok(AlgebraElement::one(self.field).scale(&c))
            }
            Some(b'-') => err(self.pos, "negative exponent rejected"),
            Some(b) => err(self.pos, format!("unexpected character `{}`", b as char)),
            None => err(self.pos, "unexpected end of input"),
        }
    }

    // LABEL := '1' | wedge letters joined by '^'
    fn label(&mut self) -> Result<WedgeMonomial, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.eat(b'1') {
            return Ok(WedgeMonomial::One);
        }
        let mut letters = String::new();
        loop {
            match self.peek() {
                Some(b @ (b't' | b'u' | b'v')) => {
                    letters.push(b as char);
                    self.pos += 1;
                }
                _ => return err(self.pos, "expected a wedge label"),
            }
            if !self.eat(b'^') {
                break;
            }
        }
        match letters.as_str() {
            "t" => Ok(WedgeMonomial::T),
            "u" => Ok(WedgeMonomial::U),
            "v" => Ok(WedgeMonomial::V),
            "tu" => Ok(WedgeMonomial::Tu),
            "tv" => Ok(WedgeMonomial::Tv),
            "uv" => Ok(WedgeMonomial::Uv),
            "tuv" => Ok(WedgeMonomial::Tuv),
            other => err(start, format!("unknown wedge label `{other}` (canonical order is t^u^v)")),
        }
    }

    // cterm := LABEL '#' '(' expr ')'
    fn cterm(&mut self) -> Result<(usize, WedgeMonomial, AlgebraElement), ParseError> {
        self.skip_ws();
        let label_offset = self.pos;
        let label = self.label()?;
        self.skip_ws();
        if !self.eat(b'#') {
            return err(self.pos, "expected `#` after wedge label");
        }
        self.skip_ws();
        if !self.eat(b'(') {
            return err(self.pos, "expected `(` after `#`");
        }
        let a = self.expr()?;
        self.skip_ws();
        if !self.eat(b')') {
            return err(self.pos, "expected `)`");
        }
        Ok((label_offset, label, a))
    }

    fn cochain(&mut self) -> Result<Cochain, ParseError> {
        self.skip_ws();
        let mut parts: Vec<(usize, WedgeMonomial, AlgebraElement)> = Vec::new();
        let negate_first = self.eat(b'-');
        let (off, l, a) = self.cterm()?;
        parts.push((off, l, if negate_first { a.neg() } else { a }));
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    parts.push(self.cterm()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let (off, l, a) = self.cterm()?;
                    parts.push((off, l, a.neg()));
                }
                _ => break,
            }
        }
        let degree = parts[0].1.degree();
        for (off, l, _) in &parts {
            if l.degree() != degree {
                return err(
                    *off,
                    format!(
                        "label {} has degree {}, but the first term has degree {degree}",
                        l.label(),
                        l.degree()
                    ),
                );
            }
        }
        let mut c = Cochain::zero(degree);
        for (_, l, a) in parts {
            c.add_part(l, a);
        }
        Ok(c)
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return err(self.pos, "trailing input");
        }
        Ok(())
    }
}

/// Parses an algebra expression into PBW normal form.
pub fn parse_algebra(text: &str, field: FieldSpec) -> Result<AlgebraElement, ParseError> {
    let mut c = Cursor::new(text, field);
    let e = c.expr()?;
    c.finish()?;
    Ok(e)
}

/// Parses a cochain literal; all labels must share one degree.
pub fn parse_cochain(text: &str, field: FieldSpec) -> Result<Cochain, ParseError> {
    let mut c = Cursor::new(text, field);
    let e = c.cochain()?;
    c.finish()?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use downup_core::{GeneratorName, PbwMonomial};

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn relation_rewrites() {
        let e = parse_algebra("y*x", q()).unwrap();
        assert_eq!(e.to_string(), "z - x*y");
    }

    #[test]
    fn zero_literal() {
        let e = parse_algebra("0", q()).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn two_term_element() {
        let e = parse_algebra("2*x^2*y - x*z", q()).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(*e.coeff(&PbwMonomial::new(2, 1, 0)).unwrap(), q().integer(2));
        assert_eq!(*e.coeff(&PbwMonomial::new(1, 0, 1)).unwrap(), q().integer(-1));
    }

    #[test]
    fn fractions_and_parens() {
        // (x+y)(x+y) = x^2 + xy + yx + y^2 = x^2 + y^2 + z
        let e = parse_algebra("1/2*(x + y)*(x + y)", q()).unwrap();
        let direct = parse_algebra("1/2*x^2 + 1/2*y^2 + 1/2*z", q()).unwrap();
        assert_eq!(e, direct);
    }

    #[test]
    fn negative_exponent_rejected() {
        let e = parse_algebra("x^-1", q()).unwrap_err();
        assert!(e.message.contains("negative exponent"));
        assert_eq!(e.offset, 2);
    }

    #[test]
    fn error_offsets_point_at_the_problem() {
        let e = parse_algebra("x + $", q()).unwrap_err();
        assert_eq!(e.offset, 4);
    }

    #[test]
    fn cochain_literals() {
        let f = q();
        let nu1 = parse_cochain("t^v # (x) - u^v # (y)", f).unwrap();
        assert_eq!(nu1, GeneratorName::Nu1.representative(f));
        let c = parse_cochain("1 # (x^2)", f).unwrap();
        assert_eq!(c.degree(), 0);
        let qxy = parse_cochain("t^u^v # (x*y)", f).unwrap();
        assert_eq!(qxy, GeneratorName::Qxy.representative(f));
    }

    #[test]
    fn mixed_degree_labels_rejected() {
        let e = parse_cochain("t # (x) + t^u # (y)", q()).unwrap_err();
        assert!(e.message.contains("degree"));
        assert_eq!(e.offset, 10);
    }

    #[test]
    fn print_parse_round_trip_examples() {
        let f = q();
        for text in ["z - x*y", "x^2*y - x*z", "3/2*x*y*z^2 + y^4"] {
            let e = parse_algebra(text, f).unwrap();
            assert_eq!(parse_algebra(&e.to_string(), f).unwrap(), e);
        }
        for name in downup_core::homology::ALL_GENERATORS {
            let c = name.representative(f);
            assert_eq!(parse_cochain(&c.to_string(), f).unwrap(), c);
        }
    }
}
