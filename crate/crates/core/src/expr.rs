//! Parser for the blade expression grammar used by the CLI and tests.
//!
//! expr   := '-'? term (('+'|'-') term)*
//! term   := rational ('*'? blade)? | blade
//! blade  := '1' | 'e' digit+ | 'e{' int (',' int)* '}'
//! rational := int ('/' int)?
//!
//! Digits in the compact `e13` form are single generator indices and must be
//! ascending; the braced form covers generators past 9.

use crate::blade::Blade;
use crate::error::{Error, Result};
use crate::multivector::{Multivector, Rational};
use crate::signature::Signature;
use num::{BigInt, One, Zero};

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    sig: Signature,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str, sig: Signature) -> Self {
        Parser {
            input: s.as_bytes(),
            pos: 0,
            sig,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a digit"));
        }
        let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        s.parse::<BigInt>().map_err(|e| self.err(e.to_string()))
    }

    fn parse_rational(&mut self) -> Result<Rational> {
        let num = self.parse_uint()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den_pos = self.pos;
            let den = self.parse_uint()?;
            if den.is_zero() {
                return Err(Error::Parse {
                    pos: den_pos,
                    msg: "zero denominator".into(),
                });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from(num))
        }
    }

    fn check_index(&self, i: u64) -> Result<u32> {
        if i == 0 {
            return Err(self.err("generator indices are 1-based"));
        }
        if i > self.sig.dim() as u64 {
            return Err(self.err(format!("generator e{} does not exist in {}", i, self.sig)));
        }
        Ok(i as u32)
    }

    fn parse_blade(&mut self) -> Result<Blade> {
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(Blade::ONE)
            }
            Some(b'e') => {
                self.pos += 1;
                let mut mask = 0u32;
                let mut last = 0u32;
                if self.peek() == Some(b'{') {
                    self.pos += 1;
                    loop {
                        self.skip_ws();
                        let i = self.parse_uint()?;
                        let i: u64 = i.try_into().map_err(|_| self.err("index out of range"))?;
                        let i = self.check_index(i)?;
                        if i <= last {
                            return Err(self.err("generator indices must be ascending"));
                        }
                        last = i;
                        mask |= 1 << (i - 1);
                        self.skip_ws();
                        match self.bump() {
                            Some(b',') => continue,
                            Some(b'}') => break,
                            _ => return Err(self.err("expected ',' or '}'")),
                        }
                    }
                } else {
                    let start = self.pos;
                    while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        let d = (self.input[self.pos] - b'0') as u64;
                        let i = self.check_index(d)?;
                        if i <= last {
                            return Err(self.err("generator indices must be ascending"));
                        }
                        last = i;
                        mask |= 1 << (i - 1);
                        self.pos += 1;
                    }
                    if self.pos == start {
                        return Err(self.err("expected generator indices after 'e'"));
                    }
                }
                Ok(Blade(mask))
            }
            _ => Err(self.err("expected a blade ('1', 'e..' or 'e{..}')")),
        }
    }

    /// One term: an optional rational coefficient followed by an optional
    /// blade, at least one of the two present.
    fn parse_term(&mut self) -> Result<(Rational, Blade)> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                // Could still be the bare blade '1'.
                let save = self.pos;
                if c == b'1' {
                    self.pos += 1;
                    match self.peek() {
                        None | Some(b'+') | Some(b'-') | Some(b' ') => {
                            return Ok((Rational::one(), Blade::ONE))
                        }
                        _ => self.pos = save,
                    }
                }
                let coeff = self.parse_rational()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    let blade = self.parse_blade()?;
                    Ok((coeff, blade))
                } else if self.peek() == Some(b'e') {
                    let blade = self.parse_blade()?;
                    Ok((coeff, blade))
                } else if self.peek() == Some(b'1') {
                    self.pos += 1;
                    Ok((coeff, Blade::ONE))
                } else {
                    Ok((coeff, Blade::ONE))
                }
            }
            Some(b'e') => Ok((Rational::one(), self.parse_blade()?)),
            _ => Err(self.err("expected a term")),
        }
    }

    fn parse_expr(&mut self) -> Result<Multivector> {
        let mut out = Multivector::zero(self.sig);
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let (mut coeff, blade) = self.parse_term()?;
            if negate {
                coeff = -coeff;
            }
            out = out.add(&Multivector::from_term(self.sig, blade, coeff))?;
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                Some(c) => return Err(self.err(format!("unexpected character '{}'", c as char))),
            }
        }
    }
}

pub fn parse_multivector(s: &str, sig: Signature) -> Result<Multivector> {
    Parser::new(s, sig).parse_expr()
}

pub fn parse_blade(s: &str, sig: Signature) -> Result<Blade> {
    let mut p = Parser::new(s, sig);
    p.skip_ws();
    let blade = p.parse_blade()?;
    p.skip_ws();
    if p.pos != p.input.len() {
        return Err(p.err("trailing input after blade"));
    }
    Ok(blade)
}
