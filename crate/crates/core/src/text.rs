//! Text form of polynomials.
//!
//! Grammar: terms joined by `+` or `-`; a term is an optional coefficient and
//! variable powers joined by `*`; variables are `x[i,j]`, `x[i1,...,id]`, or
//! `t[k]`; exponents use `^`. Whitespace is free between tokens. Coefficients
//! are integers of any size, with `num/den` accepted so that every printed
//! polynomial parses back bit-exactly.
//!
//! The printer emits terms in their stored (descending active order)
//! arrangement; generators are kept in diaglex order throughout the crate.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{Ring, VarId};

pub fn print<F: Field>(ring: &Ring<F>, poly: &Polynomial<F>) -> String {
    let field = ring.field();
    if poly.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (idx, (c, m)) in poly.terms().iter().enumerate() {
        let negative = field.is_display_negative(c);
        let magnitude = if negative { field.neg(c) } else { c.clone() };
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&print_term(ring, &magnitude, m));
    }
    out
}

fn print_term<F: Field>(ring: &Ring<F>, magnitude: &F::Elem, m: &Monomial) -> String {
    let field = ring.field();
    if m.is_one() {
        return field.format_elem(magnitude);
    }
    let mut out = String::new();
    if !field.is_one(magnitude) {
        out.push_str(&field.format_elem(magnitude));
        out.push('*');
    }
    for (pos, &(v, e)) in m.factors().iter().enumerate() {
        if pos > 0 {
            out.push('*');
        }
        out.push_str(&ring.var_name(v).expect("polynomial fits its ring"));
        if e > 1 {
            out.push('^');
            out.push_str(&alloc::format!("{e}"));
        }
    }
    out
}

pub fn parse<F: Field>(
    ring: &Ring<F>,
    ord: &MonomialOrder,
    input: &str,
) -> Result<Polynomial<F>, Error> {
    Parser { ring, bytes: input.as_bytes(), pos: 0 }.parse_poly(ord)
}

struct Parser<'a, F: Field> {
    ring: &'a Ring<F>,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), Error> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(&alloc::format!("expected '{}'", byte as char)))
        }
    }

    fn fail(&self, msg: &str) -> Error {
        Error::Parse(alloc::format!("{msg} at byte {}", self.pos))
    }

    fn parse_poly(&mut self, ord: &MonomialOrder) -> Result<Polynomial<F>, Error> {
        let mut terms: Vec<(F::Elem, Monomial)> = Vec::new();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            Some(_) => false,
            None => return Err(self.fail("empty polynomial text")),
        };
        loop {
            let (c, m) = self.parse_term(negative)?;
            terms.push((c, m));
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(_) => return Err(self.fail("expected '+' or '-' between terms")),
            }
        }
        Ok(Polynomial::from_terms(self.ring.field(), ord, terms))
    }

    fn parse_term(&mut self, negative: bool) -> Result<(F::Elem, Monomial), Error> {
        let field = self.ring.field().clone();
        let mut coeff = field.one();
        let mut factors: Vec<(VarId, u16)> = Vec::new();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let c = self.parse_coefficient()?;
                    coeff = field.mul(&coeff, &c);
                }
                Some(b'x') | Some(b't') => {
                    let (v, e) = self.parse_var_power()?;
                    factors.push((v, e));
                }
                _ => return Err(self.fail("expected a coefficient or variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = field.neg(&coeff);
        }
        Ok((coeff, Monomial::from_pairs(&factors)))
    }

    fn parse_digits(&mut self) -> Result<&'a str, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.fail("expected digits"));
        }
        Ok(core::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }

    fn parse_coefficient(&mut self) -> Result<F::Elem, Error> {
        let field = self.ring.field().clone();
        let num = field.from_decimal(self.parse_digits()?);
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = field.from_decimal(self.parse_digits()?);
            return field.div(&num, &den).map_err(|_| self.fail("coefficient denominator is zero"));
        }
        Ok(num)
    }

    fn parse_var_power(&mut self) -> Result<(VarId, u16), Error> {
        let name = self.peek().expect("caller saw a variable start");
        self.pos += 1;
        self.expect(b'[')?;
        let mut index: Vec<u16> = Vec::new();
        loop {
            let digits = self.parse_digits()?;
            let value: u32 = digits
                .parse()
                .map_err(|_| self.fail("index out of range"))?;
            if value > u16::MAX as u32 {
                return Err(self.fail("index out of range"));
            }
            index.push(value as u16);
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                }
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.fail("expected ',' or ']' in index")),
            }
        }
        let v = match name {
            b'x' => {
                if index.len() == 2 {
                    self.ring.var_grid(index[0], index[1])
                } else {
                    self.ring.var_multi(&index)
                }
            }
            b't' => {
                if index.len() != 1 {
                    return Err(self.fail("aux variables take a single tag"));
                }
                self.ring.var_aux(index[0])
            }
            _ => unreachable!(),
        }
        .map_err(|e| Error::Parse(alloc::format!("{e} at byte {}", self.pos)))?;
        let mut exp = 1u16;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let digits = self.parse_digits()?;
            exp = digits.parse().map_err(|_| self.fail("exponent out of range"))?;
        }
        Ok((v, exp))
    }
}
