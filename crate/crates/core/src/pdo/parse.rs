//! Operator literals: `coef x1^i1 x2^i2 d1^k1 d2^k2` terms joined by `+`
//! and `-`. The coefficient is optional and may be a fraction `a/b`;
//! factors may be separated by spaces or `*`. Position factors come before
//! derivatives and each variable appears at most once per term.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::operator::{OpKey, TruncatedOperator};
use crate::error::{ParseError, PdoError};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn small(&mut self) -> Result<u32, ParseError> {
        let at = self.pos;
        let n = self.number()?;
        u32::try_from(n).map_err(|_| ParseError { position: at, message: "exponent too large".into() })
    }

    fn coefficient(&mut self) -> Result<Option<BigRational>, ParseError> {
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(None);
        }
        let num = self.number()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.number()?;
            if den.is_zero() {
                return Err(ParseError { position: at, message: "zero denominator".into() });
            }
            return Ok(Some(BigRational::new(num, den)));
        }
        Ok(Some(BigRational::from_integer(num)))
    }

    /// One of `x1`, `x2`, `d1`, `d2`, as an index into the key.
    fn variable(&mut self) -> Result<Option<usize>, ParseError> {
        let Some(c) = self.peek() else {
            return Ok(None);
        };
        let slot = match c {
            b'x' => 0,
            b'd' => 2,
            _ => return Ok(None),
        };
        self.pos += 1;
        let index = match self.src.get(self.pos) {
            Some(b'1') => 0,
            Some(b'2') => 1,
            _ => return Err(self.err("expected variable index 1 or 2")),
        };
        self.pos += 1;
        Ok(Some(slot + index))
    }

    fn term(&mut self) -> Result<(OpKey, BigRational), ParseError> {
        let coeff = self.coefficient()?;
        let mut key = [0u32; 4];
        let mut seen = [false; 4];
        let mut last = None;
        loop {
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
            let at = self.pos;
            let Some(v) = self.variable()? else {
                break;
            };
            if seen[v] {
                return Err(ParseError { position: at, message: "variable repeated in one term".into() });
            }
            if last.is_some_and(|l| l > v) {
                return Err(ParseError { position: at, message: "factors must appear in order x1 x2 d1 d2".into() });
            }
            seen[v] = true;
            last = Some(v);
            key[v] = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                key[v] = self.small()?;
            }
        }
        if coeff.is_none() && last.is_none() {
            return Err(self.err("expected a term"));
        }
        Ok((key, coeff.unwrap_or_else(BigRational::one)))
    }
}

/// Parses a literal into summed terms (zero sums are dropped).
pub fn parse_terms(src: &str) -> Result<BTreeMap<OpKey, BigRational>, ParseError> {
    let mut lx = Lexer { src: src.as_bytes(), pos: 0 };
    let mut out: BTreeMap<OpKey, BigRational> = BTreeMap::new();
    let mut sign = BigRational::one();
    match lx.peek() {
        Some(b'-') => {
            sign = -sign;
            lx.pos += 1;
        }
        Some(b'+') => lx.pos += 1,
        _ => {}
    }
    loop {
        let (key, c) = lx.term()?;
        *out.entry(key).or_insert_with(BigRational::zero) += sign * c;
        match lx.peek() {
            None => break,
            Some(b'+') => sign = BigRational::one(),
            Some(b'-') => sign = -BigRational::one(),
            Some(_) => return Err(lx.err("expected '+' or '-'")),
        }
        lx.pos += 1;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Parses a literal into an operator with the given budget.
pub fn parse_operator(src: &str, precision: u32, d_bound: u32) -> Result<TruncatedOperator, PdoError> {
    let terms = parse_terms(src)?;
    TruncatedOperator::from_terms(terms, precision, d_bound)
}
