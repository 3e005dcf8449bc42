use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::laurent::{LaurentPoly2, Vars};
use super::ratfn::RatFn2;
use super::ExactError;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    vars: Vars,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, ExactError> {
        Err(ExactError::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt, ExactError> {
        self.skip_ws();
        let start = self.pos;
        if self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse::<BigInt>().or_else(|_| self.err("expected integer"))
    }

    fn var_index(&self, c: u8) -> Option<usize> {
        let (x, y) = self.vars.names();
        if c == x.as_bytes()[0] {
            Some(0)
        } else if c == y.as_bytes()[0] {
            Some(1)
        } else {
            None
        }
    }

    // factor := number ('/' number)? | var ('^' int)?
    fn term(&mut self) -> Result<LaurentPoly2, ExactError> {
        let mut coeff = BigRational::one();
        let mut exp = (0i32, 0i32);
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    let mut v = BigRational::from_integer(n);
                    if self.peek() == Some(b'/') && self.s.get(self.pos + 1).map_or(false, |c| c.is_ascii_digit()) {
                        self.pos += 1;
                        let d = self.integer()?;
                        v /= BigRational::from_integer(d);
                    }
                    coeff *= v;
                }
                Some(c) if self.var_index(c).is_some() => {
                    let k = self.var_index(c).unwrap();
                    self.pos += 1;
                    let mut e = 1i32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let n = self.integer()?;
                        e = i32::try_from(n).or_else(|_| self.err("exponent out of range"))?;
                    }
                    if k == 0 {
                        exp.0 += e;
                    } else {
                        exp.1 += e;
                    }
                }
                _ => return self.err("expected a number or a variable"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(LaurentPoly2::monomial(coeff, exp.0, exp.1, Some(self.vars)))
    }

    fn sum(&mut self) -> Result<LaurentPoly2, ExactError> {
        let mut acc = LaurentPoly2::zero();
        let mut neg = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            neg = true;
        }
        loop {
            let t = self.term()?;
            if neg {
                acc -= &t;
            } else {
                acc += &t;
            }
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    neg = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    neg = true;
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

/// Parse the canonical text form, e.g. `"1 - q*t + 3*q^2*t^-1"`.
pub fn parse_poly(text: &str, vars: Vars) -> Result<LaurentPoly2, ExactError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, vars };
    let out = p.sum()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parse either a polynomial or `"(num)/(den)"`.
pub fn parse_ratfn(text: &str, vars: Vars) -> Result<RatFn2, ExactError> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix('(') {
        if let Some(split) = rest.find(")/(") {
            let num = parse_poly(&rest[..split], vars)?;
            let den_txt = rest[split + 3..].strip_suffix(')').ok_or(ExactError::Parse { pos: t.len(), msg: "missing ')'".into() })?;
            let den = parse_poly(den_txt, vars)?;
            return RatFn2::from_polys(num, den);
        }
    }
    Ok(RatFn2::from_poly(parse_poly(t, vars)?))
}
