use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactError;

/// Which pair of formal variables a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vars {
    /// The Macdonald parameters `q, t`.
    QT,
    /// The toroidal parameters `s, u` with `q = s^2 u^2`, `t = s^2 u^-2`.
    SU,
}

impl Vars {
    pub fn names(self) -> (&'static str, &'static str) {
        match self {
            Vars::QT => ("q", "t"),
            Vars::SU => ("s", "u"),
        }
    }
}

/// Combine two optional tags; `None` marks a constant that fits either field.
pub(crate) fn merge_tags(a: Option<Vars>, b: Option<Vars>) -> Result<Option<Vars>, ExactError> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(ExactError::VarMismatch(x, y)),
        (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
        _ => Ok(None),
    }
}

fn merge_or_panic(a: Option<Vars>, b: Option<Vars>) -> Option<Vars> {
    match merge_tags(a, b) {
        Ok(t) => t,
        Err(e) => panic!("{e}"),
    }
}

pub type Exp = (i32, i32);

/// A Laurent polynomial in two variables with rational coefficients.
///
/// Constants carry no tag so they mix freely with either field; anything
/// with a variable in it is tagged and refuses to combine with the other field.
#[derive(Clone, Debug, Default)]
pub struct LaurentPoly2 {
    tag: Option<Vars>,
    terms: BTreeMap<Exp, BigRational>,
}

impl PartialEq for LaurentPoly2 {
    fn eq(&self, other: &Self) -> bool {
        merge_tags(self.tag, other.tag).is_ok() && self.terms == other.terms
    }
}
impl Eq for LaurentPoly2 {}

impl PartialOrd for LaurentPoly2 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for LaurentPoly2 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl std::hash::Hash for LaurentPoly2 {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (e, c) in &self.terms {
            e.hash(state);
            c.hash(state);
        }
    }
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0, None)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::constant(BigRational::new(n.into(), d.into()))
    }

    /// `c * v1^a * v2^b`; the tag is dropped when the exponent is zero.
    pub fn monomial(c: BigRational, a: i32, b: i32, vars: Option<Vars>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        let tag = if (a, b) == (0, 0) { None } else { vars };
        Self { tag, terms }
    }

    pub fn mono(a: i32, b: i32, vars: Vars) -> Self {
        Self::monomial(BigRational::one(), a, b, Some(vars))
    }

    pub fn q() -> Self {
        Self::mono(1, 0, Vars::QT)
    }
    pub fn t() -> Self {
        Self::mono(0, 1, Vars::QT)
    }
    pub fn s() -> Self {
        Self::mono(1, 0, Vars::SU)
    }
    pub fn u() -> Self {
        Self::mono(0, 1, Vars::SU)
    }

    /// Build from raw terms, dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exp, BigRational)>>(it: I, vars: Option<Vars>) -> Self {
        let mut p = Self { tag: vars, terms: BTreeMap::new() };
        for (e, c) in it {
            p.add_term(e, c);
        }
        p.fix_tag();
        p
    }

    fn fix_tag(&mut self) {
        if self.terms.keys().all(|e| *e == (0, 0)) {
            self.tag = None;
        }
    }

    pub(crate) fn add_term(&mut self, e: Exp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn tag(&self) -> Option<Vars> {
        self.tag
    }

    pub fn terms(&self) -> &BTreeMap<Exp, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == (0, 0))
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.get(&(0, 0)).cloned()
        } else {
            None
        }
    }

    /// `Some((c, a, b))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(BigRational, i32, i32)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), e.0, e.1))
        } else {
            None
        }
    }

    pub fn coeff(&self, a: i32, b: i32) -> BigRational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, ExactError> {
        let tag = merge_tags(self.tag, o.tag)?;
        let mut r = self.clone();
        r.tag = tag;
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r.fix_tag();
        Ok(r)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, ExactError> {
        let tag = merge_tags(self.tag, o.tag)?;
        let mut r = Self { tag, terms: BTreeMap::new() };
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero());
        }
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term((e1.0 + e2.0, e1.1 + e2.1), c1 * c2);
            }
        }
        r.fix_tag();
        Ok(r)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { tag: self.tag, terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiply by `v1^a v2^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        let mut r = Self { tag: self.tag, terms: self.terms.iter().map(|(e, c)| ((e.0 + a, e.1 + b), c.clone())).collect() };
        r.fix_tag();
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Apply an exponent map `(a, b) -> f(a, b)` and retag.
    pub fn map_exponents<F: Fn(i32, i32) -> Exp>(&self, f: F, tag: Option<Vars>) -> Self {
        let mut r = Self { tag: tag.or(self.tag), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            r.add_term(f(e.0, e.1), c.clone());
        }
        r.fix_tag();
        r
    }

    /// `v1 -> v1^k`, `v2 -> v2^k`; `k` may be negative.
    pub fn power_substitute(&self, k: i32) -> Self {
        self.map_exponents(|a, b| (k * a, k * b), self.tag)
    }

    /// `(q, t) -> (q^-1, t^-1)`.
    pub fn inv(&self) -> Self {
        self.power_substitute(-1)
    }

    /// Exchange the two variables.
    pub fn swap(&self) -> Self {
        self.map_exponents(|a, b| (b, a), self.tag)
    }

    /// `q -> s^2 u^2`, `t -> s^2 u^-2`.
    pub fn to_su(&self) -> Self {
        assert!(self.tag != Some(Vars::SU), "to_su applied to an (s,u) value");
        self.map_exponents(|a, b| (2 * a + 2 * b, 2 * a - 2 * b), Some(Vars::SU))
    }

    /// Evaluate both variables at 1.
    pub fn eval_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Evaluate at integer points (used for randomized identity testing).
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * rpow(x, e.0) * rpow(y, e.1);
        }
        acc
    }

    pub fn min_exps(&self) -> Option<Exp> {
        if self.is_zero() {
            return None;
        }
        let a = self.terms.keys().map(|e| e.0).min().unwrap();
        let b = self.terms.keys().map(|e| e.1).min().unwrap();
        Some((a, b))
    }

    pub fn max_exps(&self) -> Option<Exp> {
        if self.is_zero() {
            return None;
        }
        let a = self.terms.keys().map(|e| e.0).max().unwrap();
        let b = self.terms.keys().map(|e| e.1).max().unwrap();
        Some((a, b))
    }

    /// Lex-leading term `(exp, coeff)`.
    pub fn leading(&self) -> Option<(Exp, &BigRational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Lex-trailing term.
    pub fn trailing(&self) -> Option<(Exp, &BigRational)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Split off `(scalar, shift)` so that the rest has coprime integer
    /// coefficients, min exponents zero, and positive lex-trailing coefficient.
    pub fn primitive_part(&self) -> (BigRational, Exp, Self) {
        let (ma, mb) = match self.min_exps() {
            Some(m) => m,
            None => return (BigRational::zero(), (0, 0), Self::zero()),
        };
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.trailing().unwrap().1.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        let prim = Self {
            tag: self.tag,
            terms: self.terms.iter().map(|(e, c)| ((e.0 - ma, e.1 - mb), c * &inv)).collect(),
        };
        let mut prim = prim;
        prim.fix_tag();
        (content, (ma, mb), prim)
    }

    /// Exact quotient `self / g` in the Laurent ring, or `None` if `g` does not divide.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        assert!(!g.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let tag = merge_or_panic(self.tag, g.tag);
        if let Some((c, a, b)) = g.as_monomial() {
            let inv = c.recip();
            let mut r = Self { tag, terms: self.terms.iter().map(|(e, x)| ((e.0 - a, e.1 - b), x * &inv)).collect() };
            r.fix_tag();
            return Some(r);
        }
        let (fmin, fmax) = (self.min_exps().unwrap(), self.max_exps().unwrap());
        let (gmin, gmax) = (g.min_exps().unwrap(), g.max_exps().unwrap());
        let lo = (fmin.0 - gmin.0, fmin.1 - gmin.1);
        let hi = (fmax.0 - gmax.0, fmax.1 - gmax.1);
        if lo.0 > hi.0 || lo.1 > hi.1 {
            return None;
        }
        let (ge, gc) = g.leading().unwrap();
        let gc_inv = gc.recip();
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            let qe = (re.0 - ge.0, re.1 - ge.1);
            if qe.0 < lo.0 || qe.0 > hi.0 || qe.1 < lo.1 || qe.1 > hi.1 {
                return None;
            }
            let qc = rc * &gc_inv;
            for (e, c) in &g.terms {
                let k = (e.0 + qe.0, e.1 + qe.1);
                let v = rem.entry(k).or_insert_with(BigRational::zero);
                *v -= &qc * c;
                if v.is_zero() {
                    rem.remove(&k);
                }
            }
            quot.insert(qe, qc);
        }
        let mut r = Self { tag, terms: quot };
        r.fix_tag();
        Some(r)
    }

    /// Render with explicit variable names (used when the tag is absent).
    pub fn render(&self, vars: Vars) -> String {
        let (x, y) = self.tag.unwrap_or(vars).names();
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (v, e) in [(x, *a), (y, *b)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

pub(crate) fn rpow(x: &BigRational, e: i32) -> BigRational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Vars::QT))
    }
}

impl<'a> Add<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, o: &LaurentPoly2) -> LaurentPoly2 {
        self.checked_add(o).unwrap_or_else(|e| panic!("{e}"))
    }
}
impl<'a> Sub<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, o: &LaurentPoly2) -> LaurentPoly2 {
        self.checked_add(&-o).unwrap_or_else(|e| panic!("{e}"))
    }
}
impl<'a> Mul<&'a LaurentPoly2> for &'a LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, o: &LaurentPoly2) -> LaurentPoly2 {
        self.checked_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}
impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 { tag: self.tag, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}
impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}
impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, o: LaurentPoly2) -> LaurentPoly2 {
        &self + &o
    }
}
impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, o: LaurentPoly2) -> LaurentPoly2 {
        &self - &o
    }
}
impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, o: LaurentPoly2) -> LaurentPoly2 {
        &self * &o
    }
}
impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, o: &LaurentPoly2) {
        self.tag = merge_or_panic(self.tag, o.tag);
        for (e, c) in &o.terms {
            self.add_term(*e, c.clone());
        }
        self.fix_tag();
    }
}
impl SubAssign<&LaurentPoly2> for LaurentPoly2 {
    fn sub_assign(&mut self, o: &LaurentPoly2) {
        self.tag = merge_or_panic(self.tag, o.tag);
        for (e, c) in &o.terms {
            self.add_term(*e, -c);
        }
        self.fix_tag();
    }
}

/// Small helper for integer-valued exponents in tests and tables.
pub fn to_i64(c: &BigRational) -> Option<i64> {
    if c.is_integer() {
        c.numer().to_i64()
    } else {
        None
    }
}
