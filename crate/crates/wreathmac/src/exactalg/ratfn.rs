use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{merge_tags, Exp, LaurentPoly2, Vars};
use super::ExactError;

/// A rational function `num / prod(den_i ^ e_i)`.
///
/// Denominator factors are primitive polynomials with min exponents zero and
/// positive trailing coefficient. Binomial-type denominators are split into
/// cyclotomic pieces `Phi_d(q^a t^b)`, which are irreducible, so in the common
/// case the representation is fully reduced. Any other denominator is kept as an
/// opaque factor; equality always falls back to cross multiplication.
#[derive(Clone, Debug, Default)]
pub struct RatFn2 {
    num: LaurentPoly2,
    den: Vec<(LaurentPoly2, u32)>,
}

impl RatFn2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly2::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly2::from_int(c))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_poly(LaurentPoly2::from_frac(n, d))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly2::constant(c))
    }

    pub fn from_poly(p: LaurentPoly2) -> Self {
        Self { num: p, den: Vec::new() }
    }

    pub fn q() -> Self {
        Self::from_poly(LaurentPoly2::q())
    }
    pub fn t() -> Self {
        Self::from_poly(LaurentPoly2::t())
    }
    pub fn s() -> Self {
        Self::from_poly(LaurentPoly2::s())
    }
    pub fn u() -> Self {
        Self::from_poly(LaurentPoly2::u())
    }

    pub fn mono(a: i32, b: i32, vars: Vars) -> Self {
        Self::from_poly(LaurentPoly2::mono(a, b, vars))
    }

    /// `num / den`, with the denominator factored.
    pub fn from_polys(num: LaurentPoly2, den: LaurentPoly2) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(&Self::from_poly(num) * &Self::from_poly(den).inv()?)
    }

    pub fn numer(&self) -> &LaurentPoly2 {
        &self.num
    }

    pub fn den_factors(&self) -> &[(LaurentPoly2, u32)] {
        &self.den
    }

    /// The denominator multiplied out.
    pub fn denom(&self) -> LaurentPoly2 {
        let mut d = LaurentPoly2::one();
        for (f, e) in &self.den {
            d = &d * &f.pow(*e);
        }
        d
    }

    /// Least common multiple of the denominators of `items`, as a polynomial.
    pub fn common_denominator<'a, I: IntoIterator<Item = &'a RatFn2>>(items: I) -> LaurentPoly2 {
        let mut acc: Vec<(LaurentPoly2, u32)> = Vec::new();
        for x in items {
            acc = merge_factors(&acc, &x.den, |a, b| a.max(b));
        }
        acc.iter().fold(LaurentPoly2::one(), |d, (f, e)| &d * &f.pow(*e))
    }

    pub fn tag(&self) -> Option<Vars> {
        let mut t = self.num.tag();
        for (f, _) in &self.den {
            t = merge_tags(t, f.tag()).unwrap_or_else(|e| panic!("{e}"));
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    /// Is this a Laurent polynomial (no denominator left after reduction)?
    pub fn is_poly(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly2> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn into_poly(self) -> Option<LaurentPoly2> {
        if self.den.is_empty() {
            Some(self.num)
        } else {
            None
        }
    }

    /// `Some((c, a, b))` for a Laurent monomial.
    pub fn as_monomial(&self) -> Option<(BigRational, i32, i32)> {
        self.as_poly().and_then(|p| p.as_monomial())
    }

    pub fn scale_rat(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale_rat(&BigRational::from_integer(c.into()))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, ExactError> {
        let num = self.num.checked_mul(&o.num)?;
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if self.den.is_empty() && o.den.is_empty() {
            return Ok(Self::from_poly(num));
        }
        let den = merge_factors(&self.den, &o.den, |a, b| a + b);
        let mut r = Self { num, den };
        r.reduce();
        Ok(r)
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        if self.den == o.den {
            let num = self.num.checked_add(&o.num)?;
            let mut r = Self { num, den: self.den.clone() };
            r.reduce();
            return Ok(r);
        }
        let den = merge_factors(&self.den, &o.den, |a, b| a.max(b));
        let n1 = self.num.checked_mul(&cofactor(&den, &self.den))?;
        let n2 = o.num.checked_mul(&cofactor(&den, &o.den))?;
        let mut r = Self { num: n1.checked_add(&n2)?, den };
        r.reduce();
        Ok(r)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.exact_div(f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.num.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        let (c, (a, b), factors) = factor_poly(&self.num);
        let mut num = LaurentPoly2::monomial(c.recip(), -a, -b, self.num.tag());
        for (f, e) in &self.den {
            num = &num * &f.pow(*e);
        }
        let mut r = Self { num, den: factors };
        r.reduce();
        Ok(r)
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n < 0 { self.inv().expect("inverse of zero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    fn map_polys<F: Fn(&LaurentPoly2) -> LaurentPoly2>(&self, f: F) -> Result<Self, ExactError> {
        let mut r = Self::from_poly(f(&self.num));
        for (d, e) in &self.den {
            let img = Self::from_poly(f(d)).inv()?;
            for _ in 0..*e {
                r = r.checked_mul(&img)?;
            }
        }
        Ok(r)
    }

    pub fn power_substitute(&self, k: i32) -> Self {
        self.map_polys(|p| p.power_substitute(k)).expect("power substitution is injective")
    }

    pub fn inv_vars(&self) -> Self {
        self.power_substitute(-1)
    }

    pub fn swap(&self) -> Self {
        self.map_polys(|p| p.swap()).expect("swap is injective")
    }

    pub fn to_su(&self) -> Self {
        self.map_polys(|p| p.to_su()).expect("to_su is injective")
    }

    /// General monomial substitution; fails if a denominator vanishes.
    pub fn map_exponents<F: Fn(i32, i32) -> Exp>(&self, f: F, tag: Option<Vars>) -> Result<Self, ExactError> {
        self.map_polys(|p| p.map_exponents(&f, tag))
    }

    /// Evaluate at a rational point; errors if the denominator vanishes there.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> Result<BigRational, ExactError> {
        let d = self.denom().eval(x, y);
        if d.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(self.num.eval(x, y) / d)
    }

    pub fn render(&self, vars: Vars) -> String {
        if self.den.is_empty() {
            self.num.render(vars)
        } else {
            format!("({})/({})", self.num.render(vars), self.denom().render(vars))
        }
    }
}

fn merge_factors<F: Fn(u32, u32) -> u32>(a: &[(LaurentPoly2, u32)], b: &[(LaurentPoly2, u32)], op: F) -> Vec<(LaurentPoly2, u32)> {
    let mut m: BTreeMap<LaurentPoly2, u32> = a.iter().cloned().collect();
    for (f, e) in b {
        let v = m.entry(f.clone()).or_insert(0);
        *v = op(*v, *e);
    }
    m.into_iter().filter(|(_, e)| *e > 0).collect()
}

fn cofactor(full: &[(LaurentPoly2, u32)], part: &[(LaurentPoly2, u32)]) -> LaurentPoly2 {
    let mut r = LaurentPoly2::one();
    for (f, e) in full {
        let have = part.iter().find(|(g, _)| g == f).map_or(0, |(_, x)| *x);
        if *e > have {
            r = &r * &f.pow(*e - have);
        }
    }
    r
}

/// Integer coefficients of the cyclotomic polynomial `Phi_d`, lowest degree first.
fn cyclotomic(d: usize) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&d) {
        return v.clone();
    }
    // x^d - 1 divided by Phi_e for proper divisors e.
    let mut p = vec![0i64; d + 1];
    p[0] = -1;
    p[d] = 1;
    for e in 1..d {
        if d % e == 0 {
            p = poly_div_int(&p, &cyclotomic(e));
        }
    }
    cache.lock().unwrap().insert(d, p.clone());
    p
}

fn poly_div_int(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = *b.last().unwrap();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db] / lead;
        q[i] = c;
        for j in 0..=db {
            rem[i + j] -= c * b[j];
        }
    }
    debug_assert!(rem.iter().all(|x| *x == 0));
    q
}

fn euler_phi(n: usize) -> usize {
    let (mut m, mut r, mut p) = (n, n, 2);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if m > 1 {
        r -= r / m;
    }
    r
}

/// Primitive edge directions of the Newton polygon with their lattice lengths.
fn newton_directions(p: &LaurentPoly2) -> Vec<(Exp, i32)> {
    let mut pts: Vec<Exp> = p.terms().keys().cloned().collect();
    pts.sort();
    pts.dedup();
    if pts.len() < 2 {
        return Vec::new();
    }
    let cross = |o: Exp, a: Exp, b: Exp| -> i64 {
        (a.0 - o.0) as i64 * (b.1 - o.1) as i64 - (a.1 - o.1) as i64 * (b.0 - o.0) as i64
    };
    let mut hull: Vec<Exp> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Exp>> = if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &pt in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0 {
                hull.pop();
            }
            hull.push(pt);
        }
        hull.pop();
    }
    let mut dirs: BTreeMap<Exp, i32> = BTreeMap::new();
    let n = hull.len();
    let edges: Vec<(Exp, Exp)> = if n == 1 {
        vec![(pts[0], *pts.last().unwrap())]
    } else {
        (0..n).map(|i| (hull[i], hull[(i + 1) % n])).collect()
    };
    for (a, b) in edges {
        let (mut da, mut db) = (b.0 - a.0, b.1 - a.1);
        let g = da.gcd(&db);
        if g == 0 {
            continue;
        }
        da /= g;
        db /= g;
        if da < 0 || (da == 0 && db < 0) {
            da = -da;
            db = -db;
        }
        let len = g.abs();
        let e = dirs.entry((da, db)).or_insert(0);
        *e = (*e).max(len);
    }
    dirs.into_iter().collect()
}

/// `p = c * v^shift * prod(f_i ^ e_i)` with normalized factors.
pub(crate) fn factor_poly(p: &LaurentPoly2) -> (BigRational, Exp, Vec<(LaurentPoly2, u32)>) {
    let (c, shift, mut prim) = p.primitive_part();
    let mut factors: BTreeMap<LaurentPoly2, u32> = BTreeMap::new();
    if prim.is_constant() {
        return (c, shift, Vec::new());
    }
    let tag = prim.tag();
    for ((da, db), len) in newton_directions(&prim) {
        for d in 1..=(2 * len as usize * len as usize + 2) {
            if euler_phi(d) > len as usize {
                continue;
            }
            let coeffs = cyclotomic(d);
            let cand = LaurentPoly2::from_terms(
                coeffs.iter().enumerate().map(|(k, ci)| ((k as i32 * da, k as i32 * db), BigRational::from_integer((*ci).into()))),
                tag,
            );
            let (_, _, cand) = cand.primitive_part();
            while let Some(qt) = prim.exact_div(&cand) {
                prim = qt;
                *factors.entry(cand.clone()).or_insert(0) += 1;
            }
        }
    }
    // The residue is a unit times a primitive polynomial; fold the unit into c.
    let (c2, s2, rest) = prim.primitive_part();
    let c = c * c2;
    let shift = (shift.0 + s2.0, shift.1 + s2.1);
    if !rest.is_constant() {
        *factors.entry(rest).or_insert(0) += 1;
    }
    (c, shift, factors.into_iter().collect())
}

impl PartialEq for RatFn2 {
    fn eq(&self, o: &Self) -> bool {
        if merge_tags(self.tag(), o.tag()).is_err() {
            return false;
        }
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.clone() * o.denom() == o.num.clone() * self.denom()
    }
}
impl Eq for RatFn2 {}

impl fmt::Display for RatFn2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Vars::QT))
    }
}

impl From<LaurentPoly2> for RatFn2 {
    fn from(p: LaurentPoly2) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RatFn2> for &'a RatFn2 {
    type Output = RatFn2;
    fn add(self, o: &RatFn2) -> RatFn2 {
        self.checked_add(o).unwrap_or_else(|e| panic!("{e}"))
    }
}
impl<'a> Sub<&'a RatFn2> for &'a RatFn2 {
    type Output = RatFn2;
    fn sub(self, o: &RatFn2) -> RatFn2 {
        self.checked_add(&-o).unwrap_or_else(|e| panic!("{e}"))
    }
}
impl<'a> Mul<&'a RatFn2> for &'a RatFn2 {
    type Output = RatFn2;
    fn mul(self, o: &RatFn2) -> RatFn2 {
        self.checked_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}
impl<'a> Div<&'a RatFn2> for &'a RatFn2 {
    type Output = RatFn2;
    fn div(self, o: &RatFn2) -> RatFn2 {
        let inv = o.inv().unwrap_or_else(|e| panic!("{e}"));
        self * &inv
    }
}
impl Neg for &RatFn2 {
    type Output = RatFn2;
    fn neg(self) -> RatFn2 {
        RatFn2 { num: -&self.num, den: self.den.clone() }
    }
}
impl Neg for RatFn2 {
    type Output = RatFn2;
    fn neg(self) -> RatFn2 {
        RatFn2 { num: -self.num, den: self.den }
    }
}
impl Add for RatFn2 {
    type Output = RatFn2;
    fn add(self, o: RatFn2) -> RatFn2 {
        &self + &o
    }
}
impl Sub for RatFn2 {
    type Output = RatFn2;
    fn sub(self, o: RatFn2) -> RatFn2 {
        &self - &o
    }
}
impl Mul for RatFn2 {
    type Output = RatFn2;
    fn mul(self, o: RatFn2) -> RatFn2 {
        &self * &o
    }
}
impl Div for RatFn2 {
    type Output = RatFn2;
    fn div(self, o: RatFn2) -> RatFn2 {
        &self / &o
    }
}
impl AddAssign<&RatFn2> for RatFn2 {
    fn add_assign(&mut self, o: &RatFn2) {
        if self.den.is_empty() && o.den.is_empty() {
            self.num += &o.num;
        } else {
            *self = &*self + o;
        }
    }
}
impl SubAssign<&RatFn2> for RatFn2 {
    fn sub_assign(&mut self, o: &RatFn2) {
        if self.den.is_empty() && o.den.is_empty() {
            self.num -= &o.num;
        } else {
            *self = &*self - o;
        }
    }
}

impl Zero for RatFn2 {
    fn zero() -> Self {
        RatFn2::zero()
    }
    fn is_zero(&self) -> bool {
        RatFn2::is_zero(self)
    }
}
impl One for RatFn2 {
    fn one() -> Self {
        RatFn2::one()
    }
}
