use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::{LaurentPoly2, Vars};

/// An element `sum_i c_i chi^i` of `Z[q^±1, t^±1][chi]` with `chi^r = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    coeffs: Vec<LaurentPoly2>,
}

impl CycPoly {
    pub fn zero(r: usize) -> Self {
        assert!(r >= 1);
        Self { coeffs: vec![LaurentPoly2::zero(); r] }
    }

    pub fn from_coeffs(coeffs: Vec<LaurentPoly2>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    /// `c * chi^i`.
    pub fn chi_power(r: usize, i: i64, c: LaurentPoly2) -> Self {
        let mut z = Self::zero(r);
        z.coeffs[i.rem_euclid(r as i64) as usize] = c;
        z
    }

    /// Grade a `(q,t)` polynomial by `q -> q chi^-1`, `t -> t chi`.
    pub fn graded(f: &LaurentPoly2, r: usize) -> Self {
        let mut z = Self::zero(r);
        for ((a, b), c) in f.terms() {
            let i = (*b as i64 - *a as i64).rem_euclid(r as i64) as usize;
            z.coeffs[i] += &LaurentPoly2::monomial(c.clone(), *a, *b, Some(Vars::QT));
        }
        z
    }

    pub fn r(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: i64) -> &LaurentPoly2 {
        &self.coeffs[i.rem_euclid(self.r() as i64) as usize]
    }

    pub fn coeffs(&self) -> &[LaurentPoly2] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: i64, c: LaurentPoly2) {
        let r = self.r() as i64;
        self.coeffs[i.rem_euclid(r) as usize] = c;
    }

    pub fn scale(&self, c: &LaurentPoly2) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }
}

impl<'a> Add<&'a CycPoly> for &'a CycPoly {
    type Output = CycPoly;
    fn add(self, o: &CycPoly) -> CycPoly {
        assert_eq!(self.r(), o.r(), "CycPoly rank mismatch");
        CycPoly { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}
impl<'a> Sub<&'a CycPoly> for &'a CycPoly {
    type Output = CycPoly;
    fn sub(self, o: &CycPoly) -> CycPoly {
        assert_eq!(self.r(), o.r(), "CycPoly rank mismatch");
        CycPoly { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}
impl<'a> Mul<&'a CycPoly> for &'a CycPoly {
    type Output = CycPoly;
    fn mul(self, o: &CycPoly) -> CycPoly {
        assert_eq!(self.r(), o.r(), "CycPoly rank mismatch");
        let r = self.r();
        let mut z = CycPoly::zero(r);
        for i in 0..r {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..r {
                z.coeffs[(i + j) % r] += &(&self.coeffs[i] * &o.coeffs[j]);
            }
        }
        z
    }
}
impl Neg for &CycPoly {
    type Output = CycPoly;
    fn neg(self) -> CycPoly {
        CycPoly { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({})*chi^{i}", c))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}
