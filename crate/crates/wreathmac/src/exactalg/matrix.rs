use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::LaurentPoly2;
use super::ratfn::RatFn2;
use super::ExactError;

/// A dense square matrix of rational functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatRF {
    n: usize,
    entries: Vec<RatFn2>,
}

impl MatRF {
    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![RatFn2::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { RatFn2::one() } else { RatFn2::zero() })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> RatFn2>(n: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    /// Matrix of a permutation: column `i` is the basis vector `e_{u(i)}`.
    pub fn permutation(u: &[usize]) -> Self {
        Self::from_fn(u.len(), |i, j| if u[j] == i { RatFn2::one() } else { RatFn2::zero() })
    }

    /// The rotation `chi: e_i -> e_{i+1}`.
    pub fn chi(r: usize) -> Self {
        let u: Vec<usize> = (0..r).map(|i| (i + 1) % r).collect();
        Self::permutation(&u)
    }

    /// `chi^k` for any integer `k`.
    pub fn chi_pow(r: usize, k: i64) -> Self {
        let u: Vec<usize> = (0..r).map(|i| (i as i64 + k).rem_euclid(r as i64) as usize).collect();
        Self::permutation(&u)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFn2 {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFn2) {
        self.entries[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &RatFn2) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn map<F: Fn(&RatFn2) -> RatFn2>(&self, f: F) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    /// Entrywise `(q,t) -> (q^-1,t^-1)`.
    pub fn inv_vars(&self) -> Self {
        self.map(|x| x.inv_vars())
    }

    /// Entrywise exchange of `q` and `t`.
    pub fn swap_vars(&self) -> Self {
        self.map(|x| x.swap())
    }

    pub fn power_substitute(&self, k: i32) -> Self {
        self.map(|x| x.power_substitute(k))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, ExactError> {
        if self.n != o.n {
            return Err(ExactError::Dimension(format!("{}x{} times {}x{}", self.n, self.n, o.n, o.n)));
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact inverse. Rows are cleared of denominators and the resulting
    /// polynomial matrix is inverted by fraction-free Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        let n = self.n;
        let mut rows: Vec<Vec<LaurentPoly2>> = Vec::with_capacity(n);
        let mut scales = Vec::with_capacity(n);
        for i in 0..n {
            let common = RatFn2::from_poly(RatFn2::common_denominator((0..n).map(|j| self.get(i, j))));
            let mut row = Vec::with_capacity(2 * n);
            for j in 0..n {
                let v = self.get(i, j) * &common;
                row.push(v.into_poly().expect("denominators cleared"));
            }
            for j in 0..n {
                row.push(if i == j { LaurentPoly2::one() } else { LaurentPoly2::zero() });
            }
            rows.push(row);
            scales.push(common);
        }
        let ech = bareiss_gauss_jordan(rows, n)?;
        if ech.pivots.len() < n {
            return Err(ExactError::Singular);
        }
        let p = RatFn2::from_poly(ech.pivot.clone());
        let mut out = Self::zero(n);
        for (r, &c) in ech.pivots.iter().enumerate() {
            for k in 0..n {
                let v = &(&RatFn2::from_poly(ech.rows[r][n + k].clone()) / &p) * &scales[k];
                out.set(c, k, v);
            }
        }
        Ok(out)
    }
}

impl<'a> Mul<&'a MatRF> for &'a MatRF {
    type Output = MatRF;
    fn mul(self, o: &MatRF) -> MatRF {
        self.checked_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}
impl<'a> Add<&'a MatRF> for &'a MatRF {
    type Output = MatRF;
    fn add(self, o: &MatRF) -> MatRF {
        assert_eq!(self.n, o.n);
        MatRF { n: self.n, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect() }
    }
}
impl<'a> Sub<&'a MatRF> for &'a MatRF {
    type Output = MatRF;
    fn sub(self, o: &MatRF) -> MatRF {
        assert_eq!(self.n, o.n);
        MatRF { n: self.n, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect() }
    }
}
impl Neg for &MatRF {
    type Output = MatRF;
    fn neg(self) -> MatRF {
        MatRF { n: self.n, entries: self.entries.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for MatRF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Result of fraction-free Gauss-Jordan elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<LaurentPoly2>>,
    /// Pivot column of each nonzero row, in order.
    pub pivots: Vec<usize>,
    /// The common value of all pivot entries (a maximal nonzero minor).
    pub pivot: LaurentPoly2,
}

/// Fraction-free Gauss-Jordan elimination (Bareiss) over Laurent polynomials.
///
/// Only the first `pivot_cols` columns are eligible as pivots. Every division is
/// exact; a failed division is reported as an error rather than ignored.
pub fn bareiss_gauss_jordan(mut a: Vec<Vec<LaurentPoly2>>, pivot_cols: usize) -> Result<Echelon, ExactError> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut prev = LaurentPoly2::one();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..pivot_cols.min(ncols) {
        if row == nrows {
            break;
        }
        // prefer the sparsest nonzero pivot to keep intermediate growth down
        let cand = (row..nrows).filter(|&i| !a[i][col].is_zero()).min_by_key(|&i| a[i][col].len());
        let Some(p) = cand else { continue };
        a.swap(row, p);
        let piv = a[row][col].clone();
        for i in 0..nrows {
            if i == row {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..ncols {
                if j == col {
                    continue;
                }
                let v = &(&piv * &a[i][j]) - &(&f * &a[row][j]);
                a[i][j] = v.exact_div(&prev).ok_or_else(|| ExactError::Dimension("inexact Bareiss step".into()))?;
            }
            a[i][col] = LaurentPoly2::zero();
        }
        prev = piv;
        pivots.push(col);
        row += 1;
    }
    a.truncate(nrows);
    Ok(Echelon { rows: a, pivots, pivot: prev })
}

/// A generator of the kernel when it is one-dimensional, `None` otherwise.
pub fn nullspace_vector(rows: Vec<Vec<LaurentPoly2>>, ncols: usize) -> Result<Option<Vec<LaurentPoly2>>, ExactError> {
    if rows.is_empty() {
        return Ok(if ncols == 1 { Some(vec![LaurentPoly2::one()]) } else { None });
    }
    let ech = bareiss_gauss_jordan(rows, ncols)?;
    if ech.pivots.len() + 1 != ncols {
        return Ok(None);
    }
    let free = (0..ncols).find(|c| !ech.pivots.contains(c)).unwrap();
    let mut x = vec![LaurentPoly2::zero(); ncols];
    x[free] = ech.pivot.clone();
    for (r, &c) in ech.pivots.iter().enumerate() {
        x[c] = -&ech.rows[r][free];
    }
    Ok(Some(x))
}
