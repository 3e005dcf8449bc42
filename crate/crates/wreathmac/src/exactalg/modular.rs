//! Kernel vectors of Laurent-polynomial matrices by evaluation modulo a prime.
//!
//! The system is solved at points `(q, t) = (a, b)` mod `P`, the normalized kernel
//! vector is interpolated on a grid, and coefficients are lifted to the symmetric
//! range. The result is a candidate only: callers re-check it exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::laurent::{LaurentPoly2, Vars};

const P: u64 = (1 << 61) - 1;

/// Largest exponent spread probed per variable.
const MAX_SPREAD: usize = 96;

fn reduce(x: u128) -> u64 {
    let r = (x & P as u128) as u64 + (x >> 61) as u64;
    let r = (r & P) + (r >> 61);
    if r >= P {
        r - P
    } else {
        r
    }
}

fn mul(a: u64, b: u64) -> u64 {
    reduce(a as u128 * b as u128)
}

fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn pow_signed(x: u64, e: i32) -> u64 {
    if e >= 0 {
        pow(x, e as u64)
    } else {
        pow(inv(x), e.unsigned_abs() as u64)
    }
}

fn reduce_int(n: &BigInt) -> u64 {
    let m = n % BigInt::from(P);
    let m = if m < BigInt::zero() { m + BigInt::from(P) } else { m };
    m.to_u64().expect("reduced below P")
}

fn reduce_rat(c: &BigRational) -> Option<u64> {
    let d = reduce_int(c.denom());
    (d != 0).then(|| mul(reduce_int(c.numer()), inv(d)))
}

/// A matrix of Laurent polynomials stored as sparse `(a, b, c mod P)` term lists.
struct ModMatrix {
    ncols: usize,
    entries: Vec<Vec<Vec<(i32, i32, u64)>>>,
    lo: (i32, i32),
    hi: (i32, i32),
}

impl ModMatrix {
    fn new(rows: &[Vec<LaurentPoly2>], ncols: usize) -> Option<Self> {
        let (mut lo, mut hi) = ((0, 0), (0, 0));
        let mut entries = Vec::with_capacity(rows.len());
        for row in rows {
            let mut out = Vec::with_capacity(ncols);
            for p in row {
                let mut terms = Vec::with_capacity(p.len());
                for (&(a, b), c) in p.terms() {
                    terms.push((a, b, reduce_rat(c)?));
                    lo = (lo.0.min(a), lo.1.min(b));
                    hi = (hi.0.max(a), hi.1.max(b));
                }
                out.push(terms);
            }
            entries.push(out);
        }
        Some(Self { ncols, entries, lo, hi })
    }

    fn powers(x: u64, lo: i32, hi: i32) -> Vec<u64> {
        let mut out = Vec::with_capacity((hi - lo + 1) as usize);
        let mut acc = pow_signed(x, lo);
        for _ in lo..=hi {
            out.push(acc);
            acc = mul(acc, x);
        }
        out
    }

    /// The kernel vector at `(x, y)` scaled so that entry `norm` is 1, if the kernel is a line
    /// and entry `norm` does not vanish on it.
    fn kernel_at(&self, x: u64, y: u64, norm: usize) -> Option<Vec<u64>> {
        let px = Self::powers(x, self.lo.0, self.hi.0);
        let py = Self::powers(y, self.lo.1, self.hi.1);
        let mut m: Vec<Vec<u64>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|terms| {
                        terms.iter().fold(0, |acc, &(a, b, c)| {
                            add(acc, mul(c, mul(px[(a - self.lo.0) as usize], py[(b - self.lo.1) as usize])))
                        })
                    })
                    .collect()
            })
            .collect();
        let n = self.ncols;
        let mut pivots = Vec::with_capacity(n);
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..m.len()).find(|&i| m[i][col] != 0) else { continue };
            m.swap(row, p);
            let pinv = inv(m[row][col]);
            for v in m[row].iter_mut() {
                *v = mul(*v, pinv);
            }
            let pr = m[row].clone();
            for (i, r) in m.iter_mut().enumerate() {
                if i == row || r[col] == 0 {
                    continue;
                }
                let f = r[col];
                for j in col..n {
                    if pr[j] != 0 {
                        r[j] = sub(r[j], mul(f, pr[j]));
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.len() {
                break;
            }
        }
        if pivots.len() + 1 != n {
            return None;
        }
        let free = (0..n).find(|c| !pivots.contains(c))?;
        let mut v = vec![0; n];
        v[free] = 1;
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = sub(0, m[r][free]);
        }
        if v[norm] == 0 {
            return None;
        }
        let s = inv(v[norm]);
        Some(v.into_iter().map(|x| mul(x, s)).collect())
    }
}

const STEP: u64 = 13;

/// `n` evaluation points `start, start + STEP, ...`.
fn points(start: u64, n: usize) -> Vec<u64> {
    (0..n as u64).map(|i| start + STEP * i).collect()
}

/// Coefficients of the polynomial of degree `< xs.len()` through `(xs, ys)`, lowest first.
/// `xs` must come from `points`, so `xs[i] - xs[i-k] = STEP * k`.
fn interpolate(xs: &[u64], ys: &[u64], inv_step: &[u64]) -> Vec<u64> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = mul(sub(dd[i], dd[i - 1]), inv_step[k]);
        }
    }
    let mut coeffs = vec![0; n];
    for i in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[i]) + dd[i]
        for j in (1..n).rev() {
            coeffs[j] = sub(coeffs[j - 1], mul(coeffs[j], xs[i]));
        }
        coeffs[0] = sub(dd[i], mul(coeffs[0], xs[i]));
    }
    coeffs
}

/// `inv_step[k] = 1 / (STEP * k)`.
fn inv_steps(n: usize) -> Vec<u64> {
    (0..n as u64).map(|k| if k == 0 { 0 } else { inv(STEP * k) }).collect()
}

fn eval_poly(c: &[u64], x: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &a| add(mul(acc, x), a))
}

/// Exponent range of every kernel entry in one variable, probed along a line.
/// Fails if the range exceeds `MAX_SPREAD` or the line hits a bad point.
fn probe(m: &ModMatrix, norm: usize, along_q: bool) -> Option<(i32, i32)> {
    let shift = (MAX_SPREAD / 2) as i32;
    let n = MAX_SPREAD + 1;
    // one point past the fit, to detect overflow
    let xs = points(if along_q { 7 } else { 12 }, n + 1);
    let inv_step = inv_steps(n);
    let fixed = if along_q { 1_000_003 } else { 999_983 };
    let mut vals: Vec<Vec<u64>> = Vec::with_capacity(xs.len());
    for &x in &xs {
        let (a, b) = if along_q { (x, fixed) } else { (fixed, x) };
        let v = m.kernel_at(a, b, norm)?;
        let scale = pow(x, shift as u64);
        vals.push(v.into_iter().map(|c| mul(c, scale)).collect());
    }
    let (mut lo, mut hi) = (i32::MAX, i32::MIN);
    for l in 0..m.ncols {
        let ys: Vec<u64> = vals.iter().map(|v| v[l]).collect();
        let c = interpolate(&xs[..n], &ys[..n], &inv_step);
        if eval_poly(&c, xs[n]) != ys[n] {
            return None;
        }
        for (e, &a) in c.iter().enumerate() {
            if a != 0 {
                lo = lo.min(e as i32 - shift);
                hi = hi.max(e as i32 - shift);
            }
        }
    }
    Some(if lo > hi { (0, 0) } else { (lo, hi) })
}

fn lift(c: u64) -> BigRational {
    let v = if c > P / 2 { -((P - c) as i64) } else { c as i64 };
    BigRational::from_integer(BigInt::from(v))
}

/// A candidate kernel vector with entry `norm` equal to 1, assuming the kernel is a line
/// spanned by a vector of integer Laurent polynomials. `None` when the assumption fails
/// visibly; a returned vector still has to be checked exactly.
pub fn kernel_candidate(rows: &[Vec<LaurentPoly2>], ncols: usize, norm: usize, vars: Vars) -> Option<Vec<LaurentPoly2>> {
    if rows.is_empty() {
        return None;
    }
    let m = ModMatrix::new(rows, ncols)?;
    let (qlo, qhi) = probe(&m, norm, true)?;
    let (tlo, thi) = probe(&m, norm, false)?;
    let (nq, nt) = ((qhi - qlo + 1) as usize, (thi - tlo + 1) as usize);
    let xs = points(9, nq);
    let ys = points(18, nt);
    let (inv_q, inv_t) = (inv_steps(nq), inv_steps(nt));
    // grid[j][i][l] at (xs[i], ys[j]), shifted to nonnegative exponents
    let mut grid = Vec::with_capacity(nt);
    for &y in &ys {
        let mut row = Vec::with_capacity(nq);
        for &x in &xs {
            let v = m.kernel_at(x, y, norm)?;
            let s = mul(pow_signed(x, -qlo), pow_signed(y, -tlo));
            row.push(v.into_iter().map(|c| mul(c, s)).collect::<Vec<u64>>());
        }
        grid.push(row);
    }
    let mut out = Vec::with_capacity(ncols);
    for l in 0..ncols {
        // interpolate in q for each t, then each q-coefficient in t
        let by_t: Vec<Vec<u64>> = grid.iter().map(|row| interpolate(&xs, &row.iter().map(|v| v[l]).collect::<Vec<_>>(), &inv_q)).collect();
        let mut terms = Vec::new();
        for i in 0..nq {
            let c = interpolate(&ys, &by_t.iter().map(|c| c[i]).collect::<Vec<_>>(), &inv_t);
            for (j, &a) in c.iter().enumerate() {
                if a != 0 {
                    terms.push(((i as i32 + qlo, j as i32 + tlo), lift(a)));
                }
            }
        }
        out.push(LaurentPoly2::from_terms(terms, Some(vars)));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_recovers_coefficients() {
        let c = [5, P - 3, 0, 7];
        let xs = points(7, 4);
        let ys: Vec<u64> = xs.iter().map(|&x| eval_poly(&c, x)).collect();
        assert_eq!(interpolate(&xs, &ys, &inv_steps(4)), c);
    }

    #[test]
    fn kernel_of_a_small_system() {
        // the kernel of [t, -q^2] is (q^2, t), normalized at entry 0: (1, t q^-2)
        let rows = vec![vec![LaurentPoly2::t(), -&LaurentPoly2::mono(2, 0, Vars::QT)]];
        let v = kernel_candidate(&rows, 2, 0, Vars::QT).unwrap();
        assert_eq!(v, vec![LaurentPoly2::one(), LaurentPoly2::mono(-2, 1, Vars::QT)]);
    }
}
