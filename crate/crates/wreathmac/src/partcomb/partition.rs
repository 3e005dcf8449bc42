use std::fmt;

use thiserror::Error;

use crate::exactalg::{LaurentPoly2, Vars};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartError {
    #[error("cell ({0},{1}) is not in the diagram")]
    CellOutside(u32, u32),
    #[error("sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid partition: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A cell `(a, b)`: column `a`, row `b`, both from zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub a: u32,
    pub b: u32,
}

impl Cell {
    pub fn new(a: u32, b: u32) -> Self {
        Self { a, b }
    }

    /// `b - a`, the diagonal index.
    pub fn content(&self) -> i64 {
        self.b as i64 - self.a as i64
    }

    /// Residue `(b - a) mod r`.
    pub fn residue(&self, r: usize) -> usize {
        self.content().rem_euclid(r as i64) as usize
    }
}

/// A partition, stored as weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Sorts and drops zeros, so any multiset of parts is accepted.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    /// Accepts only weakly decreasing input (trailing zeros allowed).
    pub fn try_from_parts(parts: &[u32]) -> Result<Self, PartError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartError::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts.iter().copied().filter(|&p| p > 0).collect()))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `mu_{i+1}` with the row index from zero; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let n = self.part(0);
        Self((0..n).map(|j| self.0.iter().filter(|&&p| p > j).count() as u32).collect())
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.a < self.part(c.b as usize)
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (b, &p) in self.0.iter().enumerate() {
            for a in 0..p {
                out.push(Cell::new(a, b as u32));
            }
        }
        out
    }

    pub fn arm(&self, c: Cell) -> Result<u32, PartError> {
        self.check(c)?;
        Ok(self.part(c.b as usize) - c.a - 1)
    }

    pub fn leg(&self, c: Cell) -> Result<u32, PartError> {
        self.check(c)?;
        Ok(self.transpose().part(c.a as usize) - c.b - 1)
    }

    fn check(&self, c: Cell) -> Result<(), PartError> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(PartError::CellOutside(c.a, c.b))
        }
    }

    /// `(arm, leg, hook)` of a cell.
    pub fn hook_data(&self, c: Cell) -> Result<(u32, u32, u32), PartError> {
        let a = self.arm(c)?;
        let l = self.leg(c)?;
        Ok((a, l, a + l + 1))
    }

    /// `n(mu) = sum (i-1) mu_i`.
    pub fn n_stat(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    pub fn addable(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for b in 0..=self.len() {
            let a = self.part(b);
            if b == 0 || self.part(b - 1) > a {
                out.push(Cell::new(a, b as u32));
            }
        }
        out
    }

    pub fn removable(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for b in 0..self.len() {
            let a = self.part(b);
            if self.part(b + 1) < a {
                out.push(Cell::new(a - 1, b as u32));
            }
        }
        out
    }

    pub fn with_cell(&self, c: Cell) -> Self {
        let mut v = self.0.clone();
        if c.b as usize == v.len() {
            v.push(0);
        }
        v[c.b as usize] += 1;
        Self(v)
    }

    pub fn without_cell(&self, c: Cell) -> Self {
        let mut v = self.0.clone();
        v[c.b as usize] -= 1;
        Self::new(v)
    }

    /// `lambda >= mu` in dominance order (sizes must agree).
    pub fn dominates(&self, mu: &Partition) -> bool {
        let mut s1 = 0u64;
        let mut s2 = 0u64;
        for i in 0..self.len().max(mu.len()) {
            s1 += self.part(i) as u64;
            s2 += mu.part(i) as u64;
            if s1 < s2 {
                return false;
            }
        }
        true
    }

    /// An `r`-core has no cell of hook length `r`.
    pub fn is_core(&self, r: usize) -> bool {
        self.cells().iter().all(|&c| self.hook_data(c).unwrap().2 as usize != r)
    }

    /// `B_mu = sum_{(a,b) in mu} q^a t^b`.
    pub fn b_poly(&self) -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        for c in self.cells() {
            p += &LaurentPoly2::mono(c.a as i32, c.b as i32, Vars::QT);
        }
        p
    }

    /// `A_mu = 1 - (1-q)(1-t) B_mu`, optionally at `(q^-1, t^-1)`.
    pub fn a_poly(&self, inverse: bool) -> LaurentPoly2 {
        let one = LaurentPoly2::one();
        let f = &(&one - &LaurentPoly2::q()) * &(&one - &LaurentPoly2::t());
        let a = &one - &(&f * &self.b_poly());
        if inverse {
            a.inv()
        } else {
            a
        }
    }

    /// All partitions of `n`, in reverse lexicographic order (largest first).
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard Young tableaux (hook length formula).
    pub fn num_syt(&self) -> num_bigint::BigUint {
        let mut num = num_bigint::BigUint::from(1u32);
        for k in 1..=self.size() {
            num *= k;
        }
        let mut den = num_bigint::BigUint::from(1u32);
        for c in self.cells() {
            den *= self.hook_data(c).unwrap().2;
        }
        num / den
    }

    /// Parse `"3,2,1"`, `"[3,2,1]"` or `"()"`.
    pub fn parse(s: &str) -> Result<Self, PartError> {
        let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        if t.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts: Result<Vec<u32>, _> = t.split(',').map(|x| x.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|e| PartError::Parse(e.to_string()))?;
        Self::try_from_parts(&parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", v.join(","))
    }
}

impl From<Vec<u32>> for Partition {
    fn from(v: Vec<u32>) -> Self {
        Self::new(v)
    }
}

/// Addable and removable cells of residue `i` modulo `r`.
pub fn addable_removable(mu: &Partition, r: usize, i: usize) -> (Vec<Cell>, Vec<Cell>) {
    let a = mu.addable().into_iter().filter(|c| c.residue(r) == i).collect();
    let rm = mu.removable().into_iter().filter(|c| c.residue(r) == i).collect();
    (a, rm)
}
