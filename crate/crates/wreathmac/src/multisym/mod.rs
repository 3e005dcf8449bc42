//! `Lambda^{tensor I}`: multisymmetric functions in the tensor power-sum basis,
//! permutation and matrix plethysms, and the pairings built from them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::exactalg::{ExactError, MatRF, RatFn2, Vars};
use crate::partcomb::{MultiPartition, Partition, Perm};
use crate::symfn::{char_table, z_rat, SymFn};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MultiSymError {
    #[error("matrix is {0}x{0} but the function has r = {1}")]
    Dimension(usize, usize),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// An element of `Lambda^{tensor I}` in the basis `p_{lambda} = prod_i p_{lambda^(i)}[X^(i)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSymFn {
    r: usize,
    terms: BTreeMap<MultiPartition, RatFn2>,
}

fn union(a: &Partition, b: &Partition) -> Partition {
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::new(v)
}

fn mp_union(a: &MultiPartition, b: &MultiPartition) -> MultiPartition {
    MultiPartition::new(a.components().iter().zip(b.components()).map(|(x, y)| union(x, y)).collect())
}

/// All `lambda` with `|lambda^(i)| = sizes[i]`.
fn with_sizes(sizes: &[usize]) -> Vec<MultiPartition> {
    let mut out = vec![Vec::new()];
    for &n in sizes {
        let mut next = Vec::new();
        for pre in &out {
            for p in Partition::all(n) {
                let mut v: Vec<Partition> = pre.clone();
                v.push(p);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(MultiPartition::new).collect()
}

impl MultiSymFn {
    pub fn zero(r: usize) -> Self {
        Self { r, terms: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        Self::constant(r, RatFn2::one())
    }

    pub fn constant(r: usize, c: RatFn2) -> Self {
        let mut f = Self::zero(r);
        f.add_term(MultiPartition::empty(r), c);
        f
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<MultiPartition, RatFn2> {
        &self.terms
    }

    pub fn add_term(&mut self, key: MultiPartition, c: RatFn2) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(key.r(), self.r);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn p(lambda: &MultiPartition) -> Self {
        let mut f = Self::zero(lambda.r());
        f.add_term(lambda.clone(), RatFn2::one());
        f
    }

    /// `p_k[X^(i)]`.
    pub fn p_ki(r: usize, k: u32, i: usize) -> Self {
        Self::p(&MultiPartition::single(r, i, Partition::new(vec![k])))
    }

    /// `f[X^(i)]` for a single-alphabet `f`.
    pub fn embed(r: usize, i: usize, f: &SymFn) -> Self {
        let mut g = Self::zero(r);
        for (p, c) in f.terms() {
            g.add_term(MultiPartition::single(r, i, p.clone()), c.clone());
        }
        g
    }

    /// `s_lambda = prod_i s_{lambda^(i)}[X^(i)]`.
    pub fn s(lambda: &MultiPartition) -> Self {
        let r = lambda.r();
        lambda.components().iter().enumerate().fold(Self::one(r), |acc, (i, p)| &acc * &Self::embed(r, i, &SymFn::s(p)))
    }

    pub fn from_schur<'a, I: IntoIterator<Item = (&'a MultiPartition, &'a RatFn2)>>(r: usize, it: I) -> Self {
        let mut f = Self::zero(r);
        for (l, c) in it {
            f = &f + &Self::s(l).scale(c);
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.size()).max()
    }

    pub fn scale(&self, c: &RatFn2) -> Self {
        if c.is_zero() {
            return Self::zero(self.r);
        }
        Self { r: self.r, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn map_coeffs<F: Fn(&RatFn2) -> RatFn2>(&self, f: F) -> Self {
        let mut out = Self::zero(self.r);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    /// `inv`: `(q,t) -> (q^-1,t^-1)` on coefficients.
    pub fn inv(&self) -> Self {
        self.map_coeffs(|c| c.inv_vars())
    }

    /// `swap`: exchange `q` and `t` on coefficients.
    pub fn swap(&self) -> Self {
        self.map_coeffs(|c| c.swap())
    }

    pub fn to_su(&self) -> Self {
        self.map_coeffs(|c| c.to_su())
    }

    /// Tensor Schur coefficients.
    pub fn to_schur(&self) -> BTreeMap<MultiPartition, RatFn2> {
        let mut acc: HashMap<MultiPartition, Vec<(i64, &RatFn2)>> = HashMap::new();
        for (rho, c) in &self.terms {
            let tables: Vec<_> = rho.components().iter().map(|p| char_table(p.size())).collect();
            for lam in with_sizes(&rho.sizes()) {
                let mut x = 1i64;
                for (i, t) in tables.iter().enumerate() {
                    x *= t.value(lam.component(i), rho.component(i));
                    if x == 0 {
                        break;
                    }
                }
                if x != 0 {
                    acc.entry(lam).or_default().push((x, c));
                }
            }
        }
        let mut out = BTreeMap::new();
        for (lam, parts) in acc {
            let mut v = RatFn2::zero();
            for (x, c) in parts {
                v += &c.scale_int(x);
            }
            if !v.is_zero() {
                out.insert(lam, v);
            }
        }
        out
    }

    pub fn schur_coeff(&self, lambda: &MultiPartition) -> RatFn2 {
        let tables: Vec<_> = lambda.components().iter().map(|p| char_table(p.size())).collect();
        let sizes = lambda.sizes();
        let mut v = RatFn2::zero();
        for (rho, c) in &self.terms {
            if rho.sizes() != sizes {
                continue;
            }
            let mut x = 1i64;
            for (i, t) in tables.iter().enumerate() {
                x *= t.value(lambda.component(i), rho.component(i));
            }
            if x != 0 {
                v += &c.scale_int(x);
            }
        }
        v
    }

    /// The algebra endomorphism `p_k[X^(i)] -> image(k, i)`.
    pub fn substitute<F: FnMut(u32, usize) -> MultiSymFn>(&self, mut image: F) -> Self {
        let mut cache: HashMap<(u32, usize), MultiSymFn> = HashMap::new();
        let mut out = Self::zero(self.r);
        for (lam, c) in &self.terms {
            let mut term = Self::constant(self.r, c.clone());
            for (i, p) in lam.components().iter().enumerate() {
                for &k in p.parts() {
                    let img = cache.entry((k, i)).or_insert_with(|| image(k, i));
                    term = &term * img;
                }
            }
            out = &out + &term;
        }
        out
    }

    /// The degree-`d` homogeneous component.
    pub fn homogeneous(&self, d: usize) -> Self {
        Self { r: self.r, terms: self.terms.iter().filter(|(k, _)| k.size() == d).map(|(k, v)| (k.clone(), v.clone())).collect() }
    }

    /// `p_k[X^(j)]^perp = k d/dp_k[X^(j)]`.
    pub fn skew_p(&self, k: u32, j: usize) -> Self {
        let mut out = Self::zero(self.r);
        for (lam, c) in &self.terms {
            let parts = lam.component(j).parts();
            let m = parts.iter().filter(|&&x| x == k).count();
            if m == 0 {
                continue;
            }
            let mut rest = parts.to_vec();
            rest.remove(rest.iter().position(|&x| x == k).unwrap());
            let mut comps = lam.components().to_vec();
            comps[j] = Partition::new(rest);
            out.add_term(MultiPartition::new(comps), c.scale_int(k as i64 * m as i64));
        }
        out
    }

    /// `f[X + B]`: `p_k[X^(j)] -> p_k[X^(j)] + shift(k, j)`.
    ///
    /// This is `Omega[B X]^perp f` for the Hall pairing; the degree-`deg f - n`
    /// part of the result is `h_n[B]^perp f`.
    pub fn translate<F: FnMut(u32, usize) -> RatFn2>(&self, mut shift: F) -> Self {
        let r = self.r;
        self.substitute(|k, j| {
            let mut img = Self::p_ki(r, k, j);
            img.add_term(MultiPartition::empty(r), shift(k, j));
            img
        })
    }

    /// `f[sum_j c_j X^(j)]`, with `p_k[c X] = c(x^k, y^k) p_k[X]`.
    pub fn alphabet(r: usize, f: &SymFn, c: &[RatFn2]) -> Self {
        debug_assert_eq!(c.len(), r);
        Self::embed(r, 0, f).substitute(|k, _| {
            let mut img = Self::zero(r);
            for (j, cj) in c.iter().enumerate() {
                if !cj.is_zero() {
                    img.add_term(MultiPartition::single(r, j, Partition::new(vec![k])), cj.power_substitute(k as i32));
                }
            }
            img
        })
    }

    /// `g[M X]`: `p_k[X^(i)] -> sum_j M_ij(q^k,t^k) p_k[X^(j)]`.
    pub fn subst_matrix(&self, m: &MatRF) -> Result<Self, MultiSymError> {
        if m.dim() != self.r {
            return Err(MultiSymError::Dimension(m.dim(), self.r));
        }
        let r = self.r;
        Ok(self.substitute(|k, i| {
            let mut img = Self::zero(r);
            for j in 0..r {
                let c = m.get(i, j);
                if !c.is_zero() {
                    img.add_term(MultiPartition::single(r, j, Partition::new(vec![k])), c.power_substitute(k as i32));
                }
            }
            img
        }))
    }

    /// `P_M(g) = g[M^t X]`, so `p_k[X^(i)] -> sum_j M_ji(q^k,t^k) p_k[X^(j)]`.
    pub fn matrix_plethysm(&self, m: &MatRF) -> Result<Self, MultiSymError> {
        self.subst_matrix(&m.transpose())
    }

    /// `P_u(p_k[X^(i)]) = p_k[X^(u(i))]`.
    pub fn perm_plethysm(&self, u: &Perm) -> Self {
        let mut out = Self::zero(self.r);
        for (k, v) in &self.terms {
            out.add_term(k.permute(u), v.clone());
        }
        out
    }

    /// `omega` applied in every tensor factor.
    pub fn omega(&self) -> Self {
        let mut out = Self::zero(self.r);
        for (k, v) in &self.terms {
            let d: usize = k.components().iter().map(|p| p.size() - p.len()).sum();
            out.add_term(k.clone(), if d % 2 == 1 { -v } else { v.clone() });
        }
        out
    }

    /// JSON rendering `{"basis":"schur","terms":{"[[1],[],[2]]":"..."}}`.
    pub fn render_schur(&self, vars: Vars) -> String {
        let mut terms = serde_json::Map::new();
        for (k, c) in self.to_schur() {
            terms.insert(k.render(), serde_json::Value::String(c.render(vars)));
        }
        let mut doc = serde_json::Map::new();
        doc.insert("basis".into(), "schur".into());
        doc.insert("terms".into(), serde_json::Value::Object(terms));
        serde_json::Value::Object(doc).to_string()
    }
}

/// Matrix of `P_M` on the degree-`n` tensor Schur basis: entry `[l][m]` is the
/// coefficient of `s_l` in `P_M(s_m)`, with rows and columns in `MultiPartition::all` order.
pub fn plethysm_schur_matrix(m: &MatRF, n: usize) -> Result<Arc<Vec<Vec<RatFn2>>>, MultiSymError> {
    static CACHE: OnceLock<Mutex<HashMap<(String, usize), Arc<Vec<Vec<RatFn2>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (m.to_string(), n);
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let r = m.dim();
    let basis = MultiPartition::all(r, n);
    let index: HashMap<&MultiPartition, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let cols: Result<Vec<_>, MultiSymError> = basis
        .par_iter()
        .map(|mu| MultiSymFn::s(mu).matrix_plethysm(m).map(|f| f.to_schur()))
        .collect();
    let mut out = vec![vec![RatFn2::zero(); basis.len()]; basis.len()];
    for (j, col) in cols?.into_iter().enumerate() {
        for (lam, c) in col {
            out[index[&lam]][j] = c;
        }
    }
    let out = Arc::new(out);
    cache.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

/// Tensor Hall pairing.
pub fn pair_hall(f: &MultiSymFn, g: &MultiSymFn) -> RatFn2 {
    let mut acc = RatFn2::zero();
    for (k, a) in &f.terms {
        if let Some(b) = g.terms.get(k) {
            let z = k.components().iter().fold(BigRational::one(), |z, p| z * z_rat(p));
            acc += &(a * b).scale_rat(&z);
        }
    }
    acc
}

/// `<f, g>_{q,t} = <f, g[A^-1 X]>`.
pub fn pair_qt(f: &MultiSymFn, g: &MultiSymFn) -> Result<RatFn2, MultiSymError> {
    let ainv = a_matrix(f.r()).inverse()?;
    Ok(pair_hall(f, &g.subst_matrix(&ainv)?))
}

/// `<f, g>^P = <f, g[B^-1 X]>`.
pub fn pair_p(f: &MultiSymFn, g: &MultiSymFn) -> Result<RatFn2, MultiSymError> {
    let binv = b_matrix(f.r()).inverse()?;
    Ok(pair_hall(f, &g.subst_matrix(&binv)?))
}

fn lin(r: usize, c: RatFn2, k: i64) -> MatRF {
    &MatRF::identity(r) - &MatRF::chi_pow(r, k).scale(&c)
}

/// `id - c chi^k`.
pub fn id_minus(r: usize, c: &RatFn2, k: i64) -> MatRF {
    lin(r, c.clone(), k)
}

pub fn neg_matrix(r: usize) -> MatRF {
    MatRF::permutation(Perm::negation(r).images())
}

/// `A = (id - q chi^-1)^-1 (id - t chi)^-1 neg`.
pub fn a_matrix(r: usize) -> MatRF {
    let x = lin(r, RatFn2::q(), -1).inverse().expect("invertible");
    let y = lin(r, RatFn2::t(), 1).inverse().expect("invertible");
    &(&x * &y) * &neg_matrix(r)
}

/// `B = (id - q chi^-1)^-1 (id - t^-1 chi^-1) neg`.
pub fn b_matrix(r: usize) -> MatRF {
    let x = lin(r, RatFn2::q(), -1).inverse().expect("invertible");
    let y = lin(r, RatFn2::mono(0, -1, Vars::QT), -1);
    &(&x * &y) * &neg_matrix(r)
}

impl<'a> Add<&'a MultiSymFn> for &'a MultiSymFn {
    type Output = MultiSymFn;
    fn add(self, o: &MultiSymFn) -> MultiSymFn {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiSymFn> for &'a MultiSymFn {
    type Output = MultiSymFn;
    fn sub(self, o: &MultiSymFn) -> MultiSymFn {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl Neg for &MultiSymFn {
    type Output = MultiSymFn;
    fn neg(self) -> MultiSymFn {
        self.map_coeffs(|c| -c)
    }
}

impl<'a> Mul<&'a MultiSymFn> for &'a MultiSymFn {
    type Output = MultiSymFn;
    fn mul(self, o: &MultiSymFn) -> MultiSymFn {
        assert_eq!(self.r, o.r, "multiplying functions with different r");
        let mut out = MultiSymFn::zero(self.r);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(mp_union(a, b), x * y);
            }
        }
        out
    }
}

impl fmt::Display for MultiSymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_schur(Vars::QT))
    }
}

#[cfg(test)]
mod tests;
