use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::One;

use super::chars::z_rat;
use super::sym::{hall_qt, SymFn};
use super::SymError;
use crate::exactalg::{RatFn2, Vars};
use crate::partcomb::Partition;

/// `h_l[c X] = sum_{rho |- l} prod_i c(q^{rho_i}, t^{rho_i}) p_rho / z_rho`.
pub fn h_of_alphabet(c: &RatFn2, l: u32) -> SymFn {
    let mut f = SymFn::zero();
    for rho in Partition::all(l as usize) {
        let mut w = RatFn2::from_rational(BigRational::one() / z_rat(&rho));
        for &k in rho.parts() {
            w = &w * &c.power_substitute(k as i32);
        }
        f.add_term(rho, w);
    }
    f
}

/// Mode `V_k = sum_{l - m = k} h_l[A X] h_m[B X]^perp` of `Omega[z A X] Omega[z^-1 B X]^perp`, applied to `f`.
pub fn vertex_mode(a: &RatFn2, b: &RatFn2, k: i64, f: &SymFn) -> SymFn {
    let Some(n) = f.degree() else { return SymFn::zero() };
    let mut out = SymFn::zero();
    for m in 0..=n as i64 {
        let l = k + m;
        if l < 0 {
            continue;
        }
        let inner = SymFn::perp(&h_of_alphabet(b, m as u32), f);
        if inner.is_zero() {
            continue;
        }
        out = &out + &(&h_of_alphabet(a, l as u32) * &inner);
    }
    out
}

fn qt_binom(a: i32, b: i32) -> RatFn2 {
    RatFn2::one() - RatFn2::mono(a, b, Vars::QT)
}

/// `D_0` from `D(z) = Omega[z(t-1)X] Omega[z^-1 (q-1)/t X]^perp`.
pub fn d0(f: &SymFn) -> SymFn {
    let a = RatFn2::t() - RatFn2::one();
    let b = &(RatFn2::q() - RatFn2::one()) / &RatFn2::t();
    vertex_mode(&a, &b, 0, f)
}

/// `D~_0` from `Omega[-zX] Omega[z^-1 (1-q)(1-t) X]^perp`.
pub fn d0_tilde(f: &SymFn) -> SymFn {
    let b = &qt_binom(1, 0) * &qt_binom(0, 1);
    vertex_mode(&-RatFn2::one(), &b, 0, f)
}

/// `D~*_0` from `Omega[zX] Omega[-z^-1 (1-q^-1)(1-t^-1) X]^perp`.
pub fn d0_tilde_star(f: &SymFn) -> SymFn {
    let b = -(&qt_binom(-1, 0) * &qt_binom(0, -1));
    vertex_mode(&RatFn2::one(), &b, 0, f)
}

/// Macdonald `P_mu` for all `mu |- n`, by Gram-Schmidt on the `(q,t)`-Hall form
/// in increasing lexicographic order (a linear extension of dominance).
pub fn macdonald_p_all(n: usize) -> Arc<BTreeMap<Partition, SymFn>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<BTreeMap<Partition, SymFn>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    let mut done: Vec<(Partition, SymFn, RatFn2)> = Vec::new();
    for mu in Partition::all(n).into_iter().rev() {
        let m = SymFn::m(&mu);
        let mut p = m.clone();
        for (_, pl, norm) in &done {
            let c = &hall_qt(&m, pl) / norm;
            p = &p - &pl.scale(&c);
        }
        let norm = hall_qt(&p, &p);
        done.push((mu, p, norm));
    }
    let out = Arc::new(done.into_iter().map(|(m, p, _)| (m, p)).collect());
    cache.lock().unwrap().insert(n, Arc::clone(&out));
    out
}

pub fn macdonald_p(mu: &Partition) -> SymFn {
    macdonald_p_all(mu.size())[mu].clone()
}

/// `J_mu = prod_s (1 - q^{a(s)} t^{l(s)+1}) P_mu`.
pub fn macdonald_j(mu: &Partition) -> SymFn {
    let mut c = RatFn2::one();
    for s in mu.cells() {
        let (a, l, _) = mu.hook_data(s).unwrap();
        c = &c * &qt_binom(a as i32, l as i32 + 1);
    }
    macdonald_p(mu).scale(&c)
}

/// `H~_mu = t^{n(mu)} (J_mu[X/(1-t)] at t -> t^-1)`.
pub fn tilde_h(mu: &Partition) -> SymFn {
    static CACHE: OnceLock<Mutex<HashMap<Partition, SymFn>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(mu) {
        return v.clone();
    }
    let a = &RatFn2::one() / &qt_binom(0, 1);
    let j = macdonald_j(mu).pleth_sub(&a, &RatFn2::zero());
    let tn = RatFn2::mono(0, mu.n_stat() as i32, Vars::QT);
    let h = j.map_coeffs(|c| &c.map_exponents(|x, y| (x, -y), Some(Vars::QT)).unwrap() * &tn);
    cache.lock().unwrap().insert(mu.clone(), h.clone());
    h
}

/// A polynomial in `x_1..x_N` with `RatFn2` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyN {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, RatFn2>,
}

impl PolyN {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, RatFn2> {
        &self.terms
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: RatFn2) {
        if c.is_zero() {
            return;
        }
        let remove = {
            let v = self.terms.entry(e.clone()).or_insert_with(RatFn2::zero);
            *v += &c;
            v.is_zero()
        };
        if remove {
            self.terms.remove(&e);
        }
    }

    pub fn monomial(nvars: usize, e: Vec<u32>, c: RatFn2) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(e, c);
        p
    }

    /// `m_lambda(x_1..x_N)`; zero if `lambda` has more than `N` parts.
    pub fn m(nvars: usize, lambda: &Partition) -> Self {
        let mut p = Self::zero(nvars);
        if lambda.len() > nvars {
            return p;
        }
        let mut e: Vec<u32> = (0..nvars).map(|i| lambda.part(i)).collect();
        e.sort_unstable();
        loop {
            p.add_term(e.clone(), RatFn2::one());
            if !next_permutation(&mut e) {
                break;
            }
        }
        p
    }

    pub fn from_sym(nvars: usize, f: &SymFn) -> Self {
        let mut p = Self::zero(nvars);
        for (lam, c) in f.to_monomial() {
            for (e, v) in Self::m(nvars, &lam).terms {
                p.add_term(e, &v * &c);
            }
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.iter().zip(b).map(|(i, j)| i + j).collect(), x * y);
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut f = e.clone();
                f.swap(i, i + 1);
                self.terms.get(&f) == Some(c)
            })
        })
    }

    /// Coefficients on `m_lambda`, read from the dominant monomials.
    pub fn to_monomial(&self) -> BTreeMap<Partition, RatFn2> {
        self.terms
            .iter()
            .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
            .map(|(e, c)| (Partition::new(e.clone()), c.clone()))
            .collect()
    }

    fn linear(nvars: usize, i: usize, ci: RatFn2, j: usize, cj: RatFn2) -> Self {
        let mut p = Self::zero(nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        p.add_term(e, ci);
        let mut e = vec![0; nvars];
        e[j] = 1;
        p.add_term(e, cj);
        p
    }

    /// Exact division by `x_i - x_j`.
    fn div_linear(&self, i: usize, j: usize) -> Option<Self> {
        let mut rest = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rest.terms.iter().max_by_key(|(e, _)| e[i]).map(|(e, c)| (e.clone(), c.clone())) {
            if e[i] == 0 {
                return None;
            }
            let mut qe = e.clone();
            qe[i] -= 1;
            let qt = Self::monomial(self.nvars, qe, c);
            let sub = qt.mul(&Self::linear(self.nvars, i, RatFn2::one(), j, -RatFn2::one()));
            for (k, v) in sub.terms {
                rest.add_term(k, -v);
            }
            for (k, v) in qt.terms {
                quot.add_term(k, v);
            }
        }
        Some(quot)
    }

    /// `T_{q, x_k}`.
    fn q_shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * &RatFn2::mono(e[k] as i32, 0, Vars::QT));
        }
        out
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The Macdonald operator `M_N = sum_k prod_{l != k} (t x_k - x_l)/(x_k - x_l) T_{q,x_k}`.
///
/// Computed as `Delta^-1 sum_k (-1)^k Delta_{without k} prod_{l != k}(t x_k - x_l) T_{q,x_k} f`
/// followed by exact division by each factor of the Vandermonde `Delta`.
pub fn macdonald_mn(f: &PolyN) -> Result<PolyN, SymError> {
    if !f.is_symmetric() {
        return Err(SymError::NotSymmetric);
    }
    let n = f.nvars();
    let mut num = PolyN::zero(n);
    for k in 0..n {
        let mut term = f.q_shift(k);
        for l in 0..n {
            if l != k {
                term = term.mul(&PolyN::linear(n, k, RatFn2::t(), l, -RatFn2::one()));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if i != k && j != k {
                    term = term.mul(&PolyN::linear(n, i, RatFn2::one(), j, -RatFn2::one()));
                }
            }
        }
        let sign = if k % 2 == 0 { RatFn2::one() } else { -RatFn2::one() };
        for (e, c) in term.terms {
            num.add_term(e, &c * &sign);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            num = num.div_linear(i, j).ok_or(SymError::Inexact)?;
        }
    }
    Ok(num)
}
