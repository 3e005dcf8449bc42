use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::chars::{char_table, z_rat};
use crate::exactalg::{RatFn2, Vars};
use crate::partcomb::Partition;

/// A symmetric function stored in the power-sum basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFn {
    terms: BTreeMap<Partition, RatFn2>,
}

pub(crate) fn union(a: &Partition, b: &Partition) -> Partition {
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::new(v)
}

impl SymFn {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(RatFn2::one())
    }

    pub fn constant(c: RatFn2) -> Self {
        let mut f = Self::zero();
        f.add_term(Partition::empty(), c);
        f
    }

    pub fn from_p_terms<I: IntoIterator<Item = (Partition, RatFn2)>>(it: I) -> Self {
        let mut f = Self::zero();
        for (p, c) in it {
            f.add_term(p, c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: RatFn2) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lambda) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    /// `p_lambda`.
    pub fn p(lambda: &Partition) -> Self {
        Self::from_p_terms([(lambda.clone(), RatFn2::one())])
    }

    pub fn p_k(k: u32) -> Self {
        Self::p(&Partition::new(vec![k]))
    }

    /// `s_lambda = sum_rho chi^lambda(rho) p_rho / z_rho`.
    pub fn s(lambda: &Partition) -> Self {
        let n = lambda.size();
        let t = char_table(n);
        let l = t.index(lambda);
        let mut f = Self::zero();
        for (j, rho) in t.parts.iter().enumerate() {
            let c = t.value_idx(l, j);
            if c != 0 {
                f.add_term(rho.clone(), RatFn2::from_rational(BigRational::from_integer(c.into()) / z_rat(rho)));
            }
        }
        f
    }

    pub fn h(n: u32) -> Self {
        Self::s(&Partition::new(vec![n]))
    }

    pub fn e(n: u32) -> Self {
        Self::s(&Partition::new(vec![1; n as usize]))
    }

    /// `h_lambda = prod h_{lambda_i}`.
    pub fn h_part(lambda: &Partition) -> Self {
        lambda.parts().iter().fold(Self::one(), |acc, &k| &acc * &Self::h(k))
    }

    /// `m_lambda`, by inverting `p_rho = sum_lambda <p_rho, h_lambda> m_lambda`.
    pub fn m(lambda: &Partition) -> Self {
        let n = lambda.size();
        let inv = m_to_p(n);
        let parts = Partition::all(n);
        let li = parts.iter().position(|p| p == lambda).unwrap();
        let mut f = Self::zero();
        for (j, rho) in parts.iter().enumerate() {
            if !inv[li][j].is_zero() {
                f.add_term(rho.clone(), RatFn2::from_rational(inv[li][j].clone()));
            }
        }
        f
    }

    pub fn from_schur<'a, I: IntoIterator<Item = (&'a Partition, &'a RatFn2)>>(it: I) -> Self {
        let mut f = Self::zero();
        for (l, c) in it {
            f = &f + &Self::s(l).scale(c);
        }
        f
    }

    pub fn from_monomial<'a, I: IntoIterator<Item = (&'a Partition, &'a RatFn2)>>(it: I) -> Self {
        let mut f = Self::zero();
        for (l, c) in it {
            f = &f + &Self::m(l).scale(c);
        }
        f
    }

    pub fn terms(&self) -> &BTreeMap<Partition, RatFn2> {
        &self.terms
    }

    pub fn coeff_p(&self, lambda: &Partition) -> RatFn2 {
        self.terms.get(lambda).cloned().unwrap_or_else(RatFn2::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree present, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|p| p.size()).max()
    }

    pub fn homogeneous_part(&self, n: usize) -> Self {
        Self { terms: self.terms.iter().filter(|(p, _)| p.size() == n).map(|(p, c)| (p.clone(), c.clone())).collect() }
    }

    pub fn scale(&self, c: &RatFn2) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect() }
    }

    pub fn map_coeffs<F: Fn(&RatFn2) -> RatFn2>(&self, f: F) -> Self {
        Self::from_p_terms(self.terms.iter().map(|(p, v)| (p.clone(), f(v))))
    }

    /// Schur coefficients, `[s_lambda] f = sum_rho c_rho chi^lambda(rho)`.
    pub fn to_schur(&self) -> BTreeMap<Partition, RatFn2> {
        let mut by_deg: BTreeMap<usize, Vec<(&Partition, &RatFn2)>> = BTreeMap::new();
        for (p, c) in &self.terms {
            by_deg.entry(p.size()).or_default().push((p, c));
        }
        let mut out = BTreeMap::new();
        for (n, terms) in by_deg {
            let t = char_table(n);
            for (l, lam) in t.parts.iter().enumerate() {
                let mut acc = RatFn2::zero();
                for &(rho, c) in &terms {
                    let x = t.value_idx(l, t.index(rho));
                    if x != 0 {
                        acc += &c.scale_int(x);
                    }
                }
                if !acc.is_zero() {
                    out.insert(lam.clone(), acc);
                }
            }
        }
        out
    }

    pub fn schur_coeff(&self, lambda: &Partition) -> RatFn2 {
        let t = char_table(lambda.size());
        let l = t.index(lambda);
        let mut acc = RatFn2::zero();
        for (rho, c) in &self.terms {
            if rho.size() == lambda.size() {
                let x = t.value_idx(l, t.index(rho));
                if x != 0 {
                    acc += &c.scale_int(x);
                }
            }
        }
        acc
    }

    /// Monomial coefficients, `[m_lambda] f = <f, h_lambda>`.
    pub fn to_monomial(&self) -> BTreeMap<Partition, RatFn2> {
        let mut out = BTreeMap::new();
        let mut degs: Vec<usize> = self.terms.keys().map(|p| p.size()).collect();
        degs.sort_unstable();
        degs.dedup();
        for n in degs {
            for lam in Partition::all(n) {
                let c = hall(self, &Self::h_part(&lam));
                if !c.is_zero() {
                    out.insert(lam, c);
                }
            }
        }
        out
    }

    /// The algebra endomorphism determined by `p_k -> image(k)`.
    pub fn substitute<F: FnMut(u32) -> SymFn>(&self, mut image: F) -> Self {
        let mut cache: HashMap<u32, SymFn> = HashMap::new();
        let mut out = Self::zero();
        for (lam, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for &k in lam.parts() {
                let img = cache.entry(k).or_insert_with(|| image(k));
                term = &term * img;
            }
            out = &out + &term;
        }
        out
    }

    /// `f[A X + B]`: `p_k -> A(q^k,t^k) p_k + B(q^k,t^k)`.
    pub fn pleth_sub(&self, a: &RatFn2, b: &RatFn2) -> Self {
        self.substitute(|k| {
            let mut img = Self::p_k(k).scale(&a.power_substitute(k as i32));
            img.add_term(Partition::empty(), b.power_substitute(k as i32));
            img
        })
    }

    /// `g^perp f`, the Hall adjoint of multiplication by `g`.
    pub fn perp(g: &SymFn, f: &SymFn) -> Self {
        let mut out = Self::zero();
        for (rho, a) in &g.terms {
            for (mu, b) in &f.terms {
                if let Some((nu, k)) = p_perp(rho, mu) {
                    out.add_term(nu, (a * b).scale_rat(&k));
                }
            }
        }
        out
    }

    /// `omega(p_k) = (-1)^{k-1} p_k`.
    pub fn omega(&self) -> Self {
        Self::from_p_terms(self.terms.iter().map(|(p, c)| {
            let odd = (p.size() - p.len()) % 2 == 1;
            (p.clone(), if odd { -c } else { c.clone() })
        }))
    }

    /// JSON object `{"s[2,1]": "...", ...}` of Schur coefficients.
    pub fn render_schur(&self, vars: Vars) -> String {
        let items: Vec<String> = self
            .to_schur()
            .iter()
            .map(|(p, c)| format!("{}:{}", serde_json::Value::String(format!("s{p}")), serde_json::Value::String(c.render(vars))))
            .collect();
        format!("{{{}}}", items.join(","))
    }
}

/// `p_rho^perp p_mu`, as `(nu, scalar)` with `p_rho^perp p_mu = scalar * p_nu`.
pub(crate) fn p_perp(rho: &Partition, mu: &Partition) -> Option<(Partition, BigRational)> {
    let mut rest: Vec<u32> = mu.parts().to_vec();
    let mut scalar = BigRational::one();
    // p_k^perp = k d/dp_k; apply one factor at a time
    for &k in rho.parts() {
        let m = rest.iter().filter(|&&x| x == k).count();
        if m == 0 {
            return None;
        }
        scalar *= BigRational::from_integer((k as u64 * m as u64).into());
        let pos = rest.iter().position(|&x| x == k).unwrap();
        rest.remove(pos);
    }
    Some((Partition::new(rest), scalar))
}

/// Hall pairing, `<p_lambda, p_mu> = delta z_lambda`.
pub fn hall(f: &SymFn, g: &SymFn) -> RatFn2 {
    let mut acc = RatFn2::zero();
    for (p, a) in &f.terms {
        if let Some(b) = g.terms.get(p) {
            acc += &(a * b).scale_rat(&z_rat(p));
        }
    }
    acc
}

/// `(q,t)`-Hall form `<p_lambda, p_mu>_{q,t} = delta z_lambda prod (1-q^{l_i})/(1-t^{l_i})`.
pub fn hall_qt(f: &SymFn, g: &SymFn) -> RatFn2 {
    let mut acc = RatFn2::zero();
    for (p, a) in &f.terms {
        if let Some(b) = g.terms.get(p) {
            let mut w = (a * b).scale_rat(&z_rat(p));
            for &k in p.parts() {
                let k = k as i32;
                let num = RatFn2::one() - RatFn2::mono(k, 0, Vars::QT);
                let den = RatFn2::one() - RatFn2::mono(0, k, Vars::QT);
                w = &(&w * &num) / &den;
            }
            acc += &w;
        }
    }
    acc
}

/// Rows: `m_lambda` in the `p` basis, indexed as in `Partition::all(n)`.
fn m_to_p(n: usize) -> Arc<Vec<Vec<BigRational>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Vec<BigRational>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    let parts = Partition::all(n);
    let k = parts.len();
    // r[rho][lambda] = <p_rho, h_lambda>
    let mut a: Vec<Vec<BigRational>> = parts
        .iter()
        .map(|rho| {
            parts
                .iter()
                .map(|lam| {
                    let h = SymFn::h_part(lam);
                    let c = h.coeff_p(rho);
                    c.as_poly().map(|p| p.constant_value().unwrap()).unwrap() * z_rat(rho)
                })
                .collect()
        })
        .collect();
    // invert the transpose: m_lambda = sum_rho (R^-1)_{lambda rho} p_rho
    let mut inv: Vec<Vec<BigRational>> =
        (0..k).map(|i| (0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect()).collect();
    for col in 0..k {
        let piv = (col..k).find(|&i| !a[i][col].is_zero()).expect("p-to-m matrix is invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col].clone();
        for j in 0..k {
            a[col][j] = &a[col][j] / &d;
            inv[col][j] = &inv[col][j] / &d;
        }
        for i in 0..k {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..k {
                    let x = &a[col][j] * &f;
                    a[i][j] -= x;
                    let y = &inv[col][j] * &f;
                    inv[i][j] -= y;
                }
            }
        }
    }
    // inv = R^-1 with R[rho][lambda]; p = R m so m = R^-1 p, i.e. m_lambda row is inv[lambda]
    let out = Arc::new(inv);
    cache.lock().unwrap().insert(n, out.clone());
    out
}

impl<'a> Add<&'a SymFn> for &'a SymFn {
    type Output = SymFn;
    fn add(self, o: &SymFn) -> SymFn {
        let mut out = self.clone();
        for (p, c) in &o.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SymFn> for &'a SymFn {
    type Output = SymFn;
    fn sub(self, o: &SymFn) -> SymFn {
        let mut out = self.clone();
        for (p, c) in &o.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }
}

impl Neg for &SymFn {
    type Output = SymFn;
    fn neg(self) -> SymFn {
        self.map_coeffs(|c| -c)
    }
}

impl<'a> Mul<&'a SymFn> for &'a SymFn {
    type Output = SymFn;
    fn mul(self, o: &SymFn) -> SymFn {
        let mut out = SymFn::zero();
        for (p, a) in &self.terms {
            for (q, b) in &o.terms {
                out.add_term(union(p, q), a * b);
            }
        }
        out
    }
}

impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let items: Vec<String> = self.terms.iter().map(|(p, c)| format!("({})*p{}", c, p)).collect();
        f.write_str(&items.join(" + "))
    }
}
