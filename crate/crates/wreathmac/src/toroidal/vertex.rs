use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::exactalg::{RatFn2, Vars};
use crate::multisym::MultiSymFn;
use crate::symfn::SymFn;

use super::lattice::{cocycle, self_sign, RootElt};

/// `s^a u^b`.
pub fn su(a: i32, b: i32) -> RatFn2 {
    RatFn2::mono(a, b, Vars::SU)
}

/// A vector of `V = Lambda^{tensor I} (x) F{Q}`, as a finite map `alpha -> f` for `f (x) e^alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexVec {
    r: usize,
    terms: BTreeMap<RootElt, MultiSymFn>,
}

impl VertexVec {
    pub fn zero(r: usize) -> Self {
        Self { r, terms: BTreeMap::new() }
    }

    /// `f (x) e^alpha`.
    pub fn single(alpha: RootElt, f: MultiSymFn) -> Self {
        let mut v = Self::zero(alpha.r());
        v.add_term(alpha, f);
        v
    }

    /// `1 (x) e^0`.
    pub fn vacuum(r: usize) -> Self {
        Self::single(RootElt::zero(r), MultiSymFn::one(r))
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<RootElt, MultiSymFn> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: RootElt, f: MultiSymFn) {
        if f.is_zero() {
            return;
        }
        let slot = self.terms.entry(alpha.clone()).or_insert_with(|| MultiSymFn::zero(f.r()));
        *slot = &*slot + &f;
        if slot.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn scale(&self, c: &RatFn2) -> Self {
        let mut out = Self::zero(self.r);
        for (a, f) in &self.terms {
            out.add_term(a.clone(), f.scale(c));
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (a, f) in &o.terms {
            out.add_term(a.clone(), f.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-RatFn2::one()))
    }

    /// `c v` for a scalar `c` with `v` a multiple of `self`, if one exists.
    pub fn ratio_to(&self, v: &Self) -> Option<RatFn2> {
        let (a, f) = self.terms.iter().next()?;
        let (k, c) = f.terms().iter().next()?;
        let lam = v.terms.get(a)?.terms().get(k)?.clone() / c.clone();
        (self.scale(&lam) == *v).then_some(lam)
    }

    /// JSON list of `[root coordinates, Schur expansion]` pairs.
    pub fn render(&self) -> String {
        let items: Vec<String> =
            self.terms.iter().map(|(a, f)| format!("[{},{}]", serde_json::json!(a.coords()), f.render_schur(Vars::SU))).collect();
        format!("[{}]", items.join(","))
    }
}

impl fmt::Display for VertexVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(a, g)| format!("({g}) e^{a}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A mode generator of the quantum toroidal algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    E(usize, i64),
    F(usize, i64),
    H(usize, i64),
    PsiPlus(usize, i64),
    PsiMinus(usize, i64),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::E(i, k) => write!(f, "e[{i},{k}]"),
            Mode::F(i, k) => write!(f, "f[{i},{k}]"),
            Mode::H(i, k) => write!(f, "h[{i},{k}]"),
            Mode::PsiPlus(i, k) => write!(f, "psi+[{i},{k}]"),
            Mode::PsiMinus(i, k) => write!(f, "psi-[{i},{k}]"),
        }
    }
}

/// `(1 + s^-4) X^(i) - s^-2 u^2 X^(i+1) - s^-2 u^-2 X^(i-1)`, optionally at `s -> s^-1`.
fn y_alphabet(r: usize, i: usize, inverse_s: bool) -> Vec<RatFn2> {
    let e = if inverse_s { -1 } else { 1 };
    let mut c = vec![RatFn2::zero(); r];
    c[i] += &(RatFn2::one() + su(-4 * e, 0));
    c[(i + 1) % r] -= &su(-2 * e, 2);
    c[(i + r - 1) % r] -= &su(-2 * e, -2);
    c
}

fn times(c: &[RatFn2], x: &RatFn2) -> Vec<RatFn2> {
    c.iter().map(|a| a.clone() * x.clone()).collect()
}

fn at(r: usize, i: usize, x: RatFn2) -> Vec<RatFn2> {
    let mut c = vec![RatFn2::zero(); r];
    c[i] = x;
    c
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Current {
    E,
    F,
    PsiMinus,
}

/// `h_m[A X^(i)]` for the creation half of each current.
fn creation(r: usize, i: usize, cur: Current, m: usize) -> Arc<MultiSymFn> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize, Current, usize), Arc<MultiSymFn>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(r, i, cur, m)) {
        return v.clone();
    }
    let a = match cur {
        Current::E => su(-1, 0),
        Current::F => -su(1, 0),
        Current::PsiMinus => su(-2, 0) - su(2, 0),
    };
    let v = Arc::new(MultiSymFn::alphabet(r, &SymFn::h(m as u32), &at(r, i, a)));
    cache.lock().unwrap().insert((r, i, cur, m), v.clone());
    v
}

/// `sum_{m - n = -k} h_m[A X^(i)] h_n[B]^perp f`, the coefficient of `z^-k`
/// in `Omega[z A X^(i)] Omega[z^-1 B]^perp f`.
fn vertex_mode(i: usize, cur: Current, b: &[RatFn2], k: i64, f: &MultiSymFn) -> MultiSymFn {
    let r = f.r();
    let mut out = MultiSymFn::zero(r);
    let Some(top) = f.degree() else { return out };
    for d in 0..=top {
        let fd = f.homogeneous(d);
        if fd.is_zero() {
            continue;
        }
        let shifted = fd.translate(|kk, j| b[j].power_substitute(kk as i32));
        for n in 0..=d {
            let m = n as i64 - k;
            if m < 0 {
                continue;
            }
            let g = shifted.homogeneous(d - n);
            if !g.is_zero() {
                out = &out + &(&*creation(r, i, cur, m as usize) * &g);
            }
        }
    }
    out
}

/// `E^(i)_k = [z^-k] Omega[s^-1 z X^(i)] Omega[-s z^-1 Y^(i)(X,s,u)]^perp`.
pub fn e_mode(i: usize, k: i64, f: &MultiSymFn) -> MultiSymFn {
    let b = times(&y_alphabet(f.r(), i, false), &-su(1, 0));
    vertex_mode(i, Current::E, &b, k, f)
}

/// `F^(i)_k = [z^-k] Omega[-s z X^(i)] Omega[s^-1 z^-1 Y^(i)(X,s^-1,u)]^perp`.
pub fn f_mode(i: usize, k: i64, f: &MultiSymFn) -> MultiSymFn {
    let b = times(&y_alphabet(f.r(), i, true), &su(-1, 0));
    vertex_mode(i, Current::F, &b, k, f)
}

fn each<F: Fn(&RootElt, &MultiSymFn) -> Option<(RootElt, MultiSymFn)>>(v: &VertexVec, op: F) -> VertexVec {
    let mut out = VertexVec::zero(v.r());
    for (a, f) in v.terms() {
        if let Some((b, g)) = op(a, f) {
            out.add_term(b, g);
        }
    }
    out
}

fn sign(x: i64) -> RatFn2 {
    RatFn2::from_int(x)
}

/// `e_{i,k}|_{V_alpha} = u^{<alphabar_i^vee, M_i alpha>} E^(i)_{k+1+<alphabar_i^vee, alpha>} (x) L_{alphabar_i}`.
pub fn act_e(i: usize, k: i64, v: &VertexVec) -> VertexVec {
    let ai = RootElt::simple(v.r(), i);
    each(v, |a, f| {
        let g = e_mode(i, k + 1 + a.pair(i), f);
        let c = su(0, a.pair_m(i) as i32) * sign(cocycle(&ai, a));
        Some((ai.add(a), g.scale(&c)))
    })
}

/// `f_{i,k}|_{V_alpha} = u^{-<alphabar_i^vee, M_i alpha>} F^(i)_{k+1-<alphabar_i^vee, alpha>} (x) s(alphabar_i) L_{-alphabar_i}`.
pub fn act_f(i: usize, k: i64, v: &VertexVec) -> VertexVec {
    let ai = RootElt::simple(v.r(), i);
    let mi = ai.neg();
    each(v, |a, f| {
        let g = f_mode(i, k + 1 - a.pair(i), f);
        let c = su(0, -a.pair_m(i) as i32) * sign(self_sign(&ai) * cocycle(&mi, a));
        Some((mi.add(a), g.scale(&c)))
    })
}

/// `h_{i,l}`: multiplication by `p_k[X^(i)]` for `l = -k < 0`, skewing along `Y^(i)` for `l > 0`.
pub fn act_h(i: usize, l: i64, v: &VertexVec) -> VertexVec {
    assert!(l != 0, "h_{{i,0}} is not a generator");
    let r = v.r();
    let k = l.unsigned_abs() as u32;
    let kk = k as i32;
    let denom = (su(2, 0) - su(-2, 0)).scale_int(k as i64);
    each(v, |a, f| {
        let g = if l < 0 {
            let c = (su(2 * kk, 0) - su(-2 * kk, 0)) / denom.clone();
            (&MultiSymFn::p_ki(r, k, i) * f).scale(&c)
        } else {
            let y = y_alphabet(r, i, false);
            let c = (su(4 * kk, 0) - RatFn2::one()) / denom.clone();
            let mut g = MultiSymFn::zero(r);
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    g = &g + &f.skew_p(k, j).scale(&yj.power_substitute(kk));
                }
            }
            g.scale(&c)
        };
        Some((a.clone(), g))
    })
}

/// `psi^+_{i,l} = [z^-l] Omega[z^-1 (p^2 - 1) Y^(i)]^perp (x) p^{d_alpha_i}`, `l >= 0`.
pub fn act_psi_plus(i: usize, l: i64, v: &VertexVec) -> VertexVec {
    if l < 0 {
        return VertexVec::zero(v.r());
    }
    let b = times(&y_alphabet(v.r(), i, false), &(su(4, 0) - RatFn2::one()));
    each(v, |a, f| {
        let mut g = MultiSymFn::zero(v.r());
        for d in 0..=f.degree().unwrap_or(0) {
            if d as i64 >= l {
                g = &g + &f.homogeneous(d).translate(|kk, j| b[j].power_substitute(kk as i32)).homogeneous(d - l as usize);
            }
        }
        Some((a.clone(), g.scale(&su(2 * a.pair(i) as i32, 0))))
    })
}

/// `psi^-_{i,l} = [z^-l] Omega[-z (p - p^-1) X^(i)] (x) p^{-d_alpha_i}`, `l <= 0`.
pub fn act_psi_minus(i: usize, l: i64, v: &VertexVec) -> VertexVec {
    if l > 0 {
        return VertexVec::zero(v.r());
    }
    let r = v.r();
    each(v, |a, f| {
        let g = &*creation(r, i, Current::PsiMinus, (-l) as usize) * f;
        Some((a.clone(), g.scale(&su(-2 * a.pair(i) as i32, 0))))
    })
}

pub fn act(m: Mode, v: &VertexVec) -> VertexVec {
    match m {
        Mode::E(i, k) => act_e(i, k, v),
        Mode::F(i, k) => act_f(i, k, v),
        Mode::H(i, l) => act_h(i, l, v),
        Mode::PsiPlus(i, l) => act_psi_plus(i, l, v),
        Mode::PsiMinus(i, l) => act_psi_minus(i, l, v),
    }
}
