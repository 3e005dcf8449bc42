//! Saito's vertex representation of the quantum toroidal algebra of `gl_r` (`r >= 3`),
//! the horizontal Heisenberg eigenoperators and the Fock-space weights.

mod lattice;
mod relations;
mod vertex;

use rayon::prelude::*;
use thiserror::Error;

use crate::exactalg::{CycPoly, LaurentPoly2, RatFn2, Vars};
use crate::partcomb::{kappa_bar, quot_core, tau_w, AffineWeylElt, Partition};
use crate::wreath::{solve_h, WreathError, WreathKey};

pub use lattice::{cartan, cocycle, group_mult, self_sign, skew, RootElt};
pub use relations::{check_relations, degree_envelope, RelationCheck};
pub use vertex::{act, act_e, act_f, act_h, act_psi_minus, act_psi_plus, e_mode, f_mode, su, Mode, VertexVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToroidalError {
    #[error("the vertex representation needs r >= 3, got r = {0}")]
    Rank(usize),
    #[error("{0}")]
    Inconsistent(String),
    #[error(transparent)]
    Wreath(#[from] WreathError),
}

fn need_rank(r: usize) -> Result<(), ToroidalError> {
    if r < 3 {
        return Err(ToroidalError::Rank(r));
    }
    Ok(())
}

/// A linear combination of words in the mode generators; a word is applied right to left.
#[derive(Clone, Debug, Default)]
pub struct OpExpr(pub Vec<(RatFn2, Vec<Mode>)>);

impl OpExpr {
    pub fn gen(m: Mode) -> Self {
        Self(vec![(RatFn2::one(), vec![m])])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() * o.0.len());
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                out.push((a.clone() * b.clone(), [x.clone(), y.clone()].concat()));
            }
        }
        Self(out)
    }

    pub fn scale(&self, c: &RatFn2) -> Self {
        Self(self.0.iter().map(|(a, w)| (a.clone() * c.clone(), w.clone())).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self([self.0.clone(), o.0.clone()].concat())
    }

    /// `[x, y]_c = x y - c y x`.
    pub fn qcomm(x: &Self, y: &Self, c: &RatFn2) -> Self {
        x.mul(y).add(&y.mul(x).scale(&-c.clone()))
    }

    pub fn apply(&self, v: &VertexVec) -> VertexVec {
        let mut out = VertexVec::zero(v.r());
        for (c, word) in &self.0 {
            let w = word.iter().rev().fold(v.clone(), |acc, &m| act(m, &acc));
            out = out.add(&w.scale(c));
        }
        out
    }
}

/// `x . [y_1 ... y_m; c_1 ... c_m] = [...[[x, y_1]_{c_1}, y_2]_{c_2} ..., y_m]_{c_m}`.
fn left_nested(x: Mode, ys: &[(Mode, RatFn2)]) -> OpExpr {
    ys.iter().fold(OpExpr::gen(x), |acc, (y, c)| OpExpr::qcomm(&acc, &OpExpr::gen(*y), c))
}

/// `[x_m ... x_1; c_m ... c_1] . y = [x_m, ... [x_2, [x_1, y]_{c_1}]_{c_2} ...]_{c_m}`, `xs` listed from `x_m`.
fn right_nested(xs: &[(Mode, RatFn2)], y: Mode) -> OpExpr {
    xs.iter().rev().fold(OpExpr::gen(y), |acc, (x, c)| OpExpr::qcomm(&OpExpr::gen(*x), &acc, c))
}

/// The nested commutator behind `D^(i)_1` (`star = false`, `f` modes) or `D^(i)*_1` (`e` modes), unscaled.
pub fn miki_word(r: usize, i: usize, star: bool) -> Result<OpExpr, ToroidalError> {
    need_rank(r)?;
    assert!(i < r);
    let p = su(2, 0);
    let pinv = su(-2, 0);
    let p2 = su(4, 0);
    let pinv2 = su(-4, 0);
    let expr = match (star, i) {
        (false, 0) => {
            let mut ys: Vec<(Mode, RatFn2)> = (2..r).map(|j| (Mode::F(j, 0), p.clone())).collect();
            ys.push((Mode::F(0, -1), p2));
            left_nested(Mode::F(1, 1), &ys)
        }
        (false, _) => {
            let mut ys: Vec<(Mode, RatFn2)> = (i + 1..r).rev().chain(1..i).map(|j| (Mode::F(j, 0), p.clone())).collect();
            ys.push((Mode::F(i, 0), p2));
            left_nested(Mode::F(0, 0), &ys)
        }
        (true, 0) => {
            let mut xs = vec![(Mode::E(0, 1), pinv2)];
            xs.extend((2..r).rev().map(|j| (Mode::E(j, 0), pinv.clone())));
            right_nested(&xs, Mode::E(1, -1))
        }
        (true, _) => {
            let mut xs = vec![(Mode::E(i, 0), pinv2)];
            xs.extend((1..i).rev().chain(i + 1..r).map(|j| (Mode::E(j, 0), pinv.clone())));
            right_nested(&xs, Mode::E(0, 0))
        }
    };
    Ok(expr)
}

/// `c_i(u)` (`star = false`) or `c_i^*(u)`.
pub fn eigen_scalar(r: usize, i: usize, star: bool) -> RatFn2 {
    let (r, i) = (r as i32, i as i32);
    let e = if i == 0 { 2 - r } else { r - 2 * i };
    let e = if star { -e } else { e };
    let sign = if i != 0 && (r - i - 1) % 2 == 1 { -1 } else { 1 };
    su(0, e).scale_int(sign)
}

/// `D~^(i)_1 v` or `D~^(i)*_1 v`.
pub fn eigen_op(i: usize, star: bool, v: &VertexVec) -> Result<VertexVec, ToroidalError> {
    let r = v.r();
    Ok(miki_word(r, i, star)?.apply(v).scale(&eigen_scalar(r, i, star)))
}

/// `H~_mu = H~^{t_{-beta^vee}}_{quot(mu)} (x) e^beta` with `beta = kappa_bar(mu)`, over `Q(s,u)`.
pub fn embed_h(mu: &Partition, r: usize) -> Result<VertexVec, ToroidalError> {
    need_rank(r)?;
    let (quot, _, _) = quot_core(mu, r);
    let beta = kappa_bar(mu, r);
    let w = AffineWeylElt { u: crate::partcomb::Perm::identity(r), beta: beta.clone() };
    if tau_w(&w, &quot) != *mu {
        return Err(ToroidalError::Inconsistent(format!("tau_w(quot({mu})) differs from {mu}")));
    }
    let h = solve_h(&WreathKey::standard(w, quot))?;
    Ok(VertexVec::single(RootElt::from_root_vec(&beta), h.to_su()))
}

/// `A^(i)_mu(q,t) = [chi^i] A_mu(q chi^-1, t chi)`, optionally at `(q^-1, t^-1)`.
pub fn a_component(mu: &Partition, r: usize, i: usize, inverse: bool) -> LaurentPoly2 {
    let c = CycPoly::graded(&mu.a_poly(false), r).coeff(i as i64).clone();
    if inverse {
        c.inv()
    } else {
        c
    }
}

/// The measured eigenvalue of `D~^(i)_1` (`star = false`) or `D~^(i)*_1` on `H~_mu`.
#[derive(Clone, Debug)]
pub struct EigenCheck {
    pub mu: Partition,
    pub i: usize,
    pub star: bool,
    /// `None` if `H~_mu` is not an eigenvector.
    pub eigenvalue: Option<RatFn2>,
    /// `A^(i)_mu(q,t)` in `Q(s,u)`.
    pub a_qt: RatFn2,
    /// `A^(i)_mu(q^-1,t^-1)` in `Q(s,u)`.
    pub a_inv: RatFn2,
}

impl EigenCheck {
    /// `D~^(i)_1 H~_mu = A^(i)_mu(q,t) H~_mu` and `D~^(i)*_1 H~_mu = A^(i)_mu(q^-1,t^-1) H~_mu`,
    /// matching the `r = 1` operators `D~_0`, `D~^*_0`.
    pub fn holds(&self) -> bool {
        let want = if self.star { &self.a_inv } else { &self.a_qt };
        self.eigenvalue.as_ref() == Some(want)
    }

    /// The same identity with `(q,t)` and `(q^-1,t^-1)` exchanged between `D~` and `D~^*`.
    pub fn holds_exchanged(&self) -> bool {
        let want = if self.star { &self.a_qt } else { &self.a_inv };
        self.eigenvalue.as_ref() == Some(want)
    }

    pub fn describe(&self) -> String {
        let op = if self.star { "D~*" } else { "D~" };
        match &self.eigenvalue {
            Some(e) => format!("{op}^({}) H~_{} = ({}) H~_{}", self.i, self.mu, e.render(Vars::SU), self.mu),
            None => format!("H~_{} is not an eigenvector of {op}^({})", self.mu, self.i),
        }
    }
}

fn eigen_check_vec(mu: &Partition, h: &VertexVec, i: usize, star: bool) -> Result<EigenCheck, ToroidalError> {
    let r = h.r();
    let got = eigen_op(i, star, h)?;
    let eigenvalue = if got.is_zero() { Some(RatFn2::zero()) } else { h.ratio_to(&got) };
    Ok(EigenCheck {
        mu: mu.clone(),
        i,
        star,
        eigenvalue,
        a_qt: RatFn2::from_poly(a_component(mu, r, i, false)).to_su(),
        a_inv: RatFn2::from_poly(a_component(mu, r, i, true)).to_su(),
    })
}

/// Apply `D~^(i)_1` and `D~^(i)*_1` to `H~_mu` for every `i`.
pub fn check_eigen(mu: &Partition, r: usize) -> Result<Vec<EigenCheck>, ToroidalError> {
    let h = embed_h(mu, r)?;
    let jobs: Vec<(usize, bool)> = (0..r).flat_map(|i| [(i, true), (i, false)]).collect();
    jobs.into_par_iter().map(|(i, star)| eigen_check_vec(mu, &h, i, star)).collect()
}

/// Partitions with `r`-quotient of size `<= max_quot` and `r`-core in `cores`.
pub fn partitions_by_quotient(r: usize, max_quot: usize, cores: &[Partition]) -> Vec<Partition> {
    let mut out = Vec::new();
    for core in cores {
        let beta = kappa_bar(core, r);
        for n in 0..=max_quot {
            for q in crate::partcomb::MultiPartition::all(r, n) {
                out.push(crate::partcomb::tau(&q, &beta));
            }
        }
    }
    out
}

/// `xi^dag = (-1)^r s^2 u^-r`.
pub fn xi_dag(r: usize) -> RatFn2 {
    su(2, -(r as i32)).scale_int(if r % 2 == 0 { 1 } else { -1 })
}

/// `psi^+-_i(z)` on `|mu>` in the highest weight Fock module: `prod_k phi(c_k z)^{e_k}`
/// with `phi(z) = (p - p^-1 z)/(1 - z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockWeight {
    pub factors: Vec<(RatFn2, i32)>,
}

/// `prod_{A_i(mu)} phi(q^-a t^-b q t z / xi^dag)^-1 prod_{R_i(mu)} phi(q^-a t^-b z / xi^dag)`.
pub fn fock_weight(mu: &Partition, r: usize, i: usize) -> FockWeight {
    let (add, rem) = crate::partcomb::addable_removable(mu, r, i);
    let xi = xi_dag(r);
    let cell = |a: u32, b: u32, shift: i32| RatFn2::mono(shift - a as i32, shift - b as i32, Vars::QT).to_su() / xi.clone();
    let mut factors: Vec<(RatFn2, i32)> = add.iter().map(|c| (cell(c.a, c.b, 1), -1)).collect();
    factors.extend(rem.iter().map(|c| (cell(c.a, c.b, 0), 1)));
    FockWeight { factors }
}

impl FockWeight {
    /// `<mu| h_{i,l} |mu>`, read off from the expansion of the weight at `z = infinity` (`l > 0`) or `z = 0` (`l < 0`).
    pub fn h_eigenvalue(&self, l: i64) -> RatFn2 {
        assert!(l != 0);
        let p = su(2, 0);
        let k = l.unsigned_abs() as i32;
        let denom = (p.clone() - su(-2, 0)).scale_int(k as i64);
        let mut acc = RatFn2::zero();
        for (c, e) in &self.factors {
            let term = if l > 0 {
                c.pow(-k) * (RatFn2::one() - su(4 * k, 0))
            } else {
                c.pow(k) * (su(-4 * k, 0) - RatFn2::one())
            };
            acc += &term.scale_int(*e as i64);
        }
        acc / denom
    }
}

/// `A^(i)_mu(q^{+-l}, t^{+-l}) (p^l - p^-l)/(p - p^-1) (p^-1 xi^dag)^{+-l} / l`.
pub fn h_eigenvalue_formula(mu: &Partition, r: usize, i: usize, l: i64) -> RatFn2 {
    let k = l.unsigned_abs() as i32;
    let a = RatFn2::from_poly(a_component(mu, r, i, false).power_substitute(if l > 0 { k } else { -k })).to_su();
    let ratio = (su(2 * k, 0) - su(-2 * k, 0)) / (su(2, 0) - su(-2, 0));
    let x = (su(-2, 0) * xi_dag(r)).pow(if l > 0 { k } else { -k });
    (a * ratio * x).scale_rat(&num_rational::BigRational::new(1.into(), (k as i64).into()))
}

#[cfg(test)]
mod tests;
