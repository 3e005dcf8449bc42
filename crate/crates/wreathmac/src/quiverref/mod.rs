//! Bigraded reflection operators on `R(Gamma x T)`, the small tautological
//! characters `B^w_mu`, wreath nabla eigenvalues and the Procesi normalization.

use thiserror::Error;

use crate::exactalg::{CycPoly, LaurentPoly2, RatFn2, Vars};
use crate::multisym::MultiSymFn;
use crate::partcomb::{tau_w, AffineWeylElt, MultiPartition, Partition};
use crate::wreath::{nabla_eigenvalues, solve, HBasis, Variant, WreathError, WreathKey};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("quiver character invariant violated: {0}")]
    Invariant(String),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Wreath(#[from] WreathError),
}

/// `R_i^*(f) = f + (q^-1 t^-1 delta_{i0} - [chi^i](1 - q^-1 chi)(1 - t^-1 chi^-1) f) chi^i`.
pub fn r_star(i: usize, f: &CycPoly) -> CycPoly {
    let r = f.r();
    let i = i as i64;
    let qt = LaurentPoly2::mono(-1, -1, Vars::QT);
    let mut g = if i == 0 { qt.clone() } else { LaurentPoly2::zero() };
    g -= &(&qt * f.coeff(i));
    g += &(&LaurentPoly2::mono(0, -1, Vars::QT) * f.coeff(i + 1));
    g += &(&LaurentPoly2::mono(-1, 0, Vars::QT) * f.coeff(i - 1));
    let mut out = f.clone();
    out.set_coeff(i, g);
    debug_assert_eq!(out.r(), r);
    out
}

/// `B_mu(q chi^-1, t chi)`.
pub fn seed(mu: &Partition, r: usize) -> CycPoly {
    CycPoly::graded(&mu.b_poly(), r)
}

/// `B^w_mu = ch M^w_n |_{I_mu}`; each `chi^i` coefficient is a sum of `n` monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverChar(pub CycPoly);

impl QuiverChar {
    /// The monomials of the `chi^i` coefficient, if it is a sum of `n` monomials with coefficient 1.
    pub fn monomials(&self, i: usize, n: usize) -> Result<Vec<(i32, i32)>, QuiverError> {
        let c = self.0.coeff(i as i64);
        let mut out = Vec::new();
        for (&e, k) in c.terms() {
            let Some(m) = crate::exactalg::to_i64(k).filter(|&m| m > 0) else {
                return Err(QuiverError::Invariant(format!("[chi^{i}] = {c} has a non-positive coefficient")));
            };
            out.extend(std::iter::repeat(e).take(m as usize));
        }
        if out.len() != n {
            return Err(QuiverError::Invariant(format!("[chi^{i}] = {c} is not a sum of {n} monomials")));
        }
        Ok(out)
    }

    pub fn validate(&self, n: usize) -> Result<(), QuiverError> {
        (0..self.0.r()).try_for_each(|i| self.monomials(i, n).map(|_| ()))
    }
}

/// `R^*_{i_1} ... R^*_{i_l} B_mu(q chi^-1, t chi)` along the given word for `w`.
pub fn b_w_word(w: &AffineWeylElt, word: &[usize], mu: &MultiPartition) -> CycPoly {
    let r = w.r();
    let big = tau_w(w, mu);
    word.iter().rev().fold(seed(&big, r), |f, &i| r_star(i, &f))
}

/// Each intermediate value of the chain along `word`, labelled by the operator just applied.
pub fn b_w_chain(w: &AffineWeylElt, word: &[usize], mu: &MultiPartition) -> Vec<(usize, CycPoly)> {
    let r = w.r();
    let mut f = seed(&tau_w(w, mu), r);
    let mut out = Vec::with_capacity(word.len());
    for &i in word.iter().rev() {
        f = r_star(i, &f);
        out.push((i, f.clone()));
    }
    out
}

pub fn b_w(key: &WreathKey) -> Result<QuiverChar, QuiverError> {
    let c = QuiverChar(b_w_word(&key.w, &key.w.reduced_word(), &key.mu));
    c.validate(key.n())?;
    Ok(c)
}

/// `e^{(i),w}_mu = e_n([chi^i] B^w_mu)`, a Laurent monomial.
pub fn nabla_eigen(key: &WreathKey, i: usize) -> Result<LaurentPoly2, QuiverError> {
    let c = b_w(key)?;
    let (a, b) = c.monomials(i, key.n())?.into_iter().fold((0, 0), |(x, y), (a, b)| (x + a, y + b));
    Ok(LaurentPoly2::mono(a, b, Vars::QT))
}

/// `<e_n[X^(i)], H~^w_mu> = e^{(i),w}_mu` for every `i`.
pub fn check_quiver_data(key: &WreathKey) -> Result<bool, QuiverError> {
    let h = solve(key)?;
    let n = key.n();
    for i in 0..key.r {
        let lhs = h.schur.get(&MultiPartition::single(key.r, i, Partition::new(vec![1; n]))).cloned().unwrap_or_else(RatFn2::zero);
        if lhs != RatFn2::from_poly(nabla_eigen(key, i)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One row of the Procesi normalization identity.
#[derive(Clone, Debug)]
pub struct ProcesiRow {
    pub i: usize,
    pub quiver: LaurentPoly2,
    pub pairing: RatFn2,
}

impl ProcesiRow {
    pub fn holds(&self) -> bool {
        RatFn2::from_poly(self.quiver.clone()) == self.pairing
    }
}

/// `[chi^i] B = <s_{n-1}[X^(0)] s_1[X^(i)], H~>` for `i != 0`, and `1 + <s_{(n-1,1)}[X^(0)], H~>` for `i = 0`.
pub fn procesi_normalization_check(key: &WreathKey) -> Result<Vec<ProcesiRow>, QuiverError> {
    let n = key.n();
    if n == 0 {
        return Err(QuiverError::Precondition("the Procesi normalization needs n >= 1".into()));
    }
    let r = key.r;
    let h = solve(key)?;
    let b = b_w(key)?;
    let coeff = |m: MultiPartition| h.schur.get(&m).cloned().unwrap_or_else(RatFn2::zero);
    let mut rows = Vec::with_capacity(r);
    for i in 0..r {
        let pairing = if i == 0 {
            let hook = if n == 1 { RatFn2::zero() } else { coeff(MultiPartition::single(r, 0, Partition::new(vec![n as u32 - 1, 1]))) };
            RatFn2::one() + hook
        } else {
            let mut parts = vec![Partition::empty(); r];
            parts[0] = Partition::new(vec![n as u32 - 1]);
            parts[i] = Partition::new(vec![1]);
            coeff(MultiPartition::new(parts))
        };
        rows.push(ProcesiRow { i, quiver: b.0.coeff(i as i64).clone(), pairing });
    }
    Ok(rows)
}

/// `nabla^{(i)}_w` on degree-`n` functions, diagonal on the `H~^w` basis.
pub struct Nabla {
    basis: HBasis,
    eig: Vec<RatFn2>,
}

impl Nabla {
    pub fn new(w: &AffineWeylElt, n: usize, i: usize) -> Result<Self, QuiverError> {
        let basis = HBasis::new(w, n, Variant::Standard)?;
        let eig = nabla_eigenvalues(&basis, i);
        for (mu, e) in basis.basis.iter().zip(&eig) {
            if !crate::wreath::is_laurent_monomial(e) {
                return Err(QuiverError::Invariant(format!("eigenvalue {e} at {mu} is not a Laurent monomial")));
            }
        }
        Ok(Self { basis, eig })
    }

    pub fn apply(&self, f: &MultiSymFn) -> MultiSymFn {
        self.basis.diagonal(f, &self.eig)
    }

    pub fn apply_inverse(&self, f: &MultiSymFn) -> MultiSymFn {
        let inv: Vec<RatFn2> = self.eig.iter().map(|e| e.inv().expect("eigenvalues are monomials")).collect();
        self.basis.diagonal(f, &inv)
    }

    pub fn eigenvalues(&self) -> &[RatFn2] {
        &self.eig
    }
}

#[cfg(test)]
mod tests;
