use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::solver::{solve, solve_block, Variant, WreathKey};
use super::WreathError;
use crate::exactalg::{LaurentPoly2, MatRF, RatFn2, Vars};
use crate::multisym::{id_minus, pair_p, pair_qt, MultiSymFn};
use crate::partcomb::{tau_w, AffineWeylElt, MultiPartition, Partition, Perm};

/// Schur coefficients `K~^w_{lambda, mu}` of one wreath Macdonald polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaTable {
    pub key: WreathKey,
    pub entries: BTreeMap<MultiPartition, LaurentPoly2>,
}

impl KostkaTable {
    pub fn get(&self, lambda: &MultiPartition) -> LaurentPoly2 {
        self.entries.get(lambda).cloned().unwrap_or_else(LaurentPoly2::zero)
    }

    /// Every coefficient lies in `Z_{>=0}[q^+-1, t^+-1]`.
    pub fn is_positive(&self) -> bool {
        self.entries.values().all(|c| c.is_nonneg_integral())
    }

    /// Each `K~_{lambda,mu}` is homogeneous of `Gamma`-degree `sum_i |lambda^(i)| i`,
    /// where `q^a t^b` has degree `b - a`.
    pub fn is_gamma_homogeneous(&self) -> bool {
        let r = self.key.r as i64;
        self.entries.iter().all(|(lam, c)| {
            let want: i64 = lam.sizes().iter().enumerate().map(|(i, &s)| (i * s) as i64).sum::<i64>().rem_euclid(r);
            c.terms().keys().all(|&(a, b)| (b as i64 - a as i64).rem_euclid(r) == want)
        })
    }

    /// `K~_{lambda,mu}(1,1)` equals the number of standard multitableaux of shape `lambda`.
    pub fn matches_multitableaux(&self) -> bool {
        MultiPartition::all(self.key.r, self.key.n()).iter().all(|lam| {
            let v = self.get(lam).eval_one();
            v == num_rational::BigRational::from_integer(multitableaux_count(lam).into())
        })
    }
}

pub fn kostka(key: &WreathKey) -> Result<KostkaTable, WreathError> {
    let s = solve(key)?;
    let mut entries = BTreeMap::new();
    for (lam, c) in &s.schur {
        let p = c.as_poly().cloned().ok_or_else(|| WreathError::Degenerate(format!("{key}: coefficient of {lam} is not a Laurent polynomial")))?;
        entries.insert(lam.clone(), p);
    }
    Ok(KostkaTable { key: key.clone(), entries })
}

/// `binom(n; n_0, ..., n_{r-1}) prod_i f^{lambda^(i)}`.
pub fn multitableaux_count(lam: &MultiPartition) -> BigUint {
    let mut num = factorial(lam.size());
    for p in lam.components() {
        num = num / factorial(p.size()) * p.num_syt();
    }
    num
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Standard multitableaux counted by removing the largest entry from a corner of any component.
pub fn brute_multitableaux(lam: &MultiPartition) -> BigUint {
    fn rec(comps: &mut Vec<Vec<u32>>, memo: &mut BTreeMap<Vec<Vec<u32>>, BigUint>) -> BigUint {
        if comps.iter().all(|c| c.is_empty()) {
            return BigUint::one();
        }
        if let Some(v) = memo.get(comps) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..comps.len() {
            for j in 0..comps[i].len() {
                let corner = j + 1 == comps[i].len() || comps[i][j + 1] < comps[i][j];
                if !corner {
                    continue;
                }
                comps[i][j] -= 1;
                let popped = comps[i][j] == 0;
                if popped {
                    comps[i].pop();
                }
                total += rec(comps, memo);
                if popped {
                    comps[i].push(0);
                }
                comps[i][j] += 1;
            }
        }
        memo.insert(comps.clone(), total.clone());
        total
    }
    let mut comps: Vec<Vec<u32>> = lam.components().iter().map(|p| p.parts().to_vec()).collect();
    rec(&mut comps, &mut BTreeMap::new())
}

/// `c` with `lhs = c rhs`, if one exists.
pub fn proportionality(lhs: &MultiSymFn, rhs: &MultiSymFn) -> Option<RatFn2> {
    let rs = rhs.to_schur();
    let ls = lhs.to_schur();
    let (k, v) = rs.iter().next()?;
    let c = &ls.get(k).cloned().unwrap_or_else(RatFn2::zero) / v;
    if c.is_zero() {
        return None;
    }
    let ok = rs.len() == ls.len() && rs.iter().all(|(k, v)| ls.get(k) == Some(&(v * &c)));
    ok.then_some(c)
}

pub fn is_laurent_monomial(c: &RatFn2) -> bool {
    matches!(c.as_monomial(), Some((k, _, _)) if k.is_one())
}

/// Outcome of one `lhs == rhs` or `lhs ≡ rhs` identity.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub key: WreathKey,
    /// The proportionality constant, if `lhs` is a multiple of `rhs`.
    pub scalar: Option<RatFn2>,
    pub holds: bool,
    pub lhs: MultiSymFn,
    pub rhs: MultiSymFn,
}

impl IdentityCheck {
    fn new(name: &'static str, key: &WreathKey, lhs: MultiSymFn, rhs: MultiSymFn, exact: bool) -> Self {
        let scalar = proportionality(&lhs, &rhs);
        let holds = match &scalar {
            Some(c) if exact => c.is_one(),
            Some(c) => is_laurent_monomial(c),
            None => false,
        };
        Self { name, key: key.clone(), scalar, holds, lhs, rhs }
    }

    pub fn describe(&self) -> String {
        let sc = self.scalar.as_ref().map_or("none".to_string(), |c| c.render(Vars::QT));
        if self.holds {
            format!("{} at {}: scalar {sc}", self.name, self.key)
        } else {
            format!("{} fails at {}: scalar {sc}\n  lhs = {}\n  rhs = {}", self.name, self.key, self.lhs, self.rhs)
        }
    }
}

fn h(w: &AffineWeylElt, mu: &MultiPartition, variant: Variant) -> Result<MultiSymFn, WreathError> {
    Ok(solve(&WreathKey::new(w.clone(), mu.clone(), variant))?.func.clone())
}

/// `down = inv neg omega`.
pub fn down(f: &MultiSymFn) -> MultiSymFn {
    f.perm_plethysm(&Perm::negation(f.r())).omega().inv()
}

/// Swap/neg, inversion, rotation, forward and opposite-order identities for a standard key.
pub fn check_symmetries(key: &WreathKey) -> Result<Vec<IdentityCheck>, WreathError> {
    let r = key.r;
    let (w, mu) = (&key.w, &key.mu);
    let base = h(w, mu, Variant::Standard)?;
    let w0 = Perm::reversal(r);
    let w0w = AffineWeylElt::w0(r).compose(w);
    let chi = Perm::rotation(r, 1);
    let chiw = AffineWeylElt::finite(chi.clone()).compose(w);
    let neg = Perm::negation(r);
    Ok(vec![
        IdentityCheck::new("swap neg", key, base.perm_plethysm(&neg).swap(), h(&w.star(), &mu.star(), Variant::Standard)?, true),
        IdentityCheck::new("inversion", key, down(&base), h(&w0w, &mu.permute(&w0), Variant::Standard)?, false),
        IdentityCheck::new("rotation", key, base.perm_plethysm(&chi), h(&chiw, &mu.permute(&chi), Variant::Standard)?, false),
        IdentityCheck::new("forward", key, h(w, mu, Variant::Forward)?, h(&w0w, &mu.permute(&w0), Variant::Standard)?.perm_plethysm(&w0), false),
        IdentityCheck::new("opposite order", key, h(w, mu, Variant::Opposite)?, base.swap().inv(), true),
    ])
}

/// The inversion constant `<s_n[X^(0)], down H~> = inv e^{(0),w}_mu`, checked against the nabla eigenvalue.
pub fn inversion_scalar_is_nabla(key: &WreathKey) -> Result<bool, WreathError> {
    let base = solve(key)?;
    let n = key.n();
    let e0 = base.schur.get(&MultiPartition::single(key.r, 0, Partition::new(vec![1; n]))).cloned().unwrap_or_else(RatFn2::zero);
    let c = down(&base.func).schur_coeff(&MultiPartition::single(key.r, 0, Partition::new(vec![n as u32])));
    Ok(is_laurent_monomial(&e0) && c == e0.inv_vars())
}

/// Change of basis to `{H~^w_mu : |mu| = n}`.
#[derive(Clone, Debug)]
pub struct HBasis {
    pub basis: Vec<MultiPartition>,
    pub polys: Vec<MultiSymFn>,
    inverse: MatRF,
}

impl HBasis {
    pub fn new(w: &AffineWeylElt, n: usize, variant: Variant) -> Result<Self, WreathError> {
        let sols = solve_block(w, n, variant)?;
        let basis: Vec<MultiPartition> = sols.iter().map(|(m, _)| m.clone()).collect();
        let m = MatRF::from_fn(basis.len(), |i, j| sols[j].1.schur.get(&basis[i]).cloned().unwrap_or_else(RatFn2::zero));
        let inverse = m.inverse()?;
        Ok(Self { basis, polys: sols.into_iter().map(|(_, s)| s.func.clone()).collect(), inverse })
    }

    /// Coefficients of a degree-`n` function in the `H~` basis.
    pub fn expand(&self, f: &MultiSymFn) -> Vec<RatFn2> {
        let s = f.to_schur();
        let v: Vec<RatFn2> = self.basis.iter().map(|b| s.get(b).cloned().unwrap_or_else(RatFn2::zero)).collect();
        (0..self.basis.len())
            .map(|i| (0..v.len()).fold(RatFn2::zero(), |acc, j| if v[j].is_zero() { acc } else { acc + self.inverse.get(i, j) * &v[j] }))
            .collect()
    }

    /// The diagonal operator with eigenvalue `eig(mu)` on `H~_mu`.
    pub fn diagonal(&self, f: &MultiSymFn, eig: &[RatFn2]) -> MultiSymFn {
        let c = self.expand(f);
        c.iter().zip(eig).zip(&self.polys).fold(MultiSymFn::zero(f.r()), |acc, ((c, e), p)| &acc + &p.scale(&(c * e)))
    }
}

/// `e^{(i),w}_mu = <e_n[X^(i)], H~^w_mu>` for every `mu` of size `n`, in `HBasis` order.
pub fn nabla_eigenvalues(hb: &HBasis, i: usize) -> Vec<RatFn2> {
    hb.polys
        .iter()
        .map(|p| {
            let r = p.r();
            let n = p.degree().unwrap_or(0);
            p.schur_coeff(&MultiPartition::single(r, i, Partition::new(vec![1; n])))
        })
        .collect()
}

/// `down nabla^{(0)}_{w0 w} down = (nabla^{(0)}_w)^{-1}`, tested on the whole `H~^w` basis of degree `n`.
pub fn check_down_nabla_down(w: &AffineWeylElt, n: usize) -> Result<bool, WreathError> {
    let r = w.r();
    let hw = HBasis::new(w, n, Variant::Standard)?;
    let hw0 = HBasis::new(&AffineWeylElt::w0(r).compose(w), n, Variant::Standard)?;
    let ew = nabla_eigenvalues(&hw, 0);
    let ew0 = nabla_eigenvalues(&hw0, 0);
    for (p, e) in hw.polys.iter().zip(&ew) {
        let lhs = down(&hw0.diagonal(&down(p), &ew0));
        if lhs != p.scale(&(&RatFn2::one() / e)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn hook_cells(mu: &Partition, r: usize) -> Vec<(i32, i32)> {
    mu.cells()
        .into_iter()
        .filter_map(|c| {
            let (a, l, hk) = mu.hook_data(c).unwrap();
            (hk as usize % r == 0).then_some((a as i32, l as i32))
        })
        .collect()
}

fn one_minus(a: i32, b: i32) -> RatFn2 {
    RatFn2::one() - RatFn2::mono(a, b, Vars::QT)
}

/// `b_mu = prod_{h(s) = 0 mod r} (1 - q^{1+a} t^{-l})(1 - t^{1+l} q^{-a})`.
pub fn norm_formula(mu: &Partition, r: usize) -> RatFn2 {
    hook_cells(mu, r).into_iter().fold(RatFn2::one(), |acc, (a, l)| acc * one_minus(1 + a, -l) * one_minus(-a, 1 + l))
}

/// `b^w_mu = <H~^w_mu, inv neg H~^w_mu>_{q,t}`.
pub fn norm_b(key: &WreathKey) -> Result<RatFn2, WreathError> {
    let f = solve(key)?.func.clone();
    let g = f.perm_plethysm(&Perm::negation(key.r)).inv();
    Ok(pair_qt(&f, &g)?)
}

/// Pairing, hook formula, and the `(qt)^n` inversion identity.
#[derive(Clone, Debug)]
pub struct NormCheck {
    pub key: WreathKey,
    pub pairing: RatFn2,
    pub formula: RatFn2,
    pub holds: bool,
}

pub fn check_norm(key: &WreathKey) -> Result<NormCheck, WreathError> {
    let pairing = norm_b(key)?;
    let formula = norm_formula(&tau_w(&key.w, &key.mu), key.r);
    let n = key.n() as i32;
    let inv_ok = pairing.inv_vars() * RatFn2::mono(n, n, Vars::QT) == pairing;
    Ok(NormCheck { key: key.clone(), holds: pairing == formula && inv_ok, pairing, formula })
}

/// `<H~_mu, inv neg H~_nu>_{q,t} = 0` for all `mu != nu` of size `n`.
pub fn check_orthogonality(w: &AffineWeylElt, n: usize) -> Result<bool, WreathError> {
    let r = w.r();
    let sols = solve_block(w, n, Variant::Standard)?;
    let neg = Perm::negation(r);
    for (i, (_, a)) in sols.iter().enumerate() {
        for (j, (_, b)) in sols.iter().enumerate() {
            if i != j && !pair_qt(&a.func, &b.func.perm_plethysm(&neg).inv())?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `J = P_{id - t^-1 chi^-1} H~`, its leading coefficient `c`, and `P = J / c`.
#[derive(Clone, Debug)]
pub struct JP {
    pub j: MultiSymFn,
    pub c: RatFn2,
    pub p: MultiSymFn,
}

pub fn j_and_p(key: &WreathKey) -> Result<JP, WreathError> {
    let hf = solve(key)?.func.clone();
    let j = hf.matrix_plethysm(&id_minus(key.r, &RatFn2::mono(0, -1, Vars::QT), -1))?;
    let c = j.schur_coeff(&key.mu);
    if c.is_zero() {
        return Err(WreathError::Degenerate(format!("{key}: J has zero leading coefficient")));
    }
    let p = j.scale(&(&RatFn2::one() / &c));
    Ok(JP { j, c, p })
}

/// `P^w_mu` is monic on `s_mu` and supported on `lambda <=_w mu`.
pub fn p_is_triangular(key: &WreathKey, p: &MultiSymFn) -> bool {
    let tm = tau_w(&key.w, &key.mu);
    p.to_schur().iter().all(|(lam, c)| if lam == &key.mu { c.is_one() } else { tm.dominates(&tau_w(&key.w, lam)) })
}

/// `<P_mu, inv neg P_nu>^P = 0` for all `mu != nu` of size `n`.
pub fn check_p_orthogonality(w: &AffineWeylElt, n: usize) -> Result<bool, WreathError> {
    let r = w.r();
    let neg = Perm::negation(r);
    let ps: Vec<MultiSymFn> = MultiPartition::all(r, n)
        .into_iter()
        .map(|m| j_and_p(&WreathKey::standard(w.clone(), m)).map(|x| x.p))
        .collect::<Result<_, _>>()?;
    for (i, a) in ps.iter().enumerate() {
        for (j, b) in ps.iter().enumerate() {
            if i != j && !pair_p(a, &b.perm_plethysm(&neg).inv())?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `f(q, t) -> f(q, q^-1)`.
pub fn at_t_inverse_q(f: &MultiSymFn) -> Result<MultiSymFn, WreathError> {
    let r = f.r();
    let mut out = MultiSymFn::zero(r);
    for (lam, c) in f.to_schur() {
        let v = c.map_exponents(|a, b| (a - b, 0), Some(Vars::QT))?;
        out = &out + &MultiSymFn::s(&lam).scale(&v);
    }
    Ok(out)
}

/// Evidence for one conjecture at one key.
#[derive(Clone, Debug)]
pub struct ConjectureCheck {
    pub name: &'static str,
    pub key: WreathKey,
    pub lhs: RatFn2,
    pub rhs: RatFn2,
    pub pass: bool,
}

impl ConjectureCheck {
    pub fn describe(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        format!("{status} {} at {}: lhs = {}, rhs = {}", self.name, self.key, self.lhs.render(Vars::QT), self.rhs.render(Vars::QT))
    }
}

/// The pairing conjecture for `P` and the `J`-to-`P` coefficient conjecture.
pub fn check_conjectures(key: &WreathKey) -> Result<Vec<ConjectureCheck>, WreathError> {
    let r = key.r;
    let mu = tau_w(&key.w, &key.mu);
    let cells = hook_cells(&mu, r);
    let jp = j_and_p(key)?;
    let neg = Perm::negation(r);
    let lhs = pair_p(&jp.p, &jp.p.perm_plethysm(&neg).inv())?;
    let rhs = cells.iter().fold(RatFn2::one(), |acc, &(a, l)| acc * (&one_minus(1 + a, -l) / &one_minus(a, -1 - l)));
    let first = ConjectureCheck { name: "P pairing", key: key.clone(), pass: lhs == rhs, lhs, rhs };

    let diag = kostka(key)?.get(&key.mu);
    let max_t = diag.terms().keys().map(|&(_, b)| b).max();
    let f = LaurentPoly2::from_terms(
        diag.terms().iter().filter(|((_, b), _)| Some(*b) == max_t).map(|(&e, c)| (e, c.clone())),
        Some(Vars::QT),
    );
    let fr = RatFn2::from_poly(f);
    let rhs = cells.iter().fold(fr.clone(), |acc, &(a, l)| acc * one_minus(a, -1 - l));
    let pass = is_laurent_monomial(&fr) && jp.c == rhs;
    let second = ConjectureCheck { name: "J to P coefficient", key: key.clone(), lhs: jp.c, rhs, pass };
    Ok(vec![first, second])
}
