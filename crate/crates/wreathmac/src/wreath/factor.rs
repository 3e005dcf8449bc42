use super::solver::{solve_h, WreathKey};
use super::WreathError;
use crate::exactalg::{MatRF, RatFn2, Vars};
use crate::multisym::MultiSymFn;
use crate::partcomb::{AffineWeylElt, MultiPartition, RootVec};
use crate::symfn::tilde_h;

/// `M^-_{ij} = t^j` if `i >= j`, else `q^{r-j}`.
pub fn m_minus(r: usize) -> MatRF {
    MatRF::from_fn(r, |i, j| if i >= j { RatFn2::mono(0, j as i32, Vars::QT) } else { RatFn2::mono((r - j) as i32, 0, Vars::QT) })
}

/// `(q_i, t_i) = (q^{r-i} t^{-i}, q^{i+1-r} t^{i+1})` as an exponent map.
fn specialize(c: &RatFn2, r: usize, i: usize) -> Result<RatFn2, WreathError> {
    let (r, i) = (r as i32, i as i32);
    Ok(c.map_exponents(|a, b| (a * (r - i) + b * (i + 1 - r), -a * i + b * (i + 1)), Some(Vars::QT))?)
}

/// `f[sum_j row_j X^(j)]`: `p_k -> sum_j row_j(q^k, t^k) p_k[X^(j)]`.
fn vector_plethysm(f: &MultiSymFn, row: &[RatFn2]) -> MultiSymFn {
    let r = row.len();
    f.substitute(|k, _| {
        row.iter().enumerate().fold(MultiSymFn::zero(r), |acc, (j, a)| &acc + &MultiSymFn::p_ki(r, k, j).scale(&a.power_substitute(k as i32)))
    })
}

/// The generic wreath Macdonald polynomial `H~^{id,id}_mu` as a product of
/// classical `H~_{mu^(i)}(eps_i^t M^- X; q_i, t_i)`.
pub fn factor_generic(mu: &MultiPartition) -> Result<MultiSymFn, WreathError> {
    let r = mu.r();
    let m = m_minus(r);
    let mut out = MultiSymFn::one(r);
    for (i, nu) in mu.components().iter().enumerate() {
        if nu.size() == 0 {
            continue;
        }
        let h = tilde_h(nu);
        let h = MultiSymFn::embed(r, 0, &h.map_coeffs(|c| specialize(c, r, i).expect("monomial substitution"))).clone();
        let row: Vec<RatFn2> = (0..r).map(|j| m.get(i, j).clone()).collect();
        out = &out * &vector_plethysm(&h, &row);
    }
    Ok(out)
}

/// `t_{-beta^vee}` with `<beta^vee, alphabar_i> = -k` for all `i`, where `k >= depth` makes `beta` integral.
pub fn antidominant_translation(r: usize, depth: i64) -> AffineWeylElt {
    let mut k = depth;
    while k * (r as i64 - 1) % 2 != 0 {
        k += 1;
    }
    let off = k * (r as i64 - 1) / 2;
    let beta = RootVec::new((0..r as i64).map(|i| k * i - off).collect()).expect("zero sum");
    AffineWeylElt { u: crate::partcomb::Perm::identity(r), beta }
}

/// Compare the factorization with the solver at depth `n + 1`, and re-verify at depth `n + 2`.
pub fn check_factorization(mu: &MultiPartition) -> Result<bool, WreathError> {
    let n = mu.size() as i64;
    let f = factor_generic(mu)?;
    for depth in [n + 1, n + 2] {
        let w = antidominant_translation(mu.r(), depth);
        if solve_h(&WreathKey::standard(w, mu.clone()))? != f {
            return Ok(false);
        }
    }
    Ok(true)
}
