//! Mode relations checked as operator identities on a finite envelope of `V`.

use rayon::prelude::*;

use crate::exactalg::RatFn2;
use crate::multisym::MultiSymFn;
use crate::partcomb::MultiPartition;

use super::lattice::{cartan, skew, RootElt};
use super::vertex::{su, Mode, VertexVec};
use super::OpExpr;

/// `p_lambda (x) e^alpha` for `|lambda| <= max_deg` and coordinates of `alpha` in `[-bound, bound]`.
pub fn degree_envelope(r: usize, max_deg: usize, bound: i64) -> Vec<VertexVec> {
    let mut out = Vec::new();
    for alpha in RootElt::boxed(r, bound) {
        for n in 0..=max_deg {
            for lam in MultiPartition::all(r, n) {
                out.push(VertexVec::single(alpha.clone(), MultiSymFn::p(&lam)));
            }
        }
    }
    out
}

/// One family of relations together with the instances that failed.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `lhs - rhs` must vanish on every envelope vector.
struct Instance {
    label: String,
    lhs: OpExpr,
    rhs: OpExpr,
}

fn g(m: Mode) -> OpExpr {
    OpExpr::gen(m)
}

fn comm(x: &OpExpr, y: &OpExpr) -> OpExpr {
    OpExpr::qcomm(x, y, &RatFn2::one())
}

fn run(name: &str, instances: Vec<Instance>, env: &[VertexVec]) -> RelationCheck {
    let jobs: Vec<(usize, usize)> = (0..instances.len()).flat_map(|a| (0..env.len()).map(move |b| (a, b))).collect();
    let mut failures: Vec<(usize, usize)> = jobs
        .into_par_iter()
        .filter(|&(a, b)| {
            let ins = &instances[a];
            ins.lhs.apply(&env[b]) != ins.rhs.apply(&env[b])
        })
        .collect();
    failures.sort();
    RelationCheck {
        name: name.to_string(),
        instances: instances.len() * env.len(),
        failures: failures.into_iter().map(|(a, b)| format!("{} on {}", instances[a].label, env[b])).collect(),
    }
}

/// `psi^+-_{i,l}` as a plain operator expression.
fn psi(i: usize, l: i64, plus: bool) -> OpExpr {
    g(if plus { Mode::PsiPlus(i, l) } else { Mode::PsiMinus(i, l) })
}

/// `[e_{i,k}, f_{j,l}] = delta_ij (C_v^{(k-l)/2} psi^+_{i,k+l} - C_v^{(l-k)/2} psi^-_{i,k+l}) / (p - p^-1)`.
fn ef_instances(r: usize, modes: &[i64]) -> Vec<Instance> {
    let pp = su(2, 0) - su(-2, 0);
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for &k in modes {
                for &l in modes {
                    let lhs = comm(&g(Mode::E(i, k)), &g(Mode::F(j, l)));
                    let rhs = if i == j {
                        let c = RatFn2::one() / pp.clone();
                        let plus = psi(i, k + l, true).scale(&(su((k - l) as i32, 0) * c.clone()));
                        let minus = psi(i, k + l, false).scale(&(-su((l - k) as i32, 0) * c));
                        plus.add(&minus)
                    } else {
                        OpExpr::default()
                    };
                    out.push(Instance { label: format!("[e({i},{k}), f({j},{l})]"), lhs, rhs });
                }
            }
        }
    }
    out
}

/// `[x_{i,k1}, [x_{i,k2}, x_{i+-1,l}]_p]_{p^-1} + (k1 <-> k2) = 0` for `x = e, f`.
fn serre_instances(r: usize, modes: &[i64]) -> Vec<Instance> {
    let p = su(2, 0);
    let pinv = su(-2, 0);
    let mut out = Vec::new();
    for i in 0..r {
        for j in [(i + 1) % r, (i + r - 1) % r] {
            for e in [true, false] {
                let m = |a: usize, k: i64| if e { Mode::E(a, k) } else { Mode::F(a, k) };
                for &k1 in modes {
                    for &k2 in modes {
                        if k2 < k1 {
                            continue;
                        }
                        for &l in modes {
                            let one = |a: i64, b: i64| {
                                OpExpr::qcomm(&g(m(i, a)), &OpExpr::qcomm(&g(m(i, b)), &g(m(j, l)), &p), &pinv)
                            };
                            let name = if e { "e" } else { "f" };
                            out.push(Instance {
                                label: format!("serre {name}: i={i} j={j} k=({k1},{k2}) l={l}"),
                                lhs: one(k1, k2).add(&one(k2, k1)),
                                rhs: OpExpr::default(),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// `[h_{i,k}, h_{j,-l}] = delta_kl d^{-k m_ij}/k (p^{k a_ij} - p^{-k a_ij})(C_v^k - C_v^-k)/(p - p^-1)^2`.
fn heisenberg_instances(r: usize, modes: &[i64]) -> Vec<Instance> {
    let pp = su(2, 0) - su(-2, 0);
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for &k in modes {
                for &l in modes {
                    let lhs = comm(&g(Mode::H(i, k)), &g(Mode::H(j, -l)));
                    let rhs = if k == l {
                        let (kk, a, m) = (k as i32, cartan(r, i, j) as i32, skew(r, i, j) as i32);
                        let c = su(0, -2 * kk * m) * (su(2 * kk * a, 0) - su(-2 * kk * a, 0)) * (su(2 * kk, 0) - su(-2 * kk, 0))
                            / (pp.clone() * pp.clone());
                        OpExpr(vec![(c.scale_rat(&num_rational::BigRational::new(1.into(), k.into())), vec![])])
                    } else {
                        OpExpr::default()
                    };
                    out.push(Instance { label: format!("[h({i},{k}), h({j},{})]", -l), lhs, rhs });
                }
            }
        }
    }
    out
}

/// `[h_{i,k}, e_{j,l}] = C_v^{-|k|/2} d^{-m_ij k}/k [k a_ij]_p e_{j,k+l}` and
/// `[h_{i,k}, f_{j,l}] = -C_v^{|k|/2} d^{-m_ij k}/k [k a_ij]_p f_{j,k+l}`.
fn he_instances(r: usize, ks: &[i64], ls: &[i64]) -> Vec<Instance> {
    let pp = su(2, 0) - su(-2, 0);
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for &k in ks {
                for &l in ls {
                    for e in [true, false] {
                        let (kk, a, m) = (k as i32, cartan(r, i, j) as i32, skew(r, i, j) as i32);
                        let base = su(0, -2 * m * kk) * (su(2 * kk * a, 0) - su(-2 * kk * a, 0)) / pp.clone();
                        let base = base.scale_rat(&num_rational::BigRational::new(1.into(), k.into()));
                        let (x, target, c) = if e {
                            (Mode::E(j, l), Mode::E(j, k + l), su(-kk.abs(), 0) * base)
                        } else {
                            (Mode::F(j, l), Mode::F(j, k + l), -(su(kk.abs(), 0) * base))
                        };
                        out.push(Instance {
                            label: format!("[h({i},{k}), {}]", if e { format!("e({j},{l})") } else { format!("f({j},{l})") }),
                            lhs: comm(&g(Mode::H(i, k)), &g(x)),
                            rhs: g(target).scale(&c),
                        });
                    }
                }
            }
        }
    }
    out
}

/// The `[e,f]`, Serre, Heisenberg and `[h,e]`/`[h,f]` relations on the envelope
/// `deg <= max_deg`, coordinates in `[-bound, bound]`.
pub fn check_relations(r: usize, max_deg: usize, bound: i64) -> Vec<RelationCheck> {
    let env = degree_envelope(r, max_deg, bound);
    vec![
        run("e-f", ef_instances(r, &[-1, 0, 1]), &env),
        run("serre", serre_instances(r, &[0, 1]), &env),
        run("heisenberg", heisenberg_instances(r, &[1, 2]), &env),
        run("h-e/h-f", he_instances(r, &[-1, 1], &[-1, 0, 1]), &env),
    ]
}
