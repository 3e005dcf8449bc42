//! The `paper-examples` suite: every worked example the library reproduces, one named case each.

use std::fmt::Debug;

use crate::exactalg::{parse_poly, parse_ratfn, CycPoly, LaurentPoly2, MatRF, RatFn2, Vars};
use crate::multisym::{a_matrix, id_minus, neg_matrix, pair_qt, MultiSymFn};
use crate::partcomb::{
    core_of_root, hook_data, kappa_bar, order_ge_w, quot_core, s_act_partition, tau, tau_w, weyl_act_partition, AffineWeylElt, Cell,
    MultiPartition, Partition, RootVec,
};
use crate::quiverref::{b_w, b_w_chain, nabla_eigen, procesi_normalization_check, r_star, seed};
use crate::symfn::{d0, h_of_alphabet, macdonald_mn, macdonald_p, perp, tilde_h, PolyN, SymFn};
use crate::toroidal::{
    a_component, act_f, cocycle, embed_h, fock_weight, group_mult, h_eigenvalue_formula, miki_word, self_sign, Mode, RootElt, VertexVec,
};
use crate::wreath::{at_t_inverse_q, check_down_nabla_down, factor_generic, j_and_p, m_minus, solve_h, WreathKey};

use super::{run, Request};

/// Names of the suites `verify` accepts.
pub const SUITES: &[&str] = &["paper-examples", "toroidal-relations"];

type Check = Result<(), String>;

/// A named example.
pub struct Case {
    pub name: &'static str,
    check: fn() -> Check,
}

/// Outcome of one case; `detail` is set on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub name: String,
    pub detail: Option<String>,
}

impl Case {
    pub fn run(&self) -> CaseResult {
        CaseResult { name: self.name.to_string(), detail: (self.check)().err() }
    }
}

fn eq<T: PartialEq + Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn ensure(what: &str, ok: bool) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn s(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec())
}

fn mp(text: &str) -> MultiPartition {
    MultiPartition::parse(text).expect("literal")
}

fn rf(text: &str) -> RatFn2 {
    parse_ratfn(text, Vars::QT).expect("literal")
}

fn lp(text: &str) -> LaurentPoly2 {
    parse_poly(text, Vars::QT).expect("literal")
}

fn weyl(r: usize, text: &str) -> AffineWeylElt {
    AffineWeylElt::parse(r, text).expect("literal")
}

fn expansion(pairs: &[(&str, &str)]) -> MultiSymFn {
    let mut f = MultiSymFn::zero(mp(pairs[0].0).r());
    for (k, c) in pairs {
        f = &f + &MultiSymFn::s(&mp(k)).scale(&rf(c));
    }
    f
}

fn sym_schur(pairs: &[(&[u32], &str)]) -> SymFn {
    pairs.iter().fold(SymFn::zero(), |acc, (l, c)| &acc + &SymFn::s(&p(l)).scale(&rf(c)))
}

fn solve_std(w: &AffineWeylElt, mu: &str) -> Result<MultiSymFn, String> {
    solve_h(&WreathKey::standard(w.clone(), mp(mu))).map_err(s)
}

fn t_minus(r: usize, i: usize) -> AffineWeylElt {
    AffineWeylElt::translation(&RootVec::simple(r, i).neg())
}

fn exactalg_to_su() -> Check {
    eq("to_su(q)", RatFn2::q().to_su(), RatFn2::mono(2, 2, Vars::SU))
}

fn hook_6421() -> Check {
    eq("(arm, leg, hook)", hook_data(&p(&[6, 4, 2, 1]), Cell::new(1, 1)).map_err(s)?, (2, 1, 4))
}

fn b_and_a_32() -> Check {
    let mu = p(&[3, 2]);
    eq("B", mu.b_poly(), lp("1 + q + q^2 + t + q*t"))?;
    eq("A", mu.a_poly(false), lp("q^3 + q^2*t + t^2 - q^3*t - q^2*t^2"))
}

fn addable_removable_32() -> Check {
    let mu = p(&[3, 2]);
    let cells = |v: &[(u32, u32)]| v.iter().map(|&(a, b)| Cell::new(a, b)).collect::<Vec<_>>();
    eq("addable", mu.addable(), cells(&[(3, 0), (2, 1), (0, 2)]))?;
    eq("removable", mu.removable(), cells(&[(2, 0), (1, 1)]))
}

fn quot_core_4322() -> Check {
    let (q, core, ch) = quot_core(&p(&[4, 3, 2, 2]), 3);
    eq("quotient", q.render().as_str(), "[[1],[],[2]]")?;
    eq("charges", ch.coords(), &[1, -1, 0][..])?;
    eq("core", core, p(&[2]))
}

fn kappa_bar_examples() -> Check {
    eq("kappa_bar(4,3,2,2)", kappa_bar(&p(&[4, 3, 2, 2]), 3), RootVec::simple(3, 1))?;
    eq("kappa_bar(2)", kappa_bar(&p(&[2]), 3), RootVec::simple(3, 1))
}

fn root_to_core() -> Check {
    eq("core of alphabar_1", core_of_root(&RootVec::simple(3, 1)), p(&[2]))?;
    eq("core of alphabar_2", core_of_root(&RootVec::simple(3, 2)), p(&[1, 1]))
}

fn generator_chain() -> Check {
    eq("s0 . empty", s_act_partition(3, 0, &Partition::empty()), p(&[1]))?;
    eq("t_{alphabar_1} . empty", weyl_act_partition(&AffineWeylElt::translation(&RootVec::simple(3, 1)), &Partition::empty()), p(&[2]))?;
    eq("s2 s0 s2 s1 . empty", weyl_act_partition(&weyl(3, "s2 s0 s2 s1"), &Partition::empty()), p(&[2]))
}

fn tau_examples() -> Check {
    eq("tau((.,1,.), alphabar_1)", tau(&mp("[[],[1],[]]"), &RootVec::simple(3, 1)), p(&[5]))?;
    eq("tau_w((1),.,(1))", tau_w(&t_minus(3, 2), &mp("[[1],[],[1]]")), p(&[4, 4]))
}

fn dominance_chains() -> Check {
    let d = |i| MultiPartition::single(3, i, p(&[1]));
    let ge = |w: &AffineWeylElt, a: usize, b: usize| order_ge_w(w, &d(a), &d(b)).map_err(s);
    let w = t_minus(3, 1);
    ensure("(.,1,.) >= (.,.,1) >= (1,.,.) under t_{-alphabar_1}", ge(&w, 1, 2)? && ge(&w, 2, 0)? && !ge(&w, 0, 1)?)?;
    let w2 = weyl(3, "s2 s1").compose(&w);
    ensure("(1,.,.) >= (.,1,.) >= (.,.,1) under s2 s1 t_{-alphabar_1}", ge(&w2, 0, 1)? && ge(&w2, 1, 2)? && !ge(&w2, 2, 0)?)
}

fn reduced_word_example() -> Check {
    let w = t_minus(3, 2);
    eq("length", w.length(), 4)?;
    eq("s2 s1 s0 s1", AffineWeylElt::from_word(3, &[2, 1, 0, 1]), w)
}

fn plethystic_h2() -> Check {
    let got = tilde_h(&p(&[2])).pleth_sub(&rf("1 - q"), &RatFn2::zero());
    eq("H~_2[(1-q)X]", got, SymFn::s(&p(&[2])).scale(&rf("1 - q - q^2 + q^3")))
}

fn schur_of_minus_x() -> Check {
    for n in 0..=5 {
        for lam in Partition::all(n) {
            let sign = RatFn2::from_int(if n % 2 == 0 { 1 } else { -1 });
            let got = SymFn::s(&lam).pleth_sub(&-RatFn2::one(), &RatFn2::zero());
            eq(&format!("s_{lam}[-X]"), got, SymFn::s(&lam.transpose()).scale(&sign))?;
        }
    }
    Ok(())
}

fn perp_example() -> Check {
    // Omega[z^-1 (q-1)/t X]^perp p_1 = p_1 + z^-1 (q-1)/t: the z^0 part is p_1, the z^-1 part is h_1[B X]^perp p_1
    let b = rf("(-1 + q)/(t)");
    eq("z^0 part", perp(&SymFn::one(), &SymFn::p_k(1)), SymFn::p_k(1))?;
    eq("z^-1 part", perp(&h_of_alphabet(&b, 1), &SymFn::p_k(1)), SymFn::constant(b))
}

fn d0_example() -> Check {
    let a = RatFn2::from_poly(p(&[1]).a_poly(false)).map_exponents(|x, y| (x, -y), Some(Vars::QT)).map_err(s)?;
    eq("D0 P_(1,0)", d0(&macdonald_p(&p(&[1]))), SymFn::p_k(1).scale(&a))
}

fn n2_macdonald() -> Check {
    let want = &SymFn::m(&p(&[2])) + &SymFn::m(&p(&[1, 1])).scale(&rf("(1 + q - t - q*t)/(1 - q*t)"));
    eq("P_(2,0)", macdonald_p(&p(&[2])), want)?;
    eq("P_(1,1)", macdonald_p(&p(&[1, 1])), SymFn::m(&p(&[1, 1])))?;
    eq("P_(1,0)", macdonald_p(&p(&[1])), SymFn::m(&p(&[1])))?;
    eq("P_(0,0)", macdonald_p(&Partition::empty()), SymFn::one())
}

fn m2_matrix() -> Check {
    let basis = [p(&[]), p(&[1]), p(&[1, 1]), p(&[2])];
    let want = [
        ["1 + t", "0", "0", "0"],
        ["0", "1 + q*t", "0", "0"],
        ["0", "0", "q + q*t", "1 - t - q^2 + q^2*t"],
        ["0", "0", "0", "1 + q^2*t"],
    ];
    for (j, b) in basis.iter().enumerate() {
        let img = macdonald_mn(&PolyN::m(2, b)).map_err(s)?.to_monomial();
        for (i, a) in basis.iter().enumerate() {
            let got = img.get(a).cloned().unwrap_or_else(RatFn2::zero);
            eq(&format!("M2 entry ({i},{j})"), got, rf(want[i][j]))?;
        }
    }
    Ok(())
}

fn tilde_h_tables() -> Check {
    eq("H~_2", tilde_h(&p(&[2])), sym_schur(&[(&[2], "1"), (&[1, 1], "q")]))?;
    eq("H~_21", tilde_h(&p(&[2, 1])), sym_schur(&[(&[3], "1"), (&[2, 1], "q + t"), (&[1, 1, 1], "q*t")]))
}

fn plethysm_examples() -> Check {
    let r = 3;
    for i in 0..r {
        for k in 1..=3u32 {
            let f = MultiSymFn::p_ki(r, k, i);
            eq("antipode", f.matrix_plethysm(&MatRF::identity(r).scale(&-RatFn2::one())).map_err(s)?, -&f)?;
            let want = &f - &MultiSymFn::p_ki(r, k, (i + r - 1) % r).scale(&RatFn2::mono(k as i32, 0, Vars::QT));
            eq("id - q chi^-1", f.matrix_plethysm(&id_minus(r, &RatFn2::q(), -1)).map_err(s)?, want)?;
        }
    }
    Ok(())
}

fn a_matrix_lemma() -> Check {
    let r = 3;
    let a = a_matrix(r);
    eq("swap inv A", a.inv_vars().swap_vars(), a.scale(&rf("q*t")))?;
    let ainv = a.inverse().map_err(s)?;
    let lhs = &ainv * &neg_matrix(r);
    let rhs = (&neg_matrix(r) * &ainv.inv_vars()).scale(&rf("q*t"));
    eq("A^-1 inv neg", lhs, rhs)
}

fn qt_dual_bases() -> Check {
    let r = 2;
    let a = a_matrix(r);
    for n in 0..=2 {
        let basis = MultiPartition::all(r, n);
        for l in &basis {
            let sa = MultiSymFn::s(l).subst_matrix(&a).map_err(s)?;
            for m in &basis {
                let v = pair_qt(&sa, &MultiSymFn::s(m)).map_err(s)?;
                let want = if l == m { RatFn2::one() } else { RatFn2::zero() };
                eq(&format!("<s_{l}[AX], s_{m}>"), v, want)?;
            }
        }
    }
    Ok(())
}

fn n1_triangularity() -> Check {
    let w = weyl(3, "s2 s1 t[1,-1,0]");
    let want = [
        ("[[1],[],[]]", [("[[1],[],[]]", "1"), ("[[],[1],[]]", "q^2"), ("[[],[],[1]]", "q")]),
        ("[[],[1],[]]", [("[[1],[],[]]", "1"), ("[[],[1],[]]", "t"), ("[[],[],[1]]", "q")]),
        ("[[],[],[1]]", [("[[1],[],[]]", "1"), ("[[],[1],[]]", "t"), ("[[],[],[1]]", "t^2")]),
    ];
    for (mu, terms) in want {
        eq(mu, solve_std(&w, mu)?, expansion(&terms))?;
    }
    Ok(())
}

fn degree_two_expansion() -> Check {
    let want = expansion(&[
        ("[[2],[],[]]", "1"),
        ("[[1,1],[],[]]", "q*t"),
        ("[[1],[1],[]]", "q^2 + t"),
        ("[[1],[],[1]]", "t*q^-1 + q"),
        ("[[],[2],[]]", "q"),
        ("[[],[1,1],[]]", "q^2*t"),
        ("[[],[1],[1]]", "q*t + 1"),
        ("[[],[],[2]]", "q^-1"),
        ("[[],[],[1,1]]", "t"),
    ]);
    eq("H~ at ((1),.,(1))", solve_std(&t_minus(3, 2), "[[1],[],[1]]")?, want)
}

fn r1_is_classical() -> Check {
    eq("H~^id_((2))", solve_std(&AffineWeylElt::identity(1), "[[2]]")?, MultiSymFn::embed(1, 0, &tilde_h(&p(&[2]))))
}

fn down_nabla_down() -> Check {
    for w in AffineWeylElt::all_up_to_length(2, 2) {
        for n in 0..=2 {
            ensure(&format!("w={w} n={n}"), check_down_nabla_down(&w, n).map_err(s)?)?;
        }
    }
    Ok(())
}

fn p_r1() -> Check {
    let key = WreathKey::standard(AffineWeylElt::identity(1), mp("[[2]]"));
    let got = j_and_p(&key).map_err(s)?.p;
    let want = macdonald_p(&p(&[2])).map_coeffs(|c| c.map_exponents(|a, b| (a, -b), Some(Vars::QT)).expect("monomial map"));
    eq("P^id_((2))", got, MultiSymFn::embed(1, 0, &want))
}

fn p_at_t_inverse_q() -> Check {
    for w in AffineWeylElt::all_up_to_length(2, 2) {
        for n in 0..=2 {
            for mu in MultiPartition::all(2, n) {
                let pw = j_and_p(&WreathKey::standard(w.clone(), mu.clone())).map_err(s)?.p;
                eq(&format!("w={w} mu={mu}"), at_t_inverse_q(&pw).map_err(s)?, MultiSymFn::s(&mu))?;
            }
        }
    }
    Ok(())
}

fn factorization_example() -> Check {
    let z = [("[[2],[],[]]", "1"), ("[[],[2],[]]", "t^2"), ("[[],[],[2]]", "t^4"), ("[[1],[1],[]]", "t"), ("[[1],[],[1]]", "t^2"), ("[[],[1],[1]]", "t^3")];
    let z11 = [("[[1,1],[],[]]", "1"), ("[[],[1,1],[]]", "t^2"), ("[[],[],[1,1]]", "t^4"), ("[[1],[1],[]]", "t"), ("[[1],[],[1]]", "t^2"), ("[[],[1],[1]]", "t^3")];
    let want = &expansion(&z) + &expansion(&z11).scale(&rf("q*t^-2"));
    eq("s2[Z] + q/t^2 s11[Z]", factor_generic(&mp("[[],[],[2]]")).map_err(s)?, want)
}

fn m_minus_entries() -> Check {
    let m = m_minus(3);
    for i in 0..3 {
        for j in 0..3 {
            let want = if i >= j { RatFn2::mono(0, j as i32, Vars::QT) } else { RatFn2::mono(3 - j as i32, 0, Vars::QT) };
            eq(&format!("M-({i},{j})"), m.get(i, j).clone(), want)?;
        }
    }
    Ok(())
}

fn cyc(cs: &[&str]) -> CycPoly {
    CycPoly::from_coeffs(cs.iter().map(|c| lp(c)).collect())
}

fn reflection_first_arrow() -> Check {
    let f = seed(&p(&[4, 4]), 3);
    eq("[chi^1] R1* B_(4,4)", r_star(1, &f).coeff(1).clone(), lp("q^2 + t"))
}

fn braid_relation() -> Check {
    // R_i* is affine and Z[q,t]-linear in its linear part, so agreement on 0 and on each chi^j is agreement everywhere
    let r = 3;
    let mut inputs = vec![CycPoly::zero(r)];
    inputs.extend((0..r).map(|j| CycPoly::chi_power(r, j as i64, LaurentPoly2::one())));
    for f in &inputs {
        for i in 0..r {
            let j = (i + 1) % r;
            eq(&format!("R{i}R{j}R{i} on {f}"), r_star(i, &r_star(j, &r_star(i, f))), r_star(j, &r_star(i, &r_star(j, f))))?;
        }
    }
    Ok(())
}

fn quiver_chain() -> Check {
    let w = t_minus(3, 2);
    let mu = mp("[[1],[],[1]]");
    let chain = b_w_chain(&w, &[2, 1, 0, 1], &mu);
    let last = chain.last().map(|(_, c)| c.clone()).ok_or("empty chain")?;
    let want = cyc(&["q*t + 1", "q^2 + t", "q^-1*t + q"]);
    eq("chain end", last, want.clone())?;
    eq("B^w", b_w(&WreathKey::standard(w, mu)).map_err(s)?.0, want)
}

fn nabla_example() -> Check {
    let key = WreathKey::standard(t_minus(3, 2), mp("[[1],[],[1]]"));
    let got: Vec<LaurentPoly2> = (0..3).map(|i| nabla_eigen(&key, i)).collect::<Result<_, _>>().map_err(s)?;
    eq("e^(i)", got, vec![lp("q*t"), lp("q^2*t"), lp("t")])
}

fn procesi_example() -> Check {
    let key = WreathKey::standard(t_minus(3, 2), mp("[[1],[],[1]]"));
    let rows = procesi_normalization_check(&key).map_err(s)?;
    let want = [lp("1 + q*t"), lp("q^2 + t"), lp("t*q^-1 + q")];
    for row in rows {
        eq(&format!("[chi^{}] B", row.i), row.quiver.clone(), want[row.i].clone())?;
        ensure(&format!("row {} pairing {}", row.i, row.pairing), row.holds())?;
    }
    Ok(())
}

fn cocycle_example() -> Check {
    let (s1, x) = group_mult(&RootElt::simple(3, 2), &RootElt::simple(3, 0));
    eq("s(alpha2, alpha0)", s1, -1)?;
    let (s2, y) = group_mult(&RootElt::simple(3, 1), &x);
    ensure("e^a1 e^a2 e^a0 lands on e^0", y.is_zero())?;
    eq("sign", s1 * s2, -1)
}

fn cocycle_commutation() -> Check {
    for r in [3, 4] {
        for i in 0..r {
            for j in 0..r {
                let (a, b) = (RootElt::simple(r, i), RootElt::simple(r, j));
                let sign = if crate::toroidal::cartan(r, i, j) % 2 == 0 { 1 } else { -1 };
                eq(&format!("r={r} ({i},{j})"), cocycle(&a, &b), sign * cocycle(&b, &a))?;
            }
        }
    }
    Ok(())
}

fn h_e_relation() -> Check {
    for c in crate::toroidal::check_relations(3, 1, 1) {
        ensure(&format!("{}: {:?}", c.name, c.failures.first()), c.holds())?;
    }
    Ok(())
}

fn self_sign_alpha0() -> Check {
    eq("s(alphabar_0)", self_sign(&RootElt::simple(3, 0)), -1)?;
    let f = act_f(0, -1, &VertexVec::vacuum(3));
    eq("f_{0,-1} vacuum", f, VertexVec::single(RootElt::simple(3, 0).neg(), MultiSymFn::one(3).scale(&-RatFn2::one())))
}

fn miki_example() -> Check {
    let e = miki_word(3, 1, true).map_err(s)?;
    eq("word count", e.0.len(), 4)?;
    eq("first word", e.0[0].1.clone(), vec![Mode::E(1, 0), Mode::E(2, 0), Mode::E(0, 0)])
}

fn embed_example() -> Check {
    let h = embed_h(&p(&[3, 3, 2, 2]), 3).map_err(s)?;
    let want = solve_h(&WreathKey::standard(weyl(3, "t[0,-1,1]"), mp("[[1,1],[],[]]"))).map_err(s)?;
    eq("H~_(3,3,2,2)", h, VertexVec::single(RootElt::simple(3, 2).neg(), want.to_su()))
}

fn a_component_r1() -> Check {
    for n in 0..=3 {
        for mu in Partition::all(n) {
            eq(&format!("A_{mu}"), a_component(&mu, 1, 0, false), mu.a_poly(false))?;
        }
    }
    Ok(())
}

fn highest_weight() -> Check {
    for i in 0..3 {
        let w = fock_weight(&Partition::empty(), 3, i);
        eq(&format!("factors at i={i}"), w.factors.len(), usize::from(i == 0))?;
    }
    // the single factor at i = 0 reproduces the h-mode eigenvalues of A_empty = 1
    let w = fock_weight(&Partition::empty(), 3, 0);
    for l in [-2, -1, 1, 2] {
        eq(&format!("h_(0,{l}) eigenvalue"), w.h_eigenvalue(l), h_eigenvalue_formula(&Partition::empty(), 3, 0, l))?;
    }
    Ok(())
}

fn cli(args: &[&str]) -> Result<String, String> {
    let req = Request::parse_args(args).map_err(|e| e.to_string())?;
    let out = run(&req);
    if out.code != 0 {
        return Err(format!("exit {}: {}", out.code, out.json));
    }
    Ok(out.json)
}

fn cli_compute_r3() -> Check {
    let got = cli(&["compute", "--r", "3", "--w", "s2 s1 t[1,-1,0]", "--mu", "[[1],[],[]]"])?;
    let want = expansion(&[("[[1],[],[]]", "1"), ("[[],[1],[]]", "q^2"), ("[[],[],[1]]", "q")]).render_schur(Vars::QT);
    eq("compute", got, want)
}

fn cli_compute_r1() -> Check {
    eq("compute", cli(&["compute", "--r", "1", "--w", "", "--mu", "[[2]]"])?.as_str(), r#"{"s[2]":"1","s[1,1]":"q"}"#)
}

/// Every case of the `paper-examples` suite, in report order.
pub fn paper_examples() -> Vec<Case> {
    macro_rules! cases {
        ($($name:literal => $f:ident),* $(,)?) => { vec![$(Case { name: $name, check: $f }),*] };
    }
    cases![
        "exactalg: q = s^2 u^2" => exactalg_to_su,
        "partcomb: hook data of (6,4,2,1) at (1,1)" => hook_6421,
        "partcomb: B and A of (3,2)" => b_and_a_32,
        "partcomb: addable and removable cells of (3,2)" => addable_removable_32,
        "partcomb: quotient, charges and core of (4,3,2,2)" => quot_core_4322,
        "partcomb: kappa_bar of (4,3,2,2) and (2)" => kappa_bar_examples,
        "partcomb: cores of alphabar_1 and alphabar_2" => root_to_core,
        "partcomb: generator chain on the empty partition" => generator_chain,
        "partcomb: tau examples (5) and (4,4)" => tau_examples,
        "partcomb: dominance chains for n = 1" => dominance_chains,
        "partcomb: reduced word of t_{-alphabar_2}" => reduced_word_example,
        "symfn: H~_2[(1-q)X]" => plethystic_h2,
        "symfn: s_lambda[-X] for |lambda| <= 5" => schur_of_minus_x,
        "symfn: Omega perp on p_1" => perp_example,
        "symfn: D0 on P_(1,0)" => d0_example,
        "symfn: N = 2 Macdonald polynomials" => n2_macdonald,
        "symfn: M_2 matrix" => m2_matrix,
        "symfn: H~_2 and H~_21" => tilde_h_tables,
        "multisym: antipode and id - q chi^-1 plethysms" => plethysm_examples,
        "multisym: A matrix identities, r = 3" => a_matrix_lemma,
        "multisym: s[AX] and s are qt-dual, r = 2" => qt_dual_bases,
        "wreath: n = 1 triangularity example" => n1_triangularity,
        "wreath: degree-two expansion at ((1),.,(1))" => degree_two_expansion,
        "wreath: r = 1 gives H~_2" => r1_is_classical,
        "wreath: down nabla down is nabla inverse, r = 2" => down_nabla_down,
        "wreath: P^id_((2)) is P_2 at t^-1" => p_r1,
        "wreath: P at t = q^-1 is Schur, r = 2" => p_at_t_inverse_q,
        "wreath: factorization of (.,.,(2))" => factorization_example,
        "wreath: M- entries, r = 3" => m_minus_entries,
        "quiverref: first arrow of the reflection chain" => reflection_first_arrow,
        "quiverref: braid relation, r = 3" => braid_relation,
        "quiverref: B^w for ((1),.,(1))" => quiver_chain,
        "quiverref: nabla eigenvalues qt, q^2 t, t" => nabla_example,
        "quiverref: Procesi normalization rows" => procesi_example,
        "toroidal: cocycle sign s(alpha2, alpha0) = -1" => cocycle_example,
        "toroidal: simple roots commute up to (-1)^a_ij" => cocycle_commutation,
        "toroidal: mode relations on the degree-1 envelope" => h_e_relation,
        "toroidal: s(alphabar_0) = (-1)^r" => self_sign_alpha0,
        "toroidal: the e-word for D~^(1)* has 4 terms" => miki_example,
        "toroidal: embedding of H~_(3,3,2,2)" => embed_example,
        "toroidal: A components at r = 1" => a_component_r1,
        "toroidal: highest weight of the vacuum" => highest_weight,
        "cli: compute at r = 3" => cli_compute_r3,
        "cli: compute at r = 1" => cli_compute_r1,
    ]
}
