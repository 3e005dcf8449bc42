//! One PASS/FAIL line per acceptance criterion, all by exact equality.
//!
//! Runs without the libtest harness so the lines always show. The process fails
//! if a criterion fails unexpectedly; criterion 10 is expected to fail as stated
//! (see its note), and then its exchanged form must hold on every case.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use wreathmac::exactalg::{parse_poly, parse_ratfn, CycPoly, LaurentPoly2, RatFn2, Vars};
use wreathmac::multisym::MultiSymFn;
use wreathmac::partcomb::{core_of_root, kappa_bar, quot_core, tau, AffineWeylElt, MayaDiagram, MultiPartition, Partition, RootVec};
use wreathmac::quiverref::{b_w_chain, check_quiver_data, procesi_normalization_check, r_star};
use wreathmac::symfn::{d0, d0_tilde, d0_tilde_star, macdonald_mn, macdonald_p, tilde_h, PolyN, SymFn};
use wreathmac::toroidal::{check_eigen, check_relations, partitions_by_quotient};
use wreathmac::wreath::{
    check_conjectures, check_factorization, check_norm, check_symmetries, factor_generic, inversion_scalar_is_nabla, kostka, solve_h,
    WreathKey,
};

struct Verdict {
    pass: bool,
    note: String,
}

fn verdict(pass: bool, note: impl Into<String>) -> Verdict {
    Verdict { pass, note: note.into() }
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec())
}

fn mp(text: &str) -> MultiPartition {
    MultiPartition::parse(text).unwrap()
}

fn rf(s: &str) -> RatFn2 {
    parse_ratfn(s, Vars::QT).unwrap()
}

fn lp(s: &str) -> LaurentPoly2 {
    parse_poly(s, Vars::QT).unwrap()
}

fn expansion(pairs: &[(&str, &str)]) -> MultiSymFn {
    pairs.iter().fold(MultiSymFn::zero(mp(pairs[0].0).r()), |acc, (k, c)| &acc + &MultiSymFn::s(&mp(k)).scale(&rf(c)))
}

fn keys(r: usize, max_len: usize, ns: std::ops::RangeInclusive<usize>) -> Vec<WreathKey> {
    let mut out = Vec::new();
    for w in AffineWeylElt::all_up_to_length(r, max_len) {
        for n in ns.clone() {
            out.extend(MultiPartition::all(r, n).into_iter().map(|m| WreathKey::standard(w.clone(), m)));
        }
    }
    out
}

fn c1_classical() -> Verdict {
    let m = |v: &[u32]| SymFn::m(&p(v));
    let s = |v: &[u32]| SymFn::s(&p(v));
    let mut ok = macdonald_p(&Partition::empty()) == SymFn::one()
        && macdonald_p(&p(&[1])) == m(&[1])
        && macdonald_p(&p(&[1, 1])) == m(&[1, 1])
        && macdonald_p(&p(&[2])) == &m(&[2]) + &m(&[1, 1]).scale(&rf("(1 + q - t - q*t)/(1 - q*t)"));
    let basis = [p(&[]), p(&[1]), p(&[1, 1]), p(&[2])];
    let want = [
        ["1 + t", "0", "0", "0"],
        ["0", "1 + q*t", "0", "0"],
        ["0", "0", "q + q*t", "1 - t - q^2 + q^2*t"],
        ["0", "0", "0", "1 + q^2*t"],
    ];
    for (j, b) in basis.iter().enumerate() {
        let img = macdonald_mn(&PolyN::m(2, b)).unwrap().to_monomial();
        for (i, a) in basis.iter().enumerate() {
            ok &= img.get(a).cloned().unwrap_or_else(RatFn2::zero) == rf(want[i][j]);
        }
    }
    let sch = |pairs: &[(&[u32], &str)]| pairs.iter().fold(SymFn::zero(), |acc, (l, c)| &acc + &s(l).scale(&rf(c)));
    ok &= tilde_h(&p(&[2])) == sch(&[(&[2], "1"), (&[1, 1], "q")]);
    ok &= tilde_h(&p(&[3])) == sch(&[(&[3], "1"), (&[2, 1], "q + q^2"), (&[1, 1, 1], "q^3")]);
    ok &= tilde_h(&p(&[2, 1])) == sch(&[(&[3], "1"), (&[2, 1], "q + t"), (&[1, 1, 1], "q*t")]);
    ok &= tilde_h(&p(&[1, 1, 1])) == sch(&[(&[3], "1"), (&[2, 1], "t + t^2"), (&[1, 1, 1], "t^3")]);
    verdict(ok, "N=2 P's, M_2 matrix, H~ for |mu| <= 3")
}

fn c2_eigenoperators() -> Verdict {
    let mus: Vec<Partition> = (0..=5).flat_map(Partition::all).collect();
    let bad: Vec<String> = mus
        .par_iter()
        .filter_map(|mu| {
            let a = RatFn2::from_poly(mu.a_poly(false));
            let at = a.map_exponents(|x, y| (x, -y), Some(Vars::QT)).unwrap();
            let h = tilde_h(mu);
            let pm = macdonald_p(mu);
            let ok = d0(&pm) == pm.scale(&at) && d0_tilde(&h) == h.scale(&a) && d0_tilde_star(&h) == h.scale(&a.inv_vars());
            (!ok).then(|| mu.to_string())
        })
        .collect();
    verdict(bad.is_empty(), format!("{} partitions, failures {bad:?}", mus.len()))
}

fn c3_bijections() -> Verdict {
    let mut count = 0;
    let mut bad = Vec::new();
    for r in [2, 3, 4] {
        for n in 0..=10 {
            for mu in Partition::all(n) {
                count += 1;
                let (quot, core, charges) = quot_core(&mu, r);
                let beta = kappa_bar(&mu, r);
                let ok = core.is_core(r)
                    && core.size() + r * quot.size() == mu.size()
                    && kappa_bar(&core, r) == beta
                    && core_of_root(&beta) == core
                    && tau(&quot, &beta) == mu
                    && charges.coords().iter().sum::<i64>() == 0;
                if !ok {
                    bad.push(format!("r={r} {mu}"));
                }
            }
        }
    }
    // the worked example, field by field
    let mu = p(&[4, 3, 2, 2]);
    let maya = MayaDiagram::from_charged(&mu, 0);
    let vals: Vec<u8> = (-6..=4).map(|i| maya.value(i)).collect();
    let (quot, core, charges) = quot_core(&mu, 3);
    let example = vals == [0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1]
        && maya.charge() == 0
        && quot == mp("[[1],[],[2]]")
        && charges.coords() == [1, -1, 0]
        && core == p(&[2])
        && kappa_bar(&mu, 3) == RootVec::simple(3, 1)
        && core_of_root(&RootVec::simple(3, 1)) == p(&[2]);
    verdict(bad.is_empty() && example, format!("{count} roundtrips, failures {bad:?}, (4,3,2,2) example {example}"))
}

fn c4_wreath_golden() -> Verdict {
    let w = AffineWeylElt::parse(3, "s2 s1 t[1,-1,0]").unwrap();
    let want = [
        ("[[1],[],[]]", [("[[1],[],[]]", "1"), ("[[],[1],[]]", "q^2"), ("[[],[],[1]]", "q")]),
        ("[[],[1],[]]", [("[[1],[],[]]", "1"), ("[[],[1],[]]", "t"), ("[[],[],[1]]", "q")]),
        ("[[],[],[1]]", [("[[1],[],[]]", "1"), ("[[],[1],[]]", "t"), ("[[],[],[1]]", "t^2")]),
    ];
    let mut ok = want.iter().all(|(mu, terms)| solve_h(&WreathKey::standard(w.clone(), mp(mu))).unwrap() == expansion(terms));
    let w2 = AffineWeylElt::translation(&RootVec::simple(3, 2).neg());
    let got = solve_h(&WreathKey::standard(w2, mp("[[1],[],[1]]"))).unwrap();
    let nine = expansion(&[
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
    ok &= got == nine && got.to_schur().len() == 9;
    verdict(ok, "three n=1 polynomials and the 9-term degree-2 expansion")
}

fn c5_positivity() -> Verdict {
    let mut all = keys(2, 4, 0..=3);
    all.extend(keys(3, 4, 0..=3));
    let bad: Vec<String> = all
        .par_iter()
        .filter_map(|key| {
            let k = kostka(key).ok()?;
            (!(k.is_positive() && k.is_gamma_homogeneous() && k.matches_multitableaux())).then(|| key.to_string())
        })
        .collect();
    verdict(bad.is_empty(), format!("{} keys, failures {bad:?}", all.len()))
}

fn c6_norms() -> Verdict {
    let mut all = keys(2, 4, 0..=2);
    all.extend(keys(3, 4, 0..=2));
    let bad: Vec<String> = all.par_iter().filter_map(|key| (!check_norm(key).unwrap().holds).then(|| key.to_string())).collect();
    verdict(bad.is_empty(), format!("{} keys, failures {bad:?}", all.len()))
}

fn c7_symmetries() -> Verdict {
    let all = keys(3, 3, 1..=2);
    let bad: Vec<String> = all
        .par_iter()
        .flat_map_iter(|key| {
            let mut out: Vec<String> = check_symmetries(key).unwrap().into_iter().filter(|c| !c.holds).map(|c| c.describe()).collect();
            if !inversion_scalar_is_nabla(key).unwrap() {
                out.push(format!("inversion scalar at {key}"));
            }
            out
        })
        .collect();
    verdict(bad.is_empty(), format!("{} keys x 5 identities, failures {bad:?}", all.len()))
}

fn random_cyc(rng: &mut ChaCha8Rng, r: usize) -> CycPoly {
    let coeffs = (0..r)
        .map(|_| {
            (0..3).fold(LaurentPoly2::zero(), |acc, _| {
                let m = LaurentPoly2::mono(rng.gen_range(-2..=2), rng.gen_range(-2..=2), Vars::QT);
                acc + &m * &LaurentPoly2::from_int(rng.gen_range(-3..=3))
            })
        })
        .collect();
    CycPoly::from_coeffs(coeffs)
}

fn c8_reflection() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let c = LaurentPoly2::mono(-1, -1, Vars::QT);
    let mut relations = true;
    for k in 0..200 {
        let r = 3 + k % 2;
        let f = random_cyc(&mut rng, r);
        let i = rng.gen_range(0..r);
        let j = (i + 1) % r;
        relations &= r_star(i, &r_star(j, &r_star(i, &f))) == r_star(j, &r_star(i, &r_star(j, &f)));
        let (rf1, rf2) = (r_star(i, &f), r_star(i, &r_star(i, &f)));
        relations &= &(&rf2 + &rf1.scale(&c)) - &(&rf1 + &f.scale(&c)) == CycPoly::zero(r);
    }
    let cyc = |cs: &[&str]| CycPoly::from_coeffs(cs.iter().map(|s| lp(s)).collect());
    let w = AffineWeylElt::from_word(3, &[2, 1, 0, 1]);
    let chain = b_w_chain(&w, &[2, 1, 0, 1], &mp("[[1],[],[1]]"));
    let want = [
        (1, cyc(&["q^3 + q*t + 1", "q^2 + t", "q^2*t + q"])),
        (0, cyc(&["q*t + 1", "q^2 + t", "q^2*t + q"])),
        (1, cyc(&["q*t + 1", "q^2 + t", "q^2*t + q"])),
        (2, cyc(&["q*t + 1", "q^2 + t", "q^-1*t + q"])),
    ];
    let chain_ok = chain.len() == 4 && chain.iter().zip(&want).all(|(a, b)| a == b);
    let mut all = keys(2, 4, 1..=2);
    all.extend(keys(3, 4, 1..=2));
    let bad: Vec<String> = all
        .par_iter()
        .filter_map(|key| {
            let ok = check_quiver_data(key).unwrap() && procesi_normalization_check(key).unwrap().iter().all(|row| row.holds());
            (!ok).then(|| key.to_string())
        })
        .collect();
    verdict(
        relations && chain_ok && bad.is_empty(),
        format!("200 random braid/Hecke inputs {relations}, chain {chain_ok}, {} keys, failures {bad:?}", all.len()),
    )
}

fn c9_factorization() -> Verdict {
    let z = [("[[2],[],[]]", "1"), ("[[],[2],[]]", "t^2"), ("[[],[],[2]]", "t^4"), ("[[1],[1],[]]", "t"), ("[[1],[],[1]]", "t^2"), ("[[],[1],[1]]", "t^3")];
    let z11 = [("[[1,1],[],[]]", "1"), ("[[],[1,1],[]]", "t^2"), ("[[],[],[1,1]]", "t^4"), ("[[1],[1],[]]", "t"), ("[[1],[],[1]]", "t^2"), ("[[],[1],[1]]", "t^3")];
    let example = factor_generic(&mp("[[],[],[2]]")).unwrap() == &expansion(&z) + &expansion(&z11).scale(&rf("q*t^-2"));
    let mus: Vec<MultiPartition> = (1..=2).flat_map(|n| MultiPartition::all(3, n)).collect();
    let bad: Vec<String> = mus.par_iter().filter_map(|m| (!check_factorization(m).unwrap()).then(|| m.to_string())).collect();
    verdict(example && bad.is_empty(), format!("example {example}, {} multipartitions, failures {bad:?}", mus.len()))
}

fn c10_wen() -> Verdict {
    let cores = [p(&[]), p(&[1]), p(&[2]), p(&[1, 1])];
    let mus = partitions_by_quotient(3, 2, &cores);
    let checks: Vec<_> = mus.par_iter().flat_map_iter(|mu| check_eigen(mu, 3).unwrap()).collect();
    let eigen = checks.iter().filter(|c| c.eigenvalue.is_some()).count();
    // the criterion: D~* -> A(q,t), D~ -> A(q^-1,t^-1)
    let stated = checks.iter().filter(|c| c.holds_exchanged()).count();
    // D~ -> A(q,t), D~* -> A(q^-1,t^-1)
    let computed = checks.iter().filter(|c| c.holds()).count();
    let n = checks.len();
    verdict(
        stated == n,
        format!(
            "{} partitions, {n} operator applications: eigenvector {eigen}/{n}; as stated {stated}/{n} \
             (only where A(q,t) = A(q^-1,t^-1)); with D~ and D~* exchanged {computed}/{n}",
            mus.len()
        ),
    )
}

fn c11_conjectures() -> Verdict {
    let mut all = keys(2, 3, 0..=2);
    for text in ["t[1,-1,0]", "s2 s1 t[1,-1,0]"] {
        let w = AffineWeylElt::parse(3, text).unwrap();
        all.extend(MultiPartition::all(3, 1).into_iter().map(|m| WreathKey::standard(w.clone(), m)));
    }
    let bad: Vec<String> =
        all.par_iter().flat_map_iter(|key| check_conjectures(key).unwrap().into_iter().filter(|c| !c.pass).map(|c| c.describe())).collect();
    verdict(bad.is_empty(), format!("{} keys (evidence, not proof), failures {bad:?}", all.len()))
}

fn c12_relations() -> Verdict {
    let checks = check_relations(3, 2, 1);
    let summary: Vec<String> = checks.iter().map(|c| format!("{} {}/{}", c.name, c.instances - c.failures.len(), c.instances)).collect();
    verdict(checks.iter().all(|c| c.holds()), format!("degree <= 2, |alpha| <= 1: {}", summary.join(", ")))
}

fn main() {
    type Criterion = (usize, &'static str, fn() -> Verdict, Duration);
    let m = |x: u64| Duration::from_secs(60 * x);
    let criteria: [Criterion; 12] = [
        (1, "classical recovery", c1_classical, Duration::from_secs(1)),
        (2, "classical eigenoperators", c2_eigenoperators, Duration::from_secs(30)),
        (3, "combinatorial bijections", c3_bijections, Duration::from_secs(10)),
        (4, "wreath solver golden set", c4_wreath_golden, Duration::from_secs(30)),
        (5, "positivity and Gamma-grading", c5_positivity, m(10)),
        (6, "norm theorem", c6_norms, m(5)),
        (7, "symmetry suite", c7_symmetries, m(5)),
        (8, "reflection functors", c8_reflection, m(2)),
        (9, "factorization", c9_factorization, m(5)),
        (10, "Wen eigenbasis", c10_wen, m(20)),
        (11, "conjecture evidence", c11_conjectures, m(5)),
        (12, "mode relations", c12_relations, m(5)),
    ];
    let mut unexpected = Vec::new();
    for (id, name, f, budget) in criteria {
        let start = Instant::now();
        let v = f();
        let took = start.elapsed();
        let pass = v.pass && took <= budget;
        let status = if pass { "PASS" } else { "FAIL" };
        println!("{status} criterion {id:>2} ({name}): {} [{:.2}s, budget {}s]", v.note, took.as_secs_f64(), budget.as_secs());
        // criterion 10 fails as stated: the computed eigenvalues are the stated ones with D~ and D~* exchanged
        let expected_fail = id == 10 && v.note.contains("exchanged") && {
            let parts: Vec<&str> = v.note.rsplit(' ').next().unwrap_or("").split('/').collect();
            parts.len() == 2 && parts[0] == parts[1]
        };
        if !pass && !expected_fail {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
