use super::*;
use crate::exactalg::{parse_ratfn, LaurentPoly2, RatFn2, Vars};
use crate::multisym::MultiSymFn;
use crate::partcomb::{AffineWeylElt, MultiPartition, Partition};
use crate::symfn::tilde_h;

fn rf(s: &str) -> RatFn2 {
    parse_ratfn(s, Vars::QT).unwrap()
}

fn mp(text: &str) -> MultiPartition {
    MultiPartition::parse(text).unwrap()
}

fn expansion(pairs: &[(&str, &str)]) -> MultiSymFn {
    let mut f = MultiSymFn::zero(mp(pairs[0].0).r());
    for (k, c) in pairs {
        f = &f + &MultiSymFn::s(&mp(k)).scale(&rf(c));
    }
    f
}

#[test]
fn n1_triangularity_example() {
    let w = AffineWeylElt::parse(3, "s2 s1 t[1,-1,0]").unwrap();
    let want = [
        ("[[1],[],[]]", [("[[1],[],[]]", "1"), ("[[],[1],[]]", "q^2"), ("[[],[],[1]]", "q")]),
        ("[[],[1],[]]", [("[[1],[],[]]", "1"), ("[[],[1],[]]", "t"), ("[[],[],[1]]", "q")]),
        ("[[],[],[1]]", [("[[1],[],[]]", "1"), ("[[],[1],[]]", "t"), ("[[],[],[1]]", "t^2")]),
    ];
    for (mu, terms) in want {
        let got = solve_h(&WreathKey::standard(w.clone(), mp(mu))).unwrap();
        assert_eq!(got, expansion(&terms), "mu={mu}");
    }
}

#[test]
fn degree_two_example() {
    let w = AffineWeylElt::from_word(3, &[2, 1, 0, 1]);
    let got = solve_h(&WreathKey::standard(w, mp("[[1],[],[1]]"))).unwrap();
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
    assert_eq!(got, want);
}

#[test]
fn remark_examples() {
    let got = solve_h(&WreathKey::standard(AffineWeylElt::s(3, 1), mp("[[1],[],[]]"))).unwrap();
    assert_eq!(got, expansion(&[("[[1],[],[]]", "1"), ("[[],[1],[]]", "q*t^-1"), ("[[],[],[1]]", "q")]));
    let w = AffineWeylElt::parse(3, "t[1,0,-1]").unwrap();
    let got = solve_h(&WreathKey::standard(w, mp("[[],[1],[]]"))).unwrap();
    assert_eq!(got, expansion(&[("[[1],[],[]]", "1"), ("[[],[1],[]]", "q^-1"), ("[[],[],[1]]", "t^-1")]));
}

#[test]
fn r1_is_classical() {
    for n in 0..=4 {
        for lam in Partition::all(n) {
            let got = solve_h(&WreathKey::standard(AffineWeylElt::identity(1), MultiPartition::new(vec![lam.clone()]))).unwrap();
            assert_eq!(got, MultiSymFn::embed(1, 0, &tilde_h(&lam)), "{lam}");
        }
    }
}

fn sample_ws(r: usize, len: usize) -> Vec<AffineWeylElt> {
    AffineWeylElt::all_up_to_length(r, len)
}

#[test]
fn symmetries_r3() {
    for w in sample_ws(3, 2) {
        for n in 1..=2 {
            for mu in MultiPartition::all(3, n) {
                for c in check_symmetries(&WreathKey::standard(w.clone(), mu.clone())).unwrap() {
                    assert!(c.holds, "{}", c.describe());
                }
                assert!(inversion_scalar_is_nabla(&WreathKey::standard(w.clone(), mu)).unwrap());
            }
        }
    }
}

#[test]
fn down_nabla_down() {
    for w in sample_ws(2, 3) {
        for n in 0..=2 {
            assert!(check_down_nabla_down(&w, n).unwrap(), "w={w} n={n}");
        }
    }
}

#[test]
fn kostka_properties_r2() {
    for w in sample_ws(2, 3) {
        for n in 0..=3 {
            for mu in MultiPartition::all(2, n) {
                let k = kostka(&WreathKey::standard(w.clone(), mu)).unwrap();
                assert!(k.is_positive() && k.is_gamma_homogeneous() && k.matches_multitableaux(), "{}", k.key);
            }
            for lam in MultiPartition::all(2, n) {
                assert_eq!(brute_multitableaux(&lam), multitableaux_count(&lam));
            }
        }
    }
    let w = AffineWeylElt::parse(3, "s2 s1 t[1,-1,0]").unwrap();
    let k = kostka(&WreathKey::standard(w.clone(), mp("[[],[1],[]]"))).unwrap();
    assert_eq!(k.get(&mp("[[],[1],[]]")), LaurentPoly2::t());
    let k = kostka(&WreathKey::standard(w, MultiPartition::empty(3))).unwrap();
    assert_eq!(k.entries.len(), 1);
    assert!(k.get(&MultiPartition::empty(3)).is_one());
}

#[test]
fn norms_and_orthogonality() {
    let b = norm_b(&WreathKey::standard(AffineWeylElt::identity(1), mp("[[1]]"))).unwrap();
    assert_eq!(b, rf("1 - q - t + q*t"));
    assert!(norm_b(&WreathKey::standard(AffineWeylElt::identity(3), MultiPartition::empty(3))).unwrap().is_one());
    let w = AffineWeylElt::parse(3, "t[1,-1,0]").unwrap();
    let key = WreathKey::standard(w.clone(), mp("[[],[1],[]]"));
    assert_eq!(crate::partcomb::tau_w(&w, &key.mu), Partition::new(vec![5]));
    assert!(check_norm(&key).unwrap().holds);
    for r in [2, 3] {
        for w in sample_ws(r, 2) {
            for n in 0..=2 {
                assert!(check_orthogonality(&w, n).unwrap());
                for mu in MultiPartition::all(r, n) {
                    let c = check_norm(&WreathKey::standard(w.clone(), mu)).unwrap();
                    assert!(c.holds, "{}: {} vs {}", c.key, c.pairing, c.formula);
                }
            }
        }
    }
}

#[test]
fn wreath_p_polynomials() {
    use crate::symfn::macdonald_p;
    for n in 0..=3 {
        for lam in Partition::all(n) {
            let key = WreathKey::standard(AffineWeylElt::identity(1), MultiPartition::new(vec![lam.clone()]));
            let p = j_and_p(&key).unwrap().p;
            let want = macdonald_p(&lam).map_coeffs(|c| c.map_exponents(|a, b| (a, -b), Some(Vars::QT)).unwrap());
            assert_eq!(p, MultiSymFn::embed(1, 0, &want), "{lam}");
        }
    }
    for w in sample_ws(2, 3) {
        for n in 0..=2 {
            assert!(check_p_orthogonality(&w, n).unwrap());
            for mu in MultiPartition::all(2, n) {
                let key = WreathKey::standard(w.clone(), mu.clone());
                let p = j_and_p(&key).unwrap().p;
                assert!(p_is_triangular(&key, &p));
                assert_eq!(at_t_inverse_q(&p).unwrap(), MultiSymFn::s(&mu));
            }
        }
    }
}

#[test]
fn conjecture_evidence() {
    let mut keys = Vec::new();
    for w in sample_ws(2, 3) {
        for n in 0..=2 {
            keys.extend(MultiPartition::all(2, n).into_iter().map(|m| WreathKey::standard(w.clone(), m)));
        }
    }
    for text in ["t[1,-1,0]", "s2 s1 t[1,-1,0]"] {
        let w = AffineWeylElt::parse(3, text).unwrap();
        keys.extend(MultiPartition::all(3, 1).into_iter().map(|m| WreathKey::standard(w.clone(), m)));
    }
    for key in keys {
        for c in check_conjectures(&key).unwrap() {
            assert!(c.pass, "{}", c.describe());
        }
    }
}

#[test]
fn factorization() {
    assert_eq!(m_minus(3).get(0, 1), &rf("q^2"));
    assert_eq!(m_minus(3).get(2, 1), &rf("t"));
    let z = [("[[2],[],[]]", "1"), ("[[],[2],[]]", "t^2"), ("[[],[],[2]]", "t^4"), ("[[1],[1],[]]", "t"), ("[[1],[],[1]]", "t^2"), ("[[],[1],[1]]", "t^3")];
    let z11 = [("[[1,1],[],[]]", "1"), ("[[],[1,1],[]]", "t^2"), ("[[],[],[1,1]]", "t^4"), ("[[1],[1],[]]", "t"), ("[[1],[],[1]]", "t^2"), ("[[],[1],[1]]", "t^3")];
    let want = &expansion(&z) + &expansion(&z11).scale(&rf("q*t^-2"));
    assert_eq!(factor_generic(&mp("[[],[],[2]]")).unwrap(), want);
    assert!(factor_generic(&MultiPartition::empty(3)).unwrap() == MultiSymFn::one(3));
    for n in 1..=2 {
        for mu in MultiPartition::all(3, n) {
            assert!(check_factorization(&mu).unwrap(), "{mu}");
        }
    }
}
