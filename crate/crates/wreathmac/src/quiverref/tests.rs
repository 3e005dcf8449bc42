use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exactalg::parse_poly;

fn lp(s: &str) -> LaurentPoly2 {
    parse_poly(s, Vars::QT).unwrap()
}

fn cyc(cs: &[&str]) -> CycPoly {
    CycPoly::from_coeffs(cs.iter().map(|c| lp(c)).collect())
}

fn mp(text: &str) -> MultiPartition {
    MultiPartition::parse(text).unwrap()
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

#[test]
fn example_chain() {
    let w = AffineWeylElt::from_word(3, &[2, 1, 0, 1]);
    assert_eq!(w, AffineWeylElt::parse(3, "t[0,1,-1]").unwrap());
    let mu = mp("[[1],[],[1]]");
    assert_eq!(tau_w(&w, &mu), Partition::new(vec![4, 4]));
    assert_eq!(seed(&tau_w(&w, &mu), 3), cyc(&["q^3 + q*t + 1", "q^3*t + q^2 + t", "q^2*t + q"]));
    let chain = b_w_chain(&w, &[2, 1, 0, 1], &mu);
    let want = [
        (1, cyc(&["q^3 + q*t + 1", "q^2 + t", "q^2*t + q"])),
        (0, cyc(&["q*t + 1", "q^2 + t", "q^2*t + q"])),
        (1, cyc(&["q*t + 1", "q^2 + t", "q^2*t + q"])),
        (2, cyc(&["q*t + 1", "q^2 + t", "q^-1*t + q"])),
    ];
    assert_eq!(chain.len(), want.len());
    for ((i, got), (j, exp)) in chain.iter().zip(&want) {
        assert_eq!(i, j);
        assert_eq!(got, exp, "after R{i}");
    }
    let key = WreathKey::standard(w, mu);
    assert_eq!(b_w(&key).unwrap().0, want[3].1);
    let eig: Vec<_> = (0..3).map(|i| nabla_eigen(&key, i).unwrap()).collect();
    assert_eq!(eig, vec![lp("q*t"), lp("q^2*t"), lp("t")]);
}

#[test]
fn braid_and_hecke() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let c = LaurentPoly2::mono(-1, -1, Vars::QT);
    for r in [3, 4] {
        for _ in 0..100 {
            let f = random_cyc(&mut rng, r);
            let i = rng.gen_range(0..r);
            let j = (i + 1) % r;
            let lhs = r_star(i, &r_star(j, &r_star(i, &f)));
            let rhs = r_star(j, &r_star(i, &r_star(j, &f)));
            assert_eq!(lhs, rhs);
            let k = (i + 2) % r;
            if r > 3 {
                assert_eq!(r_star(i, &r_star(k, &f)), r_star(k, &r_star(i, &f)));
            }
            let rf = r_star(i, &f);
            let rrf = r_star(i, &rf);
            // (R - 1)(R + q^-1 t^-1) = 0
            let lhs = &(&rrf + &rf.scale(&c)) - &(&rf + &f.scale(&c));
            assert_eq!(lhs, CycPoly::zero(r));
        }
    }
}

fn words_of(w: &AffineWeylElt) -> Vec<Vec<usize>> {
    let r = w.r();
    let len = w.reduced_word().len();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..len {
        words = words.into_iter().flat_map(|v| (0..r).map(move |i| [v.clone(), vec![i]].concat())).collect();
    }
    words.into_iter().filter(|v| AffineWeylElt::from_word(r, v) == *w).collect()
}

#[test]
fn quiver_data_matches_wreath() {
    for r in [2, 3] {
        for w in AffineWeylElt::all_up_to_length(r, 4) {
            for n in 1..=2 {
                for mu in MultiPartition::all(r, n) {
                    let key = WreathKey::standard(w.clone(), mu.clone());
                    let c = b_w(&key).unwrap();
                    for word in words_of(&w) {
                        assert_eq!(b_w_word(&w, &word, &mu), c.0, "{key} word {word:?}");
                    }
                    assert!(check_quiver_data(&key).unwrap(), "{key}");
                }
            }
        }
    }
}

#[test]
fn procesi_normalization() {
    for r in [2, 3] {
        for w in AffineWeylElt::all_up_to_length(r, 3) {
            for n in 1..=2 {
                for mu in MultiPartition::all(r, n) {
                    let key = WreathKey::standard(w.clone(), mu);
                    for row in procesi_normalization_check(&key).unwrap() {
                        assert!(row.holds(), "{key} i={}: {} vs {}", row.i, row.quiver, row.pairing);
                    }
                }
            }
        }
    }
}

#[test]
fn nabla_is_invertible() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for w in AffineWeylElt::all_up_to_length(2, 2) {
        for i in 0..2 {
            let nab = Nabla::new(&w, 2, i).unwrap();
            for _ in 0..3 {
                let basis = MultiPartition::all(2, 2);
                let k = basis[rng.gen_range(0..basis.len())].clone();
                let f = MultiSymFn::s(&k);
                assert_eq!(nab.apply_inverse(&nab.apply(&f)), f);
            }
        }
    }
}
