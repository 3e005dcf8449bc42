use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exactalg::parse_ratfn;

fn rf(s: &str) -> RatFn2 {
    parse_ratfn(s, Vars::QT).unwrap()
}

fn mp(text: &str) -> MultiPartition {
    MultiPartition::parse(text).unwrap()
}

fn random_fn(rng: &mut ChaCha8Rng, r: usize, max_deg: usize) -> MultiSymFn {
    let mut f = MultiSymFn::zero(r);
    for _ in 0..4 {
        let n = rng.gen_range(0..=max_deg);
        let basis = MultiPartition::all(r, n);
        let k = basis[rng.gen_range(0..basis.len())].clone();
        let c = RatFn2::mono(rng.gen_range(-1..=2), rng.gen_range(-1..=2), Vars::QT).scale_int(rng.gen_range(-3..=3));
        f.add_term(k, c);
    }
    f
}

fn random_matrix(rng: &mut ChaCha8Rng, r: usize) -> MatRF {
    MatRF::from_fn(r, |i, j| {
        let base = if i == j { RatFn2::one() } else { RatFn2::zero() };
        if rng.gen_bool(0.5) {
            base + RatFn2::mono(rng.gen_range(0..=1), rng.gen_range(0..=1), Vars::QT).scale_int(rng.gen_range(-2..=2))
        } else {
            base
        }
    })
}

#[test]
fn antipode_and_shift_examples() {
    let r = 3;
    for i in 0..r {
        for k in 1..=3u32 {
            let f = MultiSymFn::p_ki(r, k, i);
            let anti = f.matrix_plethysm(&MatRF::identity(r).scale(&-RatFn2::one())).unwrap();
            assert_eq!(anti, -&f);
            let m = id_minus(r, &RatFn2::q(), -1);
            let got = f.matrix_plethysm(&m).unwrap();
            let want = &f - &MultiSymFn::p_ki(r, k, (i + r - 1) % r).scale(&RatFn2::mono(k as i32, 0, Vars::QT));
            assert_eq!(got, want);
        }
    }
}

#[test]
fn permutation_plethysms() {
    let r = 3;
    let s1 = MultiSymFn::s(&mp("[[1],[],[]]"));
    assert_eq!(s1.perm_plethysm(&Perm::rotation(r, 1)), MultiSymFn::s(&mp("[[],[1],[]]")));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let f = random_fn(&mut rng, r, 3);
        let neg = Perm::negation(r);
        assert_eq!(f.perm_plethysm(&neg).perm_plethysm(&neg), f);
        let w0 = Perm::reversal(r);
        assert_eq!(f.perm_plethysm(&w0), f.matrix_plethysm(&MatRF::permutation(w0.images())).unwrap());
    }
}

#[test]
fn functoriality_and_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for r in [2, 3] {
        for _ in 0..4 {
            let f = random_fn(&mut rng, r, 3);
            let m = random_matrix(&mut rng, r);
            let n = random_matrix(&mut rng, r);
            let lhs = f.matrix_plethysm(&(&m * &n)).unwrap();
            let rhs = f.matrix_plethysm(&n).unwrap().matrix_plethysm(&m).unwrap();
            assert_eq!(lhs, rhs);
            if let Ok(inv) = m.inverse() {
                assert_eq!(f.matrix_plethysm(&inv).unwrap().matrix_plethysm(&m).unwrap(), f);
            }
        }
    }
}

#[test]
fn omega_commutes_with_plethysm() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let r = 3;
    for _ in 0..4 {
        let f = random_fn(&mut rng, r, 3);
        let m = random_matrix(&mut rng, r);
        assert_eq!(f.omega().matrix_plethysm(&m).unwrap(), f.matrix_plethysm(&m).unwrap().omega());
    }
    for n in 0..=3 {
        for lam in MultiPartition::all(r, n) {
            let s = MultiSymFn::s(&lam);
            let anti = s.matrix_plethysm(&MatRF::identity(r).scale(&-RatFn2::one())).unwrap();
            let sign = if n % 2 == 0 { RatFn2::one() } else { -RatFn2::one() };
            assert_eq!(s.omega(), anti.scale(&sign));
        }
    }
}

#[test]
fn schur_roundtrip_and_hall() {
    for r in [1, 2, 3] {
        for n in 0..=3 {
            let basis = MultiPartition::all(r, n);
            for a in &basis {
                let s = MultiSymFn::s(a);
                let sch = s.to_schur();
                assert_eq!(sch.len(), 1);
                assert!(sch[a].is_one());
                for b in &basis {
                    let v = pair_hall(&s, &MultiSymFn::s(b));
                    assert_eq!(v.is_one(), a == b);
                    assert_eq!(v.is_zero(), a != b);
                }
            }
        }
    }
}

#[test]
fn a_matrix_identities() {
    assert_eq!(a_matrix(1).get(0, 0), &rf("(1)/(1 - q - t + q*t)"));
    for r in [2, 3] {
        let a = a_matrix(r);
        assert_eq!(a.transpose(), a);
        assert_eq!(a.inv_vars().swap_vars(), a.scale(&rf("q*t")));
        let ainv = a.inverse().unwrap();
        let lhs = &ainv * &neg_matrix(r);
        let rhs = (&neg_matrix(r) * &ainv.inv_vars()).scale(&rf("q*t"));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn qt_pairing_dual_bases() {
    for r in [2, 3] {
        let a = a_matrix(r);
        for n in 0..=2 {
            let basis = MultiPartition::all(r, n);
            for l in &basis {
                let sa = MultiSymFn::s(l).subst_matrix(&a).unwrap();
                for m in &basis {
                    let v = pair_qt(&sa, &MultiSymFn::s(m)).unwrap();
                    assert_eq!(v.is_one(), l == m);
                    assert_eq!(v.is_zero(), l != m);
                    let w = pair_qt(&MultiSymFn::s(m), &sa).unwrap();
                    assert_eq!(v, w);
                }
            }
        }
    }
}

#[test]
fn qt_pairing_fourth_dual_pair() {
    for r in [2, 3] {
        let x = id_minus(r, &RatFn2::q(), -1).inverse().unwrap();
        let y = (&neg_matrix(r) * &id_minus(r, &RatFn2::t(), -1).inverse().unwrap()).clone();
        for n in 0..=2 {
            let basis = MultiPartition::all(r, n);
            for l in &basis {
                let f = MultiSymFn::s(l).matrix_plethysm(&x).unwrap();
                for m in &basis {
                    let g = MultiSymFn::s(m).matrix_plethysm(&y).unwrap();
                    let v = pair_qt(&f, &g).unwrap();
                    assert_eq!(v.is_one(), l == m, "r={r} {l} {m}: {v}");
                    assert_eq!(v.is_zero(), l != m);
                }
            }
        }
    }
}

#[test]
fn kernel_lemma_qt_to_p() {
    // kernel Omega[Y^t M X] has coefficient matrix S_M^t; applying P^X_N P^Y_K gives S_N S_M^t S_K^t
    for r in [2, 3] {
        for n in 0..=3 {
            let nm = id_minus(r, &RatFn2::mono(0, -1, Vars::QT), -1);
            let km = id_minus(r, &RatFn2::t(), 1);
            let sa = plethysm_schur_matrix(&a_matrix(r), n).unwrap();
            let sb = plethysm_schur_matrix(&b_matrix(r), n).unwrap();
            let sn = plethysm_schur_matrix(&nm, n).unwrap();
            let sk = plethysm_schur_matrix(&km, n).unwrap();
            let d = sa.len();
            let mul = |x: &dyn Fn(usize, usize) -> RatFn2, y: &dyn Fn(usize, usize) -> RatFn2| -> Vec<Vec<RatFn2>> {
                (0..d).map(|i| (0..d).map(|j| (0..d).fold(RatFn2::zero(), |acc, k| acc + x(i, k) * y(k, j))).collect()).collect()
            };
            let t1 = mul(&|i, k| sn[i][k].clone(), &|k, j| sa[j][k].clone());
            let t2 = mul(&|i, k| t1[i][k].clone(), &|k, j| sk[j][k].clone());
            for i in 0..d {
                for j in 0..d {
                    assert_eq!(t2[i][j], sb[j][i], "r={r} n={n} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn reproducing_kernel() {
    // sum_l s_l[X] s_l[Y] pairs as the identity: its coefficient matrix is the identity
    for r in [2, 3] {
        for n in 0..=3 {
            let s = plethysm_schur_matrix(&MatRF::identity(r), n).unwrap();
            for (i, row) in s.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    assert_eq!(v.is_one(), i == j);
                    assert_eq!(v.is_zero(), i != j);
                }
            }
        }
    }
}

#[test]
fn json_render() {
    let f = MultiSymFn::s(&mp("[[1],[],[2]]")).scale(&rf("1 - q*t"));
    assert_eq!(f.render_schur(Vars::QT), r#"{"basis":"schur","terms":{"[[1],[],[2]]":"1 - q*t"}}"#);
}
