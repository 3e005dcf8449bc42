//! Symmetric functions over `Q(q,t)`, stored in the power-sum basis, with
//! classical Macdonald polynomials and their vertex-operator eigenoperators.

mod chars;
mod macdonald;
mod sym;

use thiserror::Error;

pub use chars::{char_table, z, z_rat, CharTable};
pub use macdonald::{
    d0, d0_tilde, d0_tilde_star, h_of_alphabet, macdonald_j, macdonald_mn, macdonald_p, macdonald_p_all, tilde_h, vertex_mode,
    PolyN,
};
pub use sym::{hall, hall_qt, SymFn};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("input polynomial is not symmetric")]
    NotSymmetric,
    #[error("Vandermonde division was not exact")]
    Inexact,
}

/// `f[A X + B]`.
pub fn pleth_sub(f: &SymFn, a: &crate::exactalg::RatFn2, b: &crate::exactalg::RatFn2) -> SymFn {
    f.pleth_sub(a, b)
}

/// `g^perp f`.
pub fn perp(g: &SymFn, f: &SymFn) -> SymFn {
    SymFn::perp(g, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_ratfn, RatFn2, Vars};
    use crate::partcomb::Partition;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn rf(s: &str) -> RatFn2 {
        parse_ratfn(s, Vars::QT).unwrap()
    }

    #[test]
    fn basis_roundtrips() {
        for n in 0..=6 {
            for lam in Partition::all(n) {
                let s = SymFn::s(&lam);
                let sch = s.to_schur();
                assert_eq!(sch.len(), 1);
                assert!(sch[&lam].is_one());
                let m = SymFn::m(&lam);
                let mono = m.to_monomial();
                assert_eq!(mono.len(), 1, "m{lam}");
                assert!(mono[&lam].is_one());
                assert_eq!(SymFn::from_schur(s.to_schur().iter()), s);
                assert_eq!(SymFn::from_monomial(s.to_monomial().iter()), s);
                assert_eq!(s.pleth_sub(&-RatFn2::one(), &RatFn2::zero()), SymFn::s(&lam.transpose()).scale(&RatFn2::from_int(if n % 2 == 0 { 1 } else { -1 })));
                assert_eq!(s.omega(), SymFn::s(&lam.transpose()));
            }
        }
    }

    #[test]
    fn hall_is_orthonormal_on_schur() {
        let parts = Partition::all(4);
        for a in &parts {
            for b in &parts {
                let v = hall(&SymFn::s(a), &SymFn::s(b));
                assert_eq!(v.is_one(), a == b);
                assert_eq!(v.is_zero(), a != b);
            }
        }
    }

    #[test]
    fn perp_examples() {
        assert_eq!(perp(&SymFn::p_k(1), &SymFn::p_k(1)), SymFn::one());
        // Omega[z^-1 (q-1)/t X]^perp p_1 = p_1 + z^-1 (q-1)/t; the z^-1 part is h_1[BX]^perp
        let b = rf("(-1 + q)/(t)");
        let got = perp(&h_of_alphabet(&b, 1), &SymFn::p_k(1));
        assert_eq!(got, SymFn::constant(b));
    }

    #[test]
    fn n2_macdonald_example() {
        let p20 = macdonald_p(&p(&[2]));
        let want = &SymFn::m(&p(&[2])) + &SymFn::m(&p(&[1, 1])).scale(&rf("(1 + q - t - q*t)/(1 - q*t)"));
        assert_eq!(p20, want);
        assert_eq!(macdonald_p(&p(&[1, 1])), SymFn::m(&p(&[1, 1])));
        assert_eq!(macdonald_p(&p(&[1])), SymFn::m(&p(&[1])));
        assert_eq!(macdonald_p(&Partition::empty()), SymFn::one());
    }

    #[test]
    fn m2_matrix() {
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
                let got = img.get(a).cloned().unwrap_or_else(RatFn2::zero);
                assert_eq!(got, rf(want[i][j]), "entry ({i},{j})");
            }
        }
        let x1 = PolyN::monomial(2, vec![1, 0], RatFn2::one());
        assert_eq!(macdonald_mn(&x1), Err(SymError::NotSymmetric));
        let cube = PolyN::monomial(1, vec![3], RatFn2::one());
        assert_eq!(macdonald_mn(&cube).unwrap(), PolyN::monomial(1, vec![3], rf("q^3")));
    }

    #[test]
    fn tilde_h_tables() {
        let s = |v: &[u32]| SymFn::s(&p(v));
        assert_eq!(tilde_h(&p(&[1])), s(&[1]));
        assert_eq!(tilde_h(&p(&[2])), &s(&[2]) + &s(&[1, 1]).scale(&RatFn2::q()));
        let h3 = &(&s(&[3]) + &s(&[2, 1]).scale(&rf("q + q^2"))) + &s(&[1, 1, 1]).scale(&rf("q^3"));
        assert_eq!(tilde_h(&p(&[3])), h3);
        let h21 = &(&s(&[3]) + &s(&[2, 1]).scale(&rf("q + t"))) + &s(&[1, 1, 1]).scale(&rf("q*t"));
        assert_eq!(tilde_h(&p(&[2, 1])), h21);
        let h111 = &(&s(&[3]) + &s(&[2, 1]).scale(&rf("t + t^2"))) + &s(&[1, 1, 1]).scale(&rf("t^3"));
        assert_eq!(tilde_h(&p(&[1, 1, 1])), h111);
        let plq = tilde_h(&p(&[2])).pleth_sub(&rf("1 - q"), &RatFn2::zero());
        assert_eq!(plq, s(&[2]).scale(&rf("1 - q - q^2 + q^3")));
    }

    #[test]
    fn d0_on_p1() {
        let got = d0(&SymFn::p_k(1));
        let a = p(&[1]).a_poly(false);
        let a_tinv = RatFn2::from_poly(a).map_exponents(|x, y| (x, -y), Some(Vars::QT)).unwrap();
        assert_eq!(got, SymFn::p_k(1).scale(&a_tinv));
    }

    #[test]
    fn eigenoperators_small() {
        for n in 0..=3 {
            for mu in Partition::all(n) {
                let a = RatFn2::from_poly(mu.a_poly(false));
                let h = tilde_h(&mu);
                assert_eq!(d0_tilde(&h), h.scale(&a), "D~0 on {mu}");
                assert_eq!(d0_tilde_star(&h), h.scale(&a.inv_vars()), "D~0* on {mu}");
                let pm = macdonald_p(&mu);
                let at = a.map_exponents(|x, y| (x, -y), Some(Vars::QT)).unwrap();
                assert_eq!(d0(&pm), pm.scale(&at), "D0 on {mu}");
            }
        }
    }
}
