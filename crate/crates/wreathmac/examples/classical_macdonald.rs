//! Classical Macdonald polynomials and the eigenoperators `D~_0`, `D~*_0`.

use wreathmac::exactalg::{RatFn2, Vars};
use wreathmac::partcomb::Partition;
use wreathmac::symfn::{d0_tilde, d0_tilde_star, macdonald_p, tilde_h};

fn main() {
    for n in 1..=3 {
        for mu in Partition::all(n) {
            let h = tilde_h(&mu);
            let a = RatFn2::from_poly(mu.a_poly(false));
            let ok = d0_tilde(&h) == h.scale(&a) && d0_tilde_star(&h) == h.scale(&a.inv_vars());
            println!("H~_{mu} = {}  eigen: {ok}", h.render_schur(Vars::QT));
        }
    }
    for (lam, c) in macdonald_p(&Partition::parse("[2]").unwrap()).to_monomial() {
        println!("[m{lam}] P_(2) = {}", c.render(Vars::QT));
    }
}
