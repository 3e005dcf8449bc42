//! Rational functions in `q, t`, the `(s, u)` change of variables and the cyclic character ring.

use wreathmac::exactalg::{parse_poly, parse_ratfn, CycPoly, RatFn2, Vars};

fn main() {
    let f = parse_ratfn("(1 - q*t)/(1 - q)", Vars::QT).unwrap();
    let g = parse_ratfn("(1 - q)/(1 + t)", Vars::QT).unwrap();
    println!("f * g = {}", (f.clone() * g).render(Vars::QT));
    println!("f(q^-1, t^-1) = {}", f.inv_vars().render(Vars::QT));
    println!("q in (s,u): {}", RatFn2::q().to_su().render(Vars::SU));

    // B_(2,1) graded by q -> q chi^-1, t -> t chi
    let b = parse_poly("1 + q + t", Vars::QT).unwrap();
    println!("graded B_(2,1), r = 3: {}", CycPoly::graded(&b, 3));
}
