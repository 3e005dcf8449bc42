//! Solve for a wreath Macdonald polynomial and inspect its Kostka coefficients.

use wreathmac::exactalg::Vars;
use wreathmac::partcomb::{AffineWeylElt, MultiPartition};
use wreathmac::wreath::{kostka, solve_h, WreathKey};

fn main() {
    let w = AffineWeylElt::parse(3, "t[0,1,-1]").unwrap();
    let mu = MultiPartition::parse("[[1],[],[1]]").unwrap();
    let key = WreathKey::standard(w, mu);
    println!("{key}");
    println!("{}", solve_h(&key).unwrap().render_schur(Vars::QT));
    let k = kostka(&key).unwrap();
    println!("positive: {}, Gamma-homogeneous: {}, K(1,1) counts multitableaux: {}", k.is_positive(), k.is_gamma_homogeneous(), k.matches_multitableaux());
}
