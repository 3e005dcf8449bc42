//! Reflection operators on `R(Gamma x T)`, the characters `B^w_mu` and wreath nabla eigenvalues.

use wreathmac::exactalg::Vars;
use wreathmac::partcomb::{tau_w, AffineWeylElt, MultiPartition};
use wreathmac::quiverref::{b_w_chain, check_quiver_data, nabla_eigen, seed};
use wreathmac::wreath::WreathKey;

fn main() {
    let word = [2, 1, 0, 1];
    let w = AffineWeylElt::from_word(3, &word);
    let mu = MultiPartition::parse("[[1],[],[1]]").unwrap();
    println!("B_{}(q chi^-1, t chi) = {}", tau_w(&w, &mu), seed(&tau_w(&w, &mu), 3));
    for (i, c) in b_w_chain(&w, &word, &mu) {
        println!("  after R{i}*: {c}");
    }
    let key = WreathKey::standard(w, mu);
    for i in 0..3 {
        println!("e^({i}) = {}", nabla_eigen(&key, i).unwrap().render(Vars::QT));
    }
    println!("matches <e_n[X^(i)], H~>: {}", check_quiver_data(&key).unwrap());
}
