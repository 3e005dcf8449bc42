//! Matrix plethysms on multisymmetric functions and the `(q,t)` pairing.

use wreathmac::exactalg::{MatRF, RatFn2, Vars};
use wreathmac::multisym::{a_matrix, id_minus, pair_qt, MultiSymFn};
use wreathmac::partcomb::MultiPartition;

fn main() {
    let r = 3;
    let f = MultiSymFn::p_ki(r, 2, 1);
    println!("P_(id - q chi^-1) p_2[X^(1)] = {}", f.matrix_plethysm(&id_minus(r, &RatFn2::q(), -1)).unwrap());
    println!("antipode: {}", f.matrix_plethysm(&MatRF::identity(r).scale(&-RatFn2::one())).unwrap());

    // s[AX] and s are dual for the (q,t) pairing
    let a = a_matrix(2);
    let basis = MultiPartition::all(2, 2);
    for l in &basis {
        let sa = MultiSymFn::s(l).subst_matrix(&a).unwrap();
        let row: Vec<String> = basis.iter().map(|m| pair_qt(&sa, &MultiSymFn::s(m)).unwrap().render(Vars::QT)).collect();
        println!("{l}: {}", row.join(" "));
    }
}
