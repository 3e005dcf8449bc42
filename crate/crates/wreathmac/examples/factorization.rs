//! For antidominant translations `H~` factors through `Z = M^- X`.

use wreathmac::exactalg::Vars;
use wreathmac::partcomb::MultiPartition;
use wreathmac::wreath::{check_factorization, factor_generic, m_minus};

fn main() {
    let m = m_minus(3);
    for i in 0..3 {
        let row: Vec<String> = (0..3).map(|j| m.get(i, j).render(Vars::QT)).collect();
        println!("M- row {i}: {}", row.join(", "));
    }
    let mu = MultiPartition::parse("[[],[],[2]]").unwrap();
    println!("{}", factor_generic(&mu).unwrap().render_schur(Vars::QT));
    println!("agrees with the solver: {}", check_factorization(&mu).unwrap());
}
