//! The norm formula and the symmetry identities, with their proportionality scalars.

use wreathmac::exactalg::Vars;
use wreathmac::partcomb::{AffineWeylElt, MultiPartition};
use wreathmac::wreath::{check_norm, check_symmetries, WreathKey};

fn main() {
    let w = AffineWeylElt::parse(3, "s1 t[1,-1,0]").unwrap();
    for mu in MultiPartition::all(3, 2).into_iter().take(3) {
        let key = WreathKey::standard(w.clone(), mu);
        let n = check_norm(&key).unwrap();
        println!("{key}: <H~, inv neg H~> = {} (hook formula agrees: {})", n.pairing.render(Vars::QT), n.holds);
        for c in check_symmetries(&key).unwrap() {
            println!("  {}", c.describe());
        }
    }
}
