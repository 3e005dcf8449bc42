//! Cores, quotients, the bijection `tau` and the affine Weyl group action.

use wreathmac::partcomb::{kappa_bar, quot_core, tau, tau_w, weyl_act_partition, AffineWeylElt, Partition};

fn main() {
    let mu = Partition::parse("[4,3,2,2]").unwrap();
    let (quot, core, charges) = quot_core(&mu, 3);
    println!("mu = {mu}: quotient {quot}, core {core}, charges {:?}", charges.coords());
    let beta = kappa_bar(&mu, 3);
    println!("kappa_bar = {:?}, tau(quot, kappa_bar) = {}", beta.coords(), tau(&quot, &beta));

    let w = AffineWeylElt::parse(3, "s2 s1 t[1,-1,0]").unwrap();
    println!("w = {w}, length {}, reduced word {:?}", w.length(), w.reduced_word());
    println!("w . empty = {}", weyl_act_partition(&w, &Partition::empty()));
    for n in 1..=2 {
        for m in wreathmac::partcomb::MultiPartition::all(3, n) {
            println!("  tau_w({m}) = {}", tau_w(&w, &m));
        }
    }
}
