//! The horizontal Heisenberg eigenoperators on the vertex representation, applied to `H~_mu`.

use wreathmac::partcomb::Partition;
use wreathmac::toroidal::{check_eigen, check_relations, embed_h};

fn main() {
    for c in check_relations(3, 1, 1) {
        println!("{}: {} instances, {} failures", c.name, c.instances, c.failures.len());
    }
    let mu = Partition::parse("[3,3,2,2]").unwrap();
    println!("H~_mu = {}", embed_h(&mu, 3).unwrap());
    for c in check_eigen(&mu, 3).unwrap() {
        println!("{}", c.describe());
    }
}
