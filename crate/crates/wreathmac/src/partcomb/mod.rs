//! Partitions, Maya diagrams, `r`-cores and quotients, and the affine Weyl group.
//!
//! Residues follow the convention `(b - a) mod r` for the cell in column `a`, row `b`.

mod maya;
mod partition;
mod weyl;

pub use maya::MayaDiagram;
pub use partition::{addable_removable, Cell, PartError, Partition};
pub use weyl::{AffineWeylElt, MultiPartition, Perm, RootVec};

/// `(arm, leg, hook)` of `cell` in `mu`.
pub fn hook_data(mu: &Partition, cell: Cell) -> Result<(u32, u32, u32), PartError> {
    mu.hook_data(cell)
}

/// `r`-quotient, `r`-core and runner charges of `mu`.
///
/// The charges are the `epsilon`-coordinates of `kappa_bar(mu)`.
pub fn quot_core(mu: &Partition, r: usize) -> (MultiPartition, Partition, RootVec) {
    assert!(r >= 1);
    let b = MayaDiagram::from_charged(mu, 0);
    let mut quot = Vec::with_capacity(r);
    let mut charges = Vec::with_capacity(r);
    for i in 0..r {
        let run = b.runner(r, i);
        quot.push(run.shape());
        charges.push(run.charge());
    }
    let charges = RootVec::new(charges).expect("runner charges sum to zero");
    let core = tau(&MultiPartition::empty(r), &charges);
    (MultiPartition::new(quot), core, charges)
}

/// `kappa_bar(mu) = -cl(sum_{cells} alpha_{residue})`.
pub fn kappa_bar(mu: &Partition, r: usize) -> RootVec {
    // cl(alpha_0) = -theta, cl(alpha_i) = eps_{i-1} - eps_i
    let mut v = vec![0i64; r];
    if r == 1 {
        return RootVec::zero(1);
    }
    for c in mu.cells() {
        let i = c.residue(r);
        if i == 0 {
            v[0] -= 1;
            v[r - 1] += 1;
        } else {
            v[i - 1] += 1;
            v[i] -= 1;
        }
    }
    RootVec::new(v.into_iter().map(|x| -x).collect()).unwrap()
}

/// `Core(beta) = t_{beta^vee} . empty`.
pub fn core_of_root(beta: &RootVec) -> Partition {
    tau(&MultiPartition::empty(beta.r()), beta)
}

/// The partition with `r`-quotient `mu` and `kappa_bar = beta`.
pub fn tau(mu: &MultiPartition, beta: &RootVec) -> Partition {
    assert_eq!(mu.r(), beta.r(), "multipartition and root vector disagree on r");
    let runners: Vec<MayaDiagram> =
        mu.components().iter().zip(beta.coords()).map(|(p, &c)| MayaDiagram::from_charged(p, c)).collect();
    MayaDiagram::interleave(&runners).shape()
}

/// `tau_w(mu) = tau(w^{-1}(mu, 0))`.
pub fn tau_w(w: &AffineWeylElt, mu: &MultiPartition) -> Partition {
    let (m, a) = w.inverse().act(mu, &RootVec::zero(mu.r()));
    tau(&m, &a)
}

/// `lambda >=_w mu`, i.e. `tau_w(lambda)` dominates `tau_w(mu)`.
pub fn order_ge_w(w: &AffineWeylElt, lambda: &MultiPartition, mu: &MultiPartition) -> Result<bool, PartError> {
    if lambda.size() != mu.size() {
        return Err(PartError::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(tau_w(w, lambda).dominates(&tau_w(w, mu)))
}

/// Action of the generator `s_i`: remove every removable and add every addable cell of residue `i`.
pub fn s_act_partition(r: usize, i: usize, lambda: &Partition) -> Partition {
    if r == 1 {
        return lambda.clone();
    }
    let (add, rem) = addable_removable(lambda, r, i);
    let mut parts: Vec<u32> = lambda.parts().to_vec();
    parts.push(0);
    for c in add {
        parts[c.b as usize] += 1;
    }
    for c in rem {
        parts[c.b as usize] -= 1;
    }
    Partition::new(parts)
}

/// `w . lambda`, computed through the abacus: `w . tau(mu, alpha) = tau(w(mu, alpha))`.
pub fn weyl_act_partition(w: &AffineWeylElt, lambda: &Partition) -> Partition {
    let r = w.r();
    if r == 1 {
        return lambda.clone();
    }
    let (q, _, a) = quot_core(lambda, r);
    let (q2, a2) = w.act(&q, &a);
    tau(&q2, &a2)
}

/// `w . lambda`, computed generator by generator along a reduced word.
pub fn weyl_act_partition_by_word(w: &AffineWeylElt, lambda: &Partition) -> Partition {
    let r = w.r();
    w.reduced_word().iter().rev().fold(lambda.clone(), |acc, &i| s_act_partition(r, i, &acc))
}

/// Parse the Weyl-element grammar (`s<i>`, `w0`, `t[c0,...]`, left to right).
pub fn weyl_canonical(r: usize, word: &str) -> Result<AffineWeylElt, PartError> {
    AffineWeylElt::parse(r, word)
}

pub fn reduced_word(w: &AffineWeylElt) -> Vec<usize> {
    w.reduced_word()
}

pub fn length(w: &AffineWeylElt) -> usize {
    w.length()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::try_from_parts(v).unwrap()
    }

    #[test]
    fn maya_golden_4322() {
        let b = MayaDiagram::from_charged(&p(&[4, 3, 2, 2]), 0);
        let vals: Vec<u8> = (-6..=4).map(|i| b.value(i)).collect();
        assert_eq!(vals, vec![0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1]);
        assert_eq!(b.charge(), 0);
        assert_eq!(b.durfee(), 2);
        assert_eq!(b.shape(), p(&[4, 3, 2, 2]));
    }

    #[test]
    fn quot_core_golden() {
        let (q, core, ch) = quot_core(&p(&[4, 3, 2, 2]), 3);
        assert_eq!(q.render(), "[[1],[],[2]]");
        assert_eq!(ch.coords(), &[1, -1, 0]);
        assert_eq!(core, p(&[2]));
        assert_eq!(kappa_bar(&p(&[4, 3, 2, 2]), 3), RootVec::simple(3, 1));
        assert_eq!(kappa_bar(&p(&[2]), 3), RootVec::simple(3, 1));
    }

    #[test]
    fn roots_to_cores() {
        assert_eq!(core_of_root(&RootVec::simple(3, 1)), p(&[2]));
        assert_eq!(core_of_root(&RootVec::simple(3, 2)), p(&[1, 1]));
        assert_eq!(core_of_root(&RootVec::zero(3)), Partition::empty());
    }

    #[test]
    fn generator_chain_on_empty() {
        assert_eq!(s_act_partition(3, 1, &Partition::empty()), Partition::empty());
        assert_eq!(s_act_partition(3, 0, &Partition::empty()), p(&[1]));
        let t = AffineWeylElt::translation(&RootVec::simple(3, 1));
        assert_eq!(weyl_act_partition(&t, &Partition::empty()), p(&[2]));
        let chain = AffineWeylElt::parse(3, "s2 s0 s2 s1").unwrap();
        assert_eq!(weyl_act_partition_by_word(&chain, &Partition::empty()), p(&[2]));
    }

    #[test]
    fn tau_golden() {
        let mu = MultiPartition::single(3, 1, p(&[1]));
        assert_eq!(tau(&mu, &RootVec::simple(3, 1)), p(&[5]));
        let w = AffineWeylElt::translation(&RootVec::simple(3, 2).neg());
        let mu = MultiPartition::new(vec![p(&[1]), Partition::empty(), p(&[1])]);
        assert_eq!(tau_w(&w, &mu), p(&[4, 4]));
    }

    #[test]
    fn reduced_word_of_translation() {
        let w = AffineWeylElt::translation(&RootVec::simple(3, 2).neg());
        assert_eq!(w.length(), 4);
        assert_eq!(AffineWeylElt::from_word(3, &[2, 1, 0, 1]), w);
        let word = w.reduced_word();
        assert_eq!(word.len(), 4);
        assert_eq!(AffineWeylElt::from_word(3, &word), w);
        assert!(AffineWeylElt::identity(3).reduced_word().is_empty());
    }

    #[test]
    fn example_orders() {
        let d = |i| MultiPartition::single(3, i, p(&[1]));
        let w = AffineWeylElt::translation(&RootVec::simple(3, 1).neg());
        assert!(order_ge_w(&w, &d(1), &d(2)).unwrap());
        assert!(order_ge_w(&w, &d(2), &d(0)).unwrap());
        assert!(!order_ge_w(&w, &d(0), &d(1)).unwrap());
        let w2 = AffineWeylElt::parse(3, "s2 s1").unwrap().compose(&w);
        assert!(order_ge_w(&w2, &d(0), &d(1)).unwrap());
        assert!(order_ge_w(&w2, &d(1), &d(2)).unwrap());
        assert!(!order_ge_w(&w2, &d(2), &d(0)).unwrap());
    }

    #[test]
    fn generator_relations() {
        for r in 2..=4 {
            let id = AffineWeylElt::identity(r);
            for i in 0..r {
                let s = AffineWeylElt::s(r, i);
                assert_eq!(s.compose(&s), id);
                assert_eq!(s.length(), 1);
                assert_eq!(s.star(), AffineWeylElt::s(r, (r - i) % r));
                if r >= 3 {
                    let t = AffineWeylElt::s(r, (i + 1) % r);
                    assert_eq!(s.compose(&t).compose(&s), t.compose(&s).compose(&t));
                }
            }
        }
    }

    #[test]
    fn abacus_action_matches_generators() {
        for r in 2..=4 {
            for w in AffineWeylElt::all_up_to_length(r, 4) {
                for n in 0..=5 {
                    for lam in Partition::all(n) {
                        assert_eq!(weyl_act_partition(&w, &lam), weyl_act_partition_by_word(&w, &lam), "r={r} w={w} lam={lam}");
                    }
                }
            }
        }
    }
}
