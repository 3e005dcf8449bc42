use std::collections::BTreeSet;

use super::partition::Partition;

/// A Maya diagram `b: Z -> {0,1}` (0 = bead, 1 = hole), stored by its
/// finitely many holes below and beads above a cutoff.
///
/// The border of `shape(b)` is traced from the bottom right to the upper left:
/// step `i` goes left for a bead and up for a hole.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MayaDiagram {
    /// Every position `< lo` is a bead and every position `>= hi` is a hole.
    lo: i64,
    hi: i64,
    holes: BTreeSet<i64>,
}

impl MayaDiagram {
    /// The diagram of the charged partition `(lambda, c)`: holes sit at
    /// `c + y - lambda_{y+1}` for `y >= 0`.
    pub fn from_charged(lambda: &Partition, c: i64) -> Self {
        let l = lambda.len() as i64;
        let lo = c - lambda.part(0) as i64;
        let hi = c + l;
        let holes = (0..l).map(|y| c + y - lambda.part(y as usize) as i64).collect();
        Self { lo, hi, holes }
    }

    pub fn vacuum(c: i64) -> Self {
        Self::from_charged(&Partition::empty(), c)
    }

    /// `b(i)`.
    pub fn value(&self, i: i64) -> u8 {
        if i < self.lo {
            0
        } else if i >= self.hi || self.holes.contains(&i) {
            1
        } else {
            0
        }
    }

    /// Build from an explicit window: `vals[k] = b(start + k)`, beads before and holes after.
    pub fn from_window(start: i64, vals: &[u8]) -> Self {
        let hi = start + vals.len() as i64;
        let holes = vals.iter().enumerate().filter(|(_, &v)| v == 1).map(|(k, _)| start + k as i64).collect();
        Self { lo: start, hi, holes }
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    /// The unique `c` with `#{k < c : hole} = #{k >= c : bead}`.
    pub fn charge(&self) -> i64 {
        let beads_total = (self.lo..self.hi).filter(|&i| self.value(i) == 0).count() as i64;
        // positions in [lo, hi): choose c so that holes below c = beads at or above c
        for c in self.lo..=self.hi {
            let holes_below = (self.lo..c).filter(|&i| self.value(i) == 1).count() as i64;
            let beads_below = (c - self.lo) - holes_below;
            if holes_below == beads_total - beads_below {
                return c;
            }
        }
        unreachable!("every Maya diagram has a charge")
    }

    /// Durfee square side: the common count in the charge condition.
    pub fn durfee(&self) -> i64 {
        let c = self.charge();
        (self.lo..c).filter(|&i| self.value(i) == 1).count() as i64
    }

    /// Row `y` of the shape is the number of beads after the `y`-th hole.
    pub fn shape(&self) -> Partition {
        let beads: Vec<i64> = (self.lo..self.hi).filter(|&i| self.value(i) == 0).collect();
        let mut parts = Vec::new();
        for h in (self.lo..self.hi).filter(|&i| self.value(i) == 1) {
            let after = beads.iter().filter(|&&b| b > h).count() as u32;
            if after == 0 {
                break;
            }
            parts.push(after);
        }
        Partition::new(parts)
    }

    /// Runner `i` of the `r`-runner abacus: `k -> b(kr + i)`.
    pub fn runner(&self, r: usize, i: usize) -> MayaDiagram {
        let r = r as i64;
        let i = i as i64;
        let kmin = (self.lo - i).div_euclid(r);
        let kmax = (self.hi - i).div_euclid(r) + 1;
        let vals: Vec<u8> = (kmin..kmax).map(|k| self.value(k * r + i)).collect();
        MayaDiagram::from_window(kmin, &vals)
    }

    /// Inverse of [`runner`](Self::runner) over all `i`.
    pub fn interleave(runners: &[MayaDiagram]) -> MayaDiagram {
        let r = runners.len() as i64;
        let lo = runners.iter().enumerate().map(|(i, b)| b.lo * r + i as i64).min().unwrap() - r;
        let hi = runners.iter().enumerate().map(|(i, b)| b.hi * r + i as i64).max().unwrap() + r;
        let vals: Vec<u8> = (lo..hi).map(|p| runners[p.rem_euclid(r) as usize].value(p.div_euclid(r))).collect();
        MayaDiagram::from_window(lo, &vals)
    }
}
