use std::fmt;

use crate::partcomb::RootVec;

/// An element of the `sl_r` root lattice in simple-root coordinates `(n_1, ..., n_{r-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootElt(Vec<i64>);

impl RootElt {
    pub fn zero(r: usize) -> Self {
        Self(vec![0; r - 1])
    }

    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    /// `alphabar_i`; `alphabar_0 = -(alpha_1 + ... + alpha_{r-1})`.
    pub fn simple(r: usize, i: usize) -> Self {
        let mut v = vec![0; r - 1];
        if i == 0 {
            v.iter_mut().for_each(|x| *x = -1);
        } else {
            v[i - 1] = 1;
        }
        Self(v)
    }

    pub fn from_root_vec(beta: &RootVec) -> Self {
        Self(beta.to_simple())
    }

    pub fn to_root_vec(&self) -> RootVec {
        RootVec::from_simple(self.r(), &self.0)
    }

    pub fn r(&self) -> usize {
        self.0.len() + 1
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    /// `n_j`, with `n_0 = n_r = 0` and indices read mod `r`.
    fn n(&self, j: i64) -> i64 {
        let r = self.r() as i64;
        let j = j.rem_euclid(r);
        if j == 0 {
            0
        } else {
            self.0[j as usize - 1]
        }
    }

    /// `<alphabar_i^vee, alpha>`.
    pub fn pair(&self, i: usize) -> i64 {
        let i = i as i64;
        let r = self.r() as i64;
        if i == 0 {
            -self.n(1) - self.n(r - 1)
        } else {
            2 * self.n(i) - self.n(i - 1) - self.n(i + 1)
        }
    }

    /// `<alphabar_i^vee, M_i alpha>` with `M_i alpha = n_{i-1} alphabar_{i-1} - n_{i+1} alphabar_{i+1}`.
    pub fn pair_m(&self, i: usize) -> i64 {
        let i = i as i64;
        self.n(i + 1) - self.n(i - 1)
    }

    /// Every element with coordinates in `[-bound, bound]`.
    pub fn boxed(r: usize, bound: i64) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for _ in 1..r {
            out = out.into_iter().flat_map(|v: Vec<i64>| (-bound..=bound).map(move |x| [v.clone(), vec![x]].concat())).collect();
        }
        out.into_iter().map(Self).collect()
    }
}

impl fmt::Display for RootElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `s(alpha, beta) = (-1)^{sum_{j=1}^{r-2} m_{j+1} n_j}`.
pub fn cocycle(alpha: &RootElt, beta: &RootElt) -> i64 {
    let m = alpha.coords();
    let n = beta.coords();
    let e: i64 = (1..m.len()).map(|j| m[j] * n[j - 1]).sum();
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `s(alpha) = s(alpha, alpha)`, so that `(e^alpha)^-1 = s(alpha) e^-alpha`.
pub fn self_sign(alpha: &RootElt) -> i64 {
    cocycle(alpha, alpha)
}

/// `e^alpha e^beta = s(alpha, beta) e^{alpha + beta}`.
pub fn group_mult(alpha: &RootElt, beta: &RootElt) -> (i64, RootElt) {
    (cocycle(alpha, beta), alpha.add(beta))
}

/// The Cartan matrix entry `a_ij` of affine `sl_r`, `r >= 3`.
pub fn cartan(r: usize, i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if (i + 1) % r == j || (j + 1) % r == i {
        -1
    } else {
        0
    }
}

/// `m_ij = +-1` for `i = j +- 1`.
pub fn skew(r: usize, i: usize, j: usize) -> i64 {
    if i == (j + 1) % r {
        1
    } else if j == (i + 1) % r {
        -1
    } else {
        0
    }
}
