use std::fmt;

use super::partition::{PartError, Partition};

/// A zero-sum integer vector indexed by `I = Z/rZ` in the `epsilon` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec(Vec<i64>);

impl RootVec {
    pub fn zero(r: usize) -> Self {
        Self(vec![0; r])
    }

    pub fn new(coords: Vec<i64>) -> Result<Self, PartError> {
        if coords.iter().sum::<i64>() != 0 {
            return Err(PartError::Invalid(format!("{coords:?} does not sum to zero")));
        }
        Ok(Self(coords))
    }

    /// `sum n_i alphabar_i` with `alphabar_i = eps_{i-1} - eps_i`, `n` indexed `1..r-1`.
    pub fn from_simple(r: usize, n: &[i64]) -> Self {
        assert_eq!(n.len() + 1, r, "need r-1 simple-root coordinates");
        let get = |i: usize| if i == 0 || i == r { 0 } else { n[i - 1] };
        Self((0..r).map(|j| get(j + 1) - get(j)).collect())
    }

    /// The simple root `alphabar_i` for `1 <= i <= r-1`.
    pub fn simple(r: usize, i: usize) -> Self {
        assert!(i >= 1 && i < r);
        let mut v = vec![0; r];
        v[i - 1] = 1;
        v[i] = -1;
        Self(v)
    }

    /// The highest root `theta = eps_0 - eps_{r-1}`.
    pub fn theta(r: usize) -> Self {
        let mut v = vec![0; r];
        if r > 1 {
            v[0] = 1;
            v[r - 1] = -1;
        }
        Self(v)
    }

    /// Coordinates `(n_1, ..., n_{r-1})` in the simple-root basis.
    pub fn to_simple(&self) -> Vec<i64> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for j in 0..self.0.len().saturating_sub(1) {
            acc += self.0[j];
            out.push(acc);
        }
        out
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// `(u alpha)_{u(i)} = alpha_i`.
    pub fn permute(&self, u: &Perm) -> Self {
        let mut v = vec![0; self.0.len()];
        for (i, &a) in self.0.iter().enumerate() {
            v[u.apply(i)] = a;
        }
        Self(v)
    }

    /// `<alphabar_i^vee, self>` for `i in I` (with `alphabar_0 = -theta`).
    pub fn pair_simple(&self, i: usize) -> i64 {
        let r = self.0.len();
        if i == 0 {
            self.0[r - 1] - self.0[0]
        } else {
            self.0[i - 1] - self.0[i]
        }
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", v.join(","))
    }
}

/// A permutation of `I`, with `self.0[i] = u(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(r: usize) -> Self {
        Self((0..r).collect())
    }

    pub fn from_images(v: Vec<usize>) -> Result<Self, PartError> {
        let mut seen = vec![false; v.len()];
        for &x in &v {
            if x >= v.len() || seen[x] {
                return Err(PartError::Invalid(format!("{v:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Self(v))
    }

    /// Exchange `a` and `b`.
    pub fn transposition(r: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..r).collect();
        v.swap(a, b);
        Self(v)
    }

    /// `w0: i -> r-1-i`.
    pub fn reversal(r: usize) -> Self {
        Self((0..r).map(|i| r - 1 - i).collect())
    }

    /// `neg: i -> -i`.
    pub fn negation(r: usize) -> Self {
        Self((0..r).map(|i| (r - i) % r).collect())
    }

    /// `chi^k: i -> i + k`.
    pub fn rotation(r: usize, k: i64) -> Self {
        Self((0..r).map(|i| (i as i64 + k).rem_euclid(r as i64) as usize).collect())
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    /// `(self o other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// All permutations of `0..r`.
    pub fn all(r: usize) -> Vec<Perm> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            let r = used.len();
            if cur.len() == r {
                out.push(Perm(cur.clone()));
                return;
            }
            for x in 0..r {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; r], &mut out);
        out
    }
}

/// An element `w = u t_{-beta^vee}` of the affine Weyl group of type `A_{r-1}^{(1)}`.
///
/// On `Y^I x Q` it acts by `w (mu, alpha) = (u mu, u(alpha - beta))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElt {
    pub u: Perm,
    pub beta: RootVec,
}

impl AffineWeylElt {
    pub fn identity(r: usize) -> Self {
        Self { u: Perm::identity(r), beta: RootVec::zero(r) }
    }

    pub fn r(&self) -> usize {
        self.u.r()
    }

    /// The Coxeter generator `s_i`; `s_0 = t_{theta} s_theta = s_theta t_{-theta}`.
    pub fn s(r: usize, i: usize) -> Self {
        assert!(i < r, "generator s{i} out of range for r={r}");
        if r == 1 {
            return Self::identity(1);
        }
        if i == 0 {
            Self { u: Perm::transposition(r, 0, r - 1), beta: RootVec::theta(r) }
        } else {
            Self { u: Perm::transposition(r, i - 1, i), beta: RootVec::zero(r) }
        }
    }

    /// The translation `t_{gamma^vee}`.
    pub fn translation(gamma: &RootVec) -> Self {
        Self { u: Perm::identity(gamma.r()), beta: gamma.neg() }
    }

    pub fn finite(u: Perm) -> Self {
        let r = u.r();
        Self { u, beta: RootVec::zero(r) }
    }

    pub fn w0(r: usize) -> Self {
        Self::finite(Perm::reversal(r))
    }

    /// `(u1 t_{-b1})(u2 t_{-b2}) = u1 u2 t_{-(u2^-1 b1 + b2)}`.
    pub fn compose(&self, o: &Self) -> Self {
        let u2inv = o.u.inverse();
        Self { u: self.u.compose(&o.u), beta: self.beta.permute(&u2inv).add(&o.beta) }
    }

    pub fn inverse(&self) -> Self {
        // (u t_{-b})^-1 = t_{b} u^-1 = u^-1 t_{u b}
        Self { u: self.u.inverse(), beta: self.beta.permute(&self.u).neg() }
    }

    /// The diagram automorphism `s_i -> s_{-i}`: `u* = w0 u w0`, `t_b* = t_{-w0 b}`.
    pub fn star(&self) -> Self {
        let r = self.r();
        let w0 = Perm::reversal(r);
        Self { u: w0.compose(&self.u).compose(&w0), beta: self.beta.permute(&w0).neg() }
    }

    pub fn act(&self, mu: &MultiPartition, alpha: &RootVec) -> (MultiPartition, RootVec) {
        (mu.permute(&self.u), alpha.sub(&self.beta).permute(&self.u))
    }

    /// Window of the affine permutation of abacus positions: position `kr + i`
    /// goes to `(k - beta_i) r + u(i)`.
    pub fn window(&self) -> Vec<i64> {
        let r = self.r() as i64;
        (0..self.r()).map(|i| self.u.apply(i) as i64 - r * self.beta.coords()[i]).collect()
    }

    /// Coxeter length, by the inversion count of the affine permutation.
    pub fn length(&self) -> usize {
        let w = self.window();
        let r = self.r() as i64;
        let mut l = 0i64;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                l += (w[j] - w[i]).div_euclid(r).abs();
            }
        }
        l as usize
    }

    /// A reduced word `[i_1, ..., i_l]` with `w = s_{i_1} ... s_{i_l}`,
    /// found by stripping the smallest left descent each time.
    pub fn reduced_word(&self) -> Vec<usize> {
        let r = self.r();
        let mut word = Vec::new();
        let mut cur = self.clone();
        let mut l = cur.length();
        while l > 0 {
            let mut found = false;
            for i in 0..r {
                let next = Self::s(r, i).compose(&cur);
                let nl = next.length();
                if nl < l {
                    word.push(i);
                    cur = next;
                    l = nl;
                    found = true;
                    break;
                }
            }
            assert!(found, "no descent found for an element of positive length");
        }
        word
    }

    pub fn from_word(r: usize, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(r), |acc, &i| acc.compose(&Self::s(r, i)))
    }

    /// All elements of length at most `max_len` (breadth-first over left multiplication).
    pub fn all_up_to_length(r: usize, max_len: usize) -> Vec<Self> {
        let mut seen = std::collections::BTreeSet::new();
        let mut layer = vec![Self::identity(r)];
        seen.insert(Self::identity(r));
        let mut out = layer.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for i in 0..r {
                    let v = Self::s(r, i).compose(w);
                    if v.length() == w.length() + 1 && seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Parse whitespace-separated `s<i>`, `w0`, `t[b0,...]`, composed left to right.
    ///
    /// `t[b]` is `t_{-b^vee}`, matching the parametrization `w = u t_{-beta^vee}`.
    pub fn parse(r: usize, text: &str) -> Result<Self, PartError> {
        let mut acc = Self::identity(r);
        let mut rest = text.trim();
        while !rest.is_empty() {
            let (tok, tail) = if rest.starts_with("t[") {
                let end = rest.find(']').ok_or_else(|| PartError::Parse(format!("unclosed translation in {text:?}")))?;
                (&rest[..=end], &rest[end + 1..])
            } else {
                let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
                (&rest[..end], &rest[end..])
            };
            let g = if tok == "w0" {
                Self::w0(r)
            } else if let Some(idx) = tok.strip_prefix('s') {
                let i: usize = idx.parse().map_err(|_| PartError::Parse(format!("bad generator {tok:?}")))?;
                if i >= r {
                    return Err(PartError::Parse(format!("generator {tok:?} out of range for r={r}")));
                }
                Self::s(r, i)
            } else if let Some(body) = tok.strip_prefix("t[").and_then(|b| b.strip_suffix(']')) {
                let coords: Result<Vec<i64>, _> = body.split(',').map(|x| x.trim().parse::<i64>()).collect();
                let coords = coords.map_err(|_| PartError::Parse(format!("bad translation {tok:?}")))?;
                if coords.len() != r {
                    return Err(PartError::Parse(format!("translation {tok:?} needs {r} coordinates")));
                }
                Self { u: Perm::identity(r), beta: RootVec::new(coords)? }
            } else {
                return Err(PartError::Parse(format!("unknown token {tok:?}")));
            };
            acc = acc.compose(&g);
            rest = tail.trim_start();
        }
        Ok(acc)
    }

    /// Canonical text: the finite part as a reduced word then the translation.
    pub fn render(&self) -> String {
        let fin = Self::finite(self.u.clone());
        let mut toks: Vec<String> = fin.reduced_word().iter().map(|i| format!("s{i}")).collect();
        if self.beta.coords().iter().any(|&x| x != 0) {
            toks.push(format!("t{}", self.beta));
        }
        toks.join(" ")
    }
}

impl fmt::Display for AffineWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// An `I`-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition(pub Vec<Partition>);

impl MultiPartition {
    pub fn empty(r: usize) -> Self {
        Self(vec![Partition::empty(); r])
    }

    pub fn new(parts: Vec<Partition>) -> Self {
        Self(parts)
    }

    /// `lambda` placed in component `i`.
    pub fn single(r: usize, i: usize, lambda: Partition) -> Self {
        let mut v = vec![Partition::empty(); r];
        v[i] = lambda;
        Self(v)
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|p| p.size()).sum()
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i]
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    /// `(u mu)^{(u(i))} = mu^{(i)}`.
    pub fn permute(&self, u: &Perm) -> Self {
        let mut v = vec![Partition::empty(); self.r()];
        for (i, p) in self.0.iter().enumerate() {
            v[u.apply(i)] = p.clone();
        }
        Self(v)
    }

    /// Reverse of the componentwise transpose.
    pub fn star(&self) -> Self {
        Self(self.0.iter().rev().map(|p| p.transpose()).collect())
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.iter().map(|p| p.transpose()).collect())
    }

    /// Sizes of the components.
    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.size()).collect()
    }

    /// All `r`-multipartitions of total size `n`.
    pub fn all(r: usize, n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        fn rec(r: usize, n: usize, cur: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
            if cur.len() == r - 1 {
                for p in Partition::all(n) {
                    cur.push(p);
                    out.push(MultiPartition(cur.clone()));
                    cur.pop();
                }
                return;
            }
            for k in (0..=n).rev() {
                for p in Partition::all(k) {
                    cur.push(p);
                    rec(r, n - k, cur, out);
                    cur.pop();
                }
            }
        }
        rec(r, n, &mut Vec::new(), &mut out);
        out
    }

    /// Parse a JSON array of arrays, component 0 first.
    pub fn parse(text: &str) -> Result<Self, PartError> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| PartError::Parse(e.to_string()))?;
        let arr = v.as_array().ok_or_else(|| PartError::Parse("expected an array of arrays".into()))?;
        let mut comps = Vec::with_capacity(arr.len());
        for c in arr {
            let parts = c.as_array().ok_or_else(|| PartError::Parse("expected an array of arrays".into()))?;
            let mut p = Vec::with_capacity(parts.len());
            for x in parts {
                let k = x.as_u64().ok_or_else(|| PartError::Parse(format!("bad part {x}")))?;
                p.push(k as u32);
            }
            comps.push(Partition::try_from_parts(&p)?);
        }
        Ok(Self(comps))
    }

    /// Compact JSON form, e.g. `[[1],[],[2]]`.
    pub fn render(&self) -> String {
        let v: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        format!("[{}]", v.join(","))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
