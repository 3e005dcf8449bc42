use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::partcomb::Partition;

/// The character table of `S_n`: `value(lambda, rho) = chi^lambda(rho)`.
#[derive(Debug)]
pub struct CharTable {
    pub parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn index(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.index(lambda)][self.index(rho)]
    }

    pub fn value_idx(&self, l: usize, r: usize) -> i64 {
        self.values[l][r]
    }
}

/// Character table of degree `n`, computed once per process.
pub fn char_table(n: usize) -> Arc<CharTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let parts = Partition::all(n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut memo = HashMap::new();
    let values = parts.iter().map(|l| parts.iter().map(|r| mn(l, r.parts(), &mut memo)).collect()).collect();
    let table = Arc::new(CharTable { parts, index, values });
    cache.lock().unwrap().insert(n, table.clone());
    table
}

/// Murnaghan-Nakayama on beta-sets: strip a rim hook of length `rho[0]`.
fn mn(lambda: &Partition, rho: &[u32], memo: &mut HashMap<(Partition, Vec<u32>), i64>) -> i64 {
    if rho.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.clone(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = rho[0] as i64;
    let l = lambda.len();
    let beta: Vec<i64> = (0..l).map(|j| lambda.part(j) as i64 + (l - 1 - j) as i64).collect();
    let mut total = 0;
    for j in 0..l {
        let target = beta[j] - k;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&b| b > target && b < beta[j]).count();
        let mut nb = beta.clone();
        nb[j] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = (0..l).map(|i| (nb[i] - (l - 1 - i) as i64) as u32).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&Partition::new(parts), &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// `z_lambda = prod_i i^{m_i} m_i!`.
pub fn z(lambda: &Partition) -> BigInt {
    let mut out = BigInt::from(1);
    let parts = lambda.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let m = j - i;
        for k in 1..=m {
            out *= BigInt::from(parts[i]) * BigInt::from(k);
        }
        i = j;
    }
    out
}

pub fn z_rat(lambda: &Partition) -> BigRational {
    BigRational::from_integer(z(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_table() {
        let t = char_table(3);
        let p = |v: &[u32]| Partition::new(v.to_vec());
        assert_eq!(t.value(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(t.value(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(t.value(&p(&[1, 1, 1]), &p(&[2, 1])), -1);
        assert_eq!(z(&p(&[2, 1, 1])), BigInt::from(4));
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let t = char_table(n);
            for (a, ra) in t.parts.iter().enumerate() {
                for (b, _) in t.parts.iter().enumerate() {
                    let s: i64 = (0..t.parts.len()).map(|l| t.value_idx(l, a) * t.value_idx(l, b)).sum();
                    let expect = if a == b { z(ra) } else { BigInt::from(0) };
                    assert_eq!(BigInt::from(s), expect);
                }
            }
        }
    }
}
