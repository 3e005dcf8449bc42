use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::WreathError;
use crate::exactalg::{kernel_candidate, nullspace_vector, parse_ratfn, LaurentPoly2, RatFn2, Vars};
use crate::multisym::{id_minus, plethysm_schur_matrix, MultiSymFn};
use crate::partcomb::{tau_w, AffineWeylElt, MultiPartition, Partition};

/// Which family of wreath Macdonald polynomials to solve for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `H~^w`: `P_{id - q chi^-1}` upper, `P_{id - t^-1 chi^-1}` lower.
    Standard,
    /// `H^^w`: the same with `chi^-1` replaced by `chi`.
    Forward,
    /// `H~^w` for the dual order `lambda >=^op mu` iff `mu >=_w lambda`.
    Opposite,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Standard => "standard",
            Variant::Forward => "forward",
            Variant::Opposite => "opposite",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "standard" => Some(Variant::Standard),
            "forward" => Some(Variant::Forward),
            "opposite" => Some(Variant::Opposite),
            _ => None,
        }
    }

    fn chi_power(self) -> i64 {
        match self {
            Variant::Forward => 1,
            _ => -1,
        }
    }
}

/// Index of a wreath Macdonald polynomial. `w` is stored in `(u, beta)` form, which is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathKey {
    pub r: usize,
    pub w: AffineWeylElt,
    pub mu: MultiPartition,
    pub variant: Variant,
}

impl WreathKey {
    pub fn new(w: AffineWeylElt, mu: MultiPartition, variant: Variant) -> Self {
        assert_eq!(w.r(), mu.r(), "Weyl element and multipartition disagree on r");
        Self { r: w.r(), w, mu, variant }
    }

    pub fn standard(w: AffineWeylElt, mu: MultiPartition) -> Self {
        Self::new(w, mu, Variant::Standard)
    }

    pub fn n(&self) -> usize {
        self.mu.size()
    }

    pub fn with_mu(&self, mu: MultiPartition) -> Self {
        Self { mu, ..self.clone() }
    }

    pub fn canonical_json(&self) -> String {
        serde_json::json!({
            "r": self.r,
            "u": self.w.u.images(),
            "beta": self.w.beta.coords(),
            "mu": self.mu.render(),
            "variant": self.variant.name(),
        })
        .to_string()
    }

    pub fn digest(&self) -> String {
        let h = Sha256::digest(self.canonical_json().as_bytes());
        h.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Display for WreathKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "r={} w=\"{}\" mu={} {}", self.r, self.w, self.mu, self.variant.name())
    }
}

/// A solved polynomial in both representations.
#[derive(Clone, Debug)]
pub struct Solved {
    pub schur: BTreeMap<MultiPartition, RatFn2>,
    pub func: MultiSymFn,
}

/// Everything the solver needs that depends on `(r, w, n, variant)` but not on `mu`.
struct Setup {
    basis: Vec<MultiPartition>,
    taus: Vec<Partition>,
    q_mat: Vec<Vec<LaurentPoly2>>,
    t_mat: Vec<Vec<LaurentPoly2>>,
}

fn poly_matrix(m: &[Vec<RatFn2>]) -> Result<Vec<Vec<LaurentPoly2>>, WreathError> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|c| c.as_poly().cloned().ok_or_else(|| WreathError::Degenerate("plethysm matrix is not polynomial".into())))
                .collect()
        })
        .collect()
}

fn setup(r: usize, w: &AffineWeylElt, n: usize, variant: Variant) -> Result<Setup, WreathError> {
    let k = variant.chi_power();
    let q = id_minus(r, &RatFn2::q(), k);
    let t = id_minus(r, &RatFn2::mono(0, -1, Vars::QT), k);
    let q_mat = poly_matrix(&plethysm_schur_matrix(&q, n)?)?;
    let t_mat = poly_matrix(&plethysm_schur_matrix(&t, n)?)?;
    let basis = MultiPartition::all(r, n);
    let taus = basis.iter().map(|b| tau_w(w, b)).collect();
    Ok(Setup { basis, taus, q_mat, t_mat })
}

impl Setup {
    /// `lambda` is allowed in the support of the `q`-image of the polynomial indexed by `mu`.
    fn q_allowed(&self, variant: Variant, l: usize, m: usize) -> bool {
        match variant {
            Variant::Opposite => self.taus[m].dominates(&self.taus[l]),
            _ => self.taus[l].dominates(&self.taus[m]),
        }
    }

    fn t_allowed(&self, variant: Variant, l: usize, m: usize) -> bool {
        self.q_allowed(variant, m, l)
    }

    fn image(mat: &[Vec<LaurentPoly2>], v: &[RatFn2]) -> Vec<RatFn2> {
        mat.iter()
            .map(|row| {
                row.iter().zip(v).filter(|(_, x)| !x.is_zero()).fold(RatFn2::zero(), |acc, (a, x)| {
                    if a.is_zero() {
                        acc
                    } else {
                        acc + &RatFn2::from_poly(a.clone()) * x
                    }
                })
            })
            .collect()
    }

    fn solve(&self, variant: Variant, m: usize) -> Result<Vec<RatFn2>, String> {
        let d = self.basis.len();
        let mut rows = Vec::new();
        for l in 0..d {
            if !self.q_allowed(variant, l, m) {
                rows.push(self.q_mat[l].clone());
            }
            if !self.t_allowed(variant, l, m) {
                rows.push(self.t_mat[l].clone());
            }
        }
        // basis[0] is ((n), empty, ...), the normalizing coefficient.
        // A rank d-1 specialization bounds the kernel to a line, so a candidate that passes
        // the exact check is the solution; otherwise fall back to exact elimination.
        if let Some(v) = kernel_candidate(&rows, d, 0, Vars::QT) {
            let h: Vec<RatFn2> = v.into_iter().map(RatFn2::from_poly).collect();
            if self.verify(variant, m, &h).is_ok() {
                return Ok(h);
            }
        }
        let v = nullspace_vector(rows, d).map_err(|e| e.to_string())?.ok_or("constrained nullspace is not one-dimensional")?;
        let norm = &v[0];
        if norm.is_zero() {
            return Err("normalization coefficient vanishes".into());
        }
        let h: Vec<RatFn2> = v
            .iter()
            .map(|x| match x.exact_div(norm) {
                Some(p) => Ok(RatFn2::from_poly(p)),
                None => RatFn2::from_polys(x.clone(), norm.clone()).map_err(|e| e.to_string()),
            })
            .collect::<Result<_, _>>()?;
        self.verify(variant, m, &h)?;
        Ok(h)
    }

    /// Re-check all three defining conditions and the nonvanishing of both leading terms.
    fn verify(&self, variant: Variant, m: usize, h: &[RatFn2]) -> Result<(), String> {
        let qi = Self::image(&self.q_mat, h);
        let ti = Self::image(&self.t_mat, h);
        for l in 0..h.len() {
            if !qi[l].is_zero() && !self.q_allowed(variant, l, m) {
                return Err(format!("q-image has support on {}", self.basis[l]));
            }
            if !ti[l].is_zero() && !self.t_allowed(variant, l, m) {
                return Err(format!("t-image has support on {}", self.basis[l]));
            }
        }
        if qi[m].is_zero() || ti[m].is_zero() {
            return Err("a leading coefficient vanishes".into());
        }
        if !h[0].is_one() {
            return Err("normalization failed".into());
        }
        Ok(())
    }
}

type BlockKey = (AffineWeylElt, usize, Variant);

fn memory() -> &'static Mutex<HashMap<WreathKey, Arc<Solved>>> {
    static CACHE: OnceLock<Mutex<HashMap<WreathKey, Arc<Solved>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn store(basis: &[MultiPartition], h: Vec<RatFn2>, r: usize) -> Solved {
    let schur: BTreeMap<MultiPartition, RatFn2> =
        basis.iter().cloned().zip(h).filter(|(_, c)| !c.is_zero()).collect();
    let func = MultiSymFn::from_schur(r, schur.iter());
    Solved { schur, func }
}

/// Solve every `mu` of size `n` for the given `(w, variant)`, in parallel, filling the memory cache.
pub fn solve_block(w: &AffineWeylElt, n: usize, variant: Variant) -> Result<Vec<(MultiPartition, Arc<Solved>)>, WreathError> {
    let r = w.r();
    let basis = MultiPartition::all(r, n);
    let keys: Vec<WreathKey> = basis.iter().map(|m| WreathKey::new(w.clone(), m.clone(), variant)).collect();
    if keys.iter().all(|k| memory().lock().unwrap().contains_key(k)) {
        let mem = memory().lock().unwrap();
        return Ok(keys.iter().map(|k| (k.mu.clone(), mem[k].clone())).collect());
    }
    let setup = setup_cached(&(w.clone(), n, variant))?;
    let sols: Vec<Result<Arc<Solved>, WreathError>> = (0..basis.len())
        .into_par_iter()
        .map(|m| {
            if let Some(s) = memory().lock().unwrap().get(&keys[m]) {
                return Ok(s.clone());
            }
            let h = setup.solve(variant, m).map_err(|e| WreathError::Degenerate(format!("{}: {e}", keys[m])))?;
            let s = Arc::new(store(&setup.basis, h, r));
            memory().lock().unwrap().insert(keys[m].clone(), s.clone());
            Ok(s)
        })
        .collect();
    basis.into_iter().zip(sols).map(|(m, s)| s.map(|s| (m, s))).collect()
}

fn setup_cached(key: &BlockKey) -> Result<Arc<Setup>, WreathError> {
    static CACHE: OnceLock<Mutex<HashMap<BlockKey, Arc<Setup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().unwrap().get(key) {
        return Ok(s.clone());
    }
    let s = Arc::new(setup(key.0.r(), &key.0, key.1, key.2)?);
    cache.lock().unwrap().insert(key.clone(), s.clone());
    Ok(s)
}

/// `H~^w_mu` (or its forward / opposite-order variant) with its Schur expansion.
pub fn solve(key: &WreathKey) -> Result<Arc<Solved>, WreathError> {
    if let Some(s) = memory().lock().unwrap().get(key) {
        return Ok(s.clone());
    }
    let setup = setup_cached(&(key.w.clone(), key.n(), key.variant))?;
    let m = setup.basis.iter().position(|b| b == &key.mu).expect("mu is in its own degree");
    let h = setup.solve(key.variant, m).map_err(|e| WreathError::Degenerate(format!("{key}: {e}")))?;
    let s = Arc::new(store(&setup.basis, h, key.r));
    memory().lock().unwrap().insert(key.clone(), s.clone());
    Ok(s)
}

pub fn solve_h(key: &WreathKey) -> Result<MultiSymFn, WreathError> {
    Ok(solve(key)?.func.clone())
}

/// Content-addressed on-disk store of solved polynomials.
#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// `$WREATHMAC_CACHE`, or `.wreathmac-cache`.
    pub fn from_env() -> Self {
        Self::new(std::env::var_os("WREATHMAC_CACHE").map(PathBuf::from).unwrap_or_else(|| PathBuf::from(".wreathmac-cache")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &WreathKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest()))
    }

    pub fn load(&self, key: &WreathKey) -> Result<Option<Solved>, WreathError> {
        let path = self.path(key);
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(WreathError::Cache(format!("{}: {e}", path.display()))),
        };
        let bad = |why: &str| WreathError::Cache(format!("{}: {why}", path.display()));
        let doc: serde_json::Value = serde_json::from_str(&text).map_err(|e| bad(&e.to_string()))?;
        let terms = doc.get("terms").and_then(|t| t.as_object()).ok_or_else(|| bad("missing terms"))?;
        let mut schur = BTreeMap::new();
        for (k, v) in terms {
            let mu = MultiPartition::parse(k).map_err(|e| bad(&e.to_string()))?;
            let c = parse_ratfn(v.as_str().ok_or_else(|| bad("coefficient is not a string"))?, Vars::QT)
                .map_err(|e| bad(&e.to_string()))?;
            schur.insert(mu, c);
        }
        let func = MultiSymFn::from_schur(key.r, schur.iter());
        if func.render_schur(Vars::QT) != text {
            return Err(bad("entry does not round-trip"));
        }
        Ok(Some(Solved { schur, func }))
    }

    /// Write-then-rename, so concurrent writers never expose a partial file.
    pub fn save(&self, key: &WreathKey, s: &Solved) -> Result<(), WreathError> {
        let io = |e: std::io::Error| WreathError::Cache(format!("{}: {e}", self.dir.display()));
        std::fs::create_dir_all(&self.dir).map_err(io)?;
        let path = self.path(key);
        let tmp = self.dir.join(format!(".{}.{}.tmp", key.digest(), std::process::id()));
        std::fs::write(&tmp, s.func.render_schur(Vars::QT)).map_err(io)?;
        std::fs::rename(&tmp, &path).map_err(io)?;
        Ok(())
    }

    pub fn solve(&self, key: &WreathKey) -> Result<Arc<Solved>, WreathError> {
        if let Some(s) = self.load(key)? {
            let s = Arc::new(s);
            memory().lock().unwrap().insert(key.clone(), s.clone());
            return Ok(s);
        }
        let s = solve(key)?;
        self.save(key, &s)?;
        Ok(s)
    }
}
