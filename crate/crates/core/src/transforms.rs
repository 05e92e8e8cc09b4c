//! Constructions that preserve submodularity.
//!
//! All transforms are lazy oracles over an inner function. Restriction,
//! contraction and partial minimization re-index onto a compact ground set and
//! expose the map back to the original indices.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::setfn::{
    check_cap, check_len, check_p, to_explicit, Explicit, SetFunction, SharedFn, Subset,
    DEFAULT_EXHAUSTIVE_CAP,
};

/// Maps a subset of the compact ground set back to original indices.
fn scatter(map: &[usize], b: Subset) -> Subset {
    b.iter().map(|k| map[k]).collect()
}

fn compact_map(kept: Subset) -> Result<Vec<usize>> {
    let map = kept.to_vec();
    check_p(map.len())?;
    Ok(map)
}

/// `F_A(B) = F(B)` for `B ⊆ A`, re-indexed so that new element `i` is `map[i]`.
pub struct Restricted<F> {
    inner: F,
    map: Vec<usize>,
}

pub fn restrict<F: SetFunction>(f: F, a: Subset) -> Result<Restricted<F>> {
    if !a.is_subset_of(Subset::full(f.ground_size())) {
        return Err(Error::InvalidArgument("restriction set outside V".into()));
    }
    let map = compact_map(a)?;
    Ok(Restricted { inner: f, map })
}

impl<F> Restricted<F> {
    /// `map[i]` is the original index of new element `i`.
    pub fn index_map(&self) -> &[usize] {
        &self.map
    }

    pub fn lift(&self, b: Subset) -> Subset {
        scatter(&self.map, b)
    }
}

impl<F: SetFunction> SetFunction for Restricted<F> {
    fn ground_size(&self) -> usize {
        self.map.len()
    }
    fn eval(&self, b: Subset) -> f64 {
        self.inner.eval(scatter(&self.map, b))
    }
}

/// `F^A(B) = F(A ∪ B) − F(A)` on `V∖A`.
pub struct Contracted<F> {
    inner: F,
    base: Subset,
    offset: f64,
    map: Vec<usize>,
}

pub fn contract<F: SetFunction>(f: F, a: Subset) -> Result<Contracted<F>> {
    let p = f.ground_size();
    if !a.is_subset_of(Subset::full(p)) {
        return Err(Error::InvalidArgument("contraction set outside V".into()));
    }
    let map = compact_map(a.complement(p))?;
    let offset = f.eval(a);
    Ok(Contracted {
        inner: f,
        base: a,
        offset,
        map,
    })
}

impl<F> Contracted<F> {
    pub fn index_map(&self) -> &[usize] {
        &self.map
    }

    pub fn lift(&self, b: Subset) -> Subset {
        scatter(&self.map, b)
    }
}

impl<F: SetFunction> SetFunction for Contracted<F> {
    fn ground_size(&self) -> usize {
        self.map.len()
    }
    fn eval(&self, b: Subset) -> f64 {
        if b.is_empty() {
            return 0.0;
        }
        self.inner.eval(self.base.union(scatter(&self.map, b))) - self.offset
    }
}

/// `F(A) = min_{B⊆W} G(A∪B) − min_{B⊆W} G(B)` on the complement of `W`.
pub struct PartialMin<F> {
    inner: F,
    hidden: Subset,
    offset: f64,
    map: Vec<usize>,
    memo: RwLock<HashMap<u64, f64>>,
}

pub fn partial_min<F: SetFunction>(g: F, hidden: Subset) -> Result<PartialMin<F>> {
    let p = g.ground_size();
    if !hidden.is_subset_of(Subset::full(p)) {
        return Err(Error::InvalidArgument("minimized set outside the ground set".into()));
    }
    check_cap(hidden.len(), DEFAULT_EXHAUSTIVE_CAP)?;
    let map = compact_map(hidden.complement(p))?;
    let offset = min_over_hidden(&g, hidden, Subset::EMPTY);
    Ok(PartialMin {
        inner: g,
        hidden,
        offset,
        map,
        memo: RwLock::new(HashMap::new()),
    })
}

fn min_over_hidden<F: SetFunction>(g: &F, hidden: Subset, a: Subset) -> f64 {
    hidden
        .subsets()
        .map(|b| g.eval(a.union(b)))
        .fold(f64::INFINITY, f64::min)
}

impl<F> PartialMin<F> {
    pub fn index_map(&self) -> &[usize] {
        &self.map
    }
}

impl<F: SetFunction> SetFunction for PartialMin<F> {
    fn ground_size(&self) -> usize {
        self.map.len()
    }
    fn eval(&self, a: Subset) -> f64 {
        if a.is_empty() {
            return 0.0;
        }
        if let Some(v) = self.memo.read().ok().and_then(|m| m.get(&a.bits()).copied()) {
            return v;
        }
        let v = min_over_hidden(&self.inner, self.hidden, scatter(&self.map, a)) - self.offset;
        if let Ok(mut m) = self.memo.write() {
            m.insert(a.bits(), v);
        }
        v
    }
}

/// `G(A) = min_{B⊆A} F(B) + z(A∖B)`, whose submodular polyhedron is `P(F) ∩ {s ⩽ z}`.
pub struct ConvolvedModular<F> {
    inner: F,
    z: Vec<f64>,
}

pub fn convolve_modular<F: SetFunction>(f: F, z: Vec<f64>) -> Result<ConvolvedModular<F>> {
    check_len(f.ground_size(), z.len())?;
    check_cap(f.ground_size(), DEFAULT_EXHAUSTIVE_CAP)?;
    Ok(ConvolvedModular { inner: f, z })
}

impl<F: SetFunction> SetFunction for ConvolvedModular<F> {
    fn ground_size(&self) -> usize {
        self.z.len()
    }
    fn eval(&self, a: Subset) -> f64 {
        a.subsets()
            .map(|b| self.inner.eval(b) + a.difference(b).sum(&self.z))
            .fold(f64::INFINITY, f64::min)
    }
}

/// `G(A) = min_{B⊇A} F(B) − min_B F(B)`, non-decreasing and below `F`.
///
/// When `min_B F(B) = 0` (e.g. `F ⩾ 0`), `B(G) = B(F) ∩ {s ⩾ 0}`. Otherwise
/// `G(V) > F(V)` and the two base polyhedra are disjoint.
pub struct Monotonized<F> {
    inner: F,
    offset: f64,
}

pub fn monotonize<F: SetFunction>(f: F) -> Result<Monotonized<F>> {
    let p = f.ground_size();
    check_cap(p, DEFAULT_EXHAUSTIVE_CAP)?;
    let offset = Subset::full(p)
        .subsets()
        .map(|b| f.eval(b))
        .fold(f64::INFINITY, f64::min);
    Ok(Monotonized { inner: f, offset })
}

impl<F: SetFunction> SetFunction for Monotonized<F> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }
    fn eval(&self, a: Subset) -> f64 {
        let rest = a.complement(self.inner.ground_size());
        rest.subsets()
            .map(|c| self.inner.eval(a.union(c)))
            .fold(f64::INFINITY, f64::min)
            - self.offset
    }
}

/// Pointwise sum of functions on a common ground set.
pub struct Sum {
    parts: Vec<SharedFn>,
}

pub fn add(parts: Vec<SharedFn>) -> Result<Sum> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidArgument("sum of no functions".into()))?;
    let p = first.ground_size();
    for g in &parts {
        check_len(p, g.ground_size())?;
    }
    Ok(Sum { parts })
}

impl SetFunction for Sum {
    fn ground_size(&self) -> usize {
        self.parts[0].ground_size()
    }
    fn eval(&self, a: Subset) -> f64 {
        self.parts.iter().map(|g| g.eval(a)).sum()
    }
}

/// `λ F` for `λ ⩾ 0`.
pub struct Scaled<F> {
    inner: F,
    lambda: f64,
}

pub fn scale<F: SetFunction>(f: F, lambda: f64) -> Result<Scaled<F>> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::NegativeScale(lambda));
    }
    Ok(Scaled { inner: f, lambda })
}

impl<F: SetFunction> SetFunction for Scaled<F> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }
    fn eval(&self, a: Subset) -> f64 {
        self.lambda * self.inner.eval(a)
    }
}

/// `F + s` for a modular `s`.
pub struct PlusModular<F> {
    inner: F,
    s: Vec<f64>,
}

pub fn add_modular<F: SetFunction>(f: F, s: Vec<f64>) -> Result<PlusModular<F>> {
    check_len(f.ground_size(), s.len())?;
    Ok(PlusModular { inner: f, s })
}

impl<F: SetFunction> SetFunction for PlusModular<F> {
    fn ground_size(&self) -> usize {
        self.s.len()
    }
    fn eval(&self, a: Subset) -> f64 {
        self.inner.eval(a) + a.sum(&self.s)
    }
}

/// Group weights `D` (indexed by bitmask, `D(∅) = 0`) with
/// `F(A) = Σ_G D(G) − Σ_{G⊆V∖A} D(G)`, obtained as
/// `D(G) = Σ_{A⊆G} (−1)^{|G|−|A|} [F(V) − F(V∖A)]`.
pub fn mobius<F: SetFunction + ?Sized>(f: &F) -> Result<Vec<f64>> {
    let table = to_explicit(f)?;
    let full = table.len() - 1;
    let mut d: Vec<f64> = (0..table.len()).map(|a| table[full] - table[full & !a]).collect();
    let p = f.ground_size();
    for k in 0..p {
        for m in 0..d.len() {
            if m >> k & 1 == 1 {
                d[m] -= d[m ^ (1 << k)];
            }
        }
    }
    Ok(d)
}

/// Inverse of [`mobius`].
pub fn mobius_reconstruct(d: &[f64]) -> Result<Explicit> {
    let n = d.len();
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::InvalidArgument("Möbius table length is not 2^p".into()));
    }
    let p = n.trailing_zeros() as usize;
    check_cap(p, DEFAULT_EXHAUSTIVE_CAP)?;
    // zeta[B] = Σ_{G⊆B} D(G)
    let mut zeta = d.to_vec();
    for k in 0..p {
        for m in 0..n {
            if m >> k & 1 == 1 {
                zeta[m] += zeta[m ^ (1 << k)];
            }
        }
    }
    let full = n - 1;
    let total = zeta[full];
    let values = (0..n).map(|a| total - zeta[full & !a]).collect();
    Explicit::new(values)
}
