use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use super::subset::{check_cap, GroundSet, Subset, DEFAULT_EXHAUSTIVE_CAP};
use crate::error::{Error, Result};

/// An evaluation oracle `A ↦ F(A)` over the ground set `{0, .., p-1}` with `F(∅) = 0`.
///
/// Implementations must be deterministic and safe to evaluate from several
/// threads at once.
pub trait SetFunction: Send + Sync {
    fn ground_size(&self) -> usize;

    fn eval(&self, a: Subset) -> f64;

    fn ground_set(&self) -> GroundSet {
        GroundSet::new(self.ground_size()).expect("set function with invalid ground set")
    }
}

/// Shared, type-erased set function; the currency of transforms and the CLI.
pub type SharedFn = Arc<dyn SetFunction>;

impl<T: SetFunction + ?Sized> SetFunction for Arc<T> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn eval(&self, a: Subset) -> f64 {
        (**self).eval(a)
    }
}

impl<T: SetFunction + ?Sized> SetFunction for &T {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn eval(&self, a: Subset) -> f64 {
        (**self).eval(a)
    }
}

impl<T: SetFunction + ?Sized> SetFunction for Box<T> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn eval(&self, a: Subset) -> f64 {
        (**self).eval(a)
    }
}

/// Evaluates `F(A)`, checking that `A` lives in the ground set.
pub fn evaluate<F: SetFunction + ?Sized>(f: &F, a: Subset) -> Result<f64> {
    let p = f.ground_size();
    if !a.is_subset_of(Subset::full(p)) {
        return Err(Error::InvalidArgument(format!(
            "subset {a:?} is outside the ground set of size {p}"
        )));
    }
    Ok(f.eval(a))
}

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        Err(Error::DimensionMismatch { expected, got })
    } else {
        Ok(())
    }
}

pub(crate) fn check_p(p: usize) -> Result<()> {
    GroundSet::new(p).map(|_| ())
}

/// Full table of values, indexed by bitmask.
pub fn to_explicit<F: SetFunction + ?Sized>(f: &F) -> Result<Vec<f64>> {
    to_explicit_capped(f, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn to_explicit_capped<F: SetFunction + ?Sized>(f: &F, cap: usize) -> Result<Vec<f64>> {
    let p = f.ground_size();
    check_cap(p, cap)?;
    Ok((0..(1u64 << p)).map(|m| f.eval(Subset(m))).collect())
}

/// A set function stored as its table of `2^p` values.
#[derive(Debug, Clone, PartialEq)]
pub struct Explicit {
    p: usize,
    values: Vec<f64>,
}

impl Explicit {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "table length {n} is not 2^p with p >= 1"
            )));
        }
        let p = n.trailing_zeros() as usize;
        check_p(p)?;
        if values[0] != 0.0 {
            return Err(Error::NonZeroEmpty(values[0]));
        }
        Ok(Explicit { p, values })
    }

    /// Materializes any oracle (`p` must be within the default cap).
    pub fn from_function<F: SetFunction + ?Sized>(f: &F) -> Result<Self> {
        Ok(Explicit {
            p: f.ground_size(),
            values: to_explicit(f)?,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

impl SetFunction for Explicit {
    fn ground_size(&self) -> usize {
        self.p
    }
    fn eval(&self, a: Subset) -> f64 {
        self.values[a.bits() as usize]
    }
}

/// `s(A) = Σ_{k∈A} s_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Modular {
    s: Vec<f64>,
}

impl Modular {
    pub fn new(s: Vec<f64>) -> Result<Self> {
        check_p(s.len())?;
        if s.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("modular weights must be finite".into()));
        }
        Ok(Modular { s })
    }

    pub fn weights(&self) -> &[f64] {
        &self.s
    }
}

impl SetFunction for Modular {
    fn ground_size(&self) -> usize {
        self.s.len()
    }
    fn eval(&self, a: Subset) -> f64 {
        a.sum(&self.s)
    }
}

/// `F(A) = |A|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cardinality {
    p: usize,
}

impl Cardinality {
    pub fn new(p: usize) -> Result<Self> {
        check_p(p)?;
        Ok(Cardinality { p })
    }
}

impl SetFunction for Cardinality {
    fn ground_size(&self) -> usize {
        self.p
    }
    fn eval(&self, a: Subset) -> f64 {
        a.len() as f64
    }
}

/// Wraps a closure as a set function.
pub struct FnOracle<G> {
    p: usize,
    f: G,
}

impl<G> FnOracle<G>
where
    G: Fn(Subset) -> f64 + Send + Sync,
{
    /// Fails with [`Error::NonZeroEmpty`] when `f(∅) ≠ 0`; see [`shift_to_zero`].
    pub fn new(p: usize, f: G) -> Result<Self> {
        check_p(p)?;
        let at_empty = f(Subset::EMPTY);
        if at_empty != 0.0 {
            return Err(Error::NonZeroEmpty(at_empty));
        }
        Ok(FnOracle { p, f })
    }
}

impl<G> SetFunction for FnOracle<G>
where
    G: Fn(Subset) -> f64 + Send + Sync,
{
    fn ground_size(&self) -> usize {
        self.p
    }
    fn eval(&self, a: Subset) -> f64 {
        (self.f)(a)
    }
}

impl<G> fmt::Debug for FnOracle<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FnOracle").field("p", &self.p).finish()
    }
}

/// Builds `A ↦ f(A) − f(∅)` from an oracle that need not vanish at `∅`.
pub fn shift_to_zero<G>(p: usize, f: G) -> Result<impl SetFunction>
where
    G: Fn(Subset) -> f64 + Send + Sync,
{
    let at_empty = f(Subset::EMPTY);
    FnOracle::new(p, move |a| if a.is_empty() { 0.0 } else { f(a) - at_empty })
}

/// Caches values of an inner oracle keyed by raw bitmask.
pub struct Memoized<F> {
    inner: F,
    cache: RwLock<HashMap<u64, f64>>,
}

impl<F: SetFunction> Memoized<F> {
    pub fn new(inner: F) -> Self {
        Memoized {
            inner,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn cached_len(&self) -> usize {
        self.cache.read().map(|c| c.len()).unwrap_or(0)
    }

    pub fn inner(&self) -> &F {
        &self.inner
    }
}

impl<F: SetFunction> SetFunction for Memoized<F> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn eval(&self, a: Subset) -> f64 {
        if let Some(v) = self.cache.read().ok().and_then(|c| c.get(&a.bits()).copied()) {
            return v;
        }
        let v = self.inner.eval(a);
        if let Ok(mut c) = self.cache.write() {
            c.insert(a.bits(), v);
        }
        v
    }
}
