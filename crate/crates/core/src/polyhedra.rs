//! Membership in `P(F)`, `B(F)`, `P₊(F)`, tight sets, exchangeable pairs and
//! the maximizer / face characterizations built on them.
//!
//! Everything here is exhaustive over `2^p` subsets and refuses ground sets
//! above the exhaustive cap. One additive tolerance governs all comparisons.

use crate::error::{Error, Result};
use crate::setfn::{check_cap, SetFunction, Subset, DEFAULT_EXHAUSTIVE_CAP};

fn check<F: SetFunction + ?Sized>(f: &F, s: &[f64]) -> Result<usize> {
    let p = f.ground_size();
    crate::setfn::check_len(p, s.len())?;
    check_cap(p, DEFAULT_EXHAUSTIVE_CAP)?;
    Ok(p)
}

/// `s(A) ⩽ F(A) + tol` for every `A`.
pub fn in_p<F: SetFunction + ?Sized>(f: &F, s: &[f64], tol: f64) -> Result<bool> {
    let p = check(f, s)?;
    Ok(first_violation(f, s, p, tol).is_none())
}

/// A subset with `s(A) > F(A) + tol`, if any.
pub fn first_violation<F: SetFunction + ?Sized>(
    f: &F,
    s: &[f64],
    p: usize,
    tol: f64,
) -> Option<Subset> {
    let n = 1usize << p;
    let mut sums = vec![0.0; n];
    for m in 1..n {
        let low = m.trailing_zeros() as usize;
        sums[m] = sums[m & (m - 1)] + s[low];
        if sums[m] > f.eval(Subset(m as u64)) + tol {
            return Some(Subset(m as u64));
        }
    }
    None
}

/// `s ∈ P(F)` and `|s(V) − F(V)| ⩽ tol`.
pub fn in_b<F: SetFunction + ?Sized>(f: &F, s: &[f64], tol: f64) -> Result<bool> {
    let p = check(f, s)?;
    let full = Subset::full(p);
    Ok((full.sum(s) - f.eval(full)).abs() <= tol && first_violation(f, s, p, tol).is_none())
}

/// `s ∈ P(F)` and `s ⩾ −tol` entrywise.
pub fn in_p_plus<F: SetFunction + ?Sized>(f: &F, s: &[f64], tol: f64) -> Result<bool> {
    let p = check(f, s)?;
    Ok(s.iter().all(|&v| v >= -tol) && first_violation(f, s, p, tol).is_none())
}

/// Sets `A` with `|s(A) − F(A)| ⩽ tol`, in increasing bitmask order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightFamily {
    sets: Vec<Subset>,
}

impl TightFamily {
    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn contains(&self, a: Subset) -> bool {
        self.sets.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Intersection of all tight sets containing `k`; `None` if no tight set does.
    pub fn smallest_containing(&self, k: usize) -> Option<Subset> {
        self.sets
            .iter()
            .filter(|a| a.contains(k))
            .fold(None, |acc: Option<Subset>, &a| {
                Some(acc.map_or(a, |b| b.intersection(a)))
            })
    }

    fn check_lattice(&self) -> Result<()> {
        // Full pairwise closure check is quadratic; above this size a stride
        // sample of partners is used.
        const FULL_CHECK: usize = 1024;
        let n = self.sets.len();
        let stride = if n <= FULL_CHECK { 1 } else { n / FULL_CHECK + 1 };
        for (i, &a) in self.sets.iter().enumerate() {
            for &b in self.sets[i..].iter().step_by(stride) {
                for c in [a.union(b), a.intersection(b)] {
                    if !self.contains(c) {
                        return Err(Error::NumericalInconsistency(format!(
                            "tight sets {a:?} and {b:?} combine into non-tight {c:?}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// All tight sets of `s`, verified to form a lattice.
pub fn tight_sets<F: SetFunction + ?Sized>(f: &F, s: &[f64], tol: f64) -> Result<TightFamily> {
    let p = check(f, s)?;
    let sets = Subset::full(p)
        .subsets()
        .filter(|&a| (a.sum(s) - f.eval(a)).abs() <= tol)
        .collect();
    let fam = TightFamily { sets };
    fam.check_lattice()?;
    Ok(fam)
}

/// `Dep(s, k)`: the smallest tight set containing `k`, for `s ∈ B(F)`.
pub fn dep<F: SetFunction + ?Sized>(f: &F, s: &[f64], k: usize, tol: f64) -> Result<Subset> {
    let fam = tight_sets(f, s, tol)?;
    dep_in(&fam, k)
}

fn dep_in(fam: &TightFamily, k: usize) -> Result<Subset> {
    fam.smallest_containing(k).ok_or_else(|| {
        Error::Precondition(format!("no tight set contains {k}; s is not a base"))
    })
}

/// Exchangeable pairs `(k, q)` with `q ∈ Dep(s, k)` and `q ≠ k`.
pub fn exchangeable_pairs<F: SetFunction + ?Sized>(
    f: &F,
    s: &[f64],
    tol: f64,
) -> Result<Vec<(usize, usize)>> {
    let fam = tight_sets(f, s, tol)?;
    let mut pairs = Vec::new();
    for k in 0..s.len() {
        for q in dep_in(&fam, k)?.iter() {
            if q != k {
                pairs.push((k, q));
            }
        }
    }
    Ok(pairs)
}

/// Distinct values of `w`, descending, each with its level block.
pub fn level_blocks(w: &[f64]) -> Vec<(f64, Subset)> {
    let mut vals: Vec<f64> = w.to_vec();
    vals.sort_by(|a, b| b.total_cmp(a));
    vals.dedup();
    vals.into_iter()
        .map(|v| {
            let block = w
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == v)
                .map(|(k, _)| k)
                .collect();
            (v, block)
        })
        .collect()
}

/// Whether `s ∈ B(F)` maximizes `wᵀs` over `B(F)`: every upper level set of `w` is tight.
pub fn is_base_maximizer<F: SetFunction + ?Sized>(
    f: &F,
    s: &[f64],
    w: &[f64],
    tol: f64,
) -> Result<bool> {
    check(f, s)?;
    crate::setfn::check_len(s.len(), w.len())?;
    let mut prefix = Subset::EMPTY;
    for (_, block) in level_blocks(w) {
        prefix = prefix.union(block);
        if (prefix.sum(s) - f.eval(prefix)).abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Same question through exchangeable pairs: `w_k ⩽ w_q` whenever `q ∈ Dep(s, k)`.
pub fn is_base_maximizer_exchange<F: SetFunction + ?Sized>(
    f: &F,
    s: &[f64],
    w: &[f64],
    tol: f64,
) -> Result<bool> {
    crate::setfn::check_len(s.len(), w.len())?;
    Ok(exchangeable_pairs(f, s, tol)?
        .into_iter()
        .all(|(k, q)| w[k] <= w[q]))
}

/// Maximizer test over `P₊(F)` for non-decreasing `F`: negative-value blocks
/// carry `s = 0` and the prefixes up to non-negative values are tight.
pub fn is_p_plus_maximizer<F: SetFunction + ?Sized>(
    f: &F,
    s: &[f64],
    w: &[f64],
    tol: f64,
) -> Result<bool> {
    check(f, s)?;
    crate::setfn::check_len(s.len(), w.len())?;
    let mut prefix = Subset::EMPTY;
    for (v, block) in level_blocks(w) {
        prefix = prefix.union(block);
        if v < 0.0 {
            if block.iter().any(|k| s[k].abs() > tol) {
                return Ok(false);
            }
        } else if (prefix.sum(s) - f.eval(prefix)).abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A split `∅ ≠ B ⊊ A` with `F(A) = F(B) + F(A∖B)`, or `None` when `A` is inseparable.
pub fn separable_witness<F: SetFunction + ?Sized>(
    f: &F,
    a: Subset,
    tol: f64,
) -> Result<Option<Subset>> {
    if a.is_empty() {
        return Err(Error::InvalidArgument("separability of the empty set".into()));
    }
    check_cap(a.len(), DEFAULT_EXHAUSTIVE_CAP)?;
    let fa = f.eval(a);
    Ok(a.subsets()
        .filter(|&b| !b.is_empty() && b != a)
        .find(|&b| (fa - f.eval(b) - f.eval(a.difference(b))).abs() <= tol))
}

/// Disjoint non-empty blocks `A_1, …, A_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    blocks: Vec<Subset>,
}

impl OrderedPartition {
    /// Blocks must be disjoint, non-empty, and cover `{0, .., p-1}`.
    pub fn new(blocks: Vec<Subset>, p: usize) -> Result<Self> {
        let part = Self::of_subset(blocks)?;
        if part.union() != Subset::full(p) {
            return Err(Error::InvalidArgument("partition does not cover V".into()));
        }
        Ok(part)
    }

    /// Blocks partition their own union (e.g. a stable set for `P₊` faces).
    pub fn of_subset(blocks: Vec<Subset>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidArgument("partition needs at least one block".into()));
        }
        let mut seen = Subset::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block in partition".into()));
            }
            if !b.intersection(seen).is_empty() {
                return Err(Error::InvalidArgument("overlapping blocks in partition".into()));
            }
            seen = seen.union(b);
        }
        Ok(OrderedPartition { blocks })
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn union(&self) -> Subset {
        self.blocks.iter().fold(Subset::EMPTY, |u, &b| u.union(b))
    }
}

/// Whether each `A_j` is inseparable for `B ↦ F(A_1∪…∪A_{j−1}∪B) − F(A_1∪…∪A_{j−1})`,
/// i.e. the partition spans a face of `B(F)` with non-empty relative interior.
pub fn face_check<F: SetFunction + ?Sized>(
    f: &F,
    partition: &OrderedPartition,
    tol: f64,
) -> Result<bool> {
    check_cap(f.ground_size(), DEFAULT_EXHAUSTIVE_CAP)?;
    let mut before = Subset::EMPTY;
    for &block in partition.blocks() {
        let base = f.eval(before);
        let g = |b: Subset| f.eval(before.union(b)) - base;
        let gb = g(block);
        let separable = block
            .subsets()
            .filter(|&b| !b.is_empty() && b != block)
            .any(|b| (gb - g(b) - g(block.difference(b))).abs() <= tol);
        if separable {
            return Ok(false);
        }
        before = before.union(block);
    }
    Ok(true)
}
