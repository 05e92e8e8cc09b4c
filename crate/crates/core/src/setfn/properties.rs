//! Exhaustive checks of submodularity and related properties.
//!
//! Every checker materializes the full table first, so the cost is `2^p`
//! oracle calls plus the combinatorial scan over the table.

use super::function::{to_explicit_capped, SetFunction};
use super::subset::{Subset, DEFAULT_EXHAUSTIVE_CAP};
use crate::error::Result;

pub const DEFAULT_TOL: f64 = 1e-9;

/// The second object of a violated inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WitnessPart {
    Set(Subset),
    Pair(usize, usize),
    Element(usize),
    None,
}

/// A violated inequality `lhs ⩾ rhs` (violated by more than the tolerance).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub a: Subset,
    pub other: WitnessPart,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropertyReport {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    fn ok() -> Self {
        PropertyReport {
            holds: true,
            witness: None,
        }
    }

    fn violated(w: Witness) -> Self {
        PropertyReport {
            holds: false,
            witness: Some(w),
        }
    }
}

/// Options shared by the exhaustive checkers.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub tol: f64,
    pub cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            tol: DEFAULT_TOL,
            cap: DEFAULT_EXHAUSTIVE_CAP,
        }
    }
}

impl CheckOptions {
    pub fn with_tol(tol: f64) -> Self {
        CheckOptions {
            tol,
            ..Default::default()
        }
    }
}

/// Second-order test: `F(A∪k) − F(A) ⩾ F(A∪{j,k}) − F(A∪j)` for all `A`, distinct `j,k ∉ A`.
pub fn is_submodular<F: SetFunction + ?Sized>(f: &F, tol: f64) -> Result<PropertyReport> {
    is_submodular_with(f, CheckOptions::with_tol(tol))
}

pub fn is_submodular_with<F: SetFunction + ?Sized>(
    f: &F,
    opts: CheckOptions,
) -> Result<PropertyReport> {
    let table = to_explicit_capped(f, opts.cap)?;
    Ok(submodular_on_table(&table, opts.tol))
}

pub(crate) fn submodular_on_table(table: &[f64], tol: f64) -> PropertyReport {
    let p = table.len().trailing_zeros() as usize;
    for a in 0..table.len() {
        for j in 0..p {
            if a >> j & 1 == 1 {
                continue;
            }
            for k in (j + 1)..p {
                if a >> k & 1 == 1 {
                    continue;
                }
                let (aj, ak, ajk) = (a | 1 << j, a | 1 << k, a | 1 << j | 1 << k);
                let lhs = table[ak] - table[a];
                let rhs = table[ajk] - table[aj];
                if lhs < rhs - tol {
                    return PropertyReport::violated(Witness {
                        a: Subset(a as u64),
                        other: WitnessPart::Pair(j, k),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    PropertyReport::ok()
}

/// Direct pairwise test `F(A) + F(B) ⩾ F(A∪B) + F(A∩B)`; quadratic in `2^p`.
pub fn is_submodular_pairwise<F: SetFunction + ?Sized>(
    f: &F,
    opts: CheckOptions,
) -> Result<PropertyReport> {
    let table = to_explicit_capped(f, opts.cap)?;
    let n = table.len();
    for a in 0..n {
        for b in (a + 1)..n {
            let lhs = table[a] + table[b];
            let rhs = table[a | b] + table[a & b];
            if lhs < rhs - opts.tol {
                return Ok(PropertyReport::violated(Witness {
                    a: Subset(a as u64),
                    other: WitnessPart::Set(Subset(b as u64)),
                    lhs,
                    rhs,
                }));
            }
        }
    }
    Ok(PropertyReport::ok())
}

/// Non-decreasing: `F(A∪k) ⩾ F(A)` for all `A` and `k ∉ A`.
pub fn is_monotone<F: SetFunction + ?Sized>(f: &F, opts: CheckOptions) -> Result<PropertyReport> {
    let table = to_explicit_capped(f, opts.cap)?;
    let p = table.len().trailing_zeros() as usize;
    for a in 0..table.len() {
        for k in 0..p {
            if a >> k & 1 == 1 {
                continue;
            }
            let lhs = table[a | 1 << k];
            let rhs = table[a];
            if lhs < rhs - opts.tol {
                return Ok(PropertyReport::violated(Witness {
                    a: Subset(a as u64),
                    other: WitnessPart::Element(k),
                    lhs,
                    rhs,
                }));
            }
        }
    }
    Ok(PropertyReport::ok())
}

/// `F(V∖A) = F(A)` for all `A`; the witness reports `F(A)` and `F(V∖A)`.
pub fn is_symmetric<F: SetFunction + ?Sized>(f: &F, opts: CheckOptions) -> Result<PropertyReport> {
    let table = to_explicit_capped(f, opts.cap)?;
    let full = table.len() - 1;
    for a in 0..table.len() {
        let c = full & !a;
        if (table[a] - table[c]).abs() > opts.tol {
            return Ok(PropertyReport::violated(Witness {
                a: Subset(a as u64),
                other: WitnessPart::Set(Subset(c as u64)),
                lhs: table[a],
                rhs: table[c],
            }));
        }
    }
    Ok(PropertyReport::ok())
}

/// `F(A) + F(B) ⩾ F(A∖B) + F(B∖A)` for all pairs.
pub fn is_posimodular<F: SetFunction + ?Sized>(
    f: &F,
    opts: CheckOptions,
) -> Result<PropertyReport> {
    let table = to_explicit_capped(f, opts.cap)?;
    let n = table.len();
    for a in 0..n {
        for b in a..n {
            let lhs = table[a] + table[b];
            let rhs = table[a & !b] + table[b & !a];
            if lhs < rhs - opts.tol {
                return Ok(PropertyReport::violated(Witness {
                    a: Subset(a as u64),
                    other: WitnessPart::Set(Subset(b as u64)),
                    lhs,
                    rhs,
                }));
            }
        }
    }
    Ok(PropertyReport::ok())
}
