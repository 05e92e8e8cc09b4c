//! Brute-force oracles and instance generators shared by the integration tests.
//!
//! Everything here recomputes from raw tables with plain loops, so it does not
//! share code paths with the library routines it checks.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use submodular::setfn::{random_submodular, to_explicit, BaseFamily, Family, SharedFn};
use submodular::zoo::Digraph;
use submodular::{SetFunction, Subset};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn table<F: SetFunction + ?Sized>(f: &F) -> Vec<f64> {
    to_explicit(f).unwrap()
}

/// Families used for random instances, cycling through every generator.
pub fn family(i: usize) -> Family {
    Family::ALL[i % Family::ALL.len()]
}

pub fn instance(seed: u64, p: usize) -> SharedFn {
    random_submodular(seed, p, family(seed as usize)).unwrap()
}

pub fn shifted_instance(seed: u64, p: usize) -> SharedFn {
    let base = [BaseFamily::Cut, BaseFamily::Cover, BaseFamily::LogDet][seed as usize % 3];
    random_submodular(seed, p, Family::shifted(base)).unwrap()
}

pub fn random_vec(rng: &mut ChaCha8Rng, p: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..p).map(|_| rng.gen_range(lo..hi)).collect()
}

pub fn random_digraph(rng: &mut ChaCha8Rng, p: usize) -> Digraph {
    let mut arcs = Vec::new();
    for k in 0..p {
        for j in 0..p {
            if k != j && rng.gen_bool(0.4) {
                arcs.push((k, j, rng.gen_range(0.0..2.0)));
            }
        }
    }
    Digraph::new(p, &arcs).unwrap()
}

pub fn subset_sum(mask: usize, s: &[f64]) -> f64 {
    (0..s.len()).filter(|k| mask >> k & 1 == 1).map(|k| s[k]).sum()
}

/// Exact minimum with the intersection and union of all minimizers.
pub fn brute_min(t: &[f64], tie: f64) -> (f64, Subset, Subset) {
    let min = t.iter().copied().fold(f64::INFINITY, f64::min);
    let mut lo = usize::MAX;
    let mut hi = 0usize;
    for (m, &v) in t.iter().enumerate() {
        if v <= min + tie {
            lo &= m;
            hi |= m;
        }
    }
    let bits = t.len().trailing_zeros();
    let lo = lo & ((1usize << bits) - 1);
    (min, Subset(lo as u64), Subset(hi as u64))
}

/// `s(A) ⩽ F(A) + tol` for all `A`, by direct summation.
pub fn brute_in_p(t: &[f64], s: &[f64], tol: f64) -> bool {
    (0..t.len()).all(|m| subset_sum(m, s) <= t[m] + tol)
}

pub fn brute_in_b(t: &[f64], s: &[f64], tol: f64) -> bool {
    brute_in_p(t, s, tol) && (subset_sum(t.len() - 1, s) - t[t.len() - 1]).abs() <= tol
}

/// Lovász extension through the level-set integral
/// `∫_0^∞ F({w ⩾ z}) dz + ∫_{−∞}^0 (F({w ⩾ z}) − F(V)) dz`, evaluated exactly
/// on the pieces between consecutive breakpoints.
pub fn lovasz_by_integral(t: &[f64], w: &[f64]) -> f64 {
    let p = w.len();
    let level = |z: f64| -> usize { (0..p).filter(|&k| w[k] >= z).fold(0, |m, k| m | 1 << k) };
    let full = t[t.len() - 1];
    let mut cuts: Vec<f64> = w.to_vec();
    cuts.push(0.0);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut total = 0.0;
    for pair in cuts.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        // the level set is constant on (a, b]
        let v = t[level(b)];
        if b <= 0.0 {
            total += (b - a) * (v - full);
        } else {
            total += (b - a) * v;
        }
    }
    total
}

/// Largest `λ` with `s0 + λt ∈ P(F)`: the smallest constraint ratio.
pub fn brute_lambda(t: &[f64], s0: &[f64], dir: &[f64]) -> f64 {
    (1..t.len())
        .filter(|&m| subset_sum(m, dir) > 0.0)
        .map(|m| (t[m] - subset_sum(m, s0)) / subset_sum(m, dir))
        .fold(f64::INFINITY, f64::min)
}
