//! Seeded generators for test instances drawn from the classical families.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::function::{check_p, SharedFn};
use super::subset::Subset;
use crate::error::{Error, Result};
use crate::transforms::add_modular;
use crate::zoo::{CoverFunction, CoverSystem, CutFunction, Digraph, LogDet, PsdMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseFamily {
    Cut,
    Cover,
    LogDet,
}

/// A generator family, optionally shifted by a random modular function.
///
/// Parsed from `cut`, `cover`, `logdet`, each optionally suffixed with `+modular`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Family {
    pub base: BaseFamily,
    pub modular_shift: bool,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::plain(BaseFamily::Cut),
        Family::plain(BaseFamily::Cover),
        Family::plain(BaseFamily::LogDet),
        Family::shifted(BaseFamily::Cut),
        Family::shifted(BaseFamily::Cover),
        Family::shifted(BaseFamily::LogDet),
    ];

    pub const fn plain(base: BaseFamily) -> Self {
        Family {
            base,
            modular_shift: false,
        }
    }

    pub const fn shifted(base: BaseFamily) -> Self {
        Family {
            base,
            modular_shift: true,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.base {
            BaseFamily::Cut => "cut",
            BaseFamily::Cover => "cover",
            BaseFamily::LogDet => "logdet",
        };
        if self.modular_shift {
            write!(f, "{name}+modular")
        } else {
            f.write_str(name)
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, modular_shift) = match s.strip_suffix("+modular") {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let base = match name {
            "cut" => BaseFamily::Cut,
            "cover" => BaseFamily::Cover,
            "logdet" => BaseFamily::LogDet,
            _ => return Err(Error::InvalidArgument(format!("unknown family {s:?}"))),
        };
        Ok(Family { base, modular_shift })
    }
}

/// Deterministic random submodular function on `p` elements.
pub fn random_submodular(seed: u64, p: usize, family: Family) -> Result<SharedFn> {
    check_p(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base: SharedFn = match family.base {
        BaseFamily::Cut => Arc::new(random_cut(&mut rng, p)?),
        BaseFamily::Cover => Arc::new(random_cover(&mut rng, p)?),
        BaseFamily::LogDet => Arc::new(random_logdet(&mut rng, p)?),
    };
    if !family.modular_shift {
        return Ok(base);
    }
    let s: Vec<f64> = (0..p).map(|_| rng.gen_range(-2.0..2.0)).collect();
    Ok(Arc::new(add_modular(base, s)?))
}

fn random_cut(rng: &mut ChaCha8Rng, p: usize) -> Result<CutFunction> {
    let mut arcs = Vec::new();
    for k in 0..p {
        for j in 0..p {
            if k != j && rng.gen_bool(0.5) {
                arcs.push((k, j, rng.gen_range(0.0..1.0)));
            }
        }
    }
    Ok(CutFunction::new(Digraph::new(p, &arcs)?))
}

fn random_cover(rng: &mut ChaCha8Rng, p: usize) -> Result<CoverFunction> {
    let groups = (0..p + 2)
        .map(|_| {
            let mut g: Subset = (0..p).filter(|_| rng.gen_bool(0.4)).collect();
            if g.is_empty() {
                g = Subset::singleton(rng.gen_range(0..p));
            }
            (g, rng.gen_range(0.0..1.0))
        })
        .collect();
    Ok(CoverFunction::new(CoverSystem::new(p, groups)?))
}

fn random_logdet(rng: &mut ChaCha8Rng, p: usize) -> Result<LogDet> {
    let r = DMatrix::from_fn(p, p, |_, _| rng.gen_range(-1.0..1.0));
    let q = &r * r.transpose() + DMatrix::identity(p, p) * 0.5;
    // symmetrize away rounding in the product
    let q = (&q + q.transpose()) * 0.5;
    Ok(LogDet::new(PsdMatrix::new(q)?))
}
