use std::time::Instant;

use serde_json::{json, Value};
use submodular::lovasz::{conjugate_capped, greedy_base, lovasz_extension, truncated_greedy, dot};
use submodular::prox::{
    line_search_p, prox_decomposition, prox_homotopy, prox_minnorm, prox_threshold_sets,
    ProxResult, QuadraticSpec, Separable,
};
use submodular::setfn::{
    check_cap, evaluate, is_monotone, is_posimodular, is_submodular_with, is_symmetric,
    random_submodular, to_explicit, CheckOptions, Family, PropertyReport, WitnessPart,
};
use submodular::sfm::{minimize, SfmBackend};
use submodular::{Error, SetFunction, SharedFn, Subset};

use crate::report::{canonical, digest, RunReport};
use crate::spec::FunctionSpec;
use crate::{Command, Common, ProxAlgo, SfmAlgo};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl CliError {
    /// 1 for bad input, 2 for numerical trouble or limits, 3 for violated preconditions.
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Precondition(_) => 3,
            CliError::Lib(e) => match e {
                Error::CapExceeded { .. }
                | Error::NumericalInconsistency(_)
                | Error::NoConvergence { .. }
                | Error::RecursionOverflow { .. }
                | Error::Unbounded => 2,
                Error::MonotonicityRequired(_) | Error::Precondition(_) => 3,
                _ => 1,
            },
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

struct Loaded {
    f: SharedFn,
    text: String,
    common: Common,
}

fn load(common: &Common) -> Result<Loaded> {
    let text = read(&common.spec)?;
    let spec = FunctionSpec::parse(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", common.spec.display())))?;
    let f = spec.build()?;
    let loaded = Loaded { f, text, common: common.clone() };
    if common.verify {
        loaded.require_submodular()?;
    }
    Ok(loaded)
}

fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

impl Loaded {
    fn p(&self) -> usize {
        self.f.ground_size()
    }

    fn opts(&self) -> CheckOptions {
        CheckOptions {
            tol: self.common.tol,
            cap: self.common.max_exhaustive,
        }
    }

    fn enumerable(&self) -> Result<()> {
        Ok(check_cap(self.p(), self.common.max_exhaustive)?)
    }

    fn require_submodular(&self) -> Result<()> {
        let r = is_submodular_with(&self.f, self.opts())?;
        if r.holds {
            Ok(())
        } else {
            Err(CliError::Precondition(format!("not submodular: {}", witness(&r))))
        }
    }

    fn vector(&self, name: &str, v: &[f64]) -> Result<()> {
        if v.len() != self.p() {
            return Err(CliError::Input(format!(
                "--{name} has {} entries, the ground set has {}",
                v.len(),
                self.p()
            )));
        }
        if v.iter().any(|x| !x.is_finite()) {
            return Err(CliError::Input(format!("--{name} has non-finite entries")));
        }
        Ok(())
    }
}

fn indices(a: Subset) -> Value {
    json!(a.to_vec())
}

fn witness(r: &PropertyReport) -> Value {
    match r.witness {
        None => Value::Null,
        Some(w) => {
            let other = match w.other {
                WitnessPart::Set(b) => json!({ "set": b.to_vec() }),
                WitnessPart::Pair(j, k) => json!({ "pair": [j, k] }),
                WitnessPart::Element(k) => json!({ "element": k }),
                WitnessPart::None => Value::Null,
            };
            json!({ "a": w.a.to_vec(), "other": other, "lhs": w.lhs, "rhs": w.rhs })
        }
    }
}

fn property(r: PropertyReport) -> Value {
    json!({ "holds": r.holds, "witness": witness(&r) })
}

/// Runs one command and renders its report line.
pub fn run(command: Command, argv: Vec<String>) -> Result<String> {
    let start = Instant::now();
    let (results, text) = match command {
        Command::Dump { spec } => {
            let text = read(&spec)?;
            let f = FunctionSpec::parse(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", spec.display())))?
                .build()?;
            return explicit_spec(&f);
        }
        Command::Gen { family, p, seed } => {
            let family: Family = family.parse()?;
            return explicit_spec(&random_submodular(seed, p, family)?);
        }
        Command::Check(common) => {
            let l = load(&common)?;
            l.enumerable()?;
            let o = l.opts();
            let results = json!({
                "p": l.p(),
                "submodular": property(is_submodular_with(&l.f, o)?),
                "monotone": property(is_monotone(&l.f, o)?),
                "symmetric": property(is_symmetric(&l.f, o)?),
                "posimodular": property(is_posimodular(&l.f, o)?),
            });
            (results, l.text)
        }
        Command::Minimize { common, algo, eps } => {
            let l = load(&common)?;
            let backend = match algo {
                SfmAlgo::Minnorm => SfmBackend::MinNorm { eps },
                SfmAlgo::Brute => {
                    l.enumerable()?;
                    SfmBackend::Brute
                }
            };
            let r = minimize(&l.f, backend)?;
            let results = json!({
                "min_value": r.min_value,
                "minimal_minimizer": indices(r.minimal_minimizer),
                "maximal_minimizer": indices(r.maximal_minimizer),
                "certificate": r.certificate,
                "gap": r.gap,
            });
            (results, l.text)
        }
        Command::Eval { common, w, set } => {
            let l = load(&common)?;
            let mut results = serde_json::Map::new();
            if w.is_none() && set.is_none() {
                return Err(CliError::Input("eval needs --w or --set".into()));
            }
            if let Some(w) = w {
                l.vector("w", &w)?;
                results.insert("lovasz".into(), json!(lovasz_extension(&l.f, &w)));
            }
            if let Some(set) = set {
                if let Some(k) = set.iter().find(|&&k| k >= l.p()) {
                    return Err(CliError::Input(format!("element {k} is outside the ground set")));
                }
                let a = Subset::from_indices(set);
                results.insert("value".into(), json!(evaluate(&l.f, a)?));
            }
            (Value::Object(results), l.text)
        }
        Command::Greedy { common, w, truncated } => {
            let l = load(&common)?;
            l.vector("w", &w)?;
            let s = if truncated {
                if common.verify {
                    let r = is_monotone(&l.f, l.opts())?;
                    if !r.holds {
                        return Err(CliError::Precondition(format!(
                            "truncated greedy needs a non-decreasing function: {}",
                            witness(&r)
                        )));
                    }
                }
                truncated_greedy(&l.f, &w)
            } else {
                greedy_base(&l.f, &w)
            };
            (json!({ "base": s, "value": dot(&w, &s) }), l.text)
        }
        Command::Conjugate { common, s } => {
            let l = load(&common)?;
            l.vector("s", &s)?;
            let (value, argmax) = conjugate_capped(&l.f, &s, common.max_exhaustive)?;
            (json!({ "value": value, "argmax": indices(argmax) }), l.text)
        }
        Command::Prox { common, weights, centers, algo, alpha, eps } => {
            let l = load(&common)?;
            l.vector("centers", &centers)?;
            let a = weights.unwrap_or_else(|| vec![1.0; centers.len()]);
            l.vector("weights", &a)?;
            let q = QuadraticSpec::new(a, centers)?;
            let psi: Separable = q.clone().into();
            let backend = SfmBackend::MinNorm { eps };
            let r = match algo {
                ProxAlgo::Minnorm => prox_minnorm(&l.f, &q, eps)?,
                ProxAlgo::Decomposition => {
                    let s = prox_decomposition(&l.f, &psi, backend, Default::default())?;
                    ProxResult::from_pair(&l.f, &psi, psi.primal_from_dual(&s)?, s)?
                }
                ProxAlgo::Homotopy => {
                    let u = prox_homotopy(&l.f, &psi, backend)?;
                    let s = psi.dual_from_primal(&u);
                    ProxResult::from_pair(&l.f, &psi, u, s)?
                }
            };
            let thresholds: Vec<Value> = alpha
                .iter()
                .map(|&al| {
                    let (minimal, maximal) = prox_threshold_sets(&r.u, al, common.tol);
                    json!({ "alpha": al, "minimal": indices(minimal), "maximal": indices(maximal) })
                })
                .collect();
            let results = json!({
                "u": r.u,
                "s": r.s,
                "primal_value": r.primal_value,
                "dual_value": r.dual_value,
                "gap": r.gap,
                "thresholds": thresholds,
            });
            (results, l.text)
        }
        Command::Linesearch { common, direction, s0 } => {
            let l = load(&common)?;
            l.vector("direction", &direction)?;
            let s0 = s0.unwrap_or_else(|| vec![0.0; l.p()]);
            l.vector("s0", &s0)?;
            let lambda = line_search_p(&l.f, &s0, &direction, common.tol)?;
            (json!({ "lambda": lambda }), l.text)
        }
    };
    let report = RunReport {
        inputs_digest: digest(&argv, &text),
        command: argv,
        results,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    Ok(report.to_line())
}

fn explicit_spec(f: &SharedFn) -> Result<String> {
    let values = to_explicit(f)?;
    let spec = serde_json::to_value(FunctionSpec::Explicit { values }).expect("serializable spec");
    Ok(canonical(spec).to_string())
}
