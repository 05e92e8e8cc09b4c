//! Ground sets, subsets, the set-function oracle and exhaustive property checks.

mod function;
mod properties;
mod random;
mod subset;

pub use function::{
    evaluate, shift_to_zero, to_explicit, to_explicit_capped, Cardinality, Explicit, FnOracle,
    Memoized, Modular, SetFunction, SharedFn,
};
pub(crate) use function::{check_len, check_p};
pub use properties::{
    is_monotone, is_posimodular, is_submodular, is_submodular_pairwise, is_submodular_with,
    is_symmetric, CheckOptions, PropertyReport, Witness, WitnessPart, DEFAULT_TOL,
};
pub use random::{random_submodular, BaseFamily, Family};
pub use subset::{check_cap, GroundSet, Subset, DEFAULT_EXHAUSTIVE_CAP, MAX_GROUND};
