//! Classical submodular functions: cuts, covers, flows, concave functions of
//! cardinality, Gaussian log-determinants and matroid ranks.

mod concave;
mod cover;
mod cut;
mod flow;
mod logdet;
pub mod maxflow;
mod matroid;

pub use concave::{ConcaveCardinality, ConcaveFn, WeightedConcave};
pub use cover::{CoverFunction, CoverSystem};
pub use cut::{cut_minimize, CutFunction, Digraph};
pub use flow::{FlowFunction, FlowNetwork};
pub use logdet::{LogDet, PsdMatrix};
pub use matroid::{GraphicMatroid, LinearMatroid};
