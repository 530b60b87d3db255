//! Exact closeness analysis for lollipop graphs and their perturbations.
//!
//! The closeness of a graph here is the pairwise sum of `2^-d(u, v)` over
//! ordered vertex pairs, with unreachable pairs contributing zero. Every
//! distance-based quantity is a dyadic rational, so the whole crate computes
//! in [`Dyadic`] — exact `mantissa / 2^exponent` arithmetic — and reserves
//! floating point for display and one clearly-marked advisory heuristic.
//!
//! The layers, bottom up:
//!
//! * [`dyadic`] — the exact number type.
//! * [`graph`] — simple undirected graphs on labels `1..=N`, breadth-first
//!   distances, and the brute-force closeness oracle every closed form is
//!   checked against.
//! * [`families`] — generators and closed-form closeness for complete
//!   graphs, paths, cycles, and the lollipop `L(m, n)` (a clique on
//!   `1..=m` with a path on `m+1..=m+n` hung from vertex `m`), plus
//!   closeness rules for joining graphs by a new link or a shared vertex.
//! * [`robustness`] — vertex and link residual closeness: scan every
//!   removal, keep the worst, and for lollipops name the minimizing case
//!   in closed form.
//! * [`additional`] — additional closeness: scan every absent link, keep
//!   the best, with closed forms for the four useful chord shapes on a
//!   lollipop and the optimal chord position.

pub mod additional;
pub mod dyadic;
pub mod error;
pub mod families;
pub mod graph;
pub mod robustness;

pub use dyadic::Dyadic;
pub use error::Error;
pub use families::LollipopSpec;
pub use graph::{closeness_oracle, ClosenessReport, DistanceRow, Graph};
