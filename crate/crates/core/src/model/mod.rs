//! Cycles, 2-factors, factorizations and the verifier.

mod cycle;
mod factor;
mod spec;
pub mod undirected;
mod verify;

pub use cycle::{canonical_cycle, DirectedCycle, UndirectedCycle};
pub use factor::{map_vertices, merge_parallel, Factorization, TwoFactor};
pub use spec::{CycleProfile, ProblemSpec};
pub use undirected::{verify_undirected, UndirectedFactor, UndirectedTwoFactorization};
pub use verify::{verify_factors, Failure, FailureReason, Verdict};
