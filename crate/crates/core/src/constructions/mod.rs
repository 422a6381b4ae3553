//! Recursive constructions and the top-level solver.
//!
//! Every function here verifies its result before returning it; a rejected
//! result surfaces as [`crate::Error::Defect`].

mod composite;
mod doubling;
mod equipartite;
mod even;
mod gadgets;
mod kirkman;
mod kotzig;
mod necessary;
mod odd;
mod solve;
mod walecki;

pub use composite::{blow_up_factor, composite_16_8_16};
pub use doubling::double_factorization;
pub use equipartite::{
    directed_bipartite_cycle_factorization, equipartite_cycle_factorization, tripartite_cycle_factorization,
    Equipartite,
};
pub use even::{even_hwp, even_plan};
pub use gadgets::{
    blowup_cycle_factorization, blowup_host, gamma_factorization, gamma_host, shifted_copy_variant, BlowupTarget,
};
pub use kirkman::kirkman_resolution;
pub use kotzig::{kotzig_one_factorization, pair_blowup_k2_factors};
pub use necessary::{check_necessary, Condition, FeasibilityReport};
pub use odd::{odd_hwp, odd_plan};
pub use solve::{solve, Method, Solution};
pub use walecki::walecki_hamilton_decomposition;

/// How the `r` count splits between the base block and the blow-up factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionPlan {
    /// `r′`, the `m`-factor count of the base solution at order `h`.
    pub base_r: usize,
    /// `a`, the number of blow-up factors given to the `m` side.
    pub step_count: usize,
    /// Factors each blow-up factor contributes.
    pub step_size: usize,
    /// Side of each blow-up factor, in order.
    pub assignments: Vec<Side>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    M,
    N,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
