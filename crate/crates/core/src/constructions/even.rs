use crate::atlas::Atlas;
use crate::constructions::composite::composite_16_8_16;
use crate::constructions::equipartite::directed_bipartite_cycle_factorization;
use crate::constructions::kotzig::pair_blowup_k2_factors;
use crate::constructions::necessary::check_necessary;
use crate::constructions::{lcm, DecompositionPlan, Side};
use crate::digraph::{complete_symmetric, Digraph, Vertex};
use crate::error::{Error, Result};
use crate::model::{map_vertices, merge_parallel, Factorization, ProblemSpec, TwoFactor};
use crate::search::Budget;

/// `r = r′ + (h/2)·a` with `a = min(2x−2, ⌊r/(h/2)⌋)`.
pub fn even_plan(h: usize, x: usize, r: usize) -> Result<DecompositionPlan> {
    if h < 2 || !h.is_multiple_of(2) || x == 0 || r >= h * x {
        return Err(Error::InvalidParameter(format!("no even plan for h={h}, x={x}, r={r}")));
    }
    let step = h / 2;
    let budget = 2 * x - 2;
    let a = budget.min(r / step);
    let mut assignments = vec![Side::M; a];
    assignments.resize(budget, Side::N);
    Ok(DecompositionPlan {
        base_r: r - step * a,
        step_count: a,
        step_size: step,
        assignments,
    })
}

pub(crate) fn infeasible(spec: &ProblemSpec) -> Option<Error> {
    let report = check_necessary(spec);
    report.first_violation().map(|c| Error::Infeasible {
        spec: *spec,
        reason: c.violation.clone(),
    })
}

/// Base solution at order `h`, from the atlas or the order-16 composite.
pub(crate) fn base_solution(spec: &ProblemSpec, atlas: &Atlas, budget: Budget) -> Result<Factorization> {
    match atlas.factorization(spec, budget) {
        Err(Error::UnsupportedByAtlas(_)) if is_composite(spec) => {
            let n = spec.normalized();
            composite_16_8_16(n.r, n.s, atlas, budget)
        }
        other => other,
    }
}

pub(crate) fn is_composite(spec: &ProblemSpec) -> bool {
    let n = spec.normalized();
    n.v == 16 && (n.m, n.n) == (8, 16) && n.r % 2 == 1 && n.r <= 13
}

/// Copies of `base` on the consecutive blocks of size `h`.
pub(crate) fn block_copies(base: &Factorization, h: usize, x: usize, host: &Digraph) -> Result<Vec<TwoFactor>> {
    let parts = (0..x)
        .map(|b| map_vertices(base, move |o| b * h + o, host.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_parallel(&parts, host.clone())?.into_factors())
}

/// `HWP*(hx; m^r, n^s)` for even `m, n` with `h = lcm(m, n)`, from
/// `xK_h* ⊕ (K_x* ≀ K̄_h)`.
///
/// Point `p = 2b + t` of `K_x* ≀ K̄_2` owns vertices `p·(h/2) .. (p+1)·(h/2)`,
/// so block `b` of size `h` is `{2b, 2b+1}`. Each digon factor of the pair
/// blow-up becomes `x` copies of `K_{(h/2:2)}*`, factorized by `C_m` for the
/// first `a` factors and by `C_n` after.
pub fn even_hwp(
    m: usize,
    n: usize,
    x: usize,
    r: usize,
    s: usize,
    atlas: &Atlas,
    budget: Budget,
) -> Result<Factorization> {
    if !m.is_multiple_of(2) || !n.is_multiple_of(2) || x == 0 {
        return Err(Error::InvalidParameter(format!(
            "even construction needs even m, n and x >= 1, got m={m}, n={n}, x={x}"
        )));
    }
    let h = lcm(m, n);
    let spec = ProblemSpec::new(h * x, m, n, r, s)?;
    if let Some(e) = infeasible(&spec) {
        return Err(e);
    }
    if x == 1 {
        return base_solution(&spec, atlas, budget);
    }
    let plan = even_plan(h, x, r)?;
    let base = base_solution(
        &ProblemSpec::new(h, m, n, plan.base_r, h - 1 - plan.base_r)?,
        atlas,
        budget,
    )?;
    let host = complete_symmetric(h * x)?;
    let mut factors = block_copies(&base, h, x, &host)?;

    let half = h / 2;
    let cm = directed_bipartite_cycle_factorization(half, m)?;
    let cn = directed_bipartite_cycle_factorization(half, n)?;
    let pairs = pair_blowup_k2_factors(x)?;
    for (digons, side) in pairs.factors().iter().zip(&plan.assignments) {
        let gadget = if *side == Side::M { &cm } else { &cn };
        let parts = digons
            .cycles()
            .iter()
            .map(|c| {
                let (p, q) = (c.vertices()[0], c.vertices()[1]);
                let place = move |z: Vertex| if z < half { p * half + z } else { q * half + z - half };
                map_vertices(gadget, place, host.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        factors.extend(merge_parallel(&parts, host.clone())?.into_factors());
    }
    Factorization::new(host, factors).checked(Some(&spec.profile()), "even construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_examples() {
        let p = even_plan(8, 2, 9).unwrap();
        assert_eq!((p.step_count, p.base_r), (2, 1));
        let p = even_plan(12, 2, 0).unwrap();
        assert_eq!((p.step_count, p.base_r), (0, 0));
        assert_eq!(p.assignments, vec![Side::N; 2]);
        assert!(even_plan(8, 2, 16).is_err());
    }
}
