use crate::atlas::Atlas;
use crate::constructions::doubling::double_factorization;
use crate::constructions::equipartite::tripartite_cycle_factorization;
use crate::constructions::even::{block_copies, infeasible};
use crate::constructions::kirkman::kirkman_resolution;
use crate::constructions::{lcm, DecompositionPlan, Side};
use crate::digraph::{complete_symmetric, Vertex};
use crate::error::{Error, Result};
use crate::model::{map_vertices, merge_parallel, Factorization, ProblemSpec};
use crate::search::Budget;

/// `r = r′ + (2h/3)·a` with `a ≤ (3x−3)/2`, starting from
/// `a = min((3x−3)/2, ⌊r/(2h/3)⌋)` and lowering `a` while `r′` is in
/// `excluded`. `None` when every admissible `a` lands in `excluded`.
pub fn odd_plan(h: usize, x: usize, r: usize, excluded: &[usize]) -> Result<Option<DecompositionPlan>> {
    if !h.is_multiple_of(3) || x.is_multiple_of(2) || r >= h * x {
        return Err(Error::InvalidParameter(format!("no odd plan for h={h}, x={x}, r={r}")));
    }
    let step = 2 * h / 3;
    let budget = (3 * x - 3) / 2;
    let top = budget.min(r / step);
    Ok((0..=top)
        .rev()
        .take_while(|a| r - step * a < h)
        .find(|a| !excluded.contains(&(r - step * a)))
        .map(|a| {
            let mut assignments = vec![Side::M; a];
            assignments.resize(budget, Side::N);
            DecompositionPlan {
                base_r: r - step * a,
                step_count: a,
                step_size: step,
                assignments,
            }
        }))
}

/// `HWP*(hx; m^r, n^s)` for odd `m, n` with `3 | h = lcm(m, n)` and odd `x`,
/// from `xK_h* ⊕ (K_x* ≀ K̄_h)`.
///
/// Point `p = 3b + t` of `K_x* ≀ K̄_3` owns vertices `p·(h/3) .. (p+1)·(h/3)`.
/// The Kirkman classes of order `3x` other than `{3b, 3b+1, 3b+2}` are
/// doubled into `K_3*`-factors; each becomes `x` copies of `K_{(h/3:3)}*`
/// carrying a doubled undirected `C_m` or `C_n`-factorization.
pub fn odd_hwp(
    m: usize,
    n: usize,
    x: usize,
    r: usize,
    s: usize,
    atlas: &Atlas,
    budget: Budget,
) -> Result<Factorization> {
    if m.is_multiple_of(2) || n.is_multiple_of(2) || x.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "odd construction needs odd m, n, x, got m={m}, n={n}, x={x}"
        )));
    }
    let h = lcm(m, n);
    if !h.is_multiple_of(3) {
        return Err(Error::UnsupportedShape(format!(
            "odd construction needs 3 | lcm(m,n), got {h}"
        )));
    }
    let spec = ProblemSpec::new(h * x, m, n, r, s)?;
    if let Some(e) = infeasible(&spec) {
        return Err(e);
    }
    let base_spec = |rb: usize| ProblemSpec::new(h, m, n, rb, h - 1 - rb);
    if x == 1 {
        return atlas.factorization(&spec, budget);
    }
    let excluded = (0..h)
        .filter(|&rb| base_spec(rb).is_ok_and(|b| atlas.is_unknown_open(&b)))
        .collect::<Vec<_>>();
    let Some(plan) = odd_plan(h, x, r, &excluded)? else {
        let step = 2 * h / 3;
        let a = ((3 * x - 3) / 2).min(r / step);
        return Err(Error::UnsupportedByAtlas(base_spec(r - step * a)?));
    };
    let base = atlas.factorization(&base_spec(plan.base_r)?, budget)?;
    let host = complete_symmetric(h * x)?;
    let mut factors = block_copies(&base, h, x, &host)?;

    let third = h / 3;
    let cm = double_factorization(&tripartite_cycle_factorization(third, 3, m, budget)?)?;
    let cn = double_factorization(&tripartite_cycle_factorization(third, 3, n, budget)?)?;
    let kirkman = kirkman_resolution(3 * x, budget)?;
    for (class, side) in kirkman.factors()[1..].iter().zip(&plan.assignments) {
        let gadget = if *side == Side::M { &cm } else { &cn };
        let parts = class
            .cycles()
            .iter()
            .map(|t| {
                let pts = [t.vertices()[0], t.vertices()[1], t.vertices()[2]];
                let place = move |z: Vertex| pts[z / third] * third + z % third;
                map_vertices(gadget, place, host.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        factors.extend(merge_parallel(&parts, host.clone())?.into_factors());
    }
    Factorization::new(host, factors).checked(Some(&spec.profile()), "odd construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_examples() {
        let p = odd_plan(15, 3, 23, &[11, 12, 13]).unwrap().unwrap();
        assert_eq!((p.step_count, p.base_r), (2, 3));
        assert!(odd_plan(15, 3, 41, &[11, 12, 13]).unwrap().is_none());
        assert!(odd_plan(15, 3, 43, &[13]).unwrap().is_none());
        let p = odd_plan(15, 3, 44, &[11, 12, 13]).unwrap().unwrap();
        assert_eq!(p.base_r, 14);
    }
}
