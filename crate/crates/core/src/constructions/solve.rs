use std::fmt;

use crate::atlas::Atlas;
use crate::constructions::composite::composite_16_8_16;
use crate::constructions::even::{even_hwp, infeasible, is_composite};
use crate::constructions::lcm;
use crate::constructions::odd::odd_hwp;
use crate::digraph::complete_symmetric;
use crate::error::{Error, Result};
use crate::model::{Factorization, ProblemSpec};
use crate::search::{exact_search, Budget, SearchInstance, SearchStatus, MAX_SEARCH_ORDER};

/// Largest order the solver hands to exact search as a last resort.
pub const SEARCH_FALLBACK_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Atlas,
    Composite,
    EvenRecursive,
    OddRecursive,
    Search,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Atlas => "atlas",
            Self::Composite => "composite",
            Self::EvenRecursive => "even construction",
            Self::OddRecursive => "odd construction",
            Self::Search => "exact search",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub factorization: Factorization,
    pub method: Method,
}

/// Finds a verified solution for `spec`.
///
/// Tries, in order: the atlas (generating base entries when needed), the
/// order-16 composite, the even and odd recursive constructions, and
/// finally exact search for orders up to [`SEARCH_FALLBACK_ORDER`].
/// Failures are typed: [`Error::Infeasible`], [`Error::UnknownOpen`],
/// [`Error::UnsupportedByAtlas`] / [`Error::UnsupportedShape`] and
/// [`Error::GenerationTimeout`].
pub fn solve(spec: &ProblemSpec, atlas: &Atlas, budget: Budget) -> Result<Solution> {
    if let Some(e) = infeasible(spec) {
        return Err(e);
    }
    let found = |factorization, method| Ok(Solution { factorization, method });
    let mut last = match atlas.factorization(spec, budget) {
        Ok(f) => return found(f, Method::Atlas),
        Err(e @ Error::UnsupportedByAtlas(_)) => e,
        Err(e) => return Err(e),
    };
    let n = spec.normalized();
    if is_composite(&n) {
        return found(composite_16_8_16(n.r, n.s, atlas, budget)?, Method::Composite);
    }
    let h = lcm(n.m, n.n);
    if n.v.is_multiple_of(h) && n.v > h {
        let x = n.v / h;
        let attempt = if n.m.is_multiple_of(2) && n.n.is_multiple_of(2) {
            Some((even_hwp(n.m, n.n, x, n.r, n.s, atlas, budget), Method::EvenRecursive))
        } else if n.m % 2 == 1 && n.n % 2 == 1 && h.is_multiple_of(3) && x % 2 == 1 {
            Some((odd_hwp(n.m, n.n, x, n.r, n.s, atlas, budget), Method::OddRecursive))
        } else {
            None
        };
        match attempt {
            Some((Ok(f), method)) => return found(f, method),
            Some((Err(e @ (Error::UnsupportedByAtlas(_) | Error::UnsupportedShape(_))), _)) => last = e,
            Some((Err(e), _)) => return Err(e),
            None => {}
        }
    }
    if n.v <= SEARCH_FALLBACK_ORDER.min(MAX_SEARCH_ORDER) {
        let out = exact_search(&SearchInstance::directed(complete_symmetric(n.v)?, n.profile()).with_budget(budget))?;
        return match out.status {
            SearchStatus::Found => found(out.directed().expect("found carries a witness"), Method::Search),
            SearchStatus::None => Err(Error::Infeasible {
                spec: *spec,
                reason: "exhaustive search found no factorization".into(),
            }),
            SearchStatus::ExhaustedBudget => Err(Error::GenerationTimeout(spec.to_string())),
        };
    }
    Err(last)
}
