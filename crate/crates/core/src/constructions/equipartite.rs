use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::digraph::{equipartite_symmetric, Vertex};
use crate::error::{Error, Result};
use crate::model::{CycleProfile, Factorization, TwoFactor, UndirectedFactor, UndirectedTwoFactorization};
use crate::search::{exact_search, Budget, SearchInstance, SearchStatus};

/// A cycle factorization of an equipartite host.
#[derive(Clone, Debug)]
pub enum Equipartite {
    Directed(Factorization),
    Undirected(UndirectedTwoFactorization),
}

/// `C_m`-factorization of `K_{(part:parts)}*` (directed, two parts) or of
/// `K_{(part:parts)}` (undirected).
pub fn equipartite_cycle_factorization(
    part: usize,
    parts: usize,
    m: usize,
    directed: bool,
    budget: Budget,
) -> Result<Equipartite> {
    match (directed, parts) {
        (true, 2) => directed_bipartite_cycle_factorization(part, m).map(Equipartite::Directed),
        (true, _) => Err(Error::UnsupportedShape(format!(
            "directed equipartite factorization with {parts} parts"
        ))),
        (false, _) => tripartite_cycle_factorization(part, parts, m, budget).map(Equipartite::Undirected),
    }
}

/// Circulant `C_m`-factorization of `K_{(a:2)}*` with parts `x_i = i` and
/// `y_i = a + i`.
///
/// Fix `g ∈ Z_a` of order `m/2`. Factor `d` takes `x_i → y_{i+d}` and
/// `y_j → x_{j+g−d}`, so every cycle advances by `g` per two steps.
pub fn directed_bipartite_cycle_factorization(a: usize, m: usize) -> Result<Factorization> {
    if m < 2 || !m.is_multiple_of(2) || !(2 * a).is_multiple_of(m) {
        return Err(Error::UnsupportedShape(format!(
            "C_{m}-factorization of K_({a}:2)* needs even m dividing {}",
            2 * a
        )));
    }
    let g = 2 * a / m;
    let factors = (0..a)
        .map(|d| {
            let e = (g + a - d) % a;
            let cycles: Vec<Vec<Vertex>> = (0..g)
                .map(|start| {
                    let mut c = Vec::with_capacity(m);
                    let mut i = start;
                    for _ in 0..m / 2 {
                        c.push(i);
                        c.push(a + (i + d) % a);
                        i = (i + d + e) % a;
                    }
                    c
                })
                .collect();
            TwoFactor::from_sequences(cycles)
        })
        .collect::<Result<Vec<_>>>()?;
    Factorization::new(equipartite_symmetric(a, 2)?, factors)
        .checked(Some(&CycleProfile::single(m, a)), "bipartite circulant")
}

type Memo = Mutex<HashMap<(usize, usize, usize), UndirectedTwoFactorization>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Undirected `C_m`-factorization of `K_{(part:parts)}`.
///
/// Triangles on three parts of odd size use the Latin-square classes
/// `{(0,x), (1,x+y), (2,x+2y)}`; other shapes fall back to exact search,
/// memoized per process.
pub fn tripartite_cycle_factorization(
    part: usize,
    parts: usize,
    m: usize,
    budget: Budget,
) -> Result<UndirectedTwoFactorization> {
    let host = equipartite_symmetric(part, parts)?;
    let degree = part * (parts - 1);
    if m < 3 || !degree.is_multiple_of(2) || !(part * parts).is_multiple_of(m) {
        return Err(Error::UnsupportedShape(format!(
            "C_{m}-factorization of K_({part}:{parts})"
        )));
    }
    let expect = CycleProfile::single(m, degree / 2);
    if parts == 3 && m == 3 && part % 2 == 1 {
        let factors = (0..part)
            .map(|y| {
                UndirectedFactor::from_sequences(
                    (0..part).map(|x| [x, part + (x + y) % part, 2 * part + (x + 2 * y) % part]),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        return UndirectedTwoFactorization::new(host, factors)?.checked(Some(&expect), "Latin-square triangles");
    }
    let key = (part, parts, m);
    if let Some(u) = memo().lock().expect("memo lock").get(&key) {
        return Ok(u.clone());
    }
    let out = exact_search(&SearchInstance::undirected(host, expect.clone()).with_budget(budget))?;
    let u = match out.status {
        SearchStatus::Found => out.undirected().expect("found carries a witness"),
        SearchStatus::None => {
            return Err(Error::UnsupportedShape(format!(
                "K_({part}:{parts}) has no C_{m}-factorization"
            )))
        }
        SearchStatus::ExhaustedBudget => {
            return Err(Error::GenerationTimeout(format!(
                "C_{m}-factorization of K_({part}:{parts})"
            )))
        }
    };
    memo().lock().expect("memo lock").insert(key, u.clone());
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_circulants() {
        for (a, m) in [
            (4, 4),
            (4, 8),
            (6, 4),
            (6, 6),
            (6, 12),
            (8, 4),
            (8, 8),
            (8, 16),
            (3, 2),
            (5, 10),
        ] {
            let f = directed_bipartite_cycle_factorization(a, m).unwrap();
            assert_eq!(f.len(), a, "a={a} m={m}");
        }
        assert!(directed_bipartite_cycle_factorization(6, 8).is_err());
        assert!(directed_bipartite_cycle_factorization(6, 3).is_err());
    }

    #[test]
    fn tripartite_shapes() {
        let b = Budget::default();
        for m in [3, 5, 15] {
            let u = tripartite_cycle_factorization(5, 3, m, b).unwrap();
            assert_eq!(u.len(), 5);
        }
        assert!(tripartite_cycle_factorization(4, 3, 5, b).is_err());
    }

    #[test]
    fn wrapper_dispatch() {
        let b = Budget::default();
        assert!(matches!(
            equipartite_cycle_factorization(4, 2, 4, true, b),
            Ok(Equipartite::Directed(_))
        ));
        assert!(matches!(
            equipartite_cycle_factorization(2, 3, 3, true, b),
            Err(Error::UnsupportedShape(_))
        ));
    }
}
