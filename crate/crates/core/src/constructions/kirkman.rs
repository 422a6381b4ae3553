use crate::digraph::{complete_symmetric, Vertex};
use crate::error::{Error, Result};
use crate::model::{CycleProfile, UndirectedFactor, UndirectedTwoFactorization};
use crate::search::{exact_search, Budget, SearchInstance, SearchStatus};

/// Resolution of a Kirkman triple system of order `v ≡ 3 (mod 6)`.
///
/// The first class is always `{3b, 3b+1, 3b+2}`. Powers of 3 use the lines
/// of `AG(k,3)`; other orders are searched for within `budget`.
pub fn kirkman_resolution(v: usize, budget: Budget) -> Result<UndirectedTwoFactorization> {
    if v % 6 != 3 {
        return Err(Error::InvalidParameter(format!(
            "Kirkman triple systems need v ≡ 3 mod 6, got {v}"
        )));
    }
    let expect = CycleProfile::single(3, (v - 1) / 2);
    let classes = match power_of_three(v) {
        Some(k) => affine_classes(k),
        None => searched_classes(v, &expect, budget)?,
    };
    let relabel = consecutive_labels(v, &classes[0]);
    let factors = classes
        .iter()
        .map(|class| UndirectedFactor::from_sequences(class.iter().map(|t| t.map(|x| relabel[x]))))
        .collect::<Result<Vec<_>>>()?;
    UndirectedTwoFactorization::new(complete_symmetric(v)?, factors)?.checked(Some(&expect), "Kirkman resolution")
}

fn power_of_three(v: usize) -> Option<u32> {
    let mut k = 0;
    let mut p = 1;
    while p < v {
        p *= 3;
        k += 1;
    }
    (p == v).then_some(k)
}

/// Parallel classes of lines of `AG(k,3)`, points written in base 3. The
/// direction along the units digit comes first.
fn affine_classes(k: u32) -> Vec<Vec<[Vertex; 3]>> {
    let v = 3usize.pow(k);
    let add = |x: usize, d: usize| -> usize {
        let (mut x, mut d, mut out, mut place) = (x, d, 0, 1);
        for _ in 0..k {
            out += ((x % 3 + d % 3) % 3) * place;
            x /= 3;
            d /= 3;
            place *= 3;
        }
        out
    };
    // one direction per projective point: lowest nonzero digit equal to 1
    let directions = (1..v).filter(|&d| {
        let mut d = d;
        while d % 3 == 0 {
            d /= 3;
        }
        d % 3 == 1
    });
    directions
        .map(|d| {
            let mut seen = vec![false; v];
            let mut class = Vec::new();
            for p in 0..v {
                if !seen[p] {
                    let line = [p, add(p, d), add(add(p, d), d)];
                    line.iter().for_each(|&q| seen[q] = true);
                    class.push(line);
                }
            }
            class
        })
        .collect()
}

fn searched_classes(v: usize, expect: &CycleProfile, budget: Budget) -> Result<Vec<Vec<[Vertex; 3]>>> {
    let out = exact_search(&SearchInstance::undirected(complete_symmetric(v)?, expect.clone()).with_budget(budget))?;
    match out.status {
        SearchStatus::Found => {}
        SearchStatus::None => return Err(Error::Defect(format!("no Kirkman triple system of order {v} found"))),
        SearchStatus::ExhaustedBudget => {
            return Err(Error::GenerationTimeout(format!("Kirkman triple system of order {v}")))
        }
    }
    let u = out.undirected().expect("found carries a witness");
    Ok(u.factors()
        .iter()
        .map(|f| {
            f.cycles()
                .iter()
                .map(|c| [c.vertices()[0], c.vertices()[1], c.vertices()[2]])
                .collect()
        })
        .collect())
}

/// A relabeling sending the `b`-th triangle of `class` to `{3b, 3b+1, 3b+2}`.
fn consecutive_labels(v: usize, class: &[[Vertex; 3]]) -> Vec<Vertex> {
    let mut relabel = vec![0; v];
    for (b, t) in class.iter().enumerate() {
        for (i, &x) in t.iter().enumerate() {
            relabel[x] = 3 * b + i;
        }
    }
    relabel
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        for v in [3, 9, 15, 27] {
            let k = kirkman_resolution(v, Budget::default()).unwrap();
            assert_eq!(k.len(), (v - 1) / 2);
            let first = UndirectedFactor::from_sequences((0..v / 3).map(|b| [3 * b, 3 * b + 1, 3 * b + 2])).unwrap();
            assert_eq!(k.factors()[0], first);
        }
        assert!(kirkman_resolution(7, Budget::default()).is_err());
    }
}
