//! Factorizations of `C_m ≀ K̄_2` and `Γ_m`, realized as Cayley digraphs on
//! `Z_2 × Z_m` with `(level, position)` flattened to `level·m + position`.

use crate::digraph::{cayley_product, Digraph, PairCoord, Vertex};
use crate::error::{Error, Result};
use crate::model::{CycleProfile, Factorization, TwoFactor};

/// Cycle length produced by [`blowup_cycle_factorization`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlowupTarget {
    /// Two `C_m`-factors.
    Same,
    /// Two `C_2m`-factors.
    Double,
}

/// `C_m ≀ K̄_2` as the Cayley digraph with connection `{(0,1),(1,1)}`.
pub fn blowup_host(m: usize) -> Result<Digraph> {
    cayley_product(2, m, &[PairCoord::new(0, 1), PairCoord::new(1, 1)])
}

/// `Γ_m = (C_m ≀ K̄_2) ⊕ mK_2*`, connection `{(0,1),(1,0),(1,1)}`.
pub fn gamma_host(m: usize) -> Result<Digraph> {
    cayley_product(
        2,
        m,
        &[PairCoord::new(0, 1), PairCoord::new(1, 0), PairCoord::new(1, 1)],
    )
}

fn at(level: usize, position: usize, m: usize) -> Vertex {
    (level % 2) * m + position % m
}

fn factor(cycles: Vec<Vec<Vertex>>) -> Result<TwoFactor> {
    TwoFactor::from_sequences(cycles)
}

/// The two level cycles `(l,0) → (l,1) → … → (l,m−1)`.
fn level_cycles(m: usize) -> Result<TwoFactor> {
    factor((0..2).map(|l| (0..m).map(|p| at(l, p, m)).collect()).collect())
}

/// The level-0 path followed by the level-1 path, closed into a `2m`-cycle.
fn joined_levels(m: usize) -> Vec<Vertex> {
    (0..2).flat_map(|l| (0..m).map(move |p| at(l, p, m))).collect()
}

/// Factorization of `C_m ≀ K̄_2` for even `m` into two `C_m`- or two
/// `C_2m`-factors. The second `C_2m`-factor is the arc-complement of the
/// first.
pub fn blowup_cycle_factorization(m: usize, target: BlowupTarget) -> Result<Factorization> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "C_m ≀ K̄_2 gadget needs even m >= 2, got {m}"
        )));
    }
    let host = blowup_host(m)?;
    let factors = match target {
        BlowupTarget::Same => {
            let alt: Vec<Vertex> = (0..m).map(|i| at(i, i, m)).collect();
            let shifted: Vec<Vertex> = (0..m).map(|i| at(i + 1, i, m)).collect();
            vec![level_cycles(m)?, factor(vec![alt, shifted])?]
        }
        BlowupTarget::Double => {
            let first = factor(vec![joined_levels(m)])?;
            let second = complement_factor(&host, &first)?;
            vec![first, second]
        }
    };
    let len = match target {
        BlowupTarget::Same => m,
        BlowupTarget::Double => 2 * m,
    };
    Factorization::new(host, factors).checked(Some(&CycleProfile::single(len, 2)), "C_m ≀ K̄_2 gadget")
}

/// The arcs of a 2-diregular `host` outside `f`, as a factor.
fn complement_factor(host: &Digraph, f: &TwoFactor) -> Result<TwoFactor> {
    let v = host.vertex_count();
    let mut next = vec![usize::MAX; v];
    for (t, h) in host.arcs() {
        if !f.arcs().any(|a| a == (t, h)) {
            if next[t] != usize::MAX {
                return Err(Error::Defect(format!("complement is not a 2-factor at vertex {t}")));
            }
            next[t] = h;
        }
    }
    let mut seen = vec![false; v];
    let mut cycles = Vec::new();
    for start in 0..v {
        if seen[start] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = start;
        while !seen[x] {
            if next[x] == usize::MAX {
                return Err(Error::Defect(format!("complement has no arc out of {x}")));
            }
            seen[x] = true;
            c.push(x);
            x = next[x];
        }
        cycles.push(c);
    }
    factor(cycles)
}

/// The printed `C_2m` variant whose second factor is the first shifted by
/// `(1,0)`. Returned unverified; for every even `m` it repeats arcs.
pub fn shifted_copy_variant(m: usize) -> Result<Factorization> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "C_m ≀ K̄_2 gadget needs even m >= 2, got {m}"
        )));
    }
    let first = joined_levels(m);
    let shifted: Vec<Vertex> = first.iter().map(|&x| (x + m) % (2 * m)).collect();
    Ok(Factorization::new(
        blowup_host(m)?,
        vec![factor(vec![first])?, factor(vec![shifted])?],
    ))
}

/// `{C_m^1, C_2m^2}`-factorization of `Γ_m`.
pub fn gamma_factorization(m: usize) -> Result<Factorization> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("Γ_m needs m >= 2, got {m}")));
    }
    let zig: Vec<Vertex> = (0..2 * m).map(|j| at(j % 2, j / 2, m)).collect();
    let zag: Vec<Vertex> = (0..2 * m).map(|j| at(j % 2 + 1, j / 2, m)).collect();
    let factors = vec![level_cycles(m)?, factor(vec![zig])?, factor(vec![zag])?];
    let mut expect = CycleProfile::single(m, 1);
    expect.add(2 * m, 2);
    Factorization::new(gamma_host(m)?, factors).checked(Some(&expect), "Γ_m gadget")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_gadgets() {
        let f = blowup_cycle_factorization(4, BlowupTarget::Same).unwrap();
        assert_eq!(f.host().arc_count(), 16);
        let f = blowup_cycle_factorization(8, BlowupTarget::Double).unwrap();
        assert_eq!(f.factors()[0].cycles().len(), 1);
        assert!(blowup_cycle_factorization(2, BlowupTarget::Same).is_ok());
        assert!(blowup_cycle_factorization(5, BlowupTarget::Same).is_err());
    }

    #[test]
    fn shifted_copy_repeats_arcs() {
        for m in [2, 4, 6, 8] {
            assert!(!shifted_copy_variant(m).unwrap().verify(None).valid);
        }
    }

    #[test]
    fn gamma_small_orders() {
        assert_eq!(gamma_factorization(8).unwrap().host().arc_count(), 48);
        assert_eq!(gamma_factorization(2).unwrap().host().arc_count(), 12);
        assert!(gamma_factorization(3).is_ok());
    }
}
