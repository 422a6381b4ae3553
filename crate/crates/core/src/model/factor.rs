use std::fmt;

use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};
use crate::model::cycle::DirectedCycle;
use crate::model::spec::CycleProfile;
use crate::model::verify::{verify_factors, Verdict};

/// A set of directed cycles meant to span the host once. Cycles are kept
/// sorted by their least vertex; spanning and disjointness are checked by
/// the verifier, not here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoFactor {
    cycles: Vec<DirectedCycle>,
}

impl TwoFactor {
    pub fn new(mut cycles: Vec<DirectedCycle>) -> Self {
        cycles.sort();
        Self { cycles }
    }

    /// Builds a factor from raw vertex sequences.
    pub fn from_sequences<I, S>(seqs: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[Vertex]>,
    {
        let cycles = seqs
            .into_iter()
            .map(|s| DirectedCycle::new(s.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(cycles))
    }

    pub fn cycles(&self) -> &[DirectedCycle] {
        &self.cycles
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.cycles.iter().flat_map(|c| c.arcs())
    }

    pub fn vertex_total(&self) -> usize {
        self.cycles.iter().map(DirectedCycle::len).sum()
    }

    /// The common cycle length, if every cycle has the same one.
    pub fn uniform_length(&self) -> Option<usize> {
        let first = self.cycles.first()?.len();
        self.cycles.iter().all(|c| c.len() == first).then_some(first)
    }

    pub fn map<F: Fn(Vertex) -> Vertex + Copy>(&self, f: F) -> Result<Self> {
        Ok(Self::new(self.cycles.iter().map(|c| c.map(f)).collect::<Result<_>>()?))
    }

    /// Union with a factor on a disjoint vertex set.
    pub fn join(&self, other: &TwoFactor) -> Self {
        Self::new(self.cycles.iter().chain(other.cycles.iter()).cloned().collect())
    }
}

impl fmt::Display for TwoFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// An ordered list of 2-factors claimed to partition the arcs of `host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    host: Digraph,
    factors: Vec<TwoFactor>,
}

impl Factorization {
    pub fn new(host: Digraph, factors: Vec<TwoFactor>) -> Self {
        Self { host, factors }
    }

    pub fn host(&self) -> &Digraph {
        &self.host
    }

    pub fn factors(&self) -> &[TwoFactor] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<TwoFactor> {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn verify(&self, expect: Option<&CycleProfile>) -> Verdict {
        verify_factors(&self.host, &self.factors, expect)
    }

    /// Verifies and turns a failing verdict into an error; used by every
    /// construction before it returns.
    pub(crate) fn checked(self, expect: Option<&CycleProfile>, what: &str) -> Result<Self> {
        let verdict = self.verify(expect);
        if verdict.valid {
            Ok(self)
        } else {
            Err(Error::Defect(format!("{what}: {verdict}")))
        }
    }

    /// Factor counts by uniform cycle length.
    pub fn counts(&self) -> CycleProfile {
        let mut p = CycleProfile::default();
        for f in &self.factors {
            if let Some(l) = f.uniform_length() {
                p.add(l, 1);
            }
        }
        p
    }
}

/// Relabels every cycle through `injection` and rehomes the factorization
/// on `new_host`. Verification against the new host is left to the caller.
pub fn map_vertices<F>(f: &Factorization, injection: F, new_host: Digraph) -> Result<Factorization>
where
    F: Fn(Vertex) -> Vertex + Copy,
{
    let v = f.host.vertex_count();
    let mut image = vec![false; new_host.vertex_count()];
    for x in 0..v {
        let y = injection(x);
        if y >= image.len() {
            return Err(Error::InvalidParameter(format!(
                "vertex {x} maps to {y}, outside 0..{}",
                image.len()
            )));
        }
        if std::mem::replace(&mut image[y], true) {
            return Err(Error::InvalidParameter(format!(
                "vertex map is not injective at image {y}"
            )));
        }
    }
    let factors = f.factors.iter().map(|t| t.map(injection)).collect::<Result<_>>()?;
    Ok(Factorization::new(new_host, factors))
}

/// Combines factorizations living on disjoint vertex sets of `host` into one:
/// factor `j` of the result is the union of factor `j` of every part.
pub fn merge_parallel(parts: &[Factorization], host: Digraph) -> Result<Factorization> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidParameter("merge_parallel needs at least one part".into()));
    };
    let k = first.len();
    if let Some(bad) = parts.iter().find(|p| p.len() != k) {
        return Err(Error::InvalidParameter(format!(
            "parts have mismatched factor counts ({k} vs {})",
            bad.len()
        )));
    }
    let factors = (0..k)
        .map(|j| TwoFactor::new(parts.iter().flat_map(|p| p.factors[j].cycles.iter().cloned()).collect()))
        .collect();
    Ok(Factorization::new(host, factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::complete_symmetric;

    fn k3() -> Factorization {
        let host = complete_symmetric(3).unwrap();
        Factorization::new(
            host,
            vec![
                TwoFactor::from_sequences([[0, 1, 2]]).unwrap(),
                TwoFactor::from_sequences([[0, 2, 1]]).unwrap(),
            ],
        )
    }

    #[test]
    fn identity_map_is_identity() {
        let f = k3();
        let g = map_vertices(&f, |x| x, complete_symmetric(3).unwrap()).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn map_rejects_collisions() {
        let f = k3();
        assert!(map_vertices(&f, |x| x % 2, complete_symmetric(3).unwrap()).is_err());
        assert!(map_vertices(&f, |x| x + 5, complete_symmetric(3).unwrap()).is_err());
    }

    #[test]
    fn merge_combines_blocks() {
        let host = complete_symmetric(6).unwrap();
        let a = map_vertices(&k3(), |x| x, host.clone()).unwrap();
        let b = map_vertices(&k3(), |x| x + 3, host.clone()).unwrap();
        let m = merge_parallel(&[a, b], host).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.factors()[0].to_string(), "(0,1,2)(3,4,5)");
        assert!(merge_parallel(&[], complete_symmetric(3).unwrap()).is_err());
    }

    #[test]
    fn merge_rejects_mismatched_counts() {
        let host = complete_symmetric(6).unwrap();
        let a = map_vertices(&k3(), |x| x, host.clone()).unwrap();
        let mut short = a.clone();
        short.factors.pop();
        assert!(merge_parallel(&[a, short], host).is_err());
    }

    #[test]
    fn single_part_merge_is_identity() {
        let f = k3();
        let m = merge_parallel(std::slice::from_ref(&f), f.host().clone()).unwrap();
        assert_eq!(m, f);
    }
}
