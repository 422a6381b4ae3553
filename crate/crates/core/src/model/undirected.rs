//! Undirected 2-factorizations (and 1-factorizations, as length-2 cycles).
//!
//! An undirected host is a symmetric [`Digraph`]; edge `{x,y}` is present
//! when both arcs are. These objects are intermediates: they feed the
//! doubling construction and never appear in the atlas.

use std::fmt;

use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};
use crate::model::cycle::UndirectedCycle;
use crate::model::spec::CycleProfile;
use crate::model::verify::{check_units, Unit, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UndirectedFactor {
    cycles: Vec<UndirectedCycle>,
}

impl UndirectedFactor {
    pub fn new(mut cycles: Vec<UndirectedCycle>) -> Self {
        cycles.sort();
        Self { cycles }
    }

    pub fn from_sequences<I, S>(seqs: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[Vertex]>,
    {
        let cycles = seqs
            .into_iter()
            .map(|s| UndirectedCycle::new(s.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(cycles))
    }

    pub fn cycles(&self) -> &[UndirectedCycle] {
        &self.cycles
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.cycles.iter().flat_map(|c| c.edges())
    }

    pub fn map<F: Fn(Vertex) -> Vertex + Copy>(&self, f: F) -> Result<Self> {
        Ok(Self::new(self.cycles.iter().map(|c| c.map(f)).collect::<Result<_>>()?))
    }

    pub fn uniform_length(&self) -> Option<usize> {
        let first = self.cycles.first()?.len();
        self.cycles.iter().all(|c| c.len() == first).then_some(first)
    }
}

impl fmt::Display for UndirectedFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A decomposition of an undirected host into spanning unions of cycles
/// (degree 2) or perfect matchings (length-2 "cycles", degree 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedTwoFactorization {
    host: Digraph,
    factors: Vec<UndirectedFactor>,
}

impl UndirectedTwoFactorization {
    pub fn new(host: Digraph, factors: Vec<UndirectedFactor>) -> Result<Self> {
        if !host.is_symmetric() {
            return Err(Error::InvalidParameter(
                "undirected host must be a symmetric digraph".into(),
            ));
        }
        Ok(Self { host, factors })
    }

    pub fn host(&self) -> &Digraph {
        &self.host
    }

    pub fn factors(&self) -> &[UndirectedFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn verify(&self, expect: Option<&CycleProfile>) -> Verdict {
        verify_undirected(&self.host, &self.factors, expect)
    }

    pub(crate) fn checked(self, expect: Option<&CycleProfile>, what: &str) -> Result<Self> {
        let verdict = self.verify(expect);
        if verdict.valid {
            Ok(self)
        } else {
            Err(Error::Defect(format!("{what}: {verdict}")))
        }
    }

    /// Relabels onto a new symmetric host.
    pub fn map_vertices<F>(&self, injection: F, new_host: Digraph) -> Result<Self>
    where
        F: Fn(Vertex) -> Vertex + Copy,
    {
        let factors = self.factors.iter().map(|f| f.map(injection)).collect::<Result<_>>()?;
        Self::new(new_host, factors)
    }
}

/// Orientation-agnostic verifier: edges are compared as unordered pairs.
pub fn verify_undirected(host: &Digraph, factors: &[UndirectedFactor], expect: Option<&CycleProfile>) -> Verdict {
    let units = factors.iter().map(|f| Unit {
        cycle_lengths: f.cycles().iter().map(|c| c.len()).collect(),
        vertices: Box::new(f.cycles().iter().flat_map(|c| c.vertices().iter().copied())),
        pairs: Box::new(f.edges()),
    });
    check_units(
        host.vertex_count(),
        host.arc_count() / 2,
        &|a, b| host.has_arc(a, b) && host.has_arc(b, a),
        &|| Box::new(host.arcs().filter(|&(t, h)| t < h)),
        units,
        expect,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::complete_symmetric;

    #[test]
    fn k5_hamilton_pair() {
        let host = complete_symmetric(5).unwrap();
        let fs = vec![
            UndirectedFactor::from_sequences([[0, 1, 2, 3, 4]]).unwrap(),
            UndirectedFactor::from_sequences([[0, 2, 4, 1, 3]]).unwrap(),
        ];
        let u = UndirectedTwoFactorization::new(host, fs).unwrap();
        let v = u.verify(Some(&CycleProfile::single(5, 2)));
        assert!(v.valid, "{v}");
    }

    #[test]
    fn reversed_cycle_is_same_edge_set() {
        let host = complete_symmetric(5).unwrap();
        let fs = vec![
            UndirectedFactor::from_sequences([[0, 1, 2, 3, 4]]).unwrap(),
            UndirectedFactor::from_sequences([[4, 3, 2, 1, 0]]).unwrap(),
        ];
        let v = verify_undirected(&host, &fs, None);
        assert!(!v.valid);
    }

    #[test]
    fn matchings_of_k4() {
        let host = complete_symmetric(4).unwrap();
        let fs = vec![
            UndirectedFactor::from_sequences([[0, 1], [2, 3]]).unwrap(),
            UndirectedFactor::from_sequences([[0, 2], [1, 3]]).unwrap(),
            UndirectedFactor::from_sequences([[0, 3], [1, 2]]).unwrap(),
        ];
        assert!(verify_undirected(&host, &fs, Some(&CycleProfile::single(2, 3))).valid);
    }
}
