use std::fmt;

use crate::digraph::Vertex;
use crate::error::{Error, Result};

/// A directed cycle, stored rotated so its least vertex comes first.
///
/// Direction is significant: `(0,1,2)` and `(0,2,1)` are different cycles.
/// Length-2 cycles (digons) are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedCycle {
    vertices: Vec<Vertex>,
}

/// Rotates `seq` so the least vertex is first. Fails on repeated vertices or
/// sequences shorter than two.
pub fn canonical_cycle(seq: &[Vertex]) -> Result<DirectedCycle> {
    DirectedCycle::new(seq.to_vec())
}

fn check_distinct(seq: &[Vertex]) -> Result<()> {
    if seq.len() < 2 {
        return Err(Error::InvalidCycle(format!(
            "cycle needs at least 2 vertices, got {}",
            seq.len()
        )));
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidCycle(format!("vertex {} repeated", w[0])));
    }
    Ok(())
}

impl DirectedCycle {
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        check_distinct(&vertices)?;
        let pos = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        vertices.rotate_left(pos);
        Ok(Self { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    /// Arcs `(v_i, v_{i+1})`, indices mod length.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v.reverse();
        Self::new(v).expect("reversal keeps vertices distinct")
    }

    /// Applies a vertex relabeling. Fails if the map collapses two vertices.
    pub fn map<F: Fn(Vertex) -> Vertex>(&self, f: F) -> Result<Self> {
        Self::new(self.vertices.iter().map(|&v| f(v)).collect())
    }
}

impl fmt::Display for DirectedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// An undirected cycle (or, at length 2, a single matching edge), stored
/// rotated to its least vertex and oriented so the second vertex is smaller
/// than the last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UndirectedCycle {
    vertices: Vec<Vertex>,
}

impl UndirectedCycle {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        let mut c = DirectedCycle::new(vertices)?.vertices;
        if c.len() > 2 && c[1] > c[c.len() - 1] {
            c[1..].reverse();
        }
        Ok(Self { vertices: c })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edges as `(min, max)` pairs. A length-2 cycle is one edge.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.vertices.len();
        let count = if n == 2 { 1 } else { n };
        (0..count)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// The two traversal orientations of this cycle. For a matching edge
    /// these are the two arcs of the digon, which coincide as one digon.
    pub fn orientations(&self) -> (DirectedCycle, DirectedCycle) {
        let forward = DirectedCycle::new(self.vertices.clone()).expect("distinct vertices");
        let backward = forward.reversed();
        (forward, backward)
    }

    pub fn map<F: Fn(Vertex) -> Vertex>(&self, f: F) -> Result<Self> {
        Self::new(self.vertices.iter().map(|&v| f(v)).collect())
    }
}

impl fmt::Display for UndirectedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(seq: &[Vertex]) -> DirectedCycle {
        canonical_cycle(seq).unwrap()
    }

    #[test]
    fn rotation_to_least_vertex() {
        assert_eq!(c(&[3, 0, 2, 1]).vertices(), &[0, 2, 1, 3]);
        assert_eq!(c(&[0, 1, 2]).vertices(), &[0, 1, 2]);
        assert_ne!(c(&[0, 2, 1]), c(&[0, 1, 2]));
        assert_eq!(c(&[5, 4]).vertices(), &[4, 5]);
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(canonical_cycle(&[1, 2, 1]).is_err());
        assert!(canonical_cycle(&[4]).is_err());
        assert!(canonical_cycle(&[]).is_err());
    }

    #[test]
    fn arcs_wrap() {
        let arcs: Vec<_> = c(&[2, 0, 1]).arcs().collect();
        assert_eq!(arcs, vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn undirected_canonical_form_ignores_direction() {
        let a = UndirectedCycle::new(vec![3, 1, 4, 0]).unwrap();
        let b = UndirectedCycle::new(vec![0, 4, 1, 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &[0, 3, 1, 4]);
        assert_eq!(UndirectedCycle::new(vec![7, 2]).unwrap().edges(), vec![(2, 7)]);
    }
}
