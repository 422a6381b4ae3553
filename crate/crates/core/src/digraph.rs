//! Host digraphs: complete symmetric digraphs, equipartite hosts, wreath
//! blow-ups and Cayley digraphs over `Z_b × Z_a`.
//!
//! Every host uses the same flat labeling: a vertex with block coordinate
//! `block` and offset `offset` inside a block of size `size` is the integer
//! `block * size + offset`.

use std::fmt;

use crate::error::{Error, Result};

/// A vertex label in `[0, v)`.
pub type Vertex = usize;

/// A coordinate in the product group `Z_b × Z_a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairCoord {
    pub level: usize,
    pub position: usize,
}

impl PairCoord {
    pub const fn new(level: usize, position: usize) -> Self {
        Self { level, position }
    }

    /// Flat index `level * a + position`.
    pub fn flat(self, a: usize) -> Vertex {
        self.level * a + self.position
    }

    pub fn from_flat(index: Vertex, a: usize) -> Self {
        Self::new(index / a, index % a)
    }

    /// Componentwise addition modulo `(b, a)`.
    pub fn add(self, other: PairCoord, b: usize, a: usize) -> Self {
        Self::new((self.level + other.level) % b, (self.position + other.position) % a)
    }
}

/// Partition of the vertex set into consecutive blocks of equal size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub block_size: usize,
    pub block_count: usize,
}

/// An immutable simple digraph on `[0, v)` with dense arc membership.
#[derive(Clone)]
pub struct Digraph {
    vertex_count: usize,
    words: Vec<u64>,
    arc_count: usize,
    blocks: Option<BlockStructure>,
}

impl Digraph {
    /// Builds a digraph from an arc list. Self-loops and out-of-range
    /// endpoints are rejected; repeated arcs collapse.
    pub fn from_arcs<I>(vertex_count: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if vertex_count == 0 {
            return Err(Error::InvalidParameter("digraph needs at least one vertex".into()));
        }
        let mut g = Self::empty(vertex_count);
        for (tail, head) in arcs {
            if tail >= vertex_count || head >= vertex_count {
                return Err(Error::InvalidParameter(format!(
                    "arc ({tail},{head}) outside vertex range 0..{vertex_count}"
                )));
            }
            if tail == head {
                return Err(Error::InvalidParameter(format!("self-loop at {tail}")));
            }
            g.insert(tail, head);
        }
        Ok(g)
    }

    fn empty(vertex_count: usize) -> Self {
        let bits = vertex_count * vertex_count;
        Self {
            vertex_count,
            words: vec![0; bits.div_ceil(64)],
            arc_count: 0,
            blocks: None,
        }
    }

    fn insert(&mut self, tail: Vertex, head: Vertex) {
        let bit = tail * self.vertex_count + head;
        let (w, b) = (bit / 64, bit % 64);
        if self.words[w] & (1 << b) == 0 {
            self.words[w] |= 1 << b;
            self.arc_count += 1;
        }
    }

    fn with_blocks(mut self, block_size: usize, block_count: usize) -> Self {
        self.blocks = Some(BlockStructure {
            block_size,
            block_count,
        });
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn blocks(&self) -> Option<BlockStructure> {
        self.blocks
    }

    #[inline]
    pub fn has_arc(&self, tail: Vertex, head: Vertex) -> bool {
        if tail >= self.vertex_count || head >= self.vertex_count {
            return false;
        }
        let bit = tail * self.vertex_count + head;
        self.words[bit / 64] & (1 << (bit % 64)) != 0
    }

    /// All arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let v = self.vertex_count;
        (0..v).flat_map(move |t| (0..v).filter(move |&h| self.has_arc(t, h)).map(move |h| (t, h)))
    }

    pub fn out_neighbors(&self, tail: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count).filter(move |&h| self.has_arc(tail, h))
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_neighbors(v).count()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        (0..self.vertex_count).filter(|&t| self.has_arc(t, v)).count()
    }

    /// True when every arc appears together with its reverse.
    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(t, h)| self.has_arc(h, t))
    }

    /// The sub-digraph induced on `vertices`, relabeled `vertices[i] ↦ i`.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<Self> {
        let mut g = Self::empty(vertices.len().max(1));
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if i != j && self.has_arc(a, b) {
                    g.insert(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Arc-disjoint union of two hosts on the same vertex set.
    pub fn union(&self, other: &Digraph) -> Result<Self> {
        if self.vertex_count != other.vertex_count {
            return Err(Error::InvalidParameter(
                "union of digraphs with different orders".into(),
            ));
        }
        let mut g = self.clone();
        g.blocks = None;
        for (t, h) in other.arcs() {
            g.insert(t, h);
        }
        Ok(g)
    }
}

impl PartialEq for Digraph {
    /// Equality as labeled arc sets; block annotations are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.words == other.words
    }
}

impl Eq for Digraph {}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("vertex_count", &self.vertex_count)
            .field("arc_count", &self.arc_count)
            .field("blocks", &self.blocks)
            .finish()
    }
}

/// `K_v*`: every ordered pair of distinct vertices is an arc.
pub fn complete_symmetric(v: usize) -> Result<Digraph> {
    if v < 2 {
        return Err(Error::InvalidParameter(format!("K_v* needs v >= 2, got {v}")));
    }
    let mut g = Digraph::empty(v);
    for t in 0..v {
        for h in 0..v {
            if t != h {
                g.insert(t, h);
            }
        }
    }
    Ok(g)
}

/// `K_{(part_size:parts)}*`: blocks `[i*part_size, (i+1)*part_size)` with
/// every arc between distinct blocks and none inside a block.
pub fn equipartite_symmetric(part_size: usize, parts: usize) -> Result<Digraph> {
    if part_size == 0 {
        return Err(Error::InvalidParameter("part size must be positive".into()));
    }
    if parts < 2 {
        return Err(Error::InvalidParameter(format!(
            "equipartite host needs at least 2 parts, got {parts}"
        )));
    }
    let v = part_size * parts;
    let mut g = Digraph::empty(v);
    for t in 0..v {
        for h in 0..v {
            if t / part_size != h / part_size {
                g.insert(t, h);
            }
        }
    }
    Ok(g.with_blocks(part_size, parts))
}

/// `base ≀ K̄_n`: vertex `(b, o)` is `b*n + o`, and `((b,o),(b',o'))` is an
/// arc exactly when `(b,b')` is an arc of `base`.
pub fn wreath_with_empty(base: &Digraph, n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("blow-up factor must be positive".into()));
    }
    let mut g = Digraph::empty(base.vertex_count() * n);
    for (t, h) in base.arcs() {
        for o in 0..n {
            for p in 0..n {
                g.insert(t * n + o, h * n + p);
            }
        }
    }
    Ok(g.with_blocks(n, base.vertex_count()))
}

/// Directed Cayley digraph on `Z_b × Z_a` with the given connection set.
pub fn cayley_product(b: usize, a: usize, connection: &[PairCoord]) -> Result<Digraph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("group orders must be positive".into()));
    }
    let mut g = Digraph::empty(a * b);
    for s in connection {
        let s = PairCoord::new(s.level % b, s.position % a);
        if s == PairCoord::new(0, 0) {
            return Err(Error::InvalidParameter(
                "identity in connection set would create self-loops".into(),
            ));
        }
        for level in 0..b {
            for position in 0..a {
                let g0 = PairCoord::new(level, position);
                g.insert(g0.flat(a), g0.add(s, b, a).flat(a));
            }
        }
    }
    Ok(g.with_blocks(a, b))
}

/// The directed cycle `0 → 1 → … → m-1 → 0` as a host.
pub fn directed_cycle_host(m: usize) -> Result<Digraph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("directed cycle needs m >= 2, got {m}")));
    }
    Digraph::from_arcs(m, (0..m).map(|i| (i, (i + 1) % m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_arc_counts() {
        assert_eq!(complete_symmetric(4).unwrap().arc_count(), 12);
        assert_eq!(complete_symmetric(8).unwrap().arc_count(), 56);
        assert_eq!(complete_symmetric(15).unwrap().arc_count(), 210);
        assert!(complete_symmetric(1).is_err());
    }

    #[test]
    fn complete_degrees() {
        for v in 2..20 {
            let g = complete_symmetric(v).unwrap();
            assert_eq!(g.arc_count(), v * (v - 1));
            for x in 0..v {
                assert_eq!(g.out_degree(x), v - 1);
                assert_eq!(g.in_degree(x), v - 1);
            }
        }
    }

    #[test]
    fn equipartite_shapes() {
        let g = equipartite_symmetric(5, 3).unwrap();
        assert_eq!((g.vertex_count(), g.arc_count()), (15, 150));
        let g = equipartite_symmetric(4, 2).unwrap();
        assert_eq!(g.arc_count(), 32);
        assert!(!g.has_arc(0, 3) && !g.has_arc(5, 7));
        assert!(g.has_arc(0, 4) && g.has_arc(7, 3));
        assert_eq!(equipartite_symmetric(1, 3).unwrap(), complete_symmetric(3).unwrap());
        assert!(equipartite_symmetric(3, 1).is_err());
    }

    #[test]
    fn wreath_shapes() {
        let c4 = directed_cycle_host(4).unwrap();
        let g = wreath_with_empty(&c4, 2).unwrap();
        assert_eq!((g.vertex_count(), g.arc_count()), (8, 16));

        let k2 = complete_symmetric(2).unwrap();
        assert_eq!(wreath_with_empty(&k2, 4).unwrap(), equipartite_symmetric(4, 2).unwrap());

        let left = wreath_with_empty(&wreath_with_empty(&k2, 2).unwrap(), 3).unwrap();
        let right = wreath_with_empty(&k2, 6).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn wreath_of_complete_is_equipartite() {
        for x in 2..6 {
            for h in 1..5 {
                let w = wreath_with_empty(&complete_symmetric(x).unwrap(), h).unwrap();
                assert_eq!(w, equipartite_symmetric(h, x).unwrap(), "x={x} h={h}");
            }
        }
    }

    #[test]
    fn cayley_gadget_hosts() {
        for m in 2..10 {
            let s1 = [PairCoord::new(0, 1), PairCoord::new(1, 1)];
            let g = cayley_product(2, m, &s1).unwrap();
            let blown = wreath_with_empty(&directed_cycle_host(m).unwrap(), 2).unwrap();
            // C_m ≀ K̄_2 labels (i, t) as 2i + t; the Cayley host labels (t, i) as t*m + i.
            let relabel = |x: Vertex| (x % 2) * m + x / 2;
            let mapped = Digraph::from_arcs(2 * m, blown.arcs().map(|(t, h)| (relabel(t), relabel(h)))).unwrap();
            assert_eq!(g, mapped, "m={m}");

            let s2 = [PairCoord::new(0, 1), PairCoord::new(1, 0), PairCoord::new(1, 1)];
            let gamma = cayley_product(2, m, &s2).unwrap();
            assert_eq!(gamma.arc_count(), 6 * m);
        }
        let g = cayley_product(2, 3, &[PairCoord::new(0, 1)]).unwrap();
        assert_eq!(g.arc_count(), 6);
        assert!(g.has_arc(0, 1) && g.has_arc(2, 0) && g.has_arc(5, 3));
        assert!(cayley_product(2, 3, &[PairCoord::new(0, 0)]).is_err());
        assert!(cayley_product(2, 3, &[PairCoord::new(2, 3)]).is_err());
    }

    #[test]
    fn cayley_shift_invariance() {
        let conns: [&[PairCoord]; 3] = [
            &[PairCoord::new(0, 1), PairCoord::new(1, 1)],
            &[PairCoord::new(0, 1), PairCoord::new(1, 0), PairCoord::new(1, 1)],
            &[PairCoord::new(1, 2), PairCoord::new(0, 3)],
        ];
        for (b, a) in [(2, 8), (2, 5), (4, 4), (3, 7)] {
            for conn in conns {
                let g = cayley_product(b, a, conn).unwrap();
                for t in 0..a * b {
                    let shift = PairCoord::from_flat(t, a);
                    for (x, y) in g.arcs() {
                        let sx = PairCoord::from_flat(x, a).add(shift, b, a).flat(a);
                        let sy = PairCoord::from_flat(y, a).add(shift, b, a).flat(a);
                        assert!(g.has_arc(sx, sy));
                    }
                }
            }
        }
    }
}
