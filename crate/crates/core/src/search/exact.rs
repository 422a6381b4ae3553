use std::time::Instant;

use crate::digraph::Vertex;
use crate::error::{Error, Result};
use crate::model::{
    DirectedCycle, Factorization, TwoFactor, UndirectedCycle, UndirectedFactor, UndirectedTwoFactorization,
};
use crate::search::{Budget, HostKind, SearchInstance, SearchOutcome, SearchStats, SearchStatus, Witness};

/// Largest host the bitmask engine handles.
pub const MAX_SEARCH_ORDER: usize = 64;

/// Exact backtracking over factors.
///
/// Factors are built one at a time. Each new factor must contain the least
/// remaining arc (edge) at vertex 0, which fixes the order of factors
/// completely; the engine branches on the factor's cycle length and its
/// cycles. Cycles start at the least vertex the factor has not covered and
/// grow through heads in increasing order. On complete hosts the first
/// factor is fixed to `(0,…,L-1)(L,…,2L-1)…` for the length with the fewest
/// factors, since any factor can be relabeled to that form.
///
/// `None` is only returned after the whole tree is explored; running out of
/// budget always yields `ExhaustedBudget`.
pub fn exact_search(inst: &SearchInstance) -> Result<SearchOutcome> {
    let start = Instant::now();
    let v = inst.host.vertex_count();
    if v > MAX_SEARCH_ORDER {
        return Err(Error::InvalidParameter(format!(
            "exact search supports at most {MAX_SEARCH_ORDER} vertices, got {v}"
        )));
    }
    let directed = inst.kind == HostKind::Directed;
    if !directed && !inst.host.is_symmetric() {
        return Err(Error::InvalidParameter(
            "undirected search needs a symmetric host".into(),
        ));
    }
    let pair_total = if directed {
        inst.host.arc_count()
    } else {
        inst.host.arc_count() / 2
    };
    let demand: usize = inst
        .profile
        .iter()
        .map(|(l, c)| c * if !directed && l == 2 { v / 2 } else { v })
        .sum();
    if demand != pair_total || inst.profile.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "profile {} needs {demand} {} but the host has {pair_total}",
            inst.profile,
            if directed { "arcs" } else { "edges" }
        )));
    }
    let none = |nodes| SearchOutcome {
        status: SearchStatus::None,
        witness: None,
        stats: SearchStats {
            nodes,
            max_depth: 0,
            elapsed: start.elapsed(),
        },
    };
    if inst
        .profile
        .lengths()
        .any(|l| !v.is_multiple_of(l) || (l == 2 && !directed && !v.is_multiple_of(2)))
    {
        return Ok(none(0));
    }

    let mut out = vec![0u64; v];
    for (t, h) in inst.host.arcs() {
        out[t] |= 1 << h;
    }
    if out.contains(&0) {
        return Ok(none(0));
    }
    let inn = transpose(&out);
    let lengths: Vec<usize> = inst.profile.lengths().collect();
    let remaining: Vec<usize> = inst.profile.iter().map(|(_, c)| c).collect();
    let full = if v == 64 { u64::MAX } else { (1u64 << v) - 1 };

    let mut e = Engine {
        v,
        directed,
        out,
        inn,
        lengths,
        remaining,
        factors: Vec::new(),
        cycles: Vec::new(),
        path: Vec::new(),
        covered: 0,
        full,
        nodes: 0,
        max_depth: 0,
        budget: inst.budget,
        start,
        aborted: false,
    };

    let complete = inst.host.arc_count() == v * (v - 1);
    let found = if complete {
        e.run_with_canonical_first()
    } else {
        e.next_factor()
    };

    let stats = SearchStats {
        nodes: e.nodes,
        max_depth: e.max_depth,
        elapsed: start.elapsed(),
    };
    if found {
        let witness = e.witness(inst)?;
        let verdict = match &witness {
            Witness::Directed(f) => f.verify(Some(&inst.profile)),
            Witness::Undirected(u) => u.verify(Some(&inst.profile)),
        };
        if !verdict.valid {
            return Err(Error::Defect(format!("search witness rejected: {verdict}")));
        }
        return Ok(SearchOutcome {
            status: SearchStatus::Found,
            witness: Some(witness),
            stats,
        });
    }
    Ok(SearchOutcome {
        status: if e.aborted {
            SearchStatus::ExhaustedBudget
        } else {
            SearchStatus::None
        },
        witness: None,
        stats,
    })
}

fn transpose(out: &[u64]) -> Vec<u64> {
    let mut inn = vec![0u64; out.len()];
    for (t, &row) in out.iter().enumerate() {
        for h in bits(row) {
            inn[h] |= 1 << t;
        }
    }
    inn
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

struct Engine {
    v: usize,
    directed: bool,
    out: Vec<u64>,
    inn: Vec<u64>,
    lengths: Vec<usize>,
    remaining: Vec<usize>,
    /// completed factors, each a list of cycles
    factors: Vec<Vec<Vec<Vertex>>>,
    /// completed cycles of the factor under construction
    cycles: Vec<Vec<Vertex>>,
    path: Vec<Vertex>,
    covered: u64,
    full: u64,
    nodes: u64,
    max_depth: usize,
    budget: Budget,
    start: Instant,
    aborted: bool,
}

impl Engine {
    #[inline]
    fn has(&self, t: Vertex, h: Vertex) -> bool {
        self.out[t] & (1 << h) != 0
    }

    #[inline]
    fn take(&mut self, t: Vertex, h: Vertex) {
        self.out[t] &= !(1 << h);
        self.inn[h] &= !(1 << t);
        if !self.directed {
            self.out[h] &= !(1 << t);
            self.inn[t] &= !(1 << h);
        }
    }

    #[inline]
    fn put(&mut self, t: Vertex, h: Vertex) {
        self.out[t] |= 1 << h;
        self.inn[h] |= 1 << t;
        if !self.directed {
            self.out[h] |= 1 << t;
            self.inn[t] |= 1 << h;
        }
    }

    /// Edges or arcs a closed cycle uses, in traversal order.
    fn cycle_pairs(&self, c: &[Vertex]) -> Vec<(Vertex, Vertex)> {
        if !self.directed && c.len() == 2 {
            return vec![(c[0], c[1])];
        }
        (0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect()
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes >= self.budget.max_nodes
            || (self.nodes.is_multiple_of(4096) && self.start.elapsed() >= self.budget.max_time)
        {
            self.aborted = true;
        }
        self.aborted
    }

    fn run_with_canonical_first(&mut self) -> bool {
        // the scarcest length goes first; ties favour the longer cycle
        let li = (0..self.lengths.len())
            .filter(|&i| self.remaining[i] > 0)
            .min_by_key(|&i| (self.remaining[i], std::cmp::Reverse(self.lengths[i])))
            .expect("nonempty profile");
        let l = self.lengths[li];
        let first: Vec<Vec<Vertex>> = (0..self.v / l).map(|k| (k * l..(k + 1) * l).collect()).collect();
        for c in &first {
            for (t, h) in self.cycle_pairs(c) {
                self.take(t, h);
            }
        }
        self.remaining[li] -= 1;
        self.factors.push(first);
        self.next_factor()
    }

    fn next_factor(&mut self) -> bool {
        self.max_depth = self.max_depth.max(self.factors.len());
        if self.remaining.iter().all(|&c| c == 0) {
            return self.out.iter().all(|&m| m == 0);
        }
        let Some(j0) = bits(self.out[0]).next() else {
            return false;
        };
        let saved = self.covered;
        for li in 0..self.lengths.len() {
            if self.remaining[li] == 0 {
                continue;
            }
            let l = self.lengths[li];
            self.remaining[li] -= 1;
            self.covered = 1 | (1 << j0);
            self.take(0, j0);
            self.path.clear();
            self.path.extend([0, j0]);
            let found = self.extend(l);
            if found {
                return true;
            }
            self.put(0, j0);
            self.remaining[li] += 1;
            if self.aborted {
                break;
            }
        }
        self.path.clear();
        self.covered = saved;
        false
    }

    fn extend(&mut self, l: usize) -> bool {
        if self.tick() {
            return false;
        }
        let cur = *self.path.last().expect("path nonempty");
        let u = self.path[0];
        if self.path.len() == l {
            if !self.directed && l == 2 {
                return self.cycle_done(l);
            }
            if !self.has(cur, u) || (!self.directed && self.path[1] > cur) {
                return false;
            }
            self.take(cur, u);
            if self.cycle_done(l) {
                return true;
            }
            self.put(cur, u);
            return false;
        }
        let mut cands = self.out[cur] & !self.covered;
        let closing = self.path.len() + 1 == l;
        if closing && (self.directed || l > 2) {
            cands &= self.inn[u];
            if !self.directed {
                // orientation: second vertex below the last
                let second = self.path[1];
                let upto = if second >= 63 { u64::MAX } else { (2u64 << second) - 1 };
                cands &= !upto;
            }
        }
        for w in bits(cands) {
            self.covered |= 1 << w;
            self.take(cur, w);
            self.path.push(w);
            if self.extend(l) {
                return true;
            }
            self.path.pop();
            self.put(cur, w);
            self.covered &= !(1 << w);
            if self.aborted {
                return false;
            }
        }
        false
    }

    /// Called with a closed cycle in `path`.
    fn cycle_done(&mut self, l: usize) -> bool {
        let closed = std::mem::take(&mut self.path);
        self.cycles.push(closed);
        let found = if self.covered == self.full {
            let factor = std::mem::take(&mut self.cycles);
            self.factors.push(factor);
            if self.next_factor() {
                return true;
            }
            self.cycles = self.factors.pop().expect("factor pushed");
            false
        } else if !self.forward_check(l) {
            false
        } else {
            let u = (!self.covered & self.full).trailing_zeros() as usize;
            self.covered |= 1 << u;
            self.path.push(u);
            if self.extend(l) {
                return true;
            }
            self.path.clear();
            self.covered &= !(1 << u);
            false
        };
        self.path = self.cycles.pop().expect("cycle pushed");
        found
    }

    /// Every uncovered vertex must still reach and be reached from another
    /// uncovered vertex.
    fn forward_check(&self, l: usize) -> bool {
        let free = !self.covered & self.full;
        bits(free).all(|x| {
            let o = self.out[x] & free;
            if self.directed {
                o != 0 && self.inn[x] & free != 0
            } else if l == 2 {
                o != 0
            } else {
                o.count_ones() >= 2
            }
        })
    }

    fn witness(&self, inst: &SearchInstance) -> Result<Witness> {
        if self.directed {
            let factors = self
                .factors
                .iter()
                .map(|f| {
                    Ok(TwoFactor::new(
                        f.iter().map(|c| DirectedCycle::new(c.clone())).collect::<Result<_>>()?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Witness::Directed(Factorization::new(inst.host.clone(), factors)))
        } else {
            let factors = self
                .factors
                .iter()
                .map(|f| {
                    Ok(UndirectedFactor::new(
                        f.iter()
                            .map(|c| UndirectedCycle::new(c.clone()))
                            .collect::<Result<_>>()?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Witness::Undirected(UndirectedTwoFactorization::new(
                inst.host.clone(),
                factors,
            )?))
        }
    }
}
