use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An instance `HWP*(v; m^r, n^s)`: a factorization of `K_v*` into `r`
/// directed `m`-cycle factors and `s` directed `n`-cycle factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProblemSpec {
    pub v: usize,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub s: usize,
}

impl ProblemSpec {
    pub fn new(v: usize, m: usize, n: usize, r: usize, s: usize) -> Result<Self> {
        if m < 2 || n < 2 {
            return Err(Error::InvalidParameter(format!(
                "cycle lengths must be >= 2, got m={m}, n={n}"
            )));
        }
        if m == n {
            return Err(Error::InvalidParameter(format!(
                "cycle lengths must differ, got m=n={m}"
            )));
        }
        if v < 2 {
            return Err(Error::InvalidParameter(format!("order must be >= 2, got {v}")));
        }
        Ok(Self { v, m, n, r, s })
    }

    /// Same instance with the cycle lengths ordered `m < n`.
    pub fn normalized(self) -> Self {
        if self.m < self.n {
            self
        } else {
            Self {
                m: self.n,
                n: self.m,
                r: self.s,
                s: self.r,
                ..self
            }
        }
    }

    pub fn profile(&self) -> CycleProfile {
        let mut p = CycleProfile::default();
        p.add(self.m, self.r);
        p.add(self.n, self.s);
        p
    }

    /// `(v, m, n, r, s)` with the `s`-side exchanged for the `r`-side.
    pub fn swapped(self) -> Self {
        Self {
            m: self.n,
            n: self.m,
            r: self.s,
            s: self.r,
            ..self
        }
    }
}

impl fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HWP*({}; {}^{}, {}^{})", self.v, self.m, self.r, self.n, self.s)
    }
}

/// Required or observed factor counts keyed by cycle length. Zero counts
/// are never stored, so two profiles compare equal exactly when they
/// describe the same multiset of factor types.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleProfile(BTreeMap<usize, usize>);

impl CycleProfile {
    pub fn single(length: usize, count: usize) -> Self {
        let mut p = Self::default();
        p.add(length, count);
        p
    }

    pub fn add(&mut self, length: usize, count: usize) {
        if count > 0 {
            *self.0.entry(length).or_insert(0) += count;
        }
    }

    pub fn get(&self, length: usize) -> usize {
        self.0.get(&length).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&l, &c)| (l, c))
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn factor_count(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CycleProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (l, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}:{c}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for CycleProfile {
    type Err = Error;

    /// Parses `L:K[,L:K]*`, e.g. `3:4,5:10`, optionally wrapped in braces as
    /// [`Display`](fmt::Display) writes it. Lengths must be at least 2.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidParameter(format!("profile `{s}`: {msg}"));
        let body = s.trim();
        let body = match body.strip_prefix('{') {
            Some(rest) => rest.strip_suffix('}').ok_or_else(|| bad("unclosed `{`".into()))?,
            None => body,
        };
        let mut p = CycleProfile::default();
        if body.trim().is_empty() {
            return Ok(p);
        }
        for part in body.split(',') {
            let (l, c) = part
                .trim()
                .split_once(':')
                .ok_or_else(|| bad(format!("expected LENGTH:COUNT, got `{part}`")))?;
            let l: usize = l.trim().parse().map_err(|_| bad(format!("bad length `{l}`")))?;
            let c: usize = c.trim().parse().map_err(|_| bad(format!("bad count `{c}`")))?;
            if l < 2 {
                return Err(bad(format!("cycle length {l} < 2")));
            }
            if p.0.contains_key(&l) {
                return Err(bad(format!("length {l} listed twice")));
            }
            p.add(l, c);
        }
        Ok(p)
    }
}
