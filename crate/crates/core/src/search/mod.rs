//! Exact search for small factorization instances, directed or undirected.

mod exact;

use std::time::Duration;

use crate::digraph::Digraph;
use crate::model::{CycleProfile, Factorization, UndirectedTwoFactorization};

pub use exact::{exact_search, MAX_SEARCH_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HostKind {
    Directed,
    Undirected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    FindOne,
    ProveNone,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(60),
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes,
            max_time: Duration::from_secs(u64::MAX / 4),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchInstance {
    pub host: Digraph,
    pub kind: HostKind,
    pub profile: CycleProfile,
    pub budget: Budget,
    pub mode: SearchMode,
}

impl SearchInstance {
    pub fn directed(host: Digraph, profile: CycleProfile) -> Self {
        Self {
            host,
            kind: HostKind::Directed,
            profile,
            budget: Budget::default(),
            mode: SearchMode::FindOne,
        }
    }

    pub fn undirected(host: Digraph, profile: CycleProfile) -> Self {
        Self {
            kind: HostKind::Undirected,
            ..Self::directed(host, profile)
        }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    /// The search tree was exhausted without a witness.
    None,
    ExhaustedBudget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Directed(Factorization),
    Undirected(UndirectedTwoFactorization),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    /// Most factors completed at once.
    pub max_depth: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<Witness>,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn directed(self) -> Option<Factorization> {
        match self.witness {
            Some(Witness::Directed(f)) => Some(f),
            _ => None,
        }
    }

    pub fn undirected(self) -> Option<UndirectedTwoFactorization> {
        match self.witness {
            Some(Witness::Undirected(u)) => Some(u),
            _ => None,
        }
    }
}
