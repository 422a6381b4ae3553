//! Catalog of base factorizations.
//!
//! The built-in atlas holds the transcribed appendix entries plus the base
//! cases the constructions need but the appendix does not print (pure
//! profiles at orders 8, 12, 15, 16 and the even counts at order 15). The
//! latter were produced by [`Atlas::ensure_generated`] and are shipped as
//! data. Every entry is verified when loaded.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::constructions::{double_factorization, even_hwp, kirkman_resolution, lcm, walecki_hamilton_decomposition};
use crate::digraph::{complete_symmetric, Digraph};
use crate::error::{Error, Result};
use crate::format::{parse_records, write_entry, Record};
use crate::model::{CycleProfile, Factorization, ProblemSpec, UndirectedFactor, UndirectedTwoFactorization};
use crate::search::{exact_search, Budget, SearchInstance, SearchStatus};

const APPENDIX: &str = include_str!("../data/appendix.txt");
const GENERATED_DOUBLING: &str = include_str!("../data/generated-doubling.txt");
const GENERATED_SEARCH: &str = include_str!("../data/generated-search.txt");
const COMPOSITE: &str = include_str!("../data/composite.txt");

/// Cases left open at order 15: `HWP*(15; 3^r, 5^s)` for `r ∈ {11,12,13}`
/// and `HWP*(15; 3^13, 15^1)`.
pub const UNKNOWN_OPEN: [(usize, usize, usize, usize, usize); 4] = [
    (15, 3, 5, 11, 3),
    (15, 3, 5, 12, 2),
    (15, 3, 5, 13, 1),
    (15, 3, 15, 13, 1),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Appendix,
    GeneratedDoubling,
    GeneratedSearch,
    Composite,
}

impl Provenance {
    pub const ALL: [Provenance; 4] = [
        Self::Appendix,
        Self::GeneratedDoubling,
        Self::GeneratedSearch,
        Self::Composite,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Appendix => "appendix",
            Self::GeneratedDoubling => "generated-doubling",
            Self::GeneratedSearch => "generated-search",
            Self::Composite => "composite",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown provenance `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EntryStatus {
    Verified,
    UnknownOpen,
}

/// A [`ProblemSpec`] normalized so that `m < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtlasKey(ProblemSpec);

impl AtlasKey {
    pub fn new(spec: ProblemSpec) -> Self {
        Self(spec.normalized())
    }

    pub fn spec(&self) -> &ProblemSpec {
        &self.0
    }

    /// The single cycle length of a pure profile.
    fn pure_length(&self) -> Option<usize> {
        let s = self.0;
        match (s.r, s.s) {
            (0, _) => Some(s.n),
            (_, 0) => Some(s.m),
            _ => None,
        }
    }

    fn file_stem(&self) -> String {
        let s = self.0;
        format!("{}_{}_{}_{}_{}", s.v, s.m, s.n, s.r, s.s)
    }
}

impl fmt::Display for AtlasKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0;
        write!(f, "{},{},{},{},{}", s.v, s.m, s.n, s.r, s.s)
    }
}

impl FromStr for AtlasKey {
    type Err = Error;

    /// Parses `v,m,n,r,s`.
    fn from_str(text: &str) -> Result<Self> {
        let nums = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad number `{t}` in key `{text}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let [v, m, n, r, s] = nums[..] else {
            return Err(Error::InvalidParameter(format!("key needs v,m,n,r,s, got `{text}`")));
        };
        Ok(Self::new(ProblemSpec::new(v, m, n, r, s)?))
    }
}

#[derive(Clone, Debug)]
pub struct AtlasEntry {
    pub key: AtlasKey,
    /// Absent exactly when `status` is [`EntryStatus::UnknownOpen`].
    pub factorization: Option<Factorization>,
    pub provenance: Provenance,
    pub status: EntryStatus,
}

impl AtlasEntry {
    /// Canonical atlas text for a verified entry.
    pub fn to_text(&self) -> Option<String> {
        self.factorization
            .as_ref()
            .map(|f| write_entry(self.key.spec(), f.factors()))
    }
}

fn verify_record(record: Record, index: usize, provenance: Provenance) -> Result<AtlasEntry> {
    let spec = record.spec;
    let label = format!("{} ({spec})", index + 1);
    let f = Factorization::new(complete_symmetric(spec.v)?, record.factors);
    let verdict = f.verify(Some(&spec.profile()));
    if !verdict.valid {
        let failure = verdict.first_failure.expect("invalid verdict carries a failure");
        return Err(Error::Parse {
            entry: label,
            factor: failure.factor.map(|i| i + 1),
            message: failure.reason.to_string(),
        });
    }
    Ok(AtlasEntry {
        key: AtlasKey::new(spec),
        factorization: Some(f),
        provenance,
        status: EntryStatus::Verified,
    })
}

/// Parses and verifies atlas text; entries are tagged as appendix data.
pub fn parse_atlas_text(text: &str) -> Result<Vec<AtlasEntry>> {
    parse_with_provenance(text, Provenance::Appendix)
}

pub fn parse_with_provenance(text: &str, provenance: Provenance) -> Result<Vec<AtlasEntry>> {
    parse_records(text)?
        .into_iter()
        .enumerate()
        .map(|(i, r)| verify_record(r, i, provenance))
        .collect()
}

/// Whether `spec` is a base case [`Atlas::ensure_generated`] may produce.
pub fn is_generatable(spec: &ProblemSpec) -> bool {
    let pure = spec.r == 0 || spec.s == 0;
    let base_order = [8, 12, 15, 16].contains(&spec.v);
    (pure && base_order) || (spec.v == 15 && spec.r.is_multiple_of(2) && spec.s.is_multiple_of(2))
}

#[derive(Clone, Debug, Default)]
pub struct Atlas {
    entries: BTreeMap<AtlasKey, AtlasEntry>,
    /// Pure-profile entries by `(v, L)`.
    pure: BTreeMap<(usize, usize), AtlasKey>,
    cache_dir: Option<PathBuf>,
}

impl Atlas {
    /// The shipped catalog: appendix, generated entries and open cases.
    pub fn builtin() -> Result<Self> {
        let mut atlas = Self::default();
        for (text, provenance) in [
            (APPENDIX, Provenance::Appendix),
            (GENERATED_DOUBLING, Provenance::GeneratedDoubling),
            (GENERATED_SEARCH, Provenance::GeneratedSearch),
            (COMPOSITE, Provenance::Composite),
        ] {
            for e in parse_with_provenance(text, provenance)? {
                atlas.insert(e);
            }
        }
        for (v, m, n, r, s) in UNKNOWN_OPEN {
            atlas.insert(AtlasEntry {
                key: AtlasKey::new(ProblemSpec::new(v, m, n, r, s)?),
                factorization: None,
                provenance: Provenance::Appendix,
                status: EntryStatus::UnknownOpen,
            });
        }
        Ok(atlas)
    }

    /// Generated entries are read from and written to `dir`.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    pub fn insert(&mut self, entry: AtlasEntry) {
        if let (Some(l), EntryStatus::Verified) = (entry.key.pure_length(), entry.status) {
            self.pure.entry((entry.key.spec().v, l)).or_insert(entry.key);
        }
        self.entries.insert(entry.key, entry);
    }

    pub fn entries(&self) -> impl Iterator<Item = &AtlasEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The stored entry for `spec`. Pure profiles match any entry with the
    /// same single cycle length; the returned key is the requested one.
    pub fn lookup(&self, spec: &ProblemSpec) -> Option<AtlasEntry> {
        let key = AtlasKey::new(*spec);
        if let Some(e) = self.entries.get(&key) {
            return Some(e.clone());
        }
        let l = key.pure_length()?;
        let alias = self.pure.get(&(spec.v, l))?;
        let mut e = self.entries[alias].clone();
        e.key = key;
        Some(e)
    }

    pub fn is_unknown_open(&self, spec: &ProblemSpec) -> bool {
        self.entries
            .get(&AtlasKey::new(*spec))
            .is_some_and(|e| e.status == EntryStatus::UnknownOpen)
    }

    /// A verified factorization for a base case, generating it when the
    /// atlas lacks it and the case is generatable.
    pub fn factorization(&self, spec: &ProblemSpec, budget: Budget) -> Result<Factorization> {
        let entry = match self.lookup(spec) {
            Some(e) => e,
            None if is_generatable(spec) => self.ensure_generated(spec, budget)?,
            None => return Err(Error::UnsupportedByAtlas(*spec)),
        };
        match entry.factorization {
            Some(f) => Ok(f),
            None => Err(Error::UnknownOpen(*spec)),
        }
    }

    /// Returns the entry for a generatable base case: from the atlas, from
    /// the cache directory, or freshly generated (and then cached).
    ///
    /// Odd orders search for an undirected solution and double it; even
    /// orders search the digraph directly and fall back to the even
    /// construction from a smaller base for pure profiles.
    pub fn ensure_generated(&self, spec: &ProblemSpec, budget: Budget) -> Result<AtlasEntry> {
        let key = AtlasKey::new(*spec);
        if let Some(e) = self.lookup(spec) {
            return match e.status {
                EntryStatus::Verified => Ok(e),
                EntryStatus::UnknownOpen => Err(Error::UnknownOpen(*spec)),
            };
        }
        if spec.r + spec.s + 1 != spec.v {
            return Err(Error::Infeasible {
                spec: *spec,
                reason: "r+s ≠ v−1".into(),
            });
        }
        if !is_generatable(spec) {
            return Err(Error::UnsupportedByAtlas(*spec));
        }
        if let Some(e) = self.read_cache(&key)? {
            return Ok(e);
        }
        let (f, provenance) = self.generate(&key, budget)?;
        let f = f.checked(Some(&key.spec().profile()), "generated entry")?;
        let entry = AtlasEntry {
            key,
            factorization: Some(f),
            provenance,
            status: EntryStatus::Verified,
        };
        self.write_cache(&entry)?;
        Ok(entry)
    }

    fn read_cache(&self, key: &AtlasKey) -> Result<Option<AtlasEntry>> {
        let Some(dir) = &self.cache_dir else {
            return Ok(None);
        };
        for p in Provenance::ALL {
            let path = dir.join(format!("{}.{p}.txt", key.file_stem()));
            let text = match fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => continue,
                Err(e) => return Err(e.into()),
            };
            let corrupt = |reason: String| Error::CacheCorruption {
                key: key.to_string(),
                reason,
            };
            let mut entries = parse_with_provenance(&text, p).map_err(|e| corrupt(e.to_string()))?;
            if entries.len() != 1 || entries[0].key != *key {
                return Err(corrupt(format!(
                    "{} does not hold exactly the entry {key}",
                    path.display()
                )));
            }
            return Ok(entries.pop());
        }
        Ok(None)
    }

    fn write_cache(&self, entry: &AtlasEntry) -> Result<()> {
        let (Some(dir), Some(text)) = (&self.cache_dir, entry.to_text()) else {
            return Ok(());
        };
        fs::create_dir_all(dir)?;
        let name = format!("{}.{}.txt", entry.key.file_stem(), entry.provenance);
        let tmp = tempfile_path(dir, &name);
        fs::write(&tmp, text)?;
        fs::rename(&tmp, dir.join(name))?;
        Ok(())
    }

    fn generate(&self, key: &AtlasKey, budget: Budget) -> Result<(Factorization, Provenance)> {
        let spec = *key.spec();
        let timeout = || Error::GenerationTimeout(key.to_string());
        if spec.v % 2 == 1 {
            let mut half = CycleProfile::default();
            half.add(spec.m, spec.r / 2);
            half.add(spec.n, spec.s / 2);
            let undirected = match key.pure_length() {
                Some(3) if spec.v % 6 == 3 => kirkman_resolution(spec.v, budget)?,
                Some(l) if l == spec.v => walecki_hamilton_decomposition(spec.v)?,
                _ => match kirkman_seeded(&spec, budget)? {
                    Some(u) => u,
                    None => {
                        let host = complete_symmetric(spec.v)?;
                        let out = exact_search(&SearchInstance::undirected(host, half).with_budget(budget))?;
                        match out.status {
                            SearchStatus::Found => out.undirected().expect("found carries a witness"),
                            SearchStatus::None => return Err(Error::UnsupportedByAtlas(spec)),
                            SearchStatus::ExhaustedBudget => return Err(timeout()),
                        }
                    }
                },
            };
            return Ok((double_factorization(&undirected)?, Provenance::GeneratedDoubling));
        }
        let host = complete_symmetric(spec.v)?;
        let out = exact_search(&SearchInstance::directed(host, spec.profile()).with_budget(budget))?;
        match out.status {
            SearchStatus::Found => {
                return Ok((
                    out.directed().expect("found carries a witness"),
                    Provenance::GeneratedSearch,
                ))
            }
            SearchStatus::None => {
                return Err(Error::Infeasible {
                    spec,
                    reason: "exhaustive search found no factorization".into(),
                })
            }
            SearchStatus::ExhaustedBudget => {}
        }
        let Some(l) = key.pure_length() else {
            return Err(timeout());
        };
        // a pure profile is also the all-m side of a pair (l, h) at order h·x
        for h in (2 * l..spec.v)
            .step_by(l)
            .filter(|h| spec.v.is_multiple_of(*h) && lcm(l, *h) == *h)
        {
            if let Ok(f) = even_hwp(l, h, spec.v / h, spec.v - 1, 0, self, budget) {
                return Ok((f, Provenance::Composite));
            }
        }
        Err(timeout())
    }
}

/// Undirected `HWP(v; 3^a, L^b)` from a Kirkman resolution: keep `a`
/// classes and search the union of some `b` others for a `C_L`-factorization.
/// `None` when the shape does not apply or no choice of classes works.
fn kirkman_seeded(spec: &ProblemSpec, budget: Budget) -> Result<Option<UndirectedTwoFactorization>> {
    let (a, b, l) = (spec.r / 2, spec.s / 2, spec.n);
    if spec.m != 3 || spec.v % 6 != 3 || b < 2 || a == 0 {
        return Ok(None);
    }
    let kts = kirkman_resolution(spec.v, budget)?;
    let classes = kts.factors();
    let want = CycleProfile::single(l, b);
    for chosen in subsets(classes.len(), b) {
        let host = Digraph::from_arcs(
            spec.v,
            chosen
                .iter()
                .flat_map(|&i| classes[i].edges())
                .flat_map(|(x, y)| [(x, y), (y, x)]),
        )?;
        let out = exact_search(&SearchInstance::undirected(host, want.clone()).with_budget(budget))?;
        if let Some(part) = out.undirected() {
            let mut factors: Vec<UndirectedFactor> = (0..classes.len())
                .filter(|i| !chosen.contains(i))
                .map(|i| classes[i].clone())
                .collect();
            factors.extend(part.factors().iter().cloned());
            let u = UndirectedTwoFactorization::new(complete_symmetric(spec.v)?, factors)?;
            let mut expect = CycleProfile::single(3, a);
            expect.add(l, b);
            return u.checked(Some(&expect), "Kirkman-seeded factorization").map(Some);
        }
    }
    Ok(None)
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn tempfile_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(format!(".{name}.{}.tmp", std::process::id()))
}
