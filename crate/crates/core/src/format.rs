//! Text format for factorization certificates.
//!
//! ```text
//! # comment
//! HWP* 8 4 8 1 6
//! (0,1,2,3)(4,5,6,7)
//! (0,2,1,3,5,4,7,6)
//! ...
//!
//! HWP* 8 4 8 2 5
//! ...
//! ```
//!
//! Each entry is a header line `HWP* <v> <m> <n> <r> <s>` followed by one line
//! per factor, each the concatenation of its cycles written `(a,b,c,...)` in
//! decimal with no spaces. Entries are separated by a blank line and lines
//! starting with `#` are comments. [`write_entry`] emits canonical text, so
//! parsing and re-writing canonical input reproduces it byte for byte.

use crate::digraph::Vertex;
use crate::error::{Error, Result};
use crate::model::{DirectedCycle, ProblemSpec, TwoFactor};

/// Largest order accepted from text; keeps dense verifier tables bounded.
pub const MAX_ORDER: usize = 1024;

/// One parsed header plus its factor lines, not yet verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub spec: ProblemSpec,
    pub factors: Vec<TwoFactor>,
}

fn parse_err(entry: &str, factor: Option<usize>, message: impl Into<String>) -> Error {
    Error::Parse {
        entry: entry.to_string(),
        factor,
        message: message.into(),
    }
}

fn parse_header(line: &str, entry: &str) -> Result<ProblemSpec> {
    let mut words = line.split_whitespace();
    if words.next() != Some("HWP*") {
        return Err(parse_err(entry, None, format!("expected `HWP*` header, got `{line}`")));
    }
    let nums = words
        .map(|w| {
            w.parse::<usize>()
                .map_err(|_| parse_err(entry, None, format!("bad number `{w}` in header")))
        })
        .collect::<Result<Vec<_>>>()?;
    let [v, m, n, r, s] = nums[..] else {
        return Err(parse_err(
            entry,
            None,
            format!("header needs 5 numbers, got {}", nums.len()),
        ));
    };
    if v > MAX_ORDER {
        return Err(parse_err(entry, None, format!("order {v} exceeds limit {MAX_ORDER}")));
    }
    ProblemSpec::new(v, m, n, r, s).map_err(|e| parse_err(entry, None, e.to_string()))
}

/// Parses a factor line such as `(0,1,2)(3,4,5)`.
pub fn parse_factor_line(line: &str) -> std::result::Result<TwoFactor, String> {
    let mut cycles = Vec::new();
    let mut rest = line;
    if rest.is_empty() {
        return Err("empty factor line".into());
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected `(` at `{}`", truncate(rest)))?;
        let close = body.find(')').ok_or_else(|| "unterminated cycle".to_string())?;
        let (inner, tail) = body.split_at(close);
        let vertices = inner
            .split(',')
            .map(|t| {
                if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(format!("bad vertex label `{}`", truncate(t)));
                }
                t.parse::<Vertex>()
                    .map_err(|_| format!("vertex label `{}` out of range", truncate(t)))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        cycles.push(DirectedCycle::new(vertices).map_err(|e| e.to_string())?);
        rest = &tail[1..];
    }
    Ok(TwoFactor::new(cycles))
}

fn truncate(s: &str) -> &str {
    match s.char_indices().nth(24) {
        Some((i, _)) => &s[..i],
        None => s,
    }
}

/// Splits text into records. Malformed lines fail with the entry and factor
/// they occur in; verification is the caller's job.
pub fn parse_records(text: &str) -> Result<Vec<Record>> {
    let mut out: Vec<Record> = Vec::new();
    // whether the current entry may still take factor lines
    let mut open = false;
    for raw in text.lines() {
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            open = false;
            continue;
        }
        if line.starts_with("HWP*") {
            let label = format!("{} (`{line}`)", out.len() + 1);
            let spec = parse_header(line, &label)?;
            out.push(Record {
                spec,
                factors: Vec::new(),
            });
            open = true;
            continue;
        }
        if !open {
            let label = match out.last() {
                Some(r) => format!("after {}", r.spec),
                None => "before first header".to_string(),
            };
            return Err(parse_err(
                &label,
                None,
                format!("factor line outside an entry: `{}`", truncate(line)),
            ));
        }
        let record = out.last_mut().expect("open entry exists");
        let index = record.factors.len() + 1;
        let factor = parse_factor_line(line).map_err(|m| parse_err(&record.spec.to_string(), Some(index), m))?;
        record.factors.push(factor);
    }
    Ok(out)
}

/// Canonical text for one entry, ending in a newline.
pub fn write_entry(spec: &ProblemSpec, factors: &[TwoFactor]) -> String {
    let mut s = format!("HWP* {} {} {} {} {}\n", spec.v, spec.m, spec.n, spec.r, spec.s);
    for f in factors {
        s.push_str(&f.to_string());
        s.push('\n');
    }
    s
}

/// Canonical text for several entries, separated by blank lines.
pub fn write_records(records: &[Record]) -> String {
    records
        .iter()
        .map(|r| write_entry(&r.spec, &r.factors))
        .collect::<Vec<_>>()
        .join("\n")
}
