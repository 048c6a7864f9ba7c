//! Cuspidal symbols, segments and multisegments, and the poset generated by
//! elementary operations.

mod poset;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use poset::{poset_below, poset_below_with_limit, Poset, DEFAULT_NODE_LIMIT};

/// A formal supercuspidal representation of `GL_size`.
///
/// Distinct ids are never unramified twists of one another; twist-related
/// cuspidals must share an id and differ by segment offsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    pub id: String,
    pub size: u32,
}

impl Symbol {
    pub fn new(id: impl Into<String>, size: u32) -> Self {
        assert!(size >= 1, "cuspidal size must be positive");
        Self { id: id.into(), size }
    }
}

/// The segment `[nu^offset rho, nu^(offset + length - 1) rho]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub symbol: Symbol,
    pub offset: i64,
    pub length: u32,
}

impl Segment {
    pub fn new(symbol: Symbol, offset: i64, length: u32) -> Result<Self> {
        if length == 0 {
            return Err(Error::InvalidArgument("segment length must be positive".into()));
        }
        Ok(Self { symbol, offset, length })
    }

    /// Last exponent of `nu` in the segment.
    pub fn end(&self) -> i64 {
        self.offset + self.length as i64 - 1
    }

    /// `n_1 * r`: the matrix size of the representations it parametrizes.
    pub fn matrix_size(&self) -> u32 {
        self.symbol.size * self.length
    }

    fn contains(&self, other: &Segment) -> bool {
        self.offset <= other.offset && other.end() <= self.end()
    }

    /// Same symbol, neither interval contains the other, and the union is an
    /// interval.
    pub fn linked(&self, other: &Segment) -> bool {
        self.symbol == other.symbol
            && !self.contains(other)
            && !other.contains(self)
            && self.offset <= other.end() + 1
            && other.offset <= self.end() + 1
    }

    pub fn intersects(&self, other: &Segment) -> bool {
        self.symbol == other.symbol && self.offset <= other.end() && other.offset <= self.end()
    }

    fn from_bounds(symbol: &Symbol, start: i64, end: i64) -> Option<Segment> {
        (end >= start).then(|| Segment {
            symbol: symbol.clone(),
            offset: start,
            length: (end - start + 1) as u32,
        })
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}..{}]", self.symbol.id, self.offset, self.end())
    }
}

/// A finite multiset of segments, kept sorted so that equality is multiset
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Self {
        segments.sort();
        Self { segments }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Total matrix size `n = sum n_i r_i`.
    pub fn total_size(&self) -> u32 {
        self.segments.iter().map(Segment::matrix_size).sum()
    }

    pub fn symbols(&self) -> BTreeSet<&Symbol> {
        self.segments.iter().map(|s| &s.symbol).collect()
    }

    /// Sub-multisegment on one symbol.
    pub fn restrict(&self, symbol: &Symbol) -> Multisegment {
        Multisegment {
            segments: self
                .segments
                .iter()
                .filter(|s| &s.symbol == symbol)
                .cloned()
                .collect(),
        }
    }

    /// Add `k` to every offset.
    pub fn shifted(&self, k: i64) -> Multisegment {
        Multisegment::new(
            self.segments
                .iter()
                .map(|s| Segment { offset: s.offset + k, ..s.clone() })
                .collect(),
        )
    }

    /// Replace linked segments `i` and `j` by their union and (nonempty)
    /// intersection.
    pub fn elementary_op(&self, i: usize, j: usize) -> Result<Multisegment> {
        let (a, b) = match (self.segments.get(i), self.segments.get(j)) {
            (Some(a), Some(b)) if i != j => (a, b),
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "segment indices {i}, {j} out of range for {} segments",
                    self.len()
                )))
            }
        };
        if !a.linked(b) {
            return Err(Error::NotLinked(a.to_string(), b.to_string()));
        }
        let mut rest: Vec<Segment> = self
            .segments
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, s)| s.clone())
            .collect();
        rest.extend(Segment::from_bounds(&a.symbol, a.offset.min(b.offset), a.end().max(b.end())));
        rest.extend(Segment::from_bounds(&a.symbol, a.offset.max(b.offset), a.end().min(b.end())));
        Ok(Multisegment::new(rest))
    }

    /// All multisegments one elementary operation below, deduplicated.
    pub fn successors(&self) -> Vec<Multisegment> {
        let mut out = BTreeSet::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.segments[i].linked(&self.segments[j]) {
                    out.insert(self.elementary_op(i, j).unwrap());
                }
            }
        }
        out.into_iter().collect()
    }

    /// All segments have length one; equivalently the multisegment is maximal
    /// for its support.
    pub fn is_generic(&self) -> bool {
        self.segments.iter().all(|s| s.length == 1)
    }

    /// One shared symbol and pairwise disjoint intervals.
    pub fn supports_pairwise_disjoint(&self) -> bool {
        if self.symbols().len() > 1 {
            return false;
        }
        self.segments
            .iter()
            .enumerate()
            .all(|(i, s)| self.segments[i + 1..].iter().all(|t| !s.intersects(t)))
    }

    /// `sum r_i^2` over the segments on each symbol weighted by size; strictly
    /// increases along elementary operations.
    pub fn potential(&self) -> u64 {
        self.segments
            .iter()
            .map(|s| s.symbol.size as u64 * (s.length as u64).pow(2))
            .sum()
    }

    /// Compact text form, e.g. `[rho:0..1],[rho:1..2]`; a bare `[rho:3]` is a
    /// single-element segment. `size_of` resolves declared symbol sizes.
    pub fn parse(text: &str, size_of: impl Fn(&str) -> Option<u32>) -> Result<Multisegment> {
        let text = text.trim();
        if text.is_empty() || text == "{}" {
            return Ok(Multisegment::default());
        }
        let text = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(text);
        let mut segments = Vec::new();
        for raw in text.split(']') {
            let raw = raw.trim().trim_start_matches(',').trim();
            if raw.is_empty() {
                continue;
            }
            let body = raw
                .strip_prefix('[')
                .ok_or_else(|| Error::Parse(format!("expected `[` in `{raw}`")))?;
            let (id, range) = body
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `id:range` in `{body}`")))?;
            let id = id.trim();
            let size = size_of(id).ok_or_else(|| Error::UnknownSymbol(id.to_string()))?;
            let parse_int = |s: &str| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad exponent `{s}`")))
            };
            let (start, end) = match range.split_once("..") {
                Some((a, b)) => (parse_int(a)?, parse_int(b)?),
                None => {
                    let a = parse_int(range)?;
                    (a, a)
                }
            };
            let seg = Segment::from_bounds(&Symbol::new(id, size), start, end)
                .ok_or_else(|| Error::Parse(format!("empty segment `{body}`")))?;
            segments.push(seg);
        }
        Ok(Multisegment::new(segments))
    }

    /// Rendering with the smallest offset moved to zero, for display.
    pub fn display_normalized(&self) -> String {
        match self.segments.iter().map(|s| s.offset).min() {
            Some(m) => self.shifted(-m).to_string(),
            None => "{}".to_string(),
        }
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segments.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self.segments.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}
