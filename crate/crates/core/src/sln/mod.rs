//! Leading terms for `SL_n`: the `GL_n` leading coefficient divided by the
//! number of twisting characters that fix the multisegment.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growth::{leading_term, LeadingTerm};
use crate::qring::QRat;
use crate::segments::{Multisegment, Segment, Symbol};

/// A permutation of symbol ids; ids not mentioned are fixed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Perm {
    map: BTreeMap<String, String>,
}

impl Perm {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Build from disjoint cycles such as `[["rho", "rho2"]]`.
    pub fn from_cycles(cycles: &[Vec<String>]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for cycle in cycles {
            for (k, id) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()].clone();
                if map.insert(id.clone(), next).is_some() {
                    return Err(Error::InvalidArgument(format!("`{id}` appears twice in one permutation")));
                }
            }
        }
        map.retain(|k, v| k != v);
        Ok(Self { map })
    }

    pub fn apply<'a>(&'a self, id: &'a str) -> &'a str {
        self.map.get(id).map(String::as_str).unwrap_or(id)
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// Disjoint cycles, each starting at its smallest id.
    pub fn cycles(&self) -> Vec<Vec<String>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.map.keys() {
            if seen.contains(start) {
                continue;
            }
            let mut cycle = vec![start.clone()];
            seen.insert(start.clone());
            let mut cur = self.apply(start).to_string();
            while &cur != start {
                seen.insert(cur.clone());
                cycle.push(cur.clone());
                cur = self.apply(&cur).to_string();
            }
            out.push(cycle);
        }
        out
    }
}

/// Action of the `n` characters of `GL_n / Z SL_n` on the declared symbols.
/// Index 0 is the trivial character. The table is not checked to come from a
/// cyclic group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "TableJson")]
pub struct TwistActionTable {
    n: u32,
    perms: Vec<Perm>,
    sizes: BTreeMap<String, u32>,
}

#[derive(Serialize, Deserialize)]
pub struct TableJson {
    pub n: u32,
    pub perms: Vec<Vec<Vec<String>>>,
}

impl From<TwistActionTable> for TableJson {
    fn from(t: TwistActionTable) -> Self {
        TableJson { n: t.n, perms: t.perms.iter().map(Perm::cycles).collect() }
    }
}

impl TwistActionTable {
    /// `sizes` declares the symbol domain; every permutation must stay inside
    /// it and preserve sizes.
    pub fn new(n: u32, perms: Vec<Perm>, sizes: BTreeMap<String, u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("twist table needs n >= 1".into()));
        }
        if perms.len() != n as usize {
            return Err(Error::InvalidArgument(format!(
                "twist table declares n = {n} but lists {} permutations",
                perms.len()
            )));
        }
        if !perms[0].is_identity() {
            return Err(Error::InvalidArgument("permutation 0 must be the identity".into()));
        }
        for perm in &perms {
            for (from, to) in &perm.map {
                let a = sizes.get(from).ok_or_else(|| Error::UnknownSymbol(from.clone()))?;
                let b = sizes.get(to).ok_or_else(|| Error::UnknownSymbol(to.clone()))?;
                if a != b {
                    return Err(Error::InvalidArgument(format!(
                        "twist sends `{from}` (size {a}) to `{to}` (size {b})"
                    )));
                }
            }
        }
        Ok(Self { n, perms, sizes })
    }

    pub fn from_json(json: TableJson, sizes: BTreeMap<String, u32>) -> Result<Self> {
        let perms = json
            .perms
            .iter()
            .map(|c| Perm::from_cycles(c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(json.n, perms, sizes)
    }

    /// Table where every character fixes every symbol.
    pub fn trivial(n: u32, sizes: BTreeMap<String, u32>) -> Result<Self> {
        Self::new(n, vec![Perm::identity(); n as usize], sizes)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn sizes(&self) -> &BTreeMap<String, u32> {
        &self.sizes
    }
}

/// Replace each segment's symbol by its image; offsets and lengths stay.
pub fn twist_multisegment(a: &Multisegment, perm: &Perm, table: &TwistActionTable) -> Result<Multisegment> {
    let segments = a
        .segments()
        .iter()
        .map(|s| {
            if !table.sizes.contains_key(&s.symbol.id) {
                return Err(Error::UnknownSymbol(s.symbol.id.clone()));
            }
            let id = perm.apply(&s.symbol.id);
            Ok(Segment { symbol: Symbol::new(id, s.symbol.size), ..s.clone() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Multisegment::new(segments))
}

/// Number of characters `chi` with `a ⊗ chi = a`.
pub fn twist_stabilizer_count(a: &Multisegment, table: &TwistActionTable) -> Result<u32> {
    let mut d = 0;
    for perm in &table.perms {
        if &twist_multisegment(a, perm, table)? == a {
            d += 1;
        }
    }
    Ok(d)
}

/// `leading_term(a)` with its coefficient divided by `d`.
pub fn sl_leading_term(a: &Multisegment, d: u32) -> Result<LeadingTerm> {
    if d == 0 {
        return Err(Error::InvalidArgument("stabilizer count must be >= 1".into()));
    }
    let lt = leading_term(a);
    Ok(LeadingTerm { coeff: lt.coeff / QRat::from_int(d), exponent: lt.exponent })
}
