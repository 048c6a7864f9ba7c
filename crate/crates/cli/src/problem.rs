//! Problem files: declared cuspidal symbols with growth sources, a
//! multisegment, and optional twist table and evaluation point.

use std::collections::BTreeMap;

use gkgrowth_core::segments::{Multisegment, Segment, Symbol};
use gkgrowth_core::sln::TableJson;
use gkgrowth_core::{CuspidalGrowth, SourceMap, TwistActionTable};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    version: u32,
    symbols: Vec<RawSymbol>,
    multisegment: RawMultisegment,
    #[serde(default)]
    twist: Option<TableJson>,
    #[serde(default)]
    eval: Option<RawEval>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSymbol {
    id: String,
    size: u32,
    #[serde(default)]
    source: Option<Value>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawMultisegment {
    Text(String),
    Triples(Vec<(String, i64, u32)>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEval {
    q: u64,
    #[serde(rename = "N")]
    level: u32,
}

pub struct Problem {
    pub sources: SourceMap,
    pub multisegment: Multisegment,
    pub twist: Option<TwistActionTable>,
    pub eval: Option<(u64, u32)>,
}

impl Problem {
    /// Largest validity threshold among explicit sources used by the
    /// multisegment.
    pub fn threshold(&self) -> Option<u32> {
        self.multisegment
            .symbols()
            .iter()
            .filter_map(|s| self.sources.get(&s.id).and_then(CuspidalGrowth::threshold))
            .max()
    }
}

/// Fill `n` / `n1` from the declared size when a source omits it.
fn fill_size(mut source: Value, size: u32) -> Value {
    if let Value::Object(map) = &mut source {
        let key = match map.get("kind").and_then(Value::as_str) {
            Some("leading") => "n1",
            Some("level0" | "murnaghan_unr" | "murnaghan_ram") => "n",
            _ => return source,
        };
        if !map.contains_key("n") && !map.contains_key("n1") {
            map.insert(key.to_string(), Value::from(size));
        }
    }
    source
}

pub fn parse_problem(text: &str) -> Result<Problem, CliError> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| CliError::parse(format!("problem file: {e}")))?;
    if raw.version != SCHEMA_VERSION {
        return Err(CliError::semantic(format!(
            "unsupported schema version {} (expected {SCHEMA_VERSION})",
            raw.version
        )));
    }
    let mut sizes = BTreeMap::new();
    let mut sources = SourceMap::new();
    for s in raw.symbols {
        if s.size == 0 {
            return Err(CliError::semantic(format!("symbol `{}` has size 0", s.id)));
        }
        if sizes.insert(s.id.clone(), s.size).is_some() {
            return Err(CliError::semantic(format!("symbol `{}` declared twice", s.id)));
        }
        let source = match s.source {
            None => CuspidalGrowth::LeadingOnly { n1: s.size },
            Some(v) => serde_json::from_value(fill_size(v, s.size))
                .map_err(|e| CliError::semantic(format!("source of `{}`: {e}", s.id)))?,
        };
        source.validate(&s.id, s.size)?;
        sources.insert(s.id, source);
    }
    let multisegment = match raw.multisegment {
        RawMultisegment::Text(t) => Multisegment::parse(&t, |id| sizes.get(id).copied())?,
        RawMultisegment::Triples(triples) => {
            let segments = triples
                .into_iter()
                .map(|(id, offset, length)| {
                    let size = *sizes
                        .get(&id)
                        .ok_or_else(|| CliError::semantic(format!("segment uses undeclared symbol `{id}`")))?;
                    Ok(Segment::new(Symbol::new(id, size), offset, length)?)
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Multisegment::new(segments)
        }
    };
    let twist = raw
        .twist
        .map(|t| TwistActionTable::from_json(t, sizes))
        .transpose()?;
    Ok(Problem {
        sources,
        multisegment,
        twist,
        eval: raw.eval.map(|e| (e.q, e.level)),
    })
}

pub fn read_problem(path: &std::path::Path) -> Result<Problem, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
    parse_problem(&text)
}
