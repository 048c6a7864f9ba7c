//! Flat JSON form of [`CuspidalGrowth`]:
//! `{"kind": "leading" | "explicit" | "murnaghan_unr" | "murnaghan_ram" |
//! "level0" | "gl2" | "ai_quad", ...}`.

use serde::{Deserialize, Serialize};

use super::{CuspidalGrowth, Gl2Case};
use crate::error::{Error, Result};
use crate::qring::{QPoly, QRat, XLaurent};

/// One explicit term: `num(q)/den(q) * X^x`, coefficient lists ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub x: i64,
    pub num: Vec<i64>,
    #[serde(default = "one_list")]
    pub den: Vec<i64>,
}

fn one_list() -> Vec<i64> {
    vec![1]
}

pub fn laurent_from_terms(terms: &[TermJson]) -> Result<XLaurent> {
    let mut out = XLaurent::zero();
    for t in terms {
        let c = QRat::new(QPoly::from_i64s(&t.num), QPoly::from_i64s(&t.den))?;
        out += XLaurent::monomial(c, t.x);
    }
    Ok(out)
}

fn to_i64s(p: &QPoly) -> Vec<i64> {
    p.coeffs()
        .iter()
        .map(|c| i64::try_from(c.clone()).expect("coefficient exceeds i64 range"))
        .collect()
}

pub fn laurent_to_terms(g: &XLaurent) -> Vec<TermJson> {
    g.terms()
        .map(|(x, c)| TermJson { x, num: to_i64s(c.num()), den: to_i64s(c.den()) })
        .collect()
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct SourceJson {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    n1: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ell: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    level: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<Vec<TermJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    threshold: Option<u32>,
}

fn need<T>(v: Option<T>, kind: &str, field: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidSource(format!("source kind `{kind}` needs field `{field}`")))
}

impl TryFrom<SourceJson> for CuspidalGrowth {
    type Error = Error;
    fn try_from(s: SourceJson) -> Result<Self> {
        let k = s.kind.as_str();
        Ok(match k {
            "leading" => CuspidalGrowth::LeadingOnly { n1: need(s.n1.or(s.n), k, "n1")? },
            "explicit" => CuspidalGrowth::Explicit {
                poly: laurent_from_terms(&need(s.poly, k, "poly")?)?,
                threshold: s.threshold.unwrap_or(1),
            },
            "murnaghan_unr" => CuspidalGrowth::MurnaghanUnramified { n: need(s.n, k, "n")?, j: need(s.j, k, "j")? },
            "murnaghan_ram" => CuspidalGrowth::MurnaghanRamified { n: need(s.n, k, "n")?, j: need(s.j, k, "j")? },
            "level0" => CuspidalGrowth::LevelZero { n: need(s.n, k, "n")? },
            "gl2" => {
                let case = match need(s.case, k, "case")?.as_str() {
                    "level0" => Gl2Case::Level0,
                    "e2" => Gl2Case::E2 { level: need(s.level, k, "level")? },
                    "e1" => Gl2Case::E1 { level: need(s.level, k, "level")? },
                    other => return Err(Error::InvalidSource(format!("unknown GL_2 case `{other}`"))),
                };
                CuspidalGrowth::Gl2 { case }
            }
            "ai_quad" => CuspidalGrowth::AiUnramifiedQuadratic { ell: need(s.ell, k, "ell")? },
            other => return Err(Error::InvalidSource(format!("unknown source kind `{other}`"))),
        })
    }
}

impl From<CuspidalGrowth> for SourceJson {
    fn from(g: CuspidalGrowth) -> Self {
        let mut s = SourceJson::default();
        match g {
            CuspidalGrowth::LeadingOnly { n1 } => {
                s.kind = "leading".into();
                s.n1 = Some(n1);
            }
            CuspidalGrowth::Explicit { poly, threshold } => {
                s.kind = "explicit".into();
                s.poly = Some(laurent_to_terms(&poly));
                s.threshold = Some(threshold);
            }
            CuspidalGrowth::MurnaghanUnramified { n, j } => {
                s.kind = "murnaghan_unr".into();
                (s.n, s.j) = (Some(n), Some(j));
            }
            CuspidalGrowth::MurnaghanRamified { n, j } => {
                s.kind = "murnaghan_ram".into();
                (s.n, s.j) = (Some(n), Some(j));
            }
            CuspidalGrowth::LevelZero { n } => {
                s.kind = "level0".into();
                s.n = Some(n);
            }
            CuspidalGrowth::Gl2 { case } => {
                s.kind = "gl2".into();
                let (name, level) = match case {
                    Gl2Case::Level0 => ("level0", None),
                    Gl2Case::E2 { level } => ("e2", Some(level)),
                    Gl2Case::E1 { level } => ("e1", Some(level)),
                };
                s.case = Some(name.into());
                s.level = level;
            }
            CuspidalGrowth::AiUnramifiedQuadratic { ell } => {
                s.kind = "ai_quad".into();
                s.ell = Some(ell);
            }
        }
        s
    }
}
