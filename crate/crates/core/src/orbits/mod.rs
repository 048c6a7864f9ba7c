//! Nilpotent orbits as partitions, local character expansion coefficients,
//! and their translation to growth polynomials.
//!
//! The closure order on orbits is taken to be dominance of partitions, with
//! `(1^n)` below everything and `(n)` on top. See
//! [`Partition::dominance_leq`].

mod partition;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qring::{q_multinomial, QPoly, QRat, XLaurent};

pub use partition::{partitions_of, Partition};

/// Integer coefficients `c_O` indexed by partitions of `n`. Zero
/// coefficients are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ExpansionJson", into = "ExpansionJson")]
pub struct CharacterExpansion {
    n: u32,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl CharacterExpansion {
    pub fn new(n: u32, entries: impl IntoIterator<Item = (Partition, BigInt)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("expansion needs n >= 1".into()));
        }
        let mut coeffs: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (p, c) in entries {
            if p.n() != n {
                return Err(Error::MismatchedSize(p.n(), n));
            }
            *coeffs.entry(p).or_default() += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(Self { n, coeffs })
    }

    /// Convenience constructor from `(parts, c)` pairs.
    pub fn from_pairs(n: u32, pairs: &[(&[u32], i64)]) -> Result<Self> {
        let entries = pairs
            .iter()
            .map(|(parts, c)| Ok((Partition::new(parts.to_vec())?, BigInt::from(*c))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, entries)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    n: u32,
    coeffs: Vec<CoeffJson>,
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    partition: Vec<u32>,
    c: i64,
}

impl TryFrom<ExpansionJson> for CharacterExpansion {
    type Error = Error;
    fn try_from(j: ExpansionJson) -> Result<Self> {
        let entries = j
            .coeffs
            .into_iter()
            .map(|e| Ok((Partition::new(e.partition)?, BigInt::from(e.c))))
            .collect::<Result<Vec<_>>>()?;
        CharacterExpansion::new(j.n, entries)
    }
}

impl From<CharacterExpansion> for ExpansionJson {
    fn from(ce: CharacterExpansion) -> Self {
        ExpansionJson {
            n: ce.n,
            coeffs: ce
                .coeffs
                .into_iter()
                .map(|(p, c)| CoeffJson {
                    partition: p.into(),
                    c: i64::try_from(c).expect("coefficient exceeds i64 range"),
                })
                .collect(),
        }
    }
}

/// `sum_O c_O [n; lambda]_q X^(dim O / 2)`.
pub fn expansion_to_growth(ce: &CharacterExpansion) -> XLaurent {
    ce.iter()
        .map(|(p, c)| {
            let m = q_multinomial(ce.n, p.parts()).expect("partition parts sum to n");
            XLaurent::monomial(QRat::from_poly(m.scale(c)), (p.orbit_dim() / 2) as i64)
        })
        .sum()
}

/// Partitions of `n` that share an orbit dimension with an earlier one, or
/// `None` when `lambda -> dim O_lambda` is injective.
fn first_dimension_collision(n: u32) -> Option<Vec<Partition>> {
    let mut seen: BTreeMap<u64, Partition> = BTreeMap::new();
    for p in partitions_of(n) {
        if let Some(prev) = seen.get(&p.orbit_dim()) {
            return Some(vec![prev.clone(), p]);
        }
        seen.insert(p.orbit_dim(), p);
    }
    None
}

/// Inverse of [`expansion_to_growth`], defined when orbit dimensions separate
/// the partitions of `n` (true exactly for `n <= 5`).
pub fn growth_to_expansion(g: &XLaurent, n: u32) -> Result<CharacterExpansion> {
    if n == 0 {
        return Err(Error::InvalidArgument("expansion needs n >= 1".into()));
    }
    if let Some(collision) = first_dimension_collision(n) {
        return Err(Error::AmbiguousExpansion(
            collision.into_iter().map(Vec::from).collect(),
        ));
    }
    let by_exponent: BTreeMap<i64, Partition> = partitions_of(n)
        .into_iter()
        .map(|p| ((p.orbit_dim() / 2) as i64, p))
        .collect();
    let mut entries = Vec::new();
    for (e, c) in g.terms() {
        let p = by_exponent
            .get(&e)
            .ok_or_else(|| Error::NotInImage(format!("X^{e} is not half an orbit dimension for n = {n}")))?;
        let m = QRat::from_poly(q_multinomial(n, p.parts())?);
        let ratio = c / &m;
        let value = ratio
            .as_integer()
            .ok_or_else(|| Error::NotInImage(format!("coefficient of X^{e} is not an integer multiple of [{n}; {p}]_q")))?;
        entries.push((p.clone(), value));
    }
    CharacterExpansion::new(n, entries)
}

/// Transfer coefficients from `GL_m(D)`, `D` of degree `d`, to `GL_{md}(F)`:
/// parts are multiplied by `d` and signs by `(-1)^(n - m)`. Partitions of
/// `n` with a part not divisible by `d` get coefficient zero.
pub fn jl_transfer(ce_d: &CharacterExpansion, d: u32) -> Result<CharacterExpansion> {
    if d == 0 {
        return Err(Error::InvalidArgument("division algebra degree must be positive".into()));
    }
    let m = ce_d.n();
    let n = m * d;
    let sign = if (n - m) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let entries = ce_d
        .iter()
        .map(|(p, c)| {
            let parts = p.parts().iter().map(|&a| a * d).collect();
            Ok((Partition::new(parts)?, c * &sign))
        })
        .collect::<Result<Vec<_>>>()?;
    CharacterExpansion::new(n, entries)
}

/// Constant term `(-1)^(n-1) dim(pi_D)` of the growth polynomial of a
/// square-integrable representation of `GL_n`.
pub fn jl_constant_term(dim_pi_d: &QPoly, n: u32) -> QPoly {
    if n % 2 == 1 {
        dim_pi_d.clone()
    } else {
        -dim_pi_d
    }
}

/// `|E^x U_D^m \ D^x|` for `D` the quaternion division algebra and `E/F`
/// quadratic with ramification index `e` (1 or 2).
pub fn division_algebra_index(e: u32, m: u32) -> Result<QPoly> {
    if m == 0 {
        return Err(Error::InvalidArgument("unit filtration index must be >= 1".into()));
    }
    let k = (m - 1) as usize;
    match e {
        // 2 * q^(2k - 2 floor(k/2))
        1 => Ok(QPoly::monomial(2, 2 * k - 2 * (k / 2))),
        // (q + 1) q^(2k - k)
        2 => Ok(QPoly::from_i64s(&[1, 1]).shift(k)),
        _ => Err(Error::InvalidArgument(format!("ramification index must be 1 or 2, got {e}"))),
    }
}

/// `(-1)^(n+r) n (r-1)! / w_lambda`, the level-zero coefficient of the orbit
/// `lambda`; always an integer.
pub fn level_zero_coefficient(p: &Partition) -> BigInt {
    let n = BigInt::from(p.n());
    let r = p.len() as u32;
    let fact: BigInt = (1..r).map(BigInt::from).product();
    let w = BigInt::from(p.w_orbit());
    let value = &(&n * &fact) / &w;
    debug_assert!((&n * &fact) % &w == BigInt::zero());
    if (p.n() + r) % 2 == 0 {
        value
    } else {
        -value
    }
}

/// Character expansion of a level-zero supercuspidal of `GL_n`.
pub fn level_zero_expansion(n: u32) -> CharacterExpansion {
    CharacterExpansion::new(
        n,
        partitions_of(n).into_iter().map(|p| {
            let c = level_zero_coefficient(&p);
            (p, c)
        }),
    )
    .expect("partitions of n")
}
