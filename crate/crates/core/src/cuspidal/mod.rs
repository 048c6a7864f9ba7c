//! Growth-polynomial sources for supercuspidal building blocks.

mod json;

pub use json::{laurent_from_terms, laurent_to_terms, TermJson};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{division_algebra_index, expansion_to_growth, level_zero_expansion, partitions_of};
use crate::qring::{gl2_shape, q_factorial, q_int, q_multinomial, QPoly, QRat, XLaurent};

/// Sources keyed by cuspidal symbol id.
pub type SourceMap = BTreeMap<String, CuspidalGrowth>;

/// GL_2 supercuspidal cases, by stratum type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gl2Case {
    Level0,
    /// `e = 2` stratum of level `n`.
    E2 { level: u32 },
    /// `e = 1` stratum of level `n`.
    E1 { level: u32 },
}

impl Gl2Case {
    /// Dimension of the Jacquet-Langlands transfer to the quaternion algebra.
    pub fn jl_dimension(&self) -> Result<QPoly> {
        match *self {
            Gl2Case::Level0 => division_algebra_index(1, 1),
            Gl2Case::E2 { level } => {
                check_level(level)?;
                division_algebra_index(2, level / 2 + 1)
            }
            Gl2Case::E1 { level } if level % 2 == 1 => {
                Ok(&QPoly::q() * &division_algebra_index(1, level)?)
            }
            Gl2Case::E1 { level } => {
                check_level(level)?;
                division_algebra_index(1, level + 1)
            }
        }
    }
}

fn check_level(level: u32) -> Result<()> {
    if level == 0 {
        return Err(Error::InvalidArgument("stratum level must be >= 1".into()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "json::SourceJson", into = "json::SourceJson")]
pub enum CuspidalGrowth {
    /// Only the leading term `[n1!]_q X^(n1(n1-1)/2)` is known.
    LeadingOnly { n1: u32 },
    /// User-supplied polynomial, valid for `N >= threshold`.
    Explicit { poly: XLaurent, threshold: u32 },
    MurnaghanUnramified { n: u32, j: u32 },
    MurnaghanRamified { n: u32, j: u32 },
    LevelZero { n: u32 },
    Gl2 { case: Gl2Case },
    AiUnramifiedQuadratic { ell: u32 },
}

impl CuspidalGrowth {
    /// Matrix size the source is tied to, if it names one.
    pub fn size(&self) -> Option<u32> {
        match self {
            CuspidalGrowth::LeadingOnly { n1 } => Some(*n1),
            CuspidalGrowth::Explicit { .. } => None,
            CuspidalGrowth::MurnaghanUnramified { n, .. }
            | CuspidalGrowth::MurnaghanRamified { n, .. }
            | CuspidalGrowth::LevelZero { n } => Some(*n),
            CuspidalGrowth::Gl2 { .. } | CuspidalGrowth::AiUnramifiedQuadratic { .. } => Some(2),
        }
    }

    /// Validity threshold `N_0` for explicit sources, `None` otherwise.
    pub fn threshold(&self) -> Option<u32> {
        match self {
            CuspidalGrowth::Explicit { threshold, .. } => Some(*threshold),
            _ => None,
        }
    }

    /// The full polynomial `G_rho`. `name` only labels errors.
    pub fn full_polynomial(&self, name: &str) -> Result<XLaurent> {
        match self {
            CuspidalGrowth::LeadingOnly { .. } => Err(Error::InsufficientCuspidalData(name.to_string())),
            CuspidalGrowth::Explicit { poly, .. } => Ok(poly.clone()),
            CuspidalGrowth::MurnaghanUnramified { n, j } => murnaghan_unramified(*n, *j),
            CuspidalGrowth::MurnaghanRamified { n, j } => {
                let r = murnaghan_ramified(*n, *j)?;
                match r.in_q {
                    Some(p) if p.is_integral() => Ok(p),
                    Some(p) => Err(Error::InvalidSource(format!(
                        "ramified formula for n = {n}, j = {j} is not integral: {p}"
                    ))),
                    None => Err(Error::InvalidSource(format!(
                        "ramified formula for n = {n}, j = {j} has fractional q-exponents"
                    ))),
                }
            }
            CuspidalGrowth::LevelZero { n } => level_zero(*n),
            CuspidalGrowth::Gl2 { case } => gl2_growth(*case),
            CuspidalGrowth::AiUnramifiedQuadratic { ell } => Ok(ai_unramified_quadratic(*ell)),
        }
    }

    /// Check the source against the declared symbol size: matching size,
    /// correct leading term and integral coefficients.
    pub fn validate(&self, name: &str, size: u32) -> Result<()> {
        if size == 0 {
            return Err(Error::InvalidSource(format!("`{name}` has size 0")));
        }
        if let Some(n) = self.size() {
            if n != size {
                return Err(Error::InvalidSource(format!(
                    "`{name}` is declared with size {size} but its source is for GL_{n}"
                )));
            }
        }
        if matches!(self, CuspidalGrowth::LeadingOnly { .. }) {
            return Ok(());
        }
        let g = self.full_polynomial(name)?;
        let (coeff, exp) = cusp_leading(size);
        match g.leading_term() {
            Some((e, c)) if e == exp && c == &QRat::from_poly(coeff.clone()) => {}
            _ => {
                return Err(Error::InvalidSource(format!(
                    "`{name}`: leading term of {g} should be ({coeff})*X^{exp}"
                )))
            }
        }
        if !g.is_integral() {
            return Err(Error::InvalidSource(format!("`{name}`: {g} is not in Z[q][X]")));
        }
        Ok(())
    }
}

/// `([n1!]_q, n1(n1-1)/2)`.
pub fn cusp_leading(n1: u32) -> (QPoly, i64) {
    let n = n1 as i64;
    (q_factorial(n1), n * (n - 1) / 2)
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("cuspidal size must be >= 1".into()));
    }
    Ok(())
}

/// `(-1)^(n+r) (r-1)! / w` as a rational number.
fn sign_fact_over_w(n: u32, r: u32, w: u64) -> QRat {
    let fact: BigInt = (1..r).map(BigInt::from).product();
    let v = QRat::from_int(fact) / QRat::from_int(w);
    if (n + r) % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Murnaghan's formula for `E/F` unramified of degree `n`, character of
/// level `j`.
pub fn murnaghan_unramified(n: u32, j: u32) -> Result<XLaurent> {
    check_n(n)?;
    let mut out = XLaurent::zero();
    for p in partitions_of(n) {
        let r = p.len() as u32;
        let dim = p.orbit_dim() as i64;
        let nn = n as i64;
        let qexp = (nn * nn - nn - dim) * j as i64;
        debug_assert!(qexp % 2 == 0);
        let c = sign_fact_over_w(n, r, p.w_orbit())
            * QRat::from_int(n)
            * QRat::q_power(qexp / 2)
            * QRat::from_poly(q_multinomial(n, p.parts())?);
        out += XLaurent::monomial(c, dim / 2);
    }
    Ok(out)
}

/// Result of the totally ramified formula, carried in `s = q^(1/(2n))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamifiedGrowth {
    pub n: u32,
    pub j: u32,
    /// Coefficients are rational functions of `s`.
    pub in_s: XLaurent,
    /// The same polynomial over `q` when every `s`-exponent is a multiple of
    /// `2n`.
    pub in_q: Option<XLaurent>,
}

impl RamifiedGrowth {
    pub fn is_q_rational(&self) -> bool {
        self.in_q.is_some()
    }

    pub fn is_integral(&self) -> bool {
        self.in_q.as_ref().is_some_and(XLaurent::is_integral)
    }
}

/// Murnaghan's formula for `E/F` totally ramified of degree `n`.
pub fn murnaghan_ramified(n: u32, j: u32) -> Result<RamifiedGrowth> {
    check_n(n)?;
    let m = 2 * n as usize;
    let mut in_s = XLaurent::zero();
    for p in partitions_of(n) {
        let r = p.len() as u32;
        let dim = p.orbit_dim() as i64;
        let nn = n as i64;
        // q/(q-1) (r - sum q^(-n_i)) = sum [n_i]_q q^(1 - n_i)
        let factor: QRat = p
            .parts()
            .iter()
            .map(|&a| QRat::from_poly(q_int(a as i64).unwrap()) * QRat::q_power(1 - a as i64))
            .sum();
        let c_q = sign_fact_over_w(n, r, p.w_orbit())
            * factor
            * QRat::from_poly(q_multinomial(n, p.parts())?);
        let s_exp = (nn * nn - nn - dim) * j as i64;
        let c_s = c_q.substitute_power(m) * QRat::q_power(s_exp);
        in_s += XLaurent::monomial(c_s, dim / 2);
    }
    let in_q = compress_coeffs(&in_s, m);
    Ok(RamifiedGrowth { n, j, in_s, in_q })
}

fn compress_coeffs(g: &XLaurent, m: usize) -> Option<XLaurent> {
    let mut terms = Vec::new();
    for (e, c) in g.terms() {
        let num = c.num().compress_power(m)?;
        let den = c.den().compress_power(m)?;
        terms.push((e, QRat::new(num, den).ok()?));
    }
    Some(XLaurent::from_terms(terms))
}

/// Level-zero supercuspidal of `GL_n`, built from its character expansion.
pub fn level_zero(n: u32) -> Result<XLaurent> {
    check_n(n)?;
    Ok(expansion_to_growth(&level_zero_expansion(n)))
}

pub fn gl2_growth(case: Gl2Case) -> Result<XLaurent> {
    let c = match case {
        Gl2Case::Level0 => QPoly::constant(2),
        Gl2Case::E2 { level } => {
            check_level(level)?;
            QPoly::from_i64s(&[1, 1]).shift((level / 2) as usize)
        }
        Gl2Case::E1 { level } => {
            check_level(level)?;
            QPoly::monomial(2, level as usize)
        }
    };
    Ok(gl2_shape(c))
}

/// Automorphic induction from the unramified quadratic extension, `theta^tau
/// theta^-1` of level `ell`.
pub fn ai_unramified_quadratic(ell: u32) -> XLaurent {
    gl2_shape(QPoly::monomial(2, ell as usize))
}
