//! Laurent polynomials in `X` with coefficients in `Q(q)`.
//!
//! `X` stands for `q^(N-1)`, so a growth polynomial evaluated at a residue
//! field size `q0` and level `N` is `G(q0^(N-1))` with `q = q0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::rat::atom;
use super::{QPoly, QRat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct XLaurent {
    terms: BTreeMap<i64, QRat>,
}

impl XLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(QRat::one())
    }

    /// The variable `X`.
    pub fn x() -> Self {
        Self::monomial(QRat::one(), 1)
    }

    pub fn constant(c: impl Into<QRat>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * X^e`.
    pub fn monomial(c: impl Into<QRat>, e: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(e, c.into());
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, QRat)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: QRat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(QRat::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &QRat)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> QRat {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent present.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// `(exponent, coefficient)` of the highest term.
    pub fn leading_term(&self) -> Option<(i64, &QRat)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    pub fn constant_term(&self) -> QRat {
        self.coeff(0)
    }

    pub fn scale(&self, c: &QRat) -> Self {
        Self::from_terms(self.terms().map(|(e, a)| (e, a * c)))
    }

    /// Multiply by `X^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Apply a coefficient map, e.g. a substitution in `q`.
    pub fn map_coeffs(&self, f: impl Fn(&QRat) -> QRat) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, f(c))))
    }

    /// If this is a single term `c X^e`, returns it.
    pub fn as_monomial(&self) -> Option<(i64, &QRat)> {
        (self.terms.len() == 1).then(|| self.leading_term().unwrap())
    }

    /// True iff every coefficient lies in `Z[q]` and every exponent is
    /// nonnegative.
    pub fn is_integral(&self) -> bool {
        self.terms().all(|(e, c)| e >= 0 && c.is_polynomial())
    }

    /// Exact value at `q = q0`, `X = q0^(N-1)`.
    pub fn eval_rational(&self, q0: &BigInt, level: u32) -> Result<BigRational> {
        let x = BigRational::from_integer(q0.clone());
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            let cv = c.eval(q0).ok_or(Error::DivisionByZero)?;
            let exp = e * (level as i64 - 1);
            let xv = if exp >= 0 {
                num_traits::pow(x.clone(), exp as usize)
            } else {
                if q0.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                num_traits::pow(x.recip(), (-exp) as usize)
            };
            acc += cv * xv;
        }
        Ok(acc)
    }

    /// `dim pi^{K_N}` read off a growth polynomial: the exact integer value
    /// at `q = q0`, `X = q0^(N-1)`.
    pub fn eval_dim(&self, q0: u64, level: u32) -> Result<BigInt> {
        if q0 < 2 || level < 1 {
            return Err(Error::InvalidArgument(format!(
                "evaluation needs q >= 2 and N >= 1, got q = {q0}, N = {level}"
            )));
        }
        let q = BigInt::from(q0);
        let v = self.eval_rational(&q, level)?;
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::NonIntegralEvaluation {
                value: v.to_string(),
                q: q0.to_string(),
                level,
            })
        }
    }

    /// Render with `var` as the name of the coefficient variable.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms().rev() {
            let (neg, mag) = split_sign(c, var);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let xpart = match e {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{e}"),
            };
            match (mag.as_str(), e) {
                (m, 0) => out.push_str(m),
                ("1", _) => out.push_str(&xpart),
                (m, _) => {
                    out.push_str(m);
                    out.push('*');
                    out.push_str(&xpart);
                }
            }
        }
        out
    }

    /// Parse the canonical rendering (and the usual arithmetic notation over
    /// `q` and `X`).
    pub fn parse(s: &str) -> Result<Self> {
        Self::parse_with_var(s, "q")
    }

    pub fn parse_with_var(s: &str, var: &str) -> Result<Self> {
        super::parse::parse_laurent(s, var)
    }
}

/// Split a coefficient into an overall sign and a magnitude that binds as a
/// single factor.
fn split_sign(c: &QRat, var: &str) -> (bool, String) {
    let num = c.num();
    let neg = num.leading().is_some_and(Signed::is_negative);
    let abs_num = if neg { -num } else { num.clone() };
    if c.is_polynomial() {
        let s = if abs_num.term_count() <= 1 {
            abs_num.render(var)
        } else {
            format!("({})", abs_num.render(var))
        };
        (neg, s)
    } else {
        (neg, format!("{}/{}", atom(&abs_num, var), atom(c.den(), var)))
    }
}

impl fmt::Display for XLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl std::str::FromStr for XLaurent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl From<QRat> for XLaurent {
    fn from(c: QRat) -> Self {
        Self::constant(c)
    }
}

impl From<QPoly> for XLaurent {
    fn from(p: QPoly) -> Self {
        Self::constant(QRat::from_poly(p))
    }
}

impl<'a> Add<&'a XLaurent> for &'a XLaurent {
    type Output = XLaurent;
    fn add(self, rhs: &XLaurent) -> XLaurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a XLaurent> for &'a XLaurent {
    type Output = XLaurent;
    fn sub(self, rhs: &XLaurent) -> XLaurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a XLaurent> for &'a XLaurent {
    type Output = XLaurent;
    fn mul(self, rhs: &XLaurent) -> XLaurent {
        let mut acc: BTreeMap<i64, QRat> = BTreeMap::new();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let slot = acc.entry(e1 + e2).or_insert_with(QRat::zero);
                *slot = &*slot + &(c1 * c2);
            }
        }
        XLaurent::from_terms(acc)
    }
}

impl Neg for &XLaurent {
    type Output = XLaurent;
    fn neg(self) -> XLaurent {
        XLaurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for XLaurent {
    type Output = XLaurent;
    fn neg(self) -> XLaurent {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<XLaurent> for XLaurent {
            type Output = XLaurent;
            fn $m(self, rhs: XLaurent) -> XLaurent {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::ops::AddAssign<XLaurent> for XLaurent {
    fn add_assign(&mut self, rhs: XLaurent) {
        *self = &*self + &rhs;
    }
}

impl std::ops::SubAssign<XLaurent> for XLaurent {
    fn sub_assign(&mut self, rhs: XLaurent) {
        *self = &*self - &rhs;
    }
}

impl std::iter::Sum for XLaurent {
    fn sum<I: Iterator<Item = XLaurent>>(iter: I) -> Self {
        iter.fold(XLaurent::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for XLaurent {
    fn product<I: Iterator<Item = XLaurent>>(iter: I) -> Self {
        iter.fold(XLaurent::one(), |a, b| &a * &b)
    }
}

/// `(q + 1) X - 2 q^k`, the shape shared by the GL(2) formulas.
pub fn gl2_shape(constant: QPoly) -> XLaurent {
    let q1 = QRat::from_poly(QPoly::from_i64s(&[1, 1]));
    &XLaurent::monomial(q1, 1) - &XLaurent::constant(QRat::from_poly(constant))
}
