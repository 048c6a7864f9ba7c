//! Reduced quotients of integer polynomials in `q`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QPoly;
use crate::error::{Error, Result};

/// Element of the fraction field `Q(q)`, kept as `num / den` with
/// `gcd(num, den) = 1` in `Z[q]` and a positive leading coefficient on `den`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut g = num.gcd(&den);
        if den.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        // both divisions are exact by construction of g
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self {
            num: QPoly::constant(c),
            den: QPoly::one(),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self {
            num: p,
            den: QPoly::one(),
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_power(k: i64) -> Self {
        let m = QPoly::monomial(1, k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            Self {
                num: QPoly::one(),
                den: m,
            }
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&QPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_poly().and_then(QPoly::as_constant)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(Self {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Substitute `q -> q^m` in numerator and denominator.
    pub fn substitute_power(&self, m: usize) -> Self {
        Self::reduce(self.num.substitute_power(m), self.den.substitute_power(m))
    }

    /// Exact rational value at an integer point; `None` when the denominator
    /// vanishes there.
    pub fn eval(&self, q: &BigInt) -> Option<BigRational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(self.num.eval(q), d))
    }

    pub fn render(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.render(var);
        }
        format!("{}/{}", atom(&self.num, var), atom(&self.den, var))
    }
}

/// A polynomial rendered so that it binds as a single factor.
pub(crate) fn atom(p: &QPoly, var: &str) -> String {
    if p.term_count() <= 1 && !p.leading().is_some_and(Signed::is_negative) {
        p.render(var)
    } else {
        format!("({})", p.render(var))
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QRat {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl<'a> Add<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.den == rhs.den {
            return QRat::reduce(&self.num + &rhs.num, self.den.clone());
        }
        QRat::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        QRat::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero, like integer division.
impl<'a> Div<&'a QRat> for &'a QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        self * &rhs.inv().expect("division by zero QRat")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> Self {
        iter.fold(QRat::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for QRat {
    fn product<I: Iterator<Item = QRat>>(iter: I) -> Self {
        iter.fold(QRat::one(), |a, b| &a * &b)
    }
}

impl One for QRat {
    fn one() -> Self {
        QRat::one()
    }
}

impl Zero for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn reduces_to_canonical_form() {
        // (2q^2 - 2) / (-4q - 4) = -(q - 1)/2
        let r = QRat::new(p(&[-2, 0, 2]), p(&[-4, -4])).unwrap();
        assert_eq!(r.num(), &p(&[1, -1]));
        assert_eq!(r.den(), &p(&[2]));
        assert_eq!(r, QRat::new(p(&[-1, 1]), p(&[-2])).unwrap());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(QRat::new(p(&[1]), QPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn arithmetic_closes() {
        let a = QRat::new(p(&[1]), p(&[1, 1])).unwrap(); // 1/(q+1)
        let b = QRat::new(p(&[0, 1]), p(&[1, 1])).unwrap(); // q/(q+1)
        assert_eq!(&a + &b, QRat::one());
        assert_eq!((&a * &b).den(), &p(&[1, 2, 1]));
        assert_eq!(&b / &b, QRat::one());
        assert_eq!(QRat::q_power(-2).pow(-1).unwrap(), QRat::q_power(2));
    }

    #[test]
    fn render_rational() {
        let r = QRat::new(p(&[1, 1]), p(&[0, 1])).unwrap();
        assert_eq!(r.to_string(), "(q + 1)/q");
        assert_eq!(QRat::from_int(-3).to_string(), "-3");
    }
}
