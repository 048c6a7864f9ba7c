//! q-integers, q-factorials and q-multinomial coefficients.

use super::QPoly;
use crate::error::{Error, Result};

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_int(n: i64) -> Result<QPoly> {
    if n <= 0 {
        return Err(Error::InvalidArgument(format!("q-integer needs n >= 1, got {n}")));
    }
    Ok(QPoly::from_i64s(&vec![1; n as usize]))
}

/// `[n!]_q = [1]_q [2]_q ... [n]_q`, with `[0!]_q = 1`.
pub fn q_factorial(n: u32) -> QPoly {
    (1..=n as i64).fold(QPoly::one(), |acc, k| &acc * &q_int(k).unwrap())
}

/// `[r!]_{q^m}`: the q-factorial with `q` replaced by `q^m`.
pub fn q_factorial_base(r: u32, m: u32) -> QPoly {
    assert!(m >= 1, "base exponent must be positive");
    q_factorial(r).substitute_power(m as usize)
}

/// `[n; n_1, ..., n_r]_q = [n!]_q / ([n_1!]_q ... [n_r!]_q)`.
///
/// The parts are a composition of `n` (any order); the quotient is exact in
/// `Z[q]`.
pub fn q_multinomial(n: u32, parts: &[u32]) -> Result<QPoly> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidArgument(format!(
            "q-multinomial parts must be positive, got {parts:?}"
        )));
    }
    let total: u64 = parts.iter().map(|&p| p as u64).sum();
    if total != n as u64 {
        return Err(Error::InvalidArgument(format!(
            "parts {parts:?} do not sum to {n}"
        )));
    }
    // Divide by the largest part's factorial implicitly: the product
    // [k+1]...[n] over the remaining parts keeps intermediate degrees small.
    let (imax, &largest) = parts
        .iter()
        .enumerate()
        .max_by_key(|&(_, p)| *p)
        .unwrap();
    let numer = ((largest + 1) as i64..=n as i64)
        .fold(QPoly::one(), |acc, k| &acc * &q_int(k).unwrap());
    let denom = parts
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != imax)
        .fold(QPoly::one(), |acc, (_, &p)| &acc * &q_factorial(p));
    numer.div_exact(&denom)
}

/// Gaussian binomial `[n choose k]_q`.
pub fn q_binomial(n: u32, k: u32) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    if k == 0 || k == n {
        return QPoly::one();
    }
    q_multinomial(n, &[k, n - k]).unwrap()
}
