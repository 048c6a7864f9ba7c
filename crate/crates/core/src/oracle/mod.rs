//! Brute force over `GL_n(Z/p^N)`: enumeration, coset counting by
//! union-find, and the level-zero dimension sum for `GL_2` and `GL_3`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qring::{q_multinomial, QPoly};

/// Default cap on `(p^N)^(n^2)`, the number of matrices scanned.
pub const DEFAULT_ENUM_LIMIT: u128 = 100_000_000;

/// `M_n(Z/p^N)` with residues in machine words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatRing {
    pub n: usize,
    pub p: u64,
    pub big_n: u32,
    pub modulus: u64,
}

pub type Mat = Vec<u64>;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl MatRing {
    pub fn new(n: usize, p: u64, big_n: u32) -> Result<Self> {
        if n == 0 || big_n == 0 {
            return Err(Error::InvalidArgument("need n >= 1 and N >= 1".into()));
        }
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        let modulus = p
            .checked_pow(big_n)
            .filter(|&m| m < 1 << 63)
            .ok_or_else(|| Error::InvalidArgument(format!("{p}^{big_n} does not fit in a machine word")))?;
        Ok(Self { n, p, big_n, modulus })
    }

    /// Number of matrices, `(p^N)^(n^2)`, saturating.
    pub fn matrix_count(&self) -> u128 {
        (self.modulus as u128)
            .checked_pow((self.n * self.n) as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn check_limit(&self, limit: u128) -> Result<()> {
        let requested = self.matrix_count();
        if requested > limit {
            return Err(Error::SizeLimitExceeded { requested, limit });
        }
        Ok(())
    }

    pub fn identity(&self) -> Mat {
        let mut m = vec![0; self.n * self.n];
        for i in 0..self.n {
            m[i * self.n + i] = 1;
        }
        m
    }

    pub fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        let n = self.n;
        let m = self.modulus as u128;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u128;
                for k in 0..n {
                    acc = (acc + a[i * n + k] as u128 * b[k * n + j] as u128) % m;
                }
                out[i * n + j] = acc as u64;
            }
        }
        out
    }

    /// Determinant of the reduction mod `p`.
    pub fn det_mod_p(&self, a: &Mat) -> u64 {
        let p = self.p;
        let n = self.n;
        let mut m: Vec<u64> = a.iter().map(|x| x % p).collect();
        let mut det = 1u64;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for c in 0..n {
                    m.swap(piv * n + c, col * n + c);
                }
                det = (p - det) % p;
            }
            let pv = m[col * n + col];
            det = det * pv % p;
            let inv = mod_pow(pv, p - 2, p);
            for r in col + 1..n {
                let f = m[r * n + col] * inv % p;
                for c in col..n {
                    m[r * n + c] = (m[r * n + c] + p * p - f * m[col * n + c] % p) % p;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self, a: &Mat) -> bool {
        self.det_mod_p(a) != 0
    }

    /// `p`-adic valuation of a residue, `N` for zero.
    pub fn valuation(&self, x: u64) -> u32 {
        if x == 0 {
            return self.big_n;
        }
        let mut v = 0;
        let mut x = x;
        while x % self.p == 0 {
            x /= self.p;
            v += 1;
        }
        v
    }

    pub fn units(&self) -> Vec<u64> {
        (1..self.modulus).filter(|x| x % self.p != 0).collect()
    }

    fn key(&self, a: &Mat) -> u64 {
        a.iter().fold(0u64, |acc, &x| acc * self.modulus + x)
    }
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Iterator over `GL_n(Z/p^N)` in lexicographic order of entries.
pub struct GlIter {
    ring: MatRing,
    current: Option<Mat>,
}

impl Iterator for GlIter {
    type Item = Mat;
    fn next(&mut self) -> Option<Mat> {
        loop {
            let cur = self.current.as_mut()?;
            let out = cur.clone();
            // advance odometer
            let mut k = cur.len();
            loop {
                if k == 0 {
                    self.current = None;
                    break;
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < self.ring.modulus {
                    break;
                }
                cur[k] = 0;
            }
            if self.ring.is_invertible(&out) {
                return Some(out);
            }
        }
    }
}

pub fn enumerate_gl(n: usize, p: u64, big_n: u32) -> Result<GlIter> {
    enumerate_gl_with_limit(n, p, big_n, DEFAULT_ENUM_LIMIT)
}

pub fn enumerate_gl_with_limit(n: usize, p: u64, big_n: u32, limit: u128) -> Result<GlIter> {
    let ring = MatRing::new(n, p, big_n)?;
    ring.check_limit(limit)?;
    Ok(GlIter { ring, current: Some(vec![0; n * n]) })
}

/// Minimal valuations `e[i][j]` of a subgroup `H = {h : v(h_ij) >= e_ij}`;
/// diagonal entries must be 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationPattern {
    pub n: usize,
    pub e: Vec<u32>,
}

impl ValuationPattern {
    /// Standard block upper triangular parabolic for the composition `parts`.
    pub fn parabolic(parts: &[u32], big_n: u32) -> Self {
        let block: Vec<usize> = parts
            .iter()
            .enumerate()
            .flat_map(|(b, &k)| std::iter::repeat_n(b, k as usize))
            .collect();
        let n = block.len();
        let mut e = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                if block[i] > block[j] {
                    e[i * n + j] = big_n;
                }
            }
        }
        Self { n, e }
    }

    /// Image of `K_0 ∩ g K_0 g^-1` for `g = diag(p^a_1, ..., p^a_n)`.
    pub fn cartan(a: &[u32], big_n: u32) -> Self {
        let n = a.len();
        let mut e = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                e[i * n + j] = (a[i] as i64 - a[j] as i64).clamp(0, big_n as i64) as u32;
            }
        }
        Self { n, e }
    }

    pub fn contains(&self, ring: &MatRing, m: &Mat) -> bool {
        m.iter().zip(&self.e).all(|(&x, &e)| ring.valuation(x) >= e)
    }

    /// Elementary matrices `1 + p^e_ij E_ij` and diagonal units.
    pub fn generators(&self, ring: &MatRing) -> Vec<Mat> {
        let n = self.n;
        let mut gens = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let e = self.e[i * n + j];
                if i != j && e < ring.big_n {
                    let mut g = ring.identity();
                    g[i * n + j] = ring.p.pow(e) % ring.modulus;
                    gens.push(g);
                }
            }
        }
        for i in 0..n {
            for u in ring.units() {
                if u != 1 {
                    let mut g = ring.identity();
                    g[i * n + i] = u;
                    gens.push(g);
                }
            }
        }
        gens
    }
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), components: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.components -= 1;
        }
    }
}

/// Number of orbits of `<gens>` acting by left multiplication on `elements`,
/// which must be closed under that action.
pub fn count_left_orbits(ring: &MatRing, elements: &[Mat], gens: &[Mat]) -> u64 {
    let index: HashMap<u64, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, m)| (ring.key(m), i))
        .collect();
    let mut uf = UnionFind::new(elements.len());
    for (i, g) in elements.iter().enumerate() {
        for h in gens {
            let j = index[&ring.key(&ring.mul(h, g))];
            uf.union(i, j);
        }
    }
    uf.components as u64
}

/// `|H \ GL_n(Z/p^N)|` for a valuation pattern, by union-find.
pub fn coset_count_bruteforce(pattern: &ValuationPattern, p: u64, big_n: u32) -> Result<u64> {
    let elements: Vec<Mat> = enumerate_gl(pattern.n, p, big_n)?.collect();
    let ring = MatRing::new(pattern.n, p, big_n)?;
    Ok(count_left_orbits(&ring, &elements, &pattern.generators(&ring)))
}

/// `|H|` counted directly, for cross-checks.
pub fn subgroup_order_bruteforce(pattern: &ValuationPattern, p: u64, big_n: u32) -> Result<u64> {
    let ring = MatRing::new(pattern.n, p, big_n)?;
    Ok(enumerate_gl(pattern.n, p, big_n)?
        .filter(|m| pattern.contains(&ring, m))
        .count() as u64)
}

/// `|P_lambda(Z/p^N) \ GL_n(Z/p^N)|`.
pub fn flag_count_bruteforce(parts: &[u32], p: u64, big_n: u32) -> Result<u64> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidArgument(format!("not a composition: {parts:?}")));
    }
    coset_count_bruteforce(&ValuationPattern::parabolic(parts, big_n), p, big_n)
}

fn check_cartan_exponents(a: &[u32]) -> Result<()> {
    if a.is_empty() || a.windows(2).any(|w| w[0] < w[1]) || *a.last().unwrap() != 0 {
        return Err(Error::InvalidArgument(format!(
            "Cartan exponents must be descending and end in 0, got {a:?}"
        )));
    }
    Ok(())
}

/// `|K_0 \ K_0 g K_0 / K_N|` for `g = diag(p^a)`, by brute force.
pub fn cartan_coset_bruteforce(a: &[u32], p: u64, big_n: u32) -> Result<u64> {
    check_cartan_exponents(a)?;
    coset_count_bruteforce(&ValuationPattern::cartan(a, big_n), p, big_n)
}

/// Closed form `q^(1/2 (sum n_i^2 - n^2) + sum_(i<j) min(a_i - a_j, N)) [n; lambda]_q`,
/// `lambda` the multiplicities of the distinct exponents.
pub fn cartan_coset_closed_form(a: &[u32], big_n: u32) -> Result<QPoly> {
    check_cartan_exponents(a)?;
    let mut parts: Vec<u32> = Vec::new();
    for (i, x) in a.iter().enumerate() {
        if i > 0 && a[i - 1] == *x {
            *parts.last_mut().unwrap() += 1;
        } else {
            parts.push(1);
        }
    }
    let n = a.len() as i64;
    let sq: i64 = parts.iter().map(|&k| (k as i64).pow(2)).sum();
    let mut exp = (sq - n * n) / 2;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            exp += (a[i] - a[j]).min(big_n) as i64;
        }
    }
    let m = q_multinomial(a.len() as u32, &parts)?;
    Ok(m.shift(exp as usize))
}

fn ev(p: &QPoly, q0: u64) -> BigInt {
    p.eval(&BigInt::from(q0))
}

/// `dim rho^(K_N)` for a level-zero supercuspidal of `GL_2` or `GL_3`, summed
/// over Cartan double cosets with the fixed-space dimension of each.
pub fn level_zero_dim_sum(n: u32, q0: u64, big_n: u32) -> Result<BigInt> {
    if q0 < 2 || big_n == 0 {
        return Err(Error::InvalidArgument("need q >= 2 and N >= 1".into()));
    }
    let q = BigInt::from(q0);
    let one = BigInt::one();
    let mut total = BigInt::zero();
    match n {
        2 => {
            let d = &q - &one;
            for a in 0..big_n {
                total += ev(&cartan_coset_closed_form(&[a, 0], big_n)?, q0) * &d;
            }
        }
        3 => {
            let d = (&q - &one) * (&q * &q - &one);
            let d_unip = &d / (&q + &one);
            for a in 0..2 * big_n {
                for b in 0..=a {
                    let weight = if a < big_n {
                        &d
                    } else if a - b < big_n && b < big_n {
                        &d_unip
                    } else {
                        continue;
                    };
                    total += ev(&cartan_coset_closed_form(&[a, b, 0], big_n)?, q0) * weight;
                }
            }
        }
        _ => return Err(Error::UnsupportedSize(n)),
    }
    Ok(total)
}
