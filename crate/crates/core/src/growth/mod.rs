//! Growth polynomials and GK dimensions of induced products, segment
//! representations and Langlands quotients.

use std::collections::BTreeMap;

use crate::cuspidal::{CuspidalGrowth, SourceMap};
use crate::error::{Error, Result};
use crate::qring::{q_binomial, q_factorial, q_factorial_base, q_multinomial, QRat, XLaurent};
use crate::segments::{poset_below, Multisegment, Segment, Symbol};

/// `coeff * X^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingTerm {
    pub coeff: QRat,
    pub exponent: i64,
}

impl LeadingTerm {
    pub fn as_laurent(&self) -> XLaurent {
        XLaurent::monomial(self.coeff.clone(), self.exponent)
    }

    /// Leading term of a nonzero growth polynomial.
    pub fn of(g: &XLaurent) -> Option<LeadingTerm> {
        g.leading_term().map(|(e, c)| LeadingTerm { coeff: c.clone(), exponent: e })
    }
}

/// `|P_lambda \ G / K_N|` as a polynomial in `X`: `[n; lambda]_q X^((n^2 - sum n_i^2)/2)`.
pub fn parabolic_coset_count(parts: &[u32]) -> Result<XLaurent> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidArgument(format!("not a composition: {parts:?}")));
    }
    let n: u64 = parts.iter().map(|&p| p as u64).sum();
    let sq: u64 = parts.iter().map(|&p| (p as u64).pow(2)).sum();
    let m = q_multinomial(n as u32, parts)?;
    Ok(XLaurent::monomial(QRat::from_poly(m), ((n * n - sq) / 2) as i64))
}

/// Growth polynomial of `pi_1 x ... x pi_r` from `(n_i, G_i)`.
pub fn product_growth(factors: &[(u32, XLaurent)]) -> Result<XLaurent> {
    let sizes: Vec<u32> = factors.iter().map(|(n, _)| *n).collect();
    let mut out = parabolic_coset_count(&sizes)?;
    for (_, g) in factors {
        out = &out * g;
    }
    Ok(out)
}

/// `G` of the segment representation of length `r` over a cuspidal of `GL_n1`
/// with growth `g_rho`, in closed form.
pub fn segment_growth_from(n1: u32, r: u32, g_rho: &XLaurent) -> Result<XLaurent> {
    if n1 == 0 || r == 0 {
        return Err(Error::InvalidArgument("segment needs n1, r >= 1".into()));
    }
    let n = n1 * r;
    let multi = q_multinomial(n, &vec![n1; r as usize])?;
    let coeff = QRat::from_poly(multi) / QRat::from_poly(q_factorial_base(r, n1));
    let (a, b) = (n1 as i64, r as i64);
    let exp = a * (a - 1) * b * (b - 1) / 2;
    Ok(XLaurent::monomial(coeff, exp) * g_rho.pow(r))
}

/// Same as [`segment_growth_from`], unrolled from the one-step recursion
/// `G_r = [n-1 choose n1-1]_q X^((n - n1)(n1 - 1)) G_(r-1) G_rho`, `n = n1 r`.
pub fn segment_growth_recursive(n1: u32, r: u32, g_rho: &XLaurent) -> Result<XLaurent> {
    if n1 == 0 || r == 0 {
        return Err(Error::InvalidArgument("segment needs n1, r >= 1".into()));
    }
    let mut g = g_rho.clone();
    for k in 2..=r {
        let n = n1 * k;
        let step = XLaurent::monomial(
            QRat::from_poly(q_binomial(n - 1, n1 - 1)),
            ((n - n1) as i64) * (n1 as i64 - 1),
        );
        g = step * g * g_rho.clone();
    }
    Ok(g)
}

fn source_for<'a>(sources: &'a SourceMap, symbol: &Symbol) -> Result<&'a CuspidalGrowth> {
    sources
        .get(&symbol.id)
        .ok_or_else(|| Error::UnknownSymbol(symbol.id.clone()))
}

/// `G` of the segment representation `<d>`.
pub fn segment_growth(d: &Segment, source: &CuspidalGrowth) -> Result<XLaurent> {
    let g_rho = source.full_polynomial(&d.symbol.id)?;
    segment_growth_from(d.symbol.size, d.length, &g_rho)
}

/// Product of the segment growths of `a`, i.e. `G` of the standard module.
pub fn standard_growth(a: &Multisegment, sources: &SourceMap) -> Result<XLaurent> {
    let factors = a
        .segments()
        .iter()
        .map(|s| Ok((s.matrix_size(), segment_growth(s, source_for(sources, &s.symbol)?)?)))
        .collect::<Result<Vec<_>>>()?;
    product_growth(&factors)
}

fn parity_checked_half(n2: i64, sum: i64) -> i64 {
    assert!((n2 - sum) % 2 == 0, "parity identity failed: n^2 = {n2}, sum n_i r_i^2 = {sum}");
    (n2 - sum) / 2
}

/// `1/2 (n^2 - sum n_i r_i^2)`.
pub fn gk_dimension(a: &Multisegment) -> i64 {
    let n = a.total_size() as i64;
    let sum: i64 = a
        .segments()
        .iter()
        .map(|s| s.symbol.size as i64 * (s.length as i64).pow(2))
        .sum();
    parity_checked_half(n * n, sum)
}

/// `[n!]_q / prod [r_i!]_(q^(n_i))` times `X^gk`.
pub fn leading_term(a: &Multisegment) -> LeadingTerm {
    let den = a
        .segments()
        .iter()
        .map(|s| QRat::from_poly(q_factorial_base(s.length, s.symbol.size)))
        .fold(QRat::one(), |acc, x| acc * x);
    LeadingTerm {
        coeff: QRat::from_poly(q_factorial(a.total_size())) / den,
        exponent: gk_dimension(a),
    }
}

/// `G` of `<a>` for one symbol and pairwise disjoint segments, as the
/// alternating sum of standard modules over the poset below `a`.
pub fn langlands_quotient_growth_disjoint(a: &Multisegment, sources: &SourceMap) -> Result<XLaurent> {
    if a.is_empty() {
        return Err(Error::InvalidArgument("empty multisegment".into()));
    }
    if !a.supports_pairwise_disjoint() {
        return Err(Error::UnsupportedMultisegment(format!(
            "{a}: segments must share one symbol and be pairwise disjoint"
        )));
    }
    let poset = poset_below(a)?;
    let top = a.len() as i64;
    let mut out = XLaurent::zero();
    for b in &poset.nodes {
        let g = standard_growth(b, sources)?;
        out += if (top - b.len() as i64) % 2 == 0 { g } else { -g };
    }
    Ok(out)
}

/// Exact `G` of `<a>` where supported: on each symbol a single segment or
/// pairwise disjoint segments, combined across symbols by induction.
pub fn exact_growth(a: &Multisegment, sources: &SourceMap) -> Result<XLaurent> {
    if a.is_empty() {
        return Err(Error::InvalidArgument("empty multisegment".into()));
    }
    let mut by_symbol: BTreeMap<&Symbol, Vec<Segment>> = BTreeMap::new();
    for s in a.segments() {
        by_symbol.entry(&s.symbol).or_default().push(s.clone());
    }
    let mut factors = Vec::new();
    for (symbol, segs) in by_symbol {
        let sub = Multisegment::new(segs);
        if !sub.supports_pairwise_disjoint() {
            return Err(Error::UnsupportedMultisegment(format!(
                "segments on `{}` intersect ({sub}); exact growth needs Zelevinsky multiplicities",
                symbol.id
            )));
        }
        factors.push((sub.total_size(), langlands_quotient_growth_disjoint(&sub, sources)?));
    }
    if factors.len() == 1 {
        return Ok(factors.pop().unwrap().1);
    }
    product_growth(&factors)
}

/// `I(pi) = [n!]_q^-1 X^(-(n^2 - n)/2) G_pi`.
pub fn normalize_i(n: u32, g: &XLaurent) -> XLaurent {
    let nn = n as i64;
    g.scale(&QRat::from_poly(q_factorial(n)).inv().unwrap())
        .shift(-(nn * nn - nn) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuspidal::Gl2Case;
    use crate::qring::{gl2_shape, q_int, QPoly};
    use crate::segments::tests::{ms, rho};

    fn one_source() -> SourceMap {
        SourceMap::from([(
            "rho".to_string(),
            CuspidalGrowth::Explicit { poly: XLaurent::one(), threshold: 1 },
        )])
    }

    fn sym(id: &str, size: u32) -> Symbol {
        Symbol::new(id, size)
    }

    fn seg(s: &Symbol, offset: i64, length: u32) -> Segment {
        Segment::new(s.clone(), offset, length).unwrap()
    }

    fn lz2() -> XLaurent {
        gl2_shape(QPoly::constant(2))
    }

    fn qr(s: &str) -> QRat {
        XLaurent::parse(s).unwrap().constant_term()
    }

    #[test]
    fn parabolic_counts() {
        assert_eq!(parabolic_coset_count(&[1, 1]).unwrap(), XLaurent::parse("(q + 1)*X").unwrap());
        assert_eq!(parabolic_coset_count(&[4]).unwrap(), XLaurent::one());
        assert_eq!(
            parabolic_coset_count(&[2, 1]).unwrap(),
            XLaurent::monomial(QRat::from_poly(q_int(3).unwrap()), 2)
        );
    }

    #[test]
    fn products() {
        assert_eq!(product_growth(&[(2, lz2())]).unwrap(), lz2());
        assert_eq!(
            product_growth(&[(1, XLaurent::one()), (1, XLaurent::one())]).unwrap(),
            XLaurent::parse("(q + 1)*X").unwrap()
        );
        let expected = XLaurent::monomial(QRat::from_poly(q_int(3).unwrap()), 2) * lz2();
        assert_eq!(product_growth(&[(2, lz2()), (1, XLaurent::one())]).unwrap(), expected);
    }

    #[test]
    fn segment_examples() {
        assert_eq!(segment_growth_from(2, 1, &lz2()).unwrap(), lz2());
        assert_eq!(segment_growth_from(1, 2, &XLaurent::one()).unwrap(), XLaurent::one());
        let g = segment_growth_from(2, 2, &lz2()).unwrap();
        let expected = XLaurent::monomial(qr("q^2 + q + 1"), 2) * lz2().pow(2);
        assert_eq!(g, expected);
        let lead = LeadingTerm::of(&g).unwrap();
        assert_eq!(lead.coeff, qr("(q + 1)^2*(q^2 + q + 1)"));
        let rho2 = sym("rho", 2);
        assert_eq!(lead, leading_term(&Multisegment::new(vec![seg(&rho2, 0, 2)])));
    }

    #[test]
    fn closed_form_matches_recursion() {
        for n1 in 1..=3 {
            let g_rho = crate::cuspidal::level_zero(n1).unwrap();
            for r in 1..=3 {
                assert_eq!(
                    segment_growth_from(n1, r, &g_rho).unwrap(),
                    segment_growth_recursive(n1, r, &g_rho).unwrap(),
                    "n1 = {n1}, r = {r}"
                );
            }
        }
    }

    #[test]
    fn leading_only_source_refused() {
        let s = CuspidalGrowth::LeadingOnly { n1: 1 };
        assert_eq!(
            segment_growth(&seg(&rho(), 0, 2), &s),
            Err(Error::InsufficientCuspidalData("rho".into()))
        );
    }

    #[test]
    fn gk_values() {
        assert_eq!(gk_dimension(&ms(&[(0, 1), (1, 1), (1, 1), (2, 1)])), 6);
        assert_eq!(gk_dimension(&ms(&[(0, 3), (1, 1)])), 3);
        // single segment: n(n - r)/2
        for (n1, r) in [(1, 3), (2, 2), (3, 2), (2, 5)] {
            let n = (n1 * r) as i64;
            let a = Multisegment::new(vec![seg(&sym("rho", n1), 0, r)]);
            assert_eq!(gk_dimension(&a), n * (n - r as i64) / 2);
        }
    }

    #[test]
    fn leading_term_examples() {
        // {[rho, nu rho], nu rho, nu^2 rho}: 8 n1^2 - 3 n1
        for n1 in 1..=4u32 {
            let s = sym("rho", n1);
            let a = Multisegment::new(vec![seg(&s, 0, 2), seg(&s, 1, 1), seg(&s, 2, 1)]);
            let n = n1 as i64;
            assert_eq!(leading_term(&a).exponent, 8 * n * n - 3 * n);
            let single = Multisegment::new(vec![seg(&s, 0, 1)]);
            assert_eq!(
                leading_term(&single),
                LeadingTerm { coeff: QRat::from_poly(q_factorial(n1)), exponent: n * (n - 1) / 2 }
            );
        }
        let generic = ms(&[(0, 1), (3, 1), (7, 1), (7, 1)]);
        assert_eq!(
            leading_term(&generic),
            LeadingTerm { coeff: QRat::from_poly(q_factorial(4)), exponent: 6 }
        );
    }

    #[test]
    fn disjoint_quotients() {
        let src = one_source();
        assert_eq!(
            langlands_quotient_growth_disjoint(&ms(&[(0, 1), (1, 1)]), &src).unwrap(),
            XLaurent::parse("(q + 1)*X - 1").unwrap()
        );
        let expected = XLaurent::parse("(q^3 + 2*q^2 + 2*q + 1)*X^3 - (2*q^2 + 2*q + 2)*X^2 + 1").unwrap();
        assert_eq!(
            langlands_quotient_growth_disjoint(&ms(&[(0, 1), (1, 1), (2, 1)]), &src).unwrap(),
            expected
        );
        let single = ms(&[(0, 3)]);
        assert_eq!(
            langlands_quotient_growth_disjoint(&single, &src).unwrap(),
            segment_growth(&single.segments()[0], &src["rho"]).unwrap()
        );
        assert!(matches!(
            langlands_quotient_growth_disjoint(&ms(&[(0, 2), (1, 2)]), &src),
            Err(Error::UnsupportedMultisegment(_))
        ));
    }

    #[test]
    fn steinberg_at_level_one() {
        let src = one_source();
        for n in 2..=4i64 {
            let a = ms(&(0..n).map(|k| (k, 1)).collect::<Vec<_>>());
            let g = langlands_quotient_growth_disjoint(&a, &src).unwrap();
            assert_eq!(LeadingTerm::of(&g).unwrap(), leading_term(&a));
            for q in [2u64, 3, 5] {
                assert_eq!(g.eval_dim(q, 1).unwrap(), num_bigint::BigInt::from(q).pow((n * (n - 1) / 2) as u32));
            }
        }
    }

    #[test]
    fn exact_across_symbols() {
        let a = Symbol::new("a", 2);
        let b = Symbol::new("b", 2);
        let src = SourceMap::from([
            ("a".to_string(), CuspidalGrowth::Gl2 { case: Gl2Case::Level0 }),
            ("b".to_string(), CuspidalGrowth::LevelZero { n: 2 }),
        ]);
        let m = Multisegment::new(vec![seg(&a, 0, 1), seg(&b, 0, 1)]);
        let expected = XLaurent::monomial(QRat::from_poly(q_multinomial(4, &[2, 2]).unwrap()), 4) * lz2().pow(2);
        assert_eq!(exact_growth(&m, &src).unwrap(), expected);

        let linked = ms(&[(0, 2), (1, 2)]);
        assert!(matches!(exact_growth(&linked, &one_source()), Err(Error::UnsupportedMultisegment(_))));
        let lead = SourceMap::from([("rho".to_string(), CuspidalGrowth::LeadingOnly { n1: 1 })]);
        assert!(matches!(exact_growth(&ms(&[(0, 1)]), &lead), Err(Error::InsufficientCuspidalData(_))));
        assert!(matches!(exact_growth(&ms(&[(0, 1)]), &SourceMap::new()), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_i(1, &XLaurent::one()), XLaurent::one());
        assert_eq!(normalize_i(2, &lz2()), XLaurent::parse("1 - 2/(q + 1)*X^-1").unwrap());
        assert_eq!(normalize_i(2, &XLaurent::parse("(q + 1)*X").unwrap()), XLaurent::one());
    }

    #[test]
    fn normalized_segment_identity() {
        for n1 in 1..=3u32 {
            let g_rho = crate::cuspidal::level_zero(n1).unwrap();
            let i_rho = normalize_i(n1, &g_rho);
            for r in 1..=3u32 {
                let n = n1 * r;
                let lhs = normalize_i(n, &segment_growth_from(n1, r, &g_rho).unwrap());
                let scale = QRat::from_poly(q_factorial_base(r, n1)).inv().unwrap();
                let rhs = i_rho.pow(r).scale(&scale).shift(-((r as i64 - 1) * n as i64) / 2);
                assert_eq!(lhs, rhs, "n1 = {n1}, r = {r}");
            }
        }
    }
}
