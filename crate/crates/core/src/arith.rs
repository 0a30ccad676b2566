//! Exact integer and rational primitives shared by the tunnel computations.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Nonnegative greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(a: impl Into<BigInt>, b: impl Into<BigInt>) -> BigInt {
    a.into().gcd(&b.into())
}

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (mut num, mut den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::OutOfRange("zero denominator"));
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        Ok(Rational {
            num: num / &g,
            den: den / g,
        })
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// The representative of `self` modulo the integer `m`, in `[0, m)`.
    pub fn rem_euclid(&self, m: &BigInt) -> Rational {
        let modulus = m * &self.den;
        Rational {
            num: self.num.mod_floor(&modulus),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// A class in Q/Z, stored by its representative `num/den` in `[0, 1)`.
///
/// The class of `-1/7` and the class of `6/7` have the same representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleSlope {
    num: BigInt,
    den: BigInt,
}

impl SimpleSlope {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let r = Rational::new(num, den)?;
        let num = r.num.mod_floor(&r.den);
        Ok(SimpleSlope { num, den: r.den })
    }

    /// The class `[1/den]`.
    pub fn reciprocal(den: impl Into<BigInt>) -> Result<Self> {
        SimpleSlope::new(1, den)
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    /// The class of the negative.
    pub fn negated(&self) -> SimpleSlope {
        SimpleSlope {
            num: (-&self.num).mod_floor(&self.den),
            den: self.den.clone(),
        }
    }

    pub fn as_rational(&self) -> Rational {
        Rational {
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for SimpleSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}/{}]", self.num, self.den)
    }
}

/// Positive-term continued fraction `[n1, ..., nk]` whose last term is at
/// least 2 whenever it has more than one term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    terms: Vec<BigInt>,
}

impl ContinuedFraction {
    /// Validates the term list: nonempty, every term `>= 1`, and a last term
    /// `>= 2` when there is more than one term.
    pub fn new(terms: Vec<BigInt>) -> Result<Self> {
        let Some(last) = terms.last() else {
            return Err(Error::OutOfRange("empty continued fraction"));
        };
        if terms.iter().any(|t| t < &BigInt::one()) {
            return Err(Error::OutOfRange(
                "continued fraction terms must be positive",
            ));
        }
        if terms.len() > 1 && last < &BigInt::from(2) {
            return Err(Error::OutOfRange(
                "last continued fraction term must be at least 2",
            ));
        }
        Ok(ContinuedFraction { terms })
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Expands `p/q` by the positive-remainder Euclidean algorithm.
///
/// Requires `p > q >= 2` and `gcd(p, q) = 1`.
pub fn cf_expand(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<ContinuedFraction> {
    let (mut p, mut q) = (p.into(), q.into());
    if q < BigInt::from(2) {
        return Err(Error::OutOfRange("denominator must be at least 2"));
    }
    if p <= q {
        return Err(Error::OutOfRange("numerator must exceed denominator"));
    }
    if !p.gcd(&q).is_one() {
        return Err(Error::NotCoprime { a: p, b: q });
    }
    let mut terms = Vec::new();
    while !q.is_zero() {
        let (quot, rem) = p.div_rem(&q);
        terms.push(quot);
        p = q;
        q = rem;
    }
    // The last quotient divides a remainder > 1 by 1 (coprime input), so it is >= 2.
    assert!(terms.last().is_some_and(|t| t >= &BigInt::from(2)));
    Ok(ContinuedFraction { terms })
}

/// Evaluates `n1 + 1/(n2 + 1/(... + 1/nk))` exactly.
pub fn cf_value(cf: &ContinuedFraction) -> Rational {
    let mut terms = cf.terms.iter().rev();
    let mut num = terms.next().cloned().unwrap_or_default();
    let mut den = BigInt::one();
    for t in terms {
        let next = t * &num + &den;
        den = num;
        num = next;
    }
    // Convergent recurrences keep num/den in lowest terms already.
    Rational { num, den }
}

/// The inverse `q'` of `q` modulo `p`, with `0 < q' < p`.
pub fn mod_inverse(q: impl Into<BigInt>, p: impl Into<BigInt>) -> Result<BigInt> {
    let (q, p) = (q.into(), p.into());
    if p < BigInt::from(2) {
        return Err(Error::OutOfRange("modulus must be at least 2"));
    }
    let egcd = q.mod_floor(&p).extended_gcd(&p);
    if !egcd.gcd.is_one() {
        return Err(Error::NotCoprime { a: q, b: p });
    }
    Ok(egcd.x.mod_floor(&p))
}

/// Which of the three torus knot tunnels is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TunnelKind {
    Middle,
    Upper,
    Lower,
}

impl TunnelKind {
    pub const ALL: [TunnelKind; 3] = [TunnelKind::Middle, TunnelKind::Upper, TunnelKind::Lower];

    pub fn name(self) -> &'static str {
        match self {
            TunnelKind::Middle => "middle",
            TunnelKind::Upper => "upper",
            TunnelKind::Lower => "lower",
        }
    }
}

impl fmt::Display for TunnelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A torus knot parameter pair together with its canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusKnotParams {
    pub p: BigInt,
    pub q: BigInt,
    pub canonical_p: BigInt,
    pub canonical_q: BigInt,
    /// `p * q < 0`: every slope of the canonical knot must be negated.
    pub negate_slopes: bool,
    /// The canonical pair is `(|q|, |p|)` rather than `(|p|, |q|)`.
    pub swapped: bool,
}

/// Checks that `(p, q)` is a nontrivial torus knot and reduces it to
/// canonical form: absolute values, and `canonical_p > canonical_q` for the
/// middle tunnel.
pub fn normalize_params(
    p: impl Into<BigInt>,
    q: impl Into<BigInt>,
    kind: TunnelKind,
) -> Result<TorusKnotParams> {
    let (p, q) = (p.into(), q.into());
    let g = p.gcd(&q);
    if p.is_zero() || q.is_zero() || !g.is_one() {
        return Err(Error::NotAKnot { p, q, gcd: g });
    }
    let (abs_p, abs_q) = (p.abs(), q.abs());
    if abs_p.is_one() || abs_q.is_one() {
        return Err(Error::Unknot { p, q });
    }
    let negate_slopes = (p.sign() == Sign::Minus) != (q.sign() == Sign::Minus);
    let swapped = kind == TunnelKind::Middle && abs_q > abs_p;
    let (canonical_p, canonical_q) = if swapped {
        (abs_q, abs_p)
    } else {
        (abs_p, abs_q)
    };
    Ok(TorusKnotParams {
        p,
        q,
        canonical_p,
        canonical_q,
        negate_slopes,
        swapped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn terms(cf: &ContinuedFraction) -> Vec<i64> {
        cf.terms()
            .iter()
            .map(|t| i64::try_from(t).unwrap())
            .collect()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(41, 29), big(1));
        assert_eq!(gcd(12, 8), big(4));
        assert_eq!(gcd(0, 5), big(5));
        assert_eq!(gcd(0, 0), big(0));
        assert_eq!(gcd(-12, 8), big(4));
    }

    #[test]
    fn cf_expand_examples() {
        assert_eq!(terms(&cf_expand(41, 29).unwrap()), vec![1, 2, 2, 2, 2]);
        assert_eq!(terms(&cf_expand(181, 48).unwrap()), vec![3, 1, 3, 2, 1, 3]);
        assert_eq!(terms(&cf_expand(3, 2).unwrap()), vec![1, 2]);
    }

    #[test]
    fn cf_expand_rejects_bad_input() {
        assert!(matches!(cf_expand(5, 1), Err(Error::OutOfRange(_))));
        assert!(matches!(cf_expand(2, 3), Err(Error::OutOfRange(_))));
        assert!(matches!(cf_expand(3, 3), Err(Error::OutOfRange(_))));
        assert!(matches!(cf_expand(12, 8), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn cf_value_examples() {
        let cf = ContinuedFraction::new(vec![big(1), big(2), big(2), big(2), big(2)]).unwrap();
        assert_eq!(cf_value(&cf), Rational::new(41, 29).unwrap());
        let cf = ContinuedFraction::new([3, 1, 3, 2, 1, 3].map(big).to_vec()).unwrap();
        assert_eq!(cf_value(&cf), Rational::new(181, 48).unwrap());
        let cf = ContinuedFraction::new(vec![big(7)]).unwrap();
        assert_eq!(cf_value(&cf), Rational::integer(7));
    }

    #[test]
    fn continued_fraction_validation() {
        assert!(ContinuedFraction::new(vec![]).is_err());
        assert!(ContinuedFraction::new(vec![big(2), big(1)]).is_err());
        assert!(ContinuedFraction::new(vec![big(0), big(3)]).is_err());
        assert!(ContinuedFraction::new(vec![big(1)]).is_ok());
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(29, 41).unwrap(), big(17));
        assert_eq!(mod_inverse(48, 181).unwrap(), big(132));
        assert_eq!(mod_inverse(1, 2).unwrap(), big(1));
        assert_eq!(mod_inverse(-1, 7).unwrap(), big(6));
        assert!(matches!(mod_inverse(6, 9), Err(Error::NotCoprime { .. })));
        assert!(matches!(mod_inverse(1, 1), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn normalize_examples() {
        let n = normalize_params(181, -48, TunnelKind::Middle).unwrap();
        assert_eq!((n.canonical_p, n.canonical_q), (big(181), big(48)));
        assert!(n.negate_slopes);
        assert!(!n.swapped);

        let n = normalize_params(29, 41, TunnelKind::Middle).unwrap();
        assert_eq!((n.canonical_p, n.canonical_q), (big(41), big(29)));
        assert!(n.swapped);
        assert!(!n.negate_slopes);

        let n = normalize_params(-3, -2, TunnelKind::Middle).unwrap();
        assert_eq!((n.canonical_p, n.canonical_q), (big(3), big(2)));
        assert!(!n.negate_slopes);

        let n = normalize_params(7, 18, TunnelKind::Upper).unwrap();
        assert_eq!((n.canonical_p, n.canonical_q), (big(7), big(18)));
        assert!(!n.swapped);
    }

    #[test]
    fn normalize_errors() {
        assert!(matches!(
            normalize_params(4, 2, TunnelKind::Middle),
            Err(Error::NotAKnot { gcd, .. }) if gcd == big(2)
        ));
        assert!(matches!(
            normalize_params(7, 0, TunnelKind::Upper),
            Err(Error::NotAKnot { .. })
        ));
        assert!(matches!(
            normalize_params(0, 1, TunnelKind::Upper),
            Err(Error::NotAKnot { .. })
        ));
        assert!(matches!(
            normalize_params(5, -1, TunnelKind::Lower),
            Err(Error::Unknot { .. })
        ));
        assert!(matches!(
            normalize_params(1, 1, TunnelKind::Middle),
            Err(Error::Unknot { .. })
        ));
    }

    #[test]
    fn error_messages() {
        use alloc::string::ToString;
        let e = normalize_params(4, 2, TunnelKind::Middle).unwrap_err();
        assert_eq!(e.to_string(), "(4,2) is not a knot (gcd = 2)");
        let e = normalize_params(0, 1, TunnelKind::Middle).unwrap_err();
        assert_eq!(e.to_string(), "(0,1) is not a knot (zero coordinate)");
    }

    #[test]
    fn simple_slope_canonical_representative() {
        let a = SimpleSlope::new(-1, 7).unwrap();
        let b = SimpleSlope::new(6, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.numer(), a.denom()), (&big(6), &big(7)));
        assert_eq!(SimpleSlope::reciprocal(7).unwrap().negated(), b);
        assert_eq!(SimpleSlope::new(15, -7).unwrap(), b);
        assert_eq!(
            SimpleSlope::new(2, 14).unwrap(),
            SimpleSlope::new(1, 7).unwrap()
        );
        use alloc::string::ToString;
        assert_eq!(b.to_string(), "[6/7]");
    }

    #[test]
    fn rational_rem_euclid() {
        assert_eq!(
            Rational::integer(-3431).rem_euclid(&big(2)),
            Rational::integer(1)
        );
        assert_eq!(
            Rational::new(13, 7).unwrap().rem_euclid(&big(1)),
            Rational::new(6, 7).unwrap()
        );
    }
}
