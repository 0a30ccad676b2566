//! Middle tunnels: slopes from the descending partial products of the
//! generator word, binaries from letter changes, intermediate knots from
//! row sums.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{cf_expand, normalize_params, Rational, SimpleSlope, TunnelKind};
use crate::error::Result;
use crate::word::{generator_word, intermediate_of_matrix, partial_products, slope_of_matrix};

/// The cabling sequence of a tunnel: simple slope `m0`, integer slopes
/// `m1 ..= mN`, binaries `s2 ..= sN` and intermediate knots.
///
/// Binaries and intermediates are only produced for middle tunnels. Upper
/// and lower tunnels are semisimple, so every binary is 0 and the list is
/// left empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CablingSequence {
    pub tunnel_kind: TunnelKind,
    pub simple_slope: SimpleSlope,
    pub slopes: Vec<BigInt>,
    pub binaries: Vec<bool>,
    pub intermediates: Vec<(BigInt, BigInt)>,
}

impl CablingSequence {
    /// Number of cabling constructions, `m0` included.
    pub fn cabling_count(&self) -> usize {
        self.slopes.len() + 1
    }

    /// Whether some binary invariant is 1.
    pub fn has_nonzero_binary(&self) -> bool {
        self.binaries.iter().any(|&s| s)
    }

    /// Whether `self` and `other` describe the same tunnel: same slopes and
    /// same binaries, where an empty binary list stands for all zeros.
    pub fn same_invariants(&self, other: &CablingSequence) -> bool {
        self.simple_slope == other.simple_slope
            && self.slopes == other.slopes
            && binaries_agree(&self.binaries, &other.binaries)
    }

    pub(crate) fn negate(&mut self) {
        self.simple_slope = self.simple_slope.negated();
        for m in &mut self.slopes {
            *m = -&*m;
        }
    }
}

fn binaries_agree(a: &[bool], b: &[bool]) -> bool {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    long.iter()
        .enumerate()
        .all(|(i, &s)| s == short.get(i).copied().unwrap_or(false))
}

/// Renders the slope list as `[a/b], m1, m2, ...`.
impl fmt::Display for CablingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.simple_slope)?;
        for m in &self.slopes {
            write!(f, ", {m}")?;
        }
        Ok(())
    }
}

/// The cabling sequence of the middle tunnel of `K(p, q)`.
///
/// `(p, q)` and `(q, p)` give the same sequence. If `p q < 0` the slopes of
/// `K(|p|, |q|)` are negated; binaries and intermediates are unchanged.
pub fn middle_sequence(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<CablingSequence> {
    let params = normalize_params(p, q, TunnelKind::Middle)?;
    let cf = cf_expand(params.canonical_p, params.canonical_q)?;
    let word = generator_word(&cf)?;
    let products = partial_products(&word);

    let n1 = &cf.terms()[0];
    let simple_slope = SimpleSlope::reciprocal(BigInt::from(2) * n1 + 1)?;
    let slopes = products.iter().skip(1).map(slope_of_matrix).collect();
    let binaries = word
        .nonnegative_letters()
        .windows(2)
        .skip(1)
        .map(|pair| pair[0] != pair[1])
        .collect();
    let intermediates = products.iter().map(intermediate_of_matrix).collect();

    let mut seq = CablingSequence {
        tunnel_kind: TunnelKind::Middle,
        simple_slope,
        slopes,
        binaries,
        intermediates,
    };
    if params.negate_slopes {
        seq.negate();
    }
    Ok(seq)
}

/// The final slope reduced modulo 2, as a rational in `[0, 2)`.
///
/// When the sequence has no integer slopes, the simple slope's
/// representative `a/b` in `[0, 1)` is taken as the value.
pub fn rho_invariant(seq: &CablingSequence) -> Rational {
    let two = BigInt::from(2);
    match seq.slopes.last() {
        Some(m) => Rational::integer(m.clone()).rem_euclid(&two),
        None => seq.simple_slope.as_rational().rem_euclid(&two),
    }
}

/// Whether the final slope is odd, i.e. `rho = 1`.
pub fn rho_is_one(seq: &CablingSequence) -> bool {
    rho_invariant(seq) == Rational::integer(BigInt::one())
}
