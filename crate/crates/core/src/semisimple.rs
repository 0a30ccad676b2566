//! Upper and lower tunnels. Both are semisimple; their slopes come from the
//! ceilings `p_k = ceil(k p / q)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::{normalize_params, SimpleSlope, TunnelKind};
use crate::error::{Error, Result};
use crate::middle::CablingSequence;

/// `p_k = ceil(k p / q)` for `k = 1 ..= q`, and `k0 = min { k : p_k > 1 }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PkProfile {
    pub p: BigInt,
    pub q: BigInt,
    /// `pk[k - 1]` holds `p_k`; the last entry is `p_q = p`.
    pub pk: Vec<BigInt>,
    pub k0: usize,
}

impl PkProfile {
    /// `p_k` for `1 <= k <= q`.
    pub fn get(&self, k: usize) -> Option<&BigInt> {
        k.checked_sub(1).and_then(|i| self.pk.get(i))
    }
}

/// Computes the ceiling profile of `(|p|, |q|)` with integer division.
pub fn pk_profile(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<PkProfile> {
    let params = normalize_params(p, q, TunnelKind::Upper)?;
    let (p, q) = (params.canonical_p, params.canonical_q);
    let count = usize::try_from(&q).map_err(|_| Error::OutOfRange("q too large"))?;
    let mut pk = Vec::new();
    pk.try_reserve(count)
        .map_err(|_| Error::OutOfRange("q too large"))?;
    match (u64::try_from(&p), u64::try_from(&q)) {
        // k p <= q p, so one checked product bounds every step
        (Ok(p64), Ok(q64)) if p64.checked_mul(q64).is_some() => {
            pk.extend((1..=q64).map(|k| BigInt::from((k * p64).div_ceil(q64))));
        }
        _ => {
            let mut kp = BigInt::from(0);
            for _ in 0..count {
                kp += &p;
                pk.push(kp.div_ceil(&q));
            }
        }
    }
    let k0 = pk
        .iter()
        .position(|v| v > &BigInt::one())
        .map(|i| i + 1)
        .expect("p_q = p > 1");
    Ok(PkProfile { p, q, pk, k0 })
}

/// The cabling sequence of the upper tunnel of `K(p, q)`:
/// `[1/(2 p_k0 - 1)], 2 p_(k0+1) - 1, ..., 2 p_(q-1) - 1`.
///
/// No swap is made; `p q < 0` negates every slope.
pub fn upper_sequence(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<CablingSequence> {
    let (p, q) = (p.into(), q.into());
    let params = normalize_params(p.clone(), q.clone(), TunnelKind::Upper)?;
    let profile = pk_profile(p, q)?;
    Ok(semisimple_sequence(
        &profile,
        params.negate_slopes,
        TunnelKind::Upper,
    ))
}

/// The lower tunnel of `K(p, q)`, which is the upper tunnel of `K(q, p)`.
pub fn lower_sequence(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<CablingSequence> {
    let (p, q) = (p.into(), q.into());
    let params = normalize_params(q.clone(), p.clone(), TunnelKind::Upper)?;
    let profile = pk_profile(q, p)?;
    Ok(semisimple_sequence(
        &profile,
        params.negate_slopes,
        TunnelKind::Lower,
    ))
}

pub(crate) fn semisimple_sequence(
    profile: &PkProfile,
    negate: bool,
    kind: TunnelKind,
) -> CablingSequence {
    let odd = |v: &BigInt| BigInt::from(2) * v - 1;
    let k0 = profile.k0;
    let simple_slope =
        SimpleSlope::reciprocal(odd(&profile.pk[k0 - 1])).expect("denominator is at least 3");
    // p_(k0+1) ..= p_(q-1); the last entry p_q is not a slope.
    let last = profile.pk.len() - 1;
    let slopes = profile.pk[k0.min(last)..last].iter().map(odd).collect();
    let mut seq = CablingSequence {
        tunnel_kind: kind,
        simple_slope,
        slopes,
        binaries: Vec::new(),
        intermediates: Vec::new(),
    };
    if negate {
        seq.negate();
    }
    seq
}
