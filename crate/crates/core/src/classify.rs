//! How many distinct tunnels a torus knot has.
//!
//! Tunnels are compared by their cabling sequences, which determine a tunnel
//! uniquely. The result is cross-checked against the closed-form case
//! analysis:
//!
//! * Case I, `|p - q| = 1`: all three tunnels coincide.
//! * Case II, otherwise `p = ±1 mod q` or `q = ±1 mod p`: with `p > q`, the
//!   middle and upper tunnels coincide and the lower one differs.
//! * Case III, everything else: three distinct tunnels.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::{normalize_params, SimpleSlope, TorusKnotParams, TunnelKind};
use crate::error::{Error, Result};
use crate::middle::{middle_sequence, CablingSequence};
use crate::semisimple::{lower_sequence, upper_sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    I,
    II,
    III,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
        })
    }
}

/// The tunnels of `K(p, q)` grouped by equivalence, for canonical `p > q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TunnelClassification {
    pub case_label: Case,
    pub distinct_count: usize,
    /// Classes in order of first appearance in `[middle, upper, lower]`.
    pub coincidences: Vec<Vec<TunnelKind>>,
}

impl fmt::Display for TunnelClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let noun = if self.distinct_count == 1 {
            "tunnel"
        } else {
            "tunnels"
        };
        write!(
            f,
            "case {}: {} distinct {noun}",
            self.case_label, self.distinct_count
        )?;
        if self.distinct_count == 3 {
            return Ok(());
        }
        f.write_str(" (")?;
        for (i, class) in self.coincidences.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            if class.len() == 1 {
                write!(f, "{} distinct", class[0])?;
            } else {
                for (j, kind) in class.iter().enumerate() {
                    if j > 0 {
                        f.write_str(" = ")?;
                    }
                    write!(f, "{kind}")?;
                }
            }
        }
        f.write_str(")")
    }
}

fn canonical(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<TorusKnotParams> {
    normalize_params(p, q, TunnelKind::Middle)
}

fn case_of_canonical(p: &BigInt, q: &BigInt) -> Case {
    let one = BigInt::one();
    if p - q == one {
        return Case::I;
    }
    let near_unit = |a: &BigInt, m: &BigInt| {
        let r = a.mod_floor(m);
        r == one || r == m - &one
    };
    if near_unit(p, q) || near_unit(q, p) {
        Case::II
    } else {
        Case::III
    }
}

/// Which of the three cases `K(p, q)` falls in. Signs and order are ignored.
pub fn case_of(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Case> {
    let params = canonical(p, q)?;
    Ok(case_of_canonical(&params.canonical_p, &params.canonical_q))
}

/// Partitions `seqs` (ordered middle, upper, lower) by equal invariants.
pub fn partition_by_invariants(seqs: &[&CablingSequence]) -> Vec<Vec<TunnelKind>> {
    let mut classes: Vec<(usize, Vec<TunnelKind>)> = Vec::new();
    for (i, seq) in seqs.iter().enumerate() {
        match classes
            .iter_mut()
            .find(|(rep, _)| seqs[*rep].same_invariants(seq))
        {
            Some((_, members)) => members.push(seq.tunnel_kind),
            None => classes.push((i, vec![seq.tunnel_kind])),
        }
    }
    classes.into_iter().map(|(_, members)| members).collect()
}

/// Classifies already-computed sequences of the canonical pair `p > q`.
pub fn classify_sequences(
    p: &BigInt,
    q: &BigInt,
    middle: &CablingSequence,
    upper: &CablingSequence,
    lower: &CablingSequence,
) -> TunnelClassification {
    let coincidences = partition_by_invariants(&[middle, upper, lower]);
    let case_label = case_of_canonical(p, q);
    debug_assert_eq!(
        coincidences.len(),
        match case_label {
            Case::I => 1,
            Case::II => 2,
            Case::III => 3,
        }
    );
    TunnelClassification {
        case_label,
        distinct_count: coincidences.len(),
        coincidences,
    }
}

/// Computes all three cabling sequences of `K(p, q)` in the orientation
/// `p > q` and groups the tunnels that coincide.
pub fn classify(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<TunnelClassification> {
    let params = canonical(p, q)?;
    let (p, q) = (&params.canonical_p, &params.canonical_q);
    let middle = middle_sequence(p.clone(), q.clone())?;
    let upper = upper_sequence(p.clone(), q.clone())?;
    let lower = lower_sequence(p.clone(), q.clone())?;
    Ok(classify_sequences(p, q, &middle, &upper, &lower))
}

/// Whether some binary invariant of the middle tunnel is 1.
pub fn is_middle_regular(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<bool> {
    Ok(middle_sequence(p, q)?.has_nonzero_binary())
}

/// A slope list without binaries: simple slope followed by integer slopes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeList {
    pub simple_slope: SimpleSlope,
    pub slopes: Vec<BigInt>,
}

impl SlopeList {
    pub fn matches(&self, seq: &CablingSequence) -> bool {
        self.simple_slope == seq.simple_slope && self.slopes == seq.slopes
    }
}

fn slope_list(den: BigInt, slopes: Vec<BigInt>) -> SlopeList {
    SlopeList {
        simple_slope: SimpleSlope::reciprocal(den).expect("positive denominator"),
        slopes,
    }
}

/// `[1/3], 3 (first_reps times), 5, 7, ..., 2q-3 (m times each), 2q-1 (last_reps times)`
fn lower_form(
    q: &BigInt,
    m: &BigInt,
    first_reps: &BigInt,
    last_reps: &BigInt,
) -> Result<Vec<BigInt>> {
    let to_usize =
        |v: &BigInt| usize::try_from(v).map_err(|_| Error::OutOfRange("repeat count too large"));
    let top = BigInt::from(2) * q - 1;
    let mut slopes = Vec::new();
    let mut value = BigInt::from(3);
    while value <= top {
        let reps = if value == BigInt::from(3) {
            first_reps
        } else if value == top {
            last_reps
        } else {
            m
        };
        slopes.extend(core::iter::repeat_n(value.clone(), to_usize(reps)?));
        value += 2;
    }
    Ok(slopes)
}

/// Closed-form `(upper, lower)` slope lists of a Case II knot, canonical
/// `p > q`.
///
/// For `p = m q + 1` the upper (= middle) form is `[1/(2m+1)], 4m+1, 6m+1,
/// ..., 2m(q-1)+1`; the lower form repeats every odd value `3 ..= 2q-1` `m`
/// times, except `3` which appears `m - 1` times. For `p = m q - 1` the upper
/// form is `[1/(2m-1)], 4m-1, ..., 2m(q-1)-1` and in the lower form both `3`
/// and `2q-1` appear `m - 1` times.
pub fn case2_closed_forms(
    p: impl Into<BigInt>,
    q: impl Into<BigInt>,
) -> Result<(SlopeList, SlopeList)> {
    let params = canonical(p, q)?;
    let (p, q) = (params.canonical_p, params.canonical_q);
    if case_of_canonical(&p, &q) != Case::II {
        return Err(Error::NotCaseTwo { p, q });
    }
    let one = BigInt::one();
    let two = BigInt::from(2);
    let q_count = usize::try_from(&q).map_err(|_| Error::OutOfRange("q too large"))?;
    // q = 2 fits both branches; only p = m q + 1 describes it correctly.
    let (upper, lower) = if p.mod_floor(&q) == one {
        let m = (&p - &one) / &q;
        let upper = (2..q_count)
            .map(|j| &two * &m * BigInt::from(j) + &one)
            .collect();
        let lower = lower_form(&q, &m, &(&m - &one), &m)?;
        (slope_list(&two * &m + &one, upper), lower)
    } else {
        let m = (&p + &one) / &q;
        let upper = (2..q_count)
            .map(|j| &two * &m * BigInt::from(j) - &one)
            .collect();
        let lower = lower_form(&q, &m, &(&m - &one), &(&m - &one))?;
        (slope_list(&two * &m - &one, upper), lower)
    };
    Ok((upper, slope_list(BigInt::from(3), lower)))
}

/// Closed-form slope list `[1/3], 5, 7, ..., 2n-1` of `K(n+1, n)`, shared by
/// all three tunnels.
pub fn case1_closed_form(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<SlopeList> {
    let params = canonical(p, q)?;
    let (p, q) = (params.canonical_p, params.canonical_q);
    if case_of_canonical(&p, &q) != Case::I {
        return Err(Error::NotCaseOne { p, q });
    }
    let top = BigInt::from(2) * &q - 1;
    let mut slopes = Vec::new();
    let mut value = BigInt::from(5);
    while value <= top {
        slopes.push(value.clone());
        value += 2;
    }
    Ok(slope_list(BigInt::from(3), slopes))
}
