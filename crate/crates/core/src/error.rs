use core::fmt;

use num_bigint::BigInt;

/// Everything that can go wrong while computing tunnel invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `(p, q)` has a zero coordinate or a common factor, so it is not a knot.
    NotAKnot { p: BigInt, q: BigInt, gcd: BigInt },
    /// `(p, q)` is coprime but `min(|p|, |q|) <= 1`: the trivial knot.
    Unknot { p: BigInt, q: BigInt },
    /// Two numbers that were required to be coprime were not.
    NotCoprime { a: BigInt, b: BigInt },
    /// A numeric precondition of an operation was violated.
    OutOfRange(&'static str),
    /// A continued fraction with a single term has no generator word.
    SingleTerm,
    /// A Case II closed form was requested for a pair outside Case II.
    NotCaseTwo { p: BigInt, q: BigInt },
    /// A Case I closed form was requested for a pair outside Case I.
    NotCaseOne { p: BigInt, q: BigInt },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAKnot { p, q, gcd } if gcd == &BigInt::from(1) => {
                write!(f, "({p},{q}) is not a knot (zero coordinate)")
            }
            Error::NotAKnot { p, q, gcd } => write!(f, "({p},{q}) is not a knot (gcd = {gcd})"),
            Error::Unknot { p, q } => write!(f, "({p},{q}) is the trivial knot"),
            Error::NotCoprime { a, b } => write!(f, "{a} and {b} are not coprime"),
            Error::OutOfRange(what) => write!(f, "argument out of range: {what}"),
            Error::SingleTerm => f.write_str("continued fraction has a single term"),
            Error::NotCaseTwo { p, q } => write!(f, "({p},{q}) is not in case II"),
            Error::NotCaseOne { p, q } => write!(f, "({p},{q}) is not in case I"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
