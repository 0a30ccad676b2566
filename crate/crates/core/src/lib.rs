//! Cabling-sequence invariants of the tunnels of torus knots.
//!
//! Every tunnel of a tunnel number one knot is obtained from the tunnel of
//! the trivial knot by a unique sequence of cabling constructions. Each
//! construction carries a slope, and all but the first carry a binary
//! invariant. A nontrivial torus knot `K(p, q)` has a middle, an upper and a
//! lower tunnel; this crate computes their sequences with exact integer
//! arithmetic:
//!
//! ```
//! use torus_tunnels::{middle_sequence, upper_sequence};
//!
//! let middle = middle_sequence(41, 29).unwrap();
//! assert_eq!(middle.to_string(), "[1/3], 5, 17, 29, 99, 169, 577");
//!
//! let upper = upper_sequence(18, 7).unwrap();
//! assert_eq!(upper.to_string(), "[1/5], 11, 15, 21, 25, 31");
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod classify;
pub mod error;
pub mod middle;
pub mod semisimple;
pub mod word;

pub use arith::{
    cf_expand, cf_value, gcd, mod_inverse, normalize_params, ContinuedFraction, Rational,
    SimpleSlope, TorusKnotParams, TunnelKind,
};
pub use classify::{
    case1_closed_form, case2_closed_forms, case_of, classify, classify_sequences,
    is_middle_regular, Case, SlopeList, TunnelClassification,
};
pub use error::{Error, Result};
pub use middle::{middle_sequence, rho_invariant, rho_is_one, CablingSequence};
pub use num_bigint::BigInt;
pub use semisimple::{lower_sequence, pk_profile, upper_sequence, PkProfile};
pub use word::{
    generator_word, intermediate_of_matrix, partial_products, slope_of_matrix, Generator,
    GeneratorWord, Mat2,
};

/// Computes the cabling sequence of the given tunnel of `K(p, q)`.
pub fn tunnel_sequence(
    kind: TunnelKind,
    p: impl Into<BigInt>,
    q: impl Into<BigInt>,
) -> Result<CablingSequence> {
    match kind {
        TunnelKind::Middle => middle_sequence(p, q),
        TunnelKind::Upper => upper_sequence(p, q),
        TunnelKind::Lower => lower_sequence(p, q),
    }
}
