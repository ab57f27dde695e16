//! Delta-matroids on the signed ground set `[n, n̄]`: validation, rank functions,
//! minors and twists, the U-polynomial and its activity expansion, enveloping
//! matroids, and Lorentzian checks of independence generating polynomials.
//!
//! Everything is exact. Sets are bit-packed, so the ground size is capped at
//! [`ground::MAX_GROUND`]; exponential enumerations additionally respect the
//! adjustable [`ground::guard_limit`].
//!
//! ```
//! use deltamat::{DeltaMatroid, invariants::{upoly, UMethod}};
//!
//! let dex = DeltaMatroid::from_signed(3, &[&[1, -2, -3], &[-1, 2, -3], &[-1, -2, 3]]).unwrap();
//! let u = upoly(&dex, UMethod::Recursive).unwrap();
//! assert_eq!(u.to_string(), "u^3 + 6*u^2 + 3*u*v + 9*u + v^2 + 4*v + 3");
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod deltamatroid;
pub mod error;
pub mod ground;
pub mod invariants;
pub mod lorentzian;
pub mod lp;
pub mod matroid;
pub mod poly;
pub mod rankfn;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

pub use deltamatroid::{DeltaMatroid, Validation, ValidationMethod};
pub use error::{Error, Result};
pub use ground::{AdmissibleSet, SignedPermutation};
pub use matroid::{Ground, Matroid};
pub use poly::MultiPoly;
pub use rankfn::RankTable;
