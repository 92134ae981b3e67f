//! Exact factorization of quadratic trinomials `ax^2 + bx + c` into linear
//! binomials, over the integers, the Gaussian integers, or any coefficient
//! ring implementing the [`Ring`] contract.
//!
//! The pipeline extracts the coefficient GCD first, then splits the middle
//! coefficient into `b1 + b2` with `b1 * b2 = a*c`, recovers the binomials by
//! GCD grouping, and verifies every result by expanding it back. Each run
//! records a [`StepTrace`] that renders as the familiar worked solution,
//! including the 2x2 grouping array.
//!
//! ```
//! use acfactor::{factor_quadratic, Int, IntTrinomial, Verdict};
//!
//! let t = IntTrinomial::new(Int::new(6), Int::new(7), Int::new(-24)).unwrap();
//! let report = factor_quadratic(&t).unwrap();
//! match report.factorization.verdict {
//!     Verdict::Factored { first, second, .. } => {
//!         assert_eq!(format!("({first})({second})"), "(2x-3)(3x+8)");
//!     }
//!     other => panic!("expected a factorization, got {other:?}"),
//! }
//! ```

mod error;
mod factor;
mod gaussian;
mod integer;
mod quadratic;
mod ring;
mod trace;

pub use error::{Error, Result};
pub use factor::{
    factor_quadratic, factor_quadratic_with, find_split, group_factor, FactorOptions, FactorReport,
};
pub use gaussian::{split_rational_prime, GaussInt, PrimeSplit};
pub use integer::Int;
pub use quadratic::{
    content_extract, expand, Factorization, LinearBinomial, SplitPair, Trinomial, Verdict,
};
pub use ring::{PrimeFactorization, Ring, SortKey, Unit, DEFAULT_MAX_AC, MAX_COEFFICIENT};
pub use trace::{render_trace, ArrayTerm, GroupArray, Step, StepTrace};

/// Trinomial over the integers.
pub type IntTrinomial = Trinomial<Int>;
/// Trinomial over the Gaussian integers.
pub type GaussTrinomial = Trinomial<GaussInt>;
/// Factorization over the integers.
pub type IntFactorization = Factorization<Int>;
/// Factorization over the Gaussian integers.
pub type GaussFactorization = Factorization<GaussInt>;
