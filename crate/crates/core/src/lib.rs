//! Triangular fuzzy numbers (TFNs) with closed-form arithmetic, the
//! admissible total order `≤_OT`, componentwise vectors, and averaging
//! aggregation functions.
//!
//! ```
//! use tfn::{Crisp, Tfn};
//! use tfn::order::{classify_sign, SignClass};
//!
//! let a = Tfn::new(1.0, 2.0, 4.0)?;
//! let b = Tfn::new(1.0, 2.0, 3.0)?;
//! let d = a.checked_sub(&b)?;
//! assert_eq!(d, Tfn::new(-2.0, 0.0, 3.0)?);
//! assert_eq!(classify_sign(&d), SignClass::Positive);
//! assert!(b < a);
//! assert_eq!(b.scale(Crisp::new(2.0)?)?, Tfn::new(2.0, 4.0, 6.0)?);
//! # Ok::<(), tfn::TfnError>(())
//! ```
//!
//! The [`oracle`] module rebuilds the arithmetic from α-cuts and from the
//! sup–min definition; it exists for verification and is not used by the
//! rest of the library.

pub mod aggregate;
pub mod cli;
pub mod error;
pub mod format;
pub mod interval;
pub mod number;
pub mod oracle;
pub mod order;
pub mod sample;
pub mod vector;

pub use aggregate::{Aggregator, WeightVector};
pub use error::{Result, TfnError};
pub use interval::Interval;
pub use number::{Crisp, Tfn};
pub use order::{compare_ot, SignClass};
pub use vector::TfnVector;
