//! Exact arithmetic for finite hypergroups and fusion rings.

pub mod format;
pub mod fusion;
pub mod grading;
pub mod harmonic;
pub mod hypergroup;
pub mod linalg;
pub mod quotient;
pub mod scalar;

pub use format::{load, save, FormatError, HypergroupFile};
pub use fusion::{CatalogObject, FiniteGroup, FusionError, FusionRing};
pub use grading::{DerivedChain, GradingData, GradingError, MaximalSubgroup};
pub use harmonic::{CharacterTable, DualOutcome, HarmonicError, MarkovChain, WalkResult};
pub use hypergroup::{AlgebraElement, Hypergroup, HypergroupError, ValidationReport, Violation};
pub use quotient::{DoubleCosetSpace, Quotient, QuotientError, Subhypergroup};
pub use scalar::{PrecisionFloor, QuadScalar, Rational, Scalar, ScalarError};
