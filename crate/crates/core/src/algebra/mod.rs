//! Exact scalars, graded coefficient rings and truncated power series.

mod coefficient;
pub mod json;
mod ring;
mod scalar;
mod series;
mod specialize;

pub use coefficient::{Coefficient, CoefficientExponents};
pub use ring::CoefficientRing;
pub use scalar::{ParseScalarError, Scalar};
pub use series::{Exponents, Series, SeriesSpace, Variable};
pub use specialize::CoefficientMap;

pub(crate) use ring::subscript;
