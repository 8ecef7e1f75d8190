//! Exact computations for pointed algebraic curves.
//!
//! * [`series`], [`poly`], [`linalg`]: truncated Laurent series, weighted
//!   multivariate polynomials with reduction, and rational linear algebra.
//! * [`normalform`]: the universal normal-form recursion for Laurent
//!   expansions at a point with non-special `(g-1)`-multiple.
//! * [`curve`]: rational curves with singularities given by local algebras,
//!   divisor cohomology, canonical local parameters and the curve zoo.
//! * [`genus2`]: the universal genus-2 relations, their Gröbner check, and
//!   fitting the relation parameters to a concrete curve.

pub mod curve;
pub mod error;
pub mod genus2;
pub mod linalg;
pub mod normalform;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod series;
pub mod suites;

pub use error::{CurveError, Genus2Error, NormalFormError, ParseError, PolyError, SeriesError};
pub use linalg::Matrix;
pub use poly::{MonomialOrder, MultiPoly, Variable};
pub use rational::Rational;
pub use ring::Ring;
pub use series::{LaurentSeries, ParamChange, EXACT};
