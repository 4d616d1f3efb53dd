//! Exact symbolic kernel for the mirror Heisenberg-Virasoro algebra: the
//! bracket, its biderivations, the compatible graded left-symmetric product
//! and the coefficient equations behind it, together with exhaustive
//! window checks that produce deterministic reports.

pub mod algebra;
pub mod bider;
pub mod coeff;
pub mod converse;
pub mod exec;
pub mod linsolve;
pub mod lsa;
pub mod parse;
pub mod report;
pub mod scalar;
pub mod suite;

pub use algebra::{bracket, grading_degree, AlgebraMode, Basis, Element, Grade};
pub use exec::Parallelism;
pub use lsa::{EpsMode, Lsa};
pub use parse::{parse_element, parse_scalar, ParseError};
pub use report::Report;
pub use scalar::{PolyEps, Rational, Scalar};
pub use suite::{run_suite, CheckName, ConfigError, Format, RunConfig};
