//! Exact arithmetic: rationals, polynomials, ℚ(w), truncated series.

pub mod laurent;
pub mod linalg;
pub mod poly;
pub mod ratfunc;
pub mod ring;
pub mod series;
pub mod stirling;
pub mod zpoly;

pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use ring::{Field, Rational, Ring};
pub use series::XSeries;
pub use zpoly::{QPoly, ZPoly};
