//! Exact scalars, polynomials and root isolation.

pub mod algebraic;
pub mod complex;
pub mod fixed;
pub mod interval;
pub mod poly;
pub mod sturm;

pub use algebraic::{AlgebraicNumber, HalfPlane, Root};
pub use complex::{complex_pair, ComplexEnclosure};
pub use interval::Enclosure;
pub use poly::MonicIntPoly;
pub use sturm::{isolate_real_roots, IsolationList};
