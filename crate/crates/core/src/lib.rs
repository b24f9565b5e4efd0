//! Exact construction and checking of rational quadrilaterals: convex
//! quadrilaterals whose four sides, two diagonals and area are all rational.
//!
//! * [`exact`]: the [`Rational`] scalar and square/scale helpers.
//! * [`quad`]: placed solutions, the convexity verifier, sign repair and
//!   canonical records.
//! * [`classical`]: Brahmagupta / Paramesvara formulas and the cyclicity test.
//! * [`generators`]: the base parametrization and the four closed-form families.
//! * [`curve`]: the elliptic curve whose points give further solutions.
//! * [`oracle`]: brute-force lattice enumeration used as ground truth.
//! * [`record`] and [`draw`]: JSON-lines/CSV records and SVG drawings.

pub mod classical;
pub mod curve;
pub mod draw;
mod error;
pub mod exact;
pub mod generators;
pub mod oracle;
pub mod quad;
pub mod record;

pub use error::{Error, Result};
pub use exact::Rational;
pub use generators::ParamSet;
pub use quad::{Family, PlacedSolution, Quadrilateral};
