//! Exact linearization coefficients for orthogonal polynomial families,
//! computed as weighted sums over inhomogeneous set partitions and checked
//! against an independent recurrence-and-moments route.

pub mod algebra;
pub mod error;
pub mod limits;
pub mod partition;

pub use error::{Error, Result};
pub use limits::Limits;
pub mod cumulant;
pub mod family;
pub mod linearize;
pub mod structural;
pub mod verify;
