//! Cubature formulas and polynomial approximation on the domains obtained by
//! mapping the fundamental region of a rank one or two Weyl group through its
//! orbit-function coordinates.

pub mod approx;
pub mod cubature;
pub mod error;
pub mod exact;
pub mod export;
pub mod grids;
pub mod liealg;
pub mod orbitfuncs;
pub mod refquad;
pub mod sum;
pub mod tables;
pub mod verify;
pub mod weyl;
pub mod xmap;

pub use error::{Error, Result};
