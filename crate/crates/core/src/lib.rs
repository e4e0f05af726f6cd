//! Growth series of hyperbolic Coxeter groups in exact arithmetic.
//!
//! The crate is `no_std` (it needs `alloc`). IO, file formats and the
//! command-line front end live in the `hypgrowth` crate.
#![no_std]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod polyalg;
pub mod polyhedron;
pub mod coxeter;
pub mod growth3d;
pub mod roots;

pub use polyalg::{IntPoly, PolyError, RatFunc};
