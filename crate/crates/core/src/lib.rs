//! Exact integral invariants of closed 4-manifolds presented by trisection
//! diagrams: homology, the Čech "Hodge diamond", the intersection form,
//! spin structures and Spin^C bookkeeping.

pub mod cohomology;
pub mod complex;
pub mod diagram;
pub mod error;
pub mod format;
pub mod lattice;
pub mod pairings;
pub mod spin;
pub mod spinc;
pub mod surface;

pub use error::{Error, Result};
