//! Simulation and verification toolkit for random walks in translation-invariant
//! random environments and for exclusion-type particle systems built on them.
//!
//! The crate is organized around a finite periodic lattice ([`lattice`]), random
//! environments of bond- and site-weights sampled from a handful of laws
//! ([`environment`]), the open-bond cluster structure ([`percolation`]), the
//! continuous-time walk and its exact finite-state semigroup ([`walk`]), the
//! limiting continuum objects (heat and fractional-heat semigroups, [`limits`]),
//! the quenched spatially-averaged L1 convergence statistics ([`convergence`]),
//! and interacting particle systems with their hydrodynamic diagnostics ([`ips`]).
//!
//! All randomness flows through counter-based derived streams ([`seeding`]), so
//! every result is a pure function of `(law, geometry, master seed)` and is
//! reproduced bit-for-bit regardless of thread count.

pub mod convergence;
pub mod discrete;
pub mod environment;
pub mod error;
pub mod exec;
pub mod expm;
pub mod ips;
pub mod lattice;
pub mod limits;
pub mod percolation;
pub mod profile;
pub mod quad;
pub mod seeding;
pub mod walk;

pub use error::{Error, Result};
