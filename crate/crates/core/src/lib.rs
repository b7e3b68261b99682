//! Covariance-matrix simulation of Gaussian entanglement distributed by
//! linear beam-splitter networks.
//!
//! The crate is organised bottom-up:
//!
//! * [`gaussian`] holds covariance-matrix algebra: state construction,
//!   bosonic/quadrature conversion, symplectic spectra, partial transposes
//!   and trace norms.
//! * [`network`] applies beam splitters and runs whole networks.
//! * [`entanglement`] evaluates logarithmic negativity, residual
//!   nonclassicality, `ξ`, contangle and monogamy balances.
//! * [`scenarios`] builds the standard topologies: one splitter, two in
//!   series, and linear chains with ancillas.
//! * [`verify`] is a seeded randomized suite that checks the algebraic
//!   identities and distribution laws these quantities obey.

pub mod entanglement;
pub mod error;
pub mod gaussian;
pub mod network;
pub mod scenarios;
pub mod verify;

pub use error::{Error, Result};
