//! Residual finiteness computations for the lamplighter groups `Z/p wr Z`.
//!
//! The crate is organised bottom-up:
//!
//! * [`polyring`] exact arithmetic over F_p, F_p[t] and F_p[t, 1/t];
//! * [`lamplighter`] the group itself, its matrix model and word metric;
//! * [`detection`] congruence quotients, divisibility and RF growth;
//! * [`extremal`] LCMs of polynomial families, the hard witness elements
//!   and the almost-periodic polynomial explorer;
//! * [`cli`] the `rfcli` harness: configs, reports and output formats.

pub mod cli;
pub mod detection;
pub mod error;
pub mod extremal;
pub mod lamplighter;
pub mod par;
pub mod polyring;

pub use error::{Error, Result};
pub use par::Exec;
