//! Computable nonstandard analysis over metric spaces.
//!
//! * [`lcf`]: exact truncated Levi-Civita arithmetic (the infinitesimal field).
//! * [`hull`]: nonstandard hulls of registered metric spaces and the
//!   approachability / Heine-Borel harness.
//! * [`cover`]: the metric universal cover of the punctured plane.
//! * [`grid`]: a brute-force shortest-path oracle for the cover metric.

pub mod cover;
pub mod grid;
pub mod hull;
pub mod interval;
pub mod lcf;
pub mod probes;
pub mod rational;
pub mod transcendental;

pub use interval::CoefficientInterval;
pub use lcf::{LcError, LeviCivita, MagnitudeClass, Precision, Truncation, Truth};
pub use rational::Rational;
