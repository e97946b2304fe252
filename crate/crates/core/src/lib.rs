//! Ruin probabilities for the classical compound Poisson (Cramér–Lundberg)
//! risk model with heavy-tailed claims.
//!
//! The surplus process earns premium at unit rate and pays i.i.d. claims at
//! Poisson epochs; `psi(u)` is the probability that the surplus ever drops
//! below zero from initial capital `u`. The integrated tail of the claim
//! distribution is approximated by an Erlangized scale mixture: a discrete
//! scaling law on a geometric grid, Mellin-convolved with a mean-one
//! Erlang(ξ, ξ) kernel. For that family the Pollaczek–Khinchine series
//! collapses to a Poisson mixture of binomial-coefficient recursions, and
//! every approximation step carries an explicit, certifiable error bound.
//!
//! Modules follow the pipeline:
//!
//! * [`dist`] — claim-size, integrated-tail, moment and Erlang primitives;
//! * [`discretize`] — the discrete scaling law on a geometric grid;
//! * [`kernel`] — the κ-recursions, Poisson mixing and truncation levels;
//! * [`bounds`] — Erlangization, discretization and truncation certificates;
//! * [`oracle`] — independent Monte-Carlo estimator and reference fixtures.

pub mod bounds;
pub mod discretize;
pub mod dist;
pub mod kernel;
pub mod numerics;
pub mod oracle;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter is outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The adaptive quadrature could not meet its tolerance.
    #[error("quadrature did not converge to the requested tolerance")]
    NonconvergentQuadrature,
    /// An operation needs a finite (residual) mean but the scaling law has none.
    #[error("scaling distribution has an infinite mean")]
    InfiniteMean,
    /// Root bracketing for a 1-D solve failed.
    #[error("no root in the supplied bracket")]
    NoRoot,
    /// A reference fixture was queried at an unsupported point.
    #[error("no reference value at u = {0}")]
    UnknownReference(f64),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

fn domain_err(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
