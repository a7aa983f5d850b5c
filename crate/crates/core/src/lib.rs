//! Finite element solver for second order elliptic equations in
//! non-divergence form, based on a primal-dual weak Galerkin
//! discretization with an element-wise eliminable Lagrange multiplier.
//!
//! The discrete problem couples a primal field (a continuous piecewise
//! quadratic together with independent edge gradients) to an element-wise
//! polynomial multiplier through a weak Hessian. A symmetric nonnegative
//! multiplier form makes the dual block invertible, so the multiplier can
//! be condensed element by element, leaving a single symmetric positive
//! definite system in the primal unknowns.
//!
//! Module map:
//! - [`mesh`]: the three study domains, uniform midpoint refinement,
//!   triangulation topology and per-element geometry.
//! - [`polytools`]: polynomial bases on triangles and edges, quadrature,
//!   local L2 projections.
//! - [`weakcalc`]: discrete weak second order partial derivatives and the
//!   weak-space projection.
//! - [`forms`]: element-local matrices for the stabilizer, constraint and
//!   multiplier forms.
//! - [`system`]: global degrees of freedom, assembly, boundary conditions,
//!   Schur reduction and linear solves.
//! - [`problems`]: the three manufactured test problems and the Cordes
//!   ratio check.
//! - [`analysis`]: error norms, convergence rates, condition estimation,
//!   CSV output.
//! - [`cli`]: the refinement-study driver and reference-data comparisons.

pub mod analysis;
pub mod cli;
pub mod forms;
pub mod mesh;
pub mod polytools;
pub mod problems;
pub mod sparse;
pub mod system;
pub mod weakcalc;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("quadrature degree unavailable: {0}")]
    QuadratureDegreeUnavailable(usize),
    #[error("invalid coefficient sample at ({0}, {1})")]
    InvalidCoefficientSample(f64, f64),
    #[error("coefficient sampled on discontinuity at ({0}, {1})")]
    CoefficientOnDiscontinuity(f64, f64),
    #[error("load singularity at quadrature node ({0}, {1})")]
    LoadSingularity(f64, f64),
    #[error("singular point")]
    SingularPoint,
    #[error("zero trace in Cordes ratio")]
    ZeroTrace,
    #[error("Schur path requires invertible C")]
    SchurRequiresC,
    #[error("sparse factorization failed: {0}")]
    Factorization(String),
    #[error("iterative solver did not converge: residual {final_residual:.3e} after {iterations} iterations")]
    NoConvergence {
        iterations: usize,
        final_residual: f64,
        history: Vec<f64>,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
