//! Operator algebra for momentum-space photon wavefunctions.
//!
//! The crate builds the generators of the massless Poincaré representations
//! acting on three-component functions `f(p)`, the helicity operator, the
//! Pryce position operator and the commuting-component operator `Q̂ = U Q U†`
//! obtained by transporting `Q = i∂/∂p` with the spherical polarization
//! frame. Every operator is a first-order differential operator with
//! expression-valued coefficients ([`LinOp`]); identities between operators
//! are decided by evaluating coefficient differences at seeded sample points.
//!
//! Numerical evaluation is generic over the real scalar ([`Real`]); the
//! verification harness runs in `f64`, see the aliases below.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod expr;
pub mod reps;
pub mod sampling;
pub mod verify;

use num_traits::{Float, FromPrimitive};

pub use algebra::{LinOp, MatFn, WaveFn, Witness, ZeroTest};
pub use expr::{Exact, Expr, Radical};
pub use reps::{RepKind, Representation};
pub use sampling::SamplePlan;

/// Real scalar used for numerical evaluation of expressions.
pub trait Real: Float + FromPrimitive + std::fmt::Debug + Send + Sync + 'static {}

impl<T> Real for T where T: Float + FromPrimitive + std::fmt::Debug + Send + Sync + 'static {}

pub type Complex64 = num_complex::Complex<f64>;
pub type Complex32 = num_complex::Complex<f32>;
pub type Point64 = [f64; 3];
pub type Point32 = [f32; 3];
pub type Witness64 = Witness<f64>;
pub type ZeroTest64 = ZeroTest<f64>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("singular point {point:?}: {}", match radical {
        Some(r) => format!("division by vanishing radical {r}"),
        None => "division by zero".to_string(),
    })]
    Singular {
        radical: Option<Radical>,
        point: [f64; 3],
    },
    #[error("composition of two differential operators is second order")]
    SecondOrder,
    #[error("composition would produce a matrix-valued derivative coefficient")]
    MatrixDerivative,
    #[error("matrix function is not unitary at {point:?} (deviation {deviation:e})")]
    NotUnitary { point: [f64; 3], deviation: f64 },
    #[error("twist matrix is not an involution at {point:?} (deviation {deviation:e})")]
    NotInvolutive { point: [f64; 3], deviation: f64 },
    #[error("wavefunction component {component} carries no damping factor")]
    Undamped { component: usize },
    #[error("unknown name `{name}`; known names: {known}")]
    UnknownName { name: String, known: String },
    #[error("invalid sample plan: {0}")]
    InvalidPlan(String),
}
