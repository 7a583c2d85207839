//! Differentiable simulator for free-space diffractive optical neural
//! networks (DONNs) driven by physically rotatable phase masks.
//!
//! A DONN stacks trainable phase masks separated by free-space gaps. Light
//! from a coherent source picks up a per-pixel phase delay at every mask and
//! diffracts between planes; ten detector regions on the output plane turn
//! the arriving intensity into class scores. Because the masks are passive
//! square plates, each one can be pulled out, turned by a quarter, half or
//! three-quarter turn, and re-inserted — which re-encodes the network into a
//! different forward function at zero hardware cost. That is the hook this
//! crate builds on for multi-task learning: one set of weights, one task per
//! rotation pattern.
//!
//! The crate provides
//! * [`wavefield`]: complex wavefronts, 2-D FFTs, Fresnel free-space
//!   propagation between planes;
//! * [`optics`]: phase masks, the rotation algebra, the full multi-layer
//!   forward pass with per-task rotation patterns, and detector readout;
//! * [`grad`]: hand-derived reverse-mode gradients of the loss with respect
//!   to every phase parameter, plus a finite-difference checker;
//! * [`train`]: Adam and the rotation-aware trainers (`RotAgg`, `RotSeq`),
//!   alongside single-task and merged-dataset baselines;
//! * [`data`]: IDX ingestion, image-to-wavefront encoding, and deterministic
//!   synthetic task suites for self-contained runs;
//! * [`metrics`]: accuracy evaluation and hardware cost/power efficiency
//!   ratios.
//!
//! All numerics are generic over the scalar type via [`Scalar`]
//! (`f32`/`f64`); the concrete aliases below pin the double-precision
//! instantiation used by the command-line driver.

pub mod data;
pub mod error;
pub mod grad;
pub mod metrics;
pub mod optics;
pub mod rotate;
pub mod scalar;
pub mod train;
pub mod wavefield;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Number of classes / detector regions served by every task.
pub const CLASS_COUNT: usize = 10;

/// Double-precision wavefront, as used by the CLI.
pub type Field64 = wavefield::ComplexField<f64>;
/// Double-precision transfer function.
pub type Transfer64 = wavefield::TransferFunction<f64>;
/// Double-precision phase mask.
pub type Mask64 = optics::PhaseMask<f64>;
/// Double-precision model state.
pub type Model64 = optics::ModelState<f64>;
/// Double-precision phase gradient.
pub type Gradient64 = grad::PhaseGradient<f64>;
