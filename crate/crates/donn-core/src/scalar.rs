//! Scalar abstraction for the simulation arithmetic.

use num_traits::{Float, FloatConst, NumAssignOps};
use rustfft::FftNum;
use std::fmt::Display;

/// Floating-point scalar the simulator is generic over: `f32` or `f64`.
///
/// `FftNum` brings `FromPrimitive`, `Send`/`Sync` and `'static`, so a
/// `Scalar` can be fed straight to the FFT backend and shared across
/// threads.
pub trait Scalar: Float + FloatConst + FftNum + NumAssignOps + Display {
    /// Lossy conversion from `f64`, used for constants and configuration
    /// values. Exact for `f64`, rounds for `f32`.
    fn from_f64_lossy(value: f64) -> Self {
        Self::from_f64(value).expect("finite f64 converts to any Scalar")
    }

    /// Widening conversion for reporting and serialization.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("Scalar converts to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
