//! Complex wavefronts, 2-D FFTs, and free-space propagation between planes.
//!
//! Propagation over a gap `z` is carried out spectrally: transform the field,
//! multiply by a transfer function `H`, transform back. In the default
//! analytic mode `H` is the closed-form frequency response of the paraxial
//! (Fresnel) impulse response,
//!
//! ```text
//! H(fx, fy) = exp(i*k*z) * exp(-i*pi*lambda*z*(fx^2 + fy^2)),   k = 2*pi/lambda
//! ```
//!
//! evaluated on the unshifted DFT frequency grid `f = m / (n * pitch)` with
//! signed indices `m in {0..n/2-1, -n/2..-1}` for even `n` (symmetric for odd
//! `n`). Every entry has unit modulus, so propagation conserves total power
//! exactly. An alternative sampled-impulse mode builds `H` by transforming
//! the spatially sampled kernel instead; it aliases away from well-sampled
//! regimes and exists as a small-grid cross-check of the analytic form.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use ndarray::{Array2, Zip};
use num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// An `n x n` sample grid of a monochromatic scalar wavefront.
///
/// `pitch` is the physical sample spacing in meters; `wavelength` the source
/// wavelength in meters. Values are dimensionless complex amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexField<T: Scalar> {
    values: Array2<Complex<T>>,
    pitch: T,
    wavelength: T,
}

impl<T: Scalar> ComplexField<T> {
    /// Validates the grid (square, at least 2x2, all finite) and the
    /// physical constants (positive, finite).
    pub fn new(values: Array2<Complex<T>>, pitch: T, wavelength: T) -> Result<Self> {
        let (rows, cols) = values.dim();
        if rows != cols {
            return Err(Error::NonSquareGrid { rows, cols });
        }
        if rows < 2 {
            return Err(Error::GridTooSmall(rows));
        }
        check_positive("pitch", pitch)?;
        check_positive("wavelength", wavelength)?;
        if !all_finite(&values) {
            return Err(Error::NonFinite("field values"));
        }
        Ok(Self {
            values,
            pitch,
            wavelength,
        })
    }

    /// Internal constructor for values produced by the simulator itself,
    /// where the invariants hold by construction.
    pub(crate) fn from_parts(values: Array2<Complex<T>>, pitch: T, wavelength: T) -> Self {
        Self {
            values,
            pitch,
            wavelength,
        }
    }

    pub fn n(&self) -> usize {
        self.values.nrows()
    }

    pub fn values(&self) -> &Array2<Complex<T>> {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut Array2<Complex<T>> {
        &mut self.values
    }

    pub fn into_values(self) -> Array2<Complex<T>> {
        self.values
    }

    pub fn pitch(&self) -> T {
        self.pitch
    }

    pub fn wavelength(&self) -> T {
        self.wavelength
    }

    /// Sum of `|value|^2` over the grid.
    pub fn total_power(&self) -> T {
        self.values
            .iter()
            .fold(T::zero(), |acc, v| acc + v.norm_sqr())
    }
}

/// How the transfer function values were produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransferMode {
    /// Closed-form Fresnel frequency response; unit modulus everywhere.
    AnalyticFresnel,
    /// FFT of the spatially sampled impulse response. Small-grid oracle
    /// only; requires `distance > 0`.
    SampledImpulse,
}

/// Frequency-domain multiplier implementing propagation over one gap.
#[derive(Clone, Debug)]
pub struct TransferFunction<T: Scalar> {
    values: Array2<Complex<T>>,
    distance: T,
    wavelength: T,
    mode: TransferMode,
}

impl<T: Scalar> TransferFunction<T> {
    pub fn n(&self) -> usize {
        self.values.nrows()
    }

    pub fn values(&self) -> &Array2<Complex<T>> {
        &self.values
    }

    pub fn distance(&self) -> T {
        self.distance
    }

    pub fn wavelength(&self) -> T {
        self.wavelength
    }

    pub fn mode(&self) -> TransferMode {
        self.mode
    }

    /// Elementwise conjugate of the multiplier, used by the propagation
    /// adjoint. Conjugating the same instance used forward keeps the
    /// transpose exact in either mode.
    pub fn conjugated_values(&self) -> Array2<Complex<T>> {
        self.values.mapv(|v| v.conj())
    }
}

/// Reusable 1-D FFT plans for an `n x n` grid.
///
/// The spec-level entry points [`fft2`]/[`ifft2`] plan on every call; the
/// training loops build one of these per run and thread it through.
pub struct Fft2Plan<T: Scalar> {
    n: usize,
    forward: Arc<dyn Fft<T>>,
    inverse: Arc<dyn Fft<T>>,
}

impl<T: Scalar> Fft2Plan<T> {
    pub fn new(n: usize) -> Self {
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(n);
        let inverse = planner.plan_fft_inverse(n);
        Self {
            n,
            forward,
            inverse,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row FFTs, transpose, row FFTs, transpose back.
    fn pass(&self, values: &mut Array2<Complex<T>>, fft: &Arc<dyn Fft<T>>) {
        debug_assert_eq!(values.nrows(), self.n);
        let mut scratch = vec![Complex::new(T::zero(), T::zero()); fft.get_inplace_scratch_len()];
        let slice = values
            .as_slice_mut()
            .expect("fields are stored in standard layout");
        fft.process_with_scratch(slice, &mut scratch);

        let mut t = values.t().to_owned();
        let tslice = t.as_slice_mut().expect("owned copy is standard layout");
        fft.process_with_scratch(tslice, &mut scratch);

        values.assign(&t.t());
    }

    /// Unnormalized forward 2-D DFT, DC at index `[0, 0]`.
    pub fn forward_inplace(&self, values: &mut Array2<Complex<T>>) {
        self.pass(values, &self.forward);
    }

    /// Inverse 2-D DFT including the `1/n^2` normalization.
    pub fn inverse_inplace(&self, values: &mut Array2<Complex<T>>) {
        self.pass(values, &self.inverse);
        let scale = T::one() / T::from_usize(self.n * self.n).expect("grid size fits scalar");
        values.mapv_inplace(|v| v * scale);
    }
}

/// Unnormalized forward 2-D DFT of the field, DC first.
///
/// `ifft2(fft2(x))` recovers `x`; the `1/n^2` scaling lives on the inverse.
pub fn fft2<T: Scalar>(field: &ComplexField<T>) -> Result<ComplexField<T>> {
    if !all_finite(field.values()) {
        return Err(Error::NonFinite("fft2 input"));
    }
    let mut values = field.values.clone();
    Fft2Plan::new(field.n()).forward_inplace(&mut values);
    Ok(ComplexField::from_parts(
        values,
        field.pitch,
        field.wavelength,
    ))
}

/// Inverse 2-D DFT with `1/n^2` scaling.
pub fn ifft2<T: Scalar>(field: &ComplexField<T>) -> Result<ComplexField<T>> {
    if !all_finite(field.values()) {
        return Err(Error::NonFinite("ifft2 input"));
    }
    let mut values = field.values.clone();
    Fft2Plan::new(field.n()).inverse_inplace(&mut values);
    Ok(ComplexField::from_parts(
        values,
        field.pitch,
        field.wavelength,
    ))
}

/// Signed DFT index: `0..=n/2-1` then `-n/2..=-1` for even `n`, symmetric
/// for odd `n`.
fn signed_index(j: usize, n: usize) -> isize {
    if j < n.div_ceil(2) {
        j as isize
    } else {
        j as isize - n as isize
    }
}

/// Builds the transfer function for one free-space gap.
pub fn make_transfer_function<T: Scalar>(
    n: usize,
    pitch: T,
    wavelength: T,
    distance: T,
    mode: TransferMode,
) -> Result<TransferFunction<T>> {
    if n < 2 {
        return Err(Error::GridTooSmall(n));
    }
    check_positive("pitch", pitch)?;
    check_positive("wavelength", wavelength)?;
    if !(distance >= T::zero() && distance.is_finite()) {
        return Err(Error::invalid_parameter(
            "distance",
            "must be finite and non-negative",
        ));
    }

    let values = match mode {
        TransferMode::AnalyticFresnel => analytic_values(n, pitch, wavelength, distance),
        TransferMode::SampledImpulse => {
            if distance <= T::zero() {
                return Err(Error::invalid_parameter(
                    "distance",
                    "sampled-impulse mode requires a strictly positive distance",
                ));
            }
            sampled_values(n, pitch, wavelength, distance)
        }
    };

    Ok(TransferFunction {
        values,
        distance,
        wavelength,
        mode,
    })
}

fn analytic_values<T: Scalar>(n: usize, pitch: T, wavelength: T, distance: T) -> Array2<Complex<T>> {
    let two_pi = T::TAU();
    let carrier = two_pi / wavelength * distance;
    let freq_step = T::one() / (T::from_usize(n).unwrap() * pitch);
    let quad_scale = -T::PI() * wavelength * distance * freq_step * freq_step;

    Array2::from_shape_fn((n, n), |(j, k)| {
        let mj = T::from_isize(signed_index(j, n)).unwrap();
        let mk = T::from_isize(signed_index(k, n)).unwrap();
        Complex::from_polar(T::one(), carrier + quad_scale * (mj * mj + mk * mk))
    })
}

/// FFT of the Fresnel impulse response sampled on the grid centered at the
/// origin (stored in wraparound order) and weighted by `pitch^2` so the sum
/// approximates the continuous transform.
fn sampled_values<T: Scalar>(n: usize, pitch: T, wavelength: T, distance: T) -> Array2<Complex<T>> {
    let wavenumber = T::TAU() / wavelength;
    // 1/(i*lambda*z) = exp(-i*pi/2) / (lambda*z)
    let amplitude = pitch * pitch / (wavelength * distance);
    let base_phase = wavenumber * distance - T::FRAC_PI_2();
    let curvature = wavenumber / (T::from_f64_lossy(2.0) * distance);

    let mut h = Array2::from_shape_fn((n, n), |(j, k)| {
        let x = T::from_isize(signed_index(j, n)).unwrap() * pitch;
        let y = T::from_isize(signed_index(k, n)).unwrap() * pitch;
        Complex::from_polar(amplitude, base_phase + curvature * (x * x + y * y))
    });
    Fft2Plan::new(n).forward_inplace(&mut h);
    h
}

/// Propagates a field through one gap: `ifft2(fft2(field) * tf)`.
pub fn propagate<T: Scalar>(
    field: &ComplexField<T>,
    tf: &TransferFunction<T>,
) -> Result<ComplexField<T>> {
    propagate_with(field, tf, &Fft2Plan::new(field.n()))
}

/// Plan-reusing variant of [`propagate`].
pub fn propagate_with<T: Scalar>(
    field: &ComplexField<T>,
    tf: &TransferFunction<T>,
    plan: &Fft2Plan<T>,
) -> Result<ComplexField<T>> {
    if field.n() != tf.n() {
        return Err(Error::ShapeMismatch {
            context: "propagate",
            expected: field.n(),
            actual: tf.n(),
        });
    }
    if field.wavelength() != tf.wavelength() {
        return Err(Error::WavelengthMismatch);
    }
    let mut values = field.values.clone();
    apply_transfer(&mut values, tf.values(), plan);
    Ok(ComplexField::from_parts(
        values,
        field.pitch,
        field.wavelength,
    ))
}

/// In-place spectral multiply: `values <- ifft2(fft2(values) * tf_values)`.
///
/// Shared by the forward pass and (with conjugated values) its adjoint.
pub(crate) fn apply_transfer<T: Scalar>(
    values: &mut Array2<Complex<T>>,
    tf_values: &Array2<Complex<T>>,
    plan: &Fft2Plan<T>,
) {
    plan.forward_inplace(values);
    Zip::from(&mut *values)
        .and(tf_values)
        .for_each(|v, &h| *v *= h);
    plan.inverse_inplace(values);
}

pub(crate) fn all_finite<T: Scalar>(values: &Array2<Complex<T>>) -> bool {
    values.iter().all(|v| v.re.is_finite() && v.im.is_finite())
}

fn check_positive<T: Scalar>(name: &'static str, value: T) -> Result<()> {
    if value > T::zero() && value.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid_parameter(
            name,
            "must be finite and strictly positive",
        ))
    }
}
