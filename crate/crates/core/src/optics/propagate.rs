//! Angular-spectrum propagation and band-limited resampling.

use super::fft::{fft2d, ifft2d, signed_bin};
use super::field::ComplexField;
use super::OpticsError;
use crate::scalar::Scalar;
use num_complex::Complex;

/// Angular-spectrum transfer function for one FFT bin.
///
/// `fx`/`fy` are spatial frequencies in cycles per meter. Frequencies outside
/// the propagating band (`(lambda*fx)^2 + (lambda*fy)^2 > 1`) are hard-zeroed.
/// Phases are always evaluated in `f64`: at typical heights the argument spans
/// thousands of radians and single-precision range reduction is not accurate
/// enough.
#[inline]
fn transfer_bin(fx: f64, fy: f64, wavelength_m: f64, distance_m: f64) -> Complex<f64> {
    let inv_l2 = 1.0 / (wavelength_m * wavelength_m);
    let arg = inv_l2 - fx * fx - fy * fy;
    if arg < 0.0 {
        Complex::new(0.0, 0.0)
    } else {
        Complex::cis(2.0 * std::f64::consts::PI * distance_m * arg.sqrt())
    }
}

/// Parameters of a combined Fourier-domain operation: propagation over
/// `distance_m` at an illumination tilt, plus a lateral resampling shift.
///
/// The shift convention is `out(x) = in(x + shift)`: a positive shift moves
/// content that sits at `+shift` onto the output origin.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct SpectrumOp {
    pub distance_m: f64,
    pub tilt_rad: (f64, f64),
    pub shift_m: (f64, f64),
}

impl SpectrumOp {
    fn factor(&self, fx: f64, fy: f64, wavelength_m: f64) -> Complex<f64> {
        let h = if self.distance_m == 0.0 && self.tilt_rad == (0.0, 0.0) {
            // Pure resampling: no propagation, no evanescent cutoff.
            Complex::new(1.0, 0.0)
        } else {
            // Off-axis illumination recenters the angular spectrum on the
            // tilted carrier frequency.
            let f0x = self.tilt_rad.0.sin() / wavelength_m;
            let f0y = self.tilt_rad.1.sin() / wavelength_m;
            transfer_bin(fx + f0x, fy + f0y, wavelength_m, self.distance_m)
        };
        if self.shift_m == (0.0, 0.0) {
            h
        } else {
            let ramp = Complex::cis(
                2.0 * std::f64::consts::PI * (fx * self.shift_m.0 + fy * self.shift_m.1),
            );
            h * ramp
        }
    }
}

/// Propagates a field by `distance_m` using the angular spectrum method.
///
/// Positive distances move away from the source plane (towards the sensor in
/// the instrument geometry); negative distances back-propagate. The optional
/// `tilt` compensates off-axis illumination. Propagation by exactly zero with
/// zero tilt returns the input unchanged.
pub fn propagate<T: Scalar>(
    field: &ComplexField<T>,
    distance_m: f64,
    tilt_rad: (f64, f64),
) -> Result<ComplexField<T>, OpticsError> {
    if !distance_m.is_finite() || !tilt_rad.0.is_finite() || !tilt_rad.1.is_finite() {
        return Err(OpticsError::InvalidMetadata);
    }
    if !field.all_finite() {
        return Err(OpticsError::NonFiniteSamples);
    }
    if distance_m == 0.0 && tilt_rad == (0.0, 0.0) {
        return Ok(field.clone());
    }
    let (w, h) = (field.width_px(), field.height_px());
    let mut data = field.samples().to_vec();
    fft2d(&mut data, w, h);
    let op = SpectrumOp {
        distance_m,
        tilt_rad,
        shift_m: (0.0, 0.0),
    };
    apply_spectrum_op(&mut data, w, h, field.pitch_m(), field.wavelength_m(), &op);
    ifft2d(&mut data, w, h);
    ComplexField::new(w, h, field.pitch_m(), field.wavelength_m(), data)
}

pub(crate) fn apply_spectrum_op<T: Scalar>(
    spectrum: &mut [Complex<T>],
    width: usize,
    height: usize,
    pitch_m: f64,
    wavelength_m: f64,
    op: &SpectrumOp,
) {
    let dfx = 1.0 / (width as f64 * pitch_m);
    let dfy = 1.0 / (height as f64 * pitch_m);
    for ky in 0..height {
        let fy = signed_bin(ky, height) as f64 * dfy;
        let row = &mut spectrum[ky * width..(ky + 1) * width];
        for (kx, v) in row.iter_mut().enumerate() {
            let fx = signed_bin(kx, width) as f64 * dfx;
            let f = op.factor(fx, fy, wavelength_m);
            let f_t = Complex::new(T::of(f.re), T::of(f.im));
            *v = *v * f_t;
        }
    }
}

/// Band-limited upsampling by an integer factor per axis via Fourier-domain
/// zero padding. The output pitch is `pitch / factor`; original sample sites
/// keep their values and total energy is preserved.
pub fn upsample<T: Scalar>(
    field: &ComplexField<T>,
    factor_per_axis: usize,
) -> Result<ComplexField<T>, OpticsError> {
    if factor_per_axis < 1 {
        return Err(OpticsError::InvalidFactor);
    }
    if !field.all_finite() {
        return Err(OpticsError::NonFiniteSamples);
    }
    if factor_per_axis == 1 {
        return Ok(field.clone());
    }
    let out = upsample_propagate_shift(field, factor_per_axis, &SpectrumOp::default());
    Ok(out)
}

/// Fused upsample + propagate + shift: one small forward FFT, a zero-padded
/// spectrum with the transfer function applied, and one large inverse FFT.
/// Equivalent to `upsample` followed by `propagate` followed by a band-limited
/// resampling shift.
pub(crate) fn upsample_propagate_shift<T: Scalar>(
    field: &ComplexField<T>,
    factor: usize,
    op: &SpectrumOp,
) -> ComplexField<T> {
    let (w, h) = (field.width_px(), field.height_px());
    let mut small = field.samples().to_vec();
    fft2d(&mut small, w, h);

    let (mw, mh) = (w * factor, h * factor);
    let out_pitch = field.pitch_m() / factor as f64;
    let mut padded = vec![Complex::<T>::default(); mw * mh];
    // Interpolating normalization: original sites keep their values.
    let scale = T::of((factor * factor) as f64);
    let dfx = 1.0 / (w as f64 * field.pitch_m());
    let dfy = 1.0 / (h as f64 * field.pitch_m());
    for ky in 0..h {
        let sy = signed_bin(ky, h);
        let fy = sy as f64 * dfy;
        let dy = sy.rem_euclid(mh as isize) as usize;
        for kx in 0..w {
            let sx = signed_bin(kx, w);
            let fx = sx as f64 * dfx;
            let dx = sx.rem_euclid(mw as isize) as usize;
            let f = op.factor(fx, fy, field.wavelength_m());
            let f_t = Complex::new(T::of(f.re), T::of(f.im)) * scale;
            padded[dy * mw + dx] = small[ky * w + kx] * f_t;
        }
    }
    ifft2d(&mut padded, mw, mh);
    ComplexField::new(mw, mh, out_pitch, field.wavelength_m(), padded)
        .expect("padded field has consistent shape")
}

/// Takes every `factor`-th sample starting at (0, 0); inverse of `upsample`
/// for band-limited inputs.
pub fn decimate<T: Scalar>(field: &ComplexField<T>, factor: usize) -> ComplexField<T> {
    assert!(factor >= 1);
    let (w, h) = (field.width_px(), field.height_px());
    assert!(w % factor == 0 && h % factor == 0);
    let (ow, oh) = (w / factor, h / factor);
    let mut out = Vec::with_capacity(ow * oh);
    for y in 0..oh {
        for x in 0..ow {
            out.push(field.at(x * factor, y * factor));
        }
    }
    ComplexField::new(ow, oh, field.pitch_m() * factor as f64, field.wavelength_m(), out)
        .expect("decimated field has consistent shape")
}
