//! Complex optical fields on regular sampling grids.

use super::OpticsError;
use crate::scalar::Scalar;
use num_complex::Complex;

/// A 2D complex optical field with physical sampling metadata.
///
/// Samples are row-major with the origin at the top-left corner. The pitch is
/// the sampling interval of the grid the field lives on; for fields extracted
/// from a Bayer mosaic this differs per color channel.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField<T: Scalar> {
    samples: Vec<Complex<T>>,
    width_px: usize,
    height_px: usize,
    pitch_m: f64,
    wavelength_m: f64,
}

impl<T: Scalar> ComplexField<T> {
    pub fn new(
        width_px: usize,
        height_px: usize,
        pitch_m: f64,
        wavelength_m: f64,
        samples: Vec<Complex<T>>,
    ) -> Result<Self, OpticsError> {
        if width_px == 0 || height_px == 0 || samples.len() != width_px * height_px {
            return Err(OpticsError::ShapeMismatch {
                len: samples.len(),
                width: width_px,
                height: height_px,
            });
        }
        if !(pitch_m.is_finite() && pitch_m > 0.0 && wavelength_m.is_finite() && wavelength_m > 0.0)
        {
            return Err(OpticsError::InvalidMetadata);
        }
        Ok(Self {
            samples,
            width_px,
            height_px,
            pitch_m,
            wavelength_m,
        })
    }

    /// Uniform field of the given complex amplitude.
    pub fn uniform(
        width_px: usize,
        height_px: usize,
        pitch_m: f64,
        wavelength_m: f64,
        amplitude: Complex<T>,
    ) -> Result<Self, OpticsError> {
        Self::new(
            width_px,
            height_px,
            pitch_m,
            wavelength_m,
            vec![amplitude; width_px * height_px],
        )
    }

    /// Field with the given real amplitudes and zero phase.
    pub fn from_amplitude(
        width_px: usize,
        height_px: usize,
        pitch_m: f64,
        wavelength_m: f64,
        amplitude: &[T],
    ) -> Result<Self, OpticsError> {
        let samples = amplitude
            .iter()
            .map(|&a| Complex::new(a, T::zero()))
            .collect();
        Self::new(width_px, height_px, pitch_m, wavelength_m, samples)
    }

    pub fn width_px(&self) -> usize {
        self.width_px
    }

    pub fn height_px(&self) -> usize {
        self.height_px
    }

    pub fn pitch_m(&self) -> f64 {
        self.pitch_m
    }

    pub fn wavelength_m(&self) -> f64 {
        self.wavelength_m
    }

    pub fn samples(&self) -> &[Complex<T>] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [Complex<T>] {
        &mut self.samples
    }

    pub fn into_samples(self) -> Vec<Complex<T>> {
        self.samples
    }

    #[inline]
    pub fn at(&self, x: usize, y: usize) -> Complex<T> {
        self.samples[y * self.width_px + x]
    }

    /// Replaces the sampling pitch (used by resampling operations).
    pub(crate) fn with_grid(mut self, pitch_m: f64) -> Self {
        self.pitch_m = pitch_m;
        self
    }

    /// Total energy `pitch^2 * sum(|s|^2)`, accumulated in `f64`.
    pub fn energy(&self) -> f64 {
        let sum: f64 = self
            .samples
            .iter()
            .map(|s| s.norm_sqr().to_f64_lossy())
            .sum();
        self.pitch_m * self.pitch_m * sum
    }

    pub fn all_finite(&self) -> bool {
        self.samples.iter().all(|s| s.re.is_finite() && s.im.is_finite())
    }
}

/// Three-channel illumination description, ordered red, green, blue.
#[derive(Debug, Clone, PartialEq)]
pub struct IlluminationSpec {
    /// Center wavelengths in meters, strictly decreasing from red to blue.
    pub wavelengths_m: [f64; 3],
    /// Per-channel bandwidth in meters (metadata only).
    pub bandwidth_m: [f64; 3],
    /// Per-channel illumination tilt `(tilt_x, tilt_y)` in radians.
    pub incidence_tilt_rad: [(f64, f64); 3],
}

impl IlluminationSpec {
    pub fn new(
        wavelengths_m: [f64; 3],
        bandwidth_m: [f64; 3],
        incidence_tilt_rad: [(f64, f64); 3],
    ) -> Result<Self, OpticsError> {
        let ok = wavelengths_m.iter().all(|w| w.is_finite() && *w > 0.0)
            && wavelengths_m[0] > wavelengths_m[1]
            && wavelengths_m[1] > wavelengths_m[2];
        if !ok {
            return Err(OpticsError::InvalidIllumination);
        }
        Ok(Self {
            wavelengths_m,
            bandwidth_m,
            incidence_tilt_rad,
        })
    }

    pub fn red_m(&self) -> f64 {
        self.wavelengths_m[0]
    }

    pub fn green_m(&self) -> f64 {
        self.wavelengths_m[1]
    }

    pub fn blue_m(&self) -> f64 {
        self.wavelengths_m[2]
    }
}

impl Default for IlluminationSpec {
    /// RGB LED through triple-bandpass filters: 630 / 530 / 450 nm centers,
    /// <10 nm bandwidth, normal incidence.
    fn default() -> Self {
        Self {
            wavelengths_m: [630e-9, 530e-9, 450e-9],
            bandwidth_m: [10e-9; 3],
            incidence_tilt_rad: [(0.0, 0.0); 3],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_shape_mismatch() {
        let r = ComplexField::<f64>::new(4, 4, 1e-6, 500e-9, vec![Complex::default(); 15]);
        assert!(matches!(r, Err(OpticsError::ShapeMismatch { .. })));
    }

    #[test]
    fn rejects_bad_metadata() {
        let s = vec![Complex::<f64>::default(); 4];
        assert!(ComplexField::new(2, 2, 0.0, 500e-9, s.clone()).is_err());
        assert!(ComplexField::new(2, 2, 1e-6, -1.0, s.clone()).is_err());
        assert!(ComplexField::new(2, 2, f64::NAN, 500e-9, s).is_err());
    }

    #[test]
    fn energy_of_uniform_field() {
        let f = ComplexField::<f64>::uniform(8, 8, 2e-6, 500e-9, Complex::new(1.0, 0.0)).unwrap();
        let expect = 64.0 * 4e-12;
        assert!((f.energy() - expect).abs() < 1e-20);
    }

    #[test]
    fn illumination_requires_decreasing_wavelengths() {
        assert!(IlluminationSpec::new([450e-9, 530e-9, 630e-9], [10e-9; 3], [(0.0, 0.0); 3])
            .is_err());
        assert!(IlluminationSpec::default().wavelengths_m[0] > 600e-9);
    }
}
