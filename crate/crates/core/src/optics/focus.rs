//! Holographic autofocus: Tamura coefficient of the complex gradient,
//! maximized over reconstruction height by a coarse grid plus golden-section
//! refinement.

use super::fft::{fft2d, ifft2d};
use super::field::ComplexField;
use super::propagate::{apply_spectrum_op, SpectrumOp};
use super::OpticsError;
use crate::scalar::Scalar;
use num_complex::Complex;

/// Search interval and resolution for the autofocus sweep.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct FocusSearchConfig {
    pub z_min_m: f64,
    pub z_max_m: f64,
    pub coarse_step_m: f64,
    pub refine_tol_m: f64,
}

impl FocusSearchConfig {
    pub fn validate(&self) -> Result<(), OpticsError> {
        let ok = self.z_min_m.is_finite()
            && self.z_max_m.is_finite()
            && self.z_min_m < self.z_max_m
            && self.coarse_step_m > self.refine_tol_m
            && self.refine_tol_m > 0.0;
        if ok {
            Ok(())
        } else {
            Err(OpticsError::InvalidFocusConfig)
        }
    }
}

impl Default for FocusSearchConfig {
    /// Sweep of the full 0.8 mm channel depth with a small standoff.
    fn default() -> Self {
        Self {
            z_min_m: 50e-6,
            z_max_m: 780e-6,
            coarse_step_m: 25e-6,
            refine_tol_m: 1e-6,
        }
    }
}

/// Edge sparsity of the field's complex gradient: the Tamura coefficient
/// `sqrt(sigma/mu)` of the gradient magnitude. Higher means sharper focus.
/// Returns 0 for zero-gradient (uniform) fields.
pub fn edge_sparsity_score<T: Scalar>(field: &ComplexField<T>) -> Result<f64, OpticsError> {
    if field.width_px() < 2 || field.height_px() < 2 {
        return Err(OpticsError::FieldTooSmall);
    }
    Ok(gradient_tamura(
        field.samples(),
        field.width_px(),
        field.height_px(),
    ))
}

/// Tamura coefficient of `sqrt(|dx|^2 + |dy|^2)` with forward differences,
/// accumulated in f64 regardless of the sample precision.
fn gradient_tamura<T: Scalar>(samples: &[Complex<T>], width: usize, height: usize) -> f64 {
    let n = (width - 1) * (height - 1);
    let mut sum = 0.0_f64;
    let mut sum_sq = 0.0_f64;
    for y in 0..height - 1 {
        let row = y * width;
        for x in 0..width - 1 {
            let c = samples[row + x];
            let dx = samples[row + x + 1] - c;
            let dy = samples[row + width + x] - c;
            let g = (dx.norm_sqr() + dy.norm_sqr()).to_f64_lossy().sqrt();
            sum += g;
            sum_sq += g * g;
        }
    }
    let mean = sum / n as f64;
    if mean <= 0.0 {
        return 0.0;
    }
    let var = (sum_sq / n as f64 - mean * mean).max(0.0);
    (var.sqrt() / mean).sqrt()
}

/// Finds the reconstruction height maximizing the edge-sparsity score of the
/// back-propagated hologram.
///
/// Scores are evaluated on `propagate(hologram, -z)` over a coarse grid on
/// `[z_min, z_max]`, then refined around the best coarse point by
/// golden-section search down to `refine_tol_m`. Featureless inputs whose
/// metric is flat over the whole range are rejected.
pub fn autofocus<T: Scalar>(
    hologram: &ComplexField<T>,
    cfg: &FocusSearchConfig,
) -> Result<f64, OpticsError> {
    cfg.validate()?;
    if !hologram.all_finite() {
        return Err(OpticsError::NonFiniteSamples);
    }
    if hologram.width_px() < 2 || hologram.height_px() < 2 {
        return Err(OpticsError::FieldTooSmall);
    }

    let (w, h) = (hologram.width_px(), hologram.height_px());
    let mut spectrum = hologram.samples().to_vec();
    fft2d(&mut spectrum, w, h);

    let mut zs: Vec<f64> = Vec::new();
    let mut z = cfg.z_min_m;
    while z < cfg.z_max_m - 1e-12 {
        zs.push(z);
        z += cfg.coarse_step_m;
    }
    zs.push(cfg.z_max_m);

    let mut eval = Evaluator {
        spectrum: &spectrum,
        width: w,
        height: h,
        pitch_m: hologram.pitch_m(),
        wavelength_m: hologram.wavelength_m(),
        work: vec![Complex::default(); w * h],
    };

    let scores: Vec<f64> = zs.iter().map(|&z| eval.score_at(z)).collect();
    let (mut best_i, mut best_score) = (0, f64::NEG_INFINITY);
    let mut min_score = f64::INFINITY;
    for (i, &s) in scores.iter().enumerate() {
        if s > best_score {
            best_score = s;
            best_i = i;
        }
        min_score = min_score.min(s);
    }
    if best_score <= 0.0 || (best_score - min_score) <= 1e-9 * best_score.abs() {
        return Err(OpticsError::NoFocusFound);
    }

    // Golden-section refinement on the bracket around the best coarse point.
    let mut a = (zs[best_i] - cfg.coarse_step_m).max(cfg.z_min_m);
    let mut b = (zs[best_i] + cfg.coarse_step_m).min(cfg.z_max_m);
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = eval.score_at(x1);
    let mut f2 = eval.score_at(x2);
    while (b - a) > cfg.refine_tol_m {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = eval.score_at(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = eval.score_at(x1);
        }
    }
    Ok(0.5 * (a + b))
}

struct Evaluator<'a, T: Scalar> {
    spectrum: &'a [Complex<T>],
    width: usize,
    height: usize,
    pitch_m: f64,
    wavelength_m: f64,
    work: Vec<Complex<T>>,
}

impl<T: Scalar> Evaluator<'_, T> {
    fn score_at(&mut self, z: f64) -> f64 {
        self.work.copy_from_slice(self.spectrum);
        let op = SpectrumOp {
            distance_m: -z,
            tilt_rad: (0.0, 0.0),
            shift_m: (0.0, 0.0),
        };
        apply_spectrum_op(
            &mut self.work,
            self.width,
            self.height,
            self.pitch_m,
            self.wavelength_m,
            &op,
        );
        ifft2d(&mut self.work, self.width, self.height);
        gradient_tamura(&self.work, self.width, self.height)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_field_scores_zero() {
        let f =
            ComplexField::<f64>::uniform(32, 32, 1.4e-6, 450e-9, Complex::new(2.0, 1.0)).unwrap();
        assert_eq!(edge_sparsity_score(&f).unwrap(), 0.0);
    }

    #[test]
    fn score_is_scale_invariant() {
        let samples: Vec<Complex<f64>> = (0..64 * 64)
            .map(|i| Complex::new(((i * 7) % 13) as f64, ((i * 3) % 5) as f64))
            .collect();
        let a = ComplexField::new(64, 64, 1.4e-6, 450e-9, samples.clone()).unwrap();
        let scaled: Vec<Complex<f64>> = samples.iter().map(|s| s * 3.7).collect();
        let b = ComplexField::new(64, 64, 1.4e-6, 450e-9, scaled).unwrap();
        let (sa, sb) = (
            edge_sparsity_score(&a).unwrap(),
            edge_sparsity_score(&b).unwrap(),
        );
        assert!((sa - sb).abs() < 1e-12, "{sa} vs {sb}");
    }

    #[test]
    fn tiny_field_rejected() {
        let f =
            ComplexField::<f64>::uniform(1, 4, 1.4e-6, 450e-9, Complex::new(1.0, 0.0)).unwrap();
        assert!(matches!(
            edge_sparsity_score(&f),
            Err(OpticsError::FieldTooSmall)
        ));
    }

    #[test]
    fn blank_hologram_has_no_focus() {
        let f =
            ComplexField::<f64>::uniform(64, 64, 1.4e-6, 450e-9, Complex::new(1.0, 0.0)).unwrap();
        let cfg = FocusSearchConfig::default();
        assert!(matches!(autofocus(&f, &cfg), Err(OpticsError::NoFocusFound)));
    }

    #[test]
    fn invalid_config_rejected() {
        let f =
            ComplexField::<f64>::uniform(8, 8, 1.4e-6, 450e-9, Complex::new(1.0, 0.0)).unwrap();
        let cfg = FocusSearchConfig {
            z_min_m: 1e-3,
            z_max_m: 1e-4,
            coarse_step_m: 1e-5,
            refine_tol_m: 1e-6,
        };
        assert!(matches!(
            autofocus(&f, &cfg),
            Err(OpticsError::InvalidFocusConfig)
        ));
    }
}
