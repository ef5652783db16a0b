//! Scalar-diffraction primitives shared by the forward simulator and the
//! reconstruction pipeline: complex fields, angular-spectrum propagation,
//! band-limited upsampling and the edge-sparsity autofocus metric.

pub mod fft;
pub mod field;
pub mod focus;
pub mod propagate;

pub use field::{ComplexField, IlluminationSpec};
pub use focus::{autofocus, edge_sparsity_score, FocusSearchConfig};
pub use propagate::{decimate, propagate, upsample};

/// Errors produced by the diffraction primitives.
#[derive(Debug, thiserror::Error)]
pub enum OpticsError {
    #[error("sample count {len} does not match {width}x{height}")]
    ShapeMismatch {
        len: usize,
        width: usize,
        height: usize,
    },
    #[error("pitch and wavelength must be strictly positive and finite")]
    InvalidMetadata,
    #[error("field samples contain non-finite values")]
    NonFiniteSamples,
    #[error("field must be at least 2x2 samples")]
    FieldTooSmall,
    #[error("upsampling factor must be >= 1")]
    InvalidFactor,
    #[error("invalid focus search configuration: require z_min < z_max and coarse_step > refine_tol > 0")]
    InvalidFocusConfig,
    #[error("no focus found: edge-sparsity metric is flat over the search range")]
    NoFocusFound,
    #[error("illumination must have exactly three wavelengths, strictly decreasing from red to blue")]
    InvalidIllumination,
}
