//! Processing engine for a lensfree color holographic imaging flow cytometer.
//!
//! The crate covers the full path from raw Bayer sensor frames to a sample
//! verdict: background subtraction, circular-Hough object localization,
//! angular-spectrum reconstruction with edge-sparsity autofocus, flow-aware
//! track deduplication, convolutional classification with a biased decision
//! rule, and offset-corrected counting. A physics forward simulator generates
//! synthetic sensor streams with known ground truth so every stage can be
//! validated end to end without instrument hardware.
//!
//! Numerical kernels are generic over the scalar type (`f32`/`f64`) via the
//! [`Scalar`] trait; the streaming pipeline instantiates `f32` for speed while
//! the simulator and test oracles run in `f64`.

pub mod classifier;
pub mod optics;
pub mod pipeline;
pub mod preprocess;
pub mod reconstruct;
pub mod scalar;
pub mod sim;
pub mod tracker;

pub use optics::field::ComplexField;
pub use scalar::Scalar;

/// Scalar type used by the streaming pipeline.
pub type PipelineScalar = f32;
/// Scalar type used by the simulator and by test oracles.
pub type OracleScalar = f64;

/// Single-precision complex optical field.
pub type Field32 = ComplexField<f32>;
/// Double-precision complex optical field.
pub type Field64 = ComplexField<f64>;
