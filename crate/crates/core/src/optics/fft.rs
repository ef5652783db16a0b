//! Cached 2D FFT helpers on row-major complex buffers.

use crate::scalar::Scalar;
use num_complex::Complex;
use rustfft::{Fft, FftPlanner};
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

type PlanKey = (usize, bool);

/// Scalar types with a thread-local FFT plan cache.
pub trait FftScalar: Scalar {
    fn plan(len: usize, inverse: bool) -> Arc<dyn Fft<Self>>;
}

macro_rules! impl_fft_scalar {
    ($ty:ty, $cache:ident) => {
        thread_local! {
            static $cache: RefCell<HashMap<PlanKey, Arc<dyn Fft<$ty>>>> =
                RefCell::new(HashMap::new());
        }

        impl FftScalar for $ty {
            fn plan(len: usize, inverse: bool) -> Arc<dyn Fft<$ty>> {
                $cache.with(|c| {
                    c.borrow_mut()
                        .entry((len, inverse))
                        .or_insert_with(|| {
                            let mut planner = FftPlanner::new();
                            if inverse {
                                planner.plan_fft_inverse(len)
                            } else {
                                planner.plan_fft_forward(len)
                            }
                        })
                        .clone()
                })
            }
        }
    };
}

impl_fft_scalar!(f32, PLANS_F32);
impl_fft_scalar!(f64, PLANS_F64);

fn transform_2d<T: FftScalar>(data: &mut [Complex<T>], width: usize, height: usize, inverse: bool) {
    assert_eq!(data.len(), width * height);
    let row_fft = T::plan(width, inverse);
    let mut scratch = vec![Complex::default(); row_fft.get_inplace_scratch_len()];
    for row in data.chunks_exact_mut(width) {
        row_fft.process_with_scratch(row, &mut scratch);
    }
    let col_fft = T::plan(height, inverse);
    let needed = col_fft.get_inplace_scratch_len();
    if scratch.len() < needed {
        scratch.resize(needed, Complex::default());
    }
    let mut col = vec![Complex::default(); height];
    for c in 0..width {
        for r in 0..height {
            col[r] = data[r * width + c];
        }
        col_fft.process_with_scratch(&mut col, &mut scratch);
        for r in 0..height {
            data[r * width + c] = col[r];
        }
    }
}

/// In-place unnormalized forward 2D FFT.
pub fn fft2d<T: FftScalar>(data: &mut [Complex<T>], width: usize, height: usize) {
    transform_2d(data, width, height, false);
}

/// In-place inverse 2D FFT, normalized by `1/(width*height)`.
pub fn ifft2d<T: FftScalar>(data: &mut [Complex<T>], width: usize, height: usize) {
    transform_2d(data, width, height, true);
    let norm = T::of(1.0 / (width as f64 * height as f64));
    for v in data.iter_mut() {
        *v = *v * norm;
    }
}

/// Signed FFT bin index: bins above `n/2` wrap to negative frequencies.
#[inline]
pub fn signed_bin(k: usize, n: usize) -> isize {
    if k <= n / 2 {
        k as isize
    } else {
        k as isize - n as isize
    }
}
