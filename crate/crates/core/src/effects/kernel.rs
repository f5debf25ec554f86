use crate::image::RasterImage;
use crate::par::{self, Exec};
use crate::{clamp_u8, round_half_up};

use super::EffectError;

/// 3×3 convolution kernel applied to RGB; output is
/// `clamp(round(Σ wᵢ·cᵢ / divisor + bias), 0, 255)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Kernel3x3 {
    weights: [f64; 9],
    divisor: f64,
    bias: f64,
}

impl Kernel3x3 {
    pub fn new(weights: [f64; 9], divisor: f64, bias: f64) -> Result<Self, EffectError> {
        if divisor == 0.0 || !divisor.is_finite() {
            return Err(EffectError::ZeroDivisor);
        }
        Ok(Self { weights, divisor, bias })
    }

    pub fn identity() -> Self {
        Self { weights: [0., 0., 0., 0., 1., 0., 0., 0., 0.], divisor: 1.0, bias: 0.0 }
    }

    pub fn box_blur() -> Self {
        Self { weights: [1.0; 9], divisor: 9.0, bias: 0.0 }
    }

    pub fn sharpen() -> Self {
        Self { weights: [0., -1., 0., -1., 5., -1., 0., -1., 0.], divisor: 1.0, bias: 0.0 }
    }

    pub fn emboss() -> Self {
        Self { weights: [-2., -1., 0., -1., 1., 1., 0., 1., 2.], divisor: 1.0, bias: 128.0 }
    }

    pub fn weights(&self) -> &[f64; 9] {
        &self.weights
    }
}

/// Convolve RGB with clamp-to-edge sampling; alpha is copied through.
pub fn convolve3x3(image: &RasterImage, kernel: &Kernel3x3) -> RasterImage {
    convolve3x3_with(Exec::auto(), image, kernel)
}

pub fn convolve3x3_with(exec: Exec, image: &RasterImage, kernel: &Kernel3x3) -> RasterImage {
    let (w, h) = (image.width() as i64, image.height() as i64);
    let src = image.pixels();
    let mut out = image.clone();
    let row_len = image.row_len();
    par::for_each_row(exec, out.pixels_mut(), row_len, |y, row| {
        let y = y as i64;
        for x in 0..w {
            let mut acc = [0.0f64; 3];
            for ky in 0..3i64 {
                let sy = (y + ky - 1).clamp(0, h - 1);
                for kx in 0..3i64 {
                    let sx = (x + kx - 1).clamp(0, w - 1);
                    let wgt = kernel.weights[(ky * 3 + kx) as usize];
                    let i = ((sy * w + sx) * 4) as usize;
                    for c in 0..3 {
                        acc[c] += wgt * src[i + c] as f64;
                    }
                }
            }
            let o = (x * 4) as usize;
            for c in 0..3 {
                row[o + c] = clamp_u8(round_half_up(acc[c] / kernel.divisor + kernel.bias));
            }
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn noisy(w: u32, h: u32) -> RasterImage {
        RasterImage::from_fn(w, h, |x, y| [(x * 37 + y * 11) as u8, (x * y) as u8, (200 - x) as u8, (y * 9) as u8])
            .unwrap()
    }

    #[test]
    fn identity_kernel_is_noop() {
        let img = noisy(9, 7);
        assert_eq!(convolve3x3(&img, &Kernel3x3::identity()), img);
    }

    #[test]
    fn constant_image_is_fixed_point_of_blur_and_sharpen() {
        let img = RasterImage::filled(6, 5, [90, 17, 250, 200]).unwrap();
        assert_eq!(convolve3x3(&img, &Kernel3x3::box_blur()), img);
        assert_eq!(convolve3x3(&img, &Kernel3x3::sharpen()), img);
    }

    #[test]
    fn zero_divisor_rejected() {
        assert_eq!(Kernel3x3::new([1.0; 9], 0.0, 0.0), Err(EffectError::ZeroDivisor));
    }

    #[test]
    fn edges_clamp() {
        // single pixel: every tap reads the same sample
        let img = RasterImage::from_rgba(1, 1, vec![10, 20, 30, 40]).unwrap();
        let out = convolve3x3(&img, &Kernel3x3::emboss());
        assert_eq!(out.get(0, 0), [138, 148, 158, 40]);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let img = noisy(31, 17);
        let k = Kernel3x3::sharpen();
        assert_eq!(convolve3x3_with(Exec::Sequential, &img, &k), convolve3x3_with(Exec::Parallel, &img, &k));
    }
}
