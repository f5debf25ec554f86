use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ImageError {
    #[error("image dimensions must be positive, got {width}x{height}")]
    EmptyDimensions { width: u32, height: u32 },
    #[error("pixel buffer holds {got} bytes, {width}x{height} RGBA needs {expected}")]
    BufferSize { width: u32, height: u32, expected: usize, got: usize },
}

/// Owned RGBA8 pixel grid, row-major, straight (non-premultiplied) alpha.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RasterImage {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl fmt::Debug for RasterImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RasterImage")
            .field("width", &self.width)
            .field("height", &self.height)
            .finish_non_exhaustive()
    }
}

impl RasterImage {
    pub fn from_rgba(width: u32, height: u32, pixels: Vec<u8>) -> Result<Self, ImageError> {
        if width == 0 || height == 0 {
            return Err(ImageError::EmptyDimensions { width, height });
        }
        let expected = width as usize * height as usize * 4;
        if pixels.len() != expected {
            return Err(ImageError::BufferSize { width, height, expected, got: pixels.len() });
        }
        Ok(Self { width, height, pixels })
    }

    /// Image filled with one color.
    pub fn filled(width: u32, height: u32, rgba: [u8; 4]) -> Result<Self, ImageError> {
        let n = width as usize * height as usize;
        Self::from_rgba(width, height, rgba.repeat(n))
    }

    /// Build an image by evaluating `f(x, y)` for every pixel.
    pub fn from_fn(
        width: u32,
        height: u32,
        mut f: impl FnMut(u32, u32) -> [u8; 4],
    ) -> Result<Self, ImageError> {
        let mut pixels = Vec::with_capacity(width as usize * height as usize * 4);
        for y in 0..height {
            for x in 0..width {
                pixels.extend_from_slice(&f(x, y));
            }
        }
        Self::from_rgba(width, height, pixels)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn area(&self) -> u64 {
        self.width as u64 * self.height as u64
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn pixels_mut(&mut self) -> &mut [u8] {
        &mut self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    pub fn row_len(&self) -> usize {
        self.width as usize * 4
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> [u8; 4] {
        let i = (y as usize * self.width as usize + x as usize) * 4;
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2], self.pixels[i + 3]]
    }

    #[inline]
    pub fn put(&mut self, x: u32, y: u32, px: [u8; 4]) {
        let i = (y as usize * self.width as usize + x as usize) * 4;
        self.pixels[i..i + 4].copy_from_slice(&px);
    }

    /// Copy of the `w`×`h` block at (`x`, `y`). The block must lie inside the image.
    pub fn sub_image(&self, x: u32, y: u32, w: u32, h: u32) -> Result<Self, ImageError> {
        assert!(x + w <= self.width && y + h <= self.height, "sub_image out of bounds");
        let mut pixels = Vec::with_capacity(w as usize * h as usize * 4);
        for row in y..y + h {
            let start = (row as usize * self.width as usize + x as usize) * 4;
            pixels.extend_from_slice(&self.pixels[start..start + w as usize * 4]);
        }
        Self::from_rgba(w, h, pixels)
    }

    /// Same image with every alpha sample set to 255.
    pub fn opaque(mut self) -> Self {
        self.pixels.chunks_exact_mut(4).for_each(|p| p[3] = 255);
        self
    }

    pub fn is_opaque(&self) -> bool {
        self.pixels.chunks_exact(4).all(|p| p[3] == 255)
    }

    /// Alpha plane, one byte per pixel.
    pub fn alpha_plane(&self) -> Vec<u8> {
        self.pixels.chunks_exact(4).map(|p| p[3]).collect()
    }

    /// Replace the alpha plane. `alpha` must hold one byte per pixel.
    pub fn with_alpha_plane(mut self, alpha: &[u8]) -> Result<Self, ImageError> {
        if alpha.len() as u64 != self.area() {
            return Err(ImageError::BufferSize {
                width: self.width,
                height: self.height,
                expected: self.area() as usize,
                got: alpha.len(),
            });
        }
        self.pixels.chunks_exact_mut(4).zip(alpha).for_each(|(p, &a)| p[3] = a);
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_buffers() {
        assert!(matches!(
            RasterImage::from_rgba(0, 3, vec![]),
            Err(ImageError::EmptyDimensions { .. })
        ));
        assert!(matches!(
            RasterImage::from_rgba(2, 2, vec![0; 15]),
            Err(ImageError::BufferSize { expected: 16, got: 15, .. })
        ));
    }

    #[test]
    fn sub_image_copies_block() {
        let img = RasterImage::from_fn(4, 3, |x, y| [x as u8, y as u8, 0, 255]).unwrap();
        let sub = img.sub_image(1, 1, 2, 2).unwrap();
        assert_eq!(sub.get(0, 0), [1, 1, 0, 255]);
        assert_eq!(sub.get(1, 1), [2, 2, 0, 255]);
    }

    #[test]
    fn alpha_plane_round_trip() {
        let img = RasterImage::from_fn(3, 2, |x, y| [0, 0, 0, (x * 10 + y) as u8]).unwrap();
        let plane = img.alpha_plane();
        let back = img.clone().opaque().with_alpha_plane(&plane).unwrap();
        assert_eq!(back, img);
    }
}
