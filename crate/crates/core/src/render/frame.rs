use crate::geometry::{IntRect, Size};
use crate::image::RasterImage;

/// RGB8 output surface at screen resolution.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl std::fmt::Debug for Frame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Frame({}x{})", self.width, self.height)
    }
}

pub const BACKGROUND: [u8; 3] = [255, 255, 255];

impl Frame {
    /// White surface.
    pub fn blank(size: Size) -> Self {
        Self { width: size.w, height: size.h, pixels: vec![255; size.area() as usize * 3] }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn size(&self) -> Size {
        Size::new(self.width, self.height)
    }

    pub fn bounds(&self) -> IntRect {
        self.size().bounds()
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub(crate) fn pixels_mut(&mut self) -> &mut [u8] {
        &mut self.pixels
    }

    pub fn get(&self, x: u32, y: u32) -> [u8; 3] {
        let i = (y as usize * self.width as usize + x as usize) * 3;
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    /// Fill `rect` (clipped) with the background color.
    pub fn clear_rect(&mut self, rect: IntRect) {
        let Some(r) = rect.intersect(&self.bounds()) else { return };
        let w = self.width as usize;
        for y in r.y as usize..r.bottom() as usize {
            self.pixels[(y * w + r.x as usize) * 3..(y * w + r.right() as usize) * 3].fill(255);
        }
    }

    /// Copy `rect` (clipped) from a same-sized frame.
    pub fn copy_rect_from(&mut self, src: &Frame, rect: IntRect) {
        assert_eq!(self.size(), src.size(), "frames differ in size");
        let Some(r) = rect.intersect(&self.bounds()) else { return };
        let w = self.width as usize;
        for y in r.y as usize..r.bottom() as usize {
            let span = (y * w + r.x as usize) * 3..(y * w + r.right() as usize) * 3;
            self.pixels[span.clone()].copy_from_slice(&src.pixels[span]);
        }
    }

    pub fn to_image(&self) -> RasterImage {
        let mut rgba = Vec::with_capacity(self.pixels.len() / 3 * 4);
        for px in self.pixels.chunks_exact(3) {
            rgba.extend_from_slice(&[px[0], px[1], px[2], 255]);
        }
        RasterImage::from_rgba(self.width, self.height, rgba).expect("frame is non-empty")
    }
}
