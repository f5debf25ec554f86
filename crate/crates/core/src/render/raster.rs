//! The shared low-level rasterizer: inverse-mapped nearest-neighbor
//! sampling with source-over compositing onto an RGB frame.

use crate::geometry::{rotated_bbox, IntRect, Point, Size};
use crate::image::RasterImage;
use crate::par::{self, Exec};
use crate::photo::PhotoObject;
use crate::viewport::ScreenSpec;

use super::frame::Frame;

/// A photo's footprint in screen pixels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScreenPlacement {
    pub center: Point,
    pub width: f64,
    pub height: f64,
    pub angle: f64,
    /// Unclipped bounding box on screen.
    pub bbox: IntRect,
}

impl ScreenPlacement {
    pub fn of(photo: &PhotoObject, source: Size, screen: &ScreenSpec) -> Self {
        let d = photo.display_size(source);
        let s = screen.scale();
        let center = screen.to_screen(photo.center);
        let (width, height) = (d.w as f64 * s, d.h as f64 * s);
        Self { center, width, height, angle: photo.angle, bbox: rotated_bbox(center, width, height, photo.angle) }
    }

    /// Bounding box clipped to the screen, the pixels a draw may write.
    pub fn clip(&self, screen: Size) -> Option<IntRect> {
        self.bbox.intersect(&screen.bounds())
    }

    pub fn drawn_area(&self, screen: Size) -> u64 {
        self.clip(screen).map_or(0, |r| r.area())
    }
}

#[inline]
fn blend(src: u8, dst: u8, alpha: u8) -> u8 {
    // round(src·α + dst·(1 − α)) with α = alpha/255, half-up, in integers
    let n = src as u32 * alpha as u32 + dst as u32 * (255 - alpha as u32);
    ((2 * n + 255) / 510) as u8
}

/// Draw `image` (already cropped and filtered) at `placement`, touching only
/// pixels inside `region ∩ bbox`. Pixels whose centers fall outside the
/// rotated footprint are left alone.
pub fn draw_prepared(exec: Exec, frame: &mut Frame, image: &RasterImage, placement: &ScreenPlacement, region: IntRect) {
    let Some(clip) = placement.clip(frame.size()).and_then(|c| c.intersect(&region)) else {
        return;
    };
    let frame_w = frame.width() as usize;
    let row_len = frame_w * 3;
    let (sin, cos) = placement.angle.to_radians().sin_cos();
    let (pw, ph) = (placement.width, placement.height);
    let (iw, ih) = (image.width(), image.height());
    let (sx_scale, sy_scale) = (iw as f64 / pw, ih as f64 / ph);
    let c = placement.center;
    let rows = &mut frame.pixels_mut()[clip.y as usize * row_len..clip.bottom() as usize * row_len];
    par::for_each_row(exec, rows, row_len, |dy, row| {
        let py = (clip.y as usize + dy) as f64 + 0.5 - c.y;
        for x in clip.x..clip.right() {
            let px = x as f64 + 0.5 - c.x;
            // inverse rotation into the photo's local frame
            let u = cos * px + sin * py + pw / 2.0;
            let v = -sin * px + cos * py + ph / 2.0;
            if !(u >= 0.0 && u < pw && v >= 0.0 && v < ph) {
                continue;
            }
            let sx = ((u * sx_scale) as u32).min(iw - 1);
            let sy = ((v * sy_scale) as u32).min(ih - 1);
            let [r, g, b, a] = image.get(sx, sy);
            let o = x as usize * 3;
            match a {
                0 => {}
                255 => row[o..o + 3].copy_from_slice(&[r, g, b]),
                _ => {
                    row[o] = blend(r, row[o], a);
                    row[o + 1] = blend(g, row[o + 1], a);
                    row[o + 2] = blend(b, row[o + 2], a);
                }
            }
        }
    });
}
