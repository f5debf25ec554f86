//! Mapping between the 1024×768 standard viewport and a physical screen:
//! uniform scale `s = min(W/1024, H/768)`, letterboxed in the center.

use std::fmt;
use std::str::FromStr;

use crate::geometry::{Point, Size};

pub const STANDARD_WIDTH: u32 = 1024;
pub const STANDARD_HEIGHT: u32 = 768;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScreenSpec {
    width: u32,
    height: u32,
    scale: f64,
    offset: Point,
}

impl ScreenSpec {
    /// Screen that shows the whole standard viewport, uniformly scaled and centered.
    pub fn fit(width: u32, height: u32) -> Self {
        assert!(width > 0 && height > 0, "screen must be non-empty");
        let scale = (width as f64 / STANDARD_WIDTH as f64).min(height as f64 / STANDARD_HEIGHT as f64);
        let offset = Point::new(
            (width as f64 - STANDARD_WIDTH as f64 * scale) / 2.0,
            (height as f64 - STANDARD_HEIGHT as f64 * scale) / 2.0,
        );
        Self { width, height, scale, offset }
    }

    /// Surface with a 1:1 mapping and no letterbox, e.g. a page sized to one photo.
    pub fn unscaled(width: u32, height: u32) -> Self {
        assert!(width > 0 && height > 0, "screen must be non-empty");
        Self { width, height, scale: 1.0, offset: Point::new(0.0, 0.0) }
    }

    pub fn standard() -> Self {
        Self::fit(STANDARD_WIDTH, STANDARD_HEIGHT)
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

    pub fn area(&self) -> u64 {
        self.size().area()
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn offset(&self) -> Point {
        self.offset
    }

    pub fn to_screen(&self, p: Point) -> Point {
        Point::new(p.x * self.scale + self.offset.x, p.y * self.scale + self.offset.y)
    }

    pub fn to_standard(&self, p: Point) -> Point {
        Point::new((p.x - self.offset.x) / self.scale, (p.y - self.offset.y) / self.scale)
    }
}

impl fmt::Display for ScreenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.width, self.height)
    }
}

/// Parses `WxH` into a fitted screen.
impl FromStr for ScreenSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (w, h) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected WxH, got `{s}`"))?;
        let w: u32 = w.trim().parse().map_err(|_| format!("bad width in `{s}`"))?;
        let h: u32 = h.trim().parse().map_err(|_| format!("bad height in `{s}`"))?;
        if w == 0 || h == 0 {
            return Err(format!("screen `{s}` must be non-empty"));
        }
        Ok(Self::fit(w, h))
    }
}
