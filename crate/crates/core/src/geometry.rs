use serde::{Deserialize, Serialize};

use crate::round_half_up;

/// Real-valued position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// Integer pixel dimensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Size {
    pub w: u32,
    pub h: u32,
}

impl Size {
    pub const fn new(w: u32, h: u32) -> Self {
        Self { w, h }
    }

    pub fn area(self) -> u64 {
        self.w as u64 * self.h as u64
    }

    pub fn bounds(self) -> IntRect {
        IntRect::new(0, 0, self.w as i64, self.h as i64)
    }
}

/// Integer rectangle, origin plus extent. Empty when either extent is ≤ 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 4]", into = "[i64; 4]")]
pub struct IntRect {
    pub x: i64,
    pub y: i64,
    pub w: i64,
    pub h: i64,
}

impl From<[i64; 4]> for IntRect {
    fn from([x, y, w, h]: [i64; 4]) -> Self {
        Self { x, y, w, h }
    }
}

impl From<IntRect> for [i64; 4] {
    fn from(r: IntRect) -> Self {
        [r.x, r.y, r.w, r.h]
    }
}

impl IntRect {
    pub const fn new(x: i64, y: i64, w: i64, h: i64) -> Self {
        Self { x, y, w, h }
    }

    pub fn right(&self) -> i64 {
        self.x + self.w
    }

    pub fn bottom(&self) -> i64 {
        self.y + self.h
    }

    pub fn is_empty(&self) -> bool {
        self.w <= 0 || self.h <= 0
    }

    pub fn area(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            self.w as u64 * self.h as u64
        }
    }

    /// Overlap of two rectangles; `None` when they do not overlap.
    pub fn intersect(&self, other: &IntRect) -> Option<IntRect> {
        let x0 = self.x.max(other.x);
        let y0 = self.y.max(other.y);
        let x1 = self.right().min(other.right());
        let y1 = self.bottom().min(other.bottom());
        let r = IntRect::new(x0, y0, x1 - x0, y1 - y0);
        (!r.is_empty()).then_some(r)
    }

    pub fn contains_rect(&self, other: &IntRect) -> bool {
        other.x >= self.x && other.y >= self.y && other.right() <= self.right() && other.bottom() <= self.bottom()
    }
}

/// Real-valued axis-aligned box.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }
}

// Slack for trig noise, e.g. cos(90°) ≈ 6e-17 must not add a pixel.
const EXTENT_EPS: f64 = 1e-7;

/// Extents of a `w`×`h` rectangle rotated by `angle_deg` about its center.
pub fn rotated_extents(w: f64, h: f64, angle_deg: f64) -> (f64, f64) {
    let (s, c) = angle_deg.to_radians().sin_cos();
    let (s, c) = (s.abs(), c.abs());
    (w * c + h * s, w * s + h * c)
}

/// Exact real bounds of the rotated rectangle.
pub fn rotated_bounds(center: Point, w: f64, h: f64, angle_deg: f64) -> Rect {
    let (ew, eh) = rotated_extents(w, h, angle_deg);
    Rect {
        x0: center.x - ew / 2.0,
        y0: center.y - eh / 2.0,
        x1: center.x + ew / 2.0,
        y1: center.y + eh / 2.0,
    }
}

/// Integer bounding box of a rotated rectangle: extents rounded up, origin
/// rounded half-up so an axis-aligned rectangle on a half-pixel grid maps to
/// exactly the pixels whose centers it covers.
pub fn rotated_bbox(center: Point, w: f64, h: f64, angle_deg: f64) -> IntRect {
    let (ew, eh) = rotated_extents(w, h, angle_deg);
    IntRect::new(
        round_half_up(center.x - ew / 2.0) as i64,
        round_half_up(center.y - eh / 2.0) as i64,
        (ew - EXTENT_EPS).ceil().max(0.0) as i64,
        (eh - EXTENT_EPS).ceil().max(0.0) as i64,
    )
}
