//! Per-photo load plan for the photo-wall simulation.

use crate::geometry::{rotated_extents, IntRect, Point, Size};
use crate::photo::PhotoObject;
use crate::viewport::{ScreenSpec, STANDARD_HEIGHT, STANDARD_WIDTH};

use super::rng::{unit, SplitMix64};

pub const SMALL_SOURCE: Size = Size { w: 576, h: 384 };
pub const LARGE_SOURCE: Size = Size { w: 900, h: 600 };
pub const SIM_CROP: IntRect = IntRect { x: 50, y: 50, w: 300, h: 300 };
pub const SIM_SCREEN: (u32, u32) = (1920, 1200);

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Position {
    Center,
    /// Display center in standard coordinates.
    Random(Point),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimPlan {
    pub index: u32,
    pub position: Position,
    pub source: Size,
    pub rotation: Option<f64>,
    pub scale: Option<f64>,
    pub crop: Option<IntRect>,
}

impl SimPlan {
    pub fn center(&self) -> Point {
        match self.position {
            Position::Center => Point::new(STANDARD_WIDTH as f64 / 2.0, STANDARD_HEIGHT as f64 / 2.0),
            Position::Random(p) => p,
        }
    }

    pub fn photo(&self, id: impl Into<String>, source_key: impl Into<String>) -> PhotoObject {
        let mut p = PhotoObject::new(id, source_key, self.center());
        p.crop = self.crop;
        p.scale = self.scale.unwrap_or(1.0);
        p.angle = self.rotation.unwrap_or(0.0);
        p
    }

    /// Display size in standard units.
    pub fn display_size(&self) -> Size {
        let mut p = self.photo("", "");
        p.center = Point::new(0.0, 0.0);
        p.display_size(self.source)
    }
}

/// Plan for photo `i` on the default 1920×1200 screen.
pub fn sim_plan(i: u32, seed: u64) -> SimPlan {
    sim_plan_on(i, seed, &ScreenSpec::fit(SIM_SCREEN.0, SIM_SCREEN.1))
}

/// Plan for photo `i`; random positions use outputs `2i−1` and `2i` of the
/// seeded stream and keep the rotated box on screen.
pub fn sim_plan_on(i: u32, seed: u64, screen: &ScreenSpec) -> SimPlan {
    assert!(i >= 1, "photo indices start at 1");
    let mut plan = SimPlan {
        index: i,
        position: Position::Center,
        source: LARGE_SOURCE,
        rotation: None,
        scale: None,
        crop: None,
    };

    let random_position = !i.is_multiple_of(5);

    if i.is_multiple_of(2) {
        plan.source = SMALL_SOURCE;
    }

    if i.is_multiple_of(3) && !i.is_multiple_of(5) {
        plan.rotation = Some(if i.is_multiple_of(2) { -50.0 } else { 10.0 });
    } else if i.is_multiple_of(5) {
        plan.scale = Some(0.8);
    }

    if i.is_multiple_of(7) {
        plan.crop = Some(SIM_CROP);
    }

    if random_position {
        let d = plan.display_size();
        let (ew, eh) = rotated_extents(d.w as f64, d.h as f64, plan.rotation.unwrap_or(0.0));
        let (bw, bh) = (ew * screen.scale(), eh * screen.scale());
        let ux = unit(SplitMix64::nth(seed, 2 * i as u64 - 1));
        let uy = unit(SplitMix64::nth(seed, 2 * i as u64));
        let x = ux * (screen.width() as f64 - bw).max(0.0);
        let y = uy * (screen.height() as f64 - bh).max(0.0);
        plan.position = Position::Random(screen.to_standard(Point::new(x + bw / 2.0, y + bh / 2.0)));
    }
    plan
}
