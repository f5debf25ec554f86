//! The abstract photo object and its canonical transform pipeline:
//! crop → effects → scale → rotate → translate.
//!
//! Geometry that depends on the source image takes the source dimensions as
//! an argument; the persisted object carries only the source reference.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::effects::{chain_output_size, EffectSpec};
use crate::geometry::{rotated_bbox, rotated_bounds, IntRect, Point, Rect, Size};
use crate::round_half_up;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PhotoError {
    #[error("crop rectangle must have positive extent, got {0:?}")]
    InvalidCrop(IntRect),
    #[error("crop rectangle {rect:?} does not overlap the {source_w}x{source_h} source")]
    EmptyCrop { rect: IntRect, source_w: u32, source_h: u32 },
    #[error("scale factor must be positive and finite, got {0}")]
    InvalidScale(f64),
    #[error("transform value must be finite")]
    NonFinite,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhotoObject {
    pub id: String,
    /// Path or store key of the source image.
    pub source: String,
    /// Crop in source pixels; `None` shows the whole source.
    pub crop: Option<IntRect>,
    pub scale: f64,
    /// Accumulated rotation in degrees, clockwise on screen.
    pub angle: f64,
    /// Display center in standard viewport coordinates.
    pub center: Point,
    pub effects: Vec<EffectSpec>,
    pub z: i64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TransformAction {
    Move(Point),
    Rotate(f64),
    Scale(f64),
}

impl PhotoObject {
    pub fn new(id: impl Into<String>, source: impl Into<String>, center: Point) -> Self {
        Self {
            id: id.into(),
            source: source.into(),
            crop: None,
            scale: 1.0,
            angle: 0.0,
            center,
            effects: Vec::new(),
            z: 0,
        }
    }

    /// Angle normalized into [0, 360) for reporting.
    pub fn angle_normalized(&self) -> f64 {
        let a = self.angle.rem_euclid(360.0);
        if a >= 360.0 {
            0.0
        } else {
            a
        }
    }

    /// Region of the source that is shown, clamped to the source bounds.
    pub fn crop_region(&self, source: Size) -> IntRect {
        self.crop.and_then(|c| c.intersect(&source.bounds())).unwrap_or(source.bounds())
    }

    /// Size of the image after crop and effects, before scaling.
    pub fn prepared_size(&self, source: Size) -> Size {
        let crop = self.crop_region(source);
        chain_output_size(Size::new(crop.w as u32, crop.h as u32), &self.effects)
    }

    /// On-screen size in standard units: `round(w·scale) × round(h·scale)`, each ≥ 1.
    pub fn display_size(&self, source: Size) -> Size {
        let p = self.prepared_size(source);
        let dim = |v: u32| (round_half_up(v as f64 * self.scale).max(1.0)) as u32;
        Size::new(dim(p.w), dim(p.h))
    }

    /// Exact real bounds of the rotated display rectangle.
    pub fn bounds(&self, source: Size) -> Rect {
        let d = self.display_size(source);
        rotated_bounds(self.center, d.w as f64, d.h as f64, self.angle)
    }
}

/// Axis-aligned box of the rotated display rectangle, in standard coordinates.
pub fn photo_bbox(photo: &PhotoObject, source: Size) -> IntRect {
    let d = photo.display_size(source);
    rotated_bbox(photo.center, d.w as f64, d.h as f64, photo.angle)
}

/// Set the crop to `rect` clamped to the source bounds.
pub fn crop_photo(photo: &PhotoObject, rect: IntRect, source: Size) -> Result<PhotoObject, PhotoError> {
    if rect.is_empty() {
        return Err(PhotoError::InvalidCrop(rect));
    }
    let clamped = rect.intersect(&source.bounds()).ok_or(PhotoError::EmptyCrop {
        rect,
        source_w: source.w,
        source_h: source.h,
    })?;
    Ok(PhotoObject { crop: Some(clamped), ..photo.clone() })
}

/// Apply one geometric action; only the named field changes.
pub fn transform_photo(photo: &PhotoObject, action: TransformAction) -> Result<PhotoObject, PhotoError> {
    let mut out = photo.clone();
    match action {
        TransformAction::Move(p) => {
            if !(p.x.is_finite() && p.y.is_finite()) {
                return Err(PhotoError::NonFinite);
            }
            out.center = p;
        }
        TransformAction::Rotate(deg) => {
            if !deg.is_finite() {
                return Err(PhotoError::NonFinite);
            }
            out.angle += deg;
        }
        TransformAction::Scale(f) => {
            if !(f > 0.0 && f.is_finite()) {
                return Err(PhotoError::InvalidScale(f));
            }
            out.scale *= f;
        }
    }
    Ok(out)
}
