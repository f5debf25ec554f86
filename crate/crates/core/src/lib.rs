//! Headless 2D photo-composition engine.
//!
//! Photos live in a [`SceneDocument`] expressed in a fixed 1024×768 standard
//! viewport. A [`Renderer`] turns a scene into a [`Frame`] using one of three
//! scheduling strategies ([`BackendKind`]) on top of a single shared
//! rasterizer, and charges every pixel it writes to a [`CostReport`]. Effects
//! a backend cannot express are routed through the single-endpoint processing
//! service in [`failover`]. The [`harness`] module replays the three load
//! experiments under a virtual clock.

pub mod effects;
pub mod failover;
pub mod geometry;
pub mod harness;
pub mod image;
pub mod par;
pub mod photo;
pub mod ppm;
pub mod render;
pub mod scene;
pub mod viewport;
pub mod zorder;

pub use effects::{apply_chain, apply_effect, convolve3x3, EffectError, EffectKind, EffectSpec, Kernel3x3};
pub use geometry::{IntRect, Point, Rect, Size};
pub use image::RasterImage;
pub use par::Exec;
pub use photo::{PhotoError, PhotoObject, TransformAction};
pub use render::{
    BackendKind, CapabilityMatrix, CostModel, CostReport, Engine, Frame, RenderError, Renderer,
    SourceLibrary, Support,
};
pub use scene::{SceneDocument, SceneError};
pub use viewport::ScreenSpec;
pub use zorder::{ZOrderArray, ZOrderError};

/// Round half away from negative infinity, the single rounding rule used
/// for every quantization in the crate.
#[inline]
pub fn round_half_up(x: f64) -> f64 {
    (x + 0.5).floor()
}

#[inline]
pub(crate) fn clamp_u8(x: f64) -> u8 {
    if x.is_nan() {
        0
    } else {
        x.clamp(0.0, 255.0) as u8
    }
}
