//! Rendering strategies over one shared rasterizer.
//!
//! * `raster` clears and redraws the whole surface for every change
//!   (immediate mode) and re-applies effect chains on every draw.
//! * `scenegraph` keeps prepared nodes and recomposites only the damaged
//!   boxes (retained mode).
//! * `legacy` schedules like `scenegraph` with a narrower effect set.
//!
//! All three produce identical pixels; they differ in what they charge to
//! the [`CostReport`].

mod capability;
mod cost;
mod engine;
mod frame;
mod library;
mod raster;
mod renderer;

pub use capability::{capability_check, BackendKind, CapabilityMatrix, Support, UnknownBackend};
pub use cost::{CostModel, CostReport};
pub use engine::{Engine, EngineError};
pub use frame::{Frame, BACKGROUND};
pub use library::SourceLibrary;
pub use raster::{draw_prepared, ScreenPlacement};
pub use renderer::{Prepared, RenderError, Renderer};
