//! Replay of the scripted drag against one photo under a 40 ms frame budget.

use std::sync::Arc;

use crate::effects::EffectSpec;
use crate::geometry::{Point, Size};
use crate::par::Exec;
use crate::photo::PhotoObject;
use crate::render::{BackendKind, CostModel, Engine, Renderer, SourceLibrary};
use crate::scene::SceneDocument;
use crate::viewport::{ScreenSpec, STANDARD_WIDTH};

use super::clock::quantize_clock;
use super::pool::{image_key, ImageClass};
use super::trace::{make_mouse_trace, TRACE_DURATION_MS};
use super::HarnessError;

pub const FRAME_BUDGET_MS: f64 = 40.0;

#[derive(Clone, Debug)]
pub struct ExpBConfig {
    pub backend: BackendKind,
    pub size: Size,
    pub effect: Option<EffectSpec>,
    pub cost: CostModel,
    pub screen: ScreenSpec,
    pub quantize: Option<f64>,
    pub materialize: bool,
    pub exec: Exec,
}

impl ExpBConfig {
    pub fn new(backend: BackendKind, size: Size) -> Self {
        Self {
            backend,
            size,
            effect: None,
            cost: CostModel::default(),
            screen: ScreenSpec::standard(),
            quantize: None,
            materialize: false,
            exec: Exec::auto(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpBRow {
    pub backend: BackendKind,
    pub size: Size,
    pub effect: Option<EffectSpec>,
    pub delta_ms: f64,
    pub frames: u32,
    pub utilization: f64,
}

/// Start center of the dragged photo: horizontally centered, positioned so
/// the full drag ends with the photo centered lower by the trace length.
pub fn drag_start(screen: &ScreenSpec) -> Point {
    let mid = screen.to_screen(Point::new(STANDARD_WIDTH as f64 / 2.0, 384.0));
    screen.to_standard(Point::new(mid.x, mid.y - 251.5))
}

/// Frame requests every 40 ms of the trace plus one at its end; a request
/// that arrives while the previous frame is still being drawn waits.
pub fn exp_b_run(config: &ExpBConfig, library: Arc<SourceLibrary>) -> Result<ExpBRow, HarnessError> {
    let key = image_key(ImageClass::Detailed, config.size);
    if !library.contains(&key) {
        return Err(HarnessError::MissingSource(key));
    }
    let renderer = Renderer::new(config.backend, config.screen, library)
        .with_cost_model(config.cost)
        .with_exec(config.exec);
    let mut engine = Engine::new(renderer, SceneDocument::new(0));
    if !config.materialize {
        engine = engine.cost_only();
    }
    let start = drag_start(&config.screen);
    let mut photo = PhotoObject::new("photo", key, start);
    photo.effects.extend(config.effect.clone());
    engine.add_photo(photo)?;

    let trace = make_mouse_trace();
    let press = config.screen.to_screen(start);
    let mut requests: Vec<f64> = (1..).map(|m| m as f64 * FRAME_BUDGET_MS).take_while(|&t| t < TRACE_DURATION_MS).collect();
    requests.push(TRACE_DURATION_MS);

    let mut busy = engine.begin_interaction("photo")?.virtual_ms;
    let mut t = busy;
    let mut frames = 0;
    for at in requests {
        let offset = trace.at(at).offset;
        let center = config.screen.to_standard(Point::new(press.x + offset.x, press.y + offset.y));
        let cost = engine.update_interaction(center)?;
        t = t.max(at) + cost.virtual_ms;
        busy += cost.virtual_ms;
        frames += cost.frames;
    }
    let completion = t;
    let end = engine.end_interaction()?.virtual_ms;
    busy += end;
    let elapsed = (completion + end).max(TRACE_DURATION_MS);

    let delta = match config.quantize {
        Some(r) => quantize_clock(completion, r) - quantize_clock(TRACE_DURATION_MS, r),
        None => completion - TRACE_DURATION_MS,
    }
    .max(0.0);
    Ok(ExpBRow {
        backend: config.backend,
        size: config.size,
        effect: config.effect.clone(),
        delta_ms: delta,
        frames,
        utilization: busy / elapsed,
    })
}
