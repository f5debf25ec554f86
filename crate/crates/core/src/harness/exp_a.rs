//! Application time of single image operations on a page holding one photo.

use std::fmt;
use std::sync::Arc;

use crate::effects::EffectSpec;
use crate::geometry::{IntRect, Point, Size};
use crate::par::{self, Exec};
use crate::photo::{PhotoObject, TransformAction};
use crate::render::{BackendKind, CostModel, CostReport, Engine, Renderer, SourceLibrary};
use crate::scene::SceneDocument;
use crate::viewport::ScreenSpec;

use super::clock::VirtualClock;
use super::pool::{image_key, ImageClass, EXP_SIZES};
use super::HarnessError;

pub const EXP_A_ROTATION: f64 = 70.0;
pub const EXP_A_CROP: IntRect = IntRect { x: 50, y: 50, w: 300, h: 300 };
pub const TRIALS: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpAOp {
    Rotate,
    Grayscale,
    Invert,
    Crop,
}

impl ExpAOp {
    pub const ALL: [ExpAOp; 4] = [ExpAOp::Rotate, ExpAOp::Grayscale, ExpAOp::Invert, ExpAOp::Crop];

    pub fn name(self) -> &'static str {
        match self {
            ExpAOp::Rotate => "rotate",
            ExpAOp::Grayscale => "grayscale",
            ExpAOp::Invert => "invert",
            ExpAOp::Crop => "crop",
        }
    }

    fn run(self, engine: &mut Engine, id: &str) -> Result<CostReport, HarnessError> {
        let cost = match self {
            ExpAOp::Rotate => engine.transform(id, TransformAction::Rotate(EXP_A_ROTATION))?,
            ExpAOp::Grayscale => engine.apply_effect(id, EffectSpec::Grayscale)?,
            ExpAOp::Invert => engine.apply_effect(id, EffectSpec::Invert)?,
            ExpAOp::Crop => engine.crop(id, EXP_A_CROP)?,
        };
        Ok(cost)
    }
}

impl fmt::Display for ExpAOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trial {
    Run(u32),
    Mean,
}

impl fmt::Display for Trial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trial::Run(n) => write!(f, "{n}"),
            Trial::Mean => f.write_str("mean"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpARow {
    pub backend: BackendKind,
    pub image: String,
    pub op: ExpAOp,
    pub trial: Trial,
    pub virtual_ms: f64,
    pub work_units: u64,
}

#[derive(Clone, Debug)]
pub struct ExpAConfig {
    pub backends: Vec<BackendKind>,
    pub sizes: Vec<Size>,
    pub classes: Vec<ImageClass>,
    pub ops: Vec<ExpAOp>,
    pub cost: CostModel,
    pub quantize: Option<f64>,
    /// Produce pixels as well as costs.
    pub materialize: bool,
    pub exec: Exec,
}

impl Default for ExpAConfig {
    fn default() -> Self {
        Self {
            backends: BackendKind::ALL.to_vec(),
            sizes: EXP_SIZES.to_vec(),
            classes: ImageClass::ALL.to_vec(),
            ops: ExpAOp::ALL.to_vec(),
            cost: CostModel::default(),
            quantize: None,
            materialize: false,
            exec: Exec::auto(),
        }
    }
}

fn one_backend(
    backend: BackendKind,
    config: &ExpAConfig,
    library: &Arc<SourceLibrary>,
) -> Result<Vec<ExpARow>, HarnessError> {
    let mut clock = VirtualClock::new(config.quantize);
    let mut rows = Vec::new();
    for &size in &config.sizes {
        for &class in &config.classes {
            let key = image_key(class, size);
            if !library.contains(&key) {
                return Err(HarnessError::MissingSource(key));
            }
            for &op in &config.ops {
                let mut sum_ms = 0.0;
                let mut sum_work = 0;
                for trial in 1..=TRIALS {
                    let screen = ScreenSpec::unscaled(size.w, size.h);
                    let renderer = Renderer::new(backend, screen, Arc::clone(library))
                        .with_cost_model(config.cost)
                        .with_exec(config.exec);
                    let mut engine = Engine::new(renderer, SceneDocument::new(0));
                    if !config.materialize {
                        engine = engine.cost_only();
                    }
                    let photo = PhotoObject::new("photo", key.clone(), Point::new(size.w as f64 / 2.0, size.h as f64 / 2.0));
                    clock.advance(engine.add_photo(photo)?.virtual_ms);
                    let cost = op.run(&mut engine, "photo")?;
                    let ms = clock.measure(cost.virtual_ms);
                    sum_ms += ms;
                    sum_work += cost.work_units;
                    rows.push(ExpARow {
                        backend,
                        image: key.clone(),
                        op,
                        trial: Trial::Run(trial),
                        virtual_ms: ms,
                        work_units: cost.work_units,
                    });
                }
                rows.push(ExpARow {
                    backend,
                    image: key.clone(),
                    op,
                    trial: Trial::Mean,
                    virtual_ms: sum_ms / TRIALS as f64,
                    work_units: sum_work / TRIALS as u64,
                });
            }
        }
    }
    Ok(rows)
}

/// Two trials per (backend, image, op) plus their mean. Backends run in
/// parallel, each with its own clock.
pub fn exp_a_run(config: &ExpAConfig, library: Arc<SourceLibrary>) -> Result<Vec<ExpARow>, HarnessError> {
    let per_backend = par::map(config.exec, &config.backends, |&b| one_backend(b, config, &library));
    let mut rows = Vec::new();
    for r in per_backend {
        rows.extend(r?);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::pool::exp_a_library;

    fn small_config() -> ExpAConfig {
        ExpAConfig {
            sizes: vec![Size::new(480, 360), Size::new(1280, 720)],
            ..ExpAConfig::default()
        }
    }

    fn find<'a>(rows: &'a [ExpARow], b: BackendKind, image: &str, op: ExpAOp) -> &'a ExpARow {
        rows.iter().find(|r| r.backend == b && r.image == image && r.op == op && r.trial == Trial::Mean).unwrap()
    }

    #[test]
    fn raster_effect_work_scales_with_area() {
        let rows = exp_a_run(&small_config(), Arc::new(exp_a_library(1))).unwrap();
        for op in [ExpAOp::Grayscale, ExpAOp::Invert] {
            let big = find(&rows, BackendKind::Raster, "b1280x720", op).work_units;
            let small = find(&rows, BackendKind::Raster, "b480x360", op).work_units;
            assert_eq!(big, 3 * 921_600);
            assert_eq!(big * 172_800, small * 921_600);
        }
    }

    #[test]
    fn row_count() {
        let rows = exp_a_run(&small_config(), Arc::new(exp_a_library(1))).unwrap();
        assert_eq!(rows.len(), 3 * 2 * 2 * 4 * 3);
    }

    #[test]
    fn missing_source() {
        let err = exp_a_run(&small_config(), Arc::new(SourceLibrary::new())).unwrap_err();
        assert!(matches!(err, HarnessError::MissingSource(k) if k == "b480x360"));
    }

    #[test]
    fn quantized_small_ops_read_zero() {
        let config = ExpAConfig { quantize: Some(15.0), ..small_config() };
        let rows = exp_a_run(&config, Arc::new(exp_a_library(1))).unwrap();
        let exact = exp_a_run(&small_config(), Arc::new(exp_a_library(1))).unwrap();
        for (q, e) in rows.iter().zip(&exact) {
            if e.trial != Trial::Mean && e.virtual_ms < 15.0 {
                assert_eq!(q.virtual_ms, 0.0, "{e:?}");
            }
        }
    }
}
