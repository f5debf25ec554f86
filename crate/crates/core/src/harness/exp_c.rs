//! Photo-wall load simulation with periodic rotation probes.

use std::fmt;
use std::sync::Arc;

use crate::par::Exec;
use crate::photo::TransformAction;
use crate::render::{BackendKind, CostModel, Engine, Renderer, SourceLibrary};
use crate::scene::SceneDocument;
use crate::viewport::ScreenSpec;

use super::clock::VirtualClock;
use super::pool::pool_key;
use super::simplan::{sim_plan_on, SimPlan, SIM_SCREEN};
use super::HarnessError;

pub const PROBE_ANGLE: f64 = -111.8;
pub const PROBE_EVERY: u32 = 5;
/// The first photo placed at the center.
pub const PROBE_PHOTO: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StopRules {
    pub load_timeout: f64,
    pub unresponsive_timeout: f64,
    pub max_photos: u32,
}

impl Default for StopRules {
    fn default() -> Self {
        Self { load_timeout: 15_000.0, unresponsive_timeout: 30_000.0, max_photos: 100 }
    }
}

impl StopRules {
    /// Only the photo-count rule applies.
    pub fn count_only(max_photos: u32) -> Self {
        Self { load_timeout: f64::INFINITY, unresponsive_timeout: f64::INFINITY, max_photos }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopRule {
    LoadTimeout,
    Unresponsive,
    MaxPhotos,
}

impl StopRule {
    pub fn name(self) -> &'static str {
        match self {
            StopRule::LoadTimeout => "load_timeout",
            StopRule::Unresponsive => "unresponsive",
            StopRule::MaxPhotos => "max_photos",
        }
    }
}

impl fmt::Display for StopRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct ExpCConfig {
    pub backend: BackendKind,
    pub seed: u64,
    pub cost: CostModel,
    pub rules: StopRules,
    pub quantize: Option<f64>,
    pub screen: ScreenSpec,
    /// Distinct pool images per source size.
    pub pool_per_size: usize,
    pub materialize: bool,
    pub exec: Exec,
}

impl ExpCConfig {
    pub fn new(backend: BackendKind, seed: u64) -> Self {
        Self {
            backend,
            seed,
            cost: CostModel::default(),
            rules: StopRules::default(),
            quantize: None,
            screen: ScreenSpec::fit(SIM_SCREEN.0, SIM_SCREEN.1),
            pool_per_size: 4,
            materialize: false,
            exec: Exec::auto(),
        }
    }
}

/// One probe measurement, or the terminal row when `stop_rule` is set.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpCRow {
    pub backend: BackendKind,
    pub count: u32,
    pub probe_virtual_ms: Option<f64>,
    pub stop_rule: Option<StopRule>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpCOutcome {
    pub rows: Vec<ExpCRow>,
    pub stop_rule: StopRule,
    /// Photo count at which the rule fired.
    pub count: u32,
}

impl ExpCOutcome {
    pub fn probes(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.rows.iter().filter_map(|r| r.probe_virtual_ms.map(|ms| (r.count, ms)))
    }
}

pub fn photo_id(i: u32) -> String {
    format!("p{i:03}")
}

fn source_key(plan: &SimPlan, per_size: usize) -> String {
    pool_key(plan.source, (plan.index as usize / 2) % per_size.max(1))
}

/// Load photos one by one per the simulation plan until a stop rule fires.
pub fn exp_c_run(config: &ExpCConfig, library: Arc<SourceLibrary>) -> Result<ExpCOutcome, HarnessError> {
    let renderer = Renderer::new(config.backend, config.screen, library.clone())
        .with_cost_model(config.cost)
        .with_exec(config.exec);
    let mut engine = Engine::new(renderer, SceneDocument::new(0));
    if !config.materialize {
        engine = engine.cost_only();
    }
    let mut clock = VirtualClock::new(config.quantize);
    let mut rows = Vec::new();
    let finish = |mut rows: Vec<ExpCRow>, rule: StopRule, count: u32| {
        rows.push(ExpCRow { backend: config.backend, count, probe_virtual_ms: None, stop_rule: Some(rule) });
        Ok(ExpCOutcome { rows, stop_rule: rule, count })
    };

    for i in 1.. {
        let plan = sim_plan_on(i, config.seed, &config.screen);
        let key = source_key(&plan, config.pool_per_size);
        if !library.contains(&key) {
            return Err(HarnessError::MissingSource(key));
        }
        let load = engine.add_photo(plan.photo(photo_id(i), key))?;
        let load_ms = clock.measure(load.virtual_ms);
        if load_ms > config.rules.load_timeout {
            return finish(rows, StopRule::LoadTimeout, i);
        }
        if load_ms > config.rules.unresponsive_timeout {
            return finish(rows, StopRule::Unresponsive, i);
        }
        if i % PROBE_EVERY == 0 {
            let target = photo_id(PROBE_PHOTO);
            let probe = engine.transform(&target, TransformAction::Rotate(PROBE_ANGLE))?;
            let probe_ms = clock.measure(probe.virtual_ms);
            rows.push(ExpCRow { backend: config.backend, count: i, probe_virtual_ms: Some(probe_ms), stop_rule: None });
            if probe_ms > config.rules.unresponsive_timeout {
                return finish(rows, StopRule::Unresponsive, i);
            }
            let restore = engine.transform(&target, TransformAction::Rotate(-PROBE_ANGLE))?;
            clock.advance(restore.virtual_ms);
        }
        if i >= config.rules.max_photos {
            return finish(rows, StopRule::MaxPhotos, i);
        }
    }
    unreachable!("the photo-count rule always fires")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::pool::sim_pool;

    fn lib() -> Arc<SourceLibrary> {
        Arc::new(sim_pool(4, 1))
    }

    #[test]
    fn free_rendering_reaches_photo_limit() {
        for backend in BackendKind::ALL {
            let config = ExpCConfig { cost: CostModel::with_throughput(f64::INFINITY), ..ExpCConfig::new(backend, 1) };
            let out = exp_c_run(&config, lib()).unwrap();
            assert_eq!((out.stop_rule, out.count), (StopRule::MaxPhotos, 100));
            assert_eq!(out.probes().count(), 20);
        }
    }

    #[test]
    fn raster_hits_load_timeout_early() {
        let out = exp_c_run(&ExpCConfig::new(BackendKind::Raster, 1), lib()).unwrap();
        assert_eq!(out.stop_rule, StopRule::LoadTimeout);
        assert!(out.count < 100);
        assert_eq!(out.rows.last().unwrap().stop_rule, Some(StopRule::LoadTimeout));
    }

    #[test]
    fn probe_trends() {
        let config = ExpCConfig { rules: StopRules::count_only(100), ..ExpCConfig::new(BackendKind::Raster, 1) };
        let raster: Vec<f64> = exp_c_run(&config, lib()).unwrap().probes().map(|p| p.1).collect();
        assert!(raster.windows(2).all(|w| w[0] <= w[1]), "{raster:?}");
        assert!(raster.last() > raster.first());
        let config = ExpCConfig { rules: StopRules::count_only(100), ..ExpCConfig::new(BackendKind::SceneGraph, 1) };
        let sg: Vec<f64> = exp_c_run(&config, lib()).unwrap().probes().map(|p| p.1).collect();
        assert!(sg.iter().all(|&v| v == sg[0]), "{sg:?}");
    }

    #[test]
    fn deterministic() {
        let config = ExpCConfig::new(BackendKind::Legacy, 5);
        assert_eq!(exp_c_run(&config, lib()).unwrap(), exp_c_run(&config, lib()).unwrap());
    }
}
