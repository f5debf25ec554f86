use std::sync::Arc;

use photocomp::failover::EffectRouter;
use photocomp::harness::exp_a::ExpAConfig;
use photocomp::harness::pool::{exp_a_library, sim_pool, EXP_SIZES};
use photocomp::harness::report::{exp_a_csv, exp_b_csv, exp_c_csv};
use photocomp::harness::{exp_a_run, exp_b_run, exp_c_run, ExpBConfig, ExpCConfig};
use photocomp::{BackendKind, EffectSpec, Engine, PhotoObject, Point, Renderer, SceneDocument, ScreenSpec};

#[test]
fn identical_config_gives_identical_csv() {
    let a = || exp_a_csv(&exp_a_run(&ExpAConfig { quantize: Some(15.0), ..ExpAConfig::default() }, Arc::new(exp_a_library(4))).unwrap());
    assert_eq!(a(), a());
    assert!(a().starts_with("backend,image,op,trial,virtual_ms,work_units\n"));

    let b = || {
        let rows: Vec<_> = EXP_SIZES
            .iter()
            .map(|&s| exp_b_run(&ExpBConfig::new(BackendKind::Legacy, s), Arc::new(exp_a_library(4))).unwrap())
            .collect();
        exp_b_csv(&rows)
    };
    assert_eq!(b(), b());

    let c = |seed| exp_c_csv(&exp_c_run(&ExpCConfig { pool_per_size: 3, ..ExpCConfig::new(BackendKind::SceneGraph, seed) }, Arc::new(sim_pool(3, 4))).unwrap().rows);
    assert_eq!(c(8), c(8));
    assert!(c(8).lines().last().unwrap().ends_with(",max_photos"));
}

#[test]
fn materialized_exp_a_matches_cost_only() {
    let config = ExpAConfig { sizes: vec![EXP_SIZES[0]], ..ExpAConfig::default() };
    let lib = Arc::new(exp_a_library(2));
    let cheap = exp_a_run(&config, lib.clone()).unwrap();
    let full = exp_a_run(&ExpAConfig { materialize: true, ..config }, lib).unwrap();
    assert_eq!(cheap, full);
}

#[test]
fn legacy_renders_unsupported_effects_through_the_service() {
    let lib = Arc::new(exp_a_library(5));
    let mut photo = PhotoObject::new("p", "b480x360", Point::new(400.0, 300.0));
    photo.effects = vec![EffectSpec::Sepia, EffectSpec::Hue { degrees: 40.0 }];
    let mut scene = SceneDocument::new(0);
    scene.add_photo(photo).unwrap();

    let screen = ScreenSpec::standard();
    let (expected, _) = Renderer::new(BackendKind::Raster, screen, lib.clone()).render_full(&scene).unwrap();
    let legacy = Renderer::new(BackendKind::Legacy, screen, lib).with_router(EffectRouter::in_process());
    let (frame, cost) = legacy.render_full(&scene).unwrap();
    assert_eq!(frame, expected);
    assert_eq!(cost.remote_calls, 2);
    assert_eq!(cost.virtual_ms, cost.work_units as f64 / 1000.0 + 100.0);

    let mut engine = Engine::new(legacy, SceneDocument::new(0));
    engine.add_photo(scene.photos()[0].clone()).unwrap();
    assert_eq!(engine.frame(), Some(&expected));
}
