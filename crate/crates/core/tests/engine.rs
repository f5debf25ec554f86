use std::sync::Arc;

use photocomp::render::EngineError;
use photocomp::{
    BackendKind, EffectSpec, Engine, Point, PhotoObject, RasterImage, Renderer, SceneDocument, ScreenSpec,
    SourceLibrary, TransformAction,
};

fn textured(w: u32, h: u32, salt: u32) -> RasterImage {
    RasterImage::from_fn(w, h, |x, y| {
        let v = x.wrapping_mul(31) ^ y.wrapping_mul(17) ^ salt;
        [v as u8, (v >> 3) as u8, (x + y) as u8, 255]
    })
    .unwrap()
}

fn library() -> Arc<SourceLibrary> {
    let mut lib = SourceLibrary::new();
    lib.insert("a", textured(100, 100, 1));
    lib.insert("b", textured(100, 100, 2));
    lib.insert("c", textured(100, 80, 3));
    Arc::new(lib)
}

fn renderer(backend: BackendKind, screen: ScreenSpec) -> Renderer {
    Renderer::new(backend, screen, library())
}

fn two_photos() -> SceneDocument {
    let mut scene = SceneDocument::new(0);
    scene.add_photo(PhotoObject::new("a", "a", Point::new(200.0, 200.0))).unwrap();
    scene.add_photo(PhotoObject::new("b", "b", Point::new(600.0, 400.0))).unwrap();
    scene
}

#[test]
fn full_render_costs() {
    let scene = two_photos();
    let raster = renderer(BackendKind::Raster, ScreenSpec::standard());
    assert_eq!(raster.cost_full(&scene).unwrap().work_units, 786_432 + 20_000);
    let sg = renderer(BackendKind::SceneGraph, ScreenSpec::standard());
    assert_eq!(sg.cost_full(&scene).unwrap().work_units, 20_000);

    let (frame, cost) = raster.render_full(&SceneDocument::new(0)).unwrap();
    assert_eq!(cost.work_units, 786_432);
    assert!(frame.pixels().iter().all(|&b| b == 255));
}

#[test]
fn drag_cost_per_frame() {
    let screen = ScreenSpec::standard();
    for (backend, effect, expected) in [
        (BackendKind::Raster, None, 16_000),
        (BackendKind::Raster, Some(EffectSpec::Invert), 24_000),
        (BackendKind::SceneGraph, None, 16_000),
        (BackendKind::SceneGraph, Some(EffectSpec::Invert), 16_000),
    ] {
        let mut photo = PhotoObject::new("c", "c", Point::new(300.0, 300.0));
        photo.effects.extend(effect);
        let mut scene = SceneDocument::new(0);
        scene.add_photo(photo).unwrap();
        let mut engine = Engine::new(renderer(backend, screen), scene).cost_only();
        engine.begin_interaction("c").unwrap();
        let cost = engine.update_interaction(Point::new(305.0, 302.0)).unwrap();
        assert_eq!(cost.work_units, expected, "{backend:?}");
        assert_eq!(cost.frames, 1);
    }
}

#[test]
fn raster_begin_pays_one_full_render() {
    let scene = two_photos();
    let r = renderer(BackendKind::Raster, ScreenSpec::standard());
    let full = r.cost_full(&scene).unwrap();
    let mut engine = Engine::new(r, scene);
    assert_eq!(engine.begin_interaction("a").unwrap(), full);
}

#[test]
fn update_frames_match_fresh_renders_for_topmost() {
    for backend in BackendKind::ALL {
        let screen = ScreenSpec::fit(800, 500);
        let mut scene = two_photos();
        scene.add_photo(PhotoObject::new("c", "c", Point::new(250.0, 230.0))).unwrap();
        let mut engine = Engine::new(renderer(backend, screen), scene);
        engine.render().unwrap();
        engine.begin_interaction("c").unwrap();
        let (first, _) = engine.renderer().render_full(engine.scene()).unwrap();
        assert_eq!(engine.frame().unwrap(), &first, "{backend:?}");
        for step in 1..=6 {
            let center = Point::new(250.0 + 37.5 * step as f64, 230.0 + 21.25 * step as f64);
            engine.update_interaction(center).unwrap();
            let (fresh, _) = engine.renderer().render_full(engine.scene()).unwrap();
            assert_eq!(engine.frame().unwrap(), &fresh, "{backend:?} step {step}");
        }
        engine.end_interaction().unwrap();
        let (fresh, _) = engine.renderer().render_full(engine.scene()).unwrap();
        assert_eq!(engine.frame().unwrap(), &fresh);
        assert_eq!(engine.scene().get("c").unwrap().center, Point::new(475.0, 357.5));
    }
}

#[test]
fn end_after_dragging_a_lower_photo_matches_fresh_render() {
    let mut engine = Engine::new(renderer(BackendKind::SceneGraph, ScreenSpec::standard()), two_photos());
    engine.render().unwrap();
    engine.begin_interaction("a").unwrap();
    engine.update_interaction(Point::new(580.0, 390.0)).unwrap();
    engine.end_interaction().unwrap();
    let (fresh, _) = engine.renderer().render_full(engine.scene()).unwrap();
    assert_eq!(engine.frame().unwrap(), &fresh);
}

#[test]
fn session_errors() {
    let mut engine = Engine::new(renderer(BackendKind::Raster, ScreenSpec::standard()), two_photos()).cost_only();
    assert!(matches!(engine.begin_interaction("zzz"), Err(EngineError::UnknownPhoto(_))));
    assert!(matches!(engine.end_interaction(), Err(EngineError::NoSession)));
    assert!(matches!(engine.update_interaction(Point::new(0.0, 0.0)), Err(EngineError::NoSession)));
    engine.begin_interaction("a").unwrap();
    assert!(matches!(engine.begin_interaction("b"), Err(EngineError::SessionActive(_))));
    assert!(matches!(engine.apply_effect("a", EffectSpec::Invert), Err(EngineError::SessionActive(_))));
    engine.end_interaction().unwrap();
    assert!(matches!(engine.end_interaction(), Err(EngineError::NoSession)));
}

#[test]
fn incremental_edits_match_fresh_renders() {
    for backend in [BackendKind::Raster, BackendKind::SceneGraph] {
        let mut engine = Engine::new(renderer(backend, ScreenSpec::fit(640, 480)), two_photos());
        engine.render().unwrap();
        engine.add_photo(PhotoObject::new("c", "c", Point::new(240.0, 220.0))).unwrap();
        engine.apply_effect("a", EffectSpec::Sepia).unwrap();
        engine.transform("c", TransformAction::Rotate(33.0)).unwrap();
        engine.transform("b", TransformAction::Scale(1.7)).unwrap();
        engine.crop("b", photocomp::IntRect::new(10, 10, 60, 50)).unwrap();
        engine.send_to_back("c").unwrap();
        engine.bring_to_front("a").unwrap();
        engine.remove_photo("b").unwrap();
        let (fresh, _) = engine.renderer().render_full(engine.scene()).unwrap();
        assert_eq!(engine.frame().unwrap(), &fresh, "{backend:?}");
    }
}

#[test]
fn cost_only_mode_charges_the_same() {
    let ops = |engine: &mut Engine| {
        let mut total = vec![engine.render().unwrap()];
        total.push(engine.apply_effect("a", EffectSpec::Grayscale).unwrap());
        total.push(engine.transform("b", TransformAction::Rotate(70.0)).unwrap());
        total.push(engine.crop("a", photocomp::IntRect::new(0, 0, 50, 50)).unwrap());
        total
    };
    for backend in BackendKind::ALL {
        let mut full = Engine::new(renderer(backend, ScreenSpec::standard()), two_photos());
        let mut cheap = Engine::new(renderer(backend, ScreenSpec::standard()), two_photos()).cost_only();
        assert_eq!(ops(&mut full), ops(&mut cheap));
        assert!(cheap.frame().is_none());
    }
}

#[test]
fn unsupported_effect_without_service_is_an_error() {
    let mut engine = Engine::new(renderer(BackendKind::Legacy, ScreenSpec::standard()), two_photos());
    assert!(engine.apply_effect("a", EffectSpec::Sepia).is_err());
    assert!(engine.scene().get("a").unwrap().effects.is_empty());
}
