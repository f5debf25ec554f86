use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use photocomp::effects::apply_effect_with;
use photocomp::harness::pool::{detailed, exp_a_library};
use photocomp::{BackendKind, EffectSpec, Exec, PhotoObject, Point, Renderer, SceneDocument, ScreenSpec, Size};

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn effects(c: &mut Criterion) {
    let img = detailed(Size::new(1280, 720), 1);
    let mut group = c.benchmark_group("effects_1280x720");
    for spec in [EffectSpec::Grayscale, EffectSpec::Hue { degrees: 90.0 }, EffectSpec::Blur, EffectSpec::Sharpen] {
        for (name, exec) in POLICIES {
            group.bench_with_input(BenchmarkId::new(spec.kind().name(), name), &exec, |b, &exec| {
                b.iter(|| apply_effect_with(exec, black_box(&img), &spec).unwrap())
            });
        }
    }
    group.finish();
}

fn render_full(c: &mut Criterion) {
    let lib = Arc::new(exp_a_library(1));
    let mut scene = SceneDocument::new(0);
    for (i, key) in ["b1280x720", "f900x600", "b576x384", "b480x360"].into_iter().enumerate() {
        let mut p = PhotoObject::new(format!("p{i}"), key, Point::new(200.0 + 180.0 * i as f64, 380.0));
        p.angle = 17.0 * i as f64;
        p.scale = 0.6;
        p.effects.push(EffectSpec::Sepia);
        scene.add_photo(p).unwrap();
    }
    let mut group = c.benchmark_group("render_full_1920x1200");
    group.sample_size(20);
    for (name, exec) in POLICIES {
        let renderer = Renderer::new(BackendKind::Raster, ScreenSpec::fit(1920, 1200), lib.clone()).with_exec(exec);
        group.bench_function(name, |b| b.iter(|| renderer.render_full(black_box(&scene)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, effects, render_full);
criterion_main!(benches);
