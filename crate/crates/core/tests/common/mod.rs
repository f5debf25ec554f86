#![allow(dead_code)]

use photocomp::harness::SplitMix64;
use photocomp::{EffectKind, EffectSpec, IntRect, RasterImage};

pub fn random_image(rng: &mut SplitMix64, max_side: u32, opaque: bool) -> RasterImage {
    let w = 1 + (rng.next_u64() % max_side as u64) as u32;
    let h = 1 + (rng.next_u64() % max_side as u64) as u32;
    let mut pixels = vec![0u8; (w * h * 4) as usize];
    for (i, b) in pixels.iter_mut().enumerate() {
        *b = if opaque && i % 4 == 3 { 255 } else { rng.next_u64() as u8 };
    }
    RasterImage::from_rgba(w, h, pixels).unwrap()
}

/// A valid effect of `kind` with randomized parameters.
pub fn sample_spec(kind: EffectKind, rng: &mut SplitMix64) -> EffectSpec {
    let u = rng.next_f64();
    match kind {
        EffectKind::Grayscale => EffectSpec::Grayscale,
        EffectKind::Invert => EffectSpec::Invert,
        EffectKind::Sepia => EffectSpec::Sepia,
        EffectKind::Brightness => EffectSpec::Brightness { delta: (u * 510.0 - 255.0).round() },
        EffectKind::Contrast => EffectSpec::Contrast { factor: u * 3.0 },
        EffectKind::Hue => EffectSpec::Hue { degrees: u * 720.0 - 360.0 },
        EffectKind::Saturate => EffectSpec::Saturate { factor: u * 2.5 },
        EffectKind::Desaturate => EffectSpec::Desaturate,
        EffectKind::BlackWhite => EffectSpec::BlackWhite { threshold: (u * 255.0).round() },
        EffectKind::Blur => EffectSpec::Blur,
        EffectKind::Sharpen => EffectSpec::Sharpen,
        EffectKind::Emboss => EffectSpec::Emboss,
        EffectKind::Opacity => EffectSpec::Opacity { alpha: u },
        EffectKind::FlipH => EffectSpec::FlipH,
        EffectKind::FlipV => EffectSpec::FlipV,
        EffectKind::Border => EffectSpec::Border {
            width: (u * 6.0) as u32,
            color: [rng.next_u64() as u8, rng.next_u64() as u8, rng.next_u64() as u8, 255],
        },
        EffectKind::RedEye => EffectSpec::RedEye { region: IntRect::new(2, 1, 1 + (u * 40.0) as i64, 30) },
    }
}
