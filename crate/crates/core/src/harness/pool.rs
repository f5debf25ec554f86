//! Synthetic source images: a detailed class ("b", textured noise over a
//! gradient) and a flat class ("f", a few large uniform blocks).

use crate::geometry::Size;
use crate::image::RasterImage;
use crate::render::SourceLibrary;

use super::rng::SplitMix64;
use super::simplan::{LARGE_SOURCE, SMALL_SOURCE};

/// The four application-time sizes.
pub const EXP_SIZES: [Size; 4] = [
    Size { w: 480, h: 360 },
    Size { w: 576, h: 384 },
    Size { w: 900, h: 600 },
    Size { w: 1280, h: 720 },
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ImageClass {
    Detailed,
    Flat,
}

impl ImageClass {
    pub const ALL: [ImageClass; 2] = [ImageClass::Detailed, ImageClass::Flat];

    pub fn tag(self) -> &'static str {
        match self {
            ImageClass::Detailed => "b",
            ImageClass::Flat => "f",
        }
    }
}

/// Library key, e.g. `b900x600`.
pub fn image_key(class: ImageClass, size: Size) -> String {
    format!("{}{}x{}", class.tag(), size.w, size.h)
}

fn hash(seed: u64, x: u32, y: u32) -> u64 {
    SplitMix64::nth(seed ^ ((x as u64) << 32 | y as u64), 1)
}

pub fn detailed(size: Size, seed: u64) -> RasterImage {
    RasterImage::from_fn(size.w, size.h, |x, y| {
        let n = hash(seed, x, y);
        let gx = (x * 255 / size.w.max(1)) as i32;
        let gy = (y * 255 / size.h.max(1)) as i32;
        let jitter = |shift: u32| ((n >> shift) & 0x3f) as i32 - 32;
        let c = |v: i32| v.clamp(0, 255) as u8;
        [c(gx + jitter(0)), c(gy + jitter(8)), c((gx + gy) / 2 + jitter(16)), 255]
    })
    .expect("source sizes are non-empty")
}

pub fn flat(size: Size, seed: u64) -> RasterImage {
    let palette: Vec<[u8; 4]> = (1..=4)
        .map(|k| {
            let v = SplitMix64::nth(seed, k);
            [v as u8, (v >> 8) as u8, (v >> 16) as u8, 255]
        })
        .collect();
    RasterImage::from_fn(size.w, size.h, |x, y| {
        let qx = (2 * x / size.w.max(1)) as usize;
        let qy = (2 * y / size.h.max(1)) as usize;
        palette[qy * 2 + qx]
    })
    .expect("source sizes are non-empty")
}

pub fn generate(class: ImageClass, size: Size, seed: u64) -> RasterImage {
    match class {
        ImageClass::Detailed => detailed(size, seed),
        ImageClass::Flat => flat(size, seed),
    }
}

/// Both classes at every application-time size.
pub fn exp_a_library(seed: u64) -> SourceLibrary {
    let mut lib = SourceLibrary::new();
    for size in EXP_SIZES {
        for class in ImageClass::ALL {
            lib.insert(image_key(class, size), generate(class, size, seed));
        }
    }
    lib
}

/// Key of the `j`-th pool image at `size`.
pub fn pool_key(size: Size, j: usize) -> String {
    format!("pool{}x{}-{j:02}", size.w, size.h)
}

/// `per_size` detailed photos at each of the two simulation sizes.
pub fn sim_pool(per_size: usize, seed: u64) -> SourceLibrary {
    let mut lib = SourceLibrary::new();
    for size in [SMALL_SOURCE, LARGE_SOURCE] {
        for j in 0..per_size {
            lib.insert(pool_key(size, j), detailed(size, seed.wrapping_add(j as u64)));
        }
    }
    lib
}
