//! Pixel effects: per-pixel color transforms, 3×3 convolutions, flips,
//! border and red-eye. Every backend and the processing service share these
//! definitions, so an effect gives the same bytes wherever it runs.

mod color;
mod kernel;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{IntRect, Size};
use crate::image::RasterImage;
use crate::par::{self, Exec};
use crate::{clamp_u8, round_half_up};

pub use kernel::{convolve3x3, convolve3x3_with, Kernel3x3};

// Largest accepted border, keeps a typo from allocating gigabytes.
pub const MAX_BORDER_WIDTH: u32 = 4096;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EffectError {
    #[error("{kind} parameter `{param}` = {value} is out of range")]
    ParamOutOfRange { kind: EffectKind, param: &'static str, value: f64 },
    #[error("kernel divisor must be non-zero")]
    ZeroDivisor,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown effect kind `{0}`")]
pub struct UnknownEffectKind(pub String);

/// The effect kinds, without parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EffectKind {
    Grayscale,
    Invert,
    Sepia,
    Brightness,
    Contrast,
    Hue,
    Saturate,
    Desaturate,
    BlackWhite,
    Blur,
    Sharpen,
    Emboss,
    Opacity,
    FlipH,
    FlipV,
    Border,
    RedEye,
}

impl EffectKind {
    pub const ALL: [EffectKind; 17] = [
        EffectKind::Grayscale,
        EffectKind::Invert,
        EffectKind::Sepia,
        EffectKind::Brightness,
        EffectKind::Contrast,
        EffectKind::Hue,
        EffectKind::Saturate,
        EffectKind::Desaturate,
        EffectKind::BlackWhite,
        EffectKind::Blur,
        EffectKind::Sharpen,
        EffectKind::Emboss,
        EffectKind::Opacity,
        EffectKind::FlipH,
        EffectKind::FlipV,
        EffectKind::Border,
        EffectKind::RedEye,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EffectKind::Grayscale => "grayscale",
            EffectKind::Invert => "invert",
            EffectKind::Sepia => "sepia",
            EffectKind::Brightness => "brightness",
            EffectKind::Contrast => "contrast",
            EffectKind::Hue => "hue",
            EffectKind::Saturate => "saturate",
            EffectKind::Desaturate => "desaturate",
            EffectKind::BlackWhite => "blackwhite",
            EffectKind::Blur => "blur",
            EffectKind::Sharpen => "sharpen",
            EffectKind::Emboss => "emboss",
            EffectKind::Opacity => "opacity",
            EffectKind::FlipH => "flip_h",
            EffectKind::FlipV => "flip_v",
            EffectKind::Border => "border",
            EffectKind::RedEye => "redeye",
        }
    }
}

impl fmt::Display for EffectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EffectKind {
    type Err = UnknownEffectKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EffectKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownEffectKind(s.to_owned()))
    }
}

/// One effect with its parameters. Serialized as `{"kind": "...", ...params}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum EffectSpec {
    #[serde(rename = "grayscale")]
    Grayscale,
    #[serde(rename = "invert")]
    Invert,
    #[serde(rename = "sepia")]
    Sepia,
    /// Additive shift of every RGB channel, in [−255, 255].
    #[serde(rename = "brightness")]
    Brightness { delta: f64 },
    /// Scale of the distance from mid-gray, ≥ 0.
    #[serde(rename = "contrast")]
    Contrast { factor: f64 },
    /// Hue rotation in degrees.
    #[serde(rename = "hue")]
    Hue { degrees: f64 },
    /// HSL saturation multiplier, ≥ 0.
    #[serde(rename = "saturate")]
    Saturate { factor: f64 },
    #[serde(rename = "desaturate")]
    Desaturate,
    /// Binarize on luma; threshold in [0, 255].
    #[serde(rename = "blackwhite")]
    BlackWhite { threshold: f64 },
    #[serde(rename = "blur")]
    Blur,
    #[serde(rename = "sharpen")]
    Sharpen,
    #[serde(rename = "emboss")]
    Emboss,
    /// Alpha multiplier in [0, 1].
    #[serde(rename = "opacity")]
    Opacity { alpha: f64 },
    #[serde(rename = "flip_h")]
    FlipH,
    #[serde(rename = "flip_v")]
    FlipV,
    /// Solid frame `width` px wide on every side.
    #[serde(rename = "border")]
    Border { width: u32, color: [u8; 4] },
    /// Red-eye reduction restricted to `region` (image coordinates).
    #[serde(rename = "redeye")]
    RedEye { region: IntRect },
}

// Hand-written so that parameterless kinds reject stray fields too.
impl<'de> Deserialize<'de> for EffectSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        use serde_json::{Map, Value};

        fn take<T: serde::de::DeserializeOwned, E: serde::de::Error>(map: &mut Map<String, Value>, name: &'static str) -> Result<T, E> {
            let v = map.remove(name).ok_or_else(|| E::missing_field(name))?;
            serde_json::from_value(v).map_err(|e| E::custom(format!("field `{name}`: {e}")))
        }

        let mut map = Map::<String, Value>::deserialize(d)?;
        let kind = match map.remove("kind") {
            Some(Value::String(k)) => k,
            Some(_) => return Err(D::Error::custom("`kind` must be a string")),
            None => return Err(D::Error::missing_field("kind")),
        };
        let kind: EffectKind = kind.parse().map_err(|e: UnknownEffectKind| D::Error::custom(format!("unknown variant `{}`", e.0)))?;
        let m = &mut map;
        let spec = match kind {
            EffectKind::Grayscale => EffectSpec::Grayscale,
            EffectKind::Invert => EffectSpec::Invert,
            EffectKind::Sepia => EffectSpec::Sepia,
            EffectKind::Brightness => EffectSpec::Brightness { delta: take(m, "delta")? },
            EffectKind::Contrast => EffectSpec::Contrast { factor: take(m, "factor")? },
            EffectKind::Hue => EffectSpec::Hue { degrees: take(m, "degrees")? },
            EffectKind::Saturate => EffectSpec::Saturate { factor: take(m, "factor")? },
            EffectKind::Desaturate => EffectSpec::Desaturate,
            EffectKind::BlackWhite => EffectSpec::BlackWhite { threshold: take(m, "threshold")? },
            EffectKind::Blur => EffectSpec::Blur,
            EffectKind::Sharpen => EffectSpec::Sharpen,
            EffectKind::Emboss => EffectSpec::Emboss,
            EffectKind::Opacity => EffectSpec::Opacity { alpha: take(m, "alpha")? },
            EffectKind::FlipH => EffectSpec::FlipH,
            EffectKind::FlipV => EffectSpec::FlipV,
            EffectKind::Border => EffectSpec::Border { width: take(m, "width")?, color: take(m, "color")? },
            EffectKind::RedEye => EffectSpec::RedEye { region: take(m, "region")? },
        };
        if let Some(extra) = map.keys().next() {
            return Err(D::Error::custom(format!("unknown field `{extra}`")));
        }
        Ok(spec)
    }
}

impl EffectSpec {
    pub fn kind(&self) -> EffectKind {
        match self {
            EffectSpec::Grayscale => EffectKind::Grayscale,
            EffectSpec::Invert => EffectKind::Invert,
            EffectSpec::Sepia => EffectKind::Sepia,
            EffectSpec::Brightness { .. } => EffectKind::Brightness,
            EffectSpec::Contrast { .. } => EffectKind::Contrast,
            EffectSpec::Hue { .. } => EffectKind::Hue,
            EffectSpec::Saturate { .. } => EffectKind::Saturate,
            EffectSpec::Desaturate => EffectKind::Desaturate,
            EffectSpec::BlackWhite { .. } => EffectKind::BlackWhite,
            EffectSpec::Blur => EffectKind::Blur,
            EffectSpec::Sharpen => EffectKind::Sharpen,
            EffectSpec::Emboss => EffectKind::Emboss,
            EffectSpec::Opacity { .. } => EffectKind::Opacity,
            EffectSpec::FlipH => EffectKind::FlipH,
            EffectSpec::FlipV => EffectKind::FlipV,
            EffectSpec::Border { .. } => EffectKind::Border,
            EffectSpec::RedEye { .. } => EffectKind::RedEye,
        }
    }

    pub fn validate(&self) -> Result<(), EffectError> {
        let kind = self.kind();
        let check = |param: &'static str, value: f64, ok: bool| {
            if ok && value.is_finite() {
                Ok(())
            } else {
                Err(EffectError::ParamOutOfRange { kind, param, value })
            }
        };
        match *self {
            EffectSpec::Brightness { delta } => check("delta", delta, (-255.0..=255.0).contains(&delta)),
            EffectSpec::Contrast { factor } => check("factor", factor, factor >= 0.0),
            EffectSpec::Hue { degrees } => check("degrees", degrees, true),
            EffectSpec::Saturate { factor } => check("factor", factor, factor >= 0.0),
            EffectSpec::BlackWhite { threshold } => {
                check("threshold", threshold, (0.0..=255.0).contains(&threshold))
            }
            EffectSpec::Opacity { alpha } => check("alpha", alpha, (0.0..=1.0).contains(&alpha)),
            EffectSpec::Border { width, .. } => check("width", width as f64, width <= MAX_BORDER_WIDTH),
            EffectSpec::RedEye { region } => {
                check("region", region.w.min(region.h) as f64, !region.is_empty())
            }
            _ => Ok(()),
        }
    }

    /// Output dimensions for an input of `input`.
    pub fn output_size(&self, input: Size) -> Size {
        match *self {
            EffectSpec::Border { width, .. } => Size::new(input.w + 2 * width, input.h + 2 * width),
            _ => input,
        }
    }

    /// Pixels the effect writes: its output area.
    pub fn pixels_written(&self, input: Size) -> u64 {
        self.output_size(input).area()
    }
}

/// BT.601 luma, round half-up, in exact integer arithmetic.
#[inline]
pub fn luma(r: u8, g: u8, b: u8) -> u8 {
    ((299 * r as u32 + 587 * g as u32 + 114 * b as u32 + 500) / 1000) as u8
}

#[inline]
fn sepia(r: u8, g: u8, b: u8) -> [u8; 3] {
    let (r, g, b) = (r as u32, g as u32, b as u32);
    let ch = |wr: u32, wg: u32, wb: u32| ((wr * r + wg * g + wb * b + 500) / 1000).min(255) as u8;
    [ch(393, 769, 189), ch(349, 686, 168), ch(272, 534, 131)]
}

fn map_pixels<F>(exec: Exec, image: &RasterImage, f: F) -> RasterImage
where
    F: Fn([u8; 4]) -> [u8; 4] + Send + Sync,
{
    let mut out = image.clone();
    let row_len = out.row_len();
    par::for_each_row(exec, out.pixels_mut(), row_len, |_, row| {
        for px in row.chunks_exact_mut(4) {
            let mapped = f([px[0], px[1], px[2], px[3]]);
            px.copy_from_slice(&mapped);
        }
    });
    out
}

fn map_rgb<F>(exec: Exec, image: &RasterImage, f: F) -> RasterImage
where
    F: Fn(u8, u8, u8) -> [u8; 3] + Send + Sync,
{
    map_pixels(exec, image, |[r, g, b, a]| {
        let [r, g, b] = f(r, g, b);
        [r, g, b, a]
    })
}

fn flip_h(exec: Exec, image: &RasterImage) -> RasterImage {
    let mut out = image.clone();
    let row_len = out.row_len();
    par::for_each_row(exec, out.pixels_mut(), row_len, |_, row| {
        let n = row.len() / 4;
        for x in 0..n / 2 {
            for c in 0..4 {
                row.swap(x * 4 + c, (n - 1 - x) * 4 + c);
            }
        }
    });
    out
}

fn flip_v(image: &RasterImage) -> RasterImage {
    let row_len = image.row_len();
    let pixels: Vec<u8> = image.pixels().chunks_exact(row_len).rev().flatten().copied().collect();
    RasterImage::from_rgba(image.width(), image.height(), pixels).expect("same dimensions")
}

fn border(image: &RasterImage, width: u32, color: [u8; 4]) -> RasterImage {
    let (w, h) = (image.width(), image.height());
    let mut out = RasterImage::filled(w + 2 * width, h + 2 * width, color).expect("non-empty");
    let dst_row = out.row_len();
    let src_row = image.row_len();
    for (y, src) in image.pixels().chunks_exact(src_row).enumerate() {
        let start = (y + width as usize) * dst_row + width as usize * 4;
        out.pixels_mut()[start..start + src_row].copy_from_slice(src);
    }
    out
}

fn red_eye(image: &RasterImage, region: IntRect) -> RasterImage {
    let mut out = image.clone();
    let bounds = Size::new(image.width(), image.height()).bounds();
    let Some(r) = region.intersect(&bounds) else {
        return out;
    };
    for y in r.y..r.bottom() {
        for x in r.x..r.right() {
            let [red, g, b, a] = out.get(x as u32, y as u32);
            // R > 1.5·max(G, B), kept in integers
            if 2 * red as u32 > 3 * g.max(b) as u32 {
                let fixed = (g as u32 + b as u32).div_ceil(2) as u8;
                out.put(x as u32, y as u32, [fixed, g, b, a]);
            }
        }
    }
    out
}

/// Apply one effect. Dimensions are preserved except by `border`.
pub fn apply_effect(image: &RasterImage, spec: &EffectSpec) -> Result<RasterImage, EffectError> {
    apply_effect_with(Exec::auto(), image, spec)
}

pub fn apply_effect_with(exec: Exec, image: &RasterImage, spec: &EffectSpec) -> Result<RasterImage, EffectError> {
    spec.validate()?;
    let out = match *spec {
        EffectSpec::Grayscale | EffectSpec::Desaturate => map_rgb(exec, image, |r, g, b| {
            let y = luma(r, g, b);
            [y, y, y]
        }),
        EffectSpec::Invert => map_rgb(exec, image, |r, g, b| [255 - r, 255 - g, 255 - b]),
        EffectSpec::Sepia => map_rgb(exec, image, sepia),
        EffectSpec::Brightness { delta } => {
            let f = |c: u8| clamp_u8(round_half_up(c as f64 + delta));
            map_rgb(exec, image, move |r, g, b| [f(r), f(g), f(b)])
        }
        EffectSpec::Contrast { factor } => {
            let f = |c: u8| clamp_u8(round_half_up((c as f64 - 128.0) * factor + 128.0));
            map_rgb(exec, image, move |r, g, b| [f(r), f(g), f(b)])
        }
        EffectSpec::Hue { degrees } => map_rgb(exec, image, move |r, g, b| {
            let (h, s, l) = color::rgb_to_hsl(r, g, b);
            let (r, g, b) = color::hsl_to_rgb(color::wrap_hue(h + degrees), s, l);
            [r, g, b]
        }),
        EffectSpec::Saturate { factor } => map_rgb(exec, image, move |r, g, b| {
            let (h, s, l) = color::rgb_to_hsl(r, g, b);
            let (r, g, b) = color::hsl_to_rgb(h, (s * factor).clamp(0.0, 1.0), l);
            [r, g, b]
        }),
        EffectSpec::BlackWhite { threshold } => map_rgb(exec, image, move |r, g, b| {
            let v = if luma(r, g, b) as f64 >= threshold { 255 } else { 0 };
            [v, v, v]
        }),
        EffectSpec::Blur => convolve3x3_with(exec, image, &Kernel3x3::box_blur()),
        EffectSpec::Sharpen => convolve3x3_with(exec, image, &Kernel3x3::sharpen()),
        EffectSpec::Emboss => convolve3x3_with(exec, image, &Kernel3x3::emboss()),
        EffectSpec::Opacity { alpha } => map_pixels(exec, image, move |[r, g, b, a]| {
            [r, g, b, clamp_u8(round_half_up(a as f64 * alpha))]
        }),
        EffectSpec::FlipH => flip_h(exec, image),
        EffectSpec::FlipV => flip_v(image),
        EffectSpec::Border { width, color } => border(image, width, color),
        EffectSpec::RedEye { region } => red_eye(image, region),
    };
    Ok(out)
}

/// Left fold of [`apply_effect`]; the empty chain is the identity.
pub fn apply_chain(image: &RasterImage, effects: &[EffectSpec]) -> Result<RasterImage, EffectError> {
    apply_chain_with(Exec::auto(), image, effects)
}

pub fn apply_chain_with(
    exec: Exec,
    image: &RasterImage,
    effects: &[EffectSpec],
) -> Result<RasterImage, EffectError> {
    let mut current = image.clone();
    for spec in effects {
        current = apply_effect_with(exec, &current, spec)?;
    }
    Ok(current)
}

/// Output size of a whole chain.
pub fn chain_output_size(input: Size, effects: &[EffectSpec]) -> Size {
    effects.iter().fold(input, |size, e| e.output_size(size))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn px(rgba: [u8; 4]) -> RasterImage {
        RasterImage::from_rgba(1, 1, rgba.to_vec()).unwrap()
    }

    fn one(rgba: [u8; 4], spec: EffectSpec) -> [u8; 4] {
        apply_effect(&px(rgba), &spec).unwrap().get(0, 0)
    }

    #[test]
    fn invert_single_pixel() {
        assert_eq!(one([10, 20, 30, 255], EffectSpec::Invert), [245, 235, 225, 255]);
    }

    #[test]
    fn grayscale_red() {
        assert_eq!(one([255, 0, 0, 255], EffectSpec::Grayscale), [76, 76, 76, 255]);
    }

    #[test]
    fn sepia_mid_gray() {
        assert_eq!(one([100, 100, 100, 255], EffectSpec::Sepia), [135, 120, 94, 255]);
    }

    #[test]
    fn sepia_clamps() {
        assert_eq!(one([255, 255, 255, 255], EffectSpec::Sepia), [255, 255, 239, 255]);
    }

    #[test]
    fn hue_half_turn_of_red_is_cyan() {
        assert_eq!(one([255, 0, 0, 255], EffectSpec::Hue { degrees: 180.0 }), [0, 255, 255, 255]);
        assert_eq!(one([255, 0, 0, 255], EffectSpec::Hue { degrees: -180.0 }), [0, 255, 255, 255]);
    }

    #[test]
    fn blackwhite_extremes() {
        let bw = EffectSpec::BlackWhite { threshold: 128.0 };
        assert_eq!(one([255, 255, 255, 255], bw.clone()), [255, 255, 255, 255]);
        assert_eq!(one([0, 0, 0, 255], bw), [0, 0, 0, 255]);
    }

    #[test]
    fn brightness_and_contrast_clamp() {
        assert_eq!(one([250, 5, 100, 9], EffectSpec::Brightness { delta: 10.0 }), [255, 15, 110, 9]);
        assert_eq!(one([250, 5, 100, 9], EffectSpec::Brightness { delta: -10.0 }), [240, 0, 90, 9]);
        assert_eq!(one([200, 0, 128, 255], EffectSpec::Contrast { factor: 2.0 }), [255, 0, 128, 255]);
        // (129 − 128)·0.5 + 128 = 128.5 rounds up
        assert_eq!(one([129, 129, 129, 255], EffectSpec::Contrast { factor: 0.5 }), [129, 129, 129, 255]);
    }

    #[test]
    fn opacity_touches_alpha_only() {
        assert_eq!(one([1, 2, 3, 255], EffectSpec::Opacity { alpha: 0.5 }), [1, 2, 3, 128]);
        assert_eq!(one([1, 2, 3, 200], EffectSpec::Opacity { alpha: 0.0 }), [1, 2, 3, 0]);
    }

    #[test]
    fn saturate_zero_is_gray() {
        let [r, g, b, _] = one([200, 40, 90, 255], EffectSpec::Saturate { factor: 0.0 });
        assert!(r == g && g == b);
    }

    #[test]
    fn flips_mirror() {
        let img = RasterImage::from_fn(3, 2, |x, y| [x as u8, y as u8, 0, 255]).unwrap();
        let h = apply_effect(&img, &EffectSpec::FlipH).unwrap();
        assert_eq!(h.get(0, 1), [2, 1, 0, 255]);
        let v = apply_effect(&img, &EffectSpec::FlipV).unwrap();
        assert_eq!(v.get(0, 0), [0, 1, 0, 255]);
    }

    #[test]
    fn border_grows_by_twice_width() {
        let img = RasterImage::filled(4, 3, [9, 9, 9, 255]).unwrap();
        let out = apply_effect(&img, &EffectSpec::Border { width: 2, color: [255, 0, 0, 128] }).unwrap();
        assert_eq!((out.width(), out.height()), (8, 7));
        assert_eq!(out.get(0, 0), [255, 0, 0, 128]);
        assert_eq!(out.get(2, 2), [9, 9, 9, 255]);
        assert_eq!(out.get(5, 4), [9, 9, 9, 255]);
        assert_eq!(out.get(6, 4), [255, 0, 0, 128]);
        let spec = EffectSpec::Border { width: 2, color: [0; 4] };
        assert_eq!(spec.pixels_written(Size::new(4, 3)), 56);
    }

    #[test]
    fn redeye_only_inside_region() {
        let img = RasterImage::from_fn(2, 1, |_, _| [200, 40, 60, 255]).unwrap();
        let out = apply_effect(&img, &EffectSpec::RedEye { region: IntRect::new(0, 0, 1, 1) }).unwrap();
        assert_eq!(out.get(0, 0), [50, 40, 60, 255]);
        assert_eq!(out.get(1, 0), [200, 40, 60, 255]);
        // 90 is exactly 1.5·60: not strictly greater, left alone
        assert_eq!(one([90, 60, 10, 255], EffectSpec::RedEye { region: IntRect::new(0, 0, 1, 1) }), [90, 60, 10, 255]);
    }

    #[test]
    fn out_of_range_params_rejected() {
        let img = px([0, 0, 0, 255]);
        for spec in [
            EffectSpec::Brightness { delta: 256.0 },
            EffectSpec::Contrast { factor: -0.1 },
            EffectSpec::Saturate { factor: f64::NAN },
            EffectSpec::BlackWhite { threshold: 300.0 },
            EffectSpec::Opacity { alpha: 1.5 },
            EffectSpec::Hue { degrees: f64::INFINITY },
            EffectSpec::Border { width: MAX_BORDER_WIDTH + 1, color: [0; 4] },
            EffectSpec::RedEye { region: IntRect::new(0, 0, 0, 5) },
        ] {
            assert!(matches!(apply_effect(&img, &spec), Err(EffectError::ParamOutOfRange { .. })), "{spec:?}");
        }
    }

    #[test]
    fn chain_folds_left_to_right() {
        let img = px([10, 20, 30, 255]);
        assert_eq!(apply_chain(&img, &[]).unwrap(), img);
        assert_eq!(apply_chain(&img, &[EffectSpec::Invert, EffectSpec::Invert]).unwrap(), img);
        let a = apply_chain(&img, &[EffectSpec::Invert, EffectSpec::Grayscale]).unwrap();
        let b = apply_effect(&apply_effect(&img, &EffectSpec::Invert).unwrap(), &EffectSpec::Grayscale).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn json_shape() {
        let spec: EffectSpec = serde_json::from_str(r#"{"kind":"brightness","delta":20}"#).unwrap();
        assert_eq!(spec, EffectSpec::Brightness { delta: 20.0 });
        let border = EffectSpec::Border { width: 3, color: [1, 2, 3, 4] };
        assert_eq!(serde_json::to_string(&border).unwrap(), r#"{"kind":"border","width":3,"color":[1,2,3,4]}"#);
        assert!(serde_json::from_str::<EffectSpec>(r#"{"kind":"invert","x":1}"#).is_err());
        assert!(serde_json::from_str::<EffectSpec>(r#"{"kind":"xray"}"#).is_err());
    }

    #[test]
    fn kind_names_parse_back() {
        for kind in EffectKind::ALL {
            assert_eq!(kind.name().parse::<EffectKind>().unwrap(), kind);
        }
        assert!("xray".parse::<EffectKind>().is_err());
    }
}
