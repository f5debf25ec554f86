//! Binary PPM (P6, maxval 255) codec.

use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::image::RasterImage;

#[derive(Debug, Error)]
pub enum PpmError {
    #[error("wrong magic number {0:?}, expected P6")]
    WrongMagic(String),
    #[error("malformed header: {0}")]
    MalformedHeader(&'static str),
    #[error("unsupported maxval {0}, only 255 is accepted")]
    UnsupportedMaxval(u32),
    #[error("truncated pixel data: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn load_ppm(path: impl AsRef<Path>) -> Result<RasterImage, PpmError> {
    decode_ppm(&fs::read(path)?)
}

pub fn save_ppm(image: &RasterImage, path: impl AsRef<Path>) -> Result<(), PpmError> {
    fs::write(path, encode_ppm(image))?;
    Ok(())
}

/// Serialize to P6 bytes, dropping alpha.
pub fn encode_ppm(image: &RasterImage) -> Vec<u8> {
    let header = format!("P6\n{} {}\n255\n", image.width(), image.height());
    let mut out = Vec::with_capacity(header.len() + image.area() as usize * 3);
    out.extend_from_slice(header.as_bytes());
    for px in image.pixels().chunks_exact(4) {
        out.extend_from_slice(&px[..3]);
    }
    out
}

struct Header<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Header<'_> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &'static str) -> Result<u32, PpmError> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(PpmError::MalformedHeader(what));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(PpmError::MalformedHeader(what))
    }
}

pub fn decode_ppm(bytes: &[u8]) -> Result<RasterImage, PpmError> {
    if bytes.len() < 2 {
        return Err(PpmError::MalformedHeader("missing magic number"));
    }
    if &bytes[..2] != b"P6" {
        return Err(PpmError::WrongMagic(String::from_utf8_lossy(&bytes[..2]).into_owned()));
    }
    let mut header = Header { bytes, pos: 2 };
    if !header.bytes.get(2).is_some_and(|b| b.is_ascii_whitespace() || *b == b'#') {
        return Err(PpmError::MalformedHeader("no separator after magic number"));
    }
    let width = header.number("width")?;
    let height = header.number("height")?;
    let maxval = header.number("maxval")?;
    if width == 0 || height == 0 {
        return Err(PpmError::MalformedHeader("zero dimension"));
    }
    if maxval != 255 {
        return Err(PpmError::UnsupportedMaxval(maxval));
    }
    // exactly one whitespace byte separates maxval from the raster
    match bytes.get(header.pos) {
        Some(b) if b.is_ascii_whitespace() => header.pos += 1,
        _ => return Err(PpmError::MalformedHeader("no separator before pixel data")),
    }
    let payload = &bytes[header.pos..];
    let expected = width as usize * height as usize * 3;
    if payload.len() < expected {
        return Err(PpmError::Truncated { expected, found: payload.len() });
    }
    let mut pixels = Vec::with_capacity(width as usize * height as usize * 4);
    for rgb in payload[..expected].chunks_exact(3) {
        pixels.extend_from_slice(&[rgb[0], rgb[1], rgb[2], 255]);
    }
    RasterImage::from_rgba(width, height, pixels)
        .map_err(|_| PpmError::MalformedHeader("dimensions overflow"))
}
