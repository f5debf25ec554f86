use base64::engine::general_purpose::STANDARD as B64;
use base64::Engine as _;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::image::RasterImage;
use crate::ppm::{decode_ppm, encode_ppm};

/// Fixed error-code table of the envelope protocol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ErrorCode {
    UnknownOp = 4001,
    MalformedArgs = 4002,
    UnknownEffect = 4003,
    UndecodableImage = 4004,
    Internal = 5001,
}

impl ErrorCode {
    pub fn code(self) -> u16 {
        self as u16
    }

    pub fn from_code(code: u16) -> Option<Self> {
        [Self::UnknownOp, Self::MalformedArgs, Self::UnknownEffect, Self::UndecodableImage, Self::Internal]
            .into_iter()
            .find(|c| c.code() == code)
    }
}

/// Image argument: inline base64 P6 payload, or a key into the service's store.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ImageRef {
    Inline(String),
    Stored { key: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Request {
    pub op: String,
    #[serde(default)]
    pub args: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub image: Option<ImageRef>,
}

impl Request {
    pub fn new(op: impl Into<String>, args: Value, image: Option<ImageRef>) -> Self {
        Self { op: op.into(), args, image }
    }

    pub fn ping() -> Self {
        Self::new("ping", Value::Object(Default::default()), None)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Response {
    pub status: Status,
    pub error_code: Option<u16>,
    pub message: String,
    pub payload: Option<Value>,
}

impl Response {
    pub fn ok(payload: Value) -> Self {
        Self { status: Status::Ok, error_code: None, message: "ok".into(), payload: Some(payload) }
    }

    pub fn error(code: ErrorCode, message: impl Into<String>) -> Self {
        let message = message.into();
        Self {
            status: Status::Error,
            error_code: Some(code.code()),
            message: format!("error {}: {message}", code.code()),
            payload: None,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }
}

/// Image as carried on the wire: P6 bytes plus, when any pixel is not fully
/// opaque, the alpha plane that P6 cannot hold.
#[derive(Clone, Debug, PartialEq)]
pub struct WireImage {
    pub ppm_b64: String,
    pub alpha_b64: Option<String>,
}

impl WireImage {
    pub fn encode(image: &RasterImage) -> Self {
        Self {
            ppm_b64: B64.encode(encode_ppm(image)),
            alpha_b64: (!image.is_opaque()).then(|| B64.encode(image.alpha_plane())),
        }
    }

    /// Decode; `None` means the payload or its alpha plane is unusable.
    pub fn decode(&self) -> Option<RasterImage> {
        let bytes = B64.decode(self.ppm_b64.as_bytes()).ok()?;
        let image = decode_ppm(&bytes).ok()?;
        match &self.alpha_b64 {
            None => Some(image),
            Some(a) => {
                let alpha = B64.decode(a.as_bytes()).ok()?;
                image.with_alpha_plane(&alpha).ok()
            }
        }
    }
}
