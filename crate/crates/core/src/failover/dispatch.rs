use std::panic::{catch_unwind, AssertUnwindSafe};

use serde_json::{json, Map, Value};

use crate::effects::{apply_effect, EffectKind, EffectSpec};
use crate::image::RasterImage;

use super::envelope::{ErrorCode, ImageRef, Request, Response, WireImage};
use super::store::{ImageStore, StoreError};

/// The one switch behind the endpoint: interprets a request envelope and
/// always answers with a response envelope, never a transport failure.
#[derive(Debug, Default)]
pub struct Dispatcher {
    store: Option<ImageStore>,
}

type Outcome = Result<Value, (ErrorCode, String)>;

impl Dispatcher {
    pub fn new() -> Self {
        Self { store: None }
    }

    pub fn with_store(store: ImageStore) -> Self {
        Self { store: Some(store) }
    }

    pub fn store(&self) -> Option<&ImageStore> {
        self.store.as_ref()
    }

    /// Parse, dispatch and serialize in one step.
    pub fn dispatch_json(&self, body: &str) -> String {
        let response = match serde_json::from_str::<Request>(body) {
            Ok(req) => self.dispatch(&req),
            Err(e) => Response::error(ErrorCode::MalformedArgs, format!("malformed envelope: {e}")),
        };
        serde_json::to_string(&response).expect("response serializes")
    }

    pub fn dispatch(&self, request: &Request) -> Response {
        let outcome = catch_unwind(AssertUnwindSafe(|| self.run(request)))
            .unwrap_or_else(|_| Err((ErrorCode::Internal, "request handler panicked".into())));
        match outcome {
            Ok(payload) => Response::ok(payload),
            Err((code, msg)) => Response::error(code, msg),
        }
    }

    fn run(&self, request: &Request) -> Outcome {
        match request.op.as_str() {
            "ping" => Ok(json!({ "pong": true })),
            "apply_effect" => self.apply(request),
            "store_put" => self.store_put(request),
            other => Err((ErrorCode::UnknownOp, format!("unknown op `{other}`"))),
        }
    }

    fn args<'a>(&self, request: &'a Request) -> Result<&'a Map<String, Value>, (ErrorCode, String)> {
        request.args.as_object().ok_or((ErrorCode::MalformedArgs, "args must be an object".into()))
    }

    fn load_image(&self, request: &Request, alpha: Option<String>) -> Result<RasterImage, (ErrorCode, String)> {
        match &request.image {
            None => Err((ErrorCode::MalformedArgs, "missing image".into())),
            Some(ImageRef::Inline(b64)) => WireImage { ppm_b64: b64.clone(), alpha_b64: alpha }
                .decode()
                .ok_or((ErrorCode::UndecodableImage, "image payload is not a base64 P6 image".into())),
            Some(ImageRef::Stored { key }) => {
                let store = self.store.as_ref().ok_or((ErrorCode::Internal, "service has no image store".into()))?;
                store.get(key).map_err(|e| match e {
                    StoreError::NotFound(_) | StoreError::Corrupt(_) => (ErrorCode::UndecodableImage, e.to_string()),
                    StoreError::InvalidKey(_) => (ErrorCode::MalformedArgs, e.to_string()),
                    StoreError::Io(_) => (ErrorCode::Internal, e.to_string()),
                })
            }
        }
    }

    fn apply(&self, request: &Request) -> Outcome {
        let args = self.args(request)?;
        let kind_name = args
            .get("effect")
            .and_then(Value::as_str)
            .ok_or((ErrorCode::MalformedArgs, "args.effect must name an effect".into()))?;
        kind_name
            .parse::<EffectKind>()
            .map_err(|e| (ErrorCode::UnknownEffect, e.to_string()))?;
        let alpha = match args.get("alpha") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return Err((ErrorCode::MalformedArgs, "args.alpha must be a base64 string".into())),
        };
        let mut spec_obj: Map<String, Value> =
            args.iter().filter(|(k, _)| *k != "effect" && *k != "alpha").map(|(k, v)| (k.clone(), v.clone())).collect();
        spec_obj.insert("kind".into(), Value::String(kind_name.into()));
        let spec: EffectSpec = serde_json::from_value(Value::Object(spec_obj))
            .map_err(|e| (ErrorCode::MalformedArgs, format!("bad effect parameters: {e}")))?;
        let image = self.load_image(request, alpha)?;
        let out = apply_effect(&image, &spec).map_err(|e| (ErrorCode::MalformedArgs, e.to_string()))?;
        let wire = WireImage::encode(&out);
        let mut payload = json!({ "image": wire.ppm_b64, "width": out.width(), "height": out.height() });
        if let Some(alpha) = wire.alpha_b64 {
            payload["alpha"] = Value::String(alpha);
        }
        Ok(payload)
    }

    fn store_put(&self, request: &Request) -> Outcome {
        let args = self.args(request)?;
        let key = args
            .get("key")
            .and_then(Value::as_str)
            .ok_or((ErrorCode::MalformedArgs, "args.key must be a string".into()))?;
        let alpha = args.get("alpha").and_then(Value::as_str).map(str::to_owned);
        let image = match &request.image {
            Some(ImageRef::Inline(_)) => self.load_image(request, alpha)?,
            _ => return Err((ErrorCode::MalformedArgs, "store_put needs an inline image".into())),
        };
        let store = self.store.as_ref().ok_or((ErrorCode::Internal, "service has no image store".into()))?;
        store.put(key, &image).map_err(|e| match e {
            StoreError::InvalidKey(_) => (ErrorCode::MalformedArgs, e.to_string()),
            _ => (ErrorCode::Internal, e.to_string()),
        })?;
        Ok(json!({ "key": key }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::failover::envelope::Status;

    fn inline(img: &RasterImage) -> Option<ImageRef> {
        Some(ImageRef::Inline(WireImage::encode(img).ppm_b64))
    }

    #[test]
    fn ping() {
        let r = Dispatcher::new().dispatch(&Request::ping());
        assert_eq!(r.status, Status::Ok);
        assert!(r.payload.is_some());
    }

    #[test]
    fn invert_over_the_wire() {
        let img = RasterImage::from_rgba(1, 1, vec![10, 20, 30, 255]).unwrap();
        let req = Request::new("apply_effect", json!({"effect": "invert"}), inline(&img));
        let r = Dispatcher::new().dispatch(&req);
        assert!(r.is_ok(), "{r:?}");
        let payload = r.payload.unwrap();
        let out = WireImage { ppm_b64: payload["image"].as_str().unwrap().into(), alpha_b64: None }.decode().unwrap();
        assert_eq!(out.get(0, 0), [245, 235, 225, 255]);
    }

    #[test]
    fn error_codes() {
        let d = Dispatcher::new();
        let img = RasterImage::filled(1, 1, [0, 0, 0, 255]).unwrap();
        let code = |req: Request| d.dispatch(&req).error_code;
        assert_eq!(code(Request::new("launch_missiles", json!({}), None)), Some(4001));
        assert_eq!(code(Request::new("apply_effect", json!([1, 2]), inline(&img))), Some(4002));
        assert_eq!(
            code(Request::new("apply_effect", json!({"effect": "brightness", "delta": 900}), inline(&img))),
            Some(4002)
        );
        assert_eq!(code(Request::new("apply_effect", json!({"effect": "xray"}), inline(&img))), Some(4003));
        assert_eq!(
            code(Request::new("apply_effect", json!({"effect": "invert"}), Some(ImageRef::Inline("%%%".into())))),
            Some(4004)
        );
        assert_eq!(code(Request::new("store_put", json!({"key": "k"}), inline(&img))), Some(5001));
    }

    #[test]
    fn unparseable_body_is_malformed() {
        let out: Response = serde_json::from_str(&Dispatcher::new().dispatch_json("{not json")).unwrap();
        assert_eq!(out.error_code, Some(4002));
    }

    #[test]
    fn stored_images_are_addressable() {
        let dir = tempfile::tempdir().unwrap();
        let d = Dispatcher::with_store(ImageStore::new(dir.path()));
        let img = RasterImage::from_rgba(1, 1, vec![10, 20, 30, 255]).unwrap();
        assert!(d.dispatch(&Request::new("store_put", json!({"key": "src"}), inline(&img))).is_ok());
        let stored = Some(ImageRef::Stored { key: "src".into() });
        let r = d.dispatch(&Request::new("apply_effect", json!({"effect": "invert"}), stored));
        assert!(r.is_ok());
        let missing = Some(ImageRef::Stored { key: "nope".into() });
        let r = d.dispatch(&Request::new("apply_effect", json!({"effect": "invert"}), missing));
        assert_eq!(r.error_code, Some(4004));
    }

    #[test]
    fn identical_requests_identical_responses() {
        let d = Dispatcher::new();
        let img = RasterImage::from_fn(3, 3, |x, y| [x as u8 * 50, y as u8 * 60, 7, 255]).unwrap();
        let req = Request::new("apply_effect", json!({"effect": "hue", "degrees": 45}), inline(&img));
        assert_eq!(d.dispatch(&req), d.dispatch(&req));
    }
}
