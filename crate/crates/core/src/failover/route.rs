use std::fmt;
use std::sync::Arc;

use serde_json::Value;
use thiserror::Error;

use crate::effects::{apply_effect_with, EffectError, EffectSpec};
use crate::image::RasterImage;
use crate::par::Exec;
use crate::render::{capability_check, BackendKind, Support};

use super::dispatch::Dispatcher;
use super::envelope::{ImageRef, Request, Response, WireImage};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("transport failure: {0}")]
pub struct TransportError(pub String);

/// Carries one request envelope to the service and brings back its response.
pub trait Transport: Send + Sync + fmt::Debug {
    fn call(&self, request: &Request) -> Result<Response, TransportError>;
}

/// In-process transport: calls the dispatcher directly.
#[derive(Debug, Default, Clone)]
pub struct LocalTransport {
    dispatcher: Arc<Dispatcher>,
}

impl LocalTransport {
    pub fn new(dispatcher: Arc<Dispatcher>) -> Self {
        Self { dispatcher }
    }
}

impl Transport for LocalTransport {
    fn call(&self, request: &Request) -> Result<Response, TransportError> {
        Ok(self.dispatcher.dispatch(request))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RetryPolicy {
    /// Total attempts per request, at least 1.
    pub max_attempts: u32,
}

impl Default for RetryPolicy {
    fn default() -> Self {
        Self { max_attempts: 3 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Local,
    Remote,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RouteError {
    #[error(transparent)]
    Effect(#[from] EffectError),
    #[error("{kind} needs the processing service but none is configured")]
    NoService { kind: crate::effects::EffectKind },
    /// Every attempt failed at the transport level. The caller decides
    /// whether to retry later or abort the operation.
    #[error("processing service unreachable after {attempts} attempt(s): {last}")]
    Unreachable { attempts: u32, last: TransportError },
    #[error("processing service rejected the request ({code}): {message}")]
    Service { code: u16, message: String },
    #[error("processing service returned an unusable payload")]
    BadPayload,
}

/// Decides per effect whether to run it locally or on the service.
#[derive(Clone, Debug, Default)]
pub struct EffectRouter {
    transport: Option<Arc<dyn Transport>>,
    retry: RetryPolicy,
    exec: Exec,
}

impl EffectRouter {
    /// Router without a service: unsupported effects fail.
    pub fn local_only() -> Self {
        Self::default()
    }

    pub fn with_transport(transport: Arc<dyn Transport>) -> Self {
        Self { transport: Some(transport), ..Self::default() }
    }

    /// Router backed by an in-process dispatcher.
    pub fn in_process() -> Self {
        Self::with_transport(Arc::new(LocalTransport::default()))
    }

    pub fn retry(mut self, retry: RetryPolicy) -> Self {
        self.retry = retry;
        self
    }

    pub fn exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn has_service(&self) -> bool {
        self.transport.is_some()
    }

    /// Where `spec` would run for `backend`, without running it.
    pub fn plan(&self, backend: BackendKind, spec: &EffectSpec) -> Result<Route, RouteError> {
        match capability_check(backend, spec.kind()) {
            Support::Supported => Ok(Route::Local),
            Support::FallbackNeeded if self.transport.is_some() => Ok(Route::Remote),
            Support::FallbackNeeded => Err(RouteError::NoService { kind: spec.kind() }),
        }
    }

    /// Apply `spec` locally when `backend` supports it, otherwise on the
    /// service. Either way the result equals a direct `apply_effect`.
    pub fn route_effect(
        &self,
        backend: BackendKind,
        image: &RasterImage,
        spec: &EffectSpec,
    ) -> Result<(RasterImage, Route), RouteError> {
        match self.plan(backend, spec)? {
            Route::Local => Ok((apply_effect_with(self.exec, image, spec)?, Route::Local)),
            Route::Remote => Ok((self.remote(image, spec)?, Route::Remote)),
        }
    }

    fn remote(&self, image: &RasterImage, spec: &EffectSpec) -> Result<RasterImage, RouteError> {
        spec.validate()?;
        let transport = self.transport.as_ref().ok_or(RouteError::NoService { kind: spec.kind() })?;
        let request = effect_request(image, spec);
        let attempts = self.retry.max_attempts.max(1);
        let mut last = TransportError("no attempt made".into());
        for _ in 0..attempts {
            match transport.call(&request) {
                Ok(response) => return decode_response(response),
                Err(e) => last = e,
            }
        }
        Err(RouteError::Unreachable { attempts, last })
    }
}

/// Envelope asking the service to apply `spec` to `image`.
pub(crate) fn effect_request(image: &RasterImage, spec: &EffectSpec) -> Request {
    let wire = WireImage::encode(image);
    let mut args = serde_json::to_value(spec).expect("effect serializes");
    let obj = args.as_object_mut().expect("effect is an object");
    let kind = obj.remove("kind").expect("tagged");
    obj.insert("effect".into(), kind);
    if let Some(alpha) = wire.alpha_b64 {
        obj.insert("alpha".into(), Value::String(alpha));
    }
    Request::new("apply_effect", args, Some(ImageRef::Inline(wire.ppm_b64)))
}

fn decode_response(response: Response) -> Result<RasterImage, RouteError> {
    if !response.is_ok() {
        return Err(RouteError::Service { code: response.error_code.unwrap_or(0), message: response.message });
    }
    let payload = response.payload.ok_or(RouteError::BadPayload)?;
    let ppm_b64 = payload.get("image").and_then(Value::as_str).ok_or(RouteError::BadPayload)?.to_owned();
    let alpha_b64 = payload.get("alpha").and_then(Value::as_str).map(str::to_owned);
    WireImage { ppm_b64, alpha_b64 }.decode().ok_or(RouteError::BadPayload)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effects::apply_effect;
    use std::sync::atomic::{AtomicU32, Ordering};

    fn sample() -> RasterImage {
        RasterImage::from_fn(5, 4, |x, y| [x as u8 * 50, y as u8 * 60, 200, 100 + x as u8]).unwrap()
    }

    #[test]
    fn supported_effect_stays_local() {
        let (out, route) = EffectRouter::in_process().route_effect(BackendKind::Raster, &sample(), &EffectSpec::Sepia).unwrap();
        assert_eq!(route, Route::Local);
        assert_eq!(out, apply_effect(&sample(), &EffectSpec::Sepia).unwrap());
    }

    #[test]
    fn unsupported_effect_goes_remote_and_matches() {
        let (out, route) = EffectRouter::in_process().route_effect(BackendKind::Legacy, &sample(), &EffectSpec::Sepia).unwrap();
        assert_eq!(route, Route::Remote);
        assert_eq!(out, apply_effect(&sample(), &EffectSpec::Sepia).unwrap());
    }

    #[test]
    fn legacy_invert_is_local() {
        let (_, route) = EffectRouter::in_process().route_effect(BackendKind::Legacy, &sample(), &EffectSpec::Invert).unwrap();
        assert_eq!(route, Route::Local);
    }

    #[test]
    fn no_service_means_error() {
        let err = EffectRouter::local_only().route_effect(BackendKind::Legacy, &sample(), &EffectSpec::Sepia).unwrap_err();
        assert!(matches!(err, RouteError::NoService { .. }));
    }

    #[derive(Debug, Default)]
    struct Down(AtomicU32);

    impl Transport for Down {
        fn call(&self, _: &Request) -> Result<Response, TransportError> {
            self.0.fetch_add(1, Ordering::SeqCst);
            Err(TransportError("connection refused".into()))
        }
    }

    #[test]
    fn unreachable_after_retries() {
        let down = Arc::new(Down::default());
        let router = EffectRouter::with_transport(down.clone()).retry(RetryPolicy { max_attempts: 4 });
        let err = router.route_effect(BackendKind::Legacy, &sample(), &EffectSpec::Sepia).unwrap_err();
        assert!(matches!(err, RouteError::Unreachable { attempts: 4, .. }));
        assert_eq!(down.0.load(Ordering::SeqCst), 4);
    }

    #[test]
    fn request_shape() {
        let req = effect_request(&sample(), &EffectSpec::Hue { degrees: 10.0 });
        assert_eq!(req.op, "apply_effect");
        assert_eq!(req.args["effect"], "hue");
        assert_eq!(req.args["degrees"], 10.0);
        assert!(req.args.get("kind").is_none());
        assert!(req.args["alpha"].is_string());
    }
}
