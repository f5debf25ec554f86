//! Single-endpoint processing service and the capability-based failover
//! router. Effects a backend cannot express are shipped to the service as a
//! JSON envelope and the processed pixels come back; the bytes are the same
//! as a local [`apply_effect`](crate::effects::apply_effect) call.

mod dispatch;
mod envelope;
mod route;
mod store;

pub use dispatch::Dispatcher;
pub use envelope::{ErrorCode, ImageRef, Request, Response, Status, WireImage};
pub use route::{EffectRouter, LocalTransport, RetryPolicy, Route, RouteError, Transport, TransportError};
pub use store::{ImageStore, StoreError};

/// Route one effect through `router` for `backend`. See [`EffectRouter::route_effect`].
pub fn route_effect(
    router: &EffectRouter,
    backend: crate::render::BackendKind,
    image: &crate::image::RasterImage,
    spec: &crate::effects::EffectSpec,
) -> Result<crate::image::RasterImage, RouteError> {
    router.route_effect(backend, image, spec).map(|(img, _)| img)
}
