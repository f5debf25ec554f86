//! The processing service over HTTP: a single `POST /api` endpoint taking
//! and returning the JSON envelope, plus [`HttpTransport`] so an
//! [`EffectRouter`](photocomp::failover::EffectRouter) can fail over to a
//! remote instance.

use std::io;
use std::net::SocketAddr;
use std::sync::Arc;
use std::thread;
use std::time::Duration;

use axum::extract::State;
use axum::http::header;
use axum::response::IntoResponse;
use axum::routing::post;
use axum::Router;
use photocomp::failover::{Dispatcher, Request, Response, Transport, TransportError};
use tokio::net::TcpListener;
use tokio::sync::oneshot;

pub const API_PATH: &str = "/api";

pub fn router(dispatcher: Arc<Dispatcher>) -> Router {
    Router::new().route(API_PATH, post(api)).with_state(dispatcher)
}

async fn api(State(dispatcher): State<Arc<Dispatcher>>, body: String) -> impl IntoResponse {
    // effects are CPU bound; keep them off the async workers
    let out = tokio::task::spawn_blocking(move || dispatcher.dispatch_json(&body))
        .await
        .unwrap_or_else(|e| serde_json::to_string(&Response::error(photocomp::failover::ErrorCode::Internal, e.to_string())).expect("response serializes"));
    ([(header::CONTENT_TYPE, "application/json")], out)
}

/// Serve until the listener fails.
pub async fn serve(listener: TcpListener, dispatcher: Arc<Dispatcher>) -> io::Result<()> {
    axum::serve(listener, router(dispatcher)).await
}

/// A service running on a background thread. Dropping it shuts it down.
#[derive(Debug)]
pub struct ServiceHandle {
    addr: SocketAddr,
    shutdown: Option<oneshot::Sender<()>>,
    thread: Option<thread::JoinHandle<io::Result<()>>>,
}

impl ServiceHandle {
    pub fn addr(&self) -> SocketAddr {
        self.addr
    }

    pub fn url(&self) -> String {
        format!("http://{}{}", self.addr, API_PATH)
    }

    pub fn stop(mut self) -> io::Result<()> {
        self.shutdown_inner()
    }

    fn shutdown_inner(&mut self) -> io::Result<()> {
        if let Some(tx) = self.shutdown.take() {
            let _ = tx.send(());
        }
        match self.thread.take() {
            Some(t) => t.join().unwrap_or_else(|_| Err(io::Error::other("service thread panicked"))),
            None => Ok(()),
        }
    }
}

impl Drop for ServiceHandle {
    fn drop(&mut self) {
        let _ = self.shutdown_inner();
    }
}

/// Bind `addr` (port 0 picks a free one) and serve on a background thread.
pub fn spawn(addr: SocketAddr, dispatcher: Arc<Dispatcher>) -> io::Result<ServiceHandle> {
    let runtime = tokio::runtime::Builder::new_multi_thread().enable_all().build()?;
    let listener = runtime.block_on(TcpListener::bind(addr))?;
    let bound = listener.local_addr()?;
    let (tx, rx) = oneshot::channel::<()>();
    let thread = thread::Builder::new().name("photocomp-service".into()).spawn(move || {
        runtime.block_on(async move {
            axum::serve(listener, router(dispatcher))
                .with_graceful_shutdown(async {
                    let _ = rx.await;
                })
                .await
        })
    })?;
    Ok(ServiceHandle { addr: bound, shutdown: Some(tx), thread: Some(thread) })
}

/// Blocking HTTP client for the envelope protocol.
#[derive(Debug)]
pub struct HttpTransport {
    url: String,
    agent: ureq::Agent,
}

impl HttpTransport {
    pub fn new(url: impl Into<String>) -> Self {
        Self::with_timeout(url, Duration::from_secs(30))
    }

    pub fn with_timeout(url: impl Into<String>, timeout: Duration) -> Self {
        let agent = ureq::Agent::config_builder().timeout_global(Some(timeout)).build().into();
        Self { url: url.into(), agent }
    }

    pub fn url(&self) -> &str {
        &self.url
    }
}

impl Transport for HttpTransport {
    fn call(&self, request: &Request) -> Result<Response, TransportError> {
        let body = serde_json::to_string(request).map_err(|e| TransportError(e.to_string()))?;
        let mut resp = self
            .agent
            .post(&self.url)
            .header("content-type", "application/json")
            .send(body)
            .map_err(|e| TransportError(e.to_string()))?;
        let text = resp.body_mut().read_to_string().map_err(|e| TransportError(e.to_string()))?;
        serde_json::from_str(&text).map_err(|e| TransportError(format!("bad response: {e}")))
    }
}
