use std::sync::Arc;

use thiserror::Error;

use crate::effects::{EffectError, EffectKind};
use crate::failover::{EffectRouter, Route, RouteError};
use crate::geometry::{IntRect, Size};
use crate::image::RasterImage;
use crate::par::Exec;
use crate::photo::PhotoObject;
use crate::scene::SceneDocument;
use crate::viewport::ScreenSpec;

use super::capability::BackendKind;
use super::cost::{CostModel, CostReport};
use super::frame::Frame;
use super::library::SourceLibrary;
use super::raster::{draw_prepared, ScreenPlacement};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RenderError {
    #[error("source `{0}` is not in the library")]
    MissingSource(String),
    /// An effect the backend cannot draw reached the rasterizer with no
    /// service to fall back on.
    #[error("photo `{photo}`: {kind} is not supported by the {backend} backend and no failover is configured")]
    Unsupported { photo: String, kind: EffectKind, backend: BackendKind },
    #[error("photo `{photo}`: {source}")]
    Effect { photo: String, source: EffectError },
    #[error("photo `{photo}`: {source}")]
    Route { photo: String, source: RouteError },
}

/// A photo's crop with its effect chain applied, plus what producing it cost.
#[derive(Clone, Debug)]
pub struct Prepared {
    /// `None` when only the cost was planned.
    pub image: Option<Arc<RasterImage>>,
    pub size: Size,
    /// Pixels written by locally applied effects.
    pub effect_pixels: u64,
    /// Effects shipped to the processing service.
    pub remote_calls: u32,
}

/// Backend strategy plus everything needed to turn a scene into pixels.
#[derive(Clone, Debug)]
pub struct Renderer {
    backend: BackendKind,
    screen: ScreenSpec,
    cost: CostModel,
    library: Arc<SourceLibrary>,
    router: EffectRouter,
    exec: Exec,
}

impl Renderer {
    pub fn new(backend: BackendKind, screen: ScreenSpec, library: Arc<SourceLibrary>) -> Self {
        Self {
            backend,
            screen,
            cost: CostModel::default(),
            library,
            router: EffectRouter::local_only(),
            exec: Exec::auto(),
        }
    }

    pub fn with_cost_model(mut self, cost: CostModel) -> Self {
        self.cost = cost;
        self
    }

    pub fn with_router(mut self, router: EffectRouter) -> Self {
        self.router = router.exec(self.exec);
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self.router = self.router.exec(exec);
        self
    }

    pub fn backend(&self) -> BackendKind {
        self.backend
    }

    pub fn screen(&self) -> &ScreenSpec {
        &self.screen
    }

    pub fn cost_model(&self) -> &CostModel {
        &self.cost
    }

    pub fn library(&self) -> &SourceLibrary {
        &self.library
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn source_size(&self, photo: &PhotoObject) -> Result<Size, RenderError> {
        self.library.size_of(&photo.source).ok_or_else(|| RenderError::MissingSource(photo.source.clone()))
    }

    pub fn placement(&self, photo: &PhotoObject) -> Result<ScreenPlacement, RenderError> {
        Ok(ScreenPlacement::of(photo, self.source_size(photo)?, &self.screen))
    }

    /// Screen pixels a draw of `photo` writes.
    pub fn drawn_area(&self, photo: &PhotoObject) -> Result<u64, RenderError> {
        Ok(self.placement(photo)?.drawn_area(self.screen.size()))
    }

    pub fn clip(&self, photo: &PhotoObject) -> Result<Option<IntRect>, RenderError> {
        Ok(self.placement(photo)?.clip(self.screen.size()))
    }

    fn route_err(&self, photo: &PhotoObject, e: RouteError) -> RenderError {
        match e {
            RouteError::NoService { kind } => {
                RenderError::Unsupported { photo: photo.id.clone(), kind, backend: self.backend }
            }
            RouteError::Effect(source) => RenderError::Effect { photo: photo.id.clone(), source },
            source => RenderError::Route { photo: photo.id.clone(), source },
        }
    }

    /// Cost of preparing `photo` without producing pixels.
    pub fn plan(&self, photo: &PhotoObject) -> Result<Prepared, RenderError> {
        let crop = photo.crop_region(self.source_size(photo)?);
        let mut size = Size::new(crop.w as u32, crop.h as u32);
        let (mut effect_pixels, mut remote_calls) = (0, 0);
        for spec in &photo.effects {
            spec.validate().map_err(|source| RenderError::Effect { photo: photo.id.clone(), source })?;
            match self.router.plan(self.backend, spec).map_err(|e| self.route_err(photo, e))? {
                Route::Local => effect_pixels += spec.pixels_written(size),
                Route::Remote => remote_calls += 1,
            }
            size = spec.output_size(size);
        }
        Ok(Prepared { image: None, size, effect_pixels, remote_calls })
    }

    /// Crop `photo`'s source and run its effect chain, routing each effect
    /// locally or through the service.
    pub fn prepare(&self, photo: &PhotoObject) -> Result<Prepared, RenderError> {
        let source = self.library.get(&photo.source).ok_or_else(|| RenderError::MissingSource(photo.source.clone()))?;
        let crop = photo.crop_region(Size::new(source.width(), source.height()));
        let mut image = if crop == Size::new(source.width(), source.height()).bounds() {
            source.as_ref().clone()
        } else {
            source.sub_image(crop.x as u32, crop.y as u32, crop.w as u32, crop.h as u32).expect("clamped crop")
        };
        let (mut effect_pixels, mut remote_calls) = (0, 0);
        for spec in &photo.effects {
            let input = Size::new(image.width(), image.height());
            let (out, route) =
                self.router.route_effect(self.backend, &image, spec).map_err(|e| self.route_err(photo, e))?;
            match route {
                Route::Local => effect_pixels += spec.pixels_written(input),
                Route::Remote => remote_calls += 1,
            }
            image = out;
        }
        let size = Size::new(image.width(), image.height());
        Ok(Prepared { image: Some(Arc::new(image)), size, effect_pixels, remote_calls })
    }

    /// Draw a prepared photo into `frame`, limited to `region`.
    pub fn draw(&self, frame: &mut Frame, photo: &PhotoObject, prepared: &Prepared, region: IntRect) -> Result<(), RenderError> {
        let image = prepared.image.as_ref().expect("draw needs a materialized photo");
        let placement = self.placement(photo)?;
        draw_prepared(self.exec, frame, image, &placement, region);
        Ok(())
    }

    /// Composite the whole scene back to front onto a white frame.
    ///
    /// Raster charges a full-screen clear; the retained backends charge only
    /// what they draw. Both charge every drawn box and all local effect work.
    pub fn render_full(&self, scene: &SceneDocument) -> Result<(Frame, CostReport), RenderError> {
        let mut frame = Frame::blank(self.screen.size());
        let mut work = if self.backend.is_retained() { 0 } else { self.screen.area() };
        let mut remote = 0;
        let region = frame.bounds();
        for photo in scene.draw_order() {
            let prepared = self.prepare(photo)?;
            work += self.drawn_area(photo)? + prepared.effect_pixels;
            remote += prepared.remote_calls;
            self.draw(&mut frame, photo, &prepared, region)?;
        }
        Ok((frame, self.cost.report(work, 1, remote)))
    }

    /// The cost [`render_full`](Self::render_full) would report, without drawing.
    pub fn cost_full(&self, scene: &SceneDocument) -> Result<CostReport, RenderError> {
        let mut work = if self.backend.is_retained() { 0 } else { self.screen.area() };
        let mut remote = 0;
        for photo in scene.photos() {
            let plan = self.plan(photo)?;
            work += self.drawn_area(photo)? + plan.effect_pixels;
            remote += plan.remote_calls;
        }
        Ok(self.cost.report(work, 1, remote))
    }
}
