//! A scene bound to a renderer: edit operations, interaction sessions with
//! the background/foreground layer split, and per-operation cost accounting.

use std::collections::HashMap;

use thiserror::Error;

use crate::effects::{EffectError, EffectSpec};
use crate::geometry::{IntRect, Point};
use crate::photo::{crop_photo, transform_photo, PhotoError, PhotoObject, TransformAction};
use crate::scene::{SceneDocument, SceneError};

use super::cost::CostReport;
use super::frame::Frame;
use super::renderer::{Prepared, RenderError, Renderer};

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error(transparent)]
    Scene(#[from] SceneError),
    #[error(transparent)]
    Photo(#[from] PhotoError),
    #[error(transparent)]
    Effect(#[from] EffectError),
    #[error("no photo `{0}` in the scene")]
    UnknownPhoto(String),
    #[error("an interaction on `{0}` is already in progress")]
    SessionActive(String),
    #[error("no interaction in progress")]
    NoSession,
}

#[derive(Clone, Debug, PartialEq)]
struct NodeKey {
    source: String,
    crop: Option<IntRect>,
    effects: Vec<EffectSpec>,
}

impl NodeKey {
    fn of(photo: &PhotoObject) -> Self {
        Self { source: photo.source.clone(), crop: photo.crop, effects: photo.effects.clone() }
    }
}

#[derive(Debug)]
struct Session {
    id: String,
    /// Everything except the interactive photo; `None` in cost-only mode.
    backdrop: Option<Frame>,
}

/// Owns a scene and renders it incrementally with one backend.
///
/// In cost-only mode no pixels are produced; every operation still returns
/// the same [`CostReport`] it would with pixels.
#[derive(Debug)]
pub struct Engine {
    renderer: Renderer,
    scene: SceneDocument,
    materialize: bool,
    frame: Option<Frame>,
    nodes: HashMap<String, (NodeKey, Prepared)>,
    session: Option<Session>,
}

impl Engine {
    pub fn new(renderer: Renderer, scene: SceneDocument) -> Self {
        Self { renderer, scene, materialize: true, frame: None, nodes: HashMap::new(), session: None }
    }

    /// Skip pixel work; only account costs.
    pub fn cost_only(mut self) -> Self {
        self.materialize = false;
        self.frame = None;
        self
    }

    pub fn renderer(&self) -> &Renderer {
        &self.renderer
    }

    pub fn scene(&self) -> &SceneDocument {
        &self.scene
    }

    pub fn into_scene(self) -> SceneDocument {
        self.scene
    }

    /// Last displayed frame, if pixels are being produced.
    pub fn frame(&self) -> Option<&Frame> {
        self.frame.as_ref()
    }

    pub fn in_session(&self) -> bool {
        self.session.is_some()
    }

    fn retained(&self) -> bool {
        self.renderer.backend().is_retained()
    }

    fn report(&self, work: u64, remote: u32) -> CostReport {
        self.renderer.cost_model().report(work, 1, remote)
    }

    fn photo(&self, id: &str) -> Result<&PhotoObject, EngineError> {
        self.scene.get(id).ok_or_else(|| EngineError::UnknownPhoto(id.to_owned()))
    }

    fn idle(&self) -> Result<(), EngineError> {
        match &self.session {
            Some(s) => Err(EngineError::SessionActive(s.id.clone())),
            None => Ok(()),
        }
    }

    /// Prepared pixels for drawing. Retained backends keep nodes between
    /// frames; raster re-runs the chain on every draw.
    fn pixels_for(&mut self, photo: &PhotoObject) -> Result<Prepared, RenderError> {
        if !self.retained() {
            return self.renderer.prepare(photo);
        }
        let key = NodeKey::of(photo);
        if let Some((k, p)) = self.nodes.get(&photo.id) {
            if *k == key {
                return Ok(p.clone());
            }
        }
        let prepared = self.renderer.prepare(photo)?;
        self.nodes.insert(photo.id.clone(), (key, prepared.clone()));
        Ok(prepared)
    }

    /// Draw `photos` back to front into `frame`, clipped to `region`.
    fn paint(&mut self, frame: &mut Frame, skip: Option<&str>, region: IntRect) -> Result<(), RenderError> {
        let photos: Vec<PhotoObject> =
            self.scene.draw_order().into_iter().filter(|p| Some(p.id.as_str()) != skip).cloned().collect();
        for photo in &photos {
            if self.renderer.clip(photo)?.and_then(|c| c.intersect(&region)).is_none() {
                continue;
            }
            let prepared = self.pixels_for(photo)?;
            self.renderer.draw(frame, photo, &prepared, region)?;
        }
        Ok(())
    }

    fn repaint_all(&mut self) -> Result<(), RenderError> {
        if !self.materialize {
            return Ok(());
        }
        let mut frame = Frame::blank(self.renderer.screen().size());
        let region = frame.bounds();
        self.paint(&mut frame, None, region)?;
        self.frame = Some(frame);
        Ok(())
    }

    fn repaint_regions(&mut self, regions: &[Option<IntRect>]) -> Result<(), RenderError> {
        if !self.materialize {
            return Ok(());
        }
        let Some(mut frame) = self.frame.take() else {
            return self.repaint_all();
        };
        for region in regions.iter().flatten() {
            frame.clear_rect(*region);
            self.paint(&mut frame, None, *region)?;
        }
        self.frame = Some(frame);
        Ok(())
    }

    /// Cost of re-rendering everything the raster way.
    fn full_cost(&self) -> Result<CostReport, RenderError> {
        self.renderer.cost_full(&self.scene)
    }

    /// After a change to `id` whose box before the change was `old`:
    /// raster redraws the whole surface, the retained backends only the
    /// damaged boxes. `old` is charged when the box moved, or always when
    /// `charge_old` is set.
    fn commit(
        &mut self,
        id: &str,
        old: Option<(Option<IntRect>, u64)>,
        charge_old: bool,
        reprepare: bool,
    ) -> Result<CostReport, EngineError> {
        if !self.retained() {
            let cost = self.full_cost()?;
            self.repaint_all()?;
            return Ok(cost);
        }
        let photo = self.photo(id)?.clone();
        let new_clip = self.renderer.clip(&photo)?;
        let mut work = self.renderer.drawn_area(&photo)?;
        let old_clip = old.and_then(|(clip, _)| clip);
        if let Some((clip, area)) = old {
            if charge_old || clip != new_clip {
                work += area;
            }
        }
        let mut remote = 0;
        if reprepare {
            let plan = self.renderer.plan(&photo)?;
            work += plan.effect_pixels;
            remote = plan.remote_calls;
        }
        self.repaint_regions(&[old_clip, new_clip])?;
        Ok(self.report(work, remote))
    }

    fn before(&self, id: &str) -> Result<(Option<IntRect>, u64), EngineError> {
        let photo = self.photo(id)?;
        Ok((self.renderer.clip(photo)?, self.renderer.drawn_area(photo)?))
    }

    /// Render the whole scene from scratch.
    pub fn render(&mut self) -> Result<CostReport, EngineError> {
        self.idle()?;
        let cost = self.full_cost()?;
        self.repaint_all()?;
        Ok(cost)
    }

    /// Add a photo in front of the others.
    pub fn add_photo(&mut self, photo: PhotoObject) -> Result<CostReport, EngineError> {
        self.idle()?;
        self.renderer.plan(&photo)?;
        let id = photo.id.clone();
        self.scene.add_photo(photo)?;
        self.commit(&id, None, false, true)
    }

    pub fn remove_photo(&mut self, id: &str) -> Result<CostReport, EngineError> {
        self.idle()?;
        let (clip, area) = self.before(id)?;
        self.scene.remove_photo(id)?;
        self.nodes.remove(id);
        if !self.retained() {
            let cost = self.full_cost()?;
            self.repaint_all()?;
            return Ok(cost);
        }
        self.repaint_regions(&[clip])?;
        Ok(self.report(area, 0))
    }

    /// Append an effect to a photo's chain.
    pub fn apply_effect(&mut self, id: &str, spec: EffectSpec) -> Result<CostReport, EngineError> {
        self.idle()?;
        spec.validate()?;
        let old = self.before(id)?;
        let mut updated = self.photo(id)?.clone();
        updated.effects.push(spec);
        self.renderer.plan(&updated)?;
        *self.scene.get_mut(id).expect("checked") = updated;
        self.commit(id, Some(old), false, true)
    }

    /// Move, rotate or scale a photo. Retained backends keep the node's
    /// filtered pixels and pay for the old and the new box.
    pub fn transform(&mut self, id: &str, action: TransformAction) -> Result<CostReport, EngineError> {
        self.idle()?;
        let old = self.before(id)?;
        let updated = transform_photo(self.photo(id)?, action)?;
        *self.scene.get_mut(id).expect("checked") = updated;
        self.commit(id, Some(old), true, false)
    }

    pub fn crop(&mut self, id: &str, rect: IntRect) -> Result<CostReport, EngineError> {
        self.idle()?;
        let old = self.before(id)?;
        let source = self.renderer.source_size(self.photo(id)?)?;
        let updated = crop_photo(self.photo(id)?, rect, source)?;
        *self.scene.get_mut(id).expect("checked") = updated;
        self.commit(id, Some(old), true, true)
    }

    pub fn bring_to_front(&mut self, id: &str) -> Result<CostReport, EngineError> {
        self.idle()?;
        self.scene.bring_to_front(id)?;
        self.commit(id, None, false, false)
    }

    pub fn send_to_back(&mut self, id: &str) -> Result<CostReport, EngineError> {
        self.idle()?;
        self.scene.send_to_back(id)?;
        self.commit(id, None, false, false)
    }

    /// Start dragging `id`. The photo is drawn above everything for the
    /// length of the session.
    ///
    /// Raster renders the static background layer once (full cost) and the
    /// photo on the foreground layer. Retained backends only mark the node;
    /// they pay for its box when it has to be lifted over other photos.
    pub fn begin_interaction(&mut self, id: &str) -> Result<CostReport, EngineError> {
        self.idle()?;
        let photo = self.photo(id)?.clone();
        let topmost = self.scene.topmost().is_some_and(|p| p.id == id);
        let cost = if self.retained() {
            let work = if topmost { 0 } else { self.renderer.drawn_area(&photo)? };
            self.report(work, 0)
        } else {
            self.full_cost()?
        };
        let backdrop = if self.materialize {
            let mut bg = Frame::blank(self.renderer.screen().size());
            let region = bg.bounds();
            self.paint(&mut bg, Some(id), region)?;
            let mut frame = bg.clone();
            let prepared = self.pixels_for(&photo)?;
            self.renderer.draw(&mut frame, &photo, &prepared, region)?;
            self.frame = Some(frame);
            Some(bg)
        } else {
            None
        };
        self.session = Some(Session { id: id.to_owned(), backdrop });
        Ok(cost)
    }

    /// Move the interactive photo's center to `center` (standard
    /// coordinates). Work is the old plus the new box; raster additionally
    /// re-runs the photo's effect chain.
    pub fn update_interaction(&mut self, center: Point) -> Result<CostReport, EngineError> {
        let id = self.session.as_ref().ok_or(EngineError::NoSession)?.id.clone();
        let (old_clip, old_area) = self.before(&id)?;
        let moved = transform_photo(self.photo(&id)?, TransformAction::Move(center))?;
        *self.scene.get_mut(&id).expect("session photo") = moved.clone();
        let mut work = old_area + self.renderer.drawn_area(&moved)?;
        let mut remote = 0;
        if !self.retained() {
            let plan = self.renderer.plan(&moved)?;
            work += plan.effect_pixels;
            remote = plan.remote_calls;
        }
        if self.materialize {
            let prepared = self.pixels_for(&moved)?;
            let mut frame = self.frame.take().expect("session frame");
            if let (Some(clip), Some(bg)) = (old_clip, self.session.as_ref().and_then(|s| s.backdrop.as_ref())) {
                frame.copy_rect_from(bg, clip);
            }
            let region = frame.bounds();
            self.renderer.draw(&mut frame, &moved, &prepared, region)?;
            self.frame = Some(frame);
        }
        Ok(self.report(work, remote))
    }

    /// Drop the photo back at its own z position and recomposite.
    pub fn end_interaction(&mut self) -> Result<CostReport, EngineError> {
        let session = self.session.take().ok_or(EngineError::NoSession)?;
        let cost = if self.retained() {
            let (_, area) = self.before(&session.id)?;
            self.report(area, 0)
        } else {
            self.full_cost()?
        };
        self.repaint_all()?;
        Ok(cost)
    }
}
