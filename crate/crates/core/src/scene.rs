//! Scene document: photos in the standard viewport plus their z-order, and
//! its JSON persistence.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::photo::PhotoObject;
use crate::viewport::{STANDARD_HEIGHT, STANDARD_WIDTH};
use crate::zorder::{ZOrderArray, ZOrderError};

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("malformed scene document: {0}")]
    Syntax(serde_json::Error),
    #[error("unknown field in scene document: {0}")]
    UnknownField(String),
    #[error("duplicate photo id `{0}`")]
    DuplicateId(String),
    #[error("duplicate z-index {0}")]
    DuplicateZ(i64),
    #[error("z-indexes are not the contiguous run {z_base}..{end}")]
    NonContiguousZ { z_base: i64, end: i64 },
    #[error("standard viewport must be [1024, 768], got {0:?}")]
    BadViewport([u32; 2]),
    #[error(transparent)]
    ZOrder(#[from] ZOrderError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneDocument {
    standard_viewport: [u32; 2],
    z_base: i64,
    photos: Vec<PhotoObject>,
}

impl Default for SceneDocument {
    fn default() -> Self {
        Self::new(0)
    }
}

impl SceneDocument {
    pub fn new(z_base: i64) -> Self {
        Self { standard_viewport: [STANDARD_WIDTH, STANDARD_HEIGHT], z_base, photos: Vec::new() }
    }

    pub fn z_base(&self) -> i64 {
        self.z_base
    }

    pub fn photos(&self) -> &[PhotoObject] {
        &self.photos
    }

    pub fn len(&self) -> usize {
        self.photos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.photos.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&PhotoObject> {
        self.photos.iter().find(|p| p.id == id)
    }

    /// Mutable access for geometry and effect edits. The z-index is owned by
    /// the scene; changes to `z` through this reference are overwritten by
    /// the next reorder and rejected by [`validate`](Self::validate).
    pub fn get_mut(&mut self, id: &str) -> Option<&mut PhotoObject> {
        self.photos.iter_mut().find(|p| p.id == id)
    }

    /// Add a photo in front of all others. Its `z` field is assigned here.
    pub fn add_photo(&mut self, mut photo: PhotoObject) -> Result<i64, SceneError> {
        if self.get(&photo.id).is_some() {
            return Err(SceneError::DuplicateId(photo.id));
        }
        photo.z = self.z_base + self.photos.len() as i64;
        let z = photo.z;
        self.photos.push(photo);
        Ok(z)
    }

    pub fn remove_photo(&mut self, id: &str) -> Result<PhotoObject, SceneError> {
        let mut order = self.zorder();
        order.remove(id)?;
        let pos = self.photos.iter().position(|p| p.id == id).expect("present in z-order");
        let removed = self.photos.remove(pos);
        self.apply_order(&order);
        Ok(removed)
    }

    /// Z-order array rebuilt from the photos' z-indexes.
    pub fn zorder(&self) -> ZOrderArray {
        let mut by_z: Vec<&PhotoObject> = self.photos.iter().collect();
        by_z.sort_by_key(|p| p.z);
        ZOrderArray::from_ordered(self.z_base, by_z.into_iter().map(|p| p.id.clone()))
            .expect("scene ids are unique")
    }

    pub fn bring_to_front(&mut self, id: &str) -> Result<(), SceneError> {
        let mut order = self.zorder();
        order.bring_to_front(id)?;
        self.apply_order(&order);
        Ok(())
    }

    pub fn send_to_back(&mut self, id: &str) -> Result<(), SceneError> {
        let mut order = self.zorder();
        order.send_to_back(id)?;
        self.apply_order(&order);
        Ok(())
    }

    fn apply_order(&mut self, order: &ZOrderArray) {
        for (id, z) in order.iter() {
            if let Some(p) = self.get_mut(id) {
                p.z = z;
            }
        }
    }

    /// Photos back to front.
    pub fn draw_order(&self) -> Vec<&PhotoObject> {
        let mut v: Vec<&PhotoObject> = self.photos.iter().collect();
        v.sort_by_key(|p| p.z);
        v
    }

    pub fn topmost(&self) -> Option<&PhotoObject> {
        self.photos.iter().max_by_key(|p| p.z)
    }

    pub fn validate(&self) -> Result<(), SceneError> {
        if self.standard_viewport != [STANDARD_WIDTH, STANDARD_HEIGHT] {
            return Err(SceneError::BadViewport(self.standard_viewport));
        }
        let mut ids = HashSet::new();
        let mut zs = HashSet::new();
        for p in &self.photos {
            if !ids.insert(p.id.as_str()) {
                return Err(SceneError::DuplicateId(p.id.clone()));
            }
            if !zs.insert(p.z) {
                return Err(SceneError::DuplicateZ(p.z));
            }
        }
        let end = self.z_base + self.photos.len() as i64;
        if self.photos.iter().any(|p| p.z < self.z_base || p.z >= end) {
            return Err(SceneError::NonContiguousZ { z_base: self.z_base, end });
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, SceneError> {
        let scene: SceneDocument = serde_json::from_str(text).map_err(|e| {
            let msg = e.to_string();
            if msg.starts_with("unknown field") {
                SceneError::UnknownField(msg)
            } else {
                SceneError::Syntax(e)
            }
        })?;
        scene.validate()?;
        Ok(scene)
    }
}

/// Serialize a scene to its JSON document.
pub fn scene_save(scene: &SceneDocument) -> String {
    scene.to_json()
}

/// Parse and validate a JSON scene document.
pub fn scene_load(text: &str) -> Result<SceneDocument, SceneError> {
    SceneDocument::from_json(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effects::EffectSpec;
    use crate::geometry::{IntRect, Point};

    fn three() -> SceneDocument {
        let mut s = SceneDocument::new(10);
        for (i, id) in ["a", "b", "c"].into_iter().enumerate() {
            let mut p = PhotoObject::new(id, format!("img/{id}.ppm"), Point::new(100.0 * i as f64, 50.5));
            p.angle = -50.0 * i as f64;
            p.scale = 0.8;
            p.crop = (i == 1).then_some(IntRect::new(50, 50, 300, 300));
            p.effects = vec![EffectSpec::Invert, EffectSpec::Hue { degrees: 33.3 }];
            s.add_photo(p).unwrap();
        }
        s
    }

    #[test]
    fn empty_round_trip() {
        let s = SceneDocument::new(0);
        assert_eq!(scene_load(&scene_save(&s)).unwrap(), s);
    }

    #[test]
    fn populated_round_trip() {
        let mut s = three();
        s.send_to_back("c").unwrap();
        assert_eq!(scene_load(&scene_save(&s)).unwrap(), s);
    }

    #[test]
    fn wire_shape() {
        let v: serde_json::Value = serde_json::from_str(&three().to_json()).unwrap();
        assert_eq!(v["standard_viewport"], serde_json::json!([1024, 768]));
        assert_eq!(v["photos"][1]["crop"], serde_json::json!([50, 50, 300, 300]));
        assert_eq!(v["photos"][0]["crop"], serde_json::Value::Null);
        assert_eq!(v["photos"][0]["center"], serde_json::json!([0.0, 50.5]));
        assert_eq!(v["photos"][2]["z"], 12);
        assert_eq!(v["photos"][0]["effects"][0]["kind"], "invert");
    }

    fn doc(photos: &str) -> String {
        format!(r#"{{"standard_viewport":[1024,768],"z_base":10,"photos":[{photos}]}}"#)
    }

    fn photo(id: &str, z: i64) -> String {
        format!(r#"{{"id":"{id}","source":"s","crop":null,"scale":1,"angle":0,"center":[0,0],"effects":[],"z":{z}}}"#)
    }

    #[test]
    fn duplicate_z_rejected() {
        let text = doc(&[photo("a", 10), photo("b", 10), photo("c", 11)].join(","));
        assert!(matches!(scene_load(&text), Err(SceneError::DuplicateZ(10))));
    }

    #[test]
    fn gap_in_z_rejected() {
        let text = doc(&[photo("a", 10), photo("b", 12)].join(","));
        assert!(matches!(scene_load(&text), Err(SceneError::NonContiguousZ { .. })));
    }

    #[test]
    fn duplicate_id_rejected() {
        let text = doc(&[photo("a", 10), photo("a", 11)].join(","));
        assert!(matches!(scene_load(&text), Err(SceneError::DuplicateId(id)) if id == "a"));
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{"standard_viewport":[1024,768],"z_base":0,"photos":[],"pages":[]}"#;
        assert!(matches!(scene_load(text), Err(SceneError::UnknownField(_))));
        let text = doc(&photo("a", 10).replace("\"z\":", "\"owner\":1,\"z\":"));
        assert!(matches!(scene_load(&text), Err(SceneError::UnknownField(_))));
    }

    #[test]
    fn syntax_and_viewport_errors() {
        assert!(matches!(scene_load("{"), Err(SceneError::Syntax(_))));
        let text = r#"{"standard_viewport":[800,600],"z_base":0,"photos":[]}"#;
        assert!(matches!(scene_load(text), Err(SceneError::BadViewport([800, 600]))));
    }

    #[test]
    fn reorder_keeps_z_contiguous() {
        let mut s = three();
        s.bring_to_front("a").unwrap();
        let ids: Vec<_> = s.draw_order().iter().map(|p| p.id.as_str()).collect();
        assert_eq!(ids, ["b", "c", "a"]);
        s.validate().unwrap();
        s.remove_photo("b").unwrap();
        s.validate().unwrap();
        assert_eq!(s.topmost().unwrap().id, "a");
        assert!(matches!(s.add_photo(PhotoObject::new("a", "x", Point::default())), Err(SceneError::DuplicateId(_))));
    }
}
