use std::collections::HashMap;
use std::sync::Arc;

use crate::geometry::Size;
use crate::image::RasterImage;

/// Source images addressed by the `source` field of a photo.
#[derive(Clone, Debug, Default)]
pub struct SourceLibrary {
    images: HashMap<String, Arc<RasterImage>>,
}

impl SourceLibrary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: impl Into<String>, image: RasterImage) -> Arc<RasterImage> {
        let image = Arc::new(image);
        self.images.insert(key.into(), image.clone());
        image
    }

    pub fn get(&self, key: &str) -> Option<&Arc<RasterImage>> {
        self.images.get(key)
    }

    pub fn size_of(&self, key: &str) -> Option<Size> {
        self.images.get(key).map(|i| Size::new(i.width(), i.height()))
    }

    pub fn contains(&self, key: &str) -> bool {
        self.images.contains_key(key)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }
}
