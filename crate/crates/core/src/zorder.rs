//! Global z-axis ordering. Position 0 is backmost; the photo at position `i`
//! has z-index `z_base + i`, so the z-values are always one contiguous run
//! whose length equals the photo count.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZOrderError {
    #[error("photo `{0}` is already in the z-order")]
    Duplicate(String),
    #[error("photo `{0}` is not in the z-order")]
    Unknown(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZOrderArray {
    ids: Vec<String>,
    z_base: i64,
}

impl ZOrderArray {
    pub fn new(z_base: i64) -> Self {
        Self { ids: Vec::new(), z_base }
    }

    /// Rebuild from ids already in back-to-front order.
    pub fn from_ordered(z_base: i64, ids: impl IntoIterator<Item = String>) -> Result<Self, ZOrderError> {
        let mut order = Self::new(z_base);
        for id in ids {
            order.insert(id)?;
        }
        Ok(order)
    }

    pub fn z_base(&self) -> i64 {
        self.z_base
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|x| x == id)
    }

    pub fn z_of(&self, id: &str) -> Option<i64> {
        self.position(id).map(|i| self.z_base + i as i64)
    }

    /// Add `id` in front of everything; its z-index is `z_base` plus the
    /// number of photos already present.
    pub fn insert(&mut self, id: impl Into<String>) -> Result<i64, ZOrderError> {
        let id = id.into();
        if self.position(&id).is_some() {
            return Err(ZOrderError::Duplicate(id));
        }
        let z = self.z_base + self.ids.len() as i64;
        self.ids.push(id);
        Ok(z)
    }

    pub fn remove(&mut self, id: &str) -> Result<(), ZOrderError> {
        let pos = self.position(id).ok_or_else(|| ZOrderError::Unknown(id.to_owned()))?;
        self.ids.remove(pos);
        Ok(())
    }

    /// Eject `id`, shift everything behind it one slot toward the front,
    /// and drop `id` into the freed backmost slot.
    pub fn send_to_back(&mut self, id: &str) -> Result<(), ZOrderError> {
        let pos = self.position(id).ok_or_else(|| ZOrderError::Unknown(id.to_owned()))?;
        self.ids[..=pos].rotate_right(1);
        Ok(())
    }

    /// Mirror of [`send_to_back`](Self::send_to_back): shift the photos in
    /// front of `id` back one slot and put `id` frontmost.
    pub fn bring_to_front(&mut self, id: &str) -> Result<(), ZOrderError> {
        let pos = self.position(id).ok_or_else(|| ZOrderError::Unknown(id.to_owned()))?;
        self.ids[pos..].rotate_left(1);
        Ok(())
    }

    /// Ids back to front.
    pub fn draw_order(&self) -> Vec<String> {
        self.ids.clone()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.ids.iter().enumerate().map(|(i, id)| (id.as_str(), self.z_base + i as i64))
    }
}
