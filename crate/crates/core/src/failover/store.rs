//! Keyed on-disk image store so benchmark clients upload a source once.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::image::RasterImage;
use crate::ppm::{decode_ppm, encode_ppm, PpmError};

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("invalid store key `{0}`")]
    InvalidKey(String),
    #[error("no image stored under `{0}`")]
    NotFound(String),
    #[error("stored image `{0}` is corrupt")]
    Corrupt(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug)]
pub struct ImageStore {
    root: PathBuf,
    locks: Mutex<HashMap<String, Arc<Mutex<()>>>>,
}

fn valid_key(key: &str) -> bool {
    (1..=128).contains(&key.len()) && key.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'-' || b == b'_')
}

impl ImageStore {
    /// Open a store rooted at `root`; the directory is created on first write.
    pub fn new(root: impl Into<PathBuf>) -> Self {
        Self { root: root.into(), locks: Mutex::new(HashMap::new()) }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn lock_for(&self, key: &str) -> Arc<Mutex<()>> {
        let mut locks = self.locks.lock().unwrap_or_else(|e| e.into_inner());
        locks.entry(key.to_owned()).or_default().clone()
    }

    fn paths(&self, key: &str) -> (PathBuf, PathBuf) {
        (self.root.join(format!("{key}.ppm")), self.root.join(format!("{key}.alpha")))
    }

    pub fn put(&self, key: &str, image: &RasterImage) -> Result<(), StoreError> {
        if !valid_key(key) {
            return Err(StoreError::InvalidKey(key.to_owned()));
        }
        let lock = self.lock_for(key);
        let _guard = lock.lock().unwrap_or_else(|e| e.into_inner());
        fs::create_dir_all(&self.root)?;
        let (ppm, alpha) = self.paths(key);
        fs::write(ppm, encode_ppm(image))?;
        if image.is_opaque() {
            match fs::remove_file(&alpha) {
                Err(e) if e.kind() != io::ErrorKind::NotFound => return Err(e.into()),
                _ => {}
            }
        } else {
            fs::write(alpha, image.alpha_plane())?;
        }
        Ok(())
    }

    pub fn get(&self, key: &str) -> Result<RasterImage, StoreError> {
        if !valid_key(key) {
            return Err(StoreError::InvalidKey(key.to_owned()));
        }
        let lock = self.lock_for(key);
        let _guard = lock.lock().unwrap_or_else(|e| e.into_inner());
        let (ppm, alpha) = self.paths(key);
        let bytes = match fs::read(ppm) {
            Ok(b) => b,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Err(StoreError::NotFound(key.to_owned())),
            Err(e) => return Err(e.into()),
        };
        let image = decode_ppm(&bytes).map_err(|e| match e {
            PpmError::Io(io) => StoreError::Io(io),
            _ => StoreError::Corrupt(key.to_owned()),
        })?;
        match fs::read(alpha) {
            Ok(plane) => image.with_alpha_plane(&plane).map_err(|_| StoreError::Corrupt(key.to_owned())),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(image),
            Err(e) => Err(e.into()),
        }
    }
}
