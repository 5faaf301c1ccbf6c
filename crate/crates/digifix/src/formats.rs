//! File formats: image and map JSON.
//!
//! An image file is `{"dim": n, "adjacency": {"cu": u}, "points": [[..]]}`;
//! the order of `points` defines the indices every other artifact refers
//! to. A map file is `{"table": [indices]}` and is validated against the
//! image it is used with.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::error::Error as DomainError;
use crate::image::DigitalImage;
use crate::selfmap::SelfMap;

#[derive(Error, Debug)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

fn read(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn invalid(path: &Path, message: impl ToString) -> FileError {
    FileError::Invalid {
        path: path.display().to_string(),
        message: message.to_string(),
    }
}

pub fn load_image(path: &Path) -> Result<DigitalImage, FileError> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| invalid(path, e))
}

#[derive(Deserialize)]
struct RawMap {
    table: Vec<usize>,
}

pub fn load_map(path: &Path, img: &DigitalImage) -> Result<SelfMap, FileError> {
    let text = read(path)?;
    let raw: RawMap = serde_json::from_str(&text).map_err(|e| invalid(path, e))?;
    SelfMap::new(raw.table, img).map_err(|e: DomainError| invalid(path, e))
}
