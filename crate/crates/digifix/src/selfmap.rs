//! Self-maps of a digital image, stored as index tables: entry `i` is the
//! index of the image of point `i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::DigitalImage;

/// A total map `X -> X` as an index table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SelfMap {
    pub table: Vec<usize>,
}

/// Outcome of iterating the image sets `X, f(X), f^2(X), ...`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ImageSequence {
    /// Successive image sets as sorted index lists, ending either with two
    /// equal sets (stabilized) or at the step cap.
    pub sets: Vec<Vec<usize>>,
    pub stabilized: bool,
}

impl SelfMap {
    /// Build a map for `img`, checking totality.
    pub fn new(table: Vec<usize>, img: &DigitalImage) -> Result<Self> {
        Self::with_size(table, img.len())
    }

    pub fn with_size(table: Vec<usize>, size: usize) -> Result<Self> {
        if table.len() != size {
            return Err(Error::TableLengthMismatch {
                len: table.len(),
                size,
            });
        }
        for (index, &value) in table.iter().enumerate() {
            if value >= size {
                return Err(Error::TableEntryOutOfRange { index, value, size });
            }
        }
        Ok(SelfMap { table })
    }

    pub fn identity(size: usize) -> Self {
        SelfMap {
            table: (0..size).collect(),
        }
    }

    pub fn constant(size: usize, target: usize) -> Result<Self> {
        Self::with_size(vec![target; size], size)
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn is_constant(&self) -> bool {
        self.table.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` after `other`: `(self.compose(other))(x) = self(other(x))`.
    pub fn compose(&self, other: &SelfMap) -> Result<SelfMap> {
        if self.len() != other.len() {
            return Err(Error::MapSizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(SelfMap {
            table: other.table.iter().map(|&i| self.table[i]).collect(),
        })
    }

    /// The n-fold composition; `iterate(0)` is the identity.
    pub fn iterate(&self, n: usize) -> SelfMap {
        let mut out = SelfMap::identity(self.len());
        for _ in 0..n {
            out = self.compose(&out).expect("same size by construction");
        }
        out
    }

    /// Indices fixed by the map, in increasing order.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.table
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i == v)
            .map(|(i, _)| i)
            .collect()
    }

    /// Digital continuity: every adjacent pair maps to equal or adjacent
    /// points.
    pub fn is_continuous(&self, img: &DigitalImage) -> bool {
        let n = img.len();
        for i in 0..n {
            for j in 0..i {
                if !img.adjacent(i, j) {
                    continue;
                }
                let (fi, fj) = (self.table[i], self.table[j]);
                if fi != fj && !img.adjacent(fi, fj) {
                    return false;
                }
            }
        }
        true
    }

    /// The sets `X, f(X), f^2(X), ...` until two consecutive sets are
    /// equal or `max_steps` images have been taken.
    pub fn image_sequence(&self, max_steps: usize) -> ImageSequence {
        let mut sets = vec![(0..self.len()).collect::<Vec<_>>()];
        let mut stabilized = false;
        for _ in 0..max_steps {
            let prev = sets.last().unwrap();
            let mut next: Vec<usize> = prev.iter().map(|&i| self.table[i]).collect();
            next.sort_unstable();
            next.dedup();
            let done = *prev == next;
            sets.push(next);
            if done {
                stabilized = true;
                break;
            }
        }
        ImageSequence { sets, stabilized }
    }

    /// Default step cap for [`image_sequence`](Self::image_sequence): the
    /// image sets of a self-map of a finite set must repeat by then.
    pub fn default_step_cap(&self) -> usize {
        2 * self.len().max(1)
    }
}

/// A finite window of a sequence of point indices, with an optional
/// claimed stabilization index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceWindow {
    pub values: Vec<usize>,
    pub claimed: Option<usize>,
}

impl SequenceWindow {
    pub fn new(values: Vec<usize>, claimed: Option<usize>) -> Result<Self> {
        if let Some(m) = claimed {
            let ok = m < values.len() && values[m..].windows(2).all(|w| w[0] == w[1]);
            if !ok {
                return Err(Error::UnstableClaim { index: m });
            }
        }
        Ok(SequenceWindow { values, claimed })
    }

    /// The earliest index from which the window is constant, provided the
    /// constancy is witnessed by at least one later entry. A bare final
    /// element witnesses nothing, so `[1,2,1,2]` is not eventually
    /// constant within its window.
    pub fn stabilization_index(&self) -> Option<usize> {
        let n = self.values.len();
        if n < 2 {
            return None;
        }
        let last = self.values[n - 1];
        if self.values[n - 2] != last {
            return None;
        }
        let mut idx = n - 2;
        while idx > 0 && self.values[idx - 1] == last {
            idx -= 1;
        }
        Some(idx)
    }

    pub fn is_eventually_constant(&self) -> bool {
        self.stabilization_index().is_some()
    }
}
