//! Digital images: finite point sets in the integer lattice with a
//! `c_u` adjacency, viewed as graphs.
//!
//! Two lattice points are `c_u`-adjacent when they differ by exactly 1 in
//! at most `u` coordinates and agree in every other coordinate. The pair
//! `(points, c_u)` is an undirected graph; connectivity, paths and
//! neighborhoods below are plain graph notions on it.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lattice point in Z^n. Serializes as a bare coordinate array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point(pub Vec<i64>);

impl Point {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Point(coords.into())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Componentwise translation by `delta`.
    pub fn translate(&self, delta: &[i64]) -> Point {
        Point(
            self.0
                .iter()
                .zip(delta)
                .map(|(c, d)| c + d)
                .collect(),
        )
    }
}

/// The `u` of a `c_u` adjacency. Valid range is `1..=dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencySpec {
    #[serde(rename = "cu")]
    pub u: usize,
}

impl AdjacencySpec {
    pub fn new(u: usize) -> Self {
        AdjacencySpec { u }
    }
}

/// Are `x` and `y` `c_u`-adjacent? True iff `x != y`, at most `u` indices
/// differ by exactly 1, and every other index is equal.
pub fn cu_adjacent(x: &Point, y: &Point, u: usize) -> Result<bool> {
    let n = x.dim();
    if y.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: y.dim(),
        });
    }
    if u < 1 || u > n {
        return Err(Error::AdjacencyOutOfRange { u, dim: n });
    }
    let mut changed = 0usize;
    for (a, b) in x.coords().iter().zip(y.coords()) {
        match (a - b).abs() {
            0 => {}
            1 => changed += 1,
            _ => return Ok(false),
        }
    }
    Ok(changed >= 1 && changed <= u)
}

/// A finite digital image `(X, c_u)`: an ordered list of distinct lattice
/// points plus the adjacency parameter. Point order is significant; it
/// defines the indices that self-maps and reports refer to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawImage")]
pub struct DigitalImage {
    dim: usize,
    adjacency: AdjacencySpec,
    points: Vec<Point>,
}

/// Wire form of an image, before invariants are checked.
#[derive(Debug, Clone, Deserialize)]
struct RawImage {
    dim: usize,
    adjacency: AdjacencySpec,
    points: Vec<Point>,
}

impl TryFrom<RawImage> for DigitalImage {
    type Error = Error;

    fn try_from(raw: RawImage) -> Result<Self> {
        DigitalImage::new(raw.dim, raw.points, raw.adjacency)
    }
}

impl DigitalImage {
    pub fn new(dim: usize, points: Vec<Point>, adjacency: AdjacencySpec) -> Result<Self> {
        if adjacency.u < 1 || adjacency.u > dim {
            return Err(Error::AdjacencyOutOfRange {
                u: adjacency.u,
                dim,
            });
        }
        for (i, p) in points.iter().enumerate() {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: p.dim(),
                });
            }
            for (j, q) in points.iter().enumerate().take(i) {
                if p == q {
                    return Err(Error::DuplicatePoint {
                        point: p.clone(),
                        first: j,
                        second: i,
                    });
                }
            }
        }
        Ok(DigitalImage {
            dim,
            adjacency,
            points,
        })
    }

    /// Convenience constructor from coordinate arrays.
    pub fn from_coords(coords: &[&[i64]], u: usize) -> Result<Self> {
        let dim = coords.first().map_or(1, |c| c.len());
        let points = coords.iter().map(|c| Point(c.to_vec())).collect();
        DigitalImage::new(dim, points, AdjacencySpec::new(u))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn u(&self) -> usize {
        self.adjacency.u
    }

    pub fn adjacency(&self) -> AdjacencySpec {
        self.adjacency
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, index: usize) -> Result<&Point> {
        self.points.get(index).ok_or(Error::PointIndexOutOfRange {
            index,
            size: self.points.len(),
        })
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn require_index(&self, p: &Point) -> Result<usize> {
        self.index_of(p)
            .ok_or_else(|| Error::PointNotInImage(p.clone()))
    }

    /// Adjacency by point index. Panics on out-of-range indices.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        cu_adjacent(&self.points[i], &self.points[j], self.adjacency.u)
            .expect("points of one image share its dimension")
    }

    /// The full adjacency matrix, row-major. Irreflexive and symmetric by
    /// construction of `cu_adjacent`; tests re-check both.
    pub fn adjacency_matrix(&self) -> Vec<bool> {
        let n = self.points.len();
        let mut m = vec![false; n * n];
        for i in 0..n {
            for j in 0..i {
                let a = self.adjacent(i, j);
                m[i * n + j] = a;
                m[j * n + i] = a;
            }
        }
        m
    }

    /// Neighbor index lists, one per point, each in increasing order.
    pub fn neighbor_lists(&self) -> Vec<Vec<usize>> {
        let n = self.points.len();
        let mut lists = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..i {
                if self.adjacent(i, j) {
                    lists[i].push(j);
                    lists[j].push(i);
                }
            }
        }
        lists
    }

    /// Connected-component labels in discovery order: component ids are
    /// assigned 0,1,... as unvisited points are met in index order.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.points.len();
        let lists = self.neighbor_lists();
        let mut label = vec![usize::MAX; n];
        let mut next = 0usize;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            label[start] = next;
            while let Some(v) = queue.pop_front() {
                for &w in &lists[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// The partition of point indices into connected components, each
    /// block sorted, blocks in discovery order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let labels = self.component_labels();
        let count = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Hop counts from `start` by BFS; `None` for unreachable points.
    pub fn hops_from(&self, start: usize) -> Vec<Option<u64>> {
        let n = self.points.len();
        let lists = self.neighbor_lists();
        let mut dist = vec![None; n];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &lists[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest path between two points of the image, or
    /// `None` when they lie in different components.
    pub fn shortest_path_length(&self, x: &Point, y: &Point) -> Result<Option<u64>> {
        let i = self.require_index(x)?;
        let j = self.require_index(y)?;
        Ok(self.hops_from(i)[j])
    }

    /// The radius-`r` neighborhood of `x`: all points of the component of
    /// `x` within hop distance `r`. Always the hop metric, whatever metric
    /// a caller classifies with; on a disconnected image this silently
    /// restricts to the component of `x`.
    pub fn neighborhood(&self, x: &Point, r: u64) -> Result<Vec<usize>> {
        let i = self.require_index(x)?;
        Ok(self
            .hops_from(i)
            .iter()
            .enumerate()
            .filter(|(_, d)| matches!(d, Some(h) if *h <= r))
            .map(|(j, _)| j)
            .collect())
    }

    /// Same image with every point translated by `delta`.
    pub fn translated(&self, delta: &[i64]) -> Result<Self> {
        if delta.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: delta.len(),
            });
        }
        let points = self.points.iter().map(|p| p.translate(delta)).collect();
        DigitalImage::new(self.dim, points, self.adjacency)
    }
}
