//! Metrics on digital images and the exact-comparison carrier for their
//! values.
//!
//! Every comparison the classification code makes is of the form
//! `d(a,b) < d(c,d)`. For an `l_p` metric with integer `p` that question
//! is decided exactly on the integer payloads `sum |x_i - y_i|^p`
//! (squared values for the Euclidean metric); the shortest-path metric is
//! an exact hop count. Only non-integer `p` falls back to doubles, with a
//! fixed comparison tolerance.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::{DigitalImage, Point};

/// Tolerance for all floating-point comparisons in the crate. Decision
/// boundaries in the supported scenarios are separated by far more than
/// this for coordinates up to about 10^3.
pub const TOLERANCE: f64 = 1e-9;

/// A metric on a digital image: an `l_p` metric (exact for integer `p`,
/// approximate otherwise) or the shortest-path metric of the adjacency
/// graph (which requires a connected image).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Metric {
    /// `l_p` with integer order; `Lp(1)` is Manhattan, `Lp(2)` Euclidean.
    Lp(u32),
    /// `l_p` with non-integer order, compared with [`TOLERANCE`].
    LpApprox(f64),
    /// Hop count of a shortest path in the adjacency graph.
    ShortestPath,
}

impl Metric {
    pub const EUCLIDEAN: Metric = Metric::Lp(2);
    pub const MANHATTAN: Metric = Metric::Lp(1);

    pub fn validate(&self) -> Result<()> {
        match *self {
            Metric::Lp(p) if p >= 1 => Ok(()),
            Metric::Lp(p) => Err(Error::MetricOrderOutOfRange { p: p as f64 }),
            Metric::LpApprox(p) if p >= 1.0 => Ok(()),
            Metric::LpApprox(p) => Err(Error::MetricOrderOutOfRange { p }),
            Metric::ShortestPath => Ok(()),
        }
    }

    /// Parse the CLI spelling: `l1`, `l2`, `hop`, or `lp:<p>`.
    pub fn parse(s: &str) -> Result<Metric> {
        let m = match s {
            "l1" => Metric::Lp(1),
            "l2" => Metric::Lp(2),
            "hop" => Metric::ShortestPath,
            other => {
                let p = other
                    .strip_prefix("lp:")
                    .ok_or(Error::MetricOrderOutOfRange { p: f64::NAN })?;
                if let Ok(int) = p.parse::<u32>() {
                    Metric::Lp(int)
                } else {
                    Metric::LpApprox(
                        p.parse::<f64>()
                            .map_err(|_| Error::MetricOrderOutOfRange { p: f64::NAN })?,
                    )
                }
            }
        };
        m.validate()?;
        Ok(m)
    }
}

impl std::fmt::Display for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Metric::Lp(1) => write!(f, "l1"),
            Metric::Lp(2) => write!(f, "l2"),
            Metric::Lp(p) => write!(f, "lp:{p}"),
            Metric::LpApprox(p) => write!(f, "lp:{p}"),
            Metric::ShortestPath => write!(f, "hop"),
        }
    }
}

/// A metric value carrying enough structure for exact comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistanceValue {
    /// `sum |x_i - y_i|^p` stored exactly; the distance is `value^(1/p)`.
    PthPower { value: i64, p: u32 },
    /// Hop count of a shortest path.
    Hops(u64),
    /// Distance itself, for non-integer `p`; compared with [`TOLERANCE`].
    Approx(f64),
}

impl DistanceValue {
    pub fn is_zero(&self) -> bool {
        match *self {
            DistanceValue::PthPower { value, .. } => value == 0,
            DistanceValue::Hops(h) => h == 0,
            DistanceValue::Approx(v) => v.abs() <= TOLERANCE,
        }
    }

    /// The actual distance as a double.
    pub fn as_f64(&self) -> f64 {
        match *self {
            DistanceValue::PthPower { value, p: 1 } => value as f64,
            DistanceValue::PthPower { value, p: 2 } => (value as f64).sqrt(),
            DistanceValue::PthPower { value, p } => (value as f64).powf(1.0 / p as f64),
            DistanceValue::Hops(h) => h as f64,
            DistanceValue::Approx(v) => v,
        }
    }

    /// The exact squared value when this is a Euclidean distance.
    pub fn squared_euclidean(&self) -> Option<i64> {
        match *self {
            DistanceValue::PthPower { value, p: 2 } => Some(value),
            _ => None,
        }
    }

    /// The exact integer payload, when there is one.
    pub fn exact_payload(&self) -> Option<i64> {
        match *self {
            DistanceValue::PthPower { value, .. } => Some(value),
            DistanceValue::Hops(h) => Some(h as i64),
            DistanceValue::Approx(_) => None,
        }
    }
}

impl PartialOrd for DistanceValue {
    /// Comparable only within one metric kind. Exact for integer payloads;
    /// `Approx` values within [`TOLERANCE`] compare equal.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (*self, *other) {
            (
                DistanceValue::PthPower { value: a, p },
                DistanceValue::PthPower { value: b, p: q },
            ) if p == q => Some(a.cmp(&b)),
            (DistanceValue::Hops(a), DistanceValue::Hops(b)) => Some(a.cmp(&b)),
            (DistanceValue::Approx(a), DistanceValue::Approx(b)) => {
                if (a - b).abs() <= TOLERANCE {
                    Some(Ordering::Equal)
                } else {
                    a.partial_cmp(&b)
                }
            }
            _ => None,
        }
    }
}

fn lp_payload(x: &Point, y: &Point, p: u32) -> i64 {
    x.coords()
        .iter()
        .zip(y.coords())
        .map(|(a, b)| {
            let d = (a - b).abs();
            d.checked_pow(p).expect("coordinate gap overflows i64")
        })
        .fold(0i64, |acc, t| {
            acc.checked_add(t).expect("l_p payload overflows i64")
        })
}

fn lp_approx(x: &Point, y: &Point, p: f64) -> f64 {
    x.coords()
        .iter()
        .zip(y.coords())
        .map(|(a, b)| ((a - b).abs() as f64).powf(p))
        .sum::<f64>()
        .powf(1.0 / p)
}

/// The distance between two points of `img` under `m`.
///
/// The shortest-path metric is only defined on a connected image; the
/// other metrics need the points to belong to the image but nothing else.
pub fn distance(m: &Metric, img: &DigitalImage, x: &Point, y: &Point) -> Result<DistanceValue> {
    m.validate()?;
    let i = img.require_index(x)?;
    let j = img.require_index(y)?;
    match *m {
        Metric::Lp(p) => Ok(DistanceValue::PthPower {
            value: lp_payload(x, y, p),
            p,
        }),
        Metric::LpApprox(p) => Ok(DistanceValue::Approx(lp_approx(x, y, p))),
        Metric::ShortestPath => {
            if !img.is_connected() {
                return Err(Error::DisconnectedImage);
            }
            Ok(DistanceValue::Hops(img.hops_from(i)[j].expect(
                "connected image has a path between any two points",
            )))
        }
    }
}

/// All pairwise distances of an image, in a representation the hot loops
/// can compare without re-deriving payload kinds.
#[derive(Debug, Clone)]
pub enum DistMatrix {
    Int { n: usize, p: u32, v: Vec<i64> },
    Float { n: usize, v: Vec<f64> },
}

impl DistMatrix {
    pub fn build(m: &Metric, img: &DigitalImage) -> Result<DistMatrix> {
        m.validate()?;
        let n = img.len();
        match *m {
            Metric::Lp(p) => {
                let mut v = vec![0i64; n * n];
                for i in 0..n {
                    for j in 0..i {
                        let d = lp_payload(&img.points()[i], &img.points()[j], p);
                        v[i * n + j] = d;
                        v[j * n + i] = d;
                    }
                }
                Ok(DistMatrix::Int { n, p, v })
            }
            Metric::LpApprox(p) => {
                let mut v = vec![0f64; n * n];
                for i in 0..n {
                    for j in 0..i {
                        let d = lp_approx(&img.points()[i], &img.points()[j], p);
                        v[i * n + j] = d;
                        v[j * n + i] = d;
                    }
                }
                Ok(DistMatrix::Float { n, v })
            }
            Metric::ShortestPath => {
                if !img.is_connected() {
                    return Err(Error::DisconnectedImage);
                }
                let mut v = vec![0i64; n * n];
                for i in 0..n {
                    for (j, d) in img.hops_from(i).iter().enumerate() {
                        v[i * n + j] = d.expect("connected image") as i64;
                    }
                }
                Ok(DistMatrix::Int { n, p: 1, v })
            }
        }
    }

    pub fn len(&self) -> usize {
        match self {
            DistMatrix::Int { n, .. } | DistMatrix::Float { n, .. } => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Is `d(i,j) < d(k,l)`? Exact on integer payloads.
    pub fn lt(&self, i: usize, j: usize, k: usize, l: usize) -> bool {
        match self {
            DistMatrix::Int { n, v, .. } => v[i * n + j] < v[k * n + l],
            DistMatrix::Float { n, v } => v[i * n + j] < v[k * n + l] - TOLERANCE,
        }
    }

    pub fn is_zero(&self, i: usize, j: usize) -> bool {
        match self {
            DistMatrix::Int { n, v, .. } => v[i * n + j] == 0,
            DistMatrix::Float { n, v } => v[i * n + j].abs() <= TOLERANCE,
        }
    }

    /// Exact payload (p-th power or hops), if the matrix is exact.
    pub fn payload(&self, i: usize, j: usize) -> Option<i64> {
        match self {
            DistMatrix::Int { n, v, .. } => Some(v[i * n + j]),
            DistMatrix::Float { .. } => None,
        }
    }

    /// The distance itself as a double.
    pub fn dist_f64(&self, i: usize, j: usize) -> f64 {
        match self {
            DistMatrix::Int { n, p, v } => match p {
                1 => v[i * n + j] as f64,
                2 => (v[i * n + j] as f64).sqrt(),
                _ => (v[i * n + j] as f64).powf(1.0 / *p as f64),
            },
            DistMatrix::Float { n, v } => v[i * n + j],
        }
    }

    /// Number of distinct positive distance values in the image.
    pub fn distinct_positive_count(&self) -> usize {
        match self {
            DistMatrix::Int { n, v, .. } => {
                let mut vals: Vec<i64> = (0..*n)
                    .flat_map(|i| (0..i).map(move |j| v[i * n + j]))
                    .filter(|&d| d > 0)
                    .collect();
                vals.sort_unstable();
                vals.dedup();
                vals.len()
            }
            DistMatrix::Float { n, v } => {
                let mut vals: Vec<f64> = (0..*n)
                    .flat_map(|i| (0..i).map(move |j| v[i * n + j]))
                    .filter(|&d| d > TOLERANCE)
                    .collect();
                vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
                vals.dedup_by(|a, b| (*a - *b).abs() <= TOLERANCE);
                vals.len()
            }
        }
    }

    fn value_at(&self, i: usize, j: usize) -> DistanceValue {
        match self {
            DistMatrix::Int { n, p, v } if *p == 1 => {
                // hop matrices and l1 share payload == distance
                DistanceValue::PthPower {
                    value: v[i * n + j],
                    p: 1,
                }
            }
            DistMatrix::Int { n, p, v } => DistanceValue::PthPower {
                value: v[i * n + j],
                p: *p,
            },
            DistMatrix::Float { n, v } => DistanceValue::Approx(v[i * n + j]),
        }
    }
}

/// The maximum pairwise distance of a nonempty image.
pub fn diameter(m: &Metric, img: &DigitalImage) -> Result<DistanceValue> {
    if img.is_empty() {
        return Err(Error::EmptyImage);
    }
    let dm = DistMatrix::build(m, img)?;
    let n = dm.len();
    let mut best = (0usize, 0usize);
    for i in 0..n {
        for j in 0..i {
            if dm.lt(best.0, best.1, i, j) {
                best = (i, j);
            }
        }
    }
    Ok(dm.value_at(best.0, best.1))
}

/// The minimum positive pairwise distance: a uniform-discreteness witness.
/// Any two points of the image closer than this are equal. A singleton
/// image returns the conventional witness 1.
pub fn uniform_discreteness_witness(m: &Metric, img: &DigitalImage) -> Result<DistanceValue> {
    if img.is_empty() {
        return Err(Error::EmptyImage);
    }
    if img.len() == 1 {
        return Ok(match *m {
            Metric::Lp(p) => DistanceValue::PthPower { value: 1, p },
            Metric::LpApprox(_) => DistanceValue::Approx(1.0),
            Metric::ShortestPath => DistanceValue::Hops(1),
        });
    }
    let dm = DistMatrix::build(m, img)?;
    let n = dm.len();
    let mut best: Option<(usize, usize)> = None;
    for i in 0..n {
        for j in 0..i {
            if dm.is_zero(i, j) {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((k, l)) if dm.lt(i, j, k, l) => best = Some((i, j)),
                _ => {}
            }
        }
    }
    let (i, j) = best.expect("distinct points have positive distance");
    Ok(if matches!(m, Metric::ShortestPath) {
        DistanceValue::Hops(dm.payload(i, j).unwrap() as u64)
    } else {
        dm.value_at(i, j)
    })
}

/// First adjacent pair whose squared Euclidean distance differs from `u`,
/// as `(i, j, squared)`. Requires a connected image.
pub fn uniform_connectivity_violation(img: &DigitalImage) -> Result<Option<(usize, usize, i64)>> {
    if !img.is_connected() {
        return Err(Error::DisconnectedImage);
    }
    let u = img.u() as i64;
    let n = img.len();
    for i in 0..n {
        for j in 0..i {
            if !img.adjacent(i, j) {
                continue;
            }
            let sq = lp_payload(&img.points()[i], &img.points()[j], 2);
            if sq != u {
                return Ok(Some((i, j, sq)));
            }
        }
    }
    Ok(None)
}

/// Is every adjacent pair of this connected image at Euclidean distance
/// exactly `sqrt(u)`? Decided exactly on squared distances.
pub fn is_uniformly_connected(img: &DigitalImage) -> Result<bool> {
    Ok(uniform_connectivity_violation(img)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sharp_triple() -> DigitalImage {
        DigitalImage::from_coords(
            &[&[0, 0, 0, 0, 0], &[2, 0, 0, 0, 0], &[1, 1, 1, 1, 1]],
            5,
        )
        .unwrap()
    }

    #[test]
    fn euclidean_distances_of_the_triple() {
        let img = sharp_triple();
        let [x0, x1, x2] = [0, 1, 2].map(|i| img.point(i).unwrap().clone());
        let d01 = distance(&Metric::EUCLIDEAN, &img, &x0, &x1).unwrap();
        let d02 = distance(&Metric::EUCLIDEAN, &img, &x0, &x2).unwrap();
        let d12 = distance(&Metric::EUCLIDEAN, &img, &x1, &x2).unwrap();
        assert_eq!(d01.squared_euclidean(), Some(4));
        assert_eq!(d02.squared_euclidean(), Some(5));
        assert_eq!(d12.squared_euclidean(), Some(5));
        assert!(d01 < d02);
        assert_eq!(d02.partial_cmp(&d12), Some(Ordering::Equal));
        let dxx = distance(&Metric::EUCLIDEAN, &img, &x0, &x0).unwrap();
        assert!(dxx.is_zero());
    }

    #[test]
    fn distance_rejects_foreign_points() {
        let img = sharp_triple();
        let x0 = img.point(0).unwrap().clone();
        let foreign = Point::new([9, 9, 9, 9, 9]);
        assert!(matches!(
            distance(&Metric::EUCLIDEAN, &img, &x0, &foreign),
            Err(Error::PointNotInImage(_))
        ));
    }

    #[test]
    fn shortest_path_metric_needs_connectivity() {
        let img = DigitalImage::from_coords(&[&[0, 0], &[5, 5]], 1).unwrap();
        let a = img.point(0).unwrap().clone();
        let b = img.point(1).unwrap().clone();
        assert_eq!(
            distance(&Metric::ShortestPath, &img, &a, &b),
            Err(Error::DisconnectedImage)
        );
        assert_eq!(diameter(&Metric::ShortestPath, &img), Err(Error::DisconnectedImage));
    }

    #[test]
    fn diameter_of_the_triple_is_root_five() {
        let img = sharp_triple();
        let d = diameter(&Metric::EUCLIDEAN, &img).unwrap();
        assert_eq!(d.squared_euclidean(), Some(5));
    }

    #[test]
    fn diameter_trivia() {
        let single = DigitalImage::from_coords(&[&[7]], 1).unwrap();
        assert!(diameter(&Metric::EUCLIDEAN, &single).unwrap().is_zero());
        let pair = DigitalImage::from_coords(&[&[0, 0], &[3, 0]], 1).unwrap();
        assert_eq!(
            diameter(&Metric::MANHATTAN, &pair).unwrap().exact_payload(),
            Some(3)
        );
        let empty = DigitalImage::new(1, vec![], crate::image::AdjacencySpec::new(1)).unwrap();
        assert_eq!(diameter(&Metric::EUCLIDEAN, &empty), Err(Error::EmptyImage));
    }

    #[test]
    fn discreteness_witness_values() {
        // min over {2, sqrt 5, sqrt 5} is 2, squared 4
        let img = sharp_triple();
        let w = uniform_discreteness_witness(&Metric::EUCLIDEAN, &img).unwrap();
        assert_eq!(w.squared_euclidean(), Some(4));

        let single = DigitalImage::from_coords(&[&[0]], 1).unwrap();
        let w1 = uniform_discreteness_witness(&Metric::EUCLIDEAN, &single).unwrap();
        assert_eq!(w1.squared_euclidean(), Some(1));

        let path = DigitalImage::from_coords(&[&[0], &[1], &[2]], 1).unwrap();
        let wh = uniform_discreteness_witness(&Metric::ShortestPath, &path).unwrap();
        assert_eq!(wh, DistanceValue::Hops(1));
    }

    #[test]
    fn uniformly_connected_checks() {
        assert!(is_uniformly_connected(&sharp_triple()).unwrap());
        let straight = DigitalImage::from_coords(&[&[0, 0], &[1, 0]], 2).unwrap();
        assert!(!is_uniformly_connected(&straight).unwrap());
        let diag = DigitalImage::from_coords(&[&[0, 0], &[1, 1]], 2).unwrap();
        assert!(is_uniformly_connected(&diag).unwrap());
        let disconnected = DigitalImage::from_coords(&[&[0, 0], &[5, 5]], 1).unwrap();
        assert_eq!(
            is_uniformly_connected(&disconnected),
            Err(Error::DisconnectedImage)
        );
    }

    #[test]
    fn metric_parsing() {
        assert_eq!(Metric::parse("l1").unwrap(), Metric::Lp(1));
        assert_eq!(Metric::parse("l2").unwrap(), Metric::Lp(2));
        assert_eq!(Metric::parse("hop").unwrap(), Metric::ShortestPath);
        assert_eq!(Metric::parse("lp:3").unwrap(), Metric::Lp(3));
        assert_eq!(Metric::parse("lp:2.5").unwrap(), Metric::LpApprox(2.5));
        assert!(Metric::parse("lp:0.5").is_err());
        assert!(Metric::parse("chebyshev").is_err());
    }

    #[test]
    fn c1_adjacent_pairs_sit_at_lp_distance_one() {
        let img = DigitalImage::from_coords(&[&[0, 0], &[1, 0], &[1, 1]], 1).unwrap();
        for p in [1, 2, 3, 7] {
            for i in 0..img.len() {
                for j in 0..i {
                    if img.adjacent(i, j) {
                        let d = lp_payload(&img.points()[i], &img.points()[j], p);
                        assert_eq!(d, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn distinct_positive_distance_count() {
        let img = sharp_triple();
        let dm = DistMatrix::build(&Metric::EUCLIDEAN, &img).unwrap();
        assert_eq!(dm.distinct_positive_count(), 2); // {2, sqrt 5}
    }
}
