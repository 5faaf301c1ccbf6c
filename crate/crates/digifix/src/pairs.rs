//! Pairs and quadruples of self-maps: weak commutativity, weak
//! compatibility, and the common-fixed-point iteration procedures that
//! work on uniformly discrete (here: finite) metric spaces without any
//! continuity hypothesis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::DigitalImage;
use crate::lp3::{self, Constraint, Lp3Outcome};
use crate::metric::{DistMatrix, Metric, TOLERANCE};
use crate::selfmap::SelfMap;

/// Verdicts for a pair `(J, K)` of self-maps. Serialized field names are
/// the wire contract of the `pair check` subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairReport {
    pub weakly_commutative: bool,
    pub weakly_compatible: bool,
    /// Nonnegative coefficients with sum below 1 making
    /// `d(Ju,Jq) <= xi1 d(Ku,Kq) + xi2 d(Ku,Ju) + xi3 d(Kq,Jq)` hold on
    /// every pair, or `None` when no such coefficients exist.
    pub saluja_coeffs: Option<[f64; 3]>,
    /// Does `J(X)` sit inside `K(X)`?
    pub containment: bool,
}

/// Result of a common-fixed-point iteration, with the stabilized value
/// chain that led to it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommonFixedPoint {
    pub fixed_point: usize,
    /// The iterated image values (`K u_n`, or the interleaved `q_n` for
    /// four maps), ending with the first repeat.
    pub chain: Vec<usize>,
    /// Confirmed by exhaustive scan over all points.
    pub unique: bool,
}

/// Outcome of the two-sided collapse check for the inequality
/// `d(Ju,Kq) <= xi d(Lu,Lq)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LmCollapseReport {
    pub j_equals_k: bool,
    /// Whether the constancy conclusion applies: `c_1` adjacency,
    /// connected image, continuous `L`.
    pub constancy_applies: bool,
    pub j_constant: bool,
}

fn image_set(f: &SelfMap) -> Vec<usize> {
    let mut v = f.table.clone();
    v.sort_unstable();
    v.dedup();
    v
}

fn is_subset(sub: &[usize], sup: &[usize]) -> bool {
    sub.iter().all(|x| sup.binary_search(x).is_ok())
}

/// First point `x` with `d(S(T(x)), T(S(x))) > d(S(x), T(x))`, if any.
/// Single distances on both sides, so the comparison is exact whenever
/// the metric is.
pub fn weak_commutativity_violation(
    m: &Metric,
    img: &DigitalImage,
    s: &SelfMap,
    t: &SelfMap,
) -> Result<Option<usize>> {
    let dm = DistMatrix::build(m, img)?;
    for x in 0..img.len() {
        let st = s.apply(t.apply(x));
        let ts = t.apply(s.apply(x));
        if dm.lt(s.apply(x), t.apply(x), st, ts) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

pub fn is_weakly_commutative(
    m: &Metric,
    img: &DigitalImage,
    s: &SelfMap,
    t: &SelfMap,
) -> Result<bool> {
    Ok(weak_commutativity_violation(m, img, s, t)?.is_none())
}

/// Do `S` and `T` commute at every coincidence point? (Pointwise reading:
/// whenever `Sx = Tx`, also `STx = TSx`.) Vacuously true without
/// coincidence points.
pub fn is_weakly_compatible(s: &SelfMap, t: &SelfMap) -> bool {
    (0..s.len()).all(|x| {
        s.apply(x) != t.apply(x) || s.apply(t.apply(x)) == t.apply(s.apply(x))
    })
}

fn check_coefficients(xi: [f64; 3]) -> Result<()> {
    let sum: f64 = xi.iter().sum();
    if xi.iter().any(|&v| v < 0.0) || sum >= 1.0 {
        return Err(Error::CoefficientsOutOfRange { sum });
    }
    Ok(())
}

/// First ordered pair violating
/// `d(Ju,Jq) <= xi1 d(Ku,Kq) + xi2 d(Ku,Ju) + xi3 d(Kq,Jq)`.
fn saluja_inequality_violation(
    dm: &DistMatrix,
    j: &SelfMap,
    k: &SelfMap,
    xi: [f64; 3],
) -> Option<(usize, usize)> {
    let n = dm.len();
    for u in 0..n {
        for q in 0..n {
            let lhs = dm.dist_f64(j.apply(u), j.apply(q));
            let rhs = xi[0] * dm.dist_f64(k.apply(u), k.apply(q))
                + xi[1] * dm.dist_f64(k.apply(u), j.apply(u))
                + xi[2] * dm.dist_f64(k.apply(q), j.apply(q));
            if lhs > rhs + TOLERANCE {
                return Some((u, q));
            }
        }
    }
    None
}

/// Smallest-sum coefficients for the two-map inequality, when any
/// admissible ones exist.
pub fn saluja_search_coefficients(
    m: &Metric,
    img: &DigitalImage,
    j: &SelfMap,
    k: &SelfMap,
) -> Result<Option<[f64; 3]>> {
    let dm = DistMatrix::build(m, img)?;
    let n = dm.len();
    let mut rows = Vec::with_capacity(n * n);
    for u in 0..n {
        for q in 0..n {
            if u == q {
                continue;
            }
            rows.push(Constraint {
                coeffs: [
                    dm.dist_f64(k.apply(u), k.apply(q)),
                    dm.dist_f64(k.apply(u), j.apply(u)),
                    dm.dist_f64(k.apply(q), j.apply(q)),
                ],
                rhs: dm.dist_f64(j.apply(u), j.apply(q)),
            });
        }
    }
    match lp3::minimize_sum(&rows) {
        Lp3Outcome::Optimal { point, objective } if objective < 1.0 - TOLERANCE => {
            debug_assert!(saluja_inequality_violation(&dm, j, k, point).is_none());
            Ok(Some(point))
        }
        _ => Ok(None),
    }
}

/// Full pair verdict sheet for `(J, K)`.
pub fn pair_report(
    m: &Metric,
    img: &DigitalImage,
    j: &SelfMap,
    k: &SelfMap,
) -> Result<PairReport> {
    Ok(PairReport {
        weakly_commutative: is_weakly_commutative(m, img, j, k)?,
        weakly_compatible: is_weakly_compatible(j, k),
        saluja_coeffs: saluja_search_coefficients(m, img, j, k)?,
        containment: is_subset(&image_set(j), &image_set(k)),
    })
}

/// Lowest-index `x` with `f(x) = target`.
fn lowest_preimage(f: &SelfMap, target: usize) -> Option<usize> {
    (0..f.len()).find(|&x| f.apply(x) == target)
}

/// Common fixed point of two weakly commutative maps `J, K` with
/// `J(X)` inside `K(X)` and the two-map inequality holding at `xi`.
///
/// Builds `K u_n = J u_{n-1}` with lowest-index preimages, waits for the
/// chain to repeat, and returns `J a` for the stabilized value `a`.
/// Uniqueness is re-checked by scanning every point.
pub fn saluja_common_fixed_point(
    m: &Metric,
    img: &DigitalImage,
    j: &SelfMap,
    k: &SelfMap,
    xi: [f64; 3],
    start: usize,
) -> Result<CommonFixedPoint> {
    if start >= img.len() {
        return Err(Error::PointIndexOutOfRange {
            index: start,
            size: img.len(),
        });
    }
    check_coefficients(xi)?;
    let dm = DistMatrix::build(m, img)?;
    if !is_subset(&image_set(j), &image_set(k)) {
        return Err(Error::ContainmentFails {
            inner: "J",
            outer: "K",
        });
    }
    if let Some(x) = weak_commutativity_violation(m, img, j, k)? {
        return Err(Error::NotWeaklyCommutative { index: x });
    }
    if let Some((u, q)) = saluja_inequality_violation(&dm, j, k, xi) {
        return Err(Error::InequalityFails { u, q });
    }

    let cap = dm.distinct_positive_count() + 4;
    let mut u = start;
    let mut chain = Vec::new();
    let mut stabilized = None;
    for _ in 0..cap {
        let target = j.apply(u);
        u = lowest_preimage(k, target).expect("containment premise verified");
        if chain.last() == Some(&target) {
            chain.push(target);
            stabilized = Some(target);
            break;
        }
        chain.push(target);
    }
    let a = stabilized.ok_or(Error::IterationCapExceeded { cap })?;

    let fixed = j.apply(a);
    assert_eq!(j.apply(fixed), fixed, "premises verified");
    assert_eq!(k.apply(fixed), fixed, "premises verified");
    for x in 0..img.len() {
        if x != fixed && j.apply(x) == x && k.apply(x) == x {
            return Err(Error::FixedPointNotUnique {
                first: fixed.min(x),
                second: fixed.max(x),
            });
        }
    }
    Ok(CommonFixedPoint {
        fixed_point: fixed,
        chain,
        unique: true,
    })
}

fn commutation_violation(a: &SelfMap, b: &SelfMap) -> Option<usize> {
    (0..a.len()).find(|&x| a.apply(b.apply(x)) != b.apply(a.apply(x)))
}

/// First ordered pair violating `d(Ju,Kq) <= xi d(Lu,Mq)`. The diagonal
/// `u = q` matters here because `J` and `K` differ.
fn four_map_inequality_violation(
    dm: &DistMatrix,
    j: &SelfMap,
    k: &SelfMap,
    l: &SelfMap,
    m4: &SelfMap,
    xi: f64,
) -> Option<(usize, usize)> {
    let n = dm.len();
    for u in 0..n {
        for q in 0..n {
            let lhs = dm.dist_f64(j.apply(u), k.apply(q));
            let rhs = xi * dm.dist_f64(l.apply(u), m4.apply(q));
            if lhs > rhs + TOLERANCE {
                return Some((u, q));
            }
        }
    }
    None
}

/// Common fixed point of four maps with `J(X)` inside `M(X)`, `K(X)`
/// inside `L(X)`, the interleaved inequality at `xi`, and pointwise
/// commuting pairs `{J,L}` and `{K,M}`.
///
/// Builds `q_{2n} = J u_{2n} = M u_{2n+1}` and
/// `q_{2n+1} = K u_{2n+1} = L u_{2n+2}` with lowest-index preimages,
/// waits for a repeat, and re-checks that the stabilized value is fixed
/// by all four maps and unique.
pub fn four_map_common_fixed_point(
    m: &Metric,
    img: &DigitalImage,
    j: &SelfMap,
    k: &SelfMap,
    l: &SelfMap,
    m4: &SelfMap,
    xi: f64,
    start: usize,
) -> Result<CommonFixedPoint> {
    if start >= img.len() {
        return Err(Error::PointIndexOutOfRange {
            index: start,
            size: img.len(),
        });
    }
    if !(xi > 0.0 && xi < 1.0) {
        return Err(Error::XiOutOfRange { xi });
    }
    let dm = DistMatrix::build(m, img)?;
    if !is_subset(&image_set(j), &image_set(m4)) {
        return Err(Error::ContainmentFails {
            inner: "J",
            outer: "M",
        });
    }
    if !is_subset(&image_set(k), &image_set(l)) {
        return Err(Error::ContainmentFails {
            inner: "K",
            outer: "L",
        });
    }
    if let Some((u, q)) = four_map_inequality_violation(&dm, j, k, l, m4, xi) {
        return Err(Error::InequalityFails { u, q });
    }
    if let Some(x) = commutation_violation(j, l) {
        return Err(Error::NotCommuting {
            left: "J",
            right: "L",
            index: x,
        });
    }
    if let Some(x) = commutation_violation(k, m4) {
        return Err(Error::NotCommuting {
            left: "K",
            right: "M",
            index: x,
        });
    }

    let cap = 2 * dm.distinct_positive_count() + 6;
    let mut u = start;
    let mut chain = Vec::new();
    let mut stabilized = None;
    for step in 0..cap {
        let q_val = if step % 2 == 0 {
            let v = j.apply(u);
            u = lowest_preimage(m4, v).expect("containment premise verified");
            v
        } else {
            let v = k.apply(u);
            u = lowest_preimage(l, v).expect("containment premise verified");
            v
        };
        if chain.last() == Some(&q_val) {
            chain.push(q_val);
            stabilized = Some(q_val);
            break;
        }
        chain.push(q_val);
    }
    let sigma = stabilized.ok_or(Error::IterationCapExceeded { cap })?;

    for (name, map) in [("J", j), ("K", k), ("L", l), ("M", m4)] {
        assert_eq!(map.apply(sigma), sigma, "{name} must fix sigma; premises verified");
    }
    for x in 0..img.len() {
        let all_fix = [j, k, l, m4].iter().all(|f| f.apply(x) == x);
        if x != sigma && all_fix {
            return Err(Error::FixedPointNotUnique {
                first: sigma.min(x),
                second: sigma.max(x),
            });
        }
    }
    Ok(CommonFixedPoint {
        fixed_point: sigma,
        chain,
        unique: true,
    })
}

/// The degenerate `L = M` case: if `d(Ju,Kq) <= xi d(Lu,Lq)` holds
/// everywhere with `xi < 1`, then `J = K` outright (take `q = u`), and on
/// a connected `c_1` image with continuous `L` the map `J` is constant.
pub fn lm_collapse_check(
    m: &Metric,
    img: &DigitalImage,
    j: &SelfMap,
    k: &SelfMap,
    l: &SelfMap,
    xi: f64,
) -> Result<LmCollapseReport> {
    if !(xi > 0.0 && xi < 1.0) {
        return Err(Error::XiOutOfRange { xi });
    }
    let dm = DistMatrix::build(m, img)?;
    if let Some((u, q)) = four_map_inequality_violation(&dm, j, k, l, l, xi) {
        return Err(Error::InequalityFails { u, q });
    }
    let constancy_applies = img.u() == 1 && img.is_connected() && l.is_continuous(img);
    Ok(LmCollapseReport {
        j_equals_k: j == k,
        constancy_applies,
        j_constant: j.is_constant(),
    })
}
