//! Classification of a self-map against the contraction notions, plus the
//! corrected fixed-point procedures that depend on them.
//!
//! On a finite image the Banach condition (`d(fx,fy) <= gamma d(x,y)` for
//! some `gamma < 1`) is equivalent to plain strict distance decrease, and
//! both are decided exactly on integer payloads whenever the metric
//! allows. The Kannan and Reich conditions mix sums of radicals, so they
//! are evaluated in doubles with the crate-wide tolerance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::{DigitalImage, Point};
use crate::lp3::{self, Constraint, Lp3Outcome};
use crate::metric::{self, DistMatrix, Metric, TOLERANCE};
use crate::selfmap::SelfMap;

/// The optimal Banach modulus of a map: the supremum over point pairs of
/// `d(fx,fy) / d(x,y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BanachModulus {
    /// The modulus as a float.
    pub value: f64,
    /// Reduced exact ratio in payload space (p-th powers of distances;
    /// squared values for the Euclidean metric) when the metric is exact.
    pub exact_pow: Option<(i64, i64)>,
    /// Whether the modulus is strictly below 1.
    pub is_banach: bool,
}

/// The optimal Kannan modulus: the supremum over pairs of
/// `d(fx,fy) / (d(x,fx) + d(y,fy))`, or `None` when some pair has a
/// positive numerator over a zero denominator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KannanModulus {
    pub k_star: Option<f64>,
    pub is_kannan: bool,
}

/// Feasibility of the existential Reich condition: nonnegative `(a,b,c)`
/// with `a+b+c < 1` and `d(fx,fy) <= a d(x,fx) + b d(y,fy) + c d(x,y)`
/// for every ordered pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReichFeasibility {
    pub feasible: bool,
    /// A minimizing triple when feasible.
    pub witness: Option<[f64; 3]>,
    /// The minimal value of `a+b+c` over all triples satisfying the
    /// per-pair constraints, ignoring the `< 1` cutoff.
    pub optimum: Option<f64>,
}

/// Result of collapsing an image under a distance-decreasing map.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Collapse {
    /// Minimal `n` with `|f^n(X)| = 1`.
    pub steps: usize,
    /// The surviving point, necessarily the unique fixed point.
    pub fixed_point: usize,
}

/// Orbit of the Kannan fixed-point iteration, ending with the repeated
/// fixed point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KannanOrbit {
    pub fixed_point: usize,
    pub orbit: Vec<usize>,
}

/// Full per-map verdict sheet. Serialized field names are the wire
/// contract of the `map classify` subcommand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub gamma_star: f64,
    pub is_banach: bool,
    pub is_distance_decreasing: bool,
    pub kannan_k_star: Option<f64>,
    pub is_kannan: bool,
    pub reich_feasible: bool,
    pub reich_witness: Option<[f64; 3]>,
    pub reich_universal: bool,
    pub continuous: bool,
    pub constant: bool,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// First pair (i, j), i > j, violating strict distance decrease.
pub(crate) fn distance_decrease_violation(dm: &DistMatrix, f: &SelfMap) -> Option<(usize, usize)> {
    let n = dm.len();
    for i in 0..n {
        for j in 0..i {
            if !dm.lt(f.apply(i), f.apply(j), i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Does `d(fx,fy) < d(x,y)` hold for every pair of distinct points?
pub fn is_distance_decreasing(m: &Metric, img: &DigitalImage, f: &SelfMap) -> Result<bool> {
    let dm = DistMatrix::build(m, img)?;
    Ok(distance_decrease_violation(&dm, f).is_none())
}

/// The optimal Banach modulus. Needs at least two points.
pub fn banach_modulus(m: &Metric, img: &DigitalImage, f: &SelfMap) -> Result<BanachModulus> {
    if img.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            size: img.len(),
        });
    }
    let dm = DistMatrix::build(m, img)?;
    let n = dm.len();
    match &dm {
        DistMatrix::Int { p, .. } => {
            // exact: track the max payload ratio by cross-multiplication
            let (mut num, mut den) = (0i64, 1i64);
            for i in 0..n {
                for j in 0..i {
                    let a = dm.payload(f.apply(i), f.apply(j)).unwrap();
                    let b = dm.payload(i, j).unwrap();
                    if (a as i128) * (den as i128) > (num as i128) * (b as i128) {
                        (num, den) = (a, b);
                    }
                }
            }
            let g = gcd(num, den);
            let (num, den) = (num / g, den / g);
            let ratio = num as f64 / den as f64;
            let value = match p {
                1 => ratio,
                2 => ratio.sqrt(),
                _ => ratio.powf(1.0 / *p as f64),
            };
            Ok(BanachModulus {
                value,
                exact_pow: Some((num, den)),
                is_banach: num < den,
            })
        }
        DistMatrix::Float { .. } => {
            let mut value = 0f64;
            for i in 0..n {
                for j in 0..i {
                    let ratio = dm.dist_f64(f.apply(i), f.apply(j)) / dm.dist_f64(i, j);
                    value = value.max(ratio);
                }
            }
            Ok(BanachModulus {
                value,
                exact_pow: None,
                is_banach: value < 1.0 - TOLERANCE,
            })
        }
    }
}

/// The optimal Kannan modulus. Pairs with both points fixed contribute
/// nothing; a moved pair over a zero denominator makes the condition
/// unsatisfiable.
pub fn kannan_modulus(m: &Metric, img: &DigitalImage, f: &SelfMap) -> Result<KannanModulus> {
    let dm = DistMatrix::build(m, img)?;
    let n = dm.len();
    let mut k_star = 0f64;
    for i in 0..n {
        for j in 0..i {
            let num_zero = dm.is_zero(f.apply(i), f.apply(j));
            let den_zero = dm.is_zero(i, f.apply(i)) && dm.is_zero(j, f.apply(j));
            if den_zero {
                if num_zero {
                    continue;
                }
                return Ok(KannanModulus {
                    k_star: None,
                    is_kannan: false,
                });
            }
            let num = dm.dist_f64(f.apply(i), f.apply(j));
            let den = dm.dist_f64(i, f.apply(i)) + dm.dist_f64(j, f.apply(j));
            k_star = k_star.max(num / den);
        }
    }
    Ok(KannanModulus {
        k_star: Some(k_star),
        is_kannan: k_star < 0.5 - TOLERANCE,
    })
}

/// Fixed-point iteration for a Kannan contraction on a uniformly discrete
/// (here: finite) image. Iterates `x_{n+1} = f(x_n)` from `start` until
/// the orbit repeats, returns the fixed point, and re-checks uniqueness by
/// scanning the whole fixed-point set.
pub fn kannan_fixed_point(
    m: &Metric,
    img: &DigitalImage,
    f: &SelfMap,
    start: usize,
) -> Result<KannanOrbit> {
    if start >= img.len() {
        return Err(Error::PointIndexOutOfRange {
            index: start,
            size: img.len(),
        });
    }
    let modulus = kannan_modulus(m, img, f)?;
    if !modulus.is_kannan {
        return Err(Error::NotKannan);
    }
    let dm = DistMatrix::build(m, img)?;
    let cap = dm.distinct_positive_count() + 2;
    let mut orbit = vec![start];
    let mut current = start;
    for _ in 0..cap {
        let next = f.apply(current);
        orbit.push(next);
        if next == current {
            let fixed = f.fixed_points();
            if fixed.len() != 1 {
                return Err(Error::FixedPointNotUnique {
                    first: fixed[0],
                    second: fixed[1],
                });
            }
            return Ok(KannanOrbit {
                fixed_point: current,
                orbit,
            });
        }
        current = next;
    }
    Err(Error::IterationCapExceeded { cap })
}

fn reich_rows(dm: &DistMatrix, f: &SelfMap) -> Vec<Constraint> {
    let n = dm.len();
    let mut rows = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            rows.push(Constraint {
                coeffs: [
                    dm.dist_f64(x, f.apply(x)),
                    dm.dist_f64(y, f.apply(y)),
                    dm.dist_f64(x, y),
                ],
                rhs: dm.dist_f64(f.apply(x), f.apply(y)),
            });
        }
    }
    rows
}

/// Decide the existential Reich condition by minimizing `a+b+c` over the
/// per-pair half-spaces; the condition is satisfiable iff the optimum is
/// below 1.
pub fn reich_existential_feasible(
    m: &Metric,
    img: &DigitalImage,
    f: &SelfMap,
) -> Result<ReichFeasibility> {
    let dm = DistMatrix::build(m, img)?;
    let rows = reich_rows(&dm, f);
    match lp3::minimize_sum(&rows) {
        Lp3Outcome::Optimal { point, objective } => {
            let feasible = objective < 1.0 - TOLERANCE;
            debug_assert!(rows.iter().all(|r| {
                r.coeffs[0] * point[0] + r.coeffs[1] * point[1] + r.coeffs[2] * point[2]
                    >= r.rhs - TOLERANCE
            }));
            Ok(ReichFeasibility {
                feasible,
                witness: feasible.then_some(point),
                optimum: Some(objective),
            })
        }
        Lp3Outcome::Infeasible => Ok(ReichFeasibility {
            feasible: false,
            witness: None,
            optimum: None,
        }),
    }
}

/// The universal-quantifier Reich condition: the inequality must hold for
/// every admissible `(a,b,c)`, in particular for the all-zero triple, so
/// it forces `d(fx,fy) = 0` on every pair.
pub fn reich_universal_holds(m: &Metric, img: &DigitalImage, f: &SelfMap) -> Result<bool> {
    let dm = DistMatrix::build(m, img)?;
    let n = dm.len();
    for x in 0..n {
        for y in 0..x {
            if !dm.is_zero(f.apply(x), f.apply(y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The self-composed variant quantified over all admissible `(a,b,c)`:
/// `d(Fu,Fv) <= a d(Fu,FFu) + b d(Fv,FFv) + c d(Fu,Fv)`. The all-zero
/// triple again forces `d(Fu,Fv) = 0`, so this holds exactly for constant
/// maps; the direct evaluation and the table check must agree.
pub fn okak_selfcomposed_holds(m: &Metric, img: &DigitalImage, f: &SelfMap) -> Result<bool> {
    let dm = DistMatrix::build(m, img)?;
    let n = dm.len();
    let mut holds = true;
    for u in 0..n {
        for v in 0..u {
            if !dm.is_zero(f.apply(u), f.apply(v)) {
                holds = false;
            }
        }
    }
    debug_assert_eq!(holds, f.is_constant() || n <= 1);
    Ok(holds)
}

/// Collapse a finite image under a strictly distance-decreasing map:
/// returns the minimal `n` with `|f^n(X)| = 1` together with the unique
/// fixed point. The step count never exceeds the number of distinct
/// positive distances in the image.
pub fn singleton_collapse(m: &Metric, img: &DigitalImage, f: &SelfMap) -> Result<Collapse> {
    if img.is_empty() {
        return Err(Error::EmptyImage);
    }
    let dm = DistMatrix::build(m, img)?;
    if let Some((i, j)) = distance_decrease_violation(&dm, f) {
        return Err(Error::NotDistanceDecreasing { i, j });
    }
    let mut current: Vec<usize> = (0..img.len()).collect();
    let mut steps = 0;
    while current.len() > 1 {
        let mut next: Vec<usize> = current.iter().map(|&i| f.apply(i)).collect();
        next.sort_unstable();
        next.dedup();
        current = next;
        steps += 1;
    }
    let survivor = current[0];
    debug_assert_eq!(f.apply(survivor), survivor);
    Ok(Collapse {
        steps,
        fixed_point: survivor,
    })
}

/// On a uniformly connected image, a continuous Banach contraction can
/// only be constant: adjacent points sit at the maximal adjacent distance
/// `sqrt(u)`, so their images must coincide. Verifies the premises, then
/// reports whether the map is indeed constant.
pub fn uniformly_connected_collapse_check(img: &DigitalImage, f: &SelfMap) -> Result<bool> {
    if !img.is_connected() {
        return Err(Error::DisconnectedImage);
    }
    if let Some((i, j, sq)) = metric::uniform_connectivity_violation(img)? {
        return Err(Error::NotUniformlyConnected {
            i,
            j,
            sq,
            u: img.u(),
        });
    }
    for i in 0..img.len() {
        for j in 0..i {
            if img.adjacent(i, j) {
                let (fi, fj) = (f.apply(i), f.apply(j));
                if fi != fj && !img.adjacent(fi, fj) {
                    return Err(Error::NotContinuous { i, j });
                }
            }
        }
    }
    let dm = DistMatrix::build(&Metric::EUCLIDEAN, img)?;
    if let Some((i, j)) = distance_decrease_violation(&dm, f) {
        return Err(Error::NotDistanceDecreasing { i, j });
    }
    Ok(f.is_constant())
}

/// Exact finite-window check of the halving map on `{2^0, ..., 2^n}`:
/// `f(1) = 1`, `f(x) = x/2`. Verifies, in integer arithmetic, the strict
/// contraction inequality against modulus 1/2 for pairs involving 1, the
/// exact halving identity `d(f 2^m, f 2^n) = 2^(n-1) - 2^(m-1)` for the
/// rest, and that the window image loses exactly the top element. The
/// full image chain never shrinks to a point on the unbounded set; this
/// check covers the finite window only.
pub fn powers_of_two_window_check(n_max: u32) -> Result<bool> {
    if !(2..=62).contains(&n_max) {
        return Err(Error::ExponentOutOfRange {
            n: n_max,
            min: 2,
            max: 62,
        });
    }
    let pow = |k: u32| 1i64 << k;
    // pairs (1, 2^n): strict decrease below half
    for n in 1..=n_max {
        let lhs = pow(n - 1) - 1; // d(f(1), f(2^n)) = d(1, 2^(n-1))
        let rhs = pow(n) - 1; // d(1, 2^n)
        if !(2 * lhs < rhs) {
            return Ok(false);
        }
    }
    // pairs (2^m, 2^n), 1 <= m <= n: exact halving
    for n in 1..=n_max {
        for m in 1..=n {
            let d_image = pow(n - 1) - pow(m - 1);
            let d_source = pow(n) - pow(m);
            if 2 * d_image != d_source {
                return Ok(false);
            }
        }
    }
    // the windowed image set is the window minus its top element
    let window: Vec<i64> = (0..=n_max).map(pow).collect();
    let mut image: Vec<i64> = window
        .iter()
        .map(|&x| if x == 1 { 1 } else { x / 2 })
        .collect();
    image.sort_unstable();
    image.dedup();
    Ok(image == window[..n_max as usize])
}

/// The smallest `k >= 1` such that halving `j` a `k`-th time leaves the
/// integer lattice. Exists for every nonzero `j`, which is what makes
/// midpoint-closed digital images collapse to the origin.
pub fn midpoint_halving_escape(j: &Point) -> Result<u32> {
    let min_val2 = j
        .coords()
        .iter()
        .filter(|&&c| c != 0)
        .map(|&c| c.unsigned_abs().trailing_zeros())
        .min()
        .ok_or(Error::ZeroPoint)?;
    Ok(min_val2 + 1)
}

/// Run every classification at once. Needs at least two points.
pub fn classify(m: &Metric, img: &DigitalImage, f: &SelfMap) -> Result<ClassificationReport> {
    let banach = banach_modulus(m, img, f)?;
    let decreasing = is_distance_decreasing(m, img, f)?;
    let kannan = kannan_modulus(m, img, f)?;
    let reich = reich_existential_feasible(m, img, f)?;
    let universal = reich_universal_holds(m, img, f)?;
    Ok(ClassificationReport {
        gamma_star: banach.value,
        is_banach: banach.is_banach,
        is_distance_decreasing: decreasing,
        kannan_k_star: kannan.k_star,
        is_kannan: kannan.is_kannan,
        reich_feasible: reich.feasible,
        reich_witness: reich.witness,
        reich_universal: universal,
        continuous: f.is_continuous(img),
        constant: f.is_constant(),
    })
}
