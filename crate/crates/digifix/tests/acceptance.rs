//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the values it pinned. Tolerances and runtime budgets are fixed
//! here, not configurable.

use std::time::{Duration, Instant};

use digifix::classify::{banach_modulus, powers_of_two_window_check};
use digifix::complexity::{c_sharp, find_scc, DEFAULT_ENUMERATION_CAP};
use digifix::image::{AdjacencySpec, DigitalImage, Point};
use digifix::metric::{distance, is_uniformly_connected, DistMatrix, Metric, TOLERANCE};
use digifix::scenarios::{run_paper_suite, sharp_map, sharp_triple, ScenarioOutcome, SuiteConfig};
use digifix::selfmap::SelfMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const L2: Metric = Metric::EUCLIDEAN;

fn run_scenario(id: &str) -> ScenarioOutcome {
    let config = SuiteConfig {
        only: Some(vec![id.to_string()]),
        ..SuiteConfig::default()
    };
    run_paper_suite(&config)
        .expect("known scenario id")
        .remove(0)
}

fn assertion_passes(outcome: &ScenarioOutcome, name: &str) -> bool {
    outcome
        .assertions
        .iter()
        .find(|a| a.name == name)
        .unwrap_or_else(|| panic!("scenario {} has no assertion {name}", outcome.scenario))
        .pass
}

fn within(budget: Duration, start: Instant, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "{what} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn acceptance_01_sharp_triple_classification() {
    let start = Instant::now();
    let img = sharp_triple();
    let f = sharp_map();

    let b = banach_modulus(&L2, &img, &f).unwrap();
    assert_eq!(b.exact_pow, Some((4, 5)), "gamma* squared must be 4/5 exactly");
    assert!((b.value - 2.0 / 5f64.sqrt()).abs() <= 1e-12);
    assert!(!f.is_continuous(&img));
    assert!(is_uniformly_connected(&img).unwrap());

    let seq = f.image_sequence(f.default_step_cap());
    assert_eq!(seq.sets[1].len(), 2);

    let census = c_sharp(&L2, &img, DEFAULT_ENUMERATION_CAP).unwrap();
    assert_eq!(census.c_sharp, 2);

    let outcome = run_scenario("S1");
    assert!(outcome.pass, "S1 must pass: {:?}", outcome.assertions);

    within(Duration::from_secs(1), start, "criterion 1");
    println!(
        "[criterion 01] PASS gamma*^2 = 4/5, gamma* = {:.12}, continuous = false, \
         uniformly connected = true, |f(X)| = 2, C# = 2",
        b.value
    );
}

#[test]
fn acceptance_02_odd_curve_and_neighborhood() {
    let start = Instant::now();
    let search = find_scc(2, 2, 7, &[5, 5], None).unwrap();
    assert!(search.found, "a 7-point c2 curve exists in a 5x5 window");
    let img = DigitalImage::new(2, search.curve.clone(), AdjacencySpec::new(2)).unwrap();
    let nbhd = img.neighborhood(img.point(4).unwrap(), 1).unwrap();
    assert_eq!(nbhd, vec![3, 4, 5]);
    assert_eq!(nbhd.len(), 3);

    let outcome = run_scenario("S3");
    assert!(outcome.pass, "S3 must pass: {:?}", outcome.assertions);

    within(Duration::from_secs(5), start, "criterion 2");
    println!(
        "[criterion 02] PASS 7-point curve found: {:?}; N(x4,1) = {{x3,x4,x5}}",
        search.curve
    );
}

#[test]
fn acceptance_03_c1_contractions_are_constant() {
    let start = Instant::now();
    let outcome = run_scenario("S4");
    assert!(
        assertion_passes(&outcome, "banach-implies-constant-violations"),
        "sweep found a non-constant contraction on a connected c1 image: {:?}",
        outcome.assertions
    );
    assert!(outcome.pass);
    within(Duration::from_secs(120), start, "criterion 3");
    println!("[criterion 03] PASS {}", outcome.caps.join("; "));
}

#[test]
fn acceptance_04_reich_and_selfcomposed_triviality() {
    let start = Instant::now();
    let outcome = run_scenario("S5");
    assert!(assertion_passes(
        &outcome,
        "reich-universal-iff-constant-mismatches"
    ));
    assert!(assertion_passes(
        &outcome,
        "selfcomposed-iff-constant-mismatches"
    ));
    assert!(outcome.pass);
    within(Duration::from_secs(120), start, "criterion 4");
    println!("[criterion 04] PASS {}", outcome.caps.join("; "));
}

#[test]
fn acceptance_05_banach_uniqueness_and_collapse_bound() {
    let start = Instant::now();
    for id in ["S4", "S5"] {
        let outcome = run_scenario(id);
        assert!(
            assertion_passes(&outcome, "banach-unique-fixed-point-violations"),
            "{id}: a contraction without a unique fixed point"
        );
        assert!(
            assertion_passes(&outcome, "collapse-depth-bound-violations"),
            "{id}: a collapse exceeded the distinct-distance bound"
        );
    }
    within(Duration::from_secs(240), start, "criterion 5");
    println!("[criterion 05] PASS uniqueness and collapse bound hold in both sweeps");
}

#[test]
fn acceptance_06_powers_of_two_window() {
    let start = Instant::now();
    assert!(powers_of_two_window_check(30).unwrap());
    let outcome = run_scenario("S2");
    assert!(outcome.pass);
    within(Duration::from_secs(1), start, "criterion 6");
    println!("[criterion 06] PASS exact integer checks for exponents 1..=30");
}

#[test]
fn acceptance_07_common_fixed_point_procedures() {
    let start = Instant::now();
    let s7 = run_scenario("S7");
    assert!(s7.pass, "S7 must pass: {:?}", s7.assertions);
    let s8 = run_scenario("S8");
    assert!(s8.pass, "S8 must pass: {:?}", s8.assertions);
    assert!(assertion_passes(&s8, "lm-collapse-j-equals-k"));
    assert!(assertion_passes(&s8, "lm-collapse-j-constant"));
    within(Duration::from_secs(10), start, "criterion 7");
    println!("[criterion 07] PASS two-map and four-map procedures, L = M collapse confirmed");
}

#[test]
fn acceptance_08_curve_collapse_bound() {
    let start = Instant::now();
    let outcome = run_scenario("S10");
    assert!(assertion_passes(&outcome, "confinement-bound-violations"));
    assert!(outcome.pass, "S10 must pass: {:?}", outcome.assertions);
    within(Duration::from_secs(300), start, "criterion 8");
    println!("[criterion 08] PASS {}", outcome.caps.join("; "));
}

#[test]
fn acceptance_09_complexity_non_invariance() {
    let start = Instant::now();
    let outcome = run_scenario("S6");
    // a soft-fail here is reported as inconclusive-at-cap; the criterion
    // is only met by an exhibited pair
    assert!(
        outcome.pass,
        "no isomorphic pair with unequal complexity at the caps (inconclusive-at-cap): {:?}",
        outcome.assertions
    );
    let witness = outcome
        .assertions
        .iter()
        .find(|a| a.name == "witness-pair")
        .map(|a| a.actual.clone())
        .unwrap_or_default();
    within(Duration::from_secs(120), start, "criterion 9");
    println!("[criterion 09] PASS {witness}");
}

/// Exact triangle-inequality check for Euclidean payloads:
/// sqrt(a) <= sqrt(b) + sqrt(c) without leaving the integers.
fn euclidean_triangle_holds(a: i64, b: i64, c: i64) -> bool {
    if a <= b + c {
        return true;
    }
    let lhs = (a - b - c) as i128;
    lhs * lhs <= 4 * b as i128 * c as i128
}

#[test]
fn acceptance_10_metric_axioms_and_adjacency_invariants() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0d1f1f1f);
    let mut images_checked = 0u32;
    while images_checked < 1000 {
        let dim = rng.gen_range(1..=3);
        // a 1-dimensional slab of coordinates -8..=8 holds 17 points, so
        // any size up to 12 is reachable
        let size = rng.gen_range(1..=12);
        let mut points: Vec<Point> = Vec::new();
        while points.len() < size {
            let p = Point::new(
                (0..dim)
                    .map(|_| rng.gen_range(-8..=8))
                    .collect::<Vec<i64>>(),
            );
            if !points.contains(&p) {
                points.push(p);
            }
        }
        let u = rng.gen_range(1..=dim);
        let img = DigitalImage::new(dim, points, AdjacencySpec::new(u)).unwrap();
        images_checked += 1;
        let n = img.len();

        // adjacency matrix is symmetric and irreflexive
        let matrix = img.adjacency_matrix();
        for i in 0..n {
            assert!(!matrix[i * n + i]);
            for j in 0..n {
                assert_eq!(matrix[i * n + j], matrix[j * n + i]);
            }
        }

        // metric axioms, exact where the payloads allow it
        let mut metrics = vec![Metric::Lp(1), Metric::Lp(2), Metric::LpApprox(2.5)];
        if img.is_connected() {
            metrics.push(Metric::ShortestPath);
        }
        for m in &metrics {
            let dm = DistMatrix::build(m, &img).unwrap();
            for i in 0..n {
                assert!(dm.is_zero(i, i));
                for j in 0..n {
                    if i != j {
                        assert!(!dm.is_zero(i, j), "distinct points at distance zero");
                    }
                    assert_eq!(dm.dist_f64(i, j), dm.dist_f64(j, i));
                    for k in 0..n {
                        match (m, dm.payload(i, k)) {
                            (Metric::Lp(2), Some(a)) => {
                                let b = dm.payload(i, j).unwrap();
                                let c = dm.payload(j, k).unwrap();
                                assert!(euclidean_triangle_holds(a, b, c));
                            }
                            (Metric::Lp(1) | Metric::ShortestPath, Some(a)) => {
                                assert!(
                                    a <= dm.payload(i, j).unwrap() + dm.payload(j, k).unwrap()
                                );
                            }
                            _ => {
                                assert!(
                                    dm.dist_f64(i, k)
                                        <= dm.dist_f64(i, j) + dm.dist_f64(j, k) + TOLERANCE
                                );
                            }
                        }
                    }
                }
            }
        }

        // c1-adjacent points sit at l_p distance exactly 1; c_u-adjacent
        // points have squared Euclidean distance in 1..=u
        for i in 0..n {
            for j in 0..i {
                if !img.adjacent(i, j) {
                    continue;
                }
                let sq = distance(&L2, &img, &img.points()[i], &img.points()[j])
                    .unwrap()
                    .squared_euclidean()
                    .unwrap();
                assert!(sq >= 1 && sq <= u as i64);
                if u == 1 {
                    assert_eq!(sq, 1);
                    let l1 = distance(&Metric::Lp(1), &img, &img.points()[i], &img.points()[j])
                        .unwrap()
                        .exact_payload()
                        .unwrap();
                    assert_eq!(l1, 1);
                }
            }
        }

        // neighborhood of radius 1 is the point plus its adjacent points
        let lists = img.neighbor_lists();
        for i in 0..n {
            let mut expected = lists[i].clone();
            expected.push(i);
            expected.sort_unstable();
            let got = img.neighborhood(&img.points()[i].clone(), 1).unwrap();
            assert_eq!(got, expected);
        }

        // no pair sits strictly between zero and the discreteness witness
        if n >= 2 {
            let witness =
                digifix::metric::uniform_discreteness_witness(&L2, &img).unwrap();
            let w = witness.squared_euclidean().unwrap();
            assert!(w >= 1);
            for i in 0..n {
                for j in 0..i {
                    let d = distance(&L2, &img, &img.points()[i], &img.points()[j])
                        .unwrap()
                        .squared_euclidean()
                        .unwrap();
                    assert!(d == 0 || d >= w);
                }
            }
        }
    }
    within(Duration::from_secs(60), start, "criterion 10");
    println!("[criterion 10] PASS metric axioms and adjacency invariants on {images_checked} images");
}

#[test]
fn acceptance_suite_summary() {
    // run the whole bundled suite once and require a clean sheet
    let outcomes = run_paper_suite(&SuiteConfig::default()).unwrap();
    for o in &outcomes {
        println!(
            "[suite] {} {} — {}",
            o.scenario,
            if o.pass { "PASS" } else { "FAIL" },
            o.name
        );
    }
    assert!(outcomes.iter().all(|o| o.pass));
}

#[test]
fn acceptance_maps_validate_against_images() {
    // the sharp fixtures survive a JSON round trip unchanged
    let img = sharp_triple();
    let json = serde_json::to_string(&img).unwrap();
    let back: DigitalImage = serde_json::from_str(&json).unwrap();
    assert_eq!(img, back);
    let f = sharp_map();
    let json = serde_json::to_string(&f).unwrap();
    let back: SelfMap = serde_json::from_str(&json).unwrap();
    assert_eq!(f, back);
}
