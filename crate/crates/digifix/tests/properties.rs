//! Property tests for the structural invariants: metric axioms,
//! adjacency symmetry, translation invariance of verdicts, and
//! serialization round trips.

use digifix::classify::classify;
use digifix::complexity::{c_sharp, DEFAULT_ENUMERATION_CAP};
use digifix::image::{cu_adjacent, AdjacencySpec, DigitalImage, Point};
use digifix::metric::{distance, Metric};
use digifix::selfmap::{SelfMap, SequenceWindow};

use proptest::prelude::*;

fn arb_point(dim: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(-20i64..=20, dim).prop_map(Point::new)
}

/// A small image: distinct points in a fixed dimension with a valid `u`.
fn arb_image(max_points: usize) -> impl Strategy<Value = DigitalImage> {
    (1usize..=3).prop_flat_map(move |dim| {
        (
            prop::collection::btree_set(prop::collection::vec(-6i64..=6, dim), 1..=max_points),
            1usize..=dim,
        )
            .prop_map(move |(coords, u)| {
                let points: Vec<Point> = coords.into_iter().map(Point::new).collect();
                DigitalImage::new(dim, points, AdjacencySpec::new(u)).expect("distinct by set")
            })
    })
}

fn arb_image_with_map(max_points: usize) -> impl Strategy<Value = (DigitalImage, SelfMap)> {
    arb_image(max_points).prop_flat_map(|img| {
        let n = img.len();
        (
            Just(img),
            prop::collection::vec(0..n, n).prop_map(move |table| {
                SelfMap::with_size(table, n).expect("entries bounded")
            }),
        )
    })
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_and_irreflexive(
        x in arb_point(3),
        y in arb_point(3),
        u in 1usize..=3,
    ) {
        prop_assert_eq!(cu_adjacent(&x, &y, u).unwrap(), cu_adjacent(&y, &x, u).unwrap());
        prop_assert!(!cu_adjacent(&x, &x, u).unwrap());
    }

    #[test]
    fn lp_metric_axioms(
        x in arb_point(3),
        y in arb_point(3),
        z in arb_point(3),
        p in 1u32..=3,
    ) {
        // work on a throwaway image holding the three points
        let mut points = vec![x.clone()];
        for q in [&y, &z] {
            if !points.contains(q) {
                points.push(q.clone());
            }
        }
        let img = DigitalImage::new(3, points, AdjacencySpec::new(1)).unwrap();
        let m = Metric::Lp(p);
        let d = |a: &Point, b: &Point| distance(&m, &img, a, b).unwrap().as_f64();
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert!((x == y) == (d(&x, &y) == 0.0));
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z) + 1e-9);
    }

    #[test]
    fn classification_is_translation_invariant(
        (img, f) in arb_image_with_map(5),
        delta in prop::collection::vec(-10i64..=10, 3),
    ) {
        prop_assume!(img.len() >= 2);
        let shifted = img.translated(&delta[..img.dim()]).unwrap();
        let a = classify(&Metric::EUCLIDEAN, &img, &f).unwrap();
        let b = classify(&Metric::EUCLIDEAN, &shifted, &f).unwrap();
        // payloads are identical, so every verdict and value matches
        prop_assert_eq!(a, b);
    }

    #[test]
    fn census_is_invariant_under_point_permutation(
        img in arb_image(5),
        seed in 0u64..1000,
    ) {
        let n = img.len();
        // a cheap deterministic permutation from the seed
        let mut order: Vec<usize> = (0..n).collect();
        for i in 0..n {
            let j = (seed as usize + i * 7) % n;
            order.swap(i, j);
        }
        let permuted = DigitalImage::new(
            img.dim(),
            order.iter().map(|&i| img.points()[i].clone()).collect(),
            img.adjacency(),
        )
        .unwrap();
        let a = c_sharp(&Metric::EUCLIDEAN, &img, DEFAULT_ENUMERATION_CAP).unwrap();
        let b = c_sharp(&Metric::EUCLIDEAN, &permuted, DEFAULT_ENUMERATION_CAP).unwrap();
        prop_assert_eq!(a.c_sharp, b.c_sharp);
        prop_assert_eq!(a.maps_enumerated, b.maps_enumerated);
    }

    #[test]
    fn image_json_round_trips(img in arb_image(6)) {
        let json = serde_json::to_string(&img).unwrap();
        let back: DigitalImage = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(img, back);
    }

    #[test]
    fn image_sequence_sizes_never_grow((_, f) in arb_image_with_map(6)) {
        let seq = f.image_sequence(f.default_step_cap());
        for w in seq.sets.windows(2).skip(1) {
            prop_assert!(w[1].len() <= w[0].len());
        }
        prop_assert!(seq.stabilized);
    }

    #[test]
    fn stabilization_index_matches_naive_oracle(values in prop::collection::vec(0usize..4, 1..10)) {
        let window = SequenceWindow::new(values.clone(), None).unwrap();
        let n = values.len();
        // oracle: earliest m with a constant, witnessed suffix
        let oracle = (0..n.saturating_sub(1))
            .find(|&m| values[m..].iter().all(|&v| v == values[m]));
        prop_assert_eq!(window.stabilization_index(), oracle);
    }

    #[test]
    fn neighborhood_radius_one_is_closed_adjacency(img in arb_image(8)) {
        let lists = img.neighbor_lists();
        for i in 0..img.len() {
            let mut expected = lists[i].clone();
            expected.push(i);
            expected.sort_unstable();
            let got = img.neighborhood(&img.points()[i].clone(), 1).unwrap();
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn banach_iff_distance_decreasing((img, f) in arb_image_with_map(5)) {
        prop_assume!(img.len() >= 2);
        let m = Metric::EUCLIDEAN;
        let b = digifix::classify::banach_modulus(&m, &img, &f).unwrap();
        let dd = digifix::classify::is_distance_decreasing(&m, &img, &f).unwrap();
        prop_assert_eq!(b.is_banach, dd);
    }
}
