use std::collections::{BTreeMap, BTreeSet};

use mkflat::distributions::{induced_parity, Parity, ParityDistribution, RootDistribution};
use mkflat::lattice::{faces_around_vertex, hexagon, AxialPoint, Direction, Face, Region};
use mkflat::realizer::*;
use proptest::prelude::*;

/// Parity of a triangle from raw coordinates: corners whose direction is not
/// the axis of the opposite side.
fn oracle_parity(corners: [AxialPoint; 3], dirs: [usize; 3]) -> u8 {
    let axis = |p: AxialPoint, q: AxialPoint| match (q.a - p.a, q.b - p.b) {
        (1, 0) | (-1, 0) => 0,
        (0, 1) | (0, -1) => 1,
        _ => 2,
    };
    (0..3).filter(|i| axis(corners[(i + 1) % 3], corners[(i + 2) % 3]) != dirs[*i]).count() as u8 % 2
}

/// Number of root distributions on `region` inducing each parity pattern.
fn brute_force(region: &Region) -> BTreeMap<Vec<u8>, u64> {
    let vertices: Vec<AxialPoint> = region.vertex_set().into_iter().collect();
    let index: BTreeMap<AxialPoint, usize> = vertices.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut out = BTreeMap::new();
    let mut dirs = vec![0usize; vertices.len()];
    for mut code in 0..3u64.pow(vertices.len() as u32) {
        for d in dirs.iter_mut() {
            *d = (code % 3) as usize;
            code /= 3;
        }
        let pattern: Vec<u8> = region
            .faces()
            .iter()
            .map(|f| {
                let c = f.corners();
                oracle_parity(c, c.map(|p| dirs[index[&p]]))
            })
            .collect();
        *out.entry(pattern).or_insert(0) += 1;
    }
    out
}

fn pattern_distribution(region: &Region, pattern: &[u8]) -> ParityDistribution {
    region.faces().iter().zip(pattern).map(|(f, b)| (*f, Parity::from_bit(*b))).collect()
}

#[test]
fn single_face_counts_match_oracle() {
    let f = Face::up(0, 0);
    let region = Region::new([f]);
    let oracle = brute_force(&region);
    assert_eq!(oracle[&vec![0]], 13);
    assert_eq!(oracle[&vec![1]], 14);
    for (bit, expected) in [(0u8, 13usize), (1, 14)] {
        let p = pattern_distribution(&region, &[bit]);
        assert_eq!(enumerate_realizations(&p, &region, None).unwrap().len(), expected);
    }
    let down = Region::new([Face::down(3, -2)]);
    let p = ParityDistribution::uniform(&down, Parity::Even);
    assert_eq!(CspState::new(&p, &down).unwrap().count(), 13);
}

#[test]
fn hexagon_theorem_matches_brute_force() {
    let region = hexagon(AxialPoint::ORIGIN, 1).unwrap();
    let oracle = brute_force(&region);
    assert_eq!(oracle.values().sum::<u64>(), 2187);
    assert_eq!(oracle.len(), 64);

    let ring = faces_around_vertex(AxialPoint::ORIGIN);
    let witnesses = hexagon_witnesses();
    for mask in 0..64u8 {
        let target = hexagon_pattern(mask);
        for (i, f) in ring.iter().enumerate() {
            assert_eq!(target.get(*f), Some(Parity::from_bit(mask >> i)));
        }
        let witness = witnesses[mask as usize].as_ref().expect("every pattern is realizable");
        assert_eq!(induced_parity(witness, &region).unwrap(), target);
        let pattern: Vec<u8> = region.faces().iter().map(|f| target.get(*f).unwrap().bit()).collect();
        assert_eq!(CspState::new(&target, &region).unwrap().count(), oracle[&pattern]);
    }
    assert!(verify_hexagon_theorem());
}

#[test]
fn hexagon_runs_fast() {
    let start = std::time::Instant::now();
    assert!(verify_hexagon_theorem());
    assert!(start.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn witness_is_lexicographically_least() {
    let region = hexagon(AxialPoint::ORIGIN, 1).unwrap();
    let target = hexagon_pattern(0b101101);
    let all = enumerate_realizations(&target, &region, None).unwrap();
    let sorted = {
        let mut v = all.clone();
        v.sort_by_key(|d| d.iter().map(|(_, x)| x.index()).collect::<Vec<_>>());
        v
    };
    assert_eq!(all, sorted);
    assert_eq!(realize(&target, &region).unwrap().witness(), Some(&all[0]));
}

#[test]
fn enumeration_limit_and_sampling() {
    let region = hexagon(AxialPoint::ORIGIN, 2).unwrap();
    let state = CspState::all_even(&region);
    let (some, _) = state.enumerate(Some(5));
    assert_eq!(some.len(), 5);
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(1);
    let sample = state.sample(&mut rng).unwrap();
    assert!(induced_parity(&sample, &region).unwrap().is_all_even());
}

#[test]
fn pre_assigned_vertices_are_respected() {
    let region = hexagon(AxialPoint::ORIGIN, 1).unwrap();
    let target = ParityDistribution::uniform(&region, Parity::Even);
    let mut state = CspState::new(&target, &region).unwrap();
    state.assign(AxialPoint::ORIGIN, Direction::D2).unwrap();
    let all = state.enumerate(None).0;
    assert!(!all.is_empty());
    assert!(all.iter().all(|d| d.get(AxialPoint::ORIGIN) == Some(Direction::D2)));
    assert!(state.assign(AxialPoint::new(9, 9), Direction::D0).is_err());
}

fn small_region() -> impl Strategy<Value = Region> {
    let pool: Vec<Face> = hexagon(AxialPoint::ORIGIN, 2).unwrap().faces().iter().copied().collect();
    proptest::sample::subsequence(pool, 1..=6).prop_map(Region::new).prop_filter("at most 10 vertices", |r| r.vertex_set().len() <= 10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn solver_agrees_with_brute_force(region in small_region(), bits in proptest::collection::vec(0u8..2, 6)) {
        let oracle = brute_force(&region);
        let pattern: Vec<u8> = bits[..region.len()].to_vec();
        let target = pattern_distribution(&region, &pattern);
        let expected = oracle.get(&pattern).copied().unwrap_or(0);
        let outcome = realize(&target, &region).unwrap();
        prop_assert_eq!(outcome.is_sat(), expected > 0);
        prop_assert_eq!(CspState::new(&target, &region).unwrap().count(), expected);
        if let Some(w) = outcome.witness() {
            prop_assert_eq!(&induced_parity(w, &region).unwrap(), &target);
        }
        let listed: BTreeSet<Vec<(AxialPoint, Direction)>> = enumerate_realizations(&target, &region, None)
            .unwrap()
            .iter()
            .map(|d: &RootDistribution| d.iter().collect())
            .collect();
        prop_assert_eq!(listed.len() as u64, expected);
    }
}
