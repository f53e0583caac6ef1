use mkflat::classifier::{build_strip_union, build_t_flat, periodic_rows, random_even_window, EvenWindow};
use mkflat::distributions::RootDistribution;
use mkflat::lattice::{hexagon, AxialPoint, Direction, Face, Region};
use mkflat::linkgraph::Label;
use mkflat::pauli::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn seed_pair(region: &Region) -> (Face, Face) {
    let f = *region.faces().iter().find(|f| f.edge_neighbors().iter().any(|n| region.contains(n))).unwrap();
    let g = *f.edge_neighbors().iter().find(|n| region.contains(n)).unwrap();
    (f, g)
}

fn check_window(w: &EvenWindow, labels: (Label, Label)) {
    let (region, delta) = (w.region(), w.delta());
    let (f, g) = seed_pair(region);
    let seed = Seed::new(f, labels.0, g, labels.1);
    let bfs = extend_with_order(delta, region, seed, PropagationOrder::BreadthFirst).unwrap();
    let dfs = extend_with_order(delta, region, seed, PropagationOrder::DepthFirst).unwrap();
    assert_eq!(bfs, dfs);
    assert_eq!(bfs.len(), region.len());
    assert!(validate(&bfs, region).unwrap());
    let roots = induced_roots(&bfs, region).unwrap();
    let interior: RootDistribution = region.interior_vertices().into_iter().map(|p| (p, delta.get(p).unwrap())).collect();
    assert_eq!(roots, interior);
    assert!(check_even(&bfs, region).unwrap());
}

const PAIRS: [(Label, Label); 6] = [
    (Label::X, Label::Y),
    (Label::X, Label::Z),
    (Label::Y, Label::X),
    (Label::Y, Label::Z),
    (Label::Z, Label::X),
    (Label::Z, Label::Y),
];

#[test]
fn random_even_windows_extend_uniquely() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let w = random_even_window(AxialPoint::ORIGIN, 3, &mut rng).unwrap();
        check_window(&w, PAIRS[rng.random_range(0..6)]);
    }
}

#[test]
fn t_flat_and_strip_unions_extend() {
    let flat = build_t_flat(AxialPoint::new(2, -1), 4).unwrap();
    for pair in PAIRS {
        check_window(&flat, pair);
    }
    let region = hexagon(AxialPoint::ORIGIN, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..10 {
        let axis = Direction::from_index(i);
        let others: Vec<Direction> = Direction::ALL.into_iter().filter(|d| *d != axis).collect();
        let pattern: Vec<Direction> = (0..5).map(|_| others[rng.random_range(0..2)]).collect();
        let w = build_strip_union(axis, periodic_rows(&pattern), &region).unwrap();
        check_window(&w, PAIRS[i % 6]);
    }
}

#[test]
fn relabelling_commutes_with_extension() {
    let w = build_t_flat(AxialPoint::new(2, -1), 3).unwrap();
    let (f, g) = seed_pair(w.region());
    let base = extend(w.delta(), w.region(), Seed::new(f, Label::X, g, Label::Y)).unwrap();
    let swap = |l: Label| match l {
        Label::X => Label::Y,
        Label::Y => Label::X,
        Label::Z => Label::Z,
    };
    let swapped = extend(w.delta(), w.region(), Seed::new(f, Label::Y, g, Label::X)).unwrap();
    assert_eq!(base.relabel(swap), swapped);
}

#[test]
fn seed_read_back_reproduces_labelling() {
    let region = hexagon(AxialPoint::ORIGIN, 2).unwrap();
    let delta = RootDistribution::constant(region.vertex_set(), Direction::D1);
    let (f, g) = seed_pair(&region);
    let labels = extend(&delta, &region, Seed::new(f, Label::Z, g, Label::X)).unwrap();
    for h in region.faces() {
        for n in h.edge_neighbors() {
            if region.contains(&n) {
                let seed = Seed::from_labelling(&labels, *h, n).unwrap();
                assert_eq!(extend(&delta, &region, seed).unwrap(), labels);
            }
        }
    }
}

#[test]
fn odd_distribution_is_rejected() {
    let region = hexagon(AxialPoint::ORIGIN, 2).unwrap();
    let mut delta = RootDistribution::constant(region.vertex_set(), Direction::D0);
    delta.set(AxialPoint::ORIGIN, Direction::D1);
    let (f, g) = seed_pair(&region);
    assert!(matches!(extend(&delta, &region, Seed::new(f, Label::X, g, Label::Y)), Err(PauliError::NotEven(_))));
}

#[test]
fn corrupted_labelling_fails_validation() {
    let region = hexagon(AxialPoint::ORIGIN, 2).unwrap();
    let delta = RootDistribution::constant(region.vertex_set(), Direction::D0);
    let (f, g) = seed_pair(&region);
    let mut labels = extend(&delta, &region, Seed::new(f, Label::X, g, Label::Y)).unwrap();
    let target = Face::up(0, 0);
    let current = labels.get(target).unwrap();
    labels.set(target, if current == Label::X { Label::Y } else { Label::X });
    assert!(!validate(&labels, &region).unwrap());
    assert!(induced_roots(&labels, &region).is_err());
}
