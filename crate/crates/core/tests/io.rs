use mkflat::distributions::{Parity, ParityDistribution, RootDistribution};
use mkflat::io::*;
use mkflat::lattice::{AxialPoint, Direction, Face, Region};
use mkflat::linkgraph::Label;
use mkflat::pauli::PauliLabelling;
use proptest::prelude::*;

fn face() -> impl Strategy<Value = Face> {
    (-50i32..50, -50i32..50, any::<bool>()).prop_map(|(a, b, up)| if up { Face::up(a, b) } else { Face::down(a, b) })
}

fn point() -> impl Strategy<Value = AxialPoint> {
    (-50i32..50, -50i32..50).prop_map(|(a, b)| AxialPoint::new(a, b))
}

proptest! {
    #[test]
    fn region_round_trip(faces in proptest::collection::btree_set(face(), 0..40)) {
        let r = Region::new(faces);
        prop_assert_eq!(parse_region(&write_region(&r)).unwrap(), r);
    }

    #[test]
    fn roots_round_trip(entries in proptest::collection::btree_map(point(), 0usize..3, 0..40)) {
        let d: RootDistribution = entries.into_iter().map(|(p, i)| (p, Direction::from_index(i))).collect();
        prop_assert_eq!(parse_root_distribution(&write_root_distribution(&d)).unwrap(), d);
    }

    #[test]
    fn parity_round_trip(entries in proptest::collection::btree_map(face(), 0u8..2, 0..40)) {
        let p: ParityDistribution = entries.into_iter().map(|(f, b)| (f, Parity::from_bit(b))).collect();
        let text = write_parity(&p);
        prop_assert_eq!(&parse_parity(&text).unwrap(), &p);
        prop_assert_eq!(write_parity(&parse_parity(&text).unwrap()), text);
    }

    #[test]
    fn labelling_round_trip(entries in proptest::collection::btree_map(face(), 0usize..3, 0..40)) {
        let l: PauliLabelling = entries.into_iter().map(|(f, i)| (f, Label::ALL[i])).collect();
        prop_assert_eq!(parse_labelling(&write_labelling(&l)).unwrap(), l);
    }
}

#[test]
fn bundled_data_parses() {
    let text = include_str!("../data/counterexample.pdist");
    let p = parse_parity(text).unwrap();
    assert_eq!(p.len(), 49);
    assert_eq!(parse_parity(&write_parity(&p)).unwrap(), p);
}
