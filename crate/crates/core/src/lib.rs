//! Root distributions, parity distributions and Pauli labellings on the
//! triangular tessellation of the plane.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`]: axial coordinates, faces, directions, regions and symmetries.
//! * [`linkgraph`]: the Moebius–Kantor graph, the Pauli Cayley graph and root ranks.
//! * [`distributions`]: root distributions `δ`, parity distributions and the induced-parity map.
//! * [`realizer`]: a propagation + backtracking solver deciding whether a parity
//!   distribution is induced by some root distribution.
//! * [`pauli`]: X/Y/Z face labellings and forced extension from a seed pair.
//! * [`classifier`]: gliders, forced propagation of even distributions, t-flats
//!   and strip unions.
//! * [`growth`]: the boundary growth recurrence and its exponent inequality.
//! * [`io`] and [`render`]: text formats and SVG output.

pub mod classifier;
pub mod distributions;
pub mod growth;
pub mod io;
pub mod lattice;
pub mod linkgraph;
pub mod pauli;
pub mod realizer;
pub mod render;

pub use distributions::{Parity, ParityDistribution, RootDistribution};
pub use lattice::{AxialPoint, DirSet, Direction, Face, Isometry, Orientation, Region};
pub use linkgraph::{CubicGraph, Label, LinkRoot};
pub use pauli::PauliLabelling;
pub use realizer::SolveOutcome;

/// Root rank with `u32` numerator and denominator.
pub type Rank = linkgraph::Rank<u32>;

/// Exact growth state over arbitrary-precision integers.
pub type GrowthState = growth::GrowthState<num_bigint::BigUint>;
