//! Root distributions, parity distributions and the induced-parity map.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::lattice::{AxialPoint, Direction, Face, Isometry, Region};
use crate::Rank;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistributionError {
    #[error("root distribution undefined at {0}")]
    Undefined(AxialPoint),
    #[error("parity undefined on {0}")]
    ParityUndefined(Face),
}

/// Parity of a face: `Even` is 0, `Odd` is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Parity {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// A finitely supported map from vertices to directions.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct RootDistribution {
    assignment: BTreeMap<AxialPoint, Direction>,
}

impl RootDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    /// The constant distribution `d` on `points`.
    pub fn constant(points: impl IntoIterator<Item = AxialPoint>, d: Direction) -> Self {
        points.into_iter().map(|p| (p, d)).collect()
    }

    pub fn get(&self, x: AxialPoint) -> Option<Direction> {
        self.assignment.get(&x).copied()
    }

    pub fn at(&self, x: AxialPoint) -> Result<Direction, DistributionError> {
        self.get(x).ok_or(DistributionError::Undefined(x))
    }

    pub fn set(&mut self, x: AxialPoint, d: Direction) -> Option<Direction> {
        self.assignment.insert(x, d)
    }

    pub fn remove(&mut self, x: AxialPoint) -> Option<Direction> {
        self.assignment.remove(&x)
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (AxialPoint, Direction)> + '_ {
        self.assignment.iter().map(|(p, d)| (*p, *d))
    }

    pub fn is_defined_on(&self, points: impl IntoIterator<Item = AxialPoint>) -> bool {
        points.into_iter().all(|p| self.assignment.contains_key(&p))
    }

    /// Restriction to the vertices of `region`.
    pub fn restrict(&self, region: &Region) -> RootDistribution {
        region.vertex_set().into_iter().filter_map(|p| self.get(p).map(|d| (p, d))).collect()
    }

    pub fn translate(&self, v: AxialPoint) -> RootDistribution {
        self.iter().map(|(p, d)| (p + v, d)).collect()
    }

    /// Push forward along a lattice symmetry: `(gδ)(g x) = g(δ(x))`.
    pub fn map(&self, g: &Isometry) -> RootDistribution {
        self.iter().map(|(p, d)| (g.apply(p), g.apply_direction(d))).collect()
    }
}

impl FromIterator<(AxialPoint, Direction)> for RootDistribution {
    fn from_iter<I: IntoIterator<Item = (AxialPoint, Direction)>>(iter: I) -> Self {
        RootDistribution { assignment: iter.into_iter().collect() }
    }
}

/// A finitely supported map from faces to parities.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct ParityDistribution {
    assignment: BTreeMap<Face, Parity>,
}

impl ParityDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every face of `region` set to `p`.
    pub fn uniform(region: &Region, p: Parity) -> Self {
        region.faces().iter().map(|f| (*f, p)).collect()
    }

    pub fn get(&self, f: Face) -> Option<Parity> {
        self.assignment.get(&f).copied()
    }

    pub fn set(&mut self, f: Face, p: Parity) -> Option<Parity> {
        self.assignment.insert(f, p)
    }

    pub fn remove(&mut self, f: Face) -> Option<Parity> {
        self.assignment.remove(&f)
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Face, Parity)> + '_ {
        self.assignment.iter().map(|(f, p)| (*f, *p))
    }

    /// The region formed by the faces carrying a value.
    pub fn domain(&self) -> Region {
        self.assignment.keys().copied().collect()
    }

    pub fn odd_faces(&self) -> Vec<Face> {
        self.iter().filter(|(_, p)| *p == Parity::Odd).map(|(f, _)| f).collect()
    }

    pub fn is_all_even(&self) -> bool {
        self.assignment.values().all(|p| *p == Parity::Even)
    }

    pub fn translate(&self, v: AxialPoint) -> ParityDistribution {
        self.iter().map(|(f, p)| (f.translate(v), p)).collect()
    }

    pub fn map(&self, g: &Isometry) -> ParityDistribution {
        self.iter().map(|(f, p)| (g.apply_face(f), p)).collect()
    }
}

impl FromIterator<(Face, Parity)> for ParityDistribution {
    fn from_iter<I: IntoIterator<Item = (Face, Parity)>>(iter: I) -> Self {
        ParityDistribution { assignment: iter.into_iter().collect() }
    }
}

/// Number of corners of `f` whose direction differs from the edge opposite them.
pub fn mismatch_count(f: Face, corner_dirs: [Direction; 3]) -> u8 {
    f.opposite_directions().iter().zip(corner_dirs).filter(|(o, d)| **o != *d).count() as u8
}

/// Parity of the number of corners `x` of `f` with `δ(x)` not parallel to
/// the edge of `f` opposite `x`.
pub fn face_parity(delta: &RootDistribution, f: Face) -> Result<Parity, DistributionError> {
    let c = f.corners();
    let dirs = [delta.at(c[0])?, delta.at(c[1])?, delta.at(c[2])?];
    Ok(Parity::from_bit(mismatch_count(f, dirs)))
}

pub fn induced_parity(delta: &RootDistribution, region: &Region) -> Result<ParityDistribution, DistributionError> {
    region.faces().iter().map(|f| face_parity(delta, *f).map(|p| (*f, p))).collect()
}

/// Whether every face of `region` is even under `delta`.
pub fn is_even(delta: &RootDistribution, region: &Region) -> Result<bool, DistributionError> {
    for f in region.faces() {
        if face_parity(delta, *f)? == Parity::Odd {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank of the line through `x` parallel to `d`: 3/2 along `δ(x)`, 2 otherwise.
pub fn direction_rank(delta: &RootDistribution, x: AxialPoint, d: Direction) -> Result<Rank, DistributionError> {
    if delta.at(x)? == d {
        Ok(Rank::three_halves())
    } else {
        Ok(Rank::two())
    }
}
