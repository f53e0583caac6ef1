//! Integer model of the equilateral-triangle tessellation of the plane.
//!
//! Vertices use axial coordinates `(a, b)` over the basis `e1 = (1, 0)`,
//! `e2 = (1/2, √3/2)`. A face is either `Up(a, b)` with corners
//! `(a,b), (a+1,b), (a,b+1)` or `Down(a, b)` with corners
//! `(a+1,b), (a,b+1), (a+1,b+1)`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("{point} is not a corner of {face}")]
    NotACorner { face: Face, point: AxialPoint },
    #[error("hexagon radius must be at least 1, got {0}")]
    RadiusTooSmall(i32),
    #[error("points do not span a face")]
    NotAFace,
    #[error("cannot parse `{0}`")]
    Parse(String),
}

/// A vertex of the tessellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AxialPoint {
    pub a: i32,
    pub b: i32,
}

impl AxialPoint {
    pub const ORIGIN: AxialPoint = AxialPoint { a: 0, b: 0 };

    pub const fn new(a: i32, b: i32) -> Self {
        AxialPoint { a, b }
    }

    /// Number of edges on a shortest lattice path to the origin.
    pub fn norm(self) -> i32 {
        self.a.abs().max(self.b.abs()).max((self.a + self.b).abs())
    }

    pub fn distance(self, other: AxialPoint) -> i32 {
        (self - other).norm()
    }

    pub fn is_adjacent(self, other: AxialPoint) -> bool {
        self.distance(other) == 1
    }

    /// The six lattice neighbours, counterclockwise from `self + (1, 0)`.
    pub fn neighbors(self) -> [AxialPoint; 6] {
        STEPS.map(|s| self + s)
    }

    /// Index of the line parallel to `d` through this point.
    ///
    /// Lines parallel to `D0` are indexed by `b`, lines parallel to `D1` by
    /// `a`, and lines parallel to `D2` by `a + b`.
    pub fn line_index(self, d: Direction) -> i32 {
        match d {
            Direction::D0 => self.b,
            Direction::D1 => self.a,
            Direction::D2 => self.a + self.b,
        }
    }
}

impl Add for AxialPoint {
    type Output = AxialPoint;
    fn add(self, o: AxialPoint) -> AxialPoint {
        AxialPoint::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for AxialPoint {
    type Output = AxialPoint;
    fn sub(self, o: AxialPoint) -> AxialPoint {
        AxialPoint::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for AxialPoint {
    type Output = AxialPoint;
    fn neg(self) -> AxialPoint {
        AxialPoint::new(-self.a, -self.b)
    }
}

impl fmt::Display for AxialPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Unit steps in counterclockwise order; step `k` points at angle `60k` degrees.
const STEPS: [AxialPoint; 6] = [
    AxialPoint::new(1, 0),
    AxialPoint::new(0, 1),
    AxialPoint::new(-1, 1),
    AxialPoint::new(-1, 0),
    AxialPoint::new(0, -1),
    AxialPoint::new(1, -1),
];

/// An unoriented lattice axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// Span of `(1, 0)`.
    D0,
    /// Span of `(0, 1)`.
    D1,
    /// Span of `(1, -1)`.
    D2,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::D0, Direction::D1, Direction::D2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Direction {
        Direction::ALL[i % 3]
    }

    /// A primitive vector spanning this axis.
    pub fn vector(self) -> AxialPoint {
        match self {
            Direction::D0 => AxialPoint::new(1, 0),
            Direction::D1 => AxialPoint::new(0, 1),
            Direction::D2 => AxialPoint::new(1, -1),
        }
    }

    /// The axis containing the lattice step `v`, if `v` is a unit step.
    pub fn of_step(v: AxialPoint) -> Option<Direction> {
        match (v.a, v.b) {
            (1, 0) | (-1, 0) => Some(Direction::D0),
            (0, 1) | (0, -1) => Some(Direction::D1),
            (1, -1) | (-1, 1) => Some(Direction::D2),
            _ => None,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}", self.index())
    }
}

impl FromStr for Direction {
    type Err = LatticeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "D0" => Ok(Direction::D0),
            "D1" => Ok(Direction::D1),
            "D2" => Ok(Direction::D2),
            _ => Err(LatticeError::Parse(s.to_string())),
        }
    }
}

/// A subset of `{D0, D1, D2}` stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DirSet(u8);

impl DirSet {
    pub const EMPTY: DirSet = DirSet(0);
    pub const FULL: DirSet = DirSet(0b111);

    pub fn single(d: Direction) -> DirSet {
        DirSet(1 << d.index())
    }

    /// All directions except `d`.
    pub fn all_but(d: Direction) -> DirSet {
        DirSet(0b111 & !(1 << d.index()))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, d: Direction) -> bool {
        self.0 & (1 << d.index()) != 0
    }

    pub fn insert(&mut self, d: Direction) {
        self.0 |= 1 << d.index();
    }

    pub fn intersect(self, other: DirSet) -> DirSet {
        DirSet(self.0 & other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// The unique member of a singleton set.
    pub fn single_value(self) -> Option<Direction> {
        match self.0 {
            0b001 => Some(Direction::D0),
            0b010 => Some(Direction::D1),
            0b100 => Some(Direction::D2),
            _ => None,
        }
    }

    /// Members in ascending order `D0 < D1 < D2`.
    pub fn iter(self) -> impl Iterator<Item = Direction> {
        Direction::ALL.into_iter().filter(move |d| self.contains(*d))
    }
}

impl FromIterator<Direction> for DirSet {
    fn from_iter<I: IntoIterator<Item = Direction>>(iter: I) -> Self {
        let mut s = DirSet::EMPTY;
        for d in iter {
            s.insert(d);
        }
        s
    }
}

impl fmt::Display for DirSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn opposite(self) -> Orientation {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Orientation::Up => 'U',
            Orientation::Down => 'D',
        }
    }
}

impl FromStr for Orientation {
    type Err = LatticeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "U" => Ok(Orientation::Up),
            "D" => Ok(Orientation::Down),
            _ => Err(LatticeError::Parse(s.to_string())),
        }
    }
}

/// A triangle of the tessellation. Ordered by `(a, b, orientation)` with `Up < Down`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    pub a: i32,
    pub b: i32,
    pub orientation: Orientation,
}

impl Face {
    pub const fn up(a: i32, b: i32) -> Face {
        Face { a, b, orientation: Orientation::Up }
    }

    pub const fn down(a: i32, b: i32) -> Face {
        Face { a, b, orientation: Orientation::Down }
    }

    pub fn anchor(self) -> AxialPoint {
        AxialPoint::new(self.a, self.b)
    }

    /// Corners in the fixed order `(a,b),(a+1,b),(a,b+1)` for `Up` and
    /// `(a+1,b),(a,b+1),(a+1,b+1)` for `Down`.
    pub fn corners(self) -> [AxialPoint; 3] {
        let (a, b) = (self.a, self.b);
        match self.orientation {
            Orientation::Up => [
                AxialPoint::new(a, b),
                AxialPoint::new(a + 1, b),
                AxialPoint::new(a, b + 1),
            ],
            Orientation::Down => [
                AxialPoint::new(a + 1, b),
                AxialPoint::new(a, b + 1),
                AxialPoint::new(a + 1, b + 1),
            ],
        }
    }

    /// Direction of the edge opposite the `i`-th corner (in `corners()` order).
    pub fn opposite_directions(self) -> [Direction; 3] {
        match self.orientation {
            Orientation::Up => [Direction::D2, Direction::D1, Direction::D0],
            Orientation::Down => [Direction::D0, Direction::D1, Direction::D2],
        }
    }

    pub fn has_corner(self, x: AxialPoint) -> bool {
        self.corners().contains(&x)
    }

    /// Direction of the edge of this face that does not contain `x`.
    pub fn opposite_edge_direction(self, x: AxialPoint) -> Result<Direction, LatticeError> {
        self.corners()
            .iter()
            .position(|c| *c == x)
            .map(|i| self.opposite_directions()[i])
            .ok_or(LatticeError::NotACorner { face: self, point: x })
    }

    /// The three faces sharing an edge with this one, listed opposite to
    /// corners 0, 1, 2 respectively.
    pub fn edge_neighbors(self) -> [Face; 3] {
        let (a, b) = (self.a, self.b);
        match self.orientation {
            Orientation::Up => [Face::down(a, b), Face::down(a - 1, b), Face::down(a, b - 1)],
            Orientation::Down => [Face::up(a, b + 1), Face::up(a + 1, b), Face::up(a, b)],
        }
    }

    /// This face together with its three edge-neighbours.
    pub fn large_triangle(self) -> [Face; 4] {
        let [n0, n1, n2] = self.edge_neighbors();
        [self, n0, n1, n2]
    }

    pub fn is_adjacent(self, other: Face) -> bool {
        self.edge_neighbors().contains(&other)
    }

    /// The face with the given corner set, in any order.
    pub fn from_corners(points: [AxialPoint; 3]) -> Result<Face, LatticeError> {
        let sa: i32 = points.iter().map(|p| p.a).sum();
        let sb: i32 = points.iter().map(|p| p.b).sum();
        let face = match (sa.rem_euclid(3), sb.rem_euclid(3)) {
            (1, 1) => Face::up((sa - 1).div_euclid(3), (sb - 1).div_euclid(3)),
            (2, 2) => Face::down((sa - 2).div_euclid(3), (sb - 2).div_euclid(3)),
            _ => return Err(LatticeError::NotAFace),
        };
        let mut want = face.corners();
        let mut got = points;
        want.sort();
        got.sort();
        if want == got {
            Ok(face)
        } else {
            Err(LatticeError::NotAFace)
        }
    }

    /// Three times the centroid, as integer axial coordinates.
    pub fn centroid3(self) -> AxialPoint {
        self.corners().iter().fold(AxialPoint::ORIGIN, |acc, c| acc + *c)
    }

    pub fn translate(self, v: AxialPoint) -> Face {
        Face { a: self.a + v.a, b: self.b + v.b, orientation: self.orientation }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.orientation {
            Orientation::Up => "Up",
            Orientation::Down => "Down",
        };
        write!(f, "{}({},{})", name, self.a, self.b)
    }
}

/// The six faces containing `x`, counterclockwise starting from `Up(x)`.
///
/// Face `i` of the result fills the angular sector between the rays at
/// `60i` and `60(i+1)` degrees, so faces `k, k+1, k+2` form the half-disc
/// bounded by the line through `x` parallel to `Direction::from_index(k)`.
pub fn faces_around_vertex(x: AxialPoint) -> [Face; 6] {
    let (a, b) = (x.a, x.b);
    [
        Face::up(a, b),
        Face::down(a - 1, b),
        Face::up(a - 1, b),
        Face::down(a - 1, b - 1),
        Face::up(a, b - 1),
        Face::down(a, b - 1),
    ]
}

/// All faces whose corners lie within lattice distance `radius` of `center`.
pub fn hexagon(center: AxialPoint, radius: i32) -> Result<Region, LatticeError> {
    if radius < 1 {
        return Err(LatticeError::RadiusTooSmall(radius));
    }
    let mut faces = BTreeSet::new();
    for a in -radius - 1..=radius {
        for b in -radius - 1..=radius {
            for face in [Face::up(a, b), Face::down(a, b)] {
                if face.corners().iter().all(|c| c.norm() <= radius) {
                    faces.insert(face.translate(center));
                }
            }
        }
    }
    Ok(Region { faces })
}

/// A finite set of faces. Vertex data is derived from the faces.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Region {
    faces: BTreeSet<Face>,
}

impl Region {
    pub fn new(faces: impl IntoIterator<Item = Face>) -> Self {
        Region { faces: faces.into_iter().collect() }
    }

    /// Faces `Up(a,b)` and `Down(a,b)` for `0 <= a < width`, `0 <= b < height`,
    /// shifted by `origin`.
    pub fn parallelogram(origin: AxialPoint, width: i32, height: i32) -> Self {
        let mut faces = BTreeSet::new();
        for a in 0..width {
            for b in 0..height {
                faces.insert(Face::up(a, b).translate(origin));
                faces.insert(Face::down(a, b).translate(origin));
            }
        }
        Region { faces }
    }

    /// Every face whose three corners lie in `points`.
    pub fn spanned_by(points: &BTreeSet<AxialPoint>) -> Self {
        let faces = points
            .iter()
            .flat_map(|p| [Face::up(p.a, p.b), Face::down(p.a - 1, p.b)])
            .filter(|f| f.corners().iter().all(|c| points.contains(c)))
            .collect();
        Region { faces }
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.faces.contains(face)
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn insert(&mut self, face: Face) -> bool {
        self.faces.insert(face)
    }

    pub fn remove(&mut self, face: &Face) -> bool {
        self.faces.remove(face)
    }

    pub fn vertex_set(&self) -> BTreeSet<AxialPoint> {
        self.faces.iter().flat_map(|f| f.corners()).collect()
    }

    /// Vertices whose six incident faces all belong to the region.
    pub fn interior_vertices(&self) -> BTreeSet<AxialPoint> {
        self.vertex_set()
            .into_iter()
            .filter(|x| faces_around_vertex(*x).iter().all(|f| self.faces.contains(f)))
            .collect()
    }

    pub fn union(&self, other: &Region) -> Region {
        Region { faces: self.faces.union(&other.faces).copied().collect() }
    }

    pub fn translate(&self, v: AxialPoint) -> Region {
        Region { faces: self.faces.iter().map(|f| f.translate(v)).collect() }
    }

    pub fn map(&self, g: &Isometry) -> Region {
        Region { faces: self.faces.iter().map(|f| g.apply_face(*f)).collect() }
    }

    /// Largest `r` such that some `hexagon(c, r)` fits inside the region; 0 if none.
    pub fn inradius(&self) -> i32 {
        let mut best = 0;
        for c in self.interior_vertices() {
            let mut r = best + 1;
            while hexagon(c, r).map(|h| h.faces.is_subset(&self.faces)).unwrap_or(false) {
                best = r;
                r += 1;
            }
        }
        best
    }

    /// True when every face can be reached from every other through shared edges.
    pub fn is_edge_connected(&self) -> bool {
        let Some(start) = self.faces.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([*start]);
        let mut stack = vec![*start];
        while let Some(f) = stack.pop() {
            for n in f.edge_neighbors() {
                if self.faces.contains(&n) && seen.insert(n) {
                    stack.push(n);
                }
            }
        }
        seen.len() == self.faces.len()
    }
}

impl FromIterator<Face> for Region {
    fn from_iter<I: IntoIterator<Item = Face>>(iter: I) -> Self {
        Region::new(iter)
    }
}

/// A simplicial isometry of the tessellation: `p -> M p + t` with `M` one of
/// the twelve linear symmetries of the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Isometry {
    m: [[i32; 2]; 2],
    t: AxialPoint,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry { m: [[1, 0], [0, 1]], t: AxialPoint::ORIGIN };

    /// Rotation by `60k` degrees about the origin.
    pub fn rotation(k: i32) -> Isometry {
        // (a, b) -> (-b, a + b)
        let r = Isometry { m: [[0, -1], [1, 1]], t: AxialPoint::ORIGIN };
        let mut g = Isometry::IDENTITY;
        for _ in 0..k.rem_euclid(6) {
            g = r.compose(&g);
        }
        g
    }

    /// Reflection in the line through the origin parallel to `D0`.
    pub fn reflection() -> Isometry {
        // (a, b) -> (a + b, -b)
        Isometry { m: [[1, 1], [0, -1]], t: AxialPoint::ORIGIN }
    }

    pub fn translation(t: AxialPoint) -> Isometry {
        Isometry { m: Isometry::IDENTITY.m, t }
    }

    /// The twelve symmetries fixing the origin: rotations, then reflected rotations.
    pub fn point_group() -> [Isometry; 12] {
        std::array::from_fn(|i| {
            let rot = Isometry::rotation(i as i32 % 6);
            if i < 6 {
                rot
            } else {
                rot.compose(&Isometry::reflection())
            }
        })
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let m = &self.m;
        let n = &other.m;
        let prod = [
            [m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]],
            [m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]],
        ];
        Isometry { m: prod, t: self.apply_linear(other.t) + self.t }
    }

    pub fn inverse(&self) -> Isometry {
        let m = &self.m;
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let inv = [[m[1][1] * det, -m[0][1] * det], [-m[1][0] * det, m[0][0] * det]];
        let lin = Isometry { m: inv, t: AxialPoint::ORIGIN };
        Isometry { m: inv, t: -lin.apply_linear(self.t) }
    }

    /// Translate the image by `v` after applying `self`.
    pub fn then_translate(&self, v: AxialPoint) -> Isometry {
        Isometry { m: self.m, t: self.t + v }
    }

    fn apply_linear(&self, p: AxialPoint) -> AxialPoint {
        AxialPoint::new(
            self.m[0][0] * p.a + self.m[0][1] * p.b,
            self.m[1][0] * p.a + self.m[1][1] * p.b,
        )
    }

    pub fn apply(&self, p: AxialPoint) -> AxialPoint {
        self.apply_linear(p) + self.t
    }

    pub fn apply_direction(&self, d: Direction) -> Direction {
        Direction::of_step(self.apply_linear(d.vector())).expect("lattice symmetry maps steps to steps")
    }

    pub fn apply_face(&self, f: Face) -> Face {
        Face::from_corners(f.corners().map(|c| self.apply(c))).expect("lattice symmetry maps faces to faces")
    }

    pub fn is_orientation_preserving(&self) -> bool {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0] == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: i32, b: i32) -> AxialPoint {
        AxialPoint::new(a, b)
    }

    #[test]
    fn corners_follow_fixed_order() {
        assert_eq!(Face::up(0, 0).corners(), [p(0, 0), p(1, 0), p(0, 1)]);
        assert_eq!(Face::down(0, 0).corners(), [p(1, 0), p(0, 1), p(1, 1)]);
        assert_eq!(Face::up(-2, 3).corners(), [p(-2, 3), p(-1, 3), p(-2, 4)]);
    }

    #[test]
    fn opposite_edges() {
        assert_eq!(Face::up(0, 0).opposite_edge_direction(p(0, 0)), Ok(Direction::D2));
        assert_eq!(Face::up(0, 0).opposite_edge_direction(p(1, 0)), Ok(Direction::D1));
        assert_eq!(Face::down(0, 0).opposite_edge_direction(p(1, 0)), Ok(Direction::D0));
        assert!(matches!(
            Face::up(0, 0).opposite_edge_direction(p(1, 1)),
            Err(LatticeError::NotACorner { .. })
        ));
    }

    #[test]
    fn opposite_direction_matches_edge_vector() {
        for f in hexagon(p(0, 0), 3).unwrap().faces() {
            let c = f.corners();
            for i in 0..3 {
                let edge = c[(i + 2) % 3] - c[(i + 1) % 3];
                assert_eq!(Direction::of_step(edge), Some(f.opposite_directions()[i]));
            }
        }
    }

    #[test]
    fn large_triangles() {
        let mut got = Face::down(0, 0).large_triangle().to_vec();
        got.sort();
        let mut want = vec![Face::down(0, 0), Face::up(0, 0), Face::up(1, 0), Face::up(0, 1)];
        want.sort();
        assert_eq!(got, want);

        let mut got = Face::up(0, 0).large_triangle().to_vec();
        got.sort();
        let mut want = vec![Face::up(0, 0), Face::down(0, 0), Face::down(-1, 0), Face::down(0, -1)];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn edge_neighbor_is_opposite_corner() {
        for f in [Face::up(2, -1), Face::down(-3, 4)] {
            for (i, n) in f.edge_neighbors().iter().enumerate() {
                assert_eq!(n.orientation, f.orientation.opposite());
                let shared: Vec<_> = f.corners().into_iter().filter(|c| n.has_corner(*c)).collect();
                assert_eq!(shared.len(), 2);
                assert!(!shared.contains(&f.corners()[i]));
            }
        }
    }

    #[test]
    fn faces_around_origin() {
        assert_eq!(
            faces_around_vertex(p(0, 0)),
            [
                Face::up(0, 0),
                Face::down(-1, 0),
                Face::up(-1, 0),
                Face::down(-1, -1),
                Face::up(0, -1),
                Face::down(0, -1)
            ]
        );
        let ring = faces_around_vertex(p(1, 1));
        let base = faces_around_vertex(p(0, 0));
        for i in 0..6 {
            assert_eq!(ring[i], base[i].translate(p(1, 1)));
        }
    }

    #[test]
    fn faces_around_vertex_share_edges_through_vertex() {
        let x = p(4, -2);
        let ring = faces_around_vertex(x);
        for i in 0..6 {
            let (f, g) = (ring[i], ring[(i + 1) % 6]);
            assert!(f.is_adjacent(g));
            assert!(f.has_corner(x) && g.has_corner(x));
            assert_ne!(f.orientation, g.orientation);
        }
    }

    #[test]
    fn hexagon_sizes() {
        assert_eq!(hexagon(p(0, 0), 1).unwrap().len(), 6);
        assert_eq!(hexagon(p(0, 0), 2).unwrap().len(), 24);
        assert_eq!(hexagon(p(0, 0), 0), Err(LatticeError::RadiusTooSmall(0)));
        let h1: BTreeSet<Face> = faces_around_vertex(p(0, 0)).into_iter().collect();
        assert_eq!(hexagon(p(0, 0), 1).unwrap().faces(), &h1);
    }

    #[test]
    fn interior_of_hexagon_is_smaller_ball() {
        let h = hexagon(p(1, 2), 3).unwrap();
        let interior = h.interior_vertices();
        assert_eq!(interior.len(), 1 + 6 + 12);
        assert!(interior.iter().all(|x| x.distance(p(1, 2)) <= 2));
        assert_eq!(h.vertex_set().len(), 37);
        assert_eq!(h.inradius(), 3);
    }

    #[test]
    fn from_corners_round_trips() {
        for f in hexagon(p(0, 0), 2).unwrap().faces() {
            let mut c = f.corners();
            c.reverse();
            assert_eq!(Face::from_corners(c), Ok(*f));
        }
        assert_eq!(Face::from_corners([p(0, 0), p(1, 0), p(2, 0)]), Err(LatticeError::NotAFace));
    }

    #[test]
    fn point_group_has_twelve_distinct_elements() {
        let g = Isometry::point_group();
        let set: BTreeSet<_> = g.iter().collect();
        assert_eq!(set.len(), 12);
        assert_eq!(g.iter().filter(|i| i.is_orientation_preserving()).count(), 6);
        assert_eq!(Isometry::rotation(6), Isometry::IDENTITY);
        assert_eq!(Isometry::rotation(1).apply(p(1, 0)), p(0, 1));
        assert_eq!(Isometry::rotation(1).apply_direction(Direction::D0), Direction::D1);
        assert_eq!(Isometry::rotation(1).apply_direction(Direction::D1), Direction::D2);
        assert_eq!(Isometry::rotation(1).apply_direction(Direction::D2), Direction::D0);
    }

    #[test]
    fn inverse_undoes() {
        for g in Isometry::point_group() {
            let h = g.then_translate(p(3, -2));
            assert_eq!(h.compose(&h.inverse()), Isometry::IDENTITY);
            assert_eq!(h.inverse().compose(&h), Isometry::IDENTITY);
        }
    }

    #[test]
    fn dirset_basics() {
        let s = DirSet::all_but(Direction::D0);
        assert_eq!(s.len(), 2);
        assert!(!s.contains(Direction::D0));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![Direction::D1, Direction::D2]);
        assert_eq!(DirSet::single(Direction::D2).single_value(), Some(Direction::D2));
        assert_eq!(DirSet::FULL.single_value(), None);
    }
}
