//! Even root distributions: gliders, forced propagation, the t-flat and strip
//! unions.
//!
//! A root distribution is even when every face has parity 0. Up to lattice
//! symmetry an even distribution of the plane is either the t-flat or a union
//! of height-1 strips: `δ` avoids one axis `d` everywhere and is constant on
//! every line parallel to `d`.
//!
//! # Canonical coordinates
//!
//! The canonical t glider has base `(0,0)–(3,0)` and top `(0,1)–(2,1)`; its
//! interior base vertices `(1,0), (2,0)` have `δ ≠ D0` and its interior top
//! vertex has `δ(1,1) = D0`. The canonical t-flat has center triangle
//! `Down(1,-1)`, corners `(2,-1), (1,0), (2,0)`, and is invariant under the
//! order-3 rotation `(a, b) -> (3 - a - b, a - 2)` about it.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use thiserror::Error;

use crate::distributions::{face_parity, DistributionError, Parity, RootDistribution};
use crate::lattice::{hexagon, AxialPoint, DirSet, Direction, Face, Isometry, LatticeError, Region};
use crate::realizer::{Contradiction, CspState};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Undefined(#[from] DistributionError),
    #[error("window is odd on {0}")]
    NotEven(Face),
    #[error("row {line} is assigned the strip axis {axis}")]
    RowOnAxis { line: i32, axis: Direction },
    #[error("{axis} is not rank 2 at {vertex}")]
    NotRankTwo { vertex: AxialPoint, axis: Direction },
    #[error("radius {0} cannot hold the t-flat seed, need at least 2")]
    RadiusTooSmall(i32),
    #[error("forced values disagree with the t-flat at {0}")]
    SeedMismatch(AxialPoint),
    #[error(transparent)]
    Contradiction(#[from] Contradiction),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A region together with a root distribution that is even on every face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenWindow {
    region: Region,
    delta: RootDistribution,
}

impl EvenWindow {
    /// Checks evenness on every face; `delta` is restricted to the region's vertices.
    pub fn new(region: Region, delta: &RootDistribution) -> Result<Self, ClassifyError> {
        for f in region.faces() {
            if face_parity(delta, *f)? == Parity::Odd {
                return Err(ClassifyError::NotEven(*f));
            }
        }
        let delta = delta.restrict(&region);
        Ok(EvenWindow { region, delta })
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn delta(&self) -> &RootDistribution {
        &self.delta
    }

    pub fn radius(&self) -> i32 {
        self.region.inradius()
    }

    pub fn into_parts(self) -> (Region, RootDistribution) {
        (self.region, self.delta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GliderKind {
    /// Both interior base vertices rank 2 along the base.
    T,
    /// Exactly one interior base vertex rank 2 along the base.
    TPrime,
}

/// A glider placement: the canonical stencil mapped by `placement`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Glider {
    pub kind: GliderKind,
    /// Base vertices from one end to the other.
    pub base: [AxialPoint; 4],
    /// Top vertices, the middle one carrying the rank-3/2 root.
    pub top: [AxialPoint; 3],
    pub placement: Isometry,
}

impl Glider {
    pub fn base_direction(&self) -> Direction {
        Direction::of_step(self.base[1] - self.base[0]).expect("base is a lattice segment")
    }

    pub fn faces(&self) -> [Face; 5] {
        STENCIL_FACES.map(|f| self.placement.apply_face(f))
    }
}

const STENCIL_FACES: [Face; 5] = [Face::up(0, 0), Face::down(0, 0), Face::up(1, 0), Face::down(1, 0), Face::up(2, 0)];
const STENCIL_BASE: [AxialPoint; 4] =
    [AxialPoint::new(0, 0), AxialPoint::new(1, 0), AxialPoint::new(2, 0), AxialPoint::new(3, 0)];
const STENCIL_TOP: [AxialPoint; 3] = [AxialPoint::new(0, 1), AxialPoint::new(1, 1), AxialPoint::new(2, 1)];

/// Every t and t′ placement whose five faces lie in the window, sorted.
pub fn find_gliders(w: &EvenWindow) -> Vec<Glider> {
    find_gliders_in(w.delta(), w.region())
}

fn find_gliders_in(delta: &RootDistribution, region: &Region) -> Vec<Glider> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let vertices = region.vertex_set();
    for g0 in Isometry::point_group() {
        for &origin in &vertices {
            let g = g0.then_translate(origin);
            let faces = STENCIL_FACES.map(|f| g.apply_face(f));
            if !faces.iter().all(|f| region.contains(f)) {
                continue;
            }
            let base = STENCIL_BASE.map(|p| g.apply(p));
            let top = STENCIL_TOP.map(|p| g.apply(p));
            let axis = g.apply_direction(Direction::D0);
            let (Some(d1), Some(d2), Some(dt)) = (delta.get(base[1]), delta.get(base[2]), delta.get(top[1])) else {
                continue;
            };
            if dt != axis {
                continue;
            }
            let kind = match ((d1 != axis) as u8) + ((d2 != axis) as u8) {
                2 => GliderKind::T,
                1 => GliderKind::TPrime,
                _ => continue,
            };
            let mut ends = [base[0], base[3]];
            ends.sort();
            if seen.insert((kind, ends, top[1])) {
                out.push(Glider { kind, base, top, placement: g });
            }
        }
    }
    out.sort();
    out
}

/// The rank pattern of the canonical t glider as vertex domains.
pub fn canonical_t_seed() -> BTreeMap<AxialPoint, DirSet> {
    BTreeMap::from([
        (AxialPoint::new(1, 0), DirSet::all_but(Direction::D0)),
        (AxialPoint::new(2, 0), DirSet::all_but(Direction::D0)),
        (AxialPoint::new(1, 1), DirSet::single(Direction::D0)),
    ])
}

/// The rank pattern of a t′ glider: `(1,0)` rank 2 along the base, `(2,0)`
/// and the top `(1,1)` rank 3/2.
pub fn canonical_t_prime_seed() -> BTreeMap<AxialPoint, DirSet> {
    BTreeMap::from([
        (AxialPoint::new(1, 0), DirSet::all_but(Direction::D0)),
        (AxialPoint::new(2, 0), DirSet::single(Direction::D0)),
        (AxialPoint::new(1, 1), DirSet::single(Direction::D0)),
    ])
}

/// Vertices of the height-`height` sector above the canonical t: rows
/// `0..=height`, bounded by the lines `a + b = 1` and `a = 2`.
pub fn t_sector_vertices(height: i32) -> BTreeSet<AxialPoint> {
    (0..=height).flat_map(|b| (1 - b..=2).map(move |a| AxialPoint::new(a, b))).collect()
}

/// The five faces of the canonical t together with every face whose corners
/// lie in [`t_sector_vertices`].
pub fn t_sector(height: i32) -> Region {
    let vertices = t_sector_vertices(height);
    let mut region: Region = STENCIL_FACES.into_iter().collect();
    for b in 0..height {
        for a in -height..=2 {
            for f in [Face::up(a, b), Face::down(a, b)] {
                if f.corners().iter().all(|c| vertices.contains(c)) {
                    region.insert(f);
                }
            }
        }
    }
    region
}

/// The canonical t glider as it sits in the t-flat.
pub fn canonical_t_assignment() -> RootDistribution {
    [
        (AxialPoint::new(1, 0), Direction::D1),
        (AxialPoint::new(2, 0), Direction::D2),
        (AxialPoint::new(1, 1), Direction::D0),
    ]
    .into_iter()
    .collect()
}

/// Outcome of [`propagate_even`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedExtension {
    /// Vertices with a single remaining direction.
    pub forced: RootDistribution,
    /// Vertices with two or three remaining directions.
    pub free: BTreeMap<AxialPoint, DirSet>,
    /// Vertices in the order propagation decided them (seeds excluded).
    pub order: Vec<AxialPoint>,
}

impl ForcedExtension {
    pub fn is_complete(&self) -> bool {
        self.free.is_empty()
    }
}

/// Arc-consistency fixpoint under the all-even constraint on `region`,
/// starting from the given domains. Seeds outside the region are ignored.
pub fn propagate_even(seed: &BTreeMap<AxialPoint, DirSet>, region: &Region) -> Result<ForcedExtension, Contradiction> {
    let mut state = CspState::all_even(region);
    for (p, d) in seed {
        let _ = state.restrict(*p, *d);
    }
    let report = state.propagate()?;
    let domains = state.domains();
    Ok(ForcedExtension {
        forced: state.decided(),
        free: domains.into_iter().filter(|(_, d)| d.len() > 1).collect(),
        order: report.forced,
    })
}

/// Seed domains from a concrete partial distribution.
pub fn seed_from(delta: &RootDistribution) -> BTreeMap<AxialPoint, DirSet> {
    delta.iter().map(|(p, d)| (p, DirSet::single(d))).collect()
}

/// Direction of the canonical t-flat at `p`.
///
/// The three lines `b = 0`, `a + b = 1` and `a = 2` extend the sides of the
/// center triangle and cut the plane into three edge regions and three
/// vertex cones. Each open edge region carries the direction of the side it
/// faces; each closed vertex cone carries one direction.
pub fn t_flat_direction(p: AxialPoint) -> Direction {
    let above = p.b > 0;
    let below = p.b < 0;
    let left_of_l1 = p.a + p.b < 1;
    let right_of_l1 = p.a + p.b > 1;
    let left_of_l2 = p.a < 2;
    let right_of_l2 = p.a > 2;
    if above && right_of_l1 && left_of_l2 {
        Direction::D0
    } else if below && left_of_l1 && left_of_l2 {
        Direction::D2
    } else if (below && right_of_l1 && right_of_l2) || (p.b >= 0 && p.a + p.b <= 1) {
        Direction::D1
    } else if p.b >= 0 && p.a >= 2 {
        Direction::D2
    } else {
        Direction::D0
    }
}

/// The center triangle of the canonical t-flat.
pub const T_FLAT_CENTER: Face = Face::down(1, -1);

fn canonical_anchor() -> AxialPoint {
    T_FLAT_CENTER.corners()[0]
}

/// Order-3 rotation about the centroid of `center`.
pub fn rotation_about(center: Face) -> Isometry {
    let c3 = center.centroid3();
    // Rotate about the origin, then fix the centroid: t = c - R c (c = c3 / 3).
    let r = Isometry::rotation(2);
    let rc = r.apply(c3);
    let diff = c3 - rc;
    Isometry::rotation(2).then_translate(AxialPoint::new(diff.a / 3, diff.b / 3))
}

/// The three radius-`radius` hexagons around the corners of `center`.
pub fn t_flat_window(center: Face, radius: i32) -> Result<Region, LatticeError> {
    let mut region = Region::default();
    for c in center.corners() {
        region = region.union(&hexagon(c, radius)?);
    }
    Ok(region)
}

/// The t-flat on [`t_flat_window`], with center triangle `Down(center.a - 1, center.b)`
/// (its lowest corner is `center`).
///
/// The three t gliders around the center triangle are propagated under the
/// all-even constraint; the vertices they do not force are filled from
/// [`t_flat_direction`], after checking that every forced value agrees.
pub fn build_t_flat(center: AxialPoint, radius: i32) -> Result<EvenWindow, ClassifyError> {
    if radius < 2 {
        return Err(ClassifyError::RadiusTooSmall(radius));
    }
    let shift = center - canonical_anchor();
    let center_face = T_FLAT_CENTER.translate(shift);
    let region = t_flat_window(center_face, radius)?;
    let rot = rotation_about(center_face);
    let mut seed = BTreeMap::new();
    let mut g = Isometry::translation(shift);
    for _ in 0..3 {
        for (p, d) in canonical_t_assignment().map(&g).iter() {
            seed.insert(p, DirSet::single(d));
        }
        g = rot.compose(&g);
    }
    let forced = propagate_even(&seed, &region)?;
    let mut delta = RootDistribution::new();
    for p in region.vertex_set() {
        let closed = t_flat_direction(p - shift);
        if let Some(d) = forced.forced.get(p) {
            if d != closed {
                return Err(ClassifyError::SeedMismatch(p));
            }
        } else if !forced.free.get(&p).is_some_and(|s| s.contains(closed)) {
            return Err(ClassifyError::SeedMismatch(p));
        }
        delta.set(p, closed);
    }
    EvenWindow::new(region, &delta)
}

/// A line-index to direction map repeating `pattern`, with line 0 taking `pattern[0]`.
pub fn periodic_rows(pattern: &[Direction]) -> impl Fn(i32) -> Direction + '_ {
    move |line| pattern[line.rem_euclid(pattern.len() as i32) as usize]
}

/// `δ(x) = rows(line of x parallel to axis)` on `region`.
pub fn build_strip_union(
    axis: Direction,
    rows: impl Fn(i32) -> Direction,
    region: &Region,
) -> Result<EvenWindow, ClassifyError> {
    let mut delta = RootDistribution::new();
    for p in region.vertex_set() {
        let line = p.line_index(axis);
        let d = rows(line);
        if d == axis {
            return Err(ClassifyError::RowOnAxis { line, axis });
        }
        delta.set(p, d);
    }
    EvenWindow::new(region.clone(), &delta)
}

/// The row map of `delta` with respect to `axis`, if `delta` avoids `axis`
/// on `points` and is constant along each line parallel to it.
pub fn row_structure(
    delta: &RootDistribution,
    points: impl IntoIterator<Item = AxialPoint>,
    axis: Direction,
) -> Option<BTreeMap<i32, Direction>> {
    let mut rows = BTreeMap::new();
    for p in points {
        let d = delta.get(p)?;
        if d == axis {
            return None;
        }
        if *rows.entry(p.line_index(axis)).or_insert(d) != d {
            return None;
        }
    }
    Some(rows)
}

/// A height-1 strip between consecutive lines parallel to `axis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Strip {
    pub axis: Direction,
    pub lower: i32,
    pub upper: i32,
}

/// Cut the window into height-1 strips along `axis`. Every line parallel to
/// `axis` must have rank 2, i.e. `δ` never equals `axis`.
pub fn strip_decomposition(w: &EvenWindow, axis: Direction) -> Result<Vec<Strip>, ClassifyError> {
    let mut lines = BTreeSet::new();
    for (p, d) in w.delta().iter() {
        if d == axis {
            return Err(ClassifyError::NotRankTwo { vertex: p, axis });
        }
        lines.insert(p.line_index(axis));
    }
    let lines: Vec<i32> = lines.into_iter().collect();
    Ok(lines
        .windows(2)
        .filter(|pair| pair[1] == pair[0] + 1)
        .map(|pair| Strip { axis, lower: pair[0], upper: pair[1] })
        .collect())
}

/// Smallest window radius for which [`classify`] reports why it could not decide
/// with [`UndeterminedReason::NoGliderNoRowStructure`] rather than
/// [`UndeterminedReason::WindowTooSmall`].
pub const MIN_DETERMINATE_RADIUS: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UndeterminedReason {
    /// The window's interior matches a pattern that its boundary breaks.
    BoundaryAmbiguous,
    /// Neither pattern fits and the window is below [`MIN_DETERMINATE_RADIUS`].
    WindowTooSmall,
    /// Neither pattern fits, even on the interior.
    NoGliderNoRowStructure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    TFlat { center: Face, symmetry_checked: bool },
    StripUnion { axis: Direction, rows: BTreeMap<i32, Direction> },
    Undetermined(UndeterminedReason),
}

/// The t-flat image matching `delta` on `points` for some t glider, if any.
fn t_flat_match(delta: &RootDistribution, region: &Region, points: &BTreeSet<AxialPoint>) -> Option<(Face, Isometry)> {
    for glider in find_gliders_in(delta, region) {
        if glider.kind != GliderKind::T || !glider.base.iter().chain(&glider.top).all(|p| points.contains(p)) {
            continue;
        }
        let g = glider.placement;
        let inv = g.inverse();
        if points.iter().all(|p| delta.get(*p) == Some(g.apply_direction(t_flat_direction(inv.apply(*p))))) {
            return Some((g.apply_face(T_FLAT_CENTER), g));
        }
    }
    None
}

fn rotation_invariant(delta: &RootDistribution, center: Face) -> bool {
    let r = rotation_about(center);
    delta.iter().all(|(p, d)| delta.get(r.apply(p)).is_none_or(|e| e == r.apply_direction(d)))
}

fn strip_match(delta: &RootDistribution, points: &BTreeSet<AxialPoint>) -> Option<(Direction, BTreeMap<i32, Direction>)> {
    Direction::ALL
        .into_iter()
        .find_map(|axis| row_structure(delta, points.iter().copied(), axis).map(|rows| (axis, rows)))
}

/// Classify an even window as a t-flat piece, a strip union, or neither.
///
/// A verdict requires the pattern to hold on every vertex of the window.
/// Otherwise the interior vertices are tried; a match there is reported as
/// [`UndeterminedReason::BoundaryAmbiguous`].
pub fn classify(w: &EvenWindow) -> Classification {
    let delta = w.delta();
    let all = w.region().vertex_set();
    if let Some((axis, rows)) = strip_match(delta, &all) {
        return Classification::StripUnion { axis, rows };
    }
    if let Some((center, _)) = t_flat_match(delta, w.region(), &all) {
        return Classification::TFlat { center, symmetry_checked: rotation_invariant(delta, center) };
    }
    let core = w.region().interior_vertices();
    if !core.is_empty() && (strip_match(delta, &core).is_some() || t_flat_match(delta, w.region(), &core).is_some()) {
        return Classification::Undetermined(UndeterminedReason::BoundaryAmbiguous);
    }
    if w.radius() < MIN_DETERMINATE_RADIUS {
        Classification::Undetermined(UndeterminedReason::WindowTooSmall)
    } else {
        Classification::Undetermined(UndeterminedReason::NoGliderNoRowStructure)
    }
}

/// Whether `w` is a piece of some t-flat (exact match on every vertex).
pub fn matches_t_flat(w: &EvenWindow) -> bool {
    t_flat_match(w.delta(), w.region(), &w.region().vertex_set()).is_some()
}

/// Whether `w` is a strip union along some axis (exact match on every vertex).
pub fn matches_strip_union(w: &EvenWindow) -> bool {
    strip_match(w.delta(), &w.region().vertex_set()).is_some()
}

/// An even window on `hexagon(center, radius)` drawn by randomized search.
pub fn random_even_window<R: Rng + ?Sized>(center: AxialPoint, radius: i32, rng: &mut R) -> Result<EvenWindow, ClassifyError> {
    let region = hexagon(center, radius)?;
    let delta = CspState::all_even(&region).sample(rng).expect("the parallel distribution is even");
    EvenWindow::new(region, &delta)
}
