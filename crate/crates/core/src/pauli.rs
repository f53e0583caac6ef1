//! Pauli X/Y/Z face labellings.
//!
//! Around a vertex the six incident faces, read in [`faces_around_vertex`]
//! order, spell a cyclic word. A labelling is valid when every interior
//! vertex spells a rotation or reversal of XYXZYZ, YZYXZX or ZXZYXY. The
//! root direction at such a vertex is the unique axis whose two half-discs
//! are not rainbow.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::OnceLock;

use thiserror::Error;

use crate::distributions::{face_parity, Parity, RootDistribution};
use crate::lattice::{faces_around_vertex, AxialPoint, Direction, Face, Region};
use crate::linkgraph::{allowed_cyclic_words, Label};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PauliError {
    #[error("labelling undefined on {0}")]
    Undefined(Face),
    #[error("vertex word at {0} is not a relator")]
    Invalid(AxialPoint),
    #[error("vertex word at {vertex} has no well-defined root direction")]
    Integrity { vertex: AxialPoint },
    #[error("root distribution is odd on {0}")]
    NotEven(Face),
    #[error("seed faces {0} and {1} must be adjacent faces of the region")]
    InvalidSeed(Face, Face),
    #[error("no relator word at {vertex} is consistent with the labels around it")]
    Contradiction { vertex: AxialPoint },
    #[error("propagation stalled with {} unlabelled faces", .0.len())]
    Unreached(BTreeSet<Face>),
}

/// A finitely supported map from faces to labels.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct PauliLabelling {
    labels: BTreeMap<Face, Label>,
}

impl PauliLabelling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, f: Face) -> Option<Label> {
        self.labels.get(&f).copied()
    }

    pub fn set(&mut self, f: Face, l: Label) -> Option<Label> {
        self.labels.insert(f, l)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Face, Label)> + '_ {
        self.labels.iter().map(|(f, l)| (*f, *l))
    }

    /// Apply a permutation of the three labels.
    pub fn relabel(&self, perm: impl Fn(Label) -> Label) -> PauliLabelling {
        self.iter().map(|(f, l)| (f, perm(l))).collect()
    }
}

impl FromIterator<(Face, Label)> for PauliLabelling {
    fn from_iter<I: IntoIterator<Item = (Face, Label)>>(iter: I) -> Self {
        PauliLabelling { labels: iter.into_iter().collect() }
    }
}

fn rainbow(a: Label, b: Label, c: Label) -> bool {
    a != b && b != c && a != c
}

/// The root direction encoded by a cyclic vertex word, if well defined:
/// exactly one axis must split the word into two non-rainbow arcs.
pub fn word_direction(w: &[Label; 6]) -> Option<Direction> {
    let mut found = None;
    for k in 0..3 {
        let first = rainbow(w[k], w[k + 1], w[k + 2]);
        let second = rainbow(w[k + 3], w[(k + 4) % 6], w[(k + 5) % 6]);
        if first != second {
            return None;
        }
        if !first {
            if found.is_some() {
                return None;
            }
            found = Some(Direction::from_index(k));
        }
    }
    found
}

static ALL_WORDS: OnceLock<Vec<[Label; 6]>> = OnceLock::new();

/// Allowed vertex words grouped by the root direction they encode.
pub fn words_for_direction(d: Direction) -> &'static [[Label; 6]] {
    static BY_DIR: OnceLock<[Vec<[Label; 6]>; 3]> = OnceLock::new();
    &BY_DIR.get_or_init(|| {
        let mut out: [Vec<[Label; 6]>; 3] = Default::default();
        for w in allowed_cyclic_words() {
            let d = word_direction(w).expect("every relator word has one root direction");
            out[d.index()].push(*w);
        }
        out
    })[d.index()]
}

fn vertex_word(labels: &PauliLabelling, x: AxialPoint) -> Result<[Label; 6], PauliError> {
    let ring = faces_around_vertex(x);
    let mut w = [Label::X; 6];
    for i in 0..6 {
        w[i] = labels.get(ring[i]).ok_or(PauliError::Undefined(ring[i]))?;
    }
    Ok(w)
}

/// True iff every interior vertex of `region` spells an allowed word.
pub fn validate(labels: &PauliLabelling, region: &Region) -> Result<bool, PauliError> {
    if let Some(f) = region.faces().iter().find(|f| labels.get(**f).is_none()) {
        return Err(PauliError::Undefined(*f));
    }
    for x in region.interior_vertices() {
        if !allowed_cyclic_words().contains(&vertex_word(labels, x)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Root directions at the interior vertices of `region`.
pub fn induced_roots(labels: &PauliLabelling, region: &Region) -> Result<RootDistribution, PauliError> {
    if let Some(f) = region.faces().iter().find(|f| labels.get(**f).is_none()) {
        return Err(PauliError::Undefined(*f));
    }
    let mut delta = RootDistribution::new();
    for x in region.interior_vertices() {
        let w = vertex_word(labels, x)?;
        if !allowed_cyclic_words().contains(&w) {
            return Err(PauliError::Invalid(x));
        }
        let d = word_direction(&w).ok_or(PauliError::Integrity { vertex: x })?;
        delta.set(x, d);
    }
    Ok(delta)
}

/// Whether the root distribution read off a valid labelling is even on every
/// face whose corners are all interior.
pub fn check_even(labels: &PauliLabelling, region: &Region) -> Result<bool, PauliError> {
    if !validate(labels, region)? {
        let x = region
            .interior_vertices()
            .into_iter()
            .find(|x| vertex_word(labels, *x).map(|w| !allowed_cyclic_words().contains(&w)).unwrap_or(true))
            .expect("an invalid vertex exists");
        return Err(PauliError::Invalid(x));
    }
    let delta = induced_roots(labels, region)?;
    for f in region.faces() {
        if delta.is_defined_on(f.corners()) && face_parity(&delta, *f).expect("corners defined") == Parity::Odd {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Two adjacent faces with their prescribed labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seed {
    pub first: (Face, Label),
    pub second: (Face, Label),
}

impl Seed {
    pub fn new(f: Face, l: Label, g: Face, m: Label) -> Self {
        Seed { first: (f, l), second: (g, m) }
    }

    /// The seed read off an existing labelling.
    pub fn from_labelling(labels: &PauliLabelling, f: Face, g: Face) -> Option<Self> {
        Some(Seed::new(f, labels.get(f)?, g, labels.get(g)?))
    }
}

/// Worklist discipline for [`extend_with_order`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropagationOrder {
    /// First-in first-out from the seed pair.
    BreadthFirst,
    /// Last-in first-out, neighbours pushed in reverse order.
    DepthFirst,
}

/// The forced labelling of `region` compatible with `delta` and `seed`.
pub fn extend(delta: &RootDistribution, region: &Region, seed: Seed) -> Result<PauliLabelling, PauliError> {
    extend_with_order(delta, region, seed, PropagationOrder::BreadthFirst)
}

/// [`extend`] with an explicit worklist order.
///
/// `delta` may be partial: a vertex without a direction accepts every
/// relator word, and faces outside `region` are unconstrained.
pub fn extend_with_order(
    delta: &RootDistribution,
    region: &Region,
    seed: Seed,
    order: PropagationOrder,
) -> Result<PauliLabelling, PauliError> {
    for f in region.faces() {
        if delta.is_defined_on(f.corners()) && face_parity(delta, *f).expect("corners defined") == Parity::Odd {
            return Err(PauliError::NotEven(*f));
        }
    }
    let (f, g) = (seed.first.0, seed.second.0);
    if !region.contains(&f) || !region.contains(&g) || !f.is_adjacent(g) {
        return Err(PauliError::InvalidSeed(f, g));
    }

    let mut labels = PauliLabelling::new();
    labels.set(f, seed.first.1);
    labels.set(g, seed.second.1);

    let mut queued: BTreeSet<AxialPoint> = BTreeSet::new();
    let mut work: VecDeque<AxialPoint> = VecDeque::new();
    let push = |faces: &[Face], queued: &mut BTreeSet<AxialPoint>, work: &mut VecDeque<AxialPoint>| {
        let corners: BTreeSet<AxialPoint> = faces.iter().flat_map(|f| f.corners()).collect();
        let fresh: Vec<AxialPoint> = corners.into_iter().filter(|c| queued.insert(*c)).collect();
        match order {
            PropagationOrder::BreadthFirst => work.extend(fresh),
            PropagationOrder::DepthFirst => work.extend(fresh.into_iter().rev()),
        }
    };
    push(&[f, g], &mut queued, &mut work);

    loop {
        let next = match order {
            PropagationOrder::BreadthFirst => work.pop_front(),
            PropagationOrder::DepthFirst => work.pop_back(),
        };
        let Some(x) = next else { break };
        queued.remove(&x);
        let ring = faces_around_vertex(x);
        let words: &[[Label; 6]] = match delta.get(x) {
            Some(d) => words_for_direction(d),
            None => ALL_WORDS.get_or_init(|| allowed_cyclic_words().iter().copied().collect()).as_slice(),
        };
        let candidates: Vec<&[Label; 6]> = words
            .iter()
            .filter(|w| (0..6).all(|i| labels.get(ring[i]).is_none_or(|l| l == w[i]) || !region.contains(&ring[i])))
            .collect();
        if candidates.is_empty() {
            return Err(PauliError::Contradiction { vertex: x });
        }
        let mut newly = Vec::new();
        for i in 0..6 {
            if !region.contains(&ring[i]) || labels.get(ring[i]).is_some() {
                continue;
            }
            let l = candidates[0][i];
            if candidates.iter().all(|w| w[i] == l) {
                labels.set(ring[i], l);
                newly.push(ring[i]);
            }
        }
        if !newly.is_empty() {
            push(&newly, &mut queued, &mut work);
        }
    }

    let unreached: BTreeSet<Face> = region.faces().iter().filter(|f| labels.get(**f).is_none()).copied().collect();
    if !unreached.is_empty() {
        return Err(PauliError::Unreached(unreached));
    }
    let roots = induced_roots(&labels, region)?;
    if let Some((x, _)) = roots.iter().find(|(x, d)| delta.get(*x).is_some_and(|e| e != *d)) {
        return Err(PauliError::Integrity { vertex: x });
    }
    Ok(labels)
}
