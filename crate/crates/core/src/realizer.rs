//! Decides whether a parity distribution on a finite region is induced by a
//! root distribution.
//!
//! Every face contributes a ternary constraint on its corners. Propagation
//! enforces generalized arc consistency face by face; search branches on the
//! first undecided vertex in `(a, b)` order, trying `D0 < D1 < D2`, so the
//! first solution found is the lexicographically least one.

use std::collections::{BTreeMap, VecDeque};
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::distributions::{mismatch_count, Parity, ParityDistribution, RootDistribution};
use crate::io::{self, FormatError};
use crate::lattice::{faces_around_vertex, hexagon, AxialPoint, DirSet, Direction, Face, Region};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("parity undefined on {0}")]
    ParityUndefined(Face),
    #[error("{0} is not a vertex of the region")]
    UnknownVertex(AxialPoint),
    #[error("central face {0} is not in the region")]
    CentralFaceMissing(Face),
    #[error("cannot read counterexample data: {0}")]
    Data(String),
    #[error(transparent)]
    Format(#[from] FormatError),
}

/// Work counters for one propagation or search run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    /// Search-tree nodes visited, including the root.
    pub nodes: u64,
    /// Face revisions that removed at least one value.
    pub propagations: u64,
    /// Nodes at which propagation emptied a domain.
    pub failures: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Sat { witness: RootDistribution, stats: SearchStats },
    Unsat { stats: SearchStats },
}

impl SolveOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveOutcome::Sat { .. })
    }

    pub fn witness(&self) -> Option<&RootDistribution> {
        match self {
            SolveOutcome::Sat { witness, .. } => Some(witness),
            SolveOutcome::Unsat { .. } => None,
        }
    }

    pub fn stats(&self) -> SearchStats {
        match self {
            SolveOutcome::Sat { stats, .. } | SolveOutcome::Unsat { stats } => *stats,
        }
    }
}

/// Propagation emptied the domain of `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no direction left at {vertex}")]
pub struct Contradiction {
    pub vertex: AxialPoint,
}

/// Result of a successful propagation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PropagationReport {
    /// Vertices that became singletons, in the order they were decided.
    pub forced: Vec<AxialPoint>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Copy)]
struct FaceConstraint {
    vars: [usize; 3],
    /// Bit `i + 3j + 9k` is set when corner values `(D_i, D_j, D_k)` meet the target.
    table: u32,
}

impl FaceConstraint {
    fn new(face: Face, vars: [usize; 3], target: Parity) -> Self {
        let mut table = 0u32;
        for code in 0..27 {
            let dirs = [
                Direction::from_index(code % 3),
                Direction::from_index(code / 3 % 3),
                Direction::from_index(code / 9),
            ];
            if Parity::from_bit(mismatch_count(face, dirs)) == target {
                table |= 1 << code;
            }
        }
        FaceConstraint { vars, table }
    }

    /// Values of each corner that have a support in the other two domains.
    fn supported(&self, domains: &[DirSet]) -> [DirSet; 3] {
        let [d0, d1, d2] = self.vars.map(|v| domains[v]);
        let mut out = [DirSet::EMPTY; 3];
        for x in d0.iter() {
            for y in d1.iter() {
                for z in d2.iter() {
                    if self.table & (1 << (x.index() + 3 * y.index() + 9 * z.index())) != 0 {
                        out[0].insert(x);
                        out[1].insert(y);
                        out[2].insert(z);
                    }
                }
            }
        }
        out
    }
}

/// Search state: per-vertex domains plus the face constraints of a region.
#[derive(Debug, Clone)]
pub struct CspState {
    region: Region,
    target: ParityDistribution,
    vars: Vec<AxialPoint>,
    index: BTreeMap<AxialPoint, usize>,
    domains: Vec<DirSet>,
    constraints: Vec<FaceConstraint>,
    watchers: Vec<Vec<usize>>,
}

impl CspState {
    /// Full domains at every vertex of `region`, one constraint per face.
    pub fn new(target: &ParityDistribution, region: &Region) -> Result<Self, RealizeError> {
        let vars: Vec<AxialPoint> = region.vertex_set().into_iter().collect();
        let index: BTreeMap<AxialPoint, usize> = vars.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let mut constraints = Vec::with_capacity(region.len());
        let mut watchers = vec![Vec::new(); vars.len()];
        let mut restricted = ParityDistribution::new();
        for f in region.faces() {
            let p = target.get(*f).ok_or(RealizeError::ParityUndefined(*f))?;
            restricted.set(*f, p);
            let vs = f.corners().map(|c| index[&c]);
            for v in vs {
                watchers[v].push(constraints.len());
            }
            constraints.push(FaceConstraint::new(*f, vs, p));
        }
        Ok(CspState {
            region: region.clone(),
            target: restricted,
            domains: vec![DirSet::FULL; vars.len()],
            vars,
            index,
            constraints,
            watchers,
        })
    }

    /// Every face of `region` required to be even.
    pub fn all_even(region: &Region) -> Self {
        Self::new(&ParityDistribution::uniform(region, Parity::Even), region).expect("uniform target covers the region")
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn target(&self) -> &ParityDistribution {
        &self.target
    }

    pub fn vertices(&self) -> &[AxialPoint] {
        &self.vars
    }

    pub fn domain(&self, x: AxialPoint) -> Option<DirSet> {
        self.index.get(&x).map(|i| self.domains[*i])
    }

    pub fn domains(&self) -> BTreeMap<AxialPoint, DirSet> {
        self.vars.iter().copied().zip(self.domains.iter().copied()).collect()
    }

    /// Intersect the domain of `x` with `allowed`.
    pub fn restrict(&mut self, x: AxialPoint, allowed: DirSet) -> Result<(), RealizeError> {
        let i = *self.index.get(&x).ok_or(RealizeError::UnknownVertex(x))?;
        self.domains[i] = self.domains[i].intersect(allowed);
        Ok(())
    }

    pub fn assign(&mut self, x: AxialPoint, d: Direction) -> Result<(), RealizeError> {
        self.restrict(x, DirSet::single(d))
    }

    /// The assignment formed by the singleton domains.
    pub fn decided(&self) -> RootDistribution {
        self.vars
            .iter()
            .zip(&self.domains)
            .filter_map(|(p, d)| d.single_value().map(|v| (*p, v)))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.domains.iter().all(|d| d.len() == 1)
    }

    /// Run face-wise arc consistency to a fixpoint.
    pub fn propagate(&mut self) -> Result<PropagationReport, Contradiction> {
        let mut report = PropagationReport::default();
        let all: Vec<usize> = (0..self.constraints.len()).collect();
        let mut domains = std::mem::take(&mut self.domains);
        let result = self.propagate_from(&mut domains, &all, &mut report.stats, Some(&mut report.forced));
        self.domains = domains;
        result.map(|()| report).map_err(|v| Contradiction { vertex: self.vars[v] })
    }

    fn propagate_from(
        &self,
        domains: &mut [DirSet],
        seeds: &[usize],
        stats: &mut SearchStats,
        mut forced: Option<&mut Vec<AxialPoint>>,
    ) -> Result<(), usize> {
        if let Some(v) = domains.iter().position(|d| d.is_empty()) {
            return Err(v);
        }
        let mut queued = vec![false; self.constraints.len()];
        let mut queue = VecDeque::new();
        for &c in seeds {
            if !queued[c] {
                queued[c] = true;
                queue.push_back(c);
            }
        }
        while let Some(c) = queue.pop_front() {
            queued[c] = false;
            let con = &self.constraints[c];
            let supported = con.supported(domains);
            let mut changed = false;
            for (k, &v) in con.vars.iter().enumerate() {
                if supported[k] == domains[v] {
                    continue;
                }
                changed = true;
                let before = domains[v].len();
                domains[v] = supported[k];
                if domains[v].is_empty() {
                    stats.propagations += 1;
                    return Err(v);
                }
                if before > 1 && domains[v].len() == 1 {
                    if let Some(log) = forced.as_deref_mut() {
                        log.push(self.vars[v]);
                    }
                }
                for &w in &self.watchers[v] {
                    if w != c && !queued[w] {
                        queued[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            if changed {
                stats.propagations += 1;
            }
        }
        Ok(())
    }

    fn witness(&self, domains: &[DirSet]) -> RootDistribution {
        self.vars
            .iter()
            .zip(domains)
            .map(|(p, d)| (*p, d.single_value().expect("complete assignment")))
            .collect()
    }

    /// Depth-first search calling `visit` on each complete assignment until it breaks.
    fn search<F>(&self, domains: Vec<DirSet>, stats: &mut SearchStats, order: &mut dyn FnMut(DirSet) -> Vec<Direction>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[DirSet]) -> ControlFlow<()>,
    {
        stats.nodes += 1;
        let Some(var) = domains.iter().position(|d| d.len() > 1) else {
            return visit(&domains);
        };
        for value in order(domains[var]) {
            let mut next = domains.clone();
            next[var] = DirSet::single(value);
            if self.propagate_from(&mut next, &self.watchers[var], stats, None).is_err() {
                stats.failures += 1;
                continue;
            }
            self.search(next, stats, order, visit)?;
        }
        ControlFlow::Continue(())
    }

    fn root_search<F>(&self, order: &mut dyn FnMut(DirSet) -> Vec<Direction>, mut visit: F) -> SearchStats
    where
        F: FnMut(&[DirSet]) -> ControlFlow<()>,
    {
        let mut stats = SearchStats::default();
        let mut domains = self.domains.clone();
        let all: Vec<usize> = (0..self.constraints.len()).collect();
        if self.propagate_from(&mut domains, &all, &mut stats, None).is_err() {
            stats.nodes = 1;
            stats.failures = 1;
            return stats;
        }
        let _ = self.search(domains, &mut stats, order, &mut visit);
        stats
    }

    /// The lexicographically least solution, or `Unsat` after exhausting the tree.
    pub fn solve(&self) -> SolveOutcome {
        let mut found = None;
        let stats = self.root_search(&mut ascending, |d| {
            found = Some(self.witness(d));
            ControlFlow::Break(())
        });
        match found {
            Some(witness) => SolveOutcome::Sat { witness, stats },
            None => SolveOutcome::Unsat { stats },
        }
    }

    /// Up to `limit` solutions in lexicographic order; all of them for `None`.
    pub fn enumerate(&self, limit: Option<usize>) -> (Vec<RootDistribution>, SearchStats) {
        let mut out = Vec::new();
        if limit == Some(0) {
            return (out, SearchStats::default());
        }
        let stats = self.root_search(&mut ascending, |d| {
            out.push(self.witness(d));
            if Some(out.len()) == limit {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        (out, stats)
    }

    /// Number of solutions, without materialising them.
    pub fn count(&self) -> u64 {
        let mut n = 0;
        self.root_search(&mut ascending, |_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    /// A solution found with a random value order at every branch.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<RootDistribution> {
        let mut found = None;
        let mut order = |s: DirSet| {
            let mut v: Vec<Direction> = s.iter().collect();
            v.shuffle(rng);
            v
        };
        self.root_search(&mut order, |d| {
            found = Some(self.witness(d));
            ControlFlow::Break(())
        });
        found
    }
}

fn ascending(s: DirSet) -> Vec<Direction> {
    s.iter().collect()
}

/// Decide whether `parity` restricted to `region` is induced by a root distribution.
pub fn realize(parity: &ParityDistribution, region: &Region) -> Result<SolveOutcome, RealizeError> {
    Ok(CspState::new(parity, region)?.solve())
}

/// Up to `limit` realizations in lexicographic order (`None` for all).
pub fn enumerate_realizations(
    parity: &ParityDistribution,
    region: &Region,
    limit: Option<usize>,
) -> Result<Vec<RootDistribution>, RealizeError> {
    Ok(CspState::new(parity, region)?.enumerate(limit).0)
}

/// The parity pattern on the radius-1 hexagon at the origin whose bit `i`
/// gives the parity of face `i` of [`faces_around_vertex`].
pub fn hexagon_pattern(mask: u8) -> ParityDistribution {
    faces_around_vertex(AxialPoint::ORIGIN)
        .iter()
        .enumerate()
        .map(|(i, f)| (*f, Parity::from_bit(mask >> i)))
        .collect()
}

/// Lexicographically least witnesses for all 64 hexagon patterns, indexed by mask.
pub fn hexagon_witnesses() -> Vec<Option<RootDistribution>> {
    let region = hexagon(AxialPoint::ORIGIN, 1).expect("radius 1 is valid");
    (0..64u8)
        .map(|m| {
            realize(&hexagon_pattern(m), &region)
                .expect("pattern covers the hexagon")
                .witness()
                .cloned()
        })
        .collect()
}

/// True iff every parity pattern on a radius-1 hexagon is realizable.
pub fn verify_hexagon_theorem() -> bool {
    hexagon_witnesses().iter().all(Option::is_some)
}

/// A non-realizable parity distribution together with its central face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub parity: ParityDistribution,
    pub central_face: Face,
}

/// Central face of the bundled counterexample.
pub const COUNTEREXAMPLE_CENTRAL_FACE: Face = Face::down(-1, 0);

const COUNTEREXAMPLE_DATA: &str = include_str!("../data/counterexample.pdist");
const FIGURE_DATA: &str = include_str!("../data/figure.pdist");

impl Counterexample {
    /// The 49-face non-realizable distribution shipped with the crate.
    pub fn bundled() -> Self {
        Self::from_pdist(COUNTEREXAMPLE_DATA, COUNTEREXAMPLE_CENTRAL_FACE).expect("bundled data is well formed")
    }

    /// The 25 faces drawn around the central face, before widening.
    ///
    /// This refutes the drawn corner assignment but is realizable as a whole.
    pub fn figure() -> Self {
        Self::from_pdist(FIGURE_DATA, COUNTEREXAMPLE_CENTRAL_FACE).expect("bundled data is well formed")
    }

    pub fn from_pdist(text: &str, central_face: Face) -> Result<Self, RealizeError> {
        let parity = io::parse_parity(text)?;
        if parity.get(central_face).is_none() {
            return Err(RealizeError::CentralFaceMissing(central_face));
        }
        Ok(Counterexample { parity, central_face })
    }

    pub fn load(path: &std::path::Path, central_face: Face) -> Result<Self, RealizeError> {
        let text = std::fs::read_to_string(path).map_err(|e| RealizeError::Data(format!("{}: {e}", path.display())))?;
        Self::from_pdist(&text, central_face)
    }

    pub fn region(&self) -> Region {
        self.parity.domain()
    }

    pub fn solve(&self) -> SolveOutcome {
        CspState::new(&self.parity, &self.region()).expect("parity defines its own region").solve()
    }

    /// Outcome of the solver after deleting each odd face in turn.
    pub fn odd_face_removals(&self) -> Vec<(Face, bool)> {
        self.parity
            .odd_faces()
            .into_iter()
            .map(|f| {
                let mut p = self.parity.clone();
                p.remove(f);
                let sat = realize(&p, &p.domain()).expect("parity defines its own region").is_sat();
                (f, sat)
            })
            .collect()
    }
}

/// One fixed assignment of directions to the corners of the central face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerCase {
    pub corners: [Direction; 3],
    /// Corners whose direction differs from the opposite edge.
    pub mismatches: u8,
    pub outcome: SolveOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DozenReport {
    pub central_face: Face,
    /// Every even corner assignment: twelve with two mismatches, one with none.
    pub cases: Vec<CornerCase>,
}

impl DozenReport {
    pub fn two_mismatch_cases(&self) -> impl Iterator<Item = &CornerCase> {
        self.cases.iter().filter(|c| c.mismatches == 2)
    }

    pub fn matched_case(&self) -> Option<&CornerCase> {
        self.cases.iter().find(|c| c.mismatches == 0)
    }

    /// Twelve two-mismatch cases and the matched case, each unsatisfiable.
    pub fn holds(&self) -> bool {
        self.two_mismatch_cases().count() == 12
            && self.two_mismatch_cases().all(|c| !c.outcome.is_sat())
            && self.matched_case().is_some_and(|c| !c.outcome.is_sat())
    }
}

/// Fix each corner assignment of the central face with an even number of
/// mismatches and solve the rest of the counterexample.
pub fn verify_disallowed_dozen(ce: &Counterexample) -> DozenReport {
    let region = ce.region();
    let base = CspState::new(&ce.parity, &region).expect("parity defines its own region");
    let face = ce.central_face;
    let corners = face.corners();
    let mut cases = Vec::new();
    for code in 0..27usize {
        let dirs = [
            Direction::from_index(code / 9),
            Direction::from_index(code / 3 % 3),
            Direction::from_index(code % 3),
        ];
        let mismatches = mismatch_count(face, dirs);
        if mismatches % 2 == 1 {
            continue;
        }
        let mut state = base.clone();
        for (c, d) in corners.iter().zip(dirs) {
            state.assign(*c, d).expect("corner is a region vertex");
        }
        cases.push(CornerCase { corners: dirs, mismatches, outcome: state.solve() });
    }
    DozenReport { central_face: face, cases }
}
