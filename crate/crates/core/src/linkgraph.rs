//! Cubic link graphs: the Moebius–Kantor graph GP(8,3), the Cayley graph of
//! the Pauli group, roots (geodesic 3-paths) and their ranks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("path {0:?} is not an embedded geodesic 3-path")]
    NotARoot([usize; 4]),
    #[error("edge {0}-{1} carries no label")]
    Unlabelled(usize, usize),
    #[error("no edge between {0} and {1}")]
    NoEdge(usize, usize),
    #[error("vertex {0} has degree {1}, expected 3")]
    NotCubic(usize, usize),
}

/// A Pauli generator used as a face or edge label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    X,
    Y,
    Z,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::X, Label::Y, Label::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The 2×2 matrix of this generator.
    pub fn matrix(self) -> Matrix2 {
        let (o, l, i) = (Gaussian::ZERO, Gaussian::ONE, Gaussian::I);
        match self {
            Label::X => Matrix2([[o, l], [l, o]]),
            Label::Y => Matrix2([[o, -i], [i, o]]),
            Label::Z => Matrix2([[l, o], [o, -l]]),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Label::X => 'X',
            Label::Y => 'Y',
            Label::Z => 'Z',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Label {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "X" => Ok(Label::X),
            "Y" => Ok(Label::Y),
            "Z" => Ok(Label::Z),
            _ => Err(format!("unknown label `{s}`")),
        }
    }
}

/// Gaussian integer `re + im·i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gaussian {
    pub re: i64,
    pub im: i64,
}

impl Gaussian {
    pub const ZERO: Gaussian = Gaussian { re: 0, im: 0 };
    pub const ONE: Gaussian = Gaussian { re: 1, im: 0 };
    pub const I: Gaussian = Gaussian { re: 0, im: 1 };
}

impl std::ops::Add for Gaussian {
    type Output = Gaussian;
    fn add(self, o: Gaussian) -> Gaussian {
        Gaussian { re: self.re + o.re, im: self.im + o.im }
    }
}

impl std::ops::Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian { re: -self.re, im: -self.im }
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: Gaussian) -> Gaussian {
        Gaussian {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

/// 2×2 matrix over the Gaussian integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix2(pub [[Gaussian; 2]; 2]);

impl Matrix2 {
    pub fn identity() -> Matrix2 {
        Matrix2([[Gaussian::ONE, Gaussian::ZERO], [Gaussian::ZERO, Gaussian::ONE]])
    }

    pub fn det(&self) -> Gaussian {
        let m = &self.0;
        m[0][0] * m[1][1] + -(m[0][1] * m[1][0])
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;
    fn mul(self, o: Matrix2) -> Matrix2 {
        let (m, n) = (&self.0, &o.0);
        let e = |r: usize, c: usize| m[r][0] * n[0][c] + m[r][1] * n[1][c];
        Matrix2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

/// All elements of the group generated by X, Y, Z, in breadth-first order
/// from the identity (generators tried in X, Y, Z order).
pub fn pauli_group() -> Vec<Matrix2> {
    let mut elements = vec![Matrix2::identity()];
    let mut index: BTreeMap<Matrix2, usize> = BTreeMap::from([(Matrix2::identity(), 0)]);
    let mut queue = VecDeque::from([Matrix2::identity()]);
    while let Some(g) = queue.pop_front() {
        for s in Label::ALL {
            let h = g * s.matrix();
            if let std::collections::btree_map::Entry::Vacant(e) = index.entry(h) {
                e.insert(elements.len());
                elements.push(h);
                queue.push_back(h);
            }
        }
    }
    elements
}

/// Exact root rank `1 + N/q`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank<T: Clone + Integer = u32>(Ratio<T>);

impl<T: Clone + Integer> Rank<T> {
    /// `1 + n/q`. Panics if `q` is zero.
    pub fn from_count(n: T, q: T) -> Self {
        Rank(Ratio::one() + Ratio::new(n, q))
    }

    pub fn value(&self) -> &Ratio<T> {
        &self.0
    }

    pub fn three_halves() -> Self {
        Self::from_count(T::one(), T::one() + T::one())
    }

    pub fn two() -> Self {
        Self::from_count(T::one(), T::one())
    }
}

impl<T: Clone + Integer + fmt::Display> fmt::Display for Rank<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// An oriented embedded geodesic path `v0 v1 v2 v3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkRoot {
    pub path: [usize; 4],
}

impl LinkRoot {
    pub fn reversed(self) -> LinkRoot {
        let [a, b, c, d] = self.path;
        LinkRoot { path: [d, c, b, a] }
    }

    pub fn start(self) -> usize {
        self.path[0]
    }

    pub fn end(self) -> usize {
        self.path[3]
    }
}

/// A simple graph given by adjacency lists, optionally with edge labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicGraph {
    adjacency: Vec<Vec<usize>>,
    labels: BTreeMap<(usize, usize), Label>,
    names: Vec<String>,
}

impl CubicGraph {
    /// Build from an edge list. Fails unless every vertex has degree 3.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, LinkError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, nb) in adjacency.iter_mut().enumerate() {
            nb.sort_unstable();
            nb.dedup();
            if nb.len() != 3 {
                return Err(LinkError::NotCubic(v, nb.len()));
            }
        }
        Ok(CubicGraph { adjacency, labels: BTreeMap::new(), names: (0..n).map(|i| i.to_string()).collect() })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |v| **v > u).map(move |v| (u, *v)))
    }

    pub fn label(&self, u: usize, v: usize) -> Option<Label> {
        self.labels.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn set_label(&mut self, u: usize, v: usize, l: Label) -> Result<(), LinkError> {
        if !self.has_edge(u, v) {
            return Err(LinkError::NoEdge(u, v));
        }
        self.labels.insert((u.min(v), u.max(v)), l);
        Ok(())
    }

    pub fn is_fully_labelled(&self) -> bool {
        self.labels.len() == self.edge_count()
    }

    /// Whether the three edges at every vertex carry three distinct labels.
    pub fn has_proper_labelling(&self) -> bool {
        self.is_fully_labelled()
            && (0..self.vertex_count()).all(|v| {
                let set: BTreeSet<_> = self.adjacency[v].iter().filter_map(|w| self.label(v, *w)).collect();
                set.len() == 3
            })
    }

    /// Breadth-first distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count()).map(|v| self.distances_from(v)).collect()
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.vertex_count() {
            let mut dist = vec![usize::MAX; self.vertex_count()];
            let mut parent = vec![usize::MAX; self.vertex_count()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Every simple cycle of length 6, each listed once starting at its least
    /// vertex, in the direction whose second vertex is smaller.
    pub fn six_cycles(&self) -> Vec<[usize; 6]> {
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(6);
        for s in 0..self.vertex_count() {
            path.clear();
            path.push(s);
            self.extend_cycle(s, &mut path, &mut out);
        }
        out
    }

    fn extend_cycle(&self, s: usize, path: &mut Vec<usize>, out: &mut Vec<[usize; 6]>) {
        let last = *path.last().expect("path is never empty");
        if path.len() == 6 {
            if self.has_edge(last, s) && path[1] < path[5] {
                out.push(path.as_slice().try_into().expect("length checked"));
            }
            return;
        }
        for &v in &self.adjacency[last] {
            if v > s && !path.contains(&v) {
                path.push(v);
                self.extend_cycle(s, path, out);
                path.pop();
            }
        }
    }
}

/// The generalized Petersen graph GP(8,3): `u_i = i`, `w_i = 8 + i`.
pub fn moebius_kantor() -> CubicGraph {
    let mut edges = Vec::new();
    for i in 0..8 {
        edges.push((i, (i + 1) % 8));
        edges.push((i, 8 + i));
        edges.push((8 + i, 8 + (i + 3) % 8));
    }
    let mut g = CubicGraph::from_edges(16, &edges).expect("GP(8,3) is cubic");
    g.names = (0..8).map(|i| format!("u{i}")).chain((0..8).map(|i| format!("w{i}"))).collect();
    g
}

/// The Cayley graph of the Pauli group with respect to `{X, Y, Z}`, vertices
/// indexed as in [`pauli_group`], edge `g -- gs` labelled `s`.
pub fn pauli_cayley() -> CubicGraph {
    let elements = pauli_group();
    let index: BTreeMap<Matrix2, usize> = elements.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut edges = Vec::new();
    let mut labelled = Vec::new();
    for (i, g) in elements.iter().enumerate() {
        for s in Label::ALL {
            let j = index[&(*g * s.matrix())];
            if i < j {
                edges.push((i, j));
                labelled.push((i, j, s));
            }
        }
    }
    let mut graph = CubicGraph::from_edges(elements.len(), &edges).expect("Cayley graph of three involutions is cubic");
    for (i, j, s) in labelled {
        graph.set_label(i, j, s).expect("edge just inserted");
    }
    graph.names = (0..elements.len()).map(|i| format!("g{i}")).collect();
    graph
}

/// All oriented embedded 3-paths whose endpoints are at distance 3.
pub fn enumerate_roots(g: &CubicGraph) -> Vec<LinkRoot> {
    let dist = g.distance_matrix();
    let mut roots = Vec::new();
    for v0 in 0..g.vertex_count() {
        for &v1 in g.neighbors(v0) {
            for &v2 in g.neighbors(v1) {
                if v2 == v0 {
                    continue;
                }
                for &v3 in g.neighbors(v2) {
                    if v3 != v1 && v3 != v0 && dist[v0][v3] == 3 {
                        roots.push(LinkRoot { path: [v0, v1, v2, v3] });
                    }
                }
            }
        }
    }
    roots
}

/// Whether `r` is an embedded path of `g` with endpoints at distance 3.
pub fn is_root(g: &CubicGraph, r: &LinkRoot) -> bool {
    let p = r.path;
    let distinct: BTreeSet<_> = p.iter().collect();
    distinct.len() == 4
        && p.iter().all(|v| *v < g.vertex_count())
        && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
        && g.distances_from(p[0])[p[3]] == 3
}

/// `1 + N/q`, where `N` counts the other roots sharing both endpoints of `r`
/// and `q` is the degree of the start vertex minus one.
pub fn root_rank(g: &CubicGraph, r: &LinkRoot) -> Result<Rank, LinkError> {
    if !is_root(g, r) {
        return Err(LinkError::NotARoot(r.path));
    }
    let n = count_paths(g, r.start(), r.end()) - 1;
    Ok(Rank::from_count(n as u32, g.degree(r.start()) as u32 - 1))
}

fn count_paths(g: &CubicGraph, from: usize, to: usize) -> usize {
    let mut n = 0;
    for &v1 in g.neighbors(from) {
        for &v2 in g.neighbors(v1) {
            if v2 != from && g.has_edge(v2, to) && v1 != to && v2 != to {
                n += 1;
            }
        }
    }
    n
}

/// Labels along the root, edge by edge.
pub fn root_word(g: &CubicGraph, r: &LinkRoot) -> Result<[Label; 3], LinkError> {
    let p = r.path;
    let mut w = [Label::X; 3];
    for i in 0..3 {
        w[i] = g.label(p[i], p[i + 1]).ok_or(LinkError::Unlabelled(p[i], p[i + 1]))?;
    }
    Ok(w)
}

/// True iff every root has rank 2 exactly when its three labels are distinct.
pub fn verify_rank_label_lemma(g: &CubicGraph) -> Result<bool, LinkError> {
    for (u, v) in g.edges() {
        if g.label(u, v).is_none() {
            return Err(LinkError::Unlabelled(u, v));
        }
    }
    for r in enumerate_roots(g) {
        let w = root_word(g, &r)?;
        let rainbow = w[0] != w[1] && w[1] != w[2] && w[0] != w[2];
        let two = root_rank(g, &r)? == Rank::two();
        if rainbow != two {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three relator words as printed: XYXZYZ, YZYXZX, ZXZYXY.
pub fn relator_words() -> [[Label; 6]; 3] {
    use Label::*;
    [[X, Y, X, Z, Y, Z], [Y, Z, Y, X, Z, X], [Z, X, Z, Y, X, Y]]
}

/// Closure of the relator words under cyclic rotation and reversal.
pub fn allowed_cyclic_words() -> &'static BTreeSet<[Label; 6]> {
    static WORDS: OnceLock<BTreeSet<[Label; 6]>> = OnceLock::new();
    WORDS.get_or_init(|| {
        let mut set = BTreeSet::new();
        for w in relator_words() {
            let mut rev = w;
            rev.reverse();
            for base in [w, rev] {
                for k in 0..6 {
                    set.insert(std::array::from_fn(|i| base[(i + k) % 6]));
                }
            }
        }
        set
    })
}

/// True iff every 6-cycle's label word is a rotation or reversal of a relator.
pub fn verify_relator_cycles(g: &CubicGraph) -> Result<bool, LinkError> {
    let allowed = allowed_cyclic_words();
    for c in g.six_cycles() {
        let mut w = [Label::X; 6];
        for i in 0..6 {
            let (u, v) = (c[i], c[(i + 1) % 6]);
            w[i] = g.label(u, v).ok_or(LinkError::Unlabelled(u, v))?;
        }
        if !allowed.contains(&w) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A vertex bijection `a -> b` preserving adjacency, found by backtracking
/// with distance-profile refinement. Labels are ignored.
pub fn find_isomorphism(a: &CubicGraph, b: &CubicGraph) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    if a.vertex_count() == 0 {
        return Some(Vec::new());
    }
    (0..b.vertex_count()).find_map(|t| isomorphism_with(a, b, 0, t))
}

/// An isomorphism `a -> b` sending `s` to `t`, if one exists.
pub fn isomorphism_with(a: &CubicGraph, b: &CubicGraph, s: usize, t: usize) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count() {
        return None;
    }
    let da = a.distance_matrix();
    let db = b.distance_matrix();
    let profile = |d: &Vec<Vec<usize>>, v: usize| {
        let mut p = d[v].clone();
        p.sort_unstable();
        p
    };
    let pa: Vec<_> = (0..a.vertex_count()).map(|v| profile(&da, v)).collect();
    let pb: Vec<_> = (0..b.vertex_count()).map(|v| profile(&db, v)).collect();
    if pa[s] != pb[t] {
        return None;
    }
    // Map vertices of `a` in breadth-first order from `s` so each new vertex
    // has an already-mapped neighbour.
    let mut order = vec![s];
    let mut seen = vec![false; a.vertex_count()];
    seen[s] = true;
    let mut i = 0;
    while i < order.len() {
        for &v in a.neighbors(order[i]) {
            if !seen[v] {
                seen[v] = true;
                order.push(v);
            }
        }
        i += 1;
    }
    if order.len() != a.vertex_count() {
        return None;
    }
    let mut map = vec![usize::MAX; a.vertex_count()];
    let mut used = vec![false; b.vertex_count()];
    map[s] = t;
    used[t] = true;
    if extend_iso(b, &da, &db, &pa, &pb, &order, 1, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    b: &CubicGraph,
    da: &[Vec<usize>],
    db: &[Vec<usize>],
    pa: &[Vec<usize>],
    pb: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.vertex_count() {
        if used[w] || pa[v] != pb[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| da[u][v] == db[map[u]][w]);
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_iso(b, da, db, pa, pb, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Whether `map` is an adjacency-preserving bijection `a -> b`.
pub fn is_isomorphism(a: &CubicGraph, b: &CubicGraph, map: &[usize]) -> bool {
    let image: BTreeSet<_> = map.iter().collect();
    image.len() == a.vertex_count()
        && map.len() == a.vertex_count()
        && a.edges().all(|(u, v)| b.has_edge(map[u], map[v]))
        && a.edge_count() == b.edge_count()
}

/// Whether the automorphism group acts transitively on vertices.
pub fn is_vertex_transitive(g: &CubicGraph) -> bool {
    (0..g.vertex_count()).all(|t| isomorphism_with(g, g, 0, t).is_some())
}
