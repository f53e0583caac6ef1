use std::collections::{BTreeMap, BTreeSet};

use mkflat::linkgraph::*;

/// Generalized Petersen graph GP(8,3) built from its definition.
fn gp83() -> CubicGraph {
    let mut edges = Vec::new();
    for i in 0..8 {
        edges.push((i, (i + 1) % 8));
        edges.push((i, 8 + i));
        edges.push((8 + i, 8 + (i + 3) % 8));
    }
    CubicGraph::from_edges(16, &edges).unwrap()
}

fn floyd_warshall(g: &CubicGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every vertex 4-tuple forming a path whose endpoints are 3 apart.
fn brute_roots(g: &CubicGraph) -> BTreeSet<[usize; 4]> {
    let d = floyd_warshall(g);
    let n = g.vertex_count();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    let p = [a, b, c, e];
                    if p.iter().collect::<BTreeSet<_>>().len() == 4
                        && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
                        && d[a][e] == 3
                    {
                        out.insert(p);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn cayley_graph_of_pauli_group() {
    assert_eq!(pauli_group().len(), 16);
    let g = pauli_cayley();
    assert_eq!(g.vertex_count(), 16);
    assert_eq!(g.edge_count(), 24);
    assert!(g.is_fully_labelled());
    assert!(g.has_proper_labelling());
    assert_eq!(g.girth(), Some(6));
    let map = find_isomorphism(&g, &gp83()).expect("isomorphic to GP(8,3)");
    assert!(is_isomorphism(&g, &gp83(), &map));
    assert!(is_vertex_transitive(&g));
}

#[test]
fn moebius_kantor_is_gp83() {
    let mk = moebius_kantor();
    let identity: Vec<usize> = (0..16).collect();
    assert!(is_isomorphism(&mk, &gp83(), &identity));
    assert_eq!(mk.name(0), "u0");
    assert_eq!(mk.name(15), "w7");
}

#[test]
fn distances_match_floyd_warshall() {
    for g in [pauli_cayley(), moebius_kantor()] {
        assert_eq!(g.distance_matrix(), floyd_warshall(&g));
    }
}

#[test]
fn roots_and_ranks_match_brute_force() {
    let g = pauli_cayley();
    let brute = brute_roots(&g);
    let listed: BTreeSet<[usize; 4]> = enumerate_roots(&g).iter().map(|r| r.path).collect();
    assert_eq!(listed, brute);
    assert_eq!(enumerate_roots(&g).len(), brute.len());

    let mut by_ends: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for p in &brute {
        *by_ends.entry((p[0], p[3])).or_default() += 1;
    }
    let mut exceptions = 0;
    for r in enumerate_roots(&g) {
        let rank = root_rank(&g, &r).unwrap();
        let others = by_ends[&(r.start(), r.end())] - 1;
        assert_eq!(rank, Rank::from_count(others as u32, 2));
        assert!(rank == Rank::two() || rank == Rank::three_halves());
        let w = root_word(&g, &r).unwrap();
        let rainbow = w.iter().collect::<BTreeSet<_>>().len() == 3;
        if rainbow != (rank == Rank::two()) {
            exceptions += 1;
        }
    }
    assert_eq!(exceptions, 0);
    assert!(verify_rank_label_lemma(&g).unwrap());
}

type Rank = mkflat::Rank;

#[test]
fn relator_cycles_hold_and_break_under_relabelling() {
    let g = pauli_cayley();
    assert!(verify_relator_cycles(&g).unwrap());
    for (u, v) in g.edges().collect::<Vec<_>>() {
        let current = g.label(u, v).unwrap();
        for l in Label::ALL.into_iter().filter(|l| *l != current) {
            let mut h = g.clone();
            h.set_label(u, v, l).unwrap();
            assert!(!verify_relator_cycles(&h).unwrap(), "edge {u}-{v} relabelled {l}");
            assert!(!h.has_proper_labelling());
        }
    }
}

/// Six-cycles through each vertex, counted by walking closed paths.
fn six_cycle_census(g: &CubicGraph) -> Vec<usize> {
    let mut per_vertex = vec![0; g.vertex_count()];
    let mut cycles = BTreeSet::new();
    fn walk(g: &CubicGraph, path: &mut Vec<usize>, cycles: &mut BTreeSet<Vec<usize>>) {
        if path.len() == 6 {
            if g.has_edge(path[5], path[0]) {
                let mut c = path.clone();
                c.sort();
                cycles.insert(c);
            }
            return;
        }
        for &n in g.neighbors(*path.last().unwrap()) {
            if !path.contains(&n) {
                path.push(n);
                walk(g, path, cycles);
                path.pop();
            }
        }
    }
    for v in 0..g.vertex_count() {
        walk(g, &mut vec![v], &mut cycles);
    }
    for c in &cycles {
        for v in c {
            per_vertex[*v] += 1;
        }
    }
    per_vertex
}

#[test]
fn six_cycle_census_per_vertex() {
    let g = pauli_cayley();
    let census = six_cycle_census(&g);
    let mut lib = vec![0; 16];
    for c in g.six_cycles() {
        for v in c {
            lib[v] += 1;
        }
    }
    assert_eq!(lib, census);
    assert!(census.iter().all(|c| *c == census[0]));
    assert_eq!(g.six_cycles().len() * 6, census.iter().sum::<usize>());
}

#[test]
fn rewired_graph_is_not_isomorphic() {
    // Swap the ends of two disjoint edges of GP(8,3), keeping it cubic.
    let mut edges: Vec<(usize, usize)> = gp83().edges().collect();
    let i = edges.iter().position(|e| *e == (0, 1)).unwrap();
    let j = edges.iter().position(|e| *e == (8, 11) || *e == (11, 8)).unwrap();
    edges[i] = (0, 8 + 3);
    edges[j] = (1, 8);
    let h = CubicGraph::from_edges(16, &edges).unwrap();
    assert!(find_isomorphism(&h, &gp83()).is_none());
}
