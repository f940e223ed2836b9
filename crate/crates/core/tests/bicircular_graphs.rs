//! Bicircular matroids of small multigraphs against graph-side oracles.

use lpbc::bicircular::{bicircular_matroid, is_bicircular};
use lpbc::catalog::{theorem1_list, Group};
use lpbc::classifier::{bicircular_graphs, enumerate_bicircular_corpus};
use lpbc::set::all_subsets;
use lpbc::{Budget, Edge, ElementSet, MultiGraph};

/// Circuits are single free edges and connected edge sets with one more
/// edge than vertices and no vertex of degree below two (loops count
/// twice): subdivided theta graphs and tight or loose handcuffs.
fn is_bicycle(g: &MultiGraph, x: ElementSet) -> bool {
    let edges: Vec<Edge> = x.iter().map(|i| g.edges[i - 1]).collect();
    if edges.contains(&Edge::Free) {
        return edges.len() == 1;
    }
    let mut degree = vec![0usize; g.v + 1];
    let mut parent: Vec<usize> = (0..=g.v).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for e in &edges {
        match *e {
            Edge::Loop(a) => degree[a] += 2,
            Edge::Link(a, b) => {
                degree[a] += 1;
                degree[b] += 1;
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
            Edge::Free => unreachable!(),
        }
    }
    let vertices: Vec<usize> = (1..=g.v).filter(|&v| degree[v] > 0).collect();
    let root = find(&mut parent, vertices[0]);
    let connected = vertices.iter().all(|&v| find(&mut parent, v) == root);
    connected && edges.len() == vertices.len() + 1 && vertices.iter().all(|&v| degree[v] >= 2)
}

/// Graph-side contraction. A link identifies its ends. A loop at `v`
/// removes `v`: other loops at `v` become free and links at `v` become
/// loops at their other end.
fn contract_edge(g: &MultiGraph, e: usize) -> MultiGraph {
    let relabel = |x: usize, gone: usize| if x > gone { x - 1 } else { x };
    let mut edges = Vec::new();
    match g.edges[e - 1] {
        Edge::Free => unreachable!("free edges are matroid loops"),
        Edge::Link(a, b) => {
            // merge b into a
            let map = |x: usize| relabel(if x == b { a } else { x }, b);
            for (i, &f) in g.edges.iter().enumerate() {
                if i + 1 == e {
                    continue;
                }
                edges.push(match f {
                    Edge::Free => Edge::Free,
                    Edge::Loop(x) => Edge::Loop(map(x)),
                    Edge::Link(x, y) if map(x) == map(y) => Edge::Loop(map(x)),
                    Edge::Link(x, y) => Edge::Link(map(x), map(y)),
                });
            }
        }
        Edge::Loop(v) => {
            for (i, &f) in g.edges.iter().enumerate() {
                if i + 1 == e {
                    continue;
                }
                edges.push(match f {
                    Edge::Free => Edge::Free,
                    Edge::Loop(x) if x == v => Edge::Free,
                    Edge::Loop(x) => Edge::Loop(relabel(x, v)),
                    Edge::Link(x, y) if x == v => Edge::Loop(relabel(y, v)),
                    Edge::Link(x, y) if y == v => Edge::Loop(relabel(x, v)),
                    Edge::Link(x, y) => Edge::Link(relabel(x, v), relabel(y, v)),
                });
            }
        }
    }
    MultiGraph::new(g.v - 1, edges).unwrap()
}

#[test]
fn circuits_are_bicycles() {
    let graphs = bicircular_graphs(7, 4);
    assert!(graphs.len() > 1000);
    for g in &graphs {
        let m = bicircular_matroid(g).unwrap();
        let expected: Vec<ElementSet> = all_subsets(m.ground())
            .filter(|x| !x.is_empty() && is_bicycle(g, *x))
            .collect();
        let mut got = m.circuits().to_vec();
        got.sort();
        let mut expected = expected;
        expected.sort();
        assert_eq!(got, expected, "{g:?}");
    }
}

#[test]
fn deletion_and_contraction_match_the_graph() {
    for g in bicircular_graphs(6, 4) {
        let m = bicircular_matroid(&g).unwrap();
        for e in 1..=g.num_edges() {
            assert_eq!(m.delete(e).unwrap(), bicircular_matroid(&g.delete_edge(e)).unwrap());
            if g.edges[e - 1] != Edge::Free {
                let c = contract_edge(&g, e);
                assert_eq!(m.contract(e).unwrap(), bicircular_matroid(&c).unwrap(), "{g:?} / {e}");
            }
        }
    }
}

#[test]
fn slot_search_recovers_every_corpus_matroid() {
    for entry in enumerate_bicircular_corpus(7, 4) {
        let g = is_bicircular(&entry.matroid, &mut Budget::unlimited())
            .unwrap()
            .expect("bicircular by construction");
        assert_eq!(bicircular_matroid(&g).unwrap(), entry.matroid);
    }
}

#[test]
fn bicircular_excluded_minors_are_vertically_three_connected() {
    for e in theorem1_list().iter().filter(|e| e.group != Group::II) {
        assert!(e.matroid.is_vertically_k_connected(3).unwrap(), "{}", e.name);
        let sizes = e.matroid.parallel_classes().size_multiset();
        assert!(sizes.iter().all(|&s| s <= 2), "{}", e.name);
    }
}
