//! Bicircular matroids of multigraphs with links, loops and free edges, and
//! the exhaustive bicircularity decision.

use crate::matroid::BasisMatroid;
use crate::set::{subsets_of_size, ElementSet};
use crate::{Budget, Error, Result, MAX_ELEMENTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    /// Two distinct endpoints.
    Link(usize, usize),
    Loop(usize),
    /// Incident to no vertex; a loop of the matroid.
    Free,
}

/// Multigraph on vertices `1..=v`. Edge `i` of the matroid is `edges[i - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    pub v: usize,
    pub edges: Vec<Edge>,
}

impl MultiGraph {
    pub fn new(v: usize, edges: Vec<Edge>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            let ok = match *e {
                Edge::Link(a, b) => a != b && (1..=v).contains(&a) && (1..=v).contains(&b),
                Edge::Loop(a) => (1..=v).contains(&a),
                Edge::Free => true,
            };
            if !ok {
                return Err(Error::Validation(format!(
                    "edge {} ({e:?}) is not a valid edge on {v} vertices",
                    i + 1
                )));
            }
        }
        Ok(Self { v, edges })
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// The graph with edge `e` (1-based) removed; later edges shift down.
    pub fn delete_edge(&self, e: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(e - 1);
        Self { v: self.v, edges }
    }

    /// Whether the edges in `x` form a bicircular-independent set: no free
    /// edge, and no component with more edges than vertices.
    pub fn is_independent(&self, x: ElementSet) -> bool {
        let mut dsu = Dsu::new(self.v + 1);
        x.iter().all(|i| dsu.add_edge(self.edges[i - 1]))
    }

    /// Rank of the bicircular matroid: over every component, vertices minus
    /// one, plus one if it contains a cycle.
    pub fn bicircular_rank(&self) -> usize {
        let mut dsu = Dsu::new(self.v + 1);
        for &e in &self.edges {
            dsu.add_edge(e);
        }
        let mut rank = 0;
        for vtx in 1..=self.v {
            if dsu.find(vtx) == vtx {
                rank += dsu.size[vtx] - 1 + usize::from(dsu.cyclic[vtx]);
            }
        }
        rank
    }
}

/// Union-find over vertices `0..n`, tracking per-component size and whether
/// the component already holds a cycle.
#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    cyclic: Vec<bool>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            cyclic: vec![false; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.cyclic[big] |= self.cyclic[small];
        true
    }

    /// Adds an edge under the bicircular rule; false if this creates a
    /// component with two cycles (or the edge is free).
    pub(crate) fn add_edge(&mut self, e: Edge) -> bool {
        match e {
            Edge::Free => false,
            Edge::Loop(a) => {
                let r = self.find(a);
                if self.cyclic[r] {
                    false
                } else {
                    self.cyclic[r] = true;
                    true
                }
            }
            Edge::Link(a, b) => {
                let (ra, rb) = (self.find(a), self.find(b));
                if ra == rb {
                    if self.cyclic[ra] {
                        return false;
                    }
                    self.cyclic[ra] = true;
                    true
                } else if self.cyclic[ra] && self.cyclic[rb] {
                    false
                } else {
                    self.union(a, b)
                }
            }
        }
    }
}

/// `B(G)`: bases are the maximum-size bicircular-independent edge sets.
pub fn bicircular_matroid(g: &MultiGraph) -> Result<BasisMatroid> {
    let m = g.edges.len();
    if m > MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            n: m,
            limit: MAX_ELEMENTS,
        });
    }
    let rank = g.bicircular_rank();
    let bases = subsets_of_size(ElementSet::full(m), rank)
        .into_iter()
        .filter(|x| g.is_independent(*x))
        .collect();
    Ok(BasisMatroid::new_unchecked(m, rank, bases))
}

/// Searches for a multigraph `G` on `r(M)` vertices with `B(G) = M` exactly.
///
/// Elements are placed in order on slots (free, loops by vertex, links in
/// lexicographic order). Vertices are introduced in order of first use, and
/// every partial placement must agree with `M` on independence of all
/// subsets of the placed elements. `None` proves `M` is not bicircular,
/// since a rank-`r` bicircular matroid always fits an `r`-vertex simplex.
pub fn is_bicircular(m: &BasisMatroid, budget: &mut Budget) -> Result<Option<MultiGraph>> {
    let r = m.rank();
    let n = m.n();
    // Independent sets of M grouped by their largest element, so the sets
    // inside the prefix 1..e-1 form a prefix of this list.
    let mut indep: Vec<ElementSet> = crate::set::all_subsets(m.ground())
        .filter(|x| m.is_independent(*x))
        .collect();
    indep.sort_by_key(|x| x.max_element());
    let prefix_end: Vec<usize> = (0..=n + 1)
        .map(|e| indep.partition_point(|x| x.max_element() < e))
        .collect();
    let loops = m.loops();
    let mut search = SlotSearch {
        m,
        r,
        indep: &indep,
        prefix_end: &prefix_end,
        loops,
        edges: Vec::with_capacity(n),
        budget,
    };
    if search.place(1, 0)? {
        let g = MultiGraph {
            v: r,
            edges: search.edges,
        };
        debug_assert_eq!(bicircular_matroid(&g).ok().as_ref(), Some(m));
        Ok(Some(g))
    } else {
        Ok(None)
    }
}

struct SlotSearch<'a> {
    m: &'a BasisMatroid,
    r: usize,
    indep: &'a [ElementSet],
    prefix_end: &'a [usize],
    loops: ElementSet,
    edges: Vec<Edge>,
    budget: &'a mut Budget,
}

impl SlotSearch<'_> {
    /// Places element `e` given that vertices `1..=used` are in use.
    fn place(&mut self, e: usize, used: usize) -> Result<bool> {
        if e > self.m.n() {
            return Ok(true);
        }
        self.budget.tick()?;
        if self.loops.contains(e) {
            self.edges.push(Edge::Free);
            if self.place(e + 1, used)? {
                return Ok(true);
            }
            self.edges.pop();
            return Ok(false);
        }
        for slot in candidate_slots(used, self.r) {
            if !self.consistent(e, slot) {
                continue;
            }
            let now_used = match slot {
                Edge::Loop(a) => used.max(a),
                Edge::Link(a, b) => used.max(a).max(b),
                Edge::Free => used,
            };
            self.edges.push(slot);
            if self.place(e + 1, now_used)? {
                return Ok(true);
            }
            self.edges.pop();
        }
        Ok(false)
    }

    /// For every independent `S` among elements before `e`, `S + e` must be
    /// independent in the partial graph exactly when it is in `M`.
    fn consistent(&self, e: usize, slot: Edge) -> bool {
        for &s in &self.indep[..self.prefix_end[e]] {
            let in_m = self.m.is_independent(s.with(e));
            let mut dsu = Dsu::new(self.r + 1);
            let mut ok = s.iter().all(|i| dsu.add_edge(self.edges[i - 1]));
            debug_assert!(ok);
            ok = ok && dsu.add_edge(slot);
            if ok != in_m {
                return false;
            }
        }
        true
    }
}

/// Non-free slots in scan order, restricted so new vertices appear in order.
fn candidate_slots(used: usize, r: usize) -> Vec<Edge> {
    let top = (used + 1).min(r);
    let mut slots: Vec<Edge> = (1..=top).map(Edge::Loop).collect();
    for a in 1..=top {
        let last = if a <= used { used + 1 } else { used + 2 };
        for b in a + 1..=last.min(r) {
            slots.push(Edge::Link(a, b));
        }
    }
    slots
}

/// Size of a smallest circuit.
pub fn girth(m: &BasisMatroid) -> Result<usize> {
    m.circuits().first().map(|c| c.len()).ok_or(Error::NoCircuit)
}

/// Necessary condition for bicircularity when every circuit has more than
/// `k = girth - 1 >= 3` elements: `|E| <= r(r-1)/(k-2)`.
pub fn check_size_bound(m: &BasisMatroid) -> Result<bool> {
    let g = girth(m)?;
    if g < 4 {
        return Err(Error::GirthTooSmall(g));
    }
    let k = g - 1;
    let r = m.rank();
    Ok(m.n() * (k - 2) <= r * r.saturating_sub(1))
}
