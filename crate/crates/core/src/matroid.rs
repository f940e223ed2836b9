//! Explicit basis-family matroids and the minor/construction algebra.
//!
//! Ground sets are always `1..=n`. Operations that remove elements relabel
//! the survivors order-preservingly and can report the map back to the
//! original labels.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::bicircular::{Dsu, Edge, MultiGraph};
use crate::set::{all_subsets, subsets_of_size, ElementSet};
use crate::{Error, Result, MAX_ELEMENTS};

/// Hard cap on the ground set for the vertical-separation scan.
pub const SEPARATION_LIMIT: usize = 12;

#[derive(Debug)]
struct Tables {
    /// `rank[X.bits()]` for every subset `X` of the ground set.
    rank: Vec<u8>,
}

pub struct BasisMatroid {
    n: usize,
    rank: usize,
    /// Sorted by bit pattern, deduplicated.
    bases: Vec<ElementSet>,
    tables: OnceLock<Arc<Tables>>,
    circuits: OnceLock<Arc<Vec<ElementSet>>>,
}

/// A vertical separation `(a, b)` of the given order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Separation {
    pub a: ElementSet,
    pub b: ElementSet,
    pub order: usize,
}

/// Non-loop elements partitioned into parallel classes, plus the loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelClasses {
    /// Ordered by least element.
    pub classes: Vec<ElementSet>,
    pub loops: ElementSet,
}

impl ParallelClasses {
    /// Class sizes in non-increasing order.
    pub fn size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

/// Result of a minor operation: the minor and, for each of its elements, the
/// original label (`map[i]` is the origin of element `i + 1`).
#[derive(Debug, Clone)]
pub struct Relabeled {
    pub matroid: BasisMatroid,
    pub map: Vec<usize>,
}

impl Clone for BasisMatroid {
    fn clone(&self) -> Self {
        Self {
            n: self.n,
            rank: self.rank,
            bases: self.bases.clone(),
            tables: self.tables.clone(),
            circuits: self.circuits.clone(),
        }
    }
}

impl PartialEq for BasisMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for BasisMatroid {}

impl Hash for BasisMatroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bases.hash(state);
    }
}

impl fmt::Debug for BasisMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BasisMatroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &self.bases_lex())
            .finish()
    }
}

impl BasisMatroid {
    /// Validated construction from basis element lists over `1..=n`.
    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                limit: MAX_ELEMENTS,
            });
        }
        let mut sets = Vec::with_capacity(bases.len());
        for b in bases {
            for &e in b {
                if e == 0 || e > n {
                    return Err(Error::ElementOutOfRange { element: e, n });
                }
            }
            sets.push(ElementSet::from_elements(b.iter().copied()));
        }
        Self::from_sets(n, sets)
    }

    /// Validated construction from bit-vector bases.
    pub fn from_sets(n: usize, bases: Vec<ElementSet>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                limit: MAX_ELEMENTS,
            });
        }
        let Some(first) = bases.first() else {
            return Err(Error::NoBases);
        };
        let rank = first.len();
        let ground = ElementSet::full(n);
        for b in &bases {
            if !b.is_subset(ground) {
                return Err(Error::ElementOutOfRange {
                    element: b.difference(ground).max_element(),
                    n,
                });
            }
            if b.len() != rank {
                return Err(Error::NonUniformBases {
                    first: rank,
                    other: b.len(),
                });
            }
        }
        let m = Self::new_unchecked(n, rank, bases);
        if let Some((a, b, removed)) = m.exchange_violation() {
            return Err(Error::ExchangeViolation {
                a: a.to_vec(),
                b: b.to_vec(),
                removed,
            });
        }
        Ok(m)
    }

    /// Construction without the exchange check. Callers guarantee the family
    /// is a basis family of rank `rank`.
    pub(crate) fn new_unchecked(n: usize, rank: usize, mut bases: Vec<ElementSet>) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        debug_assert!(bases.iter().all(|b| b.len() == rank));
        bases.sort_unstable();
        bases.dedup();
        Self {
            n,
            rank,
            bases,
            tables: OnceLock::new(),
            circuits: OnceLock::new(),
        }
    }

    /// First `(A, B, a)` in lexicographic scan order for which no
    /// `b ∈ B∖A` makes `(A∖{a})∪{b}` a basis.
    fn exchange_violation(&self) -> Option<(ElementSet, ElementSet, usize)> {
        let mut lex = self.bases.clone();
        lex.sort_by(|x, y| x.lex_cmp(*y));
        for &a_set in &lex {
            for &b_set in &lex {
                if a_set == b_set {
                    continue;
                }
                for a in a_set.difference(b_set).iter() {
                    let base = a_set.without(a);
                    let ok = b_set
                        .difference(a_set)
                        .iter()
                        .any(|b| self.is_basis(base.with(b)));
                    if !ok {
                        return Some((a_set, b_set, a));
                    }
                }
            }
        }
        None
    }

    /// `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Self {
        assert!(r <= n && n <= MAX_ELEMENTS, "U_{{{r},{n}}} out of range");
        Self::new_unchecked(n, r, subsets_of_size(ElementSet::full(n), r))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Bases ordered by bit pattern.
    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    /// Bases as sorted element lists, in lexicographic order.
    pub fn bases_lex(&self) -> Vec<Vec<usize>> {
        let mut lists: Vec<Vec<usize>> = self.bases.iter().map(|b| b.to_vec()).collect();
        lists.sort();
        lists
    }

    pub fn is_basis(&self, x: ElementSet) -> bool {
        self.bases.binary_search(&x).is_ok()
    }

    fn tables(&self) -> &Tables {
        self.tables.get_or_init(|| Arc::new(self.build_tables()))
    }

    fn build_tables(&self) -> Tables {
        let size = 1usize << self.n;
        let mut indep = vec![false; size];
        for b in &self.bases {
            indep[b.bits() as usize] = true;
        }
        // downward closure, supersets are visited first
        for mask in (0..size).rev() {
            if indep[mask] {
                continue;
            }
            let mut missing = !mask & (size - 1);
            while missing != 0 {
                let bit = missing & missing.wrapping_neg();
                if indep[mask | bit] {
                    indep[mask] = true;
                    break;
                }
                missing &= missing - 1;
            }
        }
        let mut rank = vec![0u8; size];
        for mask in 1..size {
            if indep[mask] {
                rank[mask] = mask.count_ones() as u8;
            } else {
                let mut best = 0;
                let mut rest = mask;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    best = best.max(rank[mask ^ bit]);
                    rest &= rest - 1;
                }
                rank[mask] = best;
            }
        }
        Tables { rank }
    }

    /// `max |B ∩ X|` over bases `B`. Elements outside the ground set are
    /// ignored.
    pub fn rank_of(&self, x: ElementSet) -> usize {
        let x = x.intersection(self.ground());
        self.tables().rank[x.bits() as usize] as usize
    }

    pub fn is_independent(&self, x: ElementSet) -> bool {
        x.is_subset(self.ground()) && self.rank_of(x) == x.len()
    }

    pub fn is_circuit(&self, x: ElementSet) -> bool {
        !x.is_empty()
            && x.is_subset(self.ground())
            && self.rank_of(x) + 1 == x.len()
            && x.iter().all(|e| self.is_independent(x.without(e)))
    }

    /// Closed sets of rank `r - 1`.
    pub fn is_hyperplane(&self, x: ElementSet) -> bool {
        if !x.is_subset(self.ground()) || self.rank == 0 {
            return false;
        }
        let rx = self.rank_of(x);
        rx + 1 == self.rank
            && self
                .ground()
                .difference(x)
                .iter()
                .all(|e| self.rank_of(x.with(e)) > rx)
    }

    /// All circuits, ordered by size and then lexicographically.
    pub fn circuits(&self) -> &[ElementSet] {
        self.circuits
            .get_or_init(|| Arc::new(self.compute_circuits()))
            .as_slice()
    }

    fn compute_circuits(&self) -> Vec<ElementSet> {
        let mut out: Vec<ElementSet> = Vec::new();
        let max = (self.rank + 1).min(self.n);
        for size in 1..=max {
            for x in subsets_of_size(self.ground(), size) {
                if self.rank_of(x) + 1 == size && x.iter().all(|e| self.rank_of(x.without(e)) + 1 == size) {
                    out.push(x);
                }
            }
        }
        out
    }

    pub fn loops(&self) -> ElementSet {
        let union = self.bases.iter().fold(ElementSet::EMPTY, |acc, b| acc.union(*b));
        self.ground().difference(union)
    }

    pub fn coloops(&self) -> ElementSet {
        self.bases
            .iter()
            .fold(self.ground(), |acc, b| acc.intersection(*b))
    }

    pub fn dual(&self) -> Self {
        let ground = self.ground();
        let bases = self.bases.iter().map(|b| ground.difference(*b)).collect();
        Self::new_unchecked(self.n, self.n - self.rank, bases)
    }

    /// `M / contract \ delete`, relabeled to `1..=n'` in original order.
    pub fn minor(&self, contract: ElementSet, delete: ElementSet) -> Result<Self> {
        self.minor_with_map(contract, delete).map(|r| r.matroid)
    }

    pub fn minor_with_map(&self, contract: ElementSet, delete: ElementSet) -> Result<Relabeled> {
        self.check_subset(contract)?;
        self.check_subset(delete)?;
        if !contract.is_disjoint(delete) {
            return Err(Error::OverlappingSets);
        }
        let keep = self.ground().difference(contract.union(delete));
        let rc = self.rank_of(contract);
        let new_rank = self.rank_of(keep.union(contract)) - rc;
        let map = keep.to_vec();
        let mut position = vec![0usize; self.n + 1];
        for (i, &e) in map.iter().enumerate() {
            position[e] = i + 1;
        }
        let target = self.rank_of(keep.union(contract));
        let bases = subsets_of_size(keep, new_rank)
            .into_iter()
            .filter(|x| self.rank_of(x.union(contract)) == target)
            .map(|x| x.iter().map(|e| position[e]).collect())
            .collect();
        Ok(Relabeled {
            matroid: Self::new_unchecked(map.len(), new_rank, bases),
            map,
        })
    }

    pub fn delete(&self, e: usize) -> Result<Self> {
        self.minor(ElementSet::EMPTY, ElementSet::singleton(e))
    }

    pub fn contract(&self, e: usize) -> Result<Self> {
        self.minor(ElementSet::singleton(e), ElementSet::EMPTY)
    }

    fn check_subset(&self, x: ElementSet) -> Result<()> {
        if x.is_subset(self.ground()) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x.difference(self.ground()).max_element(),
                n: self.n,
            })
        }
    }

    /// Ground set `1..=n1+n2`, with `other` shifted up by `n1`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        assert!(n <= MAX_ELEMENTS, "direct sum too large");
        let shift = self.n;
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for a in &self.bases {
            for b in &other.bases {
                bases.push(ElementSet::from_bits(a.bits() | (b.bits() << shift)));
            }
        }
        Self::new_unchecked(n, self.rank + other.rank, bases)
    }

    /// Free extension by the new element `n + 1`.
    pub fn free_extend(&self) -> Result<Self> {
        if self.rank == 0 {
            return Err(Error::RankZero);
        }
        if self.n + 1 > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n: self.n + 1,
                limit: MAX_ELEMENTS,
            });
        }
        let e = self.n + 1;
        let mut bases = self.bases.clone();
        for b in &self.bases {
            for x in b.iter() {
                bases.push(b.without(x).with(e));
            }
        }
        Ok(Self::new_unchecked(self.n + 1, self.rank, bases))
    }

    /// Relabel the ground set: element `e` becomes `perm[e - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let bases = self.bases.iter().map(|b| b.map(perm)).collect();
        Self::new_unchecked(self.n, self.rank, bases)
    }

    /// One truncation: free extension followed by contraction of the new
    /// element.
    pub fn truncate(&self) -> Result<Self> {
        let ext = self.free_extend()?;
        ext.contract(ext.n())
    }

    /// Truncation to rank `target`, `1 <= target <= r`.
    pub fn truncate_to(&self, target: usize) -> Result<Self> {
        if target < 1 || target > self.rank {
            return Err(Error::BadTargetRank {
                target,
                rank: self.rank,
            });
        }
        let mut m = self.clone();
        while m.rank > target {
            m = m.truncate()?;
        }
        Ok(m)
    }

    /// Parallel classes of the non-loop elements, and the loops.
    pub fn parallel_classes(&self) -> ParallelClasses {
        let loops = self.loops();
        let mut assigned = loops;
        let mut classes = Vec::new();
        for e in self.ground().difference(loops).iter() {
            if assigned.contains(e) {
                continue;
            }
            let mut class = ElementSet::singleton(e);
            for f in self.ground().difference(assigned).iter() {
                if f > e && self.rank_of(ElementSet::from_elements([e, f])) == 1 {
                    class = class.with(f);
                }
            }
            assigned = assigned.union(class);
            classes.push(class);
        }
        ParallelClasses { classes, loops }
    }

    /// True iff every pair of elements lies in a common circuit.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut dsu = Dsu::new(self.n + 1);
        for c in self.circuits() {
            let first = c.min_element().unwrap();
            for e in c.iter() {
                dsu.union(first, e);
            }
        }
        let root = dsu.find(1);
        (2..=self.n).all(|e| dsu.find(e) == root)
    }

    /// Smallest-order vertical `l`-separation with `l < k`, if any.
    ///
    /// Scans `l = 1..k`, then the smaller side `B` by size and then
    /// lexicographically; on a tie in size `A` keeps element 1.
    pub fn vertical_separation(&self, k: usize) -> Result<Option<Separation>> {
        if self.n > SEPARATION_LIMIT {
            return Err(Error::GroundSetTooLarge {
                n: self.n,
                limit: SEPARATION_LIMIT,
            });
        }
        let ground = self.ground();
        for l in 1..k {
            for size in l..=self.n / 2 {
                for b in subsets_of_size(ground, size) {
                    if 2 * size == self.n && b.contains(1) {
                        continue;
                    }
                    let a = ground.difference(b);
                    let (ra, rb) = (self.rank_of(a), self.rank_of(b));
                    if ra >= l && rb >= l && ra + rb < self.rank + l {
                        return Ok(Some(Separation { a, b, order: l }));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_vertically_k_connected(&self, k: usize) -> Result<bool> {
        Ok(self.vertical_separation(k)?.is_none())
    }

    /// Adds `x` as a basis; `x` must be both a circuit and a hyperplane.
    pub fn relax_circuit_hyperplane(&self, x: ElementSet) -> Result<Self> {
        if !(self.is_circuit(x) && self.is_hyperplane(x)) {
            return Err(Error::NotCircuitHyperplane);
        }
        let mut bases = self.bases.clone();
        bases.push(x);
        Ok(Self::new_unchecked(self.n, self.rank, bases))
    }

    /// Order by `(n, r, bases)`; used only to make collections deterministic.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        (self.n, self.rank, &self.bases).cmp(&(other.n, other.rank, &other.bases))
    }
}

/// Cycle matroid of a multigraph without free edges: bases are the maximal
/// spanning forests.
pub fn cycle_matroid(g: &MultiGraph) -> Result<BasisMatroid> {
    if g.edges.iter().any(|e| matches!(e, Edge::Free)) {
        return Err(Error::HasFreeEdge);
    }
    let m = g.edges.len();
    if m > MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge {
            n: m,
            limit: MAX_ELEMENTS,
        });
    }
    let is_forest = |x: ElementSet| {
        let mut dsu = Dsu::new(g.v + 1);
        x.iter().all(|i| match g.edges[i - 1] {
            Edge::Link(a, b) => dsu.union(a, b),
            _ => false,
        })
    };
    let ground = ElementSet::full(m);
    let mut dsu = Dsu::new(g.v + 1);
    let mut rank = 0;
    for e in &g.edges {
        if let Edge::Link(a, b) = *e {
            if dsu.union(a, b) {
                rank += 1;
            }
        }
    }
    let bases = subsets_of_size(ground, rank)
        .into_iter()
        .filter(|x| is_forest(*x))
        .collect();
    Ok(BasisMatroid::new_unchecked(m, rank, bases))
}

/// Every subset of the ground set of `m`, for exhaustive property checks.
pub fn power_set(m: &BasisMatroid) -> impl Iterator<Item = ElementSet> {
    all_subsets(m.ground())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> ElementSet {
        ElementSet::from_elements(e.iter().copied())
    }

    fn k4() -> MultiGraph {
        MultiGraph::new(
            4,
            vec![
                Edge::Link(1, 2),
                Edge::Link(1, 3),
                Edge::Link(1, 4),
                Edge::Link(2, 3),
                Edge::Link(2, 4),
                Edge::Link(3, 4),
            ],
        )
        .unwrap()
    }

    /// Independent scan of the exchange axiom over all triples.
    fn exchange_holds(bases: &[Vec<usize>]) -> bool {
        let sets: Vec<ElementSet> = bases.iter().map(|b| set(b)).collect();
        sets.iter().all(|&a| {
            sets.iter().all(|&b| {
                a.difference(b).iter().all(|x| {
                    b.difference(a)
                        .iter()
                        .any(|y| sets.contains(&a.without(x).with(y)))
                })
            })
        })
    }

    #[test]
    fn from_bases_uniform() {
        let m = BasisMatroid::from_bases(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(m, BasisMatroid::uniform(2, 3));
        let m = BasisMatroid::from_bases(2, &[vec![1], vec![2]]).unwrap();
        assert_eq!(m, BasisMatroid::uniform(1, 2));
    }

    #[test]
    fn from_bases_two_bases_sharing_an_element_is_valid() {
        // {1,2},{2,3}: 2 is a coloop and 1,3 are parallel.
        let family = [vec![1, 2], vec![2, 3]];
        assert!(exchange_holds(&family));
        let m = BasisMatroid::from_bases(3, &family).unwrap();
        assert_eq!(m.coloops(), set(&[2]));
        assert_eq!(m.parallel_classes().classes, vec![set(&[1, 3]), set(&[2])]);
    }

    #[test]
    fn from_bases_reports_first_violating_triple() {
        let family = [vec![1, 2], vec![3, 4]];
        assert!(!exchange_holds(&family));
        assert_eq!(
            BasisMatroid::from_bases(4, &family),
            Err(Error::ExchangeViolation {
                a: vec![1, 2],
                b: vec![3, 4],
                removed: 1
            })
        );
    }

    #[test]
    fn from_bases_errors() {
        assert_eq!(
            BasisMatroid::from_bases(3, &[vec![1, 2], vec![3]]),
            Err(Error::NonUniformBases { first: 2, other: 1 })
        );
        assert_eq!(
            BasisMatroid::from_bases(2, &[vec![1, 3]]),
            Err(Error::ElementOutOfRange { element: 3, n: 2 })
        );
        assert_eq!(BasisMatroid::from_bases(2, &[]), Err(Error::NoBases));
    }

    #[test]
    fn rank_of_examples() {
        let u23 = BasisMatroid::uniform(2, 3);
        assert_eq!(u23.rank_of(set(&[1])), 1);
        assert_eq!(u23.rank_of(ElementSet::EMPTY), 0);
        assert_eq!(u23.rank_of(set(&[1, 2, 3])), 2);
    }

    #[test]
    fn circuits_examples() {
        assert_eq!(BasisMatroid::uniform(2, 3).circuits(), &[set(&[1, 2, 3])]);
        let u12 = BasisMatroid::uniform(1, 2);
        assert_eq!(u12.direct_sum(&u12).circuits(), &[set(&[1, 2]), set(&[3, 4])]);
        let k4 = cycle_matroid(&k4()).unwrap();
        let sizes: Vec<usize> = k4.circuits().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![3, 3, 3, 3, 4, 4, 4]);
    }

    #[test]
    fn dual_and_minor_examples() {
        assert_eq!(BasisMatroid::uniform(2, 5).dual(), BasisMatroid::uniform(3, 5));
        let u35 = BasisMatroid::uniform(3, 5);
        assert_eq!(u35.minor(ElementSet::EMPTY, set(&[5])).unwrap(), BasisMatroid::uniform(3, 4));
        assert_eq!(u35.minor(set(&[1]), ElementSet::EMPTY).unwrap(), BasisMatroid::uniform(2, 4));
        assert_eq!(u35.minor(set(&[1]), set(&[1])), Err(Error::OverlappingSets));
    }

    #[test]
    fn minor_map_is_order_preserving() {
        let r = BasisMatroid::uniform(3, 6)
            .minor_with_map(set(&[2]), set(&[5]))
            .unwrap();
        assert_eq!(r.map, vec![1, 3, 4, 6]);
        assert_eq!(r.matroid, BasisMatroid::uniform(2, 4));
    }

    #[test]
    fn contracting_a_loop_keeps_rank() {
        let m = BasisMatroid::from_bases(3, &[vec![1], vec![2]]).unwrap();
        let c = m.minor(set(&[3]), ElementSet::EMPTY).unwrap();
        assert_eq!(c, BasisMatroid::uniform(1, 2));
    }

    #[test]
    fn direct_sum_examples() {
        let u12 = BasisMatroid::uniform(1, 2);
        let s = u12.direct_sum(&u12);
        assert_eq!((s.rank(), s.n(), s.num_bases()), (2, 4, 4));
        let u23 = BasisMatroid::uniform(2, 3);
        let s = u23.direct_sum(&u23);
        assert_eq!((s.rank(), s.n(), s.num_bases()), (4, 6, 9));
        let s = u12.direct_sum(&BasisMatroid::uniform(3, 5));
        assert_eq!((s.rank(), s.n(), s.num_bases()), (4, 7, 20));
    }

    #[test]
    fn free_extension_examples() {
        assert_eq!(
            BasisMatroid::uniform(2, 3).free_extend().unwrap(),
            BasisMatroid::uniform(2, 4)
        );
        assert_eq!(
            BasisMatroid::uniform(1, 1).free_extend().unwrap(),
            BasisMatroid::uniform(1, 2)
        );
        assert_eq!(BasisMatroid::uniform(0, 2).free_extend(), Err(Error::RankZero));
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(
            BasisMatroid::uniform(2, 3).truncate_to(1).unwrap(),
            BasisMatroid::uniform(1, 3)
        );
        let u12 = BasisMatroid::uniform(1, 2);
        let p = u12.direct_sum(&u12);
        assert_eq!(p.truncate_to(2).unwrap(), p);
        let m = p.direct_sum(&BasisMatroid::uniform(3, 3)).truncate_to(3).unwrap();
        assert_eq!((m.rank(), m.n(), m.num_bases()), (3, 7, 25));
        assert_eq!(p.truncate_to(3), Err(Error::BadTargetRank { target: 3, rank: 2 }));
        assert_eq!(p.truncate_to(0), Err(Error::BadTargetRank { target: 0, rank: 2 }));
    }

    #[test]
    fn truncation_keeps_independent_t_sets() {
        let u12 = BasisMatroid::uniform(1, 2);
        let m = u12.direct_sum(&BasisMatroid::uniform(3, 5)).direct_sum(&u12);
        for t in 1..=m.rank() {
            let tr = m.truncate_to(t).unwrap();
            let expected: Vec<ElementSet> = subsets_of_size(m.ground(), t)
                .into_iter()
                .filter(|x| m.is_independent(*x))
                .collect();
            let mut got = tr.bases().to_vec();
            got.sort_by(|a, b| a.lex_cmp(*b));
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn parallel_classes_examples() {
        let u37 = BasisMatroid::uniform(3, 7);
        assert_eq!(u37.parallel_classes().size_multiset(), vec![1; 7]);
        let m = BasisMatroid::from_bases(3, &[vec![1], vec![2]]).unwrap();
        let pc = m.parallel_classes();
        assert_eq!(pc.loops, set(&[3]));
        assert_eq!(pc.classes, vec![set(&[1, 2])]);
    }

    #[test]
    fn connectivity_examples() {
        let u12 = BasisMatroid::uniform(1, 2);
        assert!(!u12.direct_sum(&u12).is_connected());
        assert!(BasisMatroid::uniform(3, 7).is_connected());
        assert!(BasisMatroid::uniform(1, 1).is_connected());
    }

    #[test]
    fn vertical_connectivity_examples() {
        assert!(BasisMatroid::uniform(3, 7).is_vertically_k_connected(3).unwrap());
        let u12 = BasisMatroid::uniform(1, 2);
        let d = u12.direct_sum(&u12);
        let sep = d.vertical_separation(2).unwrap().unwrap();
        assert_eq!(sep.order, 1);
        assert_eq!(sep, Separation { a: set(&[1, 2]), b: set(&[3, 4]), order: 1 });
        let big = BasisMatroid::uniform(2, 13);
        assert_eq!(
            big.vertical_separation(3),
            Err(Error::GroundSetTooLarge { n: 13, limit: 12 })
        );
    }

    #[test]
    fn cycle_matroid_examples() {
        let k4 = cycle_matroid(&k4()).unwrap();
        assert_eq!((k4.rank(), k4.n(), k4.num_bases()), (3, 6, 16));
        let tri = MultiGraph::new(3, vec![Edge::Link(1, 2), Edge::Link(2, 3), Edge::Link(1, 3)]).unwrap();
        assert_eq!(cycle_matroid(&tri).unwrap(), BasisMatroid::uniform(2, 3));
        let lp = MultiGraph::new(1, vec![Edge::Loop(1)]).unwrap();
        let m = cycle_matroid(&lp).unwrap();
        assert_eq!((m.rank(), m.n(), m.loops()), (0, 1, set(&[1])));
        let fr = MultiGraph::new(1, vec![Edge::Free]).unwrap();
        assert_eq!(cycle_matroid(&fr), Err(Error::HasFreeEdge));
    }

    #[test]
    fn relaxation_examples() {
        let k4 = cycle_matroid(&k4()).unwrap();
        // rim triangle on vertices 1,2,3: edges 12, 13, 23
        let rim = set(&[1, 2, 4]);
        let whirl = k4.relax_circuit_hyperplane(rim).unwrap();
        assert_eq!(whirl.num_bases(), 17);
        assert_ne!(whirl, k4);
        let u23 = BasisMatroid::uniform(2, 3);
        for x in subsets_of_size(u23.ground(), 2) {
            assert_eq!(u23.relax_circuit_hyperplane(x), Err(Error::NotCircuitHyperplane));
        }
    }
}
