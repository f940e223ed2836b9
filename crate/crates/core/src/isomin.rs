//! Isomorphism testing and minor-containment search.

use crate::matroid::BasisMatroid;
use crate::set::{all_subsets, subsets_of_size, ElementSet};
use crate::{Budget, Result};

/// Isomorphism-invariant fingerprint of a matroid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    pub n: usize,
    pub rank: usize,
    pub num_bases: usize,
    /// Circuit sizes, sorted.
    pub circuit_sizes: Vec<usize>,
    /// Per-element circuit-size incidence vectors, sorted.
    pub element_vectors: Vec<Vec<usize>>,
    /// Parallel class sizes, non-increasing.
    pub parallel_sizes: Vec<usize>,
    pub loops: usize,
    pub coloops: usize,
}

pub fn invariant_profile(m: &BasisMatroid) -> Profile {
    let mut element_vectors = element_vectors(m);
    element_vectors.sort();
    Profile {
        n: m.n(),
        rank: m.rank(),
        num_bases: m.num_bases(),
        circuit_sizes: m.circuits().iter().map(|c| c.len()).collect(),
        element_vectors,
        parallel_sizes: m.parallel_classes().size_multiset(),
        loops: m.loops().len(),
        coloops: m.coloops().len(),
    }
}

/// `v[e - 1][s]` = number of circuits of size `s` containing `e`.
fn element_vectors(m: &BasisMatroid) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0usize; m.rank() + 2]; m.n()];
    for c in m.circuits() {
        for e in c.iter() {
            out[e - 1][c.len()] += 1;
        }
    }
    out
}

/// Certificate that `minor(M, contract, delete)`, relabeled by `iso`, is the
/// named target matroid. `iso[i]` is the target element matched to element
/// `i + 1` of the minor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub target_name: String,
    pub contract: ElementSet,
    pub delete: ElementSet,
    pub iso: Vec<usize>,
}

impl MinorWitness {
    /// Recomputes the minor and checks it maps onto `target` exactly.
    pub fn replays(&self, m: &BasisMatroid, target: &BasisMatroid) -> bool {
        let Ok(minor) = m.minor(self.contract, self.delete) else {
            return false;
        };
        if minor.n() != target.n() || self.iso.len() != minor.n() {
            return false;
        }
        let mut seen = vec![false; target.n() + 1];
        for &t in &self.iso {
            if t == 0 || t > target.n() || std::mem::replace(&mut seen[t], true) {
                return false;
            }
        }
        minor.relabel(&self.iso) == *target
    }
}

/// Lexicographically least basis-preserving bijection from `a` to `b`
/// (`map[e - 1]` is the image of `e`), if one exists.
pub fn is_isomorphic(a: &BasisMatroid, b: &BasisMatroid) -> Option<Vec<usize>> {
    find_isomorphism(a, b, &mut Budget::unlimited()).expect("unlimited budget")
}

/// Budgeted form of [`is_isomorphic`].
pub fn find_isomorphism(
    a: &BasisMatroid,
    b: &BasisMatroid,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    if a.n() != b.n() || a.rank() != b.rank() || a.num_bases() != b.num_bases() {
        return Ok(None);
    }
    let va = element_vectors(a);
    let vb = element_vectors(b);
    let mut sa = va.clone();
    let mut sb = vb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }
    // candidate images per element: same incidence vector, increasing order
    let candidates: Vec<Vec<usize>> = va
        .iter()
        .map(|v| (1..=b.n()).filter(|&f| vb[f - 1] == *v).collect())
        .collect();
    let mut indep: Vec<ElementSet> = all_subsets(a.ground())
        .filter(|x| a.is_independent(*x))
        .collect();
    indep.sort_by_key(|x| x.max_element());
    let prefix_end: Vec<usize> = (0..=a.n() + 1)
        .map(|e| indep.partition_point(|x| x.max_element() < e))
        .collect();
    let mut search = IsoSearch {
        a,
        b,
        candidates: &candidates,
        indep: &indep,
        prefix_end: &prefix_end,
        map: vec![0; a.n()],
        used: vec![false; b.n() + 1],
        budget,
    };
    if search.extend(1)? {
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

struct IsoSearch<'a> {
    a: &'a BasisMatroid,
    b: &'a BasisMatroid,
    candidates: &'a [Vec<usize>],
    indep: &'a [ElementSet],
    prefix_end: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    budget: &'a mut Budget,
}

impl IsoSearch<'_> {
    fn extend(&mut self, e: usize) -> Result<bool> {
        if e > self.a.n() {
            return Ok(true);
        }
        self.budget.tick()?;
        for &f in &self.candidates[e - 1] {
            if self.used[f] || !self.consistent(e, f) {
                continue;
            }
            self.map[e - 1] = f;
            self.used[f] = true;
            if self.extend(e + 1)? {
                return Ok(true);
            }
            self.used[f] = false;
        }
        self.map[e - 1] = 0;
        Ok(false)
    }

    /// Independence of `S + e` must match that of its image, for every
    /// independent `S` among the elements already mapped.
    fn consistent(&self, e: usize, f: usize) -> bool {
        self.indep[..self.prefix_end[e]].iter().all(|&s| {
            let image = s.map(&self.map).with(f);
            self.a.is_independent(s.with(e)) == self.b.is_independent(image)
        })
    }
}

/// First minor of `m` isomorphic to `target`, scanning independent
/// contraction sets and then deletion sets in lexicographic order.
pub fn has_minor_iso(
    m: &BasisMatroid,
    target: &BasisMatroid,
    target_name: &str,
    budget: &mut Budget,
) -> Result<Option<MinorWitness>> {
    if target.n() > m.n()
        || target.rank() > m.rank()
        || target.n() - target.rank() > m.n() - m.rank()
    {
        return Ok(None);
    }
    let c = m.rank() - target.rank();
    let d = m.n() - c - target.n();
    let ground = m.ground();
    for contract in subsets_of_size(ground, c) {
        if !m.is_independent(contract) {
            continue;
        }
        for delete in subsets_of_size(ground.difference(contract), d) {
            budget.tick()?;
            // the remaining elements must still span
            if m.rank_of(ground.difference(delete)) != m.rank() {
                continue;
            }
            let minor = m.minor(contract, delete)?;
            if minor.num_bases() != target.num_bases() {
                continue;
            }
            if let Some(iso) = find_isomorphism(&minor, target, budget)? {
                return Ok(Some(MinorWitness {
                    target_name: target_name.to_string(),
                    contract,
                    delete,
                    iso,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reversed(m: &BasisMatroid) -> BasisMatroid {
        let perm: Vec<usize> = (1..=m.n()).rev().collect();
        m.relabel(&perm)
    }

    #[test]
    fn relabeled_uniform_is_isomorphic() {
        let u = BasisMatroid::uniform(2, 4);
        let iso = is_isomorphic(&u, &reversed(&u)).unwrap();
        assert_eq!(iso, vec![1, 2, 3, 4]);
    }

    #[test]
    fn isomorphism_is_lexicographically_least() {
        // 1 is a coloop and {2,3} a parallel pair; the image puts the coloop last
        let a = BasisMatroid::from_bases(3, &[vec![1, 2], vec![1, 3]]).unwrap();
        let b = BasisMatroid::from_bases(3, &[vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(is_isomorphic(&a, &b), Some(vec![3, 1, 2]));
        assert!(a.relabel(&[3, 1, 2]) == b);
    }

    #[test]
    fn loop_position_and_rank() {
        let a = BasisMatroid::from_bases(3, &[vec![1], vec![2]]).unwrap();
        let b = BasisMatroid::from_bases(3, &[vec![1], vec![3]]).unwrap();
        assert!(is_isomorphic(&a, &b).is_some());
        let c = BasisMatroid::from_bases(3, &[vec![1, 2], vec![1, 3]]).unwrap();
        assert!(is_isomorphic(&a, &c).is_none());
    }

    #[test]
    fn profile_invariant_under_relabel() {
        let m = BasisMatroid::uniform(1, 2).direct_sum(&BasisMatroid::uniform(2, 4));
        assert_eq!(invariant_profile(&m), invariant_profile(&reversed(&m)));
    }

    #[test]
    fn uniform_minor_witness() {
        let m = BasisMatroid::uniform(4, 7);
        let t = BasisMatroid::uniform(3, 6);
        let w = has_minor_iso(&m, &t, "U36", &mut Budget::unlimited()).unwrap().unwrap();
        assert_eq!(w.contract.len(), 1);
        assert!(w.delete.is_empty());
        assert!(w.replays(&m, &t));
    }

    #[test]
    fn too_small_has_no_minor() {
        let m = BasisMatroid::uniform(3, 6);
        let t = BasisMatroid::uniform(3, 7);
        assert_eq!(has_minor_iso(&m, &t, "U37", &mut Budget::unlimited()), Ok(None));
    }

    #[test]
    fn witness_replay_rejects_bad_maps() {
        let m = BasisMatroid::uniform(2, 3);
        let w = MinorWitness {
            target_name: "x".into(),
            contract: ElementSet::EMPTY,
            delete: ElementSet::EMPTY,
            iso: vec![1, 1, 2],
        };
        assert!(!w.replays(&m, &m));
    }
}
