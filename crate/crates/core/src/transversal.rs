//! Transversal matroids of set families, and the search for presentations by
//! sets of size at most two.

use crate::matroid::BasisMatroid;
use crate::set::{subsets_of_size, ElementSet};
use crate::{Budget, Error, Result, MAX_ELEMENTS};

/// An ordered family `(N_1, ..., N_r)` of subsets of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    pub n: usize,
    pub sets: Vec<ElementSet>,
}

impl SetFamily {
    pub fn new(n: usize, sets: Vec<ElementSet>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                limit: MAX_ELEMENTS,
            });
        }
        let ground = ElementSet::full(n);
        for (i, s) in sets.iter().enumerate() {
            if !s.is_subset(ground) {
                return Err(Error::Validation(format!(
                    "set {} contains {} outside 1..={n}",
                    i + 1,
                    s.difference(ground).max_element()
                )));
            }
        }
        Ok(Self { n, sets })
    }

    /// Size of a maximum matching of `x` into the family.
    pub fn matching_size(&self, x: ElementSet) -> usize {
        let mut owner: Vec<Option<usize>> = vec![None; self.sets.len()];
        let mut size = 0;
        for e in x.iter() {
            let mut seen = vec![false; self.sets.len()];
            if self.augment(e, &mut owner, &mut seen) {
                size += 1;
            }
        }
        size
    }

    fn augment(&self, e: usize, owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for (j, set) in self.sets.iter().enumerate() {
            if !set.contains(e) || seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none() || self.augment(owner[j].unwrap(), owner, seen) {
                owner[j] = Some(e);
                return true;
            }
        }
        false
    }

    /// Whether some matching saturates `x`.
    pub fn is_partial_transversal(&self, x: ElementSet) -> bool {
        x.len() <= self.sets.len() && self.matching_size(x) == x.len()
    }

    /// The family with `x` removed from every set, empty sets dropped, and the
    /// ground set relabeled to `1..n-1`.
    pub fn delete_element(&self, x: usize) -> Self {
        let sets = self
            .sets
            .iter()
            .map(|s| s.without(x))
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.iter()
                    .map(|e| if e > x { e - 1 } else { e })
                    .collect()
            })
            .collect();
        Self {
            n: self.n - 1,
            sets,
        }
    }
}

/// `M[F]`: bases are the maximum-size partial transversals.
pub fn matroid_of_family(f: &SetFamily) -> BasisMatroid {
    let ground = ElementSet::full(f.n);
    let rank = f.matching_size(ground);
    let bases = subsets_of_size(ground, rank)
        .into_iter()
        .filter(|x| f.is_partial_transversal(*x))
        .collect();
    BasisMatroid::new_unchecked(f.n, rank, bases)
}

/// Searches for a presentation of `m` by `r(m)` sets, each of size one or
/// two. Families are enumerated as non-decreasing tuples over the candidate
/// sets in lexicographic order, so each family is visited once up to
/// reordering.
pub fn width2_presentation_search(
    m: &BasisMatroid,
    budget: &mut Budget,
) -> Result<Option<SetFamily>> {
    let support = m.ground().difference(m.loops());
    let mut candidates = Vec::new();
    for a in support.iter() {
        candidates.push(ElementSet::singleton(a));
        for b in support.iter().filter(|&b| b > a) {
            candidates.push(ElementSet::from_elements([a, b]));
        }
    }
    let mut search = Width2Search {
        m,
        support,
        candidates: &candidates,
        family: SetFamily {
            n: m.n(),
            sets: Vec::with_capacity(m.rank()),
        },
        budget,
    };
    if search.extend(0)? {
        Ok(Some(search.family))
    } else {
        Ok(None)
    }
}

struct Width2Search<'a> {
    m: &'a BasisMatroid,
    support: ElementSet,
    candidates: &'a [ElementSet],
    family: SetFamily,
    budget: &'a mut Budget,
}

impl Width2Search<'_> {
    fn extend(&mut self, from: usize) -> Result<bool> {
        self.budget.tick()?;
        let k = self.family.sets.len();
        let r = self.m.rank();
        if k == r {
            return Ok(matroid_of_family(&self.family) == *self.m);
        }
        for (i, &set) in self.candidates.iter().enumerate().skip(from) {
            self.family.sets.push(set);
            if self.admissible() && self.extend(i)? {
                return Ok(true);
            }
            self.family.sets.pop();
        }
        Ok(false)
    }

    /// Every partial transversal of the partial family must be independent
    /// in `M` (equivalently, no circuit is matchable), and the remaining
    /// sets must be able to cover the rest of the support.
    fn admissible(&self) -> bool {
        let k = self.family.sets.len();
        let covered = self
            .family
            .sets
            .iter()
            .fold(ElementSet::EMPTY, |acc, s| acc.union(*s));
        if self.support.difference(covered).len() > 2 * (self.m.rank() - k) {
            return false;
        }
        !self
            .m
            .circuits()
            .iter()
            .take_while(|c| c.len() <= k)
            .any(|c| c.is_subset(covered) && self.family.is_partial_transversal(*c))
    }
}

/// Searches for a presentation of `m` by `r(m)` sets in which every element
/// lies in at most two sets. Set indices are introduced in order of first
/// use, and each placement must agree with `m` on the independence of every
/// subset of the placed elements.
pub fn degree2_presentation_search(
    m: &BasisMatroid,
    budget: &mut Budget,
) -> Result<Option<SetFamily>> {
    let r = m.rank();
    let mut search = Degree2Search {
        m,
        family: SetFamily {
            n: m.n(),
            sets: vec![ElementSet::EMPTY; r],
        },
        budget,
    };
    if search.place(1, 0)? {
        Ok(Some(search.family))
    } else {
        Ok(None)
    }
}

struct Degree2Search<'a> {
    m: &'a BasisMatroid,
    family: SetFamily,
    budget: &'a mut Budget,
}

impl Degree2Search<'_> {
    fn place(&mut self, e: usize, used: usize) -> Result<bool> {
        if e > self.m.n() {
            return Ok(matroid_of_family(&self.family) == *self.m);
        }
        self.budget.tick()?;
        if self.m.loops().contains(e) {
            return self.place(e + 1, used);
        }
        let r = self.family.sets.len();
        let mut choices: Vec<Vec<usize>> = Vec::new();
        for i in 0..r.min(used + 1) {
            choices.push(vec![i]);
            for j in i + 1..r.min(if i < used { used + 1 } else { used + 2 }) {
                choices.push(vec![i, j]);
            }
        }
        for choice in choices {
            for &i in &choice {
                self.family.sets[i] = self.family.sets[i].with(e);
            }
            let next_used = used.max(choice.iter().max().unwrap() + 1);
            if self.agrees(e) && self.place(e + 1, next_used)? {
                return Ok(true);
            }
            for &i in &choice {
                self.family.sets[i] = self.family.sets[i].without(e);
            }
        }
        Ok(false)
    }

    fn agrees(&self, e: usize) -> bool {
        let before = ElementSet::full(e - 1);
        crate::set::all_subsets(before).all(|x| {
            let x = x.with(e);
            self.family.is_partial_transversal(x) == self.m.is_independent(x)
        })
    }
}
