//! Lattice path matroids: bounding-path regions, standard interval
//! presentations, single-element deletion on presentations, and the
//! excluded-minor membership test.

use std::fmt;

use crate::catalog;
use crate::isomin::{has_minor_iso, MinorWitness};
use crate::matroid::BasisMatroid;
use crate::set::ElementSet;
use crate::transversal::{matroid_of_family, SetFamily};
use crate::{Budget, Config, Error, Result, MAX_ELEMENTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

impl Step {
    fn flip(self) -> Self {
        match self {
            Step::N => Step::E,
            Step::E => Step::N,
        }
    }
}

/// Region between a lower path `p` and an upper path `q`, both running from
/// `(0,0)` to `(m,r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePathPresentation {
    pub m: usize,
    pub r: usize,
    pub p: Vec<Step>,
    pub q: Vec<Step>,
}

fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .map(|c| match c {
            'N' | 'n' => Ok(Step::N),
            'E' | 'e' => Ok(Step::E),
            other => Err(Error::InvalidPresentation(format!("bad step {other:?}"))),
        })
        .collect()
}

fn steps_to_string(steps: &[Step]) -> String {
    steps
        .iter()
        .map(|s| if *s == Step::N { 'N' } else { 'E' })
        .collect()
}

/// 1-based positions of the North steps.
fn north_positions(path: &[Step]) -> Vec<usize> {
    path.iter()
        .enumerate()
        .filter(|(_, s)| **s == Step::N)
        .map(|(i, _)| i + 1)
        .collect()
}

impl LatticePathPresentation {
    pub fn new(m: usize, r: usize, p: Vec<Step>, q: Vec<Step>) -> Result<Self> {
        let n = m + r;
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                limit: MAX_ELEMENTS,
            });
        }
        for (name, path) in [("P", &p), ("Q", &q)] {
            let norths = path.iter().filter(|s| **s == Step::N).count();
            if path.len() != n || norths != r {
                return Err(Error::InvalidPresentation(format!(
                    "{name} must have {r} North and {m} East steps"
                )));
            }
        }
        let (mut hp, mut hq) = (0usize, 0usize);
        for t in 0..n {
            hp += usize::from(p[t] == Step::N);
            hq += usize::from(q[t] == Step::N);
            if hp > hq {
                return Err(Error::InvalidPresentation(format!(
                    "P rises above Q after step {}",
                    t + 1
                )));
            }
        }
        Ok(Self { m, r, p, q })
    }

    /// From step strings such as `"EEENN"`.
    pub fn from_strings(p: &str, q: &str) -> Result<Self> {
        let p = parse_steps(p)?;
        let q = parse_steps(q)?;
        let r = p.iter().filter(|s| **s == Step::N).count();
        let m = p.len().saturating_sub(r);
        Self::new(m, r, p, q)
    }

    /// The `m × r` rectangle, which presents `U_{r,m+r}`.
    pub fn full_grid(m: usize, r: usize) -> Self {
        let p = [vec![Step::E; m], vec![Step::N; r]].concat();
        let q = [vec![Step::N; r], vec![Step::E; m]].concat();
        Self::new(m, r, p, q).expect("grid is valid")
    }

    pub fn n(&self) -> usize {
        self.m + self.r
    }

    pub fn p_string(&self) -> String {
        steps_to_string(&self.p)
    }

    pub fn q_string(&self) -> String {
        steps_to_string(&self.q)
    }

    /// Reflection across `y = x`; presents the dual.
    pub fn reflect(&self) -> Self {
        Self {
            m: self.r,
            r: self.m,
            p: self.q.iter().map(|s| s.flip()).collect(),
            q: self.p.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Rotation by 180 degrees, `(Q^σ, P^σ)`; presents the same matroid
    /// with the ground set reversed.
    pub fn rotate(&self) -> Self {
        Self {
            m: self.m,
            r: self.r,
            p: self.q.iter().rev().copied().collect(),
            q: self.p.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for LatticePathPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P={} Q={}", self.p_string(), self.q_string())
    }
}

/// Interval family `([l_1,u_1], ..., [l_r,u_r])` over `1..=n` with both
/// endpoint sequences strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardPresentation {
    pub n: usize,
    pub intervals: Vec<(usize, usize)>,
}

impl StandardPresentation {
    pub fn new(n: usize, intervals: Vec<(usize, usize)>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge {
                n,
                limit: MAX_ELEMENTS,
            });
        }
        for (i, &(l, u)) in intervals.iter().enumerate() {
            if l < 1 || u > n || l > u {
                return Err(Error::Validation(format!(
                    "interval {} = [{l},{u}] is not inside 1..={n}",
                    i + 1
                )));
            }
            if i > 0 {
                let (pl, pu) = intervals[i - 1];
                if pl >= l || pu >= u {
                    return Err(Error::Validation(format!(
                        "endpoints of intervals {} and {} do not form chains",
                        i,
                        i + 1
                    )));
                }
            }
        }
        Ok(Self { n, intervals })
    }

    pub fn rank(&self) -> usize {
        self.intervals.len()
    }

    pub fn to_family(&self) -> SetFamily {
        SetFamily {
            n: self.n,
            sets: self
                .intervals
                .iter()
                .map(|&(l, u)| (l..=u).collect())
                .collect(),
        }
    }

    /// The region whose upper path rises at the lower endpoints and whose
    /// lower path rises at the upper endpoints.
    pub fn to_lattice_path(&self) -> LatticePathPresentation {
        let r = self.rank();
        let mut p = vec![Step::E; self.n];
        let mut q = vec![Step::E; self.n];
        for &(l, u) in &self.intervals {
            q[l - 1] = Step::N;
            p[u - 1] = Step::N;
        }
        LatticePathPresentation::new(self.n - r, r, p, q).expect("standard presentation is a region")
    }

    /// Elements lying in no interval.
    pub fn uncovered(&self) -> ElementSet {
        let covered = self
            .intervals
            .iter()
            .fold(ElementSet::EMPTY, |acc, &(l, u)| acc.union((l..=u).collect()));
        ElementSet::full(self.n).difference(covered)
    }
}

impl fmt::Display for StandardPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (l, u)) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{l},{u}]")?;
        }
        write!(f, ")")
    }
}

/// Bases are the North-step label sets of the paths inside the region.
pub fn matroid_of_lpm(l: &LatticePathPresentation) -> BasisMatroid {
    let lo = heights(&l.p);
    let hi = heights(&l.q);
    let mut bases = Vec::new();
    collect_paths(&lo, &hi, l.r, 0, 0, ElementSet::EMPTY, &mut bases);
    BasisMatroid::new_unchecked(l.n(), l.r, bases)
}

/// `h[t]` = number of North steps among the first `t` steps.
fn heights(path: &[Step]) -> Vec<usize> {
    let mut h = Vec::with_capacity(path.len() + 1);
    h.push(0);
    for s in path {
        h.push(h.last().unwrap() + usize::from(*s == Step::N));
    }
    h
}

fn collect_paths(
    lo: &[usize],
    hi: &[usize],
    r: usize,
    t: usize,
    h: usize,
    norths: ElementSet,
    out: &mut Vec<ElementSet>,
) {
    if t + 1 == lo.len() {
        if h == r {
            out.push(norths);
        }
        return;
    }
    if h < hi[t + 1] {
        collect_paths(lo, hi, r, t + 1, h + 1, norths.with(t + 1), out);
    }
    if h >= lo[t + 1] {
        collect_paths(lo, hi, r, t + 1, h, norths, out);
    }
}

/// `N_i` = step indices that can be the `i`-th North step of a path in the
/// region.
pub fn to_standard_presentation(l: &LatticePathPresentation) -> StandardPresentation {
    let lower = north_positions(&l.q);
    let upper = north_positions(&l.p);
    StandardPresentation {
        n: l.n(),
        intervals: lower.into_iter().zip(upper).collect(),
    }
}

pub fn matroid_of_standard(s: &StandardPresentation) -> BasisMatroid {
    matroid_of_family(&s.to_family())
}

/// Number of monotone paths inside the region.
pub fn count_paths(l: &LatticePathPresentation) -> u128 {
    let lo = heights(&l.p);
    let hi = heights(&l.q);
    // ways[h] after t steps
    let mut ways = vec![0u128; l.r + 1];
    ways[0] = 1;
    for t in 1..=l.n() {
        let mut next = vec![0u128; l.r + 1];
        for h in 0..=l.r {
            if h < lo[t] || h > hi[t] {
                continue;
            }
            next[h] = ways[h] + if h > 0 { ways[h - 1] } else { 0 };
        }
        ways = next;
    }
    ways[l.r]
}

/// Standard presentation of `M \ x`, relabeled to `1..n-1`.
///
/// `x` leaves every interval. If `x` was the only element of an interval it
/// is a coloop and that interval goes. If `x = u_k`, the run of upper
/// endpoints `u_{k-j} = x - j` (for `j = 1..=l`, `l` maximal) each drop
/// their top element, which keeps the upper endpoints a chain; lower
/// endpoints are handled symmetrically.
pub fn delete_presentation(s: &StandardPresentation, x: usize) -> StandardPresentation {
    let mut iv = s.intervals.clone();
    if let Some(k) = iv.iter().position(|&(l, u)| l == x && u == x) {
        iv.remove(k);
    } else {
        if let Some(k) = iv.iter().position(|&(_, u)| u == x) {
            iv[k].1 = x - 1;
            let mut j = 1;
            while j <= k && iv[k - j].1 == x - j {
                iv[k - j].1 = x - j - 1;
                j += 1;
            }
        }
        if let Some(k) = iv.iter().position(|&(l, _)| l == x) {
            iv[k].0 = x + 1;
            let mut j = 1;
            while k + j < iv.len() && iv[k + j].0 == x + j {
                iv[k + j].0 = x + j + 1;
                j += 1;
            }
        }
    }
    let shift = |e: usize| if e > x { e - 1 } else { e };
    let intervals: Vec<(usize, usize)> = iv.into_iter().map(|(l, u)| (shift(l), shift(u))).collect();
    let out = StandardPresentation {
        n: s.n - 1,
        intervals,
    };
    debug_assert!(StandardPresentation::new(out.n, out.intervals.clone()).is_ok());
    out
}

/// First `k` (1-based) with `l_{k+2} > u_k`, if any.
pub fn upper_bound_violation(s: &StandardPresentation) -> Option<usize> {
    let iv = &s.intervals;
    (0..iv.len().saturating_sub(2))
        .find(|&k| iv[k + 2].0 > iv[k].1)
        .map(|k| k + 1)
}

pub fn has_upper_bound_property(s: &StandardPresentation) -> (bool, Option<usize>) {
    let v = upper_bound_violation(s);
    (v.is_none(), v)
}

/// Deletes elements from a vertically 3-connected lattice path matroid of
/// rank `r >= 3` until it is uniform, then trims it to `U_{r,r+2}`.
///
/// Elements in no interval go first. Then, while some `l_{k+1} != l_k + 1`
/// (least such `k`), `l_k + 1` is deleted; then, while some
/// `u_{k-1} != u_k - 1` (greatest such `k`), `u_k - 1` is deleted. Both
/// endpoint sequences end up consecutive, so the presentation is a
/// rectangle.
pub fn extract_uniform_minor(l: &LatticePathPresentation) -> Result<MinorWitness> {
    let r = l.r;
    if r < 3 {
        return Err(Error::PreconditionViolated(format!("rank {r} is below 3")));
    }
    let m = matroid_of_lpm(l);
    if let Some(sep) = m.vertical_separation(3)? {
        return Err(Error::PreconditionViolated(format!(
            "vertical {}-separation ({}, {})",
            sep.order, sep.a, sep.b
        )));
    }
    let mut s = to_standard_presentation(l);
    let mut labels: Vec<usize> = (1..=l.n()).collect();
    let mut deleted = ElementSet::EMPTY;
    let mut delete = |s: &mut StandardPresentation, x: usize| {
        deleted = deleted.with(labels.remove(x - 1));
        *s = delete_presentation(s, x);
    };
    while let Some(x) = s.uncovered().min_element() {
        delete(&mut s, x);
    }
    while let Some(k) = (0..r - 1).find(|&k| s.intervals[k + 1].0 != s.intervals[k].0 + 1) {
        let x = s.intervals[k].0 + 1;
        delete(&mut s, x);
    }
    while let Some(k) = (1..r).rev().find(|&k| s.intervals[k - 1].1 != s.intervals[k].1 - 1) {
        let x = s.intervals[k].1 - 1;
        delete(&mut s, x);
    }
    let width = s.intervals[0].1 - s.intervals[0].0;
    assert!(
        s.rank() == r && s.n == r + width && width >= 2,
        "deletion sequence did not reach a uniform matroid: {s}"
    );
    // U_{r,r+width}: trim the largest labels down to r + 2 elements
    while s.n > r + 2 {
        let x = s.n;
        delete(&mut s, x);
    }
    Ok(MinorWitness {
        target_name: catalog::uniform_name(r, r + 2),
        contract: ElementSet::EMPTY,
        delete: deleted,
        iso: (1..=r + 2).collect(),
    })
}

/// Decides membership in the lattice path class by searching `m` for each
/// excluded minor with at most `|E(m)|` elements, smallest first.
pub fn is_lattice_path(
    m: &BasisMatroid,
    config: &Config,
    budget: &mut Budget,
) -> Result<(bool, Option<MinorWitness>)> {
    if m.n() > config.max_elements {
        return Err(Error::GroundSetTooLarge {
            n: m.n(),
            limit: config.max_elements,
        });
    }
    for nm in catalog::lattice_path_excluded_minors(m.n())? {
        if let Some(w) = has_minor_iso(m, &nm.matroid, &nm.name, budget)? {
            return Ok((false, Some(w)));
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ten_element() -> LatticePathPresentation {
        LatticePathPresentation::from_strings("EEEENNENNN", "NENNENEENE").unwrap()
    }

    fn ten_element_intervals() -> StandardPresentation {
        StandardPresentation::new(10, vec![(1, 5), (3, 6), (4, 8), (6, 9), (9, 10)]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(LatticePathPresentation::from_strings("NE", "EN").is_err());
        assert!(LatticePathPresentation::from_strings("EN", "NN").is_err());
        assert!(LatticePathPresentation::from_strings("EX", "NE").is_err());
        assert!(StandardPresentation::new(4, vec![(1, 3), (1, 4)]).is_err());
        assert!(StandardPresentation::new(4, vec![(1, 3), (2, 3)]).is_err());
        assert!(StandardPresentation::new(4, vec![(2, 1)]).is_err());
    }

    #[test]
    fn ten_element_basis_and_presentation() {
        let m = matroid_of_lpm(&ten_element());
        assert!(m.is_basis(ElementSet::from_elements([2, 5, 6, 8, 9])));
        assert_eq!(to_standard_presentation(&ten_element()), ten_element_intervals());
        assert_eq!(matroid_of_standard(&ten_element_intervals()), m);
        assert_eq!(count_paths(&ten_element()), m.num_bases() as u128);
    }

    #[test]
    fn full_grid_is_uniform() {
        let l = LatticePathPresentation::from_strings("EEEENNN", "NNNEEEE").unwrap();
        assert_eq!(l, LatticePathPresentation::full_grid(4, 3));
        assert_eq!(matroid_of_lpm(&l), BasisMatroid::uniform(3, 7));
        assert_eq!(count_paths(&l), 35);
        assert_eq!(
            to_standard_presentation(&l),
            StandardPresentation::new(7, vec![(1, 5), (2, 6), (3, 7)]).unwrap()
        );
    }

    #[test]
    fn single_path_region() {
        let l = LatticePathPresentation::from_strings("ENENN", "ENENN").unwrap();
        let m = matroid_of_lpm(&l);
        assert_eq!(m.num_bases(), 1);
        assert_eq!(m.coloops(), ElementSet::from_elements([2, 4, 5]));
        assert_eq!(count_paths(&l), 1);
        assert_eq!(
            to_standard_presentation(&l).intervals,
            vec![(2, 2), (4, 4), (5, 5)]
        );
    }

    #[test]
    fn standard_presentation_examples() {
        let s = StandardPresentation::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(matroid_of_standard(&s), BasisMatroid::uniform(1, 2));
        let s = StandardPresentation::new(4, vec![(1, 3), (2, 4)]).unwrap();
        let m = matroid_of_standard(&s);
        assert_eq!(m.rank(), 2);
        assert_eq!(m, BasisMatroid::uniform(2, 4));
    }

    #[test]
    fn ten_element_delete_last_element() {
        let d = delete_presentation(&ten_element_intervals(), 10);
        assert_eq!(d.intervals, vec![(1, 5), (3, 6), (4, 7), (6, 8), (9, 9)]);
        let m = matroid_of_standard(&ten_element_intervals());
        assert_eq!(matroid_of_standard(&d), m.delete(10).unwrap());
    }

    #[test]
    fn delete_lower_endpoint_without_collision() {
        let s = StandardPresentation::new(6, vec![(1, 3), (3, 5), (4, 6)]).unwrap();
        let d = delete_presentation(&s, 1);
        assert_eq!(d.intervals, vec![(1, 2), (2, 4), (3, 5)]);
    }

    #[test]
    fn delete_coloop() {
        let s = StandardPresentation::new(3, vec![(1, 1), (2, 3)]).unwrap();
        let d = delete_presentation(&s, 1);
        assert_eq!(d, StandardPresentation::new(2, vec![(1, 2)]).unwrap());
    }

    #[test]
    fn upper_bound_property_examples() {
        assert_eq!(has_upper_bound_property(&ten_element_intervals()), (false, Some(3)));
        let u37 = StandardPresentation::new(7, vec![(1, 5), (2, 6), (3, 7)]).unwrap();
        assert_eq!(has_upper_bound_property(&u37), (true, None));
        let r2 = StandardPresentation::new(4, vec![(1, 1), (4, 4)]).unwrap();
        assert_eq!(has_upper_bound_property(&r2), (true, None));
    }

    #[test]
    fn uniform_minor_of_u37() {
        let l = LatticePathPresentation::full_grid(4, 3);
        let w = extract_uniform_minor(&l).unwrap();
        assert_eq!(w.delete, ElementSet::from_elements([6, 7]));
        assert!(w.replays(&matroid_of_lpm(&l), &BasisMatroid::uniform(3, 5)));
    }

    #[test]
    fn uniform_minor_precondition() {
        assert!(matches!(
            extract_uniform_minor(&ten_element()),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            extract_uniform_minor(&LatticePathPresentation::full_grid(3, 2)),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn reflect_and_rotate() {
        let l = ten_element();
        let m = matroid_of_lpm(&l);
        assert_eq!(matroid_of_lpm(&l.reflect()), m.dual());
        let rev: Vec<usize> = (1..=m.n()).rev().collect();
        assert_eq!(matroid_of_lpm(&l.rotate()), m.relabel(&rev));
        assert_eq!(to_standard_presentation(&l).to_lattice_path(), l);
    }
}
