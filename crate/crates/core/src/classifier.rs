//! Membership in the class of bicircular lattice path matroids, decided both
//! through the nineteen excluded minors and directly through the two class
//! tests, plus the corpora and the harness that compares the two.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::bicircular::{bicircular_matroid, check_size_bound, is_bicircular, Edge, MultiGraph};
use crate::catalog::{theorem1_list, CatalogEntry};
use crate::format;
use crate::isomin::{has_minor_iso, invariant_profile, is_isomorphic, MinorWitness, Profile};
use crate::latticepath::{is_lattice_path, matroid_of_lpm, LatticePathPresentation, Step};
use crate::matroid::BasisMatroid;
use crate::set::{subsets_of_size, ElementSet};
use crate::{Config, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Theorem1,
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    pub witness: Option<MinorWitness>,
    pub method: Method,
    /// Outcome of each side; set only by the direct method.
    pub lattice_path: Option<bool>,
    pub bicircular: Option<bool>,
    /// Graph found by the bicircular search.
    pub graph: Option<MultiGraph>,
    pub nodes_used: u64,
}

fn check_size(m: &BasisMatroid, config: &Config) -> Result<()> {
    if m.n() > config.max_elements {
        return Err(Error::GroundSetTooLarge {
            n: m.n(),
            limit: config.max_elements,
        });
    }
    Ok(())
}

/// Catalog entries in increasing size, catalog order within a size.
fn theorem1_by_size() -> Vec<&'static CatalogEntry> {
    let mut v: Vec<&CatalogEntry> = theorem1_list().iter().collect();
    v.sort_by_key(|e| e.matroid.n());
    v
}

/// Member iff no catalog entry is isomorphic to a minor of `m`.
pub fn member_theorem1(m: &BasisMatroid, config: &Config) -> Result<Verdict> {
    check_size(m, config)?;
    let mut budget = config.budget();
    let mut witness = None;
    for entry in theorem1_by_size() {
        if entry.matroid.n() > m.n() {
            break;
        }
        if let Some(w) = has_minor_iso(m, &entry.matroid, &entry.name, &mut budget)? {
            witness = Some(w);
            break;
        }
    }
    Ok(Verdict {
        member: witness.is_none(),
        witness,
        method: Method::Theorem1,
        lattice_path: None,
        bicircular: None,
        graph: None,
        nodes_used: budget.used(),
    })
}

/// Whether `m` is bicircular, with the graph when it is. The size bound
/// settles some cases without searching.
pub fn bicircular_side(m: &BasisMatroid, config: &Config) -> Result<(Option<MultiGraph>, u64)> {
    if matches!(check_size_bound(m), Ok(false)) {
        return Ok((None, 0));
    }
    let mut budget = config.budget();
    let g = is_bicircular(m, &mut budget)?;
    Ok((g, budget.used()))
}

/// Member iff `m` is both lattice path and bicircular. Both sides are
/// always evaluated.
pub fn member_direct(m: &BasisMatroid, config: &Config) -> Result<Verdict> {
    check_size(m, config)?;
    let mut budget = config.budget();
    let (lp, witness) = is_lattice_path(m, config, &mut budget)?;
    let (graph, used) = bicircular_side(m, config)?;
    let bic = graph.is_some();
    Ok(Verdict {
        member: lp && bic,
        witness,
        method: Method::Direct,
        lattice_path: Some(lp),
        bicircular: Some(bic),
        graph,
        nodes_used: budget.used() + used,
    })
}

#[derive(Debug, Clone)]
pub struct LpmCorpusEntry {
    pub presentation: LatticePathPresentation,
    pub matroid: BasisMatroid,
}

#[derive(Debug, Clone)]
pub struct BicircularCorpusEntry {
    pub graph: MultiGraph,
    pub matroid: BasisMatroid,
}

/// Lattice paths from `(0,0)` to `(m,r)`, as North-step position sets.
fn paths(n: usize, r: usize) -> Vec<Vec<Step>> {
    subsets_of_size(ElementSet::full(n), r)
        .into_iter()
        .map(|s| {
            (1..=n)
                .map(|i| if s.contains(i) { Step::N } else { Step::E })
                .collect()
        })
        .collect()
}

/// Every valid region with `1 <= m + r <= max_n`.
pub fn lpm_regions(max_n: usize) -> Vec<LatticePathPresentation> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 0..=n {
            let all = paths(n, r);
            for p in &all {
                for q in &all {
                    if let Ok(l) = LatticePathPresentation::new(n - r, r, p.clone(), q.clone()) {
                        out.push(l);
                    }
                }
            }
        }
    }
    out
}

/// Keeps the first item of every isomorphism class, in input order.
pub fn dedup_isomorphic<T: Send + Sync>(items: Vec<T>, matroid: impl Fn(&T) -> &BasisMatroid + Sync) -> Vec<T> {
    let profiles: Vec<Profile> = items.par_iter().map(|t| invariant_profile(matroid(t))).collect();
    let mut buckets: HashMap<Profile, Vec<usize>> = HashMap::new();
    let mut keep = vec![false; items.len()];
    for (i, p) in profiles.into_iter().enumerate() {
        let bucket = buckets.entry(p).or_default();
        let m = matroid(&items[i]);
        if bucket
            .iter()
            .all(|&j| is_isomorphic(m, matroid(&items[j])).is_none())
        {
            bucket.push(i);
            keep[i] = true;
        }
    }
    items
        .into_iter()
        .zip(keep)
        .filter_map(|(t, k)| k.then_some(t))
        .collect()
}

/// Lattice path matroids on at most `max_n` elements, one per isomorphism
/// class, each with a region presenting it.
pub fn enumerate_lpm_corpus(max_n: usize) -> Vec<LpmCorpusEntry> {
    let items: Vec<LpmCorpusEntry> = lpm_regions(max_n)
        .into_par_iter()
        .map(|presentation| LpmCorpusEntry {
            matroid: matroid_of_lpm(&presentation),
            presentation,
        })
        .collect();
    dedup_isomorphic(items, |e| &e.matroid)
}

/// Slots on `v` vertices: free, loops by vertex, links in lexicographic order.
fn slots(v: usize) -> Vec<Edge> {
    let mut s = vec![Edge::Free];
    s.extend((1..=v).map(Edge::Loop));
    for a in 1..=v {
        for b in a + 1..=v {
            s.push(Edge::Link(a, b));
        }
    }
    s
}

fn permute_edge(e: Edge, perm: &[usize]) -> Edge {
    match e {
        Edge::Free => Edge::Free,
        Edge::Loop(a) => Edge::Loop(perm[a - 1]),
        Edge::Link(a, b) => {
            let (x, y) = (perm[a - 1], perm[b - 1]);
            Edge::Link(x.min(y), x.max(y))
        }
    }
}

fn permutations(v: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i + 1);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; v], &mut out);
    out
}

/// Multigraphs with `1..=max_edges` edges on `max_vertices` vertices (fewer
/// vertices are covered by isolated ones), one per edge multiset up to
/// vertex permutation.
pub fn bicircular_graphs(max_edges: usize, max_vertices: usize) -> Vec<MultiGraph> {
    let slots = slots(max_vertices);
    let index: HashMap<Edge, usize> = slots.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let perms = permutations(max_vertices);
    let mut out = Vec::new();
    let mut multiset = Vec::new();
    fn walk(
        from: usize,
        max_edges: usize,
        multiset: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
        nslots: usize,
    ) {
        if !multiset.is_empty() {
            visit(multiset);
        }
        if multiset.len() == max_edges {
            return;
        }
        for s in from..nslots {
            multiset.push(s);
            walk(s, max_edges, multiset, visit, nslots);
            multiset.pop();
        }
    }
    let mut visit = |ms: &[usize]| {
        let canonical = perms.iter().all(|p| {
            let mut image: Vec<usize> = ms
                .iter()
                .map(|&s| index[&permute_edge(slots[s], p)])
                .collect();
            image.sort_unstable();
            image.as_slice() >= ms
        });
        if canonical {
            out.push(MultiGraph {
                v: max_vertices,
                edges: ms.iter().map(|&s| slots[s]).collect(),
            });
        }
    };
    walk(0, max_edges, &mut multiset, &mut visit, slots.len());
    out
}

/// Bicircular matroids of the graphs from [`bicircular_graphs`], one per
/// isomorphism class.
pub fn enumerate_bicircular_corpus(max_edges: usize, max_vertices: usize) -> Vec<BicircularCorpusEntry> {
    let items: Vec<BicircularCorpusEntry> = bicircular_graphs(max_edges, max_vertices)
        .into_par_iter()
        .map(|graph| BicircularCorpusEntry {
            matroid: bicircular_matroid(&graph).expect("small graph"),
            graph,
        })
        .collect();
    dedup_isomorphic(items, |e| &e.matroid)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub pass: bool,
    pub id: String,
    pub reference: String,
    pub witness: Option<String>,
    /// Failure details: the offending matroid or the error.
    pub detail: Option<String>,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.id, self.reference)?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        if let Some(d) = &self.detail {
            for line in d.lines() {
                write!(f, "\n# {line}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| !l.pass).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        writeln!(f, "checks {} failures {}", self.lines.len(), self.failures())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub config: Config,
    pub lpm_max_n: usize,
    pub bicircular_max_edges: usize,
    pub bicircular_max_vertices: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            config: Config::default(),
            lpm_max_n: 8,
            bicircular_max_edges: 7,
            bicircular_max_vertices: 4,
        }
    }
}

fn line(id: &str, reference: String, outcome: Result<(bool, Option<String>)>, m: &BasisMatroid) -> CheckLine {
    match outcome {
        Ok((pass, witness)) => CheckLine {
            pass,
            id: id.to_string(),
            reference,
            witness,
            detail: (!pass).then(|| format::write_matroid(m)),
        },
        Err(e) => CheckLine {
            pass: false,
            id: id.to_string(),
            reference,
            witness: None,
            detail: Some(format!("error: {e}\n{}", format::write_matroid(m))),
        },
    }
}

/// Every catalog entry fails the direct test on exactly the sides its group
/// predicts; the lattice path witness of a non-lattice-path entry is the
/// entry itself; the excluded-minor test rejects it with a replayable
/// witness.
pub fn check_entry(entry: &CatalogEntry, config: &Config) -> Vec<CheckLine> {
    let m = &entry.matroid;
    let direct = member_direct(m, config).map(|v| {
        let lp_ok = v.lattice_path == Some(entry.group.is_lattice_path());
        let bic_ok = v.bicircular == Some(entry.group.is_bicircular());
        let self_witness = match &v.witness {
            Some(w) => w.target_name == entry.name,
            None => entry.group.is_lattice_path(),
        };
        let side = format!(
            "lattice-path={} bicircular={}",
            v.lattice_path.unwrap_or(false),
            v.bicircular.unwrap_or(false)
        );
        (!v.member && lp_ok && bic_ok && self_witness, Some(side))
    });
    let theorem1 = member_theorem1(m, config).map(|v| match v.witness {
        Some(w) => {
            let target = &theorem1_list()
                .iter()
                .find(|e| e.name == w.target_name)
                .expect("witness names an entry")
                .matroid;
            (!v.member && w.replays(m, target), Some(w.target_name))
        }
        None => (false, None),
    });
    vec![
        line("direct-pattern", entry.name.clone(), direct, m),
        line("theorem1-excluded", entry.name.clone(), theorem1, m),
    ]
}

/// Both tests must accept every single-element deletion and contraction.
pub fn check_entry_minors(entry: &CatalogEntry, config: &Config) -> Vec<CheckLine> {
    let m = &entry.matroid;
    let mut minors = Vec::new();
    for e in 1..=m.n() {
        minors.push((format!("{}\\{e}", entry.name), m.delete(e)));
        minors.push((format!("{}/{e}", entry.name), m.contract(e)));
    }
    minors
        .into_par_iter()
        .map(|(reference, minor)| {
            let minor = minor.expect("element in range");
            let outcome = member_direct(&minor, config).and_then(|d| {
                let t = member_theorem1(&minor, config)?;
                Ok((d.member && t.member, None))
            });
            line("minimal", reference, outcome, &minor)
        })
        .collect()
}

/// The two decisions agree on `m`.
pub fn check_agreement(id: &str, reference: String, m: &BasisMatroid, config: &Config) -> CheckLine {
    let outcome = member_direct(m, config).and_then(|d| {
        let t = member_theorem1(m, config)?;
        let witness_ok = t.witness.as_ref().is_none_or(|w| {
            let target = &theorem1_list()
                .iter()
                .find(|e| e.name == w.target_name)
                .expect("witness names an entry")
                .matroid;
            w.replays(m, target)
        });
        Ok((
            d.member == t.member && witness_ok,
            Some(format!("member={}", d.member)),
        ))
    });
    line(id, reference, outcome, m)
}

pub fn verify_theorem1(options: &VerifyOptions) -> Report {
    let config = &options.config;
    let mut lines = Vec::new();
    let entry_lines: Vec<Vec<CheckLine>> = theorem1_list()
        .par_iter()
        .map(|e| {
            let mut v = check_entry(e, config);
            v.extend(check_entry_minors(e, config));
            v
        })
        .collect();
    lines.extend(entry_lines.into_iter().flatten());
    let lpm = enumerate_lpm_corpus(options.lpm_max_n);
    lines.par_extend(
        lpm.par_iter()
            .enumerate()
            .map(|(i, e)| check_agreement("biconditional", format!("lpm#{i}"), &e.matroid, config)),
    );
    let bic = enumerate_bicircular_corpus(options.bicircular_max_edges, options.bicircular_max_vertices);
    lines.par_extend(
        bic.par_iter()
            .enumerate()
            .map(|(i, e)| check_agreement("biconditional", format!("bicircular#{i}"), &e.matroid, config)),
    );
    Report { lines }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{theorem1_entry, wheel3};

    #[test]
    fn theorem1_examples() {
        let c = Config::default();
        let v = member_theorem1(&wheel3(), &c).unwrap();
        assert!(!v.member);
        assert_eq!(v.witness.unwrap().target_name, "W3");
        let u57 = BasisMatroid::uniform(5, 7);
        let v = member_theorem1(&u57, &c).unwrap();
        assert_eq!(v.witness.unwrap().target_name, "U5,7");
        assert!(member_theorem1(&BasisMatroid::uniform(2, 4), &c).unwrap().member);
    }

    #[test]
    fn direct_examples() {
        let c = Config::default();
        let b22 = &theorem1_entry("B2,2").unwrap().matroid;
        let v = member_direct(b22, &c).unwrap();
        assert_eq!((v.lattice_path, v.bicircular), (Some(false), Some(false)));
        let a3 = &theorem1_entry("A3").unwrap().matroid;
        let v = member_direct(a3, &c).unwrap();
        assert_eq!((v.lattice_path, v.bicircular), (Some(false), Some(true)));
        let v = member_direct(&BasisMatroid::uniform(2, 4), &c).unwrap();
        assert!(v.member);
    }

    #[test]
    fn size_limit() {
        let c = Config {
            max_elements: 5,
            ..Config::default()
        };
        assert!(matches!(
            member_direct(&BasisMatroid::uniform(2, 6), &c),
            Err(Error::GroundSetTooLarge { .. })
        ));
    }

    #[test]
    fn tiny_lpm_corpus() {
        let corpus = enumerate_lpm_corpus(2);
        // sizes 1 and 2: U0,1 U1,1 | U0,2 U1,2 U2,2 U0,1+U1,1
        assert_eq!(corpus.len(), 6);
        let four = enumerate_lpm_corpus(4);
        assert!(four
            .iter()
            .any(|e| is_isomorphic(&e.matroid, &BasisMatroid::uniform(2, 4)).is_some()));
    }

    #[test]
    fn graph_canonicalization() {
        // one edge on two vertices: free, loop, link
        assert_eq!(bicircular_graphs(1, 2).len(), 3);
        let theta = enumerate_bicircular_corpus(3, 2);
        assert!(theta
            .iter()
            .any(|e| is_isomorphic(&e.matroid, &BasisMatroid::uniform(2, 3)).is_some()));
    }
}
