//! Named matroids: the five excluded-minor families, wheels and whirls, the
//! graphs and lattice path regions that present them, and the nineteen
//! excluded minors for the class of bicircular lattice path matroids.

use std::sync::OnceLock;

use crate::bicircular::{bicircular_matroid, Edge, MultiGraph};
use crate::isomin::is_isomorphic;
use crate::latticepath::{matroid_of_lpm, LatticePathPresentation};
use crate::matroid::{cycle_matroid, BasisMatroid};
use crate::set::{subsets_of_size, ElementSet};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `T_n(U_{n-1,n} + U_{n-1,n})`, `n >= 2`.
    P(usize),
    /// `(P_{n-1}^* + e)^*`, `n >= 3`.
    Pprime(usize),
    /// `P'_n + x`, `n >= 3`.
    A(usize),
    /// `T_n(U_{n-1,n} + U_{n-1,n} + U_{k-1,k})`, `n >= k >= 2`.
    B(usize, usize),
    /// `C_{n+k,k} = B_{n,k}^*`, `n >= k >= 2`.
    C(usize, usize),
    /// `(P_{n-1} + U_{1,1}) + x`, `n >= 4`.
    D(usize),
    /// `D_n^*`, `n >= 4`.
    E(usize),
}

impl Family {
    pub fn name(&self) -> String {
        match *self {
            Family::P(n) => format!("P{n}"),
            Family::Pprime(n) => format!("P'{n}"),
            Family::A(n) => format!("A{n}"),
            Family::B(n, k) => format!("B{n},{k}"),
            Family::C(n, k) => format!("C{},{k}", n + k),
            Family::D(n) => format!("D{n}"),
            Family::E(n) => format!("E{n}"),
        }
    }

    /// Ground-set size of the instance.
    pub fn size(&self) -> usize {
        match *self {
            Family::P(n) | Family::A(n) | Family::D(n) | Family::E(n) => 2 * n,
            Family::Pprime(n) => 2 * n - 1,
            Family::B(n, k) | Family::C(n, k) => 2 * n + k,
        }
    }
}

pub fn uniform_name(r: usize, n: usize) -> String {
    format!("U{r},{n}")
}

pub fn family(f: Family) -> Result<BasisMatroid> {
    let bad = |what: &str| Err(Error::BadParameters(format!("{}: {what}", f.name())));
    match f {
        Family::P(n) => {
            if n < 2 {
                return bad("requires n >= 2");
            }
            let u = BasisMatroid::uniform(n - 1, n);
            u.direct_sum(&u).truncate_to(n)
        }
        Family::Pprime(n) => {
            if n < 3 {
                return bad("requires n >= 3");
            }
            Ok(family(Family::P(n - 1))?.dual().free_extend()?.dual())
        }
        Family::A(n) => {
            if n < 3 {
                return bad("requires n >= 3");
            }
            family(Family::Pprime(n))?.free_extend()
        }
        Family::B(n, k) => {
            if k < 2 || n < k {
                return bad("requires n >= k >= 2");
            }
            let u = BasisMatroid::uniform(n - 1, n);
            u.direct_sum(&u)
                .direct_sum(&BasisMatroid::uniform(k - 1, k))
                .truncate_to(n)
        }
        Family::C(n, k) => {
            if k < 2 || n < k {
                return bad("requires n >= k >= 2");
            }
            Ok(family(Family::B(n, k))?.dual())
        }
        Family::D(n) => {
            if n < 4 {
                return bad("requires n >= 4");
            }
            family(Family::P(n - 1))?
                .direct_sum(&BasisMatroid::uniform(1, 1))
                .free_extend()
        }
        Family::E(n) => {
            if n < 4 {
                return bad("requires n >= 4");
            }
            Ok(family(Family::D(n))?.dual())
        }
    }
}

/// The cycle matroid of `K_4`, edges ordered 12, 13, 14, 23, 24, 34.
pub fn wheel3() -> BasisMatroid {
    cycle_matroid(&k4()).expect("K4 has no free edge")
}

/// `W_3` with the rim `{12, 13, 23}` relaxed.
pub fn whirl3() -> BasisMatroid {
    wheel3()
        .relax_circuit_hyperplane(ElementSet::from_elements([1, 2, 4]))
        .expect("rim is a circuit-hyperplane")
}

fn k4() -> MultiGraph {
    use Edge::Link;
    MultiGraph::new(
        4,
        vec![
            Link(1, 2),
            Link(1, 3),
            Link(1, 4),
            Link(2, 3),
            Link(2, 4),
            Link(3, 4),
        ],
    )
    .expect("valid")
}

pub const FIGURE_GRAPHS: [&str; 8] = ["A3", "B3,3", "C4,2", "C5,2", "D4", "W^3", "R3", "R4"];

/// Bicircular graphs of the excluded minors that are bicircular.
pub fn figure_graph(name: &str) -> Result<MultiGraph> {
    use Edge::{Link, Loop};
    let (v, edges) = match name {
        "A3" => (
            3,
            vec![Link(1, 2), Link(1, 2), Link(1, 3), Link(1, 3), Link(2, 3), Loop(1)],
        ),
        "B3,3" => (
            3,
            vec![
                Link(1, 2),
                Link(1, 2),
                Link(1, 2),
                Link(1, 3),
                Link(1, 3),
                Link(1, 3),
                Link(2, 3),
                Link(2, 3),
                Link(2, 3),
            ],
        ),
        "C4,2" => (
            4,
            vec![Link(1, 4), Link(1, 4), Link(2, 4), Link(2, 4), Link(3, 4), Link(3, 4)],
        ),
        "C5,2" => (
            5,
            vec![
                Link(2, 4),
                Link(2, 4),
                Link(4, 5),
                Link(3, 5),
                Link(3, 5),
                Link(2, 3),
                Link(1, 5),
                Link(1, 2),
            ],
        ),
        "D4" => (
            4,
            vec![
                Link(1, 2),
                Link(1, 2),
                Link(1, 2),
                Link(2, 3),
                Link(2, 3),
                Link(2, 3),
                Link(3, 4),
                Link(1, 4),
            ],
        ),
        "W^3" => (
            3,
            vec![Link(1, 2), Link(1, 3), Link(2, 3), Loop(1), Loop(3), Loop(2)],
        ),
        "R3" => (
            3,
            vec![
                Link(1, 2),
                Link(1, 3),
                Link(2, 3),
                Loop(3),
                Loop(2),
                Loop(3),
                Loop(2),
            ],
        ),
        "R4" => (
            4,
            vec![
                Link(1, 2),
                Link(2, 3),
                Link(1, 3),
                Link(3, 4),
                Link(3, 4),
                Loop(2),
                Loop(2),
            ],
        ),
        other => return Err(Error::UnknownName(other.to_string())),
    };
    MultiGraph::new(v, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    /// Lattice path but not bicircular.
    I,
    /// Bicircular but not lattice path.
    II,
    /// Neither.
    III,
}

impl Group {
    pub fn label(&self) -> &'static str {
        match self {
            Group::I => "i",
            Group::II => "ii",
            Group::III => "iii",
        }
    }

    pub fn is_lattice_path(&self) -> bool {
        *self == Group::I
    }

    pub fn is_bicircular(&self) -> bool {
        *self == Group::II
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Representation {
    Formula {
        text: String,
        matroid: BasisMatroid,
    },
    Graph(MultiGraph),
    LatticePath(LatticePathPresentation),
    /// A structural description checked against the matroid.
    Geometric(String),
}

impl Representation {
    pub fn kind(&self) -> &'static str {
        match self {
            Representation::Formula { .. } => "family-formula",
            Representation::Graph(_) => "bicircular-graph",
            Representation::LatticePath(_) => "lattice-path",
            Representation::Geometric(_) => "geometric-note",
        }
    }

    /// The presented matroid; geometric notes present none.
    pub fn matroid(&self) -> Option<BasisMatroid> {
        match self {
            Representation::Formula { matroid, .. } => Some(matroid.clone()),
            Representation::Graph(g) => bicircular_matroid(g).ok(),
            Representation::LatticePath(l) => Some(matroid_of_lpm(l)),
            Representation::Geometric(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub group: Group,
    pub matroid: BasisMatroid,
    pub representations: Vec<Representation>,
}

impl CatalogEntry {
    pub fn graph(&self) -> Option<&MultiGraph> {
        self.representations.iter().find_map(|r| match r {
            Representation::Graph(g) => Some(g),
            _ => None,
        })
    }

    pub fn lattice_path(&self) -> Option<&LatticePathPresentation> {
        self.representations.iter().find_map(|r| match r {
            Representation::LatticePath(l) => Some(l),
            _ => None,
        })
    }
}

fn formula(text: &str, matroid: BasisMatroid) -> Representation {
    Representation::Formula {
        text: text.to_string(),
        matroid,
    }
}

fn lpm(p: &str, q: &str) -> Representation {
    Representation::LatticePath(LatticePathPresentation::from_strings(p, q).expect("valid region"))
}

fn graph(name: &str) -> Representation {
    Representation::Graph(figure_graph(name).expect("known figure"))
}

fn truncated_sum(parts: &[(usize, usize)], t: usize) -> BasisMatroid {
    parts
        .iter()
        .map(|&(r, n)| BasisMatroid::uniform(r, n))
        .reduce(|a, b| a.direct_sum(&b))
        .expect("non-empty")
        .truncate_to(t)
        .expect("valid truncation")
}

fn fam(f: Family) -> BasisMatroid {
    family(f).expect("valid parameters")
}

const R3_NOTE: &str = "a 5-element rank-2 flat holding two parallel pairs, plus two free elements";
const R4_NOTE: &str = "two 4-element circuits meeting in one element, and a parallel pair";

fn build_theorem1() -> Vec<CatalogEntry> {
    use Group::*;
    let mut raw: Vec<(&str, Group, Vec<Representation>)> = vec![
        ("U3,7", I, vec![formula("U3,7", BasisMatroid::uniform(3, 7)), lpm("EEEENNN", "NNNEEEE")]),
        ("U4,7", I, vec![formula("U4,7", BasisMatroid::uniform(4, 7)), lpm("EEENNNN", "NNNNEEE")]),
        ("U5,7", I, vec![formula("U5,7", BasisMatroid::uniform(5, 7)), lpm("EENNNNN", "NNNNNEE")]),
        (
            "T3(U1,2+U3,5)",
            I,
            vec![
                formula("T3(U1,2+U3,5)", truncated_sum(&[(1, 2), (3, 5)], 3)),
                lpm("EEEENNN", "NENNEEE"),
            ],
        ),
        (
            "T3(U1,2+U1,2+U3,3)",
            I,
            vec![
                formula("T3(U1,2+U1,2+U3,3)", truncated_sum(&[(1, 2), (1, 2), (3, 3)], 3)),
                lpm("EEENNEN", "NENNEEE"),
            ],
        ),
        (
            "T4(U1,2+U4,5)",
            I,
            vec![
                formula("T4(U1,2+U4,5)", truncated_sum(&[(1, 2), (4, 5)], 4)),
                lpm("EEENNNN", "NENNNEE"),
            ],
        ),
        (
            "T4(U3,4+U3,3)",
            I,
            vec![
                formula("T4(U3,4+U3,3)", truncated_sum(&[(3, 4), (3, 3)], 4)),
                lpm("EEENNNN", "NNNENEE"),
            ],
        ),
        ("A3", II, vec![formula("A3", fam(Family::A(3))), graph("A3")]),
        ("B3,3", II, vec![formula("B3,3", fam(Family::B(3, 3))), graph("B3,3")]),
        (
            "C4,2",
            II,
            vec![
                formula("C4,2", fam(Family::C(2, 2))),
                formula("B2,2 dual", fam(Family::B(2, 2)).dual()),
                graph("C4,2"),
            ],
        ),
        (
            "C5,2",
            II,
            vec![
                formula("C5,2", fam(Family::C(3, 2))),
                formula("B3,2 dual", fam(Family::B(3, 2)).dual()),
                graph("C5,2"),
            ],
        ),
        ("D4", II, vec![formula("D4", fam(Family::D(4))), graph("D4")]),
        (
            "W^3",
            II,
            vec![formula("M(K4) with the rim relaxed", whirl3()), graph("W^3")],
        ),
        ("R3", II, vec![graph("R3"), Representation::Geometric(R3_NOTE.into())]),
        ("R4", II, vec![graph("R4"), Representation::Geometric(R4_NOTE.into())]),
        ("B2,2", III, vec![formula("B2,2", fam(Family::B(2, 2)))]),
        ("B3,2", III, vec![formula("B3,2", fam(Family::B(3, 2)))]),
        (
            "E4",
            III,
            vec![
                formula("E4", fam(Family::E(4))),
                formula("D4 dual", fam(Family::D(4)).dual()),
            ],
        ),
        ("W3", III, vec![formula("M(K4)", wheel3())]),
    ];
    raw.drain(..)
        .map(|(name, group, representations)| {
            let matroid = representations[0].matroid().expect("first representation presents");
            for r in &representations[1..] {
                match r.matroid() {
                    Some(other) => assert!(
                        is_isomorphic(&matroid, &other).is_some(),
                        "{name}: {} representation is not isomorphic",
                        r.kind()
                    ),
                    None => assert!(geometric_note_holds(name, &matroid), "{name}: geometry"),
                }
            }
            CatalogEntry {
                name: name.to_string(),
                group,
                matroid,
                representations,
            }
        })
        .collect()
}

/// The nineteen excluded minors, groups (i), (ii), (iii) in order.
pub fn theorem1_list() -> &'static [CatalogEntry] {
    static LIST: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    LIST.get_or_init(build_theorem1)
}

pub fn theorem1_entry(name: &str) -> Result<&'static CatalogEntry> {
    theorem1_list()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Checks the structural description attached to `R3` or `R4`.
pub fn geometric_note_holds(name: &str, m: &BasisMatroid) -> bool {
    let classes = m.parallel_classes();
    let pairs: Vec<ElementSet> = classes
        .classes
        .iter()
        .copied()
        .filter(|c| c.len() >= 2)
        .collect();
    match name {
        "R3" => {
            if pairs.len() != 2 || pairs.iter().any(|c| c.len() != 2) {
                return false;
            }
            let both = pairs[0].union(pairs[1]);
            subsets_of_size(m.ground(), 5).into_iter().any(|f| {
                both.is_subset(f) && m.rank_of(f) == 2 && is_flat(m, f) && {
                    let rest = m.ground().difference(f);
                    rest.len() == 2 && m.is_independent(rest)
                }
            })
        }
        "R4" => {
            if pairs.len() != 1 || pairs[0].len() != 2 {
                return false;
            }
            let fours: Vec<ElementSet> =
                m.circuits().iter().copied().filter(|c| c.len() == 4).collect();
            fours
                .iter()
                .enumerate()
                .any(|(i, a)| fours[i + 1..].iter().any(|b| a.intersection(*b).len() == 1))
        }
        _ => false,
    }
}

fn is_flat(m: &BasisMatroid, f: ElementSet) -> bool {
    let r = m.rank_of(f);
    m.ground()
        .difference(f)
        .iter()
        .all(|e| m.rank_of(f.with(e)) > r)
}

pub struct NamedMatroid {
    pub name: String,
    pub matroid: BasisMatroid,
}

/// Excluded minors for the lattice path class, sorted by size, in the order
/// `W3, W^3, R3, R4`, then `A_n, B_{n,k}, C_{n+k,k}, D_n, E_n`.
fn lattice_path_excluded_upto(max_n: usize) -> Vec<NamedMatroid> {
    let mut out = Vec::new();
    let mut push = |name: &str, matroid: BasisMatroid| {
        if matroid.n() <= max_n {
            out.push(NamedMatroid {
                name: name.to_string(),
                matroid,
            });
        }
    };
    push("W3", wheel3());
    push("W^3", whirl3());
    for name in ["R3", "R4"] {
        push(name, bicircular_matroid(&figure_graph(name).unwrap()).unwrap());
    }
    let mut families = Vec::new();
    for n in 3..=max_n / 2 {
        families.push(Family::A(n));
    }
    for n in 2..=max_n / 2 {
        for k in 2..=n.min(max_n.saturating_sub(2 * n)) {
            families.push(Family::B(n, k));
        }
    }
    for n in 2..=max_n / 2 {
        for k in 2..=n.min(max_n.saturating_sub(2 * n)) {
            families.push(Family::C(n, k));
        }
    }
    for n in 4..=max_n / 2 {
        families.push(Family::D(n));
    }
    for n in 4..=max_n / 2 {
        families.push(Family::E(n));
    }
    for f in families {
        push(&f.name(), fam(f));
    }
    out.sort_by_key(|nm| nm.matroid.n());
    out
}

const CACHED_LPM_SIZE: usize = 12;

/// Every excluded minor for the lattice path class with at most `max_n`
/// elements, smallest first.
pub fn lattice_path_excluded_minors(max_n: usize) -> Result<Vec<NamedMatroid>> {
    static CACHE: OnceLock<Vec<NamedMatroid>> = OnceLock::new();
    if max_n > CACHED_LPM_SIZE {
        return Ok(lattice_path_excluded_upto(max_n));
    }
    let all = CACHE.get_or_init(|| lattice_path_excluded_upto(CACHED_LPM_SIZE));
    Ok(all
        .iter()
        .filter(|nm| nm.matroid.n() <= max_n)
        .map(|nm| NamedMatroid {
            name: nm.name.clone(),
            matroid: nm.matroid.clone(),
        })
        .collect())
}

/// Resolves catalog entries, family instances (`A4`, `B4,2`, `C6,2`, `D5`,
/// `E5`, `P3`, `P'4`), uniform matroids (`U2,4`), `W3` and `W^3`.
pub fn lookup(name: &str) -> Result<BasisMatroid> {
    if let Ok(e) = theorem1_entry(name) {
        return Ok(e.matroid.clone());
    }
    let unknown = || Error::UnknownName(name.to_string());
    let nums = |s: &str| -> Option<Vec<usize>> {
        s.split(',').map(|p| p.trim().parse().ok()).collect()
    };
    let (head, rest) = if let Some(rest) = name.strip_prefix("P'") {
        ("P'", rest)
    } else if let Some(c) = name.chars().next().filter(|c| c.is_ascii_alphabetic()) {
        name.split_at(c.len_utf8())
    } else {
        return Err(unknown());
    };
    let params = nums(rest).ok_or_else(unknown)?;
    match (head, params.as_slice()) {
        ("U", &[r, n]) if r <= n && n <= crate::MAX_ELEMENTS => Ok(BasisMatroid::uniform(r, n)),
        ("P", &[n]) => family(Family::P(n)),
        ("P'", &[n]) => family(Family::Pprime(n)),
        ("A", &[n]) => family(Family::A(n)),
        ("B", &[n, k]) => family(Family::B(n, k)),
        ("C", &[nk, k]) if nk >= k => family(Family::C(nk - k, k)),
        ("D", &[n]) => family(Family::D(n)),
        ("E", &[n]) => family(Family::E(n)),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let b33 = fam(Family::B(3, 3));
        assert_eq!((b33.n(), b33.rank()), (9, 3));
        let a3 = fam(Family::A(3));
        assert_eq!((a3.n(), a3.rank()), (6, 3));
        let p3 = fam(Family::Pprime(3));
        assert_eq!((p3.n(), p3.rank()), (5, 3));
        let e4 = fam(Family::E(4));
        assert_eq!((e4.n(), e4.rank()), (8, 4));
        assert_eq!(e4, fam(Family::D(4)).dual());
        let c42 = fam(Family::C(2, 2));
        assert_eq!((c42.n(), c42.rank()), (6, 4));
    }

    #[test]
    fn bad_parameters() {
        for f in [
            Family::P(1),
            Family::Pprime(2),
            Family::A(2),
            Family::B(2, 3),
            Family::B(3, 1),
            Family::C(1, 2),
            Family::D(3),
            Family::E(3),
        ] {
            assert!(matches!(family(f), Err(Error::BadParameters(_))), "{f:?}");
        }
    }

    #[test]
    fn figure_graph_shapes() {
        let edges = |n: &str| figure_graph(n).unwrap().num_edges();
        assert_eq!(edges("A3"), 6);
        assert_eq!(edges("W^3"), 6);
        assert_eq!(edges("R3"), 7);
        assert_eq!(edges("R4"), 7);
        assert_eq!(edges("B3,3"), 9);
        assert!(matches!(figure_graph("K5"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn whirl_and_wheel() {
        assert_eq!(wheel3().num_bases(), 16);
        assert_eq!(whirl3().num_bases(), 17);
    }

    #[test]
    fn list_shape() {
        let list = theorem1_list();
        assert_eq!(list.len(), 19);
        let count = |g| list.iter().filter(|e| e.group == g).count();
        assert_eq!((count(Group::I), count(Group::II), count(Group::III)), (7, 8, 4));
        assert!(list.iter().all(|e| e.matroid.n() <= 9 && e.matroid.rank() <= 5));
        let t = theorem1_entry("T3(U1,2+U3,5)").unwrap();
        assert_eq!(t.matroid.num_bases(), 30);
        assert_eq!(theorem1_entry("W3").unwrap().matroid.num_bases(), 16);
        assert_eq!(
            theorem1_entry("U5,7").unwrap().lattice_path(),
            Some(&LatticePathPresentation::full_grid(2, 5))
        );
    }

    #[test]
    fn excluded_minor_order() {
        let names: Vec<String> = lattice_path_excluded_minors(8)
            .unwrap()
            .into_iter()
            .map(|nm| nm.name)
            .collect();
        assert_eq!(
            names,
            ["W3", "W^3", "A3", "B2,2", "C4,2", "R3", "R4", "A4", "B3,2", "C5,2", "D4", "E4"]
        );
    }

    #[test]
    fn lookup_names() {
        assert_eq!(lookup("U2,4").unwrap(), BasisMatroid::uniform(2, 4));
        assert_eq!(lookup("C6,2").unwrap(), fam(Family::C(4, 2)));
        assert_eq!(lookup("P'4").unwrap(), fam(Family::Pprime(4)));
        assert_eq!(lookup("W^3").unwrap(), whirl3());
        assert!(lookup("Z9").is_err());
    }
}
