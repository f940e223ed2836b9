//! Line-oriented text formats.
//!
//! ```text
//! matroid <n> <r>        graph <v>          lpm <m> <r>
//! basis e1 .. er         link a b           P <steps>
//!                        loop a             Q <steps>
//!                        free
//! intervals <n> <r>      family <n> <r>
//! interval l u           set e1 e2 ..
//! ```
//!
//! `#` starts a comment line and blank lines are ignored.

use std::fmt::Write as _;

use crate::bicircular::{bicircular_matroid, Edge, MultiGraph};
use crate::isomin::MinorWitness;
use crate::latticepath::{matroid_of_lpm, LatticePathPresentation, StandardPresentation};
use crate::matroid::BasisMatroid;
use crate::set::ElementSet;
use crate::transversal::{matroid_of_family, SetFamily};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Matroid(BasisMatroid),
    Graph(MultiGraph),
    Lpm(LatticePathPresentation),
    Intervals(StandardPresentation),
    Family(SetFamily),
}

impl Input {
    /// The matroid the object presents.
    pub fn to_matroid(&self) -> Result<BasisMatroid> {
        match self {
            Input::Matroid(m) => Ok(m.clone()),
            Input::Graph(g) => bicircular_matroid(g),
            Input::Lpm(l) => Ok(matroid_of_lpm(l)),
            Input::Intervals(s) => Ok(matroid_of_family(&s.to_family())),
            Input::Family(f) => Ok(matroid_of_family(f)),
        }
    }

    pub fn write(&self) -> String {
        match self {
            Input::Matroid(m) => write_matroid(m),
            Input::Graph(g) => write_graph(g),
            Input::Lpm(l) => write_lpm(l),
            Input::Intervals(s) => write_intervals(s),
            Input::Family(f) => write_family(f),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn number(&self) -> Result<usize> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected a number, found {:?}", self.text)))
    }
}

/// Non-comment, non-blank lines, each split into tokens with positions.
fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, ch) in raw.char_indices().chain([(raw.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &raw[s..col],
                        line: i + 1,
                        column: raw[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        lines.push(tokens);
    }
    lines
}

fn end_error(text: &str, message: &str) -> Error {
    Error::Parse {
        line: text.lines().count().max(1),
        column: 1,
        message: message.to_string(),
    }
}

fn header_numbers(tokens: &[Token], count: usize) -> Result<Vec<usize>> {
    if tokens.len() != count + 1 {
        let at = tokens.get(count + 1).unwrap_or(&tokens[tokens.len() - 1]);
        return Err(at.error(format!("`{}` takes {count} numbers", tokens[0].text)));
    }
    tokens[1..].iter().map(Token::number).collect()
}

fn keyword<'a>(tokens: &'a [Token<'a>], expected: &str) -> Result<&'a [Token<'a>]> {
    if tokens[0].text != expected {
        return Err(tokens[0].error(format!("expected `{expected}`, found {:?}", tokens[0].text)));
    }
    Ok(&tokens[1..])
}

fn elements(tokens: &[Token], n: usize) -> Result<Vec<usize>> {
    tokens
        .iter()
        .map(|t| {
            let e = t.number()?;
            if e == 0 || e > n {
                Err(t.error(format!("element {e} outside 1..={n}")))
            } else {
                Ok(e)
            }
        })
        .collect()
}

/// Parses any of the five formats, chosen by the first token.
pub fn parse_input(text: &str) -> Result<Input> {
    let lines = tokenize(text);
    let Some(header) = lines.first() else {
        return Err(end_error(text, "empty input"));
    };
    let body = &lines[1..];
    match header[0].text {
        "matroid" => parse_matroid_body(header, body).map(Input::Matroid),
        "graph" => parse_graph_body(header, body).map(Input::Graph),
        "lpm" => parse_lpm_body(header, body, text).map(Input::Lpm),
        "intervals" => parse_intervals_body(header, body).map(Input::Intervals),
        "family" => parse_family_body(header, body).map(Input::Family),
        other => Err(header[0].error(format!("unknown format {other:?}"))),
    }
}

fn parse_matroid_body(header: &[Token], body: &[Vec<Token>]) -> Result<BasisMatroid> {
    let nr = header_numbers(header, 2)?;
    let (n, r) = (nr[0], nr[1]);
    let mut bases = Vec::with_capacity(body.len());
    for tokens in body {
        let rest = keyword(tokens, "basis")?;
        let b = elements(rest, n)?;
        if b.len() != r {
            return Err(tokens[0].error(format!("basis has {} elements, rank is {r}", b.len())));
        }
        if b.windows(2).any(|w| w[0] >= w[1]) {
            return Err(tokens[0].error("basis elements must be strictly increasing"));
        }
        bases.push(b);
    }
    BasisMatroid::from_bases(n, &bases)
}

fn parse_graph_body(header: &[Token], body: &[Vec<Token>]) -> Result<MultiGraph> {
    let v = header_numbers(header, 1)?[0];
    let mut edges = Vec::with_capacity(body.len());
    for tokens in body {
        let vertex = |t: &Token| -> Result<usize> {
            let a = t.number()?;
            if a == 0 || a > v {
                Err(t.error(format!("vertex {a} outside 1..={v}")))
            } else {
                Ok(a)
            }
        };
        let arity = match tokens[0].text {
            "link" => 2,
            "loop" => 1,
            "free" => 0,
            other => return Err(tokens[0].error(format!("unknown edge kind {other:?}"))),
        };
        if tokens.len() != arity + 1 {
            return Err(tokens[0].error(format!("`{}` takes {arity} vertices", tokens[0].text)));
        }
        edges.push(match arity {
            2 => {
                let (a, b) = (vertex(&tokens[1])?, vertex(&tokens[2])?);
                if a == b {
                    return Err(tokens[2].error("link endpoints must differ"));
                }
                Edge::Link(a, b)
            }
            1 => Edge::Loop(vertex(&tokens[1])?),
            _ => Edge::Free,
        });
    }
    MultiGraph::new(v, edges)
}

fn parse_lpm_body(header: &[Token], body: &[Vec<Token>], text: &str) -> Result<LatticePathPresentation> {
    let mr = header_numbers(header, 2)?;
    let (m, r) = (mr[0], mr[1]);
    let mut paths = [String::new(), String::new()];
    let mut seen = [false, false];
    for tokens in body {
        let slot = match tokens[0].text {
            "P" => 0,
            "Q" => 1,
            other => return Err(tokens[0].error(format!("expected `P` or `Q`, found {other:?}"))),
        };
        if seen[slot] {
            return Err(tokens[0].error("path given twice"));
        }
        if tokens.len() > 2 {
            return Err(tokens[2].error("unexpected token"));
        }
        let s = tokens.get(1).map_or("", |t| t.text);
        if let Some((i, c)) = s.char_indices().find(|(_, c)| !matches!(c, 'N' | 'E')) {
            let t = &tokens[1];
            return Err(Error::Parse {
                line: t.line,
                column: t.column + s[..i].chars().count(),
                message: format!("bad step {c:?}"),
            });
        }
        seen[slot] = true;
        paths[slot] = s.to_string();
    }
    if !seen[0] || !seen[1] {
        return Err(end_error(text, "both `P` and `Q` are required"));
    }
    let l = LatticePathPresentation::from_strings(&paths[0], &paths[1])?;
    if (l.m, l.r) != (m, r) {
        return Err(header[0].error(format!("paths end at ({}, {}), header says ({m}, {r})", l.m, l.r)));
    }
    Ok(l)
}

fn parse_intervals_body(header: &[Token], body: &[Vec<Token>]) -> Result<StandardPresentation> {
    let nr = header_numbers(header, 2)?;
    let (n, r) = (nr[0], nr[1]);
    if body.len() != r {
        return Err(header[0].error(format!("expected {r} intervals, found {}", body.len())));
    }
    let mut intervals = Vec::with_capacity(r);
    for tokens in body {
        let rest = keyword(tokens, "interval")?;
        if rest.len() != 2 {
            return Err(tokens[0].error("`interval` takes two numbers"));
        }
        intervals.push((rest[0].number()?, rest[1].number()?));
    }
    StandardPresentation::new(n, intervals)
}

fn parse_family_body(header: &[Token], body: &[Vec<Token>]) -> Result<SetFamily> {
    let nr = header_numbers(header, 2)?;
    let (n, r) = (nr[0], nr[1]);
    if body.len() != r {
        return Err(header[0].error(format!("expected {r} sets, found {}", body.len())));
    }
    let mut sets = Vec::with_capacity(r);
    for tokens in body {
        let rest = keyword(tokens, "set")?;
        sets.push(elements(rest, n)?.into_iter().collect());
    }
    SetFamily::new(n, sets)
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    let mut s = String::new();
    for (i, e) in items.into_iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        write!(s, "{e}").unwrap();
    }
    s
}

fn keyed(key: &str, items: impl IntoIterator<Item = usize>) -> String {
    let rest = join(items);
    if rest.is_empty() {
        key.to_string()
    } else {
        format!("{key} {rest}")
    }
}

pub fn write_matroid(m: &BasisMatroid) -> String {
    let mut s = format!("matroid {} {}\n", m.n(), m.rank());
    for b in m.bases_lex() {
        s.push_str(&keyed("basis", b));
        s.push('\n');
    }
    s
}

pub fn write_graph(g: &MultiGraph) -> String {
    let mut s = format!("graph {}\n", g.v);
    for e in &g.edges {
        match e {
            Edge::Link(a, b) => writeln!(s, "link {a} {b}"),
            Edge::Loop(a) => writeln!(s, "loop {a}"),
            Edge::Free => writeln!(s, "free"),
        }
        .unwrap();
    }
    s
}

pub fn write_lpm(l: &LatticePathPresentation) -> String {
    format!("lpm {} {}\nP {}\nQ {}\n", l.m, l.r, l.p_string(), l.q_string())
}

pub fn write_intervals(s: &StandardPresentation) -> String {
    let mut out = format!("intervals {} {}\n", s.n, s.rank());
    for (l, u) in &s.intervals {
        writeln!(out, "interval {l} {u}").unwrap();
    }
    out
}

pub fn write_family(f: &SetFamily) -> String {
    let mut out = format!("family {} {}\n", f.n, f.sets.len());
    for set in &f.sets {
        out.push_str(&keyed("set", set.iter()));
        out.push('\n');
    }
    out
}

/// `witness`, `contract`, `delete` and `iso` lines.
pub fn write_witness(w: &MinorWitness) -> String {
    format!(
        "witness {}\n{}\n{}\n{}\n",
        w.target_name,
        keyed("contract", w.contract.iter()),
        keyed("delete", w.delete.iter()),
        keyed("iso", w.iso.iter().copied())
    )
}

pub fn parse_witness(text: &str) -> Result<MinorWitness> {
    let lines = tokenize(text);
    let mut name = None;
    let mut contract = None;
    let mut delete = None;
    let mut iso = None;
    for tokens in &lines {
        let rest = &tokens[1..];
        match tokens[0].text {
            "witness" if rest.len() == 1 => name = Some(rest[0].text.to_string()),
            "contract" => contract = Some(numbers(rest)?.into_iter().collect::<ElementSet>()),
            "delete" => delete = Some(numbers(rest)?.into_iter().collect::<ElementSet>()),
            "iso" => iso = Some(numbers(rest)?),
            _ => return Err(tokens[0].error(format!("unexpected {:?}", tokens[0].text))),
        }
    }
    match (name, contract, delete, iso) {
        (Some(target_name), Some(contract), Some(delete), Some(iso)) => Ok(MinorWitness {
            target_name,
            contract,
            delete,
            iso,
        }),
        _ => Err(end_error(text, "witness block is incomplete")),
    }
}

fn numbers(tokens: &[Token]) -> Result<Vec<usize>> {
    tokens.iter().map(Token::number).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_round_trip() {
        let text = "matroid 3 2\n# U23\nbasis 1 2\n\nbasis 1 3\nbasis 2 3\n";
        let Input::Matroid(m) = parse_input(text).unwrap() else {
            panic!("not a matroid")
        };
        assert_eq!(m, BasisMatroid::uniform(2, 3));
        assert_eq!(write_matroid(&m), "matroid 3 2\nbasis 1 2\nbasis 1 3\nbasis 2 3\n");
    }

    #[test]
    fn rank_zero_matroid() {
        let m = BasisMatroid::uniform(0, 2);
        let text = write_matroid(&m);
        assert_eq!(text, "matroid 2 0\nbasis\n");
        assert_eq!(parse_input(&text).unwrap(), Input::Matroid(m));
    }

    #[test]
    fn ten_element_lpm() {
        let text = "lpm 5 5\nP EEEENNENNN\nQ NENNENEENE\n";
        let Input::Lpm(l) = parse_input(text).unwrap() else {
            panic!("not an lpm")
        };
        assert_eq!(write_lpm(&l), text);
    }

    #[test]
    fn chain_violation() {
        let text = "intervals 4 2\ninterval 1 3\ninterval 1 4\n";
        assert!(matches!(parse_input(text), Err(Error::Validation(_))));
    }

    #[test]
    fn parse_error_positions() {
        match parse_input("matroid 3 2\nbasis 1 x\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 9)),
            other => panic!("{other:?}"),
        }
        match parse_input("lpm 1 1\nP EX\nQ NE\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("{other:?}"),
        }
        match parse_input("bogus 1") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 1)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_input("graph 2\nlink 1 3\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn graph_and_family_round_trip() {
        let text = "graph 2\nlink 1 2\nloop 2\nfree\n";
        assert_eq!(parse_input(text).unwrap().write(), text);
        let text = "family 3 2\nset 1 2\nset\n";
        assert_eq!(parse_input(text).unwrap().write(), text);
    }

    #[test]
    fn witness_round_trip() {
        let w = MinorWitness {
            target_name: "U3,5".into(),
            contract: ElementSet::EMPTY,
            delete: ElementSet::from_elements([6, 7]),
            iso: vec![1, 2, 3, 4, 5],
        };
        let text = write_witness(&w);
        assert_eq!(text, "witness U3,5\ncontract\ndelete 6 7\niso 1 2 3 4 5\n");
        assert_eq!(parse_witness(&text).unwrap(), w);
    }
}
