//! Line-oriented text formats and DOT export.
//!
//! Every format ignores blank lines and anything after `#`. Emitters write
//! one record per line with LF endings, and parsing their output gives back
//! an equal value.
//!
//! | format | header | records |
//! |---|---|---|
//! | finite graph | `finite n` | `e u v`, `vlabel v tok`, `elabel u v tok` |
//! | periodic graph | `periodic n` | `e u v d` |
//! | assignment | `period p` | `vcolor v r c`, `dir u v d r f`, `sel u v d r f`, `ecolor u v d r c` |
//! | finite coloring | `coloring n` | `c v color` |
//! | labelled digraph | `digraph n` | `a tail head label` |
//! | permutations | | `perm i0 i1 ..` |
//! | subshift | `sft a` | `forbid word` |
//!
//! Assignment files may also carry `verdict` and `colors` lines, which are
//! skipped on input. A subshift word over an alphabet of at most 10 letters
//! is written as one token of digits (`forbid 011`); larger alphabets use
//! one token per letter (`forbid 0 11 3`).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gadgets::LabeledDigraph;
use crate::graph::{FiniteGraph, GroupGenerators, Permutation, VertexColoring};
use crate::periodic::{AssignmentKind, EdgeSpec, PeriodicAssignment, PeriodicGraph, Window};
use crate::solver::SftSpec;

struct Record<'a> {
    line: usize,
    fields: Vec<&'a str>,
}

impl Record<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: self.line,
            msg: msg.into(),
        })
    }

    fn arity(&self, n: usize) -> Result<()> {
        if self.fields.len() != n + 1 {
            return self.err(format!("`{}` takes {n} fields", self.fields[0]));
        }
        Ok(())
    }

    fn num<T: FromStr>(&self, i: usize) -> Result<T> {
        match self.fields[i].parse() {
            Ok(x) => Ok(x),
            Err(_) => self.err(format!("`{}` is not a valid number", self.fields[i])),
        }
    }

    fn keyword(&self) -> &str {
        self.fields[0]
    }
}

fn records(text: &str) -> Vec<Record<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let fields: Vec<&str> = body.split_whitespace().collect();
            (!fields.is_empty()).then_some(Record { line: i + 1, fields })
        })
        .collect()
}

/// Splits off the header record and returns its single numeric field.
fn header<'a>(text: &'a str, keyword: &str) -> Result<(usize, Vec<Record<'a>>)> {
    let mut recs = records(text).into_iter();
    let Some(first) = recs.next() else {
        return Err(Error::Parse {
            line: 1,
            msg: format!("missing `{keyword}` header"),
        });
    };
    if first.keyword() != keyword {
        return first.err(format!("expected `{keyword}` header, found `{}`", first.keyword()));
    }
    first.arity(1)?;
    Ok((first.num(1)?, recs.collect()))
}

fn unknown<T>(r: &Record) -> Result<T> {
    r.err(format!("unknown record `{}`", r.keyword()))
}

fn located<T>(r: &Record, result: Result<T>) -> Result<T> {
    result.or_else(|e| match e {
        Error::Input(msg) => r.err(msg),
        other => Err(other),
    })
}

pub fn parse_finite(text: &str) -> Result<FiniteGraph> {
    let (n, recs) = header(text, "finite")?;
    let mut g = FiniteGraph::new(n);
    let mut labels = Vec::new();
    for r in &recs {
        match r.keyword() {
            "e" => {
                r.arity(2)?;
                if !located(r, g.add_edge(r.num(1)?, r.num(2)?))? {
                    return r.err("duplicate edge");
                }
            }
            "vlabel" | "elabel" => labels.push(r),
            _ => return unknown(r),
        }
    }
    // labels may precede the edges they name
    for r in labels {
        if r.keyword() == "vlabel" {
            r.arity(2)?;
            located(r, g.set_vertex_label(r.num(1)?, r.fields[2]))?;
        } else {
            r.arity(3)?;
            located(r, g.set_edge_label(r.num(1)?, r.num(2)?, r.fields[3]))?;
        }
    }
    Ok(g)
}

pub fn emit_finite(g: &FiniteGraph) -> String {
    let mut out = format!("finite {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").expect("writing to a string");
    }
    for (v, label) in g.vertex_labels() {
        writeln!(out, "vlabel {v} {label}").expect("writing to a string");
    }
    for ((u, v), label) in g.edge_labels() {
        writeln!(out, "elabel {u} {v} {label}").expect("writing to a string");
    }
    out
}

pub fn parse_periodic(text: &str) -> Result<PeriodicGraph> {
    let (n, recs) = header(text, "periodic")?;
    let mut raw = Vec::new();
    for r in &recs {
        if r.keyword() != "e" {
            return unknown(r);
        }
        r.arity(3)?;
        raw.push((r.num(1)?, r.num(2)?, r.num(3)?));
    }
    // report the first offending line when the whole set is rejected
    for (i, r) in recs.iter().enumerate() {
        located(r, PeriodicGraph::new(n, raw[..=i].iter().copied()))?;
    }
    PeriodicGraph::new(n, raw)
}

pub fn emit_periodic(pg: &PeriodicGraph) -> String {
    let mut out = format!("periodic {}\n", pg.cell_size());
    for s in pg.specs() {
        writeln!(out, "e {} {} {}", s.u, s.v, s.d).expect("writing to a string");
    }
    out
}

fn kind_keyword(kind: AssignmentKind) -> &'static str {
    match kind {
        AssignmentKind::VertexColoring => "vcolor",
        AssignmentKind::Orientation => "dir",
        AssignmentKind::EdgeSubset => "sel",
        AssignmentKind::EdgeColoring => "ecolor",
    }
}

/// Reads an assignment of `pg`; every item must get exactly one value on
/// every residue.
pub fn parse_assignment(text: &str, pg: &PeriodicGraph) -> Result<PeriodicAssignment> {
    let recs: Vec<Record> = records(text)
        .into_iter()
        .filter(|r| !matches!(r.keyword(), "verdict" | "colors"))
        .collect();
    let Some(first) = recs.first() else {
        return Err(Error::Parse {
            line: 1,
            msg: "missing `period` header".into(),
        });
    };
    if first.keyword() != "period" {
        return first.err(format!("expected `period` header, found `{}`", first.keyword()));
    }
    first.arity(1)?;
    let p: usize = first.num(1)?;
    if p == 0 {
        return first.err("period must be positive");
    }
    let mut kind = None;
    let mut table: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for r in &recs[1..] {
        let this = match r.keyword() {
            "vcolor" => AssignmentKind::VertexColoring,
            "dir" => AssignmentKind::Orientation,
            "sel" => AssignmentKind::EdgeSubset,
            "ecolor" => AssignmentKind::EdgeColoring,
            _ => return unknown(r),
        };
        if kind.is_some_and(|k| k != this) {
            return r.err("assignment mixes record kinds");
        }
        kind = Some(this);
        let (item, residue, value) = if this.on_vertices() {
            r.arity(3)?;
            let v: usize = r.num(1)?;
            if v >= pg.cell_size() {
                return r.err(format!("cell vertex {v} out of range"));
            }
            (v, r.num(2)?, r.num(3)?)
        } else {
            r.arity(5)?;
            let spec = EdgeSpec {
                u: r.num(1)?,
                v: r.num(2)?,
                d: r.num(3)?,
            };
            let Some(idx) = pg.spec_index(&spec) else {
                return r.err("no such edge spec in the periodic graph");
            };
            (idx, r.num(4)?, r.num(5)?)
        };
        if residue >= p {
            return r.err(format!("residue {residue} is not below the period {p}"));
        }
        if table.insert((residue, item), value).is_some() {
            return r.err("value given twice");
        }
    }
    let kind = kind.unwrap_or(AssignmentKind::VertexColoring);
    let items = if kind.on_vertices() {
        pg.cell_size()
    } else {
        pg.specs().len()
    };
    if table.len() != p * items {
        return Err(Error::Parse {
            line: recs.last().map_or(1, |r| r.line),
            msg: format!("assignment has {} of {} values", table.len(), p * items),
        });
    }
    PeriodicAssignment::new(kind, p, items, table.into_values().collect())
}

/// Writes `period p` followed by one record per item and residue, residue
/// major.
pub fn emit_assignment(pg: &PeriodicGraph, a: &PeriodicAssignment) -> String {
    let mut out = format!("period {}\n", a.period());
    let key = kind_keyword(a.kind());
    for r in 0..a.period() {
        for x in 0..a.items() {
            let value = a.at(x, r as i64);
            if a.kind().on_vertices() {
                writeln!(out, "{key} {x} {r} {value}").expect("writing to a string");
            } else {
                let s = &pg.specs()[x];
                writeln!(out, "{key} {} {} {} {r} {value}", s.u, s.v, s.d).expect("writing to a string");
            }
        }
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<VertexColoring> {
    let (n, recs) = header(text, "coloring")?;
    let mut colors = vec![None; n];
    for r in &recs {
        if r.keyword() != "c" {
            return unknown(r);
        }
        r.arity(2)?;
        let v: usize = r.num(1)?;
        if v >= n {
            return r.err(format!("vertex {v} out of range"));
        }
        if colors[v].replace(r.num(2)?).is_some() {
            return r.err("vertex colored twice");
        }
    }
    match colors.iter().position(Option::is_none) {
        Some(v) => Err(Error::Parse {
            line: recs.last().map_or(1, |r| r.line),
            msg: format!("vertex {v} has no color"),
        }),
        None => Ok(VertexColoring::new(colors.into_iter().flatten().collect())),
    }
}

pub fn emit_coloring(c: &VertexColoring) -> String {
    let mut out = format!("coloring {}\n", c.len());
    for (v, x) in c.colors().iter().enumerate() {
        writeln!(out, "c {v} {x}").expect("writing to a string");
    }
    out
}

pub fn parse_digraph(text: &str) -> Result<LabeledDigraph> {
    let (n, recs) = header(text, "digraph")?;
    let mut arcs = Vec::new();
    for r in &recs {
        if r.keyword() != "a" {
            return unknown(r);
        }
        r.arity(3)?;
        arcs.push((r.num(1)?, r.num(2)?, r.num(3)?));
        located(r, LabeledDigraph::new(n, arcs.last().copied()))?;
    }
    LabeledDigraph::new(n, arcs)
}

pub fn emit_digraph(d: &LabeledDigraph) -> String {
    let mut out = format!("digraph {}\n", d.vertex_count());
    for (t, h, l) in d.arcs() {
        writeln!(out, "a {t} {h} {l}").expect("writing to a string");
    }
    out
}

/// Reads `perm` lines as generators acting on `degree` points.
pub fn parse_permutations(text: &str, degree: usize) -> Result<GroupGenerators> {
    let mut gens = Vec::new();
    for r in records(text) {
        if r.keyword() != "perm" {
            return unknown(&r);
        }
        if r.fields.len() != degree + 1 {
            return r.err(format!("permutation must list {degree} images"));
        }
        let images = (1..=degree).map(|i| r.num(i)).collect::<Result<Vec<usize>>>()?;
        gens.push(located(&r, Permutation::new(images))?);
    }
    GroupGenerators::new(degree, gens)
}

pub fn emit_permutation(p: &Permutation) -> String {
    let images: Vec<String> = p.images().iter().map(usize::to_string).collect();
    format!("perm {}\n", images.join(" "))
}

/// A subshift word in the token convention of its alphabet.
pub fn emit_word(alphabet_size: usize, word: &[usize]) -> String {
    let letters = word.iter().map(usize::to_string);
    if alphabet_size <= 10 {
        letters.collect()
    } else {
        letters.collect::<Vec<_>>().join(" ")
    }
}

pub fn parse_sft(text: &str) -> Result<SftSpec> {
    let (a, recs) = header(text, "sft")?;
    let mut words = Vec::new();
    for r in &recs {
        if r.keyword() != "forbid" {
            return unknown(r);
        }
        if r.fields.len() < 2 {
            return r.err("`forbid` needs a word");
        }
        let word = if a <= 10 {
            r.arity(1)?;
            let word: Option<Vec<usize>> = r.fields[1].chars().map(|ch| ch.to_digit(10).map(|d| d as usize)).collect();
            match word {
                Some(w) => w,
                None => return r.err(format!("`{}` is not a word of digits", r.fields[1])),
            }
        } else {
            (1..r.fields.len()).map(|i| r.num(i)).collect::<Result<_>>()?
        };
        located(r, SftSpec::new(a, [word.clone()]))?;
        words.push(word);
    }
    SftSpec::new(a, words)
}

pub fn emit_sft(spec: &SftSpec) -> String {
    let mut out = format!("sft {}\n", spec.alphabet_size());
    for w in spec.forbidden_words() {
        writeln!(out, "forbid {}", emit_word(spec.alphabet_size(), w)).expect("writing to a string");
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT; labels become node labels and colors `fillcolor`
/// indices into a 12-color scheme.
pub fn finite_dot(g: &FiniteGraph, coloring: Option<&VertexColoring>) -> String {
    let mut out = String::from("graph G {\n  node [colorscheme=set312];\n");
    for v in 0..g.vertex_count() {
        let mut attrs = Vec::new();
        if let Some(label) = g.vertex_label(v) {
            attrs.push(format!("label=\"{}\"", dot_escape(label)));
        }
        if let Some(c) = coloring {
            attrs.push(format!("style=filled, fillcolor={}", c.color(v) % 12 + 1));
        }
        if attrs.is_empty() {
            writeln!(out, "  {v};").expect("writing to a string");
        } else {
            writeln!(out, "  {v} [{}];", attrs.join(", ")).expect("writing to a string");
        }
    }
    for (u, v) in g.edges() {
        match g.edge_label(u, v) {
            Some(l) => writeln!(out, "  {u} -- {v} [label=\"{}\"];", dot_escape(l)),
            None => writeln!(out, "  {u} -- {v};"),
        }
        .expect("writing to a string");
    }
    out.push_str("}\n");
    out
}

/// DOT of a window; node `"v@i"` is cell vertex `v` of lift cell `i`.
pub fn window_dot(w: &Window) -> String {
    let name = |x: usize| {
        let (v, cell) = w.embedding[x];
        format!("\"{v}@{cell}\"")
    };
    let mut out = String::from("graph W {\n");
    for x in 0..w.graph.vertex_count() {
        writeln!(out, "  {};", name(x)).expect("writing to a string");
    }
    for (a, b) in w.graph.edges() {
        writeln!(out, "  {} -- {};", name(a), name(b)).expect("writing to a string");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{default_gadget, fig1_graph};
    use crate::periodic::examples::*;

    #[test]
    fn finite_round_trip() {
        let mut g = fig1_graph(1).unwrap();
        g.set_edge_label(0, 1, "tri").unwrap();
        assert_eq!(parse_finite(&emit_finite(&g)).unwrap(), g);
        let h = default_gadget().graph;
        assert_eq!(parse_finite(&emit_finite(&h)).unwrap(), h);
    }

    #[test]
    fn finite_parse_errors_name_the_line() {
        let err = parse_finite("finite 2\n# c\ne 0 1\ne 0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }));
        assert!(parse_finite("periodic 2\n").is_err());
        assert!(parse_finite("finite 2\ne 0 1\ne 1 0\n").is_err());
        assert!(parse_finite("finite 2\nx 0 1\n").is_err());
    }

    #[test]
    fn periodic_round_trip() {
        for pg in [path(), ladder(), triangular_strip(), four_regular_line()] {
            assert_eq!(parse_periodic(&emit_periodic(&pg)).unwrap(), pg);
        }
        let pg = parse_periodic("periodic 1 # path\n\ne 0 0 -1\n").unwrap();
        assert_eq!(pg, path());
        let err = parse_periodic("periodic 2\ne 0 1 0\ne 1 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn assignment_round_trip() {
        let pg = ladder();
        let a = PeriodicAssignment::new(AssignmentKind::VertexColoring, 2, 2, vec![0, 1, 1, 0]).unwrap();
        let text = emit_assignment(&pg, &a);
        assert_eq!(text, "period 2\nvcolor 0 0 0\nvcolor 1 0 1\nvcolor 0 1 1\nvcolor 1 1 0\n");
        assert_eq!(parse_assignment(&format!("verdict feasible\ncolors 2\n{text}"), &pg).unwrap(), a);
        let s = PeriodicAssignment::new(AssignmentKind::EdgeSubset, 1, 3, vec![1, 0, 0]).unwrap();
        assert_eq!(parse_assignment(&emit_assignment(&pg, &s), &pg).unwrap(), s);
        assert!(parse_assignment("period 1\nvcolor 0 0 0\n", &pg).is_err());
        assert!(parse_assignment("period 1\nsel 0 1 5 0 1\n", &pg).is_err());
    }

    #[test]
    fn other_round_trips() {
        let c = VertexColoring::new(vec![2, 0, 1]);
        assert_eq!(parse_coloring(&emit_coloring(&c)).unwrap(), c);
        let d = crate::gadgets::cyclic_cayley(5, &[1, 2]).unwrap();
        assert_eq!(parse_digraph(&emit_digraph(&d)).unwrap(), d);
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        let group = parse_permutations(&emit_permutation(&p), 3).unwrap();
        assert_eq!(group.generators, vec![p]);
        let spec = SftSpec::new(2, [vec![1, 1], vec![0, 0, 0]]).unwrap();
        assert_eq!(parse_sft(&emit_sft(&spec)).unwrap(), spec);
        let big = SftSpec::new(12, [vec![11, 0]]).unwrap();
        assert_eq!(emit_sft(&big), "sft 12\nforbid 11 0\n");
        assert_eq!(parse_sft(&emit_sft(&big)).unwrap(), big);
        assert!(parse_sft("sft 2\nforbid 2\n").is_err());
    }

    #[test]
    fn dot_output() {
        let g = crate::graph::families::path(2);
        let dot = finite_dot(&g, Some(&VertexColoring::new(vec![0, 1])));
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 1;") && dot.contains("fillcolor=2"));
        let w = path().window(-1, 2).unwrap();
        assert_eq!(window_dot(&w), "graph W {\n  \"0@-1\";\n  \"0@0\";\n  \"0@-1\" -- \"0@0\";\n}\n");
    }
}
