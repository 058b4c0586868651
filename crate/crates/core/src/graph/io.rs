//! Reading and writing graphs.
//!
//! Two formats are supported:
//!
//! * `dimacs` — PACE treewidth format: optional `c` comment lines, a header
//!   `p tw <n> <m>`, then one 1-based edge per line.
//! * `edgelist` — first line `<n>`, then one 0-based `<u> <v>` edge per line.
//!
//! Writers emit canonical output (edges sorted, lowest endpoint first), so
//! parse/write round-trips are bit-exact.

use super::Graph;
use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::io::BufRead;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    EdgeList,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimacs" => Ok(Format::Dimacs),
            "edgelist" => Ok(Format::EdgeList),
            other => Err(Error::Invalid(format!("unknown graph format `{other}`"))),
        }
    }
}

pub fn parse_graph<R: BufRead>(reader: R, format: Format) -> Result<Graph> {
    match format {
        Format::Dimacs => parse_dimacs(reader),
        Format::EdgeList => parse_edgelist(reader),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs => write_dimacs(g),
        Format::EdgeList => write_edgelist(g),
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn split_two(s: &str, line: usize) -> Result<(usize, usize)> {
    let mut it = s.split_whitespace();
    let u = it
        .next()
        .ok_or_else(|| parse_err(line, "expected two vertex ids"))?
        .parse::<usize>()
        .map_err(|_| parse_err(line, "bad vertex id"))?;
    let v = it
        .next()
        .ok_or_else(|| parse_err(line, "expected two vertex ids"))?
        .parse::<usize>()
        .map_err(|_| parse_err(line, "bad vertex id"))?;
    if it.next().is_some() {
        return Err(parse_err(line, "trailing tokens after edge"));
    }
    Ok((u, v))
}

fn parse_dimacs<R: BufRead>(reader: R) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut declared_m = 0usize;
    let mut edge_lines = 0usize;
    let mut line_no = 0usize;
    for line in reader.lines() {
        line_no += 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('p') {
            if graph.is_some() {
                return Err(parse_err(line_no, "duplicate problem line"));
            }
            let mut it = rest.split_whitespace();
            if it.next() != Some("tw") {
                return Err(parse_err(line_no, "expected `p tw <n> <m>`"));
            }
            let n = it
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| parse_err(line_no, "bad vertex count in header"))?;
            declared_m = it
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| parse_err(line_no, "bad edge count in header"))?;
            if it.next().is_some() {
                return Err(parse_err(line_no, "trailing tokens in header"));
            }
            graph = Some(Graph::empty(n));
            continue;
        }
        let g = graph
            .as_mut()
            .ok_or_else(|| parse_err(line_no, "edge before `p tw` header"))?;
        let (u, v) = split_two(trimmed, line_no)?;
        if u == 0 || v == 0 {
            return Err(parse_err(line_no, "dimacs vertices are 1-based"));
        }
        edge_lines += 1;
        if edge_lines > declared_m {
            return Err(parse_err(line_no, "more edge lines than declared in header"));
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        g.add_edge(u - 1, v - 1)?;
    }
    let g = graph.ok_or_else(|| parse_err(line_no, "missing `p tw` header"))?;
    if edge_lines != declared_m {
        return Err(parse_err(
            line_no,
            format!("header declares {declared_m} edges but {edge_lines} edge lines found"),
        ));
    }
    Ok(g)
}

fn parse_edgelist<R: BufRead>(reader: R) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut line_no = 0usize;
    for line in reader.lines() {
        line_no += 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        match graph.as_mut() {
            None => {
                let n = trimmed
                    .parse::<usize>()
                    .map_err(|_| parse_err(line_no, "first line must be the vertex count"))?;
                graph = Some(Graph::empty(n));
            }
            Some(g) => {
                let (u, v) = split_two(trimmed, line_no)?;
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
                }
                g.add_edge(u, v)?;
            }
        }
    }
    graph.ok_or_else(|| parse_err(line_no, "empty input"))
}

fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p tw {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

fn write_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str, f: Format) -> Result<Graph> {
        parse_graph(std::io::Cursor::new(s), f)
    }

    #[test]
    fn dimacs_path_on_three() {
        let g = parse("c a path\np tw 3 2\n1 2\n2 3\n", Format::Dimacs).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
    }

    #[test]
    fn edgelist_empty_graph() {
        let g = parse("4\n", Format::EdgeList).unwrap();
        assert_eq!((g.n(), g.m()), (4, 0));
    }

    #[test]
    fn self_loop_is_an_error() {
        let err = parse("p tw 2 1\n1 1\n", Format::Dimacs).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(parse("3\n1 1\n", Format::EdgeList).is_err());
    }

    #[test]
    fn out_of_range_vertex() {
        let err = parse("p tw 2 1\n1 5\n", Format::Dimacs).unwrap_err();
        assert!(matches!(err, Error::VertexOutOfRange { vertex: 4, n: 2 }), "{err}");
    }

    #[test]
    fn edge_count_mismatch() {
        assert!(parse("p tw 3 2\n1 2\n", Format::Dimacs).is_err());
        assert!(parse("p tw 3 1\n1 2\n2 3\n", Format::Dimacs).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse("5\n0 1\n1 0\n0 1\n", Format::EdgeList).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn round_trips_are_bit_exact() {
        let g = crate::graph::generate::random(9, 0.45, 3);
        for f in [Format::Dimacs, Format::EdgeList] {
            let text = write_graph(&g, f);
            let back = parse(&text, f).unwrap();
            assert_eq!(back, g);
            assert_eq!(write_graph(&back, f), text);
        }
    }
}
