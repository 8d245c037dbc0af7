//! Text formats: the MGF mixed-graph interchange format, graph6 for
//! undirected scaffolds, the lift-specification language, and DOT export.
//!
//! All emitters are deterministic (elements sorted, LF endings) and MGF
//! parsing reports errors with 1-based line numbers.

use crate::constructions::lift::{ElementKind, LiftLink, LiftNode, LiftSpec};
use crate::graph::{Element, MixedGraph};
use std::fmt::Write as _;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("line {line}: expected header `mgf <n>`")]
    BadHeader { line: usize },
    #[error("line {line}: malformed element line")]
    BadElement { line: usize },
    #[error("line {line}: vertex id out of range")]
    VertexOutOfRange { line: usize },
    #[error("line {line}: duplicate element")]
    DuplicateElement { line: usize },
    #[error("line {line}: self-loop")]
    SelfLoop { line: usize },
    #[error("graph6: {what}")]
    BadGraph6 { what: String },
    #[error("line {line}: {what}")]
    BadLiftLine { line: usize, what: String },
    #[error("{what}")]
    Unsupported { what: String },
}

/// A parsed MGF file: the graph plus optional comment-borne metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MgfDocument {
    pub graph: MixedGraph,
    /// From a `# name: ...` comment.
    pub name: Option<String>,
    /// From a `# expect: r,z,g` comment.
    pub expect: Option<(usize, usize, usize)>,
}

impl MgfDocument {
    pub fn parse(text: &str) -> Result<MgfDocument, IoError> {
        let mut n: Option<usize> = None;
        let mut header_line = 0;
        let mut name = None;
        let mut expect = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        let mut lines_of: Vec<(Element, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.trim();
            if body.is_empty() {
                continue;
            }
            if let Some(comment) = body.strip_prefix('#') {
                let comment = comment.trim();
                if let Some(v) = comment.strip_prefix("name:") {
                    name = Some(v.trim().to_string());
                } else if let Some(v) = comment.strip_prefix("expect:") {
                    let parts: Vec<_> = v.split(',').map(str::trim).collect();
                    if parts.len() == 3 {
                        if let (Ok(r), Ok(z), Ok(g)) = (parts[0].parse(), parts[1].parse(), parts[2].parse()) {
                            expect = Some((r, z, g));
                        }
                    }
                }
                continue;
            }
            let mut words = body.split_ascii_whitespace();
            let keyword = words.next().unwrap_or("");
            if n.is_none() {
                if keyword != "mgf" {
                    return Err(IoError::BadHeader { line });
                }
                let count = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or(IoError::BadHeader { line })?;
                if words.next().is_some() {
                    return Err(IoError::BadHeader { line });
                }
                n = Some(count);
                header_line = line;
                continue;
            }
            let n = n.unwrap();
            let parse_pair = |mut words: std::str::SplitAsciiWhitespace<'_>| -> Result<(usize, usize), IoError> {
                let u = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or(IoError::BadElement { line })?;
                let v = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or(IoError::BadElement { line })?;
                if words.next().is_some() {
                    return Err(IoError::BadElement { line });
                }
                if u >= n || v >= n {
                    return Err(IoError::VertexOutOfRange { line });
                }
                if u == v {
                    return Err(IoError::SelfLoop { line });
                }
                Ok((u, v))
            };
            match keyword {
                "e" => {
                    let (u, v) = parse_pair(words)?;
                    let el = Element::edge(u, v);
                    if lines_of.iter().any(|(other, _)| *other == el) {
                        return Err(IoError::DuplicateElement { line });
                    }
                    lines_of.push((el, line));
                    edges.push((u, v));
                }
                "a" => {
                    let (u, v) = parse_pair(words)?;
                    let el = Element::arc(u, v);
                    if lines_of.iter().any(|(other, _)| *other == el) {
                        return Err(IoError::DuplicateElement { line });
                    }
                    lines_of.push((el, line));
                    arcs.push((u, v));
                }
                _ => return Err(IoError::BadElement { line }),
            }
        }
        let n = n.ok_or(IoError::BadHeader { line: header_line.max(1) })?;
        let graph = MixedGraph::new(n, &edges, &arcs).expect("mgf parser pre-validated the elements");
        Ok(MgfDocument { graph, name, expect })
    }

    /// Normalized text: header, metadata comments, then sorted element lines.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        writeln!(out, "mgf {}", self.graph.order()).unwrap();
        if let Some(name) = &self.name {
            writeln!(out, "# name: {name}").unwrap();
        }
        if let Some((r, z, g)) = self.expect {
            writeln!(out, "# expect: {r},{z},{g}").unwrap();
        }
        for &(u, v) in self.graph.edges() {
            writeln!(out, "e {u} {v}").unwrap();
        }
        for &(u, v) in self.graph.arcs() {
            writeln!(out, "a {u} {v}").unwrap();
        }
        out
    }
}

pub fn parse_mgf(text: &str) -> Result<MixedGraph, IoError> {
    Ok(MgfDocument::parse(text)?.graph)
}

pub fn emit_mgf(graph: &MixedGraph) -> String {
    MgfDocument {
        graph: graph.clone(),
        name: None,
        expect: None,
    }
    .emit()
}

// ---------------------------------------------------------------------------
// graph6

fn graph6_size(bytes: &[u8]) -> Result<(usize, usize), IoError> {
    let bad = |what: &str| IoError::BadGraph6 { what: what.to_string() };
    let val = |b: u8| -> Result<usize, IoError> {
        if !(63..=126).contains(&b) {
            return Err(bad("byte outside printable graph6 range"));
        }
        Ok((b - 63) as usize)
    };
    if bytes.is_empty() {
        return Err(bad("empty line"));
    }
    if bytes[0] != b'~' {
        return Ok((val(bytes[0])?, 1));
    }
    if bytes.len() >= 2 && bytes[1] != b'~' {
        if bytes.len() < 4 {
            return Err(bad("truncated long-form order"));
        }
        let n = (val(bytes[1])? << 12) | (val(bytes[2])? << 6) | val(bytes[3])?;
        return Ok((n, 4));
    }
    if bytes.len() < 8 {
        return Err(bad("truncated long-form order"));
    }
    let mut n = 0usize;
    for &b in &bytes[2..8] {
        n = (n << 6) | val(b)?;
    }
    Ok((n, 8))
}

/// Decodes one graph6 line into an arc-free graph.
pub fn parse_graph6(line: &str) -> Result<MixedGraph, IoError> {
    let bad = |what: &str| IoError::BadGraph6 { what: what.to_string() };
    let bytes = line.trim_end().as_bytes();
    let (n, skip) = graph6_size(bytes)?;
    let body = &bytes[skip..];
    let bits_needed = n
        .checked_mul(n.saturating_sub(1))
        .ok_or_else(|| bad("declared order overflows the adjacency size"))?
        / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if body.len() != bytes_needed {
        return Err(bad("adjacency bitstring has the wrong length"));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(bad("byte outside printable graph6 range"));
            }
            let chunk = byte - 63;
            if chunk & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    MixedGraph::new(n, &edges, &[]).map_err(|e| bad(&e.to_string()))
}

/// Encodes an arc-free graph as one graph6 line (no trailing newline).
pub fn emit_graph6(graph: &MixedGraph) -> Result<String, IoError> {
    if !graph.arcs().is_empty() {
        return Err(IoError::Unsupported {
            what: "graph6 cannot represent arcs".to_string(),
        });
    }
    let n = graph.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    } else {
        return Err(IoError::Unsupported {
            what: "graph6 order limit exceeded".to_string(),
        });
    }
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if graph.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (chunk << (6 - filled)));
    }
    Ok(String::from_utf8(out).unwrap())
}

/// Reads a whitespace-separated list of graph6 lines (one per line).
pub fn parse_graph6_file(text: &str) -> Result<Vec<MixedGraph>, IoError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_graph6)
        .collect()
}

// ---------------------------------------------------------------------------
// Lift specifications

/// Parses the lift-specification language:
/// `m <int>` once, then `node` lines each opening a node scope,
/// `self <step> e|a` lines inside a scope, and
/// `link <a> <b> <offset> e|a` lines anywhere after the nodes they name.
pub fn parse_lift_spec(text: &str) -> Result<LiftSpec, IoError> {
    let err = |line: usize, what: &str| IoError::BadLiftLine {
        line,
        what: what.to_string(),
    };
    let mut m: Option<usize> = None;
    let mut nodes: Vec<LiftNode> = Vec::new();
    let mut links: Vec<LiftLink> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = body.split_ascii_whitespace().collect();
        let kind_of = |w: &str| match w {
            "e" => Some(ElementKind::Edge),
            "a" => Some(ElementKind::Arc),
            _ => None,
        };
        match words[0] {
            "m" => {
                if m.is_some() {
                    return Err(err(line, "duplicate `m` line"));
                }
                let v = words
                    .get(1)
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or_else(|| err(line, "expected `m <int>`"))?;
                m = Some(v);
            }
            "node" => {
                if m.is_none() {
                    return Err(err(line, "`node` before `m`"));
                }
                nodes.push(LiftNode { self_steps: Vec::new() });
            }
            "self" => {
                let node = nodes.last_mut().ok_or_else(|| err(line, "`self` outside a node scope"))?;
                if words.len() != 3 {
                    return Err(err(line, "expected `self <step> e|a`"));
                }
                let step = words[1].parse::<usize>().map_err(|_| err(line, "bad self step"))?;
                let kind = kind_of(words[2]).ok_or_else(|| err(line, "element kind must be e or a"))?;
                node.self_steps.push((step, kind));
            }
            "link" => {
                if m.is_none() {
                    return Err(err(line, "`link` before `m`"));
                }
                if words.len() != 5 {
                    return Err(err(line, "expected `link <a> <b> <offset> e|a`"));
                }
                let a = words[1].parse::<usize>().map_err(|_| err(line, "bad link endpoint"))?;
                let b = words[2].parse::<usize>().map_err(|_| err(line, "bad link endpoint"))?;
                let offset = words[3].parse::<usize>().map_err(|_| err(line, "bad link offset"))?;
                let kind = kind_of(words[4]).ok_or_else(|| err(line, "element kind must be e or a"))?;
                links.push(LiftLink { a, b, offset, kind });
            }
            _ => return Err(err(line, "unknown directive")),
        }
    }
    let m = m.ok_or_else(|| err(1, "missing `m` line"))?;
    Ok(LiftSpec { m, nodes, links })
}

/// Renders a lift specification in the same language.
pub fn emit_lift_spec(spec: &LiftSpec) -> String {
    let mut out = String::new();
    writeln!(out, "m {}", spec.m).unwrap();
    for node in &spec.nodes {
        writeln!(out, "node").unwrap();
        for &(step, kind) in &node.self_steps {
            let k = if kind == ElementKind::Edge { "e" } else { "a" };
            writeln!(out, "self {step} {k}").unwrap();
        }
    }
    for link in &spec.links {
        let k = if link.kind == ElementKind::Edge { "e" } else { "a" };
        writeln!(out, "link {} {} {} {}", link.a, link.b, link.offset, k).unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// DOT export

/// Emits DOT text: a plain `graph` with `--` statements when the graph has
/// no arcs, otherwise a `digraph` where undirected edges are arrowless
/// `->` statements.
pub fn emit_dot(graph: &MixedGraph) -> String {
    let mut out = String::new();
    if graph.arcs().is_empty() {
        writeln!(out, "graph g {{").unwrap();
        for v in 0..graph.order() {
            writeln!(out, "  {v};").unwrap();
        }
        for &(u, v) in graph.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    } else {
        writeln!(out, "digraph g {{").unwrap();
        for v in 0..graph.order() {
            writeln!(out, "  {v};").unwrap();
        }
        for &(u, v) in graph.edges() {
            writeln!(out, "  {u} -> {v} [dir=none];").unwrap();
        }
        for &(u, v) in graph.arcs() {
            writeln!(out, "  {u} -> {v};").unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::constructions::ConstructionId;

    #[test]
    fn parses_minimal_mixed_graph() {
        let g = parse_mgf("mgf 2\na 0 1\ne 0 1\n").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.girth(), Some(2));
    }

    #[test]
    fn parse_accepts_unordered_edge_and_normalizes() {
        let g = parse_mgf("mgf 3\ne 2 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 2)]);
        assert_eq!(emit_mgf(&g), "mgf 3\ne 0 2\n");
    }

    #[test]
    fn mgf_errors_carry_line_numbers() {
        match MgfDocument::parse("mgf 3\ne 0 3\n") {
            Err(IoError::VertexOutOfRange { line: 2 }) => {}
            other => panic!("expected out-of-range at line 2, got {other:?}"),
        }
        match MgfDocument::parse("mgf 3\n\n# fine\ne 0 0\n") {
            Err(IoError::SelfLoop { line: 4 }) => {}
            other => panic!("expected self-loop at line 4, got {other:?}"),
        }
        match MgfDocument::parse("mgf 3\ne 0 1\ne 1 0\n") {
            Err(IoError::DuplicateElement { line: 3 }) => {}
            other => panic!("expected duplicate at line 3, got {other:?}"),
        }
        match MgfDocument::parse("graph 3\n") {
            Err(IoError::BadHeader { line: 1 }) => {}
            other => panic!("expected bad header, got {other:?}"),
        }
        match MgfDocument::parse("mgf 3\nq 0 1\n") {
            Err(IoError::BadElement { line: 2 }) => {}
            other => panic!("expected bad element, got {other:?}"),
        }
    }

    #[test]
    fn mgf_round_trip_preserves_fingerprint() {
        let g = ConstructionId::Graph316.build().unwrap();
        let back = parse_mgf(&emit_mgf(&g)).unwrap();
        assert_eq!(back, g);
        assert_eq!(
            canonical_form(&back).fingerprint(),
            canonical_form(&g).fingerprint()
        );
    }

    #[test]
    fn mgf_metadata_survives_normalization() {
        let text = "mgf 4\n# name: box\n# expect: 2,0,4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n";
        let doc = MgfDocument::parse(text).unwrap();
        assert_eq!(doc.name.as_deref(), Some("box"));
        assert_eq!(doc.expect, Some((2, 0, 4)));
        assert_eq!(MgfDocument::parse(&doc.emit()).unwrap(), doc);
        assert_eq!(doc.emit(), text);
    }

    #[test]
    fn graph6_known_decodes() {
        let empty = parse_graph6("D??").unwrap();
        assert_eq!(empty.order(), 5);
        assert!(empty.edges().is_empty());
        let four = parse_graph6("DQc").unwrap();
        assert_eq!(four.order(), 5);
        assert_eq!(four.edges(), &[(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn graph6_round_trips_catalog_undirected_parts() {
        let hs = ConstructionId::HoffmanSingleton.build().unwrap();
        let line = emit_graph6(&hs).unwrap();
        let back = parse_graph6(&line).unwrap();
        assert_eq!(back, hs);
        assert_eq!(emit_graph6(&back).unwrap(), line);
    }

    #[test]
    fn graph6_long_form_order() {
        let path: Vec<(usize, usize)> = (0..99).map(|i| (i, i + 1)).collect();
        let g = MixedGraph::new(100, &path, &[]).unwrap();
        let line = emit_graph6(&g).unwrap();
        assert!(line.starts_with('~'));
        assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_malformed_lines() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D???").is_err());
        assert!(parse_graph6("D?\u{7f}").is_err());
        // A very-long-form order near 2^36 must fail cleanly, not overflow
        // while sizing the adjacency bitstring.
        assert!(parse_graph6("~~~~~not graph6").is_err());
        let with_arc = MixedGraph::new(2, &[], &[(0, 1)]).unwrap();
        assert!(emit_graph6(&with_arc).is_err());
    }

    #[test]
    fn lift_spec_round_trips() {
        use crate::constructions::builtin_lift_spec;
        for name in ["lift317", "lift318", "lift415", "lift416", "lift516", "circulant225", "graph226"] {
            let spec = builtin_lift_spec(name).unwrap();
            let text = emit_lift_spec(&spec);
            let back = parse_lift_spec(&text).unwrap();
            assert_eq!(back, spec, "{name} lift spec round-trip");
        }
    }

    #[test]
    fn lift_spec_parse_errors() {
        assert!(matches!(parse_lift_spec("node\n"), Err(IoError::BadLiftLine { line: 1, .. })));
        assert!(matches!(parse_lift_spec("m 5\nself 1 e\n"), Err(IoError::BadLiftLine { line: 2, .. })));
        assert!(matches!(parse_lift_spec("m 5\nnode\nself 1 q\n"), Err(IoError::BadLiftLine { line: 3, .. })));
        assert!(matches!(parse_lift_spec(""), Err(IoError::BadLiftLine { line: 1, .. })));
        assert!(matches!(parse_lift_spec("m 5\nm 6\n"), Err(IoError::BadLiftLine { line: 2, .. })));
    }

    #[test]
    fn dot_styles_follow_the_relations() {
        let edge_only = MixedGraph::new(2, &[(0, 1)], &[]).unwrap();
        let dot = emit_dot(&edge_only);
        assert!(dot.starts_with("graph"));
        assert!(dot.contains("0 -- 1;"));
        let mixed = MixedGraph::new(2, &[(0, 1)], &[(1, 0)]).unwrap();
        let dot = emit_dot(&mixed);
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("0 -> 1 [dir=none];"));
        assert!(dot.contains("1 -> 0;"));
    }

    #[test]
    fn dot_statement_counts_for_large_catalog_entry() {
        let g = ConstructionId::Graph315.build().unwrap();
        let dot = emit_dot(&g);
        let nodes = dot.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("->")).count();
        let edges = dot.lines().filter(|l| l.contains("[dir=none]")).count();
        let arcs = dot.lines().filter(|l| l.contains("->") && !l.contains("[dir=none]")).count();
        assert_eq!(nodes, 24);
        assert_eq!(edges, 36);
        assert_eq!(arcs, 24);
    }
}
