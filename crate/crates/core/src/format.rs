//! External formats: the hypergraph edge-list text format and the JSON
//! shape for decompositions and candidate-bag files.
//!
//! Text format: optional '%'-prefixed comment lines; each edge written as
//! `name(v1,v2,...)` followed by ',' (more edges follow) or '.' (end);
//! whitespace is insignificant.

use crate::covers::EdgeWeighting;
use crate::decomp::{DecompKind, DecompNode, Decomposition};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    // Strip comments but keep line structure for error positions.
    let mut tokens: Vec<(usize, Token)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        if line.trim_start().starts_with('%') {
            continue;
        }
        tokenize_line(line, lineno, &mut tokens)?;
    }
    let mut edges: Vec<(String, Vec<String>)> = Vec::new();
    let mut pos = 0;
    let mut terminated = false;
    while pos < tokens.len() {
        if terminated {
            let (line, _) = tokens[pos];
            return Err(Error::Parse {
                line,
                msg: "content after final '.'".into(),
            });
        }
        let (line, tok) = &tokens[pos];
        let Token::Name(name) = tok else {
            return Err(Error::Parse {
                line: *line,
                msg: format!("expected edge name, found {}", tokens[pos].1),
            });
        };
        let name = name.clone();
        pos += 1;
        expect(&tokens, &mut pos, Token::Open, *line)?;
        let mut vs: Vec<String> = Vec::new();
        loop {
            match tokens.get(pos) {
                Some((_, Token::Name(v))) => {
                    vs.push(v.clone());
                    pos += 1;
                    match tokens.get(pos) {
                        Some((_, Token::Comma)) => pos += 1,
                        Some((_, Token::Close)) => {}
                        other => {
                            return Err(parse_err(other, *line, "',' or ')' inside edge"));
                        }
                    }
                }
                Some((_, Token::Close)) => break,
                other => return Err(parse_err(other, *line, "vertex name or ')'")),
            }
        }
        let close_line = tokens[pos].0;
        pos += 1; // consume ')'
        if vs.is_empty() {
            return Err(Error::Parse {
                line: close_line,
                msg: format!("empty edge {name:?}"),
            });
        }
        if edges.iter().any(|(n, _)| n == &name) {
            return Err(Error::Parse {
                line: close_line,
                msg: format!("duplicate edge name {name:?}"),
            });
        }
        edges.push((name, vs));
        match tokens.get(pos) {
            Some((_, Token::Comma)) => pos += 1,
            Some((_, Token::Dot)) => {
                pos += 1;
                terminated = true;
            }
            other => return Err(parse_err(other, close_line, "',' or '.' after edge")),
        }
    }
    if edges.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "no edges found".into(),
        });
    }
    if !terminated {
        return Err(Error::Parse {
            line: tokens.last().map(|(l, _)| *l).unwrap_or(1),
            msg: "missing final '.'".into(),
        });
    }
    let spec: Vec<(&str, Vec<&str>)> = edges
        .iter()
        .map(|(n, vs)| (n.as_str(), vs.iter().map(|s| s.as_str()).collect()))
        .collect();
    Hypergraph::from_edge_list(&spec).map_err(|e| match e {
        Error::Precondition(msg) => Error::Parse { line: 1, msg },
        other => other,
    })
}

fn parse_err(found: Option<&(usize, Token)>, line: usize, expected: &str) -> Error {
    match found {
        Some((l, t)) => Error::Parse {
            line: *l,
            msg: format!("expected {expected}, found {t}"),
        },
        None => Error::Parse {
            line,
            msg: format!("unexpected end of input, expected {expected}"),
        },
    }
}

fn expect(tokens: &[(usize, Token)], pos: &mut usize, want: Token, line: usize) -> Result<()> {
    match tokens.get(*pos) {
        Some((_, t)) if *t == want => {
            *pos += 1;
            Ok(())
        }
        other => Err(parse_err(other, line, &format!("{want}"))),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Name(String),
    Open,
    Close,
    Comma,
    Dot,
}

impl std::fmt::Display for Token {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Token::Name(n) => write!(f, "{n:?}"),
            Token::Open => write!(f, "'('"),
            Token::Close => write!(f, "')'"),
            Token::Comma => write!(f, "','"),
            Token::Dot => write!(f, "'.'"),
        }
    }
}

fn tokenize_line(line: &str, lineno: usize, out: &mut Vec<(usize, Token)>) -> Result<()> {
    let mut cur = String::new();
    for ch in line.chars() {
        let tok = match ch {
            '(' => Some(Token::Open),
            ')' => Some(Token::Close),
            ',' => Some(Token::Comma),
            '.' => Some(Token::Dot),
            c if c.is_whitespace() => None,
            '%' => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "'%' comments must start a line".into(),
                })
            }
            c => {
                cur.push(c);
                continue;
            }
        };
        if !cur.is_empty() {
            out.push((lineno, Token::Name(std::mem::take(&mut cur))));
        }
        if let Some(t) = tok {
            out.push((lineno, t));
        }
    }
    if !cur.is_empty() {
        out.push((lineno, Token::Name(cur)));
    }
    Ok(())
}

/// Round-trip-stable serialization: one edge per line, ',' between edges,
/// '.' after the last.
pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    for i in 0..h.n_edges() {
        let vs: Vec<&str> = h.edge(i).iter().map(|v| h.vertex_name(v)).collect();
        out.push_str(h.edge_name(i));
        out.push('(');
        out.push_str(&vs.join(","));
        out.push(')');
        out.push_str(if i + 1 == h.n_edges() { "." } else { "," });
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct DecompJson {
    kind: String,
    root: NodeJson,
}

#[derive(Serialize, Deserialize)]
struct NodeJson {
    id: String,
    bag: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cover: Option<BTreeMap<String, String>>,
    children: Vec<NodeJson>,
}

/// JSON form: {"kind":"TD|GHD|FHD|HD","root":{"id":...,"bag":[...],
/// "cover":{edge:"p/q"},"children":[...]}} with exact rational weights.
pub fn serialize_decomposition(h: &Hypergraph, d: &Decomposition) -> String {
    fn node_json(h: &Hypergraph, d: &Decomposition, u: usize) -> NodeJson {
        let n = &d.nodes[u];
        NodeJson {
            id: n.id.clone(),
            bag: h.vertex_set_names(&n.bag),
            cover: n.cover.as_ref().map(|c| c.to_named(h)),
            children: n.children.iter().map(|&c| node_json(h, d, c)).collect(),
        }
    }
    let json = DecompJson {
        kind: d.kind.as_str().to_string(),
        root: node_json(h, d, d.root),
    };
    serde_json::to_string_pretty(&json).expect("serializable")
}

pub fn parse_decomposition(h: &Hypergraph, text: &str) -> Result<Decomposition> {
    let json: DecompJson = serde_json::from_str(text)
        .map_err(|e| Error::InvalidDecomposition(format!("bad JSON: {e}")))?;
    let kind = DecompKind::parse(&json.kind)?;
    let mut nodes: Vec<DecompNode> = Vec::new();
    fn build(
        h: &Hypergraph,
        kind: DecompKind,
        nj: &NodeJson,
        parent: Option<usize>,
        nodes: &mut Vec<DecompNode>,
    ) -> Result<usize> {
        let bag = h.vertex_set_of(&nj.bag)?;
        let cover = match (&nj.cover, kind) {
            (Some(c), _) => Some(EdgeWeighting::from_named(h, c)?),
            (None, DecompKind::Td) => None,
            (None, _) => None, // validation reports the missing cover
        };
        let idx = nodes.len();
        nodes.push(DecompNode {
            id: nj.id.clone(),
            bag,
            cover,
            parent,
            children: Vec::new(),
        });
        for child in &nj.children {
            let c = build(h, kind, child, Some(idx), nodes)?;
            nodes[idx].children.push(c);
        }
        Ok(idx)
    }
    let root = build(h, kind, &json.root, None, &mut nodes)?;
    Ok(Decomposition { kind, nodes, root })
}

/// Candidate-bag files: a JSON array of vertex-name arrays.
pub fn serialize_bags(h: &Hypergraph, bags: &[VertexSet]) -> String {
    let arrays: Vec<Vec<String>> = bags.iter().map(|b| h.vertex_set_names(b)).collect();
    serde_json::to_string_pretty(&arrays).expect("serializable")
}

pub fn parse_bags(h: &Hypergraph, text: &str) -> Result<Vec<VertexSet>> {
    let arrays: Vec<Vec<String>> = serde_json::from_str(text)
        .map_err(|e| Error::Precondition(format!("bad bags JSON: {e}")))?;
    arrays.iter().map(|a| h.vertex_set_of(a)).collect()
}

/// Truth assignments for the reduction tooling: {"x1":true,...}.
pub fn parse_assignment(n_vars: usize, text: &str) -> Result<Vec<bool>> {
    let map: BTreeMap<String, bool> = serde_json::from_str(text)
        .map_err(|e| Error::Precondition(format!("bad assignment JSON: {e}")))?;
    let mut out = vec![false; n_vars];
    for (name, val) in &map {
        let idx: usize = name
            .strip_prefix('x')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Precondition(format!("bad variable name {name:?}")))?;
        if idx == 0 || idx > n_vars {
            return Err(Error::Precondition(format!(
                "variable {name} out of range 1..={n_vars}"
            )));
        }
        out[idx - 1] = *val;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::WidthMode;
    use crate::rat_int;
    use crate::Rat;
    use num_traits::One;

    #[test]
    fn parse_two_edges() {
        let h = parse_hypergraph("e1(a,b),\ne2(b,c).").unwrap();
        assert_eq!(h.n_vertices(), 3);
        assert_eq!(h.n_edges(), 2);
        assert_eq!(h.vertex_names(), &["a", "b", "c"]);
        assert_eq!(h.edge_name(0), "e1");
    }

    #[test]
    fn parse_single_unit_edge() {
        let h = parse_hypergraph("e1(a).").unwrap();
        assert_eq!(h.n_vertices(), 1);
        assert_eq!(h.n_edges(), 1);
    }

    #[test]
    fn parse_empty_edge_fails() {
        let err = parse_hypergraph("e1().").unwrap_err();
        assert!(err.to_string().contains("empty edge"));
    }

    #[test]
    fn parse_duplicate_name_fails_with_line() {
        let err = parse_hypergraph("e1(a,b),\ne1(b,c).").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
        assert!(msg.contains("duplicate edge name"));
    }

    #[test]
    fn parse_malformed_line_reports_position() {
        let err = parse_hypergraph("e1(a,b)\ne2(c).").unwrap_err();
        assert!(err.to_string().contains("line"), "{err}");
    }

    #[test]
    fn comments_and_whitespace() {
        let h = parse_hypergraph("% a comment\n  e1 ( a , b ) , e2(c).").unwrap();
        assert_eq!(h.n_edges(), 2);
    }

    #[test]
    fn round_trip() {
        let text = "e1(a,b),\ne2(b,c).\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(serialize_hypergraph(&h), text);
        let h2 = parse_hypergraph(&serialize_hypergraph(&h)).unwrap();
        assert_eq!(h2.n_vertices(), h.n_vertices());
        assert_eq!(h2.edge_sets(), h.edge_sets());
    }

    #[test]
    fn decomposition_json_round_trip() {
        let h = parse_hypergraph("e1(a,b),e2(b,c).").unwrap();
        let mut cover = EdgeWeighting::new();
        cover.set(0, Rat::one());
        let mut d = crate::decomp::Decomposition::single(
            DecompKind::Ghd,
            "u0",
            h.vertex_set_of(&["a", "b"]).unwrap(),
            Some(cover),
        );
        let mut c2 = EdgeWeighting::new();
        c2.set(1, Rat::one());
        d.add_child(0, "u1", h.vertex_set_of(&["b", "c"]).unwrap(), Some(c2));
        let json = serialize_decomposition(&h, &d);
        assert!(json.contains("\"e1\": \"1/1\""));
        let d2 = parse_decomposition(&h, &json).unwrap();
        assert_eq!(d2.n_nodes(), 2);
        let r = d2.validate(&h, &rat_int(1), WidthMode::Integral).unwrap();
        assert!(r.is_valid());
    }

    #[test]
    fn single_node_td_json() {
        let h = parse_hypergraph("e1(a,b).").unwrap();
        let d = crate::decomp::Decomposition::single(DecompKind::Td, "u0", h.all_vertices(), None);
        let json = serialize_decomposition(&h, &d);
        assert!(json.contains("\"children\": []"));
        assert!(!json.contains("cover"));
        let d2 = parse_decomposition(&h, &json).unwrap();
        assert_eq!(d2.n_nodes(), 1);
    }

    #[test]
    fn dangling_names_rejected() {
        let h = parse_hypergraph("e1(a,b).").unwrap();
        let bad = r#"{"kind":"TD","root":{"id":"u0","bag":["a","z"],"children":[]}}"#;
        assert!(parse_decomposition(&h, bad).is_err());
        let bad_edge =
            r#"{"kind":"GHD","root":{"id":"u0","bag":["a"],"cover":{"nope":"1/1"},"children":[]}}"#;
        assert!(parse_decomposition(&h, bad_edge).is_err());
    }

    #[test]
    fn bags_round_trip() {
        let h = parse_hypergraph("e1(a,b),e2(b,c).").unwrap();
        let bags = vec![
            h.vertex_set_of(&["a", "b"]).unwrap(),
            h.vertex_set_of(&["b", "c"]).unwrap(),
        ];
        let json = serialize_bags(&h, &bags);
        let parsed = parse_bags(&h, &json).unwrap();
        assert_eq!(parsed, bags);
    }

    #[test]
    fn assignment_parsing() {
        let a = parse_assignment(3, r#"{"x1":true,"x3":false}"#).unwrap();
        assert_eq!(a, vec![true, false, false]);
        assert!(parse_assignment(2, r#"{"x5":true}"#).is_err());
    }
}
