//! Graph exchange formats.
//!
//! Three surfaces: a text edge-list (`"V E"` header line, then one `"u v"`
//! line per edge, loops written `"v v"`), a JSON mirror
//! `{"vertices": V, "edges": [[u,v],...]}`, and DOT export where parallel
//! edges and loops render as distinct edges. Readers sniff the format by
//! the first non-whitespace byte.

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;
use crate::pants::PantsGraph;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    boundary: Option<usize>,
}

pub fn to_edge_list(g: &MultiGraph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn from_edge_list(text: &str) -> Result<MultiGraph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge-list input".into()))?;
    let mut parts = header.split_whitespace();
    let v: usize = parse_num(parts.next(), "vertex count")?;
    let e: usize = parse_num(parts.next(), "edge count")?;
    if parts.next().is_some() {
        return Err(Error::Parse("trailing tokens on header line".into()));
    }
    let mut edges = Vec::with_capacity(e);
    for line in lines {
        let mut parts = line.split_whitespace();
        let a: u32 = parse_num(parts.next(), "edge endpoint")?;
        let b: u32 = parse_num(parts.next(), "edge endpoint")?;
        if parts.next().is_some() {
            return Err(Error::Parse(format!(
                "trailing tokens on edge line {line:?}"
            )));
        }
        edges.push((a, b));
    }
    if edges.len() != e {
        return Err(Error::Parse(format!(
            "header declares {e} edges but {} were given",
            edges.len()
        )));
    }
    MultiGraph::new(v, edges)
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::Parse(format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::Parse(format!("invalid {what} {tok:?}")))
}

pub fn to_json(g: &MultiGraph) -> String {
    serde_json::to_string(&GraphJson {
        vertices: g.vertex_count(),
        edges: g.edges().to_vec(),
        genus: None,
        boundary: None,
    })
    .expect("graph serializes")
}

pub fn pants_to_json(p: &PantsGraph) -> String {
    serde_json::to_string(&GraphJson {
        vertices: p.graph().vertex_count(),
        edges: p.graph().edges().to_vec(),
        genus: Some(p.genus()),
        boundary: Some(p.boundary()),
    })
    .expect("graph serializes")
}

pub fn from_json(text: &str) -> Result<MultiGraph> {
    let parsed: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad graph JSON: {e}")))?;
    let g = MultiGraph::new(parsed.vertices, parsed.edges)?;
    if parsed.genus.is_some() || parsed.boundary.is_some() {
        // Pants JSON: the declared signature must match the recomputed one.
        let p = PantsGraph::validate(g.clone())?;
        if parsed.genus.is_some_and(|x| x != p.genus())
            || parsed.boundary.is_some_and(|x| x != p.boundary())
        {
            return Err(Error::Parse(format!(
                "declared signature (g={:?}, n={:?}) does not match recomputed ({}, {})",
                parsed.genus,
                parsed.boundary,
                p.genus(),
                p.boundary()
            )));
        }
    }
    Ok(g)
}

/// Reads either format, deciding by the first non-whitespace byte.
pub fn sniff_parse(text: &str) -> Result<MultiGraph> {
    match text.trim_start().bytes().next() {
        Some(b'{') => from_json(text),
        Some(_) => from_edge_list(text),
        None => Err(Error::Parse("empty graph input".into())),
    }
}

pub fn to_dot(g: &MultiGraph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        s.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}
