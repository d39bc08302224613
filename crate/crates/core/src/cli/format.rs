//! Hypergraph file formats.
//!
//! Line format, one element per line, document order defines all orderings:
//!
//! ```text
//! # comment
//! v v1
//! e e12
//! i v1 e12 +
//! ```
//!
//! The structured form is JSON with the same content:
//! `{"vertices": [..], "edges": [..], "incidences": [{"vertex", "edge", "sign"}]}`
//! where `sign` is `"+"`, `"-"`, `1` or `-1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{HypergraphBuilder, OrientedHypergraph, Sign};

pub fn parse_text(input: &str) -> Result<OrientedHypergraph> {
    let mut b = HypergraphBuilder::new();
    for (n, raw) in input.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields.as_slice() {
            ["v", name] => b.push_vertex(*name),
            ["e", name] => b.push_edge(*name),
            ["i", vertex, edge, sign] => {
                let sign = Sign::parse(sign).map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid sign `{sign}`"),
                })?;
                b.push_incidence(*vertex, *edge, sign.value());
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("unrecognised line `{content}`"),
                })
            }
        }
    }
    b.build()
}

/// Canonical line form: vertices, then edges, then incidences.
pub fn to_text(g: &OrientedHypergraph) -> String {
    let mut out = String::new();
    for v in g.vertex_names() {
        out.push_str(&format!("v {v}\n"));
    }
    for e in g.edge_names() {
        out.push_str(&format!("e {e}\n"));
    }
    for inc in g.incidences() {
        out.push_str(&format!(
            "i {} {} {}\n",
            g.vertex_names()[inc.vertex],
            g.edge_names()[inc.edge],
            inc.sign
        ));
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonHypergraph {
    vertices: Vec<String>,
    edges: Vec<String>,
    incidences: Vec<JsonIncidence>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonIncidence {
    vertex: String,
    edge: String,
    sign: serde_json::Value,
}

pub fn parse_json(input: &str) -> Result<OrientedHypergraph> {
    let doc: JsonHypergraph = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let mut b = HypergraphBuilder::new();
    for v in doc.vertices {
        b.push_vertex(v);
    }
    for e in doc.edges {
        b.push_edge(e);
    }
    for inc in doc.incidences {
        let sign = match &inc.sign {
            serde_json::Value::String(s) => Sign::parse(s)?,
            serde_json::Value::Number(n) => Sign::from_value(n.as_i64().unwrap_or(0))?,
            other => return Err(Error::InvalidSign(other.to_string())),
        };
        b.push_incidence(inc.vertex, inc.edge, sign.value());
    }
    b.build()
}

pub fn to_json(g: &OrientedHypergraph) -> String {
    let doc = JsonHypergraph {
        vertices: g.vertex_names().to_vec(),
        edges: g.edge_names().to_vec(),
        incidences: g
            .incidences()
            .iter()
            .map(|i| JsonIncidence {
                vertex: g.vertex_names()[i.vertex].clone(),
                edge: g.edge_names()[i.edge].clone(),
                sign: serde_json::Value::String(i.sign.to_string()),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

/// Picks the format from the path extension (`.json`), falling back to
/// sniffing a leading `{` for stdin.
pub fn parse_auto(path: &str, content: &str) -> Result<OrientedHypergraph> {
    let is_json = path.ends_with(".json") || (path == "-" && content.trim_start().starts_with('{'));
    if is_json {
        parse_json(content)
    } else {
        parse_text(content)
    }
}
