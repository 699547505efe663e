//! JSON interchange and Graphviz export.
//!
//! JSON form: `{ "elements": [ {"id": 0, "rank": 0, "label": "⊥"}, … ],
//! "covers": [ [0, 1], … ] }`. Bottom and top are inferred from the ranks;
//! covers are written in lexicographic order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::PosetError;
use crate::poset::{Element, GradedPoset};

#[derive(Debug, Serialize, Deserialize)]
struct ElementDoc {
    id: Element,
    rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PosetDoc {
    elements: Vec<ElementDoc>,
    covers: Vec<(Element, Element)>,
}

pub fn to_json(p: &GradedPoset) -> String {
    let doc = PosetDoc {
        elements: (0..p.len())
            .map(|e| ElementDoc {
                id: e,
                rank: p.rank_of(e),
                label: p.label(e).map(str::to_owned),
            })
            .collect(),
        covers: p.covers().collect(),
    };
    serde_json::to_string_pretty(&doc).expect("poset documents serialize")
}

pub fn from_json(text: &str) -> Result<GradedPoset, PosetError> {
    let doc: PosetDoc = serde_json::from_str(text).map_err(|e| PosetError::Format(e.to_string()))?;
    let n = doc.elements.len();
    let mut ranks = vec![None; n];
    let mut labels = vec![None; n];
    for el in doc.elements {
        if el.id >= n {
            return Err(PosetError::Format(format!("element ids must be 0..{n}, found {}", el.id)));
        }
        if ranks[el.id].replace(el.rank).is_some() {
            return Err(PosetError::Format(format!("duplicate element id {}", el.id)));
        }
        labels[el.id] = el.label;
    }
    let ranks = ranks.into_iter().map(|r| r.expect("every id seen once")).collect();
    GradedPoset::new(ranks, doc.covers)?.with_labels(labels)
}

/// Hasse diagram in DOT, drawn bottom-up with one `rank=same` subgraph per
/// level. Nodes are labeled by id, followed by the label text when present.
pub fn to_dot(p: &GradedPoset) -> String {
    let mut out = String::new();
    out.push_str("digraph poset {\n    rankdir=BT;\n    node [shape=box];\n");
    for k in 0..=p.rank() {
        let _ = write!(out, "    subgraph rank_{k} {{\n        rank=same;\n");
        for &e in p.elements_of_rank(k) {
            let text = match p.label(e) {
                Some(l) => format!("{e}: {l}"),
                None => e.to_string(),
            };
            let _ = writeln!(out, "        n{e} [label=\"{}\"];", escape(&text));
        }
        out.push_str("    }\n");
    }
    for (x, y) in p.covers() {
        let _ = writeln!(out, "    n{x} -> n{y};");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
