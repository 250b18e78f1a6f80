//! Reading and writing architecture documents, and DOT export.
//!
//! The document is a JSON object:
//!
//! ```json
//! {
//!   "components": { "A": { "in": ["x"], "out": ["y"], "var": ["st"], "subcomp": [] } },
//!   "levels": { "level0": ["A"] },
//!   "chan_from_ch": { "y": ["x"] },
//!   "chan_from_var": { "y": ["st"] },
//!   "var_from": { "st": ["x"] },
//!   "var_to": { "st": ["y"] },
//!   "highload_channels": ["x"],
//!   "highperf_components": []
//! }
//! ```
//!
//! Every member is optional and absent arrays mean empty. [`serialize`]
//! writes the canonical form: every table entry present, keys and array
//! elements sorted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    Architecture, ArchitectureBuilder, ChannelId, ChannelSet, ComponentId, ComponentRecord,
    ComponentSet, LevelId, VariableId, VariableSet,
};
use crate::optimize;

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArchDocument {
    #[serde(default)]
    components: BTreeMap<ComponentId, ComponentRecord>,
    #[serde(default)]
    levels: BTreeMap<LevelId, ComponentSet>,
    #[serde(default)]
    chan_from_ch: BTreeMap<ChannelId, ChannelSet>,
    #[serde(default)]
    chan_from_var: BTreeMap<ChannelId, VariableSet>,
    #[serde(default)]
    var_from: BTreeMap<VariableId, ChannelSet>,
    #[serde(default)]
    var_to: BTreeMap<VariableId, ChannelSet>,
    #[serde(default)]
    highload_channels: ChannelSet,
    #[serde(default)]
    highperf_components: ComponentSet,
}

/// Parses an architecture document.
pub fn parse(doc: &str) -> Result<Architecture> {
    let doc: ArchDocument = serde_json::from_str(doc).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;

    let mut b = ArchitectureBuilder::new();
    for (c, rec) in doc.components {
        *b.component(c) = rec;
    }
    for (l, members) in doc.levels {
        *b.level(l) = members;
    }
    for (x, ys) in doc.chan_from_ch {
        *b.chan_from_ch(x) = ys;
    }
    for (x, vs) in doc.chan_from_var {
        *b.chan_from_var(x) = vs;
    }
    for (v, xs) in doc.var_from {
        *b.var_from(v) = xs;
    }
    for (v, xs) in doc.var_to {
        *b.var_to(v) = xs;
    }
    *b.highload_channels() = doc.highload_channels;
    *b.highperf_components() = doc.highperf_components;
    b.build()
}

// serde_json appends " at line L column C"; the position has its own fields.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_owned(),
        None => msg.to_owned(),
    }
}

/// Writes the canonical document for `a`, terminated by a newline.
pub fn serialize(a: &Architecture) -> String {
    let doc = ArchDocument {
        components: a.components.clone(),
        levels: a.levels.clone(),
        chan_from_ch: a.chan_from_ch.clone(),
        chan_from_var: a.chan_from_var.clone(),
        var_from: a.var_from.clone(),
        var_to: a.var_to.clone(),
        highload_channels: a.highload_channels.clone(),
        highperf_components: a.highperf_components.clone(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("document serialization is infallible");
    out.push('\n');
    out
}

/// Renders one level as a Graphviz digraph.
///
/// Components on the level become nodes; every channel produced by one level
/// component and consumed by another (or the same) level component becomes a
/// labelled edge. High-load channels are drawn thick and red, high-performance
/// components are filled green.
pub fn export_dot(a: &Architecture, level: &LevelId) -> Result<String> {
    let members = a.lookup_level(level)?;

    let mut edges: Vec<(&ComponentId, &ComponentId, &ChannelId)> = Vec::new();
    for producer in members {
        for x in &a.rec(producer).outputs {
            for consumer in members {
                if a.rec(consumer).inputs.contains(x) {
                    edges.push((producer, consumer, x));
                }
            }
        }
    }
    edges.sort();

    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", dot_id(level.as_str()));
    for c in members {
        if optimize::is_high_perf(a, c)? {
            let _ = writeln!(
                out,
                "  {} [fillcolor=lightgreen,style=filled];",
                dot_id(c.as_str())
            );
        } else {
            let _ = writeln!(out, "  {};", dot_id(c.as_str()));
        }
    }
    for (producer, consumer, x) in edges {
        let _ = write!(
            out,
            "  {} -> {} [label={}",
            dot_id(producer.as_str()),
            dot_id(consumer.as_str()),
            quoted(x.as_str())
        );
        if a.highload_channels.contains(x) {
            out.push_str(",penwidth=3,color=red");
        }
        out.push_str("];\n");
    }
    out.push_str("}\n");
    Ok(out)
}

const DOT_KEYWORDS: [&str; 6] = ["node", "edge", "graph", "digraph", "subgraph", "strict"];

fn dot_id(s: &str) -> String {
    let mut chars = s.chars();
    let plain = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !DOT_KEYWORDS.iter().any(|k| k.eq_ignore_ascii_case(s));
    if plain {
        s.to_owned()
    } else {
        quoted(s)
    }
}

fn quoted(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}
