//! JSON encodings of groups, operations, maps and structures.
//!
//! A group is either a catalog name (`"S3"`) or an inline object
//! `{"name": ..., "table": [[...]]}`. Structures are
//! `{"kind", "group", "sigma"?, "circ"?, "dot"?}`; a `{"structure": ...}`
//! wrapper, as written by `convert`, is also accepted on input.

use std::sync::Arc;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;
use thiserror::Error;

use crate::group::{catalog, EndoMap, FiniteGroup, GroupError};
use crate::ops::{BinOpTable, OpError};
use crate::structures::{AlgebraObject, Kind, StructureError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("invalid group: {0}")]
    Group(#[from] GroupError),
    #[error("invalid operation table `{component}`: {source}")]
    Op { component: &'static str, source: OpError },
    #[error("invalid structure: {0}")]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum GroupSpec {
    Name(String),
    Inline {
        name: Option<String>,
        order: Option<usize>,
        table: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IdentityPolicy {
    /// Identity must already be element 0 (other components refer to the
    /// given labels).
    Strict,
    /// Identity is moved to 0 if needed.
    Normalize,
}

fn build_group(spec: GroupSpec, policy: IdentityPolicy) -> Result<FiniteGroup, GroupError> {
    match spec {
        GroupSpec::Name(name) => catalog::by_name(&name).ok_or(GroupError::UnknownGroup(name)),
        GroupSpec::Inline { name, order, table } => {
            if let Some(declared) = order {
                if declared != table.len() {
                    return Err(GroupError::OrderMismatch {
                        declared,
                        actual: table.len(),
                    });
                }
            }
            let name = name.unwrap_or_else(|| "G".to_string());
            match policy {
                IdentityPolicy::Strict => FiniteGroup::validate(&table, &name),
                IdentityPolicy::Normalize => FiniteGroup::validate_normalized(&table, &name),
            }
        }
    }
}

/// Parses a group document: a catalog name (bare or quoted) or an inline
/// table, whose identity is moved to index 0 if necessary.
pub fn parse_group(text: &str) -> Result<FiniteGroup, JsonError> {
    let trimmed = text.trim();
    if let Some(g) = catalog::by_name(trimmed) {
        return Ok(g);
    }
    let mut value: Value = serde_json::from_str(trimmed)?;
    if let Some(inner) = value.get_mut("group") {
        value = inner.take();
    }
    let spec: GroupSpec = serde_json::from_value(value)?;
    Ok(build_group(spec, IdentityPolicy::Normalize)?)
}

/// A catalog name if the group is a catalog group, otherwise its table.
pub fn group_value(g: &FiniteGroup) -> Value {
    match catalog::catalog_name(g) {
        Some(name) => Value::String(name.to_string()),
        None => serde_json::json!({"name": g.name(), "order": g.order(), "table": g.rows()}),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StructureSpec {
    kind: String,
    group: GroupSpec,
    sigma: Option<Vec<usize>>,
    circ: Option<Vec<Vec<usize>>>,
    dot: Option<Vec<Vec<usize>>>,
}

fn table(component: &'static str, rows: Option<Vec<Vec<usize>>>) -> Result<Option<BinOpTable>, JsonError> {
    rows.map(|r| BinOpTable::from_rows(&r).map_err(|source| JsonError::Op { component, source }))
        .transpose()
}

pub fn structure_from_value(mut value: Value) -> Result<AlgebraObject, JsonError> {
    if let Some(inner) = value.get_mut("structure") {
        value = inner.take();
    }
    let spec: StructureSpec = serde_json::from_value(value)?;
    let kind: Kind = spec.kind.parse()?;
    let group = Arc::new(build_group(spec.group, IdentityPolicy::Strict)?);
    let n = group.order();
    let sigma = spec.sigma.map(|images| EndoMap::checked(&group, images)).transpose()?;
    let circ = table("circ", spec.circ)?;
    let dot = table("dot", spec.dot)?;
    if let Some(t) = circ.iter().chain(dot.iter()).find(|t| t.order() != n) {
        return Err(StructureError::CarrierMismatch {
            component: if Some(t) == circ.as_ref() { "circ" } else { "dot" },
            expected: n,
            found: t.order(),
        }
        .into());
    }
    Ok(AlgebraObject::new(kind, group, sigma, circ, dot)?)
}

pub fn parse_structure(text: &str) -> Result<AlgebraObject, JsonError> {
    structure_from_value(serde_json::from_str(text)?)
}

pub fn structure_to_value(obj: &AlgebraObject) -> Value {
    serde_json::to_value(obj).expect("structures always serialize")
}

/// Stable pretty rendering with a trailing newline. Arrays of scalars (table
/// rows, maps, element lists) stay on one line.
pub fn to_pretty(value: &impl Serialize) -> String {
    let value = serde_json::to_value(value).expect("values always serialize");
    let mut s = String::new();
    write_value(&mut s, &value, 0);
    s.push('\n');
    s
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |out: &mut String, d: usize| out.extend(std::iter::repeat_n("  ", d));
    match v {
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, x, depth + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

impl Serialize for AlgebraObject {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("kind", &self.kind())?;
        map.serialize_entry("group", &group_value(self.group()))?;
        if let Some(s) = self.sigma() {
            map.serialize_entry("sigma", s.images())?;
        }
        if let Some(c) = self.circ() {
            map.serialize_entry("circ", &c.rows())?;
        }
        if let Some(d) = self.dot() {
            map.serialize_entry("dot", &d.rows())?;
        }
        map.end()
    }
}

/// `{"group": ..., "table": [[...]]}`.
pub fn parse_operation(text: &str) -> Result<(FiniteGroup, BinOpTable), JsonError> {
    #[derive(Deserialize)]
    struct Spec {
        group: GroupSpec,
        table: Vec<Vec<usize>>,
    }
    let spec: Spec = serde_json::from_str(text)?;
    let g = build_group(spec.group, IdentityPolicy::Strict)?;
    let t = table("table", Some(spec.table))?.unwrap();
    if t.order() != g.order() {
        return Err(OpError::CarrierMismatch {
            left: g.order(),
            right: t.order(),
        })
        .map_err(|source| JsonError::Op {
            component: "table",
            source,
        });
    }
    Ok((g, t))
}

/// `{"group": ..., "images": [...]}`.
pub fn parse_map(text: &str) -> Result<(FiniteGroup, EndoMap), JsonError> {
    #[derive(Deserialize)]
    struct Spec {
        group: GroupSpec,
        images: Vec<usize>,
    }
    let spec: Spec = serde_json::from_str(text)?;
    let g = build_group(spec.group, IdentityPolicy::Strict)?;
    let m = EndoMap::checked(&g, spec.images)?;
    Ok((g, m))
}
