//! JSON documents for graphs, join specifications and generalized joins.
//!
//! Graphs are `{"n": 3, "edges": [[0, 1], [1, 2]]}` with 0-based vertices,
//! `{"named": "cycle:5"}` or `{"family": "petersen", "params": [5, 2]}`.
//! A join specification is
//! `{"host": graph, "m": 2, "factors": [graph, ..], "indexing": [[1, 2, null], ..]}`
//! with 1-based labels (`null` leaves a vertex unlabeled). A generalized join
//! replaces `m` and `indexing` with 0-based `"subsets"` and carries either
//! `"params": {"alpha": "1", "beta": "0", "gamma": "0", "delta": "0"}` or
//! `"preset": "L"`. Exact numbers are written as `"p/q"` strings.

use serde_json::{json, Map, Value};

use crate::algebra::{format_rational, parse_rational, Rational, RationalFunction};
use crate::cospectral::GeneralizedJoinSpec;
use crate::error::{Error, Result};
use crate::families::{parse_named_graph, Family};
use crate::graph::{Graph, UniversalParams};
use crate::join::{IndexingMap, JoinSpec};

/// A parsed specification document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecDocument {
    Join(JoinSpec),
    Generalized(GeneralizedJoinSpec),
}

fn at(pointer: &str, key: impl std::fmt::Display) -> String {
    format!("{pointer}/{key}")
}

fn field<'a>(obj: &'a Map<String, Value>, pointer: &str, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::parse(pointer_or_root(pointer), format!("missing field \"{key}\"")))
}

fn pointer_or_root(pointer: &str) -> String {
    if pointer.is_empty() { "/".into() } else { pointer.into() }
}

fn object<'a>(v: &'a Value, pointer: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::parse(pointer_or_root(pointer), "expected an object"))
}

fn array<'a>(v: &'a Value, pointer: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::parse(pointer_or_root(pointer), "expected an array"))
}

fn index(v: &Value, pointer: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::parse(pointer, "expected a non-negative integer"))
}

fn rational(v: &Value, pointer: &str) -> Result<Rational> {
    let parsed = match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Some(Rational::from_integer(n.as_i64().unwrap().into())),
        Value::Number(n) => parse_rational(&n.to_string()),
        _ => None,
    };
    parsed.ok_or_else(|| Error::parse(pointer, "expected an exact number such as \"3/4\""))
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn read_document(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))
}

fn relocate(e: Error, pointer: &str) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::parse(pointer_or_root(pointer), other.to_string()),
    }
}

pub fn graph_to_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>() })
}

/// Parses a graph object found at `pointer`.
pub fn graph_from_json(v: &Value, pointer: &str) -> Result<Graph> {
    let obj = object(v, pointer)?;
    if let Some(named) = obj.get("named") {
        let s = named.as_str().ok_or_else(|| Error::parse(at(pointer, "named"), "expected a string such as \"cycle:5\""))?;
        return parse_named_graph(s).map_err(|e| relocate(e, &at(pointer, "named")));
    }
    if let Some(family) = obj.get("family") {
        let name = family.as_str().ok_or_else(|| Error::parse(at(pointer, "family"), "expected a family name"))?;
        let family: Family = name.parse().map_err(|e| relocate(e, &at(pointer, "family")))?;
        let params_ptr = at(pointer, "params");
        let args: Vec<String> = array(field(obj, pointer, "params")?, &params_ptr)?.iter().map(text).collect();
        return Ok(family.realize(&args).map_err(|e| relocate(e, &params_ptr))?.direct);
    }
    let n = index(field(obj, pointer, "n")?, &at(pointer, "n"))?;
    let edges_ptr = at(pointer, "edges");
    let edges = array(field(obj, pointer, "edges")?, &edges_ptr)?
        .iter()
        .enumerate()
        .map(|(e, pair)| {
            let p = at(&edges_ptr, e);
            match array(pair, &p)?.as_slice() {
                [u, v] => Ok((index(u, &at(&p, 0))?, index(v, &at(&p, 1))?)),
                _ => Err(Error::parse(p, "expected an edge [u, v]")),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Graph::from_edges(n, &edges).map_err(|e| relocate(e, &edges_ptr))
}

pub fn join_spec_to_json(spec: &JoinSpec) -> Value {
    json!({
        "host": graph_to_json(spec.host()),
        "m": spec.m(),
        "factors": spec.factors().iter().map(graph_to_json).collect::<Vec<_>>(),
        "indexing": spec.indexing().iter().map(|map| map.labels().to_vec()).collect::<Vec<_>>(),
    })
}

fn factors_from_json(obj: &Map<String, Value>) -> Result<(Graph, Vec<Graph>)> {
    let host = graph_from_json(field(obj, "", "host")?, "/host")?;
    let factors = array(field(obj, "", "factors")?, "/factors")?
        .iter()
        .enumerate()
        .map(|(i, f)| graph_from_json(f, &format!("/factors/{i}")))
        .collect::<Result<Vec<_>>>()?;
    if host.n() != factors.len() {
        return Err(Error::parse("/factors", format!("host has {} vertices but {} factors are given", host.n(), factors.len())));
    }
    Ok((host, factors))
}

fn join_spec_from_value(doc: &Value) -> Result<JoinSpec> {
    let obj = object(doc, "")?;
    let (host, factors) = factors_from_json(obj)?;
    let m = index(field(obj, "", "m")?, "/m")?;
    if m == 0 {
        return Err(Error::parse("/m", "m must be at least 1"));
    }
    let rows = array(field(obj, "", "indexing")?, "/indexing")?;
    if rows.len() != factors.len() {
        return Err(Error::parse("/indexing", format!("expected {} label lists, got {}", factors.len(), rows.len())));
    }
    let mut maps = Vec::with_capacity(rows.len());
    for (i, (row, g)) in rows.iter().zip(&factors).enumerate() {
        let p = format!("/indexing/{i}");
        let labels = array(row, &p)?;
        if labels.len() != g.n() {
            return Err(Error::parse(p, format!("factor {} has {} vertices but {} labels", i + 1, g.n(), labels.len())));
        }
        let labels = labels
            .iter()
            .enumerate()
            .map(|(v, l)| {
                if l.is_null() {
                    return Ok(None);
                }
                let c = index(l, &at(&p, v))?;
                if c == 0 || c > m {
                    return Err(Error::parse(at(&p, v), format!("label {c} outside 1..={m}")));
                }
                Ok(Some(c))
            })
            .collect::<Result<Vec<_>>>()?;
        maps.push(IndexingMap::partial(m, labels).map_err(|e| relocate(e, &p))?);
    }
    JoinSpec::new(host, m, factors, maps).map_err(|e| relocate(e, ""))
}

pub fn parse_join_spec(text: &str) -> Result<JoinSpec> {
    join_spec_from_value(&read_document(text)?)
}

pub fn params_to_json(p: &UniversalParams) -> Value {
    json!({
        "alpha": format_rational(&p.alpha),
        "beta": format_rational(&p.beta),
        "gamma": format_rational(&p.gamma),
        "delta": format_rational(&p.delta),
    })
}

fn params_from_json(obj: &Map<String, Value>) -> Result<UniversalParams> {
    if let Some(preset) = obj.get("preset") {
        let s = preset.as_str().ok_or_else(|| Error::parse("/preset", "expected a preset name"))?;
        return s.parse().map_err(|e| relocate(e, "/preset"));
    }
    let Some(params) = obj.get("params") else {
        return Ok(UniversalParams::adjacency());
    };
    let p = object(params, "/params")?;
    let get = |key: &str| -> Result<Rational> {
        match p.get(key) {
            Some(v) => rational(v, &format!("/params/{key}")),
            None => Ok(Rational::from_integer(0.into())),
        }
    };
    UniversalParams::new(get("alpha")?, get("beta")?, get("gamma")?, get("delta")?).map_err(|e| relocate(e, "/params/alpha"))
}

pub fn generalized_spec_to_json(spec: &GeneralizedJoinSpec) -> Value {
    json!({
        "host": graph_to_json(spec.host()),
        "factors": spec.factors().iter().map(graph_to_json).collect::<Vec<_>>(),
        "subsets": spec.subsets(),
        "params": params_to_json(spec.params()),
    })
}

fn generalized_spec_from_value(doc: &Value) -> Result<GeneralizedJoinSpec> {
    let obj = object(doc, "")?;
    let (host, factors) = factors_from_json(obj)?;
    let rows = array(field(obj, "", "subsets")?, "/subsets")?;
    if rows.len() != factors.len() {
        return Err(Error::parse("/subsets", format!("expected {} subsets, got {}", factors.len(), rows.len())));
    }
    let mut subsets = Vec::with_capacity(rows.len());
    for (i, (row, g)) in rows.iter().zip(&factors).enumerate() {
        let p = format!("/subsets/{i}");
        let s = array(row, &p)?
            .iter()
            .enumerate()
            .map(|(j, v)| {
                let x = index(v, &at(&p, j))?;
                if x >= g.n() {
                    return Err(Error::parse(at(&p, j), format!("vertex {x} outside 0..{}", g.n())));
                }
                Ok(x)
            })
            .collect::<Result<Vec<_>>>()?;
        subsets.push(s);
    }
    let params = params_from_json(obj)?;
    GeneralizedJoinSpec::new(host, factors, subsets, params).map_err(|e| relocate(e, ""))
}

pub fn parse_generalized_spec(text: &str) -> Result<GeneralizedJoinSpec> {
    generalized_spec_from_value(&read_document(text)?)
}

/// Parses either document kind; a `"subsets"` field marks a generalized join.
pub fn parse_spec(text: &str) -> Result<SpecDocument> {
    let doc = read_document(text)?;
    if object(&doc, "")?.contains_key("subsets") {
        Ok(SpecDocument::Generalized(generalized_spec_from_value(&doc)?))
    } else {
        Ok(SpecDocument::Join(join_spec_from_value(&doc)?))
    }
}

pub fn ratfun_json(r: &RationalFunction) -> Value {
    json!({ "numerator": r.numerator(), "denominator": r.denominator() })
}

/// Pretty JSON with a trailing newline; key order is fixed by the builders.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
