//! JSON encodings of monads, algebras, monoids and monoid homomorphisms.
//!
//! An algebra is `{"carrier": [labels], "structure": {T-label: label}}`, where the
//! keys name elements of T(carrier) as `FinSet::label_of` prints them (`{a,b}` for
//! subsets, `<a:1,b:0>` for vectors). `{"free": [labels]}` is accepted as shorthand
//! for the free algebra on those generators.

use std::collections::HashMap;
use std::path::Path;

use serde_json::{Map, Value};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::finset::{BaseKind, FinSet};
use crate::monad::Monad;
use crate::monoidal::Monoidal;
use crate::actions::MonoidObject;

/// Structure tables larger than this are written as index arrays only.
pub const LABELLED_TABLE_LIMIT: usize = 4096;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))
}

pub fn read_json(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_err(format!("cannot read {path}: {e}")))?;
    parse_json(&text)
}

/// A monad from a name (`identity`, `powerset`, `vector_space`, `vector_space:3`, `vector_space(3)`)
/// or an inline object `{"name": ..., "p": ...}`.
pub fn parse_monad(spec: &str, base: BaseKind) -> Result<Monad> {
    let spec = spec.trim();
    if spec.starts_with('{') {
        let v = parse_json(spec)?;
        let name = v.get("name").and_then(Value::as_str).ok_or_else(|| parse_err("monad object needs a \"name\""))?;
        let p = match v.get("p") {
            None | Some(Value::Null) => None,
            Some(p) => Some(p.as_u64().ok_or_else(|| parse_err("\"p\" must be a positive integer"))? as u32),
        };
        return Monad::from_name(name, p, base);
    }
    let spec = spec.strip_suffix(')').map(|s| s.replacen('(', ":", 1)).unwrap_or_else(|| spec.to_string());
    let (name, p) = match spec.split_once(':') {
        Some((n, p)) => (n, Some(p.parse::<u32>().map_err(|_| parse_err(format!("bad characteristic in {spec:?}")))?)),
        None => (spec.as_str(), None),
    };
    Monad::from_name(name, p, base)
}

fn string_list(v: &Value, what: &str) -> Result<Vec<String>> {
    let arr = v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array of labels")))?;
    arr.iter()
        .map(|x| match x {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) => Ok(n.to_string()),
            _ => Err(parse_err(format!("{what} entries must be strings"))),
        })
        .collect()
}

fn label_value(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

/// Splits at commas outside any bracket.
fn top_level_parts(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '{' | '<' | '(' => depth += 1,
            '}' | '>' | ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// A subset or vector label with its entries sorted, so `{b,a}` and `{a,b}` agree.
fn unordered_key(label: &str) -> String {
    let bracketed = |open, close| label.starts_with(open) && label.ends_with(close) && label.len() >= 2;
    for (open, close) in [('{', '}'), ('<', '>')] {
        if bracketed(open, close) {
            let inner = &label[1..label.len() - 1];
            if inner.is_empty() {
                return label.to_string();
            }
            let mut parts: Vec<String> = top_level_parts(inner).into_iter().map(unordered_key).collect();
            parts.sort();
            return format!("{open}{}{close}", parts.join(","));
        }
    }
    label.to_string()
}

/// Reads a labelled table `dom -> cod` from a JSON object keyed by domain labels.
/// With `unordered`, subset and vector keys may list their entries in any order.
fn parse_table(obj: &Value, dom: &FinSet, cod: &HashMap<String, usize>, what: &str, unordered: bool) -> Result<Vec<usize>> {
    let obj = obj.as_object().ok_or_else(|| parse_err(format!("{what} must be an object")))?;
    let key = |l: &str| if unordered { unordered_key(l) } else { l.to_string() };
    let index: HashMap<String, usize> = (0..dom.size()).map(|i| (key(&dom.label(i)), i)).collect();
    let mut table = vec![usize::MAX; dom.size()];
    for (k, v) in obj {
        let &i = index.get(&key(k)).ok_or_else(|| parse_err(format!("{what}: unknown key {k:?}")))?;
        let l = label_value(v).ok_or_else(|| parse_err(format!("{what}: value for {k:?} must be a label")))?;
        table[i] = *cod.get(&l).ok_or_else(|| parse_err(format!("{what}: {l:?} is not a carrier element")))?;
    }
    if let Some(i) = table.iter().position(|&v| v == usize::MAX) {
        return Err(parse_err(format!("{what}: missing entry for {:?}", dom.label(i))));
    }
    Ok(table)
}

pub fn parse_algebra(m: &Monad, v: &Value) -> Result<Algebra> {
    if let Some(gens) = v.get("free") {
        let labels = string_list(gens, "free")?;
        return Algebra::free(m, &FinSet::atoms(&labels).map_err(|e| parse_err(e.to_string()))?);
    }
    let labels = string_list(v.get("carrier").ok_or_else(|| parse_err("algebra needs \"carrier\""))?, "carrier")?;
    let carrier = FinSet::atoms(&labels).map_err(|e| parse_err(e.to_string()))?;
    let tset = m.t_set(&carrier)?;
    let cod = carrier.index_map();
    let structure = v.get("structure").ok_or_else(|| parse_err("algebra needs \"structure\""))?;
    let table = parse_table(structure, &tset, &cod, "structure", true)?;
    Algebra::from_table(m, carrier, table)
}

pub fn load_algebra(m: &Monad, path: &str) -> Result<Algebra> {
    parse_algebra(m, &read_json(path)?)
}

/// `{"algebra": A, "multiplication": {"(x,y)": z}, "unit": e}`; the multiplication is
/// a bimorphism on the base tensor A⊗A, keyed by its labels.
pub fn parse_monoid(mon: &Monoidal, v: &Value) -> Result<MonoidObject> {
    let m = mon.m;
    let alg = parse_algebra(m, v.get("algebra").ok_or_else(|| parse_err("monoid needs \"algebra\""))?)?;
    let dom = m.base.tensor(&alg.carrier, &alg.carrier);
    let cod = alg.carrier.index_map();
    let mul = parse_table(v.get("multiplication").ok_or_else(|| parse_err("monoid needs \"multiplication\""))?, &dom, &cod, "multiplication", false)?;
    let unit = match v.get("unit").and_then(label_value) {
        Some(l) => *cod.get(&l).ok_or_else(|| parse_err(format!("unit {l:?} is not a carrier element")))?,
        None if m.base == BaseKind::Cocartesian => 0,
        None => return Err(parse_err("monoid needs \"unit\"")),
    };
    MonoidObject::from_bimorphism(mon, &alg, &mul, unit)
}

/// A monoid from a file, or one of the builtin names `V3`, `C2`, `Fp2`.
pub fn load_monoid(mon: &Monoidal, spec: &str) -> Result<MonoidObject> {
    match spec {
        "V3" | "v3" => crate::actions::v3(mon),
        "C2" | "c2" => crate::actions::c2_monoid(mon),
        "Fp2" | "fp2" => crate::actions::fp_squared(mon),
        path => parse_monoid(mon, &read_json(path)?),
    }
}

/// `{"source": N, "target": M, "map": {n: m}}`; N and M are inline monoids, builtin
/// names, or paths relative to the file's directory.
pub struct MonoidHom {
    pub source: MonoidObject,
    pub target: MonoidObject,
    pub map: Vec<usize>,
}

pub fn parse_monoid_hom(mon: &Monoidal, v: &Value, dir: &Path) -> Result<MonoidHom> {
    let field = |k: &str| v.get(k).ok_or_else(|| parse_err(format!("monoid homomorphism needs {k:?}")));
    let monoid = |k: &str| match field(k)? {
        Value::String(s) if dir.join(s).exists() => load_monoid(mon, &dir.join(s).to_string_lossy()),
        Value::String(s) => load_monoid(mon, s),
        other => parse_monoid(mon, other),
    };
    let (source, target) = (monoid("source")?, monoid("target")?);
    let map = parse_table(field("map")?, &source.alg.carrier, &target.alg.carrier.index_map(), "map", false)?;
    Ok(MonoidHom { source, target, map })
}

pub fn load_monoid_hom(mon: &Monoidal, path: &str) -> Result<MonoidHom> {
    let dir = Path::new(path).parent().unwrap_or(Path::new("."));
    parse_monoid_hom(mon, &read_json(path)?, dir)
}

/// A labelled table as a JSON object.
pub fn labelled(dom: &FinSet, cod: &FinSet, table: &[usize]) -> Value {
    let mut obj = Map::new();
    for (i, &v) in table.iter().enumerate() {
        obj.insert(dom.label(i), Value::String(cod.label(v)));
    }
    Value::Object(obj)
}

/// The algebra in the input encoding, or `null` structure when T(A) is too large to list.
pub fn algebra_json(m: &Monad, a: &Algebra) -> Result<Value> {
    let mut obj = Map::new();
    obj.insert("carrier".into(), Value::from(a.labels()));
    let fits = m.t_size(a.size()).is_some_and(|s| s <= LABELLED_TABLE_LIMIT);
    let structure = if fits { labelled(&m.t_set(&a.carrier)?, &a.carrier, &a.table(m)?) } else { Value::Null };
    obj.insert("structure".into(), structure);
    Ok(Value::Object(obj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::chain;

    #[test]
    fn algebra_roundtrip() {
        let m = Monad::powerset(BaseKind::Cartesian);
        let c3 = chain(&m, 3).unwrap();
        let v = algebra_json(&m, &c3).unwrap();
        assert_eq!(v["structure"]["{0,2}"], "2");
        assert_eq!(parse_algebra(&m, &v).unwrap(), c3);
    }

    #[test]
    fn missing_entry_is_a_parse_error() {
        let m = Monad::powerset(BaseKind::Cartesian);
        let v = parse_json(r#"{"carrier":["a"],"structure":{"{}":"a"}}"#).unwrap();
        assert!(matches!(parse_algebra(&m, &v), Err(Error::Parse(_))));
    }

    #[test]
    fn subset_keys_are_order_insensitive() {
        assert_eq!(unordered_key("{{x1},{},{x0,x1}}"), unordered_key("{{},{x1,x0},{x1}}"));
        assert_ne!(unordered_key("(a,b)"), unordered_key("(b,a)"));
    }

    #[test]
    fn monad_specs() {
        let b = BaseKind::Cartesian;
        assert_eq!(parse_monad("vector_space:3", b).unwrap().name(), Monad::vector_space(3, b).unwrap().name());
        assert!(parse_monad(r#"{"name":"vector_space","p":2}"#, b).is_ok());
        assert!(parse_monad("bogus", b).is_err());
    }
}
