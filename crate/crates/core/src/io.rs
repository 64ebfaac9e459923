//! JSON file formats for lattices, coefficient maps and function tables.
//!
//! Element references are names from the lattice file or, for chains,
//! decimal indices; JSON integers are accepted as indices everywhere.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice, LatticeKind};
use crate::poly::CoefMap;
use crate::table::FunctionTable;

#[derive(Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum LatticeFile {
    Chain {
        size: usize,
    },
    Table {
        elements: Vec<String>,
        meet: Vec<Vec<Value>>,
        join: Vec<Vec<Value>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionFile {
    lattice: Option<Value>,
    arity: usize,
    values: Vec<Value>,
}

fn malformed(what: &'static str, detail: impl Into<String>) -> Error {
    Error::Malformed {
        what,
        detail: detail.into(),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &'static str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| malformed(what, e.to_string()))
}

fn index_in(names: &[String], v: &Value, field: &str) -> Result<usize> {
    let found = match v {
        Value::Number(n) => n.as_u64().map(|i| i as usize).filter(|&i| i < names.len()),
        Value::String(s) => names.iter().position(|n| n == s),
        _ => None,
    };
    found.ok_or_else(|| malformed("lattice file", format!("field `{field}`: unknown element {v}")))
}

impl LatticeFile {
    pub fn build(&self) -> Result<Lattice> {
        match self {
            LatticeFile::Chain { size } => Lattice::chain(*size),
            LatticeFile::Table {
                elements,
                meet,
                join,
            } => {
                let resolve = |rows: &[Vec<Value>], field: &str| -> Result<Vec<Vec<usize>>> {
                    rows.iter()
                        .map(|row| row.iter().map(|v| index_in(elements, v, field)).collect())
                        .collect()
                };
                Lattice::from_tables(elements.clone(), resolve(meet, "meet")?, resolve(join, "join")?)
            }
        }
    }

    pub fn of(l: &Lattice) -> LatticeFile {
        match l.kind() {
            LatticeKind::Chain => LatticeFile::Chain { size: l.size() },
            LatticeKind::Table => {
                let table = |op: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<Value>> {
                    l.elements()
                        .map(|a| {
                            l.elements()
                                .map(|b| Value::String(l.name(op(a, b)).to_string()))
                                .collect()
                        })
                        .collect()
                };
                LatticeFile::Table {
                    elements: l.names().to_vec(),
                    meet: table(&|a, b| l.meet(a, b)),
                    join: table(&|a, b| l.join(a, b)),
                }
            }
        }
    }
}

pub fn parse_lattice(text: &str) -> Result<Lattice> {
    parse_json::<LatticeFile>(text, "lattice file")?.build()
}

pub fn load_lattice(path: &Path) -> Result<Lattice> {
    parse_lattice(&read(path)?)
}

pub fn lattice_to_json(l: &Lattice) -> String {
    serde_json::to_string_pretty(&LatticeFile::of(l)).expect("serializable")
}

/// Resolves a `lattice` field: a path relative to `base`, or an inline object.
fn resolve_lattice(v: &Value, base: &Path) -> Result<Lattice> {
    match v {
        Value::String(p) => {
            let path = PathBuf::from(p);
            let path = if path.is_absolute() { path } else { base.join(path) };
            load_lattice(&path)
        }
        Value::Object(_) => {
            let file: LatticeFile = serde_json::from_value(v.clone())
                .map_err(|e| malformed("lattice", format!("field `lattice`: {e}")))?;
            file.build()
        }
        _ => Err(malformed("function file", "field `lattice`: expected a path or an object")),
    }
}

fn elem_in(l: &Lattice, v: &Value, pos: usize) -> Result<Elem> {
    let e = match v {
        Value::Number(n) => n
            .as_u64()
            .map(|i| Elem::from_index(i as usize))
            .filter(|&e| l.contains(e)),
        Value::String(s) => l.parse_elem(s).ok(),
        _ => None,
    };
    e.ok_or_else(|| malformed("function file", format!("field `values[{pos}]`: unknown element {v}")))
}

/// A parsed function file: the lattice it refers to plus raw values.
pub struct LoadedFunction {
    pub lattice: Arc<Lattice>,
    pub arity: usize,
    pub values: Vec<Elem>,
}

/// Parses a function file. `fallback` supplies the lattice when the file has
/// no `lattice` field.
pub fn parse_function(text: &str, base: &Path, fallback: Option<Arc<Lattice>>) -> Result<LoadedFunction> {
    let file: FunctionFile = parse_json(text, "function file")?;
    let lattice = match (&file.lattice, fallback) {
        (Some(v), _) => Arc::new(resolve_lattice(v, base)?),
        (None, Some(l)) => l,
        (None, None) => return Err(malformed("function file", "missing field `lattice`")),
    };
    let values = file
        .values
        .iter()
        .enumerate()
        .map(|(i, v)| elem_in(&lattice, v, i))
        .collect::<Result<_>>()?;
    Ok(LoadedFunction {
        lattice,
        arity: file.arity,
        values,
    })
}

fn base_of(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn load_table(path: &Path) -> Result<FunctionTable> {
    let f = parse_function(&read(path)?, &base_of(path), None)?;
    FunctionTable::new(f.lattice, f.arity, f.values)
}

/// Loads a coefficient map (`2^n` values indexed by bitmask).
pub fn load_coefs(path: &Path, fallback: Option<Arc<Lattice>>) -> Result<(Arc<Lattice>, CoefMap)> {
    let f = parse_function(&read(path)?, &base_of(path), fallback)?;
    let c = CoefMap::new(f.arity, f.values)?;
    Ok((f.lattice, c))
}

/// A function file with the lattice inlined and values written by name.
pub fn function_to_json(l: &Lattice, arity: usize, values: &[Elem]) -> String {
    let lattice = serde_json::to_value(LatticeFile::of(l)).expect("serializable");
    let values: Vec<Value> = values.iter().map(|&e| Value::String(l.name(e).to_string())).collect();
    let v = serde_json::json!({ "lattice": lattice, "arity": arity, "values": values });
    serde_json::to_string_pretty(&v).expect("serializable")
}

pub fn table_to_json(f: &FunctionTable) -> String {
    function_to_json(f.lattice(), f.arity(), f.values())
}
