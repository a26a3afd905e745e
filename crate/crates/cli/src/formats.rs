//! On-disk formats: algebra files and certificates.
//!
//! Algebra files are JSON with exact rational strings and brackets given
//! only for index(a) ≤ index(b); super skew-symmetry fills the rest, which
//! makes inconsistent input unrepresentable. Certificates echo inputs and
//! carry re-checkable witnesses (matrices and subspaces as scalar-string
//! grids).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use twind_core::{parse_field, Character, Field, LieError, Matrix, ModuleRep, Parity, Scalar,
                 Subspace};
use twind_core::induced::{Provenance, Twist};
use twind_core::superalgebra::LieSuperalgebra;

#[derive(Debug, Serialize, Deserialize, Clone, PartialEq, Eq)]
pub struct BasisEntry {
    pub name: String,
    pub parity: u8,
}

/// The algebra file document.
#[derive(Debug, Serialize, Deserialize, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub field: String,
    pub basis: Vec<BasisEntry>,
    /// `"[a,b]"` → (basis name → rational string)
    pub brackets: BTreeMap<String, BTreeMap<String, String>>,
}

/// Parse/IO-level failure: distinct from mathematical negatives so the CLI
/// can keep its exit-code contract.
#[derive(Debug)]
pub enum FormatError {
    Malformed(String),
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormatError::Malformed(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for FormatError {}

fn malformed(msg: impl Into<String>) -> FormatError {
    FormatError::Malformed(msg.into())
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<AlgebraFile, FormatError> {
        serde_json::from_str(text).map_err(|e| malformed(format!("bad algebra file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    /// Build the algebra; structurally bad documents give `FormatError`,
    /// while a well-formed document describing an invalid algebra parses
    /// fine (validation is the caller's job).
    pub fn to_algebra(&self) -> Result<LieSuperalgebra, FormatError> {
        let field = parse_field(&self.field)
            .map_err(|e| malformed(format!("bad field descriptor: {e}")))?;
        let names: Vec<String> = self.basis.iter().map(|b| b.name.clone()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(malformed(format!("duplicate basis name {n:?}")));
            }
        }
        let parities: Vec<Parity> = self
            .basis
            .iter()
            .map(|b| match b.parity {
                0 => Ok(Parity::Even),
                1 => Ok(Parity::Odd),
                p => Err(malformed(format!("parity must be 0 or 1, got {p}"))),
            })
            .collect::<Result<_, _>>()?;
        let n = names.len();
        let index = |name: &str| -> Result<usize, FormatError> {
            names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| malformed(format!("unknown basis name {name:?}")))
        };
        let mut structure = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for (key, coeffs) in &self.brackets {
            let inner = key
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| malformed(format!("bracket key {key:?} must look like [a,b]")))?;
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| malformed(format!("bracket key {key:?} must look like [a,b]")))?;
            let i = index(a.trim())?;
            let j = index(b.trim())?;
            if i > j {
                return Err(malformed(format!(
                    "bracket {key:?} violates the index(a) <= index(b) rule"
                )));
            }
            for (name, value) in coeffs {
                let k = index(name)?;
                let c = parse_rational_scalar(value)?;
                structure[i][j][k] = c;
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let sign = Parity::sign_product(parities[i], parities[j]);
                for k in 0..n {
                    structure[j][i][k] = -&(&sign * &structure[i][j][k]);
                }
            }
        }
        LieSuperalgebra::new(field, names, parities, structure)
            .map_err(|e| malformed(format!("inconsistent algebra document: {e}")))
    }

    /// Canonical document for an algebra: entries for i ≤ j with nonzero
    /// coefficient maps only.
    pub fn from_algebra(g: &LieSuperalgebra) -> AlgebraFile {
        let mut brackets = BTreeMap::new();
        for i in 0..g.dim() {
            for j in i..g.dim() {
                let mut coeffs = BTreeMap::new();
                for k in 0..g.dim() {
                    let c = g.structure_constant(i, j, k);
                    if !c.is_zero() {
                        coeffs.insert(g.name(k).to_string(), c.to_string());
                    }
                }
                if !coeffs.is_empty() {
                    brackets.insert(format!("[{},{}]", g.name(i), g.name(j)), coeffs);
                }
            }
        }
        AlgebraFile {
            field: g.field().to_string(),
            basis: (0..g.dim())
                .map(|i| BasisEntry {
                    name: g.name(i).to_string(),
                    parity: if g.parity(i).is_odd() { 1 } else { 0 },
                })
                .collect(),
            brackets,
        }
    }
}

fn parse_rational_scalar(s: &str) -> Result<Scalar, FormatError> {
    if s.contains("sqrt") {
        return Err(malformed(format!(
            "structure constants must be rational strings, got {s:?}"
        )));
    }
    let sc: Scalar = s
        .parse()
        .map_err(|e: LieError| malformed(format!("bad rational {s:?}: {e}")))?;
    Ok(sc)
}

pub fn parse_scalar(s: &str) -> Result<Scalar, FormatError> {
    s.parse::<Scalar>()
        .map_err(|e| malformed(format!("bad scalar {s:?}: {e}")))
}

/// Matrix as a grid of scalar strings, row-major.
pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    (0..m.cols())
                        .map(|j| Value::String(m.at(i, j).to_string()))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix, FormatError> {
    let rows = v
        .as_array()
        .ok_or_else(|| malformed("matrix must be an array of rows"))?;
    let mut data = Vec::new();
    let mut cols = None;
    for row in rows {
        let entries = row
            .as_array()
            .ok_or_else(|| malformed("matrix row must be an array"))?;
        match cols {
            None => cols = Some(entries.len()),
            Some(c) if c != entries.len() => return Err(malformed("ragged matrix")),
            _ => {}
        }
        for e in entries {
            let s = e.as_str().ok_or_else(|| malformed("matrix entry must be a string"))?;
            data.push(parse_scalar(s)?);
        }
    }
    let cols = cols.unwrap_or(0);
    Ok(Matrix::new(rows.len(), cols, data))
}

pub fn subspace_to_json(s: &Subspace) -> Value {
    matrix_to_json(s.basis())
}

pub fn character_to_json(g: &LieSuperalgebra, c: &Character) -> Value {
    let mut map = serde_json::Map::new();
    for (pos, &i) in g.even_indices().iter().enumerate() {
        map.insert(
            g.name(i).to_string(),
            Value::String(c.value_at(pos).to_string()),
        );
    }
    Value::Object(map)
}

/// A certificate: operation, echoed inputs, outputs, and witnesses that
/// re-verify under the library checks.
#[derive(Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub certificate: String,
    pub algebra: AlgebraFile,
    pub inputs: Value,
    pub outputs: Value,
    pub witnesses: Value,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Certificate, FormatError> {
        serde_json::from_str(text).map_err(|e| malformed(format!("bad certificate: {e}")))
    }

    /// Rebuild the module carried by an induce certificate and re-verify the
    /// representation law against the embedded algebra.
    pub fn load_module(&self) -> Result<(LieSuperalgebra, ModuleRep), FormatError> {
        let g = self.algebra.to_algebra()?;
        let w = self.witnesses.as_object().ok_or_else(|| malformed("missing witnesses"))?;
        let parities_json = w
            .get("module_parities")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("missing module_parities"))?;
        let parities: Vec<Parity> = parities_json
            .iter()
            .map(|v| match v.as_u64() {
                Some(0) => Ok(Parity::Even),
                Some(1) => Ok(Parity::Odd),
                _ => Err(malformed("module parity must be 0 or 1")),
            })
            .collect::<Result<_, _>>()?;
        let actions_json = w
            .get("actions")
            .and_then(Value::as_object)
            .ok_or_else(|| malformed("missing actions"))?;
        let mut actions = Vec::with_capacity(g.dim());
        for i in 0..g.dim() {
            let name = g.name(i);
            let m = actions_json
                .get(name)
                .ok_or_else(|| malformed(format!("missing action for {name}")))?;
            let mat = matrix_from_json(m)?;
            if mat.rows() != parities.len() || mat.cols() != parities.len() {
                return Err(malformed(format!("action for {name} has the wrong shape")));
            }
            actions.push(mat);
        }
        let module = ModuleRep::from_raw(
            actions,
            parities,
            (0..g.dim()).map(|i| g.parity(i)).collect(),
        );
        if !module.representation_law_holds(&g) {
            return Err(malformed(
                "certificate module violates the representation law against the embedded algebra",
            ));
        }
        Ok((g, module))
    }
}

/// Witness block for a constructed module.
pub fn module_witnesses(g: &LieSuperalgebra, w: &ModuleRep) -> Value {
    let mut actions = serde_json::Map::new();
    for i in 0..g.dim() {
        actions.insert(g.name(i).to_string(), matrix_to_json(w.action(i)));
    }
    let labels: Vec<Value> = w
        .labels
        .iter()
        .map(|l| {
            let text = match &w.provenance {
                Some(Provenance { complement, .. }) => l.render(g, complement),
                None => "?".to_string(),
            };
            Value::String(text)
        })
        .collect();
    serde_json::json!({
        "module_parities": w.parities.iter().map(|p| if p.is_odd() {1} else {0}).collect::<Vec<u8>>(),
        "basis_labels": labels,
        "actions": Value::Object(actions),
    })
}

pub fn twist_from_str(s: &str) -> Result<Twist, FormatError> {
    match s {
        "none" => Ok(Twist::None),
        "plus" => Ok(Twist::Plus),
        "minus" => Ok(Twist::Minus),
        other => Err(malformed(format!(
            "twist must be none|plus|minus, got {other:?}"
        ))),
    }
}

/// Parse "--lambda name=p/q,name2=p/q" into a covector on the even basis.
pub fn parse_lambda(g: &LieSuperalgebra, text: &str) -> Result<Vec<Scalar>, FormatError> {
    let mut values = vec![Scalar::zero(); g.even_dim()];
    let t = text.trim();
    if t.is_empty() {
        return Ok(values);
    }
    for part in t.split(',') {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| malformed(format!("lambda entry {part:?} must be name=value")))?;
        let name = name.trim();
        let idx = g
            .index_of(name)
            .ok_or_else(|| malformed(format!("unknown basis name {name:?}")))?;
        if g.parity(idx).is_odd() {
            return Err(malformed(format!(
                "{name} is odd; lambda is a covector on the even part"
            )));
        }
        values[g.block_position(idx)] = parse_rational_scalar(value.trim())?;
    }
    Ok(values)
}

/// Parse "--pol xi_a,xi_b" (names of odd basis vectors; empty = zero space).
pub fn parse_pol(g: &LieSuperalgebra, text: &str) -> Result<Subspace, FormatError> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(Subspace::zero(g.odd_dim()));
    }
    let mut rows = Vec::new();
    for name in t.split(',') {
        let name = name.trim();
        let idx = g
            .index_of(name)
            .ok_or_else(|| malformed(format!("unknown basis name {name:?}")))?;
        if !g.parity(idx).is_odd() {
            return Err(malformed(format!("{name} is even; --pol takes odd basis vectors")));
        }
        let mut v = vec![Scalar::zero(); g.odd_dim()];
        v[g.block_position(idx)] = Scalar::one();
        rows.push(v);
    }
    Ok(Subspace::from_rows(g.odd_dim(), rows))
}

pub fn field_override(g: &LieSuperalgebra, flag: Option<&str>) -> Result<LieSuperalgebra, FormatError> {
    match flag {
        None => Ok(g.clone()),
        Some(desc) => {
            let field: Field = parse_field(desc)
                .map_err(|e| malformed(format!("bad --field value: {e}")))?;
            g.with_field(field)
                .map_err(|e| malformed(format!("cannot reinterpret algebra over {desc:?}: {e}")))
        }
    }
}
