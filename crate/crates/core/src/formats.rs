//! JSON file formats for polynomials, groups, `Δ` tables and matrices.
//!
//! ```text
//! polynomial  {"vars": ["t1","t2"], "terms": [{"exp": [2,0], "coef": "1/2"}, …]}
//! group       {"degree": 4, "generators": [[1,2,3,0], "(0 1)"]}  or  {"named": "dihedral:4"}
//! delta       {"kind": "table", "degree": 3, "entries": [{"perm": [1,0,2], "value": "-1"}, …]}
//!             {"kind": "uniform"} | {"kind": "sign"}
//! matrix      {"entries": [["1","2"],["3","4"]]}
//! ```
//!
//! A permutation is an image array, a comma-joined image string (`"1,0,2"`)
//! or cycle notation (`"(0 1)"`). Rationals are `p/q` strings; plain JSON
//! integers are accepted on input.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{format_rat, parse_rat, MultiPoly, Rat};
use crate::enumeration::DeltaWeight;
use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, Permutation, DEFAULT_GROUP_CAP};
use crate::symdet::RatMatrix;

#[derive(Debug, Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coef: String,
}

/// JSON form with variables `{prefix}1..{prefix}n` and terms in graded-lex
/// descending order.
pub fn poly_to_json(p: &MultiPoly, prefix: &str) -> Value {
    let doc = PolyJson {
        vars: (1..=p.nvars()).map(|i| format!("{prefix}{i}")).collect(),
        terms: p
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| TermJson { exp: m.exponents().to_vec(), coef: format_rat(c) })
            .collect(),
    };
    serde_json::to_value(doc).expect("plain data")
}

pub fn poly_from_json(v: &Value) -> Result<MultiPoly> {
    let doc: PolyJson = serde_json::from_value(v.clone()).map_err(|e| Error::parse(e.to_string()))?;
    let terms = doc.terms.into_iter().map(|t| Ok((t.exp, parse_rat(&t.coef)?))).collect::<Result<Vec<_>>>()?;
    MultiPoly::from_terms(doc.vars.len(), terms)
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RatJson {
    Text(String),
    Int(i64),
}

impl RatJson {
    fn parse(self) -> Result<Rat> {
        match self {
            RatJson::Text(s) => parse_rat(&s),
            RatJson::Int(i) => Ok(Rat::from_integer(i.into())),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PermJson {
    Images(Vec<usize>),
    Text(String),
}

impl PermJson {
    fn parse(self, degree: usize) -> Result<Permutation> {
        let p = match self {
            PermJson::Images(v) => Permutation::new(v)?,
            PermJson::Text(s) => parse_perm(&s, degree)?,
        };
        if p.degree() != degree {
            return Err(Error::Dimension { expected: degree, found: p.degree() });
        }
        Ok(p)
    }
}

/// Parses cycle notation (when the string contains `(`) or a comma-joined
/// image array.
pub fn parse_perm(s: &str, degree: usize) -> Result<Permutation> {
    let s = s.trim();
    if s.starts_with('(') || s.is_empty() {
        return Permutation::from_cycles(degree, s);
    }
    let images = s
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::parse(format!("bad permutation {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(images)
}

/// Comma-joined image array, the key form used in `Δ` tables.
pub fn perm_key(p: &Permutation) -> String {
    p.images().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GroupJson {
    Named { named: String },
    Generated { degree: usize, generators: Vec<PermJson> },
}

pub fn group_from_json(v: &Value) -> Result<PermGroup> {
    let doc: GroupJson = serde_json::from_value(v.clone())
        .map_err(|_| Error::parse("group JSON needs {\"named\": …} or {\"degree\": …, \"generators\": […]}"))?;
    match doc {
        GroupJson::Named { named } => PermGroup::named(&named),
        GroupJson::Generated { degree, generators } => {
            let gens = generators.into_iter().map(|g| g.parse(degree)).collect::<Result<Vec<_>>>()?;
            PermGroup::generate(degree, &gens, DEFAULT_GROUP_CAP)
        }
    }
}

/// Group JSON listing the group's elements as generators, so that a
/// counterexample can be reproduced from the printout.
pub fn group_to_json(g: &PermGroup) -> Value {
    let mut elems: Vec<&Permutation> = g.elements().iter().collect();
    elems.sort();
    serde_json::json!({
        "degree": g.degree(),
        "generators": elems.iter().map(|p| p.images()).collect::<Vec<_>>(),
    })
}

#[derive(Debug, Deserialize)]
struct DeltaJson {
    kind: String,
    degree: Option<usize>,
    #[serde(default)]
    entries: Vec<DeltaEntryJson>,
}

#[derive(Debug, Deserialize)]
struct DeltaEntryJson {
    perm: PermJson,
    value: RatJson,
}

pub fn delta_from_json(v: &Value) -> Result<DeltaWeight> {
    let doc: DeltaJson = serde_json::from_value(v.clone()).map_err(|e| Error::parse(e.to_string()))?;
    match doc.kind.as_str() {
        "uniform" => Ok(DeltaWeight::Uniform),
        "sign" => Ok(DeltaWeight::Sign),
        "table" => {
            let degree = doc.degree.ok_or_else(|| Error::parse("delta table needs a \"degree\""))?;
            let mut table = std::collections::HashMap::new();
            for e in doc.entries {
                let p = e.perm.parse(degree)?;
                let key = perm_key(&p);
                if table.insert(p, e.value.parse()?).is_some() {
                    return Err(Error::validation(format!("delta table lists {key} twice")));
                }
            }
            Ok(DeltaWeight::Table(table))
        }
        other => Err(Error::validation(format!("unknown delta kind {other:?}"))),
    }
}

pub fn delta_to_json(d: &DeltaWeight, degree: usize) -> Value {
    match d {
        DeltaWeight::Table(t) => {
            let mut entries: Vec<(&Permutation, &Rat)> = t.iter().collect();
            entries.sort_by(|a, b| a.0.cmp(b.0));
            serde_json::json!({
                "kind": "table",
                "degree": degree,
                "entries": entries
                    .into_iter()
                    .map(|(p, v)| serde_json::json!({"perm": p.images(), "value": format_rat(v)}))
                    .collect::<Vec<_>>(),
            })
        }
        other => serde_json::json!({ "kind": other.kind() }),
    }
}

#[derive(Debug, Deserialize)]
struct MatrixJson {
    entries: Vec<Vec<RatJson>>,
}

pub fn matrix_from_json(v: &Value) -> Result<RatMatrix> {
    let doc: MatrixJson = serde_json::from_value(v.clone()).map_err(|e| Error::parse(e.to_string()))?;
    let rows = doc
        .entries
        .into_iter()
        .map(|r| r.into_iter().map(RatJson::parse).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(rows)
}

pub fn matrix_to_json(l: &RatMatrix) -> Value {
    serde_json::json!({
        "entries": l.rows().map(|r| r.iter().map(format_rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))
}
