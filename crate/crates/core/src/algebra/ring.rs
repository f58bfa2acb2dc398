use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::order::TermOrder;
use crate::error::{Error, Result};

/// Polynomial ring description: coefficient field, variables and term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    field: Field,
    vars: Vec<String>,
    order: TermOrder,
    bigrading: Option<Vec<[u32; 2]>>,
}

pub type Ring = Arc<RingSpec>;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum OrderJson {
    Named(String),
    Eliminate { eliminate: Vec<String> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingJson {
    char: u64,
    vars: Vec<String>,
    #[serde(default = "default_order")]
    order: OrderJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bigrading: Option<BTreeMap<String, [u32; 2]>>,
}

fn default_order() -> OrderJson {
    OrderJson::Named("degrevlex".into())
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    pub fn new(characteristic: u64, vars: &[&str], order: TermOrder) -> Result<Ring> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        RingSpec::build(Field::new(characteristic)?, vars, order, None)
    }

    pub fn degrevlex(characteristic: u64, vars: &[&str]) -> Result<Ring> {
        RingSpec::new(characteristic, vars, TermOrder::Degrevlex)
    }

    fn build(field: Field, vars: Vec<String>, order: TermOrder, bigrading: Option<Vec<[u32; 2]>>) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let TermOrder::Eliminate(block) = &order {
            if block.iter().any(|&i| i >= vars.len()) || block.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidRing("elimination block is not a subset of the variables".into()));
            }
        }
        if let Some(g) = &bigrading {
            if g.len() != vars.len() {
                return Err(Error::InvalidRing("bigrading must cover every variable".into()));
            }
        }
        Ok(Arc::new(RingSpec { field, vars, order, bigrading }))
    }

    /// Parses `{"char": int, "vars": [..], "order": "degrevlex" | {"eliminate": [..]}}`
    /// with an optional `"bigrading": {"x": [1,0], ..}`.
    pub fn from_json(text: &str) -> Result<Ring> {
        let raw: RingJson = serde_json::from_str(text)?;
        RingSpec::from_json_value(raw)
    }

    pub fn from_value(v: &serde_json::Value) -> Result<Ring> {
        let raw: RingJson = serde_json::from_value(v.clone())?;
        RingSpec::from_json_value(raw)
    }

    fn from_json_value(raw: RingJson) -> Result<Ring> {
        let field = Field::new(raw.char)?;
        let order = match raw.order {
            OrderJson::Named(name) if name == "degrevlex" => TermOrder::Degrevlex,
            OrderJson::Named(name) => return Err(Error::InvalidRing(format!("unknown order `{name}`"))),
            OrderJson::Eliminate { eliminate } => {
                let mut idx = Vec::new();
                for name in &eliminate {
                    let i = raw
                        .vars
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| Error::InvalidRing(format!("eliminated `{name}` is not a variable")))?;
                    idx.push(i);
                }
                idx.sort_unstable();
                idx.dedup();
                TermOrder::Eliminate(idx)
            }
        };
        let bigrading = match raw.bigrading {
            None => None,
            Some(map) => {
                let mut g = Vec::new();
                for v in &raw.vars {
                    g.push(*map.get(v).ok_or_else(|| Error::InvalidRing(format!("no bidegree for `{v}`")))?);
                }
                if map.len() != raw.vars.len() {
                    return Err(Error::InvalidRing("bigrading names an unknown variable".into()));
                }
                Some(g)
            }
        };
        RingSpec::build(field, raw.vars, order, bigrading)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let order = match &self.order {
            TermOrder::Degrevlex => OrderJson::Named("degrevlex".into()),
            TermOrder::Eliminate(b) => OrderJson::Eliminate { eliminate: b.iter().map(|&i| self.vars[i].clone()).collect() },
        };
        let bigrading = self
            .bigrading
            .as_ref()
            .map(|g| self.vars.iter().cloned().zip(g.iter().copied()).collect::<BTreeMap<_, _>>());
        serde_json::to_value(RingJson { char: self.characteristic(), vars: self.vars.clone(), order, bigrading })
            .expect("ring json")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn with_bigrading(&self, grading: &[[u32; 2]]) -> Result<Ring> {
        RingSpec::build(self.field, self.vars.clone(), self.order.clone(), Some(grading.to_vec()))
    }

    /// Same variables under a different order.
    pub fn with_order(&self, order: TermOrder) -> Result<Ring> {
        RingSpec::build(self.field, self.vars.clone(), order, self.bigrading.clone())
    }

    /// Ring with one extra variable placed first, alone in the leading elimination block.
    pub fn with_elimination_variable(&self) -> Result<Ring> {
        let mut name = "t".to_string();
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = vec![name];
        vars.extend(self.vars.iter().cloned());
        RingSpec::build(self.field, vars, TermOrder::Eliminate(vec![0]), None)
    }

    /// Ring with extra variables appended (same field, degrevlex).
    pub fn with_extra_variables(&self, extra: &[&str]) -> Result<Ring> {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().map(|s| s.to_string()));
        RingSpec::build(self.field, vars, TermOrder::Degrevlex, None)
    }

    /// Same field and order with variable `i` moved to position `perm[i]`.
    pub fn with_permuted_variables(&self, perm: &[usize]) -> Result<Ring> {
        let mut vars = self.vars.clone();
        for (i, &p) in perm.iter().enumerate() {
            vars[p] = self.vars[i].clone();
        }
        RingSpec::build(self.field, vars, self.order.clone(), None)
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    #[inline]
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn bigrading(&self) -> Option<&[[u32; 2]]> {
        self.bigrading.as_deref()
    }
}

/// True when both handles describe the same ring.
pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let r = RingSpec::from_json(r#"{"char": 2, "vars": ["x","y","a","b"], "order": "degrevlex"}"#).unwrap();
        assert_eq!(r.arity(), 4);
        assert_eq!(RingSpec::from_json(&r.to_json()).unwrap(), r);
        let e = RingSpec::from_json(r#"{"char": 0, "vars": ["t","x"], "order": {"eliminate": ["t"]}}"#).unwrap();
        assert_eq!(e.order(), &TermOrder::Eliminate(vec![0]));
        assert_eq!(RingSpec::from_json(&e.to_json()).unwrap(), e);
    }

    #[test]
    fn rejects_bad_rings() {
        assert!(RingSpec::from_json(r#"{"char": 6, "vars": ["x"]}"#).is_err());
        assert!(RingSpec::from_json(r#"{"char": 2, "vars": ["x","x"]}"#).is_err());
        assert!(RingSpec::from_json(r#"{"char": 2, "vars": []}"#).is_err());
        assert!(RingSpec::from_json(r#"{"char": 2, "vars": ["x"], "order": {"eliminate": ["z"]}}"#).is_err());
        assert!(RingSpec::from_json(r#"{"char": 2, "vars": ["x"], "order": "lex"}"#).is_err());
    }

    #[test]
    fn bigrading_metadata() {
        let r = RingSpec::from_json(
            r#"{"char": 2, "vars": ["x","y","a","b"], "bigrading": {"x":[1,0],"y":[1,0],"a":[0,1],"b":[0,1]}}"#,
        )
        .unwrap();
        assert_eq!(r.bigrading().unwrap()[2], [0, 1]);
    }
}
