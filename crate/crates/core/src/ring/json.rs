//! Polynomial JSON:
//! `{"vars":["u","x","d"],"terms":[{"e":[..],"c":"<coefficient>"},..]}`
//! with terms in ascending lexicographic order of `e`.

use serde::{Deserialize, Serialize};

use super::{Coeff, ExpVector, LaurentPoly, Vars};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<i32>,
    pub c: String,
}

impl<R: Coeff> LaurentPoly<R> {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars().names().to_vec(),
            terms: self
                .terms()
                .iter()
                .map(|(e, c)| TermJson {
                    e: e.to_vec(),
                    c: c.to_text(),
                })
                .collect(),
        }
    }

    /// Reads a polynomial, canonicalizing term order and dropping zeros.
    pub fn from_json(p: &PolyJson) -> Result<Self, Error> {
        let names: Vec<&str> = p.vars.iter().map(String::as_str).collect();
        let vars = Vars::new(&names);
        let mut terms = Vec::with_capacity(p.terms.len());
        for t in &p.terms {
            if t.e.len() != vars.len() {
                return Err(Error::Parse(format!(
                    "term exponent {:?} does not match {} variables",
                    t.e,
                    vars.len()
                )));
            }
            terms.push((ExpVector::from_slice(&t.e), R::from_text(&t.c)?));
        }
        if let Some(first) = terms.first() {
            let id = first.1.ring_id();
            if terms.iter().any(|(_, c)| c.ring_id() != id) {
                return Err(Error::RingMismatch("mixed coefficient rings".into()));
            }
        }
        Ok(LaurentPoly::from_terms(vars, terms))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("polynomial JSON is always serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self, Error> {
        let p: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&p)
    }
}
