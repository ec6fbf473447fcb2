//! Data model, parser, and validator for character-theoretic input.
//!
//! Tables are deliberately fragment-friendly: a document never needs a
//! complete character set, Brauer data is optional per prime, decomposition
//! rows may cover only some ordinary characters, and class sizes may be
//! absent. Everything that is present is validated exactly.

use crate::cyclotomic::{parse_cyclotomic, CyclotomicNumber};
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("missing power map for prime {prime}")]
    MissingPowerMap { prime: u64 },
    #[error("unknown class id {0}")]
    UnknownClass(String),
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub id: String,
    pub order: u64,
    pub size: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct OrdinaryCharacter {
    pub id: String,
    pub values: BTreeMap<String, CyclotomicNumber>,
}

impl OrdinaryCharacter {
    pub fn value(&self, class: &str) -> Option<&CyclotomicNumber> {
        self.values.get(class)
    }
}

#[derive(Debug, Clone)]
pub struct BrauerCharacter {
    pub id: String,
    /// Values on regular classes; may be empty when the table only names the
    /// character inside decomposition rows.
    pub values: BTreeMap<String, CyclotomicNumber>,
}

#[derive(Debug, Clone)]
pub struct BrauerBlockData {
    pub prime: u64,
    pub regular: Vec<String>,
    pub characters: Vec<BrauerCharacter>,
    /// ordinary character id -> (brauer character id -> multiplicity)
    pub decomposition: BTreeMap<String, BTreeMap<String, u64>>,
}

impl BrauerBlockData {
    pub fn character(&self, id: &str) -> Option<&BrauerCharacter> {
        self.characters.iter().find(|c| c.id == id)
    }

    pub fn row(&self, ordinary: &str) -> Option<&BTreeMap<String, u64>> {
        self.decomposition.get(ordinary)
    }

    /// The ordinary character whose row is the unit vector at `brauer_id`.
    pub fn unit_row_owner(&self, brauer_id: &str) -> Option<&str> {
        self.decomposition.iter().find_map(|(ord, row)| {
            let total: u64 = row.values().sum();
            if total == 1 && row.get(brauer_id) == Some(&1) {
                Some(ord.as_str())
            } else {
                None
            }
        })
    }
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub name: String,
    pub classes: Vec<ConjugacyClass>,
    pub powermaps: BTreeMap<u64, BTreeMap<String, String>>,
    pub characters: Vec<OrdinaryCharacter>,
    pub brauer: Vec<BrauerBlockData>,
}

// ---------------------------------------------------------------------------
// JSON document shape
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ClassDoc {
    id: String,
    order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    size: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct CharDoc {
    id: String,
    values: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct BrauerDoc {
    prime: u64,
    regular: Vec<String>,
    #[serde(default)]
    characters: Vec<CharDoc>,
    #[serde(default)]
    decomposition: BTreeMap<String, BTreeMap<String, u64>>,
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    name: String,
    classes: Vec<ClassDoc>,
    #[serde(default)]
    powermaps: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    characters: Vec<CharDoc>,
    #[serde(default)]
    brauer: Vec<BrauerDoc>,
}

fn parse_values(
    values: &BTreeMap<String, String>,
) -> Result<BTreeMap<String, CyclotomicNumber>, TableError> {
    values
        .iter()
        .map(|(k, v)| {
            let c = parse_cyclotomic(v)
                .map_err(|e| TableError::Syntax(format!("value {:?} for class {}: {}", v, k, e)))?;
            Ok((k.clone(), c))
        })
        .collect()
}

impl CharacterTable {
    /// Parses and fully validates a table document.
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let doc: TableDoc =
            serde_json::from_str(text).map_err(|e| TableError::Syntax(e.to_string()))?;
        let mut powermaps = BTreeMap::new();
        for (k, v) in doc.powermaps {
            let prime: u64 = k
                .parse()
                .map_err(|_| TableError::Syntax(format!("powermap key {:?} is not a prime", k)))?;
            powermaps.insert(prime, v);
        }
        let table = CharacterTable {
            name: doc.name,
            classes: doc
                .classes
                .into_iter()
                .map(|c| ConjugacyClass { id: c.id, order: c.order, size: c.size })
                .collect(),
            powermaps,
            characters: doc
                .characters
                .iter()
                .map(|c| {
                    Ok(OrdinaryCharacter { id: c.id.clone(), values: parse_values(&c.values)? })
                })
                .collect::<Result<_, TableError>>()?,
            brauer: doc
                .brauer
                .iter()
                .map(|b| {
                    Ok(BrauerBlockData {
                        prime: b.prime,
                        regular: b.regular.clone(),
                        characters: b
                            .characters
                            .iter()
                            .map(|c| {
                                Ok(BrauerCharacter {
                                    id: c.id.clone(),
                                    values: parse_values(&c.values)?,
                                })
                            })
                            .collect::<Result<_, TableError>>()?,
                        decomposition: b.decomposition.clone(),
                    })
                })
                .collect::<Result<_, TableError>>()?,
        };
        table.validate()?;
        Ok(table)
    }

    /// Canonical JSON rendering; serialize . parse is the identity on it.
    pub fn to_canonical_json(&self) -> String {
        let doc = TableDoc {
            name: self.name.clone(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassDoc { id: c.id.clone(), order: c.order, size: c.size })
                .collect(),
            powermaps: self
                .powermaps
                .iter()
                .map(|(p, m)| (p.to_string(), m.clone()))
                .collect(),
            characters: self
                .characters
                .iter()
                .map(|c| CharDoc {
                    id: c.id.clone(),
                    values: c.values.iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
                })
                .collect(),
            brauer: self
                .brauer
                .iter()
                .map(|b| BrauerDoc {
                    prime: b.prime,
                    regular: b.regular.clone(),
                    characters: b
                        .characters
                        .iter()
                        .map(|c| CharDoc {
                            id: c.id.clone(),
                            values: c
                                .values
                                .iter()
                                .map(|(k, v)| (k.clone(), v.to_string()))
                                .collect(),
                        })
                        .collect(),
                    decomposition: b.decomposition.clone(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serialization cannot fail");
        s.push('\n');
        s
    }

    fn validate(&self) -> Result<(), TableError> {
        let mut seen = HashSet::new();
        for c in &self.classes {
            if !seen.insert(c.id.as_str()) {
                return Err(TableError::Validation(format!("duplicate class id {}", c.id)));
            }
            if c.order == 0 {
                return Err(TableError::Validation(format!("class {} has order 0", c.id)));
            }
        }
        let identities: Vec<_> = self.classes.iter().filter(|c| c.order == 1).collect();
        if identities.len() != 1 {
            return Err(TableError::Validation(format!(
                "expected exactly one identity class, found {}",
                identities.len()
            )));
        }
        let order_of: HashMap<&str, u64> =
            self.classes.iter().map(|c| (c.id.as_str(), c.order)).collect();
        let identity = identities[0].id.as_str();

        for (&r, map) in &self.powermaps {
            if r < 2 {
                return Err(TableError::Validation(format!("powermap prime {} invalid", r)));
            }
            for c in &self.classes {
                let img = map.get(&c.id).ok_or_else(|| {
                    TableError::Validation(format!(
                        "powermap for prime {} misses class {}",
                        r, c.id
                    ))
                })?;
                let img_order = *order_of
                    .get(img.as_str())
                    .ok_or_else(|| TableError::UnknownClass(img.clone()))?;
                let expected = if c.order % r == 0 { c.order / r } else { c.order };
                if img_order != expected {
                    return Err(TableError::Validation(format!(
                        "powermap {}: class {} of order {} maps to {} of order {}, expected order {}",
                        r, c.id, c.order, img, img_order, expected
                    )));
                }
            }
            if map.get(identity).map(String::as_str) != Some(identity) {
                return Err(TableError::Validation(format!(
                    "powermap {} does not fix the identity class",
                    r
                )));
            }
        }

        let mut char_ids = HashSet::new();
        for ch in &self.characters {
            if !char_ids.insert(ch.id.as_str()) {
                return Err(TableError::Validation(format!("duplicate character id {}", ch.id)));
            }
            for cls in ch.values.keys() {
                if !order_of.contains_key(cls.as_str()) {
                    return Err(TableError::UnknownClass(cls.clone()));
                }
            }
            match ch.values.get(identity).and_then(|v| v.as_rational_integer()) {
                Some(d) if d.is_positive() => {}
                _ => {
                    return Err(TableError::Validation(format!(
                        "character {} has no positive integer degree on the identity class",
                        ch.id
                    )))
                }
            }
        }

        for block in &self.brauer {
            let p = block.prime;
            if p < 2 {
                return Err(TableError::Validation(format!("brauer prime {} invalid", p)));
            }
            for cls in &block.regular {
                let o = *order_of
                    .get(cls.as_str())
                    .ok_or_else(|| TableError::UnknownClass(cls.clone()))?;
                if o % p == 0 {
                    return Err(TableError::Validation(format!(
                        "class {} of order {} is not {}-regular",
                        cls, o, p
                    )));
                }
            }
            let mut br_ids = HashSet::new();
            for bc in &block.characters {
                if !br_ids.insert(bc.id.as_str()) {
                    return Err(TableError::Validation(format!(
                        "duplicate brauer character id {} at prime {}",
                        bc.id, p
                    )));
                }
            }
            for (ord_id, row) in &block.decomposition {
                let ord = self.ordinary(ord_id).ok_or_else(|| {
                    TableError::Validation(format!(
                        "decomposition row references unknown ordinary character {}",
                        ord_id
                    ))
                })?;
                for br_id in row.keys() {
                    if !br_ids.contains(br_id.as_str()) {
                        return Err(TableError::Validation(format!(
                            "decomposition row {} references unknown brauer character {}",
                            ord_id, br_id
                        )));
                    }
                }
                // consistency chi(x) = sum d * phi(x) wherever all values exist
                for cls in &block.regular {
                    let Some(lhs) = ord.value(cls) else { continue };
                    let mut rhs = CyclotomicNumber::zero();
                    let mut complete = true;
                    for (br_id, &mult) in row {
                        if mult == 0 {
                            continue;
                        }
                        match block.character(br_id).and_then(|b| b.values.get(cls)) {
                            Some(v) => {
                                let m = CyclotomicNumber::from_integer(mult as i64);
                                rhs = rhs.add(&v.mul(&m));
                            }
                            None => {
                                complete = false;
                                break;
                            }
                        }
                    }
                    if complete && &rhs != lhs {
                        return Err(TableError::Validation(format!(
                            "decomposition row mismatch: {} at class {} (prime {})",
                            ord_id, cls, p
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn identity_class(&self) -> &str {
        self.classes
            .iter()
            .find(|c| c.order == 1)
            .map(|c| c.id.as_str())
            .expect("validated table has an identity class")
    }

    pub fn class(&self, id: &str) -> Option<&ConjugacyClass> {
        self.classes.iter().find(|c| c.id == id)
    }

    pub fn class_order(&self, id: &str) -> Option<u64> {
        self.class(id).map(|c| c.order)
    }

    /// All classes with element order exactly `n`, in document order.
    pub fn classes_of_order(&self, n: u64) -> Vec<&ConjugacyClass> {
        self.classes.iter().filter(|c| c.order == n).collect()
    }

    /// lcm of the element orders present in the table.
    pub fn exponent(&self) -> u64 {
        self.classes.iter().fold(1, |acc, c| crate::arith::lcm(acc, c.order))
    }

    /// The class of x^e, composing prime power maps. The result depends on e
    /// only modulo the element order.
    pub fn power_class<'a>(&'a self, id: &str, e: u64) -> Result<&'a str, TableError> {
        let order = self
            .class_order(id)
            .ok_or_else(|| TableError::UnknownClass(id.to_string()))?;
        let mut e = e % order;
        if e == 0 {
            return Ok(self.identity_class());
        }
        let mut current = id.to_string();
        while e > 1 {
            let p = crate::arith::prime_factors(e)[0];
            let map = self.powermaps.get(&p).ok_or(TableError::MissingPowerMap { prime: p })?;
            current = map
                .get(&current)
                .ok_or_else(|| TableError::UnknownClass(current.clone()))?
                .clone();
            e /= p;
        }
        Ok(&self.class(&current).expect("validated image").id)
    }

    pub fn ordinary(&self, id: &str) -> Option<&OrdinaryCharacter> {
        self.characters.iter().find(|c| c.id == id)
    }

    pub fn brauer_block(&self, prime: u64) -> Option<&BrauerBlockData> {
        self.brauer.iter().find(|b| b.prime == prime)
    }

    pub fn brauer_character(&self, prime: u64, id: &str) -> Option<&BrauerCharacter> {
        self.brauer_block(prime).and_then(|b| b.character(id))
    }

    pub fn sizes_complete(&self) -> bool {
        self.classes.iter().all(|c| c.size.is_some())
    }

    /// First orthogonality over all pairs of characters with complete value
    /// sets. Only meaningful when all class sizes are present.
    pub fn check_orthogonality(&self) -> Result<(), TableError> {
        if !self.sizes_complete() {
            return Err(TableError::Validation(
                "orthogonality check requires all class sizes".into(),
            ));
        }
        let group_order: u64 = self.classes.iter().map(|c| c.size.unwrap()).sum();
        let complete: Vec<&OrdinaryCharacter> = self
            .characters
            .iter()
            .filter(|c| self.classes.iter().all(|cl| c.values.contains_key(&cl.id)))
            .collect();
        for (i, chi) in complete.iter().enumerate() {
            for psi in complete.iter().skip(i) {
                let mut acc = CyclotomicNumber::zero();
                for cl in &self.classes {
                    let term = chi.values[&cl.id]
                        .mul(&psi.values[&cl.id].conjugate())
                        .scale(&num_rational::BigRational::from_integer(
                            cl.size.unwrap().into(),
                        ));
                    acc = acc.add(&term);
                }
                let want: i64 = if chi.id == psi.id { group_order as i64 } else { 0 };
                if acc.as_rational_integer() != Some(num_bigint::BigInt::from(want)) {
                    return Err(TableError::Validation(format!(
                        "orthogonality fails for ({}, {})",
                        chi.id, psi.id
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m22_fragment() -> &'static str {
        r#"{
          "name": "m22 test fragment",
          "classes": [
            {"id": "1a", "order": 1},
            {"id": "2a", "order": 2},
            {"id": "3a", "order": 3}
          ],
          "powermaps": {
            "2": {"1a": "1a", "2a": "1a", "3a": "3a"},
            "3": {"1a": "1a", "2a": "2a", "3a": "1a"}
          },
          "characters": [
            {"id": "chi2", "values": {"1a": "21", "2a": "5", "3a": "3"}},
            {"id": "chi8", "values": {"1a": "210", "2a": "2", "3a": "3"}},
            {"id": "chi9", "values": {"1a": "231", "2a": "7", "3a": "-3"}}
          ],
          "brauer": [
            {"prime": 3, "regular": ["1a", "2a"],
             "characters": [
               {"id": "phi2", "values": {"1a": "21", "2a": "5"}},
               {"id": "phi9", "values": {"1a": "210", "2a": "2"}}
             ],
             "decomposition": {
               "chi2": {"phi2": 1},
               "chi8": {"phi9": 1},
               "chi9": {"phi2": 1, "phi9": 1}
             }}
          ]
        }"#
    }

    #[test]
    fn parses_fragment_and_reads_values() {
        let t = CharacterTable::parse(m22_fragment()).unwrap();
        let chi2 = t.ordinary("chi2").unwrap();
        assert_eq!(chi2.value("2a").unwrap(), &CyclotomicNumber::from_integer(5));
        assert_eq!(t.classes_of_order(3).len(), 1);
        assert!(t.classes_of_order(6).is_empty());
        assert_eq!(t.classes_of_order(1)[0].id, "1a");
    }

    #[test]
    fn corrupt_decomposition_row_is_rejected() {
        let bad = m22_fragment()
            .replace(r#"{"1a": "210", "2a": "2"}"#, r#"{"1a": "210", "2a": "4"}"#);
        assert_ne!(bad, m22_fragment());
        let err = CharacterTable::parse(&bad).unwrap_err();
        assert!(err.to_string().contains("decomposition row mismatch"), "{}", err);
    }

    #[test]
    fn power_class_composition() {
        let t = CharacterTable::parse(m22_fragment()).unwrap();
        assert_eq!(t.power_class("3a", 3).unwrap(), "1a");
        assert_eq!(t.power_class("3a", 2).unwrap(), "3a");
        assert_eq!(t.power_class("2a", 5).unwrap(), "2a");
        assert_eq!(t.power_class("3a", 5).unwrap(), t.power_class("3a", 2).unwrap());
    }

    #[test]
    fn serialize_is_idempotent() {
        let t = CharacterTable::parse(m22_fragment()).unwrap();
        let s1 = t.to_canonical_json();
        let t2 = CharacterTable::parse(&s1).unwrap();
        assert_eq!(s1, t2.to_canonical_json());
    }

    #[test]
    fn missing_power_map_is_reported() {
        let mut doc: serde_json::Value = serde_json::from_str(m22_fragment()).unwrap();
        doc["powermaps"].as_object_mut().unwrap().remove("2");
        let t = CharacterTable::parse(&doc.to_string()).unwrap();
        let err = t.power_class("3a", 2).unwrap_err();
        assert!(matches!(err, TableError::MissingPowerMap { prime: 2 }));
    }
}
