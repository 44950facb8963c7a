//! JSON form of a formula:
//! `{"r":2,"s":2,"n":2,"field":{"kind":"Z"},"tensor":[[[1,0],[0,-1]],...]}`.
//!
//! The tensor is indexed `[k][i][j]`. Integer entries are JSON numbers
//! (strings when they do not fit in 64 bits), non-integral rationals are
//! `"a/b"` strings, prime-field entries are residues `0..p`, and entries of a
//! Gaussian extension are `[re, im]` pairs.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Coeff, CoeffRing, RingKind};
use crate::error::FormulaError;
use crate::formula::sos::SosFormula;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldJson {
    Z,
    Q,
    GF { p: u64 },
    Gaussian { base: Box<FieldJson> },
}

impl FieldJson {
    pub fn from_ring(ring: &CoeffRing) -> Self {
        match ring.kind() {
            RingKind::Integers => FieldJson::Z,
            RingKind::Rationals => FieldJson::Q,
            RingKind::PrimeField(p) => FieldJson::GF { p },
            RingKind::GaussianExt(base) => FieldJson::Gaussian { base: Box::new(Self::from_ring(base)) },
        }
    }

    pub fn to_ring(&self) -> Result<CoeffRing, FormulaError> {
        Ok(match self {
            FieldJson::Z => CoeffRing::integers(),
            FieldJson::Q => CoeffRing::rationals(),
            FieldJson::GF { p } => CoeffRing::prime_field(*p)?,
            FieldJson::Gaussian { base } => CoeffRing::gaussian(base.to_ring()?)?,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormulaJson {
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub field: FieldJson,
    pub tensor: Vec<Vec<Vec<Value>>>,
}

fn coeff_to_value(ring: &CoeffRing, c: &Coeff) -> Value {
    match c {
        Coeff::Int(v) => int_value(v),
        Coeff::Rat(v) if v.is_integer() => int_value(v.numer()),
        Coeff::Rat(_) => Value::String(ring.format(c)),
        Coeff::Mod(v) => Value::from(*v),
        Coeff::Gauss(re, im) => {
            let base = ring.base();
            Value::Array(vec![coeff_to_value(&base, re), coeff_to_value(&base, im)])
        }
    }
}

fn int_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(v.to_string()),
    }
}

fn value_to_coeff(ring: &CoeffRing, v: &Value) -> Result<Coeff, FormulaError> {
    let bad = || FormulaError::Json(format!("entry {v} is not valid in {ring}"));
    match v {
        Value::Array(parts) if ring.is_gaussian() => {
            let [re, im] = parts.as_slice() else { return Err(bad()) };
            let base = ring.base();
            Ok(ring.gauss(value_to_coeff(&base, re)?, value_to_coeff(&base, im)?)?)
        }
        Value::Number(num) => {
            let x: BigInt = num.to_string().parse().map_err(|_| bad())?;
            if let RingKind::PrimeField(p) = ring.kind() {
                if x < BigInt::from(0) || x >= BigInt::from(p) {
                    return Err(bad());
                }
            }
            Ok(ring.from_bigint(&x))
        }
        Value::String(text) if !matches!(ring.kind(), RingKind::PrimeField(_)) => ring.parse(text).map_err(|_| bad()),
        _ => Err(bad()),
    }
}

pub fn to_json_value(f: &SosFormula) -> FormulaJson {
    let ring = f.ring();
    FormulaJson {
        r: f.r(),
        s: f.s(),
        n: f.n(),
        field: FieldJson::from_ring(ring),
        tensor: f
            .tensor()
            .iter()
            .map(|slice| slice.iter().map(|row| row.iter().map(|c| coeff_to_value(ring, c)).collect()).collect())
            .collect(),
    }
}

/// Compact canonical serialization.
pub fn to_json(f: &SosFormula) -> String {
    serde_json::to_string(&to_json_value(f)).expect("formula serializes")
}

pub fn from_json_value(doc: &FormulaJson) -> Result<SosFormula, FormulaError> {
    let ring = doc.field.to_ring()?;
    let tensor = doc
        .tensor
        .iter()
        .map(|slice| {
            slice
                .iter()
                .map(|row| row.iter().map(|v| value_to_coeff(&ring, v)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    SosFormula::new(ring, doc.r, doc.s, doc.n, tensor)
}

pub fn from_json(text: &str) -> Result<SosFormula, FormulaError> {
    let doc: FormulaJson = serde_json::from_str(text).map_err(|e| FormulaError::Json(e.to_string()))?;
    from_json_value(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{construct_classical, ClassicalKind};
    use proptest::prelude::*;

    #[test]
    fn gauss_is_bit_exact() {
        let f = construct_classical(ClassicalKind::Two).unwrap();
        assert_eq!(to_json(&f), r#"{"r":2,"s":2,"n":2,"field":{"kind":"Z"},"tensor":[[[1,0],[0,-1]],[[0,1],[1,0]]]}"#);
    }

    #[test]
    fn field_kinds() {
        let g = FieldJson::Gaussian { base: Box::new(FieldJson::GF { p: 3 }) };
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"kind":"Gaussian","base":{"kind":"GF","p":3}}"#);
        assert!(matches!(FieldJson::GF { p: 2 }.to_ring(), Err(FormulaError::Algebra(_))));
    }

    #[test]
    fn rationals_and_residues() {
        let text = r#"{"r":1,"s":1,"n":2,"field":{"kind":"Q"},"tensor":[[["3/5"]],[["4/5"]]]}"#;
        let f = from_json(text).unwrap();
        assert!(f.verify_by_expansion());
        assert_eq!(to_json(&f), text);

        let bad = r#"{"r":1,"s":1,"n":1,"field":{"kind":"GF","p":3},"tensor":[[[3]]]}"#;
        assert!(from_json(bad).is_err());
        let neg = r#"{"r":1,"s":1,"n":1,"field":{"kind":"GF","p":3},"tensor":[[[-1]]]}"#;
        assert!(from_json(neg).is_err());
        assert!(from_json("{not json").is_err());
        let shape = r#"{"r":2,"s":1,"n":1,"field":{"kind":"Z"},"tensor":[[[1]]]}"#;
        assert!(matches!(from_json(shape), Err(FormulaError::Shape(_))));
    }

    #[test]
    fn gaussian_entries() {
        let text =
            r#"{"r":1,"s":1,"n":2,"field":{"kind":"Gaussian","base":{"kind":"Q"}},"tensor":[[[[0,1]]],[[["1/2",0]]]]}"#;
        let f = from_json(text).unwrap();
        assert_eq!(to_json(&f), text);
    }

    proptest! {
        #[test]
        fn round_trip(entries in proptest::collection::vec(-3i64..4, 12), p_idx in 0usize..3) {
            let rings = [CoeffRing::integers(), CoeffRing::rationals(), CoeffRing::prime_field(5).unwrap()];
            let ring = &rings[p_idx];
            let tensor = (0..3).map(|k| (0..2).map(|i| (0..2).map(|j| ring.from_i64(entries[k * 4 + i * 2 + j])).collect()).collect()).collect();
            let f = SosFormula::new(ring.clone(), 2, 2, 3, tensor).unwrap();
            prop_assert_eq!(from_json(&to_json(&f)).unwrap(), f);
        }
    }
}
