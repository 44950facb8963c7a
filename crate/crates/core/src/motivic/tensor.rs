//! Classes in `H(DQ_p) (x) H(DQ_q)` over the coefficient model.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::RingError;
use crate::motivic::dq::{mono_text, term_text, DQClass, DQMono, DQRingSpec};
use crate::motivic::m2::M2Poly;

type PairMono = (DQMono, DQMono);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorClass {
    left: DQRingSpec,
    right: DQRingSpec,
    terms: BTreeMap<PairMono, M2Poly>,
}

impl TensorClass {
    pub fn zero(left: DQRingSpec, right: DQRingSpec) -> Self {
        TensorClass { left, right, terms: BTreeMap::new() }
    }

    pub fn one(left: DQRingSpec, right: DQRingSpec) -> Self {
        Self::pure(&DQClass::one(left), &DQClass::one(right))
    }

    /// `x (x) y`.
    pub fn pure(x: &DQClass, y: &DQClass) -> Self {
        let mut terms = BTreeMap::new();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                let c = c1.mul(c2);
                if !c.is_zero() {
                    terms.insert((m1, m2), c);
                }
            }
        }
        TensorClass { left: x.spec(), right: y.spec(), terms }
    }

    /// `x (x) 1`.
    pub fn left(x: &DQClass, right: DQRingSpec) -> Self {
        Self::pure(x, &DQClass::one(right))
    }

    /// `1 (x) y`.
    pub fn right(left: DQRingSpec, y: &DQClass) -> Self {
        Self::pure(&DQClass::one(left), y)
    }

    pub fn specs(&self) -> (DQRingSpec, DQRingSpec) {
        (self.left, self.right)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (PairMono, &M2Poly)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    fn check(&self, other: &TensorClass) -> Result<(), RingError> {
        if self.specs() == other.specs() {
            Ok(())
        } else {
            Err(RingError::SpecMismatch(format!("{:?}", self.specs()), format!("{:?}", other.specs())))
        }
    }

    pub fn add(&self, other: &TensorClass) -> Result<TensorClass, RingError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (&m, c) in &other.terms {
            let slot = terms.entry(m).or_default();
            slot.add_assign(c);
            if slot.is_zero() {
                terms.remove(&m);
            }
        }
        Ok(TensorClass { terms, ..self.clone() })
    }

    pub fn mul(&self, other: &TensorClass) -> Result<TensorClass, RingError> {
        self.check(other)?;
        let mut out = TensorClass::zero(self.left, self.right);
        for (&((e1, j1), (f1, k1)), c1) in &self.terms {
            for (&((e2, j2), (f2, k2)), c2) in &other.terms {
                let l = DQClass::monomial(self.left, c1.mul(c2), e1 + e2, j1 + j2);
                if l.is_zero() {
                    continue;
                }
                let r = DQClass::monomial(self.right, M2Poly::one(), f1 + f2, k1 + k2);
                out = out.add(&TensorClass::pure(&l, &r))?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut m: u64) -> TensorClass {
        let mut acc = TensorClass::one(self.left, self.right);
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&base).expect("same specs");
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base).expect("same specs");
            }
        }
        acc
    }

    /// Total first degree `i` of the left factor for each surviving term.
    pub fn left_degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.terms.keys().map(|&((e, j), _)| e + 2 * j).collect();
        out.sort();
        out.dedup();
        out
    }
}

pub fn tensor_mul(x: &TensorClass, y: &TensorClass) -> Result<TensorClass, RingError> {
    x.mul(y)
}

impl fmt::Display for TensorClass {
    /// Renders like `t*a1*b2 + t*b1*a2`, unit factors omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(m1, m2), c)| {
                let mono = match (mono_text(m1, "1"), mono_text(m2, "2")) {
                    (None, None) => None,
                    (Some(x), None) | (None, Some(x)) => Some(x),
                    (Some(x), Some(y)) => Some(format!("{x}*{y}")),
                };
                term_text(c, mono)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let s1 = DQRingSpec::all_squares(1);
        let a1 = TensorClass::left(&DQClass::a(s1), s1);
        let a2 = TensorClass::right(s1, &DQClass::a(s1));
        let prod = tensor_mul(&a1, &a2).unwrap();
        assert_eq!(prod, TensorClass::pure(&DQClass::a(s1), &DQClass::a(s1)));
        assert_eq!(prod.to_string(), "a1*a2");
        assert!(a1.mul(&a1).unwrap().is_zero());

        for k in 1..5u32 {
            let s = DQRingSpec::all_squares(2 * k as usize + 1);
            let b2 = TensorClass::right(s1, &DQClass::b(s));
            assert!(!b2.pow(k as u64).is_zero());
            assert!(b2.pow(k as u64 + 1).is_zero());
        }
    }

    #[test]
    fn mismatched_specs() {
        let s1 = DQRingSpec::all_squares(1);
        let s2 = DQRingSpec::all_squares(2);
        assert!(TensorClass::one(s1, s1).mul(&TensorClass::one(s1, s2)).is_err());
        assert_eq!(TensorClass::one(s1, s2).to_string(), "1");
        assert_eq!(TensorClass::zero(s1, s2).to_string(), "0");
    }
}
