//! Chow rings of smooth split quadrics `Q_m`.
//!
//! For `m = 2k+1`: `Z[x,y]/(x^(k+1) - 2y, y^2)` with `y` in codimension `k+1`.
//! For `m = 2k`: `Z[x,y]/(x^(k+1) - 2xy, y^2 - e x^k y)` with `y` in
//! codimension `k` and `e = 1` when `k` is even, `e = 0` when `k` is odd.
//! Normal-form monomials are `x^i` and `x^i y` with `0 <= i <= k`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::ChowError;

/// Monomial `x^a y^b` with `b` in `{0, 1}` once reduced.
pub type ChowMono = (u32, u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    m: usize,
    terms: BTreeMap<ChowMono, BigInt>,
}

pub(crate) fn half(m: usize) -> u32 {
    (m / 2) as u32
}

/// Codimension of `y` in `Q_m`.
pub fn y_codim(m: usize) -> u32 {
    let k = half(m);
    if m % 2 == 1 {
        k + 1
    } else {
        k
    }
}

pub fn mono_codim(m: usize, (a, b): ChowMono) -> u32 {
    a + b * y_codim(m)
}

/// Normal-form monomials ordered by codimension, `x^i` before `x^i y`.
pub fn chow_basis(m: usize) -> Vec<ChowMono> {
    let k = half(m);
    let mut out: Vec<ChowMono> = (0..=k).map(|a| (a, 0)).chain((0..=k).map(|a| (a, 1))).collect();
    out.sort_by_key(|&mono| (mono_codim(m, mono), mono.1));
    out
}

/// Rank of `CH^i(Q_m)` for `i = 0..=m`, read off the normal-form basis.
pub fn codimension_ranks(m: usize) -> Vec<usize> {
    let mut ranks = vec![0; m + 1];
    for mono in chow_basis(m) {
        ranks[mono_codim(m, mono) as usize] += 1;
    }
    ranks
}

fn reduce_into(m: usize, a: u32, b: u32, coeff: BigInt, out: &mut BTreeMap<ChowMono, BigInt>) {
    if coeff.is_zero() {
        return;
    }
    let k = half(m);
    let odd = m % 2 == 1;
    match b {
        0 if a <= k => {
            let slot = out.entry((a, 0)).or_default();
            *slot += coeff;
            if slot.is_zero() {
                out.remove(&(a, 0));
            }
        }
        // x^(k+1) = 2y (odd) or 2xy (even)
        0 => {
            let shift = if odd { k + 1 } else { k };
            reduce_into(m, a - shift, 1, coeff * 2, out);
        }
        1 if a <= k => {
            let slot = out.entry((a, 1)).or_default();
            *slot += coeff;
            if slot.is_zero() {
                out.remove(&(a, 1));
            }
        }
        1 => {}
        _ => {
            if !odd && k.is_multiple_of(2) {
                // y^2 = x^k y
                reduce_into(m, a + k, b - 1, coeff, out);
            }
        }
    }
}

impl ChowClass {
    pub fn zero(m: usize) -> Self {
        ChowClass { m, terms: BTreeMap::new() }
    }

    /// `coeff * x^a * y^b` in normal form.
    pub fn monomial(m: usize, coeff: impl Into<BigInt>, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        reduce_into(m, a, b, coeff.into(), &mut terms);
        ChowClass { m, terms }
    }

    pub fn one(m: usize) -> Self {
        Self::monomial(m, 1, 0, 0)
    }

    pub fn x(m: usize) -> Self {
        Self::monomial(m, 1, 1, 0)
    }

    pub fn y(m: usize) -> Self {
        Self::monomial(m, 1, 0, 1)
    }

    /// The class of a point, `x^k y`.
    pub fn point(m: usize) -> Self {
        Self::monomial(m, 1, half(m), 1)
    }

    /// Middle class `alpha = y` of an even quadric.
    pub fn alpha(m: usize) -> Self {
        Self::y(m)
    }

    /// Middle class `beta = x^k - y` of an even quadric.
    pub fn beta(m: usize) -> Self {
        Self::monomial(m, 1, half(m), 0).sub(&Self::y(m)).expect("same quadric")
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: ChowMono) -> BigInt {
        self.terms.get(&mono).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (ChowMono, &BigInt)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    fn check(&self, other: &ChowClass) -> Result<(), ChowError> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(ChowError::DimensionMismatch(self.m, other.m))
        }
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (&(a, b), c) in &other.terms {
            reduce_into(self.m, a, b, c.clone(), &mut terms);
        }
        Ok(ChowClass { m: self.m, terms })
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> ChowClass {
        let c = c.into();
        let mut terms = BTreeMap::new();
        for (&(a, b), x) in &self.terms {
            reduce_into(self.m, a, b, x * &c, &mut terms);
        }
        ChowClass { m: self.m, terms }
    }

    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.add(&other.scale(-1))
    }

    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.check(other)?;
        let mut terms = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                reduce_into(self.m, a1 + a2, b1 + b2, c1 * c2, &mut terms);
            }
        }
        Ok(ChowClass { m: self.m, terms })
    }

    pub fn pow(&self, e: u32) -> ChowClass {
        (0..e).fold(ChowClass::one(self.m), |acc, _| acc.mul(self).expect("same quadric"))
    }

    /// The part in codimension `i`.
    pub fn codim_part(&self, i: u32) -> ChowClass {
        ChowClass {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(&mono, _)| mono_codim(self.m, mono) == i)
                .map(|(&mono, c)| (mono, c.clone()))
                .collect(),
        }
    }

    /// Multiple of the point class, if the class is one.
    pub fn degree(&self) -> Option<BigInt> {
        let top = (half(self.m), 1);
        if self.terms.keys().all(|&mono| mono == top) {
            Some(self.coeff(top))
        } else {
            None
        }
    }
}

pub fn chow_mul(u: &ChowClass, v: &ChowClass) -> Result<ChowClass, ChowError> {
    u.mul(v)
}

impl fmt::Display for ChowClass {
    /// Renders like `x^2 - 2*x*y + 1`, highest codimension first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut monos: Vec<(&ChowMono, &BigInt)> = self.terms.iter().collect();
        monos.sort_by_key(|(&mono, _)| (std::cmp::Reverse(mono_codim(self.m, mono)), mono.1));
        for (idx, (&(a, b), c)) in monos.into_iter().enumerate() {
            let mut factors = Vec::new();
            match a {
                0 => {}
                1 => factors.push("x".to_string()),
                _ => factors.push(format!("x^{a}")),
            }
            if b == 1 {
                factors.push("y".into());
            }
            let mag = c.abs();
            let body = match (factors.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => factors.join("*"),
                (false, false) => format!("{mag}*{}", factors.join("*")),
            };
            let neg = c.is_negative();
            match (idx, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// Ring presentation of `CH*(Q_m)` as text.
pub fn presentation(m: usize) -> String {
    let k = half(m);
    let xk1 = if k == 0 { "x".to_string() } else { format!("x^{}", k + 1) };
    let rels = if m % 2 == 1 {
        format!("{xk1} - 2*y, y^2")
    } else if k.is_multiple_of(2) {
        let xk = match k {
            0 => "y".to_string(),
            1 => "x*y".to_string(),
            _ => format!("x^{k}*y"),
        };
        format!("{xk1} - 2*x*y, y^2 - {xk}")
    } else {
        format!("{xk1} - 2*x*y, y^2")
    };
    format!("CH*(Q_{m}) = Z[x,y] / ({rels}), |x| = 1, |y| = {}", y_codim(m))
}

/// `[[a.a, a.b], [b.a, b.b]]` for the middle classes of `Q_{2k}`, as
/// multiples of the point class.
pub fn even_intersection_table(k: usize) -> Result<[[BigInt; 2]; 2], ChowError> {
    if k == 0 {
        return Err(ChowError::ZeroK);
    }
    let m = 2 * k;
    let classes = [ChowClass::alpha(m), ChowClass::beta(m)];
    let entry =
        |i: usize, j: usize| classes[i].mul(&classes[j]).expect("same quadric").degree().expect("top-degree product");
    Ok([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
}

/// Renders an intersection table with `*` for the point class.
pub fn intersection_table_text(t: &[[BigInt; 2]; 2]) -> String {
    let cell = |c: &BigInt| {
        if c.is_zero() {
            "0".to_string()
        } else if c.is_one() {
            "*".to_string()
        } else {
            format!("{c}*")
        }
    };
    format!("[[{},{}],[{},{}]]", cell(&t[0][0]), cell(&t[0][1]), cell(&t[1][0]), cell(&t[1][1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_examples() {
        assert_eq!(chow_mul(&ChowClass::x(3), &ChowClass::x(3)).unwrap(), ChowClass::y(3).scale(2));
        assert!(chow_mul(&ChowClass::y(2), &ChowClass::y(2)).unwrap().is_zero());
        assert_eq!(chow_mul(&ChowClass::y(4), &ChowClass::y(4)).unwrap(), ChowClass::monomial(4, 1, 2, 1));
        assert!(ChowClass::x(3).mul(&ChowClass::x(4)).is_err());
    }

    #[test]
    fn ranks() {
        for m in 0..=24usize {
            let ranks = codimension_ranks(m);
            for (i, r) in ranks.iter().enumerate() {
                let expect = if m.is_multiple_of(2) && i == m / 2 { 2 } else { 1 };
                assert_eq!(*r, expect, "m={m} i={i}");
            }
        }
    }

    #[test]
    fn point_class_products() {
        for k in 1..=10u32 {
            let m = 2 * k as usize;
            let xky = ChowClass::monomial(m, 1, k, 1);
            assert_eq!(xky, ChowClass::point(m));
            assert!(ChowClass::monomial(m, 1, k + 1, 1).is_zero());
            let odd = m + 1;
            assert_eq!(ChowClass::x(odd).pow(k + 1), ChowClass::y(odd).scale(2));
            for i in 0..=k {
                assert_eq!(ChowClass::x(odd).pow(i), ChowClass::monomial(odd, 1, i, 0));
            }
        }
    }

    #[test]
    fn intersection_tables() {
        let z = BigInt::zero;
        let o = BigInt::one;
        for k in 1..=10 {
            let t = even_intersection_table(k).unwrap();
            if k % 2 == 1 {
                assert_eq!(t, [[z(), o()], [o(), z()]]);
                assert_eq!(intersection_table_text(&t), "[[0,*],[*,0]]");
            } else {
                assert_eq!(t, [[o(), z()], [z(), o()]]);
            }
            let m = 2 * k;
            let sum = ChowClass::alpha(m).add(&ChowClass::beta(m)).unwrap();
            assert_eq!(sum.pow(2), ChowClass::point(m).scale(2));
        }
        assert!(matches!(even_intersection_table(0), Err(ChowError::ZeroK)));
    }

    #[test]
    fn small_quadrics() {
        // Q_1 is a conic: y is a point and x = 2y
        assert_eq!(ChowClass::x(1), ChowClass::y(1).scale(2));
        // Q_0 is two points: y is idempotent and x vanishes
        assert_eq!(ChowClass::y(0).pow(2), ChowClass::y(0));
        assert!(ChowClass::x(0).is_zero());
    }

    #[test]
    fn text() {
        assert_eq!(ChowClass::x(5).pow(3).to_string(), "2*y");
        let c = ChowClass::beta(4).sub(&ChowClass::one(4)).unwrap();
        assert_eq!(c.to_string(), "x^2 - y - 1");
        assert_eq!(presentation(3), "CH*(Q_3) = Z[x,y] / (x^2 - 2*y, y^2), |x| = 1, |y| = 2");
        assert_eq!(presentation(4), "CH*(Q_4) = Z[x,y] / (x^3 - 2*x*y, y^2 - x^2*y), |x| = 1, |y| = 2");
        assert_eq!(presentation(1), "CH*(Q_1) = Z[x,y] / (x - 2*y, y^2), |x| = 1, |y| = 1");
    }
}
