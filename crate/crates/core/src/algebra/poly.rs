//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::algebra::ring::{Coeff, CoeffRing};
use crate::error::AlgebraError;

/// Variable identifier. Names live in a [`VarRegistry`].
pub type Var = u32;

/// A monomial as a sorted list of `(variable, exponent)` pairs with no zero
/// exponents. Ordered graded-lexicographically, lower variable ids first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.binary_search_by_key(&v, |&(w, _)| w).map(|idx| self.0[idx].1).unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// The monomial with the listed variables removed, and the removed part.
    pub fn split(&self, keep: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let (kept, dropped): (Vec<_>, Vec<_>) = self.0.iter().partition(|&&(v, _)| keep(v));
        (Monomial(kept), Monomial(dropped))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            for (x, y) in a.iter().zip(b.iter()) {
                if x.0 != y.0 {
                    // the side containing the smaller variable id is larger
                    return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
                }
                if x.1 != y.1 {
                    return x.1.cmp(&y.1);
                }
            }
            a.len().cmp(&b.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Maps variable ids to display names; unnamed variables print as `v<id>`.
#[derive(Debug, Clone, Default)]
pub struct VarRegistry {
    names: BTreeMap<Var, String>,
}

impl VarRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, name: impl Into<String>) -> Self {
        self.names.insert(v, name.into());
        self
    }

    pub fn insert(&mut self, v: Var, name: impl Into<String>) {
        self.names.insert(v, name.into());
    }

    pub fn name(&self, v: Var) -> String {
        self.names.get(&v).cloned().unwrap_or_else(|| format!("v{v}"))
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        if let Some((&v, _)) = self.names.iter().find(|(_, n)| n.as_str() == name) {
            return Some(v);
        }
        name.strip_prefix('v').and_then(|id| id.parse().ok())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    ring: CoeffRing,
    terms: BTreeMap<Monomial, Coeff>,
}

impl SparsePoly {
    pub fn zero(ring: &CoeffRing) -> Self {
        SparsePoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &CoeffRing, c: Coeff) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn one(ring: &CoeffRing) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn var(ring: &CoeffRing, v: Var) -> Self {
        Self::monomial(ring, Monomial::var(v), ring.one())
    }

    pub fn monomial(ring: &CoeffRing, m: Monomial, c: Coeff) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(ring: &CoeffRing, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    fn add_term(&mut self, m: Monomial, c: Coeff) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = self.ring.add(e.get(), &c);
                if self.ring.is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn same_ring(&self, other: &SparsePoly) -> Result<(), AlgebraError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() })
        }
    }

    pub fn add(&self, other: &SparsePoly) -> Result<SparsePoly, AlgebraError> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), self.ring.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &SparsePoly) -> Result<SparsePoly, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SparsePoly) -> Result<SparsePoly, AlgebraError> {
        self.same_ring(other)?;
        let mut out = SparsePoly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), self.ring.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> SparsePoly {
        SparsePoly::from_terms(&self.ring, self.terms.iter().map(|(m, a)| (m.clone(), self.ring.mul(a, c))))
    }

    pub fn pow(&self, e: i64) -> Result<SparsePoly, AlgebraError> {
        if e < 0 {
            return Err(AlgebraError::NegativeExponent(e));
        }
        let mut e = e as u64;
        let mut acc = SparsePoly::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Ring-homomorphic substitution of variables; variables absent from
    /// `subst` are left alone.
    pub fn substitute(&self, subst: &HashMap<Var, SparsePoly>) -> Result<SparsePoly, AlgebraError> {
        for q in subst.values() {
            self.same_ring(q)?;
        }
        let mut powers: HashMap<(Var, u32), SparsePoly> = HashMap::new();
        let mut out = SparsePoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let (kept, replaced) = m.split(|v| !subst.contains_key(&v));
            let mut term = SparsePoly::monomial(&self.ring, kept, c.clone());
            for &(v, e) in replaced.pairs() {
                let pw = match powers.get(&(v, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = subst[&v].pow(e as i64)?;
                        powers.insert((v, e), p.clone());
                        p
                    }
                };
                term = term.mul(&pw)?;
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Evaluates at a point given as a variable assignment. Unassigned
    /// variables evaluate to zero.
    pub fn evaluate(&self, point: &HashMap<Var, Coeff>) -> Coeff {
        let r = &self.ring;
        let mut acc = r.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = point.get(&v).cloned().unwrap_or_else(|| r.zero());
                t = r.mul(&t, &r.pow(&x, e));
            }
            acc = r.add(&acc, &t);
        }
        acc
    }

    /// Canonical text form, highest graded-lex term first, e.g. `2*x^2*y - 3`.
    pub fn to_text(&self, names: &VarRegistry) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = self.ring.is_negative(c);
            let mag = if negative { self.ring.neg(c) } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !self.ring.is_one(&mag) || m.is_one() {
                factors.push(self.ring.format(&mag));
            }
            for &(v, e) in m.pairs() {
                if e == 1 {
                    factors.push(names.name(v));
                } else {
                    factors.push(format!("{}^{e}", names.name(v)));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses the canonical text form produced by [`SparsePoly::to_text`].
    pub fn parse(text: &str, ring: &CoeffRing, names: &VarRegistry) -> Result<SparsePoly, AlgebraError> {
        let text = text.trim();
        if text == "0" {
            return Ok(SparsePoly::zero(ring));
        }
        // split into signed terms at top-level ' + ' / ' - ' / leading '-'
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut current = String::new();
        let mut negative = false;
        let chars: Vec<char> = text.chars().collect();
        let mut idx = 0;
        while idx < chars.len() {
            let ch = chars[idx];
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            let at_sep = depth == 0
                && (ch == '+' || ch == '-')
                && (current.trim().is_empty() && terms.is_empty() && ch == '-' || idx > 0 && chars[idx - 1] == ' ');
            if at_sep {
                if !current.trim().is_empty() {
                    terms.push((negative, current.trim().to_string()));
                }
                current.clear();
                negative = ch == '-';
            } else {
                current.push(ch);
            }
            idx += 1;
        }
        if !current.trim().is_empty() {
            terms.push((negative, current.trim().to_string()));
        }
        let mut out = SparsePoly::zero(ring);
        for (neg, body) in terms {
            let mut coeff = ring.one();
            let mut pairs = Vec::new();
            for factor in split_top_level(&body, '*') {
                let factor = factor.trim();
                let first = factor.chars().next().unwrap_or(' ');
                if first.is_ascii_digit() || first == '(' {
                    coeff = ring.mul(&coeff, &ring.parse(factor)?);
                } else {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (
                            n,
                            e.parse::<u32>().map_err(|_| AlgebraError::Parse(format!("bad exponent in {factor:?}")))?,
                        ),
                        None => (factor, 1),
                    };
                    let v =
                        names.lookup(name).ok_or_else(|| AlgebraError::Parse(format!("unknown variable {name:?}")))?;
                    pairs.push((v, exp));
                }
            }
            if neg {
                coeff = ring.neg(&coeff);
            }
            out.add_term(Monomial::from_pairs(pairs), coeff);
        }
        Ok(out)
    }
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (idx, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..idx]);
                start = idx + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zz() -> CoeffRing {
        CoeffRing::integers()
    }

    fn names() -> VarRegistry {
        VarRegistry::new().with(0, "x").with(1, "y").with(2, "w1").with(3, "w2")
    }

    #[test]
    fn binomial_square() {
        let r = zz();
        let f = SparsePoly::var(&r, 0).add(&SparsePoly::var(&r, 1)).unwrap();
        assert_eq!(f.pow(2).unwrap().to_text(&names()), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn frobenius_in_characteristic_three() {
        let r = CoeffRing::prime_field(3).unwrap();
        let f = SparsePoly::var(&r, 0).add(&SparsePoly::var(&r, 1)).unwrap();
        assert_eq!(f.pow(3).unwrap().to_text(&names()), "x^3 + y^3");
    }

    #[test]
    fn times_zero_and_errors() {
        let r = zz();
        let f = SparsePoly::var(&r, 0).add(&SparsePoly::one(&r)).unwrap();
        assert!(f.mul(&SparsePoly::zero(&r)).unwrap().is_zero());
        assert_eq!(f.pow(-1), Err(AlgebraError::NegativeExponent(-1)));
        let q = SparsePoly::one(&CoeffRing::rationals());
        assert!(matches!(f.add(&q), Err(AlgebraError::RingMismatch { .. })));
    }

    #[test]
    fn substitution_examples() {
        let r = zz();
        let x2 = SparsePoly::var(&r, 0).pow(2).unwrap();
        let w = SparsePoly::var(&r, 2).add(&SparsePoly::var(&r, 3)).unwrap();
        let s = x2.substitute(&HashMap::from([(0, w)])).unwrap();
        assert_eq!(s.to_text(&names()), "w1^2 + 2*w1*w2 + w2^2");
        let id = HashMap::from([(0, SparsePoly::var(&r, 0)), (1, SparsePoly::var(&r, 1))]);
        let f = SparsePoly::parse("3*x^2*y - y + 7", &r, &names()).unwrap();
        assert_eq!(f.substitute(&id).unwrap(), f);

        let g = CoeffRing::gaussian(CoeffRing::rationals()).unwrap();
        let f = SparsePoly::var(&g, 0).pow(2).unwrap().add(&SparsePoly::one(&g)).unwrap();
        let i = SparsePoly::constant(&g, g.sqrt_neg_one().unwrap());
        assert!(f.substitute(&HashMap::from([(0, i)])).unwrap().is_zero());
    }

    #[test]
    fn text_round_trip_with_rationals_and_gaussians() {
        let q = CoeffRing::rationals();
        let f = SparsePoly::parse("-1/2*x^3 + x*y - 5/3", &q, &names()).unwrap();
        assert_eq!(f.to_text(&names()), "-1/2*x^3 + x*y - 5/3");
        let g = CoeffRing::gaussian(q).unwrap();
        let f = SparsePoly::parse("(1-2*i)*x*w1 + (0+1*i)", &g, &names()).unwrap();
        assert_eq!(SparsePoly::parse(&f.to_text(&names()), &g, &names()).unwrap(), f);
        assert_eq!(SparsePoly::parse("0", &g, &names()).unwrap(), SparsePoly::zero(&g));
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::from_pairs([(0, 2)]);
        let b = Monomial::from_pairs([(0, 1), (1, 1)]);
        let c = Monomial::from_pairs([(1, 2)]);
        let d = Monomial::from_pairs([(0, 1)]);
        assert!(a > b && b > c && c > d && d > Monomial::one());
    }

    fn small_poly() -> impl Strategy<Value = SparsePoly> {
        proptest::collection::vec((proptest::collection::vec((0u32..5, 0u32..3), 0..3), -4i64..5), 0..5).prop_map(
            |terms| {
                let r = zz();
                SparsePoly::from_terms(
                    &r,
                    terms.into_iter().filter_map(|(pairs, c)| {
                        let m = Monomial::from_pairs(pairs);
                        (m.degree() <= 4).then(|| (m, r.from_i64(c)))
                    }),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
            prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
            prop_assert_eq!(
                f.mul(&g.add(&h).unwrap()).unwrap(),
                f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
            );
            prop_assert!(f.sub(&f).unwrap().is_zero());
        }

        #[test]
        fn substitution_is_multiplicative(f in small_poly(), g in small_poly(), a in small_poly(), b in small_poly()) {
            let subst = HashMap::from([(0, a), (3, b)]);
            let lhs = f.mul(&g).unwrap().substitute(&subst).unwrap();
            let rhs = f.substitute(&subst).unwrap().mul(&g.substitute(&subst).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn text_round_trip(f in small_poly()) {
            let reg = VarRegistry::new();
            prop_assert_eq!(SparsePoly::parse(&f.to_text(&reg), &zz(), &reg).unwrap(), f);
        }
    }
}
