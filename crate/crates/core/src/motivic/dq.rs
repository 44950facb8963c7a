//! The mod-2 motivic cohomology ring of the deleted quadric `DQ_n`, presented
//! over `Z/2[tau, rho]` by generators `a` in `(1,1)` and `b` in `(2,1)` with
//! `a^2 = rho a + tau b`, `b^(k+1) = 0`, and for even `n = 2k` also
//! `a b^k = epsilon b^k`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::BiDegree;
use crate::error::RingError;
use crate::motivic::m2::M2Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RhoMode {
    /// `rho = 0`: every element of the field is a square.
    #[default]
    Zero,
    /// `rho` is a free generator, as for the real numbers.
    Formal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Epsilon {
    #[default]
    Zero,
    Rho,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DQRingSpec {
    pub n: usize,
    pub rho: RhoMode,
    pub epsilon: Epsilon,
}

/// Basis monomial `a^e b^j`.
pub type DQMono = (u32, u32);

impl DQRingSpec {
    /// The all-squares ring (`rho = 0`, `epsilon = 0`).
    pub fn all_squares(n: usize) -> Self {
        DQRingSpec { n, rho: RhoMode::Zero, epsilon: Epsilon::Zero }
    }

    pub fn with_rho(mut self, rho: RhoMode) -> Self {
        self.rho = rho;
        self
    }

    pub fn with_epsilon(mut self, epsilon: Epsilon) -> Self {
        self.epsilon = epsilon;
        self
    }

    /// `k` with `n = 2k` or `n = 2k + 1`.
    pub fn k(&self) -> u32 {
        (self.n / 2) as u32
    }

    pub fn is_even(&self) -> bool {
        self.n.is_multiple_of(2)
    }

    pub(crate) fn scalar(&self, c: M2Poly) -> M2Poly {
        match self.rho {
            RhoMode::Zero => c.without_rho(),
            RhoMode::Formal => c,
        }
    }

    fn epsilon_value(&self) -> M2Poly {
        match self.epsilon {
            Epsilon::Zero => M2Poly::zero(),
            Epsilon::Rho => self.scalar(M2Poly::rho()),
        }
    }

    /// Normal-form basis monomials `a^e b^j`, ordered by `(e, j)`.
    pub fn basis(&self) -> Vec<DQMono> {
        let k = self.k();
        let mut out = Vec::new();
        for e in 0..=1 {
            for j in 0..=k {
                if e == 1 && j == k && self.is_even() {
                    continue;
                }
                out.push((e, j));
            }
        }
        out
    }

    pub fn mono_degree((e, j): DQMono) -> BiDegree {
        BiDegree::new((e + 2 * j) as i64, (e + j) as i64)
    }

    /// Rewrites `a^e b^j` (with `e <= 2`) into normal form, accumulating
    /// `coeff * result` into `out`.
    pub(crate) fn reduce_into(&self, e: u32, j: u32, coeff: &M2Poly, out: &mut BTreeMap<DQMono, M2Poly>) {
        if coeff.is_zero() {
            return;
        }
        let k = self.k();
        match e {
            0 | 1 if j > k => {}
            1 if j == k && self.is_even() => {
                let c = coeff.mul(&self.epsilon_value());
                self.reduce_into(0, k, &c, out);
            }
            0 | 1 => {
                let slot = out.entry((e, j)).or_default();
                slot.add_assign(&self.scalar(coeff.clone()));
                if slot.is_zero() {
                    out.remove(&(e, j));
                }
            }
            2 => {
                // a^2 = rho a + tau b
                self.reduce_into(1, j, &self.scalar(coeff.mul(&M2Poly::rho())), out);
                self.reduce_into(0, j + 1, &coeff.mul(&M2Poly::tau()), out);
            }
            _ => unreachable!("products of normal-form monomials have e <= 2"),
        }
    }

    pub fn describe(&self) -> String {
        let k = self.k();
        let a2 = match self.rho {
            RhoMode::Zero => "a^2 = t*b".to_string(),
            RhoMode::Formal => "a^2 = r*a + t*b".to_string(),
        };
        let mut rels = vec![a2, format!("b^{} = 0", k + 1)];
        if self.is_even() {
            let eps = match (self.epsilon, self.rho) {
                (Epsilon::Rho, RhoMode::Formal) => "r",
                _ => "0",
            };
            rels.push(if eps == "0" { format!("a*b^{k} = 0") } else { format!("a*b^{k} = r*b^{k}") });
        }
        format!("H(DQ_{}; Z/2) = M2[a,b] / ({})", self.n, rels.join(", "))
    }
}

/// A class in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DQClass {
    spec: DQRingSpec,
    terms: BTreeMap<DQMono, M2Poly>,
}

impl DQClass {
    pub fn zero(spec: DQRingSpec) -> Self {
        DQClass { spec, terms: BTreeMap::new() }
    }

    /// `coeff * a^e * b^j` reduced to normal form (`e` may be 0, 1 or 2).
    pub fn monomial(spec: DQRingSpec, coeff: M2Poly, e: u32, j: u32) -> Self {
        if e > 2 {
            let rest = DQClass::monomial(spec, M2Poly::one(), e - 2, j);
            let sq = DQClass::monomial(spec, coeff, 2, 0);
            return rest.mul(&sq).expect("same spec");
        }
        let mut terms = BTreeMap::new();
        spec.reduce_into(e, j, &coeff, &mut terms);
        DQClass { spec, terms }
    }

    pub fn one(spec: DQRingSpec) -> Self {
        Self::monomial(spec, M2Poly::one(), 0, 0)
    }

    pub fn a(spec: DQRingSpec) -> Self {
        Self::monomial(spec, M2Poly::one(), 1, 0)
    }

    pub fn b(spec: DQRingSpec) -> Self {
        Self::monomial(spec, M2Poly::one(), 0, 1)
    }

    pub fn scalar(spec: DQRingSpec, c: M2Poly) -> Self {
        Self::monomial(spec, c, 0, 0)
    }

    pub fn spec(&self) -> DQRingSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (DQMono, &M2Poly)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn coeff(&self, mono: DQMono) -> M2Poly {
        self.terms.get(&mono).cloned().unwrap_or_default()
    }

    fn check(&self, other: &DQClass) -> Result<(), RingError> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(RingError::SpecMismatch(format!("{:?}", self.spec), format!("{:?}", other.spec)))
        }
    }

    pub fn add(&self, other: &DQClass) -> Result<DQClass, RingError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (&m, c) in &other.terms {
            let slot = terms.entry(m).or_default();
            slot.add_assign(c);
            if slot.is_zero() {
                terms.remove(&m);
            }
        }
        Ok(DQClass { spec: self.spec, terms })
    }

    pub fn scale(&self, c: &M2Poly) -> DQClass {
        let mut terms = BTreeMap::new();
        for (&(e, j), x) in &self.terms {
            self.spec.reduce_into(e, j, &x.mul(c), &mut terms);
        }
        DQClass { spec: self.spec, terms }
    }

    /// Product in normal form.
    pub fn mul(&self, other: &DQClass) -> Result<DQClass, RingError> {
        self.check(other)?;
        let mut terms = BTreeMap::new();
        for (&(e1, j1), c1) in &self.terms {
            for (&(e2, j2), c2) in &other.terms {
                self.spec.reduce_into(e1 + e2, j1 + j2, &c1.mul(c2), &mut terms);
            }
        }
        Ok(DQClass { spec: self.spec, terms })
    }

    pub fn pow(&self, mut m: u64) -> DQClass {
        let mut acc = DQClass::one(self.spec);
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&base).expect("same spec");
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base).expect("same spec");
            }
        }
        acc
    }

    /// Bidegrees present in the class (coefficient degree plus monomial degree).
    pub fn degrees(&self) -> Vec<BiDegree> {
        let mut out: Vec<BiDegree> = self
            .terms
            .iter()
            .flat_map(|(&mono, c)| {
                c.monomials().map(move |(t, m)| M2Poly::monomial_degree(t, m) + DQRingSpec::mono_degree(mono))
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// `a^m` in normal form. With `rho = 0`: `a^(2m) = tau^m b^m` and
/// `a^(2m+1) = tau^m a b^m`, so `a^m` vanishes exactly when `m > n`.
pub fn dq_power_a(spec: DQRingSpec, m: u64) -> DQClass {
    DQClass::a(spec).pow(m)
}

pub fn dq_mul(x: &DQClass, y: &DQClass) -> Result<DQClass, RingError> {
    x.mul(y)
}

/// The Bockstein: the derivation with `beta(tau) = rho`, `beta(rho) = 0`,
/// `beta(a) = b`, `beta(b) = 0`. It raises the first degree by one.
pub fn bockstein(x: &DQClass) -> DQClass {
    let spec = x.spec;
    let mut terms = BTreeMap::new();
    for (&(e, j), c) in &x.terms {
        // beta(c) a^e b^j
        spec.reduce_into(e, j, &c.bockstein(), &mut terms);
        // c beta(a^e b^j) = c b^(j+1) when e = 1
        if e == 1 {
            spec.reduce_into(0, j + 1, c, &mut terms);
        }
    }
    DQClass { spec, terms }
}

/// Pullback along `DQ_n -> DQ_{n+1}`: `a -> a`, `b -> b`, renormalized.
pub fn restrict_class(x: &DQClass) -> Result<DQClass, RingError> {
    let src = x.spec;
    if src.n == 0 {
        return Err(RingError::RestrictDimension { expected: 1, got: 0 });
    }
    let target = DQRingSpec { n: src.n - 1, ..src };
    let mut terms = BTreeMap::new();
    for (&(e, j), c) in &x.terms {
        target.reduce_into(e, j, c, &mut terms);
    }
    Ok(DQClass { spec: target, terms })
}

/// Bidegrees of the normal-form basis, sorted.
pub fn ring_additive_basis(spec: DQRingSpec) -> Vec<BiDegree> {
    let mut out: Vec<BiDegree> = spec.basis().into_iter().map(DQRingSpec::mono_degree).collect();
    out.sort();
    out
}

pub(crate) fn mono_text((e, j): DQMono, suffix: &str) -> Option<String> {
    let mut parts = Vec::new();
    if e == 1 {
        parts.push(format!("a{suffix}"));
    }
    match j {
        0 => {}
        1 => parts.push(format!("b{suffix}")),
        _ => parts.push(format!("b{suffix}^{j}")),
    }
    (!parts.is_empty()).then(|| parts.join("*"))
}

pub(crate) fn term_text(coeff: &M2Poly, mono: Option<String>) -> String {
    match (coeff.is_one(), mono) {
        (true, None) => "1".into(),
        (true, Some(m)) => m,
        (false, None) => coeff.to_string(),
        (false, Some(m)) if coeff.single_term() => format!("{coeff}*{m}"),
        (false, Some(m)) => format!("({coeff})*{m}"),
    }
}

impl fmt::Display for DQClass {
    /// Renders like `t^2*a*b^2 + r*b`, highest `(e, j)` first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(&mono, c)| term_text(c, mono_text(mono, ""))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
