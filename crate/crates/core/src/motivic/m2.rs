use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::BiDegree;

/// Element of the coefficient model `Z/2[tau, rho]`, stored as the set of
/// monomials `tau^t rho^m` with coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct M2Poly {
    monos: BTreeSet<(u32, u32)>,
}

impl M2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn tau() -> Self {
        Self::monomial(1, 0)
    }

    pub fn rho() -> Self {
        Self::monomial(0, 1)
    }

    /// `tau^t rho^m`.
    pub fn monomial(t: u32, m: u32) -> Self {
        M2Poly { monos: BTreeSet::from([(t, m)]) }
    }

    pub fn is_zero(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.monos.len() == 1 && self.monos.contains(&(0, 0))
    }

    /// Monomials `(t, m)` in ascending lexicographic order.
    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = (u32, u32)> + '_ {
        self.monos.iter().copied()
    }

    fn toggle(&mut self, mono: (u32, u32)) {
        if !self.monos.remove(&mono) {
            self.monos.insert(mono);
        }
    }

    pub fn add(&self, other: &M2Poly) -> M2Poly {
        M2Poly { monos: self.monos.symmetric_difference(&other.monos).copied().collect() }
    }

    pub fn add_assign(&mut self, other: &M2Poly) {
        for &mono in &other.monos {
            self.toggle(mono);
        }
    }

    pub fn mul(&self, other: &M2Poly) -> M2Poly {
        let mut out = M2Poly::zero();
        for &(t1, m1) in &self.monos {
            for &(t2, m2) in &other.monos {
                out.toggle((t1 + t2, m1 + m2));
            }
        }
        out
    }

    /// Sets `rho = 0`.
    pub fn without_rho(&self) -> M2Poly {
        M2Poly { monos: self.monos.iter().copied().filter(|&(_, m)| m == 0).collect() }
    }

    /// Bockstein on coefficients: the derivation with `beta(tau) = rho` and
    /// `beta(rho) = 0`, so `beta(tau^t rho^m) = t tau^(t-1) rho^(m+1)`.
    pub fn bockstein(&self) -> M2Poly {
        let mut out = M2Poly::zero();
        for &(t, m) in &self.monos {
            if t % 2 == 1 {
                out.toggle((t - 1, m + 1));
            }
        }
        out
    }

    /// Bidegree of `tau^t rho^m`: `tau` sits in `(0,1)`, `rho` in `(1,1)`.
    pub fn monomial_degree(t: u32, m: u32) -> BiDegree {
        BiDegree::new(m as i64, (t + m) as i64)
    }

    /// The part of bidegree `d`.
    pub fn homogeneous_part(&self, d: BiDegree) -> M2Poly {
        M2Poly { monos: self.monos.iter().copied().filter(|&(t, m)| Self::monomial_degree(t, m) == d).collect() }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.monos.iter().map(|&(t, m)| Self::monomial_degree(t, m));
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub(crate) fn single_term(&self) -> bool {
        self.monos.len() == 1
    }
}

fn mono_text(t: u32, m: u32) -> String {
    let mut parts = Vec::new();
    match t {
        0 => {}
        1 => parts.push("t".to_string()),
        _ => parts.push(format!("t^{t}")),
    }
    match m {
        0 => {}
        1 => parts.push("r".to_string()),
        _ => parts.push(format!("r^{m}")),
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for M2Poly {
    /// `t` stands for tau and `r` for rho, highest monomial first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monos.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.monos.iter().rev().map(|&(t, m)| mono_text(t, m)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_two() {
        let x = M2Poly::tau().add(&M2Poly::rho());
        assert!(x.add(&x).is_zero());
        // (t + r)^2 = t^2 + r^2
        assert_eq!(x.mul(&x), M2Poly::monomial(2, 0).add(&M2Poly::monomial(0, 2)));
    }

    #[test]
    fn tau_powers_never_vanish() {
        let mut p = M2Poly::one();
        for _ in 0..64 {
            p = p.mul(&M2Poly::tau());
            assert!(!p.is_zero());
        }
    }

    #[test]
    fn bockstein_values() {
        assert_eq!(M2Poly::tau().bockstein(), M2Poly::rho());
        assert!(M2Poly::rho().bockstein().is_zero());
        assert!(M2Poly::monomial(2, 0).bockstein().is_zero());
        assert_eq!(M2Poly::monomial(3, 1).bockstein(), M2Poly::monomial(2, 2));
        for t in 0..8 {
            for m in 0..4 {
                assert!(M2Poly::monomial(t, m).bockstein().bockstein().is_zero());
            }
        }
    }

    #[test]
    fn degrees_and_text() {
        assert_eq!(M2Poly::monomial_degree(1, 0), BiDegree::new(0, 1));
        assert_eq!(M2Poly::monomial_degree(0, 1), BiDegree::new(1, 1));
        let x = M2Poly::monomial(2, 0).add(&M2Poly::monomial(1, 1));
        assert_eq!(x.to_string(), "t^2 + t*r");
        assert!(!x.is_homogeneous());
        assert_eq!(x.homogeneous_part(BiDegree::new(0, 2)), M2Poly::monomial(2, 0));
        assert_eq!(M2Poly::one().to_string(), "1");
    }
}
