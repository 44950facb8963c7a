//! Exact coefficient rings: the integers, the rationals, odd prime fields,
//! and the extension of any of those by a formal square root of -1.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Kind {
    Integers,
    Rationals,
    PrimeField(u64),
    /// Adjoins `i` with `i^2 = -1` over a non-Gaussian base.
    GaussianExt(Box<CoeffRing>),
}

/// A coefficient ring. Construction goes through the checked constructors, so
/// a value of this type never has characteristic 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffRing {
    kind: Kind,
}

/// An element of some [`CoeffRing`]. Elements are always stored reduced:
/// residues lie in `0..p`, rationals are in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
    /// `re + im*i` with both parts in the base ring.
    Gauss(Box<Coeff>, Box<Coeff>),
}

/// Descriptive view of a ring, for matching and serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind<'a> {
    Integers,
    Rationals,
    PrimeField(u64),
    GaussianExt(&'a CoeffRing),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// A square root of -1 modulo a prime `p = 1 (mod 4)`.
fn sqrt_neg_one_mod(p: u64) -> u64 {
    debug_assert_eq!(p % 4, 1);
    let mut g = 2;
    while pow_mod(g, (p - 1) / 2, p) != p - 1 {
        g += 1;
    }
    let root = pow_mod(g, (p - 1) / 4, p);
    // pick the smaller of the two roots so the choice is canonical
    root.min(p - root)
}

impl CoeffRing {
    pub fn integers() -> Self {
        CoeffRing { kind: Kind::Integers }
    }

    pub fn rationals() -> Self {
        CoeffRing { kind: Kind::Rationals }
    }

    pub fn prime_field(p: u64) -> Result<Self, AlgebraError> {
        if p == 2 {
            return Err(AlgebraError::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(AlgebraError::BadModulus(p));
        }
        Ok(CoeffRing { kind: Kind::PrimeField(p) })
    }

    /// Adjoin a square root of -1. Over `GF(p)` with `p = 1 (mod 4)` one already
    /// exists, and the prime field itself is returned.
    pub fn gaussian(base: CoeffRing) -> Result<Self, AlgebraError> {
        match base.kind {
            Kind::GaussianExt(_) => Err(AlgebraError::NestedGaussian),
            Kind::PrimeField(p) if p % 4 == 1 => Ok(base),
            _ => Ok(CoeffRing { kind: Kind::GaussianExt(Box::new(base)) }),
        }
    }

    pub fn kind(&self) -> RingKind<'_> {
        match &self.kind {
            Kind::Integers => RingKind::Integers,
            Kind::Rationals => RingKind::Rationals,
            Kind::PrimeField(p) => RingKind::PrimeField(*p),
            Kind::GaussianExt(_) => RingKind::GaussianExt(self.base_ref()),
        }
    }

    fn base_ref(&self) -> &CoeffRing {
        match &self.kind {
            Kind::GaussianExt(b) => b,
            _ => self,
        }
    }

    /// The base ring of a Gaussian extension; the ring itself otherwise.
    pub fn base(&self) -> CoeffRing {
        self.base_ref().clone()
    }

    pub fn characteristic(&self) -> u64 {
        match &self.kind {
            Kind::Integers | Kind::Rationals => 0,
            Kind::PrimeField(p) => *p,
            Kind::GaussianExt(b) => b.characteristic(),
        }
    }

    pub fn is_gaussian(&self) -> bool {
        matches!(self.kind, Kind::GaussianExt(_))
    }

    /// A square root of -1, when the ring has one.
    pub fn sqrt_neg_one(&self) -> Option<Coeff> {
        match &self.kind {
            Kind::PrimeField(p) if p % 4 == 1 => Some(Coeff::Mod(sqrt_neg_one_mod(*p))),
            Kind::GaussianExt(_) => {
                let b = self.base_ref();
                Some(Coeff::Gauss(Box::new(b.zero()), Box::new(b.one())))
            }
            _ => None,
        }
    }

    pub fn require_sqrt_neg_one(&self) -> Result<Coeff, AlgebraError> {
        self.sqrt_neg_one().ok_or_else(|| AlgebraError::NoSqrtNegOne(self.to_string()))
    }

    pub fn zero(&self) -> Coeff {
        match &self.kind {
            Kind::Integers => Coeff::Int(BigInt::zero()),
            Kind::Rationals => Coeff::Rat(BigRational::zero()),
            Kind::PrimeField(_) => Coeff::Mod(0),
            Kind::GaussianExt(_) => {
                let b = self.base_ref();
                Coeff::Gauss(Box::new(b.zero()), Box::new(b.zero()))
            }
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match &self.kind {
            Kind::Integers => Coeff::Int(v.clone()),
            Kind::Rationals => Coeff::Rat(BigRational::from_integer(v.clone())),
            Kind::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Coeff::Mod(r.to_u64().expect("residue fits in u64"))
            }
            Kind::GaussianExt(_) => {
                let b = self.base_ref();
                Coeff::Gauss(Box::new(b.from_bigint(v)), Box::new(b.zero()))
            }
        }
    }

    /// `re + im*i`; only valid for Gaussian rings.
    pub fn gauss(&self, re: Coeff, im: Coeff) -> Result<Coeff, AlgebraError> {
        if !self.is_gaussian() {
            return Err(AlgebraError::NoSqrtNegOne(self.to_string()));
        }
        let b = self.base_ref();
        b.check(&re)?;
        b.check(&im)?;
        Ok(Coeff::Gauss(Box::new(re), Box::new(im)))
    }

    /// Rational number `num/den`, valid in rings where `den` is invertible.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Coeff, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::Parse("zero denominator".into()));
        }
        match &self.kind {
            Kind::Integers => {
                let (q, r) = num.div_rem(den);
                if r.is_zero() {
                    Ok(Coeff::Int(q))
                } else {
                    Err(AlgebraError::ForeignCoefficient(format!("{num}/{den}"), self.to_string()))
                }
            }
            Kind::Rationals => Ok(Coeff::Rat(BigRational::new(num.clone(), den.clone()))),
            Kind::PrimeField(_) => {
                let d = self.from_bigint(den);
                let inv = self
                    .inv(&d)
                    .ok_or_else(|| AlgebraError::ForeignCoefficient(format!("{num}/{den}"), self.to_string()))?;
                Ok(self.mul(&self.from_bigint(num), &inv))
            }
            Kind::GaussianExt(_) => {
                let b = self.base_ref();
                Ok(Coeff::Gauss(Box::new(b.from_fraction(num, den)?), Box::new(b.zero())))
            }
        }
    }

    /// Checks that `c` has the shape of an element of this ring.
    pub fn check(&self, c: &Coeff) -> Result<(), AlgebraError> {
        let ok = match (&self.kind, c) {
            (Kind::Integers, Coeff::Int(_)) => true,
            (Kind::Rationals, Coeff::Rat(_)) => true,
            (Kind::PrimeField(p), Coeff::Mod(v)) => v < p,
            (Kind::GaussianExt(_), Coeff::Gauss(re, im)) => {
                let b = self.base_ref();
                b.check(re).is_ok() && b.check(im).is_ok()
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(AlgebraError::ForeignCoefficient(format!("{c:?}"), self.to_string()))
        }
    }

    pub fn is_zero(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Int(v) => v.is_zero(),
            Coeff::Rat(v) => v.is_zero(),
            Coeff::Mod(v) => *v == 0,
            Coeff::Gauss(re, im) => {
                let b = self.base_ref();
                b.is_zero(re) && b.is_zero(im)
            }
        }
    }

    pub fn is_one(&self, c: &Coeff) -> bool {
        *c == self.one()
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (&self.kind, a, b) {
            (_, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x + y),
            (_, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Kind::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => Coeff::Mod((x + y) % p),
            (Kind::GaussianExt(_), Coeff::Gauss(ar, ai), Coeff::Gauss(br, bi)) => {
                let base = self.base_ref();
                Coeff::Gauss(Box::new(base.add(ar, br)), Box::new(base.add(ai, bi)))
            }
            _ => panic!("coefficients {a:?}, {b:?} are not both in {self}"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (&self.kind, a) {
            (_, Coeff::Int(x)) => Coeff::Int(-x),
            (_, Coeff::Rat(x)) => Coeff::Rat(-x),
            (Kind::PrimeField(p), Coeff::Mod(x)) => Coeff::Mod((p - x) % p),
            (Kind::GaussianExt(_), Coeff::Gauss(re, im)) => {
                let base = self.base_ref();
                Coeff::Gauss(Box::new(base.neg(re)), Box::new(base.neg(im)))
            }
            _ => panic!("coefficient {a:?} is not in {self}"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (&self.kind, a, b) {
            (_, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x * y),
            (_, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Kind::PrimeField(p), Coeff::Mod(x), Coeff::Mod(y)) => Coeff::Mod(mul_mod(*x, *y, *p)),
            (Kind::GaussianExt(_), Coeff::Gauss(ar, ai), Coeff::Gauss(br, bi)) => {
                let base = self.base_ref();
                let re = base.sub(&base.mul(ar, br), &base.mul(ai, bi));
                let im = base.add(&base.mul(ar, bi), &base.mul(ai, br));
                Coeff::Gauss(Box::new(re), Box::new(im))
            }
            _ => panic!("coefficients {a:?}, {b:?} are not both in {self}"),
        }
    }

    pub fn pow(&self, a: &Coeff, mut e: u32) -> Coeff {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, if one exists.
    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        match (&self.kind, a) {
            (_, Coeff::Int(x)) => {
                if x.is_one() || (-x).is_one() {
                    Some(Coeff::Int(x.clone()))
                } else {
                    None
                }
            }
            (_, Coeff::Rat(x)) => (!x.is_zero()).then(|| Coeff::Rat(x.recip())),
            (Kind::PrimeField(p), Coeff::Mod(x)) => (*x != 0).then(|| Coeff::Mod(pow_mod(*x, p - 2, *p))),
            (Kind::GaussianExt(_), Coeff::Gauss(re, im)) => {
                // (re + im i)^{-1} = (re - im i) / (re^2 + im^2)
                let base = self.base_ref();
                let norm = base.add(&base.mul(re, re), &base.mul(im, im));
                let ninv = base.inv(&norm)?;
                Some(Coeff::Gauss(Box::new(base.mul(re, &ninv)), Box::new(base.neg(&base.mul(im, &ninv)))))
            }
            _ => None,
        }
    }

    /// Whether `c` is a negative integer or rational (used for pretty `-` signs).
    pub(crate) fn is_negative(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Int(v) => v.is_negative(),
            Coeff::Rat(v) => v.is_negative(),
            Coeff::Gauss(re, im) => {
                let b = self.base_ref();
                b.is_zero(im) && b.is_negative(re)
            }
            Coeff::Mod(_) => false,
        }
    }

    /// Canonical text form of a coefficient.
    pub fn format(&self, c: &Coeff) -> String {
        match c {
            Coeff::Int(v) => v.to_string(),
            Coeff::Rat(v) => {
                if v.is_integer() {
                    v.numer().to_string()
                } else {
                    format!("{}/{}", v.numer(), v.denom())
                }
            }
            Coeff::Mod(v) => v.to_string(),
            Coeff::Gauss(re, im) if self.base_ref().is_zero(im) => self.base_ref().format(re),
            Coeff::Gauss(re, im) => {
                let b = self.base_ref();
                let im_txt = b.format(im);
                if b.is_negative(im) {
                    format!("({}{}*i)", b.format(re), im_txt)
                } else {
                    format!("({}+{}*i)", b.format(re), im_txt)
                }
            }
        }
    }

    /// Parses the canonical text form produced by [`CoeffRing::format`].
    pub fn parse(&self, text: &str) -> Result<Coeff, AlgebraError> {
        let text = text.trim();
        let bad = || AlgebraError::Parse(format!("bad coefficient {text:?} for {self}"));
        if self.is_gaussian() {
            if let Some(inner) = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
                let inner = inner.strip_suffix("*i").ok_or_else(bad)?;
                // split at the sign that separates the real and imaginary parts
                let split = inner
                    .char_indices()
                    .skip(1)
                    .filter(|&(_, ch)| ch == '+' || ch == '-')
                    .map(|(idx, _)| idx)
                    .last()
                    .ok_or_else(bad)?;
                let b = self.base_ref();
                let re = b.parse(&inner[..split])?;
                let im_txt = inner[split..].trim_start_matches('+');
                let im = b.parse(im_txt)?;
                return self.gauss(re, im);
            }
            return self.parse_rational_text(text).map_err(|_| bad());
        }
        self.parse_rational_text(text).map_err(|_| bad())
    }

    fn parse_rational_text(&self, text: &str) -> Result<Coeff, AlgebraError> {
        let bad = || AlgebraError::Parse(format!("bad number {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        self.from_fraction(&num, &den)
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Integers => write!(f, "Z"),
            Kind::Rationals => write!(f, "Q"),
            Kind::PrimeField(p) => write!(f, "GF({p})"),
            Kind::GaussianExt(b) => write!(f, "{b}[i]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_characteristic_two_and_composites() {
        assert_eq!(CoeffRing::prime_field(2), Err(AlgebraError::CharacteristicTwo));
        assert_eq!(CoeffRing::prime_field(9), Err(AlgebraError::BadModulus(9)));
        assert_eq!(CoeffRing::prime_field(1), Err(AlgebraError::BadModulus(1)));
        assert!(CoeffRing::prime_field(7).is_ok());
    }

    #[test]
    fn gaussian_collapses_when_root_exists() {
        let gf5 = CoeffRing::prime_field(5).unwrap();
        assert_eq!(CoeffRing::gaussian(gf5.clone()).unwrap(), gf5);
        let i = gf5.sqrt_neg_one().unwrap();
        assert_eq!(gf5.mul(&i, &i), gf5.from_i64(-1));

        let gf3 = CoeffRing::prime_field(3).unwrap();
        let g3 = CoeffRing::gaussian(gf3.clone()).unwrap();
        assert!(g3.is_gaussian());
        assert!(gf3.sqrt_neg_one().is_none());
        let i = g3.sqrt_neg_one().unwrap();
        assert_eq!(g3.mul(&i, &i), g3.from_i64(-1));
        assert_eq!(CoeffRing::gaussian(g3), Err(AlgebraError::NestedGaussian));
    }

    #[test]
    fn inverses() {
        let q = CoeffRing::rationals();
        let g = CoeffRing::gaussian(q.clone()).unwrap();
        let z = g.gauss(q.from_i64(3), q.from_i64(-4)).unwrap();
        let zi = g.inv(&z).unwrap();
        assert_eq!(g.mul(&z, &zi), g.one());
        assert!(CoeffRing::integers().inv(&Coeff::Int(BigInt::from(2))).is_none());
        let f7 = CoeffRing::prime_field(7).unwrap();
        assert_eq!(f7.mul(&f7.inv(&Coeff::Mod(3)).unwrap(), &Coeff::Mod(3)), Coeff::Mod(1));
    }

    #[test]
    fn coefficient_text_round_trip() {
        let q = CoeffRing::rationals();
        let g = CoeffRing::gaussian(q.clone()).unwrap();
        for c in [
            g.gauss(q.from_fraction(&1.into(), &2.into()).unwrap(), q.from_i64(-3)).unwrap(),
            g.gauss(q.from_i64(-2), q.from_i64(5)).unwrap(),
        ] {
            assert_eq!(g.parse(&g.format(&c)).unwrap(), c);
        }
        assert_eq!(q.parse("-7/14").unwrap(), q.from_fraction(&(-1).into(), &2.into()).unwrap());
        let f5 = CoeffRing::prime_field(5).unwrap();
        assert_eq!(f5.parse("1/2").unwrap(), Coeff::Mod(3));
        assert!(CoeffRing::integers().parse("1/2").is_err());
    }
}
