//! Symbolic checks that the two straight-line homotopies moving
//! `[a,b] -> [u_1 a + v_1 b, ..., u_n a + v_n b, 0, 0]` to
//! `[a,b] -> [0, ..., 0, a, b]` keep the sum of squares equal to `a^2 + b^2`,
//! given `sum u^2 = sum v^2 = 1` and `sum u v = 0`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Coeff, CoeffRing, Monomial, SparsePoly, Var, VarRegistry};
use crate::error::{AlgebraError, FormulaError};

const A: Var = 0;
const B: Var = 1;
const T: Var = 2;
const S_UU: Var = 3;
const S_VV: Var = 4;
const S_UV: Var = 5;
const U0: Var = 100;
const V0: Var = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomotopyMode {
    /// `(.., u_j a + v_j b, .., t a - t i b, t i a + t b)`.
    First,
    /// `(.., t u_j a + t v_j b, .., a - t i b, t i a + b)`.
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomotopySize {
    /// The `u`/`v` block is represented only through its Gram sums.
    Formal,
    /// `n` explicit symbolic coordinates `u_1..u_n`, `v_1..v_n`.
    Generic(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomotopyCheck {
    pub mode: HomotopyMode,
    pub size: HomotopySize,
    /// Whether to impose `sum u v = 0`; the unit-norm relations are always imposed.
    pub impose_orthogonality: bool,
}

impl HomotopyCheck {
    pub fn new(mode: HomotopyMode, size: HomotopySize) -> Self {
        HomotopyCheck { mode, size, impose_orthogonality: true }
    }

    pub fn without_orthogonality(mut self) -> Self {
        self.impose_orthogonality = false;
        self
    }
}

pub fn homotopy_names() -> VarRegistry {
    VarRegistry::new().with(A, "a").with(B, "b").with(T, "t").with(S_UU, "Suu").with(S_VV, "Svv").with(S_UV, "Suv")
}

struct Ctx<'r> {
    ring: &'r CoeffRing,
    i: SparsePoly,
}

impl Ctx<'_> {
    fn var(&self, v: Var) -> SparsePoly {
        SparsePoly::var(self.ring, v)
    }

    fn c(&self, v: i64) -> SparsePoly {
        SparsePoly::constant(self.ring, self.ring.from_i64(v))
    }

    fn sq(&self, p: &SparsePoly) -> Result<SparsePoly, AlgebraError> {
        p.mul(p)
    }

    /// The two trailing coordinates of the homotopy.
    fn tail(&self, mode: HomotopyMode) -> Result<[SparsePoly; 2], AlgebraError> {
        let (a, b, t, i) = (self.var(A), self.var(B), self.var(T), &self.i);
        let ib = i.mul(&b)?;
        let ia = i.mul(&a)?;
        Ok(match mode {
            HomotopyMode::First => [t.mul(&a.sub(&ib)?)?, t.mul(&ia.add(&b)?)?],
            HomotopyMode::Second => [a.sub(&t.mul(&ib)?)?, t.mul(&ia)?.add(&b)?],
        })
    }

    /// Scale applied to the `u`/`v` block: `1` in the first mode, `t` in the second.
    fn block_scale(&self, mode: HomotopyMode) -> SparsePoly {
        match mode {
            HomotopyMode::First => self.c(1),
            HomotopyMode::Second => self.var(T),
        }
    }
}

/// Rewrites every quadratic form in the `u`/`v` variables of the shape
/// `alpha sum u_j^2 + beta sum v_j^2 + gamma sum u_j v_j` as
/// `alpha Suu + beta Svv + gamma Suv`. Anything else is left untouched.
fn reduce_gram(p: &SparsePoly, n: usize) -> Result<SparsePoly, AlgebraError> {
    let ring = p.ring();
    let is_uv = |v: Var| v >= U0;
    let mut groups: BTreeMap<Monomial, SparsePoly> = BTreeMap::new();
    let mut out = SparsePoly::zero(ring);
    for (m, c) in p.terms() {
        let (outer, inner) = m.split(|v| !is_uv(v));
        if inner.is_one() {
            out = out.add(&SparsePoly::monomial(ring, outer, c.clone()))?;
        } else {
            let g = groups.entry(outer).or_insert_with(|| SparsePoly::zero(ring));
            *g = g.add(&SparsePoly::monomial(ring, inner, c.clone()))?;
        }
    }
    let u = |j: usize| U0 + j as Var;
    let v = |j: usize| V0 + j as Var;
    let sum = |f: &dyn Fn(usize) -> Monomial| -> SparsePoly {
        SparsePoly::from_terms(ring, (1..=n).map(|j| (f(j), ring.one())))
    };
    let suu = sum(&|j| Monomial::from_pairs([(u(j), 2)]));
    let svv = sum(&|j| Monomial::from_pairs([(v(j), 2)]));
    let suv = sum(&|j| Monomial::from_pairs([(u(j), 1), (v(j), 1)]));
    for (outer, inner) in groups {
        let alpha = inner.coeff(&Monomial::from_pairs([(u(1), 2)]));
        let beta = inner.coeff(&Monomial::from_pairs([(v(1), 2)]));
        let gamma = inner.coeff(&Monomial::from_pairs([(u(1), 1), (v(1), 1)]));
        let candidate = suu.scale(&alpha).add(&svv.scale(&beta))?.add(&suv.scale(&gamma))?;
        let reduced = if n > 0 && candidate == inner {
            SparsePoly::from_terms(
                ring,
                [(Monomial::var(S_UU), alpha), (Monomial::var(S_VV), beta), (Monomial::var(S_UV), gamma)],
            )
        } else {
            inner
        };
        out = out.add(&reduced.mul(&SparsePoly::monomial(ring, outer, ring.one()))?)?;
    }
    Ok(out)
}

/// The sum of squares of the homotopy's coordinates after imposing the
/// requested relations, as a polynomial in `a`, `b`, `t` (and leftover symbols).
pub fn homotopy_sum_of_squares(check: HomotopyCheck, ring: &CoeffRing) -> Result<SparsePoly, FormulaError> {
    let ctx = Ctx { ring, i: SparsePoly::constant(ring, ring.require_sqrt_neg_one()?) };
    let (a, b) = (ctx.var(A), ctx.var(B));
    let scale = ctx.block_scale(check.mode);
    let block = match check.size {
        HomotopySize::Formal => {
            // (sum (u_j a + v_j b)^2) = a^2 Suu + 2ab Suv + b^2 Svv
            let a2 = ctx.sq(&a)?.mul(&ctx.var(S_UU))?;
            let ab = ctx.c(2).mul(&a.mul(&b)?)?.mul(&ctx.var(S_UV))?;
            let b2 = ctx.sq(&b)?.mul(&ctx.var(S_VV))?;
            a2.add(&ab)?.add(&b2)?.mul(&ctx.sq(&scale)?)?
        }
        HomotopySize::Generic(n) => {
            let mut acc = SparsePoly::zero(ring);
            for j in 1..=n {
                let coord = ctx.var(U0 + j as Var).mul(&a)?.add(&ctx.var(V0 + j as Var).mul(&b)?)?;
                acc = acc.add(&ctx.sq(&scale.mul(&coord)?)?)?;
            }
            reduce_gram(&acc, n)?
        }
    };
    let [p, q] = ctx.tail(check.mode)?;
    let total = block.add(&ctx.sq(&p)?)?.add(&ctx.sq(&q)?)?;
    let mut subst: HashMap<Var, SparsePoly> = HashMap::from([(S_UU, ctx.c(1)), (S_VV, ctx.c(1))]);
    if check.impose_orthogonality {
        subst.insert(S_UV, ctx.c(0));
    }
    Ok(total.substitute(&subst)?)
}

/// True iff the sum of squares of the homotopy's coordinates is identically
/// `a^2 + b^2` under the requested relations.
pub fn homotopy_invariance_check(check: HomotopyCheck, ring: &CoeffRing) -> Result<bool, FormulaError> {
    let got = homotopy_sum_of_squares(check, ring)?;
    let a = SparsePoly::var(ring, A);
    let b = SparsePoly::var(ring, B);
    let target = a.mul(&a)?.add(&b.mul(&b)?)?;
    Ok(got == target)
}

/// Same check with concrete vectors `u`, `v` (e.g. taken from a verified
/// formula), expanding the homotopy directly with no relations imposed.
pub fn homotopy_with_vectors(
    mode: HomotopyMode,
    u: &[Coeff],
    v: &[Coeff],
    ring: &CoeffRing,
) -> Result<bool, FormulaError> {
    if u.len() != v.len() {
        return Err(FormulaError::Shape(format!("u has {} entries, v has {}", u.len(), v.len())));
    }
    let ctx = Ctx { ring, i: SparsePoly::constant(ring, ring.require_sqrt_neg_one()?) };
    let (a, b) = (ctx.var(A), ctx.var(B));
    let scale = ctx.block_scale(mode);
    let mut total = SparsePoly::zero(ring);
    for (uj, vj) in u.iter().zip(v) {
        let coord = a.scale(uj).add(&b.scale(vj))?;
        total = total.add(&ctx.sq(&scale.mul(&coord)?)?)?;
    }
    for c in ctx.tail(mode)? {
        total = total.add(&ctx.sq(&c)?)?;
    }
    Ok(total == ctx.sq(&a)?.add(&ctx.sq(&b)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gq() -> CoeffRing {
        CoeffRing::gaussian(CoeffRing::rationals()).unwrap()
    }

    #[test]
    fn formal_modes_hold() {
        for mode in [HomotopyMode::First, HomotopyMode::Second] {
            let check = HomotopyCheck::new(mode, HomotopySize::Formal);
            assert!(homotopy_invariance_check(check, &gq()).unwrap(), "{mode:?}");
        }
    }

    #[test]
    fn dropping_orthogonality_leaves_residual() {
        let check = HomotopyCheck::new(HomotopyMode::Second, HomotopySize::Formal).without_orthogonality();
        assert!(!homotopy_invariance_check(check, &gq()).unwrap());
        let residual = homotopy_sum_of_squares(check, &gq()).unwrap();
        let ring = gq();
        let a = SparsePoly::var(&ring, A);
        let b = SparsePoly::var(&ring, B);
        let diff = residual.sub(&a.mul(&a).unwrap().add(&b.mul(&b).unwrap()).unwrap()).unwrap();
        assert_eq!(diff.to_text(&homotopy_names()), "2*a*b*t^2*Suv");

        let first = HomotopyCheck::new(HomotopyMode::First, HomotopySize::Formal).without_orthogonality();
        assert!(!homotopy_invariance_check(first, &gq()).unwrap());
    }

    #[test]
    fn generic_sizes_agree_with_formal() {
        for n in 1..=5 {
            for mode in [HomotopyMode::First, HomotopyMode::Second] {
                let check = HomotopyCheck::new(mode, HomotopySize::Generic(n));
                assert!(homotopy_invariance_check(check, &gq()).unwrap());
                assert!(!homotopy_invariance_check(check.without_orthogonality(), &gq()).unwrap());
            }
        }
    }

    #[test]
    fn works_in_prime_fields_with_a_root_of_minus_one() {
        let f5 = CoeffRing::prime_field(5).unwrap();
        let check = HomotopyCheck::new(HomotopyMode::Second, HomotopySize::Formal);
        assert!(homotopy_invariance_check(check, &f5).unwrap());
        let f7 = CoeffRing::prime_field(7).unwrap();
        assert!(homotopy_invariance_check(check, &f7).is_err());
    }

    #[test]
    fn concrete_vectors() {
        let ring = gq();
        let (one, zero) = (ring.one(), ring.zero());
        let u = vec![one.clone(), zero.clone(), zero.clone()];
        let v = vec![zero.clone(), one.clone(), zero.clone()];
        for mode in [HomotopyMode::First, HomotopyMode::Second] {
            assert!(homotopy_with_vectors(mode, &u, &v, &ring).unwrap());
        }
        let bad = vec![one.clone(), one, zero];
        assert!(!homotopy_with_vectors(HomotopyMode::Second, &u, &bad, &ring).unwrap());
    }
}
