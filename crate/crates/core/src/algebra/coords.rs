//! Diagonalizing the split quadratic form once a square root of -1 exists.

use std::collections::HashMap;

use crate::algebra::poly::{SparsePoly, Var, VarRegistry};
use crate::algebra::ring::CoeffRing;
use crate::error::AlgebraError;

const W: Var = 0;
const A: Var = 1000;
const B: Var = 2000;
const C: Var = 3000;

fn w(l: usize) -> Var {
    W + l as Var
}

/// Names for the variables used below: `w1..`, `a1..`, `b1..`, `c`.
pub fn hyperbolic_names(n: usize) -> VarRegistry {
    let mut reg = VarRegistry::new();
    for l in 1..=n + 2 {
        reg.insert(w(l), format!("w{l}"));
    }
    for j in 1..=n / 2 + 1 {
        reg.insert(A + j as Var, format!("a{j}"));
        reg.insert(B + j as Var, format!("b{j}"));
    }
    reg.insert(C, "c");
    reg
}

/// The split form `a1*b1 + ... + a_{k+1}*b_{k+1}` (plus `c^2` when `n` is odd)
/// whose zero locus is the quadric of dimension `n`.
pub fn hyperbolic_form(n: usize, ring: &CoeffRing) -> SparsePoly {
    let pairs = n / 2 + 1;
    let mut form = SparsePoly::zero(ring);
    for j in 1..=pairs {
        let ab = SparsePoly::var(ring, A + j as Var).mul(&SparsePoly::var(ring, B + j as Var)).expect("same ring");
        form = form.add(&ab).expect("same ring");
    }
    if n % 2 == 1 {
        let c2 = SparsePoly::var(ring, C).pow(2).expect("non-negative exponent");
        form = form.add(&c2).expect("same ring");
    }
    form
}

/// Substitutes `a_j = w_{2j-1} + i*w_{2j}`, `b_j = w_{2j-1} - i*w_{2j}` (and
/// `c = w_{n+2}` for odd `n`) into the split form and reports whether the
/// result is exactly `w_1^2 + ... + w_{n+2}^2`.
pub fn hyperbolic_coordinate_change(n: usize, ring: &CoeffRing) -> Result<bool, AlgebraError> {
    let i = SparsePoly::constant(ring, ring.require_sqrt_neg_one()?);
    let mut subst: HashMap<Var, SparsePoly> = HashMap::new();
    for j in 1..=n / 2 + 1 {
        let re = SparsePoly::var(ring, w(2 * j - 1));
        let im = i.mul(&SparsePoly::var(ring, w(2 * j)))?;
        subst.insert(A + j as Var, re.add(&im)?);
        subst.insert(B + j as Var, re.sub(&im)?);
    }
    if n % 2 == 1 {
        subst.insert(C, SparsePoly::var(ring, w(n + 2)));
    }
    let image = hyperbolic_form(n, ring).substitute(&subst)?;
    let mut target = SparsePoly::zero(ring);
    for l in 1..=n + 2 {
        target = target.add(&SparsePoly::var(ring, w(l)).pow(2)?)?;
    }
    Ok(image == target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gq() -> CoeffRing {
        CoeffRing::gaussian(CoeffRing::rationals()).unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(hyperbolic_coordinate_change(0, &gq()).unwrap());
        assert!(hyperbolic_coordinate_change(1, &gq()).unwrap());
        assert!(hyperbolic_coordinate_change(4, &gq()).unwrap());
    }

    #[test]
    fn all_up_to_twelve_in_several_rings() {
        let rings = [
            gq(),
            CoeffRing::gaussian(CoeffRing::integers()).unwrap(),
            CoeffRing::gaussian(CoeffRing::prime_field(3).unwrap()).unwrap(),
            CoeffRing::prime_field(13).unwrap(),
        ];
        for ring in &rings {
            for n in 0..=12 {
                assert!(hyperbolic_coordinate_change(n, ring).unwrap(), "n={n} over {ring}");
            }
        }
    }

    #[test]
    fn needs_a_square_root_of_minus_one() {
        let err = hyperbolic_coordinate_change(2, &CoeffRing::rationals()).unwrap_err();
        assert!(matches!(err, AlgebraError::NoSqrtNegOne(_)));
        assert!(hyperbolic_coordinate_change(2, &CoeffRing::prime_field(7).unwrap()).is_err());
    }

    #[test]
    fn form_text() {
        let r = CoeffRing::integers();
        assert_eq!(hyperbolic_form(1, &r).to_text(&hyperbolic_names(1)), "a1*b1 + c^2");
    }
}
