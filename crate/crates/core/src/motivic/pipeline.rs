//! The Hopf condition read off from `(a1 + a2)^n` in `H(DQ_{r-1}) (x) H(DQ_{s-1})`.

use rayon::prelude::*;

use crate::error::RingError;
use crate::motivic::dq::{DQClass, DQRingSpec, Epsilon, RhoMode};
use crate::motivic::tensor::TensorClass;

/// `(a1 (x) 1 + 1 (x) a2)^n` with `rho = 0` and `epsilon = 0`.
pub fn diagonal_power(r: usize, s: usize, n: u64) -> TensorClass {
    assert!(r >= 1 && s >= 1, "r and s must be positive");
    diagonal_power_in(DQRingSpec::all_squares(r - 1), DQRingSpec::all_squares(s - 1), n).expect("all-squares specs")
}

/// As [`diagonal_power`] for explicit specs. Refuses specs with `rho` or
/// `epsilon` switched on, where `a` need not be nilpotent.
pub fn diagonal_power_in(left: DQRingSpec, right: DQRingSpec, n: u64) -> Result<TensorClass, RingError> {
    for spec in [left, right] {
        if spec.rho != RhoMode::Zero || spec.epsilon != Epsilon::Zero {
            return Err(RingError::RhoEnabled);
        }
    }
    let sum = TensorClass::left(&DQClass::a(left), right).add(&TensorClass::right(left, &DQClass::a(right)))?;
    Ok(sum.pow(n))
}

/// True when the diagonal power vanishes.
pub fn hopf_via_motivic(r: usize, s: usize, n: u64) -> bool {
    diagonal_power(r, s, n).is_zero()
}

/// `(r, s, n, verdict)` for all `1 <= r <= rmax`, `1 <= s <= smax`,
/// `max(r,s) <= n <= nmax`.
pub fn motivic_sweep(rmax: usize, smax: usize, nmax: u64) -> Vec<(usize, usize, u64, bool)> {
    let triples: Vec<(usize, usize, u64)> = (1..=rmax)
        .flat_map(|r| (1..=smax).map(move |s| (r, s)))
        .flat_map(|(r, s)| (r.max(s) as u64..=nmax).map(move |n| (r, s, n)))
        .collect();
    triples.into_par_iter().map(|(r, s, n)| (r, s, n, hopf_via_motivic(r, s, n))).collect()
}
