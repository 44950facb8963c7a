//! Binomial parity, the Hopf condition, and the bound tables built on it.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::HopfError;
use crate::formula::{construct_hurwitz_radon, restrict_formula, SosFormula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of `C(n, i)` by Lucas' theorem: odd iff the bits of `i` are a
/// subset of the bits of `n`. Out-of-range `i` gives `C(n, i) = 0`.
pub fn binom_parity(n: u64, i: i64) -> Parity {
    if i < 0 || i as u64 > n {
        return Parity::Even;
    }
    if (i as u64) & !n == 0 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Pascal's triangle mod 2, built row by row with XOR. Independent of the bit
/// test above and used to cross-check it.
#[derive(Debug, Clone)]
pub struct PascalMod2 {
    rows: Vec<Vec<bool>>,
}

impl PascalMod2 {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<bool>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![true]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![false; n + 1];
            row[0] = true;
            row[n] = true;
            for i in 1..n {
                row[i] = prev[i - 1] ^ prev[i];
            }
            rows.push(row);
        }
        PascalMod2 { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn parity(&self, n: usize, i: i64) -> Parity {
        if i < 0 || i as usize > n {
            return Parity::Even;
        }
        if self.rows[n][i as usize] {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HopfTriple {
    pub r: u64,
    pub s: u64,
    pub n: u64,
}

impl HopfTriple {
    pub fn new(r: u64, s: u64, n: u64) -> Self {
        HopfTriple { r, s, n }
    }

    /// The open range `n - r < i < s` as inclusive bounds, possibly empty.
    fn range(&self) -> (i64, i64) {
        (self.n as i64 - self.r as i64 + 1, self.s as i64 - 1)
    }
}

/// The smallest `i` in `n - r < i < s` with `C(n, i)` odd, if any.
pub fn odd_witness(t: HopfTriple) -> Option<i64> {
    let (lo, hi) = t.range();
    (lo.max(0)..=hi).find(|&i| binom_parity(t.n, i) == Parity::Odd)
}

/// Whether `C(n, i)` is even for every `n - r < i < s`.
pub fn hopf_admissible(t: HopfTriple) -> bool {
    odd_witness(t).is_none()
}

/// Same condition with the range `n - s < i < r`; equal to
/// [`hopf_admissible`] because `C(n, i) = C(n, n - i)`.
pub fn hopf_admissible_mirrored(t: HopfTriple) -> bool {
    let lo = (t.n as i64 - t.s as i64 + 1).max(0);
    let hi = t.r as i64 - 1;
    (lo..=hi).all(|i| binom_parity(t.n, i) == Parity::Even)
}

pub const LOWER_BOUND_CAP: u64 = 1 << 20;

/// Smallest `n >= max(r, s)` satisfying the Hopf condition.
///
/// The first power of two `2^k >= max(r, s)` is always admissible, because
/// `C(2^k, i)` is even for `0 < i < 2^k`, so the loop is bounded; the cap only
/// guards against absurd inputs.
pub fn hopf_lower_bound(r: u64, s: u64) -> Result<u64, HopfError> {
    if r == 0 || s == 0 {
        return Err(HopfError::NonPositive(r as usize, s as usize));
    }
    let start = r.max(s);
    (start..=LOWER_BOUND_CAP).find(|&n| hopf_admissible(HopfTriple::new(r, s, n))).ok_or(HopfError::CapExceeded)
}

/// Hurwitz–Radon function: for `n = 2^(4a+b) * odd` with `0 <= b <= 3`,
/// returns `8a + 2^b`.
pub fn rho(n: u64) -> u64 {
    assert!(n >= 1, "rho is defined for positive n");
    let v = n.trailing_zeros() as u64;
    let (a, b) = (v / 4, v % 4);
    8 * a + (1 << b)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub r: u64,
    pub s: u64,
    pub hopf_lower: u64,
    pub construct_upper: u64,
    pub tight: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTable {
    pub rmax: u64,
    pub smax: u64,
    pub entries: Vec<BoundEntry>,
}

/// Smallest `n >= max(r, s)` with `min(r, s) <= rho(n)`: the size reached by
/// restricting a Hurwitz–Radon formula (after swapping `x` and `y` if needed).
pub fn hurwitz_radon_upper(r: u64, s: u64) -> u64 {
    let (lo, hi) = (r.min(s), r.max(s));
    (hi..).find(|&n| lo <= rho(n)).expect("rho(2^k) grows without bound")
}

/// The `[r, s, n]` formula realizing [`hurwitz_radon_upper`].
pub fn upper_bound_formula(r: u64, s: u64) -> SosFormula {
    let n = hurwitz_radon_upper(r, s);
    let hr = construct_hurwitz_radon(n as usize);
    if r <= s {
        restrict_formula(&hr, r as usize, s as usize).expect("r <= rho(n) and s <= n")
    } else {
        restrict_formula(&hr, s as usize, r as usize).expect("s <= rho(n) and r <= n").swap_roles()
    }
}

/// Lower and constructive upper bounds for every `1 <= r <= rmax`,
/// `1 <= s <= smax`. Each upper bound is realized by an actual formula which is
/// verified before the entry is recorded.
pub fn bound_table(rmax: u64, smax: u64) -> Result<BoundTable, HopfError> {
    if rmax == 0 || smax == 0 {
        return Err(HopfError::NonPositive(rmax as usize, smax as usize));
    }
    let cells: Vec<(u64, u64)> = (1..=rmax).flat_map(|r| (1..=smax).map(move |s| (r, s))).collect();
    let entries = cells
        .par_iter()
        .map(|&(r, s)| {
            let lower = hopf_lower_bound(r, s)?;
            let formula = upper_bound_formula(r, s);
            assert!(formula.verify_by_expansion(), "constructed [{r},{s},{}] failed", formula.n());
            let upper = formula.n() as u64;
            Ok(BoundEntry { r, s, hopf_lower: lower, construct_upper: upper, tight: lower == upper })
        })
        .collect::<Result<Vec<_>, HopfError>>()?;
    Ok(BoundTable { rmax, smax, entries })
}

impl BoundTable {
    pub fn get(&self, r: u64, s: u64) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.r == r && e.s == s)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,s,hopf_lower,construct_upper,tight\n");
        for e in &self.entries {
            let _ = writeln!(out, "{},{},{},{},{}", e.r, e.s, e.hopf_lower, e.construct_upper, e.tight);
        }
        out
    }

    /// Aligned grid: each cell is `lower/upper`, starred when the two meet.
    pub fn to_text(&self) -> String {
        let cell = |e: &BoundEntry| format!("{}/{}{}", e.hopf_lower, e.construct_upper, if e.tight { "*" } else { "" });
        let width = self.entries.iter().map(|e| cell(e).len()).max().unwrap_or(1).max(3);
        let mut out = String::new();
        let _ = write!(out, "{:>4} |", "r\\s");
        for s in 1..=self.smax {
            let _ = write!(out, " {s:>width$}");
        }
        out.push('\n');
        let _ = writeln!(out, "{}", "-".repeat(6 + (width + 1) * self.smax as usize));
        for r in 1..=self.rmax {
            let _ = write!(out, "{r:>4} |");
            for s in 1..=self.smax {
                let e = self.get(r, s).expect("full grid");
                let _ = write!(out, " {:>width$}", cell(e));
            }
            out.push('\n');
        }
        out.push_str("cells are hopf_lower/construct_upper; * marks tight\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parity_examples() {
        assert_eq!(binom_parity(3, 1), Parity::Odd);
        assert_eq!(binom_parity(8, 4), Parity::Even);
        for n in 0..40 {
            assert_eq!(binom_parity(n, 0), Parity::Odd);
        }
        assert_eq!(binom_parity(5, -1), Parity::Even);
        assert_eq!(binom_parity(5, 6), Parity::Even);
    }

    #[test]
    fn lucas_matches_pascal_up_to_512() {
        let pascal = PascalMod2::new(512);
        for n in 0..=512usize {
            for i in -1..=(n as i64 + 1) {
                assert_eq!(binom_parity(n as u64, i), pascal.parity(n, i), "C({n},{i})");
            }
        }
    }

    #[test]
    fn admissibility_examples() {
        assert!(hopf_admissible(HopfTriple::new(1, 1, 1)));
        assert!(!hopf_admissible(HopfTriple::new(3, 3, 3)));
        assert_eq!(odd_witness(HopfTriple::new(3, 3, 3)), Some(1));
        assert!(hopf_admissible(HopfTriple::new(4, 4, 4)));
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(hopf_lower_bound(2, 2), Ok(2));
        assert_eq!(hopf_lower_bound(3, 3), Ok(4));
        assert_eq!(hopf_lower_bound(5, 5), Ok(8));
        assert_eq!(hopf_lower_bound(0, 5), Err(HopfError::NonPositive(0, 5)));
    }

    #[test]
    fn lower_bound_never_exceeds_next_power_of_two() {
        for r in 1..=40u64 {
            for s in 1..=40u64 {
                let bound = r.max(s).next_power_of_two();
                assert!(hopf_lower_bound(r, s).unwrap() <= bound);
            }
        }
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(1), 1);
        assert_eq!(rho(8), 8);
        assert_eq!(rho(16), 9);
        assert_eq!(rho(12), 4);
        assert_eq!(rho(32), 10);
        assert_eq!(rho(256), 17);
    }

    #[test]
    fn symmetry_and_mirrored_range() {
        for r in 1..=64 {
            for s in 1..=64 {
                for n in 1..=64 {
                    let t = HopfTriple::new(r, s, n);
                    let swapped = HopfTriple::new(s, r, n);
                    assert_eq!(hopf_admissible(t), hopf_admissible(swapped));
                    assert_eq!(hopf_admissible(t), hopf_admissible_mirrored(t));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn monotone_in_r_and_s(r in 1u64..40, s in 1u64..40, n in 1u64..80, dr in 0u64..40, ds in 0u64..40) {
            let t = HopfTriple::new(r, s, n);
            if hopf_admissible(t) {
                let smaller = HopfTriple::new(r.saturating_sub(dr).max(1), s.saturating_sub(ds).max(1), n);
                prop_assert!(hopf_admissible(smaller));
            }
        }
    }

    #[test]
    fn table_entries() {
        let table = bound_table(10, 10).unwrap();
        let e = table.get(2, 2).unwrap();
        assert_eq!((e.hopf_lower, e.construct_upper, e.tight), (2, 2, true));
        let e = table.get(3, 3).unwrap();
        assert_eq!((e.hopf_lower, e.construct_upper, e.tight), (4, 4, true));
        for s in 1..=10 {
            let e = table.get(1, s).unwrap();
            assert_eq!((e.hopf_lower, e.construct_upper, e.tight), (s, s, true));
        }
        for e in &table.entries {
            assert!(e.hopf_lower <= e.construct_upper, "{e:?}");
        }
        let csv = table.to_csv();
        assert!(csv.starts_with("r,s,hopf_lower,construct_upper,tight\n1,1,1,1,true\n"));
        assert_eq!(csv.lines().count(), 101);
        assert!(table.to_text().contains("4/4*"));
    }
}
