//! Classical formulas: the product-of-sums identity, the two-, four- and
//! eight-square identities, and the Hurwitz–Radon families.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::algebra::CoeffRing;
use crate::error::FormulaError;
use crate::formula::hurwitz_radon::hurwitz_radon_matrices;
use crate::formula::sos::SosFormula;
use crate::hopf::rho;

/// Multiplication tables of the normed algebras of dimension 2, 4 and 8 as
/// signed permutations: `table[i][j] = (k, sign)` means `e_i e_j = sign * e_k`.
const NORMED_ALGEBRAS: &str = include_str!("../../fixtures/normed_algebras.json");

type SignedTable = Vec<Vec<(usize, i64)>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalKind {
    /// `z_{(i,j)} = x_i y_j`, type `[r, s, rs]`.
    Trivial(usize, usize),
    /// Two-square identity, type `[2,2,2]`.
    Two,
    /// Four-square identity, type `[4,4,4]`.
    Four,
    /// Eight-square identity, type `[8,8,8]`.
    Eight,
}

fn fixture_tables() -> &'static BTreeMap<String, SignedTable> {
    static TABLES: OnceLock<BTreeMap<String, SignedTable>> = OnceLock::new();
    TABLES.get_or_init(|| serde_json::from_str(NORMED_ALGEBRAS).expect("normed algebra fixture is valid json"))
}

fn from_table(name: &str) -> Result<SosFormula, FormulaError> {
    let table = fixture_tables().get(name).ok_or_else(|| FormulaError::BadFixture(name.to_string()))?;
    let n = table.len();
    let ring = CoeffRing::integers();
    let mut f = SosFormula::zeros(ring.clone(), n, n, n);
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(FormulaError::BadFixture(name.to_string()));
        }
        for (j, &(k, sign)) in row.iter().enumerate() {
            if k >= n || sign.abs() != 1 {
                return Err(FormulaError::BadFixture(name.to_string()));
            }
            f.set(k, i, j, ring.from_i64(sign));
        }
    }
    if !f.verify_by_expansion() {
        return Err(FormulaError::BadFixture(name.to_string()));
    }
    Ok(f)
}

pub fn construct_classical(kind: ClassicalKind) -> Result<SosFormula, FormulaError> {
    match kind {
        ClassicalKind::Trivial(r, s) => {
            if r == 0 || s == 0 {
                return Err(FormulaError::Shape(format!("trivial formula needs r, s >= 1, got {r}, {s}")));
            }
            let ring = CoeffRing::integers();
            let mut f = SosFormula::zeros(ring.clone(), r, s, r * s);
            for i in 0..r {
                for j in 0..s {
                    f.set(i * s + j, i, j, ring.one());
                }
            }
            Ok(f)
        }
        ClassicalKind::Two => from_table("gauss"),
        ClassicalKind::Four => from_table("euler"),
        ClassicalKind::Eight => from_table("degen"),
    }
}

/// Formula of type `[rho(n), n, n]` with entries in `{-1, 0, 1}`:
/// `B_1 = I` and `B_2, ..., B_rho` anticommuting skew-symmetric signed
/// permutation matrices.
pub fn construct_hurwitz_radon(n: usize) -> SosFormula {
    assert!(n >= 1, "n must be positive");
    let family = hurwitz_radon_matrices(n);
    debug_assert_eq!(family.len() as u64, rho(n as u64));
    let ring = CoeffRing::integers();
    let mut f = SosFormula::zeros(ring.clone(), family.len(), n, n);
    for (i, b) in family.iter().enumerate() {
        for (row, &(col, sign)) in b.entries().iter().enumerate() {
            f.set(row, i, col, ring.from_i64(sign as i64));
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::restrict_formula;

    #[test]
    fn trivial_formula() {
        let f = construct_classical(ClassicalKind::Trivial(2, 3)).unwrap();
        assert_eq!((f.r(), f.s(), f.n()), (2, 3, 6));
        assert!(f.verify_by_expansion());
    }

    #[test]
    fn two_square_identity_is_gauss() {
        let f = construct_classical(ClassicalKind::Two).unwrap();
        let names = f.names();
        assert_eq!(f.z(0).to_text(&names), "x1*y1 - x2*y2");
        assert_eq!(f.z(1).to_text(&names), "x1*y2 + x2*y1");
        assert!(f.verify_by_expansion());
    }

    #[test]
    fn four_and_eight() {
        for kind in [ClassicalKind::Four, ClassicalKind::Eight] {
            let f = construct_classical(kind).unwrap();
            assert!(f.verify_by_expansion());
            assert!(f.verify_by_hurwitz().unwrap());
        }
    }

    #[test]
    fn flipped_sign_fails() {
        let mut f = construct_classical(ClassicalKind::Two).unwrap();
        let ring = f.ring().clone();
        f.set(0, 1, 1, ring.from_i64(1));
        assert!(!f.verify_by_expansion());
        assert!(!f.verify_by_hurwitz().unwrap());
    }

    #[test]
    fn hurwitz_radon_types() {
        for n in 1..=40usize {
            let f = construct_hurwitz_radon(n);
            assert_eq!((f.r() as u64, f.s(), f.n()), (rho(n as u64), n, n), "n={n}");
            assert!(f.verify_by_hurwitz().unwrap(), "n={n}");
        }
        for n in [1, 8, 16] {
            assert!(construct_hurwitz_radon(n).verify_by_expansion());
        }
        assert_eq!(construct_hurwitz_radon(16).r(), 9);
    }

    #[test]
    fn restrictions_stay_verified() {
        let degen = construct_classical(ClassicalKind::Eight).unwrap();
        assert!(restrict_formula(&degen, 5, 5).unwrap().verify_by_expansion());
        let triv = construct_classical(ClassicalKind::Trivial(2, 2)).unwrap();
        assert!(restrict_formula(&triv, 1, 1).unwrap().verify_by_expansion());
        assert_eq!(restrict_formula(&degen, 8, 8).unwrap(), degen);
        assert!(restrict_formula(&degen, 9, 1).is_err());
        assert!(restrict_formula(&degen, 0, 1).is_err());
    }
}
