use std::collections::HashMap;
use std::fmt;

use crate::algebra::{Coeff, CoeffRing, SparsePoly, Var, VarRegistry};
use crate::error::{AlgebraError, FormulaError};

const X0: Var = 0;
const Y0: Var = 10_000;

/// Variable id of `x_i` (1-based).
pub fn x_var(i: usize) -> Var {
    X0 + (i - 1) as Var
}

/// Variable id of `y_j` (1-based).
pub fn y_var(j: usize) -> Var {
    Y0 + (j - 1) as Var
}

/// A bilinear formula `z_k = sum_{i,j} T[k][i][j] x_i y_j` of type `[r, s, n]`.
///
/// It is a sum-of-squares formula when
/// `(x_1^2 + ... + x_r^2)(y_1^2 + ... + y_s^2) = z_1^2 + ... + z_n^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SosFormula {
    r: usize,
    s: usize,
    n: usize,
    ring: CoeffRing,
    tensor: Vec<Vec<Vec<Coeff>>>,
}

impl SosFormula {
    /// Builds a formula from a tensor indexed `[k][i][j]`.
    pub fn new(
        ring: CoeffRing,
        r: usize,
        s: usize,
        n: usize,
        tensor: Vec<Vec<Vec<Coeff>>>,
    ) -> Result<Self, FormulaError> {
        if r == 0 || s == 0 || n == 0 {
            return Err(FormulaError::Shape(format!("type [{r},{s},{n}] must be positive")));
        }
        if tensor.len() != n {
            return Err(FormulaError::Shape(format!("expected {n} slices, got {}", tensor.len())));
        }
        for (k, slice) in tensor.iter().enumerate() {
            if slice.len() != r || slice.iter().any(|row| row.len() != s) {
                return Err(FormulaError::Shape(format!("slice {k} is not {r}x{s}")));
            }
            for c in slice.iter().flatten() {
                ring.check(c)?;
            }
        }
        Ok(SosFormula { r, s, n, ring, tensor })
    }

    pub fn zeros(ring: CoeffRing, r: usize, s: usize, n: usize) -> Self {
        let z = ring.zero();
        SosFormula { r, s, n, tensor: vec![vec![vec![z; s]; r]; n], ring }
    }

    /// Builds an integer formula from small signed entries.
    pub fn from_i64(r: usize, s: usize, n: usize, entries: &[Vec<Vec<i64>>]) -> Result<Self, FormulaError> {
        let ring = CoeffRing::integers();
        let tensor = entries
            .iter()
            .map(|slice| slice.iter().map(|row| row.iter().map(|&v| ring.from_i64(v)).collect()).collect())
            .collect();
        Self::new(ring, r, s, n, tensor)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn tensor(&self) -> &[Vec<Vec<Coeff>>] {
        &self.tensor
    }

    /// Entry `T[k][i][j]`, 0-based.
    pub fn entry(&self, k: usize, i: usize, j: usize) -> &Coeff {
        &self.tensor[k][i][j]
    }

    pub(crate) fn set(&mut self, k: usize, i: usize, j: usize, c: Coeff) {
        self.tensor[k][i][j] = c;
    }

    pub fn names(&self) -> VarRegistry {
        let mut reg = VarRegistry::new();
        for i in 1..=self.r {
            reg.insert(x_var(i), format!("x{i}"));
        }
        for j in 1..=self.s {
            reg.insert(y_var(j), format!("y{j}"));
        }
        reg
    }

    /// `z_k` as a polynomial in the `x`s and `y`s (0-based `k`).
    pub fn z(&self, k: usize) -> SparsePoly {
        let terms = self.tensor[k].iter().enumerate().flat_map(|(i, row)| {
            row.iter().enumerate().map(move |(j, c)| {
                (crate::algebra::Monomial::from_pairs([(x_var(i + 1), 1), (y_var(j + 1), 1)]), c.clone())
            })
        });
        SparsePoly::from_terms(&self.ring, terms)
    }

    /// `sum z_k^2 - (sum x_i^2)(sum y_j^2)`.
    pub fn expansion_defect(&self) -> SparsePoly {
        let ring = &self.ring;
        let sum_sq = |vars: Vec<Var>| {
            vars.into_iter().fold(SparsePoly::zero(ring), |acc, v| {
                acc.add(&SparsePoly::var(ring, v).pow(2).expect("exponent 2")).expect("same ring")
            })
        };
        let xs = sum_sq((1..=self.r).map(x_var).collect());
        let ys = sum_sq((1..=self.s).map(y_var).collect());
        let mut total = xs.mul(&ys).expect("same ring").neg();
        for k in 0..self.n {
            let z = self.z(k);
            total = total.add(&z.mul(&z).expect("same ring")).expect("same ring");
        }
        total
    }

    pub fn verify_by_expansion(&self) -> bool {
        self.expansion_defect().is_zero()
    }

    pub fn to_hurwitz(&self) -> HurwitzSystem {
        let matrices = (0..self.r).map(|i| (0..self.n).map(|k| self.tensor[k][i].clone()).collect()).collect();
        HurwitzSystem { ring: self.ring.clone(), n: self.n, s: self.s, matrices }
    }

    /// Checks `B_j^T B_k + B_k^T B_j = 2 delta_{jk} I_s`.
    pub fn verify_by_hurwitz(&self) -> Result<bool, FormulaError> {
        self.to_hurwitz().verify()
    }

    /// Formula with the same tensor read in another ring (integers map to
    /// their images; rationals need invertible denominators).
    pub fn change_ring(&self, target: &CoeffRing) -> Result<SosFormula, FormulaError> {
        let src = &self.ring;
        let map = |c: &Coeff| -> Result<Coeff, AlgebraError> { target.parse(&src.format(c)) };
        let tensor = self
            .tensor
            .iter()
            .map(|slice| {
                slice
                    .iter()
                    .map(|row| row.iter().map(map).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        SosFormula::new(target.clone(), self.r, self.s, self.n, tensor)
    }

    /// Exchanges the roles of `x` and `y`, giving a formula of type `[s, r, n]`.
    pub fn swap_roles(&self) -> SosFormula {
        let tensor = self
            .tensor
            .iter()
            .map(|slice| (0..self.s).map(|j| (0..self.r).map(|i| slice[i][j].clone()).collect()).collect())
            .collect();
        SosFormula { r: self.s, s: self.r, n: self.n, ring: self.ring.clone(), tensor }
    }

    /// Evaluates `z` at concrete vectors.
    pub fn evaluate(&self, x: &[Coeff], y: &[Coeff]) -> Vec<Coeff> {
        let ring = &self.ring;
        self.tensor
            .iter()
            .map(|slice| {
                let mut acc = ring.zero();
                for (i, row) in slice.iter().enumerate() {
                    for (j, c) in row.iter().enumerate() {
                        if !ring.is_zero(c) {
                            acc = ring.add(&acc, &ring.mul(c, &ring.mul(&x[i], &y[j])));
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// Canonical one-line rendering, used for deterministic ordering.
    pub fn canonical_key(&self) -> String {
        crate::formula::json::to_json(self)
    }
}

impl fmt::Display for SosFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names();
        writeln!(f, "[{},{},{}] over {}", self.r, self.s, self.n, self.ring)?;
        for k in 0..self.n {
            writeln!(f, "  z{} = {}", k + 1, self.z(k).to_text(&names))?;
        }
        Ok(())
    }
}

/// Matrix form of a formula: `z = sum_i x_i B_i y` with each `B_i` of size `n x s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzSystem {
    ring: CoeffRing,
    n: usize,
    s: usize,
    matrices: Vec<Vec<Vec<Coeff>>>,
}

impl HurwitzSystem {
    pub fn new(ring: CoeffRing, n: usize, s: usize, matrices: Vec<Vec<Vec<Coeff>>>) -> Result<Self, FormulaError> {
        for (idx, b) in matrices.iter().enumerate() {
            if b.len() != n || b.iter().any(|row| row.len() != s) {
                return Err(FormulaError::Shape(format!("B_{} is not {n}x{s}", idx + 1)));
            }
        }
        Ok(HurwitzSystem { ring, n, s, matrices })
    }

    pub fn matrices(&self) -> &[Vec<Vec<Coeff>>] {
        &self.matrices
    }

    pub fn to_formula(&self) -> Result<SosFormula, FormulaError> {
        let r = self.matrices.len();
        let tensor = (0..self.n).map(|k| (0..r).map(|i| self.matrices[i][k].clone()).collect()).collect();
        SosFormula::new(self.ring.clone(), r, self.s, self.n, tensor)
    }

    /// `(B_a^T B_b)[p][q]`.
    fn gram(&self, a: usize, b: usize, p: usize, q: usize) -> Coeff {
        let ring = &self.ring;
        let (ma, mb) = (&self.matrices[a], &self.matrices[b]);
        (0..self.n).fold(ring.zero(), |acc, k| ring.add(&acc, &ring.mul(&ma[k][p], &mb[k][q])))
    }

    pub fn verify(&self) -> Result<bool, FormulaError> {
        let ring = &self.ring;
        if ring.characteristic() == 2 {
            return Err(AlgebraError::CharacteristicTwo.into());
        }
        let two = ring.from_i64(2);
        let zero = ring.zero();
        let r = self.matrices.len();
        for a in 0..r {
            for b in a..r {
                for p in 0..self.s {
                    for q in 0..self.s {
                        let lhs = ring.add(&self.gram(a, b, p, q), &self.gram(b, a, p, q));
                        let want = if a == b && p == q { &two } else { &zero };
                        if lhs != *want {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Restriction to `x_1..x_{r'}` and `y_1..y_{s'}` (remaining variables set to zero).
pub fn restrict_formula(f: &SosFormula, r: usize, s: usize) -> Result<SosFormula, FormulaError> {
    if r == 0 || s == 0 || r > f.r || s > f.s {
        return Err(FormulaError::RestrictBounds { r, s, r0: f.r, s0: f.s, n: f.n });
    }
    let tensor = f.tensor.iter().map(|slice| slice[..r].iter().map(|row| row[..s].to_vec()).collect()).collect();
    Ok(SosFormula { r, s, n: f.n, ring: f.ring.clone(), tensor })
}

/// `u = phi(e1, e1)` and `v = phi(e2, e1)` with the orthonormality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthonormalPair {
    pub u: Vec<Coeff>,
    pub v: Vec<Coeff>,
    pub ok: bool,
}

pub fn orthonormal_vectors(f: &SosFormula) -> Result<OrthonormalPair, FormulaError> {
    if f.r < 2 {
        return Err(FormulaError::TooFewRows(f.r));
    }
    let ring = &f.ring;
    let u: Vec<Coeff> = (0..f.n).map(|k| f.tensor[k][0][0].clone()).collect();
    let v: Vec<Coeff> = (0..f.n).map(|k| f.tensor[k][1][0].clone()).collect();
    let dot =
        |a: &[Coeff], b: &[Coeff]| a.iter().zip(b).fold(ring.zero(), |acc, (p, q)| ring.add(&acc, &ring.mul(p, q)));
    let ok = ring.is_one(&dot(&u, &u)) && ring.is_one(&dot(&v, &v)) && ring.is_zero(&dot(&u, &v));
    Ok(OrthonormalPair { u, v, ok })
}

/// Evaluates `(sum x^2)(sum y^2) - sum z^2` at one point; zero for every point
/// when the formula is verified.
pub fn pointwise_defect(f: &SosFormula, x: &[Coeff], y: &[Coeff]) -> Coeff {
    let ring = f.ring();
    let sq = |v: &[Coeff]| v.iter().fold(ring.zero(), |acc, c| ring.add(&acc, &ring.mul(c, c)));
    let z = f.evaluate(x, y);
    ring.sub(&ring.mul(&sq(x), &sq(y)), &sq(&z))
}

/// Variables for evaluating a formula through [`SparsePoly::evaluate`].
pub fn point(x: &[Coeff], y: &[Coeff]) -> HashMap<Var, Coeff> {
    let mut pt = HashMap::new();
    for (i, c) in x.iter().enumerate() {
        pt.insert(x_var(i + 1), c.clone());
    }
    for (j, c) in y.iter().enumerate() {
        pt.insert(y_var(j + 1), c.clone());
    }
    pt
}
