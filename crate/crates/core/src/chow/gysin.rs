//! The inclusion `j: Q_{n-1} -> P^n` of a quadric hypersurface.
//!
//! `CH*(P^n) = Z[t]/(t^(n+1))`. Pullback sends `t` to `x`. Pushforward is
//! determined by `j_*(1) = 2t` and the projection formula on `x^i`, and by
//! `j_*(y) = t^(codim y + 1)` since `y` is the class of a linear subspace.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::BiDegree;
use crate::chow::ring::{half, mono_codim, y_codim, ChowClass};
use crate::error::ChowError;

/// Integer matrix stored by rows.
pub type IntMatrix = Vec<Vec<BigInt>>;

/// Class in `CH*(P^n)`: coefficients of `t^0 .. t^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjClass(pub Vec<BigInt>);

impl ProjClass {
    pub fn zero(n: usize) -> Self {
        ProjClass(vec![BigInt::zero(); n + 1])
    }

    /// `c * t^i`, zero past the top degree.
    pub fn monomial(n: usize, c: impl Into<BigInt>, i: usize) -> Self {
        let mut out = Self::zero(n);
        if i <= n {
            out.0[i] = c.into();
        }
        out
    }

    pub fn mul(&self, other: &ProjClass) -> ProjClass {
        let n = self.0.len() - 1;
        let mut out = Self::zero(n);
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                if i + j <= n {
                    out.0[i + j] += a * b;
                }
            }
        }
        out
    }
}

fn check_ambient(n: usize) -> Result<(), ChowError> {
    if n == 0 {
        Err(ChowError::ZeroAmbient)
    } else {
        Ok(())
    }
}

/// Generators of `CH^i(Q_m)`. In the middle codimension of an even quadric
/// these are `alpha = y` and `beta = x^k - y`.
pub fn quadric_generators(m: usize, i: usize) -> Vec<ChowClass> {
    let k = half(m) as usize;
    let yc = y_codim(m) as usize;
    if i > m {
        return Vec::new();
    }
    if m.is_multiple_of(2) && i == k {
        return vec![ChowClass::alpha(m), ChowClass::beta(m)];
    }
    if i < yc {
        vec![ChowClass::monomial(m, 1, i as u32, 0)]
    } else {
        vec![ChowClass::monomial(m, 1, (i - yc) as u32, 1)]
    }
}

/// Coordinates of the codimension-`i` part of `c` in [`quadric_generators`].
pub fn generator_coordinates(c: &ChowClass, i: usize) -> Vec<BigInt> {
    let m = c.dim();
    let part = c.codim_part(i as u32);
    let k = half(m);
    let yc = y_codim(m) as usize;
    if m.is_multiple_of(2) && i == k as usize {
        // c1 x^k + c2 y = c1 (alpha + beta) + c2 alpha
        let c1 = part.coeff((k, 0));
        let c2 = part.coeff((0, 1));
        return vec![&c1 + &c2, c1];
    }
    if i > m {
        return Vec::new();
    }
    let mono = if i < yc { (i as u32, 0) } else { ((i - yc) as u32, 1) };
    vec![part.coeff(mono)]
}

/// `j_*` on an arbitrary class of `Q_{n-1}`.
pub fn pushforward_class(n: usize, c: &ChowClass) -> Result<ProjClass, ChowError> {
    check_ambient(n)?;
    let m = n - 1;
    if c.dim() != m {
        return Err(ChowError::DimensionMismatch(c.dim(), m));
    }
    let mut out = ProjClass::zero(n);
    for (mono, coeff) in c.terms() {
        let target = mono_codim(m, mono) as usize + 1;
        let factor = if mono.1 == 0 { 2 } else { 1 };
        if target <= n {
            out.0[target] += coeff * factor;
        }
    }
    Ok(out)
}

/// `j^*` on a class of `P^n`.
pub fn pullback_class(n: usize, c: &ProjClass) -> Result<ChowClass, ChowError> {
    check_ambient(n)?;
    let m = n - 1;
    let mut out = ChowClass::zero(m);
    for (i, coeff) in c.0.iter().enumerate() {
        out = out.add(&ChowClass::monomial(m, coeff.clone(), i as u32, 0))?;
    }
    Ok(out)
}

/// Matrix of `j_*: CH^i(Q_{n-1}) -> CH^{i+1}(P^n)` in the generator bases.
pub fn gysin_pushforward(n: usize, i: usize) -> Result<IntMatrix, ChowError> {
    check_ambient(n)?;
    if i > n - 1 {
        return Err(ChowError::Range { index: i, max: n - 1 });
    }
    let row = quadric_generators(n - 1, i)
        .iter()
        .map(|g| pushforward_class(n, g).map(|p| p.0[i + 1].clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(vec![row])
}

/// `j^*(t^i)` in `CH*(Q_{n-1})`.
pub fn gysin_pullback(n: usize, i: usize) -> Result<ChowClass, ChowError> {
    check_ambient(n)?;
    if i > n {
        return Err(ChowError::Range { index: i, max: n });
    }
    pullback_class(n, &ProjClass::monomial(n, 1, i))
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    (0..a.len()).map(|r| (0..b[0].len()).map(|c| (0..b.len()).map(|k| &a[r][k] * &b[k][c]).sum()).collect()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GysinTable {
    pub n: usize,
    /// `push[i]`: `1 x g_i` matrix of `j_*` out of codimension `i`.
    pub push: Vec<IntMatrix>,
    /// `pull[i]`: `g_i x 1` matrix of `j^*` into codimension `i`.
    pub pull: Vec<IntMatrix>,
}

impl GysinTable {
    pub fn new(n: usize) -> Result<Self, ChowError> {
        check_ambient(n)?;
        let push = (0..n).map(|i| gysin_pushforward(n, i)).collect::<Result<Vec<_>, _>>()?;
        let pull = (0..n)
            .map(|i| {
                let img = gysin_pullback(n, i)?;
                Ok(generator_coordinates(&img, i).into_iter().map(|c| vec![c]).collect())
            })
            .collect::<Result<Vec<_>, ChowError>>()?;
        Ok(GysinTable { n, push, pull })
    }

    /// `j_* j^*` in each codimension `0..n`, as `1 x 1` matrices.
    pub fn composites(&self) -> Vec<IntMatrix> {
        self.push.iter().zip(&self.pull).map(|(p, q)| mat_mul(p, q)).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,pushforward,pullback\n");
        for i in 0..self.n {
            out.push_str(&format!("{i},{},{}\n", matrix_text(&self.push[i]), matrix_text(&self.pull[i])));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("Q_{} -> P^{}\n", self.n - 1, self.n);
        out.push_str(&format!("{:>4}  {:<12}{}\n", "i", "j_*", "j^*"));
        for i in 0..self.n {
            out.push_str(&format!("{i:>4}  {:<12}{}\n", matrix_text(&self.push[i]), matrix_text(&self.pull[i])));
        }
        out
    }
}

/// `[2]`, `[1 1]` or `[1;1]`.
pub fn matrix_text(m: &IntMatrix) -> String {
    let rows: Vec<String> = m.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", rows.join(";"))
}

/// Verifies `j_*(a . j^* b) = j_*(a) . b` for every generator `a` of
/// `CH*(Q_{n-1})` and every `b = t^l`, and that `j_* j^*` is multiplication by 2.
pub fn projection_formula_check(n: usize) -> bool {
    let Ok(table) = GysinTable::new(n) else { return false };
    let m = n - 1;
    for i in 0..=m {
        for a in quadric_generators(m, i) {
            let Ok(ja) = pushforward_class(n, &a) else { return false };
            for l in 0..=n {
                let b = ProjClass::monomial(n, 1, l);
                let Ok(jb) = pullback_class(n, &b) else { return false };
                let Ok(lhs) = a.mul(&jb).and_then(|c| pushforward_class(n, &c)) else { return false };
                if lhs != ja.mul(&b) {
                    return false;
                }
            }
        }
    }
    table.composites().iter().all(|c| c.len() == 1 && c[0].len() == 1 && c[0][0] == BigInt::from(2))
}

/// Bidegrees `(2i, i)` of generators of the motive of `Q_m`, with the extra
/// middle generator last for even `m`.
pub fn quadric_generator_degrees(m: usize) -> Vec<BiDegree> {
    let mut out: Vec<BiDegree> = (0..=m as i64).map(|i| BiDegree::new(2 * i, i)).collect();
    if m.is_multiple_of(2) {
        out.push(BiDegree::new(m as i64, m as i64 / 2));
    }
    out
}

fn rank_mod2(row: &[BigInt]) -> usize {
    usize::from(row.iter().any(|c| (c % 2u32).to_u32() != Some(0)))
}

/// Additive basis of mod-2 motivic cohomology of `DQ_n = P^n - Q_{n-1}` from
/// the localization sequence: cokernel of `j_*` mod 2 in its own degree, and
/// kernel of `j_*` mod 2 shifted from `(2i, i)` to `(2i+1, i+1)`.
pub fn dq_additive_basis_localization(n: usize) -> Result<Vec<BiDegree>, ChowError> {
    let table = GysinTable::new(n)?;
    let mut out = vec![BiDegree::ZERO];
    for (i, m) in table.push.iter().enumerate() {
        let row = &m[0];
        let rank = rank_mod2(row);
        let i = i as i64;
        for _ in rank..1 {
            out.push(BiDegree::new(2 * (i + 1), i + 1));
        }
        for _ in rank..row.len() {
            out.push(BiDegree::new(2 * i + 1, i + 1));
        }
    }
    out.sort();
    Ok(out)
}
