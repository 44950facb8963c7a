//! Dense linear algebra over `GF(p)` for small systems.

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn dot(a: &[u64], b: &[u64], p: u64) -> u64 {
    a.iter().zip(b).fold(0, |acc, (x, y)| (acc + x * y) % p)
}

/// Affine solution set `particular + span(kernel)` of `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Affine {
    pub particular: Vec<u64>,
    pub kernel: Vec<Vec<u64>>,
}

/// Solves `A x = b` with `x` of length `dim`; `None` when inconsistent.
pub(crate) fn solve(rows: &[Vec<u64>], rhs: &[u64], dim: usize, p: u64) -> Option<Affine> {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut row = r.clone();
            row.push(b % p);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let Some(piv) = (row..m.len()).find(|&i| m[i][col] != 0) else { continue };
        m.swap(row, piv);
        let scale = inv(m[row][col], p);
        for v in m[row].iter_mut() {
            *v = *v * scale % p;
        }
        for i in 0..m.len() {
            if i != row && m[i][col] != 0 {
                let f = m[i][col];
                let pivot = m[row].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    if m[row..].iter().any(|r| r[dim] != 0) {
        return None;
    }
    let mut particular = vec![0; dim];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = m[r][dim];
    }
    let kernel = (0..dim)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; dim];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = (p - m[r][free]) % p;
            }
            v
        })
        .collect();
    Some(Affine { particular, kernel })
}

impl Affine {
    /// All points, in lexicographic order of kernel coordinates.
    pub fn points(&self, p: u64) -> impl Iterator<Item = Vec<u64>> + '_ {
        let d = self.kernel.len() as u32;
        let total = p.checked_pow(d).expect("solution space too large to enumerate");
        (0..total).map(move |mut code| {
            let mut x = self.particular.clone();
            for basis in self.kernel.iter().rev() {
                let c = code % p;
                code /= p;
                if c != 0 {
                    for (xi, bi) in x.iter_mut().zip(basis) {
                        *xi = (*xi + c * bi) % p;
                    }
                }
            }
            x
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_systems() {
        // x + y = 1 over GF(3): three solutions
        let a = solve(&[vec![1, 1]], &[1], 2, 3).unwrap();
        let pts: Vec<_> = a.points(3).collect();
        assert_eq!(pts.len(), 3);
        assert!(pts.iter().all(|v| (v[0] + v[1]) % 3 == 1));
        // inconsistent
        assert!(solve(&[vec![1, 1], vec![2, 2]], &[1, 1], 2, 3).is_none());
        // empty system: whole space
        assert_eq!(solve(&[], &[], 2, 5).unwrap().points(5).count(), 25);
        assert_eq!(inv(3, 7) * 3 % 7, 1);
    }
}
