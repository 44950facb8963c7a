//! Anticommuting skew-symmetric signed permutation matrices.
//!
//! Matrices are Kronecker words in the real 2x2 Pauli matrices
//! `I`, `P = [[0,1],[-1,0]]`, `Q = diag(1,-1)`, `R = [[0,1],[1,0]]`. A word is
//! skew iff it contains an odd number of `P`s, and two words anticommute iff
//! they differ at an odd number of positions where both letters are non-`I`.
//! Families for `2^m` with `m <= 3` are found by a small exhaustive search;
//! larger `m` use the 16-dimensional periodicity block.

use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Letter {
    I,
    P,
    Q,
    R,
}

type Word = Vec<Letter>;

const LETTERS: [Letter; 4] = [Letter::I, Letter::P, Letter::Q, Letter::R];

fn is_skew(w: &[Letter]) -> bool {
    w.iter().filter(|&&l| l == Letter::P).count() % 2 == 1
}

fn anticommute(a: &[Letter], b: &[Letter]) -> bool {
    a.iter().zip(b).filter(|(x, y)| **x != Letter::I && **y != Letter::I && x != y).count() % 2 == 1
}

fn all_words(m: usize) -> Vec<Word> {
    (0..4usize.pow(m as u32))
        .map(|mut code| {
            let mut w = vec![Letter::I; m];
            for slot in w.iter_mut().rev() {
                *slot = LETTERS[code % 4];
                code /= 4;
            }
            w
        })
        .collect()
}

/// Depth-first search for `size` pairwise anticommuting words among `pool`.
fn anticommuting_clique(pool: &[Word], size: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == size {
        return true;
    }
    let start = chosen.last().map_or(0, |&i| i + 1);
    for idx in start..pool.len() {
        if chosen.iter().all(|&c| anticommute(&pool[c], &pool[idx])) {
            chosen.push(idx);
            if anticommuting_clique(pool, size, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn small_family(m: usize) -> Vec<Word> {
    let size = (1usize << m) - 1;
    let pool: Vec<Word> = all_words(m).into_iter().filter(|w| is_skew(w)).collect();
    let mut chosen = Vec::new();
    assert!(anticommuting_clique(&pool, size, &mut chosen), "no skew family of size {size} in dimension 2^{m}");
    chosen.into_iter().map(|i| pool[i].clone()).collect()
}

/// Eight skew words of length 4 plus a symmetric word anticommuting with all
/// of them.
fn periodicity_block() -> &'static (Vec<Word>, Word) {
    static BLOCK: OnceLock<(Vec<Word>, Word)> = OnceLock::new();
    BLOCK.get_or_init(|| {
        let words = all_words(4);
        let skew: Vec<Word> = words.iter().filter(|w| is_skew(w)).cloned().collect();
        let sym: Vec<Word> =
            words.iter().filter(|w| !is_skew(w) && w.iter().any(|&l| l != Letter::I)).cloned().collect();
        // extend 8-cliques until one admits a compatible symmetric word
        fn search(skew: &[Word], sym: &[Word], chosen: &mut Vec<usize>) -> Option<Word> {
            if chosen.len() == 8 {
                return sym.iter().find(|m| chosen.iter().all(|&c| anticommute(&skew[c], m))).cloned();
            }
            let start = chosen.last().map_or(0, |&i| i + 1);
            for idx in start..skew.len() {
                if chosen.iter().all(|&c| anticommute(&skew[c], &skew[idx])) {
                    chosen.push(idx);
                    if let Some(m) = search(skew, sym, chosen) {
                        return Some(m);
                    }
                    chosen.pop();
                }
            }
            None
        }
        let mut chosen = Vec::new();
        let m = search(&skew, &sym, &mut chosen).expect("periodicity block exists");
        (chosen.into_iter().map(|i| skew[i].clone()).collect(), m)
    })
}

fn skew_family(m: usize) -> Vec<Word> {
    static SMALL: OnceLock<Vec<Vec<Word>>> = OnceLock::new();
    if m < 4 {
        let small = SMALL.get_or_init(|| (0..4).map(small_family).collect());
        return small[m].clone();
    }
    let (block, sym) = periodicity_block();
    let mut out: Vec<Word> = skew_family(m - 4)
        .into_iter()
        .map(|mut w| {
            w.extend_from_slice(sym);
            w
        })
        .collect();
    for c in block {
        let mut w = vec![Letter::I; m - 4];
        w.extend_from_slice(c);
        out.push(w);
    }
    out
}

/// Square signed permutation matrix: row `i` has its single nonzero entry
/// `sign` in column `col`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPerm {
    rows: Vec<(usize, i8)>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm { rows: (0..n).map(|i| (i, 1)).collect() }
    }

    fn letter(l: Letter) -> Self {
        let rows = match l {
            Letter::I => vec![(0, 1), (1, 1)],
            Letter::P => vec![(1, 1), (0, -1)],
            Letter::Q => vec![(0, 1), (1, -1)],
            Letter::R => vec![(1, 1), (0, 1)],
        };
        SignedPerm { rows }
    }

    fn word(w: &[Letter]) -> Self {
        w.iter().fold(SignedPerm::identity(1), |acc, &l| acc.kron(&SignedPerm::letter(l)))
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entries(&self) -> &[(usize, i8)] {
        &self.rows
    }

    pub fn kron(&self, other: &SignedPerm) -> SignedPerm {
        let nb = other.size();
        let mut rows = Vec::with_capacity(self.size() * nb);
        for &(ca, sa) in &self.rows {
            for &(cb, sb) in &other.rows {
                rows.push((ca * nb + cb, sa * sb));
            }
        }
        SignedPerm { rows }
    }

    pub fn mul(&self, other: &SignedPerm) -> SignedPerm {
        let rows = self
            .rows
            .iter()
            .map(|&(c, s)| {
                let (c2, s2) = other.rows[c];
                (c2, s * s2)
            })
            .collect();
        SignedPerm { rows }
    }

    pub fn transpose(&self) -> SignedPerm {
        let mut rows = vec![(0, 0); self.size()];
        for (r, &(c, s)) in self.rows.iter().enumerate() {
            rows[c] = (r, s);
        }
        SignedPerm { rows }
    }

    pub fn neg(&self) -> SignedPerm {
        SignedPerm { rows: self.rows.iter().map(|&(c, s)| (c, -s)).collect() }
    }
}

/// `B_1 = I_n` followed by `rho(n) - 1` anticommuting skew matrices of size `n`.
pub fn hurwitz_radon_matrices(n: usize) -> Vec<SignedPerm> {
    let m = n.trailing_zeros() as usize;
    let odd = SignedPerm::identity(n >> m);
    let mut out = vec![SignedPerm::identity(n)];
    out.extend(skew_family(m).iter().map(|w| SignedPerm::word(w).kron(&odd)));
    out
}
