use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// Bidegree `(p, q)` of a class in a bigraded ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct BiDegree {
    pub p: i64,
    pub q: i64,
}

impl BiDegree {
    pub const ZERO: BiDegree = BiDegree { p: 0, q: 0 };

    pub const fn new(p: i64, q: i64) -> Self {
        BiDegree { p, q }
    }

    /// `(i, ceil(i/2))`, the degree pattern of the deleted-quadric basis.
    pub fn half_ceil(i: i64) -> Self {
        BiDegree { p: i, q: (i + 1).div_euclid(2) }
    }

    pub fn scale(self, k: i64) -> Self {
        BiDegree { p: self.p * k, q: self.q * k }
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: BiDegree) -> BiDegree {
        BiDegree { p: self.p + rhs.p, q: self.q + rhs.q }
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bideg() -> impl Strategy<Value = BiDegree> {
        (-50i64..50, -50i64..50).prop_map(|(p, q)| BiDegree::new(p, q))
    }

    proptest! {
        #[test]
        fn addition_is_a_commutative_monoid(a in bideg(), b in bideg(), c in bideg()) {
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a + BiDegree::ZERO, a);
        }
    }

    #[test]
    fn half_ceil_values() {
        let got: Vec<_> = (0..5).map(BiDegree::half_ceil).collect();
        assert_eq!(
            got,
            vec![
                BiDegree::new(0, 0),
                BiDegree::new(1, 1),
                BiDegree::new(2, 1),
                BiDegree::new(3, 2),
                BiDegree::new(4, 2)
            ]
        );
    }
}
