use crate::blade::Sign;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest number of generators the blade encoding supports.
pub const MAX_DIM: u32 = 24;

/// Metric signature (p, q): generators 1..=p square to +1, the remaining q
/// generators square to -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub p: u32,
    pub q: u32,
}

impl Signature {
    pub fn new(p: u32, q: u32) -> Self {
        assert!(
            p + q <= MAX_DIM,
            "Cl({p},{q}) exceeds the supported dimension"
        );
        Signature { p, q }
    }

    /// Number of generators n = p + q.
    pub fn dim(&self) -> u32 {
        self.p + self.q
    }

    /// Dimension 2^n of the algebra as a real vector space.
    pub fn basis_len(&self) -> usize {
        1usize << self.dim()
    }

    /// Sign of e_i^2 for a 1-based generator index.
    pub fn generator_square(&self, i: u32) -> Sign {
        debug_assert!(i >= 1 && i <= self.dim());
        if i <= self.p {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// (p - q) reduced to 0..8.
    pub fn p_minus_q_mod8(&self) -> u32 {
        (self.p as i64 - self.q as i64).rem_euclid(8) as u32
    }

    /// True when p - q = 1 mod 4, i.e. the algebra splits into two simple ideals.
    pub fn is_semisimple(&self) -> bool {
        (self.p as i64 - self.q as i64).rem_euclid(4) == 1
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}
