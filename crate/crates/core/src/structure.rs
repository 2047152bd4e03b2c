//! Structure theory of Cl(p,q): matrix dimension and coefficient ring.

use crate::signature::Signature;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Radon-Hurwitz number: r_{i+8} = r_i + 4 with r_0..r_7 = 0,1,2,2,3,3,3,3.
/// The recursion runs downward as well, so negative arguments are defined
/// (r_{i-8} = r_i - 4); this is what k = q - r_{q-p} needs when p > q.
pub fn radon_hurwitz(i: i64) -> i64 {
    const BASE: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];
    let rem = i.rem_euclid(8);
    let octave = (i - rem) / 8;
    BASE[rem as usize] + 4 * octave
}

/// Coefficient ring of the spinor representation, fixed by (p-q) mod 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingType {
    Real,
    Complex,
    Quaternion,
    DoubleReal,
    DoubleQuaternion,
}

impl RingType {
    /// Real dimension of one component: 1, 2 or 4.
    pub fn component_dim(&self) -> usize {
        match self {
            RingType::Real | RingType::DoubleReal => 1,
            RingType::Complex => 2,
            RingType::Quaternion | RingType::DoubleQuaternion => 4,
        }
    }

    pub fn is_double(&self) -> bool {
        matches!(self, RingType::DoubleReal | RingType::DoubleQuaternion)
    }
}

impl fmt::Display for RingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingType::Real => write!(f, "R"),
            RingType::Complex => write!(f, "C"),
            RingType::Quaternion => write!(f, "H"),
            RingType::DoubleReal => write!(f, "R+R"),
            RingType::DoubleQuaternion => write!(f, "H+H"),
        }
    }
}

/// Cl(p,q) as a matrix algebra: Mat(N, K) when simple, Mat(N, K) + Mat(N, K)
/// when p - q = 1 mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraStructure {
    pub sig: Signature,
    pub simple: bool,
    /// k = q - r_{q-p}; the complete idempotent family has 2^k members.
    pub k: u32,
    /// N: matrix dimension, 2^k when simple and 2^(k-1) otherwise.
    pub matrix_dim: usize,
    pub ring_type: RingType,
}

pub fn classify(sig: Signature) -> AlgebraStructure {
    let diff = sig.p as i64 - sig.q as i64;
    let k_signed = sig.q as i64 - radon_hurwitz(-diff);
    debug_assert!(k_signed >= 0, "k must be nonnegative for {sig}");
    let k = k_signed as u32;
    let simple = !sig.is_semisimple();
    let ring_type = match diff.rem_euclid(8) {
        0 | 2 => RingType::Real,
        1 => RingType::DoubleReal,
        3 | 7 => RingType::Complex,
        4 | 6 => RingType::Quaternion,
        5 => RingType::DoubleQuaternion,
        _ => unreachable!(),
    };
    let matrix_dim = if simple {
        1usize << k
    } else {
        1usize << (k - 1)
    };
    AlgebraStructure {
        sig,
        simple,
        k,
        matrix_dim,
        ring_type,
    }
}

impl fmt::Display for AlgebraStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.simple {
            write!(f, "Mat({},{})", self.matrix_dim, self.ring_type)
        } else {
            let half = match self.ring_type {
                RingType::DoubleReal => "R",
                RingType::DoubleQuaternion => "H",
                _ => unreachable!(),
            };
            write!(f, "Mat({0},{1}) + Mat({0},{1})", self.matrix_dim, half)
        }
    }
}

/// Order of the stabilizer of a primitive idempotent under conjugation:
/// 2^(1+p+r_{q-p}) in a simple algebra and 2^(2+p+r_{q-p}) in a semisimple
/// one. Both follow from orbit-stabilizer counting: |G| = 2^(n+1) and the
/// orbit has 2^k members (simple) or 2^(k-1) (semisimple, one component).
pub fn stabilizer_order(sig: Signature) -> u64 {
    let diff = sig.q as i64 - sig.p as i64;
    let r = radon_hurwitz(diff);
    let base = 1 + sig.p as i64 + r + if sig.is_semisimple() { 1 } else { 0 };
    debug_assert!(base >= 0);
    1u64 << base
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radon_hurwitz_base_and_recursion() {
        assert_eq!(radon_hurwitz(0), 0);
        assert_eq!(radon_hurwitz(1), 1);
        assert_eq!(radon_hurwitz(4), 3);
        assert_eq!(radon_hurwitz(8), 4);
        for i in -40..40 {
            assert_eq!(radon_hurwitz(i + 8), radon_hurwitz(i) + 4);
        }
        // r_{-2} = r_6 - 4 = -1, which gives k(2,0) = 1 and Cl(2,0) = Mat(2,R).
        assert_eq!(radon_hurwitz(-2), -1);
        let s = classify(Signature::new(2, 0));
        assert_eq!((s.k, s.matrix_dim, s.ring_type), (1, 2, RingType::Real));
    }

    #[test]
    fn classification_of_worked_signatures() {
        let s = classify(Signature::new(2, 2));
        assert!(s.simple);
        assert_eq!((s.k, s.matrix_dim, s.ring_type), (2, 4, RingType::Real));

        let s = classify(Signature::new(3, 0));
        assert_eq!((s.k, s.matrix_dim, s.ring_type), (1, 2, RingType::Complex));

        let s = classify(Signature::new(2, 4));
        assert_eq!(
            (s.k, s.matrix_dim, s.ring_type),
            (2, 4, RingType::Quaternion)
        );

        let s = classify(Signature::new(2, 1));
        assert!(!s.simple);
        assert_eq!(
            (s.k, s.matrix_dim, s.ring_type),
            (2, 2, RingType::DoubleReal)
        );

        let s = classify(Signature::new(0, 3));
        assert_eq!(
            (s.k, s.matrix_dim, s.ring_type),
            (1, 1, RingType::DoubleQuaternion)
        );

        // Division ring cases: k = 0 and the algebra itself is R, C or H.
        let s = classify(Signature::new(0, 2));
        assert_eq!(
            (s.k, s.matrix_dim, s.ring_type),
            (0, 1, RingType::Quaternion)
        );
        assert_eq!(classify(Signature::new(0, 1)).ring_type, RingType::Complex);
        assert_eq!(classify(Signature::new(0, 0)).ring_type, RingType::Real);
    }

    #[test]
    fn dimension_count_is_consistent() {
        // 2^n = (#components) * N^2 * dim_R(K) for every n <= 9.
        for p in 0..=9u32 {
            for q in 0..=9 - p {
                let sig = Signature::new(p, q);
                let s = classify(sig);
                let comps = if s.simple { 1 } else { 2 };
                let total = comps * s.matrix_dim * s.matrix_dim * s.ring_type.component_dim();
                assert_eq!(total, sig.basis_len(), "dimension mismatch for {sig}");
            }
        }
    }

    #[test]
    fn stabilizer_orders_from_counting() {
        assert_eq!(stabilizer_order(Signature::new(1, 1)), 4);
        assert_eq!(stabilizer_order(Signature::new(2, 2)), 8);
        assert_eq!(stabilizer_order(Signature::new(2, 1)), 8);
        assert_eq!(stabilizer_order(Signature::new(0, 4)), 16);
        assert_eq!(stabilizer_order(Signature::new(7, 2)), 128);
        // Orbit-stabilizer product equals |G| = 2^(n+1).
        for p in 0..=9u32 {
            for q in 0..=9 - p {
                let sig = Signature::new(p, q);
                let s = classify(sig);
                let orbit = if s.simple {
                    1u64 << s.k
                } else {
                    1u64 << (s.k - 1)
                };
                assert_eq!(
                    orbit * stabilizer_order(sig),
                    1u64 << (sig.dim() + 1),
                    "counting fails for {sig}"
                );
            }
        }
    }
}
