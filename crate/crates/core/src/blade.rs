//! Basis blades encoded as generator bitsets, with exact product signs.

use crate::error::{Error, Result};
use crate::signature::Signature;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};

/// Sign factor carried by blade products and group elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Sign::Minus)
    }

    pub fn as_i8(&self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A basis monomial e_I. Bit i-1 of the mask is set iff generator e_i is a
/// factor; the empty mask is the unit 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Blade(pub u32);

impl Blade {
    pub const ONE: Blade = Blade(0);

    /// Single generator e_i, 1-based.
    pub fn generator(i: u32) -> Self {
        assert!(i >= 1, "generator indices are 1-based");
        Blade(1 << (i - 1))
    }

    /// Blade from ascending 1-based generator indices.
    pub fn from_indices(indices: &[u32]) -> Self {
        let mut mask = 0u32;
        for &i in indices {
            assert!(i >= 1);
            let bit = 1 << (i - 1);
            assert!(mask & bit == 0, "repeated generator index {i}");
            mask |= bit;
        }
        Blade(mask)
    }

    /// Ascending list of 1-based generator indices.
    pub fn indices(&self) -> Vec<u32> {
        (0..32)
            .filter(|b| self.0 & (1 << b) != 0)
            .map(|b| b + 1)
            .collect()
    }

    pub fn grade(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_scalar(&self) -> bool {
        self.0 == 0
    }

    pub fn is_valid_for(&self, sig: Signature) -> bool {
        sig.dim() >= 32 || self.0 < (1u32 << sig.dim())
    }

    /// Number of generator transpositions needed to merge `self * other`
    /// into ascending order, mod 2.
    fn swap_parity(self, other: Blade) -> bool {
        let mut a = self.0 >> 1;
        let mut swaps = 0u32;
        while a != 0 {
            swaps += (a & other.0).count_ones();
            a >>= 1;
        }
        swaps & 1 == 1
    }

    /// Clifford product of two blades. The mask of the result is the
    /// symmetric difference; the sign counts transpositions plus one -1 per
    /// annihilated generator that squares to -1.
    pub fn mul(self, other: Blade, sig: Signature) -> (Sign, Blade) {
        debug_assert!(self.is_valid_for(sig) && other.is_valid_for(sig));
        let mut sign = Sign::from_parity(self.swap_parity(other));
        let mut common = self.0 & other.0;
        while common != 0 {
            let i = common.trailing_zeros() + 1;
            sign = sign * sig.generator_square(i);
            common &= common - 1;
        }
        (sign, Blade(self.0 ^ other.0))
    }

    /// Sign of e_I^2.
    pub fn square_sign(self, sig: Signature) -> Sign {
        self.mul(self, sig).0
    }

    /// Blades either commute or anticommute; true iff they commute.
    /// e_I e_J = (-1)^(|I||J| - |I∩J|) e_J e_I, independent of the metric.
    pub fn commutes_with(self, other: Blade) -> bool {
        let cross = self.grade() * other.grade();
        let shared = (self.0 & other.0).count_ones();
        (cross + shared) & 1 == 0
    }

    pub fn parse(s: &str, sig: Signature) -> Result<Blade> {
        crate::expr::parse_blade(s, sig)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return write!(f, "1");
        }
        let idx = self.indices();
        if idx.iter().all(|&i| i <= 9) {
            write!(f, "e")?;
            for i in idx {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            write!(f, "e{{{}}}", parts.join(","))
        }
    }
}

/// Graded lexicographic order: by grade first, then lexicographically on the
/// ascending index tuples. Within a grade the blade containing the lowest
/// differing generator comes first.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            if self.0 == other.0 {
                return Ordering::Equal;
            }
            let diff = self.0 ^ other.0;
            let low = diff & diff.wrapping_neg();
            if self.0 & low != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All 2^n blades of Cl(p,q) in the canonical monomial order. Position 0 is
/// the unit.
pub fn blade_order(sig: Signature) -> Vec<Blade> {
    let mut blades: Vec<Blade> = (0..sig.basis_len() as u32).map(Blade).collect();
    blades.sort();
    blades
}

/// A signed basis monomial, the element type of the vee group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedBlade {
    pub sign: Sign,
    pub blade: Blade,
}

impl SignedBlade {
    pub const ONE: SignedBlade = SignedBlade {
        sign: Sign::Plus,
        blade: Blade(0),
    };

    pub fn new(sign: Sign, blade: Blade) -> Self {
        SignedBlade { sign, blade }
    }

    pub fn positive(blade: Blade) -> Self {
        SignedBlade {
            sign: Sign::Plus,
            blade,
        }
    }

    pub fn mul(self, other: SignedBlade, sig: Signature) -> SignedBlade {
        let (s, b) = self.blade.mul(other.blade, sig);
        SignedBlade {
            sign: self.sign * other.sign * s,
            blade: b,
        }
    }

    /// Group inverse; equals the transposition image of the element.
    pub fn inverse(self, sig: Signature) -> SignedBlade {
        SignedBlade {
            sign: self.sign * self.blade.square_sign(sig),
            blade: self.blade,
        }
    }

    /// Multiplicative order in the vee group: 1, 2 or 4.
    pub fn order(self, sig: Signature) -> u32 {
        if self == SignedBlade::ONE {
            1
        } else if self.mul(self, sig) == SignedBlade::ONE {
            2
        } else {
            4
        }
    }

    /// Sign s with g e_I g^-1 = s e_I; conjugation acts diagonally on blades.
    pub fn conjugation_sign(self, target: Blade) -> Sign {
        Sign::from_parity(!self.blade.commutes_with(target))
    }

    pub fn parse(s: &str, sig: Signature) -> Result<SignedBlade> {
        let (sign, rest) = match s.as_bytes().first() {
            Some(b'+') => (Sign::Plus, &s[1..]),
            Some(b'-') => (Sign::Minus, &s[1..]),
            Some(_) => (Sign::Plus, s),
            None => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "empty blade".into(),
                })
            }
        };
        Ok(SignedBlade {
            sign,
            blade: Blade::parse(rest, sig)?,
        })
    }
}

impl Neg for SignedBlade {
    type Output = SignedBlade;
    fn neg(self) -> SignedBlade {
        SignedBlade {
            sign: -self.sign,
            blade: self.blade,
        }
    }
}

impl fmt::Display for SignedBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Plus => write!(f, "{}", self.blade),
            Sign::Minus => write!(f, "-{}", self.blade),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(indices: &[u32]) -> Blade {
        Blade::from_indices(indices)
    }

    #[test]
    fn generator_squares() {
        let sig = Signature::new(2, 2);
        assert_eq!(b(&[1]).mul(b(&[1]), sig), (Sign::Plus, Blade::ONE));
        assert_eq!(b(&[3]).mul(b(&[3]), sig), (Sign::Minus, Blade::ONE));
    }

    #[test]
    fn anticommutation_of_distinct_generators() {
        let sig = Signature::new(2, 0);
        assert_eq!(b(&[2]).mul(b(&[1]), sig), (Sign::Minus, b(&[1, 2])));
        assert_eq!(b(&[1]).mul(b(&[2]), sig), (Sign::Plus, b(&[1, 2])));
    }

    #[test]
    fn commuting_idempotent_factors() {
        // Both orders of e13 * e24 produce the same signed e1234.
        let sig = Signature::new(2, 2);
        let ab = b(&[1, 3]).mul(b(&[2, 4]), sig);
        let ba = b(&[2, 4]).mul(b(&[1, 3]), sig);
        assert_eq!(ab, ba);
        assert_eq!(ab, (Sign::Minus, b(&[1, 2, 3, 4])));
        assert!(b(&[1, 3]).commutes_with(b(&[2, 4])));
    }

    #[test]
    fn blade_product_is_associative() {
        // Exhaustive over all triples for n <= 5, mixed signatures.
        for (p, q) in [(5, 0), (3, 2), (0, 5), (2, 2)] {
            let sig = Signature::new(p, q);
            let n = sig.basis_len() as u32;
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let (a, bl) = (Blade(x), Blade(y));
                        let c = Blade(z);
                        let (s1, ab) = a.mul(bl, sig);
                        let (s2, ab_c) = ab.mul(c, sig);
                        let (s3, bc) = bl.mul(c, sig);
                        let (s4, a_bc) = a.mul(bc, sig);
                        assert_eq!(ab_c, a_bc);
                        assert_eq!(s1 * s2, s3 * s4, "sign mismatch at {x} {y} {z}");
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_order_matches_printed_lists() {
        let order2 = blade_order(Signature::new(2, 0));
        let names: Vec<String> = order2.iter().map(|b| b.to_string()).collect();
        assert_eq!(names, ["1", "e1", "e2", "e12"]);

        let order3 = blade_order(Signature::new(3, 0));
        let names: Vec<String> = order3.iter().map(|b| b.to_string()).collect();
        assert_eq!(names, ["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"]);

        assert_eq!(blade_order(Signature::new(0, 0)), vec![Blade::ONE]);
    }

    #[test]
    fn grade_then_lex_on_index_tuples() {
        // e14 precedes e23 even though its mask is numerically larger.
        assert!(b(&[1, 4]) < b(&[2, 3]));
        assert!(b(&[1, 2]) < b(&[1, 3]));
        assert!(b(&[3]) < b(&[1, 2]));
    }

    #[test]
    fn inverse_is_square_sign() {
        let sig = Signature::new(1, 2);
        for mask in 0..8u32 {
            let g = SignedBlade::positive(Blade(mask));
            assert_eq!(g.mul(g.inverse(sig), sig), SignedBlade::ONE);
        }
    }

    #[test]
    fn display_and_braced_form() {
        assert_eq!(b(&[1, 3]).to_string(), "e13");
        assert_eq!(Blade::ONE.to_string(), "1");
        assert_eq!(b(&[1, 10, 12]).to_string(), "e{1,10,12}");
    }

    #[test]
    fn conjugation_sign_matches_product_route() {
        let sig = Signature::new(2, 3);
        for g in 0..32u32 {
            for t in 0..32u32 {
                let gs = SignedBlade::positive(Blade(g));
                let target = Blade(t);
                let direct = gs.conjugation_sign(target);
                let (s1, gt) = Blade(g).mul(target, sig);
                let ginv = gs.inverse(sig);
                let (s2, back) = gt.mul(ginv.blade, sig);
                assert_eq!(back, target);
                assert_eq!(s1 * s2 * ginv.sign, direct);
            }
        }
    }
}
