//! The division ring K = f Cl(p,q) f and its coordinate arithmetic.
//!
//! K is spanned over R by {f}, {f, b_i f} or {f, b_i f, b_j f, b_k f} where
//! the b's are basis monomials commuting with f that square to -1 and, in the
//! quaternionic case, anticommute pairwise with b_i b_j = b_k. Coordinates
//! are stored against this monomial basis; the same blades span the ring of
//! the grade-involuted idempotent in the semisimple case, so one coordinate
//! system serves both components.

use crate::blade::{Blade, Sign, SignedBlade};
use crate::error::{Error, Result};
use crate::idempotent::Idempotent;
use crate::multivector::{rat_int, Multivector, Rational};
use crate::signature::Signature;
use crate::structure::{classify, RingType};
use crate::vee::stabilizer;
use num::{One, Signed, Zero};
use std::fmt;

/// Monomial basis of K for a fixed primitive idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KBasis {
    sig: Signature,
    ring: RingType,
    /// [1] or [1, b_i] or [1, b_i, b_j, b_k].
    monomials: Vec<Blade>,
}

impl KBasis {
    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn ring_type(&self) -> RingType {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Blade] {
        &self.monomials
    }

    pub fn zero(&self) -> KElement {
        KElement {
            coords: vec![Rational::zero(); self.dim()],
        }
    }

    pub fn one(&self) -> KElement {
        let mut k = self.zero();
        k.coords[0] = Rational::one();
        k
    }

    pub fn scalar(&self, c: Rational) -> KElement {
        let mut k = self.zero();
        k.coords[0] = c;
        k
    }

    pub fn from_coords(&self, coords: Vec<Rational>) -> KElement {
        assert_eq!(coords.len(), self.dim());
        KElement { coords }
    }

    fn check(&self, k: &KElement) -> Result<()> {
        if k.coords.len() != self.dim() {
            return Err(Error::KBasisMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &KElement, b: &KElement) -> Result<KElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(KElement {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn scale(&self, a: &KElement, c: &Rational) -> KElement {
        KElement {
            coords: a.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// Product in K. Dimension 1 is plain rational multiplication, 2 follows
    /// the complex rule with i^2 = -1, 4 the Hamilton rules ij = k etc.
    pub fn mul(&self, a: &KElement, b: &KElement) -> Result<KElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = self.zero();
        match self.dim() {
            1 => {
                out.coords[0] = &a.coords[0] * &b.coords[0];
            }
            2 => {
                out.coords[0] = &a.coords[0] * &b.coords[0] - &a.coords[1] * &b.coords[1];
                out.coords[1] = &a.coords[0] * &b.coords[1] + &a.coords[1] * &b.coords[0];
            }
            4 => {
                let (a0, a1, a2, a3) = (&a.coords[0], &a.coords[1], &a.coords[2], &a.coords[3]);
                let (b0, b1, b2, b3) = (&b.coords[0], &b.coords[1], &b.coords[2], &b.coords[3]);
                out.coords[0] = a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3;
                out.coords[1] = a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2;
                out.coords[2] = a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1;
                out.coords[3] = a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0;
            }
            _ => unreachable!(),
        }
        Ok(out)
    }

    /// The transposition restricted to K: identity on R, complex conjugation
    /// on C, quaternionic conjugation on H. Fixes the scalar coordinate and
    /// negates every imaginary one.
    pub fn conj(&self, a: &KElement) -> KElement {
        let mut out = a.clone();
        for c in &mut out.coords[1..] {
            *c = -c.clone();
        }
        out
    }

    /// Realize a K-element as the multivector sum(c_t b_t) f.
    pub fn to_multivector(&self, a: &KElement, f: &Multivector) -> Multivector {
        let mut out = Multivector::zero(self.sig);
        for (c, b) in a.coords.iter().zip(&self.monomials) {
            if c.is_zero() {
                continue;
            }
            let term = f.mul_signed_blade(SignedBlade::positive(*b), true).scale(c);
            out = out.add(&term).unwrap();
        }
        out
    }

    /// Coordinates of an element of K with respect to the monomial basis.
    /// The coefficient of b_t is 2^k times the scalar part of b_t^-1 x, since
    /// the scalar coefficient of f is exactly 2^-k and no product of two
    /// distinct basis monomials lands in the support of f.
    pub fn coords_of(&self, x: &Multivector, f: &Idempotent) -> Result<KElement> {
        let k = f.factors().len() as u32;
        let scale = rat_int(1i64 << k);
        let mut coords = Vec::with_capacity(self.dim());
        for b in &self.monomials {
            let binv = SignedBlade::positive(*b).inverse(self.sig);
            let coeff = x.mul_signed_blade(binv, true).scalar_part() * &scale;
            coords.push(coeff);
        }
        let candidate = KElement { coords };
        // Structural membership check: the residual must vanish.
        if &self.to_multivector(&candidate, f.value()) != x {
            return Err(Error::NotInDivisionRing);
        }
        Ok(candidate)
    }

    /// Render with unit symbols 1, i, j, k.
    pub fn format_element(&self, a: &KElement) -> String {
        const UNITS: [&str; 4] = ["", "i", "j", "k"];
        let mut parts: Vec<String> = Vec::new();
        for (t, c) in a.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let unit = UNITS[t];
            let mag = c.abs();
            let body = if unit.is_empty() {
                format!("{mag}")
            } else if mag.is_one() {
                unit.to_string()
            } else {
                format!("{mag}{unit}")
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else if c.is_negative() {
                parts.push(format!("- {body}"));
            } else {
                parts.push(format!("+ {body}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// Element of K in coordinates against a KBasis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KElement {
    coords: Vec<Rational>,
}

impl KElement {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// True when only the scalar coordinate may be nonzero.
    pub fn is_real(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn scalar_coord(&self) -> &Rational {
        &self.coords[0]
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Find the monomial basis of K = f Cl f: the first blades of the stabilizer
/// in monomial order that square to -1 (and anticommute pairwise in the
/// quaternionic case, ordered so that b_i b_j = +b_k).
pub fn division_ring_basis(f: &Idempotent) -> Result<KBasis> {
    let sig = f.signature();
    let ring = classify(sig).ring_type;
    let candidates: Vec<Blade> = stabilizer(f)
        .positive_blades()
        .into_iter()
        .filter(|b| !b.is_scalar() && b.square_sign(sig) == Sign::Minus)
        .collect();
    let monomials = match ring.component_dim() {
        1 => vec![Blade::ONE],
        2 => {
            let b = candidates.first().ok_or_else(|| {
                Error::InvalidFactors(format!("no imaginary unit commuting with f in {sig}"))
            })?;
            vec![Blade::ONE, *b]
        }
        4 => {
            let mut found = None;
            'outer: for (ia, a) in candidates.iter().enumerate() {
                for b in &candidates[ia + 1..] {
                    if !a.commutes_with(*b) {
                        found = Some((*a, *b));
                        break 'outer;
                    }
                }
            }
            let (mut bi, mut bj) = found.ok_or_else(|| {
                Error::InvalidFactors(format!("no anticommuting unit pair for {sig}"))
            })?;
            let (sign, bk) = bi.mul(bj, sig);
            if sign == Sign::Minus {
                std::mem::swap(&mut bi, &mut bj);
            }
            debug_assert_eq!(bi.mul(bj, sig), (Sign::Plus, bk));
            vec![Blade::ONE, bi, bj, bk]
        }
        _ => unreachable!(),
    };
    Ok(KBasis {
        sig,
        ring,
        monomials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idempotent::{primitive_idempotent, CommutingSet};
    use crate::multivector::rat;

    fn idem(sig: Signature, factors: &[&[u32]]) -> Idempotent {
        let blades: Vec<Blade> = factors.iter().map(|ix| Blade::from_indices(ix)).collect();
        let cs = CommutingSet::new(sig, blades).unwrap();
        let signs = vec![Sign::Plus; cs.len()];
        primitive_idempotent(&cs, &signs).unwrap()
    }

    #[test]
    fn bases_match_worked_examples() {
        let f = idem(Signature::new(2, 2), &[&[1, 3], &[2, 4]]);
        let kb = division_ring_basis(&f).unwrap();
        assert_eq!(kb.monomials(), &[Blade::ONE]);

        let f = idem(Signature::new(3, 0), &[&[1]]);
        let kb = division_ring_basis(&f).unwrap();
        assert_eq!(kb.monomials(), &[Blade::ONE, Blade::from_indices(&[2, 3])]);

        let f = idem(Signature::new(2, 4), &[&[1, 5], &[2, 6]]);
        let kb = division_ring_basis(&f).unwrap();
        let names: Vec<String> = kb.monomials().iter().map(|b| b.to_string()).collect();
        assert_eq!(names, ["1", "e3", "e4", "e34"]);
    }

    #[test]
    fn quaternion_relations_hold_as_multivectors() {
        let sig = Signature::new(2, 4);
        let f = idem(sig, &[&[1, 5], &[2, 6]]);
        let kb = division_ring_basis(&f).unwrap();
        let [_, bi, bj, bk]: [Blade; 4] = kb.monomials().try_into().unwrap();
        assert_eq!(bi.mul(bj, sig), (Sign::Plus, bk));
        assert_eq!(bj.mul(bk, sig), (Sign::Plus, bi));
        assert_eq!(bk.mul(bi, sig), (Sign::Plus, bj));
        assert_eq!(bi.square_sign(sig), Sign::Minus);

        // k_mul agrees with the multivector product projected to K.
        let a = kb.from_coords(vec![rat(1, 2), rat(3, 1), rat(0, 1), rat(-1, 4)]);
        let b = kb.from_coords(vec![rat(2, 1), rat(-1, 3), rat(5, 1), rat(1, 1)]);
        let prod = kb.mul(&a, &b).unwrap();
        let amv = kb.to_multivector(&a, f.value());
        let bmv = kb.to_multivector(&b, f.value());
        let direct = amv.mul(&bmv).unwrap();
        assert_eq!(kb.to_multivector(&prod, f.value()), direct);
        let recovered = kb.coords_of(&direct, &f).unwrap();
        assert_eq!(recovered, prod);
    }

    #[test]
    fn conjugation_is_an_antihomomorphism() {
        let sig = Signature::new(0, 2);
        let f = idem(sig, &[]);
        let kb = division_ring_basis(&f).unwrap();
        let a = kb.from_coords(vec![rat(1, 1), rat(2, 1), rat(-1, 2), rat(3, 1)]);
        let b = kb.from_coords(vec![rat(0, 1), rat(1, 1), rat(1, 1), rat(-2, 1)]);
        let lhs = kb.conj(&kb.mul(&a, &b).unwrap());
        let rhs = kb.mul(&kb.conj(&b), &kb.conj(&a)).unwrap();
        assert_eq!(lhs, rhs);

        // conj matches the transposition on K realized in the algebra.
        let amv = kb.to_multivector(&a, f.value());
        assert_eq!(
            kb.to_multivector(&kb.conj(&a), f.value()),
            amv.transposition()
        );
    }

    #[test]
    fn real_case_conjugation_is_identity() {
        let f = idem(Signature::new(2, 2), &[&[1, 3], &[2, 4]]);
        let kb = division_ring_basis(&f).unwrap();
        let a = kb.scalar(rat(7, 3));
        assert_eq!(kb.conj(&a), a);
    }

    #[test]
    fn coords_reject_elements_outside_k() {
        let sig = Signature::new(3, 0);
        let f = idem(sig, &[&[1]]);
        let kb = division_ring_basis(&f).unwrap();
        let outside = Multivector::parse("e2", sig).unwrap();
        assert!(matches!(
            kb.coords_of(&outside, &f),
            Err(Error::NotInDivisionRing)
        ));
    }
}
