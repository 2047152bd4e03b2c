//! Exact-rational linear combinations of blades.

use crate::blade::{Blade, Sign, SignedBlade};
use crate::error::{Error, Result};
use crate::signature::Signature;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Coefficient type. Idempotent coefficients are dyadic, products of random
/// inputs are not; arbitrary precision removes every tolerance.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// An element of Cl(p,q): a finite map from blades to nonzero rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(sig: Signature) -> Self {
        Multivector::from_term(sig, Blade::ONE, Rational::one())
    }

    pub fn scalar(sig: Signature, c: Rational) -> Self {
        Multivector::from_term(sig, Blade::ONE, c)
    }

    pub fn from_term(sig: Signature, blade: Blade, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            debug_assert!(blade.is_valid_for(sig));
            terms.insert(blade, c);
        }
        Multivector { sig, terms }
    }

    pub fn from_blade(sig: Signature, blade: Blade) -> Self {
        Multivector::from_term(sig, blade, Rational::one())
    }

    pub fn from_signed_blade(sig: Signature, g: SignedBlade) -> Self {
        let c = match g.sign {
            Sign::Plus => Rational::one(),
            Sign::Minus => -Rational::one(),
        };
        Multivector::from_term(sig, g.blade, c)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.terms
            .get(&blade)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scalar_part(&self) -> Rational {
        self.coefficient(Blade::ONE)
    }

    fn check_sig(&self, other: &Multivector) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                expected: self.sig,
                found: other.sig,
            });
        }
        Ok(())
    }

    fn insert(&mut self, blade: Blade, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(blade) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.insert(*b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.insert(*b, -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Multivector {
        let mut out = Multivector::zero(self.sig);
        for (b, c) in &self.terms {
            out.terms.insert(*b, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Multivector {
        if c.is_zero() {
            return Multivector::zero(self.sig);
        }
        let mut out = Multivector::zero(self.sig);
        for (b, coeff) in &self.terms {
            out.terms.insert(*b, coeff * c);
        }
        out
    }

    /// Exact distributive Clifford product.
    pub fn mul(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        let mut out = Multivector::zero(self.sig);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (sign, prod) = a.mul(*b, self.sig);
                let mut c = ca * cb;
                if sign.is_negative() {
                    c = -c;
                }
                out.insert(prod, c);
            }
        }
        Ok(out)
    }

    /// Left or right multiplication by a signed blade, in O(#terms).
    pub fn mul_signed_blade(&self, g: SignedBlade, from_left: bool) -> Multivector {
        let mut out = Multivector::zero(self.sig);
        for (b, c) in &self.terms {
            let (sign, prod) = if from_left {
                g.blade.mul(*b, self.sig)
            } else {
                b.mul(g.blade, self.sig)
            };
            let mut coeff = c.clone();
            if (sign * g.sign).is_negative() {
                coeff = -coeff;
            }
            out.insert(prod, coeff);
        }
        out
    }

    fn map_blades(&self, f: impl Fn(Blade) -> Sign) -> Multivector {
        let mut out = Multivector::zero(self.sig);
        for (b, c) in &self.terms {
            let coeff = if f(*b).is_negative() {
                -c.clone()
            } else {
                c.clone()
            };
            out.terms.insert(*b, coeff);
        }
        out
    }

    /// Grade involution: a grade-g blade scales by (-1)^g.
    pub fn grade_involution(&self) -> Multivector {
        self.map_blades(|b| Sign::from_parity(b.grade() & 1 == 1))
    }

    /// Reversion: a grade-g blade scales by (-1)^(g(g-1)/2).
    pub fn reversion(&self) -> Multivector {
        self.map_blades(|b| {
            let g = b.grade();
            Sign::from_parity((g * g.wrapping_sub(1) / 2) & 1 == 1)
        })
    }

    /// Clifford conjugation: a grade-g blade scales by (-1)^(g(g+1)/2).
    pub fn conjugation(&self) -> Multivector {
        self.map_blades(|b| {
            let g = b.grade();
            Sign::from_parity((g * (g + 1) / 2) & 1 == 1)
        })
    }

    /// The transposition anti-involution: every blade maps to its group
    /// inverse, i.e. e_I goes to +e_I when e_I^2 = 1 and to -e_I otherwise.
    /// In Cl(p,0) this is reversion, in Cl(0,q) Clifford conjugation.
    pub fn transposition(&self) -> Multivector {
        let sig = self.sig;
        self.map_blades(|b| b.square_sign(sig))
    }

    /// Conjugate g u g^-1 by a vee group element; the inverse is the
    /// transposition image of g. Acts diagonally on blades.
    pub fn vee_conjugate(&self, g: SignedBlade) -> Multivector {
        self.map_blades(|b| g.conjugation_sign(b))
    }

    pub fn is_idempotent(&self) -> bool {
        match self.mul(self) {
            Ok(sq) => sq == *self,
            Err(_) => false,
        }
    }

    pub fn parse(s: &str, sig: Signature) -> Result<Multivector> {
        crate::expr::parse_multivector(s, sig)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if b.is_scalar() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{mag}*{b}")?;
            }
        }
        Ok(())
    }
}
