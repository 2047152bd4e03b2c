//! The spinor inner product T(psi) phi, the beta spinor norms, and the
//! invariance group of the inner product.

use crate::blade::{blade_order, Blade};
use crate::error::{Error, Result};
use crate::krep::KElement;
use crate::multivector::Multivector;
use crate::spinor::SpinorBasis;
use num::One;

/// The K-valued inner product (psi, phi) -> T(psi) phi on the ideal Cl f.
/// The result lands in K = f Cl f; membership is checked structurally
/// (the residual x - f x f must vanish).
pub fn t_inner(psi: &Multivector, phi: &Multivector, basis: &SpinorBasis) -> Result<KElement> {
    let product = psi.transposition().mul(phi)?;
    into_k(&product, basis)
}

fn into_k(x: &Multivector, basis: &SpinorBasis) -> Result<KElement> {
    let f = basis.idempotent();
    let fxf = f.value().mul(x)?.mul(f.value())?;
    if &fxf != x {
        return Err(Error::NotInDivisionRing);
    }
    basis.kbasis().coords_of(x, f)
}

/// A blade witness s that lands s * rev(psi) * phi (or s * conj(psi) * phi)
/// in the division ring for every pair of spinor basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureSpinorWitness {
    pub blade: Blade,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaKind {
    /// s * reversion(psi) * phi
    Plus,
    /// s * conjugation(psi) * phi
    Minus,
}

fn twisted(psi: &Multivector, kind: BetaKind) -> Multivector {
    match kind {
        BetaKind::Plus => psi.reversion(),
        BetaKind::Minus => psi.conjugation(),
    }
}

/// Search positive blades in monomial order for the first witness making the
/// product land in K for all basis pairs.
pub fn find_beta_witness(basis: &SpinorBasis, kind: BetaKind) -> Result<PureSpinorWitness> {
    let sig = basis.signature();
    let elements = basis.elements();
    'candidates: for s in blade_order(sig) {
        let s_mv = Multivector::from_blade(sig, s);
        for a in elements {
            let ta = twisted(a, kind);
            let sa = s_mv.mul(&ta).unwrap();
            for b in elements {
                let x = sa.mul(b).unwrap();
                if into_k(&x, basis).is_err() {
                    continue 'candidates;
                }
            }
        }
        return Ok(PureSpinorWitness { blade: s });
    }
    Err(Error::NoWitness)
}

/// beta_plus(psi, phi) = s * reversion(psi) * phi, valued in K.
pub fn beta_plus(
    psi: &Multivector,
    phi: &Multivector,
    witness: &PureSpinorWitness,
    basis: &SpinorBasis,
) -> Result<KElement> {
    beta(psi, phi, witness, basis, BetaKind::Plus)
}

/// beta_minus(psi, phi) = s * conjugation(psi) * phi, valued in K.
pub fn beta_minus(
    psi: &Multivector,
    phi: &Multivector,
    witness: &PureSpinorWitness,
    basis: &SpinorBasis,
) -> Result<KElement> {
    beta(psi, phi, witness, basis, BetaKind::Minus)
}

fn beta(
    psi: &Multivector,
    phi: &Multivector,
    witness: &PureSpinorWitness,
    basis: &SpinorBasis,
    kind: BetaKind,
) -> Result<KElement> {
    let sig = basis.signature();
    let s_mv = Multivector::from_blade(sig, witness.blade);
    let x = s_mv.mul(&twisted(psi, kind))?.mul(phi)?;
    into_k(&x, basis)
}

/// Membership in { g : T(g) g = 1 }, the invariance group of t_inner.
pub fn in_g_epsilon(g: &Multivector) -> bool {
    match g.transposition().mul(g) {
        Ok(p) => p == Multivector::one(g.signature()),
        Err(_) => false,
    }
}

/// The bilinear form of an inner product as a table over basis pairs:
/// entry (i, j) is the K value on (m_i f, m_j f). Two forms are equal as
/// R-bilinear maps iff their tables and the K conjugation actions agree,
/// which for fixed basis reduces to table equality on K-scaled pairs; the
/// full R-tensor is captured by also scaling the arguments by each K unit.
pub fn form_tensor(
    basis: &SpinorBasis,
    eval: impl Fn(&Multivector, &Multivector) -> Result<KElement>,
) -> Result<Vec<Vec<Vec<Vec<KElement>>>>> {
    let kb = basis.kbasis();
    let f = basis.idempotent().value();
    let units: Vec<Multivector> = (0..kb.dim())
        .map(|t| {
            let mut coords = vec![num::BigRational::from_integer(0.into()); kb.dim()];
            coords[t] = num::BigRational::one();
            kb.to_multivector(&kb.from_coords(coords), f)
        })
        .collect();
    let elements = basis.elements();
    let mut out = Vec::with_capacity(elements.len());
    for a in elements {
        let mut row = Vec::with_capacity(elements.len());
        for b in elements {
            let mut per_unit_a = Vec::with_capacity(units.len());
            for ua in &units {
                let mut per_unit_b = Vec::with_capacity(units.len());
                let a_scaled = a.mul(ua)?;
                for ub in &units {
                    let b_scaled = b.mul(ub)?;
                    per_unit_b.push(eval(&a_scaled, &b_scaled)?);
                }
                per_unit_a.push(per_unit_b);
            }
            row.push(per_unit_a);
        }
        out.push(row);
    }
    Ok(out)
}
