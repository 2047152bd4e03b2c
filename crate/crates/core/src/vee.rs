//! The finite group of signed basis monomials, its conjugation action on
//! idempotents, orbits, stabilizers, transversals and coset permutations.

use crate::blade::{blade_order, Blade, Sign, SignedBlade};
use crate::error::{Error, Result};
use crate::idempotent::Idempotent;
use crate::multivector::Multivector;
use crate::signature::Signature;
use std::collections::BTreeSet;

/// The vee group G_{p,q} = { +-e_I } of order 2^(n+1) under the Clifford
/// product. Elements are never materialized as multivectors; a signed blade
/// multiplies in O(1) words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VeeGroup {
    pub sig: Signature,
}

impl VeeGroup {
    pub fn new(sig: Signature) -> Self {
        VeeGroup { sig }
    }

    pub fn order(&self) -> u64 {
        1u64 << (self.sig.dim() + 1)
    }

    /// All elements, positive blades first, both halves in monomial order.
    pub fn elements(&self) -> Vec<SignedBlade> {
        let blades = blade_order(self.sig);
        let mut out = Vec::with_capacity(2 * blades.len());
        out.extend(blades.iter().map(|b| SignedBlade::positive(*b)));
        out.extend(blades.iter().map(|b| SignedBlade::new(Sign::Minus, *b)));
        out
    }

    /// The commutator subgroup: {1} when the group is abelian, {1,-1} as
    /// soon as some pair of blades anticommutes.
    pub fn commutator_subgroup(&self) -> Subgroup {
        let blades = blade_order(self.sig);
        let nonabelian = blades
            .iter()
            .enumerate()
            .any(|(i, a)| blades[i + 1..].iter().any(|b| !a.commutes_with(*b)));
        let members = if nonabelian {
            vec![SignedBlade::ONE, -SignedBlade::ONE]
        } else {
            vec![SignedBlade::ONE]
        };
        Subgroup::from_members(self.sig, members.clone(), members)
    }
}

/// A subgroup of the vee group, stored explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    sig: Signature,
    members: BTreeSet<SignedBlade>,
    generators: Vec<SignedBlade>,
}

impl Subgroup {
    fn from_members(
        sig: Signature,
        members: Vec<SignedBlade>,
        generators: Vec<SignedBlade>,
    ) -> Self {
        Subgroup {
            sig,
            members: members.into_iter().collect(),
            generators,
        }
    }

    /// Multiplicative closure of a generating set.
    pub fn generated_by(sig: Signature, generators: &[SignedBlade]) -> Self {
        let mut members: BTreeSet<SignedBlade> = BTreeSet::new();
        members.insert(SignedBlade::ONE);
        let mut frontier: Vec<SignedBlade> = vec![SignedBlade::ONE];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = x.mul(*g, sig);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup {
            sig,
            members,
            generators: generators.to_vec(),
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: SignedBlade) -> bool {
        self.members.contains(&g)
    }

    pub fn members(&self) -> impl Iterator<Item = &SignedBlade> {
        self.members.iter()
    }

    pub fn generators(&self) -> &[SignedBlade] {
        &self.generators
    }

    /// Positive blades of the subgroup in monomial order.
    pub fn positive_blades(&self) -> Vec<Blade> {
        let mut blades: Vec<Blade> = self
            .members
            .iter()
            .filter(|g| g.sign == Sign::Plus)
            .map(|g| g.blade)
            .collect();
        blades.sort();
        blades
    }

    pub fn is_abelian(&self) -> bool {
        let blades = self.positive_blades();
        blades
            .iter()
            .enumerate()
            .all(|(i, a)| blades[i + 1..].iter().all(|b| a.commutes_with(*b)))
    }

    /// Exhaustive normality test: g H g^-1 = H for every g in the full group.
    pub fn is_normal(&self) -> bool {
        // Conjugation maps h to +-h, so closure under negation of each member
        // that anticommutes with something is what is being checked.
        for h in &self.members {
            for g in blade_order(self.sig) {
                if !g.commutes_with(h.blade) && !self.members.contains(&-*h) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff every member fixes every blade of the set under conjugation.
    pub fn pointwise_stabilizes(&self, blades: &[Blade]) -> bool {
        self.members
            .iter()
            .all(|m| blades.iter().all(|b| m.conjugation_sign(*b) == Sign::Plus))
    }

    /// Centralizer of the subgroup inside itself.
    pub fn center_size(&self) -> usize {
        let blades = self.positive_blades();
        let central = blades
            .iter()
            .filter(|z| blades.iter().all(|b| z.commutes_with(*b)))
            .count();
        2 * central
    }
}

/// Conjugation g u g^-1 with g^-1 taken as the transposition image of g.
pub fn conjugate(g: SignedBlade, u: &Multivector) -> Multivector {
    u.vee_conjugate(g)
}

/// The stabilizer { g : g f g^-1 = f } of an idempotent under conjugation.
/// Since conjugation acts on each blade by a sign, g stabilizes f exactly
/// when it commutes with every blade in the support of f.
pub fn stabilizer(f: &Idempotent) -> Subgroup {
    stabilizer_of(f.value())
}

/// Stabilizer of an arbitrary multivector under conjugation.
pub fn stabilizer_of(u: &Multivector) -> Subgroup {
    let sig = u.signature();
    let support: Vec<Blade> = u.terms().map(|(b, _)| *b).collect();
    let mut members = Vec::new();
    for b in blade_order(sig) {
        if support.iter().all(|s| b.commutes_with(*s)) {
            members.push(SignedBlade::positive(b));
            members.push(SignedBlade::new(Sign::Minus, b));
        }
    }
    let generators = minimal_generators(sig, &members);
    Subgroup::from_members(sig, members, generators)
}

/// Greedy minimal generating set: sweep positive blades of the subgroup in
/// monomial order, keeping an element whenever it is not yet generated. When
/// the subgroup is elementary abelian the sweep is seeded with -1, which any
/// generating set must then contain.
fn minimal_generators(sig: Signature, members: &[SignedBlade]) -> Vec<SignedBlade> {
    let member_set: BTreeSet<SignedBlade> = members.iter().copied().collect();
    let elementary = members.iter().all(|g| {
        let sq = g.mul(*g, sig);
        sq == SignedBlade::ONE
    });
    let mut gens: Vec<SignedBlade> = Vec::new();
    if elementary && member_set.len() > 1 {
        gens.push(-SignedBlade::ONE);
    }
    let mut span = Subgroup::generated_by(sig, &gens);
    if span.order() == member_set.len() {
        return gens;
    }
    let mut blades: Vec<Blade> = member_set
        .iter()
        .filter(|g| g.sign == Sign::Plus && !g.blade.is_scalar())
        .map(|g| g.blade)
        .collect();
    blades.sort();
    for b in blades {
        let g = SignedBlade::positive(b);
        if !span.contains(g) {
            gens.push(g);
            span = Subgroup::generated_by(sig, &gens);
            if span.order() == member_set.len() {
                break;
            }
        }
    }
    debug_assert_eq!(span.order(), member_set.len());
    gens
}

/// Coset representatives of the stabilizer: a greedy sweep of positive
/// blades in monomial order, keeping a blade iff its left coset is new. The
/// first representative is always 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    pub reps: Vec<Blade>,
    /// alpha_i = m_i^2.
    pub squares: Vec<Sign>,
}

impl Transversal {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

pub fn transversal(f: &Idempotent) -> Transversal {
    let sig = f.signature();
    let stab = stabilizer(f);
    let group_order = 1usize << (sig.dim() + 1);
    let index = group_order / stab.order();
    let mut reps: Vec<Blade> = Vec::with_capacity(index);
    for b in blade_order(sig) {
        let bs = SignedBlade::positive(b);
        let new_coset = reps.iter().all(|m| {
            // Same coset iff m^-1 b lies in the stabilizer.
            let minv = SignedBlade::positive(*m).inverse(sig);
            !stab.contains(minv.mul(bs, sig))
        });
        if new_coset {
            reps.push(b);
            if reps.len() == index {
                break;
            }
        }
    }
    debug_assert_eq!(reps.len(), index);
    debug_assert_eq!(reps[0], Blade::ONE);
    let squares = reps.iter().map(|m| m.square_sign(sig)).collect();
    Transversal { reps, squares }
}

/// The orbit of f under conjugation, ordered by the transversal:
/// the i-th member is m_i f m_i^-1.
pub fn orbit(f: &Idempotent) -> Vec<Multivector> {
    let t = transversal(f);
    t.reps
        .iter()
        .map(|m| f.value().vee_conjugate(SignedBlade::positive(*m)))
        .collect()
}

/// Orbit members in factored form: conjugation by m flips the sign of each
/// factor that anticommutes with m, so m f m^-1 has the same factor blades
/// with adjusted signs.
pub fn orbit_idempotents(f: &Idempotent) -> Vec<Idempotent> {
    let t = transversal(f);
    t.reps
        .iter()
        .map(|m| {
            let ms = SignedBlade::positive(*m);
            let signs: Vec<Sign> = f
                .factors()
                .blades()
                .iter()
                .zip(f.signs())
                .map(|(b, s)| *s * ms.conjugation_sign(*b))
                .collect();
            let fi = crate::idempotent::primitive_idempotent(f.factors(), &signs)
                .expect("conjugated factors stay valid");
            debug_assert_eq!(*fi.value(), f.value().vee_conjugate(ms));
            fi
        })
        .collect()
}

/// Left translation by a group element expressed on the spinor basis
/// {m_i f}: returns perm and signs with g * m_i f = signs[i] * m_perm[i] f.
/// Errors when the translation does not map some basis element to a signed
/// basis element, which can happen for stabilizer elements acting as
/// nontrivial division ring units.
pub fn coset_permutation(
    g: SignedBlade,
    t: &Transversal,
    f: &Idempotent,
) -> Result<(Vec<usize>, Vec<Sign>)> {
    let sig = f.signature();
    let mut perm = vec![0usize; t.len()];
    let mut signs = vec![Sign::Plus; t.len()];
    let mut seen = vec![false; t.len()];
    for (i, m) in t.reps.iter().enumerate() {
        let product = g.mul(SignedBlade::positive(*m), sig);
        // product * f must equal sign * m_j * f for a unique j.
        let target = f.value().mul_signed_blade(product, true);
        let mut found = None;
        for (j, mj) in t.reps.iter().enumerate() {
            let plus = f.value().mul_signed_blade(SignedBlade::positive(*mj), true);
            if target == plus {
                found = Some((j, Sign::Plus));
                break;
            }
            if target == plus.neg() {
                found = Some((j, Sign::Minus));
                break;
            }
        }
        let Some((j, s)) = found else {
            return Err(Error::NotMonomialAction);
        };
        if seen[j] {
            return Err(Error::NotMonomialAction);
        }
        seen[j] = true;
        perm[i] = j;
        signs[i] = s;
    }
    Ok((perm, signs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::Blade;
    use crate::idempotent::{primitive_idempotent, CommutingSet};
    use crate::multivector::Multivector;
    use crate::structure::stabilizer_order;

    fn idem(sig: Signature, factors: &[&[u32]]) -> Idempotent {
        let blades: Vec<Blade> = factors.iter().map(|ix| Blade::from_indices(ix)).collect();
        let cs = CommutingSet::new(sig, blades).unwrap();
        let signs = vec![Sign::Plus; cs.len()];
        primitive_idempotent(&cs, &signs).unwrap()
    }

    #[test]
    fn conjugation_examples() {
        let sig = Signature::new(3, 0);
        let f = idem(sig, &[&[1]]);
        let g = SignedBlade::positive(Blade::generator(2));
        assert_eq!(
            conjugate(g, f.value()),
            Multivector::parse("1/2 - 1/2*e1", sig).unwrap()
        );
        assert_eq!(conjugate(SignedBlade::ONE, f.value()), *f.value());

        let sig22 = Signature::new(2, 2);
        let f = idem(sig22, &[&[1, 3], &[2, 4]]);
        let g = SignedBlade::positive(Blade::from_indices(&[1, 2]));
        let expected = Multivector::parse("1/4 - 1/4*e13 - 1/4*e24 - 1/4*e1234", sig22).unwrap();
        assert_eq!(conjugate(g, f.value()), expected);
    }

    #[test]
    fn stabilizers_match_printed_groups() {
        let sig = Signature::new(1, 1);
        let f = idem(sig, &[&[1, 2]]);
        let stab = stabilizer(&f);
        assert_eq!(stab.order(), 4);
        assert!(stab.contains(SignedBlade::positive(Blade::from_indices(&[1, 2]))));
        assert!(stab.contains(-SignedBlade::ONE));

        let sig21 = Signature::new(2, 1);
        let f = idem(sig21, &[&[1], &[2, 3]]);
        let stab = stabilizer(&f);
        assert_eq!(stab.order(), 8);
        for name in ["1", "e1", "e23", "e123"] {
            let b = Blade::parse(name, sig21).unwrap();
            assert!(stab.contains(SignedBlade::positive(b)));
            assert!(stab.contains(SignedBlade::new(Sign::Minus, b)));
        }

        let sig22 = Signature::new(2, 2);
        let f = idem(sig22, &[&[1, 3], &[2, 4]]);
        assert_eq!(stabilizer(&f).order(), 8);
    }

    #[test]
    fn stabilizer_orders_match_formula_up_to_n6() {
        for p in 0..=6u32 {
            for q in 0..=6 - p {
                let sig = Signature::new(p, q);
                let f = crate::idempotent::canonical_idempotent(sig).unwrap();
                assert_eq!(
                    stabilizer(&f).order() as u64,
                    stabilizer_order(sig),
                    "stabilizer order off for {sig}"
                );
            }
        }
    }

    #[test]
    fn transversals_match_printed_lists() {
        let sig = Signature::new(2, 2);
        let f = idem(sig, &[&[1, 3], &[2, 4]]);
        let t = transversal(&f);
        let names: Vec<String> = t.reps.iter().map(|b| b.to_string()).collect();
        assert_eq!(names, ["1", "e1", "e2", "e12"]);
        assert_eq!(
            t.squares,
            vec![Sign::Plus, Sign::Plus, Sign::Plus, Sign::Minus]
        );

        let sig30 = Signature::new(3, 0);
        let f = idem(sig30, &[&[1]]);
        let names: Vec<String> = transversal(&f).reps.iter().map(|b| b.to_string()).collect();
        assert_eq!(names, ["1", "e2"]);

        let sig21 = Signature::new(2, 1);
        let f = idem(sig21, &[&[1], &[2, 3]]);
        let names: Vec<String> = transversal(&f).reps.iter().map(|b| b.to_string()).collect();
        assert_eq!(names, ["1", "e2"]);
    }

    #[test]
    fn orbits_match_worked_examples() {
        let sig = Signature::new(3, 0);
        let f = idem(sig, &[&[1]]);
        let orb = orbit(&f);
        assert_eq!(orb.len(), 2);
        assert_eq!(orb[0], Multivector::parse("1/2 + 1/2*e1", sig).unwrap());
        assert_eq!(orb[1], Multivector::parse("1/2 - 1/2*e1", sig).unwrap());

        let sig22 = Signature::new(2, 2);
        let f = idem(sig22, &[&[1, 3], &[2, 4]]);
        let orb = orbit(&f);
        assert_eq!(orb.len(), 4);
        let mut sum = Multivector::zero(sig22);
        for x in &orb {
            sum = sum.add(x).unwrap();
        }
        assert_eq!(sum, Multivector::one(sig22));
        for (i, a) in orb.iter().enumerate() {
            for b in &orb[i + 1..] {
                assert!(a.mul(b).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn semisimple_two_orbits() {
        let sig = Signature::new(2, 1);
        let f = idem(sig, &[&[1], &[2, 3]]);
        let orb = orbit(&f);
        assert_eq!(orb.len(), 2);
        let f2 = Multivector::parse("1/4 - 1/4*e1 - 1/4*e23 + 1/4*e123", sig).unwrap();
        assert_eq!(orb[1], f2);

        let fhat = f.value().grade_involution();
        // No group element relates the two orbits.
        for g in VeeGroup::new(sig).elements() {
            let image = conjugate(g, f.value());
            assert_ne!(image, fhat);
            assert_ne!(
                image,
                fhat.vee_conjugate(SignedBlade::positive(Blade::generator(2)))
            );
        }
    }

    #[test]
    fn commutator_subgroup_is_plus_minus_one() {
        assert_eq!(
            VeeGroup::new(Signature::new(2, 2))
                .commutator_subgroup()
                .order(),
            2
        );
        assert_eq!(
            VeeGroup::new(Signature::new(0, 3))
                .commutator_subgroup()
                .order(),
            2
        );
        assert_eq!(
            VeeGroup::new(Signature::new(1, 0))
                .commutator_subgroup()
                .order(),
            1
        );
        assert_eq!(
            VeeGroup::new(Signature::new(0, 0))
                .commutator_subgroup()
                .order(),
            1
        );
    }

    #[test]
    fn stabilizers_are_normal_and_pointwise_stabilize() {
        for sig in [
            Signature::new(2, 2),
            Signature::new(2, 1),
            Signature::new(0, 4),
        ] {
            let f = crate::idempotent::canonical_idempotent(sig).unwrap();
            let stab = stabilizer(&f);
            assert!(stab.is_normal());
            assert!(stab.pointwise_stabilizes(f.factors().blades()));
        }
        let trivial = Subgroup::generated_by(Signature::new(2, 2), &[]);
        assert!(trivial.is_normal());
        assert!(trivial.pointwise_stabilizes(&[Blade::from_indices(&[1, 3])]));
    }

    #[test]
    fn coset_permutation_identity_and_homomorphism() {
        let sig = Signature::new(2, 2);
        let f = idem(sig, &[&[1, 3], &[2, 4]]);
        let t = transversal(&f);

        let (perm, signs) = coset_permutation(SignedBlade::ONE, &t, &f).unwrap();
        assert_eq!(perm, vec![0, 1, 2, 3]);
        assert!(signs.iter().all(|s| *s == Sign::Plus));

        let (perm, _) =
            coset_permutation(SignedBlade::positive(Blade::generator(1)), &t, &f).unwrap();
        assert_eq!(perm, vec![1, 0, 3, 2]);

        // Homomorphism: the permutation of a product is the composition,
        // exhaustively over transversal pairs.
        for a in &t.reps {
            for b in &t.reps {
                let ga = SignedBlade::positive(*a);
                let gb = SignedBlade::positive(*b);
                let (pa, _) = coset_permutation(ga, &t, &f).unwrap();
                let (pb, _) = coset_permutation(gb, &t, &f).unwrap();
                let (pab, _) = coset_permutation(ga.mul(gb, sig), &t, &f).unwrap();
                let composed: Vec<usize> = (0..t.len()).map(|i| pa[pb[i]]).collect();
                assert_eq!(pab, composed);
            }
        }
    }

    #[test]
    fn every_element_has_order_dividing_four() {
        for sig in [Signature::new(3, 2), Signature::new(0, 4)] {
            for g in VeeGroup::new(sig).elements() {
                assert!(matches!(g.order(sig), 1 | 2 | 4));
            }
        }
    }
}
