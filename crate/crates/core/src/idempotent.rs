//! Primitive idempotents f = prod 1/2 (1 +- e_I) and their families.

use crate::blade::{blade_order, Blade, Sign};
use crate::error::{Error, Result};
use crate::matrix::left_regular_matrix;
use crate::multivector::{rat, Multivector};
use crate::signature::Signature;
use crate::structure::classify;

/// An ordered set of pairwise commuting blades that square to +1 and are
/// multiplicatively independent: no product of a nonempty subset is a scalar.
/// Independence is equivalent to linear independence of the masks over F_2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingSet {
    sig: Signature,
    blades: Vec<Blade>,
}

impl CommutingSet {
    pub fn new(sig: Signature, blades: Vec<Blade>) -> Result<Self> {
        let mut span: Vec<u32> = Vec::new();
        for (i, b) in blades.iter().enumerate() {
            if !b.is_valid_for(sig) {
                return Err(Error::InvalidFactors(format!(
                    "{b} is not a blade of {sig}"
                )));
            }
            if b.square_sign(sig) != Sign::Plus {
                return Err(Error::InvalidFactors(format!("{b} does not square to +1")));
            }
            for other in &blades[..i] {
                if !b.commutes_with(*other) {
                    return Err(Error::InvalidFactors(format!(
                        "{b} and {other} anticommute"
                    )));
                }
            }
            let reduced = reduce_mask(b.0, &span);
            if reduced == 0 {
                return Err(Error::InvalidFactors(format!(
                    "{b} is a product of earlier factors (up to sign)"
                )));
            }
            span.push(reduced);
        }
        Ok(CommutingSet { sig, blades })
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn blades(&self) -> &[Blade] {
        &self.blades
    }

    pub fn len(&self) -> usize {
        self.blades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blades.is_empty()
    }
}

/// Reduce a mask against a row-echelon basis of masks; 0 means dependent.
fn reduce_mask(mask: u32, span: &[u32]) -> u32 {
    let mut m = mask;
    for &b in span {
        let high = 31 - b.leading_zeros();
        if m & (1 << high) != 0 {
            m ^= b;
        }
    }
    m
}

/// Deterministic search for k commuting, square-+1, independent blades:
/// backtracking over the monomial order, first complete set wins.
pub fn find_commuting_set(sig: Signature) -> Result<CommutingSet> {
    let k = classify(sig).k as usize;
    let order = blade_order(sig);
    let mut chosen: Vec<Blade> = Vec::with_capacity(k);
    let mut span: Vec<u32> = Vec::new();

    fn search(
        sig: Signature,
        order: &[Blade],
        start: usize,
        k: usize,
        chosen: &mut Vec<Blade>,
        span: &mut Vec<u32>,
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        for idx in start..order.len() {
            let b = order[idx];
            if b.is_scalar() || b.square_sign(sig) != Sign::Plus {
                continue;
            }
            if !chosen.iter().all(|c| b.commutes_with(*c)) {
                continue;
            }
            let reduced = reduce_mask(b.0, span);
            if reduced == 0 {
                continue;
            }
            chosen.push(b);
            span.push(reduced);
            if search(sig, order, idx + 1, k, chosen, span) {
                return true;
            }
            chosen.pop();
            span.pop();
        }
        false
    }

    if !search(sig, &order, 0, k, &mut chosen, &mut span) {
        return Err(Error::InvalidFactors(format!(
            "no commuting set of size {k} in {sig}"
        )));
    }
    CommutingSet::new(sig, chosen)
}

/// A primitive idempotent together with the factored form it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Idempotent {
    value: Multivector,
    factors: CommutingSet,
    signs: Vec<Sign>,
}

impl Idempotent {
    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn factors(&self) -> &CommutingSet {
        &self.factors
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn signature(&self) -> Signature {
        self.factors.sig
    }
}

/// Expand prod_j 1/2 (1 + sign_j e_j). The result has 2^k terms with
/// coefficients +-1/2^k.
pub fn primitive_idempotent(factors: &CommutingSet, signs: &[Sign]) -> Result<Idempotent> {
    if signs.len() != factors.len() {
        return Err(Error::InvalidFactors(format!(
            "expected {} signs, got {}",
            factors.len(),
            signs.len()
        )));
    }
    let sig = factors.sig;
    let mut value = Multivector::one(sig);
    for (b, s) in factors.blades.iter().zip(signs) {
        let half = rat(s.as_i8() as i64, 2);
        let factor = Multivector::scalar(sig, rat(1, 2))
            .add(&Multivector::from_term(sig, *b, half))
            .unwrap();
        value = value.mul(&factor)?;
    }
    debug_assert!(value.is_idempotent());
    Ok(Idempotent {
        value,
        factors: factors.clone(),
        signs: signs.to_vec(),
    })
}

/// Convenience: all-plus idempotent for the canonical commuting set.
pub fn canonical_idempotent(sig: Signature) -> Result<Idempotent> {
    let factors = find_commuting_set(sig)?;
    let signs = vec![Sign::Plus; factors.len()];
    primitive_idempotent(&factors, &signs)
}

/// The complete family of 2^k mutually annihilating idempotents obtained by
/// running over all sign vectors, in lexicographic sign order (+ before -).
pub fn sign_family(factors: &CommutingSet) -> Result<Vec<Idempotent>> {
    let k = factors.len();
    let mut out = Vec::with_capacity(1 << k);
    for bits in 0..(1u32 << k) {
        let signs: Vec<Sign> = (0..k)
            .map(|j| Sign::from_parity(bits & (1 << j) != 0))
            .collect();
        out.push(primitive_idempotent(factors, &signs)?);
    }
    Ok(out)
}

/// Independent brute-force primitivity oracle: f is primitive iff the rank of
/// its left regular matrix is 2^(n-k), the real dimension of a minimal left
/// ideal. Uses exact rational Gaussian elimination.
pub fn is_primitive(f: &Multivector) -> Result<bool> {
    if !f.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let sig = f.signature();
    let s = classify(sig);
    let expected = 1usize << (sig.dim() - s.k);
    Ok(left_regular_matrix(f).rank() == expected)
}

/// The two central idempotents 1/2 (1 +- e_{1..n}) of a semisimple algebra.
pub fn central_idempotents(sig: Signature) -> Result<(Multivector, Multivector)> {
    if !sig.is_semisimple() {
        return Err(Error::NotSemisimple { sig });
    }
    let omega = Blade((1u64 << sig.dim()) as u32 - 1);
    debug_assert_eq!(omega.square_sign(sig), Sign::Plus);
    let half = Multivector::scalar(sig, rat(1, 2));
    let half_omega = Multivector::from_term(sig, omega, rat(1, 2));
    let plus = half.add(&half_omega).unwrap();
    let minus = half.sub(&half_omega).unwrap();
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn search_finds_valid_sets() {
        // Any valid set is acceptable; primitivity is checked by the oracle.
        let cs = find_commuting_set(Signature::new(2, 2)).unwrap();
        assert_eq!(cs.len(), 2);
        let f = primitive_idempotent(&cs, &[Sign::Plus, Sign::Plus]).unwrap();
        assert!(is_primitive(f.value()).unwrap());

        let cs = find_commuting_set(Signature::new(1, 1)).unwrap();
        assert_eq!(cs.blades(), &[Blade::from_indices(&[1])]);

        let cs = find_commuting_set(Signature::new(0, 2)).unwrap();
        assert!(cs.is_empty());
        let f = primitive_idempotent(&cs, &[]).unwrap();
        assert_eq!(f.value(), &Multivector::one(Signature::new(0, 2)));
        assert!(is_primitive(f.value()).unwrap());
    }

    #[test]
    fn expansion_matches_hand_values() {
        let sig = Signature::new(2, 2);
        let cs = CommutingSet::new(
            sig,
            vec![Blade::from_indices(&[1, 3]), Blade::from_indices(&[2, 4])],
        )
        .unwrap();
        let f = primitive_idempotent(&cs, &[Sign::Plus, Sign::Plus]).unwrap();
        let expected = Multivector::parse("1/4 + 1/4*e13 + 1/4*e24 - 1/4*e1234", sig).unwrap();
        assert_eq!(f.value(), &expected);
        assert!(f.value().transposition() == *f.value());

        let sig30 = Signature::new(3, 0);
        let cs = CommutingSet::new(sig30, vec![Blade::from_indices(&[1])]).unwrap();
        let f = primitive_idempotent(&cs, &[Sign::Plus]).unwrap();
        assert_eq!(
            f.value(),
            &Multivector::parse("1/2 + 1/2*e1", sig30).unwrap()
        );
    }

    #[test]
    fn primitivity_oracle_rejects_nonminimal() {
        let sig = Signature::new(2, 2);
        let half = Multivector::parse("1/2 + 1/2*e13", sig).unwrap();
        assert!(!is_primitive(&half).unwrap());
        let not_idem = Multivector::parse("e1", sig).unwrap();
        assert!(matches!(is_primitive(&not_idem), Err(Error::NotIdempotent)));
    }

    #[test]
    fn oracle_cross_checks_k_up_to_n5() {
        for p in 0..=5u32 {
            for q in 0..=5 - p {
                let sig = Signature::new(p, q);
                let f = canonical_idempotent(sig).unwrap();
                assert!(is_primitive(f.value()).unwrap(), "not primitive for {sig}");
            }
        }
    }

    #[test]
    fn family_sums_to_one_and_annihilates() {
        for sig in [
            Signature::new(2, 2),
            Signature::new(3, 0),
            Signature::new(1, 3),
        ] {
            let factors = find_commuting_set(sig).unwrap();
            let family = sign_family(&factors).unwrap();
            assert_eq!(family.len(), 1 << factors.len());
            let mut sum = Multivector::zero(sig);
            for f in &family {
                sum = sum.add(f.value()).unwrap();
            }
            assert_eq!(sum, Multivector::one(sig));
            for (i, a) in family.iter().enumerate() {
                for (j, b) in family.iter().enumerate() {
                    if i != j {
                        assert!(a.value().mul(b.value()).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn central_idempotents_in_semisimple_case() {
        let sig = Signature::new(2, 1);
        let (jp, jm) = central_idempotents(sig).unwrap();
        assert_eq!(jp, Multivector::parse("1/2 + 1/2*e123", sig).unwrap());
        assert!(jp.is_idempotent() && jm.is_idempotent());
        assert!(jp.mul(&jm).unwrap().is_zero());
        assert_eq!(jp.add(&jm).unwrap(), Multivector::one(sig));
        assert_eq!(jp.grade_involution(), jm);

        // Centrality against random elements.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut u = Multivector::zero(sig);
            for mask in 0..8u32 {
                let c = rat(rng.gen_range(-4..=4), 1 << rng.gen_range(0..3));
                u = u.add(&Multivector::from_term(sig, Blade(mask), c)).unwrap();
            }
            assert_eq!(jp.mul(&u).unwrap(), u.mul(&jp).unwrap());
        }

        assert!(central_idempotents(Signature::new(2, 2)).is_err());
    }

    #[test]
    fn invalid_factor_sets_are_rejected() {
        let sig = Signature::new(2, 2);
        // e12 squares to -1 here.
        assert!(CommutingSet::new(sig, vec![Blade::from_indices(&[1, 2])]).is_err());
        // e13 and e14 anticommute.
        assert!(CommutingSet::new(
            sig,
            vec![Blade::from_indices(&[1, 3]), Blade::from_indices(&[1, 4])]
        )
        .is_err());
        // Dependent triple: e13 * e24 = -e1234.
        assert!(CommutingSet::new(
            sig,
            vec![
                Blade::from_indices(&[1, 3]),
                Blade::from_indices(&[2, 4]),
                Blade::from_indices(&[1, 2, 3, 4])
            ]
        )
        .is_err());
    }
}
