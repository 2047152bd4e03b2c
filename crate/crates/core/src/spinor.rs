//! Spinor bases of minimal left ideals and the N x N matrix representation
//! over K (or over the double ring K + K-hat in the semisimple case).
//!
//! The fast path decomposes each blade action combinatorially: for any blade
//! e_X there is a unique coset representative m_j and stabilizer part h with
//! e_X = +- m_j h, and h acts on the idempotent as a division ring unit. The
//! slow path multiplies multivectors out in full and serves as the
//! independent oracle for the fast one.

use crate::blade::{blade_order, Blade, Sign, SignedBlade};
use crate::error::{Error, Result};
use crate::idempotent::{primitive_idempotent, Idempotent};
use crate::krep::{division_ring_basis, KBasis, KElement};
use crate::multivector::{Multivector, Rational};
use crate::signature::Signature;
use crate::structure::{classify, AlgebraStructure};
use crate::vee::{stabilizer, transversal, Transversal};
use num::Zero;
use std::fmt;

/// Action of a blade on the idempotent: e_X f = sign * m_(coset) * (b_unit f).
#[derive(Debug, Clone, Copy)]
struct BladeAction {
    sign: Sign,
    unit: usize,
}

/// Ordered spinor basis [m_1 f, ..., m_N f] with everything needed to build
/// representation matrices.
#[derive(Debug, Clone)]
pub struct SpinorBasis {
    f: Idempotent,
    fhat: Option<Idempotent>,
    structure: AlgebraStructure,
    kbasis: KBasis,
    transversal: Transversal,
    elements: Vec<Multivector>,
    coset_of: Vec<usize>,
    action: Vec<BladeAction>,
    action_hat: Option<Vec<BladeAction>>,
}

impl SpinorBasis {
    pub fn new(f: Idempotent) -> Result<SpinorBasis> {
        let sig = f.signature();
        let structure = classify(sig);
        let kbasis = division_ring_basis(&f)?;
        let t = transversal(&f);
        if t.len() != structure.matrix_dim {
            return Err(Error::InvalidFactors(format!(
                "idempotent is not primitive: {} cosets, expected {}",
                t.len(),
                structure.matrix_dim
            )));
        }
        let elements: Vec<Multivector> = t
            .reps
            .iter()
            .map(|m| f.value().mul_signed_blade(SignedBlade::positive(*m), true))
            .collect();

        let stab = stabilizer(&f);
        let n_masks = sig.basis_len();
        let mut coset_of = vec![usize::MAX; n_masks];
        for (j, m) in t.reps.iter().enumerate() {
            for w in stab.positive_blades() {
                let (_, x) = m.mul(w, sig);
                debug_assert_eq!(coset_of[x.0 as usize], usize::MAX);
                coset_of[x.0 as usize] = j;
            }
        }
        debug_assert!(coset_of.iter().all(|&j| j != usize::MAX));

        let action = build_action_table(sig, &kbasis, &f, &t, &coset_of)?;

        let (fhat, action_hat) = if structure.simple {
            (None, None)
        } else {
            let hat_signs: Vec<Sign> = f
                .factors()
                .blades()
                .iter()
                .zip(f.signs())
                .map(|(b, s)| if b.grade() & 1 == 1 { -*s } else { *s })
                .collect();
            let fhat = primitive_idempotent(f.factors(), &hat_signs)?;
            debug_assert_eq!(*fhat.value(), f.value().grade_involution());
            let table = build_action_table(sig, &kbasis, &fhat, &t, &coset_of)?;
            (Some(fhat), Some(table))
        };

        Ok(SpinorBasis {
            f,
            fhat,
            structure,
            kbasis,
            transversal: t,
            elements,
            coset_of,
            action,
            action_hat,
        })
    }

    pub fn idempotent(&self) -> &Idempotent {
        &self.f
    }

    /// The grade involution of f; present exactly in the semisimple case.
    pub fn hat_idempotent(&self) -> Option<&Idempotent> {
        self.fhat.as_ref()
    }

    pub fn structure(&self) -> &AlgebraStructure {
        &self.structure
    }

    pub fn kbasis(&self) -> &KBasis {
        &self.kbasis
    }

    pub fn transversal(&self) -> &Transversal {
        &self.transversal
    }

    pub fn dim(&self) -> usize {
        self.transversal.len()
    }

    pub fn signature(&self) -> Signature {
        self.f.signature()
    }

    /// The basis elements m_i f as multivectors.
    pub fn elements(&self) -> &[Multivector] {
        &self.elements
    }

    /// Coset index of a blade.
    pub fn coset_index(&self, b: Blade) -> usize {
        self.coset_of[b.0 as usize]
    }

    /// Unique K-coordinates of psi against [m_1 f, ..., m_N f], computed by
    /// full multivector products: lambda_i = f m_i^-1 psi. The reassembly is
    /// verified; anything outside the ideal Cl f is rejected.
    pub fn decompose(&self, psi: &Multivector) -> Result<Vec<KElement>> {
        self.decompose_against(psi, &self.f)
    }

    /// Coordinates in the hat ideal Cl f-hat (semisimple only).
    pub fn decompose_hat(&self, psi: &Multivector) -> Result<Vec<KElement>> {
        let fhat = self.fhat.as_ref().ok_or(Error::NotSemisimple {
            sig: self.signature(),
        })?;
        self.decompose_against(psi, fhat)
    }

    fn decompose_against(&self, psi: &Multivector, f: &Idempotent) -> Result<Vec<KElement>> {
        let sig = self.signature();
        let mut coords = Vec::with_capacity(self.dim());
        for m in &self.transversal.reps {
            let minv = SignedBlade::positive(*m).inverse(sig);
            let x = f.value().mul(&psi.mul_signed_blade(minv, true))?;
            let lambda = self
                .kbasis
                .coords_of(&x, f)
                .map_err(|_| Error::NotInIdeal)?;
            coords.push(lambda);
        }
        // Reassemble sum m_i f lambda_i and compare.
        let mut rebuilt = Multivector::zero(sig);
        for (m, lambda) in self.transversal.reps.iter().zip(&coords) {
            let lam_mv = self.kbasis.to_multivector(lambda, f.value());
            let term = lam_mv.mul_signed_blade(SignedBlade::positive(*m), true);
            rebuilt = rebuilt.add(&term)?;
        }
        if &rebuilt != psi {
            return Err(Error::NotInIdeal);
        }
        Ok(coords)
    }

    /// Matrix of left multiplication by u on the spinor basis, fast path.
    /// Column k holds the K-coordinates of u m_k f.
    pub fn rep_matrix(&self, u: &Multivector) -> Result<RepMatrix> {
        if !self.structure.simple {
            return Err(Error::NotSimple {
                sig: self.signature(),
            });
        }
        let grid = self.rep_component(u, &self.action)?;
        Ok(RepMatrix {
            dim: self.dim(),
            kbasis: self.kbasis.clone(),
            s: grid,
            hat: None,
        })
    }

    /// Faithful representation on the double spinor space: the pair of
    /// matrices of u on Cl f and on Cl f-hat.
    pub fn semisimple_rep_matrix(&self, u: &Multivector) -> Result<RepMatrix> {
        let action_hat = self.action_hat.as_ref().ok_or(Error::NotSemisimple {
            sig: self.signature(),
        })?;
        let s = self.rep_component(u, &self.action)?;
        let hat = self.rep_component(u, action_hat)?;
        Ok(RepMatrix {
            dim: self.dim(),
            kbasis: self.kbasis.clone(),
            s,
            hat: Some(hat),
        })
    }

    fn rep_component(&self, u: &Multivector, table: &[BladeAction]) -> Result<Vec<KElement>> {
        let sig = self.signature();
        if u.signature() != sig {
            return Err(Error::SignatureMismatch {
                expected: sig,
                found: u.signature(),
            });
        }
        let n = self.dim();
        let kdim = self.kbasis.dim();
        let mut grid: Vec<Vec<Rational>> = vec![vec![Rational::zero(); kdim]; n * n];
        for (a, c) in u.terms() {
            for (kcol, m) in self.transversal.reps.iter().enumerate() {
                let (s1, x) = a.mul(*m, sig);
                let act = table[x.0 as usize];
                let j = self.coset_of[x.0 as usize];
                let cell = &mut grid[j * n + kcol][act.unit];
                if (s1 * act.sign).is_negative() {
                    *cell = cell.clone() - c;
                } else {
                    *cell = cell.clone() + c;
                }
            }
        }
        Ok(grid
            .into_iter()
            .map(|coords| self.kbasis.from_coords(coords))
            .collect())
    }

    /// Slow reference construction of the same matrix through full
    /// multivector products and verified decomposition.
    pub fn rep_matrix_slow(&self, u: &Multivector) -> Result<RepMatrix> {
        let s = self.rep_component_slow(u, &self.f)?;
        if self.structure.simple {
            Ok(RepMatrix {
                dim: self.dim(),
                kbasis: self.kbasis.clone(),
                s,
                hat: None,
            })
        } else {
            let hat = self.rep_component_slow(u, self.fhat.as_ref().unwrap())?;
            Ok(RepMatrix {
                dim: self.dim(),
                kbasis: self.kbasis.clone(),
                s,
                hat: Some(hat),
            })
        }
    }

    fn rep_component_slow(&self, u: &Multivector, f: &Idempotent) -> Result<Vec<KElement>> {
        let n = self.dim();
        let mut grid = vec![self.kbasis.zero(); n * n];
        for (kcol, m) in self.transversal.reps.iter().enumerate() {
            let mf = f.value().mul_signed_blade(SignedBlade::positive(*m), true);
            let column = self.decompose_against(&u.mul(&mf)?, f)?;
            for (j, lambda) in column.into_iter().enumerate() {
                grid[j * n + kcol] = lambda;
            }
        }
        Ok(grid)
    }

    /// Diagonal signs of the conjugation lambda -> m_k^-1 lambda m_k on the
    /// K basis monomials. Never the full quaternionic conjugation: the sign
    /// of b_k is forced by those of b_i and b_j.
    pub fn k_conj_action(&self, k: usize) -> Vec<Sign> {
        let m = SignedBlade::positive(self.transversal.reps[k]);
        self.kbasis
            .monomials()
            .iter()
            .map(|b| m.conjugation_sign(*b))
            .collect()
    }

    /// Structure constants of the left translation action: for each pair
    /// (l, k) the unique j and sign c with m_l (m_k f) = c m_j f.
    pub fn structure_constants(&self) -> Result<StructConstants> {
        let sig = self.signature();
        let n = self.dim();
        let mut triples = vec![(0usize, Sign::Plus); n * n];
        let mut c = vec![Sign::Plus; n * n];
        for (l, ml) in self.transversal.reps.iter().enumerate() {
            for (k, mk) in self.transversal.reps.iter().enumerate() {
                let (s1, x) = ml.mul(*mk, sig);
                let act = self.action[x.0 as usize];
                if act.unit != 0 {
                    return Err(Error::NotMonomialAction);
                }
                let j = self.coset_of[x.0 as usize];
                let sign = s1 * act.sign;
                triples[l * n + k] = (j, sign);
                c[j * n + k] = sign;
            }
        }
        Ok(StructConstants { n, c, triples })
    }
}

fn build_action_table(
    sig: Signature,
    kbasis: &KBasis,
    f: &Idempotent,
    t: &Transversal,
    coset_of: &[usize],
) -> Result<Vec<BladeAction>> {
    // Resolve e_W f = sign * (b_unit f) for every stabilizer blade by direct
    // arithmetic, then extend to all blades through the coset decomposition.
    let mut table = vec![
        BladeAction {
            sign: Sign::Plus,
            unit: 0
        };
        sig.basis_len()
    ];
    for x in 0..sig.basis_len() as u32 {
        let blade = Blade(x);
        let j = coset_of[x as usize];
        let m = t.reps[j];
        // h = m^-1 e_X is a signed stabilizer blade.
        let minv = SignedBlade::positive(m).inverse(sig);
        let h = minv.mul(SignedBlade::positive(blade), sig);
        let hf = f.value().mul_signed_blade(h, true);
        let lambda = kbasis.coords_of(&hf, f)?;
        let mut found = None;
        for (unit, coord) in lambda.coords().iter().enumerate() {
            if coord.is_zero() {
                continue;
            }
            if found.is_some() {
                return Err(Error::NotMonomialAction);
            }
            let sign = if coord == &Rational::from_integer(1.into()) {
                Sign::Plus
            } else if coord == &Rational::from_integer((-1).into()) {
                Sign::Minus
            } else {
                return Err(Error::NotMonomialAction);
            };
            found = Some(BladeAction { sign, unit });
        }
        table[x as usize] = found.ok_or(Error::NotMonomialAction)?;
    }
    Ok(table)
}

/// Structure constants c^j_{l,k} of the translation action, all +-1, with
/// exactly one nonzero j per (l, k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructConstants {
    n: usize,
    /// Dense form: entry (j, k) is c^j_{l,k} for the unique l hitting row j.
    c: Vec<Sign>,
    /// (l, k) -> (j, c^j_{l,k}).
    triples: Vec<(usize, Sign)>,
}

impl StructConstants {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// C[j][k], 0-based.
    pub fn c_entry(&self, j: usize, k: usize) -> Sign {
        self.c[j * self.n + k]
    }

    /// The unique (j, sign) with m_l m_k f = sign * m_j f, 0-based.
    pub fn triple(&self, l: usize, k: usize) -> (usize, Sign) {
        self.triples[l * self.n + k]
    }

    /// All nonzero triples (l, k, j, sign).
    pub fn sparse_triples(&self) -> Vec<(usize, usize, usize, Sign)> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for l in 0..self.n {
            for k in 0..self.n {
                let (j, s) = self.triple(l, k);
                out.push((l, k, j, s));
            }
        }
        out
    }

    pub fn dense_signs(&self) -> Vec<Vec<i8>> {
        (0..self.n)
            .map(|j| (0..self.n).map(|k| self.c_entry(j, k).as_i8()).collect())
            .collect()
    }
}

/// N x N matrix over K, or a pair of such matrices over K + K-hat in the
/// semisimple case. Entries are exact K coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMatrix {
    dim: usize,
    kbasis: KBasis,
    s: Vec<KElement>,
    hat: Option<Vec<KElement>>,
}

impl RepMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kbasis(&self) -> &KBasis {
        &self.kbasis
    }

    pub fn is_double(&self) -> bool {
        self.hat.is_some()
    }

    pub fn entry(&self, row: usize, col: usize) -> &KElement {
        &self.s[row * self.dim + col]
    }

    pub fn hat_entry(&self, row: usize, col: usize) -> Option<&KElement> {
        self.hat.as_ref().map(|h| &h[row * self.dim + col])
    }

    pub fn from_grid(
        kbasis: KBasis,
        dim: usize,
        s: Vec<KElement>,
        hat: Option<Vec<KElement>>,
    ) -> Result<RepMatrix> {
        if s.len() != dim * dim || hat.as_ref().is_some_and(|h| h.len() != dim * dim) {
            return Err(Error::KBasisMismatch);
        }
        Ok(RepMatrix {
            dim,
            kbasis,
            s,
            hat,
        })
    }

    pub fn identity(kbasis: &KBasis, dim: usize, double: bool) -> RepMatrix {
        let mut s = vec![kbasis.zero(); dim * dim];
        for i in 0..dim {
            s[i * dim + i] = kbasis.one();
        }
        let hat = double.then(|| s.clone());
        RepMatrix {
            dim,
            kbasis: kbasis.clone(),
            s,
            hat,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.s.iter().all(|e| e.is_zero())
            && self
                .hat
                .as_ref()
                .is_none_or(|h| h.iter().all(|e| e.is_zero()))
    }

    fn component_mul(
        kb: &KBasis,
        dim: usize,
        a: &[KElement],
        b: &[KElement],
    ) -> Result<Vec<KElement>> {
        let mut out = vec![kb.zero(); dim * dim];
        for r in 0..dim {
            for i in 0..dim {
                let left = &a[r * dim + i];
                if left.is_zero() {
                    continue;
                }
                for c in 0..dim {
                    let right = &b[i * dim + c];
                    if right.is_zero() {
                        continue;
                    }
                    let prod = kb.mul(left, right)?;
                    out[r * dim + c] = kb.add(&out[r * dim + c], &prod)?;
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &RepMatrix) -> Result<RepMatrix> {
        if self.dim != other.dim || self.kbasis != other.kbasis {
            return Err(Error::KBasisMismatch);
        }
        let s = Self::component_mul(&self.kbasis, self.dim, &self.s, &other.s)?;
        let hat = match (&self.hat, &other.hat) {
            (Some(a), Some(b)) => Some(Self::component_mul(&self.kbasis, self.dim, a, b)?),
            (None, None) => None,
            _ => return Err(Error::KBasisMismatch),
        };
        Ok(RepMatrix {
            dim: self.dim,
            kbasis: self.kbasis.clone(),
            s,
            hat,
        })
    }

    /// Transpose with entrywise conjugation: plain transposition over R,
    /// Hermitian conjugation over C, quaternionic Hermitian conjugation over
    /// H, componentwise in the double-ring case.
    pub fn adjoint(&self) -> RepMatrix {
        let flip = |grid: &[KElement]| -> Vec<KElement> {
            let mut out = vec![self.kbasis.zero(); self.dim * self.dim];
            for r in 0..self.dim {
                for c in 0..self.dim {
                    out[c * self.dim + r] = self.kbasis.conj(&grid[r * self.dim + c]);
                }
            }
            out
        };
        RepMatrix {
            dim: self.dim,
            kbasis: self.kbasis.clone(),
            s: flip(&self.s),
            hat: self.hat.as_ref().map(|h| flip(h)),
        }
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cells: Vec<String> = Vec::with_capacity(self.dim * self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                let body = self.kbasis.format_element(self.entry(r, c));
                let cell = match self.hat_entry(r, c) {
                    Some(h) => format!("[{}, {}]", body, self.kbasis.format_element(h)),
                    None => body,
                };
                cells.push(cell);
            }
        }
        let width = cells.iter().map(|s| s.len()).max().unwrap_or(1);
        for r in 0..self.dim {
            write!(f, "[ ")?;
            for c in 0..self.dim {
                if c > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{:>width$}", cells[r * self.dim + c])?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

/// Convenience: spinor basis for the canonical all-plus idempotent.
pub fn spinor_basis(sig: Signature) -> Result<SpinorBasis> {
    SpinorBasis::new(crate::idempotent::canonical_idempotent(sig)?)
}

/// Every blade of the algebra maps to a matrix with exactly one nonzero
/// entry per column; returns those matrices in monomial order.
pub fn blade_matrices(basis: &SpinorBasis) -> Result<Vec<RepMatrix>> {
    blade_order(basis.signature())
        .into_iter()
        .map(|b| {
            let u = Multivector::from_blade(basis.signature(), b);
            if basis.structure().simple {
                basis.rep_matrix(&u)
            } else {
                basis.semisimple_rep_matrix(&u)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idempotent::CommutingSet;
    use crate::multivector::rat;

    fn basis_for(sig: Signature, factors: &[&[u32]]) -> SpinorBasis {
        let blades: Vec<Blade> = factors.iter().map(|ix| Blade::from_indices(ix)).collect();
        let cs = CommutingSet::new(sig, blades).unwrap();
        let signs = vec![Sign::Plus; cs.len()];
        SpinorBasis::new(primitive_idempotent(&cs, &signs).unwrap()).unwrap()
    }

    #[test]
    fn structure_constants_of_cl22() {
        let basis = basis_for(Signature::new(2, 2), &[&[1, 3], &[2, 4]]);
        let sc = basis.structure_constants().unwrap();
        let expected = vec![
            vec![1, 1, 1, -1],
            vec![1, 1, 1, -1],
            vec![1, -1, 1, 1],
            vec![1, -1, 1, 1],
        ];
        assert_eq!(sc.dense_signs(), expected);
        // First row and column all +1 since m_1 = 1... the (1,1) block:
        assert_eq!(sc.c_entry(0, 0), Sign::Plus);
        for i in 0..4 {
            assert_eq!(sc.triple(i, 0), (i, Sign::Plus));
        }
    }

    #[test]
    fn structure_constants_of_cl30() {
        let basis = basis_for(Signature::new(3, 0), &[&[1]]);
        let sc = basis.structure_constants().unwrap();
        assert_eq!(sc.dense_signs(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn lemma_identities_for_structure_constants() {
        for (sig, factors) in [
            (Signature::new(2, 2), vec![vec![1u32, 3], vec![2, 4]]),
            (Signature::new(3, 0), vec![vec![1]]),
            (Signature::new(2, 4), vec![vec![1, 5], vec![2, 6]]),
            (Signature::new(0, 5), vec![vec![1, 2, 3], vec![3, 4, 5]]),
        ] {
            let refs: Vec<&[u32]> = factors.iter().map(|v| v.as_slice()).collect();
            let basis = basis_for(sig, &refs);
            let sc = basis.structure_constants().unwrap();
            let t = basis.transversal();
            let n = sc.dim();
            for i in 0..n {
                for k in 0..n {
                    // c^k_{i,j} = alpha_i c^j_{i,k} where j is the partner index.
                    let (j, c_ik) = sc.triple(i, k);
                    let (k2, c_ij) = sc.triple(i, j);
                    assert_eq!(k2, k);
                    let alpha = t.squares[i];
                    assert_eq!(c_ij, alpha * c_ik);
                }
            }
            // Commutator identity: c^j_{k,l} c^j_{l,k} equals the blade
            // commutator of m_k and m_l.
            for k in 0..n {
                for l in 0..n {
                    let (j1, c_kl) = sc.triple(k, l);
                    let (j2, c_lk) = sc.triple(l, k);
                    assert_eq!(j1, j2);
                    let commutator = if t.reps[k].commutes_with(t.reps[l]) {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    };
                    assert_eq!(c_kl * c_lk, commutator);
                }
            }
        }
    }

    #[test]
    fn rep_of_unit_is_identity() {
        let basis = basis_for(Signature::new(2, 2), &[&[1, 3], &[2, 4]]);
        let one = Multivector::one(basis.signature());
        let m = basis.rep_matrix(&one).unwrap();
        assert_eq!(m, RepMatrix::identity(basis.kbasis(), 4, false));
    }

    #[test]
    fn rep_of_idempotent_is_matrix_unit() {
        let basis = basis_for(Signature::new(3, 0), &[&[1]]);
        let m = basis.rep_matrix(basis.idempotent().value()).unwrap();
        assert!(m.entry(0, 0) == &basis.kbasis().one());
        assert!(m.entry(0, 1).is_zero() && m.entry(1, 0).is_zero() && m.entry(1, 1).is_zero());

        // The four basis element matrices of the two ideals.
        let sig = basis.signature();
        let e2 = Multivector::from_blade(sig, Blade::generator(2));
        let f1 = basis.idempotent().value().clone();
        let f2 = f1.vee_conjugate(SignedBlade::positive(Blade::generator(2)));
        let e2f1 = e2.mul(&f1).unwrap();
        let e2f2 = e2.mul(&f2).unwrap();
        let m = basis.rep_matrix(&e2f1).unwrap();
        assert_eq!(m.entry(1, 0), &basis.kbasis().one());
        let m = basis.rep_matrix(&f2).unwrap();
        assert_eq!(m.entry(1, 1), &basis.kbasis().one());
        let m = basis.rep_matrix(&e2f2).unwrap();
        assert_eq!(m.entry(0, 1), &basis.kbasis().one());
    }

    #[test]
    fn fast_path_matches_slow_path() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (sig, factors) in [
            (Signature::new(2, 2), vec![vec![1u32, 3], vec![2, 4]]),
            (Signature::new(3, 0), vec![vec![1]]),
            (Signature::new(1, 3), vec![vec![1, 4]]),
            (Signature::new(2, 1), vec![vec![1], vec![2, 3]]),
            (Signature::new(0, 3), vec![vec![1, 2, 3]]),
        ] {
            let refs: Vec<&[u32]> = factors.iter().map(|v| v.as_slice()).collect();
            let basis = basis_for(sig, &refs);
            for _ in 0..10 {
                let mut u = Multivector::zero(sig);
                for mask in 0..sig.basis_len() as u32 {
                    let c = rat(rng.gen_range(-4..=4), 1 << rng.gen_range(0..3));
                    u = u.add(&Multivector::from_term(sig, Blade(mask), c)).unwrap();
                }
                let fast = if basis.structure().simple {
                    basis.rep_matrix(&u).unwrap()
                } else {
                    basis.semisimple_rep_matrix(&u).unwrap()
                };
                let slow = basis.rep_matrix_slow(&u).unwrap();
                assert_eq!(fast, slow, "route mismatch in {sig}");
            }
        }
    }

    #[test]
    fn representation_is_a_homomorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let basis = basis_for(Signature::new(2, 4), &[&[1, 5], &[2, 6]]);
        let sig = basis.signature();
        for _ in 0..10 {
            let mut u = Multivector::zero(sig);
            let mut v = Multivector::zero(sig);
            for mask in 0..sig.basis_len() as u32 {
                u = u
                    .add(&Multivector::from_term(
                        sig,
                        Blade(mask),
                        rat(rng.gen_range(-3..=3), 2),
                    ))
                    .unwrap();
                v = v
                    .add(&Multivector::from_term(
                        sig,
                        Blade(mask),
                        rat(rng.gen_range(-3..=3), 4),
                    ))
                    .unwrap();
            }
            let lhs = basis.rep_matrix(&u.mul(&v).unwrap()).unwrap();
            let rhs = basis
                .rep_matrix(&u)
                .unwrap()
                .mul(&basis.rep_matrix(&v).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn adjoint_is_an_involution() {
        let basis = basis_for(Signature::new(2, 4), &[&[1, 5], &[2, 6]]);
        let u = Multivector::parse("1/2 + e3 - 3/4*e12 + e123456", basis.signature()).unwrap();
        let m = basis.rep_matrix(&u).unwrap();
        assert_eq!(m.adjoint().adjoint(), m);

        let double = basis_for(Signature::new(0, 3), &[&[1, 2, 3]]);
        let v = Multivector::parse("e1 - 2*e23", double.signature()).unwrap();
        let m = double.semisimple_rep_matrix(&v).unwrap();
        assert_eq!(m.adjoint().adjoint(), m);
    }

    #[test]
    fn transposition_is_the_adjoint() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for (sig, factors) in [
            (Signature::new(2, 2), vec![vec![1u32, 3], vec![2, 4]]), // R
            (Signature::new(3, 0), vec![vec![1]]),                   // C
            (Signature::new(2, 4), vec![vec![1, 5], vec![2, 6]]),    // H
            (Signature::new(2, 1), vec![vec![1], vec![2, 3]]),       // R+R
            (Signature::new(0, 3), vec![vec![1, 2, 3]]),             // H+H
        ] {
            let refs: Vec<&[u32]> = factors.iter().map(|v| v.as_slice()).collect();
            let basis = basis_for(sig, &refs);
            for _ in 0..20 {
                let mut u = Multivector::zero(sig);
                for mask in 0..sig.basis_len() as u32 {
                    let c = rat(rng.gen_range(-4..=4), 1 << rng.gen_range(0..3));
                    u = u.add(&Multivector::from_term(sig, Blade(mask), c)).unwrap();
                }
                let left = if basis.structure().simple {
                    basis.rep_matrix(&u.transposition()).unwrap()
                } else {
                    basis.semisimple_rep_matrix(&u.transposition()).unwrap()
                };
                let right = if basis.structure().simple {
                    basis.rep_matrix(&u).unwrap().adjoint()
                } else {
                    basis.semisimple_rep_matrix(&u).unwrap().adjoint()
                };
                assert_eq!(left, right, "adjoint relation fails in {sig}");
            }
        }
    }

    #[test]
    fn spinor_decomposition_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let basis = basis_for(Signature::new(2, 4), &[&[1, 5], &[2, 6]]);
        let sig = basis.signature();
        for _ in 0..50 {
            let mut u = Multivector::zero(sig);
            for mask in 0..sig.basis_len() as u32 {
                let c = rat(rng.gen_range(-2..=2), 1 << rng.gen_range(0..2));
                u = u.add(&Multivector::from_term(sig, Blade(mask), c)).unwrap();
            }
            let psi = u.mul(basis.idempotent().value()).unwrap();
            let coords = basis.decompose(&psi).unwrap();
            let mut rebuilt = Multivector::zero(sig);
            for (m, lambda) in basis.transversal().reps.iter().zip(&coords) {
                let lam_mv = basis
                    .kbasis()
                    .to_multivector(lambda, basis.idempotent().value());
                rebuilt = rebuilt
                    .add(&lam_mv.mul_signed_blade(SignedBlade::positive(*m), true))
                    .unwrap();
            }
            assert_eq!(rebuilt, psi);
        }
        // f itself decomposes as (1, 0, ..., 0).
        let coords = basis.decompose(basis.idempotent().value()).unwrap();
        assert_eq!(coords[0], basis.kbasis().one());
        assert!(coords[1..].iter().all(|c| c.is_zero()));

        // Elements outside the ideal are reported.
        let outside = Multivector::one(sig);
        assert!(matches!(basis.decompose(&outside), Err(Error::NotInIdeal)));
    }

    #[test]
    fn complex_coordinates_decompose_by_name() {
        // psi = f (a + b e23) + e2 f (c + d e23) has coordinates
        // [(a, b), (c, d)].
        let basis = basis_for(Signature::new(3, 0), &[&[1]]);
        let sig = basis.signature();
        let kb = basis.kbasis();
        let (a, b, c, d) = (rat(2, 3), rat(-1, 2), rat(5, 1), rat(0, 1));
        let lam1 = kb.to_multivector(
            &kb.from_coords(vec![a.clone(), b.clone()]),
            basis.idempotent().value(),
        );
        let lam2 = kb.to_multivector(
            &kb.from_coords(vec![c.clone(), d.clone()]),
            basis.idempotent().value(),
        );
        let e2 = Multivector::from_blade(sig, Blade::generator(2));
        let psi = basis
            .idempotent()
            .value()
            .mul(&lam1)
            .unwrap()
            .add(
                &e2.mul(basis.idempotent().value())
                    .unwrap()
                    .mul(&lam2)
                    .unwrap(),
            )
            .unwrap();
        let coords = basis.decompose(&psi).unwrap();
        assert_eq!(coords[0].coords(), &[a, b]);
        assert_eq!(coords[1].coords(), &[c, d]);
    }

    #[test]
    fn nonfirst_basis_elements_are_nilpotent() {
        let basis = basis_for(Signature::new(2, 2), &[&[1, 3], &[2, 4]]);
        for (i, mf) in basis.elements().iter().enumerate() {
            let sq = mf.mul(mf).unwrap();
            if i == 0 {
                assert_eq!(&sq, mf);
            } else {
                assert!(sq.is_zero(), "m_{i} f should square to zero");
            }
        }
    }

    #[test]
    fn semisimple_pair_matrices_of_example_spinor() {
        // psi = a f + b e2 f in Cl(2,1): pair column 1 is ((a, a), (b, -b))
        // for u = psi + grade_involution(psi).
        let basis = basis_for(Signature::new(2, 1), &[&[1], &[2, 3]]);
        let sig = basis.signature();
        let (a, b) = (rat(3, 2), rat(-5, 4));
        let f = basis.idempotent().value().clone();
        let e2f = f.mul_signed_blade(SignedBlade::positive(Blade::generator(2)), true);
        let psi = f.scale(&a).add(&e2f.scale(&b)).unwrap();
        let u = psi.add(&psi.grade_involution()).unwrap();
        let m = basis.semisimple_rep_matrix(&u).unwrap();
        assert_eq!(m.entry(0, 0).scalar_coord(), &a);
        assert_eq!(m.hat_entry(0, 0).unwrap().scalar_coord(), &a);
        assert_eq!(m.entry(1, 0).scalar_coord(), &b);
        assert_eq!(m.hat_entry(1, 0).unwrap().scalar_coord(), &(-b.clone()));
        assert!(m.entry(0, 1).is_zero() && m.entry(1, 1).is_zero());
        assert!(m.hat_entry(0, 1).unwrap().is_zero());

        // Faithful: every blade has a nonzero pair matrix.
        for bm in blade_matrices(&basis).unwrap() {
            assert!(!bm.is_zero());
        }

        // The central projector J+ maps to (identity, zero).
        let (jp, _) = crate::idempotent::central_idempotents(sig).unwrap();
        let m = basis.semisimple_rep_matrix(&jp).unwrap();
        for r in 0..2 {
            for c in 0..2 {
                if r == c {
                    assert_eq!(m.entry(r, c), &basis.kbasis().one());
                } else {
                    assert!(m.entry(r, c).is_zero());
                }
                assert!(m.hat_entry(r, c).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn rep_matrix_errors_on_wrong_case() {
        let simple = basis_for(Signature::new(2, 2), &[&[1, 3], &[2, 4]]);
        let u = Multivector::one(simple.signature());
        assert!(simple.semisimple_rep_matrix(&u).is_err());

        let double = basis_for(Signature::new(2, 1), &[&[1], &[2, 3]]);
        let u = Multivector::one(double.signature());
        assert!(double.rep_matrix(&u).is_err());
    }
}
