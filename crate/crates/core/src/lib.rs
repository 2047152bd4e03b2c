//! Exact-arithmetic engine for real Clifford algebras Cl(p,q).
//!
//! Everything is computed over arbitrary-precision rationals: blade products,
//! primitive idempotents, conjugation orbits and stabilizers of the vee group
//! of signed basis monomials, spinor bases of minimal left ideals, and the
//! matrix representations over R, C, H and their double rings. The
//! transposition anti-involution (each basis monomial to its inverse) realizes
//! matrix transposition, Hermitian or quaternionic-Hermitian conjugation of
//! those representations depending on (p-q) mod 8.
//!
//! All values are immutable after construction and all operations are pure,
//! so independent signatures can be processed concurrently.

pub mod blade;
pub mod error;
pub mod expr;
pub mod fingerprint;
pub mod idempotent;
pub mod krep;
pub mod matrix;
pub mod multivector;
pub mod norms;
pub mod signature;
pub mod spinor;
pub mod structure;
pub mod tables;
pub mod vee;
pub mod verify;

pub use blade::{blade_order, Blade, Sign, SignedBlade};
pub use error::{Error, Result};
pub use fingerprint::{fingerprint, GroupFingerprint, StructureLabel};
pub use idempotent::{
    canonical_idempotent, central_idempotents, find_commuting_set, is_primitive,
    primitive_idempotent, sign_family, CommutingSet, Idempotent,
};
pub use krep::{division_ring_basis, KBasis, KElement};
pub use matrix::{left_regular_matrix, RationalMatrix};
pub use multivector::{rat, rat_int, Multivector, Rational};
pub use norms::{
    beta_minus, beta_plus, find_beta_witness, form_tensor, in_g_epsilon, t_inner, BetaKind,
    PureSpinorWitness,
};
pub use signature::Signature;
pub use spinor::{blade_matrices, spinor_basis, RepMatrix, SpinorBasis, StructConstants};
pub use structure::{classify, radon_hurwitz, stabilizer_order, AlgebraStructure, RingType};
pub use tables::{generate_row, generate_table, table_class, TableEntry, TableRow, TABLE_ENTRIES};
pub use vee::{
    conjugate, coset_permutation, orbit, orbit_idempotents, stabilizer, stabilizer_of, transversal,
    Subgroup, Transversal, VeeGroup,
};
pub use verify::{
    adjoint_theorem_check, all_passed, examples_suite, props_suite, random_dyadic, random_spinor,
    render_report, tables_suite, CheckResult,
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Multivector>();
        assert_send_sync::<Idempotent>();
        assert_send_sync::<Subgroup>();
        assert_send_sync::<SpinorBasis>();
        assert_send_sync::<RepMatrix>();
        assert_send_sync::<KBasis>();
        assert_send_sync::<TableRow>();
    }
}
