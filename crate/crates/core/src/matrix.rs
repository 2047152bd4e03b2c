//! Dense rational matrices: the left regular representation and the exact
//! rank oracle.

use crate::blade::blade_order;
use crate::multivector::{Multivector, Rational};
use num::{One, Zero};
use std::fmt;

/// Square matrix over the rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(dim: usize) -> Self {
        RationalMatrix {
            dim,
            data: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = RationalMatrix::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Rational) {
        self.data[row * self.dim + col] = v;
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zero(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.data[c * self.dim + r] = self.data[r * self.dim + c].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = RationalMatrix::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = &self.data[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = &other.data[k * n + c];
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.data[r * n + c];
                    *cell = cell.clone() + a * b;
                }
            }
        }
        out
    }

    /// Exact rank by rational Gaussian elimination. Stops as soon as the
    /// remaining block is zero, which keeps low-rank inputs cheap.
    pub fn rank(&self) -> usize {
        let n = self.dim;
        let mut m = self.data.clone();
        let mut rank = 0;
        for col in 0..n {
            if rank == n {
                break;
            }
            let pivot = (rank..n).find(|&r| !m[r * n + col].is_zero());
            let Some(pivot) = pivot else { continue };
            if pivot != rank {
                for c in 0..n {
                    m.swap(pivot * n + c, rank * n + c);
                }
            }
            let inv = m[rank * n + col].clone();
            for r in rank + 1..n {
                if m[r * n + col].is_zero() {
                    continue;
                }
                let factor = &m[r * n + col] / &inv;
                m[r * n + col] = Rational::zero();
                for c in col + 1..n {
                    if !m[rank * n + c].is_zero() {
                        let delta = &factor * &m[rank * n + c];
                        m[r * n + c] = m[r * n + c].clone() - delta;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            write!(f, "[")?;
            for c in 0..self.dim {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Matrix of the left multiplication operator u relative to the canonical
/// blade order: column j holds the coordinates of u * b_j.
pub fn left_regular_matrix(u: &Multivector) -> RationalMatrix {
    let sig = u.signature();
    let order = blade_order(sig);
    let index: std::collections::HashMap<_, _> =
        order.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let n = order.len();
    let mut m = RationalMatrix::zero(n);
    for (j, b) in order.iter().enumerate() {
        for (a, c) in u.terms() {
            let (sign, prod) = a.mul(*b, sig);
            let row = index[&prod];
            let mut coeff = c.clone();
            if sign.is_negative() {
                coeff = -coeff;
            }
            let cell = m.get(row, j).clone();
            m.set(row, j, cell + coeff);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivector::rat;
    use crate::signature::Signature;

    #[test]
    fn identity_for_unit() {
        let sig = Signature::new(2, 1);
        let m = left_regular_matrix(&Multivector::one(sig));
        assert_eq!(m, RationalMatrix::identity(8));
    }

    #[test]
    fn representation_is_multiplicative() {
        let sig = Signature::new(1, 2);
        let u = Multivector::parse("1/2*e1 + 3*e23 - 1", sig).unwrap();
        let v = Multivector::parse("e2 - 1/3*e13", sig).unwrap();
        let lhs = left_regular_matrix(&u.mul(&v).unwrap());
        let rhs = left_regular_matrix(&u).mul(&left_regular_matrix(&v));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn transposition_transposes_the_matrix() {
        let sig = Signature::new(2, 1);
        let u = Multivector::parse("1/2 + e1 - 1/4*e123 + 2*e23", sig).unwrap();
        assert_eq!(
            left_regular_matrix(&u.transposition()),
            left_regular_matrix(&u).transpose()
        );
    }

    #[test]
    fn rank_of_primitive_idempotent_matrix() {
        // rank [L_f] = 4 for the canonical primitive idempotent in Cl(2,2).
        let sig = Signature::new(2, 2);
        let f = Multivector::parse("1/4 + 1/4*e13 + 1/4*e24 - 1/4*e1234", sig).unwrap();
        assert!(f.is_idempotent());
        assert_eq!(left_regular_matrix(&f).rank(), 4);

        // A non-minimal idempotent has a larger rank.
        let g = Multivector::parse("1/2 + 1/2*e13", sig).unwrap();
        assert!(g.is_idempotent());
        assert_eq!(left_regular_matrix(&g).rank(), 8);
    }

    #[test]
    fn rank_of_rectangular_like_cases() {
        let mut m = RationalMatrix::zero(3);
        m.set(0, 0, rat(1, 2));
        m.set(1, 1, rat(0, 1));
        m.set(2, 0, rat(1, 4));
        assert_eq!(m.rank(), 1);
        assert_eq!(RationalMatrix::zero(4).rank(), 0);
        assert_eq!(RationalMatrix::identity(5).rank(), 5);
    }
}
