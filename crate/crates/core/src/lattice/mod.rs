//! Even lattices, their discriminant forms, and the `U + U + O_K` family.

mod constructors;
mod discriminant;
mod enumerate;
pub mod snf;

pub use constructors::{
    hermitian_lattice, is_field_discriminant, ok_lattice, siegel_coset_vector, FREE_DISCRIMINANTS,
};
pub use discriminant::{Coset, DiscriminantForm};
pub use enumerate::enumerate_vectors;

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::qseries::{int, Frac};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("Gram matrix must be square and nonempty")]
    NotSquare,
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("diagonal entry {0} is odd: lattice is not even")]
    OddDiagonal(i64),
    #[error("Gram matrix is degenerate")]
    Degenerate,
    #[error("lattice is not positive definite")]
    NotPositiveDefinite,
    #[error("-{0} is not an imaginary quadratic field discriminant")]
    NotDiscriminant(u64),
    #[error("discriminant group of order {order} exceeds enumeration bound {bound}")]
    TooLarge { order: u64, bound: u64 },
    #[error("Milgram sum has the wrong absolute value: form is not even or is corrupted")]
    MilgramFailure,
    #[error("vector {0} is not in the dual lattice")]
    NotInDual(String),
    #[error("coset has {got} coordinates, lattice has rank {rank}")]
    RankMismatch { rank: usize, got: usize },
}

/// Even lattice given by the Gram matrix of its bilinear form; `Q(x) =
/// <x, x> / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenLattice {
    gram: Vec<Vec<i64>>,
}

impl EvenLattice {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let n = gram.len();
        if n == 0 || gram.iter().any(|r| r.len() != n) {
            return Err(LatticeError::NotSquare);
        }
        for i in 0..n {
            if gram[i][i] % 2 != 0 {
                return Err(LatticeError::OddDiagonal(gram[i][i]));
            }
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        let lattice = EvenLattice { gram };
        if lattice.determinant().is_zero() {
            return Err(LatticeError::Degenerate);
        }
        Ok(lattice)
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    fn rational_gram(&self) -> Vec<Vec<Frac>> {
        self.gram
            .iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    pub fn determinant(&self) -> Frac {
        let mut m = self.rational_gram();
        let n = m.len();
        let mut det = int(1);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return Frac::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            for r in c + 1..n {
                let f = &m[r][c] / &m[c][c];
                for k in c..n {
                    let v = &f * &m[c][k];
                    m[r][k] -= v;
                }
            }
        }
        det
    }

    /// Exact inverse of the Gram matrix.
    pub fn gram_inverse(&self) -> Vec<Vec<Frac>> {
        let n = self.rank();
        let mut a = self.rational_gram();
        let mut inv: Vec<Vec<Frac>> = (0..n)
            .map(|i| (0..n).map(|j| int(i64::from(i == j))).collect())
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("nondegenerate");
            a.swap(p, c);
            inv.swap(p, c);
            let piv = a[c][c].clone();
            for k in 0..n {
                a[c][k] = &a[c][k] / &piv;
                inv[c][k] = &inv[c][k] / &piv;
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for k in 0..n {
                        let (x, y) = (&f * &a[c][k], &f * &inv[c][k]);
                        a[r][k] -= x;
                        inv[r][k] -= y;
                    }
                }
            }
        }
        inv
    }

    /// `(positive, negative)` inertia from an exact congruence
    /// diagonalization (Sylvester's law).
    pub fn inertia(&self) -> (usize, usize) {
        let mut m = self.rational_gram();
        let n = m.len();
        let mut pos = 0;
        let mut neg = 0;
        for c in 0..n {
            if m[c][c].is_zero() {
                // bring a nonzero diagonal into place, or create one
                if let Some(r) = (c + 1..n).find(|&r| !m[r][r].is_zero()) {
                    m.swap(r, c);
                    for row in m.iter_mut() {
                        row.swap(r, c);
                    }
                } else if let Some(r) = (c + 1..n).find(|&r| !m[c][r].is_zero()) {
                    // x_c += x_r makes the diagonal 2 m[c][r] + m[r][r]
                    for k in 0..n {
                        let v = m[r][k].clone();
                        m[c][k] += v;
                    }
                    for row in m.iter_mut() {
                        let v = row[r].clone();
                        row[c] += v;
                    }
                }
            }
            let p = m[c][c].clone();
            if p.is_zero() {
                continue;
            }
            if p.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for r in c + 1..n {
                let f = &m[r][c] / &p;
                for k in c..n {
                    let v = &f * &m[c][k];
                    m[r][k] -= v;
                }
                for row in m.iter_mut().skip(c) {
                    let v = &f * &row[c];
                    row[r] -= v;
                }
            }
        }
        (pos, neg)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.inertia() == (self.rank(), 0)
    }

    /// `<x, y>` for rational coordinate vectors.
    pub fn bilinear(&self, x: &[Frac], y: &[Frac]) -> Frac {
        let mut s = Frac::zero();
        for (i, row) in self.gram.iter().enumerate() {
            if x[i].is_zero() {
                continue;
            }
            for (j, g) in row.iter().enumerate() {
                if *g != 0 && !y[j].is_zero() {
                    s += &x[i] * &y[j] * int(*g);
                }
            }
        }
        s
    }

    pub fn norm(&self, x: &[Frac]) -> Frac {
        self.bilinear(x, x) / int(2)
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &EvenLattice) -> EvenLattice {
        let n = self.rank();
        let m = other.rank();
        let mut gram = vec![vec![0i64; n + m]; n + m];
        for i in 0..n {
            gram[i][..n].copy_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            gram[n + i][n..].copy_from_slice(&other.gram[i]);
        }
        EvenLattice { gram }
    }

    /// Row-major text, one row per line.
    pub fn to_text(&self) -> String {
        self.gram
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for EvenLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::frac;

    #[test]
    fn validation() {
        assert_eq!(EvenLattice::new(vec![]), Err(LatticeError::NotSquare));
        assert_eq!(
            EvenLattice::new(vec![vec![1]]),
            Err(LatticeError::OddDiagonal(1))
        );
        assert_eq!(
            EvenLattice::new(vec![vec![2, 1], vec![0, 2]]),
            Err(LatticeError::NotSymmetric)
        );
        assert_eq!(
            EvenLattice::new(vec![vec![2, 2], vec![2, 2]]),
            Err(LatticeError::Degenerate)
        );
    }

    #[test]
    fn determinant_and_inverse() {
        let l = EvenLattice::new(vec![vec![2, 1], vec![1, 4]]).unwrap();
        assert_eq!(l.determinant(), int(7));
        let inv = l.gram_inverse();
        assert_eq!(inv[0][0], frac(4, 7));
        assert_eq!(inv[0][1], frac(-1, 7));
        assert_eq!(inv[1][1], frac(2, 7));
    }

    #[test]
    fn inertia_of_hermitian_lattices() {
        for d in FREE_DISCRIMINANTS {
            let l = hermitian_lattice(d).unwrap();
            assert_eq!(l.inertia(), (4, 2), "d = {d}");
            assert!(ok_lattice(d).unwrap().is_positive_definite());
        }
        let u = EvenLattice::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(u.inertia(), (1, 1));
    }
}
