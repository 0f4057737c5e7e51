use super::{EvenLattice, LatticeError};
use crate::qseries::{frac, Frac};

/// The eight discriminants `d` (field discriminant `-d`) with free algebras.
pub const FREE_DISCRIMINANTS: [u64; 8] = [4, 7, 8, 11, 15, 19, 20, 24];

fn squarefree(n: u64) -> bool {
    let mut p = 2;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Whether `-d` is the discriminant of an imaginary quadratic field.
pub fn is_field_discriminant(d: u64) -> bool {
    match d % 4 {
        3 => squarefree(d),
        0 => {
            let k = d / 4;
            matches!(k % 4, 1 | 2) && squarefree(k)
        }
        _ => false,
    }
}

/// `O_K` with the trace form of the norm, on the basis `1, omega` where
/// `omega = (1 + sqrt(-d))/2` or `sqrt(-d)/2`.
pub fn ok_lattice(d: u64) -> Result<EvenLattice, LatticeError> {
    if !is_field_discriminant(d) {
        return Err(LatticeError::NotDiscriminant(d));
    }
    let d = d as i64;
    let gram = if d % 4 == 3 {
        vec![vec![2, 1], vec![1, (1 + d) / 2]]
    } else {
        vec![vec![2, 0], vec![0, d / 2]]
    };
    EvenLattice::new(gram)
}

/// `U + U + O_K` with the basis order `(e1, e2, 1, omega, f2, f1)`, where
/// `<e_i, f_i> = 1`.
pub fn hermitian_lattice(d: u64) -> Result<EvenLattice, LatticeError> {
    let ok = ok_lattice(d)?;
    let mut gram = vec![vec![0i64; 6]; 6];
    gram[0][5] = 1;
    gram[5][0] = 1;
    gram[1][4] = 1;
    gram[4][1] = 1;
    for i in 0..2 {
        for j in 0..2 {
            gram[2 + i][2 + j] = ok.gram()[i][j];
        }
    }
    EvenLattice::new(gram)
}

/// Coordinates of `sqrt(-d)/d` (norm `1/d`) in the `O_K` basis. Its coset is
/// the one whose Heegner divisor is the Siegel half-space.
pub fn siegel_coset_vector(d: u64) -> Vec<Frac> {
    let d = d as i64;
    if d % 4 == 3 {
        // sqrt(-d) = 2 omega - 1
        vec![frac(-1, d), frac(2, d)]
    } else {
        // sqrt(-d) = 2 omega
        vec![frac(0, 1), frac(2, d)]
    }
}
