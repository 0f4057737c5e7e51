use num_traits::ToPrimitive;

use super::{Coset, EvenLattice, LatticeError};
use crate::qseries::{int, isqrt_ceil, Frac};

/// All `v` in `L + gamma` with `Q(v) <= max_norm`, sorted by norm, then by
/// coordinates.
///
/// Box search: for positive definite `G`, Cauchy-Schwarz in the dual gives
/// `v_i^2 <= <v,v> (G^{-1})_{ii}`.
pub fn enumerate_vectors(
    lattice: &EvenLattice,
    gamma: &Coset,
    max_norm: &Frac,
) -> Result<Vec<(Vec<Frac>, Frac)>, LatticeError> {
    let n = lattice.rank();
    if gamma.coords().len() != n {
        return Err(LatticeError::RankMismatch {
            rank: n,
            got: gamma.coords().len(),
        });
    }
    if !lattice.is_positive_definite() {
        return Err(LatticeError::NotPositiveDefinite);
    }
    if *max_norm < int(0) {
        return Ok(Vec::new());
    }
    let inv = lattice.gram_inverse();
    let ranges: Vec<(i64, i64)> = (0..n)
        .map(|i| {
            let b = isqrt_ceil(&(int(2) * max_norm * &inv[i][i])) as i64;
            let g = &gamma.coords()[i];
            let lo = (int(-b) - g).ceil().to_integer().to_i64().expect("small");
            let hi = (int(b) - g).floor().to_integer().to_i64().expect("small");
            (lo, hi)
        })
        .collect();

    let mut out = Vec::new();
    let mut current = vec![0i64; n];
    fn walk(
        i: usize,
        ranges: &[(i64, i64)],
        current: &mut Vec<i64>,
        lattice: &EvenLattice,
        gamma: &Coset,
        max_norm: &Frac,
        out: &mut Vec<(Vec<Frac>, Frac)>,
    ) {
        if i == ranges.len() {
            let v: Vec<Frac> = current
                .iter()
                .zip(gamma.coords())
                .map(|(k, g)| int(*k) + g)
                .collect();
            let q = lattice.norm(&v);
            if q <= *max_norm {
                out.push((v, q));
            }
            return;
        }
        for k in ranges[i].0..=ranges[i].1 {
            current[i] = k;
            walk(i + 1, ranges, current, lattice, gamma, max_norm, out);
        }
    }
    walk(0, &ranges, &mut current, lattice, gamma, max_norm, &mut out);
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{ok_lattice, DiscriminantForm};
    use crate::qseries::frac;

    fn count(l: &EvenLattice, g: &Coset, n: &Frac, exact: &Frac) -> usize {
        enumerate_vectors(l, g, n)
            .unwrap()
            .iter()
            .filter(|(_, q)| q == exact)
            .count()
    }

    #[test]
    fn units() {
        let l7 = ok_lattice(7).unwrap();
        let z = Coset::zero(2);
        assert_eq!(count(&l7, &z, &int(1), &int(1)), 2);
        assert_eq!(count(&l7, &z, &int(1), &int(0)), 1);
        let l4 = ok_lattice(4).unwrap();
        assert_eq!(count(&l4, &z, &int(1), &int(1)), 4);
        let l3 = ok_lattice(3).unwrap();
        assert_eq!(count(&l3, &z, &int(1), &int(1)), 6);
    }

    #[test]
    fn max_norm_zero_gives_origin() {
        for d in [3, 4, 7, 8, 24] {
            let l = ok_lattice(d).unwrap();
            let v = enumerate_vectors(&l, &Coset::zero(2), &int(0)).unwrap();
            assert_eq!(v, vec![(vec![int(0), int(0)], int(0))]);
        }
    }

    #[test]
    fn nonzero_cosets_avoid_norm_zero_and_are_symmetric() {
        for d in [7, 8, 15, 20] {
            let l = ok_lattice(d).unwrap();
            let disc = DiscriminantForm::new(&l).unwrap();
            for g in disc.elements() {
                let a = enumerate_vectors(&l, g, &int(4)).unwrap();
                let b = enumerate_vectors(&l, &g.neg(), &int(4)).unwrap();
                let na: Vec<_> = a.iter().map(|x| x.1.clone()).collect();
                let nb: Vec<_> = b.iter().map(|x| x.1.clone()).collect();
                assert_eq!(na, nb);
                if !g.is_zero() {
                    assert!(na.iter().all(|q| *q > int(0)));
                }
            }
        }
    }

    #[test]
    fn coset_norms_match_discriminant_form() {
        let l = ok_lattice(7).unwrap();
        let g = Coset::new(vec![frac(-1, 7), frac(2, 7)]);
        let v = enumerate_vectors(&l, &g, &int(1)).unwrap();
        assert_eq!(v[0].1, frac(1, 7));
    }

    #[test]
    fn indefinite_rejected() {
        let u = EvenLattice::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(
            enumerate_vectors(&u, &Coset::zero(2), &int(1)),
            Err(LatticeError::NotPositiveDefinite)
        );
    }
}
