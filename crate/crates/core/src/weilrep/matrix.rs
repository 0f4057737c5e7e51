//! `rho(S)` and `rho(T)` as exact matrices over a cyclotomic ring.

use super::WeilError;
use crate::cyclotomic::{Cyclo, CyclotomicRing};
use crate::lattice::{Coset, DiscriminantForm};

/// Square matrix over `Z[zeta_M]` with an overall factor `|D|^{-scale/2}`.
/// Column `x` is the image of `e_x`.
#[derive(Clone, Debug)]
pub struct WeilMatrix {
    ring: CyclotomicRing,
    cosets: Vec<Coset>,
    entries: Vec<Vec<Cyclo>>,
    scale: u32,
}

impl WeilMatrix {
    pub fn dim(&self) -> usize {
        self.cosets.len()
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn ring(&self) -> &CyclotomicRing {
        &self.ring
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    /// Coefficient of `e_row` in the image of `e_col` (before scaling).
    pub fn entry(&self, row: usize, col: usize) -> &Cyclo {
        &self.entries[row][col]
    }

    pub fn mul(&self, other: &WeilMatrix) -> WeilMatrix {
        let n = self.dim();
        let r = &self.ring;
        let mut entries = vec![vec![r.zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            for k in 0..n {
                let a = &self.entries[i][k];
                if r.is_zero(a) {
                    continue;
                }
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot = r.add(slot, &r.mul(a, &other.entries[k][j]));
                }
            }
        }
        WeilMatrix {
            ring: self.ring.clone(),
            cosets: self.cosets.clone(),
            entries,
            scale: self.scale + other.scale,
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> WeilMatrix {
        let n = self.dim();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.ring.conj(&self.entries[j][i]))
                    .collect()
            })
            .collect();
        WeilMatrix {
            entries,
            ..self.clone()
        }
    }

    fn times(&self, c: &Cyclo) -> WeilMatrix {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|a| self.ring.mul(a, c)).collect())
            .collect();
        WeilMatrix {
            entries,
            ..self.clone()
        }
    }

    /// First entry where `self` and `other` differ as complex matrices, given
    /// `root` with `root^2 = |D|`.
    pub fn first_difference(&self, other: &WeilMatrix, root: &Cyclo) -> Option<(usize, usize)> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while a.scale < b.scale {
            a = a.times(root);
            a.scale += 1;
        }
        while b.scale < a.scale {
            b = b.times(root);
            b.scale += 1;
        }
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if !self.ring.eq(&a.entries[i][j], &b.entries[i][j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// `rho(T) e_x = e(-Q(x)) e_x`.
pub fn weil_t(disc: &DiscriminantForm) -> WeilMatrix {
    let ring = disc.ring();
    let cosets = disc.elements().to_vec();
    let n = cosets.len();
    let mut entries = vec![vec![ring.zero(); n]; n];
    for (i, x) in cosets.iter().enumerate() {
        entries[i][i] = ring.e(&-disc.q(x));
    }
    WeilMatrix {
        ring,
        cosets,
        entries,
        scale: 0,
    }
}

/// `rho(S) e_x = i^{sig/2} |D|^{-1/2} sum_y e(<x,y>) e_y`.
pub fn weil_s(disc: &DiscriminantForm, sig: u8) -> Result<WeilMatrix, WeilError> {
    if sig % 2 != 0 {
        return Err(WeilError::OddSignature(sig));
    }
    let ring = disc.ring();
    let i_pow = ring.root((ring.order() / 4) as i64 * (sig / 2) as i64);
    let cosets = disc.elements().to_vec();
    let entries = cosets
        .iter()
        .map(|y| {
            cosets
                .iter()
                .map(|x| ring.mul(&i_pow, &ring.e(&disc.pairing(x, y))))
                .collect()
        })
        .collect();
    Ok(WeilMatrix {
        ring,
        cosets,
        entries,
        scale: 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Offending `(row, column)` cosets when the identity fails.
    pub offending: Option<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub order: u64,
    pub signature: u8,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Exact checks of `S S* = 1`, `S^2 e_x = i^sig e_{-x}` and `(ST)^3 = S^2`.
pub fn check_relations(disc: &DiscriminantForm, sig: u8) -> Result<RelationReport, WeilError> {
    let s = weil_s(disc, sig)?;
    let t = weil_t(disc);
    let ring = s.ring().clone();
    let (_, root) = disc.milgram(&ring)?;
    let n = s.dim();

    let identity = {
        let mut entries = vec![vec![ring.zero(); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = ring.one();
        }
        WeilMatrix {
            ring: ring.clone(),
            cosets: s.cosets.clone(),
            entries,
            scale: 0,
        }
    };
    let flip = {
        let i_sig = ring.root((ring.order() / 4) as i64 * sig as i64);
        let mut entries = vec![vec![ring.zero(); n]; n];
        for (j, x) in s.cosets.iter().enumerate() {
            let i = disc.index_of(&x.neg()).expect("closed under negation");
            entries[i][j] = i_sig.clone();
        }
        WeilMatrix {
            ring: ring.clone(),
            cosets: s.cosets.clone(),
            entries,
            scale: 0,
        }
    };

    let s2 = s.mul(&s);
    let st = s.mul(&t);
    let st3 = st.mul(&st).mul(&st);
    let cases = [
        ("unitary", s.mul(&s.adjoint()), identity),
        ("S^2 = i^sig Z", s2.clone(), flip),
        ("(ST)^3 = S^2", st3, s2),
    ];
    let checks = cases
        .into_iter()
        .map(|(name, lhs, rhs)| {
            let diff = lhs.first_difference(&rhs, &root);
            RelationCheck {
                name,
                passed: diff.is_none(),
                offending: diff.map(|(i, j)| (s.cosets[i].to_string(), s.cosets[j].to_string())),
            }
        })
        .collect();
    Ok(RelationReport {
        order: disc.order(),
        signature: sig,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{ok_lattice, EvenLattice};
    use crate::qseries::frac;

    fn disc(gram: Vec<Vec<i64>>) -> DiscriminantForm {
        DiscriminantForm::new(&EvenLattice::new(gram).unwrap()).unwrap()
    }

    #[test]
    fn t_entries() {
        let a1 = disc(vec![vec![2]]);
        let t = weil_t(&a1);
        let r = t.ring();
        assert!(r.eq(t.entry(1, 1), &r.root(-(r.order() as i64) / 4)));
        assert!(r.eq(t.entry(0, 0), &r.one()));
        let d7 = DiscriminantForm::new(&ok_lattice(7).unwrap()).unwrap();
        let t7 = weil_t(&d7);
        let v = Coset::new(vec![frac(-1, 7), frac(2, 7)]);
        let i = d7.index_of(&v).unwrap();
        assert!(t7.ring().eq(t7.entry(i, i), &t7.ring().e(&frac(-1, 7))));
    }

    #[test]
    fn odd_signature_rejected() {
        let a1 = disc(vec![vec![2]]);
        assert_eq!(weil_s(&a1, 1).unwrap_err(), WeilError::OddSignature(1));
        assert!(check_relations(&a1, 1).is_err());
    }

    #[test]
    fn trivial_form() {
        let u = disc(vec![vec![0, 1], vec![1, 0]]);
        let rep = check_relations(&u, 0).unwrap();
        assert!(rep.passed());
        assert_eq!(weil_s(&u, 0).unwrap().dim(), 1);
    }

    #[test]
    fn ok8_relations() {
        let d = DiscriminantForm::new(&ok_lattice(8).unwrap()).unwrap();
        let rep = check_relations(&d, 2).unwrap();
        assert!(rep.passed(), "{rep:?}");
        // a wrong signature breaks (ST)^3 = S^2
        let bad = check_relations(&d, 6).unwrap();
        assert!(!bad.passed());
    }
}
