use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::snf::smith_normal_form;
use super::{EvenLattice, LatticeError};
use crate::cyclotomic::{Cyclo, CyclotomicRing};
use crate::qseries::{int, mod_one, parse_frac, render, Frac};

/// Largest discriminant group that is enumerated element by element.
pub const ENUMERATION_BOUND: u64 = 20_000;

/// An element of `L'/L`, stored as its representative in `L' (x) Q` with
/// lattice-basis coordinates reduced into `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coset(Vec<Frac>);

impl Coset {
    /// Reduces arbitrary rational coordinates modulo the lattice.
    pub fn new(coords: Vec<Frac>) -> Self {
        Coset(coords.iter().map(mod_one).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Coset(vec![Frac::zero(); rank])
    }

    pub fn coords(&self) -> &[Frac] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Coset {
        Coset::new(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Coset) -> Coset {
        Coset::new(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Coset {
        Coset::new(self.0.iter().map(|a| a * int(k)).collect())
    }

    /// Parses `(a, b, ...)` or whitespace/comma separated rationals.
    pub fn parse(s: &str) -> Option<Coset> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords: Option<Vec<Frac>> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse_frac)
            .collect();
        let coords = coords?;
        if coords.is_empty() {
            return None;
        }
        Some(Coset::new(coords))
    }
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(render).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The finite quadratic module `L'/L` with `Q` and `<,>` valued in `Q/Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantForm {
    lattice: EvenLattice,
    orders: Vec<u64>,
    generators: Vec<Coset>,
    elements: Vec<Coset>,
    index: BTreeMap<Coset, usize>,
    level: u64,
}

impl DiscriminantForm {
    /// Computes `L'/L` from the Smith normal form of the Gram matrix.
    pub fn new(lattice: &EvenLattice) -> Result<Self, LatticeError> {
        let n = lattice.rank();
        let smith = smith_normal_form(&lattice.gram().to_vec());
        let order: u64 = smith.diagonal.iter().map(|d| d.unsigned_abs()).product();
        if order == 0 {
            return Err(LatticeError::Degenerate);
        }
        if order > ENUMERATION_BOUND {
            return Err(LatticeError::TooLarge {
                order,
                bound: ENUMERATION_BOUND,
            });
        }
        // left * G * right = D, so G^{-1} = right D^{-1} left and the columns
        // right e_i / d_i generate L'/L.
        let mut orders = Vec::new();
        let mut generators = Vec::new();
        for (i, &d) in smith.diagonal.iter().enumerate() {
            if d.abs() > 1 {
                orders.push(d.unsigned_abs());
                let col: Vec<Frac> = (0..n)
                    .map(|r| Frac::new(BigInt::from(smith.right[r][i]), BigInt::from(d)))
                    .collect();
                generators.push(Coset::new(col));
            }
        }
        let mut elements = vec![Coset::zero(n)];
        for (g, &ord) in generators.iter().zip(&orders) {
            let mut next = Vec::with_capacity(elements.len() * ord as usize);
            for x in &elements {
                for k in 0..ord {
                    next.push(x.add(&g.scale(k as i64)));
                }
            }
            elements = next;
        }
        elements.sort();
        elements.dedup();
        debug_assert_eq!(elements.len() as u64, order);
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i))
            .collect();
        let mut form = DiscriminantForm {
            lattice: lattice.clone(),
            orders,
            generators,
            elements,
            index,
            level: 1,
        };
        form.level = form
            .elements
            .iter()
            .map(|x| crate::qseries::denom_u64(&form.q(x)))
            .fold(1, num_integer::lcm);
        Ok(form)
    }

    pub fn lattice(&self) -> &EvenLattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    /// `|L'/L|`.
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Elementary divisors greater than one.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn generators(&self) -> &[Coset] {
        &self.generators
    }

    /// All cosets in canonical (lexicographic) order; the zero coset first.
    pub fn elements(&self) -> &[Coset] {
        &self.elements
    }

    pub fn index_of(&self, x: &Coset) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Smallest `N` with `N Q(x)` integral for all `x`.
    pub fn level(&self) -> u64 {
        self.level
    }

    /// `Q(x) mod 1`.
    pub fn q(&self, x: &Coset) -> Frac {
        mod_one(&self.lattice.norm(x.coords()))
    }

    /// `<x, y> mod 1`.
    pub fn pairing(&self, x: &Coset, y: &Coset) -> Frac {
        mod_one(&self.lattice.bilinear(x.coords(), y.coords()))
    }

    /// The coset of a dual-lattice vector given in lattice coordinates.
    pub fn coset_of(&self, coords: &[Frac]) -> Result<Coset, LatticeError> {
        if coords.len() != self.rank() {
            return Err(LatticeError::RankMismatch {
                rank: self.rank(),
                got: coords.len(),
            });
        }
        let c = Coset::new(coords.to_vec());
        if self.index.contains_key(&c) {
            Ok(c)
        } else {
            Err(LatticeError::NotInDual(c.to_string()))
        }
    }

    /// Canonical representative of `{x, -x}`: the lexicographically smaller.
    pub fn pm_representative(&self, x: &Coset) -> Coset {
        let n = x.neg();
        if n < *x {
            n
        } else {
            x.clone()
        }
    }

    /// Cosets with `Q(x) = m mod 1`, one canonical representative per
    /// `+-` pair.
    pub fn heegner_components(&self, m: &Frac) -> Vec<Coset> {
        let target = mod_one(m);
        let mut reps: Vec<Coset> = self
            .elements
            .iter()
            .filter(|x| self.q(x) == target)
            .map(|x| self.pm_representative(x))
            .collect();
        reps.sort();
        reps.dedup();
        reps
    }

    /// Cyclotomic ring large enough for every `e(Q(x))`, `e(<x,y>)` and the
    /// eighth roots of unity.
    pub fn ring(&self) -> CyclotomicRing {
        CyclotomicRing::new(num_integer::lcm(8, self.level) as usize)
    }

    /// `sum_x e(Q(x))` in [`DiscriminantForm::ring`].
    pub fn gauss_sum(&self, ring: &CyclotomicRing) -> Cyclo {
        self.elements
            .iter()
            .fold(ring.zero(), |acc, x| ring.add(&acc, &ring.e(&self.q(x))))
    }

    /// The positive square root of `|L'/L|` as an element of the ring,
    /// `gauss_sum * e(-sig/8)`, together with `sig mod 8`.
    pub fn milgram(&self, ring: &CyclotomicRing) -> Result<(u8, Cyclo), LatticeError> {
        let g = self.gauss_sum(ring);
        let order = self.order() as i64;
        if !ring.eq(&ring.mul(&g, &ring.conj(&g)), &ring.from_int(order)) {
            return Err(LatticeError::MilgramFailure);
        }
        let step = (ring.order() / 8) as i64;
        for s in 0..8u8 {
            let r = ring.mul(&g, &ring.root(-(s as i64) * step));
            if ring.eq(&r, &ring.conj(&r))
                && ring.eq(&ring.mul(&r, &r), &ring.from_int(order))
                && ring.real_sign(&r) == Some(Ordering::Greater)
            {
                return Ok((s, r));
            }
        }
        Err(LatticeError::MilgramFailure)
    }

    /// Signature mod 8 from the Milgram sum.
    pub fn signature_mod8(&self) -> Result<u8, LatticeError> {
        self.milgram(&self.ring()).map(|(s, _)| s)
    }

    /// Multiset of `(element order, Q)` pairs, an isomorphism invariant.
    pub fn invariant_profile(&self) -> Vec<(u64, Frac)> {
        let mut out: Vec<(u64, Frac)> = self
            .elements
            .iter()
            .map(|x| {
                let mut k = 1u64;
                while !x.scale(k as i64).is_zero() {
                    k += 1;
                }
                (k, self.q(x))
            })
            .collect();
        out.sort();
        out
    }

    /// Text block: elementary divisors, then one `coset Q` line per element.
    pub fn to_text(&self) -> String {
        let orders: Vec<String> = self.orders.iter().map(|o| o.to_string()).collect();
        let mut out = format!("order {}\norders {}\n", self.order(), orders.join(" "));
        for x in &self.elements {
            out.push_str(&format!("{} {}\n", x, render(&self.q(x))));
        }
        out
    }

    /// Number of elements, capped to `usize`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The integer `N Q(x)` reduced mod `N` for `N = ring order`.
    pub fn q_index(&self, x: &Coset, n: u64) -> u64 {
        (self.q(x) * int(n as i64))
            .to_integer()
            .to_u64()
            .expect("nonnegative")
    }
}
