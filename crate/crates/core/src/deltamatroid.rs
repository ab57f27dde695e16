//! Delta-matroids given by their feasible sets.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ground::{self, bits, check_guard, full_mask, AdmissibleSet, SignedPermutation};
use crate::lp::{self, Constraint, Relation};
use crate::matroid::{Ground, Matroid};
use crate::rankfn::RankTable;
use crate::Rational;

/// A family of size-`n` admissible sets, stored sorted and deduplicated.
///
/// Construction does not check the delta-matroid axiom; use [`DeltaMatroid::validate`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaMatroid {
    n: usize,
    feasible: Vec<AdmissibleSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValidationMethod {
    /// Symmetric exchange on `B ∩ [n]`.
    Exchange,
    /// Edge directions of the feasible polytope, edges decided by exact LP.
    Polytope,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    Valid,
    /// `first` and `second` span an edge whose direction touches `support` coordinates.
    BadEdge { first: AdmissibleSet, second: AdmissibleSet, support: usize },
    /// No exchange partner for `element` going from `from` towards `towards`.
    BadExchange { from: AdmissibleSet, towards: AdmissibleSet, element: usize },
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validation::Valid)
    }
}

impl fmt::Display for Validation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Validation::Valid => f.write_str("PASS"),
            Validation::BadEdge { first, second, support } => write!(
                f,
                "FAIL: edge direction support {support} between {{{first}}} and {{{second}}}"
            ),
            Validation::BadExchange { from, towards, element } => write!(
                f,
                "FAIL: no exchange for element {element} from {{{from}}} towards {{{towards}}}"
            ),
        }
    }
}

/// The pair `(g_D(S), h_D(S))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rank {
    pub g: i64,
    pub h: i64,
}

impl DeltaMatroid {
    pub fn new(n: usize, feasible: impl IntoIterator<Item = AdmissibleSet>) -> Result<Self> {
        if n > ground::MAX_GROUND {
            return Err(Error::GuardLimit { n, limit: ground::MAX_GROUND });
        }
        let mut family: Vec<AdmissibleSet> = feasible.into_iter().collect();
        for b in &family {
            if b.ground_size() != n {
                return Err(Error::SizeMismatch { left: n, right: b.ground_size() });
            }
            if b.len() != n {
                return Err(Error::WrongSetSize { expected: n, found: b.len() });
            }
        }
        if family.is_empty() {
            return Err(Error::EmptyFamily);
        }
        family.sort_unstable();
        family.dedup();
        Ok(Self { n, feasible: family })
    }

    /// Builds from signed element lists, e.g. `&[&[1, -2, -3], ...]`.
    pub fn from_signed(n: usize, sets: &[&[i64]]) -> Result<Self> {
        let family = sets
            .iter()
            .map(|s| AdmissibleSet::from_signed(n, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, family)
    }

    /// Every size-`n` admissible set is feasible.
    pub fn free(n: usize) -> Result<Self> {
        Self::new(n, ground::enumerate_transversals(n)?)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn feasible(&self) -> &[AdmissibleSet] {
        &self.feasible
    }

    pub fn is_feasible(&self, s: &AdmissibleSet) -> bool {
        self.feasible.binary_search(s).is_ok()
    }

    pub fn validate(&self, method: ValidationMethod) -> Result<Validation> {
        check_guard(self.n)?;
        Ok(match method {
            ValidationMethod::Exchange => self.validate_exchange(),
            ValidationMethod::Polytope => self.validate_polytope(),
        })
    }

    fn validate_exchange(&self) -> Validation {
        let positives: BTreeSet<u32> = self.feasible.iter().map(|b| b.pos()).collect();
        for bx in &self.feasible {
            for by in &self.feasible {
                let (x, y) = (bx.pos(), by.pos());
                let diff = x ^ y;
                for e in bits(diff) {
                    let ok = bits(diff).any(|f| {
                        let flip = if f == e { 1 << e } else { 1 << e | 1 << f };
                        positives.contains(&(x ^ flip))
                    });
                    if !ok {
                        return Validation::BadExchange { from: *bx, towards: *by, element: e + 1 };
                    }
                }
            }
        }
        Validation::Valid
    }

    fn validate_polytope(&self) -> Validation {
        // Every e_B is a vertex of the cube, hence of P(D). A pair differing in at most
        // two coordinates is harmless whether or not it is an edge.
        for (i, a) in self.feasible.iter().enumerate() {
            for b in &self.feasible[i + 1..] {
                let support = (a.pos() ^ b.pos()).count_ones() as usize;
                if support > 2 && self.is_edge(a, b) {
                    return Validation::BadEdge { first: *a, second: *b, support };
                }
            }
        }
        Validation::Valid
    }

    /// Is `conv{e_a, e_b}` an edge of `P(D)`? True iff some functional `c` has
    /// `⟨c, e_a⟩ = ⟨c, e_b⟩ ≥ ⟨c, e_v⟩ + 1` for every other feasible `v`.
    pub fn is_edge(&self, a: &AdmissibleSet, b: &AdmissibleSet) -> bool {
        if self.shares_midpoint(a, b) {
            return false;
        }
        let to_q = |v: Vec<i64>| -> Vec<Rational> {
            v.into_iter().map(|x| Rational::from_integer(x.into())).collect()
        };
        let ea = a.indicator();
        let eb = b.indicator();
        let diff = |u: &[i64], w: &[i64]| -> Vec<i64> { u.iter().zip(w).map(|(x, y)| x - y).collect() };
        let mut constraints = vec![Constraint {
            coeffs: to_q(diff(&ea, &eb)),
            relation: Relation::Eq,
            rhs: Rational::from_integer(0.into()),
        }];
        for v in &self.feasible {
            if v == a || v == b {
                continue;
            }
            constraints.push(Constraint {
                coeffs: to_q(diff(&ea, &v.indicator())),
                relation: Relation::Ge,
                rhs: Rational::from_integer(1.into()),
            });
        }
        lp::is_feasible(self.n, &constraints)
    }

    /// Some other pair `c, d` with `e_c + e_d = e_a + e_b`.
    fn shares_midpoint(&self, a: &AdmissibleSet, b: &AdmissibleSet) -> bool {
        // Coordinates where a and b agree are fixed; elsewhere c and d split the
        // disagreement, so d is determined by c.
        let agree = !(a.pos() ^ b.pos()) & full_mask(self.n);
        let split = a.pos() ^ b.pos();
        self.feasible.iter().any(|c| {
            if c == a || c == b || (c.pos() ^ a.pos()) & agree != 0 {
                return false;
            }
            let d = AdmissibleSet::transversal(self.n, (c.pos() & agree) | (!c.pos() & split));
            d != *a && d != *b && self.is_feasible(&d)
        })
    }

    /// All `|B ∩ [n]|` share one parity.
    pub fn is_even(&self) -> bool {
        let p = self.feasible[0].pos().count_ones() % 2;
        self.feasible.iter().all(|b| b.pos().count_ones() % 2 == p)
    }

    /// `g_D(S) = max_B (|S ∩ B| − |S̄ ∩ B|)`.
    pub fn g(&self, s: &AdmissibleSet) -> i64 {
        let size = s.len() as i64;
        self.feasible.iter().map(|b| 2 * s.intersection_len(b) as i64 - size).max().unwrap()
    }

    pub fn rank(&self, s: &AdmissibleSet) -> Result<Rank> {
        if s.ground_size() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: s.ground_size() });
        }
        let g = self.g(s);
        Ok(Rank { g, h: (g + s.len() as i64) / 2 })
    }

    pub fn rank_table(&self) -> Result<RankTable> {
        check_guard(self.n)?;
        Ok(RankTable::from_fn(self.n, |s| self.g(s)))
    }

    /// `h_D = (g_D + |S|) / 2` over all admissible sets.
    pub fn h_table(&self) -> Result<RankTable> {
        check_guard(self.n)?;
        Ok(RankTable::from_fn(self.n, |s| (self.g(s) + s.len() as i64) / 2))
    }

    /// Loops (in no feasible set positively) and coloops (in every one), 1-based.
    pub fn loops_coloops(&self) -> (Vec<usize>, Vec<usize>) {
        let (l, c) = self.loop_coloop_masks();
        (bits(l).map(|b| b + 1).collect(), bits(c).map(|b| b + 1).collect())
    }

    fn loop_coloop_masks(&self) -> (u32, u32) {
        let any = self.feasible.iter().fold(0, |acc, b| acc | b.pos());
        let all = self.feasible.iter().fold(full_mask(self.n), |acc, b| acc & b.pos());
        (full_mask(self.n) & !any, all)
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.loop_coloop_masks().0 & (1 << (i - 1)) != 0
    }

    pub fn is_coloop(&self, i: usize) -> bool {
        self.loop_coloop_masks().1 & (1 << (i - 1)) != 0
    }

    /// `D/A ∖ B` projected away from `P`, on the surviving indices renumbered in order.
    ///
    /// Contracting a loop or deleting a coloop is the projection at that index.
    pub fn minor(&self, contract: &[usize], delete: &[usize], project: &[usize]) -> Result<Self> {
        let mut used = 0u32;
        for &i in contract.iter().chain(delete).chain(project) {
            if i == 0 || i > self.n {
                return Err(Error::OutOfRange { element: i as i64, n: self.n });
            }
            let bit = 1u32 << (i - 1);
            if used & bit != 0 {
                return Err(Error::OverlappingMinor(i));
            }
            used |= bit;
        }
        let mut family = self.feasible.clone();
        let step = |family: &mut Vec<AdmissibleSet>, i: usize, keep_pos: Option<bool>| {
            let bit = 1u32 << (i - 1);
            if let Some(positive) = keep_pos {
                let present = |b: &AdmissibleSet| if positive { b.pos() & bit != 0 } else { b.neg() & bit != 0 };
                if family.iter().any(present) {
                    family.retain(present);
                }
            }
            for b in family.iter_mut() {
                *b = b.strip(bit);
            }
            family.sort_unstable();
            family.dedup();
        };
        for &i in contract {
            step(&mut family, i, Some(true));
        }
        for &i in delete {
            step(&mut family, i, Some(false));
        }
        for &i in project {
            step(&mut family, i, None);
        }
        let keep = full_mask(self.n) & !used;
        Self::new(keep.count_ones() as usize, family.iter().map(|b| b.compact(keep)))
    }

    pub fn contract(&self, i: usize) -> Result<Self> {
        self.minor(&[i], &[], &[])
    }

    pub fn delete(&self, i: usize) -> Result<Self> {
        self.minor(&[], &[i], &[])
    }

    pub fn project(&self, i: usize) -> Result<Self> {
        self.minor(&[], &[], &[i])
    }

    /// `D1 × D2` on `n1 + n2` indices, the second factor shifted by `n1`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        if n > ground::MAX_GROUND {
            return Err(Error::GuardLimit { n, limit: ground::MAX_GROUND });
        }
        let mut family = Vec::with_capacity(self.feasible.len() * other.feasible.len());
        for a in &self.feasible {
            for b in &other.feasible {
                let a = a.shifted(n, 0)?;
                let b = b.shifted(n, self.n)?;
                family.push(AdmissibleSet::new(n, a.pos() | b.pos(), a.neg() | b.neg())?);
            }
        }
        Self::new(n, family)
    }

    /// The twist `w · D`.
    pub fn twist(&self, w: &SignedPermutation) -> Result<Self> {
        let family = self.feasible.iter().map(|b| w.apply(b)).collect::<Result<Vec<_>>>()?;
        Self::new(self.n, family)
    }

    /// Matroid on the window `S` (|S| = n) with bases the maximal intersections `S ∩ B`.
    pub fn upper_matroid(&self, window: &AdmissibleSet) -> Result<Matroid> {
        if window.ground_size() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: window.ground_size() });
        }
        if window.len() != self.n {
            return Err(Error::WrongSetSize { expected: self.n, found: window.len() });
        }
        let r = self.feasible.iter().map(|b| window.intersection_len(b)).max().unwrap();
        let bases = self
            .feasible
            .iter()
            .filter(|b| window.intersection_len(b) == r)
            .map(|b| {
                let common = AdmissibleSet::new(self.n, b.pos() & window.pos(), b.neg() & window.neg())
                    .expect("intersection of admissible sets");
                Matroid::signed_mask(self.n, &common)
            });
        Matroid::new(Ground::Window(*window), bases.collect())
    }

    /// Subsets of feasible sets, in canonical order.
    pub fn independents(&self) -> Result<Vec<AdmissibleSet>> {
        check_guard(self.n)?;
        let mut seen = vec![false; 3usize.pow(self.n as u32)];
        let mut out = Vec::new();
        for b in &self.feasible {
            for s in b.subsets() {
                let code = s.ternary_code();
                if !seen[code] {
                    seen[code] = true;
                    out.push(s);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn is_independent(&self, s: &AdmissibleSet) -> bool {
        self.feasible.iter().any(|b| s.is_subset(b))
    }

    /// Admissible sets whose indicator lies in `½(P(D) + □)`, i.e. satisfies
    /// `⟨e_T, e_S⟩ ≤ h_D(T)` for every nonempty `T`.
    pub fn lattice_points(&self) -> Result<Vec<AdmissibleSet>> {
        let h = self.h_table()?;
        let all = ground::enumerate_admissible(self.n)?;
        Ok(all
            .iter()
            .filter(|s| all.iter().filter(|t| !t.is_empty()).all(|t| t.pairing(s) <= h.get(t)))
            .copied()
            .collect())
    }

    /// Lattice points of `½(P(D) + □)` coincide with the independent sets.
    pub fn lattice_point_test(&self) -> Result<bool> {
        Ok(self.lattice_points()? == self.independents()?)
    }
}

impl fmt::Debug for DeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DeltaMatroid(n={}, {:?})", self.n, self.feasible)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dex() -> DeltaMatroid {
        DeltaMatroid::from_signed(3, &[&[1, -2, -3], &[-1, 2, -3], &[-1, -2, 3]]).unwrap()
    }
    fn dco() -> DeltaMatroid {
        DeltaMatroid::from_signed(1, &[&[1]]).unwrap()
    }
    fn dloop() -> DeltaMatroid {
        DeltaMatroid::from_signed(1, &[&[-1]]).unwrap()
    }
    fn dfree1() -> DeltaMatroid {
        DeltaMatroid::from_signed(1, &[&[1], &[-1]]).unwrap()
    }
    fn set(n: usize, e: &[i64]) -> AdmissibleSet {
        AdmissibleSet::from_signed(n, e).unwrap()
    }

    #[test]
    fn construction_rejects_bad_families() {
        assert_eq!(DeltaMatroid::new(2, Vec::new()), Err(Error::EmptyFamily));
        assert!(matches!(
            DeltaMatroid::from_signed(2, &[&[1]]),
            Err(Error::WrongSetSize { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn validate_examples() {
        for method in [ValidationMethod::Exchange, ValidationMethod::Polytope] {
            let single = DeltaMatroid::from_signed(2, &[&[1, -2]]).unwrap();
            assert!(single.validate(method).unwrap().is_valid());
            assert!(dex().validate(method).unwrap().is_valid());
            let bad = DeltaMatroid::from_signed(3, &[&[1, 2, 3], &[-1, -2, -3]]).unwrap();
            assert!(!bad.validate(method).unwrap().is_valid());
        }
        let bad = DeltaMatroid::from_signed(3, &[&[1, 2, 3], &[-1, -2, -3]]).unwrap();
        assert_eq!(
            bad.validate(ValidationMethod::Polytope).unwrap().to_string(),
            "FAIL: edge direction support 3 between {1 2 3} and {-1 -2 -3}"
        );
    }

    #[test]
    fn evenness() {
        assert!(dex().is_even());
        assert!(!dfree1().is_even());
        assert!(dco().is_even());
    }

    #[test]
    fn rank_examples() {
        let d = dex();
        assert_eq!(d.rank(&AdmissibleSet::empty(3)).unwrap(), Rank { g: 0, h: 0 });
        assert_eq!(d.rank(&set(3, &[1, 2])).unwrap(), Rank { g: 0, h: 1 });
        assert_eq!(d.rank(&set(3, &[1, 2, 3])).unwrap(), Rank { g: -1, h: 1 });
        assert!(d.rank(&set(2, &[1])).is_err());
    }

    #[test]
    fn rank_table_examples() {
        assert_eq!(dco().rank_table().unwrap().canonical_values(), vec![0, 1, -1]);
        assert_eq!(dfree1().rank_table().unwrap().canonical_values(), vec![0, 1, 1]);
        let t = dex().rank_table().unwrap();
        assert_eq!(t.len(), 27);
        let top: Vec<_> = t.iter().filter(|(s, v)| s.len() == 3 && *v == 3).map(|(s, _)| s).collect();
        assert_eq!(top, dex().feasible().to_vec());
    }

    #[test]
    fn minor_examples() {
        let d = dex();
        assert_eq!(d.minor(&[1], &[], &[]).unwrap(), DeltaMatroid::from_signed(2, &[&[-1, -2]]).unwrap());
        assert_eq!(
            d.minor(&[], &[1], &[]).unwrap(),
            DeltaMatroid::from_signed(2, &[&[1, -2], &[-1, 2]]).unwrap()
        );
        assert_eq!(
            d.minor(&[], &[], &[1]).unwrap(),
            DeltaMatroid::from_signed(2, &[&[-1, -2], &[1, -2], &[-1, 2]]).unwrap()
        );
        assert_eq!(d.minor(&[1], &[1], &[]), Err(Error::OverlappingMinor(1)));
        assert!(d.minor(&[4], &[], &[]).is_err());
    }

    #[test]
    fn minor_at_loop_or_coloop_is_projection() {
        assert_eq!(dco().delete(1).unwrap(), dco().project(1).unwrap());
        assert_eq!(dloop().contract(1).unwrap(), dloop().project(1).unwrap());
        let empty = dco().contract(1).unwrap();
        assert_eq!(empty.ground_size(), 0);
        assert_eq!(empty.feasible(), &[AdmissibleSet::empty(0)]);
    }

    #[test]
    fn loops_and_coloops() {
        assert_eq!(dco().loops_coloops(), (vec![], vec![1]));
        assert_eq!(dloop().loops_coloops(), (vec![1], vec![]));
        assert_eq!(dex().loops_coloops(), (vec![], vec![]));
    }

    #[test]
    fn products() {
        assert_eq!(dco().product(&dco()).unwrap(), DeltaMatroid::from_signed(2, &[&[1, 2]]).unwrap());
        assert_eq!(dco().product(&dloop()).unwrap(), DeltaMatroid::from_signed(2, &[&[1, -2]]).unwrap());
        assert_eq!(dfree1().product(&dfree1()).unwrap(), DeltaMatroid::free(2).unwrap());
    }

    #[test]
    fn twists() {
        assert_eq!(dex().twist(&SignedPermutation::identity(3)).unwrap(), dex());
        assert_eq!(dco().twist(&SignedPermutation::bar_on(1, 1)).unwrap(), dloop());
        let t = dex().twist(&SignedPermutation::bar_swap(3)).unwrap();
        assert_eq!(t.g(&set(3, &[-1, -2])), 0);
    }

    #[test]
    fn upper_matroids() {
        let m = dex().upper_matroid(&set(3, &[1, 2, 3])).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.bases().len(), 3);
        let m = dco().upper_matroid(&set(1, &[1])).unwrap();
        assert_eq!((m.rank(), m.bases().len()), (1, 1));
        let m = dco().upper_matroid(&set(1, &[-1])).unwrap();
        assert_eq!((m.rank(), m.bases().len()), (0, 1));
        assert!(dco().upper_matroid(&AdmissibleSet::empty(1)).is_err());
    }

    #[test]
    fn independent_sets() {
        assert_eq!(dco().independents().unwrap(), vec![AdmissibleSet::empty(1), set(1, &[1])]);
        let ind = dex().independents().unwrap();
        assert_eq!(ind.len(), 19);
        assert!(!ind.contains(&set(3, &[1, 2])));
        for s in crate::ground::enumerate_admissible(3).unwrap() {
            assert_eq!(ind.contains(&s), dex().g(&s) == s.len() as i64);
        }
    }

    #[test]
    fn lattice_points_match_independents() {
        assert!(dfree1().lattice_point_test().unwrap());
        assert!(dex().lattice_point_test().unwrap());
        assert!(dco().lattice_point_test().unwrap());
        assert_eq!(dco().lattice_points().unwrap().len(), 2);
    }
}
