//! The signed ground set `[n, n̄]`, admissible subsets and signed permutations.
//!
//! An admissible set is stored as two disjoint bitmasks over `[n]`: `pos` holds the
//! unbarred elements and `neg` the barred ones. Bit `i - 1` stands for index `i`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use crate::error::{Error, Result};

/// Largest ground size representable by the bitmask encoding.
pub const MAX_GROUND: usize = 20;

/// Guard limit applied to enumeration when nothing else is configured.
pub const DEFAULT_GUARD_LIMIT: usize = 16;

static GUARD_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_GUARD_LIMIT);

/// Current guard limit for operations that enumerate all `3^n` admissible sets.
pub fn guard_limit() -> usize {
    GUARD_LIMIT.load(AtomicOrdering::Relaxed)
}

/// Overrides the guard limit. Values above [`MAX_GROUND`] are clamped.
pub fn set_guard_limit(limit: usize) {
    GUARD_LIMIT.store(limit.min(MAX_GROUND), AtomicOrdering::Relaxed);
}

pub fn check_guard(n: usize) -> Result<()> {
    let limit = guard_limit();
    if n > limit {
        return Err(Error::GuardLimit { n, limit });
    }
    Ok(())
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Lexicographic comparison of two subsets of `[n]` viewed as increasing lists.
fn lex_cmp(a: u64, b: u64) -> Ordering {
    let (mut a, mut b) = (a, b);
    loop {
        match (a, b) {
            (0, 0) => return Ordering::Equal,
            (0, _) => return Ordering::Less,
            (_, 0) => return Ordering::Greater,
            _ => {
                let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
                if x != y {
                    return x.cmp(&y);
                }
                a &= a - 1;
                b &= b - 1;
            }
        }
    }
}

/// An admissible subset of `[n, n̄]`: at most one of `i`, `ī` for every index.
///
/// Ordering is the canonical one used for every listing and serialization:
/// ground size, then cardinality, then the positive part as an increasing list,
/// then the negative part.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdmissibleSet {
    n: u8,
    pos: u32,
    neg: u32,
}

impl AdmissibleSet {
    pub fn new(n: usize, pos: u32, neg: u32) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GuardLimit { n, limit: MAX_GROUND });
        }
        let full = full_mask(n);
        if let Some(b) = bits((pos | neg) & !full).next() {
            return Err(Error::OutOfRange { element: b as i64 + 1, n });
        }
        if pos & neg != 0 {
            return Err(Error::Inadmissible((pos & neg).trailing_zeros() as usize + 1));
        }
        Ok(Self { n: n as u8, pos, neg })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, 0, 0).expect("ground size within MAX_GROUND")
    }

    /// Builds a set from signed 1-based elements, `-i` meaning `ī`.
    pub fn from_signed(n: usize, elements: &[i64]) -> Result<Self> {
        let (mut pos, mut neg) = (0u32, 0u32);
        for &e in elements {
            let i = e.unsigned_abs() as usize;
            if e == 0 || i > n {
                return Err(Error::OutOfRange { element: e, n });
            }
            let bit = 1u32 << (i - 1);
            if (pos | neg) & bit != 0 {
                if (e > 0 && neg & bit != 0) || (e < 0 && pos & bit != 0) {
                    return Err(Error::Inadmissible(i));
                }
                continue;
            }
            if e > 0 {
                pos |= bit;
            } else {
                neg |= bit;
            }
        }
        Self::new(n, pos, neg)
    }

    /// The size-`n` set taking `i` for `i ∈ positives` and `ī` otherwise.
    pub fn transversal(n: usize, positives: u32) -> Self {
        let full = full_mask(n);
        Self::new(n, positives & full, !positives & full).expect("transversal is admissible")
    }

    pub fn ground_size(&self) -> usize {
        self.n as usize
    }

    /// Elements taken unbarred (`S⁺`) as a bitmask.
    pub fn pos(&self) -> u32 {
        self.pos
    }

    /// Elements taken barred (`S⁻`) as a bitmask.
    pub fn neg(&self) -> u32 {
        self.neg
    }

    /// Indices touched by the set, `pos ∪ neg`.
    pub fn support(&self) -> u32 {
        self.pos | self.neg
    }

    /// Indices the set leaves untouched.
    pub fn untouched(&self) -> u32 {
        full_mask(self.ground_size()) & !self.support()
    }

    pub fn len(&self) -> usize {
        (self.pos | self.neg).count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.support() == 0
    }

    pub fn bar(&self) -> Self {
        Self { n: self.n, pos: self.neg, neg: self.pos }
    }

    /// The signed indicator vector `e_S`.
    pub fn indicator(&self) -> Vec<i64> {
        (0..self.ground_size())
            .map(|i| {
                let bit = 1u32 << i;
                if self.pos & bit != 0 {
                    1
                } else if self.neg & bit != 0 {
                    -1
                } else {
                    0
                }
            })
            .collect()
    }

    /// Signed 1-based elements in increasing index order.
    pub fn signed(&self) -> Vec<i64> {
        bits(self.support())
            .map(|b| if self.pos & (1 << b) != 0 { b as i64 + 1 } else { -(b as i64 + 1) })
            .collect()
    }

    pub fn contains(&self, element: i64) -> bool {
        let i = element.unsigned_abs() as usize;
        if element == 0 || i > self.ground_size() {
            return false;
        }
        let bit = 1u32 << (i - 1);
        if element > 0 {
            self.pos & bit != 0
        } else {
            self.neg & bit != 0
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.pos & !other.pos == 0 && self.neg & !other.neg == 0
    }

    /// `|S ∩ T|`.
    pub fn intersection_len(&self, other: &Self) -> usize {
        ((self.pos & other.pos) | (self.neg & other.neg)).count_ones() as usize
    }

    /// `⟨e_S, e_T⟩ = |S ∩ T| − |S ∩ T̄|`.
    pub fn pairing(&self, other: &Self) -> i64 {
        let agree = ((self.pos & other.pos) | (self.neg & other.neg)).count_ones() as i64;
        let clash = ((self.pos & other.neg) | (self.neg & other.pos)).count_ones() as i64;
        agree - clash
    }

    /// Removes both `i` and `ī` for every index in `mask`.
    pub fn strip(&self, mask: u32) -> Self {
        Self { n: self.n, pos: self.pos & !mask, neg: self.neg & !mask }
    }

    /// Flips `i ↔ ī` for every index in `mask`: `S Δ {i, ī}` on the touched indices.
    pub fn flip(&self, mask: u32) -> Self {
        let m = mask & self.support();
        Self { n: self.n, pos: (self.pos & !m) | (self.neg & m), neg: (self.neg & !m) | (self.pos & m) }
    }

    /// Adds the signed element, failing if its partner is already present.
    pub fn with(&self, element: i64) -> Result<Self> {
        let mut s = self.signed();
        s.push(element);
        Self::from_signed(self.ground_size(), &s)
    }

    /// Reinterprets the set over a larger ground, shifting every index by `offset`.
    pub fn shifted(&self, n: usize, offset: usize) -> Result<Self> {
        Self::new(n, self.pos << offset, self.neg << offset)
    }

    /// Renumbers the indices kept in `keep` (a mask over the current ground)
    /// onto `1..=|keep|`, dropping everything else.
    pub fn compact(&self, keep: u32) -> Self {
        let (mut pos, mut neg) = (0u32, 0u32);
        for (k, b) in bits(keep).enumerate() {
            if self.pos & (1 << b) != 0 {
                pos |= 1 << k;
            }
            if self.neg & (1 << b) != 0 {
                neg |= 1 << k;
            }
        }
        Self { n: keep.count_ones() as u8, pos, neg }
    }

    /// Base-3 code: digit `i` is 0 (untouched), 1 (`i`) or 2 (`ī`).
    pub fn ternary_code(&self) -> usize {
        let mut code = 0usize;
        for i in (0..self.ground_size()).rev() {
            let bit = 1u32 << i;
            let d = if self.pos & bit != 0 {
                1
            } else if self.neg & bit != 0 {
                2
            } else {
                0
            };
            code = code * 3 + d;
        }
        code
    }

    pub fn from_ternary_code(n: usize, mut code: usize) -> Self {
        let (mut pos, mut neg) = (0u32, 0u32);
        for i in 0..n {
            match code % 3 {
                1 => pos |= 1 << i,
                2 => neg |= 1 << i,
                _ => {}
            }
            code /= 3;
        }
        Self { n: n as u8, pos, neg }
    }

    /// All subsets of this set, in no particular order.
    pub fn subsets(&self) -> impl Iterator<Item = AdmissibleSet> + '_ {
        let sup = self.support();
        let mut sub = sup;
        let mut done = false;
        core::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & sup;
            }
            Some(Self { n: self.n, pos: self.pos & cur, neg: self.neg & cur })
        })
    }
}

impl AdmissibleSet {
    /// Elements ordered `1 < … < n < 1̄ < … < n̄`.
    fn element_mask(&self) -> u64 {
        self.pos as u64 | (self.neg as u64) << self.n
    }
}

impl Ord for AdmissibleSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.len().cmp(&other.len()))
            .then_with(|| lex_cmp(self.element_mask(), other.element_mask()))
    }
}

impl PartialOrd for AdmissibleSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.signed().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// All `3^n` admissible sets in canonical order.
pub fn enumerate_admissible(n: usize) -> Result<Vec<AdmissibleSet>> {
    check_guard(n)?;
    let total = 3usize.pow(n as u32);
    let mut all: Vec<_> = (0..total).map(|c| AdmissibleSet::from_ternary_code(n, c)).collect();
    all.sort_unstable();
    Ok(all)
}

/// All `2^n` admissible sets of size `n`, in canonical order.
pub fn enumerate_transversals(n: usize) -> Result<Vec<AdmissibleSet>> {
    check_guard(n)?;
    let mut all: Vec<_> = (0..(1u32 << n)).map(|p| AdmissibleSet::transversal(n, p)).collect();
    all.sort_unstable();
    Ok(all)
}

/// Meet `S ∩ T` and join `S ⊔ T = {a ∈ S ∪ T : ā ∉ S ∪ T}`.
pub fn combine(s: &AdmissibleSet, t: &AdmissibleSet) -> Result<(AdmissibleSet, AdmissibleSet)> {
    if s.n != t.n {
        return Err(Error::SizeMismatch { left: s.ground_size(), right: t.ground_size() });
    }
    Ok((meet(s, t), join(s, t)))
}

pub(crate) fn meet(s: &AdmissibleSet, t: &AdmissibleSet) -> AdmissibleSet {
    AdmissibleSet { n: s.n, pos: s.pos & t.pos, neg: s.neg & t.neg }
}

pub(crate) fn join(s: &AdmissibleSet, t: &AdmissibleSet) -> AdmissibleSet {
    let (pos, neg) = (s.pos | t.pos, s.neg | t.neg);
    let conflict = pos & neg;
    AdmissibleSet { n: s.n, pos: pos & !conflict, neg: neg & !conflict }
}

/// A signed permutation: a permutation of `[n, n̄]` with `w(ī) = w(i)‾`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    image: Vec<i64>,
}

impl SignedPermutation {
    /// `image[i - 1]` is the signed target of `i`.
    pub fn new(image: Vec<i64>) -> Result<Self> {
        let n = image.len();
        let mut seen = 0u32;
        for &t in &image {
            let j = t.unsigned_abs() as usize;
            if t == 0 || j > n || seen & (1 << (j - 1)) != 0 {
                return Err(Error::NotAPermutation);
            }
            seen |= 1 << (j - 1);
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (1..=n as i64).collect() }
    }

    /// The global bar swap `i ↦ ī`.
    pub fn bar_swap(n: usize) -> Self {
        Self { image: (1..=n as i64).map(|i| -i).collect() }
    }

    /// Swaps `i` and `ī` for the indices in `mask` only.
    pub fn bar_on(n: usize, mask: u32) -> Self {
        Self {
            image: (1..=n as i64)
                .map(|i| if mask & (1 << (i - 1)) != 0 { -i } else { i })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[i64] {
        &self.image
    }

    /// Image of a signed element.
    pub fn map(&self, element: i64) -> i64 {
        let t = self.image[element.unsigned_abs() as usize - 1];
        if element > 0 {
            t
        } else {
            -t
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = alloc::vec![0i64; self.len()];
        for (i, &t) in self.image.iter().enumerate() {
            let j = t.unsigned_abs() as usize;
            image[j - 1] = if t > 0 { i as i64 + 1 } else { -(i as i64 + 1) };
        }
        Self { image }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { left: self.len(), right: other.len() });
        }
        Ok(Self { image: other.image.iter().map(|&t| self.map(t)).collect() })
    }

    pub fn apply(&self, s: &AdmissibleSet) -> Result<AdmissibleSet> {
        if s.ground_size() != self.len() {
            return Err(Error::SizeMismatch { left: self.len(), right: s.ground_size() });
        }
        let (mut pos, mut neg) = (0u32, 0u32);
        for e in s.signed() {
            let t = self.map(e);
            let bit = 1u32 << (t.unsigned_abs() - 1);
            if t > 0 {
                pos |= bit;
            } else {
                neg |= bit;
            }
        }
        AdmissibleSet::new(self.len(), pos, neg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(n: usize, e: &[i64]) -> AdmissibleSet {
        AdmissibleSet::from_signed(n, e).unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_admissible(0).unwrap(), vec![AdmissibleSet::empty(0)]);
        assert_eq!(
            enumerate_admissible(1).unwrap(),
            vec![AdmissibleSet::empty(1), set(1, &[1]), set(1, &[-1])]
        );
        let all = enumerate_admissible(3).unwrap();
        assert_eq!(all.len(), 27);
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 27);
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let all = enumerate_admissible(2).unwrap();
        let shown: Vec<_> = all.iter().map(|s| s.signed()).collect();
        assert_eq!(
            shown,
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![-1],
                vec![-2],
                vec![1, 2],
                vec![1, -2],
                vec![-1, 2],
                vec![-1, -2],
            ]
        );
    }

    #[test]
    fn guard_limit_is_enforced() {
        assert!(matches!(enumerate_admissible(17), Err(Error::GuardLimit { n: 17, .. })));
    }

    #[test]
    fn combine_examples() {
        let (m, j) = combine(&set(3, &[1, 2]), &set(3, &[-1, 3])).unwrap();
        assert_eq!((m, j), (AdmissibleSet::empty(3), set(3, &[2, 3])));
        let s = set(3, &[1]);
        assert_eq!(combine(&s, &s).unwrap(), (s, s));
        let (m, j) = combine(&set(2, &[1, -2]), &set(2, &[1, 2])).unwrap();
        assert_eq!((m, j), (set(2, &[1]), set(2, &[1])));
        assert!(combine(&set(2, &[1]), &set(3, &[1])).is_err());
    }

    #[test]
    fn inadmissible_rejected() {
        assert_eq!(AdmissibleSet::from_signed(1, &[1, -1]), Err(Error::Inadmissible(1)));
        assert!(AdmissibleSet::from_signed(2, &[3]).is_err());
        assert!(AdmissibleSet::from_signed(2, &[0]).is_err());
    }

    #[test]
    fn permutation_examples() {
        let s = set(2, &[1, -2]);
        assert_eq!(SignedPermutation::identity(2).apply(&s).unwrap(), s);
        assert_eq!(SignedPermutation::bar_swap(2).apply(&s).unwrap(), set(2, &[-1, 2]));
        let w = SignedPermutation::new(vec![-2, 1]).unwrap();
        assert_eq!(w.apply(&set(2, &[1])).unwrap(), set(2, &[-2]));
        assert_eq!(w.inverse().apply(&w.apply(&s).unwrap()).unwrap(), s);
        assert!(SignedPermutation::new(vec![1, -1]).is_err());
    }

    #[test]
    fn bar_and_indicator() {
        let s = set(3, &[1, -3]);
        assert_eq!(s.bar(), set(3, &[-1, 3]));
        assert_eq!(s.indicator(), vec![1, 0, -1]);
        assert_eq!(s.bar().indicator(), vec![-1, 0, 1]);
        assert_eq!(s.to_string(), "1 -3");
    }

    #[test]
    fn ternary_round_trip() {
        for s in enumerate_admissible(4).unwrap() {
            assert_eq!(AdmissibleSet::from_ternary_code(4, s.ternary_code()), s);
        }
    }

    #[test]
    fn subsets_count() {
        let s = set(3, &[1, -2, 3]);
        assert_eq!(s.subsets().count(), 8);
        assert!(s.subsets().all(|t| t.is_subset(&s)));
    }
}
