//! Matroids given by explicit bases, on a plain ground set `[m]` or on the signed
//! ground set `[n, n̄]`, and the delta-matroid constructions built from them.
//!
//! Subsets are `u64` masks. On a plain ground, bit `i - 1` is element `i`. On a
//! signed ground, bit `i - 1` is `i` and bit `n + i - 1` is `ī`, so inadmissible
//! subsets such as `{1, 1̄}` are representable.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::deltamatroid::DeltaMatroid;
use crate::error::{Error, Result};
use crate::ground::{self, check_guard, AdmissibleSet};
use crate::poly::MultiPoly;
use crate::rankfn::{pairing, Axiom, AxiomReport};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ground {
    Plain(usize),
    Signed(usize),
    /// The admissible set `S` itself, inside `[n, n̄]`.
    Window(AdmissibleSet),
}

impl Ground {
    /// Mask of all ground elements.
    pub fn mask(&self) -> u64 {
        match *self {
            Ground::Plain(m) => low_bits(m),
            Ground::Signed(n) => low_bits(2 * n),
            Ground::Window(s) => Matroid::signed_mask(s.ground_size(), &s),
        }
    }

    pub fn size(&self) -> usize {
        self.mask().count_ones() as usize
    }

    /// Signed label of a bit position.
    pub fn label(&self, bit: usize) -> i64 {
        match *self {
            Ground::Plain(_) => bit as i64 + 1,
            Ground::Signed(n) => signed_label(n, bit),
            Ground::Window(s) => signed_label(s.ground_size(), bit),
        }
    }

    /// Bit position of a (signed, 1-based) label.
    pub fn bit(&self, label: i64) -> Result<usize> {
        let n = match *self {
            Ground::Plain(m) => {
                if label < 1 || label as usize > m {
                    return Err(Error::OutOfRange { element: label, n: m });
                }
                return Ok(label as usize - 1);
            }
            Ground::Signed(n) => n,
            Ground::Window(s) => s.ground_size(),
        };
        let i = label.unsigned_abs() as usize;
        if label == 0 || i > n {
            return Err(Error::OutOfRange { element: label, n });
        }
        let b = if label > 0 { i - 1 } else { n + i - 1 };
        if self.mask() & (1 << b) == 0 {
            return Err(Error::OutOfRange { element: label, n });
        }
        Ok(b)
    }
}

fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

fn signed_label(n: usize, bit: usize) -> i64 {
    if bit < n {
        bit as i64 + 1
    } else {
        -((bit - n) as i64 + 1)
    }
}

fn bits64(mask: u64) -> impl Iterator<Item = usize> {
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

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    ground: Ground,
    bases: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FromMatroid {
    Bases,
    Independents,
}

impl Matroid {
    pub fn new(ground: Ground, bases: Vec<u64>) -> Result<Self> {
        if ground.size() > 32 {
            return Err(Error::GuardLimit { n: ground.size(), limit: 32 });
        }
        let mut bases = bases;
        if bases.is_empty() {
            return Err(Error::EmptyBasisFamily);
        }
        let mask = ground.mask();
        for &b in &bases {
            if b & !mask != 0 {
                let bit = (b & !mask).trailing_zeros() as usize;
                return Err(Error::OutOfRange { element: ground.label(bit), n: ground.size() });
            }
        }
        let r = bases[0].count_ones();
        if bases.iter().any(|b| b.count_ones() != r) {
            return Err(Error::UnequalBases);
        }
        bases.sort_unstable_by(|a, b| cmp_subsets(*a, *b));
        bases.dedup();
        Ok(Self { ground, bases })
    }

    /// Bases given as label lists (signed labels on a signed ground).
    pub fn from_labels(ground: Ground, bases: &[&[i64]]) -> Result<Self> {
        let masks = bases
            .iter()
            .map(|b| b.iter().try_fold(0u64, |acc, &l| Ok(acc | 1 << ground.bit(l)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, masks)
    }

    /// Uniform matroid `U_{r,m}` on `[m]`.
    pub fn uniform(r: usize, m: usize) -> Result<Self> {
        let bases = (0..1u64 << m).filter(|s| s.count_ones() as usize == r).collect();
        Self::new(Ground::Plain(m), bases)
    }

    /// Rank-`n` matroid on `[n, n̄]` whose bases pick one element of each pair.
    pub fn pair_partition(n: usize) -> Result<Self> {
        let bases = ground::enumerate_transversals(n)?
            .iter()
            .map(|t| Self::signed_mask(n, t))
            .collect();
        Self::new(Ground::Signed(n), bases)
    }

    /// The signed-ground mask of an admissible set.
    pub fn signed_mask(n: usize, s: &AdmissibleSet) -> u64 {
        s.pos() as u64 | (s.neg() as u64) << n
    }

    pub fn ground(&self) -> Ground {
        self.ground
    }

    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    pub fn rank(&self) -> usize {
        self.bases[0].count_ones() as usize
    }

    pub fn labels(&self, mask: u64) -> Vec<i64> {
        let mut v: Vec<i64> = bits64(mask).map(|b| self.ground.label(b)).collect();
        v.sort_unstable_by_key(|l| (l.unsigned_abs(), *l < 0));
        v
    }

    /// `rk_M(A) = max |A ∩ B|`.
    pub fn rank_of(&self, a: u64) -> Result<usize> {
        if a & !self.ground.mask() != 0 {
            let bit = (a & !self.ground.mask()).trailing_zeros() as usize;
            return Err(Error::OutOfRange { element: self.ground.label(bit), n: self.ground.size() });
        }
        Ok(self.rank_unchecked(a))
    }

    pub(crate) fn rank_unchecked(&self, a: u64) -> usize {
        self.bases.iter().map(|b| (a & b).count_ones() as usize).max().unwrap()
    }

    /// Rank of a set given by labels.
    pub fn rank_of_labels(&self, labels: &[i64]) -> Result<usize> {
        let mask = labels.iter().try_fold(0u64, |acc, &l| Ok::<_, Error>(acc | 1 << self.ground.bit(l)?))?;
        self.rank_of(mask)
    }

    pub fn is_basis(&self, b: u64) -> bool {
        self.bases.binary_search_by(|x| cmp_subsets(*x, b)).is_ok()
    }

    pub fn is_independent(&self, s: u64) -> bool {
        self.bases.iter().any(|b| s & !b == 0)
    }

    /// Basis exchange: for `B1, B2` and `x ∈ B1 ∖ B2` some `y ∈ B2 ∖ B1` has
    /// `B1 − x + y` a basis.
    pub fn validate(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let lookup: BTreeSet<u64> = self.bases.iter().copied().collect();
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for x in bits64(b1 & !b2) {
                    let ok = bits64(b2 & !b1).any(|y| lookup.contains(&(b1 & !(1 << x) | 1 << y)));
                    if !ok {
                        report.push_note(
                            Axiom::BasisExchange,
                            Vec::new(),
                            0,
                            1,
                            format!(
                                "bases {:?} and {:?}, element {}",
                                self.labels(b1),
                                self.labels(b2),
                                self.ground.label(x)
                            ),
                        );
                        return report;
                    }
                }
            }
        }
        report
    }

    /// `R_M(u, v) = Σ_A u^{r − rk(A)} v^{|A| − rk(A)}`.
    pub fn rank_generating(&self) -> Result<MultiPoly> {
        check_guard(self.ground.size())?;
        let r = self.rank();
        let mut tally: alloc::collections::BTreeMap<(usize, usize), u64> = Default::default();
        for a in subsets_of(self.ground.mask()) {
            let rk = self.rank_unchecked(a);
            *tally.entry((r - rk, a.count_ones() as usize - rk)).or_default() += 1;
        }
        Ok(MultiPoly::from_uv_counts(tally))
    }
}

/// Size, then lexicographic on increasing bit lists.
fn cmp_subsets(a: u64, b: u64) -> core::cmp::Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let (mut a, mut b) = (a, b);
        loop {
            match (a, b) {
                (0, 0) => return core::cmp::Ordering::Equal,
                (0, _) => return core::cmp::Ordering::Less,
                (_, 0) => return core::cmp::Ordering::Greater,
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
    })
}

fn subsets_of(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = mask;
    let mut done = false;
    core::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & mask;
        }
        Some(cur)
    })
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bases: Vec<_> = self.bases.iter().map(|&b| self.labels(b)).collect();
        write!(f, "Matroid({:?}, bases {:?})", self.ground, bases)
    }
}

fn plain_n(m: &Matroid) -> Result<usize> {
    match m.ground {
        Ground::Plain(n) => Ok(n),
        _ => Err(Error::WrongGround("a plain ground set [n]")),
    }
}

fn require_valid(m: &Matroid) -> Result<()> {
    let report = m.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidMatroid(format!("{v}")));
    }
    Ok(())
}

/// Feasible sets `X ∪ ([n] ∖ X)‾` for `X` ranging over bases or independent sets.
pub fn dm_from_matroid(m: &Matroid, mode: FromMatroid) -> Result<DeltaMatroid> {
    let n = plain_n(m)?;
    require_valid(m)?;
    let xs: Vec<u64> = match mode {
        FromMatroid::Bases => m.bases.clone(),
        FromMatroid::Independents => {
            let mut all: BTreeSet<u64> = BTreeSet::new();
            for &b in &m.bases {
                all.extend(subsets_of(b));
            }
            all.into_iter().collect()
        }
    };
    DeltaMatroid::new(n, xs.into_iter().map(|x| AdmissibleSet::transversal(n, x as u32)))
}

/// Closed-form rank of the delta-matroid built from `m`.
///
/// Independents: `|S| + 2 rk(S⁺) − 2|S⁺|`.
/// Bases: `|S| − 2r + 2 rk(S⁺ ∪ V) − 2|S⁺| + 2 rk(S⁺)`, `V` the untouched indices.
pub fn closed_form_rank(m: &Matroid, s: &AdmissibleSet, mode: FromMatroid) -> Result<i64> {
    let n = plain_n(m)?;
    require_valid(m)?;
    if s.ground_size() != n {
        return Err(Error::SizeMismatch { left: n, right: s.ground_size() });
    }
    let size = s.len() as i64;
    let plus = s.pos() as u64;
    let rk_plus = m.rank_unchecked(plus) as i64;
    let n_plus = plus.count_ones() as i64;
    Ok(match mode {
        FromMatroid::Independents => size + 2 * rk_plus - 2 * n_plus,
        FromMatroid::Bases => {
            let r = m.rank() as i64;
            let rk_pv = m.rank_unchecked(plus | s.untouched() as u64) as i64;
            size - 2 * r + 2 * rk_pv - 2 * n_plus + 2 * rk_plus
        }
    })
}

/// Closed-form U-polynomial of the delta-matroid built from `m`.
///
/// Independents: `Σ_A (u+3)^{r−rk A} (2u+v+2)^{|A|−rk A} (u+1)^{n−r−|A|+rk A}`,
/// the cleared form of `(u+1)^{n−r} R_M(u+3, (2u+v+2)/(u+1))`.
/// Bases: `Σ_{T ⊆ S ⊆ [n]} u^{|S∖T|} v^{r − rk S + |T| − rk T}`.
pub fn closed_form_upoly(m: &Matroid, mode: FromMatroid) -> Result<MultiPoly> {
    let n = plain_n(m)?;
    require_valid(m)?;
    check_guard(n)?;
    let r = m.rank();
    let full = low_bits(n);
    match mode {
        FromMatroid::Independents => {
            let u = MultiPoly::var("u");
            let v = MultiPoly::var("v");
            let c = |k: i64| MultiPoly::constant(&["u", "v"], Rational::from_integer(k.into()));
            let a = &u + &c(3);
            let b = &(&(&u * &c(2)) + &v) + &c(2);
            let d = &u + &c(1);
            let mut total = MultiPoly::zero(&["u", "v"]);
            for sub in subsets_of(full) {
                let rk = m.rank_unchecked(sub);
                let size = sub.count_ones() as usize;
                let term = &(&a.pow(r - rk)? * &b.pow(size - rk)?) * &d.pow(n + rk - r - size)?;
                total = &total + &term;
            }
            Ok(total)
        }
        FromMatroid::Bases => {
            let mut tally: alloc::collections::BTreeMap<(usize, usize), u64> = Default::default();
            for s in subsets_of(full) {
                let rk_s = m.rank_unchecked(s);
                for t in subsets_of(s) {
                    let rk_t = m.rank_unchecked(t);
                    let ue = (s & !t).count_ones() as usize;
                    let ve = r - rk_s + t.count_ones() as usize - rk_t;
                    *tally.entry((ue, ve)).or_default() += 1;
                }
            }
            Ok(MultiPoly::from_uv_counts(tally))
        }
    }
}

/// `(x_1 − x_1̄, …, x_n − x_n̄)` for `x` listed as `(x_1, …, x_n, x_1̄, …, x_n̄)`.
pub fn env_project(x: &[Rational]) -> Result<Vec<Rational>> {
    if !x.len().is_multiple_of(2) {
        return Err(Error::Dimension { expected: x.len() + 1, found: x.len() });
    }
    let n = x.len() / 2;
    Ok((0..n).map(|i| &x[i] - &x[n + i]).collect())
}

/// Indicator vector `u_S` of a signed-ground subset, as a rational vector of length `2n`.
pub fn signed_indicator(n: usize, mask: u64) -> Vec<Rational> {
    (0..2 * n)
        .map(|b| Rational::from_integer(((mask >> b) & 1).into()))
        .collect()
}

/// Does `env(u_B)` satisfy every inequality `⟨e_S, x⟩ ≤ g_D(S)`?
fn env_image_in_polytope(d: &DeltaMatroid, g: &crate::rankfn::RankTable, mask: u64) -> Option<AdmissibleSet> {
    let n = d.ground_size();
    let image = env_project(&signed_indicator(n, mask)).expect("even length");
    g.iter()
        .filter(|(s, _)| !s.is_empty())
        .find(|(s, bound)| pairing(s, &image) > Rational::from_integer((*bound).into()))
        .map(|(s, _)| s)
}

/// Is `m` an enveloping matroid of `d` (`env(P(M)) = P(D)`)?
///
/// Checks that every feasible set is a basis and that every basis maps into
/// `P(D)`, then confirms that admissible independent sets of `m` are exactly the
/// independent sets of `d`.
pub fn enveloping_check(m: &Matroid, d: &DeltaMatroid) -> Result<AxiomReport> {
    let n = d.ground_size();
    match m.ground {
        Ground::Signed(k) if k == n => {}
        Ground::Signed(k) => return Err(Error::SizeMismatch { left: n, right: k }),
        _ => return Err(Error::WrongGround("the signed ground set [n, n̄]")),
    }
    if m.rank() != n {
        return Err(Error::MatroidRank { expected: n, found: m.rank() });
    }
    check_guard(n)?;
    let mut report = AxiomReport::default();
    for b in d.feasible() {
        if !m.is_basis(Matroid::signed_mask(n, b)) {
            report.push(Axiom::FeasibleIsBasis, vec![*b], 0, 1);
        }
    }
    let g = d.rank_table()?;
    for &b in &m.bases {
        if let Some(s) = env_image_in_polytope(d, &g, b) {
            report.push_note(Axiom::EnvelopeImage, vec![s], 0, 0, format!("basis {:?}", m.labels(b)));
        }
    }
    for s in ground::enumerate_admissible(n)? {
        let in_m = m.is_independent(Matroid::signed_mask(n, &s));
        if in_m != d.is_independent(&s) {
            report.push(Axiom::IndependenceCoincidence, vec![s], in_m as i64, d.is_independent(&s) as i64);
        }
    }
    Ok(report)
}

/// Largest ground size accepted by [`enveloping_search`].
pub const ENVELOPE_SEARCH_MAX_N: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnvelopeSearch {
    Found(Matroid),
    /// The search space was exhausted: no enveloping matroid exists.
    NoneExists,
    /// The node budget ran out first.
    Inconclusive,
}

/// Searches for an enveloping matroid of `d` among basis families
/// `𝓕(D) ⊆ 𝓑 ⊆ pool`, where `pool` holds the size-`n` subsets of `[n, n̄]` whose
/// `env` image lies in `P(D)`.
///
/// Iterative deepening on the number of bases added to `𝓕(D)`; each node branches
/// on the repairs of its first exchange violation, so the first hit is a smallest
/// envelope and is deterministic. `limit` bounds the number of visited nodes.
pub fn enveloping_search(d: &DeltaMatroid, limit: usize) -> Result<EnvelopeSearch> {
    let n = d.ground_size();
    if n > ENVELOPE_SEARCH_MAX_N {
        return Err(Error::GuardLimit { n, limit: ENVELOPE_SEARCH_MAX_N });
    }
    let g = d.rank_table()?;
    let required: Vec<u64> = d.feasible().iter().map(|b| Matroid::signed_mask(n, b)).collect();
    let mut pool: Vec<u64> = subsets_of(low_bits(2 * n))
        .filter(|s| s.count_ones() as usize == n)
        .filter(|&s| env_image_in_polytope(d, &g, s).is_none())
        .collect();
    pool.sort_unstable_by(|a, b| cmp_subsets(*a, *b));
    let optional = pool.len().saturating_sub(required.len());
    let mut budget = limit;
    for depth in 0..=optional {
        let mut family: BTreeSet<u64> = required.iter().copied().collect();
        match deepen(&mut family, &pool, depth, &mut budget) {
            Step::Found(bases) => {
                return Ok(EnvelopeSearch::Found(Matroid::new(Ground::Signed(n), bases)?));
            }
            Step::OutOfBudget => return Ok(EnvelopeSearch::Inconclusive),
            Step::Exhausted => {}
        }
    }
    Ok(EnvelopeSearch::NoneExists)
}

enum Step {
    Found(Vec<u64>),
    Exhausted,
    OutOfBudget,
}

fn first_exchange_gap(family: &BTreeSet<u64>) -> Option<(u64, u64, usize)> {
    for &b1 in family {
        for &b2 in family {
            for x in bits64(b1 & !b2) {
                if !bits64(b2 & !b1).any(|y| family.contains(&(b1 & !(1 << x) | 1 << y))) {
                    return Some((b1, b2, x));
                }
            }
        }
    }
    None
}

fn deepen(family: &mut BTreeSet<u64>, pool: &[u64], depth: usize, budget: &mut usize) -> Step {
    if *budget == 0 {
        return Step::OutOfBudget;
    }
    *budget -= 1;
    let Some((b1, b2, x)) = first_exchange_gap(family) else {
        return Step::Found(family.iter().copied().collect());
    };
    if depth == 0 {
        return Step::Exhausted;
    }
    let mut repairs: Vec<u64> = bits64(b2 & !b1)
        .map(|y| b1 & !(1 << x) | 1 << y)
        .filter(|c| pool.contains(c))
        .collect();
    repairs.sort_unstable_by(|a, b| cmp_subsets(*a, *b));
    for c in repairs {
        family.insert(c);
        let step = deepen(family, pool, depth - 1, budget);
        family.remove(&c);
        match step {
            Step::Exhausted => {}
            other => return other,
        }
    }
    Step::Exhausted
}

/// A symmetric matrix over GF(2), rows packed as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2SymMatrix {
    n: usize,
    rows: Vec<u32>,
}

impl Gf2SymMatrix {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let n = rows.len();
        if n > ground::MAX_GROUND {
            return Err(Error::GuardLimit { n, limit: ground::MAX_GROUND });
        }
        let mut packed = Vec::with_capacity(n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::Dimension { expected: n, found: row.len() });
            }
            packed.push(row.iter().enumerate().fold(0u32, |acc, (j, &v)| acc | ((v as u32 & 1) << j)));
        }
        Self::from_packed(n, packed)
    }

    pub fn from_packed(n: usize, rows: Vec<u32>) -> Result<Self> {
        for i in 0..n {
            for j in 0..n {
                if (rows[i] >> j) & 1 != (rows[j] >> i) & 1 {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(Self { n, rows })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        ((self.rows[i] >> j) & 1) as u8
    }

    pub fn packed_rows(&self) -> &[u32] {
        &self.rows
    }

    /// Is the principal submatrix on index mask `x` nonsingular? The empty
    /// submatrix counts as nonsingular.
    pub fn principal_nonsingular(&self, x: u32) -> bool {
        let mut rows: Vec<u32> = ground::bits(x).map(|i| self.rows[i] & x).collect();
        for (rank, col) in ground::bits(x).enumerate() {
            let bit = 1u32 << col;
            let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
                return false;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row & bit != 0 {
                    *row ^= pivot;
                }
            }
        }
        true
    }
}

/// Feasible sets `X ∪ ([n] ∖ X)‾` for every `X` with `A[X]` nonsingular.
pub fn dm_from_gf2(a: &Gf2SymMatrix) -> Result<DeltaMatroid> {
    check_guard(a.n)?;
    let family = (0..1u32 << a.n)
        .filter(|&x| a.principal_nonsingular(x))
        .map(|x| AdmissibleSet::transversal(a.n, x));
    DeltaMatroid::new(a.n, family)
}

/// Readable basis listing, e.g. `{1 -2} {-1 2}`.
pub fn describe_bases(m: &Matroid) -> String {
    let mut out = String::new();
    for (k, &b) in m.bases.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        out.push('{');
        for (j, l) in m.labels(b).iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&format!("{l}"));
        }
        out.push('}');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }
    fn set(n: usize, e: &[i64]) -> AdmissibleSet {
        AdmissibleSet::from_signed(n, e).unwrap()
    }
    fn four_basis() -> Matroid {
        Matroid::from_labels(Ground::Signed(2), &[&[1, -2], &[-1, 2], &[1, -1], &[2, -2]]).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(Matroid::uniform(1, 2).unwrap().validate().passed());
        let bad = Matroid::from_labels(Ground::Signed(2), &[&[1, -2], &[-1, 2]]).unwrap();
        assert!(bad.validate().has(Axiom::BasisExchange));
        assert!(four_basis().validate().passed());
        assert_eq!(Matroid::new(Ground::Plain(2), Vec::new()), Err(Error::EmptyBasisFamily));
        assert_eq!(Matroid::new(Ground::Plain(2), vec![0b1, 0b11]), Err(Error::UnequalBases));
    }

    #[test]
    fn rank_examples() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(u12.rank_of(0b11).unwrap(), 1);
        assert_eq!(u12.rank_of(0).unwrap(), 0);
        assert!(u12.rank_of(0b100).is_err());
        let pp = Matroid::pair_partition(2).unwrap();
        assert_eq!(pp.rank_of_labels(&[1, -1]).unwrap(), 1);
    }

    #[test]
    fn rank_generating_examples() {
        assert_eq!(Matroid::uniform(1, 1).unwrap().rank_generating().unwrap().to_string(), "u + 1");
        assert_eq!(Matroid::uniform(0, 1).unwrap().rank_generating().unwrap().to_string(), "v + 1");
        assert_eq!(Matroid::uniform(1, 2).unwrap().rank_generating().unwrap().to_string(), "u + v + 2");
    }

    #[test]
    fn constructions_from_matroids() {
        let u11 = Matroid::uniform(1, 1).unwrap();
        let dco = DeltaMatroid::from_signed(1, &[&[1]]).unwrap();
        let dfree = DeltaMatroid::from_signed(1, &[&[1], &[-1]]).unwrap();
        assert_eq!(dm_from_matroid(&u11, FromMatroid::Bases).unwrap(), dco);
        assert_eq!(dm_from_matroid(&u11, FromMatroid::Independents).unwrap(), dfree);
        assert_eq!(
            dm_from_matroid(&Matroid::uniform(1, 2).unwrap(), FromMatroid::Bases).unwrap(),
            DeltaMatroid::from_signed(2, &[&[1, -2], &[-1, 2]]).unwrap()
        );
        assert!(dm_from_matroid(&four_basis(), FromMatroid::Bases).is_err());
    }

    #[test]
    fn closed_form_ranks() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(closed_form_rank(&u12, &set(2, &[1, 2]), FromMatroid::Independents).unwrap(), 0);
        assert_eq!(closed_form_rank(&u12, &set(2, &[-1, -2]), FromMatroid::Bases).unwrap(), 0);
        assert_eq!(closed_form_rank(&u12, &AdmissibleSet::empty(2), FromMatroid::Independents).unwrap(), 0);
    }

    #[test]
    fn closed_form_upolys() {
        let u11 = Matroid::uniform(1, 1).unwrap();
        assert_eq!(closed_form_upoly(&u11, FromMatroid::Bases).unwrap().to_string(), "u + v + 1");
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(closed_form_upoly(&u12, FromMatroid::Bases).unwrap().to_string(), "u^2 + 4*u + 2*v + 2");
        // The independents formula as printed disagrees with the direct sum (u + 2).
        assert_eq!(closed_form_upoly(&u11, FromMatroid::Independents).unwrap().to_string(), "u + 4");
    }

    #[test]
    fn env_projection() {
        let x = signed_indicator(2, Matroid::signed_mask(2, &set(2, &[1, -2])));
        assert_eq!(env_project(&x).unwrap(), vec![q(1), q(-1)]);
        let x = signed_indicator(1, 0b11);
        assert_eq!(env_project(&x).unwrap(), vec![q(0)]);
        assert_eq!(env_project(&[q(0), q(0)]).unwrap(), vec![q(0)]);
        assert!(env_project(&[q(1)]).is_err());
    }

    #[test]
    fn envelope_checks() {
        for n in 1..=3 {
            let d = DeltaMatroid::free(n).unwrap();
            assert!(enveloping_check(&Matroid::pair_partition(n).unwrap(), &d).unwrap().passed());
        }
        let dco = DeltaMatroid::from_signed(1, &[&[1]]).unwrap();
        let u12 = Matroid::from_labels(Ground::Signed(1), &[&[1], &[-1]]).unwrap();
        let r = enveloping_check(&u12, &dco).unwrap();
        assert!(r.has(Axiom::EnvelopeImage));
        let d = dm_from_matroid(&Matroid::uniform(1, 2).unwrap(), FromMatroid::Bases).unwrap();
        assert!(enveloping_check(&four_basis(), &d).unwrap().passed());
        assert!(enveloping_check(&Matroid::uniform(1, 2).unwrap(), &dco).is_err());
    }

    #[test]
    fn envelope_search_examples() {
        let dfree = DeltaMatroid::from_signed(1, &[&[1], &[-1]]).unwrap();
        assert_eq!(
            enveloping_search(&dfree, 1000).unwrap(),
            EnvelopeSearch::Found(Matroid::pair_partition(1).unwrap())
        );
        let dco = DeltaMatroid::from_signed(1, &[&[1]]).unwrap();
        let EnvelopeSearch::Found(m) = enveloping_search(&dco, 1000).unwrap() else { panic!() };
        assert_eq!(m.bases(), &[0b01]);
        let d = dm_from_matroid(&Matroid::uniform(1, 2).unwrap(), FromMatroid::Bases).unwrap();
        let EnvelopeSearch::Found(m) = enveloping_search(&d, 10_000).unwrap() else { panic!() };
        assert!(enveloping_check(&m, &d).unwrap().passed());
        assert!(enveloping_search(&DeltaMatroid::free(4).unwrap(), 10).is_err());
    }

    #[test]
    fn gf2_examples() {
        let dfree = DeltaMatroid::from_signed(1, &[&[1], &[-1]]).unwrap();
        assert_eq!(dm_from_gf2(&Gf2SymMatrix::new(vec![vec![1]]).unwrap()).unwrap(), dfree);
        let dloop = DeltaMatroid::from_signed(1, &[&[-1]]).unwrap();
        assert_eq!(dm_from_gf2(&Gf2SymMatrix::new(vec![vec![0]]).unwrap()).unwrap(), dloop);
        let a = Gf2SymMatrix::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(
            dm_from_gf2(&a).unwrap(),
            DeltaMatroid::from_signed(2, &[&[1, 2], &[-1, -2]]).unwrap()
        );
        assert_eq!(Gf2SymMatrix::new(vec![vec![0, 1], vec![0, 0]]), Err(Error::NotSymmetric));
    }
}
