//! Integer tables on admissible sets and the axiom systems characterizing rank
//! functions of delta-matroids.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::deltamatroid::DeltaMatroid;
use crate::error::{Error, Result};
use crate::ground::{self, check_guard, join, meet, AdmissibleSet};
use crate::Rational;

/// An integer value for each of the `3^n` admissible sets.
///
/// Stored by ternary code; [`RankTable::iter`] walks the canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RankTable {
    n: usize,
    values: Vec<i64>,
}

impl RankTable {
    pub fn from_fn(n: usize, mut f: impl FnMut(&AdmissibleSet) -> i64) -> Self {
        let total = 3usize.pow(n as u32);
        let values = (0..total).map(|c| f(&AdmissibleSet::from_ternary_code(n, c))).collect();
        Self { n, values }
    }

    /// Values listed in canonical order of [`ground::enumerate_admissible`].
    pub fn from_canonical(n: usize, canonical: &[i64]) -> Result<Self> {
        let order = ground::enumerate_admissible(n)?;
        if canonical.len() != order.len() {
            return Err(Error::TableLength { expected: order.len(), found: canonical.len() });
        }
        let mut values = vec![0; order.len()];
        for (s, &v) in order.iter().zip(canonical) {
            values[s.ternary_code()] = v;
        }
        Ok(Self { n, values })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, s: &AdmissibleSet) -> i64 {
        self.values[s.ternary_code()]
    }

    pub fn set(&mut self, s: &AdmissibleSet, value: i64) {
        self.values[s.ternary_code()] = value;
    }

    /// `(set, value)` pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (AdmissibleSet, i64)> + '_ {
        ground::enumerate_admissible(self.n)
            .expect("table exists, so n is within the guard")
            .into_iter()
            .map(move |s| (s, self.get(&s)))
    }

    pub fn canonical_values(&self) -> Vec<i64> {
        self.iter().map(|(_, v)| v).collect()
    }

    /// `(g + |S|) / 2`; only meaningful when the parities match.
    pub fn g_to_h(&self) -> Self {
        let mut out = self.clone();
        for (c, v) in out.values.iter_mut().enumerate() {
            *v = (*v + AdmissibleSet::from_ternary_code(self.n, c).len() as i64).div_euclid(2);
        }
        out
    }

    /// `2h − |S|`.
    pub fn h_to_g(&self) -> Self {
        let mut out = self.clone();
        for (c, v) in out.values.iter_mut().enumerate() {
            *v = 2 * *v - AdmissibleSet::from_ternary_code(self.n, c).len() as i64;
        }
        out
    }

    fn all_sets(&self) -> Vec<AdmissibleSet> {
        ground::enumerate_admissible(self.n).expect("table exists, so n is within the guard")
    }
}

impl fmt::Debug for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

/// Named conditions that the verifiers in this crate check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Normalization,
    Boundedness,
    Bisubmodularity,
    Parity,
    /// `h(S) ∈ {0, 1}` on singletons.
    UnitBoundedness,
    /// `h(S) + h(T) ≥ h(S ∩ T) + h(S ⊔ T) + |S ∩ T̄|/2`.
    HalfDefectExchange,
    /// `h(S) ≤ h(S ∪ a) ≤ h(S) + 1`.
    UnitIncrease,
    /// Submodularity on pairs whose union is admissible.
    AdmissibleSubmodularity,
    /// `h(S ∪ i) + h(S ∪ ī) ≥ 2h(S) + 1`.
    PairSplit,
    /// `h(S) + h(T) ≥ h(S ∩ T) + h(S ⊔ T) + |S ∩ T̄|`.
    FullDefectExchange,
    Greedy,
    BasisExchange,
    FeasibleIsBasis,
    EnvelopeImage,
    IndependenceCoincidence,
    PureOSymmetry,
    PureOMonotonicity,
}

/// A failed instance of an axiom: the witnesses and the two sides of the
/// inequality as evaluated (after clearing denominators where needed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<AdmissibleSet>,
    pub lhs: i64,
    pub rhs: i64,
    pub note: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:", self.axiom)?;
        for w in &self.witness {
            write!(f, " {{{w}}}")?;
        }
        write!(f, " (lhs {}, rhs {})", self.lhs, self.rhs)?;
        if !self.note.is_empty() {
            write!(f, " {}", self.note)?;
        }
        Ok(())
    }
}

/// Outcome of an axiom check: at most one violation per axiom, the first in
/// canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub(crate) fn push(&mut self, axiom: Axiom, witness: Vec<AdmissibleSet>, lhs: i64, rhs: i64) {
        self.push_note(axiom, witness, lhs, rhs, String::new());
    }

    pub(crate) fn push_note(&mut self, axiom: Axiom, witness: Vec<AdmissibleSet>, lhs: i64, rhs: i64, note: String) {
        if !self.has(axiom) {
            self.violations.push(Violation { axiom, witness, lhs, rhs, note });
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("PASS");
        }
        f.write_str("FAIL")?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GAxiomReport {
    pub axioms: AxiomReport,
    /// The evenness criterion `2g(S) = g(S ∪ i) + g(S ∪ ī)` for `|S| = n − 1`.
    /// Informational; not one of the axioms.
    pub even: bool,
}

impl GAxiomReport {
    pub fn passed(&self) -> bool {
        self.axioms.passed()
    }
}

/// First violation of `f(S) + f(T) ≥ f(S ∩ T) + f(S ⊔ T)` scaled by the caller's
/// defect term. With `symmetric` only unordered pairs are visited.
fn exchange_violation(
    table: &RankTable,
    sets: &[AdmissibleSet],
    symmetric: bool,
    scale: i64,
    defect: impl Fn(&AdmissibleSet, &AdmissibleSet) -> i64,
) -> Option<(AdmissibleSet, AdmissibleSet, i64, i64)> {
    for (i, s) in sets.iter().enumerate() {
        let start = if symmetric { i } else { 0 };
        for t in &sets[start..] {
            let lhs = scale * (table.get(s) + table.get(t));
            let rhs = scale * (table.get(&meet(s, t)) + table.get(&join(s, t))) + defect(s, t);
            if lhs < rhs {
                return Some((*s, *t, lhs, rhs));
            }
        }
    }
    None
}

/// Bisubmodularity over all ordered pairs (`symmetric = false`) or unordered
/// pairs only. Both routes must agree.
pub fn bisubmodular_violation(
    table: &RankTable,
    symmetric: bool,
) -> Option<(AdmissibleSet, AdmissibleSet, i64, i64)> {
    exchange_violation(table, &table.all_sets(), symmetric, 1, |_, _| 0)
}

pub fn check_g_axioms(g: &RankTable) -> Result<GAxiomReport> {
    check_guard(g.ground_size())?;
    let n = g.ground_size();
    let sets = g.all_sets();
    let mut report = AxiomReport::default();
    let empty = AdmissibleSet::empty(n);
    if g.get(&empty) != 0 {
        report.push(Axiom::Normalization, vec![empty], g.get(&empty), 0);
    }
    for s in sets.iter().filter(|s| s.len() == 1) {
        if g.get(s).abs() > 1 {
            report.push(Axiom::Boundedness, vec![*s], g.get(s).abs(), 1);
        }
    }
    if let Some((s, t, lhs, rhs)) = bisubmodular_violation(g, true) {
        report.push(Axiom::Bisubmodularity, vec![s, t], lhs, rhs);
    }
    for s in &sets {
        if (g.get(s) - s.len() as i64).rem_euclid(2) != 0 {
            report.push(Axiom::Parity, vec![*s], g.get(s), s.len() as i64);
        }
    }
    Ok(GAxiomReport { axioms: report, even: evenness_criterion(g) })
}

/// `2g(S) = g(S ∪ i) + g(S ∪ ī)` whenever `|S| = n − 1` misses index `i`.
pub fn evenness_criterion(g: &RankTable) -> bool {
    let n = g.ground_size();
    if n == 0 {
        return true;
    }
    g.all_sets().iter().filter(|s| s.len() == n - 1).all(|s| {
        let i = s.untouched().trailing_zeros() as i64 + 1;
        let up = s.with(i).expect("index untouched");
        let down = s.with(-i).expect("index untouched");
        2 * g.get(s) == g.get(&up) + g.get(&down)
    })
}

/// The delta-matroid whose feasible sets are the size-`n` sets with `g(S) = n`.
pub fn delta_from_rank(g: &RankTable) -> Result<DeltaMatroid> {
    let report = check_g_axioms(g)?;
    if let Some(v) = report.axioms.violations.first() {
        return Err(Error::AxiomFailure(format!("{v}")));
    }
    let n = g.ground_size();
    DeltaMatroid::new(n, g.all_sets().into_iter().filter(|s| s.len() == n && g.get(s) == n as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HSystem {
    /// Normalization, unit boundedness, and the half-defect exchange.
    Shifted,
    /// Normalization, unit increase, submodularity on admissible unions, pair split.
    Bouchet,
    /// Normalization, unit increase, and the full-defect exchange.
    Allys,
}

pub fn check_h_axioms(h: &RankTable, system: HSystem) -> Result<AxiomReport> {
    check_guard(h.ground_size())?;
    let n = h.ground_size();
    let sets = h.all_sets();
    let mut report = AxiomReport::default();
    let empty = AdmissibleSet::empty(n);
    if h.get(&empty) != 0 {
        report.push(Axiom::Normalization, vec![empty], h.get(&empty), 0);
    }
    let clash = |s: &AdmissibleSet, t: &AdmissibleSet| s.intersection_len(&t.bar()) as i64;
    match system {
        HSystem::Shifted => {
            for s in sets.iter().filter(|s| s.len() == 1) {
                let v = h.get(s);
                if v != 0 && v != 1 {
                    report.push(Axiom::UnitBoundedness, vec![*s], v, 1);
                }
            }
            // Doubled: 2h(S) + 2h(T) ≥ 2h(S∩T) + 2h(S⊔T) + |S ∩ T̄|.
            if let Some((s, t, lhs, rhs)) = exchange_violation(h, &sets, false, 2, clash) {
                report.push(Axiom::HalfDefectExchange, vec![s, t], lhs, rhs);
            }
        }
        HSystem::Bouchet | HSystem::Allys => {
            unit_increase(h, &sets, &mut report);
            if system == HSystem::Bouchet {
                'outer: for s in &sets {
                    for t in &sets {
                        if s.pos() & t.neg() != 0 || s.neg() & t.pos() != 0 {
                            continue;
                        }
                        let union = join(s, t);
                        let lhs = h.get(s) + h.get(t);
                        let rhs = h.get(&meet(s, t)) + h.get(&union);
                        if lhs < rhs {
                            report.push(Axiom::AdmissibleSubmodularity, vec![*s, *t], lhs, rhs);
                            break 'outer;
                        }
                    }
                }
                'split: for s in &sets {
                    for b in ground::bits(s.untouched()) {
                        let i = b as i64 + 1;
                        let lhs = h.get(&s.with(i)?) + h.get(&s.with(-i)?);
                        let rhs = 2 * h.get(s) + 1;
                        if lhs < rhs {
                            report.push(Axiom::PairSplit, vec![*s, s.with(i)?], lhs, rhs);
                            break 'split;
                        }
                    }
                }
            } else if let Some((s, t, lhs, rhs)) = exchange_violation(h, &sets, false, 1, clash) {
                report.push(Axiom::FullDefectExchange, vec![s, t], lhs, rhs);
            }
        }
    }
    Ok(report)
}

fn unit_increase(h: &RankTable, sets: &[AdmissibleSet], report: &mut AxiomReport) {
    for s in sets {
        for b in ground::bits(s.untouched()) {
            for e in [b as i64 + 1, -(b as i64 + 1)] {
                let up = s.with(e).expect("index untouched");
                let (lo, hi) = (h.get(s), h.get(&up));
                if hi < lo || hi > lo + 1 {
                    report.push(Axiom::UnitIncrease, vec![*s, up], hi, lo);
                    return;
                }
            }
        }
    }
}

/// A rank table read as a normalized function `f` with `f(∅) = 0`, defining
/// `P(f) = {x : ⟨e_S, x⟩ ≤ f(S) for all nonempty S}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisubFn(RankTable);

impl BisubFn {
    pub fn new(table: RankTable) -> Result<Self> {
        if table.get(&AdmissibleSet::empty(table.ground_size())) != 0 {
            return Err(Error::NotNormalized);
        }
        Ok(Self(table))
    }

    pub fn table(&self) -> &RankTable {
        &self.0
    }

    /// `⟨e_S, x⟩ ≤ f(S)` for all `3^n − 1` nonempty `S`.
    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        let n = self.0.ground_size();
        if x.len() != n {
            return Err(Error::Dimension { expected: n, found: x.len() });
        }
        Ok(self.0.iter().filter(|(s, _)| !s.is_empty()).all(|(s, bound)| {
            pairing(&s, x) <= Rational::from_integer(bound.into())
        }))
    }

    /// `max ⟨e_S, x⟩` over the given points.
    pub fn support_value(s: &AdmissibleSet, points: &[Vec<Rational>]) -> Option<Rational> {
        points.iter().map(|p| pairing(s, p)).max()
    }
}

pub(crate) fn pairing(s: &AdmissibleSet, x: &[Rational]) -> Rational {
    let mut acc = Rational::from_integer(0.into());
    for b in ground::bits(s.pos()) {
        acc += &x[b];
    }
    for b in ground::bits(s.neg()) {
        acc -= &x[b];
    }
    acc
}

pub fn polytope_membership(f: &BisubFn, x: &[Rational]) -> Result<bool> {
    f.contains(x)
}

/// For all `S ⊆ T`: `max_{B ∈ 𝓕_S} |T ∩ B| = max_{B ∈ 𝓕} |T ∩ B|`, where `𝓕_S`
/// are the feasible sets maximizing `|S ∩ B|`.
pub fn greedy_check(d: &DeltaMatroid) -> Result<AxiomReport> {
    let n = d.ground_size();
    let mut report = AxiomReport::default();
    for t in ground::enumerate_admissible(n)? {
        let overall = d.feasible().iter().map(|b| t.intersection_len(b)).max().unwrap();
        let mut subsets: Vec<_> = t.subsets().collect();
        subsets.sort_unstable();
        for s in subsets {
            let best = d.feasible().iter().map(|b| s.intersection_len(b)).max().unwrap();
            let restricted = d
                .feasible()
                .iter()
                .filter(|b| s.intersection_len(b) == best)
                .map(|b| t.intersection_len(b))
                .max()
                .unwrap();
            if restricted != overall {
                report.push(Axiom::Greedy, vec![s, t], restricted as i64, overall as i64);
                return Ok(report);
            }
        }
    }
    Ok(report)
}
