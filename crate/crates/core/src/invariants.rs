//! The U-polynomial, interlace polynomial, independence f-vector, activities and
//! the activity-zero complex.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::deltamatroid::DeltaMatroid;
use crate::error::{Error, Result};
use crate::ground::{self, bits, check_guard, AdmissibleSet};
use crate::poly::MultiPoly;
use crate::rankfn::{Axiom, AxiomReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UMethod {
    Direct,
    Recursive,
}

/// `U_D(u, v)` in the variables `u, v`.
pub fn upoly(d: &DeltaMatroid, method: UMethod) -> Result<MultiPoly> {
    check_guard(d.ground_size())?;
    match method {
        UMethod::Direct => Ok(upoly_direct(d)),
        UMethod::Recursive => {
            Ok(upoly_recursive(d, &mut Some(BTreeMap::new()), &mut |_| 1))
        }
    }
}

fn upoly_direct(d: &DeltaMatroid) -> MultiPoly {
    let n = d.ground_size();
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for code in 0..3usize.pow(n as u32) {
        let s = AdmissibleSet::from_ternary_code(n, code);
        let size = s.len();
        let g = d.g(&s);
        *counts.entry((n - size, ((size as i64 - g) / 2) as usize)).or_default() += 1;
    }
    MultiPoly::from_uv_counts(counts)
}

fn uv_one_plus() -> MultiPoly {
    &(&MultiPoly::var("u") + &MultiPoly::var("v")) + &MultiPoly::one(&["u", "v"])
}

fn upoly_recursive(
    d: &DeltaMatroid,
    memo: &mut Option<BTreeMap<DeltaMatroid, MultiPoly>>,
    pivot: &mut dyn FnMut(&DeltaMatroid) -> usize,
) -> MultiPoly {
    if d.ground_size() == 0 {
        return MultiPoly::one(&["u", "v"]);
    }
    if let Some(p) = memo.as_ref().and_then(|m| m.get(d)) {
        return p.clone();
    }
    let i = pivot(d);
    assert!(i >= 1 && i <= d.ground_size(), "pivot {i} out of range");
    let out = if d.is_loop(i) || d.is_coloop(i) {
        let rest = upoly_recursive(&d.delete(i).expect("pivot in range"), memo, pivot);
        &uv_one_plus() * &rest
    } else {
        let c = upoly_recursive(&d.contract(i).expect("pivot in range"), memo, pivot);
        let del = upoly_recursive(&d.delete(i).expect("pivot in range"), memo, pivot);
        let p = upoly_recursive(&d.project(i).expect("pivot in range"), memo, pivot);
        &(&c + &del) + &(&MultiPoly::var("u") * &p)
    };
    if let Some(m) = memo.as_mut() {
        m.insert(d.clone(), out.clone());
    }
    out
}

/// The recursion with a caller-chosen 1-based pivot at every step, unmemoized.
pub fn upoly_with_pivot(d: &DeltaMatroid, pivot: &mut dyn FnMut(&DeltaMatroid) -> usize) -> Result<MultiPoly> {
    check_guard(d.ground_size())?;
    Ok(upoly_recursive(d, &mut None, pivot))
}

/// `U_D(0, v)`: the sum over size-`n` admissible sets.
pub fn interlace(d: &DeltaMatroid) -> Result<MultiPoly> {
    let n = d.ground_size();
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for t in ground::enumerate_transversals(n)? {
        let g = d.g(&t);
        *counts.entry((0, ((n as i64 - g) / 2) as usize)).or_default() += 1;
    }
    let p = MultiPoly::from_uv_counts(counts);
    Ok(p.substitute_value("u", &crate::Rational::from_integer(0.into())).expect("u is a variable"))
}

/// Counts `f_{-1}, f_0, …, f_{n-1}` of independent sets by size.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    /// Entry `k` is `f_{k-1}`, the number of faces of size `k`.
    pub fn new(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `f_i` for `i ≥ -1`.
    pub fn f(&self, i: isize) -> u64 {
        usize::try_from(i + 1).ok().and_then(|k| self.counts.get(k)).copied().unwrap_or(0)
    }

    /// `(a_0, …, a_n)` with `a_k = f_{k-1}`.
    pub fn a_sequence(&self) -> &[u64] {
        &self.counts
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn fvector_of(n: usize, faces: impl IntoIterator<Item = AdmissibleSet>) -> FVector {
    let mut counts = alloc::vec![0u64; n + 1];
    for s in faces {
        counts[s.len()] += 1;
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    FVector::new(counts)
}

pub fn independence_fvector(d: &DeltaMatroid) -> Result<FVector> {
    let ind = d.independents()?;
    let mut counts = alloc::vec![0u64; d.ground_size() + 1];
    for s in ind {
        counts[s.len()] += 1;
    }
    Ok(FVector::new(counts))
}

/// `a_i ≤ a_{n-i}` for `i ≤ n/2` and `a_0 ≤ a_1 ≤ … ≤ a_{⌊(n+1)/2⌋}`.
pub fn pure_o_inequalities(f: &FVector) -> AxiomReport {
    let a = f.a_sequence();
    let mut report = AxiomReport::default();
    if a.is_empty() {
        return report;
    }
    let n = a.len() - 1;
    for i in 0..=n / 2 {
        if a[i] > a[n - i] {
            report.push_note(Axiom::PureOSymmetry, Vec::new(), a[i] as i64, a[n - i] as i64, format!("a_{i} > a_{}", n - i));
        }
    }
    for i in 0..n.div_ceil(2) {
        if a[i] > a[i + 1] {
            report.push_note(Axiom::PureOMonotonicity, Vec::new(), a[i] as i64, a[i + 1] as i64, format!("a_{i} > a_{}", i + 1));
        }
    }
    report
}

/// An independent set together with its active elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivityRecord {
    pub set: AdmissibleSet,
    /// 1-based indices of the active elements.
    pub active: Vec<usize>,
    pub a: usize,
}

/// Active elements of an independent `I` in the order `1 < 2 < … < n`.
pub fn activity(d: &DeltaMatroid, set: &AdmissibleSet) -> Result<ActivityRecord> {
    if set.ground_size() != d.ground_size() {
        return Err(Error::SizeMismatch { left: d.ground_size(), right: set.ground_size() });
    }
    if !d.is_independent(set) {
        return Err(Error::NotIndependent);
    }
    let untouched: Vec<usize> = bits(set.untouched()).map(|b| b + 1).collect();
    let proj = d.minor(&[], &[], &untouched)?;
    let support = set.support();
    let local = set.compact(support);
    let indices: Vec<usize> = bits(support).map(|b| b + 1).collect();
    let mut active = Vec::new();
    for (i, &orig) in indices.iter().enumerate() {
        let bi = 1u32 << i;
        if proj.is_feasible(&local.flip(bi)) {
            continue;
        }
        let blocked = (0..i).any(|j| proj.is_feasible(&local.flip(bi | 1 << j)));
        if !blocked {
            active.push(orig);
        }
    }
    Ok(ActivityRecord { set: *set, a: active.len(), active })
}

/// Activity records of every independent set, in canonical order.
pub fn activities(d: &DeltaMatroid) -> Result<Vec<ActivityRecord>> {
    d.independents()?.iter().map(|s| activity(d, s)).collect()
}

/// `Σ_I u^{n − |I|} v^{a(I)}` over independent sets.
pub fn activity_expansion(d: &DeltaMatroid) -> Result<MultiPoly> {
    let n = d.ground_size();
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for r in activities(d)? {
        *counts.entry((n - r.set.len(), r.a)).or_default() += 1;
    }
    Ok(MultiPoly::from_uv_counts(counts))
}

/// Independent sets of activity zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivityComplex {
    pub faces: Vec<AdmissibleSet>,
    pub fvector: FVector,
    pub pure: bool,
}

pub fn activity_zero_complex(d: &DeltaMatroid) -> Result<ActivityComplex> {
    let faces: Vec<AdmissibleSet> =
        activities(d)?.into_iter().filter(|r| r.a == 0).map(|r| r.set).collect();
    let lookup: BTreeSet<AdmissibleSet> = faces.iter().copied().collect();
    for f in &faces {
        if f.subsets().any(|s| !lookup.contains(&s)) {
            return Err(Error::NotAComplex);
        }
    }
    let maximal: Vec<&AdmissibleSet> = faces
        .iter()
        .filter(|f| !faces.iter().any(|g| g != *f && f.is_subset(g)))
        .collect();
    let pure = maximal.windows(2).all(|w| w[0].len() == w[1].len());
    Ok(ActivityComplex { fvector: fvector_of(d.ground_size(), faces.iter().copied()), faces, pure })
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
    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn upoly_examples() {
        let free1 = DeltaMatroid::free(1).unwrap();
        for m in [UMethod::Direct, UMethod::Recursive] {
            assert_eq!(upoly(&dco(), m).unwrap(), p("u + v + 1"));
            assert_eq!(upoly(&free1, m).unwrap(), p("u + 2"));
            assert_eq!(upoly(&dex(), m).unwrap().to_string(), "u^3 + 6*u^2 + 3*u*v + 9*u + v^2 + 4*v + 3");
        }
        let last = upoly_with_pivot(&dex(), &mut |m| m.ground_size()).unwrap();
        assert_eq!(last, upoly(&dex(), UMethod::Direct).unwrap());
    }

    #[test]
    fn interlace_examples() {
        assert_eq!(interlace(&dco()).unwrap(), p("v + 1"));
        assert_eq!(interlace(&dex()).unwrap(), p("v^2 + 4*v + 3"));
    }

    #[test]
    fn fvector_examples() {
        assert_eq!(independence_fvector(&dex()).unwrap().counts(), &[1, 6, 9, 3]);
        assert_eq!(independence_fvector(&dco()).unwrap().counts(), &[1, 1]);
        assert_eq!(independence_fvector(&DeltaMatroid::free(1).unwrap()).unwrap().counts(), &[1, 2]);
    }

    #[test]
    fn pure_o_examples() {
        assert!(pure_o_inequalities(&FVector::new(alloc::vec![1, 6, 9, 3])).passed());
        assert!(pure_o_inequalities(&FVector::new(alloc::vec![1, 1])).passed());
        let bad = pure_o_inequalities(&FVector::new(alloc::vec![2, 1, 1]));
        assert!(bad.has(Axiom::PureOMonotonicity));
    }

    #[test]
    fn activity_examples() {
        let d = dex();
        let s = |v: &[i64]| AdmissibleSet::from_signed(3, v).unwrap();
        assert_eq!(activity(&d, &s(&[1])).unwrap().a, 0);
        assert_eq!(activity(&d, &s(&[-2, -3])).unwrap().a, 0);
        assert_eq!(activity(&d, &s(&[1, -2, -3])).unwrap().active, alloc::vec![1]);
        for b in d.feasible() {
            assert!(activity(&d, b).unwrap().a >= 1);
        }
        assert_eq!(activity(&d, &s(&[1, 2])), Err(Error::NotIndependent));
    }

    #[test]
    fn activity_expansion_examples() {
        assert_eq!(activity_expansion(&dco()).unwrap(), p("u + v"));
        let e = activity_expansion(&dex()).unwrap();
        assert_eq!(e, p("u^3 + 6*u^2 + 6*u + 3*u*v + v^2 + 2*v"));
        let zero = crate::Rational::from_integer(0.into());
        assert_eq!(e.substitute_value("v", &zero).unwrap(), p("u^3 + 6*u^2 + 6*u"));
    }

    #[test]
    fn complex_examples() {
        let c = activity_zero_complex(&dex()).unwrap();
        assert_eq!(c.fvector.counts(), &[1, 6, 6]);
        assert!(!c.pure);
        let c = activity_zero_complex(&dco()).unwrap();
        assert_eq!(c.fvector.counts(), &[1]);
        assert!(c.pure);
    }
}
