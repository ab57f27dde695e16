//! Cross-checks against a deliberately naive model: signed sets are sorted
//! `Vec<i64>`, families are `BTreeSet`s, and nothing is bit-packed.

use std::collections::{BTreeMap, BTreeSet};

use deltamat::invariants::{activity_expansion, independence_fvector, interlace, upoly, UMethod};
use deltamat::{AdmissibleSet, DeltaMatroid, ValidationMethod};

type Signed = Vec<i64>;

fn all_admissible(n: i64) -> Vec<Signed> {
    let mut out = vec![Vec::new()];
    for i in 1..=n {
        let mut next = Vec::new();
        for s in &out {
            next.push(s.clone());
            let mut p = s.clone();
            p.push(i);
            next.push(p);
            let mut m = s.clone();
            m.push(-i);
            next.push(m);
        }
        out = next;
    }
    out
}

fn transversals(n: i64) -> Vec<Signed> {
    all_admissible(n).into_iter().filter(|s| s.len() == n as usize).collect()
}

fn naive_g(family: &[Signed], s: &Signed) -> i64 {
    family
        .iter()
        .map(|b| s.iter().map(|x| if b.contains(x) { 1 } else { -1 }).sum::<i64>())
        .max()
        .unwrap()
}

/// Symmetric exchange on the positive parts.
fn naive_valid(n: i64, family: &[Signed]) -> bool {
    let pos: BTreeSet<BTreeSet<i64>> =
        family.iter().map(|b| b.iter().copied().filter(|&x| x > 0).collect()).collect();
    for x in &pos {
        for y in &pos {
            let diff: Vec<i64> = (1..=n).filter(|i| x.contains(i) != y.contains(i)).collect();
            for &a in &diff {
                let ok = diff.iter().any(|&b| {
                    let mut z = x.clone();
                    for e in if a == b { vec![a] } else { vec![a, b] } {
                        if !z.remove(&e) {
                            z.insert(e);
                        }
                    }
                    pos.contains(&z)
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

fn naive_upoly(n: i64, family: &[Signed]) -> BTreeMap<(u32, u32), u64> {
    let mut out = BTreeMap::new();
    for s in all_admissible(n) {
        let g = naive_g(family, &s);
        let key = ((n as usize - s.len()) as u32, ((s.len() as i64 - g) / 2) as u32);
        *out.entry(key).or_insert(0) += 1;
    }
    out
}

fn naive_independent_counts(n: i64, family: &[Signed]) -> Vec<u64> {
    let mut seen = BTreeSet::new();
    for b in family {
        for mask in 0u32..1 << b.len() {
            let sub: Signed = b.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
            seen.insert(sub);
        }
    }
    let mut counts = vec![0u64; n as usize + 1];
    for s in seen {
        counts[s.len()] += 1;
    }
    counts
}

fn build(n: i64, family: &[Signed]) -> DeltaMatroid {
    let sets: Vec<&[i64]> = family.iter().map(|s| s.as_slice()).collect();
    DeltaMatroid::from_signed(n as usize, &sets).unwrap()
}

fn poly_counts(p: &deltamat::MultiPoly) -> BTreeMap<(u32, u32), u64> {
    let mut out = BTreeMap::new();
    for u in 0..8u8 {
        for v in 0..8u8 {
            let c = p.coeff_of(&[("u", u), ("v", v)]);
            if c != deltamat::Rational::from_integer(0.into()) {
                assert!(c.is_integer());
                out.insert((u as u32, v as u32), c.to_integer().try_into().unwrap());
            }
        }
    }
    out
}

fn families(n: i64, max_sets: usize) -> Vec<Vec<Signed>> {
    let t = transversals(n);
    let mut out = Vec::new();
    for mask in 1u32..1 << t.len() {
        if (mask.count_ones() as usize) <= max_sets {
            out.push(t.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| s.clone()).collect());
        }
    }
    out
}

#[test]
fn validators_match_naive_exchange() {
    for n in 0..=3 {
        for fam in families(n, 16) {
            let d = build(n, &fam);
            let expected = naive_valid(n, &fam);
            assert_eq!(d.validate(ValidationMethod::Exchange).unwrap().is_valid(), expected, "{fam:?}");
            assert_eq!(d.validate(ValidationMethod::Polytope).unwrap().is_valid(), expected, "{fam:?}");
        }
    }
}

#[test]
fn rank_and_upoly_match_naive() {
    for n in 0..=3 {
        for fam in families(n, 16) {
            if !naive_valid(n, &fam) {
                continue;
            }
            let d = build(n, &fam);
            for s in all_admissible(n) {
                let a = AdmissibleSet::from_signed(n as usize, &s).unwrap();
                assert_eq!(d.g(&a), naive_g(&fam, &s));
            }
            let expected = naive_upoly(n, &fam);
            assert_eq!(poly_counts(&upoly(&d, UMethod::Direct).unwrap()), expected);
            assert_eq!(poly_counts(&upoly(&d, UMethod::Recursive).unwrap()), expected);
            let fv = independence_fvector(&d).unwrap();
            assert_eq!(fv.counts(), naive_independent_counts(n, &fam).as_slice());
            let inter: BTreeMap<(u32, u32), u64> =
                expected.iter().filter(|((u, _), _)| *u == 0).map(|(k, v)| (*k, *v)).collect();
            assert_eq!(poly_counts(&interlace(&d).unwrap()), inter);
        }
    }
}

#[test]
fn activity_expansion_matches_shifted_upoly() {
    for n in 0..=3 {
        for fam in families(n, 16) {
            if !naive_valid(n, &fam) {
                continue;
            }
            let d = build(n, &fam);
            // U(u, v-1) expanded by hand from the naive counts.
            let mut shifted: BTreeMap<(u32, u32), i64> = BTreeMap::new();
            for (&(u, v), &c) in &naive_upoly(n, &fam) {
                let mut binom = 1i64;
                for k in 0..=v {
                    let sign = if (v - k) % 2 == 0 { 1 } else { -1 };
                    *shifted.entry((u, k)).or_insert(0) += sign * binom * c as i64;
                    binom = binom * (v - k) as i64 / (k + 1) as i64;
                }
            }
            shifted.retain(|_, c| *c != 0);
            let got: BTreeMap<(u32, u32), i64> =
                poly_counts(&activity_expansion(&d).unwrap()).into_iter().map(|(k, c)| (k, c as i64)).collect();
            assert_eq!(got, shifted, "{fam:?}");
        }
    }
}

#[test]
fn minors_match_naive_definitions() {
    let fam: Vec<Signed> = vec![vec![1, -2, -3], vec![-1, 2, -3], vec![-1, -2, 3]];
    let d = build(3, &fam);
    let strip = |keep: &dyn Fn(&Signed) -> bool| -> BTreeSet<Signed> {
        let chosen: Vec<&Signed> = fam.iter().filter(|b| keep(b)).collect();
        chosen.iter().map(|b| b.iter().filter(|x| x.abs() != 1).map(|x| x.signum() * (x.abs() - 1)).collect()).collect()
    };
    let as_sets = |m: &DeltaMatroid| -> BTreeSet<Signed> { m.feasible().iter().map(|b| b.signed()).collect() };
    assert_eq!(as_sets(&d.contract(1).unwrap()), strip(&|b| b.contains(&1)));
    assert_eq!(as_sets(&d.delete(1).unwrap()), strip(&|b| b.contains(&-1)));
    assert_eq!(as_sets(&d.project(1).unwrap()), strip(&|_| true));
}
