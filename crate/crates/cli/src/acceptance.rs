//! Acceptance criteria 1–14, shared by `deltamat selftest` and the `acceptance`
//! test target. Each criterion checks the library against independent oracles
//! (brute force, hand-derived values, or an identity between two routes).

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use deltamat::ground::{enumerate_admissible, enumerate_transversals, SignedPermutation};
use deltamat::invariants::{
    activities, activity_expansion, activity_zero_complex, independence_fvector, interlace, pure_o_inequalities,
    upoly, UMethod,
};
use deltamat::lorentzian::{conjecture_check, indep_gen_poly, is_lorentzian, two_var_ulc_check, Inequality};
use deltamat::matroid::{
    closed_form_rank, closed_form_upoly, dm_from_gf2, dm_from_matroid, enveloping_check, FromMatroid, Gf2SymMatrix,
};
use deltamat::rankfn::{check_g_axioms, check_h_axioms, delta_from_rank, evenness_criterion, greedy_check, HSystem};
use deltamat::{AdmissibleSet, DeltaMatroid, Matroid, MultiPoly, RankTable, Rational, ValidationMethod};
use rand::Rng;

use crate::random::{any_family, rng, scan_sample, uniform_family};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} [{status}] {}: {}", self.id, self.title, self.detail)
    }
}

#[derive(Debug)]
pub struct Failure(String);

impl From<deltamat::Error> for Failure {
    fn from(e: deltamat::Error) -> Self {
        Failure(format!("library error: {e}"))
    }
}

pub type Check = Result<String, Failure>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(Failure(format!($($arg)+)));
        }
    };
}

/// Number, title and check of each library criterion.
pub type Criterion = (u8, &'static str, fn() -> Check);

pub const CRITERIA: [Criterion; 13] = [
    (1, "validator equivalence", c1_validators),
    (2, "rank axioms and inversion", c2_rank_axioms),
    (3, "U-polynomial consistency", c3_upoly),
    (4, "three-set example", c4_dex),
    (5, "activity expansion", c5_activity),
    (6, "f-vector and lattice points", c6_fvector),
    (7, "rank identities under operations", c7_operations),
    (8, "h-axiom systems", c8_h_systems),
    (9, "closed forms for matroids", c9_closed_forms),
    (10, "envelopes and Lorentzian polynomials", c10_envelopes),
    (11, "multiaffine part preserves Lorentzian", c11_multiaffine),
    (12, "pure O-sequence inequalities", c12_pure_o),
    (13, "GF(2) constructor", c13_gf2),
];

pub const DETERMINISM_TITLE: &str = "determinism across worker counts";

fn evaluate(id: u8, title: &'static str, f: fn() -> Check) -> Outcome {
    match f() {
        Ok(detail) => Outcome { id, title, passed: true, detail },
        Err(Failure(detail)) => Outcome { id, title, passed: false, detail },
    }
}

/// Runs one criterion by number (1–14).
pub fn run_one(id: u8) -> Option<Outcome> {
    if id == 14 {
        let base = run_core();
        return Some(evaluate14(&base));
    }
    CRITERIA.iter().find(|c| c.0 == id).map(|&(id, title, f)| evaluate(id, title, f))
}

fn run_core() -> Vec<Outcome> {
    CRITERIA.iter().map(|&(id, title, f)| evaluate(id, title, f)).collect()
}

/// Runs every criterion in order.
pub fn run_all() -> Vec<Outcome> {
    let mut out = run_core();
    let last = evaluate14(&out);
    out.push(last);
    out
}

fn evaluate14(base: &[Outcome]) -> Outcome {
    match c14_determinism(base) {
        Ok(detail) => Outcome { id: 14, title: DETERMINISM_TITLE, passed: true, detail },
        Err(Failure(detail)) => Outcome { id: 14, title: DETERMINISM_TITLE, passed: false, detail },
    }
}

// ---------------------------------------------------------------------------
// shared enumerations

fn all_families(n: usize) -> Vec<DeltaMatroid> {
    let t = enumerate_transversals(n).expect("small n");
    (1u64..1 << t.len())
        .map(|mask| {
            let chosen = t.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| *s);
            DeltaMatroid::new(n, chosen).expect("nonempty family")
        })
        .collect()
}

/// Every valid delta-matroid with `n ≤ 3`.
fn small_valid() -> &'static [DeltaMatroid] {
    static CACHE: OnceLock<Vec<DeltaMatroid>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (0..=3)
            .flat_map(all_families)
            .filter(|d| d.validate(ValidationMethod::Exchange).unwrap().is_valid())
            .collect()
    })
}

fn collect_all<T: Send>(items: Vec<Result<T, Failure>>) -> Result<Vec<T>, Failure> {
    items.into_iter().collect()
}

fn uv_poly(text: &str) -> MultiPoly {
    text.parse::<MultiPoly>().expect("literal polynomial")
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `v ↦ v − 1`.
fn shift_v(p: &MultiPoly) -> Result<MultiPoly, Failure> {
    let shift = &MultiPoly::var("v") - &MultiPoly::one(&["v"]);
    Ok(p.substitute("v", &shift)?)
}

fn union(n: usize, a: &AdmissibleSet, b: &AdmissibleSet) -> AdmissibleSet {
    AdmissibleSet::new(n, a.pos() | b.pos(), a.neg() | b.neg()).expect("disjoint supports")
}

/// Places the elements of a set on `|keep|` indices at the positions of `keep`.
fn expand(s: &AdmissibleSet, keep: u32, n: usize) -> AdmissibleSet {
    let (mut pos, mut neg) = (0u32, 0u32);
    for (j, b) in (0..n).filter(|b| keep >> b & 1 == 1).enumerate() {
        pos |= (s.pos() >> j & 1) << b;
        neg |= (s.neg() >> j & 1) << b;
    }
    AdmissibleSet::new(n, pos, neg).expect("expanded set")
}

fn indices(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

fn signed_permutations(n: usize) -> Vec<SignedPermutation> {
    fn perms(rest: Vec<i64>) -> Vec<Vec<i64>> {
        if rest.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in 0..rest.len() {
            let mut r = rest.clone();
            let x = r.remove(k);
            for mut tail in perms(r) {
                tail.insert(0, x);
                out.push(tail);
            }
        }
        out
    }
    let mut out = Vec::new();
    for p in perms((1..=n as i64).collect()) {
        for signs in 0u32..1 << n {
            let image = p.iter().enumerate().map(|(i, &x)| if signs >> i & 1 == 1 { -x } else { x }).collect();
            out.push(SignedPermutation::new(image).expect("signed permutation"));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// 1

fn compare_validators(d: &DeltaMatroid) -> Result<(), Failure> {
    let e = d.validate(ValidationMethod::Exchange)?;
    let p = d.validate(ValidationMethod::Polytope)?;
    ensure!(e.is_valid() == p.is_valid(), "validators disagree on {d:?}: exchange {e}, polytope {p}");
    Ok(())
}

const C1_RANDOM: u64 = 10_000;

fn c1_validators() -> Check {
    let mut exhaustive = 0usize;
    let mut valid = 0usize;
    for n in 0..=3 {
        for d in all_families(n) {
            compare_validators(&d)?;
            exhaustive += 1;
            valid += d.validate(ValidationMethod::Exchange)?.is_valid() as usize;
        }
    }
    let random: Vec<Result<(), Failure>> = (0..C1_RANDOM)
        .into_par_iter()
        .map(|i| compare_validators(&any_family(4, &mut rng(1, i))))
        .collect();
    collect_all(random)?;
    Ok(format!(
        "{exhaustive} exhaustive families for n <= 3 ({valid} valid), {C1_RANDOM} random at n = 4, 0 disagreements"
    ))
}

// ---------------------------------------------------------------------------
// 2

/// Every table with `g(∅) = 0` and `g(S) ∈ {−|S|, −|S|+2, …, |S|}`.
fn parity_tables(n: usize) -> Vec<RankTable> {
    let sets = enumerate_admissible(n).expect("small n");
    let choices: Vec<Vec<i64>> = sets
        .iter()
        .map(|s| {
            let k = s.len() as i64;
            (0..=k).map(|j| -k + 2 * j).collect()
        })
        .collect();
    let total: usize = choices.iter().map(|c| c.len()).product();
    (0..total)
        .map(|mut code| {
            let values: Vec<i64> = choices
                .iter()
                .map(|c| {
                    let v = c[code % c.len()];
                    code /= c.len();
                    v
                })
                .collect();
            RankTable::from_canonical(n, &values).expect("table length")
        })
        .collect()
}

fn c2_rank_axioms() -> Check {
    for d in small_valid() {
        let table = d.rank_table()?;
        let report = check_g_axioms(&table)?;
        ensure!(report.passed(), "g-axioms fail for {d:?}: {}", report.axioms);
        ensure!(&delta_from_rank(&table)? == d, "inversion fails for {d:?}");
        ensure!(report.even == d.is_even(), "evenness report disagrees for {d:?}");
        ensure!(evenness_criterion(&table) == d.is_even(), "evenness criterion disagrees for {d:?}");
    }
    let mut checked = 0usize;
    let mut passing = 0usize;
    for n in 1..=2 {
        for table in parity_tables(n) {
            checked += 1;
            let report = check_g_axioms(&table)?;
            if !report.passed() {
                continue;
            }
            passing += 1;
            let d = delta_from_rank(&table)?;
            ensure!(d.validate(ValidationMethod::Exchange)?.is_valid(), "table yields invalid {d:?}");
            ensure!(d.rank_table()? == table, "table does not round-trip: {table:?}");
            ensure!(evenness_criterion(&table) == d.is_even(), "evenness criterion disagrees on {table:?}");
        }
    }
    Ok(format!(
        "{} valid delta-matroids with n <= 3 pass and invert; {checked} parity tables for n <= 2, {passing} pass and round-trip",
        small_valid().len()
    ))
}

// ---------------------------------------------------------------------------
// 3

fn random_valid(seed: u64, count: u64, n: usize) -> Vec<DeltaMatroid> {
    (0..count).into_par_iter().map(|i| scan_sample(seed, i, n).1).collect()
}

fn c3_upoly() -> Check {
    for d in small_valid() {
        ensure!(upoly(d, UMethod::Direct)? == upoly(d, UMethod::Recursive)?, "methods differ on {d:?}");
    }
    let random = random_valid(3, 100, 5);
    let checks: Vec<Result<(), Failure>> = random
        .par_iter()
        .map(|d| {
            ensure!(upoly(d, UMethod::Direct)? == upoly(d, UMethod::Recursive)?, "methods differ on {d:?}");
            Ok(())
        })
        .collect();
    collect_all(checks)?;
    let pairs: Vec<Result<(), Failure>> = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let mut r = rng(33, i);
            let n1 = r.random_range(0..=3);
            let n2 = r.random_range(0..=3);
            let d1 = uniform_family(n1, &mut r).expect("small n");
            let d2 = uniform_family(n2, &mut r).expect("small n");
            let lhs = upoly(&d1.product(&d2)?, UMethod::Direct)?;
            let rhs = &upoly(&d1, UMethod::Direct)? * &upoly(&d2, UMethod::Direct)?;
            ensure!(lhs == rhs, "product identity fails for {d1:?} x {d2:?}");
            Ok(())
        })
        .collect();
    collect_all(pairs)?;
    Ok(format!(
        "{} valid with n <= 3 and 100 random at n = 5 agree; product identity on 100 random pairs",
        small_valid().len()
    ))
}

// ---------------------------------------------------------------------------
// 4

fn dex() -> DeltaMatroid {
    DeltaMatroid::from_signed(3, &[&[1, -2, -3], &[-1, 2, -3], &[-1, -2, 3]]).expect("fixture")
}

fn c4_dex() -> Check {
    let d = dex();
    let u = upoly(&d, UMethod::Direct)?;
    let at_minus_one = u.substitute_value("v", &int(-1))?;
    ensure!(at_minus_one == uv_poly("u^3 + 6*u^2 + 6*u"), "U(u, -1) = {at_minus_one}");
    let complex = activity_zero_complex(&d)?;
    ensure!(complex.fvector.counts() == [1, 6, 6], "complex f-vector {}", complex.fvector);
    ensure!(!complex.pure, "complex reported pure");
    for r in activities(&d)? {
        if d.is_feasible(&r.set) {
            ensure!(r.a >= 1, "feasible {{{}}} has activity 0", r.set);
        }
    }
    // Oracle: distinct subsets of feasible sets, counted by size.
    let mut subsets = BTreeSet::new();
    for b in d.feasible() {
        let elems = b.signed();
        for mask in 0u32..1 << elems.len() {
            let s: Vec<i64> = elems.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
            subsets.insert(s);
        }
    }
    let mut oracle = [0u64; 4];
    for s in &subsets {
        oracle[s.len()] += 1;
    }
    let f = independence_fvector(&d)?;
    ensure!(f.counts() == oracle && oracle == [1, 6, 9, 3], "f-vector {f}, oracle {oracle:?}");
    Ok(format!("U(u,-1) = {at_minus_one}; complex f-vector {} not pure; f-vector {f}", complex.fvector))
}

// ---------------------------------------------------------------------------
// 5

fn check_activity(d: &DeltaMatroid) -> Result<(), Failure> {
    let expansion = activity_expansion(d)?;
    ensure!(expansion == shift_v(&upoly(d, UMethod::Direct)?)?, "expansion differs from U(u, v-1) on {d:?}");
    ensure!(expansion.terms().all(|(_, c)| *c >= int(0)), "negative coefficient on {d:?}");
    activity_zero_complex(d)?;
    Ok(())
}

fn c5_activity() -> Check {
    for d in small_valid() {
        check_activity(d)?;
    }
    let random = random_valid(5, 50, 5);
    collect_all(random.par_iter().map(check_activity).collect())?;
    Ok(format!(
        "{} valid with n <= 3 and 50 random at n = 5; coefficients nonnegative; activity-zero sets form complexes",
        small_valid().len()
    ))
}

// ---------------------------------------------------------------------------
// 6

fn c6_fvector() -> Check {
    for d in small_valid() {
        let n = d.ground_size();
        let f = independence_fvector(d)?;
        let reversed = upoly(d, UMethod::Direct)?.reversed_coefficients("u", &[("v", int(0))], n)?;
        let counts: Vec<Rational> = f.counts().iter().map(|&c| int(c as i64)).collect();
        ensure!(reversed == counts, "U(u,0) coefficients differ from f-vector {f} on {d:?}");
        let mut lattice = vec![0u64; n + 1];
        for p in d.lattice_points()? {
            lattice[p.len()] += 1;
        }
        ensure!(lattice == f.counts(), "lattice counts {lattice:?} differ from f-vector {f} on {d:?}");
        ensure!(d.lattice_point_test()?, "lattice-point test fails on {d:?}");
    }
    Ok(format!("{} valid delta-matroids with n <= 3", small_valid().len()))
}

// ---------------------------------------------------------------------------
// 7

#[derive(Clone, Copy, Debug)]
enum Op {
    Contract,
    Delete,
    Project,
}

fn apply(d: &DeltaMatroid, op: Op, i: usize) -> deltamat::Result<DeltaMatroid> {
    match op {
        Op::Contract => d.contract(i),
        Op::Delete => d.delete(i),
        Op::Project => d.project(i),
    }
}

fn check_operations(d: &DeltaMatroid, counts: &mut [usize; 7]) -> Result<(), Failure> {
    let n = d.ground_size();
    let full = (1u32 << n) - 1;
    // Projection by any index set.
    for a in 0..=full {
        let p = d.minor(&[], &[], &indices(a, n))?;
        for s in enumerate_admissible(n - a.count_ones() as usize)? {
            let lifted = expand(&s, full & !a, n);
            ensure!(p.g(&s) == d.g(&lifted), "projection by {a:b} fails at {{{s}}} on {d:?}");
            counts[0] += 1;
        }
    }
    // Minors D/A∖B with A ∪ B̄ independent.
    for a in 0..=full {
        for b in 0..=full {
            if a & b != 0 {
                continue;
            }
            let base = AdmissibleSet::new(n, a, b)?;
            if !d.is_independent(&base) {
                continue;
            }
            let m = d.minor(&indices(a, n), &indices(b, n), &[])?;
            let keep = full & !(a | b);
            for s in enumerate_admissible(n - (a | b).count_ones() as usize)? {
                let lifted = union(n, &expand(&s, keep, n), &base);
                ensure!(
                    m.g(&s) == d.g(&lifted) - d.g(&base),
                    "minor contract {a:b} delete {b:b} fails at {{{s}}} on {d:?}"
                );
                counts[1] += 1;
            }
        }
    }
    // Single-element contraction and deletion away from loops and coloops.
    for i in 1..=n {
        let bit = 1u32 << (i - 1);
        let keep = full & !bit;
        for s in enumerate_admissible(n - 1)? {
            let lifted = expand(&s, keep, n);
            if !d.is_loop(i) {
                let c = d.contract(i)?;
                ensure!(c.g(&s) == d.g(&lifted.with(i as i64)?) - 1, "contraction of {i} fails on {d:?}");
            }
            if !d.is_coloop(i) {
                let del = d.delete(i)?;
                ensure!(del.g(&s) == d.g(&lifted.with(-(i as i64))?) - 1, "deletion of {i} fails on {d:?}");
            }
            counts[1] += 1;
        }
    }
    // Operations at distinct indices commute.
    let ops = [Op::Contract, Op::Delete, Op::Project];
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            for x in ops {
                for y in ops {
                    let j_after = if j > i { j - 1 } else { j };
                    let i_after = if i > j { i - 1 } else { i };
                    let first = apply(&apply(d, x, i)?, y, j_after)?;
                    let second = apply(&apply(d, y, j)?, x, i_after)?;
                    ensure!(first == second, "{x:?} {i} and {y:?} {j} do not commute on {d:?}");
                    counts[2] += 1;
                }
            }
        }
    }
    // Twists.
    for w in signed_permutations(n) {
        let t = d.twist(&w)?;
        let inv = w.inverse();
        for s in enumerate_admissible(n)? {
            ensure!(t.g(&s) == d.g(&inv.apply(&s)?), "twist {:?} fails at {{{s}}} on {d:?}", w.image());
            counts[3] += 1;
        }
    }
    // Upper matroids.
    for window in enumerate_transversals(n)? {
        let m = d.upper_matroid(&window)?;
        for t in window.subsets() {
            let h = (d.g(&t) + t.len() as i64) / 2;
            ensure!(
                m.rank_of(Matroid::signed_mask(n, &t))? as i64 == h,
                "upper matroid on {{{window}}} fails at {{{t}}} on {d:?}"
            );
            counts[4] += 1;
        }
    }
    let greedy = greedy_check(d)?;
    ensure!(greedy.passed(), "greedy fails on {d:?}: {greedy}");
    counts[6] += 1;
    Ok(())
}

fn c7_operations() -> Check {
    let mut counts = [0usize; 7];
    for d in small_valid() {
        check_operations(d, &mut counts)?;
    }
    // Products with n1 + n2 <= 3.
    let valid = small_valid();
    for d1 in valid {
        for d2 in valid {
            let (n1, n2) = (d1.ground_size(), d2.ground_size());
            if n1 + n2 > 3 {
                continue;
            }
            let p = d1.product(d2)?;
            let low = (1u32 << n1) - 1;
            let high = ((1u32 << (n1 + n2)) - 1) & !low;
            for s in enumerate_admissible(n1 + n2)? {
                let expected = d1.g(&s.compact(low)) + d2.g(&s.compact(high));
                ensure!(p.g(&s) == expected, "product fails at {{{s}}} for {d1:?} x {d2:?}");
                counts[5] += 1;
            }
        }
    }
    Ok(format!(
        "projection {}, minors {}, commutation {}, twist {}, upper matroid {}, product {}, greedy {} checks",
        counts[0], counts[1], counts[2], counts[3], counts[4], counts[5], counts[6]
    ))
}

// ---------------------------------------------------------------------------
// 8

/// Every table with `h(∅) = 0` and `0 ≤ h(S) ≤ |S|`.
fn bounded_tables(n: usize) -> Vec<RankTable> {
    let sets = enumerate_admissible(n).expect("small n");
    let sizes: Vec<usize> = sets.iter().map(|s| s.len() + 1).collect();
    let total: usize = sizes.iter().product();
    (0..total)
        .map(|mut code| {
            let values: Vec<i64> = sizes
                .iter()
                .map(|&k| {
                    let v = (code % k) as i64;
                    code /= k;
                    v
                })
                .collect();
            RankTable::from_canonical(n, &values).expect("table length")
        })
        .collect()
}

const SYSTEMS: [HSystem; 3] = [HSystem::Shifted, HSystem::Bouchet, HSystem::Allys];

fn c8_h_systems() -> Check {
    for d in small_valid() {
        let h = d.h_table()?;
        for system in SYSTEMS {
            let report = check_h_axioms(&h, system)?;
            ensure!(report.passed(), "{system:?} fails on {d:?}: {report}");
        }
    }
    let mut passing = [0usize; 3];
    let mut checked = 0usize;
    for n in 0..=2 {
        for table in bounded_tables(n) {
            checked += 1;
            for (k, system) in SYSTEMS.into_iter().enumerate() {
                if !check_h_axioms(&table, system)?.passed() {
                    continue;
                }
                passing[k] += 1;
                let feasible: Vec<AdmissibleSet> =
                    enumerate_transversals(n)?.into_iter().filter(|t| table.get(t) == n as i64).collect();
                let d = DeltaMatroid::new(n, feasible)
                    .map_err(|_| Failure(format!("{system:?} table has no feasible sets: {table:?}")))?;
                ensure!(d.validate(ValidationMethod::Exchange)?.is_valid(), "{system:?} table gives invalid {d:?}");
                ensure!(d.h_table()? == table, "{system:?} table is not h_D: {table:?}");
            }
        }
    }
    Ok(format!(
        "{} valid with n <= 3 pass all systems; of {checked} bounded tables for n <= 2, {} / {} / {} pass shifted / bouchet / allys and each is h_D",
        small_valid().len(),
        passing[0],
        passing[1],
        passing[2]
    ))
}

// ---------------------------------------------------------------------------
// 9

fn c9_closed_forms() -> Check {
    let mut sets = 0usize;
    for m in 0..=3 {
        for r in 0..=m {
            let mat = Matroid::uniform(r, m)?;
            for mode in [FromMatroid::Bases, FromMatroid::Independents] {
                let d = dm_from_matroid(&mat, mode)?;
                for s in enumerate_admissible(m)? {
                    let formula = closed_form_rank(&mat, &s, mode)?;
                    ensure!(formula == d.g(&s), "U({r},{m}) {mode:?}: formula {formula} vs g {} at {{{s}}}", d.g(&s));
                    sets += 1;
                }
            }
            let d = dm_from_matroid(&mat, FromMatroid::Bases)?;
            let formula = closed_form_upoly(&mat, FromMatroid::Bases)?;
            let direct = upoly(&d, UMethod::Direct)?;
            ensure!(formula == direct, "U({r},{m}) bases: formula {formula} vs direct {direct}");
        }
    }
    let argv: Vec<String> = ["deltamat", "closed-form", "--uniform", "1,1", "--mode", "independents", "--compare"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let (code, text) = crate::cli::run(&argv);
    let expected = "U(1,1): formula u + 4 vs direct u + 2";
    ensure!(code == 1, "independents comparison exited {code}: {text}");
    ensure!(text.lines().any(|l| l == expected), "independents comparison printed: {text}");
    Ok(format!("rank formulas match on {sets} (matroid, mode, set) cases; bases U formula matches; reported `{expected}`"))
}

// ---------------------------------------------------------------------------
// 10

fn envelope_fixtures() -> Result<Vec<(String, DeltaMatroid, Matroid)>, Failure> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("free{n}"), DeltaMatroid::free(n)?, Matroid::pair_partition(n)?));
    }
    let signed1 = deltamat::Ground::Signed(1);
    out.push(("coloop".into(), DeltaMatroid::from_signed(1, &[&[1]])?, Matroid::from_labels(signed1, &[&[1]])?));
    out.push(("loop".into(), DeltaMatroid::from_signed(1, &[&[-1]])?, Matroid::from_labels(signed1, &[&[-1]])?));
    let u12 = dm_from_matroid(&Matroid::uniform(1, 2)?, FromMatroid::Bases)?;
    let env = Matroid::from_labels(deltamat::Ground::Signed(2), &[&[1, -2], &[-1, 2], &[1, -1], &[2, -2]])?;
    out.push(("U(1,2) bases".into(), u12, env));
    Ok(out)
}

fn c10_envelopes() -> Check {
    let fixtures = envelope_fixtures()?;
    for (name, d, m) in &fixtures {
        let n = d.ground_size();
        let env = enveloping_check(m, d)?;
        ensure!(env.passed(), "{name}: envelope check fails: {env}");
        let p = indep_gen_poly(d)?;
        let report = is_lorentzian(&p);
        ensure!(report.passed(), "{name}: {p} not Lorentzian: {report}");
        let f = independence_fvector(d)?;
        for r in conjecture_check(f.a_sequence(), n)? {
            if r.inequality == Inequality::Two {
                ensure!(r.holds, "{name}: inequality fails: {r}");
            }
        }
        let ulc = two_var_ulc_check(d)?;
        ensure!(ulc.agrees_with_two && ulc.log_concave(), "{name}: ULC check {ulc:?}");
    }
    let control = uv_poly("w1^2 + w2^2");
    let report = is_lorentzian(&control);
    let inertia = report.hessian_failure.as_ref().map(|h| h.inertia.to_string());
    ensure!(
        !report.passed() && inertia.as_deref() == Some("(2, 0, 0)"),
        "negative control: {report}"
    );
    Ok(format!("{} fixtures pass; w1^2 + w2^2 fails with inertia (2, 0, 0)", fixtures.len()))
}

// ---------------------------------------------------------------------------
// 11

fn linear_form_products(count: u64) -> Vec<MultiPoly> {
    (0..count)
        .map(|i| {
            let mut r = rng(11, i);
            let m = r.random_range(2..=4usize);
            let names: Vec<String> = (0..m).map(|k| format!("w{k}")).collect();
            let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let factors = r.random_range(1..=3);
            let mut p = MultiPoly::one(&name_refs);
            for _ in 0..factors {
                let form = loop {
                    let coeffs: Vec<i64> = (0..m).map(|_| r.random_range(0..=3)).collect();
                    if coeffs.iter().any(|&c| c > 0) {
                        break coeffs;
                    }
                };
                let mut linear = MultiPoly::zero(&name_refs);
                for (k, c) in form.into_iter().enumerate() {
                    let term = &MultiPoly::var(&names[k]) * &MultiPoly::constant(&name_refs, int(c));
                    linear = &linear + &term;
                }
                p = &p * &linear;
            }
            p
        })
        .collect()
}

fn c11_multiaffine() -> Check {
    let mut fixtures = linear_form_products(14);
    for (_, d, _) in envelope_fixtures()? {
        fixtures.push(indep_gen_poly(&d)?);
    }
    for p in &fixtures {
        let before = is_lorentzian(p);
        ensure!(before.passed(), "fixture {p} is not Lorentzian: {before}");
        let m = p.multiaffine_part("w0")?;
        let after = is_lorentzian(&m);
        ensure!(after.passed(), "multiaffine part {m} of {p} fails: {after}");
    }
    Ok(format!("{} Lorentzian fixtures keep the verdict", fixtures.len()))
}

// ---------------------------------------------------------------------------
// 12

fn check_pure_o(d: &DeltaMatroid) -> Result<(), Failure> {
    let f = independence_fvector(d)?;
    let report = pure_o_inequalities(&f);
    ensure!(report.passed(), "f-vector {f} of {d:?}: {report}");
    Ok(())
}

fn c12_pure_o() -> Check {
    for d in small_valid() {
        check_pure_o(d)?;
    }
    let random = random_valid(12, 1000, 4);
    collect_all(random.par_iter().map(check_pure_o).collect())?;
    Ok(format!("{} valid with n <= 3 and 1000 random at n = 4", small_valid().len()))
}

// ---------------------------------------------------------------------------
// 13

fn c13_gf2() -> Check {
    let mut count = 0usize;
    for n in 0..=3usize {
        let upper: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        for code in 0u32..1 << upper.len() {
            let mut rows = vec![vec![0u8; n]; n];
            for (k, &(i, j)) in upper.iter().enumerate() {
                let b = (code >> k & 1) as u8;
                rows[i][j] = b;
                rows[j][i] = b;
            }
            let d = dm_from_gf2(&Gf2SymMatrix::new(rows)?)?;
            for method in [ValidationMethod::Exchange, ValidationMethod::Polytope] {
                let v = d.validate(method)?;
                ensure!(v.is_valid(), "matrix code {code} at n = {n}: {v}");
            }
            count += 1;
        }
    }
    let swap = dm_from_gf2(&Gf2SymMatrix::new(vec![vec![0, 1], vec![1, 0]])?)?;
    let p = interlace(&swap)?;
    ensure!(p == uv_poly("2*v + 2"), "interlace of the swap matrix is {p}");
    Ok(format!("{count} symmetric matrices with n <= 3 give valid delta-matroids; swap matrix interlace {p}"))
}

// ---------------------------------------------------------------------------
// 14

/// CLI invocations compared across worker counts, relative to the fixture directory.
pub const DETERMINISM_COMMANDS: &[&[&str]] = &[
    &["validate", "dex.dm"],
    &["validate", "bad.dm"],
    &["validate", "--method", "exchange", "bad.dm"],
    &["info", "dex.dm"],
    &["rank", "dex.dm", "1 -2"],
    &["rank-table", "dex.dm"],
    &["rank-table", "--h", "dex.dm"],
    &["upoly", "--method", "compare", "dex.dm"],
    &["upoly", "--json", "dex.dm"],
    &["interlace", "swap.gf2"],
    &["fvector", "dex.dm"],
    &["activity", "dex.dm"],
    &["activity", "dex.dm", "--set", "-1 -2"],
    &["complex", "dex.dm"],
    &["minor", "dex.dm", "--contract", "1"],
    &["twist", "dex.dm", "--perm", "2 -1 3"],
    &["product", "dco.dm", "dloop.dm"],
    &["upper-matroid", "dex.dm", "--window", "1 2 3"],
    &["from-matroid", "u12.mat", "--mode", "independents"],
    &["from-gf2", "swap.gf2"],
    &["axioms-g", "dex.dm"],
    &["axioms-h", "dex.dm", "--system", "shifted"],
    &["axioms-h", "dex.dm", "--system", "bouchet"],
    &["axioms-h", "dex.dm", "--system", "allys"],
    &["envelope", "u12.dm", "--check", "u12-envelope.mat"],
    &["envelope", "free2.dm", "--search"],
    &["lorentzian", "dex.dm"],
    &["lorentzian", "dex.dm", "--which", "efls"],
    &["lorentzian", "--poly", "w1^2 + w2^2"],
    &["logconc", "dex.dm"],
    &["closed-form", "--compare"],
    &["closed-form", "--compare", "--mode", "independents"],
    &["scan", "--random", "60", "--size", "4", "--seed", "7"],
];

fn cli_argv(dir: &std::path::Path, threads: usize, args: &[&str]) -> Vec<String> {
    let mut argv = vec!["deltamat".to_string(), "--threads".to_string(), threads.to_string()];
    for a in args {
        let path = dir.join(a);
        if a.contains('.') && !a.contains(' ') && path.exists() {
            argv.push(path.to_string_lossy().into_owned());
        } else {
            argv.push(a.to_string());
        }
    }
    argv
}

fn c14_determinism(base: &[Outcome]) -> Check {
    let dir = std::env::temp_dir().join(format!("deltamat-fixtures-{}", std::process::id()));
    crate::fixtures::write_all(&dir).map_err(|e| Failure(format!("cannot write fixtures: {e}")))?;
    let result = (|| {
        for args in DETERMINISM_COMMANDS {
            let one = crate::cli::run(&cli_argv(&dir, 1, args));
            let four = crate::cli::run(&cli_argv(&dir, 4, args));
            ensure!(one == four, "`{}` differs between 1 and 4 workers", args.join(" "));
            ensure!(one.0 != 2 && one.0 != 3, "`{}` failed to run: {}", args.join(" "), one.1);
        }
        Ok(())
    })();
    let _ = std::fs::remove_dir_all(&dir);
    result?;
    let current = rayon::current_num_threads();
    let other = if current == 1 { 4 } else { 1 };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(other)
        .build()
        .map_err(|e| Failure(format!("thread pool: {e}")))?;
    let rerun = pool.install(run_core);
    let render = |o: &[Outcome]| o.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n");
    ensure!(render(base) == render(&rerun), "suite output differs between {current} and {other} workers");
    Ok(format!(
        "{} commands identical at 1 and 4 workers; criteria 1-13 identical at {current} and {other} workers",
        DETERMINISM_COMMANDS.len()
    ))
}
