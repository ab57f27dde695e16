//! Lorentzian checks by exact Hessian inertia, the independence generating
//! polynomials, and log-concavity inequalities on f-vectors.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::deltamatroid::DeltaMatroid;
use crate::error::{Error, Result};
use crate::ground::bits;
use crate::invariants::independence_fvector;
use crate::poly::MultiPoly;
use crate::Rational;

fn w_names(n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("w{i}")).collect()
}

fn int(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `Σ_{S independent} w0^{2n − |S|} ∏_{i ∈ S̲} w_i`.
pub fn indep_gen_poly(d: &DeltaMatroid) -> Result<MultiPoly> {
    let n = d.ground_size();
    let names = w_names(n);
    let names: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let terms = d.independents()?.into_iter().map(|s| {
        let mut e = vec![0u8; n + 1];
        e[0] = (2 * n - s.len()) as u8;
        for i in bits(s.support()) {
            e[i + 1] = 1;
        }
        (e, Rational::one())
    });
    MultiPoly::from_terms(&names, terms)
}

/// `Σ_{S independent} w0^{|S|} / |S|! · ∏_{i ∉ S̲} w_i`.
pub fn efls_gen_poly(d: &DeltaMatroid) -> Result<MultiPoly> {
    let n = d.ground_size();
    let names = w_names(n);
    let names: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut factorial = vec![Rational::one()];
    for k in 1..=n as u64 {
        let next = factorial.last().unwrap() * int(k);
        factorial.push(next);
    }
    let terms = d.independents()?.into_iter().map(|s| {
        let mut e = vec![0u8; n + 1];
        e[0] = s.len() as u8;
        for i in bits(s.untouched()) {
            e[i + 1] = 1;
        }
        (e, factorial[s.len()].recip())
    });
    MultiPoly::from_terms(&names, terms)
}

/// A failed exchange: `alpha_i > beta_i` with no usable `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub alpha: Vec<u8>,
    pub beta: Vec<u8>,
    pub i: usize,
}

/// M-convexity of the support of a homogeneous polynomial.
pub fn mconvex_support(p: &MultiPoly) -> Result<Option<ExchangeWitness>> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let support: Vec<&[u8]> = p.terms().map(|(e, _)| e).collect();
    let contains = |e: &[u8]| p.terms().any(|(f, _)| f == e);
    for alpha in &support {
        for beta in &support {
            for i in 0..alpha.len() {
                if alpha[i] <= beta[i] {
                    continue;
                }
                let ok = (0..alpha.len()).any(|j| {
                    if alpha[j] >= beta[j] {
                        return false;
                    }
                    let mut gamma = alpha.to_vec();
                    gamma[i] -= 1;
                    gamma[j] += 1;
                    contains(&gamma)
                });
                if !ok {
                    return Ok(Some(ExchangeWitness { alpha: alpha.to_vec(), beta: beta.to_vec(), i }));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InertiaTriple {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.positive, self.negative, self.zero)
    }
}

/// Inertia of a rational symmetric matrix by congruence reduction.
pub fn hessian_inertia(q: &[Vec<Rational>]) -> Result<InertiaTriple> {
    let m = q.len();
    for row in q {
        if row.len() != m {
            return Err(Error::Dimension { expected: m, found: row.len() });
        }
    }
    if (0..m).any(|i| (0..i).any(|j| q[i][j] != q[j][i])) {
        return Err(Error::NotSymmetric);
    }
    let mut a: Vec<Vec<Rational>> = q.to_vec();
    let mut t = InertiaTriple { positive: 0, negative: 0, zero: 0 };
    while !a.is_empty() {
        let k = a.len();
        if let Some(p) = (0..k).find(|&i| !a[i][i].is_zero()) {
            if a[p][p].is_positive() {
                t.positive += 1;
            } else {
                t.negative += 1;
            }
            let pivot = a[p][p].clone();
            let col: Vec<Rational> = (0..k).map(|i| a[i][p].clone()).collect();
            let rest: Vec<usize> = (0..k).filter(|&i| i != p).collect();
            a = rest
                .iter()
                .map(|&i| rest.iter().map(|&j| &a[i][j] - &(&col[i] * &col[j]) / &pivot).collect())
                .collect();
            continue;
        }
        let off = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).find(|&(i, j)| i != j && !a[i][j].is_zero());
        let Some((p, r)) = off else {
            t.zero += k;
            break;
        };
        // Hyperbolic block [[0, b], [b, 0]] has one positive and one negative direction.
        t.positive += 1;
        t.negative += 1;
        let b = a[p][r].clone();
        let rest: Vec<usize> = (0..k).filter(|&i| i != p && i != r).collect();
        a = rest
            .iter()
            .map(|&i| {
                rest.iter()
                    .map(|&j| &a[i][j] - &(&(&a[i][p] * &a[j][r]) + &(&a[i][r] * &a[j][p])) / &b)
                    .collect()
            })
            .collect();
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessianFailure {
    /// Derivative multi-index `α` with `|α| = deg − 2`.
    pub alpha: Vec<u8>,
    pub inertia: InertiaTriple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorentzianReport {
    pub homogeneous: bool,
    pub nonneg_coeffs: bool,
    pub mconvex_support: bool,
    pub mconvex_witness: Option<ExchangeWitness>,
    pub hessian_ok: bool,
    pub hessian_failure: Option<HessianFailure>,
    /// Every Hessian nondegenerate with exactly one positive eigenvalue.
    pub strict: bool,
}

impl LorentzianReport {
    pub fn passed(&self) -> bool {
        self.homogeneous && self.nonneg_coeffs && self.mconvex_support && self.hessian_ok
    }
}

impl fmt::Display for LorentzianReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })?;
        writeln!(f, "homogeneous: {}", yn(self.homogeneous))?;
        writeln!(f, "nonnegative coefficients: {}", yn(self.nonneg_coeffs))?;
        write!(f, "M-convex support: {}", yn(self.mconvex_support))?;
        if let Some(w) = &self.mconvex_witness {
            write!(f, " (alpha {:?}, beta {:?}, i {})", w.alpha, w.beta, w.i)?;
        }
        writeln!(f)?;
        write!(f, "hessians: {}", yn(self.hessian_ok))?;
        if let Some(h) = &self.hessian_failure {
            write!(f, " (alpha {:?}, inertia {})", h.alpha, h.inertia)?;
        }
        writeln!(f)?;
        write!(f, "strict: {}", yn(self.strict))
    }
}

/// Multi-indices of total `d` over `m` variables, lexicographically descending.
fn compositions(m: usize, d: usize) -> Vec<Vec<u8>> {
    if m == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut tail in compositions(m - 1, d - first) {
            tail.insert(0, first as u8);
            out.push(tail);
        }
    }
    out
}

fn multi_factorial(e: &[u8]) -> Rational {
    let mut f = Rational::one();
    for &k in e {
        for j in 2..=k as u64 {
            f *= int(j);
        }
    }
    f
}

/// Degree ≤ 1 and the zero polynomial are Lorentzian when their coefficients
/// are nonnegative.
pub fn is_lorentzian(p: &MultiPoly) -> LorentzianReport {
    let degree = p.homogeneous_degree();
    let homogeneous = degree.is_some();
    let nonneg_coeffs = p.terms().all(|(_, c)| !c.is_negative());
    let (mconvex_support, mconvex_witness) = match mconvex_support(p) {
        Ok(w) => (w.is_none(), w),
        Err(_) => (false, None),
    };
    let mut report = LorentzianReport {
        homogeneous,
        nonneg_coeffs,
        mconvex_support,
        mconvex_witness,
        hessian_ok: homogeneous,
        hessian_failure: None,
        strict: homogeneous,
    };
    let Some(Some(d)) = degree else { return report };
    if d < 2 {
        return report;
    }
    let m = p.vars().len();
    let support: Vec<&[u8]> = p.terms().map(|(e, _)| e).collect();
    for alpha in compositions(m, d - 2) {
        let below = support.iter().any(|e| e.iter().zip(&alpha).all(|(x, y)| x >= y));
        let inertia = if below {
            let h: Vec<Vec<Rational>> = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| {
                            let mut e = alpha.clone();
                            e[i] += 1;
                            e[j] += 1;
                            let c = p.coeff(&e);
                            if c.is_zero() {
                                c
                            } else {
                                c * multi_factorial(&e)
                            }
                        })
                        .collect()
                })
                .collect();
            hessian_inertia(&h).expect("Hessians are symmetric")
        } else {
            InertiaTriple { positive: 0, negative: 0, zero: m }
        };
        if inertia.positive != 1 || inertia.zero != 0 {
            report.strict = false;
        }
        if inertia.positive > 1 && report.hessian_failure.is_none() {
            report.hessian_ok = false;
            report.hessian_failure = Some(HessianFailure { alpha, inertia });
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Inequality {
    /// `a_k² ≥ (n−k+1)/(n−k) · a_{k+1} a_{k−1}`
    One,
    /// `a_k² ≥ (2n−k+1)/(2n−k) · (k+1)/k · a_{k+1} a_{k−1}`
    Two,
    /// `a_k² ≥ (n−k+1)/(n−k) · (k+1)/k · a_{k+1} a_{k−1}`
    Three,
}

impl Inequality {
    pub const ALL: [Inequality; 3] = [Inequality::One, Inequality::Two, Inequality::Three];

    pub fn factor(self, n: usize, k: usize) -> Rational {
        let r = |a: usize, b: usize| Rational::new(BigInt::from(a), BigInt::from(b));
        match self {
            Inequality::One => r(n - k + 1, n - k),
            Inequality::Two => r(2 * n - k + 1, 2 * n - k) * r(k + 1, k),
            Inequality::Three => r(n - k + 1, n - k) * r(k + 1, k),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Inequality::One => "(1)",
            Inequality::Two => "(2)",
            Inequality::Three => "(3)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityResult {
    pub k: usize,
    pub inequality: Inequality,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

impl fmt::Display for InequalityResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} {}: {} >= {} {}",
            self.k,
            self.inequality.label(),
            self.lhs,
            self.rhs,
            if self.holds { "holds" } else { "fails" }
        )
    }
}

/// Evaluates the three inequalities at `k = 1, …, n−1` on `(a_0, …, a_n)`.
pub fn conjecture_check(a: &[u64], n: usize) -> Result<Vec<InequalityResult>> {
    if a.len() != n + 1 {
        return Err(Error::SequenceLength { expected: n + 1, found: a.len() });
    }
    let mut out = Vec::new();
    for k in 1..n {
        let lhs = int(a[k]) * int(a[k]);
        let product = int(a[k + 1]) * int(a[k - 1]);
        for ineq in Inequality::ALL {
            let rhs = ineq.factor(n, k) * &product;
            out.push(InequalityResult { k, inequality: ineq, holds: lhs >= rhs, lhs: lhs.clone(), rhs });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UlcReport {
    /// `c_i = f_{i−1} / C(2n, i)` for `i = 0, …, 2n`.
    pub sequence: Vec<Rational>,
    /// Indices `i` with `c_i² < c_{i−1} c_{i+1}`.
    pub failures: Vec<usize>,
    /// Whether the verdict at each `k = 1, …, n−1` matches inequality (2).
    pub agrees_with_two: bool,
}

impl UlcReport {
    pub fn log_concave(&self) -> bool {
        self.failures.is_empty()
    }
}

fn binomial(n: u64, k: u64) -> Rational {
    let mut r = Rational::one();
    for i in 0..k {
        r = r * int(n - i) / int(i + 1);
    }
    r
}

/// Log-concavity of the normalized two-variable specialization of the
/// independence generating polynomial.
pub fn two_var_ulc_check(d: &DeltaMatroid) -> Result<UlcReport> {
    let n = d.ground_size();
    let f = independence_fvector(d)?;
    let a = f.a_sequence();
    let sequence: Vec<Rational> =
        (0..=2 * n).map(|i| int(a.get(i).copied().unwrap_or(0)) / binomial(2 * n as u64, i as u64)).collect();
    let failures: Vec<usize> = (1..2 * n)
        .filter(|&i| &sequence[i] * &sequence[i] < &sequence[i - 1] * &sequence[i + 1])
        .collect();
    let two = conjecture_check(a, n)?;
    let agrees_with_two = two
        .iter()
        .filter(|r| r.inequality == Inequality::Two)
        .all(|r| r.holds == !failures.contains(&r.k));
    Ok(UlcReport { sequence, failures, agrees_with_two })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }
    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }
    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }
    fn dco() -> DeltaMatroid {
        DeltaMatroid::from_signed(1, &[&[1]]).unwrap()
    }
    fn dex() -> DeltaMatroid {
        DeltaMatroid::from_signed(3, &[&[1, -2, -3], &[-1, 2, -3], &[-1, -2, 3]]).unwrap()
    }

    #[test]
    fn generating_polynomials() {
        let free1 = DeltaMatroid::free(1).unwrap();
        assert_eq!(indep_gen_poly(&free1).unwrap(), p("w0^2 + 2*w0*w1"));
        assert_eq!(indep_gen_poly(&dco()).unwrap(), p("w0^2 + w0*w1"));
        assert_eq!(efls_gen_poly(&dco()).unwrap(), p("w1 + w0"));
        assert_eq!(efls_gen_poly(&free1).unwrap(), p("w1 + 2*w0"));
        let e = efls_gen_poly(&dex()).unwrap();
        assert_eq!(e.coeff_of(&[("w0", 2), ("w3", 1)]), Rational::new(3.into(), 2.into()));
    }

    #[test]
    fn mconvex_examples() {
        assert_eq!(mconvex_support(&p("w0^2 + w0*w1")).unwrap(), None);
        assert!(mconvex_support(&p("w0^2 + w1^2")).unwrap().is_some());
        assert_eq!(mconvex_support(&p("w0*w1")).unwrap(), None);
        assert_eq!(mconvex_support(&p("w0 + w1^2")), Err(Error::NotHomogeneous));
    }

    #[test]
    fn inertia_examples() {
        let t = |p, n, z| InertiaTriple { positive: p, negative: n, zero: z };
        assert_eq!(hessian_inertia(&mat(&[&[2, 2], &[2, 0]])).unwrap(), t(1, 1, 0));
        assert_eq!(hessian_inertia(&mat(&[&[0, 1], &[1, 0]])).unwrap(), t(1, 1, 0));
        assert_eq!(hessian_inertia(&mat(&[&[2, 0], &[0, 2]])).unwrap(), t(2, 0, 0));
        assert_eq!(hessian_inertia(&mat(&[&[1, 1], &[1, 1]])).unwrap(), t(1, 0, 1));
        assert_eq!(hessian_inertia(&mat(&[&[0, 1], &[2, 0]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn lorentzian_examples() {
        assert!(is_lorentzian(&p("w0^2 + 2*w0*w1")).passed());
        let bad = is_lorentzian(&p("w1^2 + w2^2"));
        assert!(!bad.passed());
        assert_eq!(bad.hessian_failure.unwrap().inertia, InertiaTriple { positive: 2, negative: 0, zero: 0 });
        assert!(is_lorentzian(&indep_gen_poly(&DeltaMatroid::free(1).unwrap()).unwrap()).passed());
        assert!(is_lorentzian(&MultiPoly::zero(&["w0"])).passed());
        assert!(!is_lorentzian(&p("w0^2 - w1^2")).passed());
    }

    #[test]
    fn conjecture_examples() {
        let r = conjecture_check(&[1, 6, 9, 3], 3).unwrap();
        let find = |k, i| r.iter().find(|x| x.k == k && x.inequality == i).unwrap().clone();
        let two = find(1, Inequality::Two);
        assert!(two.holds);
        assert_eq!(two.rhs, Rational::new(108.into(), 5.into()));
        let one = find(2, Inequality::One);
        assert_eq!((one.lhs, one.rhs.clone(), one.holds), (q(81), q(36), true));
        let r = conjecture_check(&[1, 1, 1], 2).unwrap();
        let three = r.iter().find(|x| x.inequality == Inequality::Three).unwrap();
        assert_eq!((three.rhs.clone(), three.holds), (q(4), false));
        assert!(conjecture_check(&[1, 1], 2).is_err());
    }

    #[test]
    fn ulc_examples() {
        let r = two_var_ulc_check(&dex()).unwrap();
        let h = |a: i64, b: i64| Rational::new(a.into(), b.into());
        assert_eq!(r.sequence, vec![q(1), q(1), h(3, 5), h(3, 20), q(0), q(0), q(0)]);
        assert!(r.log_concave() && r.agrees_with_two);
        assert_eq!(two_var_ulc_check(&dco()).unwrap().sequence, vec![q(1), h(1, 2), q(0)]);
    }
}
