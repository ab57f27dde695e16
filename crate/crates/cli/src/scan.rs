//! Per-sample invariant sweep used by `scan`.

use deltamat::invariants::{activity_expansion, independence_fvector, pure_o_inequalities, upoly, UMethod};
use deltamat::lorentzian::{conjecture_check, two_var_ulc_check};
use deltamat::rankfn::check_g_axioms;
use deltamat::{DeltaMatroid, MultiPoly, Rational, Result, ValidationMethod};

/// Largest size at which the polytope validator joins the sweep.
pub const POLYTOPE_MAX_N: usize = 4;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SampleReport {
    /// Violations of proven identities.
    pub failures: Vec<String>,
    /// Failed conjectural inequalities, reported only.
    pub conjecture: Vec<String>,
}

impl SampleReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_sample(d: &DeltaMatroid) -> Result<SampleReport> {
    let mut r = SampleReport::default();
    let n = d.ground_size();
    let exchange = d.validate(ValidationMethod::Exchange)?;
    if !exchange.is_valid() {
        r.failures.push(format!("invalid: {exchange}"));
        return Ok(r);
    }
    if n <= POLYTOPE_MAX_N && !d.validate(ValidationMethod::Polytope)?.is_valid() {
        r.failures.push("validators disagree".into());
    }
    let direct = upoly(d, UMethod::Direct)?;
    if direct != upoly(d, UMethod::Recursive)? {
        r.failures.push("direct and recursive U differ".into());
    }
    let shifted = &MultiPoly::var("v") - &MultiPoly::one(&["v"]);
    let expansion = activity_expansion(d)?;
    if expansion != direct.substitute("v", &shifted)? {
        r.failures.push("activity expansion differs from U(u, v-1)".into());
    }
    if expansion.terms().any(|(_, c)| *c < Rational::from_integer(0.into())) {
        r.failures.push("negative activity coefficient".into());
    }
    let f = independence_fvector(d)?;
    let zero = Rational::from_integer(0.into());
    let reversed = direct.reversed_coefficients("u", &[("v", zero)], n)?;
    let counts: Vec<Rational> = f.counts().iter().map(|&c| Rational::from_integer(c.into())).collect();
    if reversed != counts {
        r.failures.push("f-vector differs from U(u, 0)".into());
    }
    let pure_o = pure_o_inequalities(&f);
    if !pure_o.passed() {
        r.failures.push(format!("pure-O: {pure_o}"));
    }
    if !check_g_axioms(&d.rank_table()?)?.passed() {
        r.failures.push("rank function violates the g-axioms".into());
    }
    let ulc = two_var_ulc_check(d)?;
    if !ulc.agrees_with_two {
        r.failures.push("ULC verdict disagrees with inequality (2)".into());
    }
    for res in conjecture_check(f.a_sequence(), n)? {
        if !res.holds {
            r.conjecture.push(res.to_string());
        }
    }
    Ok(r)
}
