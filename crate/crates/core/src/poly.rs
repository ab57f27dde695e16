//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are keyed by exponent vectors over an ordered list of variable names.
//! Binary operations merge variable lists by name. Equality is by name too, so
//! `u + 1` over `[u, v]` equals `u + 1` over `[u]`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u8>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        Self { vars: vars.iter().map(|v| v.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(name: &str) -> Self {
        let mut p = Self::zero(&[name]);
        p.terms.insert(vec![1], Rational::one());
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u8>, Rational)>) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::Dimension { expected: vars.len(), found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Polynomial in `(u, v)` from term counts keyed by `(u exponent, v exponent)`.
    pub fn from_uv_counts(counts: BTreeMap<(usize, usize), u64>) -> Self {
        let mut p = Self::zero(&["u", "v"]);
        for ((a, b), c) in counts {
            p.add_term(vec![a as u8, b as u8], Rational::from_integer(BigInt::from(c)));
        }
        p
    }

    fn add_term(&mut self, e: Vec<u8>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u8], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u8]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial given as `(name, exponent)` pairs.
    pub fn coeff_of(&self, monomial: &[(&str, u8)]) -> Rational {
        let mut e = vec![0u8; self.vars.len()];
        for &(name, k) in monomial {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => e[i] = k,
                None if k == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.coeff(&e)
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max()
    }

    /// Degree of every term if all agree; `None` for inhomogeneous input, and
    /// `Some(None)` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Option<Option<usize>> {
        let mut degrees = self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        match degrees.next() {
            None => Some(None),
            Some(d) => degrees.all(|x| x == d).then_some(Some(d)),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Re-expresses `self` over `vars`, which must contain every variable used.
    fn reindexed(&self, vars: &[String]) -> BTreeMap<Vec<u8>, Rational> {
        let map: Vec<usize> =
            self.vars.iter().map(|v| vars.iter().position(|w| w == v).expect("superset of variables")).collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0u8; vars.len()];
                for (i, &k) in e.iter().enumerate() {
                    out[map[i]] = k;
                }
                (out, c.clone())
            })
            .collect()
    }

    fn merged_vars(&self, other: &Self) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    /// Same polynomial over a variable list extended by `names`.
    pub fn with_vars(&self, names: &[&str]) -> Self {
        let extra = Self::zero(names);
        let vars = self.merged_vars(&extra);
        Self { terms: self.reindexed(&vars), vars }
    }

    fn binary(&self, other: &Self, f: impl FnOnce(&mut BTreeMap<Vec<u8>, Rational>, BTreeMap<Vec<u8>, Rational>, &BTreeMap<Vec<u8>, Rational>)) -> Self {
        let vars = self.merged_vars(other);
        let a = self.reindexed(&vars);
        let b = other.reindexed(&vars);
        let mut out = BTreeMap::new();
        f(&mut out, a, &b);
        out.retain(|_, c: &mut Rational| !c.is_zero());
        Self { vars, terms: out }
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        if let Some(d) = self.terms.keys().flat_map(|e| e.iter()).max() {
            if *d as usize * k > u8::MAX as usize {
                return Err(Error::DegreeOverflow);
            }
        }
        let mut acc = Self::one(&vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn pow_signed(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return Err(Error::NegativePower(k));
        }
        self.pow(k as usize)
    }

    /// Composition `p(…, var ↦ q, …)`.
    pub fn substitute(&self, var: &str, q: &Self) -> Result<Self> {
        let idx = self.var_index(var)?;
        let vars = self.merged_vars(q);
        let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let q = Self { terms: q.reindexed(&vars), vars: vars.clone() };
        let mut powers = vec![Self::one(&names)];
        let mut out = Self::zero(&names);
        for (e, c) in self.reindexed(&vars) {
            let k = e[idx] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * &q;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[idx] = 0;
            let mono = Self { vars: vars.clone(), terms: BTreeMap::from([(rest, c)]) };
            out = &out + &(&mono * &powers[k]);
        }
        Ok(out)
    }

    /// Substitutes the rational value `value` for `var`.
    pub fn substitute_value(&self, var: &str, value: &Rational) -> Result<Self> {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        self.substitute(var, &Self::constant(&vars, value.clone()))
    }

    /// Exact value at a point; every variable that occurs needs a value.
    pub fn evaluate(&self, point: &[(&str, Rational)]) -> Result<Rational> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let used = self.terms.keys().any(|e| e[i] > 0);
            match point.iter().find(|(n, _)| n == v) {
                Some((_, x)) => values.push(x.clone()),
                None if !used => values.push(Rational::zero()),
                None => return Err(Error::MissingAssignment(v.clone())),
            }
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Keeps the terms with exponent at most one in every variable other than `exempt`.
    pub fn multiaffine_part(&self, exempt: &str) -> Result<Self> {
        let idx = self.var_index(exempt)?;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().enumerate().all(|(i, &k)| i == idx || k <= 1))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Ok(Self { vars: self.vars.clone(), terms })
    }

    /// Dense coefficients in `var`, lowest degree first, after fixing the other
    /// variables listed in `fixed`.
    pub fn coefficient_vector(&self, var: &str, fixed: &[(&str, Rational)]) -> Result<Vec<Rational>> {
        let idx = self.var_index(var)?;
        let mut p = self.clone();
        for (name, value) in fixed {
            if *name != var && p.vars.iter().any(|v| v == name) {
                p = p.substitute_value(name, value)?;
            }
        }
        let idx_p = p.var_index(var).unwrap_or(idx);
        let mut out: Vec<Rational> = Vec::new();
        for (e, c) in &p.terms {
            if let Some((i, _)) = e.iter().enumerate().find(|&(i, &k)| i != idx_p && k > 0) {
                return Err(Error::ResidualVariable(p.vars[i].clone()));
            }
            let k = e[idx_p] as usize;
            if out.len() <= k {
                out.resize(k + 1, Rational::zero());
            }
            out[k] += c;
        }
        Ok(out)
    }

    /// `(a_0, …, a_n)` with `a_k` the coefficient of `var^{n−k}`.
    pub fn reversed_coefficients(&self, var: &str, fixed: &[(&str, Rational)], n: usize) -> Result<Vec<Rational>> {
        let low_first = self.coefficient_vector(var, fixed)?;
        if low_first.len() > n + 1 {
            return Err(Error::SequenceLength { expected: n + 1, found: low_first.len() });
        }
        Ok((0..=n).map(|k| low_first.get(n - k).cloned().unwrap_or_else(Rational::zero)).collect())
    }

    /// `∂^k / ∂var^k`.
    pub fn derivative(&self, var: &str, k: u8) -> Result<Self> {
        let idx = self.var_index(var)?;
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[idx] < k {
                continue;
            }
            let mut f = Rational::one();
            for j in 0..k {
                f *= Rational::from_integer(BigInt::from(e[idx] - j));
            }
            let mut e2 = e.clone();
            e2[idx] -= k;
            out.insert(e2, c * f);
        }
        Ok(Self { vars: self.vars.clone(), terms: out })
    }

    /// Canonical text, largest exponent vector (lexicographically) first.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    fn by_name(&self) -> BTreeMap<Vec<(&str, u8)>, &Rational> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut key: Vec<(&str, u8)> = self
                    .vars
                    .iter()
                    .zip(e)
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| (v.as_str(), k))
                    .collect();
                key.sort_unstable();
                (key, c)
            })
            .collect()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.by_name() == other.by_name()
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

fn fmt_monomial(vars: &[String], e: &[u8]) -> String {
    let mut parts = Vec::new();
    for (v, &k) in vars.iter().zip(e) {
        match k {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{k}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = fmt_monomial(&self.vars, e);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses the canonical text form. Variables are listed in order of first
    /// appearance.
    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::PolyParse("empty input".to_string()));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut prev = None;
        for (i, ch) in compact.chars().enumerate() {
            let after_caret = prev.replace(ch) == Some('^');
            if (ch == '+' || ch == '-') && !after_caret {
                if !current.is_empty() {
                    pieces.push((negative, core::mem::take(&mut current)));
                } else if i > 0 {
                    return Err(Error::PolyParse(format!("dangling sign in `{text}`")));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(Error::PolyParse(format!("trailing sign in `{text}`")));
        }
        pieces.push((negative, current));

        let mut vars: Vec<String> = Vec::new();
        let mut parsed: Vec<(Vec<(usize, u8)>, Rational)> = Vec::new();
        for (negative, piece) in pieces {
            let mut coeff = Rational::one();
            let mut mono = Vec::new();
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(Error::PolyParse(format!("empty factor in `{piece}`")));
                }
                if factor.chars().next().unwrap().is_ascii_digit() {
                    coeff *= parse_rational(factor)?;
                } else {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, k)) => {
                            let k: u8 = k.parse().map_err(|_| Error::PolyParse(format!("bad exponent `{k}`")))?;
                            (n, k)
                        }
                        None => (factor, 1),
                    };
                    if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                        return Err(Error::PolyParse(format!("bad variable `{name}`")));
                    }
                    let idx = match vars.iter().position(|v| v == name) {
                        Some(i) => i,
                        None => {
                            vars.push(name.to_string());
                            vars.len() - 1
                        }
                    };
                    mono.push((idx, exp));
                }
            }
            if negative {
                coeff = -coeff;
            }
            parsed.push((mono, coeff));
        }
        let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let mut p = Self::zero(&names);
        for (mono, c) in parsed {
            let mut e = vec![0u8; names.len()];
            for (i, k) in mono {
                e[i] = e[i].checked_add(k).ok_or(Error::DegreeOverflow)?;
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::PolyParse(format!("bad coefficient `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, other: &MultiPoly) -> MultiPoly {
        self.binary(other, |out, a, b| {
            *out = a;
            for (e, c) in b {
                *out.entry(e.clone()).or_insert_with(Rational::zero) += c;
            }
        })
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, other: &MultiPoly) -> MultiPoly {
        self + &(-other)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, other: &MultiPoly) -> MultiPoly {
        self.binary(other, |out, a, b| {
            for (ea, ca) in &a {
                for (eb, cb) in b {
                    let e: Vec<u8> = ea
                        .iter()
                        .zip(eb)
                        .map(|(x, y)| x.checked_add(*y).expect("exponent exceeds 255"))
                        .collect();
                    *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
                }
            }
        })
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, other: MultiPoly) -> MultiPoly {
        &self + &other
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, other: MultiPoly) -> MultiPoly {
        &self * &other
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, other: MultiPoly) -> MultiPoly {
        &self - &other
    }
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

    #[test]
    fn arithmetic_examples() {
        let a = p("u + 1");
        assert_eq!((&a * &a).to_string(), "u^2 + 2*u + 1");
        let b = p("u + v + 1");
        assert_eq!(b.pow(2).unwrap().to_string(), "u^2 + 2*u*v + 2*u + v^2 + 2*v + 1");
        assert_eq!(&a + &MultiPoly::zero(&["u"]), a);
        assert_eq!(a.pow_signed(-1), Err(Error::NegativePower(-1)));
    }

    #[test]
    fn substitution_examples() {
        let v = MultiPoly::var("v");
        let shift = &v - &MultiPoly::one(&["v"]);
        assert_eq!(p("v^2").substitute("v", &shift).unwrap().to_string(), "v^2 - 2*v + 1");
        let udex = p("u^3 + 6*u^2 + 9*u + 3*u*v + v^2 + 4*v + 3");
        assert_eq!(udex.substitute("v", &shift).unwrap(), p("u^3 + 6*u^2 + 3*u*v + 6*u + v^2 + 2*v"));
        let u = p("u").with_vars(&["v"]);
        assert_eq!(u.substitute("v", &MultiPoly::zero(&["v"])).unwrap(), p("u"));
        assert!(u.substitute("w", &v).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let udex = p("u^3 + 6*u^2 + 9*u + 3*u*v + v^2 + 4*v + 3");
        assert_eq!(udex.evaluate(&[("u", q(1)), ("v", q(0))]).unwrap(), q(19));
        assert_eq!(p("u + v + 1").evaluate(&[("u", q(0)), ("v", q(0))]).unwrap(), q(1));
        assert_eq!(udex.evaluate(&[("u", q(1))]), Err(Error::MissingAssignment("v".into())));
    }

    #[test]
    fn multiaffine_examples() {
        let f = p("w0*w1^2 + w0^2*w1");
        assert_eq!(f.multiaffine_part("w0").unwrap(), p("w0^2*w1"));
        let g = p("w1*w2").with_vars(&["w0"]);
        assert_eq!(g.multiaffine_part("w0").unwrap(), p("w1*w2"));
        assert_eq!(p("w0^3").multiaffine_part("w0").unwrap(), p("w0^3"));
        assert!(p("w1").multiaffine_part("w0").is_err());
    }

    #[test]
    fn coefficient_vectors() {
        let udex = p("u^3 + 6*u^2 + 9*u + 3*u*v + v^2 + 4*v + 3");
        let zero = [("v", q(0))];
        assert_eq!(udex.coefficient_vector("u", &zero).unwrap(), vec![q(3), q(9), q(6), q(1)]);
        assert_eq!(udex.reversed_coefficients("u", &zero, 3).unwrap(), vec![q(1), q(6), q(9), q(3)]);
        let dco = p("u + v + 1");
        assert_eq!(dco.reversed_coefficients("u", &zero, 1).unwrap(), vec![q(1), q(1)]);
        let one = MultiPoly::one(&["u"]);
        assert_eq!(one.reversed_coefficients("u", &[], 0).unwrap(), vec![q(1)]);
        assert_eq!(udex.coefficient_vector("u", &[]), Err(Error::ResidualVariable("v".into())));
    }

    #[test]
    fn text_form() {
        let udex = p("3 + 9*u + 4*v + 3*u*v + 6*u^2 + v^2 + u^3");
        assert_eq!(udex.to_string(), "u^3 + 6*u^2 + 3*u*v + 9*u + v^2 + 4*v + 3");
        assert_eq!(p("1/2*w0^2*w1 - w2").to_string(), "1/2*w0^2*w1 - w2");
        assert_eq!(MultiPoly::zero(&["u"]).to_string(), "0");
        assert_eq!(p("-u + 1").to_string(), "-u + 1");
        assert!("u +".parse::<MultiPoly>().is_err());
        assert!("2/0*u".parse::<MultiPoly>().is_err());
    }

    #[test]
    fn equality_ignores_variable_order() {
        let a = MultiPoly::from_terms(&["u", "v"], [(vec![1, 0], q(1))]).unwrap();
        let b = MultiPoly::from_terms(&["v", "u"], [(vec![0, 1], q(1))]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, p("v"));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("w0^2 + 2*w0*w1").homogeneous_degree(), Some(Some(2)));
        assert_eq!(p("w0^2 + w1").homogeneous_degree(), None);
        assert_eq!(MultiPoly::zero(&["w0"]).homogeneous_degree(), Some(None));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("u^3 + u*v").derivative("u", 2).unwrap(), p("6*u"));
    }
}
