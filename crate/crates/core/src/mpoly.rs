//! Multivariate polynomials and rational functions over Q(q).
//!
//! Polynomials are distributed: a map from exponent vectors to ScalarQ
//! coefficients, the map order (lexicographic on the exponent vector) doubling
//! as the monomial order for division.  Rational functions reduce by gcd on
//! construction; the gcd is the primitive polynomial-remainder-sequence
//! algorithm, recursing through the variables with content extraction at each
//! level.  Polynomiality certification is exact division, never numeric.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::ScalarQ;

/// Dense-exponent distributed multivariate polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, ScalarQ>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, ScalarQ::one())
    }

    pub fn constant(nvars: usize, c: ScalarQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        MPoly { nvars, terms }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut exp = vec![0u16; nvars];
        exp[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, ScalarQ::one());
        MPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<ScalarQ> {
        if self.is_zero() {
            return Some(ScalarQ::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &ScalarQ)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exp: Vec<u16>, c: ScalarQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    e.insert(s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.negate());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&ScalarQ::from_int(-1))
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        MPoly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term in the lexicographic order.
    pub fn leading(&self) -> Option<(&Vec<u16>, &ScalarQ)> {
        self.terms.iter().next_back()
    }

    /// Exact division; None if the divisor does not divide exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.nvars, d.nvars);
        if d.is_zero() {
            return None;
        }
        let (dl_exp, dl_coeff) = d.leading().unwrap();
        let dl_exp = dl_exp.clone();
        let dl_inv = dl_coeff.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((le, lc)) = rem.leading() {
            let mut texp = Vec::with_capacity(self.nvars);
            for (a, b) in le.iter().zip(&dl_exp) {
                if a < b {
                    return None;
                }
                texp.push(a - b);
            }
            let tcoeff = lc * &dl_inv;
            let t = MPoly { nvars: self.nvars, terms: BTreeMap::from([(texp, tcoeff)]) };
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Evaluate at scalar values for every variable.
    pub fn eval(&self, values: &[ScalarQ]) -> ScalarQ {
        assert_eq!(values.len(), self.nvars);
        let mut acc = ScalarQ::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (idx, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = &term * &values[idx].pow(exp as i64).expect("positive power");
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Substitute one variable by a polynomial in the same variable space.
    pub fn substitute(&self, var: usize, image: &MPoly) -> MPoly {
        assert_eq!(self.nvars, image.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[var] as usize;
            rest[var] = 0;
            let base = MPoly { nvars: self.nvars, terms: BTreeMap::from([(rest, c.clone())]) };
            out = out.add(&base.mul(&image.pow(k)));
        }
        out
    }

    /// Evaluate the polynomial with each variable sent to a polynomial in a
    /// (possibly different) target variable space.
    pub fn eval_into(&self, images: &[MPoly], target_nvars: usize) -> MPoly {
        assert_eq!(images.len(), self.nvars);
        for img in images {
            assert_eq!(img.nvars, target_nvars);
        }
        let mut out = MPoly::zero(target_nvars);
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(target_nvars, c.clone());
            for (idx, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&images[idx].pow(exp as usize));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Exchange two variables.
    pub fn swap_vars(&self, a: usize, b: usize) -> MPoly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            exp.swap(a, b);
            out.add_term(exp, c.clone());
        }
        out
    }

    fn degree_in(&self, var: usize) -> usize {
        self.terms.keys().map(|e| e[var] as usize).max().unwrap_or(0)
    }

    fn highest_active_var(&self) -> Option<usize> {
        (0..self.nvars).rev().find(|&v| self.degree_in(v) > 0)
    }

    /// View as univariate in `var`: coefficient polynomials indexed by the
    /// exponent of `var` (each with that exponent cleared).
    fn as_univariate(&self, var: usize) -> Vec<MPoly> {
        let deg = self.degree_in(var);
        let mut coeffs = vec![Self::zero(self.nvars); deg + 1];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut rest = e.clone();
            rest[var] = 0;
            coeffs[k].add_term(rest, c.clone());
        }
        coeffs
    }

    fn from_univariate(coeffs: &[MPoly], var: usize, nvars: usize) -> MPoly {
        let mut out = Self::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut exp = e.clone();
                exp[var] += k as u16;
                out.add_term(exp, x.clone());
            }
        }
        out
    }

    /// Normalize so the lex-leading coefficient is 1.
    fn monic(&self) -> MPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// gcd by primitive pseudo-remainder sequences, recursing over variables;
    /// the result is monic in the lex order.
    pub fn gcd(&self, other: &Self) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let var = match self.highest_active_var().max(other.highest_active_var()) {
            Some(v) => v,
            None => return MPoly::one(self.nvars), // both nonzero constants
        };
        let fa = self.as_univariate(var);
        let fb = other.as_univariate(var);
        let (ca, pa) = content_and_primitive(&fa, var, self.nvars);
        let (cb, pb) = content_and_primitive(&fb, var, self.nvars);
        let cg = ca.gcd(&cb);
        let mut f = pa;
        let mut g = pb;
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        loop {
            if g.iter().all(MPoly::is_zero) {
                break;
            }
            let r = pseudo_rem_univar(&f, &g, self.nvars);
            f = g;
            let (_, pr) = content_and_primitive(&r, var, self.nvars);
            g = pr;
        }
        let pp = Self::from_univariate(&f, var, self.nvars);
        cg.mul(&pp).monic()
    }
}

/// Content (gcd of coefficients) and primitive part of a univariate view.
fn content_and_primitive(coeffs: &[MPoly], _var: usize, nvars: usize) -> (MPoly, Vec<MPoly>) {
    let mut content = MPoly::zero(nvars);
    for c in coeffs {
        if !c.is_zero() {
            content = content.gcd(c);
        }
    }
    if content.is_zero() {
        return (MPoly::zero(nvars), coeffs.to_vec());
    }
    let primitive = coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                MPoly::zero(nvars)
            } else {
                c.exact_div(&content).expect("content divides")
            }
        })
        .collect();
    (content, primitive)
}

fn trim_univar(mut v: Vec<MPoly>) -> Vec<MPoly> {
    while matches!(v.last(), Some(c) if c.is_zero()) {
        v.pop();
    }
    v
}

/// Pseudo-remainder of univariate views (coefficients in the smaller ring).
fn pseudo_rem_univar(f: &[MPoly], g: &[MPoly], nvars: usize) -> Vec<MPoly> {
    let mut f = trim_univar(f.to_vec());
    let g = trim_univar(g.to_vec());
    assert!(!g.is_empty());
    let dg = g.len() - 1;
    let lg = g.last().unwrap().clone();
    while f.len() >= g.len() && !f.is_empty() {
        let df = f.len() - 1;
        let lf = f.last().unwrap().clone();
        // f := lg * f - lf * g * x^(df-dg)
        let mut next = vec![MPoly::zero(nvars); df + 1];
        for (k, c) in f.iter().enumerate() {
            next[k] = c.mul(&lg);
        }
        for (k, c) in g.iter().enumerate() {
            let idx = k + df - dg;
            next[idx] = next[idx].sub(&c.mul(&lf));
        }
        f = trim_univar(next);
    }
    f
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| {
                        if x == 1 {
                            format!("x{i}")
                        } else {
                            format!("x{i}^{x}")
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c} * {}", vars.join(" "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rational function num/den in canonical gcd-reduced form with a monic
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MRat {
    num: MPoly,
    den: MPoly,
}

impl MRat {
    pub fn from_poly(p: MPoly) -> Self {
        let nvars = p.nvars;
        MRat { num: p, den: MPoly::one(nvars) }
    }

    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Invalid("zero denominator in rational function".into()));
        }
        let mut r = MRat { num, den };
        r.reduce();
        Ok(r)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MPoly::one(self.den.nvars);
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_constant() {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        // monic denominator pins the representative
        let lc = self.den.leading().expect("nonzero denominator").1.clone();
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero");
            self.den = self.den.scale(&inv);
            self.num = self.num.scale(&inv);
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::new(num, den).expect("denominator product nonzero")
    }

    pub fn sub(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::new(num, den).expect("denominator product nonzero")
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("denominator product nonzero")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.num.is_zero() {
            return Err(Error::Invalid("division by zero rational function".into()));
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        MRat { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Certify exact cancellation: the reduced denominator must be the
    /// constant 1.
    pub fn into_polynomial(self) -> Result<MPoly> {
        match self.den.constant_value() {
            Some(c) if c.is_one() => Ok(self.num),
            _ => Err(Error::NotPolynomial(format!(
                "denominator {} survives reduction",
                self.den
            ))),
        }
    }

    /// Exact evaluation at scalar values (the denominator must not vanish).
    pub fn eval(&self, values: &[ScalarQ]) -> Result<ScalarQ> {
        let d = self.den.eval(values);
        if d.is_zero() {
            return Err(Error::PoleAtPoint("rational function pole".into()));
        }
        Ok(&self.num.eval(values) / &d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(i: usize) -> MPoly {
        MPoly::var(2, i)
    }

    #[test]
    fn arithmetic_basics() {
        let x = mu(0);
        let y = mu(1);
        let p = x.add(&y).mul(&x.sub(&y)); // x^2 - y^2
        let expected = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, expected);
        assert_eq!(p.total_degree(), 2);
    }

    #[test]
    fn exact_division() {
        let x = mu(0);
        let y = mu(1);
        let diff_sq = x.sub(&y).pow(2);
        let diff = x.sub(&y);
        assert_eq!(diff_sq.exact_div(&diff), Some(diff.clone()));
        // x^2 + y^2 is not divisible by x - y
        let p = x.mul(&x).add(&y.mul(&y));
        assert_eq!(p.exact_div(&diff), None);
    }

    #[test]
    fn gcd_small_cases() {
        let x = mu(0);
        let y = mu(1);
        let a = x.sub(&y).mul(&x.add(&y));
        let b = x.sub(&y).pow(2);
        let g = a.gcd(&b);
        assert_eq!(g, x.sub(&y).monic());
        // coprime polynomials have constant gcd
        let g = x.gcd(&y);
        assert!(g.is_constant());
        // with ScalarQ coefficients in the mix
        let qa = x.scale(&ScalarQ::q()).sub(&y);
        let prod = qa.mul(&x.add(&y));
        let g = prod.gcd(&qa);
        assert_eq!(g, qa.monic());
    }

    #[test]
    fn rational_reduction_and_polynomiality() {
        let x = mu(0);
        let y = mu(1);
        // (x^2 - y^2)/(x - y) = x + y
        let r = MRat::new(x.mul(&x).sub(&y.mul(&y)), x.sub(&y)).unwrap();
        assert_eq!(r.clone().into_polynomial().unwrap(), x.add(&y));
        // 1/(x - y) is not polynomial
        let r = MRat::new(MPoly::one(2), x.sub(&y)).unwrap();
        assert!(matches!(r.into_polynomial(), Err(Error::NotPolynomial(_))));
    }

    #[test]
    fn rational_sum_cancels() {
        // x/(x-y) + y/(y-x) = (x - y)/(x - y) = 1
        let x = mu(0);
        let y = mu(1);
        let a = MRat::new(x.clone(), x.sub(&y)).unwrap();
        let b = MRat::new(y.clone(), y.sub(&x)).unwrap();
        let s = a.add(&b);
        assert_eq!(s.into_polynomial().unwrap(), MPoly::one(2));
    }

    #[test]
    fn substitution_and_eval() {
        let x = mu(0);
        let y = mu(1);
        let p = x.mul(&x).add(&y); // x^2 + y
        let img = y.scale(&ScalarQ::q()); // x -> q y
        let s = p.substitute(0, &img);
        let expected = y.mul(&y).scale(&(&ScalarQ::q() * &ScalarQ::q())).add(&y);
        assert_eq!(s, expected);
        let v = p.eval(&[ScalarQ::q(), ScalarQ::one()]);
        assert_eq!(v, &(&ScalarQ::q() * &ScalarQ::q()) + &ScalarQ::one());
    }
}
