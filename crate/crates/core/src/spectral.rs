//! Quantum eigenvalues and the quantum Harish-Chandra morphism.
//!
//! Central elements expressed in the e-basis map to symmetric polynomials in
//! the eigenvalues mu_1..mu_m through e_k |-> q^-k e_k(mu).  Power sums carry
//! explicit weight parameterizations (even, hatted and super variants) whose
//! polynomiality is certified by exact division.  Characters evaluate these
//! polynomials at the eigenvalue values attached to a partition.

use std::fmt;

use serde_json::{json, Value};

use crate::charmap::{elementary, CentralElement};
use crate::error::{Error, Result};
use crate::linalg;
use crate::mpoly::MPoly;
use crate::ncalg::{NCPoly, Reducer};
use crate::scalar::ScalarQ;
use crate::symmetry::Symmetry;

/// Symmetric polynomial in the even eigenvalues mu_1..mu_m and, in the super
/// case, the odd eigenvalues nu_1..nu_n (variables m..m+n-1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    mu_count: usize,
    nu_count: usize,
    poly: MPoly,
}

impl SymPoly {
    pub fn from_poly(mu_count: usize, nu_count: usize, poly: MPoly) -> Self {
        assert_eq!(poly.nvars(), mu_count + nu_count);
        SymPoly { mu_count, nu_count, poly }
    }

    pub fn constant(mu_count: usize, nu_count: usize, c: ScalarQ) -> Self {
        SymPoly { mu_count, nu_count, poly: MPoly::constant(mu_count + nu_count, c) }
    }

    pub fn mu_count(&self) -> usize {
        self.mu_count
    }

    pub fn nu_count(&self) -> usize {
        self.nu_count
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.mu_count, self.nu_count), (other.mu_count, other.nu_count));
        SymPoly { mu_count: self.mu_count, nu_count: self.nu_count, poly: self.poly.add(&other.poly) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.mu_count, self.nu_count), (other.mu_count, other.nu_count));
        SymPoly { mu_count: self.mu_count, nu_count: self.nu_count, poly: self.poly.sub(&other.poly) }
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        SymPoly { mu_count: self.mu_count, nu_count: self.nu_count, poly: self.poly.scale(c) }
    }

    /// Invariance under every adjacent transposition inside the mu block and
    /// inside the nu block.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.mu_count.saturating_sub(1) {
            if self.poly.swap_vars(i, i + 1) != self.poly {
                return false;
            }
        }
        for j in 0..self.nu_count.saturating_sub(1) {
            let a = self.mu_count + j;
            if self.poly.swap_vars(a, a + 1) != self.poly {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .poly
            .terms()
            .map(|(e, c)| json!({ "powers": e, "coeff": c.to_string() }))
            .collect();
        json!({ "mu_vars": self.mu_count, "nu_vars": self.nu_count, "terms": terms })
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .poly
            .terms()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(idx, &x)| {
                        let name = if idx < self.mu_count {
                            format!("mu{}", idx + 1)
                        } else {
                            format!("nu{}", idx - self.mu_count + 1)
                        };
                        if x == 1 {
                            name
                        } else {
                            format!("{name}^{x}")
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

/// Commutative polynomial in the abstract symbols e_1..e_m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvBasisElement {
    m: usize,
    poly: MPoly,
}

impl EvBasisElement {
    pub fn from_poly(m: usize, poly: MPoly) -> Self {
        assert_eq!(poly.nvars(), m);
        EvBasisElement { m, poly }
    }

    pub fn monomial(m: usize, exponents: &[usize], coeff: ScalarQ) -> Self {
        assert_eq!(exponents.len(), m);
        let mut poly = MPoly::constant(m, coeff);
        for (k, &e) in exponents.iter().enumerate() {
            poly = poly.mul(&MPoly::var(m, k).pow(e));
        }
        EvBasisElement { m, poly }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }
}

impl fmt::Display for EvBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .poly
            .terms()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(idx, &x)| {
                        if x == 1 {
                            format!("e{}", idx + 1)
                        } else {
                            format!("e{}^{x}", idx + 1)
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

/// Weakly decreasing list of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    /// Defining-module partition (1, 0, ..., 0) of length m.
    pub fn defining(m: usize) -> Self {
        let mut v = vec![0; m];
        if m > 0 {
            v[0] = 1;
        }
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Parts padded with zeros to length m; errors if the partition is
    /// longer than m.
    pub fn padded(&self, m: usize) -> Result<Vec<usize>> {
        if self.0.len() > m {
            return Err(Error::Invalid(format!(
                "partition of length {} exceeds bi-rank {m}",
                self.0.len()
            )));
        }
        let mut v = self.0.clone();
        v.resize(m, 0);
        Ok(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn var(m: usize, n: usize, idx: usize) -> MPoly {
    MPoly::var(m + n, idx)
}

/// Even weight d_i (variables mu) as an unreduced numerator/denominator
/// pair, optionally with the hatted shift term and the super factors against
/// the nu variables.
fn mu_weight(i: usize, m: usize, n: usize, hatted: bool) -> (MPoly, MPoly) {
    let nv = m + n;
    let mut num = MPoly::constant(nv, ScalarQ::q_pow(-1));
    let mut den = MPoly::one(nv);
    let qm2 = ScalarQ::q_pow(-2);
    let q2 = ScalarQ::q_pow(2);
    let qm1 = ScalarQ::q_pow(-1);
    for p in 0..m {
        if p == i {
            continue;
        }
        let mut factor = var(m, n, i).sub(&var(m, n, p).scale(&qm2));
        if hatted {
            factor = factor.sub(&MPoly::constant(nv, qm1.clone()));
        }
        num = num.mul(&factor);
        den = den.mul(&var(m, n, i).sub(&var(m, n, p)));
    }
    for j in 0..n {
        num = num.mul(&var(m, n, i).sub(&var(m, n, m + j).scale(&q2)));
        den = den.mul(&var(m, n, i).sub(&var(m, n, m + j)));
    }
    (num, den)
}

/// Odd weight f_j of the super parameterization, unreduced.
fn nu_weight(j: usize, m: usize, n: usize) -> (MPoly, MPoly) {
    let nv = m + n;
    let mut num = MPoly::constant(nv, ScalarQ::q().negate());
    let mut den = MPoly::one(nv);
    let q2 = ScalarQ::q_pow(2);
    let qm2 = ScalarQ::q_pow(-2);
    for p in 0..n {
        if p == j {
            continue;
        }
        num = num.mul(&var(m, n, m + j).sub(&var(m, n, m + p).scale(&q2)));
        den = den.mul(&var(m, n, m + j).sub(&var(m, n, m + p)));
    }
    for i in 0..m {
        num = num.mul(&var(m, n, m + j).sub(&var(m, n, i).scale(&qm2)));
        den = den.mul(&var(m, n, m + j).sub(&var(m, n, i)));
    }
    (num, den)
}

fn powersum_general(k: usize, m: usize, n: usize, hatted: bool) -> Result<SymPoly> {
    if m + n == 0 {
        return Err(Error::Invalid("need at least one eigenvalue variable".into()));
    }
    if hatted && n > 0 {
        return Err(Error::Invalid("hatted super power sums are not parameterized".into()));
    }
    let nv = m + n;
    // accumulate over the running common denominator; cancellation is
    // certified by one exact division at the end, never assumed
    let mut acc_num = MPoly::zero(nv);
    let mut acc_den = MPoly::one(nv);
    let absorb = |acc_num: &mut MPoly, acc_den: &mut MPoly, num: MPoly, den: MPoly| {
        *acc_num = acc_num.mul(&den).add(&num.mul(acc_den));
        *acc_den = acc_den.mul(&den);
    };
    for i in 0..m {
        let (wn, wd) = mu_weight(i, m, n, hatted);
        absorb(&mut acc_num, &mut acc_den, var(m, n, i).pow(k).mul(&wn), wd);
    }
    for j in 0..n {
        let (wn, wd) = nu_weight(j, m, n);
        absorb(&mut acc_num, &mut acc_den, var(m, n, m + j).pow(k).mul(&wn), wd);
    }
    let poly = acc_num.exact_div(&acc_den).ok_or_else(|| {
        Error::NotPolynomial(format!("power sum k={k}, m={m}, n={n} fails exact division"))
    })?;
    Ok(SymPoly { mu_count: m, nu_count: n, poly })
}

/// p_k(L) = sum mu_i^k d_i with d_i = q^-1 prod (mu_i - q^-2 mu_p)/(mu_i - mu_p).
/// k = 0 is admitted and evaluates the quantum trace of the identity.
pub fn powersum_sym(k: usize, m: usize) -> Result<SymPoly> {
    powersum_general(k, m, 0, false)
}

/// p_k(L-hat) = sum muhat_i^k dhat_i with the shifted weight numerators.
pub fn powersum_hat_sym(k: usize, m: usize) -> Result<SymPoly> {
    powersum_general(k, m, 0, true)
}

/// Super power sum over mu_1..mu_m, nu_1..nu_n; supersymmetric in the
/// variables q^-1 mu and q nu.
pub fn super_powersum(k: usize, m: usize, n: usize) -> Result<SymPoly> {
    powersum_general(k, m, n, false)
}

/// The plain power-sum symmetric polynomial sum_i x_i^k in m variables
/// (used by character evaluation, where the weights are already absorbed in
/// the eigenvalue values q -> 1 limits are taken of).
pub fn power_sum_plain(k: usize, m: usize) -> SymPoly {
    let mut poly = MPoly::zero(m);
    for i in 0..m {
        poly = poly.add(&MPoly::var(m, i).pow(k));
    }
    SymPoly { mu_count: m, nu_count: 0, poly }
}

/// Weight d_i (or dhat_i) evaluated at numeric eigenvalue values.
pub fn eigen_weight_at(i: usize, values: &[ScalarQ], hatted: bool) -> Result<ScalarQ> {
    let m = values.len();
    if i >= m {
        return Err(Error::IndexOutOfRange(format!("weight index {i} of {m}")));
    }
    let (num, den) = mu_weight(i, m, 0, hatted);
    let d = den.eval(values);
    if d.is_zero() {
        return Err(Error::PoleAtPoint("coincident eigenvalue values".into()));
    }
    Ok(&num.eval(values) / &d)
}

/// Elementary symmetric polynomial of degree k in m variables.
pub fn elem_sym(k: usize, m: usize) -> MPoly {
    let mut out = MPoly::zero(m);
    if k > m {
        return out;
    }
    if k == 0 {
        return MPoly::one(m);
    }
    // iterate k-subsets of 0..m
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut term = MPoly::one(m);
        for &idx in &subset {
            term = term.mul(&MPoly::var(m, idx));
        }
        out = out.add(&term);
        // next subset in lexicographic order
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if subset[pos] < m - (k - pos) {
                subset[pos] += 1;
                for p in pos + 1..k {
                    subset[p] = subset[p - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Quantum Harish-Chandra morphism: substitute e_k |-> q^-k e_k(mu_1..mu_m).
pub fn hc_morphism(p: &EvBasisElement) -> SymPoly {
    let m = p.m;
    let images: Vec<MPoly> = (1..=m)
        .map(|k| elem_sym(k, m).scale(&ScalarQ::q_pow(-(k as i64))))
        .collect();
    SymPoly { mu_count: m, nu_count: 0, poly: p.poly.eval_into(&images, m) }
}

/// Substitute mu_i = 1 - (q - q^-1) x_i, turning a polynomial in the plain
/// eigenvalues into one in the hatted eigenvalues.
pub fn zamena_substitute(z: &SymPoly) -> SymPoly {
    assert_eq!(z.nu_count, 0);
    let m = z.mu_count;
    let kappa = ScalarQ::q_minus_qinv();
    let images: Vec<MPoly> = (0..m)
        .map(|i| MPoly::one(m).sub(&MPoly::var(m, i).scale(&kappa)))
        .collect();
    SymPoly { mu_count: m, nu_count: 0, poly: z.poly.eval_into(&images, m) }
}

/// Express a central element as a polynomial in e_1(L)..e_m(L): the unique
/// combination of reduced e-monomials matching the reduced normal form.
pub fn express_in_e_basis(
    z: &CentralElement,
    sym: &Symmetry,
    reducer: &Reducer,
    max_deg: usize,
) -> Result<EvBasisElement> {
    let m = sym
        .even_birank()
        .ok_or_else(|| Error::Invalid("e-basis expression needs an even bi-rank".into()))?;
    let nf_z = reducer.reduce(&z.expr)?;
    let e_elems: Vec<NCPoly> = (1..=m)
        .map(|k| elementary(sym, z.variant, k).map(|c| c.expr))
        .collect::<Result<_>>()?;
    // all exponent vectors with weighted degree sum k * a_k <= max_deg
    let mut exponents: Vec<Vec<usize>> = Vec::new();
    let mut stack = vec![(vec![0usize; 0], 0usize)];
    while let Some((prefix, used)) = stack.pop() {
        if prefix.len() == m {
            exponents.push(prefix);
            continue;
        }
        let k = prefix.len() + 1; // weight of e_k
        let mut a = 0;
        while used + k * a <= max_deg {
            let mut next = prefix.clone();
            next.push(a);
            stack.push((next, used + k * a));
            a += 1;
        }
    }
    exponents.sort();
    // normal forms of the monomials
    let mut columns: Vec<NCPoly> = Vec::with_capacity(exponents.len());
    for alpha in &exponents {
        let mut prod = NCPoly::one();
        for (idx, &a) in alpha.iter().enumerate() {
            for _ in 0..a {
                prod = prod.mul(&e_elems[idx]);
            }
        }
        columns.push(reducer.reduce(&prod)?);
    }
    // assemble the linear system over the union of support words
    let mut words = std::collections::BTreeSet::new();
    for c in columns.iter().chain(std::iter::once(&nf_z)) {
        for (w, _) in c.terms() {
            words.insert(w.clone());
        }
    }
    let words: Vec<_> = words.into_iter().collect();
    let col_vectors: Vec<Vec<ScalarQ>> = columns
        .iter()
        .map(|c| words.iter().map(|w| c.coeff(w)).collect())
        .collect();
    let rhs: Vec<ScalarQ> = words.iter().map(|w| nf_z.coeff(w)).collect();
    let solution =
        linalg::solve_linear_combination(&col_vectors, &rhs).ok_or(Error::NotInSpan(max_deg))?;
    let mut poly = MPoly::zero(m);
    for (alpha, c) in exponents.iter().zip(solution) {
        if c.is_zero() {
            continue;
        }
        let mut mono = MPoly::constant(m, c);
        for (idx, &a) in alpha.iter().enumerate() {
            mono = mono.mul(&MPoly::var(m, idx).pow(a));
        }
        poly = poly.add(&mono);
    }
    Ok(EvBasisElement { m, poly })
}

/// Eigenvalue characters mu_i(lambda) = q^(-2 (lambda_i + m - i)).
pub fn mu_char(lambda: &Partition, m: usize) -> Result<Vec<ScalarQ>> {
    let parts = lambda.padded(m)?;
    Ok((1..=m)
        .map(|i| ScalarQ::q_pow(-2 * (parts[i - 1] + m - i) as i64))
        .collect())
}

/// Hatted characters muhat_i(lambda) = q^-(s) s_q with s = lambda_i + m - i.
pub fn muhat_char(lambda: &Partition, m: usize) -> Result<Vec<ScalarQ>> {
    let parts = lambda.padded(m)?;
    Ok((1..=m)
        .map(|i| {
            let s = (parts[i - 1] + m - i) as i64;
            &ScalarQ::q_pow(-s) * &ScalarQ::qint(s)
        })
        .collect())
}

/// Evaluate a symmetric polynomial at eigenvalue character values.  Odd
/// (nu) variables are rejected: their characters are not parameterized.
pub fn character(z: &SymPoly, values: &[ScalarQ]) -> Result<ScalarQ> {
    if z.nu_count > 0 {
        return Err(Error::Invalid(
            "characters of the odd eigenvalues nu are not available".into(),
        ));
    }
    if values.len() != z.mu_count {
        return Err(Error::Invalid(format!(
            "expected {} eigenvalue values, got {}",
            z.mu_count,
            values.len()
        )));
    }
    Ok(z.poly.eval(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmap::power_sum;
    use crate::ncalg::{RelationSet, Variant};
    use num::{BigInt, BigRational, One};

    #[test]
    fn powersum_m1_examples() {
        for k in 0..=4usize {
            let p = powersum_sym(k, 1).unwrap();
            let expected = SymPoly::from_poly(
                1,
                0,
                MPoly::var(1, 0).pow(k).scale(&ScalarQ::q_pow(-1)),
            );
            assert_eq!(p, expected, "k = {k}");
            let ph = powersum_hat_sym(k, 1).unwrap();
            assert_eq!(ph, expected, "hatted k = {k}");
        }
    }

    #[test]
    fn powersum_m2_k1_matches_hc_of_e1() {
        let p = powersum_sym(1, 2).unwrap();
        let e1 = EvBasisElement::monomial(2, &[1, 0], ScalarQ::one());
        let via_hc = hc_morphism(&e1);
        assert_eq!(p, via_hc);
        // and explicitly q^-1 (mu1 + mu2)
        let expected = MPoly::var(2, 0).add(&MPoly::var(2, 1)).scale(&ScalarQ::q_pow(-1));
        assert_eq!(p.poly(), &expected);
    }

    #[test]
    fn powersum_k0_is_quantum_dimension() {
        // sum d_i = q^-m m_q, the R-trace of the identity
        for m in 1..=3usize {
            let p = powersum_sym(0, m).unwrap();
            let expected = &ScalarQ::q_pow(-(m as i64)) * &ScalarQ::qint(m as i64);
            assert_eq!(p.poly().constant_value(), Some(expected), "m = {m}");
        }
    }

    #[test]
    fn powersums_are_polynomial_and_symmetric() {
        for m in 1..=4usize {
            for k in 0..=4usize {
                let p = powersum_sym(k, m).unwrap();
                assert!(p.is_symmetric(), "p_{k} over {m} variables");
                let ph = powersum_hat_sym(k, m).unwrap();
                assert!(ph.is_symmetric(), "hatted p_{k} over {m} variables");
            }
        }
    }

    #[test]
    fn hatted_consistent_with_zamena() {
        // substituting muhat_i = (1 - mu_i)/(q - q^-1) into p-hat_k equals
        // kappa^-k sum_j binom(k, j) (-1)^j p_j
        let kappa = ScalarQ::q_minus_qinv();
        let kappa_inv = kappa.inv().unwrap();
        for m in 1..=3usize {
            for k in 1..=3usize {
                let phat = powersum_hat_sym(k, m).unwrap();
                let images: Vec<MPoly> = (0..m)
                    .map(|i| {
                        MPoly::one(m)
                            .sub(&MPoly::var(m, i))
                            .scale(&kappa_inv)
                    })
                    .collect();
                let lhs = phat.poly().eval_into(&images, m);
                let mut rhs = MPoly::zero(m);
                let mut binom = BigInt::one();
                for j in 0..=k {
                    if j > 0 {
                        binom = binom * BigInt::from((k - j + 1) as i64) / BigInt::from(j as i64);
                    }
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    let coeff = &ScalarQ::from_bigint(binom.clone() * BigInt::from(sign))
                        * &kappa_inv.pow(k as i64).unwrap();
                    rhs = rhs.add(&powersum_sym(j, m).unwrap().poly().scale(&coeff));
                }
                assert_eq!(lhs, rhs, "m = {m}, k = {k}");
            }
        }
    }

    #[test]
    fn unhatted_weights_tend_to_one_at_q1() {
        // d_i -> 1 as q -> 1 at distinct numeric eigenvalues
        let values = [ScalarQ::from_int(5), ScalarQ::from_int(3), ScalarQ::from_int(2)];
        for i in 0..3 {
            let w = eigen_weight_at(i, &values, false).unwrap();
            assert_eq!(w.limit_q1().unwrap(), BigRational::one(), "d_{i}");
        }
    }

    #[test]
    fn hatted_weights_degenerate_to_classical_pp_weights() {
        // dhat_i -> prod_(p != i) (1 - 1/(x_i - x_p)) as q -> 1
        let values = [ScalarQ::from_int(5), ScalarQ::from_int(3), ScalarQ::from_int(0)];
        let ints = [5i64, 3, 0];
        for i in 0..3 {
            let w = eigen_weight_at(i, &values, true).unwrap();
            let mut expected = BigRational::one();
            for p in 0..3 {
                if p != i {
                    let diff = BigRational::from(BigInt::from(ints[i] - ints[p]));
                    expected *= BigRational::one() - diff.recip();
                }
            }
            assert_eq!(w.limit_q1().unwrap(), expected, "dhat_{i}");
        }
    }

    #[test]
    fn hc_morphism_examples() {
        let one = EvBasisElement::monomial(2, &[0, 0], ScalarQ::one());
        assert_eq!(hc_morphism(&one).poly(), &MPoly::one(2));
        let e1 = EvBasisElement::monomial(2, &[1, 0], ScalarQ::one());
        let img = hc_morphism(&e1);
        let expected = MPoly::var(2, 0).add(&MPoly::var(2, 1)).scale(&ScalarQ::q_pow(-1));
        assert_eq!(img.poly(), &expected);
        for m in 1..=3usize {
            let mut exps = vec![0; m];
            exps[m - 1] = 1;
            let em = EvBasisElement::monomial(m, &exps, ScalarQ::one());
            let img = hc_morphism(&em);
            let mut expected = MPoly::constant(m, ScalarQ::q_pow(-(m as i64)));
            for i in 0..m {
                expected = expected.mul(&MPoly::var(m, i));
            }
            assert_eq!(img.poly(), &expected, "e_m for m = {m}");
        }
    }

    #[test]
    fn express_p2_in_e_basis_dj2() {
        // frozen regression, hand-derived through the eigenvalue route:
        // p_2 = q e_1^2 - (q + q^-1) e_2
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 4);
        let p2 = power_sum(&sym, Variant::Re, 2);
        let expr = express_in_e_basis(&p2, &sym, &red, 2).unwrap();
        let expected = EvBasisElement::monomial(2, &[2, 0], ScalarQ::q()).poly().add(
            EvBasisElement::monomial(2, &[0, 1], ScalarQ::qint(2).negate()).poly(),
        );
        assert_eq!(expr.poly(), &expected);
        // trivial directions: e_2 -> e_2, p_1 -> e_1
        let e2 = elementary(&sym, Variant::Re, 2).unwrap();
        let expr = express_in_e_basis(&e2, &sym, &red, 2).unwrap();
        assert_eq!(
            expr,
            EvBasisElement::monomial(2, &[0, 1], ScalarQ::one())
        );
        let p1 = power_sum(&sym, Variant::Re, 1);
        let expr = express_in_e_basis(&p1, &sym, &red, 2).unwrap();
        assert_eq!(
            expr,
            EvBasisElement::monomial(2, &[1, 0], ScalarQ::one())
        );
    }

    #[test]
    fn express_consistency_with_powersums() {
        // hc(express(p_k)) equals the parameterized power sum, k <= 3
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 4);
        for k in 1..=3usize {
            let pk = power_sum(&sym, Variant::Re, k);
            let expr = express_in_e_basis(&pk, &sym, &red, k).unwrap();
            assert_eq!(hc_morphism(&expr), powersum_sym(k, 2).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn not_in_span_is_detected() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 4);
        // p_3 has degree 3; restricting monomials to degree <= 1 must fail
        let p3 = power_sum(&sym, Variant::Re, 3);
        assert!(matches!(
            express_in_e_basis(&p3, &sym, &red, 1),
            Err(Error::NotInSpan(1))
        ));
    }

    #[test]
    fn character_values() {
        // mu(0,0) = (q^-2, 1); character of hc(e_1) is q^-3 + q^-1
        let lam = Partition::new(vec![0, 0]).unwrap();
        let mu = mu_char(&lam, 2).unwrap();
        assert_eq!(mu, vec![ScalarQ::q_pow(-2), ScalarQ::one()]);
        let e1 = EvBasisElement::monomial(2, &[1, 0], ScalarQ::one());
        let val = character(&hc_morphism(&e1), &mu).unwrap();
        assert_eq!(val, &ScalarQ::q_pow(-3) + &ScalarQ::q_pow(-1));
        // lambda = (1,0): mu = (q^-4, 1)
        let lam = Partition::new(vec![1, 0]).unwrap();
        let mu = mu_char(&lam, 2).unwrap();
        assert_eq!(mu, vec![ScalarQ::q_pow(-4), ScalarQ::one()]);
        // constants evaluate to themselves
        let one = SymPoly::constant(2, 0, ScalarQ::one());
        assert_eq!(character(&one, &mu).unwrap(), ScalarQ::one());
    }

    #[test]
    fn muhat_char_values() {
        let lam = Partition::new(vec![1, 0]).unwrap();
        let hat = muhat_char(&lam, 2).unwrap();
        // s = (2, 0): muhat = (q^-2 2_q, 0); the closed form matches
        // (1 - q^(-2s))/(q - q^-1)
        let kappa = ScalarQ::q_minus_qinv();
        for (i, s) in [(0usize, 2i64), (1, 0)] {
            let closed = &(&ScalarQ::one() - &ScalarQ::q_pow(-2 * s)) / &kappa;
            assert_eq!(hat[i], closed, "s = {s}");
        }
        // q -> 1 limit recovers the shifted parts lambda_i + m - i
        for (i, s) in [(0usize, 2i64), (1, 0)] {
            assert_eq!(
                hat[i].limit_q1().unwrap(),
                BigRational::from(BigInt::from(s))
            );
        }
        // characters are pairwise distinct
        assert_ne!(hat[0], hat[1]);
    }

    #[test]
    fn classical_limit_of_plain_power_sums() {
        // limit of sum muhat_i(lambda)^k is sum (lambda_i + m - i)^k
        let lam = Partition::new(vec![1, 0]).unwrap();
        let hat = muhat_char(&lam, 2).unwrap();
        for k in 1..=3usize {
            let val = character(&power_sum_plain(k, 2), &hat).unwrap();
            let expected = BigRational::from(BigInt::from(2i64.pow(k as u32)));
            assert_eq!(val.limit_q1().unwrap(), expected, "k = {k}");
        }
    }

    #[test]
    fn character_composition_consistency() {
        // evaluating the expanded polynomial equals the direct weighted sum
        for lam_parts in [vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0]] {
            let lam = Partition::new(lam_parts).unwrap();
            let mu = mu_char(&lam, 2).unwrap();
            for k in 1..=3usize {
                let poly_val = character(&powersum_sym(k, 2).unwrap(), &mu).unwrap();
                let mut direct = ScalarQ::zero();
                for i in 0..2 {
                    let w = eigen_weight_at(i, &mu, false).unwrap();
                    direct = &direct + &(&mu[i].pow(k as i64).unwrap() * &w);
                }
                assert_eq!(poly_val, direct, "lambda = {lam}, k = {k}");
            }
        }
    }

    #[test]
    fn newton_cross_check_dj2() {
        // character of express(p_2) pushed through hc equals the character of
        // the parameterized power sum
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 4);
        let p2 = power_sum(&sym, Variant::Re, 2);
        let expr = express_in_e_basis(&p2, &sym, &red, 2).unwrap();
        let img = hc_morphism(&expr);
        for lam_parts in [vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0]] {
            let lam = Partition::new(lam_parts).unwrap();
            let mu = mu_char(&lam, 2).unwrap();
            let a = character(&img, &mu).unwrap();
            let b = character(&powersum_sym(2, 2).unwrap(), &mu).unwrap();
            assert_eq!(a, b, "lambda = {lam}");
        }
    }

    #[test]
    fn super_powersum_reductions() {
        // n = 0 agrees with the even case
        for m in 1..=4usize {
            for k in 1..=4usize {
                assert_eq!(
                    super_powersum(k, m, 0).unwrap(),
                    powersum_sym(k, m).unwrap()
                );
            }
        }
        // (m, n) = (0, 1): p_k = -q nu^k
        for k in 1..=3usize {
            let p = super_powersum(k, 0, 1).unwrap();
            let expected = MPoly::var(1, 0).pow(k).scale(&ScalarQ::q().negate());
            assert_eq!(p.poly(), &expected);
        }
    }

    #[test]
    fn super_powersum_supersymmetric_cancellation() {
        // substituting mu_1 = q^2 nu_1 removes all nu_1 dependence
        for (m, n) in [(1usize, 1usize), (2, 1)] {
            for k in 1..=4usize {
                let p = super_powersum(k, m, n).unwrap();
                assert!(p.is_symmetric());
                let nv = m + n;
                let image = MPoly::var(nv, m).scale(&ScalarQ::q_pow(2)); // q^2 nu_1
                let substituted = p.poly().substitute(0, &image);
                for (e, c) in substituted.terms() {
                    assert!(
                        e[m] == 0 || c.is_zero(),
                        "nu_1 survives in (m,n)=({m},{n}), k={k}: {substituted}"
                    );
                }
            }
        }
    }

    #[test]
    fn character_rejects_odd_eigenvalues() {
        // no parameterization exists for the nu characters
        let p = super_powersum(2, 1, 1).unwrap();
        assert!(character(&p, &[ScalarQ::one(), ScalarQ::q()]).is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![2, 1, 1, 0]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(p.padded(4).unwrap(), vec![2, 1, 0, 0]);
        assert!(p.padded(1).is_err());
        assert_eq!(Partition::defining(3).parts(), &[1, 0, 0]);
    }

    #[test]
    fn sympoly_display_and_json() {
        let p = powersum_sym(1, 2).unwrap();
        let s = p.to_string();
        assert!(s.contains("mu1") && s.contains("mu2"), "{s}");
        let j = p.to_json();
        assert_eq!(j["mu_vars"], 2);
        assert_eq!(j["terms"].as_array().unwrap().len(), 2);
    }
}
