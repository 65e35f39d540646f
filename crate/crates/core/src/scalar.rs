//! Exact arithmetic in the field Q(q) of rational functions in the deformation
//! parameter q.
//!
//! A [`ScalarQ`] is a quotient of two integer-coefficient polynomials in q kept
//! in canonical form: numerator and denominator coprime (polynomial gcd and
//! integer content both extracted) and the denominator has a positive leading
//! coefficient.  Equality is therefore field-by-field comparison.  Laurent
//! inputs such as `q^-3` are admitted at construction time and normalized
//! immediately.
//!
//! The module also provides the q-integers `k_q = (q^k - q^-k)/(q - q^-1)`,
//! exact evaluation at a rational point and the q -> 1 limit.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::expr::{self, ExprContext};

/// Dense integer-coefficient polynomial in q, low degree first, no trailing
/// zeros (so the zero polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub(crate) fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub(crate) fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub(crate) fn constant(c: BigInt) -> Self {
        let mut p = IntPoly(vec![c]);
        p.trim();
        p
    }

    pub(crate) fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); deg + 1];
        v[deg] = c;
        IntPoly(v)
    }

    fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; zero polynomial reports None.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn leading(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub(crate) fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + other.coeff(k));
        }
        let mut p = IntPoly(v);
        p.trim();
        p
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - other.coeff(k));
        }
        let mut p = IntPoly(v);
        p.trim();
        p
    }

    pub(crate) fn neg(&self) -> Self {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        let mut p = IntPoly(v);
        p.trim();
        p
    }

    pub(crate) fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly(self.0.iter().map(|a| a * c).collect())
    }

    /// gcd of all coefficients, nonnegative; zero for the zero polynomial.
    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        self.div_exact_int(&c)
    }

    fn div_exact_int(&self, c: &BigInt) -> Self {
        IntPoly(self.0.iter().map(|a| a / c).collect())
    }

    /// Long division assuming the division is exact over Z[q].
    /// Returns None if a leading coefficient fails to divide or a nonzero
    /// remainder is left.
    pub(crate) fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.degree().unwrap();
        let dl = d.leading().unwrap();
        let mut rem = self.clone();
        let dn = self.degree()?;
        if dn < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                return None;
            }
            let lr = rem.leading().unwrap();
            let (c, r) = lr.div_rem(dl);
            if !r.is_zero() {
                return None;
            }
            quot[dr - dd] = c.clone();
            rem = rem.sub(&d.mul(&IntPoly::monomial(c, dr - dd)));
            if rem.is_zero() {
                let mut q = IntPoly(quot);
                q.trim();
                return Some(q);
            }
        }
        None
    }

    /// Pseudo-remainder: some power of lc(d) times self, reduced mod d.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let dl = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = r.scale(&dl).sub(&d.mul(&IntPoly::monomial(lr, dr - dd)));
        }
        r
    }

    /// Primitive PRS gcd; result has positive leading coefficient.
    pub(crate) fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        let cg = self.content().gcd(&other.content());
        let mut f = self.primitive();
        let mut g = other.primitive();
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = f.pseudo_rem(&g).primitive();
            f = g;
            g = r;
        }
        f.normalize_sign().scale(&cg)
    }

    fn normalize_sign(&self) -> Self {
        match self.leading() {
            Some(l) if l.sign() == Sign::Minus => self.neg(),
            _ => self.clone(),
        }
    }

    pub(crate) fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }
}

/// Element of Q(q) in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScalarQ {
    num: IntPoly,
    den: IntPoly,
}

impl ScalarQ {
    fn make(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in ScalarQ");
        let mut s = ScalarQ { num, den };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = IntPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        if matches!(self.den.leading(), Some(l) if l.sign() == Sign::Minus) {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn zero() -> Self {
        ScalarQ { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        ScalarQ { num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        ScalarQ { num: IntPoly::constant(BigInt::from(n)), den: IntPoly::one() }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        ScalarQ { num: IntPoly::constant(n), den: IntPoly::one() }
    }

    pub fn from_ratio(num: BigInt, den: BigInt) -> Self {
        Self::make(IntPoly::constant(num), IntPoly::constant(den))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_ratio(r.numer().clone(), r.denom().clone())
    }

    /// The generator q itself.
    pub fn q() -> Self {
        ScalarQ { num: IntPoly::monomial(BigInt::one(), 1), den: IntPoly::one() }
    }

    /// Laurent monomial q^k, k of either sign.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            ScalarQ { num: IntPoly::monomial(BigInt::one(), k as usize), den: IntPoly::one() }
        } else {
            ScalarQ {
                num: IntPoly::one(),
                den: IntPoly::monomial(BigInt::one(), (-k) as usize),
            }
        }
    }

    /// q-integer k_q = (q^k - q^-k)/(q - q^-1); odd in k, qint(0) = 0.
    pub fn qint(k: i64) -> Self {
        match k.cmp(&0) {
            Ordering::Equal => Self::zero(),
            Ordering::Less => Self::qint(-k).negate(),
            Ordering::Greater => {
                // sum_{j=0}^{k-1} q^{k-1-2j}, cleared to (sum q^{2j}) / q^{k-1}
                let k = k as usize;
                let mut v = vec![BigInt::zero(); 2 * k - 1];
                for j in 0..k {
                    v[2 * j] = BigInt::one();
                }
                Self::make(IntPoly(v), IntPoly::monomial(BigInt::one(), k - 1))
            }
        }
    }

    /// q - q^-1, the quadratic coefficient of the Hecke condition.
    pub fn q_minus_qinv() -> Self {
        &Self::q() - &Self::q_pow(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn negate(&self) -> Self {
        ScalarQ { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Invalid("division by zero in Q(q)".into()));
        }
        Ok(Self::make(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Exact value at q = q0; the denominator must not vanish there.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// q -> 1 limit.  The canonical form already has all common factors
    /// cancelled, so a vanishing denominator at 1 means a genuine pole.
    pub fn limit_q1(&self) -> Result<BigRational> {
        let one = BigRational::one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval(&one) / d)
    }

    pub(crate) fn num_poly(&self) -> &IntPoly {
        &self.num
    }

    pub(crate) fn den_poly(&self) -> &IntPoly {
        &self.den
    }

    pub fn parse(input: &str) -> Result<Self> {
        expr::parse_expr(&ScalarContext, input)
    }
}

impl Add for &ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: &ScalarQ) -> ScalarQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        ScalarQ::make(num, den)
    }
}

impl Sub for &ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: &ScalarQ) -> ScalarQ {
        if rhs.is_zero() {
            return self.clone();
        }
        let num = self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        ScalarQ::make(num, den)
    }
}

impl Mul for &ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: &ScalarQ) -> ScalarQ {
        if self.is_zero() || rhs.is_zero() {
            return ScalarQ::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // cross-cancel first to keep the gcd work small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        ScalarQ::make(n1.mul(&n2), d1.mul(&d2))
    }
}

impl Div for &ScalarQ {
    type Output = ScalarQ;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &ScalarQ) -> ScalarQ {
        let inv = rhs.inv().expect("division by zero in Q(q)");
        self * &inv
    }
}

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        self.negate()
    }
}

fn fmt_poly(p: &IntPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let deg = p.degree().unwrap();
    let mut first = true;
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        if first {
            if c.sign() == Sign::Minus {
                write!(f, "-")?;
            }
        } else if c.sign() == Sign::Minus {
            write!(f, "-")?;
        } else {
            write!(f, "+")?;
        }
        first = false;
        let a = c.abs();
        if k == 0 {
            write!(f, "{}", a)?;
        } else {
            if !a.is_one() {
                write!(f, "{}*", a)?;
            }
            if k == 1 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{}", k)?;
            }
        }
    }
    Ok(())
}

/// True when the polynomial prints as a single product-free token, so it can
/// appear as a denominator without parentheses.
fn is_simple(p: &IntPoly) -> bool {
    let nonzero = p.0.iter().filter(|c| !c.is_zero()).count();
    if nonzero != 1 {
        return false;
    }
    let deg = p.degree().unwrap();
    deg == 0 || p.coeff(deg).is_one()
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return fmt_poly(&self.num, f);
        }
        let single_term = self.num.0.iter().filter(|c| !c.is_zero()).count() == 1;
        if single_term {
            fmt_poly(&self.num, f)?;
        } else {
            write!(f, "(")?;
            fmt_poly(&self.num, f)?;
            write!(f, ")")?;
        }
        write!(f, "/")?;
        if is_simple(&self.den) {
            fmt_poly(&self.den, f)
        } else {
            write!(f, "(")?;
            fmt_poly(&self.den, f)?;
            write!(f, ")")
        }
    }
}

impl FromStr for ScalarQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ScalarQ::parse(s)
    }
}

impl Serialize for ScalarQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ScalarQ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        ScalarQ::parse(&s).map_err(serde::de::Error::custom)
    }
}

struct ScalarContext;

impl ExprContext for ScalarContext {
    type Value = ScalarQ;

    fn int_value(&self, n: &BigInt) -> ScalarQ {
        ScalarQ::from_bigint(n.clone())
    }

    fn atom(&self, name: &str, args: Option<(i64, i64)>) -> Result<ScalarQ> {
        if args.is_some() {
            return Err(Error::Parse(format!("symbol {name} takes no arguments")));
        }
        match name {
            "q" => Ok(ScalarQ::q()),
            other => Err(Error::Parse(format!("unknown symbol `{other}` in scalar expression"))),
        }
    }

    fn add(&self, a: ScalarQ, b: ScalarQ) -> ScalarQ {
        &a + &b
    }

    fn mul(&self, a: ScalarQ, b: ScalarQ) -> ScalarQ {
        &a * &b
    }

    fn neg(&self, a: ScalarQ) -> ScalarQ {
        a.negate()
    }

    fn div(&self, a: ScalarQ, b: ScalarQ) -> Result<ScalarQ> {
        if b.is_zero() {
            return Err(Error::Parse("division by zero".into()));
        }
        Ok(&a / &b)
    }

    fn pow(&self, a: ScalarQ, k: i64) -> Result<ScalarQ> {
        a.pow(k)
    }
}
