//! The A-type Hecke algebra H_n(q) on the T_w basis, its degeneration to the
//! symmetric group algebra, and the R-matrix representation rho_R.
//!
//! Basis keys are permutations in one-line notation, so T_w arithmetic is a
//! sparse-map merge.  Multiplication uses the standard recursion
//! T_s T_w = T_(sw) when the length goes up, and T_(sw) + kappa T_w when it
//! goes down, with kappa = q - q^-1 for the generic algebra and kappa = 0 for
//! the symmetric-group degeneration (the algebra serving involutive
//! symmetries).

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;

use crate::error::{Error, Result};
use crate::expr::{self, ExprContext};
use crate::scalar::ScalarQ;
use crate::symmetry::{Symmetry, SymmetryKind};
use crate::tensor::TensorOp;

/// Permutation of {0..n-1} in one-line notation: `images[i]` is the image
/// of i under the left action on positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Adjacent transposition s_i swapping i-1 and i (1-based generator index).
    pub fn transposition(i: usize, n: usize) -> Result<Self> {
        if i < 1 || i >= n {
            return Err(Error::IndexOutOfRange(format!("s_{i} in S_{n}")));
        }
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        Ok(Perm(v))
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Invalid("not a permutation".into()));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Function composition: (self o other)(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x] = i;
        }
        Perm(v)
    }

    /// Coxeter length = inversion count.
    pub fn length(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for a in 0..n {
            for b in (a + 1)..n {
                if self.0[a] > self.0[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word (1-based generator indices) obtained by bubble descent:
    /// each adjacent swap fixes one inversion, so the word length equals the
    /// Coxeter length.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        let mut word = Vec::new();
        // sort v to the identity by right multiplication with s_i (swapping
        // positions i-1, i); self = s_(i_last) ... s_(i_first) reversed below
        loop {
            let mut swapped = false;
            for i in 0..v.len().saturating_sub(1) {
                if v[i] > v[i + 1] {
                    v.swap(i, i + 1);
                    word.push(i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word.reverse();
        word
    }
}

/// The algebra context: strand count plus the quadratic constant kappa.
#[derive(Debug, Clone)]
pub struct HeckeAlgebra {
    n: usize,
    kappa: ScalarQ,
}

/// Finite linear combination of basis words T_w with ScalarQ coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Perm, ScalarQ>,
}

impl HeckeAlgebra {
    /// Generic H_n(q) with kappa = q - q^-1.
    pub fn generic(n: usize) -> Self {
        HeckeAlgebra { n, kappa: ScalarQ::q_minus_qinv() }
    }

    /// Group algebra of S_n (the q = 1 degeneration, kappa = 0).
    pub fn symmetric_group(n: usize) -> Self {
        HeckeAlgebra { n, kappa: ScalarQ::zero() }
    }

    /// The algebra whose relations match a symmetry's quadratic condition.
    pub fn for_symmetry(sym: &Symmetry, n: usize) -> Self {
        match sym.kind() {
            SymmetryKind::Hecke => Self::generic(n),
            SymmetryKind::Involutive => Self::symmetric_group(n),
        }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement { n: self.n, terms: BTreeMap::new() }
    }

    pub fn unit(&self) -> HeckeElement {
        self.basis(Perm::identity(self.n))
    }

    pub fn basis(&self, w: Perm) -> HeckeElement {
        assert_eq!(w.degree(), self.n);
        let mut terms = BTreeMap::new();
        terms.insert(w, ScalarQ::one());
        HeckeElement { n: self.n, terms }
    }

    /// Generator tau_i = T_(s_i), 1 <= i <= n-1.
    pub fn gen(&self, i: usize) -> Result<HeckeElement> {
        Ok(self.basis(Perm::transposition(i, self.n)?))
    }

    /// z_k = tau_(k-1) tau_(k-2) ... tau_1, the cycle whose characteristic
    /// image is the k-th power sum; 2 <= k <= n.
    pub fn zk(&self, k: usize) -> Result<HeckeElement> {
        if k < 2 || k > self.n {
            return Err(Error::IndexOutOfRange(format!("z_{k} needs 2 <= k <= {}", self.n)));
        }
        let mut w = Perm::transposition(k - 1, self.n)?;
        for i in (1..k - 1).rev() {
            w = w.compose(&Perm::transposition(i, self.n)?);
        }
        Ok(self.basis(w))
    }

    /// Left multiplication by the generator T_(s_i) on a single basis term.
    fn gen_times(&self, i: usize, w: &Perm, coeff: &ScalarQ, acc: &mut BTreeMap<Perm, ScalarQ>) {
        let s = Perm::transposition(i, self.n).expect("generator in range");
        let sw = s.compose(w);
        // length increases iff value i-1 appears before value i in w
        let winv = w.inverse();
        let ascending = winv.apply(i - 1) < winv.apply(i);
        add_term(acc, sw, coeff.clone());
        if !ascending && !self.kappa.is_zero() {
            add_term(acc, w.clone(), &self.kappa * coeff);
        }
    }

    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        if a.n != b.n {
            return Err(Error::StrandMismatch(a.n, b.n));
        }
        if a.n != self.n {
            return Err(Error::StrandMismatch(a.n, self.n));
        }
        let mut out = BTreeMap::new();
        for (u, cu) in &a.terms {
            let word = u.reduced_word();
            // T_u T_w: apply the generators of u's reduced word right to left
            let mut partial: BTreeMap<Perm, ScalarQ> = BTreeMap::new();
            for (w, cw) in &b.terms {
                add_term(&mut partial, w.clone(), cu * cw);
            }
            for &i in word.iter().rev() {
                let mut next = BTreeMap::new();
                for (w, c) in &partial {
                    self.gen_times(i, w, c, &mut next);
                }
                partial = next;
            }
            for (w, c) in partial {
                add_term(&mut out, w, c);
            }
        }
        Ok(HeckeElement { n: self.n, terms: out })
    }

    /// The R-matrix representation rho_R: tau_i |-> R_i on V^(x)n, extended
    /// as an algebra homomorphism (basis words map to products of R_i along
    /// any reduced word, well defined by the braid relation).
    pub fn rho(&self, sym: &Symmetry, h: &HeckeElement) -> Result<TensorOp> {
        if h.n != self.n {
            return Err(Error::StrandMismatch(h.n, self.n));
        }
        let nv = sym.dim_v();
        let mut out = TensorOp::zeros(nv, self.n);
        for (w, c) in &h.terms {
            let mut img = TensorOp::identity(nv, self.n);
            for &i in &w.reduced_word() {
                img = img.mul(&sym.r_matrix().embed(i, self.n)?);
            }
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }

    /// Parse "coeff * t2.t1 + ..." style expressions; `e` is the unit and
    /// words multiply in the algebra, so non-reduced input is fine.
    pub fn parse(&self, input: &str) -> Result<HeckeElement> {
        expr::parse_expr(self, input)
    }
}

fn add_term(map: &mut BTreeMap<Perm, ScalarQ>, w: Perm, c: ScalarQ) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
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

impl HeckeElement {
    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_term(&mut terms, w.clone(), c.clone());
        }
        Ok(HeckeElement { n: self.n, terms })
    }

    pub fn scale(&self, c: &ScalarQ) -> HeckeElement {
        if c.is_zero() {
            return HeckeElement { n: self.n, terms: BTreeMap::new() };
        }
        let terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        HeckeElement { n: self.n, terms }
    }

    /// Coefficients with q specialized to q0; the structure constants of the
    /// generic algebra turn into those of C[S_n] at q0 = 1.
    pub fn eval_coeffs(&self, q0: &num::BigRational) -> Result<BTreeMap<Perm, num::BigRational>> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            out.insert(w.clone(), c.eval_at(q0)?);
        }
        Ok(out)
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word = w.reduced_word();
                let word_str = if word.is_empty() {
                    "e".to_string()
                } else {
                    word.iter().map(|i| format!("t{i}")).collect::<Vec<_>>().join(".")
                };
                format!("{c} * {word_str}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl ExprContext for HeckeAlgebra {
    type Value = HeckeElement;

    fn int_value(&self, n: &BigInt) -> HeckeElement {
        self.unit().scale(&ScalarQ::from_bigint(n.clone()))
    }

    fn atom(&self, name: &str, args: Option<(i64, i64)>) -> Result<HeckeElement> {
        if args.is_some() {
            return Err(Error::Parse(format!("symbol {name} takes no arguments")));
        }
        if name == "e" {
            return Ok(self.unit());
        }
        if name == "q" {
            return Ok(self.unit().scale(&ScalarQ::q()));
        }
        if let Some(idx) = name.strip_prefix('t') {
            let i: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator name `{name}`")))?;
            return self.gen(i);
        }
        Err(Error::Parse(format!("unknown symbol `{name}` in Hecke expression")))
    }

    fn add(&self, a: HeckeElement, b: HeckeElement) -> HeckeElement {
        a.add(&b).expect("parser keeps strand counts equal")
    }

    fn mul(&self, a: HeckeElement, b: HeckeElement) -> HeckeElement {
        self.multiply(&a, &b).expect("parser keeps strand counts equal")
    }

    fn neg(&self, a: HeckeElement) -> HeckeElement {
        a.scale(&ScalarQ::from_int(-1))
    }

    fn div(&self, a: HeckeElement, b: HeckeElement) -> Result<HeckeElement> {
        // division only by scalars (multiples of the unit)
        let scalar = b.as_scalar().ok_or_else(|| {
            Error::Parse("can only divide by scalar expressions".into())
        })?;
        if scalar.is_zero() {
            return Err(Error::Parse("division by zero".into()));
        }
        Ok(a.scale(&scalar.inv().unwrap()))
    }

    fn pow(&self, a: HeckeElement, k: i64) -> Result<HeckeElement> {
        if k < 0 {
            let scalar = a
                .as_scalar()
                .ok_or_else(|| Error::Parse("negative powers only for scalars".into()))?;
            return Ok(self.unit().scale(&scalar.pow(k)?));
        }
        let mut acc = self.unit();
        for _ in 0..k {
            acc = self.multiply(&acc, &a)?;
        }
        Ok(acc)
    }
}

impl HeckeElement {
    /// Some(c) when the element is c * T_e.
    pub fn as_scalar(&self) -> Option<ScalarQ> {
        if self.terms.is_empty() {
            return Some(ScalarQ::zero());
        }
        if self.terms.len() == 1 {
            let (w, c) = self.terms.iter().next().unwrap();
            if w.is_identity() {
                return Some(c.clone());
            }
        }
        None
    }
}
