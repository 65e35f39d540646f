//! Free associative algebra on the N^2 generators of a Reflection Equation
//! algebra, matrices over it, and a degree-truncated normal-form engine for
//! the two-sided ideal of defining relations.
//!
//! Reduction is plain linear algebra, not term rewriting: the span of
//! u * r * v over all relations r and words u, v within the degree bound is
//! row-reduced once against a fixed graded-lexicographic word order
//! (g(1,1) < g(1,2) < ... < g(N,N), shorter words first), and normal forms
//! are projections onto the staircase complement.  Two polynomials are equal
//! in the quotient up to the bound iff their normal forms coincide.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;

use crate::error::{Error, Result};
use crate::expr::{self, ExprContext};
use crate::scalar::ScalarQ;
use crate::symmetry::{Symmetry, SymmetryKind};
use crate::tensor::{decode_index, TensorOp};

/// Generator symbol g(i, j) = l_i^j, indices 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub row: u8,
    pub col: u8,
}

impl Gen {
    pub fn new(row: usize, col: usize) -> Self {
        Gen { row: row as u8, col: col as u8 }
    }
}

/// Word in the generator symbols; ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: Gen) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Noncommutative polynomial with ScalarQ coefficients; zero coefficients are
/// pruned and the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, ScalarQ>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(ScalarQ::one())
    }

    pub fn constant(c: ScalarQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Word::empty(), c);
        }
        NCPoly { terms }
    }

    pub fn gen(i: usize, j: usize) -> Self {
        Self::from_word(Word::single(Gen::new(i, j)), ScalarQ::one())
    }

    pub fn from_word(w: Word, c: ScalarQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Word, &ScalarQ)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, w: &Word) -> ScalarQ {
        self.terms.get(w).cloned().unwrap_or_else(ScalarQ::zero)
    }

    fn add_term(&mut self, w: Word, c: ScalarQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.negate());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&ScalarQ::from_int(-1))
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        NCPoly { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Algebra-homomorphism substitution of each generator symbol.
    pub fn substitute(&self, image: &impl Fn(Gen) -> NCPoly) -> NCPoly {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut prod = Self::constant(c.clone());
            for &g in &w.0 {
                prod = prod.mul(&image(g));
            }
            out = out.add(&prod);
        }
        out
    }

    pub fn parse(n: usize, input: &str) -> Result<Self> {
        expr::parse_expr(&NCContext { n }, input)
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    format!("{c}")
                } else {
                    let word = w
                        .0
                        .iter()
                        .map(|g| format!("g({},{})", g.row, g.col))
                        .collect::<Vec<_>>()
                        .join(".");
                    format!("{c} * {word}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

struct NCContext {
    n: usize,
}

impl ExprContext for NCContext {
    type Value = NCPoly;

    fn int_value(&self, n: &BigInt) -> NCPoly {
        NCPoly::constant(ScalarQ::from_bigint(n.clone()))
    }

    fn atom(&self, name: &str, args: Option<(i64, i64)>) -> Result<NCPoly> {
        match (name, args) {
            ("q", None) => Ok(NCPoly::constant(ScalarQ::q())),
            ("g", Some((i, j))) => {
                if i < 1 || j < 1 || i as usize > self.n || j as usize > self.n {
                    return Err(Error::IndexOutOfRange(format!("g({i},{j}) with N = {}", self.n)));
                }
                Ok(NCPoly::gen(i as usize, j as usize))
            }
            ("g", None) => Err(Error::Parse("generator g needs indices g(i,j)".into())),
            (other, _) => Err(Error::Parse(format!("unknown symbol `{other}`"))),
        }
    }

    fn add(&self, a: NCPoly, b: NCPoly) -> NCPoly {
        a.add(&b)
    }

    fn mul(&self, a: NCPoly, b: NCPoly) -> NCPoly {
        a.mul(&b)
    }

    fn neg(&self, a: NCPoly) -> NCPoly {
        a.neg()
    }

    fn div(&self, a: NCPoly, b: NCPoly) -> Result<NCPoly> {
        let c = b
            .as_scalar()
            .ok_or_else(|| Error::Parse("can only divide by scalar expressions".into()))?;
        if c.is_zero() {
            return Err(Error::Parse("division by zero".into()));
        }
        Ok(a.scale(&c.inv().unwrap()))
    }

    fn pow(&self, a: NCPoly, k: i64) -> Result<NCPoly> {
        if k < 0 {
            let c = a
                .as_scalar()
                .ok_or_else(|| Error::Parse("negative powers only for scalars".into()))?;
            return Ok(NCPoly::constant(c.pow(k)?));
        }
        Ok(a.pow(k as usize))
    }
}

impl NCPoly {
    pub fn as_scalar(&self) -> Option<ScalarQ> {
        if self.terms.is_empty() {
            return Some(ScalarQ::zero());
        }
        if self.terms.len() == 1 {
            let (w, c) = self.terms.iter().next().unwrap();
            if w.is_empty() {
                return Some(c.clone());
            }
        }
        None
    }
}

/// Square matrix with NCPoly entries acting on V^(x)arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCMatrix {
    dim_v: usize,
    arity: usize,
    entries: Vec<NCPoly>,
}

impl NCMatrix {
    pub fn zeros(dim_v: usize, arity: usize) -> Self {
        let d = dim_v.pow(arity as u32);
        NCMatrix { dim_v, arity, entries: vec![NCPoly::zero(); d * d] }
    }

    pub fn identity(dim_v: usize, arity: usize) -> Self {
        let mut m = Self::zeros(dim_v, arity);
        for i in 0..m.dim() {
            m.set(i, i, NCPoly::one());
        }
        m
    }

    /// The generator matrix L = ||l_i^j|| itself (arity 1); the lower index
    /// numerates rows.
    pub fn generator_matrix(dim_v: usize) -> Self {
        let mut m = Self::zeros(dim_v, 1);
        for i in 0..dim_v {
            for j in 0..dim_v {
                m.set(i, j, NCPoly::gen(i + 1, j + 1));
            }
        }
        m
    }

    pub fn from_scalar(op: &TensorOp) -> Self {
        let d = op.dim();
        let mut m = Self::zeros(op.dim_v(), op.arity());
        for r in 0..d {
            for c in 0..d {
                let v = op.get(r, c);
                if !v.is_zero() {
                    m.set(r, c, NCPoly::constant(v.clone()));
                }
            }
        }
        m
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim_v.pow(self.arity as u32)
    }

    pub fn get(&self, row: usize, col: usize) -> &NCPoly {
        &self.entries[row * self.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: NCPoly) {
        let d = self.dim();
        self.entries[row * d + col] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.dim_v, self.arity), (other.dim_v, other.arity));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        NCMatrix { dim_v: self.dim_v, arity: self.arity, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.dim_v, self.arity), (other.dim_v, other.arity));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        NCMatrix { dim_v: self.dim_v, arity: self.arity, entries }
    }

    pub fn scale(&self, c: &NCPoly) -> Self {
        let entries = self.entries.iter().map(|a| c.mul(a)).collect();
        NCMatrix { dim_v: self.dim_v, arity: self.arity, entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.dim_v, self.arity), (other.dim_v, other.arity));
        let d = self.dim();
        let mut out = Self::zeros(self.dim_v, self.arity);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, t);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.dim_v, self.arity);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Place an arity-a matrix at slots k..k+a-1 of V^(x)p.
    pub fn embed(&self, k: usize, p: usize) -> Result<Self> {
        if k < 1 || k + self.arity - 1 > p {
            return Err(Error::PositionOutOfRange(format!(
                "embed at slot {k} of arity {} into {p} factors",
                self.arity
            )));
        }
        let n = self.dim_v;
        let own = self.dim();
        let left = n.pow((k - 1) as u32);
        let right = n.pow((p + 1 - k - self.arity) as u32);
        let mut out = Self::zeros(n, p);
        for rl in 0..left {
            for rm in 0..own {
                for rr in 0..right {
                    for cm in 0..own {
                        let v = self.get(rm, cm);
                        if v.is_zero() {
                            continue;
                        }
                        let row = (rl * own + rm) * right + rr;
                        let col = (rl * own + cm) * right + rr;
                        out.set(row, col, v.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// R-trace at slot k with weight matrix C.
    pub fn r_partial_trace(&self, c_weight: &TensorOp, k: usize) -> Result<Self> {
        assert_eq!(c_weight.arity(), 1);
        if k < 1 || k > self.arity {
            return Err(Error::PositionOutOfRange(format!(
                "R-trace slot {k} of arity {}",
                self.arity
            )));
        }
        let n = self.dim_v;
        let hi = n.pow((k - 1) as u32);
        let lo = n.pow((self.arity - k) as u32);
        let mut out = Self::zeros(n, self.arity - 1);
        for rh in 0..hi {
            for rl in 0..lo {
                for ch in 0..hi {
                    for cl in 0..lo {
                        let mut acc = NCPoly::zero();
                        for s in 0..n {
                            for t in 0..n {
                                let w = c_weight.get(s, t);
                                if w.is_zero() {
                                    continue;
                                }
                                let row = (rh * n + t) * lo + rl;
                                let col = (ch * n + s) * lo + cl;
                                let v = self.get(row, col);
                                if !v.is_zero() {
                                    acc = acc.add(&v.scale(w));
                                }
                            }
                        }
                        out.set(rh * lo + rl, ch * lo + cl, acc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Full R-trace over all slots.
    pub fn r_trace_all(&self, c_weight: &TensorOp) -> NCPoly {
        let mut m = self.clone();
        for _ in 0..self.arity {
            let k = m.arity;
            m = m.r_partial_trace(c_weight, k).expect("slot in range");
        }
        m.get(0, 0).clone()
    }

    /// Plain trace (C = I).
    pub fn trace(&self) -> NCPoly {
        let mut acc = NCPoly::zero();
        for i in 0..self.dim() {
            acc = acc.add(self.get(i, i));
        }
        acc
    }
}

/// Which Reflection Equation algebra a set of relations or an element
/// belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Homogeneous relations R L1 R L1 = L1 R L1 R.
    Re,
    /// Modified relations R L1 R L1 - L1 R L1 R = R L1 - L1 R.
    ModifiedRe,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Re => write!(f, "re"),
            Variant::ModifiedRe => write!(f, "modified_re"),
        }
    }
}

/// The N^4 defining relations of the (modified) RE algebra for a symmetry.
#[derive(Debug, Clone)]
pub struct RelationSet {
    variant: Variant,
    dim_v: usize,
    relations: Vec<NCPoly>,
}

impl RelationSet {
    pub fn new(sym: &Symmetry, variant: Variant) -> Self {
        let n = sym.dim_v();
        let r = NCMatrix::from_scalar(sym.r_matrix());
        let l1 = NCMatrix::generator_matrix(n).embed(1, 2).expect("arity fits");
        let rl = r.mul(&l1);
        let lhs = rl.mul(&rl).sub(&l1.mul(&r).mul(&l1).mul(&r));
        let full = match variant {
            Variant::Re => lhs,
            Variant::ModifiedRe => lhs.sub(&r.mul(&l1).sub(&l1.mul(&r))),
        };
        let d = full.dim();
        let mut relations = Vec::with_capacity(d * d);
        for row in 0..d {
            for col in 0..d {
                relations.push(full.get(row, col).clone());
            }
        }
        RelationSet { variant, dim_v: n, relations }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn relations(&self) -> &[NCPoly] {
        &self.relations
    }

    /// Relation at matrix entry [(a1,a2), (b1,b2)] of the defining identity.
    pub fn relation_at(&self, row: usize, col: usize) -> &NCPoly {
        &self.relations[row * self.dim_v * self.dim_v + col]
    }
}

/// Default working degree bound: twice (m + 1) for even bi-rank m, enough
/// for the Cayley-Hamilton identity and centrality checks of the e_k.
pub fn default_degree_bound(even_birank: usize) -> usize {
    2 * (even_birank + 1)
}

/// Normal-form engine for one relation set at one degree bound.  The pivot
/// table is built eagerly and immutable afterwards.
pub struct Reducer {
    dim_v: usize,
    degree_bound: usize,
    /// monic rows keyed by their leading (graded-lex maximal) word
    pivots: BTreeMap<Word, NCPoly>,
}

impl Reducer {
    pub fn new(rels: &RelationSet, degree_bound: usize) -> Self {
        let mut red = Reducer { dim_v: rels.dim_v, degree_bound, pivots: BTreeMap::new() };
        if degree_bound < 2 {
            return red;
        }
        let letters: Vec<Gen> = {
            let n = rels.dim_v;
            let mut v = Vec::with_capacity(n * n);
            for i in 1..=n {
                for j in 1..=n {
                    v.push(Gen::new(i, j));
                }
            }
            v
        };
        let nonzero: Vec<&NCPoly> = rels.relations.iter().filter(|r| !r.is_zero()).collect();
        for extra in 0..=degree_bound - 2 {
            for ulen in 0..=extra {
                let vlen = extra - ulen;
                let us = words_of_len(&letters, ulen);
                let vs = words_of_len(&letters, vlen);
                for u in &us {
                    let left = NCPoly::from_word(u.clone(), ScalarQ::one());
                    for v in &vs {
                        let right = NCPoly::from_word(v.clone(), ScalarQ::one());
                        for r in &nonzero {
                            red.insert(left.mul(r).mul(&right));
                        }
                    }
                }
            }
        }
        red
    }

    fn insert(&mut self, p: NCPoly) {
        let nf = self.normal_form_unchecked(&p);
        if let Some((lead, coeff)) = nf.leading() {
            let lead = lead.clone();
            let monic = nf.scale(&coeff.inv().expect("leading coefficient nonzero"));
            self.pivots.insert(lead, monic);
        }
    }

    fn normal_form_unchecked(&self, p: &NCPoly) -> NCPoly {
        let mut rest = p.clone();
        let mut out = NCPoly::zero();
        while let Some((w, c)) = rest.leading() {
            let w = w.clone();
            let c = c.clone();
            match self.pivots.get(&w) {
                Some(row) => {
                    rest = rest.sub(&row.scale(&c));
                }
                None => {
                    out.add_term(w.clone(), c);
                    rest.terms.remove(&w);
                }
            }
        }
        out
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// Canonical representative modulo the ideal span, up to the bound.
    pub fn reduce(&self, p: &NCPoly) -> Result<NCPoly> {
        let deg = p.degree();
        if deg > self.degree_bound {
            return Err(Error::DegreeBoundExceeded { bound: self.degree_bound, needed: deg });
        }
        Ok(self.normal_form_unchecked(p))
    }

    /// Equality in the quotient up to the degree bound.
    pub fn equivalent(&self, a: &NCPoly, b: &NCPoly) -> Result<bool> {
        Ok(self.reduce(&a.sub(b))?.is_zero())
    }

    /// z commutes with every generator modulo the ideal.
    pub fn is_central(&self, z: &NCPoly) -> Result<bool> {
        let needed = z.degree() + 1;
        if needed > self.degree_bound {
            return Err(Error::DegreeBoundExceeded { bound: self.degree_bound, needed });
        }
        for i in 1..=self.dim_v {
            for j in 1..=self.dim_v {
                let g = NCPoly::gen(i, j);
                let comm = z.mul(&g).sub(&g.mul(z));
                if !self.reduce(&comm)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Dimension of the degree-d graded piece of the quotient (number of
    /// degree-d words minus the rank of the ideal span there).
    pub fn quotient_dim_in_degree(&self, d: usize) -> usize {
        let total = (self.dim_v * self.dim_v).pow(d as u32);
        let pivots_in_degree = self.pivots.keys().filter(|w| w.len() == d).count();
        total - pivots_in_degree
    }
}

fn words_of_len(letters: &[Gen], len: usize) -> Vec<Word> {
    if len == 0 {
        return vec![Word::empty()];
    }
    let mut out = Vec::with_capacity(letters.len().pow(len as u32));
    let mut idx = vec![0usize; len];
    loop {
        out.push(Word(idx.iter().map(|&i| letters[i]).collect()));
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < letters.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Image of an L-generator polynomial under the isomorphism
/// l_i^j = delta_i^j - (q - q^-1) \hat l_i^j; defined only for Hecke kind.
pub fn shift_map(p: &NCPoly, sym: &Symmetry) -> Result<NCPoly> {
    if sym.kind() == SymmetryKind::Involutive {
        return Err(Error::InvolutiveUnsupported);
    }
    let kappa = ScalarQ::q_minus_qinv();
    Ok(p.substitute(&|g: Gen| {
        let delta = if g.row == g.col { NCPoly::one() } else { NCPoly::zero() };
        delta.sub(&NCPoly::from_word(Word::single(g), kappa.clone()))
    }))
}

/// Inverse substitution \hat l_i^j = (delta_i^j - l_i^j)/(q - q^-1).
pub fn unshift_map(p: &NCPoly, sym: &Symmetry) -> Result<NCPoly> {
    if sym.kind() == SymmetryKind::Involutive {
        return Err(Error::InvolutiveUnsupported);
    }
    let inv_kappa = ScalarQ::q_minus_qinv().inv().expect("kappa nonzero");
    Ok(p.substitute(&|g: Gen| {
        let delta = if g.row == g.col { NCPoly::one() } else { NCPoly::zero() };
        delta
            .sub(&NCPoly::from_word(Word::single(g), ScalarQ::one()))
            .scale(&inv_kappa)
    }))
}

/// The gl(N) bracket relation l_i^j l_k^m - l_k^m l_i^j - l_i^m d_k^j
/// + l_k^j d_i^m, for comparing the modified relations of the flip.
pub fn gl_bracket_relation(n: usize, i: usize, j: usize, k: usize, m: usize) -> NCPoly {
    let _ = n;
    let a = NCPoly::gen(i, j);
    let b = NCPoly::gen(k, m);
    let mut rel = a.mul(&b).sub(&b.mul(&a));
    if k == j {
        rel = rel.sub(&NCPoly::gen(i, m));
    }
    if i == m {
        rel = rel.add(&NCPoly::gen(k, j));
    }
    rel
}

/// Map a defining-relation entry [(a1,a2),(b1,b2)] of the flip case onto the
/// gl(N) bracket indices (i,j,k,m) = (a2,b2,a1,b1).
pub fn flip_relation_indices(row: usize, col: usize, n: usize) -> (usize, usize, usize, usize) {
    let r = decode_index(row, n, 2);
    let c = decode_index(col, n, 2);
    (r[1] + 1, c[1] + 1, r[0] + 1, c[0] + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn word_order_is_graded_lex() {
        let a = Word(vec![Gen::new(1, 1)]);
        let b = Word(vec![Gen::new(1, 2)]);
        let c = Word(vec![Gen::new(2, 1)]);
        assert!(a < b && b < c);
        let long = Word(vec![Gen::new(1, 1), Gen::new(1, 1)]);
        assert!(c < long);
        assert!(Word::empty() < a);
    }

    #[test]
    fn modified_flip_relations_are_gl_brackets() {
        for n in 2..=3usize {
            let sym = Symmetry::flip(n).unwrap();
            let rels = RelationSet::new(&sym, Variant::ModifiedRe);
            let d = n * n;
            for row in 0..d {
                for col in 0..d {
                    let (i, j, k, m) = flip_relation_indices(row, col, n);
                    let expected = gl_bracket_relation(n, i, j, k, m);
                    assert_eq!(
                        rels.relation_at(row, col),
                        &expected,
                        "entry ({row},{col}) of N = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn re_flip_relations_are_commutativity() {
        let sym = Symmetry::flip(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        for row in 0..4 {
            for col in 0..4 {
                let (i, j, k, m) = flip_relation_indices(row, col, 2);
                let a = NCPoly::gen(i, j);
                let b = NCPoly::gen(k, m);
                assert_eq!(rels.relation_at(row, col), &a.mul(&b).sub(&b.mul(&a)));
            }
        }
    }

    #[test]
    fn dj1_relations_are_trivial() {
        let sym = Symmetry::drinfeld_jimbo(1).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        assert!(rels.relations().iter().all(NCPoly::is_zero));
    }

    #[test]
    fn defining_relations_reduce_to_zero() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        for variant in [Variant::Re, Variant::ModifiedRe] {
            let rels = RelationSet::new(&sym, variant);
            let red = Reducer::new(&rels, 3);
            for r in rels.relations() {
                assert!(red.reduce(r).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn gl2_commutator_example() {
        // [E12, E21] = E11 - E22 in U(gl(2))
        let sym = Symmetry::flip(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::ModifiedRe);
        let red = Reducer::new(&rels, 2);
        let e12 = NCPoly::gen(1, 2);
        let e21 = NCPoly::gen(2, 1);
        let p = e12
            .mul(&e21)
            .sub(&e21.mul(&e12))
            .sub(&NCPoly::gen(1, 1))
            .add(&NCPoly::gen(2, 2));
        assert!(red.reduce(&p).unwrap().is_zero());
    }

    #[test]
    fn reduce_is_idempotent_and_linear() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 3);
        let p = NCPoly::parse(2, "g(1,2).g(2,1) + q * g(1,1).g(2,2).g(1,2)").unwrap();
        let q = NCPoly::parse(2, "g(2,1).g(1,2) - g(1,1)").unwrap();
        let rp = red.reduce(&p).unwrap();
        assert_eq!(red.reduce(&rp).unwrap(), rp);
        let alpha = ScalarQ::q();
        let beta = ScalarQ::q_minus_qinv();
        let lin = red.reduce(&p.scale(&alpha).add(&q.scale(&beta))).unwrap();
        let rhs = red.reduce(&p).unwrap().scale(&alpha).add(&red.reduce(&q).unwrap().scale(&beta));
        assert_eq!(lin, rhs);
    }

    #[test]
    fn degree_bound_is_enforced() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 2);
        let p = NCPoly::parse(2, "g(1,1).g(1,2).g(2,1)").unwrap();
        assert!(matches!(
            red.reduce(&p),
            Err(Error::DegreeBoundExceeded { bound: 2, needed: 3 })
        ));
        assert!(matches!(
            red.is_central(&NCPoly::gen(1, 1).mul(&NCPoly::gen(1, 2))),
            Err(Error::DegreeBoundExceeded { .. })
        ));
    }

    #[test]
    fn pbw_witness_degree_two() {
        // flat deformation: the degree-2 component of L(R) for dj(2) has the
        // commutative dimension C(5,2) = 10
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 2);
        assert_eq!(red.quotient_dim_in_degree(2), 10);
    }

    #[test]
    fn centrality_checks() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 2);
        assert!(red.is_central(&NCPoly::one()).unwrap());
        // Tr_R L = q^-3 g(1,1) + q^-1 g(2,2) is central; a bare off-diagonal
        // generator is not
        let trl = NCPoly::gen(1, 1)
            .scale(&ScalarQ::q_pow(-3))
            .add(&NCPoly::gen(2, 2).scale(&ScalarQ::q_pow(-1)));
        assert!(red.is_central(&trl).unwrap());
        assert!(!red.is_central(&NCPoly::gen(1, 2)).unwrap());
    }

    #[test]
    fn gelfand_invariants_central_for_flip() {
        let sym = Symmetry::flip(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::ModifiedRe);
        let red = Reducer::new(&rels, 4);
        let l = NCMatrix::generator_matrix(2);
        for k in 1..=3usize {
            let tr = l.pow(k).trace();
            assert!(red.is_central(&tr).unwrap(), "Tr L^{k}");
        }
    }

    #[test]
    fn shift_map_examples() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let kappa = ScalarQ::q_minus_qinv();
        let img = shift_map(&NCPoly::gen(1, 1), &sym).unwrap();
        assert_eq!(img, NCPoly::one().sub(&NCPoly::gen(1, 1).scale(&kappa)));
        let img = shift_map(&NCPoly::gen(1, 2), &sym).unwrap();
        assert_eq!(img, NCPoly::gen(1, 2).scale(&kappa).neg());
        assert_eq!(shift_map(&NCPoly::one(), &sym).unwrap(), NCPoly::one());
        // unshift inverts shift
        let p = NCPoly::parse(2, "g(1,2).g(2,1) + q * g(1,1)").unwrap();
        let round = unshift_map(&shift_map(&p, &sym).unwrap(), &sym).unwrap();
        assert_eq!(round, p);
        let flip = Symmetry::flip(2).unwrap();
        assert!(matches!(shift_map(&p, &flip), Err(Error::InvolutiveUnsupported)));
    }

    #[test]
    fn shift_maps_re_ideal_into_modified_ideal() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let re = RelationSet::new(&sym, Variant::Re);
        let modified = RelationSet::new(&sym, Variant::ModifiedRe);
        let red = Reducer::new(&modified, 2);
        for r in re.relations() {
            let img = shift_map(r, &sym).unwrap();
            assert!(red.reduce(&img).unwrap().is_zero());
        }
    }

    #[test]
    fn text_form_round_trip() {
        for text in ["g(1,2).g(2,1)", "q * g(1,1) + 1", "g(2,2).g(2,2).g(1,1)"] {
            let p = NCPoly::parse(2, text).unwrap();
            assert_eq!(NCPoly::parse(2, &p.to_string()).unwrap(), p);
        }
        assert!(NCPoly::parse(2, "g(3,1)").is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn reduce_respects_ideal_membership(useed in 0usize..16, rseed in 0usize..16) {
            // u * r stays in the ideal for any word u and relation r
            let sym = Symmetry::drinfeld_jimbo(2).unwrap();
            let rels = RelationSet::new(&sym, Variant::ModifiedRe);
            let red = Reducer::new(&rels, 3);
            let letters = [Gen::new(1,1), Gen::new(1,2), Gen::new(2,1), Gen::new(2,2)];
            let u = NCPoly::from_word(Word(vec![letters[useed % 4]]), ScalarQ::one());
            let r = &rels.relations()[rseed];
            prop_assert!(red.reduce(&u.mul(r)).unwrap().is_zero());
            prop_assert!(red.reduce(&r.mul(&u)).unwrap().is_zero());
        }
    }
}
