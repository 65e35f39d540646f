//! Exact dense operators on tensor powers V^(x)n over Q(q).
//!
//! Rows and columns are indexed by multi-indices (i_1..i_n), i_k in 0..N,
//! encoded row-major: flat = sum i_k N^(n-k).  The module provides Kronecker
//! embeddings X_k = I^(k-1) (x) X (x) I^(n-k), plain partial traces and the
//! R-trace weighted by a fixed matrix C, plus rank over Q(q).

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::ScalarQ;

/// Square matrix acting on V^(x)arity with dim V = dim_v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorOp {
    dim_v: usize,
    arity: usize,
    entries: Vec<ScalarQ>,
}

impl TensorOp {
    pub fn zeros(dim_v: usize, arity: usize) -> Self {
        assert!(dim_v >= 1);
        let d = dim_v.pow(arity as u32);
        TensorOp { dim_v, arity, entries: vec![ScalarQ::zero(); d * d] }
    }

    pub fn identity(dim_v: usize, arity: usize) -> Self {
        let mut m = Self::zeros(dim_v, arity);
        for i in 0..m.dim() {
            m.set(i, i, ScalarQ::one());
        }
        m
    }

    pub fn from_fn(dim_v: usize, arity: usize, mut f: impl FnMut(usize, usize) -> ScalarQ) -> Self {
        let mut m = Self::zeros(dim_v, arity);
        for r in 0..m.dim() {
            for c in 0..m.dim() {
                let v = f(r, c);
                if !v.is_zero() {
                    m.set(r, c, v);
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

    /// Total matrix dimension N^arity.
    pub fn dim(&self) -> usize {
        self.dim_v.pow(self.arity as u32)
    }

    pub fn get(&self, row: usize, col: usize) -> &ScalarQ {
        &self.entries[row * self.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: ScalarQ) {
        let d = self.dim();
        self.entries[row * d + col] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.dim_v, self.arity), (other.dim_v, other.arity));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        TensorOp { dim_v: self.dim_v, arity: self.arity, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.dim_v, self.arity), (other.dim_v, other.arity));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        TensorOp { dim_v: self.dim_v, arity: self.arity, entries }
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        let entries = self.entries.iter().map(|a| a * c).collect();
        TensorOp { dim_v: self.dim_v, arity: self.arity, entries }
    }

    pub fn neg(&self) -> Self {
        self.scale(&ScalarQ::from_int(-1))
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
                    let t = out.get(i, j) + &(a * b);
                    out.set(i, j, t);
                }
            }
        }
        out
    }

    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.dim_v, other.dim_v);
        let (da, db) = (self.dim(), other.dim());
        let mut out = Self::zeros(self.dim_v, self.arity + other.arity);
        for ra in 0..da {
            for ca in 0..da {
                let a = self.get(ra, ca);
                if a.is_zero() {
                    continue;
                }
                for rb in 0..db {
                    for cb in 0..db {
                        let b = other.get(rb, cb);
                        if !b.is_zero() {
                            out.set(ra * db + rb, ca * db + cb, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Place this operator at slots k..k+arity-1 of V^(x)p (1-based k).
    pub fn embed(&self, k: usize, p: usize) -> Result<Self> {
        if k < 1 || k + self.arity - 1 > p {
            return Err(Error::PositionOutOfRange(format!(
                "embed at slot {k} of arity {} into {p} factors",
                self.arity
            )));
        }
        let left = Self::identity(self.dim_v, k - 1);
        let right = Self::identity(self.dim_v, p + 1 - k - self.arity);
        Ok(left.kron(self).kron(&right))
    }

    /// Contract row and column indices at slot k (1-based), arity drops by 1.
    pub fn partial_trace(&self, k: usize) -> Result<Self> {
        if k < 1 || k > self.arity {
            return Err(Error::PositionOutOfRange(format!(
                "trace slot {k} of arity {}",
                self.arity
            )));
        }
        let n = self.dim_v;
        let hi = n.pow((k - 1) as u32); // strides of the slots before k
        let lo = n.pow((self.arity - k) as u32); // strides after k
        let mut out = Self::zeros(n, self.arity - 1);
        for rh in 0..hi {
            for rl in 0..lo {
                for ch in 0..hi {
                    for cl in 0..lo {
                        let mut acc = ScalarQ::zero();
                        for s in 0..n {
                            let row = (rh * n + s) * lo + rl;
                            let col = (ch * n + s) * lo + cl;
                            let v = self.get(row, col);
                            if !v.is_zero() {
                                acc = &acc + v;
                            }
                        }
                        if !acc.is_zero() {
                            out.set(rh * lo + rl, ch * lo + cl, acc);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// R-trace at slot k: insert the weight matrix C at that slot, then
    /// contract it.  With C = I this is the plain partial trace.
    pub fn r_partial_trace(&self, c_weight: &TensorOp, k: usize) -> Result<Self> {
        assert_eq!(c_weight.arity, 1);
        assert_eq!(c_weight.dim_v, self.dim_v);
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
                        let mut acc = ScalarQ::zero();
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
                                    acc = &acc + &(w * v);
                                }
                            }
                        }
                        if !acc.is_zero() {
                            out.set(rh * lo + rl, ch * lo + cl, acc);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Full R-trace over every slot; the arity-0 result is returned as the
    /// remaining 1x1 entry.
    pub fn r_trace_all(&self, c_weight: &TensorOp) -> ScalarQ {
        let mut m = self.clone();
        for _ in 0..self.arity {
            let k = m.arity;
            m = m.r_partial_trace(c_weight, k).expect("slot in range");
        }
        m.get(0, 0).clone()
    }

    /// Plain trace.
    pub fn trace(&self) -> ScalarQ {
        let mut acc = ScalarQ::zero();
        for i in 0..self.dim() {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Rank over Q(q) via fraction-free elimination.
    pub fn rank(&self) -> usize {
        let d = self.dim();
        let rows: Vec<Vec<ScalarQ>> = (0..d)
            .map(|r| (0..d).map(|c| self.get(r, c).clone()).collect())
            .collect();
        linalg::rank_fraction_free(&rows)
    }

    pub fn to_json(&self) -> Value {
        let d = self.dim();
        let mut entries = Vec::new();
        for r in 0..d {
            for c in 0..d {
                let v = self.get(r, c);
                if !v.is_zero() {
                    entries.push(json!([r, c, v.to_string()]));
                }
            }
        }
        json!({ "dim_v": self.dim_v, "arity": self.arity, "entries": entries })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("matrix: expected object".into()))?;
        let dim_v = obj
            .get("dim_v")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("matrix: missing dim_v".into()))? as usize;
        let arity = obj
            .get("arity")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("matrix: missing arity".into()))? as usize;
        if dim_v < 1 {
            return Err(Error::Parse("matrix: dim_v must be positive".into()));
        }
        let mut m = Self::zeros(dim_v, arity);
        let d = m.dim();
        let entries = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("matrix: missing entries".into()))?;
        for e in entries {
            let triple = e.as_array().filter(|a| a.len() == 3).ok_or_else(|| {
                Error::Parse("matrix: entry must be [row, col, scalar]".into())
            })?;
            let r = triple[0].as_u64().ok_or_else(|| Error::Parse("matrix: bad row".into()))?
                as usize;
            let c = triple[1].as_u64().ok_or_else(|| Error::Parse("matrix: bad col".into()))?
                as usize;
            if r >= d || c >= d {
                return Err(Error::Parse(format!("matrix: index ({r},{c}) out of range")));
            }
            let s = triple[2]
                .as_str()
                .ok_or_else(|| Error::Parse("matrix: scalar must be a string".into()))?;
            m.set(r, c, ScalarQ::parse(s)?);
        }
        Ok(m)
    }

    /// Entry-wise q -> 1 limit, for comparing deformations with their
    /// classical degenerations.
    pub fn limit_q1(&self) -> Result<TensorOp> {
        let mut out = Self::zeros(self.dim_v, self.arity);
        let d = self.dim();
        for r in 0..d {
            for c in 0..d {
                let v = self.get(r, c);
                if !v.is_zero() {
                    let l = v.limit_q1()?;
                    out.set(r, c, ScalarQ::from_rational(&l));
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TensorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        for r in 0..d {
            let row: Vec<String> = (0..d).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Decode a flat index into the multi-index (i_1..i_n).
pub fn decode_index(flat: usize, dim_v: usize, arity: usize) -> Vec<usize> {
    let mut idx = vec![0; arity];
    let mut rest = flat;
    for k in (0..arity).rev() {
        idx[k] = rest % dim_v;
        rest /= dim_v;
    }
    idx
}

/// Encode a multi-index row-major.
pub fn encode_index(idx: &[usize], dim_v: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim_v + i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::Symmetry;
    use num::{BigInt, BigRational};
    use proptest::prelude::*;

    fn flip_matrix(n: usize) -> TensorOp {
        TensorOp::from_fn(n, 2, |r, c| {
            let ri = decode_index(r, n, 2);
            let ci = decode_index(c, n, 2);
            if ri[0] == ci[1] && ri[1] == ci[0] {
                ScalarQ::one()
            } else {
                ScalarQ::zero()
            }
        })
    }

    #[test]
    fn embed_identity_and_edges() {
        let id = TensorOp::identity(2, 1);
        assert_eq!(id.embed(2, 3).unwrap(), TensorOp::identity(2, 3));
        let r = flip_matrix(2);
        assert_eq!(r.embed(1, 2).unwrap(), r);
        assert_eq!(r.embed(2, 3).unwrap(), TensorOp::identity(2, 1).kron(&r));
        assert!(matches!(r.embed(3, 3), Err(Error::PositionOutOfRange(_))));
    }

    #[test]
    fn partial_trace_basics() {
        let n = 3;
        let id2 = TensorOp::identity(n, 2);
        let expected = TensorOp::identity(n, 1).scale(&ScalarQ::from_int(n as i64));
        assert_eq!(id2.partial_trace(2).unwrap(), expected);
        // tracing either slot of the flip leaves the identity
        let p = flip_matrix(2);
        assert_eq!(p.partial_trace(1).unwrap(), TensorOp::identity(2, 1));
        assert_eq!(p.partial_trace(2).unwrap(), TensorOp::identity(2, 1));
        assert!(p.partial_trace(3).is_err());
    }

    #[test]
    fn psi_operator_identity_for_dj2() {
        // Tr_(2) R_12 Psi_23 = P_13 for the N = 2 Drinfeld-Jimbo pair
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let r12 = sym.r_matrix().embed(1, 3).unwrap();
        let psi23 = sym.psi().embed(2, 3).unwrap();
        let traced = r12.mul(&psi23).partial_trace(2).unwrap();
        assert_eq!(traced, flip_matrix(2));
    }

    #[test]
    fn r_partial_trace_pays_off() {
        // Tr_{R(k+1)} R_k = I for dj(2), k = 1, 2
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        for k in 1..=2usize {
            let rk = sym.r_matrix().embed(k, k + 1).unwrap();
            let traced = rk.r_partial_trace(sym.c_matrix(), k + 1).unwrap();
            assert_eq!(traced, TensorOp::identity(2, k), "k = {k}");
        }
        // with C = I the R-trace is the plain partial trace
        let m = flip_matrix(3);
        let id = TensorOp::identity(3, 1);
        assert_eq!(m.r_partial_trace(&id, 1).unwrap(), m.partial_trace(1).unwrap());
        // N = 1 Hecke symmetry R = (q): Tr_R I = q^-1
        let sym1 = Symmetry::drinfeld_jimbo(1).unwrap();
        let tr = TensorOp::identity(1, 1).r_trace_all(sym1.c_matrix());
        assert_eq!(tr, ScalarQ::q_pow(-1));
    }

    #[test]
    fn trace_of_kron_factorizes() {
        let a = TensorOp::from_fn(2, 1, |r, c| ScalarQ::from_int((r * 2 + c + 1) as i64));
        let b = TensorOp::from_fn(2, 1, |r, c| {
            if r == c {
                ScalarQ::q_pow(r as i64 + 1)
            } else {
                ScalarQ::one()
            }
        });
        let traced = a.kron(&b).partial_trace(2).unwrap();
        assert_eq!(traced, a.scale(&b.trace()));
    }

    #[test]
    fn r_trace_cyclicity_for_r_generated_operators() {
        // M, N built from R_k embeddings commute with C (x) C (x) C, so the
        // full R-trace is cyclic on them.
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let c = sym.c_matrix();
        let m = sym.r_matrix().embed(1, 3).unwrap();
        let n = sym.r_matrix().embed(2, 3).unwrap();
        let lhs = m.mul(&n).r_trace_all(c);
        let rhs = n.mul(&m).r_trace_all(c);
        assert_eq!(lhs, rhs);
    }

    /// Test-side oracle: rank over Q by clearing a rational matrix to
    /// integers and running plain fraction-free elimination on BigInt.
    fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
        use num::{Integer, One, Signed, Zero};
        let nrows = rows.len();
        if nrows == 0 {
            return 0;
        }
        let ncols = rows[0].len();
        let mut m: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                let mut l = BigInt::one();
                for x in row {
                    l = l.lcm(x.denom());
                }
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..ncols {
            if r >= nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let pivot = m[r][c].clone();
            for i in (r + 1)..nrows {
                for j in (c + 1)..ncols {
                    let t = &pivot * &m[i][j] - &m[i][c] * &m[r][j];
                    assert!((&t % &prev).abs() == BigInt::zero());
                    m[i][j] = t / &prev;
                }
                m[i][c] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
            r += 1;
        }
        rank
    }

    #[test]
    fn rank_consistency_with_specialization() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let a2 = sym.skew_symmetrizer(2).unwrap();
        let exact = a2.rank();
        assert_eq!(exact, 1);
        // specialize at a non-degenerate rational point and cross-check
        let q0 = BigRational::new(BigInt::from(3), BigInt::from(2));
        let d = a2.dim();
        let rows: Vec<Vec<BigRational>> = (0..d)
            .map(|r| (0..d).map(|c| a2.get(r, c).eval_at(&q0).unwrap()).collect())
            .collect();
        assert_eq!(rank_rational(&rows), exact);
    }

    #[test]
    fn rank_invariant_under_permutation() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let a2 = sym.skew_symmetrizer(2).unwrap();
        let d = a2.dim();
        // reverse rows and columns
        let permuted = TensorOp::from_fn(2, 2, |r, c| a2.get(d - 1 - r, d - 1 - c).clone());
        assert_eq!(permuted.rank(), a2.rank());
    }

    #[test]
    fn json_round_trip() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let r = sym.r_matrix();
        let v = r.to_json();
        let back = TensorOp::from_json(&v).unwrap();
        assert_eq!(&back, r);
    }

    proptest! {
        #[test]
        fn kron_trace_property(avals in proptest::collection::vec(-4i64..=4, 4),
                               bvals in proptest::collection::vec(-4i64..=4, 4)) {
            let a = TensorOp::from_fn(2, 1, |r, c| ScalarQ::from_int(avals[r * 2 + c]));
            let b = TensorOp::from_fn(2, 1, |r, c| ScalarQ::from_int(bvals[r * 2 + c]));
            prop_assert_eq!(a.kron(&b).partial_trace(2).unwrap(), a.scale(&b.trace()));
            prop_assert_eq!(a.kron(&b).partial_trace(1).unwrap(), b.scale(&a.trace()));
        }
    }
}
