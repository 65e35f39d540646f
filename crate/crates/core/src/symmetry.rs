//! Hecke and involutive symmetries: construction, axiom checks, the
//! skew-inverse Psi with its trace matrices C and B, skew-symmetrizers and
//! the Hilbert-Poincare rank data of the R-skew-symmetric algebra.
//!
//! Every constructor validates what it builds: the braid relation and the
//! quadratic condition are checked exactly over Q(q), Psi is obtained from an
//! exact linear solve of the component system and then re-verified in
//! operator form Tr_(2) R_12 Psi_23 = P_13.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::ScalarQ;
use crate::tensor::{decode_index, encode_index, TensorOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryKind {
    Hecke,
    Involutive,
}

/// Rank report for the R-skew-symmetric algebra.  `Even(m)` means the rank
/// sequence terminated, the Hilbert-Poincare series is a degree-m polynomial
/// and the bi-rank is (m|0).  `Undetermined` reports only the computed ranks;
/// no (m|n) is inferred from finitely many of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BirankReport {
    Even(usize),
    Undetermined { ranks: Vec<usize> },
}

/// A validated braiding together with its skew-inverse data.
#[derive(Debug, Clone)]
pub struct Symmetry {
    kind: SymmetryKind,
    dim_v: usize,
    r: TensorOp,
    psi: TensorOp,
    c_matrix: TensorOp,
    b_matrix: TensorOp,
    birank_even: Option<usize>,
}

impl Symmetry {
    /// Validate a candidate braiding and assemble the skew-inverse package.
    pub fn new(kind: SymmetryKind, r: TensorOp) -> Result<Self> {
        if r.arity() != 2 {
            return Err(Error::Invalid("symmetry operator must have arity 2".into()));
        }
        let n = r.dim_v();
        if !check_braid(&r) {
            return Err(Error::ConstructionFailed("braid relation fails".into()));
        }
        let cond = match kind {
            SymmetryKind::Hecke => check_hecke(&r),
            SymmetryKind::Involutive => check_involutive(&r),
        };
        if !cond {
            return Err(Error::ConstructionFailed(match kind {
                SymmetryKind::Hecke => "Hecke condition (qI - R)(q^-1 I + R) = 0 fails".into(),
                SymmetryKind::Involutive => "involutivity R^2 = I fails".into(),
            }));
        }
        let psi = skew_inverse(&r)?;
        // operator-form cross-check of the component solve
        let r12 = r.embed(1, 3)?;
        let psi23 = psi.embed(2, 3)?;
        let traced = r12.mul(&psi23).partial_trace(2)?;
        if traced != flip_op(n) {
            return Err(Error::ConstructionFailed(
                "skew-inverse fails the operator form Tr_(2) R_12 Psi_23 = P_13".into(),
            ));
        }
        let c_matrix = psi.partial_trace(2)?;
        let b_matrix = psi.partial_trace(1)?;
        let mut sym = Symmetry { kind, dim_v: n, r, psi, c_matrix, b_matrix, birank_even: None };
        sym.birank_even = match sym.birank(n + 1) {
            BirankReport::Even(m) => Some(m),
            BirankReport::Undetermined { .. } => None,
        };
        Ok(sym)
    }

    /// The standard Drinfeld-Jimbo deformation of the flip in braid form:
    /// R(x_i (x) x_i) = q x_i (x) x_i and, for i != j,
    /// R(x_i (x) x_j) = x_j (x) x_i + (q - q^-1) [i < j] x_i (x) x_j.
    pub fn drinfeld_jimbo(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Invalid("dimension must be at least 1".into()));
        }
        let kappa = ScalarQ::q_minus_qinv();
        let mut r = TensorOp::zeros(n, 2);
        for i in 0..n {
            for j in 0..n {
                let col = encode_index(&[i, j], n);
                if i == j {
                    r.set(col, col, ScalarQ::q());
                } else {
                    r.set(encode_index(&[j, i], n), col, ScalarQ::one());
                    if i < j {
                        r.set(col, col, kappa.clone());
                    }
                }
            }
        }
        let sym = Self::new(SymmetryKind::Hecke, r)?;
        if sym.birank_even != Some(n) {
            return Err(Error::ConstructionFailed(format!(
                "Drinfeld-Jimbo symmetry of dimension {n} must have even bi-rank ({n}|0)"
            )));
        }
        Ok(sym)
    }

    /// The plain flip P(x_i (x) x_j) = x_j (x) x_i.
    pub fn flip(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Invalid("dimension must be at least 1".into()));
        }
        Self::new(SymmetryKind::Involutive, flip_op(n))
    }

    /// The graded flip on C^(m|n): sign (-1)^(p(i)p(j)), parity 0 on the
    /// first m basis vectors and 1 on the last n.
    pub fn superflip(m: usize, n: usize) -> Result<Self> {
        if m + n < 1 {
            return Err(Error::Invalid("superflip needs m + n >= 1".into()));
        }
        let dim = m + n;
        let parity = |i: usize| usize::from(i >= m);
        let mut r = TensorOp::zeros(dim, 2);
        for i in 0..dim {
            for j in 0..dim {
                let col = encode_index(&[i, j], dim);
                let row = encode_index(&[j, i], dim);
                let sign = if parity(i) * parity(j) == 1 {
                    ScalarQ::from_int(-1)
                } else {
                    ScalarQ::one()
                };
                r.set(row, col, sign);
            }
        }
        Self::new(SymmetryKind::Involutive, r)
    }

    pub fn kind(&self) -> SymmetryKind {
        self.kind
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn r_matrix(&self) -> &TensorOp {
        &self.r
    }

    pub fn psi(&self) -> &TensorOp {
        &self.psi
    }

    /// Weight matrix of the R-trace, C_i^j = sum_k Psi_ik^jk.
    pub fn c_matrix(&self) -> &TensorOp {
        &self.c_matrix
    }

    /// Action matrix of the defining representation, B_i^j = sum_k Psi_ki^kj.
    pub fn b_matrix(&self) -> &TensorOp {
        &self.b_matrix
    }

    /// q - q^-1 for Hecke symmetries, 0 for involutive ones.  Downstream
    /// q-dependent formulas degenerate through this constant.
    pub fn kappa(&self) -> ScalarQ {
        match self.kind {
            SymmetryKind::Hecke => ScalarQ::q_minus_qinv(),
            SymmetryKind::Involutive => ScalarQ::zero(),
        }
    }

    /// R^-1: from the Hecke condition R^-1 = R - (q - q^-1) I, or R itself
    /// in the involutive case.
    pub fn r_inverse(&self) -> TensorOp {
        match self.kind {
            SymmetryKind::Hecke => {
                let id = TensorOp::identity(self.dim_v, 2);
                self.r.sub(&id.scale(&ScalarQ::q_minus_qinv()))
            }
            SymmetryKind::Involutive => self.r.clone(),
        }
    }

    /// Even bi-rank degree m when the rank sequence terminates by N + 1.
    pub fn even_birank(&self) -> Option<usize> {
        self.birank_even
    }

    /// Skew-symmetrizer A^(k) acting on V^(x)k, built by the recursion
    /// A^(1) = I, A^(k) = (1/k_q) A^(k-1) (q^(k-1) I - (k-1)_q R_(k-1)) A^(k-1),
    /// degenerated at q = 1 for involutive symmetries.
    pub fn skew_symmetrizer(&self, k: usize) -> Result<TensorOp> {
        if k < 1 {
            return Err(Error::Invalid("skew-symmetrizer order must be >= 1".into()));
        }
        let mut a = TensorOp::identity(self.dim_v, 1);
        for step in 2..=k {
            a = self.symmetrizer_step(&a, step)?;
        }
        Ok(a)
    }

    fn symmetrizer_step(&self, prev: &TensorOp, k: usize) -> Result<TensorOp> {
        let (norm, shift, weight) = match self.kind {
            SymmetryKind::Hecke => (
                ScalarQ::qint(k as i64),
                ScalarQ::q_pow(k as i64 - 1),
                ScalarQ::qint(k as i64 - 1),
            ),
            SymmetryKind::Involutive => (
                ScalarQ::from_int(k as i64),
                ScalarQ::one(),
                ScalarQ::from_int(k as i64 - 1),
            ),
        };
        let a_embedded = prev.embed(1, k)?;
        let rk = self.r.embed(k - 1, k)?;
        let middle = TensorOp::identity(self.dim_v, k)
            .scale(&shift)
            .sub(&rk.scale(&weight));
        let product = a_embedded.mul(&middle).mul(&a_embedded);
        Ok(product.scale(&norm.inv().expect("k_q nonzero for generic q")))
    }

    /// Ranks of A^(1)..A^(kmax): dimensions of the graded components of the
    /// R-skew-symmetric algebra.
    pub fn hilbert_dims(&self, kmax: usize) -> Vec<usize> {
        let mut ranks = Vec::with_capacity(kmax);
        let mut a = TensorOp::identity(self.dim_v, 1);
        ranks.push(a.rank());
        for k in 2..=kmax {
            if a.is_zero() {
                ranks.push(0);
                continue;
            }
            a = self.symmetrizer_step(&a, k).expect("recursion step");
            ranks.push(a.rank());
        }
        ranks
    }

    /// Largest k with nonzero rank when the rank sequence terminates within
    /// kmax, otherwise the raw sequence.
    pub fn birank(&self, kmax: usize) -> BirankReport {
        let ranks = self.hilbert_dims(kmax);
        match ranks.iter().position(|&r| r == 0) {
            Some(z) => BirankReport::Even(z), // ranks are 1-based by order k
            None => BirankReport::Undetermined { ranks },
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": match self.kind {
                SymmetryKind::Hecke => "hecke",
                SymmetryKind::Involutive => "involutive",
            },
            "dim_v": self.dim_v,
            "r": self.r.to_json(),
        })
    }

    /// Load and re-validate; serialized symmetries are never trusted.
    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("symmetry: expected object".into()))?;
        let kind = match obj.get("kind").and_then(Value::as_str) {
            Some("hecke") => SymmetryKind::Hecke,
            Some("involutive") => SymmetryKind::Involutive,
            other => return Err(Error::Parse(format!("symmetry: bad kind {other:?}"))),
        };
        let r = TensorOp::from_json(
            obj.get("r").ok_or_else(|| Error::Parse("symmetry: missing r".into()))?,
        )?;
        let dim = obj.get("dim_v").and_then(Value::as_u64);
        if dim != Some(r.dim_v() as u64) {
            return Err(Error::Parse("symmetry: dim_v header disagrees with matrix".into()));
        }
        Self::new(kind, r)
    }
}

pub(crate) fn flip_op(n: usize) -> TensorOp {
    TensorOp::from_fn(n, 2, |row, col| {
        let ri = decode_index(row, n, 2);
        let ci = decode_index(col, n, 2);
        if ri[0] == ci[1] && ri[1] == ci[0] {
            ScalarQ::one()
        } else {
            ScalarQ::zero()
        }
    })
}

/// Exact braid relation R_1 R_2 R_1 = R_2 R_1 R_2 on V^(x)3.
pub fn check_braid(r: &TensorOp) -> bool {
    if r.arity() != 2 {
        return false;
    }
    let r1 = r.embed(1, 3).expect("arity 2 fits");
    let r2 = r.embed(2, 3).expect("arity 2 fits");
    r1.mul(&r2).mul(&r1) == r2.mul(&r1).mul(&r2)
}

/// Exact Hecke condition (qI - R)(q^-1 I + R) = 0.
pub fn check_hecke(r: &TensorOp) -> bool {
    if r.arity() != 2 {
        return false;
    }
    let id = TensorOp::identity(r.dim_v(), 2);
    let left = id.scale(&ScalarQ::q()).sub(r);
    let right = id.scale(&ScalarQ::q_pow(-1)).add(r);
    left.mul(&right).is_zero()
}

/// Exact involutivity R^2 = I.
pub fn check_involutive(r: &TensorOp) -> bool {
    if r.arity() != 2 {
        return false;
    }
    r.mul(r) == TensorOp::identity(r.dim_v(), 2)
}

/// Solve the component system sum_{a,b} R_ib^ja Psi_ak^bn = delta_i^n
/// delta_k^j.  For every fixed (k, n) this is an N^2 x N^2 linear system with
/// the same coefficient matrix M[(i,j),(a,b)] = R[(i,b),(j,a)], so one
/// elimination serves all right-hand sides.
fn skew_inverse(r: &TensorOp) -> Result<TensorOp> {
    let n = r.dim_v();
    let n2 = n * n;
    let mut coeff = vec![vec![ScalarQ::zero(); n2]; n2];
    for i in 0..n {
        for j in 0..n {
            for a in 0..n {
                for b in 0..n {
                    coeff[i * n + j][a * n + b] =
                        r.get(encode_index(&[i, b], n), encode_index(&[j, a], n)).clone();
                }
            }
        }
    }
    let mut psi = TensorOp::zeros(n, 2);
    for k in 0..n {
        for nn in 0..n {
            let mut rhs = vec![ScalarQ::zero(); n2];
            for i in 0..n {
                for j in 0..n {
                    if i == nn && k == j {
                        rhs[i * n + j] = ScalarQ::one();
                    }
                }
            }
            let sol = linalg::solve_square(&coeff, &rhs).ok_or(Error::NotSkewInvertible)?;
            for a in 0..n {
                for b in 0..n {
                    let v = sol[a * n + b].clone();
                    if !v.is_zero() {
                        psi.set(encode_index(&[a, k], n), encode_index(&[b, nn], n), v);
                    }
                }
            }
        }
    }
    Ok(psi)
}
