//! The characteristic map and its distinguished images: conjugated generator
//! chains, ch_n(z), power sums, elementary symmetric polynomials,
//! Cayley-Hamilton verification and (quantum) weight systems.

use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement, Perm};
use crate::ncalg::{NCMatrix, NCPoly, Reducer, Variant};
use crate::scalar::ScalarQ;
use crate::symmetry::{Symmetry, SymmetryKind};

/// A characteristic-subalgebra element: centrality is a semantic invariant
/// verified against a reducer at the working degree bound.
#[derive(Debug, Clone)]
pub struct CentralElement {
    pub expr: NCPoly,
    pub variant: Variant,
    pub provenance: String,
}

/// The conjugated generator copy L_(k bar) on V^(x)p:
/// L_(1 bar) = L_1 and L_(k bar) = R_(k-1) L_(k-1 bar) R_(k-1)^-1.
pub fn l_chain_component(sym: &Symmetry, k: usize, p: usize) -> Result<NCMatrix> {
    if k < 1 || k > p {
        return Err(Error::PositionOutOfRange(format!("chain component {k} of {p}")));
    }
    let n = sym.dim_v();
    let mut comp = NCMatrix::generator_matrix(n).embed(1, p)?;
    let r_inv = sym.r_inverse();
    for step in 2..=k {
        let r = NCMatrix::from_scalar(&sym.r_matrix().embed(step - 1, p)?);
        let ri = NCMatrix::from_scalar(&r_inv.embed(step - 1, p)?);
        comp = r.mul(&comp).mul(&ri);
    }
    Ok(comp)
}

/// The product L_(1 bar) L_(2 bar) ... L_(n bar) on V^(x)n.
pub fn l_chain(sym: &Symmetry, n: usize) -> Result<NCMatrix> {
    let mut chain = l_chain_component(sym, 1, n)?;
    for k in 2..=n {
        chain = chain.mul(&l_chain_component(sym, k, n)?);
    }
    Ok(chain)
}

/// Characteristic map ch_n(z) = Tr_(R(1..n)) ( rho_R(z) L_(1 bar -> n bar) ).
pub fn ch(sym: &Symmetry, variant: Variant, z: &HeckeElement, n: usize) -> Result<CentralElement> {
    if z.strands() != n {
        return Err(Error::StrandMismatch(z.strands(), n));
    }
    let algebra = HeckeAlgebra::for_symmetry(sym, n);
    let rho = NCMatrix::from_scalar(&algebra.rho(sym, z)?);
    let chain = l_chain(sym, n)?;
    let expr = rho.mul(&chain).r_trace_all(sym.c_matrix());
    Ok(CentralElement { expr, variant, provenance: format!("ch_{n}({z})") })
}

/// Same trace with the factors in the paper's other order,
/// Tr_(R(1..n)) ( L_(1 bar -> n bar) rho_R(z) ); the two agree modulo the
/// defining relations and tests check exactly that.
pub fn ch_reversed(
    sym: &Symmetry,
    variant: Variant,
    z: &HeckeElement,
    n: usize,
) -> Result<CentralElement> {
    if z.strands() != n {
        return Err(Error::StrandMismatch(z.strands(), n));
    }
    let algebra = HeckeAlgebra::for_symmetry(sym, n);
    let rho = NCMatrix::from_scalar(&algebra.rho(sym, z)?);
    let chain = l_chain(sym, n)?;
    let expr = chain.mul(&rho).r_trace_all(sym.c_matrix());
    Ok(CentralElement { expr, variant, provenance: format!("ch_{n}-reversed({z})") })
}

/// Quantum weight system w(z): the characteristic map applied to an
/// arbitrary word polynomial in the generators.
pub fn weight_system(
    sym: &Symmetry,
    variant: Variant,
    z: &HeckeElement,
    n: usize,
) -> Result<CentralElement> {
    let mut out = ch(sym, variant, z, n)?;
    out.provenance = format!("w({z})");
    Ok(out)
}

/// k-th power sum p_k = Tr_R L^k = Tr(C L^k).
pub fn power_sum(sym: &Symmetry, variant: Variant, k: usize) -> CentralElement {
    let l = NCMatrix::generator_matrix(sym.dim_v());
    let expr = l.pow(k).r_trace_all(sym.c_matrix());
    CentralElement { expr, variant, provenance: format!("p_{k}") }
}

/// k-th elementary symmetric polynomial
/// e_k = Tr_(R(1..k)) ( A^(k) L_(1 bar -> k bar) ).
pub fn elementary(sym: &Symmetry, variant: Variant, k: usize) -> Result<CentralElement> {
    let a = sym.skew_symmetrizer(k)?;
    if a.is_zero() {
        return Err(Error::ZeroSymmetrizer(k));
    }
    let chain = l_chain(sym, k)?;
    let expr = NCMatrix::from_scalar(&a).mul(&chain).r_trace_all(sym.c_matrix());
    Ok(CentralElement { expr, variant, provenance: format!("e_{k}") })
}

/// The Cayley-Hamilton combination
/// sum_(k=0..m) (-c)^k e_k(L) L^(m-k), c = q (Hecke) or 1 (involutive).
/// Every entry reduces to zero modulo the homogeneous relations.
pub fn cayley_hamilton_matrix(sym: &Symmetry, variant: Variant, m: usize) -> Result<NCMatrix> {
    let base = match sym.kind() {
        SymmetryKind::Hecke => ScalarQ::q(),
        SymmetryKind::Involutive => ScalarQ::one(),
    };
    let l = NCMatrix::generator_matrix(sym.dim_v());
    let mut acc = l.pow(m);
    for k in 1..=m {
        let ek = elementary(sym, variant, k)?;
        let sign = base.negate().pow(k as i64).expect("integer power");
        let term = l.pow(m - k).scale(&ek.expr.scale(&sign));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Cayley-Hamilton verdict per matrix entry.  The homogeneous variant checks
/// the combination above; the modified variant checks Q(L-hat) = 0 for the
/// characteristic polynomial of `ch_poly_modified`.
pub fn cayley_hamilton_check(
    sym: &Symmetry,
    variant: Variant,
    m: usize,
    reducer: &Reducer,
) -> Result<Vec<bool>> {
    let matrix = match variant {
        Variant::Re => cayley_hamilton_matrix(sym, variant, m)?,
        Variant::ModifiedRe => {
            let q_poly = ch_poly_modified(sym)?;
            q_poly.substitute_generator_matrix(sym.dim_v())
        }
    };
    let d = matrix.dim();
    let mut verdicts = Vec::with_capacity(d * d);
    for r in 0..d {
        for c in 0..d {
            verdicts.push(reducer.reduce(matrix.get(r, c))?.is_zero());
        }
    }
    Ok(verdicts)
}

/// Polynomial in a central formal variable t with NCPoly coefficients,
/// `coeffs[j]` attached to t^j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    pub coeffs: Vec<NCPoly>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Left substitution t -> L-hat: sum_j coeffs[j] * L-hat^j.
    pub fn substitute_generator_matrix(&self, dim_v: usize) -> NCMatrix {
        let l = NCMatrix::generator_matrix(dim_v);
        let mut acc = NCMatrix::zeros(dim_v, 1);
        for (j, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&l.pow(j).scale(c));
        }
        acc
    }
}

/// The Cayley-Hamilton polynomial of the modified algebra:
/// Q(t) = Tr_(R(1..m)) ( A^(m) prod_(k=1..m)
///          ( q^(2(k-1)) (t - q^(-k+1) (k-1)_q) I - Lhat_(k bar) ) ),
/// with the q = 1 degeneration of the constants in the involutive case.
pub fn ch_poly_modified(sym: &Symmetry) -> Result<CharPoly> {
    let m = sym
        .even_birank()
        .ok_or_else(|| Error::Invalid("modified CH polynomial needs an even bi-rank".into()))?;
    let n = sym.dim_v();
    let a = sym.skew_symmetrizer(m)?;
    if a.is_zero() {
        return Err(Error::ZeroSymmetrizer(m));
    }
    // ordered product of factors affine in t, tracked per power of t
    let mut coeffs: Vec<NCMatrix> = vec![NCMatrix::identity(n, m)];
    for k in 1..=m {
        let (alpha, shift) = match sym.kind() {
            SymmetryKind::Hecke => (
                ScalarQ::q_pow(2 * (k as i64 - 1)),
                &ScalarQ::q_pow(-(k as i64) + 1) * &ScalarQ::qint(k as i64 - 1),
            ),
            SymmetryKind::Involutive => (ScalarQ::one(), ScalarQ::from_int(k as i64 - 1)),
        };
        let constant = NCMatrix::identity(n, m)
            .scale(&NCPoly::constant(&alpha.negate() * &shift))
            .sub(&l_chain_component(sym, k, m)?);
        let alpha_id = NCMatrix::identity(n, m).scale(&NCPoly::constant(alpha));
        let mut next: Vec<NCMatrix> = Vec::with_capacity(coeffs.len() + 1);
        for j in 0..=coeffs.len() {
            let mut acc = NCMatrix::zeros(n, m);
            if j > 0 {
                acc = acc.add(&coeffs[j - 1].mul(&alpha_id));
            }
            if j < coeffs.len() {
                acc = acc.add(&coeffs[j].mul(&constant));
            }
            next.push(acc);
        }
        coeffs = next;
    }
    let a_nc = NCMatrix::from_scalar(&a);
    let coeffs = coeffs
        .into_iter()
        .map(|p| a_nc.mul(&p).r_trace_all(sym.c_matrix()))
        .collect();
    Ok(CharPoly { coeffs })
}

/// Classical weight system in index form:
/// sum over tuples of l_(i1)^(i_sigma(1)) ... l_(in)^(i_sigma(n)).
pub fn classical_weight_index_form(sigma: &Perm, dim_v: usize) -> NCPoly {
    let n = sigma.degree();
    let mut out = NCPoly::zero();
    let mut tuple = vec![0usize; n];
    loop {
        let word: Vec<_> = (0..n)
            .map(|k| crate::ncalg::Gen::new(tuple[k] + 1, tuple[sigma.apply(k)] + 1))
            .collect();
        out = out.add(&NCPoly::from_word(crate::ncalg::Word(word), ScalarQ::one()));
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            tuple[k] += 1;
            if tuple[k] < dim_v {
                break;
            }
            tuple[k] = 0;
        }
    }
}

/// Classical weight system in trace form:
/// Tr_(1..n) ( Lhat_1 ... Lhat_n  rho_P(sigma) ).
pub fn classical_weight_trace_form(sigma: &Perm, dim_v: usize) -> Result<NCPoly> {
    let n = sigma.degree();
    let flip = Symmetry::flip(dim_v)?;
    let algebra = HeckeAlgebra::symmetric_group(n);
    // the monomial P_sigma(P_1..P_(n-1)) composes permutation words left to
    // right, which is rho of the inverse in the function-composition
    // convention used by Perm; the index form fixes this pairing
    let perm_op = NCMatrix::from_scalar(&algebra.rho(&flip, &algebra.basis(sigma.inverse()))?);
    let chain = l_chain(&flip, n)?;
    // plain trace: the flip has C = I
    Ok(chain.mul(&perm_op).trace())
}

/// Classical weight system; the index and trace forms agree as free
/// noncommutative polynomials, which is asserted here.
pub fn classical_weight(sigma: &Perm, dim_v: usize) -> Result<NCPoly> {
    let index_form = classical_weight_index_form(sigma, dim_v);
    let trace_form = classical_weight_trace_form(sigma, dim_v)?;
    assert_eq!(
        index_form, trace_form,
        "index and trace forms of the classical weight system must agree"
    );
    Ok(index_form)
}
