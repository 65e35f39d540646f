//! The defining representation of the modified Reflection Equation algebra
//! on V through the B-matrix action lhat_i^j . x_k = B_k^j x_i, with
//! representation-axiom verification and end-to-end character cross-checks
//! against the spectral parameterization.

use crate::charmap::CentralElement;
use crate::error::{Error, Result};
use crate::ncalg::{unshift_map, Gen, NCPoly, Reducer, RelationSet, Variant};
use crate::scalar::ScalarQ;
use crate::spectral::{
    character, express_in_e_basis, hc_morphism, muhat_char, zamena_substitute, Partition,
};
use crate::symmetry::Symmetry;
use crate::tensor::TensorOp;

/// Validated module structure: one N x N image matrix per generator.
#[derive(Debug, Clone)]
pub struct RepOnV {
    sym: Symmetry,
    images: Vec<TensorOp>,
}

/// Build the defining representation and verify every modified relation
/// vanishes on the images.
pub fn rep_on_v(sym: &Symmetry) -> Result<RepOnV> {
    let n = sym.dim_v();
    let b = sym.b_matrix();
    let mut images = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // (M(i,j))[a, k] = delta_(a,i) B_k^j
            let m = TensorOp::from_fn(n, 1, |a, k| {
                if a == i {
                    b.get(k, j).clone()
                } else {
                    ScalarQ::zero()
                }
            });
            images.push(m);
        }
    }
    let rep = RepOnV { sym: sym.clone(), images };
    let rels = RelationSet::new(sym, Variant::ModifiedRe);
    for (idx, r) in rels.relations().iter().enumerate() {
        if !rep.evaluate(r).is_zero() {
            return Err(Error::RepresentationCheckFailed(format!(
                "modified relation {idx} does not vanish on V"
            )));
        }
    }
    Ok(rep)
}

impl RepOnV {
    pub fn symmetry(&self) -> &Symmetry {
        &self.sym
    }

    pub fn image(&self, g: Gen) -> &TensorOp {
        let n = self.sym.dim_v();
        &self.images[(g.row as usize - 1) * n + (g.col as usize - 1)]
    }

    /// Homomorphism evaluation of a generator polynomial.
    pub fn evaluate(&self, p: &NCPoly) -> TensorOp {
        let n = self.sym.dim_v();
        let mut out = TensorOp::zeros(n, 1);
        for (word, coeff) in p.terms() {
            let mut img = TensorOp::identity(n, 1);
            for &g in &word.0 {
                img = img.mul(self.image(g));
            }
            out = out.add(&img.scale(coeff));
        }
        out
    }

    /// Some(c) when the operator is the scalar matrix c I.
    pub fn as_scalar(op: &TensorOp) -> Option<ScalarQ> {
        let d = op.dim();
        let c = op.get(0, 0).clone();
        for r in 0..d {
            for col in 0..d {
                let expected = if r == col { &c } else { &ScalarQ::zero() } as &ScalarQ;
                if op.get(r, col) != expected {
                    return None;
                }
            }
        }
        Some(c)
    }
}

/// Spectral prediction for a central element of the modified algebra: undo
/// the shift into the homogeneous algebra, express there in the e-basis,
/// push through the Harish-Chandra morphism, substitute into hatted
/// variables and evaluate at the hatted characters of lambda.
pub fn modified_spectral_prediction(
    z: &CentralElement,
    sym: &Symmetry,
    reducer_re: &Reducer,
    lambda: &Partition,
) -> Result<ScalarQ> {
    if z.variant != Variant::ModifiedRe {
        return Err(Error::Invalid("spectral prediction expects a modified-algebra element".into()));
    }
    let m = sym
        .even_birank()
        .ok_or_else(|| Error::Invalid("spectral prediction needs an even bi-rank".into()))?;
    let in_l = CentralElement {
        expr: unshift_map(&z.expr, sym)?,
        variant: Variant::Re,
        provenance: format!("unshift({})", z.provenance),
    };
    let max_deg = in_l.expr.degree();
    let in_e = express_in_e_basis(&in_l, sym, reducer_re, max_deg)?;
    let in_mu = hc_morphism(&in_e);
    let in_muhat = zamena_substitute(&in_mu);
    character(&in_muhat, &muhat_char(lambda, m)?)
}

/// Check that a central element acts on V = V_(1,0,..) as a scalar equal to
/// its spectral prediction; returns the scalar.
pub fn character_check(
    sym: &Symmetry,
    z: &CentralElement,
    reducer_re: &Reducer,
    lambda: &Partition,
) -> Result<ScalarQ> {
    let m = sym
        .even_birank()
        .ok_or_else(|| Error::Invalid("character check needs an even bi-rank".into()))?;
    if lambda.padded(m)? != Partition::defining(m).parts() {
        return Err(Error::Invalid(
            "only the defining module lambda = (1, 0, ...) is realized on V".into(),
        ));
    }
    let rep = rep_on_v(sym)?;
    let image = rep.evaluate(&z.expr);
    let actual = RepOnV::as_scalar(&image).ok_or(Error::NotScalar)?;
    let expected = modified_spectral_prediction(z, sym, reducer_re, lambda)?;
    if actual != expected {
        return Err(Error::CharacterMismatch {
            actual: actual.to_string(),
            expected: expected.to_string(),
        });
    }
    Ok(actual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmap::{elementary, power_sum, weight_system};
    use crate::hecke::HeckeAlgebra;
    use crate::spectral::powersum_hat_sym;
    use num::{BigInt, BigRational};

    #[test]
    fn n1_image_is_qinv() {
        let sym = Symmetry::drinfeld_jimbo(1).unwrap();
        let rep = rep_on_v(&sym).unwrap();
        assert_eq!(rep.image(Gen::new(1, 1)).get(0, 0), &ScalarQ::q_pow(-1));
    }

    #[test]
    fn flip_action_is_defining_gl_representation() {
        // B = I for the flip, so lhat_i^j . x_k = delta_k^j x_i
        let sym = Symmetry::flip(3).unwrap();
        let rep = rep_on_v(&sym).unwrap();
        for i in 1..=3usize {
            for j in 1..=3usize {
                let img = rep.image(Gen::new(i, j));
                for a in 0..3 {
                    for k in 0..3 {
                        let expected = if a == i - 1 && k == j - 1 {
                            ScalarQ::one()
                        } else {
                            ScalarQ::zero()
                        };
                        assert_eq!(img.get(a, k), &expected);
                    }
                }
            }
        }
    }

    #[test]
    fn dj2_all_relations_vanish() {
        // rep_on_v verifies all 16 modified relations internally
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        assert!(rep_on_v(&sym).is_ok());
    }

    #[test]
    fn evaluate_is_homomorphism() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rep = rep_on_v(&sym).unwrap();
        let p = NCPoly::parse(2, "g(1,2).g(2,1) + q * g(1,1)").unwrap();
        let q = NCPoly::parse(2, "g(2,2) - g(1,1).g(1,2)").unwrap();
        assert_eq!(rep.evaluate(&p.mul(&q)), rep.evaluate(&p).mul(&rep.evaluate(&q)));
        assert_eq!(rep.evaluate(&NCPoly::one()), TensorOp::identity(2, 1));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(16))]
        #[test]
        fn evaluate_homomorphism_on_random_words(
            wa in proptest::collection::vec(0usize..4, 0..3),
            wb in proptest::collection::vec(0usize..4, 0..3),
        ) {
            let sym = Symmetry::drinfeld_jimbo(2).unwrap();
            let rep = rep_on_v(&sym).unwrap();
            let gens = [Gen::new(1, 1), Gen::new(1, 2), Gen::new(2, 1), Gen::new(2, 2)];
            let build = |w: &[usize]| {
                let mut acc = NCPoly::one();
                for &i in w {
                    acc = acc.mul(&NCPoly::from_word(
                        crate::ncalg::Word(vec![gens[i]]),
                        ScalarQ::one(),
                    ));
                }
                acc
            };
            let (a, b) = (build(&wa), build(&wb));
            proptest::prop_assert_eq!(
                rep.evaluate(&a.mul(&b)),
                rep.evaluate(&a).mul(&rep.evaluate(&b))
            );
        }
    }

    #[test]
    fn equivalent_elements_have_equal_images() {
        // the worked identity w_mod(t1.t2) = Tr Lhat^3 + (Tr Lhat)^2
        // - Tr_R(I) Tr Lhat^2 holds on the nose after evaluation
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rep = rep_on_v(&sym).unwrap();
        let h = HeckeAlgebra::generic(3);
        let w = weight_system(&sym, Variant::ModifiedRe, &h.parse("t1.t2").unwrap(), 3).unwrap();
        let p1 = power_sum(&sym, Variant::ModifiedRe, 1).expr;
        let p2 = power_sum(&sym, Variant::ModifiedRe, 2).expr;
        let p3 = power_sum(&sym, Variant::ModifiedRe, 3).expr;
        let qdim = sym.c_matrix().trace();
        let rhs = p3.add(&p1.mul(&p1)).sub(&p2.scale(&qdim));
        let img = rep.evaluate(&w.expr);
        assert_eq!(img, rep.evaluate(&rhs));
        // the common scalar is q^-8, the two-route character value
        assert_eq!(RepOnV::as_scalar(&img), Some(ScalarQ::q_pow(-8)));
    }

    #[test]
    fn central_elements_act_as_scalars() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rep = rep_on_v(&sym).unwrap();
        for k in 1..=3usize {
            let pk = power_sum(&sym, Variant::ModifiedRe, k);
            let img = rep.evaluate(&pk.expr);
            assert!(RepOnV::as_scalar(&img).is_some(), "p_{k} acts as a scalar");
        }
        for k in 1..=2usize {
            let ek = elementary(&sym, Variant::ModifiedRe, k).unwrap();
            let img = rep.evaluate(&ek.expr);
            assert!(RepOnV::as_scalar(&img).is_some(), "e_{k} acts as a scalar");
        }
        // a non-central element does not
        let img = rep.evaluate(&NCPoly::gen(1, 2));
        assert!(RepOnV::as_scalar(&img).is_none());
    }

    #[test]
    fn character_check_power_sums() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 4);
        let lam = Partition::defining(2);
        for k in 1..=3usize {
            let pk = power_sum(&sym, Variant::ModifiedRe, k);
            let c = character_check(&sym, &pk, &red, &lam).unwrap();
            // the scalar also matches the direct hatted parameterization
            let hat = muhat_char(&lam, 2).unwrap();
            let direct = character(&powersum_hat_sym(k, 2).unwrap(), &hat).unwrap();
            assert_eq!(c, direct, "p_{k} two-route character");
        }
    }

    #[test]
    fn character_check_p1_explicit_value() {
        // hand-derived: chi(p_1hat) at lambda = (1,0) is q^-4
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 4);
        let p1 = power_sum(&sym, Variant::ModifiedRe, 1);
        let c = character_check(&sym, &p1, &red, &Partition::defining(2)).unwrap();
        assert_eq!(c, ScalarQ::q_pow(-4));
    }

    #[test]
    fn classical_q1_character_of_tr_l2() {
        // flip(2): Tr Lhat^2 on V has character N = 2, matching the q -> 1
        // limit of the hatted parameterization at lambda = (1, 0)
        let sym = Symmetry::flip(2).unwrap();
        let rep = rep_on_v(&sym).unwrap();
        let p2 = power_sum(&sym, Variant::ModifiedRe, 2);
        let img = rep.evaluate(&p2.expr);
        let c = RepOnV::as_scalar(&img).unwrap();
        assert_eq!(c, ScalarQ::from_int(2));
        let lam = Partition::defining(2);
        let hat = muhat_char(&lam, 2).unwrap();
        let spectral = character(&powersum_hat_sym(2, 2).unwrap(), &hat).unwrap();
        assert_eq!(
            spectral.limit_q1().unwrap(),
            BigRational::from(BigInt::from(2))
        );
    }

    #[test]
    fn noncentral_elements_fail_with_not_scalar() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 4);
        let fake = CentralElement {
            expr: NCPoly::gen(1, 2),
            variant: Variant::ModifiedRe,
            provenance: "not actually central".into(),
        };
        assert!(matches!(
            character_check(&sym, &fake, &red, &Partition::defining(2)),
            Err(Error::NotScalar)
        ));
    }

    #[test]
    fn unsupported_partitions_are_rejected() {
        let sym = Symmetry::drinfeld_jimbo(2).unwrap();
        let rels = RelationSet::new(&sym, Variant::Re);
        let red = Reducer::new(&rels, 4);
        let p1 = power_sum(&sym, Variant::ModifiedRe, 1);
        let lam = Partition::new(vec![2, 0]).unwrap();
        assert!(character_check(&sym, &p1, &red, &lam).is_err());
    }
}
