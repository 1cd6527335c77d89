//! Euler characteristics by the Hirzebruch-Riemann-Roch theorem:
//! `chi(F) = integral of ch(F) * td(T)` over the plane and over the
//! fourfold `Q`. The tangent data lives here and only here; pipelines take
//! a [`VarietyContext`] instead of constructing tangent classes ad hoc.

use thiserror::Error;

use crate::chern::{
    plane_bundle_for_q, pullback_bundle, q_ring, tangent_p2, BundleClass, ChernError,
};
use crate::presented::{p2_ring, PresentedElement, Ring};
use crate::scalar::{rat_int, Rat, Scalar};

#[derive(Debug, Error)]
pub enum RiemannRochError {
    #[error("bundle does not live over the context ring")]
    RingMismatch,
    #[error("cohomology counts need a >= 1, got {0}")]
    NonPositiveParameter(i64),
    #[error(transparent)]
    Chern(#[from] ChernError),
}

/// A smooth variety presented by its Chow ring and tangent bundle class.
pub struct VarietyContext {
    ring: Ring,
    tangent: BundleClass<Rat>,
    dimension: usize,
}

impl VarietyContext {
    pub fn new(ring: Ring, tangent: BundleClass<Rat>, dimension: usize) -> Self {
        assert_eq!(ring.top_degree(), dimension, "ring top degree is the dimension");
        assert_eq!(
            tangent.rank(),
            &rat_int(dimension as i64),
            "tangent rank is the dimension"
        );
        VarietyContext {
            ring,
            tangent,
            dimension,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn tangent(&self) -> &BundleClass<Rat> {
        &self.tangent
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn todd(&self) -> PresentedElement<Rat> {
        self.tangent.todd_class()
    }
}

/// The projective plane with its tangent bundle.
pub fn p2_context() -> VarietyContext {
    VarietyContext::new(p2_ring(), tangent_p2(), 2)
}

/// Chern class of the relative tangent bundle of `Q` over the plane, from
/// the relative Euler sequence: `c(T_{Q/S}) = c(p^* W^dual (x) O(H))`.
pub fn relative_tangent_chern_q() -> PresentedElement<Rat> {
    let q = q_ring();
    let w_up = pullback_bundle(&q, &plane_bundle_for_q()).expect("pullback of W");
    let h = PresentedElement::<Rat>::generator(&q, "H").expect("generator H");
    let twisted = w_up.dual().twist_by_line(&h).expect("twist by H");
    twisted.total_chern().clone()
}

/// Tangent bundle class of `Q`: the relative tangent times the pulled-back
/// base tangent, with rank 4.
pub fn tangent_class_q() -> BundleClass<Rat> {
    let q = q_ring();
    let relative = relative_tangent_chern_q();
    let base = pullback_bundle(&q, &tangent_p2()).expect("pullback of plane tangent");
    let chern = relative.multiply(base.total_chern());
    BundleClass::new(rat_int(4), chern).expect("unital total class")
}

/// The fourfold `Q` with its tangent bundle.
pub fn q_context() -> VarietyContext {
    VarietyContext::new(q_ring(), tangent_class_q(), 4)
}

/// `chi(F) = integral of ch(F) * td(T)`; exact, in either scalar domain.
pub fn euler_characteristic<S: Scalar>(
    ctx: &VarietyContext,
    bundle: &BundleClass<S>,
) -> Result<S, RiemannRochError> {
    if !bundle.total_chern().ring_is(&ctx.ring) {
        return Err(RiemannRochError::RingMismatch);
    }
    Ok(chi_of_character(ctx, &bundle.chern_character()))
}

/// Riemann-Roch applied directly to a Chern character; used for tensor
/// products where only the character is multiplicative.
pub fn chi_of_character<S: Scalar>(ctx: &VarietyContext, ch: &PresentedElement<S>) -> S {
    let td = ctx.todd().map_scalars(|r| S::from_rat(r));
    ch.multiply(&td).integrate()
}

/// First-cohomology counts for the restriction of the rank-2 middle bundle
/// to a fiber plane, under the standard twists used by the display of the
/// fiberwise monad.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyCounts {
    pub a: i64,
    /// `h^1` of the bundle twisted by `O(-1)`.
    pub h1_twist_minus_1: i64,
    /// `h^1` of the bundle twisted by `O(-2)`.
    pub h1_twist_minus_2: i64,
    /// `h^1` of the bundle tensored with the cotangent sheaf.
    pub h1_cotangent: i64,
}

/// For a rank-2 bundle on the plane with `c1 = 0`, `c2 = a`, compute the
/// three `h^1` values as `-chi` under the vanishing of `h^0` and `h^2`
/// that the fiberwise monad provides. The vanishing itself is an imported
/// assumption, not rederived here.
pub fn monad_cohomology_counts(a: i64) -> Result<CohomologyCounts, RiemannRochError> {
    if a < 1 {
        return Err(RiemannRochError::NonPositiveParameter(a));
    }
    let ctx = p2_context();
    let p2 = p2_ring();
    let h = PresentedElement::<Rat>::generator(&p2, "h").expect("generator h");
    let middle = BundleClass::from_chern_classes(
        &p2,
        rat_int(2),
        &[
            PresentedElement::zero(&p2),
            h.pow(2).scale_rat(&rat_int(a)),
        ],
    )?;

    let minus_chi = |chi: Rat| -> i64 {
        let v = -chi;
        assert!(v.denom() == &1.into(), "count must be an integer");
        i64::try_from(v.numer().clone()).expect("count fits i64")
    };

    let twisted_1 = middle.twist_by_line(&h.neg())?;
    let twisted_2 = middle.twist_by_line(&h.neg().scale_rat(&rat_int(2)))?;
    let h1_twist_minus_1 = minus_chi(euler_characteristic(&ctx, &twisted_1)?);
    let h1_twist_minus_2 = minus_chi(euler_characteristic(&ctx, &twisted_2)?);

    // Tensor with the cotangent sheaf via Chern characters.
    let cotangent = tangent_p2().dual();
    let ch = middle
        .chern_character()
        .multiply(&cotangent.chern_character());
    let h1_cotangent = minus_chi(chi_of_character(&ctx, &ch));

    Ok(CohomologyCounts {
        a,
        h1_twist_minus_1,
        h1_twist_minus_2,
        h1_cotangent,
    })
}
