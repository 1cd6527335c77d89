//! End-to-end monad-constraint pipeline on the fourfold `Q`.
//!
//! A rank-2 class with `c1 = 0` and `c2 = a * [P_alpha]` is assumed to be
//! the middle cohomology of a three-term monad whose outer terms are a
//! pulled-back rank-`a` bundle twisted by `H` and its dual twist, with a
//! pulled-back rank-`(2a+2)` bundle in the middle. Matching total Chern
//! classes forces all constants: the pairing against the beta-plane class
//! fixes `d`, vanishing of the top coefficient fixes `c`, and the pairing
//! against the alpha-plane class fixes `b`. The three Euler characteristics
//! and their balance polynomial `phi` follow by Riemann-Roch.
//!
//! Every constant is solved from the ring, never transcribed: the solver
//! probes the (affine) dependence of a pairing on the unknown at scalar
//! sample points and inverts it, asserting affinity as it goes.

use thiserror::Error;

use crate::chern::{pullback_bundle, q_ring, BundleClass, ChernError};
use crate::poly::{PolyError, RatPoly};
use crate::presented::{
    p2_ring, solve_class_by_pairing, PresentedElement, Ring, SolveError,
};
use crate::riemann_roch::{
    euler_characteristic, p2_context, q_context, RiemannRochError,
};
use crate::scalar::{is_integral, rat, rat_int, rat_string, Rat, Scalar};

#[derive(Debug, Error)]
pub enum MonadError {
    #[error("internal pairing system failed (ring bug): {0}")]
    Internal(String),
    #[error("verification horizon must be >= 1, got {0}")]
    BadHorizon(i64),
    #[error("parameter must be >= 0, got {0}")]
    BadParameter(i64),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error(transparent)]
    RiemannRoch(#[from] RiemannRochError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The two plane-family classes in degree 2 of `A(Q)`, solved from their
/// integral pairing constraints rather than hard-coded:
/// alpha pairs to 1 against each of `R^2`, `RH`, `H^2`; beta pairs to
/// `(0, 1, 1)`.
pub fn alpha_beta_classes(
    ring: &Ring,
) -> Result<(PresentedElement<Rat>, PresentedElement<Rat>), MonadError> {
    let elem = |text: &str| -> Result<PresentedElement<Rat>, MonadError> {
        PresentedElement::parse(ring, &[(text, rat_int(1))])
            .map_err(|e| MonadError::Internal(e.to_string()))
    };
    let r2 = elem("R^2")?;
    let rh = elem("R*H")?;
    let h2 = elem("H^2")?;
    let alpha = solve_class_by_pairing(
        ring,
        2,
        &[
            (r2.clone(), rat_int(1)),
            (rh.clone(), rat_int(1)),
            (h2.clone(), rat_int(1)),
        ],
    )?;
    let beta = solve_class_by_pairing(
        ring,
        2,
        &[(r2, rat_int(0)), (rh, rat_int(1)), (h2, rat_int(1))],
    )?;
    Ok((alpha, beta))
}

/// Constants forced by matching Chern classes across the monad, as
/// polynomials in the symbolic parameter `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonadConstants {
    /// First-Chern coefficient of the side bundle: `sum of roots = d R`.
    pub d: RatPoly,
    /// Second power sum of the side-bundle roots: `sum of squares = c R^2`.
    pub c: RatPoly,
    /// Second Chern coefficient of the middle term: `c2 = b R^2`.
    pub b: RatPoly,
    /// `c1` of the side bundle on the base.
    pub c1_e1: RatPoly,
    /// `c2` of the side bundle on the base, `(d^2 - c) / 2`.
    pub c2_e1: RatPoly,
}

/// Full symbolic pipeline output.
pub struct MonadSymbolic {
    pub constants: MonadConstants,
    /// Chern classes `c_1 .. c_4` of the twisted side bundle on `Q`.
    pub twist_e: [PresentedElement<RatPoly>; 4],
    /// Top coefficient of the matched product; identically zero once the
    /// constants are substituted.
    pub monad_e: RatPoly,
    pub chi_e: RatPoly,
    pub chi_sum: RatPoly,
    pub chi_e0: RatPoly,
    /// `phi = chi_e0 - (chi_e + chi_sum)`.
    pub phi: RatPoly,
    pub phi_is_zero: bool,
    pub phi_rational_roots: Vec<(Rat, usize)>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Conclusion {
    ExcludedByPhi,
    ExcludedByIntegrality,
    NotExcluded,
    /// The degenerate case `a = 0`: an empty monad carries no constraint.
    NotApplicable,
}

impl Conclusion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Conclusion::ExcludedByPhi => "excluded_by_phi",
            Conclusion::ExcludedByIntegrality => "excluded_by_integrality",
            Conclusion::NotExcluded => "not_excluded",
            Conclusion::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralityFailure {
    /// Which Euler characteristic fails to be an integer.
    pub quantity: String,
    pub value: Rat,
}

/// Numeric verdict at a single integer value of `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonadVerdict {
    pub a: i64,
    pub d: Rat,
    pub c: Rat,
    pub b: Rat,
    pub chi_e: Rat,
    pub chi_sum: Rat,
    pub chi_e0: Rat,
    pub phi: Rat,
    pub integrality_failures: Vec<IntegralityFailure>,
    pub conclusion: Conclusion,
}

impl MonadVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": self.a,
            "d": rat_string(&self.d),
            "c": rat_string(&self.c),
            "b": rat_string(&self.b),
            "chi_e": rat_string(&self.chi_e),
            "chi_sum": rat_string(&self.chi_sum),
            "chi_e0": rat_string(&self.chi_e0),
            "phi": rat_string(&self.phi),
            "integrality_failures": self.integrality_failures.iter().map(|f| {
                serde_json::json!({
                    "quantity": f.quantity,
                    "value": rat_string(&f.value),
                })
            }).collect::<Vec<_>>(),
            "conclusion": self.conclusion.as_str(),
        })
    }
}

/// The middle rank-2 class: `c1 = 0`, `c2 = a * [P_alpha]`.
pub fn middle_bundle(ring: &Ring) -> Result<BundleClass<RatPoly>, MonadError> {
    let (alpha, _) = alpha_beta_classes(ring)?;
    let alpha_poly = alpha.map_scalars(|r| RatPoly::constant(r.clone()));
    let c2 = alpha_poly.scale(&RatPoly::var());
    Ok(BundleClass::from_chern_classes(
        ring,
        RatPoly::from_ints(&[2]),
        &[PresentedElement::zero(ring), c2],
    )?)
}

/// The side bundle on the base, described through the power sums of its
/// Chern roots: rank `a`, `c1 = d h`, `c2 = (d^2 - c)/2 h^2`.
pub fn side_bundle(d: &RatPoly, c: &RatPoly) -> Result<BundleClass<RatPoly>, MonadError> {
    let p2 = p2_ring();
    let h = PresentedElement::<RatPoly>::generator(&p2, "h")
        .map_err(|e| MonadError::Internal(e.to_string()))?;
    let c2_coeff = (&(d * d) - c).scale(&rat(1, 2));
    Ok(BundleClass::from_chern_classes(
        &p2,
        RatPoly::var(),
        &[h.scale(d), h.pow(2).scale(&c2_coeff)],
    )?)
}

/// Total class of the three-term product
/// `E (+) (E1 pulled back, twisted by H) (+) (its dual, twisted by -H)`
/// at trial scalars for the unknown power sums `d` and `c`.
pub fn product_class_at(
    d: &RatPoly,
    c: &RatPoly,
) -> Result<BundleClass<RatPoly>, MonadError> {
    let q = q_ring();
    let h = PresentedElement::<RatPoly>::generator(&q, "H")
        .map_err(|e| MonadError::Internal(e.to_string()))?;
    let e1 = side_bundle(d, c)?;
    let f1 = pullback_bundle(&q, &e1)?.twist_by_line(&h)?;
    let fm1 = pullback_bundle(&q, &e1.dual())?.twist_by_line(&h.neg())?;
    let middle = middle_bundle(&q)?;
    Ok(middle.whitney_sum(&f1)?.whitney_sum(&fm1)?)
}

/// Invert an affine map of one scalar unknown by probing it at 0, 1, 2.
fn solve_affine(
    f: &mut dyn FnMut(&RatPoly) -> Result<RatPoly, MonadError>,
    what: &str,
) -> Result<RatPoly, MonadError> {
    let g0 = f(&RatPoly::zero())?;
    let g1 = f(&RatPoly::one())?;
    let g2 = f(&RatPoly::from_ints(&[2]))?;
    let slope = &g1 - &g0;
    if &g2 - &g1 != slope {
        return Err(MonadError::Internal(format!(
            "{what}: pairing is not affine in the unknown"
        )));
    }
    let pivot = slope
        .as_constant()
        .filter(|r| !num_traits::Zero::is_zero(r))
        .ok_or_else(|| {
            MonadError::Internal(format!("{what}: unknown has a non-invertible coefficient"))
        })?;
    Ok(g0.scale(&(-rat_int(1) / pivot)))
}

/// Solve the constraint chain in the order: beta-pairing fixes `d`, the
/// vanishing top coefficient fixes `c`, the alpha-pairing fixes `b`.
pub fn derive_constants() -> Result<MonadConstants, MonadError> {
    let q = q_ring();
    let (alpha, beta) = alpha_beta_classes(&q)?;
    let beta_poly = beta.map_scalars(|r| RatPoly::constant(r.clone()));
    let alpha_poly = alpha.map_scalars(|r| RatPoly::constant(r.clone()));

    // Step 1: the degree-2 class of the product must pair to zero against
    // the beta family. The `c` unknown cannot enter (R^2 pairs to zero
    // against beta), which the second probe confirms.
    let mut d_solutions = Vec::new();
    for c_probe in [RatPoly::zero(), RatPoly::one()] {
        let mut g = |d_trial: &RatPoly| -> Result<RatPoly, MonadError> {
            let f = product_class_at(d_trial, &c_probe)?;
            Ok(f.c(2).multiply(&beta_poly).integrate())
        };
        d_solutions.push(solve_affine(&mut g, "solving d")?);
    }
    if d_solutions[0] != d_solutions[1] {
        return Err(MonadError::Internal(
            "beta pairing unexpectedly depends on c".to_string(),
        ));
    }
    let d = d_solutions[0].clone();

    // Step 2: the top coefficient of the product is the top Chern class of
    // a bundle pulled back from a surface, hence zero.
    let mut g = |c_trial: &RatPoly| -> Result<RatPoly, MonadError> {
        let f = product_class_at(&d, c_trial)?;
        Ok(f.c(4).integrate())
    };
    let c = solve_affine(&mut g, "solving c")?;

    // Step 3: with d and c fixed, the degree-2 class is a pure R^2
    // multiple and the alpha pairing reads off b.
    let f = product_class_at(&d, &c)?;
    let c2 = f.c(2);
    let b = c2.multiply(&alpha_poly).integrate();
    let r2 = PresentedElement::<RatPoly>::parse(&q, &[("R^2", RatPoly::one())])
        .map_err(|e| MonadError::Internal(e.to_string()))?;
    if c2 != r2.scale(&b) {
        return Err(MonadError::Internal(
            "degree-2 class of the product is not a pure R^2 multiple".to_string(),
        ));
    }
    if !f.c(1).is_zero() || !f.c(3).is_zero() {
        return Err(MonadError::Internal(
            "odd Chern classes of the product do not vanish".to_string(),
        ));
    }

    let c1_e1 = d.clone();
    let c2_e1 = (&(&d * &d) - &c).scale(&rat(1, 2));
    Ok(MonadConstants {
        d,
        c,
        b,
        c1_e1,
        c2_e1,
    })
}

/// Run the whole symbolic pipeline: constants, twisted side classes, the
/// three Euler characteristics, and the balance polynomial with its
/// rational roots.
pub fn run_symbolic() -> Result<MonadSymbolic, MonadError> {
    let constants = derive_constants()?;
    let q_ctx = q_context();
    let q = q_ring();
    let h = PresentedElement::<RatPoly>::generator(&q, "H")
        .map_err(|e| MonadError::Internal(e.to_string()))?;

    let e1 = side_bundle(&constants.d, &constants.c)?;
    let f1 = pullback_bundle(&q, &e1)?.twist_by_line(&h)?;
    let fm1 = pullback_bundle(&q, &e1.dual())?.twist_by_line(&h.neg())?;
    // Relative duality: the negative twist of the dual is the dual of the
    // positive twist.
    if fm1 != f1.dual() {
        return Err(MonadError::Internal(
            "dual-twist consistency failed".to_string(),
        ));
    }
    let twist_e = [f1.c(1), f1.c(2), f1.c(3), f1.c(4)];

    let product = product_class_at(&constants.d, &constants.c)?;
    let monad_e = product.c(4).integrate();

    let chi_e = euler_characteristic(&q_ctx, &middle_bundle(&q)?)?;
    let chi_sum = {
        let a = euler_characteristic(&q_ctx, &f1)?;
        let b = euler_characteristic(&q_ctx, &fm1)?;
        &a + &b
    };

    // chi of the middle term, computed on the base.
    let p2_ctx = p2_context();
    let p2 = p2_ring();
    let h_base = PresentedElement::<RatPoly>::generator(&p2, "h")
        .map_err(|e| MonadError::Internal(e.to_string()))?;
    let e0 = BundleClass::from_chern_classes(
        &p2,
        RatPoly::from_ints(&[2, 2]),
        &[
            PresentedElement::zero(&p2),
            h_base.pow(2).scale(&constants.b),
        ],
    )?;
    let chi_e0 = euler_characteristic(&p2_ctx, &e0)?;
    // The same count up on the fourfold must agree (the fibration has
    // trivial higher direct images of its structure sheaf).
    let chi_e0_up = euler_characteristic(&q_ctx, &pullback_bundle(&q, &e0)?)?;
    if chi_e0_up != chi_e0 {
        return Err(MonadError::Internal(
            "pullback Euler characteristic disagrees with the base".to_string(),
        ));
    }

    let phi = &chi_e0 - &(&chi_e + &chi_sum);
    let phi_is_zero = phi.is_zero();
    let phi_rational_roots = if phi_is_zero {
        Vec::new()
    } else {
        phi.rational_roots()?
    };

    Ok(MonadSymbolic {
        constants,
        twist_e,
        monad_e,
        chi_e,
        chi_sum,
        chi_e0,
        phi,
        phi_is_zero,
        phi_rational_roots,
    })
}

/// Verdict for one integer value of `a`.
pub fn evaluate_at(sym: &MonadSymbolic, a: i64) -> Result<MonadVerdict, MonadError> {
    if a < 0 {
        return Err(MonadError::BadParameter(a));
    }
    let chi_e = sym.chi_e.eval_int(a);
    let chi_sum = sym.chi_sum.eval_int(a);
    let chi_e0 = sym.chi_e0.eval_int(a);
    let phi = sym.phi.eval_int(a);

    let mut integrality_failures = Vec::new();
    if !is_integral(&chi_e) {
        integrality_failures.push(IntegralityFailure {
            quantity: "chi_E".to_string(),
            value: chi_e.clone(),
        });
    }
    if !is_integral(&chi_e0) {
        integrality_failures.push(IntegralityFailure {
            quantity: "chi_E0".to_string(),
            value: chi_e0.clone(),
        });
    }

    let conclusion = if a == 0 {
        Conclusion::NotApplicable
    } else if !num_traits::Zero::is_zero(&phi) {
        Conclusion::ExcludedByPhi
    } else if !integrality_failures.is_empty() {
        Conclusion::ExcludedByIntegrality
    } else {
        Conclusion::NotExcluded
    };

    Ok(MonadVerdict {
        a,
        d: sym.constants.d.eval_int(a),
        c: sym.constants.c.eval_int(a),
        b: sym.constants.b.eval_int(a),
        chi_e,
        chi_sum,
        chi_e0,
        phi,
        integrality_failures,
        conclusion,
    })
}

/// Verdicts for every integer `a` in `[1, a_max]`.
pub fn verify_nonexistence(a_max: i64) -> Result<Vec<MonadVerdict>, MonadError> {
    if a_max < 1 {
        return Err(MonadError::BadHorizon(a_max));
    }
    let sym = run_symbolic()?;
    (1..=a_max).map(|a| evaluate_at(&sym, a)).collect()
}

impl MonadSymbolic {
    pub fn to_json(&self) -> serde_json::Value {
        let poly_json = |p: &RatPoly| p.to_json();
        serde_json::json!({
            "d": poly_json(&self.constants.d),
            "c": poly_json(&self.constants.c),
            "b": poly_json(&self.constants.b),
            "c1_e1": poly_json(&self.constants.c1_e1),
            "c2_e1": poly_json(&self.constants.c2_e1),
            "twist_e1": self.twist_e[0].to_json(),
            "twist_e2": self.twist_e[1].to_json(),
            "twist_e3": self.twist_e[2].to_json(),
            "twist_e4": self.twist_e[3].to_json(),
            "monad_e": poly_json(&self.monad_e),
            "chi_e": poly_json(&self.chi_e),
            "chi_sum": poly_json(&self.chi_sum),
            "chi_e0": poly_json(&self.chi_e0),
            "phi": poly_json(&self.phi),
            "phi_is_zero": self.phi_is_zero,
            "phi_rational_roots": self.phi_rational_roots.iter().map(|(r, m)| {
                serde_json::json!({"root": rat_string(r), "multiplicity": m})
            }).collect::<Vec<_>>(),
        })
    }
}
