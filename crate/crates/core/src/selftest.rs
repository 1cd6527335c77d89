//! Golden-value corpus: every externally sourced reference value the
//! engine is expected to reproduce, run as one deterministic suite.
//!
//! Four entries in the imported reference table disagree with exact
//! computation (see [`EXPECTED_DIVERGENT`]); the suite reports them as
//! failures rather than patching either side. The computed values for
//! those entries are certified independently by the root and character
//! oracles and by additivity of the Euler characteristic.

use crate::chain::{
    c1_forcing, eigen_check, product_matrix, pullback_splitting_bound, splitting_lex_min,
    ChainSpec, SplittingType, TransitionMatrix,
};
use crate::monad::{
    alpha_beta_classes, evaluate_at, product_class_at, run_symbolic, Conclusion, MonadSymbolic,
};
use crate::chern::q_ring;
use crate::poly::RatPoly;
use crate::presented::PresentedElement;
use crate::riemann_roch::{
    monad_cohomology_counts, relative_tangent_chern_q, tangent_class_q,
};
use crate::scalar::{rat, rat_int, Rat};
use crate::schubert::{
    lr_multiply, named_class, poincare_pair, GrassmannianShape, NamedClass, Partition,
    SchubertElement,
};

/// Outcome of a single golden check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

/// Checks that fail by design: the imported reference values for the top
/// twisted side class, the paired Euler-characteristic sum, and the balance
/// polynomial are inconsistent with the exact Chern-root identities, and
/// the engine keeps the computed values.
pub const EXPECTED_DIVERGENT: &[&str] = &[
    "monad.twist_e4_display",
    "monad.chi_sum_display",
    "monad.phi_display",
    "monad.phi_roots",
];

fn check<T: PartialEq + std::fmt::Debug>(
    out: &mut Vec<CheckResult>,
    name: &str,
    computed: T,
    reference: T,
) {
    let passed = computed == reference;
    let details = if passed {
        format!("computed {}", tidy(&format!("{computed:?}")))
    } else {
        format!(
            "computed {}, reference {}",
            tidy(&format!("{computed:?}")),
            tidy(&format!("{reference:?}"))
        )
    };
    out.push(CheckResult {
        name: name.to_string(),
        passed,
        details,
    });
}

/// Rewrite the struct debug form of rationals into `p/q` for readability.
fn tidy(s: &str) -> String {
    const HEAD: &str = "Ratio { numer: ";
    const MID: &str = ", denom: ";
    let mut out = s.to_string();
    while let Some(start) = out.find(HEAD) {
        let Some(end_rel) = out[start..].find(" }") else {
            break;
        };
        let end = start + end_rel + 2;
        let inner = &out[start + HEAD.len()..end - 2];
        let Some((n, d)) = inner.split_once(MID) else {
            break;
        };
        let pretty = if d == "1" {
            n.to_string()
        } else {
            format!("{n}/{d}")
        };
        out.replace_range(start..end, &pretty);
    }
    out
}

fn poly(cs: &[(i64, i64)]) -> RatPoly {
    RatPoly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
}

/// Run the full corpus. Deterministic: same order, same details each run.
pub fn run_all() -> Vec<CheckResult> {
    let mut out = Vec::new();
    schubert_checks(&mut out);
    match run_symbolic() {
        Ok(sym) => {
            ring_checks(&mut out);
            geometry_checks(&mut out);
            monad_display_checks(&mut out, &sym);
            chi_checks(&mut out, &sym);
            cohomology_checks(&mut out);
        }
        Err(e) => out.push(CheckResult {
            name: "monad.pipeline".to_string(),
            passed: false,
            details: format!("pipeline failed: {e}"),
        }),
    }
    chain_checks(&mut out);
    out
}

fn schubert_checks(out: &mut Vec<CheckResult>) {
    let shape = GrassmannianShape::new(2, 4).expect("G(2;4)");
    let sigma = |parts: &[u32]| {
        SchubertElement::class(shape, Partition::new(parts.to_vec()).unwrap()).unwrap()
    };
    let s1 = sigma(&[1]);
    check(
        out,
        "schubert.divisor_square",
        lr_multiply(&s1, &s1).unwrap(),
        sigma(&[2]).add(&sigma(&[1, 1])).unwrap(),
    );
    check(
        out,
        "schubert.named_w1",
        named_class(shape, NamedClass::W1).unwrap(),
        sigma(&[2]),
    );
    let w = [
        named_class(shape, NamedClass::W1).unwrap(),
        named_class(shape, NamedClass::W2).unwrap(),
    ];
    let p = [
        named_class(shape, NamedClass::PAlpha).unwrap(),
        named_class(shape, NamedClass::PBeta).unwrap(),
    ];
    let mut pairing = [[rat_int(9), rat_int(9)], [rat_int(9), rat_int(9)]];
    for i in 0..2 {
        for j in 0..2 {
            pairing[i][j] = poincare_pair(&w[i], &p[j]).unwrap();
        }
    }
    check(
        out,
        "schubert.pairing_is_kronecker_delta",
        pairing,
        [[rat_int(1), rat_int(0)], [rat_int(0), rat_int(1)]],
    );
}

fn q_elem(terms: &[(&str, Rat)]) -> PresentedElement<Rat> {
    PresentedElement::parse(&q_ring(), terms).expect("element of A(Q)")
}

fn ring_checks(out: &mut Vec<CheckResult>) {
    let ring = q_ring();
    let (alpha, beta) = alpha_beta_classes(&ring).expect("plane classes");
    let one = rat_int(1);
    let e = |t: &str| q_elem(&[(t, one.clone())]);

    check(out, "qring.h4", e("H^4").integrate(), rat_int(2));
    check(out, "qring.rh3", e("R*H^3").integrate(), rat_int(2));
    check(out, "qring.r2h2", e("R^2*H^2").integrate(), rat_int(1));
    check(
        out,
        "qring.r2_alpha",
        e("R^2").multiply(&alpha).integrate(),
        rat_int(1),
    );
    check(
        out,
        "qring.rh_alpha",
        e("R*H").multiply(&alpha).integrate(),
        rat_int(1),
    );
    check(
        out,
        "qring.h2_alpha",
        e("H^2").multiply(&alpha).integrate(),
        rat_int(1),
    );
    check(
        out,
        "qring.rh_beta",
        e("R*H").multiply(&beta).integrate(),
        rat_int(1),
    );
    check(
        out,
        "qring.h2_beta",
        e("H^2").multiply(&beta).integrate(),
        rat_int(1),
    );
    check(
        out,
        "qring.alpha_beta",
        alpha.multiply(&beta).integrate(),
        rat_int(0),
    );
    check(
        out,
        "qring.r2_beta",
        e("R^2").multiply(&beta).integrate(),
        rat_int(0),
    );
    check(out, "qring.r4", e("R^4").integrate(), rat_int(0));
    check(out, "qring.r3h", e("R^3*H").integrate(), rat_int(0));
    check(
        out,
        "qring.below_top_integrates_to_zero",
        e("R").integrate(),
        rat_int(0),
    );
    check(
        out,
        "qring.h4_equals_rh3",
        e("H^4").sub(&e("R*H^3")).integrate(),
        rat_int(0),
    );
    check(
        out,
        "qring.alpha_solved_form",
        alpha.clone(),
        q_elem(&[("R^2", rat_int(1)), ("R*H", rat_int(-1)), ("H^2", rat_int(1))]),
    );
    check(
        out,
        "qring.beta_solved_form",
        beta,
        q_elem(&[("R^2", rat_int(-1)), ("R*H", rat_int(1))]),
    );
}

fn geometry_checks(out: &mut Vec<CheckResult>) {
    // A rank-2 class with vanishing first Chern class is self-dual.
    let middle = crate::monad::middle_bundle(&q_ring()).expect("middle class");
    check(out, "chern.middle_class_self_dual", middle.dual(), middle);

    let rel = relative_tangent_chern_q();
    check(
        out,
        "geometry.relative_tangent_chern",
        rel.clone(),
        q_elem(&[
            ("1", rat_int(1)),
            ("R", rat_int(-2)),
            ("H", rat_int(3)),
            ("R^2", rat_int(2)),
            ("R*H", rat_int(-4)),
            ("H^2", rat_int(3)),
        ]),
    );
    // First Chern class of the relative dualizing sheaf is minus that of
    // the relative tangent.
    check(
        out,
        "geometry.relative_dualizing_c1",
        rel.graded_component(1).neg(),
        q_elem(&[("R", rat_int(2)), ("H", rat_int(-3))]),
    );

    let tangent = tangent_class_q();
    check(
        out,
        "geometry.tangent_c1",
        tangent.c(1),
        q_elem(&[("R", rat_int(1)), ("H", rat_int(3))]),
    );
    check(
        out,
        "geometry.tangent_c2",
        tangent.c(2),
        q_elem(&[("R^2", rat_int(-1)), ("R*H", rat_int(5)), ("H^2", rat_int(3))]),
    );
    check(
        out,
        "geometry.tangent_c3",
        tangent.c(3),
        q_elem(&[("R^2*H", rat_int(-3)), ("R*H^2", rat_int(9))]),
    );
    check(
        out,
        "geometry.tangent_c4",
        tangent.c(4),
        q_elem(&[("R^2*H^2", rat_int(9))]),
    );
    check(
        out,
        "geometry.todd_display",
        tangent.todd_class(),
        q_elem(&[
            ("1", rat_int(1)),
            ("R", rat(1, 2)),
            ("H", rat(3, 2)),
            ("R*H", rat(11, 12)),
            ("H^2", rat_int(1)),
            ("R^2*H", rat(1, 12)),
            ("R*H^2", rat(3, 4)),
            ("H^3", rat(3, 8)),
            ("R^2*H^2", rat_int(1)),
        ]),
    );
}

fn monad_display_checks(out: &mut Vec<CheckResult>, sym: &MonadSymbolic) {
    let ring = q_ring();
    let a = RatPoly::var();
    let (alpha, _) = alpha_beta_classes(&ring).expect("plane classes");
    let alpha_poly = alpha.map_scalars(|r| RatPoly::constant(r.clone()));
    let elem = |terms: &[(&str, RatPoly)]| {
        PresentedElement::parse(&ring, terms).expect("element of A(Q)")
    };

    // Product of the three factors at probe values of the unresolved power
    // sums: degree-2 and degree-4 coefficients against their displays.
    for (d0, c0) in [(0i64, 0i64), (1, 0), (0, 1), (2, 3), (-1, 2)] {
        let dp = RatPoly::from_ints(&[d0]);
        let cp = RatPoly::from_ints(&[c0]);
        let f = product_class_at(&dp, &cp).expect("product class");
        let t2_expected = alpha_poly
            .scale(&a)
            .sub(&elem(&[
                ("R^2", cp.clone()),
                ("R*H", RatPoly::from_ints(&[2 * d0])),
            ]))
            .sub(&elem(&[("H^2", a.clone())]));
        check(
            out,
            &format!("monad.f_t2_display_d{d0}_c{c0}"),
            f.c(2),
            t2_expected,
        );
        // e = -3c - a(2d + a) + (a - 1)(a + 4d) + 2d^2
        let e_expected = {
            let minus_3c = cp.scale(&rat_int(-3));
            let a_2d_a = &a * &(&RatPoly::from_ints(&[2 * d0]) + &a);
            let prod = &(&a - &RatPoly::one()) * &(&a + &RatPoly::from_ints(&[4 * d0]));
            let two_d2 = RatPoly::from_ints(&[2 * d0 * d0]);
            &(&(&minus_3c - &a_2d_a) + &prod) + &two_d2
        };
        check(
            out,
            &format!("monad.f_t4_display_d{d0}_c{c0}"),
            f.c(4).integrate(),
            e_expected,
        );
    }

    check(
        out,
        "monad.constant_d",
        sym.constants.d.clone(),
        poly(&[(0, 1), (-1, 2)]),
    );
    check(
        out,
        "monad.constant_c",
        sym.constants.c.clone(),
        poly(&[(0, 1), (1, 3), (-1, 6)]),
    );
    check(
        out,
        "monad.constant_b",
        sym.constants.b.clone(),
        poly(&[(0, 1), (2, 3), (1, 6)]),
    );
    check(
        out,
        "monad.c2_e1",
        sym.constants.c2_e1.clone(),
        poly(&[(0, 1), (-1, 6), (5, 24)]),
    );
    check(
        out,
        "monad.e_vanishes_after_substitution",
        sym.monad_e.clone(),
        RatPoly::zero(),
    );

    check(
        out,
        "monad.twist_e1_display",
        sym.twist_e[0].clone(),
        elem(&[("R", poly(&[(0, 1), (-1, 2)])), ("H", a.clone())]),
    );
    check(
        out,
        "monad.twist_e2_display",
        sym.twist_e[1].clone(),
        elem(&[
            ("R^2", poly(&[(0, 1), (-1, 6), (5, 24)])),
            ("R*H", poly(&[(0, 1), (1, 2), (-1, 2)])),
            ("H^2", poly(&[(0, 1), (-1, 2), (1, 2)])),
        ]),
    );
    check(
        out,
        "monad.twist_e3_display",
        sym.twist_e[2].clone(),
        elem(&[
            ("R^2*H", poly(&[(0, 1), (1, 3), (-7, 12), (5, 24)])),
            ("R*H^2", poly(&[(0, 1), (-1, 2), (3, 4), (-1, 4)])),
            ("H^3", poly(&[(0, 1), (1, 3), (-1, 2), (1, 6)])),
        ]),
    );
    check(
        out,
        "monad.twist_e4_display",
        sym.twist_e[3].clone(),
        elem(&[(
            "R^2*H^2",
            poly(&[(0, 1), (1, 3), (-41, 72), (43, 144), (-7, 144)]),
        )]),
    );
}

fn chi_checks(out: &mut Vec<CheckResult>, sym: &MonadSymbolic) {
    check(
        out,
        "monad.chi_e_display",
        sym.chi_e.clone(),
        poly(&[(2, 1), (-23, 12), (1, 12)]),
    );
    check(
        out,
        "monad.chi_e0_display",
        sym.chi_e0.clone(),
        poly(&[(2, 1), (4, 3), (-1, 6)]),
    );
    check(
        out,
        "monad.chi_sum_display",
        sym.chi_sum.clone(),
        poly(&[(0, 1), (113, 36), (-1, 54), (-29, 216), (5, 216)]),
    );
    check(
        out,
        "monad.phi_display",
        sym.phi.clone(),
        poly(&[(0, 1), (24, 216), (-50, 216), (29, 216), (-5, 216)]),
    );
    check(
        out,
        "monad.phi_roots",
        sym.phi_rational_roots.clone(),
        vec![
            (rat_int(0), 1usize),
            (rat(4, 5), 1),
            (rat_int(2), 1),
            (rat_int(3), 1),
        ],
    );
    check(out, "monad.chi_e_at_2", sym.chi_e.eval_int(2), rat(-3, 2));
    check(out, "monad.chi_e0_at_3", sym.chi_e0.eval_int(3), rat(9, 2));

    let v2 = evaluate_at(sym, 2).expect("verdict at 2");
    check(
        out,
        "monad.exclusion_a2",
        (v2.conclusion, v2.chi_e),
        (Conclusion::ExcludedByIntegrality, rat(-3, 2)),
    );
    let v3 = evaluate_at(sym, 3).expect("verdict at 3");
    check(
        out,
        "monad.exclusion_a3",
        (v3.conclusion, v3.chi_e0),
        (Conclusion::ExcludedByIntegrality, rat(9, 2)),
    );
}

fn cohomology_checks(out: &mut Vec<CheckResult>) {
    let counts = monad_cohomology_counts(1).expect("counts at 1");
    check(
        out,
        "cohomology.counts_at_1",
        (
            counts.h1_twist_minus_1,
            counts.h1_twist_minus_2,
            counts.h1_cotangent,
        ),
        (1, 1, 4),
    );
    let counts = monad_cohomology_counts(5).expect("counts at 5");
    check(
        out,
        "cohomology.counts_at_5",
        (
            counts.h1_twist_minus_1,
            counts.h1_twist_minus_2,
            counts.h1_cotangent,
        ),
        (5, 5, 12),
    );
    let linear = (1..=8i64).all(|a| {
        let c = monad_cohomology_counts(a).expect("counts");
        c.h1_twist_minus_1 == a && c.h1_twist_minus_2 == a && c.h1_cotangent == 2 * a + 2
    });
    check(out, "cohomology.counts_linear_in_a", linear, true);
}

fn chain_checks(out: &mut Vec<CheckResult>) {
    check(
        out,
        "chain.eigen_row_sums",
        (
            eigen_check(&TransitionMatrix::new([[3, 1], [2, 2]]), 2),
            eigen_check(&TransitionMatrix::new([[4, 1], [2, 2]]), 2),
            eigen_check(&TransitionMatrix::new([[1, 0], [0, 1]]), 1),
        ),
        (true, false, true),
    );

    let step = TransitionMatrix::new([[3, 1], [1, 3]]);
    let chain = ChainSpec::new(vec![2, 2, 2], Some(vec![step, step, step])).expect("chain");
    let product = product_matrix(&chain, 0, 2).expect("product");
    check(
        out,
        "chain.product_keeps_eigenvector",
        product.row_sums(),
        (64, 64),
    );

    let mixed = ChainSpec::new(vec![3, 2], None).expect("chain");
    check(
        out,
        "chain.c1_divisibility",
        c1_forcing(&mixed, 1).expect("forcing"),
        [-6, 0, 6].into_iter().collect(),
    );

    let t = |parts: &[i64]| SplittingType::new(parts.to_vec()).unwrap();
    check(
        out,
        "chain.splitting_lex_min",
        splitting_lex_min(&[t(&[1, -1]), t(&[0, 0])]).expect("lex min"),
        t(&[0, 0]),
    );
    check(
        out,
        "chain.pullback_splitting_bound",
        pullback_splitting_bound(1, 6).expect("bound"),
        6,
    );
}

/// JSON form of a suite run: one record per check, stable order.
pub fn results_to_json(results: &[CheckResult]) -> serde_json::Value {
    serde_json::Value::Array(
        results
            .iter()
            .map(|r| {
                serde_json::json!({
                    "name": r.name,
                    "passed": r.passed,
                    "details": r.details,
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_are_exactly_the_expected_divergences() {
        let results = run_all();
        let failed: Vec<&str> = results
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.name.as_str())
            .collect();
        assert_eq!(failed, EXPECTED_DIVERGENT, "divergence set is pinned");
        // The corpus is not trivially empty.
        assert!(results.len() > 40);
    }
}
