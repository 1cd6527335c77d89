//! Acceptance suite: one test per criterion, every comparison exact.
//!
//! Each test prints a single `criterion N: PASS/FAIL` line (visible with
//! `cargo test --test acceptance -- --nocapture`, and always on failure)
//! and then asserts that no sub-check failed.
//!
//! Three criteria contain reference values that are inconsistent with the
//! exact Chern-root identities checked by criterion 7 (the top twisted
//! side class, the paired Euler-characteristic sum, and the balance
//! polynomial `phi`). Those sub-checks are implemented faithfully against
//! the reference table and fail; the computed values are certified by the
//! independent oracles instead. See README, section "Known divergences".

use chowkit::chain::{
    c1_forcing, eigen_check, feasible_c2, product_matrix, seeded_chain, ChainSpec,
    TransitionMatrix,
};
use chowkit::chern::{line_on_p2, q_ring, BundleClass};
use chowkit::monad::{alpha_beta_classes, run_symbolic, Conclusion};
use chowkit::oracle::{lr_via_giambelli_pieri, twist_identity_holds_for_rank, twist_via_character};
use chowkit::poly::RatPoly;
use chowkit::presented::PresentedElement;
use chowkit::riemann_roch::{
    euler_characteristic, monad_cohomology_counts, p2_context, q_context, tangent_class_q,
};
use chowkit::scalar::{rat, rat_int, Rat};
use chowkit::schubert::{
    lr_multiply, named_class, partitions_in_box, poincare_pair, GrassmannianShape, NamedClass,
    Partition, SchubertElement,
};

struct Criterion {
    number: u32,
    title: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: u32, title: &'static str) -> Self {
        Criterion {
            number,
            title,
            failures: Vec::new(),
        }
    }

    fn expect<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, computed: T, reference: T) {
        if computed != reference {
            self.failures
                .push(format!("{what}: computed {computed:?}, reference {reference:?}"));
        }
    }

    fn expect_true(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("criterion {}: PASS ({})", self.number, self.title);
        } else {
            println!(
                "criterion {}: FAIL ({}) - {} sub-check(s):",
                self.number,
                self.title,
                self.failures.len()
            );
            for f in &self.failures {
                println!("  - {f}");
            }
        }
        assert!(
            self.failures.is_empty(),
            "criterion {} failed: {:#?}",
            self.number,
            self.failures
        );
    }
}

fn q_elem(terms: &[(&str, Rat)]) -> PresentedElement<Rat> {
    PresentedElement::parse(&q_ring(), terms).expect("element of A(Q)")
}

fn poly(cs: &[(i64, i64)]) -> RatPoly {
    RatPoly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
}

#[test]
fn criterion_1_chow_table() {
    let mut c = Criterion::new(1, "Chow table of the fourfold ring");
    let ring = q_ring();
    let (alpha, beta) = alpha_beta_classes(&ring).expect("solved plane classes");
    let one = rat_int(1);
    let e = |t: &str| q_elem(&[(t, one.clone())]);
    let pt = |n: i64| q_elem(&[("R^2*H^2", rat_int(n))]);

    // The classes come from the pairing solver, not hard-coded forms.
    c.expect("H^4 = 2[pt]", e("H^4"), pt(2));
    c.expect("R H^3 = 2[pt]", e("R*H^3"), pt(2));
    c.expect("R^2 H^2 = [pt]", e("R^2*H^2"), pt(1));
    c.expect("R^2 alpha = [pt]", e("R^2").multiply(&alpha), pt(1));
    c.expect("R H alpha = [pt]", e("R*H").multiply(&alpha), pt(1));
    c.expect("H^2 alpha = [pt]", e("H^2").multiply(&alpha), pt(1));
    c.expect("R H beta = [pt]", e("R*H").multiply(&beta), pt(1));
    c.expect("H^2 beta = [pt]", e("H^2").multiply(&beta), pt(1));
    c.expect("alpha beta = 0", alpha.multiply(&beta), pt(0));
    c.expect("R^2 beta = 0", e("R^2").multiply(&beta), pt(0));
    c.expect("R^4 = 0", e("R^4"), pt(0));
    c.expect("R^3 H = 0", e("R^3*H"), pt(0));
    c.expect("alpha^2 = [pt]", alpha.multiply(&alpha), pt(1));
    c.expect("beta^2 = [pt]", beta.multiply(&beta), pt(1));
    c.finish();
}

#[test]
fn criterion_2_todd_class() {
    let mut c = Criterion::new(2, "Todd class of the fourfold tangent bundle");
    let td = tangent_class_q().todd_class();
    let display = q_elem(&[
        ("1", rat_int(1)),
        ("R", rat(1, 2)),
        ("H", rat(3, 2)),
        ("R*H", rat(11, 12)),
        ("H^2", rat_int(1)),
        ("R^2*H", rat(1, 12)),
        ("R*H^2", rat(3, 4)),
        ("H^3", rat(3, 8)),
        ("R^2*H^2", rat_int(1)),
    ]);
    for d in 0..=4 {
        c.expect(
            &format!("degree-{d} component"),
            td.graded_component(d),
            display.graded_component(d),
        );
    }
    c.finish();
}

#[test]
fn criterion_3_euler_characteristics() {
    let mut c = Criterion::new(3, "the three Euler characteristics as polynomials");
    let sym = run_symbolic().expect("symbolic pipeline");
    c.expect(
        "chi of the middle rank-2 class",
        sym.chi_e.clone(),
        poly(&[(2, 1), (-23, 12), (1, 12)]),
    );
    c.expect(
        "chi sum of the two twisted side terms",
        sym.chi_sum.clone(),
        poly(&[(0, 1), (113, 36), (-1, 54), (-29, 216), (5, 216)]),
    );
    c.expect(
        "chi of the pulled-back middle term",
        sym.chi_e0.clone(),
        poly(&[(2, 1), (4, 3), (-1, 6)]),
    );
    c.finish();
}

#[test]
fn criterion_4_monad_constants() {
    let mut c = Criterion::new(4, "constants forced by the monad");
    let sym = run_symbolic().expect("symbolic pipeline");
    c.expect("d = -a/2", sym.constants.d.clone(), poly(&[(0, 1), (-1, 2)]));
    c.expect(
        "c = -a(a-2)/6",
        sym.constants.c.clone(),
        poly(&[(0, 1), (1, 3), (-1, 6)]),
    );
    c.expect(
        "b = (a^2+4a)/6",
        sym.constants.b.clone(),
        poly(&[(0, 1), (2, 3), (1, 6)]),
    );
    c.expect(
        "c2 of the side bundle = a(5a-4)/24",
        sym.constants.c2_e1.clone(),
        poly(&[(0, 1), (-1, 6), (5, 24)]),
    );

    let ring = q_ring();
    let elem = |terms: &[(&str, RatPoly)]| {
        PresentedElement::parse(&ring, terms).expect("element of A(Q)")
    };
    let a = RatPoly::var;
    c.expect(
        "twisted side class e1",
        sym.twist_e[0].clone(),
        elem(&[("R", poly(&[(0, 1), (-1, 2)])), ("H", a())]),
    );
    c.expect(
        "twisted side class e2",
        sym.twist_e[1].clone(),
        elem(&[
            ("R^2", poly(&[(0, 1), (-1, 6), (5, 24)])),
            ("R*H", poly(&[(0, 1), (1, 2), (-1, 2)])),
            ("H^2", poly(&[(0, 1), (-1, 2), (1, 2)])),
        ]),
    );
    c.expect(
        "twisted side class e3",
        sym.twist_e[2].clone(),
        elem(&[
            ("R^2*H", poly(&[(0, 1), (1, 3), (-7, 12), (5, 24)])),
            ("R*H^2", poly(&[(0, 1), (-1, 2), (3, 4), (-1, 4)])),
            ("H^3", poly(&[(0, 1), (1, 3), (-1, 2), (1, 6)])),
        ]),
    );
    c.expect(
        "twisted side class e4",
        sym.twist_e[3].clone(),
        elem(&[(
            "R^2*H^2",
            poly(&[(0, 1), (1, 3), (-41, 72), (43, 144), (-7, 144)]),
        )]),
    );
    c.finish();
}

#[test]
fn criterion_5_phi_verdict() {
    let mut c = Criterion::new(5, "balance polynomial and exclusion verdicts");
    let sym = run_symbolic().expect("symbolic pipeline");
    c.expect(
        "phi = -(5/216) a (a-2) (a-3) (a-4/5)",
        sym.phi.clone(),
        poly(&[(0, 1), (24, 216), (-50, 216), (29, 216), (-5, 216)]),
    );
    c.expect(
        "rational roots of phi",
        sym.phi_rational_roots.clone(),
        vec![
            (rat_int(0), 1usize),
            (rat(4, 5), 1),
            (rat_int(2), 1),
            (rat_int(3), 1),
        ],
    );
    let verdicts = chowkit::monad::verify_nonexistence(50).expect("verdicts");
    let v2 = &verdicts[1];
    c.expect(
        "a = 2 excluded with chi = -3/2",
        (v2.conclusion, v2.chi_e.clone()),
        (Conclusion::ExcludedByIntegrality, rat(-3, 2)),
    );
    let v3 = &verdicts[2];
    c.expect(
        "a = 3 excluded with chi_E0 = 9/2",
        (v3.conclusion, v3.chi_e0.clone()),
        (Conclusion::ExcludedByIntegrality, rat(9, 2)),
    );
    let not_excluded: Vec<i64> = verdicts
        .iter()
        .filter(|v| v.conclusion == Conclusion::NotExcluded)
        .map(|v| v.a)
        .collect();
    c.expect("every a in [1, 50] excluded", not_excluded, vec![]);
    c.finish();
}

#[test]
fn criterion_6_schubert_identities() {
    let mut c = Criterion::new(6, "Schubert product and pairing identities");
    let g24 = GrassmannianShape::new(2, 4).expect("G(2;4)");
    let s1 = SchubertElement::class(g24, Partition::new(vec![1]).unwrap()).unwrap();
    let square = lr_multiply(&s1, &s1).expect("product");
    let expected = SchubertElement::class(g24, Partition::new(vec![2]).unwrap())
        .unwrap()
        .add(&SchubertElement::class(g24, Partition::new(vec![1, 1]).unwrap()).unwrap())
        .unwrap();
    c.expect("divisor square on G(2;4)", square, expected);

    for n in 4..=8usize {
        for k in 2..n {
            if n - k < 2 {
                continue;
            }
            let shape = GrassmannianShape::new(k, n).expect("shape");
            let w = [
                named_class(shape, NamedClass::W1).unwrap(),
                named_class(shape, NamedClass::W2).unwrap(),
            ];
            let p = [
                named_class(shape, NamedClass::PAlpha).unwrap(),
                named_class(shape, NamedClass::PBeta).unwrap(),
            ];
            for (i, wi) in w.iter().enumerate() {
                for (j, pj) in p.iter().enumerate() {
                    let pairing = poincare_pair(wi, pj).expect("pairing");
                    c.expect(
                        &format!("pairing (W{}, P{}) on G({k};{n})", i + 1, j + 1),
                        pairing,
                        rat_int(i64::from(i == j)),
                    );
                }
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_7_oracle_equivalence() {
    let mut c = Criterion::new(7, "independent oracles agree with the main paths");
    for (k, n) in [(2usize, 5usize), (3, 6)] {
        let shape = GrassmannianShape::new(k, n).expect("shape");
        let parts = partitions_in_box(k, n - k);
        let mut mismatches = 0usize;
        for lam in &parts {
            for mu in &parts {
                let e_mu = SchubertElement::class(shape, mu.clone()).unwrap();
                let via_oracle = lr_via_giambelli_pieri(lam, &e_mu).expect("oracle");
                let e_lam = SchubertElement::class(shape, lam.clone()).unwrap();
                let via_lr = lr_multiply(&e_lam, &e_mu).expect("product");
                if via_oracle != via_lr {
                    mismatches += 1;
                }
            }
        }
        c.expect(&format!("tableau vs Giambelli-Pieri on G({k};{n})"), mismatches, 0);
    }

    for r in 1..=4usize {
        c.expect_true(
            &format!("root-product identity for the twist at rank {r}"),
            twist_identity_holds_for_rank(r),
        );
    }

    // Direct comparison of the twist against the character route on the
    // fourfold, for each rank up to 4.
    let q = q_ring();
    let hq = PresentedElement::<Rat>::generator(&q, "H").unwrap();
    let rq = PresentedElement::<Rat>::generator(&q, "R").unwrap();
    for rank in 1..=4i64 {
        let bundle = BundleClass::from_chern_classes(
            &q,
            rat_int(rank),
            &[
                rq.scale_rat(&rat_int(2)).sub(&hq),
                rq.multiply(&hq).scale_rat(&rat(1, 2)),
                rq.pow(2).multiply(&hq).scale_rat(&rat_int(-1)),
                q_elem(&[("R^2*H^2", rat(5, 3))]),
            ],
        )
        .expect("bundle");
        let direct = bundle.twist_by_line(&hq).expect("twist");
        let via_ch = twist_via_character(&bundle, &hq);
        c.expect(
            &format!("twist vs character route at rank {rank}"),
            direct.total_chern().clone(),
            via_ch.total_chern().clone(),
        );
    }
    c.finish();
}

#[test]
fn criterion_8_riemann_roch_sanity() {
    let mut c = Criterion::new(8, "Riemann-Roch sanity values");
    let ctx = p2_context();
    for d in -3..=3i64 {
        let chi = euler_characteristic(&ctx, &line_on_p2(d)).expect("chi");
        let reference = if d >= 0 {
            // Monomial count: sections of O(d) on the plane.
            let mut count = 0i64;
            for i in 0..=d {
                for j in 0..=d - i {
                    let _k = d - i - j;
                    count += 1;
                }
            }
            rat_int(count)
        } else {
            // Duality spot value: chi(O(d)) = chi(O(-3-d)).
            euler_characteristic(&ctx, &line_on_p2(-3 - d)).expect("chi")
        };
        c.expect(&format!("chi(O({d})) on the plane"), chi, reference);
    }
    let qctx = q_context();
    let chi_oq = euler_characteristic(&qctx, &BundleClass::trivial(qctx.ring(), rat_int(1)))
        .expect("chi");
    c.expect("chi of the structure sheaf of the fourfold", chi_oq, rat_int(1));

    // Counts used by the fiberwise monad.
    let counts = monad_cohomology_counts(1).expect("counts");
    c.expect(
        "fiber cohomology counts at a = 1",
        (
            counts.h1_twist_minus_1,
            counts.h1_twist_minus_2,
            counts.h1_cotangent,
        ),
        (1, 1, 4),
    );
    c.finish();
}

#[test]
fn criterion_9_chain_properties() {
    let mut c = Criterion::new(9, "twisted-chain forcing and feasibility");

    // Divisibility of the feasible divisor values.
    for degrees in [vec![2i64, 2, 2, 2, 2], vec![3, 2], vec![2, 3, 2], vec![1, 1]] {
        let chain = ChainSpec::new(degrees.clone(), None).expect("chain");
        let delta: i64 = degrees.iter().product();
        let values = c1_forcing(&chain, 7).expect("forcing");
        c.expect_true(
            &format!("divisor values along {degrees:?} are multiples of {delta}"),
            values.iter().all(|v| v % delta == 0),
        );
        c.expect_true(
            &format!("extreme values along {degrees:?}"),
            values.contains(&(7 * delta)) && values.contains(&(-7 * delta)),
        );
    }

    // The all-ones eigenvector identity for generated products.
    for seed in [3u64, 11, 29, 101, 2718] {
        let chain = seeded_chain(seed, &[2, 3, 2, 2, 3, 2]);
        let product = product_matrix(&chain, 0, chain.len() - 1).expect("product");
        let d: i64 = chain.degrees().iter().map(|d| d * d).product();
        c.expect(
            &format!("product row sums for seed {seed}"),
            product.row_sums(),
            (d, d),
        );
        c.expect_true(
            &format!("nonnegative product entries for seed {seed}"),
            product.is_nonnegative(),
        );
        for (m, deg) in chain.degrees().iter().enumerate() {
            let single = product_matrix(&chain, m, 0).expect("step");
            c.expect_true(
                &format!("eigen identity at step {m} for seed {seed}"),
                eigen_check(&single, *deg),
            );
        }
    }

    // Same-sign exclusion at desk scale: bound <= 5, length >= 6 steps of
    // degree >= 2, over a deterministic family of chains.
    let symmetric = TransitionMatrix::new([[3, 1], [1, 3]]);
    let flat = TransitionMatrix::new([[2, 2], [2, 2]]);
    let mut families: Vec<ChainSpec> = vec![
        ChainSpec::new(vec![2; 6], Some(vec![symmetric; 6])).expect("chain"),
        ChainSpec::new(vec![2; 7], Some(vec![flat; 7])).expect("chain"),
    ];
    for seed in [5u64, 17, 99, 1234] {
        families.push(seeded_chain(seed, &[2, 2, 2, 2, 2, 2]));
        families.push(seeded_chain(seed, &[3, 2, 2, 3, 2, 2, 2]));
    }
    for (idx, chain) in families.iter().enumerate() {
        for bound in 1..=5i64 {
            let roots = feasible_c2(chain, bound).expect("enumeration");
            let bad: Vec<(i64, i64)> = roots
                .into_iter()
                .filter(|&(x, y)| {
                    x != 0 && y != 0 && x.signum() == y.signum() && x.abs() <= 5 && y.abs() <= 5
                })
                .collect();
            c.expect(
                &format!("no small same-sign roots (family {idx}, bound {bound})"),
                bad,
                vec![],
            );
        }
    }
    c.finish();
}
