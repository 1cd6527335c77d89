//! Finitely presented graded commutative rings with chosen monomial bases.
//!
//! A [`RingPresentation`] lists generators with degrees, rewrite rules that
//! send a leading monomial to a rational combination of lower monomials, a
//! top degree, a point class, and an explicit monomial basis per degree.
//! Elements are normal-form combinations of basis monomials with scalar
//! coefficients in either exact rationals or polynomials in `a`.
//!
//! The two instances used throughout the crate are the plane `A(P^2)` and
//! the fourfold `A(Q)` for the projective bundle `Q = P(O(1) + T(-1))` over
//! the plane; the latter is derived, not hard-coded, via
//! [`projective_extension`] and the Grothendieck relation.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use thiserror::Error;

use crate::scalar::{rat_int, rat_string, Rat, Scalar};

#[derive(Debug, Error)]
pub enum PresentedError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed monomial `{0}`")]
    MalformedMonomial(String),
    #[error("presentation mismatch: `{0}` vs `{1}`")]
    RingMismatch(String, String),
    #[error("projective extension needs rank >= 1, got {0}")]
    BadRank(usize),
    #[error("total Chern class must start with 1 in degree 0")]
    NotUnital,
    #[error("chern component of degree {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("element does not live over a projective bundle")]
    NoBundleStructure,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("pairing system is inconsistent")]
    Inconsistent,
    #[error("pairing system does not determine the class uniquely")]
    Underdetermined,
    #[error("pairing matrix has a non-rational pivot")]
    NonRationalPivot,
}

/// Exponent vector aligned with the presentation's generator list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn unit(ngens: usize) -> Self {
        Monomial {
            exps: vec![0; ngens],
        }
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(x, y)| x <= y)
    }

    fn quotient(&self, by: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&by.exps)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub lhs: Monomial,
    pub rhs: Vec<(Monomial, Rat)>,
}

/// Marks a ring as the total space of a projective bundle over a base ring,
/// enabling pullback and pushforward of elements.
#[derive(Clone)]
pub struct BundleStructure {
    pub base: Ring,
    pub fiber_rank: usize,
}

pub struct RingPresentation {
    name: String,
    generators: Vec<(String, usize)>,
    rules: Vec<RewriteRule>,
    top_degree: usize,
    point_class: Monomial,
    basis_by_degree: Vec<Vec<Monomial>>,
    bundle: Option<BundleStructure>,
    signature: String,
}

pub type Ring = Arc<RingPresentation>;

impl RingPresentation {
    fn build(
        name: &str,
        generators: Vec<(String, usize)>,
        rules: Vec<RewriteRule>,
        top_degree: usize,
        point_class: Monomial,
        bundle: Option<BundleStructure>,
    ) -> Ring {
        let mut ring = RingPresentation {
            name: name.to_string(),
            generators,
            rules,
            top_degree,
            point_class,
            basis_by_degree: Vec::new(),
            bundle,
            signature: String::new(),
        };
        ring.basis_by_degree = ring.enumerate_basis();
        ring.signature = ring.compute_signature();
        debug_assert!(ring
            .basis_by_degree
            .get(top_degree)
            .is_some_and(|b| b.contains(&ring.point_class)));
        Arc::new(ring)
    }

    fn compute_signature(&self) -> String {
        let mut s = String::new();
        s.push_str(&self.name);
        for (g, d) in &self.generators {
            s.push_str(&format!(";{g}:{d}"));
        }
        for r in &self.rules {
            s.push_str(&format!(";{:?}->", r.lhs.exps));
            for (m, c) in &r.rhs {
                s.push_str(&format!("{:?}*{}", m.exps, rat_string(c)));
            }
        }
        s.push_str(&format!(";top={}", self.top_degree));
        s
    }

    /// Enumerate normal-form monomials of each degree up to the top degree.
    fn enumerate_basis(&self) -> Vec<Vec<Monomial>> {
        let mut by_degree: Vec<Vec<Monomial>> = vec![Vec::new(); self.top_degree + 1];
        let mut stack = vec![Monomial::unit(self.generators.len())];
        let mut seen = std::collections::BTreeSet::new();
        while let Some(m) = stack.pop() {
            if !seen.insert(m.clone()) {
                continue;
            }
            let d = self.degree_of(&m);
            if d > self.top_degree || !self.is_normal(&m) {
                continue;
            }
            by_degree[d].push(m.clone());
            for g in 0..self.generators.len() {
                let mut exps = m.exps.clone();
                exps[g] += 1;
                stack.push(Monomial::from_exps(exps));
            }
        }
        for row in &mut by_degree {
            row.sort();
        }
        by_degree
    }

    fn is_normal(&self, m: &Monomial) -> bool {
        self.rules.iter().all(|r| !r.lhs.divides(m))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn point_class(&self) -> &Monomial {
        &self.point_class
    }

    pub fn basis(&self, degree: usize) -> &[Monomial] {
        self.basis_by_degree
            .get(degree)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn bundle_structure(&self) -> Option<&BundleStructure> {
        self.bundle.as_ref()
    }

    pub fn signature(&self) -> &str {
        &self.signature
    }

    pub fn degree_of(&self, m: &Monomial) -> usize {
        m.exps
            .iter()
            .zip(&self.generators)
            .map(|(e, (_, d))| (*e as usize) * d)
            .sum()
    }

    fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|(g, _)| g == name)
    }

    /// Rewrite a single monomial to its normal form as a rational combination.
    /// Degrees above the top degree truncate to zero.
    fn reduce_monomial(&self, m: &Monomial) -> Vec<(Monomial, Rat)> {
        if self.degree_of(m) > self.top_degree {
            return Vec::new();
        }
        for rule in &self.rules {
            if rule.lhs.divides(m) {
                let q = m.quotient(&rule.lhs);
                let mut out: BTreeMap<Monomial, Rat> = BTreeMap::new();
                for (rm, rc) in &rule.rhs {
                    for (nm, nc) in self.reduce_monomial(&q.mul(rm)) {
                        let entry = out.entry(nm).or_insert_with(Rat::zero);
                        *entry += nc * rc;
                    }
                }
                out.retain(|_, c| !c.is_zero());
                return out.into_iter().collect();
            }
        }
        vec![(m.clone(), Rat::one())]
    }

    /// Parse a monomial such as `R^2*H`, `h`, or `1`.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial, PresentedError> {
        let mut exps = vec![0u16; self.generators.len()];
        let trimmed = text.trim();
        if trimmed == "1" || trimmed.is_empty() {
            return Ok(Monomial::from_exps(exps));
        }
        for piece in trimmed.split('*') {
            let piece = piece.trim();
            if piece == "1" {
                continue;
            }
            let (name, power) = match piece.split_once('^') {
                Some((n, p)) => {
                    let power: u16 = p
                        .trim()
                        .parse()
                        .map_err(|_| PresentedError::MalformedMonomial(text.to_string()))?;
                    (n.trim(), power)
                }
                None => (piece, 1),
            };
            let idx = self
                .gen_index(name)
                .ok_or_else(|| PresentedError::UnknownGenerator(name.to_string()))?;
            exps[idx] += power;
        }
        Ok(Monomial::from_exps(exps))
    }

    pub fn monomial_string(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (e, (g, _)) in m.exps.iter().zip(&self.generators) {
            match e {
                0 => {}
                1 => parts.push(g.clone()),
                _ => parts.push(format!("{g}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// The Chow ring of a point: no generators, top degree zero.
pub fn point_ring() -> Ring {
    static RING: Lazy<Ring> = Lazy::new(|| {
        RingPresentation::build("A(pt)", vec![], vec![], 0, Monomial::unit(0), None)
    });
    RING.clone()
}

/// The Chow ring of the projective plane: `Q[h] / (h^3)` with point class `h^2`.
pub fn p2_ring() -> Ring {
    static RING: Lazy<Ring> = Lazy::new(|| {
        RingPresentation::build(
            "A(P2)",
            vec![("h".to_string(), 1)],
            vec![RewriteRule {
                lhs: Monomial::from_exps(vec![3]),
                rhs: vec![],
            }],
            2,
            Monomial::from_exps(vec![2]),
            None,
        )
    });
    RING.clone()
}

/// Derive the Chow ring of the projectivization of a rank-`r` bundle `W`
/// over `base`, given the total Chern class of `W` as a base element.
///
/// The new degree-1 generator `fiber_gen` satisfies the Grothendieck
/// relation `sum_i (-1)^i c_i(W) H^{r-i} = 0`, the sign pattern that makes
/// the Segre classes of the dual appear under pushforward. Base generators
/// are renamed through `base_gen_names` (pullbacks usually carry new names,
/// such as `h` becoming `R`).
pub fn projective_extension(
    base: &Ring,
    rank: usize,
    chern_of_w: &PresentedElement<Rat>,
    base_gen_names: &[&str],
    fiber_gen: &str,
    name: &str,
) -> Result<Ring, PresentedError> {
    if rank < 1 {
        return Err(PresentedError::BadRank(rank));
    }
    if !chern_of_w.ring_is(base) {
        return Err(PresentedError::RingMismatch(
            chern_of_w.ring().name().to_string(),
            base.name().to_string(),
        ));
    }
    if chern_of_w.graded_component(0).coefficient_of_unit() != Rat::one() {
        return Err(PresentedError::NotUnital);
    }
    assert_eq!(base_gen_names.len(), base.generators().len());

    let nbase = base.generators().len();
    let mut generators: Vec<(String, usize)> = base
        .generators()
        .iter()
        .zip(base_gen_names)
        .map(|((_, d), new_name)| (new_name.to_string(), *d))
        .collect();
    generators.push((fiber_gen.to_string(), 1));

    let lift = |m: &Monomial, extra_h: u16| {
        let mut exps = m.exps().to_vec();
        exps.push(extra_h);
        Monomial::from_exps(exps)
    };

    // Base rules carry over with fiber exponent zero on both sides.
    let mut rules: Vec<RewriteRule> = base
        .rules
        .iter()
        .map(|r| RewriteRule {
            lhs: lift(&r.lhs, 0),
            rhs: r.rhs.iter().map(|(m, c)| (lift(m, 0), c.clone())).collect(),
        })
        .collect();

    // H^r = sum_{i>=1} (-1)^{i+1} c_i(W) H^{r-i}.
    let mut rhs: Vec<(Monomial, Rat)> = Vec::new();
    for i in 1..=rank.min(base.top_degree()) {
        let ci = chern_of_w.graded_component(i);
        let sign = if i % 2 == 1 { Rat::one() } else { -Rat::one() };
        for (m, c) in ci.terms_iter() {
            rhs.push((lift(m, (rank - i) as u16), c.clone() * &sign));
        }
    }
    let mut lhs_exps = vec![0u16; nbase];
    lhs_exps.push(rank as u16);
    rules.push(RewriteRule {
        lhs: Monomial::from_exps(lhs_exps),
        rhs,
    });

    let top_degree = base.top_degree() + rank - 1;
    let point_class = lift(base.point_class(), (rank - 1) as u16);
    Ok(RingPresentation::build(
        name,
        generators,
        rules,
        top_degree,
        point_class,
        Some(BundleStructure {
            base: base.clone(),
            fiber_rank: rank,
        }),
    ))
}

/// Normal-form element of a presented ring with scalar coefficients.
#[derive(Clone)]
pub struct PresentedElement<S: Scalar> {
    ring: Ring,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> PresentedElement<S> {
    pub fn zero(ring: &Ring) -> Self {
        PresentedElement {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_raw_terms(
            ring,
            vec![(Monomial::unit(ring.generators().len()), S::one())],
        )
    }

    /// Reduce an arbitrary monomial combination to normal form.
    pub fn from_raw_terms(ring: &Ring, raw: Vec<(Monomial, S)>) -> Self {
        let mut terms: BTreeMap<Monomial, S> = BTreeMap::new();
        for (m, s) in raw {
            assert_eq!(
                m.exps().len(),
                ring.generators().len(),
                "monomial arity does not match ring"
            );
            if s.is_zero() {
                continue;
            }
            for (nm, nc) in ring.reduce_monomial(&m) {
                let add = s.mul_rat(&nc);
                match terms.remove(&nm) {
                    Some(old) => {
                        let merged = old.add_ref(&add);
                        if !merged.is_zero() {
                            terms.insert(nm, merged);
                        }
                    }
                    None => {
                        terms.insert(nm, add);
                    }
                }
            }
        }
        PresentedElement {
            ring: ring.clone(),
            terms,
        }
    }

    /// Parse terms given as `(monomial text, coefficient)` pairs.
    pub fn parse(ring: &Ring, terms: &[(&str, S)]) -> Result<Self, PresentedError> {
        let mut raw = Vec::new();
        for (text, coeff) in terms {
            raw.push((ring.parse_monomial(text)?, coeff.clone()));
        }
        Ok(Self::from_raw_terms(ring, raw))
    }

    /// Single generator as an element.
    pub fn generator(ring: &Ring, name: &str) -> Result<Self, PresentedError> {
        let idx = ring
            .gen_index(name)
            .ok_or_else(|| PresentedError::UnknownGenerator(name.to_string()))?;
        let mut exps = vec![0u16; ring.generators().len()];
        exps[idx] = 1;
        Ok(Self::from_raw_terms(
            ring,
            vec![(Monomial::from_exps(exps), S::one())],
        ))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ring_is(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.ring, other) || self.ring.signature() == other.signature()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms_iter(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn coefficient_of_unit(&self) -> S {
        self.coefficient(&Monomial::unit(self.ring.generators().len()))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut terms = self.terms.clone();
        for (m, s) in &other.terms {
            match terms.remove(m) {
                Some(old) => {
                    let merged = old.add_ref(s);
                    if !merged.is_zero() {
                        terms.insert(m.clone(), merged);
                    }
                }
                None => {
                    terms.insert(m.clone(), s.clone());
                }
            }
        }
        PresentedElement {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        PresentedElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, s)| (m.clone(), s.neg_ref()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ring);
        }
        PresentedElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul_ref(s)))
                .collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(&S::from_rat(r))
    }

    /// Graded product in normal form. Same-presentation requirement is
    /// checked; use [`PresentedElement::try_multiply`] for a fallible form.
    pub fn multiply(&self, other: &Self) -> Self {
        self.try_multiply(other).expect("presentation mismatch")
    }

    pub fn try_multiply(&self, other: &Self) -> Result<Self, PresentedError> {
        if !self.ring_is(&other.ring) {
            return Err(PresentedError::RingMismatch(
                self.ring.name().to_string(),
                other.ring.name().to_string(),
            ));
        }
        let mut raw = Vec::new();
        for (m1, s1) in &self.terms {
            for (m2, s2) in &other.terms {
                raw.push((m1.mul(m2), s1.mul_ref(s2)));
            }
        }
        Ok(Self::from_raw_terms(&self.ring, raw))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..n {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Coefficient of the point class; zero for anything below top degree.
    pub fn integrate(&self) -> S {
        self.coefficient(self.ring.point_class())
    }

    pub fn graded_component(&self, degree: usize) -> Self {
        PresentedElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ring.degree_of(m) == degree)
                .map(|(m, s)| (m.clone(), s.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of_degree(&self, degree: usize) -> bool {
        self.terms.keys().all(|m| self.ring.degree_of(m) == degree)
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> PresentedElement<T> {
        PresentedElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, s)| (m.clone(), f(s)))
                .filter(|(_, s)| !s.is_zero())
                .collect(),
        }
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            self.ring_is(&other.ring),
            "presentation mismatch: {} vs {}",
            self.ring.name(),
            other.ring.name()
        );
    }

    /// JSON form: array of `{monomial, coefficient}` in basis order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(m, s)| {
                    serde_json::json!({
                        "monomial": self.ring.monomial_string(m),
                        "coefficient": s.to_json(),
                    })
                })
                .collect(),
        )
    }

    fn sorted_terms(&self) -> Vec<(&Monomial, &S)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (self.ring.degree_of(m), (*m).clone()));
        terms
    }
}

impl<S: Scalar> PartialEq for PresentedElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.ring_is(&other.ring) && self.terms == other.terms
    }
}

/// Display body shared with Debug so both forms stay in sync.
macro_rules! fmt_element {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.terms.is_empty() {
                return write!(f, "0");
            }
            for (i, (m, s)) in self.sorted_terms().into_iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                let ms = self.ring.monomial_string(m);
                if ms == "1" {
                    write!(f, "({s})")?;
                } else {
                    write!(f, "({s})*{ms}")?;
                }
            }
            Ok(())
        }
    };
}

impl<S: Scalar> fmt::Display for PresentedElement<S> {
    fmt_element!();
}

impl<S: Scalar> fmt::Debug for PresentedElement<S> {
    fmt_element!();
}

/// Pull an element of the base ring back to the total space of a
/// projective bundle (generators map positionally).
pub fn pullback<S: Scalar>(
    total: &Ring,
    base_elem: &PresentedElement<S>,
) -> Result<PresentedElement<S>, PresentedError> {
    let bundle = total
        .bundle_structure()
        .ok_or(PresentedError::NoBundleStructure)?;
    if !base_elem.ring_is(&bundle.base) {
        return Err(PresentedError::RingMismatch(
            base_elem.ring().name().to_string(),
            bundle.base.name().to_string(),
        ));
    }
    let raw = base_elem
        .terms_iter()
        .map(|(m, s)| {
            let mut exps = m.exps().to_vec();
            exps.push(0);
            (Monomial::from_exps(exps), s.clone())
        })
        .collect();
    Ok(PresentedElement::from_raw_terms(total, raw))
}

/// Push an element of a projective bundle down to the base: the component
/// with fiber exponent `rank - 1` survives, everything lower integrates to
/// zero along the fibers.
pub fn pushforward<S: Scalar>(
    elem: &PresentedElement<S>,
) -> Result<PresentedElement<S>, PresentedError> {
    let bundle = elem
        .ring()
        .bundle_structure()
        .ok_or(PresentedError::NoBundleStructure)?
        .clone();
    let fiber_top = (bundle.fiber_rank - 1) as u16;
    let raw = elem
        .terms_iter()
        .filter(|(m, _)| *m.exps().last().expect("fiber generator") == fiber_top)
        .map(|(m, s)| {
            let exps = m.exps()[..m.exps().len() - 1].to_vec();
            (Monomial::from_exps(exps), s.clone())
        })
        .collect();
    Ok(PresentedElement::from_raw_terms(&bundle.base, raw))
}

/// Solve for the unique element of the given degree whose integrated
/// products against the constraint classes hit the prescribed values.
///
/// The pairing matrix must be rational (constant scalars); the right-hand
/// sides may live in either scalar domain.
pub fn solve_class_by_pairing<S: Scalar>(
    ring: &Ring,
    degree: usize,
    constraints: &[(PresentedElement<S>, S)],
) -> Result<PresentedElement<S>, SolveError> {
    let basis = ring.basis(degree);
    let ncols = basis.len();
    let mut rows: Vec<(Vec<Rat>, S)> = Vec::new();
    for (class, target) in constraints {
        let mut row = Vec::with_capacity(ncols);
        for b in basis {
            let basis_elem =
                PresentedElement::<S>::from_raw_terms(ring, vec![(b.clone(), S::one())]);
            let pairing = class.multiply(&basis_elem).integrate();
            row.push(pairing.to_rat().ok_or(SolveError::NonRationalPivot)?);
        }
        rows.push((row, target.clone()));
    }

    // Gaussian elimination with rational pivots; right-hand sides stay in S.
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].0[col].clone();
        for c in rows[r].0.iter_mut() {
            *c /= &pivot;
        }
        rows[r].1 = rows[r].1.div_rat(&pivot);
        let (pivot_row, pivot_rhs) = (rows[r].0.clone(), rows[r].1.clone());
        for (i, (row, rhs)) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, pc) in row.iter_mut().zip(&pivot_row) {
                *c -= &factor * pc;
            }
            *rhs = rhs.sub_ref(&pivot_rhs.mul_rat(&factor));
        }
        pivot_cols.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }

    // Remaining rows must be trivially satisfied.
    for (row, rhs) in rows.iter().skip(r) {
        if row.iter().all(Zero::is_zero) && !rhs.is_zero() {
            return Err(SolveError::Inconsistent);
        }
    }
    if pivot_cols.len() < ncols {
        return Err(SolveError::Underdetermined);
    }

    let mut raw = Vec::new();
    for (i, &col) in pivot_cols.iter().enumerate() {
        raw.push((basis[col].clone(), rows[i].1.clone()));
    }
    Ok(PresentedElement::from_raw_terms(ring, raw))
}

/// Integration against a basis: the matrix of `integrate(b_i * b_j)` over
/// the bases of two complementary degrees.
pub fn pairing_matrix(ring: &Ring, degree: usize) -> Vec<Vec<Rat>> {
    let top = ring.top_degree();
    let rows = ring.basis(degree);
    let cols = ring.basis(top - degree);
    rows.iter()
        .map(|r| {
            cols.iter()
                .map(|c| {
                    let e1 = PresentedElement::<Rat>::from_raw_terms(
                        ring,
                        vec![(r.clone(), rat_int(1))],
                    );
                    let e2 = PresentedElement::<Rat>::from_raw_terms(
                        ring,
                        vec![(c.clone(), rat_int(1))],
                    );
                    e1.multiply(&e2).integrate()
                })
                .collect()
        })
        .collect()
}
