//! Exact Schubert calculus on a fixed Grassmannian `G(k;n)`.
//!
//! Classes are indexed by partitions inside the `k x (n-k)` box and graded
//! by codimension. Products use the Littlewood-Richardson rule by tableau
//! enumeration; the Pieri rule is implemented separately so that iterated
//! Pieri products through the Giambelli determinant can serve as an
//! independent oracle for the tableau path. Products that leave the box
//! truncate to zero, which is the Chow ring of the finite Grassmannian.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::scalar::{rat_string, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchubertError {
    #[error("grassmannian shape requires 0 < k < n, got k={k}, n={n}")]
    BadShape { k: usize, n: usize },
    #[error("partition does not fit the {k} x {cols} box")]
    DoesNotFit { k: usize, cols: usize },
    #[error("partition parts must be weakly decreasing")]
    NotWeaklyDecreasing,
    #[error("shape mismatch between operands")]
    ShapeMismatch,
    #[error("pieri degree {p} exceeds the box width {cols}")]
    PieriOutOfRange { p: usize, cols: usize },
    #[error("class {0} is not defined on this shape")]
    ClassUndefined(String),
}

/// The Grassmannian of `k`-dimensional subspaces of an `n`-dimensional space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GrassmannianShape {
    k: usize,
    n: usize,
}

impl GrassmannianShape {
    pub fn new(k: usize, n: usize) -> Result<Self, SchubertError> {
        if k == 0 || k >= n {
            return Err(SchubertError::BadShape { k, n });
        }
        Ok(GrassmannianShape { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Width of the partition box, `n - k`.
    pub fn cols(&self) -> usize {
        self.n - self.k
    }

    pub fn dimension(&self) -> usize {
        self.k * (self.n - self.k)
    }

    /// The partition filling the whole box; its class is the point class.
    pub fn full_box(&self) -> Partition {
        Partition::new(vec![self.cols() as u32; self.k]).expect("box partition")
    }
}

/// Weakly decreasing tuple of nonnegative integers; trailing zeros are
/// dropped so each partition has one canonical representative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, SchubertError> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(SchubertError::NotWeaklyDecreasing);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn fits(&self, shape: &GrassmannianShape) -> bool {
        self.parts.len() <= shape.k && self.part(0) as usize <= shape.cols()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Complement in the box, reversed; pairing a class against the class of
    /// the complementary partition integrates to one.
    pub fn box_complement(&self, shape: &GrassmannianShape) -> Partition {
        let cols = shape.cols() as u32;
        let mut parts: Vec<u32> = (0..shape.k)
            .map(|i| cols - self.part(shape.k - 1 - i))
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.parts
                .iter()
                .map(|&p| serde_json::Value::Number(p.into()))
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "s[]");
        }
        write!(f, "s[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions inside a `rows x cols` box, by increasing weight.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn extend(rows: usize, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(acc.clone()).expect("weakly decreasing"));
        if acc.len() == rows {
            return;
        }
        for next in 1..=max {
            acc.push(next);
            extend(rows, next, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    extend(rows, cols as u32, &mut Vec::new(), &mut out);
    out.sort_by_key(|p| (p.weight(), p.clone()));
    out.dedup();
    out
}

/// Graded formal rational combination of Schubert classes on a fixed shape.
#[derive(Clone, PartialEq, Debug)]
pub struct SchubertElement {
    shape: GrassmannianShape,
    terms: BTreeMap<Partition, Rat>,
}

impl SchubertElement {
    pub fn zero(shape: GrassmannianShape) -> Self {
        SchubertElement {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn class(shape: GrassmannianShape, partition: Partition) -> Result<Self, SchubertError> {
        if !partition.fits(&shape) {
            return Err(SchubertError::DoesNotFit {
                k: shape.k,
                cols: shape.cols(),
            });
        }
        let mut terms = BTreeMap::new();
        terms.insert(partition, Rat::from_integer(1.into()));
        Ok(SchubertElement { shape, terms })
    }

    pub fn identity(shape: GrassmannianShape) -> Self {
        Self::class(shape, Partition::empty()).expect("empty partition fits")
    }

    pub fn shape(&self) -> GrassmannianShape {
        self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Partition) -> Rat {
        self.terms.get(p).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms_iter(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self, SchubertError> {
        if self.shape != other.shape {
            return Err(SchubertError::ShapeMismatch);
        }
        let mut terms = self.terms.clone();
        for (p, c) in &other.terms {
            let entry = terms.entry(p.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SchubertElement {
            shape: self.shape,
            terms,
        })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.shape);
        }
        SchubertElement {
            shape: self.shape,
            terms: self
                .terms
                .iter()
                .map(|(p, x)| (p.clone(), x * c))
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(p, c)| {
                    serde_json::json!({
                        "partition": p.to_json(),
                        "coefficient": rat_string(c),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for SchubertElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c == &Rat::from_integer(1.into()) {
                write!(f, "{p}")?;
            } else {
                write!(f, "{}*{p}", rat_string(c))?;
            }
        }
        Ok(())
    }
}

/// Littlewood-Richardson product in the Chow ring of the shape. Classes
/// whose partitions leave the box are dropped; the product is bilinear.
pub fn lr_multiply(
    e1: &SchubertElement,
    e2: &SchubertElement,
) -> Result<SchubertElement, SchubertError> {
    if e1.shape != e2.shape {
        return Err(SchubertError::ShapeMismatch);
    }
    let shape = e1.shape;
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (lam, c1) in &e1.terms {
        for (mu, c2) in &e2.terms {
            let coeff = c1 * c2;
            for (nu, mult) in lr_expand(&shape, lam, mu) {
                let entry = out.entry(nu).or_insert_with(Rat::zero);
                *entry += &coeff * Rat::from_integer(mult.into());
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(SchubertElement { shape, terms: out })
}

/// All box partitions `nu` with the Littlewood-Richardson multiplicity
/// `c^nu_{lam,mu}`, computed by counting lattice skew tableaux.
fn lr_expand(
    shape: &GrassmannianShape,
    lam: &Partition,
    mu: &Partition,
) -> Vec<(Partition, u64)> {
    let target = lam.weight() + mu.weight();
    let mut out = Vec::new();
    for nu in partitions_in_box(shape.k, shape.cols()) {
        if nu.weight() != target || !nu.contains(lam) {
            continue;
        }
        let count = lr_coefficient(&nu, lam, mu);
        if count > 0 {
            out.push((nu, count));
        }
    }
    out
}

/// Number of Littlewood-Richardson skew tableaux of shape `nu/lam` and
/// content `mu`: rows weakly increase, columns strictly increase, and the
/// reverse reading word is a lattice word.
fn lr_coefficient(nu: &Partition, lam: &Partition, mu: &Partition) -> u64 {
    if !nu.contains(lam) || nu.weight() != lam.weight() + mu.weight() {
        return 0;
    }
    if mu.is_empty() {
        return u64::from(nu == lam);
    }
    // Cells in reverse reading order: rows top to bottom, right to left.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for row in 0..nu.len() {
        let lo = lam.part(row) as usize;
        let hi = nu.part(row) as usize;
        for col in (lo..hi).rev() {
            cells.push((row, col));
        }
    }
    let nvals = mu.len();
    let mut counts = vec![0u32; nvals];
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();

    fn search(
        idx: usize,
        cells: &[(usize, usize)],
        nu: &Partition,
        lam: &Partition,
        mu: &Partition,
        counts: &mut Vec<u32>,
        filling: &mut BTreeMap<(usize, usize), usize>,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (row, col) = cells[idx];
        let mut total = 0;
        for v in 0..mu.len() {
            if counts[v] >= mu.part(v) {
                continue;
            }
            // Lattice word: every prefix must keep count(v) <= count(v-1).
            if v > 0 && counts[v - 1] <= counts[v] {
                continue;
            }
            // Row weakly increasing to the right.
            if col + 1 < nu.part(row) as usize {
                if let Some(&right) = filling.get(&(row, col + 1)) {
                    if v > right {
                        continue;
                    }
                }
            }
            // Column strictly increasing downwards.
            if row > 0 && col >= lam.part(row - 1) as usize {
                match filling.get(&(row - 1, col)) {
                    Some(&above) if above >= v => continue,
                    Some(_) => {}
                    // Cell above belongs to the skew shape but is processed
                    // earlier in reading order, so it is always present.
                    None => unreachable!("cell above visited first"),
                }
            }
            counts[v] += 1;
            filling.insert((row, col), v);
            total += search(idx + 1, cells, nu, lam, mu, counts, filling);
            filling.remove(&(row, col));
            counts[v] -= 1;
        }
        total
    }

    search(0, &cells, nu, lam, mu, &mut counts, &mut filling)
}

/// Pieri rule: multiply by the special class `sigma_p` by adding horizontal
/// `p`-strips inside the box. Kept independent of the tableau code so the
/// two can check each other.
pub fn pieri_multiply(e: &SchubertElement, p: usize) -> Result<SchubertElement, SchubertError> {
    let shape = e.shape;
    if p > shape.cols() {
        return Err(SchubertError::PieriOutOfRange {
            p,
            cols: shape.cols(),
        });
    }
    if p == 0 {
        return Ok(e.clone());
    }
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (lam, c) in &e.terms {
        for mu in horizontal_strips(&shape, lam, p) {
            let entry = out.entry(mu).or_insert_with(Rat::zero);
            *entry += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(SchubertElement { shape, terms: out })
}

/// Partitions obtained from `lam` by adding a horizontal strip of `p` boxes
/// inside the box: `mu_1 >= lam_1 >= mu_2 >= lam_2 >= ...`.
fn horizontal_strips(shape: &GrassmannianShape, lam: &Partition, p: usize) -> Vec<Partition> {
    fn extend(
        row: usize,
        k: usize,
        remaining: u32,
        lam: &Partition,
        upper: u32,
        acc: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == k {
            if remaining == 0 {
                out.push(Partition::new(acc.clone()).expect("interlaced"));
            }
            return;
        }
        let lo = lam.part(row);
        // Interlacing keeps the strip horizontal: the new row cannot pass
        // the previous row of lam.
        let hi = upper.min(lo + remaining);
        for val in lo..=hi {
            acc.push(val);
            extend(
                row + 1,
                k,
                remaining - (val - lo),
                lam,
                lam.part(row),
                acc,
                out,
            );
            acc.pop();
        }
    }
    let mut out = Vec::new();
    extend(
        0,
        shape.k,
        p as u32,
        lam,
        shape.cols() as u32,
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Coefficient of the point class (full box) in the product `e1 * e2`.
pub fn poincare_pair(e1: &SchubertElement, e2: &SchubertElement) -> Result<Rat, SchubertError> {
    let product = lr_multiply(e1, e2)?;
    Ok(product.coefficient(&e1.shape.full_box()))
}

/// The classes of the divisor, the two codimension-2 cycles, and the two
/// families of planes, in box-partition coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedClass {
    /// Divisor class: `sigma_1`.
    V,
    /// First codimension-2 class: `sigma_2`.
    W1,
    /// Second codimension-2 class: `sigma_{1,1}`.
    W2,
    /// Plane family cut out by a flag of type `(k-1, k+2)`.
    PAlpha,
    /// Plane family cut out by a flag of type `(k-2, k+1)`.
    PBeta,
}

impl NamedClass {
    pub fn parse(name: &str) -> Option<NamedClass> {
        match name {
            "V" => Some(NamedClass::V),
            "W1" => Some(NamedClass::W1),
            "W2" => Some(NamedClass::W2),
            "P_alpha" => Some(NamedClass::PAlpha),
            "P_beta" => Some(NamedClass::PBeta),
            _ => None,
        }
    }
}

impl fmt::Display for NamedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NamedClass::V => "V",
            NamedClass::W1 => "W1",
            NamedClass::W2 => "W2",
            NamedClass::PAlpha => "P_alpha",
            NamedClass::PBeta => "P_beta",
        };
        write!(f, "{s}")
    }
}

/// Partition-coordinates of the named geometric classes.
///
/// The plane families need `k >= 2` and `n - k >= 2` so that their flags
/// exist; outside that range the class is undefined for the shape.
pub fn named_class(
    shape: GrassmannianShape,
    class: NamedClass,
) -> Result<SchubertElement, SchubertError> {
    let cols = shape.cols() as u32;
    let partition = match class {
        NamedClass::V => Partition::new(vec![1]),
        NamedClass::W1 => {
            if shape.cols() < 2 {
                return Err(SchubertError::ClassUndefined("W1".to_string()));
            }
            Partition::new(vec![2])
        }
        NamedClass::W2 => {
            if shape.k < 2 {
                return Err(SchubertError::ClassUndefined("W2".to_string()));
            }
            Partition::new(vec![1, 1])
        }
        NamedClass::PAlpha => {
            if shape.k < 2 || shape.cols() < 2 {
                return Err(SchubertError::ClassUndefined("P_alpha".to_string()));
            }
            let mut parts = vec![cols; shape.k - 1];
            parts.push(cols - 2);
            Partition::new(parts)
        }
        NamedClass::PBeta => {
            if shape.k < 2 || shape.cols() < 2 {
                return Err(SchubertError::ClassUndefined("P_beta".to_string()));
            }
            let mut parts = vec![cols; shape.k - 2];
            parts.push(cols - 1);
            parts.push(cols - 1);
            Partition::new(parts)
        }
    }?;
    SchubertElement::class(shape, partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn g(k: usize, n: usize) -> GrassmannianShape {
        GrassmannianShape::new(k, n).unwrap()
    }

    fn sigma(shape: GrassmannianShape, parts: &[u32]) -> SchubertElement {
        SchubertElement::class(shape, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn divisor_square_splits_into_both_codim2_classes() {
        let shape = g(2, 4);
        let s1 = sigma(shape, &[1]);
        let prod = lr_multiply(&s1, &s1).unwrap();
        let expected = sigma(shape, &[2]).add(&sigma(shape, &[1, 1])).unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn identity_and_zero_cases() {
        let shape = g(2, 4);
        let e = sigma(shape, &[2, 1]);
        let id = SchubertElement::identity(shape);
        assert_eq!(lr_multiply(&id, &e).unwrap(), e);
        assert_eq!(pieri_multiply(&e, 0).unwrap(), e);
        let zero = SchubertElement::zero(shape);
        assert_eq!(poincare_pair(&zero, &e).unwrap(), rat_int(0));
    }

    #[test]
    fn fourth_power_of_divisor_is_twice_the_point() {
        let shape = g(2, 4);
        let s1 = sigma(shape, &[1]);
        let mut e = SchubertElement::identity(shape);
        for _ in 0..4 {
            e = lr_multiply(&e, &s1).unwrap();
        }
        assert_eq!(e, sigma(shape, &[2, 2]).scale(&rat_int(2)));
    }

    #[test]
    fn pieri_examples() {
        let shape = g(2, 4);
        assert_eq!(
            pieri_multiply(&sigma(shape, &[1, 1]), 1).unwrap(),
            sigma(shape, &[2, 1])
        );
        assert_eq!(
            pieri_multiply(&sigma(shape, &[2]), 2).unwrap(),
            sigma(shape, &[2, 2])
        );
        assert!(pieri_multiply(&sigma(shape, &[1]), 3).is_err());
    }

    #[test]
    fn named_classes_and_their_pairings() {
        let shape = g(2, 4);
        assert_eq!(
            named_class(shape, NamedClass::W1).unwrap(),
            sigma(shape, &[2])
        );
        assert_eq!(
            named_class(shape, NamedClass::W2).unwrap(),
            sigma(shape, &[1, 1])
        );
        let w1 = named_class(shape, NamedClass::W1).unwrap();
        let w2 = named_class(shape, NamedClass::W2).unwrap();
        let pa = named_class(shape, NamedClass::PAlpha).unwrap();
        let pb = named_class(shape, NamedClass::PBeta).unwrap();
        assert_eq!(poincare_pair(&w1, &pa).unwrap(), rat_int(1));
        assert_eq!(poincare_pair(&w1, &pb).unwrap(), rat_int(0));
        assert_eq!(poincare_pair(&w2, &pa).unwrap(), rat_int(0));
        assert_eq!(poincare_pair(&w2, &pb).unwrap(), rat_int(1));
        assert_eq!(poincare_pair(&pa, &pa).unwrap(), rat_int(1));
    }

    #[test]
    fn plane_classes_need_room_for_their_flags() {
        let line_space = g(1, 3);
        assert!(matches!(
            named_class(line_space, NamedClass::PAlpha),
            Err(SchubertError::ClassUndefined(_))
        ));
        assert!(named_class(line_space, NamedClass::V).is_ok());
        assert!(named_class(line_space, NamedClass::W2).is_err());
    }

    #[test]
    fn duality_of_complementary_bases() {
        for shape in [g(2, 4), g(2, 5), g(3, 6)] {
            let dim = shape.dimension();
            for p in partitions_in_box(shape.k(), shape.cols()) {
                let e1 = SchubertElement::class(shape, p.clone()).unwrap();
                for q in partitions_in_box(shape.k(), shape.cols()) {
                    if p.weight() + q.weight() != dim as u32 {
                        continue;
                    }
                    let e2 = SchubertElement::class(shape, q.clone()).unwrap();
                    let expected = rat_int(i64::from(q == p.box_complement(&shape)));
                    assert_eq!(poincare_pair(&e1, &e2).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn lr_product_is_commutative_and_associative_on_small_shapes() {
        for shape in [g(2, 4), g(2, 5)] {
            let basis: Vec<SchubertElement> = partitions_in_box(shape.k(), shape.cols())
                .into_iter()
                .map(|p| SchubertElement::class(shape, p).unwrap())
                .collect();
            for x in &basis {
                for y in &basis {
                    assert_eq!(lr_multiply(x, y).unwrap(), lr_multiply(y, x).unwrap());
                    for z in &basis {
                        let xy_z = lr_multiply(&lr_multiply(x, y).unwrap(), z).unwrap();
                        let x_yz = lr_multiply(x, &lr_multiply(y, z).unwrap()).unwrap();
                        assert_eq!(xy_z, x_yz);
                    }
                }
            }
        }
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = sigma(g(2, 4), &[1]);
        let b = sigma(g(2, 5), &[1]);
        assert_eq!(lr_multiply(&a, &b).unwrap_err(), SchubertError::ShapeMismatch);
    }

    #[test]
    fn json_form_is_stable() {
        let shape = g(2, 4);
        let s1 = sigma(shape, &[1]);
        let e = lr_multiply(&s1, &s1).unwrap();
        let json = serde_json::to_string(&e.to_json()).unwrap();
        assert_eq!(
            json,
            r#"[{"coefficient":"1","partition":[1,1]},{"coefficient":"1","partition":[2]}]"#
        );
    }
}
