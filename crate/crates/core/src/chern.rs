//! Formal characteristic-class calculus to degree 4.
//!
//! A [`BundleClass`] is a rank together with a total Chern class over a
//! presented ring; the rank may be a polynomial in `a`, which is what the
//! twist formula needs when the number of Chern roots is symbolic. All
//! operations are exact and truncate silently above the ring's top degree.

use num_traits::One;
use once_cell::sync::Lazy;
use thiserror::Error;

use crate::poly::binom_poly;
use crate::presented::{
    p2_ring, projective_extension, PresentedElement, PresentedError, Ring,
};
use crate::scalar::{rat, rat_int, Rat, Scalar};

#[derive(Debug, Error)]
pub enum ChernError {
    #[error("total Chern class must have degree-0 coefficient exactly 1")]
    NotUnital,
    #[error("ring mismatch between bundle operands")]
    RingMismatch,
    #[error("twisting class must be homogeneous of degree 1")]
    NotALineClass,
    #[error("projectivization needs a positive integer rank")]
    NonIntegerRank,
    #[error(transparent)]
    Presented(#[from] PresentedError),
}

/// Rank plus total Chern class over a presented ring.
#[derive(Clone, PartialEq, Debug)]
pub struct BundleClass<S: Scalar> {
    rank: S,
    chern: PresentedElement<S>,
}

impl<S: Scalar> BundleClass<S> {
    pub fn new(rank: S, chern: PresentedElement<S>) -> Result<Self, ChernError> {
        if chern.graded_component(0).coefficient_of_unit() != S::one() {
            return Err(ChernError::NotUnital);
        }
        Ok(BundleClass { rank, chern })
    }

    /// Trivial bundle of the given rank: total Chern class 1.
    pub fn trivial(ring: &Ring, rank: S) -> Self {
        BundleClass {
            rank,
            chern: PresentedElement::one(ring),
        }
    }

    /// Line bundle with the given first Chern class.
    pub fn line(c1: &PresentedElement<S>) -> Result<Self, ChernError> {
        if !c1.is_homogeneous_of_degree(1) {
            return Err(ChernError::NotALineClass);
        }
        let chern = PresentedElement::one(c1.ring()).add(c1);
        Ok(BundleClass {
            rank: S::one(),
            chern,
        })
    }

    /// Bundle from rank and the list `[c_1, c_2, ...]` of homogeneous classes.
    pub fn from_chern_classes(
        ring: &Ring,
        rank: S,
        classes: &[PresentedElement<S>],
    ) -> Result<Self, ChernError> {
        let mut chern = PresentedElement::one(ring);
        for (i, ci) in classes.iter().enumerate() {
            if !ci.is_homogeneous_of_degree(i + 1) {
                return Err(ChernError::NotALineClass);
            }
            chern = chern.add(ci);
        }
        Ok(BundleClass { rank, chern })
    }

    pub fn ring(&self) -> &Ring {
        self.chern.ring()
    }

    pub fn rank(&self) -> &S {
        &self.rank
    }

    pub fn total_chern(&self) -> &PresentedElement<S> {
        &self.chern
    }

    /// The degree-`k` Chern class.
    pub fn c(&self, k: usize) -> PresentedElement<S> {
        self.chern.graded_component(k)
    }

    /// Direct sum: ranks add, total Chern classes multiply.
    pub fn whitney_sum(&self, other: &Self) -> Result<Self, ChernError> {
        if !self.chern.ring_is(other.chern.ring()) {
            return Err(ChernError::RingMismatch);
        }
        Ok(BundleClass {
            rank: self.rank.add_ref(&other.rank),
            chern: self.chern.multiply(&other.chern),
        })
    }

    /// Dual bundle: `c_i` picks up the sign `(-1)^i`; an involution.
    pub fn dual(&self) -> Self {
        let ring = self.chern.ring().clone();
        let mut chern = PresentedElement::zero(&ring);
        for d in 0..=ring.top_degree() {
            let component = self.chern.graded_component(d);
            let signed = if d % 2 == 1 { component.neg() } else { component };
            chern = chern.add(&signed);
        }
        BundleClass {
            rank: self.rank.clone(),
            chern,
        }
    }

    /// Tensor with a line bundle of first Chern class `line`:
    /// `c_k(F (x) L) = sum_i binom(rank - i, k - i) c_1(L)^{k-i} c_i(F)`.
    ///
    /// The binomial with a scalar upper argument is the falling factorial
    /// `p (p-1) ... (p-m+1) / m!`, which agrees with ordinary binomials at
    /// integer rank and extends them polynomially.
    pub fn twist_by_line(&self, line: &PresentedElement<S>) -> Result<Self, ChernError>
    where
        S: TwistScalar,
    {
        if !line.is_homogeneous_of_degree(1) && !line.is_zero() {
            return Err(ChernError::NotALineClass);
        }
        let ring = self.chern.ring().clone();
        let top = ring.top_degree();
        let mut chern = PresentedElement::one(&ring);
        for k in 1..=top {
            let mut ck = PresentedElement::zero(&ring);
            for i in 0..=k {
                let ci = self.chern.graded_component(i);
                if ci.is_zero() {
                    continue;
                }
                let coeff = S::binom(&self.rank, i as u32, (k - i) as u32);
                if coeff.is_zero() {
                    continue;
                }
                let term = ci.multiply(&line.pow((k - i) as u32)).scale(&coeff);
                ck = ck.add(&term);
            }
            chern = chern.add(&ck);
        }
        Ok(BundleClass {
            rank: self.rank.clone(),
            chern,
        })
    }

    /// Chern character truncated at the ring's top degree, via Newton's
    /// identities for the power sums:
    /// `p1 = c1`, `p2 = c1^2 - 2 c2`, `p3 = c1^3 - 3 c1 c2 + 3 c3`,
    /// `p4 = c1^4 - 4 c1^2 c2 + 4 c1 c3 + 2 c2^2 - 4 c4`.
    pub fn chern_character(&self) -> PresentedElement<S> {
        let ring = self.chern.ring().clone();
        let top = ring.top_degree();
        let c1 = self.chern.graded_component(1);
        let c2 = self.chern.graded_component(2);
        let c3 = self.chern.graded_component(3);
        let c4 = self.chern.graded_component(4);

        let mut ch = PresentedElement::one(&ring).scale(&self.rank);
        if top >= 1 {
            ch = ch.add(&c1);
        }
        if top >= 2 {
            let p2 = c1.multiply(&c1).sub(&c2.scale_rat(&rat_int(2)));
            ch = ch.add(&p2.scale_rat(&rat(1, 2)));
        }
        if top >= 3 {
            let p3 = c1
                .pow(3)
                .sub(&c1.multiply(&c2).scale_rat(&rat_int(3)))
                .add(&c3.scale_rat(&rat_int(3)));
            ch = ch.add(&p3.scale_rat(&rat(1, 6)));
        }
        if top >= 4 {
            let p4 = c1
                .pow(4)
                .sub(&c1.pow(2).multiply(&c2).scale_rat(&rat_int(4)))
                .add(&c1.multiply(&c3).scale_rat(&rat_int(4)))
                .add(&c2.pow(2).scale_rat(&rat_int(2)))
                .sub(&c4.scale_rat(&rat_int(4)));
            ch = ch.add(&p4.scale_rat(&rat(1, 24)));
        }
        ch
    }

    /// Todd class of a tangent-like bundle:
    /// `1 + c1/2 + (c1^2 + c2)/12 + c1 c2 / 24
    ///  - (c1^4 - 4 c1^2 c2 - 3 c2^2 - c1 c3 + c4)/720`.
    pub fn todd_class(&self) -> PresentedElement<S> {
        let ring = self.chern.ring().clone();
        let top = ring.top_degree();
        let c1 = self.chern.graded_component(1);
        let c2 = self.chern.graded_component(2);
        let c3 = self.chern.graded_component(3);
        let c4 = self.chern.graded_component(4);

        let mut td = PresentedElement::one(&ring);
        if top >= 1 {
            td = td.add(&c1.scale_rat(&rat(1, 2)));
        }
        if top >= 2 {
            let t2 = c1.pow(2).add(&c2).scale_rat(&rat(1, 12));
            td = td.add(&t2);
        }
        if top >= 3 {
            td = td.add(&c1.multiply(&c2).scale_rat(&rat(1, 24)));
        }
        if top >= 4 {
            let t4 = c1
                .pow(4)
                .sub(&c1.pow(2).multiply(&c2).scale_rat(&rat_int(4)))
                .sub(&c2.pow(2).scale_rat(&rat_int(3)))
                .sub(&c1.multiply(&c3))
                .add(&c4);
            td = td.add(&t4.scale_rat(&rat(-1, 720)));
        }
        td
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> BundleClass<T> {
        BundleClass {
            rank: f(&self.rank),
            chern: self.chern.map_scalars(f),
        }
    }
}

/// Binomial coefficients in the scalar domain, for the twist formula.
pub trait TwistScalar: Scalar {
    /// `binom(rank - shift, m)` as a scalar.
    fn binom(rank: &Self, shift: u32, m: u32) -> Self;
}

impl TwistScalar for Rat {
    fn binom(rank: &Self, shift: u32, m: u32) -> Self {
        let mut acc = Rat::one();
        let mut fact = Rat::one();
        for j in 0..m {
            acc *= rank - rat_int(i64::from(shift + j));
            fact *= rat_int(i64::from(j + 1));
        }
        acc / fact
    }
}

impl TwistScalar for crate::poly::RatPoly {
    fn binom(rank: &Self, shift: u32, m: u32) -> Self {
        let shifted = rank - &crate::poly::RatPoly::constant(rat_int(i64::from(shift)));
        binom_poly(&shifted, m)
    }
}

/// Rational bundle on the plane with `c = (1 + h)^3` truncated: the tangent
/// bundle of the projective plane.
pub fn tangent_p2() -> BundleClass<Rat> {
    let p2 = p2_ring();
    let h = PresentedElement::<Rat>::generator(&p2, "h").expect("generator h");
    let c1 = h.scale_rat(&rat_int(3));
    let c2 = h.pow(2).scale_rat(&rat_int(3));
    BundleClass::from_chern_classes(&p2, rat_int(2), &[c1, c2]).expect("tangent classes")
}

/// The line bundle `O(d)` on the plane.
pub fn line_on_p2(d: i64) -> BundleClass<Rat> {
    let p2 = p2_ring();
    let h = PresentedElement::<Rat>::generator(&p2, "h").expect("generator h");
    BundleClass::line(&h.scale_rat(&rat_int(d))).expect("line bundle")
}

/// The rank-3 bundle `O(1) + T(-1)` on the plane whose projectivization is
/// the fourfold `Q`. Derived by Whitney sum and twist, not transcribed.
pub fn plane_bundle_for_q() -> BundleClass<Rat> {
    let p2 = p2_ring();
    let h = PresentedElement::<Rat>::generator(&p2, "h").expect("generator h");
    let o1 = BundleClass::line(&h).expect("O(1)");
    let t_twist = tangent_p2()
        .twist_by_line(&h.neg())
        .expect("tangent twist");
    o1.whitney_sum(&t_twist).expect("same ring")
}

/// Chow ring of the fourfold `Q`, the projectivization of `O(1) + T(-1)`
/// over the plane. Generators: `R` (pullback of the hyperplane class of the
/// base) and `H` (the relative hyperplane class).
pub fn q_ring() -> Ring {
    static RING: Lazy<Ring> = Lazy::new(|| {
        let w = plane_bundle_for_q();
        projective_extension(&p2_ring(), 3, w.total_chern(), &["R"], "H", "A(Q)")
            .expect("projective extension of the plane")
    });
    RING.clone()
}

/// Projectivize a bundle over its base ring; thin wrapper around
/// [`projective_extension`] that takes the bundle itself.
pub fn projective_bundle_ring(
    base: &Ring,
    bundle: &BundleClass<Rat>,
    base_gen_names: &[&str],
    fiber_gen: &str,
    name: &str,
) -> Result<Ring, ChernError> {
    let rank = bundle
        .rank()
        .to_rat()
        .filter(|r| r.denom().is_one())
        .and_then(|r| usize::try_from(r.numer().clone()).ok())
        .ok_or(ChernError::NonIntegerRank)?;
    if rank < 1 {
        return Err(ChernError::Presented(PresentedError::BadRank(rank)));
    }
    Ok(projective_extension(
        base,
        rank,
        bundle.total_chern(),
        base_gen_names,
        fiber_gen,
        name,
    )?)
}

/// Pull a bundle class on the base back to the projective bundle.
pub fn pullback_bundle<S: Scalar>(
    total: &Ring,
    bundle: &BundleClass<S>,
) -> Result<BundleClass<S>, ChernError> {
    Ok(BundleClass {
        rank: bundle.rank.clone(),
        chern: crate::presented::pullback(total, &bundle.chern)?,
    })
}
