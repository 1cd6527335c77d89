//! Exact-arithmetic intersection theory toolkit.
//!
//! The crate computes in four layers, each usable on its own:
//!
//! - [`schubert`]: the Chow ring of a Grassmannian `G(k;n)` in the Schubert
//!   basis, with Littlewood-Richardson and Pieri products, the Poincare
//!   pairing, and the named divisor, codimension-2, and plane classes.
//! - [`presented`]: finitely presented graded rings with normal-form
//!   rewriting, integration, projective-bundle extensions and a linear
//!   solver over the integral pairing; instances for the plane and for the
//!   fourfold `Q`, the projectivization of `O(1) + T(-1)` over the plane.
//! - [`chern`] and [`riemann_roch`]: characteristic classes to degree 4
//!   (Whitney sums, duals, line twists, Chern character, Todd class) and
//!   exact Euler characteristics through Hirzebruch-Riemann-Roch.
//! - [`monad`] and [`chain`]: the monad-constraint pipeline that forces all
//!   Chern data from a rank-2 class on `Q` and reports exclusion verdicts,
//!   and the twisted-chain feasibility arguments for first and second
//!   Chern data along chains of embeddings.
//!
//! Everything is exact: scalars are arbitrary-precision rationals or
//! univariate rational polynomials in the symbolic parameter `a`. There is
//! no floating point anywhere in the crate.

pub mod chain;
pub mod chern;
pub mod monad;
pub mod oracle;
pub mod poly;
pub mod presented;
pub mod riemann_roch;
pub mod scalar;
pub mod schubert;
pub mod selftest;

pub use chain::{ChainSpec, SplittingType, TransitionMatrix};
pub use chern::{q_ring, BundleClass};
pub use monad::{MonadSymbolic, MonadVerdict};
pub use poly::RatPoly;
pub use presented::{p2_ring, PresentedElement, Ring};
pub use riemann_roch::VarietyContext;
pub use scalar::{Rat, Scalar};
pub use schubert::{GrassmannianShape, Partition, SchubertElement};
