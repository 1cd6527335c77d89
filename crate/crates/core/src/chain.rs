//! Twisted-chain bookkeeping: divisibility forcing for first Chern data
//! along a chain of embeddings, 2x2 transition matrices with the all-ones
//! eigenvector, feasibility enumeration for second Chern data, and
//! splitting-type ordering.
//!
//! The infinite chain is modeled by a finite prefix plus a bound on the
//! far tail; "for large m" statements become monotone-exclusion properties
//! parameterized by the prefix length. Enumeration is exhaustive over the
//! declared bound, no heuristics.

use std::collections::BTreeSet;
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("chain must have at least one step")]
    EmptyChain,
    #[error("degrees[{0}]: every degree must be >= 1")]
    BadDegree(usize),
    #[error("matrices[{0}]: entries must be nonnegative")]
    NegativeEntry(usize),
    #[error("matrices[{index}]: row sums ({found0}, {found1}) must both equal degree^2 = {expected}")]
    RowSumMismatch {
        index: usize,
        expected: i64,
        found0: i64,
        found1: i64,
    },
    #[error("matrices: expected {expected} entries to match degrees, found {found}")]
    MatrixCountMismatch { expected: usize, found: usize },
    #[error("chain has no transition matrices")]
    MatricesMissing,
    #[error("matrix index out of range: {m} + {i} >= {len}")]
    IndexOutOfRange { m: usize, i: usize, len: usize },
    #[error("bound must be >= 1, got {0}")]
    BadBound(i64),
    #[error("integer overflow while forming chain products")]
    Overflow,
    #[error("splitting types must be nonempty and of equal length")]
    MixedLengths,
    #[error("splitting type parts must be weakly decreasing")]
    NotWeaklyDecreasing,
    #[error("inputs must be positive, got ({0}, {1})")]
    NonPositive(i64, i64),
    #[error("{0}")]
    Parse(String),
}

/// 2x2 nonnegative integer matrix whose row sums both equal the square of
/// the step degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TransitionMatrix {
    entries: [[i64; 2]; 2],
}

impl TransitionMatrix {
    pub fn new(entries: [[i64; 2]; 2]) -> Self {
        TransitionMatrix { entries }
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        self.entries
    }

    pub fn row_sums(&self) -> (i64, i64) {
        (
            self.entries[0][0] + self.entries[0][1],
            self.entries[1][0] + self.entries[1][1],
        )
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().flatten().all(|&e| e >= 0)
    }

    fn checked_mul(&self, other: &TransitionMatrix) -> Result<TransitionMatrix, ChainError> {
        let a = &self.entries;
        let b = &other.entries;
        let mut out = [[0i64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let t1 = a[i][0].checked_mul(b[0][j]).ok_or(ChainError::Overflow)?;
                let t2 = a[i][1].checked_mul(b[1][j]).ok_or(ChainError::Overflow)?;
                *cell = t1.checked_add(t2).ok_or(ChainError::Overflow)?;
            }
        }
        Ok(TransitionMatrix { entries: out })
    }

    fn apply(&self, v: (i64, i64)) -> Result<(i64, i64), ChainError> {
        let x = self.entries[0][0]
            .checked_mul(v.0)
            .and_then(|t| t.checked_add(self.entries[0][1].checked_mul(v.1)?))
            .ok_or(ChainError::Overflow)?;
        let y = self.entries[1][0]
            .checked_mul(v.0)
            .and_then(|t| t.checked_add(self.entries[1][1].checked_mul(v.1)?))
            .ok_or(ChainError::Overflow)?;
        Ok((x, y))
    }
}

impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entries[0][0], self.entries[0][1], self.entries[1][0], self.entries[1][1]
        )
    }
}

/// `M v = deg^2 v` for the all-ones vector `v`, which for a 2x2 matrix is
/// exactly the statement that both row sums equal `deg^2`.
pub fn eigen_check(m: &TransitionMatrix, deg: i64) -> bool {
    let target = deg * deg;
    let (r0, r1) = m.row_sums();
    r0 == target && r1 == target
}

/// Degree sequence of a chain of embeddings, with optional transition
/// matrices (one per step).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpec {
    degrees: Vec<i64>,
    matrices: Option<Vec<TransitionMatrix>>,
}

#[derive(Deserialize)]
struct ChainSpecJson {
    degrees: Vec<i64>,
    #[serde(default)]
    matrices: Option<Vec<[[i64; 2]; 2]>>,
}

impl ChainSpec {
    pub fn new(
        degrees: Vec<i64>,
        matrices: Option<Vec<TransitionMatrix>>,
    ) -> Result<Self, ChainError> {
        if degrees.is_empty() {
            return Err(ChainError::EmptyChain);
        }
        for (i, &d) in degrees.iter().enumerate() {
            if d < 1 {
                return Err(ChainError::BadDegree(i));
            }
        }
        if let Some(ms) = &matrices {
            if ms.len() != degrees.len() {
                return Err(ChainError::MatrixCountMismatch {
                    expected: degrees.len(),
                    found: ms.len(),
                });
            }
            for (i, m) in ms.iter().enumerate() {
                if !m.is_nonnegative() {
                    return Err(ChainError::NegativeEntry(i));
                }
                let expected = degrees[i] * degrees[i];
                let (r0, r1) = m.row_sums();
                if r0 != expected || r1 != expected {
                    return Err(ChainError::RowSumMismatch {
                        index: i,
                        expected,
                        found0: r0,
                        found1: r1,
                    });
                }
            }
        }
        Ok(ChainSpec { degrees, matrices })
    }

    pub fn from_json_str(text: &str) -> Result<Self, ChainError> {
        let parsed: ChainSpecJson = serde_json::from_str(text)
            .map_err(|e| ChainError::Parse(format!("chain spec: {e}")))?;
        let matrices = parsed
            .matrices
            .map(|ms| ms.into_iter().map(TransitionMatrix::new).collect());
        ChainSpec::new(parsed.degrees, matrices)
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn matrices(&self) -> Option<&[TransitionMatrix]> {
        self.matrices.as_deref()
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Keep only the first `steps` steps.
    pub fn truncate(&self, steps: usize) -> Result<Self, ChainError> {
        let steps = steps.min(self.len());
        ChainSpec::new(
            self.degrees[..steps].to_vec(),
            self.matrices.as_ref().map(|ms| ms[..steps].to_vec()),
        )
    }

    /// Product of all step degrees.
    pub fn degree_product(&self) -> Result<i64, ChainError> {
        let mut acc = 1i64;
        for &d in &self.degrees {
            acc = acc.checked_mul(d).ok_or(ChainError::Overflow)?;
        }
        Ok(acc)
    }
}

/// Feasible first-Chern values at the near end of the chain: pulling back
/// through a degree-`d` step multiplies the divisor class by `d`, so with
/// the far value bounded by `bound` the near values are exactly the
/// multiples of the full degree product.
pub fn c1_forcing(chain: &ChainSpec, bound: i64) -> Result<BTreeSet<i64>, ChainError> {
    if bound < 1 {
        return Err(ChainError::BadBound(bound));
    }
    let delta = chain.degree_product()?;
    let mut out = BTreeSet::new();
    for t in -bound..=bound {
        out.insert(delta.checked_mul(t).ok_or(ChainError::Overflow)?);
    }
    Ok(out)
}

/// `A(m) A(m+1) ... A(m+i)`, zero-based.
pub fn product_matrix(
    chain: &ChainSpec,
    m: usize,
    i: usize,
) -> Result<TransitionMatrix, ChainError> {
    let ms = chain.matrices().ok_or(ChainError::MatricesMissing)?;
    let end = m.checked_add(i).ok_or(ChainError::Overflow)?;
    if end >= ms.len() {
        return Err(ChainError::IndexOutOfRange {
            m,
            i,
            len: ms.len(),
        });
    }
    let mut acc = ms[m];
    for factor in &ms[m + 1..=end] {
        acc = acc.checked_mul(factor)?;
    }
    Ok(acc)
}

/// All second-Chern root vectors reachable from integer tails bounded by
/// `bound`: the image of the tail box under the full matrix product.
pub fn feasible_c2(
    chain: &ChainSpec,
    bound: i64,
) -> Result<BTreeSet<(i64, i64)>, ChainError> {
    if bound < 1 {
        return Err(ChainError::BadBound(bound));
    }
    if chain.matrices().is_none() {
        return Err(ChainError::MatricesMissing);
    }
    let product = product_matrix(chain, 0, chain.len() - 1)?;
    let mut out = BTreeSet::new();
    for t1 in -bound..=bound {
        for t2 in -bound..=bound {
            out.insert(product.apply((t1, t2))?);
        }
    }
    Ok(out)
}

/// Weakly decreasing integer tuple recording a restriction to a rational
/// curve.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SplittingType {
    parts: Vec<i64>,
}

impl SplittingType {
    pub fn new(parts: Vec<i64>) -> Result<Self, ChainError> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(ChainError::NotWeaklyDecreasing);
        }
        Ok(SplittingType { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic minimum of a nonempty family of equal-length types.
pub fn splitting_lex_min(types: &[SplittingType]) -> Result<SplittingType, ChainError> {
    let first = types.first().ok_or(ChainError::MixedLengths)?;
    if types.iter().any(|t| t.parts.len() != first.parts.len()) {
        return Err(ChainError::MixedLengths);
    }
    Ok(types.iter().min().expect("nonempty").clone())
}

/// Lower bound for the splitting parameter of a pullback along a chain of
/// cumulative degree `delta`: a degree-`delta` curve multiplies it by at
/// least `delta`.
pub fn pullback_splitting_bound(a: i64, delta: i64) -> Result<i64, ChainError> {
    if a < 1 || delta < 1 {
        return Err(ChainError::NonPositive(a, delta));
    }
    a.checked_mul(delta).ok_or(ChainError::Overflow)
}

/// Deterministic pseudo-random chain with valid transition matrices, for
/// verification suites. The generator is a fixed splitmix64 stream, so a
/// given seed always produces the same chain.
pub fn seeded_chain(seed: u64, degrees: &[i64]) -> ChainSpec {
    let mut state = seed;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let matrices = degrees
        .iter()
        .map(|&d| {
            let s = d * d;
            let a11 = (next() % (s as u64 + 1)) as i64;
            let a21 = (next() % (s as u64 + 1)) as i64;
            TransitionMatrix::new([[a11, s - a11], [a21, s - a21]])
        })
        .collect();
    ChainSpec::new(degrees.to_vec(), Some(matrices)).expect("row sums valid by construction")
}
