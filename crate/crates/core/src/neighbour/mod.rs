//! Decision procedures for the first-order neighbour relation `f ∼ g`.
//!
//! `f ∼ g` means `(f(a) - g(a))·(f(b) - g(b)) = 0` for all `a, b` in the
//! domain. Since the domain is presented by generators, it is enough to test
//! the generator differences: both sides are bilinear in the differences and
//! the presentation `k[X] → B` is surjective, so a violation anywhere gives a
//! violation on some pair of generators.

mod affine;
mod matrix;
mod proofs;

use std::fmt;

use crate::algebra::{AlgebraElement, AlgebraMap};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

pub use affine::{
    affine_combination, affine_combination_rows, canonical_map, linear_combination_apply, CanonicalMap,
    CoefficientVector,
};
pub use matrix::{
    extend_matrix, in_dtilde, is_simplex, matrix_domain, row_map, transpose, universal_dtilde, DtildeVerdict, QuadWitness,
    SimplexMatrix,
};
pub use proofs::{decompose_difference, rewrite_kernel_element, DifferenceDecomposition, KernelTerm};

/// A pair of generator indices (0-based) whose product of differences is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub i: usize,
    pub j: usize,
    pub value: AlgebraElement,
}

impl fmt::Display for PairWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) -> {}", self.i + 1, self.j + 1, self.value)
    }
}

/// Outcome of a check: holds exactly when no witness was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<W> {
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    fn from_witness(witness: Option<W>) -> Self {
        Verdict { witness }
    }
}

fn check_parallel(f: &AlgebraMap, g: &AlgebraMap) -> Result<()> {
    if f.domain() != g.domain() || f.codomain() != g.codomain() {
        return Err(Error::DomainMismatch);
    }
    Ok(())
}

fn differences(f: &AlgebraMap, g: &AlgebraMap) -> Vec<AlgebraElement> {
    f.images().iter().zip(g.images()).map(|(a, b)| b - a).collect()
}

fn first_pair<F>(n: usize, mut value: F) -> Option<PairWitness>
where
    F: FnMut(usize, usize) -> AlgebraElement,
{
    for i in 0..n {
        for j in i..n {
            let v = value(i, j);
            if !v.is_zero() {
                return Some(PairWitness { i, j, value: v });
            }
        }
    }
    None
}

/// `f ∼ g`, decided on generator images: `(g_i - f_i)(g_j - f_j) = 0` for all `i ≤ j`.
pub fn is_neighbour(f: &AlgebraMap, g: &AlgebraMap) -> Result<Verdict<PairWitness>> {
    check_parallel(f, g)?;
    let d = differences(f, g);
    Ok(Verdict::from_witness(first_pair(d.len(), |i, j| &d[i] * &d[j])))
}

/// The minus-free formulation `f(a)g(b) + g(a)f(b) = f(ab) + g(ab)` on generator pairs.
/// The witness value is the left side minus the right side.
pub fn is_neighbour_minus_free(f: &AlgebraMap, g: &AlgebraMap) -> Result<Verdict<PairWitness>> {
    check_parallel(f, g)?;
    let dom = f.domain();
    let n = dom.ngens();
    let mut err = None;
    let w = first_pair(n, |i, j| {
        let mut e = vec![0u32; n];
        e[i] += 1;
        e[j] += 1;
        let ab = Polynomial::monomial(dom.varset(), dom.ring(), Monomial::from_exponents(e));
        let lhs = &(f.image(i) * g.image(j)) + &(g.image(i) * f.image(j));
        let rhs = match (f.apply_poly(&ab), g.apply_poly(&ab)) {
            (Ok(x), Ok(y)) => &x + &y,
            (Err(e), _) | (_, Err(e)) => {
                err = Some(e);
                return lhs.parent().zero();
            }
        };
        &lhs - &rhs
    });
    match err {
        Some(e) => Err(e),
        None => Ok(Verdict::from_witness(w)),
    }
}

/// Squares `(f(a) - g(a))²` for `a` a generator or a sum of two generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareZeroVerdict {
    /// Generator indices of `a` and the nonzero square.
    pub witness: Option<(Vec<usize>, AlgebraElement)>,
    /// Set when 2 is not a unit: then these squares do not decide `f ∼ g`.
    pub bounded: bool,
}

impl SquareZeroVerdict {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn is_square_zero_pair(f: &AlgebraMap, g: &AlgebraMap) -> Result<SquareZeroVerdict> {
    check_parallel(f, g)?;
    let d = differences(f, g);
    let bounded = !f.domain().ring().two_invertible();
    for (i, di) in d.iter().enumerate() {
        let sq = di * di;
        if !sq.is_zero() {
            return Ok(SquareZeroVerdict { witness: Some((vec![i], sq)), bounded });
        }
    }
    for i in 0..d.len() {
        for j in (i + 1)..d.len() {
            let s = &d[i] + &d[j];
            let sq = &s * &s;
            if !sq.is_zero() {
                return Ok(SquareZeroVerdict { witness: Some((vec![i, j], sq)), bounded });
            }
        }
    }
    Ok(SquareZeroVerdict { witness: None, bounded })
}

/// Neighbour condition for two vectors of `C^n`.
pub fn vectors_neighbour(a: &[AlgebraElement], b: &[AlgebraElement]) -> Result<Verdict<PairWitness>> {
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch(format!("vectors of length {} and {}", a.len(), b.len())));
    }
    if let Some(first) = a.first() {
        if a.iter().chain(b).any(|x| x.parent() != first.parent()) {
            return Err(Error::ParentMismatch);
        }
    }
    let d: Vec<AlgebraElement> = a.iter().zip(b).map(|(x, y)| y - x).collect();
    Ok(Verdict::from_witness(first_pair(d.len(), |i, j| &d[i] * &d[j])))
}
