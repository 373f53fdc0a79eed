//! Matrices of algebra elements: infinitesimal simplices of vectors and the
//! sets `D̃(p,n)` (simplices anchored at the zero vector, zero row left implicit).

use std::fmt;

use super::Verdict;
use crate::algebra::{make_algebra, make_map, sum, AlgebraElement, AlgebraMap, FpAlgebra, Strategy};
use crate::arith::RingSpec;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, VarSet};

/// A `rows × cols` array of elements of one codomain algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexMatrix {
    codomain: FpAlgebra,
    rows: Vec<Vec<AlgebraElement>>,
}

impl SimplexMatrix {
    pub fn new(codomain: &FpAlgebra, rows: Vec<Vec<AlgebraElement>>) -> Result<Self> {
        let cols = rows.first().map(Vec::len).unwrap_or(0);
        if rows.is_empty() || cols == 0 {
            return Err(Error::ShapeMismatch("matrix needs at least one row and one column".into()));
        }
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("rows of different lengths".into()));
        }
        if rows.iter().flatten().any(|x| x.parent() != codomain) {
            return Err(Error::ParentMismatch);
        }
        Ok(SimplexMatrix { codomain: codomain.clone(), rows })
    }

    /// Entries from polynomial texts.
    pub fn from_texts(codomain: &FpAlgebra, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|t| codomain.parse(t)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(codomain, rows)
    }

    /// One row per line, entries separated by `,`. Blank and `#` lines are skipped.
    pub fn parse(codomain: &FpAlgebra, text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.split(',').map(|t| codomain.parse(t.trim())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(codomain, rows)
    }

    pub fn codomain(&self) -> &FpAlgebra {
        &self.codomain
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<AlgebraElement>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[AlgebraElement] {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.rows[i][j]
    }

    /// The matrix with a zero row prepended.
    pub fn with_zero_row(&self) -> SimplexMatrix {
        let mut rows = vec![vec![self.codomain.zero(); self.ncols()]];
        rows.extend(self.rows.iter().cloned());
        SimplexMatrix { codomain: self.codomain.clone(), rows }
    }

    pub fn without_row(&self, i: usize) -> Option<SimplexMatrix> {
        (self.nrows() > 1).then(|| {
            let mut rows = self.rows.clone();
            rows.remove(i);
            SimplexMatrix { codomain: self.codomain.clone(), rows }
        })
    }

    pub fn without_col(&self, j: usize) -> Option<SimplexMatrix> {
        (self.ncols() > 1).then(|| {
            let rows = self
                .rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                .collect();
            SimplexMatrix { codomain: self.codomain.clone(), rows }
        })
    }
}

impl fmt::Display for SimplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Row indices `(i, i2)`, column indices `(j, j2)` (0-based; displayed 1-based) and the offending value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadWitness {
    pub i: usize,
    pub i2: usize,
    pub j: usize,
    pub j2: usize,
    pub value: AlgebraElement,
}

impl fmt::Display for QuadWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rows ({}, {}) cols ({}, {}) -> {}", self.i + 1, self.i2 + 1, self.j + 1, self.j2 + 1, self.value)
    }
}

/// Rows are mutual neighbours: `(a_ij - a_i'j)(a_ij' - a_i'j') = 0`.
pub fn is_simplex(m: &SimplexMatrix) -> Verdict<QuadWitness> {
    let n = m.ncols();
    for i in 0..m.nrows() {
        for i2 in (i + 1)..m.nrows() {
            let d: Vec<AlgebraElement> = (0..n).map(|j| m.entry(i, j) - m.entry(i2, j)).collect();
            for j in 0..n {
                for j2 in j..n {
                    let value = &d[j] * &d[j2];
                    if !value.is_zero() {
                        return Verdict { witness: Some(QuadWitness { i, i2, j, j2, value }) };
                    }
                }
            }
        }
    }
    Verdict { witness: None }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtildeVerdict {
    /// First failure of `a_ij a_i'j' + a_i'j a_ij' = 0`.
    pub ggx: Option<QuadWitness>,
    /// First failure of `a_ij a_ij' = 0` (with `i2 == i`).
    pub ffx: Option<QuadWitness>,
    /// 2 is a unit, so the second family follows from the first.
    pub ffx_implied: bool,
}

impl DtildeVerdict {
    pub fn holds(&self) -> bool {
        self.ggx.is_none() && self.ffx.is_none()
    }
}

/// Membership in `D̃(p,n)`; both equation families are always checked.
pub fn in_dtilde(m: &SimplexMatrix) -> DtildeVerdict {
    let n = m.ncols();
    let mut ggx = None;
    let mut ffx = None;
    'outer: for i in 0..m.nrows() {
        for i2 in i..m.nrows() {
            for j in 0..n {
                for j2 in j..n {
                    let value = &(m.entry(i, j) * m.entry(i2, j2)) + &(m.entry(i2, j) * m.entry(i, j2));
                    if !value.is_zero() {
                        ggx = Some(QuadWitness { i, i2, j, j2, value });
                        break 'outer;
                    }
                }
            }
        }
    }
    'outer2: for i in 0..m.nrows() {
        for j in 0..n {
            for j2 in j..n {
                let value = m.entry(i, j) * m.entry(i, j2);
                if !value.is_zero() {
                    ffx = Some(QuadWitness { i, i2: i, j, j2, value });
                    break 'outer2;
                }
            }
        }
    }
    DtildeVerdict { ggx, ffx, ffx_implied: m.codomain().ring().two_invertible() }
}

/// Appends the row `Σ c_i · row_i` to a matrix of `D̃(p,n)`.
pub fn extend_matrix(x: &SimplexMatrix, c: &[AlgebraElement]) -> Result<SimplexMatrix> {
    if c.len() != x.nrows() {
        return Err(Error::ShapeMismatch(format!("{} coefficients for {} rows", c.len(), x.nrows())));
    }
    if c.iter().any(|ci| ci.parent() != x.codomain()) {
        return Err(Error::ParentMismatch);
    }
    let v = in_dtilde(x);
    if let Some(w) = v.ggx.as_ref().or(v.ffx.as_ref()) {
        return Err(Error::NotInDtilde(w.to_string()));
    }
    let new_row: Vec<AlgebraElement> = (0..x.ncols())
        .map(|j| {
            let terms: Vec<AlgebraElement> = c.iter().enumerate().map(|(i, ci)| ci * x.entry(i, j)).collect();
            sum(x.codomain(), &terms)
        })
        .collect();
    let mut rows = x.rows.clone();
    rows.push(new_row);
    let out = SimplexMatrix { codomain: x.codomain.clone(), rows };
    let check = in_dtilde(&out);
    if !check.holds() {
        return Err(Error::VerificationFailed(format!("extended matrix left D~: {:?}", check.ggx.or(check.ffx).map(|w| w.to_string()))));
    }
    Ok(out)
}

pub fn transpose(m: &SimplexMatrix) -> SimplexMatrix {
    let rows = (0..m.ncols()).map(|j| (0..m.nrows()).map(|i| m.entry(i, j).clone()).collect()).collect();
    SimplexMatrix { codomain: m.codomain.clone(), rows }
}

/// `k[X1..Xn]`, the domain whose maps are vectors of `C^n`.
pub fn matrix_domain(ring: RingSpec, n: usize) -> FpAlgebra {
    let names: Vec<String> = (1..=n).map(|j| format!("X{j}")).collect();
    FpAlgebra::free(ring, VarSet::new(names).expect("generated names"))
}

/// The generic matrix of `D̃(p,n)`: entries `a_ij` in `k[a] / (both equation families)`.
pub fn universal_dtilde(ring: RingSpec, p: usize, n: usize) -> Result<SimplexMatrix> {
    if p == 0 || n == 0 {
        return Err(Error::ShapeMismatch("universal matrix needs p, n >= 1".into()));
    }
    let name = |i: usize, j: usize| if p < 10 && n < 10 { format!("a{i}{j}") } else { format!("a{i}c{j}") };
    let names: Vec<String> = (1..=p).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| name(i, j)).collect();
    let varset = VarSet::new(names)?;
    let a = |i: usize, j: usize| Polynomial::variable(&varset, ring, i * n + j);
    let mut rels = Vec::new();
    for i in 0..p {
        for j in 0..n {
            for j2 in j..n {
                rels.push(&a(i, j) * &a(i, j2));
            }
        }
    }
    for i in 0..p {
        for i2 in (i + 1)..p {
            for j in 0..n {
                for j2 in j..n {
                    rels.push(&(&a(i, j) * &a(i2, j2)) + &(&a(i2, j) * &a(i, j2)));
                }
            }
        }
    }
    let strategy = if p == 1 { Strategy::MonomialDeletion } else { Strategy::Groebner(MonomialOrder::DegRevLex) };
    let algebra = make_algebra(ring, varset, rels, strategy)?;
    let rows = (0..p).map(|i| (0..n).map(|j| algebra.generator(i * n + j)).collect()).collect();
    SimplexMatrix::new(&algebra, rows)
}

/// Row `i` as an algebra map `k[X1..Xn] → C`.
pub fn row_map(m: &SimplexMatrix, i: usize) -> AlgebraMap {
    let dom = matrix_domain(m.codomain().ring(), m.ncols());
    make_map(&dom, m.codomain(), m.row(i).to_vec()).expect("free domain")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::universal_simplex;
    use crate::neighbour::is_neighbour;

    fn weil(ring: RingSpec, rels: &[&str]) -> FpAlgebra {
        FpAlgebra::presented(ring, &["e1", "e2"], rels, Strategy::MonomialDeletion).unwrap()
    }

    #[test]
    fn simplex_checks() {
        let c = weil(RingSpec::Rationals, &["e1^2", "e2^2"]);
        let one_row = SimplexMatrix::from_texts(&c, &[&["e1", "e2 + 4"]]).unwrap();
        assert!(is_simplex(&one_row).holds());
        let m = SimplexMatrix::from_texts(&c, &[&["e1", "e2"], &["0", "0"]]).unwrap();
        let w = is_simplex(&m).witness.unwrap();
        assert_eq!((w.i, w.i2, w.j, w.j2, w.value.to_string()), (0, 1, 0, 1, "e1*e2".into()));

        let b = matrix_domain(RingSpec::Rationals, 2);
        let us = universal_simplex(&b, 2).unwrap();
        let rows: Vec<Vec<AlgebraElement>> = us.vertices.iter().map(|v| v.images().to_vec()).collect();
        let m = SimplexMatrix::new(&us.algebra, rows).unwrap();
        assert!(is_simplex(&m).holds());
        for r in 0..3 {
            for s in 0..3 {
                assert!(is_neighbour(&us.vertices[r], &us.vertices[s]).unwrap().holds());
            }
        }
    }

    #[test]
    fn dtilde_membership() {
        let c = weil(RingSpec::Rationals, &["e1^2", "e2^2"]);
        let m = SimplexMatrix::from_texts(&c, &[&["e1", "0"], &["0", "e2"]]).unwrap();
        let v = in_dtilde(&m);
        assert!(!v.holds());
        let w = v.ggx.unwrap();
        assert_eq!((w.i, w.i2, w.j, w.j2, w.value.to_string()), (0, 1, 0, 1, "e1*e2".into()));
        assert!(v.ffx.is_none());
        assert!(v.ffx_implied);
        assert!(!is_simplex(&m.with_zero_row()).holds());

        let sq0 = weil(RingSpec::Rationals, &["e1^2", "e1*e2", "e2^2"]);
        assert!(in_dtilde(&SimplexMatrix::from_texts(&sq0, &[&["e1", "2*e2", "e1 - e2"]]).unwrap()).holds());
        let zero = SimplexMatrix::from_texts(&c, &[&["0", "0"], &["0", "0"]]).unwrap();
        assert!(in_dtilde(&zero).holds());
        assert!(!in_dtilde(&zero).ffx_implied || c.ring().two_invertible());
    }

    #[test]
    fn ffx_is_independent_in_characteristic_two() {
        // single row (e1, e2) over Z/2 with e_i^2 = 0: ggx holds (2·e1e2 = 0), ffx fails
        let c = weil(RingSpec::Modular(2), &["e1^2", "e2^2"]);
        let m = SimplexMatrix::from_texts(&c, &[&["e1", "e2"]]).unwrap();
        let v = in_dtilde(&m);
        assert!(v.ggx.is_none());
        assert!(v.ffx.is_some());
        assert!(!v.ffx_implied);
        assert!(!v.holds());
        assert!(!is_simplex(&m.with_zero_row()).holds());
    }

    #[test]
    fn determinant_in_universal_dtilde() {
        let u = universal_dtilde(RingSpec::Rationals, 2, 2).unwrap();
        let (a11, a12, a21, a22) = (u.entry(0, 0), u.entry(0, 1), u.entry(1, 0), u.entry(1, 1));
        let det = &(a11 * a22) - &(a12 * a21);
        let twice = &(a11 * a22) * &u.codomain().from_i64(2);
        assert!((&det - &twice).is_zero());
        assert!(!(a11 * a22).is_zero());
        assert!(in_dtilde(&u).holds());
        assert!(in_dtilde(&transpose(&u)).holds());
        assert!(is_simplex(&u.with_zero_row()).holds());
        assert!(matches!(universal_dtilde(RingSpec::Integers, 2, 2), Err(Error::NonFieldCoefficients(_))));
        assert!(in_dtilde(&universal_dtilde(RingSpec::Integers, 1, 3).unwrap()).holds());
    }

    #[test]
    fn extension_and_transposition() {
        let sq0 = weil(RingSpec::Rationals, &["e1^2", "e1*e2", "e2^2"]);
        let x = SimplexMatrix::from_texts(&sq0, &[&["e1", "e2"], &["e2", "3*e1"]]).unwrap();
        let zeros = vec![sq0.zero(), sq0.zero()];
        let ext = extend_matrix(&x, &zeros).unwrap();
        assert_eq!(ext.nrows(), 3);
        assert!(ext.row(2).iter().all(AlgebraElement::is_zero));
        let unit = vec![sq0.zero(), sq0.one()];
        let ext = extend_matrix(&x, &unit).unwrap();
        assert_eq!(ext.row(2), x.row(1));
        let c = weil(RingSpec::Rationals, &["e1^2", "e2^2"]);
        let bad = SimplexMatrix::from_texts(&c, &[&["e1", "e2"]]).unwrap();
        assert!(matches!(extend_matrix(&bad, &[c.one()]), Err(Error::NotInDtilde(_))));
        assert!(matches!(extend_matrix(&x, &[sq0.one()]), Err(Error::ShapeMismatch(_))));

        assert_eq!(transpose(&transpose(&x)), x);
        let row = SimplexMatrix::from_texts(&sq0, &[&["e1", "e2", "e1 + e2"]]).unwrap();
        let col = transpose(&row);
        assert_eq!((col.nrows(), col.ncols()), (3, 1));
        assert!(in_dtilde(&row).holds() && in_dtilde(&col).holds());
        // an element with nonzero square breaks both shapes alike
        let c1 = FpAlgebra::presented(RingSpec::Rationals, &["e1", "e2"], &["e1^3", "e2^2"], Strategy::MonomialDeletion).unwrap();
        let r = SimplexMatrix::from_texts(&c1, &[&["e1", "e2"]]).unwrap();
        assert_eq!(in_dtilde(&r).holds(), in_dtilde(&transpose(&r)).holds());
    }
}
