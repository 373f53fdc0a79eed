//! Witness minimization: delete rows/columns (or generators) while a failure persists.
//! Candidates are tried last first, and passes repeat until nothing more can go.

use crate::algebra::{make_map, AlgebraMap, FpAlgebra};
use crate::neighbour::SimplexMatrix;
use crate::poly::VarSet;

pub fn shrink_matrix<F>(m: &SimplexMatrix, fails: F) -> SimplexMatrix
where
    F: Fn(&SimplexMatrix) -> bool,
{
    let mut cur = m.clone();
    loop {
        let mut changed = false;
        for i in (0..cur.nrows()).rev() {
            if let Some(c) = cur.without_row(i).filter(|c| fails(c)) {
                cur = c;
                changed = true;
            }
        }
        for j in (0..cur.ncols()).rev() {
            if let Some(c) = cur.without_col(j).filter(|c| fails(c)) {
                cur = c;
                changed = true;
            }
        }
        if !changed {
            return cur;
        }
    }
}

/// `f, g` restricted to the generators in `keep`; only for free domains.
pub fn restrict_pair(f: &AlgebraMap, g: &AlgebraMap, keep: &[usize]) -> Option<(AlgebraMap, AlgebraMap)> {
    let dom = f.domain();
    if !dom.is_free() || keep.is_empty() {
        return None;
    }
    let varset = VarSet::new(keep.iter().map(|&i| dom.varset().name(i).to_string())).ok()?;
    let sub = FpAlgebra::free(dom.ring(), varset);
    let pick = |h: &AlgebraMap| make_map(&sub, h.codomain(), keep.iter().map(|&i| h.image(i).clone()).collect()).ok();
    Some((pick(f)?, pick(g)?))
}

pub fn shrink_pair<F>(f: &AlgebraMap, g: &AlgebraMap, fails: F) -> (AlgebraMap, AlgebraMap)
where
    F: Fn(&AlgebraMap, &AlgebraMap) -> bool,
{
    let (mut f, mut g) = (f.clone(), g.clone());
    loop {
        let mut changed = false;
        for i in (0..f.domain().ngens()).rev() {
            let keep: Vec<usize> = (0..f.domain().ngens()).filter(|&k| k != i).collect();
            if let Some((f2, g2)) = restrict_pair(&f, &g, &keep).filter(|(a, b)| fails(a, b)) {
                f = f2;
                g = g2;
                changed = true;
            }
        }
        if !changed {
            return (f, g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Strategy;
    use crate::arith::RingSpec;
    use crate::neighbour::{is_neighbour, is_simplex};

    #[test]
    fn shrinks_to_the_obstruction() {
        let c = FpAlgebra::presented(RingSpec::Rationals, &["e1", "e2"], &["e1^2", "e2^2"], Strategy::MonomialDeletion).unwrap();
        let m = SimplexMatrix::from_texts(&c, &[&["e1", "0", "e2"], &["0", "0", "0"], &["0", "e1", "0"]]).unwrap();
        let small = shrink_matrix(&m, |x| !is_simplex(x).holds());
        assert_eq!(small.to_string(), "e1, e2\n0, 0");

        let dom = FpAlgebra::free_on(RingSpec::Rationals, &["X1", "X2", "X3"]).unwrap();
        let f = AlgebraMap::parse(&dom, &c, &["e1", "0", "e2"]).unwrap();
        let g = AlgebraMap::parse(&dom, &c, &["0", "0", "0"]).unwrap();
        let (f, g) = shrink_pair(&f, &g, |a, b| !is_neighbour(a, b).unwrap().holds());
        assert_eq!(f.to_string(), "{X1 -> e1, X3 -> e2}");
        assert_eq!(g.domain().ngens(), 2);
    }
}
