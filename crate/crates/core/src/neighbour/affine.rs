//! Affine combinations of mutually neighbouring maps.

use super::{is_neighbour, is_simplex, SimplexMatrix};
use crate::algebra::{adjoin_variables, compose, make_map, sum, universal_simplex, AlgebraElement, AlgebraMap, FpAlgebra, UniversalSimplex};
use crate::error::{Error, Result};

/// Coefficients `t_0..t_p` in a codomain algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientVector {
    codomain: FpAlgebra,
    entries: Vec<AlgebraElement>,
}

impl CoefficientVector {
    pub fn new(codomain: &FpAlgebra, entries: Vec<AlgebraElement>) -> Result<Self> {
        if entries.iter().any(|t| t.parent() != codomain) {
            return Err(Error::ParentMismatch);
        }
        Ok(CoefficientVector { codomain: codomain.clone(), entries })
    }

    pub fn parse(codomain: &FpAlgebra, texts: &[&str]) -> Result<Self> {
        let entries = texts.iter().map(|t| codomain.parse(t)).collect::<Result<Vec<_>>>()?;
        Self::new(codomain, entries)
    }

    pub fn codomain(&self) -> &FpAlgebra {
        &self.codomain
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> AlgebraElement {
        sum(&self.codomain, &self.entries)
    }

    pub fn is_affine(&self) -> bool {
        self.total().is_one()
    }

    fn require_affine(&self) -> Result<()> {
        if self.is_affine() {
            Ok(())
        } else {
            Err(Error::CoefficientsNotAffine(self.total().to_string()))
        }
    }
}

/// `x ↦ Σ t_i f_i(x)`; no neighbour or affinity checks.
pub fn linear_combination_apply(maps: &[AlgebraMap], t: &CoefficientVector, x: &AlgebraElement) -> Result<AlgebraElement> {
    if maps.len() != t.len() {
        return Err(Error::ShapeMismatch(format!("{} maps, {} coefficients", maps.len(), t.len())));
    }
    let values = maps
        .iter()
        .zip(t.entries())
        .map(|(f, ti)| Ok(ti * &f.apply(x)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(sum(t.codomain(), &values))
}

/// `Σ t_i f_i` as an algebra map. The maps must be mutual neighbours and
/// `Σ t_i = 1`; the result is checked against the domain relations.
pub fn affine_combination(maps: &[AlgebraMap], t: &CoefficientVector) -> Result<AlgebraMap> {
    let first = maps.first().ok_or_else(|| Error::ShapeMismatch("no maps to combine".into()))?;
    if maps.iter().any(|f| f.domain() != first.domain() || f.codomain() != first.codomain()) {
        return Err(Error::DomainMismatch);
    }
    if t.codomain() != first.codomain() {
        return Err(Error::DomainMismatch);
    }
    if maps.len() != t.len() {
        return Err(Error::ShapeMismatch(format!("{} maps, {} coefficients", maps.len(), t.len())));
    }
    t.require_affine()?;
    for i in 0..maps.len() {
        for j in (i + 1)..maps.len() {
            if let Some(w) = is_neighbour(&maps[i], &maps[j])?.witness {
                return Err(Error::NotNeighbours { i, j, witness: w.to_string() });
            }
        }
    }
    let images = (0..first.domain().ngens())
        .map(|k| {
            let terms: Vec<AlgebraElement> = maps.iter().zip(t.entries()).map(|(f, ti)| ti * f.image(k)).collect();
            sum(t.codomain(), &terms)
        })
        .collect();
    make_map(first.domain(), first.codomain(), images)
}

/// `Σ t_i · row_i` for the rows of an infinitesimal simplex.
pub fn affine_combination_rows(m: &SimplexMatrix, t: &CoefficientVector) -> Result<Vec<AlgebraElement>> {
    if t.codomain() != m.codomain() {
        return Err(Error::DomainMismatch);
    }
    if t.len() != m.nrows() {
        return Err(Error::ShapeMismatch(format!("{} rows, {} coefficients", m.nrows(), t.len())));
    }
    t.require_affine()?;
    if let Some(w) = is_simplex(m).witness {
        return Err(Error::NotNeighbours { i: w.i, j: w.i2, witness: w.value.to_string() });
    }
    Ok((0..m.ncols())
        .map(|j| {
            let terms: Vec<AlgebraElement> = t.entries().iter().enumerate().map(|(i, ti)| ti * m.entry(i, j)).collect();
            sum(m.codomain(), &terms)
        })
        .collect())
}

/// The generic affine combination of the universal vertices.
#[derive(Clone, Debug)]
pub struct CanonicalMap {
    pub simplex: UniversalSimplex,
    /// The universal algebra with parameters `t1..tp` adjoined.
    pub parameters: FpAlgebra,
    /// The vertices `v_r` composed into `parameters`.
    pub vertices: Vec<AlgebraMap>,
    /// `(1 - Σ t_r, t1, ..., tp)`.
    pub coefficients: CoefficientVector,
    /// `B → parameters`, `X ↦ (1 - Σ t_r) v_0(X) + Σ t_r v_r(X)`.
    pub map: AlgebraMap,
}

pub fn canonical_map(b: &FpAlgebra, p: usize) -> Result<CanonicalMap> {
    let simplex = universal_simplex(b, p)?;
    let names: Vec<String> = (1..=p).map(|r| format!("t{r}")).collect();
    let (parameters, inclusion) = adjoin_variables(&simplex.algebra, &names)?;
    let vertices = simplex
        .vertices
        .iter()
        .map(|v| compose(&inclusion, v))
        .collect::<Result<Vec<_>>>()?;
    let base = simplex.algebra.ngens();
    let ts: Vec<AlgebraElement> = (0..p).map(|r| parameters.generator(base + r)).collect();
    let t0 = &parameters.one() - &sum(&parameters, &ts);
    let mut entries = vec![t0];
    entries.extend(ts);
    let coefficients = CoefficientVector::new(&parameters, entries)?;
    let map = affine_combination(&vertices, &coefficients)?;
    Ok(CanonicalMap { simplex, parameters, vertices, coefficients, map })
}
