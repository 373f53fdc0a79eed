//! The diagonal ideals of `B ⊗ B` and of `B^{⊗(p+1)}`, and the universal
//! algebras classifying neighbour pairs and infinitesimal `p`-simplices.
//!
//! For a presented `B = k[X]/I` the kernel of multiplication is generated by
//! the differences `X_j_1 - X_j_0` modulo the relations of both factors: the
//! presentation `k[X] → B` is surjective, so generator differences still
//! generate. The ideals returned here therefore contain the renamed relations
//! together with the difference products.

use super::{
    compose, make_map, quotient, tensor, tensor_power, AlgebraElement, AlgebraMap, FpAlgebra, Strategy, Tensor,
};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, Polynomial, VarSet};

fn diff(t: &FpAlgebra, n: usize, r: usize, s: usize, j: usize) -> Polynomial {
    let ring = t.ring();
    &Polynomial::variable(t.varset(), ring, s * n + j) - &Polynomial::variable(t.varset(), ring, r * n + j)
}

fn with_relations(t: &FpAlgebra, gens: Vec<Polynomial>) -> Result<Ideal> {
    let mut all = t.relations().generators().to_vec();
    all.extend(gens);
    Ideal::new(t.varset(), t.ring(), all)
}

/// `J` (power 1) or `J²` (power 2) inside `B ⊗ B`.
pub fn diagonal_ideal(b: &FpAlgebra, power: u32) -> Result<Ideal> {
    let t = tensor(b, b)?.algebra;
    let n = b.ngens();
    let gens = match power {
        1 => (0..n).map(|j| diff(&t, n, 0, 1, j)).collect(),
        2 => {
            let mut g = Vec::new();
            for i in 0..n {
                for j in i..n {
                    g.push(&diff(&t, n, 0, 1, i) * &diff(&t, n, 0, 1, j));
                }
            }
            g
        }
        other => return Err(Error::InvalidConfig(format!("diagonal ideal power must be 1 or 2, got {other}"))),
    };
    with_relations(&t, gens)
}

/// `Σ_{r<s} J_rs²` inside `B^{⊗(p+1)}`.
pub fn multi_diagonal_ideal(b: &FpAlgebra, p: usize) -> Result<Ideal> {
    if p == 0 {
        return Err(Error::InvalidConfig("simplex dimension must be at least 1".into()));
    }
    let t = tensor_power(b, p + 1)?.algebra;
    let n = b.ngens();
    let mut gens = Vec::new();
    for s in 1..=p {
        for r in 0..s {
            for i in 0..n {
                for j in i..n {
                    gens.push(&diff(&t, n, r, s, i) * &diff(&t, n, r, s, j));
                }
            }
        }
    }
    with_relations(&t, gens)
}

/// `m: B ⊗ B → B`, both copies of each generator going to that generator.
pub fn multiplication_map(b: &FpAlgebra) -> Result<AlgebraMap> {
    let t = tensor(b, b)?;
    let images = b.generators().into_iter().cycle().take(2 * b.ngens()).collect();
    make_map(&t.algebra, b, images)
}

/// `{f, g}: B ⊗ B → C`, `a ⊗ b ↦ f(a)·g(b)`.
pub fn pairing_map(f: &AlgebraMap, g: &AlgebraMap) -> Result<AlgebraMap> {
    if f.domain() != g.domain() || f.codomain() != g.codomain() {
        return Err(Error::DomainMismatch);
    }
    let t = tensor(f.domain(), f.domain())?;
    let images = f.images().iter().chain(g.images()).cloned().collect();
    make_map(&t.algebra, f.codomain(), images)
}

/// How the universal algebra is coordinatised.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coordinates {
    /// Free `B`: base point `X_j_0` and differences `dX_j_r = X_j_r - X_j_0`.
    Difference,
    /// Presented `B`: the tensor-power variables `X_j_r` modulo the ideal.
    Tensor,
}

/// `B^{⊗(p+1)} / J̄⁽²⁾` with its projection and the `p+1` vertex maps `π∘i_r`.
#[derive(Clone, Debug)]
pub struct UniversalSimplex {
    pub base: FpAlgebra,
    pub dimension: usize,
    pub algebra: FpAlgebra,
    pub tensor: Tensor,
    pub projection: AlgebraMap,
    pub vertices: Vec<AlgebraMap>,
    pub coordinates: Coordinates,
}

impl UniversalSimplex {
    /// The unique map out of the universal algebra whose composites with the
    /// vertices are `maps`; fails with `IllDefinedMap` unless `maps` are mutual neighbours.
    pub fn classifying_map(&self, maps: &[&AlgebraMap]) -> Result<AlgebraMap> {
        if maps.len() != self.dimension + 1 {
            return Err(Error::ArityMismatch { expected: self.dimension + 1, actual: maps.len() });
        }
        let codomain = maps[0].codomain();
        if maps.iter().any(|m| m.domain() != &self.base || m.codomain() != codomain) {
            return Err(Error::DomainMismatch);
        }
        let n = self.base.ngens();
        let images: Vec<AlgebraElement> = match self.coordinates {
            Coordinates::Tensor => maps.iter().flat_map(|m| m.images().iter().cloned()).collect(),
            Coordinates::Difference => {
                let mut v: Vec<AlgebraElement> = maps[0].images().to_vec();
                for m in &maps[1..] {
                    v.extend((0..n).map(|j| m.image(j) - maps[0].image(j)));
                }
                v
            }
        };
        make_map(&self.algebra, codomain, images)
    }
}

/// Name of the difference coordinate `X_r - X_0`.
pub fn difference_name(name: &str, r: usize) -> String {
    format!("d{name}_{r}")
}

/// The universal infinitesimal `p`-simplex on `B`.
///
/// Free `B` uses difference coordinates: for `p = 1` the relations are the
/// monomials `d_i d_j`, so this works over any coefficient ring; for `p ≥ 2`
/// the cross relations `d^r_i d^s_j + d^s_i d^r_j` require a field. Presented
/// `B` always goes through a Groebner basis over a field.
pub fn universal_simplex(b: &FpAlgebra, p: usize) -> Result<UniversalSimplex> {
    if p == 0 {
        return Err(Error::InvalidConfig("simplex dimension must be at least 1".into()));
    }
    let tensor = tensor_power(b, p + 1)?;
    let ring = b.ring();
    let n = b.ngens();
    let (algebra, projection, coordinates) = if b.is_free() {
        let mut names: Vec<String> = b.varset().names().iter().map(|x| super::copy_name(x, 0)).collect();
        for r in 1..=p {
            names.extend(b.varset().names().iter().map(|x| difference_name(x, r)));
        }
        let varset = VarSet::new(names)?;
        let var = |k: usize| Polynomial::variable(&varset, ring, k);
        let d = |r: usize, j: usize| var(r * n + j);
        let mut rels = Vec::new();
        for r in 1..=p {
            for i in 0..n {
                for j in i..n {
                    rels.push(&d(r, i) * &d(r, j));
                }
            }
        }
        for s in 2..=p {
            for r in 1..s {
                for i in 0..n {
                    for j in i..n {
                        rels.push(&(&d(r, i) * &d(s, j)) + &(&d(s, i) * &d(r, j)));
                    }
                }
            }
        }
        let strategy = if p == 1 { Strategy::MonomialDeletion } else { Strategy::Groebner(MonomialOrder::DegRevLex) };
        let algebra = FpAlgebra::with_degree_bound(ring, varset.clone(), rels, strategy, b.degree_bound())?;
        let mut images: Vec<AlgebraElement> = (0..n).map(|j| algebra.generator(j)).collect();
        for r in 1..=p {
            images.extend((0..n).map(|j| &algebra.generator(j) + &algebra.generator(r * n + j)));
        }
        let projection = make_map(&tensor.algebra, &algebra, images)?;
        (algebra, projection, Coordinates::Difference)
    } else {
        let ideal = multi_diagonal_ideal(b, p)?;
        let extra = ideal.generators()[tensor.algebra.relations().generators().len()..].to_vec();
        let order = match tensor.algebra.strategy() {
            Strategy::Groebner(o) => o,
            Strategy::MonomialDeletion => MonomialOrder::DegRevLex,
        };
        let groebner = tensor.algebra.with_strategy(Strategy::Groebner(order))?;
        let (algebra, _) = quotient(&groebner, extra)?;
        let projection = make_map(&tensor.algebra, &algebra, algebra.generators())?;
        (algebra, projection, Coordinates::Tensor)
    };
    let vertices = tensor
        .inclusions
        .iter()
        .map(|inc| compose(&projection, inc))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniversalSimplex { base: b.clone(), dimension: p, algebra, tensor, projection, vertices, coordinates })
}

/// `(B ⊗ B)/J²`: the universal neighbour pair.
pub fn neighbourhood_of_diagonal(b: &FpAlgebra) -> Result<UniversalSimplex> {
    universal_simplex(b, 1)
}
