//! Finitely presented algebras `k[X]/I`, algebra maps given by generator
//! images, tensor products, quotients and the diagonal constructions.
//!
//! Elements are always stored in normal form, so equality of elements is
//! equality of representatives. The normal-form engine is either deletion
//! modulo a monomial ideal (any coefficient ring) or a reduced Groebner basis
//! (field coefficients only).

mod presentation;
mod universal;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::{Coefficient, RingSpec};
use crate::error::{Error, Result};
use crate::ideal::{buchberger_with_bound, monomial_reduce, GroebnerBasis, Ideal, DEFAULT_DEGREE_BOUND};
use crate::poly::{parse_poly, Monomial, MonomialOrder, Polynomial, VarSet};

pub use presentation::{format_presentation, parse_map, parse_presentation, parse_presentation_with};
pub use universal::{
    diagonal_ideal, multi_diagonal_ideal, multiplication_map, neighbourhood_of_diagonal, pairing_map,
    universal_simplex, Coordinates, UniversalSimplex,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    MonomialDeletion,
    Groebner(MonomialOrder),
}

impl Strategy {
    fn order(&self) -> Option<MonomialOrder> {
        match self {
            Strategy::MonomialDeletion => None,
            Strategy::Groebner(o) => Some(*o),
        }
    }
}

#[derive(Debug)]
enum Engine {
    Monomial(Vec<Monomial>),
    Groebner(GroebnerBasis),
}

#[derive(Debug)]
struct Inner {
    ring: RingSpec,
    varset: VarSet,
    relations: Ideal,
    strategy: Strategy,
    engine: Engine,
    degree_bound: u32,
}

/// `k[X_1..X_n] / (relations)` together with its normal-form engine.
#[derive(Clone, Debug)]
pub struct FpAlgebra(Arc<Inner>);

impl PartialEq for FpAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ring == other.0.ring
                && self.0.varset == other.0.varset
                && self.canonical_relations() == other.canonical_relations())
    }
}

impl Eq for FpAlgebra {}

fn minimize_monomials(mut monos: Vec<Monomial>) -> Vec<Monomial> {
    monos.sort_by(|a, b| MonomialOrder::DegRevLex.compare(a, b).then_with(|| a.cmp(b)));
    monos.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in monos {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Builds a presented algebra with the default Groebner degree bound.
pub fn make_algebra(ring: RingSpec, varset: VarSet, relations: Vec<Polynomial>, strategy: Strategy) -> Result<FpAlgebra> {
    FpAlgebra::with_degree_bound(ring, varset, relations, strategy, DEFAULT_DEGREE_BOUND)
}

impl FpAlgebra {
    pub fn with_degree_bound(
        ring: RingSpec,
        varset: VarSet,
        relations: Vec<Polynomial>,
        strategy: Strategy,
        degree_bound: u32,
    ) -> Result<FpAlgebra> {
        let relations = Ideal::new(&varset, ring, relations)?;
        let engine = match strategy {
            Strategy::MonomialDeletion => {
                let monos = relations
                    .generators()
                    .iter()
                    .map(|g| g.as_monomial().cloned().ok_or_else(|| Error::NonMonomialRelations(g.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                Engine::Monomial(minimize_monomials(monos))
            }
            Strategy::Groebner(order) => {
                if !ring.is_field() {
                    return Err(Error::NonFieldCoefficients(ring.to_string()));
                }
                Engine::Groebner(buchberger_with_bound(&relations, order, degree_bound)?)
            }
        };
        let alg = FpAlgebra(Arc::new(Inner { ring, varset, relations, strategy, engine, degree_bound }));
        for g in alg.0.relations.generators() {
            if !alg.reduce(g)?.is_zero() {
                return Err(Error::VerificationFailed(format!("relation {g} does not reduce to zero")));
            }
        }
        Ok(alg)
    }

    /// The polynomial algebra on `varset`.
    pub fn free(ring: RingSpec, varset: VarSet) -> FpAlgebra {
        make_algebra(ring, varset, Vec::new(), Strategy::MonomialDeletion).expect("free algebra")
    }

    /// `k[names]` for freshly named variables.
    pub fn free_on(ring: RingSpec, names: &[&str]) -> Result<FpAlgebra> {
        Ok(Self::free(ring, VarSet::new(names.iter().copied())?))
    }

    /// Parses relation texts over a fresh variable set.
    pub fn presented(ring: RingSpec, names: &[&str], relations: &[&str], strategy: Strategy) -> Result<FpAlgebra> {
        let varset = VarSet::new(names.iter().copied())?;
        let rels = relations.iter().map(|r| parse_poly(r, &varset, ring)).collect::<Result<Vec<_>>>()?;
        make_algebra(ring, varset, rels, strategy)
    }

    pub fn ring(&self) -> RingSpec {
        self.0.ring
    }

    pub fn varset(&self) -> &VarSet {
        &self.0.varset
    }

    pub fn ngens(&self) -> usize {
        self.0.varset.len()
    }

    pub fn relations(&self) -> &Ideal {
        &self.0.relations
    }

    pub fn strategy(&self) -> Strategy {
        self.0.strategy
    }

    pub fn degree_bound(&self) -> u32 {
        self.0.degree_bound
    }

    /// No relations: a polynomial algebra.
    pub fn is_free(&self) -> bool {
        self.0.relations.generators().is_empty()
    }

    /// Relations in canonical form (minimal monomials or reduced basis).
    pub fn canonical_relations(&self) -> (Vec<Polynomial>, Option<MonomialOrder>) {
        match &self.0.engine {
            Engine::Monomial(monos) => (
                monos.iter().map(|m| Polynomial::monomial(&self.0.varset, self.0.ring, m.clone())).collect(),
                None,
            ),
            Engine::Groebner(gb) => {
                let monomial = gb.basis().iter().all(|p| p.num_terms() == 1);
                (gb.basis().to_vec(), if monomial { None } else { Some(gb.order()) })
            }
        }
    }

    pub fn groebner_basis(&self) -> Option<&GroebnerBasis> {
        match &self.0.engine {
            Engine::Groebner(gb) => Some(gb),
            Engine::Monomial(_) => None,
        }
    }

    /// Normal form of a polynomial over this algebra's variables.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.varset() != &self.0.varset {
            return Err(Error::VarSetMismatch);
        }
        if p.ring() != self.0.ring {
            return Err(Error::RingMismatch(p.ring().to_string(), self.0.ring.to_string()));
        }
        match &self.0.engine {
            Engine::Monomial(monos) => monomial_reduce(p, monos),
            Engine::Groebner(gb) => gb.normal_form(p),
        }
    }

    pub fn element(&self, p: &Polynomial) -> Result<AlgebraElement> {
        Ok(AlgebraElement { parent: self.clone(), rep: self.reduce(p)? })
    }

    pub fn parse(&self, text: &str) -> Result<AlgebraElement> {
        self.element(&parse_poly(text, &self.0.varset, self.0.ring)?)
    }

    pub fn generator(&self, index: usize) -> AlgebraElement {
        self.element(&Polynomial::variable(&self.0.varset, self.0.ring, index)).expect("generator")
    }

    pub fn generators(&self) -> Vec<AlgebraElement> {
        (0..self.ngens()).map(|i| self.generator(i)).collect()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { parent: self.clone(), rep: Polynomial::zero(&self.0.varset, self.0.ring) }
    }

    pub fn one(&self) -> AlgebraElement {
        self.element(&Polynomial::one(&self.0.varset, self.0.ring)).expect("unit")
    }

    pub fn scalar(&self, c: &Coefficient) -> Result<AlgebraElement> {
        if c.ring() != self.0.ring {
            return Err(Error::RingMismatch(c.ring().to_string(), self.0.ring.to_string()));
        }
        self.element(&Polynomial::constant(&self.0.varset, c.clone()))
    }

    pub fn from_i64(&self, n: i64) -> AlgebraElement {
        self.scalar(&self.0.ring.from_i64(n)).expect("integer constant")
    }

    /// Same presentation with a different strategy.
    pub fn with_strategy(&self, strategy: Strategy) -> Result<FpAlgebra> {
        FpAlgebra::with_degree_bound(
            self.0.ring,
            self.0.varset.clone(),
            self.0.relations.generators().to_vec(),
            strategy,
            self.0.degree_bound,
        )
    }

    fn groebner_order(&self) -> MonomialOrder {
        self.0.strategy.order().unwrap_or_default()
    }
}

impl fmt::Display for FpAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.ring, self.0.varset.names().join(", "))?;
        let rels = self.0.relations.generators();
        if !rels.is_empty() {
            let rels: Vec<String> = rels.iter().map(|r| r.to_string()).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

/// An element of a presented algebra, held in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    parent: FpAlgebra,
    rep: Polynomial,
}

impl AlgebraElement {
    pub fn parent(&self) -> &FpAlgebra {
        &self.parent
    }

    pub fn rep(&self) -> &Polynomial {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    fn check(&self, other: &AlgebraElement) -> Result<()> {
        if self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn try_add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        Ok(AlgebraElement { parent: self.parent.clone(), rep: &self.rep + &other.rep })
    }

    pub fn try_sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        Ok(AlgebraElement { parent: self.parent.clone(), rep: &self.rep - &other.rep })
    }

    pub fn try_mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        self.parent.element(&(&self.rep * &other.rep))
    }

    pub fn scale(&self, c: &Coefficient) -> AlgebraElement {
        AlgebraElement { parent: self.parent.clone(), rep: self.rep.scale(c) }
    }

    pub fn pow(&self, exp: u32) -> AlgebraElement {
        let mut acc = self.parent.one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("elements of different algebras")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("elements of different algebras")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_mul(rhs).expect("elements of different algebras")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement { parent: self.parent.clone(), rep: -&self.rep }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// Sum of elements of `parent`; zero for an empty sequence.
pub fn sum<'a, I: IntoIterator<Item = &'a AlgebraElement>>(parent: &FpAlgebra, items: I) -> AlgebraElement {
    items.into_iter().fold(parent.zero(), |acc, x| &acc + x)
}

/// An algebra map, determined by the images of the domain generators.
/// Construction verifies that every domain relation is sent to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    domain: FpAlgebra,
    codomain: FpAlgebra,
    images: Vec<AlgebraElement>,
}

pub fn make_map(domain: &FpAlgebra, codomain: &FpAlgebra, images: Vec<AlgebraElement>) -> Result<AlgebraMap> {
    if images.len() != domain.ngens() {
        return Err(Error::ArityMismatch { expected: domain.ngens(), actual: images.len() });
    }
    if images.iter().any(|x| x.parent() != codomain) {
        return Err(Error::ParentMismatch);
    }
    let reps: Vec<Polynomial> = images.iter().map(|x| x.rep.clone()).collect();
    for rel in domain.relations().generators() {
        let value = substitute_into(rel, &reps, codomain)?;
        if !value.is_zero() {
            return Err(Error::IllDefinedMap(rel.to_string(), value.to_string()));
        }
    }
    Ok(AlgebraMap { domain: domain.clone(), codomain: codomain.clone(), images })
}

fn substitute_into(p: &Polynomial, reps: &[Polynomial], codomain: &FpAlgebra) -> Result<Polynomial> {
    if reps.is_empty() {
        let c = p.as_constant().expect("polynomial without variables is constant");
        return codomain.reduce(&Polynomial::constant(codomain.varset(), c));
    }
    codomain.reduce(&p.substitute(reps)?)
}

impl AlgebraMap {
    /// Images given as polynomial texts over the codomain's variables.
    pub fn parse(domain: &FpAlgebra, codomain: &FpAlgebra, images: &[&str]) -> Result<AlgebraMap> {
        let images = images.iter().map(|t| codomain.parse(t)).collect::<Result<Vec<_>>>()?;
        make_map(domain, codomain, images)
    }

    pub fn identity(algebra: &FpAlgebra) -> AlgebraMap {
        AlgebraMap { domain: algebra.clone(), codomain: algebra.clone(), images: algebra.generators() }
    }

    pub fn domain(&self) -> &FpAlgebra {
        &self.domain
    }

    pub fn codomain(&self) -> &FpAlgebra {
        &self.codomain
    }

    pub fn images(&self) -> &[AlgebraElement] {
        &self.images
    }

    pub fn image(&self, index: usize) -> &AlgebraElement {
        &self.images[index]
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if x.parent() != &self.domain {
            return Err(Error::ParentMismatch);
        }
        self.apply_poly(x.rep())
    }

    /// Image of a polynomial over the domain's variables.
    pub fn apply_poly(&self, p: &Polynomial) -> Result<AlgebraElement> {
        if p.varset() != self.domain.varset() {
            return Err(Error::VarSetMismatch);
        }
        let reps: Vec<Polynomial> = self.images.iter().map(|x| x.rep.clone()).collect();
        Ok(AlgebraElement { parent: self.codomain.clone(), rep: substitute_into(p, &reps, &self.codomain)? })
    }
}

impl fmt::Display for AlgebraMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .domain
            .varset()
            .names()
            .iter()
            .zip(&self.images)
            .map(|(n, x)| format!("{n} -> {x}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `g ∘ f`.
pub fn compose(g: &AlgebraMap, f: &AlgebraMap) -> Result<AlgebraMap> {
    if f.codomain() != g.domain() {
        return Err(Error::CompositionMismatch);
    }
    let images = f.images().iter().map(|x| g.apply(x)).collect::<Result<Vec<_>>>()?;
    Ok(AlgebraMap { domain: f.domain.clone(), codomain: g.codomain.clone(), images })
}

/// A tensor product (coproduct) with its coproduct inclusions.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub algebra: FpAlgebra,
    pub inclusions: Vec<AlgebraMap>,
}

/// Variable name for copy `r` of `name`.
pub fn copy_name(name: &str, r: usize) -> String {
    format!("{name}_{r}")
}

fn has_copy_suffix(name: &str) -> bool {
    match name.rsplit_once('_') {
        Some((head, tail)) => !head.is_empty() && !tail.is_empty() && tail.chars().all(|c| c.is_ascii_digit()),
        None => false,
    }
}

fn combined_strategy(ring: RingSpec, factors: &[&FpAlgebra]) -> Result<Strategy> {
    match factors.iter().find_map(|a| a.strategy().order()) {
        None => Ok(Strategy::MonomialDeletion),
        Some(order) => {
            if !ring.is_field() {
                return Err(Error::NonFieldCoefficients(ring.to_string()));
            }
            Ok(Strategy::Groebner(order))
        }
    }
}

fn tensor_of(factors: &[&FpAlgebra]) -> Result<Tensor> {
    let ring = factors[0].ring();
    if let Some(bad) = factors.iter().find(|a| a.ring() != ring) {
        return Err(Error::RingMismatch(bad.ring().to_string(), ring.to_string()));
    }
    for a in factors {
        if let Some(name) = a.varset().names().iter().find(|n| has_copy_suffix(n)) {
            return Err(Error::NameCollision(name.clone()));
        }
    }
    let names: Vec<String> = factors
        .iter()
        .enumerate()
        .flat_map(|(r, a)| a.varset().names().iter().map(move |n| copy_name(n, r)))
        .collect();
    let varset = VarSet::new(names)?;
    let mut offsets = Vec::with_capacity(factors.len());
    let mut offset = 0;
    for a in factors {
        offsets.push(offset);
        offset += a.ngens();
    }
    let mut relations = Vec::new();
    for (a, &off) in factors.iter().zip(&offsets) {
        let index_map: Vec<usize> = (0..a.ngens()).map(|i| off + i).collect();
        relations.extend(a.relations().generators().iter().map(|g| g.rename(&varset, &index_map)));
    }
    let strategy = combined_strategy(ring, factors)?;
    let bound = factors.iter().map(|a| a.degree_bound()).max().unwrap_or(DEFAULT_DEGREE_BOUND);
    let algebra = FpAlgebra::with_degree_bound(ring, varset, relations, strategy, bound)?;
    let inclusions = factors
        .iter()
        .zip(&offsets)
        .map(|(a, &off)| AlgebraMap {
            domain: (*a).clone(),
            codomain: algebra.clone(),
            images: (0..a.ngens()).map(|i| algebra.generator(off + i)).collect(),
        })
        .collect();
    Ok(Tensor { algebra, inclusions })
}

/// `A ⊗ B` with variables renamed `X_0` (from `A`) and `X_1` (from `B`).
pub fn tensor(a: &FpAlgebra, b: &FpAlgebra) -> Result<Tensor> {
    tensor_of(&[a, b])
}

/// `B ⊗ ... ⊗ B` (`copies` factors), variables renamed `X_r`.
pub fn tensor_power(b: &FpAlgebra, copies: usize) -> Result<Tensor> {
    let factors: Vec<&FpAlgebra> = std::iter::repeat(b).take(copies.max(1)).collect();
    tensor_of(&factors)
}

/// `A ⊗ k[names]` without renaming `A`'s variables; returns the algebra and the inclusion of `A`.
pub fn adjoin_variables(a: &FpAlgebra, names: &[String]) -> Result<(FpAlgebra, AlgebraMap)> {
    if let Some(n) = names.iter().find(|n| a.varset().index_of(n).is_some()) {
        return Err(Error::NameCollision(n.clone()));
    }
    let mut all = a.varset().names().to_vec();
    all.extend(names.iter().cloned());
    let varset = VarSet::new(all)?;
    let index_map: Vec<usize> = (0..a.ngens()).collect();
    let rels = a.relations().generators().iter().map(|g| g.rename(&varset, &index_map)).collect();
    let algebra = FpAlgebra::with_degree_bound(a.ring(), varset, rels, a.strategy(), a.degree_bound())?;
    let inclusion = AlgebraMap {
        domain: a.clone(),
        codomain: algebra.clone(),
        images: (0..a.ngens()).map(|i| algebra.generator(i)).collect(),
    };
    Ok((algebra, inclusion))
}

/// `A / (extra)` with its projection. Stays on monomial deletion when possible.
pub fn quotient(a: &FpAlgebra, extra: Vec<Polynomial>) -> Result<(FpAlgebra, AlgebraMap)> {
    let mut rels = a.relations().generators().to_vec();
    let monomial = a.strategy() == Strategy::MonomialDeletion && extra.iter().all(|p| p.is_zero() || p.as_monomial().is_some());
    rels.extend(extra);
    let strategy = if monomial { Strategy::MonomialDeletion } else { Strategy::Groebner(a.groebner_order()) };
    let algebra = FpAlgebra::with_degree_bound(a.ring(), a.varset().clone(), rels, strategy, a.degree_bound())?;
    let projection = AlgebraMap {
        domain: a.clone(),
        codomain: algebra.clone(),
        images: algebra.generators(),
    };
    Ok((algebra, projection))
}

/// The map `A ⊗ B → C` restricting to `f` and `g` on the two factors.
pub fn copair(t: &Tensor, maps: &[&AlgebraMap]) -> Result<AlgebraMap> {
    if maps.len() != t.inclusions.len() {
        return Err(Error::ArityMismatch { expected: t.inclusions.len(), actual: maps.len() });
    }
    let codomain = maps[0].codomain().clone();
    let mut images = Vec::new();
    for (m, inc) in maps.iter().zip(&t.inclusions) {
        if m.domain() != inc.domain() || m.codomain() != &codomain {
            return Err(Error::DomainMismatch);
        }
        images.extend(m.images().iter().cloned());
    }
    make_map(&t.algebra, &codomain, images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RingSpec {
        RingSpec::Rationals
    }

    fn weil(ring: RingSpec, rels: &[&str]) -> FpAlgebra {
        FpAlgebra::presented(ring, &["e1", "e2"], rels, Strategy::MonomialDeletion).unwrap()
    }

    #[test]
    fn construction_rules() {
        let sq0 = weil(q(), &["e1^2", "e1*e2", "e2^2"]);
        assert_eq!(sq0.parse("e1 + e1*e2 + 3").unwrap().to_string(), "e1 + 3");
        let free = FpAlgebra::free_on(q(), &["X1", "X2", "X3"]).unwrap();
        assert!(free.is_free());
        let w = weil(RingSpec::Modular(2), &["e1^2", "e2^2"]);
        assert_eq!(w.parse("e1*e2 + e1^2").unwrap().to_string(), "e1*e2");
        let err = FpAlgebra::presented(q(), &["X"], &["X^2 - 1"], Strategy::MonomialDeletion);
        assert!(matches!(err, Err(Error::NonMonomialRelations(_))));
        let err = FpAlgebra::presented(RingSpec::Integers, &["X"], &["X^2 - 1"], Strategy::Groebner(MonomialOrder::Lex));
        assert!(matches!(err, Err(Error::NonFieldCoefficients(_))));
        let err = FpAlgebra::presented(RingSpec::Integers, &["X"], &["2*X"], Strategy::MonomialDeletion);
        assert!(matches!(err, Err(Error::NonMonomialRelations(_))));
    }

    #[test]
    fn map_well_definedness() {
        let dual = FpAlgebra::presented(q(), &["X"], &["X^2"], Strategy::MonomialDeletion).unwrap();
        let sq0 = weil(q(), &["e1^2", "e1*e2", "e2^2"]);
        assert!(AlgebraMap::parse(&dual, &sq0, &["e1"]).is_ok());
        let k = FpAlgebra::free(q(), VarSet::empty());
        let err = AlgebraMap::parse(&dual, &k, &["1"]).unwrap_err();
        assert_eq!(err, Error::IllDefinedMap("X^2".into(), "1".into()));
        let free = FpAlgebra::free_on(q(), &["X1", "X2"]).unwrap();
        assert!(AlgebraMap::parse(&free, &sq0, &["e1 + 5", "e2*e1 - 1/2"]).is_ok());
        assert!(matches!(AlgebraMap::parse(&free, &sq0, &["e1"]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn apply_and_compose() {
        let free = FpAlgebra::free_on(q(), &["X1", "X2"]).unwrap();
        let c = weil(q(), &["e1^2", "e2^2"]);
        let a = AlgebraMap::parse(&free, &c, &["e1", "e2"]).unwrap();
        let x = free.parse("X1*X2").unwrap();
        assert_eq!(a.apply(&x).unwrap().to_string(), "e1*e2");
        assert_eq!(AlgebraMap::identity(&free).apply(&x).unwrap(), x);
        assert!(a.apply(&free.one()).unwrap().is_one());
        assert_eq!(a.apply(&c.one()), Err(Error::ParentMismatch));
        assert_eq!(compose(&a, &AlgebraMap::identity(&free)).unwrap(), a);
        assert_eq!(compose(&AlgebraMap::identity(&c), &a).unwrap(), a);
        assert_eq!(compose(&a, &a), Err(Error::CompositionMismatch));
    }

    #[test]
    fn tensor_products() {
        let b = FpAlgebra::free_on(q(), &["X"]).unwrap();
        let t = tensor(&b, &b).unwrap();
        assert_eq!(t.algebra.varset().names(), &["X_0", "X_1"]);
        assert!(t.algebra.is_free());
        assert_eq!(t.inclusions[0].image(0).to_string(), "X_0");
        assert_eq!(t.inclusions[1].image(0).to_string(), "X_1");

        let dual = FpAlgebra::presented(q(), &["e"], &["e^2"], Strategy::MonomialDeletion).unwrap();
        let t = tensor(&dual, &dual).unwrap();
        let rels: Vec<String> = t.algebra.relations().generators().iter().map(|r| r.to_string()).collect();
        assert_eq!(rels, ["e_0^2", "e_1^2"]);
        assert_eq!(t.algebra.strategy(), Strategy::MonomialDeletion);

        // A ⊗ k ≅ A
        let k = FpAlgebra::free(q(), VarSet::empty());
        let t = tensor(&dual, &k).unwrap();
        let back = AlgebraMap::parse(&t.algebra, &dual, &["e"]).unwrap();
        assert_eq!(compose(&back, &t.inclusions[0]).unwrap(), AlgebraMap::identity(&dual));
        assert_eq!(compose(&t.inclusions[0], &back).unwrap(), AlgebraMap::identity(&t.algebra));

        let bad = FpAlgebra::free_on(q(), &["X_1"]).unwrap();
        assert_eq!(tensor(&bad, &b).unwrap_err(), Error::NameCollision("X_1".into()));
        let z = FpAlgebra::free_on(RingSpec::Integers, &["X"]).unwrap();
        assert!(matches!(tensor(&b, &z), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn coproduct_property() {
        let a = FpAlgebra::presented(q(), &["x"], &["x^3"], Strategy::MonomialDeletion).unwrap();
        let b = FpAlgebra::free_on(q(), &["y", "z"]).unwrap();
        let c = weil(q(), &["e1^2", "e2^2"]);
        let f = AlgebraMap::parse(&a, &c, &["e1 + e2"]).unwrap();
        let g = AlgebraMap::parse(&b, &c, &["2 + e1", "e1*e2"]).unwrap();
        let t = tensor(&a, &b).unwrap();
        let h = copair(&t, &[&f, &g]).unwrap();
        assert_eq!(compose(&h, &t.inclusions[0]).unwrap(), f);
        assert_eq!(compose(&h, &t.inclusions[1]).unwrap(), g);
    }

    #[test]
    fn quotients_and_adjoining() {
        let b = FpAlgebra::free_on(q(), &["X", "Y"]).unwrap();
        let rel = parse_poly("X^2 - Y", b.varset(), q()).unwrap();
        let (qa, pi) = quotient(&b, vec![rel]).unwrap();
        assert!(matches!(qa.strategy(), Strategy::Groebner(_)));
        assert_eq!(pi.apply(&b.parse("X^2").unwrap()).unwrap(), qa.parse("Y").unwrap());
        let (bt, inc) = adjoin_variables(&qa, &["t".to_string()]).unwrap();
        assert_eq!(bt.ngens(), 3);
        assert_eq!(inc.apply(&qa.parse("X^2").unwrap()).unwrap(), bt.parse("Y").unwrap());
        assert!(adjoin_variables(&qa, &["X".to_string()]).is_err());
    }
}
