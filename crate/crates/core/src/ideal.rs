//! Ideals and normal forms: deletion modulo monomial ideals, and reduced
//! Groebner bases (Buchberger, normal selection strategy) over fields.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use crate::arith::{Coefficient, RingSpec};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarSet};

/// Default cap on the total degree of Groebner basis elements.
pub const DEFAULT_DEGREE_BOUND: u32 = 24;

/// Finitely generated ideal in a polynomial ring. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    varset: VarSet,
    ring: RingSpec,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(varset: &VarSet, ring: RingSpec, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.varset() != varset {
                return Err(Error::VarSetMismatch);
            }
            if g.ring() != ring {
                return Err(Error::RingMismatch(g.ring().to_string(), ring.to_string()));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { varset: varset.clone(), ring, generators })
    }

    pub fn zero(varset: &VarSet, ring: RingSpec) -> Self {
        Ideal { varset: varset.clone(), ring, generators: Vec::new() }
    }

    pub fn varset(&self) -> &VarSet {
        &self.varset
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Generator monomials, if every generator is a unit multiple of a monomial.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        self.generators.iter().map(|g| g.as_monomial().cloned()).collect()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.varset != other.varset {
            return Err(Error::VarSetMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.varset, self.ring, gens)
    }

    /// Membership test. Monomial ideals work over any ring; otherwise the
    /// coefficients must form a field.
    pub fn contains(&self, p: &Polynomial, order: MonomialOrder) -> Result<bool> {
        if p.varset() != &self.varset {
            return Err(Error::VarSetMismatch);
        }
        if let Some(monos) = self.monomial_generators() {
            return Ok(monomial_reduce(p, &monos)?.is_zero());
        }
        let gb = buchberger(self, order)?;
        Ok(gb.normal_form(p)?.is_zero())
    }
}

/// Deletes every term divisible by one of `gens`: the normal form modulo a monomial ideal.
pub fn monomial_reduce(p: &Polynomial, gens: &[Monomial]) -> Result<Polynomial> {
    if gens.iter().any(|g| g.len() != p.varset().len()) {
        return Err(Error::VarSetMismatch);
    }
    Ok(Polynomial::from_terms(
        p.varset(),
        p.ring(),
        p.terms()
            .filter(|(m, _)| !gens.iter().any(|g| g.divides(m)))
            .map(|(m, c)| (m.clone(), c.clone())),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Keyed {
    order: MonomialOrder,
    mono: Monomial,
}

impl PartialOrd for Keyed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Keyed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.compare(&self.mono, &other.mono)
    }
}

/// Monic basis element split into leading monomial and the remaining terms.
#[derive(Clone, Debug)]
struct Element {
    lead: Monomial,
    tail: Vec<(Monomial, Coefficient)>,
}

impl Element {
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> Option<Element> {
        let (lm, lc) = p.leading_term(order)?;
        let inv = lc.invert().expect("field coefficients");
        let lead = lm.clone();
        let tail = p
            .sorted_terms(order)
            .into_iter()
            .skip(1)
            .map(|(m, c)| (m.clone(), c * &inv))
            .collect();
        Some(Element { lead, tail })
    }

    fn to_poly(&self, varset: &VarSet, ring: RingSpec) -> Polynomial {
        Polynomial::from_terms(
            varset,
            ring,
            std::iter::once((self.lead.clone(), ring.one())).chain(self.tail.iter().cloned()),
        )
    }
}

/// Full reduction of `work` by `basis`; returns the remainder (not normalised).
fn reduce(
    mut work: BTreeMap<Keyed, Coefficient>,
    basis: &[Element],
    skip: Option<usize>,
) -> Vec<(Monomial, Coefficient)> {
    let mut rem = Vec::new();
    while let Some((key, c)) = work.pop_last() {
        let reducer = basis
            .iter()
            .enumerate()
            .find(|(i, g)| Some(*i) != skip && g.lead.divides(&key.mono));
        match reducer {
            Some((_, g)) => {
                let q = key.mono.div(&g.lead).unwrap();
                for (tm, tc) in &g.tail {
                    let k = Keyed { order: key.order, mono: tm.mul(&q) };
                    let delta = -&(&c * tc);
                    match work.entry(k) {
                        std::collections::btree_map::Entry::Vacant(v) => {
                            v.insert(delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut o) => {
                            let s = o.get() + &delta;
                            if s.is_zero() {
                                o.remove();
                            } else {
                                *o.get_mut() = s;
                            }
                        }
                    }
                }
            }
            None => rem.push((key.mono, c)),
        }
    }
    rem
}

fn keyed(p: &Polynomial, order: MonomialOrder) -> BTreeMap<Keyed, Coefficient> {
    p.terms().map(|(m, c)| (Keyed { order, mono: m.clone() }, c.clone())).collect()
}

/// Reduced Groebner basis. Elements are monic and sorted by decreasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    varset: VarSet,
    ring: RingSpec,
    elements: Vec<Element>,
    basis: Vec<Polynomial>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.varset == other.varset && self.ring == other.ring && self.basis == other.basis
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn varset(&self) -> &VarSet {
        &self.varset
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|e| &e.lead)
    }

    /// Remainder of complete multivariate division by the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.varset() != &self.varset {
            return Err(Error::VarSetMismatch);
        }
        if p.ring() != self.ring {
            return Err(Error::RingMismatch(p.ring().to_string(), self.ring.to_string()));
        }
        let rem = reduce(keyed(p, self.order), &self.elements, None);
        Ok(Polynomial::from_terms(&self.varset, self.ring, rem))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(p)
}

fn s_polynomial(a: &Element, b: &Element, order: MonomialOrder) -> BTreeMap<Keyed, Coefficient> {
    let lcm = a.lead.lcm(&b.lead);
    let qa = lcm.div(&a.lead).unwrap();
    let qb = lcm.div(&b.lead).unwrap();
    let mut work: BTreeMap<Keyed, Coefficient> = BTreeMap::new();
    let mut add = |m: Monomial, c: Coefficient| {
        let k = Keyed { order, mono: m };
        let s = match work.get(&k) {
            Some(old) => old + &c,
            None => c,
        };
        if s.is_zero() {
            work.remove(&k);
        } else {
            work.insert(k, s);
        }
    };
    for (m, c) in &a.tail {
        add(m.mul(&qa), c.clone());
    }
    for (m, c) in &b.tail {
        add(m.mul(&qb), -c);
    }
    work
}

/// Reduced Groebner basis with the default degree bound.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_bound(ideal, order, DEFAULT_DEGREE_BOUND)
}

pub fn buchberger_with_bound(ideal: &Ideal, order: MonomialOrder, degree_bound: u32) -> Result<GroebnerBasis> {
    let ring = ideal.ring();
    if !ring.is_field() {
        return Err(Error::NonFieldCoefficients(ring.to_string()));
    }
    let varset = ideal.varset().clone();
    let mut basis: Vec<Element> = Vec::new();
    for g in ideal.generators() {
        if g.total_degree().unwrap_or(0) > degree_bound {
            return Err(Error::DegreeBoundExceeded(degree_bound));
        }
        basis.extend(Element::from_poly(g, order));
    }
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    let mut pending_set: HashSet<(usize, usize)> = pending.iter().copied().collect();

    while !pending.is_empty() {
        // normal strategy: smallest lcm degree, ties by pair index
        let (pos, _) = pending
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| (basis[i].lead.lcm(&basis[j].lead).degree(), i, j))
            .unwrap();
        let (i, j) = pending.swap_remove(pos);
        pending_set.remove(&(i, j));
        if basis[i].lead.is_coprime(&basis[j].lead) {
            continue;
        }
        let lcm = basis[i].lead.lcm(&basis[j].lead);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead.divides(&lcm)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let rem = reduce(s_polynomial(&basis[i], &basis[j], order), &basis, None);
        if rem.is_empty() {
            continue;
        }
        let r = Polynomial::from_terms(&varset, ring, rem);
        if r.total_degree().unwrap_or(0) > degree_bound {
            return Err(Error::DegreeBoundExceeded(degree_bound));
        }
        let new = basis.len();
        basis.push(Element::from_poly(&r, order).unwrap());
        for k in 0..new {
            pending.push((k, new));
            pending_set.insert((k, new));
        }
    }

    // minimise: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Element> = Vec::new();
    for (i, e) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, o)| {
            k != i && o.lead.divides(&e.lead) && (o.lead != e.lead || k < i)
        });
        if !redundant {
            keep.push(e.clone());
        }
    }
    // interreduce tails
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let p = keep[i].to_poly(&varset, ring);
        let rem = reduce(keyed(&p, order), &keep, Some(i));
        let r = Polynomial::from_terms(&varset, ring, rem);
        reduced.push(Element::from_poly(&r, order).unwrap());
    }
    reduced.sort_by(|a, b| order.compare(&b.lead, &a.lead));
    let basis_polys = reduced.iter().map(|e| e.to_poly(&varset, ring)).collect();
    Ok(GroebnerBasis { order, varset, ring, elements: reduced, basis: basis_polys })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use proptest::prelude::*;

    fn vs(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    fn polys(texts: &[&str], v: &VarSet, ring: RingSpec) -> Vec<Polynomial> {
        texts.iter().map(|t| parse_poly(t, v, ring).unwrap()).collect()
    }

    /// Independent division oracle: repeatedly cancel the leading term of the
    /// remainder candidate using the first divisible generator (textbook form).
    fn naive_remainder(p: &Polynomial, gens: &[Polynomial], order: MonomialOrder) -> Polynomial {
        let mut work = p.clone();
        let mut rem = Polynomial::zero(p.varset(), p.ring());
        while let Some((m, c)) = work.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
            let hit = gens.iter().find_map(|g| {
                let (gm, gc) = g.leading_term(order)?;
                let q = m.div(gm)?;
                Some((g, q, c.checked_div(gc).unwrap()))
            });
            match hit {
                Some((g, q, k)) => work = &work - &g.mul_term(&q, &k),
                None => {
                    let t = Polynomial::from_terms(p.varset(), p.ring(), [(m, c)]);
                    rem = &rem + &t;
                    work = &work - &t;
                }
            }
        }
        rem
    }

    fn spolys_vanish(gb: &GroebnerBasis) -> bool {
        let b = gb.basis();
        for i in 0..b.len() {
            for j in (i + 1)..b.len() {
                let (mi, ci) = b[i].leading_term(gb.order()).unwrap();
                let (mj, cj) = b[j].leading_term(gb.order()).unwrap();
                let l = mi.lcm(mj);
                let s = &b[i].mul_term(&l.div(mi).unwrap(), &ci.invert().unwrap())
                    - &b[j].mul_term(&l.div(mj).unwrap(), &cj.invert().unwrap());
                if !naive_remainder(&s, b, gb.order()).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn monomial_deletion() {
        let v = vs(&["e1", "e2"]);
        let q = RingSpec::Rationals;
        let e1sq = Monomial::from_exponents(vec![2, 0]);
        let e2sq = Monomial::from_exponents(vec![0, 2]);
        let p = parse_poly("e1^2 + e1*e2", &v, q).unwrap();
        assert_eq!(monomial_reduce(&p, &[e1sq, e2sq]).unwrap().to_string(), "e1*e2");
        assert_eq!(monomial_reduce(&p, &[]).unwrap(), p);
        let p = parse_poly("e1*e2 + 3", &v, q).unwrap();
        assert_eq!(monomial_reduce(&p, &[Monomial::from_exponents(vec![1, 1])]).unwrap().to_string(), "3");
        assert_eq!(monomial_reduce(&p, &[Monomial::one(3)]), Err(Error::VarSetMismatch));
    }

    #[test]
    fn lex_example() {
        let v = vs(&["X", "Y"]);
        let q = RingSpec::Rationals;
        let ideal = Ideal::new(&v, q, polys(&["X^2 - Y", "X*Y - 1"], &v, q)).unwrap();
        let gb = buchberger(&ideal, MonomialOrder::Lex).unwrap();
        assert_eq!(gb.basis(), &polys(&["X - Y^2", "Y^3 - 1"], &v, q)[..]);
        assert!(spolys_vanish(&gb));
        // both generating sets describe the same ideal
        for g in ideal.generators() {
            assert!(naive_remainder(g, gb.basis(), MonomialOrder::Lex).is_zero());
        }
        let back = Ideal::new(&v, q, gb.basis().to_vec()).unwrap();
        let orig = polys(&["X^2 - Y", "X*Y - 1"], &v, q);
        let gb2 = buchberger(&Ideal::new(&v, q, orig).unwrap(), MonomialOrder::Lex).unwrap();
        for g in back.generators() {
            assert!(gb2.contains(g).unwrap());
        }
    }

    #[test]
    fn trivial_bases() {
        let v = vs(&["X", "Y"]);
        let q = RingSpec::Rationals;
        let gb = buchberger(&Ideal::new(&v, q, polys(&["X"], &v, q)).unwrap(), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.basis(), &polys(&["X"], &v, q)[..]);
        let gb = buchberger(&Ideal::zero(&v, q), MonomialOrder::DegRevLex).unwrap();
        assert!(gb.basis().is_empty());
        let one = Polynomial::one(&v, q);
        assert_eq!(gb.normal_form(&one).unwrap(), one);
        let gb = buchberger(&Ideal::new(&v, q, polys(&["X^2 - Y", "X*Y"], &v, q)).unwrap(), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.normal_form(&one).unwrap(), one);
        assert!(gb.contains(&parse_poly("X^2 - Y", &v, q).unwrap()).unwrap());
    }

    #[test]
    fn non_field_rejected() {
        let v = vs(&["X"]);
        let z = RingSpec::Integers;
        let ideal = Ideal::new(&v, z, polys(&["X^2 - 2"], &v, z)).unwrap();
        assert!(matches!(buchberger(&ideal, MonomialOrder::Lex), Err(Error::NonFieldCoefficients(_))));
        assert!(matches!(ideal.contains(&Polynomial::one(&v, z), MonomialOrder::Lex), Err(Error::NonFieldCoefficients(_))));
        // monomial ideals work over Z
        let mono = Ideal::new(&v, z, polys(&["X^2"], &v, z)).unwrap();
        assert!(mono.contains(&parse_poly("3*X^3", &v, z).unwrap(), MonomialOrder::Lex).unwrap());
        // 2*X is not a monomial generator over Z
        let two_x = Ideal::new(&v, z, polys(&["2*X"], &v, z)).unwrap();
        assert!(two_x.monomial_generators().is_none());
    }

    #[test]
    fn degree_guard() {
        let v = vs(&["X", "Y"]);
        let q = RingSpec::Rationals;
        let ideal = Ideal::new(&v, q, polys(&["X^3 - Y^2", "X*Y^2 - 1"], &v, q)).unwrap();
        assert_eq!(buchberger_with_bound(&ideal, MonomialOrder::Lex, 2), Err(Error::DegreeBoundExceeded(2)));
    }

    #[test]
    fn determinant_of_dtilde_2x2() {
        let v = vs(&["d11", "d12", "d21", "d22"]);
        let q = RingSpec::Rationals;
        let rels = [
            "d11^2", "d11*d12", "d12^2", "d21^2", "d21*d22", "d22^2",
            "d11*d21 + d21*d11", "d12*d22 + d22*d12", "d11*d22 + d21*d12",
        ];
        let gb = buchberger(&Ideal::new(&v, q, polys(&rels, &v, q)).unwrap(), MonomialOrder::DegRevLex).unwrap();
        let det = parse_poly("d11*d22 - d12*d21", &v, q).unwrap();
        let twice = parse_poly("2*d11*d22", &v, q).unwrap();
        assert_eq!(gb.normal_form(&det).unwrap(), gb.normal_form(&twice).unwrap());
        assert!(!gb.normal_form(&twice).unwrap().is_zero());
        assert!(spolys_vanish(&gb));
    }

    #[test]
    fn diagonal_square_membership() {
        let v = vs(&["Y", "Z"]);
        let q = RingSpec::Rationals;
        let ideal = Ideal::new(&v, q, polys(&["Z^2 - 2*Y*Z + Y^2"], &v, q)).unwrap();
        let cube = parse_poly("Z - Y", &v, q).unwrap().pow(3);
        assert!(ideal.contains(&cube, MonomialOrder::DegRevLex).unwrap());
        let lin = parse_poly("Z - Y", &v, q).unwrap();
        assert!(!ideal.contains(&lin, MonomialOrder::DegRevLex).unwrap());
        // degree argument: nonzero elements of a principal ideal generated in degree 2 have degree >= 2
        assert_eq!(buchberger(&ideal, MonomialOrder::DegRevLex).unwrap().normal_form(&lin).unwrap(), lin);
        let zero = Ideal::zero(&v, q);
        assert!(!zero.contains(&lin, MonomialOrder::Lex).unwrap());
        assert!(zero.contains(&Polynomial::zero(&v, q), MonomialOrder::Lex).unwrap());
    }

    fn arb_small(v: VarSet, ring: RingSpec) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((0u32..3, 0u32..3, 0u32..2, -3i64..4), 1..4).prop_map(move |ts| {
            Polynomial::from_terms(
                &v,
                ring,
                ts.into_iter().map(|(a, b, c, k)| (Monomial::from_exponents(vec![a, b, c]), ring.from_i64(k))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn reduction_is_a_ring_map(
            gens in proptest::collection::vec(arb_small(vs(&["x", "y", "z"]), RingSpec::Modular(7)), 1..3),
            p in arb_small(vs(&["x", "y", "z"]), RingSpec::Modular(7)),
            q in arb_small(vs(&["x", "y", "z"]), RingSpec::Modular(7)),
        ) {
            let v = vs(&["x", "y", "z"]);
            let ideal = Ideal::new(&v, RingSpec::Modular(7), gens).unwrap();
            let gb = match buchberger_with_bound(&ideal, MonomialOrder::DegRevLex, 10) {
                Ok(gb) => gb,
                Err(Error::DegreeBoundExceeded(_)) => return Ok(()),
                Err(e) => panic!("{e}"),
            };
            prop_assert!(spolys_vanish(&gb));
            let nf = |a: &Polynomial| gb.normal_form(a).unwrap();
            prop_assert_eq!(nf(&(&p + &q)), nf(&(&nf(&p) + &nf(&q))));
            prop_assert_eq!(nf(&(&p * &q)), nf(&(&nf(&p) * &nf(&q))));
            prop_assert_eq!(nf(&nf(&p)), nf(&p));
            prop_assert_eq!(nf(&p), naive_remainder(&p, gb.basis(), MonomialOrder::DegRevLex));
            for g in ideal.generators() {
                prop_assert!(nf(g).is_zero());
            }
            // the reduced basis does not depend on generator order
            let mut rev = ideal.generators().to_vec();
            rev.reverse();
            let gb_rev = buchberger_with_bound(&Ideal::new(&v, RingSpec::Modular(7), rev).unwrap(), MonomialOrder::DegRevLex, 10).unwrap();
            prop_assert_eq!(gb_rev.basis(), gb.basis());
        }

        #[test]
        fn monomial_paths_agree(
            exps in proptest::collection::vec((0u32..3, 0u32..3, 0u32..3), 1..4),
            p in arb_small(vs(&["x", "y", "z"]), RingSpec::Rationals),
            r in arb_small(vs(&["x", "y", "z"]), RingSpec::Rationals),
        ) {
            let v = vs(&["x", "y", "z"]);
            let q = RingSpec::Rationals;
            let gens: Vec<Polynomial> = exps.iter()
                .map(|&(a, b, c)| Polynomial::monomial(&v, q, Monomial::from_exponents(vec![a, b, c])))
                .collect();
            let ideal = Ideal::new(&v, q, gens.clone()).unwrap();
            let candidate = &p * &r;
            let fast = ideal.contains(&candidate, MonomialOrder::DegRevLex).unwrap();
            let gb = buchberger(&ideal, MonomialOrder::DegRevLex).unwrap();
            prop_assert_eq!(fast, gb.contains(&candidate).unwrap());
            let in_ideal = &candidate * &gens[0];
            prop_assert!(ideal.contains(&in_ideal, MonomialOrder::DegRevLex).unwrap());
        }
    }
}
