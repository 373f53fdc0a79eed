//! Sparse multivariate polynomials over a named, ordered variable set.

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::{Coefficient, RingSpec};
use crate::error::{Error, Result};

pub use parse::parse_poly;

/// Ordered list of distinct variable names. Position defines the variable index.
#[derive(Clone, Debug, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidVarSet(format!("`{name}` is not an identifier")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidVarSet(format!("duplicate variable `{name}`")));
            }
        }
        Ok(VarSet(names.into()))
    }

    pub fn empty() -> Self {
        VarSet(Vec::new().into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(" "))
    }
}

/// Exponent vector. The derived `Ord` is only a storage order; use
/// [`MonomialOrder::compare`] for term orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// Panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow in monomial product")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    fn fmt_with(&self, varset: &VarSet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", varset.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Lexicographic with variable 0 largest.
    Lex,
    /// Graded reverse lexicographic.
    #[default]
    DegRevLex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::VarSetMismatch);
        }
        Ok(self.compare(a, b))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            other => Err(Error::InvalidConfig(format!("unknown monomial order `{other}`"))),
        }
    }
}

/// Sparse polynomial: monomial to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    varset: VarSet,
    ring: RingSpec,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Polynomial {
    pub fn zero(varset: &VarSet, ring: RingSpec) -> Self {
        Polynomial { varset: varset.clone(), ring, terms: BTreeMap::new() }
    }

    pub fn constant(varset: &VarSet, c: Coefficient) -> Self {
        Self::from_terms(varset, c.ring(), [(Monomial::one(varset.len()), c)])
    }

    pub fn one(varset: &VarSet, ring: RingSpec) -> Self {
        Self::constant(varset, ring.one())
    }

    pub fn from_i64(varset: &VarSet, ring: RingSpec, n: i64) -> Self {
        Self::constant(varset, ring.from_i64(n))
    }

    pub fn variable(varset: &VarSet, ring: RingSpec, index: usize) -> Self {
        Self::monomial(varset, ring, Monomial::variable(varset.len(), index))
    }

    /// The variable called `name`.
    pub fn var(varset: &VarSet, ring: RingSpec, name: &str) -> Result<Self> {
        let idx = varset.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::variable(varset, ring, idx))
    }

    pub fn monomial(varset: &VarSet, ring: RingSpec, m: Monomial) -> Self {
        Self::from_terms(varset, ring, [(m, ring.one())])
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms<I>(varset: &VarSet, ring: RingSpec, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coefficient)>,
    {
        let mut p = Self::zero(varset, ring);
        for (m, c) in terms {
            assert_eq!(m.len(), varset.len(), "monomial arity does not match variable set");
            assert_eq!(c.ring(), ring, "coefficient ring mismatch");
            p.add_term(m, &c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn varset(&self) -> &VarSet {
        &self.varset
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Coefficient> {
        self.terms.get(m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map(|(m, c)| m.is_one() && c.is_one()).unwrap_or(false)
    }

    /// The constant coefficient, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Coefficient> {
        match self.terms.len() {
            0 => Some(self.ring.zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The monomial of a single-term polynomial with unit coefficient.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        c.invert().is_ok().then_some(m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &Coefficient)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.varset != other.varset {
            return Err(Error::VarSetMismatch);
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Polynomial::zero(&self.varset, self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.checked_mul(mb)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        assert_eq!(c.ring(), self.ring, "coefficient ring mismatch");
        let mut out = Polynomial::zero(&self.varset, self.ring);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            out.add_term(m.clone(), &(a * c));
        }
        out
    }

    /// Multiplies by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Polynomial {
        let mut out = Polynomial::zero(&self.varset, self.ring);
        for (a, b) in &self.terms {
            out.add_term(a.mul(m), &(b * c));
        }
        out
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.varset, self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces variable `i` by `images[i]` and expands.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.varset.len() {
            return Err(Error::ArityMismatch { expected: self.varset.len(), actual: images.len() });
        }
        let (target_vars, target_ring) = match images.first() {
            Some(img) => (img.varset.clone(), img.ring),
            // no variables: the polynomial is a constant
            None => return Ok(self.clone()),
        };
        for img in images {
            if img.varset != target_vars {
                return Err(Error::VarSetMismatch);
            }
            if img.ring != target_ring {
                return Err(Error::RingMismatch(img.ring.to_string(), target_ring.to_string()));
            }
        }
        if target_ring != self.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), target_ring.to_string()));
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|_| vec![Polynomial::one(&target_vars, target_ring)])
            .collect();
        let mut out = Polynomial::zero(&target_vars, target_ring);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Moves the polynomial into `target`, sending variable `i` to `index_map[i]`.
    pub fn rename(&self, target: &VarSet, index_map: &[usize]) -> Polynomial {
        assert_eq!(index_map.len(), self.varset.len());
        let mut out = Polynomial::zero(target, self.ring);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[index_map[i]] += x;
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Polynomial with degree-0 part removed.
    pub fn without_constant(&self) -> Polynomial {
        let mut out = self.clone();
        out.terms.remove(&Monomial::one(self.varset.len()));
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("incompatible polynomials")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-&self.ring.one())
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending degrevlex order, in the same grammar the parser reads.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms(MonomialOrder::DegRevLex).into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                m.fmt_with(&self.varset, f)?;
            }
        }
        Ok(())
    }
}
