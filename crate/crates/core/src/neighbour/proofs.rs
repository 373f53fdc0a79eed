//! Constructive versions of two algebraic identities, each checked on output.

use std::collections::BTreeMap;

use crate::algebra::{copy_name, multiplication_map, tensor, AlgebraElement, FpAlgebra};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VarSet};

/// `P(Z) - P(Y) = Σ (Z_i - Y_i) · Q_i`, in the variables `[X_0.., X_1..]`
/// where `Y_i = X_i_0` and `Z_i = X_i_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceDecomposition {
    pub varset: VarSet,
    pub quotients: Vec<Polynomial>,
}

impl DifferenceDecomposition {
    pub fn y(&self, i: usize) -> Polynomial {
        Polynomial::variable(&self.varset, self.ring(), i)
    }

    pub fn z(&self, i: usize) -> Polynomial {
        Polynomial::variable(&self.varset, self.ring(), self.quotients.len() + i)
    }

    fn ring(&self) -> crate::arith::RingSpec {
        self.quotients[0].ring()
    }
}

pub fn decompose_difference(p: &Polynomial) -> Result<DifferenceDecomposition> {
    let n = p.varset().len();
    if n == 0 {
        return Err(Error::InvalidVarSet("polynomial has no variables".into()));
    }
    let ring = p.ring();
    let names: Vec<String> = (0..2)
        .flat_map(|r| p.varset().names().iter().map(move |x| copy_name(x, r)))
        .collect();
    let varset = VarSet::new(names)?;
    let mut quotients = vec![Polynomial::zero(&varset, ring); n];
    for (m, c) in p.terms() {
        let e = m.exponents();
        // variables before i at Y, after i at Z
        for i in 0..n {
            if e[i] == 0 {
                continue;
            }
            let mut outer = vec![0u32; 2 * n];
            outer[..i].copy_from_slice(&e[..i]);
            for k in (i + 1)..n {
                outer[n + k] = e[k];
            }
            for k in 0..e[i] {
                let mut mono = outer.clone();
                mono[n + i] = e[i] - 1 - k;
                mono[i] = k;
                quotients[i].add_term(Monomial::from_exponents(mono), c);
            }
        }
    }
    let out = DifferenceDecomposition { varset, quotients };
    let ys: Vec<Polynomial> = (0..n).map(|i| out.y(i)).collect();
    let zs: Vec<Polynomial> = (0..n).map(|i| out.z(i)).collect();
    let lhs = p.substitute(&zs)?.try_sub(&p.substitute(&ys)?)?;
    let mut rhs = Polynomial::zero(&out.varset, ring);
    for i in 0..n {
        rhs = rhs.try_add(&(&zs[i] - &ys[i]).try_mul(&out.quotients[i])?)?;
    }
    if lhs != rhs {
        return Err(Error::VerificationFailed(format!("difference decomposition of {p}")));
    }
    Ok(out)
}

/// One summand `(a ⊗ 1)·(1 ⊗ b - b ⊗ 1)` of a kernel element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelTerm {
    /// `a ⊗ 1`.
    pub coefficient: AlgebraElement,
    /// `b`, a monomial of `B`.
    pub base: AlgebraElement,
    /// `1 ⊗ b - b ⊗ 1`.
    pub generator: AlgebraElement,
}

/// Writes `t ∈ ker(m: B ⊗ B → B)` as `Σ (a ⊗ 1)(1 ⊗ b - b ⊗ 1)`, grouping
/// by the monomial `b` of the second factor.
pub fn rewrite_kernel_element(b: &FpAlgebra, t: &AlgebraElement) -> Result<Vec<KernelTerm>> {
    let bb = tensor(b, b)?;
    if t.parent() != &bb.algebra {
        return Err(Error::ParentMismatch);
    }
    let m = multiplication_map(b)?;
    let image = m.apply(t)?;
    if !image.is_zero() {
        return Err(Error::NotInKernel(image.to_string()));
    }
    let n = b.ngens();
    let ring = b.ring();
    let mut groups: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
    for (mono, c) in t.rep().terms() {
        let e = mono.exponents();
        if e[n..].iter().all(|&x| x == 0) {
            continue;
        }
        let a = Polynomial::monomial(b.varset(), ring, Monomial::from_exponents(e[..n].to_vec())).scale(c);
        let entry = groups.entry(e[n..].to_vec()).or_insert_with(|| Polynomial::zero(b.varset(), ring));
        *entry = entry.try_add(&a)?;
    }
    let (left, right) = (&bb.inclusions[0], &bb.inclusions[1]);
    let mut terms = Vec::with_capacity(groups.len());
    for (exps, a) in groups {
        let base = b.element(&Polynomial::monomial(b.varset(), ring, Monomial::from_exponents(exps)))?;
        let coefficient = left.apply_poly(&a)?;
        let generator = &right.apply(&base)? - &left.apply(&base)?;
        terms.push(KernelTerm { coefficient, base, generator });
    }
    let products: Vec<AlgebraElement> = terms.iter().map(|k| &k.coefficient * &k.generator).collect();
    if &crate::algebra::sum(&bb.algebra, &products) != t {
        return Err(Error::VerificationFailed(format!("kernel rewrite of {t}")));
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Strategy;
    use crate::arith::RingSpec;
    use crate::poly::parse_poly;
    use proptest::prelude::*;

    fn strings(d: &DifferenceDecomposition) -> Vec<String> {
        d.quotients.iter().map(|q| q.to_string()).collect()
    }

    #[test]
    fn small_decompositions() {
        let vs = VarSet::new(["X"]).unwrap();
        let d = decompose_difference(&parse_poly("X^2", &vs, RingSpec::Rationals).unwrap()).unwrap();
        assert_eq!(strings(&d), ["X_0 + X_1"]);
        let vs = VarSet::new(["X1", "X2"]).unwrap();
        let d = decompose_difference(&parse_poly("X1*X2", &vs, RingSpec::Integers).unwrap()).unwrap();
        assert_eq!(strings(&d), ["X2_1", "X1_0"]);
        let d = decompose_difference(&parse_poly("7", &vs, RingSpec::Integers).unwrap()).unwrap();
        assert!(d.quotients.iter().all(Polynomial::is_zero));
    }

    proptest! {
        #[test]
        fn decomposition_verifies(terms in prop::collection::vec((0u32..4, 0u32..4, 0u32..3, -5i64..6), 0..6), m in 0usize..3) {
            let ring = [RingSpec::Rationals, RingSpec::Integers, RingSpec::Modular(3)][m];
            let vs = VarSet::new(["X1", "X2", "X3"]).unwrap();
            let p = Polynomial::from_terms(&vs, ring, terms.into_iter().map(|(a, b, c, k)| {
                (Monomial::from_exponents(vec![a, b, c]), ring.from_i64(k))
            }));
            prop_assert!(decompose_difference(&p).is_ok());
        }
    }

    #[test]
    fn kernel_rewrite() {
        let b = FpAlgebra::free_on(RingSpec::Rationals, &["X"]).unwrap();
        let bb = tensor(&b, &b).unwrap();
        let t = bb.algebra.parse("X_1*X_0 - X_0^2").unwrap();
        let terms = rewrite_kernel_element(&b, &t).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].coefficient.to_string(), "X_0");
        assert_eq!(terms[0].generator.to_string(), "-X_0 + X_1");
        let not = bb.algebra.parse("X_0").unwrap();
        assert!(matches!(rewrite_kernel_element(&b, &not), Err(Error::NotInKernel(_))));
        assert!(rewrite_kernel_element(&b, &bb.algebra.zero()).unwrap().is_empty());
    }

    #[test]
    fn kernel_rewrite_presented() {
        let b = FpAlgebra::presented(RingSpec::Rationals, &["X", "Y"], &["X^2 - Y^3"], Strategy::Groebner(Default::default())).unwrap();
        let bb = tensor(&b, &b).unwrap();
        let t = bb.algebra.parse("X_0^2*Y_1 - Y_0^4 + 3*X_0*Y_0 - 3*X_1*Y_1").unwrap();
        let terms = rewrite_kernel_element(&b, &t).unwrap();
        assert!(!terms.is_empty());
    }
}
