//! Deterministic random test data: Weil algebras, elements, maps and matrices.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{make_map, quotient, sum, AlgebraElement, AlgebraMap, FpAlgebra, Strategy};
use crate::arith::{Coefficient, RingSpec};
use crate::error::Result;
use crate::neighbour::SimplexMatrix;
use crate::poly::{Monomial, Polynomial, VarSet};

/// Shape of the monomial relations of a random Weil algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeilPattern {
    /// All products `e_i e_j`.
    SquareZeroFull,
    /// Only `e_i^2`.
    SquaresOnly,
    /// `e_i^d` with `d` in 2..=3 and a random subset of the `e_i e_j`.
    RandomMonomial,
}

impl WeilPattern {
    pub const ALL: [WeilPattern; 3] = [WeilPattern::SquareZeroFull, WeilPattern::SquaresOnly, WeilPattern::RandomMonomial];
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// An independent stream per `(seed, label, ring, index)`.
pub fn case_rng(seed: u64, label: &str, ring: RingSpec, index: usize) -> ChaCha8Rng {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in label.bytes().chain([0u8]).chain(ring.to_string().bytes()) {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(splitmix(seed ^ splitmix(h ^ splitmix(index as u64))))
}

fn weil_names(n: usize) -> VarSet {
    VarSet::new((1..=n).map(|i| format!("e{i}"))).expect("generated names")
}

pub fn random_weil_algebra(seed: u64, ring: RingSpec, n_vars: usize, pattern: WeilPattern) -> FpAlgebra {
    let varset = weil_names(n_vars);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mono = |e: Vec<u32>| Polynomial::monomial(&varset, ring, Monomial::from_exponents(e));
    let unit = |i: usize, k: u32| {
        let mut e = vec![0; n_vars];
        e[i] = k;
        e
    };
    let mut rels = Vec::new();
    match pattern {
        WeilPattern::SquareZeroFull => {
            for i in 0..n_vars {
                for j in i..n_vars {
                    let mut e = unit(i, 1);
                    e[j] += 1;
                    rels.push(mono(e));
                }
            }
        }
        WeilPattern::SquaresOnly => rels.extend((0..n_vars).map(|i| mono(unit(i, 2)))),
        WeilPattern::RandomMonomial => {
            for i in 0..n_vars {
                rels.push(mono(unit(i, rng.gen_range(2..=3))));
            }
            for i in 0..n_vars {
                for j in (i + 1)..n_vars {
                    if rng.gen_bool(0.5) {
                        let mut e = unit(i, 1);
                        e[j] = 1;
                        rels.push(mono(e));
                    }
                }
            }
        }
    }
    FpAlgebra::with_degree_bound(ring, varset, rels, Strategy::MonomialDeletion, crate::ideal::DEFAULT_DEGREE_BOUND)
        .expect("monomial relations")
}

/// All monomials in `nvars` variables of degree `0..=max_degree`, by degree.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(nvars)];
    let mut layer = vec![Monomial::one(nvars)];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for m in &layer {
            // extend only at or after the last variable used, so each monomial appears once
            let start = m.exponents().iter().rposition(|&e| e > 0).unwrap_or(0);
            for v in start..nvars {
                next.push(m.mul(&Monomial::variable(nvars, v)));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn random_coefficient(rng: &mut ChaCha8Rng, ring: RingSpec) -> Coefficient {
    ring.from_i64(rng.gen_range(-2..=2))
}

/// A random element with no constant term, built from monomials of degree `1..=max_degree`.
pub fn random_nilpotent(rng: &mut ChaCha8Rng, c: &FpAlgebra, max_degree: u32) -> AlgebraElement {
    let ring = c.ring();
    let monos = monomials_up_to(c.ngens(), max_degree);
    let mut terms = Vec::new();
    for m in &monos[1..] {
        if rng.gen_bool(0.4) {
            terms.push((m.clone(), random_coefficient(rng, ring)));
        }
    }
    c.element(&Polynomial::from_terms(c.varset(), ring, terms)).expect("element of its own varset")
}

/// A single generator times a random coefficient.
pub fn random_generator_multiple(rng: &mut ChaCha8Rng, c: &FpAlgebra) -> AlgebraElement {
    if c.ngens() == 0 {
        return c.zero();
    }
    c.generator(rng.gen_range(0..c.ngens())).scale(&random_coefficient(rng, c.ring()))
}

pub fn random_element(rng: &mut ChaCha8Rng, c: &FpAlgebra) -> AlgebraElement {
    let k = c.scalar(&random_coefficient(rng, c.ring())).expect("same ring");
    &k + &random_nilpotent(rng, c, 2)
}

/// A random polynomial with at most `max_terms` terms of degree `<= max_degree`.
pub fn random_polynomial(rng: &mut ChaCha8Rng, varset: &VarSet, ring: RingSpec, max_degree: u32, max_terms: usize) -> Polynomial {
    let monos = monomials_up_to(varset.len(), max_degree);
    let count = rng.gen_range(0..=max_terms);
    let terms = (0..count)
        .map(|_| (monos.choose(rng).expect("nonempty").clone(), random_coefficient(rng, ring)))
        .collect::<Vec<_>>();
    Polynomial::from_terms(varset, ring, terms)
}

pub fn random_weil(rng: &mut ChaCha8Rng, ring: RingSpec) -> FpAlgebra {
    let m = rng.gen_range(2..=3);
    let pattern = *WeilPattern::ALL.choose(rng).expect("nonempty");
    random_weil_algebra(rng.gen(), ring, m, pattern)
}

/// A difference vector mixing zero, generator, nilpotent and unit-bearing entries.
fn random_difference(rng: &mut ChaCha8Rng, c: &FpAlgebra) -> AlgebraElement {
    match rng.gen_range(0..20) {
        0..=3 => c.zero(),
        4..=9 => random_generator_multiple(rng, c),
        10..=16 => random_nilpotent(rng, c, 2),
        _ => random_element(rng, c),
    }
}

/// A random pair of maps `k[X1..Xn] → C` into a random Weil algebra.
pub fn random_pair(rng: &mut ChaCha8Rng, ring: RingSpec, n_max: usize) -> (AlgebraMap, AlgebraMap) {
    let c = random_weil(rng, ring);
    let n = rng.gen_range(1..=n_max);
    let b = crate::neighbour::matrix_domain(ring, n);
    let f: Vec<AlgebraElement> = (0..n).map(|_| random_element(rng, &c)).collect();
    // keep the difference supported on few coordinates half of the time
    let sparse = rng.gen_bool(0.5);
    let g: Vec<AlgebraElement> = f
        .iter()
        .enumerate()
        .map(|(j, x)| if sparse && j > 0 { x.clone() } else { x + &random_difference(rng, &c) })
        .collect();
    (
        make_map(&b, &c, f).expect("free domain"),
        make_map(&b, &c, g).expect("free domain"),
    )
}

/// A random `rows × cols` matrix over a random Weil algebra. With `anchored`
/// the entries are small nilpotents, as for matrices with an implicit zero row.
pub fn random_matrix(rng: &mut ChaCha8Rng, ring: RingSpec, rows: usize, cols: usize, anchored: bool) -> SimplexMatrix {
    let c = random_weil(rng, ring);
    let base: Vec<AlgebraElement> = (0..cols).map(|_| if anchored { c.zero() } else { random_element(rng, &c) }).collect();
    let entries = (0..rows)
        .map(|_| {
            base.iter()
                .map(|x| {
                    let d = match rng.gen_range(0..10) {
                        0..=2 => c.zero(),
                        3..=7 => random_generator_multiple(rng, &c),
                        _ => random_nilpotent(rng, &c, 1),
                    };
                    x + &d
                })
                .collect()
        })
        .collect();
    SimplexMatrix::new(&c, entries).expect("shared codomain")
}

/// A random well-defined map out of a Weil algebra `C` (all relations of degree >= 2).
pub fn random_codomain_map(rng: &mut ChaCha8Rng, c: &FpAlgebra) -> Result<AlgebraMap> {
    let ring = c.ring();
    match rng.gen_range(0..3) {
        0 => {
            let monos = monomials_up_to(c.ngens(), 2);
            let m = monos[1..].choose(rng).expect("nonempty").clone();
            let (_, projection) = quotient(c, vec![Polynomial::monomial(c.varset(), ring, m)])?;
            Ok(projection)
        }
        1 => {
            let target = random_weil_algebra(0, ring, rng.gen_range(1..=3), WeilPattern::SquareZeroFull);
            let images = (0..c.ngens())
                .map(|_| {
                    let terms: Vec<AlgebraElement> = target
                        .generators()
                        .iter()
                        .map(|e| e.scale(&random_coefficient(rng, ring)))
                        .collect();
                    sum(&target, &terms)
                })
                .collect();
            make_map(c, &target, images)
        }
        _ => {
            let units = [1i64, -1];
            let images = c.generators().iter().map(|e| e.scale(&ring.from_i64(*units.choose(rng).expect("nonempty")))).collect();
            make_map(c, c, images)
        }
    }
}
