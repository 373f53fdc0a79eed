//! The registered checks. Each family expands into jobs over rings and sizes.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use super::corpus::{
    case_rng, monomials_up_to, random_codomain_map, random_element, random_generator_multiple, random_matrix,
    random_nilpotent, random_pair, random_polynomial, random_weil, random_weil_algebra, WeilPattern,
};
use super::shrink::{shrink_matrix, shrink_pair};
use super::{CheckVerdict as Verdict, SuiteConfig};
use crate::algebra::{
    adjoin_variables, compose, make_map, multiplication_map, neighbourhood_of_diagonal, sum, tensor,
    universal_simplex, AlgebraElement, AlgebraMap, FpAlgebra, Strategy,
};
use crate::arith::RingSpec;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::neighbour::{
    affine_combination, affine_combination_rows, canonical_map, decompose_difference, extend_matrix, in_dtilde,
    is_neighbour, is_neighbour_minus_free, is_simplex, is_square_zero_pair, linear_combination_apply, matrix_domain,
    rewrite_kernel_element, row_map, transpose, universal_dtilde, vectors_neighbour, CoefficientVector, SimplexMatrix,
};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Scope {
    /// One job over the rationals.
    Single,
    PerRing,
    PerField,
    /// Per field ring, `p ≤ p_max`, `n ≤ n_max`.
    PerFieldPN,
    /// Per ring, `p ≤ p_max`, `n ≤ n_max`.
    PerRingPN,
    /// Per field ring and `p ≤ p_max`.
    PerFieldP,
}

pub(crate) struct Family {
    pub name: &'static str,
    pub statement: &'static str,
    pub scope: Scope,
    pub run: fn(&Ctx) -> Result<Outcome>,
}

pub(crate) struct Ctx<'a> {
    pub cfg: &'a SuiteConfig,
    pub ring: RingSpec,
    pub p: usize,
    pub n: usize,
}

impl Ctx<'_> {
    fn rng(&self, label: &str, k: usize) -> ChaCha8Rng {
        case_rng(self.cfg.seed(), &format!("{label}/{}/{}", self.p, self.n), self.ring, k)
    }

    fn cases(&self) -> usize {
        self.cfg.case_count()
    }

    fn degree(&self) -> u32 {
        self.cfg.degree_bound()
    }

    /// The shared corpus: random map pairs for this ring, then one fixed
    /// neighbour pair and one fixed non-neighbour pair.
    fn pairs(&self) -> impl Iterator<Item = (usize, AlgebraMap, AlgebraMap)> + '_ {
        let random = (0..self.cases()).map(move |k| {
            let mut rng = case_rng(self.cfg.seed(), "pairs", self.ring, k);
            let (f, g) = random_pair(&mut rng, self.ring, self.cfg.n_max());
            (k, f, g)
        });
        let c = random_weil_algebra(0, self.ring, 2, WeilPattern::SquaresOnly);
        let dom = matrix_domain(self.ring, 2);
        let map = |xs: [&str; 2]| AlgebraMap::parse(&dom, &c, &xs).expect("fixed pair");
        let n = self.cases();
        let fixed = vec![(n, map(["e1", "0"]), map(["0", "0"])), (n + 1, map(["e1", "e2"]), map(["0", "0"]))];
        random.chain(fixed)
    }
}

pub(crate) struct Outcome {
    pub verdict: Verdict,
    pub witness: Option<String>,
    pub stats: BTreeMap<String, Value>,
}

/// Counts instances and keeps the first failure.
#[derive(Default)]
struct Tally {
    counts: BTreeMap<&'static str, u64>,
    failures: u64,
    first: Option<String>,
    divergences: u64,
    skipped: Option<String>,
}

impl Tally {
    fn count(&mut self, key: &'static str) {
        *self.counts.entry(key).or_default() += 1;
    }

    fn fail(&mut self, witness: impl FnOnce() -> String) {
        self.failures += 1;
        if self.first.is_none() {
            self.first = Some(witness());
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(witness);
        }
    }

    /// Guards against vacuous checks.
    fn require(&mut self, key: &'static str) {
        if self.counts.get(key).copied().unwrap_or(0) == 0 {
            self.fail(|| format!("no instances of `{key}`"));
        }
    }

    fn finish(self) -> Result<Outcome> {
        let mut stats: BTreeMap<String, Value> = self.counts.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect();
        if self.failures > 0 {
            stats.insert("failures".into(), Value::from(self.failures));
        }
        if self.divergences > 0 {
            stats.insert("expected_divergences".into(), Value::from(self.divergences));
        }
        let verdict = if self.failures > 0 {
            Verdict::Fail
        } else if self.skipped.is_some() {
            Verdict::Skipped
        } else if self.divergences > 0 {
            Verdict::ExpectedDivergence
        } else {
            Verdict::Pass
        };
        let witness = self.first.or(self.skipped);
        Ok(Outcome { verdict, witness, stats })
    }
}

fn describe_pair(f: &AlgebraMap, g: &AlgebraMap) -> String {
    format!("C = {}; f = {f}; g = {g}", f.codomain())
}

fn describe_matrix(m: &SimplexMatrix) -> String {
    format!("C = {}; M = [{}]", m.codomain(), m.to_string().replace('\n', "; "))
}

fn holds(f: &AlgebraMap, g: &AlgebraMap) -> bool {
    is_neighbour(f, g).map(|v| v.holds()).unwrap_or(false)
}

fn poly_element(b: &FpAlgebra, m: &Monomial) -> Result<AlgebraElement> {
    b.element(&Polynomial::monomial(b.varset(), b.ring(), m.clone()))
}

/// `(f(a) - g(a))(f(b) - g(b)) = 0` for all monomials `a, b` of degree `<= degree`.
fn eq1_on_monomials(f: &AlgebraMap, g: &AlgebraMap, degree: u32) -> Result<Option<String>> {
    let monos = monomials_up_to(f.domain().ngens(), degree);
    let dom = f.domain();
    let mut diffs = Vec::with_capacity(monos.len());
    for m in &monos {
        let p = Polynomial::monomial(dom.varset(), dom.ring(), m.clone());
        diffs.push(&f.apply_poly(&p)? - &g.apply_poly(&p)?);
    }
    for a in 0..monos.len() {
        for b in a..monos.len() {
            let v = &diffs[a] * &diffs[b];
            if !v.is_zero() {
                return Ok(Some(v.to_string()));
            }
        }
    }
    Ok(None)
}

fn restricted_cusp(ring: RingSpec) -> Result<FpAlgebra> {
    FpAlgebra::presented(ring, &["X", "Y"], &["X^2 - Y^3"], Strategy::Groebner(MonomialOrder::DegRevLex))
}

fn dual_numbers(ring: RingSpec) -> Result<FpAlgebra> {
    FpAlgebra::presented(ring, &["X"], &["X^2"], Strategy::MonomialDeletion)
}

// ---------------------------------------------------------------- corpus checks

fn minus_free(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for (k, f, g) in ctx.pairs() {
        let a = is_neighbour(&f, &g)?.holds();
        let b = is_neighbour_minus_free(&f, &g)?.holds();
        t.count(if a { "neighbour_pairs" } else { "non_neighbour_pairs" });
        if a != b {
            let disagree = |f: &AlgebraMap, g: &AlgebraMap| {
                is_neighbour(f, g).map(|v| v.holds()).ok() != is_neighbour_minus_free(f, g).map(|v| v.holds()).ok()
            };
            let (f, g) = shrink_pair(&f, &g, disagree);
            t.fail(|| format!("case {k}: {}; product form {a}, minus-free form {b}", describe_pair(&f, &g)));
        }
    }
    t.require("neighbour_pairs");
    t.require("non_neighbour_pairs");
    t.finish()
}

/// Nonzero products `d_i d_j` that are not killed by 2 make a square-only check decisive.
fn divergence_is_two_torsion(f: &AlgebraMap, g: &AlgebraMap) -> bool {
    let d: Vec<AlgebraElement> = f.images().iter().zip(g.images()).map(|(a, b)| b - a).collect();
    let two = f.codomain().from_i64(2);
    d.iter().all(|x| d.iter().all(|y| (&(x * y) * &two).is_zero()))
}

fn square_zero(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    let decisive = ctx.ring.two_invertible();
    for (k, f, g) in ctx.pairs() {
        let sq = is_square_zero_pair(&f, &g)?;
        let nb = is_neighbour(&f, &g)?.holds();
        t.count("cases");
        if sq.holds() == nb {
            continue;
        }
        if !decisive && sq.holds() && !nb && divergence_is_two_torsion(&f, &g) {
            t.divergences += 1;
        } else {
            t.fail(|| format!("case {k}: {}; squares {}, neighbour {nb}", describe_pair(&f, &g), sq.holds()));
        }
    }
    // the separating instance: (e1, e2) against (0, 0) with e_i^2 = 0
    let c = random_weil_algebra(0, ctx.ring, 2, WeilPattern::SquaresOnly);
    let dom = matrix_domain(ctx.ring, 2);
    let f = make_map(&dom, &c, c.generators())?;
    let g = make_map(&dom, &c, vec![c.zero(), c.zero()])?;
    let sq = is_square_zero_pair(&f, &g)?;
    let nb = is_neighbour(&f, &g)?.holds();
    let predicted = ctx.ring.from_i64(2).is_zero();
    t.check(!nb, || "separating pair reported as neighbours".into());
    if predicted {
        t.check(sq.holds() && sq.bounded, || "squares do not all vanish in characteristic 2".into());
        t.divergences += 1;
    } else {
        t.check(!sq.holds(), || format!("squares vanish over {} although 2*e1*e2 != 0", ctx.ring));
    }
    t.finish()
}

fn precomposition(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for (k, f, g) in ctx.pairs() {
        if !is_neighbour(&f, &g)?.holds() {
            continue;
        }
        let mut rng = ctx.rng("pre", k);
        let m = rng.gen_range(1..=3);
        let names: Vec<String> = (1..=m).map(|i| format!("W{i}")).collect();
        let src = FpAlgebra::free(ctx.ring, VarSet::new(names)?);
        let b = f.domain();
        let images = (0..m)
            .map(|_| b.element(&random_polynomial(&mut rng, b.varset(), ctx.ring, 2, 4)))
            .collect::<Result<Vec<_>>>()?;
        let h = make_map(&src, b, images)?;
        let (fh, gh) = (compose(&f, &h)?, compose(&g, &h)?);
        t.count("neighbour_pairs");
        t.check(holds(&fh, &gh), || format!("case {k}: {}; h = {h}", describe_pair(&f, &g)));
    }
    t.require("neighbour_pairs");
    t.finish()
}

fn postcomposition(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for (k, f, g) in ctx.pairs() {
        if !is_neighbour(&f, &g)?.holds() {
            continue;
        }
        let mut rng = ctx.rng("post", k);
        let h = random_codomain_map(&mut rng, f.codomain())?;
        let (hf, hg) = (compose(&h, &f)?, compose(&h, &g)?);
        t.count("neighbour_pairs");
        t.check(holds(&hf, &hg), || format!("case {k}: {}; h = {h}", describe_pair(&f, &g)));
    }
    t.require("neighbour_pairs");
    t.finish()
}

fn reflection(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for (k, f, g) in ctx.pairs() {
        let mut rng = ctx.rng("reflect", k);
        let b = f.domain();
        let mut names = b.varset().names().to_vec();
        names.push("W".into());
        let src = FpAlgebra::free(ctx.ring, VarSet::new(names)?);
        let mut images = b.generators();
        images.push(b.element(&random_polynomial(&mut rng, b.varset(), ctx.ring, 2, 4))?);
        let h = make_map(&src, b, images)?;
        let before = is_neighbour(&f, &g)?.holds();
        let after = is_neighbour(&compose(&f, &h)?, &compose(&g, &h)?)?.holds();
        t.count(if before { "neighbour_pairs" } else { "non_neighbour_pairs" });
        t.check(before == after, || format!("case {k}: {}; h = {h}; before {before}, after {after}", describe_pair(&f, &g)));
    }
    t.require("neighbour_pairs");
    t.require("non_neighbour_pairs");
    t.finish()
}

fn symmetry(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for (k, f, g) in ctx.pairs() {
        let fg = is_neighbour(&f, &g)?.holds();
        let gf = is_neighbour(&g, &f)?.holds();
        t.count("cases");
        t.check(fg == gf, || format!("case {k}: asymmetric; {}", describe_pair(&f, &g)));
        t.check(holds(&f, &f) && holds(&g, &g), || format!("case {k}: not reflexive; {}", describe_pair(&f, &g)));
    }
    t.finish()
}

fn non_transitivity(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    let c = random_weil_algebra(0, ctx.ring, 3, WeilPattern::SquaresOnly);
    let dom = matrix_domain(ctx.ring, 2);
    let f = AlgebraMap::parse(&dom, &c, &["0", "0"])?;
    let g = AlgebraMap::parse(&dom, &c, &["e1", "0"])?;
    let h = AlgebraMap::parse(&dom, &c, &["e1", "e2"])?;
    t.check(holds(&f, &g), || "f and g should be neighbours".into());
    t.check(holds(&g, &h), || "g and h should be neighbours".into());
    let fh = is_neighbour(&f, &h)?;
    t.check(!fh.holds(), || "f and h should not be neighbours".into());
    t.finish()
}

fn vector_criterion(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for (k, f, g) in ctx.pairs() {
        let v = vectors_neighbour(f.images(), g.images())?.holds();
        let oracle = eq1_on_monomials(&f, &g, ctx.degree())?;
        t.count(if v { "neighbour_pairs" } else { "non_neighbour_pairs" });
        if v != oracle.is_none() {
            let differ = |f: &AlgebraMap, g: &AlgebraMap| {
                let v = vectors_neighbour(f.images(), g.images()).map(|v| v.holds()).unwrap_or(false);
                eq1_on_monomials(f, g, ctx.degree()).map(|o| o.is_none() != v).unwrap_or(true)
            };
            let (f, g) = shrink_pair(&f, &g, differ);
            t.fail(|| format!("case {k}: {}; generator test {v}, element oracle {:?}", describe_pair(&f, &g), oracle));
        }
    }
    t.require("neighbour_pairs");
    t.require("non_neighbour_pairs");
    t.finish()
}

/// A `rows x cols` matrix over the square-zero algebra on `e1`, `e2` with `e1`
/// in the first entry, `e2` in the last and zeros elsewhere. All entry
/// products vanish, so it is a simplex and lies in D~ at every shape.
fn fixed_member(ring: RingSpec, rows: usize, cols: usize) -> Result<SimplexMatrix> {
    let full = random_weil_algebra(0, ring, 2, WeilPattern::SquareZeroFull);
    let mut entries = vec![vec!["0"; cols]; rows];
    entries[rows - 1][cols - 1] = "e2";
    entries[0][0] = "e1";
    let refs: Vec<&[&str]> = entries.iter().map(Vec::as_slice).collect();
    SimplexMatrix::from_texts(&full, &refs)
}

fn simplex_criterion(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    let cfg = ctx.cfg;
    let sq = random_weil_algebra(0, ctx.ring, 2, WeilPattern::SquaresOnly);
    let fixed = [SimplexMatrix::from_texts(&sq, &[&["e1", "e2"], &["0", "0"]])?, fixed_member(ctx.ring, 2, 2)?];
    for k in 0..ctx.cases() + fixed.len() {
        let m = match k.checked_sub(ctx.cases()) {
            Some(i) => fixed[i].clone(),
            None => {
                let mut rng = ctx.rng("simplex", k);
                let p = rng.gen_range(1..=cfg.p_max());
                let n = rng.gen_range(1..=cfg.n_max());
                random_matrix(&mut rng, ctx.ring, p + 1, n, false)
            }
        };
        let pairwise = |m: &SimplexMatrix| -> bool {
            (0..m.nrows()).all(|i| {
                ((i + 1)..m.nrows())
                    .all(|i2| eq1_on_monomials(&row_map(m, i), &row_map(m, i2), ctx.degree()).map(|o| o.is_none()).unwrap_or(false))
            })
        };
        let s = is_simplex(&m).holds();
        t.count(if s { "simplices" } else { "non_simplices" });
        if s != pairwise(&m) {
            let small = shrink_matrix(&m, |x| is_simplex(x).holds() != pairwise(x));
            t.fail(|| format!("case {k}: {}; matrix test {s}", describe_matrix(&small)));
        }
    }
    if ctx.ring.is_field() {
        for p in 1..=cfg.p_max() {
            for n in 1..=cfg.n_max() {
                let u = universal_simplex(&matrix_domain(ctx.ring, n), p)?;
                let rows = u.vertices.iter().map(|v| v.images().to_vec()).collect();
                let m = SimplexMatrix::new(&u.algebra, rows)?;
                t.count("universal_simplices");
                t.check(is_simplex(&m).holds(), || format!("universal vertices p={p}, n={n} are not a simplex"));
            }
        }
    }
    t.require("simplices");
    t.require("non_simplices");
    t.finish()
}

fn kernel_generators(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    let cusp = if ctx.ring.is_field() { Some(restricted_cusp(ctx.ring)?) } else { None };
    for k in 0..ctx.cases() {
        let mut rng = ctx.rng("kernel", k);
        let b = match &cusp {
            Some(c) if k % 4 == 3 => c.clone(),
            _ => matrix_domain(ctx.ring, rng.gen_range(1..=ctx.cfg.n_max())),
        };
        let bb = tensor(&b, &b)?;
        let m = multiplication_map(&b)?;
        let raw = bb.algebra.element(&random_polynomial(&mut rng, bb.algebra.varset(), ctx.ring, 3, 6))?;
        let image = m.apply(&raw)?;
        let in_kernel = &raw - &bb.inclusions[0].apply(&image)?;
        match rewrite_kernel_element(&b, &in_kernel) {
            Ok(_) => t.count("kernel_elements"),
            Err(e) => t.fail(|| format!("case {k}: {} in {}: {e}", in_kernel, &b)),
        }
        if !image.is_zero() {
            t.count("non_kernel_elements");
            let rejected = matches!(rewrite_kernel_element(&b, &raw), Err(Error::NotInKernel(_)));
            t.check(rejected, || format!("case {k}: {raw} accepted although m(t) = {image}"));
        }
        // (1⊗a - a⊗1)(1⊗b - b⊗1) = 1⊗ab + ab⊗1 - a⊗b - b⊗a
        let x = b.element(&random_polynomial(&mut rng, b.varset(), ctx.ring, 2, 3))?;
        let y = b.element(&random_polynomial(&mut rng, b.varset(), ctx.ring, 2, 3))?;
        let (i0, i1) = (&bb.inclusions[0], &bb.inclusions[1]);
        let lhs = &(&i1.apply(&x)? - &i0.apply(&x)?) * &(&i1.apply(&y)? - &i0.apply(&y)?);
        let xy = &x * &y;
        let rhs = &(&(&i1.apply(&xy)? + &i0.apply(&xy)?) - &(&i0.apply(&x)? * &i1.apply(&y)?)) - &(&i0.apply(&y)? * &i1.apply(&x)?);
        t.check(lhs == rhs, || format!("case {k}: square generator identity fails for a = {x}, b = {y}"));
    }
    // fixed instances: 1⊗X - X⊗1 lies in the kernel, the unit does not
    let b = matrix_domain(ctx.ring, 1);
    let bb = tensor(&b, &b)?;
    let x = b.element(&Polynomial::variable(b.varset(), ctx.ring, 0))?;
    let diff = &bb.inclusions[1].apply(&x)? - &bb.inclusions[0].apply(&x)?;
    t.count("kernel_elements");
    t.check(rewrite_kernel_element(&b, &diff).is_ok(), || format!("{diff} rejected in {b}"));
    t.count("non_kernel_elements");
    t.check(matches!(rewrite_kernel_element(&b, &bb.algebra.one()), Err(Error::NotInKernel(_))), || "the unit was accepted".to_string());
    t.require("kernel_elements");
    t.require("non_kernel_elements");
    t.finish()
}

fn well_defined_pair(rng: &mut ChaCha8Rng, b: &FpAlgebra, c: &FpAlgebra) -> Option<(AlgebraMap, AlgebraMap)> {
    let pick = |rng: &mut ChaCha8Rng| -> AlgebraElement {
        if rng.gen_bool(0.5) {
            random_generator_multiple(rng, c)
        } else {
            random_nilpotent(rng, c, 2)
        }
    };
    for _ in 0..20 {
        let f_images: Vec<AlgebraElement> = (0..b.ngens()).map(|_| pick(rng)).collect();
        let Ok(f) = make_map(b, c, f_images.clone()) else { continue };
        for _ in 0..5 {
            let g_images: Vec<AlgebraElement> = f_images.iter().map(|x| x + &pick(rng)).collect();
            if let Ok(g) = make_map(b, c, g_images) {
                return Some((f, g));
            }
        }
    }
    None
}

fn check_classifying(t: &mut Tally, k: usize, f: &AlgebraMap, g: &AlgebraMap) -> Result<()> {
    let u = neighbourhood_of_diagonal(f.domain())?;
    let nb = is_neighbour(f, g)?.holds();
    match u.classifying_map(&[f, g]) {
        Ok(phi) => {
            let back = (compose(&phi, &u.vertices[0])?, compose(&phi, &u.vertices[1])?);
            t.check(nb, || format!("case {k}: factorization exists for non-neighbours; {}", describe_pair(f, g)));
            t.check(back.0.images() == f.images() && back.1.images() == g.images(), || {
                format!("case {k}: factorization does not restrict to the pair; {}", describe_pair(f, g))
            });
        }
        Err(Error::IllDefinedMap(..)) => {
            t.check(!nb, || format!("case {k}: no factorization for neighbours; {}", describe_pair(f, g)));
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn universal_pair(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for (k, f, g) in ctx.pairs() {
        t.count(if holds(&f, &g) { "neighbour_pairs" } else { "non_neighbour_pairs" });
        check_classifying(&mut t, k, &f, &g)?;
    }
    if ctx.ring.is_field() {
        let b = restricted_cusp(ctx.ring)?;
        for k in 0..ctx.cases().div_ceil(4) {
            let mut rng = ctx.rng("presented-pair", k);
            let c = random_weil(&mut rng, ctx.ring);
            if let Some((f, g)) = well_defined_pair(&mut rng, &b, &c) {
                t.count("presented_pairs");
                check_classifying(&mut t, k, &f, &g)?;
            }
        }
        t.require("presented_pairs");
    }
    t.require("neighbour_pairs");
    t.require("non_neighbour_pairs");
    t.finish()
}

fn polynomial_kernel(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for k in 0..ctx.cases() {
        let mut rng = ctx.rng("decompose", k);
        let n = rng.gen_range(1..=ctx.cfg.n_max());
        let vs = matrix_domain(ctx.ring, n).varset().clone();
        let p = random_polynomial(&mut rng, &vs, ctx.ring, ctx.degree() + 1, 6);
        let d = match decompose_difference(&p) {
            Ok(d) => d,
            Err(e) => {
                t.fail(|| format!("case {k}: {p}: {e}"));
                continue;
            }
        };
        // independent re-expansion
        let ys: Vec<Polynomial> = (0..n).map(|i| d.y(i)).collect();
        let zs: Vec<Polynomial> = (0..n).map(|i| d.z(i)).collect();
        let lhs = &p.substitute(&zs)? - &p.substitute(&ys)?;
        let mut rhs = Polynomial::zero(&d.varset, ctx.ring);
        for i in 0..n {
            rhs = &rhs + &(&(&zs[i] - &ys[i]) * &d.quotients[i]);
        }
        t.count("polynomials");
        t.check(lhs == rhs, || format!("case {k}: {p} does not re-expand"));
    }
    t.finish()
}

fn polynomial_kernel_square(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for k in 0..ctx.cases() {
        let mut rng = ctx.rng("kernel-square", k);
        let n = rng.gen_range(1..=ctx.cfg.n_max());
        let vs = matrix_domain(ctx.ring, n).varset().clone();
        let p = random_polynomial(&mut rng, &vs, ctx.ring, 3, 4);
        let q = random_polynomial(&mut rng, &vs, ctx.ring, 3, 4);
        let (dp, dq) = (decompose_difference(&p)?, decompose_difference(&q)?);
        let ys: Vec<Polynomial> = (0..n).map(|i| dp.y(i)).collect();
        let zs: Vec<Polynomial> = (0..n).map(|i| dp.z(i)).collect();
        let diff = |x: &Polynomial| -> Result<Polynomial> { Ok(&x.substitute(&zs)? - &x.substitute(&ys)?) };
        let product = &diff(&p)? * &diff(&q)?;
        let gens: Vec<Polynomial> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| &(&zs[i] - &ys[i]) * &(&zs[j] - &ys[j]))
            .collect();
        let mut rhs = Polynomial::zero(&dp.varset, ctx.ring);
        for i in 0..n {
            for j in 0..n {
                rhs = &rhs + &(&gens[i * n + j] * &(&dp.quotients[i] * &dq.quotients[j]));
            }
        }
        t.count("products");
        t.check(product == rhs, || format!("case {k}: ({p}, {q}) product does not expand"));
        if ctx.ring.is_field() && k % 8 == 0 {
            let ideal = Ideal::new(&dp.varset, ctx.ring, gens.clone())?;
            t.check(ideal.contains(&product, MonomialOrder::DegRevLex)?, || format!("case {k}: product not in the ideal"));
            let single = &zs[0] - &ys[0];
            t.check(!ideal.contains(&single, MonomialOrder::DegRevLex)?, || "a linear difference lies in the square".into());
            t.count("membership_tests");
        }
    }
    t.finish()
}

fn squares_counterexample(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    let ring = ctx.ring;
    let c = random_weil_algebra(0, ring, 2, WeilPattern::SquaresOnly);
    let dom = matrix_domain(ring, 2);
    let f = make_map(&dom, &c, c.generators())?;
    let g = make_map(&dom, &c, vec![c.zero(), c.zero()])?;
    let e1e2 = c.parse("e1*e2")?;
    match is_neighbour(&f, &g)?.witness {
        Some(w) => t.check((w.i, w.j) == (0, 1) && w.value == e1e2, || format!("unexpected witness {w}")),
        None => t.fail(|| "pair reported as neighbours".into()),
    }
    for (i, x) in f.images().iter().enumerate() {
        t.check((x * x).is_zero(), || format!("generator {} difference has nonzero square", i + 1));
    }
    let sq = is_square_zero_pair(&f, &g)?;
    let expected = (vec![0, 1], &e1e2 * &c.from_i64(2));
    t.check(sq.witness.as_ref() == Some(&expected), || format!("sum-of-generators square: {:?}", sq.witness));
    let u = neighbourhood_of_diagonal(&dom)?;
    t.check(matches!(u.classifying_map(&[&f, &g]), Err(Error::IllDefinedMap(..))), || "pair factors through the neighbourhood".into());
    let m = SimplexMatrix::new(&c, vec![f.images().to_vec(), g.images().to_vec()])?;
    t.check(!is_simplex(&m).holds(), || "matrix of the pair passes as a simplex".into());
    t.finish()
}

// ---------------------------------------------------------------- combinations

/// Monomial pairs of degree `<= degree`: `L(a)L(b) = L(ab)` for `L = Σ t_r v_r`,
/// and the pairwise brackets `v_r(a)v_s(b) + v_s(a)v_r(b) = v_r(ab) + v_s(ab)`.
fn check_multiplicative(t: &mut Tally, b: &FpAlgebra, p: usize, degree: u32) -> Result<()> {
    let cm = canonical_map(b, p)?;
    let monos = monomials_up_to(b.ngens(), degree);
    let elems = monos.iter().map(|m| poly_element(b, m)).collect::<Result<Vec<_>>>()?;
    let apply_all = |x: &AlgebraElement| cm.vertices.iter().map(|v| v.apply(x)).collect::<Result<Vec<_>>>();
    let combine = |vals: &[AlgebraElement]| {
        let terms: Vec<AlgebraElement> = vals.iter().zip(cm.coefficients.entries()).map(|(v, c)| c * v).collect();
        sum(&cm.parameters, &terms)
    };
    let vals = elems.iter().map(apply_all).collect::<Result<Vec<_>>>()?;
    let combos: Vec<AlgebraElement> = vals.iter().map(|v| combine(v)).collect();
    let one = linear_combination_apply(&cm.vertices, &cm.coefficients, &b.one())?;
    t.check(one.is_one(), || format!("combination sends 1 to {one}"));
    for a in 0..monos.len() {
        for c in a..monos.len() {
            let ab = &elems[a] * &elems[c];
            let vab = apply_all(&ab)?;
            t.count("monomial_pairs");
            t.check(&combos[a] * &combos[c] == combine(&vab), || format!("p={p}: L({0})L({1}) != L({0}*{1})", monos_text(b, &monos[a]), monos_text(b, &monos[c])));
            for r in 0..=p {
                for s in (r + 1)..=p {
                    let lhs = &(&vals[a][r] * &vals[c][s]) + &(&vals[a][s] * &vals[c][r]);
                    let rhs = &vab[r] + &vab[s];
                    t.check(lhs == rhs, || format!("p={p}: bracket ({r}, {s}) differs on {} * {}", monos_text(b, &monos[a]), monos_text(b, &monos[c])));
                }
            }
        }
    }
    Ok(())
}

fn monos_text(b: &FpAlgebra, m: &Monomial) -> String {
    Polynomial::monomial(b.varset(), b.ring(), m.clone()).to_string()
}

fn affine_multiplicative(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    check_multiplicative(&mut t, &matrix_domain(ctx.ring, ctx.n), ctx.p, ctx.degree())?;
    t.finish()
}

fn affine_multiplicative_presented(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    check_multiplicative(&mut t, &restricted_cusp(ctx.ring)?, 1, ctx.degree())?;
    check_multiplicative(&mut t, &dual_numbers(ctx.ring)?, ctx.cfg.p_max(), ctx.degree())?;
    t.finish()
}

fn affine_naturality(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for (k, f, g) in ctx.pairs() {
        if !is_neighbour(&f, &g)?.holds() {
            continue;
        }
        let mut rng = ctx.rng("naturality", k);
        let c = f.codomain();
        let s = random_element(&mut rng, c);
        let tv = CoefficientVector::new(c, vec![&c.one() - &s, s.clone()])?;
        let h = random_codomain_map(&mut rng, c)?;
        let lhs = compose(&h, &affine_combination(&[f.clone(), g.clone()], &tv)?)?;
        let ht = CoefficientVector::new(h.codomain(), tv.entries().iter().map(|x| h.apply(x)).collect::<Result<Vec<_>>>()?)?;
        let rhs = affine_combination(&[compose(&h, &f)?, compose(&h, &g)?], &ht)?;
        t.count("neighbour_pairs");
        t.check(lhs.images() == rhs.images(), || format!("case {k}: {}; s = {s}; h = {h}", describe_pair(&f, &g)));
    }
    t.require("neighbour_pairs");
    t.finish()
}

/// The universal vertices with fresh parameters `groups × p` adjoined.
fn generic_vertices(b: &FpAlgebra, p: usize, groups: &[&str]) -> Result<(FpAlgebra, Vec<AlgebraMap>, Vec<CoefficientVector>)> {
    let u = universal_simplex(b, p)?;
    let names: Vec<String> = groups.iter().flat_map(|g| (1..=p).map(move |r| format!("{g}{r}"))).collect();
    let (c, inc) = adjoin_variables(&u.algebra, &names)?;
    let vertices = u.vertices.iter().map(|v| compose(&inc, v)).collect::<Result<Vec<_>>>()?;
    let base = u.algebra.ngens();
    let coefficient_sets = (0..groups.len())
        .map(|gi| {
            let ts: Vec<AlgebraElement> = (0..p).map(|r| c.generator(base + gi * p + r)).collect();
            let mut entries = vec![&c.one() - &sum(&c, &ts)];
            entries.extend(ts);
            CoefficientVector::new(&c, entries)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((c, vertices, coefficient_sets))
}

fn affine_neighbours(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    let b = matrix_domain(ctx.ring, ctx.n);
    let (_, vertices, sets) = generic_vertices(&b, ctx.p, &["t", "s"])?;
    let ft = affine_combination(&vertices, &sets[0])?;
    let fs = affine_combination(&vertices, &sets[1])?;
    t.count("generic_pairs");
    t.check(holds(&ft, &fs), || format!("generic combinations are not neighbours: {ft} vs {fs}"));
    let bounded = eq1_on_monomials(&ft, &fs, ctx.degree().min(2))?;
    t.check(bounded.is_none(), || format!("product of differences {bounded:?} on monomials"));
    for (r, v) in vertices.iter().enumerate() {
        t.check(holds(&ft, v), || format!("combination is not a neighbour of vertex {r}"));
    }
    t.finish()
}

fn affine_composite(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    let b = matrix_domain(ctx.ring, ctx.n);
    let (c, vertices, sets) = generic_vertices(&b, ctx.p, &["t", "u"])?;
    let (c2, inc) = adjoin_variables(&c, &["s".to_string()])?;
    let lift = |m: &AlgebraMap| compose(&inc, m);
    let lift_t = |v: &CoefficientVector| -> Result<CoefficientVector> {
        CoefficientVector::new(&c2, v.entries().iter().map(|x| inc.apply(x)).collect::<Result<Vec<_>>>()?)
    };
    let vertices = vertices.iter().map(lift).collect::<Result<Vec<_>>>()?;
    let (tv, uv) = (lift_t(&sets[0])?, lift_t(&sets[1])?);
    let g0 = affine_combination(&vertices, &tv)?;
    let g1 = affine_combination(&vertices, &uv)?;
    let s = c2.generator(c2.ngens() - 1);
    let outer = CoefficientVector::new(&c2, vec![&c2.one() - &s, s.clone()])?;
    let nested = affine_combination(&[g0, g1], &outer)?;
    let w: Vec<AlgebraElement> = tv.entries().iter().zip(uv.entries()).map(|(a, b)| &(&(&c2.one() - &s) * a) + &(&s * b)).collect();
    let wv = CoefficientVector::new(&c2, w)?;
    t.check(wv.is_affine(), || "composite coefficients do not sum to 1".into());
    let flat = affine_combination(&vertices, &wv)?;
    t.count("generic_instances");
    t.check(nested.images() == flat.images(), || format!("nested {nested} != flat {flat}"));
    t.finish()
}

fn check_canonical(t: &mut Tally, b: &FpAlgebra, p: usize) -> Result<()> {
    let cm = canonical_map(b, p)?;
    let u = &cm.simplex;
    t.count("maps");
    for r in 0..=p {
        let mut images = u.algebra.generators();
        images.extend((1..=p).map(|k| if k == r { u.algebra.one() } else { u.algebra.zero() }));
        let specialised = make_map(&cm.parameters, &u.algebra, images)?;
        let at = compose(&specialised, &cm.map)?;
        t.check(at.images() == u.vertices[r].images(), || format!("p={p}: specialising at vertex {r} gives {at}"));
    }
    Ok(())
}

fn canonical(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for n in 0..=ctx.cfg.n_max() {
        check_canonical(&mut t, &matrix_domain(ctx.ring, n), ctx.p)?;
    }
    check_canonical(&mut t, &dual_numbers(ctx.ring)?, ctx.p)?;
    if ctx.p == 1 {
        check_canonical(&mut t, &restricted_cusp(ctx.ring)?, 1)?;
    }
    t.finish()
}

fn affine_rows(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    for k in 0..=ctx.cases() {
        let mut rng = ctx.rng("rows", k);
        let (p, m) = if k == ctx.cases() {
            (1, fixed_member(ctx.ring, 2, 2)?)
        } else {
            let p = rng.gen_range(1..=ctx.cfg.p_max());
            let n = rng.gen_range(1..=ctx.cfg.n_max());
            (p, random_matrix(&mut rng, ctx.ring, p + 1, n, false))
        };
        if !is_simplex(&m).holds() {
            continue;
        }
        let c = m.codomain().clone();
        let coefficients = |rng: &mut ChaCha8Rng| -> Result<CoefficientVector> {
            let rest: Vec<AlgebraElement> = (0..p).map(|_| random_element(rng, &c)).collect();
            let mut entries = vec![&c.one() - &sum(&c, &rest)];
            entries.extend(rest);
            CoefficientVector::new(&c, entries)
        };
        let (ta, tb) = (coefficients(&mut rng)?, coefficients(&mut rng)?);
        let ra = affine_combination_rows(&m, &ta)?;
        let rb = affine_combination_rows(&m, &tb)?;
        t.count("simplices");
        t.check(vectors_neighbour(&ra, &rb)?.holds(), || format!("case {k}: two combinations differ non-infinitesimally; {}", describe_matrix(&m)));
        for i in 0..m.nrows() {
            t.check(vectors_neighbour(&ra, m.row(i))?.holds(), || format!("case {k}: combination not a neighbour of row {i}"));
        }
        let maps: Vec<AlgebraMap> = (0..m.nrows()).map(|i| row_map(&m, i)).collect();
        let as_map = affine_combination(&maps, &ta)?;
        t.check(as_map.images() == ra.as_slice(), || format!("case {k}: row and map combinations differ"));
    }
    t.require("simplices");
    t.finish()
}

// ---------------------------------------------------------------- matrices

fn dtilde_criterion(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    let full = random_weil_algebra(0, ctx.ring, 2, WeilPattern::SquareZeroFull);
    let squares = random_weil_algebra(0, ctx.ring, 2, WeilPattern::SquaresOnly);
    let fixed = [
        SimplexMatrix::from_texts(&full, &[&["e1", "0"], &["0", "e2"]])?,
        SimplexMatrix::from_texts(&squares, &[&["e1", "e2"]])?,
    ];
    for k in 0..ctx.cases() + fixed.len() {
        let m = match k.checked_sub(ctx.cases()) {
            Some(i) => fixed[i].clone(),
            None => {
                let mut rng = ctx.rng("dtilde", k);
                let p = rng.gen_range(1..=ctx.cfg.p_max());
                let n = rng.gen_range(1..=ctx.cfg.n_max());
                random_matrix(&mut rng, ctx.ring, p, n, true)
            }
        };
        let v = in_dtilde(&m);
        let s = is_simplex(&m.with_zero_row()).holds();
        t.count(if v.holds() { "members" } else { "non_members" });
        if v.ggx.is_none() && v.ffx.is_some() {
            t.count("ffx_only_failures");
        }
        if v.holds() != s {
            let small = shrink_matrix(&m, |x| in_dtilde(x).holds() != is_simplex(&x.with_zero_row()).holds());
            t.fail(|| format!("case {k}: {}; equations {}, simplex {s}", describe_matrix(&small), v.holds()));
        }
    }
    if ctx.ring.is_field() {
        for p in 1..=ctx.cfg.p_max() {
            for n in 1..=ctx.cfg.n_max() {
                let u = universal_dtilde(ctx.ring, p, n)?;
                t.count("universal_members");
                t.check(in_dtilde(&u).holds() && is_simplex(&u.with_zero_row()).holds(), || format!("universal D~({p},{n}) fails"));
            }
        }
    }
    t.require("members");
    t.require("non_members");
    t.finish()
}

fn determinant(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    let u = universal_dtilde(ctx.ring, 2, 2)?;
    let a = |i: usize, j: usize| u.entry(i, j);
    let diag = a(0, 0) * a(1, 1);
    let det = &diag - &(a(0, 1) * a(1, 0));
    let residue = &det - &(&diag * &u.codomain().from_i64(2));
    t.check(residue.is_zero(), || format!("det - 2*a11*a22 reduces to {residue}"));
    t.check(!diag.is_zero(), || "a11*a22 vanishes identically".into());
    t.finish()
}

fn transposition(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    // over Z the corpus algebras are torsion-free, which is enough
    if ctx.ring.characteristic() == 2 {
        t.skipped = Some(format!("2 = 0 in {}: the transposed same-row equations are not implied", ctx.ring));
        return t.finish();
    }
    let (p, n) = (ctx.p, ctx.n);
    for k in 0..=ctx.cases() {
        let mut rng = ctx.rng("transpose", k);
        let m = if k == ctx.cases() { fixed_member(ctx.ring, p, n)? } else { random_matrix(&mut rng, ctx.ring, p, n, true) };
        let mt = transpose(&m);
        t.check(transpose(&mt) == m, || format!("case {k}: double transpose differs"));
        if in_dtilde(&m).holds() {
            t.count("members");
            if !in_dtilde(&mt).holds() {
                let small = shrink_matrix(&m, |x| in_dtilde(x).holds() && !in_dtilde(&transpose(x)).holds());
                t.fail(|| format!("case {k}: {}", describe_matrix(&small)));
            }
        }
    }
    if ctx.ring.is_field() {
        let u = universal_dtilde(ctx.ring, p, n)?;
        t.count("universal_members");
        t.check(in_dtilde(&transpose(&u)).holds(), || format!("universal D~({p},{n}) transposes out of D~({n},{p})"));
    }
    t.require("members");
    t.finish()
}

fn extension(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    let (p, n) = (ctx.p, ctx.n);
    let universal = if ctx.ring.is_field() { Some(universal_dtilde(ctx.ring, p, n)?) } else { None };
    for k in 0..=ctx.cases() {
        let mut rng = ctx.rng("extend", k);
        if let Some(u) = &universal {
            let c = u.codomain();
            let coeffs: Vec<AlgebraElement> = (0..p)
                .map(|_| {
                    let k = c.from_i64(rng.gen_range(-2..=2));
                    &k + &random_nilpotent(&mut rng, c, 1)
                })
                .collect();
            match extend_matrix(u, &coeffs) {
                Ok(x) => {
                    t.count("universal_extensions");
                    let expected: Vec<AlgebraElement> = (0..n)
                        .map(|j| sum(c, &(0..p).map(|i| &coeffs[i] * u.entry(i, j)).collect::<Vec<_>>()))
                        .collect();
                    t.check(x.row(p) == expected.as_slice(), || format!("case {k}: appended row is not the combination"));
                }
                Err(e) => t.fail(|| format!("case {k}: universal extension failed: {e}")),
            }
        }
        let m = if k == ctx.cases() { fixed_member(ctx.ring, p, n)? } else { random_matrix(&mut rng, ctx.ring, p, n, true) };
        let coeffs: Vec<AlgebraElement> = (0..p).map(|_| random_element(&mut rng, m.codomain())).collect();
        match (in_dtilde(&m).holds(), extend_matrix(&m, &coeffs)) {
            (true, Ok(x)) => {
                t.count("members");
                t.check(in_dtilde(&x).holds(), || format!("case {k}: {}", describe_matrix(&x)));
            }
            (false, Err(Error::NotInDtilde(_))) => t.count("rejected"),
            (member, r) => t.fail(|| format!("case {k}: member {member}, result {:?}; {}", r.err(), describe_matrix(&m))),
        }
    }
    t.require("members");
    t.finish()
}

// ---------------------------------------------------------------- harness integrity

fn fail_injection(ctx: &Ctx) -> Result<Outcome> {
    let mut t = Tally::default();
    let ring = ctx.ring;
    let full = random_weil_algebra(0, ring, 2, WeilPattern::SquareZeroFull);
    let rels: Vec<Polynomial> = full.relations().generators().iter().filter(|r| r.to_string() != "e1*e2").cloned().collect();
    let mutated = FpAlgebra::with_degree_bound(ring, full.varset().clone(), rels, Strategy::MonomialDeletion, full.degree_bound())?;
    let dom = matrix_domain(ring, 2);
    let mut flips = 0u64;
    // a fixed budget: this guards the harness, not the corpus
    for k in 0..ctx.cases().max(200) {
        let mut rng = ctx.rng("inject", k);
        let texts: Vec<Polynomial> = (0..4).map(|_| random_polynomial(&mut rng, full.varset(), ring, 1, 3)).collect();
        let build = |c: &FpAlgebra| -> Result<(AlgebraMap, AlgebraMap)> {
            let e = texts.iter().map(|p| c.element(p)).collect::<Result<Vec<_>>>()?;
            Ok((make_map(&dom, c, e[..2].to_vec())?, make_map(&dom, c, e[2..].to_vec())?))
        };
        let (f, g) = build(&full)?;
        let (fm, gm) = build(&mutated)?;
        let before = is_neighbour(&f, &g)?.holds();
        let after = is_neighbour(&fm, &gm)?.holds();
        if before != after {
            flips += 1;
        }
        // the oracle must follow the mutation too
        let oracle = eq1_on_monomials(&fm, &gm, ctx.degree())?.is_none();
        t.check(oracle == after, || format!("case {k}: oracle and decision disagree on the mutated algebra"));
        t.count("probes");
    }
    t.counts.insert("flipped", flips);
    t.check(flips > 0, || "removing e1*e2 changed no verdict".into());
    t.finish()
}

pub(crate) const FAMILIES: &[Family] = &[
    Family { name: "affine-composite", statement: "affine combinations of affine combinations are affine combinations", scope: Scope::PerFieldPN, run: affine_composite },
    Family { name: "affine-multiplicative", statement: "affine combinations of mutual neighbours are multiplicative", scope: Scope::PerFieldPN, run: affine_multiplicative },
    Family { name: "affine-multiplicative-presented", statement: "affine combinations of mutual neighbours are multiplicative, presented domains", scope: Scope::PerField, run: affine_multiplicative_presented },
    Family { name: "affine-naturality", statement: "postcomposition preserves affine combinations", scope: Scope::PerRing, run: affine_naturality },
    Family { name: "affine-neighbours", statement: "any two affine combinations of mutual neighbours are neighbours", scope: Scope::PerFieldPN, run: affine_neighbours },
    Family { name: "affine-rows", statement: "affine combinations of simplex rows are neighbours of the rows and of each other", scope: Scope::PerRing, run: affine_rows },
    Family { name: "canonical-map", statement: "the generic affine combination out of the universal simplex is a well-defined map", scope: Scope::PerFieldP, run: canonical },
    Family { name: "determinant", statement: "a D~(2,2) determinant equals twice the diagonal product", scope: Scope::PerField, run: determinant },
    Family { name: "dtilde-criterion", statement: "with a zero row, simplex iff both D~ equation families", scope: Scope::PerRing, run: dtilde_criterion },
    Family { name: "extension", statement: "appending a linear combination of rows stays in D~", scope: Scope::PerRingPN, run: extension },
    Family { name: "fail-injection", statement: "dropping one relation of a test algebra flips a verdict", scope: Scope::Single, run: fail_injection },
    Family { name: "kernel-generators", statement: "the kernel of multiplication is generated by 1⊗b - b⊗1", scope: Scope::PerRing, run: kernel_generators },
    Family { name: "minus-free", statement: "neighbour condition agrees with f(a)g(b) + g(a)f(b) = f(ab) + g(ab)", scope: Scope::PerRing, run: minus_free },
    Family { name: "non-transitivity", statement: "the neighbour relation is not transitive", scope: Scope::PerRing, run: non_transitivity },
    Family { name: "polynomial-kernel", statement: "P(Z) - P(Y) = Σ (Z_i - Y_i) Q_i for polynomial algebras", scope: Scope::PerRing, run: polynomial_kernel },
    Family { name: "polynomial-kernel-square", statement: "the square of the diagonal ideal of a polynomial algebra is generated by (Z_i - Y_i)(Z_j - Y_j)", scope: Scope::PerRing, run: polynomial_kernel_square },
    Family { name: "postcomposition", statement: "f ∼ g implies h∘f ∼ h∘g", scope: Scope::PerRing, run: postcomposition },
    Family { name: "precomposition", statement: "f ∼ g implies f∘h ∼ g∘h", scope: Scope::PerRing, run: precomposition },
    Family { name: "reflection", statement: "precomposition with a surjection preserves and reflects ∼", scope: Scope::PerRing, run: reflection },
    Family { name: "squares-counterexample", statement: "vanishing generator squares do not imply ∼: witness e1*e2 in k[e1,e2]/(e1^2, e2^2)", scope: Scope::Single, run: squares_counterexample },
    Family { name: "simplex-criterion", statement: "rows form a simplex iff (a_ij - a_i'j)(a_ij' - a_i'j') = 0", scope: Scope::PerRing, run: simplex_criterion },
    Family { name: "square-zero", statement: "squares of differences decide ∼ when 2 is a unit, and only then", scope: Scope::PerRing, run: square_zero },
    Family { name: "symmetry", statement: "∼ is reflexive and symmetric", scope: Scope::PerRing, run: symmetry },
    Family { name: "transposition", statement: "transposition maps D~(p,n) into D~(n,p)", scope: Scope::PerRingPN, run: transposition },
    Family { name: "universal-pair", statement: "a pair factors through (B ⊗ B)/J^2 exactly when it is a neighbour pair", scope: Scope::PerRing, run: universal_pair },
    Family { name: "vector-criterion", statement: "maps out of a polynomial algebra are neighbours iff (b_i - a_i)(b_j - a_j) = 0", scope: Scope::PerRing, run: vector_criterion },
];

/// Name of the meta-check comparing executed ids with the registry.
pub(crate) const COVERAGE: &str = "coverage";
