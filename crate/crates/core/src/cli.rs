//! Command-line front end.
//!
//! Exit codes: 0 when the answer is yes or the command succeeded, 1 when the
//! answer is no, 2 on usage, parse and input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{
    format_presentation, parse_presentation_with, tensor, universal_simplex, AlgebraElement, AlgebraMap, FpAlgebra,
};
use crate::arith::RingSpec;
use crate::error::{Error, Result};
use crate::ideal::{buchberger_with_bound, DEFAULT_DEGREE_BOUND};
use crate::neighbour::{
    affine_combination_rows, decompose_difference, extend_matrix, in_dtilde, is_neighbour, is_simplex, matrix_domain,
    rewrite_kernel_element, CoefficientVector, SimplexMatrix,
};
use crate::poly::{parse_poly, MonomialOrder, VarSet};
use crate::verify::{emit_report, run_suite, to_json, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "nbhd", version, about = "Neighbour relation for finitely presented commutative algebras")]
pub struct Cli {
    /// Machine-readable output on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Degree bound for Groebner computations.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_BOUND)]
    degree_bound: u32,
    #[arg(long, global = true, default_value = "degrevlex", value_parser = parse_order)]
    order: MonomialOrder,
    #[command(subcommand)]
    command: Command,
}

fn parse_order(s: &str) -> std::result::Result<MonomialOrder, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Args, Debug)]
struct AlgebraArg {
    /// Presentation file.
    #[arg(long)]
    algebra: PathBuf,
}

#[derive(Args, Debug)]
struct MatrixArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    /// Matrix file: one row per line, entries separated by `,`.
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of a polynomial in an algebra.
    Nf {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        poly: String,
    },
    /// Reduced Groebner basis of the relations.
    Gb {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Decide whether two maps are neighbours.
    Neighbour {
        /// Codomain presentation.
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Domain presentation; defaults to a polynomial algebra on as many variables as images.
        #[arg(long)]
        domain: Option<PathBuf>,
        /// Images of the first map, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Decide whether the rows of a matrix are mutual neighbours.
    Simplex(MatrixArgs),
    /// Check the D~(p,n) equations.
    Dtilde(MatrixArgs),
    /// Affine combination of the rows of a simplex.
    Affine {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// One coefficient per row, comma separated, summing to 1.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Write P(Z) - P(Y) as a combination of the differences, or rewrite a kernel element.
    Decompose {
        /// Polynomial: requires --ring and --vars.
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, default_value = "Q")]
        ring: String,
        /// Variable names, space or comma separated.
        #[arg(long)]
        vars: Option<String>,
        /// Element of B ⊗ B in the copy variables `X_0`, `X_1`; requires --algebra.
        #[arg(long, allow_hyphen_values = true)]
        kernel: Option<String>,
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Append the row Σ c_i row_i to a D~ matrix.
    Extend {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Presentation of the universal infinitesimal p-simplex on an algebra.
    Universal {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value_t = 1)]
        p: usize,
    },
    /// Run the check suite.
    Verify {
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long)]
        p_max: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        /// Monomial degree for exhaustive checks.
        #[arg(long)]
        max_degree: Option<u32>,
        /// Comma separated subset of Q,Z,Z/2,Z/3,Z/5.
        #[arg(long)]
        rings: Option<String>,
        /// Record elapsed milliseconds per check.
        #[arg(long)]
        timings: bool,
    },
}

/// Result of a command: exit status, text, JSON.
struct Reply {
    ok: bool,
    text: String,
    json: Value,
}

impl Reply {
    fn yes(text: impl Into<String>, json: Value) -> Self {
        Reply { ok: true, text: text.into(), json }
    }

    fn verdict(ok: bool, text: impl Into<String>, json: Value) -> Self {
        Reply { ok, text: text.into(), json }
    }
}

/// A mathematical no, as opposed to bad input.
fn is_negative_answer(e: &Error) -> bool {
    matches!(e, Error::NotNeighbours { .. } | Error::NotInDtilde(_) | Error::NotInKernel(_))
}

struct Env {
    order: MonomialOrder,
    degree_bound: u32,
}

impl Env {
    fn load(&self, path: &Path) -> Result<FpAlgebra> {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        parse_presentation_with(&text, self.order, self.degree_bound)
    }

    fn matrix(&self, args: &MatrixArgs) -> Result<SimplexMatrix> {
        let c = self.load(&args.algebra.algebra)?;
        let text = fs::read_to_string(&args.matrix).map_err(|e| Error::Io(format!("{}: {e}", args.matrix.display())))?;
        SimplexMatrix::parse(&c, &text)
    }
}

fn split_entries(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).collect()
}

fn strings(xs: &[AlgebraElement]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn matrix_json(m: &SimplexMatrix) -> Value {
    Value::from(m.rows().iter().map(|r| Value::from(strings(r))).collect::<Vec<_>>())
}

fn dispatch(cli: &Cli) -> Result<Reply> {
    let env = Env { order: cli.order, degree_bound: cli.degree_bound };
    match &cli.command {
        Command::Nf { algebra, poly } => {
            let a = env.load(&algebra.algebra)?;
            let x = a.parse(poly)?;
            Ok(Reply::yes(x.to_string(), json!({ "normal_form": x.to_string() })))
        }
        Command::Gb { algebra } => {
            let a = env.load(&algebra.algebra)?;
            let gb = buchberger_with_bound(a.relations(), cli.order, cli.degree_bound)?;
            let basis: Vec<String> = gb.basis().iter().map(|p| p.to_string()).collect();
            Ok(Reply::yes(basis.join("\n"), json!({ "order": cli.order.to_string(), "basis": basis })))
        }
        Command::Neighbour { algebra, domain, a, b } => {
            let c = env.load(&algebra.algebra)?;
            let (ta, tb) = (split_entries(a), split_entries(b));
            let dom = match domain {
                Some(p) => env.load(p)?,
                None => matrix_domain(c.ring(), ta.len()),
            };
            let f = AlgebraMap::parse(&dom, &c, &ta)?;
            let g = AlgebraMap::parse(&dom, &c, &tb)?;
            let v = is_neighbour(&f, &g)?;
            Ok(match &v.witness {
                None => Reply::verdict(true, "neighbours", json!({ "neighbours": true })),
                Some(w) => Reply::verdict(
                    false,
                    format!("not neighbours: {w}"),
                    json!({ "neighbours": false, "witness": { "i": w.i + 1, "j": w.j + 1, "value": w.value.to_string() } }),
                ),
            })
        }
        Command::Simplex(args) => {
            let m = env.matrix(args)?;
            let v = is_simplex(&m);
            Ok(match &v.witness {
                None => Reply::verdict(true, "simplex", json!({ "simplex": true })),
                Some(w) => Reply::verdict(
                    false,
                    format!("not a simplex: {w}"),
                    json!({ "simplex": false, "witness": {
                        "rows": [w.i + 1, w.i2 + 1], "columns": [w.j + 1, w.j2 + 1], "value": w.value.to_string() } }),
                ),
            })
        }
        Command::Dtilde(args) => {
            let m = env.matrix(args)?;
            let v = in_dtilde(&m);
            let part = |w: &Option<_>| match w {
                None => Value::Null,
                Some(w) => Value::from(format!("{w}")),
            };
            let json = json!({ "member": v.holds(), "ggx": part(&v.ggx), "ffx": part(&v.ffx), "ffx_implied": v.ffx_implied });
            let text = if v.holds() {
                "in D~".to_string()
            } else {
                let mut reasons = Vec::new();
                if let Some(w) = &v.ggx {
                    reasons.push(format!("cross equation {w}"));
                }
                if let Some(w) = &v.ffx {
                    reasons.push(format!("same-row equation {w}"));
                }
                format!("not in D~: {}", reasons.join("; "))
            };
            Ok(Reply::verdict(v.holds(), text, json))
        }
        Command::Affine { matrix, coeffs } => {
            let m = env.matrix(matrix)?;
            let t = CoefficientVector::parse(m.codomain(), &split_entries(coeffs))?;
            let row = strings(&affine_combination_rows(&m, &t)?);
            Ok(Reply::yes(row.join(", "), json!({ "combination": row })))
        }
        Command::Decompose { poly, ring, vars, kernel, algebra } => match (poly, kernel) {
            (Some(p), None) => {
                let ring: RingSpec = ring.parse()?;
                let names = vars.as_deref().ok_or_else(|| Error::InvalidConfig("--poly needs --vars".into()))?;
                let vs = VarSet::new(names.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()))?;
                let d = decompose_difference(&parse_poly(p, &vs, ring)?)?;
                let qs: Vec<String> = d.quotients.iter().map(|q| q.to_string()).collect();
                let text: Vec<String> = vs.names().iter().zip(&qs).map(|(x, q)| format!("{x}: {q}")).collect();
                Ok(Reply::yes(text.join("\n"), json!({ "variables": d.varset.names(), "quotients": qs })))
            }
            (None, Some(k)) => {
                let path = algebra.as_ref().ok_or_else(|| Error::InvalidConfig("--kernel needs --algebra".into()))?;
                let b = env.load(path)?;
                let bb = tensor(&b, &b)?;
                let t = bb.algebra.parse(k)?;
                let terms = rewrite_kernel_element(&b, &t)?;
                let text: Vec<String> = terms.iter().map(|k| format!("({}) * ({})", k.coefficient, k.generator)).collect();
                let json_terms: Vec<Value> = terms
                    .iter()
                    .map(|k| json!({ "coefficient": k.coefficient.to_string(), "base": k.base.to_string(), "generator": k.generator.to_string() }))
                    .collect();
                let text = if text.is_empty() { "0".to_string() } else { text.join(" + ") };
                Ok(Reply::yes(text, json!({ "terms": json_terms })))
            }
            _ => Err(Error::InvalidConfig("give exactly one of --poly and --kernel".into())),
        },
        Command::Extend { matrix, coeffs } => {
            let m = env.matrix(matrix)?;
            let c = split_entries(coeffs).iter().map(|s| m.codomain().parse(s)).collect::<Result<Vec<_>>>()?;
            let x = extend_matrix(&m, &c)?;
            Ok(Reply::yes(x.to_string(), json!({ "matrix": matrix_json(&x) })))
        }
        Command::Universal { algebra, p } => {
            let b = env.load(&algebra.algebra)?;
            let u = universal_simplex(&b, *p)?;
            let vertices: Vec<String> = u.vertices.iter().map(|v| v.to_string()).collect();
            let mut text = format_presentation(&u.algebra);
            for (r, v) in vertices.iter().enumerate() {
                text.push_str(&format!("vertex {r}: {v}\n"));
            }
            let gens: Vec<String> = u.algebra.relations().generators().iter().map(|r| r.to_string()).collect();
            Ok(Reply::yes(
                text.trim_end().to_string(),
                json!({ "ring": u.algebra.ring().to_string(), "vars": u.algebra.varset().names(), "relations": gens, "vertices": vertices }),
            ))
        }
        Command::Verify { .. } => unreachable!("handled by run_verify"),
    }
}

fn run_verify(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let Command::Verify { cases, p_max, n_max, max_degree, rings, timings } = &cli.command else {
        unreachable!()
    };
    let mut cfg = SuiteConfig::new(cli.seed).with_timings(*timings);
    cfg = cfg.clone().with_bounds(p_max.unwrap_or(cfg.p_max()), n_max.unwrap_or(cfg.n_max()), max_degree.unwrap_or(cfg.degree_bound()))?;
    if let Some(n) = cases {
        cfg = cfg.with_case_count(*n)?;
    }
    if let Some(r) = rings {
        let rings = split_entries(r).iter().map(|s| s.parse()).collect::<Result<Vec<RingSpec>>>()?;
        cfg = cfg.with_rings(&rings)?;
    }
    let report = run_suite(&cfg);
    let bytes = emit_report(&report, if cli.json { "json" } else { "text" })?;
    out.write_all(&bytes)?;
    if cli.json {
        out.write_all(b"\n")?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn error_json(e: &str, kind: &str) -> Vec<u8> {
    let mut v = to_json(&json!({ "error": e, "kind": kind }));
    v.push(b'\n');
    v
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let wants_json = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            if wants_json {
                let _ = out.write_all(&error_json(&e.kind().to_string(), "usage"));
            }
            return 2;
        }
    };
    let result = if matches!(cli.command, Command::Verify { .. }) {
        run_verify(&cli, out)
    } else {
        dispatch(&cli).and_then(|reply| {
            if cli.json {
                let mut v = reply.json;
                if let Value::Object(map) = &mut v {
                    map.insert("ok".into(), Value::from(reply.ok));
                }
                out.write_all(&to_json(&v))?;
                out.write_all(b"\n")?;
            } else {
                writeln!(out, "{}", reply.text)?;
            }
            Ok(if reply.ok { 0 } else { 1 })
        })
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let negative = is_negative_answer(&e);
            let _ = writeln!(err, "{e}");
            if cli.json {
                let _ = out.write_all(&error_json(&e.to_string(), if negative { "negative" } else { "input" }));
            } else if negative {
                let _ = writeln!(out, "{e}");
            }
            if negative {
                1
            } else {
                2
            }
        }
    }
}
