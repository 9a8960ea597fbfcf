//! The `lgr` command line: every check as a deterministic report, with exit
//! codes 0 (pass), 1 (residual failure), 2 (malformed input), 3 (non-symmetric).

mod input;
mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::extalg::{basis_elements, dim_p, ladder_residuals};
use crate::fock::{ckp_null_residuals, FockVector};
use crate::grassmann::{
    check_reductions, lagrangian_linear_residuals, plucker_residuals, LagrangeCoefficients, RelationMode,
    ReductionStatus,
};
use crate::hyperdet::{core_residuals, gr36_coords, identity_chain_residuals};
use crate::kernel::Rat;
use crate::residual::Residual;
use crate::sample;
use crate::symfunc::{mn_apply, mn_dual, schur, SchurCombo};
use crate::tau::{ckp_residual, fay_residual, hirota_residual, FamilyEvaluator, TauPoly};

pub use input::{parse_partition, parse_rat_list, Source};
pub use report::{Outcome, Report};

#[derive(Parser, Debug)]
#[command(name = "lgr", version, about = "Exact checks on Lagrangian Grassmannians, hyperdeterminants and CKP tau-functions")]
pub struct Cli {
    /// Seed for every sampled point.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Weight bound for series and Fock truncations.
    #[arg(long, global = true, env = "LGR_TRUNCATION", default_value_t = 12)]
    pub truncation: usize,
    /// Number of sampled points per check.
    #[arg(long, global = true, default_value_t = 10)]
    pub samples: usize,
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default, Clone)]
pub struct InputArgs {
    /// `{"n": N, "affine": [[...]]}`; the plane is the graph of the matrix.
    #[arg(long)]
    pub affine: Option<PathBuf>,
    /// `{"n": N, "w": [[...]]}`, a 2N x N frame.
    #[arg(long)]
    pub subspace: Option<PathBuf>,
    /// `{"n": N, "plucker": [{"lambda": [...], "c": "p/q"}, ...]}`.
    #[arg(long)]
    pub plucker: Option<PathBuf>,
    /// A Fock vector as a list of `{"lambda", "n", "c"}` terms.
    #[arg(long)]
    pub fock: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// All principal minors of a symmetric matrix.
    Minors {
        /// Affine input file.
        file: PathBuf,
    },
    /// Evaluate one family of relations and report every nonzero residual.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[command(flatten)]
        input: InputArgs,
        /// Miwa parameters for `family`.
        #[arg(long, default_value = "1/2,1/3,1/5,1/7")]
        x: String,
        /// Lattice radius `|n_a| <= radius` for `family`.
        #[arg(long, default_value_t = 1)]
        radius: i64,
    },
    /// Dimensions of the Sp-isotypic pieces of the exterior algebra, with ladder checks.
    Decompose {
        #[arg(long)]
        n: usize,
        /// A single degree; all degrees when absent.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Contract-and-project every marked multi-index down to Gr(3,6).
    Reduce36 {
        #[command(flatten)]
        input: InputArgs,
    },
    /// A Schur polynomial in the times `t_1..t_m`.
    Schur {
        /// Partition, e.g. `2,1`.
        lambda: String,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Murnaghan–Nakayama: add (or with --dual remove) r-border strips.
    Mn {
        lambda: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        dual: bool,
    },
    /// τ-function construction.
    Tau {
        #[command(subcommand)]
        action: TauAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum TauAction {
    /// Build `τ = Σ π_λ s_λ` from a plane or a Plücker vector.
    Build {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        m: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Plucker,
    Lagrangian,
    Hyperdet,
    Chain,
    Fay,
    Family,
    Hirota,
    Ckp,
    Fock,
}

/// Parses `args` (including the program name), runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let out = cli.out.clone();
    let outcome = run(&cli);
    match out {
        Some(path) if outcome.error.is_none() => {
            if let Err(e) = std::fs::write(&path, &outcome.text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        _ => print!("{}", outcome.text),
    }
    if let Some(msg) = &outcome.error {
        eprintln!("error: {msg}");
    }
    outcome.code
}

/// Runs a parsed command; never panics on bad input.
pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(o) => o,
        Err(e) => Outcome::error(&e),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Minors { file } => cmd_minors(cli, file),
        Command::Check { kind, input, x, radius } => cmd_check(cli, *kind, input, x, *radius),
        Command::Decompose { n, k } => cmd_decompose(cli, *n, *k),
        Command::Reduce36 { input } => cmd_reduce36(cli, input),
        Command::Schur { lambda, m } => {
            let lam = parse_partition(lambda)?;
            let p = schur(&lam, m.unwrap_or(lam.weight()))?;
            Ok(Outcome::data(cli.json, &p, format!("s_{lam} = {p}\n")))
        }
        Command::Mn { lambda, r, dual } => {
            if *r == 0 {
                return Err(Error::InvalidArgument("r must be positive".into()));
            }
            let c = SchurCombo::single(parse_partition(lambda)?);
            let out = if *dual { mn_dual(*r, &c) } else { mn_apply(*r, &c) };
            let text = if out.is_empty() {
                "0\n".to_string()
            } else {
                let parts: Vec<String> = out.iter().map(|(l, v)| format!("({v}) s_{l}")).collect();
                format!("{}\n", parts.join(" + "))
            };
            Ok(Outcome::data(cli.json, &out, text))
        }
        Command::Tau { action: TauAction::Build { input, m } } => {
            let src = Source::load(input)?;
            let mut tau = src.tau(false)?;
            if let Some(m) = m {
                tau = TauPoly::from_plucker(&tau.source, *m)?;
            }
            let text = format!("tau (N = {}, m = {}) = {}\n", tau.n, tau.m(), tau.poly);
            Ok(Outcome::data(cli.json, &tau, text))
        }
    }
}

fn cmd_minors(cli: &Cli, file: &Path) -> Result<Outcome> {
    let a = input::load_affine(file)?;
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = a.rows();
    let values = crate::grassmann::subsets_by_size(n)
        .into_iter()
        .map(|j| {
            let idx: Vec<usize> = j.iter().map(|x| x - 1).collect();
            let v = a.minor(&idx, &idx)?;
            Ok((j, v))
        })
        .collect::<Result<Vec<_>>>()?;
    let l = LagrangeCoefficients::from_values(n, values)?;
    let mut text = String::new();
    for (j, v) in l.values() {
        let label = if j.is_empty() { "{}".to_string() } else { crate::grassmann::lagrange::subset_label(j) };
        text.push_str(&format!("L_{label:<8} {v}\n"));
    }
    Ok(Outcome::data(cli.json, &l, text))
}

fn poly_residuals(name: &str, p: &crate::kernel::SymPoly) -> Vec<Residual> {
    if p.is_zero() {
        return vec![Residual::new(name, Rat::zero())];
    }
    p.terms().map(|(e, c)| Residual::new(format!("{name} coeff {e:?}"), c.clone())).collect()
}

fn fock_residuals(name: &str, v: &FockVector) -> Vec<Residual> {
    if v.is_zero() {
        return vec![Residual::new(name, Rat::zero())];
    }
    v.iter().map(|(s, c)| Residual::new(format!("{name} at |{};{}>", s.lambda, s.n), c.clone())).collect()
}

fn cmd_check(cli: &Cli, kind: CheckKind, input: &InputArgs, x: &str, radius: i64) -> Result<Outcome> {
    let src = Source::load(input)?;
    let title = format!("check {}", format!("{kind:?}").to_lowercase());
    let mut rng = sample::rng(cli.seed);
    let mut data = None;
    let residuals: Vec<Residual> = match kind {
        CheckKind::Plucker => plucker_residuals(&src.plucker()?, RelationMode::Full),
        CheckKind::Lagrangian => {
            let pi = src.plucker()?;
            let mut rs = plucker_residuals(&pi, RelationMode::Full);
            rs.extend(lagrangian_linear_residuals(&pi));
            rs
        }
        CheckKind::Hyperdet => {
            let l = match &src {
                Source::Affine(a) if !a.is_symmetric() => return Err(Error::NotSymmetric),
                _ => LagrangeCoefficients::from_plucker(&src.plucker()?).normalized(),
            };
            core_residuals(&l)
        }
        CheckKind::Chain => {
            let phi = src.wedge()?;
            if phi.n() != 3 {
                return Err(Error::InvalidArgument(format!("the identity chain lives on Gr(3,6); got N = {}", phi.n())));
            }
            let g = gr36_coords(&phi)?;
            let mut rs = g.consistency.clone();
            rs.extend(identity_chain_residuals(&g.coords));
            rs
        }
        CheckKind::Fay => {
            let tau = src.tau(false)?;
            let mut rs = Vec::new();
            for s in 0..cli.samples {
                let (t, xs, ys) = fay_point(&mut rng, &tau);
                for k in 1..=3 {
                    let r = fay_residual(&tau, &t, &xs[..k], &ys[..k])?;
                    rs.push(Residual::new(format!("fay k={k} sample={s}"), r));
                }
            }
            rs
        }
        CheckKind::Family => {
            let tau = src.tau(true)?;
            let xs = parse_rat_list(x)?;
            if xs.len() < 3 {
                return Err(Error::InvalidArgument("family needs at least three Miwa parameters".into()));
            }
            if radius < 0 {
                return Err(Error::InvalidArgument("radius must be nonnegative".into()));
            }
            if !tau.is_ckp() {
                return Err(Error::Precondition("τ is not CKP-symmetric".into()));
            }
            let mut rs = Vec::new();
            let mut rows = Vec::new();
            let mut skipped = 0usize;
            for s in 0..cli.samples.max(1) {
                let tp = odd_point(&mut rng, 2 * tau.n, &tau);
                let mut ev = FamilyEvaluator::new_unchecked(&tau, &tp, &xs)?;
                for triple in triples(xs.len()) {
                    for n in lattice(xs.len(), radius) {
                        // σ is undefined where τ vanishes at the base point
                        if ev.tau_at(&n).is_zero() {
                            skipped += 1;
                            continue;
                        }
                        let r = ev.residual(&n, triple)?;
                        rows.push(json!({"sample": s, "triple": triple, "n": n, "residual": r}));
                        rs.push(Residual::new(format!("family sample={s} triple={triple:?} n={n:?}"), r));
                    }
                }
            }
            data = Some(json!({"evaluated": rows.len(), "skipped": skipped, "instances": rows}));
            rs
        }
        CheckKind::Hirota => {
            let tau = src.tau(false)?;
            let mut rs = Vec::new();
            for s in 0..cli.samples {
                let t: Vec<Rat> = (0..2 * tau.n).map(|_| sample::rat(&mut rng, 9)).collect();
                let dt: Vec<Rat> = (0..3).map(|_| sample::rat(&mut rng, 9)).collect();
                rs.push(Residual::new(format!("hirota sample={s}"), hirota_residual(&tau, &t, &dt, cli.truncation)?));
            }
            rs
        }
        CheckKind::Ckp => {
            let tau = src.tau(false)?;
            let rep = ckp_residual(&tau);
            let mut rs = poly_residuals("tau(t)-tau(t~)", &rep.symmetry);
            for (k, p) in &rep.even_derivatives {
                rs.extend(poly_residuals(&format!("d tau/d t{k} at even times 0"), p));
            }
            let v = FockVector::from_plucker(&tau.source);
            for (name, res) in ckp_null_residuals(&v, cli.truncation)? {
                rs.extend(fock_residuals(&name, &res));
            }
            rs
        }
        CheckKind::Fock => {
            let v = match &src {
                Source::Fock(v) => v.clone(),
                _ => FockVector::from_plucker(&src.plucker()?),
            };
            let mut rs = Vec::new();
            for (name, res) in ckp_null_residuals(&v, cli.truncation)? {
                rs.extend(fock_residuals(&name, &res));
            }
            rs
        }
    };
    Ok(Report::from_residuals(title, &residuals, data).into_outcome(cli.json))
}

fn triples(k: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=k {
        for b in a + 1..=k {
            for c in b + 1..=k {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn lattice(k: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out.into_iter().flat_map(|v| (-radius..=radius).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

/// A point with vanishing even times where τ is nonzero.
fn odd_point(rng: &mut sample::SampleRng, len: usize, tau: &TauPoly) -> Vec<Rat> {
    loop {
        let t: Vec<Rat> = (1..=len).map(|j| if j % 2 == 1 { sample::rat(rng, 9) } else { Rat::zero() }).collect();
        if !tau.eval(&t).is_zero() {
            return t;
        }
    }
}

fn fay_point(rng: &mut sample::SampleRng, tau: &TauPoly) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    loop {
        let t: Vec<Rat> = (0..2 * tau.n).map(|_| sample::rat(rng, 9)).collect();
        let xs: Vec<Rat> = (0..3).map(|_| sample::nonzero_rat(rng, 9)).collect();
        let ys: Vec<Rat> = (0..3).map(|_| sample::nonzero_rat(rng, 9)).collect();
        let clash = xs.iter().any(|a| ys.contains(a));
        if !clash && !tau.eval(&t).is_zero() {
            return (t, xs, ys);
        }
    }
}

fn cmd_decompose(cli: &Cli, n: usize, k: Option<usize>) -> Result<Outcome> {
    if n == 0 || n > 5 {
        return Err(Error::InvalidArgument(format!("decompose supports 1 <= N <= 5, got {n}")));
    }
    let degrees: Vec<usize> = match k {
        Some(k) if k > 2 * n => return Err(Error::InvalidArgument(format!("degree {k} exceeds 2N = {}", 2 * n))),
        Some(k) => vec![k],
        None => (0..=2 * n).collect(),
    };
    let mut residuals = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for k in degrees {
        let mut dims = Vec::new();
        let mut total = 0u64;
        for j in (0..=k / 2).filter(|&j| k <= n + j) {
            let elems = basis_elements(n, k, j)?;
            let d = elems.len() as u64;
            total += d;
            residuals.push(Residual::new(format!("dim P^{k}_{} N={n}", k - 2 * j), Rat::from_int(d as i64 - dim_p(n, k, j) as i64)));
            let mut bad = 0i64;
            for b in &elems {
                let (up, down) = ladder_residuals(b)?;
                bad += i64::from(!up.is_zero()) + i64::from(!down.is_zero());
            }
            residuals.push(Residual::new(format!("ladder P^{k}_{} N={n}", k - 2 * j), Rat::from_int(bad)));
            dims.push(json!({"j": j, "degree": k - 2 * j, "dim": d}));
        }
        let c = binomial(2 * n as i64, k as i64);
        residuals.push(Residual::new(format!("total k={k} N={n}"), Rat::from_int(total as i64 - c as i64)));
        let parts: Vec<String> =
            dims.iter().map(|d| format!("P^{k}_{}={}", d["degree"], d["dim"])).collect();
        text.push_str(&format!("k={k}: {}  (total {total} = C({},{k}) = {c})\n", parts.join(" "), 2 * n));
        rows.push(json!({"k": k, "dims": dims, "total": total, "binomial": c}));
    }
    let report = Report::from_residuals(format!("decompose N={n}"), &residuals, Some(json!(rows)));
    let mut o = report.into_outcome(cli.json);
    if !cli.json {
        o.text = text + &o.text;
    }
    Ok(o)
}

fn cmd_reduce36(cli: &Cli, input: &InputArgs) -> Result<Outcome> {
    let phi = Source::load(input)?.wedge()?;
    if phi.n() < 3 {
        return Err(Error::InvalidArgument(format!("reduce36 needs N >= 3, got {}", phi.n())));
    }
    let reports = check_reductions(&phi)?;
    let mut residuals = Vec::new();
    let mut text = String::new();
    for r in &reports {
        let status = match r.status {
            ReductionStatus::Pass => "pass",
            ReductionStatus::Fail => "FAIL",
            ReductionStatus::Inconclusive => "inconclusive",
        };
        text.push_str(&format!("{:<40} {status}\n", format!("marking {}", r.marking)));
        residuals.extend(r.residuals.iter().map(|x| Residual::new(format!("marking {} {}", r.marking, x.relation), x.residual.clone())));
    }
    let report = Report::from_residuals("reduce36".into(), &residuals, Some(serde_json::to_value(&reports)?));
    let mut o = report.into_outcome(cli.json);
    if !cli.json {
        o.text = text + &o.text;
    }
    Ok(o)
}

#[cfg(test)]
mod tests;
