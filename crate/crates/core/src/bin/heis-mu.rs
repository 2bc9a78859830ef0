use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use heis_mu::jordan::jordan_chevalley;
use heis_mu::json::{
    family_from_json, matrix_from_json, representation_from_json, LieAlgebraJson, MatrixJson,
    RepresentationJson, SchurJson,
};
use heis_mu::schur::{schur_bound_check, schur_decompose, verify_schur};
use heis_mu::suite::{run_all, SuiteConfig, DEFAULT_SEED};
use heis_mu::{
    current_algebra, direct_sum, heisenberg, make_ab, min_sum, mu_formula, pi_ab, AbPair, Error,
    Polynomial, QuotientAlgebra, Result,
};

/// Minimal faithful representations of current Heisenberg Lie algebras.
#[derive(Parser, Debug)]
#[command(name = "heis-mu", version)]
struct Cli {
    /// Indent the JSON report.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// mu(h_{m,p}), the optimal (a, b) and dim h_{m,p}.
    Mu(AlgebraArgs),
    /// Build pi_{A,B} and write it as JSON.
    Construct(ConstructArgs),
    /// Check a representation file for the homomorphism property and faithfulness.
    Verify { path: PathBuf },
    /// Jordan-Chevalley decomposition of a matrix file.
    Jordan { path: PathBuf },
    /// Schur decomposition of a commuting nilpotent family file.
    Schur { path: PathBuf },
    /// Lie algebra constructions.
    Lie {
        #[command(subcommand)]
        command: LieCommand,
    },
    /// Run the acceptance grid.
    Suite {
        /// d <= 4, m <= 2 and fewer random samples.
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum LieCommand {
    /// Build h_m ⊗ k[t]/(p), or the direct sum over several -p values.
    Build {
        #[arg(short)]
        m: usize,
        #[arg(short, required = true)]
        p: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
struct AlgebraArgs {
    #[arg(short)]
    m: usize,
    #[arg(short)]
    p: String,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    #[arg(short, requires = "b")]
    a: Option<usize>,
    #[arg(short, requires = "a")]
    b: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    inputs: Value,
    results: Value,
    elapsed_ms: u128,
}

/// Report body plus whether every check in it passed.
struct Outcome {
    inputs: Value,
    results: Value,
    ok: bool,
}

fn parse_modulus(s: &str) -> Result<QuotientAlgebra> {
    let p: Polynomial = s.parse()?;
    QuotientAlgebra::new(&p)
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    Ok(())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn write(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn cmd_mu(args: &AlgebraArgs) -> Result<Outcome> {
    check_m(args.m)?;
    let q = parse_modulus(&args.p)?;
    let d = q.dim() as u64;
    let (a, b) = min_sum(d)?;
    Ok(Outcome {
        inputs: json!({ "m": args.m, "p": q.modulus().to_string() }),
        results: json!({
            "mu": mu_formula(args.m as u64, d)?,
            "a": a,
            "b": b,
            "deg_p": d,
            "dim": (2 * args.m as u64 + 1) * d,
        }),
        ok: true,
    })
}

fn cmd_construct(args: &ConstructArgs) -> Result<Outcome> {
    let m = args.algebra.m;
    check_m(m)?;
    let q = parse_modulus(&args.algebra.p)?;
    let d = q.dim();
    let (a, b) = match (args.a, args.b) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            let (a, b) = min_sum(d as u64)?;
            (a as usize, b as usize)
        }
    };
    let pair: AbPair = make_ab(d, a, b)?;
    let rep = pi_ab(m, &q, &pair)?;
    let homomorphism = rep.check_homomorphism();
    let faithful = rep.is_faithful()?;
    let mut results = json!({
        "degree": rep.degree(),
        "a": a,
        "b": b,
        "homomorphism": homomorphism,
        "faithful": faithful,
    });
    match &args.out {
        Some(path) => {
            write(
                path,
                &serde_json::to_string(&RepresentationJson::from(&rep)).expect("serializable"),
            )?;
            results["out"] = json!(path.display().to_string());
        }
        None => results["representation"] = to_value(&RepresentationJson::from(&rep)),
    }
    Ok(Outcome {
        inputs: json!({ "m": m, "p": q.modulus().to_string(), "a": args.a, "b": args.b }),
        results,
        ok: homomorphism,
    })
}

fn cmd_verify(path: &Path) -> Result<Outcome> {
    let rep = representation_from_json(&read(path)?)?;
    let homomorphism = rep.check_homomorphism();
    let faithful = rep.is_faithful().unwrap_or(false);
    Ok(Outcome {
        inputs: json!({ "path": path.display().to_string() }),
        results: json!({
            "dim": rep.algebra().dim(),
            "degree": rep.degree(),
            "homomorphism": homomorphism,
            "faithful": faithful,
        }),
        ok: homomorphism && faithful,
    })
}

fn cmd_jordan(path: &Path) -> Result<Outcome> {
    let m = matrix_from_json(&read(path)?)?;
    let pair = jordan_chevalley(&m)?;
    let (s, n) = (&pair.semisimple, &pair.nilpotent);
    let sum_ok = (s + n) == m;
    let commute = s.commutator(n).is_zero();
    let nilpotent = n.is_nilpotent()?;
    let squarefree = s.minimal_polynomial()?.is_squarefree();
    Ok(Outcome {
        inputs: json!({ "path": path.display().to_string() }),
        results: json!({
            "S": to_value(&MatrixJson::from(s)),
            "N": to_value(&MatrixJson::from(n)),
            "sum": sum_ok,
            "commute": commute,
            "nilpotent": nilpotent,
            "semisimple": squarefree,
        }),
        ok: sum_ok && commute && nilpotent && squarefree,
    })
}

fn cmd_schur(path: &Path) -> Result<Outcome> {
    let (family, distinguished) = family_from_json(&read(path)?)?;
    let dec = schur_decompose(&family, &distinguished)?;
    let verified = verify_schur(&family, &dec);
    let monotone = dec.blocks_non_increasing();
    let bound = schur_bound_check(&family);
    Ok(Outcome {
        inputs: json!({ "path": path.display().to_string() }),
        results: json!({
            "space_dim": family.space_dim(),
            "family_dim": family.dim(),
            "s": dec.len(),
            "block_dims": dec.block_dims(),
            "decomposition": to_value(&SchurJson::from(&dec)),
            "verified": verified,
            "monotone": monotone,
            "bound": bound,
        }),
        ok: verified && monotone && bound,
    })
}

fn cmd_lie_build(m: usize, ps: &[String], out: Option<&Path>) -> Result<Outcome> {
    check_m(m)?;
    let h = heisenberg(m)?;
    let quotients = ps
        .iter()
        .map(|p| parse_modulus(p))
        .collect::<Result<Vec<_>>>()?;
    let summands: Vec<_> = quotients.iter().map(|q| current_algebra(&h, q)).collect();
    let g = direct_sum(&summands);
    let nilpotent = g.is_nilpotent();
    let mut results = json!({
        "dim": g.dim(),
        "center_dim": g.center().dim(),
        "derived_dim": g.derived().dim(),
        "nilpotent": nilpotent,
    });
    match out {
        Some(path) => {
            write(
                path,
                &serde_json::to_string(&LieAlgebraJson::from(&g)).expect("serializable"),
            )?;
            results["out"] = json!(path.display().to_string());
        }
        None => results["algebra"] = to_value(&LieAlgebraJson::from(&g)),
    }
    let ps: Vec<String> = quotients.iter().map(|q| q.modulus().to_string()).collect();
    Ok(Outcome {
        inputs: json!({ "m": m, "p": ps }),
        results,
        ok: nilpotent,
    })
}

fn cmd_suite(quick: bool, seed: u64) -> Result<Outcome> {
    let cfg = SuiteConfig { quick, seed };
    let reports = run_all(&cfg);
    for r in &reports {
        eprintln!("{}", r.summary_line());
    }
    let ok = reports.iter().all(|r| r.passed);
    let criteria: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "name": r.name,
                "passed": r.passed,
                "cases": r.cases,
                "failed": r.failed,
                "failures": r.failures,
            })
        })
        .collect();
    Ok(Outcome {
        inputs: to_value(&cfg),
        results: json!({ "passed": ok, "criteria": criteria }),
        ok,
    })
}

fn run(command: &Command) -> (String, Result<Outcome>) {
    match command {
        Command::Mu(args) => ("mu".into(), cmd_mu(args)),
        Command::Construct(args) => ("construct".into(), cmd_construct(args)),
        Command::Verify { path } => ("verify".into(), cmd_verify(path)),
        Command::Jordan { path } => ("jordan".into(), cmd_jordan(path)),
        Command::Schur { path } => ("schur".into(), cmd_schur(path)),
        Command::Lie {
            command: LieCommand::Build { m, p, out },
        } => ("lie build".into(), cmd_lie_build(*m, p, out.as_deref())),
        Command::Suite { quick, seed } => ("suite".into(), cmd_suite(*quick, *seed)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (command, outcome) = run(&cli.command);
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("heis-mu {command}: {e}");
            return ExitCode::from(2);
        }
    };
    let report = RunReport {
        command,
        inputs: outcome.inputs,
        results: outcome.results,
        elapsed_ms: start.elapsed().as_millis(),
    };
    let text = if cli.pretty {
        serde_json::to_string_pretty(&report)
    } else {
        serde_json::to_string(&report)
    }
    .expect("serializable");
    println!("{text}");
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
