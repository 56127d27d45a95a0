//! `dkp` — build, verify, decompose and cross-check DKP representations
//! from the command line, emitting deterministic JSON certificates.
//!
//! Exit codes: 0 = every check passed, 1 = a mathematical check failed,
//! 2 = usage or input error.

mod paper;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use dkp_core::analysis::{decompose, intertwiner, is_irreducible, unitarize};
use dkp_core::gaussian::parse_rational;
use dkp_core::json::{representation_from_str, representation_to_string};
use dkp_core::planewave::{
    field_map_check, kg_relations_check, proca_relations_check, solution_space, Momentum,
};
use dkp_core::projectors::{
    build_projectors, verify_orthogonality, verify_r01_scalar, verify_rels_1p1,
    verify_scalar_covariance, verify_vector_covariance, VectorFamily,
};
use dkp_core::report::{Check, CheckStatus, Report};
use dkp_core::reps::{
    build_gamma, build_kronecker_rep, build_scalar_rep, build_vector_rep, builtin_irrep_1p1,
    verify_clifford, verify_dkp, GammaBasis, Representation,
};

use report::CliReport;

#[derive(Parser)]
#[command(
    name = "dkp",
    version,
    about = "Exact DKP-algebra representation toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a named representation and write it as JSON.
    Build {
        /// Which representation to build.
        #[arg(value_enum)]
        rep_name: RepName,
        /// Spacetime dimension for scalar-D / vector-D.
        #[arg(long = "D")]
        d: Option<usize>,
        /// Output path.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Run a verification suite on a representation file.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Decompose a representation into invariant blocks.
    Decompose { file: PathBuf },
    /// Decide equivalence of two representations.
    Equiv { file_a: PathBuf, file_b: PathBuf },
    /// Plane-wave analysis at a given momentum and mass.
    Planewave {
        file: PathBuf,
        /// Comma-separated contravariant components p^0,p^1,...
        #[arg(long)]
        p: String,
        /// Mass (positive rational).
        #[arg(long)]
        m: String,
    },
    /// Run the full reproduction suite.
    Paper {
        /// Print the JSON report instead of per-check lines.
        #[arg(long)]
        json: bool,
        /// Self-test: corrupt a builtin matrix and confirm the suite fails.
        #[arg(long, hide = true)]
        selftest_corrupt: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RepName {
    Dirac2,
    Dirac4,
    Kron2,
    #[value(name = "kron2-nohalf")]
    Kron2Nohalf,
    Kron4,
    #[value(name = "irrep1p1")]
    Irrep1p1,
    #[value(name = "scalar-D")]
    ScalarD,
    #[value(name = "vector-D")]
    VectorD,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Algebra,
    Projectors,
    All,
}

/// A usage or input problem: message to stderr, exit code 2.
struct UsageError(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Build { rep_name, d, out } => cmd_build(rep_name, d, &out),
        Command::Verify { file, suite } => cmd_verify(&file, suite),
        Command::Decompose { file } => cmd_decompose(&file),
        Command::Equiv { file_a, file_b } => cmd_equiv(&file_a, &file_b),
        Command::Planewave { file, p, m } => cmd_planewave(&file, &p, &m),
        Command::Paper {
            json,
            selftest_corrupt,
        } => cmd_paper(json, selftest_corrupt),
    };
    match outcome {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn build_named(rep_name: RepName, d: Option<usize>) -> Result<Representation, UsageError> {
    let need_d =
        || d.ok_or_else(|| UsageError("--D is required for scalar-D and vector-D".to_string()));
    let rep = match rep_name {
        RepName::Dirac2 => build_gamma(GammaBasis::Dirac2),
        RepName::Dirac4 => build_gamma(GammaBasis::Dirac4),
        RepName::Kron2 => build_kronecker_rep(&build_gamma(GammaBasis::Dirac2), true)
            .map_err(|e| UsageError(e.to_string()))?,
        RepName::Kron2Nohalf => build_kronecker_rep(&build_gamma(GammaBasis::Dirac2), false)
            .map_err(|e| UsageError(e.to_string()))?,
        RepName::Kron4 => build_kronecker_rep(&build_gamma(GammaBasis::Dirac4), true)
            .map_err(|e| UsageError(e.to_string()))?,
        RepName::Irrep1p1 => builtin_irrep_1p1(),
        RepName::ScalarD => build_scalar_rep(need_d()?).map_err(|e| UsageError(e.to_string()))?,
        RepName::VectorD => build_vector_rep(need_d()?).map_err(|e| UsageError(e.to_string()))?,
    };
    Ok(rep)
}

fn cmd_build(rep_name: RepName, d: Option<usize>, out: &Path) -> Result<ExitCode, UsageError> {
    let rep = build_named(rep_name, d)?;
    let contents = representation_to_string(&rep);
    std::fs::write(out, contents + "\n")
        .map_err(|e| UsageError(format!("cannot write {}: {e}", out.display())))?;
    Ok(ExitCode::SUCCESS)
}

fn load_rep(file: &Path) -> Result<(Representation, Value), UsageError> {
    let contents = std::fs::read_to_string(file)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", file.display())))?;
    let rep = representation_from_str(&contents)
        .map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
    let digest = Sha256::digest(contents.as_bytes());
    let inputs = json!({
        "file": file.display().to_string(),
        "sha256": format!("{digest:x}"),
        "D": rep.d(),
        "dim": rep.dim(),
    });
    Ok((rep, inputs))
}

fn emit(report: CliReport) -> ExitCode {
    println!("{}", report.to_json());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn algebra_checks(rep: &Representation, report: &mut Report) {
    let dkp = verify_dkp(rep);
    let detail = if dkp.passed {
        format!("all {} triples satisfied exactly", rep.d().pow(3))
    } else {
        let listed: Vec<String> = dkp
            .violations
            .iter()
            .take(8)
            .map(|v| format!("({},{},{})", v.indices[0], v.indices[1], v.indices[2]))
            .collect();
        format!(
            "{} violating triples, first: {}",
            dkp.violations.len(),
            listed.join(" ")
        )
    };
    report.condition_check("dkp-algebra", dkp.passed, &detail);
    let clifford = verify_clifford(rep);
    report.push(Check {
        name: "clifford-algebra (informational)".to_string(),
        status: CheckStatus::Vacuous,
        residual_summary: if clifford.passed {
            "satisfied".into()
        } else {
            "not satisfied".into()
        },
        details: "gamma-type inputs satisfy this instead of the DKP relation".to_string(),
    });
}

fn projector_checks(rep: &Representation, report: &mut Report) {
    match build_projectors(rep) {
        Ok(ps) => {
            report.condition_check(
                "projectors-built",
                true,
                "P is idempotent; P^mu, R^mu, R^munu, S_munu assembled",
            );
            report.merge(verify_scalar_covariance(&ps));
            report.merge(verify_vector_covariance(&ps, rep, VectorFamily::PUp));
            report.merge(verify_vector_covariance(&ps, rep, VectorFamily::RUp));
            if rep.d() == 2 {
                if let Ok(r) = verify_r01_scalar(&ps) {
                    report.merge(r);
                }
                if let Ok(r) = verify_rels_1p1(&ps, rep) {
                    report.merge(r);
                }
            }
            let orth = verify_orthogonality(&ps);
            report.push(Check {
                name: "orthogonality-scan".to_string(),
                status: CheckStatus::Pass,
                residual_summary: if orth.all_vanish {
                    "all cross-sector products vanish".into()
                } else {
                    format!(
                        "{} nonzero cross-sector products",
                        orth.nonzero_products.len()
                    )
                },
                details: orth.nonzero_products.join(", "),
            });
        }
        Err(e) => {
            report.condition_check("projectors-built", false, &e.to_string());
        }
    }
}

fn cmd_verify(file: &Path, suite: Suite) -> Result<ExitCode, UsageError> {
    let (rep, inputs) = load_rep(file)?;
    let mut report = Report::new();
    if matches!(suite, Suite::Algebra | Suite::All) {
        algebra_checks(&rep, &mut report);
    }
    if matches!(suite, Suite::Projectors | Suite::All) {
        projector_checks(&rep, &mut report);
    }
    Ok(emit(CliReport::new("verify", inputs, report)))
}

fn matrix_entries_json(m: &dkp_core::Matrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| {
            let row: Vec<Value> = (0..m.cols())
                .map(|c| {
                    let e = m.at(r, c);
                    json!([e.re.to_string(), e.im.to_string()])
                })
                .collect();
            Value::Array(row)
        })
        .collect();
    Value::Array(rows)
}

fn cmd_decompose(file: &Path) -> Result<ExitCode, UsageError> {
    let (rep, inputs) = load_rep(file)?;
    let mut report = Report::new();
    match decompose(&rep) {
        Ok(result) => {
            let dims: Vec<usize> = result.blocks.iter().map(|b| b.basis.len()).collect();
            report.push(Check {
                name: "decomposition".to_string(),
                status: if result.complete {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Partial
                },
                residual_summary: format!("blocks {dims:?}"),
                details: if result.notes.is_empty() {
                    "every block is irreducible".to_string()
                } else {
                    result.notes.join("; ")
                },
            });
            for (k, block) in result.blocks.iter().enumerate() {
                let (irr, cert) = is_irreducible(&block.subrep);
                report.push(Check {
                    name: format!("block-{k}"),
                    status: CheckStatus::Pass,
                    residual_summary: format!(
                        "dim {}, {}",
                        block.subrep.dim(),
                        if irr { "irreducible" } else { "reducible" }
                    ),
                    details: format!(
                        "commutant dimension {}; zero action: {}",
                        cert.dim(),
                        block.subrep.betas().iter().all(dkp_core::Matrix::is_zero)
                    ),
                });
            }
            report.push(Check {
                name: "change-of-basis".to_string(),
                status: CheckStatus::Pass,
                residual_summary: format!("{0}x{0} invertible", result.change_of_basis.rows()),
                details: serde_json::to_string(&matrix_entries_json(&result.change_of_basis))
                    .expect("matrix json"),
            });
        }
        Err(e) => {
            report.condition_check("decomposition", false, &e.to_string());
        }
    }
    Ok(emit(CliReport::new("decompose", inputs, report)))
}

fn cmd_equiv(file_a: &Path, file_b: &Path) -> Result<ExitCode, UsageError> {
    let (rep_a, inputs_a) = load_rep(file_a)?;
    let (rep_b, inputs_b) = load_rep(file_b)?;
    if rep_a.metric() != rep_b.metric() {
        return Err(UsageError(format!(
            "metric mismatch: D={} vs D={}",
            rep_a.d(),
            rep_b.d()
        )));
    }
    let inputs = json!({ "a": inputs_a, "b": inputs_b });
    let mut report = Report::new();
    match intertwiner(&rep_a, &rep_b).map_err(|e| UsageError(e.to_string()))? {
        Some(cert) => {
            report.push(Check {
                name: "intertwiner".to_string(),
                status: CheckStatus::Pass,
                residual_summary: "equivalent".to_string(),
                details: serde_json::to_string(&matrix_entries_json(&cert.s)).expect("matrix json"),
            });
            match unitarize(&cert, &rep_a, &rep_b) {
                Ok(upgraded) => {
                    let lambda = upgraded.lambda.expect("unitarize sets lambda");
                    report.push(Check {
                        name: "unitarizability".to_string(),
                        status: CheckStatus::Pass,
                        residual_summary: format!("S\u{2020}S = ({lambda}) I"),
                        details: match &upgraded.unitary_witness {
                            Some(w) => format!(
                                "unitary witness: {}",
                                serde_json::to_string(&matrix_entries_json(w)).expect("json")
                            ),
                            None => format!(
                                "sqrt({lambda}) is irrational; the positive scalar certifies \
                                 unitarizability without materializing it"
                            ),
                        },
                    });
                }
                Err(e) => {
                    report.push(Check {
                        name: "unitarizability".to_string(),
                        status: CheckStatus::Partial,
                        residual_summary: "undecided".to_string(),
                        details: e.to_string(),
                    });
                }
            }
        }
        None => {
            report.condition_check(
                "intertwiner",
                false,
                "inequivalent: the solution space contains no invertible element",
            );
        }
    }
    Ok(emit(CliReport::new("equiv", inputs, report)))
}

fn cmd_planewave(file: &Path, p_arg: &str, m_arg: &str) -> Result<ExitCode, UsageError> {
    let (rep, file_inputs) = load_rep(file)?;
    let components = p_arg
        .split(',')
        .map(|s| parse_rational(s.trim()).map_err(|e| UsageError(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    if components.len() != rep.d() {
        return Err(UsageError(format!(
            "momentum has {} components but the representation has D={}",
            components.len(),
            rep.d()
        )));
    }
    let mass = parse_rational(m_arg.trim()).map_err(|e| UsageError(e.to_string()))?;
    let momentum = Momentum::new(components, mass).map_err(|e| UsageError(e.to_string()))?;
    let inputs = json!({ "file": file_inputs, "p": p_arg, "m": m_arg });

    let mut report = Report::new();
    let on_shell = momentum.on_shell(rep.metric());
    report.push(Check {
        name: "shell-status".to_string(),
        status: CheckStatus::Pass,
        residual_summary: if on_shell {
            "on-shell".into()
        } else {
            "off-shell".into()
        },
        details: format!(
            "p^2 = {}, m^2 = {}",
            momentum.squared(rep.metric()),
            momentum.mass() * momentum.mass()
        ),
    });
    let sol = solution_space(&rep, &momentum).map_err(|e| UsageError(e.to_string()))?;
    report.push(Check {
        name: "kernel-dimension".to_string(),
        status: CheckStatus::Pass,
        residual_summary: sol.amplitude_basis.len().to_string(),
        details: "dimension of the exact kernel of beta^mu p_mu - m I".to_string(),
    });
    if on_shell {
        match build_projectors(&rep) {
            Ok(ps) => {
                report.merge(kg_relations_check(&rep, &ps, &sol).expect("on shell"));
                report.merge(proca_relations_check(&rep, &ps, &sol).expect("on shell"));
            }
            Err(e) => {
                report.vacuous(
                    "sector-relations",
                    &format!("projectors unavailable for this representation: {e}"),
                );
            }
        }
        if rep.betas() == builtin_irrep_1p1().betas() {
            report.merge(field_map_check(&momentum).expect("on shell"));
        }
    } else {
        report.vacuous(
            "sector-relations",
            "off-shell control: no amplitudes, nothing to verify",
        );
    }
    Ok(emit(CliReport::new("planewave", inputs, report)))
}

fn cmd_paper(as_json: bool, selftest_corrupt: bool) -> Result<ExitCode, UsageError> {
    let report = paper::run(selftest_corrupt);
    let inputs = json!({ "suite": "paper", "selftest_corrupt": selftest_corrupt });
    let cli_report = CliReport::new("paper", inputs, report);
    if as_json {
        println!("{}", cli_report.to_json());
    } else {
        print!("{}", cli_report.to_text());
    }
    if cli_report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}
