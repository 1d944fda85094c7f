//! Command-line surface.
//!
//! Exit codes are a stable contract: 0 on success, 1 on mathematical
//! failure or disagreement, 2 on unreadable or invalid input.

use clap::{Parser, Subcommand};
use cofrob::format::{ComoduleFile, HopfFile, RMatrixFile};
use cofrob::fusion::{self, SimpleLabel, TensorDecomposition};
use cofrob::hecke::HeckeSymmetry;
use cofrob::hopf::{self, Comodule, HopfAlgebra, IntegralSide};
use cofrob::poincare;
use cofrob::scalar::Scalar;
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_MATH: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "cofrob",
    version,
    about = "Exact verification of Hecke symmetries, fusion rules and Hopf-algebra integrals"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hecke-symmetry checks on an R-matrix file
    #[command(subcommand)]
    Hecke(HeckeCmd),
    /// Fusion products of simple-comodule labels
    #[command(subcommand)]
    Fusion(FusionCmd),
    /// Hopf-algebra analysis from structure-constant files
    #[command(subcommand)]
    Hopf(HopfCmd),
}

#[derive(Subcommand)]
enum HeckeCmd {
    /// Verify the Yang-Baxter equation, Hecke relation and closure; print the q-rank
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Graded dimensions of the quantum (anti)symmetric algebras and the birank verdict
    Poincare {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum FusionCmd {
    /// Decompose the tensor product of the labels (m,n) and (p,q)
    Mul {
        #[arg(allow_hyphen_values = true)]
        m: i64,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
        #[arg(long)]
        json: bool,
    },
    /// All products with |m|,|n|,|p|,|q| <= range, with a dimension check per row
    Table {
        #[arg(long)]
        range: i64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum HopfCmd {
    /// Validate a Hopf algebra, solve for its integrals, and optionally run
    /// the splitting test against the projectivity oracle on a comodule
    Analyze {
        file: PathBuf,
        #[arg(long)]
        comodule: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Hecke(HeckeCmd::Verify { file, json }) => hecke_verify(&file, json),
        Cmd::Hecke(HeckeCmd::Poincare {
            file,
            max_degree,
            json,
        }) => hecke_poincare(&file, max_degree, json),
        Cmd::Fusion(FusionCmd::Mul { m, n, p, q, json }) => fusion_mul(m, n, p, q, json),
        Cmd::Fusion(FusionCmd::Table { range, json }) => fusion_table(range, json),
        Cmd::Hopf(HopfCmd::Analyze {
            file,
            comodule,
            json,
        }) => hopf_analyze(&file, comodule.as_deref(), json),
    };
    ExitCode::from(code)
}

fn input_error(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    EXIT_INPUT
}

fn read_file(path: &Path) -> Result<String, u8> {
    std::fs::read_to_string(path)
        .map_err(|e| input_error(format_args!("cannot read {}: {e}", path.display())))
}

fn load_hecke(path: &Path) -> Result<HeckeSymmetry, u8> {
    use cofrob::hecke::HeckeError;
    let text = read_file(path)?;
    let file = RMatrixFile::from_json(&text).map_err(input_error)?;
    file.to_hecke().map_err(|e| match e {
        // invalid parameter or a singular operator are mathematical verdicts
        // on well-formed input, not parse errors
        cofrob::format::FormatError::Hecke(
            inner @ (HeckeError::InvalidQ(_) | HeckeError::SingularR),
        ) => {
            eprintln!("failed: {inner}");
            EXIT_MATH
        }
        other => input_error(other),
    })
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn hecke_verify(path: &Path, as_json: bool) -> u8 {
    let h = match load_hecke(path) {
        Ok(h) => h,
        Err(code) => return code,
    };
    let ybe = h.verify_yang_baxter();
    let hecke_ok = h.verify_hecke_relation();
    let closed = h.verify_closed();
    let qrank = if closed { h.q_rank().ok() } else { None };
    let all_ok = ybe.holds && hecke_ok && closed;

    if as_json {
        let out = json!({
            "ybe": ybe.holds,
            "hecke": hecke_ok,
            "closed": closed,
            "qrank": qrank.as_ref().map(|s| s.to_string()),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("q validity:      pass (q = {})", h.q());
        println!("Yang-Baxter:     {}", pass_fail(ybe.holds));
        if let Some(m) = &ybe.first_mismatch {
            println!(
                "  first mismatch at ({}, {}): {} != {}",
                m.row, m.col, m.lhs, m.rhs
            );
        }
        println!("Hecke relation:  {}", pass_fail(hecke_ok));
        println!("closure:         {}", pass_fail(closed));
        match &qrank {
            Some(r) => println!("q-rank:          {r}"),
            None => println!("q-rank:          undefined (half-dual not invertible)"),
        }
    }
    if all_ok {
        EXIT_OK
    } else {
        EXIT_MATH
    }
}

fn hecke_poincare(path: &Path, max_degree: usize, as_json: bool) -> u8 {
    let h = match load_hecke(path) {
        Ok(h) => h,
        Err(code) => return code,
    };
    if !(h.verify_yang_baxter().holds && h.verify_hecke_relation() && h.verify_closed()) {
        eprintln!("error: the operator fails the Hecke-symmetry axioms; run `hecke verify` for details");
        return EXIT_MATH;
    }
    let sym: Vec<usize> = (0..=max_degree)
        .map(|n| poincare::sym_dim(&h, n).expect("axioms verified above"))
        .collect();
    let (verdict, table) = match poincare::detect_birank11(&h, max_degree.max(3)) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    if as_json {
        let out = json!({
            "max_degree": max_degree,
            "sym_dims": sym,
            "ext_dims": table.dims[..=max_degree],
            "birank11": verdict,
            "a": table.fitted_a.as_ref().map(|s| s.to_string()),
            "b": table.fitted_b.as_ref().map(|s| s.to_string()),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("{:>3}  {:>8}  {:>8}", "n", "dim S_n", "dim L_n");
        for n in 0..=max_degree {
            println!("{:>3}  {:>8}  {:>8}", n, sym[n], table.dims[n]);
        }
        match (&table.fitted_a, &table.fitted_b) {
            (Some(a), Some(b)) => {
                println!("series fit: (1+at)(1-bt)^-1 with a = {a}, b = {b}");
            }
            _ => println!("series fit: none (dimensions do not match a one-pole one-root series)"),
        }
        println!(
            "birank (1,1): {}",
            if verdict { "yes" } else { "no" }
        );
    }
    EXIT_OK
}

fn decomposition_json(d: &TensorDecomposition) -> serde_json::Value {
    match d {
        TensorDecomposition::Semisimple(parts) => json!({
            "kind": "semisimple",
            "summands": parts
                .iter()
                .map(|(l, c)| json!({"label": [l.m, l.n], "mult": c}))
                .collect::<Vec<_>>(),
        }),
        TensorDecomposition::IndecomposableInjective { socle, factors } => json!({
            "kind": "indecomposable_injective",
            "socle": [socle.m, socle.n],
            "factors": factors
                .terms()
                .map(|(l, c)| json!({"label": [l.m, l.n], "mult": c}))
                .collect::<Vec<_>>(),
        }),
    }
}

fn fusion_mul(m: i64, n: i64, p: i64, q: i64, as_json: bool) -> u8 {
    let d = fusion::tensor(SimpleLabel::new(m, n), SimpleLabel::new(p, q));
    if as_json {
        println!("{}", serde_json::to_string_pretty(&decomposition_json(&d)).unwrap());
    } else {
        println!("{d}");
    }
    EXIT_OK
}

fn fusion_table(range: i64, as_json: bool) -> u8 {
    let range = range.abs();
    let mut rows = Vec::new();
    for m in -range..=range {
        for n in -range..=range {
            for p in -range..=range {
                for q in -range..=range {
                    let x = SimpleLabel::new(m, n);
                    let y = SimpleLabel::new(p, q);
                    let d = fusion::tensor(x, y);
                    let dims_ok = d.total_dim() == (x.dim() * y.dim()) as i64;
                    if !dims_ok {
                        eprintln!("dimension check failed on {x} (x) {y}");
                        return EXIT_MATH;
                    }
                    if as_json {
                        rows.push(json!({
                            "left": [m, n],
                            "right": [p, q],
                            "product": decomposition_json(&d),
                        }));
                    } else {
                        println!("{x} (x) {y} = {d}");
                    }
                }
            }
        }
    }
    if as_json {
        println!("{}", serde_json::to_string_pretty(&json!(rows)).unwrap());
    } else {
        println!("dimension check: pass on all {} products", (2 * range + 1).pow(4));
    }
    EXIT_OK
}

fn covector_string(h: &HopfAlgebra, covector: &[Scalar]) -> String {
    let entries: Vec<String> = covector.iter().map(|c| c.to_string()).collect();
    format!(
        "({}) over basis ({})",
        entries.join(", "),
        h.basis_names().join(", ")
    )
}

fn hopf_analyze(path: &Path, comodule_path: Option<&Path>, as_json: bool) -> u8 {
    let text = match read_file(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let file = match HopfFile::from_json(&text) {
        Ok(f) => f,
        Err(e) => return input_error(e),
    };
    let h = match file.to_hopf() {
        Ok(h) => h,
        Err(e) => return input_error(e),
    };
    let report = h.validate();
    if let Some(failure) = &report.failure {
        eprintln!(
            "error: Hopf axiom {:?} fails: {}",
            failure.axiom, failure.detail
        );
        return EXIT_INPUT;
    }

    let left = match hopf::find_integral(&h, IntegralSide::Left) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_MATH;
        }
    };
    let right = match hopf::find_integral(&h, IntegralSide::Right) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_MATH;
        }
    };
    let b_rank = left
        .as_ref()
        .map(|l| hopf::bilinear_form_b(&h, l).rank());
    let conv_assoc = left.as_ref().map(|l| hopf::convolution_associative(&h, l));

    let comodule_data: Option<(Comodule, bool)> = match comodule_path {
        None => None,
        Some(cp) => {
            let text = match read_file(cp) {
                Ok(t) => t,
                Err(code) => return code,
            };
            let cfile = match ComoduleFile::from_json(&text) {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let m = match cfile.to_comodule() {
                Ok(m) => m,
                Err(e) => return input_error(e),
            };
            if let Some(failure) = m.validate(&h).failure {
                eprintln!(
                    "error: comodule axiom {:?} fails: {}",
                    failure.axiom, failure.detail
                );
                return EXIT_INPUT;
            }
            let simple = hopf::is_simple(&h, &m);
            Some((m, simple))
        }
    };

    let mut comodule_json = serde_json::Value::Null;
    let mut disagreement = false;
    let mut comodule_lines = Vec::new();
    if let Some((m, simple)) = &comodule_data {
        let cf = hopf::coefficient_space(&h, m);
        comodule_lines.push(format!("comodule dim:    {}", m.dim()));
        comodule_lines.push(format!("simple:          {simple}"));
        comodule_lines.push(format!("Cf(M) basis:     {} element(s)", cf.dim()));
        if *simple {
            let split = match hopf::splitting_test(&h, m) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_MATH;
                }
            };
            let oracle = match hopf::projectivity_oracle(&h, m) {
                Ok(o) => o,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_MATH;
                }
            };
            disagreement = split.splitting != oracle;
            comodule_lines.push(format!("splitting test:  {}", split.splitting));
            comodule_lines.push(format!("projectivity:    {oracle}"));
            comodule_lines.push(format!(
                "agreement:       {}",
                if disagreement { "DISAGREE" } else { "AGREE" }
            ));
            comodule_json = json!({
                "dim": m.dim(),
                "simple": simple,
                "coefficient_space_dim": cf.dim(),
                "splitting": split.splitting,
                "projectivity_oracle": oracle,
                "agreement": !disagreement,
            });
        } else {
            comodule_lines
                .push("splitting test:  skipped (requires a simple comodule)".to_string());
            comodule_json = json!({
                "dim": m.dim(),
                "simple": simple,
                "coefficient_space_dim": cf.dim(),
            });
        }
    }

    if as_json {
        let out = json!({
            "valid": true,
            "dim": h.dim(),
            "left_integral": left.as_ref().map(|l| l.covector.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            "right_integral": right.as_ref().map(|r| r.covector.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            "b_rank": b_rank,
            "b_nondegenerate": b_rank.map(|r| r == h.dim()),
            "convolution_associative": conv_assoc,
            "comodule": comodule_json,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("axioms:          pass (dim {})", h.dim());
        match &left {
            Some(l) => println!("left integral:   {}", covector_string(&h, &l.covector)),
            None => println!("left integral:   none"),
        }
        match &right {
            Some(r) => println!("right integral:  {}", covector_string(&h, &r.covector)),
            None => println!("right integral:  none"),
        }
        match b_rank {
            Some(rank) => println!(
                "rank of b:       {rank} / {} ({})",
                h.dim(),
                if rank == h.dim() {
                    "non-degenerate"
                } else {
                    "degenerate"
                }
            ),
            None => println!("rank of b:       undefined (no left integral)"),
        }
        match conv_assoc {
            Some(ok) => println!("convolution:     associative {}", pass_fail(ok)),
            None => println!("convolution:     undefined (no left integral)"),
        }
        for line in &comodule_lines {
            println!("{line}");
        }
    }

    if disagreement {
        EXIT_MATH
    } else {
        EXIT_OK
    }
}
