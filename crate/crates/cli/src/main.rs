//! Command-line surface: validate algebras, construct polarizations and
//! induced modules, compare modules, and run the counterexample demo.
//!
//! Exit codes are a stable scripting contract: 0 success, 1 mathematical
//! negative (invalid algebra, lambda not in L, no isomorphism, field
//! obstruction), 2 I/O or parse error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use twind_cli::commands::{cmd_induce, cmd_iso, cmd_polarize, cmd_validate, Outcome};
use twind_cli::demo;
use twind_cli::formats::{field_override, twist_from_str, AlgebraFile, Certificate, FormatError};

#[derive(Parser)]
#[command(name = "twind", version, about = "Twisted induction for solvable Lie superalgebras, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Check the Lie superalgebra axioms of an algebra file
    Validate {
        path: PathBuf,
        /// Emit the machine-readable certificate on stdout
        #[arg(long)]
        json: bool,
    },
    /// Compute f_lambda, its radical, a polarization and theta
    Polarize {
        path: PathBuf,
        /// Character values, e.g. "u=1" or "u=1,x=-2/3"
        #[arg(long)]
        lambda: String,
        /// Override the working field, e.g. "rationals adjoin sqrt -1"
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Build the (twisted) induced module and classify it
    Induce {
        path: PathBuf,
        #[arg(long)]
        lambda: String,
        /// none | plus | minus
        #[arg(long, default_value = "none")]
        twist: String,
        /// Odd basis vectors spanning the inducing odd part, e.g.
        /// "xi_m1,xi_m2"; empty string means the zero subspace; omitted
        /// means "find a polarization"
        #[arg(long)]
        pol: Option<String>,
        /// Refuse subspaces that are not genuine polarizations
        #[arg(long)]
        require_polarization: bool,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        json: bool,
        /// Write the certificate to a file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the modules carried by two induce certificates
    Iso {
        cert_a: PathBuf,
        cert_b: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// End-to-end demonstrations
    Demo {
        #[command(subcommand)]
        which: DemoCommands,
    },
}

#[derive(Subcommand)]
enum DemoCommands {
    /// The (4|4) counterexample: untwisted inductions from two polarizations
    /// differ; the twisted ones agree
    KacCounterexample {
        /// Run on the printed (Jacobi-inconsistent) table and stop at
        /// validation
        #[arg(long)]
        use_printed: bool,
        /// Character override, e.g. "u=1,x=5"; needs a nonzero u-component
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn read_algebra(path: &PathBuf, field: Option<&str>) -> Result<(AlgebraFile, twind_core::superalgebra::LieSuperalgebra), FormatError> {
    let text = fs::read_to_string(path)
        .map_err(|e| FormatError::Malformed(format!("cannot read {}: {e}", path.display())))?;
    let doc = AlgebraFile::from_json(&text)?;
    let g = doc.to_algebra()?;
    let g = field_override(&g, field)?;
    Ok((doc, g))
}

fn read_certificate(path: &PathBuf) -> Result<Certificate, FormatError> {
    let text = fs::read_to_string(path)
        .map_err(|e| FormatError::Malformed(format!("cannot read {}: {e}", path.display())))?;
    Certificate::from_json(&text)
}

fn emit(outcome: Outcome, json: bool, out: Option<&PathBuf>) -> ExitCode {
    if let (Some(path), Some(cert)) = (out, outcome.certificate.as_ref()) {
        if let Err(e) = fs::write(path, cert.to_json()) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if json {
        match outcome.certificate.as_ref() {
            Some(cert) => print!("{}", cert.to_json()),
            None => print!("{}", serde_json::json!({ "error": outcome.text.trim() })),
        }
    } else {
        let mut text = outcome.text.clone();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        print!("{text}");
    }
    ExitCode::from(outcome.exit as u8)
}

fn run() -> Result<ExitCode, FormatError> {
    let cli = Cli::parse();
    Ok(match cli.command {
        Commands::Validate { path, json } => {
            let (doc, g) = read_algebra(&path, None)?;
            emit(cmd_validate(&doc, &g), json, None)
        }
        Commands::Polarize {
            path,
            lambda,
            field,
            json,
        } => {
            let (doc, g) = read_algebra(&path, field.as_deref())?;
            emit(cmd_polarize(&doc, &g, &lambda)?, json, None)
        }
        Commands::Induce {
            path,
            lambda,
            twist,
            pol,
            require_polarization,
            field,
            json,
            out,
        } => {
            let (doc, g) = read_algebra(&path, field.as_deref())?;
            let twist = twist_from_str(&twist)?;
            let outcome = cmd_induce(&doc, &g, &lambda, twist, pol.as_deref(), require_polarization)?;
            emit(outcome, json, out.as_ref())
        }
        Commands::Iso { cert_a, cert_b, json } => {
            let a = read_certificate(&cert_a)?;
            let b = read_certificate(&cert_b)?;
            emit(cmd_iso(&a, &b)?, json, None)
        }
        Commands::Demo { which } => match which {
            DemoCommands::KacCounterexample {
                use_printed,
                lambda,
                json,
            } => emit(demo::run_kac_demo(use_printed, lambda.as_deref())?, json, None),
        },
    })
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
