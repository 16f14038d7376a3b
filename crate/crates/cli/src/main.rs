//! `supersphere`: Chern numbers, projectors and verification suites for the
//! graded monopoles on `S^{2,2}`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod report;
mod suites;

use std::io::Write;
use std::num::NonZeroUsize;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use supersphere::berezin::{chern_computation, Orientation, DEFAULT_QUAD_ORDER};
use supersphere::json::{coeff_to_json, element_to_json, form_to_json, matrix_to_json};
use supersphere::{golden, Element, Parity, Sign, SuperMatrix, Supersphere};

use suites::{Context, Suite};

const QUAD_ORDER_VAR: &str = "SUPERSPHERE_QUAD_ORDER";

#[derive(Parser, Debug)]
#[command(name = "supersphere", version, about = "Graded monopoles on the supersphere S^{2,2}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SignArg {
    Minus,
    Plus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Minus => Sign::Minus,
            SignArg::Plus => Sign::Plus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Coords {
    Group,
    Base,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact first Chern number of the projector of ψ_{∓n}.
    Chern {
        #[arg(long, value_enum)]
        sign: SignArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The projector p = |ψ⟩⟨ψ| in group generators or base coordinates.
    Projector {
        #[arg(long, value_enum)]
        sign: SignArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value = "group")]
        coords: Coords,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Compare with the stored charge-one projector (needs --n 1).
        #[arg(long)]
        check_golden: bool,
    },
    /// Runs identity and property checks for n = 1..n-max and both signs.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// A failure and the exit code it maps to.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<supersphere::Error> for Failure {
    fn from(e: supersphere::Error) -> Self {
        Failure::Verification(e.to_string())
    }
}

fn quad_order() -> Result<NonZeroUsize, Failure> {
    match std::env::var(QUAD_ORDER_VAR) {
        Err(_) => Ok(NonZeroUsize::new(DEFAULT_QUAD_ORDER).expect("positive default")),
        Ok(s) => s
            .trim()
            .parse::<NonZeroUsize>()
            .map_err(|_| Failure::Usage(format!("{QUAD_ORDER_VAR} must be a positive integer, got `{s}`"))),
    }
}

/// Writes to stdout, tolerating a closed pipe such as `| head`.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn print_json(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("JSON values serialize")));
}

fn parity_word(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

fn cmd_chern(sign: Sign, n: u32, format: Format) -> Result<(), Failure> {
    let ss = Supersphere::shared();
    let c = chern_computation(ss, sign, n, Orientation::ThetaPhi)?;
    let form = ss.chern_form(sign, n)?;
    let label = ss.k_label(sign, n);
    match format {
        Format::Text => {
            emit(&format!(
                "sign: {sign}\nn: {n}\nchern number: {}\nintegral: {}\nnormalizer: {}\n\
                 k-label: charge {:+}, parity {}\nchern form: {form}\n",
                c.charge,
                c.integral,
                c.normalizer,
                label.charge,
                parity_word(label.parity)
            ));
        }
        Format::Json => print_json(&json!({
            "sign": sign.name(),
            "n": n,
            "chern_number": c.charge,
            "integral": coeff_to_json(&c.integral),
            "normalizer": coeff_to_json(&c.normalizer),
            "k_label": { "charge": label.charge, "parity": parity_word(label.parity) },
            "chern_form": form_to_json(&form),
        })),
    }
    Ok(())
}

fn cmd_projector(sign: Sign, n: u32, coords: Coords, format: Format, check_golden: bool) -> Result<(), Failure> {
    if check_golden && n != 1 {
        return Err(Failure::Usage("--check-golden needs --n 1".into()));
    }
    let ss = Supersphere::shared();
    let p: SuperMatrix<Element> = match coords {
        Coords::Group => ss.projector_for(sign, n)?,
        Coords::Base => ss.base_projector(sign, n)?,
    };
    match format {
        Format::Text => emit(&p.to_string()),
        Format::Json => print_json(&json!({
            "sign": sign.name(),
            "n": n,
            "coordinates": match coords { Coords::Group => "group", Coords::Base => "base" },
            "matrix": matrix_to_json(&p),
        })),
    }
    if check_golden {
        let bad = golden::projector_mismatches(ss, sign)?;
        if let Some((i, j, x)) = bad.first() {
            return Err(Failure::Verification(format!(
                "golden mismatch in {} entries; first at ({i}, {j}): {}",
                bad.len(),
                element_to_json(x)
            )));
        }
        eprintln!("golden projector matches");
    }
    Ok(())
}

fn cmd_verify(suite: Suite, n_max: u32, format: Format) -> Result<(), Failure> {
    let ctx = Context {
        n_max,
        quad_order: quad_order()?,
    };
    let report = suites::run(suite, ctx);
    match format {
        Format::Text => emit(&report.to_text()),
        Format::Json => print_json(&report.to_json()),
    }
    match report.first_failure() {
        None => Ok(()),
        Some(r) => Err(Failure::Verification(format!(
            "{} failed: {}",
            r.name,
            r.witness.as_ref().map(Value::to_string).unwrap_or_default()
        ))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Chern { sign, n, format } => cmd_chern(sign.into(), n, format),
        Command::Projector {
            sign,
            n,
            coords,
            format,
            check_golden,
        } => cmd_projector(sign.into(), n, coords, format, check_golden),
        Command::Verify { suite, n_max, format } => cmd_verify(suite, n_max, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
