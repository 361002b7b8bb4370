//! `toric-monoids`: classify, expand and verify monoid structures on toric
//! surfaces from the command line. Inputs and outputs are JSON.

mod catalog;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use toric_monoids::demazure::{roots_up_to, RootPair};
use toric_monoids::{
    boundary, classify_cone, comult, comult_from_root_pair, invariant_lk_closed, multiply_points,
    opposite, quotient_by_center, verify_bialgebra, ChartPoint, Cone2, Error, LatticePoint,
    MonoidCone, MonoidSpec,
};

use crate::catalog::{catalog_specs, CatalogEntry};

#[derive(Parser)]
#[command(name = "toric-monoids", version, about)]
struct Cli {
    /// Read the JSON input from this file instead of the argument or stdin.
    #[arg(long, global = true, value_name = "PATH")]
    json_in: Option<PathBuf>,

    /// Write the JSON output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    json_out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the monoid on a subcone of the half-plane (or "half-plane").
    Classify {
        input: Option<String>,
        #[arg(long)]
        n: u64,
    },
    /// Demazure roots of one ray of a cone in N, within a coordinate box.
    Roots {
        input: Option<String>,
        #[arg(long)]
        ray: usize,
        #[arg(long, default_value_t = 10)]
        bound: u64,
    },
    /// Comultiplication of a monomial, for a spec or for a cone with a root pair.
    Comult {
        input: Option<String>,
        /// Exponent `a,b` of the monomial.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        monomial: LatticePoint,
        /// Print the tensor as text instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// The image-ideal invariants 𝔏_1 .. 𝔏_K of a spec.
    Invariants {
        input: Option<String>,
        #[arg(long, default_value_t = 8)]
        k_max: u64,
    },
    /// Quotient of a spec by the central subgroup C_m.
    Quotient {
        input: Option<String>,
        #[arg(long)]
        m: u64,
    },
    /// The opposite monoid.
    Opposite { input: Option<String> },
    /// Boundary divisor data.
    Boundary { input: Option<String> },
    /// Multiply two chart points: {"spec": .., "p": [..], "q": [..]}.
    Multiply { input: Option<String> },
    /// Check the bialgebra axioms on all cone monomials in a box.
    Verify {
        input: Option<String>,
        #[arg(long = "box", default_value_t = 4)]
        bx: u64,
    },
    /// Newline-delimited catalog of all X and Y specs within bounds.
    Catalog {
        n_max: u64,
        a_max: u64,
        b_max: u64,
        #[arg(default_value_t = 8)]
        k_max: u64,
    },
}

fn parse_point(text: &str) -> Result<LatticePoint, String> {
    let text = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| format!("expected `a,b`, got {text:?}"))?;
    let parse = |s: &str| s.trim().parse::<i64>().map_err(|e| format!("{s:?}: {e}"));
    Ok(LatticePoint::m(parse(a)?, parse(b)?))
}

/// Why a command failed; decides the exit code.
enum Failure {
    /// Malformed input or arguments: exit code 2.
    Usage(String),
    /// A well-formed question with a negative answer: exit code 1. The
    /// payload, if any, is still written as the command's output.
    Domain {
        message: String,
        payload: Option<String>,
    },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain {
                message: e.to_string(),
                payload: None,
            },
        }
    }
}

type CmdResult = Result<Output, Failure>;

enum Output {
    /// One JSON document, already serialized.
    Json(String),
    Lines(Vec<String>),
    Text(String),
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure::Usage(format!("cannot serialize output: {e}")))
}

/// Output of `classify` for a cone that fails the restriction condition.
#[derive(Serialize)]
struct NotAMonoid<'a> {
    error: &'static str,
    point: &'a LatticePoint,
    missing: &'a LatticePoint,
}

struct Input {
    arg: Option<String>,
    file: Option<PathBuf>,
}

impl Input {
    fn text(&self) -> Result<String, Failure> {
        if let Some(path) = &self.file {
            return fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())));
        }
        if let Some(arg) = &self.arg {
            return Ok(arg.clone());
        }
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    }

    fn parse<T: DeserializeOwned>(&self) -> Result<T, Failure> {
        let text = self.text()?;
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("malformed input: {e}")))
    }
}

/// Input of `comult` when a cone and root pair are given instead of a spec.
#[derive(Deserialize)]
struct RootPairInput {
    cone: Cone2,
    pair: RootPair,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ComultInput {
    Spec(MonoidSpec),
    RootPair(Box<RootPairInput>),
}

#[derive(Deserialize)]
struct MultiplyInput {
    spec: MonoidSpec,
    p: ChartPoint,
    q: ChartPoint,
}

fn run(command: Command, json_in: Option<PathBuf>) -> CmdResult {
    let input = |arg: Option<String>| Input {
        arg,
        file: json_in.clone(),
    };
    match command {
        Command::Classify { input: arg, n } => {
            let cone: MonoidCone = input(arg).parse()?;
            match classify_cone(&cone, n) {
                Ok(spec) => Ok(Output::Json(to_json(&spec)?)),
                Err(Error::NotAMonoid(f)) => Err(Failure::Domain {
                    message: format!(
                        "not a monoid: {} lies in the cone but {} does not, \
                         so the comultiplication of G_{n} does not restrict",
                        f.point, f.missing
                    ),
                    payload: Some(to_json(&NotAMonoid {
                        error: "not-a-monoid",
                        point: &f.point,
                        missing: &f.missing,
                    })?),
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::Roots {
            input: arg,
            ray,
            bound,
        } => {
            let cone: Cone2 = input(arg).parse()?;
            Ok(Output::Json(to_json(&roots_up_to(&cone, ray, bound)?)?))
        }
        Command::Comult {
            input: arg,
            monomial,
            text,
        } => {
            let tensor = match input(arg).parse::<ComultInput>()? {
                ComultInput::Spec(spec) => {
                    let cone = toric_monoids::cone_of_spec(&spec);
                    if !cone.contains(&monomial) {
                        return Err(Failure::Usage(format!(
                            "{monomial} is not in the cone of {spec}"
                        )));
                    }
                    comult(&spec.comult_rule(), &monomial)?
                }
                ComultInput::RootPair(rp) => comult_from_root_pair(&rp.cone, &rp.pair, &monomial)?,
            };
            if text {
                Ok(Output::Text(tensor.to_string()))
            } else {
                Ok(Output::Json(to_json(&tensor)?))
            }
        }
        Command::Invariants { input: arg, k_max } => {
            let spec: MonoidSpec = input(arg).parse()?;
            let values = (1..=k_max)
                .map(|k| invariant_lk_closed(&spec, k))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Output::Json(to_json(&values)?))
        }
        Command::Quotient { input: arg, m } => {
            let spec: MonoidSpec = input(arg).parse()?;
            Ok(Output::Json(to_json(&quotient_by_center(&spec, m)?)?))
        }
        Command::Opposite { input: arg } => {
            let spec: MonoidSpec = input(arg).parse()?;
            Ok(Output::Json(to_json(&opposite(&spec))?))
        }
        Command::Boundary { input: arg } => {
            let spec: MonoidSpec = input(arg).parse()?;
            Ok(Output::Json(to_json(&boundary(&spec)?)?))
        }
        Command::Multiply { input: arg } => {
            let m: MultiplyInput = input(arg).parse()?;
            Ok(Output::Json(to_json(&multiply_points(
                &m.spec, &m.p, &m.q,
            )?)?))
        }
        Command::Verify { input: arg, bx } => {
            let spec: MonoidSpec = input(arg).parse()?;
            let report = verify_bialgebra(&spec, bx)?;
            let value = to_json(&report)?;
            match report.first_failure() {
                None => Ok(Output::Json(value)),
                Some(check) => Err(Failure::Domain {
                    message: format!("{spec}: check {} failed", check.name),
                    payload: Some(value),
                }),
            }
        }
        Command::Catalog {
            n_max,
            a_max,
            b_max,
            k_max,
        } => {
            if n_max == 0 || a_max == 0 {
                return Err(Failure::Usage(
                    "catalog bounds n-max and a-max must be at least 1".into(),
                ));
            }
            let lines = catalog_specs(n_max, a_max, b_max)
                .into_iter()
                .map(|s| to_json(&CatalogEntry::new(s, k_max)?))
                .collect::<Result<Vec<_>, Failure>>()?;
            Ok(Output::Lines(lines))
        }
    }
}

fn render(output: &Output) -> String {
    match output {
        Output::Json(v) => format!("{v}\n"),
        Output::Lines(lines) => lines.iter().map(|l| format!("{l}\n")).collect(),
        Output::Text(t) => format!("{t}\n"),
    }
}

fn emit(text: &str, json_out: &Option<PathBuf>) -> io::Result<()> {
    match json_out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code, message) = match run(cli.command, cli.json_in) {
        Ok(out) => (Some(render(&out)), ExitCode::SUCCESS, None),
        Err(Failure::Usage(m)) => (None, ExitCode::from(2), Some(m)),
        Err(Failure::Domain { message, payload }) => (
            payload.map(|p| render(&Output::Json(p))),
            ExitCode::from(1),
            Some(message),
        ),
    };
    if let Some(text) = text {
        if let Err(e) = emit(&text, &cli.json_out) {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(2);
        }
    }
    if let Some(m) = message {
        eprintln!("error: {m}");
    }
    code
}
