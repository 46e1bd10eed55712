//! Command-line front end: parse group/torus files, dispatch the exact
//! computations, and emit deterministic table or JSON output.
//!
//! Output contract: rationals are always exact strings ("1/3", never a
//! float); JSON keys and list orders are canonical so identical inputs give
//! byte-identical output. Roots of unity are reported by their exponent, so
//! `1/2` denotes exp(2 pi i / 2) = -1. Twisted and resonance dimensions are
//! computed in the presentation-2-complex model of the cohomology ring; the
//! output says so, since for presentations that do not realize a 2-skeleton
//! the degree-2 part of that ring is presentation-dependent.
//!
//! Exit codes: 0 success, 2 input error (unreadable or unparsable file, bad
//! character syntax, invalid spec), 3 size-limit rejection.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jumploci_core::{
    component_dims, cup_data, curve_h1_dim, exp_lift_candidates, generic_h1_dim_along,
    is_admissible, jumping_points_1d, symmetry_check, twisted_h0_dim, twisted_h1_dim, Character,
    CurveDescriptor, Error, LiftBox, OneForm, Presentation, Rat, TorusSpec,
};
use rayon::prelude::*;
use serde_json::{json, Value};

/// Hard input bounds; beyond them exact enumeration is hopeless and the tool
/// refuses (exit 3) instead of grinding.
const MAX_GENERATORS: usize = 16;
const MAX_RELATORS: usize = 24;

const RING_MODEL: &str = "presentation-2-complex";

#[derive(Parser)]
#[command(
    name = "jumploci",
    version,
    about = "Exact jumping loci of rank-one local systems from group presentations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Twisted cohomology dimensions at torsion characters.
    Twisted {
        /// Group presentation file.
        #[arg(long)]
        group: PathBuf,
        /// Character as comma-separated exponents, e.g. 1/2,1/3,0.
        #[arg(long, conflicts_with = "chars")]
        char: Option<String>,
        /// Batch file with one character per line; evaluated in parallel,
        /// output in input order.
        #[arg(long)]
        chars: Option<PathBuf>,
        /// Also report membership in the depth-k jumping stratum.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Resonance (Aomoto) dimension at a rational one-form.
    Aomoto {
        #[arg(long)]
        group: PathBuf,
        /// One-form as comma-separated rationals, e.g. 1,0,-1/2.
        #[arg(long)]
        alpha: String,
        /// Also report membership in the depth-k resonance stratum.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generic twisted dimension along a parametrized subtorus.
    Generic {
        #[arg(long)]
        group: PathBuf,
        /// Subtorus spec file.
        #[arg(long)]
        torus: PathBuf,
    },
    /// Jumping parameters along a one-parameter subtorus, with torsion
    /// certification.
    Jump {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        torus: PathBuf,
    },
    /// Search a lift box for a resonance witness of the twisted dimension.
    Admissible {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        char: String,
        /// Sup-norm radius of the integer lift box.
        #[arg(long = "box", default_value_t = 2)]
        box_radius: u64,
    },
    /// Twisted dimension at a character and at its inverse.
    Symmetry {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        char: String,
    },
    /// Dimension table for a curve of given genus and puncture count.
    Curve {
        #[arg(long)]
        genus: u64,
        #[arg(long, conflicts_with = "proper")]
        punctures: Option<u64>,
        /// Shorthand for --punctures 0.
        #[arg(long)]
        proper: bool,
    },
    /// Exponential lifts of a character inside a box.
    Lifts {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        char: String,
        #[arg(long = "box", default_value_t = 2)]
        box_radius: u64,
    },
}

/// Failure with the exit code it maps to.
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_size_limit() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

type RunResult<T> = Result<T, Failure>;

fn read_file(path: &Path) -> RunResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn load_group(path: &Path) -> RunResult<Presentation> {
    let p = Presentation::parse(&read_file(path)?)?;
    if p.num_gens() > MAX_GENERATORS {
        return Err(Error::SizeLimit(format!(
            "{} generators exceed the supported {MAX_GENERATORS}",
            p.num_gens()
        ))
        .into());
    }
    if p.relators().len() > MAX_RELATORS {
        return Err(Error::SizeLimit(format!(
            "{} relators exceed the supported {MAX_RELATORS}",
            p.relators().len()
        ))
        .into());
    }
    Ok(p)
}

fn load_torus(path: &Path) -> RunResult<TorusSpec> {
    Ok(TorusSpec::parse(&read_file(path)?)?)
}

fn parse_rationals(text: &str, what: &str) -> RunResult<Vec<Rat>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<Rat>()
                .map_err(|_| Failure::input(format!("bad {what} coordinate `{}`", tok.trim())))
        })
        .collect()
}

fn rat_list(coords: &[Rat]) -> String {
    coords
        .iter()
        .map(Rat::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// One table line per (key, value) pair, aligned by a single space; the
/// JSON rendering uses the same keys.
fn emit(format: Format, pairs: &[(&str, Value)]) {
    match format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            for (k, v) in pairs {
                obj.insert((*k).to_string(), v.clone());
            }
            println!("{}", Value::Object(obj));
        }
        Format::Table => {
            for (k, v) in pairs {
                match v {
                    Value::String(s) => println!("{k} {s}"),
                    Value::Null => println!("{k} -"),
                    other => println!("{k} {other}"),
                }
            }
        }
    }
}

fn twisted_pairs(
    p: &Presentation,
    chi: &Character,
    k: Option<usize>,
) -> RunResult<Vec<(&'static str, Value)>> {
    let h0 = twisted_h0_dim(p, chi)?;
    let h1 = twisted_h1_dim(p, chi)?;
    let mut pairs = vec![
        ("group", json!(p.name())),
        ("character", json!(chi.emit())),
        ("order", json!(chi.order())),
        ("model", json!(RING_MODEL)),
        ("h0", json!(h0)),
        ("h1", json!(h1)),
    ];
    if let Some(k) = k {
        pairs.push(("k", json!(k)));
        pairs.push(("member", json!(h1 >= k)));
    }
    Ok(pairs)
}

fn run_twisted(
    format: Format,
    group: &Path,
    char_arg: Option<&str>,
    chars: Option<&Path>,
    k: Option<usize>,
) -> RunResult<()> {
    let p = load_group(group)?;
    match (char_arg, chars) {
        (Some(text), None) => {
            let chi = Character::validated(&p, parse_rationals(text, "character")?)?;
            emit(format, &twisted_pairs(&p, &chi, k)?);
            Ok(())
        }
        (None, Some(path)) => {
            let body = read_file(path)?;
            let lines: Vec<&str> = body
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .collect();
            let results: Vec<RunResult<Vec<(&'static str, Value)>>> = lines
                .par_iter()
                .map(|line| {
                    let chi = Character::validated(&p, parse_rationals(line, "character")?)?;
                    twisted_pairs(&p, &chi, k)
                })
                .collect();
            if format == Format::Json {
                let mut rows = Vec::new();
                for r in results {
                    let pairs = r?;
                    let mut obj = serde_json::Map::new();
                    for (key, v) in pairs {
                        obj.insert(key.to_string(), v);
                    }
                    rows.push(Value::Object(obj));
                }
                println!("{}", Value::Array(rows));
            } else {
                for r in results {
                    let pairs = r?;
                    let row = pairs
                        .iter()
                        .map(|(key, v)| match v {
                            Value::String(s) => format!("{key}={s}"),
                            other => format!("{key}={other}"),
                        })
                        .collect::<Vec<_>>()
                        .join(" ");
                    println!("{row}");
                }
            }
            Ok(())
        }
        (None, None) => Err(Failure::input("twisted needs --char or --chars")),
        (Some(_), Some(_)) => unreachable!("clap rejects --char with --chars"),
    }
}

fn run_aomoto(format: Format, group: &Path, alpha: &str, k: Option<usize>) -> RunResult<()> {
    let p = load_group(group)?;
    let alpha = OneForm::new(&p, parse_rationals(alpha, "one-form")?)?;
    let dim = cup_data(&p).aomoto_h1_dim(&alpha);
    let mut pairs = vec![
        ("group", json!(p.name())),
        ("alpha", json!(rat_list(alpha.coords()))),
        ("model", json!(RING_MODEL)),
        ("dim", json!(dim)),
    ];
    if let Some(k) = k {
        pairs.push(("k", json!(k)));
        pairs.push(("member", json!(dim >= k)));
    }
    emit(format, &pairs);
    Ok(())
}

fn run_generic(format: Format, group: &Path, torus: &Path) -> RunResult<()> {
    let p = load_group(group)?;
    let w = load_torus(torus)?;
    let dim = generic_h1_dim_along(&p, &w)?;
    emit(
        format,
        &[
            ("group", json!(p.name())),
            ("torus", json!(w.name())),
            ("params", json!(w.params())),
            ("generic_h1_dim", json!(dim)),
        ],
    );
    Ok(())
}

fn run_jump(format: Format, group: &Path, torus: &Path) -> RunResult<()> {
    let p = load_group(group)?;
    let w = load_torus(torus)?;
    let report = jumping_points_1d(&p, &w)?;
    let points: Vec<Value> = report
        .torsion_points
        .iter()
        .map(|pt| {
            json!({
                "param": pt.param.exponent().to_string(),
                "order": pt.order,
                "h1_dim": pt.h1_dim,
            })
        })
        .collect();
    let trivial_params: Vec<Value> = report
        .trivial_char_params
        .iter()
        .map(|z| json!(z.exponent().to_string()))
        .collect();
    emit(
        format,
        &[
            ("group", json!(p.name())),
            ("torus", json!(report.torus)),
            ("generic_rank", json!(report.generic_rank)),
            ("generic_h1_dim", json!(report.generic_h1_dim)),
            ("points", Value::Array(points)),
            (
                "non_torsion_factor",
                match &report.non_torsion_factor {
                    Some(f) => json!(f.to_string()),
                    None => Value::Null,
                },
            ),
            ("trivial_char_params", Value::Array(trivial_params)),
        ],
    );
    Ok(())
}

fn run_admissible(format: Format, group: &Path, char_arg: &str, box_radius: u64) -> RunResult<()> {
    let p = load_group(group)?;
    let chi = Character::validated(&p, parse_rationals(char_arg, "character")?)?;
    let report = is_admissible(&p, &chi, LiftBox::new(box_radius))?;
    let lifts: Vec<Value> = report
        .lifts
        .iter()
        .map(|(alpha, rhs)| json!({"alpha": rat_list(alpha.coords()), "rhs": rhs}))
        .collect();
    emit(
        format,
        &[
            ("group", json!(p.name())),
            ("character", json!(report.character.emit())),
            ("box_radius", json!(box_radius)),
            ("formal", json!(report.formal)),
            ("lhs", json!(report.lhs)),
            ("lifts", Value::Array(lifts)),
            ("admissible", json!(report.admissible)),
            (
                "witness",
                match &report.witness {
                    Some(alpha) => json!(rat_list(alpha.coords())),
                    None => Value::Null,
                },
            ),
        ],
    );
    Ok(())
}

fn run_symmetry(format: Format, group: &Path, char_arg: &str) -> RunResult<()> {
    let p = load_group(group)?;
    let chi = Character::validated(&p, parse_rationals(char_arg, "character")?)?;
    let r = symmetry_check(&p, &chi)?;
    emit(
        format,
        &[
            ("group", json!(p.name())),
            ("character", json!(chi.emit())),
            ("inverse", json!(chi.inverse().emit())),
            ("dim_at", json!(r.dim_at)),
            ("dim_at_inverse", json!(r.dim_at_inverse)),
            ("equal", json!(r.equal)),
        ],
    );
    Ok(())
}

fn run_curve(format: Format, genus: u64, punctures: Option<u64>, proper: bool) -> RunResult<()> {
    let k = if proper {
        0
    } else {
        punctures.ok_or_else(|| Failure::input("curve needs --punctures or --proper"))?
    };
    let s = CurveDescriptor::new(genus, k);
    let (dim_w, generic) = match component_dims(&s) {
        Ok((dim_w, generic)) => (json!(dim_w), json!(generic)),
        Err(Error::DegenerateCurve(_)) => (Value::Null, Value::Null),
        Err(e) => return Err(e.into()),
    };
    emit(
        format,
        &[
            ("genus", json!(s.genus)),
            ("punctures", json!(s.punctures)),
            ("proper", json!(s.is_proper())),
            ("euler_char", json!(s.euler_char())),
            ("b1", json!(s.b1())),
            ("h1_trivial", json!(curve_h1_dim(&s, true))),
            ("h1_nontrivial", json!(curve_h1_dim(&s, false))),
            ("dim_w", dim_w),
            ("generic_dim", generic),
        ],
    );
    Ok(())
}

fn run_lifts(format: Format, group: &Path, char_arg: &str, box_radius: u64) -> RunResult<()> {
    let p = load_group(group)?;
    let chi = Character::validated(&p, parse_rationals(char_arg, "character")?)?;
    let lifts = exp_lift_candidates(&p, &chi, LiftBox::new(box_radius))?;
    let rendered: Vec<Value> = lifts
        .iter()
        .map(|alpha| json!(rat_list(alpha.coords())))
        .collect();
    emit(
        format,
        &[
            ("group", json!(p.name())),
            ("character", json!(chi.emit())),
            ("box_radius", json!(box_radius)),
            ("count", json!(lifts.len())),
            ("lifts", Value::Array(rendered)),
        ],
    );
    Ok(())
}

fn run(cli: Cli) -> RunResult<()> {
    let format = cli.format;
    match &cli.command {
        Command::Twisted {
            group,
            char,
            chars,
            k,
        } => run_twisted(format, group, char.as_deref(), chars.as_deref(), *k),
        Command::Aomoto { group, alpha, k } => run_aomoto(format, group, alpha, *k),
        Command::Generic { group, torus } => run_generic(format, group, torus),
        Command::Jump { group, torus } => run_jump(format, group, torus),
        Command::Admissible {
            group,
            char,
            box_radius,
        } => run_admissible(format, group, char, *box_radius),
        Command::Symmetry { group, char } => run_symmetry(format, group, char),
        Command::Curve {
            genus,
            punctures,
            proper,
        } => run_curve(format, *genus, *punctures, *proper),
        Command::Lifts {
            group,
            char,
            box_radius,
        } => run_lifts(format, group, char, *box_radius),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
