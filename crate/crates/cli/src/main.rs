//! `uniserial`: command-line front end.
//!
//! Exit codes: 0 success or positive verdict, 1 negative verdict, 2 bad
//! input, 3 internal invariant violation.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use uniserial::detour::parse_vertex_sequence;
use uniserial::field::{format_point, parse_point};
use uniserial::{
    build_module, decide_iso, enumerate_detours, enumerate_masts, groebner_basis, is_route,
    is_unit_ideal, iso_system, layered_graph, layered_graph_with_top,
    parse_presentation_with_report, print_presentation, realize_variety, transport_mast,
    variety_generators, verify_realization, Error, Field, FieldElement, IdealBasis, Mast,
    Presentation, RealizationInput, Transport,
};

#[derive(Parser)]
#[command(
    name = "uniserial",
    version,
    about = "Uniserial varieties of path algebras with relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the detour table and variable numbering of a mast.
    Detours {
        #[command(flatten)]
        target: MastArgs,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a path is a route on a mast (exit 0 yes, 1 no).
    Route {
        #[command(flatten)]
        target: MastArgs,
        /// Path to test.
        #[arg(long)]
        path: String,
    },
    /// Print generators of the ideal of the variety.
    Variety {
        #[command(flatten)]
        target: MastArgs,
        /// Print the reduced Groebner basis instead of the raw generators.
        #[arg(long)]
        groebner: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether the variety is nonempty (exit 0 nonempty, 1 empty).
    Nonempty {
        #[command(flatten)]
        target: MastArgs,
    },
    /// Print the representation matrices of the module of a point.
    Module {
        #[command(flatten)]
        target: MastArgs,
        #[command(flatten)]
        point: PointArgs,
        /// Also print the layered graph.
        #[arg(long, value_enum)]
        graph: Option<GraphFormat>,
        /// Alternative top element for the graph, as coordinates in the module basis.
        #[arg(long, requires = "graph")]
        top: Option<String>,
    },
    /// Print the polynomial system whose solvability decides isomorphism.
    Isosys {
        #[command(flatten)]
        target: MastArgs,
    },
    /// Decide whether two points give isomorphic modules (exit 0 yes, 1 no).
    Iso {
        #[command(flatten)]
        target: MastArgs,
        #[arg(long, allow_hyphen_values = true)]
        point_a: String,
        #[arg(long, allow_hyphen_values = true)]
        point_b: String,
    },
    /// Move a point to the variety of another mast through the same vertices
    /// (exit 0 moved, 1 outside the overlap).
    Transport {
        /// Presentation file.
        presentation: PathBuf,
        /// Source mast.
        #[arg(long)]
        from: String,
        /// Target mast.
        #[arg(long)]
        to: String,
        #[command(flatten)]
        point: PointArgs,
    },
    /// List the paths through a vertex sequence.
    Masts {
        presentation: PathBuf,
        /// Vertex identifiers separated by spaces or commas.
        #[arg(long)]
        vertices: String,
        /// Compute the variety of every listed mast.
        #[arg(long)]
        variety_all: bool,
    },
    /// Build a presentation whose variety is the zero set of a polynomial system
    /// (exit 0 verified, 3 verification failed).
    Realize {
        /// File with one polynomial per line in `X[i]` syntax.
        input: PathBuf,
        /// `Q` or `GF(p)`.
        #[arg(long, default_value = "Q")]
        field: String,
        /// Number of variables; defaults to the largest index used.
        #[arg(long)]
        vars: Option<usize>,
        /// Write the presentation here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the JSON variable map here.
        #[arg(long)]
        map: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct MastArgs {
    /// Presentation file.
    presentation: PathBuf,
    /// The mast, e.g. `beta*alpha`.
    #[arg(short = 'p', long = "mast")]
    mast: String,
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct PointArgs {
    /// Comma-separated coordinates in canonical variable order.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// File holding the point.
    #[arg(long)]
    point_file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Text,
}

enum Failure {
    Input(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(m) => Failure::Invariant(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<(String, u8), Failure>;

fn read(path: &FsPath) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &FsPath, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &FsPath) -> Result<Presentation, Failure> {
    let (pres, notes) = parse_presentation_with_report(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    for n in notes {
        eprintln!("note: {n}");
    }
    Ok(pres)
}

fn load_mast(args: &MastArgs) -> Result<(Presentation, Mast), Failure> {
    let pres = load(&args.presentation)?;
    let mast = Mast::parse(&pres.quiver, &args.mast)?;
    Ok((pres, mast))
}

fn point(field: Field, text: &str, nvars: usize) -> Result<Vec<FieldElement>, Failure> {
    let k = parse_point(field, text)?;
    if k.len() != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            found: k.len(),
        }
        .into());
    }
    Ok(k)
}

fn point_arg(field: Field, args: &PointArgs, nvars: usize) -> Result<Vec<FieldElement>, Failure> {
    match (&args.point, &args.point_file) {
        (Some(text), _) => point(field, text, nvars),
        (None, Some(path)) => point(field, &read(path)?, nvars),
        (None, None) => Err(Failure::Input("a point is required".into())),
    }
}

fn ideal_lines(ideal: &IdealBasis) -> Vec<String> {
    ideal.generators().iter().map(ToString::to_string).collect()
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Detours { target, json } => {
            let (pres, mast) = load_mast(&target)?;
            let table = enumerate_detours(&pres.quiver, &mast);
            let out = if json {
                format!("{:#}\n", table.to_json(&pres.quiver))
            } else {
                table.render(&pres.quiver)
            };
            Ok((out, 0))
        }
        Command::Route { target, path } => {
            let (pres, mast) = load_mast(&target)?;
            let q = pres.quiver.parse_path(&path)?;
            let yes = is_route(&pres.quiver, &q, &mast);
            let verdict = if yes { "route" } else { "not a route" };
            Ok((format!("{verdict}\n"), u8::from(!yes)))
        }
        Command::Variety {
            target,
            groebner,
            json,
        } => {
            let (pres, mast) = load_mast(&target)?;
            let v = variety_generators(&pres, &mast)?;
            let ideal = if groebner {
                groebner_basis(&v.ideal)
            } else {
                v.ideal.clone()
            };
            let gens = ideal_lines(&ideal);
            let empty = is_unit_ideal(&groebner_basis(&v.ideal));
            let out = if json {
                let value = json!({
                    "version": 1,
                    "mast": mast.display(&pres.quiver),
                    "field": pres.field.to_string(),
                    "variables": v.nvars(),
                    "order": ideal.order().name(),
                    "groebner": groebner,
                    "empty": empty,
                    "generators": gens,
                });
                format!("{value:#}\n")
            } else {
                let mut out = format!(
                    "variety of {} in A^{} over {}\n",
                    mast.display(&pres.quiver),
                    v.nvars(),
                    pres.field
                );
                if gens.is_empty() {
                    out.push_str("zero ideal\n");
                }
                for g in gens {
                    let _ = writeln!(out, "{g}");
                }
                out
            };
            Ok((out, 0))
        }
        Command::Nonempty { target } => {
            let (pres, mast) = load_mast(&target)?;
            let v = variety_generators(&pres, &mast)?;
            let empty = is_unit_ideal(&groebner_basis(&v.ideal));
            Ok((
                format!("{}\n", if empty { "empty" } else { "nonempty" }),
                u8::from(empty),
            ))
        }
        Command::Module {
            target,
            point: p,
            graph,
            top,
        } => {
            let (pres, mast) = load_mast(&target)?;
            let v = variety_generators(&pres, &mast)?;
            let k = point_arg(pres.field, &p, v.nvars())?;
            let m = build_module(&pres, &v, &k)?;
            m.verify(&pres)?;
            let mut out = m.render(&pres.quiver);
            if let Some(format) = graph {
                let g = match &top {
                    Some(t) => {
                        layered_graph_with_top(&pres.quiver, &m, &point(pres.field, t, m.dim())?)?
                    }
                    None => layered_graph(&pres.quiver, &m),
                };
                out.push_str(&match format {
                    GraphFormat::Dot => g.to_dot(&pres.quiver),
                    GraphFormat::Text => g.to_text(&pres.quiver),
                });
            }
            Ok((out, 0))
        }
        Command::Isosys { target } => {
            let (pres, mast) = load_mast(&target)?;
            let table = enumerate_detours(&pres.quiver, &mast);
            let sys = iso_system(&pres, &table)?;
            Ok((sys.render(&table, &pres.quiver), 0))
        }
        Command::Iso {
            target,
            point_a,
            point_b,
        } => {
            let (pres, mast) = load_mast(&target)?;
            let v = variety_generators(&pres, &mast)?;
            let sys = iso_system(&pres, &v.table)?;
            let a = point(pres.field, &point_a, v.nvars())?;
            let b = point(pres.field, &point_b, v.nvars())?;
            let d = decide_iso(&v, &sys, &a, &b)?;
            if !d.isomorphic {
                return Ok(("not isomorphic\n".into(), 1));
            }
            let mut out = String::from("isomorphic\n");
            let witness = d.witness.unwrap_or_default();
            let parts: Vec<String> = witness
                .iter()
                .enumerate()
                .map(|(j, c)| format!("Z[{}] = {c}", j + 1))
                .collect();
            let _ = writeln!(
                out,
                "witness: {}",
                if parts.is_empty() {
                    "none needed".into()
                } else {
                    parts.join(", ")
                }
            );
            Ok((out, 0))
        }
        Command::Transport {
            presentation,
            from,
            to,
            point: p,
        } => {
            let pres = load(&presentation)?;
            let from = variety_generators(&pres, &Mast::parse(&pres.quiver, &from)?)?;
            let to = variety_generators(&pres, &Mast::parse(&pres.quiver, &to)?)?;
            let k = point_arg(pres.field, &p, from.nvars())?;
            match transport_mast(&pres, &from, &to, &k)? {
                Transport::Point {
                    point,
                    basis_change,
                } => {
                    let out = format!("{}\nbasis change:\n{basis_change}", format_point(&point));
                    Ok((out, 0))
                }
                Transport::NotInOverlap => Ok(("not in overlap\n".into(), 1)),
            }
        }
        Command::Masts {
            presentation,
            vertices,
            variety_all,
        } => {
            let pres = load(&presentation)?;
            let seq = parse_vertex_sequence(&pres.quiver, &vertices)?;
            let mut out = String::new();
            for m in enumerate_masts(&pres.quiver, &seq) {
                let name = m.display(&pres.quiver);
                if !variety_all {
                    let _ = writeln!(out, "{name}");
                    continue;
                }
                let v = variety_generators(&pres, &m)?;
                let gb = groebner_basis(&v.ideal);
                let summary = if is_unit_ideal(&gb) {
                    "empty".to_string()
                } else if gb.is_zero_ideal() {
                    format!("A^{}", v.nvars())
                } else {
                    format!("A^{} cut by {}", v.nvars(), ideal_lines(&gb).join(", "))
                };
                let _ = writeln!(out, "{name}: {summary}");
            }
            Ok((out, 0))
        }
        Command::Realize {
            input,
            field,
            vars,
            output,
            map,
        } => {
            let field = parse_field(&field)?;
            let inp = RealizationInput::parse(&read(&input)?, field, vars)
                .map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?;
            let r = realize_variety(&inp)?;
            let text = print_presentation(&r.presentation);
            let verified = verify_realization(&r)?;
            let mut out = String::new();
            match &output {
                Some(path) => write(path, &text)?,
                None => out.push_str(&text),
            }
            if let Some(path) = &map {
                write(path, &format!("{:#}\n", r.variable_map()))?;
            }
            let _ = writeln!(out, "# mast {}", r.mast.display(&r.presentation.quiver));
            let _ = writeln!(
                out,
                "# {} variables after multilinearization",
                r.system.nvars()
            );
            let _ = writeln!(
                out,
                "# verification: {}",
                if verified { "ok" } else { "FAILED" }
            );
            if !verified {
                return Err(Failure::Invariant(format!(
                    "{out}realized variety differs from the input system"
                )));
            }
            Ok((out, 0))
        }
    }
}

fn parse_field(text: &str) -> Result<Field, Failure> {
    let t = text.trim();
    if t == "Q" {
        return Ok(Field::Rational);
    }
    let p = t
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| s.parse::<u32>().ok())
        .ok_or_else(|| Failure::Input(format!("unknown field `{t}`; use Q or GF(p)")))?;
    Ok(Field::prime(p)?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}
