use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vaw_core::coxeter::{classify, parse_graph, CoxeterGraph, Kind};
use vaw_core::presentations::{dimension_report, foi_analysis, gamma_hat, kva_presentation, pva_presentation};
use vaw_core::roots::{enumerate_roots, parse_root, MHat, MHatEntry, Root, DEFAULT_CAP, DEFAULT_DEPTH};
use vaw_core::virtual_artin::{kernel_rewrite, VAWord};
use vaw_core::wordproblem::{va_solve, Verdict};
use vaw_core::Error;

#[derive(Parser)]
#[command(name = "vaw", version, about = "Root systems, kernel presentations and the word problem of virtual Artin groups")]
struct Cli {
    /// Inline graph, e.g. "family A 2" or "vertices a b; edge a b 4"
    #[arg(long, global = true, conflicts_with = "graph_file")]
    graph: Option<String>,
    /// File in the same graph format
    #[arg(long, global = true)]
    graph_file: Option<PathBuf>,
    /// Search depth for infinite Coxeter groups
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    /// Enumeration cap
    #[arg(long, global = true, env = "VAW_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PresentKind {
    Kva,
    Pva,
}

#[derive(Subcommand)]
enum Command {
    /// Spherical / affine / other, per component
    Classify,
    /// The root system (all of it for finite W, else up to --depth)
    Roots,
    /// The label m̂ of two roots, given as [c1,...] or word:s
    Mhat { beta: String, gamma: String },
    /// Presentation of KVA or PVA on a finite root set (default: simple roots)
    Present {
        #[arg(value_enum)]
        kind: PresentKind,
        #[arg(long, num_args = 1.., conflicts_with = "full")]
        support: Vec<String>,
        /// Use every root (finite W only)
        #[arg(long)]
        full: bool,
    },
    /// Rewrite a kernel word over the generators d[β]
    Rewrite { word: String },
    /// Decide whether a word is trivial
    Solve { word: String },
    /// Free-of-infinity subsets of a root set (default: all roots)
    Analyze {
        #[arg(long, num_args = 1..)]
        support: Vec<String>,
    },
    /// cd(KVA) and vcd(VA)
    Dims,
}

enum Failure {
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Core(e) => match e {
                Error::Parse(_)
                | Error::UnknownVertex(_)
                | Error::InvalidLabel(_)
                | Error::ConflictingEdge(..)
                | Error::DuplicateVertex(_)
                | Error::UnknownFamily(_)
                | Error::NotARoot(_)
                | Error::MixedSigns(_) => 2,
                Error::UndeterminedLabel(..) => 5,
                _ => 3,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

struct Report {
    text: String,
    json: Value,
    code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Report {
        Report { text, json, code: 0 }
    }
}

fn load_graph(cli: &Cli) -> Result<Arc<CoxeterGraph>, Failure> {
    let text = match (&cli.graph, &cli.graph_file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => return Err(Failure::Input("a graph is required (--graph or --graph-file)".into())),
    };
    Ok(parse_graph(&text)?)
}

fn witness(g: &CoxeterGraph, r: &Root) -> String {
    let (word, s) = r.witness();
    let names: Vec<&str> = word.iter().map(|&i| g.vertices()[i].as_str()).collect();
    format!("{}:{}", names.join(","), g.vertices()[s])
}

fn is_finite(g: &CoxeterGraph) -> bool {
    classify(g).kind == Kind::Spherical
}

fn root_set(g: &Arc<CoxeterGraph>, support: &[String], cap: usize, full: bool) -> Result<Vec<Root>, Failure> {
    if !support.is_empty() {
        return support.iter().map(|t| parse_root(g, t, cap).map_err(Failure::from)).collect();
    }
    if full {
        if !is_finite(g) {
            return Err(Error::NotSpherical("the full root set is infinite; pass --support".into()).into());
        }
        return Ok(enumerate_roots(g, None, cap)?.roots().to_vec());
    }
    Ok((0..g.rank()).map(|s| Root::simple(g, s)).collect())
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let g = load_graph(cli)?;
    let (depth, cap) = (cli.depth, cli.cap);
    match &cli.command {
        Command::Classify => {
            let class = classify(&g);
            let ctx = g.context();
            let mut text = format!("kind: {}\nfield: L={} degree {} minpoly {}\n", class.kind, ctx.order(), ctx.degree(), ctx.minpoly_string());
            let mut comps = Vec::new();
            for c in &class.components {
                let names: Vec<&str> = c.vertices.iter().map(|&i| g.vertices()[i].as_str()).collect();
                let family = c.family.as_deref().unwrap_or("-");
                let _ = writeln!(text, "component {{{}}}: {} {family}, rank {}", names.join(", "), c.kind, c.rank);
                comps.push(json!({"vertices": names, "kind": c.kind.to_string(), "family": c.family, "rank": c.rank}));
            }
            let doc = json!({
                "kind": class.kind.to_string(),
                "field": {"order": ctx.order(), "degree": ctx.degree(), "minpoly": ctx.minpoly_string()},
                "components": comps,
            });
            Ok(Report::ok(text, doc))
        }
        Command::Roots => {
            let limit = if is_finite(&g) { None } else { Some(depth) };
            let system = enumerate_roots(&g, limit, cap)?;
            let mut text = match limit {
                None => format!("roots: {} (complete)\n", system.len()),
                Some(d) => format!("roots: {} within depth {d}\n", system.len()),
            };
            let mut rows = Vec::new();
            for r in system.roots() {
                let positive = r.is_positive()?;
                let _ = writeln!(text, "{r}  {}", witness(&g, r));
                rows.push(json!({"coords": r.to_string(), "witness": witness(&g, r), "positive": positive}));
            }
            let doc = json!({"complete": system.is_complete(), "depth": limit, "count": system.len(), "roots": rows});
            Ok(Report::ok(text, doc))
        }
        Command::Mhat { beta, gamma } => {
            let b = parse_root(&g, beta, cap)?;
            let c = parse_root(&g, gamma, cap)?;
            let m = MHat::new(&g, depth, cap)?.roots(&b, &c)?;
            let code = if matches!(m, MHatEntry::Undetermined(_)) { 5 } else { 0 };
            Ok(Report {
                text: format!("{m}\n"),
                json: json!({"beta": b.to_string(), "gamma": c.to_string(), "mhat": m.to_string()}),
                code,
            })
        }
        Command::Present { kind, support, full } => {
            let roots = root_set(&g, support, cap, *full)?;
            let mh = MHat::new(&g, depth, cap)?;
            let h = gamma_hat(&g, &roots, &mh)?;
            let p = match kind {
                PresentKind::Kva => kva_presentation(&h),
                PresentKind::Pva => pva_presentation(&h)?,
            };
            let doc = serde_json::to_value(p.to_doc()).expect("serializable");
            Ok(Report::ok(p.to_string(), doc))
        }
        Command::Rewrite { word } => {
            let w = VAWord::parse(&g, word)?;
            let mh = MHat::new(&g, depth, cap)?;
            let k = kernel_rewrite(&w, &mh)?;
            let support: Vec<String> = k.support().iter().map(|r| r.to_string()).collect();
            let mut text = format!("support: {}\nlabels:\n", support.join(" "));
            let mut labels = Vec::new();
            for i in 0..support.len() {
                for j in i + 1..support.len() {
                    let m = k.labels()[i][j];
                    let _ = writeln!(text, "  {} {} {m}", support[i], support[j]);
                    labels.push(json!({"a": support[i], "b": support[j], "m": m.to_string()}));
                }
            }
            let _ = writeln!(text, "word: {k}");
            Ok(Report::ok(text, json!({"support": support, "labels": labels, "word": k.to_string()})))
        }
        Command::Solve { word } => {
            if classify(&g).kind == Kind::Other {
                eprintln!("warning: graph is neither spherical nor affine; verdicts may be unsupported");
            }
            let w = VAWord::parse(&g, word)?;
            let mh = MHat::new(&g, depth, cap)?;
            let out = va_solve(&w, &mh, cap)?;
            let code = if matches!(out.verdict, Verdict::Unsupported(_)) { 4 } else { 0 };
            Ok(Report {
                text: out.to_string(),
                json: serde_json::to_value(&out).expect("serializable"),
                code,
            })
        }
        Command::Analyze { support } => {
            let roots = root_set(&g, support, cap, true)?;
            let mh = MHat::new(&g, depth, cap)?;
            let h = gamma_hat(&g, &roots, &mh)?;
            let report = foi_analysis(&h)?;
            let holds = |b: bool| if b { "holds" } else { "FAILS" };
            let mut text = format!("roots: {}\n", report.roots.join(" "));
            let _ = writeln!(
                text,
                "n_sph(hat)={} n_sph(base)={} max|Y|={}\nn_sph bound: {}\n|Y| <= 2 n_sph bound: {}\nsubsets: {}",
                report.n_sph_hat,
                report.n_sph_base,
                report.max_foi_size,
                holds(report.nsph_bound_holds),
                holds(report.size_bound_holds),
                report.rows.len()
            );
            for row in &report.rows {
                let names: Vec<&str> = row.members.iter().map(|&i| report.roots[i].as_str()).collect();
                let _ = writeln!(text, "  {{{}}} {} n_sph={}", names.join(", "), row.kind, row.n_sph);
            }
            Ok(Report::ok(text, serde_json::to_value(&report).expect("serializable")))
        }
        Command::Dims => {
            let r = dimension_report(&g)?;
            Ok(Report::ok(format!("{r}\n"), serde_json::to_value(&r).expect("serializable")))
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify => "classify",
        Command::Roots => "roots",
        Command::Mhat { .. } => "mhat",
        Command::Present { .. } => "present",
        Command::Rewrite { .. } => "rewrite",
        Command::Solve { .. } => "solve",
        Command::Analyze { .. } => "analyze",
        Command::Dims => "dims",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let body = match cli.format {
                Format::Text => report.text,
                Format::Json => {
                    let doc = json!({"command": command_name(&cli.command), "result": report.json});
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
            };
            // a closed pipe is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(report.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
