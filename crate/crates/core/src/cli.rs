//! Command-line front end. Every command prints one compact JSON document.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{verify_bounds, DEFAULT_MAX_EXACT};
use crate::delivery::{
    assign_codes, build_customer_graph, codebook_document, validate_codebook, CustomerRoster, GeodesicRule,
};
use crate::dimension::{find_dimension, DimensionKind, SearchOptions};
use crate::error::{Error, Result};
use crate::gallery::{by_name, SelfCheck};
use crate::graph::{Graph, VertexSubset};
use crate::io::{parse_graph, GraphDocument};
use crate::products::{cartesian_product, corona, hierarchical_product, join, ProductSpec};

#[derive(Parser, Debug)]
#[command(
    name = "lmdim",
    version,
    about = "Exact (local) metric dimension and hierarchical products"
)]
struct Cli {
    /// Search threads: 1 is sequential, 0 uses every core.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphArg {
    /// Graph document, or `-` for standard input.
    #[arg(short = 'g', long = "graph", value_name = "FILE")]
    graph: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Metric dimension.
    Dim(GraphArg),
    /// Local metric dimension.
    Ldim {
        #[command(flatten)]
        g: GraphArg,
        /// Also list every minimum local generator.
        #[arg(long)]
        all_bases: bool,
    },
    /// U-metric local dimension.
    Uldim {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        u: Vec<usize>,
    },
    /// Build a product graph.
    #[command(disable_help_flag = true)]
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        #[command(flatten)]
        g: GraphArg,
        /// Second factor, or `-` for standard input.
        #[arg(short = 'h', long = "h-graph", value_name = "FILE")]
        h: String,
        /// Root set U in G (hier only).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        u: Option<Vec<usize>>,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long, action = ArgAction::Help)]
        help: Option<bool>,
    },
    /// Compare the product bounds with the exact dimension of G(U) ⊓ H.
    #[command(disable_help_flag = true)]
    Bounds {
        #[command(flatten)]
        g: GraphArg,
        #[arg(short = 'h', long = "h-graph", value_name = "FILE")]
        h: String,
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        u: Vec<usize>,
        /// Refuse products with more vertices than this.
        #[arg(long, default_value_t = DEFAULT_MAX_EXACT)]
        max_exact: usize,
        #[arg(long, action = ArgAction::Help)]
        help: Option<bool>,
    },
    /// Emit a named graph with its structural self-check.
    Gallery {
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Assign delivery codes to a customer roster.
    Codes {
        #[arg(long, value_name = "FILE")]
        roster: String,
        #[arg(long, value_enum, default_value_t = RuleArg::Any)]
        geodesic_rule: RuleArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProductKind {
    Hier,
    Cartesian,
    Join,
    Corona,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RuleArg {
    Any,
    All,
}

#[derive(Serialize)]
struct DimensionOutput {
    value: usize,
    basis: VertexSubset,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_bases: Option<Vec<VertexSubset>>,
}

#[derive(Serialize)]
struct GalleryOutput {
    name: String,
    #[serde(flatten)]
    graph: GraphDocument,
    self_check: SelfCheck,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, source: &str) -> Result<String> {
        if source == "-" {
            if self.stdin_used {
                return Err(Error::BadParameter("standard input can only be read once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            return Ok(s);
        }
        fs::read_to_string(source).map_err(|e| Error::Format(format!("{source}: {e}")))
    }

    fn graph(&mut self, source: &str) -> Result<Graph> {
        parse_graph(&self.read(source)?)
    }
}

fn subset(members: Vec<usize>, g: &Graph) -> Result<VertexSubset> {
    VertexSubset::nonempty(members, g.order())
}

fn dimension(g: &Graph, kind: DimensionKind, all: bool, threads: usize) -> Result<String> {
    let opts = SearchOptions {
        enumerate_all: all,
        threads,
        ..SearchOptions::default()
    };
    let r = find_dimension(g, &kind, &opts)?;
    to_json(&DimensionOutput {
        value: r.value,
        basis: r.basis,
        all_bases: r.all_minimum_bases,
    })
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)?)
}

/// Returns the document to print and an optional file to write it to.
fn execute(cli: Cli, io: &mut Io) -> Result<(String, Option<PathBuf>)> {
    let threads = cli.threads;
    Ok(match cli.command {
        Command::Dim(a) => (
            dimension(&io.graph(&a.graph)?, DimensionKind::Metric, false, threads)?,
            None,
        ),
        Command::Ldim { g, all_bases } => (
            dimension(&io.graph(&g.graph)?, DimensionKind::Local, all_bases, threads)?,
            None,
        ),
        Command::Uldim { g, u } => {
            let g = io.graph(&g.graph)?;
            let u = subset(u, &g)?;
            (dimension(&g, DimensionKind::ULocal(u), false, threads)?, None)
        }
        Command::Product {
            kind, g, h, u, output, ..
        } => {
            let g = io.graph(&g.graph)?;
            let h = io.graph(&h)?;
            let product = match (kind, u) {
                (ProductKind::Hier, Some(u)) => {
                    let u = subset(u, &g)?;
                    hierarchical_product(&ProductSpec::new(g, u, h)?)?.into_graph()
                }
                (ProductKind::Hier, None) => return Err(Error::BadParameter("--u is required for --kind hier".into())),
                (_, Some(_)) => return Err(Error::BadParameter("--u only applies to --kind hier".into())),
                (ProductKind::Cartesian, None) => cartesian_product(&g, &h)?.into_graph(),
                (ProductKind::Join, None) => join(&g, &h)?,
                (ProductKind::Corona, None) => corona(&g, &h)?,
            };
            (to_json(&GraphDocument::from(&product))?, output)
        }
        Command::Bounds { g, h, u, max_exact, .. } => {
            let g = io.graph(&g.graph)?;
            let h = io.graph(&h)?;
            let u = subset(u, &g)?;
            (to_json(&verify_bounds(&ProductSpec::new(g, u, h)?, max_exact)?)?, None)
        }
        Command::Gallery { name, n, k, output } => {
            let named = by_name(&name, n, k)?;
            let doc = GalleryOutput {
                name: named.name.clone(),
                graph: GraphDocument::from(&named.graph),
                self_check: named.self_check(),
            };
            (to_json(&doc)?, output)
        }
        Command::Codes { roster, geodesic_rule } => {
            let roster = CustomerRoster::from_json(&io.read(&roster)?)?;
            let rule = match geodesic_rule {
                RuleArg::Any => GeodesicRule::Any,
                RuleArg::All => GeodesicRule::All,
            };
            let cg = build_customer_graph(&roster, rule)?;
            let book = assign_codes(&cg)?;
            let report = validate_codebook(&cg, &book)?;
            (to_json(&codebook_document(&cg, &book, &report))?, None)
        }
    })
}

fn emit(doc: &str, output: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match output {
        Some(path) => {
            fs::write(path, format!("{doc}\n")).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
        }
        None => Ok(writeln!(stdout, "{doc}")?),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InstanceTooLarge { .. } => 2,
        _ => 1,
    }
}

/// Runs one command. Exit codes: 0 success, 1 usage or validation error,
/// 2 instance too large for exact search.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                1
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let mut io = Io {
        stdin,
        stdin_used: false,
    };
    let result = execute(cli, &mut io).and_then(|(doc, out)| emit(&doc, out.as_deref(), stdout));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("lmdim").chain(args.iter().copied()),
            &mut input.as_bytes(),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    const C5: &str = r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]}"#;

    #[test]
    fn ldim_from_stdin() {
        assert_eq!(
            call(&["ldim", "-g", "-"], C5),
            (0, "{\"value\":2,\"basis\":[0,1]}\n".into(), String::new())
        );
    }

    #[test]
    fn uldim_and_dim() {
        let (code, out, _) = call(&["uldim", "-g", "-", "--u", "0,2"], C5);
        assert_eq!(code, 0);
        assert!(out.starts_with("{\"value\":"));
        let (code, out, _) = call(&["dim", "-g", "-"], C5);
        assert_eq!((code, out.as_str()), (0, "{\"value\":2,\"basis\":[0,1]}\n"));
    }

    #[test]
    fn usage_errors_exit_one() {
        let (code, _, err) = call(&["uldim", "-g", "-", "--u", "9"], C5);
        assert_eq!(code, 1);
        assert!(err.contains("vertex 9 out of range"), "{err}");
        let (code, _, err) = call(&["ldim"], C5);
        assert_eq!(code, 1);
        assert!(err.contains("--graph"), "{err}");
        let (code, _, _) = call(&["ldim", "-g", "-"], "{\"n\":2}");
        assert_eq!(code, 1);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("ldim"));
        let (code, out, _) = call(&["product", "--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("--kind"));
    }

    #[test]
    fn gallery_pipes_into_ldim() {
        let (code, doc, _) = call(&["gallery", "gamma", "--n", "1", "--k", "4"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["ldim", "-g", "-"], &doc);
        assert_eq!(code, 0);
        assert!(out.starts_with("{\"value\":1,"), "{out}");
    }

    #[test]
    fn stdin_read_once() {
        let (code, _, err) = call(&["product", "--kind", "join", "-g", "-", "-h", "-"], C5);
        assert_eq!(code, 1);
        assert!(err.contains("standard input"));
    }
}
