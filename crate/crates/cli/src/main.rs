//! `tsc`: build total simplicial complexes, inspect them and check the
//! friendship-graph formulas from the command line.
//!
//! Exit codes: 0 success, 2 input error, 3 a check failed under `--assert`.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tsc_core::cover::decomposition;
use tsc_core::friendship::{render_table, verify_friendship};
use tsc_core::tsc::c42_fixture_json;
use tsc_core::{
    boundary_matrix, build_tsc, c42, friendship, homology_summary, is_cm, is_cm_t, minimal_vertex_covers,
    tsc_cm_shortcut, CmReport, ComplexFile, Exec, FieldSpec, Graph, GraphFile, SimplicialComplex, TotalLabeling,
};

#[derive(Parser, Debug)]
#[command(name = "tsc", version, about = "Total simplicial complexes of graphs")]
struct Cli {
    /// Coefficient field: "q" or "gf:<p>".
    #[arg(long, global = true, default_value = "gf:32003")]
    field: FieldSpec,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Exit with status 3 when the computed verdict is false.
    #[arg(long, global = true)]
    assert: bool,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a labeled graph file.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Build the total simplicial complex of a graph file.
    Tsc { graph: PathBuf },
    /// Face counts per dimension.
    Fvector { complex: PathBuf },
    /// Boundary ranks and Betti numbers.
    Homology { complex: PathBuf },
    /// Cohen-Macaulay, Buchsbaum or CM_t check.
    Check {
        #[arg(value_enum)]
        property: Property,
        /// The t of CM_t.
        #[arg(long, default_value_t = 0)]
        t: usize,
        /// A complex file, or a graph file for `shortcut`.
        input: PathBuf,
    },
    /// Minimal vertex covers and unmixedness.
    Covers { complex: PathBuf },
    /// Minimal primes of the facet ideal.
    Decompose { complex: PathBuf },
    /// Boundary matrix ∂_r as 1-based `r row col value` triplets.
    Boundary {
        #[arg(long)]
        r: usize,
        complex: PathBuf,
    },
    /// Write a shipped fixture complex.
    Fixture {
        #[arg(value_enum)]
        name: Fixture,
    },
    /// Compare the friendship-graph closed forms with direct computation.
    VerifyFriendship {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=4))]
        n_max: u64,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// n triangles sharing a vertex.
    Friendship {
        #[arg(long)]
        n: u32,
    },
    /// Two 4-cycles sharing a path of length 2.
    C42,
    /// Any simple graph, with the default labeling.
    EdgeList {
        /// Number of vertices.
        #[arg(long)]
        m: usize,
        /// Comma-separated edges such as `1-2,2-3`.
        #[arg(long, default_value = "")]
        edges: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Cm,
    Buchsbaum,
    Cmt,
    /// First-homology test on the graph's complex (connected graphs only).
    Shortcut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Fixture {
    C42,
}

/// Rendered output plus the verdict `--assert` looks at.
struct Output {
    body: String,
    verdict: bool,
}

impl Output {
    fn plain(body: String) -> Self {
        Output { body, verdict: true }
    }
}

fn read_input(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, String> {
    let text = read_input(path)?;
    ComplexFile::from_json(&text)
        .and_then(ComplexFile::into_complex)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<(Graph, TotalLabeling), String> {
    let text = read_input(path)?;
    GraphFile::from_json(&text)
        .and_then(GraphFile::into_graph)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_edges(s: &str) -> Result<Vec<(u32, u32)>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|e| !e.is_empty())
        .map(|e| {
            let (u, v) = e.split_once('-').ok_or_else(|| format!("bad edge {e:?}; expected u-v"))?;
            let p = |x: &str| x.trim().parse::<u32>().map_err(|_| format!("bad edge {e:?}"));
            Ok((p(u)?, p(v)?))
        })
        .collect()
}

fn render_cm(report: &CmReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => {
            let mut s = format!("verdict: {}\nfield: {}\npure: {}\n", report.verdict, report.field, report.purity_ok);
            if let Some(w) = &report.witness {
                writeln!(s, "witness: link of {:?} has reduced betti_{} = {}", w.face, w.r, w.betti).unwrap();
            }
            s
        }
    }
}

fn run(cli: &Cli) -> Result<Output, String> {
    let field = cli.field;
    let text = cli.format == Format::Text;
    let err = |e: tsc_core::Error| e.to_string();
    let out = match &cli.command {
        Command::Gen { family } => {
            let (g, l) = match family {
                Family::Friendship { n } => friendship(*n).map_err(err)?,
                Family::C42 => c42(),
                Family::EdgeList { m, edges } => {
                    let g = Graph::from_edge_list(*m, &parse_edges(edges)?).map_err(err)?;
                    let l = TotalLabeling::default_for(&g);
                    (g, l)
                }
            };
            Output::plain(GraphFile::from_graph(&g, &l).to_json())
        }
        Command::Tsc { graph } => {
            let (g, l) = load_graph(graph)?;
            let c = build_tsc(&g, &l).map_err(err)?;
            Output::plain(if text { c.render_text() } else { c.to_file().to_json() })
        }
        Command::Fvector { complex } => {
            let f = load_complex(complex)?.f_vector();
            Output::plain(if text { f.to_string() } else { serde_json::to_string(&f.0).unwrap() })
        }
        Command::Homology { complex } => {
            let h = homology_summary(&load_complex(complex)?, field);
            let body = if text {
                format!(
                    "field: {}\nalpha: {}\nrank im: {:?}\nbetti: {:?}\nreduced betti: {:?}",
                    h.field, h.alpha, h.rank_im, h.betti, h.reduced_betti
                )
            } else {
                serde_json::to_string(&h).unwrap()
            };
            Output::plain(body)
        }
        Command::Check { property, t, input } => match property {
            Property::Shortcut => {
                let (g, l) = load_graph(input)?;
                let verdict = tsc_cm_shortcut(&g, &l, field).map_err(err)?;
                let body = if text {
                    format!("verdict: {verdict}\nfield: {field}")
                } else {
                    json!({ "verdict": verdict, "field": field.to_string() }).to_string()
                };
                Output { body, verdict }
            }
            _ => {
                let c = load_complex(input)?;
                let report = match property {
                    Property::Cm => is_cm(&c, field),
                    Property::Buchsbaum => is_cm_t(&c, 1, field),
                    _ => is_cm_t(&c, *t, field),
                };
                Output { body: render_cm(&report, cli.format), verdict: report.verdict }
            }
        },
        Command::Covers { complex } => {
            let r = minimal_vertex_covers(&load_complex(complex)?);
            let body = if text {
                let mut s = String::new();
                for c in &r.covers {
                    writeln!(s, "{c:?}").unwrap();
                }
                write!(s, "covers: {}\nsizes: {:?}\nunmixed: {}", r.covers.len(), r.size_histogram(), r.unmixed).unwrap();
                s
            } else {
                serde_json::to_string(&r).unwrap()
            };
            Output { body, verdict: r.unmixed }
        }
        Command::Decompose { complex } => {
            let d = decomposition(&load_complex(complex)?);
            let body = if text { d.render_text() } else { d.to_json() };
            Output { body, verdict: d.unmixed }
        }
        Command::Boundary { r, complex } => {
            let m = boundary_matrix(&load_complex(complex)?, *r).map_err(err)?;
            let body = if text {
                m.to_triplets()
            } else {
                let (rows, cols) = m.shape();
                json!({ "r": m.r, "rows": rows, "cols": cols, "row_faces": m.rows, "col_faces": m.cols, "columns": m.columns })
                    .to_string()
            };
            Output::plain(body)
        }
        Command::Fixture { name: Fixture::C42 } => Output::plain(c42_fixture_json().trim_end().to_string()),
        Command::VerifyFriendship { n_max } => {
            let rows = verify_friendship(*n_max, Exec::default());
            let verdict = rows.iter().all(|r| r.all_pass());
            let body = if text { render_table(&rows) } else { serde_json::to_string(&rows).unwrap() };
            Output { body, verdict }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut body = out.body;
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &body) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if cli.assert && !out.verdict {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}
