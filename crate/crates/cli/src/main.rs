use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rotsys_cli::suites::{group_string, split_string};
use rotsys_cli::{
    parse_appendix_a, parse_appendix_b, parse_embeddings, run_suite, write_embedding,
    AppendixError, EmbeddingFile, FormatError, Suite, SuiteError, SuiteOptions,
};
use rotsys_core::enumerate::{describe_classes, scan};
use rotsys_core::pipeline::{pipeline_k33, pipeline_k5};
use rotsys_core::polygon::WordError;
use rotsys_core::{
    boundary_word, build_graph, canon, genus_distribution, surface_from_word, theta_embeddings,
    CanonError, DedupMode, EnumError, Filter, GraphError, GraphSpec, ScanConfig, SurfaceType,
};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "rotsys",
    version,
    about = "Rotation systems of small multigraphs"
)]
struct Cli {
    /// Enumeration worker threads; overrides ROTSYS_WORKERS.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Iso,
    Equiv,
}

impl From<Mode> for DedupMode {
    fn from(m: Mode) -> DedupMode {
        match m {
            Mode::Iso => DedupMode::Iso,
            Mode::Equiv => DedupMode::Equivalence,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PipelineTarget {
    K5,
    K33,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    #[value(name = "appendixA")]
    AppendixA,
    #[value(name = "appendixB")]
    AppendixB,
}

#[derive(Subcommand)]
enum Command {
    /// Print the faces of each embedding in a native file.
    Faces { file: PathBuf },
    /// Print vertex, edge, face counts and genus.
    Genus { file: PathBuf },
    /// Print the polygon word of a one-face embedding.
    Word { file: PathBuf },
    /// Group the embeddings of one or more files into classes.
    Classify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "equiv")]
        mode: Mode,
    },
    /// Enumerate every rotation system of a named graph.
    Enumerate {
        /// e.g. K5, K3,3, theta5, circulant(8,1,4), complement(cube)
        #[arg(long)]
        graph: String,
        #[arg(long)]
        genus: Option<usize>,
        #[arg(long)]
        one_face: bool,
        #[arg(long, value_enum, default_value = "equiv")]
        mode: Mode,
        /// Print the per-genus distribution instead of the classes.
        #[arg(long)]
        distribution: bool,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Rebuild the double-torus embeddings of K5 or K3,3 by surgery.
    Pipeline {
        #[arg(value_enum)]
        target: PipelineTarget,
    },
    /// One-face embeddings of the theta graph with m parallel edges.
    Theta {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value = "equiv")]
        mode: Mode,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Run a verification suite and print its report.
    Verify {
        /// core, appendixA, appendixB, k33, torus-table, theta-question or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        include_slow: bool,
        #[arg(long)]
        budget: Option<u128>,
        /// Also write the tab-separated report to this path.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print the tab-separated report instead of the table.
        #[arg(long)]
        tsv: bool,
    },
    /// Convert a vendored-style table to the native format.
    Convert {
        #[arg(value_enum)]
        table: Table,
        file: PathBuf,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{path}: {source}")]
    Appendix {
        path: PathBuf,
        source: AppendixError,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Suite(#[from] SuiteError),
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> Result<Vec<EmbeddingFile>, CliError> {
    parse_embeddings(&read(path)?).map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })
}

fn surface(s: SurfaceType) -> String {
    match s {
        SurfaceType::Orientable { genus } => format!("orientable genus {genus}"),
        SurfaceType::NonOrientable {
            euler_characteristic,
        } => format!("non-orientable, Euler characteristic {euler_characteristic}"),
    }
}

/// Output text and whether every check passed.
fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let mut config = ScanConfig::from_env();
    if let Some(w) = cli.workers {
        config = config.with_workers(w);
    }
    let mut out = String::new();
    match cli.command {
        Command::Faces { file } => {
            for doc in load(&file)? {
                let e = &doc.embedding;
                let faces = e.trace_faces();
                writeln!(out, "{}: {} faces", doc.name, faces.faces.len()).unwrap();
                for (i, face) in faces.faces.iter().enumerate() {
                    let darts: Vec<String> = face
                        .iter()
                        .map(|&d| {
                            let g = e.graph();
                            format!("{}({}>{})", d.edge(), g.tail(d), g.head(d))
                        })
                        .collect();
                    writeln!(
                        out,
                        "face {} length {}: {}",
                        i + 1,
                        face.len(),
                        darts.join(" ")
                    )
                    .unwrap();
                }
            }
        }
        Command::Genus { file } => {
            for doc in load(&file)? {
                let s = doc.embedding.surface_stats();
                writeln!(
                    out,
                    "{}: vertices {} edges {} faces {} genus {}",
                    doc.name, s.vertices, s.edges, s.faces, s.genus
                )
                .unwrap();
            }
        }
        Command::Word { file } => {
            for doc in load(&file)? {
                let w = boundary_word(&doc.embedding)?;
                writeln!(
                    out,
                    "{}: {w}\n  {}, {} corners",
                    doc.name,
                    surface(surface_from_word(&w)),
                    w.corner_classes()
                )
                .unwrap();
            }
        }
        Command::Classify { files, mode } => {
            let mut docs = Vec::new();
            for f in &files {
                docs.extend(load(f)?);
            }
            let classes = canon::dedup(docs.iter().map(|d| &d.embedding), mode.into())?;
            writeln!(
                out,
                "{} embeddings, {} classes ({} or+non), groups {}",
                docs.len(),
                classes.len(),
                split_string(&classes),
                group_string(&classes)
            )
            .unwrap();
            out.push_str(&describe_classes(&classes));
        }
        Command::Enumerate {
            graph,
            genus,
            one_face,
            mode,
            distribution,
            budget,
        } => {
            if let Some(b) = budget {
                config = config.with_budget(b);
            }
            let spec: GraphSpec = graph.parse()?;
            let g = build_graph(&spec)?;
            if distribution {
                out.push_str(&genus_distribution(&g, &config)?.report());
            } else {
                let filter = Filter {
                    genus,
                    faces: one_face.then_some(1),
                };
                let outcome = scan(&g, filter, mode.into(), &config)?;
                writeln!(
                    out,
                    "{spec}: {} systems, {} classes ({} or+non), groups {}",
                    outcome.systems,
                    outcome.classes.len(),
                    split_string(&outcome.classes),
                    group_string(&outcome.classes)
                )
                .unwrap();
                out.push_str(&describe_classes(&outcome.classes));
            }
        }
        Command::Pipeline { target } => match target {
            PipelineTarget::K5 => {
                let p = pipeline_k5(&config)?;
                for s in &p.stages {
                    let sources: Vec<String> = s
                        .sources
                        .iter()
                        .map(|(n, c)| format!("{c} from {n}"))
                        .collect();
                    writeln!(
                        out,
                        "{}: {} candidates ({}), {} iso among candidates, {} iso with mirrors, {} classes ({} or+non), groups {}",
                        s.name,
                        s.candidates(),
                        sources.join(", "),
                        s.direct_iso,
                        s.iso.len(),
                        s.classes.len(),
                        split_string(&s.classes),
                        group_string(&s.classes)
                    )
                    .unwrap();
                }
            }
            PipelineTarget::K33 => {
                let p = pipeline_k33()?;
                writeln!(
                    out,
                    "K3,3: {} labelled completions, {} iso classes, {} classes ({} or+non)",
                    p.completions.len(),
                    p.iso.len(),
                    p.classes.len(),
                    split_string(&p.classes)
                )
                .unwrap();
                for theta in 1..=3 {
                    writeln!(
                        out,
                        "theta5#{theta}: {} completions, {} with CD on edge 3",
                        p.completions.iter().filter(|c| c.theta == theta).count(),
                        p.count_with_label(theta, 3, "CD")
                    )
                    .unwrap();
                }
            }
        },
        Command::Theta {
            m,
            genus,
            mode,
            budget,
        } => {
            if let Some(b) = budget {
                config = config.with_budget(b);
            }
            let classes = theta_embeddings(m, genus, mode.into(), &config)?;
            writeln!(
                out,
                "theta{m} one-face genus {genus}: {} classes ({} or+non), groups {}",
                classes.len(),
                split_string(&classes),
                group_string(&classes)
            )
            .unwrap();
            out.push_str(&describe_classes(&classes));
        }
        Command::Verify {
            suite,
            include_slow,
            budget,
            report,
            tsv,
        } => {
            if let Some(b) = budget {
                config = config.with_budget(b);
            }
            let suites = if suite.eq_ignore_ascii_case("all") {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>()?]
            };
            let options = SuiteOptions {
                include_slow,
                config,
            };
            let mut passed = true;
            let mut lines = String::new();
            for s in suites {
                let r = run_suite(s, &options)?;
                passed &= r.passed();
                lines.push_str(&r.to_tsv());
                if !tsv {
                    out.push_str(&r.to_table());
                    out.push('\n');
                }
            }
            if tsv {
                out.push_str(&lines);
            }
            if let Some(path) = report {
                std::fs::write(&path, &lines).map_err(|source| CliError::Io { path, source })?;
            }
            return Ok((out, passed));
        }
        Command::Convert { table, file } => {
            let text = read(&file)?;
            let entries = match table {
                Table::AppendixA => parse_appendix_a(&text),
                Table::AppendixB => parse_appendix_b(&text),
            }
            .map_err(|source| CliError::Appendix { path: file, source })?;
            for (i, entry) in entries.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                writeln!(out, "# tagged {}", entry.tag).unwrap();
                out.push_str(&write_embedding(&entry.name, &entry.embedding));
            }
        }
    }
    Ok((out, true))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("rotsys: {e}");
            ExitCode::from(2)
        }
    }
}
