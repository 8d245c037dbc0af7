//! Command-line front end: construct, verify, bound, search, orient, lift,
//! convert.  Machine-readable key=value summaries go to stdout, diagnostics
//! to stderr, and failure classes map to distinct exit codes:
//! 1 file I/O, 2 usage, 3 verify mismatch, 4 search budget truncated,
//! 5 no Hamiltonian cycle within budget, 6 format error, 7 build error.

use clap::{Parser, Subcommand};
use mixedcage::bounds::{ahm_bound, f21, lower_bound, moore_bound, BOUNDS_TABLE};
use mixedcage::constructions::{
    find_hamiltonian_cycle, lift, orient_cycle, BuildError, ConstructionId, DEFAULT_HAMILTONIAN_BUDGET,
};
use mixedcage::io::{
    emit_dot, emit_graph6, emit_mgf, parse_graph6_file, parse_lift_spec, IoError, MgfDocument,
};
use mixedcage::search::{
    search_directed_first, search_general, search_undirected_first, PartitionFilter, SearchConfig,
    SearchError, SearchResult,
};
use mixedcage::MixedGraph;
use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_IO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_TRUNCATED: u8 = 4;
const EXIT_NO_CYCLE: u8 = 5;
const EXIT_FORMAT: u8 = 6;
const EXIT_BUILD: u8 = 7;

#[derive(Parser)]
#[command(name = "mixedcage", version, about = "Mixed cages: construct, verify, bound, and search")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a catalog graph and write it as MGF.
    Construct {
        /// Construction name (e.g. bcw, mobius, cage21, graph315, lift516).
        id: String,
        /// Numeric parameters the construction needs.
        params: Vec<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Report order, regularity, and girth of an MGF graph.
    Verify {
        /// Input file; stdin when absent.
        file: Option<PathBuf>,
        /// Expected r,z,g or r,z,g,n; exit 3 on mismatch.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Lower-bound arithmetic and the known-values table.
    Bound {
        #[command(subcommand)]
        which: BoundCmd,
    },
    /// Exhaustive search for totally regular (r,z,g)-graphs on n vertices.
    Search {
        r: usize,
        z: usize,
        g: usize,
        n: usize,
        /// Only partitions into equal cycle lengths.
        #[arg(long)]
        equal_parts: bool,
        /// Exactly one partition, comma-separated (e.g. 5,5,5,5).
        #[arg(long, conflicts_with = "equal_parts")]
        partition: Option<String>,
        /// Engine: directed-first, undirected-first, or general.
        #[arg(long, default_value = "directed-first")]
        mode: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Backtracking-node budget per partition (per scaffold).
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        /// Stop at the first graph found.
        #[arg(long)]
        first: bool,
        /// Disable root-level symmetry pruning.
        #[arg(long)]
        no_symmetry_pruning: bool,
        /// graph6 file of undirected scaffolds (undirected-first mode).
        #[arg(long)]
        scaffolds: Option<PathBuf>,
        /// Directory for the found graphs as MGF files.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Orient a Hamiltonian cycle of an undirected graph.
    Orient {
        /// Input file; stdin when absent.
        file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_HAMILTONIAN_BUDGET)]
        budget: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build the cyclic lift described by a spec file.
    Lift {
        spec: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Convert between mgf, graph6 (.g6), and dot by file extension.
    Convert { input: PathBuf, output: PathBuf },
}

#[derive(Subcommand)]
enum BoundCmd {
    /// Moore-tree lower bound for (r,1,g)-graphs.
    Ahm { r: u64, g: u64 },
    /// Moore bound n(r,d) for r-regular graphs of depth d.
    Moore { r: u64, d: u64 },
    /// Best general lower bound for f(r,z,g), parity included.
    Lower { r: u64, z: u64, g: u64 },
    /// Exact minimum order of a (2,1,g)-graph.
    F21 { g: u64 },
    /// Known lower/upper bounds with this build's reproduction status.
    Table,
}

struct Failure {
    code: u8,
    msg: String,
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Failure {
        fail(EXIT_FORMAT, e.to_string())
    }
}

impl From<BuildError> for Failure {
    fn from(e: BuildError) -> Failure {
        let code = match e {
            BuildError::NoHamiltonianCycle { .. } => EXIT_NO_CYCLE,
            _ => EXIT_BUILD,
        };
        fail(code, e.to_string())
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Failure {
        fail(EXIT_USAGE, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        fail(EXIT_IO, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.msg.is_empty() {
                eprintln!("mixedcage: {}", f.msg);
            }
            ExitCode::from(f.code)
        }
    }
}

/// Writes to stdout, treating a closed pipe (`search ... | head`) as a
/// quiet, successful end of output rather than a panic or an error.
fn emit_stdout(text: &str) -> Result<(), Failure> {
    use std::io::Write as _;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Err(fail(0, "")),
        Err(e) => Err(e.into()),
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            std::fs::write(p, text)?;
            Ok(())
        }
        None => emit_stdout(text),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Construct { id, params, out } => {
            let id = ConstructionId::from_cli(&id, &params)?;
            let graph = id.build()?;
            let expected = id.expected();
            let doc = MgfDocument {
                graph,
                name: Some(id.to_string()),
                expect: Some((expected.r, expected.z, expected.g)),
            };
            write_output(out.as_deref(), &doc.emit())
        }
        Cmd::Verify { file, expect } => cmd_verify(file.as_deref(), expect.as_deref()),
        Cmd::Bound { which } => cmd_bound(which),
        Cmd::Search {
            r,
            z,
            g,
            n,
            equal_parts,
            partition,
            mode,
            jobs,
            budget,
            first,
            no_symmetry_pruning,
            scaffolds,
            out,
        } => {
            let partitions = match partition {
                Some(spec) => PartitionFilter::Explicit(parse_usize_list(&spec)?),
                None if equal_parts => PartitionFilter::EqualParts,
                None => PartitionFilter::All,
            };
            let cfg = SearchConfig {
                r,
                z,
                g,
                n,
                partitions,
                budget,
                jobs,
                stop_at_first: first,
                prune_symmetry: !no_symmetry_pruning,
            };
            cmd_search(&cfg, &mode, scaffolds.as_deref(), out.as_deref())
        }
        Cmd::Orient { file, budget, out } => {
            let graph = MgfDocument::parse(&read_input(file.as_deref())?)?.graph;
            let cycle = find_hamiltonian_cycle(&graph, budget)?;
            let oriented = orient_cycle(&graph, &cycle)?;
            write_output(out.as_deref(), &emit_mgf(&oriented))
        }
        Cmd::Lift { spec, out } => {
            let text = std::fs::read_to_string(&spec)?;
            let spec = parse_lift_spec(&text)?;
            let graph = lift(&spec).map_err(BuildError::from)?;
            write_output(out.as_deref(), &emit_mgf(&graph))
        }
        Cmd::Convert { input, output } => cmd_convert(&input, &output),
    }
}

fn parse_usize_list(spec: &str) -> Result<Vec<usize>, Failure> {
    spec.split(',')
        .map(|w| w.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| fail(EXIT_USAGE, format!("bad number list: {spec}")))
}

fn cmd_verify(file: Option<&Path>, expect: Option<&str>) -> Result<(), Failure> {
    let doc = MgfDocument::parse(&read_input(file)?)?;
    let graph = &doc.graph;
    let profile = graph.degree_profile();
    let girth = graph.girth();
    let mut out = String::new();
    writeln!(out, "order={}", graph.order()).unwrap();
    match profile.regular_params() {
        Some((r, z)) => {
            writeln!(out, "regular=true").unwrap();
            writeln!(out, "r={r}").unwrap();
            writeln!(out, "z={z}").unwrap();
        }
        None => writeln!(out, "regular=false").unwrap(),
    }
    writeln!(out, "totally_regular={}", profile.is_totally_regular()).unwrap();
    match girth {
        Some(g) => writeln!(out, "girth={g}").unwrap(),
        None => writeln!(out, "girth=acyclic").unwrap(),
    }
    let expectation = match expect {
        Some(spec) => {
            let vals = parse_usize_list(spec)?;
            if vals.len() != 3 && vals.len() != 4 {
                return Err(fail(EXIT_USAGE, "--expect wants r,z,g or r,z,g,n"));
            }
            Some((vals[0], vals[1], vals[2], vals.get(3).copied()))
        }
        None => doc.expect.map(|(r, z, g)| (r, z, g, None)),
    };
    if let Some((r, z, g, n)) = expectation {
        let ok = graph.check_regular(r, z)
            && girth == Some(g)
            && n.map_or(true, |n| graph.order() == n);
        writeln!(out, "match={ok}").unwrap();
        emit_stdout(&out)?;
        if !ok {
            return Err(fail(
                EXIT_MISMATCH,
                format!("graph does not match expected ({r},{z},{g})"),
            ));
        }
        return Ok(());
    }
    emit_stdout(&out)
}

fn cmd_bound(which: BoundCmd) -> Result<(), Failure> {
    let text = match which {
        BoundCmd::Ahm { r, g } => format!("{}\n", ahm_bound(r, g)),
        BoundCmd::Moore { r, d } => format!("{}\n", moore_bound(r, d)),
        BoundCmd::Lower { r, z, g } => format!("{}\n", lower_bound(r, z, g)),
        BoundCmd::F21 { g } => format!("{}\n", f21(g)),
        BoundCmd::Table => {
            let mut text = String::new();
            for &(r, z, g, entry) in BOUNDS_TABLE.iter() {
                let mut line = format!("r={r} z={z} g={g}");
                if let Some(f) = entry.exact {
                    write!(line, " exact={f}").unwrap();
                } else {
                    if let Some(lo) = entry.lower {
                        write!(line, " lower={lo}").unwrap();
                    }
                    if let Some(hi) = entry.upper {
                        write!(line, " upper={hi}").unwrap();
                    }
                }
                let computed = lower_bound(r, z, g);
                let table_lower = entry.exact.or(entry.lower).unwrap_or(0);
                let lower_status = if computed >= table_lower { "reproduced" } else { "cited" };
                write!(line, " computed_lower={computed} lower_status={lower_status}").unwrap();
                if let Some(name) = witness_name(r, z, g) {
                    write!(line, " witness={name}").unwrap();
                }
                writeln!(text, "{line}").unwrap();
            }
            text
        }
    };
    emit_stdout(&text)
}

// Catalog builder reaching each table row's best known order.
fn witness_name(r: u64, z: u64, g: u64) -> Option<&'static str> {
    match (r, z, g) {
        (2, 2, 5) => Some("circulant225"),
        (2, 2, 6) => Some("graph226"),
        (3, 1, 5) => Some("graph315"),
        (3, 1, 6) => Some("graph316"),
        (3, 1, 7) => Some("lift317"),
        (3, 1, 8) => Some("lift318"),
        (4, 1, 5) => Some("lift415"),
        (4, 1, 6) => Some("lift416"),
        (5, 1, 5) => Some("hs-oriented"),
        (5, 1, 6) => Some("lift516"),
        _ => None,
    }
}

fn cmd_search(cfg: &SearchConfig, mode: &str, scaffolds: Option<&Path>, out_dir: Option<&Path>) -> Result<(), Failure> {
    let result = match mode {
        "directed-first" => search_directed_first(cfg)?,
        "general" => search_general(cfg)?,
        "undirected-first" => {
            let path = scaffolds.ok_or_else(|| fail(EXIT_USAGE, "undirected-first mode needs --scaffolds"))?;
            let graphs = parse_graph6_file(&std::fs::read_to_string(path)?)?;
            search_undirected_first(cfg, &graphs)?
        }
        other => return Err(fail(EXIT_USAGE, format!("unknown mode: {other}"))),
    };
    emit_stdout(&search_summary(cfg, mode, &result))?;
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        for (i, found) in result.found.iter().enumerate() {
            let doc = MgfDocument {
                graph: found.graph.clone(),
                name: Some(format!("search {} {} {} {} graph {i}", cfg.r, cfg.z, cfg.g, cfg.n)),
                expect: Some((cfg.r, cfg.z, cfg.g)),
            };
            std::fs::write(dir.join(format!("graph_{i:03}.mgf")), doc.emit())?;
        }
    }
    for (idx, reason) in &result.skipped {
        eprintln!("scaffold {idx} skipped: {reason}");
    }
    if result.budget_truncated {
        return Err(fail(EXIT_TRUNCATED, "node budget exhausted before the space was covered"));
    }
    Ok(())
}

fn search_summary(cfg: &SearchConfig, mode: &str, result: &SearchResult) -> String {
    let mut out = String::new();
    writeln!(out, "engine={mode}").unwrap();
    writeln!(out, "r={}", cfg.r).unwrap();
    writeln!(out, "z={}", cfg.z).unwrap();
    writeln!(out, "g={}", cfg.g).unwrap();
    writeln!(out, "n={}", cfg.n).unwrap();
    writeln!(out, "units={}", result.reports.len()).unwrap();
    writeln!(out, "found={}", result.found.len()).unwrap();
    writeln!(out, "exhaustive={}", result.exhaustive).unwrap();
    writeln!(out, "budget_truncated={}", result.budget_truncated).unwrap();
    writeln!(out, "skipped_scaffolds={}", result.skipped.len()).unwrap();
    let mut totals = (0u64, 0u64, 0u64, 0u64);
    for report in &result.reports {
        totals.0 += report.stats.nodes;
        totals.1 += report.stats.girth_prunes;
        totals.2 += report.stats.degree_prunes;
        totals.3 += report.stats.symmetry_prunes;
    }
    writeln!(out, "nodes={}", totals.0).unwrap();
    writeln!(out, "girth_prunes={}", totals.1).unwrap();
    writeln!(out, "degree_prunes={}", totals.2).unwrap();
    writeln!(out, "symmetry_prunes={}", totals.3).unwrap();
    for report in &result.reports {
        writeln!(
            out,
            "unit={} nodes={} girth_prunes={} degree_prunes={} symmetry_prunes={} complete={}",
            report.label.replace(' ', "_"),
            report.stats.nodes,
            report.stats.girth_prunes,
            report.stats.degree_prunes,
            report.stats.symmetry_prunes,
            report.complete
        )
        .unwrap();
    }
    for (i, found) in result.found.iter().enumerate() {
        writeln!(out, "graph_{i}={}", hex(&found.fingerprint)).unwrap();
    }
    out
}

fn hex(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        write!(s, "{b:02x}").unwrap();
    }
    s
}

#[derive(Clone, Copy, PartialEq)]
enum Format {
    Mgf,
    Graph6,
    Dot,
}

fn format_of(path: &Path) -> Result<Format, Failure> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("mgf") => Ok(Format::Mgf),
        Some("g6") | Some("graph6") => Ok(Format::Graph6),
        Some("dot") | Some("gv") => Ok(Format::Dot),
        _ => Err(fail(EXIT_USAGE, format!("unrecognized extension: {}", path.display()))),
    }
}

fn cmd_convert(input: &Path, output: &Path) -> Result<(), Failure> {
    let in_fmt = format_of(input)?;
    let out_fmt = format_of(output)?;
    let text = std::fs::read_to_string(input)?;
    let graph: MixedGraph = match in_fmt {
        Format::Mgf => MgfDocument::parse(&text)?.graph,
        Format::Graph6 => {
            let graphs = parse_graph6_file(&text)?;
            match graphs.len() {
                1 => graphs.into_iter().next().unwrap(),
                0 => return Err(IoError::BadGraph6 { what: "no graphs in file".to_string() }.into()),
                _ => {
                    return Err(IoError::Unsupported {
                        what: "convert takes a single-graph graph6 file".to_string(),
                    }
                    .into())
                }
            }
        }
        Format::Dot => {
            return Err(IoError::Unsupported {
                what: "dot is an export format only".to_string(),
            }
            .into())
        }
    };
    let rendered = match out_fmt {
        Format::Mgf => emit_mgf(&graph),
        Format::Graph6 => {
            let mut line = emit_graph6(&graph)?;
            line.push('\n');
            line
        }
        Format::Dot => emit_dot(&graph),
    };
    std::fs::write(output, rendered)?;
    Ok(())
}
