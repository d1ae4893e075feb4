//! Command-line front end. [`run`] does all the work and returns what
//! should be printed and the exit code, so it can be tested in-process.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::betti::{betti_graded_with, betti_table_with, BettiError, BettiOptions, BettiTable, DEFAULT_FACE_CAP};
use crate::classifier::{classify_np, Certificate, ClassifyError, Level, NpVerdict};
use crate::field::FieldSpec;
use crate::graph::BipartiteGraph;
use crate::io::{graph_to_text, parse_graph, parse_polyomino_input, GraphDoc};
use crate::polyomino::{classify_polyomino, poly_to_graph, GeometricCertificate, PolyVerdict};
use crate::report::{Agreement, Classification, InputEcho, Report, Verification, WindowCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "toric-np", version, about = "N_p classification and Betti numbers of toric edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the toric edge ideal of a bipartite graph.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Print the full certificate (cycle, embedding or complement).
        #[arg(long)]
        witness: bool,
    },
    /// Windowed graded Betti table of the toric edge ideal.
    Betti {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        max_i: usize,
        #[arg(long, default_value_t = 6)]
        max_j: usize,
        /// Worker threads for the sum over multidegrees.
        #[arg(long)]
        threads: Option<usize>,
        /// Largest number of faces allowed in a single divisor complex.
        #[arg(long, default_value_t = DEFAULT_FACE_CAP)]
        face_cap: u64,
    },
    /// Cross-check the classifier against windowed Betti numbers.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Refuse graphs whose 2-core has more vertices than this.
        #[arg(long, default_value_t = 16)]
        max_vertices: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Classify a convex polyomino ideal.
    Poly {
        #[command(flatten)]
        common: Common,
        /// Also emit the associated bipartite graph, to a file if a path is
        /// given and to standard output otherwise.
        #[arg(long, num_args = 0..=1, value_name = "PATH")]
        graph_out: Option<Option<PathBuf>>,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Input file, or `-` for standard input.
    input: PathBuf,
    /// Field characteristic: 0 for the rationals or a prime.
    #[arg(long = "char", default_value = "0")]
    characteristic: FieldSpec,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// What a CLI invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {message}\n"), code }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { stdout: String::new(), stderr: rendered, code: EXIT_INPUT }
            } else {
                CliOutput::ok(rendered)
            };
        }
    };
    match cli.command {
        Command::Classify { common, witness } => cmd_classify(&common, witness),
        Command::Betti { common, max_i, max_j, threads, face_cap } => {
            cmd_betti(&common, max_i, max_j, BettiOptions { face_cap, threads })
        }
        Command::Verify { common, max_vertices, threads } => cmd_verify(&common, max_vertices, threads),
        Command::Poly { common, graph_out } => cmd_poly(&common, graph_out),
    }
}

fn read_input(path: &Path) -> Result<String, CliOutput> {
    let result = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| CliOutput::fail(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))
}

fn load_graph(common: &Common) -> Result<BipartiteGraph, CliOutput> {
    let text = read_input(&common.input)?;
    parse_graph(&text).map_err(|e| CliOutput::fail(EXIT_INPUT, format!("{}: {e}", common.input.display())))
}

fn graph_echo(g: &BipartiteGraph) -> InputEcho {
    InputEcho::Graph { graph: GraphDoc::from_graph(g) }
}

fn classification(g: &BipartiteGraph, field: FieldSpec) -> Result<Classification, CliOutput> {
    match classify_np(g, field) {
        Ok(verdict) => Ok(Classification::Classified { verdict }),
        Err(ClassifyError::ZeroIdeal { removed }) => Ok(Classification::ZeroIdeal { removed }),
        Err(e) => Err(CliOutput::fail(1, e)),
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn emit(report: &Report, format: Format, text: impl FnOnce() -> String) -> CliOutput {
    match format {
        Format::Json => CliOutput::ok(report.to_json() + "\n"),
        Format::Text => CliOutput::ok(text()),
    }
}

fn cmd_classify(common: &Common, witness: bool) -> CliOutput {
    let g = match load_graph(common) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let start = Instant::now();
    let class = match classification(&g, common.characteristic) {
        Ok(c) => c,
        Err(out) => return out,
    };
    let mut report = Report::new("classify", common.characteristic, graph_echo(&g));
    report.timing_ms = elapsed_ms(start);
    report.classification = Some(class.clone());
    emit(&report, common.format, || {
        let mut out = String::new();
        let _ = writeln!(out, "field: {}", common.characteristic);
        write_classification(&mut out, &class, witness);
        out
    })
}

fn write_classification(out: &mut String, class: &Classification, witness: bool) {
    match class {
        Classification::ZeroIdeal { .. } => {
            let _ = writeln!(out, "level: none (the graph has no cycle, so the toric ideal is zero)");
        }
        Classification::Classified { verdict } => write_verdict(out, verdict, witness),
    }
}

fn write_verdict(out: &mut String, verdict: &NpVerdict, witness: bool) {
    let _ = writeln!(out, "level: {}", verdict.level);
    let _ = writeln!(out, "reason: {}", certificate_summary(&verdict.certificate));
    if witness {
        for line in certificate_details(&verdict.certificate) {
            let _ = writeln!(out, "{line}");
        }
    }
    if let Some(r) = &verdict.reduction {
        let _ = writeln!(out, "removed before classifying (degree < 2): {}", r.removed.join(" "));
    }
}

fn certificate_summary(c: &Certificate) -> String {
    match c {
        Certificate::ChordlessCycle { cycle } => format!("chordless cycle of length {}", cycle.len()),
        Certificate::Obstruction { index, .. } => format!("induced copy of H^({index})"),
        Certificate::ComplementTree { diameter, .. } => {
            format!("bipartite complement is essentially a tree of diameter {diameter}")
        }
        Certificate::CharThreeException { m, n } => format!("K_{{{m},{n}}} over characteristic 3"),
        Certificate::CompleteBipartite { m, n } => format!("complete bipartite K_{{{m},{n}}}"),
        Certificate::K2n { n } => format!("complete bipartite K_{{2,{n}}}"),
    }
}

fn certificate_details(c: &Certificate) -> Vec<String> {
    match c {
        Certificate::ChordlessCycle { cycle } => vec![format!("cycle: {}", cycle.vertices.join(" "))],
        Certificate::Obstruction { mapping, sides_swapped, .. } => {
            let pairs: Vec<String> = mapping.iter().map(|(p, h)| format!("{p}->{h}")).collect();
            vec![format!("embedding: {}", pairs.join(" ")), format!("sides swapped: {sides_swapped}")]
        }
        Certificate::ComplementTree { edges, .. } => {
            let e: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            vec![format!("complement edges: {}", e.join(" "))]
        }
        _ => Vec::new(),
    }
}

fn cmd_betti(common: &Common, max_i: usize, max_j: usize, opts: BettiOptions) -> CliOutput {
    let g = match load_graph(common) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let start = Instant::now();
    let table = match betti_table_with(&g, max_i, max_j, common.characteristic, &opts) {
        Ok(t) => t,
        Err(e) => return betti_failure(e),
    };
    let mut report = Report::new("betti", common.characteristic, graph_echo(&g));
    report.timing_ms = elapsed_ms(start);
    report.betti = Some(table.clone());
    emit(&report, common.format, || render_betti_text(&table))
}

fn betti_failure(e: BettiError) -> CliOutput {
    match e {
        BettiError::FaceCap { .. } => CliOutput::fail(EXIT_RESOURCE, e),
        other => CliOutput::fail(1, other),
    }
}

fn render_betti_text(t: &BettiTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "betti numbers of I_G over {}, i <= {}, j <= {}", t.field, t.i_max, t.j_max);
    out.push_str(&t.render_text());
    let _ = writeln!(out, "complete: {}", if t.complete { "yes" } else { "no" });
    out
}

/// Highest level the Betti windows allow: `Fails_N1`, `N1`, or `N2` for
/// "at least N2".
fn homology_bound(n1: &WindowCheck, n2: &WindowCheck) -> Level {
    if !n1.is_zero() {
        Level::FailsN1
    } else if !n2.is_zero() {
        Level::N1
    } else {
        Level::N2
    }
}

fn cmd_verify(common: &Common, max_vertices: usize, threads: Option<usize>) -> CliOutput {
    let g = match load_graph(common) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let field = common.characteristic;
    let core = g.degree_k_subgraph(2);
    if core.num_vertices() > max_vertices {
        return CliOutput::fail(
            EXIT_RESOURCE,
            format!("2-core has {} vertices, above the verification cap of {max_vertices}", core.num_vertices()),
        );
    }
    let start = Instant::now();
    let class = match classification(&g, field) {
        Ok(c) => c,
        Err(out) => return out,
    };
    let r = core.num_x().min(core.num_y());
    let opts = BettiOptions { face_cap: DEFAULT_FACE_CAP, threads };
    let window = |i: usize, from: usize, to: usize| -> Result<WindowCheck, BettiError> {
        let values = (from..=to).map(|j| betti_graded_with(&core, i, j, field, &opts)).collect::<Result<_, _>>()?;
        Ok(WindowCheck { i, j_from: from, j_to: to, values })
    };
    // a chordless 2k-cycle needs k ≤ r; reg(S/I) ≤ r bounds the first syzygies by j ≤ r + 2
    let windows = window(0, 3, r.max(4)).and_then(|n1| Ok((n1, window(1, 4, (r + 2).max(4))?)));
    let (n1_window, n2_window) = match windows {
        Ok(w) => w,
        Err(e) => return betti_failure(e),
    };
    let bound = homology_bound(&n1_window, &n2_window);
    let classifier_level = class.level();
    let agree = match classifier_level {
        Some(level) => level.min(Level::N2) == bound,
        None => bound == Level::N2,
    };
    let verification = Verification {
        n1_window,
        n2_window,
        homology_bound: Some(bound),
        classifier_level,
        result: if agree { Agreement::Agree } else { Agreement::Disagree },
    };
    let mut report = Report::new("verify", field, graph_echo(&g));
    report.timing_ms = elapsed_ms(start);
    report.classification = Some(class);
    report.verification = Some(verification.clone());
    let mut out = emit(&report, common.format, || {
        let v = &verification;
        let mut out = String::new();
        let _ = writeln!(out, "field: {field}");
        let level = v.classifier_level.map_or("none (zero ideal)".to_string(), |l| l.to_string());
        let _ = writeln!(out, "classifier: {level}");
        for w in [&v.n1_window, &v.n2_window] {
            let vals: Vec<String> = w.values.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "beta_{{{},j}} for j = {}..{}: {}", w.i, w.j_from, w.j_to, vals.join(" "));
        }
        let h = match bound {
            Level::N2 => "N2 or higher".to_string(),
            other => other.to_string(),
        };
        let _ = writeln!(out, "homology: {h}");
        let _ = writeln!(out, "{}", if agree { "AGREE" } else { "DISAGREE" });
        out
    });
    if !agree {
        out.code = EXIT_DISAGREE;
    }
    out
}

fn cmd_poly(common: &Common, graph_out: Option<Option<PathBuf>>) -> CliOutput {
    let text = match read_input(&common.input) {
        Ok(t) => t,
        Err(out) => return out,
    };
    let p = match parse_polyomino_input(&text) {
        Ok(p) => p,
        Err(e) => return CliOutput::fail(EXIT_INPUT, format!("{}: {e}", common.input.display())),
    };
    let start = Instant::now();
    let verdict = match classify_polyomino(&p, common.characteristic) {
        Ok(v) => v,
        Err(e) => return CliOutput::fail(EXIT_INPUT, e),
    };
    let graph = poly_to_graph(&p).expect("classified polyominoes are convex");
    let mut report = Report::new(
        "poly",
        common.characteristic,
        InputEcho::Polyomino { cells: p.cells().iter().copied().collect() },
    );
    report.timing_ms = elapsed_ms(start);
    report.polyomino = Some(verdict.clone());
    let inline_graph = matches!(graph_out, Some(None));
    if inline_graph && common.format == Format::Json {
        report.graph = Some(GraphDoc::from_graph(&graph));
    }
    let graph_text = graph_to_text(&graph);
    let mut out = emit(&report, common.format, || {
        let mut out = String::new();
        let _ = writeln!(out, "field: {}", common.characteristic);
        out.push_str(&p.to_ascii());
        write_poly_verdict(&mut out, &verdict);
        out
    });
    match graph_out {
        Some(Some(path)) => {
            if let Err(e) = std::fs::write(&path, &graph_text) {
                return CliOutput::fail(EXIT_INPUT, format!("cannot write {}: {e}", path.display()));
            }
        }
        Some(None) if common.format == Format::Text => out.stdout.push_str(&graph_text),
        Some(None) => {}
        None => {}
    }
    out
}

fn write_poly_verdict(out: &mut String, v: &PolyVerdict) {
    let _ = writeln!(out, "level: {}", v.level);
    let shape = match &v.geometry {
        GeometricCertificate::Strip { length } => format!("strip of {length} cells"),
        GeometricCertificate::Rectangle { width, height } => format!("full {width}x{height} rectangle"),
        GeometricCertificate::CharThreeRectangle { width, height } => {
            format!("full {width}x{height} rectangle over characteristic 3")
        }
        GeometricCertificate::FirstRowOrColumn { symmetry, missing } => {
            format!("after {symmetry:?}, missing cells {missing:?} lie in the first row or column")
        }
        GeometricCertificate::Unplaceable { missing } => {
            format!("missing cells {missing:?} cannot be moved into the first row and column")
        }
    };
    let _ = writeln!(out, "shape: {shape}");
    let _ = writeln!(out, "graph: {} ({})", v.graph.level, certificate_summary(&v.graph.certificate));
}
