//! Command-line front end.
//!
//! ```text
//! qspec spectrum <GRAPH6> | --edges FILE
//! qspec family u --n N --g G (--k K | --l L --lengths A,B,..)
//! qspec family k --profile A,B,..
//! qspec verify min|unicyclic-min|max --n N --k K [--g G]
//! qspec scan alpha --n R --k R --g R
//! qspec scan bounds [--n R]
//! qspec scan majorization --len L --sum S
//! ```
//!
//! Ranges `R` are `a..b` (inclusive), comma lists, or single integers.
//! Exit status: 0 success or confirmed, 1 refuted, 2 usage, parse or
//! capacity errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{compare_bounds, BOUNDS_CSV_HEADER};
use crate::error::Error;
use crate::extremal::{
    alpha, find_extremal, majorization_scan, ClassQuery, Objective, SearchConfig, MAJORIZATION_CSV_HEADER,
};
use crate::families::{balanced_profile, build_k, build_u, build_u_std, PendantProfile, UParams};
use crate::graph::{decode_graph6, encode_graph6, is_isomorphic, parse_edge_list, structure_report, Graph};
use crate::spectra::{eig_sym, least_eigenpair, q_matrix, q_min_of, residual, Tolerances};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qspec", version, about = "Least signless Laplacian eigenvalues of small graphs")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Eigensolver convergence tolerance, relative to the Frobenius norm.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub eig_tol: f64,
    /// Relative tolerance for grouping equal eigenvalues.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub group_tol: f64,
    /// Relative tolerance for ties between extremal values.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tie_tol: f64,
    /// Parallel shards for exhaustive searches.
    #[arg(long, global = true, default_value_t = 1)]
    pub shards: usize,
    /// Write results here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn tolerances(&self) -> Result<Tolerances, Error> {
        for (name, v) in [("eig-tol", self.eig_tol), ("group-tol", self.group_tol), ("tie-tol", self.tie_tol)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParameter(format!("--{name} must be positive, got {v}")));
            }
        }
        Ok(Tolerances {
            eig: self.eig_tol,
            group: self.group_tol,
            tie: self.tie_tol,
        })
    }

    pub fn search(&self) -> Result<SearchConfig, Error> {
        if self.shards == 0 {
            return Err(Error::InvalidParameter("--shards must be at least 1".into()));
        }
        Ok(SearchConfig {
            shards: self.shards,
            tolerances: self.tolerances()?,
            ..SearchConfig::default()
        })
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full Q-spectrum and first eigenvector of one graph.
    Spectrum {
        /// Graph in graph6 format.
        #[arg(required_unless_present = "edges")]
        graph6: Option<String>,
        /// Read an edge list ("n m" then one "u v" per line) instead.
        #[arg(long, conflicts_with = "graph6")]
        edges: Option<PathBuf>,
        /// Emit the spectrum as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Build a member of the U or K family.
    Family {
        #[command(subcommand)]
        kind: FamilyKind,
    },
    /// Exhaustively search a class and compare with the predicted extremal graph.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Cycle length, for unicyclic-min.
        #[arg(long)]
        g: Option<usize>,
    },
    /// Tabulate a quantity over parameter ranges.
    Scan {
        #[command(subcommand)]
        kind: ScanKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum FamilyKind {
    /// Odd cycle with a stem ending in pendant paths.
    #[command(alias = "U")]
    U {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: usize,
        /// Number of pendant vertices; alone it selects the standard member.
        #[arg(long)]
        k: Option<usize>,
        /// Stem length in vertices.
        #[arg(long, requires = "lengths")]
        l: Option<usize>,
        /// Pendant path lengths in vertices.
        #[arg(long, value_delimiter = ',', requires = "l")]
        lengths: Option<Vec<usize>>,
    },
    /// Clique with pendant edges.
    #[command(alias = "K")]
    K {
        #[arg(long, value_delimiter = ',', required = true)]
        profile: Vec<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// Minimum over connected non-bipartite graphs with k pendants.
    Min,
    /// Minimum over unicyclic graphs with k pendants and girth g.
    UnicyclicMin,
    /// Maximum over connected non-bipartite graphs with k pendants.
    Max,
}

#[derive(Subcommand, Debug)]
pub enum ScanKind {
    /// Least eigenvalue of the standard U graph.
    Alpha {
        #[arg(long, value_parser = parse_range)]
        n: IntList,
        #[arg(long, value_parser = parse_range)]
        k: IntList,
        #[arg(long, value_parser = parse_range)]
        g: IntList,
        #[arg(long)]
        csv: bool,
    },
    /// Closed-form bounds side by side.
    Bounds {
        #[arg(long, value_parser = parse_range, default_value = "4..50")]
        n: IntList,
        #[arg(long)]
        csv: bool,
    },
    /// Single pendant transfers between K graphs.
    Majorization {
        #[arg(long)]
        len: usize,
        #[arg(long)]
        sum: usize,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntList(pub Vec<usize>);

/// Parses `a..b`, `a,b,c` or `a`.
pub fn parse_range(s: &str) -> Result<IntList, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(format!("empty range {a}..{b}"));
        }
        return Ok(IntList((a..=b).collect()));
    }
    s.split(',').map(num).collect::<Result<_, _>>().map(IntList)
}

/// Outcome of one command: text to emit and the exit status.
pub struct Report {
    pub text: String,
    pub status: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, status: EXIT_OK }
    }
}

/// Formats a real with at most 12 decimals and no trailing zeros.
pub fn fmt_real(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn fmt_list(xs: &[f64]) -> String {
    xs.iter().map(|&x| fmt_real(x)).collect::<Vec<_>>().join(",")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &str) -> Self {
        Table {
            header: header.split(',').map(String::from).collect(),
            rows: Vec::new(),
        }
    }

    fn render(&self, csv: bool) -> String {
        let mut out = String::new();
        if csv {
            for row in std::iter::once(&self.header).chain(&self.rows) {
                let fields: Vec<_> = row.iter().map(|f| csv_field(f)).collect();
                out.push_str(&fields.join(","));
                out.push('\n');
            }
            return out;
        }
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, f) in widths.iter_mut().zip(row) {
                *w = (*w).max(f.chars().count());
            }
        }
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<_> = row.iter().zip(&widths).map(|(f, w)| format!("{f:<w$}")).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

fn read_graph(graph6: &Option<String>, edges: &Option<PathBuf>) -> Result<Graph, Error> {
    match (graph6, edges) {
        (Some(s), _) => decode_graph6(s.as_bytes()),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
            parse_edge_list(&text)
        }
        (None, None) => Err(Error::InvalidParameter("no graph given".into())),
    }
}

fn cmd_spectrum(g: &Graph, tol: &Tolerances, csv: bool) -> Result<Report, Error> {
    let spectrum = eig_sym(&q_matrix(g), tol.eig)?;
    let pair = least_eigenpair(&spectrum, tol);
    if csv {
        let mut t = Table::new("index,eigenvalue");
        for (i, v) in spectrum.eigenvalues.iter().enumerate() {
            t.rows.push(vec![i.to_string(), v.to_string()]);
        }
        return Ok(Report::ok(t.render(true)));
    }
    let s = structure_report(g);
    let opt = |o: Option<usize>| o.map_or("none".to_string(), |v| v.to_string());
    let mut out = String::new();
    let _ = writeln!(out, "order: {}", g.order());
    let _ = writeln!(out, "edges: {}", g.edge_count());
    let _ = writeln!(out, "connected: {}", s.connected);
    let _ = writeln!(out, "bipartite: {}", s.bipartite.is_some());
    let _ = writeln!(out, "girth: {}", opt(s.girth));
    let _ = writeln!(out, "odd_girth: {}", opt(s.odd_girth));
    let _ = writeln!(out, "pendants: {}", s.pendant_count);
    let _ = writeln!(out, "min_degree: {}", s.min_degree);
    let _ = writeln!(out, "spectrum: {}", fmt_list(&spectrum.eigenvalues));
    let _ = writeln!(out, "q_min: {}", fmt_real(pair.value));
    let _ = writeln!(out, "multiplicity: {}", pair.multiplicity);
    let _ = writeln!(out, "eigenvector: {}", fmt_list(pair.vector.as_slice()));
    let _ = writeln!(out, "residual: {:e}", residual(g, pair.value, &pair.vector)?);
    Ok(Report::ok(out))
}

fn fmt_indices(v: &[usize]) -> String {
    format!("[{}]", v.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn least_summary(out: &mut String, g: &Graph, tol: &Tolerances) -> Result<(), Error> {
    let pair = q_min_of(g, tol)?;
    let _ = writeln!(out, "q_min: {}", fmt_real(pair.value));
    let _ = writeln!(out, "multiplicity: {}", pair.multiplicity);
    Ok(())
}

fn cmd_family(kind: &FamilyKind, tol: &Tolerances) -> Result<Report, Error> {
    let mut out = String::new();
    match kind {
        FamilyKind::U { n, g, k, l, lengths } => {
            let params = match (l, lengths) {
                (Some(l), Some(lengths)) => {
                    let p = UParams::new(*n, *g, *l, lengths.clone())?;
                    if let Some(k) = k {
                        if *k != p.k {
                            return Err(Error::InvalidParameter(format!(
                                "--k {k} disagrees with {} pendant paths",
                                p.k
                            )));
                        }
                    }
                    p
                }
                _ => {
                    let k = k.ok_or_else(|| Error::InvalidParameter("give --k, or --l with --lengths".into()))?;
                    UParams::standard(*n, k, *g)?
                }
            };
            let u = build_u(&params)?;
            let lm = &u.landmarks;
            let _ = writeln!(out, "graph6: {}", encode_graph6(&u.graph)?);
            let _ = writeln!(out, "n: {} k: {} g: {} l: {}", params.n, params.k, params.g, params.l);
            let _ = writeln!(out, "cycle: {}", fmt_indices(&lm.cycle));
            let _ = writeln!(out, "stem: {}", fmt_indices(&lm.stem));
            let paths: Vec<_> = lm.pendant_paths.iter().map(|p| fmt_indices(p)).collect();
            let _ = writeln!(out, "pendant_paths: [{}]", paths.join(","));
            let _ = writeln!(out, "stem_end: {}", lm.stem_end());
            least_summary(&mut out, &u.graph, tol)?;
        }
        FamilyKind::K { profile } => {
            let k = build_k(&PendantProfile::new(profile.clone())?)?;
            let _ = writeln!(out, "graph6: {}", encode_graph6(&k.graph)?);
            let _ = writeln!(out, "profile: {}", k.profile);
            let _ = writeln!(out, "clique: {}", fmt_indices(&k.clique));
            let pend: Vec<_> = k.pendants.iter().map(|p| fmt_indices(p)).collect();
            let _ = writeln!(out, "pendants: [{}]", pend.join(","));
            least_summary(&mut out, &k.graph, tol)?;
        }
    }
    Ok(Report::ok(out))
}

fn cmd_verify(claim: Claim, n: usize, k: usize, g: Option<usize>, cfg: &SearchConfig) -> Result<Report, Error> {
    let (query, objective, predicted, name) = match claim {
        Claim::Min => (
            ClassQuery::nonbipartite(n, k),
            Objective::Min,
            build_u_std(n, k, 3)?.graph,
            format!("U_{n}^{k}(3)"),
        ),
        Claim::UnicyclicMin => {
            let g = g.ok_or_else(|| Error::InvalidParameter("unicyclic-min needs --g".into()))?;
            (
                ClassQuery::unicyclic(n, k, g),
                Objective::Min,
                build_u_std(n, k, g)?.graph,
                format!("U_{n}^{k}({g})"),
            )
        }
        Claim::Max => {
            let profile = balanced_profile(n, k)?;
            let name = format!("K{profile}");
            (ClassQuery::nonbipartite(n, k), Objective::Max, build_k(&profile)?.graph, name)
        }
    };
    let result = find_extremal(&query, objective, cfg)?;
    let matches = result
        .witnesses
        .iter()
        .map(|w| is_isomorphic(w, &predicted))
        .collect::<Result<Vec<_>, _>>()?;
    let confirmed = match claim {
        Claim::Max => matches.iter().any(|&m| m),
        _ => matches == [true],
    };
    let mut out = String::new();
    let _ = writeln!(out, "graphs_examined: {}", result.graphs_examined);
    let _ = writeln!(out, "extremal_value: {}", fmt_real(result.extremal_value));
    let _ = writeln!(out, "predicted: {name} {}", encode_graph6(&predicted)?);
    for (w, m) in result.witnesses.iter().zip(&matches) {
        let _ = writeln!(out, "witness: {}{}", encode_graph6(w)?, if *m { " (predicted)" } else { "" });
    }
    let _ = writeln!(out, "verdict: {}", if confirmed { "confirmed" } else { "refuted" });
    Ok(Report {
        text: out,
        status: if confirmed { EXIT_OK } else { EXIT_REFUTED },
    })
}

fn cmd_scan(kind: &ScanKind, tol: &Tolerances) -> Result<Report, Error> {
    match kind {
        ScanKind::Alpha { n, k, g, csv } => {
            let mut t = Table::new("n,k,g,alpha,status");
            for &n in &n.0 {
                for &k in &k.0 {
                    for &g in &g.0 {
                        let (value, status) = match alpha(n, k, g, tol) {
                            Ok(a) => (a.to_string(), "ok".to_string()),
                            Err(e) => (String::new(), format!("skipped: {e}")),
                        };
                        t.rows.push(vec![n.to_string(), k.to_string(), g.to_string(), value, status]);
                    }
                }
            }
            Ok(Report::ok(t.render(*csv)))
        }
        ScanKind::Bounds { n, csv } => {
            let mut t = Table::new(BOUNDS_CSV_HEADER);
            for &n in &n.0 {
                match compare_bounds([n]) {
                    Ok(rows) => {
                        let r = &rows[0];
                        t.rows.push(vec![
                            r.n.to_string(),
                            r.pendant_general.to_string(),
                            r.lima_delta1.to_string(),
                            r.submatrix_k1.to_string(),
                            r.diff.to_string(),
                            r.general_exceeds_lima().to_string(),
                        ]);
                    }
                    Err(e) => {
                        let mut row = vec![n.to_string()];
                        row.extend(std::iter::repeat_n(String::new(), 4));
                        row.push(format!("skipped: {e}"));
                        t.rows.push(row);
                    }
                }
            }
            Ok(Report::ok(t.render(*csv)))
        }
        ScanKind::Majorization { len, sum, csv } => {
            let report = majorization_scan(*len, *sum, tol)?;
            let fmt = |p: &PendantProfile| p.entries().iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            let mut t = Table::new(MAJORIZATION_CSV_HEADER);
            for r in &report.rows {
                t.rows.push(vec![
                    fmt(&r.nu),
                    fmt(&r.mu),
                    r.qmin_nu.to_string(),
                    r.qmin_mu.to_string(),
                    r.slack.to_string(),
                ]);
            }
            let mut text = t.render(*csv);
            if !*csv {
                let _ = writeln!(
                    text,
                    "profiles with simple q_min: {}\n{}",
                    report.profiles_checked, report.report
                );
            }
            Ok(Report {
                text,
                status: if report.report.passed { EXIT_OK } else { EXIT_REFUTED },
            })
        }
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Report, Error> {
    let tol = cli.run.tolerances()?;
    match &cli.command {
        Command::Spectrum { graph6, edges, csv } => cmd_spectrum(&read_graph(graph6, edges)?, &tol, *csv),
        Command::Family { kind } => cmd_family(kind, &tol),
        Command::Verify { claim, n, k, g } => cmd_verify(*claim, *n, *k, *g, &cli.run.search()?),
        Command::Scan { kind } => cmd_scan(kind, &tol),
    }
}

/// Parses `args`, runs the command and writes to `out` (or the `--output`
/// file) and `err`. Returns the exit status.
pub fn run_with_io<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match run(&cli) {
        Ok(report) => {
            let written = match &cli.run.output {
                Some(path) => std::fs::write(path, &report.text),
                None => out.write_all(report.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            report.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn main_with_args<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(args, &mut stdout.lock(), &mut stderr.lock())
}
