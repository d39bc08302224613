//! Command-line front end: argument parsing, dispatch and report rendering.
//!
//! Machine mode (the default) prints `key=value` lines plus free-form record
//! lines for censuses; `--human` aligns keys into a table. Exit codes: 0
//! success, 1 parse or validation error, 2 resource limit, 3 the contributor
//! and oracle paths disagree.

pub mod format;

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use crate::analysis::{balanced_perm_a_check, bounds_report, orientation_sweep, sachs_coefficients};
use crate::coefficients::{self, Functional, MatrixKind, Objective};
use crate::contributors::{
    cycle_notation, enumerate_hat_eq, enumerate_hat_geq, group_by_permutomorphism, visit_contributors, Contributor,
    Step, SubContributor,
};
use crate::error::{Error, Result};
use crate::hypergraph::OrientedHypergraph;
use crate::matrices::{adjacency_matrix, degree_matrix, incidence_matrix, laplacian, weak_walk_matrix, IntMatrix};
use crate::Limits;

#[derive(Debug, Parser)]
#[command(name = "ohg", version, about = "Exact determinants, permanents and characteristic polynomials of oriented hypergraphs")]
pub struct Cli {
    /// Render aligned tables instead of key=value lines.
    #[arg(long, global = true)]
    pub human: bool,
    #[arg(long, global = true, env = "OHG_MAX_CONTRIBUTORS", default_value_t = 10_000_000)]
    pub max_contributors: u64,
    #[arg(long, global = true, env = "OHG_MAX_INCIDENCES_SWEEP", default_value_t = 16)]
    pub max_incidences_sweep: usize,
    #[arg(long, global = true, env = "OHG_MAX_WALK_LENGTH", default_value_t = 4)]
    pub max_walk_length: usize,
    #[arg(long, global = true, env = "OHG_MAX_WALKS", default_value_t = 10_000_000)]
    pub max_walks: u64,
    #[arg(long, global = true, env = "OHG_MAX_PERMANENT_SIZE", default_value_t = 20)]
    pub max_permanent_size: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a hypergraph file.
    Validate { file: String },
    /// Print the canonical line form of a file.
    Canonical { file: String },
    /// Print incidence, adjacency, degree, Laplacian or weak-walk matrices.
    Matrices {
        file: String,
        #[arg(long, value_enum, default_value_t = WhichMatrix::All)]
        which: WhichMatrix,
        /// Walk length for `--which walk`.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Characteristic polynomial det(xI - M) or perm(xI - M), ascending.
    Charpoly {
        file: String,
        #[arg(long, value_enum)]
        matrix: MatrixArg,
        #[arg(long, value_enum, default_value_t = KindArg::Det)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Determinant or permanent of A or L.
    Scalar {
        file: String,
        #[arg(long, value_enum)]
        matrix: MatrixArg,
        #[arg(long, value_enum, default_value_t = KindArg::Det)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Count, list or group contributors and hat sub-contributors.
    Contributors {
        file: String,
        /// `all`, `eq:K` or `geq:K`.
        #[arg(long, default_value = "all")]
        filter: String,
        #[arg(long, value_enum, default_value_t = ContributorMode::Count)]
        mode: ContributorMode,
    },
    /// Weak walks of length k between two named vertices.
    Walks {
        file: String,
        from: String,
        to: String,
        k: usize,
        #[arg(long)]
        list: bool,
    },
    /// Contributor bounds on perm(L) and det(L).
    Bounds { file: String },
    /// Evaluate an objective over every orientation of the incidences.
    Sweep {
        file: String,
        /// perm_L, det_L, perm_A or det_A.
        #[arg(long, default_value = "perm_L")]
        objective: String,
    },
    /// perm(A) against the backstep-free contributor count of a signed graph.
    Balance { file: String },
    /// Basic-figure coefficients of a plain graph encoding.
    Sachs { file: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichMatrix {
    H,
    A,
    D,
    L,
    Walk,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixArg {
    A,
    L,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Det,
    Perm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Contributor,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ContributorMode {
    Count,
    Census,
    Classes,
}

/// A rendered report: `key=value` fields and free-form record lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<Line>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Line {
    Field(String, String),
    Record(String),
}

impl Report {
    pub fn field(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.lines.push(Line::Field(key.into(), value.to_string()));
        self
    }

    pub fn record(&mut self, line: impl Into<String>) -> &mut Self {
        self.lines.push(Line::Record(line.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.lines.iter().find_map(|l| match l {
            Line::Field(k, v) if k == key => Some(v.as_str()),
            _ => None,
        })
    }

    pub fn render(&self, human: bool) -> String {
        let width = self
            .lines
            .iter()
            .filter_map(|l| match l {
                Line::Field(k, _) => Some(k.len()),
                Line::Record(_) => None,
            })
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for line in &self.lines {
            match line {
                Line::Field(k, v) if human => out.push_str(&format!("{k:<width$}  {v}\n")),
                Line::Field(k, v) => out.push_str(&format!("{k}={v}\n")),
                Line::Record(r) => {
                    out.push_str(r);
                    out.push('\n');
                }
            }
        }
        out
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ResourceLimit { .. } => 2,
        Error::VerificationMismatch { .. } | Error::InternalNonIntegral(_) => 3,
        _ => 1,
    }
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits {
            max_contributors: self.max_contributors,
            max_incidences_sweep: self.max_incidences_sweep,
            max_walk_length: self.max_walk_length,
            max_walks: self.max_walks,
            max_permanent_size: self.max_permanent_size,
        }
    }
}

/// Parses `args` (program name first) and runs the command. `stdin` is read
/// only when the file argument is `-`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    execute(&cli, stdin)
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let mut report = Report::default();
    let result = dispatch(cli, stdin, &mut report);
    match result {
        Ok(()) => Outcome {
            stdout: report.render(cli.human),
            stderr: String::new(),
            code: 0,
        },
        // partial reports are dropped so stdout is all-or-nothing
        Err(err) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: exit_code(&err),
        },
    }
}

fn load(path: &str, stdin: &mut dyn Read) -> Result<OrientedHypergraph> {
    let content = if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Error::Io(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?
    };
    format::parse_auto(path, &content)
}

fn objective(matrix: MatrixArg, kind: KindArg) -> Objective {
    Objective::new(
        match matrix {
            MatrixArg::A => MatrixKind::Adjacency,
            MatrixArg::L => MatrixKind::Laplacian,
        },
        match kind {
            KindArg::Det => Functional::Det,
            KindArg::Perm => Functional::Perm,
        },
    )
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut Report) -> Result<()> {
    let limits = cli.limits();
    match &cli.command {
        Command::Validate { file } => cmd_validate(&load(file, stdin)?, out),
        Command::Canonical { file } => {
            let g = load(file, stdin)?;
            for line in format::to_text(&g).lines() {
                out.record(line);
            }
            Ok(())
        }
        Command::Matrices { file, which, k } => cmd_matrices(&load(file, stdin)?, *which, *k, &limits, out),
        Command::Charpoly {
            file,
            matrix,
            kind,
            method,
        } => cmd_charpoly(&load(file, stdin)?, objective(*matrix, *kind), *method, &limits, out),
        Command::Scalar {
            file,
            matrix,
            kind,
            method,
        } => cmd_scalar(&load(file, stdin)?, objective(*matrix, *kind), *method, &limits, out),
        Command::Contributors { file, filter, mode } => {
            let filter = parse_filter(filter)?;
            cmd_contributors(&load(file, stdin)?, filter, *mode, &limits, out)
        }
        Command::Walks {
            file,
            from,
            to,
            k,
            list,
        } => cmd_walks(&load(file, stdin)?, from, to, *k, *list, &limits, out),
        Command::Bounds { file } => cmd_bounds(&load(file, stdin)?, &limits, out),
        Command::Sweep { file, objective } => {
            let objective: Objective = objective.parse()?;
            cmd_sweep(&load(file, stdin)?, objective, &limits, out)
        }
        Command::Balance { file } => cmd_balance(&load(file, stdin)?, &limits, out),
        Command::Sachs { file } => cmd_sachs(&load(file, stdin)?, &limits, out),
    }
}

pub fn cmd_validate(g: &OrientedHypergraph, out: &mut Report) -> Result<()> {
    let names = |idx: Vec<usize>, all: &[String]| idx.into_iter().map(|i| all[i].clone()).collect::<Vec<_>>().join(",");
    let isolated: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.incidences_at(v).is_empty()).collect();
    let empty: Vec<usize> = (0..g.edge_count()).filter(|&e| g.incidences_on(e).is_empty()).collect();
    out.field("vertices", g.vertex_count())
        .field("edges", g.edge_count())
        .field("incidences", g.incidence_count())
        .field("isolated_vertices", names(isolated, g.vertex_names()))
        .field("empty_edges", names(empty, g.edge_names()))
        .field("orientation", format!("{:?}", g.constant_orientation()).to_lowercase());
    Ok(())
}

fn matrix_field(out: &mut Report, key: &str, m: &IntMatrix) {
    out.field(key, m);
}

pub fn cmd_matrices(g: &OrientedHypergraph, which: WhichMatrix, k: usize, limits: &Limits, out: &mut Report) -> Result<()> {
    let all = which == WhichMatrix::All;
    if all || which == WhichMatrix::H {
        matrix_field(out, "H", &incidence_matrix(g));
    }
    if all || which == WhichMatrix::A {
        matrix_field(out, "A", &adjacency_matrix(g));
    }
    if all || which == WhichMatrix::D {
        matrix_field(out, "D", &degree_matrix(g));
    }
    if all || which == WhichMatrix::L {
        matrix_field(out, "L", &laplacian(g));
    }
    if which == WhichMatrix::Walk {
        check_walk_length(k, limits)?;
        let w = weak_walk_matrix(g, k, limits.max_walks)?;
        let expected = laplacian(g).neg().pow(k);
        matrix_field(out, &format!("W{k}"), &w);
        out.field("matches_neg_L_power", w == expected);
        if w != expected {
            return Err(Error::VerificationMismatch {
                what: format!("weak walk matrix W{k}"),
                contributor: w.to_string(),
                oracle: expected.to_string(),
            });
        }
    }
    Ok(())
}

fn check_walk_length(k: usize, limits: &Limits) -> Result<()> {
    if k > limits.max_walk_length {
        return Err(Error::ResourceLimit {
            what: "walk length",
            limit: limits.max_walk_length as u64,
        });
    }
    Ok(())
}

fn mismatch(out: &mut Report, what: String, contributor: String, oracle: String) -> Result<()> {
    let matched = contributor == oracle;
    out.field("match", matched);
    if matched {
        Ok(())
    } else {
        Err(Error::VerificationMismatch {
            what,
            contributor,
            oracle,
        })
    }
}

pub fn cmd_charpoly(g: &OrientedHypergraph, objective: Objective, method: Method, limits: &Limits, out: &mut Report) -> Result<()> {
    out.field("objective", objective);
    let contributor = match method {
        Method::Oracle => None,
        _ => Some(coefficients::charpoly(g, objective, limits.max_contributors)?),
    };
    let oracle = match method {
        Method::Contributor => None,
        _ => Some(coefficients::oracle_charpoly(g, objective, limits)?),
    };
    if let Some(p) = &contributor {
        out.field("contributor", p);
    }
    if let Some(p) = &oracle {
        out.field("oracle", p);
    }
    if let (Some(c), Some(o)) = (contributor, oracle) {
        return mismatch(out, format!("charpoly {objective}"), c.to_string(), o.to_string());
    }
    Ok(())
}

pub fn cmd_scalar(g: &OrientedHypergraph, objective: Objective, method: Method, limits: &Limits, out: &mut Report) -> Result<()> {
    out.field("objective", objective);
    let contributor = match method {
        Method::Oracle => None,
        _ => Some(coefficients::scalar(g, objective, limits.max_contributors)?.to_string()),
    };
    let oracle = match method {
        Method::Contributor => None,
        _ => Some(coefficients::oracle_scalar(g, objective, limits)?.to_string()),
    };
    if let Some(v) = &contributor {
        out.field("contributor", v);
    }
    if let Some(v) = &oracle {
        out.field("oracle", v);
    }
    if let (Some(c), Some(o)) = (contributor, oracle) {
        return mismatch(out, objective.to_string(), c, o);
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    All,
    Eq(usize),
    Geq(usize),
}

pub fn parse_filter(s: &str) -> Result<Filter> {
    let bad = || Error::PreconditionViolated(format!("invalid filter `{s}` (expected all, eq:K or geq:K)"));
    if s == "all" {
        return Ok(Filter::All);
    }
    let (kind, k) = s.split_once(':').ok_or_else(bad)?;
    let k: usize = k.parse().map_err(|_| bad())?;
    match kind {
        "eq" => Ok(Filter::Eq(k)),
        "geq" => Ok(Filter::Geq(k)),
        _ => Err(bad()),
    }
}

fn ids(steps: &[Option<Step>], pick: impl Fn(Step) -> usize) -> String {
    steps
        .iter()
        .map(|s| s.map_or("-".to_string(), |s| pick(s).to_string()))
        .collect::<Vec<_>>()
        .join(",")
}

fn census_line(g: &OrientedHypergraph, sub: &SubContributor) -> String {
    let s = sub.stats(g);
    let isolated = sub
        .isolated_vertices()
        .into_iter()
        .map(|v| g.vertex_names()[v].as_str())
        .collect::<Vec<_>>()
        .join(",");
    let mut line = format!(
        "perm={} tails={} heads={} bs={} ec={} oc={} pc={} nc={}",
        cycle_notation(g, &s.permutation),
        ids(sub.steps(), |s| s.tail),
        ids(sub.steps(), |s| s.head),
        s.bs,
        s.ec,
        s.oc,
        s.pc,
        s.nc
    );
    if !isolated.is_empty() {
        line.push_str(&format!(" isolated={isolated}"));
    }
    line
}

pub fn cmd_contributors(g: &OrientedHypergraph, filter: Filter, mode: ContributorMode, limits: &Limits, out: &mut Report) -> Result<()> {
    let max = limits.max_contributors;
    let subs: Vec<SubContributor> = match filter {
        Filter::All => {
            if mode == ContributorMode::Count {
                let n = visit_contributors(g, max, |_| {})?;
                out.field("count", n);
                return Ok(());
            }
            let mut all = Vec::new();
            visit_contributors(g, max, |c| all.push(c.clone()))?;
            if mode == ContributorMode::Classes {
                return classes(g, &all, out);
            }
            all.iter().map(Contributor::as_sub).collect()
        }
        Filter::Eq(k) => enumerate_hat_eq(g, k, max)?,
        Filter::Geq(k) => enumerate_hat_geq(g, k, max)?,
    };
    out.field("count", subs.len());
    match mode {
        ContributorMode::Count => {}
        ContributorMode::Census => {
            for sub in &subs {
                out.record(census_line(g, sub));
            }
        }
        ContributorMode::Classes => {
            let mut grouped: std::collections::BTreeMap<String, usize> = std::collections::BTreeMap::new();
            for sub in &subs {
                *grouped.entry(cycle_notation(g, &sub.stats(g).permutation)).or_default() += 1;
            }
            out.field("classes", grouped.len());
            for (perm, size) in grouped {
                out.record(format!("class perm={perm} size={size}"));
            }
        }
    }
    Ok(())
}

fn classes(g: &OrientedHypergraph, all: &[Contributor], out: &mut Report) -> Result<()> {
    let grouped = group_by_permutomorphism(g, all);
    out.field("count", all.len()).field("classes", grouped.len());
    for members in grouped.values() {
        let perm = cycle_notation(g, &members[0].stats(g).permutation);
        out.record(format!("class perm={perm} size={}", members.len()));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_walks(g: &OrientedHypergraph, from: &str, to: &str, k: usize, list: bool, limits: &Limits, out: &mut Report) -> Result<()> {
    check_walk_length(k, limits)?;
    let (v, w) = (g.vertex_index(from)?, g.vertex_index(to)?);
    let walks = g.weak_walks(v, w, k, limits.max_walks)?;
    let signed: i64 = walks.iter().map(|walk| walk.sign(g).value()).sum();
    out.field("walks", walks.len()).field("signed_count", signed);
    if list {
        let vn = g.vertex_names();
        let en = g.edge_names();
        for walk in &walks {
            let mut line = format!("walk {}", vn[walk.vertices[0]]);
            for h in 0..walk.len() {
                line.push_str(&format!(
                    " {} {} {} {}",
                    walk.incidences[2 * h],
                    en[walk.edges[h]],
                    walk.incidences[2 * h + 1],
                    vn[walk.vertices[h + 1]]
                ));
            }
            line.push_str(&format!(" sign={}", walk.sign(g)));
            out.record(line);
        }
    }
    Ok(())
}

pub fn cmd_bounds(g: &OrientedHypergraph, limits: &Limits, out: &mut Report) -> Result<()> {
    let r = bounds_report(g, limits.max_contributors)?;
    out.field("contributors", r.contributor_count)
        .field("perm_L", r.perm_l)
        .field("det_L", r.det_l)
        .field("bounds_hold", r.bounds_hold)
        .field("lower_strict", r.lower_strict_ok)
        .field("upper_perm_attained", r.upper_perm_attained)
        .field("upper_det_attained", r.upper_det_attained)
        .field("constant_orientation", r.constant_orientation)
        .field("bouquet_family", r.bouquet_family)
        .field("sharpness_consistent", r.sharpness_consistent);
    for note in &r.notes {
        out.record(format!("note {note}"));
    }
    if !r.bounds_hold || !r.sharpness_consistent {
        return Err(Error::VerificationMismatch {
            what: "contributor bounds".into(),
            contributor: format!("perm_L={} det_L={}", r.perm_l, r.det_l),
            oracle: format!("|C|={}", r.contributor_count),
        });
    }
    Ok(())
}

/// Bit string with incidence 0 first; `1` means σ = -1.
pub fn mask_string(mask: u64, n_incidences: usize) -> String {
    (0..n_incidences).map(|i| if mask >> i & 1 == 1 { '1' } else { '0' }).collect()
}

pub fn cmd_sweep(g: &OrientedHypergraph, objective: Objective, limits: &Limits, out: &mut Report) -> Result<()> {
    let r = orientation_sweep(g, objective, limits)?;
    let n = g.incidence_count();
    let argmax: Vec<String> = r.argmax.iter().map(|&m| mask_string(m, n)).collect();
    out.field("objective", objective)
        .field("orientations", r.orientation_count())
        .field("contributors", r.contributor_count)
        .field("max", r.max)
        .field("min", r.min)
        .field("argmax_count", r.argmax.len())
        .field("witness", mask_string(r.witness(), n))
        .field("argmax", argmax.join(","))
        .field(
            "values",
            format!("[{}]", r.values.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")),
        );
    Ok(())
}

pub fn cmd_balance(g: &OrientedHypergraph, limits: &Limits, out: &mut Report) -> Result<()> {
    let c = balanced_perm_a_check(g, limits.max_contributors)?;
    out.field("balanced", c.balanced)
        .field("perm_A", c.perm_a)
        .field("backstep_free", c.backstep_free)
        .field("attains", c.attains);
    Ok(())
}

pub fn cmd_sachs(g: &OrientedHypergraph, limits: &Limits, out: &mut Report) -> Result<()> {
    let sachs = sachs_coefficients(g)?;
    out.field("sachs", &sachs);
    let contributor = coefficients::charpoly(g, Objective::DET_A, limits.max_contributors)?;
    out.field("contributor", &contributor);
    mismatch(out, "sachs vs charpoly det_A".into(), sachs.to_string(), contributor.to_string())
}
