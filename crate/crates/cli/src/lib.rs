//! Command-line front end for `coxangle`.
//!
//! Every command produces a [`Report`], rendered as an aligned table, a
//! single JSON document, or CSV with a fixed header. Failures are written to
//! standard error; in JSON mode they are a JSON document with a stable
//! `code` field.
//!
//! Exit codes: 0 success, 1 domain or validation error, 2 parse error,
//! 3 catalog mismatch.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxangle::dsl::parse_spec_named;
use coxangle::tits::{angular_distance_with, minimal_angle_with, Limits};
use coxangle::weyl::DEFAULT_ORBIT_BUDGET;
use coxangle::{
    enumerate_indices, fold, fundamental_orbit_size, opposition, paper_catalog, realize,
    relative_rank, weyl_orbit, Angle, AutGroup, CoxeterDiagram, Node, Payload, Permutation,
    SpecError, TitsDiagram, Verdict, Violation,
};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CATALOG: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "coxangle",
    version,
    about = "Exact minimal angles of spherical Tits diagrams"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Largest Weyl orbit to enumerate.
    #[arg(long, global = true, env = "COXANGLE_ORBIT_BUDGET")]
    pub orbit_budget: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Source {
    /// Diagram description file; `-` reads standard input.
    #[arg(
        value_name = "FILE",
        required_unless_present = "diagram",
        conflicts_with = "diagram"
    )]
    pub file: Option<PathBuf>,

    /// Builtin diagram such as `E7`, `I2(5)` or `A2+A2`.
    #[arg(long)]
    pub diagram: Option<String>,
}

#[derive(Debug, Args)]
pub struct GammaSource {
    #[command(flatten)]
    pub source: Source,

    /// Automorphism in cycle notation, e.g. `(1 5)(2 4)`; repeatable. Only
    /// with `--diagram`.
    #[arg(long, requires = "diagram")]
    pub gamma: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Tits diagram conditions of a description file.
    Validate {
        #[arg(value_name = "FILE")]
        file: PathBuf,
    },
    /// Angular distance at one node.
    Angle {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        node: Node,
    },
    /// Minimal angle and π/3 verdict of a Tits diagram.
    MinAngle {
        #[arg(value_name = "FILE")]
        file: PathBuf,
    },
    /// Folded diagram by the automorphism group.
    Fold {
        #[command(flatten)]
        source: GammaSource,
    },
    /// Opposition involution.
    Opposition {
        #[command(flatten)]
        source: Source,
    },
    /// Weyl orbit of a fundamental weight in Bourbaki coordinates.
    Orbit {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        node: Node,
        /// Report only the orbit size.
        #[arg(long)]
        count_only: bool,
    },
    /// Every valid anisotropic kernel with its minimal angle.
    Enumerate {
        #[command(flatten)]
        source: GammaSource,
        /// Keep only indices of this relative rank.
        #[arg(long)]
        rel_rank: Option<usize>,
    },
    /// Recompute every catalogued diagram and compare with its expected
    /// angle.
    Catalog,
}

/// Rendered output of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Command result before rendering.
struct Report {
    preamble: Vec<String>,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Value,
    code: i32,
}

#[derive(Debug)]
enum Failure {
    Parse {
        message: String,
        line: Option<usize>,
        column: Option<usize>,
    },
    Validation {
        line: Option<usize>,
        column: Option<usize>,
        violations: Vec<Violation>,
    },
    Domain(coxangle::Error),
    Io(String),
}

impl From<coxangle::Error> for Failure {
    fn from(e: coxangle::Error) -> Self {
        match e {
            coxangle::Error::InvalidTitsDiagram(violations) => Failure::Validation {
                line: None,
                column: None,
                violations,
            },
            other => Failure::Domain(other),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::Parse(p) => Failure::Parse {
                message: p.message,
                line: Some(p.line),
                column: Some(p.column),
            },
            SpecError::Validation {
                line,
                column,
                violations,
            } => Failure::Validation {
                line: Some(line),
                column: Some(column),
                violations,
            },
        }
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Parse { .. } => EXIT_PARSE,
            _ => EXIT_DOMAIN,
        }
    }

    fn code(&self) -> &'static str {
        match self {
            Failure::Parse { .. } => "parse_error",
            Failure::Validation { .. } => "invalid_tits_diagram",
            Failure::Domain(e) => e.code(),
            Failure::Io(_) => "io_error",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Parse { message, .. } => message.clone(),
            Failure::Validation { violations, .. } => {
                let parts: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                format!("invalid Tits diagram: {}", parts.join("; "))
            }
            Failure::Domain(e) => e.to_string(),
            Failure::Io(m) => m.clone(),
        }
    }

    fn position(&self) -> (Option<usize>, Option<usize>) {
        match self {
            Failure::Parse { line, column, .. } | Failure::Validation { line, column, .. } => {
                (*line, *column)
            }
            _ => (None, None),
        }
    }

    fn to_json(&self) -> Value {
        let mut error = json!({ "code": self.code(), "message": self.message() });
        let (line, column) = self.position();
        if let (Some(l), Some(c)) = (line, column) {
            error["line"] = json!(l);
            error["column"] = json!(c);
        }
        if let Failure::Validation { violations, .. } = self {
            error["violations"] = violations_json(violations);
        }
        json!({ "error": error })
    }

    fn to_text(&self) -> String {
        match self.position() {
            (Some(l), Some(c)) => {
                format!("error[{}] at {l}:{c}: {}\n", self.code(), self.message())
            }
            _ => format!("error[{}]: {}\n", self.code(), self.message()),
        }
    }
}

/// Runs one parsed invocation.
pub fn run(cli: &Cli) -> Outcome {
    let limits = Limits {
        orbit_budget: cli.orbit_budget.unwrap_or(DEFAULT_ORBIT_BUDGET),
    };
    let result = match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Angle { source, node } => cmd_angle(source, *node, limits),
        Command::MinAngle { file } => cmd_min_angle(file, limits),
        Command::Fold { source } => cmd_fold(source),
        Command::Opposition { source } => cmd_opposition(source),
        Command::Orbit {
            source,
            node,
            count_only,
        } => cmd_orbit(source, *node, *count_only, cli.format, limits),
        Command::Enumerate { source, rel_rank } => cmd_enumerate(source, *rel_rank, limits),
        Command::Catalog => cmd_catalog(limits),
    };
    match result {
        Ok(report) => Outcome {
            stdout: render(&report, cli.format),
            stderr: String::new(),
            code: report.code,
        },
        Err(failure) => Outcome {
            stdout: String::new(),
            stderr: render_failure(&failure, cli.format),
            code: failure.exit_code(),
        },
    }
}

/// Error document for a command line clap rejected.
pub fn usage_failure(message: &str, format: Format) -> String {
    render_failure(
        &Failure::Parse {
            message: message.trim().to_string(),
            line: None,
            column: None,
        },
        format,
    )
}

fn render_failure(f: &Failure, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", f.to_json()),
        _ => f.to_text(),
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&report.header).expect("in-memory write");
            for row in &report.rows {
                w.write_record(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
        Format::Table => {
            let mut out = String::new();
            for line in &report.preamble {
                out.push_str(line);
                out.push('\n');
            }
            if !report.header.is_empty() {
                out.push_str(&table(&report.header, &report.rows));
            }
            out
        }
    }
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (k, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if k > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            if k + 1 < cells.len() {
                s.push_str(&" ".repeat(w - cell.chars().count()));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&line(rule.iter().map(String::as_str).collect()));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn read_file(path: &PathBuf) -> Result<(String, String), Failure> {
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("reading {name}: {e}")))?
    };
    Ok((text, name))
}

fn load_file(path: &PathBuf) -> Result<Payload, Failure> {
    let (text, name) = read_file(path)?;
    Ok(parse_spec_named(&text, Some(&name))?.payload)
}

fn builtin(name: &str) -> Result<CoxeterDiagram, Failure> {
    CoxeterDiagram::builtin(name).map_err(|e| Failure::Parse {
        message: format!("--diagram {name:?}: {e}"),
        line: None,
        column: None,
    })
}

fn load(source: &Source) -> Result<Payload, Failure> {
    match (&source.diagram, &source.file) {
        (Some(name), _) => Ok(Payload::Diagram(builtin(name)?)),
        (None, Some(path)) => load_file(path),
        (None, None) => unreachable!("clap requires one of the two"),
    }
}

/// Diagram and automorphism group from a file or `--diagram`/`--gamma`.
fn load_with_gamma(source: &GammaSource) -> Result<(Payload, AutGroup), Failure> {
    let payload = load(&source.source)?;
    if source.gamma.is_empty() {
        let gamma = match &payload {
            Payload::Tits(t) => t.gamma().clone(),
            Payload::Diagram(_) => AutGroup::trivial(),
        };
        return Ok((payload, gamma));
    }
    let mut gens = Vec::new();
    for text in &source.gamma {
        let p: Permutation = text.parse().map_err(|e: coxangle::Error| Failure::Parse {
            message: format!("--gamma {text:?}: {e}"),
            line: None,
            column: None,
        })?;
        payload.diagram().check_automorphism(&p)?;
        gens.push(p);
    }
    Ok((payload, AutGroup::new(gens)))
}

fn nodes_text<'a>(nodes: impl IntoIterator<Item = &'a Node>) -> String {
    nodes
        .into_iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn orbit_text<'a>(
    orbits: impl IntoIterator<Item = &'a std::collections::BTreeSet<Node>>,
) -> String {
    orbits
        .into_iter()
        .map(|o| format!("{{{}}}", nodes_text(o).replace(' ', ",")))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Rounds to 12 significant digits for display.
fn approx(x: f64) -> f64 {
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// JSON form of an angle; the exact field is authoritative.
pub fn angle_json(a: &Angle) -> Value {
    let mut v = match a {
        Angle::ExactCos(c) => json!({ "kind": "exact_cos", "cos": c.to_string() }),
        Angle::RationalPi { p, q } => {
            json!({ "kind": "rational_pi", "pi_fraction": format!("{p}/{q}") })
        }
    };
    v["radians_approx"] = json!(approx(a.radians_approx()));
    v["display"] = json!(a.to_string());
    v
}

fn angle_cells(a: &Angle) -> Vec<String> {
    vec![
        a.to_string(),
        a.rational_cos().map_or("-".to_string(), |c| c.to_string()),
        approx(a.radians_approx()).to_string(),
    ]
}

fn violations_json(violations: &[Violation]) -> Value {
    Value::Array(
        violations
            .iter()
            .map(|v| {
                json!({
                    "kind": v.kind.code(),
                    "nodes": v.nodes.iter().collect::<Vec<_>>(),
                    "detail": v.detail,
                })
            })
            .collect(),
    )
}

fn diagram_json(d: &CoxeterDiagram) -> Value {
    json!({
        "type": d.type_name(),
        "nodes": d.nodes(),
        "edges": d.edges().map(|(i, j, m)| json!([i, j, m])).collect::<Vec<_>>(),
    })
}

fn tits_json(t: &TitsDiagram) -> Value {
    json!({
        "diagram": diagram_json(t.diagram()),
        "gamma": t.gamma().generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "anisotropic": t.anisotropic().iter().collect::<Vec<_>>(),
    })
}

fn cmd_validate(file: &PathBuf) -> Result<Report, Failure> {
    let (text, name) = read_file(file)?;
    let header = vec!["diagram", "gamma", "anisotropic", "valid", "violations"];
    match parse_spec_named(&text, Some(&name)) {
        Ok(doc) => {
            let t = doc.payload.to_tits();
            let rank = relative_rank(&t)?;
            Ok(Report {
                preamble: vec![format!("{name}: valid, relative rank {rank}")],
                header,
                rows: vec![vec![
                    t.diagram().type_name(),
                    t.gamma().to_string(),
                    nodes_text(t.anisotropic()),
                    "true".into(),
                    String::new(),
                ]],
                json: json!({
                    "valid": true,
                    "tits": tits_json(&t),
                    "relative_rank": rank,
                    "violations": [],
                }),
                code: EXIT_OK,
            })
        }
        Err(SpecError::Validation {
            line,
            column,
            violations,
        }) => {
            let mut preamble = vec![format!("{name}:{line}:{column}: invalid Tits diagram")];
            preamble.extend(violations.iter().map(|v| format!("  {v}")));
            Ok(Report {
                preamble,
                header,
                rows: vec![vec![
                    "-".into(),
                    "-".into(),
                    "-".into(),
                    "false".into(),
                    violations
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join("; "),
                ]],
                json: json!({
                    "valid": false,
                    "line": line,
                    "column": column,
                    "violations": violations_json(&violations),
                }),
                code: EXIT_DOMAIN,
            })
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_angle(source: &Source, node: Node, limits: Limits) -> Result<Report, Failure> {
    let payload = load(source)?;
    let d = payload.diagram();
    let a = angular_distance_with(d, node, limits)?;
    let verdict = a.verdict();
    let mut json = angle_json(&a);
    json["diagram"] = json!(d.type_name());
    json["node"] = json!(node);
    json["verdict"] = json!(verdict.code());
    let mut row = vec![d.type_name(), node.to_string()];
    row.extend(angle_cells(&a));
    row.push(verdict.code().to_string());
    Ok(Report {
        preamble: Vec::new(),
        header: vec![
            "diagram",
            "node",
            "angle",
            "cos",
            "radians_approx",
            "verdict",
        ],
        rows: vec![row],
        json,
        code: EXIT_OK,
    })
}

fn minimal_row(t: &TitsDiagram, limits: Limits) -> Result<(Vec<String>, Value), Failure> {
    let rank = relative_rank(t)?;
    let m = minimal_angle_with(t, limits)?;
    let verdict = m.angle.verdict();
    let mut row = vec![
        t.diagram().type_name(),
        t.gamma().to_string(),
        nodes_text(t.anisotropic()),
        rank.to_string(),
    ];
    row.extend(angle_cells(&m.angle));
    row.push(verdict.code().to_string());
    row.push(orbit_text(&m.witnesses));
    let json = json!({
        "tits": tits_json(t),
        "relative_rank": rank,
        "angle": angle_json(&m.angle),
        "verdict": verdict.code(),
        "witnesses": m.witnesses.iter().map(|w| w.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    Ok((row, json))
}

const MINIMAL_HEADER: [&str; 9] = [
    "diagram",
    "gamma",
    "anisotropic",
    "relative_rank",
    "angle",
    "cos",
    "radians_approx",
    "verdict",
    "witnesses",
];

fn cmd_min_angle(file: &PathBuf, limits: Limits) -> Result<Report, Failure> {
    let t = load_file(file)?.to_tits();
    let (row, json) = minimal_row(&t, limits)?;
    Ok(Report {
        preamble: Vec::new(),
        header: MINIMAL_HEADER.to_vec(),
        rows: vec![row],
        json,
        code: EXIT_OK,
    })
}

fn cmd_fold(source: &GammaSource) -> Result<Report, Failure> {
    let (payload, gamma) = load_with_gamma(source)?;
    let d = payload.diagram();
    let kernel = match &payload {
        Payload::Tits(t) => t.anisotropic().clone(),
        Payload::Diagram(_) => Default::default(),
    };
    let r = fold(d, &gamma)?;
    let edges: Vec<String> = r
        .folded
        .edges()
        .map(|(i, j, m)| format!("{i}-{j}:{m}"))
        .collect();
    let preamble = vec![format!(
        "{} / {} folds to {} (edges {})",
        d.type_name(),
        gamma,
        r.folded.type_name(),
        if edges.is_empty() {
            "none".to_string()
        } else {
            edges.join(" ")
        }
    )];
    let rows = r
        .orbits
        .iter()
        .map(|(f, o)| {
            vec![
                f.to_string(),
                nodes_text(o),
                (o.is_subset(&kernel) && !kernel.is_empty()).to_string(),
            ]
        })
        .collect();
    let folded_kernel: Vec<Node> = r
        .orbits
        .iter()
        .filter(|(_, o)| !kernel.is_empty() && o.is_subset(&kernel))
        .map(|(f, _)| *f)
        .collect();
    let json = json!({
        "diagram": diagram_json(d),
        "gamma": gamma.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "folded": diagram_json(&r.folded),
        "orbits": r.orbits.iter().map(|(f, o)| json!({ "node": f, "orbit": o.iter().collect::<Vec<_>>() })).collect::<Vec<_>>(),
        "anisotropic": folded_kernel,
    });
    Ok(Report {
        preamble,
        header: vec!["folded_node", "orbit", "anisotropic"],
        rows,
        json,
        code: EXIT_OK,
    })
}

fn cmd_opposition(source: &Source) -> Result<Report, Failure> {
    let payload = load(source)?;
    let d = payload.diagram();
    let sigma = opposition(d)?;
    let rows = d
        .nodes()
        .iter()
        .map(|&n| vec![n.to_string(), sigma.apply(n).to_string()])
        .collect();
    let map: serde_json::Map<String, Value> = d
        .nodes()
        .iter()
        .map(|&n| (n.to_string(), json!(sigma.apply(n))))
        .collect();
    Ok(Report {
        preamble: vec![format!("opposition of {}: {}", d.type_name(), sigma)],
        header: vec!["node", "image"],
        rows,
        json: json!({ "diagram": d.type_name(), "opposition": sigma.to_string(), "map": map }),
        code: EXIT_OK,
    })
}

fn cmd_orbit(
    source: &Source,
    node: Node,
    count_only: bool,
    format: Format,
    limits: Limits,
) -> Result<Report, Failure> {
    let payload = load(source)?;
    let d = payload.diagram();
    let r = realize(d)?;
    let omega = r.fundamental_weight(node)?.clone();
    let coords = |v: &coxangle::Vector| -> Vec<String> {
        v.coords().iter().map(|c| c.to_string()).collect()
    };
    let orbit = if count_only {
        Vec::new()
    } else {
        weyl_orbit(&r, &omega, limits.orbit_budget)?
    };
    let size = if count_only {
        fundamental_orbit_size(&r, node, limits.orbit_budget)?
    } else {
        orbit.len()
    };
    let preamble = vec![format!(
        "orbit of omega_{node} in {}: {size} vectors",
        d.type_name()
    )];
    let (rows, json) = if format == Format::Json {
        let mut json = json!({
            "diagram": d.type_name(),
            "node": node,
            "size": size,
            "weight": coords(&omega),
        });
        if !count_only {
            json["vectors"] = orbit.iter().map(|v| json!(coords(v))).collect();
        }
        (Vec::new(), json)
    } else if count_only {
        (vec![vec![size.to_string()]], Value::Null)
    } else {
        let rows = orbit
            .iter()
            .enumerate()
            .map(|(k, v)| vec![(k + 1).to_string(), coords(v).join(" ")])
            .collect();
        (rows, Value::Null)
    };
    let header = if count_only {
        vec!["size"]
    } else {
        vec!["index", "vector"]
    };
    Ok(Report {
        preamble,
        header,
        rows,
        json,
        code: EXIT_OK,
    })
}

fn cmd_enumerate(
    source: &GammaSource,
    rel_rank: Option<usize>,
    limits: Limits,
) -> Result<Report, Failure> {
    let (payload, gamma) = load_with_gamma(source)?;
    let d = payload.diagram();
    let rows = enumerate_indices(d, &gamma, rel_rank, limits)?;
    let mut table_rows = Vec::new();
    let mut json_rows = Vec::new();
    for row in &rows {
        let (cells, json) = minimal_row(&row.tits, limits)?;
        table_rows.push(cells);
        json_rows.push(json);
    }
    let caveat = "kernels are checked for combinatorial validity only; an algebraic group with a given index need not exist";
    Ok(Report {
        preamble: vec![
            format!(
                "{} indices of {} with gamma {}",
                rows.len(),
                d.type_name(),
                gamma
            ),
            format!("note: {caveat}"),
        ],
        header: MINIMAL_HEADER.to_vec(),
        rows: table_rows,
        json: json!({
            "diagram": diagram_json(d),
            "gamma": gamma.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "relative_rank": rel_rank,
            "caveat": caveat,
            "rows": json_rows,
        }),
        code: EXIT_OK,
    })
}

fn cmd_catalog(limits: Limits) -> Result<Report, Failure> {
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    let mut failed = 0;
    for e in paper_catalog() {
        let computed = minimal_angle_with(&e.tits, limits).map(|m| m.angle);
        let (computed_text, computed_json, verdict) = match &computed {
            Ok(a) => (a.to_string(), angle_json(a), Some(a.verdict())),
            Err(err) => (format!("error: {err}"), Value::Null, None),
        };
        let pass = computed.as_ref().is_ok_and(|a| *a == e.expected_angle)
            && verdict == Some(e.expected_verdict);
        if !pass {
            failed += 1;
        }
        let status = if pass { "PASS" } else { "FAIL" };
        let verdict_code = verdict.map_or("-", |v: Verdict| v.code());
        rows.push(vec![
            e.name.clone(),
            e.group.code().to_string(),
            e.tits.diagram().type_name(),
            e.tits.gamma().to_string(),
            nodes_text(e.tits.anisotropic()),
            e.expected_angle.to_string(),
            computed_text,
            verdict_code.to_string(),
            status.to_string(),
        ]);
        entries.push(json!({
            "name": e.name,
            "group": e.group.code(),
            "tits": tits_json(&e.tits),
            "expected": angle_json(&e.expected_angle),
            "expected_verdict": e.expected_verdict.code(),
            "computed": computed_json,
            "verdict": verdict.map(|v| v.code()),
            "status": status,
        }));
    }
    let total = rows.len();
    Ok(Report {
        preamble: vec![format!(
            "{} of {total} catalog entries pass",
            total - failed
        )],
        header: vec![
            "name",
            "group",
            "diagram",
            "gamma",
            "anisotropic",
            "expected",
            "computed",
            "verdict",
            "status",
        ],
        rows,
        json: json!({ "entries": entries, "passed": total - failed, "failed": failed }),
        code: if failed == 0 { EXIT_OK } else { EXIT_CATALOG },
    })
}
