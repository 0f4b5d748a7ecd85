//! Line-oriented diagram description format.
//!
//! ```text
//! # comments run to the end of the line
//! diagram A5                # builtin name, or `custom`
//! gamma (1 5)(2 4)          # optional, repeatable; one generator per line
//! anisotropic 1 2 4 5       # optional
//! ```
//!
//! A custom diagram lists its nodes and every label above 2:
//!
//! ```text
//! diagram custom
//! nodes 1 2
//! edge 1 2 5
//! ```
//!
//! A document without `gamma` and `anisotropic` clauses describes a plain
//! Coxeter diagram. Otherwise it describes a Tits diagram and is validated.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::diagram::{AutGroup, CoxeterDiagram, Permutation};
use crate::tits::{validate, TitsDiagram, Violation, ViolationKind};
use crate::Node;

/// Syntax or structure error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("parse error at {0}")]
    Parse(ParseError),
    /// The document is well formed but the Tits diagram is invalid. The
    /// position points at the clause responsible.
    #[error("invalid Tits diagram at {line}:{column}: {}", join(.violations))]
    Validation {
        line: usize,
        column: usize,
        violations: Vec<Violation>,
    },
}

impl SpecError {
    pub fn code(&self) -> &'static str {
        match self {
            SpecError::Parse(_) => "parse_error",
            SpecError::Validation { .. } => "invalid_tits_diagram",
        }
    }
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Diagram(CoxeterDiagram),
    Tits(TitsDiagram),
}

impl Payload {
    pub fn diagram(&self) -> &CoxeterDiagram {
        match self {
            Payload::Diagram(d) => d,
            Payload::Tits(t) => t.diagram(),
        }
    }

    /// The payload as a Tits diagram; a plain diagram is read as quasi-split
    /// with trivial Γ.
    pub fn to_tits(&self) -> TitsDiagram {
        match self {
            Payload::Diagram(d) => TitsDiagram::quasi_split(d.clone(), AutGroup::trivial()),
            Payload::Tits(t) => t.clone(),
        }
    }
}

/// Keyword and line of one clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseSpan {
    pub keyword: String,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecDocument {
    pub source: String,
    pub file_name: Option<String>,
    pub payload: Payload,
    pub clauses: Vec<ClauseSpan>,
}

/// Parses and validates a document.
pub fn parse_spec(text: &str) -> Result<SpecDocument, SpecError> {
    parse_spec_named(text, None)
}

/// [`parse_spec`] recording the originating file name.
pub fn parse_spec_named(text: &str, file_name: Option<&str>) -> Result<SpecDocument, SpecError> {
    let mut p = Parser::default();
    for (index, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        p.line(index + 1, line).map_err(SpecError::Parse)?;
    }
    let payload = p.finish(text)?;
    Ok(SpecDocument {
        source: text.to_string(),
        file_name: file_name.map(str::to_string),
        payload,
        clauses: p.clauses,
    })
}

/// Renders a payload in custom form; parsing the output gives back an equal
/// payload.
pub fn render_spec(payload: &Payload) -> String {
    let d = payload.diagram();
    let mut out = String::from("diagram custom\n");
    out.push_str(&format!("nodes {}\n", join_nodes(d.nodes().iter())));
    for (i, j, m) in d.edges() {
        out.push_str(&format!("edge {i} {j} {m}\n"));
    }
    if let Payload::Tits(t) = payload {
        for g in t.gamma().generators() {
            out.push_str(&format!("gamma {g}\n"));
        }
        // always present, so an empty kernel still reads as a Tits diagram
        out.push_str(format!("anisotropic {}", join_nodes(t.anisotropic().iter())).trim_end());
        out.push('\n');
    }
    out
}

fn join_nodes<'a>(nodes: impl Iterator<Item = &'a Node>) -> String {
    nodes.map(|n| n.to_string()).collect::<Vec<_>>().join(" ")
}

/// Parses disjoint-cycle notation such as `(1 5)(2 4)`. Entries may be
/// separated by whitespace or commas. On failure returns a 0-based byte
/// offset and a message.
pub fn parse_cycles(s: &str) -> Result<Vec<Vec<Node>>, (usize, String)> {
    let bytes = s.as_bytes();
    let mut cycles = Vec::new();
    let mut i = 0;
    let skip_space = |i: &mut usize| {
        while *i < bytes.len() && (bytes[*i] as char).is_ascii_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_space(&mut i);
        if i == bytes.len() {
            return Ok(cycles);
        }
        if bytes[i] != b'(' {
            return Err((i, format!("expected '(' but found {:?}", char_at(s, i))));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                i += 1;
            }
            if i == bytes.len() {
                return Err((i, "unclosed cycle".to_string()));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err((
                    i,
                    format!("expected a node label but found {:?}", char_at(s, i)),
                ));
            }
            let n = parse_node(&s[start..i]).map_err(|m| (start, m))?;
            cycle.push(n);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
}

fn char_at(s: &str, i: usize) -> char {
    s[i..].chars().next().unwrap_or(' ')
}

fn parse_node(token: &str) -> Result<Node, String> {
    match token.parse::<Node>() {
        Ok(0) => Err("node labels start at 1".to_string()),
        Ok(n) => Ok(n),
        Err(_) => Err(format!("invalid node label {token:?}")),
    }
}

enum Source {
    Builtin(String, usize),
    Custom(usize),
}

#[derive(Default)]
struct Parser {
    source: Option<Source>,
    nodes: Option<(Vec<Node>, usize)>,
    edges: Vec<(Node, Node, u32, usize, usize)>,
    gamma: Vec<(Permutation, usize, usize)>,
    anisotropic: Option<(Vec<Node>, usize, usize)>,
    clauses: Vec<ClauseSpan>,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

impl Parser {
    fn line(&mut self, n: usize, line: &str) -> Result<(), ParseError> {
        let content = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let toks = tokens(content);
        let Some(key) = toks.first() else {
            return Ok(());
        };
        let args = &toks[1..];
        let rest_column = args
            .first()
            .map(|t| t.column)
            .unwrap_or(key.column + key.text.len());
        let end_column = content.trim_end().chars().count() + 1;
        self.clauses.push(ClauseSpan {
            keyword: key.text.to_string(),
            line: n,
        });
        match key.text {
            "diagram" => {
                if self.source.is_some() {
                    return Err(err(n, key.column, "duplicate diagram clause"));
                }
                match args {
                    [] => return Err(err(n, end_column, "diagram needs a type name or `custom`")),
                    [name] if name.text == "custom" => self.source = Some(Source::Custom(n)),
                    [name] => {
                        self.source = Some(Source::Builtin(name.text.to_string(), name.column))
                    }
                    [_, extra, ..] => {
                        return Err(err(
                            n,
                            extra.column,
                            "unexpected text after the diagram name",
                        ))
                    }
                }
            }
            "nodes" => {
                self.require_custom(n, key.column, "nodes")?;
                if self.nodes.is_some() {
                    return Err(err(n, key.column, "duplicate nodes clause"));
                }
                if args.is_empty() {
                    return Err(err(n, end_column, "nodes needs at least one label"));
                }
                let list = args
                    .iter()
                    .map(|t| parse_node(t.text).map_err(|m| err(n, t.column, m)))
                    .collect::<Result<_, _>>()?;
                self.nodes = Some((list, n));
            }
            "edge" => {
                self.require_custom(n, key.column, "edge")?;
                if self.nodes.is_none() {
                    return Err(err(n, key.column, "edge before the nodes clause"));
                }
                let [i, j, m] = args else {
                    return Err(err(
                        n,
                        rest_column,
                        "edge takes exactly three integers: i j m",
                    ));
                };
                let a = parse_node(i.text).map_err(|msg| err(n, i.column, msg))?;
                let b = parse_node(j.text).map_err(|msg| err(n, j.column, msg))?;
                let label = m
                    .text
                    .parse::<u32>()
                    .map_err(|_| err(n, m.column, format!("invalid edge label {:?}", m.text)))?;
                self.edges.push((a, b, label, n, key.column));
            }
            "gamma" => {
                if args.is_empty() {
                    return Err(err(
                        n,
                        end_column,
                        "gamma needs a permutation in cycle notation",
                    ));
                }
                let offset = content[..]
                    .char_indices()
                    .nth(rest_column - 1)
                    .map(|(b, _)| b)
                    .unwrap_or(0);
                let text = &content[offset..];
                let cycles = parse_cycles(text)
                    .map_err(|(at, m)| err(n, rest_column + text[..at].chars().count(), m))?;
                let p = Permutation::from_cycles(&cycles)
                    .map_err(|e| err(n, rest_column, e.to_string()))?;
                self.gamma.push((p, n, key.column));
            }
            "anisotropic" => {
                if self.anisotropic.is_some() {
                    return Err(err(n, key.column, "duplicate anisotropic clause"));
                }
                let mut seen = BTreeSet::new();
                let mut list = Vec::new();
                for t in args {
                    let v = parse_node(t.text).map_err(|m| err(n, t.column, m))?;
                    if !seen.insert(v) {
                        return Err(err(n, t.column, format!("node {v} listed twice")));
                    }
                    list.push(v);
                }
                self.anisotropic = Some((list, n, key.column));
            }
            other => {
                return Err(err(n, key.column, format!("unknown clause {other:?}")));
            }
        }
        if self.source.is_none() {
            return Err(err(n, key.column, "the first clause must be `diagram`"));
        }
        Ok(())
    }

    fn require_custom(&self, n: usize, column: usize, what: &str) -> Result<(), ParseError> {
        match self.source {
            Some(Source::Custom(_)) => Ok(()),
            Some(Source::Builtin(..)) => Err(err(
                n,
                column,
                format!("{what} is only allowed for custom diagrams"),
            )),
            None => Err(err(n, column, "the first clause must be `diagram`")),
        }
    }

    fn finish(&self, text: &str) -> Result<Payload, SpecError> {
        let last_line = text.split('\n').count().max(1);
        let diagram = match &self.source {
            None => {
                return Err(SpecError::Parse(err(
                    last_line,
                    1,
                    "missing diagram clause",
                )));
            }
            Some(Source::Builtin(name, column)) => {
                let line = self
                    .clauses
                    .iter()
                    .find(|c| c.keyword == "diagram")
                    .map(|c| c.line)
                    .unwrap_or(1);
                CoxeterDiagram::builtin(name)
                    .map_err(|e| SpecError::Parse(err(line, *column, e.to_string())))?
            }
            Some(Source::Custom(line)) => {
                let Some((nodes, nodes_line)) = &self.nodes else {
                    return Err(SpecError::Parse(err(
                        *line,
                        1,
                        "custom diagram without a nodes clause",
                    )));
                };
                for &(i, j, m, l, c) in &self.edges {
                    if i == j || m < 2 {
                        return Err(SpecError::Parse(err(
                            l,
                            c,
                            format!("invalid edge {i} {j} {m}"),
                        )));
                    }
                    if let Some(x) = [i, j].into_iter().find(|x| !nodes.contains(x)) {
                        return Err(SpecError::Parse(err(
                            l,
                            c,
                            format!("edge names unknown node {x}"),
                        )));
                    }
                }
                CoxeterDiagram::new(
                    nodes.iter().copied(),
                    self.edges.iter().map(|&(i, j, m, _, _)| (i, j, m)),
                )
                .map_err(|e| SpecError::Parse(err(*nodes_line, 1, e.to_string())))?
            }
        };

        if self.gamma.is_empty() && self.anisotropic.is_none() {
            return Ok(Payload::Diagram(diagram));
        }
        let gamma = AutGroup::new(self.gamma.iter().map(|(p, _, _)| p.clone()).collect());
        let kernel = self
            .anisotropic
            .as_ref()
            .map(|(k, _, _)| k.clone())
            .unwrap_or_default();
        let t = TitsDiagram::new(diagram, gamma, kernel).map_err(|e| {
            let (_, line, column) = self.anisotropic.as_ref().expect("kernel nodes were given");
            SpecError::Parse(err(*line, *column, e.to_string()))
        })?;
        let report = validate(&t);
        if !report.is_ok() {
            let gamma_fault = report
                .violations
                .iter()
                .any(|v| v.kind == ViolationKind::GammaNotAutomorphism);
            let (line, column) = match (&self.anisotropic, gamma_fault) {
                (Some((_, l, c)), false) => (*l, *c),
                _ => self
                    .gamma
                    .first()
                    .map(|(_, l, c)| (*l, *c))
                    .unwrap_or((1, 1)),
            };
            return Err(SpecError::Validation {
                line,
                column,
                violations: report.violations,
            });
        }
        Ok(Payload::Tits(t))
    }
}

impl fmt::Display for SpecDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_spec(&self.payload))
    }
}
