//! Text formats for hypergraphs and Horn CNFs.
//!
//! Hypergraph files: one edge per line, variable names separated by
//! whitespace, `{}` for the empty edge. CNF files: one clause per line as
//! `b1 b2 ... -> h`, with an empty body written `-> h`. In both formats
//! lines starting with `#` are comments, and an optional first content line
//! `vars: a b c` fixes the ground set; otherwise the ground set is the
//! variables in order of first mention. Printing always emits the `vars:`
//! header so round-trips preserve the ground set exactly.

use std::fmt::Write as _;

use thiserror::Error;

use crate::ground::{GroundError, GroundSet, VarSet};
use crate::horn::{DefiniteClause, HornCnf, HornError};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Ground(#[from] GroundError),
    #[error(transparent)]
    Horn(#[from] HornError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

struct Lines<'a> {
    /// (1-based line number, significant content)
    items: Vec<(usize, &'a str)>,
    header: Option<Vec<&'a str>>,
}

fn scan(input: &str) -> Lines<'_> {
    let mut items = Vec::new();
    let mut header = None;
    for (i, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if items.is_empty() && header.is_none() {
            if let Some(rest) = line.strip_prefix("vars:") {
                header = Some(rest.split_whitespace().collect());
                continue;
            }
        }
        items.push((i + 1, line));
    }
    Lines { items, header }
}

fn ground_from<'a>(
    header: Option<Vec<&'a str>>,
    mentions: impl Iterator<Item = &'a str>,
) -> Result<GroundSet, ParseError> {
    match header {
        Some(names) => Ok(GroundSet::new(names)?),
        None => {
            let mut names: Vec<&str> = Vec::new();
            for name in mentions {
                if !names.contains(&name) {
                    names.push(name);
                }
            }
            Ok(GroundSet::new(names)?)
        }
    }
}

pub fn parse_hypergraph(input: &str) -> Result<Hypergraph, ParseError> {
    let Lines { items, header } = scan(input);
    let mentions = items
        .iter()
        .flat_map(|(_, line)| line.split_whitespace())
        .filter(|tok| *tok != "{}");
    let ground = ground_from(header, mentions)?;
    let mut edges = Vec::new();
    for (line_no, line) in &items {
        if line.starts_with("vars:") {
            return Err(syntax(*line_no, "`vars:` header must be the first content line"));
        }
        if *line == "{}" {
            edges.push(VarSet::empty());
            continue;
        }
        let mut edge = VarSet::empty();
        for tok in line.split_whitespace() {
            if tok == "{}" {
                return Err(syntax(*line_no, "`{}` cannot be mixed with variables"));
            }
            match ground.index_of(tok) {
                Some(v) => edge = edge.with(v),
                None => return Err(syntax(*line_no, format!("unknown variable `{tok}`"))),
            }
        }
        edges.push(edge);
    }
    Ok(Hypergraph::new(ground, edges).expect("parsed edges lie within the ground set"))
}

pub fn print_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    write_vars_header(&mut out, h.ground());
    for edge in h.edges() {
        if edge.is_empty() {
            out.push_str("{}\n");
        } else {
            let _ = writeln!(out, "{}", h.ground().format_set(*edge));
        }
    }
    out
}

pub fn parse_cnf(input: &str) -> Result<HornCnf, ParseError> {
    let Lines { items, header } = scan(input);
    let mentions = items
        .iter()
        .flat_map(|(_, line)| line.split_whitespace())
        .filter(|tok| *tok != "->");
    let ground = ground_from(header, mentions)?;
    let mut clauses = Vec::new();
    for (line_no, line) in &items {
        if line.starts_with("vars:") {
            return Err(syntax(*line_no, "`vars:` header must be the first content line"));
        }
        let (body_part, head_part) = line
            .split_once("->")
            .ok_or_else(|| syntax(*line_no, "clause must contain `->`"))?;
        let mut body = VarSet::empty();
        for tok in body_part.split_whitespace() {
            match ground.index_of(tok) {
                Some(v) => body = body.with(v),
                None => return Err(syntax(*line_no, format!("unknown variable `{tok}`"))),
            }
        }
        let mut heads = head_part.split_whitespace();
        let head_tok = heads
            .next()
            .ok_or_else(|| syntax(*line_no, "clause is missing a head variable"))?;
        if heads.next().is_some() {
            return Err(syntax(*line_no, "clause must have exactly one head"));
        }
        let head = ground
            .index_of(head_tok)
            .ok_or_else(|| syntax(*line_no, format!("unknown variable `{head_tok}`")))?;
        let clause = DefiniteClause::new(body, head)
            .map_err(|_| syntax(*line_no, "head variable occurs in the body"))?;
        clauses.push(clause);
    }
    Ok(HornCnf::new(ground, clauses)?)
}

pub fn print_cnf(cnf: &HornCnf) -> String {
    let mut out = String::new();
    write_vars_header(&mut out, cnf.ground());
    for clause in cnf.clauses() {
        let body = cnf.ground().format_set(clause.body());
        let head = cnf.ground().name(clause.head());
        if body.is_empty() {
            let _ = writeln!(out, "-> {head}");
        } else {
            let _ = writeln!(out, "{body} -> {head}");
        }
    }
    out
}

fn write_vars_header(out: &mut String, ground: &GroundSet) {
    out.push_str("vars:");
    for name in ground.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
}
