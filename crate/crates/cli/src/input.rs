//! Reading input files (or stdin for `-`) and telling their formats apart.

use std::io::Read;

use hgstate::{Hypergraph, StateVector, TruthTable};

use crate::Failure;

pub enum Input {
    Graph(Hypergraph),
    Table(TruthTable),
    State(StateVector),
}

fn read_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))
    }
}

fn with_path<T>(path: &str, r: hgstate::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::usage(format!("{path}: {e}")))
}

/// Graph files have only `e` lines after the header, tables a hex line,
/// state dumps a `backend` header.
pub fn detect(text: &str) -> &'static str {
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    match lines.next() {
        Some(h) if h.contains("backend") => "state",
        _ => match lines.next() {
            None => "graph",
            Some(l) if l.strip_prefix('e').is_some_and(|r| r.starts_with(char::is_whitespace)) => "graph",
            Some(_) => "table",
        },
    }
}

pub fn read_any(path: &str) -> Result<Input, Failure> {
    let text = read_text(path)?;
    match detect(&text) {
        "state" => Ok(Input::State(with_path(path, StateVector::parse_dump(&text))?)),
        "graph" => Ok(Input::Graph(with_path(path, Hypergraph::parse(&text))?)),
        _ => Ok(Input::Table(with_path(path, TruthTable::parse_text(&text))?)),
    }
}

pub fn read_graph(path: &str) -> Result<Hypergraph, Failure> {
    with_path(path, Hypergraph::parse(&read_text(path)?))
}

pub fn read_table(path: &str) -> Result<TruthTable, Failure> {
    with_path(path, TruthTable::parse_text(&read_text(path)?))
}
