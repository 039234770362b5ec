use std::io::Read;
use std::path::Path;

use hypodom::io::{parse_edge_lists, parse_graph6};
use hypodom::Graph;

use crate::{Failure, Format};

pub fn read(path: Option<&Path>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

/// One entry per graph: its 1-based line number (graph6) or position (edge
/// list) and the parsed graph.
pub fn records(text: &str, format: Format) -> Result<Vec<(usize, Result<Graph, String>)>, Failure> {
    match format {
        Format::G6 => Ok(text
            .lines()
            .enumerate()
            .filter(|(_, line)| !line.trim().is_empty())
            .map(|(i, line)| (i + 1, parse_graph6(line).map_err(|e| e.to_string())))
            .collect()),
        Format::Edgelist => Ok(parse_edge_lists(text)?
            .into_iter()
            .enumerate()
            .map(|(i, g)| (i + 1, Ok(g)))
            .collect()),
    }
}

/// Every graph in the input; any malformed entry is an error.
pub fn parse_all(text: &str, format: Format) -> Result<Vec<Graph>, Failure> {
    records(text, format)?
        .into_iter()
        .map(|(line, g)| g.map_err(|e| Failure::Usage(format!("line {line}: {e}"))))
        .collect()
}
