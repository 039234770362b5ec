use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use hypodom::canon::canonical_form;
use hypodom::domination::{analyze, BondageMode, ReportOptions};
use hypodom::eds::has_eds;
use hypodom::hypo::{is_hypo_ed, is_hypo_ud};
use hypodom::io::write_graph6;
use hypodom::{Graph, VertexSet};

use crate::input::records;
use crate::{Failure, Format, Outcome};

#[derive(Serialize)]
pub struct AnalysisRecord {
    pub input_id: usize,
    /// Canonical graph6; the input labelling is kept above order 64.
    pub g6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_delta: usize,
    pub gamma: usize,
    pub gamma_set_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_sets: Option<Vec<VertexSet>>,
    pub has_eds: bool,
    pub classes: Vec<&'static str>,
    pub bondage: Option<usize>,
}

#[derive(Serialize)]
struct ErrorRecord {
    error: &'static str,
    line: usize,
}

pub fn parse_bondage_cap(s: &str) -> Result<BondageMode, Failure> {
    match s {
        "auto" => Ok(BondageMode::MinDegreePlusTwo),
        "none" => Ok(BondageMode::Skip),
        "unbounded" => Ok(BondageMode::Unbounded),
        k => k
            .parse()
            .map(BondageMode::Cap)
            .map_err(|_| Failure::Usage(format!("invalid --bondage-cap `{k}`"))),
    }
}

pub fn record(input_id: usize, g: &Graph, options: &ReportOptions) -> AnalysisRecord {
    let report = analyze(g, options);
    let ed = has_eds(g);
    let mut classes = Vec::new();
    if ed {
        classes.push("ED");
    }
    if report.unique {
        classes.push("UD");
    }
    if !ed && is_hypo_ed(g) {
        classes.push("hypo-ED");
    }
    if !report.unique && is_hypo_ud(g) {
        classes.push("hypo-UD");
    }
    if report.is_vc {
        classes.push("vc");
    }
    let g6 = match canonical_form(g) {
        Ok(c) => write_graph6(&c),
        Err(_) => write_graph6(g),
    };
    AnalysisRecord {
        input_id,
        g6,
        n: g.order(),
        m: g.size(),
        delta: g.min_degree(),
        max_delta: g.max_degree(),
        gamma: report.gamma,
        gamma_set_count: report.gamma_set_count,
        gamma_sets: report.gamma_sets,
        has_eds: ed,
        classes,
        bondage: report.bondage,
    }
}

pub fn run(
    text: &str,
    format: Format,
    cap_gamma_sets: usize,
    bondage: BondageMode,
    out: &mut impl Write,
) -> Outcome {
    let options = ReportOptions {
        gamma_set_cap: cap_gamma_sets,
        bondage,
    };
    let items = records(text, format)?;
    let lines: Vec<Result<String, serde_json::Error>> = items
        .par_iter()
        .map(|(id, g)| match g {
            Ok(g) => serde_json::to_string(&record(*id, g, &options)),
            Err(_) => serde_json::to_string(&ErrorRecord {
                error: "malformed graph6",
                line: *id,
            }),
        })
        .collect();
    for line in lines {
        writeln!(out, "{}", line?)?;
    }
    if items.iter().any(|(_, g)| g.is_err()) {
        return Err(Failure::Usage("input contained malformed lines".into()));
    }
    Ok(())
}
