//! Graph input: graph6 lines, a JSON edge-list object, or a JSON array of
//! such objects.

use sqfpow_core::io::{parse_graph6, parse_graph_json};
use sqfpow_core::{Error, Graph};

use crate::CliError;

pub fn parse_graphs(text: &str) -> Result<Vec<Graph>, CliError> {
    let t = text.trim_start();
    if t.starts_with('[') {
        let items: Vec<serde_json::Value> = serde_json::from_str(t).map_err(|e| {
            CliError::Core(Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })
        })?;
        return items
            .iter()
            .map(|v| Ok(parse_graph_json(&v.to_string())?))
            .collect();
    }
    if t.starts_with('{') {
        return Ok(vec![parse_graph_json(t)?]);
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let l = line.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        out.push(parse_graph6(l, i + 1)?);
    }
    Ok(out)
}

/// One graph per command-line argument.
pub fn parse_args(args: &[String]) -> Result<Vec<Graph>, CliError> {
    let mut out = Vec::new();
    for a in args {
        let gs = parse_graphs(a)?;
        if gs.len() != 1 {
            return Err(CliError::Usage(format!(
                "argument {a:?} does not hold exactly one graph"
            )));
        }
        out.extend(gs);
    }
    Ok(out)
}
