use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context};
use rainbow_roman::catalog::Sample;
use rainbow_roman::reduction::{parse_dimacs, CnfFormula};
use rainbow_roman::{make_named, parse_edge_list, Graph};

fn read_text(source: &str) -> anyhow::Result<String> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading standard input")?;
        return Ok(text);
    }
    std::fs::read_to_string(source).with_context(|| format!("reading {source}"))
}

/// Loads an edge-list file, standard input (`-`) or `named:NAME:P1,P2`.
pub fn load_graph(source: &str) -> anyhow::Result<Graph> {
    if let Some(rest) = source.strip_prefix("named:") {
        let (name, params) = rest.split_once(':').unwrap_or((rest, ""));
        let params = params
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>().with_context(|| format!("bad parameter `{p}`")))
            .collect::<anyhow::Result<Vec<_>>>()?;
        return Ok(make_named(name, &params)?);
    }
    let text = read_text(source)?;
    parse_edge_list(&text).with_context(|| format!("parsing {source}"))
}

pub fn load_cnf(path: &Path) -> anyhow::Result<CnfFormula> {
    let text = read_text(&path.to_string_lossy())?;
    parse_dimacs(&text).with_context(|| format!("parsing {}", path.display()))
}

/// `ORDER,COUNT,SEED`.
pub fn parse_sample(text: &str) -> anyhow::Result<Sample> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [order, count, seed] = parts.as_slice() else {
        bail!("expected ORDER,COUNT,SEED, got `{text}`");
    };
    Ok(Sample { order: order.parse()?, count: count.parse()?, seed: seed.parse()? })
}
