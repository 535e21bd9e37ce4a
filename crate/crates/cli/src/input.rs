//! Loading ideals, graphs, and complexes from files or inline arguments.

use anyhow::{bail, Context, Result};
use monoreg::{parse_ideal_text, Exponent, MonomialIdeal, SimplicialComplex, WeightedOrientedGraph};

/// Reads the argument as a file when a file of that name exists, otherwise
/// treats it as inline content.
fn file_or_inline(arg: &str) -> Result<String> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))
    } else {
        Ok(arg.to_string())
    }
}

/// Ideal from the text grammar or the `{"n":…,"gens":…}` JSON form.
pub fn load_ideal(arg: &str, ambient: Option<usize>) -> Result<MonomialIdeal> {
    let content = file_or_inline(arg)?;
    let trimmed = content.trim();
    if trimmed.starts_with('{') {
        let ideal: MonomialIdeal =
            serde_json::from_str(trimmed).context("parsing ideal JSON")?;
        if let Some(n) = ambient {
            if ideal.n() != n {
                bail!("ideal has ambient {} but --n {} was given", ideal.n(), n);
            }
        }
        Ok(ideal)
    } else {
        Ok(parse_ideal_text(trimmed, ambient)?)
    }
}

/// Graph from the `{"n":…,"edges":…,"weights":…}` JSON form. With
/// `normalize_sources` a weighted source is rewritten to weight 1 and a
/// warning goes to stderr instead of rejecting the input.
pub fn load_graph(arg: &str, normalize_sources: bool) -> Result<WeightedOrientedGraph> {
    let content = file_or_inline(arg)?;
    let trimmed = content.trim();
    if !normalize_sources {
        return serde_json::from_str(trimmed).context("parsing graph JSON");
    }
    #[derive(serde::Deserialize)]
    struct Raw {
        n: usize,
        edges: Vec<(usize, usize)>,
        #[serde(default)]
        weights: std::collections::BTreeMap<usize, u32>,
    }
    let raw: Raw = serde_json::from_str(trimmed).context("parsing graph JSON")?;
    let (graph, rewritten) =
        WeightedOrientedGraph::new_normalizing_sources(raw.n, raw.edges, raw.weights)?;
    for j in rewritten {
        eprintln!("warning: source vertex {j} had a nontrivial weight; reset to 1");
    }
    Ok(graph)
}

/// Complex from the `{"n":…,"facets":…}` JSON form.
pub fn load_complex(arg: &str) -> Result<SimplicialComplex> {
    let content = file_or_inline(arg)?;
    serde_json::from_str(content.trim()).context("parsing complex JSON")
}

/// Comma-separated exponent vector such as `5,1,1`.
pub fn parse_exponent(arg: &str, n: usize) -> Result<Exponent> {
    let coords: Vec<u32> = arg
        .split(',')
        .map(|c| c.trim().parse::<u32>().context("parsing exponent entry"))
        .collect::<Result<_>>()?;
    if coords.len() != n {
        bail!("exponent has {} entries but the ideal lives in {} variables", coords.len(), n);
    }
    Ok(Exponent::new(coords))
}
