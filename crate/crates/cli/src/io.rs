use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use tourney_core::source::UndirectedGraph;
use tourney_core::tournament::{parse_label_list, parse_vertex_set};
use tourney_core::{EdgePartition, Permutation, Tournament, VertexSet};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn read_tournament(path: &Path) -> Result<Tournament> {
    Tournament::parse_text(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_partition(path: &Path) -> Result<EdgePartition> {
    EdgePartition::parse_text(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_graph(path: &Path) -> Result<UndirectedGraph> {
    UndirectedGraph::parse_text(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// `""` is the empty set.
pub fn vertex_set(s: &str) -> Result<VertexSet> {
    Ok(parse_vertex_set(s)?)
}

pub fn permutation(s: &str) -> Result<Permutation> {
    Ok(Permutation::new(parse_label_list(s)?)?)
}

/// Comma-separated non-negative integers.
pub fn integers(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().with_context(|| format!("bad integer {x:?}")))
        .collect()
}
