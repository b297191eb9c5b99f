//! DOT rendering of a chain enumeration as a tree: each chain hangs off the
//! chain with its last transposition removed, nodes are labeled with the
//! signed basis element (cut bars rendered in the permutation word), edges
//! with the added transposition, and ranks follow chain length. Node order
//! is breadth first by subword length, then lexicographic, so output is
//! reproducible.

use std::collections::BTreeMap;
use std::fmt::Write;

use itertools::Itertools;

use crate::perm::{Permutation, Transposition};
use crate::pieri::ChainResult;

/// Permutation text with `'|'` inserted after each bar position.
pub fn barred(p: &Permutation, bars: &[usize]) -> String {
    let mut out = String::new();
    for (idx, &v) in p.word().iter().enumerate() {
        if idx > 0 {
            if bars.contains(&idx) {
                out.push('|');
            } else if p.n() > 9 {
                out.push(',');
            }
        }
        let _ = write!(out, "{v}");
    }
    out
}

/// Renders the chain tree of an enumeration. `word` must be the transposition
/// list the chains were generated over, `bars` the cut positions to mark in
/// node labels.
pub fn chain_tree_dot(
    base: &Permutation,
    bars: &[usize],
    word: &[Transposition],
    results: &[ChainResult],
) -> String {
    let mut chains: Vec<&ChainResult> = results.iter().collect();
    chains.sort_by(|x, y| {
        x.subword
            .len()
            .cmp(&y.subword.len())
            .then(x.subword.cmp(&y.subword))
    });
    let by_subword: BTreeMap<&[usize], &ChainResult> =
        chains.iter().map(|r| (r.subword.as_slice(), *r)).collect();

    let mut out = String::new();
    out.push_str("digraph chain_tree {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=box];\n");
    for r in &chains {
        let sign = if r.sign < 0 { '-' } else { '+' };
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{}K_{}\"];",
            r.endpoint,
            sign,
            barred(&r.endpoint, bars)
        );
    }
    for (len, group) in &chains.iter().chunk_by(|r| r.subword.len()) {
        let ids = group.map(|r| format!("\"{}\"", r.endpoint)).join("; ");
        if len > 0 {
            let _ = writeln!(out, "  {{ rank=same; {ids}; }}");
        }
    }
    for r in &chains {
        if let Some((&last, parent_sub)) = r.subword.split_last() {
            let parent = by_subword
                .get(parent_sub)
                .map(|p| &p.endpoint)
                .unwrap_or(base);
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                parent, r.endpoint, word[last]
            );
        }
    }
    out.push_str("}\n");
    out
}
