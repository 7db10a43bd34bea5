//! Brute-force reference oracles. They enumerate vertex permutations
//! directly and share no code with the library searches.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hamlab::structures::{ColoredDigraph, ColoredGraph, DirHypergraph, Hypergraph, VertexId};
use itertools::Itertools;

fn blocks(perm: &[VertexId], k: usize) -> Vec<Vec<VertexId>> {
    let n = perm.len();
    (0..n / (k - 1))
        .map(|j| (0..k).map(|t| perm[(j * (k - 1) + t) % n]).collect())
        .collect()
}

fn loose_shape_possible(n: usize, k: usize) -> bool {
    k >= 2 && n.is_multiple_of(k - 1) && n / (k - 1) >= 3
}

/// Edge sets of all loose Hamilton cycles of `h`.
pub fn loose_cycles(h: &Hypergraph) -> BTreeSet<BTreeSet<Vec<VertexId>>> {
    let (n, k) = (h.n(), h.k());
    let mut out = BTreeSet::new();
    if !loose_shape_possible(n, k) {
        return out;
    }
    for perm in (0..n as VertexId).permutations(n) {
        let edges: BTreeSet<Vec<VertexId>> = blocks(&perm, k)
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e
            })
            .collect();
        if edges.iter().all(|e| h.contains(e)) {
            out.insert(edges);
        }
    }
    out
}

pub fn has_loose(h: &Hypergraph) -> bool {
    !loose_cycles(h).is_empty()
}

/// Whether `d` has a directed loose Hamilton cycle, optionally with
/// `link` among its links (first vertices of arcs).
pub fn has_dir_loose(d: &DirHypergraph, link: Option<VertexId>) -> bool {
    let (n, k) = (d.n(), d.k());
    if !loose_shape_possible(n, k) {
        return false;
    }
    (0..n as VertexId).permutations(n).any(|perm| {
        let arcs = blocks(&perm, k);
        arcs.iter().all(|a| d.contains(a)) && link.is_none_or(|l| arcs.iter().any(|a| a[0] == l))
    })
}

/// Whether the colored graph has a Hamilton cycle with distinct colors.
pub fn has_rainbow(g: &ColoredGraph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    (1..n as VertexId).permutations(n - 1).any(|rest| {
        let cyc: Vec<VertexId> = std::iter::once(0).chain(rest).collect();
        let mut colors = BTreeSet::new();
        (0..n).all(|i| match g.color(cyc[i], cyc[(i + 1) % n]) {
            Some(c) => colors.insert(c),
            None => false,
        })
    })
}

/// Whether the colored digraph has a directed Hamilton cycle with distinct
/// colors.
pub fn has_rainbow_dir(g: &ColoredDigraph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    (1..n as VertexId).permutations(n - 1).any(|rest| {
        let cyc: Vec<VertexId> = std::iter::once(0).chain(rest).collect();
        let mut colors = BTreeSet::new();
        (0..n).all(|i| match g.color(cyc[i], cyc[(i + 1) % n]) {
            Some(c) => colors.insert(c),
            None => false,
        })
    })
}

/// Whether a digraph given by its arc mask over the ordered pairs of
/// `0..n` (row-major, diagonal skipped) has a directed Hamilton cycle.
pub fn digraph_mask_has_hc(n: usize, mask: u64) -> bool {
    let idx = |u: usize, v: usize| u * (n - 1) + if v > u { v - 1 } else { v };
    (1..n).permutations(n - 1).any(|rest| {
        let cyc: Vec<usize> = std::iter::once(0).chain(rest).collect();
        (0..n).all(|i| mask >> idx(cyc[i], cyc[(i + 1) % n]) & 1 == 1)
    })
}

/// `|successes/trials − θ|` measured in standard deviations of the
/// binomial proportion.
pub fn sigmas(successes: u64, trials: u64, theta: f64) -> f64 {
    let phat = successes as f64 / trials as f64;
    let sd = (theta * (1.0 - theta) / trials as f64).sqrt();
    (phat - theta).abs() / sd
}
