//! Witness verifiers. They never error: a malformed witness is simply not
//! a certificate.

use super::colored::ColoredHost;
use super::{DirHypergraph, DirLooseCycle, Hypergraph, LooseCycle, RainbowCycle};

/// Checks the loose-cycle shape on `n` vertices with uniformity `k`
/// without looking at any host structure.
pub fn is_loose_cycle(n: usize, k: usize, w: &LooseCycle) -> bool {
    let m = w.edge_seq.len();
    if m < 3 || k < 2 || m * (k - 1) != n {
        return false;
    }
    let mut seen = vec![false; n];
    for e in &w.edge_seq {
        if e.len() != k || e.iter().any(|&v| v as usize >= n) {
            return false;
        }
        for (i, a) in e.iter().enumerate() {
            if e[..i].contains(a) {
                return false;
            }
        }
        for &v in e {
            seen[v as usize] = true;
        }
    }
    if !seen.iter().all(|&s| s) {
        return false;
    }
    for i in 0..m {
        for j in i + 1..m {
            let shared = w.edge_seq[i]
                .iter()
                .filter(|v| w.edge_seq[j].contains(v))
                .count();
            let consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if shared != if consecutive { 1 } else { 0 } {
                return false;
            }
        }
    }
    true
}

/// True iff `w` is a loose Hamilton cycle all of whose edges lie in `h`.
pub fn verify_loose_hc(h: &Hypergraph, w: &LooseCycle) -> bool {
    h.k() >= 2 && is_loose_cycle(h.n(), h.k(), w) && w.edge_seq.iter().all(|e| h.contains(e))
}

pub fn is_dir_loose_cycle(n: usize, k: usize, w: &DirLooseCycle) -> bool {
    let m = w.arc_seq.len();
    if m < 3 || k < 2 || m * (k - 1) != n {
        return false;
    }
    if w.arc_seq.iter().any(|a| a.len() != k) {
        return false;
    }
    let mut seen = vec![false; n];
    for i in 0..m {
        let a = &w.arc_seq[i];
        let next = &w.arc_seq[(i + 1) % m];
        if a[k - 1] != next[0] {
            return false;
        }
        // Positions 1..k of every arc, taken over the whole cycle, hit each
        // vertex exactly once.
        for &v in &a[1..] {
            if v as usize >= n || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
    }
    true
}

pub fn verify_dir_loose_hc(d: &DirHypergraph, w: &DirLooseCycle) -> bool {
    is_dir_loose_cycle(d.n(), d.k(), w) && w.arc_seq.iter().all(|a| d.contains(a))
}

/// True iff `w` is a Hamilton cycle of `g` (directed if `g` is) whose
/// colors are pairwise distinct.
pub fn verify_rainbow_hc<G: ColoredHost + ?Sized>(g: &G, w: &RainbowCycle) -> bool {
    let n = g.vertex_count();
    if n < 3 || w.vertex_seq.len() != n || w.color_seq.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &w.vertex_seq {
        if v as usize >= n || seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    let c = g.palette();
    let mut used = vec![false; c];
    for &col in &w.color_seq {
        if col as usize >= c || used[col as usize] {
            return false;
        }
        used[col as usize] = true;
    }
    w.steps().all(|(u, v, col)| g.carries(u, v, col))
}
