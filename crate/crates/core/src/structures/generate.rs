//! Seeded samplers for the six random models.
//!
//! Every potential element has a fixed counter: slot `j` (lexicographic
//! rank of its k-set) for undirected elements and `j * k! + r` for the
//! `r`-th orientation of slot `j`. The named streams below are shared with
//! the interpolation chains, so that the chain endpoints reproduce these
//! samplers bit for bit under the same seed.

use super::hyper::{check_params, factorial, orientations, slots};
use super::{ColoredDigraph, ColoredGraph, DirHypergraph, Hypergraph, Seed};
use crate::error::{check_probability, Result};

pub(crate) const SLOT: &str = "slot";
pub(crate) const ARC: &str = "arc";
pub(crate) const SLOT_COLOR: &str = "slot-color";
pub(crate) const ARC_COLOR: &str = "arc-color";

/// `H^(k)_{n,p}`: each k-subset of `0..n` independently with probability `p`.
pub fn gen_hyper(n: usize, k: usize, p: f64, seed: &Seed) -> Result<Hypergraph> {
    check_params(n, k)?;
    check_probability("p", p)?;
    let stream = seed.derive(SLOT).stream();
    let mut h = Hypergraph::new(n, k)?;
    for (j, e) in slots(n, k).enumerate() {
        if stream.bernoulli(j as u64, p) {
            h.insert_sorted_unchecked(e);
        }
    }
    Ok(h)
}

/// `D^(k)_{n,p}`: each ordered k-tuple of distinct vertices independently
/// with probability `p`.
pub fn gen_dir_hyper(n: usize, k: usize, p: f64, seed: &Seed) -> Result<DirHypergraph> {
    check_params(n, k)?;
    check_probability("p", p)?;
    let stream = seed.derive(ARC).stream();
    let perms = orientations(k);
    let kf = factorial(k);
    let mut d = DirHypergraph::new(n, k)?;
    for (j, e) in slots(n, k).enumerate() {
        for (r, perm) in perms.iter().enumerate() {
            if stream.bernoulli(j as u64 * kf + r as u64, p) {
                d.insert_unchecked(perm.iter().map(|&i| e[i]).collect());
            }
        }
    }
    Ok(d)
}

/// `G^c_{n,p}`: `G_{n,p}` with an independent uniform color per edge.
pub fn gen_colored_graph(n: usize, p: f64, c: usize, seed: &Seed) -> Result<ColoredGraph> {
    check_params(n, 2)?;
    check_probability("p", p)?;
    let mut g = ColoredGraph::new(n, c)?;
    let presence = seed.derive(SLOT).stream();
    let color = seed.derive(SLOT_COLOR).stream();
    for (j, e) in slots(n, 2).enumerate() {
        let j = j as u64;
        if presence.bernoulli(j, p) {
            g.insert_unchecked(e[0], e[1], color.below(j, c as u32));
        }
    }
    Ok(g)
}

/// `D^c_{n,p}`: both orientations of every pair decided and colored
/// independently.
pub fn gen_colored_digraph(n: usize, p: f64, c: usize, seed: &Seed) -> Result<ColoredDigraph> {
    check_params(n, 2)?;
    check_probability("p", p)?;
    let mut g = ColoredDigraph::new(n, c)?;
    let presence = seed.derive(ARC).stream();
    let color = seed.derive(ARC_COLOR).stream();
    for (j, e) in slots(n, 2).enumerate() {
        for (r, (u, v)) in [(e[0], e[1]), (e[1], e[0])].into_iter().enumerate() {
            let ctr = j as u64 * 2 + r as u64;
            if presence.bernoulli(ctr, p) {
                g.insert_unchecked(u, v, color.below(ctr, c as u32));
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_probabilities() {
        let s = Seed::new(11);
        assert!(gen_hyper(6, 3, 0.0, &s).unwrap().is_empty());
        assert_eq!(gen_hyper(6, 3, 1.0, &s).unwrap().len(), 20);
        assert_eq!(gen_dir_hyper(4, 2, 1.0, &s).unwrap().len(), 12);
        assert!(gen_dir_hyper(4, 2, 0.0, &s).unwrap().is_empty());
        let g = gen_colored_graph(5, 1.0, 1, &s).unwrap();
        assert_eq!(g.len(), 10);
        assert!(g.edges().all(|(_, c)| c == 0));
        assert!(gen_colored_graph(5, 0.0, 7, &s).unwrap().is_empty());
        assert_eq!(gen_colored_digraph(5, 1.0, 3, &s).unwrap().len(), 20);
    }

    #[test]
    fn parameter_errors() {
        let s = Seed::new(0);
        assert!(gen_hyper(6, 1, 0.5, &s).is_err());
        assert!(gen_hyper(2, 3, 0.5, &s).is_err());
        assert!(gen_hyper(6, 3, 1.5, &s).is_err());
        assert!(gen_dir_hyper(6, 3, -0.1, &s).is_err());
        assert!(gen_colored_graph(5, 0.5, 0, &s).is_err());
        assert!(gen_colored_digraph(5, 0.5, 0, &s).is_err());
    }

    #[test]
    fn deterministic_in_seed() {
        let a = gen_dir_hyper(7, 3, 0.3, &Seed::new(5)).unwrap();
        let b = gen_dir_hyper(7, 3, 0.3, &Seed::new(5)).unwrap();
        let c = gen_dir_hyper(7, 3, 0.3, &Seed::new(6)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(
            gen_colored_digraph(6, 0.4, 6, &Seed::new(2)).unwrap(),
            gen_colored_digraph(6, 0.4, 6, &Seed::new(2)).unwrap()
        );
    }

    #[test]
    fn monotone_in_p_under_a_fixed_seed() {
        let s = Seed::new(9);
        let lo = gen_hyper(8, 3, 0.2, &s).unwrap();
        let hi = gen_hyper(8, 3, 0.5, &s).unwrap();
        assert!(lo.edges().all(|e| hi.contains(e)));
    }

    #[test]
    fn colored_presence_matches_uncolored_model() {
        let s = Seed::new(4);
        let g = gen_colored_graph(7, 0.4, 5, &s).unwrap();
        let h = gen_hyper(7, 2, 0.4, &s).unwrap();
        assert_eq!(g.len(), h.len());
        assert!(g.edges().all(|((u, v), _)| h.contains(&[u, v])));
    }
}
