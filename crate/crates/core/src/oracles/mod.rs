//! Exact, complete searches for every cycle notion in the crate.
//!
//! All searches are backtracking over vertex bitmasks with memoized dead
//! states: a state `(start link, used vertices, current end)` that failed
//! once fails forever, whatever path led to it. Branching is deterministic
//! and lexicographic; no heuristic shortcuts are taken, so "none" always
//! means no cycle exists.

mod directed;
mod loose;
mod rainbow;

use crate::error::{Error, Result};
use crate::structures::{
    ColoredDigraph, ColoredGraph, DirHypergraph, DirLooseCycle, Hypergraph, LooseCycle,
    RainbowCycle, VertexId,
};

/// Size guards for the searches. Masks are 64-bit, so no limit may exceed 64.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    /// Largest `n` for loose and directed loose searches.
    pub max_loose_n: usize,
    /// Largest `n` for counting loose cycles.
    pub max_count_n: usize,
    /// Largest `n` for rainbow searches.
    pub max_rainbow_n: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_loose_n: 24,
            max_count_n: 12,
            max_rainbow_n: 14,
        }
    }
}

fn guard(what: &'static str, got: usize, limit: usize) -> Result<()> {
    let limit = limit.min(64);
    if got > limit {
        Err(Error::Capacity { what, got, limit })
    } else {
        Ok(())
    }
}

/// Number of edges of a loose Hamilton cycle, or `None` when no loose
/// Hamilton cycle can exist for this `(n, k)`.
pub fn loose_cycle_length(n: usize, k: usize) -> Option<usize> {
    if k < 2 || !n.is_multiple_of(k - 1) {
        return None;
    }
    let m = n / (k - 1);
    (m >= 3).then_some(m)
}

impl Oracle {
    pub fn find_loose_hc(&self, h: &Hypergraph) -> Result<Option<LooseCycle>> {
        if loose_cycle_length(h.n(), h.k()).is_none() {
            return Ok(None);
        }
        guard("n for loose search", h.n(), self.max_loose_n)?;
        Ok(loose::LooseSearch::new(h).find())
    }

    /// With `required_link`, only cycles in which that vertex is the last
    /// vertex of one arc and the first of the next are accepted.
    pub fn find_dir_loose_hc(
        &self,
        d: &DirHypergraph,
        required_link: Option<VertexId>,
    ) -> Result<Option<DirLooseCycle>> {
        if let Some(r) = required_link {
            if r as usize >= d.n() {
                return Err(Error::Parameter(format!(
                    "required link {r} out of range for n = {}",
                    d.n()
                )));
            }
        }
        if loose_cycle_length(d.n(), d.k()).is_none() {
            return Ok(None);
        }
        guard("n for directed loose search", d.n(), self.max_loose_n)?;
        Ok(directed::DirSearch::new(d).find(required_link))
    }

    pub fn count_loose_hc(&self, h: &Hypergraph) -> Result<u128> {
        if loose_cycle_length(h.n(), h.k()).is_none() {
            return Ok(0);
        }
        guard("n for loose counting", h.n(), self.max_count_n)?;
        Ok(loose::LooseSearch::new(h).count())
    }

    pub fn find_rainbow_hc(&self, g: &ColoredGraph) -> Result<Option<RainbowCycle>> {
        let n = g.n();
        if n < 3 || g.c() < n {
            return Ok(None);
        }
        guard("n for rainbow search", n, self.max_rainbow_n)?;
        let steps = g.edges().flat_map(|((u, v), c)| [(u, v, c), (v, u, c)]);
        rainbow::RainbowSearch::new(n, steps)?.find()
    }

    pub fn find_rainbow_dir_hc(&self, g: &ColoredDigraph) -> Result<Option<RainbowCycle>> {
        let n = g.n();
        if n < 3 || g.c() < n {
            return Ok(None);
        }
        guard("n for rainbow search", n, self.max_rainbow_n)?;
        let steps = g.arcs().map(|((u, v), c)| (u, v, c));
        rainbow::RainbowSearch::new(n, steps)?.find()
    }
}

pub fn find_loose_hc(h: &Hypergraph) -> Result<Option<LooseCycle>> {
    Oracle::default().find_loose_hc(h)
}

pub fn find_dir_loose_hc(
    d: &DirHypergraph,
    required_link: Option<VertexId>,
) -> Result<Option<DirLooseCycle>> {
    Oracle::default().find_dir_loose_hc(d, required_link)
}

pub fn count_loose_hc(h: &Hypergraph) -> Result<u128> {
    Oracle::default().count_loose_hc(h)
}

pub fn find_rainbow_hc(g: &ColoredGraph) -> Result<Option<RainbowCycle>> {
    Oracle::default().find_rainbow_hc(g)
}

pub fn find_rainbow_dir_hc(g: &ColoredDigraph) -> Result<Option<RainbowCycle>> {
    Oracle::default().find_rainbow_dir_hc(g)
}

#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros();
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn mask_of(vs: &[VertexId]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{
        gen_colored_digraph, gen_colored_graph, gen_dir_hyper, gen_hyper, verify_dir_loose_hc,
        verify_loose_hc, verify_rainbow_hc, Seed,
    };

    #[test]
    fn cycle_length_rule() {
        assert_eq!(loose_cycle_length(6, 3), Some(3));
        assert_eq!(loose_cycle_length(7, 3), None);
        assert_eq!(loose_cycle_length(4, 3), None);
        assert_eq!(loose_cycle_length(3, 2), Some(3));
        assert_eq!(loose_cycle_length(9, 4), Some(3));
    }

    #[test]
    fn complete_k3_on_six() {
        let h = Hypergraph::complete(6, 3).unwrap();
        let w = find_loose_hc(&h).unwrap().unwrap();
        assert!(verify_loose_hc(&h, &w));
        assert_eq!(count_loose_hc(&h).unwrap(), 120);
    }

    #[test]
    fn divisibility_short_circuits() {
        let h = Hypergraph::complete(7, 3).unwrap();
        assert_eq!(find_loose_hc(&h).unwrap(), None);
        assert_eq!(count_loose_hc(&h).unwrap(), 0);
        // Even past the size guard: no search happens.
        let big = Hypergraph::new(31, 3).unwrap();
        assert_eq!(find_loose_hc(&big).unwrap(), None);
    }

    #[test]
    fn capacity_guard() {
        let h = Hypergraph::new(26, 3).unwrap();
        assert!(matches!(find_loose_hc(&h), Err(Error::Capacity { .. })));
        assert!(matches!(
            count_loose_hc(&Hypergraph::new(14, 3).unwrap()),
            Err(Error::Capacity { .. })
        ));
        let roomy = Oracle {
            max_loose_n: 26,
            ..Oracle::default()
        };
        assert_eq!(roomy.find_loose_hc(&h).unwrap(), None);
        let g = ColoredGraph::new(15, 15).unwrap();
        assert!(matches!(find_rainbow_hc(&g), Err(Error::Capacity { .. })));
    }

    #[test]
    fn exact_triangle_of_triples() {
        let edges = [[0, 1, 2], [2, 3, 4], [4, 5, 0]];
        let h = Hypergraph::from_edges(6, 3, edges).unwrap();
        assert!(find_loose_hc(&h).unwrap().is_some());
        assert_eq!(count_loose_hc(&h).unwrap(), 1);
        for e in edges {
            let mut h2 = h.clone();
            h2.remove(&e);
            assert_eq!(find_loose_hc(&h2).unwrap(), None);
            assert_eq!(count_loose_hc(&h2).unwrap(), 0);
        }
    }

    #[test]
    fn k4_has_three_hamilton_cycles() {
        assert_eq!(
            count_loose_hc(&Hypergraph::complete(4, 2).unwrap()).unwrap(),
            3
        );
        assert_eq!(
            count_loose_hc(&Hypergraph::complete(5, 2).unwrap()).unwrap(),
            12
        );
    }

    #[test]
    fn directed_examples() {
        let full = DirHypergraph::complete(6, 3).unwrap();
        let w = find_dir_loose_hc(&full, None).unwrap().unwrap();
        assert!(verify_dir_loose_hc(&full, &w));

        let d = DirHypergraph::from_arcs(6, 3, [[0, 1, 2], [2, 3, 4], [4, 5, 0]]).unwrap();
        let w = find_dir_loose_hc(&d, Some(2)).unwrap().unwrap();
        assert!(w.is_link(2));
        assert_eq!(find_dir_loose_hc(&d, Some(1)).unwrap(), None);
        assert!(find_dir_loose_hc(&d, Some(6)).is_err());

        let mut no_out_of_zero = DirHypergraph::complete(6, 3).unwrap();
        let drop: Vec<Vec<VertexId>> = no_out_of_zero
            .arcs()
            .filter(|a| a[0] == 0)
            .map(<[VertexId]>::to_vec)
            .collect();
        for a in &drop {
            no_out_of_zero.remove(a);
        }
        // Zero can still close the cycle as the last vertex of an arc, but a
        // link is also the first vertex of the following arc.
        assert_eq!(find_dir_loose_hc(&no_out_of_zero, Some(0)).unwrap(), None);
        let w = find_dir_loose_hc(&no_out_of_zero, None).unwrap().unwrap();
        assert!(!w.is_link(0));
    }

    #[test]
    fn rainbow_examples() {
        let mut g = ColoredGraph::new(3, 3).unwrap();
        g.insert(0, 1, 0).unwrap();
        g.insert(1, 2, 1).unwrap();
        g.insert(0, 2, 2).unwrap();
        assert!(find_rainbow_hc(&g).unwrap().is_some());

        let mut short = ColoredGraph::new(3, 2).unwrap();
        short.insert(0, 1, 0).unwrap();
        short.insert(1, 2, 1).unwrap();
        short.insert(0, 2, 1).unwrap();
        assert_eq!(find_rainbow_hc(&short).unwrap(), None);

        // K5, everything color 0 except the cycle 0-2-4-1-3 colored 0..4.
        let cycle = [0u32, 2, 4, 1, 3];
        let mut k5 = ColoredGraph::new(5, 5).unwrap();
        for u in 0..5 {
            for v in u + 1..5 {
                k5.insert(u, v, 0).unwrap();
            }
        }
        for i in 0..5 {
            k5.set_color(cycle[i], cycle[(i + 1) % 5], i as u32)
                .unwrap();
        }
        let w = find_rainbow_hc(&k5).unwrap().unwrap();
        assert!(verify_rainbow_hc(&k5, &w));
        let mut expected =
            crate::structures::RainbowCycle::new(cycle.to_vec(), vec![0, 1, 2, 3, 4]);
        expected = expected.canonical(true);
        assert_eq!(w.canonical(true), expected);
    }

    #[test]
    fn found_witnesses_verify() {
        for t in 0..60u64 {
            let s = Seed::new(t);
            let h = gen_hyper(9, 4, 0.08, &s).unwrap();
            if let Some(w) = find_loose_hc(&h).unwrap() {
                assert!(verify_loose_hc(&h, &w));
            }
            let d = gen_dir_hyper(8, 3, 0.1, &s).unwrap();
            if let Some(w) = find_dir_loose_hc(&d, Some(3)).unwrap() {
                assert!(verify_dir_loose_hc(&d, &w) && w.is_link(3));
            }
            let g = gen_colored_graph(7, 0.8, 7, &s).unwrap();
            if let Some(w) = find_rainbow_hc(&g).unwrap() {
                assert!(verify_rainbow_hc(&g, &w));
            }
            let cd = gen_colored_digraph(6, 0.8, 6, &s).unwrap();
            if let Some(w) = find_rainbow_dir_hc(&cd).unwrap() {
                assert!(verify_rainbow_hc(&cd, &w));
            }
        }
    }
}
