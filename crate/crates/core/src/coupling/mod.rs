//! Interpolation chains between the undirected and directed models.
//!
//! `Γ_i` is sampled over the lexicographic slot order `e_1, …, e_N` of
//! k-subsets. Slots `e_1..=e_i` are *split*: each of their k! orientations
//! is an independent trial. The remaining slots are *unsplit*: one trial
//! decides all orientations together. `Γ_0` is the undirected model with
//! every orientation attached and `Γ_N` is the directed model; under a
//! common seed both endpoints coincide with the plain generators.

mod exact;
mod step;

pub use exact::{
    exact_event_counts, exact_event_probability, ChainEvent, ExactCounts, MAX_EXACT_VARIABLES,
};
pub use step::{analyze_step, StepAnalysis, StepCase};

use serde::{Deserialize, Serialize};

use crate::error::{check_probability, Error, Result};
use crate::structures::{
    binomial, check_params, factorial, orientations, slots, ColoredDigraph, DirHypergraph, Seed,
    Stream, VertexId, ARC, ARC_COLOR, SLOT, SLOT_COLOR,
};

/// A sample of `Γ_i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainPoint {
    #[serde(flatten)]
    pub structure: DirHypergraph,
    pub i: usize,
    pub p: f64,
}

impl ChainPoint {
    pub fn n(&self) -> usize {
        self.structure.n()
    }

    pub fn k(&self) -> usize {
        self.structure.k()
    }

    /// `N = C(n, k)`, the last chain index.
    pub fn slot_count(&self) -> usize {
        binomial(self.n(), self.k()) as usize
    }
}

/// A sample of the colored chain on pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColoredChainPoint {
    #[serde(flatten)]
    pub structure: ColoredDigraph,
    pub i: usize,
    pub p: f64,
}

fn check_index(i: usize, n: usize, k: usize) -> Result<()> {
    let max = binomial(n, k) as usize;
    if i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    Ok(())
}

/// Per-slot sampling shared by chain points, the step analysis and the
/// plain generators' stream layout.
pub(crate) struct SlotSampler {
    slot: Stream,
    arc: Stream,
    perms: Vec<Vec<usize>>,
    kf: u64,
}

impl SlotSampler {
    pub(crate) fn new(seed: &Seed, k: usize) -> Self {
        SlotSampler {
            slot: seed.derive(SLOT).stream(),
            arc: seed.derive(ARC).stream(),
            perms: orientations(k),
            kf: factorial(k),
        }
    }

    pub(crate) fn orientation(&self, slot: &[VertexId], r: usize) -> Vec<VertexId> {
        self.perms[r].iter().map(|&i| slot[i]).collect()
    }

    pub(crate) fn orientation_count(&self) -> usize {
        self.perms.len()
    }

    /// Adds the arcs of slot `j` (0-based rank) to `d`.
    pub(crate) fn sample_slot(
        &self,
        d: &mut DirHypergraph,
        j: usize,
        slot: &[VertexId],
        split: bool,
        p: f64,
    ) {
        if split {
            for r in 0..self.perms.len() {
                if self.arc.bernoulli(j as u64 * self.kf + r as u64, p) {
                    d.insert_unchecked(self.orientation(slot, r));
                }
            }
        } else if self.slot.bernoulli(j as u64, p) {
            for r in 0..self.perms.len() {
                d.insert_unchecked(self.orientation(slot, r));
            }
        }
    }
}

/// Samples `Γ_i` for `0 <= i <= C(n, k)`.
pub fn chain_sample(n: usize, k: usize, p: f64, i: usize, seed: &Seed) -> Result<ChainPoint> {
    let mut structure = DirHypergraph::new(n, k)?;
    check_probability("p", p)?;
    check_index(i, n, k)?;
    let sampler = SlotSampler::new(seed, k);
    for (j, slot) in slots(n, k).enumerate() {
        sampler.sample_slot(&mut structure, j, &slot, j < i, p);
    }
    Ok(ChainPoint { structure, i, p })
}

/// Colored chain on pairs. A split pair decides and colors its two arcs
/// independently; an unsplit pair has both arcs or neither, sharing one
/// uniform color, so forgetting orientations at `i = 0` gives `G^c_{n,p}`.
pub fn chain_sample_colored(
    n: usize,
    p: f64,
    c: usize,
    i: usize,
    seed: &Seed,
) -> Result<ColoredChainPoint> {
    let mut structure = ColoredDigraph::new(n, c)?;
    check_params(n, 2)?;
    check_probability("p", p)?;
    check_index(i, n, 2)?;
    let slot = seed.derive(SLOT).stream();
    let slot_color = seed.derive(SLOT_COLOR).stream();
    let arc = seed.derive(ARC).stream();
    let arc_color = seed.derive(ARC_COLOR).stream();
    for (j, e) in slots(n, 2).enumerate() {
        let (u, v) = (e[0], e[1]);
        if j < i {
            for (r, (a, b)) in [(u, v), (v, u)].into_iter().enumerate() {
                let ctr = j as u64 * 2 + r as u64;
                if arc.bernoulli(ctr, p) {
                    structure.insert_unchecked(a, b, arc_color.below(ctr, c as u32));
                }
            }
        } else if slot.bernoulli(j as u64, p) {
            let col = slot_color.below(j as u64, c as u32);
            structure.insert_unchecked(u, v, col);
            structure.insert_unchecked(v, u, col);
        }
    }
    Ok(ColoredChainPoint { structure, i, p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{gen_colored_digraph, gen_colored_graph, gen_dir_hyper, gen_hyper};

    #[test]
    fn full_probability_gives_complete_digraph_everywhere() {
        for i in 0..=6 {
            let cp = chain_sample(4, 2, 1.0, i, &Seed::new(3)).unwrap();
            assert_eq!(cp.structure.len(), 12);
        }
    }

    #[test]
    fn endpoints_reproduce_the_generators() {
        for t in 0..20 {
            let s = Seed::new(t);
            let g0 = chain_sample(6, 3, 0.3, 0, &s).unwrap();
            let h = gen_hyper(6, 3, 0.3, &s).unwrap();
            assert_eq!(g0.structure, DirHypergraph::all_orientations_of(&h));
            let gn = chain_sample(6, 3, 0.3, 20, &s).unwrap();
            assert_eq!(gn.structure, gen_dir_hyper(6, 3, 0.3, &s).unwrap());

            let c0 = chain_sample_colored(5, 0.5, 4, 0, &s).unwrap();
            let g = gen_colored_graph(5, 0.5, 4, &s).unwrap();
            assert_eq!(c0.structure, ColoredDigraph::symmetric_of(&g));
            let cn = chain_sample_colored(5, 0.5, 4, 10, &s).unwrap();
            assert_eq!(cn.structure, gen_colored_digraph(5, 0.5, 4, &s).unwrap());
        }
    }

    #[test]
    fn unsplit_slots_are_all_or_nothing() {
        for t in 0..50 {
            let cp = chain_sample(5, 3, 0.5, 4, &Seed::new(t)).unwrap();
            for (j, slot) in slots(5, 3).enumerate().skip(4) {
                let present = (0..6)
                    .filter(|&r| {
                        let perm = &orientations(3)[r];
                        cp.structure
                            .contains(&perm.iter().map(|&x| slot[x]).collect::<Vec<_>>())
                    })
                    .count();
                assert!(present == 0 || present == 6, "slot {j}: {present}");
            }
        }
    }

    #[test]
    fn unsplit_colored_pairs_share_color() {
        let cp = chain_sample_colored(6, 1.0, 5, 0, &Seed::new(1)).unwrap();
        assert_eq!(cp.structure.len(), 30);
        for ((u, v), c) in cp.structure.arcs() {
            assert_eq!(cp.structure.color(v, u), Some(c));
        }
        let cp = chain_sample_colored(4, 1.0, 1, 0, &Seed::new(1)).unwrap();
        assert!(cp.structure.arcs().all(|(_, c)| c == 0));
    }

    #[test]
    fn index_range_checked() {
        assert!(matches!(
            chain_sample(4, 2, 0.5, 7, &Seed::new(0)),
            Err(Error::IndexOutOfRange { index: 7, max: 6 })
        ));
        assert!(chain_sample_colored(4, 0.5, 4, 7, &Seed::new(0)).is_err());
    }

    #[test]
    fn chain_point_json_carries_index() {
        let cp = chain_sample(4, 2, 1.0, 2, &Seed::new(0)).unwrap();
        let s = serde_json::to_string(&cp).unwrap();
        assert!(s.starts_with(r#"{"n":4,"k":2,"arcs":[[0,1],"#), "{s}");
        assert!(s.ends_with(r#""i":2,"p":1.0}"#), "{s}");
        let back: ChainPoint = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cp);
    }
}
