use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_probability, Error, Result};
use crate::oracles::{find_dir_loose_hc, find_loose_hc};
use crate::structures::{
    binomial, check_params, factorial, orientations, slots, DirHypergraph, VertexId,
};

/// Largest number of independent binary trials the exact engine enumerates.
pub const MAX_EXACT_VARIABLES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ChainEvent {
    /// Undirected loose Hamilton cycle after forgetting orientations.
    LooseHc,
    /// Directed loose Hamilton cycle.
    DirLooseHc,
    /// Directed Hamilton cycle; the `k = 2` case of `DirLooseHc`.
    DirHc,
}

impl ChainEvent {
    pub(crate) fn holds(self, d: &DirHypergraph) -> Result<bool> {
        Ok(match self {
            ChainEvent::LooseHc => find_loose_hc(&d.underlying())?.is_some(),
            ChainEvent::DirLooseHc | ChainEvent::DirHc => find_dir_loose_hc(d, None)?.is_some(),
        })
    }
}

/// Event counts of `Γ_i`, grouped by how many of the `variables` binary
/// trials came out present. The probability at any `p` is the polynomial
/// `Σ_j by_weight[j] · p^j · (1 − p)^(variables − j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ExactCounts {
    pub variables: usize,
    pub by_weight: Vec<u64>,
}

impl ExactCounts {
    pub fn probability(&self, p: f64) -> f64 {
        let q = 1.0 - p;
        self.by_weight
            .iter()
            .enumerate()
            .map(|(j, &c)| c as f64 * p.powi(j as i32) * q.powi((self.variables - j) as i32))
            .sum()
    }

    pub fn favourable(&self) -> u64 {
        self.by_weight.iter().sum()
    }
}

/// Binary trials of `Γ_i`: the first `i` slots contribute one trial per
/// orientation, the rest one trial each.
struct Layout {
    /// `(slot, Some(orientation))` for split trials, `(slot, None)` for
    /// all-orientation trials.
    trials: Vec<(usize, Option<usize>)>,
    slots: Vec<Vec<VertexId>>,
    perms: Vec<Vec<usize>>,
}

impl Layout {
    fn build(&self, n: usize, k: usize, outcome: u64) -> DirHypergraph {
        let mut d = DirHypergraph::new(n, k).expect("validated");
        for (t, &(j, r)) in self.trials.iter().enumerate() {
            if outcome >> t & 1 == 0 {
                continue;
            }
            let slot = &self.slots[j];
            let orient = |perm: &Vec<usize>| perm.iter().map(|&x| slot[x]).collect::<Vec<_>>();
            match r {
                Some(r) => d.insert_unchecked(orient(&self.perms[r])),
                None => self
                    .perms
                    .iter()
                    .for_each(|perm| d.insert_unchecked(orient(perm))),
            }
        }
        d
    }
}

/// Enumerates every outcome of the independent trials of `Γ_i` and counts
/// those where `event` holds. Partial counts from parallel chunks are
/// integer sums, so the result does not depend on scheduling.
pub fn exact_event_counts(n: usize, k: usize, i: usize, event: ChainEvent) -> Result<ExactCounts> {
    check_params(n, k)?;
    if event == ChainEvent::DirHc && k != 2 {
        return Err(Error::Parameter("dirHC is defined for k = 2 only".into()));
    }
    let slot_total = binomial(n, k) as usize;
    if i > slot_total {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: slot_total,
        });
    }
    let kf = factorial(k) as usize;
    let variables = i.saturating_mul(kf).saturating_add(slot_total - i);
    if variables > MAX_EXACT_VARIABLES {
        return Err(Error::Capacity {
            what: "binary trials for exact enumeration",
            got: variables,
            limit: MAX_EXACT_VARIABLES,
        });
    }
    let layout = Layout {
        trials: (0..slot_total)
            .flat_map(|j| {
                let per: Vec<_> = if j < i {
                    (0..kf).map(|r| (j, Some(r))).collect()
                } else {
                    vec![(j, None)]
                };
                per
            })
            .collect(),
        slots: slots(n, k).collect(),
        perms: orientations(k),
    };
    let by_weight = (0..1u64 << variables)
        .into_par_iter()
        .try_fold(
            || vec![0u64; variables + 1],
            |mut acc, outcome| -> Result<Vec<u64>> {
                if event.holds(&layout.build(n, k, outcome))? {
                    acc[outcome.count_ones() as usize] += 1;
                }
                Ok(acc)
            },
        )
        .try_reduce(
            || vec![0u64; variables + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )?;
    Ok(ExactCounts {
        variables,
        by_weight,
    })
}

/// Exact probability that `Γ_i` (with edge probability `p`) has `event`.
pub fn exact_event_probability(
    n: usize,
    k: usize,
    p: f64,
    i: usize,
    event: ChainEvent,
) -> Result<f64> {
    check_probability("p", p)?;
    Ok(exact_event_counts(n, k, i, event)?.probability(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_zero_on_four_vertices() {
        let c = exact_event_counts(4, 2, 0, ChainEvent::DirHc).unwrap();
        assert_eq!(c.variables, 6);
        assert_eq!(c.favourable(), 10);
        assert!((c.probability(0.5) - 10.0 / 64.0).abs() < 1e-15);
    }

    #[test]
    fn complete_structure_always_has_the_event() {
        for i in [0, 1, 6] {
            let pr = exact_event_probability(4, 2, 1.0, i, ChainEvent::DirHc).unwrap();
            assert_eq!(pr, 1.0);
            assert_eq!(
                exact_event_probability(4, 2, 0.0, i, ChainEvent::DirHc).unwrap(),
                0.0
            );
        }
        let pr = exact_event_probability(6, 3, 1.0, 0, ChainEvent::LooseHc).unwrap();
        assert_eq!(pr, 1.0);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            exact_event_counts(6, 3, 1, ChainEvent::DirLooseHc),
            Err(Error::Capacity { got: 25, .. })
        ));
        assert!(exact_event_counts(4, 3, 0, ChainEvent::DirHc).is_err());
        assert!(exact_event_counts(4, 2, 7, ChainEvent::DirHc).is_err());
        assert!(exact_event_probability(4, 2, 1.2, 0, ChainEvent::DirHc).is_err());
    }
}
