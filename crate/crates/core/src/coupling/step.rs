use serde::{Deserialize, Serialize};

use super::{check_index, SlotSampler};
use crate::error::{check_probability, Error, Result};
use crate::oracles::find_dir_loose_hc;
use crate::structures::{slots, DirHypergraph, Seed};

/// Where a sampled instance falls when only the trials of slot `e_i` are
/// left unexposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum StepCase {
    /// A directed loose Hamilton cycle exists without any ordering of `e_i`.
    WithoutSlot,
    /// None exists even with every ordering of `e_i` added.
    NoneEvenWithAll,
    /// One exists only by using at least one ordering of `e_i`.
    UsesSlot,
}

/// Instrumented `Γ_{i−1} → Γ_i` step on one sample of the other slots.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StepAnalysis {
    pub i: usize,
    pub case_a: bool,
    pub case_b: bool,
    pub case_c: bool,
    /// Conditional probability of the event in `Γ_{i−1}` (slot unsplit).
    pub prob_before: f64,
    /// Conditional probability of the event in `Γ_i` (slot split).
    pub prob_after: f64,
}

impl StepAnalysis {
    pub fn case(&self) -> Option<StepCase> {
        match (self.case_a, self.case_b, self.case_c) {
            (true, false, false) => Some(StepCase::WithoutSlot),
            (false, true, false) => Some(StepCase::NoneEvenWithAll),
            (false, false, true) => Some(StepCase::UsesSlot),
            _ => None,
        }
    }
}

/// Samples every slot but `e_i` as in `Γ_{i−1}` (equivalently `Γ_i`; the two
/// agree away from `e_i`), then evaluates the three cases independently and
/// the exact conditional event probabilities on both sides of the step.
pub fn analyze_step(n: usize, k: usize, p: f64, i: usize, seed: &Seed) -> Result<StepAnalysis> {
    let mut base = DirHypergraph::new(n, k)?;
    check_probability("p", p)?;
    check_index(i, n, k)?;
    if i == 0 {
        return Err(Error::Parameter("a step needs i >= 1".into()));
    }
    let sampler = SlotSampler::new(seed, k);
    let mut target = Vec::new();
    for (j, slot) in slots(n, k).enumerate() {
        if j + 1 == i {
            target = slot;
        } else {
            sampler.sample_slot(&mut base, j, &slot, j + 1 < i, p);
        }
    }
    let orientations: Vec<Vec<u32>> = (0..sampler.orientation_count())
        .map(|r| sampler.orientation(&target, r))
        .collect();
    let has = |d: &DirHypergraph| -> Result<bool> { Ok(find_dir_loose_hc(d, None)?.is_some()) };
    let with = |subset: u64| {
        let mut d = base.clone();
        for (r, arc) in orientations.iter().enumerate() {
            if subset >> r & 1 == 1 {
                d.insert_unchecked(arc.clone());
            }
        }
        d
    };

    let kf = orientations.len();
    let all = (1u64 << kf) - 1;
    let without = has(&base)?;
    let with_all = has(&with(all))?;
    let mut uses_one = false;
    for r in 0..kf {
        if has(&with(1 << r))? {
            uses_one = true;
            break;
        }
    }
    let case_a = without;
    let case_b = !with_all;
    let case_c = !without && uses_one;

    let prob_before = p * with_all as u8 as f64 + (1.0 - p) * without as u8 as f64;
    let mut prob_after = 0.0;
    for subset in 0..=all {
        if has(&with(subset))? {
            let ones = subset.count_ones() as i32;
            prob_after += p.powi(ones) * (1.0 - p).powi(kf as i32 - ones);
        }
    }
    Ok(StepAnalysis {
        i,
        case_a,
        case_b,
        case_c,
        prob_before,
        prob_after,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_partition_small_samples() {
        for t in 0..200u64 {
            let s = Seed::new(t);
            let i = 1 + (t as usize % 6);
            let a = analyze_step(4, 2, 0.5, i, &s).unwrap();
            assert!(a.case().is_some(), "{a:?}");
            assert!(a.prob_after >= a.prob_before - 1e-12, "{a:?}");
            if a.case() == Some(StepCase::UsesSlot) {
                assert!((a.prob_before - 0.5).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn step_zero_rejected() {
        assert!(analyze_step(4, 2, 0.5, 0, &Seed::new(0)).is_err());
        assert!(analyze_step(4, 2, 0.5, 7, &Seed::new(0)).is_err());
    }
}
