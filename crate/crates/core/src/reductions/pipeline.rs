use serde::{Deserialize, Serialize};

use super::colored::{contract_colored, lift_colored, ColoredContraction};
use super::exposure::{base_seed, compose_exposure, round_seed, Exposure, ExposureParams};
use super::loose::{contract_loose, lift_loose, LooseContraction};
use crate::error::{check_probability, Error, Result};
use crate::oracles::{find_dir_loose_hc, find_rainbow_dir_hc, find_rainbow_hc};
use crate::structures::{
    gen_colored_digraph, gen_colored_graph, ColoredDigraph, ColoredGraph, DirLooseCycle,
    LooseCycle, RainbowCycle, Seed,
};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineParams {
    pub p: f64,
    pub q: f64,
    pub s: f64,
    pub f: usize,
}

impl From<&ExposureParams> for PipelineParams {
    fn from(xp: &ExposureParams) -> Self {
        PipelineParams {
            p: xp.p,
            q: xp.q,
            s: xp.s,
            f: xp.f,
        }
    }
}

/// Outcome of a pipeline run. `round` is 1-based and set only on success.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineResult<W> {
    pub found: bool,
    pub round: Option<usize>,
    pub witness: Option<W>,
    pub params: PipelineParams,
}

impl<W> PipelineResult<W> {
    fn new(params: PipelineParams, hit: Option<(usize, W)>) -> Self {
        let (round, witness) = match hit {
            Some((r, w)) => (Some(r), Some(w)),
            None => (None, None),
        };
        PipelineResult {
            found: witness.is_some(),
            round,
            witness,
            params,
        }
    }
}

/// The sampled state of the loose pipeline, kept so individual rounds can
/// be inspected.
#[derive(Clone, Debug)]
pub struct LoosePipeline {
    pub params: ExposureParams,
    pub exposure: Exposure,
    /// `None` when `H_0` has no edge to contract.
    pub contraction: Option<LooseContraction>,
}

impl LoosePipeline {
    pub fn sample(n: usize, k: usize, p: f64, f: usize, seed: &Seed) -> Result<Self> {
        if k < 2 || !n.is_multiple_of(k - 1) {
            return Err(Error::Parameter(format!(
                "k - 1 must divide n (n = {n}, k = {k})"
            )));
        }
        let params = ExposureParams::including_endpoints(p, f, k)?;
        let exposure = compose_exposure(n, k, &params, seed)?;
        let contraction = match exposure.base.edges().next() {
            Some(e) => Some(LooseContraction::new(n, e.to_vec())?),
            None => None,
        };
        Ok(LoosePipeline {
            params,
            exposure,
            contraction,
        })
    }

    /// Directed loose Hamilton cycle of the contracted round `r` (1-based)
    /// with ★ as a link, if any.
    pub fn round_outcome(&self, r: usize) -> Result<Option<DirLooseCycle>> {
        let Some(ctr) = &self.contraction else {
            return Ok(None);
        };
        let round = self
            .exposure
            .rounds
            .get(r.wrapping_sub(1))
            .ok_or(Error::IndexOutOfRange {
                index: r,
                max: self.params.f,
            })?;
        let d = contract_loose(round, ctr)?;
        find_dir_loose_hc(&d, Some(ctr.star_vertex))
    }

    /// Tries rounds in order and lifts the first success.
    pub fn run(&self) -> Result<PipelineResult<LooseCycle>> {
        let mut hit = None;
        if let Some(ctr) = &self.contraction {
            for r in 1..=self.params.f {
                if let Some(w) = self.round_outcome(r)? {
                    hit = Some((r, lift_loose(&w, ctr)?));
                    break;
                }
            }
        }
        Ok(PipelineResult::new((&self.params).into(), hit))
    }
}

/// Loose Hamilton cycle of `H^(k)_{n,p}` through contraction rounds.
pub fn pipeline_loose(
    n: usize,
    k: usize,
    p: f64,
    f: usize,
    seed: &Seed,
) -> Result<PipelineResult<LooseCycle>> {
    LoosePipeline::sample(n, k, p, f, seed)?.run()
}

/// The sampled state of the rainbow pipeline for odd `n`.
#[derive(Clone, Debug)]
pub struct RainbowPipeline {
    pub params: PipelineParams,
    pub g1: ColoredGraph,
    pub g2: ColoredDigraph,
    pub contraction: Option<ColoredContraction>,
}

impl RainbowPipeline {
    pub fn sample(n: usize, p: f64, seed: &Seed) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::Parameter(format!(
                "n = {n} is even; use the direct search instead"
            )));
        }
        let xp = ExposureParams::including_endpoints(p, 1, 2)?;
        let g1 = gen_colored_graph(n, p / 2.0, n, &base_seed(seed))?;
        let g2 = gen_colored_digraph(n, xp.q, n, &round_seed(seed, 1))?;
        let contraction = match g1.edges().next() {
            Some(((x, y), c1)) => Some(ColoredContraction::new(n, x, y, c1, xp.q)?),
            None => None,
        };
        Ok(RainbowPipeline {
            params: (&xp).into(),
            g1,
            g2,
            contraction,
        })
    }

    pub fn run(&self) -> Result<PipelineResult<RainbowCycle>> {
        let mut hit = None;
        if let Some(ctr) = &self.contraction {
            let d = contract_colored(&self.g2, ctr)?;
            if let Some(w) = find_rainbow_dir_hc(&d)? {
                hit = Some((1, lift_colored(&w, ctr)?));
            }
        }
        Ok(PipelineResult::new(self.params, hit))
    }
}

/// Rainbow Hamilton cycle of `G^n_{n,p}` for odd `n` through one
/// contraction of a two-round exposure.
pub fn pipeline_rainbow(n: usize, p: f64, seed: &Seed) -> Result<PipelineResult<RainbowCycle>> {
    RainbowPipeline::sample(n, p, seed)?.run()
}

/// Even-`n` path: a direct search on a fresh `G^n_{n,p}`.
pub fn direct_rainbow(n: usize, p: f64, seed: &Seed) -> Result<PipelineResult<RainbowCycle>> {
    check_probability("p", p)?;
    let g = gen_colored_graph(n, p, n, seed)?;
    let hit = find_rainbow_hc(&g)?.map(|w| (1, w));
    let params = PipelineParams {
        p,
        q: p,
        s: p,
        f: 1,
    };
    Ok(PipelineResult::new(params, hit))
}
