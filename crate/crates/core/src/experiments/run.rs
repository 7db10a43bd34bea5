use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{Event, ExperimentConfig, Model};
use super::estimate::{Estimate, Tally};
use crate::coupling::{chain_sample, chain_sample_colored};
use crate::error::{Error, Result};
use crate::oracles::{find_dir_loose_hc, find_loose_hc, find_rainbow_dir_hc, find_rainbow_hc};
use crate::reductions::{direct_rainbow, ColoredUnion, LoosePipeline, RainbowPipeline};
use crate::structures::{
    gen_colored_digraph, gen_colored_graph, gen_dir_hyper, gen_hyper, ColoredDigraph,
    DirHypergraph, Hypergraph, Seed, VertexId,
};

/// Seed of trial `t`; trials never share state, so the result does not
/// depend on how they are scheduled.
pub fn trial_seed(master: u64, t: u64) -> Seed {
    Seed::new(master).derive(t)
}

fn first_slot(k: usize) -> Vec<VertexId> {
    (0..k as VertexId).collect()
}

fn undirected_event(h: &Hypergraph, event: Event) -> Result<bool> {
    match event {
        Event::Hamiltonian | Event::Undirected => Ok(find_loose_hc(h)?.is_some()),
        Event::EdgePresent => Ok(h.contains(&first_slot(h.k()))),
    }
}

fn directed_event(d: &DirHypergraph, event: Event) -> Result<bool> {
    match event {
        Event::Hamiltonian => Ok(find_dir_loose_hc(d, None)?.is_some()),
        Event::Undirected => Ok(find_loose_hc(&d.underlying())?.is_some()),
        Event::EdgePresent => Ok(d.underlying().contains(&first_slot(d.k()))),
    }
}

fn colored_dir_event(g: &ColoredDigraph, event: Event) -> Result<bool> {
    match event {
        Event::Hamiltonian => Ok(find_rainbow_dir_hc(g)?.is_some()),
        Event::EdgePresent => Ok(g.color(0, 1).is_some() || g.color(1, 0).is_some()),
        Event::Undirected => Err(unsupported(Model::ColoredDigraph, event)),
    }
}

fn unsupported(model: Model, event: Event) -> Error {
    Error::Parameter(format!(
        "event {event:?} is not defined for model {model:?}"
    ))
}

/// Runs one trial of `cfg` at edge probability `p`.
pub fn run_trial(cfg: &ExperimentConfig, p: f64, event: Event, seed: &Seed) -> Result<bool> {
    let (n, k, c) = (cfg.n, cfg.k, cfg.palette());
    match cfg.model {
        Model::Hyper | Model::Graph => undirected_event(&gen_hyper(n, k, p, seed)?, event),
        Model::DirHyper | Model::Digraph => directed_event(&gen_dir_hyper(n, k, p, seed)?, event),
        Model::Chain => directed_event(&chain_sample(n, k, p, cfg.i, seed)?.structure, event),
        Model::ColoredGraph => {
            let g = gen_colored_graph(n, p, c, seed)?;
            match event {
                Event::Hamiltonian => Ok(find_rainbow_hc(&g)?.is_some()),
                Event::EdgePresent => Ok(g.color(0, 1).is_some()),
                Event::Undirected => Err(unsupported(cfg.model, event)),
            }
        }
        Model::ColoredDigraph => colored_dir_event(&gen_colored_digraph(n, p, c, seed)?, event),
        Model::ColoredChain => colored_dir_event(
            &chain_sample_colored(n, p, c, cfg.i, seed)?.structure,
            event,
        ),
        Model::PipelineLoose => {
            let pl = LoosePipeline::sample(n, k, p, cfg.f, seed)?;
            match event {
                Event::Hamiltonian => Ok(pl.run()?.found),
                Event::Undirected => Ok(find_loose_hc(&pl.exposure.union)?.is_some()),
                Event::EdgePresent => Ok(pl.exposure.union.contains(&first_slot(k))),
            }
        }
        Model::PipelineRainbow => match event {
            Event::Hamiltonian if n % 2 == 0 => Ok(direct_rainbow(n, p, seed)?.found),
            Event::Hamiltonian => Ok(RainbowPipeline::sample(n, p, seed)?.run()?.found),
            Event::EdgePresent if n % 2 == 1 => {
                let rp = RainbowPipeline::sample(n, p, seed)?;
                let union = ColoredUnion {
                    g1: &rp.g1,
                    g2: &rp.g2,
                };
                Ok(union.flattened().color(0, 1).is_some())
            }
            _ => Err(unsupported(cfg.model, event)),
        },
    }
}

/// Runs `job` on a pool of `workers` threads, or on the global pool.
pub(crate) fn with_workers<T: Send>(
    workers: Option<usize>,
    job: impl FnOnce() -> T + Send,
) -> Result<T> {
    match workers {
        None => Ok(job()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::Parameter(format!("worker pool: {e}")))?;
            Ok(pool.install(job))
        }
    }
}

fn tally_at(cfg: &ExperimentConfig, p: f64, event: Event) -> Result<Tally> {
    (0..cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(cfg, p, event, &trial_seed(cfg.master_seed, t)).map(Tally::one))
        .try_reduce(Tally::default, |a, b| Ok(a + b))
}

/// Monte Carlo estimate of `event` under `cfg` at `cfg.p`.
pub fn estimate(cfg: &ExperimentConfig, event: Event) -> Result<Estimate> {
    cfg.check()?;
    with_workers(cfg.workers, || tally_at(cfg, cfg.p, event))?.map(|t| t.estimate())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DominanceReport {
    pub estimate_a: Estimate,
    pub estimate_b: Estimate,
    /// Combined half-widths allowed below `A`.
    pub slack: f64,
    pub consistent: bool,
}

/// Checks `Pr_A[event] <= Pr_B[event]` up to sampling noise: consistent
/// unless `B`'s point estimate falls below `A`'s by more than the two
/// half-widths combined.
pub fn dominance_test(
    cfg_a: &ExperimentConfig,
    cfg_b: &ExperimentConfig,
    event: Event,
    trials: u64,
) -> Result<DominanceReport> {
    let a = estimate(&cfg_a.clone().with_trials(trials), event)?;
    let b = estimate(&cfg_b.clone().with_trials(trials), event)?;
    let slack = a.half_width() + b.half_width();
    Ok(DominanceReport {
        estimate_a: a,
        estimate_b: b,
        slack,
        consistent: b.point_estimate >= a.point_estimate - slack,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub p: f64,
    pub estimate: Estimate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    pub const CSV_HEADER: &'static str = "p,trials,successes,phat,ci_lo,ci_hi";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let e = &r.estimate;
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.p, e.trials, e.successes, e.point_estimate, e.ci_low, e.ci_high
            ));
        }
        out
    }

    /// Nondecreasing point estimates, allowing each step to drop by at
    /// most the two neighbouring half-widths.
    pub fn monotone_up_to_ci(&self) -> bool {
        self.rows.windows(2).all(|w| {
            let (a, b) = (&w[0].estimate, &w[1].estimate);
            b.point_estimate >= a.point_estimate - (a.half_width() + b.half_width())
        })
    }
}

/// One estimate per grid point. Every point reuses the same trial seeds,
/// and the generators threshold a fixed uniform per trial, so outcomes of a
/// monotone event are coupled across `p`.
pub fn sweep(cfg: &ExperimentConfig, event: Event) -> Result<SweepTable> {
    cfg.check()?;
    if cfg.grid.is_empty() {
        return Err(Error::Parameter("sweep needs a nonempty p-grid".into()));
    }
    let rows = with_workers(cfg.workers, || {
        cfg.grid
            .iter()
            .map(|&p| {
                Ok(SweepRow {
                    p,
                    estimate: tally_at(cfg, p, event)?.estimate(),
                })
            })
            .collect::<Result<Vec<_>>>()
    })??;
    Ok(SweepTable { rows })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LinkReport {
    pub vertex: VertexId,
    /// Trials drawn, including those without a directed loose cycle.
    pub attempts: u64,
    /// Among trials with a cycle: how often `vertex` was a link.
    pub estimate: Estimate,
}

fn uniform_permutation(n: usize, seed: &Seed) -> Vec<VertexId> {
    let mut perm: Vec<VertexId> = (0..n as VertexId).collect();
    perm.shuffle(&mut seed.rng());
    perm
}

/// Link indicator of `vertex` in the cycle found after a uniform random
/// relabeling, or `None` when `D^(k)_{n,p}` has no directed loose cycle.
pub fn link_trial(
    n: usize,
    k: usize,
    p: f64,
    vertex: VertexId,
    seed: &Seed,
) -> Result<Option<bool>> {
    let d = gen_dir_hyper(n, k, p, seed)?;
    let perm = uniform_permutation(n, &seed.derive("relabel"));
    let Some(w) = find_dir_loose_hc(&d.relabel(&perm), None)? else {
        return Ok(None);
    };
    let mut inverse = vec![0; n];
    for (v, &image) in perm.iter().enumerate() {
        inverse[image as usize] = v as VertexId;
    }
    Ok(Some(w.relabel(&inverse).is_link(vertex)))
}

/// Draws trials in index order until `successes` of them have a cycle (or
/// `max_attempts` are spent) and estimates how often `vertex` is a link.
pub fn link_frequency(
    n: usize,
    k: usize,
    p: f64,
    vertex: VertexId,
    successes: u64,
    max_attempts: u64,
    master: u64,
) -> Result<LinkReport> {
    if vertex as usize >= n {
        return Err(Error::Parameter(format!("vertex {vertex} outside [{n}]")));
    }
    const BATCH: u64 = 2048;
    let mut tally = Tally::default();
    let mut attempts = 0;
    while tally.trials < successes && attempts < max_attempts {
        let end = (attempts + BATCH).min(max_attempts);
        let batch = (attempts..end)
            .into_par_iter()
            .map(|t| link_trial(n, k, p, vertex, &trial_seed(master, t)))
            .collect::<Result<Vec<_>>>()?;
        for outcome in batch {
            attempts += 1;
            if let Some(is_link) = outcome {
                tally = tally + Tally::one(is_link);
                if tally.trials == successes {
                    break;
                }
            }
        }
    }
    Ok(LinkReport {
        vertex,
        attempts,
        estimate: tally.estimate(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_probabilities() {
        let cfg = ExperimentConfig::new(Model::Hyper, 6, 3, 1.0).with_trials(50);
        assert_eq!(
            estimate(&cfg, Event::Hamiltonian).unwrap().point_estimate,
            1.0
        );
        let mut zero = cfg.clone();
        zero.p = 0.0;
        assert_eq!(
            estimate(&zero, Event::Hamiltonian).unwrap().point_estimate,
            0.0
        );
    }

    #[test]
    fn worker_budget_does_not_change_results() {
        let mut cfg = ExperimentConfig::new(Model::Digraph, 5, 2, 0.5)
            .with_trials(300)
            .with_seed(9);
        let global = estimate(&cfg, Event::Hamiltonian).unwrap();
        cfg.workers = Some(2);
        assert_eq!(estimate(&cfg, Event::Hamiltonian).unwrap(), global);
        cfg.workers = Some(0);
        assert!(estimate(&cfg, Event::Hamiltonian).is_err());
    }

    #[test]
    fn identical_sides_are_consistent() {
        let cfg = ExperimentConfig::new(Model::Hyper, 6, 3, 0.3).with_seed(4);
        let r = dominance_test(&cfg, &cfg, Event::Hamiltonian, 500).unwrap();
        assert!(r.consistent);
        assert_eq!(r.estimate_a, r.estimate_b);
    }

    #[test]
    fn sweep_endpoints_and_csv() {
        let cfg = ExperimentConfig::new(Model::Hyper, 6, 3, 0.0)
            .with_trials(40)
            .with_grid(vec![0.0, 1.0]);
        let t = sweep(&cfg, Event::Hamiltonian).unwrap();
        assert_eq!(t.rows[0].estimate.successes, 0);
        assert_eq!(t.rows[1].estimate.successes, 40);
        let csv = t.to_csv();
        assert!(
            csv.starts_with("p,trials,successes,phat,ci_lo,ci_hi\n0,40,0,0,0,"),
            "{csv}"
        );
        assert!(t.monotone_up_to_ci());
    }

    #[test]
    fn unsupported_events_error() {
        let cfg = ExperimentConfig::new(Model::ColoredGraph, 5, 2, 0.5).with_trials(2);
        assert!(estimate(&cfg, Event::Undirected).is_err());
    }

    #[test]
    fn link_trials_are_relabeling_fair_at_full_density() {
        // every found cycle has n/(k−1) links among n vertices
        let r = link_frequency(6, 3, 1.0, 0, 200, 1000, 1).unwrap();
        assert_eq!(r.estimate.trials, 200);
        assert!(r.estimate.contains(0.5), "{r:?}");
    }
}
