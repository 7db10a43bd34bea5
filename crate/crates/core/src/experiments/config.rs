use serde::{Deserialize, Serialize};

use crate::error::{check_probability, Error, Result};

/// What a single trial samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    /// `H^(k)_{n,p}`.
    Hyper,
    /// `D^(k)_{n,p}`.
    DirHyper,
    /// `G_{n,p}`, i.e. `Hyper` with `k = 2`.
    Graph,
    /// `D_{n,p}`, i.e. `DirHyper` with `k = 2`.
    Digraph,
    /// `G^c_{n,p}`.
    ColoredGraph,
    /// `D^c_{n,p}`.
    ColoredDigraph,
    /// The interpolation chain at index `i`.
    Chain,
    /// The colored chain at index `i`.
    ColoredChain,
    /// Multi-round contraction pipeline for loose cycles.
    PipelineLoose,
    /// Rainbow contraction pipeline (direct search for even `n`).
    PipelineRainbow,
}

impl Model {
    pub fn is_colored(self) -> bool {
        matches!(
            self,
            Model::ColoredGraph
                | Model::ColoredDigraph
                | Model::ColoredChain
                | Model::PipelineRainbow
        )
    }

    pub fn is_graph_only(self) -> bool {
        matches!(self, Model::Graph | Model::Digraph) || self.is_colored()
    }
}

/// What a trial counts as a success.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Event {
    /// The model's own Hamilton cycle notion: loose for undirected models,
    /// directed loose for directed ones, rainbow for colored ones, and a
    /// found witness for the pipelines.
    #[default]
    Hamiltonian,
    /// Loose Hamilton cycle after forgetting orientations.
    Undirected,
    /// The first slot `{0, …, k − 1}` is present in some orientation.
    EdgePresent,
}

/// Asymptotic parameter regimes, expressed through a
/// multiplier `t` and `log n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "preset")]
pub enum Preset {
    /// `p = t · log n / n^(k−1)`.
    Loose { t: f64 },
    /// `p = K · log n / n`, rainbow pipeline with `n` colors.
    Rainbow { big_k: f64 },
    /// `p = (1 + ε) log n / n` and `c = n + ⌈slack · n / log log n⌉`.
    ColorSlack { epsilon: f64, color_slack: f64 },
}

impl Preset {
    /// Constant `K` used when none is given.
    pub const DEFAULT_K: f64 = 3.0;

    pub fn p(&self, n: usize, k: usize) -> f64 {
        let ln = (n as f64).ln();
        let raw = match *self {
            Preset::Loose { t } => t * ln / (n as f64).powi(k as i32 - 1),
            Preset::Rainbow { big_k } => big_k * ln / n as f64,
            Preset::ColorSlack { epsilon, .. } => (1.0 + epsilon) * ln / n as f64,
        };
        raw.clamp(0.0, 1.0)
    }

    pub fn colors(&self, n: usize) -> Option<usize> {
        match *self {
            Preset::ColorSlack { color_slack, .. } => {
                let lnln = (n as f64).ln().ln();
                let extra = if lnln > 0.0 {
                    (color_slack * n as f64 / lnln).ceil()
                } else {
                    0.0
                };
                Some(n + extra.max(0.0) as usize)
            }
            Preset::Rainbow { .. } => Some(n),
            Preset::Loose { .. } => None,
        }
    }

    pub fn model(&self) -> Model {
        match self {
            Preset::Loose { .. } => Model::Hyper,
            Preset::Rainbow { .. } => Model::PipelineRainbow,
            Preset::ColorSlack { .. } => Model::ColoredGraph,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ExperimentConfig {
    pub model: Model,
    pub n: usize,
    pub k: usize,
    pub p: f64,
    /// Sweep grid; ascending.
    pub grid: Vec<f64>,
    /// Palette size; `None` means `n`.
    pub c: Option<usize>,
    pub f: usize,
    pub i: usize,
    pub trials: u64,
    pub master_seed: u64,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl ExperimentConfig {
    pub fn new(model: Model, n: usize, k: usize, p: f64) -> Self {
        ExperimentConfig {
            model,
            n,
            k: if model.is_graph_only() { 2 } else { k },
            p,
            grid: Vec::new(),
            c: None,
            f: 3,
            i: 0,
            trials: 1000,
            master_seed: 0,
            workers: None,
        }
    }

    /// Config for a preset regime at size `n`.
    pub fn from_preset(preset: Preset, n: usize, k: usize) -> Self {
        let model = preset.model();
        let mut cfg = ExperimentConfig::new(model, n, k, 0.0);
        cfg.p = preset.p(n, cfg.k);
        cfg.c = preset.colors(n);
        cfg
    }

    pub fn with_trials(mut self, trials: u64) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_seed(mut self, master_seed: u64) -> Self {
        self.master_seed = master_seed;
        self
    }

    pub fn with_grid(mut self, grid: Vec<f64>) -> Self {
        self.grid = grid;
        self
    }

    pub fn palette(&self) -> usize {
        self.c.unwrap_or(self.n)
    }

    pub fn check(&self) -> Result<()> {
        check_probability("p", self.p)?;
        if self.trials == 0 {
            return Err(Error::Parameter("trials must be at least 1".into()));
        }
        for &g in &self.grid {
            check_probability("grid point", g)?;
        }
        if self.grid.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Parameter("p-grid must be sorted ascending".into()));
        }
        if self.model.is_graph_only() && self.k != 2 {
            return Err(Error::Parameter(format!("{:?} needs k = 2", self.model)));
        }
        if self.workers == Some(0) {
            return Err(Error::Parameter("worker budget must be at least 1".into()));
        }
        Ok(())
    }
}
