use serde::{Deserialize, Serialize};

use crate::error::{check_probability, Error, Result};
use crate::structures::{factorial, gen_dir_hyper, gen_hyper, DirHypergraph, Hypergraph, Seed};

/// Parameters of a multi-round exposure: a base round at `p / 2` plus `f`
/// directed rounds at `q`, tied by `(1 − p/2)(1 − q)^(k!·f) = 1 − p`.
/// `s` is the undirected probability of one directed round,
/// `(1 − q)^(k!) = 1 − s`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExposureParams {
    pub p: f64,
    pub k: usize,
    pub f: usize,
    pub q: f64,
    pub s: f64,
}

/// `q = 1 − ((1 − p)/(1 − p/2))^(1/exponent)`, evaluated through
/// `ln_1p`/`expm1` so tiny `p` keeps full relative precision.
fn q_for_exponent(p: f64, exponent: f64) -> f64 {
    if p <= 0.0 {
        return 0.0;
    }
    if p >= 1.0 {
        return 1.0;
    }
    let log_ratio = (-p).ln_1p() - (-p / 2.0).ln_1p();
    -(log_ratio / exponent).exp_m1()
}

fn s_for(q: f64, kf: f64) -> f64 {
    if q >= 1.0 {
        return 1.0;
    }
    -(kf * (-q).ln_1p()).exp_m1()
}

/// Solves `(1 − p/2)(1 − q)^exponent = 1 − p` for `q` on the open interval.
pub fn solve_q_exponent(p: f64, exponent: u64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Parameter(format!(
            "p = {p} must lie strictly between 0 and 1"
        )));
    }
    if exponent == 0 {
        return Err(Error::Parameter("exponent must be at least 1".into()));
    }
    Ok(q_for_exponent(p, exponent as f64))
}

/// Per-round probabilities for target `p`, `f` rounds and uniformity `k`.
pub fn solve_q(p: f64, f: usize, k: usize) -> Result<ExposureParams> {
    if k < 2 {
        return Err(Error::Parameter(format!("k = {k} must be at least 2")));
    }
    if f == 0 {
        return Err(Error::Parameter("round count f must be at least 1".into()));
    }
    let kf = factorial(k);
    let q = solve_q_exponent(p, kf * f as u64)?;
    Ok(ExposureParams {
        p,
        k,
        f,
        q,
        s: s_for(q, kf as f64),
    })
}

impl ExposureParams {
    /// Like [`solve_q`] but also accepts the endpoints: `p = 0` gives
    /// `q = s = 0` and `p = 1` gives `q = s = 1`.
    pub fn including_endpoints(p: f64, f: usize, k: usize) -> Result<Self> {
        check_probability("p", p)?;
        if p > 0.0 && p < 1.0 {
            return solve_q(p, f, k);
        }
        if k < 2 || f == 0 {
            return Err(Error::Parameter(format!(
                "need k >= 2 and f >= 1, got k = {k}, f = {f}"
            )));
        }
        Ok(ExposureParams {
            p,
            k,
            f,
            q: p,
            s: p,
        })
    }

    /// `(|(1 − p/2)(1 − q)^(k!·f) − (1 − p)|, |(1 − q)^(k!) − (1 − s)|)`.
    pub fn residuals(&self) -> (f64, f64) {
        let kf = factorial(self.k) as f64;
        let total = (1.0 - self.p / 2.0) * (1.0 - self.q).powf(kf * self.f as f64);
        let round = (1.0 - self.q).powf(kf);
        (
            (total - (1.0 - self.p)).abs(),
            (round - (1.0 - self.s)).abs(),
        )
    }

    /// Range checks only; the algebraic tie is not enforced so hand-built
    /// parameters (e.g. `q = 0`) can be used to isolate the base round.
    pub fn check(&self) -> Result<()> {
        check_probability("p", self.p)?;
        check_probability("q", self.q)?;
        check_probability("s", self.s)?;
        if self.k < 2 || self.f == 0 {
            return Err(Error::Parameter(format!(
                "need k >= 2 and f >= 1, got k = {}, f = {}",
                self.k, self.f
            )));
        }
        Ok(())
    }
}

/// One multi-round exposure: the base round, the directed rounds and the
/// undirected union of everything.
#[derive(Clone, Debug, PartialEq)]
pub struct Exposure {
    pub base: Hypergraph,
    /// `rounds[r - 1]` is round `r`.
    pub rounds: Vec<DirHypergraph>,
    pub union: Hypergraph,
}

pub(crate) fn base_seed(seed: &Seed) -> Seed {
    seed.derive("base")
}

pub(crate) fn round_seed(seed: &Seed, round: usize) -> Seed {
    seed.derive("round").derive(round)
}

/// Samples `H_0 ~ H^(k)_{n,p/2}` and `f` independent `D^(k)_{n,q}` rounds,
/// and unions them with orientations forgotten.
pub fn compose_exposure(n: usize, k: usize, xp: &ExposureParams, seed: &Seed) -> Result<Exposure> {
    xp.check()?;
    if xp.k != k {
        return Err(Error::Parameter(format!(
            "parameters are for k = {}, not {k}",
            xp.k
        )));
    }
    let base = gen_hyper(n, k, xp.p / 2.0, &base_seed(seed))?;
    let rounds = (1..=xp.f)
        .map(|r| gen_dir_hyper(n, k, xp.q, &round_seed(seed, r)))
        .collect::<Result<Vec<_>>>()?;
    let mut union = base.clone();
    for d in &rounds {
        union = union.union(&d.underlying())?;
    }
    Ok(Exposure {
        base,
        rounds,
        union,
    })
}
