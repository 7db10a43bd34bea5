use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use hamlab::coupling::{chain_sample, chain_sample_colored};
use hamlab::experiments::{
    dominance_test, estimate, exact_dominance_suite, sweep, Estimate, Event, ExperimentConfig,
    Model, Preset, SweepTable,
};
use hamlab::oracles::{find_dir_loose_hc, find_loose_hc, find_rainbow_dir_hc, find_rainbow_hc};
use hamlab::reductions::{
    contract_colored, contract_loose, direct_rainbow, pipeline_loose, pipeline_rainbow,
    ColoredContraction, LooseContraction,
};
use hamlab::structures::{
    gen_colored_digraph, gen_colored_graph, gen_dir_hyper, gen_hyper, verify_dir_loose_hc,
    verify_loose_hc, verify_rainbow_hc, AnyStructure, DirLooseCycle, LooseCycle, RainbowCycle,
    Seed, VertexId,
};

/// Random (hyper)graph Hamiltonicity laboratory.
#[derive(Parser)]
#[command(name = "hamlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Palette size (default n).
    #[arg(long)]
    c: Option<usize>,
    /// Number of directed exposure rounds.
    #[arg(long, default_value_t = 3)]
    f: usize,
    /// Chain index.
    #[arg(long, default_value_t = 0)]
    i: usize,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for trials (default: all cores).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args, Clone)]
struct Output {
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct Regime {
    #[arg(long, value_parser = parse_model, default_value = "hyper")]
    model: Model,
    #[arg(long, value_parser = parse_event, default_value = "hamiltonian")]
    event: Event,
    /// Parameter regime: loose (p = t log n / n^(k-1)), rainbow (p = K log n / n)
    /// or color-slack (p = (1+eps) log n / n, c = n + slack n / log log n).
    #[arg(long)]
    preset: Option<String>,
    /// Multiplier t (loose) or K (rainbow).
    #[arg(long)]
    mult: Option<f64>,
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
    #[arg(long, default_value_t = 1.0)]
    slack: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a structure from one of the random models.
    Gen {
        #[arg(long, value_parser = parse_model, default_value = "hyper")]
        model: Model,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// Check a witness against a structure.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        witness: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Search a structure (from --input, or sampled) for a Hamilton cycle.
    Find {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_parser = parse_model, default_value = "hyper")]
        model: Model,
        /// Required link vertex for directed loose cycles.
        #[arg(long)]
        link: Option<VertexId>,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// Sample a point of the interpolation chain.
    Chain {
        #[arg(long)]
        colored: bool,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// Sample a directed round at probability --p and contract a fixed edge.
    Contract {
        #[arg(long)]
        colored: bool,
        /// Ordered edge to contract, comma-separated (default 0,1,..,k-1).
        #[arg(long, value_delimiter = ',')]
        estar: Vec<VertexId>,
        /// Color of the contracted pair (colored mode).
        #[arg(long, default_value_t = 0)]
        c1: u32,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// Run the contraction pipeline.
    Pipeline {
        #[arg(long)]
        rainbow: bool,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// Monte Carlo estimate of an event probability.
    Estimate {
        #[command(flatten)]
        regime: Regime,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// Compare a claimed-smaller model A against model B.
    Dominance {
        #[arg(long, value_parser = parse_model, default_value = "hyper")]
        model_a: Model,
        #[arg(long, value_parser = parse_model, default_value = "dir-hyper")]
        model_b: Model,
        #[arg(long, value_parser = parse_event, default_value = "hamiltonian")]
        event: Event,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// Estimates over a p-grid with common random numbers.
    Sweep {
        #[command(flatten)]
        regime: Regime,
        /// Comma-separated ascending probabilities.
        #[arg(long, value_delimiter = ',', required = true)]
        grid: Vec<f64>,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        output: Output,
    },
    /// Exact chain probabilities on four vertices.
    Exact {
        #[command(flatten)]
        output: Output,
    },
}

fn parse_model(s: &str) -> Result<Model, String> {
    serde_json::from_value(json!(s)).map_err(|_| format!("unknown model `{s}`"))
}

fn parse_event(s: &str) -> Result<Event, String> {
    serde_json::from_value(json!(s)).map_err(|_| format!("unknown event `{s}`"))
}

/// A rendered result and whether it counts as the positive outcome.
struct Report {
    body: String,
    positive: bool,
}

impl Report {
    fn json<T: Serialize>(value: &T, positive: bool) -> anyhow::Result<Report> {
        let mut body = serde_json::to_string_pretty(value)?;
        body.push('\n');
        Ok(Report { body, positive })
    }
}

fn no_csv(output: &Output, what: &str) -> anyhow::Result<()> {
    if output.csv {
        bail!("{what} has no CSV form");
    }
    Ok(())
}

fn read_structure(path: &PathBuf) -> anyhow::Result<AnyStructure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(AnyStructure::from_json(&text)?)
}

fn sample(model: Model, c: &Common) -> anyhow::Result<AnyStructure> {
    let seed = Seed::new(c.seed);
    let palette = c.c.unwrap_or(c.n);
    Ok(match model {
        Model::Hyper => AnyStructure::Hyper(gen_hyper(c.n, c.k, c.p, &seed)?),
        Model::Graph => AnyStructure::Hyper(gen_hyper(c.n, 2, c.p, &seed)?),
        Model::DirHyper => AnyStructure::DirHyper(gen_dir_hyper(c.n, c.k, c.p, &seed)?),
        Model::Digraph => AnyStructure::DirHyper(gen_dir_hyper(c.n, 2, c.p, &seed)?),
        Model::ColoredGraph => AnyStructure::Colored(gen_colored_graph(c.n, c.p, palette, &seed)?),
        Model::ColoredDigraph => {
            AnyStructure::ColoredDir(gen_colored_digraph(c.n, c.p, palette, &seed)?)
        }
        other => bail!("`gen` does not sample {other:?}; use chain or pipeline"),
    })
}

fn found<W: Serialize>(witness: Option<W>) -> anyhow::Result<Report> {
    let positive = witness.is_some();
    Report::json(&json!({ "found": positive, "witness": witness }), positive)
}

fn config(regime: Option<&Regime>, model: Model, c: &Common) -> anyhow::Result<ExperimentConfig> {
    let mut cfg = ExperimentConfig::new(model, c.n, c.k, c.p);
    if let Some(name) = regime.and_then(|r| r.preset.as_deref()) {
        let r = regime.expect("preset implies regime");
        let preset = match name {
            "loose" => Preset::Loose {
                t: r.mult.unwrap_or(1.0),
            },
            "rainbow" => Preset::Rainbow {
                big_k: r.mult.unwrap_or(Preset::DEFAULT_K),
            },
            "color-slack" => Preset::ColorSlack {
                epsilon: r.epsilon,
                color_slack: r.slack,
            },
            other => bail!("unknown preset `{other}`"),
        };
        cfg = ExperimentConfig::from_preset(preset, c.n, c.k);
    }
    if c.c.is_some() {
        cfg.c = c.c;
    }
    cfg.f = c.f;
    cfg.i = c.i;
    cfg.trials = c.trials;
    cfg.master_seed = c.seed;
    cfg.workers = c.workers;
    Ok(cfg)
}

fn estimate_csv(rows: &[(String, f64, Estimate)], label: &str) -> String {
    let mut out = format!("{label}{}\n", SweepTable::CSV_HEADER);
    for (name, p, e) in rows {
        out.push_str(&format!(
            "{name}{p},{},{},{},{},{}\n",
            e.trials, e.successes, e.point_estimate, e.ci_low, e.ci_high
        ));
    }
    out
}

fn run(command: Command) -> anyhow::Result<(Report, Option<PathBuf>)> {
    let (report, output) = match command {
        Command::Gen {
            model,
            common,
            output,
        } => {
            no_csv(&output, "gen")?;
            (Report::json(&sample(model, &common)?, true)?, output)
        }
        Command::Verify {
            input,
            witness,
            output,
        } => {
            no_csv(&output, "verify")?;
            let text = fs::read_to_string(&witness)
                .with_context(|| format!("reading {}", witness.display()))?;
            // accepts a bare witness or the output of `find` / `pipeline`
            let mut value: serde_json::Value = serde_json::from_str(&text)?;
            if let Some(inner) = value.get_mut("witness") {
                value = inner.take();
            }
            let valid = match read_structure(&input)? {
                AnyStructure::Hyper(h) => {
                    verify_loose_hc(&h, &serde_json::from_value::<LooseCycle>(value)?)
                }
                AnyStructure::DirHyper(d) => {
                    verify_dir_loose_hc(&d, &serde_json::from_value::<DirLooseCycle>(value)?)
                }
                AnyStructure::Colored(g) => {
                    verify_rainbow_hc(&g, &serde_json::from_value::<RainbowCycle>(value)?)
                }
                AnyStructure::ColoredDir(g) => {
                    verify_rainbow_hc(&g, &serde_json::from_value::<RainbowCycle>(value)?)
                }
            };
            (Report::json(&json!({ "valid": valid }), valid)?, output)
        }
        Command::Find {
            input,
            model,
            link,
            common,
            output,
        } => {
            no_csv(&output, "find")?;
            let structure = match &input {
                Some(path) => read_structure(path)?,
                None => sample(model, &common)?,
            };
            let report = match structure {
                AnyStructure::Hyper(h) => found(find_loose_hc(&h)?)?,
                AnyStructure::DirHyper(d) => found(find_dir_loose_hc(&d, link)?)?,
                AnyStructure::Colored(g) => found(find_rainbow_hc(&g)?)?,
                AnyStructure::ColoredDir(g) => found(find_rainbow_dir_hc(&g)?)?,
            };
            (report, output)
        }
        Command::Chain {
            colored,
            common: c,
            output,
        } => {
            no_csv(&output, "chain")?;
            let seed = Seed::new(c.seed);
            let report = if colored {
                Report::json(
                    &chain_sample_colored(c.n, c.p, c.c.unwrap_or(c.n), c.i, &seed)?,
                    true,
                )?
            } else {
                Report::json(&chain_sample(c.n, c.k, c.p, c.i, &seed)?, true)?
            };
            (report, output)
        }
        Command::Contract {
            colored,
            estar,
            c1,
            common: c,
            output,
        } => {
            no_csv(&output, "contract")?;
            let seed = Seed::new(c.seed);
            let report = if colored {
                let (x, y) = match estar.as_slice() {
                    [] => (0, 1),
                    [x, y] => (*x, *y),
                    _ => bail!("colored --estar takes exactly two vertices"),
                };
                let ctr = ColoredContraction::new(c.n, x, y, c1, c.p)?;
                let round = gen_colored_digraph(c.n, c.p, c.n, &seed)?;
                let contracted = contract_colored(&round, &ctr)?;
                Report::json(
                    &json!({ "contraction": ctr, "round": round, "contracted": contracted }),
                    true,
                )?
            } else {
                let estar = if estar.is_empty() {
                    (0..c.k as VertexId).collect()
                } else {
                    estar
                };
                if estar.len() != c.k {
                    bail!("--estar needs {} vertices", c.k);
                }
                let ctr = LooseContraction::new(c.n, estar)?;
                let round = gen_dir_hyper(c.n, c.k, c.p, &seed)?;
                let contracted = contract_loose(&round, &ctr)?;
                Report::json(
                    &json!({ "contraction": ctr, "round": round, "contracted": contracted }),
                    true,
                )?
            };
            (report, output)
        }
        Command::Pipeline {
            rainbow,
            common: c,
            output,
        } => {
            no_csv(&output, "pipeline")?;
            let seed = Seed::new(c.seed);
            let report = if rainbow {
                let r = if c.n % 2 == 1 {
                    pipeline_rainbow(c.n, c.p, &seed)?
                } else {
                    direct_rainbow(c.n, c.p, &seed)?
                };
                Report::json(&r, r.found)?
            } else {
                let r = pipeline_loose(c.n, c.k, c.p, c.f, &seed)?;
                Report::json(&r, r.found)?
            };
            (report, output)
        }
        Command::Estimate {
            regime,
            common,
            output,
        } => {
            let cfg = config(Some(&regime), regime.model, &common)?;
            let e = estimate(&cfg, regime.event)?;
            let report = if output.csv {
                Report {
                    body: estimate_csv(&[(String::new(), cfg.p, e)], ""),
                    positive: true,
                }
            } else {
                Report::json(
                    &json!({ "config": cfg, "event": regime.event, "estimate": e }),
                    true,
                )?
            };
            (report, output)
        }
        Command::Dominance {
            model_a,
            model_b,
            event,
            common,
            output,
        } => {
            let a = config(None, model_a, &common)?;
            let b = config(None, model_b, &common)?;
            let r = dominance_test(&a, &b, event, common.trials)?;
            let report = if output.csv {
                let rows = [
                    ("a,".to_string(), a.p, r.estimate_a),
                    ("b,".to_string(), b.p, r.estimate_b),
                ];
                Report {
                    body: estimate_csv(&rows, "side,"),
                    positive: r.consistent,
                }
            } else {
                Report::json(&r, r.consistent)?
            };
            (report, output)
        }
        Command::Sweep {
            regime,
            grid,
            common,
            output,
        } => {
            let cfg = config(Some(&regime), regime.model, &common)?.with_grid(grid);
            let table = sweep(&cfg, regime.event)?;
            let report = if output.json {
                Report::json(&table, true)?
            } else {
                Report {
                    body: table.to_csv(),
                    positive: true,
                }
            };
            (report, output)
        }
        Command::Exact { output } => {
            let table = exact_dominance_suite()?;
            let positive = table.nondecreasing;
            let report = if output.csv {
                Report {
                    body: table.to_csv(),
                    positive,
                }
            } else {
                Report::json(&table, positive)?
            };
            (report, output)
        }
    };
    Ok((report, output.out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((report, out)) => {
            let written = match out {
                Some(path) => fs::write(&path, &report.body)
                    .map_err(|e| anyhow!("writing {}: {e}", path.display())),
                None => {
                    print!("{}", report.body);
                    Ok(())
                }
            };
            match written {
                Ok(()) if report.positive => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
