//! Exposure algebra, multi-round decomposition, contractions of a fixed
//! edge into a single vertex, and the lifts that turn a cycle of the
//! contracted structure back into a Hamilton cycle of the original one.

mod colored;
mod exposure;
mod loose;
mod pipeline;

pub use colored::{contract_colored, lift_colored, ColoredContraction, ColoredUnion};
pub use exposure::{compose_exposure, solve_q, solve_q_exponent, Exposure, ExposureParams};
pub use loose::{contract_loose, lift_loose, LooseContraction};
pub use pipeline::{
    direct_rainbow, pipeline_loose, pipeline_rainbow, LoosePipeline, PipelineParams,
    PipelineResult, RainbowPipeline,
};
