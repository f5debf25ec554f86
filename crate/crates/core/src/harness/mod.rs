//! Deterministic replays of the three load experiments under a virtual
//! clock: single-operation application times (A), a scripted drag (B) and a
//! growing photo wall with periodic rotation probes (C).

pub mod clock;
pub mod exp_a;
pub mod exp_b;
pub mod exp_c;
pub mod pool;
pub mod report;
pub mod rng;
pub mod simplan;
pub mod trace;

pub use clock::{quantize_clock, VirtualClock};
pub use exp_a::{exp_a_run, ExpAConfig, ExpAOp, ExpARow, Trial};
pub use exp_b::{exp_b_run, ExpBConfig, ExpBRow};
pub use exp_c::{exp_c_run, ExpCConfig, ExpCOutcome, ExpCRow, StopRule, StopRules};
pub use rng::SplitMix64;
pub use simplan::{sim_plan, Position, SimPlan};
pub use trace::{make_mouse_trace, MouseTrace};

use thiserror::Error;

use crate::render::EngineError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("missing source image `{0}`")]
    MissingSource(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl From<crate::render::RenderError> for HarnessError {
    fn from(e: crate::render::RenderError) -> Self {
        HarnessError::Engine(e.into())
    }
}
