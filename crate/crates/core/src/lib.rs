//! Detection of complex-valued constellation symbols from noisy linear
//! measurements with the regularized convex relaxation (RCR) detector,
//! together with sharp asymptotic predictions of its mean square error and
//! symbol error probability and a Monte-Carlo harness to validate them.
//!
//! The crate is organized around five building blocks:
//!
//! * [`constellation`] — the discrete transmit alphabet (M-PSK / square
//!   M-QAM), symbol sampling and nearest-point decisions;
//! * [`relaxation`] — the convex superset the estimation step optimizes
//!   over (disk, box, or the whole plane), with projection and distance;
//! * [`detector`] — the two-step detector: a projected-gradient solver for
//!   the regularized relaxed least-squares problem followed by per-entry
//!   hard decisions, plus a direct ridge baseline;
//! * [`predictor`] — the scalar saddle-point solver whose solution yields
//!   the large-system MSE and SEP of the detector;
//! * [`simulate`] — reproducible seeded Monte-Carlo trials of the full
//!   receive chain, aggregated with uncertainty estimates.

pub mod constellation;
pub mod detector;
mod error;
pub mod predictor;
pub mod quadrature;
pub mod relaxation;
pub mod simulate;
pub(crate) mod special;

pub use constellation::{Constellation, ConstellationKind};
pub use detector::{DetectionOutcome, SolverSettings};
pub use error::{Error, Result};
pub use predictor::{
    Metric, Prediction, PredictorParams, SaddleSettings, SaddleSolution, SepMethod, ZetaOptimum,
};
pub use relaxation::RelaxationSet;
pub use simulate::{AggregateResult, ScenarioParams, SweepAxis, SweepPoint, TrialResult};
