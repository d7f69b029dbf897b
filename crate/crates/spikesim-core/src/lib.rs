//! Deterministic spiking-neural-network simulation with built-in energy
//! accounting.
//!
//! The crate is organized around a small set of value types:
//!
//! - [`SpikeTrainGrid`] — binary spike events over discrete time steps for a
//!   1-D afferent population or a 2-D pixel grid.
//! - [`SynapseVector`] / [`Kernel`] — synaptic weights in `[0, 1]` and 2-D
//!   convolution kernels.
//! - [`EventCounts`] / [`EnergyProfile`] — operation counters and the
//!   joules-per-operation figures that turn them into energy estimates.
//! - [`NatureInputs`] — the symbol set of the NATURE environmental-cost
//!   score computed by [`nature::nature_score`].
//!
//! Everything is seeded and single-threaded per run: identical inputs,
//! parameters, and seeds produce bit-identical spike trains, counts, and
//! reports.

pub mod conv;
pub mod encode;
pub mod energy;
pub mod error;
pub mod nature;
pub mod neuron;
pub mod plasticity;
pub mod rng;
pub mod spike;

pub use conv::{ConvLayerState, ConvParams, Kernel};
pub use encode::rate_encode;
pub use energy::{EnergyProfile, EventCounts};
pub use error::{Error, Result};
pub use nature::NatureInputs;
pub use neuron::{NeuronParams, NeuronState, SynapseVector};
pub use plasticity::{DetectionReport, PatternExperimentConfig, StdpParams};
pub use spike::SpikeTrainGrid;
