//! Single-neuron potential/threshold dynamics over a synapse vector.
//!
//! The membrane potential accumulates `leak * previous + sum(w_i * s_i(t))`
//! each step and the neuron spikes when it reaches the threshold (ties
//! fire). `leak = 0` gives instantaneous summation, `leak = 1` pure
//! accumulation. After a spike the potential resets to zero and the neuron
//! ignores input for `refractory_steps` steps.

use serde::{Deserialize, Serialize};

use crate::energy::EventCounts;
use crate::error::{Error, Result};
use crate::spike::SpikeTrainGrid;

/// Synaptic weights, each confined to `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SynapseVector {
    weights: Vec<f64>,
}

impl SynapseVector {
    /// Validate and wrap a weight vector (length ≥ 1, every weight in
    /// `[0, 1]`).
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::invalid_argument("synapse vector must have length >= 1"));
        }
        for (i, &w) in weights.iter().enumerate() {
            if !(0.0..=1.0).contains(&w) {
                return Err(Error::domain(format!("weight {w} at synapse {i} outside [0, 1]")));
            }
        }
        Ok(Self { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weighted sum of the active inputs at one step: `sum_i w_i * s_i(t)`.
    pub fn postsynaptic_potential(&self, spikes_at_t: &[bool]) -> Result<f64> {
        if spikes_at_t.len() != self.weights.len() {
            return Err(Error::shape(format!(
                "{} spikes against {} synapses",
                spikes_at_t.len(),
                self.weights.len()
            )));
        }
        Ok(self
            .weights
            .iter()
            .zip(spikes_at_t)
            .filter(|(_, &s)| s)
            .map(|(w, _)| w)
            .sum())
    }
}

/// Threshold, leak, and refractory configuration for one neuron.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NeuronParams {
    /// Firing threshold, must be > 0. Potential == threshold fires.
    pub threshold: f64,
    /// Fraction of potential retained per step, in `[0, 1]`.
    pub leak: f64,
    /// Steps after a spike during which input is ignored.
    #[serde(default)]
    pub refractory_steps: u32,
}

impl NeuronParams {
    pub fn new(threshold: f64, leak: f64, refractory_steps: u32) -> Result<Self> {
        let params = Self {
            threshold,
            leak,
            refractory_steps,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.threshold > 0.0) {
            return Err(Error::config(format!(
                "threshold must be > 0, got {}",
                self.threshold
            )));
        }
        if !(0.0..=1.0).contains(&self.leak) {
            return Err(Error::config(format!("leak {} outside [0, 1]", self.leak)));
        }
        Ok(())
    }
}

/// Mutable per-neuron state.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct NeuronState {
    pub potential: f64,
    pub last_spike_step: Option<u64>,
    pub refractory_remaining: u32,
}

impl NeuronState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Advance one step with the given summed input potential.
    ///
    /// Returns whether the neuron spiked at `step`. While refractory the
    /// input is ignored and the counter decrements; otherwise the new
    /// potential is `leak * old + input`, and reaching the threshold emits
    /// a spike and resets the potential to zero.
    pub fn step(&mut self, params: &NeuronParams, input_potential: f64, step: u64) -> bool {
        if self.refractory_remaining > 0 {
            self.refractory_remaining -= 1;
            self.potential *= params.leak;
            return false;
        }
        self.potential = params.leak * self.potential + input_potential;
        if self.potential >= params.threshold {
            self.potential = 0.0;
            self.last_spike_step = Some(step);
            self.refractory_remaining = params.refractory_steps;
            true
        } else {
            false
        }
    }
}

/// Drive one neuron over a full input spike train.
///
/// `inputs` must have exactly `weights.len()` sites; each input spike is one
/// synaptic event. Returns the 1-site output train and the event counts for
/// energy accounting.
pub fn run_population(
    inputs: &SpikeTrainGrid,
    weights: &SynapseVector,
    params: &NeuronParams,
) -> Result<(SpikeTrainGrid, EventCounts)> {
    params.validate()?;
    if inputs.sites() != weights.len() {
        return Err(Error::shape(format!(
            "{} input sites against {} synapses",
            inputs.sites(),
            weights.len()
        )));
    }
    let mut output = SpikeTrainGrid::new(1, 1, inputs.steps())?;
    let mut counts = EventCounts::default();
    let mut state = NeuronState::new();
    for step in 0..inputs.steps() {
        let frame = inputs.frame(step)?;
        counts.synaptic_events += frame.iter().filter(|&&s| s).count() as u64;
        let input_potential = weights.postsynaptic_potential(frame)?;
        if state.step(params, input_potential, step as u64) {
            output.set(0, 0, step, true)?;
            counts.output_spikes += 1;
        }
        counts.steps += 1;
    }
    Ok((output, counts))
}
