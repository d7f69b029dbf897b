//! Stochastic rate encoding of analog values into spike trains.
//!
//! Each site spikes independently at each step with probability
//! `value * max_rate` (Bernoulli rate coding). Draws are made in step-major
//! order, one per site per step regardless of probability, so two encodings
//! with the same seed stay aligned even when their rates differ.

use rand::Rng;

use crate::error::{Error, Result};
use crate::rng::seeded_rng;
use crate::spike::SpikeTrainGrid;

/// Encode a row-major grid of values in `[0, 1]` into a spike train.
///
/// Site `(r, c)` spikes at each step with probability
/// `values[r * cols + c] * max_rate`. Identical `(values, steps, max_rate,
/// seed)` yield identical output.
pub fn rate_encode(
    values: &[f64],
    rows: usize,
    cols: usize,
    steps: usize,
    max_rate: f64,
    seed: u64,
) -> Result<SpikeTrainGrid> {
    if values.len() != rows * cols {
        return Err(Error::shape(format!(
            "got {} values for a {rows}x{cols} grid",
            values.len()
        )));
    }
    if !(0.0..=1.0).contains(&max_rate) {
        return Err(Error::domain(format!("max_rate {max_rate} outside [0, 1]")));
    }
    for (i, &v) in values.iter().enumerate() {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::domain(format!("value {v} at site {i} outside [0, 1]")));
        }
    }
    let mut grid = SpikeTrainGrid::new(rows, cols, steps)?;
    let mut rng = seeded_rng(seed);
    for step in 0..steps {
        let frame = grid.frame_mut(step)?;
        for (site, slot) in frame.iter_mut().enumerate() {
            let draw: f64 = rng.random();
            *slot = draw < values[site] * max_rate;
        }
    }
    Ok(grid)
}

/// Encode a uniform Bernoulli train: every site spikes with probability
/// `rate` at every step.
pub fn uniform_rate_train(
    rate: f64,
    rows: usize,
    cols: usize,
    steps: usize,
    seed: u64,
) -> Result<SpikeTrainGrid> {
    rate_encode(&vec![rate; rows * cols], rows, cols, steps, 1.0, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_zero_values_yield_silence() {
        let g = rate_encode(&[0.0; 12], 3, 4, 17, 1.0, 1).unwrap();
        assert_eq!(g.spike_count(), 0);
    }

    #[test]
    fn saturated_values_spike_every_step() {
        // values all 1, max_rate 1, steps 10: every site spikes at every step.
        let g = rate_encode(&[1.0; 10], 1, 10, 10, 1.0, 99).unwrap();
        assert_eq!(g.spike_count(), 100);
    }

    #[test]
    fn spike_count_matches_binomial_oracle() {
        // One site at rate 0.5 for 10_000 steps: Binomial(10_000, 0.5) has
        // mean 5_000 and sigma = sqrt(10_000 * 0.25) = 50. Three sigma:
        // [4_850, 5_150].
        let g = rate_encode(&[0.5], 1, 1, 10_000, 1.0, 20_240_101).unwrap();
        let n = g.spike_count();
        assert!((4_850..=5_150).contains(&n), "count {n} outside 3 sigma");
    }

    #[test]
    fn deterministic_under_seed() {
        let a = rate_encode(&[0.3, 0.6, 0.9], 3, 1, 50, 0.8, 5).unwrap();
        let b = rate_encode(&[0.3, 0.6, 0.9], 3, 1, 50, 0.8, 5).unwrap();
        assert_eq!(a, b);
        let c = rate_encode(&[0.3, 0.6, 0.9], 3, 1, 50, 0.8, 6).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn rejects_out_of_domain_inputs() {
        assert!(rate_encode(&[1.1], 1, 1, 5, 1.0, 0).is_err());
        assert!(rate_encode(&[-0.1], 1, 1, 5, 1.0, 0).is_err());
        assert!(rate_encode(&[0.5], 1, 1, 0, 1.0, 0).is_err());
        assert!(rate_encode(&[0.5], 1, 1, 5, 1.5, 0).is_err());
        assert!(rate_encode(&[0.5, 0.5], 1, 1, 5, 1.0, 0).is_err());
    }
}
