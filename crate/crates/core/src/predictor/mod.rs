//! Next-byte predictors: the mapping from a conditioning context to a
//! distribution over the 256 byte values. Classical adaptive context models
//! live in [`context`]; the trainable transformer implements the windowed
//! flavor in the `model` module.

pub mod context;

use crate::coder::ALPHABET;
use crate::error::{Error, Result};

/// A probability distribution over the next byte.
///
/// Entries are non-negative and sum to 1 within 1e-6.
#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    probs: Box<[f64; ALPHABET]>,
}

impl Prediction {
    /// Uniform distribution: 1/256 per symbol.
    pub fn uniform() -> Self {
        Self {
            probs: Box::new([1.0 / ALPHABET as f64; ALPHABET]),
        }
    }

    /// Wrap raw probabilities, normalizing away rounding drift.
    pub fn from_probs(probs: [f64; ALPHABET]) -> Result<Self> {
        let mut sum = 0.0;
        for (i, &p) in probs.iter().enumerate() {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::InvalidDistribution(format!(
                    "probability of symbol {i} is {p}"
                )));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > 1e-3 {
            return Err(Error::InvalidDistribution(format!("sum {sum}")));
        }
        let mut probs = Box::new(probs);
        for p in probs.iter_mut() {
            *p /= sum;
        }
        Ok(Self { probs })
    }

    #[inline]
    pub fn probs(&self) -> &[f64; ALPHABET] {
        &self.probs
    }

    #[inline]
    pub fn prob(&self, symbol: u8) -> f64 {
        self.probs[symbol as usize]
    }

    /// Shannon entropy in bits.
    pub fn entropy_bits(&self) -> f64 {
        self.probs
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| -p * p.log2())
            .sum()
    }

    /// Code length of `symbol` in bits under this distribution.
    pub fn cost_bits(&self, symbol: u8) -> f64 {
        -self.prob(symbol).max(f64::MIN_POSITIVE).log2()
    }
}

/// A stateful per-byte predictor that adapts as the stream is coded.
///
/// `predict` must be a pure function of the initial state plus everything
/// observed so far; `reset` restores the initial state exactly. The streaming
/// layer calls `predict` before each coded byte and `observe` after it, so
/// prediction at position `i` sees only bytes before `i`.
pub trait AdaptivePredictor: Send {
    /// Distribution for the byte following `prefix` (the coded stream so far).
    fn predict(&self, prefix: &[u8]) -> Prediction;

    /// Account for the byte that actually followed `prefix`.
    fn observe(&mut self, prefix: &[u8], symbol: u8);

    /// Restore the initial state.
    fn reset(&mut self);

    fn name(&self) -> String;
}

/// Context-free predictor that always answers 1/256.
#[derive(Debug, Default, Clone)]
pub struct UniformPredictor;

impl AdaptivePredictor for UniformPredictor {
    fn predict(&self, _prefix: &[u8]) -> Prediction {
        Prediction::uniform()
    }

    fn observe(&mut self, _prefix: &[u8], _symbol: u8) {}

    fn reset(&mut self) {}

    fn name(&self) -> String {
        "uniform".to_string()
    }
}

/// A predictor that scores a whole context window at once.
///
/// `window_predictions(w)[i]` is the distribution for `w[i]` given `w[..i]`
/// only; the first position is predicted from an empty context. Implementors
/// are stateless across windows, so windows may be scored concurrently.
pub trait WindowPredictor: Send + Sync {
    /// Longest window this predictor accepts.
    fn max_context(&self) -> usize;

    /// Score every position of `window` causally.
    fn window_predictions(&self, window: &[u8]) -> Result<Vec<Prediction>>;

    /// Begin incremental scoring of one window (the decode path, where later
    /// bytes are unknown until decoded). Must reproduce `window_predictions`
    /// bit-for-bit.
    fn begin_window(&self) -> Box<dyn WindowCursor + '_>;

    /// Bytes a decoder must account for when reporting compressor size
    /// (2 bytes per parameter for trained models, 0 for parameterless ones).
    fn model_size_bytes(&self) -> u64;

    fn name(&self) -> String;
}

/// Incremental scorer over one window.
pub trait WindowCursor {
    /// Distribution for the next position. `prev` is the byte at the previous
    /// position (`None` at the window start).
    fn next_prediction(&mut self, prev: Option<u8>) -> Result<Prediction>;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_prediction_has_eight_bits_entropy() {
        let p = Prediction::uniform();
        assert!((p.entropy_bits() - 8.0).abs() < 1e-12);
        for s in 0..=255u8 {
            assert!((p.prob(s) - 1.0 / 256.0).abs() < 1e-15);
        }
    }

    #[test]
    fn from_probs_normalizes_and_validates() {
        let mut probs = [0.0f64; ALPHABET];
        probs[0] = 0.5000001;
        probs[1] = 0.5;
        let p = Prediction::from_probs(probs).unwrap();
        let sum: f64 = p.probs().iter().sum();
        assert!((sum - 1.0).abs() < 1e-9);

        let mut bad = [1.0 / 256.0; ALPHABET];
        bad[0] = f64::INFINITY;
        assert!(Prediction::from_probs(bad).is_err());
    }
}
