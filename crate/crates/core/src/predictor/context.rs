//! Order-k adaptive context models with Krichevsky–Trofimov smoothing.
//!
//! P(s | ctx) = (c_s + 1/2) / (n + 128) where c_s counts occurrences of s
//! after the k-byte context ctx and n is the total count under ctx. Contexts
//! never seen before fall back to uniform (for k = 0 the formula already is
//! uniform at n = 0).

use std::collections::HashMap;

use super::{AdaptivePredictor, Prediction};
use crate::coder::ALPHABET;

/// KT smoothing constant.
const ALPHA: f64 = 0.5;

/// Counts of next-byte occurrences keyed by the preceding k bytes.
#[derive(Debug, Clone)]
pub struct ContextCounts {
    order: usize,
    counts: HashMap<Vec<u8>, Box<[u32; ALPHABET]>>,
}

impl ContextCounts {
    /// `order` is the context length k; 0, 1 and 2 are the supported desk
    /// scales (larger orders work but memory grows with distinct contexts).
    pub fn new(order: usize) -> Self {
        Self {
            order,
            counts: HashMap::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The k-byte context preceding the next position of `prefix`, or None
    /// while the prefix is still shorter than k.
    fn context_of<'a>(&self, prefix: &'a [u8]) -> Option<&'a [u8]> {
        prefix.len().checked_sub(self.order).map(|s| &prefix[s..])
    }

    pub fn predict(&self, prefix: &[u8]) -> Prediction {
        let Some(ctx) = self.context_of(prefix) else {
            return Prediction::uniform();
        };
        let Some(row) = self.counts.get(ctx) else {
            return Prediction::uniform();
        };
        let n: u64 = row.iter().map(|&c| u64::from(c)).sum();
        let denom = n as f64 + ALPHA * ALPHABET as f64;
        let mut probs = [0.0f64; ALPHABET];
        for (p, &c) in probs.iter_mut().zip(row.iter()) {
            *p = (f64::from(c) + ALPHA) / denom;
        }
        Prediction::from_probs(probs).expect("KT probabilities are valid by construction")
    }

    pub fn observe(&mut self, prefix: &[u8], symbol: u8) {
        let Some(ctx) = self.context_of(prefix) else {
            return;
        };
        let row = self
            .counts
            .entry(ctx.to_vec())
            .or_insert_with(|| Box::new([0u32; ALPHABET]));
        row[symbol as usize] += 1;
    }

    pub fn reset(&mut self) {
        self.counts.clear();
    }

    /// Total observations recorded under `ctx`.
    pub fn total_for(&self, ctx: &[u8]) -> u64 {
        self.counts
            .get(ctx)
            .map(|row| row.iter().map(|&c| u64::from(c)).sum())
            .unwrap_or(0)
    }
}

impl AdaptivePredictor for ContextCounts {
    fn predict(&self, prefix: &[u8]) -> Prediction {
        ContextCounts::predict(self, prefix)
    }

    fn observe(&mut self, prefix: &[u8], symbol: u8) {
        ContextCounts::observe(self, prefix, symbol)
    }

    fn reset(&mut self) {
        ContextCounts::reset(self)
    }

    fn name(&self) -> String {
        format!("kt{}", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_order0_is_uniform() {
        let kt = ContextCounts::new(0);
        let p = kt.predict(b"");
        // (0 + 0.5) / (0 + 128) = 1/256
        for s in 0..=255u8 {
            assert!((p.prob(s) - 0.5 / 128.0).abs() < 1e-15);
        }
    }

    #[test]
    fn single_observation_shifts_mass() {
        let mut kt = ContextCounts::new(0);
        kt.observe(b"", b'a');
        let p = kt.predict(b"a");
        assert!((p.prob(b'a') - 1.5 / 129.0).abs() < 1e-12);
        assert!((p.prob(b'b') - 0.5 / 129.0).abs() < 1e-12);
    }

    #[test]
    fn two_observations_accumulate() {
        let mut kt = ContextCounts::new(0);
        kt.observe(b"", b'x');
        kt.observe(b"x", b'x');
        let p = kt.predict(b"xx");
        assert!((p.prob(b'x') - 2.5 / 130.0).abs() < 1e-12);
    }

    #[test]
    fn reset_restores_initial_prediction() {
        let mut kt = ContextCounts::new(1);
        let before = kt.predict(b"q");
        for (i, &b) in b"hello world".iter().enumerate() {
            kt.observe(&b"hello world"[..i], b);
        }
        kt.reset();
        assert_eq!(kt.predict(b"q"), before);
    }

    #[test]
    fn unseen_context_falls_back_to_uniform() {
        let mut kt = ContextCounts::new(2);
        for (i, &b) in b"abcabcabc".iter().enumerate() {
            kt.observe(&b"abcabcabc"[..i], b);
        }
        assert_eq!(kt.predict(b"zz"), Prediction::uniform());
        // Prefix shorter than the order: also uniform.
        assert_eq!(kt.predict(b"z"), Prediction::uniform());
    }

    #[test]
    fn streaming_counts_match_batch_recount() {
        // Drive the predict/observe loop over a buffer and compare against a
        // from-scratch recount of every (context, symbol) pair.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(314);
        let data: Vec<u8> = (0..4096).map(|_| rng.gen_range(b'a'..b'f')).collect();

        for order in 0..=2usize {
            let mut kt = ContextCounts::new(order);
            for i in 0..data.len() {
                kt.observe(&data[..i], data[i]);
            }
            let mut recount: HashMap<Vec<u8>, [u64; ALPHABET]> = HashMap::new();
            for i in 0..data.len() {
                if i >= order {
                    let ctx = data[i - order..i].to_vec();
                    recount.entry(ctx).or_insert([0u64; ALPHABET])[data[i] as usize] += 1;
                }
            }
            for (ctx, row) in &recount {
                assert_eq!(
                    kt.total_for(ctx),
                    row.iter().sum::<u64>(),
                    "order {order} context {ctx:?}"
                );
            }
        }
    }
}
