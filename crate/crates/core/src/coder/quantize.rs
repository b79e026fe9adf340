//! Discretization of real-valued next-byte distributions into the integer
//! cumulative tables the range coder consumes.

use crate::error::{Error, Result};

/// Number of symbols in the byte alphabet.
pub const ALPHABET: usize = 256;

/// Default probability precision in bits.
pub const DEFAULT_PRECISION: u8 = 16;

/// Integer cumulative distribution over the 256 byte symbols.
///
/// `cum` has 257 entries with `cum[0] == 0`, `cum[256] == 1 << precision`,
/// and is strictly increasing: every symbol keeps a frequency of at least 1
/// so any byte remains decodable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantizedCdf {
    cum: Box<[u32; ALPHABET + 1]>,
    precision_bits: u8,
}

impl QuantizedCdf {
    /// Quantize `probs` to integer frequencies summing to `1 << precision`.
    ///
    /// Rounding is largest-remainder after floor with ties broken toward the
    /// lower symbol index; zero frequencies are then raised to 1, paid for by
    /// the largest frequencies (again ties toward the lower index).
    pub fn from_probs(probs: &[f64; ALPHABET], precision_bits: u8) -> Result<Self> {
        validate_precision(precision_bits)?;
        let mut sum = 0.0f64;
        for (i, &p) in probs.iter().enumerate() {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::InvalidDistribution(format!(
                    "probability of symbol {i} is {p}"
                )));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > 1e-3 {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {sum}"
            )));
        }

        let total = 1u32 << precision_bits;
        let mut freq = [0u32; ALPHABET];
        let mut remainders = [0.0f64; ALPHABET];
        let mut assigned: i64 = 0;
        for i in 0..ALPHABET {
            let ideal = probs[i] / sum * f64::from(total);
            let floor = ideal.floor();
            freq[i] = floor as u32;
            remainders[i] = ideal - floor;
            assigned += floor as i64;
        }

        let mut leftover = i64::from(total) - assigned;
        if leftover > 0 {
            // Hand out the leftover units to the largest remainders.
            let mut order: Vec<usize> = (0..ALPHABET).collect();
            order.sort_by(|&a, &b| {
                remainders[b]
                    .partial_cmp(&remainders[a])
                    .unwrap()
                    .then(a.cmp(&b))
            });
            for &i in order.iter().take(leftover as usize) {
                freq[i] += 1;
            }
        } else {
            // Float round-off pushed the floors past the total; reclaim from
            // the largest frequencies.
            while leftover < 0 {
                let i = argmax_freq(&freq);
                debug_assert!(freq[i] > 1);
                freq[i] -= 1;
                leftover += 1;
            }
        }

        // Lift zero frequencies to one, taking mass from the largest bins.
        for i in 0..ALPHABET {
            if freq[i] == 0 {
                freq[i] = 1;
                let donor = argmax_freq(&freq);
                freq[donor] -= 1;
            }
        }

        Self::from_freqs(&freq, precision_bits)
    }

    /// Build directly from integer frequencies (must be positive and sum to
    /// `1 << precision`).
    pub fn from_freqs(freq: &[u32; ALPHABET], precision_bits: u8) -> Result<Self> {
        validate_precision(precision_bits)?;
        let total = 1u64 << precision_bits;
        let mut cum = Box::new([0u32; ALPHABET + 1]);
        let mut acc = 0u64;
        for i in 0..ALPHABET {
            if freq[i] == 0 {
                return Err(Error::InvalidDistribution(format!(
                    "symbol {i} has zero frequency"
                )));
            }
            acc += u64::from(freq[i]);
            cum[i + 1] = acc as u32;
        }
        if acc != total {
            return Err(Error::InvalidDistribution(format!(
                "frequencies sum to {acc}, expected {total}"
            )));
        }
        Ok(Self {
            cum,
            precision_bits,
        })
    }

    /// Uniform distribution: every symbol gets `2^P / 256`.
    pub fn uniform(precision_bits: u8) -> Self {
        let per = 1u32 << (precision_bits - 8);
        let mut cum = Box::new([0u32; ALPHABET + 1]);
        for i in 0..=ALPHABET {
            cum[i] = per * i as u32;
        }
        Self {
            cum,
            precision_bits,
        }
    }

    #[inline]
    pub fn precision_bits(&self) -> u8 {
        self.precision_bits
    }

    #[inline]
    pub fn total(&self) -> u32 {
        1u32 << self.precision_bits
    }

    #[inline]
    pub fn low(&self, symbol: u8) -> u32 {
        self.cum[symbol as usize]
    }

    #[inline]
    pub fn freq(&self, symbol: u8) -> u32 {
        self.cum[symbol as usize + 1] - self.cum[symbol as usize]
    }

    /// Ideal code length of `symbol` under this table, in bits.
    #[inline]
    pub fn cost_bits(&self, symbol: u8) -> f64 {
        f64::from(self.precision_bits) - f64::from(self.freq(symbol)).log2()
    }

    /// Symbol whose cumulative slot contains `value` (`value < total`).
    #[inline]
    pub fn symbol_for(&self, value: u32) -> u8 {
        debug_assert!(value < self.total());
        // Binary search over the strictly increasing cumulative table.
        let mut lo = 0usize;
        let mut hi = ALPHABET;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.cum[mid] <= value {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo as u8
    }
}

fn validate_precision(bits: u8) -> Result<()> {
    // 2^P must cover one unit per symbol; 16 keeps products inside u64.
    if !(9..=16).contains(&bits) {
        return Err(Error::InvalidPrecision(bits));
    }
    Ok(())
}

#[inline]
fn argmax_freq(freq: &[u32; ALPHABET]) -> usize {
    let mut best = 0usize;
    for i in 1..ALPHABET {
        if freq[i] > freq[best] {
            best = i;
        }
    }
    best
}
