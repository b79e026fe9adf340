//! Range coder with a 64-bit range register and byte-wise renormalization.
//!
//! Carries are handled by the classic cache/pending scheme: output bytes are
//! held back while they might still be incremented by a carry out of the low
//! register. The wide register keeps the truncation loss of `range >> P` far
//! below a millibit per symbol, so payloads track the quantized cross-entropy
//! to within the constant flush overhead.

use super::bitio::{BitSink, BitSource};
use super::quantize::QuantizedCdf;
use crate::error::{Error, Result};

/// Renormalization threshold: emit bytes while `range` is below this.
const TOP: u64 = 1 << 56;
const LOW_MASK: u128 = (1u128 << 64) - 1;

/// Encoder state. Strictly sequential; one stream per instance.
#[derive(Debug)]
pub struct Encoder {
    low: u128,
    range: u64,
    cache: u8,
    /// Bytes withheld for carry resolution (the leading cache byte counts).
    pending: u64,
    finalized: bool,
    /// Sum of ideal code lengths of everything encoded, in bits.
    ideal_bits: f64,
}

impl Default for Encoder {
    fn default() -> Self {
        Self::new()
    }
}

impl Encoder {
    pub fn new() -> Self {
        Self {
            low: 0,
            range: u64::MAX,
            cache: 0,
            pending: 1,
            finalized: false,
            ideal_bits: 0.0,
        }
    }

    /// Narrow the interval to `symbol`'s slot under `cdf` and renormalize.
    pub fn encode(&mut self, cdf: &QuantizedCdf, symbol: u8, sink: &mut BitSink) -> Result<()> {
        if self.finalized {
            return Err(Error::AlreadyFinalized);
        }
        let r = self.range >> cdf.precision_bits();
        self.low += u128::from(r) * u128::from(cdf.low(symbol));
        self.range = r * u64::from(cdf.freq(symbol));
        self.ideal_bits += cdf.cost_bits(symbol);
        while self.range < TOP {
            self.shift_low(sink);
            self.range <<= 8;
        }
        Ok(())
    }

    /// Flush enough bytes that the decoder can disambiguate the final
    /// interval against an implicit zero tail.
    pub fn finalize(&mut self, sink: &mut BitSink) -> Result<()> {
        if self.finalized {
            return Err(Error::AlreadyFinalized);
        }
        self.finalized = true;
        // Pick the smallest 48-bit-aligned value inside [low, low + range).
        // range >= 2^56 after renormalization, so two payload bytes plus the
        // implicit zero tail always land inside the interval.
        let aligned = ((self.low >> 48) + 1) << 48;
        self.low = aligned;
        // Two shifts move the aligned bytes into the carry chain; the third
        // sees an all-zero register and flushes the chain behind them.
        self.shift_low(sink);
        self.shift_low(sink);
        self.shift_low(sink);
        Ok(())
    }

    /// Total ideal code length of the encoded stream so far, in bits.
    pub fn ideal_bits(&self) -> f64 {
        self.ideal_bits
    }

    #[inline]
    fn shift_low(&mut self, sink: &mut BitSink) {
        let low64 = (self.low & LOW_MASK) as u64;
        if low64 < 0xFF00_0000_0000_0000 || self.low > LOW_MASK {
            let carry = (self.low >> 64) as u8;
            let mut byte = self.cache;
            while self.pending > 0 {
                sink.push_byte(byte.wrapping_add(carry));
                byte = 0xFF;
                self.pending -= 1;
            }
            self.cache = (low64 >> 56) as u8;
        }
        self.pending += 1;
        self.low = u128::from(low64) << 8 & LOW_MASK;
    }
}

/// Decoder state; mirrors the encoder's interval arithmetic exactly.
#[derive(Debug)]
pub struct Decoder<'a> {
    code: u64,
    range: u64,
    source: BitSource<'a>,
}

impl<'a> Decoder<'a> {
    /// Position the decoder at the start of `payload`.
    pub fn new(payload: &'a [u8]) -> Result<Self> {
        let mut source = BitSource::new(payload);
        // The first emitted byte is the carry-absorbing cache lead.
        source.next_byte()?;
        let mut code = 0u64;
        for _ in 0..8 {
            code = code << 8 | u64::from(source.next_byte()?);
        }
        Ok(Self {
            code,
            range: u64::MAX,
            source,
        })
    }

    /// Decode the next symbol under `cdf`.
    pub fn decode(&mut self, cdf: &QuantizedCdf) -> Result<u8> {
        let r = self.range >> cdf.precision_bits();
        let slot = (self.code / r).min(u64::from(cdf.total()) - 1) as u32;
        let symbol = cdf.symbol_for(slot);
        self.code -= r * u64::from(cdf.low(symbol));
        self.range = r * u64::from(cdf.freq(symbol));
        while self.range < TOP {
            self.code = self.code << 8 | u64::from(self.source.next_byte()?);
            self.range <<= 8;
        }
        Ok(symbol)
    }
}
