//! Bit-exact entropy coding of byte symbols under per-step quantized
//! distributions: `decode(encode(x)) == x` whenever both sides see the same
//! distribution sequence.

mod bitio;
mod quantize;
mod range;

pub use bitio::{BitSink, BitSource};
pub use quantize::{QuantizedCdf, ALPHABET, DEFAULT_PRECISION};
pub use range::{Decoder, Encoder};
