//! Byte-oriented payload buffers for the range coder.
//!
//! The coder renormalizes byte-wise, so payloads are whole bytes; bit counts
//! are tracked for the optimality accounting. A decoder legitimately reads a
//! few bytes past the emitted payload (the final interval is disambiguated by
//! an implicit zero tail), so `BitSource` serves a bounded run of zero padding
//! before declaring the payload truncated.

use crate::error::{Error, Result};

/// Zero-padding slack a decoder may consume beyond the payload proper.
/// Anything past this is a structurally truncated stream.
pub(crate) const SOURCE_SLACK_BYTES: usize = 8;

/// Accumulates coder output.
#[derive(Debug, Default, Clone)]
pub struct BitSink {
    bytes: Vec<u8>,
}

impl BitSink {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn push_byte(&mut self, byte: u8) {
        self.bytes.push(byte);
    }

    pub fn len_bytes(&self) -> usize {
        self.bytes.len()
    }

    pub fn len_bits(&self) -> u64 {
        self.bytes.len() as u64 * 8
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }
}

/// Reads coder payload back in emission order.
#[derive(Debug, Clone)]
pub struct BitSource<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> BitSource<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        Self { bytes, pos: 0 }
    }

    /// Next payload byte, or zero padding within the slack window.
    #[inline]
    pub fn next_byte(&mut self) -> Result<u8> {
        if self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            self.pos += 1;
            Ok(b)
        } else if self.pos < self.bytes.len() + SOURCE_SLACK_BYTES {
            self.pos += 1;
            Ok(0)
        } else {
            Err(Error::TruncatedPayload {
                offset: self.pos,
                available: self.bytes.len(),
            })
        }
    }

    pub fn consumed(&self) -> usize {
        self.pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn source_reads_in_order_then_pads_then_errors() {
        let data = [1u8, 2, 3];
        let mut src = BitSource::new(&data);
        assert_eq!(src.next_byte().unwrap(), 1);
        assert_eq!(src.next_byte().unwrap(), 2);
        assert_eq!(src.next_byte().unwrap(), 3);
        for _ in 0..SOURCE_SLACK_BYTES {
            assert_eq!(src.next_byte().unwrap(), 0);
        }
        assert!(matches!(
            src.next_byte(),
            Err(Error::TruncatedPayload { available: 3, .. })
        ));
    }

    #[test]
    fn sink_tracks_bit_length() {
        let mut sink = BitSink::new();
        sink.push_byte(0xAB);
        sink.push_byte(0xCD);
        assert_eq!(sink.len_bytes(), 2);
        assert_eq!(sink.len_bits(), 16);
        assert_eq!(sink.into_bytes(), vec![0xAB, 0xCD]);
    }
}
