//! Predictive byte compression toolkit.
//!
//! Sequential next-byte predictors (classical adaptive context models and a
//! small trainable decoder-only transformer) drive a range coder. Streams can
//! be compressed with a frozen pre-trained model, with a model trained on the
//! fly on the stream itself, or with a classical adaptive baseline; the
//! evaluation harness measures adjusted compression ratios that charge the
//! payload for the size of the model needed to decode it.

pub mod coder;
pub mod error;
pub mod predictor;

pub use error::{Error, Result};
