use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the string transforms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("empty string")]
    Empty,
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("permutation length {theta} does not match string length {len}")]
    LengthMismatch { theta: usize, len: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("input of {0} bytes exceeds the 32-bit position limit")]
    TooLong(usize),
}

/// Errors raised while decoding a stage or a container.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("bad magic")]
    BadMagic,
    #[error("unsupported version {0}")]
    BadVersion(u8),
    #[error("unknown transform id {0}")]
    UnknownTransform(u8),
    #[error("unknown order id {0}")]
    UnknownOrder(u8),
    #[error("unknown stage flags {0:#04x}")]
    UnknownStages(u8),
    #[error("truncated {0}")]
    Truncated(&'static str),
    #[error("length mismatch: expected {expected} bytes, decoded {actual}")]
    LengthMismatch { expected: u64, actual: u64 },
    #[error("corrupt stream: {0}")]
    Corrupt(&'static str),
}

/// Errors raised by [`crate::pipeline::compress`] and [`crate::pipeline::decompress`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("the S-transform is not invertible under standard lexicographic order")]
    NonInvertibleConfig,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("round-trip mismatch on {path} under {config}")]
    RoundtripMismatch { path: PathBuf, config: String },
    #[error("{path}: {source}")]
    Pipeline {
        path: PathBuf,
        #[source]
        source: PipelineError,
    },
    #[error("no records to render")]
    NoRecords,
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed table: {0}")]
    Malformed(String),
}
