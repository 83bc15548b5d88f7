//! Burrows-Wheeler transform, its bijective string-sorting variant, and a
//! block-sorting compression pipeline built on either.
//!
//! The S-transform cuts its input into Lyndon factors, sorts the rotations of
//! all factors together and keeps the last character of each. Unlike the
//! classic transform it needs neither a rotation index nor a sentinel: every
//! string is the image of exactly one string.
//!
//! ```
//! use bwts::{bwts_forward, bwts_inverse, OrderKind};
//!
//! let s = bwts_forward(b"banana", OrderKind::InfinitePeriodic).unwrap();
//! assert_eq!(s, b"annbaa");
//! assert_eq!(bwts_inverse(&s).unwrap(), b"banana");
//! ```

pub mod bench;
pub mod cli;
mod conjugates;
pub mod error;
pub mod lyndon;
pub mod pipeline;
pub mod rotation;
pub mod suffix_array;
pub mod transform;
mod walk;

pub use error::{BenchError, FormatError, PipelineError, TransformError};
pub use lyndon::{is_lyndon, lyndon_factorize, LyndonFactorization};
pub use pipeline::{compress, decompress, PipelineConfig, Stages, TransformKind};
pub use rotation::{
    compare_rotations, compare_rotations_counted, cyclic_rotations, last_column,
    sort_all_rotations, OrderKind, Rotation,
};
pub use suffix_array::suffix_array;
pub use transform::{
    bwt_forward, bwt_inverse, bwt_inverse_indexed, bwts_forward, bwts_inverse, match_permutation,
    multi_thread, thread_from, BwtOutput, Theta,
};
