//! Five-stage block-sorting compressor: RLE, transform, MTF, RLE, arithmetic
//! coding, framed by a small self-describing header.
//!
//! Container layout (all integers little-endian):
//!
//! ```text
//! offset  size  field
//! 0       4     magic "BJS1"
//! 4       1     version (1)
//! 5       1     transform id: 0 none, 1 bwt, 2 bwts
//! 6       1     order id: 0 standard lex, 1 infinite periodic
//! 7       1     stage flags: 1 rle1, 2 mtf, 4 rle2, 8 entropy
//! 8       8     original length
//! 16      8     rotation index (transform id 1 only)
//! ```
//!
//! The payload follows the header. The whole input is one block.

pub mod arith;
pub mod mtf;
pub mod rle;

pub use arith::{ac_decode, ac_encode};
pub use mtf::{mtf_decode, mtf_encode};
pub use rle::{rle_decode, rle_encode};

use std::fmt;

use crate::error::{FormatError, PipelineError};
use crate::rotation::OrderKind;
use crate::transform::{bwt_forward, bwt_inverse_indexed, bwts_forward, bwts_inverse};

pub const MAGIC: [u8; 4] = *b"BJS1";
pub const VERSION: u8 = 1;
/// Header length without the rotation index.
pub const BASE_HEADER_LEN: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TransformKind {
    None,
    Bwt,
    #[default]
    Bwts,
}

impl TransformKind {
    pub fn id(self) -> u8 {
        match self {
            TransformKind::None => 0,
            TransformKind::Bwt => 1,
            TransformKind::Bwts => 2,
        }
    }

    pub fn from_id(id: u8) -> Result<Self, FormatError> {
        match id {
            0 => Ok(TransformKind::None),
            1 => Ok(TransformKind::Bwt),
            2 => Ok(TransformKind::Bwts),
            other => Err(FormatError::UnknownTransform(other)),
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransformKind::None => "none",
            TransformKind::Bwt => "bwt",
            TransformKind::Bwts => "bwts",
        })
    }
}

fn order_id(order: OrderKind) -> u8 {
    match order {
        OrderKind::StandardLex => 0,
        OrderKind::InfinitePeriodic => 1,
    }
}

fn order_from_id(id: u8) -> Result<OrderKind, FormatError> {
    match id {
        0 => Ok(OrderKind::StandardLex),
        1 => Ok(OrderKind::InfinitePeriodic),
        other => Err(FormatError::UnknownOrder(other)),
    }
}

/// Which of the optional stages run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Stages {
    pub rle1: bool,
    pub mtf: bool,
    pub rle2: bool,
    pub entropy: bool,
}

impl Default for Stages {
    fn default() -> Self {
        Self::ALL
    }
}

impl Stages {
    pub const ALL: Stages = Stages {
        rle1: true,
        mtf: true,
        rle2: true,
        entropy: true,
    };

    pub fn bits(self) -> u8 {
        self.rle1 as u8 | (self.mtf as u8) << 1 | (self.rle2 as u8) << 2 | (self.entropy as u8) << 3
    }

    pub fn from_bits(bits: u8) -> Result<Self, FormatError> {
        if bits & !0x0f != 0 {
            return Err(FormatError::UnknownStages(bits));
        }
        Ok(Stages {
            rle1: bits & 1 != 0,
            mtf: bits & 2 != 0,
            rle2: bits & 4 != 0,
            entropy: bits & 8 != 0,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PipelineConfig {
    pub transform: TransformKind,
    pub order: OrderKind,
    pub stages: Stages,
}

impl PipelineConfig {
    pub fn bwt() -> Self {
        Self {
            transform: TransformKind::Bwt,
            ..Self::default()
        }
    }

    pub fn bwts() -> Self {
        Self::default()
    }
}

impl fmt::Display for PipelineConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = match self.order {
            OrderKind::StandardLex => "lex",
            OrderKind::InfinitePeriodic => "periodic",
        };
        write!(
            f,
            "{}/{}/stages={:#04x}",
            self.transform,
            order,
            self.stages.bits()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContainerHeader {
    pub transform: TransformKind,
    pub order: OrderKind,
    pub stages: Stages,
    pub original_length: u64,
    /// Present exactly when `transform` is [`TransformKind::Bwt`].
    pub rotation_index: Option<u64>,
}

impl ContainerHeader {
    pub fn encoded_len(&self) -> usize {
        BASE_HEADER_LEN + if self.rotation_index.is_some() { 8 } else { 0 }
    }

    pub fn write_to(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&MAGIC);
        out.push(VERSION);
        out.push(self.transform.id());
        out.push(order_id(self.order));
        out.push(self.stages.bits());
        out.extend_from_slice(&self.original_length.to_le_bytes());
        if let Some(index) = self.rotation_index {
            out.extend_from_slice(&index.to_le_bytes());
        }
    }

    /// Parses a header, returning it with the remaining payload.
    pub fn parse(data: &[u8]) -> Result<(ContainerHeader, &[u8]), FormatError> {
        let truncated = FormatError::Truncated("header");
        if data.len() < MAGIC.len() {
            return Err(truncated);
        }
        if data[..4] != MAGIC {
            return Err(FormatError::BadMagic);
        }
        if data.len() < BASE_HEADER_LEN {
            return Err(truncated);
        }
        if data[4] != VERSION {
            return Err(FormatError::BadVersion(data[4]));
        }
        let transform = TransformKind::from_id(data[5])?;
        let order = order_from_id(data[6])?;
        let stages = Stages::from_bits(data[7])?;
        let original_length = u64::from_le_bytes(data[8..16].try_into().unwrap());
        let (rotation_index, rest) = if transform == TransformKind::Bwt {
            let field = data.get(16..24).ok_or(truncated)?;
            (
                Some(u64::from_le_bytes(field.try_into().unwrap())),
                &data[24..],
            )
        } else {
            (None, &data[16..])
        };
        let header = ContainerHeader {
            transform,
            order,
            stages,
            original_length,
            rotation_index,
        };
        Ok((header, rest))
    }
}

/// Compresses `data` into a self-describing container.
///
/// Fails only for the S-transform under standard lexicographic order, which
/// is not invertible.
pub fn compress(data: &[u8], config: &PipelineConfig) -> Result<Vec<u8>, PipelineError> {
    if config.transform == TransformKind::Bwts && config.order == OrderKind::StandardLex {
        return Err(PipelineError::NonInvertibleConfig);
    }
    let stages = config.stages;

    let mut block = if stages.rle1 {
        rle_encode(data)
    } else {
        data.to_vec()
    };
    let mut rotation_index = None;
    match config.transform {
        TransformKind::None => {}
        TransformKind::Bwt => {
            let mut index = 0;
            if !block.is_empty() {
                let out = bwt_forward(&block)?;
                block = out.transform;
                index = out.index;
            }
            rotation_index = Some(index as u64);
        }
        TransformKind::Bwts => {
            if !block.is_empty() {
                block = bwts_forward(&block, config.order)?;
            }
        }
    }
    if stages.mtf {
        block = mtf_encode(&block);
    }
    if stages.rle2 {
        block = rle_encode(&block);
    }
    let payload = if stages.entropy {
        ac_encode(&block)
    } else {
        block
    };

    let header = ContainerHeader {
        transform: config.transform,
        order: config.order,
        stages,
        original_length: data.len() as u64,
        rotation_index,
    };
    let mut out = Vec::with_capacity(header.encoded_len() + payload.len());
    header.write_to(&mut out);
    out.extend_from_slice(&payload);
    Ok(out)
}

/// Restores the original bytes from a container produced by [`compress`].
pub fn decompress(container: &[u8]) -> Result<Vec<u8>, PipelineError> {
    let (header, payload) = ContainerHeader::parse(container)?;
    let stages = header.stages;

    let mut block = if stages.entropy {
        ac_decode(payload, None)?
    } else {
        payload.to_vec()
    };
    if stages.rle2 {
        block = rle_decode(&block)?;
    }
    if stages.mtf {
        block = mtf_decode(&block);
    }
    match header.transform {
        TransformKind::None => {}
        TransformKind::Bwt => {
            let index = header.rotation_index.unwrap_or(0);
            if block.is_empty() {
                if index != 0 {
                    return Err(FormatError::Corrupt("rotation index out of range").into());
                }
            } else {
                if index >= block.len() as u64 {
                    return Err(FormatError::Corrupt("rotation index out of range").into());
                }
                block = bwt_inverse_indexed(&block, index as usize)?;
            }
        }
        TransformKind::Bwts => {
            if !block.is_empty() {
                block = bwts_inverse(&block)?;
            }
        }
    }
    if stages.rle1 {
        block = rle_decode(&block)?;
    }
    if block.len() as u64 != header.original_length {
        return Err(FormatError::LengthMismatch {
            expected: header.original_length,
            actual: block.len() as u64,
        }
        .into());
    }
    Ok(block)
}
