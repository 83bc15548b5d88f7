//! Compress a file (or a built-in sample) with both pipelines and report
//! the container sizes.
//!
//! ```bash
//! cargo run --release -p bwts --example pipeline_roundtrip -- path/to/file
//! ```

use bwts::{compress, decompress, PipelineConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = match std::env::args().nth(1) {
        Some(path) => std::fs::read(path)?,
        None => b"It was the best of times, it was the worst of times, ".repeat(200),
    };
    for config in [PipelineConfig::bwt(), PipelineConfig::bwts()] {
        let packed = compress(&data, &config)?;
        assert_eq!(decompress(&packed)?, data);
        println!(
            "{config:<28} {:>9} -> {:>9} bytes ({:.2}%)",
            data.len(),
            packed.len(),
            packed.len() as f64 / data.len().max(1) as f64 * 100.0
        );
    }
    Ok(())
}
