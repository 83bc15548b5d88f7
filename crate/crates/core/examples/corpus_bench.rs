//! Benchmark table over a directory, as the `bench` subcommand prints it.
//!
//! ```bash
//! cargo run --release -p bwts --example corpus_bench -- path/to/corpus
//! ```

use std::path::PathBuf;

use bwts::bench::{corpus_files, render_table, run_bench, TableFormat};
use bwts::PipelineConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| "src".into());
    let files = corpus_files(&dir)?;
    let records = run_bench(&files, &PipelineConfig::bwt(), &PipelineConfig::bwts())?;
    print!("{}", render_table(&records, TableFormat::Markdown)?);
    Ok(())
}
