//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 format or data error, 3 verify
//! mismatch. Payloads go to `--output` or standard output, diagnostics to
//! standard error.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{corpus_files, render_table, run_bench, TableFormat};
use crate::error::{BenchError, PipelineError};
use crate::pipeline::{compress, decompress, PipelineConfig, TransformKind};
use crate::rotation::OrderKind;
use crate::transform::{bwt_forward, bwt_inverse_indexed, bwts_forward, bwts_inverse};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bwts",
    version,
    about = "Bijective Burrows-Wheeler transform and block-sorting compressor"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compress a file into a container
    Compress {
        #[command(flatten)]
        transform: TransformArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Restore a container; transform and order come from its header
    Decompress {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Emit the raw transform of the input
    Transform {
        #[command(flatten)]
        transform: TransformArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Invert a raw transform
    Untransform {
        #[command(flatten)]
        transform: TransformArgs,
        /// Rotation index printed by `transform --transform bwt`
        #[arg(long)]
        index: Option<usize>,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Compare BWT and S-transform compression over files or directories
    Bench {
        #[arg(long, value_enum, default_value_t = OrderArg::Periodic)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Md)]
        format: FormatArg,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Compress and decompress in memory and compare
    Verify {
        #[command(flatten)]
        transform: TransformArgs,
        #[arg(default_value = "-")]
        input: PathBuf,
    },
}

#[derive(Debug, Args)]
struct TransformArgs {
    #[arg(long, value_enum, default_value_t = TransformArg::Bwts)]
    transform: TransformArg,
    #[arg(long, value_enum, default_value_t = OrderArg::Periodic)]
    order: OrderArg,
}

#[derive(Debug, Args)]
struct IoArgs {
    /// Input path, or "-" for standard input
    #[arg(default_value = "-")]
    input: PathBuf,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TransformArg {
    Bwts,
    Bwt,
    None,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Periodic,
    Lex,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Md,
}

impl From<TransformArg> for TransformKind {
    fn from(t: TransformArg) -> Self {
        match t {
            TransformArg::Bwts => TransformKind::Bwts,
            TransformArg::Bwt => TransformKind::Bwt,
            TransformArg::None => TransformKind::None,
        }
    }
}

impl From<OrderArg> for OrderKind {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Periodic => OrderKind::InfinitePeriodic,
            OrderArg::Lex => OrderKind::StandardLex,
        }
    }
}

impl TransformArgs {
    fn config(&self) -> PipelineConfig {
        PipelineConfig {
            transform: self.transform.into(),
            order: self.order.into(),
            ..PipelineConfig::default()
        }
    }
}

enum Failure {
    Usage(String),
    Data(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Data(_) => EXIT_DATA,
            Failure::Mismatch(_) => EXIT_MISMATCH,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        Failure::Data(e.to_string())
    }
}

impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::RoundtripMismatch { .. } => Failure::Mismatch(e.to_string()),
            other => Failure::Data(other.to_string()),
        }
    }
}

struct Streams<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Streams<'_> {
    fn read_input(&mut self, path: &Path) -> Result<Vec<u8>, Failure> {
        if path == Path::new("-") {
            let mut buf = Vec::new();
            self.stdin
                .read_to_end(&mut buf)
                .map_err(|e| Failure::Data(format!("standard input: {e}")))?;
            Ok(buf)
        } else {
            fs::read(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
        }
    }

    fn write_output(&mut self, output: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
        match output {
            Some(path) if path != Path::new("-") => fs::write(path, bytes)
                .map_err(|e| Failure::Data(format!("{}: {e}", path.display()))),
            _ => self
                .stdout
                .write_all(bytes)
                .and_then(|_| self.stdout.flush())
                .map_err(|e| Failure::Data(format!("standard output: {e}"))),
        }
    }

    fn note(&mut self, msg: &str) {
        let _ = writeln!(self.stderr, "{msg}");
    }
}

/// Runs one command with explicit streams and returns the exit code.
pub fn run_with<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Streams {
        stdin,
        stdout,
        stderr,
    };
    match execute(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            io.note(&format!("error: {}", f.message()));
            f.code()
        }
    }
}

/// Runs the process command line against the real standard streams.
pub fn run() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

fn execute(command: Command, io: &mut Streams<'_>) -> Result<(), Failure> {
    match command {
        Command::Compress {
            transform,
            io: paths,
        } => {
            let data = io.read_input(&paths.input)?;
            let packed = compress(&data, &transform.config())?;
            io.write_output(paths.output.as_deref(), &packed)
        }
        Command::Decompress { io: paths } => {
            let packed = io.read_input(&paths.input)?;
            let data = decompress(&packed)?;
            io.write_output(paths.output.as_deref(), &data)
        }
        Command::Transform {
            transform,
            io: paths,
        } => {
            let data = io.read_input(&paths.input)?;
            let out = match (transform.transform, data.is_empty()) {
                (TransformArg::None, _) | (_, true) => {
                    if matches!(transform.transform, TransformArg::Bwt) {
                        io.note("index: 0");
                    }
                    data
                }
                (TransformArg::Bwt, false) => {
                    let out = bwt_forward(&data).map_err(|e| Failure::Data(e.to_string()))?;
                    io.note(&format!("index: {}", out.index));
                    out.transform
                }
                (TransformArg::Bwts, false) => {
                    let order: OrderKind = transform.order.into();
                    if order == OrderKind::StandardLex {
                        io.note("warning: the S-transform under lex order cannot be inverted");
                    }
                    bwts_forward(&data, order).map_err(|e| Failure::Data(e.to_string()))?
                }
            };
            io.write_output(paths.output.as_deref(), &out)
        }
        Command::Untransform {
            transform,
            index,
            io: paths,
        } => {
            let data = io.read_input(&paths.input)?;
            let out = match transform.transform {
                TransformArg::None => data,
                TransformArg::Bwt => {
                    let index = index
                        .ok_or_else(|| Failure::Usage("--index is required for bwt".into()))?;
                    if data.is_empty() {
                        data
                    } else {
                        bwt_inverse_indexed(&data, index)
                            .map_err(|e| Failure::Data(e.to_string()))?
                    }
                }
                TransformArg::Bwts if data.is_empty() => data,
                TransformArg::Bwts => {
                    bwts_inverse(&data).map_err(|e| Failure::Data(e.to_string()))?
                }
            };
            io.write_output(paths.output.as_deref(), &out)
        }
        Command::Verify { transform, input } => {
            let data = io.read_input(&input)?;
            let config = transform.config();
            let packed = compress(&data, &config)?;
            let restored = decompress(&packed)?;
            if restored != data {
                return Err(Failure::Mismatch(format!(
                    "round trip differs under {config}"
                )));
            }
            io.note(&format!(
                "ok: {} -> {} bytes ({config})",
                data.len(),
                packed.len()
            ));
            Ok(())
        }
        Command::Bench {
            order,
            format,
            output,
            paths,
        } => {
            let mut files = Vec::new();
            for p in paths {
                if p.is_dir() {
                    files.extend(corpus_files(&p)?);
                } else {
                    files.push(p);
                }
            }
            let order: OrderKind = order.into();
            let bwt = PipelineConfig {
                order,
                ..PipelineConfig::bwt()
            };
            let bwts = PipelineConfig {
                order,
                ..PipelineConfig::bwts()
            };
            let records = run_bench(&files, &bwt, &bwts)?;
            let format = match format {
                FormatArg::Csv => TableFormat::Csv,
                FormatArg::Md => TableFormat::Markdown,
            };
            let table = render_table(&records, format)?;
            io.write_output(output.as_deref(), table.as_bytes())
        }
    }
}
