//! Corpus benchmark comparing the BWT and S-transform pipelines.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::BenchError;
use crate::pipeline::{compress, decompress, PipelineConfig};

/// Sizes measured for one file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub file: String,
    pub original: u64,
    pub bwt_bytes: u64,
    pub bwts_bytes: u64,
}

fn ratio(bytes: f64, original: f64) -> f64 {
    if original == 0.0 {
        0.0
    } else {
        bytes / original * 100.0
    }
}

fn relative_gain(bwt: f64, bwts: f64) -> f64 {
    if bwt == 0.0 {
        0.0
    } else {
        (bwt - bwts) / bwt * 100.0
    }
}

impl BenchRecord {
    /// Empty input: ratios are reported as 0.
    pub fn is_degenerate(&self) -> bool {
        self.original == 0
    }

    pub fn bwt_ratio(&self) -> f64 {
        ratio(self.bwt_bytes as f64, self.original as f64)
    }

    pub fn bwts_ratio(&self) -> f64 {
        ratio(self.bwts_bytes as f64, self.original as f64)
    }

    /// Ratio difference in percentage points.
    pub fn absolute_gain(&self) -> f64 {
        self.bwt_ratio() - self.bwts_ratio()
    }

    /// Size saving relative to the BWT output, in percent.
    pub fn relative_gain(&self) -> f64 {
        relative_gain(self.bwt_bytes as f64, self.bwts_bytes as f64)
    }

    fn row(&self) -> Row {
        Row {
            original: self.original as f64,
            bwt_bytes: self.bwt_bytes as f64,
            bwt_ratio: self.bwt_ratio(),
            bwts_bytes: self.bwts_bytes as f64,
            bwts_ratio: self.bwts_ratio(),
            absolute_gain: self.absolute_gain(),
            relative_gain: self.relative_gain(),
        }
    }
}

/// One table row; summary rows can hold fractional medians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub original: f64,
    pub bwt_bytes: f64,
    pub bwt_ratio: f64,
    pub bwts_bytes: f64,
    pub bwts_ratio: f64,
    pub absolute_gain: f64,
    pub relative_gain: f64,
}

impl Row {
    fn columns(&self) -> [f64; 7] {
        [
            self.original,
            self.bwt_bytes,
            self.bwt_ratio,
            self.bwts_bytes,
            self.bwts_ratio,
            self.absolute_gain,
            self.relative_gain,
        ]
    }

    fn from_columns(c: [f64; 7]) -> Self {
        Row {
            original: c[0],
            bwt_bytes: c[1],
            bwt_ratio: c[2],
            bwts_bytes: c[3],
            bwts_ratio: c[4],
            absolute_gain: c[5],
            relative_gain: c[6],
        }
    }
}

/// Sizes summed, ratios and gains recomputed from the sums.
pub fn total_row(records: &[BenchRecord]) -> Row {
    let original: u64 = records.iter().map(|r| r.original).sum();
    let bwt: u64 = records.iter().map(|r| r.bwt_bytes).sum();
    let bwts: u64 = records.iter().map(|r| r.bwts_bytes).sum();
    BenchRecord {
        file: String::new(),
        original,
        bwt_bytes: bwt,
        bwts_bytes: bwts,
    }
    .row()
}

/// Per-column medians; an even count takes the mean of the middle two.
pub fn median_row(records: &[BenchRecord]) -> Row {
    let rows: Vec<[f64; 7]> = records.iter().map(|r| r.row().columns()).collect();
    let mut out = [0.0; 7];
    for (col, slot) in out.iter_mut().enumerate() {
        let mut values: Vec<f64> = rows.iter().map(|r| r[col]).collect();
        *slot = median(&mut values);
    }
    Row::from_columns(out)
}

fn median(values: &mut [f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    }
}

/// Regular files directly inside `dir`, sorted by name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, BenchError> {
    let io_err = |source| BenchError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err)? {
        let entry = entry.map_err(io_err)?;
        if entry.file_type().map_err(io_err)?.is_file() {
            files.push(entry.path());
        }
    }
    files.sort();
    Ok(files)
}

fn measure(path: &Path, data: &[u8], config: &PipelineConfig) -> Result<u64, BenchError> {
    let pipeline_err = |source| BenchError::Pipeline {
        path: path.to_path_buf(),
        source,
    };
    let packed = compress(data, config).map_err(pipeline_err)?;
    let restored = decompress(&packed).map_err(pipeline_err)?;
    if restored != data {
        return Err(BenchError::RoundtripMismatch {
            path: path.to_path_buf(),
            config: config.to_string(),
        });
    }
    Ok(packed.len() as u64)
}

/// Compresses every file under both configurations, verifying each round
/// trip before recording the container sizes.
pub fn run_bench(
    paths: &[PathBuf],
    bwt: &PipelineConfig,
    bwts: &PipelineConfig,
) -> Result<Vec<BenchRecord>, BenchError> {
    paths
        .iter()
        .map(|path| {
            let data = fs::read(path).map_err(|source| BenchError::Io {
                path: path.clone(),
                source,
            })?;
            let file = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            Ok(BenchRecord {
                file,
                original: data.len() as u64,
                bwt_bytes: measure(path, &data, bwt)?,
                bwts_bytes: measure(path, &data, bwts)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

const CSV_HEADER: [&str; 9] = [
    "row",
    "file",
    "size",
    "bwt_bytes",
    "bwt_ratio",
    "bwts_bytes",
    "bwts_ratio",
    "gain_absolute",
    "gain_relative",
];

fn number(v: f64) -> String {
    if v.fract() == 0.0 {
        format!("{v:.0}")
    } else {
        format!("{v:.1}")
    }
}

fn row_fields(kind: &str, file: &str, row: &Row) -> Vec<String> {
    vec![
        kind.to_string(),
        file.to_string(),
        number(row.original),
        number(row.bwt_bytes),
        format!("{:.2}", row.bwt_ratio),
        number(row.bwts_bytes),
        format!("{:.2}", row.bwts_ratio),
        format!("{:.2}", row.absolute_gain),
        format!("{:.2}", row.relative_gain),
    ]
}

/// Renders the records in input order followed by Total and Median rows.
pub fn render_table(records: &[BenchRecord], format: TableFormat) -> Result<String, BenchError> {
    if records.is_empty() {
        return Err(BenchError::NoRecords);
    }
    let mut rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| row_fields("file", &r.file, &r.row()))
        .collect();
    rows.push(row_fields("total", "Total", &total_row(records)));
    rows.push(row_fields("median", "Median", &median_row(records)));

    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            for row in &rows {
                w.write_record(row)?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| BenchError::Malformed(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| BenchError::Malformed(e.to_string()))
        }
        TableFormat::Markdown => {
            let mut out = String::new();
            out.push_str("| File | Size | BWT bytes | BWT ratio | S bytes | S ratio | Gain (abs) | Gain (rel) |\n");
            out.push_str("|---|---:|---:|---:|---:|---:|---:|---:|\n");
            for row in &rows {
                let file = row[1].replace('|', "\\|");
                let file = if row[0] == "file" {
                    file
                } else {
                    format!("*{file}*")
                };
                let _ = writeln!(
                    out,
                    "| {file} | {} | {} | {}% | {} | {}% | {}% | {}% |",
                    row[2], row[3], row[4], row[5], row[6], row[7], row[8]
                );
            }
            Ok(out)
        }
    }
}

/// Reads the per-file records back from [`render_table`]'s CSV output.
pub fn parse_csv(text: &str) -> Result<Vec<BenchRecord>, BenchError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut records = Vec::new();
    for result in reader.records() {
        let rec = result?;
        if rec.get(0) != Some("file") {
            continue;
        }
        let field = |i: usize| -> Result<u64, BenchError> {
            rec.get(i)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| BenchError::Malformed(format!("column {i} of {:?}", rec)))
        };
        records.push(BenchRecord {
            file: rec.get(1).unwrap_or_default().to_string(),
            original: field(2)?,
            bwt_bytes: field(3)?,
            bwts_bytes: field(5)?,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(file: &str, original: u64, bwt: u64, bwts: u64) -> BenchRecord {
        BenchRecord {
            file: file.into(),
            original,
            bwt_bytes: bwt,
            bwts_bytes: bwts,
        }
    }

    fn calgary() -> Vec<BenchRecord> {
        [
            ("BIB", 111_261, 32_022, 31_197),
            ("BOOK1", 768_771, 242_857, 235_913),
            ("BOOK2", 610_856, 170_783, 166_881),
            ("GEO", 102_400, 66_370, 66_932),
            ("NEWS", 377_109, 135_444, 131_944),
            ("OBJ1", 21_504, 12_727, 12_640),
            ("OBJ2", 246_814, 98_395, 94_565),
            ("PAPER1", 53_161, 19_816, 18_931),
            ("PAPER2", 82_199, 28_084, 27_242),
            ("PAPER3", 46_526, 18_124, 17_511),
            ("PAPER4", 13_286, 6_047, 5_920),
            ("PAPER5", 11_954, 5_815, 5_670),
            ("PAPER6", 38_105, 14_786, 14_282),
            ("PIC", 513_216, 59_131, 52_406),
            ("PROGC", 39_611, 15_320, 14_774),
            ("PROGL", 71_646, 18_101, 17_916),
            ("PROGP", 49_379, 13_336, 13_010),
            ("TRANS", 93_695, 22_864, 22_356),
        ]
        .into_iter()
        .map(|(f, o, a, b)| rec(f, o, a, b))
        .collect()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn gain_arithmetic_on_bib_row() {
        let bib = rec("BIB", 111_261, 32_022, 31_197);
        assert!(close(bib.bwt_ratio(), 28.78, 0.005));
        assert!(close(bib.bwts_ratio(), 28.04, 0.005));
        assert!(close(bib.absolute_gain(), 0.74, 0.005));
        assert!(close(bib.relative_gain(), 2.58, 0.005));
    }

    #[test]
    fn calgary_summary_rows() {
        let records = calgary();
        let total = total_row(&records);
        assert_eq!(total.original, 3_251_493.0);
        assert_eq!(total.bwt_bytes, 980_022.0);
        assert_eq!(total.bwts_bytes, 950_090.0);
        assert!(close(total.bwt_ratio, 30.14, 0.005));
        assert!(close(total.bwts_ratio, 29.22, 0.005));
        assert!(close(total.absolute_gain, 0.92, 0.005));
        assert!(close(total.relative_gain, 3.05, 0.005));

        let median = median_row(&records);
        assert_eq!(median.original, 76_922.5);
        assert_eq!(median.bwt_bytes, 21_340.0);
        assert_eq!(median.bwts_bytes, 20_643.5);
        assert!(close(median.bwt_ratio, 36.60, 0.005));
        assert!(close(median.bwts_ratio, 35.30, 0.01));
        assert!(close(median.absolute_gain, 0.94, 0.01));
        assert!(close(median.relative_gain, 2.58, 0.005));
    }

    #[test]
    fn single_record_table() {
        let records = [rec("a", 100, 40, 30)];
        assert_eq!(total_row(&records), records[0].row());
        assert_eq!(median_row(&records), records[0].row());
        let md = render_table(&records, TableFormat::Markdown).unwrap();
        assert_eq!(md.lines().count(), 5);
        assert!(md.contains("| a | 100 | 40 | 40.00% | 30 | 30.00% | 10.00% | 25.00% |"));
    }

    #[test]
    fn two_record_median_is_mean() {
        let records = [rec("a", 100, 40, 30), rec("b", 300, 90, 90)];
        let m = median_row(&records);
        assert_eq!(m.original, 200.0);
        assert_eq!(m.bwt_bytes, 65.0);
        assert_eq!(m.bwts_bytes, 60.0);
        assert!(close(m.bwt_ratio, 35.0, 1e-9));
        assert!(close(m.relative_gain, 12.5, 1e-9));
    }

    #[test]
    fn csv_roundtrip() {
        let mut records = calgary();
        records.push(rec("odd, \"name\"", 0, 30, 22));
        let text = render_table(&records, TableFormat::Csv).unwrap();
        assert_eq!(parse_csv(&text).unwrap(), records);
        assert!(text.lines().next().unwrap().starts_with("row,file,size"));
        assert!(text.contains("\"odd, \"\"name\"\"\""));
    }

    #[test]
    fn degenerate_record() {
        let r = rec("empty", 0, 30, 22);
        assert!(r.is_degenerate());
        assert_eq!(r.bwt_ratio(), 0.0);
        assert_eq!(r.bwts_ratio(), 0.0);
        assert_eq!(r.absolute_gain(), 0.0);
    }

    #[test]
    fn empty_table_is_an_error() {
        assert!(matches!(
            render_table(&[], TableFormat::Csv),
            Err(BenchError::NoRecords)
        ));
    }
}
