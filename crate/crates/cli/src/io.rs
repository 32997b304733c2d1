//! CSV and JSON encodings of sampled curves.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use fracspec_core::{Complex64, Grid, SampledSignal};
use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::error::CliError;

/// One labelled curve; the JSON output is an array of these.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Curve {
    pub alpha: Option<f64>,
    pub x: Vec<f64>,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl Curve {
    pub fn new(alpha: Option<f64>, x: Vec<f64>, values: &[Complex64]) -> Self {
        Self {
            alpha,
            x,
            re: values.iter().map(|v| v.re).collect(),
            im: values.iter().map(|v| v.im).collect(),
        }
    }
}

/// Nine significant digits, lowercase exponent.
pub fn fmt_num(v: f64) -> String {
    format!("{v:.8e}")
}

fn round9(v: f64) -> f64 {
    if v.is_finite() {
        fmt_num(v).parse().expect("formatted float parses")
    } else {
        v
    }
}

/// A rectangular table with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub columns: Vec<Vec<f64>>,
}

impl Table {
    /// `x,re,im` for one curve, `x,re_<α>,im_<α>,…` for several. Curves must
    /// share their abscissae.
    pub fn from_curves(x_label: &str, curves: &[Curve]) -> Self {
        let mut header = vec![x_label.to_string()];
        let mut columns = vec![curves.first().map(|c| c.x.clone()).unwrap_or_default()];
        for c in curves {
            let suffix = match (curves.len(), c.alpha) {
                (1, _) | (_, None) => String::new(),
                (_, Some(a)) => format!("_{a}"),
            };
            header.push(format!("re{suffix}"));
            header.push(format!("im{suffix}"));
            columns.push(c.re.clone());
            columns.push(c.im.clone());
        }
        Self { header, columns }
    }

    pub fn write_csv(&self, w: impl Write) -> Result<(), CliError> {
        let mut out = csv::Writer::from_writer(w);
        let err = |e: csv::Error| CliError::io("writing CSV", e);
        out.write_record(&self.header).map_err(err)?;
        let rows = self.columns.first().map_or(0, Vec::len);
        for i in 0..rows {
            out.write_record(self.columns.iter().map(|c| fmt_num(c[i]))).map_err(err)?;
        }
        out.flush()?;
        Ok(())
    }
}

pub fn write_json<T: Serialize>(w: impl Write, value: &T) -> Result<(), CliError> {
    let mut w = w;
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| CliError::io("writing JSON", e))?;
    writeln!(w)?;
    Ok(())
}

/// Curves with every number rounded to the printed precision, so CSV and
/// JSON carry the same values.
pub fn rounded(curves: &[Curve]) -> Vec<Curve> {
    let r = |v: &[f64]| v.iter().copied().map(round9).collect();
    curves
        .iter()
        .map(|c| Curve {
            alpha: c.alpha,
            x: r(&c.x),
            re: r(&c.re),
            im: r(&c.im),
        })
        .collect()
}

/// Writes curves to `path` (stdout if `None`) in the requested format.
pub fn emit_curves(path: Option<&Path>, format: Format, x_label: &str, curves: &[Curve]) -> Result<(), CliError> {
    with_sink(path, |w| match format {
        Format::Csv => Table::from_curves(x_label, curves).write_csv(w),
        Format::Json => write_json(w, &rounded(curves)),
    })
}

pub fn with_sink(
    path: Option<&Path>,
    f: impl FnOnce(&mut dyn Write) -> Result<(), CliError>,
) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| CliError::io(p.display(), e))?;
            let mut w = BufWriter::new(file);
            f(&mut w)?;
            w.flush().map_err(|e| CliError::io(p.display(), e))
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            f(&mut w)
        }
    }
}

/// Reads `x,re[,im]` from a CSV file: column 0 is `x`, column 1 the real
/// part and column 2 the imaginary part when its header starts with `im`.
pub fn read_signal_csv(path: &Path) -> Result<SampledSignal, CliError> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| CliError::io(path.display(), e))?;
    let headers = reader
        .headers()
        .map_err(|e| CliError::io(path.display(), e))?
        .clone();
    if headers.len() < 2 {
        return Err(CliError::Config(format!(
            "--input {}: need at least columns x,re",
            path.display()
        )));
    }
    let has_im = headers.get(2).is_some_and(|h| h.trim().starts_with("im"));
    let mut xs = Vec::new();
    let mut values = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::io(path.display(), e))?;
        let field = |i: usize| -> Result<f64, CliError> {
            let raw = record.get(i).unwrap_or("").trim();
            raw.parse().map_err(|_| {
                CliError::Config(format!(
                    "--input {}: row {}: column {} is not a number: {raw:?}",
                    path.display(),
                    line + 2,
                    i + 1
                ))
            })
        };
        xs.push(field(0)?);
        let im = if has_im { field(2)? } else { 0.0 };
        values.push(Complex64::new(field(1)?, im));
    }
    signal_on_inferred_grid(&xs, values).map_err(|e| CliError::Config(format!("--input {}: {e}", path.display())))
}

/// Recovers the grid from uniformly spaced abscissae.
pub fn signal_on_inferred_grid(xs: &[f64], values: Vec<Complex64>) -> Result<SampledSignal, String> {
    let n = xs.len();
    if n < 2 {
        return Err(format!("{n} samples are too few"));
    }
    let dx = (xs[n - 1] - xs[0]) / (n - 1) as f64;
    let tol = 1e-3 * dx.abs();
    for (j, &x) in xs.iter().enumerate() {
        if (x - (xs[0] + j as f64 * dx)).abs() > tol {
            return Err(format!("x is not uniformly spaced near x = {x}"));
        }
    }
    let grid = Grid::new(xs[0], xs[0] + n as f64 * dx, n).map_err(|e| e.to_string())?;
    SampledSignal::new(grid, values).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(0.6913673390362935), "6.91367339e-1");
        assert_eq!(fmt_num(-4.0), "-4.00000000e0");
        assert_eq!(fmt_num(0.0), "0.00000000e0");
        assert_eq!(round9(1.23456789012), 1.23456789);
    }

    #[test]
    fn headers() {
        let c = |a| Curve::new(Some(a), vec![0.0], &[Complex64::new(1.0, 2.0)]);
        assert_eq!(Table::from_curves("x", &[c(0.5)]).header, ["x", "re", "im"]);
        assert_eq!(
            Table::from_curves("x", &[c(0.0), c(0.02)]).header,
            ["x", "re_0", "im_0", "re_0.02", "im_0.02"]
        );
    }

    #[test]
    fn grid_inference() {
        let xs: Vec<f64> = (0..16).map(|j| -8.0 + j as f64).collect();
        let s = signal_on_inferred_grid(&xs, vec![Complex64::new(0.0, 0.0); 16]).unwrap();
        assert_eq!((s.grid().x_min(), s.grid().x_max(), s.grid().len()), (-8.0, 8.0, 16));
        assert!(signal_on_inferred_grid(&xs[..12], vec![Complex64::new(0.0, 0.0); 12]).is_err());
        let mut bent = xs.clone();
        bent[3] += 0.1;
        assert!(signal_on_inferred_grid(&bent, vec![Complex64::new(0.0, 0.0); 16]).is_err());
    }
}
