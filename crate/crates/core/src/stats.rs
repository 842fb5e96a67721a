//! Descriptive statistics used to compare generators, plus bifurcation data.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_BINS: usize = 10;

pub fn mean(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(values.iter().sum::<f64>() / values.len() as f64)
}

/// Population standard deviation, `sqrt(Σ(x − μ)² / N)`.
pub fn std_dev(values: &[f64]) -> Result<f64> {
    let mu = mean(values)?;
    let ss: f64 = values.iter().map(|x| (x - mu) * (x - mu)).sum();
    Ok((ss / values.len() as f64).sqrt())
}

/// Least-squares line `value ≈ intercept + slope · i` over 1-based indices.
pub fn lsrl(values: &[f64]) -> Result<(f64, f64)> {
    let n = values.len();
    if n < 2 {
        return Err(Error::TooShort { needed: 2, got: n });
    }
    let nf = n as f64;
    let x_mean = (nf + 1.0) / 2.0;
    let y_mean = mean(values)?;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    for (i, y) in values.iter().enumerate() {
        let dx = (i + 1) as f64 - x_mean;
        sxy += dx * (y - y_mean);
        sxx += dx * dx;
    }
    let slope = sxy / sxx;
    Ok((y_mean - slope * x_mean, slope))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bin {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

/// Equal-width bins over `[0, 1]`; `1.0` lands in the last bin.
pub fn histogram(values: &[f64], bins: usize) -> Result<Vec<Bin>> {
    if bins == 0 {
        return Err(Error::ZeroBins);
    }
    let mut counts = vec![0usize; bins];
    for &v in values {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::Domain {
                name: "histogram value",
                value: v,
            });
        }
        let k = ((v * bins as f64) as usize).min(bins - 1);
        counts[k] += 1;
    }
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(i, count)| Bin {
            lo: i as f64 / bins as f64,
            hi: (i + 1) as f64 / bins as f64,
            count,
        })
        .collect())
}

/// Pearson correlation coefficient, clamped to `[-1, 1]`.
pub fn correlation(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    if a.len() < 2 {
        return Err(Error::TooShort {
            needed: 2,
            got: a.len(),
        });
    }
    let ma = mean(a)?;
    let mb = mean(b)?;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        let (dx, dy) = (x - ma, y - mb);
        sab += dx * dy;
        saa += dx * dx;
        sbb += dy * dy;
    }
    if saa == 0.0 || sbb == 0.0 {
        return Err(Error::ZeroVariance);
    }
    Ok((sab / (saa.sqrt() * sbb.sqrt())).clamp(-1.0, 1.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub count: usize,
    pub mean: f64,
    pub std_dev: f64,
    pub histogram: Vec<Bin>,
    pub lsrl_intercept: f64,
    pub lsrl_slope: f64,
}

impl StatsReport {
    pub fn compute(values: &[f64], bins: usize) -> Result<Self> {
        let (lsrl_intercept, lsrl_slope) = lsrl(values)?;
        Ok(Self {
            count: values.len(),
            mean: mean(values)?,
            std_dev: std_dev(values)?,
            histogram: histogram(values, bins)?,
            lsrl_intercept,
            lsrl_slope,
        })
    }

    /// `(metric name, value)` pairs in a fixed order, one per CSV row.
    pub fn metric_rows(&self) -> Vec<(String, String)> {
        let mut rows = vec![
            ("count".to_string(), self.count.to_string()),
            ("mean".to_string(), self.mean.to_string()),
            ("std_dev".to_string(), self.std_dev.to_string()),
            (
                "lsrl_intercept".to_string(),
                self.lsrl_intercept.to_string(),
            ),
            ("lsrl_slope".to_string(), self.lsrl_slope.to_string()),
        ];
        let last = self.histogram.len().saturating_sub(1);
        rows.extend(self.histogram.iter().enumerate().map(|(i, b)| {
            let close = if i == last { ']' } else { ')' };
            (
                format!("hist[{}-{}{close}", b.lo, b.hi),
                b.count.to_string(),
            )
        }));
        rows
    }
}

/// Writes reports side by side: a `metric,<name>...` header then one row per metric.
///
/// All reports must share a bin count.
pub fn write_comparison_csv<W: Write>(out: W, reports: &[(&str, &StatsReport)]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["metric"];
    header.extend(reports.iter().map(|(name, _)| *name));
    w.write_record(&header)?;
    let columns: Vec<Vec<(String, String)>> =
        reports.iter().map(|(_, r)| r.metric_rows()).collect();
    let rows = columns.first().map_or(0, Vec::len);
    for i in 0..rows {
        let mut record = vec![columns[0][i].0.clone()];
        for col in &columns {
            record.push(col.get(i).map(|(_, v)| v.clone()).unwrap_or_default());
        }
        w.write_record(&record)?;
    }
    w.flush().map_err(|e| Error::Csv(e.to_string()))?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BifurcationConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub r_steps: usize,
    pub settle: usize,
    pub samples: usize,
    pub x0: f64,
}

impl Default for BifurcationConfig {
    fn default() -> Self {
        Self {
            r_min: 2.5,
            r_max: 4.0,
            r_steps: 1000,
            settle: 500,
            samples: 200,
            x0: 0.5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BifurcationPoint {
    pub r: f64,
    pub attractor_samples: Vec<f64>,
}

/// Long-run orbit samples for `r_steps` evenly spaced parameters, each
/// restarted from `x0`. A single step samples `r_min` only.
pub fn bifurcation_data(cfg: &BifurcationConfig) -> Result<Vec<BifurcationPoint>> {
    let BifurcationConfig {
        r_min,
        r_max,
        r_steps,
        settle,
        samples,
        x0,
    } = *cfg;
    if !(0.0 <= r_min && r_min < r_max && r_max <= 4.0) {
        return Err(Error::BifurcationRange(format!(
            "need 0 <= r_min < r_max <= 4, got [{r_min}, {r_max}]"
        )));
    }
    if r_steps == 0 {
        return Err(Error::BifurcationRange("r_steps must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&x0) {
        return Err(Error::Domain {
            name: "x0",
            value: x0,
        });
    }
    let spacing = if r_steps > 1 {
        (r_max - r_min) / (r_steps - 1) as f64
    } else {
        0.0
    };
    Ok((0..r_steps)
        .into_par_iter()
        .map(|i| {
            let r = if i + 1 == r_steps && r_steps > 1 {
                r_max
            } else {
                r_min + i as f64 * spacing
            };
            attractor_at(r, x0, settle, samples)
        })
        .collect())
}

/// Samples the orbit at a single parameter value.
pub fn attractor_at(r: f64, x0: f64, settle: usize, samples: usize) -> BifurcationPoint {
    let mut x = x0;
    for _ in 0..settle {
        x = (r * x) * (1.0 - x);
    }
    let attractor_samples = (0..samples)
        .map(|_| {
            x = (r * x) * (1.0 - x);
            x
        })
        .collect();
    BifurcationPoint {
        r,
        attractor_samples,
    }
}

/// `r,x` rows, one per sample.
pub fn write_bifurcation_csv<W: Write>(out: W, points: &[BifurcationPoint]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["r", "x"])?;
    for p in points {
        for x in &p.attractor_samples {
            w.write_record([p.r.to_string(), x.to_string()])?;
        }
    }
    w.flush().map_err(|e| Error::Csv(e.to_string()))?;
    Ok(())
}

/// Number of values that differ pairwise by more than `resolution`.
pub fn distinct_count(values: &[f64], resolution: f64) -> usize {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut count = 0;
    let mut last: Option<f64> = None;
    for v in sorted {
        if last.is_none_or(|l| v - l > resolution) {
            count += 1;
            last = Some(v);
        }
    }
    count
}
