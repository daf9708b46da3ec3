//! Tables of zero ordinates: loading, validation and the default location.

use super::rs::{siegel_theta, z_euler_maclaurin};
use super::EvalConfig;
use crate::error::{Error, Result};
use crate::numeric::brent;
use std::path::{Path, PathBuf};

/// Environment variable naming the ζ-zeros file.
pub const ZEROS_ENV: &str = "SLB_ZEROS_PATH";

/// Ordinate of the first zero of `ζ`.
pub const FIRST_ZETA_ZERO: f64 = 14.134_725_141_734_693;

/// Relative slack allowed between the count and the zero-counting main term.
const DENSITY_SLACK: f64 = 0.05;

/// Positive ordinates γ of zeros `½ ± iγ`, strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroDataset {
    pub ordinates: Vec<f64>,
    pub max_height: f64,
    pub source_tag: String,
}

/// Smooth part `θ(T)/π + 1` of the zero-counting function of `ζ`.
pub fn zeta_zero_count_main(t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    siegel_theta(t) / std::f64::consts::PI + 1.0
}

impl ZeroDataset {
    pub fn from_ordinates(ordinates: Vec<f64>, source_tag: impl Into<String>) -> Result<Self> {
        if ordinates.is_empty() {
            return Err(Error::EmptyDataset);
        }
        for (i, w) in ordinates.windows(2).enumerate() {
            if !(w[1] > w[0]) {
                return Err(Error::NotMonotone(i + 2));
            }
        }
        if !(ordinates[0] > 0.0) {
            return Err(Error::ParseError(format!("ordinate {} is not positive", ordinates[0])));
        }
        let max_height = *ordinates.last().expect("nonempty");
        Ok(Self { ordinates, max_height, source_tag: source_tag.into() })
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// The first `n` ordinates (or all of them).
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.min(self.len()).max(1);
        Self {
            ordinates: self.ordinates[..n].to_vec(),
            max_height: self.ordinates[n - 1],
            source_tag: self.source_tag.clone(),
        }
    }

    /// Ordinates up to height `h`.
    pub fn up_to(&self, h: f64) -> Result<Self> {
        let n = self.ordinates.partition_point(|&g| g <= h);
        if n == 0 {
            return Err(Error::EmptyDataset);
        }
        Ok(self.truncated(n))
    }

    /// Checks the count against the ζ zero-counting main term, and the first
    /// ordinate when the table starts at the bottom.
    pub fn check_zeta_density(&self) -> Result<()> {
        let first = self.ordinates[0];
        if first < 20.0 && (first - FIRST_ZETA_ZERO).abs() > 1e-3 {
            return Err(Error::DensityImplausible(format!("first ordinate {first} is not the first ζ zero")));
        }
        let lo = if first < 20.0 { 0.0 } else { first };
        let expected = zeta_zero_count_main(self.max_height) - if lo > 0.0 { zeta_zero_count_main(lo) } else { 0.0 };
        let have = if lo > 0.0 { (self.len() - 1) as f64 } else { self.len() as f64 };
        if (have - expected).abs() > DENSITY_SLACK * expected + 3.0 {
            return Err(Error::DensityImplausible(format!(
                "{have} ordinates up to {} but the counting function gives {expected:.1}",
                self.max_height
            )));
        }
        Ok(())
    }

    /// Re-locates the first `k` ordinates as sign changes of `Z` and returns
    /// the largest correction.
    pub fn refine_first(&self, k: usize, cfg: &EvalConfig) -> Result<f64> {
        let mut worst: f64 = 0.0;
        for &g in self.ordinates.iter().take(k) {
            let h = 1e-6 * g.max(1.0);
            let f = |t: f64| z_euler_maclaurin(t, cfg).unwrap_or(f64::NAN);
            let root = brent(f, g - h, g + h, 1e-14 * g)?;
            worst = worst.max((root - g).abs());
        }
        Ok(worst)
    }
}

/// Parses a zeros file: one positive ordinate per line, blank lines and `#`
/// comments ignored.
pub fn parse_zeros(text: &str, source_tag: &str) -> Result<ZeroDataset> {
    let mut ordinates = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: f64 = line.parse().map_err(|_| Error::ParseError(format!("line {}: `{line}`", i + 1)))?;
        if let Some(&prev) = ordinates.last() {
            if !(v > prev) {
                return Err(Error::NotMonotone(i + 1));
            }
        }
        ordinates.push(v);
    }
    if ordinates.is_empty() {
        return Err(Error::ParseError("no ordinates".into()));
    }
    ZeroDataset::from_ordinates(ordinates, source_tag)
}

/// Loads and validates a ζ-zeros file.
pub fn load_zeros(path: impl AsRef<Path>) -> Result<ZeroDataset> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let ds = parse_zeros(&text, &path.display().to_string())?;
    ds.check_zeta_density()?;
    Ok(ds)
}

/// Writes ordinates in the format read by [`load_zeros`].
pub fn write_zeros(path: impl AsRef<Path>, ordinates: &[f64]) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    for g in ordinates {
        writeln!(out, "{g:.12}")?;
    }
    out.flush()?;
    Ok(())
}

/// The zeros file from `SLB_ZEROS_PATH`, else `default` when it exists.
pub fn zeros_path(default: Option<&Path>) -> Option<PathBuf> {
    if let Ok(p) = std::env::var(ZEROS_ENV) {
        if !p.is_empty() {
            return Some(PathBuf::from(p));
        }
    }
    default.filter(|p| p.exists()).map(Path::to_path_buf)
}
