//! JSON description of a limit curve for `ec limit`:
//!
//! ```json
//! {"q": 101, "a": 7, "b": 4, "e": [x, y], "alpha": [3, 0, 0],
//!  "points": [[0, [x, y]], [0, [x, y]], [0, "inf"]], "target_sum": [x, y]}
//! ```
//!
//! Points are `[x, y]` or `"inf"`; `points` lists `(level, base point)` pairs.

use serde::Deserialize;

use severi_bn::elliptic::Point;

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum PointSpec {
    Affine([u64; 2]),
    Named(String),
}

impl PointSpec {
    pub fn to_point(&self) -> Result<Point, CliError> {
        match self {
            PointSpec::Affine([x, y]) => Ok(Point::affine(*x, *y)),
            PointSpec::Named(s) if s == "inf" => Ok(Point::Infinity),
            PointSpec::Named(s) => Err(CliError::Input(format!("bad point '{s}', expected [x, y] or \"inf\""))),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub q: u64,
    pub a: u64,
    pub b: u64,
    pub e: PointSpec,
    pub alpha: Vec<u64>,
    pub points: Vec<(usize, PointSpec)>,
    pub target_sum: PointSpec,
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("curve file: {e}")))
    }

    /// Base points grouped by level, in file order within each level.
    pub fn levels(&self) -> Result<Vec<Vec<Point>>, CliError> {
        let n = self.alpha.len();
        let mut levels = vec![Vec::new(); n];
        for (level, spec) in &self.points {
            let slot = levels
                .get_mut(*level)
                .ok_or_else(|| CliError::Input(format!("level {level} out of range for alpha of length {n}")))?;
            slot.push(spec.to_point()?);
        }
        Ok(levels)
    }
}
