//! On-disk formats: the group description file consumed by `combine`,
//! `stability`, and `trend`, the sweep input file, and the JSON
//! envelopes wrapped around emitted reports.
//!
//! Every file and every report carries `"schema": 1`. Reports re-read
//! by the tool (or by tests) deserialize back into the exact structs
//! that produced them, bit-identical in every float.

use hyptube::combination::{CombinationReport, FuchsianKind, FuchsianSubgroup};
use hyptube::models::{Hyperplane, Isometry};
use hyptube::nalgebra::{DMatrix, Matrix2};
use hyptube::stability::{StabilityReport, SurfaceGroupData, TrendBin};
use hyptube::Dimension;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Validation failure while turning a parsed file into module types.
/// Carries the field path so the diagnostic points at the offender.
#[derive(Debug)]
pub struct FieldError {
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for FieldError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

fn field_err<T>(field: impl Into<String>, message: impl std::fmt::Display) -> Result<T, FieldError> {
    Err(FieldError {
        field: field.into(),
        message: message.to_string(),
    })
}

// ---------------------------------------------------------------------------
// Group description file
// ---------------------------------------------------------------------------

/// Top-level group description. `surface` feeds the 2-dimensional
/// word/geodesic machinery (`stability`, `trend`); `subgroups` feeds
/// the combination checker (`combine`); `words` optionally names
/// geodesic classes of interest (used as the default when `stability`
/// is invoked without `--word`).
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub schema: u32,
    pub dimension: u32,
    #[serde(default)]
    pub surface: Option<SurfaceSection>,
    #[serde(default)]
    pub subgroups: Vec<SubgroupSection>,
    #[serde(default)]
    pub words: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceSection {
    pub generators: Vec<SurfaceGenerator>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceGenerator {
    /// Single lowercase letter; its uppercase form names the inverse.
    pub label: char,
    /// Row-major `[a, b, c, d]` with `ad − bc = 1`.
    pub matrix: [f64; 4],
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubgroupSection {
    /// `"cyclic_hyperbolic"` or `"general"`.
    pub kind: FuchsianKind,
    /// Spacelike hyperplane normal, `dimension + 1` coordinates.
    pub normal: Vec<f64>,
    /// One row-major `(dimension+1)²` array per generator.
    pub generators: Vec<Vec<f64>>,
}

impl GroupFile {
    pub fn check_schema(&self) -> Result<(), FieldError> {
        if self.schema != SCHEMA_VERSION {
            return field_err(
                "schema",
                format!("unsupported schema version {}, expected {SCHEMA_VERSION}", self.schema),
            );
        }
        Ok(())
    }

    /// Builds the 2-dimensional surface group, required by `stability`
    /// and `trend`.
    pub fn surface_group(&self) -> Result<SurfaceGroupData, FieldError> {
        self.check_schema()?;
        let Some(surface) = &self.surface else {
            return field_err("surface", "missing: this command needs a surface group section");
        };
        if self.dimension != 2 {
            return field_err(
                "dimension",
                format!("surface groups act on the hyperbolic plane (dimension 2), got {}", self.dimension),
            );
        }
        let entries = surface
            .generators
            .iter()
            .map(|g| {
                let [a, b, c, d] = g.matrix;
                (g.label, Matrix2::new(a, b, c, d))
            })
            .collect();
        SurfaceGroupData::new(entries).map_err(|e| FieldError {
            field: "surface.generators".into(),
            message: e.to_string(),
        })
    }

    /// Builds the hyperplane subgroups, required by `combine`.
    pub fn subgroup_pair(&self) -> Result<(FuchsianSubgroup, FuchsianSubgroup), FieldError> {
        self.check_schema()?;
        if self.subgroups.len() != 2 {
            return field_err(
                "subgroups",
                format!("the combination check needs exactly 2 subgroups, got {}", self.subgroups.len()),
            );
        }
        let dim = match Dimension::new(self.dimension) {
            Ok(d) => d,
            Err(e) => return field_err("dimension", e),
        };
        let mut built = Vec::with_capacity(2);
        for (i, sub) in self.subgroups.iter().enumerate() {
            built.push(build_subgroup(sub, dim, i)?);
        }
        let second = built.pop().expect("two pushed");
        let first = built.pop().expect("two pushed");
        Ok((first, second))
    }
}

fn build_subgroup(
    sub: &SubgroupSection,
    dim: Dimension,
    index: usize,
) -> Result<FuchsianSubgroup, FieldError> {
    let k = dim.get() as usize + 1;
    let path = format!("subgroups[{index}]");
    if sub.normal.len() != k {
        return field_err(
            format!("{path}.normal"),
            format!("expected {k} coordinates for dimension {dim}, got {}", sub.normal.len(), dim = dim.get()),
        );
    }
    let hyperplane = Hyperplane::new(sub.normal.clone())
        .map_err(|e| FieldError { field: format!("{path}.normal"), message: e.to_string() })?;
    let mut generators = Vec::with_capacity(sub.generators.len());
    for (j, flat) in sub.generators.iter().enumerate() {
        let gpath = format!("{path}.generators[{j}]");
        if flat.len() != k * k {
            return field_err(
                gpath,
                format!("expected {}×{} = {} row-major entries, got {}", k, k, k * k, flat.len()),
            );
        }
        let m = DMatrix::from_row_slice(k, k, flat);
        let iso = Isometry::new(m)
            .map_err(|e| FieldError { field: gpath, message: e.to_string() })?;
        generators.push(iso);
    }
    FuchsianSubgroup::new(hyperplane, generators, sub.kind)
        .map_err(|e| FieldError { field: path, message: e.to_string() })
}

// ---------------------------------------------------------------------------
// Sweep input file
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    /// Stable (collar) width as a function of geodesic length.
    Collar,
    /// Tube width `c_n` as a function of core area.
    TubeWidth,
    /// Ball volume as a function of radius.
    BallVolume,
    /// Tube volume as a function of core area.
    TubeVolume,
}

impl Quantity {
    /// CSV column names `(parameter, value)`.
    pub fn columns(self) -> (&'static str, &'static str) {
        match self {
            Quantity::Collar => ("length", "collar_width"),
            Quantity::TubeWidth => ("area", "tube_width"),
            Quantity::BallVolume => ("radius", "ball_volume"),
            Quantity::TubeVolume => ("area", "tube_volume"),
        }
    }

    pub fn needs_dimension(self) -> bool {
        !matches!(self, Quantity::Collar)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub scale: Scale,
}

impl Grid {
    pub fn validate(&self) -> Result<(), FieldError> {
        if !self.min.is_finite() || !self.max.is_finite() {
            return field_err("grid", "min and max must be finite");
        }
        if self.count < 2 {
            return field_err("grid.count", format!("need at least 2 points, got {}", self.count));
        }
        if self.min >= self.max {
            return field_err("grid", format!("min {} must be below max {}", self.min, self.max));
        }
        if self.scale == Scale::Log && self.min <= 0.0 {
            return field_err("grid.min", "log scale needs a strictly positive minimum");
        }
        Ok(())
    }

    /// Grid points with exact endpoints; interior points interpolate
    /// linearly in the parameter or its logarithm.
    pub fn points(&self) -> Vec<f64> {
        let n = self.count;
        (0..n)
            .map(|i| {
                if i == 0 {
                    self.min
                } else if i == n - 1 {
                    self.max
                } else {
                    let t = i as f64 / (n - 1) as f64;
                    match self.scale {
                        Scale::Linear => self.min + (self.max - self.min) * t,
                        Scale::Log => (self.min.ln() + (self.max.ln() - self.min.ln()) * t).exp(),
                    }
                }
            })
            .collect()
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepFile {
    pub schema: u32,
    pub quantity: Quantity,
    #[serde(default)]
    pub dim: Option<u32>,
    /// Tube volume only: count both sides of a two-sided hypersurface.
    #[serde(default)]
    pub two_sided: bool,
    pub grid: Grid,
    #[serde(default)]
    pub output: OutputFormat,
}

impl SweepFile {
    pub fn validate(&self) -> Result<(), FieldError> {
        if self.schema != SCHEMA_VERSION {
            return field_err(
                "schema",
                format!("unsupported schema version {}, expected {SCHEMA_VERSION}", self.schema),
            );
        }
        if self.quantity.needs_dimension() && self.dim.is_none() {
            return field_err("dim", "this quantity needs an ambient dimension");
        }
        if !self.quantity.needs_dimension() && self.dim.is_some() {
            return field_err("dim", "the collar width does not take a dimension");
        }
        if self.two_sided && self.quantity != Quantity::TubeVolume {
            return field_err("two_sided", "only tube-volume distinguishes sides");
        }
        self.grid.validate()
    }
}

// ---------------------------------------------------------------------------
// Report envelopes
// ---------------------------------------------------------------------------

/// JSON wrapper for the combination report.
#[derive(Debug, Serialize, Deserialize)]
pub struct CombineEnvelope {
    pub schema: u32,
    pub command: String,
    #[serde(flatten)]
    pub report: CombinationReport,
}

/// JSON wrapper for the stability report.
#[derive(Debug, Serialize, Deserialize)]
pub struct StabilityEnvelope {
    pub schema: u32,
    pub command: String,
    #[serde(flatten)]
    pub report: StabilityReport,
}

/// JSON wrapper for the length-versus-crossing trend table.
#[derive(Debug, Serialize, Deserialize)]
pub struct TrendEnvelope {
    pub schema: u32,
    pub command: String,
    pub max_word_length: usize,
    pub truncation_depth: usize,
    pub bins: Vec<TrendBin>,
}

/// JSON form of a sweep (when the sweep file selects `"output": "json"`).
#[derive(Debug, Serialize, Deserialize)]
pub struct SweepEnvelope {
    pub schema: u32,
    pub command: String,
    pub quantity: Quantity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<u32>,
    pub two_sided: bool,
    pub grid: Grid,
    /// `(parameter, value)` rows in grid order.
    pub rows: Vec<(f64, f64)>,
}
