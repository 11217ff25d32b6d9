//! Hyperboloid model of H^n inside Minkowski space R^{n,1}.
//!
//! Vectors carry `n+1` coordinates with the bilinear form
//! `⟨u,v⟩ = u₁v₁ + … + u_nv_n − u_{n+1}v_{n+1}` (last coordinate
//! timelike). Points are unit timelike vectors on the upper sheet,
//! hyperplanes are unit spacelike normals up to sign, and isometries
//! are form-preserving matrices fixing the upper sheet.

use nalgebra::{DMatrix, DVector};
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::types::{Dimension, Length};

/// Tolerance for every constraint check (normalization, form
/// preservation, incidence).
pub const CHECK_TOL: f64 = 1e-9;

/// Maximum multiplicative correction accepted when renormalizing
/// user-supplied points and normals; larger corrections are rejected as
/// input errors rather than roundoff drift.
pub const CORRECTION_TOL: f64 = 1e-6;

/// Maximum drift `|⟨y,y⟩ ∓ 1|` accepted for a computed isometry image
/// before it is rejected as numerically degenerate. The drift grows
/// like `e^{2d}·eps` with the distance `d` of the image from the
/// coordinate origin, so this cap keeps roughly half the significand
/// (images out to `d ≈ 15`); beyond it, renormalization would silently
/// relocate the point instead of cleaning it up.
pub const NORM_DRIFT_TOL: f64 = 1e-3;

/// A vector of R^{n,1}, `n+1` coordinates, `2 ≤ n ≤ 20`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinkowskiVector {
    coords: DVector<f64>,
}

impl MinkowskiVector {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 3 || coords.len() > 21 {
            return Err(Error::DimensionMismatch(format!(
                "Minkowski vectors carry n+1 coordinates for ambient dimension 2 ≤ n ≤ 20, \
                 got {} coordinates",
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidInput(
                "Minkowski vector coordinates must be finite".into(),
            ));
        }
        Ok(MinkowskiVector {
            coords: DVector::from_vec(coords),
        })
    }

    /// Ambient dimension `n` (one less than the coordinate count).
    pub fn dimension(&self) -> Dimension {
        Dimension::new(self.coords.len() as u32 - 1).expect("validated on construction")
    }

    pub fn coords(&self) -> &[f64] {
        self.coords.as_slice()
    }

    pub(crate) fn from_dvector(coords: DVector<f64>) -> Self {
        MinkowskiVector { coords }
    }

    pub(crate) fn as_dvector(&self) -> &DVector<f64> {
        &self.coords
    }

    fn time_component(&self) -> f64 {
        self.coords[self.coords.len() - 1]
    }
}

impl Serialize for MinkowskiVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MinkowskiVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<f64>::deserialize(d)?;
        MinkowskiVector::new(coords).map_err(de::Error::custom)
    }
}

/// The signature-(n,1) bilinear form on two equal-dimension vectors.
pub fn minkowski_inner(u: &MinkowskiVector, v: &MinkowskiVector) -> Result<f64> {
    if u.coords.len() != v.coords.len() {
        return Err(Error::DimensionMismatch(format!(
            "inner product needs equal dimensions, got {} and {} coordinates",
            u.coords.len(),
            v.coords.len()
        )));
    }
    Ok(inner_unchecked(&u.coords, &v.coords))
}

pub(crate) fn inner_unchecked(u: &DVector<f64>, v: &DVector<f64>) -> f64 {
    let last = u.len() - 1;
    let mut acc = 0.0;
    for i in 0..last {
        acc += u[i] * v[i];
    }
    acc - u[last] * v[last]
}

/// A point of H^n: unit timelike vector (`⟨x,x⟩ = −1`) on the upper
/// sheet (positive last coordinate). Construction renormalizes and
/// rejects input needing more than [`CORRECTION_TOL`] of correction.
#[derive(Debug, Clone, PartialEq)]
pub struct HPoint {
    v: MinkowskiVector,
}

impl HPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        let v = MinkowskiVector::new(coords)?;
        let q = inner_unchecked(&v.coords, &v.coords);
        if q >= 0.0 {
            return Err(Error::InvalidPoint(format!(
                "point vector must be timelike, got ⟨x,x⟩ = {q}"
            )));
        }
        let scale = 1.0 / (-q).sqrt();
        if (scale - 1.0).abs() > CORRECTION_TOL {
            return Err(Error::InvalidPoint(format!(
                "point vector needs renormalization by {scale:.3e}, beyond the accepted \
                 correction {CORRECTION_TOL:e}"
            )));
        }
        if v.time_component() <= 0.0 {
            return Err(Error::InvalidPoint(
                "point must lie on the upper sheet (positive last coordinate)".into(),
            ));
        }
        Ok(HPoint {
            v: MinkowskiVector::from_dvector(v.coords * scale),
        })
    }

    /// Renormalizes a computed vector onto the upper sheet without the
    /// user-input correction cap; fails only if the vector is not
    /// timelike-future at all (numerical degeneration).
    pub(crate) fn renormalize(coords: DVector<f64>) -> Result<Self> {
        let q = inner_unchecked(&coords, &coords);
        // NaN must land in the error branch too
        if q.is_nan() || q >= 0.0 {
            return Err(Error::InvalidPoint(format!(
                "computed point degenerated off the hyperboloid (⟨x,x⟩ = {q}); \
                 inputs are too extreme for double precision"
            )));
        }
        let scaled = coords / (-q).sqrt();
        if scaled[scaled.len() - 1] <= 0.0 {
            return Err(Error::InvalidPoint(
                "computed point left the upper sheet".into(),
            ));
        }
        Ok(HPoint {
            v: MinkowskiVector::from_dvector(scaled),
        })
    }

    pub fn vector(&self) -> &MinkowskiVector {
        &self.v
    }

    pub fn dimension(&self) -> Dimension {
        self.v.dimension()
    }

    /// The model origin `(0, …, 0, 1)`.
    pub fn origin(n: Dimension) -> Self {
        let mut coords = DVector::zeros(n.get() as usize + 1);
        coords[n.get() as usize] = 1.0;
        HPoint {
            v: MinkowskiVector::from_dvector(coords),
        }
    }
}

impl Serialize for HPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<f64>::deserialize(d)?;
        HPoint::new(coords).map_err(de::Error::custom)
    }
}

/// A hyperbolic hyperplane, represented by a unit spacelike normal
/// (`⟨u,u⟩ = +1`), defined up to sign. Construction renormalizes under
/// the same correction cap as [`HPoint`].
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    normal: MinkowskiVector,
}

impl Hyperplane {
    pub fn new(normal: Vec<f64>) -> Result<Self> {
        let v = MinkowskiVector::new(normal)?;
        let q = inner_unchecked(&v.coords, &v.coords);
        if q <= 0.0 {
            return Err(Error::InvalidHyperplane(format!(
                "hyperplane normal must be spacelike, got ⟨u,u⟩ = {q}"
            )));
        }
        let scale = 1.0 / q.sqrt();
        if (scale - 1.0).abs() > CORRECTION_TOL {
            return Err(Error::InvalidHyperplane(format!(
                "normal needs renormalization by {scale:.3e}, beyond the accepted \
                 correction {CORRECTION_TOL:e}"
            )));
        }
        Ok(Hyperplane {
            normal: MinkowskiVector::from_dvector(v.coords * scale),
        })
    }

    pub(crate) fn renormalize(coords: DVector<f64>) -> Result<Self> {
        let q = inner_unchecked(&coords, &coords);
        // NaN must land in the error branch too
        if q.is_nan() || q <= 0.0 {
            return Err(Error::InvalidHyperplane(format!(
                "computed normal degenerated (⟨u,u⟩ = {q})"
            )));
        }
        Ok(Hyperplane {
            normal: MinkowskiVector::from_dvector(coords / q.sqrt()),
        })
    }

    pub fn normal(&self) -> &MinkowskiVector {
        &self.normal
    }

    pub fn dimension(&self) -> Dimension {
        self.normal.dimension()
    }

    /// True if `p` lies on the hyperplane within [`CHECK_TOL`].
    pub fn contains(&self, p: &HPoint) -> bool {
        inner_unchecked(&self.normal.coords, &p.v.coords).abs() <= CHECK_TOL
    }
}

impl Serialize for Hyperplane {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.normal.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hyperplane {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<f64>::deserialize(d)?;
        Hyperplane::new(coords).map_err(de::Error::custom)
    }
}

/// An isometry of H^n: an `(n+1)×(n+1)` matrix `M` with `MᵀJM = J`
/// (`J = diag(1,…,1,−1)`) preserving the upper sheet.
#[derive(Debug, Clone, PartialEq)]
pub struct Isometry {
    m: DMatrix<f64>,
}

impl Isometry {
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        if !m.is_square() || m.nrows() < 3 || m.nrows() > 21 {
            return Err(Error::DimensionMismatch(format!(
                "isometries are (n+1)×(n+1) matrices for 2 ≤ n ≤ 20, got {}×{}",
                m.nrows(),
                m.ncols()
            )));
        }
        if m.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidIsometry(
                "matrix entries must be finite".into(),
            ));
        }
        let defect = form_defect(&m);
        if defect > CHECK_TOL {
            return Err(Error::InvalidIsometry(format!(
                "matrix does not preserve the Minkowski form: max |MᵀJM − J| = {defect:.3e} \
                 exceeds {CHECK_TOL:e}"
            )));
        }
        let k = m.nrows() - 1;
        if m[(k, k)] <= 0.0 {
            return Err(Error::InvalidIsometry(
                "matrix must preserve the upper sheet (positive bottom-right entry)".into(),
            ));
        }
        Ok(Isometry { m })
    }

    /// Builds from a row-major flat array of `size × size` entries.
    pub fn from_row_major(size: usize, data: &[f64]) -> Result<Self> {
        if data.len() != size * size {
            return Err(Error::DimensionMismatch(format!(
                "expected {}×{} = {} entries, got {}",
                size,
                size,
                size * size,
                data.len()
            )));
        }
        Isometry::new(DMatrix::from_row_slice(size, size, data))
    }

    pub fn identity(n: Dimension) -> Self {
        Isometry {
            m: DMatrix::identity(n.get() as usize + 1, n.get() as usize + 1),
        }
    }

    /// Hyperbolic translation by `s` along the geodesic through the
    /// origin in the `axis`-th spatial direction (0-based).
    pub fn boost(n: Dimension, axis: usize, s: f64) -> Result<Self> {
        let size = n.get() as usize + 1;
        if axis >= size - 1 {
            return Err(Error::DimensionMismatch(format!(
                "boost axis {axis} out of range for dimension {n}"
            )));
        }
        if !s.is_finite() {
            return Err(Error::InvalidInput("boost parameter must be finite".into()));
        }
        let mut m = DMatrix::identity(size, size);
        let t = size - 1;
        m[(axis, axis)] = s.cosh();
        m[(axis, t)] = s.sinh();
        m[(t, axis)] = s.sinh();
        m[(t, t)] = s.cosh();
        Ok(Isometry { m })
    }

    /// Rotation by `theta` in the spatial `(i, j)` plane (0-based).
    pub fn rotation(n: Dimension, i: usize, j: usize, theta: f64) -> Result<Self> {
        let size = n.get() as usize + 1;
        if i >= size - 1 || j >= size - 1 || i == j {
            return Err(Error::DimensionMismatch(format!(
                "rotation plane ({i}, {j}) invalid for dimension {n}"
            )));
        }
        if !theta.is_finite() {
            return Err(Error::InvalidInput(
                "rotation angle must be finite".into(),
            ));
        }
        let mut m = DMatrix::identity(size, size);
        m[(i, i)] = theta.cos();
        m[(i, j)] = -theta.sin();
        m[(j, i)] = theta.sin();
        m[(j, j)] = theta.cos();
        Ok(Isometry { m })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn dimension(&self) -> Dimension {
        Dimension::new(self.m.nrows() as u32 - 1).expect("validated on construction")
    }

    /// Applies the isometry to a point, renormalizing the result.
    ///
    /// # Errors
    /// Fails only when accumulated roundoff pushes the image off the
    /// hyperboloid entirely (extremely distant orbit points).
    pub fn apply(&self, p: &HPoint) -> Result<HPoint> {
        let image = &self.m * p.v.as_dvector();
        let q = inner_unchecked(&image, &image);
        if (q + 1.0).abs() > NORM_DRIFT_TOL {
            return Err(Error::InvalidPoint(format!(
                "image lost the unit normalization (⟨y,y⟩ = {q:.3e}): the orbit \
                 point is too far from the coordinate origin for double precision"
            )));
        }
        HPoint::renormalize(image)
    }

    /// Applies the isometry to a hyperplane normal.
    pub fn apply_hyperplane(&self, h: &Hyperplane) -> Result<Hyperplane> {
        let image = &self.m * h.normal.as_dvector();
        let q = inner_unchecked(&image, &image);
        if (q - 1.0).abs() > NORM_DRIFT_TOL {
            return Err(Error::InvalidHyperplane(format!(
                "image normal lost the unit normalization (⟨v,v⟩ = {q:.3e}): the \
                 hyperplane is too far from the coordinate origin for double precision"
            )));
        }
        Hyperplane::renormalize(image)
    }

    /// Composition `self ∘ other`. Products of validated isometries are
    /// trusted without re-validation: long words drift in norm beyond
    /// any fixed tolerance even though each factor is exact.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            m: &self.m * &other.m,
        }
    }

    /// Exact inverse `J Mᵀ J` — no linear solve, so no extra roundoff.
    pub fn inverse(&self) -> Isometry {
        let k = self.m.nrows() - 1;
        let mut inv = self.m.transpose();
        for i in 0..k {
            inv[(i, k)] = -inv[(i, k)];
            inv[(k, i)] = -inv[(k, i)];
        }
        Isometry { m: inv }
    }

    /// Max-norm distance from the identity matrix.
    pub fn identity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.m.nrows() {
            for j in 0..self.m.ncols() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((self.m[(i, j)] - target).abs());
            }
        }
        worst
    }
}

/// Max entry of `|MᵀJM − J|`.
fn form_defect(m: &DMatrix<f64>) -> f64 {
    let k = m.nrows() - 1;
    let mut jm = m.clone();
    for c in 0..m.ncols() {
        jm[(k, c)] = -jm[(k, c)];
    }
    let g = m.transpose() * jm; // = MᵀJM
    let mut worst: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let target = if i == j {
                if i == k {
                    -1.0
                } else {
                    1.0
                }
            } else {
                0.0
            };
            worst = worst.max((g[(i, j)] - target).abs());
        }
    }
    worst
}

/// Distance between two points, computed from the Minkowski norm of
/// the difference vector via `⟨p−q, p−q⟩ = 4 sinh²(d/2)`.
///
/// Unlike `arccosh(−⟨p,q⟩)`, this form keeps full precision for
/// near-coincident points: the arccosh of `1 + ε` already carries a
/// `√ε` error, so even bit-identical inputs would come out at
/// distance ≈ 1e−8. Here identical inputs give exactly zero.
///
/// Either way the absolute accuracy degrades like `e^{2d}·eps` with
/// the distance `d` of the farther input from the coordinate origin —
/// inherent to hyperboloid coordinates, whose entries grow like
/// `cosh d`.
pub fn point_distance(p: &HPoint, q: &HPoint) -> Result<Length> {
    let c = -minkowski_inner(&p.v, &q.v)?;
    if c < 1.0 - CHECK_TOL {
        return Err(Error::InvalidPoint(format!(
            "−⟨p,q⟩ = {c} < 1: inputs are not valid points of the same hyperboloid"
        )));
    }
    let diff = &p.v.coords - &q.v.coords;
    let m2 = inner_unchecked(&diff, &diff).max(0.0);
    Ok(Length::from_computed(2.0 * (0.5 * m2.sqrt()).asinh()))
}

/// Relative position of two hyperplanes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", content = "distance", rename_all = "snake_case")]
pub enum HyperplaneSeparation {
    /// Normals with `|⟨u₁,u₂⟩| < 1`: the hyperplanes meet in H^n.
    Intersecting,
    /// `|⟨u₁,u₂⟩| = 1` within [`CHECK_TOL`]: tangent at infinity.
    Asymptotic,
    /// `|⟨u₁,u₂⟩| > 1`: disjoint with a unique common perpendicular of
    /// this length.
    Ultraparallel(Length),
}

impl HyperplaneSeparation {
    pub fn name(&self) -> &'static str {
        match self {
            HyperplaneSeparation::Intersecting => "intersecting",
            HyperplaneSeparation::Asymptotic => "asymptotic",
            HyperplaneSeparation::Ultraparallel(_) => "ultraparallel",
        }
    }
}

fn degenerate_pair(u1: &MinkowskiVector, u2: &MinkowskiVector) -> bool {
    let a = u1.coords();
    let b = u2.coords();
    let mut same = true;
    let mut anti = true;
    for i in 0..a.len() {
        if (a[i] - b[i]).abs() > CHECK_TOL {
            same = false;
        }
        if (a[i] + b[i]).abs() > CHECK_TOL {
            anti = false;
        }
    }
    same || anti
}

/// Classifies the pair of hyperplanes by `c = |⟨u₁,u₂⟩|`: intersecting
/// (`c < 1`), asymptotic (`|c − 1| ≤` [`CHECK_TOL`]), or ultraparallel
/// with distance `arccosh(c)`. Identical or antipodal normals are
/// rejected as degenerate — the distance of a hyperplane to itself is
/// never meaningful downstream.
pub fn hyperplane_distance(x1: &Hyperplane, x2: &Hyperplane) -> Result<HyperplaneSeparation> {
    let k = minkowski_inner(&x1.normal, &x2.normal)?;
    if degenerate_pair(&x1.normal, &x2.normal) {
        return Err(Error::InvalidInput(
            "hyperplanes coincide (identical or antipodal normals); \
             the pair is degenerate"
                .into(),
        ));
    }
    let c = k.abs();
    if (c - 1.0).abs() <= CHECK_TOL {
        Ok(HyperplaneSeparation::Asymptotic)
    } else if c < 1.0 {
        Ok(HyperplaneSeparation::Intersecting)
    } else {
        Ok(HyperplaneSeparation::Ultraparallel(Length::from_computed(
            c.acosh(),
        )))
    }
}

/// Feet of the unique common perpendicular between two ultraparallel
/// hyperplanes, as points `x₁ ∈ X₁`, `x₂ ∈ X₂` realizing the distance:
/// in the plane spanned by the normals, `x₁ ∝ u₂ − ⟨u₁,u₂⟩u₁` and
/// `x₂ ∝ u₁ − ⟨u₁,u₂⟩u₂`, signs fixed by the upper sheet.
pub fn common_perpendicular_feet(x1: &Hyperplane, x2: &Hyperplane) -> Result<(HPoint, HPoint)> {
    match hyperplane_distance(x1, x2)? {
        HyperplaneSeparation::Ultraparallel(_) => {}
        other => {
            return Err(Error::NoPerpendicular {
                classification: other.name().into(),
            })
        }
    }
    let k = minkowski_inner(&x1.normal, &x2.normal)?;
    let norm = (k * k - 1.0).sqrt();
    let f1 = (x2.normal.as_dvector() - k * x1.normal.as_dvector()) / norm;
    let f2 = (x1.normal.as_dvector() - k * x2.normal.as_dvector()) / norm;
    let fix = |v: DVector<f64>| -> Result<HPoint> {
        let flipped = if v[v.len() - 1] < 0.0 { -v } else { v };
        HPoint::renormalize(flipped)
    };
    Ok((fix(f1)?, fix(f2)?))
}

/// Translation length `log λ` of a loxodromic isometry, where `λ > 1`
/// is its largest-modulus eigenvalue (necessarily real positive for a
/// loxodromic).
pub fn translation_length(g: &Isometry) -> Result<Length> {
    let eigs = g.m.complex_eigenvalues();
    let mut best = eigs[0];
    for e in eigs.iter() {
        if e.norm() > best.norm() {
            best = *e;
        }
    }
    let modulus = best.norm();
    if modulus <= 1.0 + CHECK_TOL {
        return Err(Error::NotLoxodromic(format!(
            "largest eigenvalue modulus {modulus} is not above 1: \
             elliptic or parabolic element"
        )));
    }
    if best.im.abs() > CHECK_TOL * modulus || best.re <= 0.0 {
        return Err(Error::NotLoxodromic(format!(
            "largest-modulus eigenvalue {best} is not real positive"
        )));
    }
    Ok(Length::from_computed(best.re.ln()))
}

/// The axis of a loxodromic isometry as its two lightlike fixed
/// vectors (eigenvectors for `e^ℓ` and `e^{−ℓ}`), scaled to time
/// component 1. The order is (expanding, contracting) — the attracting
/// and repelling ideal endpoints respectively.
pub fn loxodromic_axis(g: &Isometry) -> Result<(MinkowskiVector, MinkowskiVector)> {
    let ell = translation_length(g)?.value();
    let lambda = ell.exp();
    let p = null_eigenvector(&g.m, lambda)?;
    let q = null_eigenvector(&g.m, 1.0 / lambda)?;
    Ok((p, q))
}

/// Unit-time-component lightlike eigenvector of `m` for eigenvalue
/// `lambda`, from the smallest right singular vector of `m − λI`.
fn null_eigenvector(m: &DMatrix<f64>, lambda: f64) -> Result<MinkowskiVector> {
    let size = m.nrows();
    let shifted = m - DMatrix::<f64>::identity(size, size) * lambda;
    let svd = shifted.clone().svd(false, true);
    let v_t = svd.v_t.as_ref().expect("requested right singular vectors");
    // nalgebra sorts singular values descending; the last row of Vᵀ
    // spans the (numerical) nullspace
    let v: DVector<f64> = v_t.row(size - 1).transpose();
    let residual = (&shifted * &v).norm();
    if residual > 1e-6 * (1.0 + lambda) {
        return Err(Error::NotLoxodromic(format!(
            "eigenvector residual {residual:.3e} too large for eigenvalue {lambda}"
        )));
    }
    let t = v[size - 1];
    if t.abs() < 1e-12 {
        return Err(Error::NotLoxodromic(
            "fixed vector has vanishing time component; not a lightlike axis endpoint".into(),
        ));
    }
    let scaled = v / t;
    Ok(MinkowskiVector::from_dvector(scaled))
}

/// Distance from a point to the geodesic with lightlike ideal
/// endpoints `(p, q)`:
/// `cosh ρ = √(2⟨x,p⟩⟨x,q⟩ / (−⟨p,q⟩))`, minimized over the axis
/// parametrization in closed form.
pub fn distance_to_axis(x: &HPoint, axis: &(MinkowskiVector, MinkowskiVector)) -> Result<Length> {
    let (p, q) = axis;
    let a = -minkowski_inner(x.vector(), p)?;
    let b = -minkowski_inner(x.vector(), q)?;
    let n = -minkowski_inner(p, q)?;
    if a <= 0.0 || b <= 0.0 || n <= 0.0 {
        return Err(Error::InvalidInput(
            "axis endpoints must be future lightlike vectors distinct from each other".into(),
        ));
    }
    let cosh_rho = (2.0 * a * b / n).sqrt();
    Ok(Length::from_computed(cosh_rho.max(1.0).acosh()))
}
