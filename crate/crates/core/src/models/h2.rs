//! Upper-half-plane layer for H²: geodesics as unordered pairs of
//! boundary points, crossing and distance predicates via projective
//! cross-ratios, and exact conversion to and from the hyperboloid
//! model (including the induced `SL(2,R) → SO(2,1)` homomorphism).

use nalgebra::{DMatrix, Matrix2};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::models::hyperboloid::{HPoint, Isometry, CHECK_TOL};
use crate::types::{Length, Width};

/// A point of ∂H² in the upper-half-plane model: a real number or the
/// point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPoint {
    Finite(f64),
    Infinity,
}

impl BoundaryPoint {
    /// Projective coordinates `(x : w)`: `(x : 1)` for finite points,
    /// `(1 : 0)` at infinity.
    fn projective(self) -> (f64, f64) {
        match self {
            BoundaryPoint::Finite(x) => (x, 1.0),
            BoundaryPoint::Infinity => (1.0, 0.0),
        }
    }

    /// Same boundary point within a relative tolerance.
    pub fn approx_eq(self, other: BoundaryPoint, tol: f64) -> bool {
        match (self, other) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => true,
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => {
                (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
            }
            _ => false,
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Finite(x) => write!(f, "{x}"),
            BoundaryPoint::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for BoundaryPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BoundaryPoint::Finite(x) => s.serialize_f64(*x),
            BoundaryPoint::Infinity => s.serialize_str("inf"),
        }
    }
}

struct BoundaryPointVisitor;

impl Visitor<'_> for BoundaryPointVisitor {
    type Value = BoundaryPoint;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a real number or \"inf\"")
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<BoundaryPoint, E> {
        if v.is_finite() {
            Ok(BoundaryPoint::Finite(v))
        } else {
            Err(E::custom("non-finite boundary coordinate"))
        }
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<BoundaryPoint, E> {
        Ok(BoundaryPoint::Finite(v as f64))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<BoundaryPoint, E> {
        Ok(BoundaryPoint::Finite(v as f64))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<BoundaryPoint, E> {
        match v {
            "inf" => Ok(BoundaryPoint::Infinity),
            other => Err(E::custom(format!("expected a number or \"inf\", got {other:?}"))),
        }
    }
}

impl<'de> Deserialize<'de> for BoundaryPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(BoundaryPointVisitor)
    }
}

/// A complete geodesic of H², named by its two distinct ideal
/// endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeodesicH2 {
    pub a: BoundaryPoint,
    pub b: BoundaryPoint,
}

impl GeodesicH2 {
    pub fn new(a: BoundaryPoint, b: BoundaryPoint) -> Result<Self> {
        if a.approx_eq(b, CHECK_TOL) {
            return Err(Error::InvalidInput(format!(
                "geodesic endpoints must be distinct, got {a} and {b}"
            )));
        }
        Ok(GeodesicH2 { a, b })
    }

    pub fn endpoints(&self) -> (BoundaryPoint, BoundaryPoint) {
        (self.a, self.b)
    }

    /// Unordered endpoint comparison within a tolerance.
    pub fn same_unordered(&self, other: &GeodesicH2, tol: f64) -> bool {
        (self.a.approx_eq(other.a, tol) && self.b.approx_eq(other.b, tol))
            || (self.a.approx_eq(other.b, tol) && self.b.approx_eq(other.a, tol))
    }
}

/// Determinant `x_p w_q − x_q w_p` of two projective boundary points;
/// zero iff they coincide.
fn det(p: BoundaryPoint, q: BoundaryPoint) -> f64 {
    let (xp, wp) = p.projective();
    let (xq, wq) = q.projective();
    xp * wq - xq * wp
}

fn shared_endpoint(g1: &GeodesicH2, g2: &GeodesicH2) -> bool {
    g1.a.approx_eq(g2.a, CHECK_TOL)
        || g1.a.approx_eq(g2.b, CHECK_TOL)
        || g1.b.approx_eq(g2.a, CHECK_TOL)
        || g1.b.approx_eq(g2.b, CHECK_TOL)
}

/// Cross-ratio `λ = (D(c,a)·D(d,b)) / (D(c,b)·D(d,a))` of the endpoint
/// configuration `(a,b | c,d)`; negative exactly when the pairs
/// interleave on the boundary circle.
fn cross_ratio(g1: &GeodesicH2, g2: &GeodesicH2) -> f64 {
    let (a, b) = g1.endpoints();
    let (c, d) = g2.endpoints();
    (det(c, a) * det(d, b)) / (det(c, b) * det(d, a))
}

/// True iff the two geodesics cross in H² (endpoint pairs interleave).
///
/// # Errors
/// A shared endpoint is an asymptotic configuration: neither crossing
/// nor disjoint at positive distance, and rejected as such.
pub fn geodesics_cross_h2(g1: &GeodesicH2, g2: &GeodesicH2) -> Result<bool> {
    if shared_endpoint(g1, g2) {
        return Err(Error::SharedEndpoint);
    }
    Ok(cross_ratio(g1, g2) < 0.0)
}

/// Infimum distance between two geodesics: `0` for crossing pairs (by
/// convention, matching the neighborhood-intersection semantics), else
/// `2 artanh(√μ)` where `μ = min(λ, 1/λ)` for the cross-ratio `λ`.
///
/// # Errors
/// Shared endpoints are rejected as in [`geodesics_cross_h2`].
pub fn geodesic_distance_h2(g1: &GeodesicH2, g2: &GeodesicH2) -> Result<Length> {
    if shared_endpoint(g1, g2) {
        return Err(Error::SharedEndpoint);
    }
    let lambda = cross_ratio(g1, g2);
    if lambda < 0.0 {
        return Ok(Length::ZERO);
    }
    let mu = lambda.min(1.0 / lambda);
    Ok(Length::from_computed(2.0 * mu.sqrt().atanh()))
}

/// True iff the width-`d₁` neighborhood of `g₁` meets the width-`d₂`
/// neighborhood of `g₂`: the geodesics cross, or their distance is
/// strictly below `d₁ + d₂` (tangent neighborhoods do not overlap).
pub fn neighborhoods_overlap(
    g1: &GeodesicH2,
    d1: Width,
    g2: &GeodesicH2,
    d2: Width,
) -> Result<bool> {
    let dist = geodesic_distance_h2(g1, g2)?;
    Ok(dist.value() < d1.value() + d2.value())
}

/// Möbius action of `[[a,b],[c,d]]` on a boundary point:
/// `x ↦ (ax + b)/(cx + d)`, with the pole mapped to infinity and
/// `∞ ↦ a/c` (or `∞` when `c = 0`).
pub fn mobius_boundary(m: &Matrix2<f64>, p: BoundaryPoint) -> BoundaryPoint {
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    let (x, w) = p.projective();
    // projective action on (x : w)
    let num = a * x + b * w;
    let den = c * x + d * w;
    if den == 0.0 {
        BoundaryPoint::Infinity
    } else {
        let image = num / den;
        if image.is_finite() {
            BoundaryPoint::Finite(image)
        } else {
            BoundaryPoint::Infinity
        }
    }
}

/// Hyperboloid point for `z = x + iy` (`y > 0`) in the upper half
/// plane:
/// `((x² + y² − 1)/(2y), x/y, (x² + y² + 1)/(2y))`.
pub fn uhp_to_hyperboloid(x: f64, y: f64) -> Result<HPoint> {
    if !(x.is_finite() && y.is_finite() && y > 0.0) {
        return Err(Error::InvalidPoint(format!(
            "upper-half-plane points need finite x and y > 0, got ({x}, {y})"
        )));
    }
    let n = x * x + y * y;
    HPoint::new(vec![(n - 1.0) / (2.0 * y), x / y, (n + 1.0) / (2.0 * y)])
}

/// Inverse of [`uhp_to_hyperboloid`]: `y = 1/(T − X)`, `x = Y/(T − X)`.
pub fn hyperboloid_to_uhp(p: &HPoint) -> Result<(f64, f64)> {
    let c = p.vector().coords();
    if c.len() != 3 {
        return Err(Error::DimensionMismatch(
            "upper-half-plane conversion is specific to H²".into(),
        ));
    }
    let denom = c[2] - c[0];
    if denom <= 0.0 {
        return Err(Error::InvalidPoint(
            "point is too close to the conversion's ideal point".into(),
        ));
    }
    Ok((c[1] / denom, 1.0 / denom))
}

/// The isometry of the hyperboloid model induced by `M ∈ SL(2,R)`
/// acting on the upper half plane, via the symmetric-matrix model
/// `S ↦ M S Mᵀ` with coordinates `X = (S₁₁ − S₂₂)/2`, `Y = S₁₂`,
/// `T = (S₁₁ + S₂₂)/2`.
pub fn sl2_to_so21(m: &Matrix2<f64>) -> Result<Isometry> {
    let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
    if (det - 1.0).abs() > CHECK_TOL {
        return Err(Error::InvalidInput(format!(
            "matrix must have determinant 1, got {det}"
        )));
    }
    // push the basis S_X = diag(1,−1), S_Y = offdiag(1,1), S_T = I
    // through S ↦ M S Mᵀ and read back (X, Y, T) coordinates
    let push = |s11: f64, s12: f64, s22: f64| -> (f64, f64, f64) {
        let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
        // M S has rows (a·s11 + b·s12, a·s12 + b·s22; c·s11 + d·s12, c·s12 + d·s22)
        let p11 = a * s11 + b * s12;
        let p12 = a * s12 + b * s22;
        let p21 = c * s11 + d * s12;
        let p22 = c * s12 + d * s22;
        // (M S) Mᵀ
        let q11 = p11 * a + p12 * b;
        let q12 = p11 * c + p12 * d;
        let q22 = p21 * c + p22 * d;
        ((q11 - q22) / 2.0, q12, (q11 + q22) / 2.0)
    };
    let (xx, yx, tx) = push(1.0, 0.0, -1.0);
    let (xy, yy, ty) = push(0.0, 1.0, 0.0);
    let (xt, yt, tt) = push(1.0, 0.0, 1.0);
    let mat = DMatrix::from_row_slice(3, 3, &[xx, xy, xt, yx, yy, yt, tx, ty, tt]);
    Isometry::new(mat)
}
