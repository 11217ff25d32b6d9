//! Collar/stable widths, the tube-width function `c_n`, tube volumes
//! `𝒱_n` with their limiting behavior, and volume lower bounds for
//! 3-manifolds with cusps and totally geodesic boundary surfaces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{invert_monotone_decreasing, RootConfig};
use crate::special::{ball_volume, collar_function, cosh_power_integral};
use crate::types::{Area, Dimension, Length, Radius, Volume, Width};

/// Root-finder bracket for `tube_width`; the solved-for width always
/// lies inside `[1e−12, 60]` for representable areas in the supported
/// dimensions.
pub const TUBE_WIDTH_BRACKET: (f64, f64) = (1e-12, 60.0);

/// Widths above this are handled in log space when exponentials of the
/// width enter a product, so that huge/tiny factors cannot overflow
/// before cancelling.
const LOG_SPACE_WIDTH: f64 = 30.0;

/// A tube around a hypersurface: dimension, hypersurface area, solved
/// width, and whether the tube extends to one side only.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TubeSpec {
    n: Dimension,
    area: Area,
    width: Width,
    one_sided: bool,
}

impl TubeSpec {
    /// Solves for the width at construction time, so the invariant
    /// `width = tube_width(n, area)` always holds.
    pub fn new(n: Dimension, area: Area, one_sided: bool) -> Result<Self> {
        let width = tube_width(n, area)?;
        Ok(TubeSpec {
            n,
            area,
            width,
            one_sided,
        })
    }

    pub fn dimension(&self) -> Dimension {
        self.n
    }

    pub fn area(&self) -> Area {
        self.area
    }

    pub fn width(&self) -> Width {
        self.width
    }

    pub fn one_sided(&self) -> bool {
        self.one_sided
    }
}

/// Counts entering the volume lower bound: rank-two cusps and totally
/// geodesic boundary surfaces of a hyperbolic manifold of the given
/// dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundInputs {
    pub cusp_count: u32,
    pub surface_count: u32,
    pub dimension: Dimension,
}

/// Width `r(ℓ/2)` of the stable neighborhood (equivalently, the collar)
/// of a closed geodesic of length `ℓ > 0`.
///
/// # Errors
/// `ℓ = 0` or an infinite `ℓ` reports a domain error.
pub fn stable_width(length: Length) -> Result<Width> {
    if length.is_infinite() {
        return Err(Error::Domain(
            "stable width requires a finite positive geodesic length".into(),
        ));
    }
    if length.value() <= 0.0 {
        return Err(Error::Domain(format!(
            "stable width requires a positive geodesic length, got {length}"
        )));
    }
    collar_function(Length::from_computed(length.value() / 2.0))
}

/// The tube-width function `c_n(A) = ½(V_{n−1} ∘ r)^{−1}(A)` for
/// `n ≥ 3`: the unique `c > 0` with `V_{n−1}(r(2c)) = A`, found by
/// bracketed root-finding on that strictly decreasing map. Strictly
/// decreasing in `A`, tending to `0` as `A → ∞`.
pub fn tube_width(n: Dimension, area: Area) -> Result<Width> {
    tube_width_with_config(n, area, &RootConfig::default())
}

/// [`tube_width`] with explicit root-finder tuning.
///
/// # Errors
/// - dimension 2 is unsupported: there the natural width belongs to a
///   geodesic length, not an area — use [`stable_width`];
/// - areas so extreme that the width leaves [`TUBE_WIDTH_BRACKET`]
///   report a bracket failure;
/// - non-convergence after the configured iteration cap.
pub fn tube_width_with_config(n: Dimension, area: Area, cfg: &RootConfig) -> Result<Width> {
    if n.get() < 3 {
        return Err(Error::UnsupportedDimension {
            n: n.get(),
            why: "tube width is defined for dimension ≥ 3; in dimension 2 use \
                  stable_width of the core geodesic length"
                .into(),
        });
    }
    let lower = Dimension::new(n.get() - 1).expect("n−1 ≥ 2 in the supported range");
    let profile = |c: f64| -> Result<f64> {
        let rho = crate::special::collar_raw(2.0 * c);
        if rho == 0.0 {
            // r(2c) underflowed; the ball volume is an exact 0 and the
            // root-finder treats it as an underflowed bracket end
            return Ok(0.0);
        }
        Ok(ball_volume(lower, Length::from_computed(rho))?.value())
    };
    let c = invert_monotone_decreasing(profile, area.value(), TUBE_WIDTH_BRACKET, cfg)?;
    Ok(Width::from_computed(c))
}

/// Volume of the tubular neighborhood of width `c_n(A)` about a
/// hypersurface of area `A` (one-sided by default; the two-sided tube
/// doubles it): `𝒱_n(A) = A·∫₀^{c_n(A)} cosh^{n−1}(t) dt`.
///
/// For `n = 2` the "hypersurface" is a closed geodesic, `A` is read as
/// its length `ℓ`, and the width is the stable width `r(ℓ/2)`, giving
/// `𝒱₂(ℓ) = ℓ·sinh(r(ℓ/2)) = ℓ/sinh(ℓ/2)` — strictly decreasing from
/// `2` to `0`. For very large `ℓ` the value underflows to an exact `0`,
/// consistent with the limit.
///
/// Limits in the hypersurface area: `𝒱₃ → π` from below, `𝒱_n → ∞`
/// for `n ≥ 4`.
pub fn tube_volume(n: Dimension, area: Area, one_sided: bool) -> Result<Volume> {
    tube_volume_with_config(n, area, one_sided, &RootConfig::default())
}

/// [`tube_volume`] with explicit root-finder tuning.
pub fn tube_volume_with_config(
    n: Dimension,
    area: Area,
    one_sided: bool,
    cfg: &RootConfig,
) -> Result<Volume> {
    let sides = if one_sided { 1.0 } else { 2.0 };
    if n.get() == 2 {
        // ℓ·sinh(r(ℓ/2)) collapses exactly to ℓ/sinh(ℓ/2); evaluating
        // that form directly stays accurate over the whole input range
        let ell = area.value();
        let half = ell / 2.0;
        let v = if half == 0.0 {
            2.0 // ℓ/2 underflowed; the ℓ → 0 limit value
        } else if half <= LOG_SPACE_WIDTH {
            ell / half.sinh()
        } else {
            // sinh(ℓ/2) can overflow long before the quotient leaves the
            // representable range; divide in log space instead (huge ℓ
            // underflows to an exact 0, the limit value)
            (ell.ln() - ln_sinh(half)).exp()
        };
        return Ok(Volume::from_computed(sides * v));
    }
    let c = tube_width_with_config(n, area, cfg)?;
    let slab = cosh_power_integral(n.get() - 1, c)?;
    let v = area.value() * slab;
    if !v.is_finite() {
        return Err(Error::Overflow(format!(
            "tube volume overflows f64 at dimension {n}, area {area}"
        )));
    }
    Ok(Volume::from_computed(sides * v))
}

/// `ln sinh(w)` for large `w` without overflow: `w − ln 2 + ln(1 − e^{−2w})`.
fn ln_sinh(w: f64) -> f64 {
    w - std::f64::consts::LN_2 + (-(-2.0 * w).exp()).ln_1p()
}

/// Radius `r(d)` of the embedded disc guaranteed by a shortest common
/// orthogonal of length `d` between a hypersurface and itself (or a
/// neighboring one). Satisfies the consistency identity
/// `ball_volume(n−1, disc_radius_from_orthogonal(2·tube_width(n, A))) = A`.
pub fn disc_radius_from_orthogonal(d: Length) -> Result<Radius> {
    if !d.is_infinite() && d.value() <= 0.0 {
        return Err(Error::Domain(format!(
            "orthogonal length must be positive, got {d}"
        )));
    }
    collar_function(d)
}

/// The exact surface coefficient `a₃ = π(log 2 + √2/2)` of the volume
/// lower bound (`≈ 4.39903`; displays often round it to `4.4`).
pub fn surface_volume_coefficient() -> f64 {
    std::f64::consts::PI * (std::f64::consts::LN_2 + std::f64::consts::SQRT_2 / 2.0)
}

/// Rounded display value `4.4` of [`surface_volume_coefficient`].
pub const SURFACE_VOLUME_COEFFICIENT_ROUNDED: f64 = 4.4;

/// Volume lower bound `(√3/4)·cusps + a₃·surfaces` for a hyperbolic
/// 3-manifold with the given number of rank-two cusps and totally
/// geodesic boundary surfaces, using the exact `a₃`.
///
/// # Errors
/// Dimensions other than 3 are unsupported: no explicit coefficient
/// `a_n` is available for `n ≥ 4` (only existence is known), and the
/// bound does not apply in dimension 2.
pub fn volume_lower_bound(inputs: BoundInputs) -> Result<Volume> {
    volume_bound_with(inputs, surface_volume_coefficient())
}

/// [`volume_lower_bound`] with the surface coefficient rounded to `4.4`
/// as in printed displays of the bound.
pub fn volume_lower_bound_display_rounded(inputs: BoundInputs) -> Result<Volume> {
    volume_bound_with(inputs, SURFACE_VOLUME_COEFFICIENT_ROUNDED)
}

fn volume_bound_with(inputs: BoundInputs, coeff: f64) -> Result<Volume> {
    if inputs.dimension.get() != 3 {
        return Err(Error::UnsupportedDimension {
            n: inputs.dimension.get(),
            why: "the cusp/surface volume bound applies to dimension 3 only; \
                  no explicit surface coefficient is available for n ≥ 4"
                .into(),
        });
    }
    let cusp_term = 3.0_f64.sqrt() / 4.0 * f64::from(inputs.cusp_count);
    Ok(Volume::from_computed(
        cusp_term + coeff * f64::from(inputs.surface_count),
    ))
}

/// The cusp–surface separation threshold `log 2`, exactly.
pub fn cusp_surface_threshold() -> f64 {
    std::f64::consts::LN_2
}

/// True iff a rank-two cusp and a totally geodesic surface at this
/// distance satisfy the strict separation bound `distance > log 2`.
pub fn cusp_surface_separation_check(distance: Length) -> bool {
    distance.is_infinite() || distance.value() > cusp_surface_threshold()
}
