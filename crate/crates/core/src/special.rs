//! Special functions: the collar function `r`, unit-sphere surface areas,
//! hyperbolic ball volumes, and the power integrals of `sinh`/`cosh` that
//! every volume formula in this crate reduces to.
//!
//! All evaluations use closed forms or exact reduction recurrences;
//! quadrature appears only in the test suite as an independent oracle.

use crate::error::{Error, Result};
use crate::types::{Dimension, Length, Radius, Volume, Width};

/// Below this argument the collar function is evaluated by its series at 0;
/// above it, as `2·artanh(e^{−x})`. At the crossover the two forms agree to
/// about 1e−14 absolute (2e−15 relative).
const COLLAR_SERIES_CUTOFF: f64 = 0.01;

/// Below this upper limit `∫₀^T sinh^m` switches to its series at 0. The
/// reduction recurrence subtracts nearly equal terms for small `T`, losing
/// about `2·log10(1/T)` digits per step — fatal well before `T = 1` for
/// large `m` — while the series keeps full precision on `[0, 1]` and the
/// recurrence keeps it on `[1, ∞)` (both branches stay within 2e−15
/// relative of 60-digit reference values across `m ≤ 20`).
const SINH_INTEGRAL_SERIES_CUTOFF: f64 = 1.0;

/// The collar function `r(x) = log coth(x/2)`, defined for `x > 0`.
///
/// `r` is a strictly decreasing involution of `(0, ∞)` (so `r(r(x)) = x`)
/// with fixed point `arcsinh(1) = log(1+√2)`. The input `+∞` is accepted
/// and maps to `0`, matching the limit; it is the only infinite input any
/// operation in this module accepts.
///
/// # Errors
/// `x = 0` (the function diverges there) reports a domain error; negative
/// values are unrepresentable in [`Length`].
pub fn collar_function(x: Length) -> Result<Width> {
    if x.is_infinite() {
        return Ok(Width::ZERO);
    }
    let v = x.value();
    if v <= 0.0 {
        return Err(Error::Domain(
            "collar function requires x > 0 (it diverges at 0)".into(),
        ));
    }
    Ok(Width::from_computed(collar_raw(v)))
}

/// Unchecked scalar collar function; callers guarantee `x > 0` finite.
pub(crate) fn collar_raw(x: f64) -> f64 {
    if x < COLLAR_SERIES_CUTOFF {
        // log coth(x/2) = −log(x/2) + x²/12 − 7x⁴/1440 + 31x⁶/90720 + O(x⁸);
        // the direct form loses the small correction terms to the log.
        let x2 = x * x;
        -(x / 2.0).ln() + x2 * (1.0 / 12.0 + x2 * (-7.0 / 1440.0 + x2 * (31.0 / 90720.0)))
    } else {
        // log coth(x/2) = 2 artanh(e^{−x}) exactly; artanh sums the
        // tail series 2e^{−x}(1 + e^{−2x}/3 + …) without cancellation,
        // and underflows cleanly to 0 for very large x.
        2.0 * (-x).exp().atanh()
    }
}

/// Γ(k/2) for integer `k ≥ 1`, by the recurrence Γ(z+1) = z·Γ(z)
/// seeded at Γ(1/2) = √π and Γ(1) = 1.
fn gamma_half_integer(k: u32) -> f64 {
    debug_assert!(k >= 1);
    let (mut z, mut g) = if k % 2 == 1 {
        (0.5, std::f64::consts::PI.sqrt())
    } else {
        (1.0, 1.0)
    };
    let target = f64::from(k) / 2.0;
    while z + 0.5 < target + 0.25 {
        g *= z;
        z += 1.0;
    }
    g
}

/// Surface area `ω_{n−1} = 2π^{n/2}/Γ(n/2)` of the unit sphere `S^{n−1}`.
///
/// For `n = 2` this is the circle circumference `2π`; for `n = 3` the unit
/// two-sphere area `4π`.
pub fn sphere_surface_area(n: Dimension) -> f64 {
    let n = n.get();
    // π^{n/2} as an exact power times at most one √π factor.
    let pi_pow = if n.is_multiple_of(2) {
        std::f64::consts::PI.powi((n / 2) as i32)
    } else {
        std::f64::consts::PI.powi(((n - 1) / 2) as i32) * std::f64::consts::PI.sqrt()
    };
    2.0 * pi_pow / gamma_half_integer(n)
}

/// Volume `V_n(r) = ω_{n−1}·∫₀^r sinh^{n−1}(t) dt` of the hyperbolic
/// `n`-ball of radius `r`, via the exact reduction recurrence.
///
/// Strictly increasing in the radius, with `V_n(r) ~ ω_{n−1} r^n / n`
/// as `r → 0`.
///
/// # Errors
/// A radius so large that the volume exceeds the representable range
/// reports an overflow error rather than a silent infinity. Infinite
/// radii are rejected.
pub fn ball_volume(n: Dimension, radius: Radius) -> Result<Volume> {
    if radius.is_infinite() {
        return Err(Error::Domain(
            "ball volume requires a finite radius".into(),
        ));
    }
    let v = sphere_surface_area(n) * sinh_power_integral(n.get() - 1, radius)?;
    if !v.is_finite() {
        return Err(Error::Overflow(format!(
            "ball volume overflows f64 at dimension {n}, radius {radius}"
        )));
    }
    Ok(Volume::from_computed(v))
}

/// `∫₀^T sinh^m(t) dt` for integer `m ≥ 0`, by the reduction
/// `m·S_m = sinh^{m−1}(T)·cosh(T) − (m−1)·S_{m−2}` with bases
/// `S_0 = T` and `S_1 = cosh T − 1`, switching to the series at 0
/// for small `T` where the reduction cancels.
///
/// # Errors
/// Overflow of any intermediate reports an overflow error. Infinite `T`
/// is rejected.
pub fn sinh_power_integral(m: u32, t: Length) -> Result<f64> {
    if t.is_infinite() {
        return Err(Error::Domain(
            "sinh power integral requires a finite upper limit".into(),
        ));
    }
    let t = t.value();
    if t < SINH_INTEGRAL_SERIES_CUTOFF {
        return Ok(sinh_power_integral_series(m, t));
    }
    let (sh, ch) = (t.sinh(), t.cosh());
    if !sh.is_finite() {
        return Err(Error::Overflow(format!(
            "sinh({t}) overflows f64 in power integral"
        )));
    }
    // cur holds S_k with k stepping through m's parity class
    let (mut k, mut cur) = if m.is_multiple_of(2) { (0, t) } else { (1, ch - 1.0) };
    while k < m {
        k += 2;
        let boundary = sh.powi(k as i32 - 1) * ch;
        let next = (boundary - f64::from(k - 1) * cur) / f64::from(k);
        if !next.is_finite() {
            return Err(Error::Overflow(format!(
                "sinh power integral overflows f64 at m = {k}, T = {t}"
            )));
        }
        cur = next;
    }
    Ok(cur)
}

/// Series at 0 for `∫₀^T sinh^m`: write `sinh^m(x) = x^m·g(x²)` with
/// `g(u) = (sinh √u / √u)^m = Σ g_k u^k` and integrate termwise,
/// `S_m(T) = T^{m+1} Σ_k g_k T^{2k} / (m + 1 + 2k)`.
///
/// The power-series coefficients come from the power recurrence for
/// `g = f^m` with `f_j = 1/(2j+1)!` and `f₀ = 1`:
/// `k·g_k = Σ_{j=1..k} ((m+1)·j − k)·f_j·g_{k−j}`.
/// All `g_k` are positive, so there is no cancellation; terms are added
/// until they stop contributing. `T^{m+1}` may underflow to an exact 0
/// for extreme inputs (accepted limit value).
fn sinh_power_integral_series(m: u32, t: f64) -> f64 {
    const MAX_TERMS: usize = 64;
    let mf = f64::from(m);
    let u = t * t;
    let mut f = [0.0_f64; MAX_TERMS]; // f_j = 1/(2j+1)!
    f[0] = 1.0;
    let mut factorial = 1.0;
    for (j, slot) in f.iter_mut().enumerate().skip(1) {
        factorial *= (2 * j) as f64 * (2 * j + 1) as f64;
        *slot = 1.0 / factorial;
    }
    let mut g = [0.0_f64; MAX_TERMS];
    g[0] = 1.0;
    let mut sum = 1.0 / (mf + 1.0);
    let mut u_pow = 1.0;
    for k in 1..MAX_TERMS {
        let mut acc = 0.0;
        for j in 1..=k {
            acc += ((mf + 1.0) * j as f64 - k as f64) * f[j] * g[k - j];
        }
        g[k] = acc / k as f64;
        u_pow *= u;
        let term = g[k] * u_pow / (mf + 1.0 + 2.0 * k as f64);
        sum += term;
        if term <= 1e-18 * sum {
            break;
        }
    }
    t.powi(m as i32 + 1) * sum
}

/// `∫₀^T cosh^m(t) dt` for integer `m ≥ 0`, by the reduction
/// `m·C_m = cosh^{m−1}(T)·sinh(T) + (m−1)·C_{m−2}` with bases
/// `C_0 = T` and `C_1 = sinh T`. All terms are positive, so the
/// recurrence is stable for every `T ≥ 0`.
///
/// # Errors
/// Overflow of any intermediate reports an overflow error. Infinite `T`
/// is rejected.
pub fn cosh_power_integral(m: u32, t: Length) -> Result<f64> {
    if t.is_infinite() {
        return Err(Error::Domain(
            "cosh power integral requires a finite upper limit".into(),
        ));
    }
    let t = t.value();
    let (sh, ch) = (t.sinh(), t.cosh());
    if !ch.is_finite() {
        return Err(Error::Overflow(format!(
            "cosh({t}) overflows f64 in power integral"
        )));
    }
    // cur holds C_k with k stepping through m's parity class
    let (mut k, mut cur) = if m.is_multiple_of(2) { (0, t) } else { (1, sh) };
    while k < m {
        k += 2;
        let boundary = ch.powi(k as i32 - 1) * sh;
        let next = (boundary + f64::from(k - 1) * cur) / f64::from(k);
        if !next.is_finite() {
            return Err(Error::Overflow(format!(
                "cosh power integral overflows f64 at m = {k}, T = {t}"
            )));
        }
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn len(v: f64) -> Length {
        Length::new(v).unwrap()
    }

    #[test]
    fn collar_reference_values() {
        // 50-digit-arithmetic reference values, truncated to f64 precision.
        let r2 = collar_function(len(2.0)).unwrap().value();
        assert!((r2 - 0.272_341_468_911_831_55).abs() < 1e-15);
        let r1 = collar_function(len(1.0)).unwrap().value();
        assert!((r1 - 0.771_936_832_905_304_7).abs() < 1e-15);
        let r_half = collar_function(len(0.5)).unwrap().value();
        assert!((r_half - 1.406_829_113_747_295_3).abs() < 1e-15);
    }

    #[test]
    fn collar_involution_and_fixed_point() {
        let x = 0.5;
        let rr = collar_raw(collar_raw(x));
        assert!((rr - x).abs() < 1e-13);
        let fixed = 1.0_f64.asinh();
        assert!((collar_raw(fixed) - fixed).abs() < 1e-15);
    }

    #[test]
    fn collar_limits_and_domain() {
        assert_eq!(collar_function(Length::INFINITY).unwrap(), Width::ZERO);
        assert!(collar_function(Length::ZERO).is_err());
        // r(50) = 2e^{−50}(1 + …) ≈ 3.86e−22
        let r50 = collar_function(len(50.0)).unwrap().value();
        assert!(r50 < 1e-20 && r50 > 0.0);
        // past x ≈ 745 the value underflows to exactly 0, the limit value
        assert_eq!(collar_function(len(800.0)).unwrap(), Width::ZERO);
    }

    #[test]
    fn collar_branches_agree_at_cutoff() {
        for &x in &[0.009, 0.0099, 0.01, 0.0101, 0.011] {
            let series = {
                let x2: f64 = x * x;
                -(x / 2.0_f64).ln()
                    + x2 * (1.0 / 12.0 + x2 * (-7.0 / 1440.0 + x2 * (31.0 / 90720.0)))
            };
            let direct = 2.0 * (-x).exp().atanh();
            assert!(
                (series - direct).abs() <= 1e-14 * series.abs().max(1.0),
                "branch mismatch at {x}: {series} vs {direct}"
            );
        }
    }

    #[test]
    fn sphere_areas() {
        let d = |n| Dimension::new(n).unwrap();
        assert!((sphere_surface_area(d(2)) - 2.0 * PI).abs() < 1e-15);
        assert!((sphere_surface_area(d(3)) - 4.0 * PI).abs() < 1e-14);
        assert!((sphere_surface_area(d(4)) - 2.0 * PI * PI).abs() < 1e-13);
        // ω_7 = π⁴/3
        assert!((sphere_surface_area(d(8)) - PI.powi(4) / 3.0).abs() < 1e-13);
    }

    #[test]
    fn gamma_recurrence_values() {
        assert!((gamma_half_integer(1) - PI.sqrt()).abs() < 1e-15);
        assert!((gamma_half_integer(2) - 1.0).abs() < 1e-15);
        assert!((gamma_half_integer(3) - PI.sqrt() / 2.0).abs() < 1e-15);
        assert!((gamma_half_integer(4) - 1.0).abs() < 1e-15);
        assert!((gamma_half_integer(6) - 2.0).abs() < 1e-15);
        assert!((gamma_half_integer(8) - 6.0).abs() < 1e-14);
        assert!((gamma_half_integer(20) - 362880.0).abs() < 1e-9);
    }

    #[test]
    fn ball_volume_closed_forms() {
        let d = |n| Dimension::new(n).unwrap();
        // V₂(1) = 2π(cosh 1 − 1)
        let v2 = ball_volume(d(2), len(1.0)).unwrap().value();
        assert!((v2 - 3.412_276_265_284_902_3).abs() < 1e-14);
        // V₃(1) = π(sinh 2 − 2)
        let v3 = ball_volume(d(3), len(1.0)).unwrap().value();
        assert!((v3 - 5.110_932_705_708_289).abs() < 1e-14);
        assert_eq!(ball_volume(d(5), Length::ZERO).unwrap().value(), 0.0);
    }

    #[test]
    fn ball_volume_small_radius_asymptotics() {
        for n in [2u32, 3, 7, 20] {
            let d = Dimension::new(n).unwrap();
            let r = 1e-4;
            let v = ball_volume(d, len(r)).unwrap().value();
            let euclidean = sphere_surface_area(d) * r.powi(n as i32) / f64::from(n);
            assert!(
                (v / euclidean - 1.0).abs() < 1e-6,
                "asymptotic failure at n = {n}"
            );
        }
    }

    #[test]
    fn ball_volume_overflow_is_an_error() {
        let d = Dimension::new(20).unwrap();
        match ball_volume(d, len(200.0)) {
            Err(Error::Overflow(_)) => {}
            other => panic!("expected overflow error, got {other:?}"),
        }
        assert!(ball_volume(d, Length::INFINITY).is_err());
    }

    #[test]
    fn power_integral_bases() {
        assert_eq!(sinh_power_integral(0, len(7.25)).unwrap(), 7.25);
        assert_eq!(cosh_power_integral(0, len(7.25)).unwrap(), 7.25);
        let s1 = sinh_power_integral(1, len(1.0)).unwrap();
        assert!((s1 - 0.543_080_634_815_243_7).abs() < 1e-15);
        let c1 = cosh_power_integral(1, len(1.0)).unwrap();
        assert!((c1 - 1.0_f64.sinh()).abs() < 1e-15);
    }

    #[test]
    fn cosh_square_closed_form() {
        // ∫₀¹ cosh² = 1/2 + sinh(2)/4
        let c2 = cosh_power_integral(2, len(1.0)).unwrap();
        assert!((c2 - 1.406_715_101_961_754_7).abs() < 1e-15);
    }

    #[test]
    fn sinh_integral_series_matches_recurrence() {
        // compare the two branches at and just above the crossover
        for m in [1u32, 2, 5, 12, 19] {
            for &t in &[1.0, 1.25] {
                let series = sinh_power_integral_series(m, t);
                let rec = sinh_power_integral(m, len(t)).unwrap();
                assert!(
                    (series - rec).abs() <= 1e-14 * rec.abs(),
                    "branch mismatch m={m} t={t}: {series} vs {rec}"
                );
            }
        }
    }

    #[test]
    fn sinh_integral_reference_values() {
        // 60-digit-arithmetic references at the crossover point
        for (m, expected) in [
            (2u32, 0.406_715_101_961_754_7),
            (5, 0.310_001_628_759_191_5),
            (12, 0.424_200_162_784_394_4),
            (19, 0.841_475_856_710_523_9),
        ] {
            let v = sinh_power_integral(m, len(1.0)).unwrap();
            assert!(
                (v - expected).abs() <= 1e-14 * expected,
                "m={m}: {v} vs {expected}"
            );
        }
        // and one deep inside the series branch: S₃(0.1) from the same source
        let v = sinh_power_integral(3, len(0.1)).unwrap();
        assert!((v - 2.508_346_888_567_451e-5).abs() < 1e-19);
    }

    #[test]
    fn tiny_upper_limit_underflows_to_zero() {
        // far below the subnormal range the integral is exactly 0; this is
        // an accepted limit value, not an error
        assert_eq!(sinh_power_integral(7, len(1.5e-52)).unwrap(), 0.0);
    }

    #[test]
    fn power_integral_overflow() {
        assert!(matches!(
            sinh_power_integral(19, len(50.0)),
            Err(Error::Overflow(_))
        ));
        assert!(matches!(
            cosh_power_integral(19, len(50.0)),
            Err(Error::Overflow(_))
        ));
        // but the advertised stable range works
        assert!(sinh_power_integral(19, len(30.0)).unwrap().is_finite());
        assert!(cosh_power_integral(19, len(30.0)).unwrap().is_finite());
    }
}
