//! Bracketed inversion of smooth strictly monotone maps.
//!
//! The solver works in log–log coordinates: for a positive strictly
//! decreasing `f` and positive target it finds the root of
//! `g(u) = ln f(e^u) − ln target`, bisecting the bracket and taking a
//! secant step whenever both endpoint values are finite and the proposal
//! stays safely inside. This tolerates `f` underflowing to `0` at the
//! high end of the bracket (`g = −∞` there simply disables the secant
//! until the bracket has shrunk into the representable range).

use crate::error::{Error, Result};

/// Tuning for [`invert_monotone_decreasing`].
#[derive(Debug, Clone)]
pub struct RootConfig {
    /// Relative tolerance on the abscissa; iteration stops when the
    /// bracket satisfies `hi/lo − 1 ≤ rel_tol`.
    pub rel_tol: f64,
    /// Hard iteration cap; exceeding it is a numerical error, never a
    /// silent partial answer.
    pub max_iterations: usize,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            rel_tol: 1e-12,
            max_iterations: 200,
        }
    }
}

impl RootConfig {
    pub fn with_rel_tol(rel_tol: f64) -> Result<Self> {
        if !rel_tol.is_finite() || rel_tol <= 0.0 || rel_tol >= 1.0 {
            return Err(Error::InvalidInput(format!(
                "root-finder tolerance must lie in (0, 1), got {rel_tol}"
            )));
        }
        Ok(RootConfig {
            rel_tol,
            ..RootConfig::default()
        })
    }
}

/// Solves `f(c) = target` for a strictly decreasing `f > 0` on
/// `[bracket.0, bracket.1]`, both ends positive.
///
/// # Errors
/// - [`Error::BracketFailure`] when the target is not enclosed by the
///   endpoint values (the equal-to-endpoint case is returned exactly);
/// - [`Error::NoConvergence`] after `max_iterations`;
/// - any error produced by `f` itself at an evaluation point.
pub fn invert_monotone_decreasing<F>(
    f: F,
    target: f64,
    bracket: (f64, f64),
    cfg: &RootConfig,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let (lo, hi) = bracket;
    debug_assert!(lo > 0.0 && hi > lo && target > 0.0);
    let ln_target = target.ln();

    let raw = |c: f64| -> Result<f64> {
        let v = f(c)?;
        if v < 0.0 {
            return Err(Error::InvalidInput(format!(
                "inverted map must stay nonnegative, got {v}"
            )));
        }
        Ok(v)
    };

    // the endpoints are probed at the exact bracket values (exp∘ln is
    // not the identity), so an endpoint root is returned exactly
    let v_lo = raw(lo)?;
    let v_hi = raw(hi)?;
    if v_lo == target {
        return Ok(lo);
    }
    if v_hi == target {
        return Ok(hi);
    }
    if v_lo < target || v_hi > target {
        return Err(Error::BracketFailure {
            target,
            f_lo: v_lo,
            f_hi: v_hi,
        });
    }

    // g(u) = ln f(e^u) − ln target; decreasing in u; −∞ where f
    // underflowed to zero
    let eval = |u: f64| -> Result<f64> { Ok(raw(u.exp())?.ln() - ln_target) };

    let mut u_lo = lo.ln();
    let mut u_hi = hi.ln();
    let mut g_lo = v_lo.ln() - ln_target;
    let mut g_hi = v_hi.ln() - ln_target;

    for _ in 0..cfg.max_iterations {
        if u_hi - u_lo <= cfg.rel_tol {
            return Ok((0.5 * (u_lo + u_hi)).exp());
        }
        let u_mid = propose(u_lo, u_hi, g_lo, g_hi);
        let g_mid = eval(u_mid)?;
        if g_mid == 0.0 {
            return Ok(u_mid.exp());
        }
        if g_mid > 0.0 {
            u_lo = u_mid;
            g_lo = g_mid;
        } else {
            u_hi = u_mid;
            g_hi = g_mid;
        }
    }
    Err(Error::NoConvergence {
        iterations: cfg.max_iterations,
        lo: u_lo.exp(),
        hi: u_hi.exp(),
    })
}

/// Secant proposal clamped to the middle 96% of the bracket; falls back
/// to the midpoint when either endpoint value is infinite (underflowed
/// function value) or the secant degenerates.
fn propose(u_lo: f64, u_hi: f64, g_lo: f64, g_hi: f64) -> f64 {
    let mid = 0.5 * (u_lo + u_hi);
    if !(g_lo.is_finite() && g_hi.is_finite()) {
        return mid;
    }
    let denom = g_hi - g_lo;
    if denom == 0.0 {
        return mid;
    }
    let u_sec = u_lo - g_lo * (u_hi - u_lo) / denom;
    let margin = 0.02 * (u_hi - u_lo);
    if u_sec > u_lo + margin && u_sec < u_hi - margin {
        u_sec
    } else {
        mid
    }
}
