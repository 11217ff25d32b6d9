//! Independent numerical oracles for the integration tests:
//! quadrature, bisection, golden-section minimization, and an
//! upper-half-plane evaluator for geodesic distances. Everything here
//! deliberately avoids the library code paths it is used to check.

#![allow(dead_code)] // each test target uses its own subset

use hyptube::models::{BoundaryPoint, GeodesicH2};

/// Adaptive Simpson quadrature of `f` over `[a, b]` with a relative
/// termination target. The range is pre-split into panels of length
/// ≤ 1 so sharply growing integrands (`sinh^m` over `[0, 30]`) are
/// resolved before adaptivity starts.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> f64 {
    assert!(b > a && rel_tol > 0.0);
    let panels = ((b - a).ceil() as usize).max(1);
    let h = (b - a) / panels as f64;
    let mut coarse = 0.0;
    for i in 0..panels {
        let lo = a + i as f64 * h;
        coarse += simpson(f, lo, lo + h);
    }
    let budget = rel_tol * coarse.abs().max(f64::MIN_POSITIVE) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let lo = a + i as f64 * h;
        total += adapt(f, lo, lo + h, simpson(f, lo, lo + h), budget, 60);
    }
    total
}

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let m = 0.5 * (a + b);
    (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
}

fn adapt(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let left = simpson(f, a, m);
    let right = simpson(f, m, b);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adapt(f, a, m, left, 0.5 * tol, depth - 1) + adapt(f, m, b, right, 0.5 * tol, depth - 1)
    }
}

/// Plain bisection for a sign change of `f` on `[lo, hi]`.
pub fn bisect(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> f64 {
    let mut flo = f(lo);
    let fhi = f(hi);
    assert!(
        flo == 0.0 || fhi == 0.0 || (flo < 0.0) != (fhi < 0.0),
        "no sign change on [{lo}, {hi}]"
    );
    for _ in 0..iters {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section minimization of a unimodal `f` on `[a, b]`; returns
/// the abscissa of the minimum.
pub fn golden_min(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> f64 {
    let inv_phi = 0.5 * (5.0_f64.sqrt() - 1.0);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..iters {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Closed form of the dimension-3 tube width:
/// `c₃(A) = ½ arccoth(1 + A/(2π)) = ½ atanh(2π/(2π + A))`.
pub fn c3_closed_form(area: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    0.5 * (two_pi / (two_pi + area)).atanh()
}

/// Point of an upper-half-plane geodesic at arclength parameter `t`.
/// Finite endpoints `p ≠ q` trace the semicircle over `(p, q)`; an
/// infinite endpoint gives the vertical ray over the finite one.
pub fn uhp_geodesic_point(g: &GeodesicH2, t: f64) -> (f64, f64) {
    match (g.a, g.b) {
        (BoundaryPoint::Finite(p), BoundaryPoint::Finite(q)) => {
            let center = 0.5 * (p + q);
            let radius = 0.5 * (q - p).abs();
            (center + radius * t.tanh(), radius / t.cosh())
        }
        (BoundaryPoint::Finite(p), BoundaryPoint::Infinity)
        | (BoundaryPoint::Infinity, BoundaryPoint::Finite(p)) => (p, t.exp()),
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => {
            unreachable!("a geodesic has distinct endpoints")
        }
    }
}

/// Upper-half-plane distance `arccosh(1 + ((Δx)² + (Δy)²)/(2 y₁ y₂))`.
pub fn uhp_distance(p: (f64, f64), q: (f64, f64)) -> f64 {
    let dx = p.0 - q.0;
    let dy = p.1 - q.1;
    (1.0 + (dx * dx + dy * dy) / (2.0 * p.1 * q.1)).acosh()
}

/// Distance between two disjoint geodesics by nested golden-section
/// search: the inner minimum over `t₂` is the (convex) distance from a
/// point to a geodesic, and the outer function of `t₁` — distance from
/// a moving point to a convex set — is convex again, so each
/// one-dimensional search is unimodal and neither can stall the way
/// alternating descent does in a long narrow valley.
pub fn min_distance_between_geodesics(g1: &GeodesicH2, g2: &GeodesicH2) -> f64 {
    let span = 12.0;
    let to_second = |t1: f64| -> f64 {
        let p = uhp_geodesic_point(g1, t1);
        let t2 = golden_min(
            &|t| uhp_distance(p, uhp_geodesic_point(g2, t)),
            -span,
            span,
            120,
        );
        uhp_distance(p, uhp_geodesic_point(g2, t2))
    };
    let t1 = golden_min(&to_second, -span, span, 120);
    to_second(t1)
}
