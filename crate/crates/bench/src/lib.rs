//! Shared fixtures for the kernel benchmarks.

use hyptube::nalgebra::Matrix2;

pub use hyptube;

/// Loxodromic with repelling point `p`, attracting point `q`,
/// translation length `t`, as an SL(2,ℝ) matrix.
pub fn boost_on(p: f64, q: f64, t: f64) -> Matrix2<f64> {
    let s = Matrix2::new(1.0, -p, 1.0, -q);
    let d = Matrix2::new((t / 2.0).exp(), 0.0, 0.0, (-t / 2.0).exp());
    s.try_inverse().expect("distinct endpoints") * d * s
}

/// The two-generator Schottky pants group used across the benchmarks.
pub fn pants_group() -> hyptube::stability::SurfaceGroupData {
    hyptube::stability::SurfaceGroupData::new(vec![
        ('a', boost_on(-3.0, -1.0, 2.4)),
        ('b', boost_on(1.0, 3.0, 2.4)),
    ])
    .expect("fixture group is valid")
}
