//! Geometric models of hyperbolic space: the hyperboloid model for all
//! supported dimensions, and an upper-half-plane convenience layer for
//! the two-dimensional boundary computations.

pub mod h2;
pub mod hyperboloid;

pub use h2::{
    geodesic_distance_h2, geodesics_cross_h2, hyperboloid_to_uhp, mobius_boundary,
    neighborhoods_overlap, sl2_to_so21, uhp_to_hyperboloid, BoundaryPoint, GeodesicH2,
};
pub use hyperboloid::{
    common_perpendicular_feet, distance_to_axis, hyperplane_distance, loxodromic_axis,
    minkowski_inner, point_distance, translation_length, HPoint, Hyperplane,
    HyperplaneSeparation, Isometry, MinkowskiVector,
};
