//! Fixtures shared by the benchmarks in `benches/`.

use skewplane::{GaloisField, Plane, Quaternions};

/// AG(2, GF(p^k)).
pub fn finite_plane(p: u64, k: u32) -> Plane<GaloisField> {
    Plane::new(GaloisField::new(p, k).expect("valid field"))
}

pub fn quaternion_plane() -> Plane<Quaternions> {
    Plane::new(Quaternions)
}
