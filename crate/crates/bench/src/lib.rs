//! Shared input builders for the criterion benchmarks.

use twind_core::{Character, LieSuperalgebra, Matrix, Scalar};

/// Deterministic pseudo-random rational matrix (plain LCG; no rng crates in
/// the bench path).
pub fn seeded_matrix(n: usize, seed: u64) -> Matrix {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) % 13) as i64 - 6
    };
    Matrix::from_fn(n, n, |_, _| Scalar::rational(next(), 1 + (next().unsigned_abs() as i64 % 3)))
}

pub fn kac_with_u_star() -> (LieSuperalgebra, Character) {
    let g = twind_core::fixtures::kac_repaired();
    let lam = Character::dual_basis(&g, "u").unwrap();
    (g, lam)
}
