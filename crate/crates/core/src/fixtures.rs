//! The fixture catalogue used by tests, the CLI, and the demo.
//!
//! `kac_printed` is the (4|4)-dimensional solvable superalgebra exactly as
//! its bracket table circulates in print; it fails the Jacobi identity.
//! `kac_repaired` is the unique Jacobi-valid repair with the y- and z-rows
//! recomputed, produced by the linear constraint solver so the repair stays
//! a reproducible computation rather than an editorial choice.

use std::sync::OnceLock;

use crate::builder::AlgebraBuilder;
use crate::jacobi::{pinned_repair, AlgebraTemplate};
use crate::scalar::{Field, Scalar};
use crate::superalgebra::LieSuperalgebra;

fn half() -> Scalar {
    Scalar::rational(1, 2)
}

fn minus_half() -> Scalar {
    Scalar::rational(-1, 2)
}

/// Even part span(x, y, z, u), odd part span(xi_m2, xi_m1, xi_1, xi_2), with
/// the bracket table exactly as printed. Not a Lie superalgebra: the Jacobi
/// identity fails on triples involving the y- and z-action on the odd part.
pub fn kac_printed() -> LieSuperalgebra {
    AlgebraBuilder::new(Field::Rationals)
        .even("x")
        .even("y")
        .even("z")
        .even("u")
        .odd("xi_m2")
        .odd("xi_m1")
        .odd("xi_1")
        .odd("xi_2")
        // even-even
        .bracket("x", "y", &[("y", Scalar::from_int(-1))])
        .bracket("x", "z", &[("z", Scalar::one())])
        // even-odd, as printed
        .bracket("x", "xi_m1", &[("xi_m1", Scalar::one())])
        .bracket("x", "xi_1", &[("xi_1", Scalar::from_int(-1))])
        .bracket("y", "xi_m2", &[("xi_m2", minus_half())])
        .bracket("y", "xi_2", &[("xi_1", half())])
        .bracket("z", "xi_1", &[("xi_m2", half())])
        .bracket("z", "xi_2", &[("xi_1", minus_half())])
        // odd-odd
        .bracket("xi_m1", "xi_1", &[("u", Scalar::one())])
        .bracket("xi_m2", "xi_2", &[("u", Scalar::one())])
        .bracket("xi_1", "xi_2", &[("y", Scalar::one())])
        .bracket("xi_m1", "xi_2", &[("z", Scalar::one())])
        .bracket("xi_2", "xi_2", &[("x", Scalar::one())])
        .build()
        .expect("printed table builds")
}

/// The unique Jacobi-valid repair of the printed table with the even-even,
/// odd-odd, x- and u-rows fixed and the y- and z-actions on the odd part
/// recomputed. Cached because the solve is deterministic.
pub fn kac_repaired() -> LieSuperalgebra {
    static CACHE: OnceLock<LieSuperalgebra> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let printed = kac_printed();
            let mut t = AlgebraTemplate::from_algebra(&printed);
            for even in ["y", "z"] {
                for odd in ["xi_m2", "xi_m1", "xi_1", "xi_2"] {
                    t.free_bracket(even, odd).expect("even-odd slot");
                }
            }
            pinned_repair(&t, &printed).expect("the printed table admits a repair")
        })
        .clone()
}

/// (1|1): even x, odd xi, [xi, xi] = x. The smallest Q-type example.
pub fn odd_heisenberg_1_1() -> LieSuperalgebra {
    AlgebraBuilder::new(Field::Rationals)
        .even("x")
        .odd("xi")
        .bracket("xi", "xi", &[("x", Scalar::one())])
        .build()
        .expect("valid fixture")
}

/// (1|2): even x, odd xi_1, xi_2, [xi_1, xi_2] = x. Hyperbolic odd form;
/// the G-type workhorse and the subordinate-subalgebra counterpoint.
pub fn heisenberg_1_2() -> LieSuperalgebra {
    AlgebraBuilder::new(Field::Rationals)
        .even("x")
        .odd("xi_1")
        .odd("xi_2")
        .bracket("xi_1", "xi_2", &[("x", Scalar::one())])
        .build()
        .expect("valid fixture")
}

/// (2|2) abelian superalgebra.
pub fn abelian_2_2() -> LieSuperalgebra {
    AlgebraBuilder::new(Field::Rationals)
        .even("a")
        .even("b")
        .odd("s")
        .odd("t")
        .build()
        .expect("valid fixture")
}

/// (2|2) with a nontrivial even action: x rotates the odd plane and both odd
/// generators square to the central u. Polarizations for u* exist only after
/// adjoining sqrt(-1), which exercises the field-extension path.
pub fn spinor_2_2() -> LieSuperalgebra {
    AlgebraBuilder::new(Field::Rationals)
        .even("x")
        .even("u")
        .odd("xi_1")
        .odd("xi_2")
        .bracket("x", "xi_1", &[("xi_2", Scalar::one())])
        .bracket("x", "xi_2", &[("xi_1", Scalar::from_int(-1))])
        .bracket("xi_1", "xi_1", &[("u", Scalar::one())])
        .bracket("xi_2", "xi_2", &[("u", Scalar::one())])
        .build()
        .expect("valid fixture")
}

/// Every valid fixture with its catalogue name.
pub fn catalogue() -> Vec<(&'static str, LieSuperalgebra)> {
    vec![
        ("kac_repaired", kac_repaired()),
        ("odd_heisenberg_1_1", odd_heisenberg_1_1()),
        ("heisenberg_1_2", heisenberg_1_2()),
        ("abelian_2_2", abelian_2_2()),
        ("spinor_2_2", spinor_2_2()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobi::structure_delta;

    #[test]
    fn catalogue_validity() {
        assert!(!kac_printed().validate().is_valid());
        for (name, g) in catalogue() {
            assert!(g.validate().is_valid(), "{name} must validate");
            assert!(g.is_solvable(), "{name} must be solvable");
        }
    }

    #[test]
    fn repair_delta_is_the_two_subscript_slips() {
        let printed = kac_printed();
        let repaired = kac_repaired();
        let delta = structure_delta(&printed, &repaired);
        // [y, xi_m2] = -1/2 xi_m2 moves to [y, xi_m1] = -1/2 xi_m2, and
        // [z, xi_2] = -1/2 xi_1 becomes [z, xi_2] = -1/2 xi_m1.
        let name = |i: usize| printed.name(i).to_string();
        let rendered: Vec<String> = delta
            .iter()
            .map(|(i, j, k, old, new)| {
                format!("[{},{}]@{}: {} -> {}", name(*i), name(*j), name(*k), old, new)
            })
            .collect();
        assert_eq!(
            rendered,
            vec![
                "[y,xi_m2]@xi_m2: -1/2 -> 0".to_string(),
                "[y,xi_m1]@xi_m2: 0 -> -1/2".to_string(),
                "[z,xi_2]@xi_m1: 0 -> -1/2".to_string(),
                "[z,xi_2]@xi_1: -1/2 -> 0".to_string(),
            ]
        );
    }
}
