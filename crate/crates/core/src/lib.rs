//! Exact-arithmetic construction and classification of the irreducible
//! finite-dimensional representations of solvable Lie superalgebras, via
//! twisted induction from polarizations.
//!
//! Everything is computed over ℚ or a single quadratic extension ℚ(√d); no
//! floating point anywhere. The central flow: pick a character λ in L, build
//! its symmetric odd form f_λ, find a polarization, induce the twisted
//! module I(λ), then decide irreducibility and G/Q type.

pub mod analysis;
pub mod builder;
pub mod characters;
pub mod eigen;
pub mod error;
pub mod fixtures;
pub mod induced;
pub mod jacobi;
pub mod linalg;
pub mod poly;
pub mod polarizations;
pub mod scalar;
pub mod superalgebra;

pub use analysis::{classify, envelope, envelope_dim, equivalent_pairs, find_intertwiner, spin, supercommutant,
                   IntertwinerReport, TypeVerdict, Verdict};
pub use builder::AlgebraBuilder;
pub use characters::{form_of, is_in_l, l_basis, rank_parity, Character, OddForm, RankParity};
pub use eigen::common_weight_vectors;
pub use error::LieError;
pub use induced::{coinduce, dual_module, induce, module_weights, singular_space, ModuleRep, Twist};
pub use jacobi::{pinned_repair, solve_linear_jacobi_unknowns, structure_delta, AlgebraTemplate};
pub use linalg::{form_radical, kernel, perp, rank, rref, solve, Matrix, SubQuotient, Subspace};
pub use polarizations::{find_polarization, find_polarization_seeded, is_polarization,
                        is_subordinate, stability_under_twist, Polarization, PolarizationCheck};
pub use scalar::{parse_field, Field, Scalar};
pub use superalgebra::{HomogeneousElement, LieSuperalgebra, Parity, ValidationReport, Violation};
