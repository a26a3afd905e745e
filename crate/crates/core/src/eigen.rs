//! Simultaneous eigenvectors of solvable matrix families, exactly.
//!
//! The refinement keeps a list of (partial eigenvalue tuple, joint
//! eigenspace) pairs and intersects with the eigenspaces of each family
//! member in turn. Eigenvalues come from exact characteristic polynomials;
//! roots outside the working field surface as obstructions only when the
//! blocked directions actually meet a surviving candidate space.

use crate::error::LieError;
use crate::linalg::{kernel, Matrix, Subspace};
use crate::poly::{in_field_roots, residual_obstruction, Poly};
use crate::scalar::{Field, Scalar};

/// One simultaneous eigensystem: eigenvalue per family member, joint space.
pub type WeightSpace = (Vec<Scalar>, Subspace);

pub struct RefineOutcome {
    pub found: Vec<WeightSpace>,
    /// Set when eigendirections outside the field intersect a candidate
    /// space, i.e. the in-field list is incomplete over ℂ.
    pub obstruction: Option<LieError>,
}

/// Complete list of simultaneous eigenvalue tuples and joint eigenspaces of
/// a family of square matrices over the working field. Errors when roots
/// outside the field block completeness.
pub fn common_weight_vectors(
    family: &[Matrix],
    field: Field,
) -> Result<Vec<WeightSpace>, LieError> {
    let out = refine_weight_spaces(family, field)?;
    match out.obstruction {
        Some(e) => Err(e),
        None => Ok(out.found),
    }
}

/// Greedy variant: returns whatever splits over the field plus the recorded
/// obstruction. Used by the polarization search, which can often finish with
/// in-field weight vectors alone.
pub fn refine_weight_spaces(family: &[Matrix], field: Field) -> Result<RefineOutcome, LieError> {
    let n = match family.first() {
        Some(m) => m.rows(),
        None => {
            return Ok(RefineOutcome {
                found: vec![(vec![], Subspace::full(0))],
                obstruction: None,
            })
        }
    };
    for m in family {
        if m.rows() != n || m.cols() != n {
            return Err(LieError::DimensionMismatch {
                expected: n,
                got: m.rows().max(m.cols()),
            });
        }
    }
    if n == 0 {
        return Ok(RefineOutcome {
            found: vec![],
            obstruction: None,
        });
    }
    let mut spaces: Vec<WeightSpace> = vec![(vec![], Subspace::full(n))];
    let mut obstruction = None;
    for m in family {
        let cp = m.char_poly();
        let (roots, residual) = in_field_roots(&cp, field);
        let mut next: Vec<WeightSpace> = Vec::new();
        let blocked = if residual.degree() >= 1 {
            Some(blocked_directions(m, &residual))
        } else {
            None
        };
        for (tuple, space) in spaces {
            for (root, _) in &roots {
                let mut shifted = m.clone();
                for i in 0..n {
                    *shifted.at_mut(i, i) -= root;
                }
                let eig = kernel(&shifted);
                let meet = space.intersect(&eig);
                if !meet.is_zero() {
                    let mut t = tuple.clone();
                    t.push(root.clone());
                    next.push((t, meet));
                }
            }
            if let Some(k) = &blocked {
                if obstruction.is_none() && !space.intersect(k).is_zero() {
                    obstruction = Some(residual_obstruction(&residual, field));
                }
            }
        }
        spaces = next;
    }
    Ok(RefineOutcome {
        found: spaces,
        obstruction,
    })
}

/// Kernel of residual(m): the span of eigendirections whose eigenvalues lie
/// outside the working field (over the splitting field) intersected with the
/// base space. Nonzero intersection with a candidate space certifies that
/// weight vectors are being missed.
fn blocked_directions(m: &Matrix, residual: &Poly) -> Subspace {
    let n = m.rows();
    let mut acc = Matrix::zero(n, n);
    let mut power = Matrix::identity(n);
    for c in &residual.coeffs {
        if !c.is_zero() {
            acc = acc.add(&power.scale(c));
        }
        power = power.mul(m);
    }
    kernel(&acc)
}

/// Weight multiset of a solvable family: the diagonal characters of a
/// simultaneous triangularization, computed by peeling common eigenvectors
/// off quotients. The sum of multiplicities equals the ambient dimension.
pub fn triangular_weights(
    family: &[Matrix],
    field: Field,
) -> Result<Vec<(Vec<Scalar>, usize)>, LieError> {
    let n = match family.first() {
        Some(m) => m.rows(),
        None => return Ok(vec![]),
    };
    let mut flag = Subspace::zero(n);
    let mut weights: Vec<(Vec<Scalar>, usize)> = Vec::new();
    while flag.dim() < n {
        let q = crate::linalg::SubQuotient::of_full(n, &flag);
        let induced: Result<Vec<Matrix>, LieError> =
            family.iter().map(|m| q.induced_operator(m)).collect();
        let induced = induced?;
        let found = common_weight_vectors(&induced, field)?;
        let (tuple, space) = found.into_iter().next().ok_or_else(|| LieError::Unsplittable {
            detail: "no common eigenvector; the family is not triangularizable over the field"
                .into(),
        })?;
        let lift = q.lift(&space.basis_rows()[0]);
        flag = flag.add_vector(&lift);
        match weights.iter_mut().find(|(t, _)| t == &tuple) {
            Some((_, mult)) => *mult += 1,
            None => weights.push((tuple, 1)),
        }
    }
    Ok(weights)
}
