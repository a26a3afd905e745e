//! Solving super-Jacobi constraints linearly in marked unknown structure
//! constants.
//!
//! Unknowns are confined to even–odd slots, which keeps most Jacobi
//! instances affine-linear in them. Instances where two unknowns multiply
//! (two even elements with freed rows interacting) are deferred: they are
//! checked on the solved point when the linear part pins a unique solution,
//! and rejected as nonlinear otherwise.

use std::collections::BTreeMap;

use crate::error::LieError;
use crate::linalg::{kernel, solve, Matrix};
use crate::scalar::Scalar;
use crate::superalgebra::{LieSuperalgebra, Parity};

/// Affine-linear expression in the unknowns.
#[derive(Clone, Debug)]
struct LinExpr {
    constant: Scalar,
    terms: BTreeMap<usize, Scalar>,
}

impl LinExpr {
    fn known(c: Scalar) -> LinExpr {
        LinExpr {
            constant: c,
            terms: BTreeMap::new(),
        }
    }

    fn unknown(u: usize) -> LinExpr {
        let mut terms = BTreeMap::new();
        terms.insert(u, Scalar::one());
        LinExpr {
            constant: Scalar::zero(),
            terms,
        }
    }

    fn zero() -> LinExpr {
        LinExpr::known(Scalar::zero())
    }

    fn is_constant(&self) -> bool {
        self.terms.values().all(Scalar::is_zero)
    }

    fn add_assign(&mut self, other: &LinExpr) {
        self.constant += &other.constant;
        for (u, c) in &other.terms {
            let slot = self.terms.entry(*u).or_insert_with(Scalar::zero);
            *slot += c;
        }
    }

    fn scale(&self, c: &Scalar) -> LinExpr {
        LinExpr {
            constant: &self.constant * c,
            terms: self.terms.iter().map(|(u, v)| (*u, v * c)).collect(),
        }
    }

    /// Product; `None` when both factors genuinely involve unknowns.
    fn mul(&self, other: &LinExpr) -> Option<LinExpr> {
        if self.is_constant() {
            return Some(other.scale(&self.constant));
        }
        if other.is_constant() {
            return Some(self.scale(&other.constant));
        }
        None
    }

    fn eval(&self, assignment: &[Scalar]) -> Scalar {
        let mut acc = self.constant.clone();
        for (u, c) in &self.terms {
            acc += &(c * &assignment[*u]);
        }
        acc
    }
}

/// A superalgebra with some even–odd structure constants left unknown.
pub struct AlgebraTemplate {
    base: LieSuperalgebra,
    /// Canonical slots (i ≤ j) with unknown targets: (i, j, k) → unknown id.
    unknown_slots: BTreeMap<(usize, usize, usize), usize>,
    n_unknowns: usize,
}

impl AlgebraTemplate {
    pub fn from_algebra(base: &LieSuperalgebra) -> AlgebraTemplate {
        AlgebraTemplate {
            base: base.clone(),
            unknown_slots: BTreeMap::new(),
            n_unknowns: 0,
        }
    }

    /// Mark every parity-admissible component of [e_i, e_j] unknown.
    /// Restricted to even–odd slots so the Jacobi system stays linear apart
    /// from interactions between two freed rows.
    pub fn free_bracket(&mut self, a: &str, b: &str) -> Result<(), LieError> {
        let i = self.base.index_of(a).ok_or_else(|| LieError::Precondition {
            detail: format!("unknown basis name {a:?}"),
        })?;
        let j = self.base.index_of(b).ok_or_else(|| LieError::Precondition {
            detail: format!("unknown basis name {b:?}"),
        })?;
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let pi = self.base.parity(i);
        let pj = self.base.parity(j);
        if pi == pj {
            return Err(LieError::NonlinearTemplate {
                detail: format!(
                    "only even-odd brackets may be freed; [{a}, {b}] is {}-{}",
                    if pi.is_odd() { "odd" } else { "even" },
                    if pj.is_odd() { "odd" } else { "even" }
                ),
            });
        }
        let target = Parity::Odd;
        for k in 0..self.base.dim() {
            if self.base.parity(k) == target {
                self.unknown_slots.entry((i, j, k)).or_insert_with(|| {
                    let id = self.n_unknowns;
                    self.n_unknowns += 1;
                    id
                });
            }
        }
        Ok(())
    }

    pub fn unknown_count(&self) -> usize {
        self.n_unknowns
    }

    /// Structure-constant expression honoring super skew-symmetry.
    fn entry(&self, i: usize, j: usize, k: usize) -> LinExpr {
        let canonical = |a: usize, b: usize, k: usize| -> LinExpr {
            match self.unknown_slots.get(&(a, b, k)) {
                Some(&u) => LinExpr::unknown(u),
                None => LinExpr::known(self.base.structure_constant(a, b, k).clone()),
            }
        };
        if i <= j {
            canonical(i, j, k)
        } else {
            let sign = Parity::sign_product(self.base.parity(i), self.base.parity(j));
            canonical(j, i, k).scale(&-&sign)
        }
    }

    /// Instantiate with a concrete assignment of the unknowns.
    pub fn instantiate(&self, assignment: &[Scalar]) -> LieSuperalgebra {
        assert_eq!(assignment.len(), self.n_unknowns);
        let n = self.base.dim();
        let mut structure = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    structure[i][j][k] = self.entry(i, j, k).eval(assignment);
                }
            }
        }
        LieSuperalgebra::new(
            self.base.field(),
            self.base.names().to_vec(),
            (0..n).map(|i| self.base.parity(i)).collect(),
            structure,
        )
        .expect("template instantiation preserves shape")
    }
}

/// The Jacobi constraint system split into linear rows and deferred
/// (nonlinear) instances.
struct ConstraintSystem {
    /// Each row: coefficients per unknown, plus the constant term.
    rows: Vec<(Vec<Scalar>, Scalar)>,
    deferred: Vec<(usize, usize, usize)>,
}

fn build_system(t: &AlgebraTemplate) -> ConstraintSystem {
    let n = t.base.dim();
    let mut rows = Vec::new();
    let mut deferred = Vec::new();
    for a in 0..n {
        for b in 0..n {
            'triple: for c in 0..n {
                let sign = Parity::sign_product(t.base.parity(a), t.base.parity(b));
                let mut exprs = vec![LinExpr::zero(); n];
                // [[a,b],c] − [a,[b,c]] + sign·[b,[a,c]]
                for k in 0..n {
                    let inner1 = t.entry(a, b, k);
                    let inner2 = t.entry(b, c, k);
                    let inner3 = t.entry(a, c, k);
                    for l in 0..n {
                        let p1 = match inner1.mul(&t.entry(k, c, l)) {
                            Some(e) => e,
                            None => {
                                deferred.push((a, b, c));
                                continue 'triple;
                            }
                        };
                        let p2 = match inner2.mul(&t.entry(a, k, l)) {
                            Some(e) => e,
                            None => {
                                deferred.push((a, b, c));
                                continue 'triple;
                            }
                        };
                        let p3 = match inner3.mul(&t.entry(b, k, l)) {
                            Some(e) => e,
                            None => {
                                deferred.push((a, b, c));
                                continue 'triple;
                            }
                        };
                        exprs[l].add_assign(&p1);
                        exprs[l].add_assign(&p2.scale(&Scalar::from_int(-1)));
                        exprs[l].add_assign(&p3.scale(&sign));
                    }
                }
                for e in exprs {
                    if e.is_constant() && e.constant.is_zero() {
                        continue;
                    }
                    let mut coeffs = vec![Scalar::zero(); t.n_unknowns];
                    for (u, c) in &e.terms {
                        coeffs[*u] = c.clone();
                    }
                    rows.push((coeffs, e.constant));
                }
            }
        }
    }
    ConstraintSystem { rows, deferred }
}

/// Affine solution set of the super-Jacobi constraints on a template,
/// returned as representative algebras: the particular solution first, then
/// the particular solution shifted by each null direction. Empty when the
/// system is inconsistent.
pub fn solve_linear_jacobi_unknowns(
    t: &AlgebraTemplate,
) -> Result<Vec<LieSuperalgebra>, LieError> {
    let sys = build_system(t);
    let nu = t.n_unknowns;

    if nu == 0 {
        // No unknowns: the algebra itself decides consistency.
        let g = t.instantiate(&[]);
        return Ok(if g.validate().is_valid() { vec![g] } else { vec![] });
    }

    let m = Matrix::from_rows(sys.rows.iter().map(|(r, _)| r.clone()).collect(), nu);
    let rhs: Vec<Scalar> = sys.rows.iter().map(|(_, c)| -&c.clone()).collect();
    let particular = match solve(&m, &rhs) {
        Some(x) => x,
        None => return Ok(vec![]),
    };
    let null = kernel(&m);

    if !sys.deferred.is_empty() && !null.is_zero() {
        return Err(LieError::NonlinearTemplate {
            detail: format!(
                "{} Jacobi instances are quadratic in the unknowns and the linear part \
                 leaves {} free parameters",
                sys.deferred.len(),
                null.dim()
            ),
        });
    }

    let mut out = Vec::new();
    let candidate = t.instantiate(&particular);
    if candidate.validate().is_valid() {
        out.push(candidate);
    } else if !sys.deferred.is_empty() {
        // Unique linear solution violating a deferred quadratic constraint.
        return Ok(vec![]);
    } else {
        debug_assert!(false, "linear-only system produced an invalid solution");
        return Ok(vec![]);
    }
    for dir in null.basis_rows() {
        let shifted: Vec<Scalar> = particular
            .iter()
            .zip(dir.iter())
            .map(|(p, d)| p + d)
            .collect();
        let g = t.instantiate(&shifted);
        debug_assert!(g.validate().is_valid());
        out.push(g);
    }
    Ok(out)
}

/// Canonical-slot differences (i ≤ j) between two algebras on the same basis.
pub fn structure_delta(
    a: &LieSuperalgebra,
    b: &LieSuperalgebra,
) -> Vec<(usize, usize, usize, Scalar, Scalar)> {
    assert_eq!(a.dim(), b.dim());
    let mut out = Vec::new();
    for i in 0..a.dim() {
        for j in i..a.dim() {
            for k in 0..a.dim() {
                let old = a.structure_constant(i, j, k);
                let new = b.structure_constant(i, j, k);
                if old != new {
                    out.push((i, j, k, old.clone(), new.clone()));
                }
            }
        }
    }
    out
}

/// The deterministic repair: the solution closest to `printed` in number of
/// changed canonical entries, ties broken by candidate order (particular
/// first, then null-direction shifts in basis order).
pub fn pinned_repair(
    t: &AlgebraTemplate,
    printed: &LieSuperalgebra,
) -> Result<LieSuperalgebra, LieError> {
    let solutions = solve_linear_jacobi_unknowns(t)?;
    solutions
        .into_iter()
        .min_by_key(|g| structure_delta(printed, g).len())
        .ok_or_else(|| LieError::Precondition {
            detail: "Jacobi system is inconsistent; no repair exists".into(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn zero_unknowns_valid_algebra() {
        let g = fixtures::odd_heisenberg_1_1();
        let t = AlgebraTemplate::from_algebra(&g);
        let sols = solve_linear_jacobi_unknowns(&t).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0], g);
    }

    #[test]
    fn zero_unknowns_invalid_algebra() {
        let g = fixtures::kac_printed();
        let t = AlgebraTemplate::from_algebra(&g);
        let sols = solve_linear_jacobi_unknowns(&t).unwrap();
        assert!(sols.is_empty());
    }

    #[test]
    fn kac_repair_is_unique_and_valid() {
        let printed = fixtures::kac_printed();
        let mut t = AlgebraTemplate::from_algebra(&printed);
        for even in ["y", "z"] {
            for odd in ["xi_m2", "xi_m1", "xi_1", "xi_2"] {
                t.free_bracket(even, odd).unwrap();
            }
        }
        assert_eq!(t.unknown_count(), 32);
        let sols = solve_linear_jacobi_unknowns(&t).unwrap();
        assert_eq!(sols.len(), 1, "the Jacobi system pins y and z uniquely");
        let g = &sols[0];
        assert!(g.validate().is_valid());

        // The repair touches only even–odd constants.
        for (i, j, _, _, _) in structure_delta(&printed, g) {
            let mixed = printed.parity(i) != printed.parity(j);
            assert!(mixed, "delta at ({i},{j}) is not an even-odd slot");
        }
    }

    #[test]
    fn freeing_odd_odd_is_rejected() {
        let g = fixtures::kac_printed();
        let mut t = AlgebraTemplate::from_algebra(&g);
        let err = t.free_bracket("xi_1", "xi_2").unwrap_err();
        assert!(matches!(err, LieError::NonlinearTemplate { .. }));
    }
}
