//! Finite-dimensional Lie superalgebras presented by structure constants
//! over an exact field: axioms, brackets, adjoint actions, derived series,
//! supertrace characters, and quotient weights.

use std::fmt;

use crate::characters::Character;
use crate::error::LieError;
use crate::linalg::{Matrix, SubQuotient, Subspace};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn compose(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// (−1)^{p(a)·p(b)}
    pub fn sign_product(a: Parity, b: Parity) -> Scalar {
        if a.is_odd() && b.is_odd() {
            Scalar::from_int(-1)
        } else {
            Scalar::one()
        }
    }
}

/// A homogeneous element: coefficients over the full basis, supported on one
/// parity block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousElement {
    pub coeffs: Vec<Scalar>,
    pub parity: Parity,
}

impl HomogeneousElement {
    pub fn new(g: &LieSuperalgebra, coeffs: Vec<Scalar>, parity: Parity) -> Result<Self, LieError> {
        if coeffs.len() != g.dim() {
            return Err(LieError::DimensionMismatch {
                expected: g.dim(),
                got: coeffs.len(),
            });
        }
        for (i, c) in coeffs.iter().enumerate() {
            if g.parity(i) != parity && !c.is_zero() {
                return Err(LieError::Precondition {
                    detail: format!(
                        "element is not homogeneous: support on {} of the other parity",
                        g.name(i)
                    ),
                });
            }
        }
        Ok(HomogeneousElement { coeffs, parity })
    }

    pub fn basis(g: &LieSuperalgebra, i: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); g.dim()];
        coeffs[i] = Scalar::one();
        HomogeneousElement {
            coeffs,
            parity: g.parity(i),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

/// One axiom violation found by `validate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ParityHomogeneity { i: usize, j: usize, k: usize },
    SkewSymmetry { i: usize, j: usize, k: usize },
    Jacobi { a: usize, b: usize, c: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render(&self, g: &LieSuperalgebra) -> String {
        if self.is_valid() {
            return "valid Lie superalgebra".to_string();
        }
        let mut out = String::new();
        for v in &self.violations {
            let line = match v {
                Violation::ParityHomogeneity { i, j, k } => format!(
                    "parity homogeneity fails: [{}, {}] has a component on {}",
                    g.name(*i),
                    g.name(*j),
                    g.name(*k)
                ),
                Violation::SkewSymmetry { i, j, k } => format!(
                    "super skew-symmetry fails for [{}, {}] on {}",
                    g.name(*i),
                    g.name(*j),
                    g.name(*k)
                ),
                Violation::Jacobi { a, b, c } => format!(
                    "super Jacobi identity fails on ({}, {}, {})",
                    g.name(*a),
                    g.name(*b),
                    g.name(*c)
                ),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

/// A Lie superalgebra: named basis with parities and the structure tensor
/// `c[i][j][k]` with `[eᵢ, eⱼ] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieSuperalgebra {
    field: Field,
    names: Vec<String>,
    parities: Vec<Parity>,
    structure: Vec<Vec<Vec<Scalar>>>,
    even_idx: Vec<usize>,
    odd_idx: Vec<usize>,
}

impl fmt::Debug for LieSuperalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LieSuperalgebra({}|{}) [{}]",
            self.even_dim(),
            self.odd_dim(),
            self.names.join(", ")
        )
    }
}

impl LieSuperalgebra {
    pub fn new(
        field: Field,
        names: Vec<String>,
        parities: Vec<Parity>,
        structure: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<LieSuperalgebra, LieError> {
        let n = names.len();
        if parities.len() != n || structure.len() != n {
            return Err(LieError::DimensionMismatch {
                expected: n,
                got: parities.len().min(structure.len()),
            });
        }
        for row in &structure {
            if row.len() != n {
                return Err(LieError::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for entry in row {
                if entry.len() != n {
                    return Err(LieError::DimensionMismatch {
                        expected: n,
                        got: entry.len(),
                    });
                }
                for s in entry {
                    if !field.contains(s) {
                        return Err(LieError::Precondition {
                            detail: format!("structure constant {s} lies outside {field}"),
                        });
                    }
                }
            }
        }
        let even_idx = (0..n).filter(|&i| parities[i] == Parity::Even).collect();
        let odd_idx = (0..n).filter(|&i| parities[i] == Parity::Odd).collect();
        Ok(LieSuperalgebra {
            field,
            names,
            parities,
            structure,
            even_idx,
            odd_idx,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Same structure constants, interpreted over a (possibly larger) field.
    pub fn with_field(&self, field: Field) -> Result<LieSuperalgebra, LieError> {
        LieSuperalgebra::new(
            field,
            self.names.clone(),
            self.parities.clone(),
            self.structure.clone(),
        )
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn even_dim(&self) -> usize {
        self.even_idx.len()
    }

    pub fn odd_dim(&self) -> usize {
        self.odd_idx.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Full basis indices of the even part, in declaration order.
    pub fn even_indices(&self) -> &[usize] {
        &self.even_idx
    }

    pub fn odd_indices(&self) -> &[usize] {
        &self.odd_idx
    }

    /// Position of full index `i` within its parity block.
    pub fn block_position(&self, i: usize) -> usize {
        match self.parity(i) {
            Parity::Even => self.even_idx.iter().position(|&x| x == i).unwrap(),
            Parity::Odd => self.odd_idx.iter().position(|&x| x == i).unwrap(),
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.structure[i][j][k]
    }

    /// [eᵢ, eⱼ] as full coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.structure[i][j].clone()
    }

    /// Bilinear bracket of arbitrary coordinate vectors.
    pub fn bracket_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert_eq!(a.len(), n);
        assert_eq!(b.len(), n);
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for (k, c) in self.structure[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// Super bracket of homogeneous elements; parity adds mod 2.
    pub fn bracket(
        &self,
        a: &HomogeneousElement,
        b: &HomogeneousElement,
    ) -> Result<HomogeneousElement, LieError> {
        if a.coeffs.len() != self.dim() || b.coeffs.len() != self.dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.dim(),
                got: a.coeffs.len().max(b.coeffs.len()),
            });
        }
        Ok(HomogeneousElement {
            coeffs: self.bracket_coords(&a.coeffs, &b.coeffs),
            parity: a.parity.compose(b.parity),
        })
    }

    /// Matrix of b ↦ [a, b] on the full basis.
    pub fn ad_matrix(&self, a: &HomogeneousElement) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(n, n);
        for j in 0..n {
            let mut unit = vec![Scalar::zero(); n];
            unit[j] = Scalar::one();
            let col = self.bracket_coords(&a.coeffs, &unit);
            for (k, v) in col.into_iter().enumerate() {
                *m.at_mut(k, j) = v;
            }
        }
        m
    }

    /// Action of the even basis element with full index `x` on the odd
    /// coordinate space.
    pub fn ad_odd_block(&self, x: usize) -> Matrix {
        debug_assert_eq!(self.parity(x), Parity::Even);
        let od = self.odd_dim();
        Matrix::from_fn(od, od, |k, j| {
            self.structure[x][self.odd_idx[j]][self.odd_idx[k]].clone()
        })
    }

    /// All even-basis actions on the odd coordinate space, declaration order.
    pub fn even_actions_on_odd(&self) -> Vec<Matrix> {
        self.even_idx.iter().map(|&x| self.ad_odd_block(x)).collect()
    }

    /// Check every axiom instance over basis triples. Violations are data.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut report = ValidationReport::default();
        for i in 0..n {
            for j in 0..n {
                let pij = self.parity(i).compose(self.parity(j));
                for k in 0..n {
                    if !self.structure[i][j][k].is_zero() && self.parity(k) != pij {
                        report.violations.push(Violation::ParityHomogeneity { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                let sign = Parity::sign_product(self.parity(i), self.parity(j));
                for k in 0..n {
                    // c[j][i][k] + (−1)^{p(i)p(j)} c[i][j][k] = 0
                    let lhs = &self.structure[j][i][k] + &(&sign * &self.structure[i][j][k]);
                    if !lhs.is_zero() {
                        report.violations.push(Violation::SkewSymmetry { i, j, k });
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !self.jacobi_defect(a, b, c).iter().all(Scalar::is_zero) {
                        report.violations.push(Violation::Jacobi { a, b, c });
                    }
                }
            }
        }
        report
    }

    /// `J(a,b,c) = [[a,b],c] − [a,[b,c]] + (−1)^{p(a)p(b)} [b,[a,c]]`.
    pub fn jacobi_defect(&self, a: usize, b: usize, c: usize) -> Vec<Scalar> {
        let n = self.dim();
        let unit = |i: usize| {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            v
        };
        let ea = unit(a);
        let eb = unit(b);
        let ec = unit(c);
        let t1 = self.bracket_coords(&self.bracket_coords(&ea, &eb), &ec);
        let t2 = self.bracket_coords(&ea, &self.bracket_coords(&eb, &ec));
        let t3 = self.bracket_coords(&eb, &self.bracket_coords(&ea, &ec));
        let sign = Parity::sign_product(self.parity(a), self.parity(b));
        (0..n)
            .map(|k| &(&t1[k] - &t2[k]) + &(&sign * &t3[k]))
            .collect()
    }

    /// Span of [A, B] for subspaces of the full coordinate space.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for u in a.basis().rows_iter() {
            for v in b.basis().rows_iter() {
                rows.push(self.bracket_coords(u, v));
            }
        }
        if rows.is_empty() {
            return Subspace::zero(self.dim());
        }
        Subspace::from_rows(self.dim(), rows)
    }

    /// Derived series of the span `start` until stabilization.
    pub fn derived_series(&self, start: Subspace) -> Vec<Subspace> {
        let mut series = vec![start];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last, last);
            if &next == last {
                break;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    /// Solvability via the derived series of the full superalgebra,
    /// cross-checked against the even-part criterion; disagreement would be
    /// an implementation bug, hence the assert.
    pub fn is_solvable(&self) -> bool {
        let full = self.derived_series(Subspace::full(self.dim()));
        let solvable = full.last().unwrap().is_zero();

        // Even part alone, inside the even coordinate space.
        let ed = self.even_dim();
        let mut even = Subspace::full(ed);
        let even_solvable = loop {
            if even.is_zero() {
                break true;
            }
            let mut rows = Vec::new();
            for u in even.basis().rows_iter() {
                for v in even.basis().rows_iter() {
                    let mut uf = vec![Scalar::zero(); self.dim()];
                    let mut vf = vec![Scalar::zero(); self.dim()];
                    for (pos, &i) in self.even_idx.iter().enumerate() {
                        uf[i] = u[pos].clone();
                        vf[i] = v[pos].clone();
                    }
                    let w = self.bracket_coords(&uf, &vf);
                    rows.push(self.even_idx.iter().map(|&i| w[i].clone()).collect());
                }
            }
            let next = Subspace::from_rows(ed, rows);
            if next == even {
                break false;
            }
            even = next;
        };
        assert_eq!(
            solvable, even_solvable,
            "derived-series solvability disagrees with the even-part criterion"
        );
        solvable
    }

    /// Is the odd-coordinate subspace invariant under every even basis
    /// element?
    pub fn is_invariant_odd_subspace(&self, p: &Subspace) -> bool {
        assert_eq!(p.ambient(), self.odd_dim());
        self.even_idx.iter().all(|&x| {
            let m = self.ad_odd_block(x);
            p.basis().rows_iter().all(|row| p.contains_vector(&m.apply(row)))
        })
    }

    /// Half-supertrace character θ of the pair (g, g_ev ⊕ p): on even x,
    /// half the supertrace of ad x on g/(g_ev ⊕ p). The quotient is purely
    /// odd, so this is −½·tr of the induced action on g_od/p.
    pub fn theta_char(&self, p: &Subspace) -> Result<Character, LieError> {
        if p.ambient() != self.odd_dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.odd_dim(),
                got: p.ambient(),
            });
        }
        if !self.is_invariant_odd_subspace(p) {
            return Err(LieError::NotInvariant);
        }
        let q = SubQuotient::of_full(self.odd_dim(), p);
        let minus_half = Scalar::rational(-1, 2);
        let mut values = Vec::with_capacity(self.even_dim());
        for &x in &self.even_idx {
            let induced = q.induced_operator(&self.ad_odd_block(x))?;
            values.push(&minus_half * &induced.trace());
        }
        let theta = Character::in_l(self, values)?;
        Ok(theta)
    }

    /// Weight of the even action on the one-dimensional quotient g/k,
    /// extended by zero on the odd part. `k` is a subalgebra given in full
    /// coordinates; the quotient must be one-dimensional and the even action
    /// on it well-defined.
    pub fn weight_of_quotient(&self, k: &Subspace) -> Result<Character, LieError> {
        if k.ambient() != self.dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.dim(),
                got: k.ambient(),
            });
        }
        if !self.bracket_span(k, k).basis().rows_iter().all(|r| k.contains_vector(r)) {
            return Err(LieError::NotASubalgebra);
        }
        let codim = self.dim() - k.dim();
        if codim != 1 {
            return Err(LieError::QuotientNotOneDimensional { dim: codim });
        }
        let q = SubQuotient::of_full(self.dim(), k);
        let mut values = Vec::with_capacity(self.even_dim());
        for &x in &self.even_idx {
            let ad = self.ad_matrix(&HomogeneousElement::basis(self, x));
            let induced = q.induced_operator(&ad).map_err(|_| LieError::Precondition {
                detail: format!(
                    "even action on g/k is not well-defined: [{}...] does not preserve k",
                    self.name(x)
                ),
            })?;
            values.push(induced.at(0, 0).clone());
        }
        let mu = Character::weight(values);

        // The extension by zero is a character of the whole superalgebra:
        // it kills [k, ξ] and [ξ, ξ] for the quotient generator ξ.
        let xi = q.lift(&[Scalar::one()]);
        let xi_sq = self.bracket_coords(&xi, &xi);
        assert!(
            mu.eval_full(self, &xi_sq).is_zero(),
            "quotient weight fails to kill [xi, xi]"
        );
        for row in k.basis().rows_iter() {
            let br = self.bracket_coords(row, &xi);
            assert!(
                mu.eval_full(self, &br).is_zero(),
                "quotient weight fails to kill [k, xi]"
            );
        }
        debug_assert!(crate::characters::is_in_l(self, mu.values()));
        Ok(mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::AlgebraBuilder;
    use crate::fixtures;

    #[test]
    fn abelian_validates() {
        let g = AlgebraBuilder::new(Field::Rationals)
            .even("a")
            .even("b")
            .odd("s")
            .odd("t")
            .build()
            .unwrap();
        assert!(g.validate().is_valid());
        assert!(g.is_solvable());
    }

    #[test]
    fn odd_heisenberg_1_1_validates() {
        let g = fixtures::odd_heisenberg_1_1();
        assert!(g.validate().is_valid());
        // single nontrivial triple (xi, xi, xi) checked by hand: [[s,s],s] = [x,s] = 0
        assert!(g.jacobi_defect(1, 1, 1).iter().all(Scalar::is_zero));
    }

    #[test]
    fn kac_printed_fails_jacobi() {
        let g = fixtures::kac_printed();
        let report = g.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Jacobi { .. })));
        // No skew or parity violations: the table is inconsistent only
        // through the Jacobi identity.
        assert!(report
            .violations
            .iter()
            .all(|v| matches!(v, Violation::Jacobi { .. })));
    }

    #[test]
    fn kac_brackets_match_table() {
        let g = fixtures::kac_printed();
        let x = g.index_of("x").unwrap();
        let y = g.index_of("y").unwrap();
        let xi2 = g.index_of("xi_2").unwrap();
        // [x, y] = −y
        let mut expect = vec![Scalar::zero(); g.dim()];
        expect[y] = Scalar::from_int(-1);
        assert_eq!(g.bracket_basis(x, y), expect);
        // [xi_2, xi_2] = x
        let mut expect = vec![Scalar::zero(); g.dim()];
        expect[x] = Scalar::one();
        assert_eq!(g.bracket_basis(xi2, xi2), expect);
        // bracket of an even element with itself vanishes
        let a = HomogeneousElement::basis(&g, x);
        assert!(g.bracket(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn two_dim_nonabelian_even_is_solvable() {
        let g = AlgebraBuilder::new(Field::Rationals)
            .even("x")
            .even("y")
            .bracket("x", "y", &[("y", Scalar::one())])
            .build()
            .unwrap();
        assert!(g.validate().is_valid());
        assert!(g.is_solvable());
    }

    #[test]
    fn kac_repaired_is_solvable_and_valid() {
        let g = fixtures::kac_repaired();
        assert!(g.validate().is_valid());
        assert!(g.is_solvable());
    }

    #[test]
    fn ad_action_on_kac_odd_part() {
        let g = fixtures::kac_repaired();
        let x = g.index_of("x").unwrap();
        let m = g.ad_odd_block(x);
        // odd order: xi_m2, xi_m1, xi_1, xi_2 with weights 0, 1, −1, 0
        let expect = Matrix::from_fn(4, 4, |i, j| {
            if i != j {
                Scalar::zero()
            } else {
                match i {
                    1 => Scalar::one(),
                    2 => Scalar::from_int(-1),
                    _ => Scalar::zero(),
                }
            }
        });
        assert_eq!(m, expect);
        // central u acts by zero
        let u = g.index_of("u").unwrap();
        assert!(g.ad_matrix(&HomogeneousElement::basis(&g, u)).is_zero());
    }

    #[test]
    fn ad_is_a_super_homomorphism() {
        let g = fixtures::kac_repaired();
        let n = g.dim();
        for i in 0..n {
            for j in 0..n {
                let a = HomogeneousElement::basis(&g, i);
                let b = HomogeneousElement::basis(&g, j);
                let ad_bracket = g.ad_matrix(&g.bracket(&a, &b).unwrap());
                let ada = g.ad_matrix(&a);
                let adb = g.ad_matrix(&b);
                let sign = Parity::sign_product(a.parity, b.parity);
                let rhs = ada.mul(&adb).sub(&adb.mul(&ada).scale(&sign));
                assert_eq!(ad_bracket, rhs, "ad[{i},{j}]");
            }
        }
    }

    #[test]
    fn theta_on_kac_polarizations() {
        let g = fixtures::kac_repaired();
        // p = span(xi_m2, xi_m1): odd coordinates are (xi_m2, xi_m1, xi_1, xi_2)
        let p = Subspace::from_rows(
            4,
            vec![
                vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::one(), Scalar::zero(), Scalar::zero()],
            ],
        );
        let theta = g.theta_char(&p).unwrap();
        // Direct-trace oracle: ad x on the quotient spanned by (xi_1, xi_2)
        // has diagonal (−1, 0), so θ(x) = −½·(−1) = ½; y, z, u give 0.
        assert_eq!(theta.values(), &[
            Scalar::rational(1, 2),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero()
        ]);

        // t = span(xi_1, xi_m2): θ = −½ x*
        let t = Subspace::from_rows(
            4,
            vec![
                vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::zero()],
            ],
        );
        let theta_t = g.theta_char(&t).unwrap();
        assert_eq!(theta_t.values(), &[
            Scalar::rational(-1, 2),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero()
        ]);

        // p = g_od gives θ = 0 (the quotient is zero)
        let full = Subspace::full(4);
        let theta0 = g.theta_char(&full).unwrap();
        assert!(theta0.values().iter().all(Scalar::is_zero));
    }

    #[test]
    fn theta_vanishes_on_even_commutators() {
        let g = fixtures::kac_repaired();
        let p = Subspace::from_rows(
            4,
            vec![
                vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::one(), Scalar::zero(), Scalar::zero()],
            ],
        );
        let theta = g.theta_char(&p).unwrap();
        for &i in g.even_indices() {
            for &j in g.even_indices() {
                let br = g.bracket_basis(i, j);
                assert!(theta.eval_full(&g, &br).is_zero());
            }
        }
    }

    #[test]
    fn theta_rejects_non_invariant_subspace() {
        let g = fixtures::kac_repaired();
        // span(xi_1, xi_2) is not invariant in the repaired algebra:
        // [z, xi_1] = ½ xi_m2 falls outside.
        let s = Subspace::from_rows(
            4,
            vec![
                vec![Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::one()],
            ],
        );
        assert_eq!(g.theta_char(&s).unwrap_err(), LieError::NotInvariant);
    }

    #[test]
    fn quotient_weight_examples() {
        let g = fixtures::kac_repaired();
        // k = g_ev ⊕ span(xi_m2, xi_m1, xi_1); quotient spanned by xi_2.
        let n = g.dim();
        let mut rows = Vec::new();
        for &i in g.even_indices() {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            rows.push(v);
        }
        for name in ["xi_m2", "xi_m1", "xi_1"] {
            let mut v = vec![Scalar::zero(); n];
            v[g.index_of(name).unwrap()] = Scalar::one();
            rows.push(v);
        }
        let k = Subspace::from_rows(n, rows);
        let mu = g.weight_of_quotient(&k).unwrap();
        assert!(mu.values().iter().all(Scalar::is_zero), "mu = 0 since [x, xi_2] = 0");

        // (1|1) fixture with k = span(x): quotient spanned by xi, mu = 0.
        let h = fixtures::odd_heisenberg_1_1();
        let k = Subspace::from_rows(2, vec![vec![Scalar::one(), Scalar::zero()]]);
        let mu = h.weight_of_quotient(&k).unwrap();
        assert!(mu.values().iter().all(Scalar::is_zero));

        // abelian: any hyperplane through a basis vector
        let a = AlgebraBuilder::new(Field::Rationals)
            .even("a")
            .even("b")
            .build()
            .unwrap();
        let k = Subspace::from_rows(2, vec![vec![Scalar::one(), Scalar::zero()]]);
        let mu = a.weight_of_quotient(&k).unwrap();
        assert!(mu.values().iter().all(Scalar::is_zero));
    }

    #[test]
    fn quotient_weight_rejects_bad_input() {
        let g = fixtures::kac_repaired();
        // not codim 1
        let k = Subspace::from_rows(g.dim(), vec![]);
        assert!(matches!(
            g.weight_of_quotient(&k),
            Err(LieError::QuotientNotOneDimensional { .. }) | Err(LieError::NotASubalgebra)
        ));
        // not a subalgebra: span of everything except x ([xi_2,xi_2] = x)
        let n = g.dim();
        let rows: Vec<Vec<Scalar>> = (1..n)
            .map(|i| {
                let mut v = vec![Scalar::zero(); n];
                v[i] = Scalar::one();
                v
            })
            .collect();
        let k = Subspace::from_rows(n, rows);
        assert_eq!(g.weight_of_quotient(&k).unwrap_err(), LieError::NotASubalgebra);
    }
}
