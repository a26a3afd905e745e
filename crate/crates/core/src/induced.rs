//! Induced, twisted induced, coinduced and dual modules as explicit action
//! matrices over a PBW monomial basis.
//!
//! The basis of an induced module is the set of ordered square-free
//! monomials in a complement of p inside the odd part, applied to the
//! generator v. Actions are computed by the normal-ordering recursion
//! `a·(η·w) = [a, η]·w + (−1)^{p(a)} η·(a·w)`
//! with base case a·v = λ'(a)·v on the inducing subalgebra. Every
//! constructed module is checked against the super-representation law on
//! all basis pairs before it is returned.

use std::collections::HashMap;

use crate::characters::{form_of, form_value, is_in_l, Character};
use crate::eigen::triangular_weights;
use crate::error::LieError;
use crate::linalg::{kernel, Matrix, Subspace};
use crate::scalar::Scalar;
use crate::superalgebra::{LieSuperalgebra, Parity};

/// Which character the induction uses: λ, λ + θ_h, or λ − θ_h.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Twist {
    None,
    Plus,
    Minus,
}

impl std::fmt::Display for Twist {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Twist::None => write!(f, "none"),
            Twist::Plus => write!(f, "plus"),
            Twist::Minus => write!(f, "minus"),
        }
    }
}

/// A PBW basis monomial: ascending positions into the complement generator
/// list; the empty product is the generator v itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialLabel {
    pub factors: Vec<usize>,
    pub parity: Parity,
}

impl MonomialLabel {
    pub fn render(&self, g: &LieSuperalgebra, complement: &[usize]) -> String {
        if self.factors.is_empty() {
            return "v".to_string();
        }
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|&pos| g.name(complement[pos]).to_string())
            .collect();
        parts.push("v".to_string());
        parts.join("·")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleRole {
    Induced,
    Dual,
    Coinduced,
}

/// How a module was built; carried for certificates and debugging.
#[derive(Debug, Clone)]
pub struct Provenance {
    pub lambda: Character,
    pub odd_part: Subspace,
    pub twist: Twist,
    pub role: ModuleRole,
    /// Full-basis indices of the chosen complement generators.
    pub complement: Vec<usize>,
}

/// A finite-dimensional module given by one action matrix per algebra basis
/// element, with a parity-tagged basis. Self-contained: it carries the
/// algebra basis parities needed for every super sign rule.
#[derive(Clone)]
pub struct ModuleRep {
    pub labels: Vec<MonomialLabel>,
    pub parities: Vec<Parity>,
    pub actions: Vec<Matrix>,
    pub algebra_parities: Vec<Parity>,
    pub provenance: Option<Provenance>,
}

impl std::fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModuleRep({}|{})", self.dim_even(), self.dim_odd())
    }
}

impl ModuleRep {
    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn dim_even(&self) -> usize {
        self.parities.iter().filter(|p| **p == Parity::Even).count()
    }

    pub fn dim_odd(&self) -> usize {
        self.parities.iter().filter(|p| p.is_odd()).count()
    }

    pub fn action(&self, basis_idx: usize) -> &Matrix {
        &self.actions[basis_idx]
    }

    /// Action of an arbitrary algebra element in full coordinates.
    pub fn element_action(&self, coeffs: &[Scalar]) -> Matrix {
        assert_eq!(coeffs.len(), self.actions.len());
        let n = self.dim();
        let mut out = Matrix::zero(n, n);
        for (c, m) in coeffs.iter().zip(&self.actions) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// Rebuild from raw data (certificate reload); labels carry parity only.
    pub fn from_raw(
        actions: Vec<Matrix>,
        parities: Vec<Parity>,
        algebra_parities: Vec<Parity>,
    ) -> ModuleRep {
        let labels = parities
            .iter()
            .map(|&p| MonomialLabel {
                factors: vec![],
                parity: p,
            })
            .collect();
        ModuleRep {
            labels,
            parities,
            actions,
            algebra_parities,
            provenance: None,
        }
    }

    /// The parity-change functor Π: same actions, flipped basis parities.
    pub fn parity_flip(&self) -> ModuleRep {
        ModuleRep {
            labels: self
                .labels
                .iter()
                .map(|l| MonomialLabel {
                    factors: l.factors.clone(),
                    parity: l.parity.flip(),
                })
                .collect(),
            parities: self.parities.iter().map(|p| p.flip()).collect(),
            actions: self.actions.clone(),
            algebra_parities: self.algebra_parities.clone(),
            provenance: self.provenance.clone(),
        }
    }

    /// Exact super-representation-law check on every basis pair:
    /// `ρ([a,b]) = ρ(a)ρ(b) − (−1)^{p(a)p(b)} ρ(b)ρ(a)`.
    pub fn representation_law_holds(&self, g: &LieSuperalgebra) -> bool {
        let n = g.dim();
        if self.actions.len() != n {
            return false;
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.element_action(&g.bracket_basis(i, j));
                let sign = Parity::sign_product(g.parity(i), g.parity(j));
                let rhs = self.actions[i]
                    .mul(&self.actions[j])
                    .sub(&self.actions[j].mul(&self.actions[i]).scale(&sign));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Every action matrix must respect the parity split: even algebra
    /// elements preserve it, odd ones swap it.
    pub fn parity_homogeneous(&self) -> bool {
        for (a, m) in self.actions.iter().enumerate() {
            let pa = self.algebra_parities[a];
            for i in 0..self.dim() {
                for j in 0..self.dim() {
                    if m.at(i, j).is_zero() {
                        continue;
                    }
                    let expect = self.parities[j].compose(pa);
                    if self.parities[i] != expect {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Same underlying matrices and parities, ignoring provenance.
    pub fn same_data(&self, other: &ModuleRep) -> bool {
        self.parities == other.parities && self.actions == other.actions
    }
}

/// Subsets of {0..m-1} ordered by (size, lexicographic on the sorted tuple),
/// as bit masks. The empty set (the generator v) comes first.
fn subsets_in_order(m: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(1 << m);
    for size in 0..=m {
        let mut current: Vec<usize> = (0..size).collect();
        loop {
            if size == 0 {
                out.push(0);
                break;
            }
            let mask = current.iter().fold(0u32, |acc, &b| acc | (1 << b));
            out.push(mask);
            // next k-combination in lexicographic order
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if current[i] != i + m - size {
                    current[i] += 1;
                    for j in (i + 1)..size {
                        current[j] = current[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    current.clear();
                    break;
                }
            }
            if current.is_empty() {
                break;
            }
        }
    }
    out
}

struct InduceCtx<'a> {
    g: &'a LieSuperalgebra,
    p: &'a Subspace,
    lam_values: Vec<Scalar>, // effective character on the even basis
    complement: Vec<usize>,  // full indices
    comp_of_odd_pos: HashMap<usize, usize>,
    subsets: Vec<u32>,
    index_of: HashMap<u32, usize>,
    act_memo: HashMap<(usize, u32), Vec<Scalar>>,
    eta_memo: HashMap<(usize, u32), Vec<Scalar>>,
}

impl<'a> InduceCtx<'a> {
    fn dim(&self) -> usize {
        self.subsets.len()
    }

    fn monomial_vec(&self, mask: u32) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[self.index_of[&mask]] = Scalar::one();
        v
    }

    fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
        for (a, b) in acc.iter_mut().zip(v) {
            *a += b;
        }
    }

    /// Action of the algebra basis element `a` on the monomial `mask`.
    fn act(&mut self, a: usize, mask: u32) -> Vec<Scalar> {
        if let Some(v) = self.act_memo.get(&(a, mask)) {
            return v.clone();
        }
        let result = if mask == 0 {
            match self.g.parity(a) {
                Parity::Even => {
                    let pos = self.g.block_position(a);
                    let mut v = vec![Scalar::zero(); self.dim()];
                    v[0] = self.lam_values[pos].clone();
                    v
                }
                Parity::Odd => {
                    // a = (component in p)·v + Σ r_i η_i·v; the p part and
                    // the character kill v.
                    let odd_pos = self.g.block_position(a);
                    let mut unit = vec![Scalar::zero(); self.g.odd_dim()];
                    unit[odd_pos] = Scalar::one();
                    let rem = reduce_by(self.p, &unit);
                    let mut v = vec![Scalar::zero(); self.dim()];
                    for (odd_i, c) in rem.iter().enumerate() {
                        if !c.is_zero() {
                            let comp = self.comp_of_odd_pos[&odd_i];
                            let idx = self.index_of[&(1u32 << comp)];
                            v[idx] += c;
                        }
                    }
                    v
                }
            }
        } else {
            let lead = mask.trailing_zeros() as usize;
            let rest = mask & !(1u32 << lead);
            let eta_full = self.complement[lead];
            let bracket = self.g.bracket_basis(a, eta_full);
            let mut acc = self.elem_act(&bracket, rest);
            let inner = self.act(a, rest);
            let moved = self.eta_mul_vec(lead, &inner);
            if self.g.parity(a).is_odd() {
                for (x, y) in acc.iter_mut().zip(&moved) {
                    *x -= y;
                }
            } else {
                Self::add_into(&mut acc, &moved);
            }
            acc
        };
        self.act_memo.insert((a, mask), result.clone());
        result
    }

    /// Action of an arbitrary algebra element (full coordinates) on a
    /// monomial.
    fn elem_act(&mut self, coeffs: &[Scalar], mask: u32) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.dim()];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let part = self.act(k, mask);
            for (x, y) in acc.iter_mut().zip(&part) {
                *x += &(c * y);
            }
        }
        acc
    }

    /// Left multiplication by the complement generator η_i on a monomial.
    fn eta_mul(&mut self, i: usize, mask: u32) -> Vec<Scalar> {
        if let Some(v) = self.eta_memo.get(&(i, mask)) {
            return v.clone();
        }
        let result = if mask == 0 {
            self.monomial_vec(1u32 << i)
        } else {
            let j = mask.trailing_zeros() as usize;
            let rest = mask & !(1u32 << j);
            if i < j {
                self.monomial_vec((1u32 << i) | mask)
            } else if i == j {
                // η_i² = ½[η_i, η_i] in the enveloping algebra
                let br = self.g.bracket_basis(self.complement[i], self.complement[i]);
                let half: Vec<Scalar> = br.iter().map(|c| c * &Scalar::rational(1, 2)).collect();
                self.elem_act(&half, rest)
            } else {
                // η_i η_j = [η_i, η_j] − η_j η_i
                let br = self.g.bracket_basis(self.complement[i], self.complement[j]);
                let mut acc = self.elem_act(&br, rest);
                let inner = self.eta_mul(i, rest);
                let swapped = self.eta_mul_vec(j, &inner);
                for (x, y) in acc.iter_mut().zip(&swapped) {
                    *x -= y;
                }
                acc
            }
        };
        self.eta_memo.insert((i, mask), result.clone());
        result
    }

    fn eta_mul_vec(&mut self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.dim()];
        for idx in 0..v.len() {
            if v[idx].is_zero() {
                continue;
            }
            let mask = self.subsets[idx];
            let part = self.eta_mul(i, mask);
            for (x, y) in acc.iter_mut().zip(&part) {
                *x += &(&v[idx] * y);
            }
        }
        acc
    }
}

/// Remainder of v after eliminating the pivot coordinates of `p`: the
/// component in the standard complement of p.
fn reduce_by(p: &Subspace, v: &[Scalar]) -> Vec<Scalar> {
    let mut rem = v.to_vec();
    for (i, &pivot) in p.pivots().iter().enumerate() {
        let c = rem[pivot].clone();
        if !c.is_zero() {
            for (j, b) in p.basis().row(i).iter().enumerate() {
                let sub = &c * b;
                rem[j] -= &sub;
            }
        }
    }
    rem
}

/// The module U(g) ⊗_{U(h)} ℂ_{λ'} for h = g_ev ⊕ p, with λ' = λ, λ+θ_h or
/// λ−θ_h according to the twist. `p` must be invariant and isotropic for
/// f_λ; maximality is not required (subordinate subalgebras are allowed).
pub fn induce(
    g: &LieSuperalgebra,
    lambda: &Character,
    p: &Subspace,
    twist: Twist,
) -> Result<ModuleRep, LieError> {
    if p.ambient() != g.odd_dim() {
        return Err(LieError::DimensionMismatch {
            expected: g.odd_dim(),
            got: p.ambient(),
        });
    }
    if !lambda.checked_in_l() && !is_in_l(g, lambda.values()) {
        return Err(LieError::NotInL);
    }
    if !g.is_invariant_odd_subspace(p) {
        return Err(LieError::NotInvariant);
    }
    let f = form_of(g, lambda)?;
    let rows = p.basis_rows();
    for (i, a) in rows.iter().enumerate() {
        for b in rows.iter().skip(i) {
            if !form_value(&f, a, b).is_zero() {
                return Err(LieError::NotIsotropic);
            }
        }
    }

    let lam_eff = match twist {
        Twist::None => lambda.clone(),
        Twist::Plus => lambda.add(&g.theta_char(p)?),
        Twist::Minus => lambda.sub(&g.theta_char(p)?),
    };

    // Complement: odd basis vectors not occurring as pivots of p, in
    // declaration order.
    let pivots = p.pivots();
    let complement: Vec<usize> = g
        .odd_indices()
        .iter()
        .enumerate()
        .filter(|(pos, _)| !pivots.contains(pos))
        .map(|(_, &full)| full)
        .collect();
    let m = complement.len();
    assert!(m <= 30, "PBW basis would be astronomically large");
    let subsets = subsets_in_order(m);
    let index_of: HashMap<u32, usize> = subsets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let comp_of_odd_pos: HashMap<usize, usize> = complement
        .iter()
        .enumerate()
        .map(|(ci, &full)| (g.block_position(full), ci))
        .collect();

    let mut ctx = InduceCtx {
        g,
        p,
        lam_values: lam_eff.values().to_vec(),
        complement: complement.clone(),
        comp_of_odd_pos,
        subsets: subsets.clone(),
        index_of,
        act_memo: HashMap::new(),
        eta_memo: HashMap::new(),
    };

    let dim = ctx.dim();
    let mut actions = Vec::with_capacity(g.dim());
    for a in 0..g.dim() {
        let mut mat = Matrix::zero(dim, dim);
        for (col, &mask) in subsets.iter().enumerate() {
            let image = ctx.act(a, mask);
            for (row, val) in image.into_iter().enumerate() {
                *mat.at_mut(row, col) = val;
            }
        }
        actions.push(mat);
    }

    let labels: Vec<MonomialLabel> = subsets
        .iter()
        .map(|&mask| {
            let factors: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
            let parity = if factors.len() % 2 == 0 {
                Parity::Even
            } else {
                Parity::Odd
            };
            MonomialLabel { factors, parity }
        })
        .collect();
    let parities: Vec<Parity> = labels.iter().map(|l| l.parity).collect();

    let module = ModuleRep {
        labels,
        parities,
        actions,
        algebra_parities: (0..g.dim()).map(|i| g.parity(i)).collect(),
        provenance: Some(Provenance {
            lambda: lambda.clone(),
            odd_part: p.clone(),
            twist,
            role: ModuleRole::Induced,
            complement,
        }),
    };
    assert!(
        module.representation_law_holds(g),
        "induced module violates the representation law; this is a bug"
    );
    assert!(module.parity_homogeneous());
    Ok(module)
}

/// Super dual: a·φ = −(−1)^{p(a)p(φ)} φ∘ρ(a) on the dual basis.
pub fn dual_module(w: &ModuleRep) -> ModuleRep {
    let n = w.dim();
    let actions: Vec<Matrix> = w
        .actions
        .iter()
        .enumerate()
        .map(|(a, m)| {
            let pa = w.algebra_parities[a];
            Matrix::from_fn(n, n, |k, j| {
                let sign = Parity::sign_product(pa, w.parities[j]);
                -&(&sign * m.at(j, k))
            })
        })
        .collect();
    ModuleRep {
        labels: w.labels.clone(),
        parities: w.parities.clone(),
        actions,
        algebra_parities: w.algebra_parities.clone(),
        provenance: w.provenance.clone().map(|p| Provenance {
            role: ModuleRole::Dual,
            ..p
        }),
    }
}

/// Twisted coinduced module CI(λ) = Coind(λ − θ_h), realized through the
/// dual: Coind(ν) ≅ (Ind(−ν))*, so CI(λ) = (Ind(−(λ − θ_h)))*.
pub fn coinduce(
    g: &LieSuperalgebra,
    lambda: &Character,
    p: &Subspace,
) -> Result<ModuleRep, LieError> {
    let theta = g.theta_char(p)?;
    let nu = lambda.sub(&theta).neg();
    let ind = induce(g, &nu, p, Twist::None)?;
    let mut dual = dual_module(&ind);
    debug_assert!(dual.representation_law_holds(g));
    if let Some(prov) = &mut dual.provenance {
        prov.role = ModuleRole::Coinduced;
        prov.lambda = lambda.clone();
    }
    Ok(dual)
}

/// One generalized weight of the even action with its multiplicity and
/// parity split.
#[derive(Debug, Clone)]
pub struct WeightEntry {
    pub weight: Character,
    pub multiplicity: usize,
    pub even_mult: usize,
    pub odd_mult: usize,
}

/// Simultaneous generalized weights of the even action, with multiplicities
/// summing to the dimension. Even elements preserve the parity split, so
/// the multiset is computed per block and merged.
pub fn module_weights(g: &LieSuperalgebra, w: &ModuleRep) -> Result<Vec<WeightEntry>, LieError> {
    let mut entries: Vec<WeightEntry> = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let block: Vec<usize> = (0..w.dim()).filter(|&i| w.parities[i] == parity).collect();
        if block.is_empty() {
            continue;
        }
        let family: Vec<Matrix> = g
            .even_indices()
            .iter()
            .map(|&x| {
                Matrix::from_fn(block.len(), block.len(), |i, j| {
                    w.actions[x].at(block[i], block[j]).clone()
                })
            })
            .collect();
        for (tuple, mult) in triangular_weights(&family, g.field())? {
            let weight = Character::weight(tuple);
            match entries.iter_mut().find(|e| e.weight == weight) {
                Some(e) => {
                    e.multiplicity += mult;
                    if parity == Parity::Even {
                        e.even_mult += mult;
                    } else {
                        e.odd_mult += mult;
                    }
                }
                None => entries.push(WeightEntry {
                    weight,
                    multiplicity: mult,
                    even_mult: if parity == Parity::Even { mult } else { 0 },
                    odd_mult: if parity == Parity::Odd { mult } else { 0 },
                }),
            }
        }
    }
    debug_assert_eq!(
        entries.iter().map(|e| e.multiplicity).sum::<usize>(),
        w.dim()
    );
    Ok(entries)
}

/// Joint kernel of the action of a subspace F of the odd part:
/// {u : ξ·u = 0 for every ξ in F}.
pub fn singular_space(g: &LieSuperalgebra, w: &ModuleRep, f: &Subspace) -> Subspace {
    assert_eq!(f.ambient(), g.odd_dim());
    let mut result = Subspace::full(w.dim());
    for row in f.basis().rows_iter() {
        let mut full = vec![Scalar::zero(); g.dim()];
        for (pos, &idx) in g.odd_indices().iter().enumerate() {
            full[idx] = row[pos].clone();
        }
        let action = w.element_action(&full);
        result = result.intersect(&kernel(&action));
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::polarizations::find_polarization;

    fn odd_span(g: &LieSuperalgebra, names: &[&str]) -> Subspace {
        let rows: Vec<Vec<Scalar>> = names
            .iter()
            .map(|n| {
                let full = g.index_of(n).unwrap();
                let mut v = vec![Scalar::zero(); g.odd_dim()];
                v[g.block_position(full)] = Scalar::one();
                v
            })
            .collect();
        Subspace::from_rows(g.odd_dim(), rows)
    }

    #[test]
    fn subset_order_is_size_then_lex() {
        assert_eq!(
            subsets_in_order(3),
            vec![0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]
        );
        assert_eq!(subsets_in_order(0), vec![0]);
    }

    #[test]
    fn heisenberg_induced_from_xi1() {
        let g = fixtures::heisenberg_1_2();
        let lam = Character::dual_basis(&g, "x").unwrap();
        let p = odd_span(&g, &["xi_1"]);
        let w = induce(&g, &lam, &p, Twist::None).unwrap();
        assert_eq!((w.dim_even(), w.dim_odd()), (1, 1));
        // Hand-rewritten 2×2 oracles: x = id, ξ₂ raises, ξ₁ lowers.
        let x = g.index_of("x").unwrap();
        let xi1 = g.index_of("xi_1").unwrap();
        let xi2 = g.index_of("xi_2").unwrap();
        assert_eq!(w.action(x), &Matrix::identity(2));
        let raise = Matrix::new(
            2,
            2,
            vec![Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::zero()],
        );
        let lower = Matrix::new(
            2,
            2,
            vec![Scalar::zero(), Scalar::one(), Scalar::zero(), Scalar::zero()],
        );
        assert_eq!(w.action(xi2), &raise);
        assert_eq!(w.action(xi1), &lower);
    }

    #[test]
    fn odd_square_acts_by_half_bracket() {
        let g = fixtures::odd_heisenberg_1_1();
        let lam = Character::dual_basis(&g, "x").unwrap();
        let p = Subspace::zero(1);
        let w = induce(&g, &lam, &p, Twist::None).unwrap();
        assert_eq!((w.dim_even(), w.dim_odd()), (1, 1));
        let xi = g.index_of("xi").unwrap();
        // ξ·(ξ·v) = ½[ξ,ξ]·v = ½·x·v = ½v
        let m = w.action(xi);
        let sq = m.mul(m);
        assert_eq!(sq, Matrix::identity(2).scale(&Scalar::rational(1, 2)));
    }

    #[test]
    fn kac_weights_are_lambda_and_lambda_minus_x_star() {
        let g = fixtures::kac_repaired();
        let lam = Character::dual_basis(&g, "u").unwrap();
        let p = odd_span(&g, &["xi_m2", "xi_m1"]);
        let w = induce(&g, &lam, &p, Twist::None).unwrap();
        assert_eq!((w.dim_even(), w.dim_odd()), (2, 2));
        let weights = module_weights(&g, &w).unwrap();
        assert_eq!(weights.len(), 2);
        let x_star = Character::dual_basis(&g, "x").unwrap();
        let lam_minus = lam.sub(&x_star);
        for e in &weights {
            assert_eq!(e.multiplicity, 2);
            assert_eq!((e.even_mult, e.odd_mult), (1, 1));
            assert!(e.weight == lam || e.weight == lam_minus, "unexpected weight");
        }
        assert_ne!(weights[0].weight, weights[1].weight);
    }

    #[test]
    fn dimension_is_two_to_the_complement() {
        let g = fixtures::kac_repaired();
        for (name, lam) in [
            ("u", Character::dual_basis(&g, "u").unwrap()),
            ("x", Character::dual_basis(&g, "x").unwrap()),
        ] {
            let pol = find_polarization(&g, &lam).unwrap();
            let f = form_of(&g, &lam).unwrap();
            let w = induce(&g, &lam, &pol.odd_part, Twist::Plus).unwrap();
            assert_eq!(
                w.dim(),
                1 << f.rank.div_ceil(2),
                "dim I({name}*) = 2^(rank/2 rounded up)"
            );
        }
    }

    #[test]
    fn twist_is_sugar_for_shifted_character() {
        let g = fixtures::kac_repaired();
        let lam = Character::dual_basis(&g, "u").unwrap();
        let p = odd_span(&g, &["xi_m2", "xi_m1"]);
        let theta = g.theta_char(&p).unwrap();
        let a = induce(&g, &lam, &p, Twist::Plus).unwrap();
        let b = induce(&g, &lam.add(&theta), &p, Twist::None).unwrap();
        assert!(a.same_data(&b));
        let c = induce(&g, &lam, &p, Twist::Minus).unwrap();
        let d = induce(&g, &lam.sub(&theta), &p, Twist::None).unwrap();
        assert!(c.same_data(&d));
    }

    #[test]
    fn induce_rejects_bad_subspaces() {
        let g = fixtures::kac_repaired();
        let lam = Character::dual_basis(&g, "u").unwrap();
        // The full odd part is invariant but pairs nontrivially under u*.
        assert_eq!(
            induce(&g, &lam, &Subspace::full(4), Twist::None).unwrap_err(),
            LieError::NotIsotropic
        );
        // span(xi_m2, xi_2) is isotropic-defective AND not invariant;
        // invariance is checked first.
        let p = odd_span(&g, &["xi_m2", "xi_2"]);
        assert_eq!(
            induce(&g, &lam, &p, Twist::None).unwrap_err(),
            LieError::NotInvariant
        );
    }

    #[test]
    fn dual_of_trivial_and_double_dual() {
        let g = fixtures::heisenberg_1_2();
        let zero = Character::zero(1);
        let p = Subspace::full(2);
        let w = induce(&g, &zero, &p, Twist::None).unwrap();
        assert_eq!(w.dim(), 1);
        let d = dual_module(&w);
        assert!(d.representation_law_holds(&g));
        assert!(d.same_data(&w), "dual of the trivial module is trivial");

        let lam = Character::dual_basis(&g, "x").unwrap();
        let p = odd_span(&g, &["xi_1"]);
        let w = induce(&g, &lam, &p, Twist::None).unwrap();
        let dd = dual_module(&dual_module(&w));
        assert!(dd.representation_law_holds(&g));
        // Double dual negates odd actions, so it is not literally the same
        // data, but an even intertwiner identifies it with the original.
        let r = crate::analysis::find_intertwiner(&dd, &w);
        assert!(r.exists_even);
    }

    #[test]
    fn dual_flips_weights() {
        let g = fixtures::heisenberg_1_2();
        let lam = Character::dual_basis(&g, "x").unwrap();
        let p = odd_span(&g, &["xi_1"]);
        let w = induce(&g, &lam, &p, Twist::None).unwrap();
        let d = dual_module(&w);
        let x = g.index_of("x").unwrap();
        // x acted as the identity, so on the dual it acts as −identity.
        assert_eq!(d.action(x), &Matrix::identity(2).scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn coinduced_dimension_matches() {
        let g = fixtures::odd_heisenberg_1_1();
        let lam = Character::dual_basis(&g, "x").unwrap();
        let p = Subspace::zero(1);
        let ci = coinduce(&g, &lam, &p).unwrap();
        assert_eq!((ci.dim_even(), ci.dim_odd()), (1, 1));
        assert!(ci.representation_law_holds(&g));
    }

    #[test]
    fn singular_space_examples() {
        let g = fixtures::heisenberg_1_2();
        let lam = Character::dual_basis(&g, "x").unwrap();
        let p = odd_span(&g, &["xi_1"]);
        let w = induce(&g, &lam, &p, Twist::None).unwrap();
        // F = span(ξ₁): kernel of the lowering matrix = span(v).
        let s = singular_space(&g, &w, &p);
        assert_eq!(s.dim(), 1);
        let mut v0 = vec![Scalar::zero(); 2];
        v0[0] = Scalar::one();
        assert!(s.contains_vector(&v0));
        // F = 0: the whole module.
        assert_eq!(singular_space(&g, &w, &Subspace::zero(2)), Subspace::full(2));

        // (1|1): kernel of the odd action has dimension 1 inside span(v, ξv).
        let h = fixtures::odd_heisenberg_1_1();
        let lamh = Character::dual_basis(&h, "x").unwrap();
        let wh = induce(&h, &lamh, &Subspace::zero(1), Twist::None).unwrap();
        let sh = singular_space(&h, &wh, &Subspace::full(1));
        assert_eq!(sh.dim(), 0, "the odd generator acts invertibly here");
    }

    #[test]
    fn trivial_module_weight() {
        let g = fixtures::abelian_2_2();
        let zero = Character::zero(2);
        let w = induce(&g, &zero, &Subspace::full(2), Twist::None).unwrap();
        let weights = module_weights(&g, &w).unwrap();
        assert_eq!(weights.len(), 1);
        assert!(weights[0].weight.is_zero());
        assert_eq!(weights[0].multiplicity, 1);
    }

    #[test]
    fn heisenberg_module_has_one_weight_of_multiplicity_two() {
        // [x, ξ₂] = 0, so both basis vectors sit at the same weight λ.
        let g = fixtures::heisenberg_1_2();
        let lam = Character::dual_basis(&g, "x").unwrap();
        let p = odd_span(&g, &["xi_1"]);
        let w = induce(&g, &lam, &p, Twist::None).unwrap();
        let weights = module_weights(&g, &w).unwrap();
        assert_eq!(weights.len(), 1);
        assert_eq!(weights[0].weight, lam);
        assert_eq!(weights[0].multiplicity, 2);
        assert_eq!((weights[0].even_mult, weights[0].odd_mult), (1, 1));
    }

    #[test]
    fn coinduction_of_zero_on_abelian_is_trivial() {
        let g = fixtures::abelian_2_2();
        let zero = Character::zero(2);
        let ci = coinduce(&g, &zero, &Subspace::full(2)).unwrap();
        assert_eq!(ci.dim(), 1);
        assert!(ci.actions.iter().all(Matrix::is_zero));
    }

    #[test]
    fn purely_even_algebra_induces_the_character_line() {
        // With no odd part this is ordinary Lie theory: the induced module
        // is the one-dimensional representation given by λ itself.
        let g = crate::builder::AlgebraBuilder::new(crate::scalar::Field::Rationals)
            .even("x")
            .even("y")
            .bracket("x", "y", &[("y", Scalar::one())])
            .build()
            .unwrap();
        let lam = Character::dual_basis(&g, "x").unwrap();
        let pol = crate::polarizations::find_polarization(&g, &lam).unwrap();
        assert!(pol.odd_part.is_zero());
        let w = induce(&g, &lam, &pol.odd_part, Twist::Plus).unwrap();
        assert_eq!((w.dim_even(), w.dim_odd()), (1, 0));
        let x = g.index_of("x").unwrap();
        assert_eq!(w.action(x), &Matrix::identity(1));
    }
}
