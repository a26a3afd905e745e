//! Dense univariate polynomials over the working field.
//!
//! Used for characteristic polynomials and the parametric minor tests. Root
//! extraction is deliberately limited: rational-root search plus quadratic
//! factors after the in-field linear factors are divided out. Anything that
//! would need an irreducible factor of degree ≥ 3 is reported as an
//! obstruction instead of being approximated.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::LieError;
use crate::scalar::{Field, Scalar};

/// Polynomial with coefficients in ascending degree order; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Scalar) -> Poly {
        Poly::new(vec![c])
    }

    /// t − root
    pub fn linear(root: &Scalar) -> Poly {
        Poly::new(vec![-root, Scalar::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> &Scalar {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero);
            out.push(&a + &b);
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; panics on zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        if self.is_zero() || self.degree() < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); self.degree() - dd + 1];
        let lead_inv = divisor.leading().inv().expect("zero leading coefficient");
        for k in (dd..rem.len()).rev() {
            let factor = &rem[k] * &lead_inv;
            if factor.is_zero() {
                continue;
            }
            quot[k - dd] = factor.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let sub = &factor * dc;
                rem[k - dd + j] -= &sub;
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * &Scalar::from_int(i as i64 + 1))
                .collect(),
        )
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = a.leading().inv().unwrap();
            a.scale(&inv)
        }
    }

    pub fn squarefree_part(&self) -> Poly {
        if self.degree() == 0 || self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    /// Galois conjugate coefficientwise.
    pub fn conj(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(Scalar::conj).collect())
    }
}

/// All roots of `f` lying in `field`, with multiplicities, plus the residual
/// factor left after dividing the in-field linear factors out.
pub fn in_field_roots(f: &Poly, field: Field) -> (Vec<(Scalar, usize)>, Poly) {
    assert!(!f.is_zero(), "roots of the zero polynomial");
    let mut rem = f.clone();
    let mut roots: Vec<(Scalar, usize)> = Vec::new();
    for cand in root_candidates(&rem, field) {
        if rem.degree() == 0 {
            break;
        }
        if !rem.eval(&cand).is_zero() {
            continue;
        }
        let mut mult = 0;
        loop {
            let (q, r) = rem.div_rem(&Poly::linear(&cand));
            if r.is_zero() {
                rem = q;
                mult += 1;
                if rem.degree() == 0 {
                    break;
                }
            } else {
                break;
            }
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
    }
    // Quadratic residuals may still split over the field.
    if rem.degree() == 2 {
        if let Some(r) = quadratic_roots(&rem, field) {
            for root in r {
                let mut mult = 0;
                loop {
                    let (q, rr) = rem.div_rem(&Poly::linear(&root));
                    if rr.is_zero() {
                        rem = q;
                        mult += 1;
                    } else {
                        break;
                    }
                }
                if mult > 0 {
                    merge_root(&mut roots, root, mult);
                }
            }
        }
    }
    (roots, rem)
}

fn merge_root(roots: &mut Vec<(Scalar, usize)>, root: Scalar, mult: usize) {
    for (r, m) in roots.iter_mut() {
        if *r == root {
            *m += mult;
            return;
        }
    }
    roots.push((root, mult));
}

/// The obstruction explaining why a nonconstant residual does not split.
pub fn residual_obstruction(residual: &Poly, field: Field) -> LieError {
    let sf = residual.squarefree_part();
    if sf.degree() == 2 {
        let a = &sf.coeffs[2];
        let b = &sf.coeffs[1];
        let c = &sf.coeffs[0];
        let disc = &(b * b) - &(&(&Scalar::from_int(4) * a) * c);
        match disc.as_rational() {
            Some(r) if !r.is_zero() => field.sqrt_obstruction(r),
            _ => LieError::Unsplittable {
                detail: "quadratic factor with irrational discriminant".into(),
            },
        }
    } else {
        LieError::Unsplittable {
            detail: format!(
                "irreducible factor of degree {} over the working field",
                sf.degree()
            ),
        }
    }
}

/// Roots of a quadratic that happen to lie in the field.
fn quadratic_roots(f: &Poly, field: Field) -> Option<[Scalar; 2]> {
    debug_assert_eq!(f.degree(), 2);
    let a = &f.coeffs[2];
    let b = &f.coeffs[1];
    let c = &f.coeffs[0];
    let disc = &(b * b) - &(&(&Scalar::from_int(4) * a) * c);
    let sq = field.sqrt(&disc)?;
    let two_a_inv = (&Scalar::from_int(2) * a).inv().unwrap();
    let r1 = &(&(-b) + &sq) * &two_a_inv;
    let r2 = &(&(-b) - &sq) * &two_a_inv;
    Some([r1, r2])
}

/// Candidate in-field roots: the rational-root-theorem list for rational
/// polynomials, routed through the norm polynomial for ℚ(√d) coefficients.
/// Candidates come out in divisor-enumeration order (1, −1, 2, −2, …), which
/// fixes the deterministic eigenvalue order used everywhere downstream.
fn root_candidates(f: &Poly, field: Field) -> Vec<Scalar> {
    if f.degree() == 0 {
        return vec![];
    }
    let all_rational = f.coeffs.iter().all(|c| c.as_rational().is_some());
    if all_rational {
        return rational_root_candidates(f).into_iter().map(Scalar::Rat).collect();
    }
    // Roots of f in ℚ(√d) are roots of the rational polynomial f·f̄; collect
    // its rational candidates and the quadratic-extension roots of its
    // quadratic factors, then the caller filters by actual evaluation.
    let norm = f.mul(&f.conj());
    debug_assert!(norm.coeffs.iter().all(|c| c.as_rational().is_some()));
    let mut out: Vec<Scalar> = rational_root_candidates(&norm)
        .into_iter()
        .map(Scalar::Rat)
        .collect();
    // Quadratic factors of the norm squarefree part whose roots lie in the
    // field: detected by completing the square on the remaining factor after
    // rational roots are removed. deg ≤ 2 residuals are handled exactly.
    let (_, res) = {
        let mut rem = norm.squarefree_part();
        let mut roots = vec![];
        for cand in rational_root_candidates(&rem) {
            let c = Scalar::Rat(cand);
            while rem.degree() >= 1 && rem.eval(&c).is_zero() {
                rem = rem.div_rem(&Poly::linear(&c)).0;
                roots.push(c.clone());
            }
        }
        (roots, rem)
    };
    if res.degree() == 2 {
        if let Some(roots) = quadratic_roots(&res, field) {
            out.extend(roots);
        }
    }
    out
}

/// Rational-root-theorem candidates in deterministic order.
fn rational_root_candidates(f: &Poly) -> Vec<BigRational> {
    let coeffs: Vec<BigRational> = f
        .coeffs
        .iter()
        .map(|c| c.as_rational().expect("rational poly").clone())
        .collect();
    // Clear denominators to an integer polynomial.
    let mut den = BigInt::one();
    for c in &coeffs {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let lead = ints.last().unwrap().clone();
    let tail = match ints.iter().find(|c| !c.is_zero()) {
        Some(c) => c.clone(),
        None => return vec![],
    };
    let mut candidates = vec![BigRational::zero()];
    let ps = divisors(&tail.abs());
    let qs = divisors(&lead.abs());
    for p in &ps {
        for q in &qs {
            let r = BigRational::new(p.clone(), q.clone());
            if !candidates.contains(&r) {
                candidates.push(r.clone());
            }
            let neg = -r;
            if !candidates.contains(&neg) {
                candidates.push(neg);
            }
        }
    }
    candidates
}

/// Positive divisors by trial division, ascending.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    let limit = BigInt::from(1_000_000u64);
    while &(&d * &d) <= n {
        if (n % &d).is_zero() {
            small.push(d.clone());
            let q = n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
        if d > limit {
            // Divisor list may be incomplete past the trial bound; keep what
            // we have. Desk-scale inputs never get here.
            break;
        }
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    fn quad_unit(d: i64) -> Scalar {
        Scalar::quad(
            BigRational::from_integer(BigInt::from(0)),
            BigRational::from_integer(BigInt::from(1)),
            d,
        )
    }

    #[test]
    fn division_and_gcd() {
        // (t-1)(t-2) = t² - 3t + 2
        let f = p(&[2, -3, 1]);
        let (q, r) = f.div_rem(&p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, p(&[-2, 1]));
        let g = f.gcd(&p(&[-1, 1]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn rational_roots_found_in_order() {
        // (t-1)(t+1)(2t-1) = 2t³ - t² - 2t + 1
        let f = p(&[1, -2, -1, 2]);
        let (roots, rem) = in_field_roots(&f, Field::Rationals);
        assert!(rem.degree() == 0);
        let vals: Vec<Scalar> = roots.iter().map(|(r, _)| r.clone()).collect();
        assert_eq!(
            vals,
            vec![Scalar::from_int(1), Scalar::from_int(-1), Scalar::rational(1, 2)]
        );
    }

    #[test]
    fn multiplicities() {
        // (t-1)² t
        let f = p(&[0, 1, -2, 1]);
        let (roots, rem) = in_field_roots(&f, Field::Rationals);
        assert!(rem.degree() == 0);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&(Scalar::from_int(0), 1)));
        assert!(roots.contains(&(Scalar::from_int(1), 2)));
    }

    #[test]
    fn unsplittable_quadratic_reports_extension() {
        let f = p(&[1, 0, 1]); // t² + 1
        let (roots, rem) = in_field_roots(&f, Field::Rationals);
        assert!(roots.is_empty());
        assert_eq!(rem.degree(), 2);
        assert_eq!(
            residual_obstruction(&rem, Field::Rationals),
            LieError::NeedsFieldExtension { d: -1 }
        );
        // Over Q(i) it splits.
        let qi = Field::quadratic(-1).unwrap();
        let (roots, rem) = in_field_roots(&f, qi);
        assert_eq!(rem.degree(), 0);
        assert_eq!(roots.len(), 2);
        let i_root = quad_unit(-1);
        assert!(roots.iter().any(|(r, _)| r == &i_root));
    }

    #[test]
    fn roots_with_quadratic_coefficients() {
        // (t - √2)(t + 1) over Q(√2)
        let q2 = Field::quadratic(2).unwrap();
        let rt2 = quad_unit(2);
        let f = Poly::linear(&rt2).mul(&Poly::linear(&Scalar::from_int(-1)));
        let (roots, rem) = in_field_roots(&f, q2);
        assert_eq!(rem.degree(), 0);
        assert!(roots.iter().any(|(r, _)| r == &rt2));
        assert!(roots.iter().any(|(r, _)| r == &Scalar::from_int(-1)));
    }
}
