//! Exact field arithmetic over ℚ and single quadratic extensions ℚ(√d).
//!
//! A [`Scalar`] is either an arbitrary-precision rational or a pair a + b√d
//! with b ≠ 0 and d a fixed squarefree integer. Values are canonical: the
//! quadratic variant never carries b = 0, so structural equality is field
//! equality. Mixing two different discriminants is a programming error and
//! panics; choosing the discriminant is the job of [`Field`].

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::LieError;

/// The working field: ℚ, or ℚ(√d) for one squarefree d ∉ {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Quadratic { d: i64 },
}

impl Field {
    pub fn quadratic(d: i64) -> Result<Field, LieError> {
        if d == 0 || d == 1 {
            return Err(LieError::Unsplittable {
                detail: format!("sqrt({d}) is rational; not a proper extension"),
            });
        }
        if !is_squarefree(d.unsigned_abs()) {
            return Err(LieError::Unsplittable {
                detail: format!("discriminant {d} is not squarefree"),
            });
        }
        Ok(Field::Quadratic { d })
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (_, Scalar::Rat(_)) => true,
            (Field::Quadratic { d }, Scalar::Quad { d: sd, .. }) => d == sd,
            (Field::Rationals, Scalar::Quad { .. }) => false,
        }
    }

    /// Exact square root of `x` inside this field, if it exists.
    pub fn sqrt(&self, x: &Scalar) -> Option<Scalar> {
        match x {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    return Some(Scalar::zero());
                }
                if let Some(s) = rational_sqrt(r) {
                    return Some(Scalar::Rat(s));
                }
                if let Field::Quadratic { d } = self {
                    // sqrt(r) = s·sqrt(d) iff r/d is a rational square.
                    let rd = r / BigRational::from_integer(BigInt::from(*d));
                    if let Some(s) = rational_sqrt(&rd) {
                        return Some(Scalar::quad(BigRational::zero(), s, *d));
                    }
                }
                None
            }
            Scalar::Quad { a, b, d } => {
                // (x + y√d)² = x² + y²d + 2xy√d = a + b√d. Then x², y²d are the
                // roots of t² − a·t + b²d/4, so x² = (a ± sqrt(a²−b²d))/2.
                let disc = a * a - b * b * BigRational::from_integer(BigInt::from(*d));
                let sq = rational_sqrt_signed(&disc)?;
                for sign in [1i32, -1] {
                    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
                    let x2 = if sign == 1 { (a + &sq) * &half } else { (a - &sq) * &half };
                    if let Some(xv) = rational_sqrt_signed(&x2) {
                        if !xv.is_zero() {
                            let y = b / (BigRational::from_integer(BigInt::from(2)) * &xv);
                            let cand = Scalar::quad(xv.clone(), y, *d);
                            if &(&cand * &cand) == x {
                                return Some(cand);
                            }
                        }
                    }
                }
                None
            }
        }
    }

    /// Squarefree discriminant needed to take sqrt of a rational that is not
    /// a square in this field. Returns the obstruction as an error value.
    pub fn sqrt_obstruction(&self, r: &BigRational) -> LieError {
        match squarefree_part(r) {
            Ok(d) => match self {
                Field::Rationals => LieError::NeedsFieldExtension { d },
                Field::Quadratic { d: have } => LieError::FieldTower {
                    have: *have,
                    need: r.to_string(),
                },
            },
            Err(e) => e,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "rationals"),
            Field::Quadratic { d } => write!(f, "rationals adjoin sqrt {d}"),
        }
    }
}

/// Parse a field descriptor: "rationals" or "rationals adjoin sqrt d".
pub fn parse_field(s: &str) -> Result<Field, LieError> {
    let t = s.trim();
    if t == "rationals" {
        return Ok(Field::Rationals);
    }
    let rest = t
        .strip_prefix("rationals adjoin sqrt")
        .or_else(|| t.strip_prefix("sqrt"))
        .ok_or_else(|| LieError::Precondition {
            detail: format!("unrecognized field descriptor {s:?}"),
        })?;
    let d: i64 = rest.trim().parse().map_err(|_| LieError::Precondition {
        detail: format!("bad discriminant in field descriptor {s:?}"),
    })?;
    Field::quadratic(d)
}

/// An exact element of the working field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    /// a + b√d with b ≠ 0 (canonical)
    Quad { a: BigRational, b: BigRational, d: i64 },
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Canonical constructor demoting b = 0 to the rational variant.
    pub fn quad(a: BigRational, b: BigRational, d: i64) -> Scalar {
        if b.is_zero() {
            Scalar::Rat(a)
        } else {
            Scalar::Quad { a, b, d }
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn rational_part(&self) -> &BigRational {
        match self {
            Scalar::Rat(r) => r,
            Scalar::Quad { a, .. } => a,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Quad { .. } => None,
        }
    }

    /// Galois conjugate a + b√d ↦ a − b√d (identity on rationals).
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.clone()),
            Scalar::Quad { a, b, d } => Scalar::Quad {
                a: a.clone(),
                b: -b.clone(),
                d: *d,
            },
        }
    }

    /// Field norm a² − d·b² (a rational).
    pub fn norm(&self) -> BigRational {
        match self {
            Scalar::Rat(r) => r * r,
            Scalar::Quad { a, b, d } => a * a - b * b * BigRational::from_integer(BigInt::from(*d)),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(r.recip()))
                }
            }
            Scalar::Quad { a, b, d } => {
                // 1/(a + b√d) = (a − b√d)/(a² − d b²); the norm is nonzero
                // because d is squarefree and ≠ 1, so √d is irrational.
                let n = self.norm();
                debug_assert!(!n.is_zero());
                Some(Scalar::quad(a / &n, -(b / &n), *d))
            }
        }
    }

    fn disc(&self) -> Option<i64> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Quad { d, .. } => Some(*d),
        }
    }

    fn parts(&self, d: i64) -> (BigRational, BigRational) {
        match self {
            Scalar::Rat(r) => (r.clone(), BigRational::zero()),
            Scalar::Quad { a, b, d: sd } => {
                assert_eq!(*sd, d, "mixed quadratic fields in one computation");
                (a.clone(), b.clone())
            }
        }
    }

    fn join_disc(&self, other: &Scalar) -> Option<i64> {
        match (self.disc(), other.disc()) {
            (None, None) => None,
            (Some(d), None) | (None, Some(d)) => Some(d),
            (Some(d1), Some(d2)) => {
                assert_eq!(d1, d2, "mixed quadratic fields in one computation");
                Some(d1)
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Quad { a, b, d } => {
                if a.is_zero() {
                    write!(f, "{b}*sqrt({d})")
                } else if b.is_negative() {
                    write!(f, "{a}-{}*sqrt({d})", -b)
                } else {
                    write!(f, "{a}+{b}*sqrt({d})")
                }
            }
        }
    }
}

/// Parse the canonical string form: "p/q", "p/q+r/s*sqrt(d)", "r/s*sqrt(d)".
impl FromStr for Scalar {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Scalar, LieError> {
        let bad = |detail: String| LieError::Precondition { detail };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(pos) = t.find("sqrt(") {
            let close = t.rfind(')').ok_or_else(|| bad(format!("unclosed sqrt in {s:?}")))?;
            let d: i64 = t[pos + 5..close]
                .parse()
                .map_err(|_| bad(format!("bad discriminant in {s:?}")))?;
            let before = &t[..pos];
            let before = before
                .strip_suffix('*')
                .ok_or_else(|| bad(format!("expected '*sqrt(d)' in {s:?}")))?;
            // Split off the rational part: find '+'/'-' separating the two
            // terms, scanning from the right and skipping a leading sign.
            let (a_str, b_str) = match before[1..].rfind(['+', '-']) {
                Some(i) => {
                    let i = i + 1;
                    (&before[..i], &before[i..])
                }
                None => ("0", before),
            };
            let a = parse_rat(a_str).ok_or_else(|| bad(format!("bad rational {a_str:?}")))?;
            let b_str = b_str.strip_prefix('+').unwrap_or(b_str);
            let b = parse_rat(b_str).ok_or_else(|| bad(format!("bad rational {b_str:?}")))?;
            Ok(Scalar::quad(a, b, d))
        } else {
            parse_rat(&t)
                .map(Scalar::Rat)
                .ok_or_else(|| bad(format!("bad rational {s:?}")))
        }
    }
}

fn parse_rat(s: &str) -> Option<BigRational> {
    if s.is_empty() {
        return None;
    }
    BigRational::from_str(s).ok()
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, |$a1:ident, $b1:ident, $a2:ident, $b2:ident, $d:ident| $quad:expr, |$r1:ident, $r2:ident| $rat:expr) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.join_disc(rhs) {
                    None => {
                        let $r1 = self.rational_part();
                        let $r2 = rhs.rational_part();
                        Scalar::Rat($rat)
                    }
                    Some(d) => {
                        let ($a1, $b1) = self.parts(d);
                        let ($a2, $b2) = rhs.parts(d);
                        let $d = BigRational::from_integer(BigInt::from(d));
                        let (a, b) = $quad;
                        Scalar::quad(a, b, d)
                    }
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

scalar_binop!(Add, add, |a1, b1, a2, b2, _d| (a1 + a2, b1 + b2), |r1, r2| r1 + r2);
scalar_binop!(Sub, sub, |a1, b1, a2, b2, _d| (a1 - a2, b1 - b2), |r1, r2| r1 - r2);
scalar_binop!(
    Mul,
    mul,
    |a1, b1, a2, b2, d| (&a1 * &a2 + &b1 * &b2 * &d, &a1 * &b2 + &b1 * &a2),
    |r1, r2| r1 * r2
);

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Quad { a, b, d } => Scalar::Quad {
                a: -a,
                b: -b,
                d: *d,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

fn rational_sqrt_signed(r: &BigRational) -> Option<BigRational> {
    rational_sqrt(r)
}

/// Squarefree part of a nonzero rational: the unique squarefree integer d
/// with r = d·s² for rational s. Factors by trial division (desk scale).
pub fn squarefree_part(r: &BigRational) -> Result<i64, LieError> {
    if r.is_zero() {
        return Err(LieError::Unsplittable {
            detail: "squarefree part of zero".into(),
        });
    }
    // r = p/q, sqrt(p/q) = sqrt(pq)/q, so the discriminant is sqfree(p·q).
    let pq: BigInt = r.numer() * r.denom();
    let sign = if pq.is_negative() { -1i64 } else { 1 };
    let mut n = pq.abs();
    let mut d: i64 = 1;
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &(&p * &p) <= &n {
        if p > limit {
            return Err(LieError::Unsplittable {
                detail: format!("cannot factor discriminant {pq} by trial division"),
            });
        }
        let mut count = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            count += 1;
        }
        if count % 2 == 1 {
            let pf: i64 = (&p).try_into().map_err(|_| LieError::Unsplittable {
                detail: format!("discriminant factor {p} too large"),
            })?;
            d = d.checked_mul(pf).ok_or_else(|| LieError::Unsplittable {
                detail: "discriminant overflow".into(),
            })?;
        }
        p += 1;
    }
    if !n.is_one() {
        let nf: i64 = (&n).try_into().map_err(|_| LieError::Unsplittable {
            detail: format!("discriminant cofactor {n} too large"),
        })?;
        d = d.checked_mul(nf).ok_or_else(|| LieError::Unsplittable {
            detail: "discriminant overflow".into(),
        })?;
    }
    Ok(sign * d)
}

fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        while n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d)
    }

    fn br(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let x = s(1, 3);
        let y = s(2, 7);
        assert_eq!(&(&x + &y) - &y, x);
        assert_eq!(&x * &y, s(2, 21));
        assert_eq!((&x / &y), s(7, 6));
    }

    #[test]
    fn quadratic_arithmetic() {
        // (1 + √2)(1 − √2) = −1
        let a = Scalar::quad(br(1), br(1), 2);
        let b = a.conj();
        assert_eq!(&a * &b, Scalar::from_int(-1));
        // inverse
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        // demotion to rational when the irrational part cancels
        assert!(matches!(&a + &b, Scalar::Rat(_)));
        assert_eq!(&a + &b, Scalar::from_int(2));
    }

    #[test]
    fn sqrt_in_field() {
        let q = Field::Rationals;
        assert_eq!(q.sqrt(&s(9, 4)), Some(s(3, 2)));
        assert_eq!(q.sqrt(&s(2, 1)), None);
        let qi = Field::quadratic(-1).unwrap();
        assert_eq!(
            qi.sqrt(&s(-9, 4)),
            Some(Scalar::quad(br(0), BigRational::new(3.into(), 2.into()), -1))
        );
        let q2 = Field::quadratic(2).unwrap();
        // sqrt(3 + 2√2) = 1 + √2
        let x = Scalar::quad(br(3), br(2), 2);
        let r = q2.sqrt(&x).unwrap();
        assert_eq!(&r * &r, x);
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_part(&BigRational::new(8.into(), 1.into())).unwrap(), 2);
        assert_eq!(squarefree_part(&BigRational::new((-4).into(), 1.into())).unwrap(), -1);
        assert_eq!(squarefree_part(&BigRational::new(1.into(), 2.into())).unwrap(), 2);
        assert_eq!(squarefree_part(&BigRational::new(3.into(), 4.into())).unwrap(), 3);
    }

    #[test]
    fn display_and_parse_round_trip() {
        for sc in [
            s(0, 1),
            s(-3, 4),
            Scalar::quad(BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 4.into()), -1),
            Scalar::quad(br(0), br(5), 3),
        ] {
            let text = sc.to_string();
            let back: Scalar = text.parse().unwrap();
            assert_eq!(back, sc, "round trip through {text:?}");
        }
    }

    #[test]
    fn field_descriptor_round_trip() {
        assert_eq!(parse_field("rationals").unwrap(), Field::Rationals);
        let f = parse_field("rationals adjoin sqrt -1").unwrap();
        assert_eq!(f, Field::Quadratic { d: -1 });
        assert_eq!(parse_field(&f.to_string()).unwrap(), f);
        assert!(parse_field("rationals adjoin sqrt 4").is_err());
    }
}
