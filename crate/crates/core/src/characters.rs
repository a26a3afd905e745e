//! Characters of the even part and the symmetric odd form they induce.
//!
//! A character λ lives in L: it is stored as a covector on the even basis and
//! extends by zero on the odd part. Weight covectors produced by module
//! analysis reuse the same type but skip the membership check, since generic
//! weights need not kill [g_ev, g_ev].

use std::fmt;

use crate::error::LieError;
use crate::linalg::{form_radical, rank, Matrix, Subspace};
use crate::scalar::Scalar;
use crate::superalgebra::{LieSuperalgebra, Parity};

/// Covector on the even basis. `in_l` records whether membership in L was
/// verified at construction; equality ignores the flag.
#[derive(Clone)]
pub struct Character {
    values: Vec<Scalar>,
    in_l: bool,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl Eq for Character {}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character{:?}", self.values)
    }
}

impl Character {
    /// A character in L; errors when the covector does not kill [g_ev, g_ev].
    pub fn in_l(g: &LieSuperalgebra, values: Vec<Scalar>) -> Result<Character, LieError> {
        if values.len() != g.even_dim() {
            return Err(LieError::DimensionMismatch {
                expected: g.even_dim(),
                got: values.len(),
            });
        }
        if !is_in_l(g, &values) {
            return Err(LieError::NotInL);
        }
        Ok(Character { values, in_l: true })
    }

    /// A plain weight covector; no membership check.
    pub fn weight(values: Vec<Scalar>) -> Character {
        Character { values, in_l: false }
    }

    pub fn zero(even_dim: usize) -> Character {
        Character {
            values: vec![Scalar::zero(); even_dim],
            in_l: true,
        }
    }

    /// Dual basis vector of the even basis element named `name`.
    pub fn dual_basis(g: &LieSuperalgebra, name: &str) -> Result<Character, LieError> {
        let idx = g.index_of(name).ok_or_else(|| LieError::Precondition {
            detail: format!("unknown basis name {name:?}"),
        })?;
        if g.parity(idx) != Parity::Even {
            return Err(LieError::Precondition {
                detail: format!("{name} is odd; characters live on the even part"),
            });
        }
        let mut values = vec![Scalar::zero(); g.even_dim()];
        values[g.block_position(idx)] = Scalar::one();
        Character::in_l(g, values)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn checked_in_l(&self) -> bool {
        self.in_l
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    /// Value on the even basis element at even position `pos`.
    pub fn value_at(&self, pos: usize) -> &Scalar {
        &self.values[pos]
    }

    /// Evaluate on a full coordinate vector: odd coordinates contribute zero.
    pub fn eval_full(&self, g: &LieSuperalgebra, coords: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (pos, &i) in g.even_indices().iter().enumerate() {
            if !coords[i].is_zero() {
                acc += &(&self.values[pos] * &coords[i]);
            }
        }
        acc
    }

    pub fn add(&self, other: &Character) -> Character {
        Character {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
            in_l: self.in_l && other.in_l,
        }
    }

    pub fn sub(&self, other: &Character) -> Character {
        Character {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
            in_l: self.in_l && other.in_l,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Character {
        Character {
            values: self.values.iter().map(|v| v * c).collect(),
            in_l: self.in_l,
        }
    }

    pub fn neg(&self) -> Character {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn render(&self, g: &LieSuperalgebra) -> String {
        let terms: Vec<String> = g
            .even_indices()
            .iter()
            .enumerate()
            .filter(|(pos, _)| !self.values[*pos].is_zero())
            .map(|(pos, &i)| format!("{}·{}*", self.values[pos], g.name(i)))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// Does the covector kill every even–even bracket? The odd-vanishing half of
/// membership in L is structural: characters only store even values.
pub fn is_in_l(g: &LieSuperalgebra, values: &[Scalar]) -> bool {
    assert_eq!(values.len(), g.even_dim());
    let eval = |coords: &[Scalar]| -> Scalar {
        let mut acc = Scalar::zero();
        for (pos, &i) in g.even_indices().iter().enumerate() {
            if !coords[i].is_zero() {
                acc += &(&values[pos] * &coords[i]);
            }
        }
        acc
    };
    for &i in g.even_indices() {
        for &j in g.even_indices() {
            if !eval(&g.bracket_basis(i, j)).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Basis of L inside the even covector space.
pub fn l_basis(g: &LieSuperalgebra) -> Vec<Character> {
    // Constraints: λ([eᵢ, eⱼ]) = 0 for even i, j. Rows are the even parts of
    // even–even brackets; L is the kernel of that matrix acting on covectors.
    let ed = g.even_dim();
    let mut rows = Vec::new();
    for &i in g.even_indices() {
        for &j in g.even_indices() {
            let br = g.bracket_basis(i, j);
            rows.push(
                g.even_indices()
                    .iter()
                    .map(|&k| br[k].clone())
                    .collect::<Vec<_>>(),
            );
        }
    }
    let constraints = Matrix::from_rows(rows, ed);
    crate::linalg::kernel(&constraints)
        .basis_rows()
        .into_iter()
        .map(|v| Character { values: v, in_l: true })
        .collect()
}

/// The symmetric form f_λ on the odd part: `gram[i][j] = λ([ξᵢ, ξⱼ])`.
#[derive(Debug, Clone)]
pub struct OddForm {
    pub gram: Matrix,
    pub rank: usize,
    pub radical: Subspace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankParity {
    Even,
    Odd,
}

pub fn form_of(g: &LieSuperalgebra, lambda: &Character) -> Result<OddForm, LieError> {
    if !lambda.checked_in_l() && !is_in_l(g, lambda.values()) {
        return Err(LieError::NotInL);
    }
    let od = g.odd_dim();
    let gram = Matrix::from_fn(od, od, |i, j| {
        let br = g.bracket_basis(g.odd_indices()[i], g.odd_indices()[j]);
        lambda.eval_full(g, &br)
    });
    debug_assert!(gram.is_symmetric(), "odd-odd brackets are symmetric");
    let radical = form_radical(&gram)?;
    let rank = rank(&gram);
    debug_assert_eq!(rank + radical.dim(), od);
    Ok(OddForm { gram, rank, radical })
}

pub fn rank_parity(f: &OddForm) -> RankParity {
    if f.rank % 2 == 0 {
        RankParity::Even
    } else {
        RankParity::Odd
    }
}

/// f_λ evaluated on two odd-coordinate vectors.
pub fn form_value(f: &OddForm, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let fb = f.gram.apply(b);
    a.iter()
        .zip(fb.iter())
        .fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
}
