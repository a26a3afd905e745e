//! Convenience builder for superalgebras: declare basis elements in order,
//! give brackets for index(a) ≤ index(b) only, and let super skew-symmetry
//! fill the rest. This mirrors the file format and rules out inconsistent
//! input by construction.

use crate::error::LieError;
use crate::scalar::{Field, Scalar};
use crate::superalgebra::{LieSuperalgebra, Parity};

pub struct AlgebraBuilder {
    field: Field,
    names: Vec<String>,
    parities: Vec<Parity>,
    brackets: Vec<(String, String, Vec<(String, Scalar)>)>,
}

impl AlgebraBuilder {
    pub fn new(field: Field) -> AlgebraBuilder {
        AlgebraBuilder {
            field,
            names: Vec::new(),
            parities: Vec::new(),
            brackets: Vec::new(),
        }
    }

    pub fn even(mut self, name: &str) -> Self {
        self.names.push(name.to_string());
        self.parities.push(Parity::Even);
        self
    }

    pub fn odd(mut self, name: &str) -> Self {
        self.names.push(name.to_string());
        self.parities.push(Parity::Odd);
        self
    }

    /// [a, b] = Σ coeff·e; requires index(a) ≤ index(b).
    pub fn bracket(mut self, a: &str, b: &str, value: &[(&str, Scalar)]) -> Self {
        self.brackets.push((
            a.to_string(),
            b.to_string(),
            value.iter().map(|(n, c)| (n.to_string(), c.clone())).collect(),
        ));
        self
    }

    pub fn build(self) -> Result<LieSuperalgebra, LieError> {
        let n = self.names.len();
        let index = |name: &str| -> Result<usize, LieError> {
            self.names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| LieError::Precondition {
                    detail: format!("unknown basis name {name:?}"),
                })
        };
        let mut structure = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for (a, b, value) in &self.brackets {
            let i = index(a)?;
            let j = index(b)?;
            if i > j {
                return Err(LieError::Precondition {
                    detail: format!("bracket [{a}, {b}] must be given with index({a}) <= index({b})"),
                });
            }
            for (name, c) in value {
                let k = index(name)?;
                structure[i][j][k] = &structure[i][j][k] + c;
            }
        }
        // Fill the lower triangle by super skew-symmetry; diagonal entries
        // stay as given so that an even [a, a] ≠ 0 shows up in validation.
        for i in 0..n {
            for j in (i + 1)..n {
                let sign = Parity::sign_product(self.parities[i], self.parities[j]);
                for k in 0..n {
                    structure[j][i][k] = -&(&sign * &structure[i][j][k]);
                }
            }
        }
        LieSuperalgebra::new(self.field, self.names, self.parities, structure)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_fill() {
        let g = AlgebraBuilder::new(Field::Rationals)
            .even("x")
            .odd("s")
            .odd("t")
            .bracket("s", "t", &[("x", Scalar::one())])
            .build()
            .unwrap();
        let s = g.index_of("s").unwrap();
        let t = g.index_of("t").unwrap();
        let x = g.index_of("x").unwrap();
        // odd-odd brackets are symmetric
        assert_eq!(g.structure_constant(t, s, x), &Scalar::one());
        assert!(g.validate().is_valid());
    }

    #[test]
    fn rejects_wrong_order_and_unknown_names() {
        let err = AlgebraBuilder::new(Field::Rationals)
            .even("x")
            .even("y")
            .bracket("y", "x", &[("y", Scalar::one())])
            .build()
            .unwrap_err();
        assert!(matches!(err, LieError::Precondition { .. }));

        let err = AlgebraBuilder::new(Field::Rationals)
            .even("x")
            .bracket("x", "w", &[("x", Scalar::one())])
            .build()
            .unwrap_err();
        assert!(matches!(err, LieError::Precondition { .. }));
    }
}
