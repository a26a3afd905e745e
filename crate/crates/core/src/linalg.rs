//! Dense exact linear algebra: matrices, row reduction, kernels, subspaces
//! in canonical reduced-row-echelon form, and quotient coordinates.
//!
//! Subspace equality is structural because the RREF basis is the unique
//! canonical representative.

use std::fmt;

use crate::error::LieError;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Row-major dense matrix over the working field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "entry count must be rows × cols");
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            data.extend(row);
        }
        Matrix::new(r, cols, data)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - other.at(i, j))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    out[i] += &(a * &v[j]);
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, data)
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    /// Determinant by fraction-producing Gaussian elimination.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !m.at(r, col).is_zero()) {
                Some(r) => r,
                None => return Scalar::zero(),
            };
            if pivot_row != col {
                m.swap_rows(pivot_row, col);
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det *= &pivot;
            let inv = pivot.inv().unwrap();
            for r in (col + 1)..n {
                let factor = &(m.at(r, col) * &inv);
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let sub = factor * m.at(col, c);
                    *m.at_mut(r, c) -= &sub;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Characteristic polynomial det(tI − M), by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut aux = Matrix::identity(n);
        for k in 1..=n {
            aux = self.mul(&aux);
            let c = -(&aux.trace() / &Scalar::from_int(k as i64));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                *aux.at_mut(i, i) += &c;
            }
        }
        Poly::new(coeffs)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form together with pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let pivot_row = match (row..a.rows()).find(|&r| !a.at(r, col).is_zero()) {
            Some(r) => r,
            None => continue,
        };
        a.swap_rows(pivot_row, row);
        let inv = a.at(row, col).inv().unwrap();
        for c in col..a.cols() {
            let v = a.at(row, c) * &inv;
            *a.at_mut(row, c) = v;
        }
        for r in 0..a.rows() {
            if r == row || a.at(r, col).is_zero() {
                continue;
            }
            let factor = a.at(r, col).clone();
            for c in col..a.cols() {
                let sub = &factor * a.at(row, c);
                *a.at_mut(r, c) -= &sub;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Rank of a matrix.
pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Kernel {v : m·v = 0} as a canonical subspace of the column space domain.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Scalar::zero(); n];
        v[f] = Scalar::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.at(i, f);
        }
        basis.push(v);
    }
    Subspace::from_rows(n, basis)
}

/// Any particular solution of m·x = rhs, or `None` when inconsistent.
pub fn solve(m: &Matrix, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(m.rows(), rhs.len());
    let aug = m.hstack(&Matrix::new(rhs.len(), 1, rhs.to_vec()));
    let (r, pivots) = rref(&aug);
    if pivots.contains(&m.cols()) {
        return None; // pivot in the rhs column: rank increased
    }
    let mut x = vec![Scalar::zero(); m.cols()];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.at(i, m.cols()).clone();
    }
    Some(x)
}

/// Radical {v : f(v, ·) = 0} of a symmetric bilinear form.
pub fn form_radical(f: &Matrix) -> Result<Subspace, LieError> {
    if !f.is_symmetric() {
        return Err(LieError::NotSymmetric);
    }
    Ok(kernel(f))
}

/// {v : f(v, s) = 0} for a symmetric form f and subspace s.
pub fn perp(f: &Matrix, s: &Subspace) -> Result<Subspace, LieError> {
    if !f.is_symmetric() {
        return Err(LieError::NotSymmetric);
    }
    if f.rows() != s.ambient() {
        return Err(LieError::DimensionMismatch {
            expected: f.rows(),
            got: s.ambient(),
        });
    }
    // Constraint rows: (B f) v = 0 for the basis B of s.
    let constraints = s.basis().mul(f);
    Ok(kernel(&constraints))
}

/// A linear subspace in canonical form: the RREF basis is unique, so `Eq`
/// is subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix, // RREF, one row per basis vector, full row rank
}

impl Subspace {
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Scalar>>) -> Subspace {
        let m = Matrix::from_rows(rows, ambient);
        Subspace::from_matrix_rows(&m)
    }

    pub fn from_matrix_rows(m: &Matrix) -> Subspace {
        let (r, pivots) = rref(m);
        let basis = Matrix::from_fn(pivots.len(), m.cols(), |i, j| r.at(i, j).clone());
        Subspace {
            ambient: m.cols(),
            basis,
        }
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    pub fn span_of(ambient: usize, v: &[Scalar]) -> Subspace {
        Subspace::from_rows(ambient, vec![v.to_vec()])
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.rows_iter().map(|r| r.to_vec()).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let p = (0..self.ambient)
                .find(|&c| !self.basis.at(i, c).is_zero())
                .expect("zero row in subspace basis");
            out.push(p);
        }
        out
    }

    /// Reduce v by the basis; returns the remainder (zero iff v ∈ subspace)
    /// and the coordinates used.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        assert_eq!(v.len(), self.ambient);
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (i, &p) in self.pivots().iter().enumerate() {
            let c = rem[p].clone();
            if !c.is_zero() {
                for j in 0..self.ambient {
                    let sub = &c * self.basis.at(i, j);
                    rem[j] -= &sub;
                }
            }
            coords.push(c);
        }
        (rem, coords)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.reduce(v).0.iter().all(Scalar::is_zero)
    }

    /// Coordinates of v in the subspace basis, if v lies in the subspace.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (rem, coords) = self.reduce(v);
        if rem.iter().all(Scalar::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.rows_iter().all(|r| self.contains_vector(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_matrix_rows(&self.basis.vstack(&other.basis))
    }

    pub fn add_vector(&self, v: &[Scalar]) -> Subspace {
        self.sum(&Subspace::span_of(self.ambient, v))
    }

    /// Intersection of two subspaces, via annihilators: the row space of B
    /// equals the kernel of any basis matrix of ker(B), by rank counting.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let n_a = kernel_of_rowspace(self);
        let n_b = kernel_of_rowspace(other);
        kernel(&n_a.vstack(&n_b))
    }

    /// Basis vectors of `self` extending a basis of `small` (which must be
    /// contained in `self`); the span of the result is a complement of
    /// `small` inside `self`.
    pub fn complement_within(&self, small: &Subspace) -> Subspace {
        assert!(self.contains(small), "complement_within needs small ⊆ self");
        let mut cur = small.clone();
        let mut rows = Vec::new();
        for r in self.basis.rows_iter() {
            if !cur.contains_vector(r) {
                cur = cur.add_vector(r);
                rows.push(r.to_vec());
            }
        }
        Subspace::from_rows(self.ambient, rows)
    }
}

/// Matrix whose kernel is exactly the row space of `s`: a basis of the
/// solution space of B·x = 0 read as functionals.
fn kernel_of_rowspace(s: &Subspace) -> Matrix {
    let ann = kernel(&s.basis); // vectors v with B v = 0
    let ann_basis = ann.basis().clone();
    // rowspace(B) = { w : ann_basis · w = 0 }, by rank counting.
    ann_basis
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

/// Quotient W/V of nested subspaces, with coordinates, lifts and induced
/// operators. Quotient coordinates are the non-pivot coordinates of V inside
/// the basis of W.
pub struct SubQuotient {
    big: Subspace,
    small_coords: Subspace, // V written in W-coordinates
    free: Vec<usize>,       // non-pivot coordinate positions inside W-coords
}

impl SubQuotient {
    pub fn new(big: Subspace, small: &Subspace) -> SubQuotient {
        assert!(big.contains(small), "quotient needs small ⊆ big");
        let rows: Vec<Vec<Scalar>> = small
            .basis
            .rows_iter()
            .map(|r| big.coordinates_of(r).expect("small ⊆ big"))
            .collect();
        let small_coords = Subspace::from_rows(big.dim(), rows);
        let pivots = small_coords.pivots();
        let free = (0..big.dim()).filter(|c| !pivots.contains(c)).collect();
        SubQuotient {
            big,
            small_coords,
            free,
        }
    }

    /// Quotient of the full ambient space by `small`.
    pub fn of_full(ambient: usize, small: &Subspace) -> SubQuotient {
        SubQuotient::new(Subspace::full(ambient), small)
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Quotient coordinates of an ambient vector (which must lie in W).
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let coords = self
            .big
            .coordinates_of(v)
            .expect("vector outside the big subspace");
        let (rem, _) = self.small_coords.reduce(&coords);
        self.free.iter().map(|&c| rem[c].clone()).collect()
    }

    /// An ambient representative of a quotient vector.
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(q.len(), self.free.len());
        let mut coords = vec![Scalar::zero(); self.big.dim()];
        for (k, &c) in self.free.iter().enumerate() {
            coords[c] = q[k].clone();
        }
        let mut out = vec![Scalar::zero(); self.big.ambient()];
        for (i, row) in self.big.basis.rows_iter().enumerate() {
            if coords[i].is_zero() {
                continue;
            }
            for j in 0..self.big.ambient() {
                out[j] += &(&coords[i] * &row[j]);
            }
        }
        out
    }

    /// Matrix of the operator induced on the quotient by an ambient operator
    /// `m` that maps W into W and V into V.
    pub fn induced_operator(&self, m: &Matrix) -> Result<Matrix, LieError> {
        let q = self.dim();
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(q);
        for k in 0..q {
            let mut unit = vec![Scalar::zero(); q];
            unit[k] = Scalar::one();
            let image = m.apply(&self.lift(&unit));
            if !self.big.contains_vector(&image) {
                return Err(LieError::NotInvariant);
            }
            cols.push(self.project(&image));
        }
        Ok(Matrix::from_fn(q, q, |i, j| cols[j][i].clone()))
    }

    /// Gram matrix of a symmetric ambient form restricted to the quotient
    /// (well-defined when V is in the radical of the restriction to W).
    pub fn induced_form(&self, f: &Matrix) -> Matrix {
        let q = self.dim();
        let lifts: Vec<Vec<Scalar>> = (0..q)
            .map(|k| {
                let mut unit = vec![Scalar::zero(); q];
                unit[k] = Scalar::one();
                self.lift(&unit)
            })
            .collect();
        Matrix::from_fn(q, q, |i, j| {
            let fi = f.apply(&lifts[j]);
            lifts[i]
                .iter()
                .zip(fi.iter())
                .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
        })
    }
}
