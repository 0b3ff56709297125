//! Dense matrices over a [`Field`].
//!
//! Matrices act on row vectors from the right: for an operator `M` on an
//! `n`-dimensional algebra, row `i` holds the coordinates of the image of
//! basis vector `e_i`, and the image of `v` is `v * M`. Composition "first
//! `A`, then `B`" is therefore the product `A * B`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Field, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from row-major entries, checking that every entry
    /// lives in `field`.
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(entries.len(), rows * cols));
        }
        for e in &entries {
            field.check(&e.field())?;
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(bad.len(), c));
        }
        Matrix::new(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Integer matrix, mostly for tests and literals.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.int(v)).collect())
            .collect();
        Matrix::from_rows(field, rows).expect("rows have equal length")
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Matrix::scalar(field, n, &field.one())
    }

    /// `s * I`.
    pub fn scalar(field: Field, n: usize, s: &Scalar) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    /// Permutation matrix sending basis vector `i` to basis vector `perm[i]`.
    pub fn permutation(field: Field, perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut m = Matrix::zero(field, n, n);
        for (i, &j) in perm.iter().enumerate() {
            if j >= n || seen[j] {
                return Err(Error::InvalidParams(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen[j] = true;
            m.set(i, j, field.one());
        }
        Ok(m)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&-self.field.one()))
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        self.field.check(&other.field)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(self.rows, other.rows));
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(self.cols, other.cols));
        }
        Ok(())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.field.check(&other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.cols, other.rows));
        }
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: the image of `v` under this operator.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(v.len(), self.rows));
        }
        let mut out = vec![self.field.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            self.field.check(&a.field())?;
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = &*o + &(a * self.get(i, j));
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.cols {
                        let v = m.get(i, j) - &(&f * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(self.rows, self.cols));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv()?;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse; [`Error::Singular`] when the determinant vanishes.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Matrix::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.det().is_ok_and(|d| !d.is_zero())
    }

    /// A deterministic pseudo-random invertible `n x n` matrix.
    ///
    /// Over `F_p` entries are uniform residues; over `Q` they are integers in
    /// `[-4, 4]`. Singular draws are rejected and redrawn.
    pub fn random_invertible(field: Field, n: usize, seed: u64) -> Matrix {
        assert!(n >= 1, "dimension must be positive");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let entries = (0..n * n)
                .map(|_| match field.modulus() {
                    Some(p) => field.residue(rng.gen_range(0..p)),
                    None => field.int(rng.gen_range(-4..=4)),
                })
                .collect();
            let m = Matrix::new(field, n, n, entries).expect("entries are in the field");
            if m.is_invertible() {
                return m;
            }
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rational()
    }

    #[test]
    fn identity_is_neutral() {
        let m = Matrix::from_ints(q(), &[&[1, 2, 3], &[0, -1, 4], &[5, 6, 0]]);
        let i = Matrix::identity(q(), 3);
        assert_eq!(i.mul(&m).unwrap(), m);
        assert_eq!(m.mul(&i).unwrap(), m);
        assert_eq!(i.inverse().unwrap(), i);
    }

    #[test]
    fn displayed_inverse_pair_multiplies_to_identity() {
        let r = Matrix::from_ints(q(), &[&[1, 1, 0], &[0, 1, 0], &[1, 0, 1]]);
        let r_inv = Matrix::from_ints(q(), &[&[1, -1, 0], &[0, 1, 0], &[-1, 1, 1]]);
        assert!(r.mul(&r_inv).unwrap().is_identity());
        assert_eq!(r.inverse().unwrap(), r_inv);
    }

    #[test]
    fn prime_field_inverse_pair() {
        let f5 = Field::prime(5).unwrap();
        let a = Matrix::from_ints(f5, &[&[2, 0], &[0, 3]]);
        let b = Matrix::from_ints(f5, &[&[3, 0], &[0, 2]]);
        assert!(a.mul(&b).unwrap().is_identity());
    }

    #[test]
    fn mismatches_are_errors() {
        let f5 = Field::prime(5).unwrap();
        let a = Matrix::identity(q(), 2);
        let b = Matrix::identity(f5, 2);
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch(..))));
        let c = Matrix::identity(q(), 3);
        assert_eq!(a.mul(&c), Err(Error::DimensionMismatch(2, 3)));
    }

    #[test]
    fn singular_inverse_fails() {
        let m = Matrix::from_ints(q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse(), Err(Error::Singular));
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn all_ones_minus_identity_inverse() {
        let r = Matrix::from_ints(q(), &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        let half = q().ratio(1, 2).unwrap();
        let expected =
            Matrix::from_ints(q(), &[&[-1, 1, 1], &[1, -1, 1], &[1, 1, -1]]).scale(&half);
        assert_eq!(r.inverse().unwrap(), expected);
        assert_eq!(r.det().unwrap(), q().int(2));
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = Matrix::from_ints(q(), &[&[0, 1, 0], &[0, 0, 1], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn random_invertible_is_deterministic() {
        let f5 = Field::prime(5).unwrap();
        let a = Matrix::random_invertible(f5, 3, 1);
        let b = Matrix::random_invertible(f5, 3, 1);
        assert_eq!(a, b);
        assert!(!a.det().unwrap().is_zero());
        let f3 = Field::prime(3).unwrap();
        assert_eq!(Matrix::random_invertible(f3, 2, 7).rank(), 2);
    }

    #[test]
    fn permutation_matrix_moves_basis_vectors() {
        let p = Matrix::permutation(q(), &[1, 0, 2]).unwrap();
        assert_eq!(
            p.apply(&[q().int(1), q().int(0), q().int(0)]).unwrap(),
            vec![q().int(0), q().int(1), q().int(0)]
        );
        assert!(Matrix::permutation(q(), &[0, 0]).is_err());
    }
}
