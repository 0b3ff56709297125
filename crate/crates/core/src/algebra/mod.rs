//! Finite-dimensional algebras given by structure constants.
//!
//! An [`Algebra`] of dimension `n` stores the tensor `c[i][j][k]` with
//! `e_i e_j = sum_k c[i][j][k] e_k`. The product need not be associative or
//! commutative. [`Element`]s are coordinate row vectors tied to an algebra;
//! multiplication operators are matrices acting on rows from the right.

mod envelope;
mod search;

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{Field, LinearSystem, Matrix, Scalar, Solution};

pub use envelope::{envelope_dimension, is_simple_closure};
pub use search::{ideal_search_exhaustive, isomorphism_search, MAX_IDEAL_SEARCH_DIM};
pub(crate) use search::{next_vector, FpTable};

#[derive(Debug)]
struct Inner {
    field: Field,
    n: usize,
    tensor: Vec<Scalar>,
    names: Option<Vec<String>>,
}

/// A structure-constant algebra. Cloning is cheap; the table is shared.
///
/// Equality compares the field and the structure tensor only, not basis names.
#[derive(Clone, Debug)]
pub struct Algebra {
    inner: Arc<Inner>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.n == other.inner.n
                && self.inner.tensor == other.inner.tensor)
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Builds an algebra from a flat tensor indexed `(i * n + j) * n + k`.
    pub fn new(field: Field, n: usize, tensor: Vec<Scalar>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("dimension must be at least 1".into()));
        }
        if tensor.len() != n * n * n {
            return Err(Error::DimensionMismatch(tensor.len(), n * n * n));
        }
        for c in &tensor {
            field.check(&c.field())?;
        }
        Ok(Algebra {
            inner: Arc::new(Inner {
                field,
                n,
                tensor,
                names: None,
            }),
        })
    }

    /// Starts a table with every product zero.
    pub fn builder(field: Field, n: usize) -> AlgebraBuilder {
        AlgebraBuilder {
            field,
            n,
            tensor: vec![field.zero(); n * n * n],
            names: None,
        }
    }

    /// Same table, new basis labels.
    pub fn with_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch(names.len(), self.dim()));
        }
        Ok(Algebra {
            inner: Arc::new(Inner {
                field: self.inner.field,
                n: self.inner.n,
                tensor: self.inner.tensor.clone(),
                names: Some(names.iter().map(|s| s.as_ref().to_string()).collect()),
            }),
        })
    }

    pub fn dim(&self) -> usize {
        self.inner.n
    }

    pub fn field(&self) -> Field {
        self.inner.field
    }

    pub fn names(&self) -> Option<&[String]> {
        self.inner.names.as_deref()
    }

    /// Label of basis vector `i`: the configured name or `e{i+1}`.
    pub fn basis_name(&self, i: usize) -> String {
        match &self.inner.names {
            Some(names) => names[i].clone(),
            None => format!("e{}", i + 1),
        }
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.inner.tensor
    }

    /// `c[i][j][k]`, zero-based.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.inner.n;
        &self.inner.tensor[(i * n + j) * n + k]
    }

    pub fn has_zero_multiplication(&self) -> bool {
        self.inner.tensor.iter().all(Scalar::is_zero)
    }

    pub fn zero(&self) -> Element {
        Element {
            algebra: self.clone(),
            coords: vec![self.field().zero(); self.dim()],
        }
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut e = self.zero();
        e.coords[i] = self.field().one();
        e
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis(i)).collect()
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch(coords.len(), self.dim()));
        }
        for c in &coords {
            self.field().check(&c.field())?;
        }
        Ok(Element {
            algebra: self.clone(),
            coords,
        })
    }

    /// Element with integer coordinates.
    pub fn element_ints(&self, coords: &[i64]) -> Element {
        let f = self.field();
        self.element(coords.iter().map(|&c| f.int(c)).collect())
            .expect("coordinate count matches dimension")
    }

    /// `e_i e_j` as an element.
    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        let n = self.dim();
        let start = (i * n + j) * n;
        Element {
            algebra: self.clone(),
            coords: self.inner.tensor[start..start + n].to_vec(),
        }
    }

    /// Right multiplication operator `R_a: v -> v a`; row `i` is `e_i a`.
    pub fn right_mult_matrix(&self, a: &Element) -> Result<Matrix> {
        self.check_owner(a)?;
        let n = self.dim();
        let mut m = Matrix::zero(self.field(), n, n);
        for i in 0..n {
            for (j, aj) in a.coords.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let v = m.get(i, k) + &(aj * self.constant(i, j, k));
                    m.set(i, k, v);
                }
            }
        }
        Ok(m)
    }

    /// Left multiplication operator `L_a: v -> a v`; row `i` is `a e_i`.
    pub fn left_mult_matrix(&self, a: &Element) -> Result<Matrix> {
        self.check_owner(a)?;
        let n = self.dim();
        let mut m = Matrix::zero(self.field(), n, n);
        for i in 0..n {
            for (j, aj) in a.coords.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let v = m.get(i, k) + &(aj * self.constant(j, i, k));
                    m.set(i, k, v);
                }
            }
        }
        Ok(m)
    }

    fn check_owner(&self, a: &Element) -> Result<()> {
        if &a.algebra == self {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i + 1..n).all(|j| (0..n).all(|k| self.constant(i, j, k) == self.constant(j, i, k)))
        })
    }

    /// The two-sided unit, if the algebra has one.
    ///
    /// Solves `R_u = I` and `L_u = I` as one linear system in the
    /// coordinates of `u`.
    pub fn find_unit(&self) -> Option<Element> {
        let n = self.dim();
        let f = self.field();
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for k in 0..n {
                let delta = if i == k { f.one() } else { f.zero() };
                // (e_i u)_k = sum_j u_j c[i][j][k]
                rows.push((0..n).map(|j| self.constant(i, j, k).clone()).collect());
                rhs.push(delta.clone());
                // (u e_i)_k = sum_j u_j c[j][i][k]
                rows.push((0..n).map(|j| self.constant(j, i, k).clone()).collect());
                rhs.push(delta);
            }
        }
        let coeffs = Matrix::from_rows(f, rows).expect("rectangular system");
        let solution = LinearSystem::new(coeffs, rhs)
            .expect("shapes agree")
            .solve();
        let u = match solution {
            Solution::Unique(u) => u,
            // a unit is unique whenever it exists
            Solution::Affine { base, .. } => base,
            Solution::NoSolution => return None,
        };
        Some(Element {
            algebra: self.clone(),
            coords: u,
        })
    }

    /// `(u v) w - u (v w)`.
    pub fn associator(&self, u: &Element, v: &Element, w: &Element) -> Result<Element> {
        let left = u.mul(v)?.mul(w)?;
        let right = u.mul(&v.mul(w)?)?;
        Ok(&left - &right)
    }

    /// Whether this commutative algebra satisfies `(x^2, y, x) = 0`.
    ///
    /// The identity is checked in fully linearized form on all basis tuples
    /// `(x1, x2, x3, y)`: the sum over permutations `s` of
    /// `((x_s1 x_s2) y) x_s3 - (x_s1 x_s2)(y x_s3)` must vanish. The
    /// linearization is equivalent to the identity when 6 is invertible,
    /// so `F_3` is rejected. Non-commutative algebras are never Jordan.
    pub fn is_jordan(&self) -> Result<bool> {
        if self.field().characteristic() == 3 {
            return Err(Error::UnsupportedCharacteristic(
                3,
                "the Jordan identity has degree 4 and is checked by linearization",
            ));
        }
        if !self.is_commutative() {
            return Ok(false);
        }
        let n = self.dim();
        let products: Vec<Vec<Element>> = (0..n)
            .map(|i| (0..n).map(|j| self.basis_product(i, j)).collect())
            .collect();
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let xs = [a, b, c];
                    for y in 0..n {
                        let ey = self.basis(y);
                        let mut total = self.zero();
                        for p in PERMS {
                            let sq = &products[xs[p[0]]][xs[p[1]]];
                            let x3 = self.basis(xs[p[2]]);
                            let lhs = sq.mul(&ey)?.mul(&x3)?;
                            let rhs = sq.mul(&ey.mul(&x3)?)?;
                            total = &total + &(&lhs - &rhs);
                        }
                        if !total.is_zero() {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Re-expresses the algebra in a new basis. Row `i` of `basis` holds the
    /// old coordinates of the new `i`-th basis vector; it must be invertible.
    pub fn change_basis(&self, basis: &Matrix) -> Result<Algebra> {
        let n = self.dim();
        if basis.rows() != n || basis.cols() != n {
            return Err(Error::DimensionMismatch(basis.rows(), n));
        }
        let back = basis.inverse().map_err(|_| Error::SingularOperator)?;
        let new_basis: Vec<Element> = (0..n)
            .map(|i| self.element(basis.row(i).to_vec()))
            .collect::<Result<_>>()?;
        let mut tensor = Vec::with_capacity(n * n * n);
        for a in &new_basis {
            for b in &new_basis {
                tensor.extend(back.apply(a.mul(b)?.coords())?);
            }
        }
        Algebra::new(self.field(), n, tensor)
    }

    /// The same table over another field. Only the identity conversion and
    /// reduction of a rational table modulo a prime are supported; the latter
    /// fails when a denominator is divisible by `p`.
    pub fn over_field(&self, target: Field) -> Result<Algebra> {
        if target == self.field() {
            return Ok(self.clone());
        }
        if !self.field().is_rational() {
            return Err(Error::InvalidParams(format!(
                "cannot convert a table over {} to {target}",
                self.field()
            )));
        }
        let tensor = self
            .tensor()
            .iter()
            .map(|c| target.from_rational(c.as_rational().expect("rational table")))
            .collect::<Result<Vec<_>>>()?;
        let a = Algebra::new(target, self.dim(), tensor)?;
        match self.names() {
            Some(names) => a.with_names(names),
            None => Ok(a),
        }
    }

    /// Relabels basis vectors: new basis vector `i` is old basis vector `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Algebra> {
        let p = Matrix::permutation(self.field(), perm)?;
        self.change_basis(&p)
    }
}

/// Incremental construction of a multiplication table.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    field: Field,
    n: usize,
    tensor: Vec<Scalar>,
    names: Option<Vec<String>>,
}

impl AlgebraBuilder {
    /// Sets `e_i e_j` (zero-based) to the given coordinates.
    pub fn product(mut self, i: usize, j: usize, coords: &[Scalar]) -> Self {
        assert_eq!(coords.len(), self.n, "product needs {} coordinates", self.n);
        let start = (i * self.n + j) * self.n;
        self.tensor[start..start + self.n].clone_from_slice(coords);
        self
    }

    pub fn product_ints(self, i: usize, j: usize, coords: &[i64]) -> Self {
        let f = self.field;
        let coords: Vec<Scalar> = coords.iter().map(|&c| f.int(c)).collect();
        self.product(i, j, &coords)
    }

    /// Sets both `e_i e_j` and `e_j e_i`.
    pub fn symmetric(self, i: usize, j: usize, coords: &[Scalar]) -> Self {
        self.product(i, j, coords).product(j, i, coords)
    }

    pub fn symmetric_ints(self, i: usize, j: usize, coords: &[i64]) -> Self {
        self.product_ints(i, j, coords).product_ints(j, i, coords)
    }

    pub fn names<S: AsRef<str>>(mut self, names: &[S]) -> Self {
        self.names = Some(names.iter().map(|s| s.as_ref().to_string()).collect());
        self
    }

    pub fn build(self) -> Result<Algebra> {
        let a = Algebra::new(self.field, self.n, self.tensor)?;
        match self.names {
            Some(names) => a.with_names(&names),
            None => Ok(a),
        }
    }
}

/// True iff `xi` is invertible and `(e_i e_j) xi = (e_i xi)(e_j xi)` in `b`
/// for all basis pairs, i.e. `xi` is an isomorphism `a -> b`.
pub fn verify_isomorphism(a: &Algebra, b: &Algebra, xi: &Matrix) -> bool {
    let n = a.dim();
    if a.field() != b.field() || b.dim() != n || xi.field() != a.field() {
        return false;
    }
    if xi.rows() != n || xi.cols() != n || !xi.is_invertible() {
        return false;
    }
    let images: Vec<Element> = (0..n)
        .map(|i| b.element(xi.row(i).to_vec()).expect("row length is n"))
        .collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = xi
                .apply(a.basis_product(i, j).coords())
                .expect("dimensions agree");
            let rhs = images[i].mul(&images[j]).expect("same algebra");
            if lhs != rhs.coords {
                return false;
            }
        }
    }
    true
}

/// A coordinate row vector of some [`Algebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    algebra: Algebra,
    coords: Vec<Scalar>,
}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// The algebra product `self * other`:
    /// `(ab)_k = sum_{i,j} a_i b_j c[i][j][k]`.
    pub fn mul(&self, other: &Element) -> Result<Element> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let alg = &self.algebra;
        let n = alg.dim();
        let mut out = vec![alg.field().zero(); n];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = alg.constant(i, j, k);
                    if !c.is_zero() {
                        *o = &*o + &(&ab * c);
                    }
                }
            }
        }
        Ok(Element {
            algebra: self.algebra.clone(),
            coords: out,
        })
    }

    pub fn square(&self) -> Element {
        self.mul(self).expect("same algebra")
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// The image `self * m` under a linear operator on the same space.
    pub fn apply(&self, m: &Matrix) -> Result<Element> {
        Ok(Element {
            algebra: self.algebra.clone(),
            coords: m.apply(&self.coords)?,
        })
    }

    /// Same coordinates viewed in another algebra on the same space.
    pub fn transfer(&self, target: &Algebra) -> Result<Element> {
        target.element(self.coords.clone())
    }

    fn zip(&self, other: &Element, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Element {
        assert!(
            self.algebra == other.algebra,
            "element arithmetic across different algebras"
        );
        Element {
            algebra: self.algebra.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-self.algebra.field().one())
    }
}

impl fmt::Display for Element {
    /// Linear combination of basis names, e.g. `1 + 2x` or `-2y - 2z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = self.algebra.basis_name(i);
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            let sign = match (first, negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let coef = if name == "1" {
                magnitude
            } else if magnitude == "1" {
                name
            } else if magnitude.contains('/') {
                format!("({magnitude}){name}")
            } else {
                format!("{magnitude}{name}")
            };
            write!(f, "{sign}{coef}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
