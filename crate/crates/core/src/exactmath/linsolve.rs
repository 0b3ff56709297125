//! Linear systems and incremental spans.

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// `coefficients * unknowns = rhs`, one equation per row of `coefficients`.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub coefficients: Matrix,
    pub rhs: Vec<Scalar>,
}

/// Complete description of a solution set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Scalar>),
    NoSolution,
    /// `base + span(kernel)`; `base` has every free coordinate set to zero.
    Affine {
        base: Vec<Scalar>,
        kernel: Vec<Vec<Scalar>>,
    },
}

impl Solution {
    /// The unique solution, or the designated base point of an affine family.
    pub fn representative(&self) -> Option<&[Scalar]> {
        match self {
            Solution::Unique(v) => Some(v),
            Solution::Affine { base, .. } => Some(base),
            Solution::NoSolution => None,
        }
    }

    pub fn kernel_dim(&self) -> usize {
        match self {
            Solution::Affine { kernel, .. } => kernel.len(),
            _ => 0,
        }
    }
}

impl LinearSystem {
    pub fn new(coefficients: Matrix, rhs: Vec<Scalar>) -> Result<Self> {
        if rhs.len() != coefficients.rows() {
            return Err(Error::DimensionMismatch(rhs.len(), coefficients.rows()));
        }
        for r in &rhs {
            coefficients.field().check(&r.field())?;
        }
        Ok(LinearSystem { coefficients, rhs })
    }

    pub fn solve(&self) -> Solution {
        let a = &self.coefficients;
        let (m, k) = (a.rows(), a.cols());
        let field = a.field();
        let mut aug = Matrix::zero(field, m, k + 1);
        for i in 0..m {
            for j in 0..k {
                aug.set(i, j, a.get(i, j).clone());
            }
            aug.set(i, k, self.rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&k) {
            return Solution::NoSolution;
        }
        let mut base = vec![field.zero(); k];
        for (row, &c) in pivots.iter().enumerate() {
            base[c] = r.get(row, k).clone();
        }
        let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Solution::Unique(base);
        }
        let kernel = free
            .iter()
            .map(|&f| {
                let mut v = vec![field.zero(); k];
                v[f] = field.one();
                for (row, &c) in pivots.iter().enumerate() {
                    v[c] = -r.get(row, f);
                }
                v
            })
            .collect();
        Solution::Affine { base, kernel }
    }
}

/// A subspace of `F^dim` kept in echelon form, grown one vector at a time.
#[derive(Clone, Debug)]
pub struct Span {
    field: Field,
    dim: usize,
    // (pivot column, row normalized so the pivot entry is 1)
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Span {
    pub fn new(field: Field, dim: usize) -> Self {
        Span {
            field,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn of(field: Field, dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut s = Span::new(field, dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Residue of `v` modulo the span; zero iff `v` lies in it.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns `true` when the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        // keep earlier rows free of the new pivot so `reduce` stays one pass
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        self.rows.push((p, r));
        true
    }

    /// Echelon basis of the span.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn field(&self) -> Field {
        self.field
    }
}
