//! Named algebras and the witness pipelines built on them.
//!
//! Families:
//!
//! * `J_n`: the Jordan algebra `F1 + V` of a symmetric bilinear form with
//!   Gram matrix `G`, product `(a1 + u)(b1 + v) = (ab + G(u, v))1 + av + bu`.
//!   `J_2` is the case of the hyperbolic plane, `x^2 = y^2 = 0, xy = 1`.
//! * `C(α, β, γ)`: unital commutative with basis `(1, x, y)`,
//!   `x^2 = y^2 = 0`, `xy = α1 + βx + γy`; `C(ρ) = C(ρ, ρ, ρ)`.
//! * `C_2`: basis `(a, b, c)` with `a^2 = b, ab = a, ac = c, b^2 = c^2 = 0, bc = b`.
//! * `C_3`: basis `(x, y, z)` with zero squares and `xy = z, yz = x, zx = y`.
//! * `G_n`: basis `(x_1, .., x_n, e)`, the `x_i` span a zero-multiplication
//!   subalgebra, `x_1 e = e + x_2`, `x_i e = x_i + x_{i+1}`, `x_n e = x_n + x_1`,
//!   `e^2 = e`.

mod canonical;
mod certificate;
mod witness;

pub use canonical::{canonicalize_c, to_canonical_c, CanonicalC, CanonicalTarget};
pub use certificate::{Certificate, IsotopeRecord, Step};
pub use witness::{
    witness_lemma1, witness_lemma10, witness_lemma11, witness_lemma6, witness_prop1, witness_prop2,
    witness_theorem1, witness_theorem2, WITNESS_NAMES,
};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix, Scalar};

/// Parameters of a named family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `J_n` for the symmetric Gram matrix given.
    Jn {
        gram: Matrix,
    },
    J2,
    Cabg {
        alpha: Scalar,
        beta: Scalar,
        gamma: Scalar,
    },
    Crho {
        rho: Scalar,
    },
    C2,
    C3,
    Gn {
        n: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogSpec {
    pub field: Field,
    pub family: Family,
}

impl CatalogSpec {
    pub fn new(field: Field, family: Family) -> Self {
        CatalogSpec { field, family }
    }
}

/// Builds the algebra named by `spec`.
pub fn construct(spec: &CatalogSpec) -> Result<Algebra> {
    let f = spec.field;
    match &spec.family {
        Family::Jn { gram } => jn(f, gram),
        Family::J2 => Ok(j2(f)),
        Family::Cabg { alpha, beta, gamma } => cabg(f, alpha, beta, gamma),
        Family::Crho { rho } => cabg(f, rho, rho, rho),
        Family::C2 => Ok(c2(f)),
        Family::C3 => Ok(c3(f)),
        Family::Gn { n } => gn(f, *n),
    }
}

/// `J_n` with basis `(1, v_1, .., v_n)`.
pub fn jn(field: Field, gram: &Matrix) -> Result<Algebra> {
    field.check(&gram.field())?;
    if !gram.is_square() || gram.rows() == 0 {
        return Err(Error::InvalidParams(
            "Gram matrix must be square and nonempty".into(),
        ));
    }
    if gram != &gram.transpose() {
        return Err(Error::InvalidParams("Gram matrix must be symmetric".into()));
    }
    let n = gram.rows();
    let dim = n + 1;
    let unit = |s: &Scalar| {
        let mut v = vec![field.zero(); dim];
        v[0] = s.clone();
        v
    };
    let basis = |i: usize| {
        let mut v = vec![field.zero(); dim];
        v[i] = field.one();
        v
    };
    let mut b = Algebra::builder(field, dim).product(0, 0, &unit(&field.one()));
    for i in 1..dim {
        b = b.symmetric(0, i, &basis(i));
        for j in 1..dim {
            b = b.product(i, j, &unit(gram.get(i - 1, j - 1)));
        }
    }
    let names: Vec<String> = std::iter::once("1".to_string())
        .chain((1..dim).map(|i| format!("v{i}")))
        .collect();
    b.names(&names).build()
}

/// `J_2 = <1, x, y | x^2 = y^2 = 0, xy = 1>`.
pub fn j2(field: Field) -> Algebra {
    Algebra::builder(field, 3)
        .product_ints(0, 0, &[1, 0, 0])
        .symmetric_ints(0, 1, &[0, 1, 0])
        .symmetric_ints(0, 2, &[0, 0, 1])
        .symmetric_ints(1, 2, &[1, 0, 0])
        .names(&["1", "x", "y"])
        .build()
        .expect("well-formed table")
}

/// `C(α, β, γ)` in its canonical basis `(1, x, y)`.
pub fn cabg(field: Field, alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> Result<Algebra> {
    for s in [alpha, beta, gamma] {
        field.check(&s.field())?;
    }
    let z = field.zero();
    let o = field.one();
    Algebra::builder(field, 3)
        .product(0, 0, &[o.clone(), z.clone(), z.clone()])
        .symmetric(0, 1, &[z.clone(), o.clone(), z.clone()])
        .symmetric(0, 2, &[z.clone(), z, o])
        .symmetric(1, 2, &[alpha.clone(), beta.clone(), gamma.clone()])
        .names(&["1", "x", "y"])
        .build()
}

/// `C(α, β, γ)` from integer parameters.
pub fn cabg_ints(field: Field, alpha: i64, beta: i64, gamma: i64) -> Algebra {
    cabg(
        field,
        &field.int(alpha),
        &field.int(beta),
        &field.int(gamma),
    )
    .expect("same field")
}

/// `C(ρ) = C(ρ, ρ, ρ)`.
pub fn crho(field: Field, rho: &Scalar) -> Result<Algebra> {
    cabg(field, rho, rho, rho)
}

pub fn c2(field: Field) -> Algebra {
    Algebra::builder(field, 3)
        .product_ints(0, 0, &[0, 1, 0])
        .symmetric_ints(0, 1, &[1, 0, 0])
        .symmetric_ints(0, 2, &[0, 0, 1])
        .symmetric_ints(1, 2, &[0, 1, 0])
        .names(&["a", "b", "c"])
        .build()
        .expect("well-formed table")
}

pub fn c3(field: Field) -> Algebra {
    Algebra::builder(field, 3)
        .symmetric_ints(0, 1, &[0, 0, 1])
        .symmetric_ints(1, 2, &[1, 0, 0])
        .symmetric_ints(2, 0, &[0, 1, 0])
        .names(&["x", "y", "z"])
        .build()
        .expect("well-formed table")
}

/// `G_n` with basis `(x_1, .., x_n, e)`; requires `n >= 2`.
pub fn gn(field: Field, n: usize) -> Result<Algebra> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("G_n needs n >= 2, got {n}")));
    }
    let dim = n + 1;
    let e = n;
    let vec_of = |idx: &[usize]| {
        let mut v = vec![0i64; dim];
        for &i in idx {
            v[i] += 1;
        }
        v
    };
    let mut b = Algebra::builder(field, dim).product_ints(e, e, &vec_of(&[e]));
    b = b.symmetric_ints(0, e, &vec_of(&[e, 1]));
    for i in 1..n {
        // x_i e = x_i + x_{i+1}, wrapping x_n e = x_n + x_1
        b = b.symmetric_ints(i, e, &vec_of(&[i, (i + 1) % n]));
    }
    let names: Vec<String> = (1..=n)
        .map(|i| format!("x{i}"))
        .chain(std::iter::once("e".to_string()))
        .collect();
    b.names(&names).build()
}

/// Every named algebra of dimension at most `max_dim` over `field`, with a
/// short label. Used for sweeping invariants across the catalog.
pub fn standard_catalog(field: Field, max_dim: usize) -> Vec<(String, Algebra)> {
    let mut out: Vec<(String, Algebra)> = vec![
        ("J2".into(), j2(field)),
        ("C2".into(), c2(field)),
        ("C3".into(), c3(field)),
        ("C(-2)".into(), cabg_ints(field, -2, -2, -2)),
        ("C(1)".into(), cabg_ints(field, 1, 1, 1)),
        ("C(1,1,0)".into(), cabg_ints(field, 1, 1, 0)),
        ("C(1,0,0)".into(), cabg_ints(field, 1, 0, 0)),
        ("C(2,1,4)".into(), cabg_ints(field, 2, 1, 4)),
        ("C(0,1,1)".into(), cabg_ints(field, 0, 1, 1)),
        ("C(0,1,0)".into(), cabg_ints(field, 0, 1, 0)),
        ("C(0,0,0)".into(), cabg_ints(field, 0, 0, 0)),
        (
            "J1".into(),
            jn(field, &Matrix::from_ints(field, &[&[1]])).expect("symmetric"),
        ),
    ];
    if max_dim >= 4 {
        out.push((
            "J3".into(),
            jn(
                field,
                &Matrix::from_ints(field, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]),
            )
            .expect("symmetric"),
        ));
    }
    for n in 2..max_dim {
        out.push((format!("G{n}"), gn(field, n).expect("n >= 2")));
    }
    out.retain(|(_, a)| a.dim() <= max_dim);
    out
}
