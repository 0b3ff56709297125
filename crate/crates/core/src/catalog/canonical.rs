//! Normal forms inside the `C(α, β, γ)` family.

use std::fmt;

use super::{cabg, crho, j2, Certificate};
use crate::algebra::{verify_isomorphism, Algebra, Element};
use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix, Scalar};

/// Representative a simple `C(α, β, γ)` is isomorphic to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalTarget {
    Rho(Scalar),
    /// `C(1, 1, 0)`.
    C110,
    /// `C(1, 0, 0)`, which is `J_2`.
    C100,
}

impl CanonicalTarget {
    pub fn algebra(&self, field: Field) -> Algebra {
        match self {
            CanonicalTarget::Rho(rho) => crho(field, rho).expect("rho lies in the field"),
            CanonicalTarget::C110 => super::cabg_ints(field, 1, 1, 0),
            CanonicalTarget::C100 => j2(field),
        }
    }
}

impl fmt::Display for CanonicalTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalTarget::Rho(r) => write!(f, "C({r})"),
            CanonicalTarget::C110 => f.write_str("C(1,1,0)"),
            CanonicalTarget::C100 => f.write_str("C(1,0,0)"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalC {
    pub target: CanonicalTarget,
    /// Isomorphism from the target onto `C(α, β, γ)`: row `i` is the image
    /// of the `i`-th target basis vector.
    pub iso: Matrix,
    pub certificate: Certificate,
}

/// Reads `(α, β, γ)` off a unital commutative 3-dimensional algebra with
/// independent nil elements `x`, `y`.
///
/// Returns the parameters together with the matrix whose rows are
/// `(1, x, y)` in the coordinates of `a`, which is an isomorphism
/// `C(α, β, γ) -> a`.
pub fn to_canonical_c(
    a: &Algebra,
    x: &Element,
    y: &Element,
) -> Result<(Scalar, Scalar, Scalar, Matrix)> {
    if a.dim() != 3 || !a.is_commutative() {
        return Err(Error::InvalidParams(
            "expected a commutative algebra of dimension 3".into(),
        ));
    }
    let unit = a.find_unit().ok_or(Error::NotUnital)?;
    for v in [x, y] {
        if v.algebra() != a {
            return Err(Error::AlgebraMismatch);
        }
        if !v.square().is_zero() {
            return Err(Error::InvalidParams(format!("{v} does not square to zero")));
        }
    }
    let basis = Matrix::from_rows(
        a.field(),
        vec![
            unit.coords().to_vec(),
            x.coords().to_vec(),
            y.coords().to_vec(),
        ],
    )?;
    // 1 lies outside span{x, y} whenever x, y are independent nils, so a
    // singular basis means x and y are dependent
    let inverse = basis.inverse().map_err(|_| Error::DependentNils)?;
    let xy = inverse.apply(x.mul(y)?.coords())?;
    let [alpha, beta, gamma]: [Scalar; 3] = xy.try_into().expect("three coordinates");
    Ok((alpha, beta, gamma, basis))
}

/// Chooses the representative of a simple `C(α, β, γ)` and the base change.
///
/// * `βγ ≠ 0`: `x' = α^-1 βx`, `y' = α^-1 γy` give `C(ρ)` with `ρ = α^-1 βγ`.
/// * one of `β, γ` zero: after swapping so that `β ≠ 0`, `x' = α^-1 βx`,
///   `y' = β^-1 y` give `C(1, 1, 0)`.
/// * `β = γ = 0`: `x' = ω^-1 x`, `y' = ω^-1 y` with `ω^2 = α` give `C(1, 0, 0)`.
pub fn canonicalize_c(alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> Result<CanonicalC> {
    let field = alpha.field();
    if alpha.is_zero() {
        return Err(Error::NonSimple(
            "C(α, β, γ) with α = 0 has the ideal span{x, y}".into(),
        ));
    }
    let source = cabg(field, alpha, beta, gamma)?;
    let ainv = alpha.inv()?;
    let z = field.zero();
    let o = field.one();
    let diag = |d1: Scalar, d2: Scalar| {
        Matrix::from_rows(
            field,
            vec![
                vec![o.clone(), z.clone(), z.clone()],
                vec![z.clone(), d1, z.clone()],
                vec![z.clone(), z.clone(), d2],
            ],
        )
        .expect("3x3")
    };
    let (target, iso, case) = match (beta.is_zero(), gamma.is_zero()) {
        (false, false) => {
            let rho = &(&ainv * beta) * gamma;
            let iso = diag(&ainv * beta, &ainv * gamma);
            (
                CanonicalTarget::Rho(rho),
                iso,
                "βγ ≠ 0: x' = α^-1 βx, y' = α^-1 γy",
            )
        }
        (false, true) => (
            CanonicalTarget::C110,
            diag(&ainv * beta, beta.inv()?),
            "γ = 0: x' = α^-1 βx, y' = β^-1 y",
        ),
        (true, false) => {
            let iso = Matrix::from_rows(
                field,
                vec![
                    vec![o.clone(), z.clone(), z.clone()],
                    vec![z.clone(), z.clone(), &ainv * gamma],
                    vec![z.clone(), gamma.inv()?, z.clone()],
                ],
            )?;
            (
                CanonicalTarget::C110,
                iso,
                "β = 0: swap x, y; x' = α^-1 γy, y' = γ^-1 x",
            )
        }
        (true, true) => {
            let omega = alpha.sqrt().ok_or_else(|| {
                Error::SquareRootUnavailable(format!("{alpha} is not a square in {field}"))
            })?;
            let w = omega.inv()?;
            (
                CanonicalTarget::C100,
                diag(w.clone(), w),
                "β = γ = 0: x' = ω^-1 x, y' = ω^-1 y, ω^2 = α",
            )
        }
    };
    let mut cert = Certificate::new(format!("canonical form of C({alpha},{beta},{gamma})"));
    let target_algebra = target.algebra(field);
    cert.check(
        format!("{case} is an isomorphism {target} -> C({alpha},{beta},{gamma})"),
        verify_isomorphism(&target_algebra, &source, &iso),
    );
    cert.set_value("target", &target);
    cert.set_value("base change", &iso);
    Ok(CanonicalC {
        target,
        iso,
        certificate: cert,
    })
}
