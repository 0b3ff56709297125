//! Albert isotopes and right-multiplication operators.
//!
//! For invertible operators `f, g` the principal isotope `A^(f,g)` lives on
//! the same space with product `x * y = (x f)(y g)`. A triple
//! `(φ, ψ, ξ)` of invertible maps `A -> B` is an isotopy when
//! `(x φ) ∘ (y ψ) = (x y) ξ` for all `x, y`; `(ξ, ξ, ξ)` is an isotopy iff
//! `ξ` is an isomorphism.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::exactmath::{LinearSystem, Matrix, Scalar, Solution};

/// A triple of invertible linear maps `(φ, ψ, ξ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isotopy {
    phi: Matrix,
    psi: Matrix,
    xi: Matrix,
}

impl Isotopy {
    pub fn new(phi: Matrix, psi: Matrix, xi: Matrix) -> Result<Self> {
        for m in [&phi, &psi, &xi] {
            if !m.is_invertible() {
                return Err(Error::SingularOperator);
            }
        }
        phi.field().check(&psi.field())?;
        phi.field().check(&xi.field())?;
        if phi.rows() != psi.rows() || phi.rows() != xi.rows() {
            return Err(Error::DimensionMismatch(phi.rows(), xi.rows()));
        }
        Ok(Isotopy { phi, psi, xi })
    }

    /// `(ξ, ξ, ξ)` for an isomorphism `ξ`.
    pub fn from_isomorphism(xi: Matrix) -> Result<Self> {
        Isotopy::new(xi.clone(), xi.clone(), xi)
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn psi(&self) -> &Matrix {
        &self.psi
    }

    pub fn xi(&self) -> &Matrix {
        &self.xi
    }

    /// Precomposes with a map `m: C -> A`, giving `(mφ, mψ, mξ): C -> B`.
    /// This is again an isotopy when `m` is an isomorphism `C -> A`.
    pub fn precompose(&self, m: &Matrix) -> Result<Isotopy> {
        Isotopy::new(m.mul(&self.phi)?, m.mul(&self.psi)?, m.mul(&self.xi)?)
    }
}

fn check_operator(a: &Algebra, m: &Matrix) -> Result<()> {
    a.field().check(&m.field())?;
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(Error::DimensionMismatch(m.rows(), a.dim()));
    }
    if !m.is_invertible() {
        return Err(Error::SingularOperator);
    }
    Ok(())
}

/// `A^(f,g)`: the same space with `e_i * e_j = (e_i f)(e_j g)`.
pub fn principal_isotope(a: &Algebra, f: &Matrix, g: &Matrix) -> Result<Algebra> {
    check_operator(a, f)?;
    check_operator(a, g)?;
    let n = a.dim();
    let left: Vec<Element> = (0..n)
        .map(|i| a.element(f.row(i).to_vec()))
        .collect::<Result<_>>()?;
    let right: Vec<Element> = (0..n)
        .map(|i| a.element(g.row(i).to_vec()))
        .collect::<Result<_>>()?;
    let mut tensor = Vec::with_capacity(n * n * n);
    for l in &left {
        for r in &right {
            tensor.extend(l.mul(r)?.into_coords());
        }
    }
    let iso = Algebra::new(a.field(), n, tensor)?;
    match a.names() {
        Some(names) => iso.with_names(names),
        None => Ok(iso),
    }
}

/// `A^(f,f)`.
pub fn standard_isotope(a: &Algebra, f: &Matrix) -> Result<Algebra> {
    principal_isotope(a, f, f)
}

/// A standard isotope `A^(σf, τf)` normalized to `A^(f,f)`.
#[derive(Clone, Debug)]
pub struct NormalizedStandardIsotope {
    /// `A^(f,f)`.
    pub algebra: Algebra,
    /// `ω = (στ)^-1`; the homothety `v -> ωv` maps `A^(f,f)` isomorphically
    /// onto `A^(σf,τf)`.
    pub homothety: Scalar,
}

pub fn standard_isotope_proportional(
    a: &Algebra,
    sigma: &Scalar,
    tau: &Scalar,
    f: &Matrix,
) -> Result<NormalizedStandardIsotope> {
    if sigma.is_zero() || tau.is_zero() {
        return Err(Error::DomainError(
            "proportionality factors must be nonzero".into(),
        ));
    }
    let omega = (sigma * tau).inv()?;
    Ok(NormalizedStandardIsotope {
        algebra: standard_isotope(a, f)?,
        homothety: omega,
    })
}

/// Checks `(e_i φ) ∘ (e_j ψ) = (e_i e_j) ξ` in `b` for every basis pair,
/// which suffices by bilinearity.
pub fn verify_isotopy(a: &Algebra, b: &Algebra, iso: &Isotopy) -> bool {
    let n = a.dim();
    if b.dim() != n || a.field() != b.field() || iso.phi.field() != a.field() || iso.phi.rows() != n
    {
        return false;
    }
    for i in 0..n {
        let x = b.element(iso.phi.row(i).to_vec()).expect("row length n");
        for j in 0..n {
            let y = b.element(iso.psi.row(j).to_vec()).expect("row length n");
            let lhs = x.mul(&y).expect("same algebra");
            let rhs = iso
                .xi
                .apply(a.basis_product(i, j).coords())
                .expect("length n");
            if lhs.coords() != rhs.as_slice() {
                return false;
            }
        }
    }
    true
}

/// Right multiplication operator of an element with its determinant.
#[derive(Clone, Debug)]
pub struct RMultReport {
    pub element: Element,
    pub matrix: Matrix,
    pub determinant: Scalar,
    pub invertible: bool,
}

pub fn r_mult_report(a: &Element) -> RMultReport {
    let matrix = a
        .algebra()
        .right_mult_matrix(a)
        .expect("element belongs to its algebra");
    let determinant = matrix.det().expect("square");
    RMultReport {
        element: a.clone(),
        invertible: !determinant.is_zero(),
        matrix,
        determinant,
    }
}

/// An element `g` with `R_g = M`, and the dimension of `{h : R_h = 0}`.
#[derive(Clone, Debug)]
pub struct RightMultSolution {
    pub element: Element,
    /// Zero iff `g` is the only solution.
    pub kernel_dim: usize,
}

/// Solves `sum_j g_j c[i][j][k] = M[i][k]` for `g`.
///
/// When the solution is not unique the representative with every free
/// coordinate zero is returned.
pub fn express_as_right_mult(a: &Algebra, m: &Matrix) -> Option<RightMultSolution> {
    let n = a.dim();
    if m.rows() != n || m.cols() != n || m.field() != a.field() {
        return None;
    }
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for i in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|j| a.constant(i, j, k).clone()).collect());
            rhs.push(m.get(i, k).clone());
        }
    }
    let coeffs = Matrix::from_rows(a.field(), rows).expect("rectangular");
    let solution = LinearSystem::new(coeffs, rhs)
        .expect("shapes agree")
        .solve();
    let kernel_dim = solution.kernel_dim();
    match solution {
        Solution::NoSolution => None,
        Solution::Unique(g) | Solution::Affine { base: g, .. } => Some(RightMultSolution {
            element: a.element(g).expect("n coordinates"),
            kernel_dim,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::verify_isomorphism;
    use crate::catalog::{c2, c3, cabg_ints, j2};
    use crate::exactmath::Field;

    fn q() -> Field {
        Field::rational()
    }

    #[test]
    fn identity_isotope_is_the_algebra() {
        let a = c2(q());
        let i = Matrix::identity(q(), 3);
        assert_eq!(principal_isotope(&a, &i, &i).unwrap(), a);
        assert_eq!(standard_isotope(&a, &i).unwrap(), a);
    }

    #[test]
    fn singular_operator_rejected() {
        let a = j2(q());
        let s = Matrix::zero(q(), 3, 3);
        assert_eq!(standard_isotope(&a, &s), Err(Error::SingularOperator));
    }

    #[test]
    fn c2_isotope_by_ra() {
        let a = c2(q());
        let ra = a.right_mult_matrix(&a.basis(0)).unwrap();
        let iso = standard_isotope(&a, &ra).unwrap();
        let (x, one, y) = (iso.basis(0), iso.basis(1), iso.basis(2));
        assert!(x.square().is_zero());
        assert_eq!(one.square(), one);
        assert!(y.square().is_zero());
        assert_eq!(x.mul(&one).unwrap(), x);
        assert_eq!(one.mul(&y).unwrap(), y);
        assert_eq!(x.mul(&y).unwrap(), one);
    }

    #[test]
    fn scalar_isotope_is_isomorphic_via_homothety() {
        let a = j2(q());
        let (s, t) = (q().int(2), q().int(3));
        let iso = principal_isotope(&a, &Matrix::scalar(q(), 3, &s), &Matrix::scalar(q(), 3, &t))
            .unwrap();
        let omega = q().ratio(1, 6).unwrap();
        assert!(verify_isomorphism(
            &a,
            &iso,
            &Matrix::scalar(q(), 3, &omega)
        ));
    }

    #[test]
    fn proportional_pair_normalizes() {
        let a = c3(q());
        let f = Matrix::from_ints(q(), &[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]);
        let (s, t) = (q().int(-3), q().ratio(1, 2).unwrap());
        let norm = standard_isotope_proportional(&a, &s, &t, &f).unwrap();
        let full = principal_isotope(&a, &f.scale(&s), &f.scale(&t)).unwrap();
        assert_eq!(norm.homothety, q().ratio(-2, 3).unwrap());
        assert!(verify_isomorphism(
            &norm.algebra,
            &full,
            &Matrix::scalar(q(), 3, &norm.homothety)
        ));
    }

    #[test]
    fn tautological_isotopy_from_isotope() {
        let a = j2(q());
        let f = Matrix::from_ints(q(), &[&[1, 2, 0], &[0, 1, 0], &[1, 0, 1]]);
        let g = Matrix::from_ints(q(), &[&[1, 0, 0], &[3, 1, 0], &[0, 0, -1]]);
        let b = principal_isotope(&a, &f, &g).unwrap();
        let triple = Isotopy::new(f, g, Matrix::identity(q(), 3)).unwrap();
        assert!(verify_isotopy(&b, &a, &triple));
        assert!(!verify_isotopy(&a, &b, &triple));
    }

    #[test]
    fn isomorphism_triple_is_isotopy() {
        let a = cabg_ints(q(), 1, 1, 0);
        let b = cabg_ints(q(), 1, 0, 1);
        let swap = Matrix::permutation(q(), &[0, 2, 1]).unwrap();
        assert!(verify_isomorphism(&a, &b, &swap));
        assert!(verify_isotopy(
            &a,
            &b,
            &Isotopy::from_isomorphism(swap).unwrap()
        ));
    }

    #[test]
    fn j2_determinant_of_r() {
        let a = j2(q());
        let (al, be) = (q().ratio(3, 7).unwrap(), q().int(-5));
        let el = a.element(vec![q().one(), al.clone(), be.clone()]).unwrap();
        let rep = r_mult_report(&el);
        assert_eq!(
            rep.determinant,
            q().one() - q().int(2) * al.clone() * be.clone()
        );
        assert!(rep.invertible);
        let nil = a.element(vec![q().zero(), al, be]).unwrap();
        assert!(!r_mult_report(&nil).invertible);
    }

    #[test]
    fn c2_ra_is_an_involution() {
        let a = c2(q());
        let rep = r_mult_report(&a.basis(0));
        assert_eq!(
            rep.matrix,
            Matrix::from_ints(q(), &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])
        );
        assert_eq!(rep.determinant, q().int(-1));
        assert!(rep.matrix.mul(&rep.matrix).unwrap().is_identity());
    }

    #[test]
    fn express_as_right_mult_cases() {
        let a = j2(q());
        let c = a.element_ints(&[1, 1, 0]);
        let rc = a.right_mult_matrix(&c).unwrap();
        let sol = express_as_right_mult(&a, &rc).unwrap();
        assert_eq!(sol.element, c);
        assert_eq!(sol.kernel_dim, 0);
        assert!(express_as_right_mult(&a, &rc.inverse().unwrap()).is_none());
        let rho = cabg_ints(q(), 3, 3, 3);
        let unit = express_as_right_mult(&rho, &Matrix::identity(q(), 3)).unwrap();
        assert_eq!(unit.element, rho.element_ints(&[1, 0, 0]));
    }
}
