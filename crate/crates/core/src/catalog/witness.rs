//! Verification pipelines, one per constructive result.
//!
//! Each pipeline builds the objects of the argument, compares every matrix
//! and product against the value written out by hand, and returns the
//! resulting [`Certificate`]. Expected matrices are literal tables so a
//! mismatch is visible entry by entry.

use super::{c2, c3, cabg, cabg_ints, canonicalize_c, crho, gn, j2, CanonicalTarget};
use super::{Certificate, IsotopeRecord};
use crate::algebra::{
    envelope_dimension, ideal_search_exhaustive, is_simple_closure, isomorphism_search,
    verify_isomorphism, Algebra, Element,
};
use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix, Scalar, Span};
use crate::isotopy::{
    express_as_right_mult, principal_isotope, standard_isotope, verify_isotopy, Isotopy,
};
use crate::nilrank::nil_rank_exact_c;

pub const WITNESS_NAMES: [&str; 8] = [
    "lemma1", "lemma6", "lemma10", "lemma11", "theorem1", "theorem2", "prop1", "prop2",
];

fn rows(field: Field, r: Vec<Vec<Scalar>>) -> Matrix {
    Matrix::from_rows(field, r).expect("rectangular")
}

fn basis_matrix(elems: &[&Element]) -> Matrix {
    let field = elems[0].algebra().field();
    rows(field, elems.iter().map(|e| e.coords().to_vec()).collect())
}

/// Checks that `φ^-1 = R_g` in `base` and records the isotope.
fn theorem_a(cert: &mut Certificate, label: &str, base: &Algebra, phi: &Matrix, g: &Element) {
    let found = phi
        .inverse()
        .ok()
        .and_then(|inv| express_as_right_mult(base, &inv))
        .map(|s| s.element);
    let shown = found
        .as_ref()
        .map_or("none".to_string(), Element::to_string);
    cert.record(
        format!("{label}: φ^-1 is the right multiplication R_g"),
        g,
        shown,
        found.as_ref() == Some(g),
    );
    let back = base
        .right_mult_matrix(g)
        .and_then(|r| phi.mul(&r))
        .map(|m| m.is_identity())
        .unwrap_or(false);
    cert.check(format!("{label}: φ R_g = I"), back);
    cert.isotopes.push(IsotopeRecord {
        label: label.to_string(),
        base: base.clone(),
        phi: phi.clone(),
        g: g.clone(),
    });
}

/// The homothety `ωI`, `ω = (στ)^-1`, is an isomorphism `A -> A^(σI, τI)`.
pub fn witness_lemma1(a: &Algebra, sigma: &Scalar, tau: &Scalar) -> Result<Certificate> {
    let field = a.field();
    field.check(&sigma.field())?;
    field.check(&tau.field())?;
    if sigma.is_zero() || tau.is_zero() {
        return Err(Error::DomainError("σ and τ must be nonzero".into()));
    }
    let n = a.dim();
    let omega = (sigma * tau).inv()?;
    let f = Matrix::scalar(field, n, sigma);
    let g = Matrix::scalar(field, n, tau);
    let iso = principal_isotope(a, &f, &g)?;
    let mut cert = Certificate::new(format!("lemma1: homothety for σ = {sigma}, τ = {tau}"));
    cert.set_value("omega", &omega);
    let scaled = (0..n).all(|i| {
        (0..n).all(|j| {
            iso.basis_product(i, j)
                == a.basis_product(i, j)
                    .scale(&(sigma * tau))
                    .transfer(&iso)
                    .unwrap()
        })
    });
    cert.check("x * y = στ xy for all basis pairs", scaled);
    cert.check(
        "(σI, τI, I) is an isotopy A^(σI,τI) -> A",
        Isotopy::new(f.clone(), g.clone(), Matrix::identity(field, n))
            .map(|t| verify_isotopy(&iso, a, &t))
            .unwrap_or(false),
    );
    let xi = Matrix::scalar(field, n, &omega);
    cert.check(
        format!("ωI with ω = {omega} is an isomorphism A -> A^(σI,τI)"),
        verify_isomorphism(a, &iso, &xi),
    );
    cert.check(
        "(στ)I is an isomorphism A^(σI,τI) -> A",
        verify_isomorphism(&iso, a, &xi.inverse()?),
    );
    Ok(cert)
}

/// `C_2^(R_a, R_a)` is `J_2` after renaming `x := a, 1 := b, y := c`.
pub fn witness_lemma6(field: Field) -> Certificate {
    let c = c2(field);
    let a = c.basis(0);
    let (b, cc) = (c.basis(1), c.basis(2));
    let mut cert = Certificate::new("lemma6: C2 isotope by R_a");
    cert.check("C2 has no unit", c.find_unit().is_none());
    let ra = c.right_mult_matrix(&a).expect("own element");
    let ra_expected = Matrix::from_ints(field, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    cert.check_eq("R_a", &ra_expected, &ra);
    cert.check_eq("det R_a", &field.int(-1), &ra.det().expect("square"));
    let iso = standard_isotope(&c, &ra).expect("R_a invertible");
    let star = |u: &Element, v: &Element| {
        u.transfer(&iso)
            .unwrap()
            .mul(&v.transfer(&iso).unwrap())
            .unwrap()
            .transfer(&c)
            .unwrap()
    };
    cert.check_eq("b * b = b", &b, &star(&b, &b));
    cert.check_eq("a * c = b", &b, &star(&a, &cc));
    cert.check_some(
        "unit of the isotope",
        &b.transfer(&iso).unwrap(),
        iso.find_unit().as_ref(),
    );
    let relabeled = iso.relabel(&[1, 0, 2]).expect("permutation");
    cert.check(
        "structure tensor after (1, x, y) := (b, a, c) equals J2",
        relabeled.tensor() == j2(field).tensor(),
    );
    cert.set_value("isotope", crate::format::table_summary(&iso));
    theorem_a(&mut cert, "lemma6", &c, &ra, &a);
    cert
}

/// Pieces of the `C(1,1,0)` construction reused by [`witness_theorem1`]:
/// `φ = R_{1+x}^-1` on `J_2` and the isomorphism `C(1,1,0) -> J_2^(φ,φ)`.
fn lemma10_parts(field: Field) -> (Certificate, Matrix, Matrix) {
    let j = j2(field);
    let mut cert = Certificate::new("lemma10");
    let c = j.element_ints(&[1, 1, 0]);
    let rc = j.right_mult_matrix(&c).expect("own element");
    cert.check_eq(
        "R_c for c = 1 + x",
        &Matrix::from_ints(field, &[&[1, 1, 0], &[0, 1, 0], &[1, 0, 1]]),
        &rc,
    );
    let phi = rc.inverse().expect("det R_c = 1");
    cert.check_eq(
        "φ = R_c^-1",
        &Matrix::from_ints(field, &[&[1, -1, 0], &[0, 1, 0], &[-1, 1, 1]]),
        &phi,
    );
    let iso = standard_isotope(&j, &phi).expect("invertible");
    let e = iso.element_ints(&[1, 2, 0]);
    cert.check_some("unit e = c^2 = 1 + 2x", &e, iso.find_unit().as_ref());
    cert.check_eq(
        "e φ = c",
        &c,
        &c.algebra().element(phi.apply(e.coords()).unwrap()).unwrap(),
    );
    let half = field.ratio(1, 2).expect("odd characteristic");
    let a1 = iso.element_ints(&[0, -2, 0]);
    let b1 = iso
        .element(vec![-half.clone(), field.zero(), -half])
        .unwrap();
    cert.check("a' = -2x squares to zero", a1.square().is_zero());
    cert.check("b' = -(1/2)(1 + y) squares to zero", b1.square().is_zero());
    cert.check_eq("a' * b' = e + a'", &(&e + &a1), &a1.mul(&b1).unwrap());
    let m = basis_matrix(&[&e, &a1, &b1]);
    let c110 = cabg_ints(field, 1, 1, 0);
    cert.check(
        "(e, a', b') is an isomorphism C(1,1,0) -> J2^(φ,φ)",
        verify_isomorphism(&c110, &iso, &m),
    );
    cert.check(
        "(Mφ, Mφ, M) is an isotopy C(1,1,0) -> J2",
        Isotopy::new(m.mul(&phi).unwrap(), m.mul(&phi).unwrap(), m.clone())
            .map(|t| verify_isotopy(&c110, &j, &t))
            .unwrap_or(false),
    );
    (cert, phi, m)
}

/// `C(1,1,0)` and `C(1,0,0) = J_2` are isotopic but not isomorphic.
pub fn witness_lemma10(field: Field) -> Certificate {
    let (mut cert, phi, _) = lemma10_parts(field);
    let j = j2(field);
    let c110 = cabg_ints(field, 1, 1, 0);
    cert.check(
        "φ itself is no right multiplication of J2",
        express_as_right_mult(&j, &phi).is_none(),
    );
    let (x, y) = (c110.basis(1), c110.basis(2));
    let xy = x.mul(&y).unwrap();
    cert.check_eq(
        "associator (xy, x, y) in C(1,1,0)",
        &(-&x),
        &c110.associator(&xy, &x, &y).unwrap(),
    );
    if field.characteristic() == 3 {
        cert.check(
            "no isomorphism C(1,1,0) -> C(1,0,0) over F_3",
            matches!(isomorphism_search(&c110, &j), Ok(None)),
        );
    } else {
        cert.check("C(1,0,0) is Jordan", j.is_jordan() == Ok(true));
        cert.check("C(1,1,0) is not Jordan", c110.is_jordan() == Ok(false));
    }
    let c = j.element_ints(&[1, 1, 0]);
    theorem_a(&mut cert, "lemma10", &j, &phi, &c);
    cert.title = "lemma10: C(1,1,0) is isotopic to J2 and not isomorphic".into();
    cert
}

/// `φ = R_c^-1` for `c = 1 + γx + y` on `J_2` and the isomorphism
/// `C(ρ) -> J_2^(φ,φ)`.
fn lemma11_parts(rho: &Scalar) -> Result<(Certificate, Matrix, Matrix)> {
    let field = rho.field();
    let two = field.int(2);
    if rho.is_zero() || (rho + &two).is_zero() {
        return Err(Error::DomainError(format!(
            "ρ = {rho}: the construction needs ρ ∉ {{0, -2}}"
        )));
    }
    let gamma = rho.div(&(&(&two * rho) + &field.int(4)))?;
    let one = field.one();
    let delta = (&one - &(&two * &gamma)).inv()?;
    let mut cert = Certificate::new("lemma11");
    cert.set_value("gamma", &gamma);
    cert.set_value("delta", &delta);
    cert.check("γ ≠ 0", !gamma.is_zero());
    cert.check("γ ≠ 1/2", !(&two * &gamma).is_one());

    let j = j2(field);
    let c = j.element(vec![one.clone(), gamma.clone(), one.clone()])?;
    let rc = j.right_mult_matrix(&c)?;
    let z = field.zero();
    let g = &gamma;
    let rc_expected = rows(
        field,
        vec![
            vec![one.clone(), g.clone(), one.clone()],
            vec![one.clone(), one.clone(), z.clone()],
            vec![g.clone(), z.clone(), one.clone()],
        ],
    );
    cert.check_eq("R_c for c = 1 + γx + y", &rc_expected, &rc);
    cert.check_eq("det R_c = 1 - 2γ", &(&one - &(&two * g)), &rc.det()?);
    let phi = rc.inverse()?;
    let phi_expected = rows(
        field,
        vec![
            vec![one.clone(), -g, -&one],
            vec![-&one, &one - g, one.clone()],
            vec![-g, g * g, &one - g],
        ],
    )
    .scale(&delta);
    cert.check_eq(
        "φ = R_c^-1 = δ[[1,-γ,-1],[-1,1-γ,1],[-γ,γ^2,1-γ]]",
        &phi_expected,
        &phi,
    );

    let iso = standard_isotope(&j, &phi)?;
    let e = c.square().transfer(&iso)?;
    cert.check_some("unit e = c^2", &e, iso.find_unit().as_ref());
    let x1 = iso.element(vec![one.clone(), one.clone(), z.clone()])?;
    let y1 = iso.element(vec![g.clone(), z.clone(), one.clone()])?;
    cert.check("x' = 1 + x squares to zero", x1.square().is_zero());
    cert.check("y' = γ1 + y squares to zero", y1.square().is_zero());
    let expected = (&(&e - &x1.scale(&(&two * g))) - &y1.scale(&two)).scale(&delta);
    cert.check_eq("x' * y' = δ(e - 2γx' - 2y')", &expected, &x1.mul(&y1)?);

    let (pa, pb, pg) = (delta.clone(), -&(&(&two * g) * &delta), -&(&two * &delta));
    let basis = basis_matrix(&[&e, &x1, &y1]);
    cert.check(
        format!("(e, x', y') is an isomorphism C({pa},{pb},{pg}) -> J2^(φ,φ)"),
        verify_isomorphism(&cabg(field, &pa, &pb, &pg)?, &iso, &basis),
    );
    let canon = canonicalize_c(&pa, &pb, &pg)?;
    let recovered = match &canon.target {
        CanonicalTarget::Rho(r) => Some(r.clone()),
        _ => None,
    };
    cert.absorb(canon.certificate);
    let four_gd = &(&field.int(4) * g) * &delta;
    cert.check_eq("4γδ = ρ", rho, &four_gd);
    cert.check_some("canonical parameter", rho, recovered.as_ref());
    cert.set_value("recovered rho", &four_gd);
    let m = canon.iso.mul(&basis)?;
    let target = crho(field, rho)?;
    cert.check(
        format!("composite is an isomorphism C({rho}) -> J2^(φ,φ)"),
        verify_isomorphism(&target, &iso, &m),
    );
    cert.check(
        format!("(Mφ, Mφ, M) is an isotopy C({rho}) -> J2"),
        Isotopy::new(m.mul(&phi)?, m.mul(&phi)?, m.clone())
            .map(|t| verify_isotopy(&target, &j, &t))
            .unwrap_or(false),
    );
    theorem_a(&mut cert, "lemma11", &j, &phi, &c);
    Ok((cert, phi, m))
}

/// `C(ρ)` for `ρ ∉ {0, -2}` is a standard isotope of `J_2`.
pub fn witness_lemma11(rho: &Scalar) -> Result<Certificate> {
    let (mut cert, _, _) = lemma11_parts(rho)?;
    cert.title = format!("lemma11: C({rho}) is isotopic to J2");
    Ok(cert)
}

/// A simple `C(α, β, γ)` of nil-rank 2 is isotopic to `J_2`.
///
/// The chain is `C(α, β, γ) -> canonical form -> J_2^(φ,φ) -> J_2`; the
/// composite triple is verified directly.
pub fn witness_theorem1(alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> Result<Certificate> {
    let field = alpha.field();
    if alpha.is_zero() {
        return Err(Error::NonSimple(format!(
            "C(0,{beta},{gamma}) has the ideal span{{x, y}}"
        )));
    }
    if (&(beta * gamma) + &(&field.int(2) * alpha)).is_zero() {
        return Err(Error::NilRank3(format!(
            "C({alpha},{beta},{gamma}) has βγ = -2α, so its nil-rank is 3"
        )));
    }
    let source = cabg(field, alpha, beta, gamma)?;
    let mut cert = Certificate::new(format!(
        "theorem1: C({alpha},{beta},{gamma}) is isotopic to J2"
    ));
    let nil = nil_rank_exact_c(alpha, beta, gamma)?;
    cert.check_eq("nil-rank", &2, &nil.rank);
    let canon = canonicalize_c(alpha, beta, gamma)?;
    let target = canon.target.clone();
    let p_inv = canon.iso.inverse()?;
    cert.absorb(canon.certificate);
    let (phi, m) = match &target {
        CanonicalTarget::Rho(rho) => {
            let (sub, phi, m) = lemma11_parts(rho)?;
            cert.absorb(sub);
            (phi, m)
        }
        CanonicalTarget::C110 => {
            let (sub, phi, m) = lemma10_parts(field);
            cert.absorb(sub);
            (phi, m)
        }
        CanonicalTarget::C100 => (Matrix::identity(field, 3), Matrix::identity(field, 3)),
    };
    cert.set_value("canonical form", &target);
    let xi = p_inv.mul(&m)?;
    let triple = Isotopy::new(xi.mul(&phi)?, xi.mul(&phi)?, xi.clone())?;
    cert.set_value("phi", triple.phi());
    cert.set_value("xi", triple.xi());
    cert.check(
        format!("(ξφ, ξφ, ξ) is an isotopy C({alpha},{beta},{gamma}) -> J2"),
        verify_isotopy(&source, &j2(field), &triple),
    );
    Ok(cert)
}

/// The standard isotope of `C_3` by `R_{x+y+z}^-1` is isomorphic to `C(-2)`.
pub fn witness_theorem2(field: Field) -> Certificate {
    let a = c3(field);
    let mut cert = Certificate::new("theorem2: C3 is isotopic to C(-2)");
    let c = a.element_ints(&[1, 1, 1]);
    let e = c.square();
    cert.check_eq("e = c^2", &a.element_ints(&[2, 2, 2]), &e);
    cert.check_eq("e = 2c", &c.scale(&field.int(2)), &e);
    let rc = a.right_mult_matrix(&c).expect("own element");
    cert.check_eq(
        "R_c",
        &Matrix::from_ints(field, &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]),
        &rc,
    );
    let phi = rc.inverse().expect("det R_c = 2");
    let half = field.ratio(1, 2).expect("odd characteristic");
    cert.check_eq(
        "φ = R_c^-1",
        &Matrix::from_ints(field, &[&[-1, 1, 1], &[1, -1, 1], &[1, 1, -1]]).scale(&half),
        &phi,
    );
    for (src, dst, label) in [
        ([1, 1, 0], [0, 0, 1], "(x + y)φ = z"),
        ([0, 1, 1], [1, 0, 0], "(y + z)φ = x"),
        ([1, 0, 1], [0, 1, 0], "(z + x)φ = y"),
    ] {
        let image = a.element_ints(&src).apply(&phi).unwrap();
        cert.check_eq(label, &a.element_ints(&dst), &image);
    }
    let iso = standard_isotope(&a, &phi).expect("invertible");
    let e = e.transfer(&iso).unwrap();
    cert.check_some("unit of the isotope is e", &e, iso.find_unit().as_ref());
    let x = iso.element_ints(&[0, -2, -2]);
    let y = iso.element_ints(&[-2, 0, -2]);
    cert.check("a = -2(y + z) squares to zero", x.square().is_zero());
    cert.check("b = -2(z + x) squares to zero", y.square().is_zero());
    let expected = (&(&e + &x) + &y).scale(&field.int(-2));
    cert.check_eq("a * b = -2(e + a + b)", &expected, &x.mul(&y).unwrap());
    let m = basis_matrix(&[&e, &x, &y]);
    let cm2 = cabg_ints(field, -2, -2, -2);
    cert.check(
        "(e, a, b) is an isomorphism C(-2) -> C3^(φ,φ)",
        verify_isomorphism(&cm2, &iso, &m),
    );
    cert.check(
        "(Mφ, Mφ, M) is an isotopy C(-2) -> C3",
        Isotopy::new(m.mul(&phi).unwrap(), m.mul(&phi).unwrap(), m)
            .map(|t| verify_isotopy(&cm2, &a, &t))
            .unwrap_or(false),
    );
    cert.set_value("phi", &phi);
    theorem_a(&mut cert, "theorem2", &a, &phi, &c);
    cert
}

fn check_gn_size(n: usize) -> Result<()> {
    if (2..=8).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!(
            "n must lie in 2..=8, got {n}"
        )))
    }
}

/// `G_n` is simple: full multiplication envelope, and no ideals over `F_3`
/// for small `n`.
pub fn witness_prop1(n: usize) -> Result<Certificate> {
    check_gn_size(n)?;
    let g = gn(Field::rational(), n)?;
    let mut cert = Certificate::new(format!("prop1: G{n} is simple"));
    cert.check("multiplication is nonzero", !g.has_zero_multiplication());
    cert.check_eq(
        "envelope dimension",
        &((n + 1) * (n + 1)),
        &envelope_dimension(&g),
    );
    if n <= 3 {
        let g3 = gn(Field::prime(3)?, n)?;
        let ideals = ideal_search_exhaustive(&g3)?;
        cert.check_eq("proper ideals over F_3", &0, &ideals.len());
    }
    Ok(cert)
}

/// The standard isotope of `G_n` by `R_e^-1` is unital but not simple.
pub fn witness_prop2(n: usize) -> Result<Certificate> {
    check_gn_size(n)?;
    let field = Field::rational();
    let g = gn(field, n)?;
    let mut cert = Certificate::new(format!("prop2: an isotope of G{n} is not simple"));
    let t = g.basis(n);
    let rt = g.right_mult_matrix(&t)?;
    let det = rt.det()?;
    cert.record(
        "R_t is invertible for t = e",
        "nonzero",
        &det,
        !det.is_zero(),
    );
    let phi = rt.inverse()?;
    let iso = standard_isotope(&g, &phi)?;
    let unit = t.square().transfer(&iso)?;
    cert.check_some(
        "unit of the isotope is t^2",
        &unit,
        iso.find_unit().as_ref(),
    );
    // z_i = x_i R_t, the preimage of x_i under φ
    let z: Vec<Element> = (0..n)
        .map(|i| iso.element(rt.row(i).to_vec()))
        .collect::<Result<_>>()?;
    let mut span = Span::new(field, n + 1);
    for zi in &z {
        span.insert(zi.coords());
    }
    cert.check_eq("dim Z", &n, &span.dim());
    let zero_mult = z
        .iter()
        .all(|a| z.iter().all(|b| a.mul(b).unwrap().is_zero()));
    cert.check("z_i * z_j = 0", zero_mult);
    let absorbs = z.iter().all(|zi| {
        iso.basis_elements().iter().all(|b| {
            span.contains(zi.mul(b).unwrap().coords()) && span.contains(b.mul(zi).unwrap().coords())
        })
    });
    cert.check("Z is a two-sided ideal of the isotope", absorbs);
    let env = envelope_dimension(&iso);
    cert.record(
        "envelope dimension of the isotope",
        format!("< {}", (n + 1) * (n + 1)),
        env,
        env < (n + 1) * (n + 1),
    );
    cert.check(
        "isotope fails the simplicity test",
        !is_simple_closure(&iso),
    );
    theorem_a(&mut cert, "prop2", &g, &phi, &t);
    Ok(cert)
}
