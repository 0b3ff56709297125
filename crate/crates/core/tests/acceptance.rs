//! The acceptance gate: every criterion runs at zero tolerance and prints one
//! PASS/FAIL line. Run with `cargo test --test acceptance -- --nocapture`.

use std::panic::{catch_unwind, AssertUnwindSafe};

use isotopes::algebra::{
    envelope_dimension, ideal_search_exhaustive, is_simple_closure, isomorphism_search,
    verify_isomorphism, Algebra,
};
use isotopes::catalog::{
    c2, c3, cabg_ints, gn, j2, standard_catalog, witness_lemma10, witness_lemma11, witness_lemma6,
    witness_prop2, witness_theorem1, witness_theorem2, Certificate,
};
use isotopes::exactmath::{Field, Matrix, Scalar};
use isotopes::isotopy::{
    express_as_right_mult, principal_isotope, r_mult_report, standard_isotope,
};
use isotopes::nilrank::{nil_rank_bruteforce, nil_rank_exact_c};
use isotopes::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q() -> Field {
    Field::rational()
}

fn fp(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    q().ratio(rng.gen_range(-30..=30), rng.gen_range(1..=12))
        .unwrap()
}

fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = random_rational(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

fn verified(c: &Certificate) -> Result<(), String> {
    ensure(c.verdict(), || format!("certificate failed:\n{c}"))
}

fn criterion_1() -> Outcome {
    let a = j2(q());
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let (al, be) = (random_rational(&mut rng), random_rational(&mut rng));
        let u = a.element(vec![q().one(), al.clone(), be.clone()]).unwrap();
        let det = r_mult_report(&u).determinant;
        let expected = &q().one() - &(&(&q().int(2) * &al) * &be);
        ensure(det == expected, || {
            format!("det R_(1,{al},{be}) = {det}, expected {expected}")
        })?;
        let v = a.element(vec![q().zero(), al.clone(), be.clone()]).unwrap();
        ensure(!r_mult_report(&v).invertible, || {
            format!("(0,{al},{be}) reported invertible")
        })?;
    }
    Ok("100 random (α, β): det R_(1,α,β) = 1 - 2αβ, (0,α,β) never R-invertible".into())
}

fn criterion_2() -> Outcome {
    let c = c2(q());
    let ra = c.right_mult_matrix(&c.basis(0)).unwrap();
    let iso = standard_isotope(&c, &ra).unwrap();
    let relabeled = iso.relabel(&[1, 0, 2]).unwrap();
    ensure(relabeled.tensor() == j2(q()).tensor(), || {
        "tensor differs from J2".into()
    })?;
    verified(&witness_lemma6(q()))?;
    Ok("C2^(R_a,R_a) with (1, x, y) := (b, a, c) has exactly the J2 tensor".into())
}

fn criterion_3() -> Outcome {
    let j = j2(q());
    let c = j.element_ints(&[1, 1, 0]);
    let rc = j.right_mult_matrix(&c).unwrap();
    ensure(
        rc == Matrix::from_ints(q(), &[&[1, 1, 0], &[0, 1, 0], &[1, 0, 1]]),
        || format!("R_(1+x) = {rc}"),
    )?;
    let phi = rc.inverse().unwrap();
    ensure(
        phi == Matrix::from_ints(q(), &[&[1, -1, 0], &[0, 1, 0], &[-1, 1, 1]]),
        || format!("R_(1+x)^-1 = {phi}"),
    )?;
    let iso = standard_isotope(&j, &phi).unwrap();
    let e = iso.element_ints(&[1, 2, 0]);
    ensure(iso.find_unit().as_ref() == Some(&e), || {
        format!("unit {:?}", iso.find_unit())
    })?;
    let half = q().ratio(1, 2).unwrap();
    let a1 = iso.element_ints(&[0, -2, 0]);
    let b1 = iso.element(vec![-half.clone(), q().zero(), -half]).unwrap();
    let m = Matrix::from_rows(
        q(),
        vec![
            e.coords().to_vec(),
            a1.coords().to_vec(),
            b1.coords().to_vec(),
        ],
    )
    .unwrap();
    let c110 = cabg_ints(q(), 1, 1, 0);
    ensure(verify_isomorphism(&c110, &iso, &m), || {
        "(e, -2x, -(1/2)(1+y)) is not a C(1,1,0) basis".into()
    })?;
    ensure(a1.mul(&b1).unwrap() == &e + &a1, || {
        "a' * b' != e + a'".into()
    })?;
    ensure(cabg_ints(q(), 1, 0, 0).is_jordan() == Ok(true), || {
        "C(1,0,0) not Jordan".into()
    })?;
    ensure(c110.is_jordan() == Ok(false), || "C(1,1,0) Jordan".into())?;
    let (x, y) = (c110.basis(1), c110.basis(2));
    let assoc = c110.associator(&x.mul(&y).unwrap(), &x, &y).unwrap();
    ensure(assoc == -&x, || format!("(xy, x, y) = {assoc}"))?;
    let f3 = fp(3);
    let found = isomorphism_search(&cabg_ints(f3, 1, 1, 0), &cabg_ints(f3, 1, 0, 0)).unwrap();
    ensure(found.is_none(), || "F_3 isomorphism found".into())?;
    verified(&witness_lemma10(q()))?;
    Ok("R_(1+x) and its inverse verbatim, unit 1 + 2x, C(1,1,0) basis, Jordan split, (xy,x,y) = -x, no F_3 isomorphism".into())
}

fn euler_non_residue(a: u64, p: u64) -> bool {
    let mut r = 1u64;
    for _ in 0..(p - 1) / 2 {
        r = r * a % p;
    }
    r == p - 1
}

fn criterion_4() -> Outcome {
    for (n, d) in [(1, 1), (2, 1), (3, 1), (-1, 1), (1, 2), (-1, 2), (5, 1)] {
        let rho = q().ratio(n, d).unwrap();
        let cert = witness_lemma11(&rho).map_err(|e| format!("ρ = {rho}: {e}"))?;
        verified(&cert)?;
        // γ = ρ/(2ρ+4), δ = (1-2γ)^-1 recomputed here
        let gamma = rho.div(&(&(&q().int(2) * &rho) + &q().int(4))).unwrap();
        let delta = (&q().one() - &(&q().int(2) * &gamma)).inv().unwrap();
        let four_gd = &(&q().int(4) * &gamma) * &delta;
        ensure(four_gd == rho, || format!("4γδ = {four_gd} for ρ = {rho}"))?;
        ensure(
            cert.value("recovered rho") == Some(rho.to_string().as_str()),
            || {
                format!(
                    "certificate recovered {:?} for ρ = {rho}",
                    cert.value("recovered rho")
                )
            },
        )?;
    }
    let f = fp(5);
    let (mut chains, mut roots) = (0, 0);
    for a in 1..5u64 {
        for b in 0..5u64 {
            for g in 0..5u64 {
                if (b * g + 2 * a) % 5 == 0 {
                    continue;
                }
                let (al, be, ga) = (f.residue(a), f.residue(b), f.residue(g));
                match witness_theorem1(&al, &be, &ga) {
                    Ok(cert) => {
                        verified(&cert)?;
                        ensure(!(b == 0 && g == 0 && euler_non_residue(a, 5)), || {
                            format!("C({a},0,0) succeeded although {a} is a non-residue")
                        })?;
                        chains += 1;
                    }
                    Err(Error::SquareRootUnavailable(_)) => {
                        ensure(b == 0 && g == 0 && euler_non_residue(a, 5), || {
                            format!("unexpected square-root failure at ({a},{b},{g})")
                        })?;
                        roots += 1;
                    }
                    Err(e) => return Err(format!("({a},{b},{g}): {e}")),
                }
            }
        }
    }
    Ok(format!(
        "lemma11 for 7 values of ρ recovers 4γδ = ρ; F_5 sweep: {chains} verified chains, {roots} non-residue square-root failures"
    ))
}

fn criterion_5() -> Outcome {
    let a = c3(q());
    let c = a.element_ints(&[1, 1, 1]);
    let phi = a.right_mult_matrix(&c).unwrap().inverse().unwrap();
    let expected = Matrix::from_ints(q(), &[&[-1, 1, 1], &[1, -1, 1], &[1, 1, -1]])
        .scale(&q().ratio(1, 2).unwrap());
    ensure(phi == expected, || format!("φ = {phi}"))?;
    let iso = standard_isotope(&a, &phi).unwrap();
    let e = iso.element_ints(&[2, 2, 2]);
    let x = iso.element_ints(&[0, -2, -2]);
    let y = iso.element_ints(&[-2, 0, -2]);
    let prod = x.mul(&y).unwrap();
    let rhs = (&(&e + &x) + &y).scale(&q().int(-2));
    ensure(prod == rhs, || format!("a * b = {prod}, expected {rhs}"))?;
    let m =
        Matrix::from_rows(q(), vec![e.into_coords(), x.into_coords(), y.into_coords()]).unwrap();
    ensure(
        verify_isomorphism(&cabg_ints(q(), -2, -2, -2), &iso, &m),
        || "not isomorphic to C(-2)".into(),
    )?;
    verified(&witness_theorem2(q()))?;
    Ok("φ = (1/2)[[-1,1,1],[1,-1,1],[1,1,-1]] exactly; C3^(φ,φ) ≅ C(-2) with a * b = -2(e + a + b)".into())
}

fn criterion_6() -> Outcome {
    let f = fp(5);
    let table: [(&str, Algebra, usize); 6] = [
        ("J2", j2(f), 2),
        ("C2", c2(f), 2),
        ("C3", c3(f), 3),
        ("C(-2)", cabg_ints(f, -2, -2, -2), 3),
        ("C(1)", cabg_ints(f, 1, 1, 1), 2),
        ("C(1,1,0)", cabg_ints(f, 1, 1, 0), 2),
    ];
    for (name, a, expected) in &table {
        let r = nil_rank_bruteforce(a).unwrap().rank;
        ensure(r == *expected, || {
            format!("{name}: nil-rank {r}, expected {expected}")
        })?;
    }
    let mut count = 0;
    for a in 1..5 {
        for b in 0..5 {
            for g in 0..5 {
                let (al, be, ga) = (f.int(a), f.int(b), f.int(g));
                let exact = nil_rank_exact_c(&al, &be, &ga).unwrap().rank;
                let brute = nil_rank_bruteforce(&cabg_ints(f, a, b, g)).unwrap().rank;
                ensure(exact == brute, || {
                    format!("C({a},{b},{g}): exact {exact}, brute {brute}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("F_5 table J2 2, C2 2, C3 3, C(-2) 3, C(1) 2, C(1,1,0) 2; exact = brute force on all {count} triples"))
}

fn criterion_7() -> Outcome {
    let f = fp(5);
    let catalog = standard_catalog(f, 4);
    for (name, a) in &catalog {
        let base = nil_rank_bruteforce(a).unwrap().rank;
        for seed in 0..200u64 {
            let phi = Matrix::random_invertible(f, a.dim(), seed);
            let iso = standard_isotope(a, &phi).unwrap();
            let r = nil_rank_bruteforce(&iso).unwrap().rank;
            ensure(r == base, || format!("{name}, seed {seed}: {r} vs {base}"))?;
        }
    }
    Ok(format!(
        "200 random φ over F_5 for each of {} catalog algebras",
        catalog.len()
    ))
}

fn criterion_8() -> Outcome {
    for n in 2..=6 {
        let g = gn(q(), n).unwrap();
        let d = envelope_dimension(&g);
        ensure(d == (n + 1) * (n + 1), || format!("G{n}: envelope {d}"))?;
        let cert = witness_prop2(n).map_err(|e| e.to_string())?;
        verified(&cert)?;
        let t = g.basis(n);
        let rt = g.right_mult_matrix(&t).unwrap();
        let iso = standard_isotope(&g, &rt.inverse().unwrap()).unwrap();
        ensure(
            iso.find_unit() == Some(t.square().transfer(&iso).unwrap()),
            || format!("G{n}: unit"),
        )?;
        ensure(!is_simple_closure(&iso), || {
            format!("G{n}: isotope passes the simplicity test")
        })?;
    }
    for n in 2..=3 {
        let ideals = ideal_search_exhaustive(&gn(fp(3), n).unwrap()).unwrap();
        ensure(ideals.is_empty(), || {
            format!("G{n} over F_3 has {} ideals", ideals.len())
        })?;
    }
    Ok("envelope (n+1)^2 for n = 2..6, no F_3 ideals for n <= 3, R_t^-1 isotopes unital with ideal Z and not simple".into())
}

fn criterion_9() -> Outcome {
    let j = j2(q());
    let phi = j
        .right_mult_matrix(&j.element_ints(&[1, 1, 0]))
        .unwrap()
        .inverse()
        .unwrap();
    ensure(express_as_right_mult(&j, &phi).is_none(), || {
        "R_(1+x)^-1 expressed".into()
    })?;
    let mut certs = vec![
        witness_lemma6(q()),
        witness_lemma10(q()),
        witness_theorem2(q()),
    ];
    for rho in [1, 2, 3, -1, 5] {
        certs.push(witness_lemma11(&q().int(rho)).unwrap());
    }
    for (a, b, g) in [(1, 1, 0), (2, 1, 4), (3, 0, 5), (1, 2, 3)] {
        certs.push(witness_theorem1(&q().int(a), &q().int(b), &q().int(g)).unwrap());
    }
    for n in 2..=6 {
        certs.push(witness_prop2(n).unwrap());
    }
    let mut count = 0;
    for cert in &certs {
        for rec in &cert.isotopes {
            let inv = rec.phi.inverse().unwrap();
            let sol = express_as_right_mult(&rec.base, &inv)
                .ok_or_else(|| format!("{}: φ^-1 not expressed", rec.label))?;
            ensure(sol.element == rec.g, || {
                format!("{}: got {}, expected {}", rec.label, sol.element, rec.g)
            })?;
            let back = rec
                .phi
                .mul(&rec.base.right_mult_matrix(&sol.element).unwrap())
                .unwrap();
            ensure(back.is_identity(), || format!("{}: φ R_g != I", rec.label))?;
            count += 1;
        }
    }
    Ok(format!(
        "R_(1+x)^-1 is no R_g in J2; g recovered with φ R_g = I for {count} witness isotopes"
    ))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let catalog = standard_catalog(q(), 4);
    let mut trivial = 0;
    for _ in 0..50 {
        let (s, t) = (
            random_nonzero_rational(&mut rng),
            random_nonzero_rational(&mut rng),
        );
        let omega = (&s * &t).inv().unwrap();
        for (name, a) in &catalog {
            let n = a.dim();
            let iso =
                principal_isotope(a, &Matrix::scalar(q(), n, &s), &Matrix::scalar(q(), n, &t))
                    .unwrap();
            let h = Matrix::scalar(q(), n, &omega);
            // ωI carries the product of A to that of A^(σI,τI); its inverse
            // (στ)I goes back
            ensure(verify_isomorphism(a, &iso, &h), || {
                format!("{name}: ωI, σ = {s}, τ = {t}")
            })?;
            ensure(verify_isomorphism(&iso, a, &h.inverse().unwrap()), || {
                format!("{name}: (στ)I")
            })?;
            if omega.is_one() {
                trivial += 1;
            }
        }
    }
    Ok(format!(
        "50 random (σ, τ) x {} catalog algebras: ωI isomorphism A -> A^(σI,τI) ({trivial} cases with ω = 1)",
        catalog.len()
    ))
}

fn criterion_11() -> Outcome {
    let mut checked = 0;
    for p in [3, 5] {
        let f = fp(p);
        for (name, a) in standard_catalog(f, 4) {
            let ideals = ideal_search_exhaustive(&a).unwrap();
            let simple = is_simple_closure(&a);
            ensure(simple == ideals.is_empty(), || {
                format!(
                    "{name} over F_{p}: simple_closure {simple}, {} ideals",
                    ideals.len()
                )
            })?;
            checked += 1;
        }
        for (b, g) in [(1, 1), (1, 0), (0, 1), (0, 0), (2, 3)] {
            let a = cabg_ints(f, 0, b, g);
            let ideals = ideal_search_exhaustive(&a).unwrap();
            ensure(!is_simple_closure(&a), || format!("C(0,{b},{g}) simple"))?;
            ensure(ideals.contains(&vec![a.basis(1), a.basis(2)]), || {
                format!("C(0,{b},{g}) over F_{p}: span{{x, y}} missing")
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} algebras over F_3 and F_5 agree; C(0,β,γ) always has the ideal span{{x, y}}"
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("1 det R_a in J2", criterion_1),
        ("2 C2 isotope is J2", criterion_2),
        ("3 C(1,1,0) vs J2", criterion_3),
        ("4 C(ρ) chains and F_5 sweep", criterion_4),
        ("5 C3 isotope is C(-2)", criterion_5),
        ("6 nil-rank table", criterion_6),
        ("7 nil-rank isotopy invariance", criterion_7),
        ("8 G_n simple, isotope not", criterion_8),
        ("9 right multiplication recovery", criterion_9),
        ("10 homothety", criterion_10),
        ("11 Burnside cross-check", criterion_11),
    ];
    let mut failed = Vec::new();
    for (label, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {label}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {label}: {why}");
                failed.push(label);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
