use proptest::prelude::*;

use super::*;
use crate::catalog::{c2, c3, cabg_ints, gn, j2, standard_catalog};
use crate::exactmath::Span;

fn q() -> Field {
    Field::rational()
}

fn fp(p: u64) -> Field {
    Field::prime(p).unwrap()
}

/// Envelope dimension by layers: words of length `k + 1` are generators
/// times words of length `k`, and the rank of all words so far is
/// recomputed from scratch until it stops growing.
fn envelope_by_layers(a: &Algebra) -> usize {
    let n = a.dim();
    let gens: Vec<Matrix> = a
        .basis_elements()
        .iter()
        .flat_map(|e| {
            [
                a.left_mult_matrix(e).unwrap(),
                a.right_mult_matrix(e).unwrap(),
            ]
        })
        .collect();
    let mut words = gens.clone();
    let mut layer = gens.clone();
    let rank_of = |ws: &[Matrix]| {
        Matrix::from_rows(a.field(), ws.iter().map(|m| m.entries().to_vec()).collect())
            .unwrap()
            .rank()
    };
    let mut rank = rank_of(&words);
    for _ in 0..n * n {
        let next: Vec<Matrix> = gens
            .iter()
            .flat_map(|g| layer.iter().map(move |w| g.mul(w).unwrap()))
            .collect();
        words.extend(next.iter().cloned());
        let r = rank_of(&words);
        if r == rank {
            break;
        }
        rank = r;
        // keep the layer small: only an independent subset matters
        let mut span = Span::new(a.field(), n * n);
        layer = next
            .into_iter()
            .filter(|m| span.insert(m.entries()))
            .collect();
    }
    rank
}

#[test]
fn products() {
    let a = j2(q());
    assert_eq!(a.basis(1).mul(&a.basis(2)).unwrap(), a.basis(0));
    let b = c2(q());
    assert_eq!(b.basis(1).mul(&b.basis(2)).unwrap(), b.basis(1));
    assert_eq!(b.basis(0).square(), b.basis(1));
    let c = c3(q());
    assert_eq!(c.basis(0).mul(&c.basis(1)).unwrap(), c.basis(2));
    assert_eq!(a.basis(1).mul(&b.basis(1)), Err(Error::AlgebraMismatch));
}

#[test]
fn multiplication_operators() {
    let a = j2(q());
    let r = a.right_mult_matrix(&a.element_ints(&[1, 1, 0])).unwrap();
    assert_eq!(
        r,
        Matrix::from_ints(q(), &[&[1, 1, 0], &[0, 1, 0], &[1, 0, 1]])
    );
    let b = Algebra::builder(q(), 2)
        .product_ints(0, 1, &[1, 0])
        .build()
        .unwrap();
    let e2 = b.basis(1);
    assert_eq!(
        b.right_mult_matrix(&e2).unwrap(),
        Matrix::from_ints(q(), &[&[1, 0], &[0, 0]])
    );
    assert_eq!(b.left_mult_matrix(&e2).unwrap(), Matrix::zero(q(), 2, 2));
}

#[test]
fn units() {
    assert_eq!(c2(q()).find_unit(), None);
    assert_eq!(c3(q()).find_unit(), None);
    let c = cabg_ints(q(), 2, 1, 4);
    assert_eq!(c.find_unit(), Some(c.basis(0)));
    let half_unital = Algebra::builder(q(), 2)
        .product_ints(0, 0, &[1, 0])
        .product_ints(0, 1, &[0, 1])
        .build()
        .unwrap();
    assert_eq!(half_unital.find_unit(), None);
}

#[test]
fn commutativity() {
    assert!(j2(q()).is_commutative());
    assert!(gn(q(), 3).unwrap().is_commutative());
    let b = Algebra::builder(q(), 2)
        .product_ints(0, 1, &[1, 0])
        .build()
        .unwrap();
    assert!(!b.is_commutative());
    assert_eq!(b.is_jordan(), Ok(false));
}

#[test]
fn associators() {
    let c = cabg_ints(q(), 1, 1, 0);
    let (x, y) = (c.basis(1), c.basis(2));
    let xy = x.mul(&y).unwrap();
    assert_eq!(c.associator(&xy, &x, &y).unwrap(), -&x);
    let a = j2(q());
    let (x, y) = (a.basis(1), a.basis(2));
    assert!(a.associator(&x.square(), &y, &x).unwrap().is_zero());
    let t = a.element_ints(&[1, 2, 3]);
    assert!(a.associator(&t.square(), &y, &t).unwrap().is_zero());
}

#[test]
fn jordan_identity() {
    assert_eq!(j2(q()).is_jordan(), Ok(true));
    assert_eq!(cabg_ints(q(), 1, 0, 0).is_jordan(), Ok(true));
    assert_eq!(cabg_ints(q(), 1, 1, 0).is_jordan(), Ok(false));
    assert_eq!(cabg_ints(fp(5), 1, 1, 0).is_jordan(), Ok(false));
    assert!(matches!(
        j2(fp(3)).is_jordan(),
        Err(Error::UnsupportedCharacteristic(3, _))
    ));
}

#[test]
fn envelope_values() {
    assert_eq!(envelope_dimension(&j2(q())), 9);
    assert_eq!(envelope_dimension(&gn(q(), 2).unwrap()), 9);
    let zero = Algebra::builder(q(), 2).build().unwrap();
    assert_eq!(envelope_dimension(&zero), 0);
    assert!(!is_simple_closure(&zero));
    assert!(is_simple_closure(&c3(q())));
    assert!(!is_simple_closure(&cabg_ints(q(), 0, 1, 1)));
    for n in 2..=5 {
        assert_eq!(envelope_dimension(&gn(q(), n).unwrap()), (n + 1) * (n + 1));
    }
}

#[test]
fn envelope_matches_layer_oracle() {
    for f in [q(), fp(3), fp(5)] {
        for (name, a) in standard_catalog(f, 4) {
            assert_eq!(
                envelope_dimension(&a),
                envelope_by_layers(&a),
                "{name} over {f}"
            );
        }
    }
}

#[test]
fn ideal_search() {
    let a = cabg_ints(fp(5), 0, 1, 1);
    let ideals = ideal_search_exhaustive(&a).unwrap();
    let xy = vec![a.basis(1), a.basis(2)];
    assert!(ideals.contains(&xy));
    assert!(ideal_search_exhaustive(&j2(fp(5))).unwrap().is_empty());
    assert!(ideal_search_exhaustive(&gn(fp(3), 3).unwrap())
        .unwrap()
        .is_empty());
    assert!(matches!(
        ideal_search_exhaustive(&gn(fp(3), 4).unwrap()),
        Err(Error::SearchBudgetExceeded(_))
    ));
    assert!(ideal_search_exhaustive(&j2(q())).is_err());
}

#[test]
fn isomorphisms() {
    let f = fp(3);
    let j = j2(f);
    assert_eq!(
        isomorphism_search(&cabg_ints(f, 1, 1, 0), &j).unwrap(),
        None
    );
    let found = isomorphism_search(&j, &j).unwrap().unwrap();
    assert!(verify_isomorphism(&j, &j, &found));
    // the unit must go to the unit
    assert_eq!(found.row(0), j.basis(0).coords());
    let swapped = cabg_ints(f, 1, 0, 1);
    let xi = isomorphism_search(&cabg_ints(f, 1, 1, 0), &swapped)
        .unwrap()
        .unwrap();
    assert!(verify_isomorphism(&cabg_ints(f, 1, 1, 0), &swapped, &xi));
    assert!(verify_isomorphism(&j, &j, &Matrix::identity(f, 3)));
    assert!(!verify_isomorphism(
        &j,
        &cabg_ints(f, 1, 1, 0),
        &Matrix::identity(f, 3)
    ));
}

#[test]
fn basis_changes() {
    let a = c3(q());
    let p = a.relabel(&[1, 2, 0]).unwrap();
    assert_eq!(p, a);
    let j = j2(q());
    let b = Matrix::from_ints(q(), &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]);
    assert_eq!(j.change_basis(&b).unwrap(), cabg_ints(q(), 2, 0, 0));
    assert!(verify_isomorphism(&cabg_ints(q(), 2, 0, 0), &j, &b));
}

#[test]
fn reduction_mod_p() {
    let a = cabg_ints(q(), -2, -2, -2);
    let r = a.over_field(fp(5)).unwrap();
    assert_eq!(r, cabg_ints(fp(5), -2, -2, -2));
    assert!(r.over_field(q()).is_err());
}

#[test]
fn element_display() {
    let a = j2(q());
    assert_eq!(a.element_ints(&[1, 2, 0]).to_string(), "1 + 2x");
    assert_eq!(c3(q()).element_ints(&[0, -2, -2]).to_string(), "-2y - 2z");
    assert_eq!(a.zero().to_string(), "0");
}

fn small_coords(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-4i64..=4, n)
}

proptest! {
    #[test]
    fn commutative_left_equals_right(idx in 0usize..12, v in small_coords(4)) {
        let cat = standard_catalog(q(), 4);
        let (_, a) = &cat[idx % cat.len()];
        prop_assume!(a.is_commutative());
        let e = a.element_ints(&v[..a.dim()]);
        prop_assert_eq!(a.left_mult_matrix(&e).unwrap(), a.right_mult_matrix(&e).unwrap());
    }

    #[test]
    fn right_operator_computes_products(idx in 0usize..12, u in small_coords(4), v in small_coords(4)) {
        let cat = standard_catalog(q(), 4);
        let (_, a) = &cat[idx % cat.len()];
        let (x, y) = (a.element_ints(&u[..a.dim()]), a.element_ints(&v[..a.dim()]));
        let via_r = a.right_mult_matrix(&y).unwrap().apply(x.coords()).unwrap();
        let via_l = a.left_mult_matrix(&x).unwrap().apply(y.coords()).unwrap();
        let prod = x.mul(&y).unwrap();
        prop_assert_eq!(&via_r, prod.coords());
        prop_assert_eq!(&via_l, prod.coords());
    }

    #[test]
    fn change_basis_is_isomorphism(idx in 0usize..12, seed in any::<u64>()) {
        let cat = standard_catalog(fp(5), 4);
        let (_, a) = &cat[idx % cat.len()];
        let b = Matrix::random_invertible(fp(5), a.dim(), seed);
        let a2 = a.change_basis(&b).unwrap();
        prop_assert!(verify_isomorphism(&a2, a, &b));
    }
}
