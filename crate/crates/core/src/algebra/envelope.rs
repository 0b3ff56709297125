//! The multiplication envelope and the simplicity test built on it.
//!
//! Subspaces invariant under every `L_{e_i}` and `R_{e_i}` are exactly the
//! two-sided ideals. By Burnside's theorem the associative algebra generated
//! by these operators has no invariant subspace over the algebraic closure
//! iff it is the full matrix algebra, so simplicity over the closure comes
//! down to a dimension count.

use super::Algebra;
use crate::exactmath::{Matrix, Span};

/// Dimension of the associative (not necessarily unital) algebra generated
/// by all left and right multiplications by basis vectors.
pub fn envelope_dimension(a: &Algebra) -> usize {
    let n = a.dim();
    let field = a.field();
    let generators: Vec<Matrix> = a
        .basis_elements()
        .iter()
        .flat_map(|e| {
            [
                a.left_mult_matrix(e).expect("own element"),
                a.right_mult_matrix(e).expect("own element"),
            ]
        })
        .filter(|m| !m.is_zero())
        .collect();

    let mut span = Span::new(field, n * n);
    let mut frontier: Vec<Matrix> = Vec::new();
    for g in &generators {
        if span.insert(g.entries()) {
            frontier.push(g.clone());
        }
    }
    // Every word in the generators is a shorter word times one generator.
    while let Some(b) = frontier.pop() {
        if span.dim() == n * n {
            break;
        }
        for g in &generators {
            let w = b.mul(g).expect("square matrices of equal size");
            if span.insert(w.entries()) {
                frontier.push(w);
            }
        }
    }
    span.dim()
}

/// Simplicity after base change to the algebraic closure: nonzero
/// multiplication and a full multiplication envelope.
pub fn is_simple_closure(a: &Algebra) -> bool {
    let n = a.dim();
    !a.has_zero_multiplication() && envelope_dimension(a) == n * n
}
