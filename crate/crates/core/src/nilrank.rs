//! Nil elements of index 2 and the nil-rank.
//!
//! A nonzero `a` with `a^2 = 0` is a nil element of index 2. The nil-rank is
//! the largest number of linearly independent such elements, i.e. the
//! dimension of the span of the nil set.

use serde::Serialize;

use crate::algebra::{next_vector, Algebra, Element, FpTable};
use crate::catalog::cabg;
use crate::error::{Error, Result};
use crate::exactmath::{Field, Scalar, Span};

/// Upper bound on `p^n` for brute-force enumeration.
pub const NIL_SEARCH_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NilMethod {
    /// Closed form for the `C(α, β, γ)` family.
    ExactCFamily,
    /// Enumeration of all elements over `F_p`.
    BruteForceFp,
}

#[derive(Clone, Debug)]
pub struct NilReport {
    pub rank: usize,
    /// Linearly independent nil elements, `rank` of them.
    pub witnesses: Vec<Element>,
    pub method: NilMethod,
    /// Set when only the ground field's points were examined, so nil
    /// elements defined over an extension could be missed.
    pub closure_caveat: bool,
}

pub fn is_nil_index2(a: &Element) -> bool {
    !a.is_zero() && a.square().is_zero()
}

/// Every nonzero `a` with `a^2 = 0`, in lexicographic coordinate order.
pub fn nil_set_bruteforce(a: &Algebra) -> Result<Vec<Element>> {
    let table = FpTable::new(a)?;
    let (n, p) = (table.n, table.p);
    let total = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > NIL_SEARCH_BUDGET as u128 {
        return Err(Error::SearchBudgetExceeded(format!(
            "p^n = {p}^{n} exceeds {NIL_SEARCH_BUDGET}"
        )));
    }
    let field = a.field();
    let mut v = vec![0u64; n];
    let mut sq = vec![0u64; n];
    let mut out = Vec::new();
    while next_vector(&mut v, p) {
        table.mul_into(&v, &v, &mut sq);
        if sq.iter().all(|&x| x == 0) {
            out.push(
                a.element(v.iter().map(|&x| field.residue(x)).collect())
                    .expect("n coordinates"),
            );
        }
    }
    Ok(out)
}

/// Nil-rank by enumeration over `F_p`; witnesses are picked greedily in
/// scan order.
pub fn nil_rank_bruteforce(a: &Algebra) -> Result<NilReport> {
    let nils = nil_set_bruteforce(a)?;
    let mut span = Span::new(a.field(), a.dim());
    let mut witnesses = Vec::new();
    for e in nils {
        if span.insert(e.coords()) {
            witnesses.push(e);
            if span.dim() == a.dim() {
                break;
            }
        }
    }
    Ok(NilReport {
        rank: witnesses.len(),
        witnesses,
        method: NilMethod::BruteForceFp,
        closure_caveat: true,
    })
}

/// Brute-force nil-rank of a rational table reduced modulo `p`.
pub fn nil_rank_mod_p(a: &Algebra, p: u64) -> Result<NilReport> {
    nil_rank_bruteforce(&a.over_field(Field::prime(p)?)?)
}

/// Nil-rank of `C(α, β, γ)` for `α ≠ 0`.
///
/// Writing a nil element as `λ1 + ξx + ηy`, the square vanishes iff
/// `λ^2 + 2αξη = 0`, `λξ + βξη = 0` and `λη + γξη = 0`. With `λ = 0` this
/// forces `ξη = 0`, so those solutions lie on the lines `Fx` and `Fy`. With
/// `λ ≠ 0` both `ξ` and `η` are nonzero, hence `λ = -βη = -γξ`, and the
/// first equation becomes `λ^2 (βγ + 2α) / (βγ) = 0`. So a third
/// independent nil element exists iff `βγ + 2α = 0`, and then
/// `1 - γ^{-1} x - β^{-1} y` is one.
pub fn nil_rank_exact_c(alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> Result<NilReport> {
    if alpha.is_zero() {
        return Err(Error::DomainError(
            "C(α, β, γ) with α = 0 is not simple; the closed form needs α ≠ 0".into(),
        ));
    }
    let field = alpha.field();
    let a = cabg(field, alpha, beta, gamma)?;
    let mut witnesses = vec![a.basis(1), a.basis(2)];
    let two = field.int(2);
    if (beta * gamma + &two * alpha).is_zero() {
        // βγ = -2α ≠ 0, so both inverses exist
        let third = a.element(vec![field.one(), -gamma.inv()?, -beta.inv()?])?;
        debug_assert!(is_nil_index2(&third));
        witnesses.push(third);
    }
    Ok(NilReport {
        rank: witnesses.len(),
        witnesses,
        method: NilMethod::ExactCFamily,
        closure_caveat: false,
    })
}
