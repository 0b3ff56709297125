//! Exhaustive searches over small prime fields.
//!
//! These scan every candidate and serve as finite oracles for the exact
//! criteria elsewhere in the crate. All scans are in lexicographic order
//! (first coordinate most significant), so results are reproducible.

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::exactmath::Matrix;

/// Largest dimension accepted by [`ideal_search_exhaustive`].
pub const MAX_IDEAL_SEARCH_DIM: usize = 4;
const MAX_IDEAL_SEARCH_P: u64 = 7;
const MAX_ISO_SEARCH_DIM: usize = 3;
const MAX_ISO_SEARCH_P: u64 = 5;

/// Structure tensor reduced to raw residues for tight enumeration loops.
#[derive(Clone, Debug)]
pub(crate) struct FpTable {
    pub p: u64,
    pub n: usize,
    t: Vec<u64>,
}

impl FpTable {
    pub fn new(a: &Algebra) -> Result<Self> {
        let p = a
            .field()
            .modulus()
            .ok_or_else(|| Error::InvalidParams("exhaustive search needs a prime field".into()))?;
        Ok(FpTable {
            p,
            n: a.dim(),
            t: a.tensor()
                .iter()
                .map(|c| c.residue().expect("prime field"))
                .collect(),
        })
    }

    pub fn mul_into(&self, a: &[u64], b: &[u64], out: &mut [u64]) {
        let (n, p) = (self.n, self.p);
        out.iter_mut().for_each(|o| *o = 0);
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let ab = ai * bj % p;
                let row = &self.t[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, &c) in out.iter_mut().zip(row) {
                    *o = (*o + ab * c) % p;
                }
            }
        }
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        let n = self.n;
        &self.t[(i * n + j) * n..(i * n + j + 1) * n]
    }
}

/// Steps `v` to the next vector in lexicographic order; `false` on wrap-around.
pub(crate) fn next_vector(v: &mut [u64], p: u64) -> bool {
    for x in v.iter_mut().rev() {
        *x += 1;
        if *x < p {
            return true;
        }
        *x = 0;
    }
    false
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::exactmath::pow_mod(a, p - 2, p)
}

/// Rank of a list of residue vectors.
pub(crate) fn rank_mod(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// All proper nonzero two-sided ideals of an algebra over `F_p`, each given
/// by its reduced echelon basis.
///
/// Every subspace of dimension `1..n-1` is enumerated through its reduced row
/// echelon form and tested for `A W ⊆ W` and `W A ⊆ W`. Limited to `n <= 4`
/// and `p <= 7`.
pub fn ideal_search_exhaustive(a: &Algebra) -> Result<Vec<Vec<Element>>> {
    let table = FpTable::new(a)?;
    let (n, p) = (table.n, table.p);
    if n > MAX_IDEAL_SEARCH_DIM || p > MAX_IDEAL_SEARCH_P {
        return Err(Error::SearchBudgetExceeded(format!(
            "ideal search is limited to n <= {MAX_IDEAL_SEARCH_DIM}, p <= {MAX_IDEAL_SEARCH_P} (got n = {n}, p = {p})"
        )));
    }
    let mut found = Vec::new();
    for d in 1..n {
        for pivots in combinations(n, d) {
            // free slots: (row, col) right of the row's pivot and not a pivot column
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &c)| {
                    (c + 1..n)
                        .filter(|j| !pivots.contains(j))
                        .map(move |j| (r, j))
                })
                .collect();
            let mut values = vec![0u64; free.len()];
            loop {
                let mut rows = vec![vec![0u64; n]; d];
                for (r, &c) in pivots.iter().enumerate() {
                    rows[r][c] = 1;
                }
                for (&(r, j), &v) in free.iter().zip(&values) {
                    rows[r][j] = v;
                }
                if is_ideal(&table, &rows, &pivots) {
                    let f = a.field();
                    found.push(
                        rows.iter()
                            .map(|r| {
                                a.element(r.iter().map(|&x| f.residue(x)).collect())
                                    .expect("n coordinates")
                            })
                            .collect(),
                    );
                }
                if !next_vector(&mut values, p) {
                    break;
                }
            }
        }
    }
    Ok(found)
}

fn is_ideal(table: &FpTable, rows: &[Vec<u64>], pivots: &[usize]) -> bool {
    let (n, p) = (table.n, table.p);
    let mut basis = vec![0u64; n];
    let mut prod = vec![0u64; n];
    let contains = |v: &[u64]| {
        let mut r = v.to_vec();
        for (row, &c) in rows.iter().zip(pivots) {
            let f = r[c];
            if f != 0 {
                for (x, y) in r.iter_mut().zip(row) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        r.iter().all(|&x| x == 0)
    };
    for w in rows {
        for i in 0..n {
            basis.iter_mut().for_each(|x| *x = 0);
            basis[i] = 1;
            table.mul_into(&basis, w, &mut prod);
            if !contains(&prod) {
                return false;
            }
            table.mul_into(w, &basis, &mut prod);
            if !contains(&prod) {
                return false;
            }
        }
    }
    true
}

fn combinations(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, d, &mut Vec::new(), &mut out);
    out
}

/// Lexicographically first isomorphism `a -> b` over `F_p`, if any.
///
/// Candidate matrices are ordered by their row-major entry sequence. The
/// scan assigns rows one at a time and discards a prefix as soon as the rows
/// become dependent or some product `e_i e_j` whose image is already
/// determined fails to match, so the first surviving full matrix is the
/// lexicographically first isomorphism. Limited to `n <= 3`, `p <= 5`.
pub fn isomorphism_search(a: &Algebra, b: &Algebra) -> Result<Option<Matrix>> {
    a.field().check(&b.field())?;
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    let ta = FpTable::new(a)?;
    let tb = FpTable::new(b)?;
    let (n, p) = (ta.n, ta.p);
    if n > MAX_ISO_SEARCH_DIM || p > MAX_ISO_SEARCH_P {
        return Err(Error::SearchBudgetExceeded(format!(
            "isomorphism search is limited to n <= {MAX_ISO_SEARCH_DIM}, p <= {MAX_ISO_SEARCH_P} (got n = {n}, p = {p})"
        )));
    }
    // pairs (i, j) become checkable once rows i, j and every row in the
    // support of e_i e_j are assigned
    let mut checks_at: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            let support_max = ta
                .basis_product(i, j)
                .iter()
                .rposition(|&c| c != 0)
                .unwrap_or(0);
            checks_at[i.max(j).max(support_max)].push((i, j));
        }
    }
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let found = search_rows(&ta, &tb, &checks_at, &mut rows);
    Ok(found.map(|rows| {
        let f = a.field();
        Matrix::from_rows(
            f,
            rows.iter()
                .map(|r| r.iter().map(|&x| f.residue(x)).collect())
                .collect(),
        )
        .expect("square")
    }))
}

fn search_rows(
    ta: &FpTable,
    tb: &FpTable,
    checks_at: &[Vec<(usize, usize)>],
    rows: &mut Vec<Vec<u64>>,
) -> Option<Vec<Vec<u64>>> {
    let (n, p) = (ta.n, ta.p);
    let depth = rows.len();
    if depth == n {
        return Some(rows.clone());
    }
    let mut v = vec![0u64; n];
    let mut prod = vec![0u64; n];
    loop {
        rows.push(v.clone());
        if rank_mod(rows, p) == depth + 1 {
            let ok = checks_at[depth].iter().all(|&(i, j)| {
                // image of e_i e_j under the partial map
                let mut lhs = vec![0u64; n];
                for (k, &c) in ta.basis_product(i, j).iter().enumerate() {
                    if c != 0 {
                        for (l, &r) in lhs.iter_mut().zip(&rows[k]) {
                            *l = (*l + c * r) % p;
                        }
                    }
                }
                tb.mul_into(&rows[i], &rows[j], &mut prod);
                lhs == prod
            });
            if ok {
                if let Some(found) = search_rows(ta, tb, checks_at, rows) {
                    return Some(found);
                }
            }
        }
        rows.pop();
        if !next_vector(&mut v, p) {
            return None;
        }
    }
}
