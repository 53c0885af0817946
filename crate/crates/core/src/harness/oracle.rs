use std::collections::BTreeMap;

use crate::ideal::{Ideal, CANONICAL_ORDER};
use crate::linalg::DenseMatrix;
use crate::ring::Monomial;
use crate::ring::Polynomial;

/// The canonical basis is reduced, its S-polynomials reduce to zero, and
/// every input generator reduces to zero against it.
pub fn groebner_sound(ideal: &Ideal) -> bool {
    let gb = ideal.canonical_basis();
    gb.is_reduced()
        && gb.s_pairs_reduce_to_zero()
        && ideal
            .generators()
            .iter()
            .all(|g| gb.normal_form(g).is_zero())
}

fn monomials_of_degree_at_most(n: usize, d: u32) -> Vec<Monomial> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, d, &mut vec![0; n], &mut out);
    out
}

/// Whether `f = Σ h_i g_i` with every `h_i g_i` of total degree at most
/// `bound`, decided by linear algebra on the Macaulay matrix.
///
/// Sound for non-membership at every bound. For generators homogeneous in
/// the standard grading and homogeneous `f`, the bound `deg f` is exact.
pub fn macaulay_membership(f: &Polynomial, ideal: &Ideal, bound: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut rows: Vec<Polynomial> = Vec::new();
    for g in ideal.generators().iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree().unwrap();
        if dg > bound {
            continue;
        }
        for m in monomials_of_degree_at_most(n, bound - dg) {
            rows.push(
                g.with_order(CANONICAL_ORDER)
                    .mul_term(&ring.field().one(), &m),
            );
        }
    }
    let mut columns: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in rows.iter().chain(std::iter::once(f)) {
        for t in p.terms() {
            let next = columns.len();
            columns.entry(t.mono.clone()).or_insert(next);
        }
    }
    let to_row = |p: &Polynomial| {
        let mut v = vec![ring.field().zero(); columns.len()];
        for t in p.terms() {
            v[columns[&t.mono]] = t.coeff.clone();
        }
        v
    };
    let mut a = DenseMatrix::zeros(ring.field(), 0, columns.len());
    for r in &rows {
        a.push_row(to_row(r));
    }
    a.row_space_contains(&to_row(f))
}
