//! Gaussian elimination of contractible summands.

use super::{trim, PerfectComplex};
use crate::algebra::AlgebraBasis;
use crate::field::Field;

/// Finds a differential entry whose scalar part is invertible.
fn find_unit<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> Option<(usize, usize, usize)> {
    let f = a.field();
    for (k, d) in x.diffs.iter().enumerate() {
        for (r, &u) in d.rows.iter().enumerate() {
            for (c, &w) in d.cols.iter().enumerate() {
                if u == w && !f.is_zero(&d.get(r, c)[u]) {
                    return Some((k, r, c));
                }
            }
        }
    }
    None
}

/// Removes one contractible summand `A e_u -> A e_u` at diff `k`, entry `(r, c)`.
fn eliminate<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    k: usize,
    r: usize,
    c: usize,
) -> PerfectComplex<F::Elem> {
    let d = &x.diffs[k];
    let u = d.rows[r];
    let phi_inv = a.local_inverse(d.get(r, c), u).expect("scalar part is nonzero");
    let keep_rows: Vec<usize> = (0..d.n_rows()).filter(|&i| i != r).collect();
    let keep_cols: Vec<usize> = (0..d.n_cols()).filter(|&j| j != c).collect();
    let mut nd = d.select(&keep_rows, &keep_cols);
    // D'[x][y] = D[x][y] - D[x][c] phi^{-1} D[r][y]
    for (i, &xr) in keep_rows.iter().enumerate() {
        let left = a.mul(d.get(xr, c), &phi_inv);
        if a.is_zero(&left) {
            continue;
        }
        for (j, &yc) in keep_cols.iter().enumerate() {
            let corr = a.mul(&left, d.get(r, yc));
            if !a.is_zero(&corr) {
                let v = a.sub(nd.get(i, j), &corr);
                nd.set(i, j, v);
            }
        }
    }
    let mut out = x.clone();
    out.diffs[k] = nd;
    out.terms[k] = keep_rows.iter().map(|&i| d.rows[i]).collect();
    out.terms[k + 1] = keep_cols.iter().map(|&j| d.cols[j]).collect();
    if k > 0 {
        let prev = &x.diffs[k - 1];
        let rows: Vec<usize> = (0..prev.n_rows()).collect();
        out.diffs[k - 1] = prev.select(&rows, &keep_rows);
    }
    if k + 1 < x.diffs.len() {
        let next = &x.diffs[k + 1];
        let cols: Vec<usize> = (0..next.n_cols()).collect();
        out.diffs[k + 1] = next.select(&keep_cols, &cols);
    }
    out
}

/// The minimal complex homotopy equivalent to `x`, and whether `x` was
/// already minimal. Zero terms at both ends are trimmed.
pub fn minimize<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> (PerfectComplex<F::Elem>, bool) {
    let mut cur = x.clone();
    let mut was_minimal = true;
    while let Some((k, r, c)) = find_unit(a, &cur) {
        was_minimal = false;
        cur = eliminate(a, &cur, k, r, c);
    }
    (trim(a, &cur), was_minimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::tests::{ex211, ex211_x};
    use crate::complexes::{direct_sum, hom_k_dim, stalk, two_term, validate};

    #[test]
    fn identity_complex_vanishes() {
        let a = ex211();
        let id = two_term(a.amat_identity(&[1]), 0);
        let (m, was) = minimize(&a, &id);
        assert!(m.is_zero());
        assert!(!was);
    }

    #[test]
    fn strips_contractible_summand() {
        let a = ex211();
        let x = ex211_x(&a);
        let cont = two_term(a.amat_identity(&[1]), -1);
        let s = direct_sum(&a, &x, &cont);
        validate(&a, &s).unwrap();
        let (m, _) = minimize(&a, &s);
        assert_eq!(m, x);
        let (again, was) = minimize(&a, &m);
        assert!(was);
        assert_eq!(again, m);
        let px = stalk(&a, &[0], 0);
        assert_eq!(hom_k_dim(&a, &s, &px, 0), hom_k_dim(&a, &m, &px, 0));
    }
}
