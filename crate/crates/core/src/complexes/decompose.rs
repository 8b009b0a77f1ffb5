//! Splitting complexes into indecomposable summands via idempotents of
//! the endomorphism ring.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::hom::{chain_maps, is_indecomposable, HomLayout};
use super::{minimize, trim, PerfectComplex};
use crate::algebra::{AMat, AlgebraBasis};
use crate::field::{poly_divrem, poly_mul, poly_xgcd, Field};
use crate::linalg::{inverse, left_kernel, mat_sub, minimal_polynomial, random_combination, Matrix};

const SPLIT_ATTEMPTS: usize = 64;
const SPLIT_SEED: u64 = 0xdec;

/// Inverse of a square algebra matrix whose scalar part is the identity.
fn unipotent_inverse<F: Field>(a: &AlgebraBasis<F>, u: &AMat<F::Elem>) -> AMat<F::Elem> {
    let id = a.amat_identity(&u.rows);
    let n = a.amat_sub(&id, u);
    let mut acc = id.clone();
    let mut power = id;
    for _ in 0..=a.nilpotency_index() * u.n_rows().max(1) {
        power = a.amat_mul(&power, &n);
        if a.amat_is_zero(&power) {
            break;
        }
        acc = a.amat_add(&acc, &power);
    }
    acc
}

fn poly_at_amat<F: Field>(a: &AlgebraBasis<F>, p: &[F::Elem], m: &AMat<F::Elem>) -> AMat<F::Elem> {
    let id = a.amat_identity(&m.rows);
    let mut acc = a.amat_zero(&m.rows, &m.cols);
    for c in p.iter().rev() {
        acc = a.amat_add(&a.amat_mul(&acc, m), &a.amat_scale(c, &id));
    }
    acc
}

/// Block diagonal scalar matrix of a degree-0 self map.
fn total_scalar<F: Field>(a: &AlgebraBasis<F>, comps: &[AMat<F::Elem>]) -> Matrix<F::Elem> {
    let f = a.field();
    let n: usize = comps.iter().map(AMat::n_rows).sum();
    let mut m = Matrix::zeros(f, n, n);
    let mut at = 0;
    for c in comps {
        let s = a.amat_scalar(c);
        for r in 0..s.rows() {
            for col in 0..s.cols() {
                m.set(at + r, at + col, s.get(r, col).clone());
            }
        }
        at += c.n_rows();
    }
    m
}

/// Polynomial `h` with `h = 1` modulo the `lambda` part of `minpoly` and
/// `h = 0` modulo the rest.
fn spectral_projector<F: Field>(f: &F, minpoly: &[F::Elem], lambda: &F::Elem) -> Vec<F::Elem> {
    let linear = vec![f.neg(lambda), f.one()];
    let mut power = vec![f.one()];
    let mut rest = minpoly.to_vec();
    loop {
        let (q, r) = poly_divrem(f, &rest, &linear);
        if !r.iter().all(|c| f.is_zero(c)) {
            break;
        }
        rest = q;
        power = poly_mul(f, &power, &linear);
    }
    let (_, _, t) = poly_xgcd(f, &power, &rest);
    poly_mul(f, &t, &rest)
}

/// Splits a minimal complex along a nontrivial idempotent, if one is found.
fn split<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    rng: &mut ChaCha8Rng,
) -> Option<(PerfectComplex<F::Elem>, PerfectComplex<F::Elem>)> {
    let f = a.field();
    let maps = chain_maps(a, x, x, 0);
    let layout = HomLayout::new(a, x, x, 0);
    let vecs: Vec<Vec<F::Elem>> = maps.iter().map(|m| layout.from_map(a, m)).collect();
    let degrees: Vec<i32> = (x.start..=x.end()).collect();
    for _ in 0..SPLIT_ATTEMPTS {
        let alpha = layout.to_map(a, &random_combination(f, &vecs, layout.len, rng));
        let comps: Vec<AMat<F::Elem>> = degrees.iter().map(|&i| alpha.component(a, x, x, i)).collect();
        let minpoly = minimal_polynomial(f, &total_scalar(a, &comps));
        let roots = f.roots(&minpoly);
        if roots.len() < 2 {
            continue;
        }
        let h = spectral_projector(f, &minpoly, &roots[0]);
        let mut e: Vec<AMat<F::Elem>> = comps.iter().map(|c| poly_at_amat(a, &h, c)).collect();
        // e <- 3e^2 - 2e^3 until idempotent
        let three = f.from_i64(3);
        let two = f.from_i64(2);
        for _ in 0..64 {
            let sq: Vec<AMat<F::Elem>> = e.iter().map(|c| a.amat_mul(c, c)).collect();
            if sq == e {
                break;
            }
            e = e
                .iter()
                .zip(&sq)
                .map(|(c, s)| a.amat_sub(&a.amat_scale(&three, s), &a.amat_scale(&two, &a.amat_mul(s, c))))
                .collect();
        }
        // conjugate each degree so that e becomes a diagonal 0/1 matrix
        let mut c_mats = Vec::new();
        let mut c_invs = Vec::new();
        let mut fixed_counts = Vec::new();
        for ei in &e {
            let labels = &ei.rows;
            let s = a.amat_scalar(ei);
            let id = Matrix::identity(f, labels.len());
            let mut fixed = Vec::new();
            let mut killed = Vec::new();
            for v in 0..a.n_vertices() {
                let idx: Vec<usize> = (0..labels.len()).filter(|&r| labels[r] == v).collect();
                if idx.is_empty() {
                    continue;
                }
                let sub = Matrix::from_fn(idx.len(), idx.len(), |r, c| s.get(idx[r], idx[c]).clone());
                let sub_id = Matrix::from_fn(idx.len(), idx.len(), |r, c| id.get(idx[r], idx[c]).clone());
                let embed = |vec: Vec<F::Elem>| {
                    let mut full = vec![f.zero(); labels.len()];
                    for (k, val) in idx.iter().zip(vec) {
                        full[*k] = val;
                    }
                    (v, full)
                };
                fixed.extend(left_kernel(f, &mat_sub(f, &sub, &sub_id)).into_iter().map(embed));
                killed.extend(left_kernel(f, &sub).into_iter().map(embed));
            }
            fixed_counts.push(fixed.len());
            let rows: Vec<(usize, Vec<F::Elem>)> = fixed.into_iter().chain(killed).collect();
            let new_labels: Vec<usize> = rows.iter().map(|(v, _)| *v).collect();
            let g = Matrix::from_fn(rows.len(), labels.len(), |r, c| rows[r].1[c].clone());
            let g_inv = inverse(f, &g)?;
            let g_a = a.amat_from_scalar(&new_labels, labels, &g);
            let g_inv_a = a.amat_from_scalar(labels, &new_labels, &g_inv);
            let e_prime = a.amat_mul(&a.amat_mul(&g_a, ei), &g_inv_a);
            let big_e = {
                let mut m = a.amat_zero(&new_labels, &new_labels);
                for (r, &v) in new_labels.iter().enumerate().take(*fixed_counts.last().unwrap()) {
                    m.set(r, r, a.idempotent(v));
                }
                m
            };
            let one = a.amat_identity(&new_labels);
            let u = a.amat_add(
                &a.amat_mul(&e_prime, &big_e),
                &a.amat_mul(&a.amat_sub(&one, &e_prime), &a.amat_sub(&one, &big_e)),
            );
            let u_inv = unipotent_inverse(a, &u);
            c_mats.push(a.amat_mul(&u_inv, &g_a));
            c_invs.push(a.amat_mul(&g_inv_a, &u));
        }
        let mut first = PerfectComplex { start: x.start, terms: Vec::new(), diffs: Vec::new() };
        let mut second = first.clone();
        for (k, c) in c_mats.iter().enumerate() {
            let fc = fixed_counts[k];
            first.terms.push(c.rows[..fc].to_vec());
            second.terms.push(c.rows[fc..].to_vec());
        }
        for k in 0..x.diffs.len() {
            let d = a.amat_mul(&a.amat_mul(&c_mats[k], &x.diffs[k]), &c_invs[k + 1]);
            let (f0, f1) = (fixed_counts[k], fixed_counts[k + 1]);
            let r0: Vec<usize> = (0..f0).collect();
            let r1: Vec<usize> = (f0..d.n_rows()).collect();
            let c0: Vec<usize> = (0..f1).collect();
            let c1: Vec<usize> = (f1..d.n_cols()).collect();
            debug_assert!(a.amat_is_zero(&d.select(&r0, &c1)) && a.amat_is_zero(&d.select(&r1, &c0)));
            first.diffs.push(d.select(&r0, &c0));
            second.diffs.push(d.select(&r1, &c1));
        }
        let first = trim(a, &first);
        let second = trim(a, &second);
        if !first.is_zero() && !second.is_zero() {
            return Some((first, second));
        }
    }
    None
}

/// Indecomposable summands of the minimal form of `x`.
pub fn decompose<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> Vec<PerfectComplex<F::Elem>> {
    let (x, _) = minimize(a, x);
    if x.is_zero() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut out = Vec::new();
    let mut work = vec![x];
    while let Some(y) = work.pop() {
        if matches!(is_indecomposable(a, &y), Ok(true)) {
            out.push(y);
            continue;
        }
        match split(a, &y, &mut rng) {
            Some((p, q)) => {
                work.push(q);
                work.push(p);
            }
            None => out.push(y),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::tests::{ex211, ex211_x};
    use crate::complexes::{direct_sum, iso_k, stalk, validate};

    #[test]
    fn splits_direct_sums() {
        let a = ex211();
        let x = ex211_x(&a);
        let s = direct_sum(&a, &x, &stalk(&a, &[0], -1));
        let parts = decompose(&a, &s);
        assert_eq!(parts.len(), 2);
        for p in &parts {
            validate(&a, p).unwrap();
        }
        assert!(parts.iter().any(|p| iso_k(&a, p, &x)));
        assert!(parts.iter().any(|p| iso_k(&a, p, &stalk(&a, &[0], -1))));
    }

    #[test]
    fn splits_mixed_basis() {
        // P_x + P_x with a differential mixing them into P_y + P_y
        let a = ex211();
        let alpha = a.unit(a.arrow_index(1));
        let mut d = a.amat_zero(&[1, 1], &[0, 0]);
        d.set(0, 0, alpha.clone());
        d.set(0, 1, alpha.clone());
        d.set(1, 1, alpha.clone());
        let x = crate::complexes::two_term(d, -1);
        validate(&a, &x).unwrap();
        let parts = decompose(&a, &x);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| iso_k(&a, p, &ex211_x(&a))));
    }
}
