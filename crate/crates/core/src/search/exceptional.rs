//! Enumeration of minimal indecomposable exceptional complexes.
//!
//! Complexes are grouped by multiplicity profile (which projectives sit in
//! which degree, last degree 0). Profiles that cannot carry an
//! indecomposable exceptional complex are discarded by counting
//! arguments; on the rest, radical differentials are sampled layer by
//! layer, each layer drawn from the linear space of solutions of
//! `d^{i-1} d^i = 0` given the previous one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::SearchBounds;
use crate::algebra::{AMat, AlgebraBasis};
use crate::complexes::{is_exceptional, is_indecomposable, iso_k, PerfectComplex};
use crate::field::Field;
use crate::linalg::{nullspace, random_combination, unit_vec};

#[derive(Clone, Debug)]
pub struct ExceptionalSearch<E> {
    /// Shift-normalized, in canonical profile order.
    pub objects: Vec<PerfectComplex<E>>,
    pub profiles_total: usize,
    /// Profiles left after the counting prunes.
    pub profiles_sampled: usize,
    pub candidates: usize,
    pub truncated: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchSummary {
    pub profiles_total: usize,
    pub profiles_sampled: usize,
    pub candidates: usize,
    pub truncated: bool,
}

impl<E> ExceptionalSearch<E> {
    pub fn summary(&self) -> SearchSummary {
        SearchSummary {
            profiles_total: self.profiles_total,
            profiles_sampled: self.profiles_sampled,
            candidates: self.candidates,
            truncated: self.truncated,
        }
    }
}

/// `dim Hom(P_u, P_w) = dim e_u A e_w`.
fn hom_dim<F: Field>(a: &AlgebraBasis<F>, u: usize, w: usize) -> usize {
    a.piece(w, u).len()
}

fn has_radical_entry<F: Field>(a: &AlgebraBasis<F>, u: usize, w: usize) -> bool {
    a.piece(w, u).iter().any(|&k| !a.basis()[k].is_empty())
}

fn hom_between<F: Field>(a: &AlgebraBasis<F>, x: &[usize], y: &[usize]) -> usize {
    let n = x.len();
    (0..n).map(|u| (0..n).map(|w| x[u] * y[w] * hom_dim(a, u, w)).sum::<usize>()).sum()
}

/// Counting conditions every minimal indecomposable exceptional complex
/// with this profile satisfies.
fn profile_admissible<F: Field>(a: &AlgebraBasis<F>, p: &[Vec<usize>]) -> bool {
    let n = a.n_vertices();
    let l = p.len();
    if l == 1 {
        return p[0].iter().sum::<usize>() == 1;
    }
    // the graph of possible nonzero entries must be connected
    let nodes: Vec<(usize, usize)> =
        (0..l).flat_map(|i| (0..n).filter(move |&v| p[i][v] > 0).map(move |v| (i, v))).collect();
    let mut seen = vec![false; nodes.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(k) = stack.pop() {
        let (i, u) = nodes[k];
        for (j, &(i2, w)) in nodes.iter().enumerate() {
            let linked = (i2 == i + 1 && has_radical_entry(a, u, w)) || (i == i2 + 1 && has_radical_entry(a, w, u));
            if linked && !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return false;
    }
    // maps from the first to the last term are cycles of Hom(X, X[l-1])
    // and only few of them are boundaries
    let (first, last) = (&p[0], &p[l - 1]);
    let top = hom_between(a, first, last);
    let bound = hom_between(a, first, &p[l - 2]) + hom_between(a, &p[1], last);
    if top > bound {
        return false;
    }
    // the Euler form equals dim End > 0
    let mut chi: i64 = 0;
    for i in 0..l {
        for j in 0..l {
            let sign = if (j as i64 - i as i64).rem_euclid(2) == 0 { 1 } else { -1 };
            chi += sign * hom_between(a, &p[i], &p[j]) as i64;
        }
    }
    chi >= 1
}

fn all_profiles<F: Field>(a: &AlgebraBasis<F>, b: &SearchBounds) -> Vec<Vec<Vec<usize>>> {
    let n = a.n_vertices();
    let mut vectors: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        vectors = vectors
            .into_iter()
            .flat_map(|v| {
                (0..=b.max_mult).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    vectors.retain(|v| {
        let s: usize = v.iter().sum();
        s >= 1 && s <= b.max_summands
    });
    vectors.sort_by_key(|v| (v.iter().sum::<usize>(), v.iter().rev().cloned().collect::<Vec<_>>()));
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Vec<usize>>> = vectors.iter().map(|v| vec![v.clone()]).collect();
    for l in 1..=b.max_length {
        out.extend(layer.iter().cloned());
        if l == b.max_length {
            break;
        }
        let mut next = Vec::new();
        for p in &layer {
            let last = p.last().unwrap();
            for v in &vectors {
                // adjacent degrees must be able to interact
                let any = (0..n).any(|u| last[u] > 0 && (0..n).any(|w| v[w] > 0 && has_radical_entry(a, u, w)));
                if any {
                    let mut q = p.clone();
                    q.push(v.clone());
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    out
}

fn labels_of(v: &[usize]) -> Vec<usize> {
    v.iter().enumerate().flat_map(|(u, &k)| std::iter::repeat_n(u, k)).collect()
}

/// Parameters of a radical differential `rows -> cols`: `(r, c, basis index)`.
fn parameters<F: Field>(a: &AlgebraBasis<F>, rows: &[usize], cols: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (r, &u) in rows.iter().enumerate() {
        for (c, &w) in cols.iter().enumerate() {
            for &k in a.piece(w, u) {
                if !a.basis()[k].is_empty() {
                    out.push((r, c, k));
                }
            }
        }
    }
    out
}

fn assemble<F: Field>(
    a: &AlgebraBasis<F>,
    rows: &[usize],
    cols: &[usize],
    params: &[(usize, usize, usize)],
    x: &[F::Elem],
) -> AMat<F::Elem> {
    let f = a.field();
    let mut m = a.amat_zero(rows, cols);
    for (&(r, c, k), v) in params.iter().zip(x) {
        if !f.is_zero(v) {
            let mut e = m.get(r, c).to_vec();
            e[k] = f.add(&e[k], v);
            m.set(r, c, e);
        }
    }
    m
}

/// Linear space of parameter vectors `x` with `prev * D(x) = 0` and the
/// masked parameters zero.
fn solution_space<F: Field>(
    a: &AlgebraBasis<F>,
    prev: Option<&AMat<F::Elem>>,
    rows: &[usize],
    cols: &[usize],
    params: &[(usize, usize, usize)],
    masked: &[usize],
) -> Vec<Vec<F::Elem>> {
    let f = a.field();
    let np = params.len();
    let mut eqs: Vec<Vec<F::Elem>> = masked.iter().map(|&p| unit_vec(f, np, p)).collect();
    if let Some(prev) = prev {
        let columns: Vec<Vec<F::Elem>> = (0..np)
            .map(|p| {
                let d = assemble(a, rows, cols, &params[p..=p], &[f.one()]);
                a.amat_coords(&a.amat_mul(prev, &d))
            })
            .collect();
        let len = columns.first().map_or(0, Vec::len);
        for i in 0..len {
            eqs.push(columns.iter().map(|col| col[i].clone()).collect());
        }
    }
    nullspace(f, &eqs, np)
}

/// Whether the nonzero entries connect all summands.
fn support_connected<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> bool {
    let offsets: Vec<usize> = x
        .terms
        .iter()
        .scan(0, |acc, t| {
            let o = *acc;
            *acc += t.len();
            Some(o)
        })
        .collect();
    let total = x.n_summands();
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for (k, d) in x.diffs.iter().enumerate() {
        for r in 0..d.n_rows() {
            for c in 0..d.n_cols() {
                if !a.is_zero(d.get(r, c)) {
                    let (i, j) = (find(&mut parent, offsets[k] + r), find(&mut parent, offsets[k + 1] + c));
                    parent[i] = j;
                }
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..total).all(|i| find(&mut parent, i) == root)
}

fn sample_profile<F: Field>(
    a: &AlgebraBasis<F>,
    profile: &[Vec<usize>],
    budget: usize,
    seed: u64,
) -> Vec<PerfectComplex<F::Elem>> {
    let f = a.field();
    let l = profile.len();
    let terms: Vec<Vec<usize>> = profile.iter().map(|v| labels_of(v)).collect();
    let start = -(l as i32 - 1);
    if l == 1 {
        return vec![PerfectComplex { start, terms, diffs: Vec::new() }];
    }
    let params: Vec<Vec<(usize, usize, usize)>> =
        (0..l - 1).map(|k| parameters(a, &terms[k], &terms[k + 1])).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: Vec<PerfectComplex<F::Elem>> = Vec::new();
    for s in 0..budget {
        // sparsity of the sample: generic, or a random subset of entries forced to zero
        let density = [1.0, 0.5, 0.3, 1.0][s % 4];
        let binary = s % 4 == 3;
        let mut diffs: Vec<AMat<F::Elem>> = Vec::new();
        for k in 0..l - 1 {
            let np = params[k].len();
            let masked: Vec<usize> = (0..np).filter(|_| rng.gen::<f64>() >= density).collect();
            let space = solution_space(a, diffs.last(), &terms[k], &terms[k + 1], &params[k], &masked);
            let x = if binary {
                let mut x = vec![f.zero(); np];
                for v in &space {
                    if rng.gen_bool(0.5) {
                        x = crate::linalg::vec_add(f, &x, v);
                    }
                }
                x
            } else {
                random_combination(f, &space, np, &mut rng)
            };
            diffs.push(assemble(a, &terms[k], &terms[k + 1], &params[k], &x));
        }
        let cand = PerfectComplex { start, terms: terms.clone(), diffs };
        if !support_connected(a, &cand) || !is_exceptional(a, &cand) {
            continue;
        }
        if !matches!(is_indecomposable(a, &cand), Ok(true)) {
            continue;
        }
        if !found.iter().any(|y| iso_k(a, y, &cand)) {
            found.push(cand);
        }
    }
    found
}

/// Minimal indecomposable exceptional complexes within the bounds, up to
/// shift and isomorphism, as far as the sampling reaches.
pub fn enumerate_exceptional<F: Field>(a: &AlgebraBasis<F>, b: &SearchBounds) -> ExceptionalSearch<F::Elem> {
    let profiles = all_profiles(a, b);
    let profiles_total = profiles.len();
    let admissible: Vec<Vec<Vec<usize>>> =
        profiles.into_par_iter().filter(|p| profile_admissible(a, p)).collect();
    let budget = b.samples_per_profile.min(b.per_profile_cap).max(1);
    let mut truncated = false;
    let mut keep = admissible.len();
    if keep.saturating_mul(budget) > b.global_cap {
        keep = b.global_cap / budget;
        truncated = true;
    }
    let work = &admissible[..keep];
    let results: Vec<Vec<PerfectComplex<F::Elem>>> = work
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let seed = b.seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
            let per = if p.len() == 1 { 1 } else { budget };
            sample_profile(a, p, per, seed)
        })
        .collect();
    let candidates = work.iter().map(|p| if p.len() == 1 { 1 } else { budget }).sum();
    ExceptionalSearch {
        objects: results.into_iter().flatten().collect(),
        profiles_total,
        profiles_sampled: keep,
        candidates,
        truncated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_algebra, DEFAULT_NILPOTENCY_CAP};
    use crate::complexes::tests::{ex211, ex211_x};
    use crate::complexes::stalk;
    use crate::field::PrimeField;

    #[test]
    fn example_classification() {
        let a = ex211();
        let mut b = SearchBounds::for_vertices(2);
        b.max_length = 3;
        let s = enumerate_exceptional(&a, &b);
        assert!(!s.truncated);
        assert_eq!(s.objects.len(), 3, "{:?}", s.objects);
        for x in [stalk(&a, &[0], 0), stalk(&a, &[1], 0), crate::complexes::shift(&a, &ex211_x(&a), 0)] {
            assert!(s.objects.iter().any(|y| iso_k(&a, y, &x)));
        }
    }

    #[test]
    fn local_algebra_has_only_the_regular_module() {
        let a = parse_algebra("vertex x\narrow d x x\nrel d*d*d\n", &PrimeField::new(101).unwrap(), DEFAULT_NILPOTENCY_CAP)
            .unwrap();
        let mut b = SearchBounds::for_vertices(1);
        b.max_length = 3;
        b.max_mult = 2;
        let s = enumerate_exceptional(&a, &b);
        assert_eq!(s.objects.len(), 1);
        assert_eq!(s.objects[0].terms, vec![vec![0]]);
    }
}
