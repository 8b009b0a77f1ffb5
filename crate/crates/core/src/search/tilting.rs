//! Basic tilting complexes assembled from indecomposable exceptional ones.
//!
//! A sum `X_1[s_1] + ... + X_n[s_n]` is exceptional iff every nonzero
//! `Hom(X_i, X_j[m])` sits at `m = s_j - s_i`. These constraints fix the
//! relative shifts along the graph of nonzero hom spaces, which must be
//! connected when the algebra is.

use rayon::prelude::*;

use super::exceptional::{enumerate_exceptional, ExceptionalSearch};
use super::generation::{generates, shift_window, GenerationVerdict};
use super::SearchBounds;
use crate::algebra::AlgebraBasis;
use crate::complexes::{direct_sum_all, hom_k_dim, normalize_shift, shift, PerfectComplex};
use crate::field::Field;

/// Shifts `m` with `Hom_K(X, Y[m]) != 0`.
pub fn hom_shifts<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>, y: &PerfectComplex<F::Elem>) -> Vec<i32> {
    shift_window(x, y).filter(|&m| hom_k_dim(a, x, y, m) > 0).collect()
}

#[derive(Clone, Debug)]
pub struct TiltingComplex<E> {
    /// `(index into the exceptional list, shift)`, shifts normalized so
    /// that the sum ends in degree 0.
    pub summands: Vec<(usize, i32)>,
    pub complex: PerfectComplex<E>,
    pub verdict: GenerationVerdict,
}

#[derive(Clone, Debug)]
pub struct TiltingSearch<E> {
    pub exceptional: ExceptionalSearch<E>,
    pub complexes: Vec<TiltingComplex<E>>,
    /// Exceptional sums of the right size whose generation stayed undecided.
    pub excluded_unknown: usize,
    pub truncated: bool,
}

/// Relative shift forced between two exceptional objects: `Ok(None)` if no
/// constraint, `Err(())` if no shift works.
fn forced_shift(n_ij: &[i32], n_ji: &[i32]) -> Result<Option<i32>, ()> {
    let mut vals: Vec<i32> = n_ij.iter().copied().chain(n_ji.iter().map(|m| -m)).collect();
    vals.sort_unstable();
    vals.dedup();
    match vals.len() {
        0 => Ok(None),
        1 => Ok(Some(vals[0])),
        _ => Err(()),
    }
}

/// Table of pairwise hom shifts among `objs`.
pub(crate) fn shift_table<F: Field>(a: &AlgebraBasis<F>, objs: &[PerfectComplex<F::Elem>]) -> Vec<Vec<Vec<i32>>> {
    (0..objs.len())
        .into_par_iter()
        .map(|i| (0..objs.len()).map(|j| hom_shifts(a, &objs[i], &objs[j])).collect())
        .collect()
}

/// Shifts for the chosen objects making their sum exceptional, with one
/// base shift per connected component of the constraint graph.
pub(crate) fn solve_shifts(table: &[Vec<Vec<i32>>], chosen: &[usize]) -> Option<(Vec<i32>, usize)> {
    let k = chosen.len();
    let mut forced = vec![vec![None; k]; k];
    for p in 0..k {
        for q in 0..k {
            if p != q {
                forced[p][q] = forced_shift(&table[chosen[p]][chosen[q]], &table[chosen[q]][chosen[p]]).ok()?;
            }
        }
    }
    let mut shifts: Vec<Option<i32>> = vec![None; k];
    let mut components = 0;
    for root in 0..k {
        if shifts[root].is_some() {
            continue;
        }
        components += 1;
        shifts[root] = Some(0);
        let mut stack = vec![root];
        while let Some(p) = stack.pop() {
            for q in 0..k {
                if let Some(d) = forced[p][q] {
                    let want = shifts[p].unwrap() + d;
                    match shifts[q] {
                        None => {
                            shifts[q] = Some(want);
                            stack.push(q);
                        }
                        Some(s) if s != want => return None,
                        _ => {}
                    }
                }
            }
        }
    }
    Some((shifts.into_iter().map(Option::unwrap).collect(), components))
}

/// Index sets of size `k` whose members are pairwise shift-compatible.
pub(crate) fn compatible_sets(table: &[Vec<Vec<i32>>], k: usize) -> Vec<Vec<usize>> {
    let e = table.len();
    let ok = |i: usize, j: usize| forced_shift(&table[i][j], &table[j][i]).is_ok();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..e).rev().map(|i| vec![i]).collect();
    while let Some(s) = stack.pop() {
        if s.len() == k {
            out.push(s);
            continue;
        }
        let last = *s.last().unwrap();
        for j in (last + 1..e).rev() {
            if s.iter().all(|&i| ok(i, j)) {
                let mut t = s.clone();
                t.push(j);
                stack.push(t);
            }
        }
    }
    out.sort();
    out
}

/// Sum of `objs[i][s]` over the chosen pairs, shift-normalized, together
/// with the normalized shifts.
pub(crate) fn assemble_sum<F: Field>(
    a: &AlgebraBasis<F>,
    objs: &[PerfectComplex<F::Elem>],
    chosen: &[usize],
    shifts: &[i32],
) -> (PerfectComplex<F::Elem>, Vec<i32>) {
    let parts: Vec<PerfectComplex<F::Elem>> =
        chosen.iter().zip(shifts).map(|(&i, &s)| shift(a, &objs[i], s)).collect();
    let sum = direct_sum_all(a, &parts);
    let end = sum.support().map_or(0, |(_, s)| s);
    let normalized = normalize_shift(a, &sum);
    (normalized, shifts.iter().map(|s| s + end).collect())
}

pub fn enumerate_tilting<F: Field>(a: &AlgebraBasis<F>, b: &SearchBounds) -> TiltingSearch<F::Elem> {
    let exceptional = enumerate_exceptional(a, b);
    let objs = &exceptional.objects;
    let n = a.n_vertices();
    let connected = a.quiver().is_connected();
    let table = shift_table(a, objs);
    let candidates: Vec<(Vec<usize>, Vec<i32>)> = compatible_sets(&table, n)
        .into_iter()
        .filter_map(|set| {
            let (shifts, components) = solve_shifts(&table, &set)?;
            (!connected || components == 1).then_some((set, shifts))
        })
        .collect();
    let results: Vec<TiltingComplex<F::Elem>> = candidates
        .par_iter()
        .map(|(set, shifts)| {
            let (complex, shifts) = assemble_sum(a, objs, set, shifts);
            let verdict = generates(a, &complex, b.depth);
            TiltingComplex { summands: set.iter().copied().zip(shifts).collect(), complex, verdict }
        })
        .collect();
    let excluded_unknown = results.iter().filter(|t| matches!(t.verdict, GenerationVerdict::Unknown { .. })).count();
    let complexes: Vec<TiltingComplex<F::Elem>> = results.into_iter().filter(|t| t.verdict.is_generating()).collect();
    let truncated = exceptional.truncated;
    TiltingSearch { exceptional, complexes, excluded_unknown, truncated }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::tests::{ex211, ex211_x};
    use crate::complexes::{direct_sum, iso_k, stalk};

    #[test]
    fn example_tilting_complexes() {
        let a = ex211();
        let s = enumerate_tilting(&a, &SearchBounds::for_vertices(2));
        assert_eq!(s.complexes.len(), 3);
        let x = ex211_x(&a);
        let expected = [
            direct_sum(&a, &stalk(&a, &[0], 0), &stalk(&a, &[1], 0)),
            // the stalk summands sit in the degree of the matching term of X
            direct_sum(&a, &stalk(&a, &[0], 0), &x),
            direct_sum(&a, &stalk(&a, &[1], -1), &x),
        ];
        for t in &expected {
            assert!(s.complexes.iter().any(|c| iso_k(&a, &c.complex, t)), "missing {t:?}");
        }
    }
}
