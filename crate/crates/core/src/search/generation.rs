//! Whether a perfect complex generates the homotopy category.
//!
//! Three tests in order of cost: the classes of the summands must span
//! the Grothendieck group; every simple must receive a nonzero map from
//! some shift of the complex; and finally a bounded closure under shifts,
//! cones and summands must reach every indecomposable projective.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{AMat, AlgebraBasis};
use crate::complexes::{
    cone, decompose, describe, direct_sum_all, hom_k, iso_k, minimize, normalize_shift, shift, ChainMap,
    PerfectComplex,
};
use crate::field::Field;

/// Bound on the number of objects tracked by the closure.
const CLOSURE_OBJECT_CAP: usize = 48;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GenerationVerdict {
    Generates { tier: String, certificate: Vec<String> },
    NotGenerating { tier: String, witness: String },
    Unknown { depth: usize, objects: usize },
}

impl GenerationVerdict {
    pub fn is_generating(&self) -> bool {
        matches!(self, GenerationVerdict::Generates { .. })
    }
}

/// Euler classes `sum_i (-1)^i [X^i]` of the given complexes.
pub fn k0_classes<F: Field>(a: &AlgebraBasis<F>, xs: &[PerfectComplex<F::Elem>]) -> Vec<Vec<i64>> {
    let n = a.n_vertices();
    xs.iter()
        .map(|x| {
            let mut c = vec![0i64; n];
            for (k, t) in x.terms.iter().enumerate() {
                let sign = if (x.start + k as i32).rem_euclid(2) == 0 { 1 } else { -1 };
                for &v in t {
                    c[v] += sign;
                }
            }
            c
        })
        .collect()
}

/// Whether the integer rows span `Z^n`.
pub fn spans_lattice(rows: &[Vec<i64>], n: usize) -> bool {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut pivot_row = 0;
    for col in 0..n {
        loop {
            let Some(best) = (pivot_row..m.len()).filter(|&r| m[r][col] != 0).min_by_key(|&r| m[r][col].abs())
            else {
                return false;
            };
            m.swap(pivot_row, best);
            let mut clean = true;
            for r in pivot_row + 1..m.len() {
                if m[r][col] != 0 {
                    let q = m[r][col] / m[pivot_row][col];
                    for c in 0..n {
                        m[r][c] -= q * m[pivot_row][c];
                    }
                    clean &= m[r][col] == 0;
                }
            }
            if clean {
                break;
            }
        }
        if m[pivot_row][col].abs() != 1 {
            return false;
        }
        pivot_row += 1;
    }
    true
}

fn vstack<F: Field>(a: &AlgebraBasis<F>, blocks: &[AMat<F::Elem>]) -> AMat<F::Elem> {
    let rows: Vec<usize> = blocks.iter().flat_map(|b| b.rows.iter().copied()).collect();
    let mut m = a.amat_zero(&rows, &blocks[0].cols);
    let mut at = 0;
    for b in blocks {
        for r in 0..b.n_rows() {
            for c in 0..b.n_cols() {
                m.set(at + r, c, b.get(r, c).to_vec());
            }
        }
        at += b.n_rows();
    }
    m
}

fn hstack<F: Field>(a: &AlgebraBasis<F>, blocks: &[AMat<F::Elem>]) -> AMat<F::Elem> {
    let cols: Vec<usize> = blocks.iter().flat_map(|b| b.cols.iter().copied()).collect();
    let mut m = a.amat_zero(&blocks[0].rows, &cols);
    let mut at = 0;
    for b in blocks {
        for r in 0..b.n_rows() {
            for c in 0..b.n_cols() {
                m.set(r, at + c, b.get(r, c).to_vec());
            }
        }
        at += b.n_cols();
    }
    m
}

/// Cones of `X -> Y[n]` along each basis map and along the two universal maps.
fn cones<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    y: &PerfectComplex<F::Elem>,
    n: i32,
) -> Vec<(String, PerfectComplex<F::Elem>)> {
    let h = hom_k(a, x, y, n);
    if h.dim == 0 {
        return Vec::new();
    }
    let yn = shift(a, y, n);
    let (r, s) = x.support().expect("nonzero");
    let mut out = Vec::new();
    let as_degree_zero = |m: &ChainMap<F::Elem>| ChainMap { n: 0, comps: m.comps.clone() };
    for (k, rep) in h.reps.iter().enumerate() {
        out.push((format!("basis map {k}"), cone(a, x, &yn, &as_degree_zero(rep))));
    }
    if h.dim > 1 {
        let d = h.dim;
        // X -> Y[n]^d
        let ys = direct_sum_all(a, &vec![yn.clone(); d]);
        let comps: BTreeMap<i32, AMat<F::Elem>> = (r..=s)
            .map(|i| (i, hstack(a, &h.reps.iter().map(|m| m.component(a, x, y, i)).collect::<Vec<_>>())))
            .collect();
        out.push(("left approximation".into(), cone(a, x, &ys, &ChainMap { n: 0, comps })));
        // X^d -> Y[n]
        let xs = direct_sum_all(a, &vec![x.clone(); d]);
        let comps: BTreeMap<i32, AMat<F::Elem>> = (r..=s)
            .map(|i| (i, vstack(a, &h.reps.iter().map(|m| m.component(a, x, y, i)).collect::<Vec<_>>())))
            .collect();
        out.push(("right approximation".into(), cone(a, &xs, &yn, &ChainMap { n: 0, comps })));
    }
    out
}

/// Shifts `n` for which `Hom(X, Y[n])` can be nonzero for degree reasons.
pub(crate) fn shift_window<E: Clone>(x: &PerfectComplex<E>, y: &PerfectComplex<E>) -> std::ops::RangeInclusive<i32> {
    match (x.support(), y.support()) {
        (Some((rx, sx)), Some((ry, sy))) => (ry - sx)..=(sy - rx),
        _ => 1..=0,
    }
}

fn stalk_vertex<E: Clone>(x: &PerfectComplex<E>) -> Option<usize> {
    match x.support() {
        Some((r, s)) if r == s && x.term(r).len() == 1 => Some(x.term(r)[0]),
        _ => None,
    }
}

pub fn generates<F: Field>(a: &AlgebraBasis<F>, t: &PerfectComplex<F::Elem>, depth: usize) -> GenerationVerdict {
    let n = a.n_vertices();
    let (t, _) = minimize(a, t);
    let summands = decompose(a, &t);
    let classes = k0_classes(a, &summands);
    if !spans_lattice(&classes, n) {
        return GenerationVerdict::NotGenerating {
            tier: "k0".into(),
            witness: format!("summand classes {classes:?} do not span the Grothendieck group"),
        };
    }
    // for a minimal complex Hom(T, S_v[m]) is the multiplicity of P_v in T^{-m}
    if let Some(v) = (0..n).find(|&v| t.degrees_of(v).is_empty()) {
        return GenerationVerdict::NotGenerating {
            tier: "simple homs".into(),
            witness: format!("Hom(T, S_{}[m]) = 0 for all m", a.quiver().vertices[v]),
        };
    }
    let mut objects: Vec<PerfectComplex<F::Elem>> = Vec::new();
    let mut certificate = Vec::new();
    let add = |objects: &mut Vec<PerfectComplex<F::Elem>>, x: PerfectComplex<F::Elem>| -> bool {
        let x = normalize_shift(a, &x);
        if objects.iter().any(|y| iso_k(a, y, &x)) {
            false
        } else {
            objects.push(x);
            true
        }
    };
    for s in summands {
        add(&mut objects, s);
    }
    let reached = |objects: &[PerfectComplex<F::Elem>]| {
        let mut have = vec![false; n];
        for x in objects {
            if let Some(v) = stalk_vertex(x) {
                have[v] = true;
            }
        }
        have.into_iter().all(|h| h)
    };
    if reached(&objects) {
        return GenerationVerdict::Generates { tier: "closure".into(), certificate: vec!["every projective is a summand".into()] };
    }
    let mut fresh_from = 0;
    for round in 1..=depth {
        let old_len = objects.len();
        let snapshot = objects.clone();
        'pairs: for i in 0..old_len {
            for j in 0..old_len {
                if i < fresh_from && j < fresh_from {
                    continue;
                }
                let (x, y) = (&snapshot[i], &snapshot[j]);
                for m in shift_window(x, y) {
                    for (how, c) in cones(a, x, y, m) {
                        for part in decompose(a, &c) {
                            let desc = describe(a, &normalize_shift(a, &part));
                            if add(&mut objects, part) {
                                certificate.push(format!(
                                    "round {round}: {how} of #{i} -> #{j}[{m}] yields {desc}"
                                ));
                                if reached(&objects) {
                                    return GenerationVerdict::Generates { tier: "closure".into(), certificate };
                                }
                            }
                        }
                        if objects.len() >= CLOSURE_OBJECT_CAP {
                            break 'pairs;
                        }
                    }
                }
            }
        }
        if objects.len() == old_len {
            break;
        }
        fresh_from = old_len;
    }
    GenerationVerdict::Unknown { depth, objects: objects.len() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::tests::{ex211, ex211_x};
    use crate::complexes::{direct_sum, stalk};

    #[test]
    fn lattice_spans() {
        assert!(spans_lattice(&[vec![1, 0], vec![0, 1]], 2));
        assert!(spans_lattice(&[vec![2, 1], vec![1, 1]], 2));
        assert!(!spans_lattice(&[vec![2, 0], vec![0, 1]], 2));
        assert!(!spans_lattice(&[vec![1, 0]], 2));
        assert!(spans_lattice(&[vec![2, 0], vec![3, 0], vec![0, -1]], 2));
    }

    #[test]
    fn example_generation() {
        let a = ex211();
        let reg = stalk(&a, &[0, 1], 0);
        assert!(generates(&a, &reg, 3).is_generating());
        assert!(matches!(generates(&a, &stalk(&a, &[0], 0), 3), GenerationVerdict::NotGenerating { .. }));
        let t2 = direct_sum(&a, &stalk(&a, &[0], 0), &ex211_x(&a));
        assert!(generates(&a, &t2, 3).is_generating(), "{:?}", generates(&a, &t2, 3));
    }
}
