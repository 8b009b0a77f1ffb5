//! Bounded complexes of finitely generated projective modules.
//!
//! A complex stores, for each degree from `start` on, the vertex labels of
//! its indecomposable summands and the differential to the next degree as
//! an [`AMat`]. Maps are written in the row convention of [`AMat`]:
//! `d^i d^{i+1} = 0` is the product of consecutive differentials.

mod decompose;
mod hom;
mod minimize;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{AMat, AlgebraBasis};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::modules::{self, Module};

pub use decompose::decompose;
pub use hom::{
    chain_maps, compose_maps, end_algebra, end_algebra_with, hom_k, hom_k_dim, is_exceptional, is_indecomposable, iso_k, ChainMap, EndAlgebra,
    HomLayout, HomotopyHomSpace,
};
pub use minimize::minimize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectComplex<E> {
    /// Degree of `terms[0]`.
    pub start: i32,
    pub terms: Vec<Vec<usize>>,
    /// `diffs[i]` maps `terms[i]` to `terms[i + 1]`.
    pub diffs: Vec<AMat<E>>,
}

impl<E: Clone> PerfectComplex<E> {
    pub fn zero() -> Self {
        PerfectComplex { start: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Vec::is_empty)
    }

    /// Last degree with a stored term.
    pub fn end(&self) -> i32 {
        self.start + self.terms.len() as i32 - 1
    }

    pub fn term(&self, i: i32) -> &[usize] {
        if i < self.start || i > self.end() {
            &[]
        } else {
            &self.terms[(i - self.start) as usize]
        }
    }

    /// Degrees of the first and last nonzero terms.
    pub fn support(&self) -> Option<(i32, i32)> {
        let first = self.terms.iter().position(|t| !t.is_empty())?;
        let last = self.terms.iter().rposition(|t| !t.is_empty())?;
        Some((self.start + first as i32, self.start + last as i32))
    }

    /// `s - r + 1` over the support, 0 for the zero complex. Meaningful for
    /// minimal complexes.
    pub fn span_length(&self) -> usize {
        self.support().map_or(0, |(r, s)| (s - r + 1) as usize)
    }

    /// Number of summands `A e_v` in degree `i`, for each `v`.
    pub fn multiplicity(&self, i: i32, n_vertices: usize) -> Vec<usize> {
        let mut m = vec![0; n_vertices];
        for &v in self.term(i) {
            m[v] += 1;
        }
        m
    }

    /// Degrees where `A e_v` appears.
    pub fn degrees_of(&self, v: usize) -> Vec<i32> {
        (self.start..=self.end()).filter(|&i| self.term(i).contains(&v)).collect()
    }

    /// Multiplicity profile over the support: `(first degree, vectors)`.
    pub fn profile(&self, n_vertices: usize) -> (i32, Vec<Vec<usize>>) {
        match self.support() {
            None => (0, Vec::new()),
            Some((r, s)) => (r, (r..=s).map(|i| self.multiplicity(i, n_vertices)).collect()),
        }
    }

    /// Total summand count.
    pub fn n_summands(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }
}

impl<F: Field> AlgebraBasis<F> {
    /// The differential `X^i -> X^{i+1}`, zero outside the stored range.
    pub fn diff_at(&self, x: &PerfectComplex<F::Elem>, i: i32) -> AMat<F::Elem> {
        if i >= x.start && i < x.end() {
            x.diffs[(i - x.start) as usize].clone()
        } else {
            self.amat_zero(x.term(i), x.term(i + 1))
        }
    }
}

/// Checks shapes, entry pieces and `d d = 0`.
pub fn validate<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> Result<()> {
    if x.diffs.len() + 1 != x.terms.len() && !(x.terms.is_empty() && x.diffs.is_empty()) {
        return Err(Error::Invalid("one differential between each pair of consecutive terms".into()));
    }
    for (i, d) in x.diffs.iter().enumerate() {
        if d.rows != x.terms[i] || d.cols != x.terms[i + 1] {
            return Err(Error::Invalid(format!("differential {i} has the wrong shape")));
        }
        if !a.amat_well_typed(d) {
            return Err(Error::Invalid(format!("differential {i} has entries outside their pieces")));
        }
    }
    for w in x.diffs.windows(2) {
        if !a.amat_is_zero(&a.amat_mul(&w[0], &w[1])) {
            return Err(Error::Invalid("consecutive differentials do not compose to zero".into()));
        }
    }
    Ok(())
}

pub fn stalk<F: Field>(a: &AlgebraBasis<F>, labels: &[usize], degree: i32) -> PerfectComplex<F::Elem> {
    let _ = a;
    PerfectComplex { start: degree, terms: vec![labels.to_vec()], diffs: Vec::new() }
}

/// Two-term complex `rows -> cols` in degrees `degree, degree + 1`.
pub fn two_term<E: Clone>(d: AMat<E>, degree: i32) -> PerfectComplex<E> {
    PerfectComplex { start: degree, terms: vec![d.rows.clone(), d.cols.clone()], diffs: vec![d] }
}

/// Re-indexes over `[lo, hi]`, padding with zero terms.
pub fn pad<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>, lo: i32, hi: i32) -> PerfectComplex<F::Elem> {
    if lo > hi {
        return PerfectComplex::zero();
    }
    let terms: Vec<Vec<usize>> = (lo..=hi).map(|i| x.term(i).to_vec()).collect();
    let diffs = (lo..hi).map(|i| a.diff_at(x, i)).collect();
    PerfectComplex { start: lo, terms, diffs }
}

/// Drops zero terms at both ends; the zero complex becomes empty.
pub fn trim<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> PerfectComplex<F::Elem> {
    match x.support() {
        None => PerfectComplex::zero(),
        Some((r, s)) => pad(a, x, r, s),
    }
}

/// `X[n]`: `X[n]^i = X^{i+n}`, differentials multiplied by `(-1)^n`.
pub fn shift<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>, n: i32) -> PerfectComplex<F::Elem> {
    let diffs = if n % 2 == 0 { x.diffs.clone() } else { x.diffs.iter().map(|d| a.amat_neg(d)).collect() };
    PerfectComplex { start: x.start - n, terms: x.terms.clone(), diffs }
}

/// Shifts so that the last nonzero degree is 0.
pub fn normalize_shift<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> PerfectComplex<F::Elem> {
    let x = trim(a, x);
    match x.support() {
        None => x,
        Some((_, s)) => shift(a, &x, s),
    }
}

pub fn direct_sum<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    y: &PerfectComplex<F::Elem>,
) -> PerfectComplex<F::Elem> {
    let bounds: Vec<(i32, i32)> = [x.support(), y.support()].into_iter().flatten().collect();
    if bounds.is_empty() {
        return PerfectComplex::zero();
    }
    let lo = bounds.iter().map(|b| b.0).min().unwrap();
    let hi = bounds.iter().map(|b| b.1).max().unwrap();
    let terms = (lo..=hi).map(|i| x.term(i).iter().chain(y.term(i)).copied().collect()).collect();
    let diffs = (lo..hi).map(|i| a.amat_block_diag(&a.diff_at(x, i), &a.diff_at(y, i))).collect();
    PerfectComplex { start: lo, terms, diffs }
}

pub fn direct_sum_all<F: Field>(a: &AlgebraBasis<F>, xs: &[PerfectComplex<F::Elem>]) -> PerfectComplex<F::Elem> {
    xs.iter().fold(PerfectComplex::zero(), |acc, x| direct_sum(a, &acc, x))
}

/// The mapping cone of a degree-0 chain map `f: X -> Y`:
/// `C^i = X^{i+1} + Y^i` with differential `[[-d_X, f], [0, d_Y]]`.
pub fn cone<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    y: &PerfectComplex<F::Elem>,
    map: &ChainMap<F::Elem>,
) -> PerfectComplex<F::Elem> {
    let bounds: Vec<(i32, i32)> =
        [x.support().map(|(r, s)| (r - 1, s - 1)), y.support()].into_iter().flatten().collect();
    if bounds.is_empty() {
        return PerfectComplex::zero();
    }
    let lo = bounds.iter().map(|b| b.0).min().unwrap();
    let hi = bounds.iter().map(|b| b.1).max().unwrap();
    let terms = (lo..=hi).map(|i| x.term(i + 1).iter().chain(y.term(i)).copied().collect()).collect();
    let diffs = (lo..hi)
        .map(|i| {
            let dx = a.amat_neg(&a.diff_at(x, i + 1));
            let fm = map.component(a, x, y, i + 1);
            let zero = a.amat_zero(y.term(i), x.term(i + 2));
            a.amat_blocks(&dx, &fm, &zero, &a.diff_at(y, i))
        })
        .collect();
    PerfectComplex { start: lo, terms, diffs }
}

/// Cohomology `H^i` as a module.
pub fn homology_at<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>, i: i32) -> Module<F> {
    let f = a.field();
    let term = modules::projective_sum(a, x.term(i));
    let out = modules::amat_module_map(a, &a.diff_at(x, i));
    let inc = modules::amat_module_map(a, &a.diff_at(x, i - 1));
    let ker = modules::kernel(f, &term, &out);
    let im = modules::image(f, &term, &inc);
    modules::subquotient(a, &term, &ker, &im)
}

/// Serializable form: labels and `(path, coefficient)` entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub start: i32,
    pub end: i32,
    pub terms: Vec<Vec<String>>,
    pub differentials: Vec<Vec<Vec<Vec<(String, String)>>>>,
}

pub fn to_json<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> ComplexJson {
    let q = a.quiver();
    ComplexJson {
        start: x.start,
        end: x.end(),
        terms: x.terms.iter().map(|t| t.iter().map(|&v| q.vertices[v].clone()).collect()).collect(),
        differentials: x
            .diffs
            .iter()
            .map(|d| d.entries.iter().map(|row| row.iter().map(|e| a.element_terms(e)).collect()).collect())
            .collect(),
    }
}

pub fn from_json<F: Field>(a: &AlgebraBasis<F>, j: &ComplexJson) -> Result<PerfectComplex<F::Elem>> {
    let q = a.quiver();
    let terms: Vec<Vec<usize>> = j
        .terms
        .iter()
        .map(|t| {
            t.iter()
                .map(|l| q.vertex_index(l).ok_or_else(|| Error::UnknownLabel(l.clone())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    if j.differentials.len() + 1 != terms.len().max(1) {
        return Err(Error::Invalid("differential count does not match the terms".into()));
    }
    let mut diffs = Vec::new();
    for (i, d) in j.differentials.iter().enumerate() {
        let mut m = a.amat_zero(&terms[i], &terms[i + 1]);
        if d.len() != terms[i].len() {
            return Err(Error::Invalid(format!("differential {i} has the wrong number of rows")));
        }
        for (r, row) in d.iter().enumerate() {
            if row.len() != terms[i + 1].len() {
                return Err(Error::Invalid(format!("differential {i} has the wrong number of columns")));
            }
            for (c, e) in row.iter().enumerate() {
                m.set(r, c, a.element_from_terms(e)?);
            }
        }
        diffs.push(m);
    }
    let x = PerfectComplex { start: j.start, terms, diffs };
    validate(a, &x)?;
    Ok(x)
}

/// Human-readable one-line description, e.g. `P_y -> P_x` in degrees -1..0.
pub fn describe<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> String {
    let q = a.quiver();
    match x.support() {
        None => "0".into(),
        Some((r, s)) => {
            let parts: Vec<String> = (r..=s)
                .map(|i| {
                    let t = x.term(i);
                    if t.is_empty() {
                        "0".into()
                    } else {
                        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
                        for &v in t {
                            *counts.entry(v).or_default() += 1;
                        }
                        counts
                            .iter()
                            .map(|(&v, &m)| {
                                if m == 1 {
                                    format!("P_{}", q.vertices[v])
                                } else {
                                    format!("P_{}^{m}", q.vertices[v])
                                }
                            })
                            .collect::<Vec<_>>()
                            .join("+")
                    }
                })
                .collect();
            format!("{} [{r}..{s}]", parts.join(" -> "))
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::{parse_algebra, DEFAULT_NILPOTENCY_CAP};
    use crate::field::PrimeField;

    pub(crate) fn ex211() -> AlgebraBasis<PrimeField> {
        let text = "vertex x\nvertex y\narrow d x x\narrow a x y\narrow r y y\nrel d*d\nrel r*r\nrel r*a\nrel a*d\n";
        parse_algebra(text, &PrimeField::new(101).unwrap(), DEFAULT_NILPOTENCY_CAP).unwrap()
    }

    /// `X = P_y -> P_x` in degrees -1, 0, sending `e_y` to `a`.
    pub(crate) fn ex211_x(a: &AlgebraBasis<PrimeField>) -> PerfectComplex<u64> {
        let mut d = a.amat_zero(&[1], &[0]);
        d.set(0, 0, a.unit(a.arrow_index(1)));
        two_term(d, -1)
    }

    #[test]
    fn example_complex_is_valid() {
        let a = ex211();
        let x = ex211_x(&a);
        validate(&a, &x).unwrap();
        assert_eq!(x.span_length(), 2);
        assert_eq!(x.degrees_of(0), vec![0]);
        let h0 = homology_at(&a, &x, 0);
        assert_eq!(h0.total_dim(), 2);
        let hm1 = homology_at(&a, &x, -1);
        assert_eq!(hm1.dims, vec![0, 1]);
        assert_eq!(homology_at(&a, &x, 1).total_dim(), 0);
    }

    #[test]
    fn json_round_trip() {
        let a = ex211();
        let x = ex211_x(&a);
        let j = to_json(&a, &x);
        let text = serde_json::to_string(&j).unwrap();
        let back: ComplexJson = serde_json::from_str(&text).unwrap();
        assert_eq!(from_json(&a, &back).unwrap(), x);
    }

    #[test]
    fn shifts_and_sums() {
        let a = ex211();
        let x = ex211_x(&a);
        let y = shift(&a, &x, 1);
        assert_eq!(y.support(), Some((-2, -1)));
        assert_eq!(normalize_shift(&a, &y), x);
        let s = direct_sum(&a, &x, &stalk(&a, &[0], -1));
        validate(&a, &s).unwrap();
        assert_eq!(s.term(-1), &[1, 0]);
    }
}
