//! Morphisms in the homotopy category.
//!
//! Degree-`n` maps `X -> Y[n]` are families `F_i: X^i -> Y^{i+n}`. The
//! Hom complex differential is `(dF)_i = F_i d_Y - (-1)^n d_X F_{i+1}`, so
//! chain maps are its cycles and null-homotopic maps its boundaries.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{minimize, trim, PerfectComplex};
use crate::algebra::{trace_form_radical, AMat, AlgebraBasis};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{nullspace, rank_matrix, Echelon, Matrix, QuotientBasis};

const ISO_SAMPLES: usize = 32;
const ISO_SEED: u64 = 0x150;

#[derive(Clone, Debug)]
struct Block {
    degree: i32,
    offset: usize,
    len: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
    /// Offset of entry `(r, c)` relative to the block start.
    sub: Vec<Vec<usize>>,
}

/// Coordinates of the degree-`n` part of the Hom complex.
#[derive(Clone, Debug)]
pub struct HomLayout {
    pub n: i32,
    blocks: Vec<Block>,
    pub len: usize,
}

/// A family of component maps `X^i -> Y^{i+n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap<E> {
    pub n: i32,
    pub comps: BTreeMap<i32, AMat<E>>,
}

impl<E: Clone> ChainMap<E> {
    /// Component at degree `i` (zero if not stored).
    pub fn component<F: Field<Elem = E>>(
        &self,
        a: &AlgebraBasis<F>,
        x: &PerfectComplex<E>,
        y: &PerfectComplex<E>,
        i: i32,
    ) -> AMat<E> {
        self.comps.get(&i).cloned().unwrap_or_else(|| a.amat_zero(x.term(i), y.term(i + self.n)))
    }
}

impl HomLayout {
    pub fn new<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>, y: &PerfectComplex<F::Elem>, n: i32) -> Self {
        let mut blocks = Vec::new();
        let mut offset = 0;
        if !x.terms.is_empty() {
            for i in x.start..=x.end() {
                let rows = x.term(i).to_vec();
                let cols = y.term(i + n).to_vec();
                if rows.is_empty() || cols.is_empty() {
                    continue;
                }
                let mut sub = Vec::with_capacity(rows.len());
                let mut len = 0;
                for &u in &rows {
                    let mut row = Vec::with_capacity(cols.len());
                    for &w in &cols {
                        row.push(len);
                        len += a.piece(w, u).len();
                    }
                    sub.push(row);
                }
                blocks.push(Block { degree: i, offset, len, rows, cols, sub });
                offset += len;
            }
        }
        HomLayout { n, blocks, len: offset }
    }

    fn block(&self, degree: i32) -> Option<&Block> {
        self.blocks.iter().find(|b| b.degree == degree)
    }

    pub fn to_map<F: Field>(&self, a: &AlgebraBasis<F>, coords: &[F::Elem]) -> ChainMap<F::Elem> {
        let comps = self
            .blocks
            .iter()
            .map(|b| (b.degree, a.amat_from_coords(&b.rows, &b.cols, &coords[b.offset..b.offset + b.len])))
            .collect();
        ChainMap { n: self.n, comps }
    }

    pub fn from_map<F: Field>(&self, a: &AlgebraBasis<F>, m: &ChainMap<F::Elem>) -> Vec<F::Elem> {
        let mut out = vec![a.field().zero(); self.len];
        for b in &self.blocks {
            if let Some(c) = m.comps.get(&b.degree) {
                out[b.offset..b.offset + b.len].clone_from_slice(&a.amat_coords(c));
            }
        }
        out
    }
}

/// Matrix of the Hom complex differential from degree `n` to `n + 1`
/// (rows: target coordinates, columns: source coordinates).
fn hom_differential<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    y: &PerfectComplex<F::Elem>,
    from: &HomLayout,
    to: &HomLayout,
) -> Matrix<F::Elem> {
    let f = a.field();
    let n = from.n;
    let sign = if n % 2 == 0 { f.one() } else { f.neg(&f.one()) };
    let neg_sign = f.neg(&sign);
    let mut m = Matrix::zeros(f, to.len, from.len);
    for blk in &from.blocks {
        let i = blk.degree;
        let dy = a.diff_at(y, i + n);
        let dx = a.diff_at(x, i - 1);
        let t1 = to.block(i);
        let t2 = to.block(i - 1);
        for (r, &u) in blk.rows.iter().enumerate() {
            for (k, &w) in blk.cols.iter().enumerate() {
                for (p, &b) in a.piece(w, u).iter().enumerate() {
                    let col = blk.offset + blk.sub[r][k] + p;
                    if let Some(t) = t1 {
                        for (c, &w2) in t.cols.iter().enumerate() {
                            let prod = a.mul_unit_left(b, dy.get(k, c));
                            for (q, val) in a.piece_coords(&prod, w2, u).into_iter().enumerate() {
                                if !f.is_zero(&val) {
                                    let row = t.offset + t.sub[r][c] + q;
                                    let cur = f.add(m.get(row, col), &val);
                                    m.set(row, col, cur);
                                }
                            }
                        }
                    }
                    if let Some(t) = t2 {
                        for (r2, &u2) in t.rows.iter().enumerate() {
                            let prod = a.mul_unit_right(dx.get(r2, r), b);
                            for (q, val) in a.piece_coords(&prod, w, u2).into_iter().enumerate() {
                                if !f.is_zero(&val) {
                                    let row = t.offset + t.sub[r2][k] + q;
                                    let cur = f.add(m.get(row, col), &f.mul(&neg_sign, &val));
                                    m.set(row, col, cur);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    m
}

/// `Hom_K(X, Y[n])` with representatives of a basis.
#[derive(Clone, Debug)]
pub struct HomotopyHomSpace<E> {
    pub n: i32,
    pub cycles_dim: usize,
    pub boundaries_dim: usize,
    pub dim: usize,
    pub reps: Vec<ChainMap<E>>,
}

fn columns<F: Field>(m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    (0..m.cols()).map(|c| m.column(c)).collect()
}

struct HomData<F: Field> {
    layout: HomLayout,
    cycles: Vec<Vec<F::Elem>>,
    boundaries: Vec<Vec<F::Elem>>,
}

fn hom_data<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    y: &PerfectComplex<F::Elem>,
    n: i32,
) -> HomData<F> {
    let f = a.field();
    let prev = HomLayout::new(a, x, y, n - 1);
    let here = HomLayout::new(a, x, y, n);
    let next = HomLayout::new(a, x, y, n + 1);
    let d_out = hom_differential(a, x, y, &here, &next);
    let d_in = hom_differential(a, x, y, &prev, &here);
    let cycles = nullspace(f, &d_out.to_rows(), here.len);
    let boundaries = Echelon::from_vectors(f, here.len, &columns::<F>(&d_in)).basis().to_vec();
    HomData { layout: here, cycles, boundaries }
}

pub fn hom_k<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    y: &PerfectComplex<F::Elem>,
    n: i32,
) -> HomotopyHomSpace<F::Elem> {
    let f = a.field();
    let d = hom_data(a, x, y, n);
    let q = QuotientBasis::new(f, d.layout.len, &d.boundaries, &d.cycles);
    HomotopyHomSpace {
        n,
        cycles_dim: d.cycles.len(),
        boundaries_dim: d.boundaries.len(),
        dim: q.dim(),
        reps: q.reps().iter().map(|c| d.layout.to_map(a, c)).collect(),
    }
}

/// `dim Hom_K(X, Y[n])`, by ranks only.
pub fn hom_k_dim<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    y: &PerfectComplex<F::Elem>,
    n: i32,
) -> usize {
    let prev = HomLayout::new(a, x, y, n - 1);
    let here = HomLayout::new(a, x, y, n);
    if here.len == 0 {
        return 0;
    }
    let next = HomLayout::new(a, x, y, n + 1);
    let out_rank = rank_matrix(a.field(), &hom_differential(a, x, y, &here, &next));
    let in_rank = rank_matrix(a.field(), &hom_differential(a, x, y, &prev, &here));
    here.len - out_rank - in_rank
}

/// Chain maps `X -> Y` (degree 0), all of them, as a basis.
pub fn chain_maps<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    y: &PerfectComplex<F::Elem>,
    n: i32,
) -> Vec<ChainMap<F::Elem>> {
    let d = hom_data(a, x, y, n);
    d.cycles.iter().map(|c| d.layout.to_map(a, c)).collect()
}

/// "`f` then `g`" for `f: X -> Y[m]`, `g: Y -> Z[n]`, giving `X -> Z[m + n]`.
/// Signs follow `(g f)_i = f_i g_{i+m}`.
pub fn compose_maps<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    y: &PerfectComplex<F::Elem>,
    z: &PerfectComplex<F::Elem>,
    fm: &ChainMap<F::Elem>,
    gm: &ChainMap<F::Elem>,
) -> ChainMap<F::Elem> {
    let mut comps = BTreeMap::new();
    for (&i, fi) in &fm.comps {
        let gi = gm.component(a, y, z, i + fm.n);
        let prod = a.amat_mul(fi, &gi);
        if !a.amat_is_zero(&prod) {
            comps.insert(i, prod);
        }
    }
    let _ = x;
    ChainMap { n: fm.n + gm.n, comps }
}

/// `End_K(X)` with structure constants; `b_p b_q` is `b_p` after `b_q`.
#[derive(Clone, Debug)]
pub struct EndAlgebra<E> {
    pub reps: Vec<ChainMap<E>>,
    pub table: Vec<Vec<Vec<E>>>,
    pub identity: Vec<E>,
}

impl<E> EndAlgebra<E> {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }
}

pub fn end_algebra<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> EndAlgebra<F::Elem> {
    end_algebra_with(a, x, &[]).0
}

/// [`end_algebra`] together with the coordinates of further self maps.
pub fn end_algebra_with<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    extra: &[ChainMap<F::Elem>],
) -> (EndAlgebra<F::Elem>, Vec<Vec<F::Elem>>) {
    let f = a.field();
    let d = hom_data(a, x, x, 0);
    let q = QuotientBasis::new(f, d.layout.len, &d.boundaries, &d.cycles);
    let reps: Vec<ChainMap<F::Elem>> = q.reps().iter().map(|c| d.layout.to_map(a, c)).collect();
    let coords = |m: &ChainMap<F::Elem>| q.coords(&d.layout.from_map(a, m)).expect("composite is a cycle");
    let table = reps
        .iter()
        .map(|bp| reps.iter().map(|bq| coords(&compose_maps(a, x, x, x, bq, bp))).collect())
        .collect();
    let id = ChainMap {
        n: 0,
        comps: x
            .terms
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.is_empty())
            .map(|(k, t)| (x.start + k as i32, a.amat_identity(t)))
            .collect(),
    };
    let identity = coords(&id);
    let extra = extra.iter().map(coords).collect();
    (EndAlgebra { reps, table, identity }, extra)
}

/// True iff `Hom_K(X, X[n]) = 0` for all `n != 0`. Shifts beyond the
/// length of the minimal form vanish for degree reasons.
pub fn is_exceptional<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> bool {
    let (x, _) = minimize(a, x);
    let l = x.span_length() as i32;
    (1..l).all(|n| hom_k_dim(a, &x, &x, n) == 0 && hom_k_dim(a, &x, &x, -n) == 0)
}

/// Local endomorphism ring test: `End_K(X) / rad` is one-dimensional.
pub fn is_indecomposable<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> Result<bool> {
    let (x, _) = minimize(a, x);
    if x.is_zero() {
        return Err(Error::Invalid("the zero complex has no indecomposability verdict".into()));
    }
    let end = end_algebra(a, &x);
    let rad = trace_form_radical(a.field(), &end.table)?;
    Ok(end.dim() - rad.len() == 1)
}

fn scalar_invertible<F: Field>(
    a: &AlgebraBasis<F>,
    x: &PerfectComplex<F::Elem>,
    y: &PerfectComplex<F::Elem>,
    m: &ChainMap<F::Elem>,
) -> bool {
    let Some((r, s)) = x.support() else { return true };
    (r..=s).all(|i| {
        let c = m.component(a, x, y, i);
        let s = a.amat_scalar(&c);
        s.rows() == s.cols() && rank_matrix(a.field(), &s) == s.rows()
    })
}

/// Isomorphism in the homotopy category.
pub fn iso_k<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>, y: &PerfectComplex<F::Elem>) -> bool {
    let f = a.field();
    let x = trim(a, &minimize(a, x).0);
    let y = trim(a, &minimize(a, y).0);
    if x.support() != y.support() {
        return false;
    }
    let n = a.n_vertices();
    let Some((r, s)) = x.support() else { return true };
    if (r..=s).any(|i| x.multiplicity(i, n) != y.multiplicity(i, n)) {
        return false;
    }
    if x == y {
        return true;
    }
    let maps = chain_maps(a, &x, &y, 0);
    if maps.is_empty() {
        return false;
    }
    let layout = HomLayout::new(a, &x, &y, 0);
    let vecs: Vec<Vec<F::Elem>> = maps.iter().map(|m| layout.from_map(a, m)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(ISO_SEED);
    for _ in 0..ISO_SAMPLES {
        let c = crate::linalg::random_combination(f, &vecs, layout.len, &mut rng);
        if scalar_invertible(a, &x, &y, &layout.to_map(a, &c)) {
            return true;
        }
    }
    // deterministic fallback over basis elements and pairwise sums
    for i in 0..vecs.len() {
        if scalar_invertible(a, &x, &y, &layout.to_map(a, &vecs[i])) {
            return true;
        }
        for j in i + 1..vecs.len() {
            let s = crate::linalg::vec_add(f, &vecs[i], &vecs[j]);
            if scalar_invertible(a, &x, &y, &layout.to_map(a, &s)) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::tests::{ex211, ex211_x};
    use crate::complexes::{direct_sum, shift, stalk};

    #[test]
    fn stalk_homs_follow_pieces() {
        let a = ex211();
        let px = stalk(&a, &[0], 0);
        let py = stalk(&a, &[1], 0);
        assert_eq!(hom_k_dim(&a, &py, &px, 0), 1);
        assert_eq!(hom_k_dim(&a, &px, &py, 0), 0);
        assert_eq!(hom_k_dim(&a, &px, &px, 0), 2);
    }

    #[test]
    fn example_complex_endomorphisms() {
        let a = ex211();
        let x = ex211_x(&a);
        assert_eq!(hom_k_dim(&a, &x, &x, 0), 3);
        for n in [-3, -2, -1, 1, 2, 3] {
            assert_eq!(hom_k_dim(&a, &x, &x, n), 0, "shift {n}");
        }
        assert!(is_exceptional(&a, &x));
        assert!(is_indecomposable(&a, &x).unwrap());
        let end = end_algebra(&a, &x);
        assert_eq!(end.dim(), 3);
    }

    #[test]
    fn repeated_projective_is_not_exceptional() {
        let a = ex211();
        let x = direct_sum(&a, &stalk(&a, &[0], 0), &stalk(&a, &[0], -2));
        assert!(!is_exceptional(&a, &x));
        assert_eq!(hom_k_dim(&a, &x, &x, 2), 2);
    }

    #[test]
    fn iso_detection() {
        let a = ex211();
        let x = ex211_x(&a);
        assert!(iso_k(&a, &x, &x));
        // rescaled differential
        let mut y = x.clone();
        y.diffs[0] = a.amat_scale(&5, &y.diffs[0]);
        assert!(iso_k(&a, &x, &y));
        assert!(!iso_k(&a, &x, &shift(&a, &x, 1)));
        assert!(!is_indecomposable(&a, &stalk(&a, &[0, 1], 0)).unwrap());
    }
}
