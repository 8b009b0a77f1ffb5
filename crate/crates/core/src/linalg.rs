//! Dense exact linear algebra over a [`Field`].
//!
//! Vectors are plain `Vec<F::Elem>`. Subspaces are kept in reduced row
//! echelon form; [`Echelon`] grows one vector at a time and is the main
//! workhorse for spans, membership tests and kernels.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { f.one() } else { f.zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }
}

pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch in product");
    let mut out = Matrix::zeros(f, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(i, k);
            if f.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let y = b.get(k, j);
                if !f.is_zero(y) {
                    let idx = i * b.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(x, y));
                }
            }
        }
    }
    out
}

pub fn mat_add<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(x, y)| f.add(x, y)).collect(),
    }
}

pub fn mat_sub<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(x, y)| f.sub(x, y)).collect(),
    }
}

pub fn mat_scale<F: Field>(f: &F, c: &F::Elem, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    Matrix { rows: a.rows, cols: a.cols, data: a.data.iter().map(|x| f.mul(c, x)).collect() }
}

/// `M v` for a column vector `v`.
pub fn mat_vec<F: Field>(f: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(m.cols, v.len());
    (0..m.rows)
        .map(|i| {
            let mut acc = f.zero();
            for (x, y) in m.row(i).iter().zip(v) {
                f.axpy(&mut acc, x, y);
            }
            acc
        })
        .collect()
}

pub fn is_zero_matrix<F: Field>(f: &F, m: &Matrix<F::Elem>) -> bool {
    m.data.iter().all(|x| f.is_zero(x))
}

pub fn is_zero_vec<F: Field>(f: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

pub fn vec_add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vec_sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vec_scale<F: Field>(f: &F, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|x| f.mul(c, x)).collect()
}

/// `a += c * b`
pub fn vec_axpy<F: Field>(f: &F, a: &mut [F::Elem], c: &F::Elem, b: &[F::Elem]) {
    if f.is_zero(c) {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        f.axpy(x, c, y);
    }
}

pub fn unit_vec<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

pub fn random_vec<F: Field, R: rand::Rng + ?Sized>(f: &F, n: usize, rng: &mut R) -> Vec<F::Elem> {
    (0..n).map(|_| f.random(rng)).collect()
}

/// Random linear combination of `basis`.
pub fn random_combination<F: Field, R: rand::Rng + ?Sized>(
    f: &F,
    basis: &[Vec<F::Elem>],
    len: usize,
    rng: &mut R,
) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); len];
    for b in basis {
        let c = f.random(rng);
        vec_axpy(f, &mut out, &c, b);
    }
    out
}

/// A subspace in reduced row echelon form, grown incrementally.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, ncols: usize) -> Self {
        Echelon { field: field.clone(), ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<'v>(field: &F, ncols: usize, vs: impl IntoIterator<Item = &'v Vec<F::Elem>>) -> Self
    where
        F::Elem: 'v,
    {
        let mut e = Self::new(field, ncols);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&j| !is_pivot[j]).collect()
    }

    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[p]) {
                let c = f.neg(&v[p]);
                vec_axpy(f, &mut v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        is_zero_vec(&self.field, &self.reduce(v))
    }

    /// Adds `v` to the span; returns false when it was already inside.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        let f = self.field.clone();
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).unwrap();
        v = vec_scale(&f, &inv, &v);
        for row in &mut self.rows {
            if !f.is_zero(&row[p]) {
                let c = f.neg(&row[p]);
                vec_axpy(&f, row, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Coordinates of `v` with respect to [`Echelon::basis`], if `v` lies in the span.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

pub fn rank<F: Field>(f: &F, rows: &[Vec<F::Elem>], ncols: usize) -> usize {
    Echelon::from_vectors(f, ncols, rows).dim()
}

pub fn rank_matrix<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    let mut e = Echelon::new(f, m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i).to_vec());
    }
    e.dim()
}

/// Basis of `{x : eq . x = 0 for every equation row}`.
pub fn nullspace<F: Field>(f: &F, eqs: &[Vec<F::Elem>], nvars: usize) -> Vec<Vec<F::Elem>> {
    let e = Echelon::from_vectors(f, nvars, eqs);
    let mut out = Vec::new();
    for j in e.free_columns() {
        let mut x = vec![f.zero(); nvars];
        x[j] = f.one();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            x[p] = f.neg(&row[j]);
        }
        out.push(x);
    }
    out
}

/// Basis of `{v : v M = 0}` (row vectors).
pub fn left_kernel<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let t = m.transpose();
    nullspace(f, &t.to_rows(), m.rows())
}

/// Basis of `{v : M v = 0}` (column vectors).
pub fn right_kernel<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    nullspace(f, &m.to_rows(), m.cols())
}

/// Solves `M x = b` for a column vector `x`.
pub fn solve<F: Field>(f: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(m.rows(), b.len());
    let n = m.cols();
    let rows: Vec<Vec<F::Elem>> = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let e = Echelon::from_vectors(f, n + 1, &rows);
    if e.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![f.zero(); n];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

pub fn inverse<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return Some(Matrix::zeros(f, 0, 0));
    }
    let rows: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend(unit_vec(f, n, i));
            r
        })
        .collect();
    let e = Echelon::from_vectors(f, 2 * n, &rows);
    if e.dim() < n || e.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_rows(e.rows.iter().map(|r| r[n..].to_vec()).collect(), n))
}

/// Expresses vectors in terms of a fixed generating list, remembering the
/// combination behind every echelon row.
#[derive(Clone, Debug)]
pub struct TrackedEchelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<Vec<F::Elem>>,
    combos: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    generators: usize,
}

impl<F: Field> TrackedEchelon<F> {
    pub fn new(field: &F, ncols: usize) -> Self {
        TrackedEchelon {
            field: field.clone(),
            ncols,
            rows: Vec::new(),
            combos: Vec::new(),
            pivots: Vec::new(),
            generators: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    fn reduce_tracked(&self, v: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let f = &self.field;
        let mut v = v.to_vec();
        let mut c = vec![f.zero(); self.generators];
        for ((row, combo), &p) in self.rows.iter().zip(&self.combos).zip(&self.pivots) {
            if !f.is_zero(&v[p]) {
                let k = f.neg(&v[p]);
                vec_axpy(f, &mut v, &k, row);
                for (ci, x) in c.iter_mut().zip(combo) {
                    f.axpy(ci, &k, x);
                }
            }
        }
        (v, c)
    }

    /// Registers the next generator; returns whether it was independent.
    pub fn push(&mut self, v: &[F::Elem]) -> bool {
        let f = self.field.clone();
        assert_eq!(v.len(), self.ncols);
        for c in &mut self.combos {
            c.push(f.zero());
        }
        self.generators += 1;
        let (mut r, mut c) = self.reduce_tracked(v);
        c[self.generators - 1] = f.one();
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).unwrap();
        r = vec_scale(&f, &inv, &r);
        c = vec_scale(&f, &inv, &c);
        for (row, combo) in self.rows.iter_mut().zip(self.combos.iter_mut()) {
            if !f.is_zero(&row[p]) {
                let k = f.neg(&row[p]);
                vec_axpy(&f, row, &k, &r);
                vec_axpy(&f, combo, &k, &c);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        self.combos.insert(at, c);
        true
    }

    /// Coefficients `c` with `v = sum c_i g_i` over the pushed generators.
    pub fn express(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = &self.field;
        let (r, c) = self.reduce_tracked(v);
        if !is_zero_vec(f, &r) {
            return None;
        }
        Some(c.iter().map(|x| f.neg(x)).collect())
    }
}

/// Coordinates in a quotient `Z / B`, with chosen representatives for a
/// basis of the quotient.
#[derive(Clone, Debug)]
pub struct QuotientBasis<F: Field> {
    tracker: TrackedEchelon<F>,
    sub_gens: usize,
    reps: Vec<Vec<F::Elem>>,
    rep_slots: Vec<usize>,
}

impl<F: Field> QuotientBasis<F> {
    /// `sub` spans `B`; `candidates` span `Z` (which must contain `B`).
    /// Representatives are the candidates independent modulo `B`, in order.
    pub fn new(f: &F, ncols: usize, sub: &[Vec<F::Elem>], candidates: &[Vec<F::Elem>]) -> Self {
        let mut tracker = TrackedEchelon::new(f, ncols);
        for b in sub {
            tracker.push(b);
        }
        let sub_gens = tracker.generators();
        let mut reps = Vec::new();
        let mut rep_slots = Vec::new();
        for z in candidates {
            let slot = tracker.generators();
            if tracker.push(z) {
                reps.push(z.clone());
                rep_slots.push(slot);
            }
        }
        QuotientBasis { tracker, sub_gens, reps, rep_slots }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn sub_dim(&self) -> usize {
        self.tracker.dim() - self.reps.len()
    }

    pub fn reps(&self) -> &[Vec<F::Elem>] {
        &self.reps
    }

    /// Coordinates of `z` modulo `B` in the representative basis; `None` if
    /// `z` is not in `Z`.
    pub fn coords(&self, z: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let c = self.tracker.express(z)?;
        debug_assert!(self.sub_gens <= c.len());
        Some(self.rep_slots.iter().map(|&s| c[s].clone()).collect())
    }

    /// Whether `z` lies in `B`.
    pub fn in_sub(&self, f: &F, z: &[F::Elem]) -> bool {
        self.coords(z).is_some_and(|c| is_zero_vec(f, &c))
    }
}

/// Minimal polynomial of a square matrix, monic, coefficients low to high.
pub fn minimal_polynomial<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<F::Elem> {
    let n = m.rows();
    let mut tracker = TrackedEchelon::new(f, n * n);
    let mut power = Matrix::identity(f, n);
    loop {
        if let Some(c) = tracker.express(power.entries()) {
            // power = sum c_i m^i
            let mut poly: Vec<F::Elem> = c.iter().map(|x| f.neg(x)).collect();
            poly.push(f.one());
            return poly;
        }
        tracker.push(power.entries());
        power = mat_mul(f, &power, m);
    }
}

/// Evaluates a polynomial (low to high) at a square matrix.
pub fn poly_at_matrix<F: Field>(f: &F, p: &[F::Elem], m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let n = m.rows();
    let mut acc = Matrix::zeros(f, n, n);
    for c in p.iter().rev() {
        acc = mat_mul(f, &acc, m);
        for i in 0..n {
            let v = f.add(acc.get(i, i), c);
            acc.set(i, i, v);
        }
    }
    acc
}

/// Characteristic polynomial `det(t I - M)` of a rational matrix, low to
/// high, by the Faddeev-LeVerrier recursion.
pub fn charpoly_rational(m: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = m.len();
    let mul = |a: &Vec<Vec<BigRational>>, b: &Vec<Vec<BigRational>>| {
        let mut out = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
        out
    };
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k)/k
        let mut next = mul(&m.to_vec(), &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = mul(&m.to_vec(), &mk);
        let tr: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

/// Determinant of an integer matrix (fraction-free elimination).
pub fn det_integer(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Inverse of a rational matrix.
pub fn inverse_rational(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let q = crate::field::RationalField;
    let n = m.len();
    let mat = Matrix::from_rows(m.to_vec(), n);
    inverse(&q, &mat).map(|inv| inv.to_rows())
}

/// Basis of the intersection of two subspaces given by spanning lists.
pub fn intersect_spaces<F: Field>(f: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>], n: usize) -> Vec<Vec<F::Elem>> {
    let a = Echelon::from_vectors(f, n, a);
    let b = Echelon::from_vectors(f, n, b);
    if a.dim() == 0 || b.dim() == 0 {
        return Vec::new();
    }
    // x = sum s_i a_i = sum t_j b_j
    let (ka, kb) = (a.dim(), b.dim());
    let eqs: Vec<Vec<F::Elem>> = (0..n)
        .map(|c| {
            let mut row: Vec<F::Elem> = a.basis().iter().map(|v| v[c].clone()).collect();
            row.extend(b.basis().iter().map(|v| f.neg(&v[c])));
            row
        })
        .collect();
    let mut out = Echelon::new(f, n);
    for sol in nullspace(f, &eqs, ka + kb) {
        let mut x = vec![f.zero(); n];
        for (s, v) in sol[..ka].iter().zip(a.basis()) {
            vec_axpy(f, &mut x, s, v);
        }
        out.insert(x);
    }
    out.basis().to_vec()
}

/// Whether the span of `a` lies inside the span of `b`.
pub fn span_contained<F: Field>(f: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>], n: usize) -> bool {
    let b = Echelon::from_vectors(f, n, b);
    a.iter().all(|v| b.contains(v))
}

/// Vectors orthogonal to every vector of `a` under the standard pairing.
pub fn annihilator<F: Field>(f: &F, a: &[Vec<F::Elem>], n: usize) -> Vec<Vec<F::Elem>> {
    nullspace(f, a, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn fp() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn echelon_membership_and_kernel() {
        let f = fp();
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        let e = Echelon::from_vectors(&f, 3, &rows);
        assert_eq!(e.dim(), 2);
        assert!(e.contains(&[1, 3, 4]));
        let ker = nullspace(&f, &rows, 3);
        assert_eq!(ker.len(), 1);
        for r in &rows {
            let dot = r.iter().zip(&ker[0]).fold(0, |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn inverse_and_solve() {
        let f = fp();
        let m = Matrix::from_rows(vec![vec![2, 1], vec![1, 1]], 2);
        let inv = inverse(&f, &m).unwrap();
        assert_eq!(mat_mul(&f, &m, &inv), Matrix::identity(&f, 2));
        let x = solve(&f, &m, &[3, 2]).unwrap();
        assert_eq!(mat_vec(&f, &m, &x), vec![3, 2]);
        let sing = Matrix::from_rows(vec![vec![1, 1], vec![1, 1]], 2);
        assert!(inverse(&f, &sing).is_none());
        assert!(solve(&f, &sing, &[1, 0]).is_none());
    }

    #[test]
    fn quotient_coordinates() {
        let f = fp();
        let sub = vec![vec![1, 0, 0]];
        let cands = vec![vec![1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]];
        let q = QuotientBasis::new(&f, 3, &sub, &cands);
        assert_eq!(q.dim(), 2);
        assert_eq!(q.coords(&[5, 2, 3]), Some(vec![2, 3]));
        assert!(q.in_sub(&f, &[7, 0, 0]));
    }

    #[test]
    fn minimal_polynomial_of_jordan_block() {
        let f = fp();
        let m = Matrix::from_rows(vec![vec![2, 1, 0], vec![0, 2, 0], vec![0, 0, 2]], 3);
        // (t - 2)^2 = t^2 - 4t + 4
        assert_eq!(minimal_polynomial(&f, &m), vec![4, f.from_i64(-4), 1]);
        assert!(is_zero_matrix(&f, &poly_at_matrix(&f, &minimal_polynomial(&f, &m), &m)));
    }

    #[test]
    fn rational_charpoly_and_det() {
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        let m = vec![vec![r(0), r(-1)], vec![r(1), r(0)]];
        assert_eq!(charpoly_rational(&m), vec![r(1), r(0), r(1)]);
        let d = det_integer(&[
            vec![BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(1)],
        ]);
        assert_eq!(d, BigInt::from(1));
    }
}
