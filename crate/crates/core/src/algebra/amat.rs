//! Matrices with entries in the algebra, describing maps between direct
//! sums of indecomposable projectives.
//!
//! Row `r` stands for a summand `A e_{rows[r]}` of the source, column `c`
//! for a summand `A e_{cols[c]}` of the target, and the entry lies in
//! `e_{rows[r]} A e_{cols[c]}`, acting by right multiplication. The
//! composite "`F` then `G`" is the product `F G`.

use super::{AlgebraBasis, Element};
use crate::field::Field;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AMat<E> {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub entries: Vec<Vec<Vec<E>>>,
}

impl<E: Clone> AMat<E> {
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &[E] {
        &self.entries[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Vec<E>) {
        self.entries[r][c] = x;
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        AMat {
            rows: rows.iter().map(|&r| self.rows[r]).collect(),
            cols: cols.iter().map(|&c| self.cols[c]).collect(),
            entries: rows.iter().map(|&r| cols.iter().map(|&c| self.entries[r][c].clone()).collect()).collect(),
        }
    }
}

impl<F: Field> AlgebraBasis<F> {
    pub fn amat_zero(&self, rows: &[usize], cols: &[usize]) -> AMat<F::Elem> {
        AMat {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
            entries: vec![vec![self.zero(); cols.len()]; rows.len()],
        }
    }

    pub fn amat_identity(&self, labels: &[usize]) -> AMat<F::Elem> {
        let mut m = self.amat_zero(labels, labels);
        for (i, &v) in labels.iter().enumerate() {
            m.entries[i][i] = self.idempotent(v);
        }
        m
    }

    pub fn amat_mul(&self, x: &AMat<F::Elem>, y: &AMat<F::Elem>) -> AMat<F::Elem> {
        debug_assert_eq!(x.cols, y.rows);
        let mut out = self.amat_zero(&x.rows, &y.cols);
        for r in 0..x.n_rows() {
            for k in 0..x.n_cols() {
                let a = &x.entries[r][k];
                if self.is_zero(a) {
                    continue;
                }
                for c in 0..y.n_cols() {
                    let b = &y.entries[k][c];
                    if !self.is_zero(b) {
                        self.mul_add(&mut out.entries[r][c], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn amat_add(&self, x: &AMat<F::Elem>, y: &AMat<F::Elem>) -> AMat<F::Elem> {
        self.amat_zip(x, y, |a, b| self.add(a, b))
    }

    pub fn amat_sub(&self, x: &AMat<F::Elem>, y: &AMat<F::Elem>) -> AMat<F::Elem> {
        self.amat_zip(x, y, |a, b| self.sub(a, b))
    }

    fn amat_zip(
        &self,
        x: &AMat<F::Elem>,
        y: &AMat<F::Elem>,
        op: impl Fn(&[F::Elem], &[F::Elem]) -> Element<F>,
    ) -> AMat<F::Elem> {
        debug_assert_eq!((&x.rows, &x.cols), (&y.rows, &y.cols));
        AMat {
            rows: x.rows.clone(),
            cols: x.cols.clone(),
            entries: x
                .entries
                .iter()
                .zip(&y.entries)
                .map(|(rx, ry)| rx.iter().zip(ry).map(|(a, b)| op(a, b)).collect())
                .collect(),
        }
    }

    pub fn amat_scale(&self, c: &F::Elem, x: &AMat<F::Elem>) -> AMat<F::Elem> {
        AMat {
            rows: x.rows.clone(),
            cols: x.cols.clone(),
            entries: x.entries.iter().map(|row| row.iter().map(|a| self.scale(c, a)).collect()).collect(),
        }
    }

    pub fn amat_neg(&self, x: &AMat<F::Elem>) -> AMat<F::Elem> {
        self.amat_scale(&self.field().neg(&self.field().one()), x)
    }

    pub fn amat_is_zero(&self, x: &AMat<F::Elem>) -> bool {
        x.entries.iter().all(|row| row.iter().all(|a| self.is_zero(a)))
    }

    /// Whether every entry lies in the radical.
    pub fn amat_in_radical(&self, x: &AMat<F::Elem>) -> bool {
        x.entries.iter().all(|row| row.iter().all(|a| self.in_radical(a)))
    }

    /// Whether every entry lies in its prescribed piece.
    pub fn amat_well_typed(&self, x: &AMat<F::Elem>) -> bool {
        x.entries.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(c, a)| self.in_piece(a, x.cols[c], x.rows[r]))
        })
    }

    /// Reduction modulo the radical: the scalar matrix of trivial-path
    /// coefficients (zero between different vertices).
    pub fn amat_scalar(&self, x: &AMat<F::Elem>) -> Matrix<F::Elem> {
        let f = self.field();
        Matrix::from_fn(x.n_rows(), x.n_cols(), |r, c| {
            if x.rows[r] == x.cols[c] {
                x.entries[r][c][x.rows[r]].clone()
            } else {
                f.zero()
            }
        })
    }

    /// Scalar matrix lifted back to the algebra.
    pub fn amat_from_scalar(&self, rows: &[usize], cols: &[usize], s: &Matrix<F::Elem>) -> AMat<F::Elem> {
        let mut m = self.amat_zero(rows, cols);
        for (r, &u) in rows.iter().enumerate() {
            for (c, &w) in cols.iter().enumerate() {
                if u == w {
                    m.entries[r][c] = self.scale(s.get(r, c), &self.idempotent(u));
                }
            }
        }
        m
    }

    /// Block diagonal sum.
    pub fn amat_block_diag(&self, x: &AMat<F::Elem>, y: &AMat<F::Elem>) -> AMat<F::Elem> {
        let rows: Vec<usize> = x.rows.iter().chain(&y.rows).copied().collect();
        let cols: Vec<usize> = x.cols.iter().chain(&y.cols).copied().collect();
        let mut m = self.amat_zero(&rows, &cols);
        for r in 0..x.n_rows() {
            for c in 0..x.n_cols() {
                m.entries[r][c] = x.entries[r][c].clone();
            }
        }
        for r in 0..y.n_rows() {
            for c in 0..y.n_cols() {
                m.entries[x.n_rows() + r][x.n_cols() + c] = y.entries[r][c].clone();
            }
        }
        m
    }

    /// `[[a, b], [c, d]]` assembled from blocks with compatible labels.
    pub fn amat_blocks(
        &self,
        a: &AMat<F::Elem>,
        b: &AMat<F::Elem>,
        c: &AMat<F::Elem>,
        d: &AMat<F::Elem>,
    ) -> AMat<F::Elem> {
        debug_assert_eq!(a.rows, b.rows);
        debug_assert_eq!(c.rows, d.rows);
        debug_assert_eq!(a.cols, c.cols);
        debug_assert_eq!(b.cols, d.cols);
        let rows: Vec<usize> = a.rows.iter().chain(&c.rows).copied().collect();
        let cols: Vec<usize> = a.cols.iter().chain(&b.cols).copied().collect();
        let mut m = self.amat_zero(&rows, &cols);
        let (ra, ca) = (a.n_rows(), a.n_cols());
        for (src, dr, dc) in [(a, 0, 0), (b, 0, ca), (c, ra, 0), (d, ra, ca)] {
            for r in 0..src.n_rows() {
                for col in 0..src.n_cols() {
                    m.entries[dr + r][dc + col] = src.entries[r][col].clone();
                }
            }
        }
        m
    }

    /// Coordinates of all entries, concatenated piece by piece.
    pub fn amat_coords(&self, x: &AMat<F::Elem>) -> Vec<F::Elem> {
        let mut out = Vec::new();
        for (r, row) in x.entries.iter().enumerate() {
            for (c, a) in row.iter().enumerate() {
                out.extend(self.piece_coords(a, x.cols[c], x.rows[r]));
            }
        }
        out
    }

    /// Number of coordinates used by [`Self::amat_coords`].
    pub fn amat_coord_len(&self, rows: &[usize], cols: &[usize]) -> usize {
        rows.iter().map(|&u| cols.iter().map(|&w| self.piece(w, u).len()).sum::<usize>()).sum()
    }

    pub fn amat_from_coords(&self, rows: &[usize], cols: &[usize], coords: &[F::Elem]) -> AMat<F::Elem> {
        let mut m = self.amat_zero(rows, cols);
        let mut at = 0;
        for (r, &u) in rows.iter().enumerate() {
            for (c, &w) in cols.iter().enumerate() {
                let len = self.piece(w, u).len();
                m.entries[r][c] = self.from_piece_coords(&coords[at..at + len], w, u);
                at += len;
            }
        }
        m
    }

    pub fn amat_format(&self, x: &AMat<F::Elem>) -> Vec<Vec<String>> {
        x.entries.iter().map(|row| row.iter().map(|a| self.format_element(a)).collect()).collect()
    }
}
