//! Path algebras of quivers modulo admissible ideals.
//!
//! Arrows are stored in written order, so the path `r*a` (apply `a`, then
//! `r`) is `[r, a]`. A path from `i` to `j` lives in `e_j A e_i`.

pub mod amat;
mod basis;
pub mod cartan;
pub mod parse;
pub mod structure;
pub mod tensor;

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{vec_axpy, Matrix};

pub use amat::AMat;
pub use basis::{compute_basis, DEFAULT_NILPOTENCY_CAP};
pub use cartan::{cartan_coxeter, CartanData};
pub use parse::{parse_algebra, parse_presentation, Presentation, RawRelation};
pub use structure::{structure_of, trace_form_radical, Presented, StructureAlgebra};
pub use tensor::{build_tensor_family, random_tensor_spec, FamilyArrow, TensorFamilySpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>) -> Self {
        Quiver { vertices, arrows: Vec::new() }
    }

    pub fn add_arrow(&mut self, label: &str, source: usize, target: usize) -> usize {
        self.arrows.push(Arrow { label: label.to_string(), source, target });
        self.arrows.len() - 1
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let n = self.n_vertices();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    pub fn format_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// Builds the path with the given written arrow sequence, checking
    /// composability.
    pub fn path(&self, arrows: &[usize]) -> Option<Path> {
        let (&first, rest) = arrows.split_first()?;
        let mut source = self.arrows[first].source;
        for &a in rest {
            if self.arrows[a].target != source {
                return None;
            }
            source = self.arrows[a].source;
        }
        Some(Path { source, target: self.arrows[first].target, arrows: arrows.to_vec() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self * other`: first `other`, then `self`.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: other.source, target: self.target, arrows })
    }

    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }

    /// Graded-lexicographic sort key.
    pub fn order_key(&self) -> (usize, &[usize], usize) {
        (self.arrows.len(), &self.arrows, self.source)
    }
}

pub type Relation<E> = Vec<(E, Path)>;

/// An element of the algebra: coefficients over the global basis.
pub type Element<F> = Vec<<F as Field>::Elem>;

/// Normal-form basis and multiplication table of `kQ/I`.
#[derive(Clone, Debug)]
pub struct AlgebraBasis<F: Field> {
    field: F,
    quiver: Quiver,
    relations: Vec<Relation<F::Elem>>,
    basis: Vec<Path>,
    pieces: Vec<Vec<Vec<usize>>>,
    position_in_piece: Vec<usize>,
    table: Vec<Vec<Vec<(usize, F::Elem)>>>,
    nilpotency: usize,
}

impl<F: Field> AlgebraBasis<F> {
    pub(crate) fn from_parts(
        field: F,
        quiver: Quiver,
        relations: Vec<Relation<F::Elem>>,
        basis: Vec<Path>,
        table: Vec<Vec<Vec<(usize, F::Elem)>>>,
        nilpotency: usize,
    ) -> Self {
        let n = quiver.n_vertices();
        let mut pieces = vec![vec![Vec::new(); n]; n];
        let mut position_in_piece = vec![0; basis.len()];
        for (k, p) in basis.iter().enumerate() {
            position_in_piece[k] = pieces[p.source][p.target].len();
            pieces[p.source][p.target].push(k);
        }
        AlgebraBasis { field, quiver, relations, basis, pieces, position_in_piece, table, nilpotency }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation<F::Elem>] {
        &self.relations
    }

    pub fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency
    }

    /// Basis indices of `e_target A e_source` (paths `source -> target`).
    pub fn piece(&self, source: usize, target: usize) -> &[usize] {
        &self.pieces[source][target]
    }

    /// Normal-form paths spanning `e_j A e_i`.
    pub fn hom_piece(&self, i: usize, j: usize) -> Vec<&Path> {
        self.piece(i, j).iter().map(|&k| &self.basis[k]).collect()
    }

    pub fn position_in_piece(&self, k: usize) -> usize {
        self.position_in_piece[k]
    }

    /// Index of the trivial path `e_v`.
    pub fn idempotent_index(&self, v: usize) -> usize {
        v
    }

    /// Index of the arrow `a` in the basis.
    pub fn arrow_index(&self, a: usize) -> usize {
        self.n_vertices() + a
    }

    pub fn zero(&self) -> Element<F> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn one(&self) -> Element<F> {
        let mut x = self.zero();
        for v in 0..self.n_vertices() {
            x[v] = self.field.one();
        }
        x
    }

    pub fn unit(&self, k: usize) -> Element<F> {
        let mut x = self.zero();
        x[k] = self.field.one();
        x
    }

    pub fn idempotent(&self, v: usize) -> Element<F> {
        self.unit(v)
    }

    pub fn is_zero(&self, x: &[F::Elem]) -> bool {
        x.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, x: &[F::Elem], y: &[F::Elem]) -> Element<F> {
        x.iter().zip(y).map(|(a, b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[F::Elem], y: &[F::Elem]) -> Element<F> {
        x.iter().zip(y).map(|(a, b)| self.field.sub(a, b)).collect()
    }

    pub fn neg(&self, x: &[F::Elem]) -> Element<F> {
        x.iter().map(|a| self.field.neg(a)).collect()
    }

    pub fn scale(&self, c: &F::Elem, x: &[F::Elem]) -> Element<F> {
        x.iter().map(|a| self.field.mul(c, a)).collect()
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Element<F> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in &self.table[i][j] {
                    f.axpy(&mut out[*k], &ab, c);
                }
            }
        }
        out
    }

    /// `b_k * y` for a basis element `b_k`.
    pub fn mul_unit_left(&self, k: usize, y: &[F::Elem]) -> Element<F> {
        let f = &self.field;
        let mut out = self.zero();
        for (j, b) in y.iter().enumerate() {
            if !f.is_zero(b) {
                for (m, c) in &self.table[k][j] {
                    f.axpy(&mut out[*m], b, c);
                }
            }
        }
        out
    }

    /// `x * b_k` for a basis element `b_k`.
    pub fn mul_unit_right(&self, x: &[F::Elem], k: usize) -> Element<F> {
        let f = &self.field;
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if !f.is_zero(a) {
                for (m, c) in &self.table[i][k] {
                    f.axpy(&mut out[*m], a, c);
                }
            }
        }
        out
    }

    /// `out += x * y`
    pub fn mul_add(&self, out: &mut [F::Elem], x: &[F::Elem], y: &[F::Elem]) {
        let f = &self.field;
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in &self.table[i][j] {
                    f.axpy(&mut out[*k], &ab, c);
                }
            }
        }
    }

    /// Element represented by a written arrow sequence (zero if not composable).
    pub fn path_element(&self, arrows: &[usize]) -> Element<F> {
        match arrows.split_first() {
            None => self.one(),
            Some((&first, rest)) => {
                let mut x = self.unit(self.arrow_index(first));
                for &a in rest {
                    x = self.mul(&x, &self.unit(self.arrow_index(a)));
                }
                x
            }
        }
    }

    pub fn element_of_path(&self, p: &Path) -> Element<F> {
        if p.arrows.is_empty() {
            self.idempotent(p.source)
        } else {
            self.path_element(&p.arrows)
        }
    }

    pub fn relation_element(&self, r: &Relation<F::Elem>) -> Element<F> {
        let mut out = self.zero();
        for (c, p) in r {
            vec_axpy(&self.field, &mut out, c, &self.element_of_path(p));
        }
        out
    }

    /// Coefficient of `e_v` in `x`.
    pub fn scalar_part<'x>(&self, x: &'x [F::Elem], v: usize) -> &'x F::Elem {
        &x[v]
    }

    /// Whether `x` lies in the radical (no trivial-path component).
    pub fn in_radical(&self, x: &[F::Elem]) -> bool {
        (0..self.n_vertices()).all(|v| self.field.is_zero(&x[v]))
    }

    /// Whether `x` lies in `e_target A e_source`.
    pub fn in_piece(&self, x: &[F::Elem], source: usize, target: usize) -> bool {
        x.iter().enumerate().all(|(k, c)| {
            self.field.is_zero(c) || (self.basis[k].source == source && self.basis[k].target == target)
        })
    }

    /// Coordinates of `x` within the basis of its piece.
    pub fn piece_coords(&self, x: &[F::Elem], source: usize, target: usize) -> Vec<F::Elem> {
        self.piece(source, target).iter().map(|&k| x[k].clone()).collect()
    }

    pub fn from_piece_coords(&self, c: &[F::Elem], source: usize, target: usize) -> Element<F> {
        let mut x = self.zero();
        for (&k, v) in self.piece(source, target).iter().zip(c) {
            x[k] = v.clone();
        }
        x
    }

    /// Inverse of `x` in the local algebra `e_v A e_v`, for `x` with nonzero
    /// scalar part at `v`.
    pub fn local_inverse(&self, x: &[F::Elem], v: usize) -> Option<Element<F>> {
        let f = &self.field;
        let c_inv = f.inv(&x[v])?;
        // x = c (e - n) with n radical; x^{-1} = c^{-1} (e + n + n^2 + ...)
        let scaled = self.scale(&c_inv, x);
        let n = self.sub(&self.idempotent(v), &scaled);
        let mut acc = self.idempotent(v);
        let mut power = self.idempotent(v);
        for _ in 0..self.nilpotency + 1 {
            power = self.mul(&power, &n);
            if self.is_zero(&power) {
                break;
            }
            acc = self.add(&acc, &power);
        }
        Some(self.scale(&c_inv, &acc))
    }

    /// Matrix of left multiplication by `x` on the basis (row convention:
    /// row `k` is `x * b_k`).
    pub fn left_mul_matrix(&self, x: &[F::Elem]) -> Matrix<F::Elem> {
        let rows = (0..self.dim()).map(|k| self.mul(x, &self.unit(k))).collect();
        Matrix::from_rows(rows, self.dim())
    }

    pub fn format_element(&self, x: &[F::Elem]) -> String {
        let f = &self.field;
        let mut out = String::new();
        for (k, c) in x.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let p = self.quiver.format_path(&self.basis[k]);
            if !out.is_empty() {
                out.push_str(" + ");
            }
            if f.is_one(c) {
                out.push_str(&p);
            } else {
                let _ = write!(out, "{}*{}", f.format(c), p);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Nonzero `(basis index, coefficient)` pairs, as written `(path, coefficient)` strings.
    pub fn element_terms(&self, x: &[F::Elem]) -> Vec<(String, String)> {
        x.iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(k, c)| (self.quiver.format_path(&self.basis[k]), self.field.format(c)))
            .collect()
    }

    /// Parses a `(path, coefficient)` list back into an element.
    pub fn element_from_terms(&self, terms: &[(String, String)]) -> Result<Element<F>> {
        let mut x = self.zero();
        for (p, c) in terms {
            let k = self
                .basis
                .iter()
                .position(|b| self.quiver.format_path(b) == *p)
                .ok_or_else(|| Error::UnknownLabel(p.clone()))?;
            let c = self.field.parse(c).ok_or_else(|| Error::Invalid(format!("coefficient `{c}`")))?;
            x[k] = self.field.add(&x[k], &c);
        }
        Ok(x)
    }

    /// The opposite algebra: arrows reversed, relation paths reversed.
    pub fn opposite(&self) -> Result<AlgebraBasis<F>> {
        let rels = self
            .relations
            .iter()
            .map(|r| r.iter().map(|(c, p)| (c.clone(), p.reversed())).collect())
            .collect();
        compute_basis(&self.field, self.quiver.opposite(), rels, DEFAULT_NILPOTENCY_CAP.max(self.nilpotency))
    }

    /// Dimensions of `rad^k` for `k = 0..=N`.
    pub fn radical_power_dims(&self) -> Vec<usize> {
        (0..=self.nilpotency)
            .map(|k| self.basis.iter().filter(|p| p.len() >= k).count())
            .collect()
    }

    /// Dimension vector of the projective `A e_v` (indexed by target vertex).
    pub fn projective_dims(&self, v: usize) -> Vec<usize> {
        (0..self.n_vertices()).map(|w| self.piece(v, w).len()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    pub(crate) fn ex211() -> AlgebraBasis<PrimeField> {
        let text = "vertex x\nvertex y\narrow d x x\narrow a x y\narrow r y y\nrel d*d\nrel r*r\nrel r*a\nrel a*d\n";
        parse_algebra(text, &PrimeField::new(101).unwrap(), DEFAULT_NILPOTENCY_CAP).unwrap()
    }

    #[test]
    fn example_pieces() {
        let a = ex211();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.piece(0, 0).len(), 2);
        assert_eq!(a.piece(0, 1).len(), 1);
        assert_eq!(a.piece(1, 1).len(), 2);
        assert_eq!(a.piece(1, 0).len(), 0);
        assert_eq!(a.projective_dims(0), vec![2, 1]);
        assert_eq!(a.nilpotency_index(), 2);
    }

    #[test]
    fn products() {
        let a = ex211();
        let alpha = a.unit(a.arrow_index(1));
        let rho = a.unit(a.arrow_index(2));
        let delta = a.unit(a.arrow_index(0));
        assert!(a.is_zero(&a.mul(&rho, &alpha)));
        assert!(a.is_zero(&a.mul(&alpha, &delta)));
        assert!(a.is_zero(&a.mul(&delta, &alpha)));
        let ex = a.idempotent(0);
        assert_eq!(a.mul(&ex, &ex), ex);
        assert_eq!(a.mul(&alpha, &a.idempotent(0)), alpha);
    }

    #[test]
    fn local_inverse_in_truncated_polynomial_ring() {
        let text = "vertex x\narrow d x x\nrel d*d*d\n";
        let f = PrimeField::new(101).unwrap();
        let a = parse_algebra(text, &f, DEFAULT_NILPOTENCY_CAP).unwrap();
        let mut x = a.idempotent(0);
        x[a.arrow_index(0)] = 3;
        let inv = a.local_inverse(&x, 0).unwrap();
        assert_eq!(a.mul(&x, &inv), a.idempotent(0));
    }
}
