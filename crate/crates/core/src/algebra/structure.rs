//! Finite-dimensional algebras given by structure constants, and their
//! quiver presentations.
//!
//! Used for endomorphism algebras of complexes and for corner algebras.
//! Given a complete set of primitive orthogonal idempotents and the
//! radical, arrows are read off from `rad / rad^2` piece by piece and the
//! relations are the kernel of the path evaluation map.

use super::{compute_basis, AlgebraBasis, Path, Quiver, Relation, DEFAULT_NILPOTENCY_CAP};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{is_zero_vec, left_kernel, nullspace, vec_axpy, Echelon, Matrix};

const PATH_EVALUATION_CAP: usize = 20_000;

#[derive(Clone, Debug)]
pub struct StructureAlgebra<F: Field> {
    field: F,
    dim: usize,
    table: Vec<Vec<Vec<F::Elem>>>,
    idempotents: Vec<Vec<F::Elem>>,
    labels: Vec<String>,
    radical: Option<Vec<Vec<F::Elem>>>,
}

/// Quiver presentation of a [`StructureAlgebra`].
#[derive(Clone, Debug)]
pub struct Presented<F: Field> {
    pub algebra: AlgebraBasis<F>,
    /// The chosen arrow elements, in the structure algebra's coordinates.
    pub arrow_elements: Vec<Vec<F::Elem>>,
    pub radical_dim: usize,
}

impl<F: Field> StructureAlgebra<F> {
    /// `table[i][j]` is the product `b_i * b_j` in coordinates.
    pub fn new(
        field: &F,
        table: Vec<Vec<Vec<F::Elem>>>,
        idempotents: Vec<Vec<F::Elem>>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let dim = table.len();
        let alg = StructureAlgebra { field: field.clone(), dim, table, idempotents, labels, radical: None };
        alg.validate()?;
        Ok(alg)
    }

    /// Supplies the radical instead of computing it from the trace form.
    pub fn with_radical(mut self, radical: Vec<Vec<F::Elem>>) -> Self {
        self.radical = Some(radical);
        self
    }

    fn validate(&self) -> Result<()> {
        let f = &self.field;
        let one = self.one();
        for k in 0..self.dim {
            let b = self.unit(k);
            if self.mul(&one, &b) != b || self.mul(&b, &one) != b {
                return Err(Error::Invalid("idempotents do not sum to the identity".into()));
            }
        }
        for (i, e) in self.idempotents.iter().enumerate() {
            for (j, g) in self.idempotents.iter().enumerate() {
                let p = self.mul(e, g);
                let expect = if i == j { e.clone() } else { vec![f.zero(); self.dim] };
                if p != expect {
                    return Err(Error::Invalid("idempotents are not orthogonal".into()));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn idempotents(&self) -> &[Vec<F::Elem>] {
        &self.idempotents
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self, k: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[k] = self.field.one();
        v
    }

    pub fn one(&self) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        for e in &self.idempotents {
            v = v.iter().zip(e).map(|(a, b)| self.field.add(a, b)).collect();
        }
        v
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                vec_axpy(f, &mut out, &f.mul(a, b), &self.table[i][j]);
            }
        }
        out
    }

    pub fn opposite(&self) -> Self {
        let table = (0..self.dim).map(|i| (0..self.dim).map(|j| self.table[j][i].clone()).collect()).collect();
        StructureAlgebra {
            field: self.field.clone(),
            dim: self.dim,
            table,
            idempotents: self.idempotents.clone(),
            labels: self.labels.clone(),
            radical: self.radical.clone(),
        }
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = &self.table[i][j];
                for k in 0..self.dim {
                    let left = self.mul(ij, &self.unit(k));
                    let right = self.mul(&self.unit(i), &self.table[j][k]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The radical: supplied, or the kernel of the trace form
    /// `(x, y) -> tr(L_{xy})`, valid in characteristic 0 or above the dimension.
    pub fn radical(&self) -> Result<Vec<Vec<F::Elem>>> {
        if let Some(r) = &self.radical {
            return Ok(r.clone());
        }
        trace_form_radical(&self.field, &self.table)
    }

    fn span(&self, vs: impl IntoIterator<Item = Vec<F::Elem>>) -> Echelon<F> {
        let mut e = Echelon::new(&self.field, self.dim);
        for v in vs {
            e.insert(v);
        }
        e
    }

    /// Basis of `e_target B e_source` intersected with the span of `vs`
    /// (which must be closed under the idempotent projections).
    fn piece_of(&self, vs: &[Vec<F::Elem>], source: usize, target: usize) -> Vec<Vec<F::Elem>> {
        let et = &self.idempotents[target];
        let es = &self.idempotents[source];
        let e = self.span(vs.iter().map(|v| self.mul(&self.mul(et, v), es)));
        e.basis().to_vec()
    }

    /// `dim e_target B e_source` for every pair.
    pub fn piece_dims(&self) -> Vec<Vec<usize>> {
        let n = self.idempotents.len();
        let all: Vec<Vec<F::Elem>> = (0..self.dim).map(|k| self.unit(k)).collect();
        (0..n).map(|s| (0..n).map(|t| self.piece_of(&all, s, t).len()).collect()).collect()
    }

    /// Quiver with relations presenting this algebra, with vertex `i`
    /// corresponding to idempotent `i`. Arrows are named `{prefix}1, ...`.
    pub fn present(&self, arrow_prefix: &str) -> Result<Presented<F>> {
        self.present_named(|k, _| format!("{arrow_prefix}{}", k + 1))
    }

    /// Like [`Self::present`], naming arrow `k` (with element `x`) by `name(k, x)`.
    pub fn present_named(&self, name: impl Fn(usize, &[F::Elem]) -> String) -> Result<Presented<F>> {
        let f = &self.field;
        let n = self.idempotents.len();
        let rad = self.radical()?;
        let rad_echelon = self.span(rad.iter().cloned());
        let rad = rad_echelon.basis().to_vec();
        let mut rad2 = Vec::new();
        for x in &rad {
            for y in &rad {
                rad2.push(self.mul(x, y));
            }
        }
        let rad2 = self.span(rad2).basis().to_vec();

        let mut quiver = Quiver::new(self.labels.clone());
        let mut arrow_elements = Vec::new();
        for s in 0..n {
            for t in 0..n {
                let mut e = Echelon::new(f, self.dim);
                for v in self.piece_of(&rad2, s, t) {
                    e.insert(v);
                }
                for v in self.piece_of(&rad, s, t) {
                    if e.insert(v.clone()) {
                        let label = name(quiver.arrows.len(), &v);
                        quiver.add_arrow(&label, s, t);
                        arrow_elements.push(v);
                    }
                }
            }
        }

        // nilpotency of the radical
        let mut power = rad.clone();
        let mut nil = 1;
        while !power.is_empty() {
            let mut next = Vec::new();
            for x in &power {
                for y in &rad {
                    next.push(self.mul(x, y));
                }
            }
            power = self.span(next).basis().to_vec();
            nil += 1;
            if nil > DEFAULT_NILPOTENCY_CAP {
                return Err(Error::Invalid("radical is not nilpotent".into()));
            }
        }
        // paths of length 2..=nil evaluated in the algebra
        let mut level: Vec<(Path, Vec<F::Elem>)> = (0..quiver.arrows.len())
            .map(|a| (quiver.path(&[a]).unwrap(), arrow_elements[a].clone()))
            .collect();
        let mut by_stratum: std::collections::BTreeMap<(usize, usize), Vec<(Path, Vec<F::Elem>)>> =
            Default::default();
        let mut total = 0;
        for _ in 2..=nil {
            let mut next = Vec::new();
            for (p, v) in &level {
                for (a, arrow) in quiver.arrows.iter().enumerate() {
                    if arrow.source == p.target {
                        let mut arrows = vec![a];
                        arrows.extend_from_slice(&p.arrows);
                        let q = Path { source: p.source, target: arrow.target, arrows };
                        let w = self.mul(&arrow_elements[a], v);
                        next.push((q, w));
                    }
                }
            }
            total += next.len();
            if total > PATH_EVALUATION_CAP {
                return Err(Error::PathCap(PATH_EVALUATION_CAP));
            }
            for (q, w) in &next {
                by_stratum.entry((q.source, q.target)).or_default().push((q.clone(), w.clone()));
            }
            // paths evaluating to zero need no further extension beyond the relation
            level = next.into_iter().filter(|(_, w)| !is_zero_vec(f, w)).collect();
            if level.is_empty() {
                break;
            }
        }
        let mut relations: Vec<Relation<F::Elem>> = Vec::new();
        for paths in by_stratum.values() {
            let eqs: Vec<Vec<F::Elem>> =
                (0..self.dim).map(|c| paths.iter().map(|(_, w)| w[c].clone()).collect()).collect();
            for kv in nullspace(f, &eqs, paths.len()) {
                let rel: Relation<F::Elem> = kv
                    .iter()
                    .zip(paths)
                    .filter(|(c, _)| !f.is_zero(c))
                    .map(|(c, (p, _))| (c.clone(), p.clone()))
                    .collect();
                relations.push(rel);
            }
        }
        let algebra = compute_basis(f, quiver, relations, DEFAULT_NILPOTENCY_CAP)?;
        if algebra.dim() != self.dim {
            return Err(Error::Invalid(format!(
                "presentation has dimension {} but the algebra has dimension {}",
                algebra.dim(),
                self.dim
            )));
        }
        Ok(Presented { algebra, arrow_elements, radical_dim: rad.len() })
    }
}

/// Radical of an algebra given by structure constants (`table[i][j]` is
/// `b_i b_j`), as the kernel of the trace form `(x, y) -> tr(L_{xy})`.
/// Needs characteristic 0 or larger than the dimension.
pub fn trace_form_radical<F: Field>(f: &F, table: &[Vec<Vec<F::Elem>>]) -> Result<Vec<Vec<F::Elem>>> {
    let dim = table.len();
    let p = f.characteristic();
    if p != 0 && p as usize <= dim {
        return Err(Error::FieldTooSmall { p, dim });
    }
    // tr(L_{b_k}) = sum_m (b_k b_m)[m]
    let traces: Vec<F::Elem> = (0..dim)
        .map(|k| (0..dim).fold(f.zero(), |acc, m| f.add(&acc, &table[k][m][m])))
        .collect();
    let mut gram = Matrix::zeros(f, dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut tr = f.zero();
            for (k, c) in table[i][j].iter().enumerate() {
                if !f.is_zero(c) {
                    f.axpy(&mut tr, c, &traces[k]);
                }
            }
            gram.set(i, j, tr);
        }
    }
    Ok(left_kernel(f, &gram))
}

/// The structure algebra of an [`AlgebraBasis`] with its vertex idempotents.
pub fn structure_of<F: Field>(a: &AlgebraBasis<F>) -> StructureAlgebra<F> {
    let dim = a.dim();
    let table = (0..dim)
        .map(|i| (0..dim).map(|j| a.mul(&a.unit(i), &a.unit(j))).collect())
        .collect();
    let idempotents = (0..a.n_vertices()).map(|v| a.idempotent(v)).collect();
    let radical = (a.n_vertices()..dim).map(|k| a.unit(k)).collect();
    StructureAlgebra {
        field: a.field().clone(),
        dim,
        table,
        idempotents,
        labels: a.quiver().vertices.clone(),
        radical: Some(radical),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::field::PrimeField;

    #[test]
    fn represent_round_trip() {
        let f = PrimeField::new(101).unwrap();
        let text = "vertex x\nvertex y\narrow d x x\narrow a x y\narrow r y y\nrel d*d\nrel r*r\nrel r*a\nrel a*d\n";
        let a = parse_algebra(text, &f, DEFAULT_NILPOTENCY_CAP).unwrap();
        let s = structure_of(&a);
        assert!(s.is_associative());
        let trace_rad = StructureAlgebra::new(&f, s.table.clone(), s.idempotents.clone(), s.labels.clone())
            .unwrap()
            .radical()
            .unwrap();
        assert_eq!(trace_rad.len(), 3);
        let p = s.present("g").unwrap();
        assert_eq!(p.algebra.dim(), 5);
        assert_eq!(p.algebra.quiver().arrows.len(), 3);
        assert_eq!(s.piece_dims(), vec![vec![2, 1], vec![0, 2]]);
    }
}
