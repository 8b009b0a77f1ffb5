//! Finite-dimensional left modules as quiver representations.
//!
//! A module has a vector space at each vertex and a matrix for each arrow
//! acting on column vectors, of shape `dim(target) x dim(source)`. Maps are
//! families of matrices, one per vertex. Right modules are handled as left
//! modules over the opposite algebra.

use serde::Serialize;

use crate::algebra::{AMat, AlgebraBasis, Path};
use crate::field::Field;
use crate::linalg::{
    intersect_spaces, is_zero_matrix, mat_mul, mat_sub, nullspace, Echelon, Matrix, QuotientBasis,
};

#[derive(Clone, Debug)]
pub struct Module<F: Field> {
    pub dims: Vec<usize>,
    pub mats: Vec<Matrix<F::Elem>>,
}

/// A submodule, as a basis (in reduced echelon form) of its space at each vertex.
#[derive(Clone, Debug)]
pub struct Submodule<F: Field> {
    pub spaces: Vec<Vec<Vec<F::Elem>>>,
}

#[derive(Clone, Debug)]
pub struct ModuleMap<F: Field> {
    pub mats: Vec<Matrix<F::Elem>>,
}

/// A quotient module with the chosen representatives of its basis.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub module: Module<F>,
    pub reps: Vec<Vec<Vec<F::Elem>>>,
    pub projection: ModuleMap<F>,
}

#[derive(Clone, Debug)]
pub struct StructuralParts<F: Field> {
    pub radical: Submodule<F>,
    pub socle: Submodule<F>,
    pub top: Quotient<F>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ResolutionStatus {
    Terminates { projective_dimension: usize },
    ExceedsCutoff { cutoff: usize },
}

#[derive(Clone, Debug)]
pub struct ResolutionTrace<F: Field> {
    /// Vertex labels of the indecomposable summands of `P^0, P^1, ...`.
    pub terms: Vec<Vec<usize>>,
    /// `differentials[i]` maps `P^{i+1}` to `P^i`.
    pub differentials: Vec<AMat<F::Elem>>,
    pub status: ResolutionStatus,
}

impl<F: Field> ResolutionTrace<F> {
    /// Multiplicity vector of each term.
    pub fn multiplicities(&self, n_vertices: usize) -> Vec<Vec<usize>> {
        self.terms
            .iter()
            .map(|t| (0..n_vertices).map(|v| t.iter().filter(|&&w| w == v).count()).collect())
            .collect()
    }
}

impl<F: Field> Module<F> {
    pub fn zero(f: &F, a: &AlgebraBasis<F>) -> Self {
        let n = a.n_vertices();
        Module {
            dims: vec![0; n],
            mats: a.quiver().arrows.iter().map(|_| Matrix::zeros(f, 0, 0)).collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
}

impl<F: Field> Submodule<F> {
    pub fn zero(n: usize) -> Self {
        Submodule { spaces: vec![Vec::new(); n] }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Vec::len).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
}

impl<F: Field> ModuleMap<F> {
    pub fn zero(f: &F, m: &Module<F>, n: &Module<F>) -> Self {
        ModuleMap { mats: m.dims.iter().zip(&n.dims).map(|(&dm, &dn)| Matrix::zeros(f, dn, dm)).collect() }
    }

    pub fn is_zero(&self, f: &F) -> bool {
        self.mats.iter().all(|m| is_zero_matrix(f, m))
    }
}

/// Matrix by which a path acts, `dim(target) x dim(source)`.
pub fn path_action<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>, p: &Path) -> Matrix<F::Elem> {
    let f = a.field();
    let mut out = Matrix::identity(f, m.dims[p.source]);
    for &arrow in p.arrows.iter().rev() {
        out = mat_mul(f, &m.mats[arrow], &out);
    }
    out
}

/// Whether every relation acts as zero and the matrix shapes fit.
pub fn is_module<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>) -> bool {
    let f = a.field();
    if m.dims.len() != a.n_vertices() || m.mats.len() != a.quiver().arrows.len() {
        return false;
    }
    for (arrow, mat) in a.quiver().arrows.iter().zip(&m.mats) {
        if mat.rows() != m.dims[arrow.target] || mat.cols() != m.dims[arrow.source] {
            return false;
        }
    }
    a.relations().iter().all(|rel| {
        let Some((_, first)) = rel.first() else { return true };
        let mut acc = Matrix::zeros(f, m.dims[first.target], m.dims[first.source]);
        for (c, p) in rel {
            let act = path_action(a, m, p);
            acc = crate::linalg::mat_add(f, &acc, &crate::linalg::mat_scale(f, c, &act));
        }
        is_zero_matrix(f, &acc)
    })
}

/// The indecomposable projective `A e_v`: at `w` the paths `v -> w`,
/// arrows acting by left multiplication.
pub fn projective<F: Field>(a: &AlgebraBasis<F>, v: usize) -> Module<F> {
    let f = a.field();
    let dims = a.projective_dims(v);
    let mats = a
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(i, arrow)| {
            let arrow_el = a.unit(a.arrow_index(i));
            let src = a.piece(v, arrow.source);
            let mut m = Matrix::zeros(f, dims[arrow.target], dims[arrow.source]);
            for (c, &k) in src.iter().enumerate() {
                let prod = a.mul(&arrow_el, &a.unit(k));
                for (r, val) in a.piece_coords(&prod, v, arrow.target).into_iter().enumerate() {
                    m.set(r, c, val);
                }
            }
            m
        })
        .collect();
    Module { dims, mats }
}

pub fn simple<F: Field>(a: &AlgebraBasis<F>, v: usize) -> Module<F> {
    let f = a.field();
    let dims: Vec<usize> = (0..a.n_vertices()).map(|w| usize::from(w == v)).collect();
    let mats =
        a.quiver().arrows.iter().map(|arrow| Matrix::zeros(f, dims[arrow.target], dims[arrow.source])).collect();
    Module { dims, mats }
}

pub fn direct_sum<F: Field>(f: &F, m: &Module<F>, n: &Module<F>) -> Module<F> {
    let dims: Vec<usize> = m.dims.iter().zip(&n.dims).map(|(x, y)| x + y).collect();
    let mats = m
        .mats
        .iter()
        .zip(&n.mats)
        .map(|(x, y)| {
            Matrix::from_fn(x.rows() + y.rows(), x.cols() + y.cols(), |r, c| {
                if r < x.rows() && c < x.cols() {
                    x.get(r, c).clone()
                } else if r >= x.rows() && c >= x.cols() {
                    y.get(r - x.rows(), c - x.cols()).clone()
                } else {
                    f.zero()
                }
            })
        })
        .collect();
    Module { dims, mats }
}

/// `A e_{labels[0]} + A e_{labels[1]} + ...`, blocks in the given order.
pub fn projective_sum<F: Field>(a: &AlgebraBasis<F>, labels: &[usize]) -> Module<F> {
    let f = a.field();
    labels.iter().fold(Module::zero(f, a), |acc, &v| direct_sum(f, &acc, &projective(a, v)))
}

/// Smallest submodule containing the given vectors (per vertex).
pub fn generate<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>, gens: &[Vec<Vec<F::Elem>>]) -> Submodule<F> {
    let f = a.field();
    let mut spaces: Vec<Echelon<F>> = m.dims.iter().map(|&d| Echelon::new(f, d)).collect();
    let mut work: Vec<(usize, Vec<F::Elem>)> = Vec::new();
    for (v, vs) in gens.iter().enumerate() {
        for x in vs {
            work.push((v, x.clone()));
        }
    }
    while let Some((v, x)) = work.pop() {
        if !spaces[v].insert(x.clone()) {
            continue;
        }
        for (i, arrow) in a.quiver().arrows.iter().enumerate() {
            if arrow.source == v {
                work.push((arrow.target, crate::linalg::mat_vec(f, &m.mats[i], &x)));
            }
        }
    }
    Submodule { spaces: spaces.into_iter().map(|e| e.basis().to_vec()).collect() }
}

/// Whether a family of subspaces is closed under the arrows.
pub fn is_submodule<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>, s: &Submodule<F>) -> bool {
    let f = a.field();
    a.quiver().arrows.iter().enumerate().all(|(i, arrow)| {
        let target = Echelon::from_vectors(f, m.dims[arrow.target], &s.spaces[arrow.target]);
        s.spaces[arrow.source].iter().all(|x| target.contains(&crate::linalg::mat_vec(f, &m.mats[i], x)))
    })
}

pub fn radical<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>) -> Submodule<F> {
    let f = a.field();
    let mut spaces: Vec<Echelon<F>> = m.dims.iter().map(|&d| Echelon::new(f, d)).collect();
    for (i, arrow) in a.quiver().arrows.iter().enumerate() {
        for c in 0..m.dims[arrow.source] {
            spaces[arrow.target].insert(m.mats[i].column(c));
        }
    }
    Submodule { spaces: spaces.into_iter().map(|e| e.basis().to_vec()).collect() }
}

/// Joint kernel of all arrows.
pub fn socle<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>) -> Submodule<F> {
    let f = a.field();
    let spaces = (0..a.n_vertices())
        .map(|v| {
            let eqs: Vec<Vec<F::Elem>> = a
                .quiver()
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, arrow)| arrow.source == v)
                .flat_map(|(i, _)| m.mats[i].to_rows())
                .collect();
            let k = nullspace(f, &eqs, m.dims[v]);
            Echelon::from_vectors(f, m.dims[v], &k).basis().to_vec()
        })
        .collect();
    Submodule { spaces }
}

pub fn structural_parts<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>) -> StructuralParts<F> {
    let rad = radical(a, m);
    let top = quotient(a, m, &rad);
    StructuralParts { radical: rad, socle: socle(a, m), top }
}

/// The submodule as a module in its own right (coordinates in its basis).
pub fn submodule_module<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>, s: &Submodule<F>) -> Module<F> {
    let f = a.field();
    let dims = s.dims();
    let echelons: Vec<Echelon<F>> =
        s.spaces.iter().zip(&m.dims).map(|(sp, &d)| Echelon::from_vectors(f, d, sp)).collect();
    let mats = a
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(i, arrow)| {
            let mut out = Matrix::zeros(f, dims[arrow.target], dims[arrow.source]);
            for (c, x) in s.spaces[arrow.source].iter().enumerate() {
                let y = crate::linalg::mat_vec(f, &m.mats[i], x);
                let coords = echelons[arrow.target].coordinates(&y).expect("not a submodule");
                for (r, val) in coords.into_iter().enumerate() {
                    out.set(r, c, val);
                }
            }
            out
        })
        .collect();
    Module { dims, mats }
}

/// `M / S`, representatives chosen among the standard basis vectors.
pub fn quotient<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>, s: &Submodule<F>) -> Quotient<F> {
    let f = a.field();
    let qbs: Vec<QuotientBasis<F>> = m
        .dims
        .iter()
        .enumerate()
        .map(|(v, &d)| {
            let units: Vec<Vec<F::Elem>> = (0..d).map(|k| crate::linalg::unit_vec(f, d, k)).collect();
            QuotientBasis::new(f, d, &s.spaces[v], &units)
        })
        .collect();
    let dims: Vec<usize> = qbs.iter().map(QuotientBasis::dim).collect();
    let mats = a
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(i, arrow)| {
            let mut out = Matrix::zeros(f, dims[arrow.target], dims[arrow.source]);
            for (c, x) in qbs[arrow.source].reps().iter().enumerate() {
                let y = crate::linalg::mat_vec(f, &m.mats[i], x);
                for (r, val) in qbs[arrow.target].coords(&y).unwrap().into_iter().enumerate() {
                    out.set(r, c, val);
                }
            }
            out
        })
        .collect();
    let projection = ModuleMap {
        mats: (0..m.dims.len())
            .map(|v| {
                let mut p = Matrix::zeros(f, dims[v], m.dims[v]);
                for k in 0..m.dims[v] {
                    let col = qbs[v].coords(&crate::linalg::unit_vec(f, m.dims[v], k)).unwrap();
                    for (r, val) in col.into_iter().enumerate() {
                        p.set(r, k, val);
                    }
                }
                p
            })
            .collect(),
    };
    Quotient { module: Module { dims, mats }, reps: qbs.iter().map(|q| q.reps().to_vec()).collect(), projection }
}

pub fn is_homomorphism<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>, n: &Module<F>, h: &ModuleMap<F>) -> bool {
    let f = a.field();
    a.quiver().arrows.iter().enumerate().all(|(i, arrow)| {
        let left = mat_mul(f, &n.mats[i], &h.mats[arrow.source]);
        let right = mat_mul(f, &h.mats[arrow.target], &m.mats[i]);
        is_zero_matrix(f, &mat_sub(f, &left, &right))
    })
}

/// Basis of `Hom_A(M, N)`, solving `N_a H_s = H_t M_a` for every arrow.
pub fn hom_modules<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>, n: &Module<F>) -> Vec<ModuleMap<F>> {
    let f = a.field();
    let nv = m.dims.len();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let nvars = offset[nv];
    // variable for H_v[r][c] at offset[v] + r * m.dims[v] + c
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let mut eqs = Vec::new();
    for (i, arrow) in a.quiver().arrows.iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                // sum_k N[r][k] H_s[k][c] - sum_k H_t[r][k] M[k][c]
                let mut eq = vec![f.zero(); nvars];
                for k in 0..n.dims[s] {
                    f.add_assign(&mut eq[var(s, k, c)], n.mats[i].get(r, k));
                }
                for k in 0..m.dims[t] {
                    let x = f.neg(m.mats[i].get(k, c));
                    f.add_assign(&mut eq[var(t, r, k)], &x);
                }
                eqs.push(eq);
            }
        }
    }
    nullspace(f, &eqs, nvars)
        .into_iter()
        .map(|sol| ModuleMap {
            mats: (0..nv)
                .map(|v| Matrix::from_fn(n.dims[v], m.dims[v], |r, c| sol[var(v, r, c)].clone()))
                .collect(),
        })
        .collect()
}

pub fn image<F: Field>(f: &F, n: &Module<F>, h: &ModuleMap<F>) -> Submodule<F> {
    Submodule {
        spaces: h
            .mats
            .iter()
            .zip(&n.dims)
            .map(|(mat, &d)| {
                let cols: Vec<Vec<F::Elem>> = (0..mat.cols()).map(|c| mat.column(c)).collect();
                Echelon::from_vectors(f, d, &cols).basis().to_vec()
            })
            .collect(),
    }
}

pub fn kernel<F: Field>(f: &F, m: &Module<F>, h: &ModuleMap<F>) -> Submodule<F> {
    Submodule {
        spaces: h
            .mats
            .iter()
            .zip(&m.dims)
            .map(|(mat, &d)| {
                let k = nullspace(f, &mat.to_rows(), d);
                Echelon::from_vectors(f, d, &k).basis().to_vec()
            })
            .collect(),
    }
}

pub fn sum_submodules<F: Field>(f: &F, m: &Module<F>, s: &Submodule<F>, t: &Submodule<F>) -> Submodule<F> {
    Submodule {
        spaces: (0..m.dims.len())
            .map(|v| {
                let mut e = Echelon::from_vectors(f, m.dims[v], &s.spaces[v]);
                for x in &t.spaces[v] {
                    e.insert(x.clone());
                }
                e.basis().to_vec()
            })
            .collect(),
    }
}

pub fn intersect_submodules<F: Field>(f: &F, m: &Module<F>, s: &Submodule<F>, t: &Submodule<F>) -> Submodule<F> {
    Submodule {
        spaces: (0..m.dims.len()).map(|v| intersect_spaces(f, &s.spaces[v], &t.spaces[v], m.dims[v])).collect(),
    }
}

/// Sum of the images of all maps `Q -> M`.
pub fn trace<F: Field>(a: &AlgebraBasis<F>, q: &Module<F>, m: &Module<F>) -> Submodule<F> {
    let f = a.field();
    hom_modules(a, q, m)
        .iter()
        .fold(Submodule::zero(m.dims.len()), |acc, h| sum_submodules(f, m, &acc, &image(f, m, h)))
}

/// Image of the universal map `Q^d -> M` built from a basis of `Hom(Q, M)`.
pub fn universal_image<F: Field>(a: &AlgebraBasis<F>, q: &Module<F>, m: &Module<F>) -> Submodule<F> {
    let f = a.field();
    let homs = hom_modules(a, q, m);
    let mats = (0..m.dims.len())
        .map(|v| {
            let total = q.dims[v] * homs.len();
            Matrix::from_fn(m.dims[v], total, |r, c| homs[c / q.dims[v]].mats[v].get(r, c % q.dims[v]).clone())
        })
        .collect();
    image(f, m, &ModuleMap { mats })
}

/// The dual `Hom_k(M, k)` as a module over the opposite algebra, whose
/// arrows carry the same indices with source and target swapped.
pub fn dual_module<F: Field>(m: &Module<F>) -> Module<F> {
    Module { dims: m.dims.clone(), mats: m.mats.iter().map(Matrix::transpose).collect() }
}

/// Projective cover `P -> M`: summand labels, and the map as a module map.
pub fn projective_cover<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>) -> (Vec<usize>, Vec<Vec<F::Elem>>, ModuleMap<F>) {
    let f = a.field();
    let top = quotient(a, m, &radical(a, m));
    let mut labels = Vec::new();
    let mut gens = Vec::new();
    for (v, reps) in top.reps.iter().enumerate() {
        for g in reps {
            labels.push(v);
            gens.push(g.clone());
        }
    }
    let mats = (0..a.n_vertices())
        .map(|w| {
            let mut cols = Vec::new();
            for (&v, g) in labels.iter().zip(&gens) {
                for &k in a.piece(v, w) {
                    let act = path_action(a, m, &a.basis()[k]);
                    cols.push(crate::linalg::mat_vec(f, &act, g));
                }
            }
            Matrix::from_fn(m.dims[w], cols.len(), |r, c| cols[c][r].clone())
        })
        .collect();
    (labels, gens, ModuleMap { mats })
}

/// Splits a coordinate vector of `(P_{labels...})_v` into algebra elements
/// of `e_v A e_{labels[j]}`.
pub fn projective_sum_elements<F: Field>(
    a: &AlgebraBasis<F>,
    labels: &[usize],
    v: usize,
    x: &[F::Elem],
) -> Vec<Vec<F::Elem>> {
    let mut at = 0;
    labels
        .iter()
        .map(|&w| {
            let len = a.piece(w, v).len();
            let el = a.from_piece_coords(&x[at..at + len], w, v);
            at += len;
            el
        })
        .collect()
}

/// Iterated projective covers of `M` up to `cutoff` syzygies.
pub fn min_resolution<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>, cutoff: usize) -> ResolutionTrace<F> {
    let f = a.field();
    let mut current = m.clone();
    // basis of the current syzygy inside the previous cover, per vertex
    let mut embedding: Option<(Vec<usize>, Submodule<F>)> = None;
    let mut terms = Vec::new();
    let mut differentials = Vec::new();
    for step in 0..=cutoff {
        let (labels, gens, map) = projective_cover(a, &current);
        if let Some((prev_labels, sub)) = &embedding {
            let mut d = a.amat_zero(&labels, prev_labels);
            for (r, (&v, g)) in labels.iter().zip(&gens).enumerate() {
                // g in coordinates of the syzygy basis; map into the previous cover
                let mut x = vec![f.zero(); sub.spaces[v].first().map_or(0, Vec::len)];
                for (c, b) in g.iter().zip(&sub.spaces[v]) {
                    crate::linalg::vec_axpy(f, &mut x, c, b);
                }
                for (c, el) in projective_sum_elements(a, prev_labels, v, &x).into_iter().enumerate() {
                    d.set(r, c, el);
                }
            }
            differentials.push(d);
        }
        terms.push(labels.clone());
        let cover = projective_sum(a, &labels);
        let ker = kernel(f, &cover, &map);
        if ker.is_zero() {
            return ResolutionTrace {
                terms,
                differentials,
                status: ResolutionStatus::Terminates { projective_dimension: step },
            };
        }
        current = submodule_module(a, &cover, &ker);
        embedding = Some((labels, ker));
    }
    ResolutionTrace { terms, differentials, status: ResolutionStatus::ExceedsCutoff { cutoff } }
}

/// `big / small` for submodules `small <= big` of `m`.
pub fn subquotient<F: Field>(
    a: &AlgebraBasis<F>,
    m: &Module<F>,
    big: &Submodule<F>,
    small: &Submodule<F>,
) -> Module<F> {
    let f = a.field();
    let inner = submodule_module(a, m, big);
    let spaces = (0..m.dims.len())
        .map(|v| {
            let e = Echelon::from_vectors(f, m.dims[v], &big.spaces[v]);
            small.spaces[v].iter().map(|x| e.coordinates(x).expect("not nested")).collect()
        })
        .collect();
    quotient(a, &inner, &Submodule { spaces }).module
}

/// Realizes an algebra matrix as a map between projective sums.
pub fn amat_module_map<F: Field>(a: &AlgebraBasis<F>, d: &AMat<F::Elem>) -> ModuleMap<F> {
    let mats = (0..a.n_vertices())
        .map(|v| {
            let rows_dim: usize = d.cols.iter().map(|&w| a.piece(w, v).len()).sum();
            let mut cols = Vec::new();
            for (r, &u) in d.rows.iter().enumerate() {
                for &k in a.piece(u, v) {
                    let p = a.unit(k);
                    let mut col = Vec::with_capacity(rows_dim);
                    for (c, &w) in d.cols.iter().enumerate() {
                        col.extend(a.piece_coords(&a.mul(&p, d.get(r, c)), w, v));
                    }
                    cols.push(col);
                }
            }
            Matrix::from_fn(rows_dim, cols.len(), |r, c| cols[c][r].clone())
        })
        .collect();
    ModuleMap { mats }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_algebra, DEFAULT_NILPOTENCY_CAP};
    use crate::field::PrimeField;

    fn ex211() -> AlgebraBasis<PrimeField> {
        let text = "vertex x\nvertex y\narrow d x x\narrow a x y\narrow r y y\nrel d*d\nrel r*r\nrel r*a\nrel a*d\n";
        parse_algebra(text, &PrimeField::new(101).unwrap(), DEFAULT_NILPOTENCY_CAP).unwrap()
    }

    #[test]
    fn projectives_and_socles() {
        let a = ex211();
        let px = projective(&a, 0);
        assert!(is_module(&a, &px));
        assert_eq!(px.dims, vec![2, 1]);
        assert_eq!(socle(&a, &px).dims(), vec![1, 1]);
        let py = projective(&a, 1);
        assert_eq!(radical(&a, &py).dims(), vec![0, 1]);
        assert_eq!(quotient(&a, &py, &radical(&a, &py)).module.dims, vec![0, 1]);
    }

    #[test]
    fn hom_dimensions_match_pieces() {
        let a = ex211();
        for i in 0..2 {
            for j in 0..2 {
                let h = hom_modules(&a, &projective(&a, i), &projective(&a, j));
                assert_eq!(h.len(), a.piece(j, i).len());
            }
        }
        assert_eq!(hom_modules(&a, &simple(&a, 0), &simple(&a, 1)).len(), 0);
        assert_eq!(hom_modules(&a, &projective(&a, 0), &simple(&a, 0)).len(), 1);
    }

    #[test]
    fn traces() {
        let a = ex211();
        let px = projective(&a, 0);
        let py = projective(&a, 1);
        let t = trace(&a, &py, &px);
        assert_eq!(t.dims(), vec![0, 1]);
        assert_eq!(universal_image(&a, &py, &px).dims(), vec![0, 1]);
        assert!(trace(&a, &px, &py).is_zero());
        assert_eq!(trace(&a, &px, &px).total_dim(), 3);
    }

    #[test]
    fn resolutions() {
        let a = ex211();
        let r = min_resolution(&a, &simple(&a, 1), 20);
        assert_eq!(r.status, ResolutionStatus::ExceedsCutoff { cutoff: 20 });
        assert!(r.terms.iter().all(|t| t == &vec![1]));
        assert!(r.differentials.iter().all(|d| a.amat_in_radical(d)));
        let p = min_resolution(&a, &projective(&a, 0), 5);
        assert_eq!(p.status, ResolutionStatus::Terminates { projective_dimension: 0 });
    }

    #[test]
    fn duals() {
        let a = ex211();
        let op = a.opposite().unwrap();
        let py = projective(&a, 1);
        let d = dual_module(&py);
        assert!(is_module(&op, &d));
        assert_eq!(d.total_dim(), 2);
    }
}
