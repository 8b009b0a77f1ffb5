//! Endomorphism algebras of perfect complexes in the homotopy category.
//!
//! The presentation is of `Gamma = End(T)^op`, so that an arrow `s -> t`
//! is a map from summand `t` to summand `s`. With this convention the
//! stalk complex of the regular module gives back the algebra itself.

use itertools::Itertools;

use crate::algebra::{AlgebraBasis, Presented, StructureAlgebra};
use crate::complexes::{decompose, direct_sum_all, end_algebra_with, ChainMap, EndAlgebra, PerfectComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{is_zero_vec, vec_axpy, Echelon};

/// Bound on the number of correction tuples tried per vertex bijection.
const MATCH_CAP: usize = 200_000;
/// Coefficients used for the corrections in `rad^2`.
const CORRECTION_COEFFS: [i64; 5] = [0, 1, -1, 2, -2];

#[derive(Clone, Debug)]
pub struct EndoPresentation<F: Field> {
    /// Indecomposable summands; summand `k` is vertex `k` of the quiver.
    pub summands: Vec<PerfectComplex<F::Elem>>,
    /// Homotopy classes of `End(T)` with `b_p b_q = b_p` after `b_q`.
    pub end: EndAlgebra<F::Elem>,
    /// Projections onto the summands, in the coordinates of `end`.
    pub idempotents: Vec<Vec<F::Elem>>,
    pub gamma: StructureAlgebra<F>,
    pub presented: Presented<F>,
    /// Presentation of `End(T)` itself.
    pub end_presented: Presented<F>,
}

/// An isomorphism from a presented algebra onto `Gamma`.
#[derive(Clone, Debug)]
pub struct AlgebraMatch<E> {
    /// Vertex `v` of the target goes to vertex `vertex_map[v]` of `Gamma`.
    pub vertex_map: Vec<usize>,
    /// Images of the target's arrows in the coordinates of `end`.
    pub arrow_images: Vec<Vec<E>>,
    /// Relations of the target, each verified to vanish in `Gamma`.
    pub verified: Vec<String>,
}

impl<F: Field> EndoPresentation<F> {
    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    pub fn algebra(&self) -> &AlgebraBasis<F> {
        &self.presented.algebra
    }

    /// `counts[s][t]` arrows from `s` to `t`.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        arrow_counts(self.algebra())
    }

    /// Looks for an isomorphism `target -> Gamma` sending each arrow to the
    /// matching arrow of `Gamma` plus a correction in `rad^2`. A hit is an
    /// exact certificate; `None` only means none was found.
    pub fn find_isomorphism(&self, target: &AlgebraBasis<F>) -> Option<AlgebraMatch<F::Elem>> {
        match_presentation(&self.gamma, &self.presented, target)
    }

    /// Like [`Self::find_isomorphism`], onto `End(T)` instead of `Gamma`.
    pub fn find_end_isomorphism(&self, target: &AlgebraBasis<F>) -> Option<AlgebraMatch<F::Elem>> {
        match_presentation(&self.gamma.opposite(), &self.end_presented, target)
    }
}

fn arrow_counts<F: Field>(a: &AlgebraBasis<F>) -> Vec<Vec<usize>> {
    let n = a.n_vertices();
    let mut c = vec![vec![0; n]; n];
    for arrow in &a.quiver().arrows {
        c[arrow.source][arrow.target] += 1;
    }
    c
}

fn projection<F: Field>(a: &AlgebraBasis<F>, t: &PerfectComplex<F::Elem>, parts: &[PerfectComplex<F::Elem>], k: usize) -> ChainMap<F::Elem> {
    let mut comps = std::collections::BTreeMap::new();
    for (idx, labels) in t.terms.iter().enumerate() {
        let i = t.start + idx as i32;
        let mut m = a.amat_zero(labels, labels);
        let mut at = 0;
        for (j, p) in parts.iter().enumerate() {
            let len = p.term(i).len();
            if j == k {
                for r in at..at + len {
                    m.set(r, r, a.idempotent(labels[r]));
                }
            }
            at += len;
        }
        if !a.amat_is_zero(&m) {
            comps.insert(i, m);
        }
    }
    ChainMap { n: 0, comps }
}

pub fn endo_algebra<F: Field>(a: &AlgebraBasis<F>, t: &PerfectComplex<F::Elem>) -> Result<EndoPresentation<F>> {
    let summands = decompose(a, t);
    if summands.is_empty() {
        return Err(Error::Invalid("the complex is zero".into()));
    }
    let sum = direct_sum_all(a, &summands);
    let maps: Vec<ChainMap<F::Elem>> = (0..summands.len()).map(|k| projection(a, &sum, &summands, k)).collect();
    let (end, idempotents) = end_algebra_with(a, &sum, &maps);
    let f = a.field();
    let p = f.characteristic();
    if p != 0 && p as usize <= end.dim() {
        return Err(Error::FieldTooSmall { p, dim: end.dim() });
    }
    let labels = (1..=summands.len()).map(|k| format!("t{k}")).collect();
    let end_structure = StructureAlgebra::new(f, end.table.clone(), idempotents.clone(), labels)?;
    let gamma = end_structure.opposite();
    let presented = gamma.present("g")?;
    let end_presented = end_structure.present("h")?;
    Ok(EndoPresentation { summands, end, idempotents, gamma, presented, end_presented })
}

fn piece<F: Field>(g: &StructureAlgebra<F>, vs: &[Vec<F::Elem>], s: usize, t: usize) -> Vec<Vec<F::Elem>> {
    let (es, et) = (&g.idempotents()[s], &g.idempotents()[t]);
    let mut e = Echelon::new(g.field(), g.dim());
    for v in vs {
        e.insert(g.mul(&g.mul(et, v), es));
    }
    e.basis().to_vec()
}

fn match_presentation<F: Field>(
    g: &StructureAlgebra<F>,
    presented: &Presented<F>,
    target: &AlgebraBasis<F>,
) -> Option<AlgebraMatch<F::Elem>> {
    let f = g.field();
    let n = target.n_vertices();
    if g.idempotents().len() != n || g.dim() != target.dim() {
        return None;
    }
    let rad = g.radical().ok()?;
    let rad2: Vec<Vec<F::Elem>> = rad.iter().cartesian_product(&rad).map(|(x, y)| g.mul(x, y)).collect();
    let own = presented.algebra.quiver();
    let want = arrow_counts(target);
    let have = arrow_counts(&presented.algebra);
    let coeffs: Vec<F::Elem> = CORRECTION_COEFFS.iter().map(|&c| f.from_i64(c)).collect();
    for sigma in (0..n).permutations(n) {
        if (0..n).any(|s| (0..n).any(|t| want[s][t] != have[sigma[s]][sigma[t]])) {
            continue;
        }
        // base image and correction directions for each target arrow
        let mut used = vec![vec![0usize; n]; n];
        let mut base = Vec::new();
        let mut directions = Vec::new();
        for arrow in &target.quiver().arrows {
            let (s, t) = (sigma[arrow.source], sigma[arrow.target]);
            let k = used[s][t];
            used[s][t] += 1;
            let own_index = own.arrows.iter().enumerate().filter(|(_, b)| b.source == s && b.target == t).nth(k)?.0;
            base.push(presented.arrow_elements[own_index].clone());
            directions.push(piece(g, &rad2, s, t));
        }
        let slots: Vec<(usize, usize)> =
            directions.iter().enumerate().flat_map(|(i, d)| (0..d.len()).map(move |j| (i, j))).collect();
        let total = coeffs.len().checked_pow(slots.len() as u32).unwrap_or(usize::MAX).min(MATCH_CAP);
        let mut choice = vec![0usize; slots.len()];
        for _ in 0..total {
            let mut images = base.clone();
            for (&(i, j), &c) in slots.iter().zip(&choice) {
                vec_axpy(f, &mut images[i], &coeffs[c], &directions[i][j]);
            }
            if let Some(verified) = relations_vanish(g, target, &sigma, &images) {
                return Some(AlgebraMatch { vertex_map: sigma.clone(), arrow_images: images, verified });
            }
            for c in choice.iter_mut() {
                *c += 1;
                if *c < coeffs.len() {
                    break;
                }
                *c = 0;
            }
        }
    }
    None
}

fn relations_vanish<F: Field>(
    g: &StructureAlgebra<F>,
    target: &AlgebraBasis<F>,
    sigma: &[usize],
    images: &[Vec<F::Elem>],
) -> Option<Vec<String>> {
    let f = g.field();
    let mut verified = Vec::new();
    for rel in target.relations() {
        let mut sum = vec![f.zero(); g.dim()];
        for (c, p) in rel {
            let mut v = g.idempotents()[sigma[p.source]].clone();
            // written order: the last arrow acts first
            for &arrow in p.arrows.iter().rev() {
                v = g.mul(&images[arrow], &v);
            }
            vec_axpy(f, &mut sum, c, &v);
        }
        if !is_zero_vec(f, &sum) {
            return None;
        }
        let text = rel
            .iter()
            .map(|(c, p)| {
                let path = target.quiver().format_path(p);
                if f.is_one(c) { path } else { format!("{}*{path}", f.format(c)) }
            })
            .join(" + ");
        verified.push(format!("{text} = 0"));
    }
    Some(verified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_algebra, DEFAULT_NILPOTENCY_CAP};
    use crate::complexes::stalk;
    use crate::complexes::tests::{ex211, ex211_x};
    use crate::field::PrimeField;

    const B: &str = "vertex x\nvertex y\narrow a x y\narrow b y x\narrow d y y\nrel b*a*b\nrel d*d\nrel d*a\nrel b*d\n";

    #[test]
    fn regular_module_gives_the_algebra() {
        let a = ex211();
        let e = endo_algebra(&a, &stalk(&a, &[0, 1], 0)).unwrap();
        assert_eq!(e.dim(), 5);
        assert!(e.gamma.is_associative());
        assert!(e.find_isomorphism(&a).is_some());
    }

    #[test]
    fn example_endomorphism_algebras() {
        let a = ex211();
        let f = PrimeField::new(101).unwrap();
        let b = parse_algebra(B, &f, DEFAULT_NILPOTENCY_CAP).unwrap();
        let x = ex211_x(&a);
        let t2 = direct_sum_all(&a, &[stalk(&a, &[0], 0), x.clone()]);
        let t3 = direct_sum_all(&a, &[stalk(&a, &[1], -1), x]);
        let e2 = endo_algebra(&a, &t2).unwrap();
        // the displayed quiver presents End(T2) itself
        let m = e2.find_end_isomorphism(&b).expect("End(T2) is presented by the quiver");
        assert_eq!(m.verified.len(), 4);
        assert!(e2.find_isomorphism(&b).is_none());
        let e3 = endo_algebra(&a, &t3).unwrap();
        assert!(e3.find_isomorphism(&e2.algebra().opposite().unwrap()).is_some());
    }
}
