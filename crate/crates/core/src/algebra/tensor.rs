//! Tensor algebras over products of truncated polynomial rings.
//!
//! Each vertex `v` carries a loop `t_v` with `t_v^{n_v} = 0`, and each
//! arrow `a: v -> w` spans a bimodule isomorphic to `k[t]/(t^l)` with
//! `t_w a = a t_v` and `t_w^l a = 0`. Extra relations must be combinations
//! of paths that pass through at least two arrows of the underlying quiver.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::parse::{parse_presentation, Presentation};
use super::{AlgebraBasis, Quiver};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyArrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorFamilySpec {
    pub vertices: Vec<String>,
    /// Label of the loop at each vertex.
    pub loops: Vec<String>,
    /// Truncation order `n_v` at each vertex.
    pub orders: Vec<usize>,
    pub arrows: Vec<FamilyArrow>,
    /// Extra relations in the presentation syntax, e.g. `b*a`.
    pub extra: Vec<String>,
}

impl TensorFamilySpec {
    pub fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        if n == 0 || self.loops.len() != n || self.orders.len() != n {
            return Err(Error::Invalid("one loop label and one order per vertex required".into()));
        }
        if let Some(v) = self.orders.iter().position(|&o| o < 2) {
            return Err(Error::Invalid(format!("order at `{}` must be at least 2", self.vertices[v])));
        }
        let mut quiver = Quiver::new(self.vertices.clone());
        for a in &self.arrows {
            if a.source >= n || a.target >= n {
                return Err(Error::UnknownLabel(a.label.clone()));
            }
            if a.source == a.target {
                return Err(Error::Invalid(format!("arrow `{}` is a loop", a.label)));
            }
            let bound = self.orders[a.source].min(self.orders[a.target]);
            if a.length == 0 || a.length >= bound {
                return Err(Error::Invalid(format!(
                    "bimodule length of `{}` must lie strictly between 0 and {bound}",
                    a.label
                )));
            }
            quiver.add_arrow(&a.label, a.source, a.target);
        }
        if !quiver.is_connected() {
            return Err(Error::Invalid("underlying quiver is not connected".into()));
        }
        if has_cycle(n, &self.arrows) {
            return Err(Error::Invalid("underlying quiver has an oriented cycle".into()));
        }
        Ok(())
    }

    /// The quiver-with-relations presentation.
    pub fn presentation(&self) -> Result<Presentation> {
        self.validate()?;
        let mut text = String::new();
        for v in &self.vertices {
            text.push_str(&format!("vertex {v}\n"));
        }
        for (v, l) in self.loops.iter().enumerate() {
            text.push_str(&format!("arrow {l} {} {}\n", self.vertices[v], self.vertices[v]));
        }
        for a in &self.arrows {
            text.push_str(&format!("arrow {} {} {}\n", a.label, self.vertices[a.source], self.vertices[a.target]));
        }
        for (v, l) in self.loops.iter().enumerate() {
            text.push_str(&format!("rel {}\n", vec![l.as_str(); self.orders[v]].join("*")));
        }
        for a in &self.arrows {
            let ts = &self.loops[a.source];
            let tt = &self.loops[a.target];
            text.push_str(&format!("rel {}*{} - {}*{}\n", a.label, ts, tt, a.label));
            let mut power = vec![tt.as_str(); a.length];
            power.push(&a.label);
            text.push_str(&format!("rel {}\n", power.join("*")));
        }
        for r in &self.extra {
            text.push_str(&format!("rel {r}\n"));
        }
        let p = parse_presentation(&text)?;
        for (i, rel) in p.relations.iter().enumerate().skip(self.vertices.len() + 2 * self.arrows.len()) {
            let through = |path: &super::Path| {
                path.arrows.iter().filter(|&&a| a >= self.loops.len()).count()
            };
            if rel.iter().any(|(_, path)| through(path) < 2) {
                return Err(Error::Relation {
                    index: i,
                    message: "extra relations must lie in the square of the non-loop ideal".into(),
                });
            }
        }
        Ok(p)
    }
}

fn has_cycle(n: usize, arrows: &[FamilyArrow]) -> bool {
    let mut indeg = vec![0usize; n];
    for a in arrows {
        indeg[a.target] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for a in arrows.iter().filter(|a| a.source == v) {
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                stack.push(a.target);
            }
        }
    }
    seen < n
}

pub fn build_tensor_family<F: Field>(field: &F, spec: &TensorFamilySpec, cap: usize) -> Result<AlgebraBasis<F>> {
    spec.presentation()?.build(field, cap)
}

/// A random family member on at most `max_vertices` vertices with orders
/// at most `max_order`. Extra relations are zero relations on composable
/// pairs of quiver arrows.
pub fn random_tensor_spec<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize, max_order: usize) -> TensorFamilySpec {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let vertices: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
    let loops: Vec<String> = (0..n).map(|v| format!("t{v}")).collect();
    let orders: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=max_order.max(2))).collect();
    // a random spanning tree oriented from lower to higher index, plus extras
    let mut edges = Vec::new();
    for w in 1..n {
        let v = rng.gen_range(0..w);
        edges.push(if rng.gen_bool(0.5) { (v, w) } else { (w, v) });
    }
    for v in 0..n {
        for w in v + 1..n {
            if rng.gen_bool(0.2) {
                edges.push((v, w));
            }
        }
    }
    // orient consistently with a random permutation to stay acyclic
    let mut rank: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        rank.swap(i, j);
    }
    let arrows: Vec<FamilyArrow> = edges
        .into_iter()
        .enumerate()
        .map(|(i, (v, w))| {
            let (s, t) = if rank[v] < rank[w] { (v, w) } else { (w, v) };
            let bound = orders[s].min(orders[t]);
            FamilyArrow { label: format!("a{i}"), source: s, target: t, length: rng.gen_range(1..bound) }
        })
        .collect();
    let mut extra = Vec::new();
    for b in &arrows {
        for a in &arrows {
            if a.target == b.source && rng.gen_bool(0.5) {
                extra.push(format!("{}*{}", b.label, a.label));
            }
        }
    }
    TensorFamilySpec { vertices, loops, orders, arrows, extra }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::DEFAULT_NILPOTENCY_CAP;
    use crate::field::PrimeField;
    use rand::SeedableRng;

    fn chain() -> TensorFamilySpec {
        TensorFamilySpec {
            vertices: vec!["x".into(), "y".into(), "z".into()],
            loops: vec!["d".into(), "r".into(), "t".into()],
            orders: vec![3, 3, 3],
            arrows: vec![
                FamilyArrow { label: "a".into(), source: 0, target: 1, length: 2 },
                FamilyArrow { label: "b".into(), source: 1, target: 2, length: 2 },
            ],
            extra: vec!["b*a".into()],
        }
    }

    #[test]
    fn chain_family_dimensions() {
        let f = PrimeField::new(101).unwrap();
        let a = build_tensor_family(&f, &chain(), DEFAULT_NILPOTENCY_CAP).unwrap();
        assert_eq!(a.projective_dims(0), vec![3, 2, 0]);
        assert_eq!(a.projective_dims(1), vec![0, 3, 2]);
        assert_eq!(a.projective_dims(2), vec![0, 0, 3]);
    }

    #[test]
    fn single_vertex() {
        let f = PrimeField::new(101).unwrap();
        let spec = TensorFamilySpec {
            vertices: vec!["v".into()],
            loops: vec!["t".into()],
            orders: vec![2],
            arrows: vec![],
            extra: vec![],
        };
        assert_eq!(build_tensor_family(&f, &spec, DEFAULT_NILPOTENCY_CAP).unwrap().dim(), 2);
    }

    #[test]
    fn rejects_bad_specs() {
        let mut s = chain();
        s.arrows[0].length = 3;
        assert!(s.validate().is_err());
        let mut s = chain();
        s.extra = vec!["d*d".into()];
        assert!(s.presentation().is_err());
        let mut s = chain();
        s.arrows.push(FamilyArrow { label: "c".into(), source: 2, target: 0, length: 1 });
        assert!(s.validate().is_err());
    }

    #[test]
    fn random_specs_are_valid() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let s = random_tensor_spec(&mut rng, 3, 3);
            s.validate().unwrap();
        }
    }
}
