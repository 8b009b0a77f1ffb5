//! Normal forms for `kQ/I` by graded linear closure of the ideal.

use std::collections::{HashMap, VecDeque};

use super::{AlgebraBasis, Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Echelon;

pub const DEFAULT_NILPOTENCY_CAP: usize = 64;
const PATH_CAP: usize = 60_000;

struct PathSpace {
    paths: Vec<Path>,
    strata: HashMap<(usize, usize), Vec<usize>>,
    index: HashMap<(usize, Vec<usize>), usize>,
}

impl PathSpace {
    /// All paths of length `< bound`, columns ordered by length and then
    /// lexicographically descending, so echelon pivots are the shortest,
    /// lex-greatest terms.
    fn new(quiver: &Quiver, bound: usize) -> Result<Self> {
        let mut paths: Vec<Path> = (0..quiver.n_vertices()).map(Path::trivial).collect();
        let mut level = paths.clone();
        for _ in 1..bound {
            let mut next = Vec::new();
            for p in &level {
                for (a, arrow) in quiver.arrows.iter().enumerate() {
                    if arrow.source == p.target {
                        let mut arrows = vec![a];
                        arrows.extend_from_slice(&p.arrows);
                        next.push(Path { source: p.source, target: arrow.target, arrows });
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            paths.extend(next.iter().cloned());
            if paths.len() > PATH_CAP {
                return Err(Error::PathCap(PATH_CAP));
            }
            level = next;
        }
        paths.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| b.arrows.cmp(&a.arrows))
                .then_with(|| a.source.cmp(&b.source))
        });
        let mut strata: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut index = HashMap::new();
        for (i, p) in paths.iter().enumerate() {
            let cols = strata.entry((p.source, p.target)).or_default();
            cols.push(i);
            index.insert((p.source, p.arrows.clone()), i);
        }
        Ok(PathSpace { paths, strata, index })
    }

    fn lookup(&self, p: &Path) -> Option<usize> {
        self.index.get(&(p.source, p.arrows.clone())).copied()
    }
}

/// Computes the normal-form basis and multiplication table of `kQ/I`.
///
/// Relations must be combinations of parallel paths of length at least 2.
/// The ideal is closed under multiplication by arrows inside `kQ/J^M` for
/// growing `M` until some `N < M` has every length-`N` path in the ideal.
pub fn compute_basis<F: Field>(
    field: &F,
    quiver: Quiver,
    relations: Vec<Relation<F::Elem>>,
    cap: usize,
) -> Result<AlgebraBasis<F>> {
    let relations = normalize_relations(field, &quiver, relations)?;
    let max_len = relations.iter().flat_map(|r| r.iter().map(|(_, p)| p.len())).max().unwrap_or(0);
    let mut bound = (max_len + 1).max(2);
    loop {
        if bound > cap + 1 {
            return Err(Error::NilpotencyCap { cap });
        }
        let space = PathSpace::new(&quiver, bound)?;
        let echelons = close_ideal(field, &quiver, &space, &relations, bound);
        let is_pivot = |i: usize| {
            let p = &space.paths[i];
            let cols = &space.strata[&(p.source, p.target)];
            let col = cols.binary_search(&i).unwrap();
            echelons
                .get(&(p.source, p.target))
                .is_some_and(|e| e.pivots().binary_search(&col).is_ok())
        };
        let nilpotency = (1..bound).find(|&n| {
            space.paths.iter().enumerate().filter(|(_, p)| p.len() == n).all(|(i, _)| is_pivot(i))
        });
        let Some(n) = nilpotency else {
            bound += 1;
            continue;
        };
        return Ok(assemble(field, quiver, relations, &space, &echelons, n));
    }
}

fn normalize_relations<F: Field>(
    field: &F,
    quiver: &Quiver,
    relations: Vec<Relation<F::Elem>>,
) -> Result<Vec<Relation<F::Elem>>> {
    let mut out = Vec::new();
    for (index, rel) in relations.into_iter().enumerate() {
        let mut merged: Vec<(F::Elem, Path)> = Vec::new();
        for (c, p) in rel {
            if quiver.path(&p.arrows).as_ref() != Some(&p) && !p.arrows.is_empty() {
                return Err(Error::Relation { index, message: "term is not a path".into() });
            }
            if p.len() < 2 {
                return Err(Error::Relation {
                    index,
                    message: format!("term `{}` has length below 2", quiver.format_path(&p)),
                });
            }
            match merged.iter_mut().find(|(_, q)| *q == p) {
                Some((d, _)) => *d = field.add(d, &c),
                None => merged.push((c, p)),
            }
        }
        merged.retain(|(c, _)| !field.is_zero(c));
        if let Some((_, first)) = merged.first() {
            if merged.iter().any(|(_, p)| p.source != first.source || p.target != first.target) {
                return Err(Error::Relation { index, message: "terms are not parallel".into() });
            }
            out.push(merged);
        }
    }
    Ok(out)
}

type Strata<F> = HashMap<(usize, usize), Echelon<F>>;

fn close_ideal<F: Field>(
    field: &F,
    quiver: &Quiver,
    space: &PathSpace,
    relations: &[Relation<F::Elem>],
    bound: usize,
) -> Strata<F> {
    let mut echelons: Strata<F> = HashMap::new();
    let mut queue: VecDeque<((usize, usize), Vec<F::Elem>)> = VecDeque::new();
    let column = |i: usize| {
        let p = &space.paths[i];
        space.strata[&(p.source, p.target)].binary_search(&i).unwrap()
    };
    let push = |echelons: &mut Strata<F>, queue: &mut VecDeque<_>, key: (usize, usize), v: Vec<F::Elem>| {
        let Some(cols) = space.strata.get(&key) else {
            return;
        };
        let e = echelons.entry(key).or_insert_with(|| Echelon::new(field, cols.len()));
        if e.insert(v.clone()) {
            queue.push_back((key, v));
        }
    };
    for rel in relations {
        let key = (rel[0].1.source, rel[0].1.target);
        let Some(cols) = space.strata.get(&key) else {
            continue;
        };
        let mut v = vec![field.zero(); cols.len()];
        for (c, p) in rel {
            if let Some(i) = space.lookup(p) {
                v[column(i)] = field.add(&v[column(i)], c);
            }
        }
        push(&mut echelons, &mut queue, key, v);
    }
    while let Some(((s, t), v)) = queue.pop_front() {
        let cols = &space.strata[&(s, t)];
        for (a, arrow) in quiver.arrows.iter().enumerate() {
            // left multiplication: a * p
            if arrow.source == t {
                let key = (s, arrow.target);
                if let Some(tcols) = space.strata.get(&key) {
                    let mut w = vec![field.zero(); tcols.len()];
                    for (j, c) in v.iter().enumerate() {
                        if field.is_zero(c) {
                            continue;
                        }
                        let p = &space.paths[cols[j]];
                        if p.len() + 1 >= bound {
                            continue;
                        }
                        let mut arrows = vec![a];
                        arrows.extend_from_slice(&p.arrows);
                        if let Some(&i) = space.index.get(&(p.source, arrows)) {
                            let k = column(i);
                            w[k] = field.add(&w[k], c);
                        }
                    }
                    push(&mut echelons, &mut queue, key, w);
                }
            }
            // right multiplication: p * a
            if arrow.target == s {
                let key = (arrow.source, t);
                if let Some(tcols) = space.strata.get(&key) {
                    let mut w = vec![field.zero(); tcols.len()];
                    for (j, c) in v.iter().enumerate() {
                        if field.is_zero(c) {
                            continue;
                        }
                        let p = &space.paths[cols[j]];
                        if p.len() + 1 >= bound {
                            continue;
                        }
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        if let Some(&i) = space.index.get(&(arrow.source, arrows)) {
                            let k = column(i);
                            w[k] = field.add(&w[k], c);
                        }
                    }
                    push(&mut echelons, &mut queue, key, w);
                }
            }
        }
    }
    echelons
}

fn assemble<F: Field>(
    field: &F,
    quiver: Quiver,
    relations: Vec<Relation<F::Elem>>,
    space: &PathSpace,
    echelons: &Strata<F>,
    nilpotency: usize,
) -> AlgebraBasis<F> {
    let column = |i: usize| {
        let p = &space.paths[i];
        space.strata[&(p.source, p.target)].binary_search(&i).unwrap()
    };
    // normal-form basis: non-pivot paths, in graded-lex order
    let mut basis: Vec<Path> = Vec::new();
    for (i, p) in space.paths.iter().enumerate() {
        if p.len() >= nilpotency {
            continue;
        }
        let pivot = echelons
            .get(&(p.source, p.target))
            .is_some_and(|e| e.pivots().binary_search(&column(i)).is_ok());
        if !pivot {
            basis.push(p.clone());
        }
    }
    basis.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
    let basis_index: HashMap<(usize, Vec<usize>), usize> =
        basis.iter().enumerate().map(|(k, p)| ((p.source, p.arrows.clone()), k)).collect();

    let mut cache: HashMap<usize, Vec<(usize, F::Elem)>> = HashMap::new();
    let mut normal_form = |i: usize| -> Vec<(usize, F::Elem)> {
        if let Some(v) = cache.get(&i) {
            return v.clone();
        }
        let p = &space.paths[i];
        let key = (p.source, p.target);
        let cols = &space.strata[&key];
        let mut unit = vec![field.zero(); cols.len()];
        unit[column(i)] = field.one();
        let reduced = match echelons.get(&key) {
            Some(e) => e.reduce(&unit),
            None => unit,
        };
        let out: Vec<(usize, F::Elem)> = reduced
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(k, c)| {
                let q = &space.paths[cols[k]];
                (basis_index[&(q.source, q.arrows.clone())], c)
            })
            .collect();
        cache.insert(i, out.clone());
        out
    };

    let dim = basis.len();
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            let Some(prod) = bi.compose(bj) else {
                continue;
            };
            if prod.len() >= nilpotency {
                continue;
            }
            let idx = space.lookup(&prod).expect("short path enumerated");
            let mut entry = normal_form(idx);
            entry.sort_by_key(|(k, _)| *k);
            table[i][j] = entry;
        }
    }
    AlgebraBasis::from_parts(field.clone(), quiver, relations, basis, table, nilpotency)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn fp() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn truncated_loop() {
        let mut q = Quiver::new(vec!["x".into()]);
        q.add_arrow("d", 0, 0);
        let rel = vec![(1u64, q.path(&[0, 0, 0]).unwrap())];
        let a = compute_basis(&fp(), q, vec![rel], DEFAULT_NILPOTENCY_CAP).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.nilpotency_index(), 3);
    }

    #[test]
    fn free_loop_hits_cap() {
        let mut q = Quiver::new(vec!["x".into()]);
        q.add_arrow("d", 0, 0);
        let err = compute_basis(&fp(), q, vec![], 8).unwrap_err();
        assert_eq!(err, Error::NilpotencyCap { cap: 8 });
    }

    #[test]
    fn rejects_short_terms_and_non_parallel() {
        let mut q = Quiver::new(vec!["x".into(), "y".into()]);
        q.add_arrow("a", 0, 1);
        q.add_arrow("r", 1, 1);
        let short = vec![(1u64, q.path(&[0]).unwrap())];
        assert!(compute_basis(&fp(), q.clone(), vec![short], 8).is_err());
        let skew = vec![(1u64, q.path(&[1, 0]).unwrap()), (1u64, q.path(&[1, 1]).unwrap())];
        assert!(compute_basis(&fp(), q, vec![skew], 8).is_err());
    }

    #[test]
    fn commutativity_relation_picks_lex_smaller_normal_form() {
        // x -a-> y with loops d at x and r at y, a*d = r*a
        let mut q = Quiver::new(vec!["x".into(), "y".into()]);
        q.add_arrow("d", 0, 0);
        q.add_arrow("a", 0, 1);
        q.add_arrow("r", 1, 1);
        let f = fp();
        let rels = vec![
            vec![(1, q.path(&[0, 0]).unwrap())],
            vec![(1, q.path(&[2, 2]).unwrap())],
            vec![(1, q.path(&[1, 0]).unwrap()), (f.from_i64(-1), q.path(&[2, 1]).unwrap())],
        ];
        let a = compute_basis(&f, q, rels, DEFAULT_NILPOTENCY_CAP).unwrap();
        // e_x, e_y, d, a, r, a*d  (r*a = a*d, r*a*d = 0)
        assert_eq!(a.dim(), 6);
        let names: Vec<String> = a.basis().iter().map(|p| a.quiver().format_path(p)).collect();
        assert!(names.contains(&"a*d".to_string()));
    }
}
