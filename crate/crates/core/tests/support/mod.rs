//! Algebras, random complexes and invariant checks shared by the property
//! tests and the acceptance run.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quiver_tilt::algebra::{build_tensor_family, parse_algebra, random_tensor_spec, AlgebraBasis, DEFAULT_NILPOTENCY_CAP};
use quiver_tilt::complexes::{
    chain_maps, cone, hom_k_dim, iso_k, minimize, shift, two_term, validate, HomLayout, PerfectComplex,
};
use quiver_tilt::criteria::check_conditions;
use quiver_tilt::field::{Field, PrimeField};
use quiver_tilt::linalg::random_combination;
use quiver_tilt::modules::{dual_module, generate, is_module, projective, quotient, simple};

pub const CORPUS: [&str; 6] = ["ex211", "ex45", "ex47", "kronecker", "a2", "local3"];
pub const TENSOR_SAMPLES: u64 = 50;
/// Corpus algebras followed by the seeded tensor-family members.
pub const POOL: usize = CORPUS.len() + TENSOR_SAMPLES as usize;

pub type Alg = AlgebraBasis<PrimeField>;
pub type Complex = PerfectComplex<u64>;

pub fn field() -> PrimeField {
    PrimeField::new(101).unwrap()
}

pub fn corpus_path(name: &str) -> String {
    format!("{}/../../corpus/{name}.alg", env!("CARGO_MANIFEST_DIR"))
}

pub fn corpus(name: &str) -> Alg {
    let text = std::fs::read_to_string(corpus_path(name)).unwrap();
    parse_algebra(&text, &field(), DEFAULT_NILPOTENCY_CAP).unwrap()
}

pub fn tensor(seed: u64) -> Alg {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = random_tensor_spec(&mut rng, 3, 3);
    build_tensor_family(&field(), &spec, DEFAULT_NILPOTENCY_CAP).unwrap()
}

pub fn algebra(index: usize) -> Alg {
    match CORPUS.get(index) {
        Some(name) => corpus(name),
        None => tensor((index - CORPUS.len()) as u64),
    }
}

fn random_labels(rng: &mut ChaCha8Rng, n: usize, lo: usize, hi: usize) -> Vec<usize> {
    let k = rng.gen_range(lo..=hi);
    let mut v: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
    v.sort_unstable();
    v
}

fn random_two_term(a: &Alg, rng: &mut ChaCha8Rng) -> Complex {
    let n = a.n_vertices();
    let rows = random_labels(rng, n, 0, 2);
    let cols = random_labels(rng, n, 1, 2);
    let f = a.field();
    let coords: Vec<u64> = (0..a.amat_coord_len(&rows, &cols)).map(|_| f.random(rng)).collect();
    two_term(a.amat_from_coords(&rows, &cols, &coords), 0)
}

/// The cone of a random chain map between two random two-term complexes,
/// shifted at random. Differentials need not be radical.
pub fn random_complex(a: &Alg, rng: &mut ChaCha8Rng) -> Complex {
    let x = random_two_term(a, rng);
    let y = random_two_term(a, rng);
    let layout = HomLayout::new(a, &x, &y, 0);
    let vecs: Vec<Vec<u64>> = chain_maps(a, &x, &y, 0).iter().map(|m| layout.from_map(a, m)).collect();
    let map = layout.to_map(a, &random_combination(a.field(), &vecs, layout.len, rng));
    shift(a, &cone(a, &x, &y, &map), rng.gen_range(-1..=1))
}

/// Alternating sum of `dim Hom_K(X, Y[n])` over all shifts.
pub fn euler_hom(a: &Alg, x: &Complex, y: &Complex) -> i64 {
    let (Some((xr, xs)), Some((yr, ys))) = (x.support(), y.support()) else {
        return 0;
    };
    (yr - xs..=ys - xr)
        .map(|n| {
            let d = hom_k_dim(a, x, y, n) as i64;
            if n.rem_euclid(2) == 0 { d } else { -d }
        })
        .sum()
}

/// `sum_{i,j} (-1)^{j-i} dim Hom_A(X^i, Y^j)` from the terms alone.
pub fn euler_terms(a: &Alg, x: &Complex, y: &Complex) -> i64 {
    let (Some((xr, xs)), Some((yr, ys))) = (x.support(), y.support()) else {
        return 0;
    };
    let mut total = 0;
    for i in xr..=xs {
        for j in yr..=ys {
            let d: i64 = x
                .term(i)
                .iter()
                .flat_map(|&u| y.term(j).iter().map(move |&w| (u, w)))
                .map(|(u, w)| a.piece(w, u).len() as i64)
                .sum();
            total += if (j - i).rem_euclid(2) == 0 { d } else { -d };
        }
    }
    total
}

pub fn check_euler(a: &Alg, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_complex(a, &mut rng);
    let y = random_complex(a, &mut rng);
    validate(a, &x).map_err(|e| e.to_string())?;
    validate(a, &y).map_err(|e| e.to_string())?;
    let (h, t) = (euler_hom(a, &x, &y), euler_terms(a, &x, &y));
    if h != t {
        return Err(format!("seed {seed}: hom sum {h}, term pairing {t}"));
    }
    Ok(())
}

pub fn check_minimize(a: &Alg, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_complex(a, &mut rng);
    let y = random_complex(a, &mut rng);
    let (m, _) = minimize(a, &x);
    validate(a, &m).map_err(|e| e.to_string())?;
    let (mm, was_minimal) = minimize(a, &m);
    if !was_minimal || mm != m {
        return Err(format!("seed {seed}: minimize is not idempotent"));
    }
    if !iso_k(a, &x, &m) {
        return Err(format!("seed {seed}: minimal model not homotopy equivalent"));
    }
    for n in -3..=3 {
        if hom_k_dim(a, &x, &y, n) != hom_k_dim(a, &m, &y, n) || hom_k_dim(a, &y, &x, n) != hom_k_dim(a, &y, &m, n) {
            return Err(format!("seed {seed}: Hom_K changes under minimization at shift {n}"));
        }
    }
    Ok(())
}

pub fn check_dual(a: &Alg, seed: u64) -> Result<(), String> {
    let op = a.opposite().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = a.field();
    let v = rng.gen_range(0..a.n_vertices());
    let p = projective(a, v);
    // quotient of P_v by the submodule generated by a random element
    let gen: Vec<Vec<Vec<u64>>> = p
        .dims
        .iter()
        .map(|&d| if d == 0 { Vec::new() } else { vec![(0..d).map(|_| f.random(&mut rng)).collect()] })
        .collect();
    let q = quotient(a, &p, &generate(a, &p, &gen)).module;
    for m in [p, simple(a, v), q] {
        let d = dual_module(&m);
        if d.dims != m.dims || !is_module(&op, &d) {
            return Err(format!("seed {seed}: dual is not a module of the same dimensions"));
        }
        let dd = dual_module(&d);
        if dd.dims != m.dims || dd.mats != m.mats {
            return Err(format!("seed {seed}: double dual differs"));
        }
    }
    Ok(())
}

pub fn check_associative(a: &Alg) -> Result<(), String> {
    let units: Vec<Vec<u64>> = (0..a.dim()).map(|k| a.unit(k)).collect();
    for (i, x) in units.iter().enumerate() {
        for (j, y) in units.iter().enumerate() {
            let xy = a.mul(x, y);
            for (k, z) in units.iter().enumerate() {
                if a.mul(&xy, z) != a.mul(x, &a.mul(y, z)) {
                    return Err(format!("basis triple ({i}, {j}, {k})"));
                }
            }
        }
    }
    Ok(())
}

pub fn check_tensor(seed: u64) -> Result<(), String> {
    let report = check_conditions(&tensor(seed)).map_err(|e| e.to_string())?;
    if report.all_pass {
        Ok(())
    } else {
        Err(format!("seed {seed}: {:?}", report.passing_vertices()))
    }
}
