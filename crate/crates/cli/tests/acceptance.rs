//! One pass/fail line per acceptance criterion. Runs without the test
//! harness so the lines are always printed.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};

use serde_json::Value;

use quiver_tilt::algebra::{cartan_coxeter, parse_algebra, DEFAULT_NILPOTENCY_CAP};
use quiver_tilt::complexes::{direct_sum_all, iso_k, normalize_shift, stalk, two_term};
use quiver_tilt::criteria::{check_conditions, check_wd_conditions, findim_probe, ProbeConfig};
use quiver_tilt::modules::{min_resolution, simple, ResolutionStatus};
use quiver_tilt::search::{endo_algebra, enumerate_exceptional, enumerate_tilting, recollement_witness_search, SearchBounds};
use quiver_tilt_cli::{run, EXIT_OK};

use support::{corpus, corpus_path, field, Alg, Complex, POOL, TENSOR_SAMPLES};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cli(verb: &str, name: &str, extra: &[&str]) -> Result<Value, String> {
    let path = corpus_path(name);
    let args = ["quiver-tilt", verb, "--algebra", &path].into_iter().chain(extra.iter().copied());
    let o = run(args);
    ensure(o.code == EXIT_OK, format!("{verb} on {name} exited {}: {}", o.code, o.stderr))?;
    serde_json::from_str(&o.stdout).map_err(|e| e.to_string())
}

fn bounds(n: usize, length: usize, mult: usize) -> SearchBounds {
    SearchBounds { max_length: length, max_mult: mult, ..SearchBounds::for_vertices(n) }
}

/// `X = P_y -> P_x` in degrees -1, 0, with differential the arrow `a`.
fn ex211_x(a: &Alg) -> Complex {
    let mut d = a.amat_zero(&[1], &[0]);
    d.set(0, 0, a.unit(a.arrow_index(a.quiver().arrow_index("a").unwrap())));
    two_term(d, -1)
}

/// Each expected complex matches exactly one found complex, up to shift.
fn same_up_to_shift(a: &Alg, found: &[Complex], expected: &[Complex]) -> Result<(), String> {
    ensure(found.len() == expected.len(), format!("{} found, {} expected", found.len(), expected.len()))?;
    let found: Vec<Complex> = found.iter().map(|x| normalize_shift(a, x)).collect();
    for (k, e) in expected.iter().enumerate() {
        let e = normalize_shift(a, e);
        let hits = found.iter().filter(|x| iso_k(a, x, &e)).count();
        ensure(hits == 1, format!("expected complex {k} matched {hits} times"))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let r = cli("enumerate-exceptional", "ex211", &["--max-length", "3", "--max-mult", "2"])?;
    let n = r["result"]["objects"].as_array().map_or(0, Vec::len);
    ensure(n == 3, format!("report lists {n} objects"))?;
    let a = corpus("ex211");
    let s = enumerate_exceptional(&a, &bounds(2, 3, 2));
    let expected = [stalk(&a, &[0], 0), stalk(&a, &[1], 0), ex211_x(&a)];
    same_up_to_shift(&a, &s.objects, &expected)?;
    Ok("P_x, P_y and P_y -> P_x, nothing else".into())
}

fn criterion_2() -> Outcome {
    let r = cli("enumerate-tilting", "ex211", &["--max-length", "3", "--max-mult", "2"])?;
    let n = r["result"]["complexes"].as_array().map_or(0, Vec::len);
    ensure(n == 3, format!("report lists {n} complexes"))?;
    let a = corpus("ex211");
    let s = enumerate_tilting(&a, &bounds(2, 3, 2));
    let x = ex211_x(&a);
    let expected = [
        stalk(&a, &[0, 1], 0),
        direct_sum_all(&a, &[stalk(&a, &[0], 0), x.clone()]),
        direct_sum_all(&a, &[stalk(&a, &[1], -1), x]),
    ];
    let found: Vec<Complex> = s.complexes.iter().map(|t| t.complex.clone()).collect();
    same_up_to_shift(&a, &found, &expected)?;
    Ok("T1, T2, T3 up to shift and homotopy".into())
}

fn criterion_3() -> Outcome {
    let a = corpus("ex211");
    let x = ex211_x(&a);
    let e1 = endo_algebra(&a, &stalk(&a, &[0, 1], 0)).map_err(|e| e.to_string())?;
    ensure(e1.dim() == 5, format!("End(T1) has dimension {}", e1.dim()))?;
    ensure(e1.find_isomorphism(&a).is_some(), "End(T1) is not presented like A")?;
    let b_text = "vertex x\nvertex y\narrow a x y\narrow b y x\narrow d y y\nrel b*a*b\nrel d*d\nrel d*a\nrel b*d\n";
    let b = parse_algebra(b_text, &field(), DEFAULT_NILPOTENCY_CAP).map_err(|e| e.to_string())?;
    let e2 = endo_algebra(&a, &direct_sum_all(&a, &[stalk(&a, &[0], 0), x.clone()])).map_err(|e| e.to_string())?;
    let mut loops = 0;
    let mut between = 0;
    for arrow in &e2.end_presented.algebra.quiver().arrows {
        if arrow.source == arrow.target {
            loops += 1;
        } else {
            between += 1;
        }
    }
    ensure(e2.end_presented.algebra.n_vertices() == 2 && loops == 1 && between == 2, "End(T2) quiver shape differs")?;
    let m = e2.find_end_isomorphism(&b).ok_or("no isomorphism End(T2) -> B")?;
    ensure(m.verified.len() == 4, "not all four relations verified")?;
    let e3 = endo_algebra(&a, &direct_sum_all(&a, &[stalk(&a, &[1], -1), x])).map_err(|e| e.to_string())?;
    let op = e2.algebra().opposite().map_err(|e| e.to_string())?;
    ensure(e3.find_isomorphism(&op).is_some(), "End(T3) does not match the opposite of End(T2)")?;
    Ok(format!("dims {}, {}, {}; relations {}", e1.dim(), e2.dim(), e3.dim(), m.verified.join(", ")))
}

fn criterion_4() -> Outcome {
    let r = check_conditions(&corpus("ex211")).map_err(|e| e.to_string())?;
    ensure(r.simples.iter().all(|s| s.overall), "ex211: a simple fails")?;
    let r = check_conditions(&corpus("ex45")).map_err(|e| e.to_string())?;
    let (x, y) = (&r.simples[0], &r.simples[1]);
    ensure(x.overall, "ex45: S_x fails")?;
    ensure(y.cond1 && y.cond2 && !y.cond3_kernel_form && !y.overall, "ex45: S_y does not fail exactly condition (3)")?;
    let a = corpus("ex47");
    let r = check_conditions(&a).map_err(|e| e.to_string())?;
    let wd = check_wd_conditions(&a).map_err(|e| e.to_string())?;
    ensure(r.simples.iter().all(|s| s.overall), "ex47: a simple fails")?;
    ensure(wd.iter().all(|v| v.pass), "ex47: weakly directed check fails")?;
    ensure(r.simples.iter().zip(&wd).all(|(s, v)| s.overall == v.pass), "ex47: checkers disagree")?;
    Ok("ex211 both pass; ex45 S_y fails condition (3) only; ex47 all pass, checkers agree".into())
}

fn criterion_5() -> Outcome {
    let a = corpus("local3");
    let regular = stalk(&a, &[0], 0);
    let s = enumerate_exceptional(&a, &SearchBounds::for_vertices(1));
    same_up_to_shift(&a, &s.objects, std::slice::from_ref(&regular))?;
    let t = enumerate_tilting(&a, &SearchBounds::for_vertices(1));
    let found: Vec<Complex> = t.complexes.iter().map(|t| t.complex.clone()).collect();
    same_up_to_shift(&a, &found, &[regular])?;
    Ok("only the stalk regular module".into())
}

fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    for name in ["ex211", "ex47"] {
        let r = cli("conclusions", name, &[])?;
        let res = &r["result"];
        ensure(res["all_pass"] == true, format!("{name}: an assertion fails"))?;
        for s in res["assertions"].as_array().unwrap() {
            ensure(s["checked"].as_u64().unwrap_or(0) > 0, format!("{name}: {} never checked", s["name"]))?;
        }
        notes.push(format!("{name}: {} tilting complexes", res["tilting_complexes"]));
    }
    Ok(notes.join("; "))
}

fn criterion_7() -> Outcome {
    let a = corpus("ex211");
    let res = min_resolution(&a, &simple(&a, 1), 20);
    ensure(res.status == ResolutionStatus::ExceedsCutoff { cutoff: 20 }, "resolution of S_y terminates")?;
    ensure(res.terms.iter().all(|t| t == &[1]), "terms are not all P_y")?;
    let cfg = ProbeConfig { dim_bound: 4, random_samples: 200, seed: 0, cutoff: 20 };
    let p = findim_probe(&a, &cfg).map_err(|e| e.to_string())?;
    ensure(p.witness.is_none(), "probe found a witness on ex211")?;
    let p2 = findim_probe(&corpus("a2"), &cfg).map_err(|e| e.to_string())?;
    let w = p2.witness.ok_or("no witness on a2")?;
    ensure(w.projective_dimension == 1 && w.dims.iter().sum::<usize>() == 1, "a2 witness is not a simple of pd 1")?;
    Ok(format!("{} resolution terms P_y; {} modules probed on ex211", res.terms.len(), p.modules_tested))
}

fn criterion_8() -> Outcome {
    for name in ["ex211", "ex47", "local3"] {
        let r = cli("witnesses", name, &[])?;
        let n = r["result"]["pairs"].as_array().map_or(0, Vec::len);
        ensure(n == 0, format!("{name}: {n} witnesses"))?;
    }
    let a = corpus("a2");
    let s = recollement_witness_search(&a, &SearchBounds::for_vertices(2));
    let (px, py) = (stalk(&a, &[0], 0), stalk(&a, &[1], 0));
    ensure(s.pairs.iter().any(|p| iso_k(&a, &p.x, &px) && iso_k(&a, &p.y, &py)), "a2: (P_x, P_y) missing")?;
    Ok(format!("empty on ex211, ex47, local3; {} witnesses on a2", s.pairs.len()))
}

fn criterion_9() -> Outcome {
    let a = corpus("kronecker");
    let b = bounds(2, 3, 3);
    let s = enumerate_exceptional(&a, &b);
    ensure(s.objects.iter().all(|x| x.span_length() <= 2), "an exceptional object is longer than 2")?;
    let t = enumerate_tilting(&a, &b);
    let ts: Vec<&Complex> = t.complexes.iter().map(|t| &t.complex).collect();
    ensure(ts.len() >= 4, format!("{} tilting complexes", ts.len()))?;
    for i in 0..ts.len() {
        for j in i + 1..ts.len() {
            ensure(!iso_k(&a, ts[i], ts[j]), format!("tilting complexes {i} and {j} are isomorphic"))?;
        }
    }
    let c = cartan_coxeter(&a);
    ensure(c.charpoly_integers() == Some(vec![1, -2, 1]), format!("charpoly {:?}", c.charpoly))?;
    Ok(format!("{} exceptional, {} tilting, charpoly l^2 - 2l + 1", s.objects.len(), ts.len()))
}

fn criterion_10() -> Outcome {
    let algebras: Vec<Alg> = (0..POOL).map(support::algebra).collect();
    for seed in 0..200u64 {
        support::check_euler(&algebras[seed as usize % POOL], seed)?;
    }
    for seed in 0..100u64 {
        let a = &algebras[seed as usize % POOL];
        support::check_minimize(a, seed)?;
        support::check_dual(a, seed)?;
    }
    for a in &algebras {
        support::check_associative(a)?;
    }
    for seed in 0..TENSOR_SAMPLES {
        support::check_tensor(seed)?;
    }
    Ok(format!("200 Euler pairs, 100 minimize and dual samples, {POOL} algebras"))
}

fn main() -> std::process::ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("exceptional objects of the two-loop example", criterion_1),
        ("tilting complexes of the two-loop example", criterion_2),
        ("endomorphism algebras", criterion_3),
        ("condition checker", criterion_4),
        ("local algebra", criterion_5),
        ("conclusion suite", criterion_6),
        ("resolutions and finitistic probe", criterion_7),
        ("recollement witnesses", criterion_8),
        ("Kronecker quiver", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail})", k + 1),
            Err(why) => {
                println!("criterion {:>2}: FAIL  {name} ({why})", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if failed.is_empty() {
        std::process::ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        std::process::ExitCode::FAILURE
    }
}
