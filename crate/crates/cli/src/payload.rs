//! JSON payloads for each verb.

use serde_json::{json, Value};

use quiver_tilt::algebra::{cartan_coxeter, parse_algebra, AlgebraBasis, DEFAULT_NILPOTENCY_CAP};
use quiver_tilt::complexes::{describe, from_json, to_json, ComplexJson, PerfectComplex};
use quiver_tilt::criteria::{
    check_conditions, check_wd_conditions, corner_delete, fae_module, findim_probe, is_weakly_directed, triangular_split,
    ProbeConfig, WeaklyDirectedOrder,
};
use quiver_tilt::field::Field;
use quiver_tilt::modules::min_resolution;
use quiver_tilt::search::{
    conclusions_report, endo_algebra, enumerate_exceptional, enumerate_tilting, recollement_witness_search, AlgebraMatch,
    EndoPresentation,
};
use quiver_tilt::Error;

use crate::{Computed, Context, Verb};

const SWEEP_NOTE: &str = "complete relative to the seeded differential sweep within the stated bounds";

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("payload serializes")
}

fn done(payload: Value) -> Computed {
    Computed { payload, truncated: false, failed: false }
}

/// Quiver, relations and basis in the file grammar's vocabulary.
fn algebra_json<F: Field>(a: &AlgebraBasis<F>) -> Value {
    let q = a.quiver();
    let f = a.field();
    let n = a.n_vertices();
    let relations: Vec<String> = a
        .relations()
        .iter()
        .map(|r| {
            r.iter()
                .map(|(c, p)| if f.is_one(c) { q.format_path(p) } else { format!("{}*{}", f.format(c), q.format_path(p)) })
                .collect::<Vec<_>>()
                .join(" + ")
        })
        .collect();
    json!({
        "vertices": q.vertices,
        "arrows": q.arrows.iter().map(|x| json!({
            "label": x.label,
            "source": q.vertices[x.source],
            "target": q.vertices[x.target],
        })).collect::<Vec<_>>(),
        "relations": relations,
        "dimension": a.dim(),
        "basis": a.basis().iter().map(|p| q.format_path(p)).collect::<Vec<_>>(),
        // piece_dims[s][t] = number of basis paths from s to t
        "piece_dims": (0..n).map(|s| (0..n).map(|t| a.piece(s, t).len()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "nilpotency_index": a.nilpotency_index(),
        "radical_layers": a.radical_power_dims(),
        "projective_dims": (0..n).map(|v| a.projective_dims(v)).collect::<Vec<_>>(),
    })
}

fn complex_json<F: Field>(a: &AlgebraBasis<F>, x: &PerfectComplex<F::Elem>) -> Value {
    let (start, profile) = x.profile(a.n_vertices());
    json!({
        "description": describe(a, x),
        "length": x.span_length(),
        "profile_start": start,
        "profile": profile,
        "complex": to_json(a, x),
    })
}

fn check<F: Field>(a: &AlgebraBasis<F>, cutoff: usize) -> Result<Value, Error> {
    let conditions = check_conditions(a)?;
    let order = is_weakly_directed(a);
    let wd = match order {
        WeaklyDirectedOrder::Order(_) => Some(check_wd_conditions(a)?),
        WeaklyDirectedOrder::Cycle(_) => None,
    };
    let splits: Vec<Value> = triangular_split(a)
        .iter()
        .map(|s| {
            let m = fae_module(a, s);
            let res = min_resolution(a, &m, cutoff);
            json!({
                "split": s,
                "fae_dims": m.dims,
                "fae_resolution": res.status,
                "fae_resolution_terms": res.multiplicities(a.n_vertices()),
            })
        })
        .collect();
    Ok(json!({
        "conditions": conditions,
        "weakly_directed": order,
        "weakly_directed_conditions": wd,
        "triangular_splits": splits,
    }))
}

fn match_json<E>(a_target: &AlgebraBasis<impl Field>, m: &Option<AlgebraMatch<E>>) -> Value {
    match m {
        None => json!({"found": false}),
        Some(m) => json!({
            "found": true,
            "vertex_map": m.vertex_map.iter().enumerate().map(|(v, &w)| json!([a_target.quiver().vertices[v], format!("t{}", w + 1)])).collect::<Vec<_>>(),
            "verified_relations": m.verified,
        }),
    }
}

fn endo_json<F: Field>(
    a: &AlgebraBasis<F>,
    t: &PerfectComplex<F::Elem>,
    e: &EndoPresentation<F>,
    expect: Option<&AlgebraBasis<F>>,
) -> (Value, bool) {
    let f = a.field();
    let constants: Vec<Vec<Vec<String>>> =
        e.end.table.iter().map(|row| row.iter().map(|v| v.iter().map(|c| f.format(c)).collect()).collect()).collect();
    let mut ok = true;
    let expected = expect.map(|b| {
        let on_end = e.find_end_isomorphism(b);
        let on_gamma = e.find_isomorphism(b);
        ok = on_end.is_some() || on_gamma.is_some();
        json!({ "end": match_json(b, &on_end), "opposite": match_json(b, &on_gamma) })
    });
    let value = json!({
        "complex": describe(a, t),
        "dimension": e.dim(),
        "summands": e.summands.iter().enumerate().map(|(k, s)| json!([format!("t{}", k + 1), describe(a, s)])).collect::<Vec<_>>(),
        "idempotent_blocks": e.summands.len(),
        "associative": e.gamma.is_associative(),
        "structure_constants": constants,
        "idempotents": e.idempotents.iter().map(|v| v.iter().map(|c| f.format(c)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "opposite_presentation": algebra_json(e.algebra()),
        "presentation": algebra_json(&e.end_presented.algebra),
        "expected": expected,
    });
    (value, ok)
}

fn endo<F: Field>(
    a: &AlgebraBasis<F>,
    ctx: &Context,
    complex: &Option<std::path::PathBuf>,
    expect: &Option<std::path::PathBuf>,
) -> Result<Computed, Error> {
    let read = |p: &std::path::PathBuf| std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())));
    let expect = match expect {
        Some(p) => Some(parse_algebra(&read(p)?, a.field(), DEFAULT_NILPOTENCY_CAP)?),
        None => None,
    };
    let (targets, truncated) = match complex {
        Some(p) => {
            let j: ComplexJson = serde_json::from_str(&read(p)?).map_err(|e| Error::Invalid(format!("{}: {e}", p.display())))?;
            (vec![from_json(a, &j)?], false)
        }
        None => {
            let s = enumerate_tilting(a, &ctx.bounds);
            (s.complexes.into_iter().map(|t| t.complex).collect(), s.truncated)
        }
    };
    let mut all_ok = true;
    let mut out = Vec::new();
    for t in &targets {
        let e = endo_algebra(a, t)?;
        let (v, ok) = endo_json(a, t, &e, expect.as_ref());
        all_ok &= ok;
        out.push(v);
    }
    Ok(Computed { payload: json!({ "endomorphism_algebras": out }), truncated, failed: !all_ok })
}

pub(crate) fn compute<F: Field>(a: &AlgebraBasis<F>, ctx: &Context) -> Result<Computed, Error> {
    let b = &ctx.bounds;
    Ok(match ctx.verb {
        Verb::Basis => done(algebra_json(a)),
        Verb::Check { cutoff } => done(check(a, *cutoff)?),
        Verb::Coxeter => done(to_value(&cartan_coxeter(a))),
        Verb::EnumerateExceptional => {
            let s = enumerate_exceptional(a, b);
            let objects: Vec<Value> = s.objects.iter().map(|x| complex_json(a, x)).collect();
            Computed {
                payload: json!({ "search": s.summary(), "completeness": SWEEP_NOTE, "objects": objects }),
                truncated: s.truncated,
                failed: false,
            }
        }
        Verb::EnumerateTilting => {
            let s = enumerate_tilting(a, b);
            let complexes: Vec<Value> = s
                .complexes
                .iter()
                .map(|t| {
                    let mut v = complex_json(a, &t.complex);
                    v["summands"] = json!(t.summands.iter().map(|&(i, sh)| json!({"object": i, "shift": sh})).collect::<Vec<_>>());
                    v["verdict"] = to_value(&t.verdict);
                    v
                })
                .collect();
            Computed {
                payload: json!({
                    "exceptional_search": s.exceptional.summary(),
                    "exceptional": s.exceptional.objects.iter().map(|x| describe(a, x)).collect::<Vec<_>>(),
                    "completeness": SWEEP_NOTE,
                    "complexes": complexes,
                    "excluded_unknown": s.excluded_unknown,
                }),
                truncated: s.truncated,
                failed: false,
            }
        }
        Verb::Endo { complex, expect } => endo(a, ctx, complex, expect)?,
        Verb::Witnesses => {
            let s = recollement_witness_search(a, b);
            let labels = &a.quiver().vertices;
            let names = |vs: &[usize]| vs.iter().map(|&v| labels[v].clone()).collect::<Vec<_>>();
            let pairs: Vec<Value> = s
                .pairs
                .iter()
                .map(|p| {
                    json!({
                        "x": complex_json(a, &p.x),
                        "y": complex_json(a, &p.y),
                        "z": complex_json(a, &p.z),
                        "orthogonal_window": [p.orthogonal_window.0, p.orthogonal_window.1],
                        "x_exceptional": p.x_exceptional,
                        "y_exceptional": p.y_exceptional,
                        "generation": p.verdict,
                        "x_vertices": names(&p.x_vertices),
                        "y_vertices": names(&p.y_vertices),
                    })
                })
                .collect();
            Computed {
                payload: json!({
                    "pairs": pairs,
                    "one_sided_pairs": s.one_sided_pairs,
                    "pairs_tested": s.pairs_tested,
                    "excluded_unknown": s.excluded_unknown,
                    "conditions_hold": s.conditions_hold,
                    "note": s.note(),
                }),
                truncated: s.truncated,
                failed: false,
            }
        }
        Verb::Conclusions => {
            let r = conclusions_report(a, b)?;
            Computed { failed: !r.all_pass, truncated: r.truncated, payload: to_value(&r) }
        }
        Verb::ProbeFindim { dim_bound, cutoff, samples } => {
            let cfg = ProbeConfig { dim_bound: *dim_bound, random_samples: *samples, seed: b.seed, cutoff: *cutoff };
            let r = findim_probe(a, &cfg)?;
            done(json!({ "config": cfg, "report": r }))
        }
        Verb::CornerDelete { vertex } => {
            let v = a.quiver().vertex_index(vertex).ok_or_else(|| Error::UnknownLabel(vertex.clone()))?;
            let c = corner_delete(a, v)?;
            done(json!({
                "deleted": vertex,
                "corner": algebra_json(&c),
                "conditions": check_conditions(&c)?,
            }))
        }
    })
}
