//! Structural consequences of the socle conditions, checked on the
//! enumerated exceptional objects and tilting complexes.

use serde::Serialize;

use super::tilting::{enumerate_tilting, shift_table};
use super::SearchBounds;
use crate::algebra::AlgebraBasis;
use crate::complexes::{describe, homology_at, PerfectComplex};
use crate::criteria::check_conditions;
use crate::error::Result;
use crate::field::Field;
use crate::modules::socle;

/// Counterexamples kept per assertion.
const MAX_COUNTEREXAMPLES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub statement: String,
    /// Number of (object, vertex) instances checked.
    pub checked: usize,
    pub passed: bool,
    pub counterexamples: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConclusionsReport {
    pub qualifying: Vec<String>,
    pub exceptional_objects: usize,
    pub tilting_complexes: usize,
    pub assertions: Vec<Assertion>,
    pub all_pass: bool,
    pub truncated: bool,
}

struct Check {
    assertion: Assertion,
}

impl Check {
    fn new(name: &str, statement: &str) -> Self {
        Check {
            assertion: Assertion {
                name: name.into(),
                statement: statement.into(),
                checked: 0,
                passed: true,
                counterexamples: Vec::new(),
            },
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.assertion.checked += 1;
        if !ok {
            self.assertion.passed = false;
            if self.assertion.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.assertion.counterexamples.push(what());
            }
        }
    }
}

fn gap_free<E: Clone>(x: &PerfectComplex<E>) -> bool {
    match x.support() {
        None => true,
        Some((r, s)) => (r..=s).all(|i| !x.term(i).is_empty()),
    }
}

pub fn conclusions_report<F: Field>(a: &AlgebraBasis<F>, b: &SearchBounds) -> Result<ConclusionsReport> {
    let n = a.n_vertices();
    let labels = &a.quiver().vertices;
    let qualifying = check_conditions(a)?.passing_vertices();
    let tilting = enumerate_tilting(a, b);
    let objs = &tilting.exceptional.objects;
    let table = shift_table(a, objs);

    let mut once = Check::new("at_most_one_degree", "a qualifying projective appears in at most one degree of a minimal exceptional complex");
    let mut first_homology = Check::new(
        "socle_of_first_homology",
        "at the first degree i where a qualifying P_v appears, the socle of H^i contains S_v",
    );
    let mut disjoint = Check::new(
        "disjoint_supports",
        "if Hom(X, Y[n]) = 0 for all n then no qualifying projective appears in both X and Y",
    );
    for x in objs {
        for &v in &qualifying {
            let degrees = x.degrees_of(v);
            once.record(degrees.len() <= 1, || format!("P_{} in degrees {degrees:?} of {}", labels[v], describe(a, x)));
            if let Some(&i) = degrees.first() {
                let h = homology_at(a, x, i);
                let ok = socle(a, &h).dims()[v] > 0;
                first_homology.record(ok, || format!("H^{i} of {} has no S_{} in its socle", describe(a, x), labels[v]));
            }
        }
    }
    for (i, x) in objs.iter().enumerate() {
        for (j, y) in objs.iter().enumerate() {
            if i == j || !table[i][j].is_empty() {
                continue;
            }
            for &v in &qualifying {
                let both = !x.degrees_of(v).is_empty() && !y.degrees_of(v).is_empty();
                disjoint.record(!both, || {
                    format!("P_{} appears in both {} and {}", labels[v], describe(a, x), describe(a, y))
                });
            }
        }
    }

    let mut exactly_once = Check::new(
        "exactly_one_degree",
        "a qualifying projective appears in exactly one degree of every basic tilting complex",
    );
    let mut gaps = Check::new("gap_free", "every basic tilting complex over a connected algebra has no zero term inside its support");
    let connected = a.quiver().is_connected();
    for t in &tilting.complexes {
        for &v in &qualifying {
            let degrees = t.complex.degrees_of(v);
            exactly_once.record(degrees.len() == 1, || {
                format!("P_{} in degrees {degrees:?} of {}", labels[v], describe(a, &t.complex))
            });
        }
        if connected {
            gaps.record(gap_free(&t.complex), || describe(a, &t.complex));
        }
    }

    let mut assertions = vec![once.assertion, first_homology.assertion, disjoint.assertion, exactly_once.assertion, gaps.assertion];
    if qualifying.len() == n {
        let mut bound = Check::new(
            "length_bound",
            "when every projective qualifies, exceptional and tilting complexes have length at most the number of vertices",
        );
        for x in objs.iter().chain(tilting.complexes.iter().map(|t| &t.complex)) {
            bound.record(x.span_length() <= n, || describe(a, x));
        }
        assertions.push(bound.assertion);
    }
    let all_pass = assertions.iter().all(|s| s.passed);
    Ok(ConclusionsReport {
        qualifying: qualifying.iter().map(|&v| labels[v].clone()).collect(),
        exceptional_objects: objs.len(),
        tilting_complexes: tilting.complexes.len(),
        assertions,
        all_pass,
        truncated: tilting.truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::tests::ex211;

    #[test]
    fn example_conclusions_hold() {
        let a = ex211();
        let r = conclusions_report(&a, &SearchBounds::for_vertices(2)).unwrap();
        assert_eq!(r.qualifying, vec!["x".to_string(), "y".to_string()]);
        assert!(r.all_pass, "{r:#?}");
        assert!(r.assertions.iter().all(|s| s.checked > 0), "{r:#?}");
    }
}
