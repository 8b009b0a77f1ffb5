mod support;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use support::{algebra, check_associative, check_dual, check_euler, check_minimize, check_tensor, POOL, TENSOR_SAMPLES};

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(7), failure_persistence: None, ..Config::default() }
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn euler_form_matches_term_pairing(index in 0..POOL, seed in any::<u64>()) {
        let r = check_euler(&algebra(index), seed);
        prop_assert!(r.is_ok(), "algebra {}: {:?}", index, r);
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn minimize_is_idempotent_and_preserves_homs(index in 0..POOL, seed in any::<u64>()) {
        let r = check_minimize(&algebra(index), seed);
        prop_assert!(r.is_ok(), "algebra {}: {:?}", index, r);
    }

    #[test]
    fn dual_is_an_involution(index in 0..POOL, seed in any::<u64>()) {
        let r = check_dual(&algebra(index), seed);
        prop_assert!(r.is_ok(), "algebra {}: {:?}", index, r);
    }

    #[test]
    fn tensor_family_satisfies_the_conditions(seed in 0..4 * TENSOR_SAMPLES) {
        let r = check_tensor(seed);
        prop_assert!(r.is_ok(), "{:?}", r);
    }
}

#[test]
fn multiplication_is_associative_on_basis_triples() {
    for index in 0..POOL {
        check_associative(&algebra(index)).unwrap_or_else(|e| panic!("algebra {index}: {e}"));
    }
}
