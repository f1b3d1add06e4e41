use laughlin::oracle::tolerance_for;
use laughlin::{bipartite_entropy, binomial_entropy, build_circuit, oracle_state, run, verify, Sign, SimOptions, Variant};
use num_complex::Complex64;
use proptest::prelude::*;

fn final_state(n: usize, variant: Variant) -> laughlin::QuditState {
    run(&build_circuit(n, variant).unwrap(), false, &SimOptions::default())
        .unwrap()
        .final_state
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn entropy_depends_only_on_subset_size(n in 2usize..=6, mask in any::<u32>()) {
        let subset: Vec<usize> = (0..n).filter(|w| mask >> w & 1 == 1).collect();
        prop_assume!(!subset.is_empty() && subset.len() < n);
        let state = final_state(n, Variant::Antisym);
        let s = bipartite_entropy(&state, &subset).unwrap();
        prop_assert!((s - binomial_entropy(n, subset.len()).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn complement_has_the_same_entropy(n in 2usize..=6, mask in any::<u32>(), sym in any::<bool>()) {
        let subset: Vec<usize> = (0..n).filter(|w| mask >> w & 1 == 1).collect();
        let rest: Vec<usize> = (0..n).filter(|w| mask >> w & 1 == 0).collect();
        prop_assume!(!subset.is_empty() && !rest.is_empty());
        let variant = if sym { Variant::Sym } else { Variant::Antisym };
        let state = final_state(n, variant);
        let a = bipartite_entropy(&state, &subset).unwrap();
        let b = bipartite_entropy(&state, &rest).unwrap();
        prop_assert!((a - b).abs() < 1e-10);
    }

    #[test]
    fn norm_is_kept_by_every_prefix(n in 2usize..=6) {
        let trace = run(&build_circuit(n, Variant::Antisym).unwrap(), true, &SimOptions::default()).unwrap();
        for (_, s) in trace.snapshots.unwrap() {
            prop_assert!((s.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn swapping_wires_flips_the_antisymmetric_sign(n in 2usize..=6, a in 0usize..6, b in 0usize..6) {
        prop_assume!(a < n && b < n && a != b);
        let state = final_state(n, Variant::Antisym);
        let swapped = state.swap_wires(a, b).unwrap();
        prop_assert!(swapped.max_amplitude_distance(&state.scaled(Complex64::new(-1.0, 0.0))).unwrap() < 1e-12);
    }
}

#[test]
fn eight_qudits_match_the_oracle() {
    let report = verify(8, Variant::Antisym, &SimOptions::default()).unwrap();
    assert_eq!(report.tolerance, tolerance_for(8));
    assert!(report.pass, "{}", report.report_line());
}

#[test]
fn oracle_is_normalized() {
    for n in 2..=6 {
        for sign in [Sign::Antisymmetric, Sign::Symmetric] {
            assert!((oracle_state(n, sign).unwrap().norm() - 1.0).abs() < 1e-12);
        }
    }
}
