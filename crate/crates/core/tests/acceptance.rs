//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.
//!
//! Every tolerance, range and runtime budget is fixed here.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use laughlin::analysis::{binomial_entropy, bipartite_entropy, coordinate_check, entropy_trace_from, saturation_gap};
use laughlin::circuit::{build_circuit, closed_form_counts, Variant};
use laughlin::compiler::{cost_report, gray_path, verify_compiled, BitString, EncodingKind, QubitOptions};
use laughlin::oracle::{global_phase, oracle_state, run, verify, SimOptions};
use laughlin::perm::Permutation;
use laughlin::qudit::Sign;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn ac1_oracle_equivalence() -> Outcome {
    let opts = SimOptions::default();
    let mut worst = Vec::new();
    let mut pass = true;
    for n in 2..=7 {
        let tol = if n <= 6 { 1e-10 } else { 1e-9 };
        let v = verify(n, Variant::Antisym, &opts).unwrap();
        pass &= v.distance <= tol;
        worst.push(format!("n={n}:{:.1e}", v.distance));
    }
    check(pass, worst.join(" "))
}

fn ac2_gate_counts() -> Outcome {
    let mut pass = true;
    for n in 2..=10 {
        for variant in Variant::ALL {
            let c = build_circuit(n, variant).unwrap().counts();
            pass &= c.v_gates == n * (n - 1) / 2;
            pass &= c.depth == 2 * n - 3;
            pass &= c.w_factors == n * (n - 1) * (2 * n - 1) / 6;
        }
    }
    // closed forms against their recursions and the built circuit up to 64
    let mut prev = closed_form_counts(2).unwrap();
    pass &= (prev.v_gates, prev.w_factors, prev.depth) == (1, 1, 1);
    for n in 3..=64 {
        let cf = closed_form_counts(n).unwrap();
        pass &= cf.v_gates == prev.v_gates + (n - 1);
        pass &= cf.depth == prev.depth + 2;
        pass &= cf.w_factors == prev.w_factors + (n - 1) * (n - 1);
        pass &= build_circuit(n, Variant::Antisym).unwrap().counts() == cf;
        prev = cf;
    }
    check(pass, format!("structural n=2..10, closed forms n=2..64; n=64 -> {prev:?}"))
}

fn ac3_optimality() -> Outcome {
    let mut pass = true;
    for n in 2..=10 {
        let word = Permutation::maximum(n).canonical_reduced_decomposition();
        let gates = build_circuit(n, Variant::Antisym).unwrap().counts().v_gates;
        pass &= word.len() == gates && word.apply_to_identity() == Permutation::maximum(n);
    }
    check(pass, "reversal word length == V-gate count, n=2..10")
}

fn is_contiguous(subset: &[usize]) -> bool {
    subset.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Three random `k`-subsets, non-contiguous whenever one exists.
fn random_subsets(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let any_noncontiguous = k >= 2 && k < n && n >= 3;
    let mut out = Vec::new();
    while out.len() < 3 {
        let mut s: Vec<usize> = sample(rng, n, k).into_vec();
        s.sort_unstable();
        if !any_noncontiguous || !is_contiguous(&s) {
            out.push(s);
        }
    }
    out
}

fn ac4_entropy_formula() -> Outcome {
    let opts = SimOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    let mut checked = 0;
    for n in 2..=6 {
        let state = run(&build_circuit(n, Variant::Antisym).unwrap(), false, &opts).unwrap().final_state;
        for k in 1..n {
            let want = binomial_entropy(n, k).unwrap();
            let first: Vec<usize> = (0..k).collect();
            let mut subsets = vec![first];
            subsets.extend(random_subsets(n, k, &mut rng));
            for s in subsets {
                worst = worst.max((bipartite_entropy(&state, &s).unwrap() - want).abs());
                checked += 1;
            }
        }
    }
    check(worst <= 1e-8, format!("{checked} subsets, max |S - log2 C(n,k)| = {worst:.2e}"))
}

fn ac5_per_gate_increments() -> Outcome {
    let opts = SimOptions::default();
    let mut worst: f64 = 0.0;
    let mut worst_off: f64 = 0.0;
    for n in 2..=6 {
        let c = build_circuit(n, Variant::Antisym).unwrap();
        let snaps = run(&c, true, &opts).unwrap().snapshots.unwrap();
        for cut in 1..n {
            let t = entropy_trace_from(&c, &snaps, cut).unwrap();
            for s in &t.steps {
                let err = (s.delta - s.expected_delta).abs();
                if s.k == cut {
                    worst = worst.max(err);
                } else {
                    worst_off = worst_off.max(err);
                }
            }
        }
    }
    check(
        worst <= 1e-8 && worst_off <= 1e-8,
        format!("on-cut max error {worst:.2e}, off-cut max change {worst_off:.2e}"),
    )
}

fn ac6_saturation_bound() -> Outcome {
    let mut pass = true;
    let mut worst_k1: f64 = 0.0;
    for n in 2..=64 {
        for k in 1..=n / 2 {
            let gap = saturation_gap(n, k).unwrap();
            pass &= gap >= 0.0;
            if k == 1 {
                worst_k1 = worst_k1.max(gap.abs());
            }
        }
    }
    check(pass && worst_k1 <= 1e-12, format!("gap >= 0 for n<=64, k<=n/2; max |gap| at k=1: {worst_k1:.1e}"))
}

fn ac7_coordinate_space() -> Outcome {
    let opts = SimOptions::default();
    let mut worst: f64 = 0.0;
    for n in 2..=5 {
        let state = run(&build_circuit(n, Variant::Antisym).unwrap(), false, &opts).unwrap().final_state;
        for seed in 0..5 {
            worst = worst.max(coordinate_check(&state, 10, seed).unwrap().max_relative_spread);
        }
    }
    check(worst <= 1e-8, format!("n=2..5, 10 samples x 5 seeds, max relative spread {worst:.2e}"))
}

fn ac8_compilation_fidelity() -> Outcome {
    let opts = QubitOptions::default();
    let mut pass = true;
    let mut parts = Vec::new();
    for (kind, ns) in [(EncodingKind::Binary, 2..=6), (EncodingKind::Unary, 2..=4)] {
        for n in ns {
            let v = verify_compiled(n, kind, Variant::Antisym, &opts).unwrap();
            pass &= v.distance <= 1e-9;
            parts.push(format!("{kind}{n}:{:.0e}", v.distance));
        }
    }
    let printed = ["011101", "111101", "101101", "101001", "101011"];
    let src: BitString = printed[0].parse().unwrap();
    let dst: BitString = printed[4].parse().unwrap();
    let path = gray_path(&src, &dst).unwrap();
    let mut rows: Vec<String> = path.steps.iter().map(|s| s.to_string()).collect();
    rows.push(path.dest.to_string());
    let w35 = rows == printed && path.pivot == 4;
    parts.push(format!("W35 path {}", if w35 { "exact" } else { "MISMATCH" }));
    check(pass && w35, parts.join(" "))
}

fn ac9_scaling() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for kind in [EncodingKind::Binary, EncodingKind::Unary] {
        let model = |n: usize| {
            let n = n as f64;
            match kind {
                EncodingKind::Binary => n.powi(3) * n.log2().powi(2),
                EncodingKind::Unary => n.powi(3),
            }
        };
        let ns = [4usize, 8, 16, 32, 64];
        let arity: Vec<f64> = ns
            .iter()
            .map(|&n| cost_report(n, kind).unwrap().total_control_arity as f64)
            .collect();
        for i in 1..ns.len() {
            let measured = arity[i] / arity[i - 1];
            let predicted = model(ns[i]) / model(ns[i - 1]);
            let q = measured / predicted;
            pass &= (1.0 / 1.5..=1.5).contains(&q);
            parts.push(format!("{kind}{}:{q:.3}", ns[i]));
        }
    }
    check(pass, format!("measured/model ratio per doubling: {}", parts.join(" ")))
}

fn ac10_symmetrization() -> Outcome {
    let opts = SimOptions::default();
    let mut sym_worst: f64 = 0.0;
    let mut rev_worst: f64 = 0.0;
    let mut phases = Vec::new();
    for n in 2..=6 {
        let sym = run(&build_circuit(n, Variant::Sym).unwrap(), false, &opts).unwrap().final_state;
        let oracle = oracle_state(n, Sign::Symmetric).unwrap();
        sym_worst = sym_worst.max(sym.max_amplitude_distance(&oracle).unwrap());
        let rev = run(&build_circuit(n, Variant::SymReversed).unwrap(), false, &opts).unwrap().final_state;
        let phase = global_phase(&sym, &rev).unwrap();
        rev_worst = rev_worst.max(rev.max_amplitude_distance(&sym.scaled(phase)).unwrap());
        phases.push(format!("{:+.3}{:+.3}i", phase.re, phase.im));
    }
    check(
        sym_worst <= 1e-10 && rev_worst <= 1e-10,
        format!(
            "sym vs oracle {sym_worst:.1e}, sym_reversed vs sym (up to phase) {rev_worst:.1e}, phases [{}]",
            phases.join(", ")
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1", "oracle equivalence", Duration::from_secs(30), ac1_oracle_equivalence),
        ("AC2", "gate counts", Duration::from_secs(1), ac2_gate_counts),
        ("AC3", "optimality tie-out", Duration::from_secs(1), ac3_optimality),
        ("AC4", "entropy formula", Duration::from_secs(60), ac4_entropy_formula),
        ("AC5", "per-gate increments", Duration::from_secs(60), ac5_per_gate_increments),
        ("AC6", "saturation bound", Duration::from_secs(1), ac6_saturation_bound),
        ("AC7", "coordinate-space proportionality", Duration::from_secs(10), ac7_coordinate_space),
        ("AC8", "compilation fidelity", Duration::from_secs(120), ac8_compilation_fidelity),
        ("AC9", "scaling of control arity", Duration::from_secs(5), ac9_scaling),
        ("AC10", "symmetrization variants", Duration::from_secs(30), ac10_symmetrization),
    ];
    let mut failures = 0;
    for (id, name, budget, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let in_budget = elapsed <= budget;
        let pass = outcome.pass && in_budget;
        if !pass {
            failures += 1;
        }
        println!(
            "{} {id} {name}: {} [{:.2}s / budget {}s{}]",
            if pass { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            budget.as_secs(),
            if in_budget { "" } else { ", over budget" }
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
