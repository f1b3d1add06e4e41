// Entanglement entropy across a cut, gate by gate.
//
// Only gates that straddle the cut change the entropy, and each one adds a
// known amount. The final value is `log2 C(n, k)`.

use laughlin::analysis::saturation_gap;
use laughlin::{binomial_entropy, build_circuit, entropy_trace, SimOptions, Variant};

pub fn run_example() -> laughlin::Result<()> {
    let (n, k) = (5, 2);
    let circuit = build_circuit(n, Variant::Antisym)?;
    let trace = entropy_trace(&circuit, k, &SimOptions::default())?;

    println!("cut after wire {}, initial S = {}", k - 1, trace.initial);
    for step in &trace.steps {
        println!("{}", step.line());
    }
    println!(
        "final S = {:.12}, log2 C({n},{k}) = {:.12}",
        trace.final_entropy(),
        binomial_entropy(n, k)?
    );
    println!("largest increment error {:.2e}", trace.max_increment_error());

    println!("gap to the k-qudit maximum k*log2(n):");
    for n in [4, 8, 16, 32, 64] {
        println!("  n={n:<3} k=1 {:.3}  k=n/2 {:.3}", saturation_gap(n, 1)?, saturation_gap(n, n / 2)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> laughlin::Result<()> {
    run_example()
}
