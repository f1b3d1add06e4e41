// Sample random particle positions and compare the circuit output against
// the Laughlin wavefunction `prod (z_i - z_j)` times the Gaussian factor.

use laughlin::{build_circuit, coordinate_check, run, SimOptions, Variant};

pub fn run_example() -> laughlin::Result<()> {
    for n in 2..=5 {
        let state = run(&build_circuit(n, Variant::Antisym)?, false, &SimOptions::default())?.final_state;
        let report = coordinate_check(&state, 10, 7)?;
        println!(
            "n={n} seed={} samples={} max relative spread {:.2e} pass={}",
            report.seed,
            report.samples.len(),
            report.max_relative_spread,
            report.pass
        );
        let first = &report.samples[0];
        println!("  first ratio inputs: circuit {:?} reference {:?}", first.amplitude, first.reference);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> laughlin::Result<()> {
    run_example()
}
