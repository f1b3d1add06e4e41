// Build the n = 3 circuit, run it, and print the antisymmetric output.

use laughlin::{build_circuit, run, verify, SimOptions, Variant};

pub fn run_example() -> laughlin::Result<()> {
    let circuit = build_circuit(3, Variant::Antisym)?;
    print!("{}", circuit.to_text());

    let out = run(&circuit, false, &SimOptions::default())?.final_state;
    println!("output amplitudes:");
    for (digits, a) in out.nonzero(1e-12) {
        println!("  |{digits:?}>  {:+.6}", a.re);
    }

    for n in 2..=7 {
        let report = verify(n, Variant::Antisym, &SimOptions::default())?;
        println!("{}", report.report_line());
        assert!(report.pass);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> laughlin::Result<()> {
    run_example()
}
