// The symmetric variants: flipped rotation sign, and reversed input.

use laughlin::oracle::global_phase;
use laughlin::{build_circuit, run, verify, SimOptions, Variant};

pub fn run_example() -> laughlin::Result<()> {
    let opts = SimOptions::default();
    for variant in Variant::ALL {
        let report = verify(4, variant, &opts)?;
        println!("{}", report.report_line());
    }

    let sym = run(&build_circuit(4, Variant::Sym)?, false, &opts)?.final_state;
    let rev = run(&build_circuit(4, Variant::SymReversed)?, false, &opts)?.final_state;
    let phase = global_phase(&sym, &rev)?;
    println!("sym_reversed = ({:+.3}{:+.3}i) * sym", phase.re, phase.im);

    // exchanging two wires leaves the symmetric state alone
    let swapped = sym.swap_wires(0, 2)?;
    println!("swap(0,2) distance: {:.1e}", sym.max_amplitude_distance(&swapped)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> laughlin::Result<()> {
    run_example()
}
