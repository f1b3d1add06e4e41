// Lower whole circuits to qubits and check them against the qudit run.

use laughlin::compiler::QubitOptions;
use laughlin::{build_circuit, compile_circuit, cost_report, verify_compiled, Encoding, EncodingKind, Variant};

pub fn run_example() -> laughlin::Result<()> {
    let circuit = build_circuit(3, Variant::Antisym)?;
    let program = compile_circuit(&circuit, &Encoding::new(EncodingKind::Binary, 3)?)?;
    println!(
        "n=3 binary: {} prep flips, {} ops, {} multi-controlled",
        program.prep.len(),
        program.ops.len(),
        program.mc_ops()
    );
    for line in program.to_text().lines().take(8) {
        println!("  {line}");
    }

    let opts = QubitOptions::default();
    for kind in [EncodingKind::Binary, EncodingKind::Unary] {
        for n in 2..=4 {
            let v = verify_compiled(n, kind, Variant::Antisym, &opts)?;
            println!("{}", v.report_line());
        }
    }

    println!("cost as n grows:");
    for n in [4, 8, 16, 32, 64] {
        let b = cost_report(n, EncodingKind::Binary)?;
        let u = cost_report(n, EncodingKind::Unary)?;
        println!(
            "  n={n:<3} binary {:>5} qubits {:>9} controls | unary {:>5} qubits {:>9} controls",
            b.qubits, b.total_control_arity, u.qubits, u.total_control_arity
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> laughlin::Result<()> {
    run_example()
}
