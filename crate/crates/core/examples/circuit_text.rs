// Circuits and qubit programs survive a trip through their text forms.

use laughlin::{build_circuit, compile_circuit, Circuit, Encoding, EncodingKind, QubitProgram, Variant};

pub fn run_example() -> laughlin::Result<()> {
    let circuit = build_circuit(4, Variant::Sym)?;
    let text = circuit.to_text();
    print!("{text}");
    let back = Circuit::parse(&text)?;
    assert_eq!(back.to_text(), text);

    let program = compile_circuit(&circuit, &Encoding::new(EncodingKind::Unary, 4)?)?;
    let ir = program.to_text();
    assert_eq!(QubitProgram::parse(&ir)?.to_text(), ir);
    println!("unary IR: {} lines, reparsed identically", ir.lines().count());

    match Circuit::parse("laughlin n=3 variant=antisym\ninput 0 1 2\nv stage=2 k=1 wires=0,1 p=1/3\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> laughlin::Result<()> {
    run_example()
}
