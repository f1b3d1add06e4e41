// The Gray-code walk behind one compiled W gate.

use laughlin::compiler::{compile_w, encode_value, gray_path};
use laughlin::{Encoding, EncodingKind, Sign, WGate};

pub fn run_example() -> laughlin::Result<()> {
    // W on values (3, 5) of two 6-level qudits, three bits each
    let e = Encoding::new(EncodingKind::Binary, 6)?;
    let src = encode_value(3, &e)?.concat(&encode_value(5, &e)?);
    let dst = encode_value(5, &e)?.concat(&encode_value(3, &e)?);
    let path = gray_path(&src, &dst)?;
    println!("{} -> {}", path.source, path.dest);
    println!("  start     : {}", path.steps[0]);
    for (step, bit) in path.steps[1..].iter().zip(&path.flips) {
        println!("  flip bit {bit}: {step}");
    }
    println!("rotation pivots on bit {}", path.pivot);

    let w = WGate::new(0, 1, 3, 5, 0.25, Sign::Antisymmetric)?;
    for op in compile_w(&w, &e)? {
        println!("{op}");
    }

    let unary = Encoding::new(EncodingKind::Unary, 6)?;
    println!("same gate, unary:");
    for op in compile_w(&w, &unary)? {
        println!("{op}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> laughlin::Result<()> {
    run_example()
}
