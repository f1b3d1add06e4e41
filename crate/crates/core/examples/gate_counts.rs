use laughlin::{build_circuit, closed_form_counts, Variant};

pub fn run_example() -> laughlin::Result<()> {
    println!("{:>3} {:>6} {:>8} {:>6}", "n", "V", "W", "depth");
    for n in (2..=10).chain([16, 32, 64]) {
        let counts = closed_form_counts(n)?;
        if n <= 10 {
            assert_eq!(build_circuit(n, Variant::Antisym)?.counts(), counts);
        }
        println!("{n:>3} {:>6} {:>8} {:>6}", counts.v_gates, counts.w_factors, counts.depth);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> laughlin::Result<()> {
    run_example()
}
