// Parity, inversion counts and reduced words for small symmetric groups.
//
// The V-gate count of the circuit equals the length of a reduced word for
// the longest permutation, which is what `optimality_check` confirms.

use laughlin::{enumerate_permutations, optimality_check, Permutation, ReducedWord};

pub fn run_example() -> laughlin::Result<()> {
    println!("permutations of 3:");
    for p in enumerate_permutations(3)? {
        let word = p.canonical_reduced_decomposition();
        println!(
            "  {:?}  inversions={} parity={:+}  word={:?}",
            p.as_slice(),
            p.inversions(),
            p.parity(),
            word.letters()
        );
    }

    let reversal = Permutation::maximum(5);
    let word = reversal.canonical_reduced_decomposition();
    println!("reversal of 5 has {} inversions, word {:?}", reversal.inversions(), word.letters());
    assert_eq!(word.apply_to_identity(), reversal);

    // s1 s2 s1 is reduced, s1 s1 is not
    let braid = ReducedWord::new(3, vec![1, 2, 1])?;
    println!("s1 s2 s1 -> {:?}", braid.apply_to_identity().as_slice());

    for n in 2..=10 {
        assert!(optimality_check(n)?);
    }
    println!("V-gate count matches the reversal word length for n = 2..10");
    Ok(())
}

#[allow(dead_code)]
fn main() -> laughlin::Result<()> {
    run_example()
}
