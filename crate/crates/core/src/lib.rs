//! Exact qudit circuit for the `ν = 1` Laughlin state.
//!
//! `n` qudits of dimension `n` start in `|0, 1, …, n−1⟩`. A ladder of
//! `n(n−1)/2` adjacent two-qudit gates, each a product of commuting
//! transposition rotations, turns that product state into the fully
//! antisymmetric superposition of all permutations. That superposition is the
//! Slater determinant of the lowest Fock–Darwin orbitals.
//!
//! The crate is organised around that circuit:
//!
//! - [`perm`]: permutation enumeration, parity and reduced words.
//! - [`qudit`]: dense statevector and the `W` rotation.
//! - [`circuit`]: the recursive circuit, its variants, counts and text format.
//! - [`oracle`]: execution and the permutation-sum reference state.
//! - [`analysis`]: bipartite entropy, entropy traces, coordinate-space checks.
//! - [`qubit`] and [`compiler`]: lowering to multi-controlled qubit ops along
//!   Gray-code paths, and an exact simulator for the result.
//! - [`cli`]: the `laughlin` command-line tool.
//!
//! ```
//! use laughlin::{build_circuit, oracle_state, run, Sign, SimOptions, Variant};
//!
//! let circuit = build_circuit(4, Variant::Antisym).unwrap();
//! let out = run(&circuit, false, &SimOptions::default()).unwrap().final_state;
//! let reference = oracle_state(4, Sign::Antisymmetric).unwrap();
//! assert!(out.max_amplitude_distance(&reference).unwrap() < 1e-12);
//! ```

pub mod analysis;
pub mod circuit;
pub mod cli;
pub mod compiler;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod qubit;
pub mod qudit;

pub use analysis::{bipartite_entropy, binomial_entropy, coordinate_check, entropy_trace, EntropyTrace};
pub use circuit::{build_circuit, closed_form_counts, optimality_check, Circuit, GateCounts, VGate, Variant};
pub use compiler::{compile_circuit, cost_report, verify_compiled, Encoding, EncodingKind, QubitProgram};
pub use error::{Error, Result};
pub use oracle::{oracle_state, run, verify, RunTrace, SimOptions};
pub use perm::{enumerate_permutations, Permutation, ReducedWord};
pub use qudit::{QuditState, Sign, WGate};
