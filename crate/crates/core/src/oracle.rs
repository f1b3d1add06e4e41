//! Circuit execution on the dense statevector and the brute-force
//! (anti)symmetrized reference state it is checked against.

use num_complex::Complex64;
use serde::Serialize;

use crate::circuit::{build_circuit, Circuit, Variant};
use crate::error::{Error, Result};
use crate::perm::enumerate_permutations;
use crate::qudit::{QuditState, Sign};

/// `8^8`: the largest state simulated without an explicit override.
pub const DEFAULT_MAX_AMPLITUDES: usize = 16_777_216;

/// Largest `n` for which [`oracle_state`] enumerates permutations.
pub const MAX_ORACLE_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimOptions {
    pub max_amplitudes: usize,
}

impl Default for SimOptions {
    fn default() -> Self {
        Self {
            max_amplitudes: DEFAULT_MAX_AMPLITUDES,
        }
    }
}

impl SimOptions {
    pub fn check(&self, n: usize) -> Result<()> {
        let needed = u32::try_from(n).ok().and_then(|e| n.checked_pow(e));
        match needed {
            Some(len) if len <= self.max_amplitudes => Ok(()),
            Some(len) => Err(Error::Resource(format!(
                "n={n} needs n^n = {len} amplitudes, guard allows {}",
                self.max_amplitudes
            ))),
            None => Err(Error::Resource(format!("n={n} needs n^n amplitudes, which overflows"))),
        }
    }
}

/// Equality tolerance for circuit-vs-oracle comparisons at a given `n`.
pub fn tolerance_for(n: usize) -> f64 {
    if n <= 6 {
        1e-10
    } else {
        1e-9
    }
}

#[derive(Debug, Clone)]
pub struct RunTrace {
    pub final_state: QuditState,
    /// `(gate index, state after that gate)`, present only when requested.
    pub snapshots: Option<Vec<(usize, QuditState)>>,
}

/// Applies every `W` factor of every gate to the circuit's input state.
pub fn run(circuit: &Circuit, snapshots: bool, opts: &SimOptions) -> Result<RunTrace> {
    opts.check(circuit.n())?;
    let mut state = QuditState::basis_state(circuit.input())?;
    let mut snaps = snapshots.then(|| Vec::with_capacity(circuit.gates().len()));
    for (idx, gate) in circuit.gates().iter().enumerate() {
        for w in &gate.factors {
            state.apply_w(w)?;
        }
        if let Some(snaps) = snaps.as_mut() {
            snaps.push((idx, state.clone()));
        }
    }
    Ok(RunTrace {
        final_state: state,
        snapshots: snaps,
    })
}

/// `(1/√n!) Σ_P sign(P) |P(0), …, P(n−1)⟩`, or the all-plus sum for `Sign::Symmetric`.
pub fn oracle_state(n: usize, sign: Sign) -> Result<QuditState> {
    if !(2..=MAX_ORACLE_N).contains(&n) {
        return Err(Error::bounds("n", n, format!("2..={MAX_ORACLE_N}")));
    }
    let mut state = QuditState::zeros(n, n)?;
    let norm = 1.0 / ((1..=n).product::<usize>() as f64).sqrt();
    for p in enumerate_permutations(n)? {
        let s = match sign {
            Sign::Antisymmetric => f64::from(p.parity()),
            Sign::Symmetric => 1.0,
        };
        state.set_amplitude(p.as_slice(), Complex64::new(s * norm, 0.0))?;
    }
    Ok(state)
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub n: usize,
    pub variant: String,
    pub distance: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Global phase removed before comparing; `(1, 0)` unless the variant
    /// leaves it free.
    pub phase: (f64, f64),
}

/// Runs `build_circuit(n, variant)` and compares amplitude-wise with the oracle.
///
/// The antisymmetric and symmetric circuits are compared with no phase
/// freedom. For `SymReversed` the overlap phase with the symmetric oracle is
/// divided out first and reported.
pub fn verify(n: usize, variant: Variant, opts: &SimOptions) -> Result<Verification> {
    opts.check(n)?;
    let circuit = build_circuit(n, variant)?;
    let out = run(&circuit, false, opts)?.final_state;
    let oracle = oracle_state(n, variant.target_sign())?;
    let phase = match variant {
        Variant::SymReversed => global_phase(&oracle, &out)?,
        _ => Complex64::new(1.0, 0.0),
    };
    let distance = out.max_amplitude_distance(&oracle.scaled(phase))?;
    let tolerance = tolerance_for(n);
    Ok(Verification {
        n,
        variant: variant.to_string(),
        distance,
        tolerance,
        pass: distance <= tolerance,
        phase: (phase.re, phase.im),
    })
}

/// Unit-modulus phase `e^{iφ}` with `b ≈ e^{iφ} a`; `1` if the states are orthogonal.
pub fn global_phase(a: &QuditState, b: &QuditState) -> Result<Complex64> {
    let overlap = a.inner_product(b)?;
    let mag = overlap.norm();
    Ok(if mag > 0.0 {
        overlap / mag
    } else {
        Complex64::new(1.0, 0.0)
    })
}

impl Verification {
    pub fn report_line(&self) -> String {
        format!(
            "n={} variant={} distance={:e} tolerance={:e} pass={}",
            self.n, self.variant, self.distance, self.tolerance, self.pass
        )
    }
}
