//! Entanglement entropy across wire bipartitions, per-gate entropy traces,
//! and the coordinate-space check against the Vandermonde × Gaussian form.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::Serialize;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::oracle::{run, SimOptions};
use crate::qudit::QuditState;

/// Singular values at or below this are treated as exact zeros.
pub const SINGULAR_CUTOFF: f64 = 1e-14;

/// Von Neumann entropy in bits of the reduced state on `subset`.
///
/// The state is reshaped into a `d^|A| × d^(n−|A|)` matrix with rows indexed
/// by the subset's digits (in ascending wire order), and the entropy is
/// `−Σ σ² log₂ σ²` over its singular values.
pub fn bipartite_entropy(state: &QuditState, subset: &[usize]) -> Result<f64> {
    let n = state.wires();
    let d = state.dim();
    let mut inside = vec![false; n];
    for &w in subset {
        if w >= n {
            return Err(Error::bounds("wire", w, format!("0..{n}")));
        }
        if inside[w] {
            return Err(Error::Structural(format!("wire {w} repeated in subset")));
        }
        inside[w] = true;
    }
    if subset.is_empty() || subset.len() == n {
        return Err(Error::bounds("subset size", subset.len(), format!("1..={}", n - 1)));
    }

    // Only rows and columns that carry amplitude matter; the rest are zero.
    let mut row_ids = BTreeMap::new();
    let mut col_ids = BTreeMap::new();
    let mut entries = Vec::new();
    for (idx, amp) in state.amplitudes().iter().enumerate() {
        if *amp == Complex64::new(0.0, 0.0) {
            continue;
        }
        let digits = state.digits_of(idx);
        let (mut r, mut c) = (0usize, 0usize);
        for (w, &x) in digits.iter().enumerate() {
            if inside[w] {
                r = r * d + x;
            } else {
                c = c * d + x;
            }
        }
        let next = row_ids.len();
        let r = *row_ids.entry(r).or_insert(next);
        let next = col_ids.len();
        let c = *col_ids.entry(c).or_insert(next);
        entries.push((r, c, *amp));
    }
    if entries.is_empty() {
        return Err(Error::Degenerate("state has no amplitude".into()));
    }
    let (rows, cols) = (row_ids.len(), col_ids.len());
    let mut m = DMatrix::<Complex64>::zeros(rows.min(cols), rows.max(cols));
    for (r, c, amp) in entries {
        if rows <= cols {
            m[(r, c)] = amp;
        } else {
            m[(c, r)] = amp.conj();
        }
    }
    Ok(schmidt_weights(m)
        .into_iter()
        .filter(|&p| p > SINGULAR_CUTOFF * SINGULAR_CUTOFF)
        .map(|p| -p * p.log2())
        .sum::<f64>()
        .max(0.0))
}

/// Squared singular values of `m`, which must have no more rows than columns.
fn schmidt_weights(m: DMatrix<Complex64>) -> Vec<f64> {
    if let Some(svd) = m.clone().try_svd(false, false, f64::EPSILON, 10_000) {
        return svd.singular_values.iter().map(|s| s * s).collect();
    }
    let gram = &m * m.adjoint();
    gram.symmetric_eigenvalues().iter().map(|&l| l.max(0.0)).collect()
}

/// `log₂ C(n, k)` from the exact integer binomial.
pub fn binomial_entropy(n: usize, k: usize) -> Result<f64> {
    if k > n {
        return Err(Error::bounds("k", k, format!("0..={n}")));
    }
    Ok((binomial(n as u128, k as u128) as f64).log2())
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `k log₂ n − log₂ C(n, k)`: how far a `k`-particle block sits below the
/// maximal entropy of `k` qudits of dimension `n`.
pub fn saturation_gap(n: usize, k: usize) -> Result<f64> {
    if k < 1 || 2 * k > n {
        return Err(Error::bounds("k", k, format!("1..={}", n / 2)));
    }
    Ok(k as f64 * (n as f64).log2() - binomial_entropy(n, k)?)
}

/// Expected entropy increase across cut `k` from gate `V_k^{[stage]}`.
pub fn expected_increment(stage: usize, k: usize) -> f64 {
    (stage as f64 / (stage - k) as f64).log2()
}

#[derive(Debug, Clone, Serialize)]
pub struct EntropyStep {
    pub gate: usize,
    pub stage: usize,
    pub k: usize,
    pub entropy: f64,
    pub delta: f64,
    /// Predicted increment: `log₂(stage/(stage−cut))` on the cut, `0` off it.
    pub expected_delta: f64,
}

impl EntropyStep {
    pub fn line(&self) -> String {
        format!(
            "gate={} stage={} k={} S={:.12} dS={:.12} dS_expected={:.12}",
            self.gate, self.stage, self.k, self.entropy, self.delta, self.expected_delta
        )
    }
}

/// Entropy across the cut between wires `0..cut` and `cut..n`, after each gate.
#[derive(Debug, Clone, Serialize)]
pub struct EntropyTrace {
    pub cut: usize,
    pub initial: f64,
    pub steps: Vec<EntropyStep>,
}

impl EntropyTrace {
    pub fn final_entropy(&self) -> f64 {
        self.steps.last().map_or(self.initial, |s| s.entropy)
    }

    /// Largest `|dS − dS_expected|` over all steps.
    pub fn max_increment_error(&self) -> f64 {
        self.steps
            .iter()
            .map(|s| (s.delta - s.expected_delta).abs())
            .fold(0.0, f64::max)
    }
}

pub fn entropy_trace(circuit: &Circuit, cut: usize, opts: &SimOptions) -> Result<EntropyTrace> {
    let n = circuit.n();
    if !(1..n).contains(&cut) {
        return Err(Error::bounds("cut", cut, format!("1..={}", n - 1)));
    }
    let trace = run(circuit, true, opts)?;
    let snaps = trace.snapshots.expect("snapshots were requested");
    entropy_trace_from(circuit, &snaps, cut)
}

/// Same as [`entropy_trace`] over snapshots already captured by [`run`].
pub fn entropy_trace_from(circuit: &Circuit, snapshots: &[(usize, QuditState)], cut: usize) -> Result<EntropyTrace> {
    let n = circuit.n();
    if !(1..n).contains(&cut) {
        return Err(Error::bounds("cut", cut, format!("1..={}", n - 1)));
    }
    if snapshots.len() != circuit.gates().len() {
        return Err(Error::Structural(format!(
            "{} snapshots for {} gates",
            snapshots.len(),
            circuit.gates().len()
        )));
    }
    let block: Vec<usize> = (0..cut).collect();
    let start = QuditState::basis_state(circuit.input())?;
    let initial = bipartite_entropy(&start, &block)?;
    let mut prev = initial;
    let mut steps = Vec::with_capacity(snapshots.len());
    for (idx, state) in snapshots {
        let gate = &circuit.gates()[*idx];
        let entropy = bipartite_entropy(state, &block)?;
        steps.push(EntropyStep {
            gate: *idx,
            stage: gate.stage,
            k: gate.k,
            entropy,
            delta: entropy - prev,
            expected_delta: if gate.k == cut {
                expected_increment(gate.stage, cut)
            } else {
                0.0
            },
        });
        prev = entropy;
    }
    Ok(EntropyTrace { cut, initial, steps })
}

/// `φ_l(z) = z^l e^{−|z|²/2} / √(π l!)`
pub fn fock_darwin(l: usize, z: Complex64) -> Complex64 {
    let log_fact: f64 = (1..=l).map(|i| (i as f64).ln()).sum();
    let scale = (-z.norm_sqr() / 2.0 - 0.5 * (std::f64::consts::PI.ln() + log_fact)).exp();
    z.powu(l as u32) * scale
}

#[derive(Debug, Clone, Serialize)]
pub struct CoordinateSample {
    pub zs: Vec<(f64, f64)>,
    /// `Σ amp · Π_j φ_{digit_j}(z_j)`
    pub amplitude: (f64, f64),
    /// `Π_{i<j}(z_i − z_j) e^{−Σ|z_j|²/2}`
    pub reference: (f64, f64),
}

#[derive(Debug, Clone, Serialize)]
pub struct CoordinateReport {
    pub seed: u64,
    pub samples: Vec<CoordinateSample>,
    /// `max |A/R − c| / |c|` with `c` the first sample's ratio.
    pub max_relative_spread: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Spread tolerated by [`coordinate_check`] before it reports a failure.
pub const COORDINATE_TOLERANCE: f64 = 1e-8;

const MIN_SEPARATION: f64 = 1e-6;

/// Projects `state` onto random particle positions and checks that the
/// result is a constant multiple of the Vandermonde × Gaussian function.
pub fn coordinate_check(state: &QuditState, samples: usize, seed: u64) -> Result<CoordinateReport> {
    if samples < 2 {
        return Err(Error::bounds("samples", samples, ">= 2"));
    }
    let n = state.wires();
    let d = state.dim();
    let support: Vec<_> = state.nonzero(0.0).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // unit variance overall: each of re, im carries half
    let normal = Normal::new(0.0, std::f64::consts::FRAC_1_SQRT_2).expect("finite std");

    let mut out = Vec::with_capacity(samples);
    let mut first_ratio = None;
    let mut spread: f64 = 0.0;
    while out.len() < samples {
        let zs: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(normal.sample(&mut rng), normal.sample(&mut rng)))
            .collect();
        let coincident = (0..n).any(|a| (a + 1..n).any(|b| (zs[a] - zs[b]).norm() < MIN_SEPARATION));
        if coincident {
            continue;
        }
        let table: Vec<Vec<Complex64>> = zs.iter().map(|&z| (0..d).map(|l| fock_darwin(l, z)).collect()).collect();
        let amplitude: Complex64 = support
            .iter()
            .map(|(digits, amp)| amp * digits.iter().enumerate().map(|(j, &l)| table[j][l]).product::<Complex64>())
            .sum();
        let vandermonde: Complex64 = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .map(|(a, b)| zs[a] - zs[b])
            .product();
        let gauss = (-zs.iter().map(|z| z.norm_sqr()).sum::<f64>() / 2.0).exp();
        let reference = vandermonde * gauss;
        let ratio = amplitude / reference;
        match first_ratio {
            None => first_ratio = Some(ratio),
            Some(c) => spread = spread.max((ratio - c).norm() / c.norm()),
        }
        out.push(CoordinateSample {
            zs: zs.iter().map(|z| (z.re, z.im)).collect(),
            amplitude: (amplitude.re, amplitude.im),
            reference: (reference.re, reference.im),
        });
    }
    if !spread.is_finite() {
        spread = f64::INFINITY;
    }
    Ok(CoordinateReport {
        seed,
        samples: out,
        max_relative_spread: spread,
        tolerance: COORDINATE_TOLERANCE,
        pass: spread <= COORDINATE_TOLERANCE,
    })
}
