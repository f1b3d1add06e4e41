//! Lowering of `W` gates to multi-controlled qubit ops along Gray-code paths.
//!
//! A `W_{ij}` on wires `(a, b)` rotates the two encoded basis strings
//! `enc(i)‖enc(j)` and `enc(j)‖enc(i)`. The compiled block walks the first
//! string towards the second with fully controlled flips until one bit is
//! left, rotates on that pivot bit, then walks back.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::circuit::{build_circuit, Circuit, Variant};
use crate::error::{Error, Result};
use crate::oracle::{oracle_state, SimOptions};
use crate::qubit::{self, theta_for_weight, Control, QubitOp, QubitState, DEFAULT_MAX_QUBITS};
use crate::qudit::{QuditState, Sign, WGate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EncodingKind {
    Binary,
    Unary,
}

impl EncodingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EncodingKind::Binary => "binary",
            EncodingKind::Unary => "unary",
        }
    }
}

impl fmt::Display for EncodingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EncodingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binary" => Ok(EncodingKind::Binary),
            "unary" => Ok(EncodingKind::Unary),
            _ => Err(Error::Degenerate(format!("unknown encoding `{s}` (binary, unary)"))),
        }
    }
}

/// How each of the `n` qudits is laid out on `r` consecutive qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Encoding {
    pub kind: EncodingKind,
    pub n: usize,
    pub r: usize,
}

impl Encoding {
    /// Binary uses `⌈log₂ n⌉` bits (at least one); unary uses `n`.
    pub fn new(kind: EncodingKind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::bounds("n", n, "n >= 2"));
        }
        let r = match kind {
            EncodingKind::Binary => (usize::BITS - (n - 1).leading_zeros()).max(1) as usize,
            EncodingKind::Unary => n,
        };
        Ok(Self { kind, n, r })
    }

    /// Explicit register width; rejects widths too small for the values.
    pub fn with_width(kind: EncodingKind, n: usize, r: usize) -> Result<Self> {
        let minimal = Self::new(kind, n)?;
        let fits = match kind {
            EncodingKind::Binary => r >= minimal.r,
            EncodingKind::Unary => r == n,
        };
        if !fits {
            return Err(Error::Structural(format!("{kind} encoding of {n} values cannot use r={r}")));
        }
        Ok(Self { kind, n, r })
    }

    pub fn total_qubits(&self) -> usize {
        self.n * self.r
    }

    /// Global qubit index of bit `bit` of wire `wire`.
    pub fn qubit(&self, wire: usize, bit: usize) -> usize {
        wire * self.r + bit
    }
}

/// A fixed-length string of bits, written most significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitString(pub Vec<bool>);

impl BitString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        BitString(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn hamming(&self, other: &BitString) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Degenerate(format!("`{s}` is not a bitstring"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitString)
    }
}

/// Bits of `v` under `e`; binary is MSB first, unary sets position `v`.
pub fn encode_value(v: usize, e: &Encoding) -> Result<BitString> {
    if v >= e.n {
        return Err(Error::bounds("value", v, format!("0..{}", e.n)));
    }
    Ok(BitString(match e.kind {
        EncodingKind::Binary => (0..e.r).rev().map(|k| v >> k & 1 == 1).collect(),
        EncodingKind::Unary => (0..e.r).map(|k| k == v).collect(),
    }))
}

/// Path from `source` to the string one bit away from `dest`.
///
/// Differing bits are flipped left to right, all except the rightmost, which
/// becomes the pivot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayPath {
    pub source: BitString,
    pub dest: BitString,
    /// `source` followed by the string after each flip.
    pub steps: Vec<BitString>,
    /// Bit positions flipped, in order (0-based).
    pub flips: Vec<usize>,
    /// 0-based position of the last differing bit.
    pub pivot: usize,
}

impl GrayPath {
    pub fn last(&self) -> &BitString {
        self.steps.last().expect("path always holds its source")
    }
}

pub fn gray_path(src: &BitString, dst: &BitString) -> Result<GrayPath> {
    if src.len() != dst.len() {
        return Err(Error::Structural(format!("bitstrings of lengths {} and {}", src.len(), dst.len())));
    }
    let differing: Vec<usize> = (0..src.len()).filter(|&k| src.0[k] != dst.0[k]).collect();
    let Some((&pivot, flips)) = differing.split_last() else {
        return Err(Error::Degenerate(format!("source and destination are both {src}")));
    };
    let mut steps = vec![src.clone()];
    for &k in flips {
        let mut next = steps.last().unwrap().clone();
        next.0[k] ^= true;
        steps.push(next);
    }
    Ok(GrayPath {
        source: src.clone(),
        dest: dst.clone(),
        steps,
        flips: flips.to_vec(),
        pivot,
    })
}

/// Qubits touched by `g` and the two encoded strings it rotates.
fn active_register(g: &WGate, e: &Encoding) -> Result<(Vec<usize>, BitString, BitString)> {
    if g.j >= e.n {
        return Err(Error::Structural(format!(
            "gate value {} does not fit a {} encoding of {} values",
            g.j, e.kind, e.n
        )));
    }
    if g.wire_b >= e.n {
        return Err(Error::Structural(format!("gate wire {} beyond {} wires", g.wire_b, e.n)));
    }
    match e.kind {
        EncodingKind::Binary => {
            let (ei, ej) = (encode_value(g.i, e)?, encode_value(g.j, e)?);
            let qubits = (0..e.r)
                .map(|b| e.qubit(g.wire_a, b))
                .chain((0..e.r).map(|b| e.qubit(g.wire_b, b)))
                .collect();
            Ok((qubits, ei.concat(&ej), ej.concat(&ei)))
        }
        EncodingKind::Unary => {
            // only the i and j bits of each block change
            let qubits = vec![
                e.qubit(g.wire_a, g.i),
                e.qubit(g.wire_a, g.j),
                e.qubit(g.wire_b, g.i),
                e.qubit(g.wire_b, g.j),
            ];
            let src = BitString(vec![true, false, false, true]);
            let dst = BitString(vec![false, true, true, false]);
            Ok((qubits, src, dst))
        }
    }
}

fn controls_except(qubits: &[usize], bits: &BitString, skip: usize) -> Vec<Control> {
    qubits
        .iter()
        .zip(&bits.0)
        .enumerate()
        .filter(|(k, _)| *k != skip)
        .map(|(_, (&qubit, &polarity))| Control { qubit, polarity })
        .collect()
}

/// Lowers one `W` gate to forward flips, a pivot rotation, and the flips reversed.
pub fn compile_w(g: &WGate, e: &Encoding) -> Result<Vec<QubitOp>> {
    let (qubits, src, dst) = active_register(g, e)?;
    let path = gray_path(&src, &dst)?;
    let forward: Vec<QubitOp> = path
        .flips
        .iter()
        .zip(&path.steps)
        .map(|(&k, before)| QubitOp::McFlip {
            controls: controls_except(&qubits, before, k),
            target: qubits[k],
        })
        .collect();
    // |ij⟩ lands on `last`; the rotation must send it to √p|ij⟩ ∓ √(1−p)|ji⟩
    let lands_on_one = path.last().0[path.pivot];
    let dagger = lands_on_one ^ (g.sign == Sign::Symmetric);
    let rotation = QubitOp::McRot {
        controls: controls_except(&qubits, path.last(), path.pivot),
        target: qubits[path.pivot],
        theta: theta_for_weight(g.p),
        dagger,
    };
    let mut ops = Vec::with_capacity(2 * forward.len() + 1);
    ops.extend(forward.iter().cloned());
    ops.push(rotation);
    ops.extend(forward.into_iter().rev());
    Ok(ops)
}

/// X flips preparing the encoded product state `digits`.
pub fn prep_ops(digits: &[usize], e: &Encoding) -> Result<Vec<QubitOp>> {
    let mut ops = Vec::new();
    for (wire, &v) in digits.iter().enumerate() {
        for (bit, set) in encode_value(v, e)?.0.into_iter().enumerate() {
            if set {
                ops.push(QubitOp::Flip { target: e.qubit(wire, bit) });
            }
        }
    }
    Ok(ops)
}

#[derive(Debug, Clone, PartialEq)]
pub struct QubitProgram {
    pub encoding: Encoding,
    pub prep: Vec<QubitOp>,
    pub ops: Vec<QubitOp>,
    /// Number of `W` gates lowered into `ops`.
    pub compiled_w: usize,
}

pub fn compile_circuit(c: &Circuit, e: &Encoding) -> Result<QubitProgram> {
    if c.n() != e.n {
        return Err(Error::Structural(format!("circuit has n={}, encoding has n={}", c.n(), e.n)));
    }
    let mut ops = Vec::new();
    let mut compiled_w = 0;
    for w in c.w_factors() {
        ops.extend(compile_w(w, e)?);
        compiled_w += 1;
    }
    Ok(QubitProgram {
        encoding: *e,
        prep: prep_ops(c.input(), e)?,
        ops,
        compiled_w,
    })
}

impl QubitProgram {
    pub fn header(e: &Encoding) -> String {
        format!("qprog qubits={} encoding={} n={} r={}", e.total_qubits(), e.kind, e.n, e.r)
    }

    pub fn to_text(&self) -> String {
        let mut out = Self::header(&self.encoding);
        out.push('\n');
        qubit::write_ops(&mut out, &self.prep);
        qubit::write_ops(&mut out, &self.ops);
        out
    }

    /// Leading `x` lines are the preparation; everything after is the body.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, header) = lines.next().ok_or_else(|| Error::parse(1, "empty program"))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("qprog") {
            return Err(Error::parse(ln, "expected `qprog` header"));
        }
        let (mut qubits, mut kind, mut n, mut r) = (None, None, None, None);
        for f in fields {
            let bad = || Error::parse(ln, format!("bad header field `{f}`"));
            match f.split_once('=') {
                Some(("qubits", v)) => qubits = Some(v.parse::<usize>().map_err(|_| bad())?),
                Some(("encoding", v)) => kind = Some(v.parse::<EncodingKind>().map_err(|_| bad())?),
                Some(("n", v)) => n = Some(v.parse::<usize>().map_err(|_| bad())?),
                Some(("r", v)) => r = Some(v.parse::<usize>().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        let (Some(qubits), Some(kind), Some(n), Some(r)) = (qubits, kind, n, r) else {
            return Err(Error::parse(ln, "header needs qubits=, encoding=, n= and r="));
        };
        let encoding = Encoding::with_width(kind, n, r).map_err(|e| Error::parse(ln, e.to_string()))?;
        if encoding.total_qubits() != qubits {
            return Err(Error::parse(ln, format!("qubits={qubits} but n·r = {}", encoding.total_qubits())));
        }
        let mut prep = Vec::new();
        let mut ops = Vec::new();
        for (ln, line) in lines {
            let op = QubitOp::parse_line(line, ln)?;
            if op.target() >= qubits || op.controls().iter().any(|c| c.qubit >= qubits) {
                return Err(Error::parse(ln, format!("qubit index beyond {qubits}")));
            }
            if ops.is_empty() && !op.is_multi_controlled() {
                prep.push(op);
            } else {
                ops.push(op);
            }
        }
        let compiled_w = ops.iter().filter(|op| matches!(op, QubitOp::McRot { .. })).count();
        Ok(Self {
            encoding,
            prep,
            ops,
            compiled_w,
        })
    }

    pub fn mc_ops(&self) -> usize {
        self.ops.iter().filter(|op| op.is_multi_controlled()).count()
    }

    pub fn total_control_arity(&self) -> usize {
        self.ops.iter().map(|op| op.controls().len()).sum()
    }
}

/// Writes the IR text of `compile_circuit(c, e)` one `W` block at a time,
/// returning the number of blocks written.
pub fn write_compiled(c: &Circuit, e: &Encoding, w: &mut impl std::io::Write) -> Result<usize> {
    if c.n() != e.n {
        return Err(Error::Structural(format!("circuit has n={}, encoding has n={}", c.n(), e.n)));
    }
    writeln!(w, "{}", QubitProgram::header(e))?;
    for op in prep_ops(c.input(), e)? {
        writeln!(w, "{op}")?;
    }
    let mut blocks = 0;
    for g in c.w_factors() {
        for op in compile_w(g, e)? {
            writeln!(w, "{op}")?;
        }
        blocks += 1;
    }
    Ok(blocks)
}

/// Runs `prep` then `ops` from `|0…0⟩`.
pub fn simulate_program(p: &QubitProgram, max_qubits: usize) -> Result<QubitState> {
    let mut state = QubitState::zero(p.encoding.total_qubits(), max_qubits)?;
    for op in p.prep.iter().chain(&p.ops) {
        state.apply(op)?;
    }
    Ok(state)
}

/// Places a qudit state into the qubit register, wire by wire.
pub fn embed_state(state: &QuditState, e: &Encoding, max_qubits: usize) -> Result<QubitState> {
    if state.wires() != e.n || state.dim() > e.n {
        return Err(Error::Structural(format!(
            "state (n={}, d={}) does not match encoding of n={}",
            state.wires(),
            state.dim(),
            e.n
        )));
    }
    let q = e.total_qubits();
    let zero = QubitState::zero(q, max_qubits)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); zero.amplitudes().len()];
    for (digits, amp) in state.nonzero(0.0) {
        let mut idx = 0usize;
        for &v in &digits {
            for bit in encode_value(v, e)?.0 {
                idx = idx << 1 | usize::from(bit);
            }
        }
        amps[idx] = amp;
    }
    QubitState::from_amplitudes(q, amps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QubitOptions {
    pub max_qubits: usize,
}

impl Default for QubitOptions {
    fn default() -> Self {
        Self {
            max_qubits: DEFAULT_MAX_QUBITS,
        }
    }
}

/// Tolerance for compiled-vs-oracle agreement.
pub const COMPILED_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Serialize)]
pub struct CompiledVerification {
    pub n: usize,
    pub encoding: EncodingKind,
    pub variant: String,
    pub qubits: usize,
    pub distance: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CompiledVerification {
    pub fn report_line(&self) -> String {
        format!(
            "n={} encoding={} variant={} qubits={} distance={:e} tolerance={:e} pass={}",
            self.n, self.encoding, self.variant, self.qubits, self.distance, self.tolerance, self.pass
        )
    }
}

/// Simulates the compiled program and compares it with the encoded oracle.
pub fn verify_compiled(n: usize, kind: EncodingKind, variant: Variant, opts: &QubitOptions) -> Result<CompiledVerification> {
    let e = Encoding::new(kind, n)?;
    if e.total_qubits() > opts.max_qubits {
        return Err(Error::Resource(format!(
            "{kind} encoding of n={n} needs {} qubits, budget is {}",
            e.total_qubits(),
            opts.max_qubits
        )));
    }
    let circuit = build_circuit(n, variant)?;
    let program = compile_circuit(&circuit, &e)?;
    let out = simulate_program(&program, opts.max_qubits)?;
    // the qudit oracle fixes the phase of the sym_reversed output, so only
    // the variants without a free phase are compared against it directly
    let reference = match variant {
        Variant::SymReversed => {
            let qudit = crate::oracle::run(&circuit, false, &SimOptions::default())?.final_state;
            embed_state(&qudit, &e, opts.max_qubits)?
        }
        _ => embed_state(&oracle_state(n, variant.target_sign())?, &e, opts.max_qubits)?,
    };
    let distance = out.max_amplitude_distance(&reference)?;
    Ok(CompiledVerification {
        n,
        encoding: kind,
        variant: variant.to_string(),
        qubits: e.total_qubits(),
        distance,
        tolerance: COMPILED_TOLERANCE,
        pass: distance <= COMPILED_TOLERANCE,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub n: usize,
    pub encoding: EncodingKind,
    pub qubits: usize,
    pub compiled_w: usize,
    pub mc_ops: usize,
    pub total_control_arity: usize,
}

/// Counts the lowered antisymmetric circuit without materialising the program.
///
/// A `W` whose encoded strings differ in `h` bits lowers to `2h − 1` ops, each
/// controlled on every other active qubit.
pub fn cost_report(n: usize, kind: EncodingKind) -> Result<CostReport> {
    let e = Encoding::new(kind, n)?;
    let circuit = build_circuit(n, Variant::Antisym)?;
    let mut report = CostReport {
        n,
        encoding: kind,
        qubits: e.total_qubits(),
        compiled_w: 0,
        mc_ops: 0,
        total_control_arity: 0,
    };
    for w in circuit.w_factors() {
        let (qubits, src, dst) = active_register(w, &e)?;
        let ops = 2 * src.hamming(&dst) - 1;
        report.compiled_w += 1;
        report.mc_ops += ops;
        report.total_control_arity += ops * (qubits.len() - 1);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubit::permute_basis;

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn binary(n: usize) -> Encoding {
        Encoding::new(EncodingKind::Binary, n).unwrap()
    }

    #[test]
    fn encodings() {
        let e = Encoding::with_width(EncodingKind::Binary, 6, 3).unwrap();
        assert_eq!(encode_value(5, &e).unwrap(), bits("101"));
        assert_eq!(encode_value(3, &e).unwrap(), bits("011"));
        let u = Encoding::new(EncodingKind::Unary, 3).unwrap();
        assert_eq!(encode_value(1, &u).unwrap(), bits("010"));
        assert!(encode_value(3, &u).is_err());
        assert_eq!(binary(2).r, 1);
        assert_eq!(binary(4).r, 2);
        assert_eq!(binary(5).r, 3);
        assert_eq!(binary(8).r, 3);
        assert_eq!(binary(9).r, 4);
        assert!(Encoding::with_width(EncodingKind::Binary, 6, 2).is_err());
    }

    #[test]
    fn w35_gray_path() {
        let p = gray_path(&bits("011101"), &bits("101011")).unwrap();
        let steps: Vec<String> = p.steps.iter().map(|s| s.to_string()).collect();
        assert_eq!(steps, ["011101", "111101", "101101", "101001"]);
        assert_eq!(p.pivot + 1, 5);
        assert_eq!(p.flips, vec![0, 1, 3]);
    }

    #[test]
    fn small_gray_paths() {
        let p = gray_path(&bits("01"), &bits("10")).unwrap();
        assert_eq!(p.steps, vec![bits("01"), bits("11")]);
        assert_eq!(p.pivot, 1);
        let p = gray_path(&bits("0"), &bits("1")).unwrap();
        assert!(p.flips.is_empty());
        assert_eq!(p.pivot, 0);
        assert!(matches!(gray_path(&bits("01"), &bits("01")), Err(Error::Degenerate(_))));
        assert!(gray_path(&bits("01"), &bits("101")).is_err());
    }

    #[test]
    fn w35_compiles_to_seven_ops() {
        let e = Encoding::with_width(EncodingKind::Binary, 6, 3).unwrap();
        let g = WGate::new(0, 1, 3, 5, 0.5, Sign::Antisymmetric).unwrap();
        let ops = compile_w(&g, &e).unwrap();
        assert_eq!(ops.len(), 7);
        assert!(matches!(ops[3], QubitOp::McRot { target: 4, .. }));
        assert!(ops.iter().all(|op| op.controls().len() == 5));
        assert_eq!(ops[0], ops[6]);
        // forward flips carry 011 101 to 101 001
        let mut b = bits("011101").0;
        permute_basis(&ops[..3], &mut b).unwrap();
        assert_eq!(BitString(b), bits("101001"));
    }

    #[test]
    fn unary_uses_three_distinct_flips() {
        let e = Encoding::new(EncodingKind::Unary, 2).unwrap();
        let g = WGate::new(0, 1, 0, 1, 0.5, Sign::Antisymmetric).unwrap();
        let ops = compile_w(&g, &e).unwrap();
        assert_eq!(ops.len(), 7);
        let mut uniq: Vec<&QubitOp> = Vec::new();
        for op in ops.iter().filter(|o| matches!(o, QubitOp::McFlip { .. })) {
            if !uniq.contains(&op) {
                uniq.push(op);
            }
        }
        assert_eq!(uniq.len(), 3);
        assert_eq!(ops.iter().filter(|o| matches!(o, QubitOp::McRot { .. })).count(), 1);
        assert!(ops.iter().all(|op| op.controls().len() == 3));
    }

    /// Applies the compiled block to every encoded two-qudit basis state and
    /// compares with the qudit gate applied directly.
    fn check_w_roundtrip(g: &WGate, e: &Encoding) {
        let ops = compile_w(g, e).unwrap();
        for k in 0..e.n {
            for l in 0..e.n {
                let input = QuditState::basis_state_with_dim(&[k, l], e.n).unwrap();
                let mut want = input.clone();
                want.apply_w(g).unwrap();
                let mut q = embed_pair(&input, e);
                for op in &ops {
                    q.apply(op).unwrap();
                }
                let dist = q.max_amplitude_distance(&embed_pair(&want, e)).unwrap();
                assert!(dist <= 1e-12, "{g:?} on |{k}{l}⟩: {dist}");
            }
        }
    }

    /// Two-wire register holding values of `e`; gates on wires (0, 1) only
    /// address qubits below `2r`.
    fn embed_pair(state: &QuditState, values: &Encoding) -> QubitState {
        let q = 2 * values.r;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << q];
        for (digits, amp) in state.nonzero(0.0) {
            let mut idx = 0usize;
            for &v in &digits {
                for bit in encode_value(v, values).unwrap().0 {
                    idx = idx << 1 | usize::from(bit);
                }
            }
            amps[idx] = amp;
        }
        QubitState::from_amplitudes(q, amps).unwrap()
    }

    #[test]
    fn compiled_w_matches_qudit_gate() {
        for n in 2..=5 {
            for kind in [EncodingKind::Binary, EncodingKind::Unary] {
                let e = Encoding::new(kind, n).unwrap();
                for i in 0..n {
                    for j in i + 1..n {
                        for (p, sign) in [(0.5, Sign::Antisymmetric), (0.2, Sign::Symmetric), (1.0 / 3.0, Sign::Antisymmetric)] {
                            check_w_roundtrip(&WGate::new(0, 1, i, j, p, sign).unwrap(), &e);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn forward_flips_undo_themselves() {
        let e = binary(5);
        let g = WGate::new(0, 1, 1, 4, 0.5, Sign::Antisymmetric).unwrap();
        let ops = compile_w(&g, &e).unwrap();
        let forward = &ops[..ops.len() / 2];
        let mut both: Vec<QubitOp> = forward.to_vec();
        both.extend(forward.iter().rev().cloned());
        let width = 2 * e.r;
        for x in 0..1usize << width {
            let start: Vec<bool> = (0..width).rev().map(|k| x >> k & 1 == 1).collect();
            let mut b = start.clone();
            permute_basis(&both, &mut b).unwrap();
            assert_eq!(b, start);
        }
    }

    #[test]
    fn program_shapes() {
        let c2 = build_circuit(2, Variant::Antisym).unwrap();
        let p2 = compile_circuit(&c2, &binary(2)).unwrap();
        assert_eq!(p2.prep, vec![QubitOp::Flip { target: 1 }]);
        assert_eq!(p2.compiled_w, 1);
        let c4 = build_circuit(4, Variant::Antisym).unwrap();
        assert_eq!(compile_circuit(&c4, &binary(4)).unwrap().compiled_w, 14);
        let c5 = build_circuit(5, Variant::Antisym).unwrap();
        let u5 = Encoding::new(EncodingKind::Unary, 5).unwrap();
        let p5 = compile_circuit(&c5, &u5).unwrap();
        assert_eq!((p5.compiled_w, u5.total_qubits()), (30, 25));
        assert!(compile_circuit(&c5, &binary(4)).is_err());
    }

    #[test]
    fn simulate_small_programs() {
        let c2 = build_circuit(2, Variant::Antisym).unwrap();
        let out = simulate_program(&compile_circuit(&c2, &binary(2)).unwrap(), DEFAULT_MAX_QUBITS).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((out.amplitudes()[0b01].re - h).abs() < 1e-15);
        assert!((out.amplitudes()[0b10].re + h).abs() < 1e-15);

        let c4 = build_circuit(4, Variant::Antisym).unwrap();
        let out = simulate_program(&compile_circuit(&c4, &binary(4)).unwrap(), DEFAULT_MAX_QUBITS).unwrap();
        let nz: Vec<_> = out.amplitudes().iter().filter(|a| a.norm() > 1e-12).collect();
        assert_eq!(nz.len(), 24);
        assert!(nz.iter().all(|a| (a.norm() - 24f64.powf(-0.5)).abs() < 1e-12));
        assert!((out.norm() - 1.0).abs() <= 1e-11);
    }

    #[test]
    fn verify_small_programs() {
        let opts = QubitOptions::default();
        let v = verify_compiled(2, EncodingKind::Binary, Variant::Antisym, &opts).unwrap();
        assert!(v.distance <= 1e-12 && v.pass);
        for kind in [EncodingKind::Binary, EncodingKind::Unary] {
            for variant in Variant::ALL {
                let v = verify_compiled(3, kind, variant, &opts).unwrap();
                assert!(v.pass, "{}", v.report_line());
            }
        }
        assert!(matches!(
            verify_compiled(5, EncodingKind::Unary, Variant::Antisym, &opts),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn cost_examples() {
        let r2 = cost_report(2, EncodingKind::Binary).unwrap();
        assert_eq!((r2.compiled_w, r2.mc_ops, r2.total_control_arity), (1, 3, 3));
        assert_eq!(cost_report(4, EncodingKind::Binary).unwrap().compiled_w, 14);
        let u = cost_report(5, EncodingKind::Unary).unwrap();
        assert_eq!((u.compiled_w, u.mc_ops, u.total_control_arity), (30, 210, 630));
        for n in 2..=10 {
            for kind in [EncodingKind::Binary, EncodingKind::Unary] {
                let c = build_circuit(n, Variant::Antisym).unwrap();
                let p = compile_circuit(&c, &Encoding::new(kind, n).unwrap()).unwrap();
                let r = cost_report(n, kind).unwrap();
                assert_eq!(
                    (r.compiled_w, r.mc_ops, r.total_control_arity),
                    (p.compiled_w, p.mc_ops(), p.total_control_arity())
                );
            }
        }
    }

    #[test]
    fn program_text_round_trip() {
        for kind in [EncodingKind::Binary, EncodingKind::Unary] {
            for n in 2..=6 {
                let c = build_circuit(n, Variant::Antisym).unwrap();
                let p = compile_circuit(&c, &Encoding::new(kind, n).unwrap()).unwrap();
                let text = p.to_text();
                let back = QubitProgram::parse(&text).unwrap();
                assert_eq!(back, p);
                assert_eq!(back.to_text(), text);
            }
        }
        let c = build_circuit(5, Variant::Sym).unwrap();
        let e = Encoding::new(EncodingKind::Binary, 5).unwrap();
        let mut streamed = Vec::new();
        assert_eq!(write_compiled(&c, &e, &mut streamed).unwrap(), 30);
        assert_eq!(String::from_utf8(streamed).unwrap(), compile_circuit(&c, &e).unwrap().to_text());
        assert!(QubitProgram::parse("qprog qubits=5 encoding=binary n=2 r=1\n").is_err());
        assert!(QubitProgram::parse("qprog qubits=2 encoding=binary n=2 r=1\nx t=2\n").is_err());
    }
}
