//! The recursive V/W circuit that antisymmetrizes `|0, 1, …, n−1⟩`.
//!
//! Stage `s` (2 ≤ s ≤ n) brings value `s−1` into the superposition by walking
//! it left from wire `s−1` to wire 0. The stage's gates run in the order
//! `V_{s−1}, V_{s−2}, …, V_1`, and `V_k` acts on wires `(k−1, k)` with the
//! common weight `1/(k+1)`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::perm::reversal_word_length;
use crate::qudit::{Sign, WGate};

/// Largest particle count accepted by [`build_circuit`].
pub const MAX_CIRCUIT_N: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Antisymmetrizing circuit; prepares the Laughlin state.
    Antisym,
    /// Same structure with the `W` sign flipped; prepares the symmetric state.
    Sym,
    /// Reversed input `|n−1, …, 0⟩` with every `W_{ij}` relabelled to
    /// `W_{n−1−i, n−1−j}`; also prepares a symmetric state.
    SymReversed,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Antisym, Variant::Sym, Variant::SymReversed];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Antisym => "antisym",
            Variant::Sym => "sym",
            Variant::SymReversed => "sym_reversed",
        }
    }

    /// Exchange symmetry of the prepared state.
    pub fn target_sign(self) -> Sign {
        match self {
            Variant::Antisym => Sign::Antisymmetric,
            Variant::Sym | Variant::SymReversed => Sign::Symmetric,
        }
    }

    fn factor_sign(self) -> Sign {
        match self {
            Variant::Antisym | Variant::SymReversed => Sign::Antisymmetric,
            Variant::Sym => Sign::Symmetric,
        }
    }

    /// Product-state digits the circuit starts from.
    pub fn input(self, n: usize) -> Vec<usize> {
        match self {
            Variant::SymReversed => (0..n).rev().collect(),
            _ => (0..n).collect(),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| Error::Degenerate(format!("unknown variant `{s}` (antisym, sym, sym_reversed)")))
    }
}

/// Adjacent-wire gate `V_k^{[s]}`: the commuting product of
/// `W_{i, s−1}(1/(k+1))` for `i = 0 … s−2`, acting on wires `(k−1, k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VGate {
    pub stage: usize,
    pub k: usize,
    pub weight: Ratio<u64>,
    pub factors: Vec<WGate>,
}

impl VGate {
    fn new(n: usize, stage: usize, k: usize, variant: Variant) -> Result<Self> {
        if !(2..=n).contains(&stage) {
            return Err(Error::bounds("stage", stage, format!("2..={n}")));
        }
        if !(1..stage).contains(&k) {
            return Err(Error::bounds("k", k, format!("1..={}", stage - 1)));
        }
        let weight = Ratio::new(1, k as u64 + 1);
        let p = 1.0 / (k as f64 + 1.0);
        let new_value = stage - 1;
        let factors = (0..new_value)
            .map(|i| {
                let (lo, hi) = match variant {
                    // W_{n−1−i, n−1−j}, stored with its values in ascending order
                    Variant::SymReversed => (n - 1 - new_value, n - 1 - i),
                    _ => (i, new_value),
                };
                WGate::new(k - 1, k, lo, hi, p, variant.factor_sign())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            stage,
            k,
            weight,
            factors,
        })
    }

    pub fn wires(&self) -> (usize, usize) {
        (self.k - 1, self.k)
    }

    pub fn p(&self) -> f64 {
        *self.weight.numer() as f64 / *self.weight.denom() as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n: usize,
    variant: Variant,
    input: Vec<usize>,
    gates: Vec<VGate>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct GateCounts {
    pub v_gates: usize,
    pub w_factors: usize,
    pub depth: usize,
}

/// Builds `U[n]` for the chosen variant, gates in execution order.
pub fn build_circuit(n: usize, variant: Variant) -> Result<Circuit> {
    if !(2..=MAX_CIRCUIT_N).contains(&n) {
        return Err(Error::bounds("n", n, format!("2..={MAX_CIRCUIT_N}")));
    }
    let mut gates = Vec::with_capacity(reversal_word_length(n));
    for stage in 2..=n {
        for k in (1..stage).rev() {
            gates.push(VGate::new(n, stage, k, variant)?);
        }
    }
    Ok(Circuit {
        n,
        variant,
        input: variant.input(n),
        gates,
    })
}

impl Circuit {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn input(&self) -> &[usize] {
        &self.input
    }

    pub fn gates(&self) -> &[VGate] {
        &self.gates
    }

    /// All `W` factors in execution order.
    pub fn w_factors(&self) -> impl Iterator<Item = &WGate> {
        self.gates.iter().flat_map(|g| g.factors.iter())
    }

    /// ASAP start slot of each gate; gates on disjoint wire pairs may share a slot.
    pub fn schedule(&self) -> Vec<usize> {
        let mut ready = vec![0usize; self.n];
        self.gates
            .iter()
            .map(|g| {
                let (a, b) = g.wires();
                let slot = ready[a].max(ready[b]);
                ready[a] = slot + 1;
                ready[b] = slot + 1;
                slot
            })
            .collect()
    }

    pub fn counts(&self) -> GateCounts {
        GateCounts {
            v_gates: self.gates.len(),
            w_factors: self.gates.iter().map(|g| g.factors.len()).sum(),
            depth: self.schedule().iter().map(|s| s + 1).max().unwrap_or(0),
        }
    }

    /// Circuit text: header, input line, then one `v` line per gate.
    pub fn to_text(&self) -> String {
        let mut out = format!("laughlin n={} variant={}\ninput", self.n, self.variant);
        for d in &self.input {
            out.push_str(&format!(" {d}"));
        }
        out.push('\n');
        for g in &self.gates {
            let (a, b) = g.wires();
            out.push_str(&format!(
                "v stage={} k={} wires={a},{b} p={}/{}\n",
                g.stage,
                g.k,
                g.weight.numer(),
                g.weight.denom()
            ));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (ln, header) = lines.next().ok_or_else(|| Error::parse(1, "empty circuit"))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("laughlin") {
            return Err(Error::parse(ln, "expected `laughlin` header"));
        }
        let mut n = None;
        let mut variant = None;
        for f in fields {
            match f.split_once('=') {
                Some(("n", v)) => n = Some(parse_num(ln, v)?),
                Some(("variant", v)) => variant = Some(v.parse::<Variant>().map_err(|e| Error::parse(ln, e.to_string()))?),
                _ => return Err(Error::parse(ln, format!("unexpected header field `{f}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::parse(ln, "missing n="))?;
        let variant = variant.ok_or_else(|| Error::parse(ln, "missing variant="))?;
        if !(2..=MAX_CIRCUIT_N).contains(&n) {
            return Err(Error::parse(ln, format!("n = {n} out of range 2..={MAX_CIRCUIT_N}")));
        }

        let (ln, input_line) = lines.next().ok_or_else(|| Error::parse(ln + 1, "missing input line"))?;
        let mut fields = input_line.split_whitespace();
        if fields.next() != Some("input") {
            return Err(Error::parse(ln, "expected `input` line"));
        }
        let input = fields.map(|f| parse_num(ln, f)).collect::<Result<Vec<_>>>()?;
        if input != variant.input(n) {
            return Err(Error::parse(ln, format!("input {input:?} does not match variant {variant}")));
        }

        let mut gates = Vec::new();
        for (ln, line) in lines {
            let mut fields = line.split_whitespace();
            if fields.next() != Some("v") {
                return Err(Error::parse(ln, "expected a `v` gate line"));
            }
            let (mut stage, mut k, mut wires, mut p) = (None, None, None, None);
            for f in fields {
                match f.split_once('=') {
                    Some(("stage", v)) => stage = Some(parse_num(ln, v)?),
                    Some(("k", v)) => k = Some(parse_num(ln, v)?),
                    Some(("wires", v)) => {
                        let (a, b) = v.split_once(',').ok_or_else(|| Error::parse(ln, "wires must be `a,b`"))?;
                        wires = Some((parse_num(ln, a)?, parse_num(ln, b)?));
                    }
                    Some(("p", v)) => {
                        let (num, den) = v.split_once('/').ok_or_else(|| Error::parse(ln, "p must be a fraction"))?;
                        let (num, den) = (parse_num(ln, num)? as u64, parse_num(ln, den)? as u64);
                        if den == 0 {
                            return Err(Error::parse(ln, "zero denominator"));
                        }
                        p = Some(Ratio::new(num, den));
                    }
                    _ => return Err(Error::parse(ln, format!("unexpected gate field `{f}`"))),
                }
            }
            let (Some(stage), Some(k), Some(wires), Some(p)) = (stage, k, wires, p) else {
                return Err(Error::parse(ln, "gate needs stage=, k=, wires= and p="));
            };
            let gate = VGate::new(n, stage, k, variant).map_err(|e| Error::parse(ln, e.to_string()))?;
            if wires != gate.wires() {
                return Err(Error::parse(ln, format!("wires {wires:?} do not match k={k}")));
            }
            if p != gate.weight {
                return Err(Error::parse(ln, format!("weight {p} does not match 1/{}", k + 1)));
            }
            gates.push(gate);
        }
        Ok(Circuit {
            n,
            variant,
            input,
            gates,
        })
    }
}

fn parse_num(line: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::parse(line, format!("`{s}` is not a non-negative integer")))
}

/// `N(n) = n(n−1)/2`, `n(n−1)(2n−1)/6` W factors and `D(n) = 2n−3`.
pub fn closed_form_counts(n: usize) -> Result<GateCounts> {
    if n < 2 {
        return Err(Error::bounds("n", n, "n >= 2"));
    }
    Ok(GateCounts {
        v_gates: n * (n - 1) / 2,
        w_factors: n * (n - 1) * (2 * n - 1) / 6,
        depth: 2 * n - 3,
    })
}

/// Whether the circuit's gate count meets the reduced-word lower bound exactly.
pub fn optimality_check(n: usize) -> Result<bool> {
    if !(2..=10).contains(&n) {
        return Err(Error::bounds("n", n, "2..=10"));
    }
    let bound = crate::perm::Permutation::maximum(n).canonical_reduced_decomposition().len();
    Ok(bound == build_circuit(n, Variant::Antisym)?.counts().v_gates)
}
