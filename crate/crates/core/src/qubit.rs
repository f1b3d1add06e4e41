//! Qubit-level gate IR and an exact dense simulator for it.
//!
//! Qubit 0 is the most significant bit of the basis index, mirroring the
//! wire order of the qudit register.

use std::fmt::{self, Write as _};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default qubit budget for [`QubitState`] simulation.
pub const DEFAULT_MAX_QUBITS: usize = 22;

/// A control that fires when `qubit` reads `polarity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Control {
    pub qubit: usize,
    pub polarity: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum QubitOp {
    /// Unconditional X.
    Flip { target: usize },
    /// X on `target` when every control matches.
    McFlip { controls: Vec<Control>, target: usize },
    /// `[[cos θ/2, sin θ/2], [−sin θ/2, cos θ/2]]` on `target` (its transpose
    /// when `dagger`) when every control matches.
    McRot {
        controls: Vec<Control>,
        target: usize,
        theta: f64,
        dagger: bool,
    },
}

impl QubitOp {
    pub fn target(&self) -> usize {
        match self {
            QubitOp::Flip { target } | QubitOp::McFlip { target, .. } | QubitOp::McRot { target, .. } => *target,
        }
    }

    pub fn controls(&self) -> &[Control] {
        match self {
            QubitOp::Flip { .. } => &[],
            QubitOp::McFlip { controls, .. } | QubitOp::McRot { controls, .. } => controls,
        }
    }

    pub fn is_multi_controlled(&self) -> bool {
        !matches!(self, QubitOp::Flip { .. })
    }

    fn validate(&self, qubits: usize) -> Result<()> {
        let t = self.target();
        if t >= qubits {
            return Err(Error::bounds("target qubit", t, format!("0..{qubits}")));
        }
        let mut seen = vec![false; qubits];
        seen[t] = true;
        for c in self.controls() {
            if c.qubit >= qubits {
                return Err(Error::bounds("control qubit", c.qubit, format!("0..{qubits}")));
            }
            if seen[c.qubit] {
                return Err(Error::Structural(format!("qubit {} used twice in one op", c.qubit)));
            }
            seen[c.qubit] = true;
        }
        Ok(())
    }
}

/// The 2×2 rotation block, row-major.
pub fn rotation_matrix(theta: f64, dagger: bool) -> [[f64; 2]; 2] {
    let (s, c) = (theta / 2.0).sin_cos();
    if dagger {
        [[c, -s], [s, c]]
    } else {
        [[c, s], [-s, c]]
    }
}

/// `θ` with `cos²(θ/2) = p`.
pub fn theta_for_weight(p: f64) -> f64 {
    2.0 * p.clamp(0.0, 1.0).sqrt().acos()
}

impl fmt::Display for QubitOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn controls(cs: &[Control]) -> String {
            cs.iter()
                .map(|c| format!("{}:{}", c.qubit, u8::from(c.polarity)))
                .collect::<Vec<_>>()
                .join(",")
        }
        match self {
            QubitOp::Flip { target } => write!(f, "x t={target}"),
            QubitOp::McFlip { controls: cs, target } => write!(f, "mcx c={} t={target}", controls(cs)),
            QubitOp::McRot {
                controls: cs,
                target,
                theta,
                dagger,
            } => write!(
                f,
                "mcry c={} t={target} theta={theta:.16e} dag={}",
                controls(cs),
                u8::from(*dagger)
            ),
        }
    }
}

impl QubitOp {
    /// Parses one IR op line (`x`, `mcx` or `mcry`).
    pub fn parse_line(line: &str, lineno: usize) -> Result<Self> {
        let mut fields = line.split_whitespace();
        let kind = fields.next().ok_or_else(|| Error::parse(lineno, "empty op"))?;
        let (mut controls, mut target, mut theta, mut dagger) = (None, None, None, None);
        for field in fields {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::parse(lineno, format!("malformed field `{field}`")))?;
            match key {
                "c" => {
                    let parsed = value
                        .split(',')
                        .filter(|s| !s.is_empty())
                        .map(|spec| {
                            let (q, pol) = spec
                                .split_once(':')
                                .ok_or_else(|| Error::parse(lineno, format!("control `{spec}` needs qubit:polarity")))?;
                            let qubit = q.parse().map_err(|_| Error::parse(lineno, format!("bad control qubit `{q}`")))?;
                            let polarity = match pol {
                                "0" => false,
                                "1" => true,
                                _ => return Err(Error::parse(lineno, format!("bad polarity `{pol}`"))),
                            };
                            Ok(Control { qubit, polarity })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    controls = Some(parsed);
                }
                "t" => target = Some(value.parse().map_err(|_| Error::parse(lineno, format!("bad target `{value}`")))?),
                "theta" => theta = Some(value.parse::<f64>().map_err(|_| Error::parse(lineno, format!("bad theta `{value}`")))?),
                "dag" => {
                    dagger = Some(match value {
                        "0" => false,
                        "1" => true,
                        _ => return Err(Error::parse(lineno, format!("bad dag `{value}`"))),
                    })
                }
                _ => return Err(Error::parse(lineno, format!("unknown field `{key}`"))),
            }
        }
        let target = target.ok_or_else(|| Error::parse(lineno, "missing t="))?;
        match (kind, controls, theta, dagger) {
            ("x", None, None, None) => Ok(QubitOp::Flip { target }),
            ("mcx", Some(controls), None, None) => Ok(QubitOp::McFlip { controls, target }),
            ("mcry", Some(controls), Some(theta), Some(dagger)) => Ok(QubitOp::McRot {
                controls,
                target,
                theta,
                dagger,
            }),
            (kind, ..) => Err(Error::parse(lineno, format!("fields do not fit op kind `{kind}`"))),
        }
    }
}

/// Dense `2^q` statevector.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitState {
    qubits: usize,
    amps: Vec<Complex64>,
}

impl QubitState {
    /// `|0…0⟩` on `qubits` qubits, refusing more than `max_qubits`.
    pub fn zero(qubits: usize, max_qubits: usize) -> Result<Self> {
        if qubits == 0 {
            return Err(Error::Degenerate("register needs at least one qubit".into()));
        }
        if qubits > max_qubits {
            return Err(Error::Resource(format!(
                "{qubits} qubits requested, budget is {max_qubits}"
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(Self { qubits, amps })
    }

    pub fn from_amplitudes(qubits: usize, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != 1 << qubits {
            return Err(Error::Structural(format!("{} amplitudes for {qubits} qubits", amps.len())));
        }
        Ok(Self { qubits, amps })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    fn mask(&self, qubit: usize) -> usize {
        1 << (self.qubits - 1 - qubit)
    }

    pub fn max_amplitude_distance(&self, other: &Self) -> Result<f64> {
        if self.qubits != other.qubits {
            return Err(Error::Structural(format!("{} vs {} qubits", self.qubits, other.qubits)));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Applies `op` exactly, visiting only the amplitudes whose controls fire.
    pub fn apply(&mut self, op: &QubitOp) -> Result<()> {
        op.validate(self.qubits)?;
        let tmask = self.mask(op.target());
        let mut fixed_mask = tmask;
        let mut fixed_value = 0usize;
        for c in op.controls() {
            let m = self.mask(c.qubit);
            fixed_mask |= m;
            if c.polarity {
                fixed_value |= m;
            }
        }
        let free: Vec<usize> = (0..self.qubits)
            .map(|q| self.mask(q))
            .filter(|m| fixed_mask & m == 0)
            .collect();
        let block = match op {
            QubitOp::McRot { theta, dagger, .. } => Some(rotation_matrix(*theta, *dagger)),
            _ => None,
        };
        for r in 0..1usize << free.len() {
            let mut idx0 = fixed_value;
            for (bit, m) in free.iter().enumerate() {
                if r >> bit & 1 == 1 {
                    idx0 |= m;
                }
            }
            let idx1 = idx0 | tmask;
            match block {
                None => self.amps.swap(idx0, idx1),
                Some([[m00, m01], [m10, m11]]) => {
                    let (a0, a1) = (self.amps[idx0], self.amps[idx1]);
                    self.amps[idx0] = a0 * m00 + a1 * m01;
                    self.amps[idx1] = a0 * m10 + a1 * m11;
                }
            }
        }
        Ok(())
    }
}

/// Applies the classical part of `ops` (flips only) to a basis bitstring.
///
/// Returns `None` if a rotation is encountered.
pub fn permute_basis(ops: &[QubitOp], bits: &mut [bool]) -> Option<()> {
    for op in ops {
        let fires = op.controls().iter().all(|c| bits[c.qubit] == c.polarity);
        match op {
            QubitOp::McRot { .. } => return None,
            _ if fires => bits[op.target()] ^= true,
            _ => {}
        }
    }
    Some(())
}

pub(crate) fn write_ops(out: &mut String, ops: &[QubitOp]) {
    for op in ops {
        writeln!(out, "{op}").unwrap();
    }
}
