//! Dense statevector over `n` qudit wires and the two-qudit `W` rotation.
//!
//! Basis index of digits `(x₀, …, x_{n−1})` is `Σ x_w · d^(n−1−w)`, so wire 0
//! is the most significant digit and kets read left to right.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Sign of the off-diagonal terms of a [`WGate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// `|ij⟩ ↦ √p|ij⟩ − √(1−p)|ji⟩`
    Antisymmetric,
    /// `|ij⟩ ↦ √p|ij⟩ + √(1−p)|ji⟩`
    Symmetric,
}

impl Sign {
    pub fn flipped(self) -> Self {
        match self {
            Sign::Antisymmetric => Sign::Symmetric,
            Sign::Symmetric => Sign::Antisymmetric,
        }
    }

    /// Coefficient of `|ji⟩` in the image of `|ij⟩`, up to the `√(1−p)` factor.
    pub fn factor(self) -> f64 {
        match self {
            Sign::Antisymmetric => -1.0,
            Sign::Symmetric => 1.0,
        }
    }
}

/// Rotation in the `{|ij⟩, |ji⟩}` plane of wires `(wire_a, wire_b)`, identity
/// on every other two-qudit basis state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WGate {
    pub wire_a: usize,
    pub wire_b: usize,
    pub i: usize,
    pub j: usize,
    pub p: f64,
    pub sign: Sign,
}

impl WGate {
    pub fn new(wire_a: usize, wire_b: usize, i: usize, j: usize, p: f64, sign: Sign) -> Result<Self> {
        if wire_a >= wire_b {
            return Err(Error::Structural(format!("wires must satisfy a < b, got ({wire_a}, {wire_b})")));
        }
        if i >= j {
            return Err(Error::Structural(format!("values must satisfy i < j, got ({i}, {j})")));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Structural(format!("weight p = {p} outside [0, 1]")));
        }
        Ok(Self { wire_a, wire_b, i, j, p, sign })
    }

    /// The inverse rotation: same weight, opposite sign.
    pub fn adjoint(&self) -> Self {
        Self {
            sign: self.sign.flipped(),
            ..*self
        }
    }

    /// The 2×2 block acting on `(amp[ij], amp[ji])`, row-major.
    pub fn block(&self) -> [[f64; 2]; 2] {
        let c = self.p.sqrt();
        let s = (1.0 - self.p).max(0.0).sqrt() * self.sign.factor();
        // columns are the images of |ij⟩ and |ji⟩
        [[c, -s], [s, c]]
    }
}

/// Dense amplitudes over `d^n` basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct QuditState {
    n: usize,
    d: usize,
    amps: Vec<Complex64>,
}

impl QuditState {
    pub fn zeros(n: usize, d: usize) -> Result<Self> {
        let len = checked_dim(n, d)?;
        Ok(Self {
            n,
            d,
            amps: vec![Complex64::new(0.0, 0.0); len],
        })
    }

    /// Product state `|digits⟩` with local dimension `d = digits.len()`.
    pub fn basis_state(digits: &[usize]) -> Result<Self> {
        Self::basis_state_with_dim(digits, digits.len())
    }

    pub fn basis_state_with_dim(digits: &[usize], d: usize) -> Result<Self> {
        let mut state = Self::zeros(digits.len(), d)?;
        let idx = state.index_of(digits)?;
        state.amps[idx] = Complex64::new(1.0, 0.0);
        Ok(state)
    }

    pub fn from_amplitudes(n: usize, d: usize, amps: Vec<Complex64>) -> Result<Self> {
        let len = checked_dim(n, d)?;
        if amps.len() != len {
            return Err(Error::Structural(format!(
                "expected {len} amplitudes for n={n}, d={d}, got {}",
                amps.len()
            )));
        }
        Ok(Self { n, d, amps })
    }

    pub fn wires(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn amplitude(&self, digits: &[usize]) -> Result<Complex64> {
        Ok(self.amps[self.index_of(digits)?])
    }

    pub fn set_amplitude(&mut self, digits: &[usize], value: Complex64) -> Result<()> {
        let idx = self.index_of(digits)?;
        self.amps[idx] = value;
        Ok(())
    }

    pub fn index_of(&self, digits: &[usize]) -> Result<usize> {
        if digits.len() != self.n {
            return Err(Error::Structural(format!(
                "expected {} digits, got {}",
                self.n,
                digits.len()
            )));
        }
        digits.iter().try_fold(0usize, |acc, &x| {
            if x >= self.d {
                Err(Error::bounds("digit", x, format!("0..{}", self.d)))
            } else {
                Ok(acc * self.d + x)
            }
        })
    }

    pub fn digits_of(&self, mut index: usize) -> Vec<usize> {
        let mut digits = vec![0; self.n];
        for slot in digits.iter_mut().rev() {
            *slot = index % self.d;
            index /= self.d;
        }
        digits
    }

    fn stride(&self, wire: usize) -> usize {
        self.d.pow((self.n - 1 - wire) as u32)
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Applies `g` in place, touching only the `2·d^(n−2)` amplitudes of its fiber.
    pub fn apply_w(&mut self, g: &WGate) -> Result<()> {
        if g.wire_b >= self.n || g.wire_a >= g.wire_b {
            return Err(Error::Structural(format!(
                "gate wires ({}, {}) invalid for {} wires",
                g.wire_a, g.wire_b, self.n
            )));
        }
        if g.j >= self.d || g.i >= g.j {
            return Err(Error::Structural(format!(
                "gate values ({}, {}) invalid for local dimension {}",
                g.i, g.j, self.d
            )));
        }
        let d = self.d;
        let sa = self.stride(g.wire_a);
        let sb = self.stride(g.wire_b);
        // wires strictly between a and b, and strictly after b
        let mid_span = sa / (sb * d);
        let rest = self.amps.len() / (d * d);
        let [[m00, m01], [m10, m11]] = g.block();
        let off_ij = g.i * sa + g.j * sb;
        let off_ji = g.j * sa + g.i * sb;
        for r in 0..rest {
            let low = r % sb;
            let r1 = r / sb;
            let base = (r1 / mid_span) * sa * d + (r1 % mid_span) * sb * d + low;
            let (x_idx, y_idx) = (base + off_ij, base + off_ji);
            let x = self.amps[x_idx];
            let y = self.amps[y_idx];
            self.amps[x_idx] = x * m00 + y * m01;
            self.amps[y_idx] = x * m10 + y * m11;
        }
        Ok(())
    }

    /// Exchanges the contents of wires `a` and `b`.
    pub fn swap_wires(&self, a: usize, b: usize) -> Result<Self> {
        if a >= self.n || b >= self.n {
            return Err(Error::bounds("wire", a.max(b), format!("0..{}", self.n)));
        }
        if a == b {
            return Err(Error::Degenerate(format!("cannot swap wire {a} with itself")));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (idx, amp) in self.amps.iter().enumerate() {
            let mut digits = self.digits_of(idx);
            digits.swap(a, b);
            out[digits.iter().fold(0, |acc, &x| acc * self.d + x)] = *amp;
        }
        Ok(Self {
            amps: out,
            ..*self
        })
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.d != other.d {
            return Err(Error::Structural(format!(
                "state shapes differ: (n={}, d={}) vs (n={}, d={})",
                self.n, self.d, other.n, other.d
            )));
        }
        Ok(())
    }

    /// `⟨self|other⟩`
    pub fn inner_product(&self, other: &Self) -> Result<Complex64> {
        self.check_shape(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Largest `|a_k − b_k|` over all basis indices.
    pub fn max_amplitude_distance(&self, other: &Self) -> Result<f64> {
        self.check_shape(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Scales every amplitude by `factor`.
    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            amps: self.amps.iter().map(|a| a * factor).collect(),
            ..*self
        }
    }

    /// Iterator over `(digits, amplitude)` with `|amplitude| > tol`.
    pub fn nonzero(&self, tol: f64) -> impl Iterator<Item = (Vec<usize>, Complex64)> + '_ {
        self.amps
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.norm() > tol)
            .map(|(idx, a)| (self.digits_of(idx), *a))
    }

    /// Amplitude dump: a header `n=<n> d=<d> tol=<tol>` then one tab-separated
    /// record `digits  re  im` per amplitude above `tol`.
    pub fn to_dump(&self, tol: f64) -> String {
        let mut out = format!("n={} d={} tol={:e}\n", self.n, self.d, tol);
        for (digits, a) in self.nonzero(tol) {
            let digits: Vec<String> = digits.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}\t{:.17e}\t{:.17e}", digits.join(","), a.re, a.im).unwrap();
        }
        out
    }

    pub fn from_dump(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty dump"))?;
        let mut n = None;
        let mut d = None;
        for field in header.split_whitespace() {
            match field.split_once('=') {
                Some(("n", v)) => n = v.parse::<usize>().ok(),
                Some(("d", v)) => d = v.parse::<usize>().ok(),
                Some(("tol", v)) if v.parse::<f64>().is_ok() => {}
                _ => return Err(Error::parse(1, format!("unexpected header field `{field}`"))),
            }
        }
        let (n, d) = n.zip(d).ok_or_else(|| Error::parse(1, "header needs n= and d="))?;
        let mut state = Self::zeros(n, d)?;
        for (lineno, line) in lines {
            let lineno = lineno + 1;
            let fields: Vec<&str> = line.split('\t').collect();
            let [digits, re, im] = fields[..] else {
                return Err(Error::parse(lineno, "expected 3 tab-separated fields"));
            };
            let digits = digits
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::parse(lineno, e.to_string()))?;
            let re: f64 = re.trim().parse().map_err(|_| Error::parse(lineno, "bad real part"))?;
            let im: f64 = im.trim().parse().map_err(|_| Error::parse(lineno, "bad imaginary part"))?;
            state
                .set_amplitude(&digits, Complex64::new(re, im))
                .map_err(|e| Error::parse(lineno, e.to_string()))?;
        }
        Ok(state)
    }
}

fn checked_dim(n: usize, d: usize) -> Result<usize> {
    if n == 0 || d == 0 {
        return Err(Error::Degenerate(format!("state needs n ≥ 1 and d ≥ 1, got n={n}, d={d}")));
    }
    u32::try_from(n)
        .ok()
        .and_then(|n| d.checked_pow(n))
        .ok_or_else(|| Error::Resource(format!("{d}^{n} amplitudes overflow the address space")))
}
