//! Command-line front end shared by the `laughlin` binary and its tests.
//!
//! Exit codes: 0 success, 1 a verification that ran but failed, 2 usage or
//! domain error, 3 I/O error, 4 resource guard.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{binomial_entropy, bipartite_entropy, coordinate_check, entropy_trace};
use crate::circuit::{build_circuit, closed_form_counts, optimality_check, Circuit, Variant};
use crate::compiler::{cost_report, verify_compiled, write_compiled, Encoding, EncodingKind, QubitOptions};
use crate::error::Error;
use crate::oracle::{run, verify, SimOptions, DEFAULT_MAX_AMPLITUDES};
use crate::perm::reversal_word_length;
use crate::qubit::DEFAULT_MAX_QUBITS;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

/// Amplitudes at or below this are left out of dumps.
const DUMP_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "laughlin", version, about = "Build, simulate, analyse and compile the filling-one Laughlin circuit")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Circuit variant: antisym, sym or sym_reversed.
    #[arg(long, global = true, default_value = "antisym")]
    pub variant: Variant,
    /// Qubit encoding: binary or unary.
    #[arg(long, global = true, default_value = "binary")]
    pub encoding: EncodingKind,
    /// Emit JSON records instead of key=value lines.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for stochastic checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Override the pass/fail tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Output file for circuits, dumps and IR.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest qudit statevector simulated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_AMPLITUDES)]
    pub max_amplitudes: usize,
    /// Largest qubit register simulated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_QUBITS)]
    pub max_qubits: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the circuit text for n particles.
    Build {
        #[arg(short)]
        n: usize,
    },
    /// Simulate a circuit and dump its nonzero amplitudes.
    Simulate {
        #[arg(short, required_unless_present = "circuit")]
        n: Option<usize>,
        /// Read the circuit from a file instead of building it.
        #[arg(long)]
        circuit: Option<PathBuf>,
    },
    /// Compare the circuit output with the permutation-sum reference.
    Verify {
        #[arg(short)]
        n: usize,
    },
    /// Entanglement entropy of the first k wires.
    Entropy {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        /// Print the entropy after every gate.
        #[arg(long)]
        trace: bool,
    },
    /// Compare the output in particle coordinates with the Vandermonde form.
    Coordcheck {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// Lower the circuit to qubit IR.
    Compile {
        #[arg(short)]
        n: usize,
    },
    /// Simulate the compiled program and compare with the encoded reference.
    Qverify {
        #[arg(short)]
        n: usize,
    },
    /// Gate counts from built circuits and closed forms.
    Counts {
        #[arg(long = "n-max", short)]
        n_max: usize,
    },
    /// Compare the gate count with the reduced-word lower bound.
    Optimality {
        #[arg(short)]
        n: usize,
    },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) => EXIT_IO,
        Error::Resource(_) => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(if code == EXIT_OK { stdout as &mut dyn Write } else { stderr as &mut dyn Write }, "{e}");
            code
        }
    }
}

pub fn execute(cli: &Cli, stdout: &mut impl Write, stderr: &mut impl Write) -> i32 {
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            exit_code(&err)
        }
    }
}

/// One report record, rendered as `key=value` pairs or as a JSON object.
struct Record(Vec<(&'static str, serde_json::Value)>);

impl Record {
    fn new() -> Self {
        Record(Vec::new())
    }

    fn field(mut self, key: &'static str, value: impl Serialize) -> Self {
        self.0.push((key, serde_json::to_value(value).expect("plain values serialize")));
        self
    }

    fn emit(&self, json: bool, w: &mut impl Write) -> std::io::Result<()> {
        if json {
            let map: serde_json::Map<String, serde_json::Value> =
                self.0.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            writeln!(w, "{}", serde_json::Value::Object(map))
        } else {
            let parts: Vec<String> = self
                .0
                .iter()
                .map(|(k, v)| match v {
                    serde_json::Value::String(s) => format!("{k}={s}"),
                    serde_json::Value::Null => format!("{k}=-"),
                    other => format!("{k}={other}"),
                })
                .collect();
            writeln!(w, "{}", parts.join(" "))
        }
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Error> {
    Ok(BufWriter::new(File::create(path).map_err(|e| with_path(e, path))?))
}

fn with_path(e: std::io::Error, path: &Path) -> Error {
    Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

fn write_payload(path: Option<&Path>, text: &str, stdout: &mut impl Write) -> Result<(), Error> {
    match path {
        Some(p) => {
            let mut f = create(p)?;
            f.write_all(text.as_bytes())?;
            f.flush()?;
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn dispatch(cli: &Cli, stdout: &mut impl Write) -> Result<i32, Error> {
    let g = &cli.global;
    let sim = SimOptions {
        max_amplitudes: g.max_amplitudes,
    };
    let qopts = QubitOptions {
        max_qubits: g.max_qubits,
    };
    let out = g.out.as_deref();

    match &cli.command {
        Command::Build { n } => {
            let c = build_circuit(*n, g.variant)?;
            write_payload(out, &c.to_text(), stdout)?;
            if let Some(path) = out {
                Record::new()
                    .field("n", n)
                    .field("variant", g.variant.as_str())
                    .field("v_gates", c.gates().len())
                    .field("path", path.display().to_string())
                    .emit(g.json, stdout)?;
            }
            Ok(EXIT_OK)
        }
        Command::Simulate { n, circuit } => {
            let c = match circuit {
                Some(path) => Circuit::parse(&std::fs::read_to_string(path).map_err(|e| with_path(e, path))?)?,
                None => build_circuit(n.expect("clap requires n without --circuit"), g.variant)?,
            };
            let state = run(&c, false, &sim)?.final_state;
            write_payload(out, &state.to_dump(g.tol.unwrap_or(DUMP_TOLERANCE)), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify { n } => {
            let mut v = verify(*n, g.variant, &sim)?;
            if let Some(tol) = g.tol {
                v.tolerance = tol;
                v.pass = v.distance <= tol;
            }
            Record::new()
                .field("n", v.n)
                .field("variant", &v.variant)
                .field("distance", v.distance)
                .field("tolerance", v.tolerance)
                .field("pass", v.pass)
                .emit(g.json, stdout)?;
            Ok(if v.pass { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Entropy { n, k, trace } => {
            if *n < 2 || *k < 1 || k >= n {
                return Err(Error::bounds("k", *k, format!("1..={}", n.saturating_sub(1))));
            }
            let c = build_circuit(*n, g.variant)?;
            let expected = binomial_entropy(*n, *k)?;
            if *trace {
                let t = entropy_trace(&c, *k, &sim)?;
                for step in &t.steps {
                    if g.json {
                        writeln!(stdout, "{}", json!(step))?;
                    } else {
                        writeln!(stdout, "{}", step.line())?;
                    }
                }
            }
            let state = run(&c, false, &sim)?.final_state;
            let block: Vec<usize> = (0..*k).collect();
            let s = bipartite_entropy(&state, &block)?;
            Record::new()
                .field("n", n)
                .field("k", k)
                .field("variant", g.variant.as_str())
                .field("S", s)
                .field("expected", expected)
                .field("diff", (s - expected).abs())
                .emit(g.json, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Coordcheck { n, samples } => {
            let c = build_circuit(*n, g.variant)?;
            let state = run(&c, false, &sim)?.final_state;
            let mut r = coordinate_check(&state, *samples, g.seed)?;
            if let Some(tol) = g.tol {
                r.tolerance = tol;
                r.pass = r.max_relative_spread <= tol;
            }
            Record::new()
                .field("n", n)
                .field("variant", g.variant.as_str())
                .field("samples", samples)
                .field("seed", r.seed)
                .field("spread", r.max_relative_spread)
                .field("tolerance", r.tolerance)
                .field("pass", r.pass)
                .emit(g.json, stdout)?;
            Ok(if r.pass { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Compile { n } => {
            let c = build_circuit(*n, g.variant)?;
            let e = Encoding::new(g.encoding, *n)?;
            match out {
                Some(path) => {
                    let mut f = create(path)?;
                    let blocks = write_compiled(&c, &e, &mut f)?;
                    f.flush()?;
                    let cost = cost_report(*n, g.encoding)?;
                    Record::new()
                        .field("n", n)
                        .field("encoding", g.encoding.as_str())
                        .field("variant", g.variant.as_str())
                        .field("qubits", e.total_qubits())
                        .field("compiled_w", blocks)
                        .field("mc_ops", cost.mc_ops)
                        .field("total_control_arity", cost.total_control_arity)
                        .field("path", path.display().to_string())
                        .emit(g.json, stdout)?;
                }
                None => {
                    write_compiled(&c, &e, stdout)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Qverify { n } => {
            let mut v = verify_compiled(*n, g.encoding, g.variant, &qopts)?;
            if let Some(tol) = g.tol {
                v.tolerance = tol;
                v.pass = v.distance <= tol;
            }
            Record::new()
                .field("n", v.n)
                .field("encoding", v.encoding.as_str())
                .field("variant", &v.variant)
                .field("qubits", v.qubits)
                .field("distance", v.distance)
                .field("tolerance", v.tolerance)
                .field("pass", v.pass)
                .emit(g.json, stdout)?;
            Ok(if v.pass { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Counts { n_max } => {
            if *n_max < 2 {
                return Err(Error::bounds("n-max", *n_max, ">= 2"));
            }
            let mut all_match = true;
            for n in 2..=*n_max {
                let closed = closed_form_counts(n)?;
                let built = if n <= 10 {
                    Some(build_circuit(n, g.variant)?.counts())
                } else {
                    None
                };
                let matches = built.is_none_or(|b| b == closed);
                all_match &= matches;
                Record::new()
                    .field("n", n)
                    .field("v_gates", built.map(|b| b.v_gates))
                    .field("w_factors", built.map(|b| b.w_factors))
                    .field("depth", built.map(|b| b.depth))
                    .field("closed_v_gates", closed.v_gates)
                    .field("closed_w_factors", closed.w_factors)
                    .field("closed_depth", closed.depth)
                    .field("match", matches)
                    .emit(g.json, stdout)?;
            }
            Ok(if all_match { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Optimality { n } => {
            let optimal = optimality_check(*n)?;
            Record::new()
                .field("n", n)
                .field("reduced_word_length", reversal_word_length(*n))
                .field("v_gates", build_circuit(*n, Variant::Antisym)?.gates().len())
                .field("optimal", optimal)
                .emit(g.json, stdout)?;
            Ok(if optimal { EXIT_OK } else { EXIT_FAILED })
        }
    }
}
