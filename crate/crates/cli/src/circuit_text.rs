//! Circuit text: one native gate per line.
//!
//! ```text
//! # qubits: 4
//! # two_qubit_gates: 7
//! R 1.57079632679 -1.57079632679 0
//! RZ 0.44 2
//! XX -0.22 0 2
//! ```
//!
//! `R phi theta q`, `RZ theta q` and `XX theta i j`, angles in radians. Angles are
//! printed like C's `%.12g`: 12 significant digits, trailing zeros removed,
//! exponent notation outside `1e-4 ≤ |x| < 1e12`. Lines starting with `#` are
//! comments; the `qubits` and `ancilla` comments are read back by
//! [`parse_circuit`].

use std::fmt::Write as _;

use gqaoa_core::compiler::GateSequence;
use gqaoa_core::simulator::NativeGate;

const SIGNIFICANT_DIGITS: usize = 12;

/// `x` with 12 significant digits in `%g` style.
pub fn format_angle(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        strip_zeros(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{}{:02}", strip_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn format_gate(g: &NativeGate) -> String {
    match *g {
        NativeGate::R { phi, theta, qubit } => format!("R {} {} {qubit}", format_angle(phi), format_angle(theta)),
        NativeGate::Rz { theta, qubit } => format!("RZ {} {qubit}", format_angle(theta)),
        NativeGate::XX { theta, a, b } => format!("XX {} {a} {b}", format_angle(theta)),
    }
}

/// Summary comments followed by the gate lines.
pub fn write_circuit(seq: &GateSequence, deviation: Option<f64>) -> String {
    let mut out = String::new();
    writeln!(out, "# qubits: {}", seq.num_qubits()).unwrap();
    if let Some(a) = seq.ancilla() {
        writeln!(out, "# ancilla: {a}").unwrap();
    }
    writeln!(out, "# gates: {}", seq.len()).unwrap();
    writeln!(out, "# two_qubit_gates: {}", seq.two_qubit_count()).unwrap();
    if let Some(d) = deviation {
        writeln!(out, "# deviation: {d:.3e}").unwrap();
    }
    for g in seq.gates() {
        out.push_str(&format_gate(g));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("circuit line {line}: {message}")]
pub struct CircuitParseError {
    pub line: usize,
    pub message: String,
}

/// Reads circuit text back. Without a `# qubits:` comment the register is sized
/// by the largest qubit index used.
pub fn parse_circuit(text: &str) -> Result<GateSequence, CircuitParseError> {
    let err = |line: usize, message: String| CircuitParseError { line, message };
    let mut declared: Option<usize> = None;
    let mut ancilla: Option<usize> = None;
    let mut gates = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some((key, value)) = comment.split_once(':') {
                let slot = match key.trim() {
                    "qubits" => &mut declared,
                    "ancilla" => &mut ancilla,
                    _ => continue,
                };
                *slot = Some(value.trim().parse().map_err(|_| err(line, format!("bad `{}` value", key.trim())))?);
            }
            continue;
        }
        if trimmed.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_ascii_whitespace().collect();
        let angle = |s: &str| s.parse::<f64>().map_err(|_| err(line, format!("`{s}` is not an angle")));
        let index = |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("`{s}` is not a qubit index")));
        let gate = match tokens[..] {
            ["R", phi, theta, q] => NativeGate::R { phi: angle(phi)?, theta: angle(theta)?, qubit: index(q)? },
            ["RZ", theta, q] => NativeGate::Rz { theta: angle(theta)?, qubit: index(q)? },
            ["XX", theta, a, b] => NativeGate::XX { theta: angle(theta)?, a: index(a)?, b: index(b)? },
            _ => return Err(err(line, format!("unrecognised gate line `{trimmed}`"))),
        };
        gates.push((line, gate));
    }
    let used = gates
        .iter()
        .flat_map(|(_, g)| {
            let (qs, n) = g.qubits();
            qs.into_iter().take(n)
        })
        .max()
        .map_or(0, |m| m + 1);
    let num_qubits = declared.unwrap_or(used.max(ancilla.map_or(0, |a| a + 1)));
    let mut seq = GateSequence::new(num_qubits, ancilla).map_err(|e| err(0, e.to_string()))?;
    for (line, g) in gates {
        seq.push(g).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(seq)
}
