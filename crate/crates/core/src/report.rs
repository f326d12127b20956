//! Serialized results.
//!
//! JSON reports share one envelope:
//!
//! ```json
//! { "command": "quartets", "config": { ... }, "elapsed_ms": 3, "result": ... }
//! ```
//!
//! `elapsed_ms` is omitted when timing is disabled. The shape of `result`
//! depends on `command`:
//!
//! | command                                      | result                                   |
//! |----------------------------------------------|------------------------------------------|
//! | `dot`                                        | `{a, b, value}`                          |
//! | `next`                                       | `{x, value}`                             |
//! | `axioms`                                     | [`AxiomReport`]                          |
//! | `assoc-witness`                              | `{a, b, c}`                              |
//! | `absorb`                                     | `{s, partner}`                           |
//! | `gap`                                        | [`GapWitness`]                           |
//! | `ap-chain`, `path`                           | [`Chain`]                                |
//! | `triangles`, `twin-adjacency`, `lemma`, `bertrand` | [`VerificationReport`]             |
//! | `fiber`                                      | [`FiberReport`]                          |
//! | `quartets`, `cycles`                         | array of [`EqualEdgeCycle`]              |
//!
//! CSV output carries the `result` only, with a header row and LF line
//! endings; list-valued cells are space-separated and tuples within a list
//! are `;`-separated.

use std::fmt::Write as _;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::carrier::GapWitness;
use crate::error::{Error, Result};
use crate::explorer::{Chain, EqualEdgeCycle, FiberReport, VerificationReport};
use crate::loop_ops::{Axiom, AxiomReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
    #[default]
    Text,
}

/// Validated parameters of one CLI run. The thread count is deliberately not
/// serialized so that reports do not depend on it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub subcommand: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_value: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_start: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_run: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_max: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub include_one: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinct: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub output_format: OutputFormat,
    #[serde(skip)]
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DotValue {
    pub a: u64,
    pub b: u64,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NextValue {
    pub x: u64,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partner {
    pub s: u64,
    pub partner: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CommandResult {
    Dot(DotValue),
    Next(NextValue),
    Axioms(AxiomReport),
    AssocWitness(Triple),
    Absorb(Partner),
    Gap(GapWitness),
    Chain(Chain),
    Verification(VerificationReport),
    Fiber(FiberReport),
    Cycles(Vec<EqualEdgeCycle>),
}

impl CommandResult {
    /// Decode a `result` value according to the command that produced it.
    pub fn from_value(command: &str, value: serde_json::Value) -> Result<Self> {
        use serde_json::from_value as de;
        Ok(match command {
            "dot" => CommandResult::Dot(de(value)?),
            "next" => CommandResult::Next(de(value)?),
            "axioms" => CommandResult::Axioms(de(value)?),
            "assoc-witness" => CommandResult::AssocWitness(de(value)?),
            "absorb" => CommandResult::Absorb(de(value)?),
            "gap" => CommandResult::Gap(de(value)?),
            "ap-chain" | "path" => CommandResult::Chain(de(value)?),
            "triangles" | "twin-adjacency" | "lemma" | "bertrand" => {
                CommandResult::Verification(de(value)?)
            }
            "fiber" => CommandResult::Fiber(de(value)?),
            "quartets" | "cycles" => CommandResult::Cycles(de(value)?),
            other => return Err(Error::Report(format!("unknown command {other:?}"))),
        })
    }

    /// Write the result as CSV with a header row.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        match self {
            CommandResult::Dot(d) => {
                w.write_record(["a", "b", "value"])?;
                w.write_record([d.a, d.b, d.value].map(|v| v.to_string()))?;
            }
            CommandResult::Next(n) => {
                w.write_record(["x", "value"])?;
                w.write_record([n.x, n.value].map(|v| v.to_string()))?;
            }
            CommandResult::Axioms(r) => {
                w.write_record(["axiom", "holds", "counterexamples"])?;
                for axiom in Axiom::ALL {
                    let witnesses: Vec<&[u64]> = r
                        .counterexamples
                        .iter()
                        .filter(|c| c.axiom == axiom)
                        .map(|c| c.witness.as_slice())
                        .collect();
                    w.write_record([
                        axiom.name().to_string(),
                        witnesses.is_empty().to_string(),
                        join_tuples(&witnesses),
                    ])?;
                }
            }
            CommandResult::AssocWitness(t) => {
                w.write_record(["a", "b", "c"])?;
                w.write_record([t.a, t.b, t.c].map(|v| v.to_string()))?;
            }
            CommandResult::Absorb(p) => {
                w.write_record(["s", "partner"])?;
                w.write_record([p.s, p.partner].map(|v| v.to_string()))?;
            }
            CommandResult::Gap(g) => {
                w.write_record(["prime", "preceding_composite_run"])?;
                w.write_record([g.prime.get(), g.preceding_composite_run].map(|v| v.to_string()))?;
            }
            CommandResult::Chain(c) => {
                w.write_record([
                    "elements",
                    "edge_value",
                    "is_arithmetic",
                    "common_difference",
                ])?;
                w.write_record([
                    join(&c.values()),
                    c.edge_value.to_string(),
                    c.is_arithmetic.to_string(),
                    c.common_difference
                        .map(|d| d.to_string())
                        .unwrap_or_default(),
                ])?;
            }
            CommandResult::Verification(r) => {
                w.write_record(["statement", "bound", "checked", "violations"])?;
                let tuples: Vec<&[u64]> = r.violations.iter().map(|v| v.as_slice()).collect();
                w.write_record([
                    r.statement.name().to_string(),
                    r.bound.to_string(),
                    r.checked.to_string(),
                    join_tuples(&tuples),
                ])?;
            }
            CommandResult::Fiber(f) => {
                w.write_record(["x", "a", "b"])?;
                for (a, b) in &f.pairs {
                    w.write_record([f.x.get(), *a, *b].map(|v| v.to_string()))?;
                }
            }
            CommandResult::Cycles(cycles) => {
                w.write_record(["edge_value", "vertices"])?;
                for c in cycles {
                    w.write_record([c.edge_value.to_string(), join(&c.values())])?;
                }
            }
        }
        w.flush()?;
        Ok(())
    }

    /// Human-readable rendering; one trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self {
            CommandResult::Dot(d) => writeln!(s, "{}", d.value),
            CommandResult::Next(n) => writeln!(s, "{}", n.value),
            CommandResult::Axioms(r) => {
                let _ = writeln!(s, "bound {} ({} pairs{})", r.bound, r.pairs_checked, if r.sampled { ", sampled" } else { "" });
                for (name, ok) in [
                    ("closure", r.closure_ok),
                    ("commutativity", r.commutativity_ok),
                    ("identity", r.identity_ok),
                    ("self_inverse", r.self_inverse_ok),
                ] {
                    let _ = writeln!(s, "{name:<14} {}", if ok { "ok" } else { "FAILED" });
                }
                for c in &r.counterexamples {
                    let _ = writeln!(s, "counterexample {}: {}", c.axiom.name(), join(&c.witness));
                }
                let d = &r.division;
                writeln!(
                    s,
                    "division: {} rows, {} attainable values, {} uniquely solvable, at most {} solutions",
                    d.rows, d.achievable_values, d.uniquely_solvable, d.max_solutions
                )
            }
            CommandResult::AssocWitness(t) => writeln!(s, "{} {} {}", t.a, t.b, t.c),
            CommandResult::Absorb(p) => writeln!(s, "{}", p.partner),
            CommandResult::Gap(g) => writeln!(s, "{} (preceded by {} non-primes)", g.prime, g.preceding_composite_run),
            CommandResult::Chain(c) => writeln!(s, "{} (edge {})", join(&c.values()), c.edge_value),
            CommandResult::Verification(r) => {
                let _ = writeln!(
                    s,
                    "{}: bound {}, {} checked, {} violations",
                    r.statement.name(),
                    r.bound,
                    r.checked,
                    r.violations.len()
                );
                for v in &r.violations {
                    let _ = writeln!(s, "violation: {}", join(v));
                }
                Ok(())
            }
            CommandResult::Fiber(f) => {
                let _ = writeln!(s, "{} pairs with a • b = {} (bound {})", f.count, f.x, f.bound);
                for (a, b) in &f.pairs {
                    let _ = writeln!(s, "{a} {b}");
                }
                Ok(())
            }
            CommandResult::Cycles(cycles) => {
                let _ = writeln!(s, "{} cycles", cycles.len());
                for c in cycles {
                    let _ = writeln!(s, "{} (edge {})", join(&c.values()), c.edge_value);
                }
                Ok(())
            }
        }
        .expect("writing to a String");
        s
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_tuples(tuples: &[&[u64]]) -> String {
    tuples.iter().map(|t| join(t)).collect::<Vec<_>>().join(";")
}

/// A full JSON report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub config: RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub result: CommandResult,
}

#[derive(Deserialize)]
struct RawReport {
    command: String,
    config: RunConfig,
    #[serde(default)]
    elapsed_ms: Option<u64>,
    result: serde_json::Value,
}

impl Report {
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Report> {
        let raw: RawReport = serde_json::from_str(text)?;
        let result = CommandResult::from_value(&raw.command, raw.result)?;
        Ok(Report {
            command: raw.command,
            config: raw.config,
            elapsed_ms: raw.elapsed_ms,
            result,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::PrimeLoop;
    use crate::explorer;

    #[test]
    fn chain_report_round_trip() {
        let lp = PrimeLoop::new();
        let chain = explorer::find_ap_chain(&lp, 4, 60, Some(41)).unwrap();
        let report = Report {
            command: "ap-chain".into(),
            config: RunConfig {
                subcommand: "ap-chain".into(),
                n: Some(4),
                bound: Some(60),
                min_start: Some(41),
                output_format: OutputFormat::Json,
                ..Default::default()
            },
            elapsed_ms: Some(0),
            result: CommandResult::Chain(chain),
        };
        let json = report.to_json().unwrap();
        assert_eq!(Report::from_json(&json).unwrap(), report);
        assert!(json.contains("\"common_difference\": 6"));
    }

    #[test]
    fn rejects_unknown_command_and_bad_elements() {
        let text = r#"{"command":"nope","config":{"subcommand":"nope","output_format":"json"},"result":1}"#;
        assert!(matches!(Report::from_json(text), Err(Error::Report(_))));
        let text = r#"{"command":"path","config":{"subcommand":"path","output_format":"json"},
            "result":{"elements":[3,4],"edge_value":3,"is_arithmetic":false,"common_difference":null}}"#;
        assert!(Report::from_json(text).is_err());
    }

    #[test]
    fn csv_layout() {
        let lp = PrimeLoop::new();
        let fiber = explorer::fiber_solutions(&lp, 3, 20, false).unwrap();
        let mut buf = Vec::new();
        CommandResult::Fiber(fiber).write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "x,a,b\n3,5,3\n3,7,5\n3,13,11\n3,19,17\n"
        );
    }
}
